from math import gcd

from pythforms.core.errors import (
    EvenInput,
    NotCoprime,
    OrderViolation,
    OutOfRange,
    SameParity,
)

U64_LIMIT = 1 << 64


def validate_u64(n: int) -> bool:
    """Check that n fits the unsigned 64-bit range every sweep works in."""
    return 0 <= n < U64_LIMIT


def require_u64(n: int) -> int:
    if not validate_u64(n):
        raise OutOfRange(f"outside the unsigned 64-bit range: {n}")
    return n


def require_odd(n: int, minimum: int = 3) -> int:
    """Reject even integers first, then odd ones below `minimum`."""
    if n % 2 == 0:
        raise EvenInput(n)
    if n < minimum:
        raise OutOfRange(f"odd input below {minimum}: {n}")
    return require_u64(n)


def require_positive(value: int, name: str) -> int:
    if value < 1:
        raise OutOfRange(f"{name} must be positive, got {value}")
    return value


def check_params(a: int, b: int) -> None:
    """
    Raise the first broken Pythagorean constraint on a generator pair.

    Order is checked first, then coprimality, then parity: (9, 3) reports
    NotCoprime even though both entries are odd.
    """
    if not a > b > 0:
        raise OrderViolation(a, b)
    if gcd(a, b) != 1:
        raise NotCoprime(a, b)
    if (a - b) % 2 == 0:
        raise SameParity(a, b)
