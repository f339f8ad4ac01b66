"""
Integer primitives shared by every service: primality, factorization,
exact square roots and residue classification.

All inputs live in the unsigned 64-bit range; Python integers never overflow,
so the range is enforced at the boundary instead of on every product.
"""
import logging
from collections import Counter
from math import gcd, isqrt
from typing import List, Optional

from pythforms.core.errors import EvenInput, NotPrime
from pythforms.models.factorization import Factorization
from pythforms.utils.validators import require_odd, require_positive, require_u64

logger = logging.getLogger(__name__)

# Strong-pseudoprime bases that decide primality for every n < 2^64
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)
TRIAL_LIMIT = 1_000_000


def _strong_probable_prime(n: int, base: int, d: int, s: int) -> bool:
    x = pow(base, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """Deterministic primality for 0 <= n < 2^64."""
    require_u64(n)
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    if n < _SMALL_PRIMES[-1] ** 2:
        return True

    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    return all(_strong_probable_prime(n, base, d, s) for base in _MR_BASES)


def _brent_rho(n: int) -> int:
    """A nontrivial factor of the odd composite n (Brent's variant of Pollard rho)."""
    for c in range(1, n):
        y, r, q, g = 2, 1, 1, 1
        m = 128
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            # Backtrack one step at a time from the last saved point
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
    raise RuntimeError(f"rho failed to split {n}")


def _split(n: int, found: Counter) -> None:
    if n == 1:
        return
    if is_prime(n):
        found[n] += 1
        return
    root = isqrt(n)
    if root * root == n:
        _split(root, found)
        _split(root, found)
        return
    factor = _brent_rho(n)
    _split(factor, found)
    _split(n // factor, found)


def factorize(n: int) -> Factorization:
    """
    Canonical factorization of a positive odd integer.

    Trial division by odd candidates up to 10^6, then Brent-rho on any
    composite cofactor left over.
    """
    require_positive(require_u64(n), "n")
    if n % 2 == 0:
        raise EvenInput(n)

    found: Counter = Counter()
    m = n
    d = 3
    while d <= TRIAL_LIMIT and d * d <= m:
        while m % d == 0:
            found[d] += 1
            m //= d
        d += 2
    if m > 1:
        if d * d > m or is_prime(m):
            found[m] += 1
        else:
            logger.debug(f"Falling back to rho for cofactor {m} of {n}")
            _split(m, found)

    return Factorization(n=n, factors=tuple(sorted(found.items())))


def sqrt_exact(n: int) -> Optional[int]:
    """r with r*r == n, or None when n is not a perfect square."""
    if n < 0:
        return None
    r = isqrt(n)
    return r if r * r == n else None


def mod8_class(n: int) -> int:
    return require_odd(n) % 8


def is_qr_mod_p(c: int, p: int) -> bool:
    """
    Euler's criterion: c is a nonzero square modulo the odd prime p.

    c ≡ 0 (mod p) is not counted as a residue, matching exhaustive squaring
    of 1..p-1.
    """
    if p % 2 == 0:
        raise EvenInput(p)
    if not is_prime(p):
        raise NotPrime(p)
    c %= p
    if c == 0:
        return False
    return pow(c, (p - 1) // 2, p) == 1


def squares_mod(p: int) -> List[int]:
    """Sorted nonzero squares modulo p, by exhaustive squaring."""
    return sorted({x * x % p for x in range(1, p)})
