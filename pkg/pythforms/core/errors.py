class PythformsError(ValueError):
    """Base class for every rejected input or failed internal cross-check"""


class EvenInput(PythformsError):
    def __init__(self, n: int):
        self.n = n
        super().__init__(f"even input: {n}")


class OutOfRange(PythformsError):
    pass


class NotPrime(PythformsError):
    def __init__(self, n: int):
        self.n = n
        super().__init__(f"not prime: {n}")


class InvalidParams(PythformsError):
    """A generator pair breaks one of the Pythagorean constraints"""

    def __init__(self, a: int, b: int, reason: str):
        self.a = a
        self.b = b
        super().__init__(f"invalid params ({a}, {b}): {reason}")


class OrderViolation(InvalidParams):
    def __init__(self, a: int, b: int):
        super().__init__(a, b, "a > b > 0 required")


class NotCoprime(InvalidParams):
    def __init__(self, a: int, b: int):
        super().__init__(a, b, "gcd(a, b) must be 1")


class SameParity(InvalidParams):
    def __init__(self, a: int, b: int):
        super().__init__(a, b, "a and b must have opposite parity")


class NotInSet(PythformsError):
    pass


class KindMismatch(PythformsError):
    pass


class NotNormalizable(PythformsError):
    pass


class InvariantViolation(PythformsError):
    pass


class UnknownCheck(PythformsError):
    def __init__(self, name: str, known):
        self.name = name
        super().__init__(f"unknown check: {name} (known: {', '.join(sorted(known))})")
