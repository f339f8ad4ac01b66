from math import prod
from typing import Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator


class Factorization(BaseModel):
    """Canonical prime-power decomposition of a positive odd integer"""

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1, description="The value factored")
    factors: Tuple[Tuple[int, int], ...] = Field(
        default=(), description="(prime, exponent) pairs, ascending by prime"
    )

    @model_validator(mode="after")
    def _check_product(self) -> "Factorization":
        primes = [p for p, _ in self.factors]
        if primes != sorted(set(primes)):
            raise ValueError("primes must be strictly increasing")
        if any(k < 1 for _, k in self.factors):
            raise ValueError("exponents must be positive")
        if prod(p**k for p, k in self.factors) != self.n:
            raise ValueError(f"factors do not multiply to {self.n}")
        return self

    @property
    def distinct_primes(self) -> int:
        return len(self.factors)

    @property
    def exponent_sum(self) -> int:
        return sum(k for _, k in self.factors)

    @property
    def primes(self) -> Tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def is_prime(self) -> bool:
        return len(self.factors) == 1 and self.factors[0][1] == 1

    def annotation(self) -> str:
        """Expanded product with repeated primes, e.g. '3·3·3' for 27."""
        return "·".join(str(p) for p, k in self.factors for _ in range(k))
