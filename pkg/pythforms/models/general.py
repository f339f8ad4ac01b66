from typing import List, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator


class GeneralForm(BaseModel):
    """F(a, b, k, l) = (a + lb)² - kb² with (l + 1)² >= k"""

    model_config = ConfigDict(frozen=True)

    k: int = Field(..., gt=0)
    l: int = Field(..., gt=0)  # noqa: E741

    @model_validator(mode="after")
    def _positivity(self) -> "GeneralForm":
        if (self.l + 1) ** 2 < self.k:
            raise ValueError(f"(l + 1)² >= k required, got k={self.k}, l={self.l}")
        return self

    @property
    def slack(self) -> int:
        """(l + 1)² - k, the coefficient bounding values from below."""
        return (self.l + 1) ** 2 - self.k

    def value_of(self, a: int, b: int) -> int:
        return (a + self.l * b) ** 2 - self.k * b * b

    def label(self) -> str:
        return f"(a+{self.l}b)^2-{self.k}b^2"


class UniquenessReport(BaseModel):
    k: int
    l: int  # noqa: E741
    prime_bound: int
    primes_checked: int
    primes_represented: int
    counterexamples: List[Tuple[int, List[Tuple[int, int]]]] = Field(default_factory=list)

    @property
    def unique(self) -> bool:
        return not self.counterexamples
