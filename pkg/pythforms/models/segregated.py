from enum import Enum
from math import gcd
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator


class SegregatedKind(str, Enum):
    F3 = "f3"  # s² + 2t²,        p ≡ 3 (mod 8)
    F5 = "f5"  # s² + 4t²,        p ≡ 5 (mod 8)
    F7 = "f7"  # s² + 4st + 2t²,  p ≡ 7 (mod 8)
    F1A = "f1a"  # s² + 8t²,      p ≡ 1 (mod 8)
    F1B = "f1b"  # s² + 16t²,     p ≡ 1 (mod 8)
    F1C = "f1c"  # s² + 8st + 8t², p ≡ 1 (mod 8)

    def value_of(self, s: int, t: int) -> int:
        alpha, beta, gamma = _COEFFICIENTS[self]
        return alpha * s * s + beta * s * t + gamma * t * t

    @property
    def coefficients(self):
        return _COEFFICIENTS[self]

    @property
    def residue(self) -> int:
        return _RESIDUES[self]

    @property
    def odd_t_only(self) -> bool:
        return self.residue != 1

    def render(self, s: int, t: int) -> str:
        """'23 = 3^2 + 4·3·1 + 2·1^2' style rendering."""
        _, beta, gamma = _COEFFICIENTS[self]
        terms = [f"{s}²"]
        if beta:
            terms.append(f"{beta}·{s}·{t}")
        terms.append(f"{gamma}·{t}²")
        return f"{self.value_of(s, t)} = " + " + ".join(terms)


_COEFFICIENTS = {
    SegregatedKind.F3: (1, 0, 2),
    SegregatedKind.F5: (1, 0, 4),
    SegregatedKind.F7: (1, 4, 2),
    SegregatedKind.F1A: (1, 0, 8),
    SegregatedKind.F1B: (1, 0, 16),
    SegregatedKind.F1C: (1, 8, 8),
}

_RESIDUES = {
    SegregatedKind.F3: 3,
    SegregatedKind.F5: 5,
    SegregatedKind.F7: 7,
    SegregatedKind.F1A: 1,
    SegregatedKind.F1B: 1,
    SegregatedKind.F1C: 1,
}


class SegregatedRep(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: SegregatedKind
    s: int = Field(..., gt=0)
    t: int = Field(..., gt=0)

    @model_validator(mode="after")
    def _parity_constraints(self) -> "SegregatedRep":
        if self.s % 2 == 0:
            raise ValueError(f"s must be odd, got {self.s}")
        if gcd(self.s, self.t) != 1:
            raise ValueError(f"gcd(s, t) must be 1, got ({self.s}, {self.t})")
        if self.kind.odd_t_only and self.t % 2 == 0:
            raise ValueError(f"t must be odd for {self.kind.value}, got {self.t}")
        return self

    @property
    def value(self) -> int:
        return self.kind.value_of(self.s, self.t)


class SegregatedSet(str, Enum):
    S1 = "S1"
    S3 = "S3"
    S5 = "S5"
    S7 = "S7"

    @property
    def residue(self) -> int:
        return int(self.value[1:])


class SegregatedMembership(BaseModel):
    """
    S1/S3/S5/S7 membership of an odd integer.

    predicted_residue follows the exponent-sum parity rule: 1 when the sum of
    exponents is even, otherwise the class residue. It is None outside every set.
    """

    model_config = ConfigDict(frozen=True)

    n: int
    set: Optional[SegregatedSet] = None
    exponent_sum: int
    residue: int
    predicted_residue: Optional[int] = None


class ResiduePrediction(BaseModel):
    model_config = ConfigDict(frozen=True)

    n17: int
    n13: int
    n15: int

    def as_tuple(self):
        return (self.n17, self.n13, self.n15)
