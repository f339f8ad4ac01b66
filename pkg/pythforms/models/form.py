from enum import Enum
from math import gcd
from typing import FrozenSet, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from pythforms.utils.validators import check_params


class FormKind(str, Enum):
    TWO_SQUARES = "two-squares"  # a² + b²
    MINUS_TWO = "minus-two"  # (a + b)² - 2b²
    PLUS_TWO = "plus-two"  # (a - b)² + 2b²

    def value_of(self, a: int, b: int) -> int:
        if self is FormKind.TWO_SQUARES:
            return a * a + b * b
        if self is FormKind.MINUS_TWO:
            return (a + b) ** 2 - 2 * b * b
        return (a - b) ** 2 + 2 * b * b

    @property
    def residue_set(self) -> "ResidueSet":
        return _KIND_TO_SET[self]


class ResidueSet(str, Enum):
    """Odd integers whose prime divisors all fall in one pair of classes mod 8"""

    S13 = "S13"
    S15 = "S15"
    S17 = "S17"

    @property
    def residues(self) -> FrozenSet[int]:
        return frozenset({1, int(self.value[-1])})


_KIND_TO_SET = {
    FormKind.PLUS_TWO: ResidueSet.S13,
    FormKind.TWO_SQUARES: ResidueSet.S15,
    FormKind.MINUS_TWO: ResidueSet.S17,
}


class Representation(BaseModel):
    """One constrained solution of N = F(a, b) for a given form"""

    model_config = ConfigDict(frozen=True)

    kind: FormKind
    a: int = Field(..., gt=0)
    b: int = Field(..., gt=0)

    @model_validator(mode="after")
    def _pythagorean_constraints(self) -> "Representation":
        check_params(self.a, self.b)
        return self

    @property
    def value(self) -> int:
        return self.kind.value_of(self.a, self.b)

    @property
    def reduced(self) -> Tuple[int, int]:
        """(a', b') of the reduced form: a² + b², a'² - 2b'² or a'² + 2b'²."""
        if self.kind is FormKind.MINUS_TWO:
            return (self.a + self.b, self.b)
        if self.kind is FormKind.PLUS_TWO:
            return (self.a - self.b, self.b)
        return (self.a, self.b)

    def as_tuple(self):
        return (self.a, self.b)


class RawPair(BaseModel):
    """Unconstrained parameter pair; entries may be zero or negative"""

    model_config = ConfigDict(frozen=True)

    kind: FormKind
    u: int
    v: int

    @property
    def value(self) -> int:
        return self.kind.value_of(self.u, self.v)

    @property
    def is_primitive_odd_pair(self) -> bool:
        return self.u % 2 == 1 and self.v % 2 == 1 and gcd(self.u, self.v) == 1

    def as_tuple(self):
        return (self.u, self.v)


class DegenerateReason(str, Enum):
    PERFECT_SQUARE = "perfect-square"
    TWICE_SQUARE = "twice-square"


class Degenerate(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: FormKind
    value: int
    reason: DegenerateReason


class SetMembership(BaseModel):
    """
    Which of S13/S15/S17 an odd integer belongs to.

    Integers built only from primes p ≡ 1 (mod 8) sit in all three sets at once;
    an empty `sets` means the residue classes of the prime divisors mix.
    """

    model_config = ConfigDict(frozen=True)

    n: int
    sets: Tuple[ResidueSet, ...] = ()
    distinct_primes: int = Field(..., ge=1)

    @property
    def is_member(self) -> bool:
        return len(self.sets) > 0

    @property
    def set(self) -> Optional[ResidueSet]:
        """The single set, or None for mixed classes and for the triple membership."""
        return self.sets[0] if len(self.sets) == 1 else None


class FormDescriptor(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: FormKind
    discriminant: int
    automorphs: int
