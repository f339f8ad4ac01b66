from enum import Enum
from typing import Dict, List

from pydantic import BaseModel, ConfigDict, Field, model_validator

from pythforms.models.triple import TripleParams


class Flavor(str, Enum):
    MIXED = "mixed"
    ALL_ONE = "all-one"  # every prime ≡ 1 (mod 8)
    NONE_ONE = "none-one"  # primes ≡ 3, 5, 7 (mod 8) in slot order

    @classmethod
    def from_residues(cls, r13: int, r15: int, r17: int) -> "Flavor":
        if (r13, r15, r17) == (1, 1, 1):
            return cls.ALL_ONE
        if (r13, r15, r17) == (3, 5, 7):
            return cls.NONE_ONE
        return cls.MIXED


class FlavorFilter(str, Enum):
    ALL = "all"
    ALL_ONE = "all-one"
    NONE_ONE = "none-one"

    def accepts(self, flavor: Flavor) -> bool:
        if self is FlavorFilter.ALL:
            return True
        return flavor.value == self.value


class TripletRecord(BaseModel):
    model_config = ConfigDict(frozen=True)

    params: TripleParams
    r: int = Field(..., gt=0)
    p13: int
    p15: int
    p17: int
    flavor: Flavor

    @model_validator(mode="after")
    def _progression(self) -> "TripletRecord":
        if not self.p15 - self.p13 == self.p17 - self.p15 == 2 * self.r:
            raise ValueError("triplet primes must step by 2r")
        if Flavor.from_residues(self.p13 % 8, self.p15 % 8, self.p17 % 8) is not self.flavor:
            raise ValueError(f"flavor {self.flavor.value} disagrees with the residues")
        return self

    @property
    def sort_key(self):
        return (self.r, self.p13)

    @property
    def gap(self) -> int:
        return 2 * self.r


class GapStats(BaseModel):
    total: int = 0
    per_flavor: Dict[str, int] = Field(default_factory=dict)
    gap_residues: Dict[int, int] = Field(
        default_factory=dict, description="Histogram of 2r mod 24"
    )
    per_decade: Dict[str, int] = Field(
        default_factory=dict, description="Triplet counts per power-of-ten band of r"
    )
    violations: List[str] = Field(default_factory=list)
