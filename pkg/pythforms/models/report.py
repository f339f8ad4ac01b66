from datetime import datetime, timezone
from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, model_validator

from pythforms.models.triplet import FlavorFilter


class OutputFormat(str, Enum):
    MARKDOWN = "md"
    CSV = "csv"
    JSON_LINES = "jsonl"


class RunConfig(BaseModel):
    """Parsed flags of one CLI invocation"""

    command: str
    output_format: OutputFormat = OutputFormat.MARKDOWN
    out: Optional[str] = None
    value: Optional[int] = None
    bound: Optional[int] = Field(None, gt=0)
    r_max: Optional[int] = Field(None, gt=0)
    flavor: FlavorFilter = FlavorFilter.ALL
    jobs: int = Field(1, gt=0)

    @model_validator(mode="after")
    def _exclusive_targets(self) -> "RunConfig":
        if self.value is not None and self.bound is not None:
            raise ValueError("a single value and --bound are mutually exclusive")
        return self


class Counterexample(BaseModel):
    value: int
    detail: str


class SweepReport(BaseModel):
    check: str
    bound: int
    checked: int = 0
    counterexamples: List[Counterexample] = Field(default_factory=list)
    exploratory: bool = False
    elapsed: float = 0.0
    notes: List[str] = Field(default_factory=list)
    finished_at: datetime = Field(default_factory=lambda: datetime.now(timezone.utc))

    @property
    def passed(self) -> bool:
        return self.exploratory or not self.counterexamples

    @property
    def status(self) -> str:
        if self.exploratory:
            return "exploratory"
        return "passed" if self.passed else "failed"


class TableData(BaseModel):
    """
    One rendered table: machine records plus the markdown view.

    `columns` name the csv fields; `headers` (when set) replace them as markdown
    column titles and `display` holds the markdown cells. `summary` leads the
    json-lines output when set.
    """

    columns: List[str]
    records: List[Dict[str, Any]] = Field(default_factory=list)
    headers: Optional[List[str]] = None
    display: Optional[List[List[str]]] = None
    title: Optional[str] = None
    notes: List[str] = Field(default_factory=list)
    summary: Optional[Dict[str, Any]] = None
