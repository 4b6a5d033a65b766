from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from src.models.types import Engine, SuiteName


class PolyValue(BaseModel):
    """A rational function in A, printed and in exact coefficient form."""

    text: str
    numerator: Dict[str, Dict[str, str]]
    denominator: Dict[str, Dict[str, str]]

    @classmethod
    def of(cls, value) -> "PolyValue":
        from src.qpoly import RatFunc

        value = RatFunc.coerce(value)
        data = value.to_json()
        return cls(text=str(value), numerator=data["numerator"], denominator=data["denominator"])


class EngineInfo(BaseModel):
    name: Engine = "fast"
    threads: int = 1
    oracle_budget: Optional[int] = None


class ExpansionTerm(BaseModel):
    labels: List[int]
    coefficient: str


class ExpansionReport(BaseModel):
    spec: str
    sources: List[int]
    targets: List[int]
    tree: str
    internal_edges: int
    terms: List[ExpansionTerm] = Field(default_factory=list)


class SuiteReport(BaseModel):
    suite: SuiteName
    max_label: int
    violations: List[str] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations


class CommandResult(BaseModel):
    """Envelope printed by ``--json``."""

    command: str
    input: Dict[str, Any] = Field(default_factory=dict)
    engine: Optional[EngineInfo] = None
    value: Optional[PolyValue] = None
    expansion: Optional[ExpansionReport] = None
    suites: List[SuiteReport] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)
