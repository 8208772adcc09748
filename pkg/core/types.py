from dataclasses import dataclass, field
from fractions import Fraction
from typing import Protocol, List, Dict, Any, Optional

from core.drg import IntersectionArray


@dataclass
class AnalysisInput:
    label: Optional[str]
    array_text: str
    array: Optional[IntersectionArray]
    params: Dict[str, Fraction] = field(default_factory=dict)
    settings: Dict[str, Any] = field(default_factory=dict)


@dataclass
class ResultItem:
    metric: str
    value: Optional[Any]
    interpretation: str
    severity: str  # "pass" | "boundary" | "fail" | "info"


class AnalysisModule(Protocol):
    id: str
    title: str
    def inputs(self, data: AnalysisInput) -> AnalysisInput: ...
    def compute(self, data: AnalysisInput) -> List[ResultItem]: ...
    def render(self, results: List[ResultItem]) -> None: ...
    def to_pdf(self, results: List[ResultItem]) -> List[list[str]]: ...
