from dataclasses import dataclass, field
from typing import Dict, List, Optional

from pydantic import BaseModel, Field

from choicedict.application.harness.dtos.trace_dtos import Op, OpTrace


@dataclass
class Divergence:
    """Primeira diferença observada entre o sujeito e o oráculo."""
    index: int
    op: Op
    expected: str
    actual: str
    violations: List[str] = field(default_factory=list)


@dataclass
class DifferentialReport:
    ops_run: int
    divergence: Optional[Divergence] = None
    minimal_prefix: Optional[OpTrace] = None
    case_counts: Dict[str, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.divergence is None


class OpStats(BaseModel):
    operation: str
    max_accesses: int
    mean_accesses: float
    mean_ns: float
    ceiling: int
    samples: int


class BenchReport(BaseModel):
    """Medições de uma execução de benchmark para um n."""
    n: int
    b: int
    mode: str
    footprint_bits: int
    expected_footprint_bits: int
    footprint_ok: bool
    init_accesses: int
    iter_state_bits: int
    ops: List[OpStats] = Field(default_factory=list)
    # acessos de cada passo do roteiro fixo; None quando o n não comporta o roteiro
    fixed_schedule_accesses: Optional[Dict[str, int]] = None

    def stats(self, operation: str) -> Optional[OpStats]:
        return next((s for s in self.ops if s.operation == operation), None)


class ConstantTimeCheck(BaseModel):
    """Máximos medidos contra o teto de cada operação, mais a comparação entre n.

    ``fixed_schedule_equal`` compara, passo a passo, os acessos do roteiro
    fixo em todos os n; é None quando algum n não comporta o roteiro
    (tamanho autocontido ou menos de 4 células). ``init_counts_equal`` é
    informativo: no modo self-contained o campo k escondido pode cruzar uma
    fronteira de palavra para alguns n.
    """
    within_ceilings: bool
    init_counts_equal: bool
    fixed_schedule_equal: Optional[bool] = None
    max_accesses: Dict[str, List[int]] = Field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.within_ceilings and self.fixed_schedule_equal is not False


class SpaceReport(BaseModel):
    n: int
    b: int
    mode: str
    spans: List[tuple[str, int]]
    total_bits: int
