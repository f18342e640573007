from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Tuple


class OpKind(str, Enum):
    """Operações de uma trace: as de conjunto e as de sequência."""
    INSERT = "insert"
    DELETE = "delete"
    CONTAINS = "contains"
    CHOICE = "choice"
    ITERATE = "iterate"
    WRITE = "write"
    READ = "read"
    NONZERO = "nonzero"

    @property
    def arity(self) -> int:
        if self is OpKind.WRITE:
            return 2
        if self in (OpKind.CHOICE, OpKind.ITERATE, OpKind.NONZERO):
            return 0
        return 1

    @property
    def on_sequence(self) -> bool:
        return self in (OpKind.WRITE, OpKind.READ, OpKind.NONZERO)


@dataclass(frozen=True)
class Op:
    kind: OpKind
    args: Tuple[int, ...] = ()
    line: int = field(default=0, compare=False)

    def __str__(self) -> str:
        return " ".join([self.kind.value, *(str(a) for a in self.args)])


@dataclass
class OpTrace:
    """Sequência de operações reproduzível.

    ``universe`` é n para traces de conjunto; ``n_cells`` e ``b`` descrevem
    uma trace de sequência (universo N×b).
    """
    ops: List[Op] = field(default_factory=list)
    seed: Optional[int] = None
    universe: Optional[int] = None
    n_cells: Optional[int] = None
    b: Optional[int] = None

    @property
    def is_sequence(self) -> bool:
        return self.n_cells is not None

    def prefix(self, length: int) -> "OpTrace":
        return OpTrace(
            ops=self.ops[:length],
            seed=self.seed,
            universe=self.universe,
            n_cells=self.n_cells,
            b=self.b,
        )

    def __len__(self) -> int:
        return len(self.ops)
