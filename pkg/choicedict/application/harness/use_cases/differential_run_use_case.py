from collections import Counter
from typing import Any, Callable, List, Optional

from choicedict.application.harness.dtos.report_dtos import DifferentialReport, Divergence
from choicedict.application.harness.dtos.trace_dtos import Op, OpKind, OpTrace
from choicedict.core.config.logging import get_logger
from choicedict.domain.dictionary.entities.choice_dict import ChoiceDict
from choicedict.domain.dictionary.entities.seg_dict import SegDict
from choicedict.infrastructure.oracle.invariant_checker import check_seg_dict
from choicedict.infrastructure.oracle.naive_set import NaiveSet

logger = get_logger(__name__)

Factory = Callable[[], Any]


def segment_values(oracle: NaiveSet, cd: ChoiceDict) -> List[int]:
    """Valores a_1..a_N que o D1 de ``cd`` deveria guardar para o conjunto do oráculo."""
    width = cd.layout.segment_bits
    values = [0] * cd.layout.n_cells
    for element in oracle.elements():
        if element <= cd.layout.segmented_universe:
            values[(element - 1) // width] |= 1 << ((element - 1) % width)
    return values


class DifferentialRunUseCase:
    """Caso de uso que executa uma trace no sujeito e no oráculo, comparando tudo."""

    def __init__(self, shrink: bool = True, max_shrink_steps: int = 400):
        self._shrink = shrink
        self._max_shrink_steps = max_shrink_steps

    def execute(
        self,
        trace: OpTrace,
        subject_factory: Factory,
        oracle_factory: Factory,
        check_invariants: bool = True,
    ) -> DifferentialReport:
        """Executa a trace e, havendo divergência, reduz o prefixo pela cauda.

        Args:
            trace: Operações a executar
            subject_factory: Cria um ChoiceDict ou SegDict novo
            oracle_factory: Cria o NaiveSet ou PlainArray correspondente
            check_invariants: Roda o checker do SegDict após cada operação

        Returns:
            DifferentialReport: Resultado, primeira divergência e contagem de casos
        """
        ops_run, divergence, cases = self._run(trace, subject_factory, oracle_factory, check_invariants)
        report = DifferentialReport(ops_run=ops_run, divergence=divergence, case_counts=dict(cases))
        if divergence is not None:
            logger.error(f"Divergência na operação {divergence.index + 1}: {divergence.op}")
            prefix = trace.prefix(divergence.index + 1)
            if self._shrink:
                prefix = self._shrink_tail(prefix, subject_factory, oracle_factory, check_invariants)
            report.minimal_prefix = prefix
        else:
            logger.info(f"Trace de {ops_run} operações sem divergência")
        return report

    def _diverges(self, trace: OpTrace, subject_factory: Factory, oracle_factory: Factory, check: bool) -> Optional[int]:
        _, divergence, _ = self._run(trace, subject_factory, oracle_factory, check)
        return None if divergence is None else divergence.index

    def _shrink_tail(
        self,
        prefix: OpTrace,
        subject_factory: Factory,
        oracle_factory: Factory,
        check: bool,
    ) -> OpTrace:
        """Remove operações gulosamente, da cauda para o início, mantendo a divergência."""
        ops = list(prefix.ops)
        position = len(ops) - 2
        steps = 0
        while position >= 0 and steps < self._max_shrink_steps:
            candidate = prefix.prefix(0)
            candidate.ops = ops[:position] + ops[position + 1:]
            failing = self._diverges(candidate, subject_factory, oracle_factory, check)
            if failing is not None:
                ops = candidate.ops[:failing + 1]
                position = min(position, len(ops) - 1)
            position -= 1
            steps += 1
        shrunk = prefix.prefix(0)
        shrunk.ops = ops
        logger.info(f"Prefixo mínimo: {len(ops)} de {len(prefix)} operações")
        return shrunk

    def _run(
        self,
        trace: OpTrace,
        subject_factory: Factory,
        oracle_factory: Factory,
        check: bool,
    ) -> tuple[int, Optional[Divergence], Counter]:
        cases: Counter = Counter()
        subject = subject_factory()
        oracle = oracle_factory()
        for index, op in enumerate(trace.ops):
            try:
                mismatch = self._apply(op, subject, oracle)
            except Exception as e:
                return index, Divergence(index, op, "sem erro", f"erro: {e}"), cases
            if isinstance(subject, SegDict) and op.kind is OpKind.WRITE and subject.last_write_case:
                cases[subject.last_write_case.value] += 1
            if mismatch is not None:
                return index, Divergence(index, op, mismatch[0], mismatch[1]), cases
            if check:
                violations = self._check(subject, oracle)
                if violations:
                    return index, Divergence(index, op, "invariante preservado", "invariante violado", violations), cases
        return len(trace.ops), None, cases

    @staticmethod
    def _check(subject: Any, oracle: Any) -> List[str]:
        if isinstance(subject, SegDict):
            return check_seg_dict(subject, oracle.values())
        if isinstance(subject, ChoiceDict) and subject.d1 is not None:
            return check_seg_dict(subject.d1, segment_values(oracle, subject))
        return []

    @staticmethod
    def _apply(op: Op, subject: Any, oracle: Any) -> Optional[tuple[str, str]]:
        """Aplica a operação em ambos; retorna (esperado, obtido) se divergirem."""
        kind = op.kind
        if kind in (OpKind.INSERT, OpKind.DELETE, OpKind.WRITE):
            getattr(oracle, kind.value)(*op.args)
            getattr(subject, kind.value)(*op.args)
            return None
        if kind is OpKind.CONTAINS:
            expected, actual = oracle.contains(*op.args), subject.contains(*op.args)
            return None if expected == actual else (str(expected), str(actual))
        if kind is OpKind.READ:
            expected, actual = oracle.read(*op.args), subject.read(*op.args)
            return None if expected == actual else (str(expected), str(actual))
        if kind is OpKind.CHOICE:
            actual = subject.choice()
            empty = oracle.choice() == 0
            if empty and actual == 0:
                return None
            if not empty and actual != 0 and 1 <= actual <= oracle.n and oracle.contains(actual):
                return None
            return ("0" if empty else "um elemento de S", str(actual))
        if kind is OpKind.NONZERO:
            actual = subject.nonzero()
            empty = oracle.nonzero() == 0
            if empty and actual == 0:
                return None
            if not empty and 1 <= actual <= oracle.n_cells and oracle.read(actual) != 0:
                return None
            return ("0" if empty else "um índice com a_i ≠ 0", str(actual))
        expected = oracle.elements()
        actual = list(subject)
        if sorted(actual) == expected and len(set(actual)) == len(actual):
            return None
        return (str(expected), str(actual))
