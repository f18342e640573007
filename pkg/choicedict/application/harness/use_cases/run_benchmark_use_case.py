import time
from collections import defaultdict
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from choicedict.application.harness.dtos.report_dtos import BenchReport, ConstantTimeCheck, OpStats
from choicedict.application.harness.dtos.trace_dtos import OpKind
from choicedict.application.harness.use_cases.generate_trace_use_case import GenerateTraceUseCase, TraceProfile
from choicedict.application.harness.use_cases.subject_factory import resolve_fill
from choicedict.core.config.dictionary_config import DictionaryConfig
from choicedict.core.config.logging import get_logger
from choicedict.core.errors import InvalidArgumentError
from choicedict.domain.dictionary.entities.choice_dict import ChoiceDict
from choicedict.domain.dictionary.entities.layout import DictionaryLayout
from choicedict.domain.memory.entities.bit_store import BitStore
from choicedict.domain.memory.entities.fill_policy import FillPolicy

logger = get_logger(__name__)

# Quantas vezes por operação ITERATE o cursor avança, no máximo
_ITER_STEPS = 64

# O roteiro fixo usa as células 1, 2, N−1 e N, que precisam ser distintas
_FIXED_SCHEDULE_MIN_CELLS = 4


class RunBenchmarkUseCase:
    """Caso de uso que mede acessos e tempo por operação para cada n."""

    def __init__(self, generate_trace_use_case: GenerateTraceUseCase):
        self._generate_trace = generate_trace_use_case

    def execute(
        self,
        n_list: Sequence[int],
        config: DictionaryConfig,
        ops: int,
        seed: int = 0,
        fill: str = "zeros",
    ) -> Tuple[List[BenchReport], ConstantTimeCheck]:
        """Executa o benchmark e a verificação de tempo constante.

        Raises:
            InvalidArgumentError: Se ops < 1 ou a lista de n for vazia
        """
        if ops < 1:
            raise InvalidArgumentError("ops deve ser pelo menos 1")
        if not n_list:
            raise InvalidArgumentError("informe pelo menos um n")
        reports = [self._bench_one(n, config, ops, seed, fill) for n in n_list]
        return reports, self.constant_time_check(reports)

    @staticmethod
    def constant_time_check(reports: List[BenchReport]) -> ConstantTimeCheck:
        max_accesses: Dict[str, List[int]] = defaultdict(list)
        within = True
        for report in reports:
            for stats in report.ops:
                max_accesses[stats.operation].append(stats.max_accesses)
                within = within and stats.max_accesses <= stats.ceiling
        schedules = [r.fixed_schedule_accesses for r in reports]
        fixed_equal = None
        if all(s is not None for s in schedules):
            fixed_equal = all(s == schedules[0] for s in schedules)
        return ConstantTimeCheck(
            within_ceilings=within,
            init_counts_equal=len({r.init_accesses for r in reports}) == 1,
            fixed_schedule_equal=fixed_equal,
            max_accesses=dict(max_accesses),
        )

    @staticmethod
    def fixed_schedule(n: int, config: DictionaryConfig) -> Optional[Dict[str, int]]:
        """Acessos de cada passo de um roteiro posicionado relativamente ao layout.

        Os elementos ficam nas células 1, 2, N−1 e N, cujos deslocamentos
        módulo W não dependem de n quando o tamanho é externo. A memória é
        toda de uns: nenhum campo mate aponta de volta para outra célula, então
        nenhuma aresta espúria é cortada. Assim as contagens devem coincidir
        passo a passo para todo n.
        """
        layout = DictionaryLayout.plan(n, config)
        if layout.header_bits or layout.n_cells < _FIXED_SCHEDULE_MIN_CELLS:
            return None
        store = BitStore.create(layout.total_bits, FillPolicy.ones(), config.word_width)
        cd = ChoiceDict.create(n, config, store=store)
        last = layout.n_cells

        def element(cell: int, position: int) -> int:
            return (cell - 1) * layout.segment_bits + position + 1

        first, upper, end = element(1, 0), element(2, layout.b + 1), element(last, 3)
        iteration: Dict[str, object] = {}
        steps: List[Tuple[str, Callable]] = [
            ("insert first", lambda: cd.insert(first)),
            ("insert end", lambda: cd.insert(end)),
            ("insert upper", lambda: cd.insert(upper)),
            ("insert again", lambda: cd.insert(end)),
            ("contains present", lambda: cd.contains(first)),
            ("contains absent", lambda: cd.contains(element(last - 1, 0))),
            ("choice", cd.choice),
            ("iter_reset", lambda: iteration.update(state=cd.iter_reset())),
        ]
        for step in range(3):
            steps.append(
                (f"iter_next {step + 1}", lambda: iteration.update(state=cd.iter_next(iteration["state"])[1]))
            )
        steps += [
            ("iter_done", lambda: cd.iter_done(iteration["state"])),
            ("delete upper", lambda: cd.delete(upper)),
            ("delete end", lambda: cd.delete(end)),
            ("delete first", lambda: cd.delete(first)),
            ("delete absent", lambda: cd.delete(first)),
            ("choice empty", cd.choice),
        ]
        accesses: Dict[str, int] = {}
        for label, call in steps:
            store.reset_counter()
            call()
            accesses[label] = store.read_counter()
        return accesses

    def _bench_one(self, n: int, config: DictionaryConfig, ops: int, seed: int, fill: str) -> BenchReport:
        layout = DictionaryLayout.plan(n, config)
        store = BitStore.create(layout.total_bits, resolve_fill(fill, layout, seed), config.word_width)
        counts: Dict[str, List[int]] = defaultdict(list)
        times: Dict[str, List[int]] = defaultdict(list)

        def measure(operation: str, call: Callable):
            store.reset_counter()
            start = time.perf_counter_ns()
            result = call()
            times[operation].append(time.perf_counter_ns() - start)
            counts[operation].append(store.read_counter())
            return result

        cd = measure("init", lambda: ChoiceDict.create(n, config, store=store))
        trace = self._generate_trace.execute(seed, ops, TraceProfile.UNIFORM, universe=n, config=config)
        for op in trace.ops:
            if op.kind is OpKind.INSERT:
                measure("insert", lambda: cd.insert(op.args[0]))
            elif op.kind is OpKind.DELETE:
                measure("delete", lambda: cd.delete(op.args[0]))
            elif op.kind is OpKind.CONTAINS:
                measure("contains", lambda: cd.contains(op.args[0]))
            elif op.kind is OpKind.CHOICE:
                measure("choice", cd.choice)
            elif op.kind is OpKind.ITERATE:
                state = measure("iter_reset", cd.iter_reset)
                for _ in range(_ITER_STEPS):
                    if measure("iter_done", lambda: cd.iter_done(state)):
                        break
                    _, state = measure("iter_next", lambda: cd.iter_next(state))

        stats = [
            OpStats(
                operation=operation,
                max_accesses=max(counts[operation]),
                mean_accesses=sum(counts[operation]) / len(counts[operation]),
                mean_ns=sum(times[operation]) / len(times[operation]),
                ceiling=cd.access_ceiling(operation),
                samples=len(counts[operation]),
            )
            for operation in ChoiceDict.operations()
            if counts.get(operation)
        ]
        expected = config.expected_footprint(n)
        logger.info(f"Benchmark n={n}: footprint={cd.footprint_bits()} esperado={expected}")
        return BenchReport(
            n=n,
            b=layout.b,
            mode=config.mode.value,
            footprint_bits=cd.footprint_bits(),
            expected_footprint_bits=expected,
            footprint_ok=cd.footprint_bits() == expected,
            init_accesses=counts["init"][0],
            iter_state_bits=cd.iter_state_bits(),
            ops=stats,
            fixed_schedule_accesses=self.fixed_schedule(n, config),
        )
