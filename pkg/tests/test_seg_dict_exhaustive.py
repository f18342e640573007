"""Todas as sequências curtas de escritas, a partir de memória com lixo."""
import pytest

from choicedict.application.harness.use_cases.differential_run_use_case import DifferentialRunUseCase
from choicedict.application.harness.use_cases.generate_trace_use_case import iter_exhaustive_traces
from choicedict.application.harness.use_cases.subject_factory import seg_dict_factories
from choicedict.core.config.dictionary_config import DictionaryConfig, Mode

GARBAGE = ["zeros", "ones", "random:1", "random:5", "crafted"]


def _run_all(n_cells: int, length: int, fill: str, mode: Mode = Mode.HIDDEN) -> int:
    config = DictionaryConfig.from_mode(mode)
    subject, oracle = seg_dict_factories(n_cells, 4, config, fill, seed=n_cells)
    runner = DifferentialRunUseCase(shrink=False)
    runs = 0
    for trace in iter_exhaustive_traces(n_cells, length):
        report = runner.execute(trace, subject, oracle)
        assert report.ok, f"{fill}: {[str(op) for op in trace.ops]} → {report.divergence}"
        runs += 1
    return runs


class TestExhaustiveSmall:
    @pytest.mark.parametrize("fill", GARBAGE)
    @pytest.mark.parametrize("n_cells,length", [(1, 6), (2, 4), (3, 3)])
    def test_all_sequences(self, n_cells, length, fill):
        assert _run_all(n_cells, length, fill) == (3 * n_cells) ** length

    @pytest.mark.parametrize("n_cells", [1, 2, 3])
    def test_plain_barrier(self, n_cells):
        assert _run_all(n_cells, 3, "random:3", Mode.PLAIN) == (3 * n_cells) ** 3

    @pytest.mark.slow
    @pytest.mark.parametrize("fill", GARBAGE)
    @pytest.mark.parametrize("n_cells", [2, 3])
    def test_all_sequences_of_length_six(self, n_cells, fill):
        assert _run_all(n_cells, 6, fill) == (3 * n_cells) ** 6
