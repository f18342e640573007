from typing import Optional, Type

from choicedict.application.harness.dtos.report_dtos import DifferentialReport
from choicedict.application.harness.mappers.trace_mapper import TraceMapper
from choicedict.application.harness.use_cases.differential_run_use_case import DifferentialRunUseCase
from choicedict.application.harness.use_cases.subject_factory import (
    choice_dict_factories,
    seg_dict_factories,
)
from choicedict.core.config.dictionary_config import DictionaryConfig
from choicedict.core.config.logging import get_logger
from choicedict.core.errors import TraceParseError
from choicedict.domain.dictionary.entities.seg_dict import SegDict

logger = get_logger(__name__)


class ReplayTraceUseCase:
    """Caso de uso para reproduzir uma trace em texto contra o oráculo."""

    def __init__(
        self,
        differential_run_use_case: DifferentialRunUseCase,
        seg_dict_cls: Type[SegDict] = SegDict,
    ):
        self._differential_run = differential_run_use_case
        self._seg_dict_cls = seg_dict_cls

    def execute(
        self,
        text: str,
        config: DictionaryConfig,
        fill: str = "zeros",
        n: Optional[int] = None,
        seed: int = 0,
    ) -> DifferentialReport:
        """Interpreta e executa a trace.

        Raises:
            TraceParseError: Se a trace for malformada ou não definir o universo
        """
        trace = TraceMapper.with_universe(TraceMapper.parse(text), n)
        if trace.is_sequence:
            subject, oracle = seg_dict_factories(
                trace.n_cells, trace.b, config, fill, seed, seg_dict_cls=self._seg_dict_cls
            )
        elif trace.universe is not None:
            subject, oracle = choice_dict_factories(
                trace.universe, config, fill, seed, seg_dict_cls=self._seg_dict_cls
            )
        elif trace.ops and trace.ops[0].kind.on_sequence:
            raise TraceParseError(1, "trace de sequência exige o cabeçalho universe=NxB")
        else:
            raise TraceParseError(1, "universo ausente: use o cabeçalho universe=… ou --n")
        logger.info(f"Replay de {len(trace)} operações com fill={fill} modo={config.mode.value}")
        return self._differential_run.execute(trace, subject, oracle)
