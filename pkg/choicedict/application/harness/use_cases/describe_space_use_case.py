from choicedict.application.harness.dtos.report_dtos import SpaceReport
from choicedict.core.config.dictionary_config import DictionaryConfig
from choicedict.domain.dictionary.entities.layout import DictionaryLayout


class DescribeSpaceUseCase:
    """Caso de uso que descreve a disposição em bits de um dicionário."""

    def execute(self, n: int, config: DictionaryConfig) -> SpaceReport:
        layout = DictionaryLayout.plan(n, config)
        return SpaceReport(
            n=n,
            b=layout.b,
            mode=config.mode.value,
            spans=layout.spans(),
            total_bits=layout.total_bits,
        )
