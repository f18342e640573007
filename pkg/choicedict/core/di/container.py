from dependency_injector import containers, providers

from choicedict.core.config.settings import Settings
from choicedict.application.harness.use_cases.generate_trace_use_case import GenerateTraceUseCase
from choicedict.application.harness.use_cases.differential_run_use_case import DifferentialRunUseCase
from choicedict.application.harness.use_cases.replay_trace_use_case import ReplayTraceUseCase
from choicedict.application.harness.use_cases.run_benchmark_use_case import RunBenchmarkUseCase
from choicedict.application.harness.use_cases.describe_space_use_case import DescribeSpaceUseCase
from choicedict.domain.dictionary.entities.seg_dict import SegDict


class Container(containers.DeclarativeContainer):
    settings = providers.Singleton(Settings)

    # Implementação de D1 usada pelo replay (os testes sobrepõem com variantes)
    seg_dict_class = providers.Object(SegDict)

    # Casos de uso do harness
    generate_trace_use_case = providers.Factory(GenerateTraceUseCase)

    differential_run_use_case = providers.Factory(
        DifferentialRunUseCase,
        shrink=settings.provided.replay_shrink,
    )

    replay_trace_use_case = providers.Factory(
        ReplayTraceUseCase,
        differential_run_use_case=differential_run_use_case,
        seg_dict_cls=seg_dict_class,
    )

    run_benchmark_use_case = providers.Factory(
        RunBenchmarkUseCase,
        generate_trace_use_case=generate_trace_use_case,
    )

    describe_space_use_case = providers.Factory(DescribeSpaceUseCase)
