from typing import Callable, Type

from choicedict.core.config.dictionary_config import BarrierMode, DictionaryConfig
from choicedict.domain.dictionary.entities.choice_dict import ChoiceDict
from choicedict.domain.dictionary.entities.layout import DictionaryLayout
from choicedict.domain.dictionary.entities.seg_dict import SegDict
from choicedict.domain.memory.entities.bit_store import BitStore
from choicedict.domain.memory.entities.fill_policy import FillPolicy
from choicedict.infrastructure.oracle.adversarial_memory import (
    fake_matching_fill,
    fake_matching_fill_for_cells,
)
from choicedict.infrastructure.oracle.naive_set import NaiveSet
from choicedict.infrastructure.oracle.plain_array import PlainArray

CRAFTED = "crafted"


def resolve_fill(fill: str, layout: DictionaryLayout, seed: int = 0) -> FillPolicy:
    if fill.strip().lower() == CRAFTED:
        return fake_matching_fill(layout, seed)
    return FillPolicy.parse(fill)


def choice_dict_factories(
    n: int,
    config: DictionaryConfig,
    fill: str = "zeros",
    seed: int = 0,
    seg_dict_cls: Type[SegDict] = SegDict,
) -> tuple[Callable[[], ChoiceDict], Callable[[], NaiveSet]]:
    """Fábricas (sujeito, oráculo) para traces de conjunto.

    O lixo inicial é gerado uma vez; cada sujeito parte de uma cópia dele,
    de modo que as reexecuções do shrinking veem a mesma memória.
    """
    layout = DictionaryLayout.plan(n, config)
    template = BitStore.create(layout.total_bits, resolve_fill(fill, layout, seed), config.word_width)

    def subject() -> ChoiceDict:
        return ChoiceDict.create(n, config, store=template.copy(), seg_dict_cls=seg_dict_cls)

    return subject, (lambda: NaiveSet(n))


def seg_dict_factories(
    n_cells: int,
    b: int,
    config: DictionaryConfig,
    fill: str = "zeros",
    seed: int = 0,
    seg_dict_cls: Type[SegDict] = SegDict,
) -> tuple[Callable[[], SegDict], Callable[[], PlainArray]]:
    """Fábricas (sujeito, oráculo) para traces de sequência; ``seg_dict_cls`` aceita mutantes."""
    mode = config.barrier_mode
    if fill.strip().lower() == CRAFTED:
        policy = fake_matching_fill_for_cells(n_cells, b, mode, config.word_width, seed)
    else:
        policy = FillPolicy.parse(fill)
    barrier_bits = 1 if mode is BarrierMode.HIDDEN else config.word_width
    template = BitStore.create(barrier_bits + 2 * b * n_cells, policy, config.word_width)

    def subject() -> SegDict:
        return seg_dict_cls.init(template.copy(), 0, b, n_cells, mode)

    return subject, (lambda: PlainArray(n_cells, b))
