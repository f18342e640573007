"""Memória inicial hostil: campos mate recíprocos que formariam arestas falsas."""
import random

from choicedict.core.config.dictionary_config import BarrierMode
from choicedict.domain.bits import wordops
from choicedict.domain.dictionary.entities.layout import DictionaryLayout
from choicedict.domain.memory.entities.bit_store import BitStore
from choicedict.domain.memory.entities.fill_policy import FillPolicy


def _crafted_words(
    total_bits: int,
    a_offset: int,
    n_cells: int,
    b: int,
    barrier_mode: BarrierMode,
    word_width: int,
    seed: int,
) -> tuple[int, ...]:
    store = BitStore.create(total_bits, FillPolicy.random(seed), word_width)
    rng = random.Random(seed)
    field_width = wordops.bit_length_of(n_cells) if barrier_mode is BarrierMode.HIDDEN else b
    for i in range(1, n_cells + 1):
        cell = a_offset + (i - 1) * 2 * b
        # i ↔ N+1−i atravessa qualquer barreira entre os dois
        store.write_bits(cell + b, field_width, n_cells + 1 - i)
        store.write_bits(cell, b, rng.getrandbits(b))
    return store.words()


def fake_matching_fill(layout: DictionaryLayout, seed: int = 0) -> FillPolicy:
    """Preenchimento crafted para o layout completo de um ChoiceDict."""
    return FillPolicy.crafted(
        _crafted_words(
            layout.total_bits,
            layout.a_offset,
            layout.n_cells,
            layout.b,
            layout.barrier_mode,
            layout.word_width,
            seed,
        )
    )


def fake_matching_fill_for_cells(
    n_cells: int,
    b: int,
    barrier_mode: BarrierMode = BarrierMode.HIDDEN,
    word_width: int = 64,
    seed: int = 0,
) -> FillPolicy:
    """Mesmo padrão para um SegDict isolado no offset 0."""
    barrier_bits = 1 if barrier_mode is BarrierMode.HIDDEN else word_width
    return FillPolicy.crafted(
        _crafted_words(
            barrier_bits + 2 * b * n_cells,
            barrier_bits,
            n_cells,
            b,
            barrier_mode,
            word_width,
            seed,
        )
    )
