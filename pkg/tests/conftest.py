import pytest

from choicedict.core.config.dictionary_config import BarrierMode
from choicedict.core.di.container import Container
from choicedict.domain.dictionary.entities.seg_dict import SegDict
from choicedict.domain.memory.entities.bit_store import BitStore
from choicedict.domain.memory.entities.fill_policy import FillPolicy

FILLS = [
    FillPolicy.zeros(),
    FillPolicy.ones(),
    FillPolicy.random(1),
    FillPolicy.random(7),
    FillPolicy.random(42),
]


@pytest.fixture(scope="session")
def container():
    c = Container()
    c.init_resources()
    yield c
    c.unwire()


@pytest.fixture
def make_seg_dict():
    """Cria um SegDict isolado no offset 0 de um BitStore do tamanho exato."""

    def factory(
        n_cells: int,
        b: int,
        fill: FillPolicy | None = None,
        barrier_mode: BarrierMode = BarrierMode.HIDDEN,
        word_width: int = 64,
        cls: type[SegDict] = SegDict,
    ) -> SegDict:
        barrier_bits = 1 if barrier_mode is BarrierMode.HIDDEN else word_width
        store = BitStore.create(barrier_bits + 2 * b * n_cells, fill, word_width)
        return cls.init(store, 0, b, n_cells, barrier_mode)

    return factory
