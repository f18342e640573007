from typing import Iterator, Optional, Type

from choicedict.core.config.dictionary_config import DictionaryConfig
from choicedict.core.config.logging import get_logger
from choicedict.core.errors import InvalidArgumentError
from choicedict.domain.bits import wordops
from choicedict.domain.bits.entities.half_pair import HalfPair
from choicedict.domain.dictionary.entities.iter_state import IterPhase, IterState
from choicedict.domain.dictionary.entities.layout import DictionaryLayout
from choicedict.domain.dictionary.entities.seg_dict import SegDict
from choicedict.domain.dictionary.entities.size_header import SizeHeader
from choicedict.domain.dictionary.entities.word_dict import WordDict
from choicedict.domain.dictionary.ports.choice_dictionary_port import ChoiceDictionaryPort
from choicedict.domain.memory.entities.bit_store import BitStore
from choicedict.domain.memory.entities.fill_policy import FillPolicy

logger = get_logger(__name__)

# (leituras de campo, escritas de campo) no pior caso; independe de n
_FIELD_ACCESSES: dict[str, tuple[int, int]] = {
    "init": (0, 5),
    "insert": (23, 11),
    "delete": (23, 11),
    "contains": (6, 0),
    "choice": (12, 0),
    "iter_reset": (2, 0),
    "iter_next": (10, 0),
    "iter_done": (2, 0),
    "read_header": (1, 0),
}


class ChoiceDict(ChoiceDictionaryPort):
    """Dicionário de escolha atômico sobre {1, …, n}.

    Os primeiros 2bN elementos vivem nos segmentos de um SegDict (D1): o
    elemento ℓ é o bit (ℓ−1) mod 2b de a_⌈ℓ/2b⌉. Os n′ restantes vivem num
    WordDict (D2) na cauda. Em modo hidden e tamanho externo o dicionário
    ocupa exatamente n + 1 bits.
    """

    def __init__(
        self,
        store: BitStore,
        layout: DictionaryLayout,
        config: DictionaryConfig,
        d1: Optional[SegDict],
        d2: Optional[WordDict],
    ) -> None:
        self.store = store
        self.layout = layout
        self.config = config
        self.n = layout.n
        self.b = layout.b
        self.d1 = d1
        self.d2 = d2

    # Construção -----------------------------------------------------------

    @classmethod
    def create(
        cls,
        n: int,
        config: Optional[DictionaryConfig] = None,
        fill: Optional[FillPolicy] = None,
        store: Optional[BitStore] = None,
        seg_dict_cls: Type[SegDict] = SegDict,
    ) -> "ChoiceDict":
        """Inicializa um dicionário vazio com O(1) acessos, sobre memória arbitrária.

        Args:
            n: Tamanho do universo
            config: Configuração (b, modo da barreira, tamanho, endianness)
            fill: Conteúdo inicial da memória quando ``store`` não é dado
            store: Memória já alocada com exatamente ``footprint`` bits
            seg_dict_cls: Implementação de D1 (o harness injeta variantes)

        Raises:
            InvalidArgumentError: Se n ou a política de b forem inválidos
        """
        config = config or DictionaryConfig()
        layout = DictionaryLayout.plan(n, config)
        if store is None:
            store = BitStore.create(layout.total_bits, fill, config.word_width)
        elif store.capacity_bits != layout.total_bits or store.word_width != config.word_width:
            raise InvalidArgumentError(
                f"BitStore de {store.capacity_bits} bits (W = {store.word_width}) não corresponde ao layout "
                f"de {layout.total_bits} bits (W = {config.word_width})"
            )
        if layout.header_bits:
            SizeHeader(n, config.endianness).write(store, 0)
        d1 = None
        if layout.n_cells:
            d1 = seg_dict_cls.init(store, layout.barrier_offset, layout.b, layout.n_cells, layout.barrier_mode)
        d2 = WordDict.init(store, layout.tail_offset, layout.tail_bits, layout.b) if layout.tail_bits else None
        logger.debug(
            f"ChoiceDict criado: n={n} b={layout.b} N={layout.n_cells} n'={layout.tail_bits} "
            f"modo={layout.barrier_mode.value} footprint={layout.total_bits}"
        )
        return cls(store, layout, config, d1, d2)

    @classmethod
    def attach(cls, store: BitStore, n: int, config: DictionaryConfig) -> "ChoiceDict":
        """Reabre um dicionário já inicializado em ``store`` (sem varrer o corpo)."""
        layout = DictionaryLayout.plan(n, config)
        if store.capacity_bits < layout.total_bits:
            raise InvalidArgumentError(
                f"BitStore de {store.capacity_bits} bits menor que o layout de {layout.total_bits} bits"
            )
        d1 = None
        if layout.n_cells:
            d1 = SegDict.attach(store, layout.barrier_offset, layout.b, layout.n_cells, layout.barrier_mode)
        d2 = WordDict.attach(store, layout.tail_offset, layout.tail_bits, layout.b) if layout.tail_bits else None
        return cls(store, layout, config, d1, d2)

    @classmethod
    def from_bytes(cls, data: bytes, config: DictionaryConfig, n: Optional[int] = None) -> "ChoiceDict":
        """Carrega um dump.

        Dumps autocontidos decodificam n do cabeçalho; os de tamanho externo exigem n.
        """
        if config.self_contained:
            header_store = BitStore.load(data, len(data) * 8, config.word_width)
            header = SizeHeader.read(header_store, 0, config.endianness)
            if n is not None and n != header.n:
                raise InvalidArgumentError(f"n = {n} diverge do cabeçalho, que codifica n = {header.n}")
            n = header.n
        elif n is None:
            raise InvalidArgumentError("dump de tamanho externo exige n")
        layout = DictionaryLayout.plan(n, config)
        store = BitStore.load(data, layout.total_bits, config.word_width)
        logger.info(f"ChoiceDict carregado: n={n} footprint={layout.total_bits}")
        return cls.attach(store, n, config)

    def to_bytes(self) -> bytes:
        return self.store.dump()

    # Operações ------------------------------------------------------------

    def footprint_bits(self) -> int:
        return self.layout.total_bits

    def access_ceiling(self, operation: str) -> int:
        reads, writes = _FIELD_ACCESSES[operation]
        widest = max(self.b, self.layout.barrier_bits, 2 * self.store.word_width)
        return BitStore.access_ceiling(reads, writes, widest, self.store.word_width)

    @staticmethod
    def operations() -> tuple[str, ...]:
        return tuple(_FIELD_ACCESSES)

    def _check(self, element: int) -> None:
        if not 1 <= element <= self.n:
            raise InvalidArgumentError(f"elemento {element} fora de [1, {self.n}]")

    def insert(self, element: int) -> None:
        self._check(element)
        i, bit = self.layout.locate(element)
        if i == 0:
            self.d2.insert(bit)
            return
        value = self.d1.read(i)
        if not value >> bit & 1:
            self.d1.write(i, value | (1 << bit))

    def delete(self, element: int) -> None:
        self._check(element)
        i, bit = self.layout.locate(element)
        if i == 0:
            self.d2.delete(bit)
            return
        value = self.d1.read(i)
        if value >> bit & 1:
            self.d1.write(i, value & ~(1 << bit))

    def contains(self, element: int) -> bool:
        self._check(element)
        i, bit = self.layout.locate(element)
        if i == 0:
            return self.d2.contains(bit)
        return bool(self.d1.read(i) >> bit & 1)

    def _lowest_from(self, value: int, offset: int) -> int:
        """Menor posição p ≥ offset com bit p de value igual a 1, ou −1."""
        halves = HalfPair.from_int(value & ~wordops.low_mask(offset), self.b)
        if halves.lower:
            return wordops.lsb(halves.lower, self.store.word_width)
        if halves.upper:
            return self.b + wordops.lsb(halves.upper, self.store.word_width)
        return -1

    def _element(self, i: int, position: int) -> int:
        return (i - 1) * self.layout.segment_bits + position + 1

    def choice(self) -> int:
        if self.d1 is not None:
            i = self.d1.nonzero()
            if i:
                return self._element(i, self._lowest_from(self.d1.read(i), 0))
        if self.d2 is not None:
            element = self.d2.choice()
            if element:
                return element + self.layout.segmented_universe
        return 0

    # Iteração -------------------------------------------------------------

    def _after_segments(self) -> IterState:
        return IterState.tail() if self.d2 is not None else IterState.done()

    def iter_reset(self) -> IterState:
        if self.d1 is not None:
            j = self.d1.barrier() + 1
            if j <= self.layout.n_cells:
                return IterState(IterPhase.SEGMENTS, j=j, offset=0)
        return self._after_segments()

    def iter_next(self, state: IterState) -> tuple[int, IterState]:
        """Retorna ``(elemento, próximo estado)``; elemento 0 indica fim."""
        if state.phase is IterPhase.SEGMENTS:
            i = self.d1.mate(state.j)
            value = self.d1.read(i)
            position = self._lowest_from(value, state.offset)
            if position < 0:
                # só acontece se o conjunto mudou durante a iteração
                return 0, IterState.done()
            if value >> (position + 1):
                following = IterState(IterPhase.SEGMENTS, j=state.j, offset=position + 1)
            elif state.j < self.layout.n_cells:
                following = IterState(IterPhase.SEGMENTS, j=state.j + 1, offset=0)
            else:
                following = self._after_segments()
            return self._element(i, position), following
        if state.phase is IterPhase.TAIL:
            element, cursor = self.d2.iterate(state.tail_cursor)
            if element == 0:
                return 0, IterState.done()
            return element + self.layout.segmented_universe, IterState.tail(cursor)
        return 0, state

    def iter_done(self, state: IterState) -> bool:
        if state.phase is IterPhase.SEGMENTS:
            return False
        if state.phase is IterPhase.TAIL:
            return self.d2.is_exhausted(state.tail_cursor)
        return True

    def iter_state_bits(self) -> int:
        return IterState.persistent_bits(self.n)

    def elements(self) -> list[int]:
        return list(self)

    def __iter__(self) -> Iterator[int]:
        state = self.iter_reset()
        while True:
            element, state = self.iter_next(state)
            if element == 0:
                return
            yield element

    def __contains__(self, element: object) -> bool:
        return isinstance(element, int) and 1 <= element <= self.n and self.contains(element)
