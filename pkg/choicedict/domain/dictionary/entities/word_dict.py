from choicedict.core.errors import InvalidArgumentError
from choicedict.domain.bits import wordops
from choicedict.domain.memory.entities.bit_store import BitStore


class WordDict:
    """Dicionário de escolha atômico para um universo de m < 2b elementos.

    Vetor de bits simples numa região de exatamente m bits do BitStore:
    o bit ℓ−1 vale 1 sse ℓ pertence ao conjunto. A região é lida e escrita
    em blocos de até 2W bits, logo cada operação toca O(1) palavras.
    """

    def __init__(self, store: BitStore, offset: int, m: int, b: int) -> None:
        if m < 0 or m >= 2 * b:
            raise InvalidArgumentError(f"universo de {m} elementos excede 2b − 1 = {2 * b - 1}")
        self.store = store
        self.offset = offset
        self.m = m
        self.b = b
        self._chunk = 2 * store.word_width

    @classmethod
    def init(cls, store: BitStore, offset: int, m: int, b: int) -> "WordDict":
        wd = cls(store, offset, m, b)
        for start, length in wd._chunks():
            store.write_bits(offset + start, length, 0)
        return wd

    @classmethod
    def attach(cls, store: BitStore, offset: int, m: int, b: int) -> "WordDict":
        """Reabre uma região já inicializada (carga de um dump)."""
        return cls(store, offset, m, b)

    def _chunks(self) -> list[tuple[int, int]]:
        return [(s, min(self._chunk, self.m - s)) for s in range(0, self.m, self._chunk)]

    def _check(self, element: int) -> None:
        if not 1 <= element <= self.m:
            raise InvalidArgumentError(f"elemento {element} fora de [1, {self.m}]")

    def insert(self, element: int) -> None:
        self._check(element)
        self.store.write_bits(self.offset + element - 1, 1, 1)

    def delete(self, element: int) -> None:
        self._check(element)
        self.store.write_bits(self.offset + element - 1, 1, 0)

    def contains(self, element: int) -> bool:
        self._check(element)
        return self.store.read_bits(self.offset + element - 1, 1) == 1

    def _first_from(self, position: int) -> int:
        """Menor elemento ℓ > position, ou 0."""
        for start, length in self._chunks():
            if start + length <= position:
                continue
            value = self.store.read_bits(self.offset + start, length)
            if position > start:
                value &= ~wordops.low_mask(position - start)
            if value:
                return start + wordops.lsb(value, self.store.word_width) + 1
        return 0

    def choice(self) -> int:
        return self._first_from(0)

    def iterate(self, cursor: int = 0) -> tuple[int, int]:
        """Próximo elemento depois de ``cursor`` (o último devolvido; 0 no início).

        Retorna ``(elemento, novo cursor)``; elemento 0 significa fim.
        """
        element = self._first_from(cursor)
        if element == 0:
            return 0, self.m
        return element, element

    def is_exhausted(self, cursor: int) -> bool:
        return self._first_from(cursor) == 0

    def __iter__(self):
        element, cursor = self.iterate(0)
        while element:
            yield element
            element, cursor = self.iterate(cursor)
