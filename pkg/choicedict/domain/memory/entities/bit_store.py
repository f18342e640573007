import random
from array import array
from contextlib import contextmanager
from typing import Iterator

from choicedict.core.config.logging import get_logger
from choicedict.core.errors import BoundsError, InvalidArgumentError
from choicedict.domain.bits.wordops import low_mask
from choicedict.domain.memory.entities.fill_policy import FillKind, FillPolicy

logger = get_logger(__name__)


def _typecode_for(word_width: int) -> str:
    for code in ("B", "H", "I", "L", "Q"):
        if array(code).itemsize * 8 == word_width:
            return code
    raise InvalidArgumentError(f"largura de palavra sem typecode nativo: {word_width}")


class BitStore:
    """Memória endereçável por bit com orçamento exato e contador de acessos.

    O bit j de um campo de ``len`` bits é o bit armazenado ``offset + j``;
    dentro de cada palavra a ordem é little-endian. Um campo tem no máximo
    2W bits e pode cruzar até três palavras.
    """

    def __init__(
        self,
        capacity_bits: int,
        fill_policy: FillPolicy | None = None,
        word_width: int = 64,
    ) -> None:
        if capacity_bits < 1:
            raise InvalidArgumentError("capacity_bits deve ser pelo menos 1")
        self.capacity_bits = capacity_bits
        self.word_width = word_width
        self.fill_policy = fill_policy or FillPolicy.zeros()
        self._typecode = _typecode_for(word_width)
        self._full = low_mask(word_width)
        self._words = array(self._typecode, self._garbage(self.word_count))
        self._accesses = 0
        self._counting = True

    @classmethod
    def create(
        cls,
        capacity_bits: int,
        fill_policy: FillPolicy | None = None,
        word_width: int = 64,
    ) -> "BitStore":
        return cls(capacity_bits, fill_policy, word_width)

    @property
    def word_count(self) -> int:
        return -(-self.capacity_bits // self.word_width)

    @staticmethod
    def max_words_touched(length: int, word_width: int) -> int:
        """Palavras que um campo de ``length`` bits pode tocar em qualquer alinhamento."""
        if length <= 0:
            return 0
        return (length + word_width - 2) // word_width + 1

    @staticmethod
    def access_ceiling(field_reads: int, field_writes: int, widest_field: int, word_width: int) -> int:
        """Teto de acessos para uma sequência de leituras e escritas de campos.

        Uma escrita parcial custa leitura + escrita de cada palavra tocada.
        """
        span = BitStore.max_words_touched(widest_field, word_width)
        return (field_reads + 2 * field_writes) * span

    def _garbage(self, count: int) -> list[int]:
        policy = self.fill_policy
        if policy.kind is FillKind.ZEROS:
            return [0] * count
        if policy.kind is FillKind.ONES:
            return [self._full] * count
        if policy.kind is FillKind.RANDOM:
            rng = random.Random(policy.seed)
            return [rng.getrandbits(self.word_width) for _ in range(count)]
        pattern = policy.pattern
        return [pattern[q % len(pattern)] & self._full for q in range(count)]

    # Contador -------------------------------------------------------------

    def reset_counter(self) -> None:
        self._accesses = 0

    def read_counter(self) -> int:
        return self._accesses

    @contextmanager
    def uncounted(self) -> Iterator["BitStore"]:
        """Suspende a contagem (inspeção pelo checker e dumps de depuração)."""
        previous = self._counting
        self._counting = False
        try:
            yield self
        finally:
            self._counting = previous

    def _count(self, n: int) -> None:
        if self._counting:
            self._accesses += n

    # Acesso a campos ------------------------------------------------------

    def _check_field(self, offset: int, length: int) -> None:
        if length < 0 or length > 2 * self.word_width:
            raise InvalidArgumentError(f"len deve estar em [0, {2 * self.word_width}]: {length}")
        if offset < 0 or offset + length > self.capacity_bits:
            raise BoundsError(
                f"campo [{offset}, {offset + length}) fora da capacidade de {self.capacity_bits} bits"
            )

    def read_bits(self, offset: int, length: int) -> int:
        self._check_field(offset, length)
        if length == 0:
            return 0
        w = self.word_width
        first = offset // w
        last = (offset + length - 1) // w
        acc = 0
        for idx, q in enumerate(range(first, last + 1)):
            acc |= self._words[q] << (idx * w)
        self._count(last - first + 1)
        return (acc >> (offset - first * w)) & low_mask(length)

    def write_bits(self, offset: int, length: int, value: int) -> None:
        self._check_field(offset, length)
        if value < 0 or value >> length:
            raise InvalidArgumentError(f"valor {value} não cabe em {length} bits")
        if length == 0:
            return
        w = self.word_width
        end = offset + length
        for q in range(offset // w, (end - 1) // w + 1):
            base = q * w
            lo = max(offset, base) - base
            hi = min(end, base + w) - base
            part = (value >> (base + lo - offset)) & low_mask(hi - lo)
            if lo == 0 and hi == w:
                self._words[q] = part
                self._count(1)
            else:
                mask = low_mask(hi - lo) << lo
                self._words[q] = (self._words[q] & ~mask) | (part << lo)
                self._count(2)

    # Cópia e serialização -------------------------------------------------

    def copy(self) -> "BitStore":
        clone = BitStore.__new__(BitStore)
        clone.__dict__.update(self.__dict__)
        clone._words = array(self._typecode, self._words)
        return clone

    def dump(self) -> bytes:
        """Conteúdo bruto, bit menos significativo primeiro em cada byte."""
        size = self.word_width // 8
        raw = b"".join(word.to_bytes(size, "little") for word in self._words)
        n_bytes = -(-self.capacity_bits // 8)
        out = bytearray(raw[:n_bytes])
        spare = n_bytes * 8 - self.capacity_bits
        if spare:
            out[-1] &= 0xFF >> spare
        return bytes(out)

    @classmethod
    def load(cls, data: bytes, capacity_bits: int, word_width: int = 64) -> "BitStore":
        if len(data) * 8 < capacity_bits:
            raise InvalidArgumentError(
                f"{len(data)} bytes não cobrem {capacity_bits} bits"
            )
        store = cls(capacity_bits, FillPolicy.zeros(), word_width)
        size = word_width // 8
        padded = bytes(data[: -(-capacity_bits // 8)]).ljust(store.word_count * size, b"\0")
        for q in range(store.word_count):
            store._words[q] = int.from_bytes(padded[q * size:(q + 1) * size], "little")
        spare = store.word_count * word_width - capacity_bits
        if spare:
            store._words[-1] &= low_mask(word_width - spare)
        logger.debug(f"BitStore carregado com {capacity_bits} bits")
        return store

    def words(self) -> tuple[int, ...]:
        return tuple(self._words)
