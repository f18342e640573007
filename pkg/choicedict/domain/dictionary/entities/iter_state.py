from dataclasses import dataclass
from enum import Enum

from choicedict.core.errors import InvalidArgumentError
from choicedict.domain.bits import wordops
from choicedict.domain.dictionary.entities.layout import DictionaryLayout


class IterPhase(Enum):
    SEGMENTS = 0  # percorrendo mate(k+1), …, mate(N)
    TAIL = 1      # percorrendo a cauda D2
    DONE = 2


_PHASE_BITS = 2


@dataclass(frozen=True)
class IterState:
    """Cursor de iteração.

    Na fase SEGMENTS, ``j`` é a posição corrente em k+1..N e ``offset`` o
    próximo bit a examinar em a_mate(j); o segmento corrente sempre contém
    um elemento em ``offset`` ou acima. Na fase TAIL, ``tail_cursor`` é o
    último elemento da cauda devolvido (0 no início).
    """
    phase: IterPhase
    j: int = 0
    offset: int = 0
    tail_cursor: int = 0

    @classmethod
    def done(cls) -> "IterState":
        return cls(IterPhase.DONE)

    @classmethod
    def tail(cls, cursor: int = 0) -> "IterState":
        return cls(IterPhase.TAIL, tail_cursor=cursor)

    @staticmethod
    def persistent_bits(n: int) -> int:
        """Bits necessários para guardar o cursor empacotado."""
        return wordops.bit_length_of(n) + _PHASE_BITS

    def pack(self, layout: DictionaryLayout) -> int:
        """Posição em [0, n] seguida de 2 bits de fase."""
        if self.phase is IterPhase.SEGMENTS:
            position = (self.j - 1) * layout.segment_bits + self.offset
        elif self.phase is IterPhase.TAIL:
            position = self.tail_cursor
        else:
            position = 0
        if not 0 <= position <= layout.n:
            raise InvalidArgumentError(f"cursor fora de [0, {layout.n}]: {position}")
        return (position << _PHASE_BITS) | self.phase.value

    @classmethod
    def unpack(cls, packed: int, layout: DictionaryLayout) -> "IterState":
        if packed < 0 or packed >> cls.persistent_bits(layout.n):
            raise InvalidArgumentError(f"cursor empacotado inválido: {packed}")
        try:
            phase = IterPhase(packed & wordops.low_mask(_PHASE_BITS))
        except ValueError:
            raise InvalidArgumentError(f"fase inválida no cursor empacotado: {packed}")
        position = packed >> _PHASE_BITS
        if phase is IterPhase.SEGMENTS:
            j, offset = divmod(position, layout.segment_bits)
            return cls(phase, j=j + 1, offset=offset)
        if phase is IterPhase.TAIL:
            return cls.tail(position)
        return cls.done()
