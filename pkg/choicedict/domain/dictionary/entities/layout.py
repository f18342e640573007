from dataclasses import dataclass

from choicedict.core.config.dictionary_config import BarrierMode, DictionaryConfig
from choicedict.core.errors import InvalidArgumentError
from choicedict.domain.bits import wordops


@dataclass(frozen=True)
class DictionaryLayout:
    """Disposição em bits de um dicionário: [cabeçalho][barreira][A][cauda].

    A tem N = ⌊n/2b⌋ células de 2b bits; a cauda tem n′ = n mod 2b bits.
    O campo de barreira é mantido mesmo quando N = 0.
    """
    n: int
    b: int
    word_width: int
    barrier_mode: BarrierMode
    header_bits: int
    barrier_bits: int
    n_cells: int
    tail_bits: int

    @classmethod
    def plan(cls, n: int, config: DictionaryConfig) -> "DictionaryLayout":
        if n < 1:
            raise InvalidArgumentError(f"n deve ser pelo menos 1: {n}")
        b = config.half_width
        length = wordops.bit_length_of(n)
        if length > config.word_width:
            raise InvalidArgumentError(f"n = {n} não cabe numa palavra de {config.word_width} bits")
        if config.barrier_mode is BarrierMode.HIDDEN and b < 2 * length:
            raise InvalidArgumentError(
                f"política b={config.b_policy.value} (b = {b}) exige b ≥ 2⌈log2(n+1)⌉ = {2 * length} no modo hidden"
            )
        if config.barrier_mode is BarrierMode.PLAIN and b < length:
            raise InvalidArgumentError(
                f"política b={config.b_policy.value} (b = {b}) exige b ≥ ⌈log2(n+1)⌉ = {length} no modo plain"
            )
        return cls(
            n=n,
            b=b,
            word_width=config.word_width,
            barrier_mode=config.barrier_mode,
            header_bits=2 * length - 1 if config.self_contained else 0,
            barrier_bits=1 if config.barrier_mode is BarrierMode.HIDDEN else config.word_width,
            n_cells=n // (2 * b),
            tail_bits=n % (2 * b),
        )

    @property
    def segment_bits(self) -> int:
        return 2 * self.b

    @property
    def barrier_offset(self) -> int:
        return self.header_bits

    @property
    def a_offset(self) -> int:
        return self.barrier_offset + self.barrier_bits

    @property
    def a_bits(self) -> int:
        return self.segment_bits * self.n_cells

    @property
    def tail_offset(self) -> int:
        return self.a_offset + self.a_bits

    @property
    def total_bits(self) -> int:
        return self.tail_offset + self.tail_bits

    @property
    def segmented_universe(self) -> int:
        """2bN: maior elemento guardado em A."""
        return self.a_bits

    def locate(self, element: int) -> tuple[int, int]:
        """(célula i, bit dentro de a_i) para ℓ ≤ 2bN; (0, posição na cauda) caso contrário."""
        if element <= self.a_bits:
            return (element - 1) // self.segment_bits + 1, (element - 1) % self.segment_bits
        return 0, element - self.a_bits

    def spans(self) -> list[tuple[str, int]]:
        """Trechos na ordem em que aparecem na memória, seguidos do total."""
        spans = []
        if self.header_bits:
            spans.append(("header", self.header_bits))
        spans.append(("flag" if self.barrier_mode is BarrierMode.HIDDEN else "k", self.barrier_bits))
        spans.append(("A", self.a_bits))
        spans.append(("tail", self.tail_bits))
        spans.append(("total", self.total_bits))
        return spans
