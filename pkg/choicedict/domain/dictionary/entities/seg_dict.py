"""Sequência (a_1, …, a_N) de valores de 2b bits, inicialmente zero, sobre memória arbitrária.

Esquema de armazenamento:

* array A de N células de 2b bits; a metade superior de cada célula guarda
  um campo ``mate`` que codifica um emparelhamento entre a esquerda
  {1..k} e a direita {k+1..N} da barreira k;
* i e j são parceiros sse mate(A[i]) = j, mate(A[j]) = i e exatamente um
  deles está à esquerda da barreira;
* i é forte se (emparelhado e i ≤ k) ou (livre e i > k); a_i = 0 sse i é fraco;
  forte à direita: a_i = A[i]; forte à esquerda: a_i = (inf(A[i]), inf(A[mate(i)])).

No modo ``hidden`` o campo mate ocupa os bits [0, m) da metade superior,
m = ⌈log2(N+1)⌉, e k (quando k ≥ 1) fica nos bits [m, 2m) da metade superior
de A[1], com um único bit de flag fora de A. No modo ``plain`` a metade
superior inteira é o campo mate e k ocupa uma palavra de W bits.
"""
from typing import Iterator, Optional

from choicedict.core.config.dictionary_config import BarrierMode
from choicedict.core.config.logging import get_logger
from choicedict.core.errors import InvalidArgumentError
from choicedict.domain.bits import wordops
from choicedict.domain.bits.entities.half_pair import HalfPair
from choicedict.domain.dictionary.entities.write_case import WriteCase
from choicedict.domain.dictionary.ports.sequence_port import SequencePort
from choicedict.domain.memory.entities.bit_store import BitStore

logger = get_logger(__name__)

# (leituras de campo, escritas de campo) no pior caso de cada operação pública
_FIELD_ACCESSES: dict[str, tuple[int, int]] = {
    "init": (0, 2),
    "mate": (4, 0),
    "read": (6, 0),
    "nonzero": (4, 0),
    "simple_write": (4, 3),
    "write": (17, 11),
    "enumerate": (4, 0),
}


class SegDict(SequencePort):
    """Estrutura de N células com barreira e emparelhamento (inicialização O(1))."""

    def __init__(
        self,
        store: BitStore,
        offset: int,
        b: int,
        n_cells: int,
        barrier_mode: BarrierMode = BarrierMode.HIDDEN,
    ) -> None:
        if n_cells < 1:
            raise InvalidArgumentError("N deve ser pelo menos 1")
        if b < 1:
            raise InvalidArgumentError("b deve ser positivo")
        if b > 2 * store.word_width:
            raise InvalidArgumentError(f"b = {b} excede 2W = {2 * store.word_width}")
        self.store = store
        self.offset = offset
        self.b = b
        self.n_cells = n_cells
        self.barrier_mode = barrier_mode
        self.m = wordops.bit_length_of(n_cells)
        self.hidden = barrier_mode is BarrierMode.HIDDEN
        if self.hidden and b < 2 * self.m:
            raise InvalidArgumentError(
                f"modo hidden exige b ≥ 2⌈log2(N+1)⌉ = {2 * self.m}, recebido b = {b}"
            )
        if not self.hidden and b < self.m:
            raise InvalidArgumentError(f"modo plain exige b ≥ ⌈log2(N+1)⌉ = {self.m}, recebido b = {b}")
        self.field_width = self.m if self.hidden else b
        self.barrier_bits = 1 if self.hidden else store.word_width
        self.a_offset = offset + self.barrier_bits
        # bits [m, 2m) da metade superior de A[1]
        self.hidden_k_offset = self.a_offset + b + self.m
        if offset < 0 or offset + self.size_bits > store.capacity_bits:
            raise InvalidArgumentError(
                f"região de {self.size_bits} bits em {offset} não cabe no BitStore de {store.capacity_bits} bits"
            )
        self.last_write_case: Optional[WriteCase] = None

    @classmethod
    def init(
        cls,
        store: BitStore,
        offset: int,
        b: int,
        n_cells: int,
        barrier_mode: BarrierMode = BarrierMode.HIDDEN,
    ) -> "SegDict":
        """Coloca a barreira em k = N; nenhuma outra célula é tocada."""
        sd = cls(store, offset, b, n_cells, barrier_mode)
        sd._store_k(n_cells)
        logger.debug(f"SegDict inicializado: N={n_cells} b={b} modo={barrier_mode.value}")
        return sd

    @classmethod
    def attach(
        cls,
        store: BitStore,
        offset: int,
        b: int,
        n_cells: int,
        barrier_mode: BarrierMode = BarrierMode.HIDDEN,
    ) -> "SegDict":
        return cls(store, offset, b, n_cells, barrier_mode)

    @property
    def size_bits(self) -> int:
        return self.barrier_bits + 2 * self.b * self.n_cells

    def access_ceiling(self, operation: str) -> int:
        reads, writes = _FIELD_ACCESSES[operation]
        widest = max(self.b, self.barrier_bits)
        return BitStore.access_ceiling(reads, writes, widest, self.store.word_width)

    # Campos brutos --------------------------------------------------------

    def _cell(self, i: int) -> int:
        return self.a_offset + (i - 1) * 2 * self.b

    def _lower(self, i: int) -> int:
        return self.store.read_bits(self._cell(i), self.b)

    def _upper(self, i: int) -> int:
        return self.store.read_bits(self._cell(i) + self.b, self.b)

    def _set_lower(self, i: int, value: int) -> None:
        self.store.write_bits(self._cell(i), self.b, value)

    def _set_upper(self, i: int, value: int) -> None:
        self.store.write_bits(self._cell(i) + self.b, self.b, value)

    def _mate_field(self, i: int) -> int:
        return self.store.read_bits(self._cell(i) + self.b, self.field_width)

    def _write_mate_field(self, i: int, j: int) -> None:
        self.store.write_bits(self._cell(i) + self.b, self.field_width, j)

    def _load_k(self) -> int:
        if not self.hidden:
            return self.store.read_bits(self.offset, self.barrier_bits)
        if self.store.read_bits(self.offset, 1) == 0:
            return 0
        return self.store.read_bits(self.hidden_k_offset, self.m)

    def _store_k(self, k: int) -> None:
        if not self.hidden:
            self.store.write_bits(self.offset, self.barrier_bits, k)
        elif k >= 1:
            self.store.write_bits(self.offset, 1, 1)
            self.store.write_bits(self.hidden_k_offset, self.m, k)
        else:
            self.store.write_bits(self.offset, 1, 0)

    # Núcleo (k transitório passado explicitamente) -------------------------

    def _mate(self, i: int, k: int) -> int:
        j = self._mate_field(i)
        in_range = 1 <= j <= self.n_cells
        # a leitura do campo do parceiro é incondicional
        back = self._mate_field(j if in_range else i)
        if in_range and (i <= k < j or j <= k < i) and back == i:
            return j
        return i

    def _read_with_mate(self, i: int, k: int) -> tuple[int, int]:
        j = self._mate(i, k)
        if j <= k:
            return 0, j
        if i > k:
            return wordops.pack(self._lower(i), self._upper(i), self.b), j
        return wordops.pack(self._lower(i), self._lower(j), self.b), j

    def _read(self, i: int, k: int) -> int:
        return self._read_with_mate(i, k)[0]

    def _simple_write(self, i: int, x: int, k: int) -> None:
        halves = HalfPair.from_int(x, self.b)
        if i <= k:
            j = self._mate(i, k)
            self._set_lower(i, halves.lower)
            self._set_lower(j, halves.upper)
        else:
            self._set_lower(i, halves.lower)
            self._set_upper(i, halves.upper)
            self._sever_spurious_edge(i, k)

    def _sever_spurious_edge(self, i: int, k: int) -> None:
        j = self._mate(i, k)
        if j != i:
            self._write_mate_field(j, j)

    def _match(self, i: int, j: int) -> None:
        self._write_mate_field(i, j)
        self._write_mate_field(j, i)

    def _copy_lower_half(self, source: int, target: int) -> None:
        self._set_lower(target, self._lower(source))

    def _restore_crossing_value(self, index: int, value: int, k: int) -> None:
        self._simple_write(index, value, k)

    def _restore_deleted_neighbour(self, index: int, value: int, k: int) -> None:
        self._simple_write(index, value, k)

    # Operações públicas ---------------------------------------------------

    def _check_index(self, i: int) -> None:
        if not 1 <= i <= self.n_cells:
            raise InvalidArgumentError(f"índice {i} fora de [1, {self.n_cells}]")

    def _check_value(self, x: int) -> None:
        if x < 0 or x >> (2 * self.b):
            raise InvalidArgumentError(f"valor {x} não cabe em 2b = {2 * self.b} bits")

    def barrier(self) -> int:
        return self._load_k()

    def mate(self, i: int) -> int:
        self._check_index(i)
        return self._mate(i, self._load_k())

    def read(self, i: int) -> int:
        self._check_index(i)
        return self._read(i, self._load_k())

    def nonzero(self) -> int:
        k = self._load_k()
        if k == self.n_cells:
            return 0
        return self._mate(self.n_cells, k)

    def simple_write(self, i: int, x: int) -> None:
        """Escrita direta; exige i forte e x ≠ 0 (o chamador preserva o invariante)."""
        self._check_index(i)
        self._check_value(x)
        self._simple_write(i, x, self._load_k())

    def write(self, i: int, x: int) -> None:
        self._check_index(i)
        self._check_value(x)
        k = self._load_k()
        k_before = k
        x0, i_mate = self._read_with_mate(i, k)
        if x != 0:
            if x0 == 0:
                # inserção: k̃ = k atravessa a barreira
                k_mate = self._mate(k, k)
                case = WriteCase.classify(True, i, i_mate, k, k_mate, k)
                u = self._read(k, k)
                k -= 1
                if k >= 1:
                    self._store_k(k)
                self._restore_crossing_value(k + 1, u, k)
                if i != k_mate:
                    self._match(i_mate, k_mate)
                    self._copy_lower_half(i, k_mate)
            else:
                case = WriteCase.UPDATE
            self._simple_write(i, x, k)
        elif x0 != 0:
            # remoção: k̃ = k + 1 atravessa a barreira
            k_mate = self._mate(k + 1, k)
            case = WriteCase.classify(False, i, i_mate, k + 1, k_mate, k)
            v = self._read(k_mate, k)
            k += 1
            if k_before >= 1:
                self._store_k(k)
            self._match(i_mate, k_mate)
            if k_mate != i:
                self._restore_deleted_neighbour(k_mate, v, k)
        else:
            case = WriteCase.NOOP
        if k != k_before and 0 in (k, k_before):
            # transições 1 → 0 e 0 → 1 só gravam depois do corpo
            self._store_k(k)
        self.last_write_case = case

    def enumerate(self, cursor: int = 0) -> tuple[int, int]:
        """Próximo índice com a_i ≠ 0: mate(j) para j = k+1..N.

        ``cursor`` é o próximo j (0 no início). Retorna ``(índice, cursor)``;
        índice 0 significa fim.
        """
        k = self._load_k()
        j = cursor or k + 1
        if j > self.n_cells:
            return 0, self.n_cells + 1
        return self._mate(j, k), j + 1

    def __iter__(self) -> Iterator[int]:
        index, cursor = self.enumerate(0)
        while index:
            yield index
            index, cursor = self.enumerate(cursor)

    # Depuração ------------------------------------------------------------

    def mate_field(self, i: int) -> int:
        """Conteúdo bruto do campo mate de A[i]."""
        self._check_index(i)
        return self._mate_field(i)

    def barrier_fields(self) -> tuple[Optional[int], int]:
        """(flag, campo de k) brutos; flag é None no modo plain."""
        if not self.hidden:
            return None, self.store.read_bits(self.offset, self.barrier_bits)
        return self.store.read_bits(self.offset, 1), self.store.read_bits(self.hidden_k_offset, self.m)

    def dump_state(self) -> str:
        """Uma linha por célula mais "k=… flag=…"; não conta acessos."""
        with self.store.uncounted():
            k = self._load_k()
            lines = []
            for i in range(1, self.n_cells + 1):
                j = self._mate(i, k)
                strong = (j != i) == (i <= k)
                hidden = "-"
                if self.hidden and i == 1 and k >= 1:
                    hidden = str(self.store.read_bits(self.hidden_k_offset, self.m))
                lines.append(
                    f"{i}: lower={self._lower(i)} upper(mate={self._mate_field(i)}, hidden={hidden}) "
                    f"{'strong' if strong else 'weak'} {'left' if i <= k else 'right'}"
                )
            flag = self.store.read_bits(self.offset, 1) if self.hidden else "-"
            lines.append(f"k={k} flag={flag}")
        return "\n".join(lines)
