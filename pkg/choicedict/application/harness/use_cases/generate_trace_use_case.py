import itertools
import random
from enum import Enum
from typing import Iterator, List, Optional, Sequence

from choicedict.application.harness.dtos.trace_dtos import Op, OpKind, OpTrace
from choicedict.core.config.dictionary_config import DictionaryConfig
from choicedict.core.config.logging import get_logger
from choicedict.core.errors import InvalidArgumentError

logger = get_logger(__name__)


class TraceProfile(str, Enum):
    UNIFORM = "uniform"
    INSERT_HEAVY = "insert-heavy"
    BARRIER_THRASH = "barrier-thrash"
    EXHAUSTIVE_SMALL = "exhaustive-small"


def iter_exhaustive_traces(
    n_cells: int,
    length: int,
    alphabet: Sequence[int] = (0, 1, 2),
    b: int = 4,
) -> Iterator[OpTrace]:
    """Todas as sequências de ``length`` escritas write(i, x), x ∈ alphabet.

    Os prefixos cobrem as sequências mais curtas.
    """
    pairs = [(i, x) for i in range(1, n_cells + 1) for x in alphabet]
    for combo in itertools.product(pairs, repeat=length):
        yield OpTrace(
            ops=[Op(OpKind.WRITE, pair) for pair in combo],
            n_cells=n_cells,
            b=b,
        )


class GenerateTraceUseCase:
    """Caso de uso para geração determinística de traces a partir de uma seed."""

    def execute(
        self,
        seed: int,
        length: int,
        profile: TraceProfile | str = TraceProfile.UNIFORM,
        universe: Optional[int] = None,
        n_cells: Optional[int] = None,
        b: Optional[int] = None,
        config: Optional[DictionaryConfig] = None,
    ) -> OpTrace:
        """Gera uma trace de conjunto (``universe``) ou de sequência (``n_cells``, ``b``).

        No perfil barrier-thrash de conjunto, os segmentos têm os 2b bits de ``config``.

        Raises:
            InvalidArgumentError: Se o universo ou o comprimento forem inválidos
        """
        profile = TraceProfile(profile)
        if length < 1:
            raise InvalidArgumentError("length deve ser pelo menos 1")
        sequence = n_cells is not None
        if sequence and (n_cells < 1 or b is None or b < 1):
            raise InvalidArgumentError("traces de sequência exigem N ≥ 1 e b ≥ 1")
        if not sequence and (universe is None or universe < 1):
            raise InvalidArgumentError("traces de conjunto exigem universe ≥ 1")

        rng = random.Random(seed)
        if profile is TraceProfile.EXHAUSTIVE_SMALL:
            if not sequence:
                raise InvalidArgumentError("exhaustive-small só gera traces de sequência")
            ops = self._exhaustive(seed, length, n_cells)
        elif sequence:
            ops = self._sequence_ops(rng, profile, length, n_cells, b)
        else:
            segment_bits = 2 * (config or DictionaryConfig()).half_width
            ops = self._set_ops(rng, profile, length, universe, segment_bits)
        logger.debug(f"Trace gerada: perfil={profile.value} seed={seed} ops={len(ops)}")
        return OpTrace(ops=ops, seed=seed, universe=None if sequence else universe, n_cells=n_cells, b=b)

    # Traces de sequência --------------------------------------------------

    @staticmethod
    def _exhaustive(seed: int, length: int, n_cells: int, alphabet: Sequence[int] = (0, 1, 2)) -> List[Op]:
        """A sequência de índice ``seed`` na enumeração de iter_exhaustive_traces."""
        pairs = [(i, x) for i in range(1, n_cells + 1) for x in alphabet]
        total = len(pairs) ** length
        index = seed % total
        digits = []
        for _ in range(length):
            index, digit = divmod(index, len(pairs))
            digits.append(digit)
        return [Op(OpKind.WRITE, pairs[d]) for d in reversed(digits)]

    @staticmethod
    def _value(rng: random.Random, b: int, n_cells: int) -> int:
        """Valor não nulo; às vezes com a metade superior igual a um índice de célula."""
        if rng.random() < 0.4:
            pointer = rng.randint(1, n_cells)
            return (pointer << b) | rng.getrandbits(b)
        return rng.randint(1, (1 << (2 * b)) - 1)

    def _sequence_ops(
        self,
        rng: random.Random,
        profile: TraceProfile,
        length: int,
        n_cells: int,
        b: int,
    ) -> List[Op]:
        values = [0] * n_cells
        ops: List[Op] = []
        insert_weight = {TraceProfile.UNIFORM: 0.35, TraceProfile.INSERT_HEAVY: 0.65}.get(profile, 0.45)
        for _ in range(length):
            roll = rng.random()
            if profile is TraceProfile.BARRIER_THRASH and roll < 0.85:
                i, x = self._thrash_write(rng, values, b)
                values[i - 1] = x
                ops.append(Op(OpKind.WRITE, (i, x)))
            elif roll < insert_weight:
                i = rng.randint(1, n_cells)
                x = self._value(rng, b, n_cells)
                values[i - 1] = x
                ops.append(Op(OpKind.WRITE, (i, x)))
            elif roll < insert_weight + 0.25:
                i = rng.randint(1, n_cells)
                values[i - 1] = 0
                ops.append(Op(OpKind.WRITE, (i, 0)))
            elif roll < insert_weight + 0.4:
                ops.append(Op(OpKind.READ, (rng.randint(1, n_cells),)))
            else:
                ops.append(Op(OpKind.NONZERO))
        return ops

    def _thrash_write(self, rng: random.Random, values: List[int], b: int) -> tuple[int, int]:
        """Inserção ou remoção junto à barreira k = número de zeros."""
        n_cells = len(values)
        k = values.count(0)
        zeros = [i + 1 for i, v in enumerate(values) if v == 0]
        nonzeros = [i + 1 for i, v in enumerate(values) if v != 0]
        insertion = k == n_cells or (k > 0 and rng.random() < 0.5)
        if insertion:
            i = k if values[k - 1] == 0 and rng.random() < 0.5 else rng.choice(zeros)
            return i, self._value(rng, b, n_cells)
        i = k + 1 if values[k] != 0 and rng.random() < 0.5 else rng.choice(nonzeros)
        return i, 0

    # Traces de conjunto ---------------------------------------------------

    def _set_ops(
        self,
        rng: random.Random,
        profile: TraceProfile,
        length: int,
        universe: int,
        segment_bits: int,
    ) -> List[Op]:
        members: set[int] = set()
        ops: List[Op] = []
        insert_weight = {TraceProfile.UNIFORM: 0.35, TraceProfile.INSERT_HEAVY: 0.65}.get(profile, 0.45)
        for _ in range(length):
            roll = rng.random()
            if profile is TraceProfile.BARRIER_THRASH and roll < 0.85:
                op = self._thrash_element(rng, members, universe, segment_bits)
            elif roll < insert_weight:
                op = Op(OpKind.INSERT, (rng.randint(1, universe),))
            elif roll < insert_weight + 0.25:
                if members and rng.random() < 0.7:
                    op = Op(OpKind.DELETE, (rng.choice(sorted(members)),))
                else:
                    op = Op(OpKind.DELETE, (rng.randint(1, universe),))
            elif roll < insert_weight + 0.45:
                op = Op(OpKind.CONTAINS, (rng.randint(1, universe),))
            elif roll < insert_weight + 0.6:
                op = Op(OpKind.CHOICE)
            else:
                op = Op(OpKind.ITERATE) if rng.random() < 0.2 else Op(OpKind.CHOICE)
            if op.kind is OpKind.INSERT:
                members.add(op.args[0])
            elif op.kind is OpKind.DELETE:
                members.discard(op.args[0])
            ops.append(op)
        return ops

    @staticmethod
    def _thrash_element(rng: random.Random, members: set[int], universe: int, segment_bits: int) -> Op:
        """Esvazia ou ocupa segmentos inteiros, movendo a barreira do D1."""
        segments = universe // segment_bits
        if segments == 0:
            element = rng.randint(1, universe)
            return Op(OpKind.DELETE if element in members else OpKind.INSERT, (element,))
        occupied = {(e - 1) // segment_bits + 1 for e in members if e <= segments * segment_bits}
        empty = [s for s in range(1, segments + 1) if s not in occupied]
        k = len(empty)
        if k == segments or (k > 0 and rng.random() < 0.5):
            segment = k if k not in occupied and rng.random() < 0.5 else rng.choice(empty)
            offset = rng.randrange(segment_bits)
            return Op(OpKind.INSERT, ((segment - 1) * segment_bits + offset + 1,))
        inside = sorted(e for e in members if e <= segments * segment_bits)
        return Op(OpKind.DELETE, (rng.choice(inside),))
