from typing import List

from choicedict.core.errors import InvalidArgumentError
from choicedict.domain.dictionary.ports.sequence_port import SequencePort


class PlainArray(SequencePort):
    """Sequência de referência de N valores de 2b bits, zerada explicitamente."""

    def __init__(self, n_cells: int, b: int):
        if n_cells < 1:
            raise InvalidArgumentError("N deve ser pelo menos 1")
        self.n_cells = n_cells
        self.b = b
        self._values: List[int] = [0] * n_cells

    def _check(self, i: int) -> None:
        if not 1 <= i <= self.n_cells:
            raise InvalidArgumentError(f"índice {i} fora de [1, {self.n_cells}]")

    def read(self, i: int) -> int:
        self._check(i)
        return self._values[i - 1]

    def write(self, i: int, x: int) -> None:
        self._check(i)
        if x < 0 or x >> (2 * self.b):
            raise InvalidArgumentError(f"valor {x} não cabe em 2b = {2 * self.b} bits")
        self._values[i - 1] = x

    def nonzero(self) -> int:
        for index, value in enumerate(self._values):
            if value:
                return index + 1
        return 0

    @property
    def zeros(self) -> int:
        """Quantidade de a_i nulos (a barreira esperada)."""
        return self._values.count(0)

    def values(self) -> List[int]:
        return list(self._values)
