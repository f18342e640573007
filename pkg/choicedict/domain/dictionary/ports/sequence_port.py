from abc import ABC, abstractmethod


class SequencePort(ABC):
    """Port para uma sequência (a_1, …, a_N) de valores, inicialmente zero."""

    n_cells: int

    @abstractmethod
    def read(self, i: int) -> int:
        """Retorna a_i."""
        pass

    @abstractmethod
    def write(self, i: int, x: int) -> None:
        """Atribui a_i := x."""
        pass

    @abstractmethod
    def nonzero(self) -> int:
        """Algum i com a_i ≠ 0, ou 0 se a sequência é toda nula."""
        pass
