from typing import List

from choicedict.core.errors import InvalidArgumentError
from choicedict.domain.dictionary.ports.choice_dictionary_port import ChoiceDictionaryPort


class NaiveSet(ChoiceDictionaryPort):
    """Implementação de referência: vetor de n bits com zeragem explícita O(n)."""

    def __init__(self, n: int):
        if n < 1:
            raise InvalidArgumentError(f"n deve ser pelo menos 1: {n}")
        self.n = n
        self._bits: List[bool] = [False] * n

    def _check(self, element: int) -> None:
        if not 1 <= element <= self.n:
            raise InvalidArgumentError(f"elemento {element} fora de [1, {self.n}]")

    def insert(self, element: int) -> None:
        self._check(element)
        self._bits[element - 1] = True

    def delete(self, element: int) -> None:
        self._check(element)
        self._bits[element - 1] = False

    def contains(self, element: int) -> bool:
        self._check(element)
        return self._bits[element - 1]

    def choice(self) -> int:
        """Menor elemento de S, ou 0."""
        for index, present in enumerate(self._bits):
            if present:
                return index + 1
        return 0

    def elements(self) -> List[int]:
        return [index + 1 for index, present in enumerate(self._bits) if present]

    def __len__(self) -> int:
        return sum(self._bits)
