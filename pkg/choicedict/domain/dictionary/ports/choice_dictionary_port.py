from abc import ABC, abstractmethod


class ChoiceDictionaryPort(ABC):
    """Port para um dicionário de escolha sobre o universo {1, …, n}."""

    n: int

    @abstractmethod
    def insert(self, element: int) -> None:
        """Substitui S por S ∪ {element}."""
        pass

    @abstractmethod
    def delete(self, element: int) -> None:
        """Substitui S por S \\ {element}."""
        pass

    @abstractmethod
    def contains(self, element: int) -> bool:
        """Informa se element ∈ S."""
        pass

    @abstractmethod
    def choice(self) -> int:
        """Retorna um elemento (arbitrário) de S, ou 0 se S é vazio."""
        pass

    @abstractmethod
    def elements(self) -> list[int]:
        """Enumera S (sem modificações durante a enumeração)."""
        pass
