from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from choicedict.core.errors import InvalidArgumentError


class FillKind(Enum):
    """Conteúdo inicial ("lixo") da memória."""
    ZEROS = "zeros"
    ONES = "ones"
    RANDOM = "random"
    CRAFTED = "crafted"


@dataclass(frozen=True)
class FillPolicy:
    kind: FillKind = FillKind.ZEROS
    seed: Optional[int] = None
    pattern: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind is FillKind.RANDOM and self.seed is None:
            raise InvalidArgumentError("política random exige seed")
        if self.kind is FillKind.CRAFTED and not self.pattern:
            raise InvalidArgumentError("política crafted exige um padrão não vazio")

    @classmethod
    def zeros(cls) -> "FillPolicy":
        return cls(FillKind.ZEROS)

    @classmethod
    def ones(cls) -> "FillPolicy":
        return cls(FillKind.ONES)

    @classmethod
    def random(cls, seed: int) -> "FillPolicy":
        return cls(FillKind.RANDOM, seed=seed)

    @classmethod
    def crafted(cls, pattern: Tuple[int, ...]) -> "FillPolicy":
        """Palavras repetidas ciclicamente a partir da palavra 0."""
        return cls(FillKind.CRAFTED, pattern=tuple(pattern))

    @classmethod
    def parse(cls, text: str) -> "FillPolicy":
        """Converte o vocabulário da CLI (zeros, ones, random:SEED).

        ``crafted`` depende do layout e é montado pelo harness.
        """
        text = text.strip().lower()
        if text == "zeros":
            return cls.zeros()
        if text == "ones":
            return cls.ones()
        if text.startswith("random:"):
            try:
                return cls.random(int(text.split(":", 1)[1]))
            except ValueError:
                raise InvalidArgumentError(f"seed inválida em '{text}'")
        raise InvalidArgumentError(f"política de preenchimento desconhecida: '{text}'")

    def describe(self) -> str:
        if self.kind is FillKind.RANDOM:
            return f"random:{self.seed}"
        return self.kind.value
