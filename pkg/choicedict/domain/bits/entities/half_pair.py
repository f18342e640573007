from dataclasses import dataclass

from choicedict.core.errors import InvalidArgumentError
from choicedict.domain.bits import wordops


@dataclass(frozen=True)
class HalfPair:
    """Uma quantidade de 2b bits vista como (metade inferior, metade superior)."""
    lower: int
    upper: int
    b: int

    def __post_init__(self):
        if self.b < 1:
            raise InvalidArgumentError("b deve ser positivo")
        if not (0 <= self.lower < 1 << self.b and 0 <= self.upper < 1 << self.b):
            raise InvalidArgumentError(f"metades devem ter no máximo {self.b} bits")

    @classmethod
    def from_int(cls, x: int, b: int) -> "HalfPair":
        return cls(lower=wordops.lower_half(x, b), upper=wordops.upper_half(x, b), b=b)

    def pack(self) -> int:
        return wordops.pack(self.lower, self.upper, self.b)
