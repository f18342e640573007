from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, field_validator


class BPolicy(str, Enum):
    """Escolha da meia-largura b em função de W."""
    TWO_W = "2w"
    W = "w"
    HALF_W = "w/2"

    def half_width(self, word_width: int) -> int:
        if self is BPolicy.TWO_W:
            return 2 * word_width
        if self is BPolicy.W:
            return word_width
        return word_width // 2


class BarrierMode(str, Enum):
    """Onde a barreira k é guardada."""
    HIDDEN = "hidden"  # 1 bit de flag + k escondido em A[1]
    PLAIN = "plain"    # palavra de W bits separada


class Sizing(str, Enum):
    EXTERNAL = "external"
    SELF_CONTAINED = "self_contained"


class Endianness(str, Enum):
    BIG = "big"
    LITTLE = "little"


class Mode(str, Enum):
    """Vocabulário de --mode da CLI."""
    HIDDEN = "hidden"
    PLAIN = "plain"
    SELF_CONTAINED = "self-contained"


class DictionaryConfig(BaseModel):
    """Configuração de um dicionário de escolha."""

    model_config = ConfigDict(frozen=True)

    word_width: int = Field(default=64, description="Largura W da palavra da máquina")
    b_policy: BPolicy = Field(default=BPolicy.TWO_W, description="Política de escolha de b")
    barrier_mode: BarrierMode = Field(default=BarrierMode.HIDDEN, description="Modo de armazenamento de k")
    sizing: Sizing = Field(default=Sizing.EXTERNAL, description="Tamanho externo ou autocontido")
    endianness: Endianness = Field(default=Endianness.BIG, description="Convenção do cabeçalho γ′")

    @field_validator("word_width")
    @classmethod
    def _check_word_width(cls, value: int) -> int:
        if value not in (8, 16, 32, 64):
            raise ValueError("word_width deve ser 8, 16, 32 ou 64")
        return value

    @property
    def half_width(self) -> int:
        return self.b_policy.half_width(self.word_width)

    @property
    def self_contained(self) -> bool:
        return self.sizing is Sizing.SELF_CONTAINED

    @classmethod
    def from_mode(
        cls,
        mode: Mode | str,
        b_policy: BPolicy | str = BPolicy.TWO_W,
        word_width: int = 64,
        endianness: Endianness | str = Endianness.BIG,
    ) -> "DictionaryConfig":
        mode = Mode(mode)
        return cls(
            word_width=word_width,
            b_policy=BPolicy(b_policy),
            barrier_mode=BarrierMode.PLAIN if mode is Mode.PLAIN else BarrierMode.HIDDEN,
            sizing=Sizing.SELF_CONTAINED if mode is Mode.SELF_CONTAINED else Sizing.EXTERNAL,
            endianness=Endianness(endianness),
        )

    @property
    def mode(self) -> Mode:
        if self.barrier_mode is BarrierMode.PLAIN:
            return Mode.PLAIN
        return Mode.SELF_CONTAINED if self.self_contained else Mode.HIDDEN

    def expected_footprint(self, n: int) -> int:
        """Fórmula fechada do espaço: n + 1 (hidden), n + W (plain), mais o cabeçalho γ′."""
        overhead = 1 if self.barrier_mode is BarrierMode.HIDDEN else self.word_width
        header = 2 * n.bit_length() - 1 if self.self_contained else 0
        return n + overhead + header
