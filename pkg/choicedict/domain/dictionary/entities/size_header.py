"""Cabeçalho autodelimitado γ′ com o tamanho n do universo.

Big-endian: 0^(L−1)·bin(n). Little-endian: binhat(n)·0^(L−1), em que binhat
move o 1 inicial de bin(n) para o fim. L = |bin(n)| e o código tem 2L − 1 bits.

Na memória o cabeçalho começa no bit 0 da região. Big-endian grava o
caractere t do código no bit t; little-endian grava o código lido como
numeral binário nos bits baixos. Em ambos os casos a decodificação lê uma
única janela de até 2W bits e usa msb/lsb.
"""
from dataclasses import dataclass

from choicedict.core.config.dictionary_config import Endianness
from choicedict.core.errors import DecodeError, InvalidArgumentError
from choicedict.domain.bits import wordops
from choicedict.domain.memory.entities.bit_store import BitStore


def gamma_encode(n: int, endianness: Endianness = Endianness.BIG) -> str:
    if n < 1:
        raise InvalidArgumentError(f"n deve ser pelo menos 1: {n}")
    binary = format(n, "b")
    padding = "0" * (len(binary) - 1)
    if Endianness(endianness) is Endianness.BIG:
        return padding + binary
    return binary[1:] + "1" + padding


def gamma_decode(bits: str, endianness: Endianness = Endianness.BIG) -> tuple[int, int]:
    """Decodifica um código no início (big) ou no fim (little) de ``bits``.

    Retorna ``(n, bits consumidos)``.
    """
    if set(bits) - {"0", "1"}:
        raise DecodeError(f"cadeia com caracteres não binários: '{bits}'")
    if Endianness(endianness) is Endianness.BIG:
        zeros = bits.find("1")
        if zeros < 0:
            raise DecodeError("nenhum 1 encontrado: prefixo γ′ inválido")
        length = zeros + 1
        if len(bits) < 2 * length - 1:
            raise DecodeError(f"código truncado: esperados {2 * length - 1} bits")
        return int(bits[zeros:zeros + length], 2), 2 * length - 1
    stripped = bits.rstrip("0")
    if not stripped:
        raise DecodeError("nenhum 1 encontrado: sufixo γ′ inválido")
    length = len(bits) - len(stripped) + 1
    if len(bits) < 2 * length - 1:
        raise DecodeError(f"código truncado: esperados {2 * length - 1} bits")
    hat = stripped[len(stripped) - length:]
    return int("1" + hat[:-1], 2), 2 * length - 1


@dataclass(frozen=True)
class SizeHeader:
    n: int
    endianness: Endianness = Endianness.BIG

    @property
    def code(self) -> str:
        return gamma_encode(self.n, self.endianness)

    @property
    def length(self) -> int:
        return 2 * wordops.bit_length_of(self.n) - 1

    def field_value(self) -> int:
        """Valor do campo de ``length`` bits gravado a partir do offset do cabeçalho."""
        if self.endianness is Endianness.BIG:
            return wordops.reverse_bits(self.n, self.length)
        return int(self.code, 2)

    def write(self, store: BitStore, offset: int = 0) -> None:
        store.write_bits(offset, self.length, self.field_value())

    @classmethod
    def read(
        cls,
        store: BitStore,
        offset: int = 0,
        endianness: Endianness = Endianness.BIG,
    ) -> "SizeHeader":
        """Decodifica o cabeçalho com uma leitura de janela, sem varrer o corpo."""
        word_width = store.word_width
        window = min(2 * word_width, store.capacity_bits - offset)
        if window < 1:
            raise DecodeError("região vazia: nenhum cabeçalho para decodificar")
        value = store.read_bits(offset, window)
        if value == 0:
            raise DecodeError(f"janela de {window} bits toda nula: cabeçalho γ′ inválido")
        if Endianness(endianness) is Endianness.LITTLE:
            zeros = wordops.lsb(value, word_width)
            length = zeros + 1
            if length > word_width or 2 * length - 1 > window:
                raise DecodeError(f"cabeçalho γ′ de {2 * length - 1} bits excede a janela de {window} bits")
            n = ((value >> length) & wordops.low_mask(length - 1)) | (1 << zeros)
            return cls(n=n, endianness=Endianness.LITTLE)
        view = wordops.reverse_bits(value, window)
        length = window - wordops.msb(view, word_width)
        if length > word_width or 2 * length - 1 > window:
            raise DecodeError(f"cabeçalho γ′ de {2 * length - 1} bits excede a janela de {window} bits")
        n = (view >> (window - (2 * length - 1))) & wordops.low_mask(length)
        return cls(n=n, endianness=Endianness.BIG)
