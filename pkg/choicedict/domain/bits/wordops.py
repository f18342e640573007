"""Primitivas de palavra em tempo constante.

msb/lsb usam o contador nativo de bits (``int.bit_length``) por palavra;
operandos de até 2W bits são varridos como duas palavras.
"""
from choicedict.core.errors import InvalidArgumentError

DEFAULT_WORD_WIDTH = 64

_REVERSED_BYTES = bytes(int(f"{v:08b}"[::-1], 2) for v in range(256))


def low_mask(width: int) -> int:
    return (1 << width) - 1


def bit_length_of(n: int) -> int:
    """Retorna |bin(n)| = ⌈log2(n+1)⌉ (0 para n = 0)."""
    if n < 0:
        raise InvalidArgumentError(f"n deve ser não negativo: {n}")
    return n.bit_length()


def _check_operand(x: int, word_width: int) -> None:
    if x <= 0:
        raise InvalidArgumentError("operando deve ser não nulo e positivo")
    if x >> (2 * word_width):
        raise InvalidArgumentError(f"operando excede 2W = {2 * word_width} bits")


def _msb_word(x: int) -> int:
    return x.bit_length() - 1


def _lsb_word(x: int) -> int:
    return (x & -x).bit_length() - 1


def msb(x: int, word_width: int = DEFAULT_WORD_WIDTH) -> int:
    """max{ j : bit j de x é 1 }."""
    _check_operand(x, word_width)
    high = x >> word_width
    if high:
        return word_width + _msb_word(high)
    return _msb_word(x)


def lsb(x: int, word_width: int = DEFAULT_WORD_WIDTH) -> int:
    """min{ j : bit j de x é 1 }."""
    _check_operand(x, word_width)
    low = x & low_mask(word_width)
    if low:
        return _lsb_word(low)
    return word_width + _lsb_word(x >> word_width)


def lower_half(x: int, b: int) -> int:
    if x < 0 or x >> (2 * b):
        raise InvalidArgumentError(f"x deve ter no máximo {2 * b} bits")
    return x & low_mask(b)


def upper_half(x: int, b: int) -> int:
    if x < 0 or x >> (2 * b):
        raise InvalidArgumentError(f"x deve ter no máximo {2 * b} bits")
    return x >> b


def pack(lo: int, hi: int, b: int) -> int:
    if lo < 0 or hi < 0 or lo >> b or hi >> b:
        raise InvalidArgumentError(f"metades devem ter no máximo {b} bits")
    return lo | (hi << b)


def reverse_bits(x: int, width: int) -> int:
    """Inverte a ordem dos ``width`` bits menos significativos de x, byte a byte."""
    if x < 0 or x >> width:
        raise InvalidArgumentError(f"x deve ter no máximo {width} bits")
    n_bytes = (width + 7) // 8
    raw = x.to_bytes(n_bytes, "little")
    flipped = int.from_bytes(bytes(_REVERSED_BYTES[v] for v in raw), "big")
    return flipped >> (8 * n_bytes - width)
