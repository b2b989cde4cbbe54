"""The 94-symbol working alphabet and byte <-> symbol conversion.

Text mode keeps every printable non-space ASCII byte as a symbol and passes
everything else through untouched.  Binary mode spends two symbols per byte
(base-94 digits), so any file can be pushed through the cipher core.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .errors import ByteOutOfRange, NotInAlphabet, OddSymbolCount

FIRST = 0x21
LAST = 0x7E
SIZE = LAST - FIRST + 1  # 94

ALPHABET = "".join(chr(c) for c in range(FIRST, LAST + 1))
ALPHABET_BYTES = ALPHABET.encode("ascii")


def is_symbol_byte(b: int) -> bool:
    return FIRST <= b <= LAST


def symbol_index(ch: str) -> int:
    """Position of ``ch`` in the alphabet ('!' -> 0, '~' -> 93)."""
    if len(ch) != 1:
        raise NotInAlphabet(f"expected a single character, got {ch!r}")
    code = ord(ch)
    if not FIRST <= code <= LAST:
        raise NotInAlphabet(f"{ch!r} is not in the 94-symbol alphabet")
    return code - FIRST


def symbol_at(j: int) -> str:
    if not 0 <= j < SIZE:
        raise NotInAlphabet(f"symbol index {j} outside 0..{SIZE - 1}")
    return chr(FIRST + j)


@dataclass(frozen=True, slots=True)
class AlphabetSymbol:
    index: int


@dataclass(frozen=True, slots=True)
class PassThrough:
    byte: int


Token = Union[AlphabetSymbol, PassThrough]


def tokenize_text(data: bytes) -> list[Token]:
    return [
        AlphabetSymbol(b - FIRST) if FIRST <= b <= LAST else PassThrough(b)
        for b in data
    ]


def detokenize_text(tokens: Iterable[Token]) -> bytes:
    out = bytearray()
    for tok in tokens:
        if isinstance(tok, AlphabetSymbol):
            out.append(FIRST + tok.index)
        else:
            out.append(tok.byte)
    return bytes(out)


def encode_binary(data: bytes) -> list[int]:
    """Each byte b becomes the digit pair ``[b // 94, b % 94]``."""
    out: list[int] = []
    for b in data:
        out.append(b // SIZE)
        out.append(b % SIZE)
    return out


def decode_binary(symbols: Sequence[int]) -> bytes:
    if len(symbols) % 2:
        raise OddSymbolCount(f"binary stream has odd symbol count {len(symbols)}")
    out = bytearray()
    for pos in range(0, len(symbols), 2):
        hi, lo = symbols[pos], symbols[pos + 1]
        value = hi * SIZE + lo
        if not (0 <= hi <= 2 and 0 <= lo < SIZE) or value > 255:
            raise ByteOutOfRange(
                f"symbol pair ({hi}, {lo}) at position {pos} does not encode a byte"
            )
        out.append(value)
    return bytes(out)


# Lookup tables used by the cipher's fast paths.
BINARY_PAIRS: tuple[bytes, ...] = tuple(
    bytes((FIRST + b // SIZE, FIRST + b % SIZE)) for b in range(256)
)
