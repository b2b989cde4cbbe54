"""Textbook Caesar, Vigenere and Playfair ciphers used as comparison baselines.

Caesar keeps case and leaves non-letters alone.  Vigenere and Playfair work on
normalized text: uppercase letters only (Playfair also folds J into I).
"""
from __future__ import annotations

import string
from dataclasses import dataclass, field

from .errors import EmptyKeyword

UPPER = string.ascii_uppercase.encode()
LOWER = string.ascii_lowercase.encode()
_LETTERS_TO_UPPER = bytes.maketrans(LOWER, UPPER)
_NON_UPPER = bytes(b for b in range(256) if b not in UPPER)


def shift_translate(data: bytes, shift: int, alphabet: bytes) -> bytes:
    """Rotate every byte of ``alphabet`` found in ``data`` by ``shift`` places."""
    n = len(alphabet)
    rotated = alphabet[shift % n:] + alphabet[: shift % n]
    return data.translate(bytes.maketrans(alphabet, rotated))


# -- Caesar ---------------------------------------------------------------

@dataclass(frozen=True)
class CaesarKey:
    shift: int

    def __post_init__(self) -> None:
        if not 1 <= self.shift <= 25:
            raise ValueError(f"Caesar shift must be in 1..25, got {self.shift}")


def _caesar(data: bytes, shift: int) -> bytes:
    table = bytes.maketrans(
        UPPER + LOWER,
        UPPER[shift % 26:] + UPPER[: shift % 26] + LOWER[shift % 26:] + LOWER[: shift % 26],
    )
    return data.translate(table)


def caesar_encrypt(key: CaesarKey | int, data: bytes) -> bytes:
    key = key if isinstance(key, CaesarKey) else CaesarKey(key)
    return _caesar(data, key.shift)


def caesar_decrypt(key: CaesarKey | int, data: bytes) -> bytes:
    key = key if isinstance(key, CaesarKey) else CaesarKey(key)
    return _caesar(data, -key.shift)


# -- Vigenere -------------------------------------------------------------

def normalize_letters(data: bytes) -> bytes:
    """Uppercase ASCII letters, everything else removed."""
    return data.translate(_LETTERS_TO_UPPER).translate(None, _NON_UPPER)


@dataclass(frozen=True)
class VigenereKey:
    keyword: str

    def __post_init__(self) -> None:
        cleaned = normalize_letters(self.keyword.encode("ascii", "ignore")).decode()
        if not cleaned:
            raise EmptyKeyword("Vigenere keyword must contain at least one letter")
        object.__setattr__(self, "keyword", cleaned)

    @property
    def shifts(self) -> list[int]:
        return [ord(c) - ord("A") for c in self.keyword]


def _vigenere(key: VigenereKey, data: bytes, sign: int) -> bytes:
    letters = normalize_letters(data)
    # one translation table per key position, applied to every L-th letter
    period = len(key.keyword)
    out = bytearray(len(letters))
    for i, s in enumerate(key.shifts):
        out[i::period] = shift_translate(letters[i::period], sign * s, UPPER)
    return bytes(out)


def vigenere_encrypt(key: VigenereKey | str, data: bytes) -> bytes:
    key = key if isinstance(key, VigenereKey) else VigenereKey(key)
    return _vigenere(key, data, +1)


def vigenere_decrypt(key: VigenereKey | str, data: bytes) -> bytes:
    key = key if isinstance(key, VigenereKey) else VigenereKey(key)
    return _vigenere(key, data, -1)


# -- Playfair -------------------------------------------------------------

PLAYFAIR_LETTERS = "ABCDEFGHIKLMNOPQRSTUVWXYZ"  # no J


def normalize_playfair(data: bytes) -> bytes:
    return normalize_letters(data).replace(b"J", b"I")


@dataclass(frozen=True)
class PlayfairKey:
    keyword: str
    grid: tuple[str, ...] = field(init=False)
    _where: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        letters = normalize_playfair(self.keyword.encode("ascii", "ignore")).decode()
        if not letters:
            raise EmptyKeyword("Playfair keyword must contain at least one letter")
        order = "".join(dict.fromkeys(letters + PLAYFAIR_LETTERS))
        grid = tuple(order[r * 5:(r + 1) * 5] for r in range(5))
        where = {ch: (r, c) for r, row in enumerate(grid) for c, ch in enumerate(row)}
        object.__setattr__(self, "keyword", letters)
        object.__setattr__(self, "grid", grid)
        object.__setattr__(self, "_where", where)


def playfair_prepare(data: bytes) -> bytes:
    """Split normalized text into digrams, padding doubled and odd letters."""
    letters = normalize_playfair(data)
    out = bytearray()
    i = 0
    while i < len(letters):
        a = letters[i]
        b = letters[i + 1] if i + 1 < len(letters) else None
        if b is None or b == a:
            filler = ord("Q") if a == ord("X") else ord("X")
            out += bytes((a, filler))
            i += 1
        else:
            out += bytes((a, b))
            i += 2
    return bytes(out)


def _playfair(key: PlayfairKey, digrams: bytes, step: int) -> bytes:
    grid, where = key.grid, key._where
    out = []
    for i in range(0, len(digrams), 2):
        a, b = chr(digrams[i]), chr(digrams[i + 1])
        ra, ca = where[a]
        rb, cb = where[b]
        if ra == rb:
            out.append(grid[ra][(ca + step) % 5] + grid[rb][(cb + step) % 5])
        elif ca == cb:
            out.append(grid[(ra + step) % 5][ca] + grid[(rb + step) % 5][cb])
        else:
            out.append(grid[ra][cb] + grid[rb][ca])
    return "".join(out).encode("ascii")


def playfair_encrypt(key: PlayfairKey | str, data: bytes) -> bytes:
    key = key if isinstance(key, PlayfairKey) else PlayfairKey(key)
    return _playfair(key, playfair_prepare(data), +1)


def playfair_decrypt(key: PlayfairKey | str, data: bytes) -> bytes:
    """Inverse of :func:`playfair_encrypt`; returns the prepared (padded) digram text."""
    key = key if isinstance(key, PlayfairKey) else PlayfairKey(key)
    digrams = normalize_playfair(data)
    if len(digrams) % 2:
        raise ValueError("Playfair ciphertext must contain an even number of letters")
    return _playfair(key, digrams, -1)
