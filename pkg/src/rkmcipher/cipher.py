"""Key generation, encryption and decryption over a key matrix.

A key is an ordered list of k distinct row identifiers.  Plaintext symbol j
is replaced by the block ``row_1[j] row_2[j] ... row_k[j]``; decryption looks
each block character up in its row and insists that all k columns agree.
"""
from __future__ import annotations

import enum
import random
from dataclasses import dataclass

import numpy as np

from .alphabet import ALPHABET, BINARY_PAIRS, FIRST, LAST, SIZE
from .errors import (
    ByteOutOfRange,
    DuplicateIdentifier,
    InconsistentBlock,
    KeyLengthOutOfRange,
    NotInAlphabet,
    NotInRow,
    OddSymbolCount,
    TruncatedBlock,
    UnknownRowIdentifier,
)
from .matrix import KeyMatrix

MIN_KEY_LENGTH = 1
MAX_KEY_LENGTH = 16


class Mode(str, enum.Enum):
    TEXT = "text"
    BINARY = "binary"


@dataclass(frozen=True)
class SubstitutionKey:
    identifiers: str

    def __post_init__(self) -> None:
        k = len(self.identifiers)
        if not MIN_KEY_LENGTH <= k <= MAX_KEY_LENGTH:
            raise KeyLengthOutOfRange(
                f"key length must be between {MIN_KEY_LENGTH} and {MAX_KEY_LENGTH}, got {k}"
            )
        for ch in self.identifiers:
            if not FIRST <= ord(ch) <= LAST:
                raise NotInAlphabet(f"key character {ch!r} is not an alphabet symbol")
        if len(set(self.identifiers)) != k:
            raise DuplicateIdentifier(f"key {self.identifiers!r} repeats a row identifier")

    @property
    def k(self) -> int:
        return len(self.identifiers)

    def __str__(self) -> str:
        return self.identifiers

    def reversed(self) -> "SubstitutionKey":
        return SubstitutionKey(self.identifiers[::-1])

    @classmethod
    def parse(cls, text: str) -> "SubstitutionKey":
        """Read a key file's contents (one line, trailing newline optional)."""
        if text.endswith("\n"):
            text = text[:-1]
        if text.endswith("\r"):
            text = text[:-1]
        return cls(text)

    def dumps(self) -> str:
        return self.identifiers + "\n"


def generate_key(m: KeyMatrix, k: int, seed: int | None = None) -> SubstitutionKey:
    if not MIN_KEY_LENGTH <= k <= MAX_KEY_LENGTH:
        raise KeyLengthOutOfRange(
            f"key length must be between {MIN_KEY_LENGTH} and {MAX_KEY_LENGTH}, got {k}"
        )
    rng = random.Random(seed) if seed is not None else random.SystemRandom()
    return SubstitutionKey("".join(rng.sample(m.identifiers, k)))


def _key_rows(m: KeyMatrix, key: SubstitutionKey) -> list[str]:
    rows = []
    for ident in key.identifiers:
        try:
            rows.append(m.row(ident))
        except KeyError:
            raise UnknownRowIdentifier(f"no key row is identified by {ident!r}") from None
    return rows


def encrypt_symbol(m: KeyMatrix, key: SubstitutionKey, j: int) -> list[int]:
    """Ciphertext block for symbol index ``j``, as symbol indices in key order."""
    return [ord(row[j]) - FIRST for row in _key_rows(m, key)]


def _block_table(m: KeyMatrix, key: SubstitutionKey) -> list[bytes]:
    rows = _key_rows(m, key)
    return ["".join(row[j] for row in rows).encode("ascii") for j in range(SIZE)]


def encrypt(m: KeyMatrix, key: SubstitutionKey, plaintext: bytes, mode: Mode | str = Mode.TEXT) -> bytes:
    mode = Mode(mode)
    blocks = _block_table(m, key)
    if mode is Mode.TEXT:
        table = [bytes((b,)) for b in range(256)]
        for j, block in enumerate(blocks):
            table[FIRST + j] = block
    else:
        table = [
            blocks[pair[0] - FIRST] + blocks[pair[1] - FIRST] for pair in BINARY_PAIRS
        ]
    return b"".join([table[b] for b in plaintext])


def _column_lookup(m: KeyMatrix, key: SubstitutionKey) -> np.ndarray:
    """``lookup[i, c]`` = column of byte ``c`` in the i-th key row, or -1."""
    rows = _key_rows(m, key)
    lookup = np.full((len(rows), 256), -1, dtype=np.int16)
    for i, row in enumerate(rows):
        for col, ch in enumerate(row):
            lookup[i, ord(ch)] = col
    return lookup


def _recover_columns(m: KeyMatrix, key: SubstitutionKey, symbols: np.ndarray, offsets: np.ndarray) -> np.ndarray:
    """Map alphabet-symbol bytes (grouped into blocks of k) to header columns.

    ``offsets`` gives the ciphertext position of each symbol, for error messages.
    """
    k = key.k
    if len(symbols) % k:
        raise TruncatedBlock(
            f"{len(symbols)} ciphertext symbols is not a multiple of the key length {k}"
        )
    lookup = _column_lookup(m, key)
    blocks = symbols.reshape(-1, k)
    cols = lookup[np.arange(k), blocks]
    if (cols < 0).any():
        flat = int(np.flatnonzero((cols < 0).ravel())[0])
        pos = int(offsets[flat])
        raise NotInRow(
            f"ciphertext byte {chr(symbols[flat])!r} at offset {pos} is absent from "
            f"row {key.identifiers[flat % k]!r}"
        )
    bad = (cols != cols[:, :1]).any(axis=1)
    if bad.any():
        block = int(np.flatnonzero(bad)[0])
        pos = int(offsets[block * k])
        raise InconsistentBlock(
            f"block {block} at offset {pos} maps to columns {cols[block].tolist()}; "
            "wrong key, wrong matrix or corrupted ciphertext"
        )
    return cols[:, 0]


def decrypt(m: KeyMatrix, key: SubstitutionKey, ciphertext: bytes, mode: Mode | str = Mode.TEXT) -> bytes:
    mode = Mode(mode)
    data = np.frombuffer(ciphertext, dtype=np.uint8)
    is_symbol = (data >= FIRST) & (data <= LAST)

    if mode is Mode.BINARY:
        if not is_symbol.all():
            pos = int(np.flatnonzero(~is_symbol)[0])
            raise NotInAlphabet(f"byte 0x{data[pos]:02x} at offset {pos} cannot occur in binary-mode ciphertext")
        cols = _recover_columns(m, key, data, np.arange(len(data)))
        if len(cols) % 2:
            raise OddSymbolCount(f"binary stream has odd symbol count {len(cols)}")
        pairs = cols.reshape(-1, 2).astype(np.int32)
        values = pairs[:, 0] * SIZE + pairs[:, 1]
        over = values > 255
        if over.any():
            at = int(np.flatnonzero(over)[0])
            raise ByteOutOfRange(
                f"symbol pair {tuple(pairs[at].tolist())} at byte {at} does not encode a byte"
            )
        return values.astype(np.uint8).tobytes()

    positions = np.flatnonzero(is_symbol)
    cols = _recover_columns(m, key, data[positions], positions)
    # The decoded symbol takes the place of the block's first character;
    # the remaining k-1 characters are dropped, pass-through bytes stay put.
    starts = positions[:: key.k]
    keep = ~is_symbol
    keep[starts] = True
    out = data.copy()
    out[starts] = cols.astype(np.uint8) + FIRST
    return out[keep].tobytes()


def encrypt_text(m: KeyMatrix, key: SubstitutionKey, text: str) -> str:
    return encrypt(m, key, text.encode("utf-8"), Mode.TEXT).decode("utf-8")


def decrypt_text(m: KeyMatrix, key: SubstitutionKey, text: str) -> str:
    return decrypt(m, key, text.encode("utf-8"), Mode.TEXT).decode("utf-8")


__all__ = [
    "ALPHABET",
    "MAX_KEY_LENGTH",
    "MIN_KEY_LENGTH",
    "Mode",
    "SubstitutionKey",
    "decrypt",
    "decrypt_text",
    "encrypt",
    "encrypt_symbol",
    "encrypt_text",
    "generate_key",
]
