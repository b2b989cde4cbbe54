"""Randomized key matrix polyalphabetic substitution cipher.

Quick start::

    from rkmcipher import generate_matrix, generate_key, encrypt, decrypt

    m = generate_matrix(seed=42)
    key = generate_key(m, 8, seed=1)
    ct = encrypt(m, key, b"Attack at dawn")
    assert decrypt(m, key, ct) == b"Attack at dawn"
"""
from .alphabet import ALPHABET, decode_binary, encode_binary, symbol_at, symbol_index
from .cipher import Mode, SubstitutionKey, decrypt, encrypt, encrypt_symbol, generate_key
from .matrix import (
    KeyMatrix,
    generate_matrix,
    parse_matrix,
    rotation_fixture_matrix,
    serialize_matrix,
    validate_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "ALPHABET",
    "KeyMatrix",
    "Mode",
    "SubstitutionKey",
    "decode_binary",
    "decrypt",
    "encode_binary",
    "encrypt",
    "encrypt_symbol",
    "generate_key",
    "generate_matrix",
    "parse_matrix",
    "rotation_fixture_matrix",
    "serialize_matrix",
    "symbol_at",
    "symbol_index",
    "validate_matrix",
]
