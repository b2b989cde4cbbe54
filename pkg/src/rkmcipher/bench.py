"""Timing harness: warm-up pass, then the median of several end-minus-start timings."""
from __future__ import annotations

import csv
import io
import json
import random
import re
import statistics
import time
from dataclasses import asdict, dataclass
from functools import lru_cache
from importlib import resources
from typing import Any, Callable, Iterable, Mapping, Sequence

from . import baselines
from .cipher import Mode, decrypt, encrypt, generate_key
from .errors import RoundtripMismatch, UnknownCipher
from .matrix import generate_matrix

DEFAULT_SIZES = (10 * 1024, 500 * 1024, 1024 * 1024)
DEFAULT_CIPHERS = ("rkm", "caesar", "vigenere", "playfair")
DEFAULT_KEY_LENGTH = 8
OPERATIONS = ("encrypt", "decrypt")
CORPUS_KINDS = ("english-like", "random-bytes")


@dataclass
class Corpus:
    kind: str
    size: int
    seed: int
    data: bytes


@lru_cache(maxsize=1)
def bundled_sentences() -> tuple[bytes, ...]:
    text = resources.files("rkmcipher").joinpath("data/corpus.txt").read_text("utf-8")
    sentences = []
    for line in text.splitlines():
        sentences.extend(s for s in re.split(r"(?<=[.!?;:])\s+", line.strip()) if s)
    return tuple(s.encode("ascii") for s in sentences)


def generate_corpus(kind: str, size: int, seed: int = 0) -> Corpus:
    """English-like text (random sentences from the bundled text) or uniform random bytes."""
    if size < 0:
        raise ValueError("corpus size must be non-negative")
    rng = random.Random(seed)
    if kind == "random-bytes":
        data = rng.randbytes(size)
    elif kind == "english-like":
        sentences = bundled_sentences()
        parts: list[bytes] = []
        length = 0
        while length < size:
            s = rng.choice(sentences)
            parts.append(s)
            length += len(s) + 1
        data = b" ".join(parts)[:size]
    else:
        raise ValueError(f"unknown corpus kind {kind!r}; expected one of {CORPUS_KINDS}")
    return Corpus(kind, size, seed, data)


# -- cipher adapters ------------------------------------------------------

@dataclass
class CipherUnderTest:
    name: str
    encrypt: Callable[[bytes], bytes]
    decrypt: Callable[[bytes], bytes]
    # what decrypt(encrypt(p)) should give back
    expected_plaintext: Callable[[bytes], bytes]
    parameters: dict[str, Any]


def make_cipher(name: str, params: Mapping[str, Any] | None = None) -> CipherUnderTest:
    params = dict(params or {})
    if name == "rkm":
        k = int(params.get("key_length", DEFAULT_KEY_LENGTH))
        mode = Mode(params.get("mode", "text"))
        m = generate_matrix(int(params.get("matrix_seed", 0)))
        key = generate_key(m, k, int(params.get("key_seed", 0)))
        return CipherUnderTest(
            "rkm",
            lambda p: encrypt(m, key, p, mode),
            lambda c: decrypt(m, key, c, mode),
            lambda p: p,
            {"key_length": k, "mode": mode.value, "key": key.identifiers},
        )
    if name == "caesar":
        ck = baselines.CaesarKey(int(params.get("shift", 3)))
        return CipherUnderTest(
            "caesar",
            lambda p: baselines.caesar_encrypt(ck, p),
            lambda c: baselines.caesar_decrypt(ck, c),
            lambda p: p,
            {"shift": ck.shift},
        )
    if name == "vigenere":
        vk = baselines.VigenereKey(str(params.get("keyword", "LEMONADE")))
        return CipherUnderTest(
            "vigenere",
            lambda p: baselines.vigenere_encrypt(vk, p),
            lambda c: baselines.vigenere_decrypt(vk, c),
            baselines.normalize_letters,
            {"keyword": vk.keyword},
        )
    if name == "playfair":
        pk = baselines.PlayfairKey(str(params.get("keyword", "MONARCHY")))
        return CipherUnderTest(
            "playfair",
            lambda p: baselines.playfair_encrypt(pk, p),
            lambda c: baselines.playfair_decrypt(pk, c),
            baselines.playfair_prepare,
            {"keyword": pk.keyword},
        )
    raise UnknownCipher(f"unknown cipher {name!r}; expected one of {', '.join(DEFAULT_CIPHERS)}")


# -- timing ---------------------------------------------------------------

@dataclass
class BenchReport:
    cipher: str
    operation: str
    input_size: int
    duration: float
    throughput: float

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: Mapping[str, Any]) -> "BenchReport":
        return cls(d["cipher"], d["operation"], int(d["input_size"]), float(d["duration"]), float(d["throughput"]))


def _timed(fn: Callable[[bytes], bytes], data: bytes) -> tuple[float, bytes]:
    start = time.perf_counter_ns()
    out = fn(data)
    end = time.perf_counter_ns()
    return max(end - start, 1) / 1e9, out


def time_operation(
    cipher: str | CipherUnderTest,
    operation: str,
    params: Mapping[str, Any] | None,
    corpus: Corpus | bytes,
    repeats: int = 5,
) -> BenchReport:
    """Time one operation on one corpus.

    For ``decrypt`` the corpus is encrypted first (untimed) and every timed
    pass is checked against the plaintext, raising RoundtripMismatch if the
    cipher does not invert.
    """
    data = corpus.data if isinstance(corpus, Corpus) else corpus
    if not data:
        raise ValueError("cannot time an empty corpus")
    if operation not in OPERATIONS:
        raise ValueError(f"operation must be one of {OPERATIONS}, got {operation!r}")
    cut = cipher if isinstance(cipher, CipherUnderTest) else make_cipher(cipher, params)

    if operation == "encrypt":
        fn, payload, expected = cut.encrypt, data, None
    else:
        fn, payload, expected = cut.decrypt, cut.encrypt(data), cut.expected_plaintext(data)

    fn(payload)  # warm-up
    durations = []
    for _ in range(repeats):
        elapsed, out = _timed(fn, payload)
        if expected is not None and out != expected:
            raise RoundtripMismatch(f"{cut.name} decrypt did not reproduce the plaintext")
        durations.append(elapsed)
    duration = statistics.median(durations)
    return BenchReport(cut.name, operation, len(data), duration, len(data) / duration)


def run_suite(
    sizes: Sequence[int] = DEFAULT_SIZES,
    ciphers: Sequence[str] = DEFAULT_CIPHERS,
    key_length: int = DEFAULT_KEY_LENGTH,
    seed: int = 0,
    kind: str = "english-like",
    repeats: int = 5,
    progress: Callable[[BenchReport], None] | None = None,
) -> list[BenchReport]:
    corpora = {size: generate_corpus(kind, size, seed) for size in sizes}
    reports = []
    for name in ciphers:
        params = {"key_length": key_length, "matrix_seed": seed, "key_seed": seed}
        cut = make_cipher(name, params)
        for size in sizes:
            for op in OPERATIONS:
                report = time_operation(cut, op, None, corpora[size], repeats)
                reports.append(report)
                if progress:
                    progress(report)
    return reports


# -- output ---------------------------------------------------------------

CSV_COLUMNS = ("cipher", "operation", "size_bytes", "duration_s", "throughput_bps")


def _row(r: BenchReport) -> tuple:
    return (r.cipher, r.operation, r.input_size, f"{r.duration:.6f}", f"{r.throughput:.1f}")


def format_reports(reports: Iterable[BenchReport], fmt: str = "text") -> str:
    reports = list(reports)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        writer.writerows(_row(r) for r in reports)
        return buf.getvalue()
    if fmt == "json":
        return json.dumps([r.to_dict() for r in reports], indent=2) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    rows = [CSV_COLUMNS] + [_row(r) for r in reports]
    widths = [max(len(str(row[i])) for row in rows) for i in range(len(CSV_COLUMNS))]
    lines = []
    for row in rows:
        cells = [
            str(v).ljust(w) if i < 2 else str(v).rjust(w)
            for i, (v, w) in enumerate(zip(row, widths))
        ]
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines) + "\n"


def parse_csv(text: str) -> list[BenchReport]:
    reader = csv.DictReader(io.StringIO(text))
    return [
        BenchReport(
            row["cipher"],
            row["operation"],
            int(row["size_bytes"]),
            float(row["duration_s"]),
            float(row["throughput_bps"]),
        )
        for row in reader
    ]
