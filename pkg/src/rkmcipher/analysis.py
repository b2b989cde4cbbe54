"""Frequency, entropy, Kasiski and keyspace analysis.

All reports are plain dataclasses with ``to_dict``/``from_dict`` for JSON and
``to_text`` for a human-readable line-oriented form.
"""
from __future__ import annotations

import math
from collections import Counter, defaultdict
from dataclasses import asdict, dataclass, field
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from functools import reduce
from typing import Any, Mapping

from .alphabet import SIZE, is_symbol_byte
from .cipher import MAX_KEY_LENGTH, MIN_KEY_LENGTH
from .errors import MissingParameter, PatternTooRare, UnknownCipher


def _char(b: int) -> str:
    return chr(b)


# -- frequency / entropy --------------------------------------------------

@dataclass
class FrequencyReport:
    counts: dict[str, int]
    probabilities: dict[str, float]
    total: int

    def top(self, n: int = 10) -> list[tuple[str, int]]:
        return sorted(self.counts.items(), key=lambda kv: (-kv[1], kv[0]))[:n]

    def to_dict(self) -> dict[str, Any]:
        return {"report": "frequency", **asdict(self)}

    @classmethod
    def from_dict(cls, d: Mapping[str, Any]) -> "FrequencyReport":
        return cls(dict(d["counts"]), dict(d["probabilities"]), int(d["total"]))

    def to_text(self) -> str:
        lines = [f"total: {self.total}", f"distinct: {len(self.counts)}"]
        for ch, n in self.top(len(self.counts)):
            lines.append(f"{ch!r}\t{n}\t{self.probabilities[ch]:.6f}")
        return "\n".join(lines)


def frequency_histogram(data: bytes) -> FrequencyReport:
    counts = Counter(data)
    total = len(data)
    return FrequencyReport(
        counts={_char(b): n for b, n in sorted(counts.items())},
        probabilities={_char(b): n / total for b, n in sorted(counts.items())},
        total=total,
    )


@dataclass
class EntropyReport:
    bits_per_symbol: float
    distinct: int = 0
    total: int = 0

    @property
    def max_bits(self) -> float:
        return math.log2(self.distinct) if self.distinct else 0.0

    def to_dict(self) -> dict[str, Any]:
        return {"report": "entropy", **asdict(self)}

    @classmethod
    def from_dict(cls, d: Mapping[str, Any]) -> "EntropyReport":
        return cls(float(d["bits_per_symbol"]), int(d.get("distinct", 0)), int(d.get("total", 0)))

    def to_text(self) -> str:
        return (
            f"entropy: {self.bits_per_symbol:.6f} bits/symbol\n"
            f"distinct: {self.distinct}\n"
            f"max for distinct: {self.max_bits:.6f}\n"
            f"total: {self.total}"
        )


def shannon_entropy(report: FrequencyReport | bytes) -> EntropyReport:
    if not isinstance(report, FrequencyReport):
        report = frequency_histogram(report)
    h = -sum(p * math.log2(p) for p in report.probabilities.values() if p > 0)
    # -0.0 for a single symbol
    return EntropyReport(abs(h) if h == 0 else h, len(report.counts), report.total)


def alphabet_symbols(data: bytes) -> bytes:
    """Drop every byte outside the 94-symbol alphabet."""
    return bytes(b for b in data if is_symbol_byte(b))


# -- Kasiski --------------------------------------------------------------

@dataclass
class KasiskiReport:
    variant: str
    pattern: str
    positions: list[int]
    distances: list[int]
    gcd: int
    estimated_key_length: int
    repeats: dict[str, list[int]] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {"report": "kasiski", **asdict(self)}

    @classmethod
    def from_dict(cls, d: Mapping[str, Any]) -> "KasiskiReport":
        return cls(
            variant=d["variant"],
            pattern=d["pattern"],
            positions=list(d["positions"]),
            distances=list(d["distances"]),
            gcd=int(d["gcd"]),
            estimated_key_length=int(d["estimated_key_length"]),
            repeats={k: list(v) for k, v in d.get("repeats", {}).items()},
        )

    def to_text(self) -> str:
        lines = [
            f"variant: {self.variant}",
            f"pattern: {self.pattern!r}",
            f"positions: {', '.join(map(str, self.positions))}",
            f"distances: {', '.join(map(str, self.distances))}",
            f"gcd: {self.gcd}",
            f"estimated key length: {self.estimated_key_length}",
        ]
        if self.repeats:
            lines.append(f"repeated n-grams: {len(self.repeats)}")
        return "\n".join(lines)


def _gcd_all(values) -> int:
    g = reduce(math.gcd, values, 0)
    return g if g > 0 else 1


def kasiski_from_positions(positions: list[int], pattern: str = "") -> KasiskiReport:
    """Distances from the first occurrence, then their gcd."""
    positions = sorted(positions)
    if len(positions) < 2:
        raise PatternTooRare(f"pattern {pattern!r} occurs {len(positions)} time(s); need at least 2")
    first = positions[0]
    distances = [p - first for p in positions[1:]]
    g = _gcd_all(distances)
    return KasiskiReport("paper", pattern, positions, distances, g, g)


def kasiski_paper(ciphertext: bytes, pattern: str | bytes) -> KasiskiReport:
    """Single-pattern Kasiski: 1-indexed positions, distances measured from the first hit."""
    needle = pattern.encode("latin-1") if isinstance(pattern, str) else pattern
    if not needle:
        raise ValueError("pattern must be non-empty")
    positions = []
    start = ciphertext.find(needle)
    while start != -1:
        positions.append(start + 1)
        start = ciphertext.find(needle, start + 1)
    return kasiski_from_positions(positions, needle.decode("latin-1"))


def kasiski_classic(ciphertext: bytes, ngram: int = 3) -> KasiskiReport:
    """Repeated n-grams; gaps between consecutive occurrences; gcd of every gap."""
    if ngram < 2:
        raise ValueError("ngram must be at least 2")
    if len(ciphertext) < ngram:
        raise ValueError(f"ciphertext shorter than the n-gram length {ngram}")
    seen: dict[bytes, list[int]] = defaultdict(list)
    for i in range(len(ciphertext) - ngram + 1):
        seen[ciphertext[i:i + ngram]].append(i + 1)
    repeats = {gram: pos for gram, pos in seen.items() if len(pos) > 1}
    distances = []
    positions = set()
    for pos in repeats.values():
        positions.update(pos)
        distances.extend(b - a for a, b in zip(pos, pos[1:]))
    g = _gcd_all(distances)
    return KasiskiReport(
        variant="classic",
        pattern=f"{ngram}-grams",
        positions=sorted(positions),
        distances=distances,
        gcd=g,
        estimated_key_length=g,
        repeats={gram.decode("latin-1"): pos for gram, pos in repeats.items()},
    )


# -- keyspace -------------------------------------------------------------

CIPHERS = ("caesar", "vigenere", "playfair", "rkm")


def scientific(value: int, digits: int = 3) -> str:
    """Render an exact integer as e.g. ``1.55 × 10^25``."""
    if value == 0:
        return "0"
    with localcontext() as ctx:
        ctx.prec = max(digits, 1)
        ctx.rounding = ROUND_HALF_EVEN
        d = +Decimal(value)
    sign, digs, exp = d.as_tuple()
    mantissa = "".join(map(str, digs)).ljust(digits, "0")
    exponent = exp + len(digs) - 1
    text = mantissa[0] + ("." + mantissa[1:] if digits > 1 else "")
    if exponent == 0:
        return ("-" if sign else "") + text
    return f"{'-' if sign else ''}{text} × 10^{exponent}"


@dataclass
class KeyspaceReport:
    cipher: str
    parameters: dict[str, Any]
    value: int

    @property
    def scientific(self) -> str:
        return scientific(self.value)

    @property
    def log2(self) -> float:
        return math.log2(self.value)

    def to_dict(self) -> dict[str, Any]:
        # exact integer kept as a string so JSON consumers never round it
        return {
            "report": "keyspace",
            "cipher": self.cipher,
            "parameters": dict(self.parameters),
            "value": str(self.value),
            "scientific": self.scientific,
        }

    @classmethod
    def from_dict(cls, d: Mapping[str, Any]) -> "KeyspaceReport":
        return cls(d["cipher"], dict(d["parameters"]), int(d["value"]))

    def to_text(self) -> str:
        params = ", ".join(f"{k}={v}" for k, v in self.parameters.items())
        head = f"{self.cipher}({params})" if params else self.cipher
        return f"{head}: {self.value} ({self.scientific}, {self.log2:.1f} bits)"


def rkm_keyspace(k: int, rows: int = SIZE) -> int:
    """Ordered choice of k distinct rows out of ``rows``."""
    return math.perm(rows, k)


def keyspace(cipher: str, params: Mapping[str, Any] | None = None) -> KeyspaceReport:
    params = dict(params or {})
    name = cipher.lower()
    if name == "caesar":
        return KeyspaceReport("caesar", {}, 25)
    if name == "playfair":
        return KeyspaceReport("playfair", {}, math.factorial(25))
    if name == "vigenere":
        length = _need(params, "L", "length", "key_length")
        if length < 1:
            raise ValueError("Vigenere keyword length must be at least 1")
        return KeyspaceReport("vigenere", {"L": length}, 26 ** length)
    if name == "rkm":
        k = _need(params, "k", "key_length")
        if not MIN_KEY_LENGTH <= k <= MAX_KEY_LENGTH:
            raise ValueError(f"key length must be between {MIN_KEY_LENGTH} and {MAX_KEY_LENGTH}, got {k}")
        if params.get("cumulative"):
            value = sum(rkm_keyspace(i) for i in range(1, k + 1))
            return KeyspaceReport("rkm", {"k": k, "cumulative": True}, value)
        return KeyspaceReport("rkm", {"k": k}, rkm_keyspace(k))
    raise UnknownCipher(f"unknown cipher {cipher!r}; expected one of {', '.join(CIPHERS)}")


def _need(params: Mapping[str, Any], *names: str) -> int:
    for name in names:
        if params.get(name) is not None:
            return int(params[name])
    raise MissingParameter(f"missing parameter {names[0]!r}")
