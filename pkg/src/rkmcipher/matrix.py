"""Key matrix: a constant header row plus 94 key rows.

Every key row is a permutation of the alphabet and is named by its first
character.  Rows are laid out in identifier order, so row ``r`` always starts
with ``ALPHABET[r]``.

On disk a matrix is stored in the RKMX1 text format::

    RKMX 1
    <header row, 94 chars>
    <94 key rows, 94 chars each>

LF line endings, 96 lines in total.
"""
from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field

from .alphabet import ALPHABET, SIZE
from .errors import BadDimensions, BadMagic, InvalidMatrix

MAGIC = "RKMX 1"
N_ROWS = SIZE
N_COLS = SIZE


@dataclass(frozen=True)
class Violation:
    message: str
    row: int | None = None  # None means the header row
    column: int | None = None

    def __str__(self) -> str:
        where = "header" if self.row is None else f"row {self.row}"
        if self.column is not None:
            where += f", column {self.column}"
        return f"{where}: {self.message}"


@dataclass(frozen=True)
class KeyMatrix:
    """Header row plus key rows.

    Construction does not validate; use :func:`validate_matrix` (or build via
    :func:`generate_matrix` / :func:`parse_matrix`, which guarantee validity).
    """

    header: str
    rows: tuple[str, ...]
    identifier_index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows", tuple(self.rows))
        index: dict[str, int] = {}
        for ordinal, row in enumerate(self.rows):
            if row:
                index.setdefault(row[0], ordinal)
        object.__setattr__(self, "identifier_index", index)

    def row(self, identifier: str) -> str:
        return self.rows[self.identifier_index[identifier]]

    @property
    def shape(self) -> tuple[int, int]:
        return 1 + len(self.rows), len(self.header)

    @property
    def identifiers(self) -> str:
        return "".join(row[0] for row in self.rows if row)


def generate_matrix(seed: int) -> KeyMatrix:
    """Identifier ``c`` followed by a seeded shuffle of the other 93 symbols, per row."""
    rng = random.Random(seed)
    rows = []
    for ident in ALPHABET:
        rest = [c for c in ALPHABET if c != ident]
        rng.shuffle(rest)
        rows.append(ident + "".join(rest))
    return KeyMatrix(ALPHABET, tuple(rows))


def rotation_fixture_matrix() -> KeyMatrix:
    """Tabula-recta analogue: row ``r`` is the alphabet rotated left by ``r``."""
    rows = tuple(ALPHABET[r:] + ALPHABET[:r] for r in range(SIZE))
    return KeyMatrix(ALPHABET, rows)


def validate_matrix(m: KeyMatrix) -> list[Violation]:
    violations: list[Violation] = []
    if m.header != ALPHABET:
        if len(m.header) != N_COLS:
            violations.append(Violation(f"header has {len(m.header)} columns, expected {N_COLS}"))
        else:
            for col, (got, want) in enumerate(zip(m.header, ALPHABET)):
                if got != want:
                    violations.append(
                        Violation(f"header differs from the alphabet ({got!r} != {want!r})", None, col)
                    )
    if len(m.rows) != N_ROWS:
        violations.append(Violation(f"matrix has {len(m.rows)} key rows, expected {N_ROWS}"))

    alphabet = set(ALPHABET)
    first_seen: dict[str, int] = {}
    for r, row in enumerate(m.rows):
        if len(row) != N_COLS:
            violations.append(Violation(f"row has {len(row)} columns, expected {N_COLS}", r))
        seen: dict[str, int] = {}
        for col, ch in enumerate(row):
            if ch not in alphabet:
                violations.append(Violation(f"not a permutation: {ch!r} is not an alphabet symbol", r, col))
            elif ch in seen:
                violations.append(
                    Violation(f"not a permutation: {ch!r} repeats column {seen[ch]}", r, col)
                )
            else:
                seen[ch] = col
        if len(row) == N_COLS and len(seen) < N_COLS:
            missing = "".join(sorted(alphabet - set(seen)))
            violations.append(Violation(f"not a permutation: missing {missing!r}", r))
        if row:
            ident = row[0]
            if ident in first_seen:
                violations.append(
                    Violation(f"duplicate identifier {ident!r} (also row {first_seen[ident]})", r, 0)
                )
            else:
                first_seen[ident] = r
    return violations


def serialize_matrix(m: KeyMatrix) -> bytes:
    lines = [MAGIC, m.header, *m.rows]
    return ("\n".join(lines) + "\n").encode("ascii")


def parse_matrix(data: bytes) -> KeyMatrix:
    try:
        text = data.decode("ascii")
    except UnicodeDecodeError as exc:
        raise BadDimensions(f"matrix file is not ASCII: {exc}") from None
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0] != MAGIC:
        first = lines[0] if lines else ""
        raise BadMagic(f"expected {MAGIC!r} on line 1, got {first[:20]!r}")
    body = lines[1:]
    if len(body) != 1 + N_ROWS:
        raise BadDimensions(f"expected {2 + N_ROWS} lines, got {len(lines)}")
    for lineno, line in enumerate(body, start=2):
        if len(line) != N_COLS:
            raise BadDimensions(f"line {lineno} has {len(line)} characters, expected {N_COLS}")
    m = KeyMatrix(body[0], tuple(body[1:]))
    violations = validate_matrix(m)
    if violations:
        raise InvalidMatrix(violations)
    return m


def load_matrix(path) -> KeyMatrix:
    with open(path, "rb") as fh:
        return parse_matrix(fh.read())


def save_matrix(m: KeyMatrix, path) -> None:
    with open(path, "wb") as fh:
        fh.write(serialize_matrix(m))
