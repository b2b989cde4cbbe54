"""Command-line entry point.

Exit codes: 0 success, 2 usage or validation error, 3 ciphertext failed an
integrity check during decryption, 4 I/O failure.
"""
from __future__ import annotations

import argparse
import json
import secrets
import sys

from . import analysis, bench
from .cipher import Mode, SubstitutionKey, decrypt, encrypt, generate_key
from .errors import CodecError, IntegrityError, RKMError
from .matrix import generate_matrix, load_matrix, serialize_matrix

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INTEGRITY = 3
EXIT_IO = 4


class DecryptionFailed(Exception):
    pass


def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _write(path: str | None, data: bytes) -> None:
    if path is None or path == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
        return
    with open(path, "wb") as fh:
        fh.write(data)


def _emit(text: str, out: str | None = None) -> None:
    _write(out, text.encode("utf-8"))


def _load_key(args) -> SubstitutionKey:
    if args.key_string is not None:
        return SubstitutionKey(args.key_string)
    return SubstitutionKey.parse(_read(args.key).decode("ascii", "replace"))


# -- subcommands ----------------------------------------------------------

def cmd_genmatrix(args) -> int:
    seed = args.seed if args.seed is not None else secrets.randbits(64)
    _write(args.out, serialize_matrix(generate_matrix(seed)))
    return EXIT_OK


def cmd_keygen(args) -> int:
    m = load_matrix(args.matrix)
    key = generate_key(m, args.length, args.seed)
    _emit(key.dumps(), args.out)
    return EXIT_OK


def cmd_encrypt(args) -> int:
    m = load_matrix(args.matrix)
    key = _load_key(args)
    _write(args.out, encrypt(m, key, _read(args.inp), Mode(args.mode)))
    return EXIT_OK


def cmd_decrypt(args) -> int:
    m = load_matrix(args.matrix)
    key = _load_key(args)
    data = _read(args.inp)
    try:
        plaintext = decrypt(m, key, data, Mode(args.mode))
    except (IntegrityError, CodecError) as exc:
        raise DecryptionFailed(str(exc)) from exc
    _write(args.out, plaintext)
    return EXIT_OK


def _dump(report, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report.to_dict(), indent=2, ensure_ascii=False) + "\n"
    return report.to_text() + "\n"


def cmd_analyze(args) -> int:
    data = _read(args.inp)
    if args.alphabet_only:
        data = analysis.alphabet_symbols(data)
    if args.what == "freq":
        report = analysis.frequency_histogram(data)
    elif args.what == "entropy":
        report = analysis.shannon_entropy(analysis.frequency_histogram(data))
    elif args.variant == "paper":
        if not args.pattern:
            raise ValueError("--pattern is required for the paper Kasiski variant")
        report = analysis.kasiski_paper(data, args.pattern)
    else:
        report = analysis.kasiski_classic(data, args.ngram)
    _emit(_dump(report, args.format))
    return EXIT_OK


def cmd_keyspace(args) -> int:
    params = {}
    if args.key_length is not None:
        params = {"k": args.key_length, "L": args.key_length}
    if args.cumulative:
        params["cumulative"] = True
    report = analysis.keyspace(args.cipher, params)
    _emit(_dump(report, args.format))
    return EXIT_OK


def _csv_list(text: str, cast=str) -> list:
    return [cast(part.strip()) for part in text.split(",") if part.strip()]


def cmd_bench(args) -> int:
    sizes = _csv_list(args.sizes, int) if args.sizes else list(bench.DEFAULT_SIZES)
    ciphers = _csv_list(args.ciphers) if args.ciphers else list(bench.DEFAULT_CIPHERS)
    for name in ciphers:
        if name not in bench.DEFAULT_CIPHERS:
            raise ValueError(f"unknown cipher {name!r}; expected one of {', '.join(bench.DEFAULT_CIPHERS)}")
    if any(s <= 0 for s in sizes):
        raise ValueError("benchmark sizes must be positive")
    reports = bench.run_suite(
        sizes, ciphers, key_length=args.key_length, seed=args.seed, kind=args.corpus, repeats=args.repeats
    )
    _emit(bench.format_reports(reports, args.format))
    return EXIT_OK


# -- parser ---------------------------------------------------------------

def _add_cipher_io(p: argparse.ArgumentParser) -> None:
    p.add_argument("--matrix", required=True, help="RKMX1 key matrix file")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--key", help="key file (one line of row identifiers)")
    group.add_argument("--key-string", help="key given inline")
    p.add_argument("--mode", choices=[m.value for m in Mode], default="text")
    p.add_argument("--in", dest="inp", required=True, help="input file, '-' for stdin")
    p.add_argument("--out", required=True, help="output file, '-' for stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rkm", description="Randomized key matrix substitution cipher toolkit"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("genmatrix", help="generate a key matrix")
    p.add_argument("--seed", type=int, help="generator seed (random if omitted)")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_genmatrix)

    p = sub.add_parser("keygen", help="pick k random rows as a key")
    p.add_argument("--matrix", required=True)
    p.add_argument("--length", type=int, required=True, help="key length k (1..16)")
    p.add_argument("--seed", type=int)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_keygen)

    p = sub.add_parser("encrypt", help="encrypt a file")
    _add_cipher_io(p)
    p.set_defaults(func=cmd_encrypt)

    p = sub.add_parser("decrypt", help="decrypt a file")
    _add_cipher_io(p)
    p.set_defaults(func=cmd_decrypt)

    p = sub.add_parser("analyze", help="frequency, entropy or Kasiski analysis")
    p.add_argument("what", choices=["freq", "entropy", "kasiski"])
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--variant", choices=["paper", "classic"], default="classic")
    p.add_argument("--pattern", help="single pattern for the paper variant")
    p.add_argument("--ngram", type=int, default=5)
    p.add_argument("--alphabet-only", action="store_true", help="ignore bytes outside the 94-symbol alphabet")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("keyspace", help="exact keyspace size")
    p.add_argument("--cipher", choices=list(analysis.CIPHERS), required=True)
    p.add_argument("--key-length", type=int)
    p.add_argument("--cumulative", action="store_true", help="rkm: sum over key lengths 1..K")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_keyspace)

    p = sub.add_parser("bench", help="time encryption/decryption")
    p.add_argument("--sizes", help="comma-separated byte counts")
    p.add_argument("--ciphers", help="comma-separated cipher names")
    p.add_argument("--key-length", type=int, default=bench.DEFAULT_KEY_LENGTH)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--repeats", type=int, default=5)
    p.add_argument("--corpus", choices=list(bench.CORPUS_KINDS), default="english-like")
    p.add_argument("--format", choices=["text", "csv", "json"], default="text")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DecryptionFailed as exc:
        print(f"rkm: decryption failed: {exc}", file=sys.stderr)
        return EXIT_INTEGRITY
    except OSError as exc:
        print(f"rkm: {exc}", file=sys.stderr)
        return EXIT_IO
    except (RKMError, ValueError) as exc:
        print(f"rkm: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
