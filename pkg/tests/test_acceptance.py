"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines inline; they
are also repeated in the terminal summary.
"""
import math
import random
import string
import time

from rkmcipher.alphabet import ALPHABET
from rkmcipher.analysis import (
    alphabet_symbols,
    frequency_histogram,
    kasiski_classic,
    kasiski_from_positions,
    keyspace,
    shannon_entropy,
)
from rkmcipher.baselines import vigenere_encrypt
from rkmcipher.bench import generate_corpus, time_operation
from rkmcipher.cipher import decrypt, encrypt, generate_key
from rkmcipher.errors import BadDimensions, BadMagic, InconsistentBlock, InvalidMatrix
from rkmcipher.matrix import KeyMatrix, generate_matrix, parse_matrix, serialize_matrix

GOLDEN_POSITIONS = [2, 27, 45, 52, 57, 67, 85, 99, 109, 130, 139, 147, 165, 181, 189, 231]
GOLDEN_DISTANCES = [25, 43, 50, 55, 65, 83, 97, 107, 128, 137, 145, 163, 179, 187, 229]
LOG2_94 = 6.554589


def test_c1_roundtrip(criterion):
    rng = random.Random(20240101)
    start = time.perf_counter()
    failures = []
    for case in range(1000):
        kind = rng.choice(["english-like", "random-bytes"])
        size = rng.randint(0, 64 * 1024)
        k = rng.randint(1, 16)
        mode = rng.choice(["text", "binary"])
        seed = rng.getrandbits(64)
        data = generate_corpus(kind, size, seed).data
        m = generate_matrix(seed)
        key = generate_key(m, k, seed)
        if decrypt(m, key, encrypt(m, key, data, mode), mode) != data:
            failures.append((case, kind, size, k, mode, seed))
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 60
    criterion("C1 roundtrip, 1000 cases, < 60 s", ok, f"{len(failures)} failures, {elapsed:.1f} s")
    assert not failures, failures[:5]
    assert elapsed < 60


def test_c2_kasiski_paper_golden(criterion):
    r = kasiski_from_positions(GOLDEN_POSITIONS, "4")
    ok = r.distances == GOLDEN_DISTANCES and r.gcd == 1
    criterion("C2 Kasiski paper variant golden distances and gcd 1", ok, f"gcd={r.gcd}")
    assert r.distances == GOLDEN_DISTANCES
    assert r.gcd == 1


def test_c3_keyspace(criterion):
    caesar = keyspace("caesar")
    playfair = keyspace("playfair")
    rkm8 = keyspace("rkm", {"k": 8})
    ok = (
        caesar.value == 25
        and playfair.value == math.factorial(25)
        and playfair.scientific == "1.55 × 10^25"
        and rkm8.value == math.perm(94, 8)
    )
    criterion("C3 keyspace caesar=25, playfair=25! (1.55 × 10^25), rkm=P(94,k)", ok, playfair.scientific)
    assert caesar.value == 25
    assert playfair.value == math.factorial(25)
    assert playfair.scientific == "1.55 × 10^25"
    assert rkm8.value == math.perm(94, 8)


def test_c4a_entropy_uniform(criterion):
    h = shannon_entropy(frequency_histogram(ALPHABET.encode() * 10)).bits_per_symbol
    ok = abs(h - LOG2_94) <= 1e-6
    criterion("C4a uniform 94-symbol entropy = 6.554589 ± 1e-6", ok, f"{h:.7f}")
    assert abs(h - LOG2_94) <= 1e-6


def test_c4b_entropy_corpus_k6(criterion):
    plaintext = generate_corpus("english-like", 1024, 0).data
    m = generate_matrix(0)
    key = generate_key(m, 6, 0)
    h = shannon_entropy(frequency_histogram(encrypt(m, key, plaintext))).bits_per_symbol
    ok = 6.0 <= h <= 6.5546
    criterion("C4b 1KB English, k=6: ciphertext entropy in [6.0, 6.5546]", ok, f"{h:.4f}")
    assert 6.0 <= h <= 6.5546


def _keyword(rng, length):
    return "".join(rng.choice(string.ascii_uppercase) for _ in range(length))


def test_c5_kasiski_contrast(criterion):
    corpus = generate_corpus("english-like", 1000, 0).data
    rng = random.Random(0)
    vigenere = {}
    for length in (2, 3):
        ct = vigenere_encrypt(_keyword(rng, length), corpus)
        assert len(ct) >= 600
        vigenere[length] = kasiski_classic(ct, 5).estimated_key_length

    correct = 0
    for trial in range(20):
        k = 4 + trial % 5
        m = generate_matrix(trial)
        key = generate_key(m, k, trial)
        ct = encrypt(m, key, generate_corpus("english-like", 1000, trial).data)
        if kasiski_classic(ct, 5).estimated_key_length == k:
            correct += 1

    ok = vigenere == {2: 2, 3: 3} and correct <= 10
    criterion(
        "C5 classic Kasiski recovers Vigenere L in {2,3}; rkm k in 4..8 correct <= 10/20",
        ok,
        f"vigenere={vigenere}, rkm correct={correct}/20",
    )
    assert vigenere == {2: 2, 3: 3}
    assert correct <= 10


def test_c6_frequency_flattening(criterion):
    plaintext = generate_corpus("english-like", 10240, 0).data
    m = generate_matrix(0)
    key = generate_key(m, 6, 0)
    ct = encrypt(m, key, plaintext)
    h_ct = shannon_entropy(frequency_histogram(alphabet_symbols(ct))).bits_per_symbol
    h_pt = shannon_entropy(frequency_histogram(plaintext)).bits_per_symbol
    criterion("C6 ciphertext symbol entropy > plaintext entropy (10KB, k=6)", h_ct > h_pt, f"{h_ct:.4f} > {h_pt:.4f}")
    assert h_ct > h_pt


def test_c7_expansion_and_tamper(criterion):
    rng = random.Random(7)
    expansion_bad = 0
    for case in range(200):
        m = generate_matrix(case)
        key = generate_key(m, rng.randint(1, 16), case)
        data = rng.randbytes(rng.randint(0, 2000)) if case % 2 else generate_corpus("english-like", rng.randint(0, 2000), case).data
        symbols = sum(1 for b in data if 0x21 <= b <= 0x7E)
        ct_text = encrypt(m, key, data, "text")
        ct_bin = encrypt(m, key, data, "binary")
        if sum(1 for b in ct_text if 0x21 <= b <= 0x7E) != key.k * symbols:
            expansion_bad += 1
        if len(ct_bin) != 2 * key.k * len(data):
            expansion_bad += 1

    silent = 0
    inconsistent = 0
    for case in range(200):
        m = generate_matrix(1000 + case)
        key = generate_key(m, rng.randint(2, 16), case)
        mode = "text" if case % 2 else "binary"
        data = generate_corpus("english-like", rng.randint(1, 500), case).data
        ct = bytearray(encrypt(m, key, data, mode))
        positions = [i for i, b in enumerate(ct) if 0x21 <= b <= 0x7E]
        i = rng.choice(positions)
        ct[i] = rng.choice([c for c in ALPHABET.encode() if c != ct[i]])
        try:
            if decrypt(m, key, bytes(ct), mode) == data:
                silent += 1
        except InconsistentBlock:
            inconsistent += 1

    ok = expansion_bad == 0 and silent == 0
    criterion(
        "C7 expansion k×/2k× on 200 cases; 200 corruptions never silent",
        ok,
        f"expansion mismatches={expansion_bad}, silent={silent}, inconsistent={inconsistent}/200",
    )
    assert expansion_bad == 0
    assert silent == 0


def test_c8_matrix_format(criterion):
    mismatches = sum(
        1 for seed in range(100) if parse_matrix(serialize_matrix(generate_matrix(seed))) != generate_matrix(seed)
    )
    m = generate_matrix(3)
    blob = serialize_matrix(m)
    errors = {}
    for name, bad, exc in [
        ("BadMagic", blob.replace(b"RKMX 1", b"XXXX 1", 1), BadMagic),
        ("BadDimensions", ("\n".join(["RKMX 1", ALPHABET] + [ALPHABET[:93]] * 94) + "\n").encode(), BadDimensions),
        ("InvalidMatrix", serialize_matrix(KeyMatrix(ALPHABET, (m.rows[0],) * 94)), InvalidMatrix),
    ]:
        try:
            parse_matrix(bad)
            errors[name] = "no error"
        except exc:
            errors[name] = "ok"
        except Exception as other:  # wrong error type
            errors[name] = type(other).__name__
    ok = mismatches == 0 and all(v == "ok" for v in errors.values())
    criterion("C8 RKMX1 roundtrip x100 and three malformed-file errors", ok, f"mismatches={mismatches}, {errors}")
    assert mismatches == 0
    assert all(v == "ok" for v in errors.values()), errors


def test_c9_performance(criterion):
    sizes = [10 * 1024, 500 * 1024, 1024 * 1024]
    corpora = [generate_corpus("english-like", s, 0) for s in sizes]
    params = {"key_length": 8}
    enc = [time_operation("rkm", "encrypt", params, c).duration for c in corpora]
    dec = [time_operation("rkm", "decrypt", params, c).duration for c in corpora]
    within = enc[-1] < 2.0 and dec[-1] < 2.0
    monotone = enc == sorted(enc) and dec == sorted(dec)
    criterion(
        "C9 1MB k=8 encrypt/decrypt < 2 s; durations non-decreasing 10KB->500KB->1MB",
        within and monotone,
        "enc=" + "/".join(f"{d:.4f}" for d in enc) + " dec=" + "/".join(f"{d:.4f}" for d in dec),
    )
    assert within
    assert monotone
