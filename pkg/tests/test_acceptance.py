"""Acceptance suite: one test per criterion, exact arithmetic throughout.

Each criterion prints a single pass/fail line (written past pytest's
capture so it is visible in any invocation) including the measured
runtime against the budget.
"""

import random
import time
from fractions import Fraction
from math import gcd

from fuscat.amplitude import (
    amplitude_T4_normalized,
    casimir_square_coefficient,
    quantum_T4,
    sl2_adjoint,
)
from fuscat.arith import factorize, primes_upto, totient
from fuscat.cyclotomic import CycNum, cyclotomic_polynomial, q_integer
from fuscat.finitegroup import (
    builtin_group,
    char_degrees,
    double_cosets,
    ito_michler_verify,
    parse_gens,
    rep_bad_primes,
    rep_good_primes,
    stabilizer_intersection,
)
from fuscat.gtcat import enumerate_simples, gt_bad_primes
from fuscat.rootsys import build_root_system
from fuscat.verlinde import Verdict, classify_prime, scan_dimension_witnesses, simple_objects

CASES = 1000  # randomized cases per property suite (criterion 10)


def _criterion(num, name, budget_s, fn, emit):
    t0 = time.monotonic()
    try:
        fn()
        ok = True
    except AssertionError:
        ok = False
        raise
    finally:
        elapsed = time.monotonic() - t0
        emit(
            f"[criterion {num:>2}] {name}: {'PASS' if ok else 'FAIL'} "
            f"({elapsed:.2f}s, budget {budget_s}s, tolerance exact)\n"
        )
    assert elapsed < budget_s, f"criterion {num} exceeded its {budget_s}s budget"


def test_criterion_01_norm_table(report_line):
    def body():
        for n in range(2, 201):
            fac = factorize(n)
            expected = list(fac)[0] if len(fac) == 1 else 1
            assert (1 - CycNum.zeta(n)).norm() == expected, n

    _criterion(1, "norms of 1 - zeta_n follow the prime-power rule for n = 2..200", 30, body, report_line)


def test_criterion_02_rep_s3_verdicts(report_line):
    def body():
        g = builtin_group("S3")
        assert rep_bad_primes(g) == {2: 2}
        assert rep_good_primes(g) == [3]

    _criterion(2, "representation category of S3: bad = {2}, 3 is good", 1, body, report_line)


def test_criterion_03_group_theoretical_consistency(report_line):
    def body():
        g = builtin_group("S3")
        h = g.subgroup(parse_gens("(1 2)", 3))
        for sub in (g, h):
            simples = enumerate_simples(g, sub)
            assert sum(s.dimension**2 for s in simples) == 6
            assert sorted(gt_bad_primes(g, sub)) == [2]

    _criterion(3, "bimodule categories over (S3, S3) and (S3, S2) agree: bad = {2}", 1, body, report_line)


def test_criterion_04_prime_level_units_and_good_verdicts(report_line):
    def body():
        primes = primes_upto(100)
        for label in ("A1", "A2"):
            rs = build_root_system(label)
            for l in (7, 11, 13):
                for s in simple_objects(rs, l):
                    assert abs(s.qdim_norm) == 1, (label, l, s.weight)
                for p in primes:
                    assert classify_prime(rs, l, p).verdict == Verdict.GOOD

    _criterion(4, "prime levels: all dimension norms are units and every p <= 100 is good", 60, body, report_line)


def test_criterion_05_divisor_primes_are_bad_with_verified_witness(report_line):
    def body():
        for label, l, p in [("A1", 9, 3), ("A2", 9, 3), ("A1", 15, 3), ("A1", 15, 5)]:
            rs = build_root_system(label)
            v = classify_prime(rs, l, p)
            assert v.verdict == Verdict.BAD
            expected_witness = tuple([l // p - 1] * rs.rank)
            assert v.witness == expected_witness
            scanned = scan_dimension_witnesses(rs, l, p)
            assert v.witness in scanned

    _criterion(5, "composite levels: divisor primes p >= h are bad, witness (l/p-1)*rho confirmed", 60, body, report_line)


def test_criterion_06_level8_dimensions_and_quantum_certificate(report_line):
    def body():
        simples = simple_objects(build_root_system("A1"), 8)
        assert len(simples) == 7
        sqrt2 = CycNum.zeta(16, 2) - CycNum.zeta(16, 6)
        dims = [s.qdim for s in simples]
        assert dims[0] == 1 and dims[6] == 1
        assert dims[2] == 1 + sqrt2 and dims[4] == 1 + sqrt2
        assert dims[1] == q_integer(2, 8)
        assert dims[3] == q_integer(4, 8)
        assert dims[5] == q_integer(6, 8)
        for m in (0, 2, 4, 6):
            assert abs(simples[m].qdim_norm) == 1
        v = quantum_T4(8)
        assert v * v == Fraction(1, 2)
        assert v.den % 2 == 0

    _criterion(6, "level 8: seven simples with the stated dims, unit even part, square amplitude 1/sqrt(2)", 5, body, report_line)


def test_criterion_07_classical_square_amplitude(report_line):
    def body():
        t = sl2_adjoint()
        assert amplitude_T4_normalized(t) == Fraction(3, 2)
        assert casimir_square_coefficient(t) == Fraction(3, 2)

    _criterion(7, "classical square amplitude = 3/2 by graph contraction and by the trace identity", 1, body, report_line)


def test_criterion_08_character_degree_engine(report_line):
    classical = {
        "S3": (1, 1, 2),
        "S4": (1, 1, 2, 3, 3),
        "S5": (1, 1, 4, 4, 5, 5, 6),
        "A4": (1, 1, 1, 3),
        "A5": (1, 3, 3, 4, 5),
        "D8": (1, 1, 1, 1, 2),
        "Q8": (1, 1, 1, 1, 2),
    }
    corpus = list(classical) + ["S6", "A6", "SL23", "C12", "D12", "D20", "S3xC4", "S3xS3"]

    def body():
        for name, degs in classical.items():
            assert char_degrees(builtin_group(name)) == degs, name
        for name in corpus:
            g = builtin_group(name)
            got = char_degrees(g)
            assert sum(d * d for d in got) == g.order
            assert len(got) == len(g.conjugacy_classes())

    _criterion(8, "character degrees match the classical tables across the corpus", 60, body, report_line)


def test_criterion_09_sylow_structure_verification(report_line):
    def body():
        r = ito_michler_verify(builtin_group("A4"), 2)
        assert r.applicable and r.sylow_order == 4 and r.complement_order == 3
        assert r.sylow_normal and r.sylow_abelian
        r = ito_michler_verify(builtin_group("S3"), 3)
        assert r.applicable and r.sylow_order == 3 and r.complement_order == 2
        assert r.sylow_normal and r.sylow_abelian
        r = ito_michler_verify(builtin_group("S4"), 2)
        assert not r.applicable and r.offending_degree == 2

    _criterion(9, "normal abelian Sylow verification on (A4,2), (S3,3); (S4,2) not applicable", 1, body, report_line)


def test_criterion_10_randomized_property_suites(report_line):
    conductors = [1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 15, 16, 18, 20, 24]

    def rand_cyc(rng, n, integral=True):
        coeffs = [rng.randint(-6, 6) for _ in range(totient(n))]
        return CycNum(n, coeffs, 1 if integral else rng.randint(1, 9))

    def body():
        rng = random.Random(20260809)

        for _ in range(CASES):  # norm multiplicativity
            n = rng.choice(conductors)
            a, b = rand_cyc(rng, n), rand_cyc(rng, n)
            assert (a * b).norm() == a.norm() * b.norm()

        for _ in range(CASES):  # Galois invariance of norms
            n = rng.choice(conductors)
            a = rand_cyc(rng, n, integral=False)
            s = rng.choice([s for s in range(1, n + 1) if gcd(s, n) == 1])
            assert a.galois(s).norm() == a.norm()

        for _ in range(CASES):  # cyclotomic product identity
            n = rng.randint(1, 200)
            prod = [1]
            for d in range(1, n + 1):
                if n % d == 0:
                    phi = list(cyclotomic_polynomial(d).coeffs)
                    out = [0] * (len(prod) + len(phi) - 1)
                    for i, x in enumerate(prod):
                        if x:
                            for j, y in enumerate(phi):
                                out[i + j] += x * y
                    prod = out
            assert prod == [-1] + [0] * (n - 1) + [1]

        for _ in range(CASES):  # div/mul round trips
            a = rand_cyc(rng, rng.choice(conductors), integral=False)
            b = rand_cyc(rng, rng.choice(conductors), integral=False)
            if b.is_zero:
                b = b + 1
            assert (a * b) / b == a

        groups = [builtin_group(name) for name in ("S3", "A4", "D8", "Q8", "S4")]
        for _ in range(CASES):  # double-coset size sums
            g = rng.choice(groups)
            h = g.subgroup([rng.choice(g.elements), rng.choice(g.elements)])
            dcs = double_cosets(g, h)
            assert sum(size for _, size in dcs) == g.order
            rep, size = rng.choice(dcs)
            assert size == h.order**2 // stabilizer_intersection(g, h, rep).order

    _criterion(10, f"randomized property suites, {CASES} cases each, zero failures", 120, body, report_line)
