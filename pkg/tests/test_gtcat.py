import random

import pytest

from fuscat.errors import PreconditionError
from fuscat.finitegroup import builtin_group, char_degrees, parse_gens, rep_bad_primes
from fuscat.gtcat import enumerate_simples, gt_bad_primes


def dims(simples):
    return sorted(s.dimension for s in simples)


def test_full_subgroup_recovers_representation_degrees():
    g = builtin_group("S3")
    assert dims(enumerate_simples(g, g)) == [1, 1, 2]
    g4 = builtin_group("S4")
    assert dims(enumerate_simples(g4, g4)) == sorted(char_degrees(g4))


def test_s3_with_transposition_subgroup():
    # the two-element subgroup gives double cosets of sizes 2 and 4 with
    # stabilizers of orders 2 and 1, reproducing the dimensions {1, 1, 2}
    g = builtin_group("S3")
    h = g.subgroup(parse_gens("(1 2)", 3))
    simples = enumerate_simples(g, h)
    assert dims(simples) == [1, 1, 2]
    assert sum(s.dimension**2 for s in simples) == 6
    assert sorted(s.stabilizer_order for s in simples) == [1, 2, 2]


def test_trivial_subgroup_is_pointed():
    g = builtin_group("A4")
    h = g.subgroup(parse_gens("e", 4))
    simples = enumerate_simples(g, h)
    assert dims(simples) == [1] * 12
    assert gt_bad_primes(g, h) == {}


def test_bad_primes_examples():
    g = builtin_group("S3")
    assert sorted(gt_bad_primes(g, g.subgroup(parse_gens("(1 2)", 3)))) == [2]
    g4 = builtin_group("S4")
    assert sorted(gt_bad_primes(g4, g4)) == [2, 3]


def test_bad_prime_witnesses_divide():
    g = builtin_group("S4")
    h = g.subgroup(parse_gens("(1 2),(3 4)", 4))
    for p, witness in gt_bad_primes(g, h).items():
        assert witness.dimension % p == 0


@pytest.mark.parametrize("name", ["S3", "A4", "S4", "D8", "Q8", "SL23"])
def test_consistency_with_representation_verdicts(name):
    g = builtin_group(name)
    assert set(gt_bad_primes(g, g)) == set(rep_bad_primes(g))


def test_global_dimension_over_random_subgroups():
    rng = random.Random(11)
    for name in ("S3", "A4", "S4", "D12", "S3xC4"):
        g = builtin_group(name)
        for _ in range(4):
            h = g.subgroup([rng.choice(g.elements), rng.choice(g.elements)])
            simples = enumerate_simples(g, h)
            assert sum(s.dimension**2 for s in simples) == g.order
            for p in gt_bad_primes(g, h):
                assert g.order % p == 0  # bad primes divide the global dimension


def test_subgroup_required():
    g = builtin_group("A4")
    with pytest.raises(PreconditionError):
        enumerate_simples(g, builtin_group("S4"))
