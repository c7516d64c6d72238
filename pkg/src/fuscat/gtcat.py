"""Simple objects and bad primes of group-theoretical categories.

Only the trivial-cocycle case is computed: simples are indexed by pairs
(double coset HgH, irreducible character of the stabilizer H^g) with
dimension |H|/|H^g| * deg; a prime is bad exactly when it divides one of
these dimensions.  The trivial-cocycle restriction is stamped into every
report the CLI emits.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import prime_factors
from .errors import InternalCheckError, PreconditionError
from .finitegroup import (
    Perm,
    PermGroup,
    char_degrees,
    double_cosets,
    stabilizer_intersection,
)

COCYCLE_RESTRICTION = "trivial cocycles only (omega = 1, psi = 1)"


@dataclass(frozen=True)
class GTSimple:
    coset_rep: Perm
    stabilizer_order: int
    irrep_degree: int
    dimension: int


def enumerate_simples(g: PermGroup, h: PermGroup) -> list[GTSimple]:
    """Simples of the bimodule category attached to (G, H), trivial cocycles."""
    if not g.is_subgroup(h):
        raise PreconditionError("H is not a subgroup of G")
    simples: list[GTSimple] = []
    for rep, size in double_cosets(g, h):
        stab = stabilizer_intersection(g, h, rep)
        if size * stab.order != h.order * h.order:
            raise InternalCheckError("double coset size does not match |H|^2/|H^g|")
        for d in char_degrees(stab):
            simples.append(
                GTSimple(
                    coset_rep=rep,
                    stabilizer_order=stab.order,
                    irrep_degree=d,
                    dimension=(h.order // stab.order) * d,
                )
            )
    if sum(s.dimension**2 for s in simples) != g.order:
        raise InternalCheckError("sum of squared dimensions is not |G|")
    return simples


def gt_bad_primes(g: PermGroup, h: PermGroup) -> dict[int, GTSimple]:
    """Primes dividing the dimension of some simple, with witness simples."""
    out: dict[int, GTSimple] = {}
    for s in enumerate_simples(g, h):
        for p in prime_factors(s.dimension):
            out.setdefault(p, s)
    return dict(sorted(out.items()))
