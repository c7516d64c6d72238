"""Quantum dimensions at roots of unity and the good/bad prime classifier.

Dimensions are evaluated from the quantum Weyl product over positive roots
at q = zeta_{2l}; field norms of the dimensions decide divisibility by a
prime.  The classifier only answers inside its hypotheses (l odd, l > h,
and for divisor primes p >= h); everything else is reported OutsideTheorem
rather than guessed.  An exhaustive alcove scan of the necessary condition
(p divides the norm of some dimension) serves as an independent check.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd

from .arith import is_prime
from .cyclotomic import CycNum, q_integer
from .errors import InternalCheckError, PreconditionError
from .rootsys import RootSystem, Weight, enumerate_alcove, pairing, rho_pairing


class Verdict(Enum):
    GOOD = "Good"
    BAD = "Bad"
    OUTSIDE_THEOREM = "OutsideTheorem"


# machine-readable reason tags for PrimeVerdict
REASON_COPRIME_CONSTRUCTION = "coprime-construction"
REASON_LEVEL_PRIME_SYMMETRIC = "level-prime-symmetric"
REASON_LEVEL_DIVISOR_WITNESS = "level-divisor-witness"
REASON_DIMENSION_WITNESS = "dimension-witness"
REASON_HYPOTHESIS_FAILURE = "hypothesis-failure"


@dataclass(frozen=True)
class PrimeVerdict:
    prime: int
    verdict: Verdict
    reason: str
    witness: Weight | None = None
    detail: str | None = None


@dataclass(frozen=True)
class VerlindeSimple:
    weight: Weight
    qdim: CycNum
    qdim_norm: int


def qdim(rs: RootSystem, l: int, weight: Weight) -> CycNum:
    """Quantum dimension of the simple labelled by an alcove weight.

    Product over positive roots of [(lambda+rho, alpha)] / [(rho, alpha)]
    at q = zeta_{2l}; the alcove condition keeps every factor nonzero.
    """
    if len(weight) != rs.rank or any(w < 0 for w in weight):
        raise PreconditionError(f"{weight} is not a dominant weight of {rs.label}")
    if pairing(weight, rs.highest_root) >= l:
        raise PreconditionError(f"weight {weight} lies outside the level-{l} alcove")
    num = CycNum.one()
    den = CycNum.one()
    for alpha in rs.positive_roots:
        num = num * q_integer(pairing(weight, alpha), l)
        den = den * q_integer(rho_pairing(alpha), l)
    dim = num / den
    if not dim.is_integral:
        raise InternalCheckError(f"quantum dimension of {weight} is not integral")
    return dim


def simple_objects(rs: RootSystem, l: int) -> list[VerlindeSimple]:
    """All alcove simples with their exact dimensions and dimension norms."""
    out = []
    for w in enumerate_alcove(rs, l):
        d = qdim(rs, l, w)
        n = d.norm()
        if n.denominator != 1:
            raise InternalCheckError("norm of an integral dimension is not an integer")
        out.append(VerlindeSimple(weight=w, qdim=d, qdim_norm=n.numerator))
    return out


def _check_theorem_hypotheses(rs: RootSystem, l: int) -> None:
    h = rs.coxeter_number
    if l % 2 == 0:
        raise PreconditionError(f"classifier requires odd l, got l={l}")
    if l <= h:
        raise PreconditionError(f"classifier requires l > h; l={l}, h={h} for {rs.label}")


def classify_prime(rs: RootSystem, l: int, p: int) -> PrimeVerdict:
    """Good/bad verdict for p, valid for odd l > h.

    Coprime p admit the root-of-unity construction in characteristic p;
    for prime l the remaining p = l has a symmetric-category reduction.
    For composite l a divisor prime p >= h is bad, certified by the
    witness weight (l/p - 1)*rho whose dimension norm p divides; divisor
    primes p < h are outside the classification (it genuinely fails
    there) and are reported as such.
    """
    _check_theorem_hypotheses(rs, l)
    if not is_prime(p):
        raise PreconditionError(f"{p} is not prime")
    h = rs.coxeter_number
    if gcd(p, l) == 1:
        return PrimeVerdict(p, Verdict.GOOD, REASON_COPRIME_CONSTRUCTION)
    if is_prime(l):
        return PrimeVerdict(p, Verdict.GOOD, REASON_LEVEL_PRIME_SYMMETRIC)
    if p < h:
        return PrimeVerdict(
            p,
            Verdict.OUTSIDE_THEOREM,
            REASON_HYPOTHESIS_FAILURE,
            detail=f"p={p} divides composite l={l} but p < h={h}",
        )
    witness: Weight = tuple([l // p - 1] * rs.rank)
    norm = qdim(rs, l, witness).norm().numerator
    if norm % p:
        raise InternalCheckError(
            f"witness weight {witness} has norm {norm} not divisible by {p}"
        )
    return PrimeVerdict(p, Verdict.BAD, REASON_LEVEL_DIVISOR_WITNESS, witness=witness)


def scan_dimension_witnesses(rs: RootSystem, l: int, p: int) -> list[Weight]:
    """All alcove weights whose dimension norm p divides (necessary condition).

    Runs for any l > h, including even l where the classifier refuses; a
    non-empty result only certifies failure of the coprimality condition.
    """
    if not is_prime(p):
        raise PreconditionError(f"{p} is not prime")
    return [s.weight for s in simple_objects(rs, l) if s.qdim_norm % p == 0]
