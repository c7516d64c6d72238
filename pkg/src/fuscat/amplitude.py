"""Trivalent-graph amplitude certificates.

A Tensor3 packages the structure constants of an antisymmetric product m
on a 3-dimensional space together with the Gram matrix of an invariant
symmetric pairing b.  Amplitudes of the two smallest planar trivalent
graphs are evaluated by index contraction, with raised indices supplied by
the inverse Gram matrix, so everything stays in exact rational arithmetic:

    A(T2) = Tr(m m*)            (theta graph: two vertices, three edges)
    A(T4) = Tr(m (1 x m) (m* x 1) m*)   (square with diagonals)

The normalization-independent certificate rescales the vertex so that the
two-vertex bubble subgraph acts as the identity morphism on an edge (the
closed theta graph then evaluates to the loop value dim X); the square
amplitude becomes dim^2 A(T4)/A(T2)^2, which is invariant under rescaling
either m or b.  The quantum analogue of the square graph for the rank-one
root system is evaluated from its closed form in quantum integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .cyclotomic import CycNum, q_integer
from .errors import InternalCheckError, PreconditionError

Mat3 = tuple[tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class Tensor3:
    """Structure constants m[i][j][k] (coefficient of e_k in m(e_i, e_j))
    and the Gram matrix gram[i][j] = b(e_i, e_j)."""

    m: tuple[tuple[tuple[Fraction, ...], ...], ...]
    gram: Mat3

    def validate(self) -> None:
        for i, j in product(range(3), repeat=2):
            if self.gram[i][j] != self.gram[j][i]:
                raise PreconditionError("pairing is not symmetric")
            for k in range(3):
                if self.m[i][j][k] != -self.m[j][i][k]:
                    raise PreconditionError("product is not antisymmetric")
        if _det3(self.gram) == 0:
            raise PreconditionError("pairing is degenerate")
        low = _lower(self.m, self.gram)
        for i, j, k in product(range(3), repeat=3):
            if low[i][j][k] != low[j][k][i]:
                raise PreconditionError("pairing is not invariant for the product")


def _det3(g: Mat3) -> Fraction:
    return (
        g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1])
        - g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0])
        + g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0])
    )


def _inv3(g: Mat3) -> Mat3:
    d = _det3(g)
    if d == 0:
        raise PreconditionError("pairing is degenerate")
    cof = [
        [
            (g[(r + 1) % 3][(c + 1) % 3] * g[(r + 2) % 3][(c + 2) % 3]
             - g[(r + 1) % 3][(c + 2) % 3] * g[(r + 2) % 3][(c + 1) % 3])
            for r in range(3)
        ]
        for c in range(3)
    ]
    return tuple(tuple(v / d for v in row) for row in cof)


def _lower(m, gram):
    """T[i][j][k] = b(m(e_i, e_j), e_k)."""
    return [
        [
            [sum(m[i][j][l] * gram[l][k] for l in range(3)) for k in range(3)]
            for j in range(3)
        ]
        for i in range(3)
    ]


def _dualized_product(t: Tensor3):
    """(m*)[l][a][c]: components of the map X -> X (x) X dual to m under b."""
    ginv = _inv3(t.gram)
    return [
        [
            [
                sum(
                    t.gram[l][k] * t.m[i][j][k] * ginv[i][a] * ginv[j][c]
                    for k in range(3)
                    for i in range(3)
                    for j in range(3)
                )
                for c in range(3)
            ]
            for a in range(3)
        ]
        for l in range(3)
    ]


def sl2_adjoint() -> Tensor3:
    """The rank-three Lie bracket tensor in the basis (e, h, f), with the
    trace form of the adjoint action as the pairing."""
    m = [[[Fraction(0)] * 3 for _ in range(3)] for _ in range(3)]

    def set_bracket(i, j, coeffs):
        for k, c in enumerate(coeffs):
            m[i][j][k] = Fraction(c)
            m[j][i][k] = Fraction(-c)

    set_bracket(0, 1, (-2, 0, 0))  # [e, h] = -2e
    set_bracket(0, 2, (0, 1, 0))   # [e, f] = h
    set_bracket(1, 2, (0, 0, -2))  # [h, f] = -2f
    ad = [_ad_matrix(m, i) for i in range(3)]
    gram = tuple(
        tuple(_trace(_mat_mul(ad[i], ad[j])) for j in range(3)) for i in range(3)
    )
    t = Tensor3(m=tuple(tuple(tuple(r) for r in row) for row in m), gram=gram)
    t.validate()
    return t


def _ad_matrix(m, i) -> Mat3:
    return tuple(tuple(m[i][j][k] for j in range(3)) for k in range(3))


def _mat_mul(a: Mat3, b: Mat3) -> Mat3:
    return tuple(
        tuple(sum(a[i][l] * b[l][j] for l in range(3)) for j in range(3))
        for i in range(3)
    )


def _trace(a: Mat3) -> Fraction:
    return a[0][0] + a[1][1] + a[2][2]


def amplitude_T2(t: Tensor3) -> Fraction:
    """Theta-graph amplitude Tr(m m*)."""
    t.validate()
    mstar = _dualized_product(t)
    return sum(
        mstar[l][a][c] * t.m[a][c][l] for l, a, c in product(range(3), repeat=3)
    )


def amplitude_T4(t: Tensor3) -> Fraction:
    """Square-with-diagonals amplitude Tr(m (1 x m) (m* x 1) m*), unnormalized."""
    t.validate()
    mstar = _dualized_product(t)
    total = Fraction(0)
    for tt, a, b in product(range(3), repeat=3):
        if not mstar[tt][a][b]:
            continue
        for c, d in product(range(3), repeat=2):
            if not mstar[a][c][d]:
                continue
            for e in range(3):
                total += (
                    mstar[tt][a][b]
                    * mstar[a][c][d]
                    * t.m[d][b][e]
                    * t.m[c][e][tt]
                )
    return total


def amplitude_T4_normalized(t: Tensor3) -> Fraction:
    """Square amplitude with the bubble-normalized vertex.

    The vertex is rescaled so that the open two-vertex bubble equals the
    identity on an edge, which makes the square graph evaluate to
    dim^2 A(T4)/A(T2)^2; the double ratio is invariant under rescaling
    either the product or the pairing.
    """
    a2 = amplitude_T2(t)
    if a2 == 0:
        raise PreconditionError("theta-graph amplitude vanishes; cannot normalize")
    return 9 * amplitude_T4(t) / a2**2


def casimir_square_coefficient(t: Tensor3) -> Fraction:
    """Independent route to the normalized square amplitude.

    In the representation of the algebra on itself, the quartic contraction
    sum_{a,b} y_a y_b y^a y^b (dual bases with respect to the pairing) acts
    as a scalar, and its trace equals this coefficient times the square of
    the Casimir scalar (the scalar by which sum_a y_a y^a acts).  Everything
    is an exact 3x3 matrix computation.
    """
    t.validate()
    ad = [_ad_matrix(t.m, i) for i in range(3)]
    ginv = _inv3(t.gram)
    dual = [
        tuple(
            tuple(sum(ginv[a][b] * ad[b][r][c] for b in range(3)) for c in range(3))
            for r in range(3)
        )
        for a in range(3)
    ]
    casimir = _mat_sum(_mat_mul(ad[a], dual[a]) for a in range(3))
    lhs = _mat_sum(
        _mat_mul(_mat_mul(ad[a], ad[b]), _mat_mul(dual[a], dual[b]))
        for a in range(3)
        for b in range(3)
    )
    _scalar_of(lhs)
    r = _scalar_of(casimir)
    if r == 0:
        raise InternalCheckError("quadratic element vanished")
    return _trace(lhs) / r**2


def _mat_sum(mats) -> Mat3:
    acc = [[Fraction(0)] * 3 for _ in range(3)]
    for m in mats:
        for i in range(3):
            for j in range(3):
                acc[i][j] += m[i][j]
    return tuple(tuple(row) for row in acc)


def _scalar_of(m: Mat3) -> Fraction:
    for i in range(3):
        for j in range(3):
            if i != j and m[i][j] != 0:
                raise InternalCheckError("matrix is not scalar")
    if m[0][0] != m[1][1] or m[1][1] != m[2][2]:
        raise InternalCheckError("matrix is not scalar")
    return m[0][0]


def quantum_T4(l: int) -> CycNum:
    """Square-graph amplitude [3]([3]-2)/([3]-1) at q = zeta_{2l}.

    At l = 8 the value squares to 1/2, so its canonical form has an even
    denominator: the certificate that 2 is not invertible against it.
    """
    q3 = q_integer(3, l)
    den = q3 - 1
    if den.is_zero:
        raise PreconditionError(f"amplitude denominator [3]-1 vanishes at l={l}")
    val = (q3 * (q3 - 2)) / den
    if l == 8:
        if val * val != Fraction(1, 2):
            raise InternalCheckError("square amplitude at l=8 does not square to 1/2")
        if val.den % 2:
            raise InternalCheckError("denominator at l=8 is odd")
    return val


def quantum_certificate(l: int, pmax: int = 50) -> dict:
    """Denominator divisibility data for the quantum square amplitude."""
    from .arith import primes_upto

    val = quantum_T4(l)
    sq = val * val
    return {
        "l": l,
        "value": val,
        "square": sq.as_fraction() if sq.is_rational else None,
        "denominator": val.den,
        "denominator_primes": [p for p in primes_upto(pmax) if val.den % p == 0],
    }
