"""Finite permutation groups at desk scale.

Groups are enumerated explicitly (orbit closure of the generators) up to a
configurable cap; conjugacy classes, double cosets and subgroup
intersections are computed directly on the element table.

Character degrees come from the class-multiplication-coefficient method:
the integer class matrices commute and split into common one-dimensional
eigenspaces over a prime field F_q chosen with q = 1 mod exp(G) and
q > 2*sqrt(|G|); each common eigenvector is a central character, and the
squared degree is recovered from the orthogonality sum and lifted to the
unique integer square root in (0, sqrt(|G|)].  Only degrees are computed;
character values are never needed downstream.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from math import gcd, isqrt, lcm

from .arith import is_prime, p_part, prime_factors
from .errors import InternalCheckError, PreconditionError

Perm = tuple[int, ...]

DEFAULT_ENUM_CAP = 20000
ENUM_CAP_ENV = "FUSCAT_ENUM_CAP"


def _enum_cap(cap: int | None) -> int:
    if cap is not None:
        return cap
    env = os.environ.get(ENUM_CAP_ENV)
    return int(env) if env else DEFAULT_ENUM_CAP


# ---------------------------------------------------------------------------
# permutations: tuples of images, 0-indexed; a*b applies a first, then b


def perm_identity(degree: int) -> Perm:
    return tuple(range(degree))


def perm_mul(a: Perm, b: Perm) -> Perm:
    return tuple(b[a[i]] for i in range(len(a)))


def perm_inv(a: Perm) -> Perm:
    out = [0] * len(a)
    for i, v in enumerate(a):
        out[v] = i
    return tuple(out)


def perm_order(a: Perm) -> int:
    return lcm(*(len(c) for c in _cycles(a))) if _cycles(a) else 1


def _cycles(a: Perm) -> list[list[int]]:
    seen = [False] * len(a)
    out = []
    for start in range(len(a)):
        if not seen[start]:
            cyc = []
            i = start
            while not seen[i]:
                seen[i] = True
                cyc.append(i)
                i = a[i]
            if len(cyc) > 1:
                out.append(cyc)
    return out


def perm_to_cycles(a: Perm) -> str:
    """Cycle notation, 1-indexed; 'e' for the identity."""
    cycs = _cycles(a)
    if not cycs:
        return "e"
    return "".join("(" + " ".join(str(i + 1) for i in c) + ")" for c in cycs)


def parse_perm(text: str, degree: int | None = None) -> Perm:
    """Parse 1-indexed cycle notation like '(1 2)(3 4)'; 'e' or '()' is the identity.

    Several cycles compose left to right (the leftmost acts first).
    """
    text = text.strip()
    if text in ("e", "()", "id", ""):
        return perm_identity(degree or 1)
    if not re.fullmatch(r"(\s*\(\s*\d+(?:[\s,]+\d+)*\s*\)\s*)+", text):
        raise PreconditionError(f"cannot parse permutation {text!r}")
    cycles = []
    maxpt = 0
    for body in re.findall(r"\(([^()]*)\)", text):
        pts = [int(t) for t in re.split(r"[\s,]+", body.strip()) if t]
        if len(pts) != len(set(pts)):
            raise PreconditionError(f"repeated point in cycle ({body})")
        if any(p < 1 for p in pts):
            raise PreconditionError("points are 1-indexed positive integers")
        cycles.append([p - 1 for p in pts])
        maxpt = max(maxpt, max(pts))
    deg = max(degree or 0, maxpt)
    acc = perm_identity(deg)
    for cyc in cycles:
        img = list(perm_identity(deg))
        for i, pt in enumerate(cyc):
            img[pt] = cyc[(i + 1) % len(cyc)]
        acc = perm_mul(acc, tuple(img))
    return acc


def parse_gens(text: str, degree: int | None = None) -> list[Perm]:
    """Parse a comma-separated list of permutations in cycle notation."""
    parts: list[str] = []
    depth = 0
    cur = ""
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append(cur)
            cur = ""
        else:
            cur += ch
    parts.append(cur)
    raw = [parse_perm(p, degree) for p in parts if p.strip()]
    if not raw:
        raise PreconditionError("no generators given")
    deg = max(len(p) for p in raw)
    if degree:
        deg = max(deg, degree)
    return [_pad(p, deg) for p in raw]


def _pad(p: Perm, degree: int) -> Perm:
    return p if len(p) == degree else p + tuple(range(len(p), degree))


# ---------------------------------------------------------------------------
# groups


@dataclass(frozen=True)
class ConjugacyClass:
    rep: Perm
    members: tuple[int, ...]  # indices into the element table

    @property
    def size(self) -> int:
        return len(self.members)


class PermGroup:
    """A finite permutation group with a full element table."""

    def __init__(self, degree: int, generators: list[Perm], elements: list[Perm]):
        self.degree = degree
        self.generators = [_pad(g, degree) for g in generators]
        self.elements = sorted(elements)
        self.index = {g: i for i, g in enumerate(self.elements)}
        self.identity_index = self.index[perm_identity(degree)]
        self._classes: list[ConjugacyClass] | None = None
        self._class_of: list[int] | None = None
        self._degrees: tuple[int, ...] | None = None

    @classmethod
    def from_generators(
        cls, generators: list[Perm], degree: int | None = None, cap: int | None = None
    ) -> "PermGroup":
        if not generators:
            raise PreconditionError("need at least one generator")
        deg = max(len(g) for g in generators)
        if degree:
            deg = max(deg, degree)
        gens = [_pad(g, deg) for g in generators]
        cap = _enum_cap(cap)
        seen = {perm_identity(deg)}
        frontier = [perm_identity(deg)]
        while frontier:
            nxt = []
            for u in frontier:
                for s in gens:
                    v = perm_mul(u, s)
                    if v not in seen:
                        seen.add(v)
                        nxt.append(v)
                        if len(seen) > cap:
                            raise PreconditionError(
                                f"group order exceeds the enumeration cap {cap}; "
                                f"raise it via {ENUM_CAP_ENV} or the cap argument"
                            )
            frontier = nxt
        return cls(deg, gens, list(seen))

    @classmethod
    def from_elements(cls, elements: list[Perm]) -> "PermGroup":
        elems = list(dict.fromkeys(elements))
        if not elems:
            raise PreconditionError("empty element list")
        deg = len(elems[0])
        eset = set(elems)
        for a in elems:
            if perm_inv(a) not in eset:
                raise InternalCheckError("element set is not closed under inversion")
        for a in elems:
            for b in elems:
                if perm_mul(a, b) not in eset:
                    raise InternalCheckError("element set is not closed under products")
        gens = [g for g in elems if g != perm_identity(deg)] or [perm_identity(deg)]
        return cls(deg, gens, elems)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, p: Perm) -> bool:
        return p in self.index

    def __len__(self) -> int:
        return self.order

    def subgroup(self, generators: list[Perm]) -> "PermGroup":
        gens = [_pad(g, self.degree) for g in generators]
        for g in gens:
            if g not in self:
                raise PreconditionError(f"{perm_to_cycles(g)} is not an element of the group")
        return PermGroup.from_generators(gens, degree=self.degree, cap=self.order)

    def is_subgroup(self, other: "PermGroup") -> bool:
        return other.degree == self.degree and all(g in self for g in other.generators)

    def exponent(self) -> int:
        out = 1
        for g in self.elements:
            out = lcm(out, perm_order(g))
        return out

    def is_abelian(self) -> bool:
        return all(
            perm_mul(a, b) == perm_mul(b, a)
            for a in self.generators
            for b in self.generators
        )

    # -- conjugacy classes

    def conjugacy_classes(self) -> list[ConjugacyClass]:
        if self._classes is None:
            self._compute_classes()
        return self._classes

    def class_of(self) -> list[int]:
        """Element index -> conjugacy class index."""
        if self._class_of is None:
            self._compute_classes()
        return self._class_of

    def _compute_classes(self) -> None:
        n = self.order
        class_of = [-1] * n
        classes: list[ConjugacyClass] = []
        inv_gens = [perm_inv(g) for g in self.generators]
        for start in range(n):
            if class_of[start] >= 0:
                continue
            cid = len(classes)
            orbit = [start]
            class_of[start] = cid
            queue = [start]
            while queue:
                i = queue.pop()
                x = self.elements[i]
                for g, gi in zip(self.generators, inv_gens):
                    j = self.index[perm_mul(perm_mul(gi, x), g)]
                    if class_of[j] < 0:
                        class_of[j] = cid
                        orbit.append(j)
                        queue.append(j)
            classes.append(ConjugacyClass(rep=self.elements[start], members=tuple(sorted(orbit))))
        if sum(c.size for c in classes) != n:
            raise InternalCheckError("conjugacy classes do not partition the group")
        for c in classes:
            if n % c.size:
                raise InternalCheckError("conjugacy class size does not divide the order")
        self._classes = classes
        self._class_of = class_of


# ---------------------------------------------------------------------------
# linear algebra over a prime field (lists of ints mod q)


def _mat_vec(m: list[list[int]], v: list[int], q: int) -> list[int]:
    return [sum(mi[j] * v[j] for j in range(len(v)) if v[j]) % q for mi in m]


def _solve_columns(basis: list[list[int]], images: list[list[int]], q: int) -> list[list[int]]:
    """Coordinates of each image vector in the span of the basis vectors."""
    d, k = len(basis), len(basis[0])
    m = len(images)
    rows = [[basis[s][r] for s in range(d)] + [img[r] for img in images] for r in range(k)]
    pivots = []
    rr = 0
    for c in range(d):
        piv = next((i for i in range(rr, k) if rows[i][c] % q), None)
        if piv is None:
            continue
        rows[rr], rows[piv] = rows[piv], rows[rr]
        inv = pow(rows[rr][c], -1, q)
        rows[rr] = [v * inv % q for v in rows[rr]]
        for i in range(k):
            if i != rr and rows[i][c] % q:
                t = rows[i][c]
                rows[i] = [(vi - t * vr) % q for vi, vr in zip(rows[i], rows[rr])]
        pivots.append(c)
        rr += 1
        if rr == d:
            break
    if len(pivots) != d:
        raise InternalCheckError("subspace basis is rank-deficient")
    for i in range(rr, k):
        if any(rows[i][d:]):
            raise InternalCheckError("subspace is not invariant under the class matrix")
    coords = [[0] * m for _ in range(d)]
    for ri, c in enumerate(pivots):
        for j in range(m):
            coords[c][j] = rows[ri][d + j]
    return coords


def _kernel(m: list[list[int]], q: int) -> list[list[int]]:
    """Basis of the kernel of a square matrix mod q."""
    d = len(m)
    rows = [r[:] for r in m]
    pivots: list[int] = []
    rr = 0
    for c in range(d):
        piv = next((i for i in range(rr, d) if rows[i][c] % q), None)
        if piv is None:
            continue
        rows[rr], rows[piv] = rows[piv], rows[rr]
        inv = pow(rows[rr][c], -1, q)
        rows[rr] = [v * inv % q for v in rows[rr]]
        for i in range(d):
            if i != rr and rows[i][c] % q:
                t = rows[i][c]
                rows[i] = [(vi - t * vr) % q for vi, vr in zip(rows[i], rows[rr])]
        pivots.append(c)
        rr += 1
    basis = []
    for fc in range(d):
        if fc in pivots:
            continue
        v = [0] * d
        v[fc] = 1
        for ri, pc in enumerate(pivots):
            v[pc] = (-rows[ri][fc]) % q
        basis.append(v)
    return basis


def _hessenberg(m: list[list[int]], q: int) -> list[list[int]]:
    n = len(m)
    h = [row[:] for row in m]
    for j in range(n - 2):
        piv = next((i for i in range(j + 1, n) if h[i][j] % q), None)
        if piv is None:
            continue
        if piv != j + 1:
            h[piv], h[j + 1] = h[j + 1], h[piv]
            for r in range(n):
                h[r][piv], h[r][j + 1] = h[r][j + 1], h[r][piv]
        inv = pow(h[j + 1][j], -1, q)
        for i in range(j + 2, n):
            t = h[i][j] % q
            if t:
                u = t * inv % q
                hi, hj = h[i], h[j + 1]
                for c in range(n):
                    hi[c] = (hi[c] - u * hj[c]) % q
                for r in range(n):
                    h[r][j + 1] = (h[r][j + 1] + u * h[r][i]) % q
    return h


def _charpoly(m: list[list[int]], q: int) -> list[int]:
    """Characteristic polynomial mod q via Hessenberg form (ascending coeffs)."""
    n = len(m)
    h = _hessenberg(m, q)
    polys = [[1]]
    for size in range(1, n + 1):
        a = h[size - 1][size - 1] % q
        prev = polys[size - 1]
        cur = [0] * (len(prev) + 1)
        for idx, c in enumerate(prev):
            cur[idx + 1] = (cur[idx + 1] + c) % q
            cur[idx] = (cur[idx] - a * c) % q
        run = 1
        for i in range(size - 1, 0, -1):
            run = run * h[i][i - 1] % q
            t = h[i - 1][size - 1] * run % q
            if t:
                for idx, c in enumerate(polys[i - 1]):
                    cur[idx] = (cur[idx] - t * c) % q
        polys.append(cur)
    return polys[n]


def _poly_roots(coeffs: list[int], q: int) -> list[int]:
    roots = []
    for x in range(q):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * x + c) % q
        if acc == 0:
            roots.append(x)
    return roots


# ---------------------------------------------------------------------------
# character degrees


def _splitting_prime(order: int, exponent: int) -> int:
    m = 1
    while m <= 10**6:
        q = m * exponent + 1
        if q * q > 4 * order and is_prime(q):
            return q
        m += 1
    raise InternalCheckError("no splitting prime found below the search bound")


def _class_matrix(g: PermGroup, i: int) -> list[list[int]]:
    """M_i[j][k] = number of ways a fixed element of class k splits as x*y
    with x in class i and y in class j."""
    classes = g.conjugacy_classes()
    class_of = g.class_of()
    k = len(classes)
    mat = [[0] * k for _ in range(k)]
    xs = [perm_inv(g.elements[idx]) for idx in classes[i].members]
    for kk in range(k):
        z = classes[kk].rep
        for xinv in xs:
            j = class_of[g.index[perm_mul(xinv, z)]]
            mat[j][kk] += 1
    return mat


def char_degrees(g: PermGroup) -> tuple[int, ...]:
    """Sorted multiset of irreducible character degrees."""
    if g._degrees is not None:
        return g._degrees
    classes = g.conjugacy_classes()
    k = len(classes)
    order = g.order
    q = _splitting_prime(order, g.exponent())

    # split the class algebra into common eigenlines
    spaces: list[list[list[int]]] = [[[1 if r == s else 0 for r in range(k)] for s in range(k)]]
    for i in range(k):
        if all(len(w) == 1 for w in spaces):
            break
        if i == g.class_of()[g.identity_index]:
            continue
        mat = _class_matrix(g, i)
        refined: list[list[list[int]]] = []
        for w in spaces:
            if len(w) == 1:
                refined.append(w)
                continue
            images = [_mat_vec(mat, v, q) for v in w]
            # matrix of the class operator restricted to span(w), in basis w
            rt = _solve_columns(w, images, q)
            total = 0
            for lam in _poly_roots(_charpoly(rt, q), q):
                shifted = [
                    [(rt[a][b] - (lam if a == b else 0)) % q for b in range(len(w))]
                    for a in range(len(w))
                ]
                eigenspace = []
                for coords in _kernel(shifted, q):
                    vec = [0] * k
                    for s, c in enumerate(coords):
                        if c:
                            for r2 in range(k):
                                vec[r2] = (vec[r2] + c * w[s][r2]) % q
                    eigenspace.append(vec)
                if eigenspace:
                    refined.append(eigenspace)
                    total += len(eigenspace)
            if total != len(w):
                raise InternalCheckError("class-matrix eigenspaces failed to split")
        spaces = refined
    if any(len(w) != 1 for w in spaces):
        raise InternalCheckError("class matrices did not split the class algebra")

    id_class = g.class_of()[g.identity_index]
    inv_class = [
        g.class_of()[g.index[perm_inv(c.rep)]] for c in classes
    ]
    sqrt_table = {d * d % q: d for d in range(1, isqrt(order) + 1)}
    degrees = []
    for (vec,) in spaces:
        if vec[id_class] % q == 0:
            raise InternalCheckError("central character vanishes on the identity class")
        scale = pow(vec[id_class], -1, q)
        omega = [v * scale % q for v in vec]
        s = 0
        for c in range(k):
            s = (s + omega[c] * omega[inv_class[c]] * pow(classes[c].size, -1, q)) % q
        if s == 0:
            raise InternalCheckError("orthogonality sum vanished")
        d2 = order * pow(s, -1, q) % q
        d = sqrt_table.get(d2)
        if d is None or order % d:
            raise InternalCheckError(f"no valid degree lift for d^2 = {d2} mod {q}")
        degrees.append(d)
    degrees.sort()
    if len(degrees) != k or sum(d * d for d in degrees) != order:
        raise InternalCheckError("degree reconstruction failed the sum-of-squares check")
    g._degrees = tuple(degrees)
    return g._degrees


# ---------------------------------------------------------------------------
# prime criteria and structural verification


def rep_bad_primes(g: PermGroup) -> dict[int, int]:
    """Primes dividing some irreducible degree, each with a witnessing degree."""
    out: dict[int, int] = {}
    for d in char_degrees(g):
        for p in prime_factors(d):
            out.setdefault(p, d)
    return dict(sorted(out.items()))


def rep_good_primes(g: PermGroup) -> list[int]:
    """Primes dividing |G| that divide no irreducible degree."""
    bad = rep_bad_primes(g)
    return [p for p in prime_factors(g.order) if p not in bad]


@dataclass(frozen=True)
class ItoMichlerReport:
    prime: int
    applicable: bool
    offending_degree: int | None
    sylow_order: int | None
    complement_order: int | None
    sylow_abelian: bool | None
    sylow_normal: bool | None
    reason: str | None = None


def ito_michler_verify(g: PermGroup, p: int) -> ItoMichlerReport:
    """Check the structural conclusion when p divides |G| but no degree.

    Builds S = {x : order(x) is a power of p}; when the hypothesis holds,
    S must be the (normal, abelian) Sylow p-subgroup, with a complement of
    coprime order.  Any failure is flagged as an internal violation, since
    the statement is unconditional.
    """
    if not is_prime(p):
        raise PreconditionError(f"{p} is not prime")
    if g.order % p:
        return ItoMichlerReport(p, False, None, None, None, None, None,
                                reason=f"{p} does not divide the group order")
    offending = next((d for d in char_degrees(g) if d % p == 0), None)
    if offending is not None:
        return ItoMichlerReport(p, False, offending, None, None, None, None,
                                reason=f"{p} divides the irreducible degree {offending}")
    sylow = [x for x in g.elements if _is_p_power(perm_order(x), p)]
    target = p_part(g.order, p)
    sset = set(sylow)
    closed = all(perm_mul(a, b) in sset for a in sylow for b in sylow)
    abelian = all(perm_mul(a, b) == perm_mul(b, a) for a in sylow for b in sylow)
    normal = all(
        perm_mul(perm_mul(perm_inv(gen), x), gen) in sset
        for x in sylow
        for gen in g.generators
    )
    if len(sylow) != target or not closed or not abelian or not normal:
        raise InternalCheckError(
            f"Ito-Michler violation for p={p}: |S|={len(sylow)} (expected {target}), "
            f"closed={closed}, abelian={abelian}, normal={normal}"
        )
    complement = g.order // target
    if gcd(complement, p) != 1:
        raise InternalCheckError("complement order is not coprime to p")
    return ItoMichlerReport(p, True, None, target, complement, abelian, normal)


def _is_p_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


# ---------------------------------------------------------------------------
# double cosets and stabilizer intersections


def double_cosets(g: PermGroup, h: PermGroup) -> list[tuple[Perm, int]]:
    """Partition of G into sets HxH; representatives are lexicographically
    minimal and the list is ordered by representative."""
    if not g.is_subgroup(h):
        raise PreconditionError("H is not a subgroup of G")
    visited = [False] * g.order
    out = []
    for idx, x in enumerate(g.elements):
        if visited[idx]:
            continue
        left = {perm_mul(a, x) for a in h.elements}
        coset = {perm_mul(y, b) for y in left for b in h.elements}
        for y in coset:
            visited[g.index[y]] = True
        out.append((x, len(coset)))
    if sum(size for _, size in out) != g.order:
        raise InternalCheckError("double cosets do not partition the group")
    return out


def stabilizer_intersection(g: PermGroup, h: PermGroup, x: Perm) -> PermGroup:
    """The subgroup H n xHx^-1 of G."""
    if not g.is_subgroup(h):
        raise PreconditionError("H is not a subgroup of G")
    x = _pad(x, g.degree)
    if x not in g:
        raise PreconditionError("x is not an element of G")
    xinv = perm_inv(x)
    elems = [y for y in h.elements if perm_mul(perm_mul(xinv, y), x) in h.index]
    return PermGroup.from_elements(elems)


# ---------------------------------------------------------------------------
# built-in groups


def _symmetric(n: int) -> list[Perm]:
    if n < 2:
        return [perm_identity(max(n, 1))]
    gens = [parse_perm("(1 2)", n)]
    if n > 2:
        gens.append(tuple(list(range(1, n)) + [0]))
    return gens


def _alternating(n: int) -> list[Perm]:
    if n < 3:
        return [perm_identity(max(n, 1))]
    three = parse_perm("(1 2 3)", n)
    if n == 3:
        return [three]
    if n % 2:
        big = tuple(list(range(1, n)) + [0])
    else:
        big = tuple([0] + list(range(2, n)) + [1])
    return [three, big]


def _cyclic(n: int) -> list[Perm]:
    return [tuple(list(range(1, n)) + [0])] if n > 1 else [perm_identity(1)]


def _dihedral(order: int) -> list[Perm]:
    if order < 6 or order % 2:
        raise PreconditionError("dihedral builtin needs an even order >= 6")
    m = order // 2
    rot = tuple(list(range(1, m)) + [0])
    ref = tuple((m - i) % m for i in range(m))
    return [rot, ref]


def _quaternion8() -> list[Perm]:
    units = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    table = {
        ("i", "i"): "-1", ("j", "j"): "-1", ("k", "k"): "-1",
        ("i", "j"): "k", ("j", "i"): "-k",
        ("j", "k"): "i", ("k", "j"): "-i",
        ("k", "i"): "j", ("i", "k"): "-j",
    }

    def mul(a: str, b: str) -> str:
        sign = 1
        if a.startswith("-"):
            sign, a = -sign, a[1:]
        if b.startswith("-"):
            sign, b = -sign, b[1:]
        if a == "1":
            out = b
        elif b == "1":
            out = a
        else:
            out = table[(a, b)]
        if out.startswith("-"):
            sign, out = -sign, out[1:]
        return out if sign > 0 else "-" + out

    def right_mult(u: str) -> Perm:
        return tuple(units.index(mul(v, u)) for v in units)

    return [right_mult("i"), right_mult("j")]


def _sl23() -> list[Perm]:
    vecs = [(a, b) for a in range(3) for b in range(3) if (a, b) != (0, 0)]
    idx = {v: i for i, v in enumerate(vecs)}

    def act(m: tuple[tuple[int, int], tuple[int, int]]) -> Perm:
        return tuple(
            idx[((m[0][0] * a + m[0][1] * b) % 3, (m[1][0] * a + m[1][1] * b) % 3)]
            for a, b in vecs
        )

    return [act(((1, 1), (0, 1))), act(((0, 2), (1, 0)))]


def _direct_product(gs: list[PermGroup]) -> PermGroup:
    gens: list[Perm] = []
    offset = 0
    total = sum(g.degree for g in gs)
    for g in gs:
        for s in g.generators:
            img = list(range(total))
            for i, v in enumerate(s):
                img[offset + i] = offset + v
            gens.append(tuple(img))
        offset += g.degree
    return PermGroup.from_generators(gens, degree=total)


def builtin_group(name: str, cap: int | None = None) -> PermGroup:
    """Named groups: Sn, An, Cn, Dn (dihedral of order n), Q8, SL23,
    and direct products joined with 'x' (e.g. S3xC4)."""
    name = name.strip()
    if "x" in name:
        return _direct_product([builtin_group(part, cap) for part in name.split("x")])
    m = re.fullmatch(r"([SACDsacd])(\d+)", name)
    if m:
        fam, n = m.group(1).upper(), int(m.group(2))
        if n < 1:
            raise PreconditionError(f"bad group name {name!r}")
        gens = {"S": _symmetric, "A": _alternating, "C": _cyclic, "D": _dihedral}[fam](n)
        return PermGroup.from_generators(gens, cap=cap)
    if name.upper() == "Q8":
        return PermGroup.from_generators(_quaternion8(), cap=cap)
    if name.upper() == "SL23":
        return PermGroup.from_generators(_sl23(), cap=cap)
    raise PreconditionError(f"unknown builtin group {name!r}")
