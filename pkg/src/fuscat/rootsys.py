"""Simply-laced root systems (types A, D, E) and alcove weight enumeration.

Roots are stored in simple-root coordinates and weights in fundamental-weight
coordinates; with the normalization (alpha, alpha) = 2 every pairing used
here is an integer dot product, so the module stays in integer arithmetic.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .errors import InternalCheckError, PreconditionError

MAX_RANK = 8

Weight = tuple[int, ...]
Root = tuple[int, ...]

_COXETER = {"A": lambda n: n + 1, "D": lambda n: 2 * n - 2, "E": {6: 12, 7: 18, 8: 30}}


@dataclass(frozen=True)
class RootSystem:
    label: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[Root, ...]
    highest_root: Root
    coxeter_number: int


def _parse_label(label: str) -> tuple[str, int]:
    m = re.fullmatch(r"\s*([ADEade])\s*(\d+)\s*", label)
    if not m:
        raise PreconditionError(f"cannot parse root-system label {label!r}")
    family, rank = m.group(1).upper(), int(m.group(2))
    if rank < 1 or rank > MAX_RANK:
        raise PreconditionError(f"rank {rank} outside the supported range 1..{MAX_RANK}")
    if family == "D" and rank < 4:
        raise PreconditionError("type D needs rank >= 4")
    if family == "E" and rank not in (6, 7, 8):
        raise PreconditionError("type E exists for ranks 6, 7, 8 only")
    return family, rank


def _cartan_matrix(family: str, rank: int) -> tuple[tuple[int, ...], ...]:
    edges: list[tuple[int, int]] = []
    if family == "A":
        edges = [(i, i + 1) for i in range(rank - 1)]
    elif family == "D":
        edges = [(i, i + 1) for i in range(rank - 3)]
        edges += [(rank - 3, rank - 2), (rank - 3, rank - 1)]
    else:
        chain = [0, 2, 3, 4, 5, 6, 7][: rank - 1]
        edges = list(zip(chain, chain[1:])) + [(1, 3)]
    mat = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for i, j in edges:
        mat[i][j] = mat[j][i] = -1
    return tuple(tuple(row) for row in mat)


@lru_cache(maxsize=None)
def build_root_system(label: str) -> RootSystem:
    """Construct positive roots by closure from the simple roots."""
    family, rank = _parse_label(label)
    cartan = _cartan_matrix(family, rank)
    simple = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]
    found: set[Root] = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(rank):
                pair = sum(beta[j] * cartan[j][i] for j in range(rank))
                back = 0
                while True:
                    lower = list(beta)
                    lower[i] -= back + 1
                    if lower[i] < 0 or tuple(lower) not in found:
                        break
                    back += 1
                if back - pair > 0:
                    cand = list(beta)
                    cand[i] += 1
                    cand_t = tuple(cand)
                    if cand_t not in found:
                        found.add(cand_t)
                        nxt.append(cand_t)
        frontier = nxt
    roots = sorted(found, key=lambda r: (sum(r), r))
    heights = [sum(r) for r in roots]
    h = heights[-1] + 1
    expected_h = _COXETER[family][rank] if family == "E" else _COXETER[family](rank)
    if h != expected_h:
        raise InternalCheckError(f"{label}: derived Coxeter number {h} != {expected_h}")
    if len(roots) != h * rank // 2:
        raise InternalCheckError(f"{label}: {len(roots)} positive roots, expected {h * rank // 2}")
    if heights.count(h - 1) != 1 or sorted(set(heights)) != list(range(1, h)):
        raise InternalCheckError(f"{label}: positive-root heights are inconsistent")
    return RootSystem(
        label=f"{family}{rank}",
        rank=rank,
        cartan=cartan,
        positive_roots=tuple(roots),
        highest_root=roots[-1],
        coxeter_number=h,
    )


def pairing(weight: Weight, root: Root) -> int:
    """(lambda + rho, alpha) for a dominant weight lambda and positive root alpha."""
    return sum(c * (w + 1) for c, w in zip(root, weight))


def rho_pairing(root: Root) -> int:
    """(rho, alpha): the height of alpha."""
    return sum(root)


def enumerate_alcove(rs: RootSystem, l: int) -> list[Weight]:
    """Dominant weights with (lambda + rho, theta) < l, in lexicographic order."""
    h = rs.coxeter_number
    if l <= h:
        raise PreconditionError(f"level l={l} must exceed the Coxeter number h={h}")
    marks = rs.highest_root
    budget = l - 1 - sum(marks)
    out: list[Weight] = []

    def rec(prefix: list[int], remaining: int, idx: int) -> None:
        if idx == rs.rank:
            out.append(tuple(prefix))
            return
        for v in range(remaining // marks[idx] + 1):
            prefix.append(v)
            rec(prefix, remaining - v * marks[idx], idx + 1)
            prefix.pop()

    rec([], budget, 0)
    return out
