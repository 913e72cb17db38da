"""Simplicial homology over the rationals and the two-element field.

Betti numbers come from sparse column reduction of boundary matrices
with a deterministic pivot order, in exact arithmetic.  Also here: the
order complex of a finite poset, and a Mayer-Vietoris assembly that
computes the homology of a union from two pieces and their common
subcomplex, used as the gluing fallback and as a cross-check.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .mesh import SimplicialComplex

__all__ = [
    "BettiReport",
    "betti",
    "euler_characteristic",
    "order_complex_of_poset",
    "vertex_inclusion_map",
    "mayer_vietoris_assemble",
]


def _normalize_field(tag) -> str:
    t = str(tag).lower()
    if t in ("q", "rationals", "rational"):
        return "q"
    if t in ("f2", "gf2", "z2"):
        return "f2"
    raise ValueError(f"unknown coefficient field {tag!r}")


@dataclass(frozen=True)
class BettiReport:
    field: str
    betti: tuple
    euler: int

    def __str__(self) -> str:
        tag = "Q" if self.field == "q" else "F2"
        bs = ",".join(str(b) for b in self.betti)
        return f"betti ({bs}) euler {self.euler} over {tag}"

    def to_doc(self) -> dict:
        return {"field": self.field, "betti": list(self.betti),
                "euler": self.euler}


class _Reducer:
    """Incremental column reduction; deterministic largest-row pivots."""

    def __init__(self, f2: bool):
        self.f2 = f2
        self.pivots: dict = {}
        self.rank = 0

    def _reduce(self, col: dict) -> dict:
        while col:
            low = max(col)
            other = self.pivots.get(low)
            if other is None:
                return col
            if self.f2:
                for r in other:
                    if r in col:
                        del col[r]
                    else:
                        col[r] = 1
            else:
                factor = col[low] / other[low]
                for r, v in other.items():
                    nv = col.get(r, Fraction(0)) - factor * v
                    if nv:
                        col[r] = nv
                    else:
                        col.pop(r, None)
        return col

    def add(self, col: dict) -> bool:
        col = self._reduce(dict(col))
        if col:
            self.pivots[max(col)] = col
            self.rank += 1
            return True
        return False


class _CycleTracker:
    """Column reduction that reports the combination making a column 0."""

    def __init__(self, f2: bool):
        self.f2 = f2
        self.pivots: dict = {}

    def feed(self, col: dict, tag):
        col = dict(col)
        comb = {tag: 1 if self.f2 else Fraction(1)}
        while col:
            low = max(col)
            entry = self.pivots.get(low)
            if entry is None:
                self.pivots[low] = (col, comb)
                return None
            other, ocomb = entry
            if self.f2:
                for r in other:
                    if r in col:
                        del col[r]
                    else:
                        col[r] = 1
                for r in ocomb:
                    if r in comb:
                        del comb[r]
                    else:
                        comb[r] = 1
            else:
                factor = col[low] / other[low]
                for r, v in other.items():
                    nv = col.get(r, Fraction(0)) - factor * v
                    if nv:
                        col[r] = nv
                    else:
                        col.pop(r, None)
                for r, v in ocomb.items():
                    nv = comb.get(r, Fraction(0)) - factor * v
                    if nv:
                        comb[r] = nv
                    else:
                        comb.pop(r, None)
        return comb


def _validate(K: SimplicialComplex):
    nv = len(K.vertices)
    if len(set(K.vertices)) != nv:
        raise ValueError("complex repeats a vertex")
    for t in K.tops:
        if len(set(t)) != len(t) or any(i < 0 or i >= nv for i in t):
            raise ValueError(f"bad simplex {t}")


def _chain_data(K: SimplicialComplex):
    faces = K.faces()
    simp = {d: sorted(faces[d]) for d in sorted(faces)}
    idx = {d: {s: i for i, s in enumerate(simp[d])} for d in simp}
    return simp, idx


def _boundary_columns(simp, idx, d: int, f2: bool):
    cols = []
    for s in simp[d]:
        col = {}
        for i in range(len(s)):
            face = s[:i] + s[i + 1:]
            col[idx[d - 1][face]] = 1 if f2 else (
                Fraction(1) if i % 2 == 0 else Fraction(-1))
        cols.append(col)
    return cols


def betti(K: SimplicialComplex, field="q") -> BettiReport:
    """Betti numbers of K in every dimension, by exact rank computation."""
    tag = _normalize_field(field)
    f2 = tag == "f2"
    _validate(K)
    if not K.tops and not K.vertices:
        return BettiReport(tag, (), 0)
    simp, idx = _chain_data(K)
    dim = max(simp)
    ranks = {}
    for d in range(1, dim + 1):
        red = _Reducer(f2)
        for col in _boundary_columns(simp, idx, d, f2):
            red.add(col)
        ranks[d] = red.rank
    bs = []
    euler = 0
    for d in range(dim + 1):
        nd = len(simp[d])
        euler += nd if d % 2 == 0 else -nd
        bs.append(nd - ranks.get(d, 0) - ranks.get(d + 1, 0))
    return BettiReport(tag, tuple(bs), euler)


def euler_characteristic(K: SimplicialComplex) -> int:
    """Alternating sum of face counts over all dimensions."""
    total = 0
    for d, fs in K.faces().items():
        total += len(fs) if d % 2 == 0 else -len(fs)
    return total


def order_complex_of_poset(elements: Sequence, leq: Callable) -> SimplicialComplex:
    """The chain complex of a finite poset, with chains as simplices.

    The oracle is checked for reflexivity and antisymmetry on the given
    elements; top simplices are the maximal chains (paths from minimal
    to maximal elements through covering relations).
    """
    elems = list(elements)
    n = len(elems)
    for x in elems:
        if not leq(x, x):
            raise ValueError(f"order oracle is not reflexive at {x}")
    less = [[False] * n for _ in range(n)]
    for i, x in enumerate(elems):
        for j, y in enumerate(elems):
            if i != j and leq(x, y):
                if leq(y, x):
                    raise ValueError(
                        f"order oracle violates antisymmetry on {x} and {y}")
                less[i][j] = True
    covers = []
    for i in range(n):
        up = [j for j in range(n) if less[i][j]]
        covers.append([j for j in up
                       if not any(less[k][j] for k in up if k != j)])
    minimal = [i for i in range(n) if not any(less[j][i] for j in range(n))]
    tops: list = []

    def extend(i, chain):
        if not covers[i]:
            tops.append(tuple(chain))
            return
        for j in covers[i]:
            extend(j, chain + (j,))

    for i in minimal:
        extend(i, (i,))
    return SimplicialComplex(elems, tops)


def vertex_inclusion_map(sub: SimplicialComplex, sup: SimplicialComplex) -> dict:
    """Index map identifying each vertex of sub with its equal in sup."""
    lookup = {v: i for i, v in enumerate(sup.vertices)}
    out = {}
    for i, v in enumerate(sub.vertices):
        j = lookup.get(v)
        if j is None:
            raise ValueError(f"vertex {v} of the subcomplex is missing")
        out[i] = j
    return out


def _check_inclusion(kint: SimplicialComplex, K: SimplicialComplex, vmap: dict):
    if sorted(vmap) != list(range(len(kint.vertices))):
        raise ValueError("inclusion map must cover the subcomplex vertices")
    if len(set(vmap.values())) != len(vmap):
        raise ValueError("inclusion map is not injective")
    faces = K.faces()
    for t in kint.tops:
        img = tuple(sorted(vmap[i] for i in t))
        if img not in faces.get(len(img) - 1, ()):
            raise ValueError(
                f"inclusion is not simplicial: image of {t} is no simplex")


def _sort_sign(seq) -> int:
    inv = sum(1 for a, b in itertools.combinations(seq, 2) if a > b)
    return -1 if inv % 2 else 1


def _homology_reps(simp, idx, d: int, f2: bool):
    """Cycle representatives spanning homology in dimension d."""
    if d not in simp:
        return []
    tracker = _CycleTracker(f2)
    cycles = []
    if d == 0:
        cycles = [{p: 1 if f2 else Fraction(1)} for p in range(len(simp[0]))]
    else:
        for p, col in enumerate(_boundary_columns(simp, idx, d, f2)):
            comb = tracker.feed(col, p)
            if comb is not None:
                cycles.append(comb)
    red = _Reducer(f2)
    if d + 1 in simp:
        for col in _boundary_columns(simp, idx, d + 1, f2):
            red.add(col)
    return [c for c in cycles if red.add(c)]


def mayer_vietoris_assemble(ka: SimplicialComplex, kb: SimplicialComplex,
                            kint: SimplicialComplex, map_a: dict,
                            map_b: dict, field="q") -> BettiReport:
    """Homology of the union of two complexes glued along a subcomplex.

    map_a and map_b send vertex indices of the intersection complex into
    the two pieces; both inclusions must be simplicial.  Betti numbers
    of the union come from the long exact sequence, with the connecting
    ranks computed from mapped cycle representatives.
    """
    f2 = _normalize_field(field) == "f2"
    for K in (ka, kb, kint):
        _validate(K)
    _check_inclusion(kint, ka, map_a)
    _check_inclusion(kint, kb, map_b)
    sa, ia = _chain_data(ka)
    sb, ib = _chain_data(kb)
    si, ii = _chain_data(kint)
    ba = betti(ka, "f2" if f2 else "q").betti
    bb = betti(kb, "f2" if f2 else "q").betti
    bi = betti(kint, "f2" if f2 else "q").betti

    def _mapped(cycle: dict, d: int):
        # image of an intersection cycle in the A (+) B chain group
        out = {}
        for p, coeff in cycle.items():
            s = si[d][p]
            img_a = [map_a[i] for i in s]
            img_b = [map_b[i] for i in s]
            ra = ("a", ia[d][tuple(sorted(img_a))])
            rb = ("b", ib[d][tuple(sorted(img_b))])
            if f2:
                for r in (ra, rb):
                    if r in out:
                        del out[r]
                    else:
                        out[r] = 1
            else:
                out[ra] = out.get(ra, Fraction(0)) + coeff * _sort_sign(img_a)
                out[rb] = out.get(rb, Fraction(0)) + coeff * _sort_sign(img_b)
                for r in (ra, rb):
                    if not out[r]:
                        del out[r]
        return out

    psi = {}
    for d in range(kint.dim + 1):
        red = _Reducer(f2)
        if d + 1 in sa:
            for col in _boundary_columns(sa, ia, d + 1, f2):
                red.add({("a", r): v for r, v in col.items()})
        if d + 1 in sb:
            for col in _boundary_columns(sb, ib, d + 1, f2):
                red.add({("b", r): v for r, v in col.items()})
        rank = 0
        for cycle in _homology_reps(si, ii, d, f2):
            if red.add(_mapped(cycle, d)):
                rank += 1
        psi[d] = rank

    top = max(ka.dim, kb.dim)
    bs = []
    for d in range(top + 1):
        val = (ba[d] if d < len(ba) else 0) + (bb[d] if d < len(bb) else 0)
        val -= psi.get(d, 0)
        if d >= 1:
            val += (bi[d - 1] if d - 1 < len(bi) else 0) - psi.get(d - 1, 0)
        bs.append(val)
    euler = (euler_characteristic(ka) + euler_characteristic(kb)
             - euler_characteristic(kint))
    return BettiReport("f2" if f2 else "q", tuple(bs), euler)
