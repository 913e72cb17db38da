"""Exact arithmetic in the tropical phase hyperfield and the sign hyperfield.

The tropical phase hyperfield has underlying set S^1 together with a zero
element.  Multiplication of nonzero elements is rotation (addition of
angles); hyperaddition of two nonzero elements is the smallest closed arc
of the circle joining them, except that antipodal inputs produce the whole
circle together with zero.  The sign hyperfield {-1, 0, 1} is the familiar
discrete analogue.

Angles are stored as exact rational turns (1 turn = 360 degrees), so every
operation here is exact: no floating point is used anywhere.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "Angle",
    "Phase",
    "ZERO",
    "Arc",
    "PhaseSet",
    "mul",
    "hyper_sum",
    "hyper_sum_list",
    "min_enclosing_arc",
    "sign_mul",
    "sign_hyper_sum",
    "sign_hyper_sum_list",
    "parse_fraction",
    "format_fraction",
]

HALF = Fraction(1, 2)
ONE = Fraction(1)


def _mod1(q: Fraction) -> Fraction:
    return q - (q.numerator // q.denominator)


@dataclass(frozen=True, order=True)
class Angle:
    """A point on the circle, measured in turns and reduced mod 1."""

    turns: Fraction

    def __post_init__(self) -> None:
        if not isinstance(self.turns, Fraction):
            object.__setattr__(self, "turns", Fraction(self.turns))
        object.__setattr__(self, "turns", _mod1(self.turns))

    def __add__(self, other: "Angle") -> "Angle":
        return Angle(self.turns + other.turns)

    def __neg__(self) -> "Angle":
        return Angle(-self.turns)

    def __sub__(self, other: "Angle") -> "Angle":
        return Angle(self.turns - other.turns)

    def antipode(self) -> "Angle":
        return Angle(self.turns + HALF)

    def __str__(self) -> str:
        return format_fraction(self.turns)


@dataclass(frozen=True)
class Phase:
    """An element of the tropical phase hyperfield: an angle, or zero.

    ``Phase(None)`` is the hyperfield zero; any other value is the point
    of S^1 at that angle.
    """

    angle: Angle | None

    @staticmethod
    def of(turns) -> "Phase":
        return Phase(Angle(Fraction(turns)))

    @staticmethod
    def zero() -> "Phase":
        return Phase(None)

    @property
    def is_zero(self) -> bool:
        return self.angle is None

    def __neg__(self) -> "Phase":
        if self.angle is None:
            return self
        return Phase(self.angle.antipode())

    def __str__(self) -> str:
        # "z" is the zero token; a bare fraction is an angle in turns, so
        # "0" always means the unit at angle 0, never the zero element
        if self.angle is None:
            return "z"
        return str(self.angle)


ZERO = Phase(None)


@dataclass(frozen=True, order=True)
class Arc:
    """A closed arc of the circle: start angle plus nonnegative length.

    ``length`` is in turns.  Length 0 is a single point; length >= 1 means
    the whole circle (canonically stored with start 0, length 1).
    """

    start: Angle
    length: Fraction

    def __post_init__(self) -> None:
        if not isinstance(self.length, Fraction):
            object.__setattr__(self, "length", Fraction(self.length))
        if self.length < 0:
            raise ValueError("arc length must be nonnegative")
        if self.length >= 1:
            object.__setattr__(self, "start", Angle(Fraction(0)))
            object.__setattr__(self, "length", ONE)

    @property
    def is_full_circle(self) -> bool:
        return self.length >= 1

    def end(self) -> Angle:
        return Angle(self.start.turns + self.length)

    def contains(self, a: Angle) -> bool:
        if self.is_full_circle:
            return True
        # offset of a past the start, measured forward around the circle
        return _mod1(a.turns - self.start.turns) <= self.length

    def contains_arc(self, other: "Arc") -> bool:
        if self.is_full_circle:
            return True
        if other.is_full_circle:
            return False
        off = _mod1(other.start.turns - self.start.turns)
        return off + other.length <= self.length

    def __str__(self) -> str:
        if self.is_full_circle:
            return "[full circle]"
        return f"[{self.start}, {self.end()}]"


def _merge_arcs(arcs: Sequence[Arc]) -> tuple[Arc, ...]:
    """Normalize a set of arcs: merge overlaps, canonicalize a full cover."""
    arcs = [a for a in arcs]
    if any(a.is_full_circle for a in arcs):
        return (Arc(Angle(Fraction(0)), ONE),)
    if not arcs:
        return ()
    # unroll: each arc as (start in [0,1), end = start + length, end < 2)
    spans = sorted((a.start.turns, a.start.turns + a.length) for a in arcs)
    merged: list[list[Fraction]] = []
    for s, e in spans:
        if merged and s <= merged[-1][1]:
            merged[-1][1] = max(merged[-1][1], e)
        else:
            merged.append([s, e])
    # wrap: the last span may spill past 1 and swallow spans at the front
    while len(merged) > 1 and merged[-1][1] >= merged[0][0] + 1:
        if merged[-1][1] >= merged[0][1] + 1:
            merged.pop(0)
        else:
            merged[-1][1] = merged[0][1] + 1
            merged.pop(0)
    if len(merged) == 1 and merged[0][1] - merged[0][0] >= 1:
        return (Arc(Angle(Fraction(0)), ONE),)
    return tuple(Arc(Angle(s), e - s) for s, e in merged)


@dataclass(frozen=True)
class PhaseSet:
    """A finite union of closed arcs, optionally together with zero.

    This is the value type of hyperaddition: sums of hyperfield elements
    are sets, and iterated sums are unions of sets.
    """

    contains_zero: bool
    arcs: tuple[Arc, ...]

    @staticmethod
    def make(contains_zero: bool, arcs: Iterable[Arc]) -> "PhaseSet":
        return PhaseSet(contains_zero, _merge_arcs(tuple(arcs)))

    @staticmethod
    def just_zero() -> "PhaseSet":
        return PhaseSet(True, ())

    @staticmethod
    def point(p: Phase) -> "PhaseSet":
        if p.is_zero:
            return PhaseSet.just_zero()
        return PhaseSet(False, (Arc(p.angle, Fraction(0)),))

    @property
    def is_full_circle(self) -> bool:
        return len(self.arcs) == 1 and self.arcs[0].is_full_circle

    def contains(self, p: Phase) -> bool:
        if p.is_zero:
            return self.contains_zero
        return any(a.contains(p.angle) for a in self.arcs)

    def union(self, other: "PhaseSet") -> "PhaseSet":
        return PhaseSet.make(
            self.contains_zero or other.contains_zero, self.arcs + other.arcs
        )

    def phases(self) -> list[Phase]:
        """The elements of the set, when it is finite (points only)."""
        if any(a.length > 0 for a in self.arcs):
            raise ValueError("phase set is infinite")
        out = [Phase(a.start) for a in self.arcs]
        if self.contains_zero:
            out.append(ZERO)
        return out

    def __str__(self) -> str:
        parts = []
        for a in self.arcs:
            if a.is_full_circle:
                parts.append("S^1")
            elif a.length == 0:
                parts.append(str(a.start))
            else:
                parts.append(str(a))
        if self.contains_zero:
            parts.append("z")
        if not parts:
            return "{}"
        return "{" + ", ".join(parts) + "}"


def mul(a: Phase, b: Phase) -> Phase:
    """Hyperfield multiplication: rotation, with zero absorbing."""
    if a.is_zero or b.is_zero:
        return ZERO
    return Phase(a.angle + b.angle)


def hyper_sum(a: Phase, b: Phase) -> PhaseSet:
    """Hyperaddition of two phases.

    x + 0 = {x}; x + (-x) is the whole circle together with zero; any
    other pair gives the smallest closed arc joining the two points.
    """
    if a.is_zero:
        return PhaseSet.point(b)
    if b.is_zero:
        return PhaseSet.point(a)
    if a.angle == b.angle:
        return PhaseSet.point(a)
    if a.angle == b.angle.antipode():
        return PhaseSet(True, (Arc(Angle(Fraction(0)), ONE),))
    d = _mod1(b.angle.turns - a.angle.turns)
    if d < HALF:
        return PhaseSet(False, (Arc(a.angle, d),))
    return PhaseSet(False, (Arc(b.angle, 1 - d),))


def _arc_plus_point(ps: PhaseSet, p: Phase) -> PhaseSet:
    """One fold step: the union of x + p over x in the given set.

    The set is assumed to be a single arc of length <= 1/2 (possibly with
    zero).  Summing against the antipode of any point of the arc blows up
    to the whole circle with zero; otherwise the result is the smallest
    arc containing the old arc and the new point.
    """
    assert p.angle is not None
    out_zero = ps.contains_zero  # 0 + p = {p}, so zero in the set adds p
    if not ps.arcs:
        return PhaseSet(False, (Arc(p.angle, Fraction(0)),))
    arc = ps.arcs[0]
    anti = p.angle.antipode()
    if arc.contains(anti):
        return PhaseSet(True, (Arc(Angle(Fraction(0)), ONE),))
    if arc.contains(p.angle):
        return PhaseSet(False, (arc,))
    # extend the arc forward or backward to reach p, whichever is shorter
    fwd = _mod1(p.angle.turns - arc.end().turns)
    bwd = _mod1(arc.start.turns - p.angle.turns)
    if fwd <= bwd:
        return PhaseSet(False, (Arc(arc.start, arc.length + fwd),))
    return PhaseSet(False, (Arc(p.angle, arc.length + bwd),))


def hyper_sum_list(xs: Sequence[Phase]) -> PhaseSet:
    """Iterated hyperaddition, folded left to right over a sequence.

    Hyperaddition is associative, so the result does not depend on the
    order.  The empty sum is {0}.
    """
    nonzero = [x for x in xs if not x.is_zero]
    if not nonzero:
        return PhaseSet.just_zero()
    acc = PhaseSet.point(nonzero[0])
    for p in nonzero[1:]:
        if acc.is_full_circle and acc.contains_zero:
            return acc  # absorbing state
        acc = _arc_plus_point(acc, p)
    return acc


def min_enclosing_arc(angles: Sequence[Angle]) -> Arc:
    """The shortest closed arc containing all the given angles.

    Equivalent to removing the largest gap between cyclically consecutive
    angles.  Ties are broken toward the arc with the smallest start angle.
    The answer is the full circle only for the empty input (by convention).
    """
    if not angles:
        return Arc(Angle(Fraction(0)), ONE)
    pts = sorted(set(a.turns for a in angles))
    if len(pts) == 1:
        return Arc(Angle(pts[0]), Fraction(0))
    n = len(pts)
    best: Arc | None = None
    for i in range(n):
        gap_start = pts[i]
        gap_end = pts[(i + 1) % n] + (1 if i + 1 == n else 0)
        gap = gap_end - gap_start
        cand = Arc(Angle(_mod1(gap_end)), 1 - gap)
        if best is None or cand.length < best.length or (
            cand.length == best.length and cand.start < best.start
        ):
            best = cand
    assert best is not None
    return best


# ---------------------------------------------------------------------------
# Sign hyperfield {-1, 0, 1}
# ---------------------------------------------------------------------------


def sign_mul(a: int, b: int) -> int:
    if a not in (-1, 0, 1) or b not in (-1, 0, 1):
        raise ValueError("sign hyperfield elements are -1, 0, 1")
    return a * b


def sign_hyper_sum(a: int, b: int) -> frozenset[int]:
    """Hyperaddition in the sign hyperfield."""
    if a not in (-1, 0, 1) or b not in (-1, 0, 1):
        raise ValueError("sign hyperfield elements are -1, 0, 1")
    if a == 0:
        return frozenset({b})
    if b == 0:
        return frozenset({a})
    if a == b:
        return frozenset({a})
    return frozenset({-1, 0, 1})


def sign_hyper_sum_list(xs: Sequence[int]) -> frozenset[int]:
    """Iterated sign hyperaddition (union-fold, empty sum = {0})."""
    acc: frozenset[int] = frozenset({0})
    for x in xs:
        acc = frozenset(itertools.chain.from_iterable(
            sign_hyper_sum(a, x) for a in acc
        ))
    return acc


# ---------------------------------------------------------------------------
# Fraction formatting helpers shared by the CLI and reports
# ---------------------------------------------------------------------------


def parse_fraction(text: str) -> Fraction:
    """Parse 'p/q' or an integer or decimal literal into an exact Fraction."""
    text = text.strip()
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


def format_fraction(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
