"""Two coordinate systems for the order complex of phase vectors.

Points of the topological order complex are formal convex combinations
sum_k t_k x_k over chains of vectors.  Collapsing each coordinate's
weighted phases gives a tuple of points in the closed unit disc, one
per coordinate: the disc model.  The two descriptions are homeomorphic;
`join_to_model` and `model_to_join` implement the correspondence
exactly, in both directions, over the rationals.

Text form of a disc-model point: semicolon-separated "r@a" pairs with
rational radius r and angle a in turns ("0@0" is the disc center).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .covectors import (
    PhaseVector,
    all_ones,
    is_covector,
    leq_vec,
    rescale,
    support,
)
from .phase import Angle, Phase, ZERO, format_fraction, mul, parse_fraction

__all__ = [
    "DiscPoint",
    "ModelPoint",
    "JoinPoint",
    "join_to_model",
    "model_to_join",
    "delta_member",
    "rotate",
    "rescale_model",
    "parse_model_point",
    "format_model_point",
    "random_join_point",
    "random_model_point",
]


@dataclass(frozen=True, order=True)
class DiscPoint:
    """A point of the closed unit disc in polar form (radius, angle).

    The center is represented uniquely: radius 0 forces angle 0.
    """

    radius: Fraction
    angle: Angle

    def __post_init__(self) -> None:
        if not isinstance(self.radius, Fraction):
            object.__setattr__(self, "radius", Fraction(self.radius))
        if not 0 <= self.radius <= 1:
            raise ValueError("disc radius must lie in [0, 1]")
        if self.radius == 0 and self.angle.turns != 0:
            object.__setattr__(self, "angle", Angle(Fraction(0)))

    @staticmethod
    def of(radius, angle) -> "DiscPoint":
        return DiscPoint(Fraction(radius), Angle(Fraction(angle)))

    @staticmethod
    def center() -> "DiscPoint":
        return DiscPoint(Fraction(0), Angle(Fraction(0)))

    @property
    def phase(self) -> Phase:
        """The phase direction: zero at the center."""
        if self.radius == 0:
            return ZERO
        return Phase(self.angle)

    def __str__(self) -> str:
        return f"{format_fraction(self.radius)}@{self.angle}"


@dataclass(frozen=True)
class ModelPoint:
    """A tuple of disc points: the disc model of an order-complex point."""

    coords: tuple[DiscPoint, ...]

    @staticmethod
    def of(pairs: Iterable) -> "ModelPoint":
        return ModelPoint(tuple(DiscPoint.of(r, a) for r, a in pairs))

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, i: int) -> DiscPoint:
        return self.coords[i]

    def __str__(self) -> str:
        return format_model_point(self)


@dataclass(frozen=True)
class JoinPoint:
    """A weighted chain: the join-coordinate form of an order-complex point.

    Terms are (weight, vector) pairs with positive rational weights that
    sum to 1, vectors forming a strict chain in the specialization
    order, and support sizes strictly increasing term by term.  Zero
    weights are disallowed, so the representation is canonical.
    """

    terms: tuple[tuple[Fraction, PhaseVector], ...]

    def __post_init__(self) -> None:
        if not self.terms:
            raise ValueError("join point needs at least one term")
        n = len(self.terms[0][1])
        total = Fraction(0)
        prev: PhaseVector | None = None
        for w, x in self.terms:
            if len(x) != n:
                raise ValueError("chain vectors must share a length")
            if w <= 0:
                raise ValueError("weights must be positive")
            total += w
            if prev is not None:
                if not (leq_vec(prev, x) and prev != x):
                    raise ValueError("vectors must form a strict chain")
                if len(support(prev)) >= len(support(x)):
                    raise ValueError("support sizes must strictly increase")
            prev = x
        if total != 1:
            raise ValueError("weights must sum to 1")

    @staticmethod
    def of(terms: Iterable[tuple]) -> "JoinPoint":
        return JoinPoint(tuple((Fraction(w), x) for w, x in terms))

    @property
    def dimension(self) -> int:
        return len(self.terms)


def join_to_model(p: JoinPoint) -> ModelPoint:
    """Collapse a weighted chain to its disc-model point.

    Coordinate j gets radius equal to the total weight of chain terms
    whose vector is nonzero at j, and angle equal to their common phase
    there; coordinates supported by no term sit at the disc center.
    """
    n = len(p.terms[0][1])
    coords = []
    for j in range(n):
        radius = Fraction(0)
        angle: Angle | None = None
        for w, x in p.terms:
            if not x[j].is_zero:
                radius += w
                angle = x[j].angle  # chain: same angle in every term
        if radius == 0:
            coords.append(DiscPoint.center())
        else:
            coords.append(DiscPoint(radius, angle))
    return ModelPoint(tuple(coords))


def model_to_join(z: ModelPoint) -> JoinPoint:
    """Rebuild the weighted chain from a disc-model point.

    The chain vectors are the level sets of the radius function: for each
    distinct nonzero radius r, descending, the vector keeps the phases of
    the coordinates with radius >= r.  Weights are successive radius
    differences, and any slack 1 - max_radius goes to an all-zero term.
    """
    n = len(z)
    radii = sorted({c.radius for c in z.coords if c.radius > 0}, reverse=True)
    terms: list[tuple[Fraction, PhaseVector]] = []
    if not radii:
        return JoinPoint(((Fraction(1), PhaseVector((ZERO,) * n)),))
    if radii[0] < 1:
        terms.append((1 - radii[0], PhaseVector((ZERO,) * n)))
    for i, r in enumerate(radii):
        nxt = radii[i + 1] if i + 1 < len(radii) else Fraction(0)
        vec = PhaseVector(tuple(
            c.phase if c.radius >= r else ZERO for c in z.coords
        ))
        terms.append((r - nxt, vec))
    return JoinPoint(tuple(terms))


def delta_member(v: PhaseVector, z: ModelPoint) -> bool:
    """Whether z lies in the order complex of the nonzero covectors of v.

    Equivalent to: the maximum radius is 1 (the chain has no all-zero
    term) and every radius level set carries a covector of v (which also
    rules out single-coordinate levels).
    """
    if len(v) != len(z):
        raise ValueError("lengths differ")
    radii = {c.radius for c in z.coords if c.radius > 0}
    if 1 not in radii:
        return False
    for r in radii:
        vec = PhaseVector(tuple(
            c.phase if c.radius >= r else ZERO for c in z.coords
        ))
        if not is_covector(v, vec):
            return False
    return True


def rotate(y: Angle, z: ModelPoint) -> ModelPoint:
    """Rotate every nonzero coordinate of z by the angle y."""
    return ModelPoint(tuple(
        c if c.radius == 0 else DiscPoint(c.radius, c.angle + y)
        for c in z.coords
    ))


def rescale_model(v: PhaseVector, z: ModelPoint) -> ModelPoint:
    """Twist each coordinate's angle by the matching unit of v.

    Transports membership: z lies in the complex for v exactly when the
    twisted point lies in the complex for the all-ones vector.
    """
    if len(v) != len(z):
        raise ValueError("lengths differ")
    coords = []
    for vk, c in zip(v, z.coords):
        if vk.is_zero:
            raise ValueError("unit vector must have no zero entries")
        if c.radius == 0:
            coords.append(c)
        else:
            coords.append(DiscPoint(c.radius, c.angle + vk.angle))
    return ModelPoint(tuple(coords))


def parse_model_point(text: str) -> ModelPoint:
    coords = []
    for tok in text.split(";"):
        tok = tok.strip()
        if "@" not in tok:
            raise ValueError(f"expected r@a, got {tok!r}")
        r, a = tok.split("@", 1)
        coords.append(DiscPoint(parse_fraction(r), Angle(parse_fraction(a))))
    return ModelPoint(tuple(coords))


def format_model_point(z: ModelPoint) -> str:
    return ";".join(str(c) for c in z.coords)


# ---------------------------------------------------------------------------
# Seeded rational samplers for property tests and sampled verification
# ---------------------------------------------------------------------------


def _random_fraction(rng: random.Random, den: int = 64) -> Fraction:
    return Fraction(rng.randint(0, den), den)


def random_model_point(rng: random.Random, n: int, den: int = 64) -> ModelPoint:
    """A random disc tuple with rational coordinates.

    Radii are biased toward the interesting boundary values 0 and 1 so
    level-set code paths get exercised.
    """
    coords = []
    for _ in range(n):
        roll = rng.random()
        if roll < 0.2:
            r = Fraction(0)
        elif roll < 0.5:
            r = Fraction(1)
        else:
            r = _random_fraction(rng, den)
        coords.append(DiscPoint(r, Angle(_random_fraction(rng, den))))
    return ModelPoint(tuple(coords))


def random_join_point(rng: random.Random, n: int, den: int = 64) -> JoinPoint:
    """A random canonical weighted chain on n coordinates."""
    # pick a strictly increasing flag of supports
    order = list(range(n))
    rng.shuffle(order)
    depth = rng.randint(1, n)
    cuts = sorted(rng.sample(range(1, n + 1), depth))
    angles = [Angle(_random_fraction(rng, den)) for _ in range(n)]
    vectors = []
    for c in cuts:
        supp = set(order[:c])
        vectors.append(PhaseVector(tuple(
            Phase(angles[j]) if j in supp else ZERO for j in range(n)
        )))
    if rng.random() < 0.3:
        vectors.insert(0, PhaseVector((ZERO,) * n))
    # positive rational weights summing to 1
    raw = [rng.randint(1, den) for _ in vectors]
    total = sum(raw)
    weights = [Fraction(r, total) for r in raw]
    return JoinPoint(tuple(zip(weights, vectors)))
