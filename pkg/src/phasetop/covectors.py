"""Phase vectors, covectors, and the componentwise specialization order.

A vector x of hyperfield elements is a covector of a unit vector v when
zero lies in the hyperfield sum of the products v_k * x_k.  Over the
tropical phase hyperfield this means: after twisting each entry of x by
the matching entry of v, either everything vanishes, or at least two
entries survive and no open half-circle contains all of them.  Over the
sign hyperfield it means both signs occur (or nothing survives).

Text form of a phase vector: comma-separated tokens, each "z" for the
zero element or a rational angle in turns ("0", "1/2", ...).  Sign
vectors use "+", "-", "0".
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .phase import (
    Angle,
    Phase,
    ZERO,
    min_enclosing_arc,
    mul,
    parse_fraction,
    sign_hyper_sum_list,
    sign_mul,
)

__all__ = [
    "PhaseVector",
    "all_ones",
    "support",
    "zero_in_sum",
    "is_covector",
    "leq_vec",
    "find_zero_triple",
    "rescale",
    "enumerate_covectors",
    "parse_phase_vector",
    "format_phase_vector",
    "parse_sign_vector",
    "format_sign_vector",
    "sign_support",
    "sign_zero_in_sum",
    "sign_is_covector",
    "sign_leq_vec",
]

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class PhaseVector:
    """A tuple of tropical phase hyperfield elements."""

    entries: tuple[Phase, ...]

    @staticmethod
    def of(items: Iterable) -> "PhaseVector":
        """Build from Phase values, None (zero), or rational angles."""
        out = []
        for it in items:
            if it is None:
                out.append(ZERO)
            elif isinstance(it, Phase):
                out.append(it)
            else:
                out.append(Phase.of(Fraction(it)))
        return PhaseVector(tuple(out))

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> Phase:
        return self.entries[i]

    def __iter__(self) -> Iterator[Phase]:
        return iter(self.entries)

    def __str__(self) -> str:
        return format_phase_vector(self)


def all_ones(n: int) -> PhaseVector:
    """The unit vector (1, ..., 1): every phase at angle 0."""
    return PhaseVector(tuple(Phase.of(0) for _ in range(n)))


def support(x: PhaseVector) -> tuple[int, ...]:
    """1-based indices of the nonzero entries."""
    return tuple(i + 1 for i, e in enumerate(x) if not e.is_zero)


def zero_in_sum(xs: Sequence[Phase]) -> bool:
    """Whether zero lies in the iterated hyperaddition of the entries.

    The all-zero sum contains zero; a sum with exactly one nonzero term
    is that singleton and misses zero; otherwise zero appears exactly
    when the nonzero angles cannot fit in an open half-circle, i.e.
    their minimal enclosing arc has length >= 1/2 turn.
    """
    angles = [e.angle for e in xs if not e.is_zero]
    if not angles:
        return True
    if len(angles) == 1:
        return False
    return min_enclosing_arc(angles).length >= HALF


def _require_units(v: PhaseVector) -> None:
    if any(e.is_zero for e in v):
        raise ValueError("unit vector must have no zero entries")


def is_covector(v: PhaseVector, x: PhaseVector) -> bool:
    """Whether x is a covector of the unit vector v.

    True for the all-zero x; false whenever x has exactly one nonzero
    entry.  v must consist of nonzero phases.
    """
    if len(v) != len(x):
        raise ValueError("vector lengths differ")
    _require_units(v)
    return zero_in_sum([mul(vk, xk) for vk, xk in zip(v, x)])


def leq_vec(x: PhaseVector, y: PhaseVector) -> bool:
    """Componentwise specialization order: each x_k is zero or equals y_k."""
    if len(x) != len(y):
        raise ValueError("vector lengths differ")
    return all(xk.is_zero or xk == yk for xk, yk in zip(x, y))


def find_zero_triple(x: PhaseVector) -> tuple[int, int, int] | None:
    """The lexicographically smallest 1-based triple j < k < l with zero
    in the hyperaddition of x_j, x_k, x_l, or None if no triple works.

    Every covector with support of size at least 3 admits one, because
    dropping entries outside a spanning triple keeps the enclosing arc
    long; zero entries inside a triple are harmless filler.
    """
    n = len(x)
    for j, k, l in itertools.combinations(range(n), 3):
        if zero_in_sum([x[j], x[k], x[l]]):
            return (j + 1, k + 1, l + 1)
    return None


def rescale(v: PhaseVector, x: PhaseVector) -> PhaseVector:
    """Entrywise product (v_1 x_1, ..., v_n x_n) for a unit vector v.

    For fixed v this is a bijection of vectors that carries covectors of
    v to covectors of the all-ones vector and back.
    """
    if len(v) != len(x):
        raise ValueError("vector lengths differ")
    _require_units(v)
    return PhaseVector(tuple(mul(vk, xk) for vk, xk in zip(v, x)))


def _phase_alphabet(m: int) -> list[Phase]:
    # zero sorts before all angles; angles ascend
    return [ZERO] + [Phase.of(Fraction(k, m)) for k in range(m)]


def enumerate_covectors(field: str, n: int, m: int | None = None) -> list:
    """All nonzero covectors of the all-ones vector over a discretization.

    field "phase": entries range over zero and the m-th roots of unity
    (m even, so antipodes stay on the grid); returns PhaseVectors in
    lexicographic order with zero before ascending angles.  field
    "sign": entries range over {-1, 0, +1}; returns int tuples, ordered
    with 0 first, then +1, then -1 (matching the phase grid at m = 2).
    The zero vector is excluded in both cases.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    if field == "phase":
        if m is None or m < 2 or m % 2 != 0:
            raise ValueError("phase enumeration needs even m >= 2")
        ones = all_ones(n)
        out = []
        for combo in itertools.product(_phase_alphabet(m), repeat=n):
            if all(e.is_zero for e in combo):
                continue
            x = PhaseVector(combo)
            if is_covector(ones, x):
                out.append(x)
        return out
    if field == "sign":
        out = []
        for combo in itertools.product((0, 1, -1), repeat=n):
            if all(e == 0 for e in combo):
                continue
            if sign_is_covector((1,) * n, combo):
                out.append(combo)
        return out
    raise ValueError(f"unknown field {field!r}")


# ---------------------------------------------------------------------------
# Text formats
# ---------------------------------------------------------------------------


def parse_phase_vector(text: str) -> PhaseVector:
    entries = []
    for tok in text.split(","):
        tok = tok.strip()
        if tok == "z":
            entries.append(ZERO)
        else:
            entries.append(Phase(Angle(parse_fraction(tok))))
    return PhaseVector(tuple(entries))


def format_phase_vector(x: PhaseVector) -> str:
    return ",".join(str(e) for e in x)


def parse_sign_vector(text: str) -> tuple[int, ...]:
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if tok == "+":
            out.append(1)
        elif tok == "-":
            out.append(-1)
        elif tok == "0":
            out.append(0)
        else:
            raise ValueError(f"sign tokens are +, -, 0; got {tok!r}")
    return tuple(out)


def format_sign_vector(v: Sequence[int]) -> str:
    return ",".join({1: "+", -1: "-", 0: "0"}[e] for e in v)


# ---------------------------------------------------------------------------
# Sign hyperfield counterparts
# ---------------------------------------------------------------------------


def sign_support(x: Sequence[int]) -> tuple[int, ...]:
    return tuple(i + 1 for i, e in enumerate(x) if e != 0)


def sign_zero_in_sum(xs: Sequence[int]) -> bool:
    return 0 in sign_hyper_sum_list(list(xs))


def sign_is_covector(v: Sequence[int], x: Sequence[int]) -> bool:
    if len(v) != len(x):
        raise ValueError("vector lengths differ")
    if any(e == 0 for e in v):
        raise ValueError("unit vector must have no zero entries")
    return sign_zero_in_sum([sign_mul(a, b) for a, b in zip(v, x)])


def sign_leq_vec(x: Sequence[int], y: Sequence[int]) -> bool:
    if len(x) != len(y):
        raise ValueError("vector lengths differ")
    return all(a == 0 or a == b for a, b in zip(x, y))
