"""Staged piecewise-linear change of coordinates between the strict maps
P -> Q x R (lexicographic order) and the weak maps P -> Q paired with one
free real per element.

Fix the admissible numbering p_1, ..., p_n of P. For 1 <= k <= n the space
X_k consists of the points (base, t_1..t_n) with base weakly monotone and
t_i < t_j whenever i < j <= k, p_i < p_j and base(p_i) = base(p_j). Then
X_1 imposes nothing on the reals while X_n is exactly the strict maps into
Q x R (read base(p) as the major coordinate and t as the minor one).

Adjacent spaces are identified one coordinate at a time. At stage k the
coordinate t_{k+1} ranges over (f_k, oo) inside X_{k+1}, where f_k is the
largest t_j over the earlier positions j <= k forced below it (or -oo when
none are); composing with a fixed increasing bijection (f_k, oo) -> R frees
the coordinate. The bijection is piecewise linear with breakpoints at
f + 2**-i; its closed form and exact inverse live in lemma_phi and
lemma_phi_inv. t_1 is never transformed: no earlier position can bound it.

Coordinate convention: reals[a] is the value at numbering position a
(0-based), not at input element a. File I/O converts; see fileio.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, MembershipError
from .homs import MonotoneMap
from .posets import FinitePoset, admissible_numbering

__all__ = [
    "LexHomPoint",
    "UscSpec",
    "usc_spec",
    "usc_value",
    "lemma_phi",
    "lemma_phi_inv",
    "membership",
    "forward",
    "backward",
    "forward_trace",
    "backward_trace",
]

NEG_INF = float("-inf")


@dataclass(frozen=True)
class LexHomPoint:
    """A base map with one real per element, tagged with the stage whose
    constraints it claims to satisfy.

    reals are indexed by numbering position; stage k claims membership in
    X_k (k = 1 claims nothing beyond a weakly monotone base).
    """

    base: MonotoneMap
    reals: tuple
    stage: int


@dataclass(frozen=True)
class UscSpec:
    """The earlier positions that bound coordinate k+1 from below, plus the
    bound itself: max of their reals, or -oo when there are none.

    positions is determined by the base map and k alone, never the reals.
    """

    positions: tuple
    value: float


def usc_spec(point: LexHomPoint, k: int) -> UscSpec:
    """Lower-bound data for coordinate k+1 at stage k (1 <= k <= n-1).

    Collects the 0-based numbering positions a < k whose element lies
    strictly below p_{k+1} with the same base value; the bound is the max
    of the point's reals there.
    """
    P = point.base.source
    order = admissible_numbering(P).order
    if not 1 <= k <= len(order) - 1:
        raise ValueError(f"stage k must be in [1, {len(order) - 1}], got {k}")
    vals = point.base.values
    tgt = order[k]
    positions = []
    best = NEG_INF
    for a in range(k):
        src = order[a]
        if vals[src] == vals[tgt] and P.less(src, tgt):
            positions.append(a)
            if point.reals[a] > best:
                best = point.reals[a]
    return UscSpec(tuple(positions), best)


def usc_value(point: LexHomPoint, k: int) -> float:
    """The stage-k lower bound f_k as an extended real (-oo when free)."""
    return usc_spec(point, k).value


def lemma_phi(f: float, t: float) -> float:
    """Strictly increasing piecewise-linear bijection (f, oo) -> R.

    For f = -oo the map is t + 1. For finite f it is linear of slope 1
    above f + 1 and, between the breakpoints f + 2**-i (mapped to -i),
    linear of slope 2**(i+1). math.frexp reads off the breakpoint pair
    containing t, so no loop over pieces and no overflow for tiny t - f.
    """
    if f == NEG_INF:
        return t + 1.0
    if not t > f:
        raise DomainError(f"need t > f, got t={t!r} with f={f!r}")
    d = t - f
    if d >= 1.0:
        return d - 1.0
    m, e = math.frexp(d)
    # d = m * 2**e with m in [0.5, 1): the piece with i = -e, where the
    # map is s = -(i+1) + (d - 2**(e-1)) * 2**(1-e) = 2*m - 2 + e
    return 2.0 * m - 2.0 + e


def lemma_phi_inv(f: float, s: float) -> float:
    """Exact piecewise-linear inverse of lemma_phi; accepts any real s."""
    if f == NEG_INF:
        return s - 1.0
    if s >= 0.0:
        return f + s + 1.0
    i = math.floor(-s)
    # s in [-(i+1), -i] inverts to d = (s + i + 2) * 2**-(i+1)
    t = f + math.ldexp(s + i + 2.0, -(i + 1))
    if t <= f:
        # the offset underflowed; the smallest float above f is the honest
        # representative of the true preimage
        t = math.nextafter(f, math.inf)
    return t


def membership(P: FinitePoset, Q: FinitePoset, point: LexHomPoint, k: int) -> bool:
    """Direct check of the stage-k constraints (oracle role: shares no code
    with the stage maps).

    True iff the base values are weakly monotone and reals[a] < reals[b]
    for all positions a < b < k with p_(a) < p_(b) and equal base values.
    """
    vals = point.base.values
    lt_p = P.strict_leq.tolist()
    lt_q = Q.strict_leq.tolist()
    n = len(P)
    for i in range(n):
        for j in range(n):
            if lt_p[i][j] and vals[i] != vals[j] and not lt_q[vals[i]][vals[j]]:
                return False
    order = admissible_numbering(P).order
    reals = point.reals
    for b in range(min(k, n)):
        for a in range(b):
            if lt_p[order[a]][order[b]] and vals[order[a]] == vals[order[b]]:
                if not reals[a] < reals[b]:
                    return False
    return True


def forward_trace(P: FinitePoset, Q: FinitePoset, point: LexHomPoint):
    """Run the stages k = n-1 .. 1, collecting the point after each one.

    The k-th entry from the start claims stage n-1, n-2, ..., 1; the last
    entry is forward's result. Raises MembershipError unless the input
    satisfies the full strict constraints.
    """
    n = len(P)
    if not membership(P, Q, point, n):
        raise MembershipError("point is not a strictly monotone map into the lex product")
    reals = list(point.reals)
    trace = []
    for k in range(n - 1, 0, -1):
        cur = LexHomPoint(point.base, tuple(reals), k + 1)
        reals[k] = lemma_phi(usc_value(cur, k), reals[k])
        trace.append(LexHomPoint(point.base, tuple(reals), k))
    if not trace:
        trace.append(LexHomPoint(point.base, tuple(reals), 1))
    return trace


def forward(P: FinitePoset, Q: FinitePoset, point: LexHomPoint) -> LexHomPoint:
    """Strict maps into Q x R -> weak base map with free reals.

    Working down from the last coordinate, each stage k rewrites reals[k]
    (position k+1) through lemma_phi with the bound read off the untouched
    earlier coordinates. The base map is returned untouched.
    """
    return forward_trace(P, Q, point)[-1]


def backward_trace(P: FinitePoset, Q: FinitePoset, point: LexHomPoint):
    """Run the stages k = 1 .. n-1, collecting the point after each one.

    Entries claim stages 2, 3, ..., n; the last entry is backward's result.
    The input needs only a weakly monotone base; reals are arbitrary.
    """
    n = len(P)
    reals = list(point.reals)
    trace = []
    for k in range(1, n):
        cur = LexHomPoint(point.base, tuple(reals), k)
        reals[k] = lemma_phi_inv(usc_value(cur, k), reals[k])
        trace.append(LexHomPoint(point.base, tuple(reals), k + 1))
    if not trace:
        trace.append(LexHomPoint(point.base, tuple(reals), max(n, 1)))
    out = trace[-1]
    assert membership(P, Q, out, n), "stage maps failed to land in the strict space"
    return trace


def backward(P: FinitePoset, Q: FinitePoset, point: LexHomPoint) -> LexHomPoint:
    """Weak base map with free reals -> strict map into Q x R.

    Inverse pass: each stage k rewrites reals[k] through lemma_phi_inv with
    the bound read off the already-restored earlier coordinates.
    """
    return backward_trace(P, Q, point)[-1]
