"""Exhaustive enumeration of monotone maps between finite posets.

This is the brute-force oracle the rest of the library is checked against:
a plain backtracking search with no closed-form shortcuts. Elements are
assigned along the admissible numbering, so every order constraint against
already-assigned elements can be applied the moment a value is proposed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .posets import FinitePoset, admissible_numbering

__all__ = ["STRICT", "WEAK", "MonotoneMap", "enumerate_homs",
           "iter_hom_values", "count_homs"]

STRICT = "strict"
WEAK = "weak"


@dataclass(frozen=True)
class MonotoneMap:
    """A monotone map between finite posets.

    ``values[i]`` is the target element index assigned to source element i
    (source input order). In strict mode comparable source pairs map to
    strictly comparable targets; in weak mode equal targets are also allowed.
    """

    source: FinitePoset
    target: FinitePoset
    values: tuple
    mode: str

    def image_elements(self) -> tuple:
        """Target element identifiers, one per source element."""
        return tuple(self.target.elements[v] for v in self.values)


def _check_mode(mode: str):
    if mode not in (STRICT, WEAK):
        raise ValueError(f"mode must be {STRICT!r} or {WEAK!r}, got {mode!r}")


def _search_tables(P: FinitePoset, Q: FinitePoset, mode: str):
    """Assignment order plus, per target value, the bitmask of values allowed
    strictly (or weakly) above it."""
    qn = len(Q)
    if mode == WEAK:
        allow = [Q.succ_masks[w] | (1 << w) for w in range(qn)]
    else:
        allow = list(Q.succ_masks)
    return admissible_numbering(P).order, allow


def iter_hom_values(P: FinitePoset, Q: FinitePoset, mode: str):
    """Yield the raw value tuple of every monotone map P -> Q.

    Fast path used by the Euler characteristic engine; `enumerate_homs` is
    the public wrapper that attaches the map objects.
    """
    _check_mode(mode)
    n = len(P)
    if n == 0:
        yield ()
        return
    if len(Q) == 0:
        return
    order, allow = _search_tables(P, Q, mode)
    full = (1 << len(Q)) - 1
    pred = P.pred_masks
    values = [0] * n

    def rec(a):
        if a == n:
            yield tuple(values)
            return
        e = order[a]
        mask = full
        m = pred[e]
        while m and mask:
            i = (m & -m).bit_length() - 1
            mask &= allow[values[i]]
            m &= m - 1
        while mask:
            bit = mask & -mask
            values[e] = bit.bit_length() - 1
            yield from rec(a + 1)
            mask ^= bit

    yield from rec(0)


def enumerate_homs(P: FinitePoset, Q: FinitePoset, mode: str):
    """Yield every monotone map P -> Q of the given mode exactly once.

    Backtracking assigns elements in admissible-numbering order and prunes a
    partial assignment as soon as it violates a constraint against an
    already-assigned predecessor. Maps come out in lexicographic order of
    the value sequence read along that numbering (the values array itself,
    whenever the input element order is a linear extension).
    """
    for values in iter_hom_values(P, Q, mode):
        yield MonotoneMap(P, Q, values, mode)


def count_homs(P: FinitePoset, Q: FinitePoset, mode: str) -> int:
    """Number of monotone maps P -> Q, via the same backtracker as
    `enumerate_homs` but without materializing maps."""
    _check_mode(mode)
    n = len(P)
    if n == 0:
        return 1
    if len(Q) == 0:
        return 0
    order, allow = _search_tables(P, Q, mode)
    full = (1 << len(Q)) - 1
    pred = P.pred_masks
    values = [0] * n

    def rec(a):
        if a == n:
            return 1
        e = order[a]
        mask = full
        m = pred[e]
        while m and mask:
            i = (m & -m).bit_length() - 1
            mask &= allow[values[i]]
            m &= m - 1
        total = 0
        while mask:
            bit = mask & -mask
            values[e] = bit.bit_length() - 1
            total += rec(a + 1)
            mask ^= bit
        return total

    return rec(0)
