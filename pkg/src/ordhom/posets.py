"""Finite posets, admissible numberings, and lexicographic real extensions.

A finite poset is stored both as its Hasse diagram (cover pairs, for I/O)
and as the full strict comparability matrix (for O(1) order queries).
`LexPoset` wraps a finite poset Q0 together with a depth k and denotes
Q0 x R^k ordered lexicographically, leftmost coordinate most significant.
Each application of `negate` appends one real coordinate; the Euler
characteristic picks up a factor of -1 per coordinate.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import CycleError, UnknownElement

__all__ = [
    "FinitePoset",
    "LexPoset",
    "Numbering",
    "build_poset",
    "chain",
    "antichain",
    "admissible_numbering",
    "negate",
    "euler_char",
    "all_posets",
    "random_poset",
]


class FinitePoset:
    """A finite set with a strict partial order.

    Attributes:
        elements: tuple of element identifiers (opaque strings).
        covers: tuple of (a, b) pairs, the transitive reduction of the order.
        strict_leq: read-only boolean matrix; entry (i, j) is True iff
            ``elements[i] < elements[j]`` strictly.
        pred_masks / succ_masks: per-element bitmasks of strict predecessors
            and successors, for the enumeration engines.
    """

    __slots__ = ("elements", "covers", "strict_leq", "_index",
                 "pred_masks", "succ_masks")

    def __init__(self, elements, covers, strict_leq):
        self.elements = tuple(elements)
        self.covers = tuple(covers)
        strict_leq = np.asarray(strict_leq, dtype=bool)
        strict_leq.setflags(write=False)
        self.strict_leq = strict_leq
        self._index = {e: i for i, e in enumerate(self.elements)}
        n = len(self.elements)
        pred = [0] * n
        succ = [0] * n
        for i in range(n):
            for j in range(n):
                if strict_leq[i, j]:
                    succ[i] |= 1 << j
                    pred[j] |= 1 << i
        self.pred_masks = tuple(pred)
        self.succ_masks = tuple(succ)

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        if not isinstance(other, FinitePoset):
            return NotImplemented
        return (self.elements == other.elements
                and np.array_equal(self.strict_leq, other.strict_leq))

    def __hash__(self):
        return hash((self.elements, self.strict_leq.tobytes()))

    def __repr__(self):
        return f"FinitePoset(elements={list(self.elements)!r}, covers={list(self.covers)!r})"

    def index(self, element: str) -> int:
        try:
            return self._index[element]
        except KeyError:
            raise UnknownElement(f"unknown element {element!r}") from None

    def less(self, i: int, j: int) -> bool:
        """Strict comparison by element indices."""
        return bool(self.strict_leq[i, j])

    def is_chain(self) -> bool:
        """True iff every pair of distinct elements is comparable."""
        m = self.strict_leq
        return all(m[i, j] or m[j, i]
                   for i, j in combinations(range(len(self)), 2))

    def restrict(self, indices) -> "FinitePoset":
        """Induced subposet on the given element indices (kept in ascending
        index order)."""
        idx = sorted(indices)
        sub = self.strict_leq[np.ix_(idx, idx)]
        return _from_closure([self.elements[i] for i in idx], sub)


def _transitive_closure(adj: np.ndarray) -> np.ndarray:
    """Warshall closure of a boolean adjacency matrix."""
    reach = adj.copy()
    for k in range(len(reach)):
        reach |= np.outer(reach[:, k], reach[k, :])
    return reach


def _transitive_reduction(closure: np.ndarray):
    """Cover pairs of a transitively closed strict order: the comparabilities
    with no intermediate element."""
    lt = closure
    n = len(lt)
    via = (lt.astype(np.uint8) @ lt.astype(np.uint8)) > 0
    red = lt & ~via
    return [(i, j) for i in range(n) for j in range(n) if red[i, j]]


def _from_closure(elements, closure: np.ndarray) -> FinitePoset:
    """Build a poset from an already valid strict closure matrix."""
    covers = [(elements[i], elements[j])
              for i, j in _transitive_reduction(closure)]
    return FinitePoset(elements, covers, closure)


def build_poset(elements, covers) -> FinitePoset:
    """Construct a finite poset from element names and cover pairs.

    The cover list may be any relation whose transitive closure is a strict
    order; the stored cover set is normalized to the transitive reduction.

    Raises:
        UnknownElement: a cover pair names a missing element, or names repeat.
        CycleError: the closure of the cover relation is not irreflexive.
    """
    elements = tuple(elements)
    if len(set(elements)) != len(elements):
        raise UnknownElement("element identifiers must be distinct")
    index = {e: i for i, e in enumerate(elements)}
    n = len(elements)
    adj = np.zeros((n, n), dtype=bool)
    for a, b in covers:
        if a not in index:
            raise UnknownElement(f"unknown element {a!r} in cover pair")
        if b not in index:
            raise UnknownElement(f"unknown element {b!r} in cover pair")
        adj[index[a], index[b]] = True
    closure = _transitive_closure(adj)
    if closure.diagonal().any():
        raise CycleError("cover relation contains a cycle")
    return _from_closure(elements, closure)


def chain(n: int) -> FinitePoset:
    """The totally ordered poset on elements "1" < "2" < ... < "n"."""
    elements = [str(i + 1) for i in range(n)]
    return build_poset(elements, [(elements[i], elements[i + 1])
                                  for i in range(n - 1)])


def antichain(n: int) -> FinitePoset:
    """n pairwise incomparable elements."""
    return build_poset([str(i + 1) for i in range(n)], [])


@dataclass(frozen=True)
class Numbering:
    """A linear extension of a poset, as a permutation of element indices.

    ``order[a]`` is the element index placed at position a; for positions
    a < b the element at b is never below the element at a.
    """

    order: tuple


def admissible_numbering(P: FinitePoset) -> Numbering:
    """Linear extension by repeated removal of minimal elements.

    Ties are broken by input element order, so the result is deterministic.
    """
    n = len(P)
    remaining = (1 << n) - 1
    pred = P.pred_masks
    order = []
    while remaining:
        for i in range(n):
            if remaining >> i & 1 and not pred[i] & remaining:
                order.append(i)
                remaining &= ~(1 << i)
                break
    return Numbering(tuple(order))


@dataclass(frozen=True)
class LexPoset:
    """The poset ``base x R^depth`` with lexicographic order.

    Comparison is leftmost-significant: base first, then the real
    coordinates in order. depth = 0 is order-isomorphic to ``base``.
    """

    base: FinitePoset
    depth: int = 0

    def __post_init__(self):
        if self.depth < 0:
            raise ValueError("depth must be nonnegative")


def negate(Q: LexPoset) -> LexPoset:
    """Append one lexicographic real coordinate (the reciprocity negation)."""
    return LexPoset(Q.base, Q.depth + 1)


def euler_char(Q: LexPoset) -> int:
    """Euler characteristic of the lex product: (-1)**depth * |base|.

    A finite discrete poset contributes its cardinality; each real line
    factor contributes -1 multiplicatively.
    """
    return (-1) ** Q.depth * len(Q.base)


def all_posets(n: int):
    """Yield every strict partial order on n labeled elements "1".."n".

    Exhaustive generation by enumerating relations over ordered pairs and
    keeping the transitive, antisymmetric ones. Intended for small n (the
    count grows as 1, 1, 3, 19, 219, 4231, ...).
    """
    elements = [str(i + 1) for i in range(n)]
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    m = len(pairs)
    for mask in range(1 << m):
        rel = [pairs[b] for b in range(m) if mask >> b & 1]
        relset = set(rel)
        if any((j, i) in relset for i, j in rel):
            continue
        if any((a, d) not in relset
               for a, b in rel for c, d in rel if b == c):
            continue
        closure = np.zeros((n, n), dtype=bool)
        for i, j in rel:
            closure[i, j] = True
        yield _from_closure(elements, closure)


def random_poset(n: int, seed: int, edge_prob: float = 0.5) -> FinitePoset:
    """Seeded random poset on n elements.

    Draws a random total order (a shuffle), includes each forward edge of
    that order independently with probability ``edge_prob``, and takes the
    transitive closure. Reproducible from the seed alone.
    """
    rng = random.Random(seed)
    perm = list(range(n))
    rng.shuffle(perm)
    elements = [str(i + 1) for i in range(n)]
    covers = []
    for a in range(n):
        for b in range(a + 1, n):
            if rng.random() < edge_prob:
                covers.append((elements[perm[a]], elements[perm[b]]))
    return build_poset(elements, covers)
