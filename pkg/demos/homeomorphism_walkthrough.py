"""Walk through the change of coordinates between strict and weak map spaces.

A strict monotone map P -> Q x R is a weakly monotone base map P -> Q plus
one real per element, where elements with comparable positions and equal
base values must keep their reals strictly ordered. The forward pass frees
those constraints one coordinate at a time (last position first) until the
reals are unconstrained; the backward pass restores them exactly.
"""

import random

from ordhom import (
    WEAK,
    LexHomPoint,
    MonotoneMap,
    backward_trace,
    build_poset,
    chain,
    forward_trace,
    lemma_phi,
    lemma_phi_inv,
    membership,
)


def show_trace(label, trace):
    for pt in trace:
        print(f"  {label} stage {pt.stage}: reals = "
              f"({', '.join(f'{r:+.6f}' for r in pt.reals)})")


def main():
    # the per-coordinate bijection (f, oo) -> R and its exact inverse
    print("coordinate bijection with lower bound f = 0:")
    for t in (4.0, 1.0, 0.5, 0.25, 0.1):
        s = lemma_phi(0.0, t)
        back = lemma_phi_inv(0.0, s)
        print(f"  t={t:<6} -> s={s:<8} -> t={back}")
    print()

    # a three-element fork mapped into chain(2) x R
    P = build_poset("abc", [("a", "b"), ("a", "c")])
    Q = chain(2)
    base = MonotoneMap(P, Q, (0, 0, 1), WEAK)  # a, b -> "1"; c -> "2"

    # only the pair (a, b) shares a base value, so exactly one real pair is
    # constrained; c rides along with no constraint on its real
    x = LexHomPoint(base, (0.0, 2.0, -5.0), stage=3)
    assert membership(P, Q, x, 3)
    print(f"input point: base = {base.image_elements()}, reals = {x.reals}")

    fwd = forward_trace(P, Q, x)
    show_trace("forward", fwd)
    y = fwd[-1]
    print(f"freed point: reals = {y.reals} (stage {y.stage}: no constraints)")
    print()

    bwd = backward_trace(P, Q, y)
    show_trace("backward", bwd)
    z = bwd[-1]
    err = max(abs(s - t) for s, t in zip(x.reals, z.reals))
    print(f"round trip error: {err:.3e}")
    assert z.base.values == x.base.values and err <= 1e-9
    print()

    # the backward pass lands in the strict space from any reals at all
    rng = random.Random(1)
    wild = LexHomPoint(base, tuple(rng.uniform(-50, 50) for _ in range(3)), stage=1)
    restored = backward_trace(P, Q, wild)[-1]
    assert membership(P, Q, restored, 3)
    print(f"arbitrary reals {tuple(round(r, 2) for r in wild.reals)} restore to "
          f"a strict point: reals = {tuple(round(r, 2) for r in restored.reals)}")


if __name__ == "__main__":
    main()
