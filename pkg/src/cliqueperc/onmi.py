"""Similarity of two overlapping covers via normalized mutual information.

Variant pinned for reproducibility: every community is a binary membership
variable over the covered universe; for each community on one side the best
(lowest) conditional entropy against the other side is kept, but a partner
only qualifies when its joint distribution is diagonal-dominant,
h(p11) + h(p00) >= h(p10) + h(p01), falling back to the community's own
entropy otherwise. Side entropies are summed unnormalized, the two
directional information terms averaged, and the result divided by the larger
side entropy.

Conventions: the universe is the union of nodes covered by either side
(uncovered nodes carry no membership information and are excluded); two empty
covers score 1.0, one empty cover scores 0.0; if both covers have zero
entropy the score is 1.0 exactly when they are equal as community sets.
"""

from __future__ import annotations

from math import log2

from .cover import Cover

__all__ = ["onmi"]


def _h(p: float) -> float:
    return -p * log2(p) if p > 0.0 else 0.0


def _hcomm(size: int, n: int) -> float:
    return _h(size / n) + _h((n - size) / n)


def _directional(xs, ys, hx_terms, hy_terms, n: int) -> float:
    """sum_i H(X_i | Y) with the qualification rule above."""
    total = 0.0
    for i, x in enumerate(xs):
        lx = len(x)
        best = hx_terms[i]
        for j, y in enumerate(ys):
            both = len(x & y)
            p11 = both / n
            p10 = (lx - both) / n
            p01 = (len(y) - both) / n
            p00 = (n - lx - len(y) + both) / n
            if _h(p11) + _h(p00) < _h(p10) + _h(p01):
                continue
            cond = _h(p11) + _h(p10) + _h(p01) + _h(p00) - hy_terms[j]
            if cond < 0.0:
                cond = 0.0
            if cond < best:
                best = cond
        total += best
    return total


def onmi(a: Cover, b: Cover, universe_size: int) -> float:
    """Score in [0, 1]; 1.0 for identical covers; symmetric in a and b."""
    xs = a.as_sets()
    ys = b.as_sets()
    covered = set().union(*xs, *ys) if (xs or ys) else set()
    if universe_size < len(covered):
        raise ValueError(
            f"universe_size {universe_size} smaller than the {len(covered)} covered nodes")
    if not xs and not ys:
        return 1.0
    if not xs or not ys:
        return 0.0
    n = len(covered)
    hx_terms = [_hcomm(len(c), n) for c in xs]
    hy_terms = [_hcomm(len(c), n) for c in ys]
    hx = sum(hx_terms)
    hy = sum(hy_terms)
    denom = max(hx, hy)
    if denom == 0.0:
        return 1.0 if set(xs) == set(ys) else 0.0
    info = 0.5 * ((hx - _directional(xs, ys, hx_terms, hy_terms, n))
                  + (hy - _directional(ys, xs, hy_terms, hx_terms, n)))
    return min(max(info / denom, 0.0), 1.0)
