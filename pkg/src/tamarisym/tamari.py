"""Tamari order on size-n trees: coverings, comparison, join, meet, c_T words.

Leaf ``j`` covers leaf ``i < j`` in ``T`` when the address of ``j`` is
``γ1^p`` (p ≥ 1) and that of ``i`` starts with ``γ0``.  The set of leaves
covered by ``j`` is always an interval ``[low_j, j-1]``, so a covering
relation is stored as the tuple of lower ends (``low_j == j`` meaning that
``j`` covers nothing).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .errors import CapacityGuard, InconsistentCovering, SizeMismatch
from .trees import (
    LEAF_CHAR, NODE_CHAR, Tree, comb, mirror, polish_decode, polish_encode,
    skeleton,
)
from .words import Letter, Word, act, rotate_left

__all__ = [
    "Covering", "covering_of", "tree_from_covering", "leq", "join", "meet",
    "c_word", "enumerate_trees", "enumerate_polish", "hasse_edges", "catalan",
    "enumeration_cap", "closure_join", "immediate_count", "bottom", "top",
    "comb_offset_check",
]

DEFAULT_CAP = 14


@dataclass(frozen=True)
class Covering:
    """Covering relation of a size-n tree as per-leaf interval lower ends."""

    lows: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.lows) - 1

    def covers(self, j: int, i: int) -> bool:
        return self.lows[j] <= i < j

    def pairs(self) -> set[tuple[int, int]]:
        return {(j, i) for j, low in enumerate(self.lows) for i in range(low, j)}

    def __le__(self, other: Covering) -> bool:
        return all(a >= b for a, b in zip(self.lows, other.lows))

    @classmethod
    def from_pairs(cls, n: int, pairs) -> Covering:
        lows = list(range(n + 1))
        for j, i in pairs:
            if not 0 <= i < j <= n:
                raise InconsistentCovering(f"pair {(j, i)} out of range for size {n}")
            lows[j] = min(lows[j], i)
        cov = cls(tuple(lows))
        if cov.pairs() != set(pairs):
            raise InconsistentCovering("covered sets are not intervals ending at j-1")
        return cov


def covering_of(t: Tree) -> Covering:
    lows: list[int] = []
    counter = 0

    def walk(s: Tree, right_spine_start: int | None) -> None:
        # right_spine_start: first leaf of the highest subtree reached so far
        # only through right edges, or None when the last edge was a left one
        nonlocal counter
        if s.left is None:
            lows.append(counter if right_spine_start is None else right_spine_start)
            counter += 1
            return
        first = counter
        walk(s.left, None)
        walk(s.right, first if right_spine_start is None else right_spine_start)

    walk(t, None)
    return Covering(tuple(lows))


def immediate_count(cov: Covering, j: int) -> int:
    """Number of i with j ▷ i and no k strictly between them with k ▷ i."""
    count = 0
    for i in range(cov.lows[j], j):
        if not any(cov.lows[k] <= i for k in range(i + 1, j)):
            count += 1
    return count


def tree_from_covering(cov: Covering) -> Tree:
    """Rebuild the tree: after leaf j come as many node letters as
    there are leaves immediately covered by j."""
    parts = []
    for j in range(cov.size + 1):
        parts.append(LEAF_CHAR)
        parts.append(NODE_CHAR * immediate_count(cov, j))
    word = "".join(parts)
    try:
        t = polish_decode(word)
    except ValueError as exc:
        raise InconsistentCovering(f"covering does not come from a tree: {exc}") from exc
    if covering_of(t) != cov:
        raise InconsistentCovering("covering does not come from a tree")
    return t


def _check_sizes(t: Tree, t2: Tree) -> None:
    if t.size != t2.size:
        raise SizeMismatch(f"tree sizes differ: {t.size} vs {t2.size}")


def leq(t: Tree, t2: Tree) -> bool:
    _check_sizes(t, t2)
    return covering_of(t) <= covering_of(t2)


def closure_join(c1: Covering, c2: Covering) -> Covering:
    """Transitive closure of the union of two coverings."""
    lows: list[int] = []
    for j, (x, y) in enumerate(zip(c1.lows, c2.lows)):
        cur = min(x, y)
        while True:
            new = min([cur] + lows[cur:j])
            if new == cur:
                break
            cur = new
        lows.append(cur)
    return Covering(tuple(lows))


def c_word(t: Tree, variant: str = "plain") -> Word:
    """Positive word over letters a_{1^i} with ``comb(n) * c_T == T``.

    ``variant="primed"`` keeps the final block of node letters.
    """
    if variant not in ("plain", "primed"):
        raise ValueError(f"unknown variant {variant!r}")
    s = polish_encode(t)
    if variant == "plain":
        s = s.rstrip(NODE_CHAR)
    out = []
    nu = -1
    for k, c in enumerate(s):
        if k > 0:
            if s[k - 1] == c == LEAF_CHAR:
                nu += 1
            elif s[k - 1] == c == NODE_CHAR:
                nu -= 1
        if c == NODE_CHAR:
            out.append(Letter("1" * nu))
    return tuple(out)


def join(t: Tree, t2: Tree, method: str = "covering") -> Tree:
    _check_sizes(t, t2)
    if t == t2:
        return t
    if method == "covering":
        return tree_from_covering(closure_join(covering_of(t), covering_of(t2)))
    if method == "reversing":
        from .reversing import reverse_right
        from .words import inverse

        res = reverse_right(inverse(c_word(t)) + c_word(t2))
        return act(t, res.numerator)
    if method == "polish":
        from .polish_nf import polish_run

        w = polish_run(t, t2)
        return act(t, tuple(x for x in w if x.sign > 0))
    raise ValueError(f"unknown join method {method!r}")


def meet(t: Tree, t2: Tree, method: str = "covering") -> Tree:
    _check_sizes(t, t2)
    if t == t2:
        return t
    return mirror(join(mirror(t), mirror(t2), method))


# -- enumeration -------------------------------------------------------------

def catalan(n: int) -> int:
    c = 1
    for k in range(n):
        c = c * 2 * (2 * k + 1) // (k + 2)
    return c


def enumeration_cap() -> int:
    raw = os.environ.get("TAMARI_CAP")
    return int(raw) if raw else DEFAULT_CAP


def _guard(n: int, cap: int | None) -> None:
    cap = enumeration_cap() if cap is None else cap
    if n < 0:
        raise ValueError("size must be nonnegative")
    if n > cap:
        raise CapacityGuard(f"size {n} exceeds the enumeration cap {cap} (set TAMARI_CAP)")


@lru_cache(maxsize=None)
def _polish_words(n: int) -> tuple[str, ...]:
    # sorted lexicographically with the leaf letter before the node letter
    if n == 0:
        return (LEAF_CHAR,)
    out = []
    for k in range(n - 1, -1, -1):
        for left in _polish_words(k):
            for right in _polish_words(n - 1 - k):
                out.append(left + right + NODE_CHAR)
    return tuple(sorted(out, key=lambda w: w.replace(NODE_CHAR, "~")))


def enumerate_polish(n: int, cap: int | None = None) -> tuple[str, ...]:
    """All Polish words of size-n trees, in increasing lexicographic order."""
    _guard(n, cap)
    return _polish_words(n)


def enumerate_trees(n: int, cap: int | None = None) -> Iterator[Tree]:
    for w in enumerate_polish(n, cap):
        yield polish_decode(w)


def hasse_edges(n: int, cap: int | None = None) -> Iterator[tuple[Tree, Tree]]:
    """Pairs (T, T * a_α) over all trees of size n and addresses α."""
    for t in enumerate_trees(n, cap):
        for alpha in sorted(skeleton(t)):
            t2 = rotate_left(t, alpha)
            if t2 is not None:
                yield t, t2


def bottom(n: int) -> Tree:
    return comb(n, "right")


def top(n: int) -> Tree:
    return comb(n, "left")


def comb_offset_check(t: Tree, p: int) -> bool:
    """C_{n+p} * c'_T == T ∧ C_{p-1} for p >= 1."""
    if p < 1:
        raise ValueError("p must be at least 1")
    return act(comb(t.size + p), c_word(t, "primed")) == Tree(t, comb(p - 1))
