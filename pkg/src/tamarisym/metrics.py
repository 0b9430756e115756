"""Rotation distances, lattice diameters and the distance experiment families.

Searches run directly on Polish words: a left rotation at the node letter in
position ``p`` turns ``A B C o o`` into ``A B o C o``; a right rotation does
the reverse.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import CapacityGuard, NotComparable, SizeMismatch
from .reversing import double_reverse, reverse_right
from .tamari import catalan, covering_of, enumerate_polish, leq
from .trees import LEAF_CHAR, NODE_CHAR, Tree, mirror, polish_decode, polish_encode, zigzag
from .words import Letter, Word, a_length, act, inverse, weight1

__all__ = [
    "left_neighbors", "right_neighbors", "rotation_neighbors", "dist",
    "dist_plus", "diameter", "length_lower_bound", "WitnessFamily",
    "witness_family", "zigzag_pair", "sharp_word", "ratio_experiment",
    "zigzag_experiment", "sharp_experiment", "DEFAULT_DIST_CAP",
    "DEFAULT_DIAMETER_CAP", "diameter_table",
]

DEFAULT_DIST_CAP = 13
DEFAULT_DIAMETER_CAP = 10


def _starts(s: str) -> list[int]:
    """start[i]: first position of the subtree whose encoding ends at i."""
    start = [0] * len(s)
    stack: list[int] = []
    for i, c in enumerate(s):
        if c == LEAF_CHAR:
            start[i] = i
        else:
            stack.pop()
            start[i] = start[stack.pop()]
        stack.append(i)
    return start


def left_neighbors(s: str) -> list[str]:
    start = _starts(s)
    out = []
    for p, c in enumerate(s):
        if c == NODE_CHAR and s[p - 1] == NODE_CHAR:
            c0 = start[p - 2]
            out.append(s[:c0] + NODE_CHAR + s[c0:p - 1] + s[p:])
    return out


def right_neighbors(s: str) -> list[str]:
    start = _starts(s)
    out = []
    for p, c in enumerate(s):
        if c == NODE_CHAR:
            end_left = start[p - 1] - 1
            if s[end_left] == NODE_CHAR:
                out.append(s[:end_left] + s[end_left + 1:p] + NODE_CHAR + s[p:])
    return out


def rotation_neighbors(s: str) -> list[str]:
    return left_neighbors(s) + right_neighbors(s)


def _check(t: Tree, t2: Tree, cap: int | None) -> None:
    if t.size != t2.size:
        raise SizeMismatch(f"tree sizes differ: {t.size} vs {t2.size}")
    cap = DEFAULT_DIST_CAP if cap is None else cap
    if t.size > cap:
        raise CapacityGuard(f"size {t.size} exceeds the search cap {cap}")


def dist(t: Tree, t2: Tree, cap: int | None = None) -> int:
    """Rotation distance by bidirectional breadth-first search."""
    _check(t, t2, cap)
    a, b = polish_encode(t), polish_encode(t2)
    if a == b:
        return 0
    seen_a, seen_b = {a: 0}, {b: 0}
    front_a, front_b = [a], [b]
    da = db = 0
    while front_a and front_b:
        if len(front_a) > len(front_b):
            front_a, front_b, seen_a, seen_b, da, db = front_b, front_a, seen_b, seen_a, db, da
        da += 1
        nxt = []
        for s in front_a:
            for x in rotation_neighbors(s):
                if x in seen_a:
                    continue
                if x in seen_b:
                    return da + seen_b[x]
                seen_a[x] = da
                nxt.append(x)
        front_a = nxt
    raise AssertionError("rotation graph is connected")  # pragma: no cover


def dist_plus(t: Tree, t2: Tree, cap: int | None = None) -> int:
    """Least number of left rotations from T to T' (requires T ≤ T')."""
    _check(t, t2, cap)
    if not leq(t, t2):
        raise NotComparable("dist_plus needs the first tree below the second")
    target = polish_encode(t2)
    bound = covering_of(t2)
    front, seen, d = [polish_encode(t)], {polish_encode(t)}, 0
    while front:
        if target in seen:
            return d
        d += 1
        nxt = []
        for s in front:
            for x in left_neighbors(s):
                if x not in seen and covering_of(polish_decode(x)) <= bound:
                    seen.add(x)
                    nxt.append(x)
        front = nxt
    raise AssertionError("target unreachable")  # pragma: no cover


def _adjacency(n: int) -> np.ndarray:
    words = enumerate_polish(n, cap=max(n, DEFAULT_DIAMETER_CAP))
    index = {w: i for i, w in enumerate(words)}
    adj = np.empty((len(words), max(n - 1, 0)), dtype=np.int64)
    for i, w in enumerate(words):
        nbrs = rotation_neighbors(w)
        adj[i, :] = [index[x] for x in nbrs]
    return adj


def diameter(n: int, cap: int | None = None) -> int:
    """Diameter of the rotation graph of size-n trees.

    All sources are searched at once: row ``v`` of a packed bit matrix holds
    the set of sources within the current radius of ``v``.
    """
    cap = DEFAULT_DIAMETER_CAP if cap is None else cap
    if n > cap:
        raise CapacityGuard(f"size {n} exceeds the diameter cap {cap}")
    if n <= 1:
        return 0
    adj = _adjacency(n)
    count = adj.shape[0]
    words = (count + 63) // 64
    reach = np.zeros((count, words), dtype=np.uint64)
    ids = np.arange(count)
    reach[ids, ids // 64] = np.left_shift(np.uint64(1), (ids % 64).astype(np.uint64))
    full = np.zeros(words, dtype=np.uint64)
    full[:] = np.uint64(0xFFFFFFFFFFFFFFFF)
    if count % 64:
        full[-1] = np.uint64((1 << (count % 64)) - 1)
    radius = 0
    while not np.all(reach == full):
        new = reach.copy()
        for k in range(adj.shape[1]):
            new |= reach[adj[:, k]]
        reach = new
        radius += 1
    return radius


def length_lower_bound(w: Word) -> int:
    """weight1(N_er) + weight1(D_er): a lower bound on the length of w's element."""
    res = double_reverse(w)
    return weight1(res.numerator) + weight1(res.denominator)


# -- families ----------------------------------------------------------------

@dataclass(frozen=True)
class WitnessFamily:
    p: int
    u: Word
    w: Word
    tree: Tree
    target: Tree
    witness: Word = field(repr=False)


def witness_family(p: int) -> WitnessFamily:
    """u_p = â_{(10)^p,1} â_{(10)^{p-1},2} ... â_{∅,p+1} and its short route.

    ``w`` reverses to ``u · â_{∅,p}^-1``, so ``w · â_{∅,p}`` represents u_p
    with 3p+1 letters.  ``tree`` is the size 2p+2 zigzag ⟨(10)^p 1 1⟩ and
    ``target = tree * u = ⟨0^{p+1} 1^{p+1}⟩``.
    """
    if p < 1:
        raise ValueError("p must be at least 1")
    u = tuple(Letter("10" * (p - k), k + 1) for k in range(p + 1))
    w = [Letter("10" * p)]
    for k in range(p - 1, -1, -1):
        w += [Letter("10" * k + "1", 1, -1), Letter("10" * k)]
    w = tuple(w)
    witness = w + tuple(Letter("0" * k) for k in range(p))
    return WitnessFamily(p, u, w, zigzag("10" * p + "11"), zigzag("0" * (p + 1) + "1" * (p + 1)), witness)


def zigzag_pair(n: int) -> tuple[Tree, Tree]:
    """Z_n = ⟨111(01)^k⟩ or ⟨111(01)^k 0⟩ and its mirror image Z'_n, of size n."""
    if n < 3:
        raise ValueError("zigzag trees need n >= 3")
    k, extra = divmod(n - 3, 2)
    alpha = "111" + "01" * k + "0" * extra
    z = zigzag(alpha)
    return z, mirror(z)


def sharp_word(p: int, q: int) -> Word:
    """(a_{1^{p-1}} ... a_1 a_∅)^-1 a_{1^p}^q."""
    prefix = tuple(Letter("1" * k) for k in range(p - 1, -1, -1))
    return inverse(prefix) + (Letter("1" * p),) * q


# -- experiment reports ------------------------------------------------------

def ratio_experiment(p: int, cap: int | None = None) -> dict:
    fam = witness_family(p)
    n = fam.tree.size
    d = dist(fam.tree, fam.target, cap)
    dp = dist_plus(fam.tree, fam.target, cap)
    witness_ok = act(fam.tree, fam.witness) == fam.target
    return {
        "p": p,
        "size": n,
        "tree": polish_encode(fam.tree),
        "target": polish_encode(fam.target),
        "dist": d,
        "dist_plus": dp,
        "u_length": a_length(fam.u),
        "expected_dist_plus": (p + 1) * (p + 2) // 2,
        "witness_length": len(fam.witness),
        "witness_ok": witness_ok,
        "ratio_bound_ok": d * n <= 12 * dp,
    }


def zigzag_experiment(n: int, cap: int | None = None) -> dict:
    z, z2 = zigzag_pair(n)
    d = dist(z, z2, cap)
    return {
        "n": n,
        "z": polish_encode(z),
        "z_prime": polish_encode(z2),
        "dist": d,
        "predicted": 2 * n - 6,
        "match": d == 2 * n - 6,
    }


def sharp_experiment(p: int, q: int) -> dict:
    w = sharp_word(p, q)
    res = reverse_right(w)
    return {
        "p": p,
        "q": q,
        "numerator_length": a_length(res.numerator),
        "denominator_length": a_length(res.denominator),
        "total": res.a_length,
        "bound": p + q + p * q,
        "steps": res.steps,
    }


def diameter_table(sizes, cap: int | None = None) -> list[dict]:
    rows = []
    for n in sizes:
        d = diameter(n, cap)
        rows.append({
            "n": n,
            "trees": catalan(n),
            "diameter": d,
            "two_n_minus_6": 2 * n - 6,
            "lower_bound": round(2 * n - math.sqrt(70 * n), 3),
        })
    return rows

