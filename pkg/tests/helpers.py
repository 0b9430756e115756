"""Random generators and brute-force oracles shared by the test modules."""

from __future__ import annotations

import random
from collections import deque

from tamarisym.trees import LEAF, Tree, polish_decode, skeleton, substitute
from tamarisym.words import Letter, rotate_left, rotate_right


def random_tree(n: int, rng: random.Random) -> Tree:
    """Uniform size-n tree via the cycle lemma on a shuffled Polish word."""
    letters = ["x"] * (n + 1) + ["o"] * n
    rng.shuffle(letters)
    excess, best, cut = 0, None, 0
    for i, c in enumerate(letters):
        excess += 1 if c == "x" else -1
        if best is None or excess <= best:
            best, cut = excess, i + 1
    return polish_decode("".join(letters[cut:] + letters[:cut]))


def random_instance(base: Tree, rng: random.Random) -> Tree:
    """Substitute small random trees for the leaves of ``base``."""
    sigma = {i: random_tree(rng.randint(0, 3), rng) for i in range(base.size + 1)}
    return substitute(base, sigma)


def random_letter(rng: random.Random, max_addr: int = 3, max_r: int = 3) -> Letter:
    k = rng.randint(0, max_addr)
    addr = "".join(rng.choice("01") for _ in range(k))
    return Letter(addr, rng.randint(1, max_r), rng.choice((1, -1)))


def random_word(rng: random.Random, length: int, max_addr: int = 3, max_r: int = 3):
    return tuple(random_letter(rng, max_addr, max_r) for _ in range(length))


def random_positive_word(rng: random.Random, length: int, max_addr: int = 3, max_r: int = 1):
    return tuple(Letter(x.addr, x.r, 1) for x in random_word(rng, length, max_addr, max_r))


def random_walk(t: Tree, steps: int, rng: random.Random, positive: bool = False):
    """A plain-letter word acting on ``t`` along a random rotation walk."""
    word = []
    for _ in range(steps):
        moves = []
        for alpha in skeleton(t):
            if rotate_left(t, alpha) is not None:
                moves.append(Letter(alpha))
            if not positive and rotate_right(t, alpha) is not None:
                moves.append(Letter(alpha, 1, -1))
        if not moves:
            break
        x = rng.choice(moves)
        t = rotate_left(t, x.addr) if x.sign > 0 else rotate_right(t, x.addr)
        word.append(x)
    return tuple(word), t


def up_set(t: Tree) -> set[Tree]:
    """All trees reachable from ``t`` by left rotations (including ``t``)."""
    seen = {t}
    queue = deque([t])
    while queue:
        s = queue.popleft()
        for alpha in skeleton(s):
            u = rotate_left(s, alpha)
            if u is not None and u not in seen:
                seen.add(u)
                queue.append(u)
    return seen


def rotation_dist_iddfs(t: Tree, t2: Tree, limit: int = 12) -> int:
    """Shortest rotation sequence by iterative deepening over tree rotations."""
    def neighbours(s):
        for alpha in skeleton(s):
            for f in (rotate_left, rotate_right):
                u = f(s, alpha)
                if u is not None:
                    yield u

    def dfs(s, depth, path):
        if s == t2:
            return True
        if depth == 0:
            return False
        for u in neighbours(s):
            if u not in path:
                path.add(u)
                if dfs(u, depth - 1, path):
                    return True
                path.discard(u)
        return False

    for depth in range(limit + 1):
        if dfs(t, depth, {t}):
            return depth
    raise AssertionError("distance above the search limit")


__all__ = [
    "LEAF", "random_tree", "random_instance", "random_letter", "random_word", "random_positive_word",
    "random_walk", "up_set", "rotation_dist_iddfs",
]
