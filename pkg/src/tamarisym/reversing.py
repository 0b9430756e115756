"""Right and left subword reversing over the Thompson presentation.

Right reversing rewrites ``b^-1 a`` into ``v u^-1`` whenever ``a v = b u`` is a
relation, pushing negative letters to the right.  The engine works on
iterated letters â_{α,r}, for which every pair ``b^-1 a`` reverses to a word
with at most one positive and one negative letter; this keeps the
computation a finite grid.

Left reversing is obtained from right reversing through the mirror map
``w -> w̃`` (reverse the word and exchange 0 and 1 in every address), which
maps the relation family onto itself.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import InternalInvariantViolation
from .words import Letter, Word, a_length, expand, inverse, mirror_word

__all__ = [
    "ReversalOutcome", "relation_right", "reverse_right", "reverse_left",
    "double_reverse", "right_lcm", "left_gcd", "cube_check",
    "reverse_right_rewriting", "Lcm",
]


@dataclass(frozen=True)
class ReversalOutcome:
    """For right reversing ``w ⟶ numerator · denominator^-1``; for left
    reversing ``w ⟶ denominator^-1 · numerator``."""

    numerator: Word
    denominator: Word
    steps: int = 0

    @property
    def a_length(self) -> int:
        return a_length(self.numerator) + a_length(self.denominator)

    def as_word(self, side: str = "right") -> Word:
        if side == "right":
            return tuple(self.numerator) + inverse(self.denominator)
        return inverse(self.denominator) + tuple(self.numerator)


def _h(addr: str, r: int) -> tuple[Letter, ...]:
    return (Letter(addr, r, 1),)


def relation_right(b: Letter, a: Letter) -> tuple[Word, Word]:
    """Reverse ``b^-1 a`` (both positive) into ``num · den^-1``.

    The pair satisfies ``b · num ≡ a · den``; each component is empty or a
    single iterated letter.
    """
    beta, s = b.addr, b.r
    alpha, r = a.addr, a.r
    if beta == alpha:
        if r == s:
            return (), ()
        if r > s:
            return _h(alpha + "0" * s, r - s), ()
        return (), _h(alpha + "0" * r, s - r)
    if beta.startswith(alpha):
        rest = beta[len(alpha):]
        if rest[0] == "0":
            gamma = rest[1:]
            return _h(alpha, r), _h(alpha + "0" * (r + 1) + gamma, s)
        # rest = 1 0^i tail
        tail = rest[1:]
        i = len(tail) - len(tail.lstrip("0"))
        if i >= r:
            gamma = tail[r:]
            return _h(alpha, r), _h(alpha + "0" * r + "1" + gamma, s)
        if i < len(tail):
            gamma = tail[i + 1:]
            return _h(alpha, r), _h(alpha + "0" * i + "1" + gamma, s)
        return _h(alpha, r + s), _h(alpha + "0" * i, s)
    if alpha.startswith(beta):
        num, den = relation_right(a, b)
        return den, num
    return _h(alpha, r), _h(beta, s)


def _push(den: list[Letter], pos: list[Letter]) -> tuple[list[Letter], list[Letter], int]:
    """Reverse ``den^-1 · pos`` into ``pos' · den'^-1``."""
    steps = 0
    new_den: list[Letter] = []
    for d in den:
        cur: Letter | None = d
        out: list[Letter] = []
        for x in pos:
            if cur is None:
                out.append(x)
                continue
            num, dd = relation_right(cur, x)
            steps += 1
            out.extend(num)
            cur = dd[0] if dd else None
        pos = out
        if cur is not None:
            new_den.append(cur)
    return pos, new_den, steps


def reverse_right(w: Sequence[Letter]) -> ReversalOutcome:
    """Right reversing of a signed word over iterated letters."""
    num: list[Letter] = []
    den: list[Letter] = []
    steps = 0
    for x in w:
        if x.sign < 0:
            den.insert(0, x.positive)
        else:
            moved, den, k = _push(den, [x])
            num.extend(moved)
            steps += k
    return ReversalOutcome(tuple(num), tuple(den), steps)


def reverse_left(w: Sequence[Letter]) -> ReversalOutcome:
    """Left reversing ``w ⟶ D^-1 N``, returned over plain letters."""
    res = reverse_right(mirror_word(w))
    return ReversalOutcome(mirror_word(res.numerator), mirror_word(res.denominator), res.steps)


def double_reverse(w: Sequence[Letter]) -> ReversalOutcome:
    """Irreducible right fraction: right-reverse the left-reversed form."""
    left = reverse_left(w)
    res = reverse_right(inverse(left.denominator) + left.numerator)
    return ReversalOutcome(res.numerator, res.denominator, left.steps + res.steps)


@dataclass(frozen=True)
class Lcm:
    """``lcm ≡ u · u_complement ≡ v · v_complement``."""

    lcm: Word
    u_complement: Word
    v_complement: Word


def right_lcm(u: Sequence[Letter], v: Sequence[Letter]) -> Lcm:
    res = reverse_right(inverse(u) + tuple(v))
    return Lcm(tuple(u) + res.numerator, res.numerator, res.denominator)


def left_gcd(u: Sequence[Letter], v: Sequence[Letter]) -> Word:
    """Greatest common left divisor of two positive words.

    With ``u N = v D`` the right lcm, left reversing ``N D^-1`` gives
    ``X^-1 Y`` where ``X N = Y D`` is the left lcm of N and D; then
    ``u = g X`` and the gcd ``g`` is read off by left reversing ``u X^-1``.
    """
    lcm = right_lcm(u, v)
    split = reverse_left(lcm.u_complement + inverse(lcm.v_complement))
    res = reverse_left(tuple(u) + inverse(split.denominator))
    if res.denominator:
        raise InternalInvariantViolation("left complement does not right-divide u")
    return res.numerator


def cube_check(a: Letter, b: Letter, c: Letter) -> bool:
    """If a^-1 c c^-1 b ⟶ v u^-1 then v^-1 a^-1 b u ⟶ ε."""
    first = reverse_right((a.inverse(), c, c.inverse(), b))
    v, u = first.numerator, first.denominator
    second = reverse_right(inverse(v) + (a.inverse(), b) + tuple(u))
    return not second.numerator and not second.denominator


# -- rewriting engine (used as an independent check) -------------------------

def reverse_right_rewriting(
    w: Sequence[Letter],
    pick: Callable[[list[int]], int] | None = None,
    plain: bool = False,
    max_steps: int = 1_000_000,
    rng: random.Random | None = None,
) -> ReversalOutcome:
    """Reverse by repeatedly rewriting one ``b^-1 a`` factor.

    ``pick`` chooses among the candidate positions (default: leftmost);
    ``rng`` gives a uniformly random choice.  With ``plain`` the word and
    all intermediate results are kept over plain letters.
    """
    word = list(expand(w) if plain else w)
    steps = 0
    while True:
        spots = [i for i in range(len(word) - 1) if word[i].sign < 0 < word[i + 1].sign]
        if not spots:
            break
        if pick is not None:
            i = pick(spots)
        elif rng is not None:
            i = rng.choice(spots)
        else:
            i = spots[0]
        num, den = relation_right(word[i].positive, word[i + 1])
        repl = tuple(num) + inverse(den)
        word[i:i + 2] = expand(repl) if plain else repl
        steps += 1
        if steps > max_steps:
            raise InternalInvariantViolation("reversing exceeded the step budget")
    k = 0
    while k < len(word) and word[k].sign > 0:
        k += 1
    return ReversalOutcome(tuple(word[:k]), inverse(word[k:]), steps)
