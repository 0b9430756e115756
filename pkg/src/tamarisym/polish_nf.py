"""The Polish algorithm and the Polish normal form of elements of F.

Given two trees of the same size, compare their Polish encodings with the
leaf letter smaller than the node letter.  At the first difference (the
*clash*) exactly one iterated rotation applied to the lexicographically
smaller tree removes the clash; iterating on whichever side is smaller
yields a word ``S(T, T')`` made of a positive block followed by a negative
block.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalInvariantViolation, SizeMismatch
from .group import GroupElement
from .trees import LEAF_CHAR, Address, Tree, left_of, origins, polish_encode
from .words import Letter, Word, act_letter, inverse

__all__ = ["Clash", "clash", "polish_step", "polish_run", "normal_form", "is_normal", "step_from_origin"]


@dataclass(frozen=True)
class Clash:
    position: int  # 1-based
    smaller: int  # 0 if the first tree is lexicographically smaller, else 1
    leaf_origin: Address


def _common_prefix(s: str, s2: str) -> int:
    k = 0
    while k < len(s) and s[k] == s2[k]:
        k += 1
    return k


def clash(t: Tree, t2: Tree) -> Clash | None:
    if t.size != t2.size:
        raise SizeMismatch(f"tree sizes differ: {t.size} vs {t2.size}")
    s, s2 = polish_encode(t), polish_encode(t2)
    k = _common_prefix(s, s2)
    if k == len(s):
        return None
    smaller = 0 if s[k] == LEAF_CHAR else 1
    origin = origins(t if smaller == 0 else t2)[k]
    return Clash(k + 1, smaller, origin)


def step_from_origin(delta: Address) -> Letter:
    """â_{α,j+1} for a clash leaf origin δ = α 1 0^j 1 0^m."""
    body = delta.rstrip("0")
    if not body.endswith("1"):
        raise InternalInvariantViolation(f"clash origin {delta!r} has no 1 bit")
    body = body[:-1]
    stem = body.rstrip("0")
    j = len(body) - len(stem)
    if not stem.endswith("1"):
        raise InternalInvariantViolation(f"clash origin {delta!r} has a single 1 bit")
    return Letter(stem[:-1], j + 1)


def polish_step(t: Tree, t2: Tree) -> Letter:
    """The unique â_{α,r} such that T * â_{α,r} no longer clashes with T' there."""
    c = clash(t, t2)
    if c is None or c.smaller != 0:
        raise InternalInvariantViolation("polish_step needs the first tree to be lexicographically smaller")
    return step_from_origin(c.leaf_origin)


def polish_run(t: Tree, t2: Tree) -> Word:
    """S(T, T'): positive letters moving T, then inverted letters moving T'."""
    if t.size != t2.size:
        raise SizeMismatch(f"tree sizes differ: {t.size} vs {t2.size}")
    pos: list[Letter] = []
    neg: list[Letter] = []
    while True:
        c = clash(t, t2)
        if c is None:
            break
        x = step_from_origin(c.leaf_origin)
        if c.smaller == 0:
            t = act_letter(t, x)
            pos.append(x)
        else:
            t2 = act_letter(t2, x)
            neg.append(x)
        if t is None or t2 is None:
            raise InternalInvariantViolation(f"Polish step {x} is not defined")
    return tuple(pos) + inverse(neg)


def normal_form(f: GroupElement) -> Word:
    return polish_run(f.neg, f.pos)


def is_normal(w: Word) -> bool:
    """Local criterion α_t 0^{r_t} < α_{t+1} 1 0^{r_{t+1}-1} 1.

    The comparison is the partial left-right order: addresses related by a
    prefix are incomparable, so such a pair makes the word non-normal.
    """
    if any(x.sign < 0 for x in w):
        raise ValueError("is_normal expects a positive word")
    for x, y in zip(w, w[1:]):
        if not left_of(x.addr + "0" * x.r, y.addr + "1" + "0" * (y.r - 1) + "1"):
            return False
    return True
