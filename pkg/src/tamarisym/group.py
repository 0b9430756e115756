"""Thompson's group F as reduced tree pairs, and dyadic piecewise-linear maps.

An element ``f`` is stored as ``(neg, pos)``: a tree ``T`` acts by ``f`` when
``T = neg^σ`` for some substitution ``σ``, and then ``T * f = pos^σ``.
Products read left to right: ``fg`` is ``f`` followed by ``g``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

from .errors import ParseError, SizeMismatch, UndefinedAction
from .trees import LEAF, Tree, match, mu, polish_decode, polish_encode, substitute, to_text, unify, zigzag
from .words import Letter, act_letter

__all__ = [
    "GroupElement", "IDENTITY", "reduce_pair", "multiply", "letter_element",
    "eval_word", "act_element", "lambda_of", "lambda_word", "DyadicPLMap",
    "to_pl_map", "pl_eval", "compose", "format_dyadic", "parse_dyadic",
]


@dataclass(frozen=True)
class GroupElement:
    neg: Tree
    pos: Tree

    def inverse(self) -> GroupElement:
        return GroupElement(self.pos, self.neg)

    def __mul__(self, other: GroupElement) -> GroupElement:
        return multiply(self, other)

    @property
    def is_identity(self) -> bool:
        return self.neg.size == 0

    def __str__(self) -> str:
        return f"[{to_text(self.neg)} -> {to_text(self.pos)}]"

    def to_dict(self) -> dict:
        return {"neg": polish_encode(self.neg), "pos": polish_encode(self.pos)}

    @classmethod
    def from_dict(cls, data: dict) -> GroupElement:
        try:
            return reduce_pair(polish_decode(data["neg"]), polish_decode(data["pos"]))
        except (KeyError, TypeError) as exc:
            raise ParseError(f"bad element {data!r}") from exc


IDENTITY = GroupElement(LEAF, LEAF)


def _carets(t: Tree) -> set[int]:
    """Indices i such that leaves i and i+1 hang from a common node."""
    out: set[int] = set()
    counter = 0

    def walk(s: Tree) -> None:
        nonlocal counter
        if s.left is None:
            counter += 1
        elif s.left.left is None and s.right.left is None:
            out.add(counter)
            counter += 2
        else:
            walk(s.left)
            walk(s.right)

    walk(t)
    return out


def _collapse(t: Tree, idx: set[int]) -> Tree:
    counter = 0

    def walk(s: Tree) -> Tree:
        nonlocal counter
        if s.left is None:
            counter += 1
            return s
        if s.left.left is None and s.right.left is None and counter in idx:
            counter += 2
            return LEAF
        left = walk(s.left)
        return Tree(left, walk(s.right))

    return walk(t)


def reduce_pair(t: Tree, t2: Tree) -> GroupElement:
    """Collapse carets common to both trees until none is left."""
    if t.size != t2.size:
        raise SizeMismatch(f"tree sizes differ: {t.size} vs {t2.size}")
    while True:
        common = _carets(t) & _carets(t2)
        if not common:
            return GroupElement(t, t2)
        t, t2 = _collapse(t, common), _collapse(t2, common)


def multiply(f: GroupElement, g: GroupElement) -> GroupElement:
    _, sigma, tau = unify(f.pos, g.neg)
    return reduce_pair(substitute(f.neg, sigma), substitute(g.pos, tau))


def letter_element(x: Letter) -> GroupElement:
    frame = zigzag(x.addr + "1" + "0" * x.r)
    image = act_letter(frame, x.positive)
    elem = reduce_pair(frame, image)
    return elem if x.sign > 0 else elem.inverse()


def eval_word(w: Iterable[Letter]) -> GroupElement:
    return reduce(multiply, (letter_element(x) for x in w), IDENTITY)


def act_element(t: Tree, f: GroupElement) -> Tree:
    sigma = match(f.neg, t)
    if sigma is None:
        raise UndefinedAction(f"{to_text(t)} is not an instance of {to_text(f.neg)}")
    return substitute(f.pos, sigma)


def lambda_of(f: GroupElement) -> int:
    return mu(f.pos) - mu(f.neg)


def lambda_word(w: Iterable[Letter]) -> int:
    return lambda_of(eval_word(w))


# -- dyadic piecewise-linear maps --------------------------------------------

def format_dyadic(q: Fraction) -> str:
    e = q.denominator.bit_length() - 1
    return f"{q.numerator}/2^{e}"


def parse_dyadic(text: str) -> Fraction:
    try:
        if "/2^" in text:
            k, e = text.split("/2^")
            return Fraction(int(k), 2 ** int(e))
        return Fraction(text)
    except ValueError as exc:
        raise ParseError(f"bad dyadic {text!r}") from exc


@dataclass(frozen=True)
class DyadicPLMap:
    """Increasing PL homeomorphism of [0,1] given by its breakpoints."""

    points: tuple[tuple[Fraction, Fraction], ...]

    def __call__(self, t: Fraction) -> Fraction:
        return pl_eval(self, t)

    def slopes(self) -> list[Fraction]:
        return [(y1 - y0) / (x1 - x0) for (x0, y0), (x1, y1) in zip(self.points, self.points[1:])]

    def inverse(self) -> DyadicPLMap:
        return DyadicPLMap(tuple((y, x) for x, y in self.points))

    def to_json(self) -> list[list[str]]:
        return [[format_dyadic(x), format_dyadic(y)] for x, y in self.points]


def _normalize(points: Sequence[tuple[Fraction, Fraction]]) -> DyadicPLMap:
    pts = sorted(set(points))
    out = [pts[0]]
    for k in range(1, len(pts) - 1):
        (x0, y0), (x1, y1), (x2, y2) = out[-1], pts[k], pts[k + 1]
        if (y1 - y0) * (x2 - x1) != (y2 - y1) * (x1 - x0):
            out.append(pts[k])
    out.append(pts[-1])
    return DyadicPLMap(tuple(out))


def _breakpoints(t: Tree) -> list[Fraction]:
    out = [Fraction(0)]

    def walk(s: Tree, lo: Fraction, hi: Fraction) -> None:
        if s.left is None:
            out.append(hi)
            return
        mid = (lo + hi) / 2
        walk(s.left, lo, mid)
        walk(s.right, mid, hi)

    walk(t, Fraction(0), Fraction(1))
    return out


def to_pl_map(f: GroupElement) -> DyadicPLMap:
    return _normalize(list(zip(_breakpoints(f.neg), _breakpoints(f.pos))))


def pl_eval(m: DyadicPLMap, t: Fraction) -> Fraction:
    t = Fraction(t)
    if not 0 <= t <= 1:
        raise ValueError(f"{t} outside [0,1]")
    pts = m.points
    for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
        if x0 <= t <= x1:
            return y0 + (t - x0) * (y1 - y0) / (x1 - x0)
    raise ValueError("malformed map")  # pragma: no cover


def compose(m1: DyadicPLMap, m2: DyadicPLMap) -> DyadicPLMap:
    """``m1`` followed by ``m2``."""
    inv = m1.inverse()
    xs = {x for x, _ in m1.points} | {pl_eval(inv, x) for x, _ in m2.points}
    return _normalize([(x, pl_eval(m2, pl_eval(m1, x))) for x in xs])
