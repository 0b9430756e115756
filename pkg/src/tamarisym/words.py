"""Generators a_α, iterated generators â_{α,r}, signed words and their action.

A :class:`Letter` ``Letter(addr, r, sign)`` stands for ``â_{addr,r}^{sign}``;
``r == 1`` is the plain generator ``a_addr``.  A word is a tuple of letters.

Text syntax, whitespace separated::

    a[10]      a_{10}
    a[,3]      â_{ε,3}
    a[01,2]'   â_{01,2}^{-1}
    x3         x_3 = a_{111}

The empty word is written ``ε`` (``e`` is accepted on input).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ParseError, UndefinedAction
from .trees import Address, Tree, mirror_address, orthogonal, replace_at, subtree_at

__all__ = [
    "Letter", "Word", "a", "hat", "parse_word", "format_word", "inverse",
    "expand", "a_length", "shift", "mirror_word", "act", "try_act",
    "weight1", "x_to_a", "a_to_x", "relation_instances", "is_positive",
]


@dataclass(frozen=True, slots=True)
class Letter:
    addr: Address
    r: int = 1
    sign: int = 1

    def __post_init__(self):
        if self.r < 1 or self.sign not in (1, -1):
            raise ValueError(f"bad letter {self.addr!r}, r={self.r}, sign={self.sign}")
        if set(self.addr) - {"0", "1"}:
            raise ValueError(f"bad address {self.addr!r}")

    @property
    def positive(self) -> Letter:
        return self if self.sign == 1 else Letter(self.addr, self.r, 1)

    def inverse(self) -> Letter:
        return Letter(self.addr, self.r, -self.sign)

    def __str__(self) -> str:
        body = self.addr if self.r == 1 else f"{self.addr},{self.r}"
        return f"a[{body}]" + ("'" if self.sign < 0 else "")


Word = tuple  # tuple[Letter, ...]


def a(addr: Address = "", sign: int = 1) -> Letter:
    return Letter(addr, 1, sign)


def hat(addr: Address, r: int, sign: int = 1) -> Letter:
    return Letter(addr, r, sign)


_TOKEN = re.compile(r"^a\[([01]*)(?:,(\d+))?\]('?)$|^x(\d+)('?)$")


def parse_word(text: str) -> Word:
    out = []
    for tok in text.replace("⁻¹", "'").split():
        if tok in ("ε", "e"):
            continue
        m = _TOKEN.match(tok)
        if not m:
            raise ParseError(f"bad word token {tok!r}")
        if m.group(4) is not None:
            out.append(Letter("1" * int(m.group(4)), 1, -1 if m.group(5) else 1))
        else:
            r = int(m.group(2)) if m.group(2) else 1
            if r < 1:
                raise ParseError(f"bad hat index in {tok!r}")
            out.append(Letter(m.group(1), r, -1 if m.group(3) else 1))
    return tuple(out)


def format_word(w: Sequence[Letter]) -> str:
    return " ".join(str(x) for x in w) if w else "ε"


def word_to_json(w: Sequence[Letter]) -> list[dict]:
    return [{"addr": x.addr, "r": x.r, "sign": x.sign} for x in w]


def word_from_json(data) -> Word:
    if isinstance(data, str):
        data = json.loads(data)
    try:
        return tuple(Letter(d["addr"], int(d.get("r", 1)), int(d.get("sign", 1))) for d in data)
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad word JSON: {exc}") from exc


def inverse(w: Sequence[Letter]) -> Word:
    return tuple(x.inverse() for x in reversed(w))


def is_positive(w: Iterable[Letter]) -> bool:
    return all(x.sign > 0 for x in w)


def expand_letter(x: Letter) -> Word:
    plain = tuple(Letter(x.addr + "0" * k) for k in range(x.r))
    return plain if x.sign > 0 else inverse(plain)


def expand(w: Sequence[Letter]) -> Word:
    """Rewrite every â_{α,r} as a_α a_{α0} ... a_{α0^{r-1}}."""
    out: list[Letter] = []
    for x in w:
        if x.r == 1:
            out.append(x)
        else:
            out.extend(expand_letter(x))
    return tuple(out)


def a_length(w: Iterable[Letter]) -> int:
    return sum(x.r for x in w)


def sign_profile(w: Iterable[Letter]) -> tuple[int, int]:
    """(positive, negative) letter counts of the given word as written."""
    p = q = 0
    for x in w:
        if x.sign > 0:
            p += 1
        else:
            q += 1
    return p, q


def shift(w: Sequence[Letter], alpha: Address) -> Word:
    return tuple(Letter(alpha + x.addr, x.r, x.sign) for x in w)


def mirror_word(w: Sequence[Letter]) -> Word:
    """w̃: read right to left and exchange 0 and 1 (plain letters only)."""
    if any(x.r != 1 for x in w):
        w = expand(w)
    return tuple(Letter(mirror_address(x.addr), 1, x.sign) for x in reversed(w))


def weight1(w: Sequence[Letter]) -> int:
    """Number of expanded letters whose address lies in {1}*."""
    n = 0
    for x in w:
        if "0" not in x.addr:
            # only the first letter a_α of an expansion can avoid a 0
            n += 1
    return n


# -- action on trees ---------------------------------------------------------

def rotate_left(t: Tree, alpha: Address) -> Tree | None:
    """T * a_α, or None when α10 is not in the skeleton."""
    try:
        sub = subtree_at(t, alpha)
    except KeyError:
        return None
    if sub.left is None or sub.right.left is None:
        return None
    r = sub.right
    return replace_at(t, alpha, Tree(Tree(sub.left, r.left), r.right))


def rotate_right(t: Tree, alpha: Address) -> Tree | None:
    """T * a_α^{-1}, or None when α01 is not in the skeleton."""
    try:
        sub = subtree_at(t, alpha)
    except KeyError:
        return None
    if sub.left is None or sub.left.left is None:
        return None
    l = sub.left
    return replace_at(t, alpha, Tree(l.left, Tree(l.right, sub.right)))


def _hat_rotate(sub: Tree, r: int) -> Tree | None:
    # T0 ∧ ((..(T1 ∧ T2) ∧ ..) ∧ T_{r+1})  ->  ((..(T0 ∧ T1) ∧ T2) ..) ∧ T_{r+1}
    if sub.left is None:
        return None
    cur = sub.right
    rights = []
    for _ in range(r):
        if cur.left is None:
            return None
        rights.append(cur.right)
        cur = cur.left
    acc = Tree(sub.left, cur)
    for piece in reversed(rights):
        acc = Tree(acc, piece)
    return acc


def act_letter(t: Tree, x: Letter) -> Tree | None:
    if x.sign > 0:
        if x.r == 1:
            return rotate_left(t, x.addr)
        try:
            sub = subtree_at(t, x.addr)
        except KeyError:
            return None
        new = _hat_rotate(sub, x.r)
        return None if new is None else replace_at(t, x.addr, new)
    for k in reversed(range(x.r)):
        t = rotate_right(t, x.addr + "0" * k)
        if t is None:
            return None
    return t


def try_act(t: Tree, w: Iterable[Letter]) -> Tree | None:
    for x in w:
        t = act_letter(t, x)
        if t is None:
            return None
    return t


def act(t: Tree, w: Iterable[Letter]) -> Tree:
    """Letterwise action T * w; raises UndefinedAction at the first failure."""
    for i, x in enumerate(w):
        nxt = act_letter(t, x)
        if nxt is None:
            raise UndefinedAction(f"letter #{i} ({x}) does not act on {t}", prefix_length=i)
        t = nxt
    return t


# -- x_i generators ----------------------------------------------------------

XWord = tuple  # tuple[tuple[int, int], ...]: (index, sign)


def x_to_a(xw: Iterable[tuple[int, int]], base: int = 0) -> Word:
    """Translate x-letters using x_i = a_{1^(i - base)}."""
    out = []
    for i, sign in xw:
        if i < base:
            raise ValueError(f"x_{i} undefined with base {base}")
        out.append(Letter("1" * (i - base), 1, sign))
    return tuple(out)


def _free_reduce(xw: list[tuple[int, int]]) -> list[tuple[int, int]]:
    out: list[tuple[int, int]] = []
    for letter in xw:
        if out and out[-1][0] == letter[0] and out[-1][1] == -letter[1]:
            out.pop()
        else:
            out.append(letter)
    return out


def a_to_x(alpha: Address, base: int = 0) -> XWord:
    """Express a_α in the x-generators (x_i = a_{1^(i - base)}).

    For α = 1^i 0^{1+i_0} 1 0^{i_1} ... 1 0^{i_m}:
    a_α = g^-1 x_{i+m+1}^-1 x_{i+m} g with
    g = x_{i+m}^{i_m+1} ... x_{i+1}^{i_1+1} x_i^{i_0+1} (indices for base 0).
    """
    i = len(alpha) - len(alpha.lstrip("1"))
    rest = alpha[i:]
    if not rest:
        return ((i + base, 1),)
    blocks = rest.split("1")
    m = len(blocks) - 1
    exps = [len(blocks[0])] + [len(b) + 1 for b in blocks[1:]]
    g: list[tuple[int, int]] = []
    for k in reversed(range(m + 1)):
        g.extend([(i + k + base, 1)] * exps[k])
    g_inv = [(j, -s) for j, s in reversed(g)]
    core = [(i + m + 1 + base, -1), (i + m + base, 1)]
    return tuple(_free_reduce(g_inv + core + g))


def format_xword(xw: Iterable[tuple[int, int]]) -> str:
    toks = [f"x{i}" + ("'" if s < 0 else "") for i, s in xw]
    return " ".join(toks) if toks else "ε"


def parse_xword(text: str) -> XWord:
    out = []
    for tok in text.split():
        m = re.fullmatch(r"x(\d+)('?)", tok)
        if not m:
            raise ParseError(f"bad x-token {tok!r}")
        out.append((int(m.group(1)), -1 if m.group(2) else 1))
    return tuple(out)


# -- relations ---------------------------------------------------------------

def _addresses(max_len: int) -> list[Address]:
    out = [""]
    frontier = [""]
    for _ in range(max_len):
        frontier = [p + b for p in frontier for b in "01"]
        out.extend(frontier)
    return out


def relation_instances(max_len: int) -> list[tuple[Word, Word]]:
    """All relations of the presentation whose addresses have length <= max_len.

    Commutations a_α a_β = a_β a_α (α ⊥ β, each unordered pair once),
    the three quasi-commutations and the pentagon a_α² = a_{α1} a_α a_{α0}.
    """
    addrs = _addresses(max_len)
    rels: list[tuple[Word, Word]] = []
    for idx, x in enumerate(addrs):
        for y in addrs[idx + 1:]:
            if orthogonal(x, y):
                rels.append(((a(x), a(y)), (a(y), a(x))))
    for alpha in addrs:
        for beta in addrs:
            if len(alpha) + len(beta) + 2 <= max_len:
                rels.append(((a(alpha + "11" + beta), a(alpha)), (a(alpha), a(alpha + "1" + beta))))
                rels.append(((a(alpha + "10" + beta), a(alpha)), (a(alpha), a(alpha + "01" + beta))))
            if len(alpha) + len(beta) + 2 <= max_len:
                rels.append(((a(alpha + "0" + beta), a(alpha)), (a(alpha), a(alpha + "00" + beta))))
        if len(alpha) + 1 <= max_len:
            rels.append(((a(alpha), a(alpha)), (a(alpha + "1"), a(alpha), a(alpha + "0"))))
    return rels
