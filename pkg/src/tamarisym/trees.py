"""Finite binary trees, addresses, Polish encodings and substitutions.

A tree is either the leaf ``LEAF`` or a node ``Tree(left, right)``.  Leaves
are implicitly labelled ``0..n`` from left to right, where ``n`` is the number
of internal nodes (the *size*).  Addresses are plain strings over ``"01"``;
the empty string is the root.

Text syntax: ``tree := "x" | "(" tree tree ")"``.  The parser is lenient and
also accepts the juxtaposition style ``x((xx)x)`` where the outer pair of
parentheses is omitted, and the bullet ``•`` in place of ``x``.
"""

from __future__ import annotations

import json
from typing import Iterator, Mapping

from .errors import IndexOutOfRange, MalformedPolish, ParseError, UndefinedSubtree

LEAF_CHAR = "x"
NODE_CHAR = "o"

Address = str
Substitution = Mapping[int, "Tree"]


# -- addresses ---------------------------------------------------------------

def is_prefix(alpha: Address, beta: Address) -> bool:
    """True if ``alpha`` is a (not necessarily proper) prefix of ``beta``."""
    return beta.startswith(alpha)


def orthogonal(alpha: Address, beta: Address) -> bool:
    """True if the two addresses fork: one begins with g0, the other with g1."""
    n = min(len(alpha), len(beta))
    return alpha[:n] != beta[:n]


def relation(alpha: Address, beta: Address) -> str:
    """Classify ``beta`` relative to ``alpha``.

    Returns one of ``"equal"``, ``"extends"`` (beta strictly extends alpha),
    ``"prefix"`` (beta is a proper prefix of alpha) or ``"orthogonal"``.
    """
    if alpha == beta:
        return "equal"
    if beta.startswith(alpha):
        return "extends"
    if alpha.startswith(beta):
        return "prefix"
    return "orthogonal"


def mirror_address(alpha: Address) -> Address:
    return alpha.translate(_SWAP01)


_SWAP01 = str.maketrans("01", "10")


def format_address(alpha: Address, empty: str = "ε") -> str:
    return alpha if alpha else empty


def parse_address(text: str) -> Address:
    text = text.strip()
    if text in ("", "e", "ε", "∅"):
        return ""
    if set(text) - {"0", "1"}:
        raise ParseError(f"bad address {text!r}")
    return text


def left_of(delta: Address, delta2: Address) -> bool:
    """Partial left-right order: the addresses fork with ``delta`` on the 0 side."""
    return orthogonal(delta, delta2) and delta < delta2


def postorder_less(delta: Address, delta2: Address) -> bool:
    """Strict left-right-root order: descendants precede ancestors."""
    if delta == delta2:
        return False
    if delta.startswith(delta2):
        return True
    if delta2.startswith(delta):
        return False
    n = 0
    while delta[n] == delta2[n]:
        n += 1
    return delta[n] == "0"


# -- trees -------------------------------------------------------------------

class Tree:
    """Immutable binary tree with structural equality."""

    __slots__ = ("left", "right", "size", "_hash")

    def __init__(self, left: Tree | None = None, right: Tree | None = None):
        if (left is None) != (right is None):
            raise ValueError("a node needs two children")
        self.left = left
        self.right = right
        self.size = 0 if left is None else left.size + right.size + 1
        self._hash = None

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    @property
    def leaf_count(self) -> int:
        return self.size + 1

    def __xor__(self, other: Tree) -> Tree:
        # T0 ^ T1 stands for T0 ∧ T1
        return Tree(self, other)

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, Tree) or self.size != other.size:
            return False
        if self.left is None:
            return other.left is None
        return self.left == other.left and self.right == other.right

    def __hash__(self) -> int:
        if self._hash is None:
            if self.left is None:
                self._hash = hash("leaf")
            else:
                self._hash = hash((self.left.__hash__(), self.right.__hash__()))
        return self._hash

    def __str__(self) -> str:
        return to_text(self)

    def __repr__(self) -> str:
        return f"Tree({to_text(self)!r})"


LEAF = Tree()


def node(left: Tree, right: Tree) -> Tree:
    return Tree(left, right)


def to_text(t: Tree) -> str:
    if t.left is None:
        return LEAF_CHAR
    return "(" + to_text(t.left) + to_text(t.right) + ")"


def parse_tree(text: str) -> Tree:
    """Parse ``x``, ``(x(xx))`` or the juxtaposition form ``x(xx)``."""
    s = "".join(text.split()).replace("•", LEAF_CHAR)
    if not s:
        raise ParseError("empty tree text")
    pos = 0

    def seq() -> Tree:
        nonlocal pos
        items = []
        while pos < len(s) and s[pos] != ")":
            c = s[pos]
            if c == LEAF_CHAR:
                pos += 1
                items.append(LEAF)
            elif c == "(":
                pos += 1
                items.append(seq())
                if pos >= len(s) or s[pos] != ")":
                    raise ParseError(f"unbalanced parentheses in {text!r}")
                pos += 1
            else:
                raise ParseError(f"unexpected character {c!r} in {text!r}")
        if len(items) == 1:
            return items[0]
        if len(items) == 2:
            return Tree(items[0], items[1])
        raise ParseError(f"cannot group {len(items)} subtrees in {text!r}")

    result = seq()
    if pos != len(s):
        raise ParseError(f"trailing input in {text!r}")
    return result


def subtree_at(t: Tree, alpha: Address) -> Tree:
    for i, bit in enumerate(alpha):
        if t.left is None:
            raise UndefinedSubtree(f"no {alpha or 'ε'}-subtree (stops at {alpha[:i] or 'ε'})")
        t = t.left if bit == "0" else t.right
    return t


def has_address(t: Tree, alpha: Address) -> bool:
    for bit in alpha:
        if t.left is None:
            return False
        t = t.left if bit == "0" else t.right
    return True


def replace_at(t: Tree, alpha: Address, new: Tree) -> Tree:
    """Return ``t`` with its ``alpha``-subtree replaced by ``new``."""
    if not alpha:
        return new
    if t.left is None:
        raise UndefinedSubtree(f"no {alpha}-subtree")
    if alpha[0] == "0":
        return Tree(replace_at(t.left, alpha[1:], new), t.right)
    return Tree(t.left, replace_at(t.right, alpha[1:], new))


def skeleton(t: Tree) -> set[Address]:
    out: set[Address] = set()

    def walk(s: Tree, a: Address) -> None:
        out.add(a)
        if s.left is not None:
            walk(s.left, a + "0")
            walk(s.right, a + "1")

    walk(t, "")
    return out


def leaf_addresses(t: Tree) -> list[Address]:
    """Addresses of the leaves in left-to-right order."""
    out: list[Address] = []

    def walk(s: Tree, a: Address) -> None:
        if s.left is None:
            out.append(a)
        else:
            walk(s.left, a + "0")
            walk(s.right, a + "1")

    walk(t, "")
    return out


def leaf_address(t: Tree, i: int) -> Address:
    if not 0 <= i <= t.size:
        raise IndexOutOfRange(f"leaf index {i} outside 0..{t.size}")
    return leaf_addresses(t)[i]


def origins(t: Tree) -> list[Address]:
    """Address generating each letter of the Polish encoding, in order."""
    out: list[Address] = []

    def walk(s: Tree, a: Address) -> None:
        if s.left is not None:
            walk(s.left, a + "0")
            walk(s.right, a + "1")
        out.append(a)

    walk(t, "")
    return out


def origin_of_position(t: Tree, k: int) -> Address:
    """Origin of the ``k``-th letter (1-based) of the Polish encoding."""
    if not 1 <= k <= 2 * t.size + 1:
        raise IndexOutOfRange(f"position {k} outside 1..{2 * t.size + 1}")
    return origins(t)[k - 1]


# -- Polish encoding ---------------------------------------------------------

def polish_encode(t: Tree) -> str:
    parts: list[str] = []

    def walk(s: Tree) -> None:
        if s.left is None:
            parts.append(LEAF_CHAR)
        else:
            walk(s.left)
            walk(s.right)
            parts.append(NODE_CHAR)

    walk(t)
    return "".join(parts)


def is_polish(word: str) -> bool:
    """Dyck-type test: every nonempty prefix has leaf excess >= 1, total 1."""
    excess = 0
    for c in word:
        if c == LEAF_CHAR:
            excess += 1
        elif c == NODE_CHAR:
            excess -= 1
        else:
            return False
        if excess < 1:
            return False
    return excess == 1


def polish_decode(word: str) -> Tree:
    w = word.strip().replace("•", LEAF_CHAR).replace("◦", NODE_CHAR)
    stack: list[Tree] = []
    for c in w:
        if c == LEAF_CHAR:
            stack.append(LEAF)
        elif c == NODE_CHAR:
            if len(stack) < 2:
                raise MalformedPolish(f"{word!r}: node letter without two operands")
            right = stack.pop()
            stack.append(Tree(stack.pop(), right))
        else:
            raise MalformedPolish(f"{word!r}: unexpected letter {c!r}")
    if len(stack) != 1:
        raise MalformedPolish(f"{word!r}: {len(stack)} trees left on the stack")
    return stack[0]


# -- families ----------------------------------------------------------------

def comb(n: int, side: str = "right") -> Tree:
    """Right comb C_n (Tamari bottom) or left comb (Tamari top)."""
    if side not in ("right", "left"):
        raise ValueError(f"side must be 'right' or 'left', not {side!r}")
    t = LEAF
    for _ in range(n):
        t = Tree(LEAF, t) if side == "right" else Tree(t, LEAF)
    return t


def zigzag(alpha: Address) -> Tree:
    """Tree ⟨alpha⟩: ⟨ε⟩ = x, ⟨0a⟩ = ⟨a⟩ ∧ x, ⟨1a⟩ = x ∧ ⟨a⟩."""
    t = LEAF
    for bit in reversed(alpha):
        t = Tree(t, LEAF) if bit == "0" else Tree(LEAF, t)
    return t


def mirror(t: Tree) -> Tree:
    if t.left is None:
        return t
    return Tree(mirror(t.right), mirror(t.left))


def mu(t: Tree) -> int:
    """Total number of 0 bits over all leaf addresses."""
    def walk(s: Tree, zeros: int) -> int:
        if s.left is None:
            return zeros
        return walk(s.left, zeros + 1) + walk(s.right, zeros)

    return walk(t, 0)


def leaves_below(t: Tree) -> Iterator[Tree]:
    if t.left is None:
        yield t
    else:
        yield from leaves_below(t.left)
        yield from leaves_below(t.right)


# -- substitutions -----------------------------------------------------------

def substitute(t: Tree, sigma: Substitution) -> Tree:
    """Replace leaf ``i`` of ``t`` by ``sigma[i]`` (missing keys mean a leaf)."""
    counter = 0

    def walk(s: Tree) -> Tree:
        nonlocal counter
        if s.left is None:
            i = counter
            counter += 1
            return sigma.get(i, LEAF)
        left = walk(s.left)
        return Tree(left, walk(s.right))

    return walk(t)


def match(pattern: Tree, t: Tree) -> dict[int, Tree] | None:
    """Substitution ``sigma`` with ``pattern^sigma == t``, or None.

    Only non-leaf images are recorded.
    """
    sigma: dict[int, Tree] = {}
    counter = 0

    def walk(p: Tree, s: Tree) -> bool:
        nonlocal counter
        if p.left is None:
            if s.left is not None:
                sigma[counter] = s
            counter += 1
            return True
        if s.left is None:
            return False
        return walk(p.left, s.left) and walk(p.right, s.right)

    return sigma if walk(pattern, t) else None


def unify(t: Tree, s: Tree) -> tuple[Tree, dict[int, Tree], dict[int, Tree]]:
    """Minimal common instance ``U = t^sigma = s^tau``.

    The substitutions are indexed by leaf positions of ``t`` and ``s``
    respectively and record only non-leaf images.
    """
    sigma: dict[int, Tree] = {}
    tau: dict[int, Tree] = {}
    ct = cs = 0

    def walk(a: Tree, b: Tree) -> Tree:
        nonlocal ct, cs
        if a.left is None:
            if b.left is not None:
                sigma[ct] = b
            ct += 1
            cs += b.size + 1
            return b
        if b.left is None:
            tau[cs] = a
            cs += 1
            ct += a.size + 1
            return a
        left = walk(a.left, b.left)
        return Tree(left, walk(a.right, b.right))

    return walk(t, s), sigma, tau


# -- serialisation -----------------------------------------------------------

def to_json(t: Tree) -> str:
    return json.dumps({"polish": polish_encode(t)})


def from_json(text: str) -> Tree:
    try:
        return polish_decode(json.loads(text)["polish"])
    except (KeyError, TypeError, json.JSONDecodeError) as exc:
        raise ParseError(f"bad tree JSON {text!r}") from exc


def to_dot(t: Tree, name: str = "tree") -> str:
    """Graphviz rendering with one node per skeleton address."""
    lines = [f"digraph {name} {{", "  node [shape=point];"]

    def walk(s: Tree, a: Address) -> None:
        ident = '"' + (a or "e") + '"'
        shape = "point" if s.left is None else "circle"
        lines.append(f'  {ident} [shape={shape}, label="{a or "ε"}"];')
        if s.left is not None:
            for bit, child in (("0", s.left), ("1", s.right)):
                lines.append(f'  {ident} -> "{a + bit}";')
                walk(child, a + bit)

    walk(t, "")
    lines.append("}")
    return "\n".join(lines) + "\n"
