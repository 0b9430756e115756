import json

import pytest
from hypothesis import given, settings, strategies as st

from tamarisym.errors import IndexOutOfRange, MalformedPolish, ParseError, UndefinedSubtree
from tamarisym.tamari import enumerate_trees
from tamarisym.trees import (
    LEAF, Tree, comb, from_json, is_polish, leaf_address, leaf_addresses, match, mirror, mu,
    orthogonal, origin_of_position, parse_address, parse_tree, polish_decode, polish_encode,
    postorder_less, relation, skeleton, substitute, subtree_at, to_dot, to_json, to_text,
    unify, zigzag,
)

T = parse_tree


@st.composite
def trees(draw, max_size=8):
    n = draw(st.integers(0, max_size))

    def build(k, it):
        if k == 0:
            return LEAF
        left = next(it) % k
        return Tree(build(left, it), build(k - 1 - left, it))

    splits = iter(draw(st.lists(st.integers(0, 50), min_size=n, max_size=n)))
    return build(n, splits)


def test_address_trichotomy():
    assert relation("10", "10") == "equal"
    assert relation("1", "10") == "extends"
    assert relation("10", "1") == "prefix"
    assert relation("0", "1") == "orthogonal"
    assert orthogonal("01", "1") and not orthogonal("", "1")
    assert parse_address("e") == "" and parse_address("ε") == ""
    with pytest.raises(ParseError):
        parse_address("12")


@given(st.text("01", max_size=5), st.text("01", max_size=5))
def test_postorder_is_strict_total(a, b):
    if a == b:
        assert not postorder_less(a, b)
    else:
        assert postorder_less(a, b) != postorder_less(b, a)


def test_subtree_examples():
    t = T("(x((xx)x))")
    assert subtree_at(t, "10") == T("(xx)")
    assert subtree_at(t, "") == t
    for bad in ("01", "111"):
        with pytest.raises(UndefinedSubtree):
            subtree_at(t, bad)


def test_skeleton_examples():
    assert skeleton(T("x((xx)x)")) == {"", "0", "1", "10", "100", "101", "11"}
    assert skeleton(LEAF) == {""}
    assert skeleton(comb(2)) == {"", "0", "1", "10", "11"}


def test_leaf_address_examples():
    assert leaf_address(T("x((xx)x)"), 1) == "100"
    assert leaf_address(LEAF, 0) == ""
    assert leaf_address(T("((xx)x)"), 2) == "1"
    with pytest.raises(IndexOutOfRange):
        leaf_address(LEAF, 1)


def test_polish_examples():
    assert polish_encode(LEAF) == "x"
    assert polish_encode(T("x((xx)x)")) == "xxxoxoo"
    assert polish_encode(T("((xx)x)")) == "xxoxo"
    assert polish_decode("x•◦") == T("(xx)")
    for bad in ("", "xo", "xxoo", "xxx", "xxa"):
        with pytest.raises(MalformedPolish):
            polish_decode(bad)


def test_origin_examples():
    t = T("x((xx)x)")
    assert [origin_of_position(t, k) for k in range(1, 8)] == ["0", "100", "101", "10", "11", "1", ""]
    assert origin_of_position(LEAF, 1) == ""
    with pytest.raises(IndexOutOfRange):
        origin_of_position(t, 8)


def test_comb_and_zigzag():
    assert comb(2, "right") == T("x(xx)")
    assert comb(3, "left") == T("((xx)x)x")
    assert comb(0) == LEAF
    assert zigzag("") == LEAF
    assert zigzag("1") == T("xx")
    assert zigzag("10") == T("x(xx)")
    with pytest.raises(ValueError):
        comb(2, "up")


def test_mirror_and_mu():
    assert mirror(T("x(xx)")) == T("(xx)x")
    assert mirror(LEAF) == LEAF
    assert mirror(T("x((xx)x)")) == T("(x(xx))x")
    assert mu(T("x(xx)")) == 2
    assert mu(T("(xx)x")) == 3
    assert mu(LEAF) == 0
    for n in range(11):
        assert mu(comb(n, "right")) == n
        assert mu(comb(n, "left")) == n * (n + 1) // 2


def test_unify_examples():
    u, sigma, tau = unify(T("(xx)x"), T("x(xx)"))
    assert u == T("(xx)(xx)")
    assert sigma == {2: T("xx")} and tau == {0: T("xx")}
    t = T("x((xx)x)")
    assert unify(t, LEAF) == (t, {}, {0: t})
    assert unify(comb(2), comb(2)) == (comb(2), {}, {})


def test_all_small_trees_roundtrip():
    for n in range(9):
        for t in enumerate_trees(n):
            w = polish_encode(t)
            assert is_polish(w)
            assert polish_decode(w) == t
            assert len(skeleton(t)) == 2 * n + 1
            leaves = leaf_addresses(t)
            # no leaf address is a prefix of another, so plain sorting is left-to-right
            assert sorted(leaves) == leaves


@given(trees())
def test_text_and_json_roundtrip(t):
    assert parse_tree(to_text(t)) == t
    assert from_json(to_json(t)) == t
    assert json.loads(to_json(t))["polish"] == polish_encode(t)
    assert hash(parse_tree(str(t))) == hash(t)


@given(trees())
def test_mirror_involution(t):
    assert mirror(mirror(t)) == t


@given(trees(6), trees(6))
def test_unify_properties(t, s):
    u, sigma, tau = unify(t, s)
    assert substitute(t, sigma) == u == substitute(s, tau)
    assert u.size >= max(t.size, s.size)
    u2, sigma2, tau2 = unify(s, t)
    assert u2 == u and sigma2 == tau and tau2 == sigma
    assert match(t, u) == sigma


@given(trees(6), trees(6))
@settings(max_examples=50)
def test_unify_minimal(t, s):
    # any common instance obtained by further substitution is an instance of U
    u, _, _ = unify(t, s)
    bigger = substitute(u, {0: T("xx")})
    assert match(t, bigger) is not None and match(s, bigger) is not None
    assert match(u, bigger) is not None


def test_parse_errors():
    for bad in ("", "(x", "(xxx)", "y", "x)"):
        with pytest.raises(ParseError):
            parse_tree(bad)
    with pytest.raises(ParseError):
        from_json('{"tree": 1}')


def test_dot_has_one_node_per_address():
    dot = to_dot(T("x(xx)"))
    assert dot.count("shape=") == 1 + 5
    assert dot.startswith("digraph")
