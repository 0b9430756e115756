import random

import pytest

from helpers import random_positive_word, random_tree, random_walk, random_word
from tamarisym.errors import InternalInvariantViolation, SizeMismatch
from tamarisym.group import IDENTITY, eval_word, lambda_of
from tamarisym.polish_nf import (
    clash, is_normal, normal_form, polish_run, polish_step, step_from_origin,
)
from tamarisym.tamari import join
from tamarisym.trees import parse_tree, polish_encode, skeleton, substitute
from tamarisym.words import Letter, a, act, act_letter, hat, inverse, parse_word, try_act

T = parse_tree
W = parse_word

T0 = T("x(((x(xx))x)x)")
T0_PRIME = T("(x(xx))(x(xx))")


def _prefix(t, t2):
    s, s2 = polish_encode(t), polish_encode(t2)
    k = 0
    while k < len(s) and s[k] == s2[k]:
        k += 1
    return k


def test_clash_examples():
    c = clash(T0, T0_PRIME)
    assert (c.position, c.smaller, c.leaf_origin) == (4, 0, "10011")
    assert clash(T0, T0) is None
    t1 = act(T0, W("a[100]"))
    assert clash(t1, T0_PRIME).position == 5
    assert clash(T0_PRIME, T0).smaller == 1
    with pytest.raises(SizeMismatch):
        clash(T("x"), T("xx"))


def test_step_examples():
    assert step_from_origin("10011") == a("100")
    assert step_from_origin("1001") == hat("", 3)
    assert step_from_origin("110") == a("")
    assert polish_step(T0, T0_PRIME) == a("100")
    with pytest.raises(InternalInvariantViolation):
        step_from_origin("0100")
    with pytest.raises(InternalInvariantViolation):
        polish_step(T0_PRIME, T0)


def test_run_example():
    assert polish_run(T0, T0_PRIME) == W("a[100] a[,3] a[]' a[]'")
    assert polish_run(T0, T0) == ()


def test_normal_form_examples():
    assert normal_form(eval_word(W("a[] a[1]"))) == W("a[] a[1]")
    assert normal_form(eval_word(W("a[11] a[]"))) == W("a[] a[1]")
    assert normal_form(IDENTITY) == ()


def test_is_normal_examples():
    assert is_normal(W("a[] a[]"))
    assert not is_normal(W("a[1] a[,2]"))
    assert is_normal(W("a[0110,3]"))
    assert not is_normal(W("a[11] a[]"))
    with pytest.raises(ValueError):
        is_normal(W("a[]'"))


def test_run_shape_and_contract():
    rng = random.Random(1)
    for _ in range(300):
        n = rng.randint(0, 9)
        t, t2 = random_tree(n, rng), random_tree(n, rng)
        w = polish_run(t, t2)
        signs = [x.sign for x in w]
        assert signs == sorted(signs, reverse=True)
        assert act(t, w) == t2
        pos = tuple(x for x in w if x.sign > 0)
        neg = inverse(tuple(x for x in w if x.sign < 0))
        assert act(t, pos) == join(t, t2) == act(t2, neg)
        assert is_normal(pos)
        assert is_normal(neg)


def test_comparable_pairs_give_positive_words():
    rng = random.Random(2)
    for _ in range(200):
        t = random_tree(rng.randint(0, 9), rng)
        _, t2 = random_walk(t, rng.randint(0, 8), rng, positive=True)
        assert all(x.sign > 0 for x in polish_run(t, t2))


def test_representative_independence():
    rng = random.Random(3)
    for _ in range(500):
        w = random_word(rng, rng.randint(0, 6))
        f = eval_word(w)
        nf = normal_form(f)
        sigma = {i: random_tree(rng.randint(0, 3), rng) for i in range(f.neg.size + 1)}
        start = substitute(f.neg, sigma)
        assert polish_run(start, substitute(f.pos, sigma)) == nf
        end = try_act(start, w)
        if end is not None:
            assert polish_run(start, end) == nf


def test_round_trip():
    rng = random.Random(4)
    for _ in range(500):
        f = eval_word(random_word(rng, rng.randint(0, 10)))
        assert eval_word(normal_form(f)) == f


def test_step_uniqueness_by_exhaustive_search():
    rng = random.Random(5)
    checked = 0
    while checked < 300:
        n = rng.randint(2, 8)
        t, t2 = random_tree(n, rng), random_tree(n, rng)
        c = clash(t, t2)
        if c is None:
            continue
        if c.smaller == 1:
            t, t2 = t2, t
        k = c.position - 1
        found = []
        for alpha in skeleton(t):
            for r in range(1, n + 1):
                t3 = act_letter(t, Letter(alpha, r))
                if t3 is not None and _prefix(t3, t2) > k:
                    found.append(Letter(alpha, r))
        assert found == [polish_step(t, t2)]
        checked += 1


def test_monotone_progress():
    rng = random.Random(6)
    for _ in range(200):
        n = rng.randint(1, 9)
        t, t2 = random_tree(n, rng), random_tree(n, rng)
        k = _prefix(t, t2)
        while (c := clash(t, t2)) is not None:
            if c.smaller == 0:
                t = act_letter(t, polish_step(t, t2))
            else:
                t2 = act_letter(t2, polish_step(t2, t))
            k2 = _prefix(t, t2)
            assert k2 > k
            k = k2


def test_sign_criterion_for_positive_monoid():
    rng = random.Random(7)
    for _ in range(100):
        u = random_positive_word(rng, rng.randint(0, 6), max_r=3)
        assert all(x.sign > 0 for x in normal_form(eval_word(u)))
    for _ in range(100):
        u = random_positive_word(rng, rng.randint(1, 6), max_r=3)
        f = eval_word(inverse(u))
        # λ < 0 certifies that f is not in the positive monoid
        assert lambda_of(f) < 0
        assert any(x.sign < 0 for x in normal_form(f))


def test_is_normal_matches_normal_forms():
    rng = random.Random(8)
    hits = 0
    for _ in range(500):
        u = random_positive_word(rng, rng.randint(1, 4), max_addr=2, max_r=2)
        is_nf = normal_form(eval_word(u)) == u
        assert is_normal(u) == is_nf
        hits += is_nf
    assert 0 < hits < 500
