"""Index vectors, the reverse-lexicographic order and the principal order."""

import random

import pytest

from shv.order import (
    BoolIndex,
    IndexVec,
    PBWMonomial,
    beps,
    eps,
    principal_compare,
    rev_lex_compare,
)

ZERO = IndexVec()
BZERO = BoolIndex()


def test_weight():
    assert eps(3).weight() == 3
    assert IndexVec({2: 1, 1: 3}).weight() == 5
    assert ZERO.weight() == 0


def test_lower_prime():
    assert eps(1).lower_prime() == ZERO
    assert IndexVec({3: 2, 2: 1}).lower_prime() == IndexVec({3: 2})
    assert IndexVec({1: 2}).lower_prime() == eps(1)
    with pytest.raises(ValueError):
        ZERO.lower_prime()


def test_min_support():
    assert eps(5).min_support() == 5
    assert IndexVec({4: 1, 2: 2}).min_support() == 2
    assert IndexVec({1: 1, 7: 1}).min_support() == 1
    with pytest.raises(ValueError):
        ZERO.min_support()


def test_rev_lex_examples():
    assert rev_lex_compare(eps(2), eps(2)) == 0
    # the first differing position decides: position 1 has 1 > 0
    assert rev_lex_compare(eps(1), eps(2)) > 0
    # the zero vector is the minimum
    assert rev_lex_compare(ZERO, eps(5)) < 0


def test_rev_lex_is_total_order():
    rng = random.Random(5)

    def rand_vec():
        return IndexVec({rng.randint(1, 5): rng.randint(0, 3) for _ in range(rng.randint(0, 3))})

    for _ in range(500):
        a, b, c = rand_vec(), rand_vec(), rand_vec()
        ca, cb = rev_lex_compare(a, b), rev_lex_compare(b, a)
        assert ca == -cb
        assert (ca == 0) == (a == b)
        if rev_lex_compare(a, b) <= 0 and rev_lex_compare(b, c) <= 0:
            assert rev_lex_compare(a, c) <= 0


def test_weight_of_lower_prime():
    rng = random.Random(6)
    for _ in range(200):
        v = IndexVec({rng.randint(1, 6): rng.randint(1, 3) for _ in range(rng.randint(1, 3))})
        assert v.lower_prime().weight() == v.weight() - v.min_support()
        assert rev_lex_compare(v, v.lower_prime()) > 0


def test_bool_index_validation():
    assert beps(2) == BoolIndex({2: 1})
    with pytest.raises(ValueError):
        BoolIndex({2: 2})
    assert beps(3).lower_prime() == BZERO
    assert isinstance(beps(3).lower_prime(), BoolIndex)


# The six-tuple (i, w(i), j, w(j), k, w(k)) is compared in the reverse
# (right-to-left) direction: w(k) is the most significant slot.  This is the
# reading under which every degree-lowering step of the simplicity argument
# strictly descends; see test_probe_degree_jump in test_induced.py.

def test_principal_compare_reads_right_to_left():
    t = lambda i, j, k: (i, j, k)
    assert principal_compare(t(ZERO, BZERO, eps(1)), t(ZERO, BZERO, eps(2))) < 0  # w(k) 1 < 2
    assert principal_compare(t(eps(1), BZERO, ZERO), t(ZERO, beps(1), ZERO)) < 0  # w(j) 0 < 1
    x = t(eps(2), beps(1), eps(3))
    assert principal_compare(x, x) == 0
    # ties on weight fall back to the reverse-lexicographic vector compare
    assert principal_compare(t(ZERO, BZERO, eps(1)), t(ZERO, BZERO, eps(1))) == 0
    a = t(ZERO, BZERO, IndexVec({1: 2}))  # w(k)=2, k = 2e1
    b = t(ZERO, BZERO, eps(2))  # w(k)=2, k = e2
    assert principal_compare(a, b) > 0  # 2e1 > e2 reverse-lexicographically
    # the k-slots dominate the i-slots entirely
    c = t(IndexVec({1: 9}), BZERO, eps(1))
    d = t(ZERO, BZERO, eps(2))
    assert principal_compare(c, d) < 0


def test_principal_is_total_order():
    rng = random.Random(7)

    def rand_triple():
        i = IndexVec({rng.randint(1, 4): rng.randint(0, 2) for _ in range(rng.randint(0, 2))})
        j = BoolIndex({rng.randint(1, 4): 1 for _ in range(rng.randint(0, 2))})
        k = IndexVec({rng.randint(1, 4): rng.randint(0, 2) for _ in range(rng.randint(0, 2))})
        return (i, j, k)

    for _ in range(500):
        a, b, c = rand_triple(), rand_triple(), rand_triple()
        assert principal_compare(a, b) == -principal_compare(b, a)
        assert (principal_compare(a, b) == 0) == (a == b)
        if principal_compare(a, b) <= 0 and principal_compare(b, c) <= 0:
            assert principal_compare(a, c) <= 0


def test_pbw_monomial_letters():
    m = PBWMonomial(IndexVec({1: 1, 2: 1}), beps(1), IndexVec({1: 2}), alpha=2, beta=1)
    assert m.letters() == (
        ("I", -4),
        ("I", -3),
        ("G", -2),
        ("L", -1),
        ("L", -1),
    )
    assert m.total_weight() == 1 + 2 + 1 + 2
    assert m.g_count() == 1


def test_pbw_monomial_offsets():
    with pytest.raises(ValueError):
        PBWMonomial(ZERO, BZERO, ZERO, alpha=1, beta=1)
    one = PBWMonomial.one(0, 0)
    assert one.is_one()
    assert one.letters() == ()
    assert hash(one) == hash(PBWMonomial.one(0, 0))


def test_pbw_monomial_ordering():
    a = PBWMonomial(ZERO, BZERO, eps(1), 0, 0)
    b = PBWMonomial(ZERO, BZERO, eps(2), 0, 0)
    assert a < b
    assert max([a, b]) == b
