"""The straightening engine, base modules, probe and bounds."""

import random
from fractions import Fraction as F

import pytest

from shv.induced import (
    DEFAULT_FUEL,
    FiniteTableModule,
    FuelExhausted,
    InducedVector,
    WhittakerBase,
    annihilation_bound,
    degree_after_lowering,
    dim_check_t1,
    random_vector,
    random_word,
    simplicity_probe,
    support_and_degree,
    validate_conditions,
    verma,
    whittaker,
)
from shv.order import BoolIndex, IndexVec, PBWMonomial, beps, eps, principal_compare
from shv.superalgebra import FAMILIES, PARITY, rbracket

ZERO = IndexVec()
BZERO = BoolIndex()


def vac(module, key=None):
    return InducedVector.vacuum(module, key)


def mono(module, i=(), j=(), k=()):
    return PBWMonomial(IndexVec(dict(i)), BoolIndex(dict(j)), IndexVec(dict(k)),
                       module.alpha, module.beta)


def test_act_examples_verma():
    M = verma(2, 1)
    one = vac(M)
    assert one.act("I", 0) == one  # I_0 = c_0 = 1
    assert one.act("G", -1).act("G", -1) == InducedVector.from_monomial(M, mono(M, i={2: 1}))
    assert one.act("I", -1).act("L", 1) == one.scale(-1)  # [L_1, I_-1] = -I_0
    assert one.act("L", -1).act("L", 1) == one.scale(-4)  # -2h with h = 2


def test_act_word():
    M = verma(2, 1)
    one = vac(M)
    assert one.act_word([]) == one
    assert one.act_word([("L", 1), ("L", -1)]) == one.scale(-4)
    assert one.act_word([("G", -1), ("G", -1)]) == InducedVector.from_monomial(M, mono(M, i={2: 1}))
    # letters may carry scalars
    assert one.act_word([("L", 0, F(3))]) == one.scale(6)


def test_support_and_degree():
    M = verma(2, 1)
    one = vac(M)
    supp, deg = support_and_degree(one)
    assert supp == {mono(M)} and deg.is_one()
    gv = one.act("G", -1)
    assert gv.degree().triple() == (ZERO, beps(1), ZERO)
    # mixed vector: under the right-to-left principal order the L-term wins
    v = one.act("I", -1) + one.act("L", -1)
    assert v.degree().triple() == (ZERO, BZERO, eps(1))
    with pytest.raises(ValueError):
        (one - one).degree()


def test_validate_conditions_verma():
    assert validate_conditions(verma(2, 1)).ok
    rep = validate_conditions(verma(2, 0))
    assert not rep.ok
    assert any("condition (a)" in f for f in rep.failures)


def test_validate_conditions_whittaker():
    W = whittaker(1, {("I", 1): 1}, 1)
    rep = validate_conditions(W)
    assert rep.ok and rep.z == 1
    bad = whittaker(1, {("I", 1): 1, ("L", 2): 1}, 1)
    rep = validate_conditions(bad)
    assert not rep.ok
    assert any("L_2" in f for f in rep.failures)


def test_probe_examples():
    M = verma(2, 1)
    one = vac(M)
    t = simplicity_probe(one.act("I", -1))
    assert t.ok and [s[0] for s in t.steps] == [("L", 1)] and t.terminal == {"v": F(-1)}
    t = simplicity_probe(one.act("G", -1))
    assert t.ok and [s[0] for s in t.steps] == [("G", 1)] and t.terminal == {"v": F(2)}
    t = simplicity_probe(one)
    assert t.ok and t.steps == [] and t.terminal == {"v": F(1)}
    with pytest.raises(ValueError):
        simplicity_probe(one - one)


def test_probe_degree_jump():
    # I_1(L_-2 L_-1 ⊗ v) = -I_-1 L_-1 ⊗ v - c_0 L_-2 ⊗ v: the new basis
    # I-letter makes the i-slot grow, but the w(k)-major order still descends
    # and matches the predicted (i, j, k') degree.
    M = verma(2, 1)
    v = vac(M).act("L", -1).act("L", -2)
    got = v.act("I", 1)
    want = (
        InducedVector.from_monomial(M, mono(M, i={1: 1}, k={1: 1}), coeff=-1)
        + InducedVector.from_monomial(M, mono(M, k={2: 1}), coeff=-1)
    )
    assert got == want
    pred = degree_after_lowering(v)
    assert principal_compare(got.degree().triple(), pred) == 0
    trace = simplicity_probe(v)
    assert trace.ok and len(trace.steps) == 2


def test_degree_after_lowering_examples():
    M = verma(2, 1)
    v = InducedVector.from_monomial(M, mono(M, k={1: 1, 2: 1}))
    assert degree_after_lowering(v) == (ZERO, BZERO, eps(2))
    v = InducedVector.from_monomial(M, mono(M, i={1: 1}, j={2: 1}))
    assert degree_after_lowering(v) == (eps(1), BZERO, ZERO)
    v = InducedVector.from_monomial(M, mono(M, i={1: 2}))
    assert degree_after_lowering(v) == (eps(1), BZERO, ZERO)
    with pytest.raises(ValueError):
        degree_after_lowering(vac(M))


def test_probe_descent_recorded():
    M = verma(2, 1)
    rng = random.Random(31)
    for _ in range(20):
        v = random_vector(M, rng, 5)
        trace = simplicity_probe(v)
        assert trace.ok, trace.failure
        prev = v.degree().triple()
        for _, deg in trace.steps:
            assert principal_compare(deg, prev) < 0
            prev = deg


def test_annihilation_bound_examples():
    M = verma(2, 1)
    one = vac(M)
    assert annihilation_bound(one) == 0
    assert annihilation_bound(one.act("L", -1)) == 1
    W = whittaker(1, {("I", 1): 1}, 1)
    assert annihilation_bound(vac(W)) == 1


def test_annihilation_bound_exact():
    M = verma(2, 1)
    rng = random.Random(13)
    for _ in range(10):
        v = random_vector(M, rng, 5)
        bound = annihilation_bound(v)
        for idx in range(bound + 1, bound + 4):
            for fam in FAMILIES:
                assert v.act(fam, idx).is_zero()
        if bound > 0:
            assert any(not v.act(fam, bound).is_zero() for fam in FAMILIES)


def test_pbw_confluence_spot():
    M = verma(2, 1)
    one = vac(M)
    rng = random.Random(3)
    for _ in range(40):
        w = random_word(rng, 6, -5, 5)
        assert one.act_word(w, strategy="leftmost") == one.act_word(w, strategy="rightmost")


def test_module_axiom():
    # act(x, act(y, u)) - (-1)^{|x||y|} act(y, act(x, u)) = act([x, y], u)
    M = verma(2, 1)
    rng = random.Random(17)
    for _ in range(100):
        f1, f2 = rng.choice(FAMILIES), rng.choice(FAMILIES)
        m, n = rng.randint(-3, 3), rng.randint(-3, 3)
        u = random_vector(M, rng, 4)
        sign = (-1) ** (PARITY[f1] * PARITY[f2])
        lhs = u.act(f2, n).act(f1, m) - u.act(f1, m).act(f2, n).scale(sign)
        br = rbracket(f1, m, f2, n)
        rhs = u.act_word([(br[0], br[1], br[2])]) if br else u.scale(0)
        assert lhs == rhs, (f1, m, f2, n)


def test_g_square_coherence():
    M = verma(2, 1)
    rng = random.Random(23)
    for a in range(-4, 5):
        u = random_vector(M, rng, 4)
        assert u.act("G", a).act("G", a) == u.act("I", 2 * a), a


def test_parity_bookkeeping():
    M = verma(2, 1)
    u = vac(M, "v").act("L", -2).act("I", -1)
    assert u.homogeneous_parity() == 0
    assert u.act("G", -3).homogeneous_parity() == 1
    assert u.act("G", -3).act("G", 2).homogeneous_parity() == 0
    assert u.act("L", -1).homogeneous_parity() == 0
    assert u.act("I", 2).is_zero() or u.act("I", 2).homogeneous_parity() == 0


def test_fuel_guard():
    M = verma(2, 1)
    with pytest.raises(FuelExhausted):
        vac(M).act("L", -1).act("L", -2).act("L", 3, fuel=2)


def test_finite_table_validation():
    # G_0 squared must equal I_0 = c_0: a wrong G_0 action is rejected
    with pytest.raises(ValueError):
        FiniteTableModule(
            0, 0, 0, 1,
            {"v": 0, "w": 1},
            {
                ("I", 0): {"v": {"v": F(1)}, "w": {"w": F(1)}},
                ("G", 0): {"v": {"w": F(1)}, "w": {"v": F(2)}},
            },
        )
    # parity violation
    with pytest.raises(ValueError):
        FiniteTableModule(
            0, 0, 0, 0,
            {"v": 0, "w": 0},
            {("G", 0): {"v": {"w": F(1)}}},
        )
    # I_0 must be central scalar c_0
    with pytest.raises(ValueError):
        FiniteTableModule(
            0, 0, 0, 2,
            {"v": 0, "w": 1},
            {("I", 0): {"v": {"v": F(1)}, "w": {"w": F(1)}}},
        )


def test_whittaker_action_examples():
    W = whittaker(1, {("I", 1): 1}, 1)
    l0v = ((1,), (), (0,))
    unit = ((0,), (), (0,))
    g0v = ((0,), (), (1,))
    # I_1 L_0 v = (L_0 - 1) v
    assert W.act_basis("I", 1, l0v) == {l0v: F(1), unit: F(-1)}
    # G_0 G_0 v = c_0 v
    assert W.act_basis("G", 0, g0v) == {unit: F(1)}
    # L_3 v = 0
    assert W.act_basis("L", 3, unit) == {}


def test_whittaker_validation():
    with pytest.raises(ValueError):
        whittaker(1, {("I", 3): 1}, 1)  # derived slot
    with pytest.raises(ValueError):
        whittaker(1, {("G", 1): 1}, 1)  # odd slot
    with pytest.raises(ValueError):
        whittaker(0, {}, 1)


def test_whittaker_level_two():
    W = whittaker(2, {("I", 3): 1}, 1)
    assert W.z == 3
    assert validate_conditions(W, sample_bound=3).ok
    one = vac(W)
    t = simplicity_probe(one.act("L", -1).act("I", -1))
    assert t.ok


def test_whittaker_probes():
    W = whittaker(1, {("I", 1): 1}, 1)
    rng = random.Random(19)
    for _ in range(25):
        v = random_vector(W, rng, 5)
        t = simplicity_probe(v)
        assert t.ok, t.failure


def test_dim_check_t1():
    assert dim_check_t1({("I", 1): 1}).passed
    assert not dim_check_t1({("I", 2): 1}).passed
    assert dim_check_t1({}).passed
    assert not dim_check_t1({("G", 1): 1}).passed


def test_offset_module_letter_classification():
    # alpha = 2, beta = 1: acting ranges are L >= 0, I >= -2, G >= -1, so
    # I_-2 and G_-1 fall through to the base while I_-3 and G_-2 are letters
    M = FiniteTableModule(2, 1, 0, 0, {"v": 0}, {})
    one = vac(M)
    assert one.act("I", -2).is_zero()  # acting, zero base action
    assert one.act("G", -1).is_zero()
    assert one.act("I", -3) == InducedVector.from_monomial(M, mono(M, i={1: 1}))
    assert one.act("G", -2) == InducedVector.from_monomial(M, mono(M, j={1: 1}))
    # [L_1, I_-3] = -3 I_-2 is an acting letter and dies on the base
    assert one.act("I", -3).act("L", 1).is_zero()
    # G_-2 G_-2 collapses to the basis letter I_-4
    assert one.act("G", -2).act("G", -2) == InducedVector.from_monomial(M, mono(M, i={2: 1}))
    # straightening of a mixed word stays confluent with offsets
    rng = random.Random(37)
    for _ in range(25):
        w = random_word(rng, 5, -5, 3)
        a = one.act_word(w, strategy="leftmost")
        b = one.act_word(w, strategy="rightmost")
        assert a == b


def test_vector_arithmetic():
    M = verma(2, 1)
    one = vac(M)
    v = one.act("L", -1)
    assert (v + v).scale(F(1, 2)) == v
    assert (v - v).is_zero()
    w = vac(M, "w")
    assert v + w == w + v
    with pytest.raises(ValueError):
        v + vac(verma(2, 1))  # distinct module instances
