import random

import pytest

from closurekit import (
    GF,
    QQ,
    Ideal,
    PolyRing,
    QuotientRingContext,
    annihilator,
    ideal_member,
    ideal_quotient,
    ideals_equal,
    intersect,
    jacobian_test_ideal,
    radical,
    radical_membership,
    saturation,
)
from closurekit.errors import (
    StrategyFailed,
    UnsupportedCharacteristic,
    ZeroPolynomial,
)
from conftest import P
from oracles import monomials_up_to


def ctx_for(ring, gens):
    return QuotientRingContext(ring, Ideal(ring, gens))


def test_quotient_monomial_example(ring_xy):
    ctx = ctx_for(ring_xy, [])
    I = Ideal(ring_xy, [P(ring_xy, "x^2"), P(ring_xy, "x*y")])
    J = Ideal(ring_xy, [ring_xy.var("x"), ring_xy.var("y")])
    Q = ideal_quotient(I, J, ctx)
    assert ideals_equal(Q, Ideal(ring_xy, [ring_xy.var("x")]))
    # membership both ways: x qualifies, y does not
    for j in J.generators:
        assert ideal_member(ring_xy.var("x") * j, I)
    assert not ideal_member(ring_xy.var("y") * ring_xy.var("y"), I)


def test_quotient_by_unit_is_identity(ring_xy):
    ctx = ctx_for(ring_xy, [])
    I = Ideal(ring_xy, [P(ring_xy, "x^2 - y")])
    Q = ideal_quotient(I, Ideal(ring_xy, [ring_xy.one]), ctx)
    assert ideals_equal(Q, I)


def test_quotient_cusp_hom_numerators(ring_xy):
    # ((x*(x,y)) : (x,y)) modulo the cusp is the maximal ideal
    ctx = ctx_for(ring_xy, [P(ring_xy, "y^2 - x^3")])
    x, y = ring_xy.gens()
    I = Ideal(ring_xy, [x * x, x * y])
    J = Ideal(ring_xy, [x, y])
    Q = ideal_quotient(I, J, ctx)
    assert ideals_equal(Q, Ideal(ring_xy, [x, y]))


def test_quotient_laws_random(ring_xy):
    rng = random.Random(7300)
    monos = monomials_up_to(2, 3)

    def rand_poly():
        d = {}
        for _ in range(rng.randint(1, 3)):
            c = 0
            while not c:
                c = rng.randint(-3, 3)
            d[rng.choice(monos)] = QQ.element(c)
        return ring_xy.from_dict(d)

    ctx = ctx_for(ring_xy, [])
    for _ in range(15):
        I = Ideal(ring_xy, [g for g in (rand_poly() for _ in range(2)) if g])
        J = Ideal(ring_xy, [g for g in (rand_poly(),) if g])
        if I.is_zero() or J.is_zero():
            continue
        Q = ideal_quotient(I, J, ctx)
        for g in I.generators:
            assert ideal_member(g, Q)
        for q in Q.generators:
            for j in J.generators:
                assert ideal_member(q * j, I)


def test_annihilator_of_zero_divisor():
    R = PolyRing(QQ, ["x", "y"])
    ctx = ctx_for(R, [P(R, "x*y")])
    ann = annihilator(R.var("x"), ctx)
    assert ideals_equal(ann, Ideal(R, [R.var("y")]))


def test_annihilator_of_unit_in_reduced_ring(ring_xy):
    ctx = ctx_for(ring_xy, [P(ring_xy, "x*y")])
    assert annihilator(ring_xy.one, ctx).is_zero()


def test_annihilator_in_domain(ring_xy):
    ctx = ctx_for(ring_xy, [P(ring_xy, "y^2 - x^3")])
    assert annihilator(ring_xy.var("x"), ctx).is_zero()


def test_annihilator_duality_random(ring_xy):
    ctx = ctx_for(ring_xy, [P(ring_xy, "x^2*y - y")])
    rng = random.Random(7301)
    monos = monomials_up_to(2, 2)
    for _ in range(10):
        d = {}
        for _ in range(rng.randint(1, 2)):
            c = 0
            while not c:
                c = rng.randint(-3, 3)
            d[rng.choice(monos)] = QQ.element(c)
        f = ring_xy.from_dict(d)
        if ctx.is_zero(f):
            continue
        ann = annihilator(f, ctx)
        for a in ann.generators:
            assert ctx.is_zero(f * a)


def test_saturation_strips_powers(ring_xy):
    I = Ideal(ring_xy, [P(ring_xy, "x^2*y")])
    out = saturation(I, ring_xy.var("x"))
    assert ideals_equal(out, Ideal(ring_xy, [ring_xy.var("y")]))
    assert ideal_member(ring_xy.var("y") * P(ring_xy, "x^2"), I)


def test_saturation_by_unit(ring_xy):
    I = Ideal(ring_xy, [P(ring_xy, "x^2 - y")])
    assert ideals_equal(saturation(I, ring_xy.one), I)


def test_saturation_umbrella_path(ring_xyz):
    I = Ideal(ring_xyz, [P(ring_xyz, "x"), P(ring_xyz, "y*z"), P(ring_xyz, "y^2"),
                         P(ring_xyz, "x^2 - y^2*z")])
    out = saturation(I, ring_xyz.var("z"))
    assert ideals_equal(out, Ideal(ring_xyz, [ring_xyz.var("x"), ring_xyz.var("y")]))


def test_saturation_rejects_zero(ring_xy):
    with pytest.raises(ZeroPolynomial):
        saturation(Ideal(ring_xy, [ring_xy.var("x")]), ring_xy.zero)


def test_intersect_principal(ring_xy):
    out = intersect(Ideal(ring_xy, [ring_xy.var("x")]),
                    Ideal(ring_xy, [ring_xy.var("y")]))
    assert ideals_equal(out, Ideal(ring_xy, [P(ring_xy, "x*y")]))


def test_intersect_self(ring_xy):
    I = Ideal(ring_xy, [P(ring_xy, "x^2 - y"), ring_xy.var("y")])
    assert ideals_equal(intersect(I, I), I)


def test_intersect_with_unit(ring_xy):
    I = Ideal(ring_xy, [ring_xy.var("x"), ring_xy.var("y")])
    out = intersect(I, Ideal(ring_xy, [ring_xy.one]))
    assert ideals_equal(out, I)


def test_intersect_contains_product(ring_xy):
    I = Ideal(ring_xy, [P(ring_xy, "x + y")])
    J = Ideal(ring_xy, [P(ring_xy, "x - y"), ring_xy.var("y")])
    out = intersect(I, J)
    for g in out.generators:
        assert ideal_member(g, I)
        assert ideal_member(g, J)
    for gi in I.generators:
        for gj in J.generators:
            assert ideal_member(gi * gj, out)


def test_radical_membership_examples(ring_xy):
    x, y = ring_xy.gens()
    I = Ideal(ring_xy, [x * x])
    assert radical_membership(x, I)
    assert not radical_membership(y, I)
    J = Ideal(ring_xy, [x * x, y * y])
    # (x+y)^3 = x^3 + 3x^2y + 3xy^2 + y^3 lies in (x^2, y^2)
    assert ideal_member((x + y) ** 3, J)
    assert radical_membership(x + y, J)


def test_radical_principal_power(ring_xy):
    out = radical(Ideal(ring_xy, [P(ring_xy, "x^2")]))
    assert ideals_equal(out, Ideal(ring_xy, [ring_xy.var("x")]))


def test_radical_zero_dimensional(ring_xy):
    out = radical(Ideal(ring_xy, [P(ring_xy, "x^2"), P(ring_xy, "y^3")]))
    assert ideals_equal(out, Ideal(ring_xy, [ring_xy.var("x"), ring_xy.var("y")]))


def test_radical_umbrella_singular_locus(ring_xyz):
    I = Ideal(ring_xyz, [P(ring_xyz, "x"), P(ring_xyz, "y*z"), P(ring_xyz, "y^2"),
                         P(ring_xyz, "x^2 - y^2*z")])
    out = radical(I)
    assert ideals_equal(out, Ideal(ring_xyz, [ring_xyz.var("x"), ring_xyz.var("y")]))
    for g in out.generators:
        assert radical_membership(g, I)
    for g in I.generators:
        assert ideal_member(g, out)


def test_radical_idempotent(ring_xyz):
    I = Ideal(ring_xyz, [P(ring_xyz, "x^2*y"), P(ring_xyz, "y^2*z")])
    once = radical(I)
    twice = radical(Ideal(ring_xyz, list(once.generators)))
    assert ideals_equal(once, twice)


def test_radical_of_zero_and_unit(ring_xy):
    assert radical(Ideal(ring_xy, [])).is_zero()
    assert radical(Ideal(ring_xy, [ring_xy.one])).contains_one()


def test_radical_zerodim_strategy_rejects_positive_dimension(ring_xy):
    I = Ideal(ring_xy, [P(ring_xy, "x^2")])
    with pytest.raises(StrategyFailed):
        radical(I, strategy="zerodim")


def test_radical_over_small_prime_field_rejected():
    R = PolyRing(GF(2), ["x", "y"])
    I = Ideal(R, [P(R, "x^2"), R.var("y")])
    with pytest.raises(UnsupportedCharacteristic):
        radical(I)


def test_radical_over_large_enough_prime_field():
    R = PolyRing(GF(7), ["x", "y"])
    I = Ideal(R, [P(R, "x^2"), P(R, "y^3")])
    out = radical(I)
    assert ideals_equal(out, Ideal(R, [R.var("x"), R.var("y")]))


def test_jacobian_cusp(ring_xy):
    ctx = ctx_for(ring_xy, [P(ring_xy, "y^2 - x^3")])
    jac = jacobian_test_ideal(ctx)
    assert [str(g) for g in jac.generators] == ["-x^3 + y^2", "-3*x^2", "2*y"]
    assert ideals_equal(jac, Ideal(ring_xy, [P(ring_xy, "x^2"), ring_xy.var("y")]))


def test_jacobian_smooth_conic_is_unit(ring_xy):
    ctx = ctx_for(ring_xy, [P(ring_xy, "x^2 + y^2 - 1")])
    assert jacobian_test_ideal(ctx).contains_one()


def test_jacobian_umbrella(ring_xyz):
    ctx = ctx_for(ring_xyz, [P(ring_xyz, "x^2 - y^2*z")])
    jac = jacobian_test_ideal(ctx)
    expected = Ideal(ring_xyz, [P(ring_xyz, "x^2 - y^2*z"), P(ring_xyz, "2*x"),
                                P(ring_xyz, "2*y*z"), P(ring_xyz, "y^2")])
    assert ideals_equal(jac, expected)


def test_jacobian_hypersurface_is_gradient(ring_xyz):
    f = P(ring_xyz, "x^3 + y^3 + z^3 - 3*x*y*z")
    ctx = ctx_for(ring_xyz, [f])
    jac = jacobian_test_ideal(ctx)
    expected = Ideal(ring_xyz, [f, f.derivative(0), f.derivative(1), f.derivative(2)])
    assert ideals_equal(jac, expected)


def test_quotient_ring_context_normal_form(ring_xy):
    ctx = ctx_for(ring_xy, [P(ring_xy, "y^2 - x^3")])
    assert ctx.nf(P(ring_xy, "y^2")) == ctx.nf(P(ring_xy, "x^3"))
    assert ctx.is_zero(P(ring_xy, "y^2 - x^3"))
