from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from orbivertex.exactalg import Cyc, FracSeries, cyc_field, cyc_arith


F12 = cyc_field(12)
F6 = cyc_field(6)


def rational_cyc(field):
    return st.builds(
        lambda nums: Cyc(field, tuple(Fraction(n, 3) for n in nums)),
        st.lists(st.integers(-6, 6), min_size=field.phi, max_size=field.phi),
    )


def test_zeta_powers_reduce():
    f = cyc_field(8)
    assert f.zeta(8) == f.one
    assert f.zeta(4) == -f.one
    i = f.root_of_unity(4)
    assert i * i == -f.one


def test_fourth_root_squares_to_minus_one():
    f = cyc_field(4)
    assert f.zeta() * f.zeta() == f.from_rational(-1)


def test_conj_times_self_is_one_for_zeta6():
    z = F6.zeta()
    assert z.conj() * z == F6.one


def test_inverse_of_one_plus_zeta3():
    f = cyc_field(3)
    a = f.one + f.zeta()
    assert a.inv() * a == f.one


def test_division_by_zero_message():
    with pytest.raises(ZeroDivisionError, match="division by zero in coefficient field"):
        F12.zero.inv()


def test_embedding_subfield():
    small = cyc_field(4)
    lifted = F12.embed(small.zeta())
    assert lifted == F12.root_of_unity(4)


@settings(max_examples=60, deadline=None)
@given(rational_cyc(F12), rational_cyc(F12), rational_cyc(F12))
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    if a:
        assert a * a.inv() == F12.one


@settings(max_examples=60, deadline=None)
@given(rational_cyc(F12), rational_cyc(F12))
def test_conj_is_ring_involution(a, b):
    assert (a * b).conj() == a.conj() * b.conj()
    assert (a + b).conj() == a.conj() + b.conj()
    assert a.conj().conj() == a
    r = F12.from_rational(Fraction(5, 7))
    assert r.conj() == r


def test_cyc_arith_dispatch():
    z = F12.root_of_unity(4)
    assert cyc_arith(z, z, "mul") == -F12.one
    assert cyc_arith(z, F12.one, "add") == z + 1
    assert cyc_arith(z, None, "conj") * z == F12.one
    assert cyc_arith(z, None, "inv") == z.conj()


# ---------------------------------------------------------------------------
# series
# ---------------------------------------------------------------------------

def q_series(*, bound=6):
    f = cyc_field(2)
    return FracSeries.zero(f, ("q",), 1, bound), f


def test_series_product_truncation():
    s, f = q_series()
    q = FracSeries.monomial(f, ("q",), 1, {"q": 1})
    assert ((1 + q) * (1 - q)).agrees_with(1 - q ** 2 + s)


def test_series_times_zero():
    s, f = q_series()
    q = FracSeries.monomial(f, ("q",), 1, {"q": 1})
    assert ((q + s) * s).is_zero()


def test_geometric_inverse():
    s, f = q_series()
    q = FracSeries.monomial(f, ("q",), 1, {"q": 1})
    geom = (1 - q).inverse(bound=6)
    total = sum(q ** j for j in range(7)) + s
    assert ((1 - q) * total).agrees_with(1 + s)
    assert geom.agrees_with(total)


def test_exp_log_roundtrips():
    f = cyc_field(2)
    vs = ("q", "u")
    zero = FracSeries.zero(f, vs, 1, 5)
    q = FracSeries.monomial(f, vs, 1, {"q": 1})
    u = FracSeries.monomial(f, vs, 1, {"u": 1})
    assert zero.exp().agrees_with(1 + zero)
    mercator = (1 + q + zero).log()
    expect = sum((q ** k).smul(Fraction((-1) ** (k + 1), k)) for k in range(1, 6))
    assert mercator.agrees_with(expect + zero)
    s = q + u + zero
    assert (1 + s).log().exp().agrees_with(1 + s)
    assert s.exp().log().agrees_with(s)


def test_exp_requires_zero_constant():
    s, f = q_series()
    with pytest.raises(ValueError, match="exp requires zero constant term"):
        (1 + s).exp()
    with pytest.raises(ValueError, match="log requires constant term 1"):
        s.log()


@settings(max_examples=30, deadline=None)
@given(
    st.lists(st.tuples(st.integers(0, 3), st.integers(-4, 4)), max_size=4),
    st.lists(st.tuples(st.integers(0, 3), st.integers(-4, 4)), max_size=4),
    st.lists(st.tuples(st.integers(0, 3), st.integers(-4, 4)), max_size=4),
)
def test_series_ring_axioms(ta, tb, tc):
    f = cyc_field(2)

    def build(ts):
        s = FracSeries.zero(f, ("q",), 1, 8)
        for e, c in ts:
            s = s + FracSeries.monomial(f, ("q",), 1, {"q": e}, coeff=c)
        return s

    a, b, c = build(ta), build(tb), build(tc)
    assert ((a + b) + c).agrees_with(a + (b + c))
    assert ((a * b) * c).agrees_with(a * (b * c))
    assert (a * (b + c)).agrees_with(a * b + a * c)
    assert (a * b).agrees_with(b * a)


def test_substitute_exponent_scaling():
    # q |-> exp(i u) sends q^(1/2) to exp(i u / 2)
    f = cyc_field(4)
    half = FracSeries.monomial(f, ("q",), 2, {"q": Fraction(1, 2)})
    iu = FracSeries.monomial(f, ("u",), 1, {"u": 1}, coeff=f.imaginary_unit())
    image = iu + FracSeries.zero(f, ("u",), 1, 6)
    out = half.substitute({"q": image.exp()})
    expect = image.smul(Fraction(1, 2)).exp()
    assert out.agrees_with(expect)


def test_substitute_constant_series_unchanged():
    f = cyc_field(4)
    c = FracSeries.constant(f, ("q",), 2, Fraction(3, 2), bound=4)
    img = FracSeries.monomial(f, ("u",), 1, {"u": 2}, bound=4) + 1
    out = c.substitute({"q": img})
    assert out.constant_term() == Fraction(3, 2) and len(out.terms) == 1


def test_substitute_linear_coefficient_of_variable_image():
    # image of q_1 for n = 2: the x_1-linear coefficient must equal the
    # hand-expanded value -(zeta_2^(-1)/2)(zeta_4 - zeta_4^(-1)) zeta_2^(-1)
    f = cyc_field(4)
    n = 2
    c = (f.root_of_unity(2, -1) * Fraction(1, 2)
         * (f.root_of_unity(4) - f.root_of_unity(4, -1)))
    arg = FracSeries.monomial(f, ("x1",), 1, {"x1": 1}, coeff=-c)
    image = (arg + FracSeries.zero(f, ("x1",), 1, 4)).exp().smul(
        f.root_of_unity(2, -1))
    q1 = FracSeries.monomial(f, ("q1",), 2 * n, {"q1": 1})
    out = q1.substitute({"q1": image})
    expected = -c * f.root_of_unity(2, -1)
    assert out.coefficient({"x1": 1}) == expected
    # and the hand-expanded numeric value, with zeta_2 = -1
    assert expected == f.root_of_unity(4, -1)


def test_substitute_branch_error():
    f = cyc_field(4)
    half = FracSeries.monomial(f, ("q",), 2, {"q": Fraction(1, 2)})
    bad = FracSeries.monomial(f, ("u",), 1, {"u": 1}, bound=4) + 2
    with pytest.raises(ValueError, match="branch-ambiguous substitution"):
        half.substitute({"q": bad})


def test_incompatible_gradings_error():
    f = cyc_field(2)
    a = FracSeries.one(f, ("q",), 1, 3)
    b = FracSeries.one(f, ("u",), 1, 3)
    with pytest.raises(ValueError, match="incompatible gradings"):
        a * b


def test_json_roundtrip_and_normalization():
    f = cyc_field(4)
    s = FracSeries.monomial(f, ("q0", "q1"), 4, {"q0": Fraction(1, 2)},
                            coeff=f.zeta(), bound=3)
    s = s + FracSeries.monomial(f, ("q0", "q1"), 4, {"q1": 2}, coeff=Fraction(-2, 3),
                                bound=3)
    data = s.to_json_dict()
    back = FracSeries.from_json_dict(data)
    assert back.agrees_with(s) and back.bound == s.bound
    assert s.normalized() is s
    neg = FracSeries.monomial(f, ("q0", "q1"), 4, {"q0": -1}, bound=3)
    with pytest.raises(ValueError, match="unnormalized series"):
        neg.normalized()
