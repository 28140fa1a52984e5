from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from mpolykit.bipoly import (
    MPoly, ZERO, add, evaluate, from_terms, op_dx, op_dy, op_j, op_q, op_sx, op_sy, scale,
)
from mpolykit.errors import DivergentIntegral, ExponentError, InvalidAlpha

F = Fraction


def P(**kw):
    """P(x2y2=4, x2y4=8) -> 4x^2y^2 + 8x^2y^4"""
    terms = []
    for key, c in kw.items():
        i, j = key[1:].split("y")
        terms.append((int(i or 0), int(j or 0), c))
    return from_terms(terms)


coeffs = st.fractions(max_denominator=50).filter(lambda c: c != 0) | st.integers(-10**6, 10**6)
exps = st.integers(0, 12)
polys = st.lists(st.tuples(exps, exps, coeffs), max_size=8).map(from_terms)
polys_no_x0 = st.lists(st.tuples(st.integers(1, 12), exps, coeffs), max_size=8).map(from_terms)
polys_no_y0 = st.lists(st.tuples(exps, st.integers(1, 12), coeffs), max_size=8).map(from_terms)


class TestConstruction:
    def test_single_term(self):
        p = from_terms([(2, 2, 4)])
        assert p.terms == {(2, 2): F(4)}

    def test_empty_is_zero(self):
        assert from_terms([]) == ZERO
        assert from_terms([]).is_zero()

    def test_cancellation(self):
        assert from_terms([(1, 1, 2), (1, 1, -2)]) == ZERO

    def test_repeated_keys_summed(self):
        assert from_terms([(1, 2, 1), (1, 2, F(1, 2))]).coeff(1, 2) == F(3, 2)

    @pytest.mark.parametrize("i,j", [(-1, 0), (0, -3)])
    def test_negative_exponent(self, i, j):
        with pytest.raises(ExponentError):
            from_terms([(i, j, 1)])

    def test_float_coefficients_rejected(self):
        with pytest.raises(TypeError):
            from_terms([(1, 1, 0.5)])


def test_add_and_scale():
    assert add(P(x2y2=1), P(x2y2=1)) == P(x2y2=2)
    assert scale(P(x2y2=4), 0) == ZERO
    assert add(P(x2y2=2, x2y4=1), P(x2y4=-1)) == P(x2y2=2)
    assert P(x1y1=1) - P(x1y1=1) == ZERO
    assert 3 * P(x1y1=1) == P(x1y1=3)


class TestOperators:
    def test_dx(self):
        assert op_dx(P(x2y2=4)) == P(x2y2=8)
        assert op_dx(P(x0y5=3)) == ZERO

    def test_dy_dx_on_four_cycle(self):
        # second Zagreb of C_4: 4 edges, each with d_u * d_v = 4
        assert op_dy(op_dx(P(x2y2=4))) == P(x2y2=16)
        assert evaluate(op_dy(op_dx(P(x2y2=4))), 1, 1) == 4 * (2 * 2)

    def test_sx(self):
        assert op_sx(P(x2y2=4)) == P(x2y2=2)
        with pytest.raises(DivergentIntegral):
            op_sx(P(x0y2=3))
        with pytest.raises(DivergentIntegral):
            op_sy(P(x2y0=3))

    def test_sx_on_d3(self):
        d3 = P(x2y2=18, x2y4=20, x4y4=14)
        assert op_sx(d3) == P(x2y2=9, x2y4=10, x4y4=F(7, 2))

    def test_j(self):
        assert op_j(P(x2y2=4)) == P(x4y0=4)
        assert op_j(P(x1y3=1, x3y1=1)) == P(x4y0=2)
        assert op_j(P(x2y2=6, x2y4=8, x4y4=2)) == P(x4y0=6, x6y0=8, x8y0=2)

    def test_q(self):
        assert op_q(P(x8y0=2), -2) == P(x6y0=2)
        with pytest.raises(ExponentError):
            op_q(P(x1y0=1), -2)
        with pytest.raises(InvalidAlpha):
            op_q(P(x1y0=1), 0)

    def test_eval(self):
        assert evaluate(P(x2y2=4), 1, 1) == 4
        assert evaluate(ZERO, F(3, 7), 5) == 0
        # |E(D_2)| = 16
        assert evaluate(P(x4y0=6, x6y0=8, x8y0=2), 1, 1) == 16
        assert evaluate(P(x2y1=F(1, 2)), F(1, 2), 3) == F(3, 8)


class TestProperties:
    @given(polys_no_x0)
    def test_sx_inverts_dx(self, p):
        assert op_sx(op_dx(p)) == p
        assert op_dx(op_sx(p)) == p

    @given(polys_no_y0)
    def test_sy_inverts_dy(self, p):
        assert op_sy(op_dy(p)) == p

    @given(polys)
    def test_dx_dy_commute(self, p):
        assert op_dx(op_dy(p)) == op_dy(op_dx(p))

    @given(polys)
    def test_eval_at_one_is_coefficient_sum(self, p):
        assert evaluate(p, 1, 1) == sum(p.terms.values(), F(0))

    @given(polys, polys)
    def test_operators_linear(self, p, q):
        for op in (op_dx, op_dy, op_j):
            assert op(p + q) == op(p) + op(q)

    @given(polys, st.integers(1, 5))
    def test_q_after_j_shifts(self, p, alpha):
        assert op_q(op_j(p), alpha) == from_terms((i + j + alpha, 0, c) for (i, j), c in p.items())

    @given(polys)
    def test_outputs_canonical(self, p):
        for out in (op_dx(p), op_dy(p), op_j(p), op_q(p, 3)):
            assert all(c != 0 for c in out.terms.values())

    @given(polys)
    def test_record_round_trip(self, p):
        assert MPoly.from_records(p.to_records()) == p


def test_big_coefficients_stay_exact():
    p = P(x2y2=2 * 3**19)
    assert evaluate(op_dx(op_dx(p)), 1, 1) == 8 * 3**19


class TestRendering:
    def test_order_and_format(self):
        assert str(P(x2y4=8, x2y2=4)) == "4 x^2 y^2 + 8 x^2 y^4"

    def test_rationals_and_signs(self):
        assert str(P(x4y4=F(7, 2), x2y2=-1)) == "-x^2 y^2 + 7/2 x^4 y^4"

    def test_unit_exponents_and_constants(self):
        assert str(P(x1y1=1)) == "x y"
        assert str(P(x0y0=3, x1y2=2)) == "3 + 2 x y^2"
        assert str(ZERO) == "0"

    def test_records(self):
        assert P(x4y4=F(7, 2)).to_records() == [{"i": 4, "j": 4, "coeff": "7/2"}]
