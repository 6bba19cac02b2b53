"""Unit tests of the sparse polynomial layer."""

import pytest

from drpkit.wave.poly import Poly, Rational


def v(name):
    return Poly.var(name)


class TestArithmetic:
    def test_zero_pruning(self):
        p = v("U1") - v("U1")
        assert p.is_zero()
        assert p.constant_value() == 0.0

    def test_add_mul_evaluate(self):
        p = (2.0 * v("U1") + 1.0) * (v("v") - 3.0)
        vals = {"U1": 0.5, "V1": 0.0, "V0": 0.0, "v": 7.0, "C": 0.0}
        assert p.evaluate(vals) == pytest.approx((2 * 0.5 + 1) * (7 - 3))

    def test_degrees(self):
        p = v("v") * v("v") * v("V1") + v("C")
        assert p.degree() == 3
        assert p.degree("v") == 2
        assert p.degree("V1") == 1
        assert p.degree("U1") == 0
        assert Poly().degree() == -1

    def test_variables(self):
        p = v("v") * v("V0") - 2.0
        assert p.variables() == {"v", "V0"}

    def test_coefficient_poly(self):
        p = 3.0 * v("v") * v("U1") + 2.0 * v("U1") + 5.0
        cu = p.coefficient_poly("U1", 1)
        assert cu == 3.0 * v("v") + 2.0
        assert p.coefficient_poly("U1", 0) == Poly.const(5.0)

    def test_substitute_number_and_poly(self):
        p = v("v") * v("v") - 1.0
        assert p.substitute("v", 3.0).constant_value() == pytest.approx(8.0)
        q = p.substitute("v", v("C") + 1.0)
        assert q.evaluate({"U1": 0, "V1": 0, "V0": 0, "v": 0, "C": 2.0}) == pytest.approx(8.0)

    def test_unknown_symbol_rejected(self):
        with pytest.raises(KeyError):
            Poly.var("nope")


class TestDivision:
    def test_divide_linear_exact(self):
        A = 1.25
        p = (v("v") - A) * (2.0 * v("V0") + 3.0)
        q = p.divide_linear("v", A)
        assert q == 2.0 * v("V0") + 3.0

    def test_divide_linear_remainder(self):
        p = (v("v") - 1.0) * v("V0") + 2.0
        assert p.divide_linear("v", 1.0) is None

    def test_divide_symbol(self):
        p = v("V1") * (v("v") + 2.0)
        assert p.divide_symbol("V1") == v("v") + 2.0
        assert (p + 1.0).divide_symbol("V1") is None


class TestRational:
    def test_evaluate(self):
        r = Rational(Poly.const(1.0), Poly.const(2.0) - v("v"))
        vals = {"U1": 0, "V1": 0, "V0": 0, "v": 1.0, "C": 0}
        assert r.evaluate(vals) == pytest.approx(1.0)
        with pytest.raises(ZeroDivisionError):
            r.evaluate({**vals, "v": 2.0})

    def test_string_deterministic(self):
        p = v("v") * v("V0") - 2.0 * v("C") + 1.5
        assert p.as_string() == Poly(dict(p.terms)).as_string()
