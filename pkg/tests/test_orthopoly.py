import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy import special as sp

from biexp.orthopoly import (GenGegenbauerFamily, JacobiFamily,
                             chebyshev_t, classical_gegenbauer,
                             dunkl_apply_poly, jacobi_eval, poly_eval)
from biexp.quad import Measure, integrate_interval
from biexp.specfun import Params, gamma


class TestJacobi:
    def test_p0(self):
        assert jacobi_eval(0, 0.3, -0.2, 0.7) == 1.0

    def test_value_at_one(self):
        n, a, b = 4, 0.3, -0.2
        assert jacobi_eval(n, a, b, 1.0) == pytest.approx(
            gamma(n + a + 1.0) / (gamma(a + 1.0) * math.factorial(n)), rel=1e-13)

    def test_against_scipy(self):
        rng = np.random.default_rng(3)
        for _ in range(300):
            n = int(rng.integers(0, 50))
            a = float(rng.uniform(-0.9, 2.5))
            b = float(rng.uniform(-0.9, 2.5))
            y = float(rng.uniform(-1, 1))
            ref = float(sp.eval_jacobi(n, a, b, y))
            assert jacobi_eval(n, a, b, y) == pytest.approx(ref, rel=2e-11, abs=2e-11)

    def test_two_paths_agree_on_overlap(self):
        from biexp.orthopoly import _jacobi_hyp, _jacobi_recur
        for n in range(5, 11):
            for y in np.linspace(-1, 1, 15):
                for (a, b) in ((0.3, -0.2), (2.0, 1.5)):
                    h = _jacobi_hyp(n, a, b, float(y))
                    r = _jacobi_recur(n, a, b, float(y))
                    assert abs(h - r) <= 1e-11 * max(1.0, abs(r))

    def test_weight_raising_identity(self):
        # P_n^{(a,b+1)} in terms of P_n^{(a,b)} and P_{n+1}^{(a,b)}
        a, b, n, z = 0.3, -0.2, 4, 0.37
        lhs = jacobi_eval(n, a, b + 1.0, z)
        rhs = (2.0 * (n + b + 1.0) * jacobi_eval(n, a, b, z)
               + 2.0 * (n + 1.0) * jacobi_eval(n + 1, a, b, z)) \
            / ((2.0 * n + a + b + 2.0) * (1.0 + z))
        assert lhs == pytest.approx(rhs, abs=1e-12)

    def test_weight_lowering_identity(self):
        # (2n+a+b) P_n^{(a,b-1)} = (n+a+b) P_n^{(a,b)} + (n+a) P_{n-1}^{(a,b)}
        for (a, b, n) in ((0.3, -0.2, 4), (1.1, 0.6, 7), (0.5, 0.25, 3)):
            for z in (-0.6, 0.1, 0.8):
                lhs = (2.0 * n + a + b) * jacobi_eval(n, a, b - 1.0, z)
                rhs = ((n + a + b) * jacobi_eval(n, a, b, z)
                       + (n + a) * jacobi_eval(n - 1, a, b, z))
                assert lhs == pytest.approx(rhs, rel=1e-11, abs=1e-11)

    def test_family_object(self):
        fam = JacobiFamily(0.5, 0.25)
        assert fam.eval(3, 0.2) == pytest.approx(jacobi_eval(3, 0.5, 0.25, 0.2))
        with pytest.raises(ValueError):
            JacobiFamily(-1.5, 0.0)


class TestGenGegenbauer:
    def setup_method(self):
        self.P = Params(0.3, 0.6)
        self.fam = GenGegenbauerFamily(self.P)

    def test_c0_and_c1(self):
        assert self.fam.eval(0, 0.37) == pytest.approx(1.0, rel=1e-14)
        # C_1(t) = ((a+b+1)/(a+1)) t, from the odd-index definition at n = 0
        t = 0.41
        assert self.fam.eval(1, t) == pytest.approx((0.3 + 0.6 + 1.0) / 1.3 * t,
                                                    rel=1e-14)

    @given(st.integers(0, 20), st.floats(-1, 1))
    @settings(max_examples=60, deadline=None)
    def test_parity(self, n, t):
        a = self.fam.eval(n, t)
        b = self.fam.eval(n, -t)
        assert b == pytest.approx((-1.0) ** n * a, rel=1e-11, abs=1e-11)

    def test_degree(self):
        for n in range(9):
            coeffs = self.fam.coeffs(n)
            assert len(coeffs) == n + 1
            assert coeffs[-1] != 0.0

    def test_reduces_to_classical_gegenbauer(self):
        # alpha = -1/2 collapses onto the one-parameter family
        fam = GenGegenbauerFamily(Params(-0.5, 1.0))
        for n in range(7):
            got = fam.eval(n, 0.41)
            ref = classical_gegenbauer(n, 1.5, 0.41)
            assert got == pytest.approx(ref, rel=1e-11, abs=1e-11)

    def test_norms_closed_form_vs_quadrature(self):
        m = Measure.mu_beta_alpha(self.P.alpha, self.P.beta)
        for n in range(2):
            got = integrate_interval(lambda t, n=n: self.fam.eval(n, t) ** 2, m, 60)
            assert got == pytest.approx(self.fam.norm(n), rel=1e-9)

    def test_orthogonality(self):
        P = Params(0.4, 0.25)
        fam = GenGegenbauerFamily(P)
        m = Measure.mu_beta_alpha(P.alpha, P.beta)
        for n in range(9):
            for mm in range(9):
                got = integrate_interval(lambda t: fam.eval(n, t) * fam.eval(mm, t), m, 80)
                expect = fam.norm(n) if n == mm else 0.0
                assert abs(got - expect) <= 1e-8 * max(fam.norm(n), fam.norm(mm))

    def test_coeffs_match_eval(self):
        for n in range(9):
            c = self.fam.coeffs(n)
            for t in (-0.7, 0.2, 0.9):
                assert poly_eval(c, t) == pytest.approx(self.fam.eval(n, t),
                                                        rel=1e-11, abs=1e-11)

    def test_connection_closed_forms(self):
        # A_n, B_n per parity, against direct evaluation of both sides
        for (al, be, n, r) in ((0.5, 0.25, 3, 0.6), (0.2, 0.1, 4, -0.33),
                               (0.4, 0.1, 2, 0.8), (0.4, 0.1, 5, 0.15)):
            f = GenGegenbauerFamily(Params(al, be))
            up = f.raised()
            cc = f.connection(n)
            lhs = (al + be + 1.0) * (1.0 - r * r) * up.eval(n - 1, r)
            rhs = cc.A * f.eval(n - 1, r) - cc.B * f.eval(n + 1, r)
            assert lhs == pytest.approx(rhs, abs=1e-12)
            assert cc.A > 0.0 and cc.B >= 0.0

    def test_even_connection_values(self):
        # closed forms at even index: A_{2k}, B_{2k}
        al, be, k = 0.5, 0.25, 2
        cc = GenGegenbauerFamily(Params(al, be)).connection(2 * k)
        assert cc.A == pytest.approx((be + k) * (al + be + k + 1.0) / (al + be + 2 * k + 1.0))
        assert cc.B == pytest.approx(k * (al + k + 1.0) / (al + be + 2 * k + 1.0))

    def test_inverse_connection(self):
        for (al, be, n, t) in ((0.2, 0.1, 4, -0.33), (0.5, 0.25, 3, 0.6)):
            f = GenGegenbauerFamily(Params(al, be))
            assert f.eval(n, t) == pytest.approx(f.inverse_connection_value(n, t),
                                                 abs=1e-12)


class TestDunklOperator:
    def test_reduces_to_derivative_at_half(self):
        # p(t) = t^3 - t
        out = dunkl_apply_poly(-0.5, [0.0, -1.0, 0.0, 1.0])
        assert out == [-1.0, 0.0, 3.0]

    def test_even_polynomial_plain_derivative(self):
        out = dunkl_apply_poly(0.8, [2.0, 0.0, 0.0, 0.0, 1.0])
        assert out == [0.0, 0.0, 0.0, 4.0]

    def test_lowers_gegenbauer_index(self):
        al, be = 0.3, 0.6
        fam = GenGegenbauerFamily(Params(al, be))
        up = fam.raised()
        for n in range(1, 9):
            lhs = dunkl_apply_poly(al, fam.coeffs(n))
            rhs = [2.0 * (al + be + 1.0) * c for c in up.coeffs(n - 1)]
            rhs += [0.0] * (len(lhs) - len(rhs))
            scale = max(max(abs(v) for v in rhs), 1.0)
            assert max(abs(x - y) for x, y in zip(lhs, rhs)) <= 1e-12 * scale


class TestClassicalGegenbauer:
    def test_chebyshev_branch(self):
        t = 0.37
        assert classical_gegenbauer(0, 0.0, t) == 1.0
        for n in (1, 4, 7):
            assert classical_gegenbauer(n, 0.0, t) == pytest.approx(
                2.0 / n * chebyshev_t(n, t), rel=1e-14)

    def test_against_scipy(self):
        for n in range(8):
            for lam in (0.5, 1.0, 2.3):
                got = classical_gegenbauer(n, lam, 0.41)
                ref = float(sp.eval_gegenbauer(n, lam, 0.41))
                assert got == pytest.approx(ref, rel=1e-12, abs=1e-12)
