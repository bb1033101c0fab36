import math

import pytest
from hypothesis import given, settings, strategies as st

from biexp import qspec as qs
from biexp.orthopoly import jacobi_eval
from biexp.specfun import Params


@pytest.fixture(scope="module")
def ctx():
    return qs.QContext(0.5)


class TestQPochhammer:
    def test_empty_product(self):
        assert qs.qpochhammer(0.3, 0.5, 0) == 1.0

    def test_single_factor(self):
        assert qs.qpochhammer(0.5, 0.5, 1) == 0.5

    def test_infinite_stable_under_tolerance(self):
        # partial products stabilize below 1e-16 change
        q2 = 0.25
        p_inf = qs.qpochhammer(q2, q2)
        p, x = 1.0, q2
        for _ in range(300):
            p *= 1.0 - x
            x *= q2
        assert abs(p_inf - p) < 1e-16

    @given(st.integers(0, 10), st.integers(0, 10))
    @settings(max_examples=40, deadline=None)
    def test_splitting_identity(self, m, n):
        # (a;q)_{m+n} = (a;q)_m (a q^m; q)_n
        a, q = 0.37, 0.6
        lhs = qs.qpochhammer(a, q, m + n)
        rhs = qs.qpochhammer(a, q, m) * qs.qpochhammer(a * q ** m, q, n)
        assert lhs == pytest.approx(rhs, rel=1e-13, abs=1e-13)


class TestPhi21:
    def test_at_zero(self):
        assert qs.phi21(0.3, 0.4, 0.5, 0.5, 0.0) == 1.0

    def test_balanced_transformation(self):
        q = 0.5
        a, b, c, z = q, q ** 3, q ** 2, 0.3
        lhs = qs.phi21(a, b, c, q, z)
        rhs = (qs.qpochhammer(a * b * z / c, q) / qs.qpochhammer(z, q)
               * qs.phi21(c / a, c / b, c, q, a * b * z / c))
        assert abs(lhs - rhs) < 1e-13

    def test_terminating_equals_brute_force(self):
        q = 0.5
        a = q ** (-4)
        got = qs.phi21(a, 0.3, 0.7, q, 0.9)
        term, brute = 1.0, 1.0
        for k in range(4):
            term *= ((1.0 - a * q ** k) * (1.0 - 0.3 * q ** k)
                     / ((1.0 - 0.7 * q ** k) * (1.0 - q ** (k + 1)))) * 0.9
            brute += term
        assert got == pytest.approx(brute, rel=1e-14)

    def test_nonconvergent_flagged(self):
        with pytest.raises(ValueError):
            qs.phi21(0.3, 0.4, 0.5, 0.5, 1.7)


class TestQBessel:
    def test_small_argument_limit(self, ctx):
        nu = 0.7
        got = qs.qbessel3_ratio(nu, 1e-8, ctx.q2)
        exact = qs.qpochhammer(ctx.q2 ** (nu + 1.0), ctx.q2) / qs.qpochhammer(ctx.q2, ctx.q2)
        assert got == pytest.approx(exact, rel=1e-10)

    def test_grid_decay(self, ctx):
        # superexponential decay along the grid at the large end; the
        # elevated-precision path must resolve the cancellation
        q = ctx.q
        prev = 1.0
        for m in (5, 8, 12):
            v = abs(qs.qbessel3(1.3, q ** (-m), ctx.q2))
            assert v < prev
            prev = v
        assert prev < 1e-40

    def test_frozen_high_precision_value(self, ctx):
        # oracle: 300-digit mpmath summation (frozen)
        got = qs.qbessel3(1.3, 0.5 ** (-12), 0.25)
        assert got == pytest.approx(3.201290695e-52, rel=1e-8)

    def test_negative_argument(self, ctx):
        with pytest.raises(ValueError):
            qs.qbessel3(0.5, -1.0, ctx.q2)
        assert qs.qbessel3_ratio(0.5, -1.0, ctx.q2) == qs.qbessel3_ratio(0.5, 1.0, ctx.q2)

    def test_neumann_parity(self, ctx):
        for n in range(5):
            for m in (0, 1, 3):
                x = ctx.q ** m
                a = qs.q_neumann(ctx, 0.5, n, -x)
                b = qs.q_neumann(ctx, 0.5, n, x)
                assert a == pytest.approx((-1.0) ** n * b, rel=1e-13, abs=1e-300)


class TestJackson:
    def test_geometric(self, ctx):
        assert qs.jackson_integral(ctx, lambda t: 1.0, "unit").real == pytest.approx(1.0)

    def test_linear(self, ctx):
        got = qs.jackson_integral(ctx, lambda t: t, "unit").real
        assert got == pytest.approx(1.0 / (1.0 + ctx.q), rel=1e-14)

    def test_base_change_substitution(self, ctx):
        ctx2 = qs.QContext(ctx.q2)
        lhs = qs.jackson_integral(ctx2, lambda u: u * u, "unit").real
        rhs = (1.0 + ctx.q) * qs.jackson_integral(ctx, lambda x: x ** 5, "unit").real
        assert lhs == pytest.approx(rhs, abs=1e-15)

    def test_non_decay_flagged(self, ctx):
        with pytest.raises(qs.DecayError):
            qs.jackson_integral(ctx, lambda x: 1.0, "halfline")

    def test_domain_validation(self, ctx):
        with pytest.raises(ValueError):
            qs.jackson_integral(ctx, lambda x: x, "nope")


class TestQJacobiFamily:
    def setup_method(self):
        self.ctx = qs.QContext(0.5)
        self.P = Params(0.3, 0.2)
        self.fam = qs.QJacobiFamily(self.ctx, self.P)

    def test_p0(self):
        assert self.fam.little_p(0, 0.4) == 1.0

    def test_orthogonality_matrix(self):
        q = self.ctx.q
        q2 = self.ctx.q2
        gram = self.fam.gram_matrix_mp(5)
        for n in range(6):
            for m in range(6):
                if n == m:
                    exact = ((1.0 - q) / (1.0 - q ** (4 * n + 2 * self.P.ab + 2))
                             * qs.qpochhammer(q2 ** (n + 1.0), q2)
                             * qs.qpochhammer(q2 ** (self.P.ab + 1.0 + n), q2)
                             / (qs.qpochhammer(q2 ** (self.P.alpha + 1.0 + n), q2)
                                * qs.qpochhammer(q2 ** (self.P.beta + 1.0 + n), q2)))
                else:
                    exact = 0.0
                assert abs(gram[n][m] - exact) < 1e-12

    def test_norms_match_quadrature(self):
        for n in range(6):
            cf = self.fam.norm(n)
            qd = self.fam.norm_quadrature(n)
            assert cf == pytest.approx(qd, rel=1e-12)

    def test_printed_even_norm_carries_spurious_factor(self):
        # the even-index closed form as printed carries an extra infinite
        # product; multiplying it in must break agreement with quadrature
        extra = qs.qpochhammer(self.ctx.q2 ** (self.P.alpha + 1.0), self.ctx.q2)
        got = self.fam.norm(0) * extra
        assert abs(got - self.fam.norm_quadrature(0)) > 1e-2

    def test_qgegenbauer_parity(self):
        for n in range(8):
            t = self.ctx.q
            a = self.fam.qgegenbauer(n, -t)
            b = self.fam.qgegenbauer(n, t)
            assert a == pytest.approx((-1.0) ** n * b, rel=1e-12, abs=1e-15)

    def test_classical_limit(self):
        ctx = qs.QContext(0.999, k_min=-5, k_max=200)
        fam = qs.QJacobiFamily(ctx, self.P)
        got = fam.little_p(3, 0.4)
        ref = jacobi_eval(3, self.P.alpha, self.P.beta, 1.0 - 2.0 * 0.4)
        assert got == pytest.approx(ref, abs=5e-2)


class TestQKernelTransforms:
    def setup_method(self):
        self.ctx = qs.QContext(0.5)
        self.al = 0.3

    def test_kernel_at_zero(self):
        assert qs.q_dunkl_kernel(self.ctx, self.al, 0.0) == 1.0 + 0.0j

    def test_kernel_parity(self):
        for m in (0, 1, 2):
            x = self.ctx.q ** m
            e1 = qs.q_dunkl_kernel(self.ctx, self.al, x)
            e2 = qs.q_dunkl_kernel(self.ctx, self.al, -x)
            assert e2 == pytest.approx(e1.conjugate(), rel=1e-13)

    def test_hankel_self_inverse(self):
        q = self.ctx.q
        fgrid = lambda y: math.exp(-math.log(y) ** 2) if y > 0 else 0.0
        cache = {}

        def hf(y):
            k = round(math.log(y) / math.log(q))
            if k not in cache:
                cache[k] = qs.q_hankel(self.ctx, self.al, fgrid, y)
            return cache[k]
        for n in range(-2, 5):
            x = q ** n
            got = qs.q_hankel(self.ctx, self.al, hf, x)
            assert abs(got - fgrid(x)) < 1e-11

    def test_multiplication_formula(self):
        q = self.ctx.q
        u = lambda x: math.exp(-math.log(abs(x)) ** 2) if x != 0 else 0.0
        v = lambda x: abs(x) * math.exp(-math.log(abs(x)) ** 2) if x != 0 else 0.0
        cu, cv = {}, {}

        def fu(y):
            k = (round(math.log(abs(y)) / math.log(q)), y > 0)
            if k not in cu:
                cu[k] = qs.q_transform(self.ctx, self.al, u, y)
            return cu[k]

        def fv(y):
            k = (round(math.log(abs(y)) / math.log(q)), y > 0)
            if k not in cv:
                cv[k] = qs.q_transform(self.ctx, self.al, v, y)
            return cv[k]
        q2 = self.ctx.q2
        cq = qs.qpochhammer(q2 ** (self.al + 1.0), q2) / qs.qpochhammer(q2, q2)

        def msum(g):
            return qs.jackson_integral(self.ctx,
                                       lambda x: g(x) * abs(x) ** (2.0 * self.al + 1.0),
                                       "line") * cq / (2.0 * (1.0 - q))
        lhs = msum(lambda y: u(y) * fv(y))
        rhs = msum(lambda y: fu(y) * v(y))
        assert abs(lhs - rhs) < 1e-12


class TestQWeber:
    def setup_method(self):
        self.ctx = qs.QContext(0.5)
        self.P = Params(0.3, 0.2)

    def test_identity_tuples(self):
        for tup in ((0.4, 1.3, 2.1, 0, 1), (1.0, 1.3, 1.3, 1, 1),
                    (0.2, 0.7, 1.9, 2, 0), (-0.3, 1.1, 2.3, 0, 0),
                    (0.8, 2.0, 1.0, 2, 1), (1.5, 2.4, 1.6, 2, 2)):
            lhs = qs.qweber_lhs(self.ctx, *tup)
            rhs = qs.qweber_rhs(self.ctx, *tup)
            assert abs(lhs - rhs) < 1e-12

    def test_neumann_orthogonality_specialization(self):
        q = self.ctx.q
        al = 0.3
        got = qs.qweber_lhs(self.ctx, 1.0, al + 3.0, al + 3.0, 1, 1)
        assert got == pytest.approx((1.0 - q) / (1.0 - q ** (2 * al + 6.0)), abs=1e-12)
        cross = qs.qweber_lhs(self.ctx, 1.0, al + 3.0, al + 1.0, 1, 0)
        assert abs(cross) < 1e-12

    def test_lemma_closed_forms(self):
        for (n, m) in ((0, 1), (1, 1), (2, 2), (1, 0)):
            assert abs(qs.q_i_minus(self.ctx, self.P, n, m)
                       - qs.q_i_minus_closed(self.ctx, self.P, n, m)) < 1e-12
            assert abs(qs.q_i_plus(self.ctx, self.P, n, m)
                       - qs.q_i_plus_closed(self.ctx, self.P, n, m)) < 1e-12

    def test_vanishing_branch(self):
        assert abs(qs.q_i_minus(self.ctx, self.P, 1, -1)) < 1e-13

    def test_window_validation(self):
        with pytest.raises(ValueError):
            qs.qweber_lhs(self.ctx, 5.0, 1.0, 1.0, 0, 0)
        with pytest.raises(ValueError):
            qs.q_i_plus(self.ctx, Params(0.3, 1.2), 0, 1)


class TestQPlaneWave:
    def setup_method(self):
        self.ctx = qs.QContext(0.5)
        self.P = Params(0.3, 0.2)

    def test_ratio_factor_route_matches_kernel(self):
        q = self.ctx.q
        for (mx, mt) in ((0, 1), (1, 2), (2, 1), (3, 3)):
            x, t = q ** mx, q ** mt
            got = qs.q_planewave_partial_sum(self.ctx, self.P, x, t, 30, route="lemma")
            ker = qs.q_dunkl_kernel(self.ctx, self.P.alpha, x * t)
            assert abs(got - ker) < 1e-10

    def test_displayed_route_does_not_match(self):
        # the plainly displayed coefficients miss the q^{-[n/2] beta} factor;
        # the harness reports the matching route rather than guessing
        q = self.ctx.q
        x, t = 1.0, q
        ker = qs.q_dunkl_kernel(self.ctx, self.P.alpha, x * t)
        plain = qs.q_planewave_partial_sum(self.ctx, self.P, x, t, 30, route="plain")
        lemma = qs.q_planewave_partial_sum(self.ctx, self.P, x, t, 30, route="lemma")
        assert abs(plain - ker) > 1e-3
        assert abs(lemma - ker) < 1e-12

    def test_cauchy_in_truncation(self):
        q = self.ctx.q
        s30 = qs.q_planewave_partial_sum(self.ctx, self.P, 1.0, q, 30, route="lemma")
        s35 = qs.q_planewave_partial_sum(self.ctx, self.P, 1.0, q, 35, route="lemma")
        assert abs(s35 - s30) < q ** (30 * 29 / 4.0)

    def test_forward_transform_coefficient(self):
        ctx, P = self.ctx, self.P
        q = ctx.q
        ab = P.ab
        fam = qs.QJacobiFamily(ctx, P)
        k, t = 2, q
        got = qs.q_transform(ctx, P.alpha, lambda x: qs.q_neumann(ctx, ab, k, x), t)
        qk = fam.weight(t) * fam.qgegenbauer(k, t) / fam.norm(k)
        closed = ((-1j) ** k * q ** ((k // 2) * P.beta) / (1.0 - ctx.q2 ** (k + ab + 1.0))
                  * qs.qpochhammer(ctx.q2 ** (ab + 1.0), ctx.q2)
                  / qs.qpochhammer(ctx.q2, ctx.q2) * qk)
        assert abs(got - closed) < 1e-11

    def test_ultraspherical_specialization(self):
        q = self.ctx.q
        P2 = Params(-0.5, 0.2)
        got = qs.q_planewave_partial_sum(self.ctx, P2, 1.0, q, 30, route="lemma")
        ker = qs.q_dunkl_kernel(self.ctx, -0.5, q)
        assert abs(got - ker) < 1e-10

    def test_grid_argument_validation(self):
        with pytest.raises(ValueError):
            qs.q_planewave_partial_sum(self.ctx, self.P, 1.0, 0.3, 0)
