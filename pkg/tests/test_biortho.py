import math

import numpy as np
import pytest

from biexp import biortho as bo
from biexp.orthopoly import GenGegenbauerFamily
from biexp.quad import Measure, integrate_bessel_product, integrate_interval
from biexp.specfun import Params, bessel_j_ratio, bessel_zeros, dunkl_kernel, gamma


class TestFourierSystem:
    def test_coefficient_closed_form(self):
        ks, bio = bo.fourier_system()
        ser = bo.expand_kernel(ks, bio, 2.7, 4)
        for n in range(-4, 5):
            assert abs(ser.coeff(n) - bo.fourier_sampling_coeff(n, 2.7)) < 1e-12

    def test_removable_singularity(self):
        assert bo.fourier_sampling_coeff(3, 3.0 * math.pi) == pytest.approx(
            1.0 / math.sqrt(math.pi), abs=1e-14)

    def test_gram_identity(self):
        ks, bio = bo.fourier_system()
        for n in range(-3, 4):
            for m in range(-3, 4):
                g = bio.gram(n, m)
                assert abs(g - (1.0 if n == m else 0.0)) < 1e-13

    def test_multiplication_formula(self):
        ks, bio = bo.fourier_system()
        f = lambda x: x * x * math.exp(-x * x / 2.0)
        g = lambda x: (1.0 + x) * math.exp(-x * x / 2.0)
        assert ks.multiplication_residual(f, g, radius=10.0) < 1e-8

    def test_multiplication_formula_weighted_kernel(self):
        ks, bio, dss = bo.dunkl_system(0.5, 4)
        f = lambda x: x * x * math.exp(-x * x / 2.0)
        g = lambda x: (1.0 + x) * math.exp(-x * x / 2.0)
        assert ks.multiplication_residual(f, g, radius=10.0) < 1e-8

    def test_series_tail_invariant(self):
        ks, bio = bo.fourier_system()
        ser = bo.expand_kernel(ks, bio, 2.7, 5)
        assert ser.tail_estimate >= abs(ser.coeffs[-1]) - 1e-18


class TestGegenbauerSystem:
    def test_coefficient_closed_form(self):
        ks, bio = bo.gegenbauer_system(1.0)
        ser = bo.expand_kernel(ks, bio, 3.1, 4)
        for n in range(4):
            assert abs(ser.coeff(n) - bo.gegenbauer_coeff(1.0, n, 3.1)) < 1e-11

    def test_partial_sum_converges_to_kernel(self):
        ks, bio = bo.gegenbauer_system(1.0)
        ser = bo.expand_kernel(ks, bio, 2.0, 25)
        assert abs(ser.partial_sum(0.3) - ks.kernel(2.0, 0.3)) < 1e-12

    def test_chebyshev_branch(self):
        ks, bio = bo.gegenbauer_system(0.0)
        ser = bo.expand_kernel(ks, bio, 2.0, 25)
        assert abs(ser.partial_sum(0.3) - ks.kernel(2.0, 0.3)) < 1e-12
        assert abs(ser.coeff(1) - bo.gegenbauer_coeff(0.0, 1, 2.0)) < 1e-12

    def test_st_pair_biorthogonality(self):
        g = bo.st_gram_gegenbauer(1.0, 4)
        assert np.max(np.abs(g - np.eye(5))) < 1e-6


class TestPlaneWave:
    def test_classical_matches_exponential(self):
        for beta in (0.5, 1.0, 2.3):
            for x in (-5.0, 0.5, 2.0):
                for t in (-0.9, 0.3):
                    got = bo.classical_planewave(beta, x, t, 40)
                    assert abs(got - complex(math.cos(x * t), math.sin(x * t))) < 1e-10

    def test_dunkl_matches_kernel(self):
        for (al, be) in ((-0.5, -0.2), (0.0, 0.3), (0.7, 0.3)):
            P = Params(al, be)
            for x in (-2.0, 0.5, 5.0):
                for t in (-0.3, 0.9):
                    got = bo.planewave_partial_sum(P, x, t, 40)
                    assert abs(got - dunkl_kernel(al, x * t)) < 1e-9

    def test_half_integer_chain(self):
        P = Params(-0.5, 0.3)
        for x in (-2.0, 5.0):
            for t in (0.3, -0.9):
                a = bo.planewave_partial_sum(P, x, t, 40)
                b = bo.classical_planewave(0.8, x, t, 40)
                c = complex(math.cos(x * t), math.sin(x * t))
                assert abs(a - b) < 1e-12
                assert abs(a - c) < 1e-10

    def test_at_origin(self):
        P = Params(0.3, 0.2)
        assert bo.planewave_partial_sum(P, 0.0, 0.3, 5) == pytest.approx(1.0, abs=1e-12)

    @pytest.mark.parametrize("al,be", [(-0.3, 0.4), (0.7, -0.2)])
    def test_kernel_product_symmetry(self, al, be):
        # the expansion depends on x and t through their product
        P = Params(al, be)
        for (x, t) in ((2.0, 0.45), (-3.0, 0.8)):
            a = bo.planewave_partial_sum(P, x, t, 30)
            b = bo.planewave_partial_sum(P, -x, -t, 30)
            assert a == pytest.approx(b, rel=1e-12, abs=1e-12)

    def test_quotient_parity(self):
        for n in range(6):
            for x in (0.7, 3.1):
                assert bo.neumann_fn(0.5, n, -x) == pytest.approx(
                    (-1.0) ** n * bo.neumann_fn(0.5, n, x), rel=1e-14, abs=1e-16)

    def test_domain(self):
        P = Params(0.3, 0.2)
        with pytest.raises(ValueError):
            bo.planewave_partial_sum(P, 1.0, 1.2, 10)
        with pytest.raises(ValueError):
            bo.planewave_partial_sum(P, 1.0, 0.5, 0)


class TestDunklSampling:
    def setup_method(self):
        self.al = 0.5
        self.table = bessel_zeros(self.al + 1.0, 60)

    def test_interpolation_property(self):
        f = bo.PWFunction(lambda t: 1.0, self.al)
        s3 = self.table.signed(3)
        got = bo.dunkl_sampling_sum(self.al, f, s3, 40, self.table)
        assert abs(got - f.eval(s3)) < 1e-12

    def test_convergence_ladder(self):
        f = bo.PWFunction(lambda t: (1.0 - t * t) ** 2, self.al)
        errs = []
        for N in (25, 50):
            e = max(abs(bo.dunkl_sampling_sum(self.al, f, x, N, self.table) - f.eval(x))
                    for x in (0.3, 1.7, 4.2))
            errs.append(e)
        assert errs[1] < errs[0]

    def test_node_system_orthonormal(self):
        ks, bio, dss = bo.dunkl_system(self.al, 8)
        for n in range(-4, 5):
            for m in range(-4, 5):
                assert abs(bio.gram(n, m) - (1.0 if n == m else 0.0)) < 1e-8

    def test_normalization_constant(self):
        ks, bio, dss = bo.dunkl_system(self.al, 4)
        d0 = 2.0 ** (0.5 * (self.al + 1.0)) * math.sqrt(gamma(self.al + 2.0))
        assert dss.d(0) == pytest.approx(d0, rel=1e-14)
        val = integrate_interval(lambda t: abs(dss.e(0, t)) ** 2,
                                 Measure.mu_alpha(self.al), 60)
        assert val == pytest.approx(1.0, abs=1e-10)

    def test_coefficient_quadrature_vs_closed(self):
        ks, bio, dss = bo.dunkl_system(0.5, 8)
        ser = bo.expand_kernel(ks, bio, 1.3, 4)
        assert abs(ser.coeff(2) - bo.dunkl_sampling_coeff(dss, 2, 1.3)) < 1e-8

    def test_kernel_expansion_converges(self):
        ks, bio, dss = bo.dunkl_system(0.5, 30)
        vals = []
        for N in (6, 24):
            ser = bo.expand_kernel(ks, bio, 1.3, N)
            vals.append(abs(ser.partial_sum(0.55) - dunkl_kernel(0.5, 1.3 * 0.55)))
        assert vals[1] < vals[0]

    def test_grouped_term_maps(self):
        # per-index identity behind the grouped forms: the two signed-node
        # terms of the full series merge into one half-line term
        from biexp.specfun import bessel_i_norm_imag
        al = self.al
        f = bo.PWFunction(lambda t: t * (1.0 - t * t), al)
        x = 1.9
        i1x = bessel_i_norm_imag(al + 1.0, x)
        for n in range(1, 6):
            s = self.table.signed(n)
            i0 = bessel_i_norm_imag(al, s)
            pair = (f.eval(s) * x * i1x / (2 * (al + 1.0) * i0 * (x - s))
                    + f.eval(-s) * x * i1x / (2 * (al + 1.0) * i0 * (x + s)))
            grouped = f.eval(s) * i1x / ((al + 1.0) * i0) * x * s / (x * x - s * s)
            assert abs(pair - grouped) < 1e-15 * max(1.0, abs(pair))

    def test_wrong_odd_factor_fails_reconstruction(self):
        # negative control: replacing the x*s_n algebraic factor by s_n^2
        # (a printed variant) breaks the odd-extension reconstruction
        from biexp.specfun import bessel_i_norm_imag
        al = self.al
        f = bo.PWFunction(lambda t: t * (1.0 - t * t) ** 2, al)
        x = 1.9
        i1x = bessel_i_norm_imag(al + 1.0, x)
        wrong = 0.0 + 0.0j
        for n in range(1, 41):
            s = self.table.signed(n)
            i0 = bessel_i_norm_imag(al, s)
            wrong += f.eval(s) * i1x / ((al + 1.0) * i0) * s * s / (x * x - s * s)
        good = bo.sampling_odd_sum(al, f, x, 40, self.table)
        fx = f.eval(x)
        assert abs(good - fx) < 1e-6
        assert abs(wrong - fx) > 1e-3

    def test_grouped_forms(self):
        feven = bo.PWFunction(lambda t: (1.0 - t * t) ** 2, self.al)
        fodd = bo.PWFunction(lambda t: t * (1.0 - t * t) ** 2, self.al)
        x = 1.9
        full_e = bo.dunkl_sampling_sum(self.al, feven, x, 40, self.table)
        full_o = bo.dunkl_sampling_sum(self.al, fodd, x, 40, self.table)
        assert abs(bo.sampling_even_sum(self.al, feven, x, 40, self.table) - full_e) < 1e-12
        assert abs(bo.sampling_odd_sum(self.al, fodd, x, 40, self.table) - full_o) < 1e-12


class TestNeumannSystem:
    def setup_method(self):
        self.P = Params(0.3, 0.2)

    def test_gram(self):
        ks, bio, fam = bo.neumann_system(self.P)
        for n in range(6):
            for m in range(6):
                assert abs(bio.gram(n, m) - (1.0 if n == m else 0.0)) < 1e-8

    def test_coefficients_delta_pattern(self):
        fam = GenGegenbauerFamily(self.P)
        f = bo.PWFunction(lambda t: fam.eval(0, t) / fam.norm(0), self.P.alpha,
                          weight_pow=self.P.beta)
        ser = bo.fourier_neumann_coeffs(self.P, f, 4)
        ab = self.P.ab
        assert abs(ser.coeffs[0] - 2.0 ** (ab + 1.0) * gamma(ab + 1.0)) < 1e-6
        assert max(abs(c) for c in ser.coeffs[1:]) < 1e-6

    def test_requires_beta_below_one(self):
        P = Params(0.3, 1.2)
        f = bo.PWFunction(lambda t: 1.0, P.alpha)
        with pytest.raises(ValueError):
            bo.fourier_neumann_coeffs(P, f, 3)

    def test_reconstruction_improves(self):
        f = bo.PWFunction(lambda t: (1.0 - t * t) * (0.3 + t), self.P.alpha)
        sups = []
        for N in (6, 12):
            ser = bo.fourier_neumann_coeffs(self.P, f, N)
            sups.append(max(abs(bo.neumann_partial_sum(self.P, ser, x) - f.eval(x))
                            for x in np.linspace(-5, 5, 11)))
        assert sups[1] < sups[0]

    def test_forward_transform_identity(self):
        # transform of a Bessel quotient lands on the weighted polynomial
        P = self.P
        ab = P.ab
        fam = GenGegenbauerFamily(P)
        t = 0.5
        for k in (2, 3):
            if k % 2 == 0:
                r = integrate_bessel_product(P.beta, ab + k + 1.0, P.alpha, t)
                got = complex(t ** (-P.alpha) * r.value)
            else:
                r = integrate_bessel_product(P.beta, (P.alpha + 1.0) + P.beta + k,
                                             P.alpha + 1.0, t)
                got = -1j * t * (t ** (-(P.alpha + 1.0)) * r.value)
            qk = (1.0 - t * t) ** P.beta * fam.eval(k, t) / fam.norm(k)
            closed = (-1j) ** k / (2.0 ** (ab + 1.0) * gamma(ab + 1.0) * (ab + k + 1.0)) * qk
            assert abs(got - closed) < 1e-6


class TestHankelSide:
    def test_corollary_vs_bessel(self):
        P = Params(0.3, 0.2)
        got = bo.hankel_corollary_sum(P, 1.5, 0.5, 40)
        assert got == pytest.approx(bessel_j_ratio(0.3, 0.75), abs=1e-10)

    def test_real_part_construction(self):
        al, x, t = 0.5, 2.0, 0.6
        e = dunkl_kernel(al, x * t)
        lhs = (e + e.conjugate()).real / (2.0 ** (al + 1.0) * gamma(al + 1.0))
        assert lhs == pytest.approx(bessel_j_ratio(al, x * t), abs=1e-10)

    def test_small_t_limit(self):
        P = Params(0.3, 0.2)
        got = bo.hankel_corollary_sum(P, 1.5, 1e-4, 40)
        assert got == pytest.approx(1.0 / (2.0 ** 0.3 * gamma(1.3)), abs=1e-8)

    def test_domain(self):
        P = Params(0.3, 0.2)
        with pytest.raises(ValueError):
            bo.hankel_corollary_sum(P, -1.0, 0.5, 10)


class TestKernelNorm:
    def test_against_quadrature(self):
        al, x = 0.5, 2.2
        quad_val = integrate_interval(lambda r: abs(dunkl_kernel(al, x * r)) ** 2,
                                      Measure.mu_alpha(al), 80)
        assert bo.kernel_norm_sq(al, x) == pytest.approx(quad_val, abs=1e-9)

    def test_half_integer_constant(self):
        # in the weighted normalization the constant is sqrt(2/pi); the
        # Lebesgue-normalized classical kernel squares to 1/pi instead
        for x in (0.3, 1.7, 6.0):
            assert bo.kernel_norm_sq(-0.5, x) == pytest.approx(
                math.sqrt(2.0 / math.pi), abs=1e-12)

    def test_at_zero_equals_total_mass(self):
        al = 0.7
        assert bo.kernel_norm_sq(al, 0.0) == pytest.approx(
            1.0 / (2.0 ** (al + 1.0) * gamma(al + 2.0)), rel=1e-13)


class TestPWFunction:
    def test_polynomial_density_accuracy(self):
        # oracle values computed with 30-digit quadrature of the defining
        # integral (frozen)
        f = bo.PWFunction(lambda t: (1.0 - t * t) ** 2, 0.5)
        assert f.eval(0.3) == pytest.approx(0.060487869620824489241, abs=1e-14)
        assert f.eval(4.2) == pytest.approx(0.020416249497866858475, abs=1e-14)

    def test_cache(self):
        f = bo.PWFunction(lambda t: 1.0, 0.5)
        v1 = f.eval(1.0)
        v2 = f.eval(1.0)
        assert v1 == v2
