"""Named verification suites.

Each suite runs a fixed, deterministic grid of identity checks and returns
CheckReports in registry order.  Suites accept a few overrides (alpha,
beta, q, terms, tol, k_max); anything not overridden uses the defaults
baked in here, so two runs of the same suite produce identical values.
"""

from __future__ import annotations

import math
import time
from typing import Callable

import numpy as np

from . import biortho as bo
from . import qspec as qs
from . import spectrum as spe
from .orthopoly import GenGegenbauerFamily, dunkl_apply_poly, jacobi_eval
from .quad import Measure, integrate_bessel_product, integrate_interval
from .report import CheckReport, SuiteResult, make_check
from .specfun import (Params, bessel_j_ratio, bessel_zeros, dunkl_kernel,
                      gamma, lommel_h)

__all__ = ["SUITE_NAMES", "run_suite", "list_suites"]

# calibrated once against the quadrature oracle, then frozen: sampling
# reconstruction sup-error at N = 400 for u = (1-t^2)^2, alpha = 0.5
SAMPLING_N400_THRESHOLD = 1e-14

_X_GRID = (-5.0, -2.0, -0.5, 0.5, 2.0, 5.0)
_T_GRID = (-0.9, -0.3, 0.3, 0.9)


def _timed(checks: list, cid: str, fn: Callable[[], tuple], tol: float) -> None:
    t0 = time.perf_counter()
    lhs, rhs = fn()
    ms = (time.perf_counter() - t0) * 1000.0
    checks.append(make_check(cid, lhs, rhs, tol, runtime_ms=ms))


def _flag(checks: list, cid: str, ok: bool, detail: float = 0.0) -> None:
    # boolean-style check encoded in the numeric schema: lhs = 1 iff ok
    checks.append(make_check(cid, 1.0 if ok else detail, 1.0, 0.0))


# ---------------------------------------------------------------------------
# planewave
# ---------------------------------------------------------------------------

def suite_planewave(ov: dict) -> list:
    checks: list = []
    N = int(ov.get("terms", 40))
    tol_classical = ov.get("tol", 1e-10)
    for beta in (0.5, 1.0, 2.3):
        def worst(beta=beta):
            w = 0.0
            for x in _X_GRID:
                for t in _T_GRID:
                    got = bo.classical_planewave(beta, x, t, N)
                    w = max(w, abs(got - complex(math.cos(x * t), math.sin(x * t))))
            return w, 0.0
        _timed(checks, f"planewave/classical/beta={beta}", worst, tol_classical)
    tol_dunkl = ov.get("tol", 1e-9)
    for al in (-0.5, 0.0, 0.7):
        for be in (-0.2, 0.3):
            def worst(al=al, be=be):
                P = Params(al, be)
                w = 0.0
                for x in _X_GRID:
                    for t in _T_GRID:
                        got = bo.planewave_partial_sum(P, x, t, N)
                        w = max(w, abs(got - dunkl_kernel(al, x * t)))
                return w, 0.0
            _timed(checks, f"planewave/dunkl/alpha={al}/beta={be}", worst, tol_dunkl)
    for be in (-0.2, 0.3):
        def chain(be=be):
            P = Params(-0.5, be)
            w = 0.0
            for x in _X_GRID:
                for t in _T_GRID:
                    w = max(w, abs(bo.planewave_partial_sum(P, x, t, N)
                                   - bo.classical_planewave(be + 0.5, x, t, N)))
            return w, 0.0
        _timed(checks, f"planewave/chain-halfint/beta={be}", chain, 1e-12)

    def parity():
        w = 0.0
        for n in range(6):
            for x in (0.7, 2.3, 4.9):
                w = max(w, abs(bo.neumann_fn(0.5, n, -x)
                               - (-1.0) ** n * bo.neumann_fn(0.5, n, x)))
        return w, 0.0
    _timed(checks, "planewave/bessel-quotient-parity", parity, 1e-14)

    def at_zero():
        P = Params(ov.get("alpha", 0.3), ov.get("beta", 0.2))
        return bo.planewave_partial_sum(P, 0.0, 0.3, 5), 1.0
    _timed(checks, "planewave/x=0-normalization", at_zero, 1e-12)
    return checks


# ---------------------------------------------------------------------------
# dunkl-sampling
# ---------------------------------------------------------------------------

def suite_dunkl_sampling(ov: dict) -> list:
    checks: list = []
    al = ov.get("alpha", 0.5)
    table = bessel_zeros(al + 1.0, 400)
    f = bo.PWFunction(lambda t: (1.0 - t * t) ** 2, al)
    xs = (0.3, 1.7, 4.2)
    fx = {x: f.eval(x) for x in xs}

    def interp():
        s3 = table.signed(3)
        return bo.dunkl_sampling_sum(al, f, s3, 50, table), f.eval(s3)
    _timed(checks, "sampling/interpolation-at-node", interp, 1e-12)

    errs = {}
    for Ns in (50, 100, 200, 400):
        t0 = time.perf_counter()
        errs[Ns] = max(abs(bo.dunkl_sampling_sum(al, f, x, Ns, table) - fx[x]) for x in xs)
        ms = (time.perf_counter() - t0) * 1000.0
        checks.append(make_check(f"sampling/sup-error/N={Ns}", errs[Ns], 0.0, 1e-9,
                                 runtime_ms=ms))
    _flag(checks, "sampling/error-strictly-decreasing",
          errs[50] > errs[100] > errs[200] > errs[400])
    _flag(checks, "sampling/N400-quarter-of-N100", errs[400] < 0.25 * errs[100])
    checks.append(make_check("sampling/N400-threshold", errs[400], 0.0,
                             SAMPLING_N400_THRESHOLD))

    def gram():
        ks, bio, dss = bo.dunkl_system(al, 8)
        w = 0.0
        for n in range(-6, 7):
            for m in range(-6, 7):
                w = max(w, abs(bio.gram(n, m) - (1.0 if n == m else 0.0)))
        return w, 0.0
    _timed(checks, "sampling/node-kernel-orthonormality", gram, 1e-8)

    def e0_norm():
        ks, bio, dss = bo.dunkl_system(al, 4)
        val = integrate_interval(lambda t: abs(dss.e(0, t)) ** 2,
                                 Measure.mu_alpha(al), 80)
        return val, 1.0
    _timed(checks, "sampling/e0-normalization", e0_norm, 1e-10)

    def coeff_closed():
        ks, bio, dss = bo.dunkl_system(0.5, 8)
        ser = bo.expand_kernel(ks, bio, 1.3, 4)
        return ser.coeff(2), bo.dunkl_sampling_coeff(dss, 2, 1.3)
    _timed(checks, "sampling/coefficient-closed-form", coeff_closed, 1e-8)

    def fourier_nodes():
        return bo.fourier_sampling_coeff(3, 3.0 * math.pi), 1.0 / math.sqrt(math.pi)
    _timed(checks, "sampling/classical-coefficient-at-node", fourier_nodes, 1e-12)

    def fourier_quad():
        ks, bio = bo.fourier_system()
        ser = bo.expand_kernel(ks, bio, 2.7, 3)
        w = max(abs(ser.coeff(n) - bo.fourier_sampling_coeff(n, 2.7))
                for n in range(-3, 4))
        return w, 0.0
    _timed(checks, "sampling/classical-coefficient-quadrature", fourier_quad, 1e-10)

    def norm_closed():
        x = 2.2
        quad_val = integrate_interval(lambda r: abs(dunkl_kernel(al, x * r)) ** 2,
                                      Measure.mu_alpha(al), 80)
        return bo.kernel_norm_sq(al, x), quad_val
    _timed(checks, "sampling/kernel-norm-closed-form", norm_closed, 1e-9)
    return checks


# ---------------------------------------------------------------------------
# fourier-neumann
# ---------------------------------------------------------------------------

def suite_fourier_neumann(ov: dict) -> list:
    checks: list = []
    P = Params(ov.get("alpha", 0.3), ov.get("beta", 0.2))
    ab = P.ab

    def gram():
        ks, bio, fam = bo.neumann_system(P)
        w = 0.0
        for n in range(9):
            for m in range(9):
                w = max(w, abs(bio.gram(n, m) - (1.0 if n == m else 0.0)))
        return w, 0.0
    _timed(checks, "neumann/biorthogonality-gram", gram, 1e-8)

    fam = GenGegenbauerFamily(P)

    def forward(k: int, t: float):
        if k % 2 == 0:
            r = integrate_bessel_product(P.beta, ab + k + 1.0, P.alpha, t)
            got = complex(t ** (-P.alpha) * r.value)
        else:
            r = integrate_bessel_product(P.beta, (P.alpha + 1.0) + P.beta + k, P.alpha + 1.0, t)
            got = -1j * t * (t ** (-(P.alpha + 1.0)) * r.value)
        qk = (1.0 - t * t) ** P.beta * fam.eval(k, t) / fam.norm(k)
        closed = (-1j) ** k / (2.0 ** (ab + 1.0) * gamma(ab + 1.0) * (ab + k + 1.0)) * qk
        return got, closed

    for k in (2, 3):
        _timed(checks, f"neumann/forward-transform/k={k}",
               lambda k=k: forward(k, 0.5), 1e-6)

    def jfn_orth_diag():
        al = 0.4
        r = integrate_bessel_product(1.0, al + 2.0, al + 2.0, 1.0)
        got = 2.0 * r.value / (2.0 ** (al + 1.0) * gamma(al + 1.0))
        return got, 1.0 / (2.0 ** (al + 1.0) * gamma(al + 1.0) * (al + 2.0))
    _timed(checks, "neumann/quotient-orthogonality-diagonal", jfn_orth_diag, 1e-6)

    def jfn_orth_off():
        r = integrate_bessel_product(1.0, 0.4 + 3.0, 0.4 + 1.0, 1.0)
        return r.value, 0.0
    _timed(checks, "neumann/quotient-orthogonality-offdiag", jfn_orth_off, 1e-8)

    def delta():
        fq0 = bo.PWFunction(lambda t: fam.eval(0, t) / fam.norm(0), P.alpha,
                            weight_pow=P.beta)
        ser = bo.fourier_neumann_coeffs(P, fq0, 5)
        off = max(abs(c) for c in ser.coeffs[1:])
        return off, 0.0
    _timed(checks, "neumann/coefficient-delta-pattern", delta, 1e-6)

    def recon():
        f2 = bo.PWFunction(lambda t: (1.0 - t * t) * (0.3 + t), P.alpha)
        sups = []
        for Ns in (6, 12):
            ser = bo.fourier_neumann_coeffs(P, f2, Ns)
            sups.append(max(abs(bo.neumann_partial_sum(P, ser, x) - f2.eval(x))
                            for x in np.linspace(-5.0, 5.0, 11)))
        return (1.0 if sups[1] < sups[0] else 0.0), 1.0
    _timed(checks, "neumann/reconstruction-error-decreasing", recon, 0.0)

    def st_gram():
        g = bo.st_gram_gegenbauer(1.0, 4)
        return np.max(np.abs(g - np.eye(5))), 0.0
    _timed(checks, "neumann/st-pair-biorthogonality", st_gram, 1e-6)
    return checks


# ---------------------------------------------------------------------------
# hankel
# ---------------------------------------------------------------------------

def suite_hankel(ov: dict) -> list:
    checks: list = []

    def corollary():
        P = Params(0.3, 0.2)
        got = bo.hankel_corollary_sum(P, 1.5, 0.5, 40)
        return got, bessel_j_ratio(0.3, 1.5 * 0.5)
    _timed(checks, "hankel/even-expansion-vs-bessel", corollary, 1e-10)

    def realpart():
        al, x, t = 0.5, 2.0, 0.6
        e = dunkl_kernel(al, x * t)
        lhs = (e + e.conjugate()) / (2.0 ** (al + 1.0) * gamma(al + 1.0))
        return lhs, bessel_j_ratio(al, x * t)
    _timed(checks, "hankel/kernel-real-part-construction", realpart, 1e-10)

    def smallt():
        P = Params(0.3, 0.2)
        got = bo.hankel_corollary_sum(P, 1.5, 1e-4, 40)
        return got, 1.0 / (2.0 ** 0.3 * gamma(1.3))
    _timed(checks, "hankel/t-to-zero-limit", smallt, 1e-8)

    al = 0.5
    table = bessel_zeros(al + 1.0, 60)

    def even_group():
        f = bo.PWFunction(lambda t: (1.0 - t * t) ** 2, al)  # even density -> even f
        x = 1.9
        full = bo.dunkl_sampling_sum(al, f, x, 50, table)
        grouped = bo.sampling_even_sum(al, f, x, 50, table)
        return grouped, full
    _timed(checks, "hankel/even-grouped-equals-full", even_group, 1e-12)

    def odd_group():
        f = bo.PWFunction(lambda t: t * (1.0 - t * t) ** 2, al)  # odd f
        x = 1.9
        full = bo.dunkl_sampling_sum(al, f, x, 50, table)
        grouped = bo.sampling_odd_sum(al, f, x, 50, table)
        return grouped, full
    _timed(checks, "hankel/odd-grouped-equals-full", odd_group, 1e-12)

    def odd_reconstructs():
        f = bo.PWFunction(lambda t: t * (1.0 - t * t) ** 2, al)
        x = 1.9
        big = bessel_zeros(al + 1.0, 200)
        return bo.sampling_odd_sum(al, f, x, 200, big), f.eval(x)
    _timed(checks, "hankel/odd-grouped-reconstructs", odd_reconstructs, 1e-8)

    def norm_half():
        return bo.kernel_norm_sq(-0.5, 1.7), math.sqrt(2.0 / math.pi)
    _timed(checks, "hankel/norm-constant-at-half-integer", norm_half, 1e-12)

    def norm_zero():
        al2 = 0.7
        return bo.kernel_norm_sq(al2, 0.0), 1.0 / (2.0 ** (al2 + 1.0) * gamma(al2 + 2.0))
    _timed(checks, "hankel/norm-at-zero", norm_zero, 1e-13)
    return checks


# ---------------------------------------------------------------------------
# spectrum
# ---------------------------------------------------------------------------

def suite_spectrum(ov: dict) -> list:
    checks: list = []
    P = Params(ov.get("alpha", 0.4), ov.get("beta", 0.1))
    k_max = int(ov.get("k_max", 3))
    N = int(ov.get("terms", 80))
    prob = spe.SpectralProblem(P, N, bessel_zeros(P.ab + 1.0, max(8, k_max)))
    ab = P.ab

    for k in range(1, k_max + 1):
        for sign in (1, -1):
            _timed(checks, f"spectrum/eigen-residual/k={k}/sign={sign:+d}",
                   lambda k=k, sign=sign: (spe.eigen_residual(prob, k, sign, N), 0.0),
                   1e-6)
    for k in range(1, k_max + 1):
        def series_closed(k=k):
            w = 0.0
            for t in (-0.8, -0.3, 0.1, 0.5, 0.9):
                s, c = spe.eigenfunction(prob, k, 1, t, 60)
                w = max(w, abs(s - c))
            return w, 0.0
        _timed(checks, f"spectrum/series-vs-closed/k={k}", series_closed, 1e-8)

    for k in range(1, k_max + 1):
        def jh(k=k):
            # worst pair over n <= 10: the Bessel value at a shifted order
            # against the Lommel-polynomial combination; the polynomial side
            # is evaluated in exact-precision arithmetic so the row measures
            # the identity, not the float recurrence's conditioning
            import mpmath as mp
            j = prob.zero(k)
            jab = bessel_j_ratio(ab, j) * j ** ab
            worst = (0.0, 0.0, 0.0)
            with mp.workdps(50):
                w = 1.0 / mp.mpf(j)
                hm, hc = mp.mpf(0), mp.mpf(1)
                for n in range(1, 11):
                    lhs = bessel_j_ratio(ab + n + 1.0, j) * j ** (ab + n + 1.0)
                    rhs = -float(hc) * jab
                    if abs(lhs - rhs) >= worst[0]:
                        worst = (abs(lhs - rhs), lhs, rhs)
                    hm, hc = hc, 2 * (n - 1 + mp.mpf(ab) + 2) * w * hc - hm
            return worst[1], worst[2]
        _timed(checks, f"spectrum/lommel-bessel-identity/k={k}", jh, 1e-10)

    def perturbed():
        r = spe.eigen_residual(prob, 1, 1, N, lam=1.01j / prob.zero(1))
        return (1.0 if r >= 1e-2 else r), 1.0
    _timed(checks, "spectrum/perturbed-lambda-rejected", perturbed, 0.0)

    def eigvals():
        vals = spe.eigenvalues(prob, k_max)
        real_ok = all(v.real == 0.0 for v in vals)
        mags = [abs(vals[2 * i]) for i in range(k_max)]
        dec_ok = all(mags[i] > mags[i + 1] for i in range(k_max - 1))
        conj_ok = all(vals[2 * i] == vals[2 * i + 1].conjugate()
                      for i in range(k_max))
        return (1.0 if (real_ok and dec_ok and conj_ok) else 0.0), 1.0
    _timed(checks, "spectrum/eigenvalues-imaginary-decreasing", eigvals, 0.0)

    def lam_zero():
        w = max(abs(lommel_h(5, ab + 2.0, 0.0) - 0.0),
                abs(lommel_h(6, ab + 2.0, 0.0) - (-1.0) ** 3))
        return w, 0.0
    _timed(checks, "spectrum/lambda-zero-excluded", lam_zero, 1e-15)

    def half_order():
        # at (alpha, beta) = (-0.5, 1.0) the first eigenvalue magnitude is
        # 1/j_{3/2,1}, with j the first positive root of tan x = x
        P2 = Params(-0.5, 1.0)
        prob2 = spe.SpectralProblem(P2, 10, bessel_zeros(P2.ab + 1.0, 1))
        j = prob2.zero(1)
        return math.tan(j), j
    _timed(checks, "spectrum/halfint-zero-is-tanx-root", half_order, 1e-8)

    def lcn():
        # residual normalized by the largest target coefficient (the raw
        # coefficients reach ~1e3 by degree 10, beyond what float64 can pin
        # to 1e-12 absolutely)
        w = 0.0
        fam = GenGegenbauerFamily(P)
        up = fam.raised()
        for n in range(1, 11):
            lhs = dunkl_apply_poly(P.alpha, fam.coeffs(n))
            rhs = [2.0 * (ab + 1.0) * c for c in up.coeffs(n - 1)]
            rhs += [0.0] * (len(lhs) - len(rhs))
            scale = max(max(abs(y) for y in rhs), 1.0)
            w = max(w, max(abs(x - y) for x, y in zip(lhs, rhs)) / scale)
        return w, 0.0
    _timed(checks, "spectrum/derivative-lowers-index", lcn, 1e-12)

    def lam_T_identity():
        fam = GenGegenbauerFamily(P)
        up = fam.raised()
        g = np.zeros(N + 1, dtype=complex)
        g[2] = 1.0
        out, _ = spe.apply_T(prob, g, input_basis="raised")
        coeffs = np.zeros(N + 2)
        for n in range(1, N + 1):
            if abs(out[n]) > 0.0:
                for i, v in enumerate(fam.coeffs(n)):
                    coeffs[i] += (out[n] * v).real
        applied = dunkl_apply_poly(P.alpha, list(coeffs))
        target = up.coeffs(2)
        w = max(abs(applied[i] - (target[i] if i < len(target) else 0.0))
                for i in range(len(applied)))
        return w, 0.0
    _timed(checks, "spectrum/derivative-inverts-T", lam_T_identity, 1e-12)

    def t_on_basis():
        g = np.zeros(N + 1, dtype=complex)
        g[0] = 1.0
        out, _ = spe.apply_T(prob, g, input_basis="raised")
        dev = abs(out[1] - 1.0 / (2.0 * (ab + 1.0))) + float(np.max(np.abs(out[2:])))
        return dev, 0.0
    _timed(checks, "spectrum/T-on-basis-element", t_on_basis, 1e-15)

    def t_kernel_oracle():
        # integral-kernel route with a 20-term kernel sum vs coefficient route
        fam = GenGegenbauerFamily(P)
        up = fam.raised()
        g = np.zeros(N + 1, dtype=complex)
        g[2] = 1.0
        out, _ = spe.apply_T(prob, g, input_basis="raised")
        t = 0.3
        direct = sum((out[n] * fam.eval(n, t)).real for n in range(1, N + 1))

        def kern(r: float) -> float:
            acc = 0.0
            for n in range(1, 21):
                acc += fam.eval(n, t) * up.eval(n - 1, r) / up.norm(n - 1)
            return acc / (2.0 * (ab + 1.0)) * up.eval(2, r)
        byquad = integrate_interval(kern, Measure.mu_beta_alpha(P.alpha, P.beta + 1.0), 60)
        return direct, byquad
    _timed(checks, "spectrum/T-quadrature-kernel-oracle", t_kernel_oracle, 1e-6)

    def relationab():
        lam = 0.15j
        a = spe.recurrence_coeffs(prob, lam, 1.0, 12)
        w = 0.0
        for n in range(1, 13):
            rel = (1j) ** (n - 1) * (ab + n + 1.0) / (ab + 2.0) * lommel_h(n - 1, ab + 2.0, 1j * lam)
            w = max(w, abs(a[n] - rel))
        return w, 0.0
    _timed(checks, "spectrum/recurrence-vs-lommel-relation", relationab, 1e-10)

    def orthocomplement():
        # (1-t^2)^{-1} against C_n in the raised-weight space: one power of
        # the weight cancels the singular factor exactly, so the product
        # measure rule integrates the remaining polynomial spectrally
        P2 = Params(0.4, 0.5)
        fam2 = GenGegenbauerFamily(P2)
        mu = Measure.mu_beta_alpha(P2.alpha, P2.beta)
        w = 0.0
        for n in range(1, 7):
            v = integrate_interval(lambda t, n=n: fam2.eval(n, t), mu, 60)
            w = max(w, abs(v))
        return w, 0.0
    _timed(checks, "spectrum/weight-inverse-orthocomplement", orthocomplement, 1e-8)

    def summability():
        a60 = spe.eigen_coeffs(spe.SpectralProblem(P, 60, prob.table), 1, 1, 60)
        a80 = spe.eigen_coeffs(prob, 1, 1, min(N, 80))
        s60 = sum(abs(a60[n]) ** 2 * n ** (2.0 * P.beta - 1.0) for n in range(1, 61))
        s80 = sum(abs(a80[n]) ** 2 * n ** (2.0 * P.beta - 1.0) for n in range(1, min(N, 80) + 1))
        return abs(s80 - s60) / s80, 0.0
    _timed(checks, "spectrum/coefficient-summability-stabilizes", summability, 1e-10)

    def bound():
        M = spe.bound_constant(prob)
        rng = np.random.default_rng(12345)
        fam = GenGegenbauerFamily(P)
        up = fam.raised()
        ok = True
        for _ in range(20):
            g = rng.standard_normal(N + 1) + 1j * rng.standard_normal(N + 1)
            out, _ = spe.apply_T(prob, g, input_basis="raised")
            ntg = math.sqrt(sum(abs(out[n]) ** 2 * fam.norm(n) for n in range(N + 1)))
            ng = math.sqrt(sum(abs(g[n]) ** 2 * up.norm(n) for n in range(N + 1)))
            ok = ok and (ntg <= M * ng * (1.0 + 1e-12))
        return (1.0 if ok else 0.0), 1.0
    _timed(checks, "spectrum/right-inverse-norm-bound", bound, 0.0)

    def hratio():
        fam = GenGegenbauerFamily(P)
        up = fam.raised()
        w = 0.0
        for k in range(0, 20):
            r1 = fam.norm(2 * k + 1) / up.norm(2 * k)
            e1 = (ab + 1.0) ** 2 / ((P.beta + k + 1.0) * (P.alpha + k + 1.0))
            w = max(w, abs(r1 - e1) / e1)
            if k >= 1:
                r2 = fam.norm(2 * k) / up.norm(2 * k - 1)
                e2 = (ab + 1.0) ** 2 / (k * (ab + k + 1.0))
                w = max(w, abs(r2 - e2) / e2)
        return w, 0.0
    _timed(checks, "spectrum/norm-ratio-closed-forms", hratio, 1e-12)
    return checks


# ---------------------------------------------------------------------------
# lemma71
# ---------------------------------------------------------------------------

def _i_minus(al: float, be: float, n: int, t: float):
    r = integrate_bessel_product(be, al + be + 2.0 * n + 1.0, al, t)
    return t ** (-al) * r.value, r


def _i_plus(al: float, be: float, n: int, t: float):
    r = integrate_bessel_product(-be, al + be + 2.0 * n + 1.0, al, t)
    return t ** (-al) * r.value, r


def suite_lemma71(ov: dict) -> list:
    checks: list = []
    tol = ov.get("tol", 1e-5)
    for (al, be, n) in ((0.3, 0.2, 0), (0.3, 0.2, 1), (0.5, -0.1, 2)):
        for t in (0.4, 0.7):
            def minus(al=al, be=be, n=n, t=t):
                got, _ = _i_minus(al, be, n, t)
                exact = (2.0 ** (-be) * gamma(n + 1.0) / gamma(be + n + 1.0)
                         * (1.0 - t * t) ** be * jacobi_eval(n, al, be, 1.0 - 2.0 * t * t))
                return got, exact
            _timed(checks, f"lemma71/I-minus/a={al}/b={be}/n={n}/t={t}", minus, tol)

            def plus(al=al, be=be, n=n, t=t):
                got, _ = _i_plus(al, be, n, t)
                exact = (2.0 ** be * gamma(al + be + n + 1.0) / gamma(al + n + 1.0)
                         * jacobi_eval(n, al, be, 1.0 - 2.0 * t * t))
                return got, exact
            _timed(checks, f"lemma71/I-plus/a={al}/b={be}/n={n}/t={t}", plus, tol)

    def vanishing():
        got, _ = _i_minus(0.3, 0.2, 1, 1.5)
        return got, 0.0
    _timed(checks, "lemma71/I-minus-vanishes-outside", vanishing, 1e-5)

    def squared():
        a = 1.7
        r = integrate_bessel_product(1.0, a, a, 1.0)
        return r.value, 1.0 / (2.0 * a)
    _timed(checks, "lemma71/squared-over-x", squared, 1e-6)

    def crossed():
        r = integrate_bessel_product(1.0, 1.2, 3.2, 1.0)
        return r.value, 0.0
    _timed(checks, "lemma71/crossed-over-x-gap-two", crossed, 1e-8)

    def crossed_generic():
        a_, b_ = 1.2, 2.5
        r = integrate_bessel_product(1.0, a_, b_, 1.0)
        exact = 2.0 / math.pi * math.sin((b_ - a_) * math.pi / 2.0) / (b_ * b_ - a_ * a_)
        return r.value, exact
    _timed(checks, "lemma71/crossed-over-x-generic", crossed_generic, 1e-6)

    def doubling():
        got1, r1 = _i_minus(0.3, 0.2, 1, 0.4)
        r2 = integrate_bessel_product(0.2, 0.3 + 0.2 + 3.0, 0.3, 0.4,
                                      rtol=1e-9)
        got2 = 0.4 ** (-0.3) * r2.value
        return abs(got1 - got2) / max(abs(got1), 1e-30), 0.0
    _timed(checks, "lemma71/refinement-stability", doubling, 1e-6)
    return checks


# ---------------------------------------------------------------------------
# q suites
# ---------------------------------------------------------------------------

def _qctx(ov: dict) -> qs.QContext:
    return qs.QContext(ov.get("q", 0.5))


def suite_q_core(ov: dict) -> list:
    checks: list = []
    ctx = _qctx(ov)
    q = ctx.q
    P = Params(ov.get("alpha", 0.3), ov.get("beta", 0.2))

    for qq in (0.3, 0.5, 0.8):
        def ortho(qq=qq):
            c = qs.QContext(qq)
            fam = qs.QJacobiFamily(c, P)
            q2 = c.q2
            gram = fam.gram_matrix_mp(5)
            w = 0.0
            for n in range(6):
                for m in range(n, 6):
                    if n == m:
                        exact = ((1.0 - qq) / (1.0 - qq ** (4 * n + 2 * P.alpha + 2 * P.beta + 2))
                                 * qs.qpochhammer(q2 ** (n + 1.0), q2)
                                 * qs.qpochhammer(q2 ** (P.ab + 1.0 + n), q2)
                                 / (qs.qpochhammer(q2 ** (P.alpha + 1.0 + n), q2)
                                    * qs.qpochhammer(q2 ** (P.beta + 1.0 + n), q2)))
                    else:
                        exact = 0.0
                    w = max(w, abs(gram[n][m] - exact))
            return w, 0.0
        _timed(checks, f"q-core/jacobi-orthogonality/q={qq}", ortho, 1e-12)

    def jackson_const():
        return qs.jackson_integral(ctx, lambda t: 1.0, "unit").real, 1.0
    _timed(checks, "q-core/jackson-geometric", jackson_const, 1e-14)

    def jackson_t():
        return qs.jackson_integral(ctx, lambda t: t, "unit").real, 1.0 / (1.0 + q)
    _timed(checks, "q-core/jackson-linear", jackson_t, 1e-14)

    def substitution():
        ctx2 = qs.QContext(ctx.q2)
        lhs = qs.jackson_integral(ctx2, lambda u: u * u, "unit").real
        rhs = (1.0 + q) * qs.jackson_integral(ctx, lambda x: x ** 5, "unit").real
        return lhs, rhs
    _timed(checks, "q-core/base-change-substitution", substitution, 1e-15)

    def qneumann_orth():
        al = P.alpha
        got = qs.qweber_lhs(ctx, 1.0, al + 3.0, al + 3.0, 1, 1)
        return got, (1.0 - q) / (1.0 - q ** (2.0 * al + 6.0))
    _timed(checks, "q-core/neumann-orthogonality-diag", qneumann_orth, 1e-12)

    def qneumann_cross():
        al = P.alpha
        got = qs.qweber_lhs(ctx, 1.0, al + 3.0, al + 1.0, 1, 0)
        return got, 0.0
    _timed(checks, "q-core/neumann-orthogonality-cross", qneumann_cross, 1e-12)

    def hankel_inv():
        al = P.alpha
        fgrid = lambda y: math.exp(-math.log(y) ** 2) if y > 0 else 0.0
        cache: dict = {}

        def hf(y: float) -> float:
            k = round(math.log(y) / math.log(q))
            if k not in cache:
                cache[k] = qs.q_hankel(ctx, al, fgrid, y)
            return cache[k]
        w = 0.0
        for n in range(-2, 5):
            x = q ** n
            w = max(w, abs(qs.q_hankel(ctx, al, hf, x) - fgrid(x)))
        return w, 0.0
    _timed(checks, "q-core/hankel-double-transform", hankel_inv, 1e-11)

    def mult_formula():
        al = P.alpha
        u = lambda x: math.exp(-math.log(abs(x)) ** 2) if x != 0 else 0.0
        v = lambda x: abs(x) * math.exp(-math.log(abs(x)) ** 2) if x != 0 else 0.0
        cu: dict = {}
        cv: dict = {}

        def fu(y):
            k = (round(math.log(abs(y)) / math.log(q)), y > 0)
            if k not in cu:
                cu[k] = qs.q_transform(ctx, al, u, y)
            return cu[k]

        def fv(y):
            k = (round(math.log(abs(y)) / math.log(q)), y > 0)
            if k not in cv:
                cv[k] = qs.q_transform(ctx, al, v, y)
            return cv[k]
        cq = qs.qpochhammer(ctx.q2 ** (al + 1.0), ctx.q2) / qs.qpochhammer(ctx.q2, ctx.q2)

        def msum(g):
            return qs.jackson_integral(ctx, lambda x: g(x) * abs(x) ** (2.0 * al + 1.0),
                                       "line") * cq / (2.0 * (1.0 - q))
        return msum(lambda y: u(y) * fv(y)), msum(lambda y: fu(y) * v(y))
    _timed(checks, "q-core/multiplication-formula", mult_formula, 1e-12)

    def kernel_at_zero():
        return qs.q_dunkl_kernel(ctx, P.alpha, 0.0), 1.0
    _timed(checks, "q-core/kernel-at-zero", kernel_at_zero, 1e-15)

    def small_x():
        nu = 0.7
        got = qs.qbessel3_ratio(nu, 1e-8, ctx.q2)
        exact = qs.qpochhammer(ctx.q2 ** (nu + 1.0), ctx.q2) / qs.qpochhammer(ctx.q2, ctx.q2)
        return got, exact
    _timed(checks, "q-core/bessel-small-argument", small_x, 1e-10)

    def qnorms():
        fam = qs.QJacobiFamily(ctx, P)
        w = 0.0
        for n in range(6):
            w = max(w, abs(fam.norm(n) - fam.norm_quadrature(n)) / fam.norm_quadrature(n))
        return w, 0.0
    _timed(checks, "q-core/gegenbauer-norms-vs-quadrature", qnorms, 1e-12)

    def tol_stability():
        c1 = qs.QContext(q, tol=1e-18)
        c2 = qs.QContext(q, tol=5e-19)
        v1 = qs.jackson_integral(c1, lambda t: t ** 0.7, "unit").real
        v2 = qs.jackson_integral(c2, lambda t: t ** 0.7, "unit").real
        return (1.0 if abs(v1 - v2) < 10.0 * 1e-18 else 0.0), 1.0
    _timed(checks, "q-core/tolerance-stability", tol_stability, 0.0)
    return checks


def suite_q_planewave(ov: dict) -> list:
    checks: list = []
    ctx = _qctx(ov)
    q = ctx.q
    P = Params(ov.get("alpha", 0.3), ov.get("beta", 0.2))
    N = int(ov.get("terms", 30))

    def lemma_route():
        w = 0.0
        for mx in range(4):
            for mt in range(1, 5):
                x, t = q ** mx, q ** mt
                got = qs.q_planewave_partial_sum(ctx, P, x, t, N, route="lemma")
                w = max(w, abs(got - qs.q_dunkl_kernel(ctx, P.alpha, x * t)))
        return w, 0.0
    _timed(checks, "q-planewave/expansion-with-ratio-factor", lemma_route, 1e-10)

    def route_report():
        x, t = 1.0, q
        ker = qs.q_dunkl_kernel(ctx, P.alpha, x * t)
        plain = abs(qs.q_planewave_partial_sum(ctx, P, x, t, N, route="plain") - ker)
        lemma = abs(qs.q_planewave_partial_sum(ctx, P, x, t, N, route="lemma") - ker)
        return (1.0 if lemma < plain else 0.0), 1.0
    _timed(checks, "q-planewave/ratio-factor-route-matches", route_report, 0.0)

    def smallest_grid():
        x = q ** 8
        t = q
        got = qs.q_planewave_partial_sum(ctx, P, x, t, 5, route="lemma")
        return got, qs.q_dunkl_kernel(ctx, P.alpha, x * t)
    _timed(checks, "q-planewave/small-argument-truncation", smallest_grid, 1e-8)

    def cauchy():
        x, t = 1.0, q
        s30 = qs.q_planewave_partial_sum(ctx, P, x, t, N, route="lemma")
        s35 = qs.q_planewave_partial_sum(ctx, P, x, t, N + 5, route="lemma")
        bound = q ** (N * (N - 1) / 4.0)
        return (1.0 if abs(s35 - s30) < bound else 0.0), 1.0
    _timed(checks, "q-planewave/partial-sums-cauchy", cauchy, 0.0)

    def forward_lemma():
        ab = P.ab
        fam = qs.QJacobiFamily(ctx, P)
        k, t = 2, q
        f = lambda x: qs.q_neumann(ctx, ab, k, x)
        got = qs.q_transform(ctx, P.alpha, f, t)
        h = fam.norm(k)
        qk = fam.weight(t) * fam.qgegenbauer(k, t) / h
        closed = ((-1j) ** k * q ** ((k // 2) * P.beta) / (1.0 - ctx.q2 ** (k + ab + 1.0))
                  * qs.qpochhammer(ctx.q2 ** (ab + 1.0), ctx.q2) / qs.qpochhammer(ctx.q2, ctx.q2)
                  * qk)
        return got, closed
    _timed(checks, "q-planewave/forward-transform-coefficient", forward_lemma, 1e-11)

    def ultraspherical():
        # q-exponential remark: alpha = -1/2 with beta shifted by -1/2
        be = 0.7
        P2 = Params(-0.5, be - 0.5)
        w = 0.0
        for (mx, mt) in ((0, 1), (1, 1), (2, 2)):
            x, t = q ** mx, q ** mt
            got = qs.q_planewave_partial_sum(ctx, P2, x, t, N, route="lemma")
            w = max(w, abs(got - qs.q_dunkl_kernel(ctx, -0.5, x * t)))
        return w, 0.0
    _timed(checks, "q-planewave/ultraspherical-specialization", ultraspherical, 1e-10)

    def q1_limit():
        ctxq1 = qs.QContext(0.999, k_min=-5, k_max=200)
        famq1 = qs.QJacobiFamily(ctxq1, P)
        got = famq1.little_p(3, 0.4)
        return got, jacobi_eval(3, P.alpha, P.beta, 1.0 - 2.0 * 0.4)
    _timed(checks, "q-planewave/classical-limit", q1_limit, 5e-2)
    return checks


def suite_q_weber(ov: dict) -> list:
    checks: list = []
    ctx = _qctx(ov)
    q = ctx.q
    P = Params(ov.get("alpha", 0.3), ov.get("beta", 0.2))
    tuples = ((0.4, 1.3, 2.1, 0, 1), (1.0, 1.3, 1.3, 1, 1), (0.2, 0.7, 1.9, 2, 0),
              (-0.3, 1.1, 2.3, 0, 0), (0.8, 2.0, 1.0, 2, 1), (1.5, 2.4, 1.6, 2, 2))
    for tup in tuples:
        def pair(tup=tup):
            return qs.qweber_lhs(ctx, *tup), qs.qweber_rhs(ctx, *tup)
        lam, mu, nu, m_, n_ = tup
        _timed(checks, f"q-weber/identity/lam={lam}/mu={mu}/nu={nu}/m={m_}/n={n_}",
               pair, 1e-12)

    for (n_, m_) in ((0, 1), (1, 1), (2, 2)):
        _timed(checks, f"q-weber/I-minus/n={n_}/t=q^{m_}",
               lambda n_=n_, m_=m_: (qs.q_i_minus(ctx, P, n_, m_),
                                     qs.q_i_minus_closed(ctx, P, n_, m_)), 1e-12)
        _timed(checks, f"q-weber/I-plus/n={n_}/t=q^{m_}",
               lambda n_=n_, m_=m_: (qs.q_i_plus(ctx, P, n_, m_),
                                     qs.q_i_plus_closed(ctx, P, n_, m_)), 1e-12)

    def vanishing():
        return qs.q_i_minus(ctx, P, 1, -1), 0.0
    _timed(checks, "q-weber/I-minus-vanishes-outside", vanishing, 1e-13)

    def basictransform():
        a, b, c, z = q, q ** 3, q ** 2, 0.3
        lhs = qs.phi21(a, b, c, q, z)
        rhs = (qs.qpochhammer(a * b * z / c, q) / qs.qpochhammer(z, q)
               * qs.phi21(c / a, c / b, c, q, a * b * z / c))
        return lhs, rhs
    _timed(checks, "q-weber/balanced-transformation", basictransform, 1e-13)

    def terminating():
        a = q ** (-4)
        got = qs.phi21(a, 0.3, 0.7, q, 0.9)
        term = 1.0
        brute = 1.0
        for k in range(4):
            term *= ((1.0 - a * q ** k) * (1.0 - 0.3 * q ** k)
                     / ((1.0 - 0.7 * q ** k) * (1.0 - q ** (k + 1)))) * 0.9
            brute += term
        return got, brute
    _timed(checks, "q-weber/terminating-sum", terminating, 1e-15)
    return checks


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------

_REGISTRY = {
    "planewave": suite_planewave,
    "dunkl-sampling": suite_dunkl_sampling,
    "fourier-neumann": suite_fourier_neumann,
    "hankel": suite_hankel,
    "spectrum": suite_spectrum,
    "lemma71": suite_lemma71,
    "q-core": suite_q_core,
    "q-planewave": suite_q_planewave,
    "q-weber": suite_q_weber,
}

SUITE_NAMES = tuple(_REGISTRY) + ("all",)


def list_suites() -> tuple:
    return SUITE_NAMES


def run_suite(name: str, overrides: dict | None = None) -> SuiteResult:
    """Run one registered suite (or all of them, merged in registry order)."""
    ov = dict(overrides or {})
    if name == "all":
        t0 = time.perf_counter()
        checks: list = []
        for sub in _REGISTRY:
            sub_checks = _REGISTRY[sub](ov)
            checks.extend(CheckReport(id=f"{sub}::{c.id}" if not c.id.startswith(sub) else c.id,
                                      lhs=c.lhs, rhs=c.rhs, abs_err=c.abs_err,
                                      rel_err=c.rel_err, tol=c.tol, passed=c.passed,
                                      runtime_ms=c.runtime_ms)
                          for c in sub_checks)
        return SuiteResult(suite="all", params=_echo_params(ov), checks=checks,
                           runtime_ms=(time.perf_counter() - t0) * 1000.0)
    if name not in _REGISTRY:
        raise KeyError(name)
    t0 = time.perf_counter()
    checks = _REGISTRY[name](ov)
    return SuiteResult(suite=name, params=_echo_params(ov), checks=checks,
                       runtime_ms=(time.perf_counter() - t0) * 1000.0)


def _echo_params(ov: dict) -> dict:
    out = {}
    for key in ("alpha", "beta", "q", "terms", "tol", "k_max"):
        if key in ov:
            out[key] = ov[key]
    return out
