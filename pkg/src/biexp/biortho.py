"""Bilinear kernel expansions into biorthogonal systems.

The abstract engine: a kernel K(x, t) on R x [-1, 1] with a weighted
measure, a transform Kf(t) = int f(x) conj(K(x, t)) dmu(x), and a pair of
biorthonormal sequences (P_n, Q_n) on the interval.  The kernel then
expands as K(x, t) = sum_n P_n(t) S_n(x) with S_n the inverse transform of
the windowed conj(Q_n).

Four concrete instantiations are provided: the classical sampling system
(complex exponentials), the Gegenbauer plane-wave system, the Dunkl
sampling system on zeros of J_{alpha+1}, and the Fourier-Neumann system of
generalized Gegenbauer polynomials against Bessel quotients.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Literal

import numpy as np

from .orthopoly import GenGegenbauerFamily, classical_gegenbauer, jacobi_eval
from .quad import Measure, accelerate, gauss_jacobi, gauss_jacobi01, mcmahon_zero, rule_for_measure
from .specfun import (Params, ZeroTable, bessel_i_norm_imag, bessel_j_ratio,
                      bessel_zeros, dunkl_kernel, gamma)

__all__ = [
    "TruncatedSeries",
    "KernelSystem",
    "BiorthSystem",
    "PWFunction",
    "fourier_system",
    "gegenbauer_system",
    "dunkl_system",
    "neumann_system",
    "expand_kernel",
    "fourier_sampling_coeff",
    "gegenbauer_coeff",
    "dunkl_sampling_coeff",
    "neumann_fn",
    "planewave_partial_sum",
    "classical_planewave",
    "dunkl_sampling_sum",
    "sampling_even_sum",
    "sampling_odd_sum",
    "fourier_neumann_coeffs",
    "neumann_partial_sum",
    "hankel_corollary_sum",
    "kernel_norm_sq",
]


# ---------------------------------------------------------------------------
# Series container
# ---------------------------------------------------------------------------

@dataclass
class TruncatedSeries:
    """Ordered coefficient window with its truncation order and tail bound.

    For Z-indexed systems coeffs run n = n_min .. n_min + len - 1 with
    n_min = -order; for N-indexed ones n_min = 0.
    """

    coeffs: list
    order: int
    tail_estimate: float
    n_min: int = 0
    partial_sum: Callable | None = None

    def coeff(self, n: int):
        return self.coeffs[n - self.n_min]


# ---------------------------------------------------------------------------
# Vectorized Dunkl kernel on a node grid
# ---------------------------------------------------------------------------

def _series_pair(alpha: float, xs: np.ndarray):
    """(I_alpha(ix), I_{alpha+1}(ix)) for |x| <= ~9, vectorized series."""
    w = -0.25 * xs * xs
    t0 = np.ones_like(xs)
    t1 = np.ones_like(xs)
    s0 = t0.copy()
    s1 = t1.copy()
    for n in range(1, 400):
        t0 = t0 * w / (n * (alpha + n))
        t1 = t1 * w / (n * (alpha + 1.0 + n))
        s0 += t0
        s1 += t1
        if max(np.max(np.abs(t0)), np.max(np.abs(t1))) < 1e-18 * max(np.max(np.abs(s0)), 1.0):
            break
    return s0, s1


def _jratio_asym_vec(nu: float, xs: np.ndarray) -> np.ndarray:
    """Vectorized large-argument cosine asymptotic for J_nu(x)/x^nu, x > 50."""
    mu = 4.0 * nu * nu
    p = np.ones_like(xs)
    q = np.zeros_like(xs)
    term = np.ones_like(xs)
    for k in range(1, 16):
        term = term * (mu - (2.0 * k - 1.0) ** 2) / (k * 8.0 * xs)
        if k % 2 == 0:
            p += term * (-1.0) ** (k // 2)
        else:
            q += term * (-1.0) ** ((k - 1) // 2)
        if np.max(np.abs(term)) < 1e-17:
            break
    chi = xs - (0.5 * nu + 0.25) * math.pi
    j = np.sqrt(2.0 / (math.pi * xs)) * (p * np.cos(chi) - q * np.sin(chi))
    return j * np.exp(-nu * np.log(xs))


def dunkl_kernel_grid(alpha: float, xs: np.ndarray) -> np.ndarray:
    """E_alpha(i x) on an array of real arguments, regime-split."""
    xs = np.asarray(xs, dtype=float)
    ax = np.abs(xs)
    out = np.empty(xs.shape, dtype=complex)
    c = 2.0 ** alpha * gamma(alpha + 1.0)
    small = ax <= 9.0
    big = ax > 50.0
    mid = ~small & ~big
    if np.any(small):
        s0, s1 = _series_pair(alpha, xs[small])
        out[small] = s0 + 1j * xs[small] / (2.0 * (alpha + 1.0)) * s1
    if np.any(big):
        xb = ax[big]
        r0 = _jratio_asym_vec(alpha, xb)
        r1 = _jratio_asym_vec(alpha + 1.0, xb)
        out[big] = c * (r0 + 1j * xs[big] * r1)
    if np.any(mid):
        vals = [dunkl_kernel(alpha, float(x)) for x in xs[mid]]
        out[mid] = np.asarray(vals)
    return out


# ---------------------------------------------------------------------------
# Paley-Wiener functions: densities on [-1, 1] transported by the kernel
# ---------------------------------------------------------------------------

_PW_BUCKETS = (120, 160, 240, 320, 480, 640, 960, 1344)


def _order_for(ax: float, base: int) -> int:
    need = int(0.75 * ax) + 60
    for b in _PW_BUCKETS:
        if b >= max(need, base):
            return b
    return _PW_BUCKETS[-1]


@dataclass
class PWFunction:
    """Band-limited function f(x) = int_{-1}^{1} u(t) E_alpha(ixt) dmu_alpha(t).

    The generating density u is the primary representation; every ground
    truth evaluation goes through quadrature of the defining integral, with
    the rule order scaled to resolve the oscillation at large |x|.

    A density of the form u(t) = (1-t^2)^w * smooth(t) should be passed as
    (smooth, weight_pow=w): folding the endpoint factor into the rule's
    weight keeps the quadrature spectrally accurate.
    """

    u: Callable[[float], complex]
    alpha: float
    weight_pow: float = 0.0
    base_order: int = 120
    _cache: dict = field(default_factory=dict, repr=False)

    def _measure(self) -> Measure:
        if self.weight_pow == 0.0:
            return Measure.mu_alpha(self.alpha)
        return Measure.mu_beta_alpha(self.alpha, self.weight_pow)

    def eval(self, x: float) -> complex:
        key = round(float(x), 14)
        if key in self._cache:
            return self._cache[key]
        order = _order_for(abs(x), self.base_order)
        rule = rule_for_measure(self._measure(), order)
        nodes = np.asarray(rule.nodes)
        weights = np.asarray(rule.weights)
        uv = np.asarray([self.u(t) for t in nodes])
        kv = dunkl_kernel_grid(self.alpha, x * nodes)
        val = complex(np.dot(weights, uv * kv))
        self._cache[key] = val
        return val

    def __call__(self, x: float) -> complex:
        return self.eval(x)


# ---------------------------------------------------------------------------
# Kernel systems and biorthogonal pairs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class KernelSystem:
    """Kernel K(x, t) with its measure and the transform it induces."""

    name: str
    kernel: Callable[[float, float], complex]
    measure: Measure
    order: int = 120

    def inverse_on_interval(self, g: Callable[[float], complex], x: float,
                            measure: Measure | None = None,
                            order: int | None = None) -> complex:
        """int_{-1}^{1} g(t) K(x, t) dmu(t): the windowed inverse transform."""
        mu = measure if measure is not None else self.measure
        rule = rule_for_measure(mu, order if order is not None else self.order)
        nodes = np.asarray(rule.nodes)
        w = np.asarray(rule.weights)
        vals = np.asarray([g(t) * self.kernel(x, t) for t in nodes])
        return complex(np.dot(w, vals))

    def transform_line(self, f: Callable[[float], complex], t: float,
                       radius: float = 40.0, cell: float | None = None,
                       accelerated: bool = True) -> complex:
        """Kf(t) = int_R f(x) conj(K(x, t)) dmu(x), cellwise to the radius,
        with the tail extrapolated from the oscillatory cell sums."""
        if self.measure.kind == "mu_beta_alpha":
            raise ValueError("line transform needs a measure supported on the line")
        dens = self.measure.density
        if cell is None:
            cell = math.pi / max(1.0, abs(t))
        xg, wg = gauss_jacobi(16, 0.0, 0.0)

        def fold(x: float) -> complex:
            return (f(x) * complex(np.conjugate(self.kernel(x, t)))
                    + f(-x) * complex(np.conjugate(self.kernel(-x, t))))

        # first cell on each side handles the |x|^{2a+1} factor exactly
        if self.measure.kind == "lebesgue":
            exp0, norm0 = 0.0, 1.0
        else:
            exp0 = 2.0 * self.measure.a + 1.0
            norm0 = 1.0 / (2.0 ** (self.measure.a + 1.0) * gamma(self.measure.a + 1.0))
        u0, w0 = gauss_jacobi01(24, exp0, 0.0)
        xs0 = cell * u0
        smooth = np.asarray([fold(x) for x in xs0])
        total = cell ** (exp0 + 1.0) * complex(np.dot(w0, smooth)) * norm0
        partial = [total]
        edge = cell
        while edge < radius:
            a, b = edge, edge + cell
            xs = 0.5 * (b - a) * xg + 0.5 * (a + b)
            vals = np.asarray([fold(x) * dens(x) for x in xs])
            total += 0.5 * (b - a) * complex(np.dot(wg, vals))
            partial.append(total)
            edge = b
        if accelerated and len(partial) >= 8:
            val, _ = accelerate(partial)
            return complex(val)
        return total

    def multiplication_residual(self, f: Callable, g: Callable,
                                radius: float = 12.0) -> float:
        """|int (Kf) g dmu - int (Kg) f dmu| for decaying test functions."""
        xg, wg = gauss_jacobi(24, 0.0, 0.0)
        dens = self.measure.density
        lhs = 0.0 + 0.0j
        rhs = 0.0 + 0.0j
        edge = 0.0
        while edge < radius:
            a, b = edge, edge + 1.0
            xs = 0.5 * (b - a) * xg + 0.5 * (a + b)
            v1 = np.asarray([(self.transform_line(f, x, radius) * g(x)
                              + self.transform_line(f, -x, radius) * g(-x)) * dens(x)
                             for x in xs])
            v2 = np.asarray([(self.transform_line(g, x, radius) * f(x)
                              + self.transform_line(g, -x, radius) * f(-x)) * dens(x)
                             for x in xs])
            lhs += 0.5 * (b - a) * complex(np.dot(wg, v1))
            rhs += 0.5 * (b - a) * complex(np.dot(wg, v2))
            edge = b
        return abs(lhs - rhs)


@dataclass(frozen=True)
class BiorthSystem:
    """Biorthonormal pair (P_n, Q_n) on [-1, 1] for a base measure.

    q_measure and q_smooth express conj(Q_n) times the base measure as a
    smooth factor against a Gauss-exact weighted measure, so that Gram
    matrices and S_n quadratures keep spectral accuracy even when Q carries
    an endpoint weight like (1-t^2)^beta.
    """

    name: str
    index: Literal["Z", "N"]
    P: Callable[[int, float], complex]
    Q: Callable[[int, float], complex]
    q_measure: Measure
    q_smooth: Callable[[int, float], complex]
    order: int = 120

    def gram(self, n: int, m: int, order: int | None = None) -> complex:
        """int_I P_n conj(Q_m) dmu_base, by the weight-absorbed rule."""
        rule = rule_for_measure(self.q_measure, order if order is not None else self.order)
        nodes = np.asarray(rule.nodes)
        w = np.asarray(rule.weights)
        vals = np.asarray([self.P(n, t) * self.q_smooth(m, t) for t in nodes])
        return complex(np.dot(w, vals))


def _window(index: str, N: int) -> list:
    if index == "Z":
        return list(range(-N, N + 1))
    return list(range(N))


def expand_kernel(sys: KernelSystem, bio: BiorthSystem, x: float, N: int,
                  order: int | None = None) -> TruncatedSeries:
    """Coefficients S_n(x) of the bilinear expansion, by quadrature.

    Returns the coefficient window (|n| <= N for Z-indexed systems, n < N
    otherwise) together with the partial-sum callable t -> sum P_n(t) S_n(x).
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    ns = _window(bio.index, N)
    coeffs = [sys.inverse_on_interval(lambda t, nn=n: bio.q_smooth(nn, t), x,
                                      measure=bio.q_measure, order=order)
              for n in ns]
    tail = max(abs(coeffs[0]), abs(coeffs[-1]))

    def partial(t: float) -> complex:
        return sum(bio.P(n, t) * c for n, c in zip(ns, coeffs))

    return TruncatedSeries(coeffs=coeffs, order=N, tail_estimate=tail,
                           n_min=ns[0], partial_sum=partial)


# ---------------------------------------------------------------------------
# Instantiation: classical sampling (complex exponentials)
# ---------------------------------------------------------------------------

_SQ2PI = math.sqrt(2.0 * math.pi)


def fourier_system():
    """Kernel e^{ixt}/sqrt(2 pi) with Lebesgue measure; P_n = Q_n the
    normalized exponentials, index set Z."""
    ks = KernelSystem(
        name="fourier",
        kernel=lambda x, t: complex(math.cos(x * t), math.sin(x * t)) / _SQ2PI,
        measure=Measure("lebesgue"),
    )

    def p(n: int, t: float) -> complex:
        return complex(math.cos(math.pi * n * t), math.sin(math.pi * n * t)) / math.sqrt(2.0)

    bio = BiorthSystem(
        name="fourier",
        index="Z",
        P=p,
        Q=p,
        q_measure=Measure("lebesgue"),
        q_smooth=lambda n, t: complex(np.conjugate(p(n, t))),
    )
    return ks, bio


def fourier_sampling_coeff(n: int, x: float) -> float:
    """Closed form S_n(x) = sin(x - pi n) / (sqrt(pi) (x - pi n))."""
    d = x - math.pi * n
    if abs(d) < 1e-8:
        # removable singularity: sinc expansion
        return (1.0 - d * d / 6.0) / math.sqrt(math.pi)
    return math.sin(d) / (math.sqrt(math.pi) * d)


# ---------------------------------------------------------------------------
# Instantiation: Gegenbauer plane wave
# ---------------------------------------------------------------------------

def _gegenbauer_h(beta: float, n: int) -> float:
    """L2 norm of C_n^beta against (1-t^2)^{beta-1/2} dt (Chebyshev at 0)."""
    if beta == 0.0:
        return math.pi if n == 0 else 2.0 * math.pi / (n * n)
    return (math.sqrt(math.pi) * gamma(beta + 0.5) * gamma(2.0 * beta + n)
            / (gamma(beta) * gamma(2.0 * beta) * (n + beta) * gamma(n + 1.0)))


def gegenbauer_system(beta: float):
    """Plane-wave system: P_n the Gegenbauer polynomials of order beta,
    Q_n the same polynomials times the weight, over Lebesgue measure.

    beta = 0 follows the Chebyshev convention for the degenerate family.
    """
    if beta <= -0.5:
        raise ValueError("gegenbauer system needs beta > -1/2")
    ks = KernelSystem(
        name="gegenbauer",
        kernel=lambda x, t: complex(math.cos(x * t), math.sin(x * t)) / _SQ2PI,
        measure=Measure("lebesgue"),
    )

    def p(n: int, t: float) -> float:
        return classical_gegenbauer(n, beta, t)

    def q(n: int, t: float) -> float:
        return (1.0 - t * t) ** (beta - 0.5) * p(n, t) / _gegenbauer_h(beta, n)

    bio = BiorthSystem(
        name="gegenbauer",
        index="N",
        P=p,
        Q=q,
        q_measure=Measure.mu_beta_alpha(-0.5, beta - 0.5),
        q_smooth=lambda n, t: _SQ2PI * p(n, t) / _gegenbauer_h(beta, n),
    )
    return ks, bio


def gegenbauer_coeff(beta: float, n: int, x: float) -> complex:
    """Closed form S_n(x) for the Gegenbauer system.

    beta > 0: 2^{beta-1/2} pi^{-1/2} i^n Gamma(beta) (beta+n) J_{beta+n}(x)/x^beta.
    beta = 0: the Chebyshev-convention family (2/n) T_n pairs with
    S_0 = J_0/sqrt(2 pi) and S_n = n i^n J_n/sqrt(2 pi).
    """
    ax = abs(x)
    if beta == 0.0:
        jn = bessel_j_ratio(float(n), ax) * x ** n
        return (1j ** n) * (1.0 if n == 0 else float(n)) * jn / _SQ2PI
    jq = bessel_j_ratio(beta + n, ax) * x ** n          # J_{beta+n}(x) / x^beta
    return (2.0 ** (beta - 0.5) / math.sqrt(math.pi) * (1j ** n)
            * gamma(beta) * (beta + n) * jq)


def classical_planewave(beta: float, x: float, t: float, N: int) -> complex:
    """Partial sum of the plane-wave expansion in Gegenbauer polynomials:

        e^{ixt} = Gamma(b) (x/2)^{-b} sum i^n (b+n) J_{b+n}(x) C_n^b(t),

    with the Chebyshev-convention branch at beta = 0 (Jacobi-Anger)."""
    if N < 1:
        raise ValueError("N must be >= 1")
    acc = 0.0 + 0.0j
    ax = abs(x)
    if beta == 0.0:
        for n in range(N):
            jn = bessel_j_ratio(float(n), ax) * x ** n
            acc += (1j ** n) * (1.0 if n == 0 else 2.0) * jn * classical_gegenbauer(n, 0.0, t)
        return acc
    pref = gamma(beta) * 2.0 ** beta
    for n in range(N):
        jq = bessel_j_ratio(beta + n, ax) * x ** n
        acc += (1j ** n) * (beta + n) * jq * classical_gegenbauer(n, beta, t)
    return pref * acc


# ---------------------------------------------------------------------------
# Instantiation: Dunkl sampling on zeros of J_{alpha+1}
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DunklSamplingSystem:
    alpha: float
    table: ZeroTable

    def d(self, n: int) -> float:
        """Normalization making d_n E_alpha(i s_n t) orthonormal in dmu_alpha."""
        a = self.alpha
        if n == 0:
            return 2.0 ** (0.5 * (a + 1.0)) * math.sqrt(gamma(a + 2.0))
        s = self.table.signed(n)
        return 2.0 ** (0.5 * a) * math.sqrt(gamma(a + 1.0)) / abs(bessel_i_norm_imag(a, s))

    def e(self, n: int, t: float) -> complex:
        s = self.table.signed(n)
        return self.d(n) * dunkl_kernel(self.alpha, s * t)


def dunkl_system(alpha: float, n_max: int = 24):
    """Sampling system for the Dunkl kernel: P_n = Q_n = d_n E_alpha(i s_n t)
    over the zeros s_n of J_{alpha+1}, index set Z."""
    table = bessel_zeros(alpha + 1.0, n_max)
    dss = DunklSamplingSystem(alpha=alpha, table=table)
    ks = KernelSystem(
        name="dunkl",
        kernel=lambda x, t: dunkl_kernel(alpha, x * t),
        measure=Measure.mu_alpha(alpha),
    )
    bio = BiorthSystem(
        name="dunkl-sampling",
        index="Z",
        P=dss.e,
        Q=dss.e,
        q_measure=Measure.mu_alpha(alpha),
        q_smooth=lambda n, t: complex(np.conjugate(dss.e(n, t))),
    )
    return ks, bio, dss


def _x_i_alpha1_deriv(alpha: float, s: float) -> float:
    """d/dx [x I_{alpha+1}(ix)] at a zero s of J_{alpha+1} (the first term
    vanishes there)."""
    return -s * s * bessel_i_norm_imag(alpha + 2.0, s) / (2.0 * (alpha + 2.0))


def dunkl_sampling_coeff(dss: DunklSamplingSystem, n: int, x: float) -> float:
    """Closed form S_n(x) for the Dunkl sampling system."""
    a = dss.alpha
    if n == 0:
        return bessel_i_norm_imag(a + 1.0, x) / dss.d(0)
    s = dss.table.signed(n)
    c = dss.d(n) / (2.0 ** (a + 1.0) * gamma(a + 2.0)) * bessel_i_norm_imag(a, s)
    if abs(x - s) < 1e-9 * max(1.0, abs(s)):
        return c * _x_i_alpha1_deriv(a, s)
    return c * x * bessel_i_norm_imag(a + 1.0, x) / (x - s)


def dunkl_sampling_sum(alpha: float, f: PWFunction, x: float, N: int,
                       table: ZeroTable | None = None) -> complex:
    """Truncated sampling series for a band-limited f from samples f(s_n),
    |n| <= N; reproduces f(s_m) exactly at retained nodes."""
    if N < 1:
        raise ValueError("N must be >= 1")
    if table is None or len(table) < N:
        table = bessel_zeros(alpha + 1.0, N)
    i1x = bessel_i_norm_imag(alpha + 1.0, x)
    acc = f.eval(0.0) * i1x
    for n in range(1, N + 1):
        s = table.signed(n)
        i0 = bessel_i_norm_imag(alpha, s)
        for sgn in (1.0, -1.0):
            sn = sgn * s
            fs = f.eval(sn)
            if abs(x - sn) < 1e-9 * max(1.0, abs(sn)):
                acc += fs * _x_i_alpha1_deriv(alpha, sn) / (2.0 * (alpha + 1.0) * i0)
            else:
                acc += fs * x * i1x / (2.0 * (alpha + 1.0) * i0 * (x - sn))
    return acc


def sampling_even_sum(alpha: float, f: PWFunction, x: float, N: int,
                      table: ZeroTable) -> complex:
    """Grouped form of the sampling series for even f:

        f(0) I_{a+1}(ix) + sum f(s_n) I_{a+1}(ix)/((a+1) I_a(i s_n))
                                          * x^2/(x^2 - s_n^2)."""
    i1x = bessel_i_norm_imag(alpha + 1.0, x)
    acc = f.eval(0.0) * i1x
    for n in range(1, N + 1):
        s = table.signed(n)
        i0 = bessel_i_norm_imag(alpha, s)
        acc += f.eval(s) * i1x / ((alpha + 1.0) * i0) * x * x / (x * x - s * s)
    return acc


def sampling_odd_sum(alpha: float, f: PWFunction, x: float, N: int,
                     table: ZeroTable) -> complex:
    """Grouped form for odd f; the algebraic factor is x s_n/(x^2 - s_n^2)
    (pairing the two signed nodes of the full series and using oddness)."""
    i1x = bessel_i_norm_imag(alpha + 1.0, x)
    acc = 0.0 + 0.0j
    for n in range(1, N + 1):
        s = table.signed(n)
        i0 = bessel_i_norm_imag(alpha, s)
        acc += f.eval(s) * i1x / ((alpha + 1.0) * i0) * x * s / (x * x - s * s)
    return acc


# ---------------------------------------------------------------------------
# Instantiation: Fourier-Neumann system and the Dunkl plane wave
# ---------------------------------------------------------------------------

def neumann_fn(nu: float, n: int, x: float) -> float:
    """Bessel quotient J_{nu+n+1}(x) / x^{nu+1}: even or odd with n, finite
    at x = 0 (value 1/(2^{nu+1} Gamma(nu+2)) delta_{n0} there)."""
    ax = abs(x)
    return bessel_j_ratio(nu + n + 1.0, ax) * x ** n


def neumann_system(params: Params):
    """Fourier-Neumann biorthogonal pair: P_n the generalized Gegenbauer
    polynomials, Q_n the same against the (1-t^2)^beta weight, over
    dmu_alpha; paired with the Dunkl kernel."""
    fam = GenGegenbauerFamily(params)
    a, b = params.alpha, params.beta

    def p(n: int, t: float) -> float:
        return fam.eval(n, t)

    def q(n: int, t: float) -> float:
        return (1.0 - t * t) ** b * fam.eval(n, t) / fam.norm(n)

    ks = KernelSystem(
        name="neumann",
        kernel=lambda x, t: dunkl_kernel(a, x * t),
        measure=Measure.mu_alpha(a),
    )
    bio = BiorthSystem(
        name="fourier-neumann",
        index="N",
        P=p,
        Q=q,
        q_measure=Measure.mu_beta_alpha(a, b),
        q_smooth=lambda n, t: fam.eval(n, t) / fam.norm(n),
    )
    return ks, bio, fam


def planewave_partial_sum(params: Params, x: float, t: float, N: int) -> complex:
    """Partial sum of the Dunkl plane-wave expansion

        E_a(ixt) = 2^{a+b+1} Gamma(a+b+1) sum_n i^n (a+b+n+1)
                   J_{a+b+n+1}(x)/x^{a+b+1} C_n^{(b+1/2,a+1/2)}(t),

    which converges super-exponentially in N for fixed x."""
    if N < 1:
        raise ValueError("N must be >= 1")
    if abs(t) > 1.0:
        raise ValueError("|t| <= 1 required")
    ab = params.ab
    fam = GenGegenbauerFamily(params)
    pref = 2.0 ** (ab + 1.0) * gamma(ab + 1.0)
    acc = 0.0 + 0.0j
    for n in range(N):
        acc += (1j ** n) * (ab + n + 1.0) * neumann_fn(ab, n, x) * fam.eval(n, t)
    return pref * acc


def fourier_neumann_coeffs(params: Params, f: PWFunction, N: int,
                           radius: float = 40.0) -> TruncatedSeries:
    """Expansion coefficients a_n(f) of a band-limited f over the Bessel
    quotients (beta < 1), by cellwise quadrature on the truncated line:

        a_n(f) = 2^{a+b+1} Gamma(a+b+1) int_R f(t) J_{a+b+n+1}(t)/t^{a+b+1}
                 dmu_{a+b}(t)."""
    a, b = params.alpha, params.beta
    if not b < 1.0:
        raise ValueError("Fourier-Neumann coefficients need beta < 1")
    ab = params.ab
    pref = 2.0 ** (ab + 1.0) * gamma(ab + 1.0)
    dnorm = 1.0 / (2.0 ** (ab + 1.0) * gamma(ab + 1.0))
    xg, wg = gauss_jacobi(16, 0.0, 0.0)
    exp0 = 2.0 * ab + 1.0
    u0, w0 = gauss_jacobi01(24, exp0, 0.0)
    # shared cell edges from the zeros of the lowest-order factor; the
    # radius caps the cell count but never truncates a cell (a ragged final
    # cell would wreck the 1/k structure the extrapolation relies on)
    edges = [mcmahon_zero(ab + 1.0, k) for k in range(1, int(radius / math.pi) + 3)]
    edges = [e for e in edges if e < radius + math.pi]

    fvals: dict = {}

    def fv(x: float) -> complex:
        key = round(x, 14)
        if key not in fvals:
            fvals[key] = f.eval(x)
        return fvals[key]

    coeffs = []
    for n in range(N):
        def g(x: float, nn=n) -> complex:
            # folded smooth part: f(x) J(x) + f(-x) J(-x), J odd/even with n
            jj = neumann_fn(ab, nn, x)
            return fv(x) * jj + fv(-x) * (jj * (-1.0) ** nn)

        xs0 = edges[0] * u0
        total = edges[0] ** (exp0 + 1.0) * complex(np.dot(w0, np.asarray([g(x) for x in xs0])))
        partial = [total]
        for i in range(len(edges) - 1):
            lo, hi = edges[i], edges[i + 1]
            xs = 0.5 * (hi - lo) * xg + 0.5 * (lo + hi)
            vals = np.asarray([g(x) * x ** exp0 for x in xs])
            total += 0.5 * (hi - lo) * complex(np.dot(wg, vals))
            partial.append(total)
        val, err = accelerate(partial)
        if not (err <= 1e-4 * max(1.0, abs(val))):
            val = total  # extrapolation unreliable; fall back to truncation
        coeffs.append(pref * dnorm * complex(val))
    tail = abs(coeffs[-1]) if coeffs else 0.0
    return TruncatedSeries(coeffs=coeffs, order=N, tail_estimate=tail)


def neumann_partial_sum(params: Params, series: TruncatedSeries, x: float) -> complex:
    """Reconstruction sum_n a_n(f) (a+b+n+1) J_{a+b+n+1}(x)/x^{a+b+1}."""
    ab = params.ab
    return sum(c * (ab + n + 1.0) * neumann_fn(ab, n, x)
               for n, c in enumerate(series.coeffs))


def hankel_corollary_sum(params: Params, x: float, t: float, N: int) -> float:
    """Even-index reduction of the plane-wave expansion:

        J_a(xt)/(xt)^a = sum_n 2^{b+1} (a+b+2n+1)
            Gamma(a+b+n+1)/Gamma(a+n+1) J_{a+b+2n+1}(x)/x^{a+b+1}
            P_n^{(a,b)}(1-2t^2),  x > 0, 0 < t < 1."""
    if N < 1:
        raise ValueError("N must be >= 1")
    if not (x > 0.0 and 0.0 < t < 1.0):
        raise ValueError("need x > 0 and t in (0,1)")
    a, b = params.alpha, params.beta
    ab = params.ab
    acc = 0.0
    y = 1.0 - 2.0 * t * t
    for n in range(N):
        coef = 2.0 ** (b + 1.0) * (ab + 2.0 * n + 1.0) * gamma(ab + n + 1.0) / gamma(a + n + 1.0)
        acc += coef * neumann_fn(ab, 2 * n, x) * jacobi_eval(n, a, b, y)
    return acc


def _neville_halfpow(partial: list, levels: int = 7):
    """Neville extrapolation of partial sums in the variable K^{-1/2}.

    The S/T-pair Grams have cell-sum tails whose smooth decay runs through
    half-integer powers of the cell index; extrapolating against sqrt
    abscissas eliminates them order by order.  Sample indices are spread
    geometrically so the extrapolation stays well conditioned."""
    n = len(partial)
    idx = sorted({max(1, int(round(n / 1.4 ** j))) for j in range(levels)})
    if len(idx) < 3:
        return partial[-1], float("inf")
    xs = 1.0 / np.sqrt(np.asarray(idx, dtype=float))
    tbl = [complex(partial[i - 1]) for i in idx]
    m = len(tbl)
    prev = tbl
    for lvl in range(1, m):
        new = []
        for i in range(m - lvl):
            x0, x1 = xs[i], xs[i + lvl]
            new.append((x1 * tbl[i] - x0 * tbl[i + 1]) / (x1 - x0))
        prev, tbl = tbl, new
    return tbl[0], abs(tbl[0] - prev[0]) + abs(tbl[0] - prev[-1])


def st_gram_gegenbauer(beta: float, nmax: int, cells: int = 256,
                       t_order: int | None = None) -> np.ndarray:
    """Gram matrix int_R S_n conj(T_m) dx for the Gegenbauer system.

    S_n comes from its closed form; T_m = conj of the transform of the
    windowed polynomial, evaluated by interval quadrature on a shared cell
    grid along the line (rule order scaled to resolve the largest |y|);
    the slowly decaying tail is extrapolated in K^{-1/2}.  The result
    should be the identity, the generic biorthogonality of the pair.
    """
    xg, wg = gauss_jacobi(16, 0.0, 0.0)
    ymax = cells * math.pi
    if t_order is None:
        t_order = max(120, int(0.8 * ymax) + 60)
    tz, tw = gauss_jacobi(t_order, 0.0, 0.0)
    pm = np.asarray([[classical_gegenbauer(m, beta, t) for t in tz]
                     for m in range(nmax + 1)])
    gram = np.zeros((nmax + 1, nmax + 1), dtype=complex)
    ys = np.concatenate([0.5 * math.pi * xg + (k + 0.5) * math.pi
                         for k in range(cells)])
    # T_m(y) = int_{-1}^1 C_m(t) e^{i t y} dt / sqrt(2 pi), vectorized
    phase = np.exp(1j * np.outer(ys, tz))           # (Y, T)
    tm_pos = (phase * tw) @ pm.T / _SQ2PI           # (Y, m)
    tm_neg = (np.conj(phase) * tw) @ pm.T / _SQ2PI  # T_m(-y)
    for n in range(nmax + 1):
        sn_pos = np.asarray([gegenbauer_coeff(beta, n, y) for y in ys])
        sn_neg = sn_pos * (-1.0) ** n
        for m in range(nmax + 1):
            integ = sn_pos * np.conj(tm_pos[:, m]) + sn_neg * np.conj(tm_neg[:, m])
            partial = []
            total = 0.0 + 0.0j
            for k in range(cells):
                seg = integ[16 * k:16 * (k + 1)]
                total += 0.5 * math.pi * complex(np.dot(wg, seg))
                partial.append(total)
            val, _ = _neville_halfpow(partial)
            gram[n, m] = val
    return gram


def kernel_norm_sq(alpha: float, x: float) -> float:
    """Closed form of int_{-1}^{1} |E_alpha(ixr)|^2 dmu_alpha(r):

        (x^2 I_{a+1}^2/(2(a+1)) - (2a+1) I_{a+1} I_a + 2(a+1) I_a^2)
            / (2^{a+1} Gamma(a+2)),

    all I evaluated at ix (real values).  At alpha = -1/2 this is the
    constant 2/sqrt(2 pi); in the Lebesgue normalization of the classical
    Fourier kernel the same quantity reads 1/pi.
    """
    if alpha <= -1.0:
        raise ValueError("alpha must exceed -1")
    i0 = bessel_i_norm_imag(alpha, x)
    i1 = bessel_i_norm_imag(alpha + 1.0, x)
    return (x * x * i1 * i1 / (2.0 * (alpha + 1.0))
            - (2.0 * alpha + 1.0) * i1 * i0
            + 2.0 * (alpha + 1.0) * i0 * i0) / (2.0 ** (alpha + 1.0) * gamma(alpha + 2.0))
