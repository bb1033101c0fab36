"""Numerical integration engines.

Two families of tools live here:

* Gauss rules for the weighted measures on [-1, 1] used by every expansion
  (|t|^{2a+1} dt and |t|^{2a+1}(1-t^2)^b dt, normalized), built by Newton
  iteration on the recurrence-defined Jacobi polynomials.
* Semi-infinite oscillatory integrals of Bessel products, integrated cell
  by cell between zeros of the faster factor and extrapolated to infinity
  by sequence acceleration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Literal

import numpy as np

from .specfun import Params, bessel_j_ratio, gamma, lgamma

__all__ = [
    "Measure",
    "QuadRule",
    "gauss_jacobi",
    "gauss_jacobi01",
    "rule_for_measure",
    "integrate_interval",
    "integrate_bessel_product",
    "BesselProductResult",
    "accelerate",
    "mcmahon_zero",
]


# ---------------------------------------------------------------------------
# Gauss-Jacobi rules
# ---------------------------------------------------------------------------

def _jacobi_rec(n: int, a: float, b: float, x: np.ndarray):
    """P_n^{(a,b)} and P_{n-1}^{(a,b)} at x by the three-term recurrence."""
    p0 = np.ones_like(x)
    if n == 0:
        return p0, np.zeros_like(x)
    p1 = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * x
    for k in range(2, n + 1):
        c = 2.0 * k + a + b
        a1 = 2.0 * k * (k + a + b) * (c - 2.0)
        a2 = (c - 1.0) * (a * a - b * b)
        a3 = (c - 1.0) * c * (c - 2.0)
        a4 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * c
        p0, p1 = p1, ((a2 + a3 * x) * p1 - a4 * p0) / a1
    return p1, p0


def _jacobi_roots_scan(n: int, a: float, b: float) -> np.ndarray:
    """Roots of P_n^{(a,b)} by sign-change scan on a dense Chebyshev grid.

    Slow-but-sure fallback for parameter ranges where the cosine initial
    guesses do not land in Newton's basin.  P_n has n simple roots in
    (-1, 1), so a fine enough grid brackets them all.
    """
    m = 32 * n
    grid = np.cos(np.linspace(math.pi, 0.0, m))
    vals, _ = _jacobi_rec(n, a, b, grid)
    roots = []
    for i in range(m - 1):
        f0, f1 = vals[i], vals[i + 1]
        if f0 == 0.0:
            roots.append(grid[i])
            continue
        if (f0 > 0) != (f1 > 0):
            lo, hi, flo = grid[i], grid[i + 1], f0
            for _ in range(80):
                mid = 0.5 * (lo + hi)
                fm, _ = _jacobi_rec(n, a, b, np.asarray([mid]))
                if (fm[0] > 0) == (flo > 0):
                    lo, flo = mid, fm[0]
                else:
                    hi = mid
            roots.append(0.5 * (lo + hi))
    if len(roots) != n:
        raise RuntimeError("Gauss-Jacobi root scan failed (internal error)")
    return np.asarray(roots)


def gauss_jacobi(n: int, a: float, b: float):
    """Nodes/weights on [-1, 1] for the weight (1-x)^a (1+x)^b.

    All n roots are polished simultaneously with Newton from cosine initial
    guesses (dense-grid bisection as fallback); the derivative comes from
    the standard first-order relation.  Returns (nodes ascending, weights).
    """
    if n < 1:
        raise ValueError("rule order must be >= 1")
    i = np.arange(1, n + 1, dtype=float)
    theta = math.pi * (i + 0.5 * a - 0.25) / (n + 0.5 * (a + b + 1.0))
    x = np.cos(theta)
    for _ in range(100):
        pn, pn1 = _jacobi_rec(n, a, b, x)
        c = 2.0 * n + a + b
        dp = (n * (a - b - c * x) * pn + 2.0 * (n + a) * (n + b) * pn1) / (c * (1.0 - x * x))
        dx = pn / dp
        x = np.clip(x - dx, -1.0 + 1e-14, 1.0 - 1e-14)
        if np.max(np.abs(dx)) < 1e-15:
            break
    x = np.sort(x)
    if np.any(np.diff(x) <= 0):
        x = _jacobi_roots_scan(n, a, b)
        # one Newton polish from the bisected roots
        for _ in range(4):
            pn, pn1 = _jacobi_rec(n, a, b, x)
            c = 2.0 * n + a + b
            dp = (n * (a - b - c * x) * pn + 2.0 * (n + a) * (n + b) * pn1) / (c * (1.0 - x * x))
            x = x - pn / dp
    pn, pn1 = _jacobi_rec(n, a, b, x)
    c = 2.0 * n + a + b
    dp = (n * (a - b - c * x) * pn + 2.0 * (n + a) * (n + b) * pn1) / (c * (1.0 - x * x))
    lc = (
        (a + b + 1.0) * math.log(2.0)
        + lgamma(n + a + 1.0)
        + lgamma(n + b + 1.0)
        - lgamma(n + a + b + 1.0)
        - lgamma(n + 1.0)
    )
    w = math.exp(lc) / ((1.0 - x * x) * dp * dp)
    if np.any(np.diff(x) <= 0) or np.any(w <= 0) or not np.all(np.isfinite(w)):
        raise RuntimeError("Gauss-Jacobi construction failed (internal error)")
    return x, w


def gauss_jacobi01(n: int, a: float, b: float):
    """Nodes/weights on (0, 1) for the weight u^a (1-u)^b."""
    z, w = gauss_jacobi(n, b, a)     # (1-z)^b (1+z)^a on [-1,1]
    u = 0.5 * (1.0 + z)
    return u, w * 2.0 ** (-a - b - 1.0)


# ---------------------------------------------------------------------------
# Measures on [-1, 1]
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Measure:
    """Weighted measure on [-1, 1].

    kind "mu_alpha":       |t|^{2a+1} dt / (2^{a+1} Gamma(a+1))
    kind "mu_beta_alpha":  same times (1-t^2)^b
    kind "lebesgue":       plain dt (used by the classical Fourier systems)

    The exponents are raw floats (a, b > -1 for integrability); expansion
    admissibility constraints live on Params, not here.
    """

    kind: Literal["mu_alpha", "mu_beta_alpha", "lebesgue"]
    a: float = 0.0
    b: float = 0.0

    def __post_init__(self):
        if self.kind != "lebesgue" and not (self.a > -1.0 and self.b > -1.0):
            raise ValueError("measure exponents must exceed -1")

    @classmethod
    def mu_alpha(cls, alpha: float) -> "Measure":
        return cls("mu_alpha", alpha, 0.0)

    @classmethod
    def mu_beta_alpha(cls, alpha: float, beta: float) -> "Measure":
        return cls("mu_beta_alpha", alpha, beta)

    @classmethod
    def for_params(cls, params: Params, weighted: bool) -> "Measure":
        if weighted:
            return cls("mu_beta_alpha", params.alpha, params.beta)
        return cls("mu_alpha", params.alpha, 0.0)

    def density(self, t: float) -> float:
        if self.kind == "lebesgue":
            return 1.0
        d = abs(t) ** (2.0 * self.a + 1.0) / (2.0 ** (self.a + 1.0) * gamma(self.a + 1.0))
        if self.kind == "mu_beta_alpha":
            d *= (1.0 - t * t) ** self.b
        return d


@dataclass(frozen=True)
class QuadRule:
    """Immutable node/weight rule; exact for the target weight class."""

    nodes: tuple
    weights: tuple
    order: int

    def apply(self, f: Callable) -> complex:
        x = np.asarray(self.nodes)
        w = np.asarray(self.weights)
        fx = np.asarray([f(t) for t in x])
        if not np.all(np.isfinite(np.abs(fx))):
            raise ValueError("integrand produced a non-finite sample")
        return complex(np.dot(w, fx)) if np.iscomplexobj(fx) else float(np.dot(w, fx))

    def apply_vec(self, fvals: np.ndarray):
        return np.dot(np.asarray(self.weights), fvals)


_rule_cache: dict = {}


def _u_rules(measure: Measure, order: int):
    """Even- and odd-part mapped rules on (0,1) for a weighted measure.

    The even part of f maps by u = t^2 onto the weight u^a (1-u)^b; the odd
    part f(t) = t g(t^2) maps onto u^{a+1/2} (1-u)^b via the extra factor t.
    """
    a = measure.a
    b = measure.b if measure.kind == "mu_beta_alpha" else 0.0
    key = ("u", round(a, 14), round(b, 14), order)
    if key not in _rule_cache:
        _rule_cache[key] = (gauss_jacobi01(order, a, b),
                            gauss_jacobi01(order, a + 0.5, b))
    return _rule_cache[key]


def rule_for_measure(measure: Measure, order: int) -> QuadRule:
    """Symmetric rule on [-1, 1] exact for the measure's weight class.

    For the weighted kinds the nodes are the pair +-sqrt(u_i) of the mapped
    even rule; odd integrands then cancel exactly and even ones inherit the
    Gauss exactness in u.
    """
    if order < 8:
        raise ValueError("order must be >= 8")
    if measure.kind == "lebesgue":
        key = ("leg", order)
        if key not in _rule_cache:
            x, w = gauss_jacobi(order, 0.0, 0.0)
            _rule_cache[key] = QuadRule(tuple(x), tuple(w), order)
        return _rule_cache[key]
    a = measure.a
    key = ("sym", measure.kind, round(a, 14),
           round(measure.b, 14) if measure.kind == "mu_beta_alpha" else 0.0,
           order)
    if key not in _rule_cache:
        (u, w), _ = _u_rules(measure, order)
        norm = 2.0 ** (a + 1.0) * gamma(a + 1.0)
        t = np.sqrt(u)
        nodes = np.concatenate([-t[::-1], t])
        weights = np.concatenate([w[::-1], w]) / (2.0 * norm)
        _rule_cache[key] = QuadRule(tuple(nodes), tuple(weights), order)
    return _rule_cache[key]


def integrate_interval(f: Callable, measure: Measure, order: int,
                       interval: Literal["sym", "positive"] = "sym"):
    """Integrate f against the measure over [-1, 1] (or its positive half).

    "sym" evaluates the symmetric node rule (the odd part of f integrates
    to zero against the even density, exactly).  "positive" splits f into
    even and odd parts and integrates each with its own mapped rule.
    """
    if measure.kind == "lebesgue":
        rule = rule_for_measure(measure, order)
        if interval == "sym":
            return rule.apply(f)
        raise ValueError("half-interval integration is for weighted measures")
    if interval == "sym":
        return rule_for_measure(measure, order).apply(f)
    (ue, we), (uo, wo) = _u_rules(measure, order)
    norm = 2.0 ** (measure.a + 1.0) * gamma(measure.a + 1.0)
    te, to = np.sqrt(ue), np.sqrt(uo)
    fe = np.asarray([0.5 * (f(t) + f(-t)) for t in te])
    go = np.asarray([0.5 * (f(t) - f(-t)) / t for t in to])
    if not (np.all(np.isfinite(np.abs(fe))) and np.all(np.isfinite(np.abs(go)))):
        raise ValueError("integrand produced a non-finite sample")
    return (0.5 * np.dot(we, fe) + 0.5 * np.dot(wo, go)) / norm


# ---------------------------------------------------------------------------
# Oscillatory Bessel-product integrals on (0, inf)
# ---------------------------------------------------------------------------

def mcmahon_zero(nu: float, k: int) -> float:
    """McMahon approximation to the k-th positive zero of J_nu.

    Used only to place integration cell edges, so two correction terms are
    plenty; accuracy is ~1e-4 already at k = 3 for desk-scale orders.
    """
    mu = 4.0 * nu * nu
    b = (k + 0.5 * nu - 0.25) * math.pi
    z = b - (mu - 1.0) / (8.0 * b) - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * (8.0 * b) ** 3)
    return z


def _wynn_eps(seq: list):
    """Wynn's epsilon algorithm (the systematic iterated-Aitken scheme).

    Even columns estimate the limit; deepening stops paying once rounding
    noise takes over, so the best candidate is the even-column tail entry
    whose change from the previous even column is smallest.
    """
    e0 = [complex(v) for v in seq]
    n = len(e0)
    if n < 3:
        return e0[-1], float("inf")
    em1 = [0.0 + 0.0j] * (n + 1)
    cur = e0
    cands = [(abs(e0[-1] - e0[-2]), e0[-1])]
    col = 0  # index of the column held in cur; even columns carry values
    while len(cur) >= 2 and col < 24:
        nxt = []
        scale = max(abs(v) for v in cur) + 1e-300
        singular = False
        for i in range(len(cur) - 1):
            d = cur[i + 1] - cur[i]
            if abs(d) < 1e-15 * scale:
                # column converged to rounding level; for a value column
                # that entry is the limit, either way deepening is over
                if col % 2 == 0:
                    cands.append((abs(d), cur[i + 1]))
                singular = True
                break
            nxt.append(em1[i + 1] + 1.0 / d)
        if singular:
            break
        em1, cur = cur, nxt
        col += 1
        if col % 2 == 0 and len(cur) >= 2:
            cands.append((abs(cur[-1] - cur[-2]), cur[-1]))
    err, best = min(cands, key=lambda p: p[0])
    return best, err


def accelerate(partial: list):
    """Extrapolate a sequence of partial sums to its limit.

    Monotone tails (squared-Bessel cells decay like x^{-2} with no sign
    change) go through Richardson extrapolation in 1/k; oscillatory tails,
    including two-frequency beats from products of different arguments, go
    through Wynn's epsilon algorithm, i.e. iterated Aitken to depth >= 4
    whenever enough cells are available.  Returns (value, error_estimate).
    """
    s = [complex(v) for v in partial]
    n = len(s)
    if n < 3:
        return s[-1], float("inf")
    tail = np.asarray(s[-min(n, 12):])
    d = np.diff(tail)
    re = d.real if np.max(np.abs(d.imag)) <= np.max(np.abs(d.real)) else d.imag
    signs = np.sign(re[np.abs(re) > 0])
    monotone = len(signs) >= 3 and np.all(signs[1:] * signs[:-1] > 0)
    if not monotone:
        return _wynn_eps(s[-min(n, 36):])

    # Richardson in 1/k on geometrically spread sample indices (consecutive
    # nodes are too close for a well-conditioned Neville table).  Two spreads
    # are tried: one reaching the whole history (best when the asymptotic
    # expansion holds from the start) and one anchored to the tail (best
    # when early cells are pre-asymptotic); the error estimate arbitrates.
    def richardson(idx: list):
        idx = sorted(set(idx))
        if len(idx) < 3:
            return s[-1], abs(s[-1] - s[-2])
        xs = 1.0 / np.asarray(idx, dtype=float)
        tbl = [complex(s[i - 1]) for i in idx]
        m = len(tbl)
        prev_tbl = tbl
        for lvl in range(1, m):
            new = []
            for i in range(m - lvl):
                x0, x1 = xs[i], xs[i + lvl]
                new.append((x1 * tbl[i] - x0 * tbl[i + 1]) / (x1 - x0))
            prev_tbl, tbl = tbl, new
        return tbl[0], abs(tbl[0] - prev_tbl[0]) + abs(tbl[0] - prev_tbl[-1])

    def geometric(min_idx: int) -> list:
        idx = []
        v = float(n)
        while v >= min_idx and len(idx) < 9:
            idx.append(int(round(v)))
            v /= 1.35
        return idx

    cands = [richardson(geometric(1)),
             richardson(geometric(max(3, n // 3))),
             richardson(list(range(max(1, n - 8), n + 1)))]
    return min(cands, key=lambda p: p[1])


@dataclass
class BesselProductResult:
    value: float
    converged: bool
    cells: int
    error_estimate: float
    last_partials: tuple


_leg16 = None


def _legendre16():
    global _leg16
    if _leg16 is None:
        _leg16 = gauss_jacobi(16, 0.0, 0.0)
    return _leg16


def integrate_bessel_product(lam: float, mu: float, nu: float, t: float,
                             max_cells: int = 400, rtol: float = 1e-7,
                             atol: float = 1e-9,
                             allow_partial: bool = False) -> BesselProductResult:
    """Oscillatory integral  int_0^inf x^(-lam) J_mu(x) J_nu(x t) dx.

    Requires the convergence window -1 < lam < mu + nu + 1 and t > 0; the
    Weber-Schafheitlin boundary t = 1 is allowed only when lam > 0 (the
    orthogonality integrals live there).  The half-line is partitioned at
    the zeros of the faster-oscillating factor, each cell is integrated by
    a fixed 16-point Gauss rule, and the partial-sum sequence is
    extrapolated to infinity.
    """
    if not (-1.0 < lam < mu + nu + 1.0):
        raise ValueError(f"lam={lam} outside convergence window (-1, {mu + nu + 1})")
    if t <= 0.0:
        raise ValueError("t must be positive")
    if t == 1.0 and lam <= 0.0:
        raise ValueError("t = 1 needs lam > 0 for convergence")

    def integrand_arr(x: np.ndarray) -> np.ndarray:
        out = np.empty_like(x)
        for i, xi in enumerate(x):
            out[i] = (xi ** (mu + nu - lam) * t ** nu
                      * bessel_j_ratio(mu, xi) * bessel_j_ratio(nu, xi * t))
        return out

    # cell edges at (approximate) zeros of the faster factor
    if t >= 1.0:
        edges = lambda k: mcmahon_zero(nu, k) / t
    else:
        edges = lambda k: mcmahon_zero(mu, k)

    xg, wg = _legendre16()
    partial = []
    total = 0.0

    # first cell [0, e1]: pull out the algebraic factor x^(mu+nu-lam)
    e1 = edges(1)
    c = mu + nu - lam
    key = ("cell0", round(c, 14))
    if key not in _rule_cache:
        _rule_cache[key] = gauss_jacobi01(24, c, 0.0)
    u0, w0 = _rule_cache[key]
    xs = e1 * u0
    vals = np.array([t ** nu * bessel_j_ratio(mu, x) * bessel_j_ratio(nu, x * t) for x in xs])
    total += e1 ** (c + 1.0) * float(np.dot(w0, vals))
    partial.append(total)

    # the (1 -+ t) beat must be sampled over a few full periods before the
    # extrapolation's error estimate can be trusted; t = 1 has no beat
    beat = abs(1.0 - t)
    if beat == 0.0:
        min_cells = 12
    else:
        min_cells = min(max_cells // 2, max(12, int(math.ceil(6.0 / max(beat, 0.05)))))

    best, best_err = total, float("inf")
    prev_val = None
    k = 1
    while k < max_cells:
        a, b = edges(k), edges(k + 1)
        xs = 0.5 * (b - a) * xg + 0.5 * (a + b)
        total += 0.5 * (b - a) * float(np.dot(wg, integrand_arr(xs)))
        partial.append(total)
        k += 1
        if k >= min_cells and k % 4 == 0:
            val, err = accelerate(partial)
            if err < best_err:
                best, best_err = val, err
            stable = prev_val is not None and \
                abs(val - prev_val) <= max(rtol * abs(val), atol)
            prev_val = val
            if stable and (err <= rtol * max(abs(val), 1.0e-30) or err <= atol):
                return BesselProductResult(float(val.real if isinstance(val, complex) else val),
                                           True, k, float(err),
                                           (partial[-2], partial[-1]))
    val, err = accelerate(partial)
    if err < best_err:
        best, best_err = val, err
    res = BesselProductResult(float(best.real if isinstance(best, complex) else best),
                              False, k, float(best_err), (partial[-2], partial[-1]))
    if not allow_partial:
        raise RuntimeError(
            f"bessel-product acceleration did not converge after {k} cells; "
            f"last partial sums {partial[-2]:.12e}, {partial[-1]:.12e}")
    return res
