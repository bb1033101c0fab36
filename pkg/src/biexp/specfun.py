"""Scalar special functions: Gamma family, Bessel J of real order, the
normalized modified Bessel function, the Dunkl kernel on the imaginary
axis, Bessel zero tables, and Lommel polynomials.

Everything here is plain float64 arithmetic with explicit regime switches;
no external special-function libraries are used at runtime.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

__all__ = [
    "Params",
    "ZeroTable",
    "gamma",
    "lgamma",
    "pochhammer",
    "bessel_j",
    "bessel_j_ratio",
    "bessel_i_norm",
    "dunkl_kernel",
    "dunkl_kernel_z",
    "bessel_zeros",
    "lommel_r",
    "lommel_h",
]

# Hard cap for all series used in this module (tail-relative 1e-18 cutoff).
SERIES_TOL = 1e-18
SERIES_CAP = 500


@dataclass(frozen=True)
class Params:
    """Index pair (alpha, beta) carried through every expansion.

    Admissibility: alpha > -1, beta > -1 and alpha + beta > -1.  Operations
    that additionally need beta < 1 check that locally.
    """

    alpha: float
    beta: float

    def __post_init__(self):
        a, b = self.alpha, self.beta
        if not (a > -1.0 and b > -1.0 and a + b > -1.0):
            raise ValueError(
                f"inadmissible parameters alpha={a}, beta={b}: "
                "need alpha > -1, beta > -1, alpha + beta > -1"
            )

    @property
    def ab(self) -> float:
        return self.alpha + self.beta


# ---------------------------------------------------------------------------
# Gamma family
# ---------------------------------------------------------------------------

# Lanczos approximation, g = 7, 9 coefficients (~15 significant digits on
# the positive axis; reflection handles x < 0.5).
_LANCZOS_G = 7.0
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def _lanczos_sum(z: float) -> float:
    s = _LANCZOS[0]
    for i in range(1, 9):
        s += _LANCZOS[i] / (z + i)
    return s


def gamma(x: float) -> float:
    """Gamma function for real x, poles at nonpositive integers."""
    if x <= 0.0 and x == math.floor(x):
        raise ValueError(f"gamma pole at nonpositive integer x={x}")
    if x < 0.5:
        # reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
        return math.pi / (math.sin(math.pi * x) * gamma(1.0 - x))
    z = x - 1.0
    s = _lanczos_sum(z)
    t = z + _LANCZOS_G + 0.5
    return math.sqrt(2.0 * math.pi) * t ** (z + 0.5) * math.exp(-t) * s


def lgamma(x: float) -> float:
    """log Gamma(x) for x > 0 (used where Gamma itself would overflow)."""
    if x <= 0.0:
        raise ValueError(f"lgamma requires x > 0, got {x}")
    if x < 0.5:
        return math.log(math.pi / math.sin(math.pi * x)) - lgamma(1.0 - x)
    z = x - 1.0
    s = _lanczos_sum(z)
    t = z + _LANCZOS_G + 0.5
    return 0.5 * math.log(2.0 * math.pi) + (z + 0.5) * math.log(t) - t + math.log(s)


def pochhammer(a: float, n: int) -> float:
    """Rising factorial (a)_n = a (a+1) ... (a+n-1), computed as a product."""
    if n < 0:
        raise ValueError("pochhammer needs n >= 0")
    p = 1.0
    for k in range(n):
        p *= a + k
    return p


# ---------------------------------------------------------------------------
# Bessel J_nu for real order nu > -1
# ---------------------------------------------------------------------------

def _jratio_series(nu: float, x: float) -> float:
    """J_nu(x)/x^nu by the ascending series; safe for |x| <= ~12."""
    x2 = 0.25 * x * x
    if nu > 150.0:
        t = math.exp(-nu * math.log(2.0) - lgamma(nu + 1.0))
    else:
        t = 1.0 / (2.0 ** nu * gamma(nu + 1.0))
    s = t
    for k in range(1, SERIES_CAP):
        t *= -x2 / (k * (nu + k))
        s += t
        if abs(t) < SERIES_TOL * abs(s):
            return s
    raise RuntimeError("bessel series did not converge (internal error)")


def _jratio_miller(nu: float, x: float) -> float:
    """J_nu(x)/x^nu by backward recurrence with a Neumann-sum normalization.

    Start order is above the turning point so that the downward recurrence
    locks onto the minimal solution; the sum over even offsets normalizes it.
    """
    top = max(x, nu)
    m_max = int(math.ceil(top + 15.0 * top ** (1.0 / 3.0) + 25.0))
    if (m_max - int(math.floor(nu))) % 2 == 1:
        m_max += 1
    fp = 0.0          # f_{m+1}
    fc = 1e-30        # f_m
    norm = 0.0        # sum_k d_k f_{2k}
    d = None
    f0 = 0.0
    # walk m = m_max .. 0 over orders nu + m
    fs = [0.0] * (m_max + 1)
    fs[m_max] = fc
    for m in range(m_max, 0, -1):
        fm1 = (2.0 * (nu + m) / x) * fc - fp
        fp, fc = fc, fm1
        fs[m - 1] = fc
        if abs(fc) > 1e250:
            fc *= 1e-250
            fp *= 1e-250
            for i in range(m - 1, m_max + 1):
                fs[i] *= 1e-250
    f0 = fs[0]
    # normalization sum: d_0 = 1, d_k = (nu+2k) (nu+1)_{k-1} / k!
    d = 1.0
    norm = d * f0
    for k in range(1, m_max // 2 + 1):
        if k == 1:
            d = (nu + 2.0)
        else:
            d *= (nu + 2.0 * k) * (nu + k - 1.0) / ((nu + 2.0 * k - 2.0) * k)
        norm += d * fs[2 * k]
    if nu > 150.0:
        scale = math.exp(-nu * math.log(2.0) - lgamma(nu + 1.0))
    else:
        scale = 1.0 / (2.0 ** nu * gamma(nu + 1.0))
    return f0 * scale / norm


def _jratio_asymptotic(nu: float, x: float):
    """Large-argument cosine asymptotic for J_nu(x)/x^nu.

    Returns None when the expansion cannot reach ~1e-13 before its terms
    start growing (caller falls back to backward recurrence).
    """
    mu = 4.0 * nu * nu
    # a_k = prod_{j<=k} (mu - (2j-1)^2) / (k! 8^k); P sums even k, Q odd k
    p = 1.0
    q = 0.0
    term = 1.0
    ok = False
    prev = abs(term)
    for k in range(1, 18):
        term *= (mu - (2.0 * k - 1.0) ** 2) / (k * 8.0 * x)
        mag = abs(term)
        if k % 2 == 0:
            p += term * (-1.0) ** (k // 2)
        else:
            q += term * (-1.0) ** ((k - 1) // 2)
        if mag < 1e-17:
            ok = True
            break
        if mag > prev:
            ok = mag < 1e-13
            break
        prev = mag
    if not ok and prev > 1e-13:
        return None
    chi = x - (0.5 * nu + 0.25) * math.pi
    j = math.sqrt(2.0 / (math.pi * x)) * (p * math.cos(chi) - q * math.sin(chi))
    if nu > 150.0:
        return j * math.exp(-nu * math.log(x))
    return j / x ** nu


def bessel_j_ratio(nu: float, x: float) -> float:
    """J_nu(x)/x^nu, an even entire function of x; stable for all regimes.

    This is the workhorse form: it is finite at x = 0 and avoids the x^nu
    overflow/underflow of J itself at large order.
    """
    if nu <= -1.0:
        raise ValueError(f"order must exceed -1, got nu={nu}")
    x = abs(x)
    if x == 0.0:
        if nu > 150.0:
            return math.exp(-nu * math.log(2.0) - lgamma(nu + 1.0))
        return 1.0 / (2.0 ** nu * gamma(nu + 1.0))
    if x <= 9.0 or x * x <= 4.0 * (nu + 1.0):
        return _jratio_series(nu, x)
    if x > 50.0:
        r = _jratio_asymptotic(nu, x)
        if r is not None:
            return r
    return _jratio_miller(nu, x)


def bessel_j(nu: float, x: float, xmax: float = 500.0) -> float:
    """Bessel function J_nu(x) for real nu > -1, x >= 0, |x| <= xmax.

    Negative x is allowed only for integer nu (parity continuation); use
    bessel_j_ratio for the even ratio form at general order.
    """
    if nu <= -1.0:
        raise ValueError(f"order must exceed -1, got nu={nu}")
    if abs(x) > xmax:
        raise ValueError(f"|x|={abs(x)} exceeds xmax={xmax}")
    if x == 0.0:
        return 1.0 if nu == 0.0 else 0.0
    ax = abs(x)
    val = bessel_j_ratio(nu, ax) * ax ** nu
    if x < 0.0:
        if nu != math.floor(nu):
            raise ValueError("bessel_j at negative x needs integer order; "
                             "use bessel_j_ratio for the even ratio form")
        return val * (-1.0) ** int(nu)
    return val


# ---------------------------------------------------------------------------
# Normalized modified Bessel function and the Dunkl kernel
# ---------------------------------------------------------------------------

def bessel_i_norm(alpha: float, z: complex) -> complex:
    """Normalized modified Bessel function of order alpha at complex z:

        Gamma(alpha+1) * sum_{n>=0} (z/2)^{2n} / (n! Gamma(n+alpha+1)).

    Equals 1 at z = 0; for purely imaginary z = ix it reduces to
    2^alpha Gamma(alpha+1) J_alpha(x) / x^alpha (real).
    """
    if alpha <= -1.0:
        raise ValueError(f"order must exceed -1, got alpha={alpha}")
    z = complex(z)
    w = 0.25 * z * z
    t = 1.0 + 0.0j
    s = t
    for n in range(1, SERIES_CAP):
        t *= w / (n * (alpha + n))
        s += t
        if abs(t) < SERIES_TOL * abs(s):
            return s
    raise RuntimeError("bessel_i_norm series did not converge (internal error)")


def bessel_i_norm_imag(alpha: float, x: float) -> float:
    """The real value of the normalized modified Bessel function at ix.

    Routed through the stable J ratio so that large |x| (far beyond the
    alternating-series comfort zone) stays accurate.
    """
    return 2.0 ** alpha * gamma(alpha + 1.0) * bessel_j_ratio(alpha, x)


def dunkl_kernel_z(alpha: float, z: complex) -> complex:
    """Dunkl kernel at complex argument:

        E_alpha(z) = I_alpha(z) + z/(2(alpha+1)) I_{alpha+1}(z),

    with I the normalized modified Bessel function above.  It is the unique
    solution of the Dunkl eigenvalue problem with value 1 at the origin.
    """
    z = complex(z)
    return bessel_i_norm(alpha, z) + z / (2.0 * (alpha + 1.0)) * bessel_i_norm(alpha + 1.0, z)


def dunkl_kernel(alpha: float, x: float) -> complex:
    """E_alpha(ix) for real x: real part even in x, imaginary part odd."""
    if alpha <= -1.0:
        raise ValueError(f"order must exceed -1, got alpha={alpha}")
    if abs(x) <= 12.0:
        re = bessel_i_norm(alpha, 1j * x).real
        im = x / (2.0 * (alpha + 1.0)) * bessel_i_norm(alpha + 1.0, 1j * x).real
        return complex(re, im)
    c = 2.0 ** alpha * gamma(alpha + 1.0)
    re = c * bessel_j_ratio(alpha, x)
    im = c * x * bessel_j_ratio(alpha + 1.0, x)
    return complex(re, im)


# ---------------------------------------------------------------------------
# Zeros of J_nu
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ZeroTable:
    """First k positive zeros of J_nu, ascending; immutable."""

    nu: float
    zeros: tuple = field(default_factory=tuple)

    def __len__(self):
        return len(self.zeros)

    def signed(self, n: int) -> float:
        """Signed zero sequence: s_0 = 0, s_{-n} = -s_n, s_n = n-th zero."""
        if n == 0:
            return 0.0
        z = self.zeros[abs(n) - 1]
        return z if n > 0 else -z


def _newton_zero(nu: float, lo: float, hi: float) -> float:
    """Refine a bracketed simple zero of J_nu by safeguarded Newton.

    The bracket is maintained throughout; a Newton step that would leave it
    is replaced by bisection.  The derivative uses J'_nu = (nu/x) J_nu -
    J_{nu+1}, written in ratio form so no order below nu is needed.
    """
    flo = bessel_j_ratio(nu, lo)
    x = 0.5 * (lo + hi)
    for _ in range(200):
        f = bessel_j_ratio(nu, x)
        if f == 0.0:
            return x
        if (f > 0) == (flo > 0):
            lo, flo = x, f
        else:
            hi = x
        r1 = bessel_j_ratio(nu + 1.0, x)
        slope = nu / x - x * r1 / f        # d/dx log|J_nu|
        xn = x - 1.0 / slope if slope != 0.0 else 0.5 * (lo + hi)
        if not (lo < xn < hi):
            xn = 0.5 * (lo + hi)
        if abs(xn - x) < 5e-16 * max(1.0, abs(xn)) or hi - lo < 5e-16 * max(1.0, abs(xn)):
            return xn
        x = xn
    raise RuntimeError(f"zero refinement for nu={nu} did not converge (internal error)")


def bessel_zeros(nu: float, k_max: int) -> ZeroTable:
    """First k_max positive zeros of J_nu to ~1e-13 relative accuracy.

    Brackets are found by scanning for sign changes; successive zeros are
    separated by a bit more than 2 and less than pi + 1 at desk-scale
    orders, which bounds the scan window after the first zero.
    """
    if nu <= -1.0:
        raise ValueError(f"order must exceed -1, got nu={nu}")
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    zeros = []
    x = 0.05
    step = 0.2 if nu < 2.0 else 0.4
    f_prev = bessel_j_ratio(nu, x)
    guard = 0
    while len(zeros) < k_max:
        xn = x + step
        f = bessel_j_ratio(nu, xn)
        if f == 0.0:
            zeros.append(xn)
            x = xn + 1.0
            f_prev = bessel_j_ratio(nu, x)
        elif (f > 0) != (f_prev > 0):
            z = _newton_zero(nu, x, xn)
            zeros.append(z)
            x = z + 1.0
            f_prev = bessel_j_ratio(nu, x)
            step = 0.5
        else:
            x, f_prev = xn, f
        guard += 1
        if guard > 200000:
            raise RuntimeError("zero bracketing exceeded iteration cap (internal error)")
    return ZeroTable(nu=nu, zeros=tuple(zeros))


# ---------------------------------------------------------------------------
# Lommel polynomials
# ---------------------------------------------------------------------------

def lommel_r(n: int, a: float, z):
    """Lommel polynomial R_{n,a}(z) by the forward three-term recurrence

        R_{n+1} = (2(n+a)/z) R_n - R_{n-1},  R_{-1} = 0, R_0 = 1.

    Accepts complex z.  Note R_{n,a}(-z) = (-1)^n R_{n,a}(z).
    """
    if n < -1:
        raise ValueError("lommel_r needs n >= -1")
    if a <= 0.0:
        raise ValueError("lommel_r needs a > 0")
    if z == 0:
        raise ZeroDivisionError("R_{n,a}(z) is singular at z = 0; use lommel_h")
    return lommel_h(n, a, 1.0 / z)


def lommel_h(n: int, a: float, w):
    """Modified Lommel polynomial h_{n,a}(w) = R_{n,a}(1/w); complex w ok.

        h_{n+1} = 2(n+a) w h_n - h_{n-1},  h_{-1} = 0, h_0 = 1.
    """
    if n < -1:
        raise ValueError("lommel_h needs n >= -1")
    if a <= 0.0:
        raise ValueError("lommel_h needs a > 0")
    hm = 0.0  # h_{-1}
    hc = 1.0  # h_0
    if n == -1:
        return 0.0 * w if isinstance(w, complex) else 0.0
    if n == 0:
        return hc + 0.0 * w if isinstance(w, complex) else 1.0
    for k in range(0, n):
        hn = 2.0 * (k + a) * w * hc - hm
        hm, hc = hc, hn
    return hc
