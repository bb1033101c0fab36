"""Jacobi and generalized Gegenbauer polynomial families.

The generalized Gegenbauer family C_n^{(b+1/2, a+1/2)} is built from Jacobi
polynomials in 1 - 2t^2; it is orthogonal on [-1, 1] for the weight
|t|^{2a+1} (1-t^2)^b and reduces to the classical Gegenbauer family at
a = -1/2.  The reflection-group derivative ("Dunkl operator") acts on it by
a pure index shift, which is what the spectral module exploits.
"""

from __future__ import annotations

from dataclasses import dataclass

from .specfun import Params, gamma, pochhammer

__all__ = [
    "JacobiFamily",
    "GenGegenbauerFamily",
    "ConnectionCoeffs",
    "jacobi_eval",
    "jacobi_u_coeffs",
    "classical_gegenbauer",
    "chebyshev_t",
    "dunkl_apply_poly",
    "poly_eval",
]

# Terminating-sum path up to here, recurrence beyond.  The sum's alternating
# cancellation grows like the central binomial; past degree ~10 it cannot
# hold 1e-11 at y near 0 in float64, so the switch sits there.
_HYP_MAX_N = 10


def _jacobi_hyp(n: int, a: float, b: float, y: float) -> float:
    """P_n^{(a,b)}(y) as the terminating hypergeometric sum.

    Negative y reflects to positive argument (swapping the parameters) so
    the expansion variable (1-y)/2 stays at most 1/2.
    """
    if y < 0.0:
        return (-1.0) ** n * _jacobi_hyp(n, b, a, -y)
    pref = gamma(n + a + 1.0) / (gamma(a + 1.0) * gamma(n + 1.0))
    u = 0.5 * (1.0 - y)
    term = 1.0
    s = 1.0
    for k in range(n):
        term *= (-(n - k)) * (n + a + b + 1.0 + k) / ((a + 1.0 + k) * (k + 1.0)) * u
        s += term
    return pref * s


def _jacobi_recur(n: int, a: float, b: float, y: float) -> float:
    """P_n^{(a,b)}(y) by the three-term recurrence (stable at larger n)."""
    p0 = 1.0
    if n == 0:
        return p0
    p1 = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * y
    for k in range(2, n + 1):
        c = 2.0 * k + a + b
        a1 = 2.0 * k * (k + a + b) * (c - 2.0)
        a2 = (c - 1.0) * (a * a - b * b)
        a3 = (c - 1.0) * c * (c - 2.0)
        a4 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * c
        p0, p1 = p1, ((a2 + a3 * y) * p1 - a4 * p0) / a1
    return p1


def jacobi_eval(n: int, a: float, b: float, y: float) -> float:
    """Jacobi polynomial P_n^{(a,b)}(y), parameters a, b > -1."""
    if n < 0:
        raise ValueError("degree must be >= 0")
    if n == 0:
        return 1.0
    if n <= _HYP_MAX_N:
        return _jacobi_hyp(n, a, b, y)
    return _jacobi_recur(n, a, b, y)


def jacobi_u_coeffs(n: int, a: float, b: float) -> list:
    """Coefficients c_k with P_n^{(a,b)}(1 - 2u) = sum_k c_k u^k, exact in
    float64 for the low degrees the operator checks use."""
    pref = gamma(n + a + 1.0) / (gamma(a + 1.0) * gamma(n + 1.0))
    coeffs = [pref]
    term = pref
    for k in range(n):
        term *= (-(n - k)) * (n + a + b + 1.0 + k) / ((a + 1.0 + k) * (k + 1.0))
        coeffs.append(term)
    return coeffs


@dataclass(frozen=True)
class JacobiFamily:
    """Fixed-parameter Jacobi family P_n^{(a,b)}, a, b > -1."""

    a: float
    b: float

    def __post_init__(self):
        if not (self.a > -1.0 and self.b > -1.0):
            raise ValueError("Jacobi parameters must exceed -1")

    def eval(self, n: int, y: float) -> float:
        return jacobi_eval(n, self.a, self.b, y)


@dataclass(frozen=True)
class ConnectionCoeffs:
    """Coefficients A_n, B_n of the weight-raising three-term relation."""

    A: float
    B: float


@dataclass(frozen=True)
class GenGegenbauerFamily:
    """Generalized Gegenbauer family for an index pair (alpha, beta).

    Members have parity (-1)^n and degree exactly n:

        C_{2m}(t)   = (-1)^m ((a+b+1)_m / (a+1)_m)   P_m^{(a,b)}(1-2t^2)
        C_{2m+1}(t) = (-1)^m ((a+b+1)_{m+1}/(a+1)_{m+1}) t P_m^{(a+1,b)}(1-2t^2)

    with (a, b) = (alpha, beta).  Orthogonal for |t|^{2a+1}(1-t^2)^b dt.
    """

    params: Params

    def eval(self, n: int, t: float) -> float:
        if n < 0:
            raise ValueError("degree must be >= 0")
        a, b = self.params.alpha, self.params.beta
        m, r = divmod(n, 2)
        sgn = (-1.0) ** m
        if r == 0:
            return sgn * pochhammer(a + b + 1.0, m) / pochhammer(a + 1.0, m) \
                * jacobi_eval(m, a, b, 1.0 - 2.0 * t * t)
        return sgn * pochhammer(a + b + 1.0, m + 1) / pochhammer(a + 1.0, m + 1) \
            * t * jacobi_eval(m, a + 1.0, b, 1.0 - 2.0 * t * t)

    def norm(self, n: int) -> float:
        """Squared norm h_n against (1-t^2)^beta dmu_alpha, closed form."""
        a, b = self.params.alpha, self.params.beta
        m, r = divmod(n, 2)
        if r == 0:
            return (gamma(a + 1.0) * gamma(b + m + 1.0) * gamma(a + b + m + 1.0)
                    / (2.0 ** (a + 1.0) * (a + b + 2.0 * m + 1.0)
                       * gamma(a + b + 1.0) ** 2 * gamma(a + m + 1.0) * gamma(m + 1.0)))
        return (gamma(a + 1.0) * gamma(b + m + 1.0) * gamma(a + b + m + 2.0)
                / (2.0 ** (a + 1.0) * (a + b + 2.0 * m + 2.0)
                   * gamma(a + b + 1.0) ** 2 * gamma(a + m + 2.0) * gamma(m + 1.0)))

    def coeffs(self, n: int) -> list:
        """Monomial coefficients of C_n in t (exact at the low degrees the
        operator identities are checked at)."""
        a, b = self.params.alpha, self.params.beta
        m, r = divmod(n, 2)
        sgn = (-1.0) ** m
        out = [0.0] * (n + 1)
        if r == 0:
            pref = sgn * pochhammer(a + b + 1.0, m) / pochhammer(a + 1.0, m)
            for k, c in enumerate(jacobi_u_coeffs(m, a, b)):
                out[2 * k] = pref * c
        else:
            pref = sgn * pochhammer(a + b + 1.0, m + 1) / pochhammer(a + 1.0, m + 1)
            for k, c in enumerate(jacobi_u_coeffs(m, a + 1.0, b)):
                out[2 * k + 1] = pref * c
        return out

    def raised(self) -> "GenGegenbauerFamily":
        """The companion family with beta raised by one (weight times 1-t^2)."""
        return GenGegenbauerFamily(Params(self.params.alpha, self.params.beta + 1.0))

    def connection(self, n: int) -> ConnectionCoeffs:
        """A_n, B_n with

            (a+b+1)(1-r^2) C~_{n-1}(r) = A_n C_{n-1}(r) - B_n C_{n+1}(r),

        where C~ is the raised family; closed forms split by parity of n.
        """
        if n < 1:
            raise ValueError("connection needs n >= 1")
        a, b = self.params.alpha, self.params.beta
        if n % 2 == 1:
            k = (n - 1) // 2
            return ConnectionCoeffs(
                A=(b + k + 1.0) * (a + b + k + 1.0) / (a + b + 2.0 * k + 2.0),
                B=(k + 1.0) * (a + k + 1.0) / (a + b + 2.0 * k + 2.0),
            )
        k = n // 2
        return ConnectionCoeffs(
            A=(b + k) * (a + b + k + 1.0) / (a + b + 2.0 * k + 1.0),
            B=k * (a + k + 1.0) / (a + b + 2.0 * k + 1.0),
        )

    def inverse_connection_value(self, n: int, t: float) -> float:
        """Right side of C_n = ((a+b+1)/(a+b+n+1)) (C~_n - C~_{n-2})."""
        if n < 1:
            raise ValueError("needs n >= 1")
        a, b = self.params.alpha, self.params.beta
        up = self.raised()
        lower = up.eval(n, t) - (up.eval(n - 2, t) if n >= 2 else 0.0)
        return (a + b + 1.0) / (a + b + n + 1.0) * lower


def chebyshev_t(n: int, t: float) -> float:
    """Chebyshev polynomial T_n(t)."""
    if n == 0:
        return 1.0
    p0, p1 = 1.0, t
    for _ in range(n - 1):
        p0, p1 = p1, 2.0 * t * p1 - p0
    return p1


def classical_gegenbauer(n: int, lam: float, t: float) -> float:
    """Classical Gegenbauer C_n^{lam}(t) for lam > -1/2.

    The degenerate lam = 0 family follows the Chebyshev normalization
    (T_0 and (2/n) T_n), the usual convention for plane-wave expansions.
    """
    if lam == 0.0:
        if n == 0:
            return 1.0
        return 2.0 / n * chebyshev_t(n, t)
    if n == 0:
        return 1.0
    p0, p1 = 1.0, 2.0 * lam * t
    for k in range(2, n + 1):
        p0, p1 = p1, (2.0 * t * (k + lam - 1.0) * p1 - (k + 2.0 * lam - 2.0) * p0) / k
    return p1


def poly_eval(coeffs: list, t: float) -> float:
    """Evaluate a dense monomial-coefficient polynomial (Horner)."""
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * t + c
    return acc


def dunkl_apply_poly(alpha: float, coeffs: list) -> list:
    """Apply the reflection-group derivative to a monomial polynomial:

        t^m  ->  (m + (2 alpha + 1) [m odd]) t^{m-1}.

    On even polynomials this is the plain derivative; at alpha = -1/2 it is
    the plain derivative on everything.
    """
    if len(coeffs) <= 1:
        return [0.0]
    out = [0.0] * (len(coeffs) - 1)
    for m in range(1, len(coeffs)):
        factor = m + (2.0 * alpha + 1.0) * (m % 2)
        out[m - 1] = coeffs[m] * factor
    return out
