"""Special-function kernel: generalized Laguerre polynomials, orthonormal-Laguerre
coefficients, partial Bell polynomials, and the terminating symmetric Lauricella
function used to linearize integer powers of Laguerre polynomials.

The small public evaluators work in double precision.  The large alternating
sums behind ``lauricella_fa_symmetric`` / ``theta0`` lose many digits to
cancellation for high powers, so they run through mpmath at an adaptively
chosen working precision and return floats.
"""

from __future__ import annotations

import math

import mpmath as mp
import numpy as np
from scipy.special import gammaln

__all__ = [
    "laguerre",
    "laguerre_deriv",
    "pochhammer",
    "orthonormal_laguerre_coeffs",
    "poly_power",
    "bell_polynomial",
    "orthonormal_power_coeffs_bell",
    "lauricella_fa_symmetric",
    "theta0",
]


def laguerre(n: int, alpha: float, x):
    """Generalized Laguerre polynomial L_n^alpha(x) by the three-term recurrence.

    ``x`` may be a scalar or ndarray.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    x = np.asarray(x, dtype=float)
    prev = np.ones_like(x)
    if n == 0:
        return prev if prev.ndim else float(prev)
    cur = 1.0 + alpha - x
    for k in range(2, n + 1):
        prev, cur = cur, ((2 * k - 1 + alpha - x) * cur - (k - 1 + alpha) * prev) / k
    return cur if cur.ndim else float(cur)


def laguerre_deriv(n: int, alpha: float, x):
    """d/dx L_n^alpha(x) = -L_{n-1}^{alpha+1}(x)."""
    if n == 0:
        x = np.asarray(x, dtype=float)
        zero = np.zeros_like(x)
        return zero if zero.ndim else 0.0
    result = laguerre(n - 1, alpha + 1.0, x)
    return -result


def pochhammer(a: float, j: int) -> float:
    """Rising factorial (a)_j, exact for non-positive-integer a (termination)."""
    if j < 0:
        raise ValueError("j must be >= 0")
    if j == 0:
        return 1.0
    if a <= 0 and float(a).is_integer():
        # (a)_j vanishes once the product crosses zero.
        if a + j - 1 >= 1:
            return 0.0
        out = 1.0
        for i in range(j):
            out *= a + i
        return out
    return math.exp(gammaln(a + j) - gammaln(a)) * (1.0 if a > 0 else _poch_sign(a, j))


def _poch_sign(a: float, j: int) -> float:
    # Sign of (a)_j for negative non-integer a: one sign flip per negative factor.
    neg = sum(1 for i in range(j) if a + i < 0)
    return -1.0 if neg % 2 else 1.0


def orthonormal_laguerre_coeffs(n: int, alpha: float) -> np.ndarray:
    """Monomial coefficients (ascending) of the orthonormal Laguerre polynomial.

    The polynomial satisfies int_0^inf x^alpha e^-x Ltilde_n(x)^2 dx = 1.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    k = np.arange(n + 1)
    log_mag = (
        0.5 * (gammaln(n + alpha + 1.0) - gammaln(n + 1.0))
        - gammaln(alpha + k + 1.0)
        + gammaln(n + 1.0)
        - gammaln(k + 1.0)
        - gammaln(n - k + 1.0)
    )
    return np.where(k % 2 == 0, 1.0, -1.0) * np.exp(log_mag)


def poly_power(c: np.ndarray, s: int) -> np.ndarray:
    """Coefficients of c(x)**s by repeated convolution."""
    if s < 1:
        raise ValueError("s must be >= 1")
    c = np.asarray(c, dtype=float)
    out = c.copy()
    for _ in range(s - 1):
        out = np.convolve(out, c)
    return out


def bell_polynomial(m: int, t: int, a) -> float:
    """Partial Bell polynomial B_{m,t}(a_1, ..., a_{m-t+1}) by recurrence."""
    if not 1 <= t <= m:
        raise ValueError("require 1 <= t <= m")
    a = np.asarray(a, dtype=float)
    if a.size < m - t + 1:
        raise ValueError("need at least m - t + 1 arguments")
    # B[mu][tau] with B[0][0] = 1, built from
    # B_{mu,tau} = sum_i C(mu-1, i-1) a_i B_{mu-i, tau-1}.
    table = [[0.0] * (t + 1) for _ in range(m + 1)]
    table[0][0] = 1.0
    for tau in range(1, t + 1):
        for mu in range(tau, m + 1):
            acc = 0.0
            for i in range(1, mu - tau + 2):
                if i - 1 < a.size:
                    acc += math.comb(mu - 1, i - 1) * a[i - 1] * table[mu - i][tau - 1]
            table[mu][tau] = acc
    return table[m][t]


def orthonormal_power_coeffs_bell(n: int, alpha: float, power: int) -> np.ndarray:
    """Monomial coefficients of Ltilde_n^power via partial Bell polynomials.

    Equivalent to poly_power(orthonormal_laguerre_coeffs(n, alpha), power);
    kept as an independent route for cross-checking.
    """
    if power < 1:
        raise ValueError("power must be >= 1")
    c = orthonormal_laguerre_coeffs(n, alpha)
    deg = n * power
    # Bell arguments a_i = i! * c_{i-1}, zero-padded beyond degree n.
    a = np.zeros(deg + 1)
    for i in range(1, min(n + 1, deg) + 2):
        if i - 1 <= n:
            a[i - 1] = math.factorial(i) * c[i - 1]
    out = np.empty(deg + 1)
    for k in range(deg + 1):
        b = bell_polynomial(k + power, power, a[: k + 1])
        out[k] = math.exp(gammaln(power + 1.0) - gammaln(k + power + 1.0)) * b
    return out


# ---------------------------------------------------------------------------
# mpmath internals
# ---------------------------------------------------------------------------

_MIN_DPS = 50


def _mp_series_coeffs(n: int, c):
    """Coefficients tau_j = (-n)_j / ((c)_j j!) of the 1F1(-n; c; y) series."""
    coeffs = [mp.mpf(1)]
    for j in range(1, n + 1):
        # (-n)_j picks up factor (-n + j - 1); (c)_j factor (c + j - 1).
        coeffs.append(coeffs[-1] * (-n + j - 1) / ((c + j - 1) * j))
    return coeffs


def _mp_poly_pow(coeffs, s: int):
    out = list(coeffs)
    base = list(coeffs)
    for _ in range(s - 1):
        new = [mp.mpf(0)] * (len(out) + len(base) - 1)
        for i, ci in enumerate(out):
            for j, bj in enumerate(base):
                new[i + j] += ci * bj
        out = new
    return out


def _mp_signed_sum(terms):
    """Sum with cancellation measurement; returns (sum, abs_sum)."""
    total = mp.mpf(0)
    total_abs = mp.mpf(0)
    for t in terms:
        total += t
        total_abs += abs(t)
    return total, total_abs


def _cancellation_digits(total, total_abs) -> int:
    if total == 0 or total_abs == 0:
        return 0
    return max(0, int(mp.ceil(mp.log10(total_abs / abs(total)))))


def _mp_lauricella(a, n: int, c, s: int, k: int, t, dps: int):
    """Terminating symmetric Lauricella F_A via the polynomial-power reduction."""
    with mp.workdps(dps):
        a = mp.mpf(a)
        c = mp.mpf(c)
        t = mp.mpf(t)
        tau = _mp_series_coeffs(n, c)
        d = _mp_poly_pow(tau, s) if s > 1 else list(tau)
        terms = []
        for big_j, dj in enumerate(d):
            if dj == 0:
                continue
            base = mp.rf(a, big_j) * dj * t**big_j
            for i in range(k + 1):
                # (a)_{J+i} = (a)_J (a+J)_i and (-k)_i/((1)_i i!) = (-1)^i C(k,i)/i!.
                w = mp.mpf(math.comb(k, i)) / mp.factorial(i)
                if i % 2:
                    w = -w
                terms.append(base * mp.rf(a + big_j, i) * w)
        total, total_abs = _mp_signed_sum(terms)
        return total, _cancellation_digits(total, total_abs)


def _adaptive(fun):
    """Re-run an mp computation at higher precision if cancellation ate into it."""
    dps = _MIN_DPS
    for _ in range(6):
        value, lost = fun(dps)
        if lost <= dps - 25:
            return value
        dps = lost + 40
    return value


def lauricella_fa_symmetric(a: float, n: int, c: float, s: int, k: int, t: float) -> float:
    """Terminating Lauricella F_A with s equal parameter triples (-n; c; t) and a
    final (-k; 1; 1) slot, evaluated by the symmetric polynomial-power reduction.
    """
    if n < 0 or k < 0 or s < 1:
        raise ValueError("require n >= 0, k >= 0, s >= 1")
    if n == 0 and k == 0:
        return 1.0
    value = _adaptive(lambda dps: _mp_lauricella(a, n, c, s, k, t, dps))
    return float(value)


def _mp_theta0(q: int, n: int, gamma_ell, dps: int):
    with mp.workdps(dps):
        g = mp.mpf(gamma_ell)
        alpha = g + mp.mpf(1) / 2
        fa, lost = _mp_lauricella(q * g + mp.mpf(3) / 2, n, g + mp.mpf(3) / 2,
                                  2 * q, 0, mp.mpf(1) / q, dps)
        binom = mp.gamma(n + alpha + 1) / (mp.gamma(alpha + 1) * mp.factorial(n))
        return mp.gamma(q * g + mp.mpf(3) / 2) * binom ** (2 * q) * fa, lost


def theta0_exact(q: int, n: int, gamma_ell: float):
    """theta0 as an mpf, for callers that need its logarithm without overflow."""
    if q < 1 or q != int(q):
        raise ValueError("q must be an integer >= 1")
    return _adaptive(lambda dps: _mp_theta0(int(q), n, gamma_ell, dps))


def theta0(q: int, n: int, gamma_ell: float) -> float:
    """Linearization coefficient of x^{q*gamma+1/2} [L_n^{gamma+1/2}]^{2q} onto L_0."""
    return float(theta0_exact(q, n, gamma_ell))


def _mp_orthonormal_coeffs(n: int, alpha):
    """Orthonormal-Laguerre monomial coefficients as mpf values."""
    scale = mp.sqrt(mp.gamma(n + alpha + 1) / mp.factorial(n))
    out = []
    for k in range(n + 1):
        mag = scale * mp.binomial(n, k) / mp.gamma(alpha + k + 1)
        out.append(-mag if k % 2 else mag)
    return out


def _mp_power_moment(n: int, alpha, s: int, mu, rate, dps: int):
    """int_0^inf x^mu e^{-rate x} [Ltilde_n^alpha(x)]^s dx, term by term."""
    with mp.workdps(dps):
        alpha = mp.mpf(alpha)
        mu = mp.mpf(mu)
        rate = mp.mpf(rate)
        coeffs = _mp_orthonormal_coeffs(n, alpha)
        e = _mp_poly_pow(coeffs, s) if s > 1 else list(coeffs)
        terms = [
            ek * mp.gamma(mu + k + 1) / rate ** (mu + k + 1)
            for k, ek in enumerate(e)
            if ek != 0
        ]
        total, total_abs = _mp_signed_sum(terms)
        return total, _cancellation_digits(total, total_abs)


def orthonormal_power_moment(n: int, alpha: float, s: int, mu: float, rate: float):
    """High-precision moment of a power of the orthonormal Laguerre polynomial.

    Returns an mpf; callers needing logs should take mp.log of the result.
    """
    if s < 1:
        raise ValueError("s must be >= 1")
    if rate <= 0:
        raise ValueError("rate must be > 0")
    return _adaptive(lambda dps: _mp_power_moment(n, alpha, s, mu, rate, dps))
