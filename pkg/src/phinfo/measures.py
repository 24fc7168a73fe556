"""Information-theoretic measures of the radial densities, by two routes:
closed forms (linearization of Laguerre powers) and direct adaptive quadrature.

Quadrature is the reference route.  All logarithms are natural; the q=2
entropic moment ties the Renyi, Tsallis and information-energy measures
together (R_2 = -ln E, T_2 = 1 - E).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import mpmath as mp
import numpy as np
from scipy.special import gammaln, psi

from .quadrature import QuadratureConfig, integrate_halfline, integrate_interval
from .specfun import laguerre, orthonormal_power_moment, theta0_exact
from .states import RadialDensity, Space, StateParams, density

__all__ = [
    "MeasureKind",
    "Method",
    "MeasureResult",
    "MeasureError",
    "UnsupportedMethodError",
    "DegenerateParameterError",
    "wq",
    "fisher",
    "shannon",
    "renyi",
    "tsallis",
    "onicescu",
    "ratio",
    "measure",
    "entropic_integral_asymptotic",
    "entropic_integral_quadrature",
]

_FOUR_PI = 4.0 * math.pi

# Renyi/Tsallis indices this close to 1 are rejected toward shannon().
_Q_DEGENERACY_BAND = 1e-6


class MeasureKind(Enum):
    FISHER = "fisher"
    SHANNON = "shannon"
    RENYI = "renyi"
    TSALLIS = "tsallis"
    ONICESCU = "onicescu"
    WQ = "wq"


class Method(Enum):
    ANALYTIC = "analytic"
    QUADRATURE = "quadrature"


class MeasureError(Exception):
    pass


class UnsupportedMethodError(MeasureError):
    """The requested analytic route does not exist for these parameters."""


class DegenerateParameterError(MeasureError):
    """q is too close to 1; the measure degenerates to the Shannon entropy."""


@dataclass(frozen=True)
class MeasureResult:
    kind: MeasureKind
    space: Space
    q: float | None
    value: float
    method: Method
    err_estimate: float
    norm_deficit: float

    def __post_init__(self):
        needs_q = self.kind in (MeasureKind.RENYI, MeasureKind.TSALLIS, MeasureKind.WQ)
        if needs_q and self.q is None:
            raise ValueError(f"{self.kind.value} requires q")
        if not needs_q and self.q is not None:
            raise ValueError(f"{self.kind.value} does not take q")


def _norm_deficit(s: StateParams, space: Space) -> float:
    norm = s.pos_norm if space is Space.POSITION else s.mom_norm
    return abs(norm - 1.0)


def _result(kind, s, space, q, value, method, err):
    return MeasureResult(
        kind=kind,
        space=space,
        q=q,
        value=value,
        method=method,
        err_estimate=err,
        norm_deficit=_norm_deficit(s, space),
    )


# ---------------------------------------------------------------------------
# Entropic moments W_q
# ---------------------------------------------------------------------------

def _log_wq_analytic(s: StateParams, q: int, space: Space) -> float:
    """ln W_q by the closed-form route (exact up to roundoff)."""
    g = s.gamma_ell
    a = g + 1.5
    if space is Space.POSITION:
        theta = theta0_exact(q, s.n, g)
        log_w = (
            mp.log(2 * mp.pi)
            + q * mp.mpf(s.log_norm_sq)
            - (q * g + 1.5) * mp.log(2 * s.lam * q)
            + mp.log(theta)
        )
    else:
        moment = orthonormal_power_moment(s.n, g + 0.5, 2 * q, q * g + 0.5, 4.0 * q)
        log_w = (
            mp.log(2 * mp.pi)
            + q * (mp.mpf(s.log_mom_prefactor) + mp.loggamma(s.n + a) - mp.loggamma(s.n + 1))
            + (q * g + 1.5) * mp.log(2 * s.lam)
            + mp.log(moment)
        )
    return float(log_w)


def log_wq_analytic(s: StateParams, q: float, space: Space) -> float:
    """ln W_q via the closed form; requires integer q >= 2."""
    if q < 2 or q != int(q):
        raise UnsupportedMethodError(
            f"analytic entropic moment requires integer q >= 2, got q={q}"
        )
    return _log_wq_analytic(s, int(q), space)


def _wq_quadrature(s: StateParams, q: float, space: Space,
                   cfg: QuadratureConfig | None) -> tuple[float, float]:
    rho = density(s, space)

    def integrand(x):
        lv = rho.log_value(x)
        with np.errstate(over="ignore"):
            val = np.where(np.isfinite(lv), np.exp(q * lv), 0.0)
        return _FOUR_PI * x**2 * val

    res = integrate_halfline(
        integrand,
        scale=rho.gaussian_scale() / math.sqrt(min(q, 1.0)),
        cfg=cfg,
        growth=s.n + s.gamma_ell,
    )
    return res.value, res.err_estimate


def wq(s: StateParams, q: float, space: Space,
       method: Method = Method.QUADRATURE,
       cfg: QuadratureConfig | None = None) -> MeasureResult:
    """Entropic moment W_q = 4*pi*Int x^2 density(x)^q dx."""
    if not q > 0:
        raise ValueError(f"q must be > 0, got {q}")
    if method is Method.ANALYTIC:
        value = math.exp(log_wq_analytic(s, q, space))
        err = abs(value) * 1e-12
    else:
        value, err = _wq_quadrature(s, q, space, cfg)
    return _result(MeasureKind.WQ, s, space, q, value, method, err)


# ---------------------------------------------------------------------------
# Fisher information
# ---------------------------------------------------------------------------

def fisher(s: StateParams, space: Space,
           method: Method = Method.QUADRATURE,
           cfg: QuadratureConfig | None = None) -> MeasureResult:
    """Gradient-sensitive localization measure 4*pi*Int x^2 (rho')^2/rho dx."""
    g = s.gamma_ell
    if method is Method.ANALYTIC:
        if space is Space.POSITION:
            value = (
                2.0 ** ((13.0 - 2.0 * g) / 4.0) * math.pi * s.lam
                * ((4 * s.n + 3) + (8 * s.n + 4) * g) / (1.0 + 2.0 * g)
            ) * s.pos_rescale
        else:
            if s.n != 0:
                raise UnsupportedMethodError(
                    "the momentum-space Fisher closed form only covers n = 0"
                )
            value = (
                2.0 ** ((7.0 - 6.0 * g) / 4.0) * math.pi * (3.0 + 4.0 * g)
                / (s.lam * (1.0 + 2.0 * g))
            ) * s.mom_rescale
        return _result(MeasureKind.FISHER, s, space, None, value,
                       method, abs(value) * 1e-12)

    rho = density(s, space)
    res = integrate_halfline(
        lambda x: _FOUR_PI * x**2 * rho.gradient_term(x),
        scale=rho.gaussian_scale(),
        cfg=cfg,
        growth=s.n + s.gamma_ell,
    )
    return _result(MeasureKind.FISHER, s, space, None, res.value,
                   method, res.err_estimate)


# ---------------------------------------------------------------------------
# Shannon entropy
# ---------------------------------------------------------------------------

def shannon(s: StateParams, space: Space,
            method: Method = Method.QUADRATURE,
            cfg: QuadratureConfig | None = None) -> MeasureResult:
    """-4*pi*Int x^2 rho ln rho dx, or the asymptotic closed form for n >= 1.

    The analytic route substitutes the large-n asymptotic of the Laguerre
    entropic integral and is an approximation; its error estimate is
    reported as infinite.
    """
    if method is Method.ANALYTIC:
        if s.n == 0:
            raise UnsupportedMethodError(
                "the asymptotic Shannon closed form diverges at n = 0 (ln n term)"
            )
        g = s.gamma_ell
        a = g + 1.5
        common = (
            2.0 * s.n + a
            - (math.log(2.0) + gammaln(s.n + 1.0) - gammaln(s.n + a))
            - g * psi(s.n + a)
            + entropic_integral_asymptotic(s.n, g)
        )
        half_log = 1.5 * math.log(2.0 * s.lam)
        value = common - half_log if space is Space.POSITION else common + half_log
        return _result(MeasureKind.SHANNON, s, space, None, value, method, math.inf)

    rho = density(s, space)

    def integrand(x):
        lv = rho.log_value(x)
        with np.errstate(invalid="ignore"):
            term = np.where(np.isfinite(lv), np.exp(lv) * lv, 0.0)
        return -_FOUR_PI * x**2 * term

    res = integrate_halfline(
        integrand,
        scale=rho.gaussian_scale(),
        cfg=cfg,
        growth=s.n + s.gamma_ell,
    )
    return _result(MeasureKind.SHANNON, s, space, None, res.value,
                   method, res.err_estimate)


# ---------------------------------------------------------------------------
# Renyi / Tsallis / information energy
# ---------------------------------------------------------------------------

def _check_q(q: float):
    if not q > 0:
        raise ValueError(f"q must be > 0, got {q}")
    if abs(q - 1.0) <= _Q_DEGENERACY_BAND:
        raise DegenerateParameterError(
            f"q={q} is within {_Q_DEGENERACY_BAND} of 1; use shannon() instead"
        )


def renyi(s: StateParams, q: float, space: Space,
          method: Method = Method.QUADRATURE,
          cfg: QuadratureConfig | None = None) -> MeasureResult:
    """Renyi entropy R_q = ln(W_q) / (1 - q)."""
    _check_q(q)
    if method is Method.ANALYTIC:
        value = log_wq_analytic(s, q, space) / (1.0 - q)
        err = abs(value) * 1e-12
    else:
        w, werr = _wq_quadrature(s, q, space, cfg)
        value = math.log(w) / (1.0 - q)
        err = werr / (abs(w) * abs(1.0 - q))
    return _result(MeasureKind.RENYI, s, space, q, value, method, err)


def tsallis(s: StateParams, q: float, space: Space,
            method: Method = Method.QUADRATURE,
            cfg: QuadratureConfig | None = None) -> MeasureResult:
    """Tsallis entropy T_q = (1 - W_q) / (q - 1).

    In momentum space the index passed is conventionally the conjugate one
    (1/q + 1/m = 2); the formula is identical either way.
    """
    _check_q(q)
    w = wq(s, q, space, method, cfg)
    value = (1.0 - w.value) / (q - 1.0)
    err = w.err_estimate / abs(q - 1.0)
    return _result(MeasureKind.TSALLIS, s, space, q, value, w.method, err)


def onicescu(s: StateParams, space: Space,
             method: Method = Method.QUADRATURE,
             cfg: QuadratureConfig | None = None) -> MeasureResult:
    """Information energy E = W_2 (the second entropic moment)."""
    w = wq(s, 2.0, space, method, cfg)
    return _result(MeasureKind.ONICESCU, s, space, None, w.value,
                   w.method, w.err_estimate)


def ratio(s: StateParams, kind: MeasureKind, q: float | None = None,
          cfg: QuadratureConfig | None = None) -> float:
    """Momentum-to-position impetus/length ratio of a measure (quadrature route)."""
    if kind is MeasureKind.FISHER:
        ip = fisher(s, Space.POSITION, cfg=cfg).value
        im = fisher(s, Space.MOMENTUM, cfg=cfg).value
        return math.sqrt(ip / im)
    if kind is MeasureKind.SHANNON:
        sp = shannon(s, Space.POSITION, cfg=cfg).value
        sm = shannon(s, Space.MOMENTUM, cfg=cfg).value
        return math.exp((sm - sp) / 3.0)
    if kind is MeasureKind.RENYI:
        if q is None:
            raise ValueError("the Renyi ratio requires q")
        rp = renyi(s, q, Space.POSITION, cfg=cfg).value
        rm = renyi(s, q, Space.MOMENTUM, cfg=cfg).value
        return math.exp((rm - rp) / 3.0)
    raise ValueError(f"no impetus/length ratio for {kind.value}")


def measure(s: StateParams, kind: MeasureKind, space: Space,
            q: float | None = None,
            method: Method = Method.QUADRATURE,
            cfg: QuadratureConfig | None = None) -> MeasureResult:
    """Dispatch a measure computation by kind."""
    if kind is MeasureKind.FISHER:
        return fisher(s, space, method, cfg)
    if kind is MeasureKind.SHANNON:
        return shannon(s, space, method, cfg)
    if kind is MeasureKind.ONICESCU:
        return onicescu(s, space, method, cfg)
    if q is None:
        raise ValueError(f"{kind.value} requires q")
    if kind is MeasureKind.RENYI:
        return renyi(s, q, space, method, cfg)
    if kind is MeasureKind.TSALLIS:
        return tsallis(s, q, space, method, cfg)
    if kind is MeasureKind.WQ:
        return wq(s, q, space, method, cfg)
    raise ValueError(f"unknown measure kind {kind!r}")


# ---------------------------------------------------------------------------
# Entropic integral of the orthonormal Laguerre polynomials
# ---------------------------------------------------------------------------

def entropic_integral_asymptotic(n: int, gamma_ell: float) -> float:
    """Large-n asymptotic of Int t^(g+1/2) e^-t Ltilde^2 ln(Ltilde^2) dt."""
    if n < 1:
        raise ValueError("the asymptotic requires n >= 1")
    return (
        -2.0 * n
        + (gamma_ell + 1.5) * math.log(n)
        - (gamma_ell + 0.5)
        - 2.0
        + math.log(2.0 * math.pi)
    )


def entropic_integral_quadrature(n: int, gamma_ell: float,
                                 cfg: QuadratureConfig | None = None) -> float:
    """Direct quadrature of the Laguerre entropic integral (reference value)."""
    alpha = gamma_ell + 0.5
    log_scale = 0.5 * (gammaln(n + 1.0) - gammaln(n + alpha + 1.0))

    def integrand(t):
        lag = laguerre(n, alpha, t)
        with np.errstate(divide="ignore", invalid="ignore"):
            log_l2 = 2.0 * (log_scale + np.log(np.abs(lag)))
            weight = np.exp((alpha) * np.log(np.where(t > 0, t, 1.0)) - t + log_l2)
        out = np.where((t > 0) & np.isfinite(log_l2), weight * log_l2, 0.0)
        return out

    upper = 4.0 * n + 2.0 * gamma_ell + 60.0
    res = integrate_interval(integrand, 0.0, upper, cfg, initial_panels=32)
    return res.value
