"""Bound states of the pseudoharmonic oscillator-like diatomic potential.

Builds state parameters from (molecule, n, l) and evaluates the radial
probability densities and their analytic derivatives in position and momentum
space.  Densities are evaluated in log space internally because the small-x
power grows like x^(2*gamma) with gamma reaching ~50 in angular-momentum
sweeps.

Two normalization modes exist.  In "paper" mode the densities carry exactly
the published prefactors, whose radial norm 4*pi*Int x^2 rho dx is a power of
two rather than 1; the published tables are only reproducible in this mode.
"paper" momentum densities use the squared momentum wavefunction prefactor
(2*lambda^2)^(-(gamma/2+3/4)), the convention consistent with the published
momentum-space tables.  In "normalized" mode both densities are rescaled to
unit radial norm.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import mpmath as mp
import numpy as np
from scipy.special import gammaln

from .moldata import MoleculeParams
from .quadrature import QuadratureConfig, integrate_halfline
from .specfun import laguerre, laguerre_deriv, orthonormal_power_moment

__all__ = [
    "Mode",
    "Space",
    "StateParams",
    "RadialDensity",
    "potential",
    "make_state",
    "density",
    "position_density",
    "momentum_density",
    "density_derivative",
    "radial_norm",
]

_FOUR_PI = 4.0 * math.pi


class Mode(Enum):
    PAPER_FAITHFUL = "paper"
    RENORMALIZED = "normalized"


class Space(Enum):
    POSITION = "position"
    MOMENTUM = "momentum"


def potential(mol: MoleculeParams, r: float) -> float:
    """Radial interaction energy d_e * (r/r_e - r_e/r)^2; requires r > 0."""
    if not r > 0:
        raise ValueError(f"r must be > 0, got {r}")
    return mol.d_e * (r / mol.r_e - mol.r_e / r) ** 2


@dataclass(frozen=True)
class StateParams:
    """Derived parameters of one (molecule, n, l) state.

    norm_sq and mom_prefactor are the density prefactors actually in use for
    the chosen mode; pos_norm / mom_norm are the radial norms the densities
    integrate to (1 in normalized mode).
    """

    molecule: MoleculeParams
    n: int
    ell: int
    mode: Mode
    gamma_ell: float
    lam: float
    norm_sq: float
    mom_prefactor: float
    log_norm_sq: float
    log_mom_prefactor: float
    pos_rescale: float
    mom_rescale: float
    pos_norm: float
    mom_norm: float

    @property
    def alpha(self) -> float:
        """Laguerre order gamma_ell + 1/2 shared by both spaces."""
        return self.gamma_ell + 0.5


def _log_momentum_norm(n: int, gamma_ell: float, lam: float) -> float:
    """Log radial norm of the paper-mode momentum density (exact finite sum)."""
    a = gamma_ell + 1.5
    moment = orthonormal_power_moment(n, gamma_ell + 0.5, 2, gamma_ell + 0.5, 4.0)
    return float(
        mp.log(moment)
        + mp.log(4 * mp.pi)
        + a * mp.log(2 * lam)
        - (a / 2) * mp.log(2 * lam**2)
    )


def make_state(mol: MoleculeParams, n: int, ell: int,
               mode: Mode = Mode.PAPER_FAITHFUL) -> StateParams:
    """Populate all derived state parameters for quantum numbers (n, l)."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if ell < 0:
        raise ValueError(f"ell must be >= 0, got {ell}")
    gamma_ell = 0.5 * (-1.0 + math.sqrt((2 * ell + 1) ** 2 + 8.0 * mol.d_e * mol.r_e**2))
    lam = math.sqrt(mol.d_e / (2.0 * mol.r_e**2))
    a = gamma_ell + 1.5

    log_nsq = (
        math.log(2.0)
        + 0.25 * (2 * gamma_ell + 3) * math.log(2 * lam**2)
        + gammaln(n + 1.0)
        - gammaln(n + a)
    )
    log_mom = (
        math.log(2.0)
        + gammaln(n + 1.0)
        - 0.5 * a * math.log(2 * lam**2)
        - gammaln(n + a)
    )

    log_pos_norm = math.log(_FOUR_PI) - 0.25 * (2 * gamma_ell + 3) * math.log(2.0)
    log_mom_norm = _log_momentum_norm(n, gamma_ell, lam)

    if mode is Mode.RENORMALIZED:
        pos_rescale = math.exp(-log_pos_norm)
        mom_rescale = math.exp(-log_mom_norm)
        log_nsq -= log_pos_norm
        log_mom -= log_mom_norm
        pos_norm = 1.0
        mom_norm = 1.0
    else:
        pos_rescale = 1.0
        mom_rescale = 1.0
        pos_norm = math.exp(log_pos_norm)
        mom_norm = math.exp(log_mom_norm)

    return StateParams(
        molecule=mol,
        n=n,
        ell=ell,
        mode=mode,
        gamma_ell=gamma_ell,
        lam=lam,
        norm_sq=math.exp(log_nsq),
        mom_prefactor=math.exp(log_mom),
        log_norm_sq=log_nsq,
        log_mom_prefactor=log_mom,
        pos_rescale=pos_rescale,
        mom_rescale=mom_rescale,
        pos_norm=pos_norm,
        mom_norm=mom_norm,
    )


@dataclass(frozen=True)
class RadialDensity:
    """Evaluatable radial probability density in one space.

    The density has the common shape P * x^(2*gamma) * exp(-b*x^2) *
    L_n^{gamma+1/2}(c*x^2)^2 with space-dependent rates b, c.
    """

    state: StateParams
    space: Space

    @property
    def _log_pref(self) -> float:
        if self.space is Space.POSITION:
            return self.state.log_norm_sq
        return self.state.log_mom_prefactor

    @property
    def _gauss_rate(self) -> float:
        if self.space is Space.POSITION:
            return 2.0 * self.state.lam
        return 2.0 / self.state.lam

    @property
    def _lag_rate(self) -> float:
        if self.space is Space.POSITION:
            return 2.0 * self.state.lam
        return 0.5 / self.state.lam

    def gaussian_scale(self) -> float:
        """Characteristic width of the exp(-b*x^2) factor."""
        return 1.0 / math.sqrt(self._gauss_rate)

    def norm(self) -> float:
        if self.space is Space.POSITION:
            return self.state.pos_norm
        return self.state.mom_norm

    def laguerre_factor(self, x):
        return laguerre(self.state.n, self.state.alpha, self._lag_rate * np.asarray(x, float) ** 2)

    def log_value(self, x):
        """log density; -inf at the origin and at Laguerre nodes."""
        x = np.asarray(x, dtype=float)
        lag = self.laguerre_factor(x)
        with np.errstate(divide="ignore"):
            out = (
                self._log_pref
                + 2.0 * self.state.gamma_ell * np.log(x)
                - self._gauss_rate * x**2
                + 2.0 * np.log(np.abs(lag))
            )
        return out if out.ndim else float(out)

    def value(self, x):
        x = np.asarray(x, dtype=float)
        out = np.exp(self.log_value(x))
        out = np.where(np.isfinite(out), out, 0.0)
        return out if out.ndim else float(out)

    def derivative(self, x):
        """Analytic radial derivative, using dL_n/du = -L_{n-1}^{alpha+1}(u)."""
        x = np.asarray(x, dtype=float)
        g = self.state.gamma_ell
        b = self._gauss_rate
        c = self._lag_rate
        u = c * x**2
        lag = laguerre(self.state.n, self.state.alpha, u)
        dlag = laguerre_deriv(self.state.n, self.state.alpha, u)
        with np.errstate(divide="ignore", invalid="ignore"):
            logw = self._log_pref + 2.0 * g * np.log(x) - b * x**2
            w = np.exp(logw)
        w = np.where(np.isfinite(w), w, 0.0)
        out = w * ((2.0 * g / x - 2.0 * b * x) * lag**2 + 4.0 * c * x * lag * dlag)
        return out if out.ndim else float(out)

    def gradient_term(self, x):
        """(d density/dx)^2 / density in the factored form that is finite at nodes."""
        x = np.asarray(x, dtype=float)
        g = self.state.gamma_ell
        b = self._gauss_rate
        c = self._lag_rate
        u = c * x**2
        lag = laguerre(self.state.n, self.state.alpha, u)
        dlag = laguerre_deriv(self.state.n, self.state.alpha, u)
        with np.errstate(divide="ignore", invalid="ignore"):
            logw = self._log_pref + 2.0 * g * np.log(x) - b * x**2
            w = np.exp(logw)
        w = np.where(np.isfinite(w), w, 0.0)
        out = w * ((2.0 * g / x - 2.0 * b * x) * lag + 4.0 * c * x * dlag) ** 2
        return out if out.ndim else float(out)


def density(s: StateParams, space: Space) -> RadialDensity:
    return RadialDensity(state=s, space=space)


def position_density(s: StateParams, r) -> float:
    """Radial position density at r >= 0."""
    return density(s, Space.POSITION).value(r)


def momentum_density(s: StateParams, p) -> float:
    """Radial momentum density at p >= 0."""
    return density(s, Space.MOMENTUM).value(p)


def density_derivative(s: StateParams, space: Space, x) -> float:
    """Analytic derivative of the radial density at x > 0."""
    return density(s, space).derivative(x)


def radial_norm(s: StateParams, space: Space,
                cfg: QuadratureConfig | None = None) -> float:
    """4*pi*Int_0^inf x^2 density(x) dx, by adaptive quadrature."""
    rho = density(s, space)
    res = integrate_halfline(
        lambda x: _FOUR_PI * x**2 * rho.value(x),
        scale=rho.gaussian_scale(),
        cfg=cfg,
        growth=s.n + s.gamma_ell,
    )
    return res.value
