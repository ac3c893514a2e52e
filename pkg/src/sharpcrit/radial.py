"""Radial integral calculus.

Everything here works on radial profiles r -> f(r) >= 0 on [0, oo):

* `ball_mass` integrates a profile over a ball whose center sits at distance
  x from the origin, reduced to one dimension through spherical-cap areas;
* `riesz_potential` evaluates the bare-kernel potential
  int |x-y|^(alpha-n) f(|y|) dy through the layer-cake identity, with an
  exact boundary + exterior tail so slowly decaying (non-integrable)
  profiles are still handled;
* `wolff_potential` evaluates
  int_0^oo [mass(t)/t^(n-beta*gamma)]^(1/(gamma-1)) dt/t with either a
  saturated-mass analytic tail or a logarithmic-variable continuation;
* `radial_laplacian` / `radial_gamma_laplacian` are the closed forms of the
  negative (gamma-)Laplacian on the power-law profiles, exact up to float
  rounding.

Profiles that do not decay fast enough make the potentials infinite; that is
a mathematically meaningful outcome and surfaces as DivergenceError carrying
the offending decay exponent, never as a quadrature failure.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

import numpy as np
from scipy.integrate import IntegrationWarning, quad
from scipy.special import betainc
from scipy.special import gamma as gamma_fn

from .errors import ConvergenceError, DivergenceError, DomainError, QuadratureError
from .numerics import Num, as_float, compare


# --------------------------------------------------------------------------
# radial profiles


@dataclass(frozen=True)
class Power:
    """amplitude * (1 + scale*r^m)^(-theta)."""

    theta: Num
    m: Num = 2
    amplitude: Num = 1
    scale: Num = 1

    def __post_init__(self) -> None:
        if self.theta < 0:
            raise DomainError(f"theta must be >= 0, got {self.theta}")
        if not self.m > 1:
            raise DomainError(f"profile power m must be > 1, got {self.m}")
        if not (self.amplitude > 0 and self.scale > 0):
            raise DomainError("amplitude and scale must be positive")

    @property
    def decay_exponent(self) -> Num:
        return self.m * self.theta

    @property
    def log_power(self) -> Num:
        return 0

    def value(self, r: float) -> float:
        return as_float(self.amplitude) * (1.0 + as_float(self.scale) * r ** as_float(self.m)) ** (
            -as_float(self.theta)
        )

    def dvalue(self, r: float) -> float:
        a, b, m, th = map(as_float, (self.amplitude, self.scale, self.m, self.theta))
        return -a * th * b * m * r ** (m - 1.0) * (1.0 + b * r**m) ** (-th - 1.0)


@dataclass(frozen=True)
class LogPower:
    """amplitude * log(e + r)^log_exp * (1 + scale*r^m)^(-theta).

    The log factor uses log(e + r) so the profile is positive and finite at
    r = 0; double-boundedness statements are asymptotic, so the shift is
    harmless and reports carry the modified form.
    """

    theta: Num
    m: Num = 2
    log_exp: Num = 1
    amplitude: Num = 1
    scale: Num = 1

    def __post_init__(self) -> None:
        if self.theta < 0:
            raise DomainError(f"theta must be >= 0, got {self.theta}")
        if not self.m > 1:
            raise DomainError(f"profile power m must be > 1, got {self.m}")
        if not (self.amplitude > 0 and self.scale > 0):
            raise DomainError("amplitude and scale must be positive")

    @property
    def decay_exponent(self) -> Num:
        return self.m * self.theta

    @property
    def log_power(self) -> Num:
        return self.log_exp

    def value(self, r: float) -> float:
        base = (1.0 + as_float(self.scale) * r ** as_float(self.m)) ** (-as_float(self.theta))
        return as_float(self.amplitude) * math.log(math.e + r) ** as_float(self.log_exp) * base


@dataclass(frozen=True)
class Sampled:
    """Tabulated profile on an increasing radius grid starting at 0.

    Interpolation is linear inside the grid; beyond the last node the profile
    continues as value * (r/r_last)^(-extrapolation_exponent).
    """

    grid: Tuple[float, ...]
    values: Tuple[float, ...]
    extrapolation_exponent: float

    def __post_init__(self) -> None:
        if len(self.grid) < 8:
            raise DomainError(f"sampled profiles need at least 8 nodes, got {len(self.grid)}")
        if len(self.grid) != len(self.values):
            raise DomainError("grid and values lengths differ")
        if self.grid[0] != 0:
            raise DomainError("sampled grid must start at r = 0")
        g = np.asarray(self.grid, dtype=float)
        if not np.all(np.diff(g) > 0):
            raise DomainError("sampled grid must be strictly increasing")
        if not all(v > 0 for v in self.values):
            raise DomainError("sampled values must be positive")

    @property
    def decay_exponent(self) -> float:
        return self.extrapolation_exponent

    @property
    def log_power(self) -> Num:
        return 0

    def value(self, r: float) -> float:
        last = self.grid[-1]
        if r <= last:
            return float(np.interp(r, self.grid, self.values))
        return self.values[-1] * (r / last) ** (-self.extrapolation_exponent)


@dataclass(frozen=True)
class PowerOf:
    """Pointwise power base(r)**exponent, used for the nonlinearities u^p."""

    base: object
    exponent: Num

    def __post_init__(self) -> None:
        if not self.exponent > 0:
            raise DomainError(f"exponent must be positive, got {self.exponent}")

    @property
    def decay_exponent(self) -> Num:
        return self.exponent * self.base.decay_exponent

    @property
    def log_power(self) -> Num:
        return self.exponent * self.base.log_power

    def value(self, r: float) -> float:
        return self.base.value(r) ** as_float(self.exponent)


RadialFunction = object  # any of the above (duck-typed: value/decay_exponent/log_power)


# --------------------------------------------------------------------------
# quadrature plumbing


@dataclass(frozen=True)
class QuadratureConfig:
    rel_tol: float = 1e-8
    abs_tol: float = 1e-12
    max_subdivisions: int = 200
    tail_cut: Optional[float] = None

    def __post_init__(self) -> None:
        if not (self.rel_tol > 0 and self.abs_tol > 0):
            raise DomainError("quadrature tolerances must be positive")

    def tighter(self, factor: float = 1e-3) -> "QuadratureConfig":
        return QuadratureConfig(
            rel_tol=max(self.rel_tol * factor, 1e-13),
            abs_tol=max(self.abs_tol * factor, 1e-15),
            max_subdivisions=self.max_subdivisions,
            tail_cut=None,
        )


DEFAULT_CFG = QuadratureConfig()


def _quad(fn, lo: float, hi: float, cfg: QuadratureConfig, points: Optional[Sequence[float]] = None) -> float:
    interior = None
    if points is not None and math.isfinite(hi):
        interior = [p for p in points if lo < p < hi]
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", IntegrationWarning)
        val, err = quad(
            fn,
            lo,
            hi,
            epsabs=cfg.abs_tol,
            epsrel=cfg.rel_tol,
            limit=cfg.max_subdivisions,
            points=interior or None,
        )
    if err > max(100.0 * cfg.abs_tol, 200.0 * cfg.rel_tol * abs(val)) and err > 1e-13:
        raise QuadratureError(
            f"quadrature failed to converge on [{lo:g}, {hi:g}]", estimate=val, error_bound=err
        )
    return val


def surface_area(n: int) -> float:
    """Surface measure of the unit sphere in R^n."""
    return 2.0 * math.pi ** (n / 2.0) / gamma_fn(n / 2.0)


def _cap_fraction(n: int, c: float) -> float:
    """Fraction of the unit sphere with polar angle phi satisfying cos(phi) >= c."""
    if c <= -1.0:
        return 1.0
    if c >= 1.0:
        return 0.0
    s2 = max(0.0, 1.0 - c * c)
    half = 0.5 * betainc((n - 1) / 2.0, 0.5, s2)
    return half if c >= 0.0 else 1.0 - half


def _validate_dim(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 2:
        raise DomainError(f"dimension n must be an integer >= 2, got {n!r}")


def ball_mass(
    f: RadialFunction, n: int, x: Num, t: Num, cfg: QuadratureConfig = DEFAULT_CFG
) -> float:
    """Integral of f(|y|) over a ball of radius t centered at distance x from 0."""
    _validate_dim(n)
    x, t = as_float(x), as_float(t)
    if x < 0:
        raise DomainError(f"center distance x must be >= 0, got {x}")
    if not t > 0:
        raise DomainError(f"ball radius t must be positive, got {t}")
    omega = surface_area(n)
    if x == 0.0:
        return omega * _quad(lambda s: f.value(s) * s ** (n - 1), 0.0, t, cfg)

    def cap_integrand(s: float) -> float:
        c = (s * s + x * x - t * t) / (2.0 * s * x)
        return f.value(s) * s ** (n - 1) * _cap_fraction(n, c)

    total = 0.0
    if t > x:
        total += _quad(lambda s: f.value(s) * s ** (n - 1), 0.0, t - x, cfg, points=[x])
    lo, hi = abs(t - x), t + x
    total += _quad(cap_integrand, lo, hi, cfg, points=[x, t])
    return omega * total


def total_mass(f: RadialFunction, n: int, cfg: QuadratureConfig = DEFAULT_CFG) -> float:
    """Integral of f(|y|) over all of R^n; diverges when the decay is <= n."""
    _validate_dim(n)
    d = f.decay_exponent
    side = compare(d, n)
    if side < 0 or (side == 0 and compare(f.log_power, -1) >= 0):
        raise DivergenceError(
            f"profile decays like r^-{as_float(d):g}, not integrable in dimension {n}",
            detected_exponent=as_float(d),
        )
    omega = surface_area(n)
    head = _quad(lambda s: f.value(s) * s ** (n - 1), 0.0, 1.0, cfg)
    # integrate the far field in the logarithmic variable for robustness
    tail = _quad(lambda u: f.value(math.exp(u)) * math.exp(n * u), 0.0, np.inf, cfg)
    return omega * (head + tail)


def _check_potential_convergence(f: RadialFunction, threshold: Num, what: str) -> None:
    d = f.decay_exponent
    side = compare(d, threshold)
    if side < 0 or (side == 0 and compare(f.log_power, -1) >= 0):
        raise DivergenceError(
            f"{what} diverges: profile decay exponent {as_float(d):g} <= {as_float(threshold):g}",
            detected_exponent=as_float(d),
        )


def riesz_potential(
    g: RadialFunction, n: int, alpha: Num, x: Num, cfg: QuadratureConfig = DEFAULT_CFG
) -> float:
    """Bare-kernel potential int |x-y|^(alpha-n) g(|y|) dy at distance x from 0.

    Layer-cake core (n-alpha) * int_0^T t^(alpha-n-1) mass(t) dt, closed by the
    exact boundary term T^(alpha-n) mass(T) plus the exterior integral, the
    latter evaluated in centered form (error O(x/T), driven down by doubling T).
    """
    _validate_dim(n)
    if not 0 < alpha < n:
        raise DomainError(f"need 0 < alpha < n, got alpha={alpha}, n={n}")
    x = as_float(x)
    if x < 0:
        raise DomainError(f"evaluation radius x must be >= 0, got {x}")
    _check_potential_convergence(g, alpha, "Riesz potential")

    a = as_float(alpha)
    omega = surface_area(n)
    inner_cfg = cfg.tighter()

    def mass(t: float) -> float:
        return ball_mass(g, n, x, t, inner_cfg)

    def core_piece(lo: float, hi: float) -> float:
        return (n - a) * _quad(lambda t: t ** (a - n - 1.0) * mass(t), lo, hi, cfg, points=[x])

    def exterior(T: float) -> float:
        # centered stand-in for the exact off-center exterior integral
        return omega * _quad(
            lambda u: g.value(math.exp(u)) * math.exp(a * u), math.log(T), np.inf, cfg
        )

    if cfg.tail_cut is not None:
        T = cfg.tail_cut
        return core_piece(0.0, T) + T ** (a - n) * mass(T) + exterior(T)

    T = max(8.0, 4.0 * x)
    core = core_piece(0.0, T)
    prev = None
    for _ in range(48):
        total = core + T ** (a - n) * mass(T) + exterior(T)
        if prev is not None and abs(total - prev) <= max(
            10.0 * cfg.abs_tol, 4.0 * cfg.rel_tol * abs(total)
        ):
            return total
        prev = total
        core += core_piece(T, 2.0 * T)
        T *= 2.0
    raise ConvergenceError(
        f"Riesz tail did not stabilize (last T={T:g}); profile decay too close to alpha"
    )


def wolff_potential(
    f: RadialFunction,
    n: int,
    beta: Num,
    gamma: Num,
    x: Num,
    cfg: QuadratureConfig = DEFAULT_CFG,
) -> float:
    """Nonlinear potential int_0^oo [mass(t) / t^(n-beta*gamma)]^(1/(gamma-1)) dt/t."""
    _validate_dim(n)
    if not beta > 0:
        raise DomainError(f"beta must be positive, got {beta}")
    if not (1 < gamma <= 2):
        raise DomainError(f"gamma restricted to (1, 2], got {gamma}")
    bg = as_float(beta) * as_float(gamma)
    if not bg < n:
        raise DomainError(f"need beta*gamma < n, got {bg}")
    x = as_float(x)
    if x < 0:
        raise DomainError(f"evaluation radius x must be >= 0, got {x}")
    _check_potential_convergence(f, beta * gamma, "Wolff potential")

    g1 = as_float(gamma) - 1.0
    inner_cfg = cfg.tighter()

    def mass(t: float) -> float:
        return ball_mass(f, n, x, t, inner_cfg)

    def integrand(t: float) -> float:
        return (mass(t) / t ** (n - bg)) ** (1.0 / g1) / t

    d = f.decay_exponent
    integrable = compare(d, n) > 0 or (compare(d, n) == 0 and compare(f.log_power, -1) < 0)
    if cfg.tail_cut is not None:
        T = cfg.tail_cut
    else:
        T = max(8.0, 4.0 * x)

    if integrable:
        M = total_mass(f, n, cfg)
        if cfg.tail_cut is None:
            for _ in range(64):
                if mass(T) >= M * (1.0 - cfg.rel_tol):
                    break
                T *= 2.0
            else:
                raise ConvergenceError("ball mass failed to saturate to the total mass")
        core = _quad(integrand, 0.0, T, cfg, points=[x])
        tail = M ** (1.0 / g1) * (g1 / (n - bg)) * T ** (-(n - bg) / g1)
        return core + tail

    # non-integrable but convergent regime: continue in the log variable
    core = _quad(integrand, 0.0, T, cfg, points=[x])
    tail = _quad(lambda u: integrand(math.exp(u)) * math.exp(u), math.log(T), np.inf, cfg)
    return core + tail


def riesz_potential_direct(
    g: RadialFunction, n: int, alpha: Num, x: Num, cfg: QuadratureConfig = DEFAULT_CFG
) -> float:
    """Independent double-quadrature route over (radius, polar angle).

    Kept as the cross-check oracle for the layer-cake implementation; slower
    and slightly less accurate, but shares no code path with it.
    """
    _validate_dim(n)
    if not 0 < alpha < n:
        raise DomainError(f"need 0 < alpha < n, got alpha={alpha}, n={n}")
    x = as_float(x)
    a = as_float(alpha)
    _check_potential_convergence(g, alpha, "Riesz potential")
    if x == 0.0:
        omega = surface_area(n)
        head = _quad(lambda s: g.value(s) * s ** (a - 1.0), 0.0, 1.0, cfg)
        tail = _quad(lambda u: g.value(math.exp(u)) * math.exp(a * u), 0.0, np.inf, cfg)
        return omega * (head + tail)

    ring = surface_area(n - 1) if n > 2 else 2.0

    def angular(s: float) -> float:
        def kern(c: float) -> float:
            d2 = x * x + s * s - 2.0 * x * s * c
            w = (1.0 - c * c) ** ((n - 3) / 2.0) if n > 3 else (1.0 if n == 3 else (1.0 - c * c) ** -0.5)
            return w * d2 ** ((a - n) / 2.0)

        pts = [1.0 - 1e-9] if abs(s - x) < 0.05 * max(1.0, x) else None
        return _quad(kern, -1.0, 1.0, cfg, points=pts)

    def radial_part(s: float) -> float:
        return g.value(s) * s ** (n - 1.0) * angular(s)

    head = _quad(radial_part, 0.0, max(2.0 * x, 4.0), cfg, points=[x])
    tail = _quad(
        lambda u: radial_part(math.exp(u)) * math.exp(u), math.log(max(2.0 * x, 4.0)), np.inf, cfg
    )
    return ring * (head + tail)


# --------------------------------------------------------------------------
# exact radial operators on power profiles


def radial_laplacian(family: Power, n: int, r: Num) -> float:
    """Closed form of -Laplacian applied to amplitude*(1+scale*r^2)^(-theta).

    For the unit-amplitude unit-scale profile this is
    (2*theta/(1+r^2)^(theta+1)) * ((n-2-2*theta)*r^2 + n) / (1+r^2).
    """
    _validate_dim(n)
    if compare(family.m, 2) != 0:
        raise DomainError(f"closed-form Laplacian needs m = 2, got m = {family.m}")
    r = as_float(r)
    if r < 0:
        raise DomainError(f"radius must be >= 0, got {r}")
    A, B, th = as_float(family.amplitude), as_float(family.scale), as_float(family.theta)
    rho2 = B * r * r
    base = (2.0 * th / (1.0 + rho2) ** (th + 1.0)) * ((n - 2.0 - 2.0 * th) * rho2 + n) / (1.0 + rho2)
    return A * B * base


def radial_gamma_laplacian(family: Power, n: int, gamma: Num, r: Num) -> float:
    """Closed form of -div(|grad u|^(gamma-2) grad u) on the matched power profile.

    Requires m = gamma/(gamma-1); for the unit profile the value is
    ((m*theta)^(gamma-1)/(1+r^m)^((theta+1)(gamma-1))) * (n + (n-(theta+1)*gamma)*r^m)/(1+r^m).
    """
    _validate_dim(n)
    if not 1 < gamma < n:
        raise DomainError(f"need 1 < gamma < n, got gamma={gamma}")
    g = Fraction(gamma) if not isinstance(gamma, float) or float(gamma).is_integer() else gamma
    m_req = Fraction(gamma) / (Fraction(gamma) - 1) if compare(gamma, gamma) == 0 else None
    try:
        m_req = Fraction(gamma) / (Fraction(gamma) - 1)
    except (TypeError, ValueError):
        m_req = as_float(gamma) / (as_float(gamma) - 1.0)
    if compare(family.m, m_req) != 0:
        raise DomainError(
            f"closed-form gamma-Laplacian needs m = gamma/(gamma-1) = {as_float(m_req):g}, got m = {family.m}"
        )
    r = as_float(r)
    if r < 0:
        raise DomainError(f"radius must be >= 0, got {r}")
    A, B = as_float(family.amplitude), as_float(family.scale)
    th, gam, m = as_float(family.theta), as_float(gamma), as_float(family.m)
    c = B ** (1.0 / m)  # scale factor: (1 + B r^m) = (1 + (c r)^m)
    rho_m = (c * r) ** m
    base = ((m * th) ** (gam - 1.0) / (1.0 + rho_m) ** ((th + 1.0) * (gam - 1.0))) * (
        (n + (n - (th + 1.0) * gam) * rho_m) / (1.0 + rho_m)
    )
    return A ** (gam - 1.0) * c**gam * base
