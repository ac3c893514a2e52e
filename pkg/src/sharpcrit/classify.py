"""Sharp existence/nonexistence classification.

Two regimes, split by coefficient mode:

* double-bounded coefficients: existence is governed by a single Serrin-type
  threshold in the scalar case and by a decay-ratio bound in the system case;
* constant coefficient 1 with finite-energy solutions: existence happens
  exactly at the Sobolev-type exponent (scalar) or on the critical hyperbola
  (system), with cited partial results and one genuinely open region below.

All threshold comparisons run through `numerics.compare`, so rational inputs
are decided exactly and floats with a boundary-biased tolerance.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .numerics import Num, compare, is_exact
from .problem import (
    GAMMA_INF_CAVEAT,
    CoeffMode,
    CriticalSet,
    DecayRate,
    GammaLaplace,
    Mechanism,
    PolyLaplace,
    ProblemSpec,
    Riesz,
    SystemThresholds,
    Verdict,
    Wolff,
    exists_verdict,
    not_exists_verdict,
    open_verdict,
)

_SLUG = {"riesz": "riesz", "wolff": "wolff", "poly": "polyharmonic", "gamma": "gamma"}

HLS_CONJECTURE = "HLS/Lane-Emden conjecture"


def _slug(spec: ProblemSpec, scope: str) -> str:
    return f"{_SLUG[spec.kernel.label()]}-{scope}"


def _caveat(spec: ProblemSpec) -> str | None:
    return GAMMA_INF_CAVEAT if isinstance(spec.kernel, GammaLaplace) else None


def critical_set(spec: ProblemSpec) -> CriticalSet:
    """Threshold exponents for the spec's kernel (independent of p, q)."""
    n = spec.n
    beta, gamma = spec.kernel.iteration_params(n)
    bg = beta * gamma
    gm1 = gamma - 1
    serrin = n * gm1 / (n - bg)
    sobolev = gm1 * (n + bg) / (n - bg)
    energy_star = None
    if isinstance(spec.kernel, (Wolff, GammaLaplace)):
        energy_star = n * gamma / (n - bg) - 1
    system_threshold = None
    if spec.is_system:
        system_threshold = SystemThresholds(
            ratio_bound=(n - bg) / gm1,
            critical_sum=(n - bg) / (n * gm1),
        )
    return CriticalSet(serrin, sobolev, energy_star, system_threshold)


def _gamma_fast_gate(n: int, gamma: Num) -> Num:
    return (n * (gamma - 1) + gamma) / (n - gamma)


def classify_variable_coeff_scalar(spec: ProblemSpec, tol: float = 1e-12) -> Verdict:
    """Existence of positive solutions for some admissible double-bounded coefficient."""
    if spec.is_system:
        raise DomainError("scalar classifier called on a system spec")
    if spec.coeff_mode is not CoeffMode.DOUBLE_BOUNDED:
        raise DomainError("variable-coefficient classifier needs coeff_mode=DOUBLE_BOUNDED")

    n, p = spec.n, spec.p
    kern = spec.kernel
    criterion = _slug(spec, "scalar-threshold")

    if isinstance(kern, PolyLaplace) and compare(p, 1, tol) <= 0:
        return open_verdict(
            "equivalence with the integral form is only established for p > 1",
            criterion,
        )

    beta, gamma = kern.iteration_params(n)
    bg, gm1 = beta * gamma, gamma - 1
    serrin = n * gm1 / (n - bg)
    m = kern.profile_m()

    side = compare(p, serrin, tol)
    if side < 0:
        return not_exists_verdict(Mechanism.ITERATION_BLOWUP, criterion, _caveat(spec))
    if side == 0:
        return not_exists_verdict(Mechanism.CRITICAL_INTEGRAL, criterion, _caveat(spec))

    rates = [DecayRate(bg / (p - gm1), m)]
    fast = (n - bg) / gm1
    if isinstance(kern, GammaLaplace):
        if compare(p, _gamma_fast_gate(n, gamma), tol) == 0:
            rates.append(DecayRate(fast, m))
    else:
        rates.append(DecayRate(fast, m))
    return exists_verdict(rates, criterion)


def classify_variable_coeff_system(spec: ProblemSpec, tol: float = 1e-12) -> Verdict:
    """Existence for systems with double-bounded coefficients."""
    if not spec.is_system:
        raise DomainError("system classifier called on a scalar spec")
    if spec.coeff_mode is not CoeffMode.DOUBLE_BOUNDED:
        raise DomainError("variable-coefficient classifier needs coeff_mode=DOUBLE_BOUNDED")

    n, p, q = spec.n, spec.p, spec.q
    kern = spec.kernel
    criterion = _slug(spec, "system-threshold")
    pq = p * q

    if isinstance(kern, PolyLaplace) and compare(pq, 1, tol) <= 0:
        return open_verdict(
            "equivalence with the integral form is only established for pq > 1",
            criterion,
        )

    beta, gamma = kern.iteration_params(n)
    bg, gm1 = beta * gamma, gamma - 1
    m = kern.profile_m()

    if compare(pq, gm1 * gm1, tol) <= 0:
        return not_exists_verdict(Mechanism.ITERATION_BLOWUP, criterion, _caveat(spec))

    denom = pq - gm1 * gm1
    rate_u = bg * (q + gm1) / denom
    rate_v = bg * (p + gm1) / denom
    worst = rate_u if compare(rate_u, rate_v, tol) >= 0 else rate_v
    bound = (n - bg) / gm1

    side = compare(worst, bound, tol)
    if side > 0:
        return not_exists_verdict(Mechanism.ITERATION_BLOWUP, criterion, _caveat(spec))
    if side == 0:
        return not_exists_verdict(Mechanism.CRITICAL_INTEGRAL, criterion, _caveat(spec))
    return exists_verdict([DecayRate(rate_u, m), DecayRate(rate_v, m)], criterion)


def classify_finite_energy_scalar(spec: ProblemSpec, tol: float = 1e-12) -> Verdict:
    """Finite-energy solutions of the constant-coefficient scalar equation."""
    if spec.is_system:
        raise DomainError("scalar classifier called on a system spec")
    if spec.coeff_mode is not CoeffMode.CONSTANT:
        raise DomainError("finite-energy classifier needs coeff_mode=CONSTANT")

    n, p = spec.n, spec.p
    kern = spec.kernel
    beta, gamma = kern.iteration_params(n)
    bg, gm1 = beta * gamma, gamma - 1
    m = kern.profile_m()

    if isinstance(kern, Wolff):
        star = gm1 * (n + bg) / (n - bg)
        return open_verdict(
            f"scale-invariant exponent p = {star} is conjectured critical for natural-energy solutions",
            "wolff-energy-open",
        )

    if isinstance(kern, GammaLaplace):
        star = n * gamma / (n - gamma) - 1
        if compare(p, star, tol) == 0:
            return exists_verdict([DecayRate((n - gamma) / gm1, m)], "gamma-energy-criticality")
        return not_exists_verdict(Mechanism.POHOZAEV, "gamma-energy-criticality", _caveat(spec))

    sobolev = gm1 * (n + bg) / (n - bg)
    if compare(p, sobolev, tol) == 0:
        return exists_verdict([DecayRate(n - bg, 2)], "scalar-energy-criticality")
    return not_exists_verdict(Mechanism.POHOZAEV, "scalar-energy-criticality")


@dataclass(frozen=True)
class FiniteEnergyClassification:
    finite_energy: Verdict
    any_positive: Verdict


def _is_even_integer(x: Num) -> bool:
    if not is_exact(x):
        return False
    f = Fraction(x)
    return f.denominator == 1 and f.numerator % 2 == 0


def classify_finite_energy_system(
    spec: ProblemSpec, tol: float = 1e-12, assume_radial: bool = False
) -> FiniteEnergyClassification:
    """Constant-coefficient systems: finite-energy verdict and any-positive verdict.

    Only Riesz and polyharmonic kernels are covered; the subcritical region
    below the critical sum is genuinely open apart from cited partial results,
    and `assume_radial` unlocks the cited radial nonexistence results there.
    """
    if not spec.is_system:
        raise DomainError("system classifier called on a scalar spec")
    if spec.coeff_mode is not CoeffMode.CONSTANT:
        raise DomainError("finite-energy classifier needs coeff_mode=CONSTANT")
    if not isinstance(spec.kernel, (Riesz, PolyLaplace)):
        raise DomainError("finite-energy system classification only covers Riesz/polyharmonic kernels")

    n, p, q = spec.n, spec.p, spec.q
    beta, _ = spec.kernel.iteration_params(n)
    alpha = 2 * beta
    if is_exact(p):
        p = Fraction(p)
    if is_exact(q):
        q = Fraction(q)
    total = 1 / (p + 1) + 1 / (q + 1)
    crit = (
        Fraction(n - alpha, n)
        if is_exact(alpha)
        else (n - alpha) / n
    )

    side = compare(total, crit, tol)
    fast_pair = [DecayRate(n - alpha, 2), DecayRate(n - alpha, 2)]

    if side == 0:
        on_hyperbola = exists_verdict(fast_pair, "system-energy-hyperbola")
        return FiniteEnergyClassification(on_hyperbola, on_hyperbola)

    finite_energy = not_exists_verdict(Mechanism.POHOZAEV, "system-energy-hyperbola")

    if side < 0:
        criterion = "supercritical-existence-cited"
        if isinstance(spec.kernel, Riesz) and not _is_even_integer(alpha):
            criterion += " (by analogy)"
        any_positive = exists_verdict([], criterion)
        return FiniteEnergyClassification(finite_energy, any_positive)

    serrin_gap = alpha / (n - alpha)
    partial = (
        compare(p, serrin_gap, tol) <= 0
        or compare(q, serrin_gap, tol) <= 0
        or compare(p, 1, tol) == 0
        or compare(q, 1, tol) == 0
    )
    if partial:
        any_positive = not_exists_verdict(Mechanism.PARTIAL_RESULT, "partial-nonexistence")
    elif assume_radial and (
        (isinstance(spec.kernel, Riesz) and compare(alpha, 2, tol) >= 0)
        or (isinstance(spec.kernel, PolyLaplace) and compare(p * q, 1, tol) > 0)
    ):
        any_positive = not_exists_verdict(
            Mechanism.PARTIAL_RESULT, "partial-nonexistence", caveat="among radial solutions"
        )
    else:
        any_positive = open_verdict(HLS_CONJECTURE, "subcritical-conjecture")
    return FiniteEnergyClassification(finite_energy, any_positive)
