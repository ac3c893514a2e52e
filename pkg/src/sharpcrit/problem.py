"""Problem descriptions and verdict types.

A ProblemSpec pins down one equation or system: the dimension, the kernel
(which operator sits on the left), the nonlinearity exponents, and whether
the coefficient is an arbitrary double-bounded function or the constant 1.
Everything downstream (classification, decay certificates, solution
families) consumes these objects.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Tuple, Union

from .errors import DomainError
from .numerics import Num, compare, is_exact


class CoeffMode(Enum):
    DOUBLE_BOUNDED = "double-bounded"
    CONSTANT = "constant"


@dataclass(frozen=True)
class Riesz:
    """Integral kernel |x-y|^(alpha-n), 0 < alpha < n."""

    alpha: Num

    def validate(self, n: int) -> None:
        if not (0 < self.alpha < n):
            raise DomainError(f"Riesz order must satisfy 0 < alpha < n, got alpha={self.alpha}, n={n}")

    # (beta, gamma) pair reproducing this kernel's threshold algebra
    def iteration_params(self, n: int) -> Tuple[Num, Num]:
        return (_half(self.alpha), 2)

    def profile_m(self) -> Num:
        return 2

    def is_integral(self) -> bool:
        return True

    def label(self) -> str:
        return "riesz"


@dataclass(frozen=True)
class Wolff:
    """Nonlinear Wolff-potential kernel W_{beta,gamma}; beta > 0, gamma in (1, 2], beta*gamma < n."""

    beta: Num
    gamma: Num

    def validate(self, n: int) -> None:
        if self.beta <= 0:
            raise DomainError(f"Wolff parameter beta must be positive, got {self.beta}")
        if not (1 < self.gamma <= 2):
            raise DomainError(
                f"Wolff parameter gamma restricted to (1, 2]; verdicts for gamma > 2 are refused, got {self.gamma}"
            )
        if not self.beta * self.gamma < n:
            raise DomainError(f"Wolff kernel needs beta*gamma < n, got beta*gamma={self.beta * self.gamma}, n={n}")

    def iteration_params(self, n: int) -> Tuple[Num, Num]:
        return (self.beta, self.gamma)

    def profile_m(self) -> Num:
        return 2

    def is_integral(self) -> bool:
        return True

    def label(self) -> str:
        return "wolff"


@dataclass(frozen=True)
class PolyLaplace:
    """Polyharmonic operator (-Laplace)^k, integer 1 <= k < n/2."""

    k: int

    def validate(self, n: int) -> None:
        if not isinstance(self.k, int) or isinstance(self.k, bool):
            raise DomainError(f"polyharmonic order k must be an integer, got {self.k!r}")
        if not (1 <= self.k and 2 * self.k < n):
            raise DomainError(f"polyharmonic order needs 1 <= k < n/2, got k={self.k}, n={n}")

    def iteration_params(self, n: int) -> Tuple[Num, Num]:
        return (self.k, 2)

    def profile_m(self) -> Num:
        return 2

    def is_integral(self) -> bool:
        return False

    def label(self) -> str:
        return "poly"


@dataclass(frozen=True)
class GammaLaplace:
    """Quasilinear gamma-Laplace operator, gamma in (1, n)."""

    gamma: Num

    def validate(self, n: int) -> None:
        if not (1 < self.gamma < n):
            raise DomainError(f"gamma-Laplace needs gamma in (1, n), got gamma={self.gamma}, n={n}")

    def iteration_params(self, n: int) -> Tuple[Num, Num]:
        return (1, self.gamma)

    def profile_m(self) -> Num:
        g = self.gamma
        return g / (g - 1) if not is_exact(g) else Fraction(g) / (Fraction(g) - 1)

    def is_integral(self) -> bool:
        return False

    def label(self) -> str:
        return "gamma"


Kernel = Union[Riesz, Wolff, PolyLaplace, GammaLaplace]


@dataclass(frozen=True)
class ProblemSpec:
    n: int
    kernel: Kernel
    p: Num
    q: Optional[Num] = None
    coeff_mode: CoeffMode = CoeffMode.DOUBLE_BOUNDED

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n < 3:
            raise DomainError(f"dimension n must be an integer >= 3, got {self.n!r}")
        self.kernel.validate(self.n)
        if not self.p > 0:
            raise DomainError(f"exponent p must be positive, got {self.p}")
        if self.q is not None and not self.q > 0:
            raise DomainError(f"exponent q must be positive, got {self.q}")
        if not isinstance(self.coeff_mode, CoeffMode):
            raise DomainError(f"coeff_mode must be a CoeffMode, got {self.coeff_mode!r}")

    @property
    def is_system(self) -> bool:
        return self.q is not None

    def swapped(self) -> "ProblemSpec":
        """The same system with (p, q) exchanged."""
        if not self.is_system:
            raise DomainError("swapped() only applies to systems")
        return ProblemSpec(self.n, self.kernel, self.q, self.p, self.coeff_mode)


@dataclass(frozen=True)
class SystemThresholds:
    """Bounds governing systems: the decay-ratio bound and the critical sum value."""

    ratio_bound: Num
    critical_sum: Num


@dataclass(frozen=True)
class CriticalSet:
    serrin: Num
    sobolev: Num
    energy_star: Optional[Num] = None
    system_threshold: Optional[SystemThresholds] = None


@dataclass(frozen=True)
class DecayRate:
    """Power-law tail u ~ (1 + r^m)^(-theta); `two_theta` stores m*theta
    (so literally 2*theta for the m = 2 families), i.e. the power of |x|
    in the far field."""

    two_theta: Num
    m: Num = 2
    log_corrected: bool = False

    def theta(self) -> Num:
        return self.two_theta / self.m


class Mechanism(Enum):
    ITERATION_BLOWUP = "IterationBlowup"
    CRITICAL_INTEGRAL = "CriticalIntegralArgument"
    POHOZAEV = "PohozaevObstruction"
    PARTIAL_RESULT = "PartialResult"


@dataclass(frozen=True)
class Exists:
    witness_rates: Tuple[DecayRate, ...] = ()


@dataclass(frozen=True)
class NotExists:
    mechanism: Mechanism


@dataclass(frozen=True)
class Open:
    conjecture: str


Outcome = Union[Exists, NotExists, Open]


@dataclass(frozen=True)
class Verdict:
    """Classification outcome plus the audit key of the criterion applied.

    `criterion` is a stable slug identifying which sharp criterion produced
    the verdict, so CLI output can be audited; `caveat` carries solution-class
    restrictions when a nonexistence statement only covers part of the cone
    of positive solutions.
    """

    outcome: Outcome
    criterion: str
    caveat: Optional[str] = None

    def __post_init__(self) -> None:
        if isinstance(self.outcome, Exists) and not self.outcome.witness_rates:
            if "cited" not in self.criterion:
                raise DomainError(
                    f"Exists verdicts must carry at least one witness rate (criterion {self.criterion!r})"
                )

    @property
    def exists(self) -> bool:
        return isinstance(self.outcome, Exists)

    @property
    def not_exists(self) -> bool:
        return isinstance(self.outcome, NotExists)

    @property
    def is_open(self) -> bool:
        return isinstance(self.outcome, Open)


#: caveat attached to every gamma-Laplace nonexistence verdict
GAMMA_INF_CAVEAT = "among solutions with inf u = 0"


def exists_verdict(rates, criterion: str, caveat: Optional[str] = None) -> Verdict:
    return Verdict(Exists(tuple(rates)), criterion, caveat)


def not_exists_verdict(mechanism: Mechanism, criterion: str, caveat: Optional[str] = None) -> Verdict:
    return Verdict(NotExists(mechanism), criterion, caveat)


def open_verdict(conjecture: str, criterion: str) -> Verdict:
    return Verdict(Open(conjecture), criterion)


def _half(x: Num) -> Num:
    if is_exact(x):
        return Fraction(x) / 2
    return x / 2


def compare_num(a: Num, b: Num, tol: float = 1e-12) -> int:
    """Re-exported comparison used throughout classification."""
    return compare(a, b, tol)
