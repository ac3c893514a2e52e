"""Decay-exponent iteration certificates.

The nonexistence regime below the scalar/system thresholds is certified by a
linear recurrence on candidate decay exponents: each pass through the kernel
improves the exponent until it leaves the admissible (positive) range.  The
recurrences are run in exact rational arithmetic (every float is an exact
binary rational), cross-checked against their closed forms, and reported as
floats.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .errors import DomainError
from .numerics import Num

#: recurrence values beyond this magnitude stop the iteration (guards float overflow downstream)
OVERFLOW_GUARD = 1e12


@dataclass(frozen=True)
class SequenceIndex:
    """Index of a sequence event, tagged with which sequence produced it."""

    index: int
    sequence: str  # "a" or "b"


@dataclass(frozen=True)
class DecaySequenceReport:
    a: Tuple[float, ...]
    b: Optional[Tuple[float, ...]]
    first_nonpositive: Optional[SequenceIndex]
    first_strictly_negative: Optional[SequenceIndex]
    limit: Optional[float]
    closed_form_max_residual: float
    truncated: bool = False


def _validate(n: int, beta: Num, gamma: Num, j_max: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 3:
        raise DomainError(f"dimension n must be an integer >= 3, got {n!r}")
    if not beta > 0:
        raise DomainError(f"beta must be positive, got {beta}")
    if not (1 < gamma <= 2):
        raise DomainError(f"gamma restricted to (1, 2], got {gamma}")
    if not beta * gamma < n:
        raise DomainError(f"need beta*gamma < n, got beta*gamma={beta * gamma}, n={n}")
    if j_max < 1:
        raise DomainError(f"j_max must be >= 1, got {j_max}")


def scalar_decay_sequence(n: int, beta: Num, gamma: Num, p: Num, j_max: int = 64) -> DecaySequenceReport:
    """Iterate a_j = (p*a_{j-1} - beta*gamma)/(gamma-1) from a_0 = (n-beta*gamma)/(gamma-1).

    The Riesz case is beta = alpha/2, gamma = 2, where this reads
    a_j = p*a_{j-1} - alpha.
    """
    _validate(n, beta, gamma, j_max)
    if not p > 0:
        raise DomainError(f"p must be positive, got {p}")

    b, g, pf = Fraction(beta), Fraction(gamma), Fraction(p)
    bg, gm1 = b * g, g - 1
    a0 = (n - bg) / gm1
    rho = pf / gm1
    delta = bg / gm1

    values = [a0]
    truncated = False
    current = a0
    for _ in range(j_max):
        current = rho * current - delta
        values.append(current)
        if abs(current) > OVERFLOW_GUARD:
            truncated = True
            break

    first_nonpos = None
    first_neg = None
    for j, v in enumerate(values):
        if first_nonpos is None and v <= 0:
            first_nonpos = SequenceIndex(j, "a")
        if first_neg is None and v < 0:
            first_neg = SequenceIndex(j, "a")
        if first_nonpos is not None and first_neg is not None:
            break

    # closed form in float arithmetic, as an independent route
    max_resid = 0.0
    if rho != 1:
        fixed = delta / (rho - 1)
        coeff = float(a0 - fixed)
        for j, v in enumerate(values):
            cf = coeff * float(rho) ** j + float(fixed)
            max_resid = max(max_resid, abs(float(v) - cf) / max(1.0, abs(float(v))))
        limit = float(fixed) if rho < 1 else None
    else:
        for j, v in enumerate(values):
            cf = float(a0) - float(delta) * j
            max_resid = max(max_resid, abs(float(v) - cf) / max(1.0, abs(float(v))))
        limit = None

    return DecaySequenceReport(
        a=tuple(float(v) for v in values),
        b=None,
        first_nonpositive=first_nonpos,
        first_strictly_negative=first_neg,
        limit=limit,
        closed_form_max_residual=max_resid,
        truncated=truncated,
    )


def system_decay_sequence(
    n: int, beta: Num, gamma: Num, p: Num, q: Num, k_max: int = 64
) -> DecaySequenceReport:
    """Interleaved system iteration:

        b_k = (p*a_k - beta*gamma)/(gamma-1),
        a_k = (q*b_{k-1} - beta*gamma)/(gamma-1),

    starting from a_0 = (n-beta*gamma)/(gamma-1).  Events are reported in
    generation order (a_k before b_k)."""
    _validate(n, beta, gamma, k_max)
    if not (p > 0 and q > 0):
        raise DomainError(f"p, q must be positive, got p={p}, q={q}")

    b_, g, pf, qf = Fraction(beta), Fraction(gamma), Fraction(p), Fraction(q)
    bg, gm1 = b_ * g, g - 1
    a0 = (n - bg) / gm1

    a_vals = [a0]
    b_vals = [(pf * a0 - bg) / gm1]
    truncated = False
    for _ in range(k_max):
        nxt_a = (qf * b_vals[-1] - bg) / gm1
        a_vals.append(nxt_a)
        nxt_b = (pf * nxt_a - bg) / gm1
        b_vals.append(nxt_b)
        if abs(nxt_a) > OVERFLOW_GUARD or abs(nxt_b) > OVERFLOW_GUARD:
            truncated = True
            break

    first_nonpos = None
    first_neg = None
    for k in range(len(a_vals)):
        for seq_name, v in (("a", a_vals[k]), ("b", b_vals[k])):
            if first_nonpos is None and v <= 0:
                first_nonpos = SequenceIndex(k, seq_name)
            if first_neg is None and v < 0:
                first_neg = SequenceIndex(k, seq_name)
        if first_nonpos is not None and first_neg is not None:
            break

    ratio = pf * qf / (gm1 * gm1)
    drift = bg * (qf + gm1) / (gm1 * gm1)
    max_resid = 0.0
    if ratio != 1:
        fixed = drift / (ratio - 1)
        coeff = float(a0 - fixed)
        for k, v in enumerate(a_vals):
            cf = coeff * float(ratio) ** k + float(fixed)
            max_resid = max(max_resid, abs(float(v) - cf) / max(1.0, abs(float(v))))
        limit = float(fixed) if ratio < 1 else None
    else:
        for k, v in enumerate(a_vals):
            cf = float(a0) - float(drift) * k
            max_resid = max(max_resid, abs(float(v) - cf) / max(1.0, abs(float(v))))
        limit = None
    # b-sequence is a pointwise function of a; check it along the same route
    for k, v in enumerate(b_vals):
        cf = (float(pf) * float(a_vals[k]) - float(bg)) / float(gm1)
        max_resid = max(max_resid, abs(float(v) - cf) / max(1.0, abs(float(v))))

    return DecaySequenceReport(
        a=tuple(float(v) for v in a_vals),
        b=tuple(float(v) for v in b_vals),
        first_nonpositive=first_nonpos,
        first_strictly_negative=first_neg,
        limit=limit,
        closed_form_max_residual=max_resid,
        truncated=truncated,
    )
