# -*- coding: utf-8 -*-
#  This program is free software; you can redistribute it and/or modify
#  it under the terms of the GNU General Public License as published by
#  the Free Software Foundation; either version 2 of the License, or
#  (at your option) any later version.
#
#  This program is distributed in the hope that it will be useful,
#  but WITHOUT ANY WARRANTY; without even the implied warranty of
#  MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#  GNU General Public License for more details.
#
#  You should have received a copy of the GNU General Public License
#  along with this program; if not, write to the Free Software
#  Foundation, Inc., 51 Franklin Street, Fifth Floor, Boston,
#  MA 02110-1301, USA.

"""Unramified local factors, partial Euler products and the isomorphism verdict."""

from dataclasses import dataclass, field
from typing import Optional, Tuple

import numpy as np
from sympy import Poly, QQ, Rational, Symbol, isprime, primerange

from lib.core.admissibility import dimension_compatible, globally_admissible, rho
from lib.core.exceptions import DomainError, Divergence, UnsupportedError
from lib.core.localfields import valuation
from lib.core.logger import logger
from lib.core.settings import (
    ETA_TERMS,
    EULER_TRANSFORM_LEVELS,
    MAX_SHELL_TRUNCATION,
    RESIDUE_OFFSET,
    RESIDUE_TOLERANCE,
    VERDICT_CONJECTURAL,
    VERDICT_ISOMORPHIC,
    VERDICT_NOT_ADMISSIBLE,
)

t = Symbol("t")

KAPPA = "Res b_n^S at s = rho_n (nonzero, kept symbolic)"


@dataclass(frozen=True)
class RationalFunctionInT:
    numerator: Poly
    denominator: Poly

    def __post_init__(self):
        numerator = Poly(self.numerator, t, domain=QQ)
        denominator = Poly(self.denominator, t, domain=QQ)

        if denominator.is_zero:
            raise DomainError("Zero denominator")

        common = numerator.gcd(denominator)
        numerator, denominator = numerator.exquo(common), denominator.exquo(common)
        lead = denominator.LC()

        object.__setattr__(self, "numerator", numerator.quo_ground(lead))
        object.__setattr__(self, "denominator", denominator.monic())

    def evaluate(self, value):
        return self.as_expr().subs(t, value)

    def as_expr(self):
        return self.numerator.as_expr() / self.denominator.as_expr()

    def __eq__(self, other):
        return self.numerator == other.numerator and self.denominator == other.denominator

    def __hash__(self):
        return hash((self.numerator, self.denominator))

    def __str__(self):
        return str(self.as_expr())


@dataclass(frozen=True)
class UnramifiedDatum:
    p: int
    m: int = 3
    m_prime: int = 1
    d: int = 1
    d_prime: int = 1

    def __post_init__(self):
        if not isprime(self.p):
            raise DomainError(f"{self.p} is not a prime")

        if self.p == 2:
            raise DomainError("Residue characteristic 2 is never treated as unramified")

        if self.m not in (1, 3) or self.m_prime not in (1, 3):
            raise UnsupportedError("Only dimensions 1 and 3 are covered")

        for value in (self.d, self.d_prime):
            if valuation(value, self.p) != 0:
                raise DomainError(f"Discriminant {value} is not a unit at {self.p}")


@dataclass(frozen=True)
class FormalValue:
    """gamma^gamma_power * q^q_exponent * [indicator]."""

    gamma_power: int
    q_exponent: Rational
    indicator: int

    def __mul__(self, other):
        return FormalValue(
            self.gamma_power + other.gamma_power,
            self.q_exponent + other.q_exponent,
            self.indicator * other.indicator,
        )

    def value(self, p):
        if self.gamma_power:
            raise DomainError("The Weil index does not cancel")

        return self.indicator * Rational(p) ** self.q_exponent

    def to_dict(self):
        return {
            "gamma_power": self.gamma_power,
            "q_exponent": str(self.q_exponent),
            "indicator": self.indicator,
        }


def unramified_W_prime(datum, k, unit=1):
    """Whittaker value gamma * |a|^(1/2) * 1_O(a) at a = p^k * unit; the unit is irrelevant."""

    if datum.m_prime != 1:
        raise UnsupportedError("The one-dimensional side is required")

    return FormalValue(1, Rational(-k, 2), int(k >= 0))


def unramified_W(datum, k, unit=1):
    # the three-dimensional side is taken with psi^-1
    return FormalValue(-1, Rational(-k, 2), int(k >= 0))


def modulus_section_exponent(n=1):
    """Exponent c with delta_P^-1 * Psi_s = |a|^(s + c) on the Siegel Levi."""

    return rho(n) - (n + 1)


def shell_coefficient(datum, k):
    """Exact weight of the shell p^k O^x in the pairing, as a coefficient of t^k."""

    whittaker = unramified_W(datum, k) * unramified_W_prime(datum, k)
    p = Rational(datum.p)
    volume = p ** -k * (1 - 1 / p)
    density = p ** k / (1 - 1 / p)
    # |a|^(s + c) with t = p^-s contributes p^(-k*c) * t^k
    section = p ** (-k * modulus_section_exponent())

    return whittaker.value(datum.p) * section * volume * density


def shell_sums(datum, truncation):
    if not 0 <= truncation <= MAX_SHELL_TRUNCATION:
        raise DomainError(f"Truncation must lie between 0 and {MAX_SHELL_TRUNCATION}")

    coefficients = [shell_coefficient(datum, k) for k in range(truncation, -1, -1)]

    return Poly(coefficients, t, domain=QQ)


def unramified_pairing(datum, n=1, truncation=30):
    if n != 1:
        raise UnsupportedError("The unramified pairing is only computed for n = 1")

    partial = shell_sums(datum, truncation)
    coefficients = partial.all_coeffs()[::-1]
    first = coefficients[0]
    ratio = coefficients[1] / first if len(coefficients) > 1 else Rational(0)

    if first == 0 or any(c != first * ratio ** k for k, c in enumerate(coefficients)):
        raise DomainError("The shell sums are not geometric")

    step = Poly(1 - ratio * t, t, domain=QQ)

    if partial * step != Poly(first * (1 - (ratio * t) ** (truncation + 1)), t, domain=QQ):
        raise DomainError("The truncated shell sum does not close")

    logger.debug(f"Unramified pairing at p={datum.p}: {first}/(1 - {ratio}*t)")

    return RationalFunctionInT(Poly(first, t, domain=QQ), step)


@dataclass(frozen=True)
class EulerProductEstimate:
    excluded: Tuple[int, ...]
    bound: int
    s: float
    value: float
    tail_note: str

    def to_dict(self):
        return {
            "excluded": list(self.excluded),
            "bound": self.bound,
            "s": self.s,
            "value": self.value,
            "tail_note": self.tail_note,
        }


def euler_factors(excluded, bound, s):
    primes = np.array(list(primerange(2, int(bound) + 1)), dtype=float)
    primes = primes[~np.isin(primes, list(excluded))]

    return 1.0 / (1.0 - primes ** -s)


def partial_euler(excluded, bound, s):
    if s <= 1:
        raise Divergence(f"The Euler product diverges at s = {s}")

    excluded = tuple(sorted(set(int(p) for p in excluded)))
    factors = euler_factors(excluded, bound, s)
    # np.prod reduces left to right over ascending primes
    value = float(np.prod(factors)) if len(factors) else 1.0
    tail = max(bound, 1) ** (1 - s) / (s - 1)
    logger.debug(f"Euler product over {len(factors)} primes up to {bound} at s={s}")

    return EulerProductEstimate(
        excluded,
        int(bound),
        float(s),
        value,
        f"relative truncation error below {tail:.3e} (sum of n^-s over n > {bound})",
    )


def zeta_via_eta(s, terms=ETA_TERMS, levels=EULER_TRANSFORM_LEVELS):
    k = np.arange(1, terms + 1, dtype=float)
    partial = np.cumsum(np.where(k % 2 == 1, 1.0, -1.0) * k ** -s)

    for _ in range(levels):
        partial = (partial[:-1] + partial[1:]) / 2

    return partial[-1] / (1 - 2 ** (1 - s))


@dataclass(frozen=True)
class ResidueCheck:
    excluded: Tuple[int, ...]
    closed_form: Rational
    numeric: float
    passed: bool

    def to_dict(self):
        return {
            "excluded": list(self.excluded),
            "closed_form": str(self.closed_form),
            "numeric": self.numeric,
            "passed": self.passed,
        }


def residue_check(excluded, offset=RESIDUE_OFFSET, tolerance=RESIDUE_TOLERANCE, terms=ETA_TERMS):
    excluded = tuple(sorted(set(int(p) for p in excluded)))
    closed_form = Rational(1)

    for p in excluded:
        closed_form *= 1 - Rational(1, p)

    s = 1 + offset
    numeric = offset * zeta_via_eta(s, terms)

    for p in excluded:
        numeric *= 1 - p ** -s

    return ResidueCheck(
        excluded, closed_form, float(numeric), bool(abs(numeric - float(closed_form)) < tolerance)
    )


@dataclass(frozen=True)
class VerdictReport:
    summary: dict
    admissible: bool
    pole_at_rho: bool
    rho: Rational
    verdict: str
    kappa: str = KAPPA
    admissibility: Optional[dict] = None
    residue: Optional[dict] = None
    dimensions: dict = field(default_factory=dict)

    def to_dict(self):
        return {
            "quadruple": self.summary,
            "admissible": self.admissible,
            "pole_at_rho": self.pole_at_rho,
            "pole_at": str(self.rho) if self.pole_at_rho else None,
            "rho": str(self.rho),
            "verdict": self.verdict,
            "kappa": self.kappa,
            "admissibility": self.admissibility,
            "residue": self.residue,
            "dimensions": self.dimensions,
        }


def verdict(alpha, **residue_options):
    report = globally_admissible(alpha)
    places = report.bad_places
    dimensions = {
        side: dimension_compatible(q, alpha.n, not chi.is_trivial(places)).compatible
        for side, (q, chi) in zip(("q", "qp"), alpha.sides())
    }
    admissible = report.admissible and all(dimensions.values())
    residue = residue_check([v.prime for v in places if not v.is_real], **residue_options)

    if not admissible:
        pole, label = False, VERDICT_NOT_ADMISSIBLE
    elif alpha.n > 1:
        pole, label = False, VERDICT_CONJECTURAL
    else:
        # the partial zeta completes to zeta, whose pole at 1 has residue closed_form != 0
        pole = residue.closed_form != 0
        label = VERDICT_ISOMORPHIC if pole else VERDICT_NOT_ADMISSIBLE

    return VerdictReport(
        alpha.to_dict(),
        admissible,
        pole,
        rho(alpha.n),
        label,
        admissibility=report.to_dict(),
        residue=residue.to_dict(),
        dimensions=dimensions,
    )
