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

from dataclasses import dataclass
from typing import Tuple

from sympy import Rational, nextprime, primerange

from lib.core.exceptions import (
    DimensionMismatch,
    NoAdmissibleData,
    UnsupportedError,
)
from lib.core.localfields import (
    Place,
    SquareClass,
    hilbert,
    local_square_class,
    local_square_classes,
    relevant_primes,
)
from lib.core.logger import logger
from lib.core.orthogroup import (
    OrthogonalElement,
    QuadCharacter,
    chi_v,
    xi_eval,
    xi_on_reflection,
)
from lib.core.quadforms import (
    QuadraticSpace,
    bad_places as form_places,
    complement_local,
    hasse,
    local_forms,
    represents_value_local,
)


@dataclass(frozen=True)
class Quadruple:
    q: QuadraticSpace
    chi: QuadCharacter
    q_prime: QuadraticSpace
    chi_prime: QuadCharacter
    n: int = 1

    def __post_init__(self):
        if self.q.dim % 2 == 0 or self.q_prime.dim % 2 == 0:
            raise UnsupportedError("Both quadratic spaces must be odd-dimensional")

        if self.n < 1:
            raise DimensionMismatch("The symplectic rank must be positive")

        if self.chi.dim != self.q.dim or self.chi_prime.dim != self.q_prime.dim:
            raise DimensionMismatch("Each character must live on its own space")

    def sides(self):
        return (self.q, self.chi), (self.q_prime, self.chi_prime)

    def to_dict(self):
        return {
            "q": self.q.to_dict(),
            "qp": self.q_prime.to_dict(),
            "character": self.chi.to_dict(),
            "character_prime": self.chi_prime.to_dict(),
            "n": self.n,
        }


@dataclass(frozen=True)
class AdmissibilityReport:
    place: Place
    cc: bool
    fc: bool
    represented_classes: Tuple[Tuple[str, ...], Tuple[str, ...]]

    @property
    def verdict(self):
        return self.cc and self.fc

    def to_dict(self):
        return {
            "place": str(self.place),
            "cc": self.cc,
            "fc": self.fc,
            "represented_classes": [list(side) for side in self.represented_classes],
            "verdict": self.verdict,
        }


@dataclass(frozen=True)
class CharacterData:
    lam: SquareClass
    eps: int
    eps_prime: int
    lam_prime: SquareClass

    def to_dict(self):
        return {
            "lambda": str(self.lam),
            "lambda_prime": str(self.lam_prime),
            "eps": self.eps,
            "eps_prime": self.eps_prime,
        }


@dataclass(frozen=True)
class GlobalAdmissibility:
    admissible: bool
    reports: Tuple[AdmissibilityReport, ...]
    epsilon_product_ok: bool
    bad_places: Tuple[Place, ...]
    unramified_ok: bool = True

    def to_dict(self):
        return {
            "admissible": self.admissible,
            "epsilon_product_ok": self.epsilon_product_ok,
            "unramified_ok": self.unramified_ok,
            "bad_places": [str(place) for place in self.bad_places],
            "reports": [report.to_dict() for report in self.reports],
        }


@dataclass(frozen=True)
class DimensionCheck:
    compatible: bool
    sharpened: bool


def central_value(q, chi, n, place):
    minus_identity = OrthogonalElement.scalar(q, -1)
    return chi_v(q, (-1) ** n, place) * xi_eval(chi, minus_identity, place)


def cc_holds(alpha, place):
    return central_value(alpha.q, alpha.chi, alpha.n, place) == central_value(
        alpha.q_prime, alpha.chi_prime, alpha.n, place
    )


def form_label(form):
    if form.dim == 1:
        return str(form.diag[0])

    return str(form)


def fourier_support(q, chi, beta, place):
    """Whether the beta-th coefficient of the lift can be nonzero at place."""

    complement = complement_local(q, beta, place)

    if complement is None:
        return False

    if not complement:
        return True

    stabilizer = QuadraticSpace(complement)

    return all(
        xi_on_reflection(chi, q, c.representative, place) == 1
        for c in local_square_classes(place)
        if represents_value_local(stabilizer, c.representative, place)
    )


def supported_forms(q, chi, n, place):
    return [beta for beta in local_forms(n, place) if fourier_support(q, chi, beta, place)]


def fc_holds(alpha, place):
    if alpha.n > min(alpha.q.dim, alpha.q_prime.dim):
        raise DimensionMismatch(f"n = {alpha.n} exceeds a space dimension")

    return all(
        fourier_support(alpha.q, alpha.chi, beta, place)
        == fourier_support(alpha.q_prime, alpha.chi_prime, beta, place)
        for beta in local_forms(alpha.n, place)
    )


def locally_admissible(alpha, place):
    represented = tuple(
        tuple(form_label(beta) for beta in supported_forms(q, chi, alpha.n, place))
        if alpha.n <= q.dim
        else ()
        for q, chi in alpha.sides()
    )
    fc = alpha.n <= min(alpha.q.dim, alpha.q_prime.dim) and fc_holds(alpha, place)
    report = AdmissibilityReport(place, cc_holds(alpha, place), fc, represented)
    logger.debug(f"Admissibility at {place}: cc={report.cc} fc={report.fc}")

    return report


def _three_one(q, q_prime, place):
    d, d_prime = q.determinant, q_prime.determinant

    if not represents_value_local(q, d_prime, place):
        raise NoAdmissibleData(f"{q} does not represent {d_prime} at {place}")

    lam = SquareClass.of(-d * d_prime)
    h = hasse(q, place)

    return CharacterData(
        lam, hilbert(-1, d_prime, place) * h, hilbert(-1, -d, place) * h, lam
    )


def _equal_dimension(q, q_prime, place):
    n = q.dim - 2

    for beta in local_forms(n, place):
        complement = complement_local(q, beta, place)
        complement_prime = complement_local(q_prime, beta, place)

        if complement is None or complement_prime is None:
            continue

        lam = SquareClass.of(-q.determinant * beta.determinant)
        lam_prime = SquareClass.of(-q_prime.determinant * beta.determinant)
        # xi(tau_u) = 1 for u spanning the stabilizer line forces eps
        eps = hilbert(complement[0] * q.determinant, lam.representative, place)
        eps_prime = hilbert(complement_prime[0] * q_prime.determinant, lam_prime.representative, place)
        alpha = Quadruple(
            q,
            QuadCharacter(lam, eps, q.dim),
            q_prime,
            QuadCharacter(lam_prime, eps_prime, q_prime.dim),
            n,
        )

        if cc_holds(alpha, place) and fc_holds(alpha, place):
            return CharacterData(lam, eps, eps_prime, lam_prime)

    raise NoAdmissibleData(f"No admissible characters for {q} and {q_prime} at {place}")


def _candidate_characters(q, q_prime, place):
    if q.dim < q_prime.dim:
        data = _candidate_characters(q_prime, q, place)
        return CharacterData(data.lam_prime, data.eps_prime, data.eps, data.lam)

    if (q.dim, q_prime.dim) == (3, 1):
        return _three_one(q, q_prime, place)

    if q.dim == q_prime.dim == 1:
        if local_square_class(q.determinant, place) != local_square_class(q_prime.determinant, place):
            raise NoAdmissibleData(f"{q} and {q_prime} have different discriminants at {place}")

        return CharacterData(SquareClass(1), 1, 1, SquareClass(1))

    if q.dim == q_prime.dim and q.dim >= 3:
        return _equal_dimension(q, q_prime, place)

    raise UnsupportedError(f"No character construction for dimensions {q.dim} and {q_prime.dim}")


def construct_characters(q, q_prime, place):
    """Local character data making (q, q_prime) admissible at place.

    Raises NoAdmissibleData when the only candidate fails CC or FC there.
    """

    data = _candidate_characters(q, q_prime, place)
    n = q.dim - 2 if q.dim == q_prime.dim >= 3 else 1
    alpha = Quadruple(
        q,
        QuadCharacter(data.lam, data.eps, q.dim),
        q_prime,
        QuadCharacter(data.lam_prime, data.eps_prime, q_prime.dim),
        n,
    )

    if not (cc_holds(alpha, place) and fc_holds(alpha, place)):
        raise NoAdmissibleData(f"The characters for {q} and {q_prime} are not admissible at {place}")

    return data


def dimension_compatible(q, n, nontrivial):
    if not nontrivial:
        return DimensionCheck(True, False)

    return DimensionCheck(q.dim - n <= 2, q.dim in (n, n + 2))


def bad_places(alpha):
    places = set(form_places(alpha.q, alpha.q_prime))
    places.update(
        Place.finite(p)
        for p in relevant_primes(alpha.chi.lam.representative, alpha.chi_prime.lam.representative)
    )
    # a sign prescribed at a place makes that place ramified
    places.update(alpha.chi.local_eps)
    places.update(alpha.chi_prime.local_eps)

    return tuple(sorted(places, key=Place.sort_key))


def is_unramified_place(alpha, place):
    if place.is_real or place.prime == 2:
        return False

    values = list(alpha.q.diag) + list(alpha.q_prime.diag) + [
        alpha.chi.lam.representative,
        alpha.chi_prime.lam.representative,
    ]

    return all(place.prime not in relevant_primes(v) for v in values) and (
        alpha.chi.eps_at(place) == alpha.chi_prime.eps_at(place) == 1
    )


def unramified_witnesses(places):
    """Odd primes outside places, up to the first prime past the largest bad prime."""

    largest = max((place.prime for place in places if not place.is_real), default=2)

    return tuple(
        Place.finite(p) for p in primerange(3, nextprime(largest) + 1)
        if Place.finite(p) not in places
    )


def globally_admissible(alpha):
    places = bad_places(alpha)
    reports = tuple(locally_admissible(alpha, place) for place in places)
    epsilon_product_ok = all(
        _product(chi.eps_at(place) for place in places) == 1
        for chi in (alpha.chi, alpha.chi_prime)
    )
    # every place outside the bad set must be unramified
    unramified_ok = all(is_unramified_place(alpha, place) for place in unramified_witnesses(places))

    return GlobalAdmissibility(
        all(report.verdict for report in reports) and epsilon_product_ok and unramified_ok,
        reports,
        epsilon_product_ok,
        places,
        unramified_ok,
    )


def _product(signs):
    value = 1

    for sign in signs:
        value *= sign

    return value


def assemble_quadruple(q, q_prime, n=1):
    """Global quadruple carrying the candidate local data at each bad place.

    Places where the candidate is not admissible are left for
    globally_admissible to report.
    """

    dims = sorted((q.dim, q_prime.dim))

    if dims == [1, 3]:
        big, small = (q, q_prime) if q.dim == 3 else (q_prime, q)
        lam = SquareClass.of(-big.determinant * small.determinant)
    elif dims == [1, 1]:
        lam = SquareClass(1)
    else:
        raise UnsupportedError(f"No global assembly for dimensions {q.dim} and {q_prime.dim}")

    places = sorted(
        set(form_places(q, q_prime)) | {Place.finite(p) for p in relevant_primes(lam.representative)},
        key=Place.sort_key,
    )
    eps, eps_prime = {}, {}

    for place in places:
        data = _candidate_characters(q, q_prime, place)
        eps[place], eps_prime[place] = data.eps, data.eps_prime

    return Quadruple(
        q,
        QuadCharacter(lam, 1, q.dim, eps),
        q_prime,
        QuadCharacter(lam, 1, q_prime.dim, eps_prime),
        n,
    )


def rho(n):
    return Rational(n + 1, 2)
