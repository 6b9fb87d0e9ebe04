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

"""Square classes, valuations and Hilbert symbols over Q_v."""

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from sympy import Rational, isprime, legendre_symbol, multiplicity, primefactors
from sympy.ntheory.factor_ import core

from lib.core.exceptions import DomainError, UndefinedValuation
from lib.core.logger import logger
from lib.core.settings import (
    FINITE_PLACE_PREFIX,
    ORACLE_DEPTH_SLACK,
    REAL_PLACE_NAME,
)


@dataclass(frozen=True)
class Place:
    prime: Optional[int] = None

    def __post_init__(self):
        if self.prime is not None and not isprime(self.prime):
            raise DomainError(f"{self.prime} is not a prime")

    @classmethod
    def real(cls):
        return cls(None)

    @classmethod
    def finite(cls, prime):
        return cls(int(prime))

    @property
    def is_real(self):
        return self.prime is None

    def sort_key(self):
        return (0, 0) if self.is_real else (1, self.prime)

    def __str__(self):
        if self.is_real:
            return REAL_PLACE_NAME

        return f"{FINITE_PLACE_PREFIX}{self.prime}"


REAL = Place.real()


def to_rational(value):
    value = Rational(value)

    if value == 0:
        raise DomainError("Zero has no square class")

    return value


def integer_class(value):
    # n/d and n*d differ by the square d^2
    value = to_rational(value)
    return int(value.p * value.q)


def valuation(value, prime):
    value = Rational(value)

    if value == 0:
        raise UndefinedValuation(f"v_{prime}(0) is undefined")

    return multiplicity(prime, abs(value.p)) - multiplicity(prime, value.q)


def square_free_part(value):
    n = integer_class(value)
    sign = -1 if n < 0 else 1

    return sign * int(core(abs(n), 2))


def relevant_primes(*values):
    """Primes dividing the numerator or denominator of any argument."""

    primes = set()

    for value in values:
        value = to_rational(value)
        primes.update(primefactors(abs(value.p)))
        primes.update(primefactors(value.q))

    return sorted(primes)


@dataclass(frozen=True)
class SquareClass:
    representative: int

    @classmethod
    def of(cls, value):
        return cls(square_free_part(value))

    def __mul__(self, other):
        return SquareClass.of(self.representative * other.representative)

    @property
    def is_trivial(self):
        return self.representative == 1

    def __str__(self):
        return str(self.representative)


def _split(n, prime):
    alpha = multiplicity(prime, abs(n))
    return alpha, n // prime ** alpha


@lru_cache(maxsize=None)
def least_non_residue(prime):
    return next(n for n in range(2, prime) if legendre_symbol(n, prime) == -1)


@dataclass(frozen=True)
class LocalClass:
    """Element of Q_v^x / (Q_v^x)^2.

    At the real place ``unit`` is the sign, at an odd prime the Legendre
    symbol of the unit part and at 2 the unit part modulo 8.
    """

    place: Place
    parity: int
    unit: int

    @property
    def representative(self):
        if self.place.is_real:
            return self.unit

        p = self.place.prime

        if p == 2:
            return self.unit * 2 ** self.parity

        unit = 1 if self.unit == 1 else least_non_residue(p)
        return unit * p ** self.parity

    def __str__(self):
        return str(self.representative)


def local_square_class(value, place):
    n = integer_class(value)

    if place.is_real:
        return LocalClass(place, 0, 1 if n > 0 else -1)

    alpha, unit = _split(n, place.prime)

    if place.prime == 2:
        return LocalClass(place, alpha % 2, unit % 8)

    return LocalClass(place, alpha % 2, legendre_symbol(unit % place.prime, place.prime))


@lru_cache(maxsize=None)
def local_square_classes(place):
    if place.is_real:
        representatives = (1, -1)
    elif place.prime == 2:
        representatives = (1, 3, 5, 7, 2, 6, 10, 14)
    else:
        n = least_non_residue(place.prime)
        representatives = (1, n, place.prime, n * place.prime)

    return tuple(local_square_class(r, place) for r in representatives)


def is_local_square(value, place):
    return local_square_class(value, place) == local_square_class(1, place)


def _epsilon(u):
    return 0 if u % 4 == 1 else 1


def _omega(u):
    return 0 if u % 8 in (1, 7) else 1


def hilbert(a, b, place):
    """Closed-form Hilbert symbol (a, b)_v in {1, -1}."""

    a, b = integer_class(a), integer_class(b)

    if place.is_real:
        return -1 if a < 0 and b < 0 else 1

    p = place.prime
    alpha, u = _split(a, p)
    beta, v = _split(b, p)

    if p == 2:
        exponent = _epsilon(u) * _epsilon(v) + alpha * _omega(v) + beta * _omega(u)
        return -1 if exponent % 2 else 1

    sign = -1 if (alpha * beta * (p - 1) // 2) % 2 else 1

    if beta % 2:
        sign *= legendre_symbol(u % p, p)
    if alpha % 2:
        sign *= legendre_symbol(v % p, p)

    return sign


def _lift(coefficients, prime, depth, level, point, lead):
    modulus = prime ** level

    if sum(c * x * x for c, x in zip(coefficients, point)) % modulus:
        return False

    if level == depth:
        return True

    free = [i for i in range(len(point)) if i != lead]

    for steps in _grid(prime, len(free)):
        child = list(point)

        for i, t in zip(free, steps):
            child[i] += t * modulus

        if _lift(coefficients, prime, depth, level + 1, child, lead):
            return True

    return False


def _grid(prime, size):
    if not size:
        yield ()
        return

    for head in range(prime):
        for tail in _grid(prime, size - 1):
            yield (head,) + tail


def has_primitive_zero(coefficients, prime, depth):
    """Search for a primitive zero of sum(c_i * x_i^2) modulo prime^depth.

    Each chart fixes the first unit coordinate to 1 and forces the earlier
    ones to vanish modulo the prime, so every vector tried is primitive.
    """

    size = len(coefficients)

    for lead in range(size):
        for steps in _grid(prime, size - lead - 1):
            point = [0] * lead + [1] + list(steps)

            if _lift(coefficients, prime, depth, 1, point, lead):
                return True

    return False


def oracle_depth(values, prime, slack=ORACLE_DEPTH_SLACK):
    return 2 * sum(abs(valuation(v, prime)) for v in values) + slack


def hilbert_oracle(a, b, place, depth=None, slack=ORACLE_DEPTH_SLACK):
    """Hilbert symbol by searching solutions of z^2 = a*x^2 + b*y^2."""

    a, b = square_free_part(a), square_free_part(b)

    if place.is_real:
        return 1 if a > 0 or b > 0 else -1

    if depth is None:
        depth = oracle_depth((a, b), place.prime, slack)
    elif depth < 2 * max(abs(valuation(a, place.prime)), abs(valuation(b, place.prime))) + 5:
        raise DomainError(f"Oracle depth {depth} is too shallow at {place}")

    solvable = has_primitive_zero((1, -a, -b), place.prime, depth)
    logger.debug(f"Oracle ({a}, {b})_{place} at depth {depth}: {solvable}")

    return 1 if solvable else -1


def hilbert_places(a, b):
    return [REAL] + [Place.finite(p) for p in sorted(set(relevant_primes(a, b)) | {2})]


def hilbert_product(a, b):
    """Places where (a, b)_v = -1 paired with the symbol; always an even number."""

    return [
        (place, -1) for place in hilbert_places(a, b) if hilbert(a, b, place) == -1
    ]
