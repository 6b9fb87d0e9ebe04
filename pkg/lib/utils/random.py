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

import random

from sympy import Matrix, Rational

from lib.core.localfields import REAL, Place
from lib.core.orthogroup import OrthogonalElement, reflection_matrix
from lib.core.quadforms import QuadraticSpace

SMALL_PRIMES = (2, 3, 5, 7)


def generator(seed):
    return random.Random(seed)


def rand_rational(rng, bound=30):
    numerator = rng.choice([-1, 1]) * rng.randint(1, bound)
    return Rational(numerator, rng.randint(1, bound))


def rand_space(rng, dim, bound=12):
    return QuadraticSpace([rand_rational(rng, bound) for _ in range(dim)])


def rand_place(rng, primes=SMALL_PRIMES):
    return rng.choice([REAL] + [Place.finite(p) for p in primes])


def rand_invertible(rng, dim, bound=2):
    while True:
        matrix = Matrix(dim, dim, lambda i, j: rng.randint(-bound, bound))

        if matrix.det() != 0:
            return matrix


def rand_vector(rng, dim, bound=3):
    return [rng.randint(-bound, bound) for _ in range(dim)]


def rand_orthogonal(rng, space, length=None):
    """Product of random reflections in anisotropic integer vectors."""

    if length is None:
        length = rng.randint(0, space.dim + 1)

    matrix = Matrix.eye(space.dim)

    for _ in range(length):
        vector = rand_vector(rng, space.dim)

        while space.value(vector) == 0:
            vector = rand_vector(rng, space.dim)

        matrix = matrix * reflection_matrix(space, vector)

    return OrthogonalElement(space, matrix)
