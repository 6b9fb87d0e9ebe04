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

from dataclasses import dataclass, field
from typing import Dict, Tuple

from sympy import ImmutableMatrix, Matrix, Rational, eye, prod

from lib.core.exceptions import (
    DegenerateGram,
    DimensionMismatch,
    DomainError,
    IsotropicVector,
    NotOrthogonal,
    UnsupportedError,
)
from lib.core.localfields import (
    Place,
    SquareClass,
    hilbert,
    local_square_classes,
)
from lib.core.logger import logger
from lib.core.quadforms import (
    QuadraticSpace,
    diagonalize,
    gram,
    represents_value_local,
)
from lib.core.settings import AUXILIARY_COEFFICIENTS


def _column(vector):
    return Matrix([Rational(x) for x in vector])


@dataclass(frozen=True)
class OrthogonalElement:
    space: QuadraticSpace
    matrix: ImmutableMatrix

    def __post_init__(self):
        matrix = ImmutableMatrix(self.matrix)
        object.__setattr__(self, "matrix", matrix)

        if matrix.shape != (self.space.dim, self.space.dim):
            raise DimensionMismatch(f"Expected a {self.space.dim}x{self.space.dim} matrix")

        if not is_orthogonal(matrix, self.space):
            raise NotOrthogonal(f"Matrix does not preserve {self.space}")

    @classmethod
    def identity(cls, space):
        return cls(space, ImmutableMatrix(eye(space.dim)))

    @classmethod
    def scalar(cls, space, sign):
        return cls(space, ImmutableMatrix(sign * eye(space.dim)))

    @property
    def det(self):
        return int(self.matrix.det())

    def __mul__(self, other):
        if self.space != other.space:
            raise DimensionMismatch("Elements act on different spaces")

        return OrthogonalElement(self.space, self.matrix * other.matrix)

    def apply(self, vector):
        return tuple(self.matrix * _column(vector))


def is_orthogonal(matrix, q):
    matrix = ImmutableMatrix(matrix)
    return matrix.shape == (q.dim, q.dim) and matrix.T * q.gram * matrix == q.gram


def reflection_matrix(q, vector):
    v = _column(vector)
    norm = q.value(v)

    if norm == 0:
        raise IsotropicVector(f"{tuple(vector)} is isotropic in {q}")

    return ImmutableMatrix(eye(q.dim) - 2 * v * (v.T * q.gram) / norm)


def reflection(q, vector):
    return OrthogonalElement(q, reflection_matrix(q, vector))


@dataclass(frozen=True)
class ReflectionWord:
    space: QuadraticSpace
    vectors: Tuple[Tuple[Rational, ...], ...]

    def __len__(self):
        return len(self.vectors)

    def product(self):
        element = ImmutableMatrix(eye(self.space.dim))

        for vector in self.vectors:
            element = element * reflection_matrix(self.space, vector)

        return OrthogonalElement(self.space, element)

    def spinor_value(self):
        return prod(self.space.value(v) for v in self.vectors)


def _choose_vector(q, element, basis):
    """Anisotropic x in span(basis) with h(x) = x or q(h(x) - x) != 0."""

    def moved(x):
        return q.value(element * x - x)

    for u in basis:
        if element * u == u or moved(u) != 0:
            return u

    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            for c in AUXILIARY_COEFFICIENTS:
                x = basis[i] + c * basis[j]

                if q.value(x) != 0 and moved(x) != 0:
                    return x

    span = Matrix.hstack(*basis)
    fixed = [span * n for n in ((element - eye(q.dim)) * span).nullspace()]

    for x in fixed:
        if q.value(x) != 0:
            return x

    for i in range(len(fixed)):
        for j in range(i + 1, len(fixed)):
            x = fixed[i] + fixed[j]

            if q.value(x) != 0:
                return x

    return None


def _orthogonal_basis(q, vectors):
    """Orthogonal anisotropic basis of the span of vectors, which must be nondegenerate."""

    result = diagonalize(gram(q, [tuple(v) for v in vectors]))
    span = Matrix.hstack(*vectors)

    return [
        span * result.basis[i, :].T
        for i, entry in enumerate(result.entries)
        if entry != 0
    ]


def _complement_in(q, basis, x):
    norm = q.value(x)
    projected = [u - (q.bilinear(u, x) / norm) * x for u in basis]

    return _orthogonal_basis(q, projected)


def cartan_dieudonne(element):
    """Write element as a product of at most dim reflections."""

    q = element.space
    current = Matrix(element.matrix)
    basis = [_column(row) for row in eye(q.dim).tolist()]
    word = []

    while basis:
        x = _choose_vector(q, current, basis)

        if x is None:
            # h - 1 maps the remaining space onto a totally isotropic subspace
            y = basis[0]
            current = reflection_matrix(q, y) * current
            word.append(y)
            continue

        r = current * x - x

        if any(r):
            current = reflection_matrix(q, r) * current
            word.append(r)

        basis = _complement_in(q, basis, x)

    # current is now the identity and element = tau_1 * ... * tau_k
    vectors = tuple(tuple(Rational(c) for c in v) for v in word)
    logger.debug(f"Cartan-Dieudonne length {len(vectors)} in dimension {q.dim}")

    return ReflectionWord(q, vectors)


def spinor_norm(element):
    return SquareClass.of(cartan_dieudonne(element).spinor_value())


def chi_v(q, a, place):
    sign = (-1) ** (q.dim * (q.dim - 1) // 2)
    return hilbert(a, sign * q.determinant, place)


@dataclass(frozen=True)
class QuadCharacter:
    """xi(h) = eps^[det h = -1] * (SN(h'), lambda) on O(V) x {+-1}.

    ``local_eps`` overrides ``eps`` place by place; a global character
    keeps the signs it was assembled from there.
    """

    lam: SquareClass
    eps: int
    dim: int
    local_eps: Dict[Place, int] = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        if self.eps not in (1, -1) or any(s not in (1, -1) for s in self.local_eps.values()):
            raise DomainError("Character signs must be 1 or -1")

        if self.dim < 1 or self.dim % 2 == 0:
            raise UnsupportedError("Only odd-dimensional spaces are supported")

    def eps_at(self, place):
        return self.local_eps.get(place, self.eps)

    def is_trivial(self, places=()):
        return self.lam.is_trivial and all(self.eps_at(v) == 1 for v in places) and self.eps == 1

    def to_dict(self):
        return {
            "lambda": str(self.lam),
            "eps": self.eps,
            "dim": self.dim,
            "local_eps": {str(v): s for v, s in sorted(self.local_eps.items(), key=lambda i: i[0].sort_key())},
        }


def xi_eval(character, element, place):
    q = element.space

    if q.dim % 2 == 0:
        raise UnsupportedError("The character is only defined for odd dimension")

    if q.dim != character.dim:
        raise DimensionMismatch(f"Character of dimension {character.dim} on a space of dimension {q.dim}")

    det = element.det
    # -I is central with det -1 in odd dimension, so h = (det h) * h0 with h0 in SO
    special = OrthogonalElement(q, det * element.matrix)
    value = hilbert(spinor_norm(special).representative, character.lam.representative, place)

    if det == -1:
        value *= character.eps_at(place)

    return value


def xi_on_reflection(character, q, value, place):
    """xi(tau_u) for any u with q(u) = value."""

    return character.eps_at(place) * hilbert(q.determinant * value, character.lam.representative, place)


def orthogonal_complement(q, vectors):
    """Orthogonal anisotropic basis of the complement of span(vectors)."""

    if diagonalize(gram(q, vectors)).rank < len(vectors):
        raise DegenerateGram("The vectors span a degenerate subspace")

    constraints = Matrix([list(v) for v in vectors]) * q.gram
    kernel = constraints.nullspace()

    if not kernel:
        return []

    return _orthogonal_basis(q, kernel)


def xi_trivial_on_stabilizer(q, character, vectors, place):
    """Whether xi is trivial on the pointwise stabilizer of vectors in O(V_v)."""

    complement = orthogonal_complement(q, vectors)

    if not complement:
        return True

    reflections = [reflection(q, tuple(w)) for w in complement]
    products = reflections + [
        reflections[i] * reflections[j]
        for i in range(len(reflections))
        for j in range(i + 1, len(reflections))
    ]

    if any(xi_eval(character, h, place) != 1 for h in products):
        return False

    # the stabilizer is O(W_v), generated by reflections in every class W represents
    space = QuadraticSpace([q.value(w) for w in complement])

    return all(
        xi_on_reflection(character, q, c.representative, place) == 1
        for c in local_square_classes(place)
        if represents_value_local(space, c.representative, place)
    )
