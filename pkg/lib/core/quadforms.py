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
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Optional, Tuple

from sympy import ImmutableMatrix, Matrix, Rational, eye, prod

from lib.core.exceptions import (
    DegenerateGram,
    DimensionMismatch,
    DomainError,
)
from lib.core.localfields import (
    REAL,
    Place,
    SquareClass,
    has_primitive_zero,
    hilbert,
    is_local_square,
    local_square_class,
    local_square_classes,
    oracle_depth,
    relevant_primes,
    square_free_part,
    to_rational,
)
from lib.core.logger import logger
from lib.core.settings import ORACLE_DEPTH_SLACK


@dataclass(frozen=True)
class QuadraticSpace:
    """Diagonal nondegenerate quadratic space <a_1, ..., a_m> over Q."""

    diag: Tuple[Rational, ...]

    def __init__(self, diag):
        entries = tuple(to_rational(a) for a in diag)

        if not entries:
            raise DomainError("A quadratic space needs at least one coefficient")

        object.__setattr__(self, "diag", entries)

    @property
    def dim(self):
        return len(self.diag)

    @property
    def determinant(self):
        return prod(self.diag)

    @property
    def gram(self):
        return ImmutableMatrix.diag(*self.diag)

    @property
    def signature(self):
        positive = sum(1 for a in self.diag if a > 0)
        return positive, self.dim - positive

    def value(self, vector):
        return sum(a * x * x for a, x in zip(self.diag, vector))

    def bilinear(self, u, v):
        return sum(a * x * y for a, x, y in zip(self.diag, u, v))

    def __add__(self, other):
        return QuadraticSpace(self.diag + other.diag)

    def __str__(self):
        return "<" + ", ".join(str(a) for a in self.diag) + ">"

    def to_dict(self):
        return {"diag": [str(a) for a in self.diag]}


def symmetric_matrix(rows):
    matrix = ImmutableMatrix(rows)

    if matrix.rows != matrix.cols or matrix != matrix.T:
        raise DomainError("Gram matrix must be square and symmetric")

    return matrix


def gram(q, vectors):
    for vector in vectors:
        if len(vector) != q.dim:
            raise DimensionMismatch(f"Vector of length {len(vector)} in a space of dimension {q.dim}")

    return ImmutableMatrix(
        [[q.bilinear(u, v) for v in vectors] for u in vectors]
    )


@dataclass(frozen=True)
class Diagonalization:
    entries: Tuple[Rational, ...]
    basis: ImmutableMatrix
    rank: int

    @property
    def space(self):
        nonzero = [a for a in self.entries if a != 0]
        return QuadraticSpace(nonzero) if nonzero else None


def diagonalize(beta):
    """Return A and D with A * beta * A^T = D diagonal."""

    matrix = Matrix(symmetric_matrix(beta))
    size = matrix.rows
    basis = eye(size)

    for i in range(size):
        if matrix[i, i] == 0:
            swap = next((j for j in range(i + 1, size) if matrix[j, j] != 0), None)

            if swap is not None:
                matrix.row_swap(i, swap)
                matrix.col_swap(i, swap)
                basis.row_swap(i, swap)
            else:
                partner = next((j for j in range(i + 1, size) if matrix[i, j] != 0), None)

                if partner is None:
                    continue

                # diagonal becomes 2 * beta_ij
                matrix[i, :] = matrix[i, :] + matrix[partner, :]
                matrix[:, i] = matrix[:, i] + matrix[:, partner]
                basis[i, :] = basis[i, :] + basis[partner, :]

        pivot = matrix[i, i]

        for k in range(i + 1, size):
            factor = matrix[k, i] / pivot

            if factor:
                matrix[k, :] = matrix[k, :] - factor * matrix[i, :]
                matrix[:, k] = matrix[:, k] - factor * matrix[:, i]
                basis[k, :] = basis[k, :] - factor * basis[i, :]

    entries = tuple(Rational(matrix[i, i]) for i in range(size))

    return Diagonalization(
        entries, ImmutableMatrix(basis), sum(1 for a in entries if a != 0)
    )


def as_space(beta):
    """Accept a QuadraticSpace or a symmetric matrix and return a nondegenerate space."""

    if isinstance(beta, QuadraticSpace):
        return beta

    result = diagonalize(beta)

    if result.rank < len(result.entries):
        raise DegenerateGram("The Gram matrix is degenerate")

    return result.space


def discriminant(q):
    return SquareClass.of(q.determinant)


def local_discriminant(q, place):
    return local_square_class(q.determinant, place)


def hasse(q, place):
    value = 1

    for i in range(q.dim):
        for j in range(i + 1, q.dim):
            value *= hilbert(q.diag[i], q.diag[j], place)

    return value


def local_key(q, place):
    """Complete isometry invariant of q over Q_v."""

    if place.is_real:
        return (q.dim, q.signature)

    return (q.dim, local_discriminant(q, place), hasse(q, place))


def orthogonal_sum(q, q_prime):
    return q + q_prime


def local_invariants(q, place):
    return q.dim, local_discriminant(q, place), hasse(q, place)


@dataclass(frozen=True)
class InvariantTriple:
    dim: int
    disc: SquareClass
    hasse: Tuple[Tuple[Place, int], ...]

    def hasse_at(self, place):
        return dict(self.hasse)[place]

    def to_dict(self):
        return {
            "dim": self.dim,
            "disc": str(self.disc),
            "hasse": {str(place): sign for place, sign in self.hasse},
        }


def invariants(q):
    return InvariantTriple(
        q.dim,
        discriminant(q),
        tuple((place, hasse(q, place)) for place in bad_places(q)),
    )


def is_isometric_local(q, q_prime, place):
    return local_key(q, place) == local_key(q_prime, place)


def is_isotropic_local(q, place):
    if q.dim == 1:
        return False

    if place.is_real and q.dim >= 5:
        positive, negative = q.signature
        return positive > 0 and negative > 0

    d = q.determinant
    c = hasse(q, place)

    if q.dim == 2:
        return is_local_square(-d, place)
    if q.dim == 3:
        return c == hilbert(-1, -d, place)
    if q.dim == 4:
        return not is_local_square(d, place) or c == hilbert(-1, -1, place)

    return True


def bad_places(*spaces):
    primes = set(relevant_primes(*[a for q in spaces for a in q.diag])) | {2}
    return [REAL] + [Place.finite(p) for p in sorted(primes)]


def is_anisotropic_global(q):
    # Hasse-Minkowski; a form isotropic at every listed place is isotropic
    # at all the others as well
    return not all(is_isotropic_local(q, place) for place in bad_places(q))


def represents_value_local(q, beta, place):
    beta = to_rational(beta)
    return is_isotropic_local(q + QuadraticSpace([-beta]), place)


def represents_value_oracle(q, beta, place, depth=None, slack=ORACLE_DEPTH_SLACK):
    """Decide q(x) = beta over Q_v by an exhaustive search, for testing."""

    coefficients = [square_free_part(a) for a in q.diag] + [square_free_part(-to_rational(beta))]

    if place.is_real:
        return any(c > 0 for c in coefficients) and any(c < 0 for c in coefficients)

    if depth is None:
        depth = oracle_depth(coefficients, place.prime, slack)

    return has_primitive_zero(coefficients, place.prime, depth)


@lru_cache(maxsize=None)
def local_forms(n, place):
    """One diagonal representative of each isometry class of dimension n over Q_v."""

    forms = {}

    for classes in combinations_with_replacement(local_square_classes(place), n):
        form = QuadraticSpace([c.representative for c in classes])
        forms.setdefault(local_key(form, place), form)

    return tuple(forms.values())


def complement_local(q, beta, place) -> Optional[Tuple[Rational, ...]]:
    """Diagonal entries of r with q ~ beta + r over Q_v, or None.

    An empty tuple means beta fills the whole of q.
    """

    beta = as_space(beta)

    if beta.dim > q.dim:
        raise DimensionMismatch(f"A form of dimension {beta.dim} does not fit in dimension {q.dim}")

    rest = q.dim - beta.dim

    if rest == 0:
        return () if is_isometric_local(q, beta, place) else None

    for candidate in local_forms(rest, place):
        if is_isometric_local(q, beta + candidate, place):
            logger.debug(f"{q} = {beta} + {candidate} at {place}")
            return candidate.diag

    return None


def represents_gram_local(q, beta, place):
    return complement_local(q, beta, place) is not None
