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

"""Schrödinger model of the Weil representation of Sp_2n(F_p) on functions on V^n.

Points are m x n matrices over F_p with Gram matrix x^T Q x.  Operators are
dense complex matrices indexed by the points in row-major digit order.
"""

from collections import deque
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product
from typing import Dict, Tuple

import numpy as np
from sympy import Matrix, isprime, legendre_symbol

from lib.core.exceptions import (
    DegenerateGram,
    DomainError,
    GroupTooLarge,
    ModelTooLarge,
)
from lib.core.logger import logger
from lib.core.settings import (
    MAX_GROUP_ELEMENTS,
    MAX_WEIL_DIMENSION,
    MAX_WEIL_PRIME,
    MAX_WEIL_RANK,
    MAX_WEIL_STATES,
    WEIL_SAMPLES,
    WEIL_TOLERANCE,
)

CHARACTERS = ("trivial", "det", "spinor", "det*spinor")


@dataclass(frozen=True)
class FiniteWeilModel:
    p: int
    diag: Tuple[int, ...]
    n: int = 1

    def __post_init__(self):
        if self.p == 2 or not isprime(self.p) or self.p > MAX_WEIL_PRIME:
            raise DomainError(f"The prime must be odd and at most {MAX_WEIL_PRIME}")

        if not 1 <= len(self.diag) <= MAX_WEIL_DIMENSION:
            raise DomainError(f"The dimension must be between 1 and {MAX_WEIL_DIMENSION}")

        if not 1 <= self.n <= MAX_WEIL_RANK:
            raise DomainError(f"The rank must be between 1 and {MAX_WEIL_RANK}")

        diag = tuple(int(a) % self.p for a in self.diag)

        if 0 in diag:
            raise DomainError("Diagonal entries must be units modulo p")

        object.__setattr__(self, "diag", diag)

    @property
    def m(self):
        return len(self.diag)

    @property
    def size(self):
        return self.p ** (self.m * self.n)

    @cached_property
    def points(self):
        digits = np.array(list(product(range(self.p), repeat=self.m * self.n)), dtype=np.int64)
        return digits.reshape(self.size, self.m, self.n)

    @cached_property
    def grams(self):
        q = np.diag(self.diag)
        return np.einsum("kij,il,klr->kjr", self.points, q, self.points) % self.p

    @cached_property
    def _weights(self):
        return self.p ** np.arange(self.m * self.n - 1, -1, -1, dtype=np.int64)

    def index_of(self, points):
        points = np.asarray(points) % self.p
        return points.reshape(-1, self.m * self.n) @ self._weights

    def psi(self, values):
        return np.exp(2j * np.pi * (np.asarray(values) % self.p) / self.p)

    def eta(self, t):
        return legendre_symbol(int(t) % self.p, self.p) ** self.m

    def check_size(self, max_states=MAX_WEIL_STATES):
        if self.size > max_states:
            raise ModelTooLarge(f"{self.size} states exceed the operator limit of {max_states}")


def _det_mod(a, p):
    return int(Matrix(a).det()) % p


def _inverse_mod(a, p):
    return np.array(Matrix(a).inv_mod(p).tolist(), dtype=np.int64)


def _square(a, n, p):
    return np.array(a, dtype=np.int64).reshape(n, n) % p


def op_levi(model, a, max_states=MAX_WEIL_STATES):
    """phi(x) -> eta(det a) * phi(x a)."""

    model.check_size(max_states)
    a = _square(a, model.n, model.p)
    det = _det_mod(a, model.p)

    if det == 0:
        raise DomainError("The Levi element must be invertible modulo p")

    columns = model.index_of(model.points @ a)
    operator = np.zeros((model.size, model.size), dtype=complex)
    operator[np.arange(model.size), columns] = model.eta(det)

    return operator


def unipotent_phases(model, b):
    b = _square(b, model.n, model.p)

    if not np.array_equal(b, b.T):
        raise DomainError("The unipotent parameter must be symmetric")

    return model.psi(np.einsum("ij,kji->k", b, model.grams))


def op_unipotent(model, b, max_states=MAX_WEIL_STATES):
    model.check_size(max_states)
    return np.diag(unipotent_phases(model, b))


def gauss_sum(p, a):
    x = np.arange(p)
    return np.sum(np.exp(2j * np.pi * (a * x * x % p) / p))


def weil_index(model):
    value = 1 + 0j

    for a in model.diag:
        value *= (gauss_sum(model.p, a) / np.sqrt(model.p)) ** model.n

    return value


def op_weyl(model, max_states=MAX_WEIL_STATES):
    model.check_size(max_states)
    flat = model.points.reshape(model.size, -1)
    weights = np.repeat(np.array(model.diag, dtype=np.int64), model.n)
    pairing = (2 * (flat * weights) @ flat.T) % model.p
    scale = weil_index(model) * model.p ** (model.m * model.n / 2)

    return model.psi(-pairing) / scale


def proportional(left, right, tolerance=WEIL_TOLERANCE):
    """Whether left = c * right with |c| = 1."""

    scalar = np.vdot(right, left) / np.vdot(right, right)

    return bool(
        abs(abs(scalar) - 1) <= tolerance
        and np.linalg.norm(left - scalar * right) <= tolerance * max(1.0, np.linalg.norm(left))
    )


def is_unitary(operator, tolerance=WEIL_TOLERANCE):
    identity = np.eye(operator.shape[0])
    return bool(np.linalg.norm(operator.conj().T @ operator - identity) <= tolerance * operator.shape[0])


def symmetric_matrices(n, p):
    positions = [(i, j) for i in range(n) for j in range(i, n)]

    for values in product(range(p), repeat=len(positions)):
        b = np.zeros((n, n), dtype=np.int64)

        for (i, j), value in zip(positions, values):
            b[i, j] = b[j, i] = value

        yield b


def nondegenerate_grams(n, p):
    return [b for b in symmetric_matrices(n, p) if _det_mod(b, p)]


def _invertible_samples(model, rng, samples):
    if model.n == 1:
        return [np.array([[a]]) for a in range(1, model.p)]

    found = []

    while len(found) < samples:
        a = rng.integers(0, model.p, size=(model.n, model.n))

        if _det_mod(a, model.p):
            found.append(a)

    return found


def _symmetric_samples(model, rng, samples):
    result = []

    for _ in range(samples):
        b = rng.integers(0, model.p, size=(model.n, model.n))
        result.append((b + b.T) % model.p)

    return result


def relation_checks(model, seed=0, samples=WEIL_SAMPLES, tolerance=WEIL_TOLERANCE, max_states=MAX_WEIL_STATES):
    rng = np.random.default_rng(seed)
    identity = np.eye(model.n, dtype=np.int64)
    w = op_weyl(model, max_states)
    w_inverse = w.conj().T
    minus = op_levi(model, -identity, max_states)
    levis = [(a, op_levi(model, a, max_states)) for a in _invertible_samples(model, rng, samples)]
    unipotents = [(b, op_unipotent(model, b, max_states)) for b in _symmetric_samples(model, rng, samples)]
    p = model.p

    def cube(operator):
        return operator @ operator @ operator

    checks = {
        "unitarity": is_unitary(w, tolerance)
        and all(is_unitary(op, tolerance) for _, op in levis + unipotents),
        "levi_conjugates_unipotent": all(
            proportional(
                m_a @ n_b @ op_levi(model, _inverse_mod(a, p), max_states),
                op_unipotent(model, a @ b @ a.T % p, max_states),
                tolerance,
            )
            for a, m_a in levis[:samples]
            for b, n_b in unipotents[:3]
        ),
        "weyl_conjugates_levi": all(
            proportional(w @ m_a @ w_inverse, op_levi(model, _inverse_mod(a, p).T, max_states), tolerance)
            for a, m_a in levis
        ),
        "weyl_squared": proportional(w @ w, minus, tolerance),
        "braid_plus": proportional(cube(w @ op_unipotent(model, identity, max_states)), minus, tolerance),
        "braid_minus": proportional(
            cube(w @ op_unipotent(model, -identity, max_states)), np.eye(model.size), tolerance
        ),
    }

    logger.debug(f"Weil relations for p={p} diag={model.diag} n={model.n}: {checks}")

    return checks


def relation_suite(model, **kwargs):
    return all(relation_checks(model, **kwargs).values())


def theta_sum(model, phi):
    return complex(np.sum(phi))


def fourier_coefficient(model, phi, beta):
    beta = _square(beta, model.n, model.p)
    total = 0j
    count = 0

    for b in symmetric_matrices(model.n, model.p):
        weight = model.psi(-np.trace(b @ beta))
        total += weight * theta_sum(model, unipotent_phases(model, b) * phi)
        count += 1

    return total / count


def level_set(model, beta):
    beta = _square(beta, model.n, model.p)
    mask = np.all(model.grams == beta, axis=(1, 2))

    return np.nonzero(mask)[0]


def direct_level_sum(model, phi, beta):
    return complex(np.sum(np.asarray(phi)[level_set(model, beta)]))


@dataclass
class OrthogonalGroup:
    elements: np.ndarray
    characters: Dict[str, np.ndarray]

    def __len__(self):
        return len(self.elements)


def _reflections(model):
    p, q = model.p, np.diag(model.diag)

    for vector in product(range(p), repeat=model.m):
        u = np.array(vector, dtype=np.int64)
        nonzero = np.nonzero(u)[0]

        # one representative per line
        if not len(nonzero) or u[nonzero[0]] != 1:
            continue

        norm = int(u @ q @ u) % p

        if not norm:
            continue

        matrix = (np.eye(model.m, dtype=np.int64) - 2 * pow(norm, -1, p) * np.outer(u, u @ q)) % p
        yield matrix, legendre_symbol(norm, p)


@lru_cache(maxsize=8)
def orthogonal_group(model, cap=MAX_GROUP_ELEMENTS):
    """Closure of the reflections of (F_p^m, q) with det and spinor values."""

    generators = list(_reflections(model))
    identity = np.eye(model.m, dtype=np.int64)
    seen = {identity.tobytes(): 0}
    elements, dets, spinors = [identity], [1], [1]
    queue = deque([0])

    while queue:
        index = queue.popleft()

        for matrix, spinor in generators:
            image = matrix @ elements[index] % model.p
            key = image.tobytes()

            if key in seen:
                continue

            if len(elements) >= cap:
                raise GroupTooLarge(f"Orthogonal group exceeds {cap} elements")

            seen[key] = len(elements)
            elements.append(image)
            dets.append(-dets[index])
            spinors.append(spinor * spinors[index])
            queue.append(len(elements) - 1)

    dets, spinors = np.array(dets), np.array(spinors)
    logger.debug(f"O({model.diag}) over F_{model.p} has {len(elements)} elements")

    return OrthogonalGroup(
        np.array(elements),
        {
            "trivial": np.ones(len(elements), dtype=np.int64),
            "det": dets,
            "spinor": spinors,
            "det*spinor": dets * spinors,
        },
    )


def _orbit(model, group, point):
    return model.index_of(np.einsum("gij,jk->gik", group.elements, point) % model.p)


def orbit_transitivity_check(model, beta, cap=MAX_GROUP_ELEMENTS):
    beta = _square(beta, model.n, model.p)

    if not np.array_equal(beta, beta.T) or not _det_mod(beta, model.p):
        raise DegenerateGram("The Gram matrix must be symmetric and nondegenerate modulo p")

    level = level_set(model, beta)

    if not len(level):
        return True

    group = orthogonal_group(model, cap)
    orbit = set(_orbit(model, group, model.points[level[0]]).tolist())

    return orbit == set(level.tolist())


def orbit_character_average(model, point_index, character, cap=MAX_GROUP_ELEMENTS):
    """phi = sum over g of chi(g) * delta at g(x0)."""

    group = orthogonal_group(model, cap)
    images = _orbit(model, group, model.points[point_index])
    phi = np.zeros(model.size, dtype=complex)
    np.add.at(phi, images, group.characters[character])

    return phi


def stabilizer_characters(model, point_index, cap=MAX_GROUP_ELEMENTS):
    """Characters that are nontrivial on the stabilizer of a point."""

    group = orthogonal_group(model, cap)
    point = model.points[point_index]
    fixing = np.all(np.einsum("gij,jk->gik", group.elements, point) % model.p == point, axis=(1, 2))

    return [name for name in CHARACTERS if np.any(group.characters[name][fixing] != 1)]


def random_schwartz(model, rng):
    return rng.standard_normal(model.size) + 1j * rng.standard_normal(model.size)


def weil_check(p, diag, n=1, seed=0, samples=WEIL_SAMPLES, tolerance=WEIL_TOLERANCE,
               max_states=MAX_WEIL_STATES, cap=MAX_GROUP_ELEMENTS):
    model = FiniteWeilModel(p, tuple(diag), n)
    rng = np.random.default_rng(seed)
    report = dict(relation_checks(model, seed, samples, tolerance, max_states))
    grams = nondegenerate_grams(n, p)
    functions = [random_schwartz(model, rng) for _ in range(samples)]

    report["fourier_matches_level_sets"] = all(
        abs(fourier_coefficient(model, phi, beta) - direct_level_sum(model, phi, beta)) <= tolerance * model.size
        for phi in functions[:3]
        for beta in grams
    ) and all(
        abs(fourier_coefficient(model, phi, grams[0]) - direct_level_sum(model, phi, grams[0])) <= tolerance * model.size
        for phi in functions
    )
    report["vanishing_off_represented"] = all(
        abs(fourier_coefficient(model, phi, beta)) <= tolerance * model.size
        for beta in grams
        if not len(level_set(model, beta))
        for phi in functions[:3]
    )
    report["orbit_transitivity"] = all(orbit_transitivity_check(model, beta, cap) for beta in grams)

    vanishing = True

    for beta in grams:
        level = level_set(model, beta)

        if not len(level):
            continue

        for character in stabilizer_characters(model, level[0], cap):
            phi = orbit_character_average(model, level[0], character, cap)
            vanishing &= abs(fourier_coefficient(model, phi, beta)) <= tolerance * model.size

    report["stabilizer_vanishing"] = bool(vanishing)

    a = _invertible_samples(model, rng, 1)[-1]
    phi = functions[0]
    report["theta_levi_equivariance"] = bool(
        abs(theta_sum(model, op_levi(model, a, max_states) @ phi) - model.eta(_det_mod(a, p)) * theta_sum(model, phi))
        <= tolerance * model.size
    )

    return {name: bool(value) for name, value in report.items()}
