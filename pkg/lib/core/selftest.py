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

"""Built-in consistency suites behind `quadrilift selftest`.

Suites call through module attributes (``localfields.hilbert``) so a patched
implementation is what gets tested.
"""

from itertools import product

from lib.core import localfields
from lib.core.admissibility import assemble_quadruple
from lib.core.decorators import timed
from lib.core.localfactors import (
    RationalFunctionInT,
    UnramifiedDatum,
    t,
    unramified_pairing,
    verdict,
)
from lib.core.logger import logger
from lib.core.orthogroup import cartan_dieudonne
from lib.core.quadforms import QuadraticSpace
from lib.core.settings import VERDICT_ISOMORPHIC
from lib.core.weil_finite import FiniteWeilModel, relation_suite
from lib.utils.random import generator, rand_orthogonal, rand_rational, rand_space

GRID = (1, -1, 2, -2, 3, -3, 5, -5, 6, -6, 7, -7, 10, -10, 15, -15, 30, -30)


def _places(fast):
    primes = (2, 3, 5) if fast else (2, 3, 5, 7)
    return [localfields.REAL] + [localfields.Place.finite(p) for p in primes]


@timed("Self-test suite")
def hilbert_suite(fast=False, **kwargs):
    return all(
        localfields.hilbert(a, b, place) == localfields.hilbert_oracle(a, b, place)
        for place in _places(fast)
        for a, b in product(GRID, repeat=2)
    )


@timed("Self-test suite")
def product_formula_suite(seed=0, samples=200, **kwargs):
    rng = generator(seed)

    for _ in range(samples):
        a, b = rand_rational(rng), rand_rational(rng)
        signs = [localfields.hilbert(a, b, place) for place in localfields.hilbert_places(a, b)]

        if signs.count(-1) % 2:
            return False

    return True


@timed("Self-test suite")
def cartan_dieudonne_suite(seed=0, samples=30, **kwargs):
    rng = generator(seed)

    for _ in range(samples):
        space = rand_space(rng, rng.randint(1, 4))
        element = rand_orthogonal(rng, space)
        word = cartan_dieudonne(element)

        if word.product() != element or len(word) > space.dim or (-1) ** len(word) != element.det:
            return False

    return True


@timed("Self-test suite")
def weil_suite(fast=False, **kwargs):
    models = [FiniteWeilModel(3, (1,), 1), FiniteWeilModel(5, (1, 1, 1), 1)]

    if not fast:
        models.append(FiniteWeilModel(7, (1, 2, 3), 1))

    return all(relation_suite(model, samples=4) for model in models)


@timed("Self-test suite")
def unramified_suite(**kwargs):
    expected = RationalFunctionInT(1, 1 - t)

    return all(
        unramified_pairing(UnramifiedDatum(p)) == expected for p in (3, 5, 7)
    )


@timed("Self-test suite")
def verdict_suite(**kwargs):
    alpha = assemble_quadruple(QuadraticSpace([1, 1, 1]), QuadraticSpace([1]))
    return verdict(alpha).verdict == VERDICT_ISOMORPHIC


SUITES = {
    "hilbert-oracle": hilbert_suite,
    "product-formula": product_formula_suite,
    "cartan-dieudonne": cartan_dieudonne_suite,
    "weil-relations": weil_suite,
    "unramified-factor": unramified_suite,
    "verdict": verdict_suite,
}


def run_selftest(fast=False, seed=0):
    results = {}

    for name, suite in SUITES.items():
        results[name] = bool(suite(fast=fast, seed=seed))
        logger.info(f"Self-test suite {name}: {'passed' if results[name] else 'failed'}")

    return results
