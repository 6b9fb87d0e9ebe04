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


from unittest import TestCase

import numpy as np

from lib.core.exceptions import DegenerateGram, DomainError, ModelTooLarge
from lib.core.weil_finite import (
    FiniteWeilModel,
    direct_level_sum,
    fourier_coefficient,
    is_unitary,
    level_set,
    op_levi,
    op_unipotent,
    op_weyl,
    orbit_character_average,
    orbit_transitivity_check,
    orthogonal_group,
    proportional,
    relation_checks,
    stabilizer_characters,
    theta_sum,
    weil_check,
)
from lib.utils.random import generator

DIAGONALS = {
    3: ((1,), (2,), (1, 1, 1), (1, 2, 1)),
    5: ((1,), (2,), (1, 1, 1), (1, 2, 3)),
    7: ((1,), (2,), (1, 1, 1), (1, 2, 3)),
}


class TestFiniteWeil(TestCase):
    def test_model(self):
        model = FiniteWeilModel(5, (1, 1, 1))
        self.assertEqual(model.size, 125)
        self.assertEqual(model.index_of(model.points[17]).tolist(), [17])
        self.assertEqual(FiniteWeilModel(3, (4,)).diag, (1,))

        with self.assertRaises(DomainError):
            FiniteWeilModel(2, (1,))
        with self.assertRaises(DomainError):
            FiniteWeilModel(5, (5,))
        with self.assertRaises(DomainError):
            FiniteWeilModel(11, (1,))

    def test_levi(self):
        model = FiniteWeilModel(5, (1, 2, 3))
        np.testing.assert_allclose(op_levi(model, [[1]]), np.eye(model.size))
        np.testing.assert_allclose(op_levi(model, [[2]]) @ op_levi(model, [[3]]), op_levi(model, [[1]]))
        # eta(-1) = (-1|5)^3 = 1 and eta(2) = (2|5)^3 = -1
        self.assertEqual(model.eta(-1), 1)
        self.assertEqual(model.eta(2), -1)

        with self.assertRaises(DomainError):
            op_levi(model, [[0]])

    def test_unipotent(self):
        model = FiniteWeilModel(3, (1,))
        phases = np.diag(op_unipotent(model, [[1]]))
        psi = np.exp(2j * np.pi / 3)
        np.testing.assert_allclose(phases, [1, psi, psi])
        np.testing.assert_allclose(
            op_unipotent(model, [[1]]) @ op_unipotent(model, [[2]]), np.eye(3), atol=1e-12
        )

    def test_weyl(self):
        model = FiniteWeilModel(5, (1, 1, 1))
        w = op_weyl(model)
        self.assertTrue(is_unitary(w))

        constant = np.ones(model.size)
        delta = np.zeros(model.size)
        delta[0] = 1
        self.assertTrue(proportional(w @ constant / np.sqrt(model.size), delta))

    def test_relations(self):
        cases = [(p, diag, 1) for p, diagonals in DIAGONALS.items() for diag in diagonals]
        cases += [(3, (1,), 2), (5, (2,), 2), (7, (1,), 2), (3, (1, 1, 2), 2)]

        for p, diag, n in cases:
            checks = relation_checks(FiniteWeilModel(p, diag, n), seed=1, samples=4)
            self.assertTrue(all(checks.values()), f"Relations fail for p={p} diag={diag} n={n}: {checks}")

    def test_projective_homomorphism(self):
        rng = generator(5)

        for p, diag in ((3, (1,)), (3, (1, 1, 1)), (5, (1,)), (5, (2, 1, 1))):
            model = FiniteWeilModel(p, diag)
            weyl = op_weyl(model)
            classes = {}

            for _ in range(400):
                image = np.eye(2, dtype=np.int64)
                operator = np.eye(model.size, dtype=complex)

                for _ in range(rng.randint(1, 6)):
                    kind = rng.choice(("levi", "unipotent", "weyl"))

                    if kind == "levi":
                        a = rng.randint(1, p - 1)
                        step, matrix = op_levi(model, [[a]]), [[pow(a, -1, p), 0], [0, a]]
                    elif kind == "unipotent":
                        b = rng.randint(0, p - 1)
                        step, matrix = op_unipotent(model, [[b]]), [[1, -b], [0, 1]]
                    else:
                        step, matrix = weyl, [[0, 1], [-1, 0]]

                    # conjugation acts on the right of [y | z], so images compose in reverse
                    image = np.array(matrix, dtype=np.int64) @ image % p
                    operator = operator @ step

                classes.setdefault(image.tobytes(), []).append(operator)

            self.assertLess(len(classes), 400)

            for operators in classes.values():
                for operator in operators[1:]:
                    self.assertTrue(
                        proportional(operator, operators[0]),
                        f"Words with the same image act differently for p={p} diag={diag}",
                    )

    def test_too_large(self):
        with self.assertRaises(ModelTooLarge):
            op_weyl(FiniteWeilModel(7, (1, 1, 1), 2))

    def test_theta(self):
        model = FiniteWeilModel(5, (1, 1, 1))
        delta = np.zeros(model.size)
        delta[3] = 1
        self.assertEqual(theta_sum(model, delta), 1)
        self.assertEqual(theta_sum(model, np.ones(model.size)), 125)

    def test_fourier_matches_level_sets(self):
        model = FiniteWeilModel(5, (1, 1, 1))
        rng = np.random.default_rng(2)

        for _ in range(20):
            phi = rng.standard_normal(model.size)

            for beta in ([[1]], [[2]], [[0]]):
                self.assertAlmostEqual(
                    fourier_coefficient(model, phi, beta), direct_level_sum(model, phi, beta), places=8
                )

    def test_level_set_count(self):
        model = FiniteWeilModel(5, (1, 1, 1))
        count = sum(
            1 for x in range(5) for y in range(5) for z in range(5) if (x * x + y * y + z * z) % 5 == 1
        )

        self.assertEqual(len(level_set(model, [[1]])), count)
        self.assertAlmostEqual(fourier_coefficient(model, np.ones(model.size), [[1]]), count, places=8)

    def test_unrepresented(self):
        model = FiniteWeilModel(3, (1,))
        self.assertEqual(len(level_set(model, [[2]])), 0)
        self.assertAlmostEqual(abs(fourier_coefficient(model, np.arange(3.0), [[2]])), 0, places=10)

    def test_orbits(self):
        self.assertTrue(orbit_transitivity_check(FiniteWeilModel(5, (1, 1, 1)), [[1]]))
        self.assertTrue(orbit_transitivity_check(FiniteWeilModel(3, (1,)), [[1]]))
        self.assertTrue(orbit_transitivity_check(FiniteWeilModel(3, (1,)), [[2]]))

        for p, diagonals in DIAGONALS.items():
            for diag in diagonals:
                model = FiniteWeilModel(p, diag)

                for beta in range(1, p):
                    self.assertTrue(orbit_transitivity_check(model, [[beta]]), f"p={p} diag={diag} beta={beta}")

        with self.assertRaises(DegenerateGram):
            orbit_transitivity_check(FiniteWeilModel(5, (1, 1, 1)), [[0]])

    def test_group_order(self):
        self.assertEqual(len(orthogonal_group(FiniteWeilModel(5, (1, 1, 1)))), 240)
        self.assertEqual(len(orthogonal_group(FiniteWeilModel(7, (1,)))), 2)

    def test_stabilizer_vanishing(self):
        model = FiniteWeilModel(5, (1, 1, 1))
        point = level_set(model, [[1]])[0]
        characters = stabilizer_characters(model, point)
        self.assertTrue(characters)

        for character in characters:
            phi = orbit_character_average(model, point, character)
            self.assertAlmostEqual(abs(fourier_coefficient(model, phi, [[1]])), 0, places=8)

    def test_weil_check(self):
        report = weil_check(5, (1, 1, 1), seed=3, samples=4)
        self.assertTrue(all(report.values()), report)
