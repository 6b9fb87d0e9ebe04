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

from sympy import ImmutableMatrix

from lib.core.exceptions import (
    DimensionMismatch,
    IsotropicVector,
    NotOrthogonal,
    UnsupportedError,
)
from lib.core.localfields import REAL, Place, SquareClass, hilbert
from lib.core.orthogroup import (
    OrthogonalElement,
    QuadCharacter,
    ReflectionWord,
    cartan_dieudonne,
    chi_v,
    orthogonal_complement,
    reflection,
    spinor_norm,
    xi_eval,
    xi_on_reflection,
    xi_trivial_on_stabilizer,
)
from lib.core.quadforms import QuadraticSpace
from lib.utils.random import (
    generator,
    rand_orthogonal,
    rand_place,
    rand_rational,
    rand_space,
    rand_vector,
)

# x -> x + b(x, e) u - b(x, u) e with e, u spanning an isotropic plane of <1, -1, 1, -1>
EICHLER = ImmutableMatrix([
    [1, 0, -1, 1],
    [0, 1, -1, 1],
    [1, -1, 1, 0],
    [1, -1, 0, 1],
])


class TestOrthogonalGroup(TestCase):
    def test_reflection(self):
        q = QuadraticSpace([1, 2, -3])
        tau = reflection(q, (1, 1, 0))
        self.assertEqual(tau.apply((1, 1, 0)), (-1, -1, 0))
        self.assertEqual(tau.apply((2, -1, 0)), (2, -1, 0))
        self.assertEqual(tau.det, -1)
        with self.assertRaises(IsotropicVector):
            reflection(q, (1, 1, 1))

    def test_not_orthogonal(self):
        with self.assertRaises(NotOrthogonal):
            OrthogonalElement(QuadraticSpace([1, 2]), ImmutableMatrix([[0, 1], [1, 0]]))
        with self.assertRaises(DimensionMismatch):
            OrthogonalElement(QuadraticSpace([1, 2]), ImmutableMatrix([[1]]))

    def test_cartan_dieudonne(self):
        rng = generator(5)

        for index in range(500):
            q = rand_space(rng, index % 4 + 1, bound=6)
            h = rand_orthogonal(rng, q)
            word = cartan_dieudonne(h)

            self.assertEqual(word.product().matrix, h.matrix, f"Word does not multiply back to h on {q}")
            self.assertLessEqual(len(word), q.dim)
            self.assertEqual((-1) ** len(word), h.det, "Length parity differs from the determinant")

    def test_cartan_dieudonne_isotropic_image(self):
        q = QuadraticSpace([1, -1, 1, -1])
        h = OrthogonalElement(q, EICHLER)
        word = cartan_dieudonne(h)

        self.assertEqual(h.det, 1)
        self.assertEqual(word.product().matrix, EICHLER)
        self.assertIn(len(word), (2, 4))

    def test_identity(self):
        q = QuadraticSpace([1, 1, 1])
        self.assertEqual(len(cartan_dieudonne(OrthogonalElement.identity(q))), 0)
        self.assertEqual(spinor_norm(OrthogonalElement.identity(q)), SquareClass(1))
        self.assertEqual(len(cartan_dieudonne(OrthogonalElement.scalar(q, -1))), 3)

    def test_spinor_norm(self):
        q = QuadraticSpace([1, 2, 5])
        self.assertEqual(spinor_norm(reflection(q, (0, 1, 0))), SquareClass(2))
        self.assertEqual(spinor_norm(reflection(q, (1, 0, 1))), SquareClass(6))
        self.assertEqual(spinor_norm(OrthogonalElement.scalar(q, -1)), SquareClass(10))

    def test_spinor_norm_multiplicative(self):
        rng = generator(9)

        for index in range(500):
            q = rand_space(rng, index % 3 + 2, bound=6)
            g, h = rand_orthogonal(rng, q), rand_orthogonal(rng, q)
            self.assertEqual(spinor_norm(g * h), spinor_norm(g) * spinor_norm(h), f"SN not multiplicative on {q}")

    def test_spinor_norm_well_defined(self):
        rng = generator(21)

        for index in range(200):
            q = rand_space(rng, index % 3 + 2, bound=6)
            length, vectors = rng.randint(1, 4), []

            while len(vectors) < length:
                vector = rand_vector(rng, q.dim)

                if q.value(vector) != 0:
                    vectors.append(tuple(vector))

            word = ReflectionWord(q, tuple(vectors))
            h = word.product()
            self.assertEqual(spinor_norm(h), SquareClass.of(word.spinor_value()), f"SN of {vectors} in {q}")

            g = rand_orthogonal(rng, q)
            conjugate = OrthogonalElement(q, g.matrix * h.matrix * g.matrix.inv())
            self.assertEqual(spinor_norm(conjugate), spinor_norm(h), f"SN moved under conjugation in {q}")

    def test_chi_v(self):
        q = QuadraticSpace([1, 1, 1])
        self.assertEqual(chi_v(q, -1, REAL), hilbert(-1, -1, REAL))
        self.assertEqual(chi_v(QuadraticSpace([3]), 2, Place.finite(3)), -1)

    def test_character(self):
        with self.assertRaises(UnsupportedError):
            QuadCharacter(SquareClass(1), 1, 2)

        chi = QuadCharacter(SquareClass(-1), 1, 3, {REAL: -1})
        self.assertEqual(chi.eps_at(REAL), -1)
        self.assertEqual(chi.eps_at(Place.finite(3)), 1)
        self.assertFalse(chi.is_trivial())
        self.assertTrue(QuadCharacter(SquareClass(1), 1, 1).is_trivial([REAL]))

    def test_xi_eval(self):
        q = QuadraticSpace([1, 1, 1])
        chi = QuadCharacter(SquareClass(-1), -1, 3)

        for place in (REAL, Place.finite(2), Place.finite(3)):
            self.assertEqual(xi_eval(chi, OrthogonalElement.scalar(q, -1), place), -1)
            self.assertEqual(xi_eval(chi, OrthogonalElement.identity(q), place), 1)

    def test_xi_is_quadratic_character(self):
        rng = generator(23)

        for index in range(300):
            dim = 1 if index % 2 else 3
            q = rand_space(rng, dim, bound=6)
            chi = QuadCharacter(SquareClass.of(rand_rational(rng)), rng.choice([1, -1]), dim)
            place = rand_place(rng)
            g, h = rand_orthogonal(rng, q), rand_orthogonal(rng, q)

            self.assertIn(xi_eval(chi, g, place), (1, -1))
            self.assertEqual(
                xi_eval(chi, g * h, place),
                xi_eval(chi, g, place) * xi_eval(chi, h, place),
                f"xi not multiplicative on {q} at {place}",
            )

    def test_xi_on_reflections(self):
        rng = generator(13)
        q = QuadraticSpace([1, 2, -5])
        chi = QuadCharacter(SquareClass(3), -1, 3)

        for _ in range(40):
            u = rand_vector(rng, 3)

            if q.value(u) == 0:
                continue

            for place in (REAL, Place.finite(2), Place.finite(3), Place.finite(5)):
                self.assertEqual(
                    xi_eval(chi, reflection(q, u), place),
                    xi_on_reflection(chi, q, q.value(u), place),
                    f"xi disagrees on the reflection in {u} at {place}",
                )

    def test_xi_dimensions(self):
        chi = QuadCharacter(SquareClass(1), 1, 3)

        with self.assertRaises(UnsupportedError):
            xi_eval(chi, reflection(QuadraticSpace([1, 1]), (1, 0)), REAL)
        with self.assertRaises(DimensionMismatch):
            xi_eval(chi, reflection(QuadraticSpace([1]), (1,)), REAL)

    def test_orthogonal_complement(self):
        q = QuadraticSpace([1, 2, 3])
        basis = orthogonal_complement(q, [(1, 0, 0)])
        self.assertEqual(len(basis), 2)

        for w in basis:
            self.assertEqual(q.bilinear(w, (1, 0, 0)), 0)

    def test_stabilizer(self):
        q = QuadraticSpace([1, 1, 1])
        self.assertTrue(xi_trivial_on_stabilizer(q, QuadCharacter(SquareClass(-1), 1, 3), [(1, 0, 0)], REAL))
        self.assertFalse(xi_trivial_on_stabilizer(q, QuadCharacter(SquareClass(-1), -1, 3), [(1, 0, 0)], REAL))
        self.assertTrue(
            xi_trivial_on_stabilizer(
                q, QuadCharacter(SquareClass(-1), -1, 3), [(1, 0, 0), (0, 1, 0), (0, 0, 1)], REAL
            )
        )

    def test_stabilizer_at_odd_prime(self):
        q = QuadraticSpace([1, 1, 1])
        place = Place.finite(3)
        basis = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]

        # <1, 1> represents exactly the unit classes at 3
        self.assertTrue(xi_trivial_on_stabilizer(q, QuadCharacter(SquareClass(-1), 1, 3), [(1, 0, 0)], place))
        self.assertFalse(xi_trivial_on_stabilizer(q, QuadCharacter(SquareClass(3), 1, 3), [(1, 0, 0)], place))
        self.assertTrue(xi_trivial_on_stabilizer(q, QuadCharacter(SquareClass(3), 1, 3), basis, place))
