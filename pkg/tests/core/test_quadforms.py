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

from sympy import ImmutableMatrix, Rational

from lib.core.exceptions import DegenerateGram, DimensionMismatch, DomainError
from lib.core.localfields import REAL, Place, hilbert
from lib.core.quadforms import (
    QuadraticSpace,
    as_space,
    bad_places,
    complement_local,
    diagonalize,
    discriminant,
    hasse,
    is_anisotropic_global,
    is_isometric_local,
    is_isotropic_local,
    local_forms,
    represents_value_local,
    represents_value_oracle,
)
from lib.utils.random import generator, rand_invertible, rand_place, rand_space

PLACES = (REAL, Place.finite(2), Place.finite(3), Place.finite(5), Place.finite(7))


class TestQuadForms(TestCase):
    def test_space(self):
        q = QuadraticSpace([1, Rational(1, 2), -3])
        self.assertEqual(q.dim, 3)
        self.assertEqual(q.determinant, Rational(-3, 2))
        self.assertEqual(q.signature, (2, 1))
        self.assertEqual(str(QuadraticSpace([1, 1, 1])), "<1, 1, 1>")
        self.assertEqual(q.value((1, 2, 1)), 0)
        with self.assertRaises(DomainError):
            QuadraticSpace([1, 0])
        with self.assertRaises(DomainError):
            QuadraticSpace([])

    def test_diagonalize(self):
        rng = generator(3)

        for _ in range(50):
            a = rand_invertible(rng, 3)
            beta = a * ImmutableMatrix.diag(1, -2, 3) * a.T
            result = diagonalize(beta)
            self.assertEqual(
                result.basis * beta * result.basis.T,
                ImmutableMatrix.diag(*result.entries),
                "Diagonalization is not a congruence",
            )
            self.assertEqual(result.rank, 3)

    def test_diagonalize_hyperbolic(self):
        result = diagonalize([[0, 1], [1, 0]])
        self.assertEqual(result.entries, (2, Rational(-1, 2)))
        self.assertEqual(result.basis * ImmutableMatrix([[0, 1], [1, 0]]) * result.basis.T, ImmutableMatrix.diag(2, Rational(-1, 2)))

    def test_degenerate(self):
        self.assertEqual(diagonalize([[1, 1], [1, 1]]).rank, 1)
        with self.assertRaises(DegenerateGram):
            as_space([[1, 1], [1, 1]])
        with self.assertRaises(DomainError):
            diagonalize([[1, 2], [3, 1]])

    def test_invariants_under_congruence(self):
        rng = generator(11)

        for dim in (2, 3, 4, 5):
            for _ in range(125):
                q = rand_space(rng, dim)
                a = rand_invertible(rng, dim)
                congruent = as_space(a * q.gram * a.T)

                self.assertEqual(discriminant(congruent), discriminant(q), f"Discriminant moved for {q}")

                for place in bad_places(q, congruent):
                    self.assertEqual(
                        hasse(congruent, place), hasse(q, place),
                        f"Hasse invariant of {q} moved at {place}",
                    )

    def test_hasse_concatenation(self):
        rng = generator(17)

        for _ in range(200):
            q = rand_space(rng, rng.randint(1, 3))
            r = rand_space(rng, rng.randint(1, 3))
            place = rand_place(rng)

            self.assertEqual(
                hasse(q + r, place),
                hasse(q, place) * hasse(r, place) * hilbert(q.determinant, r.determinant, place),
                f"{q} + {r} at {place}",
            )

    def test_isometric(self):
        for place in PLACES:
            self.assertTrue(is_isometric_local(QuadraticSpace([1, 1]), QuadraticSpace([2, 2]), place))

        self.assertFalse(is_isometric_local(QuadraticSpace([1, 1]), QuadraticSpace([1, -1]), REAL))
        self.assertFalse(is_isometric_local(QuadraticSpace([1, 1]), QuadraticSpace([3, 3]), Place.finite(3)))

    def test_isotropy(self):
        for place in PLACES:
            self.assertTrue(is_isotropic_local(QuadraticSpace([1, -1]), place))
            self.assertFalse(is_isotropic_local(QuadraticSpace([5]), place))

        four_squares = QuadraticSpace([1, 1, 1, 1])
        self.assertFalse(is_isotropic_local(four_squares, Place.finite(2)))
        self.assertFalse(is_isotropic_local(four_squares, REAL))
        self.assertTrue(is_isotropic_local(four_squares, Place.finite(3)))
        self.assertTrue(is_isotropic_local(QuadraticSpace([1, 1, 1]), Place.finite(5)))

    def test_anisotropic_global(self):
        self.assertTrue(is_anisotropic_global(QuadraticSpace([1, 1, 1, 1, 1])))
        self.assertFalse(is_anisotropic_global(QuadraticSpace([1, 1, 1, 1, -1])))
        self.assertTrue(is_anisotropic_global(QuadraticSpace([1, 1, 1])))
        self.assertFalse(is_anisotropic_global(QuadraticSpace([1, 1, -2])))

    def test_represents(self):
        three_squares = QuadraticSpace([1, 1, 1])
        self.assertFalse(represents_value_local(three_squares, 7, Place.finite(2)))
        self.assertTrue(represents_value_local(three_squares, 3, Place.finite(2)))
        self.assertFalse(represents_value_local(three_squares, -1, REAL))

    def test_represents_matches_oracle(self):
        forms = (
            QuadraticSpace([1]),
            QuadraticSpace([-3]),
            QuadraticSpace([1, 1, 1]),
            QuadraticSpace([1, 2, 5]),
            QuadraticSpace([1, 1]),
            QuadraticSpace([2, -5]),
            QuadraticSpace([1, -3, 7]),
            QuadraticSpace([1, 1, 1, 1]),
            QuadraticSpace([1, 2, 3, -5]),
        )

        for q in forms:
            for place in PLACES:
                for beta in (1, -1, 2, 3, -3, 5, 6, 7, 10):
                    self.assertEqual(
                        represents_value_local(q, beta, place),
                        represents_value_oracle(q, beta, place),
                        f"{q} representing {beta} at {place}",
                    )

    def test_local_forms(self):
        self.assertEqual(len(local_forms(1, Place.finite(3))), 4)
        self.assertEqual(len(local_forms(1, Place.finite(2))), 8)
        self.assertEqual(len(local_forms(2, REAL)), 3)

    def test_complement(self):
        q = QuadraticSpace([1, 1, 1])

        for place in PLACES:
            complement = complement_local(q, QuadraticSpace([1]), place)
            self.assertIsNotNone(complement)
            self.assertTrue(is_isometric_local(q, QuadraticSpace([1]) + QuadraticSpace(complement), place))

        self.assertEqual(complement_local(q, [[1, 0, 0], [0, 1, 0], [0, 0, 1]], REAL), ())
        self.assertIsNone(complement_local(q, QuadraticSpace([-1]), REAL))
        self.assertIsNone(complement_local(q, QuadraticSpace([7]), Place.finite(2)))

        with self.assertRaises(DimensionMismatch):
            complement_local(QuadraticSpace([1]), QuadraticSpace([1, 1]), REAL)
