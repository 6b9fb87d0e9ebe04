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

from sympy import Rational

from lib.core.exceptions import DomainError, UndefinedValuation
from lib.core.localfields import (
    REAL,
    Place,
    SquareClass,
    hilbert,
    hilbert_oracle,
    hilbert_product,
    is_local_square,
    local_square_class,
    local_square_classes,
    square_free_part,
    valuation,
)
from lib.utils.random import generator, rand_place, rand_rational

VALUES = (1, -1, 2, -2, 3, -3, 5, -5, 6, -6, 7, -7, 10, -10, 15, -15, 30, -30)
PLACES = (REAL, Place.finite(2), Place.finite(3), Place.finite(5), Place.finite(7))


class TestLocalFields(TestCase):
    def test_place(self):
        self.assertEqual(str(REAL), "real")
        self.assertEqual(str(Place.finite(5)), "p:5")
        self.assertTrue(REAL.is_real)
        self.assertLess(REAL.sort_key(), Place.finite(2).sort_key())
        with self.assertRaises(DomainError):
            Place.finite(9)

    def test_valuation(self):
        self.assertEqual(valuation(12, 2), 2)
        self.assertEqual(valuation(Rational(3, 8), 2), -3)
        self.assertEqual(valuation(5, 3), 0)
        with self.assertRaises(UndefinedValuation):
            valuation(0, 3)

    def test_square_free_part(self):
        self.assertEqual(square_free_part(12), 3)
        self.assertEqual(square_free_part(Rational(-3, 4)), -3)
        self.assertEqual(square_free_part(Rational(2, 3)), 6)
        self.assertEqual(SquareClass.of(18) * SquareClass.of(2), SquareClass(1))
        with self.assertRaises(DomainError):
            square_free_part(0)

    def test_local_square_classes(self):
        self.assertEqual(len(local_square_classes(REAL)), 2)
        self.assertEqual(len(local_square_classes(Place.finite(2))), 8)
        self.assertEqual(len(local_square_classes(Place.finite(5))), 4)

        for place in PLACES:
            for c in local_square_classes(place):
                self.assertEqual(local_square_class(c.representative, place), c)

        self.assertTrue(is_local_square(-1, Place.finite(5)))
        self.assertFalse(is_local_square(-1, Place.finite(3)))
        self.assertTrue(is_local_square(17, Place.finite(2)))
        self.assertFalse(is_local_square(3, Place.finite(2)))
        self.assertTrue(is_local_square(Rational(9, 4), REAL))

    def test_hilbert_examples(self):
        self.assertEqual(hilbert(-1, -1, REAL), -1)
        self.assertEqual(hilbert(-1, -1, Place.finite(2)), -1)
        self.assertEqual(hilbert(-1, -1, Place.finite(3)), 1)
        self.assertEqual(hilbert(2, 3, Place.finite(3)), -1)
        self.assertEqual(hilbert(5, 5, Place.finite(5)), 1)
        self.assertEqual(hilbert(Rational(1, 2), 3, Place.finite(3)), hilbert(2, 3, Place.finite(3)))

    def test_hilbert_square_class_invariance(self):
        for place in PLACES:
            for a in (2, -3, 5):
                for b in (-1, 6, 7):
                    self.assertEqual(
                        hilbert(4 * a, 9 * b, place), hilbert(a, b, place),
                        f"({a}, {b}) changed under squares at {place}",
                    )

    def test_hilbert_laws(self):
        rng = generator(11)

        for _ in range(300):
            a, c, b = rand_rational(rng), rand_rational(rng), rand_rational(rng)
            place = rand_place(rng)
            self.assertEqual(hilbert(a * c, b, place), hilbert(a, b, place) * hilbert(c, b, place))
            self.assertEqual(hilbert(a, b * c, place), hilbert(a, b, place) * hilbert(a, c, place))
            self.assertEqual(hilbert(a, b, place), hilbert(b, a, place))
            self.assertEqual(hilbert(a, -a, place), 1, f"({a}, {-a}) at {place}")

            if a != 1:
                self.assertEqual(hilbert(a, 1 - a, place), 1, f"({a}, {1 - a}) at {place}")

    def test_hilbert_units_at_odd_primes(self):
        for p in (3, 5, 7, 11):
            place = Place.finite(p)
            units = [u for u in range(-20, 21) if u % p]

            for u in units:
                for v in units:
                    self.assertEqual(hilbert(u, v, place), 1, f"({u}, {v}) at {place}")

    def test_hilbert_matches_oracle(self):
        for place in PLACES:
            for a in VALUES:
                for b in VALUES:
                    self.assertEqual(
                        hilbert(a, b, place), hilbert_oracle(a, b, place),
                        f"Closed form and oracle disagree on ({a}, {b}) at {place}",
                    )

    def test_oracle_depth(self):
        with self.assertRaises(DomainError):
            hilbert_oracle(3, 5, Place.finite(3), depth=2)

    def test_product_formula(self):
        rng = generator(7)

        for _ in range(1000):
            a, b = rand_rational(rng), rand_rational(rng)
            self.assertEqual(len(hilbert_product(a, b)) % 2, 0, f"Product formula fails for ({a}, {b})")

    def test_zero_argument(self):
        with self.assertRaises(DomainError):
            hilbert(0, 1, REAL)
