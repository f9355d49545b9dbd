#
# test_field.py
#
# This file is part of sextica.
#
# Copyright (C) 2026 The sextica developers
#
# sextica is free software: you can redistribute it and/or modify it
# under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 2 of the License, or
# (at your option) any later version.
#
# sextica is distributed in the hope that it will be useful, but
# WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU
# General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with sextica.  If not, see <http://www.gnu.org/licenses/>.
#

import os
import unittest
from fractions import Fraction

import numpy as np
from sympy import I, sqrt

from unittest import mock

from .context import sextica
from sextica.errors import (DivisionByZero, IncompatibleTowers, MalformedInput, RadicandIsSquare,
                            TowerDepthExceeded)
from sextica.field import (RATIONALS, common_tower, format_element, make_tower, precision_cap, squarefree_core,
                           tower_extend)


def random_element(tower, rng, bound=20):
    coords = [Fraction(int(rng.randint(-bound, bound + 1)), int(rng.randint(1, bound + 1)))
              for _ in range(tower.degree)]
    return tower.from_coords(coords)


class TestTowers(unittest.TestCase):

    def test_towers_are_shared(self):
        self.assertIs(make_tower((2,)), make_tower((2,)))
        self.assertEqual(tower_extend(RATIONALS, 2), make_tower((2,)))

    def test_square_radicand_is_rejected(self):
        self.assertRaises(RadicandIsSquare, tower_extend, RATIONALS, 4)
        self.assertRaises(RadicandIsSquare, tower_extend, RATIONALS, Fraction(9, 16))
        self.assertRaises(RadicandIsSquare, tower_extend, make_tower((2,)), 8)

    def test_depth_is_bounded(self):
        tower = tower_extend(tower_extend(RATIONALS, 2), 3)
        self.assertEqual(tower.depth, 2)
        self.assertEqual(tower.degree, 4)
        self.assertRaises(TowerDepthExceeded, tower_extend, tower, 5)

    def test_common_tower(self):
        small = make_tower((-3,))
        big = tower_extend(small, 130)
        self.assertEqual(common_tower(small, big), big)
        self.assertEqual(common_tower(RATIONALS, small), small)
        self.assertRaises(IncompatibleTowers, common_tower, small, make_tower((2,)))

    def test_squarefree_core(self):
        self.assertEqual(squarefree_core(RATIONALS.convert(-12)), RATIONALS.convert(-3))
        self.assertEqual(squarefree_core(RATIONALS.convert(Fraction(8, 5))), RATIONALS.convert(10))
        g = make_tower((2,)).generator()
        self.assertEqual(squarefree_core(g), g)

    def test_from_sympy(self):
        tower = make_tower((-3,))
        self.assertEqual(tower.from_sympy(I * sqrt(3)), tower.generator())
        self.assertEqual(tower.from_sympy(sqrt(-3) / 2 + 1).coords, (Fraction(1), Fraction(1, 2)))


class TestArithmetic(unittest.TestCase):

    def test_generator_squares_to_radicand(self):
        tower = make_tower((-3,))
        g = tower.generator()
        self.assertEqual(g * g, tower.convert(-3))
        self.assertTrue((g * g).is_rational())
        self.assertFalse(g.is_rational())

    def test_field_axioms(self):
        rng = np.random.RandomState(1234)
        tower = tower_extend(make_tower((2,)), 3)
        for _ in range(1000):
            a = random_element(tower, rng)
            b = random_element(tower, rng)
            c = random_element(tower, rng)
            self.assertEqual((a + b) * c, a * c + b * c)
            self.assertEqual(a * (b * c), (a * b) * c)
            self.assertEqual(a - a, tower.zero)
            if not a.is_zero():
                self.assertEqual(a * a.inverse(), tower.one)

    def test_division_by_zero(self):
        tower = make_tower((5,))
        self.assertRaises(DivisionByZero, lambda: tower.one / tower.zero)

    def test_mixed_towers(self):
        small = make_tower((2,))
        big = tower_extend(small, 3)
        a = small.generator() + 1
        b = big.generator()
        self.assertEqual((a * b).tower, big)
        self.assertEqual(a + Fraction(1, 2), small.from_coords((Fraction(3, 2), 1)))

    def test_sqrt(self):
        tower = make_tower((2,))
        a = (tower.generator() + 1) ** 2
        root = a.sqrt()
        self.assertIsNotNone(root)
        self.assertEqual(root * root, a)
        self.assertIsNone(tower.generator().sqrt())
        self.assertEqual(tower.convert(2).sqrt() ** 2, tower.convert(2))

    def test_sqrt_in_depth_two(self):
        tower = tower_extend(make_tower((2,)), 3)
        a = tower.from_coords((5, 0, 0, 2))
        root = a.sqrt()
        self.assertIsNotNone(root)
        self.assertEqual(root * root, a)


class TestFormatting(unittest.TestCase):

    def test_format_element(self):
        tower = make_tower((-3,))
        self.assertEqual(format_element(tower.from_coords((1, Fraction(-1, 2)))), "1 - 1/2*sqrt(-3)")
        self.assertEqual(format_element(tower.from_coords((0, 1))), "sqrt(-3)")
        self.assertEqual(format_element(tower.zero), "0")
        self.assertEqual(format_element(RATIONALS.convert(Fraction(-17, 9))), "-17/9")


class TestIntervals(unittest.TestCase):

    def test_box_contains_the_number(self):
        g = make_tower((2,)).generator()
        box = g.to_interval(60)
        self.assertTrue(box.is_real())
        self.assertTrue(box.re.lo * box.re.lo <= 2 <= box.re.hi * box.re.hi)
        self.assertTrue(box.width() <= Fraction(2) ** -57)

    def test_imaginary_box(self):
        g = make_tower((-3,)).generator()
        box = g.to_interval(53)
        self.assertTrue(box.re.contains_zero())
        self.assertTrue(box.im.lo * box.im.lo <= 3 <= box.im.hi * box.im.hi)
        self.assertIn("*I", str(box))
        self.assertIn(" ± ", str(box))


class TestPrecisionCap(unittest.TestCase):

    def test_default(self):
        with mock.patch.dict(os.environ, {"SEXTICA_PRECISION_CAP": ""}):
            self.assertEqual(precision_cap(), 4096)

    def test_environment(self):
        with mock.patch.dict(os.environ, {"SEXTICA_PRECISION_CAP": "256"}):
            self.assertEqual(precision_cap(), 256)
        with mock.patch.dict(os.environ, {"SEXTICA_PRECISION_CAP": "many"}):
            self.assertRaises(MalformedInput, precision_cap)


if __name__ == '__main__':
    unittest.main()
