#
# test_orbits.py
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


import unittest
from fractions import Fraction

from .context import sextica
from sextica.errors import EliminationDegenerate
from sextica.field import RATIONALS
from sextica.orbits import (AlgebraicPoint, PointOrbit, classify, common_zeros, contact_orders,
                            intersection_numbers)
from sextica.parser import parse_poly


def point(a, b, chart="affine"):
    return AlgebraicPoint(RATIONALS.convert(a), RATIONALS.convert(b), chart)


def origin_orbit():
    return PointOrbit.from_point(point(0, 0))


class TestPoints(unittest.TestCase):

    def test_from_projective(self):
        self.assertEqual(AlgebraicPoint.from_projective(2, 4, 2), point(1, 2))
        self.assertEqual(AlgebraicPoint.from_projective(1, 2, 0), point(Fraction(1, 2), 0, "y=1"))
        self.assertEqual(AlgebraicPoint.from_projective(3, 0, 0), point(0, 0, "x=1"))
        self.assertRaises(ValueError, AlgebraicPoint.from_projective, 0, 0, 0)

    def test_text(self):
        self.assertEqual(str(point(1, -2)), "(1, -2)")
        self.assertEqual(str(point(0, 0, "y=1")), "(0 : 1 : 0)")
        self.assertTrue(point(0, 0, "x=1").at_infinity)


class TestCommonZeros(unittest.TestCase):

    def test_rational_points(self):
        f = parse_poly("x^2 - y")
        g = parse_poly("y - 1")
        orbits = common_zeros([f, g])
        self.assertEqual(sum(o.degree for o in orbits), 2)
        found = set(p for o in orbits for p in o.points())
        self.assertEqual(found, set([point(1, 1), point(-1, 1)]))

    def test_conjugate_points(self):
        f = parse_poly("x^2 + y^2 - 1")
        g = parse_poly("x - y")
        orbits = common_zeros([f, g])
        self.assertEqual(len(orbits), 1)
        self.assertEqual(orbits[0].coordinate_polynomial(), parse_poly("x^2 - 1/2"))
        for p in orbits[0].points():
            self.assertTrue(p.is_exact)
            self.assertTrue(f.evaluate(p).is_zero())
            self.assertTrue(g.evaluate(p).is_zero())

    def test_common_component(self):
        self.assertRaises(EliminationDegenerate, common_zeros, [parse_poly("x*y"), parse_poly("x*y - x")])

    def test_no_zeros(self):
        self.assertEqual(common_zeros([parse_poly("x - y"), parse_poly("x - y + 1")]), [])


class TestLocalInvariants(unittest.TestCase):

    def test_intersection_numbers(self):
        [(_, n)] = intersection_numbers(origin_orbit(), parse_poly("y - x^2"), parse_poly("y"))
        self.assertEqual(n, 2)
        [(_, n)] = intersection_numbers(origin_orbit(), parse_poly("y - x^2"), parse_poly("x"))
        self.assertEqual(n, 1)
        [(_, n)] = intersection_numbers(origin_orbit(), parse_poly("y - 1"), parse_poly("x"))
        self.assertEqual(n, 0)

    def test_classify(self):
        cases = [("y^2 - x^2", "A1", 1), ("y^2 - x^3", "A2", 2), ("y^2 - x^4", "A3", 3),
                 ("y^2 - x^6", "A5", 5), ("x^3 - x*y^2", "D4", 4), ("y^3 - x^4", "E6", 6)]
        for text, sing_type, milnor in cases:
            [(_, found, mu)] = classify(origin_orbit(), parse_poly(text))
            self.assertEqual((found, mu), (sing_type, milnor), text)

    def test_classify_not_simple(self):
        [(_, found, _)] = classify(origin_orbit(), parse_poly("x^4 - y^4"))
        self.assertEqual(found, "NotSimple")

    def test_contact_orders(self):
        [(_, n)] = contact_orders(origin_orbit(), parse_poly("y - x^3"))
        self.assertEqual(n, 3)
        [(_, n)] = contact_orders(origin_orbit(), parse_poly("y - x^2 - x*y"))
        self.assertEqual(n, 2)
        [(_, n)] = contact_orders(origin_orbit(), parse_poly("x + y"))
        self.assertIsNone(n)


if __name__ == '__main__':
    unittest.main()
