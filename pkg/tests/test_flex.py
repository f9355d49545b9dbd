#
# test_flex.py
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

import numpy as np

from .context import cases, sextica
from sextica.errors import PointNotOnCurve, SingularPoint, UnknownDefect
from sextica.field import RATIONALS
from sextica.flex import (FLEX_FAMILIES, annotate_defects, expected_flex_count, flex_points, flex_tangent_sextic,
                          hessian, is_flex, table_defect, tabulated_flex_count, third_intersection)
from sextica.local import analyze_singularities
from sextica.orbits import AlgebraicPoint
from sextica.parser import make_definition, parse_poly, read_curve_file
from sextica.poly import random_affine_change
from sextica.torus import colinear_triples

CORPUS = os.path.join(os.path.dirname(os.path.abspath(__file__)), os.pardir, "corpus")


def point(a, b):
    return AlgebraicPoint(RATIONALS.convert(a), RATIONALS.convert(b))


class TestFlexCounts(unittest.TestCase):

    def test_table_defects(self):
        for sing_type, defect in (("A1", 6), ("A2", 8), ("A5", 18), ("A8", 27), ("A11", 36), ("E6", 22)):
            self.assertEqual(table_defect(sing_type), defect)
        self.assertRaises(UnknownDefect, table_defect, "A3")
        self.assertRaises(UnknownDefect, table_defect, "D4")

    def test_families_follow_the_formula(self):
        for degree, config, count in FLEX_FAMILIES:
            self.assertEqual(expected_flex_count(degree, config), count, config)

    def test_tabulated(self):
        self.assertEqual(tabulated_flex_count(5, "[A1,4A2]"), 7)
        self.assertEqual(tabulated_flex_count(4, "[2A2,A1]"), 2)
        self.assertIsNone(tabulated_flex_count(6, "[]"))


class TestFlexPoints(unittest.TestCase):

    def test_cuspidal_cubic(self):
        [record] = flex_points(parse_poly("y^2 - x^3"))
        self.assertEqual(record.location.chart, "y=1")
        self.assertEqual(str(record.tangent_line), "z")
        self.assertEqual(record.flex_order, 1)

    def test_smooth_cubic(self):
        records = flex_points(parse_poly("x^3 + y^3 - 1"))
        self.assertEqual(len(records), 9)
        self.assertTrue(all(r.is_exact for r in records))
        self.assertEqual(len(colinear_triples([r.location for r in records])), 12)

    def test_nodal_cubic(self):
        records = flex_points(parse_poly("y^2 - x^2 - x^3"))
        self.assertEqual(len(records), 3)
        self.assertEqual(len(colinear_triples([r.location for r in records])), 1)

    def test_is_flex(self):
        cubic = parse_poly("x^3 + y^3 - 1")
        record = is_flex(cubic, point(0, 1))
        self.assertEqual(record.tangent_line, parse_poly("y - 1"))
        self.assertIsNone(is_flex(parse_poly("y^2 - x^3"), point(1, 1)))
        self.assertRaises(SingularPoint, is_flex, parse_poly("y^2 - x^3"), point(0, 0))
        self.assertRaises(PointNotOnCurve, is_flex, cubic, point(1, 1))

    def test_hessian(self):
        self.assertEqual(hessian(parse_poly("x^3 + y^3 - 1")), parse_poly("-216*x*y*z"))


class TestFlexTangents(unittest.TestCase):

    def test_third_intersection(self):
        cubic = parse_poly("y - x^3")
        self.assertEqual(third_intersection(cubic, point(1, 1), point(-1, -1)), point(0, 0))
        self.assertEqual(third_intersection(cubic, point(1, 1), point(1, 1)), point(-2, -8))

    def test_flex_tangent_sextic(self):
        definition = make_definition("cubic", [("B3", "y - x^3")])
        [record] = flex_points(definition.component("B3"))
        bigger = flex_tangent_sextic(definition, [record])
        self.assertEqual(bigger.component_type, "B3+B1")
        self.assertEqual(bigger.component("B1"), parse_poly("y"))


class TestInvariance(unittest.TestCase):

    def setUp(self):
        self.rng = np.random.RandomState(13)

    def moved(self, curve):
        matrix, shift = random_affine_change(self.rng)
        return curve.linear_change(matrix, shift)

    def test_flex_count(self):
        for text, count in (("y^2 - x^3", 1), ("x^3 + y^3 - 1", 9)):
            curve = parse_poly(text)
            for _ in range(cases(3)):
                self.assertEqual(len(flex_points(self.moved(curve))), count, text)

    def check_defects(self, curve, expected, n):
        for _ in range(n):
            moved = self.moved(curve)
            records = annotate_defects(analyze_singularities(moved), moved)
            self.assertEqual([r.sing_type for r in records], [expected])
            for record in records:
                self.assertEqual(record.defect, record.table_defect)

    def test_defects_match_the_table(self):
        for text, sing_type in (("y^2 - x^3 - x^2", "A1"), ("y^2 - x^3", "A2"), ("y^3 - x^4", "E6")):
            self.check_defects(parse_poly(text), sing_type, cases(4))

    def test_defect_of_an_a5(self):
        quartic = read_curve_file(os.path.join(CORPUS, "quartic_A5.curve")).component("B4")
        self.check_defects(quartic, "A5", cases(1))


if __name__ == '__main__':
    unittest.main()
