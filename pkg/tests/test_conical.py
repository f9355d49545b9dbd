#
# test_conical.py
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
from sextica.conical import (ConicConstraint, conic_linear_system, conic_rank, conical_flex_eliminant,
                             contact_invariants, is_conical_flex, local_branch, osculating_member, parse_point,
                             system_from_definition)
from sextica.errors import (CurveDegreeTooSmall, CurveSyntaxError, EmptySystem, NotConicalFlex,
                            VerticalTangentUnresolvable)
from sextica.field import RATIONALS
from sextica.local import intersection_multiplicity
from sextica.orbits import AlgebraicPoint
from sextica.parser import parse_curve_file, parse_poly

CUBIC = "y - x^2 - x^3"

CURVE = """\
name = cubic with conics

[component B3]
y - x^2 - x^3

[conics]
curve = B3
constraint = through (1, 0)
constraint = contact 3 with B3 at (0, 0)
"""


def point(a, b):
    return AlgebraicPoint(RATIONALS.convert(a), RATIONALS.convert(b))


def coefficients(branch):
    return [c.to_rational() for c in branch.coefficients]


class TestLinearSystems(unittest.TestCase):

    def test_all_conics(self):
        self.assertEqual(conic_linear_system([]).alpha, 5)

    def test_five_points(self):
        points = [point(1, 0), point(-1, 0), point(0, 1), point(0, -1), point(Fraction(3, 5), Fraction(4, 5))]
        system = conic_linear_system([ConicConstraint.through(p) for p in points])
        self.assertEqual(system.alpha, 0)
        self.assertEqual(system.basis[0], parse_poly("x^2 + y^2 - 1"))
        self.assertRaises(EmptySystem, system.with_constraints, [ConicConstraint.through(point(1, 1))])

    def test_osculating_conic(self):
        cubic = parse_poly(CUBIC)
        system = conic_linear_system([ConicConstraint.contact(point(0, 0), cubic, 5)])
        self.assertEqual(system.alpha, 0)
        self.assertEqual(system.basis[0].monic(), parse_poly("y - x^2 - x*y + y^2").monic())
        found, witness = is_conical_flex(cubic, system, point(0, 0))
        self.assertTrue(found)
        self.assertEqual(witness, system.basis[0].monic())
        self.assertEqual(is_conical_flex(cubic, system, point(1, 2)), (False, None))

    def test_osculating_member(self):
        cubic = parse_poly(CUBIC)
        system = conic_linear_system([ConicConstraint.contact(point(0, 0), cubic, 5)])
        conic = osculating_member(cubic, system, point(0, 0))
        self.assertEqual(conic, system.basis[0].monic())
        self.assertGreaterEqual(intersection_multiplicity(cubic, conic, point(0, 0)), system.alpha + 5)
        self.assertRaises(NotConicalFlex, osculating_member, cubic, system, point(1, 2))

    def test_rank(self):
        self.assertEqual(conic_rank(parse_poly("x^2 + y^2 - 1")), 3)
        self.assertEqual(conic_rank(parse_poly("x*y")), 2)
        self.assertEqual(conic_rank(parse_poly("(x - 1)^2")), 1)

    def test_curve_in_the_system(self):
        self.assertRaises(CurveDegreeTooSmall, conical_flex_eliminant, parse_poly("x^2 + y^2 - 1"),
                          conic_linear_system([]))


class TestBranches(unittest.TestCase):

    def test_series(self):
        branch = local_branch(parse_poly("y - x^2"), point(1, 1), 3)
        self.assertEqual(coefficients(branch), [0, 2, 1, 0])
        self.assertFalse(branch.swapped)

    def test_vertical_tangent(self):
        branch = local_branch(parse_poly("x - y^2"), point(0, 0), 2)
        self.assertTrue(branch.swapped)
        self.assertEqual(coefficients(branch), [0, 0, 1])
        self.assertRaises(VerticalTangentUnresolvable, local_branch, parse_poly("x - y^2"), point(0, 0), 2,
                          swap=False)

    def test_contact_invariants(self):
        branch = local_branch(parse_poly(CUBIC), point(0, 0), 5)
        t2, j0 = contact_invariants(branch)
        self.assertEqual(t2.to_rational(), 1)
        self.assertEqual(j0.to_rational(), 2)


class TestConstraints(unittest.TestCase):

    def test_points(self):
        self.assertEqual(str(parse_point("1, -1/2", RATIONALS)), "(1, -1/2)")
        self.assertEqual(str(parse_point("1 : 2 : 0", RATIONALS)), "(1/2 : 1 : 0)")
        self.assertRaises(CurveSyntaxError, parse_point, "1, 2, 3", RATIONALS)

    def test_system_from_definition(self):
        definition = parse_curve_file(CURVE)
        curve, system = system_from_definition(definition)
        self.assertEqual(curve, parse_poly(CUBIC))
        self.assertEqual([str(c) for c in system.constraints], ["through (1, 0)", "contact 3 with B3 at (0, 0)"])
        self.assertEqual(system.alpha, 1)
        self.assertEqual(system.basis, [parse_poly("x*y"), parse_poly("y^2")])

    def test_explicit_constraints(self):
        definition = parse_curve_file(CURVE)
        _, system = system_from_definition(definition, "through (1, 0)")
        self.assertEqual(system.alpha, 4)
        self.assertRaises(CurveSyntaxError, system_from_definition, definition, "near (1, 0)")


if __name__ == '__main__':
    unittest.main()
