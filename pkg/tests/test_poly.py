#
# test_poly.py
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

import numpy as np

from .context import sextica
from sextica.errors import DegreeTooSmall
from sextica.field import RATIONALS, make_tower
from sextica.parser import parse_poly
from sextica.poly import MultiPoly, X, Y, isolate_roots, random_affine_change


def P(text, tower=None):
    return parse_poly(text, tower)


def inverse_change(matrix, shift):
    (a, b), (c, d) = matrix
    det = Fraction(a * d - b * c)
    inverse = ((d / det, -b / det), (-c / det, a / det))
    (p, q), (r, s) = inverse
    return inverse, (-(p * shift[0] + q * shift[1]), -(r * shift[0] + s * shift[1]))


def random_poly(rng, degree_y):
    """Coefficients in -3..3, x-degree at most 2, constant leading coefficient in y."""
    terms = {}
    for j in range(degree_y):
        for i in range(3):
            terms[(i, j)] = int(rng.randint(-3, 4))
    terms[(0, degree_y)] = int(rng.choice([-3, -2, -1, 1, 2, 3]))
    return MultiPoly.from_dict(RATIONALS, terms)


class TestArithmetic(unittest.TestCase):

    def test_expand(self):
        self.assertEqual(P("(x + y)^2"), P("x^2 + 2*x*y + y^2"))
        self.assertEqual(P("(x - 1)*(x + 1)") + 1, P("x^2"))
        self.assertEqual(P("x*y").total_degree(), 2)
        self.assertEqual(P("x^3*y + y^2").degree(Y), 2)
        self.assertEqual(MultiPoly.constant(RATIONALS, 0).total_degree(), -1)

    def test_towers_are_joined(self):
        p = P("x + sqrt(2)")
        q = P("y - 1")
        self.assertEqual((p * q).tower, make_tower((2,)))
        self.assertEqual(p - P("sqrt(2)"), P("x"))

    def test_substitute_and_translate(self):
        p = P("x^2 + y^2 - 1")
        self.assertEqual(p.substitute(X, P("y")), P("2*y^2 - 1"))
        self.assertEqual(p.translate(1, 0), P("x^2 + 2*x + y^2"))

    def test_derivatives(self):
        p = P("x^3*y - 2*y^2")
        self.assertEqual(p.diff(X), P("3*x^2*y"))
        self.assertEqual(p.diff(Y, 2), P("-4"))

    def test_exquo(self):
        p = P("x^2 - y^2")
        self.assertEqual(p.exquo(P("x - y")), P("x + y"))
        self.assertIsNone(p.exquo(P("x - 1")))


class TestElimination(unittest.TestCase):

    def test_resultant(self):
        self.assertEqual(P("y^2 - x").resultant(P("y - 1"), Y), P("1 - x"))

    def test_discriminant(self):
        self.assertEqual(P("y^2 - x").discriminant(Y), P("4*x"))
        self.assertRaises(DegreeTooSmall, P("x^2 - 1").discriminant, Y)

    def test_gcd(self):
        self.assertEqual(P("(x - y)*(x + 1)").gcd(P("(x - y)*(y + 2)")), P("x - y"))

    def test_square_free_part(self):
        self.assertEqual(P("(x - 1)^2*(x + 2)").square_free_part(), P("(x - 1)*(x + 2)"))


class TestResultantProperties(unittest.TestCase):

    def setUp(self):
        self.rng = np.random.RandomState(11)

    def triple(self):
        return [random_poly(self.rng, int(self.rng.randint(1, 3))) for _ in range(3)]

    def test_multiplicative(self):
        for _ in range(1000):
            f, g, h = self.triple()
            self.assertEqual((f * g).resultant(h, Y), f.resultant(h, Y) * g.resultant(h, Y))

    def test_antisymmetric(self):
        for _ in range(1000):
            f, g, _ = self.triple()
            sign = (-1) ** (f.degree(Y) * g.degree(Y))
            self.assertEqual(f.resultant(g, Y), g.resultant(f, Y) * sign)

    def test_specialization(self):
        for _ in range(1000):
            f, g, _ = self.triple()
            a = Fraction(int(self.rng.randint(-5, 6)), int(self.rng.randint(1, 4)))
            self.assertEqual(f.resultant(g, Y).substitute(X, a),
                             f.substitute(X, a).resultant(g.substitute(X, a), Y))


class TestHomogenization(unittest.TestCase):

    def test_round_trip(self):
        p = P("x^2 + y - 1")
        h = p.homogenize()
        self.assertTrue(h.is_homogeneous())
        self.assertEqual(h, P("x^2 + y*z - z^2"))
        self.assertEqual(h.dehomogenize(), p)
        self.assertEqual(p.homogenize(3), P("x^2*z + y*z^2 - z^3"))

    def test_degree_too_small(self):
        self.assertRaises(DegreeTooSmall, P("x^2 + y").homogenize, 1)

    def test_charts(self):
        p = P("y - x^3")
        self.assertEqual(p.in_chart("y=1"), P("z^2 - x^3"))


class TestAffineChanges(unittest.TestCase):

    def test_change_is_invertible(self):
        rng = np.random.RandomState(7)
        p = P("y^2*x - x^3 + 3*x*y - 2")
        for _ in range(5):
            matrix, shift = random_affine_change(rng)
            q = p.linear_change(matrix, shift)
            self.assertEqual(q.total_degree(), p.total_degree())
            inverse, back = inverse_change(matrix, shift)
            self.assertEqual(q.linear_change(inverse, back), p)


class TestRoots(unittest.TestCase):

    def test_exact_roots(self):
        roots = isolate_roots(P("(x - 1)^2*(x + 2)"))
        self.assertEqual(len(roots.exact()), 2)
        self.assertEqual(roots.multiplicity_sum(), 3)
        values = dict((r.value.to_rational(), r.multiplicity) for r in roots)
        self.assertEqual(values, {Fraction(1): 2, Fraction(-2): 1})

    def test_quadratic_extension(self):
        self.assertEqual(len(isolate_roots(P("x^2 + 1")).intervals()), 2)
        roots = isolate_roots(P("x^2 + 1"), extend=True)
        self.assertEqual(len(roots.exact()), 2)
        for root in roots:
            self.assertEqual(root.value * root.value, root.value.tower.convert(-1))

    def test_boxes(self):
        roots = isolate_roots(P("x^3 - 2"), precision=64)
        self.assertEqual(len(roots.intervals()), 3)
        real = [r.value for r in roots if r.value.is_real()]
        self.assertEqual(len(real), 1)
        box = real[0]
        self.assertTrue(box.re.lo ** 3 <= 2 <= box.re.hi ** 3)
        for i, a in enumerate(roots.intervals()):
            for b in roots.intervals()[i + 1:]:
                self.assertTrue(a.value.is_disjoint(b.value))


if __name__ == '__main__':
    unittest.main()
