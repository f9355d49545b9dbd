#
# test_torus.py
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

from .context import cases, sextica
from sextica.errors import DegreeMismatch
from sextica.field import RATIONALS
from sextica.flex import flex_points, flex_tangent_sextic
from sextica.local import SingularityRecord, analyze_singularities
from sextica.orbits import AlgebraicPoint
from sextica.parser import CurveDefinition, make_definition, parse_curve_file, parse_poly, read_curve_file
from sextica.poly import random_affine_change
from sextica.torus import (NON_TORUS, TORUS, UNDECIDED, InnerCandidate, TorusWitness, colinear, colinear_triples,
                           decide_torus, flex_pairs, is_flex_of_torus_type, is_linear_torus_type, perfect_square_cubic,
                           polynomial_sqrt, verify_torus_decomposition, weight_subsets)

CORPUS = os.path.join(os.path.dirname(os.path.abspath(__file__)), os.pardir, "corpus")

F2 = "y - x^2"
F3 = "x^3 - y"


def point(a, b):
    return AlgebraicPoint(RATIONALS.convert(a), RATIONALS.convert(b))


def witness(scalar=1):
    return TorusWitness(parse_poly(F2), parse_poly(F3), RATIONALS.convert(scalar))


def candidate(sing_type, x=0):
    return InnerCandidate(sing_type, [SingularityRecord(point(x, 0), sing_type, int(sing_type[1:]))])


class TestDecompositions(unittest.TestCase):

    def test_verify(self):
        sextic = parse_poly("(%s)^3 + (%s)^2" % (F2, F3))
        self.assertTrue(verify_torus_decomposition(sextic, witness()))
        self.assertFalse(verify_torus_decomposition(sextic, witness(2)))
        self.assertTrue(verify_torus_decomposition(sextic.scale(2), witness(2)))
        self.assertRaises(DegreeMismatch, verify_torus_decomposition, parse_poly("x^4 - y"), witness())

    def test_linear_type(self):
        self.assertFalse(is_linear_torus_type(witness()))
        linear = TorusWitness(parse_poly("(y - 1)^2"), parse_poly(F3), RATIONALS.one)
        self.assertTrue(is_linear_torus_type(linear))

    def test_polynomial_sqrt(self):
        g = parse_poly("(x^2 + x*y - 3)^2")
        h = polynomial_sqrt(g)
        self.assertEqual(h * h, g)
        self.assertIsNone(polynomial_sqrt(parse_poly("x^2 + y")))
        self.assertIsNone(polynomial_sqrt(parse_poly("2*x^2")))
        self.assertIsNotNone(perfect_square_cubic(parse_poly("(x^3 - y + 1)^2")))
        self.assertIsNone(perfect_square_cubic(parse_poly("(x + 1)^2")))


class TestDecision(unittest.TestCase):

    def test_supplied_witness(self):
        text = "[component B6]\n(%s)^3 + (%s)^2\n\n[witness]\nf2 = %s\nf3 = %s\n" % (F2, F3, F2, F3)
        verdict = decide_torus(parse_curve_file(text), records=[])
        self.assertEqual(verdict.verdict, TORUS)
        self.assertFalse(verdict.linear)
        self.assertEqual(verdict.witness.scalar, RATIONALS.one)

    def test_short_cuts(self):
        definition = make_definition("smooth", [("B6", "x^6 + y^6 - 1")])
        self.assertEqual(decide_torus(definition, records=[]).verdict, NON_TORUS)
        records = [SingularityRecord(point(0, 0), "NotSimple", None)]
        self.assertEqual(decide_torus(definition, records=records).verdict, UNDECIDED)
        records = [SingularityRecord(point(0, 0), "A1", 1)]
        self.assertEqual(decide_torus(definition, records=records).verdict, NON_TORUS)
        records = [SingularityRecord(point(0, 0), "A5", 5)]
        self.assertEqual(decide_torus(definition, records=records).verdict, NON_TORUS)

    def test_nodal_lines(self):
        lines = ["x", "y", "x + y - 1", "x - y - 3", "x + 2*y - 5", "2*x - y + 7"]
        definition = make_definition("six lines", [("B1" + "'" * i, line) for i, line in enumerate(lines)])
        verdict = decide_torus(definition)
        self.assertEqual(verdict.verdict, NON_TORUS)
        self.assertEqual(verdict.reason, "no singular point is of an inner type")

    def test_degree(self):
        self.assertRaises(DegreeMismatch, decide_torus, make_definition("quartic", [("B4", "x^4 + y^4 - 1")]))

    def test_weight_subsets(self):
        a5 = [candidate("A5", x) for x in range(3)]
        a2 = candidate("A2", 5)
        subsets = weight_subsets(a5 + [a2])
        self.assertEqual(len(subsets), 1)
        self.assertEqual(len(subsets[0]), 3)
        self.assertEqual(weight_subsets(a5 + [a2], total=5), [[a5[0], a5[1], a2], [a5[0], a5[2], a2],
                                                                 [a5[1], a5[2], a2]])
        self.assertEqual(weight_subsets(a5, required=[a5[2]]), [[a5[2], a5[0], a5[1]]])


class TestColinearity(unittest.TestCase):

    def test_colinear(self):
        self.assertTrue(colinear([point(0, 0), point(1, 1), point(2, 2)]))
        self.assertFalse(colinear([point(0, 0), point(1, 0), point(0, 1)]))
        self.assertRaises(ValueError, colinear, [point(0, 0), point(1, 1)])

    def test_triples(self):
        points = [point(0, 0), point(1, 1), point(2, 2), point(1, 0), point(2, 0)]
        self.assertEqual(colinear_triples(points), [(0, 1, 2), (0, 3, 4)])
        at_infinity = AlgebraicPoint.from_projective(1, 1, 0)
        self.assertEqual(colinear_triples([point(0, 0), point(1, 1), at_infinity]), [(0, 1, 2)])


class TestFlexTangents(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        definition = read_curve_file(os.path.join(CORPUS, "quintic_4A2_A1.curve"))
        cls.quintic = definition.component("B5")
        cls.cusps = [r for r in analyze_singularities(cls.quintic) if r.sing_type == "A2"]
        cls.flexes = flex_points(cls.quintic)

    def test_setting(self):
        self.assertEqual(len(self.cusps), 4)
        self.assertEqual(len(self.flexes), 7)
        self.assertEqual(sum(1 for f in self.flexes if f.is_exact), 2)

    def test_exact_flexes(self):
        verdicts = dict((f.location, is_flex_of_torus_type(self.quintic, f, self.cusps))
                        for f in self.flexes if f.is_exact)
        self.assertEqual(verdicts, {point(1, 0): True, point(Fraction(-1520, 293), Fraction(-287, 293)): False})

    def test_conjugate_flexes(self):
        conjugate = [f for f in self.flexes if not f.is_exact]
        self.assertEqual(len(conjugate), 5)
        for flex in conjugate:
            self.assertFalse(is_flex_of_torus_type(self.quintic, flex, self.cusps), flex.location)


class TestFlexPairs(unittest.TestCase):

    def test_quartic_pairs(self):
        definition = read_curve_file(os.path.join(CORPUS, "quartic_2A2.curve"))
        flexes = dict((f.location, f) for f in flex_points(definition.component("B4")) if f.is_exact)
        p1, p2, p3 = flexes[point(1, 0)], flexes[point(-1, 0)], flexes[point(0, -1)]
        [(pair, verdict)] = flex_pairs(definition, [p1, p2])
        self.assertEqual(pair, (p1.location, p2.location))
        self.assertEqual(verdict.verdict, TORUS)
        self.assertTrue(verify_torus_decomposition(flex_tangent_sextic(definition, [p1, p2]), verdict.witness))
        [(_, verdict)] = flex_pairs(definition, [p1, p3])
        self.assertEqual(verdict.verdict, NON_TORUS)
        self.assertEqual(flex_pairs(definition, [p1, p1]), [])


@unittest.skipUnless(os.environ.get("SEXTICA_SLOW_TESTS"), "set SEXTICA_SLOW_TESTS to check the corpus witnesses")
class TestCorpusWitnesses(unittest.TestCase):

    def test_witnesses_verify(self):
        from sextica.torus import _witness_from_file
        for name in sorted(os.listdir(CORPUS)):
            if not name.endswith(".curve"):
                continue
            definition = read_curve_file(os.path.join(CORPUS, name))
            if definition.witness:
                self.assertTrue(verify_torus_decomposition(definition, _witness_from_file(definition)), name)


class TestInvariance(unittest.TestCase):

    def setUp(self):
        self.rng = np.random.RandomState(17)

    def test_witness_moves_with_the_sextic(self):
        f2, f3 = parse_poly(F2), parse_poly(F3)
        sextic = f2 ** 3 + f3 ** 2
        for _ in range(1000):
            matrix, shift = random_affine_change(self.rng)
            moved = TorusWitness(f2.linear_change(matrix, shift), f3.linear_change(matrix, shift), RATIONALS.one)
            self.assertTrue(verify_torus_decomposition(sextic.linear_change(matrix, shift), moved))
            self.assertFalse(verify_torus_decomposition(sextic.linear_change(matrix, shift) + 1, moved))

    def test_verdict_of_moved_lines(self):
        lines = [parse_poly(t) for t in ("x", "y", "x + y - 1", "x - y - 3", "x + 2*y - 5", "2*x - y + 7")]
        for _ in range(cases(2)):
            matrix, shift = random_affine_change(self.rng)
            definition = CurveDefinition("six lines", RATIONALS, [("B1" + "'" * i, line.linear_change(matrix, shift))
                                                          for i, line in enumerate(lines)])
            self.assertEqual(decide_torus(definition).verdict, NON_TORUS)


if __name__ == '__main__':
    unittest.main()
