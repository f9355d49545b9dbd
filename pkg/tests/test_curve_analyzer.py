#
# test_curve_analyzer.py
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


import json
import os
import shutil
import tempfile
import unittest

from .context import sextica
import curve_analyzer

CORPUS = os.path.join(os.path.dirname(os.path.abspath(__file__)), os.pardir, "corpus")


class TestCommandLine(unittest.TestCase):

    def setUp(self):
        self.parser = curve_analyzer.build_parser()

    def test_output_name(self):
        args = self.parser.parse_args(["analyze", "corpus/cubic_nodal.curve"])
        self.assertEqual(curve_analyzer.output_name(args), "cubic_nodal_result.json")
        args = self.parser.parse_args(["-o", "-", "torus-check", "x.curve"])
        self.assertEqual(curve_analyzer.output_name(args), "-")
        args = self.parser.parse_args(["verify-corpus", "corpus/"])
        self.assertEqual(curve_analyzer.output_name(args), "corpus_result.json")
        args = self.parser.parse_args(["flex-count", "5", "[4A2]"])
        self.assertEqual(curve_analyzer.output_name(args), "-")

    def test_options(self):
        args = self.parser.parse_args(["analyze", "a.curve", "--tower", "-3", "--tower", "2", "--charts", "affine"])
        self.assertEqual(args.tower, ["-3", "2"])
        self.assertEqual(args.charts, "affine")
        self.assertEqual(args.precision, 53)
        args = self.parser.parse_args(["verify-corpus", "corpus", "--jobs", "3", "--skip-heavy"])
        self.assertEqual((args.jobs, args.skip_heavy, args.expect_strict), (3, True, False))

    def test_flex_count(self):
        args = self.parser.parse_args(["flex-count", "4", "[2A2]"])
        result = curve_analyzer.run(args)
        self.assertEqual((result["flexes"], result["tabulated"]), (8, 8))
        self.assertEqual(curve_analyzer.exit_code(result), curve_analyzer.exitcodes["success"])

    def test_exit_code(self):
        self.assertEqual(curve_analyzer.exit_code({"expected": {"mismatches": ["flexes: expected 2, got 1"]}}),
                         curve_analyzer.exitcodes["expectation_mismatch"])
        self.assertEqual(curve_analyzer.exit_code({"results": [], "fail": 0, "error": 1}),
                         curve_analyzer.exitcodes["expectation_mismatch"])
        self.assertEqual(curve_analyzer.exit_code({"results": [], "fail": 0, "error": 0}),
                         curve_analyzer.exitcodes["success"])

    def test_write(self):
        directory = tempfile.mkdtemp()
        try:
            args = self.parser.parse_args(["analyze", os.path.join(CORPUS, "cubic_cuspidal.curve")])
            result = curve_analyzer.run(args)
            outfname = os.path.join(directory, curve_analyzer.output_name(args))
            curve_analyzer.write(result, outfname)
            with open(outfname) as f:
                doc = json.load(f)
            self.assertEqual(doc["configuration"], "[A2]")
            self.assertEqual(curve_analyzer.exit_code(doc), curve_analyzer.exitcodes["success"])
        finally:
            shutil.rmtree(directory)


if __name__ == '__main__':
    unittest.main()
