#
# test_report.py
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
import shutil
import tempfile
import unittest

from .context import sextica
from sextica.errors import CurveSyntaxError, MalformedInput, PrecisionExhausted
from sextica.parser import parse_curve_file, read_curve_file
from sextica.report import (analyze_curve, check_expected, cmd_analyze, cmd_flex_count, cmd_verify_corpus,
                            error_dict, extend_tower)

CORPUS = os.path.join(os.path.dirname(os.path.abspath(__file__)), os.pardir, "corpus")

CUSPIDAL = os.path.join(CORPUS, "cubic_cuspidal.curve")


class TestReport(unittest.TestCase):

    def test_flex_count(self):
        doc = cmd_flex_count(5, "[A1, 4A2]")
        self.assertEqual(doc["configuration"], "[4A2,A1]")
        self.assertEqual(doc["flexes"], 7)
        self.assertEqual(doc["tabulated"], 7)
        doc = cmd_flex_count(6, "[3A5]")
        self.assertEqual(doc["flexes"], 72 - 54)
        self.assertIsNone(doc["tabulated"])

    def test_error_dict(self):
        doc = error_dict(CurveSyntaxError("unexpected '$'", 3, 7))
        self.assertEqual(doc["error"], "CurveSyntaxError")
        self.assertEqual((doc["line"], doc["column"]), (3, 7))
        self.assertFalse(doc["limit"])
        doc = error_dict(PrecisionExhausted("boxes did not separate"))
        self.assertNotIn("line", doc)
        self.assertTrue(doc["limit"])

    def test_extend_tower(self):
        definition = read_curve_file(CUSPIDAL)
        self.assertIs(extend_tower(definition, ["4"]), definition)
        extended = extend_tower(definition, ["-3"])
        self.assertEqual(extended.tower.depth, 1)
        self.assertEqual(extended.expected, definition.expected)

    def test_analyze(self):
        doc = cmd_analyze(CUSPIDAL, timings=True)
        self.assertEqual(doc["configuration"], "[A2]")
        self.assertEqual(doc["singularities"][0]["type"], "A2")
        self.assertEqual(doc["flexes"][0]["count"], 1)
        self.assertTrue(doc["flexes"][0]["match"])
        self.assertNotIn("torus", doc)
        self.assertEqual(doc["expected"]["mismatches"], [])
        self.assertIn("flexes", doc["timings"])

    def test_analysis_entry(self):
        report = sextica.analysis("[component B3]\ny^2 - x^3 - x^2\n\n[expected]\nconfiguration = [A1]\n", flexes=False)
        self.assertEqual(report["configuration"], "[A1]")
        self.assertNotIn("flexes", report)
        self.assertEqual(report["expected"]["mismatches"], [])
        self.assertRaises(MalformedInput, sextica.analysis, 42)

    def test_mismatch(self):
        text = "[component B3]\ny^2 - x^3\n\n[expected]\nconfiguration = [A1]\nflexes = 1\n"
        mismatches = check_expected(analyze_curve(parse_curve_file(text)))
        self.assertEqual(len(mismatches), 1)
        self.assertTrue(mismatches[0].startswith("configuration"))


class TestCorpus(unittest.TestCase):

    def setUp(self):
        self.directory = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.directory)

    def test_empty(self):
        doc = cmd_verify_corpus(self.directory)
        self.assertEqual(doc["files"], 0)
        self.assertEqual(doc["results"], [])
        self.assertRaises(MalformedInput, cmd_verify_corpus, os.path.join(self.directory, "missing"))

    def test_statuses(self):
        shutil.copy(CUSPIDAL, self.directory)
        with open(CUSPIDAL) as f:
            text = f.read()
        with open(os.path.join(self.directory, "wrong.curve"), "w") as f:
            f.write(text.replace("flexes = 1", "flexes = 2"))
        with open(os.path.join(self.directory, "heavy.curve"), "w") as f:
            f.write(text + "heavy = true\n")
        with open(os.path.join(self.directory, "broken.curve"), "w") as f:
            f.write("[component B3]\ny^2 - x^3 +\n")
        doc = cmd_verify_corpus(self.directory, skip_heavy=True)
        self.assertEqual(doc["files"], 4)
        statuses = dict((r["file"], r["status"]) for r in doc["results"])
        self.assertEqual(statuses, {"cubic_cuspidal.curve": "pass", "wrong.curve": "fail", "heavy.curve": "skipped",
                                    "broken.curve": "error"})
        wrong = [r for r in doc["results"] if r["file"] == "wrong.curve"][0]
        self.assertTrue(wrong["mismatches"][0].startswith("flexes"))


@unittest.skipUnless(os.environ.get("SEXTICA_SLOW_TESTS"), "set SEXTICA_SLOW_TESTS to verify the whole corpus")
class TestWholeCorpus(unittest.TestCase):

    def test_verify_corpus(self):
        doc = cmd_verify_corpus(CORPUS, jobs=4)
        failing = [r for r in doc["results"] if r["status"] in ("fail", "error")]
        self.assertEqual(failing, [])


if __name__ == '__main__':
    unittest.main()
