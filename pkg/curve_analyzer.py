#!/usr/bin/env python
#
# curve_analyzer.py
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

import argparse
import json
import logging
import os
import sys

import sextica
from sextica import report
from sextica.poly import CHARTS


exitcodes = {
    "success": 0,
    "expectation_mismatch": 1,
    "input_error": 2,
    "internal_limit": 3,
}


def build_parser():
    p = argparse.ArgumentParser(prog="curve_analyzer",
                                description="Singularities, flexes, conical flexes and torus type of plane curves.")
    p.add_argument("-v", "--verbose", action="store_true", help="log elimination details")
    p.add_argument("-q", "--quiet", action="store_true", help="only log warnings")
    p.add_argument("-o", "--output", help="report file; '-' for stdout (default <basename>_result.json)")
    sub = p.add_subparsers(dest="command")
    sub.required = True

    def common(parser, tower=True):
        parser.add_argument("--charts", choices=("all", "affine"), default="all",
                            help="search the whole projective plane or the affine chart only")
        parser.add_argument("--precision", type=int, default=53, help="bits of the boxes around inexact points")
        if tower:
            parser.add_argument("--tower", action="append", default=[], metavar="RADICAND",
                                help="adjoin sqrt(RADICAND) to the tower of the curve file (repeatable)")

    analyze = sub.add_parser("analyze", help="full pipeline on a curve file")
    analyze.add_argument("curve_file")
    common(analyze)
    analyze.add_argument("--no-flex", action="store_true", help="skip the flex inventory")
    analyze.add_argument("--torus-only", action="store_true", help="singularities and torus decision only")
    analyze.add_argument("--expect-strict", action="store_true", help="conical flex counts must match")
    analyze.add_argument("--timings", action="store_true", help="include wall-clock timings")

    flexes = sub.add_parser("flexes", help="flex inventory of a component")
    flexes.add_argument("curve_file")
    flexes.add_argument("component", nargs="?", help="component label such as B4 (default: all)")
    flexes.add_argument("--pairs", action="store_true", help="torus verdict of a quartic plus two flex tangents")
    common(flexes)

    torus = sub.add_parser("torus-check", help="torus decision for a sextic")
    torus.add_argument("curve_file")
    torus.add_argument("--expect-strict", action="store_true", help="conical flex counts must match")
    common(torus)

    conical = sub.add_parser("conical-flex", help="conical flexes with respect to a system of conics")
    conical.add_argument("curve_file")
    conical.add_argument("constraints", nargs="?",
                         help="e.g. 'through (1, 0); contact 3 with B4 at (0, 1)' (default: the [conics] section)")
    conical.add_argument("--precision", type=int, default=53, help="bits of the boxes around inexact points")
    conical.add_argument("--tower", action="append", default=[], metavar="RADICAND",
                         help="adjoin sqrt(RADICAND) to the tower of the curve file (repeatable)")

    corpus = sub.add_parser("verify-corpus", help="check every curve file of a directory against [expected]")
    corpus.add_argument("directory")
    common(corpus, tower=False)
    corpus.add_argument("--jobs", type=int, default=1, help="number of worker processes")
    corpus.add_argument("--skip-heavy", action="store_true", help="skip files marked heavy = true")
    corpus.add_argument("--expect-strict", action="store_true", help="conical flex counts must match")

    count = sub.add_parser("flex-count", help="number of flexes predicted for a configuration")
    count.add_argument("degree", type=int)
    count.add_argument("configuration", help="e.g. '[4A2,A1]'")
    return p


def run(args):
    charts = CHARTS if getattr(args, "charts", "all") == "all" else ("affine",)
    if args.command == "analyze":
        return report.cmd_analyze(args.curve_file, charts, args.precision, flexes=not (args.no_flex or args.torus_only),
                                  torus=True, radicands=args.tower, strict=args.expect_strict, timings=args.timings)
    if args.command == "flexes":
        return report.cmd_flexes(args.curve_file, args.component, charts, args.precision, args.tower, args.pairs)
    if args.command == "torus-check":
        return report.cmd_torus_check(args.curve_file, charts, args.precision, args.tower, args.expect_strict)
    if args.command == "conical-flex":
        return report.cmd_conical_flex(args.curve_file, args.constraints, args.precision, args.tower)
    if args.command == "verify-corpus":
        return report.cmd_verify_corpus(args.directory, args.jobs, args.skip_heavy, args.expect_strict, charts,
                                        args.precision)
    return report.cmd_flex_count(args.degree, args.configuration)


def exit_code(result):
    if "results" in result:
        failing = result["fail"] + result["error"]
        return exitcodes["expectation_mismatch"] if failing else exitcodes["success"]
    if result.get("expected", {}).get("mismatches"):
        return exitcodes["expectation_mismatch"]
    return exitcodes["success"]


def output_name(args):
    if args.output:
        return args.output
    source = getattr(args, "curve_file", None) or getattr(args, "directory", None)
    if source is None:
        return "-"
    basename = os.path.basename(os.path.normpath(source).rsplit(".", 1)[0])
    return "%s_result.json" % basename


def write(document, outfname):
    text = json.dumps(document, indent=2)
    if outfname == "-":
        print(text)
        return
    logging.info("Writing output to %s" % outfname)
    with open(outfname, "w") as outfile:
        outfile.write(text + "\n")


if __name__ == "__main__":

    args = build_parser().parse_args()
    level = logging.DEBUG if args.verbose else logging.WARNING if args.quiet else logging.INFO
    logging.basicConfig(stream=sys.stderr, level=level, format="%(levelname)s %(name)s: %(message)s")

    outfname = output_name(args)
    try:
        result = run(args)
    except EnvironmentError as e:
        write({"error": type(e).__name__, "message": str(e)}, "-")
        sys.exit(exitcodes["input_error"])
    except sextica.LimitExceeded as e:
        write(report.error_dict(e), "-")
        sys.exit(exitcodes["internal_limit"])
    except sextica.SexticaError as e:
        write(report.error_dict(e), "-")
        sys.exit(exitcodes["input_error"])

    write(result, outfname)
    sys.exit(exit_code(result))
