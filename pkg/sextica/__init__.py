#
# __init__.py
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

from .errors import *  # noqa: F401,F403
from .errors import MalformedInput
from .parser import CurveDefinition, format_poly, parse_curve_file, parse_poly, read_curve_file  # noqa: F401

__version__ = "0.1.0"


def analysis(definition, **options):
    """The main entry point of the analysis.

    `definition` is a CurveDefinition, or the text of a curve file. The
    keyword options are those of `sextica.report.analyze_curve`
    (`charts`, `precision`, `flexes`, `torus`, `conical`, `timings`)
    plus `strict`, which makes conical flex counts binding when the
    definition carries an `[expected]` block.

    The curve-file format is described in `doc/curve_format.md`.

    :return: The report of the analysis as a dictionary.

    """

    from sextica.report import analyze_curve, check_expected

    if isinstance(definition, str):
        definition = parse_curve_file(definition)
    if not isinstance(definition, CurveDefinition):
        raise MalformedInput("analysis() expects a CurveDefinition or the text of a curve file")

    strict = options.pop("strict", False)
    result = analyze_curve(definition, **options)
    report = result.to_dict()
    if definition.expected:
        report["expected"] = {"mismatches": check_expected(result, strict)}
    return report
