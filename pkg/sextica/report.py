#
# report.py
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

"""Analysis pipeline, report documents and the corpus runner.

Every `cmd_*` function returns an OrderedDict that serializes to the
same JSON text on every run with the same options. The document layout
is described in `doc/curve_format.md`.
"""

import glob
import logging
import multiprocessing
import os
import time
from collections import OrderedDict
from contextlib import contextmanager

from .conical import conic_rank, conical_flex_eliminant, conical_flex_points, osculating_member, parse_point, \
    system_from_definition
from .errors import EliminationDegenerate, LimitExceeded, MalformedInput, NotConicalFlex, ProcedureInapplicable, \
    RadicandIsSquare, RequiresExactPoint, SexticaError, SingularPoint, TooManyParameters, UncertifiableInterval, \
    UnknownDefect
from .field import format_element, tower_extend
from .flex import annotate_defects, expected_flex_count, flex_points, tabulated_flex_count
from .local import Configuration, analyze_singularities, configuration
from .parser import CurveDefinition, format_poly, parse_constant, parse_poly, read_curve_file
from .poly import CHARTS, MultiPoly
from .torus import INNER_TYPES, TORUS, colinear_triples, decide_torus, flex_pairs, is_flex_of_torus_type

logger = logging.getLogger(__name__)

CORPUS_SUFFIX = ".curve"

_UNDECIDED_FLEX = (ProcedureInapplicable, RequiresExactPoint, TooManyParameters, EliminationDegenerate,
                   UncertifiableInterval)


class FlexInventory(object):
    """The flexes of one component.

    Attributes
    ----------
    label : str
    degree : int
    configuration : Configuration
        Singularities of the component alone.
    records : list of FlexRecord
    singularities : list of SingularityRecord
    expected : int or None
        3n(n-2) minus the table defects; None for lines and for
        configurations with a type the table does not know.
    """

    def __init__(self, label, degree, configuration, records, expected, singularities=()):
        self.label = label
        self.degree = degree
        self.configuration = configuration
        self.records = list(records)
        self.expected = expected
        self.singularities = list(singularities)

    @property
    def count(self):
        return len(self.records)

    @property
    def total(self):
        """Number of flexes counted with their local flex multiplicity."""
        return sum(r.local_flex_multiplicity for r in self.records)

    @property
    def match(self):
        if self.expected is None:
            return None
        return self.total == self.expected


class CurveAnalysis(object):
    """Everything `analyze_curve` computes about one curve definition.

    Attributes
    ----------
    definition : CurveDefinition
    records : list of SingularityRecord
    configuration : Configuration
    flexes : list of FlexInventory
    torus : TorusVerdict or None
        Only computed for sextics.
    flex_torus : list of (FlexRecord, str)
        For a quintic: whether the quintic plus the tangent at each flex is
        of torus type ("torus", "non-torus" or "undecided").
    conical : OrderedDict or None
        The conical flex report of the `[conics]` section.
    timings : OrderedDict
        Wall-clock seconds per stage, filled only on request.
    """

    def __init__(self, definition):
        self.definition = definition
        self.records = []
        self.configuration = Configuration()
        self.flexes = []
        self.torus = None
        self.flex_torus = []
        self.conical = None
        self.timings = OrderedDict()

    @property
    def name(self):
        return self.definition.name

    @property
    def component_type(self):
        return self.definition.component_type

    def inventory(self, label):
        for inventory in self.flexes:
            if inventory.label == label:
                return inventory
        raise MalformedInput("%s has no flex inventory for %s" % (self.name, label))

    def flex_records(self):
        return [r for inventory in self.flexes for r in inventory.records]

    def to_dict(self):
        doc = OrderedDict()
        doc["name"] = self.name
        doc["component_type"] = self.component_type
        doc["degree"] = self.definition.degree
        doc["tower"] = str(self.definition.tower)
        doc["configuration"] = str(self.configuration)
        doc["incomplete"] = self.configuration.incomplete
        doc["singularities"] = [singularity_dict(r) for r in self.records]
        if self.flexes:
            doc["flexes"] = [inventory_dict(i) for i in self.flexes]
        if self.flex_torus:
            doc["flex_torus"] = [OrderedDict([("location", str(f.location)), ("verdict", v)])
                                 for f, v in self.flex_torus]
        if self.torus is not None:
            doc["torus"] = verdict_dict(self.torus)
        if self.conical is not None:
            doc["conical"] = self.conical
        if self.timings:
            doc["timings"] = self.timings
        return doc


@contextmanager
def _stage(analysis, name, enabled):
    start = time.time()
    yield
    if enabled:
        analysis.timings[name] = round(time.time() - start, 3)


def extend_tower(definition, radicands):
    """The definition over its tower with the square roots of `radicands` adjoined."""
    tower = definition.tower
    for text in radicands:
        radicand = parse_constant(text, tower)
        try:
            tower = tower_extend(tower, radicand)
        except RadicandIsSquare:
            logger.info("sqrt(%s) already lies in %s" % (text, tower))
    if tower == definition.tower:
        return definition
    components = [(label, poly.embed(tower)) for label, poly in definition.components]
    return CurveDefinition(definition.name, tower, components, definition.expected, definition.conics,
                           definition.witness)


def component_inventory(label, poly, charts=CHARTS, precision=53):
    """FlexInventory of a single component."""
    degree = poly.total_degree()
    if degree == 1:
        return FlexInventory(label, degree, Configuration(), [], None)
    singularities = analyze_singularities(poly, charts, precision)
    config = configuration(poly, charts, singularities)
    logger.info("Enumerating flexes of %s..." % label)
    records = flex_points(poly, charts, precision)
    try:
        expected = expected_flex_count(degree, config)
    except UnknownDefect as e:
        logger.info("No flex count for %s: %s" % (label, e))
        expected = None
    return FlexInventory(label, degree, config, records, expected, singularities)


def _flex_torus(poly, inventory):
    inner = [r for r in inventory.singularities if r.sing_type in INNER_TYPES]
    out = []
    for flex in inventory.records:
        try:
            verdict = "torus" if is_flex_of_torus_type(poly, flex, inner) else "non-torus"
        except _UNDECIDED_FLEX as e:
            logger.info("Cannot decide the flex %s: %s" % (flex.location, e))
            verdict = "undecided"
        out.append((flex, verdict))
    return out


def analyze_curve(definition, charts=CHARTS, precision=53, flexes=True, torus=True, conical=True,
                  timings=False):
    """Run the whole pipeline on a CurveDefinition and return a CurveAnalysis.

    Parameters
    ----------
    definition : CurveDefinition
    charts : sequence of str
        The charts searched for points; CHARTS is the whole plane.
    precision : int
        Bits of the boxes around points outside the tower.
    flexes, torus, conical : bool
        Select the flex inventory, the torus decision (sextics only) and
        the conical flex report (files with a `[conics]` section).
    timings : bool
        Record wall-clock timings per stage.
    """
    analysis = CurveAnalysis(definition)
    product = definition.product()
    with _stage(analysis, "singularities", timings):
        analysis.records = analyze_singularities(definition, charts, precision)
        annotate_defects(analysis.records, product)
        analysis.configuration = configuration(definition, charts, analysis.records)
    if flexes:
        with _stage(analysis, "flexes", timings):
            for label, poly in definition.components:
                analysis.flexes.append(component_inventory(label, poly, charts, precision))
        if len(definition.components) == 1 and definition.degree == 5:
            with _stage(analysis, "flex_torus", timings):
                analysis.flex_torus = _flex_torus(product, analysis.flexes[0])
    if torus and definition.degree == 6:
        logger.info("Deciding the torus type of %s..." % definition.name)
        with _stage(analysis, "torus", timings):
            analysis.torus = decide_torus(definition, analysis.records, charts, precision)
    if conical and definition.conics:
        with _stage(analysis, "conical", timings):
            analysis.conical = conical_report(definition, precision=precision)
    return analysis


def singularity_dict(record):
    doc = OrderedDict()
    doc["location"] = str(record.location)
    doc["chart"] = record.chart
    doc["exact"] = record.location.is_exact
    doc["type"] = record.sing_type
    doc["milnor"] = record.milnor
    doc["components"] = list(record.components)
    doc["defect"] = record.defect
    doc["table_defect"] = record.table_defect
    doc["generic"] = record.generic
    return doc


def flex_dict(record, minimal=None):
    doc = OrderedDict()
    doc["location"] = str(record.location)
    doc["chart"] = record.location.chart
    doc["exact"] = record.is_exact
    doc["order"] = record.flex_order
    doc["multiplicity"] = record.local_flex_multiplicity
    if record.tangent_line is not None:
        doc["tangent"] = format_poly(record.tangent_line)
    elif minimal is not None:
        doc["minimal_polynomial"] = format_poly(minimal)
    return doc


def _minimal_polynomials(records):
    """{id(orbit): coordinate polynomial} of the orbits of the inexact flexes."""
    out = OrderedDict()
    for record in records:
        if not record.is_exact and record.orbit is not None and id(record.orbit) not in out:
            index = 0 if record.location.chart == "affine" else 1
            out[id(record.orbit)] = record.orbit.coordinate_polynomial(index)
    return out


def inventory_dict(inventory):
    minimal = _minimal_polynomials(inventory.records)
    doc = OrderedDict()
    doc["component"] = inventory.label
    doc["degree"] = inventory.degree
    doc["configuration"] = str(inventory.configuration)
    doc["count"] = inventory.count
    doc["total"] = inventory.total
    doc["expected"] = inventory.expected
    doc["match"] = inventory.match
    doc["points"] = [flex_dict(r, minimal.get(id(r.orbit))) for r in inventory.records]
    return doc


def verdict_dict(verdict):
    doc = OrderedDict()
    doc["verdict"] = verdict.verdict
    doc["reason"] = verdict.reason
    if verdict.witness is not None:
        doc["linear"] = verdict.linear
        doc["witness"] = OrderedDict([("f2", format_poly(verdict.witness.f2)),
                                      ("f3", format_poly(verdict.witness.f3)),
                                      ("scalar", format_element(verdict.witness.scalar))])
        doc["inner"] = ["%s %s" % (r.sing_type, r.location) for r in verdict.inner]
    return doc


def conical_report(definition, constraints=None, precision=53):
    """Conical flexes of the reference curve of the definition's `[conics]` section."""
    curve, system = system_from_definition(definition, constraints)
    label = definition.conics.get("curve")
    logger.info("Searching conical flexes of %s..." % label)
    doc = OrderedDict()
    doc["curve"] = label
    doc["constraints"] = [str(c) for c in system.constraints]
    doc["alpha"] = system.alpha
    doc["basis"] = [format_poly(b) for b in system.basis]
    doc["eliminant_degree"] = conical_flex_eliminant(curve, system).total_degree()
    points = []
    for point in conical_flex_points(curve, system, precision):
        entry = OrderedDict([("location", str(point)), ("exact", point.is_exact)])
        if point.is_exact:
            try:
                witness = osculating_member(curve, system, point)
            except (SingularPoint, NotConicalFlex):
                witness = None
            if witness is not None:
                entry["witness"] = format_poly(witness)
                entry["degenerate"] = conic_rank(witness) < 3
        points.append(entry)
    doc["count"] = len(points)
    doc["points"] = points
    return doc


def _items(text):
    return [item.strip() for item in text.split(";") if item.strip()]


def _truth(text):
    return text.strip().lower() in ("true", "yes", "1")


def _found_points(entries):
    return [e["location"] for e in entries]


def _point_text(text, tower):
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    return str(parse_point(text, tower))


def check_expected(analysis, strict=False):
    """Compare an analysis with the definition's `[expected]` block.

    Returns a list of mismatch messages, each starting with the key that
    failed. Counts of conical flexes are only compared when `strict`.
    """
    definition = analysis.definition
    tower = definition.tower
    mismatches = []

    def differ(key, expected, got):
        mismatches.append("%s: expected %s, got %s" % (key, expected, got))

    for key, value in definition.expected.items():
        if key == "heavy":
            continue
        if key == "component_type":
            if value != analysis.component_type:
                differ(key, value, analysis.component_type)
        elif key == "configuration":
            if Configuration.parse(value) != analysis.configuration:
                differ(key, value, analysis.configuration)
        elif key == "torus":
            got = analysis.torus.verdict if analysis.torus is not None else None
            if value != got:
                differ(key, value, got)
        elif key == "linear":
            got = analysis.torus.linear if analysis.torus is not None else None
            if _truth(value) != got:
                differ(key, value, got)
        elif key == "flexes":
            _check_flex_counts(analysis, value, differ)
        elif key == "flex_points":
            found = set(str(r.location) for r in analysis.flex_records())
            for item in _items(value):
                if _point_text(item, tower) not in found:
                    differ(key, item, "no such flex")
        elif key == "flex_polynomials":
            _check_flex_polynomials(analysis, value, tower, differ)
        elif key == "colinear_triples":
            exact = [r.location for r in analysis.flex_records() if r.is_exact]
            got = len(colinear_triples(exact))
            if int(value) != got:
                differ(key, value, got)
        elif key == "torus_flexes":
            expected = set(_point_text(item, tower) for item in _items(value))
            got = set(str(f.location) for f, v in analysis.flex_torus if v == TORUS)
            undecided = [str(f.location) for f, v in analysis.flex_torus if v == "undecided"]
            if expected != got or undecided:
                differ(key, "; ".join(sorted(expected)), "; ".join(sorted(got)) +
                       (" (undecided: %s)" % "; ".join(undecided) if undecided else ""))
        elif key in ("conical_points", "conical_flexes", "conical_witnesses", "eliminant_degree"):
            _check_conical(analysis, key, value, tower, strict, differ)
        else:
            logger.warning("Ignoring the unknown expected key %r in %s" % (key, definition.name))
    return mismatches


def _check_flex_counts(analysis, value, differ):
    text = value.strip()
    if ":" not in text:
        got = sum(i.count for i in analysis.flexes)
        if int(text) != got:
            differ("flexes", text, got)
        return
    for item in text.split(","):
        label, count = [part.strip() for part in item.split(":")]
        got = analysis.inventory(label).count
        if int(count) != got:
            differ("flexes %s" % label, count, got)


def _check_flex_polynomials(analysis, value, tower, differ):
    expected = MultiPoly.constant(tower, 1)
    for item in _items(value):
        expected = expected * parse_poly(item, tower)
    got = MultiPoly.constant(tower, 1)
    for inventory in analysis.flexes:
        for poly in _minimal_polynomials(inventory.records).values():
            got = got * poly
    if expected.monic() != got.monic():
        differ("flex_polynomials", format_poly(expected.monic()), format_poly(got.monic()))


def _check_conical(analysis, key, value, tower, strict, differ):
    report = analysis.conical
    if report is None:
        differ(key, value, "no conical report")
        return
    if key == "conical_points":
        found = _found_points(report["points"])
        for item in _items(value):
            if _point_text(item, tower) not in found:
                differ(key, item, "not found")
    elif key == "conical_flexes":
        if strict and int(value) != report["count"]:
            differ(key, value, report["count"])
        elif int(value) != report["count"]:
            logger.info("Found %d of %s conical flexes" % (report["count"], value))
    elif key == "eliminant_degree":
        if int(value) != report["eliminant_degree"]:
            differ(key, value, report["eliminant_degree"])
    else:
        witnesses = dict((e["location"], e.get("witness")) for e in report["points"])
        for item in _items(value):
            where, conic = [part.strip() for part in item.split("->")]
            location = _point_text(where, tower)
            got = witnesses.get(location)
            if got is None or parse_poly(got, tower).monic() != parse_poly(conic, tower).monic():
                differ("%s %s" % (key, location), conic, got)


def _read(path, radicands=()):
    definition = read_curve_file(path)
    return extend_tower(definition, radicands) if radicands else definition


def _with_expected(doc, analysis, strict):
    if analysis.definition.expected:
        mismatches = check_expected(analysis, strict)
        doc["expected"] = OrderedDict([("checked", [k for k in analysis.definition.expected if k != "heavy"]),
                                       ("mismatches", mismatches)])
    return doc


def cmd_analyze(path, charts=CHARTS, precision=53, flexes=True, torus=True, radicands=(), strict=False,
                timings=False):
    """Report document of the full pipeline on a curve file."""
    definition = _read(path, radicands)
    analysis = analyze_curve(definition, charts, precision, flexes=flexes, torus=torus, timings=timings)
    return _with_expected(analysis.to_dict(), analysis, strict)


def cmd_flexes(path, label=None, charts=CHARTS, precision=53, radicands=(), pairs=False):
    """Flex report for one component, or for all of them."""
    definition = _read(path, radicands)
    selected = definition.components if label is None else [(label, definition.component(label))]
    doc = OrderedDict([("name", definition.name), ("component_type", definition.component_type)])
    inventories = [component_inventory(l, p, charts, precision) for l, p in selected]
    doc["flexes"] = [inventory_dict(i) for i in inventories]
    exact = [r.location for i in inventories for r in i.records if r.is_exact]
    doc["colinear_triples"] = [[str(exact[k]) for k in triple] for triple in colinear_triples(exact)]
    if pairs:
        out = []
        for inventory in inventories:
            if inventory.degree != 4:
                continue
            single = CurveDefinition(definition.name, definition.tower,
                                     [(inventory.label, definition.component(inventory.label))])
            for (first, second), verdict in flex_pairs(single, inventory.records):
                out.append(OrderedDict([("pair", [str(first), str(second)]), ("verdict", verdict.verdict)]))
        doc["flex_pairs"] = out
    return doc


def cmd_torus_check(path, charts=CHARTS, precision=53, radicands=(), strict=False):
    """Singularities and torus verdict of a sextic."""
    definition = _read(path, radicands)
    analysis = analyze_curve(definition, charts, precision, flexes=False, conical=False)
    doc = analysis.to_dict()
    if analysis.torus is None:
        raise MalformedInput("%s is of degree %d; the torus check needs a sextic"
                             % (definition.name, definition.degree))
    return _with_expected(doc, analysis, strict)


def cmd_conical_flex(path, constraints=None, precision=53, radicands=()):
    """Conical flex report for the `[conics]` section, or for an explicit constraint list."""
    definition = _read(path, radicands)
    doc = OrderedDict([("name", definition.name)])
    doc["conical"] = conical_report(definition, constraints, precision)
    return doc


def cmd_flex_count(degree, config):
    """3n(n-2) minus the table defects of a configuration string."""
    config = Configuration.parse(config)
    return OrderedDict([("degree", degree), ("configuration", str(config)),
                        ("flexes", expected_flex_count(degree, config)),
                        ("tabulated", tabulated_flex_count(degree, config))])


def verify_file(job):
    """Corpus worker: (path, options) -> result entry."""
    path, options = job
    entry = OrderedDict([("file", os.path.basename(path))])
    try:
        definition = read_curve_file(path)
        if options.get("skip_heavy") and definition.is_heavy():
            entry["status"] = "skipped"
            return entry
        if not definition.expected:
            logger.warning("%s has no [expected] block" % path)
        analysis = analyze_curve(definition, options.get("charts", CHARTS), options.get("precision", 53))
        mismatches = check_expected(analysis, options.get("strict", False))
    except SexticaError as e:
        entry["status"] = "error"
        entry["error"] = error_dict(e)
        return entry
    entry["status"] = "fail" if mismatches else "pass"
    if mismatches:
        entry["mismatches"] = mismatches
    return entry


def corpus_files(directory):
    return sorted(glob.glob(os.path.join(directory, "*" + CORPUS_SUFFIX)))


def cmd_verify_corpus(directory, jobs=1, skip_heavy=False, strict=False, charts=CHARTS, precision=53):
    """Check every curve file of a directory against its `[expected]` block."""
    if not os.path.isdir(directory):
        raise MalformedInput("%s is not a directory" % directory)
    paths = corpus_files(directory)
    if not paths:
        logger.warning("0 files in %s" % directory)
    options = dict(skip_heavy=skip_heavy, strict=strict, charts=tuple(charts), precision=precision)
    jobs_list = [(path, options) for path in paths]
    logger.info("Verifying %d corpus files with %d jobs..." % (len(paths), jobs))
    if jobs > 1 and len(paths) > 1:
        with multiprocessing.Pool(processes=min(jobs, len(paths))) as pool:
            results = pool.map(verify_file, jobs_list)
    else:
        results = [verify_file(job) for job in jobs_list]
    doc = OrderedDict()
    doc["files"] = len(results)
    for status in ("pass", "fail", "error", "skipped"):
        doc[status] = sum(1 for r in results if r["status"] == status)
    doc["results"] = results
    return doc


def error_dict(error):
    """Structured error document of a SexticaError."""
    doc = OrderedDict([("error", type(error).__name__), ("message", str(error))])
    for attribute in ("line", "column"):
        value = getattr(error, attribute, None)
        if value is not None:
            doc[attribute] = value
    doc["limit"] = isinstance(error, LimitExceeded)
    return doc
