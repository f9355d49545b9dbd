#
# local.py
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

"""Singular points, local intersection numbers and the configuration of a curve.

"""

import logging
import re
from collections import Counter

from .errors import MalformedInput, NotSimple, NotSingular, NotSquareFree, RequiresExactPoint
from .field import common_tower
from .orbits import AlgebraicPoint, PointOrbit, chart_zeros, classify, intersection_numbers
from .poly import CHART_GENS, CHARTS, MultiPoly, X, Y

logger = logging.getLogger(__name__)

INFINITE = float("inf")

__all__ = ["AlgebraicPoint", "SingularityRecord", "Configuration", "INFINITE", "singular_points",
           "singular_orbits", "centered_at", "intersection_multiplicity", "local_intersection", "milnor_number",
           "classify_simple_singularity", "analyze_singularities", "configuration", "check_square_free"]


class SingularityRecord(object):
    """One singular point of a curve.

    Attributes
    ----------
    location : AlgebraicPoint
    sing_type : str
        "A1", "A5", "D4", "E6", ... or "NotSimple".
    milnor : int or None
    defect : int or None
        The local flex defect, filled in by the flex module.
    components : tuple of str
        Labels of the components through the point.
    orbit : PointOrbit
        The conjugate set the point was found in.
    """

    def __init__(self, location, sing_type, milnor, defect=None, components=(), orbit=None):
        self.location = location
        self.sing_type = sing_type
        self.milnor = milnor
        self.defect = defect
        self.table_defect = None
        self.components = tuple(components)
        self.orbit = orbit
        self.intersections = {}

    @property
    def chart(self):
        return self.location.chart

    @property
    def generic(self):
        """Whether the computed defect agrees with the generic table value."""
        if self.defect is None or self.table_defect is None:
            return None
        return self.defect == self.table_defect

    def __repr__(self):
        return "SingularityRecord(%s, %s)" % (self.sing_type, self.location)


_ENTRY = re.compile(r"^(\d*)([ADE])(\d+)$")
_FAMILY_ORDER = {"E": 0, "D": 1, "A": 2}


def _type_key(sing_type):
    if sing_type == "NotSimple":
        return (3, 0)
    return (_FAMILY_ORDER[sing_type[0]], -int(sing_type[1:]))


class Configuration(object):
    """The multiset Sigma(C) of singularity types.

    Renders canonically as "[E6,2A5,2A1]": E-types, then D-types, then
    A-types, each by descending index, with multiplicities as prefixes.
    """

    def __init__(self, types=(), incomplete=False):
        self.counts = Counter(types)
        self.incomplete = incomplete or self.counts.get("NotSimple", 0) > 0

    @classmethod
    def parse(cls, text):
        """Parse "[2A5,2A2,3A1]", "[3A5+3A1]" or "2A_5, A_{11}"."""
        body = re.sub(r"[\s_{}]", "", text.strip())
        if body.startswith("[") and body.endswith("]"):
            body = body[1:-1]
        types = []
        for item in filter(None, re.split(r"[,+]", body)):
            if item == "NotSimple":
                types.append(item)
                continue
            match = _ENTRY.match(item)
            if match is None:
                raise MalformedInput("cannot read the singularity %r" % item)
            count = int(match.group(1) or 1)
            types.extend([match.group(2) + match.group(3)] * count)
        return cls(types)

    def types(self):
        return sorted(self.counts.elements(), key=_type_key)

    def milnor_total(self):
        return sum(int(t[1:]) * n for t, n in self.counts.items() if t != "NotSimple")

    def __len__(self):
        return sum(self.counts.values())

    def __eq__(self, other):
        if isinstance(other, str):
            other = Configuration.parse(other)
        if not isinstance(other, Configuration):
            return NotImplemented
        return self.counts == other.counts

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __str__(self):
        entries = []
        for t in sorted(self.counts, key=_type_key):
            n = self.counts[t]
            entries.append(t if n == 1 else "%d%s" % (n, t))
        return "[%s]" % ",".join(entries)

    def __repr__(self):
        return "Configuration(%s)" % str(self)


def check_square_free(curve):
    """Raise NotSquareFree when the curve has a repeated component."""
    if curve.is_constant():
        raise MalformedInput("a constant does not define a curve")
    common = curve.gcd(curve.diff(X)).gcd(curve.diff(Y))
    if not common.is_constant():
        raise NotSquareFree("%s is a repeated component" % common)


def singular_orbits(curve, charts=CHARTS):
    """Conjugate sets of singular points, chart by chart."""
    check_square_free(curve)
    orbits = []
    for chart in charts:
        local = curve.in_chart(chart)
        u, v = CHART_GENS[chart]
        found = chart_zeros([local, local.diff(u), local.diff(v)], chart)
        logger.debug("%d singular points in the chart %s" % (sum(o.degree for o in found), chart))
        orbits.extend(found)
    return orbits


def singular_points(curve, charts=CHARTS, precision=53):
    """All singular points of a squarefree curve.

    Points are exact when their coordinates lie in the tower (or in a
    quadratic extension of it) and certified boxes otherwise.
    """
    points = []
    for orbit in singular_orbits(curve, charts):
        points.extend(orbit.points(precision))
    return sorted(points, key=AlgebraicPoint.sort_key)


def centered_at(curve, point, tower, local=False):
    """The curve in the point's chart, translated so the point is the origin.

    With `local` the curve is already written in the chart's coordinates.
    """
    if not local:
        curve = curve.in_chart(point.chart)
    plane = MultiPoly.from_plane(tower, curve.embed(tower).plane(point.chart))
    return plane.translate(point.x, point.y)


def _order_at_zero(p):
    """Largest k with x^k | p for a nonzero univariate p in x."""
    return min(e[0] for e in p.native_terms())


def _fulton(f, g):
    """I(f, g; origin) by Fulton's algorithm."""
    tower = f.tower
    x = MultiPoly.gen(tower, X)
    y = MultiPoly.gen(tower, Y)
    total = 0
    while True:
        if f.is_zero() or g.is_zero():
            return INFINITE
        if not f.coeff((0, 0)).is_zero() or not g.coeff((0, 0)).is_zero():
            return total
        f0 = f.substitute(Y, 0)
        g0 = g.substitute(Y, 0)
        if f0.is_zero() and g0.is_zero():
            return INFINITE
        if f0.is_zero():
            f, g, f0, g0 = g, f, g0, f0
        if g0.is_zero():
            # y divides g: I(f, y h) = ord f(x, 0) + I(f, h)
            total += _order_at_zero(f0)
            g = g.exquo(y)
            continue
        r = f0.degree(X)
        s = g0.degree(X)
        if r > s:
            f, g, f0, g0, r, s = g, f, g0, f0, s, r
        lead_f = f0.coeff((r, 0))
        lead_g = g0.coeff((s, 0))
        g = g.scale(lead_f) - (f * x ** (s - r)).scale(lead_g)


def intersection_multiplicity(f, g, point):
    """Local intersection number I(f, g; P) at an exact point, INFINITE on a common component."""
    if not point.is_exact:
        raise RequiresExactPoint("intersection numbers need exact coordinates, got %s" % point)
    tower = common_tower(common_tower(f.tower, g.tower), point.tower)
    return _fulton(centered_at(f, point, tower), centered_at(g, point, tower))


def local_intersection(f_local, g_local, point):
    """As intersection_multiplicity, for polynomials already in the point's chart coordinates."""
    if not point.is_exact:
        raise RequiresExactPoint("intersection numbers need exact coordinates, got %s" % point)
    tower = common_tower(common_tower(f_local.tower, g_local.tower), point.tower)
    return _fulton(centered_at(f_local, point, tower, local=True), centered_at(g_local, point, tower, local=True))


def _is_singular_at(curve, point, tower):
    local = centered_at(curve, point, tower)
    return all(local.coeff(e).is_zero() for e in ((0, 0), (1, 0), (0, 1)))


def milnor_number(f, point):
    """mu = I(f_x, f_y; P) at an exact singular point."""
    if not point.is_exact:
        raise RequiresExactPoint("the Milnor number needs exact coordinates, got %s" % point)
    tower = common_tower(f.tower, point.tower)
    if not _is_singular_at(f, point, tower):
        raise NotSingular("%s is not a singular point" % point)
    local = centered_at(f, point, tower)
    return _fulton(local.diff(X), local.diff(Y))


def classify_simple_singularity(f, point):
    """SingularityRecord of the simple singularity of f at an exact point."""
    orbit = PointOrbit.from_point(point, f.tower)
    results = classify(orbit, f.in_chart(point.chart))
    (_, sing_type, mu), = results
    if sing_type == "NotSimple":
        raise NotSimple("the singularity at %s is not simple (mu = %s)" % (point, mu))
    return SingularityRecord(point, sing_type, mu, orbit=orbit)


def _components_of(curve):
    if hasattr(curve, "components"):
        return list(curve.components), curve.product()
    return [("C", curve)], curve


def _membership(orbit, locals_):
    """[(sub-orbit, [indices of components through it])]."""
    parts = [(orbit, [])]
    for k, local in enumerate(locals_):
        refined = []
        for sub, through in parts:
            for piece, on in sub.split_on(local):
                refined.append((piece, through + [k] if on else through))
        parts = refined
    return parts


def _smooth_parts(orbit, local, chart):
    """[(sub-orbit, True iff the component is smooth there)]."""
    u, v = CHART_GENS[chart]
    return [(piece, not singular) for piece, singular in orbit.split_on(local.diff(u), local.diff(v))]


def _classify_part(part, through, locals_, labels):
    """[(sub-orbit, type, mu, {pair: I})] for points on the given components."""
    chart = part.chart
    pairs = [(i, j) for n, i in enumerate(through) for j in through[n + 1:]]
    if len(through) == 2:
        i, j = through
        results = []
        for piece, smooth_i in _smooth_parts(part, locals_[i], chart):
            for sub, smooth_j in _smooth_parts(piece, locals_[j], chart):
                if smooth_i and smooth_j:
                    for final, number in intersection_numbers(sub, locals_[i], locals_[j]):
                        results.append((final, "A%d" % (2 * number - 1), 2 * number - 1,
                                        {(labels[i], labels[j]): number}))
                else:
                    results.extend(_classify_product(sub, through, locals_, labels, pairs))
        return results
    return _classify_product(part, through, locals_, labels, pairs)


def _classify_product(part, through, locals_, labels, pairs):
    product = locals_[through[0]]
    for k in through[1:]:
        product = product * locals_[k]
    results = []
    for sub, sing_type, mu in classify(part, product):
        numbers = [{}]
        for i, j in pairs:
            extended = []
            for found in numbers:
                for final, number in intersection_numbers(sub, locals_[i], locals_[j]):
                    entry = dict(found)
                    entry[(labels[i], labels[j])] = number
                    extended.append(entry)
            numbers = extended
        for entry in numbers:
            results.append((sub, sing_type, mu, entry))
    return results


def analyze_singularities(curve, charts=CHARTS, precision=53):
    """SingularityRecords for every singular point of a curve or a CurveDefinition.

    A point on exactly two components, smooth on both, with intersection
    number I is an A_{2I-1}; every other point is classified on the
    product of the components through it.
    """
    components, product = _components_of(curve)
    labels = [label for label, _ in components]
    logger.info("Analyzing singular points...")
    records = []
    for chart in charts:
        locals_ = [poly.in_chart(chart) for _, poly in components]
        for orbit in singular_orbits(product, (chart,)):
            for part, through in _membership(orbit, locals_):
                for sub, sing_type, mu, numbers in _classify_part(part, through, locals_, labels):
                    names = [labels[k] for k in through]
                    for location in sub.points(precision):
                        record = SingularityRecord(location, sing_type, mu, components=names, orbit=sub)
                        record.intersections = numbers
                        records.append(record)
    records.sort(key=lambda r: r.location.sort_key())
    _check_bezout(components, records, charts)
    return records


def _check_bezout(components, records, charts):
    for n, (label_i, poly_i) in enumerate(components):
        for label_j, poly_j in components[n + 1:]:
            total = sum(r.intersections.get((label_i, label_j), 0) for r in records)
            expected = poly_i.total_degree() * poly_j.total_degree()
            if total == expected:
                logger.debug("%s and %s meet in %d points with multiplicity" % (label_i, label_j, total))
            elif tuple(charts) == CHARTS:
                logger.warning("%s and %s meet with total multiplicity %d, expected %d"
                               % (label_i, label_j, total, expected))
            else:
                logger.info("%s and %s meet with multiplicity %d in the charts %s (%d projectively)"
                            % (label_i, label_j, total, ",".join(charts), expected))


def configuration(curve, charts=CHARTS, records=None):
    """Sigma(C) of a curve or a CurveDefinition."""
    if records is None:
        records = analyze_singularities(curve, charts)
    config = Configuration(r.sing_type for r in records)
    if config.incomplete:
        logger.warning("The curve has non-simple singularities; its configuration is incomplete")
    return config
