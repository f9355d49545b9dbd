#
# flex.py
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

"""Flex points, flex defects of singular points and the flex count.

A smooth point P of C is a flex when the tangent line meets C at P with
multiplicity at least 3. In affine coordinates the flexes are the
smooth common zeros of f and

    flex_f = f_xx f_y^2 - 2 f_xy f_x f_y + f_yy f_x^2,

which agrees with the Hessian curve modulo f. The number of flexes of a
curve of degree n without line components is 3n(n-2) minus the sum of
the flex defects of its singular points.

"""

import logging

from .errors import PointNotOnCurve, RequiresExactPoint, SingularPoint, UnknownDefect
from .local import INFINITE, Configuration, check_square_free, local_intersection
from .orbits import AlgebraicPoint, PointOrbit, chart_zeros, contact_orders, intersection_numbers
from .poly import CHART_GENS, CHARTS, MultiPoly, X, Y, Z

logger = logging.getLogger(__name__)


#: Configurations of the curve families whose flex numbers are tabulated,
#: as (degree, configuration, number of flexes).
FLEX_FAMILIES = (
    (5, "[4A2]", 13),
    (5, "[4A2,A1]", 7),
    (5, "[4A2,2A1]", 1),
    (5, "[A5,2A2]", 11),
    (5, "[A5,2A2,A1]", 5),
    (5, "[E6,2A2]", 7),
    (5, "[E6,2A2,A1]", 1),
    (5, "[E6,A5]", 5),
    (5, "[2A5]", 9),
    (5, "[A8,A2]", 10),
    (5, "[A8,A2,A1]", 4),
    (5, "[A11]", 9),
    (4, "[A5]", 6),
    (4, "[2A2]", 8),
    (4, "[2A2,A1]", 2),
    (4, "[E6]", 2),
    (3, "[]", 9),
    (3, "[A1]", 3),
    (3, "[A2]", 1),
)


class FlexRecord(object):
    """A flex point of a curve.

    Attributes
    ----------
    location : AlgebraicPoint
    flex_order : int
        I(C, tangent line; P) - 2.
    tangent_line : MultiPoly or None
        None when the location is only known as a box.
    local_flex_multiplicity : int
        I(C, flex curve; P).
    orbit : PointOrbit
        The conjugate set of flexes the point belongs to.
    """

    def __init__(self, location, flex_order, tangent_line, local_flex_multiplicity, orbit=None):
        self.location = location
        self.flex_order = flex_order
        self.tangent_line = tangent_line
        self.local_flex_multiplicity = local_flex_multiplicity
        self.orbit = orbit

    @property
    def is_exact(self):
        return self.location.is_exact

    def __repr__(self):
        return "FlexRecord(%s, order=%d)" % (self.location, self.flex_order)


def flex_polynomial(f, chart="affine"):
    """f_uu f_v^2 - 2 f_uv f_u f_v + f_vv f_u^2 in the chart's coordinates (u, v)."""
    u, v = CHART_GENS[chart]
    fu = f.diff(u)
    fv = f.diff(v)
    fuu = fu.diff(u)
    fuv = fu.diff(v)
    fvv = fv.diff(v)
    return fuu * fv * fv - fuv * fu * fv * 2 + fvv * fu * fu


def hessian(f):
    """The Hessian determinant of the homogenization of f."""
    F = f.homogenize()
    rows = [[F.diff(a).diff(b) for b in (X, Y, Z)] for a in (X, Y, Z)]
    (a, b, c), (d, e, g), (h, i, k) = rows
    return a * (e * k - g * i) - b * (d * k - g * h) + c * (d * i - e * h)


def table_defect(sing_type):
    """The flex defect of a generic singularity: A1 6, A2 8, A_{3i-1} 9i, E6 22."""
    if sing_type == "A1":
        return 6
    if sing_type == "A2":
        return 8
    if sing_type == "E6":
        return 22
    if sing_type.startswith("A"):
        k = int(sing_type[1:])
        if k >= 5 and (k + 1) % 3 == 0:
            return 9 * ((k + 1) // 3)
    raise UnknownDefect("no generic flex defect is known for %s" % sing_type)


def expected_flex_count(degree, config):
    """3n(n-2) minus the table defects of the configuration."""
    if isinstance(config, str):
        config = Configuration.parse(config)
    return 3 * degree * (degree - 2) - sum(table_defect(t) for t in config.types())


def tabulated_flex_count(degree, config):
    """The flex number FLEX_FAMILIES lists for the configuration, or None."""
    if isinstance(config, str):
        config = Configuration.parse(config)
    for family_degree, family, count in FLEX_FAMILIES:
        if family_degree == degree and Configuration.parse(family) == config:
            return count
    return None


def flex_defect(sing, curve):
    """I(C, flex curve; P) at a singular point, which is the flex defect there.

    Also sets `table_defect` on the record when the table knows the type.
    """
    try:
        sing.table_defect = table_defect(sing.sing_type)
    except UnknownDefect:
        sing.table_defect = None
    chart = sing.location.chart
    local = curve.in_chart(chart)
    flex = flex_polynomial(local, chart)
    if sing.location.is_exact:
        value = local_intersection(local, flex, sing.location)
        return None if value == INFINITE else value
    if sing.orbit is None:
        raise RequiresExactPoint("%s has interval coordinates and no orbit" % sing.location)
    values = set(n for _, n in intersection_numbers(sing.orbit, local, flex))
    if len(values) != 1:
        raise RequiresExactPoint("the conjugates of %s have different defects" % sing.location)
    return values.pop()


def annotate_defects(records, curve):
    """Fill in the defect of every SingularityRecord."""
    for record in records:
        record.defect = flex_defect(record, curve)
    return records


def tangent_line(curve, point):
    """The tangent line of the curve at an exact smooth point.

    Affine lines are returned monic in x, y; the line at infinity is z.
    """
    if not point.is_exact:
        raise RequiresExactPoint("tangent lines need exact coordinates, got %s" % point)
    F = curve.homogenize()
    values = point.projective()
    if not F.evaluate_at(values).is_zero():
        raise PointNotOnCurve("%s does not lie on the curve" % point)
    a, b, c = (F.diff(v).evaluate_at(values) for v in (X, Y, Z))
    if a.is_zero() and b.is_zero():
        if c.is_zero():
            raise SingularPoint("%s is a singular point" % point)
        return MultiPoly.gen(c.tower, Z)
    tower = a.tower
    line = MultiPoly.gen(tower, X).scale(a) + MultiPoly.gen(tower, Y).scale(b) + c
    return line.monic()


def _flex_records(curve, sub, multiplicity, contact, precision):
    out = []
    for location in sub.points(precision):
        line = tangent_line(curve, location) if location.is_exact else None
        out.append(FlexRecord(location, contact - 2, line, multiplicity, sub))
    return out


def flex_points(curve, charts=CHARTS, precision=53):
    """All flexes of a squarefree curve.

    Affine line components are flex curves of themselves; they are divided
    out first, so the result lists the flexes of the remaining factor.
    """
    check_square_free(curve)
    lines = curve.gcd(flex_polynomial(curve))
    if not lines.is_constant():
        logger.warning("Ignoring the line components %s" % lines)
        curve = curve.exquo(lines)
    if curve.total_degree() < 3:
        return []
    records = []
    for chart in charts:
        local = curve.in_chart(chart)
        u, v = CHART_GENS[chart]
        flex = flex_polynomial(local, chart)
        for orbit in chart_zeros([local, flex], chart):
            for part, singular in orbit.split_on(local.diff(u), local.diff(v)):
                if singular:
                    continue
                for sub, multiplicity in intersection_numbers(part, local, flex):
                    for piece, contact in contact_orders(sub, local):
                        if contact is None:
                            continue
                        records.extend(_flex_records(curve, piece, multiplicity, contact, precision))
    records.sort(key=lambda r: r.location.sort_key())
    logger.info("Found %d flexes (%d exact)" % (len(records), sum(1 for r in records if r.is_exact)))
    return records


def is_flex(curve, point):
    """FlexRecord when the smooth point is a flex of the curve, else None."""
    if not point.is_exact:
        raise RequiresExactPoint("is_flex needs exact coordinates, got %s" % point)
    chart = point.chart
    local = curve.in_chart(chart)
    u, v = CHART_GENS[chart]
    orbit = PointOrbit.from_point(point, curve.tower)
    if not local.evaluate_at(_chart_values(point)).is_zero():
        raise PointNotOnCurve("%s does not lie on the curve" % point)
    if all(local.diff(g).evaluate_at(_chart_values(point)).is_zero() for g in (u, v)):
        raise SingularPoint("%s is a singular point" % point)
    (_, contact), = contact_orders(orbit, local)
    if contact is None or contact < 3:
        return None
    flex = flex_polynomial(local, chart)
    multiplicity = local_intersection(local, flex, point)
    return FlexRecord(point, contact - 2, tangent_line(curve, point), multiplicity, orbit)


def _chart_values(point):
    values = [None, None, None]
    for gen, value in zip(CHART_GENS[point.chart], (point.x, point.y)):
        values[(X, Y, Z).index(gen)] = value
    return tuple(values)


def third_intersection(cubic, first, second):
    """The third point of the cubic on the line through two exact affine points.

    When both points agree the line is the tangent there.
    """
    px, py = first.affine()
    if first == second:
        fx = cubic.diff(X).evaluate_at((px, py, None))
        fy = cubic.diff(Y).evaluate_at((px, py, None))
        if fx.is_zero() and fy.is_zero():
            raise SingularPoint("%s is a singular point" % first)
        dx, dy = fy, -fx
    else:
        qx, qy = second.affine()
        dx, dy = qx - px, qy - py
    # cubic restricted to the line as a polynomial in x
    restricted = cubic.linear_change(((dx, 0), (dy, 0)), shift=(px, py))
    c3 = restricted.coeff((3, 0))
    c2 = restricted.coeff((2, 0))
    if not restricted.coeff((0, 0)).is_zero():
        raise PointNotOnCurve("%s does not lie on the cubic" % first)
    if c3.is_zero():
        return AlgebraicPoint.from_projective(dx, dy, 0)
    t = -c2 / c3 if first == second else -c2 / c3 - 1
    return AlgebraicPoint(px + dx * t, py + dy * t)


def _line_labels(used, count):
    labels = []
    primes = 0
    while len(labels) < count:
        label = "B1" + "'" * primes
        if label not in used:
            labels.append(label)
        primes += 1
    return labels


def flex_tangent_sextic(definition, flexes, name=None):
    """The curve together with the tangent lines at the given exact flexes."""
    lines = []
    for flex in flexes:
        if flex.tangent_line is None:
            raise RequiresExactPoint("the flex %s has no exact tangent line" % flex.location)
        lines.append(flex.tangent_line)
    labels = _line_labels(set(definition.labels()), len(lines))
    return definition.with_components(zip(labels, lines), name=name)
