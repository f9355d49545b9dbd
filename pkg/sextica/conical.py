#
# conical.py
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

"""Linear systems of conics, local branches and conical flex points.

A linear system of conics of projective dimension alpha is the span of
alpha + 1 conics. A general smooth point P of a curve B admits a member
meeting B at P with multiplicity alpha; P is a conical flex with respect
to the system when some member reaches alpha + 1.

Contact conditions are always imposed through the local branch
y = t1 x + t2 x^2 + ... of the curve at the point, which turns them into
linear conditions on the conic coefficients.

"""

import logging
import re
from fractions import Fraction
from math import factorial

from sympy.polys.matrices import DomainMatrix

from .errors import (CurveDegreeTooSmall, CurveSyntaxError, DegreeMismatch, EliminationDegenerate, EmptySystem,
                     MalformedInput, NotConicalFlex, PointNotOnCurve, RequiresExactPoint, SingularPoint,
                     VerticalTangentUnresolvable)
from .field import RATIONALS, FieldElement, common_tower
from .local import centered_at
from .orbits import AlgebraicPoint, PointOrbit, common_zeros, taylor_coefficients
from .parser import parse_constant
from .poly import CHART_GENS, MultiPoly, X, Y, Z

logger = logging.getLogger(__name__)

#: Exponents (i, j) of the conic monomials x^i y^j, in coefficient order.
CONIC_MONOMIALS = ((2, 0), (1, 1), (0, 2), (1, 0), (0, 1), (0, 0))


def conic_from_coefficients(tower, coefficients):
    """The conic sum c_k x^i y^j over CONIC_MONOMIALS."""
    return MultiPoly.from_dict(tower, dict(zip(CONIC_MONOMIALS, coefficients)))


def conic_coefficients(conic):
    if conic.total_degree() > 2 or Z in conic.variables():
        raise DegreeMismatch("%s is not a conic" % conic)
    return [conic.coeff(e) for e in CONIC_MONOMIALS]


def conic_rank(conic):
    """Rank of the symmetric 3x3 matrix of the homogenized conic."""
    a, b, c, d, e, f = conic_coefficients(conic)
    tower = conic.tower
    entries = [[a * 2, b, d], [b, c * 2, e], [d, e, f * 2]]
    matrix = DomainMatrix([[tower.convert(v).value for v in row] for row in entries], (3, 3), tower.domain)
    return matrix.rank()


def _chart_monomials(chart):
    """The conic monomials in the local coordinates of `chart`."""
    return [MultiPoly.from_dict(RATIONALS, {(i, j, 2 - i - j): 1}).dehomogenize(chart)
            for i, j in CONIC_MONOMIALS]


class LocalBranch(object):
    """The smooth branch of a curve through an exact point.

    In coordinates centered at the point the branch is
    y = t1 x + t2 x^2 + ... + t_order x^order, or with `swapped`
    x = t1 y + t2 y^2 + ... when the tangent is vertical.

    Attributes
    ----------
    center : AlgebraicPoint
    coefficients : list of FieldElement
        t0 = 0, t1, ..., t_order.
    swapped : bool
    tower : FieldTower
    """

    def __init__(self, center, coefficients, swapped=False, tower=None):
        self.center = center
        self.coefficients = list(coefficients)
        self.swapped = swapped
        self.tower = tower if tower is not None else center.tower

    @property
    def order(self):
        return len(self.coefficients) - 1

    @property
    def tangent(self):
        """Direction (dx, dy) of the tangent line in the chart coordinates."""
        one = self.tower.one
        t1 = self.t(1) if self.order >= 1 else self.tower.zero
        return (t1, one) if self.swapped else (one, t1)

    def t(self, i):
        return self.coefficients[i]

    def series(self, order=None):
        """The truncated series as a polynomial in x."""
        order = self.order if order is None else order
        return MultiPoly.from_dict(self.tower, dict(((i, 0), c) for i, c in enumerate(self.coefficients[:order + 1])))

    def restrict(self, poly, order=None, local=False):
        """Coefficients of x^0 ... x^order of poly along the branch.

        `poly` is an affine polynomial, or one already written in the
        center's chart coordinates when `local` is set.
        """
        order = self.order if order is None else order
        if order > self.order:
            raise ValueError("the branch is only known to order %d" % self.order)
        tower = common_tower(self.tower, poly.tower)
        g = centered_at(poly, self.center, tower, local)
        if self.swapped:
            g = g.linear_change(((0, 1), (1, 0)))
        composed = g.compose(MultiPoly.gen(tower, X), self.series(order).embed(tower))
        return [composed.coeff((j, 0)) for j in range(order + 1)]

    def __repr__(self):
        return "LocalBranch(%s, %s%s)" % (self.center, [str(c) for c in self.coefficients],
                                          ", swapped" if self.swapped else "")


def local_branch(curve, point, order, swap=True):
    """Series coefficients of the branch of `curve` through a smooth exact point.

    The coefficients are found one at a time from the vanishing of the
    x^n coefficient of curve(x, t1 x + ... + tn x^n).
    """
    if not point.is_exact:
        raise RequiresExactPoint("local branches need exact coordinates, got %s" % point)
    tower = common_tower(curve.tower, point.tower)
    g = centered_at(curve, point, tower)
    if not g.coeff((0, 0)).is_zero():
        raise PointNotOnCurve("%s does not lie on %s" % (point, curve))
    swapped = False
    lead = g.coeff((0, 1))
    if lead.is_zero():
        if g.coeff((1, 0)).is_zero():
            raise SingularPoint("%s is a singular point of %s" % (point, curve))
        if not swap:
            raise VerticalTangentUnresolvable("the tangent at %s is vertical" % point)
        swapped = True
        g = g.linear_change(((0, 1), (1, 0)))
        lead = g.coeff((0, 1))
    x = MultiPoly.gen(tower, X)
    coefficients = [tower.zero]
    for n in range(1, order + 1):
        series = MultiPoly.from_dict(tower, dict(((i, 0), c) for i, c in enumerate(coefficients)))
        value = g.compose(x, series).coeff((n, 0))
        coefficients.append(-value / lead)
    logger.debug("Branch at %s: %s" % (point, ", ".join(str(c) for c in coefficients[1:])))
    return LocalBranch(point, coefficients, swapped, tower)


def contact_invariants(branch):
    """(t2, J0) with J0 = -3 t4 t3 t2 + 2 t3^3 + t5 t2^2.

    The branch is read in coordinates where the tangent is y = 0; the
    shear y -> y - t1 x gets there without changing t2, ..., t5.
    """
    if branch.order < 5:
        raise ValueError("contact invariants need a branch of order 5, got %d" % branch.order)
    t2, t3, t4, t5 = (branch.t(i) for i in (2, 3, 4, 5))
    return t2, -t4 * t3 * t2 * 3 + t3 * t3 * t3 * 2 + t5 * t2 * t2


class ConicConstraint(object):
    """A linear condition on conics at one point.

    kind "through": the conic passes through the point.
    kind "tangent": the conic is tangent to the tangent cone of `curve`
        at the point, which must be the power of a line there.
    kind "contact": the conic meets the smooth branch of `curve` at the
        point with multiplicity at least `order`.

    The point is an AlgebraicPoint, or a PointOrbit standing for all of
    its conjugate points.
    """

    THROUGH = "through"
    TANGENT = "tangent"
    CONTACT = "contact"

    def __init__(self, kind, point, curve=None, order=1, sing_type=None, label=None):
        self.kind = kind
        self.point = point
        self.curve = curve
        self.order = order
        self.sing_type = sing_type
        self.label = label

    @classmethod
    def through(cls, point):
        return cls(cls.THROUGH, point)

    @classmethod
    def tangent(cls, point, curve, sing_type=None, label=None):
        return cls(cls.TANGENT, point, curve, 2, sing_type, label)

    @classmethod
    def contact(cls, point, curve, order, label=None):
        return cls(cls.CONTACT, point, curve, order, label=label)

    def __str__(self):
        where = self.point if isinstance(self.point, AlgebraicPoint) else "%r" % self.point
        if self.kind == self.THROUGH:
            return "through %s" % where
        if self.kind == self.TANGENT:
            return "tangent to %s at %s" % (self.label or "the curve", where)
        return "contact %d with %s at %s" % (self.order, self.label or "the curve", where)

    def rows(self):
        """Rows r with sum r_k c_k = 0 for the conic coefficients c (CONIC_MONOMIALS order)."""
        if self.kind == self.CONTACT and self.order > 2:
            if not isinstance(self.point, AlgebraicPoint) or not self.point.is_exact:
                raise RequiresExactPoint("contact of order %d needs an exact point" % self.order)
            return self._branch_rows()
        orbit = self.point
        if isinstance(orbit, AlgebraicPoint):
            orbit = PointOrbit.from_point(orbit, self.curve.tower if self.curve is not None else None)
        rows = _passage_rows(orbit)
        if self.kind == self.THROUGH or self.order < 2:
            return rows
        return rows + _tangent_rows(orbit, self.curve, self.sing_type)

    def _branch_rows(self):
        branch = local_branch(self.curve, self.point, self.order - 1)
        chart = self.point.chart
        columns = [branch.restrict(m, local=True) for m in _chart_monomials(chart)]
        return [[column[j] for column in columns] for j in range(self.order)]


def _residue_rows(residues, orbit):
    """Rows of sum c_k residues[k] = 0 modulo the orbit's modulus."""
    K = orbit.tower.domain
    reps = [r.rem(orbit.modulus).as_dict(native=True) for r in residues]
    return [[FieldElement(orbit.tower, rep.get((k,), K.zero)) for rep in reps] for k in range(orbit.degree)]


def _passage_rows(orbit):
    orbit, planes = orbit.align(*_chart_monomials(orbit.chart))
    return _residue_rows([orbit.value(p) for p in planes], orbit)


def _cone_vectors(a, sing_type, modulus):
    """Vectors parallel to (l, m) for a tangent cone (l u + m v)^k."""
    if sing_type is None:
        raise ValueError("the singularity type is needed for a set of conjugate points")
    if sing_type == "smooth":
        return [(a[(1, 0)], a[(0, 1)])]
    if sing_type.startswith("E"):
        return [((a[(3, 0)] * 3).rem(modulus), a[(2, 1)]), (a[(1, 2)], (a[(0, 3)] * 3).rem(modulus))]
    return [((a[(2, 0)] * 2).rem(modulus), a[(1, 1)]), (a[(1, 1)], (a[(0, 2)] * 2).rem(modulus))]


def _exact_cone_type(curve, point):
    local = centered_at(curve, point, common_tower(curve.tower, point.tower))
    for degree, kind in ((1, "smooth"), (2, "A"), (3, "E")):
        if any(not local.coeff((i, degree - i)).is_zero() for i in range(degree + 1)):
            return kind
    raise ValueError("the tangent cone at %s has degree above 3" % point)


def _tangent_rows(orbit, curve, sing_type):
    chart = orbit.chart
    u, v = CHART_GENS[chart]
    local = curve.in_chart(chart)
    if sing_type is None and orbit.degree == 1:
        sing_type = _exact_cone_type(curve, orbit.exact_point())
    rows = []
    for sub, a in taylor_coefficients(orbit, local, 3):
        monomials = [m.embed(sub.tower) for m in _chart_monomials(chart)]
        gradients = [(sub.value(m.diff(u).plane(chart)), sub.value(m.diff(v).plane(chart))) for m in monomials]
        for lam, mu in _cone_vectors(a, sing_type, sub.modulus):
            rows.extend(_residue_rows([gu * mu - gv * lam for gu, gv in gradients], sub))
    return rows


class ConicSystem(object):
    """A linear system of conics cut out by constraints.

    Attributes
    ----------
    tower : FieldTower
    vectors : list of list of FieldElement
        Reduced row echelon basis of the coefficient vectors.
    basis : list of MultiPoly
        The conics of `vectors`.
    constraints : list of ConicConstraint
    alpha : int
        Projective dimension, len(basis) - 1.
    """

    def __init__(self, tower, vectors, constraints=(), rows=()):
        self.tower = tower
        self.vectors = [list(v) for v in vectors]
        self.basis = [conic_from_coefficients(tower, v) for v in self.vectors]
        self.constraints = list(constraints)
        self.rows = list(rows)

    @property
    def alpha(self):
        return len(self.vectors) - 1

    def member(self, params):
        """sum params_i basis_i."""
        if len(params) != len(self.basis):
            raise ValueError("a member of a system of dimension %d needs %d parameters"
                             % (self.alpha, len(self.basis)))
        total = MultiPoly.constant(self.tower, 0)
        for p, b in zip(params, self.basis):
            total = total + b.scale(p)
        return total

    def contains(self, conic):
        if conic.total_degree() > 2:
            return False
        c = conic_coefficients(conic)
        return all(sum((r * ck for r, ck in zip(row, c)), self.tower.zero).is_zero() for row in self.rows)

    def with_constraints(self, extra):
        return conic_linear_system(self.constraints + list(extra), self.tower)

    def __repr__(self):
        return "ConicSystem(alpha=%d, %d constraints)" % (self.alpha, len(self.constraints))


def conic_linear_system(constraints, tower=None):
    """The system of conics satisfying every constraint.

    Raises EmptySystem when only the zero conic is left.
    """
    rows = []
    for constraint in constraints:
        rows.extend(constraint.rows())
    tower = RATIONALS if tower is None else tower
    for row in rows:
        for entry in row:
            tower = common_tower(tower, entry.tower)
    K = tower.domain
    if rows:
        matrix = DomainMatrix([[tower.convert(e).value for e in row] for row in rows], (len(rows), 6), K)
        kernel = matrix.nullspace()
        if kernel.shape[0] == 0:
            raise EmptySystem("no conic satisfies %s" % "; ".join(str(c) for c in constraints))
        reduced, _ = kernel.rref()
        vectors = [[FieldElement(tower, v) for v in row] for row in reduced.to_list()]
    else:
        vectors = [[tower.one if i == j else tower.zero for i in range(6)] for j in range(6)]
    system = ConicSystem(tower, vectors, constraints, rows)
    logger.debug("Linear system of conics of dimension %d from %d conditions" % (system.alpha, len(rows)))
    return system


def _check_curve(curve, system):
    degree = curve.total_degree()
    if degree < 2 or (degree == 2 and system.contains(curve)):
        raise CurveDegreeTooSmall("%s has unbounded contact with a member of the system" % curve)


def _contact_matrix(branch, system):
    chart = branch.center.chart
    monomials = _chart_monomials(chart)
    columns = []
    for vector in system.vectors:
        conic = MultiPoly.constant(system.tower, 0)
        for c, m in zip(vector, monomials):
            conic = conic + m.embed(system.tower).scale(c)
        columns.append(branch.restrict(conic, system.alpha, local=True))
    return [[column[j] for column in columns] for j in range(system.alpha + 1)]


def is_conical_flex(curve, system, point):
    """(True, witness conic) when a member meets the curve at the point with
    multiplicity at least alpha + 1, else (False, None)."""
    _check_curve(curve, system)
    branch = local_branch(curve, point, system.alpha)
    entries = _contact_matrix(branch, system)
    tower = common_tower(system.tower, branch.tower)
    size = system.alpha + 1
    matrix = DomainMatrix([[tower.convert(e).value for e in row] for row in entries], (size, size), tower.domain)
    kernel = matrix.nullspace()
    if kernel.shape[0] == 0:
        return False, None
    reduced, _ = kernel.rref()
    params = [FieldElement(tower, v) for v in reduced.to_list()[0]]
    witness = system.member(params).monic()
    if conic_rank(witness) < 3:
        logger.info("The conic %s at %s is degenerate" % (witness, point))
    return True, witness


def osculating_member(curve, system, point):
    """A member of the system with contact at least alpha + 1 at the point, made monic."""
    found, witness = is_conical_flex(curve, system, point)
    if not found:
        raise NotConicalFlex("%s is not a conical flex with respect to %r" % (point, system))
    return witness


def _implicit_numerators(f, order):
    """N_k with t_k = N_k / f_y^(2k-1) along the branches of f, k = 1..order."""
    fx = f.diff(X)
    fy = f.diff(Y)
    fxy = fx.diff(Y)
    fyy = fy.diff(Y)
    numerators = []
    derivative = -fx
    for k in range(1, order + 1):
        numerators.append(derivative.scale(Fraction(1, factorial(k))))
        m = 2 * k - 1
        derivative = ((derivative.diff(X) * fy - fx * derivative.diff(Y)) * fy
                      - (derivative * (fxy * fy - fx * fyy)).scale(m))
    return numerators


def _polynomial_determinant(entries, tower):
    ring = tower.domain[X, Y]
    size = len(entries)

    def element(p):
        return ring.ring.from_dict(dict(((i, j), c) for (i, j, _), c in p.native_terms().items()))
    matrix = DomainMatrix([[element(p) for p in row] for row in entries], (size, size), ring)
    det = matrix.det()
    return MultiPoly.from_native(tower, dict(((i, j, 0), c) for (i, j), c in det.items()))


def conical_flex_eliminant(curve, system):
    """D(x, y) whose common zeros with the curve contain every affine conical flex.

    With x = f_y^2 s and the branch written as f_y * (N_1 s + N_2 s^2 + ...),
    the coefficient of s^j of a member is f_y^(2j) times its x^j
    coefficient; D is the determinant of these coefficients over the basis.
    """
    _check_curve(curve, system)
    alpha = system.alpha
    tower = common_tower(curve.tower, system.tower)
    f = curve.embed(tower)
    fy = f.diff(Y)
    z = MultiPoly.gen(tower, Z)
    psi = MultiPoly.constant(tower, 0)
    for k, n in enumerate(_implicit_numerators(f, alpha), 1):
        psi = psi + n * z ** k
    new_x = MultiPoly.gen(tower, X) + fy * fy * z
    new_y = MultiPoly.gen(tower, Y) + fy * psi
    entries = [[None] * (alpha + 1) for _ in range(alpha + 1)]
    for i, b in enumerate(system.basis):
        composed = b.embed(tower).compose(new_x, new_y)
        by_power = {}
        for (a, c, e), value in composed.native_terms().items():
            if e <= alpha:
                by_power.setdefault(e, {})[(a, c, 0)] = value
        for j in range(alpha + 1):
            entries[j][i] = MultiPoly.from_native(tower, by_power.get(j, {}))
    eliminant = _polynomial_determinant(entries, tower)
    logger.info("Conical flex eliminant of total degree %d" % eliminant.total_degree())
    return eliminant


def conical_flex_points(curve, system, precision=53):
    """Affine conical flex points of the curve with respect to the system.

    Singular points of the curve and base points of the system are
    excluded. Points with a vertical tangent are decided directly when
    exact; points outside the tower are returned as certified boxes.
    """
    eliminant = conical_flex_eliminant(curve, system)
    if eliminant.is_zero():
        raise EliminationDegenerate("every point of %s is a conical flex" % curve)
    tower = common_tower(curve.tower, system.tower)
    f = curve.embed(tower)
    fy = f.diff(Y)
    try:
        zeros = common_zeros([f, eliminant], "affine")
    except EliminationDegenerate as e:
        raise EliminationDegenerate("the eliminant shares a component with the curve: %s" % e)
    found = []
    for orbit in zeros:
        for part, vertical in orbit.split_on(fy):
            for piece, base in part.split_on(*system.basis):
                if base:
                    logger.debug("Skipping %r at base points of the system" % piece)
                    continue
                for point in piece.points(precision):
                    if not point.is_exact:
                        if vertical:
                            logger.debug("Skipping %s where f_y vanishes" % point)
                        else:
                            found.append(point)
                        continue
                    try:
                        flex, _ = is_conical_flex(f, system, point)
                    except SingularPoint:
                        continue
                    if flex:
                        found.append(point)
    found.sort(key=AlgebraicPoint.sort_key)
    logger.info("Found %d conical flex points (%d exact)" % (len(found), sum(1 for p in found if p.is_exact)))
    return found


_THROUGH = re.compile(r"^through\s*\((.+)\)$")
_CONTACT = re.compile(r"^contact\s+(\d+)\s+with\s+(\S+)\s+at\s*\((.+)\)$")
_TANGENT = re.compile(r"^tangent\s+to\s+(\S+)\s+at\s*\((.+)\)$")


def parse_point(text, tower):
    """An exact point from "a, b" (affine) or "a : b : c" (projective)."""
    if ":" in text:
        parts = [parse_constant(p.strip(), tower) for p in text.split(":")]
        if len(parts) != 3:
            raise CurveSyntaxError("a projective point has three coordinates: %s" % text)
        return AlgebraicPoint.from_projective(*parts)
    parts = [parse_constant(p.strip(), tower) for p in text.split(",")]
    if len(parts) != 2:
        raise CurveSyntaxError("an affine point has two coordinates: %s" % text)
    return AlgebraicPoint(*parts)


def parse_constraints(text, definition):
    """ConicConstraints from "through (a, b); contact 3 with B4 at (1, 0); ..."."""
    constraints = []
    for item in text.split(";"):
        item = item.strip()
        if not item:
            continue
        match = _THROUGH.match(item)
        if match:
            constraints.append(ConicConstraint.through(parse_point(match.group(1), definition.tower)))
            continue
        match = _CONTACT.match(item)
        if match:
            order, label, where = match.groups()
            point = parse_point(where, definition.tower)
            constraints.append(ConicConstraint.contact(point, definition.component(label), int(order), label))
            continue
        match = _TANGENT.match(item)
        if match:
            label, where = match.groups()
            point = parse_point(where, definition.tower)
            constraints.append(ConicConstraint.tangent(point, definition.component(label), label=label))
            continue
        raise CurveSyntaxError("cannot read the conic constraint %r" % item)
    return constraints


def system_from_definition(definition, constraints=None):
    """(reference curve, ConicSystem) from the [conics] section or an explicit constraint list."""
    conics = definition.conics
    label = conics.get("curve")
    if label is None:
        raise MalformedInput("%s names no reference curve for conical flexes" % definition.name)
    text = constraints if constraints is not None else conics.get("constraint", "")
    system = conic_linear_system(parse_constraints(text, definition), definition.tower)
    return definition.component(label), system
