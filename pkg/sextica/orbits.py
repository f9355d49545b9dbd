#
# orbits.py
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

"""Sets of conjugate points and exact computations on them.

A point whose coordinates leave the tower is never approximated while
it is being analyzed. Instead the whole set of its conjugates is kept
as a `PointOrbit`

    {(X(t), Y(t)) : E(t) = 0},

i.e. coordinates in the residue ring K[t]/(E). Zero tests in that ring
either succeed, fail, or discover a proper factor of E; in the last case
the computation is restarted on both factors ("dynamic evaluation").
Only at the very end are orbits turned into points, exact when E has
linear (or, after a tower extension, quadratic) factors and certified
boxes otherwise.

"""

import logging
from math import factorial

from sympy import Poly, QQ, binomial, symbols

from .errors import EliminationDegenerate, NotSingular, RequiresExactPoint
from .field import RATIONALS, FieldElement, common_tower, format_element
from .poly import CHART_GENS, MultiPoly, X, Y, isolate_roots

logger = logging.getLogger(__name__)

T = symbols("t")

#: Shears x -> x + s*y tried in turn until the projection separates points.
SHEARS = (0, 1, -1, 2, -2, 3, -3, 5, -5, 7, 11, -13, 17, 23)


class AlgebraicPoint(object):
    """A point of the projective plane in one of the standard charts.

    Attributes
    ----------
    x, y : FieldElement or ComplexInterval
        The chart's local coordinates: (x, y) in the chart "affine",
        (x, z) in the chart "y=1" and (y, z) in the chart "x=1".
    chart : str
        One of "affine", "y=1", "x=1".
    """

    __slots__ = ("x", "y", "chart")

    def __init__(self, x, y, chart="affine"):
        self.x = x
        self.y = y
        self.chart = chart

    @classmethod
    def from_projective(cls, px, py, pz):
        """The point (px : py : pz) of exact homogeneous coordinates in its first chart."""
        px, py, pz = (c if isinstance(c, FieldElement) else RATIONALS.convert(c) for c in (px, py, pz))
        if not pz.is_zero():
            return cls(px / pz, py / pz)
        if not py.is_zero():
            return cls(px / py, pz / py, "y=1")
        if px.is_zero():
            raise ValueError("(0 : 0 : 0) is not a point")
        return cls(py / px, pz / px, "x=1")

    @property
    def is_exact(self):
        return isinstance(self.x, FieldElement) and isinstance(self.y, FieldElement)

    def affine(self):
        """(x, y) of an affine point."""
        if self.chart != "affine":
            raise ValueError("%s lies at infinity" % self)
        return self.x, self.y

    @property
    def tower(self):
        if not self.is_exact:
            raise RequiresExactPoint("%s has interval coordinates" % self)
        return common_tower(self.x.tower, self.y.tower)

    @property
    def at_infinity(self):
        return self.chart != "affine"

    def projective(self):
        """Homogeneous coordinates (X, Y, Z)."""
        if self.chart == "affine":
            return (self.x, self.y, 1)
        if self.chart == "y=1":
            return (self.x, 1, self.y)
        return (1, self.x, self.y)

    def __eq__(self, other):
        if not isinstance(other, AlgebraicPoint):
            return NotImplemented
        if not (self.is_exact and other.is_exact):
            return self is other
        return self.chart == other.chart and self.x == other.x and self.y == other.y

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        if not self.is_exact:
            return id(self)
        return hash((self.chart, self.x, self.y))

    def coordinate_text(self):
        return [format_element(c) if isinstance(c, FieldElement) else str(c) for c in (self.x, self.y)]

    def __str__(self):
        a, b = self.coordinate_text()
        if self.chart == "affine":
            return "(%s, %s)" % (a, b)
        if self.chart == "y=1":
            return "(%s : 1 : %s)" % (a, b)
        return "(1 : %s : %s)" % (a, b)

    def __repr__(self):
        return "AlgebraicPoint%s" % str(self)

    def sort_key(self):
        charts = {"affine": 0, "y=1": 1, "x=1": 2}
        if self.is_exact:
            return (charts[self.chart], 0, self.x.tower.depth, str(self))
        re, im = self.x.midpoint()
        return (charts[self.chart], 1, 0, float(re), float(im), str(self))


class _Split(Exception):
    """A zero test found a proper factor of the modulus."""

    def __init__(self, factor):
        Exception.__init__(self, "modulus splits")
        self.factor = factor


class _Retry(Exception):
    """The current shear does not separate the points; try the next one."""


def _split_run(modulus, fn):
    """Run fn(E) for E = modulus, restarting on both factors on every split."""
    pending = [modulus.monic()]
    results = []
    while pending:
        e = pending.pop()
        try:
            results.extend(fn(e))
        except _Split as split:
            g = split.factor.monic()
            rest = e.exquo(g).monic()
            logger.debug("Split a conjugate set of degree %d into %d + %d" % (e.degree(), g.degree(), rest.degree()))
            pending.append(rest)
            pending.append(g)
    return results


def _const(K, c):
    return Poly.from_dict({(0,): c}, T, domain=K)


def _is_zero(a, modulus):
    a = a.rem(modulus)
    if a.is_zero:
        return True
    g = a.gcd(modulus)
    if g.degree() == 0:
        return False
    raise _Split(g)


def _inverse(a, modulus):
    return a.invert(modulus)


def _dense(p):
    rep = p.as_dict(native=True)
    if not rep:
        return []
    n = max(e[0] for e in rep)
    zero = p.get_domain().zero
    return [rep.get((k,), zero) for k in range(n, -1, -1)]


def _horner(p, u0, modulus):
    """Evaluate a univariate Poly at the residue u0."""
    K = p.get_domain()
    result = _const(K, K.zero)
    for a in _dense(p):
        result = (result * u0 + _const(K, a)).rem(modulus)
    return result


def _to_t(p):
    """A univariate Poly in x as a Poly in t."""
    return Poly.from_dict(dict(((e[0],), c) for e, c in p.as_dict(native=True).items()), T,
                          domain=p.get_domain())


def _evaluate(plane, px, py, modulus):
    """Value of a bivariate Poly in (x, y) at the residues (px, py)."""
    K = plane.get_domain()
    xs = [_const(K, K.one)]
    ys = [_const(K, K.one)]
    total = _const(K, K.zero)
    for (i, j), c in plane.as_dict(native=True).items():
        while len(xs) <= i:
            xs.append((xs[-1] * px).rem(modulus))
        while len(ys) <= j:
            ys.append((ys[-1] * py).rem(modulus))
        total += (xs[i] * ys[j]).mul_ground(c)
    return total.rem(modulus)


def _y_coefficients(plane):
    """Coefficients of y^k (highest first) as Polys in t standing for x."""
    K = plane.get_domain()
    groups = {}
    for (i, j), c in plane.as_dict(native=True).items():
        groups.setdefault(j, {})[(i,)] = c
    if not groups:
        return []
    return [Poly.from_dict(groups.get(j, {}), T, domain=K) for j in range(max(groups), -1, -1)]


def _strip(p, modulus):
    while p and _is_zero(p[0], modulus):
        p = p[1:]
    return [c.rem(modulus) for c in p]


def _ring_monic(p, modulus):
    inv = _inverse(p[0], modulus)
    return [(c * inv).rem(modulus) for c in p]


def _ring_rem(a, b, modulus):
    """Remainder of a by the monic b over K[t]/(modulus)."""
    while a and len(a) >= len(b):
        lead = a[0]
        head = [(c - lead * d).rem(modulus) for c, d in zip(a[1:len(b)], b[1:])]
        a = _strip(head + a[len(b):], modulus)
    return a


def _ring_gcd(polys, modulus):
    """Monic gcd of polynomials in y with residue coefficients."""
    current = []
    for p in polys:
        p = _strip(p, modulus)
        if not p:
            continue
        if not current:
            current = _ring_monic(p, modulus)
            continue
        a, b = p, current
        while b:
            b = _ring_monic(b, modulus)
            a, b = b, _ring_rem(a, b, modulus)
        current = _ring_monic(a, modulus) if a else []
        if len(current) == 1:
            break
    return current


def _is_power_of_linear(g, root, modulus):
    """Whether the monic g equals (y - root)^k with k = deg g."""
    k = len(g) - 1
    K = modulus.get_domain()
    minus_root = (-root).rem(modulus)
    power = _const(K, K.one)
    for i in range(k + 1):
        expected = power.mul_ground(K.convert(QQ(int(binomial(k, i)))))
        if not _is_zero(g[i] - expected, modulus):
            return False
        power = (power * minus_root).rem(modulus)
    return True


def _shear_plane(tower, plane, s):
    """plane(x + s*y, y)."""
    if s == 0:
        return plane
    return MultiPoly.from_plane(tower, plane).linear_change(((1, s), (0, 1))).plane()


def _as_x(tower, p):
    """A Poly in t as a univariate MultiPoly in x."""
    return MultiPoly.from_native(tower, dict(((e[0], 0, 0), c) for e, c in p.as_dict(native=True).items()))


class PointOrbit(object):
    """The conjugate points {(x(t), y(t)) : E(t) = 0} of one chart.

    Attributes
    ----------
    tower : FieldTower
    modulus : sympy.Poly
        E, squarefree and monic in t over the tower.
    x, y : sympy.Poly
        Local coordinates as residues modulo E.
    chart : str
    """

    __slots__ = ("tower", "modulus", "x", "y", "chart")

    def __init__(self, tower, modulus, x, y, chart="affine"):
        self.tower = tower
        self.modulus = modulus
        self.x = x
        self.y = y
        self.chart = chart

    @classmethod
    def from_point(cls, point, tower=None):
        """The orbit of a single exact point."""
        if not point.is_exact:
            raise RequiresExactPoint("%s has interval coordinates" % point)
        tower = point.tower if tower is None else common_tower(tower, point.tower)
        K = tower.domain
        return cls(tower, Poly(T, T, domain=K), _const(K, tower.convert(point.x).value),
                   _const(K, tower.convert(point.y).value), point.chart)

    @property
    def degree(self):
        return self.modulus.degree()

    def restrict(self, modulus):
        return PointOrbit(self.tower, modulus, self.x.rem(modulus), self.y.rem(modulus), self.chart)

    def lift(self, tower):
        """The same points over a larger tower."""
        if tower == self.tower:
            return self
        K = tower.domain

        def move(p):
            return Poly.from_dict(dict((e, tower.value_from_coords(self.tower.coords(c)))
                                       for e, c in p.as_dict(native=True).items()), T, domain=K)
        return PointOrbit(tower, move(self.modulus), move(self.x), move(self.y), self.chart)

    def align(self, *polys):
        """Lift the orbit and the polynomials to a common tower; return (orbit, planes)."""
        tower = self.tower
        for p in polys:
            tower = common_tower(tower, p.tower)
        orbit = self.lift(tower)
        return orbit, [p.embed(tower).plane(self.chart) for p in polys]

    def value(self, plane):
        return _evaluate(plane, self.x, self.y, self.modulus)

    def split_on(self, *polys):
        """[(sub-orbit, True iff all polys vanish on it)]."""
        orbit, planes = self.align(*polys)

        def run(modulus):
            sub = orbit.restrict(modulus)
            return [(sub, all(_is_zero(sub.value(p), modulus) for p in planes))]
        return _split_run(orbit.modulus, run)

    def exact_point(self):
        if self.degree != 1:
            raise RequiresExactPoint("a set of %d conjugate points is not a single point" % self.degree)
        lc, c0 = _dense(self.modulus)
        root = -c0 / lc

        def at(p):
            return FieldElement(self.tower, _value_at(p, root, self.tower.domain))
        return AlgebraicPoint(at(self.x), at(self.y), self.chart)

    def coordinate_polynomial(self, index=0):
        """Squarefree monic polynomial in x vanishing on the first (or second) coordinate."""
        residue = self.x if index == 0 else self.y
        modulus = MultiPoly.from_univariate(self.tower, self.modulus, Y)
        coordinate = MultiPoly.from_univariate(self.tower, residue, Y)
        return (MultiPoly.gen(self.tower, X) - coordinate).resultant(modulus, Y).square_free_part()

    def points(self, precision=53, extend=True):
        """The points of the orbit: exact when possible, certified boxes otherwise."""
        if self.degree == 1:
            return [self.exact_point()]
        px = _as_x(self.tower, self.x)
        py = _as_x(self.tower, self.y)
        out = []
        for root in isolate_roots(_as_x(self.tower, self.modulus), precision, extend=extend):
            values = (root.value, None, None)
            out.append(AlgebraicPoint(px.evaluate_at(values, precision), py.evaluate_at(values, precision),
                                      self.chart))
        return out

    def __repr__(self):
        return "PointOrbit(degree=%d, chart=%s)" % (self.degree, self.chart)


def _value_at(p, root, K):
    total = K.zero
    for a in _dense(p):
        total = total * root + a
    return total


def common_zeros(polys, chart="affine"):
    """All common zeros of the polynomials in the local coordinates of `chart`.

    The first polynomial drives the elimination: after a shear making its
    leading coefficient in y constant, the x-projection of the common
    zeros is the gcd of its resultants with the others. The fibre above
    every projection is computed over the residue ring; a shear whose
    fibres hold more than one point is discarded.
    """
    tower = polys[0].tower
    for p in polys[1:]:
        tower = common_tower(tower, p.tower)
    planes = [p.embed(tower).plane(chart) for p in polys]
    planes = [p for p in planes if not p.is_zero]
    if not planes:
        raise EliminationDegenerate("every polynomial of the system is zero")
    if any(p.total_degree() == 0 for p in planes):
        return []
    common = planes[0]
    for p in planes[1:]:
        common = common.gcd(p)
    if common.total_degree() > 0:
        raise EliminationDegenerate("the system has a common component %s" %
                                    MultiPoly.from_plane(tower, common, chart))
    for s in SHEARS:
        try:
            orbits = _zeros_with_shear(tower, planes, s, chart)
        except _Retry:
            logger.debug("Shear %d does not separate the common zeros, retrying" % s)
            continue
        logger.debug("Found %d conjugate sets (%d points) with shear %d"
                     % (len(orbits), sum(o.degree for o in orbits), s))
        return orbits
    raise EliminationDegenerate("no shear separates the common zeros")


def _zeros_with_shear(tower, planes, s, chart):
    K = tower.domain
    sheared = [_shear_plane(tower, p, s) for p in planes]
    lead = sheared[0]
    if lead.degree(Y) != lead.total_degree():
        raise _Retry()
    lead_mp = MultiPoly.from_plane(tower, lead)
    eliminants = []
    for other in sheared[1:]:
        r = lead_mp.resultant(MultiPoly.from_plane(tower, other), Y)
        if not r.is_zero():
            eliminants.append(r)
    if not eliminants and len(sheared) > 2:
        combined = sheared[1]
        for k, other in enumerate(sheared[2:]):
            combined = combined + other.mul_ground(K.convert(QQ(k + 2)))
        r = lead_mp.resultant(MultiPoly.from_plane(tower, combined), Y)
        if not r.is_zero():
            eliminants.append(r)
    if not eliminants:
        raise EliminationDegenerate("all eliminants vanish identically")
    projection = eliminants[0]
    for r in eliminants[1:]:
        projection = projection.gcd(r)
    if projection.is_constant():
        return []
    projection = _to_t(projection.square_free_part().univariate(X))
    coefficient_lists = [_y_coefficients(p) for p in sheared]

    def fibre(modulus):
        u = Poly(T, T, domain=K).rem(modulus)
        polys_y = [[_horner(c, u, modulus) for c in coeffs] for coeffs in coefficient_lists]
        g = _ring_gcd(polys_y, modulus)
        if len(g) <= 1:
            return []
        k = len(g) - 1
        root = (-g[1]).mul_ground(K.convert(QQ(1, k))).rem(modulus)
        if not _is_power_of_linear(g, root, modulus):
            raise _Retry()
        px = (u + root.mul_ground(K.convert(QQ(s)))).rem(modulus)
        return [PointOrbit(tower, modulus, px, root, chart)]
    return _split_run(projection, fibre)


def chart_zeros(polys, chart):
    """Common zeros on the line at infinity of `chart` (or all affine ones).

    In the chart "affine" these are all affine common zeros; in "y=1" the
    ones with z = 0; in "x=1" only the point (1 : 0 : 0) is examined.
    """
    if chart == "affine":
        return common_zeros(polys, chart)
    tower = polys[0].tower
    for p in polys[1:]:
        tower = common_tower(tower, p.tower)
    if chart == "y=1":
        z = MultiPoly.gen(tower, CHART_GENS[chart][1])
        return common_zeros(list(polys) + [z], chart)
    origin = AlgebraicPoint(tower.zero, tower.zero, chart)
    if all(p.embed(tower).plane(chart).as_dict(native=True).get((0, 0), 0) == 0 for p in polys):
        return [PointOrbit.from_point(origin, tower)]
    return []


def _taylor(plane, orbit, order):
    """Taylor coefficients a_ij (i + j <= order) of `plane` at the orbit's points."""
    K = plane.get_domain()
    coefficients = {}
    for i in range(order + 1):
        for j in range(order + 1 - i):
            specs = [(g, m) for g, m in ((X, i), (Y, j)) if m]
            derivative = plane.diff(*specs) if specs else plane
            scale = K.convert(QQ(1, factorial(i) * factorial(j)))
            coefficients[(i, j)] = orbit.value(derivative).mul_ground(scale).rem(orbit.modulus)
    return coefficients


def taylor_coefficients(orbit, f, order):
    """Public access to the Taylor data of f at every point of an orbit, with splitting.

    Returns [(sub-orbit, {(i, j): residue})].
    """
    orbit, (plane,) = orbit.align(f)

    def run(modulus):
        sub = orbit.restrict(modulus)
        return [(sub, _taylor(plane, sub, order))]
    return _split_run(orbit.modulus, run)


class _Eliminant(object):
    """Sheared pair and its resultant in y, computed once per shear."""

    def __init__(self, tower, first, second):
        self.tower = tower
        self.first = first
        self.second = second
        self._by_shear = {}

    def at(self, s):
        if s not in self._by_shear:
            f = _shear_plane(self.tower, self.first, s)
            g = _shear_plane(self.tower, self.second, s)
            if f.degree(Y) != f.total_degree():
                self._by_shear[s] = None
            else:
                r = MultiPoly.from_plane(self.tower, f).resultant(MultiPoly.from_plane(self.tower, g), Y)
                self._by_shear[s] = (_y_coefficients(f), _y_coefficients(g), _to_t(r.univariate(X)))
        return self._by_shear[s]


def intersection_numbers(orbit, f, g):
    """Local intersection multiplicity of f and g at the points of the orbit.

    Returns [(sub-orbit, n)], n None for points on a common component.
    The multiplicity is the order of Res_y(f, g) at the projection of the
    point, for a shear under which the point is alone in its fibre.
    """
    orbit, (fp, gp) = orbit.align(f, g)
    tower = orbit.tower
    K = tower.domain
    common = fp.gcd(gp)
    if common.total_degree() > 0:
        results = []
        for sub, on in orbit.split_on(MultiPoly.from_plane(tower, common, orbit.chart)):
            if on:
                results.append((sub, None))
            else:
                results.extend(intersection_numbers(sub, MultiPoly.from_plane(tower, fp.exquo(common), orbit.chart),
                                                    MultiPoly.from_plane(tower, gp.exquo(common), orbit.chart)))
        return results
    eliminant = _Eliminant(tower, fp, gp)

    def run(modulus):
        sub = orbit.restrict(modulus)
        if not (_is_zero(sub.value(fp), modulus) and _is_zero(sub.value(gp), modulus)):
            return [(sub, 0)]
        for s in SHEARS:
            data = eliminant.at(s)
            if data is None:
                continue
            f_coeffs, g_coeffs, r = data
            u0 = (sub.x - sub.y.mul_ground(K.convert(QQ(s)))).rem(modulus)
            fibre = _ring_gcd([[_horner(c, u0, modulus) for c in f_coeffs],
                               [_horner(c, u0, modulus) for c in g_coeffs]], modulus)
            if len(fibre) < 2 or not _is_power_of_linear(fibre, sub.y, modulus):
                continue
            order = 0
            derivative = r
            while _is_zero(_horner(derivative, u0, modulus), modulus):
                order += 1
                derivative = derivative.diff(T)
            return [(sub, order)]
        raise EliminationDegenerate("no shear isolates the points of the orbit")
    return _split_run(orbit.modulus, run)


def _binary_cubic_type(a, b, c, d, modulus):
    """'D4' for three distinct factors, 'E' for a cube, 'D' for two factors, 'zero'."""
    if all(_is_zero(v, modulus) for v in (a, b, c, d)):
        return "zero"
    disc = (b * b * c * c - 4 * a * c ** 3 - 4 * b ** 3 * d - 27 * a * a * d * d + 18 * a * b * c * d).rem(modulus)
    if not _is_zero(disc, modulus):
        return "D4"
    h1 = (b * b - 3 * a * c).rem(modulus)
    h2 = (c * c - 3 * b * d).rem(modulus)
    h3 = (b * c - 9 * a * d).rem(modulus)
    if all(_is_zero(v, modulus) for v in (h1, h2, h3)):
        return "E"
    return "D"


def classify(orbit, f):
    """ADE type of f at the points of a singular orbit.

    Returns [(sub-orbit, type, milnor)] with type like "A5", "D4", "E6"
    or "NotSimple" (milnor None when it is unbounded).
    """
    orbit, (plane,) = orbit.align(f)
    tower = orbit.tower
    fx = plane.diff(X)
    fy = plane.diff(Y)
    common = fx.gcd(fy)
    if common.total_degree() > 0:
        fx = fx.exquo(common)
        fy = fy.exquo(common)
    fx_mp = MultiPoly.from_plane(tower, fx, orbit.chart)
    fy_mp = MultiPoly.from_plane(tower, fy, orbit.chart)

    def milnor(sub):
        return intersection_numbers(sub, fx_mp, fy_mp)

    def run(modulus):
        sub = orbit.restrict(modulus)
        a = _taylor(plane, sub, 3)
        if not all(_is_zero(a[k], modulus) for k in ((0, 0), (1, 0), (0, 1))):
            raise NotSingular("the points are not singular points of %s" % f)
        a20, a11, a02 = a[(2, 0)], a[(1, 1)], a[(0, 2)]
        if not all(_is_zero(v, modulus) for v in (a20, a11, a02)):
            disc = (a11 * a11 - 4 * a20 * a02).rem(modulus)
            if not _is_zero(disc, modulus):
                return [(sub, "A1", 1)]
            return [(part, "A%d" % mu if mu else "NotSimple", mu) for part, mu in milnor(sub)]
        kind = _binary_cubic_type(a[(3, 0)], a[(2, 1)], a[(1, 2)], a[(0, 3)], modulus)
        if kind == "zero":
            return [(part, "NotSimple", mu) for part, mu in milnor(sub)]
        if kind == "D4":
            return [(sub, "D4", 4)]
        results = []
        for part, mu in milnor(sub):
            if kind == "D" and mu:
                results.append((part, "D%d" % mu, mu))
            elif kind == "E" and mu in (6, 7, 8):
                results.append((part, "E%d" % mu, mu))
            else:
                results.append((part, "NotSimple", mu))
        return results
    return _split_run(orbit.modulus, run)


def contact_orders(orbit, f):
    """Order of contact of f with its tangent line at smooth points of the orbit.

    Returns [(sub-orbit, n)], n None when the tangent line is a component.
    """
    orbit, (plane,) = orbit.align(f)
    K = orbit.tower.domain
    degree = plane.total_degree()

    def run(modulus):
        sub = orbit.restrict(modulus)
        a = _taylor(plane, sub, degree)
        # direction of the tangent line
        dx, dy = a[(0, 1)], (-a[(1, 0)]).rem(modulus)
        for k in range(2, degree + 1):
            total = _const(K, K.zero)
            for i in range(k + 1):
                total += a[(i, k - i)] * _power(dx, i, modulus) * _power(dy, k - i, modulus)
            if not _is_zero(total, modulus):
                return [(sub, k)]
        return [(sub, None)]
    return _split_run(orbit.modulus, run)


def _power(p, n, modulus):
    K = p.get_domain()
    result = _const(K, K.one)
    for _ in range(n):
        result = (result * p).rem(modulus)
    return result

