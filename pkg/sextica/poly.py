#
# poly.py
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

"""Polynomials in x, y, z over a FieldTower, elimination and root isolation.

"""

import logging
from fractions import Fraction

import numpy
from sympy import Poly, QQ, symbols
from sympy.polys.densebasic import dmp_from_dict, dmp_to_dict
from sympy.polys.euclidtools import dmp_discriminant, dmp_resultant
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rootisolation import dup_isolate_all_roots_sqf

from .errors import DegreeTooSmall, IncompatibleTowers, MalformedInput, PrecisionExhausted
from .field import ComplexInterval, FieldElement, common_tower, precision_cap, squarefree_core, tower_extend

logger = logging.getLogger(__name__)

X, Y, Z = symbols("x y z")
GENS = (X, Y, Z)

#: Local coordinates of the three standard charts of the projective plane.
CHART_GENS = {"affine": (X, Y), "y=1": (X, Z), "x=1": (Y, Z)}
CHARTS = ("affine", "y=1", "x=1")


def _gen_index(var):
    if isinstance(var, str):
        var = {"x": X, "y": Y, "z": Z}[var]
    return GENS.index(var)


def _sort_key(exps):
    return (-sum(exps), -exps[0], -exps[1], -exps[2])


class MultiPoly(object):
    """A polynomial in x, y (and the homogenizing z) over a FieldTower.

    The terms are kept in a sympy ``Poly`` over the tower's domain with
    the fixed generators (x, y, z); zero coefficients are never stored.
    Canonical term order is graded lexicographic with x > y > z.

    Attributes
    ----------
    tower : FieldTower
        The coefficient field.
    poly : sympy.Poly
        The underlying sparse polynomial.
    """

    __slots__ = ("tower", "poly")

    def __init__(self, tower, poly):
        self.tower = tower
        self.poly = poly

    @classmethod
    def from_dict(cls, tower, terms):
        """Build from {exponent tuple: coefficient}; tuples may have 2 or 3 entries."""
        rep = {}
        for exps, c in terms.items():
            exps = tuple(exps) + (0,) * (3 - len(exps))
            value = tower.convert(c).value
            if value:
                rep[exps] = rep.get(exps, tower.domain.zero) + value
        rep = dict((e, c) for e, c in rep.items() if c)
        return cls(tower, Poly.from_dict(rep, *GENS, domain=tower.domain))

    @classmethod
    def from_native(cls, tower, rep):
        """Build from {exponent tuple: domain element} without coercion."""
        return cls(tower, Poly.from_dict(dict((e, c) for e, c in rep.items() if c), *GENS,
                                         domain=tower.domain))

    @classmethod
    def constant(cls, tower, c):
        return cls.from_dict(tower, {(0, 0, 0): c})

    @classmethod
    def gen(cls, tower, var):
        exps = [0, 0, 0]
        exps[_gen_index(var)] = 1
        return cls.from_native(tower, {tuple(exps): tower.domain.one})

    @classmethod
    def from_sympy(cls, expr, tower):
        """Convert a sympy expression in x, y, z with coefficients in `tower`."""
        p = Poly(expr, *GENS, domain="EX")
        return cls.from_dict(tower, dict((e, tower.from_sympy(c)) for e, c in p.as_dict().items()))

    @classmethod
    def from_plane(cls, tower, plane, chart="affine"):
        """Inverse of `plane`: relabel a Poly in (x, y) to the chart's coordinates."""
        first, second = (_gen_index(g) for g in CHART_GENS[chart])
        rep = {}
        for (i, j), c in plane.as_dict(native=True).items():
            exps = [0, 0, 0]
            exps[first] = i
            exps[second] = j
            rep[tuple(exps)] = c
        return cls.from_native(tower, rep)

    def plane(self, chart="affine"):
        """The polynomial as a bivariate Poly in (x, y) standing for the chart's coordinates."""
        first, second = (_gen_index(g) for g in CHART_GENS[chart])
        rep = {}
        for exps, c in self.poly.as_dict(native=True).items():
            if any(e for k, e in enumerate(exps) if k not in (first, second)):
                raise ValueError("%s is not a polynomial in the chart %s" % (self, chart))
            rep[(exps[first], exps[second])] = c
        return Poly.from_dict(rep, X, Y, domain=self.tower.domain)

    def native_terms(self):
        return self.poly.as_dict(native=True)

    def terms(self):
        """(exponents, FieldElement) pairs in canonical order."""
        rep = self.native_terms()
        return [(e, FieldElement(self.tower, rep[e])) for e in sorted(rep, key=_sort_key)]

    def coeff(self, exps):
        exps = tuple(exps) + (0,) * (3 - len(exps))
        return FieldElement(self.tower, self.native_terms().get(exps, self.tower.domain.zero))

    def leading_coefficient(self):
        terms = self.terms()
        return terms[0][1] if terms else self.tower.zero

    def is_zero(self):
        return self.poly.is_zero

    def is_constant(self):
        return self.total_degree() <= 0

    def total_degree(self):
        if self.poly.is_zero:
            return -1
        return max(sum(e) for e in self.native_terms())

    def degree(self, var):
        if self.poly.is_zero:
            return -1
        k = _gen_index(var)
        return max(e[k] for e in self.native_terms())

    def variables(self):
        used = set()
        for exps in self.native_terms():
            for k, e in enumerate(exps):
                if e:
                    used.add(GENS[k])
        return used

    def is_homogeneous(self):
        return len(set(sum(e) for e in self.native_terms())) <= 1

    def embed(self, tower):
        if tower == self.tower:
            return self
        return MultiPoly.from_native(tower, dict(
            (e, tower.value_from_coords(self.tower.coords(c))) for e, c in self.native_terms().items()))

    def _unify(self, other):
        if isinstance(other, MultiPoly):
            if other.tower == self.tower:
                return self.tower, self.poly, other.poly
            tower = common_tower(self.tower, other.tower)
            return tower, self.embed(tower).poly, other.embed(tower).poly
        if isinstance(other, FieldElement) and other.tower != self.tower:
            tower = common_tower(self.tower, other.tower)
            return tower, self.embed(tower).poly, MultiPoly.constant(tower, other).poly
        return self.tower, self.poly, MultiPoly.constant(self.tower, other).poly

    def __add__(self, other):
        tower, p, q = self._unify(other)
        return MultiPoly(tower, p + q)

    __radd__ = __add__

    def __sub__(self, other):
        tower, p, q = self._unify(other)
        return MultiPoly(tower, p - q)

    def __rsub__(self, other):
        tower, p, q = self._unify(other)
        return MultiPoly(tower, q - p)

    def __mul__(self, other):
        tower, p, q = self._unify(other)
        return MultiPoly(tower, p * q)

    __rmul__ = __mul__

    def __neg__(self):
        return MultiPoly(self.tower, -self.poly)

    def __pow__(self, n):
        return MultiPoly(self.tower, self.poly ** n)

    def scale(self, c):
        """Multiply by a field element."""
        c = c if isinstance(c, FieldElement) else self.tower.convert(c)
        tower = common_tower(self.tower, c.tower)
        return MultiPoly(tower, self.embed(tower).poly.mul_ground(tower.convert(c).value))

    def __eq__(self, other):
        if not isinstance(other, (MultiPoly, FieldElement, int, Fraction)):
            return NotImplemented
        try:
            tower, p, q = self._unify(other)
        except IncompatibleTowers:
            return False
        return p == q

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(frozenset((e, hash(FieldElement(self.tower, c)))
                              for e, c in self.native_terms().items()))

    def __str__(self):
        from .parser import format_poly
        return format_poly(self)

    def __repr__(self):
        return "MultiPoly(%s)" % str(self)

    def diff(self, var, order=1):
        """Formal partial derivative."""
        var = GENS[_gen_index(var)]
        return MultiPoly(self.tower, self.poly.diff((var, order)))

    def monic(self):
        """Divide by the leading coefficient in canonical order."""
        if self.is_zero():
            return self
        return self.scale(self.tower.one / self.leading_coefficient())

    def exquo(self, other):
        """Exact quotient, or None when `other` does not divide."""
        tower, p, q = self._unify(other)
        try:
            return MultiPoly(tower, p.exquo(q))
        except ExactQuotientFailed:
            return None

    def divides(self, other):
        return other.exquo(self) is not None

    def substitute(self, var, expr):
        """Compose: replace `var` by the polynomial `expr`."""
        if not isinstance(expr, MultiPoly):
            expr = MultiPoly.constant(self.tower, expr)
        tower = common_tower(self.tower, expr.tower)
        me = self.embed(tower)
        expr = expr.embed(tower)
        k = _gen_index(var)
        groups = {}
        for exps, c in me.native_terms().items():
            rest = list(exps)
            rest[k] = 0
            groups.setdefault(exps[k], {})[tuple(rest)] = c
        if not groups:
            return me
        result = MultiPoly.constant(tower, 0)
        for power in range(max(groups), -1, -1):
            result = result * expr + MultiPoly.from_native(tower, groups.get(power, {}))
        return result

    def translate(self, dx, dy):
        """p(x + dx, y + dy)."""
        shifted = self
        if dx != 0:
            shifted = shifted.substitute(X, MultiPoly.gen(shifted.tower, X) + dx)
        if dy != 0:
            shifted = shifted.substitute(Y, MultiPoly.gen(shifted.tower, Y) + dy)
        return shifted

    def linear_change(self, matrix, shift=(0, 0)):
        """p(a x + b y + e, c x + d y + f) for matrix ((a, b), (c, d)) and shift (e, f)."""
        (a, b), (c, d) = matrix
        gx = MultiPoly.gen(self.tower, X)
        gy = MultiPoly.gen(self.tower, Y)
        return _simultaneous(self, gx * a + gy * b + shift[0], gx * c + gy * d + shift[1])

    def compose(self, new_x, new_y):
        """p(new_x, new_y) for polynomials new_x, new_y (which may involve z)."""
        return _simultaneous(self, new_x, new_y)

    def homogenize(self, degree=None):
        """z-homogenization to `degree` (default: the total degree)."""
        if Z in self.variables():
            raise MalformedInput("%s already involves z" % self)
        total = self.total_degree()
        if degree is None:
            degree = max(total, 0)
        if degree < total:
            raise DegreeTooSmall("cannot homogenize a polynomial of degree %d to degree %d" % (total, degree))
        return MultiPoly.from_native(self.tower, dict(
            ((i, j, degree - i - j), c) for (i, j, _), c in self.native_terms().items()))

    def dehomogenize(self, chart="affine"):
        """Set z=1 (chart "affine" or "z=1"), y=1 or x=1."""
        if chart == "z=1":
            chart = "affine"
        k = {"affine": 2, "y=1": 1, "x=1": 0}[chart]
        rep = {}
        for exps, c in self.native_terms().items():
            exps = list(exps)
            exps[k] = 0
            exps = tuple(exps)
            rep[exps] = rep.get(exps, self.tower.domain.zero) + c
        return MultiPoly.from_native(self.tower, rep)

    def in_chart(self, chart):
        """The affine curve in the local coordinates of `chart` (see CHART_GENS)."""
        if chart == "affine":
            return self
        return self.homogenize().dehomogenize(chart)

    def gradient(self, chart="affine"):
        u, v = CHART_GENS[chart]
        return self.diff(u), self.diff(v)

    def evaluate(self, point, precision=53):
        """Evaluate at an AlgebraicPoint: a FieldElement, or a ComplexInterval
        when a coordinate is only known as a box."""
        if point.chart == "affine" and Z not in self.variables():
            values = (point.x, point.y, None)
            return self.evaluate_at(values, precision)
        return self.homogenize().evaluate_at(point.projective(), precision)

    def evaluate_at(self, values, precision=53):
        """Evaluate at (x, y, z) values; None stands for an unused variable."""
        if any(isinstance(v, ComplexInterval) for v in values):
            return self._evaluate_interval(values, precision)
        values = [v if v is None or isinstance(v, FieldElement) else self.tower.convert(v) for v in values]
        tower = self.tower
        for v in values:
            if v is not None:
                tower = common_tower(tower, v.tower)
        me = self.embed(tower)
        natives = [None if v is None else tower.convert(v).value for v in values]
        powers = [{0: tower.domain.one} for _ in range(3)]
        total = tower.domain.zero
        for exps, c in me.native_terms().items():
            term = c
            for k, e in enumerate(exps):
                if e:
                    if natives[k] is None:
                        raise ValueError("no value for %s" % GENS[k])
                    cache = powers[k]
                    if e not in cache:
                        cache[e] = natives[k] ** e
                    term = term * cache[e]
            total += term
        return FieldElement(tower, total)

    def _evaluate_interval(self, values, precision):
        boxes = []
        for v in values:
            if v is None or isinstance(v, ComplexInterval):
                boxes.append(v)
            else:
                v = v if isinstance(v, FieldElement) else self.tower.convert(v)
                boxes.append(v.to_interval(precision))
        work = max([precision] + [b.precision for b in boxes if b is not None])
        total = ComplexInterval.exact(0, 0, work)
        for exps, c in self.terms():
            term = c.to_interval(work)
            for k, e in enumerate(exps):
                if e:
                    term = term * (boxes[k] ** e)
            total = total + term
        return total

    def resultant(self, other, var):
        """Res_var(self, other) = lc(other)^deg(self) * prod self(roots of other)."""
        tower, p, q = self._unify(other)
        return _resultant(tower, p, q, _gen_index(var))

    def discriminant(self, var):
        k = _gen_index(var)
        if self.degree(GENS[k]) < 1:
            raise DegreeTooSmall("discriminant needs positive degree in %s" % GENS[k])
        order = _order_for(k, [self])
        f = dmp_from_dict(_project(self.native_terms(), order), len(order) - 1, self.tower.domain)
        return _lift(self.tower, dmp_discriminant(f, len(order) - 1, self.tower.domain), order[1:])

    def gcd(self, other):
        tower, p, q = self._unify(other)
        return MultiPoly(tower, p.gcd(q)).monic()

    def square_free_part(self):
        if self.is_constant():
            return self
        return MultiPoly(self.tower, self.poly.sqf_part()).monic()

    def sqf_list(self):
        """Square-free decomposition [(factor, multiplicity)] of a univariate polynomial."""
        var = self.single_variable()
        _, factors = self.univariate(var).sqf_list()
        return [(self.from_univariate(self.tower, f, var), m) for f, m in factors]

    def factor_list(self):
        """Irreducible factors over the tower, [(factor, multiplicity)]."""
        if self.is_constant():
            return []
        order = sorted(_gen_index(g) for g in self.variables())
        compact = Poly.from_dict(_project(self.native_terms(), order), *[GENS[j] for j in order],
                                 domain=self.tower.domain)
        _, factors = compact.factor_list()
        return [(_lift(self.tower, dmp_from_dict(f.as_dict(native=True), len(order) - 1, self.tower.domain),
                       order).monic(), m) for f, m in factors]

    def single_variable(self):
        used = self.variables()
        if len(used) > 1:
            raise ValueError("%s is not univariate" % self)
        return used.pop() if used else X

    def univariate(self, var=None):
        var = GENS[_gen_index(var)] if var is not None else self.single_variable()
        k = _gen_index(var)
        rep = {}
        for exps, c in self.native_terms().items():
            if any(e for j, e in enumerate(exps) if j != k):
                raise ValueError("%s is not univariate in %s" % (self, var))
            rep[(exps[k],)] = c
        return Poly.from_dict(rep, var, domain=self.tower.domain)

    @classmethod
    def from_univariate(cls, tower, upoly, var):
        k = _gen_index(var)
        rep = {}
        for (e,), c in upoly.as_dict(native=True).items():
            exps = [0, 0, 0]
            exps[k] = e
            rep[tuple(exps)] = c
        return cls.from_native(tower, rep)


def _simultaneous(p, new_x, new_y):
    """p(new_x, new_y) where new_x, new_y are polynomials in x, y."""
    tower = common_tower(common_tower(p.tower, new_x.tower), new_y.tower)
    result = MultiPoly.constant(tower, 0)
    xs = {0: MultiPoly.constant(tower, 1)}
    ys = {0: MultiPoly.constant(tower, 1)}
    for (i, j, k), c in p.embed(tower).native_terms().items():
        if k:
            raise ValueError("linear changes act on affine polynomials only")
        if i not in xs:
            xs[i] = new_x.embed(tower) ** i
        if j not in ys:
            ys[j] = new_y.embed(tower) ** j
        result = result + (xs[i] * ys[j]).scale(FieldElement(tower, c))
    return result


def _order_for(k, polys):
    """Generator indices with `k` first, followed by the other used ones."""
    used = set()
    for p in polys:
        for exps in (p.native_terms() if isinstance(p, MultiPoly) else p.as_dict(native=True)):
            for j, e in enumerate(exps):
                if e:
                    used.add(j)
    return [k] + sorted(j for j in used if j != k)


def _project(rep, order):
    return dict((tuple(e[j] for j in order), c) for e, c in rep.items())


def _lift(tower, rep, order):
    """Turn a dmp (or a ground element when `order` is empty) back into a MultiPoly."""
    if not order:
        return MultiPoly.from_native(tower, {(0, 0, 0): rep})
    out = {}
    for e, c in dmp_to_dict(rep, len(order) - 1, tower.domain).items():
        exps = [0, 0, 0]
        for j, power in zip(order, e):
            exps[j] = power
        out[tuple(exps)] = c
    return MultiPoly.from_native(tower, out)


def _resultant(tower, p, q, k):
    K = tower.domain
    if p.is_zero or q.is_zero:
        return MultiPoly.constant(tower, 0)
    var = GENS[k]
    dp = p.degree(var)
    dq = q.degree(var)
    if dp == 0 and dq == 0:
        return MultiPoly.constant(tower, 1)
    if dp == 0:
        return MultiPoly(tower, p ** dq)
    if dq == 0:
        return MultiPoly(tower, q ** dp)
    order = _order_for(k, [p, q])
    u = len(order) - 1
    f = dmp_from_dict(_project(p.as_dict(native=True), order), u, K)
    g = dmp_from_dict(_project(q.as_dict(native=True), order), u, K)
    res = dmp_resultant(f, g, u, K)
    result = _lift(tower, res, order[1:])
    if (dp * dq) % 2:
        result = -result
    logger.debug("Resultant in %s of degrees %d, %d has total degree %d" % (var, dp, dq, result.total_degree()))
    return result


class Root(object):
    """One root of a univariate polynomial.

    `value` is a FieldElement for exact roots and a ComplexInterval that
    isolates exactly one root otherwise. `factor` is the irreducible factor
    over the tower the root belongs to.
    """

    __slots__ = ("value", "multiplicity", "factor")

    def __init__(self, value, multiplicity, factor):
        self.value = value
        self.multiplicity = multiplicity
        self.factor = factor

    @property
    def is_exact(self):
        return isinstance(self.value, FieldElement)

    def __repr__(self):
        return "Root(%s, multiplicity=%d)" % (self.value, self.multiplicity)


class UnivariateRoots(object):
    """All complex roots of a univariate polynomial, with multiplicity."""

    def __init__(self, polynomial, roots):
        self.polynomial = polynomial
        self.roots = roots

    def __iter__(self):
        return iter(self.roots)

    def __len__(self):
        return len(self.roots)

    def exact(self):
        return [r for r in self.roots if r.is_exact]

    def intervals(self):
        return [r for r in self.roots if not r.is_exact]

    def multiplicity_sum(self):
        return sum(r.multiplicity for r in self.roots)


def norm_polynomial(upoly):
    """The norm over QQ of a univariate Poly over an algebraic field, as a QQ Poly."""
    K = upoly.get_domain()
    if K == QQ:
        return upoly
    var = upoly.gen
    modulus = K.mod.to_list()
    m_rep = dict(((len(modulus) - 1 - j, 0), c) for j, c in enumerate(modulus) if c)
    h_rep = {}
    for (k,), c in upoly.as_dict(native=True).items():
        coeffs = c.to_list()
        for j, q in enumerate(coeffs):
            if q:
                h_rep[(len(coeffs) - 1 - j, k)] = q
    m = dmp_from_dict(m_rep, 1, QQ)
    h = dmp_from_dict(h_rep, 1, QQ)
    res = dmp_resultant(m, h, 1, QQ)
    return Poly(res, var, domain=QQ)


def interval_roots(factor, precision=53):
    """Certified boxes around the roots of a squarefree univariate MultiPoly.

    Roots of the squarefree norm are isolated over QQ and kept when the
    factor's interval evaluation contains zero; precision doubles until
    exactly deg(factor) boxes survive.
    """
    var = factor.single_variable()
    upoly = factor.univariate(var)
    degree = upoly.degree()
    norm = norm_polynomial(upoly).sqf_part()
    coeffs = [QQ.from_sympy(c) for c in norm.all_coeffs()]
    cap = precision_cap()
    work = max(precision, 16)
    while True:
        eps = QQ(1, 2 ** work)
        reals, complexes = dup_isolate_all_roots_sqf(coeffs, QQ, eps=eps)
        boxes = [ComplexInterval.from_rectangle(s, 0, t, 0, work) for s, t in reals]
        boxes += [ComplexInterval.from_rectangle(u, v, s, t, work) for (u, v), (s, t) in complexes]
        if upoly.get_domain() == QQ:
            kept = boxes
        else:
            kept = [b for b in boxes if factor.evaluate_at(_box_values(var, b), work).contains_zero()]
        if len(kept) == degree:
            logger.debug("Isolated %d roots of a degree %d factor at %d bits" % (degree, degree, work))
            return kept
        work *= 2
        if work > cap:
            raise PrecisionExhausted("cannot separate the roots of %s below %d bits" % (factor, cap))


def _box_values(var, box):
    values = [None, None, None]
    values[_gen_index(var)] = box
    return tuple(values)


def isolate_roots(p, precision=53, extend=False):
    """All complex roots of a nonzero univariate MultiPoly with multiplicities.

    Linear factors over the tower give exact roots; quadratic factors give
    exact roots when their discriminant is a square in the tower (or, with
    `extend`, in the tower extended by its square root). Everything else
    is isolated in certified boxes.
    """
    if p.is_zero():
        raise ValueError("the zero polynomial has no isolated roots")
    roots = []
    var = p.single_variable()
    for sqf_factor, multiplicity in p.sqf_list():
        for factor, _ in sqf_factor.factor_list():
            degree = factor.degree(var)
            if degree == 0:
                continue
            if degree == 1:
                a = factor.coeff(_exps(var, 1))
                b = factor.coeff(_exps(var, 0))
                roots.append(Root(-b / a, multiplicity, factor))
                continue
            if degree == 2:
                exact = quadratic_roots(factor, var, extend)
                if exact is not None:
                    roots.extend(Root(r, multiplicity, factor) for r in exact)
                    continue
            roots.extend(Root(box, multiplicity, factor) for box in interval_roots(factor, precision))
    _separate(roots, precision)
    return UnivariateRoots(p, roots)


def _separate(roots, precision):
    boxed = [r for r in roots if not r.is_exact]
    cap = precision_cap()
    work = max(precision, 16)
    while any(not a.value.is_disjoint(b.value) for i, a in enumerate(boxed) for b in boxed[i + 1:]):
        work *= 2
        if work > cap:
            raise PrecisionExhausted("root boxes still overlap at %d bits" % cap)
        factors = []
        for r in boxed:
            if r.factor not in factors:
                factors.append(r.factor)
        refined = dict((f, interval_roots(f, work)) for f in factors)
        for r in boxed:
            r.value = refined[r.factor].pop(0)


def _exps(var, power):
    exps = [0, 0, 0]
    exps[_gen_index(var)] = power
    return tuple(exps)


def quadratic_roots(factor, var, extend=False):
    """Both roots of a quadratic by the quadratic formula, or None if they leave the tower."""
    a = factor.coeff(_exps(var, 2))
    b = factor.coeff(_exps(var, 1))
    c = factor.coeff(_exps(var, 0))
    disc = b * b - a * c * 4
    root = disc.sqrt()
    if root is None:
        if not extend or factor.tower.depth >= 2:
            return None
        radicand = squarefree_core(disc)
        tower = tower_extend(factor.tower, radicand)
        root = tower.generator() * (disc / radicand).sqrt()
        a, b = tower.convert(a), tower.convert(b)
    return [(-b + root) / (a * 2), (-b - root) / (a * 2)]


def random_affine_change(rng=None, bound=4):
    """A random invertible affine map ((a, b), (c, d)), (e, f) with small integer entries.

    `rng` is a numpy RandomState; the maps suit `MultiPoly.linear_change`.
    """
    if rng is None:
        rng = numpy.random.RandomState(0)
    while True:
        a, b, c, d, e, f = (int(v) for v in rng.randint(-bound, bound + 1, size=6))
        if a * d - b * c != 0:
            return ((a, b), (c, d)), (e, f)
