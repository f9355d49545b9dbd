#
# torus.py
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

"""(2,3)-torus decompositions of sextics.

A sextic C = {F = 0} is of torus type when F = s (f2^3 + f3^2) with
deg f2 = 2, deg f3 = 3. The common zeros of f2 and f3 are singular
points of C, its inner singularities. An inner point where f2 is smooth
and I(f2, f3; P) = k is of type A_{3k-1}; the weights k of the inner
points add up to 6.

The search runs conic first: the conic f2 of a decomposition meets C
only at the inner points, with I(f2, C; P) = 2k there. So
Res_y(f2, F) is proportional to the product of (x - x_P)^(2k), which
gives polynomial equations in the parameters of the linear system of
conics through the inner points. Once f2 is known, the scalar comes
from requiring F - c f2^3 to be a square along a line.

"""

import itertools
import logging
from collections import OrderedDict
from math import comb

from sympy import Poly, symbols

from .conical import ConicConstraint, conic_linear_system, conic_rank
from .errors import (CommonComponent, DegreeMismatch, EliminationDegenerate, EmptySystem, NotSimple,
                     ProcedureInapplicable, RequiresExactPoint, TooManyParameters, UncertifiableInterval)
from .field import ComplexInterval, FieldElement, common_tower
from .flex import flex_tangent_sextic, tangent_line
from .local import SingularityRecord, analyze_singularities, centered_at, classify_simple_singularity
from .orbits import AlgebraicPoint, chart_zeros, common_zeros
from .parser import CurveDefinition, parse_constant, parse_poly
from .poly import CHART_GENS, CHARTS, MultiPoly, X, Y, Z, isolate_roots

logger = logging.getLogger(__name__)

#: Inner singularity types and their weight k = I(f2, f3; P).
INNER_TYPES = OrderedDict([("A2", 1), ("A5", 2), ("A8", 3), ("A11", 4), ("A14", 5), ("A17", 6), ("E6", 2)])

#: The only inner singularities a sextic of linear torus type can have.
LINEAR_INNER_TYPES = ("A5", "A11", "A17")

#: Lines x = x0 + m y used to read off the scalar of a decomposition.
LINES = ((3, 7, -5, 11), (-2, 13, 7, 3))

TORUS = "torus"
NON_TORUS = "non-torus-over-tower"
UNDECIDED = "undecided"

_S, _R = symbols("s r")
_RING_GENS = (Y, X, _S, _R)


class TorusWitness(object):
    """A decomposition sextic = scalar * (f2^3 + f3^2).

    Attributes
    ----------
    f2 : MultiPoly
        The conic.
    f3 : MultiPoly
        The cubic.
    scalar : FieldElement
    """

    def __init__(self, f2, f3, scalar):
        self.f2 = f2
        self.f3 = f3
        self.scalar = scalar

    @property
    def tower(self):
        return common_tower(common_tower(self.f2.tower, self.f3.tower), self.scalar.tower)

    def expand(self):
        return (self.f2 ** 3 + self.f3 ** 2).scale(self.scalar)

    def inner_points(self, charts=CHARTS, precision=53):
        """The common zeros of f2 and f3."""
        points = []
        for chart in charts:
            for orbit in chart_zeros([self.f2.in_chart(chart), self.f3.in_chart(chart)], chart):
                points.extend(orbit.points(precision))
        return sorted(points, key=AlgebraicPoint.sort_key)

    def __repr__(self):
        return "TorusWitness(%s, %s, %s)" % (self.f2, self.f3, self.scalar)


class TorusVerdict(object):
    """Outcome of decide_torus.

    Attributes
    ----------
    verdict : str
        "torus", "non-torus-over-tower" or "undecided".
    witness : TorusWitness or None
        Present iff the verdict is "torus".
    inner : list of SingularityRecord
        The inner singularities of the witness.
    reason : str
    linear : bool or None
        Whether f2 is the square of a line.
    """

    def __init__(self, verdict, witness=None, inner=(), reason="", linear=None):
        self.verdict = verdict
        self.witness = witness
        self.inner = list(inner)
        self.reason = reason
        self.linear = linear

    def __repr__(self):
        return "TorusVerdict(%s, %s)" % (self.verdict, self.reason)


def _product(curve):
    return curve.product() if isinstance(curve, CurveDefinition) else curve


def verify_torus_decomposition(sextic, witness):
    """Exact check of sextic == scalar * (f2^3 + f3^2)."""
    sextic = _product(sextic)
    degrees = (sextic.total_degree(), witness.f2.total_degree(), witness.f3.total_degree())
    if degrees != (6, 2, 3):
        raise DegreeMismatch("a torus decomposition needs degrees 6, 2, 3, got %d, %d, %d" % degrees)
    return sextic == witness.expand()


def is_linear_torus_type(witness):
    """Whether f2 is the square of a linear form."""
    return conic_rank(witness.f2) == 1


def polynomial_sqrt(g):
    """h with h^2 == g over the tower of g, or None.

    Terms of h are found from the top down in graded lexicographic order:
    the leading term of g - h^2 is twice the product of the leading term
    of h with the next term.
    """
    if g.is_zero():
        return g
    tower = g.tower
    lead_exps, lead = g.terms()[0]
    if any(e % 2 for e in lead_exps):
        return None
    root = lead.sqrt()
    if root is None:
        return None
    half = tuple(e // 2 for e in lead_exps)
    h = MultiPoly.from_dict(tower, {half: root})
    twice = root * 2
    for _ in range(comb(sum(half) + 3, 3) + 1):
        rest = g - h * h
        if rest.is_zero():
            return h
        exps, c = rest.terms()[0]
        step = tuple(a - b for a, b in zip(exps, half))
        if min(step) < 0 or _graded_key(step) <= _graded_key(half):
            return None
        h = h + MultiPoly.from_dict(tower, {step: c / twice})
    return None


def _graded_key(exps):
    return (-sum(exps),) + tuple(-e for e in exps)


def perfect_square_cubic(g):
    """The cubic h with h^2 == g, or None."""
    h = polynomial_sqrt(g)
    if h is None or h.total_degree() != 3:
        return None
    return h


def _det3(rows):
    (a, b, c), (d, e, f), (g, h, i) = rows
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def _interval_coordinates(point, precision):
    out = []
    for c in point.projective():
        if isinstance(c, ComplexInterval):
            out.append(c)
        elif isinstance(c, FieldElement):
            out.append(c.to_interval(precision))
        else:
            out.append(ComplexInterval.exact(c, 0, precision))
    return out


def colinear(points, precision=53):
    """Whether every triple of the points lies on a line.

    Interval points are decided when the determinant box excludes zero;
    otherwise UncertifiableInterval is raised.
    """
    points = list(points)
    if len(points) < 3:
        raise ValueError("colinearity needs at least three points")
    for triple in itertools.combinations(points, 3):
        if all(p.is_exact for p in triple):
            if _det3([p.projective() for p in triple]) != 0:
                return False
            continue
        box = _det3([_interval_coordinates(p, precision) for p in triple])
        if not box.contains_zero():
            return False
        raise UncertifiableInterval("cannot decide the colinearity of %s" % ", ".join(str(p) for p in triple))
    return True


def colinear_triples(points):
    """Index triples (i, j, k) of exact points on a common line."""
    out = []
    for i, j, k in itertools.combinations(range(len(points)), 3):
        triple = [points[i], points[j], points[k]]
        if all(p.is_exact for p in triple) and _det3([p.projective() for p in triple]) == 0:
            out.append((i, j, k))
    return out


def tokunaga_check(definition, conic, component=None):
    """Whether the conic meets the curve (or one component) only in singular points of the whole curve."""
    full = _product(definition)
    target = full if component is None else definition.component(component)
    if not target.gcd(conic).is_constant():
        raise CommonComponent("%s shares a component with the curve" % conic)
    for chart in CHARTS:
        u, v = CHART_GENS[chart]
        local = full.in_chart(chart)
        for orbit in chart_zeros([target.in_chart(chart), conic.in_chart(chart)], chart):
            for part, singular in orbit.split_on(local, local.diff(u), local.diff(v)):
                if not singular:
                    logger.debug("%s meets the curve at smooth points %r" % (conic, part))
                    return False
    return True


class InnerCandidate(object):
    """A candidate inner singularity: one exact point, or a set of conjugate points.

    Attributes
    ----------
    sing_type : str
    records : list of SingularityRecord
    orbit : PointOrbit or None
        Set for points with interval coordinates.
    """

    def __init__(self, sing_type, records, orbit=None):
        self.sing_type = sing_type
        self.records = list(records)
        self.orbit = orbit

    @property
    def weight(self):
        return INNER_TYPES[self.sing_type] * len(self.records)

    @property
    def location(self):
        return self.records[0].location

    def __repr__(self):
        return "InnerCandidate(%s x%d)" % (self.sing_type, len(self.records))


def inner_candidates(records):
    """Group the inner-type records: exact points one by one, interval points by conjugate set."""
    groups = []
    by_orbit = OrderedDict()
    for record in records:
        if record.sing_type not in INNER_TYPES:
            continue
        if record.location.is_exact:
            groups.append(InnerCandidate(record.sing_type, [record]))
        else:
            by_orbit.setdefault(id(record.orbit), []).append(record)
    for group in by_orbit.values():
        groups.append(InnerCandidate(group[0].sing_type, group, group[0].orbit))
    return groups


def weight_subsets(candidates, total=6, required=()):
    """Subsets of the candidates whose weights add up to `total`, each containing `required`."""
    required = list(required)
    rest = [c for c in candidates if c not in required]
    need = total - sum(c.weight for c in required)
    out = []
    if need < 0:
        return out
    for n in range(len(rest) + 1):
        for subset in itertools.combinations(rest, n):
            if sum(c.weight for c in subset) == need:
                out.append(required + list(subset))
    return out


def _smooth_pair(definition, point):
    """(label, component) when exactly two components pass smoothly through the point."""
    if not isinstance(definition, CurveDefinition):
        return None
    through = []
    for label, component in definition.components:
        local = centered_at(component, point, common_tower(component.tower, point.tower))
        if local.coeff((0, 0)).is_zero():
            if local.coeff((1, 0)).is_zero() and local.coeff((0, 1)).is_zero():
                return None
            through.append((label, component))
    return through[0] if len(through) == 2 else None


def _inner_constraints(candidate, definition, product):
    sing_type = candidate.sing_type
    if candidate.orbit is not None:
        if sing_type == "A2":
            return [ConicConstraint.through(candidate.orbit)]
        return [ConicConstraint.tangent(candidate.orbit, product, sing_type)]
    point = candidate.location
    if sing_type == "A2":
        return [ConicConstraint.through(point)]
    if sing_type in LINEAR_INNER_TYPES:
        pair = _smooth_pair(definition, point)
        if pair is not None:
            label, component = pair
            return [ConicConstraint.contact(point, component, INNER_TYPES[sing_type], label)]
    return [ConicConstraint.tangent(point, product, sing_type)]


def _target_polynomial(candidates, tower):
    """prod (x - x_P)^(2k) over the inner points."""
    target = MultiPoly.constant(tower, 1)
    x = MultiPoly.gen(tower, X)
    for candidate in candidates:
        power = 2 * INNER_TYPES[candidate.sing_type]
        if candidate.orbit is None:
            factor = x - candidate.location.x
        else:
            orbit = candidate.orbit.lift(common_tower(candidate.orbit.tower, tower))
            modulus = MultiPoly.from_univariate(orbit.tower, orbit.modulus, Y)
            xs = MultiPoly.from_univariate(orbit.tower, orbit.x, Y)
            factor = (x - xs).resultant(modulus, Y)
        target = target * factor ** power
    return target


def _lift(p, tower):
    rep = dict(((j, i, 0, 0), c) for (i, j, _), c in p.embed(tower).native_terms().items())
    return Poly.from_dict(rep, *_RING_GENS, domain=tower.domain)


def _equations(system, params, sextic, target, tower):
    """Polynomials in the unknowns of `params` vanishing when Res_y(member, sextic) is proportional to target."""
    member = None
    for p, b in zip(params, system.basis):
        if p == 0:
            continue
        term = Poly(p, *_RING_GENS, domain=tower.domain) * _lift(b, tower)
        member = term if member is None else member + term
    resultant = member.resultant(_lift(sextic, tower))
    by_power = {}
    for (i, a, b), c in resultant.as_dict(native=True).items():
        by_power.setdefault(i, {})[(a, b, 0)] = c
    degree = target.degree(X)
    top = MultiPoly.from_native(tower, by_power.get(degree, {}))
    lead = target.coeff((degree, 0))
    equations = []
    for j in range(max([degree] + list(by_power)) + 1):
        if j == degree:
            continue
        coefficient = MultiPoly.from_native(tower, by_power.get(j, {}))
        equation = coefficient.scale(lead) - top.scale(target.coeff((j, 0)))
        if not equation.is_zero():
            equations.append(equation)
    return equations


def _linear_roots(p):
    roots = []
    for factor, _ in p.factor_list():
        if factor.total_degree() == 1:
            var = factor.single_variable()
            exps = [0, 0, 0]
            exps[(X, Y, Z).index(var)] = 1
            roots.append(-factor.coeff((0, 0, 0)) / factor.coeff(exps))
    return roots


def _solve(equations, unknowns, precision):
    """Exact common solutions in the tower, as tuples of FieldElements."""
    if unknowns == 0:
        return [()] if not equations else []
    if not equations:
        raise ProcedureInapplicable("every member of the system meets the curve only at the inner points")
    if unknowns == 1:
        common = equations[0]
        for e in equations[1:]:
            common = common.gcd(e)
        return [(r,) for r in _linear_roots(common)]
    ordered = sorted(equations, key=lambda e: (e.total_degree(), len(e.native_terms())))
    try:
        orbits = common_zeros(ordered[:3])
    except EliminationDegenerate:
        try:
            orbits = common_zeros(ordered)
        except EliminationDegenerate as e:
            raise ProcedureInapplicable("the conditions on the conic do not cut out finitely many members: %s" % e)
    solutions = []
    for orbit in orbits:
        if orbit.degree != 1:
            continue
        point = orbit.exact_point()
        if all(e.evaluate_at((point.x, point.y, None)).is_zero() for e in ordered):
            solutions.append((point.x, point.y))
    return solutions


def _parameter_charts(alpha):
    if alpha == 0:
        return [((1,), 0)]
    if alpha == 1:
        return [((1, _S), 1), ((0, 1), 0)]
    return [((1, _S, _R), 2), ((0, 1, _S), 1), ((0, 0, 1), 0)]


def _substitute(params, values, tower):
    subs = dict(zip((_S, _R), values))
    out = []
    for p in params:
        if p in subs:
            out.append(subs[p])
        else:
            out.append(tower.convert(p))
    return out


def _restrict_to_line(p, line):
    """Coefficients of p(x0 + m t, t) in t, lowest first."""
    a, b, c, d = line
    tower = p.tower
    t = MultiPoly.gen(tower, Y)
    x = t.scale(tower.convert(c) / d) + tower.convert(a) / b
    restricted = p.compose(x, t)
    return [restricted.coeff((0, k)) for k in range(p.total_degree() + 1)]


def _scalar_candidates(sextic, f2):
    """Values c for which sextic - c f2^3 is a square along each test line."""
    tower = common_tower(sextic.tower, f2.tower)
    z = MultiPoly.gen(tower, Z)
    cube = (f2 ** 3).embed(tower)
    found = []
    for line in LINES:
        u = [MultiPoly.constant(tower, fk) - z.scale(ck)
             for fk, ck in zip(_restrict_to_line(sextic.embed(tower), line), _restrict_to_line(cube, line))]
        if len(u) != 7:
            continue
        w = u[6]
        a = u[5]
        b = u[4] * w * 4 - a * a
        c = u[3] * w * w * 8 - a * b
        conditions = [u[2] * w ** 3 * 64 - b * b - a * c * 4,
                      u[1] * w ** 4 * 64 - b * c,
                      u[0] * w ** 5 * 256 - c * c]
        conditions = [e for e in conditions if not e.is_zero()]
        if not conditions:
            continue
        common = conditions[0]
        for e in conditions[1:]:
            common = common.gcd(e)
        for root in _linear_roots(common):
            if root not in found and not root.is_zero():
                found.append(root)
    return found


def _normalize(f3):
    lead = f3.leading_coefficient()
    first = next(c for c in lead.coords if c)
    return -f3 if first < 0 else f3


def _witness_from_conic(sextic, f2):
    for c in _scalar_candidates(sextic, f2):
        rest = sextic - (f2 ** 3).scale(c)
        if rest.is_zero():
            continue
        b = rest.leading_coefficient()
        h = perfect_square_cubic(rest.scale(b.inverse()))
        if h is None:
            continue
        ratio = c / b
        witness = TorusWitness(f2.scale(ratio), _normalize(h.scale(ratio)), b ** 3 / (c * c))
        if verify_torus_decomposition(sextic, witness):
            return witness
        logger.warning("Discarding a decomposition that does not verify: %r" % witness)
    return None


def _as_candidates(sextic, product, inner):
    candidates = []
    for item in inner:
        if isinstance(item, InnerCandidate):
            candidates.append(item)
        elif isinstance(item, SingularityRecord):
            candidates.extend(inner_candidates([item]))
        else:
            try:
                record = classify_simple_singularity(product, item)
            except NotSimple as e:
                raise ProcedureInapplicable(str(e))
            if record.sing_type not in INNER_TYPES:
                raise ProcedureInapplicable("%s is an %s, not an inner singularity type" % (item, record.sing_type))
            candidates.append(InnerCandidate(record.sing_type, [record]))
    merged = OrderedDict()
    for c in candidates:
        key = id(c.orbit) if c.orbit is not None else c.location
        if key in merged and c.orbit is not None:
            merged[key].records.extend(c.records)
        else:
            merged[key] = c
    return list(merged.values())


def _search(sextic, product, candidates, precision):
    constraints = []
    for candidate in candidates:
        if candidate.location.at_infinity:
            raise ProcedureInapplicable("the inner point %s lies at infinity" % candidate.location)
        constraints.extend(_inner_constraints(candidate, sextic, product))
    try:
        system = conic_linear_system(constraints, product.tower)
    except EmptySystem:
        logger.debug("No conic satisfies the conditions at %s" % candidates)
        return None
    if system.alpha > 2:
        raise TooManyParameters("the conics through %s form a system of dimension %d" % (candidates, system.alpha))
    tower = common_tower(system.tower, product.tower)
    target = _target_polynomial(candidates, tower)
    tower = common_tower(tower, target.tower)
    logger.debug("Searching a system of conics of dimension %d" % system.alpha)
    for params, unknowns in _parameter_charts(system.alpha):
        equations = _equations(system, params, product, target, tower)
        for values in _solve(equations, unknowns, precision):
            f2 = system.member(_substitute(params, values, tower))
            witness = _witness_from_conic(product.embed(tower), f2)
            if witness is not None:
                return witness
    return None


def find_torus_decomposition(sextic, inner, precision=53):
    """A TorusWitness whose inner singularities are the given points, or None.

    `inner` holds AlgebraicPoints, SingularityRecords or InnerCandidates.
    When their weights add up to less than 6 the remaining inner points
    are chosen among the other singular points of the sextic.
    """
    product = _product(sextic)
    if product.total_degree() != 6:
        raise DegreeMismatch("torus decompositions need a sextic, got degree %d" % product.total_degree())
    given = _as_candidates(sextic, product, inner)
    weight = sum(c.weight for c in given)
    if weight > 6:
        logger.info("The inner points %s have total weight %d" % (given, weight))
        return None
    subsets = [given]
    if weight < 6:
        taken = set(r.location for c in given for r in c.records if r.location.is_exact)
        others = [c for c in inner_candidates(analyze_singularities(sextic, precision=precision))
                  if c.orbit is not None or c.location not in taken]
        subsets = weight_subsets(given + others, required=given)
    for subset in subsets:
        witness = _search(sextic, product, subset, precision)
        if witness is not None:
            logger.info("Found a torus decomposition with inner singularities %s" % subset)
            return witness
    return None


def _witness_from_file(definition):
    entries = definition.witness
    f2 = parse_poly(entries["f2"], definition.tower)
    f3 = parse_poly(entries["f3"], definition.tower)
    scalar = parse_constant(entries.get("scalar", "1"), definition.tower)
    return TorusWitness(f2, f3, scalar)


def _linear_check(witness, inner):
    linear = is_linear_torus_type(witness)
    if linear:
        outside = set(r.sing_type for r in inner) - set(LINEAR_INNER_TYPES)
        if outside:
            logger.warning("A linear torus decomposition with inner singularities %s" % ", ".join(sorted(outside)))
    return linear


def _inner_records(witness, records):
    points = set(p for p in witness.inner_points() if p.is_exact)
    return [r for r in records if r.location in points]


def decide_torus(definition, records=None, charts=CHARTS, precision=53):
    """TorusVerdict for a sextic: torus with a witness, non-torus over the tower, or undecided."""
    product = _product(definition)
    if product.total_degree() != 6:
        raise DegreeMismatch("the torus decision needs a sextic, got degree %d" % product.total_degree())
    if records is None:
        records = analyze_singularities(definition, charts, precision)
    if isinstance(definition, CurveDefinition) and definition.witness:
        witness = _witness_from_file(definition)
        if verify_torus_decomposition(product, witness):
            inner = _inner_records(witness, records)
            return TorusVerdict(TORUS, witness, inner, "the supplied decomposition verifies",
                                _linear_check(witness, inner))
        logger.warning("The supplied torus decomposition of %s does not verify" % definition.name)
    if not records:
        return TorusVerdict(NON_TORUS, reason="the curve is smooth")
    if any(r.sing_type == "NotSimple" for r in records):
        return TorusVerdict(UNDECIDED, reason="the configuration is incomplete")
    candidates = inner_candidates(records)
    if not candidates:
        return TorusVerdict(NON_TORUS, reason="no singular point is of an inner type")
    subsets = weight_subsets(candidates)
    if not subsets:
        return TorusVerdict(NON_TORUS, reason="no set of inner candidates has total weight 6")
    problems = []
    for subset in subsets:
        try:
            witness = _search(definition, product, subset, precision)
        except (TooManyParameters, ProcedureInapplicable, RequiresExactPoint, EliminationDegenerate) as e:
            logger.info("Skipping the inner candidates %s: %s" % (subset, e))
            problems.append(str(e))
            continue
        if witness is not None:
            inner = [r for c in subset for r in c.records]
            return TorusVerdict(TORUS, witness, inner, "decomposition found", _linear_check(witness, inner))
    if problems:
        return TorusVerdict(UNDECIDED, reason="; ".join(problems))
    return TorusVerdict(NON_TORUS, reason="no decomposition over %s for %d sets of inner candidates"
                        % (product.tower, len(subsets)))


def _pencil_parts(residual):
    """{power of z: coefficient in x} of a polynomial in x, z."""
    parts = {}
    for (i, j, k), c in residual.native_terms().items():
        parts.setdefault(k, {})[(i, j, 0)] = c
    return dict((k, MultiPoly.from_native(residual.tower, rep)) for k, rep in parts.items())


def _flex_minimal(flex, tower):
    location = flex.location if hasattr(flex, "location") else flex
    if location.at_infinity:
        raise ProcedureInapplicable("the flex %s lies at infinity" % location)
    x = MultiPoly.gen(tower, X)
    if location.is_exact:
        return x - location.x
    orbit = getattr(flex, "orbit", None)
    if orbit is None:
        raise RequiresExactPoint("the flex %s has neither exact coordinates nor an orbit" % location)
    full = orbit.lift(common_tower(orbit.tower, tower)).coordinate_polynomial(0)
    return _factor_through(full, location.x)


def _factor_through(p, box):
    """The irreducible factor of p with a root in `box`; the other members of the orbit are dropped."""
    factors = []
    for root in isolate_roots(p):
        if not root.is_exact and not root.value.is_disjoint(box) and root.factor not in factors:
            factors.append(root.factor)
    if len(factors) != 1:
        raise UncertifiableInterval("%d factors of %s have a root in %s" % (len(factors), p, box))
    return factors[0]


def is_flex_of_torus_type(quintic, flex, inner):
    """Whether the quintic plus the tangent line at the flex is of torus type.

    The conics h2 = b0 + z b1 through the inner singularities meet the
    quintic there with a common multiplicity; what is left, S2(x, z), must
    be of degree 2 in x. The flex is of torus type when for some z
    S2 is proportional to (x - x_P)^2, that is when disc_x S2 and
    Res_x(S2, m) have a common root, m being the minimal polynomial of
    the flex's x-coordinate. Exact flexes are confirmed by a decomposition.
    """
    product = _product(quintic)
    candidates = _as_candidates(quintic, product, inner)
    constraints = []
    for candidate in candidates:
        constraints.extend(_inner_constraints(candidate, quintic, product))
    system = conic_linear_system(constraints, product.tower)
    if system.alpha != 1:
        raise ProcedureInapplicable("the conics through the inner points form a system of dimension %d"
                                    % system.alpha)
    tower = common_tower(system.tower, product.tower)
    z = MultiPoly.gen(tower, Z)
    pencil = system.basis[0].embed(tower) + z * system.basis[1].embed(tower)
    residual = pencil.resultant(product.embed(tower), Y)
    parts = _pencil_parts(residual)
    common = None
    for part in parts.values():
        common = part if common is None else common.gcd(part)
    residual = residual.exquo(common)
    if residual.degree(X) != 2:
        raise ProcedureInapplicable("the residual intersection has degree %d in x" % residual.degree(X))
    minimal = _flex_minimal(flex, tower)
    b1 = residual.discriminant(X)
    b2 = residual.resultant(minimal, X)
    shared = b1.gcd(b2) if not (b1.is_zero() and b2.is_zero()) else b1
    torus = not shared.is_constant() or shared.is_zero()
    top = _pencil_parts(residual).get(residual.degree(Z))
    if not torus and top is not None and top.degree(X) == 2:
        torus = top.discriminant(X).is_zero() and top.resultant(minimal, X).is_zero()
    location = flex.location if hasattr(flex, "location") else flex
    logger.info("The flex %s is %sof torus type by the pencil test" % (location, "" if torus else "not "))
    if not torus or not location.is_exact:
        return torus
    line = getattr(flex, "tangent_line", None)
    if line is None:
        line = tangent_line(product, location)
    tower = common_tower(product.tower, line.tower)
    sextic = CurveDefinition("flex-tangent", tower,
                             [("B%d" % product.total_degree(), product.embed(tower)), ("B1", line.embed(tower))])
    try:
        witness = find_torus_decomposition(sextic, list(candidates) + [location])
    except ProcedureInapplicable as e:
        logger.warning("Cannot confirm the torus flex %s: %s" % (location, e))
        return False
    if witness is None:
        logger.warning("No decomposition confirms the torus flex %s" % location)
    return witness is not None


def flex_pairs(definition, flexes):
    """[((P, Q), verdict)] for the curve plus the tangent lines at each pair of exact flexes."""
    out = []
    exact = [f for f in flexes if f.is_exact and f.tangent_line is not None]
    for first, second in itertools.combinations(exact, 2):
        if first.tangent_line == second.tangent_line:
            continue
        sextic = flex_tangent_sextic(definition, [first, second])
        verdict = decide_torus(sextic)
        out.append(((first.location, second.location), verdict))
    return out
