#
# field.py
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

"""Exact arithmetic in towers of at most two quadratic extensions of the
rationals, and certified complex boxes for numbers that leave the tower.

"""

import logging
import os
from fractions import Fraction

import mpmath
from sympy import Add, QQ, Rational, S, expand, integer_nthroot, sqrt, sympify
from sympy.ntheory.factor_ import core
from sympy.polys.matrices import DomainMatrix
from sympy.polys.polyerrors import CoercionFailed

from .errors import (DivisionByZero, IncompatibleTowers, MalformedInput,
                     PrecisionExhausted, RadicandIsSquare, TowerDepthExceeded,
                     UncertifiableInterval, UnknownRadical)

logger = logging.getLogger(__name__)

MAX_DEPTH = 2
DEFAULT_PRECISION_CAP = 4096
GUARD_BITS = 16


def precision_cap():
    """Largest working precision in bits, from ``SEXTICA_PRECISION_CAP``."""
    value = os.environ.get("SEXTICA_PRECISION_CAP")
    if not value:
        return DEFAULT_PRECISION_CAP
    try:
        cap = int(value)
    except ValueError:
        raise MalformedInput("SEXTICA_PRECISION_CAP must be an integer, got %r" % value)
    if cap < 64:
        raise MalformedInput("SEXTICA_PRECISION_CAP must be at least 64")
    return cap


def to_fraction(q):
    """Convert a rational of any flavour (QQ element, sympy Rational, int) to a Fraction."""
    if isinstance(q, Fraction):
        return q
    if isinstance(q, int):
        return Fraction(q)
    return Fraction(int(q.numerator), int(q.denominator))


def rational_sqrt(q):
    """Exact square root of a nonnegative rational, or None."""
    q = to_fraction(q)
    if q < 0:
        return None
    num, num_exact = integer_nthroot(q.numerator, 2)
    den, den_exact = integer_nthroot(q.denominator, 2)
    if num_exact and den_exact:
        return Fraction(int(num), int(den))
    return None


def format_rational(q):
    q = to_fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return "%d/%d" % (q.numerator, q.denominator)


_towers = {}


def make_tower(radicands=()):
    """Return the (shared) tower generated by the square roots of `radicands`.

    Each radicand is a sympy expression living in the tower generated by
    the radicands before it.
    """
    key = tuple(sympify(r) for r in radicands)
    tower = _towers.get(key)
    if tower is None:
        tower = FieldTower(key)
        _towers[key] = tower
    return tower


class FieldTower(object):
    """A tower QQ c QQ(sqrt(d1)) c QQ(sqrt(d1))(sqrt(d2)).

    Attributes
    ----------
    radicands : tuple
        sympy expressions d1[, d2]; d2 is written in terms of sqrt(d1).
    domain : sympy domain
        ``QQ`` or the ``AlgebraicField`` generated by the square roots.
    basis_exprs : list
        sympy expressions of the canonical basis {1, sqrt(d1), sqrt(d2),
        sqrt(d1)*sqrt(d2)}, truncated to the depth of the tower.

    Use `make_tower` or `tower_extend` rather than the constructor, so
    that equal towers share one sympy domain.
    """

    def __init__(self, radicands):
        if len(radicands) > MAX_DEPTH:
            raise TowerDepthExceeded("at most %d quadratic extensions are supported" % MAX_DEPTH)
        self.radicands = tuple(radicands)
        self.depth = len(self.radicands)
        self.degree = 2 ** self.depth
        gens = [sqrt(r) for r in self.radicands]
        if self.depth == 0:
            self.domain = QQ
            self.basis_exprs = [S.One]
            self._basis = [QQ.one]
        else:
            self.domain = QQ.algebraic_field(*gens)
            values = [self.domain.from_sympy(g) for g in gens]
            if self.depth == 1:
                self.basis_exprs = [S.One, gens[0]]
                self._basis = [self.domain.one, values[0]]
            else:
                self.basis_exprs = [S.One, gens[0], gens[1], gens[0] * gens[1]]
                self._basis = [self.domain.one, values[0], values[1], values[0] * values[1]]
            self._inverse = self._coordinate_matrix()
        self._interval_cache = {}
        logger.debug("Built tower %s of degree %d" % (self, self.degree))

    def _coordinate_matrix(self):
        n = self.degree
        columns = []
        for b in self._basis:
            rep = list(reversed(b.to_list()))
            columns.append(rep + [QQ.zero] * (n - len(rep)))
        rows = [[columns[j][k] for j in range(n)] for k in range(n)]
        return DomainMatrix(rows, (n, n), QQ).inv().to_list()

    def __eq__(self, other):
        return isinstance(other, FieldTower) and self.radicands == other.radicands

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.radicands)

    def __str__(self):
        text = "QQ"
        for level in range(1, self.depth + 1):
            text += "(sqrt(%s))" % format_element(self.radicand(level))
        return text

    def __repr__(self):
        return "FieldTower(%s)" % str(self)

    @property
    def base(self):
        """The tower with the top level removed."""
        return make_tower(self.radicands[:-1])

    def level_tower(self, level):
        return make_tower(self.radicands[:level])

    def radicand(self, level):
        """The radicand of `level` (1-based) as an element of the tower below it."""
        return self.level_tower(level - 1).from_sympy(self.radicands[level - 1])

    def generator(self, level=None):
        """sqrt of the radicand at `level` (default: the top level)."""
        if level is None:
            level = self.depth
        if level < 1 or level > self.depth:
            raise ValueError("tower %s has no level %d" % (self, level))
        return FieldElement(self, self._basis[2 ** (level - 1)])

    def contains(self, other):
        """True iff `other` is a subtower (prefix) of this tower."""
        return self.radicands[:other.depth] == other.radicands

    @property
    def zero(self):
        return FieldElement(self, self.domain.zero)

    @property
    def one(self):
        return FieldElement(self, self.domain.one)

    def coords(self, value):
        """Rational coordinates of a domain element w.r.t. the canonical basis."""
        if self.depth == 0:
            return (to_fraction(value),)
        rep = list(reversed(value.to_list()))
        rep += [QQ.zero] * (self.degree - len(rep))
        return tuple(to_fraction(sum((row[k] * rep[k] for k in range(self.degree)), QQ.zero))
                     for row in self._inverse)

    def value_from_coords(self, coords):
        if len(coords) > self.degree:
            raise IncompatibleTowers("%d coordinates do not fit in %s" % (len(coords), self))
        value = self.domain.zero
        for c, b in zip(coords, self._basis):
            c = to_fraction(c)
            if c:
                value += b * self.domain.convert(QQ(c.numerator, c.denominator))
        return value

    def from_coords(self, coords):
        return FieldElement(self, self.value_from_coords(coords))

    def convert(self, value):
        """Coerce ints, rationals, sympy numbers and elements of subtowers."""
        if isinstance(value, FieldElement):
            if value.tower == self:
                return value
            if not self.contains(value.tower):
                raise IncompatibleTowers("%s does not embed in %s" % (value.tower, self))
            return self.from_coords(value.coords)
        if isinstance(value, (int, Fraction)):
            return self.from_coords((to_fraction(value),))
        if isinstance(value, Rational):
            return self.from_coords((Fraction(int(value.p), int(value.q)),))
        if hasattr(value, "numerator") and hasattr(value, "denominator"):
            return self.from_coords((to_fraction(value),))
        return self.from_sympy(value)

    def from_sympy(self, expr):
        """Convert a sympy expression whose radicals lie in the tower.

        Each term of the expanded expression is matched against the
        canonical basis; anything else goes through sympy's number field
        machinery, and expressions outside the tower raise UnknownRadical.
        """
        expr = expand(sympify(expr))
        coords = [Fraction(0)] * self.degree
        for term in Add.make_args(expr):
            for j, b in enumerate(self.basis_exprs):
                ratio = term / b
                if ratio.is_Rational:
                    coords[j] += Fraction(int(ratio.p), int(ratio.q))
                    break
            else:
                return self._from_number_field(expr)
        return self.from_coords(coords)

    def _from_number_field(self, expr):
        if self.depth == 0:
            raise UnknownRadical("%s is not rational" % expr)
        try:
            return FieldElement(self, self.domain.from_sympy(expr))
        except (CoercionFailed, NotImplementedError, ValueError) as e:
            raise UnknownRadical("%s does not lie in %s (%s)" % (expr, self, e))

    def basis_intervals(self, work):
        """Certified boxes of the basis elements on the 2^-work grid."""
        boxes = self._interval_cache.get(work)
        if boxes is not None:
            return boxes
        one = ComplexInterval.exact(1, 0, work)
        if self.depth == 0:
            boxes = [one]
        else:
            roots = []
            for level in range(1, self.depth + 1):
                d = self.radicand(level).interval_at(work)
                roots.append(d.sqrt())
            if self.depth == 1:
                boxes = [one, roots[0]]
            else:
                boxes = [one, roots[0], roots[1], roots[0] * roots[1]]
        self._interval_cache[work] = boxes
        return boxes


def tower_extend(base, radicand):
    """Adjoin sqrt(radicand) to `base`.

    Raises TowerDepthExceeded when `base` is already of depth two and
    RadicandIsSquare when the radicand has a square root in `base`.
    """
    if base.depth >= MAX_DEPTH:
        raise TowerDepthExceeded("cannot extend %s any further" % base)
    radicand = base.convert(radicand)
    if radicand.is_zero():
        raise RadicandIsSquare("the radicand must be nonzero")
    if radicand.sqrt() is not None:
        raise RadicandIsSquare("%s is a square in %s" % (format_element(radicand), base))
    return make_tower(base.radicands + (radicand.to_sympy(),))


def squarefree_core(a):
    """The squarefree integer c with a = c*q^2, q rational; nonrational elements come back unchanged."""
    if not a.is_rational():
        return a
    q = a.to_rational()
    n = q.numerator * q.denominator
    return a.tower.convert(core(n) if n > 0 else -core(-n))


def common_tower(first, second):
    if first.contains(second):
        return first
    if second.contains(first):
        return second
    raise IncompatibleTowers("%s and %s have no common tower" % (first, second))


class FieldElement(object):
    """An exact number of a FieldTower.

    Elements are immutable; arithmetic between elements of nested towers
    happens in the larger tower. Plain ints, Fractions and sympy
    rationals are accepted as the other operand.
    """

    __slots__ = ("tower", "value", "_coords")

    def __init__(self, tower, value):
        self.tower = tower
        self.value = value
        self._coords = None

    @property
    def coords(self):
        if self._coords is None:
            self._coords = self.tower.coords(self.value)
        return self._coords

    def _unify(self, other):
        if isinstance(other, FieldElement):
            if other.tower == self.tower:
                return self.tower, self.value, other.value
            tower = common_tower(self.tower, other.tower)
            return tower, tower.convert(self).value, tower.convert(other).value
        return self.tower, self.value, self.tower.convert(other).value

    def __add__(self, other):
        tower, a, b = self._unify(other)
        return FieldElement(tower, a + b)

    __radd__ = __add__

    def __sub__(self, other):
        tower, a, b = self._unify(other)
        return FieldElement(tower, a - b)

    def __rsub__(self, other):
        tower, a, b = self._unify(other)
        return FieldElement(tower, b - a)

    def __mul__(self, other):
        tower, a, b = self._unify(other)
        return FieldElement(tower, a * b)

    __rmul__ = __mul__

    def __truediv__(self, other):
        tower, a, b = self._unify(other)
        if tower.domain.is_zero(b):
            raise DivisionByZero("division by zero in %s" % tower)
        return FieldElement(tower, tower.domain.quo(a, b))

    def __rtruediv__(self, other):
        tower, a, b = self._unify(other)
        if tower.domain.is_zero(a):
            raise DivisionByZero("division by zero in %s" % tower)
        return FieldElement(tower, tower.domain.quo(b, a))

    def __neg__(self):
        return FieldElement(self.tower, -self.value)

    def __pow__(self, n):
        if n < 0:
            return (self.tower.one / self) ** (-n)
        result = self.tower.domain.one
        base = self.value
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return FieldElement(self.tower, result)

    def inverse(self):
        return self.tower.one / self

    def __eq__(self, other):
        try:
            tower, a, b = self._unify(other)
        except (IncompatibleTowers, UnknownRadical):
            return False
        return a == b

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        coords = list(self.coords)
        while len(coords) > 1 and not coords[-1]:
            coords.pop()
        return hash(tuple(coords))

    def __repr__(self):
        return "FieldElement(%s)" % format_element(self)

    def __str__(self):
        return format_element(self)

    def is_zero(self):
        return self.tower.domain.is_zero(self.value)

    def is_one(self):
        return self.value == self.tower.domain.one

    def is_rational(self):
        return not any(self.coords[1:])

    def to_rational(self):
        if not self.is_rational():
            raise ValueError("%s is not rational" % self)
        return self.coords[0]

    def to_sympy(self):
        return Add(*[Rational(c.numerator, c.denominator) * b
                     for c, b in zip(self.coords, self.tower.basis_exprs) if c])

    def sqrt(self):
        """Exact square root in the same tower, or None if there is none."""
        root = _tower_sqrt(self.tower, self)
        return None if root is None else self.tower.convert(root)

    def interval_at(self, work):
        """Certified box on the 2^-work grid (no width guarantee)."""
        boxes = self.tower.basis_intervals(work)
        total = ComplexInterval.exact(0, 0, work)
        for c, box in zip(self.coords, boxes):
            if c:
                total = total + box.scale(c)
        return total

    def to_interval(self, precision=53):
        """Box of width at most 2^(1-precision)*(1+|a|) around the element."""
        if self.is_zero():
            return ComplexInterval.exact(0, 0, precision)
        if self.is_rational():
            return ComplexInterval.exact(self.coords[0], 0, precision)
        cap = precision_cap()
        work = precision + GUARD_BITS
        while True:
            try:
                box = self.interval_at(work)
            except UncertifiableInterval:
                box = None
            if box is not None and box.width() <= Fraction(2) ** (1 - precision) * (1 + box.magnitude_lower()):
                return box
            work *= 2
            if work > cap:
                raise PrecisionExhausted("%s needs more than %d bits" % (self, cap))


def _tower_sqrt(tower, a):
    if a.is_zero():
        return a
    if tower.depth == 0:
        root = rational_sqrt(a.coords[0])
        return None if root is None else tower.from_coords((root,))
    base = tower.base
    half = tower.degree // 2
    r0 = base.from_coords(a.coords[:half])
    r1 = base.from_coords(a.coords[half:])
    d = tower.radicand(tower.depth)
    g = tower.generator()
    if r1.is_zero():
        s = _tower_sqrt(base, r0)
        if s is not None:
            return tower.convert(s)
        t = _tower_sqrt(base, r0 / d)
        if t is not None:
            return tower.convert(t) * g
        return None
    n = _tower_sqrt(base, r0 * r0 - d * r1 * r1)
    if n is None:
        return None
    for m in (n, -n):
        a2 = (r0 + m) / 2
        if a2.is_zero():
            continue
        s = _tower_sqrt(base, a2)
        if s is not None:
            return tower.convert(s) + tower.convert(r1 / (2 * s)) * g
    return None


def format_element(a):
    """Render an element in the polynomial input syntax, e.g. ``1 - 1/2*sqrt(-3)``."""
    tower = a.tower
    names = ["1"]
    for level in range(1, tower.depth + 1):
        radicand = tower.radicand(level)
        inner = format_element(radicand)
        names.append("sqrt(%s)" % inner)
    if tower.depth == 2:
        names = [names[0], names[1], names[2], names[1] + "*" + names[2]]
    parts = []
    for c, name in zip(a.coords, names):
        if not c:
            continue
        if name == "1":
            text = format_rational(abs(c))
        elif abs(c) == 1:
            text = name
        else:
            text = format_rational(abs(c)) + "*" + name
        parts.append((c < 0, text))
    if not parts:
        return "0"
    negative, text = parts[0]
    out = ("-" if negative else "") + text
    for negative, text in parts[1:]:
        out += (" - " if negative else " + ") + text
    return out


def _floor_grid(q, work):
    scale = 1 << work
    return Fraction((q.numerator * scale) // q.denominator, scale)


def _ceil_grid(q, work):
    scale = 1 << work
    return Fraction(-((-q.numerator * scale) // q.denominator), scale)


def _sqrt_floor(q, work):
    if q <= 0:
        return Fraction(0)
    scaled = (q.numerator << (2 * work)) // q.denominator
    root, _ = integer_nthroot(scaled, 2)
    return Fraction(int(root), 1 << work)


def _sqrt_ceil(q, work):
    if q <= 0:
        return Fraction(0)
    scaled = -((-q.numerator << (2 * work)) // q.denominator)
    root, exact = integer_nthroot(scaled, 2)
    root = int(root)
    if not exact:
        root += 1
    return Fraction(root, 1 << work)


class _Interval(object):
    """Closed real interval with rational endpoints on a dyadic grid."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi):
        self.lo = lo
        self.hi = hi

    def __add__(self, other):
        return _Interval(self.lo + other.lo, self.hi + other.hi)

    def __sub__(self, other):
        return _Interval(self.lo - other.hi, self.hi - other.lo)

    def __neg__(self):
        return _Interval(-self.hi, -self.lo)

    def __mul__(self, other):
        products = (self.lo * other.lo, self.lo * other.hi, self.hi * other.lo, self.hi * other.hi)
        return _Interval(min(products), max(products))

    def square(self):
        if self.lo >= 0:
            return _Interval(self.lo * self.lo, self.hi * self.hi)
        if self.hi <= 0:
            return _Interval(self.hi * self.hi, self.lo * self.lo)
        return _Interval(Fraction(0), max(self.lo * self.lo, self.hi * self.hi))

    def rounded(self, work):
        return _Interval(_floor_grid(self.lo, work), _ceil_grid(self.hi, work))

    def sqrt(self, work):
        return _Interval(_sqrt_floor(max(self.lo, Fraction(0)), work), _sqrt_ceil(self.hi, work))

    def contains_zero(self):
        return self.lo <= 0 <= self.hi

    def is_exact_zero(self):
        return self.lo == 0 and self.hi == 0

    def width(self):
        return self.hi - self.lo

    def midpoint(self):
        return (self.lo + self.hi) / 2


class ComplexInterval(object):
    """A certified box [re_lo, re_hi] x [im_lo, im_hi] with dyadic corners.

    `precision` is the grid exponent: every operation rounds the result
    outward to multiples of 2^-precision, so enclosures stay rigorous
    while denominators stay bounded.
    """

    __slots__ = ("re", "im", "precision")

    def __init__(self, re, im, precision):
        self.re = re
        self.im = im
        self.precision = precision

    @classmethod
    def exact(cls, re, im, precision):
        re = to_fraction(re)
        im = to_fraction(im)
        return cls(_Interval(re, re), _Interval(im, im), precision)

    @classmethod
    def from_rectangle(cls, re_lo, im_lo, re_hi, im_hi, precision):
        return cls(_Interval(to_fraction(re_lo), to_fraction(re_hi)),
                   _Interval(to_fraction(im_lo), to_fraction(im_hi)), precision)

    def _grid(self, other):
        return max(self.precision, other.precision)

    def _coerce(self, other):
        if isinstance(other, ComplexInterval):
            return other
        if isinstance(other, FieldElement):
            return other.to_interval(self.precision)
        return ComplexInterval.exact(other, 0, self.precision)

    def __add__(self, other):
        other = self._coerce(other)
        return ComplexInterval(self.re + other.re, self.im + other.im, self._grid(other))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return ComplexInterval(self.re - other.re, self.im - other.im, self._grid(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return ComplexInterval(-self.re, -self.im, self.precision)

    def __mul__(self, other):
        other = self._coerce(other)
        work = self._grid(other)
        re = (self.re * other.re - self.im * other.im).rounded(work)
        im = (self.re * other.im + self.im * other.re).rounded(work)
        return ComplexInterval(re, im, work)

    __rmul__ = __mul__

    def scale(self, c):
        c = _Interval(to_fraction(c), to_fraction(c))
        return ComplexInterval((self.re * c).rounded(self.precision),
                               (self.im * c).rounded(self.precision), self.precision)

    def __truediv__(self, other):
        other = self._coerce(other)
        work = self._grid(other)
        norm = (other.re.square() + other.im.square()).rounded(work)
        if norm.lo <= 0:
            raise UncertifiableInterval("divisor box contains zero")
        inverse = _Interval(_floor_grid(1 / norm.hi, work), _ceil_grid(1 / norm.lo, work))
        re = ((self.re * other.re + self.im * other.im) * inverse).rounded(work)
        im = ((self.im * other.re - self.re * other.im) * inverse).rounded(work)
        return ComplexInterval(re, im, work)

    def __pow__(self, n):
        result = ComplexInterval.exact(1, 0, self.precision)
        for _ in range(n):
            result = result * self
        return result

    def sqrt(self):
        """Principal square root; fails on boxes straddling the branch cut."""
        work = self.precision
        zero = _Interval(Fraction(0), Fraction(0))
        if self.im.is_exact_zero():
            if self.re.lo >= 0:
                return ComplexInterval(self.re.sqrt(work), zero, work)
            if self.re.hi <= 0:
                return ComplexInterval(zero, (-self.re).sqrt(work), work)
        modulus = (self.re.square() + self.im.square()).rounded(work).sqrt(work)
        u = ((modulus + self.re).rounded(work))
        v = ((modulus - self.re).rounded(work))
        re = _Interval(u.lo / 2, u.hi / 2).sqrt(work)
        im = _Interval(v.lo / 2, v.hi / 2).sqrt(work)
        if self.im.lo > 0:
            return ComplexInterval(re, im, work)
        if self.im.hi < 0:
            return ComplexInterval(re, -im, work)
        if self.re.lo > 0:
            return ComplexInterval(re, _Interval(-im.hi, im.hi), work)
        raise UncertifiableInterval("square root box meets the branch cut")

    def contains_zero(self):
        return self.re.contains_zero() and self.im.contains_zero()

    def is_disjoint(self, other):
        return (self.re.hi < other.re.lo or other.re.hi < self.re.lo or
                self.im.hi < other.im.lo or other.im.hi < self.im.lo)

    def contains(self, other):
        return (self.re.lo <= other.re.lo and other.re.hi <= self.re.hi and
                self.im.lo <= other.im.lo and other.im.hi <= self.im.hi)

    def width(self):
        return max(self.re.width(), self.im.width())

    def radius(self):
        return self.width() / 2

    def midpoint(self):
        return self.re.midpoint(), self.im.midpoint()

    def magnitude_lower(self):
        """A lower bound for the max-norm of the points of the box."""
        def low(interval):
            if interval.contains_zero():
                return Fraction(0)
            return min(abs(interval.lo), abs(interval.hi))
        return max(low(self.re), low(self.im))

    def is_real(self):
        return self.im.is_exact_zero()

    def __repr__(self):
        return "ComplexInterval(%s)" % str(self)

    def __str__(self):
        digits = max(15, int(self.precision * 0.30103) + 1)
        re, im = self.midpoint()
        with mpmath.workdps(digits + 5):
            text = mpmath.nstr(mpmath.mpf(re.numerator) / re.denominator, digits)
            if im:
                im_text = mpmath.nstr(abs(mpmath.mpf(im.numerator) / im.denominator), digits)
                text += (" - " if im < 0 else " + ") + im_text + "*I"
            radius = mpmath.nstr(mpmath.mpf(self.radius().numerator) / self.radius().denominator, 3)
        return "%s ± %s" % (text, radius)


RATIONALS = make_tower(())
