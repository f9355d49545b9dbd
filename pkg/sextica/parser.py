#
# parser.py
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

"""The polynomial expression language and the curve-file format.

Expressions use +, -, *, / (by constants only), ^ or ** with
nonnegative integer exponents, parentheses, rational literals, the
variables x, y, z and the atoms sqrt(...) and I. The file format is
documented in `doc/curve_format.md`.

"""

import logging
import re
from collections import OrderedDict

from sympy import Add, I, Poly, Rational, expand, sqrt

from .errors import CurveSyntaxError, DegreeMismatch, MalformedInput, UnknownRadical
from .field import RATIONALS, common_tower, format_element, make_tower, tower_extend
from .poly import GENS, X, Y, Z, MultiPoly

logger = logging.getLogger(__name__)

LABEL_PATTERN = re.compile(r"^B(\d+)('*)$")

_TOKEN = re.compile(r"\s*(?:(?P<number>\d+(?:\.\d+)?)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>\*\*|[-+*/^()]))")
_NAMES = {"x": X, "y": Y, "z": Z}


class _Token(object):
    __slots__ = ("kind", "text", "line", "column")

    def __init__(self, kind, text, line, column):
        self.kind = kind
        self.text = text
        self.line = line
        self.column = column


def _tokenize(text, line=1, column=1):
    tokens = []
    pos = 0
    row, col = line, column
    while pos < len(text):
        if text[pos] == "\n":
            pos += 1
            row += 1
            col = 1
            continue
        if text[pos].isspace():
            pos += 1
            col += 1
            continue
        match = _TOKEN.match(text, pos)
        if match is None or match.end() == pos:
            raise CurveSyntaxError("unexpected character %r" % text[pos], row, col)
        kind = match.lastgroup
        token_text = match.group(kind)
        start = match.start(kind)
        col += start - pos
        tokens.append(_Token(kind, token_text, row, col))
        col += len(token_text)
        pos = match.end()
    tokens.append(_Token("end", "", row, col))
    return tokens


class _Parser(object):
    """Recursive descent over the token list, producing a sympy expression."""

    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    @property
    def current(self):
        return self.tokens[self.pos]

    def _fail(self, message, token=None):
        token = token or self.current
        raise CurveSyntaxError(message, token.line, token.column)

    def _accept(self, *ops):
        token = self.current
        if token.kind == "op" and token.text in ops:
            self.pos += 1
            return token
        return None

    def _expect(self, op):
        if self._accept(op) is None:
            found = self.current.text or "end of input"
            self._fail("expected %r, found %r" % (op, found))

    def parse(self):
        if self.current.kind == "end":
            self._fail("empty expression")
        value = self.expression()
        if self.current.kind != "end":
            self._fail("unexpected %r" % self.current.text)
        return value

    def expression(self):
        value = self.term()
        while True:
            token = self._accept("+", "-")
            if token is None:
                return value
            rhs = self.term()
            value = value + rhs if token.text == "+" else value - rhs

    def term(self):
        value = self.unary()
        while True:
            token = self._accept("*", "/")
            if token is None:
                return value
            rhs = self.unary()
            if token.text == "*":
                value = value * rhs
                continue
            if rhs.free_symbols:
                self._fail("division by a non-constant", token)
            if expand(rhs) == 0:
                self._fail("division by zero", token)
            value = value / rhs

    def unary(self):
        token = self._accept("+", "-")
        if token is None:
            return self.power()
        value = self.unary()
        return value if token.text == "+" else -value

    def power(self):
        base = self.atom()
        token = self._accept("^", "**")
        if token is None:
            return base
        exponent = self.unary()
        if exponent.free_symbols or not exponent.is_Integer or exponent < 0:
            self._fail("exponents must be nonnegative integers", token)
        return base ** int(exponent)

    def atom(self):
        token = self.current
        if token.kind == "number":
            self.pos += 1
            return Rational(token.text)
        if token.kind == "name":
            self.pos += 1
            if token.text in _NAMES:
                return _NAMES[token.text]
            if token.text == "I":
                return I
            if token.text == "sqrt":
                self._expect("(")
                argument = self.expression()
                self._expect(")")
                if argument.free_symbols:
                    self._fail("sqrt of a non-constant", token)
                return sqrt(argument)
            self._fail("unknown name %r" % token.text, token)
        if self._accept("("):
            value = self.expression()
            self._expect(")")
            return value
        found = token.text or "end of input"
        self._fail("unexpected %r" % found)


def parse_expression(text, line=1, column=1):
    """Parse to an (unexpanded) sympy expression."""
    return _Parser(_tokenize(text, line, column)).parse()


def infer_tower(expr):
    """The smallest tower (depth <= 2) housing the coefficients of `expr`.

    Radical parts whose square is rational are adjoined in a canonical
    order; anything else needs a declared tower.
    """
    expr = expand(expr)
    coefficients = Poly(expr, *GENS, domain="EX").as_dict().values() if expr.free_symbols else [expr]
    radicals = set()
    for c in coefficients:
        for term in Add.make_args(expand(c)):
            _, rest = term.as_coeff_Mul()
            if rest != 1:
                radicals.add(rest)
    tower = RATIONALS
    for r in sorted(radicals, key=str):
        try:
            tower.from_sympy(r)
            continue
        except UnknownRadical:
            pass
        square = expand(r * r)
        if not square.is_Rational:
            raise UnknownRadical("%s needs a declared tower" % r)
        if tower.depth >= 2:
            raise UnknownRadical("%s does not fit in %s" % (r, tower))
        tower = tower_extend(tower, square)
    return tower


def parse_poly(text, tower=None, line=1, column=1):
    """Parse a polynomial; without a tower the smallest fitting one is inferred.

    Examples
    --------
    parse_poly("y^2 + x^2 - 1")
    parse_poly("(1 - (1/2)*I*sqrt(3))*x^3")
    """
    expr = expand(parse_expression(text, line, column))
    if tower is None:
        tower = infer_tower(expr)
    if not expr.free_symbols:
        return MultiPoly.constant(tower, tower.from_sympy(expr))
    return MultiPoly.from_sympy(expr, tower)


def parse_constant(text, tower=None, line=1, column=1):
    """Parse a constant expression to a FieldElement."""
    p = parse_poly(text, tower, line, column)
    if not p.is_constant():
        raise CurveSyntaxError("expected a constant, got %s" % text, line, column)
    return p.coeff((0, 0, 0))


def _monomial(exps):
    parts = []
    for name, e in zip("xyz", exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append("%s^%d" % (name, e))
    return "*".join(parts)


def format_poly(p):
    """Canonical text: graded-lex terms, radicals as sqrt(d); parse_poly inverts it."""
    terms = p.terms()
    if not terms:
        return "0"
    out = []
    for exps, c in terms:
        monomial = _monomial(exps)
        negative = False
        if c.is_rational():
            q = c.to_rational()
            negative = q < 0
            q = abs(q)
            if monomial and q == 1:
                text = monomial
            else:
                text = ("%d" % q.numerator if q.denominator == 1 else "%d/%d" % (q.numerator, q.denominator))
                if monomial:
                    text += "*" + monomial
        else:
            text = "(%s)" % format_element(c)
            if monomial:
                text += "*" + monomial
        if not out:
            out.append(("-" if negative else "") + text)
        else:
            out.append((" - " if negative else " + ") + text)
    return "".join(out)


class CurveDefinition(object):
    """A curve given as a list of labelled components over a tower.

    Attributes
    ----------
    name : str
    tower : FieldTower
    components : list of (str, MultiPoly)
        Labels like "B4", "B1'" with the factor polynomials.
    expected : OrderedDict
        Raw `[expected]` entries, consumed by the corpus runner.
    conics : OrderedDict
        Raw `[conics]` entries describing a linear system of conics.
    witness : OrderedDict
        Raw `[witness]` entries (f2, f3, scalar) of a claimed torus decomposition.
    """

    def __init__(self, name, tower, components, expected=None, conics=None, witness=None):
        self.name = name
        self.tower = tower
        self.components = list(components)
        self.expected = expected if expected is not None else OrderedDict()
        self.conics = conics if conics is not None else OrderedDict()
        self.witness = witness if witness is not None else OrderedDict()
        for label, poly in self.components:
            check_label(label, poly)

    @property
    def component_type(self):
        return "+".join(label for label, _ in self.components)

    @property
    def degree(self):
        return sum(p.total_degree() for _, p in self.components)

    def component(self, label):
        for name, poly in self.components:
            if name == label:
                return poly
        raise MalformedInput("%s has no component %s" % (self.name, label))

    def labels(self):
        return [label for label, _ in self.components]

    def product(self):
        result = MultiPoly.constant(self.tower, 1)
        for _, poly in self.components:
            result = result * poly
        return result

    def with_components(self, extra, name=None):
        """A new definition with additional (label, poly) components, over a common tower."""
        extra = list(extra)
        tower = self.tower
        for _, poly in extra:
            tower = common_tower(tower, poly.tower)
        components = [(label, poly.embed(tower)) for label, poly in self.components + extra]
        return CurveDefinition(name or self.name, tower, components, self.expected, self.conics, self.witness)

    def is_heavy(self):
        return self.expected.get("heavy", "false").strip().lower() in ("true", "yes", "1")


def check_label(label, poly):
    match = LABEL_PATTERN.match(label)
    if match is None:
        raise MalformedInput("component labels look like B4 or B1', got %r" % label)
    if int(match.group(1)) != poly.total_degree():
        raise DegreeMismatch("component %s has degree %d" % (label, poly.total_degree()))
    if poly.variables() - set([X, Y]):
        raise MalformedInput("component %s must be a polynomial in x and y" % label)


_SECTION = re.compile(r"^\[(\w+)(?:\s+(\S+))?\]$")


def parse_curve_file(text, source="<string>"):
    """Parse the text of a curve file to a CurveDefinition."""
    name = None
    tower = RATIONALS
    declared = False
    components = []
    expected = OrderedDict()
    conics = OrderedDict()
    witness = OrderedDict()
    section = None
    label = None
    buffer = []
    buffer_line = 0
    last_key = None

    def flush():
        if label is None or not buffer:
            return
        body = "\n".join(buffer)
        poly = parse_poly(body, tower if declared else None, buffer_line, 1)
        components.append((label, poly))

    lines = text.splitlines()
    for number, raw in enumerate(lines, 1):
        stripped = raw.strip()
        if stripped.startswith("#"):
            continue
        match = _SECTION.match(stripped)
        if match:
            if section == "component":
                flush()
                if not buffer:
                    raise CurveSyntaxError("component %s has no polynomial" % label, number, 1)
            section = match.group(1)
            if section not in ("tower", "component", "expected", "conics", "witness"):
                raise CurveSyntaxError("unknown section [%s]" % section, number, 1)
            if section == "component":
                label = match.group(2)
                if label is None:
                    raise CurveSyntaxError("[component] needs a label", number, 1)
                if any(label == other for other, _ in components):
                    raise CurveSyntaxError("duplicate component %s" % label, number, 1)
            elif match.group(2) is not None:
                raise CurveSyntaxError("[%s] takes no argument" % section, number, 1)
            buffer = []
            last_key = None
            continue
        if section == "component":
            if not stripped:
                if buffer:
                    flush()
                    section = "done"
                continue
            if not buffer:
                buffer_line = number
            buffer.append(raw)
            continue
        if not stripped:
            last_key = None
            continue
        if section in ("expected", "conics", "witness") and raw[:1].isspace() and last_key is not None:
            target = {"expected": expected, "conics": conics, "witness": witness}[section]
            target[last_key] = (target[last_key] + " " + stripped).strip()
            continue
        if "=" not in stripped:
            raise CurveSyntaxError("expected 'key = value'", number, 1)
        key, value = [part.strip() for part in stripped.split("=", 1)]
        column = raw.index("=") + 2
        if section is None:
            if key != "name":
                raise CurveSyntaxError("unknown header key %r" % key, number, 1)
            name = value
        elif section == "tower":
            if key != "radicand":
                raise CurveSyntaxError("unknown tower key %r" % key, number, 1)
            radicand = parse_constant(value, tower, number, column)
            tower = tower_extend(tower, radicand)
            declared = True
        elif section == "done":
            raise CurveSyntaxError("text after the end of a component", number, 1)
        else:
            target = {"expected": expected, "conics": conics, "witness": witness}[section]
            if section == "witness" and key not in ("f2", "f3", "scalar"):
                raise CurveSyntaxError("unknown witness key %r" % key, number, 1)
            if key in target and section == "conics" and key == "constraint":
                target[key] = target[key] + "; " + value
            else:
                target[key] = value
            last_key = key
    if section == "component":
        flush()
        if not buffer:
            raise CurveSyntaxError("component %s has no polynomial" % label, len(lines), 1)
    if not components:
        raise MalformedInput("%s defines no components" % source)
    if not declared:
        tower = _join_towers([p.tower for _, p in components])
    components = [(l, p.embed(tower)) for l, p in components]
    name = name or source
    logger.info("Parsed %s: %s over %s" % (name, "+".join(l for l, _ in components), tower))
    return CurveDefinition(name, tower, components, expected, conics, witness)


def _join_towers(towers):
    best = RATIONALS
    for t in towers:
        if t.contains(best):
            best = t
        elif not best.contains(t):
            raise MalformedInput("components use incompatible radicals; declare a [tower]")
    return best


def read_curve_file(path):
    with open(path) as f:
        text = f.read()
    return parse_curve_file(text, source=path)


def make_definition(name, components, radicands=()):
    """Build a definition from (label, text) pairs, mostly for tests."""
    tower = make_tower(radicands) if radicands else None
    parsed = [(label, parse_poly(text, tower)) for label, text in components]
    if tower is None:
        tower = _join_towers([p.tower for _, p in parsed])
    return CurveDefinition(name, tower, [(l, p.embed(tower)) for l, p in parsed])
