#
# errors.py
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

"""Exceptions raised by sextica.

Every error derives from `SexticaError`. Input problems derive from
`MalformedInput` and limits of the exact machinery from
`LimitExceeded`, so that the command line tool can map them onto its
exit codes.

"""


class SexticaError(Exception): pass


class MalformedInput(SexticaError): pass

class LimitExceeded(SexticaError): pass


class CurveSyntaxError(MalformedInput):

    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        if line is not None:
            message = "%s (line %d, column %d)" % (message, line, column)
        super(CurveSyntaxError, self).__init__(message)

class UnknownRadical(MalformedInput): pass

class DegreeMismatch(MalformedInput): pass

class DegreeTooSmall(MalformedInput): pass

class NotSquareFree(MalformedInput): pass


class TowerDepthExceeded(SexticaError): pass

class RadicandIsSquare(SexticaError): pass

class IncompatibleTowers(SexticaError): pass

class DivisionByZero(SexticaError, ZeroDivisionError): pass

class RequiresExactPoint(SexticaError): pass

class UncertifiableInterval(SexticaError): pass


class NotSingular(SexticaError): pass

class SingularPoint(SexticaError): pass

class PointNotOnCurve(SexticaError): pass

class NotSimple(SexticaError): pass

class NotConicalFlex(SexticaError): pass

class CurveDegreeTooSmall(SexticaError): pass

class VerticalTangentUnresolvable(SexticaError): pass

class EmptySystem(SexticaError): pass

class CommonComponent(SexticaError): pass

class EliminationDegenerate(SexticaError): pass

class ProcedureInapplicable(SexticaError): pass

class UnknownDefect(SexticaError): pass


class PrecisionExhausted(LimitExceeded): pass

class TooManyParameters(LimitExceeded): pass
