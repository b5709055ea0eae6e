"""
equation_parser.py

Parse linear equations such as "6x - 15y + 10z = 4" into coefficient rows,
and print rows back in the same notation.

Grammar (whitespace-insensitive):

    equation := term (('+' | '-') term)* '=' ['+' | '-'] integer
    term     := ['+' | '-'] [integer] ['*'] variable

A missing coefficient means 1, repeated variables add up, and variables
not mentioned get coefficient 0. The Unicode minus sign is read as '-'.
"""

from __future__ import annotations
from dataclasses import dataclass
from typing import Sequence, Tuple

import pyparsing as pp

from solvers.models import Equation2, Equation3

XYZ = ("x", "y", "z")
XY = ("x", "y")
_MINUS_SIGNS = {"−": "-", "–": "-"}


class EquationSyntaxError(ValueError):
    """The text is not a linear equation; position is a 0-based character offset."""

    def __init__(self, message: str, position: int):
        super().__init__(message)
        self.position = position


class UnknownVariableError(EquationSyntaxError):
    """A term uses a variable outside the allowed set."""


@dataclass(frozen=True)
class ParsedEquation:
    variables: Tuple[str, ...]
    coefficients: Tuple[int, ...]
    rhs: int

    def coefficient(self, variable: str) -> int:
        return self.coefficients[self.variables.index(variable)]

    def to_equation3(self) -> Equation3:
        if len(self.coefficients) != 3:
            raise ValueError(f"Expected an equation in x, y, z; got variables {self.variables}")
        return Equation3(*self.coefficients, self.rhs)

    def to_equation2(self) -> Equation2:
        if len(self.coefficients) != 2:
            raise ValueError(f"Expected an equation in x, y; got variables {self.variables}")
        return Equation2(*self.coefficients, self.rhs)


def _grammar(variables: Sequence[str]) -> pp.ParserElement:
    def check_variable(s, loc, toks):
        if toks[0] not in variables:
            raise UnknownVariableError(
                f"Unknown variable {toks[0]!r} at position {loc}; expected one of {', '.join(variables)}", loc
            )

    sign = pp.one_of("+ -")
    integer = pp.Word(pp.nums)
    variable = pp.Word(pp.alphas).set_parse_action(check_variable)
    body = pp.Opt(integer, default="1")("coef") + pp.Opt(pp.Suppress("*")) + variable("var")

    first_term = pp.Group(pp.Opt(sign, default="+")("sign") + body)
    next_term = pp.Group(sign("sign") + body)
    lhs = pp.Group(first_term + pp.ZeroOrMore(next_term))("terms")
    rhs = pp.Opt(sign, default="+")("rhs_sign") + integer("rhs")
    return lhs + pp.Suppress("=") + rhs + pp.StringEnd()


def parse_equation(text: str, variables: Sequence[str] = XYZ) -> ParsedEquation:
    """Parse one equation over the given variables."""
    for symbol, ascii_minus in _MINUS_SIGNS.items():
        text = text.replace(symbol, ascii_minus)
    try:
        result = _grammar(variables).parse_string(text, parse_all=True)
    except pp.ParseException as e:
        raise EquationSyntaxError(f"Cannot parse {text!r} at position {e.loc}: {e.msg}", e.loc) from e

    coefficients = dict.fromkeys(variables, 0)
    for term in result["terms"]:
        value = int(term["coef"])
        coefficients[term["var"]] += -value if term["sign"] == "-" else value
    rhs = int(result["rhs"])
    if result["rhs_sign"] == "-":
        rhs = -rhs
    return ParsedEquation(tuple(variables), tuple(coefficients[v] for v in variables), rhs)


def parse_equation3(text: str) -> Equation3:
    return parse_equation(text, XYZ).to_equation3()


def parse_equation2(text: str) -> Equation2:
    return parse_equation(text, XY).to_equation2()


def format_equation(coefficients: Sequence[int], rhs: int, variables: Sequence[str] = XYZ) -> str:
    """
    Print a row the way parse_equation reads it, e.g. (6, -15, 10 | 4) as
    "6x - 15y + 10z = 4". A row with no nonzero coefficient keeps every
    variable with coefficient 0.
    """
    if all(k == 0 for k in coefficients):
        return " + ".join(f"0{v}" for v in variables) + f" = {rhs}"
    parts = []
    for k, v in zip(coefficients, variables):
        if k == 0:
            continue
        magnitude = "" if abs(k) == 1 else str(abs(k))
        if not parts:
            parts.append(f"{'-' if k < 0 else ''}{magnitude}{v}")
        else:
            parts.append(f"{'-' if k < 0 else '+'} {magnitude}{v}")
    return " ".join(parts) + f" = {rhs}"
