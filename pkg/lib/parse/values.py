# -*- coding: utf-8 -*-
#  This program is free software; you can redistribute it and/or modify
#  it under the terms of the GNU General Public License as published by
#  the Free Software Foundation; either version 2 of the License, or
#  (at your option) any later version.
#
#  This program is distributed in the hope that it will be useful,
#  but WITHOUT ANY WARRANTY; without even the implied warranty of
#  MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#  GNU General Public License for more details.
#
#  You should have received a copy of the GNU General Public License
#  along with this program; if not, write to the Free Software
#  Foundation, Inc., 51 Franklin Street, Fifth Floor, Boston,
#  MA 02110-1301, USA.

import json

from pyparsing import (
    CaselessKeyword,
    CaselessLiteral,
    ParseException,
    Regex,
    Suppress,
    Word,
    delimitedList,
    nums,
)
from pyparsing import Optional as Opt
from sympy import Rational

from lib.core.admissibility import Quadruple, assemble_quadruple
from lib.core.exceptions import DomainError, InputError, UnsupportedError
from lib.core.localfields import Place, SquareClass
from lib.core.orthogroup import QuadCharacter
from lib.core.quadforms import QuadraticSpace


_integer = Regex(r"[+-]?\d+")
_rational = _integer("numerator") + Opt(Suppress("/") + Word(nums)("denominator"))
_decimal = Regex(r"[+-]?(\d+\.\d*|\.\d+)([eE][+-]?\d+)?")
_place = CaselessKeyword("real")("real") | (
    Suppress(CaselessLiteral("p:")) + Word(nums)("prime")
)
_integer_list = delimitedList(_integer)
_rational_list = delimitedList(Regex(r"[+-]?\d+(/\d+)?"))


def _parse(grammar, text, what):
    try:
        return grammar.parseString(str(text).strip(), parseAll=True)
    except ParseException:
        raise InputError(f"Invalid {what}: {text!r}")


def parse_rational(text):
    if isinstance(text, int) and not isinstance(text, bool):
        return Rational(text)

    tokens = _parse(_rational, text, "rational")
    denominator = int(tokens.denominator) if tokens.denominator else 1

    if denominator == 0:
        raise InputError(f"Zero denominator in {text!r}")

    return Rational(int(tokens.numerator), denominator)


def parse_real(text):
    """Exact value of "n", "n/d" or a decimal such as "2.0" or "1.5e1"."""

    if isinstance(text, (int, Rational)) and not isinstance(text, bool):
        return Rational(text)

    text = str(text).strip()

    try:
        _decimal.parseString(text, parseAll=True)
    except ParseException:
        return parse_rational(text)

    return Rational(text)


def parse_place(text):
    tokens = _parse(_place, text, "place")

    if tokens.real:
        return Place.real()

    try:
        return Place.finite(int(tokens.prime))
    except DomainError as e:
        raise InputError(str(e))


def parse_integer_list(text):
    return [int(token) for token in _parse(_integer_list, text, "integer list")]


def parse_rational_list(text):
    return [parse_rational(token) for token in _parse(_rational_list, text, "rational list")]


def load_json(text, what):
    if isinstance(text, (dict, list)):
        return text

    try:
        return json.loads(text)
    except (TypeError, json.JSONDecodeError):
        raise InputError(f"Malformed JSON for {what}: {text!r}")


def parse_form(text):
    data = load_json(text, "quadratic form")

    if not isinstance(data, dict) or not isinstance(data.get("diag"), list):
        raise InputError('A quadratic form must look like {"diag": ["1", "-2", "3/5"]}')

    try:
        return QuadraticSpace([parse_rational(entry) for entry in data["diag"]])
    except DomainError as e:
        raise InputError(str(e))


def parse_matrix(text):
    data = load_json(text, "matrix")

    if (
        not isinstance(data, list)
        or not data
        or not all(isinstance(row, list) and len(row) == len(data) for row in data)
    ):
        raise InputError("A matrix must be a square row-major array of rational strings")

    return [[parse_rational(entry) for entry in row] for row in data]


def parse_character(text, dim=None):
    data = load_json(text, "character")

    if not isinstance(data, dict) or "lambda" not in data:
        raise InputError('A character must look like {"lambda": "-6", "eps": -1, "dim": 3}')

    local_eps = {
        parse_place(place): int(sign)
        for place, sign in (data.get("local_eps") or {}).items()
    }

    try:
        return QuadCharacter(
            SquareClass.of(parse_rational(data["lambda"])),
            int(data.get("eps", 1)),
            int(data.get("dim", dim or 0)),
            local_eps,
        )
    except (DomainError, UnsupportedError, ValueError) as e:
        raise InputError(f"Invalid character: {e}")


def parse_quadruple(data):
    """Quadruple from {"q": ..., "qp": ..., "n": 1, "character": ..., "character_prime": ...}.

    Without characters the local data are assembled place by place.
    """

    data = load_json(data, "quadruple")

    if not isinstance(data, dict) or "q" not in data or "qp" not in data:
        raise InputError('A quadruple needs at least "q" and "qp"')

    q, q_prime = parse_form(data["q"]), parse_form(data["qp"])

    try:
        n = int(data.get("n", 1))
    except (TypeError, ValueError):
        raise InputError(f"Invalid symplectic rank: {data.get('n')!r}")

    try:
        if "character" not in data and "character_prime" not in data:
            return assemble_quadruple(q, q_prime, n)

        return Quadruple(
            q,
            parse_character(data.get("character", {"lambda": "1"}), q.dim),
            q_prime,
            parse_character(data.get("character_prime", {"lambda": "1"}), q_prime.dim),
            n,
        )
    except DomainError as e:
        raise InputError(str(e))
