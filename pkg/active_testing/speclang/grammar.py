"""
Grammar of the specification language.

Precedence, from tightest to loosest binding:

    not / !          (prefix)
    and / &&         (left associative)
    or / ||          (left associative)
    implies / ->     (right associative)
    iff / <->        (left associative)

Atoms are identifiers naming predicates; their meaning is bound at runtime.
"""

from __future__ import annotations

import re
from functools import reduce

import pyparsing as pp

from active_testing.exceptions import SpecSyntaxError
from active_testing.exceptions import UnknownOperatorError

from .syntax import And
from .syntax import Atom
from .syntax import Iff
from .syntax import Implies
from .syntax import Not
from .syntax import Or
from .syntax import SpecAst

pp.ParserElement.enable_packrat()

KEYWORDS = ("not", "and", "or", "implies", "iff")

op_not = pp.Keyword("not") | pp.Literal("!")
op_and = pp.Keyword("and") | pp.Literal("&&")
op_or = pp.Keyword("or") | pp.Literal("||")
op_implies = pp.Keyword("implies") | pp.Literal("->")
op_iff = pp.Keyword("iff") | pp.Literal("<->")

reserved = pp.MatchFirst([pp.Keyword(word) for word in KEYWORDS])
identifier = ~reserved + pp.Regex(r"[A-Za-z_][A-Za-z0-9_]*").set_parse_action(
    lambda tokens: Atom(tokens[0]),
)


def _negate(tokens):
    _, operand = tokens[0]
    return Not(operand)


def _fold_left(node_type):
    def action(tokens):
        operands = list(tokens[0][0::2])
        return reduce(node_type, operands)

    return action


def _fold_right(node_type):
    def action(tokens):
        operands = list(tokens[0][0::2])
        return reduce(lambda right, left: node_type(left, right), reversed(operands))

    return action


formula = pp.infix_notation(
    identifier,
    [
        (op_not, 1, pp.OpAssoc.RIGHT, _negate),
        (op_and, 2, pp.OpAssoc.LEFT, _fold_left(And)),
        (op_or, 2, pp.OpAssoc.LEFT, _fold_left(Or)),
        (op_implies, 2, pp.OpAssoc.RIGHT, _fold_right(Implies)),
        (op_iff, 2, pp.OpAssoc.LEFT, _fold_left(Iff)),
    ],
)


def parse_spec(text: str) -> SpecAst:
    """
    Parse specification text into a syntax tree.

    Raises SpecSyntaxError (or its UnknownOperatorError subclass) carrying the
    line, column and expected-token set of the first offending token.
    """
    if not text.strip():
        raise SpecSyntaxError("empty specification", 1, 1, OPERAND_START)
    try:
        return formula.parse_string(text, parse_all=True)[0]
    except pp.ParseException as exc:
        diagnosis = diagnose(text)
        if diagnosis is None:
            raise SpecSyntaxError(exc.msg, exc.lineno, exc.col, ()) from exc
        raise diagnosis from exc


# Diagnostics
# ------------------------------------------------------------------------------
# pyparsing reports failures at the point where backtracking gave up, which for
# an incomplete formula like "mu1 ->" is the operator rather than the missing
# operand. A token scan gives the position users expect.

OPERAND_START = ("identifier", "(", "not", "!")
BINARY_OPERATORS = ("and", "&&", "or", "||", "implies", "->", "iff", "<->")

_TOKEN = re.compile(
    r"(?P<space>\s+)"
    r"|(?P<word>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<op><->|->|&&|\|\||!)"
    r"|(?P<paren>[()])"
    r"|(?P<junk>[^\sA-Za-z0-9_()]+|[0-9][A-Za-z0-9_.]*)",
)


def diagnose(text: str) -> SpecSyntaxError | None:
    """Return the error for the first offending token of text, or None if it scans cleanly."""
    expect_operand = True
    depth = 0
    for match in _TOKEN.finditer(text):
        kind = match.lastgroup
        token = match.group()
        loc = match.start()
        if kind == "space":
            continue
        expected = _expected(expect_operand=expect_operand, depth=depth)
        if kind == "junk":
            if token[0].isdigit():
                return _error(f"unexpected {token!r}", text, loc, expected)
            return UnknownOperatorError(token, pp.lineno(loc, text), pp.col(loc, text), expected)
        if expect_operand:
            if kind == "word" and token not in KEYWORDS:
                expect_operand = False
            elif token in ("not", "!"):
                pass
            elif token == "(":
                depth += 1
            else:
                return _error(f"unexpected {token!r}", text, loc, expected)
        elif token in BINARY_OPERATORS:
            expect_operand = True
        elif token == ")" and depth > 0:
            depth -= 1
        else:
            return _error(f"unexpected {token!r}", text, loc, expected)
    if expect_operand or depth:
        return _error(
            "unexpected end of input",
            text,
            len(text),
            _expected(expect_operand=expect_operand, depth=depth),
        )
    return None


def _expected(*, expect_operand: bool, depth: int) -> tuple[str, ...]:
    if expect_operand:
        return OPERAND_START
    closers = (")",) if depth else ("end of input",)
    return BINARY_OPERATORS + closers


def _error(message: str, text: str, loc: int, expected) -> SpecSyntaxError:
    return SpecSyntaxError(message, pp.lineno(loc, text), pp.col(loc, text), expected)
