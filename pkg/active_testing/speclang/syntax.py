"""
Syntax tree of boolean safety specifications.

Nodes are frozen dataclasses, so a parsed specification can be shared freely
between evaluators.
"""

from __future__ import annotations

import math
from collections.abc import Iterator
from collections.abc import Mapping
from dataclasses import dataclass

from active_testing.exceptions import EvaluationError


@dataclass(frozen=True, slots=True)
class Atom:
    name: str


@dataclass(frozen=True, slots=True)
class Not:
    child: SpecAst


@dataclass(frozen=True, slots=True)
class And:
    left: SpecAst
    right: SpecAst


@dataclass(frozen=True, slots=True)
class Or:
    left: SpecAst
    right: SpecAst


@dataclass(frozen=True, slots=True)
class Implies:
    left: SpecAst
    right: SpecAst


@dataclass(frozen=True, slots=True)
class Iff:
    left: SpecAst
    right: SpecAst


SpecAst = Atom | Not | And | Or | Implies | Iff

_BINARY_SPELLING = {And: "and", Or: "or", Implies: "->", Iff: "<->"}


def atoms(ast: SpecAst) -> Iterator[str]:
    """Yield atom names in left-to-right order, repeats included."""
    match ast:
        case Atom(name):
            yield name
        case Not(child):
            yield from atoms(child)
        case And(left, right) | Or(left, right) | Implies(left, right) | Iff(left, right):
            yield from atoms(left)
            yield from atoms(right)


def format_spec(ast: SpecAst) -> str:
    """
    Render an AST back to specification text.

    Binary sub-formulas are always parenthesised, so the output parses back to
    an identical tree whatever the precedence rules are.
    """
    match ast:
        case Atom(name):
            return name
        case Not(child):
            return f"not {_format_operand(child)}"
        case And(left, right) | Or(left, right) | Implies(left, right) | Iff(left, right):
            spelling = _BINARY_SPELLING[type(ast)]
            return f"{_format_operand(left)} {spelling} {_format_operand(right)}"
    raise TypeError(ast)


def _format_operand(ast: SpecAst) -> str:
    if isinstance(ast, Atom | Not):
        return format_spec(ast)
    return f"({format_spec(ast)})"


def robustness(ast: SpecAst, valuation: Mapping[str, float]) -> float:
    """
    Quantitative semantics evaluated directly on the syntax tree.

    Conjunction is min, disjunction is max and negation flips the sign;
    implication and equivalence are evaluated through their boolean rewrites.
    """
    match ast:
        case Atom(name):
            try:
                value = float(valuation[name])
            except KeyError as exc:
                msg = f"no value for predicate {name!r}"
                raise EvaluationError(msg) from exc
            if not math.isfinite(value):
                msg = f"predicate {name!r} has non-finite value {value!r}"
                raise EvaluationError(msg)
            return value
        case Not(child):
            return -robustness(child, valuation)
        case And(left, right):
            return min(robustness(left, valuation), robustness(right, valuation))
        case Or(left, right):
            return max(robustness(left, valuation), robustness(right, valuation))
        case Implies(left, right):
            return max(-robustness(left, valuation), robustness(right, valuation))
        case Iff(left, right):
            a = robustness(left, valuation)
            b = robustness(right, valuation)
            return max(min(-a, -b), min(a, b))
    raise TypeError(ast)
