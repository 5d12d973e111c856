"""Rewrites that bring a specification into negation normal form."""

from __future__ import annotations

from .syntax import And
from .syntax import Atom
from .syntax import Iff
from .syntax import Implies
from .syntax import Not
from .syntax import Or
from .syntax import SpecAst


def desugar(ast: SpecAst) -> SpecAst:
    """Replace implications and equivalences by and/or/not."""
    match ast:
        case Atom():
            return ast
        case Not(child):
            return Not(desugar(child))
        case And(left, right):
            return And(desugar(left), desugar(right))
        case Or(left, right):
            return Or(desugar(left), desugar(right))
        case Implies(left, right):
            return Or(Not(desugar(left)), desugar(right))
        case Iff(left, right):
            a, b = desugar(left), desugar(right)
            return Or(And(Not(a), Not(b)), And(a, b))
    raise TypeError(ast)


def to_nnf(ast: SpecAst) -> SpecAst:
    """
    Negation normal form: only and/or/atom remain, with not directly above atoms.

    Implications and equivalences are desugared first, double negations are
    dropped and De Morgan's laws push the remaining negations to the atoms.
    """
    return _push(desugar(ast), negate=False)


def _push(ast: SpecAst, *, negate: bool) -> SpecAst:
    match ast:
        case Atom():
            return Not(ast) if negate else ast
        case Not(child):
            return _push(child, negate=not negate)
        case And(left, right):
            node = Or if negate else And
            return node(_push(left, negate=negate), _push(right, negate=negate))
        case Or(left, right):
            node = And if negate else Or
            return node(_push(left, negate=negate), _push(right, negate=negate))
    msg = f"{type(ast).__name__} must be desugared before normalisation"
    raise TypeError(msg)


def is_nnf(ast: SpecAst) -> bool:
    match ast:
        case Atom():
            return True
        case Not(child):
            return isinstance(child, Atom)
        case And(left, right) | Or(left, right):
            return is_nnf(left) and is_nnf(right)
    return False
