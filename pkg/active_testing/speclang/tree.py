"""
Min/max evaluation trees.

A ParseTree is the form the rest of the toolkit works with: conjunctions are
min nodes, disjunctions are max nodes and every leaf points at one predicate
with a sign (-1 for a negated atom). Repeated atoms share a predicate index
but keep separate leaves.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass

from active_testing.exceptions import EvaluationError
from active_testing.exceptions import NotInNormalFormError

from .grammar import parse_spec
from .normalize import to_nnf
from .syntax import And
from .syntax import Atom
from .syntax import Not
from .syntax import Or
from .syntax import SpecAst


@dataclass(frozen=True, slots=True)
class Leaf:
    index: int
    sign: int = 1


@dataclass(frozen=True, slots=True)
class MinNode:
    children: tuple[TreeNode, ...]


@dataclass(frozen=True, slots=True)
class MaxNode:
    children: tuple[TreeNode, ...]


TreeNode = Leaf | MinNode | MaxNode


@dataclass(frozen=True, slots=True)
class ParseTree:
    root: TreeNode
    predicates: tuple[str, ...]

    @property
    def arity(self) -> int:
        return len(self.predicates)


def build_parse_tree(nnf: SpecAst) -> ParseTree:
    """Turn a negation-normal-form AST into a min/max tree with signed leaves."""
    predicates: list[str] = []
    root = _build(nnf, predicates)
    return ParseTree(root=root, predicates=tuple(predicates))


def _build(ast: SpecAst, predicates: list[str]) -> TreeNode:
    match ast:
        case Atom(name):
            return Leaf(_index_of(name, predicates), 1)
        case Not(Atom(name)):
            return Leaf(_index_of(name, predicates), -1)
        case Not():
            msg = "negation above a compound formula; normalise the specification first"
            raise NotInNormalFormError(msg)
        case And():
            return MinNode(tuple(_build(op, predicates) for op in _left_chain(ast, And)))
        case Or():
            return MaxNode(tuple(_build(op, predicates) for op in _left_chain(ast, Or)))
    msg = f"{type(ast).__name__} is not allowed in negation normal form"
    raise NotInNormalFormError(msg)


def _index_of(name: str, predicates: list[str]) -> int:
    if name not in predicates:
        predicates.append(name)
    return predicates.index(name)


def _left_chain(ast, node_type) -> list[SpecAst]:
    # a and b and c parses to And(And(a, b), c) and becomes one n-ary node
    operands = []
    while isinstance(ast, node_type):
        operands.append(ast.right)
        ast = ast.left
    operands.append(ast)
    operands.reverse()
    return operands


def compile_spec(text: str) -> ParseTree:
    return build_parse_tree(to_nnf(parse_spec(text)))


# Evaluation
# ------------------------------------------------------------------------------
def eval_tree(tree: ParseTree, leaf_values: Sequence[float]) -> float:
    """
    Robustness of the specification given one value per predicate.

    A value <= 0 means the specification is violated.
    """
    values = _checked(tree, leaf_values, "leaf_values")
    return _evaluate(tree.root, values, values)


def eval_pessimistic(tree: ParseTree, lower: Sequence[float], upper: Sequence[float]) -> float:
    """
    Lower bound of the robustness when predicate i lies in [lower[i], upper[i]].

    Positive leaves take the lower endpoint, negated leaves the negated upper
    endpoint; min and max are monotone, so the result bounds every valuation
    inside the intervals from below.
    """
    lo = _checked(tree, lower, "lower")
    hi = _checked(tree, upper, "upper")
    return _evaluate(tree.root, lo, hi)


def _evaluate(node: TreeNode, lower: list[float], upper: list[float]) -> float:
    match node:
        case Leaf(index, sign):
            return lower[index] if sign > 0 else -upper[index]
        case MinNode(children):
            return min(_evaluate(child, lower, upper) for child in children)
        case MaxNode(children):
            return max(_evaluate(child, lower, upper) for child in children)
    raise TypeError(node)


def _checked(tree: ParseTree, values: Sequence[float], label: str) -> list[float]:
    if len(values) != tree.arity:
        msg = f"{label} has {len(values)} entries, the tree has {tree.arity} predicates"
        raise EvaluationError(msg)
    checked = [float(v) for v in values]
    for name, value in zip(tree.predicates, checked, strict=True):
        if not math.isfinite(value):
            msg = f"{label} for predicate {name!r} is not finite ({value!r})"
            raise EvaluationError(msg)
    return checked


# Rendering
# ------------------------------------------------------------------------------
def render_tree(tree: ParseTree, indent: str = "  ") -> str:
    lines: list[str] = []
    _render(tree.root, tree.predicates, 0, indent, lines)
    return "\n".join(lines)


def _render(node: TreeNode, predicates, depth: int, indent: str, lines: list[str]) -> None:
    pad = indent * depth
    match node:
        case Leaf(index, sign):
            lines.append(f"{pad}{'+' if sign > 0 else '-'}{predicates[index]}")
        case MinNode(children) | MaxNode(children):
            lines.append(f"{pad}{'min' if isinstance(node, MinNode) else 'max'}")
            for child in children:
                _render(child, predicates, depth + 1, indent, lines)
