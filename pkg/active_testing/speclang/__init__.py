from .grammar import parse_spec
from .normalize import desugar
from .normalize import is_nnf
from .normalize import to_nnf
from .syntax import And
from .syntax import Atom
from .syntax import Iff
from .syntax import Implies
from .syntax import Not
from .syntax import Or
from .syntax import SpecAst
from .syntax import atoms
from .syntax import format_spec
from .syntax import robustness
from .tree import Leaf
from .tree import MaxNode
from .tree import MinNode
from .tree import ParseTree
from .tree import build_parse_tree
from .tree import compile_spec
from .tree import eval_pessimistic
from .tree import eval_tree
from .tree import render_tree

__all__ = [
    "And",
    "Atom",
    "Iff",
    "Implies",
    "Leaf",
    "MaxNode",
    "MinNode",
    "Not",
    "Or",
    "ParseTree",
    "SpecAst",
    "atoms",
    "build_parse_tree",
    "compile_spec",
    "desugar",
    "eval_pessimistic",
    "eval_tree",
    "format_spec",
    "is_nnf",
    "parse_spec",
    "render_tree",
    "robustness",
    "to_nnf",
]
