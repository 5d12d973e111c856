import numpy as np
import pytest

from active_testing.exceptions import EvaluationError
from active_testing.exceptions import NotInNormalFormError
from active_testing.speclang import Atom
from active_testing.speclang import Implies
from active_testing.speclang import Leaf
from active_testing.speclang import MaxNode
from active_testing.speclang import MinNode
from active_testing.speclang import Not
from active_testing.speclang import Or
from active_testing.speclang import ParseTree
from active_testing.speclang import build_parse_tree
from active_testing.speclang import compile_spec
from active_testing.speclang import eval_pessimistic
from active_testing.speclang import eval_tree
from active_testing.speclang import render_tree
from active_testing.speclang import robustness
from active_testing.speclang import to_nnf


def test_tree_of_implication():
    tree = compile_spec("(mu1 or mu2) -> (mu3 or mu4)")
    assert tree.predicates == ("mu1", "mu2", "mu3", "mu4")
    assert tree.root == MaxNode(
        (
            MinNode((Leaf(0, -1), Leaf(1, -1))),
            MaxNode((Leaf(2), Leaf(3))),
        ),
    )


def test_left_chains_become_one_node():
    tree = compile_spec("mu1 and mu2 and mu3")
    assert tree.root == MinNode((Leaf(0), Leaf(1), Leaf(2)))


def test_repeated_atoms_share_an_index():
    tree = compile_spec("mu1 <-> mu2")
    assert tree.arity == 2
    assert tree.root == MaxNode(
        (
            MinNode((Leaf(0, -1), Leaf(1, -1))),
            MinNode((Leaf(0), Leaf(1))),
        ),
    )


def test_single_atom():
    tree = compile_spec("phi")
    assert tree.root == Leaf(0)
    assert eval_tree(tree, [-0.5]) == -0.5


def test_non_normal_form_is_rejected():
    with pytest.raises(NotInNormalFormError):
        build_parse_tree(Not(Or(Atom("a"), Atom("b"))))
    with pytest.raises(NotInNormalFormError):
        build_parse_tree(Implies(Atom("a"), Atom("b")))


@pytest.mark.parametrize(
    ("text", "values", "expected"),
    [
        ("mu1 or mu2", [0.2, -0.5], 0.2),
        ("mu1 and mu2", [0.2, -1.0], -1.0),
        ("not mu1", [1.0], -1.0),
    ],
)
def test_eval_tree(text, values, expected):
    assert eval_tree(compile_spec(text), values) == pytest.approx(expected)


def test_eval_tree_rejects_wrong_arity():
    with pytest.raises(EvaluationError, match="2 predicates"):
        eval_tree(compile_spec("mu1 or mu2"), [0.1])


def test_eval_tree_rejects_non_finite_values():
    with pytest.raises(EvaluationError, match="mu2"):
        eval_tree(compile_spec("mu1 or mu2"), [0.1, float("nan")])


def test_tree_agrees_with_syntax_tree(make_ast, rng):
    for _ in range(1000):
        ast = make_ast()
        tree = build_parse_tree(to_nnf(ast))
        for values in rng.normal(size=(10, tree.arity)):
            valuation = dict(zip(tree.predicates, values, strict=True))
            assert eval_tree(tree, values) == robustness(ast, valuation)


def one_predicate_per_leaf(tree: ParseTree) -> tuple[ParseTree, np.ndarray]:
    """The same tree with every leaf reading its own predicate, plus the leaf signs."""
    signs: list[int] = []

    def relabel(node):
        if isinstance(node, Leaf):
            signs.append(node.sign)
            return Leaf(len(signs) - 1, node.sign)
        return type(node)(tuple(relabel(child) for child in node.children))

    root = relabel(tree.root)
    return ParseTree(root=root, predicates=tuple(f"leaf{i}" for i in range(len(signs)))), np.array(signs)


def test_tree_is_monotone_in_signed_leaves(make_ast, rng):
    for _ in range(1000):
        tree, signs = one_predicate_per_leaf(build_parse_tree(to_nnf(make_ast())))
        lower = rng.normal(size=signs.size)
        upper = lower + rng.uniform(0, 1, size=signs.size) * (rng.random(signs.size) < 0.7)  # noqa: PLR2004
        # a leaf with sign s reads s * value
        assert eval_tree(tree, signs * upper) >= eval_tree(tree, signs * lower)


def test_fixed_tree_is_monotone_in_positive_leaves(rng):
    tree = compile_spec("(mu1 and mu2) or (mu3 and not mu4)")
    for _ in range(1000):
        values = rng.normal(size=4)
        raised = values.copy()
        raised[:3] += rng.uniform(0, 1, size=3)
        lowered = values.copy()
        lowered[3] -= rng.uniform(0, 1)
        assert eval_tree(tree, raised) >= eval_tree(tree, values)
        assert eval_tree(tree, lowered) >= eval_tree(tree, values)


def test_tree_value_is_one_of_the_leaves(make_ast, rng):
    for _ in range(200):
        tree = build_parse_tree(to_nnf(make_ast()))
        values = rng.normal(size=tree.arity)
        result = eval_tree(tree, values)
        assert np.any(np.isclose(np.abs(values), abs(result)))


class TestEvalPessimistic:
    def test_bounds_every_valuation_in_the_box(self, make_ast, rng):
        for _ in range(200):
            tree = build_parse_tree(to_nnf(make_ast()))
            centre = rng.normal(size=tree.arity)
            radius = rng.uniform(0, 0.5, size=tree.arity)
            bound = eval_pessimistic(tree, centre - radius, centre + radius)
            for _ in range(5):
                sample = centre + rng.uniform(-1, 1, size=tree.arity) * radius
                assert bound <= eval_tree(tree, sample)

    def test_degenerate_box_is_exact(self):
        tree = compile_spec("mu1 -> mu2")
        values = [0.4, -0.1]
        assert eval_pessimistic(tree, values, values) == eval_tree(tree, values)

    def test_negated_leaf_uses_upper_endpoint(self):
        tree = compile_spec("not mu1")
        assert eval_pessimistic(tree, [0.1], [0.7]) == pytest.approx(-0.7)


def test_render_tree():
    rendered = render_tree(compile_spec("(mu1 or mu2) -> (mu3 or mu4)"))
    assert rendered.splitlines() == [
        "max",
        "  min",
        "    -mu1",
        "    -mu2",
        "  max",
        "    +mu3",
        "    +mu4",
    ]
