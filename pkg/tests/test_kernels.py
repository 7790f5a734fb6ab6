"""Backend equivalence: the compiled kernel must match the pure fallback."""

import pytest

from fmzv import _kernels, _pure
from fmzv.indices import Index, bounded_weight_tree, prefix_tree

needs_compiled = pytest.mark.skipif(
    not _kernels.HAVE_COMPILED, reason="compiled extension not built"
)


def _compiled():
    from fmzv import _ext

    return _ext


def test_backend_registry():
    backends = _kernels.available_backends()
    assert "pure" in backends
    assert _kernels.backend_name() in backends


@needs_compiled
@pytest.mark.parametrize("p", [3, 5, 101, 10007])
def test_inverse_table_backends_agree(p):
    assert list(_pure.inverse_table(p)) == [int(v) for v in _compiled().inverse_table(p)]


@needs_compiled
@pytest.mark.parametrize("p", [5, 7, 101, 10007])
def test_tree_dp_backends_agree(p):
    tree = bounded_weight_tree(5)
    src, dst, lab = tree.edges_postorder()
    pure = _pure.tree_dp(p, src, dst, lab, tree.node_count)
    comp = _compiled().tree_dp(p, src, dst, lab, tree.node_count)
    assert pure == comp


@needs_compiled
def test_tree_dp_backends_agree_midsize_prime():
    # large enough that per-j Euclid inversion also gets exercised
    p = 100003
    tree = prefix_tree(Index((2, 1)))
    src, dst, lab = tree.edges_postorder()
    pure = _pure.tree_dp(p, src, dst, lab, tree.node_count, table_budget=1)
    comp = _compiled().tree_dp(p, src, dst, lab, tree.node_count, table_budget=1)
    assert pure == comp


@pytest.mark.parametrize("budget", [1, 1 << 27])
def test_pure_tree_dp_table_and_euclid_paths_agree(budget):
    tree = bounded_weight_tree(4)
    src, dst, lab = tree.edges_postorder()
    assert _pure.tree_dp(101, src, dst, lab, tree.node_count, table_budget=budget) == (
        _pure.tree_dp(101, src, dst, lab, tree.node_count)
    )


def test_tree_dp_single_node():
    tree = bounded_weight_tree(0)
    src, dst, lab = tree.edges_postorder()
    assert _kernels.tree_dp(7, src, dst, lab, 1) == [1]
