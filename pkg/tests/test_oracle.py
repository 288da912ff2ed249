from softcluster.crisp import CrispIdeal, CrispTopology
from softcluster.harness.oracle import (
    CrispContext, crisp_ideal_topology, crisp_ideal_topology_from_base, crisp_local_function,
    graph_context, graph_of,
)
from softcluster.cluster import ClusterContext, cluster_set
from softcluster.core import all_soft_sets
from tests.conftest import load_fixture

X = frozenset("xyz")
ALPHA_SLICE = CrispTopology.of(X, [set(), {"x"}, {"x", "y"}, {"x", "z"}, X])
BETA_SLICE = CrispTopology.of(X, [set(), {"y"}, {"x", "y"}, {"y", "z"}, X])


def test_trivial_ideal_local_function_is_closure():
    cctx = CrispContext(ALPHA_SLICE, CrispIdeal.of(X, ()))
    for a in (set(), {"x"}, {"y"}, {"y", "z"}, X):
        assert crisp_local_function(cctx, a) == ALPHA_SLICE.closure(a)


def test_slice_local_function_values():
    cctx = CrispContext(ALPHA_SLICE, CrispIdeal.of(X, "yz"))
    assert crisp_local_function(cctx, {"y"}) == frozenset()
    # every neighbourhood of every point meets {x} outside the ideal
    assert crisp_local_function(cctx, {"x"}) == X


def test_slices_are_their_own_ideal_topologies():
    a = CrispContext(ALPHA_SLICE, CrispIdeal.of(X, "yz"))
    b = CrispContext(BETA_SLICE, CrispIdeal.of(X, "xz"))
    assert crisp_ideal_topology(a).opens == ALPHA_SLICE.opens
    assert crisp_ideal_topology(b).opens == BETA_SLICE.opens
    assert crisp_ideal_topology_from_base(a).opens == ALPHA_SLICE.opens


def test_full_ideal_gives_discrete():
    cctx = CrispContext(ALPHA_SLICE, CrispIdeal.of(X, X))
    assert len(crisp_ideal_topology(cctx).opens) == 8


def test_graph_transport_agrees_with_cluster_set():
    b = load_fixture("example_4_7_subbase")
    ctx = ClusterContext(b.topology, b.ideal)
    cctx = graph_context(ctx)
    for a in all_soft_sets(b.carrier):
        assert crisp_local_function(cctx, graph_of(a)) == graph_of(cluster_set(ctx, a))
