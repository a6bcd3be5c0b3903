import random

import pytest

from nerongraph import (
    AbelianGroup,
    Circuit,
    MalformedSpectrum,
    MultiGraph,
    NotACycle,
    OrientedCycleVector,
    betti1,
    coboundary_matrix,
    coboundary_witness,
    homological_criterion,
    is_full_r_torsion,
    phi_group,
    phi_r_torsion,
    spanning_tree_count,
)
from nerongraph.enumeration import connected_multigraphs, random_connected_multigraph

from helpers import banana, cycle_graph, loop_graph, path_graph, phi_from_presentation, theta


class TestAbelianGroup:
    def test_trivial(self):
        g = AbelianGroup()
        assert g.is_trivial and g.order == 1 and str(g) == "trivial"

    def test_order_and_str(self):
        g = AbelianGroup((2, 4))
        assert g.order == 8 and str(g) == "Z/2 x Z/4"

    def test_rejects_ones_and_broken_chains(self):
        with pytest.raises(ValueError):
            AbelianGroup((1, 2))
        with pytest.raises(ValueError):
            AbelianGroup((4, 2))
        with pytest.raises(ValueError):
            AbelianGroup((2, 3))


class TestPhiGroup:
    def test_loop_trivial(self):
        assert phi_group(loop_graph()) == AbelianGroup()

    def test_banana(self):
        assert phi_group(banana()) == AbelianGroup((2,))

    def test_square_cycle(self):
        assert phi_group(cycle_graph(4)) == AbelianGroup((4,))

    def test_matches_quotient_presentation(self):
        # The quotient-of-images presentation, via stacked Smith
        # reductions, on a handful of small graphs.
        for g in (loop_graph(), banana(), cycle_graph(4), theta(3), path_graph(2)):
            assert phi_group(g).invariant_factors == phi_from_presentation(g)

    def test_relabelling_invariance(self):
        rng = random.Random(7)
        for _ in range(25):
            g = random_connected_multigraph(rng, max_edges=8)
            perm_v = list(g.vertices)
            rng.shuffle(perm_v)
            rename = dict(zip(g.vertices, perm_v))
            order = list(range(g.n_edges))
            rng.shuffle(order)
            edges = [g.edges[i] for i in order]
            h = MultiGraph(
                perm_v,
                [(f"x{k}", rename[e.tail], rename[e.tip]) for k, e in enumerate(edges)],
            )
            assert phi_group(g) == phi_group(h)


class TestSpanningTreeCount:
    def test_tree(self):
        assert spanning_tree_count(path_graph(3)) == 1

    def test_banana(self):
        assert spanning_tree_count(banana()) == 2

    def test_square(self):
        assert spanning_tree_count(cycle_graph(4)) == 4

    def test_theta_chains(self):
        # three chains of length 2 between two vertices: 2*2 + 2*2 + 2*2
        from nerongraph import fixture

        assert spanning_tree_count(fixture("theta-fan")) == 12

    def test_matrix_tree_exhaustively(self):
        for g in connected_multigraphs(6):
            assert phi_group(g).order == spanning_tree_count(g)

    def test_matrix_tree_random(self):
        rng = random.Random(2024)
        for _ in range(200):
            g = random_connected_multigraph(rng, max_edges=12)
            assert phi_group(g).order == spanning_tree_count(g)


class TestPhiTorsion:
    def test_banana_two_torsion(self):
        assert phi_r_torsion(banana(), 2) == AbelianGroup((2,))

    def test_loop_any_r(self):
        for r in (1, 2, 5):
            assert phi_r_torsion(loop_graph(), r) == AbelianGroup()

    def test_square_two_torsion(self):
        assert phi_r_torsion(cycle_graph(4), 2) == AbelianGroup((2,))

    def test_order_bounded_by_r_to_betti(self):
        for g in connected_multigraphs(5):
            for r in (1, 2, 3, 4, 6):
                assert phi_r_torsion(g, r).order <= r ** betti1(g)


class TestFullTorsion:
    def test_banana_r2(self):
        assert is_full_r_torsion(banana(), 2)

    def test_loop_r2(self):
        assert not is_full_r_torsion(loop_graph(), 2)

    def test_square_r4(self):
        assert is_full_r_torsion(cycle_graph(4), 4)

    def test_r_one_always_full(self):
        for g in (loop_graph(), banana(), path_graph(2)):
            assert is_full_r_torsion(g, 1)


class TestHomologicalCriterion:
    def test_banana_q2(self):
        assert homological_criterion(banana(), 2)

    def test_loop_q_at_least_two(self):
        for q in (2, 3, 4):
            assert not homological_criterion(loop_graph(), q)

    def test_trees_always_pass(self):
        for q in (1, 2, 3, 5):
            assert homological_criterion(path_graph(3), q)


class TestCoboundaryWitness:
    def test_banana_witness(self):
        g = banana()
        z = Circuit(g, [("e0", 1), ("e1", -1)]).cycle_vector()
        witness = coboundary_witness(g, z, 2)
        assert witness is not None
        image = coboundary_matrix(g).apply(witness)
        assert all((a - b) % 2 == 0 for a, b in zip(image, z.to_edge_vector(g)))

    def test_loop_absent(self):
        g = loop_graph()
        z = Circuit(g, [("e0", 1)]).cycle_vector()
        assert coboundary_witness(g, z, 2) is None

    def test_zero_vector(self):
        g = banana()
        witness = coboundary_witness(g, OrientedCycleVector({}), 3)
        assert witness == (0, 0)

    def test_not_a_cycle_rejected(self):
        g = path_graph(1)
        with pytest.raises(NotACycle):
            coboundary_witness(g, OrientedCycleVector({"e0": 1}), 2)

    def test_witness_exists_iff_criterion_admits(self):
        from nerongraph import enumerate_circuits, image_contains_mod

        for g in connected_multigraphs(4):
            delta = coboundary_matrix(g)
            for q in (2, 3, 4):
                for c in enumerate_circuits(g):
                    z = c.cycle_vector()
                    witness = coboundary_witness(g, z, q)
                    member = image_contains_mod(delta, z.to_edge_vector(g), q)
                    assert (witness is not None) == member


class TestMalformedSpectrum:
    def test_disconnected_matrix_raises(self, monkeypatch):
        # A disconnected graph cannot be built through MultiGraph, so feed
        # phi_group the intersection matrix of one (two isolated loops)
        # directly: its Smith diagonal has two zeros, not one.
        import nerongraph.component_group as cg
        from nerongraph import IntMatrix

        monkeypatch.setattr(
            cg, "intersection_matrix", lambda _: IntMatrix([[0, 0], [0, 0]])
        )
        with pytest.raises(MalformedSpectrum):
            cg.phi_group(object())
