import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nerongraph import (
    DimensionMismatch,
    IntMatrix,
    betti1,
    boundary_matrix,
    coboundary_matrix,
    image_contains_mod,
    intersection_matrix,
    kernel_generators_mod,
    smith_normal_form,
    solve_mod,
    subgroup_contained_mod,
)
from nerongraph.enumeration import connected_multigraphs

from helpers import banana, brute_image_contains, brute_kernel, loop_graph, path_graph, span_mod


@st.composite
def int_matrices(draw, max_dim=5, bound=20):
    rows = draw(st.integers(0, max_dim))
    cols = draw(st.integers(0, max_dim))
    entries = [
        [draw(st.integers(-bound, bound)) for _ in range(cols)] for _ in range(rows)
    ]
    return IntMatrix(entries, cols=cols)


class TestIntMatrix:
    def test_shapes_and_indexing(self):
        m = IntMatrix([[1, 2, 3], [4, 5, 6]])
        assert (m.rows, m.cols) == (2, 3)
        assert m[1, 2] == 6
        assert m.column(1) == (2, 5)
        assert m.transpose().row(1) == (2, 5)

    def test_zero_dimensions(self):
        m = IntMatrix.zeros(0, 3)
        assert (m.rows, m.cols) == (0, 3)
        assert (m.transpose().rows, m.transpose().cols) == (3, 0)
        product = IntMatrix.zeros(2, 0) * IntMatrix.zeros(0, 2)
        assert product == IntMatrix.zeros(2, 2)

    def test_multiplication(self):
        a = IntMatrix([[1, 2], [3, 4]])
        b = IntMatrix([[0, 1], [1, 0]])
        assert a * b == IntMatrix([[2, 1], [4, 3]])
        with pytest.raises(DimensionMismatch):
            a * IntMatrix.zeros(3, 3)

    def test_rejects_floats(self):
        with pytest.raises(TypeError):
            IntMatrix([[1.5]])
        with pytest.raises(TypeError):
            IntMatrix([[True]])

    def test_hashable_by_value(self):
        assert hash(IntMatrix([[1, 2]])) == hash(IntMatrix([[1, 2]]))
        assert IntMatrix([[1], [2]]) != IntMatrix([[1, 2]])

    def test_determinant(self):
        assert IntMatrix.identity(4).determinant() == 1
        assert IntMatrix([[2, 0], [0, 3]]).determinant() == 6
        assert IntMatrix([[1, 2], [2, 4]]).determinant() == 0
        assert IntMatrix([], cols=0).determinant() == 1

    @given(int_matrices(max_dim=4, bound=9))
    def test_determinant_matches_cofactor_expansion(self, m):
        if m.rows != m.cols:
            return

        def cofactor(rows):
            if not rows:
                return 1
            total = 0
            for j, pivot in enumerate(rows[0]):
                minor = [r[:j] + r[j + 1:] for r in rows[1:]]
                total += (-1) ** j * pivot * cofactor(minor)
            return total

        assert m.determinant() == cofactor([list(r) for r in (m.row(i) for i in range(m.rows))])


class TestGraphMatrices:
    def test_loop_boundary_is_zero(self):
        assert boundary_matrix(loop_graph()) == IntMatrix.zeros(1, 1)

    def test_single_edge_column(self):
        g = path_graph(1)
        assert boundary_matrix(g).column(0) == (-1, 1)

    def test_banana_columns(self):
        b = boundary_matrix(banana())
        assert b.column(0) == (-1, 1) and b.column(1) == (-1, 1)

    def test_coboundary_is_transpose(self):
        for g in (banana(), path_graph(2), loop_graph()):
            assert coboundary_matrix(g) == boundary_matrix(g).transpose()

    def test_coboundary_shape_path_two(self):
        assert (coboundary_matrix(path_graph(2)).rows,
                coboundary_matrix(path_graph(2)).cols) == (2, 3)

    def test_intersection_banana(self):
        assert intersection_matrix(banana()) == IntMatrix([[-2, 2], [2, -2]])

    def test_intersection_loop(self):
        assert intersection_matrix(loop_graph()) == IntMatrix([[0]])

    def test_intersection_single_edge(self):
        assert intersection_matrix(path_graph(1)) == IntMatrix([[-1, 1], [1, -1]])

    def test_intersection_structure_exhaustively(self):
        for g in connected_multigraphs(5):
            b = boundary_matrix(g)
            m = intersection_matrix(g)
            assert m == -(b * b.transpose())
            assert m == m.transpose()
            for i in range(m.rows):
                assert sum(m.row(i)) == 0
                assert sum(m.column(i)) == 0

    def test_boundary_rank_and_nullity(self):
        for g in connected_multigraphs(5):
            diag = smith_normal_form(boundary_matrix(g)).diagonal
            nonzero = [d for d in diag if d != 0]
            assert nonzero == [1] * (g.n_vertices - 1)
            assert g.n_edges - len(nonzero) == betti1(g)


class TestSmithNormalForm:
    def test_identity(self):
        snf = smith_normal_form(IntMatrix.identity(3))
        assert snf.d == IntMatrix.identity(3)

    def test_zero(self):
        snf = smith_normal_form(IntMatrix.zeros(2, 3))
        assert snf.d == IntMatrix.zeros(2, 3)

    def test_square_cycle_intersection(self):
        from helpers import cycle_graph

        snf = smith_normal_form(intersection_matrix(cycle_graph(4)))
        assert snf.diagonal == (1, 1, 4, 0)

    def test_deterministic(self):
        entries = [[6, 4, 2], [4, 8, 0], [2, 0, 10]]
        a = smith_normal_form(IntMatrix(entries))
        b = smith_normal_form(IntMatrix([row[:] for row in entries]))
        assert a.d == b.d and a.u == b.u and a.v == b.v

    @staticmethod
    def assert_valid(m):
        snf = smith_normal_form(m)
        assert snf.u * m * snf.v == snf.d
        assert abs(snf.u.determinant()) == 1
        assert abs(snf.v.determinant()) == 1
        diag = snf.diagonal
        assert all(d >= 0 for d in diag)
        for a, b in zip(diag, diag[1:]):
            assert (a == 0 and b == 0) or (a != 0 and b % a == 0)
        for i in range(snf.d.rows):
            for j in range(snf.d.cols):
                if i != j:
                    assert snf.d[i, j] == 0

    @given(int_matrices())
    @settings(max_examples=200)
    def test_properties_random(self, m):
        self.assert_valid(m)

    def test_properties_graph_matrices(self):
        for g in connected_multigraphs(4):
            self.assert_valid(boundary_matrix(g))
            self.assert_valid(intersection_matrix(g))


class TestSolveMod:
    def test_banana_image_examples(self):
        m = intersection_matrix(banana())
        assert not image_contains_mod(m, (1, 1), 2)
        assert image_contains_mod(m, (2, 0), 2)

    def test_zero_vector_always_in_image(self):
        m = intersection_matrix(banana())
        for q in (1, 2, 3, 4):
            assert image_contains_mod(m, (0, 0), q)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            image_contains_mod(IntMatrix.identity(2), (1, 1, 1), 2)

    def test_against_brute_force_oracle(self):
        rng = random.Random(1729)
        for _ in range(150):
            rows = rng.randint(1, 4)
            cols = rng.randint(0, 4)
            q = rng.randint(1, 6)
            a = IntMatrix(
                [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)],
                cols=cols,
            )
            b = [rng.randint(-9, 9) for _ in range(rows)]
            expected = brute_image_contains(a, b, q)
            x = solve_mod(a, b, q)
            assert (x is not None) == expected
            if x is not None:
                assert all((lhs - rhs) % q == 0 for lhs, rhs in zip(a.apply(x), b))


class TestKernelGeneratorsMod:
    def test_loop_boundary_spans_everything(self):
        gens = kernel_generators_mod(boundary_matrix(loop_graph()), 3)
        assert span_mod(gens, 1, 3) == {(0,), (1,), (2,)}

    def test_single_edge_kernel_trivial(self):
        gens = kernel_generators_mod(boundary_matrix(path_graph(1)), 2)
        assert span_mod(gens, 1, 2) == {(0,)}

    def test_banana_kernel_is_diagonal(self):
        gens = kernel_generators_mod(boundary_matrix(banana()), 2)
        assert span_mod(gens, 2, 2) == {(0, 0), (1, 1)}

    def test_against_brute_force_oracle(self):
        rng = random.Random(99)
        for _ in range(80):
            rows = rng.randint(1, 3)
            cols = rng.randint(0, 3)
            q = rng.randint(1, 5)
            a = IntMatrix(
                [[rng.randint(-6, 6) for _ in range(cols)] for _ in range(rows)],
                cols=cols,
            )
            gens = kernel_generators_mod(a, q)
            assert span_mod(gens, cols, q) == brute_kernel(a, q)


class TestSubgroupContainedMod:
    def test_banana_kernel_inside_coboundary_image(self):
        g = banana()
        gens = kernel_generators_mod(boundary_matrix(g), 2)
        assert subgroup_contained_mod(gens, coboundary_matrix(g), 2)

    def test_loop_kernel_not_inside_zero_image(self):
        g = loop_graph()
        for r in (2, 3, 5):
            gens = kernel_generators_mod(boundary_matrix(g), r)
            assert not subgroup_contained_mod(gens, coboundary_matrix(g), r)

    def test_empty_generators_vacuous(self):
        assert subgroup_contained_mod([], IntMatrix.zeros(2, 2), 5)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            subgroup_contained_mod([(1, 2, 3)], IntMatrix.zeros(2, 2), 5)
