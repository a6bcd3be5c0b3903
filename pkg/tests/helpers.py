"""Shared graph builders and independent oracles for the test suite.

The oracles here deliberately avoid the code paths they are used to
check: circuits are enumerated by a blunt depth-first search over edge
traversals, membership modulo q by exhaustive search over (Z/q)^cols,
and the component group once more through the quotient-of-images
presentation via stacked Smith reductions.
"""

from __future__ import annotations

import itertools
from nerongraph import Circuit, IntMatrix, MultiGraph, smith_normal_form


# -- small graphs -----------------------------------------------------------


def loop_graph(**kw) -> MultiGraph:
    return MultiGraph(["v0"], [("e0", "v0", "v0")], **kw)


def banana(**kw) -> MultiGraph:
    return MultiGraph(["v0", "v1"], [("e0", "v0", "v1"), ("e1", "v0", "v1")], **kw)


def path_graph(n_edges: int) -> MultiGraph:
    vs = [f"v{i}" for i in range(n_edges + 1)]
    es = [(f"e{i}", f"v{i}", f"v{i+1}") for i in range(n_edges)]
    return MultiGraph(vs, es)


def cycle_graph(n: int) -> MultiGraph:
    vs = [f"v{i}" for i in range(n)]
    es = [(f"e{i}", f"v{i}", f"v{(i+1) % n}") for i in range(n)]
    return MultiGraph(vs, es)


def barbell(**kw) -> MultiGraph:
    """Two loops joined by a bridge."""
    return MultiGraph(
        ["v0", "v1"],
        [("l0", "v0", "v0"), ("b", "v0", "v1"), ("l1", "v1", "v1")],
        **kw,
    )


def theta(parallel: int = 3) -> MultiGraph:
    """Two vertices joined by ``parallel`` parallel edges."""
    return MultiGraph(
        ["v0", "v1"], [(f"e{i}", "v0", "v1") for i in range(parallel)]
    )


def two_triangles_bridge() -> MultiGraph:
    vs = [f"v{i}" for i in range(6)]
    es = [
        ("a0", "v0", "v1"),
        ("a1", "v1", "v2"),
        ("a2", "v2", "v0"),
        ("b0", "v3", "v4"),
        ("b1", "v4", "v5"),
        ("b2", "v5", "v3"),
        ("bridge", "v0", "v3"),
    ]
    return MultiGraph(vs, es)


# -- oracles ----------------------------------------------------------------


def naive_circuits(g: MultiGraph) -> set[Circuit]:
    """Depth-first enumeration of all circuits, from every starting edge
    and direction, deduplicated through Circuit equality."""

    def endpoints(eid, d):
        e = g.edge(eid)
        return (e.tail, e.tip) if d == 1 else (e.tip, e.tail)

    out: set[Circuit] = set()

    def extend(seq, used, interior):
        start = endpoints(*seq[0])[0]
        cur = endpoints(*seq[-1])[1]
        if cur == start:
            out.add(Circuit(g, seq))
            return
        if cur in interior:
            return
        for e in g.edges:
            if e.id in used:
                continue
            for d in (1, -1):
                if endpoints(e.id, d)[0] == cur:
                    extend(seq + [(e.id, d)], used | {e.id}, interior | {cur})

    for e in g.edges:
        for d in (1, -1):
            extend([(e.id, d)], {e.id}, set())
    return out


def brute_image_contains(a: IntMatrix, b, q: int) -> bool:
    """Exhaustive search for x with a x = b (mod q)."""
    for x in itertools.product(range(q), repeat=a.cols):
        if all((lhs - rhs) % q == 0 for lhs, rhs in zip(a.apply(x), b)):
            return True
    return False


def brute_kernel(a: IntMatrix, q: int) -> set[tuple[int, ...]]:
    return {
        x
        for x in itertools.product(range(q), repeat=a.cols)
        if all(value % q == 0 for value in a.apply(x))
    }


def span_mod(gens, length: int, q: int) -> set[tuple[int, ...]]:
    """All Z/q-combinations of the generators."""
    span = {(0,) * length}
    for gen in gens:
        span = {
            tuple((x + k * y) % q for x, y in zip(vec, gen))
            for vec in span
            for k in range(q)
        }
    return span


def solve_exact(a: IntMatrix, b) -> tuple[int, ...] | None:
    """An integer solution of a x = b, or None."""
    snf = smith_normal_form(a)
    c = snf.u.apply(b)
    diag = snf.diagonal
    y = [0] * a.cols
    for i in range(a.rows):
        d_i = diag[i] if i < len(diag) else 0
        if d_i == 0:
            if c[i] != 0:
                return None
        else:
            if c[i] % d_i != 0:
                return None
            if i < a.cols:
                y[i] = c[i] // d_i
    x = snf.v.apply(y)
    assert a.apply(x) == tuple(b)
    return x


def phi_from_presentation(g: MultiGraph) -> tuple[int, ...]:
    """Invariant factors of im(boundary) / im(boundary o coboundary),
    computed through stacked Smith reductions, independent of phi_group.
    """
    from nerongraph import boundary_matrix

    boundary = boundary_matrix(g)
    m = boundary * boundary.transpose()  # -M; same image lattice as M
    snf = smith_normal_form(boundary)
    image_basis_source = boundary * snf.v
    basis_cols = [
        image_basis_source.column(j)
        for j, d in enumerate(snf.diagonal)
        if d != 0
    ]
    basis = IntMatrix(
        [[col[i] for col in basis_cols] for i in range(boundary.rows)],
        cols=len(basis_cols),
    )
    coords = []
    for j in range(m.cols):
        x = solve_exact(basis, m.column(j))
        assert x is not None, "inner lattice not contained in outer"
        coords.append(x)
    coord_matrix = IntMatrix(
        [[vec[i] for vec in coords] for i in range(basis.cols)],
        cols=len(coords),
    )
    diag = smith_normal_form(coord_matrix).diagonal
    assert all(d != 0 for d in diag), "quotient is infinite"
    return tuple(d for d in diag if d > 1)
