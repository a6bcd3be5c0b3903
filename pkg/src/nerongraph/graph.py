"""Connected multigraphs with decorated vertices and edges, and their circuits.

The graphs here model dual graphs of nodal curves: one vertex per
irreducible component (carrying a geometric genus), one edge per node
(carrying a thickness and a stabilizer order).  Loops and parallel edges
are allowed; every graph is required to be connected.

A *circuit* is a closed walk along oriented edges whose interior vertices
are pairwise distinct; a loop alone is a circuit of length 1 and a pair of
parallel edges supports a circuit of length 2.  Circuits map to signed
edge-indicator vectors, and the inner product of two such vectors counts
the edges shared by the two circuits with signs recording whether the
orientations agree.

All values are immutable after construction and all operations are pure,
so everything in this module is safe to share between threads.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence

from .errors import (
    DanglingEndpoint,
    Disconnected,
    DuplicateId,
    TooManyCircuits,
    UnknownEdge,
)

VertexId = int | str
EdgeId = int | str

#: Default cap for :func:`enumerate_circuits`; circuit counts grow
#: exponentially and this tool targets desk-scale dual graphs.
DEFAULT_CIRCUIT_LIMIT = 10**6


class Edge(NamedTuple):
    id: EdgeId
    tail: VertexId
    tip: VertexId

    @property
    def is_loop(self) -> bool:
        return self.tail == self.tip


class MultiGraph:
    """A connected multigraph with loops, parallel edges and decorations.

    Parameters
    ----------
    vertices:
        Vertex identifiers, in the order that fixes all matrix rows.
        Identifiers must be unique and mutually comparable (all ints or
        all strings) so that "the least vertex" is well defined.
    edges:
        ``(id, tail, tip)`` triples, in the order that fixes all matrix
        columns.  ``tail == tip`` gives a loop.
    vertex_genus:
        Geometric genus per vertex; missing entries default to 0.
    edge_thickness:
        Node thickness per edge (the exponent in the local equation
        ``zw = pi^eta``); missing entries default to 1.
    edge_stabilizer:
        Order of the cyclic stabilizer at the node of a twisted curve;
        missing entries default to 1.
    """

    __slots__ = (
        "_vertices",
        "_edges",
        "_vindex",
        "_eindex",
        "_genus",
        "_thickness",
        "_stabilizer",
        "_adjacency",
        "_loops_at",
        "__weakref__",
    )

    def __init__(
        self,
        vertices: Iterable[VertexId],
        edges: Iterable[tuple[EdgeId, VertexId, VertexId] | Edge],
        vertex_genus: Mapping[VertexId, int] | None = None,
        edge_thickness: Mapping[EdgeId, int] | None = None,
        edge_stabilizer: Mapping[EdgeId, int] | None = None,
    ) -> None:
        vs = tuple(vertices)
        es = tuple(e if isinstance(e, Edge) else Edge(*e) for e in edges)

        vindex: dict[VertexId, int] = {}
        for v in vs:
            if v in vindex:
                raise DuplicateId(f"duplicate vertex id {v!r}")
            vindex[v] = len(vindex)
        eindex: dict[EdgeId, int] = {}
        for e in es:
            if e.id in eindex:
                raise DuplicateId(f"duplicate edge id {e.id!r}")
            eindex[e.id] = len(eindex)
            for endpoint in (e.tail, e.tip):
                if endpoint not in vindex:
                    raise DanglingEndpoint(
                        f"edge {e.id!r} refers to unknown vertex {endpoint!r}"
                    )
        if not vs:
            raise Disconnected("a graph needs at least one vertex")

        def decorated(
            given: Mapping | None, keys: Sequence, index: Mapping, default: int,
            least: int, what: str,
        ) -> dict:
            table = {k: default for k in keys}
            for k, value in (given or {}).items():
                if k not in index:
                    raise DanglingEndpoint(f"{what} for unknown id {k!r}")
                if not isinstance(value, int) or isinstance(value, bool) or value < least:
                    raise ValueError(f"{what} of {k!r} must be an integer >= {least}")
                table[k] = value
            return table

        self._vertices = vs
        self._edges = es
        self._vindex = vindex
        self._eindex = eindex
        self._genus = decorated(vertex_genus, vs, vindex, 0, 0, "genus")
        self._thickness = decorated(edge_thickness, [e.id for e in es], eindex, 1, 1, "thickness")
        self._stabilizer = decorated(edge_stabilizer, [e.id for e in es], eindex, 1, 1, "stabilizer")

        # adjacency[u] lists (edge index, other endpoint index) for non-loop
        # edges, in edge input order; loops are kept separately.
        adjacency: list[list[tuple[int, int]]] = [[] for _ in vs]
        loops_at: list[list[int]] = [[] for _ in vs]
        for i, e in enumerate(es):
            ti, hi = vindex[e.tail], vindex[e.tip]
            if ti == hi:
                loops_at[ti].append(i)
            else:
                adjacency[ti].append((i, hi))
                adjacency[hi].append((i, ti))
        self._adjacency = tuple(tuple(a) for a in adjacency)
        self._loops_at = tuple(tuple(l) for l in loops_at)

        seen = self._reachable_from(0, skip_edge=None)
        if len(seen) != len(vs):
            missing = [v for v in vs if vindex[v] not in seen]
            raise Disconnected(f"graph is not connected; unreachable: {missing!r}")

    # -- basic accessors -------------------------------------------------

    @property
    def vertices(self) -> tuple[VertexId, ...]:
        return self._vertices

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    @property
    def n_vertices(self) -> int:
        return len(self._vertices)

    @property
    def n_edges(self) -> int:
        return len(self._edges)

    @property
    def vertex_genus(self) -> Mapping[VertexId, int]:
        return MappingProxyType(self._genus)

    @property
    def edge_thickness(self) -> Mapping[EdgeId, int]:
        return MappingProxyType(self._thickness)

    @property
    def edge_stabilizer(self) -> Mapping[EdgeId, int]:
        return MappingProxyType(self._stabilizer)

    def vertex_index(self, v: VertexId) -> int:
        return self._vindex[v]

    def edge_index(self, e: EdgeId) -> int:
        try:
            return self._eindex[e]
        except KeyError:
            raise UnknownEdge(f"no edge with id {e!r}") from None

    def edge(self, e: EdgeId) -> Edge:
        return self._edges[self.edge_index(e)]

    def genus(self, v: VertexId) -> int:
        return self._genus[v]

    def thickness(self, e: EdgeId) -> int:
        self.edge_index(e)
        return self._thickness[e]

    def stabilizer(self, e: EdgeId) -> int:
        self.edge_index(e)
        return self._stabilizer[e]

    def degree(self, v: VertexId) -> int:
        """Number of edge ends at ``v``; a loop contributes 2."""
        i = self._vindex[v]
        return len(self._adjacency[i]) + 2 * len(self._loops_at[i])

    def least_vertex(self) -> VertexId:
        return min(self._vertices)

    def __repr__(self) -> str:
        return f"MultiGraph({self.n_vertices} vertices, {self.n_edges} edges)"

    # -- internal traversal ----------------------------------------------

    def _reachable_from(self, start: int, skip_edge: int | None) -> set[int]:
        seen = {start}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for ei, w in self._adjacency[u]:
                if ei != skip_edge and w not in seen:
                    seen.add(w)
                    queue.append(w)
        return seen


def build_graph(
    vertices: Iterable[VertexId],
    edges: Iterable[tuple[EdgeId, VertexId, VertexId]],
    vertex_genus: Mapping[VertexId, int] | None = None,
    edge_thickness: Mapping[EdgeId, int] | None = None,
    edge_stabilizer: Mapping[EdgeId, int] | None = None,
) -> MultiGraph:
    """Validate the given records and return the corresponding graph."""
    return MultiGraph(vertices, edges, vertex_genus, edge_thickness, edge_stabilizer)


# -- circuits -------------------------------------------------------------


@dataclass(frozen=True)
class OrientedCycleVector:
    """The image of a circuit in the group of integral 1-chains.

    ``coefficients`` maps each edge id appearing in the circuit to +1 or
    -1 according to whether the circuit traverses the edge forwards or
    backwards; absent edges have coefficient 0.
    """

    coefficients: Mapping[EdgeId, int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficients", MappingProxyType(dict(self.coefficients)))

    def coefficient(self, e: EdgeId) -> int:
        return self.coefficients.get(e, 0)

    def dot(self, other: "OrientedCycleVector") -> int:
        a, b = self.coefficients, other.coefficients
        if len(b) < len(a):
            a, b = b, a
        return sum(c * b[e] for e, c in a.items() if e in b)

    def to_edge_vector(self, graph: MultiGraph) -> tuple[int, ...]:
        """Coefficients listed in the graph's edge order."""
        return tuple(self.coefficient(e.id) for e in graph.edges)


class Circuit:
    """A closed edge path with pairwise distinct interior vertices.

    ``traversals`` is a sequence of ``(edge_id, direction)`` pairs with
    direction +1 (tail to tip) or -1 (tip to tail); consecutive traversals
    chain head-to-tail and the last head equals the first tail.  Edges are
    pairwise distinct, so a single non-loop edge walked forth and back is
    not a circuit, while a loop alone is a circuit of length 1.

    Two circuits are equal when one is a rotation or a reversal of the
    other; ``canonical()`` returns the lexicographically least such
    representative (ordering edges by their position in the graph).
    """

    __slots__ = ("graph", "traversals", "_key")

    def __init__(self, graph: MultiGraph, traversals: Iterable[tuple[EdgeId, int]]) -> None:
        ts = tuple((e, d) for e, d in traversals)
        if not ts:
            raise ValueError("a circuit has at least one traversal")
        seen_edges = set()
        starts = []
        for e, d in ts:
            edge = graph.edge(e)
            if d not in (1, -1):
                raise ValueError(f"direction of {e!r} must be +1 or -1, got {d!r}")
            if e in seen_edges:
                raise ValueError(f"edge {e!r} repeated in circuit")
            seen_edges.add(e)
            starts.append(edge.tail if d == 1 else edge.tip)
        heads = [self._head(graph, *t) for t in ts]
        for i, h in enumerate(heads):
            nxt = starts[(i + 1) % len(ts)]
            if h != nxt:
                raise ValueError(
                    f"traversal {i} ends at {h!r} but the next starts at {nxt!r}"
                )
        if len(set(starts)) != len(starts):
            raise ValueError("interior vertices of a circuit must be distinct")
        self.graph = graph
        self.traversals = ts
        self._key = min(self._candidate_keys(graph, ts))

    @staticmethod
    def _head(graph: MultiGraph, e: EdgeId, d: int) -> VertexId:
        edge = graph.edge(e)
        return edge.tip if d == 1 else edge.tail

    @staticmethod
    def _candidate_keys(graph, ts) -> Iterator[tuple]:
        fwd = list(ts)
        rev = [(e, -d) for e, d in reversed(fwd)]
        n = len(fwd)
        for seq in (fwd, rev):
            for r in range(n):
                rotated = seq[r:] + seq[:r]
                yield tuple((graph.edge_index(e), 0 if d == 1 else 1) for e, d in rotated)

    def __len__(self) -> int:
        return len(self.traversals)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Circuit)
            and self.graph is other.graph
            and self._key == other._key
        )

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        parts = ",".join(f"{'+' if d == 1 else '-'}{e}" for e, d in self.traversals)
        return f"Circuit({parts})"

    def vertices(self) -> tuple[VertexId, ...]:
        """Start vertices of the traversals, in order."""
        out = []
        for e, d in self.traversals:
            edge = self.graph.edge(e)
            out.append(edge.tail if d == 1 else edge.tip)
        return tuple(out)

    def reverse(self) -> "Circuit":
        return Circuit(self.graph, [(e, -d) for e, d in reversed(self.traversals)])

    def canonical(self) -> "Circuit":
        lookup = {self.graph.edge_index(e): e for e, _ in self.traversals}
        ts = [(lookup[i], 1 if flag == 0 else -1) for i, flag in self._key]
        return Circuit(self.graph, ts)

    def cycle_vector(self) -> OrientedCycleVector:
        return OrientedCycleVector({e: d for e, d in self.traversals})


def betti1(g: MultiGraph) -> int:
    """First Betti number |E| - |V| + 1 of a connected graph."""
    return g.n_edges - g.n_vertices + 1


def total_genus(g: MultiGraph) -> int:
    """Arithmetic genus of the configuration: sum of the vertex genera
    plus the first Betti number of the graph."""
    return sum(g.vertex_genus.values()) + betti1(g)


def is_nonseparating(g: MultiGraph, e: EdgeId) -> bool:
    """True when deleting the edge (keeping its endpoints) leaves the
    graph connected.  Loops are always nonseparating."""
    i = g.edge_index(e)
    edge = g.edges[i]
    if edge.is_loop:
        return True
    reachable = g._reachable_from(g.vertex_index(edge.tail), skip_edge=i)
    return g.vertex_index(edge.tip) in reachable


def signed_common_edges(a: Circuit, b: Circuit) -> int:
    """Inner product of the two circuits' oriented cycle vectors.

    Shared edges count +1 or -1 according to whether the two circuits
    traverse them in the same or in opposite directions.  The sign of the
    total depends on the stored orientations, so downstream consumers use
    the absolute value.
    """
    if a.graph is not b.graph:
        raise ValueError("circuits must belong to the same graph")
    return a.cycle_vector().dot(b.cycle_vector())


def enumerate_circuits(g: MultiGraph, limit: int = DEFAULT_CIRCUIT_LIMIT) -> list[Circuit]:
    """All circuits of the graph, one canonical representative each.

    A circuit and its reversal count once.  Loops give length-1 circuits
    and parallel edges give length-2 circuits.  Raises
    :class:`TooManyCircuits` when more than ``limit`` distinct circuits
    exist.
    """
    found: dict[tuple, Circuit] = {}

    def add(traversals: list[tuple[EdgeId, int]]) -> None:
        c = Circuit(g, traversals).canonical()
        if c._key not in found:
            if len(found) >= limit:
                raise TooManyCircuits(f"more than {limit} circuits")
            found[c._key] = c

    for loops in g._loops_at:
        for ei in loops:
            add([(g.edges[ei].id, 1)])

    n = g.n_vertices
    for s in range(n):
        # Vertex-simple paths from s through vertices > s, closing at s.
        # Each circuit arises from its least vertex, once per direction;
        # canonicalisation collapses the two.
        path: list[tuple[int, int]] = []  # (edge index, direction)
        used_edges: set[int] = set()
        on_path: set[int] = {s}

        def extend(u: int) -> None:
            for ei, w in g._adjacency[u]:
                if ei in used_edges:
                    continue
                if w == s and path:
                    direction = 1 if g._vindex[g.edges[ei].tail] == u else -1
                    travs = [(g.edges[j].id, d) for j, d in path]
                    travs.append((g.edges[ei].id, direction))
                    add(travs)
                elif w > s and w not in on_path:
                    direction = 1 if g._vindex[g.edges[ei].tail] == u else -1
                    path.append((ei, direction))
                    used_edges.add(ei)
                    on_path.add(w)
                    extend(w)
                    on_path.remove(w)
                    used_edges.remove(ei)
                    path.pop()

        extend(s)

    return sorted(found.values(), key=lambda c: c._key)


def _spanning_tree(g: MultiGraph) -> tuple[set[int], dict[int, tuple[int, int]]]:
    """Breadth-first spanning tree from the least vertex.

    Returns the set of tree edge indices and, for every non-root vertex
    index, its ``(parent vertex index, connecting edge index)``.
    """
    root = g.vertex_index(g.least_vertex())
    parent: dict[int, tuple[int, int]] = {}
    tree: set[int] = set()
    seen = {root}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for ei, w in g._adjacency[u]:
            if w not in seen:
                seen.add(w)
                parent[w] = (u, ei)
                tree.add(ei)
                queue.append(w)
    return tree, parent


def _tree_path(g: MultiGraph, parent, start: int, goal: int) -> list[tuple[EdgeId, int]]:
    """Traversals along the spanning tree from ``start`` to ``goal``."""
    def ancestors(v: int) -> list[int]:
        chain = [v]
        while chain[-1] in parent:
            chain.append(parent[chain[-1]][0])
        return chain

    up_start = ancestors(start)
    up_goal = ancestors(goal)
    common = set(up_start) & set(up_goal)
    lca = next(v for v in up_start if v in common)

    def step(child: int) -> tuple[EdgeId, int]:
        p, ei = parent[child]
        edge = g.edges[ei]
        direction = 1 if g._vindex[edge.tail] == child else -1
        return (edge.id, direction)

    down: list[tuple[EdgeId, int]] = []
    v = start
    while v != lca:
        down.append(step(v))
        v = parent[v][0]
    up: list[tuple[EdgeId, int]] = []
    v = goal
    while v != lca:
        e, d = step(v)
        up.append((e, -d))
        v = parent[v][0]
    return down + list(reversed(up))


def fundamental_cycle_basis(g: MultiGraph) -> list[Circuit]:
    """One circuit per non-tree edge of a deterministic spanning tree.

    The tree is grown breadth-first from the least vertex with edges
    scanned in input order; each non-tree edge (loops included) closes a
    unique circuit through the tree.  The resulting cycle vectors form an
    integral basis of the kernel of the boundary map, so there are
    exactly ``betti1(g)`` of them.
    """
    tree, parent = _spanning_tree(g)
    basis = []
    for i, e in enumerate(g.edges):
        if i in tree:
            continue
        if e.is_loop:
            basis.append(Circuit(g, [(e.id, 1)]))
            continue
        travs = [(e.id, 1)]
        travs += _tree_path(g, parent, g.vertex_index(e.tip), g.vertex_index(e.tail))
        basis.append(Circuit(g, travs))
    return basis


def _maximal_chain_lengths(g: MultiGraph) -> list[int]:
    """Edge counts of the maximal chains of the graph.

    A chain is a path whose interior vertices have degree exactly 2,
    running between vertices of degree != 2 (possibly the same vertex,
    giving a closed chain); when no such branch vertex exists the whole
    graph is a single cycle and counts as one chain.
    """
    branch = [i for i, v in enumerate(g.vertices) if g.degree(v) != 2]
    if not branch:
        # Connected with all degrees 2: a single cycle (a lone loop and a
        # pair of parallel edges are the degenerate cases).
        return [g.n_edges]
    lengths = []
    visited: set[int] = set()
    branch_set = set(branch)
    for b in branch:
        for ei in g._loops_at[b]:
            visited.add(ei)
            lengths.append(1)
        for ei, w in g._adjacency[b]:
            if ei in visited:
                continue
            visited.add(ei)
            length = 1
            cur = w
            prev_edge = ei
            while cur not in branch_set:
                nxt = next(
                    (j, x) for j, x in g._adjacency[cur] if j != prev_edge
                )
                prev_edge, cur = nxt[0], nxt[1]
                visited.add(prev_edge)
                length += 1
            lengths.append(length)
    return lengths


def is_r_divided(g: MultiGraph, r: int) -> bool:
    """Whether the graph arises from another graph by dividing every edge
    into exactly r edges.

    Subdividing an edge into r parts inserts r-1 vertices of degree 2, so
    the test reduces to the maximal chains: the graph is r-divided if and
    only if every maximal chain length is a multiple of r.
    """
    if r < 1:
        raise ValueError("r must be a positive integer")
    if r == 1:
        return True
    return all(length % r == 0 for length in _maximal_chain_lengths(g))


def thickness_subdivision(g: MultiGraph) -> MultiGraph:
    """The graph with every edge divided into ``thickness(e)`` edges.

    This is the dual graph of the minimal regular model associated to a
    semistable model with the given node thicknesses: a node of thickness
    eta is resolved into a chain of eta - 1 rational curves.  New vertices
    get genus 0 and all new edges thickness 1, so the first Betti number
    and the total genus are preserved.  Vertices and edges are relabelled
    ``0, 1, 2, ...`` deterministically; original vertices come first in
    their input order.

    Returns the graph itself when every thickness is 1.
    """
    if all(t == 1 for t in g.edge_thickness.values()):
        return g
    vertices: list[int] = list(range(g.n_vertices))
    genus = {i: g.genus(v) for i, v in enumerate(g.vertices)}
    edges: list[tuple[int, int, int]] = []
    next_vertex = g.n_vertices
    for e in g.edges:
        eta = g.thickness(e.id)
        chain = [g.vertex_index(e.tail)]
        for _ in range(eta - 1):
            vertices.append(next_vertex)
            genus[next_vertex] = 0
            chain.append(next_vertex)
            next_vertex += 1
        chain.append(g.vertex_index(e.tip))
        for a, b in itertools.pairwise(chain):
            edges.append((len(edges), a, b))
    return MultiGraph(vertices, edges, vertex_genus=genus)
