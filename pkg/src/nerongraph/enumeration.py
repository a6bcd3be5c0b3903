"""Exhaustive enumeration of small connected multigraphs and the
equivalence verifier.

Graphs are enumerated up to isomorphism by canonical labelling: vertices
are first partitioned by (degree, loop count) and the edge multiset is
minimised over the label permutations respecting the partition.  Trees
(the n = m + 1 stratum) are generated from Pruefer sequences and
deduplicated with a rooted canonical encoding instead, which keeps the
default exhaustive run fast.

The verifier runs, over every enumerated graph and every modulus q up to
a bound, the three faces of the finiteness criterion -- q divides the
circuit invariant, the kernel of the boundary map mod q lies in the
image of the coboundary map, and the q-torsion of the component group is
all of (Z/q)^b1 -- plus the agreement of the Gram-basis circuit
invariant with the brute-force one.  Any disagreement is reported as a
counterexample.
"""

from __future__ import annotations

import heapq
import itertools
import random
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .component_group import homological_criterion, is_full_r_torsion
from .errors import BoundsTooLarge
from .graph import MultiGraph
from .invariants import circuit_invariant_c

MAX_ENUMERATION_EDGES = 7
MAX_ENUMERATION_Q = 12

Pair = tuple[int, int]


def _from_pairs(n: int, pairs: Sequence[Pair]) -> MultiGraph:
    return MultiGraph(range(n), [(i, u, v) for i, (u, v) in enumerate(pairs)])


def _vertex_classes(n: int, pairs: Sequence[Pair]) -> list[list[int]]:
    degree = [0] * n
    loops = [0] * n
    for u, v in pairs:
        if u == v:
            loops[u] += 1
            degree[u] += 2
        else:
            degree[u] += 1
            degree[v] += 1
    by_invariant: dict[tuple[int, int], list[int]] = {}
    for i in range(n):
        by_invariant.setdefault((degree[i], loops[i]), []).append(i)
    return [by_invariant[key] for key in sorted(by_invariant)]


def _canonical_pairs(n: int, pairs: Sequence[Pair]) -> tuple[Pair, ...]:
    """Least relabelling of the edge multiset over isomorphisms.

    Only permutations preserving the (degree, loops) partition can be
    isomorphisms, so the minimum is taken over those.
    """
    classes = _vertex_classes(n, pairs)
    positions: list[list[int]] = []
    start = 0
    for cls in classes:
        positions.append(list(range(start, start + len(cls))))
        start += len(cls)
    best: tuple[Pair, ...] | None = None
    sigma = [0] * n
    for assignment in itertools.product(*(itertools.permutations(p) for p in positions)):
        for cls, placed in zip(classes, assignment):
            for vertex, position in zip(cls, placed):
                sigma[vertex] = position
        candidate = tuple(
            sorted(
                (sigma[u], sigma[v]) if sigma[u] <= sigma[v] else (sigma[v], sigma[u])
                for u, v in pairs
            )
        )
        if best is None or candidate < best:
            best = candidate
    assert best is not None
    return best


def _connected(n: int, pairs: Sequence[Pair]) -> bool:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    components = n
    for u, v in pairs:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            components -= 1
    return components == 1


def _pruefer_tree(sequence: Sequence[int], n: int) -> list[Pair]:
    degree = [1] * n
    for x in sequence:
        degree[x] += 1
    edges: list[Pair] = []
    leaves = sorted(i for i in range(n) if degree[i] == 1)
    heapq.heapify(leaves)
    for x in sequence:
        leaf = heapq.heappop(leaves)
        edges.append((min(leaf, x), max(leaf, x)))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((min(u, v), max(u, v)))
    return edges


def _tree_signature(n: int, pairs: Sequence[Pair]) -> tuple:
    """Canonical rooted encoding of a tree (rooted at its centroid set)."""
    adjacency: list[list[int]] = [[] for _ in range(n)]
    for u, v in pairs:
        adjacency[u].append(v)
        adjacency[v].append(u)

    def centroids() -> list[int]:
        size = [1] * n
        order: list[int] = []
        parent = [-1] * n
        stack = [0]
        seen = [False] * n
        while stack:
            u = stack.pop()
            seen[u] = True
            order.append(u)
            for w in adjacency[u]:
                if not seen[w]:
                    parent[w] = u
                    stack.append(w)
        for u in reversed(order):
            if parent[u] >= 0:
                size[parent[u]] += size[u]
        best, nodes = None, []
        for u in range(n):
            heaviest = max(
                [size[w] for w in adjacency[u] if w != parent[u]]
                + ([n - size[u]] if parent[u] >= 0 else []),
                default=0,
            )
            if best is None or heaviest < best:
                best, nodes = heaviest, [u]
            elif heaviest == best:
                nodes.append(u)
        return nodes

    def encode(u: int, banned: int) -> tuple:
        return tuple(sorted(encode(w, u) for w in adjacency[u] if w != banned))

    return min(encode(c, -1) for c in centroids())


def connected_multigraphs(max_edges: int) -> Iterator[MultiGraph]:
    """All connected multigraphs with at most ``max_edges`` edges, up to
    isomorphism; loops and parallel edges included.

    Vertices are labelled 0..n-1 and edges 0..m-1 in a canonical order,
    so the stream is deterministic.
    """
    yield _from_pairs(1, [])
    for m in range(1, max_edges + 1):
        for n in range(1, m + 2):
            if n == m + 1:
                if n == 1:
                    continue
                seen_trees: set[tuple] = set()
                for sequence in itertools.product(range(n), repeat=n - 2):
                    pairs = _pruefer_tree(sequence, n)
                    signature = _tree_signature(n, pairs)
                    if signature not in seen_trees:
                        seen_trees.add(signature)
                        yield _from_pairs(n, _canonical_pairs(n, pairs))
                continue
            slots = [(i, j) for i in range(n) for j in range(i, n)]
            seen: set[tuple[Pair, ...]] = set()
            for combo in itertools.combinations_with_replacement(slots, m):
                touched = set()
                for u, v in combo:
                    touched.add(u)
                    touched.add(v)
                if len(touched) != n or not _connected(n, combo):
                    continue
                key = _canonical_pairs(n, combo)
                if key not in seen:
                    seen.add(key)
                    yield _from_pairs(n, key)


def random_connected_multigraph(
    rng: random.Random,
    max_edges: int = 12,
    max_extra: int | None = None,
    thickness_range: tuple[int, int] | None = None,
    genus_range: tuple[int, int] = (0, 2),
) -> MultiGraph:
    """A random connected multigraph with at most ``max_edges`` edges:
    a random tree plus random extra edges (loops and parallels allowed),
    with optional random thickness and genus decorations."""
    n = rng.randint(1, min(8, max_edges + 1))
    pairs: list[Pair] = []
    for v in range(1, n):
        u = rng.randrange(v)
        pairs.append((u, v))
    room = max_edges - len(pairs)
    if max_extra is not None:
        room = min(room, max_extra)
    for _ in range(rng.randint(0, room) if room > 0 else 0):
        u = rng.randrange(n)
        v = rng.randrange(n)
        pairs.append((min(u, v), max(u, v)))
    genus = {v: rng.randint(*genus_range) for v in range(n)}
    thickness = None
    if thickness_range is not None:
        thickness = {i: rng.randint(*thickness_range) for i in range(len(pairs))}
    return MultiGraph(
        range(n),
        [(i, u, v) for i, (u, v) in enumerate(pairs)],
        vertex_genus=genus,
        edge_thickness=thickness,
    )


@dataclass
class EquivalenceReport:
    """Outcome of one exhaustive verification run."""

    max_edges: int
    max_q: int
    graphs_by_edges: dict[int, int] = field(default_factory=dict)
    checks: int = 0
    counterexamples: list[str] = field(default_factory=list)

    @property
    def total_graphs(self) -> int:
        return sum(self.graphs_by_edges.values())

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def verify_equivalence(max_edges: int = 6, max_q: int = 6) -> EquivalenceReport:
    """Check the three-way criterion agreement exhaustively.

    For every connected multigraph with at most ``max_edges`` edges (up
    to isomorphism) and every 1 <= q <= ``max_q``, assert that

    * q divides the circuit invariant c,
    * the kernel of the boundary map mod q lies in the image of the
      coboundary map mod q,
    * Phi[q] is isomorphic to (Z/q)^b1

    agree three ways, and that the Gram-basis computation of c agrees
    with brute-force circuit enumeration.  Returns a report carrying any
    counterexamples; an empty list means the equivalence held everywhere.
    """
    if not 1 <= max_edges <= MAX_ENUMERATION_EDGES:
        raise BoundsTooLarge(
            f"max_edges must be between 1 and {MAX_ENUMERATION_EDGES}"
        )
    if not 1 <= max_q <= MAX_ENUMERATION_Q:
        raise BoundsTooLarge(f"max_q must be between 1 and {MAX_ENUMERATION_Q}")
    report = EquivalenceReport(max_edges=max_edges, max_q=max_q)
    for g in connected_multigraphs(max_edges):
        report.graphs_by_edges[g.n_edges] = report.graphs_by_edges.get(g.n_edges, 0) + 1
        c_basis = circuit_invariant_c(g)
        c_brute = circuit_invariant_c(g, via_circuits=True)
        if c_basis != c_brute:
            report.counterexamples.append(
                f"{g!r} {g.edges}: basis c = {c_basis}, brute-force c = {c_brute}"
            )
        for q in range(1, max_q + 1):
            by_circuits = c_brute % q == 0
            by_homology = homological_criterion(g, q)
            by_torsion = is_full_r_torsion(g, q)
            report.checks += 1
            if not (by_circuits == by_homology == by_torsion):
                report.counterexamples.append(
                    f"{g!r} {g.edges} q={q}: circuits={by_circuits} "
                    f"homology={by_homology} torsion={by_torsion}"
                )
    return report
