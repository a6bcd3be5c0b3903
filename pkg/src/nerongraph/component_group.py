"""The component group of a graph, its torsion, and the homological
finiteness criterion.

For a connected graph the group Phi is the cokernel of the intersection
matrix M restricted to degree-zero 0-chains; it is the group of connected
components of the special fibre of the Neron model of the Jacobian, also
known as the critical group or sandpile group in combinatorics.  Its
order is the number of spanning trees, which gives an independent oracle
via deletion-contraction.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, prod
from .errors import MalformedSpectrum, NotACycle
from .graph import MultiGraph, OrientedCycleVector, betti1
from .homology import (
    boundary_matrix,
    coboundary_matrix,
    intersection_matrix,
    kernel_generators_mod,
    smith_normal_form,
    solve_mod,
    subgroup_contained_mod,
)


@dataclass(frozen=True)
class AbelianGroup:
    """A finite abelian group as its list of invariant factors.

    The factors are the integers n_1 | n_2 | ... >= 2; the empty tuple is
    the trivial group.  Factors equal to 1 are never stored.
    """

    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        fs = tuple(self.invariant_factors)
        object.__setattr__(self, "invariant_factors", fs)
        for n in fs:
            if not isinstance(n, int) or isinstance(n, bool) or n < 2:
                raise ValueError(f"invariant factors must be integers >= 2, got {n!r}")
        for a, b in zip(fs, fs[1:]):
            if b % a != 0:
                raise ValueError(f"invariant factors must form a divisibility chain: {fs}")

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)

    @property
    def is_trivial(self) -> bool:
        return not self.invariant_factors

    def __str__(self) -> str:
        if self.is_trivial:
            return "trivial"
        return " x ".join(f"Z/{n}" for n in self.invariant_factors)


def phi_group(g: MultiGraph) -> AbelianGroup:
    """The component group Phi of a connected graph.

    Computed from the Smith diagonal of the intersection matrix: for a
    connected graph on h vertices the diagonal is (n_1, ..., n_{h-1}, 0)
    with all n_i nonzero, and the entries greater than 1 are the
    invariant factors.
    """
    diag = smith_normal_form(intersection_matrix(g)).diagonal
    zeros = sum(1 for d in diag if d == 0)
    if zeros != 1:
        raise MalformedSpectrum(
            f"intersection matrix has {zeros} zero invariant factors, expected 1"
        )
    return AbelianGroup(tuple(d for d in diag if d > 1))


def spanning_tree_count(g: MultiGraph) -> int:
    """Number of spanning trees, by deletion-contraction.

    Loops are deleted and bridges contracted; the recursion is memoised
    on the vertex set and edge multiset.  This is deliberately
    independent of the Smith-form route to |Phi|, so the two can
    cross-validate each other (the matrix-tree theorem).
    """
    edges = tuple(
        sorted(
            (min(g.vertex_index(e.tail), g.vertex_index(e.tip)),
             max(g.vertex_index(e.tail), g.vertex_index(e.tip)))
            for e in g.edges
            if not e.is_loop
        )
    )
    vertices = frozenset(range(g.n_vertices))
    cache: dict[tuple, int] = {}

    def connects(edges_left, start, goal) -> bool:
        seen = {start}
        frontier = [start]
        while frontier:
            u = frontier.pop()
            for a, b in edges_left:
                if a == u and b not in seen:
                    seen.add(b)
                    frontier.append(b)
                elif b == u and a not in seen:
                    seen.add(a)
                    frontier.append(a)
        return goal in seen

    def count(verts: frozenset, edges: tuple) -> int:
        if not edges:
            return 1 if len(verts) <= 1 else 0
        key = (verts, edges)
        if key in cache:
            return cache[key]
        (u, v), rest = edges[0], edges[1:]
        # Contract: relabel v -> u, drop the loops this creates.
        relabelled = []
        for a, b in rest:
            a2 = u if a == v else a
            b2 = u if b == v else b
            if a2 != b2:
                relabelled.append((min(a2, b2), max(a2, b2)))
        contracted = tuple(sorted(relabelled))
        merged = count(verts - {v}, contracted)
        if connects(rest, u, v):
            result = count(verts, rest) + merged
        else:   # bridge: deletion contributes nothing
            result = merged
        cache[key] = result
        return result

    return count(vertices, edges)


def phi_r_torsion(g: MultiGraph, r: int) -> AbelianGroup:
    """The r-torsion subgroup Phi[r].

    For Phi = (+) Z/n_i the structure theorem gives
    Phi[r] = (+) Z/gcd(n_i, r); factors collapsing to 1 are dropped and
    the divisibility chain survives the gcd.
    """
    if r < 1:
        raise ValueError("r must be a positive integer")
    factors = tuple(
        d for n in phi_group(g).invariant_factors if (d := gcd(n, r)) > 1
    )
    return AbelianGroup(factors)


def is_full_r_torsion(g: MultiGraph, r: int) -> bool:
    """Whether Phi[r] is isomorphic to (Z/r)^b1, i.e. has exactly b1
    invariant factors all equal to r.  This is the finiteness condition
    for the Neron model of the r-torsion of the Picard scheme."""
    expected = AbelianGroup((r,) * betti1(g)) if r > 1 else AbelianGroup()
    return phi_r_torsion(g, r) == expected


def homological_criterion(g: MultiGraph, q: int) -> bool:
    """Whether ker(boundary mod q) is contained in im(coboundary mod q).

    This is the graph-theoretic form of the finiteness criterion; it is
    equivalent both to q dividing every signed circuit intersection and
    to Phi[q] being all of (Z/q)^b1.
    """
    gens = kernel_generators_mod(boundary_matrix(g), q)
    return subgroup_contained_mod(gens, coboundary_matrix(g), q)


def coboundary_witness(
    g: MultiGraph, z: OrientedCycleVector, q: int
) -> tuple[int, ...] | None:
    """A vertex potential A with (coboundary mod q)(A) = z, or None.

    The cycle vector must lie in the kernel of the boundary map modulo q,
    otherwise :class:`NotACycle` is raised.  A returned witness has been
    re-verified against z before being handed back.
    """
    zvec = z.to_edge_vector(g)
    if any(x % q != 0 for x in boundary_matrix(g).apply(zvec)):
        raise NotACycle("vector is not a cycle modulo q")
    delta = coboundary_matrix(g)
    witness = solve_mod(delta, zvec, q)
    if witness is None:
        return None
    check = delta.apply(witness)
    if any((a - b) % q != 0 for a, b in zip(check, zvec)):
        raise AssertionError("witness failed re-verification")
    return witness
