#!/usr/bin/env python3
"""Dual graphs, circuits, and the two combinatorial gcd invariants.

A reduction of a smooth curve is encoded by the dual graph of its
special fibre: a vertex per irreducible component, an edge per node.
This script builds a few such graphs, enumerates their circuits, and
computes the circuit invariant c and the thickness invariant t that
control the finiteness of Neron models.
"""

from nerongraph import (
    MultiGraph,
    betti1,
    circuit_invariant_c,
    enumerate_circuits,
    fundamental_cycle_basis,
    is_nonseparating,
    is_r_divided,
    signed_common_edges,
    thickness_invariant_t,
    thickness_subdivision,
    total_genus,
)

# Two components meeting in two nodes: the "banana".  Both edges run
# from v0 to v1; orientations are bookkeeping, nothing depends on them.
banana = MultiGraph(
    ["v0", "v1"],
    [("e0", "v0", "v1"), ("e1", "v0", "v1")],
    vertex_genus={"v0": 1, "v1": 1},
)

print("banana:", banana)
print("  b1 =", betti1(banana), " total genus =", total_genus(banana))
print("  nonseparating edges:",
      [e.id for e in banana.edges if is_nonseparating(banana, e.id)])

# The banana has a single circuit: around through e0, back through e1.
circuits = enumerate_circuits(banana)
print("  circuits:", circuits)

# Pairing a circuit with itself counts its edges; two circuits pair to
# the signed number of shared edges.
c0 = circuits[0]
print("  <C, C> =", signed_common_edges(c0, c0))

# The circuit invariant c: gcd of all pairwise (and self) intersection
# numbers.  For the banana it is 2; for a tree there are no circuits and
# c = 0 by convention.
print("  c(banana) =", circuit_invariant_c(banana))

# A graph with two independent circuits sharing a chain of two edges:
# three chains of length 2 between a north and a south pole.
theta_fan = MultiGraph(
    ["n", "a", "b", "c", "s"],
    [("e0", "n", "a"), ("e1", "n", "b"), ("e2", "n", "c"),
     ("e3", "a", "s"), ("e4", "b", "s"), ("e5", "c", "s")],
)
print("\ntheta-fan:", theta_fan)
print("  b1 =", betti1(theta_fan))
for x in enumerate_circuits(theta_fan):
    print("   ", x)
basis = fundamental_cycle_basis(theta_fan)
print("  cycle basis size =", len(basis), "(= b1)")
gram = [[signed_common_edges(a, b) for b in basis] for a in basis]
print("  Gram matrix of the basis:", gram)
print("  c(theta-fan) =", circuit_invariant_c(theta_fan))

# Thickness: each node of the reduction carries the exponent of its
# local equation zw = pi^eta.  The thickness invariant t is the gcd over
# the nonseparating nes; separating nodes do not matter.
thick = MultiGraph(
    ["v0", "v1"],
    [("e0", "v0", "v1"), ("e1", "v0", "v1")],
    edge_thickness={"e0": 4, "e1": 6},
)
print("\nbanana with thicknesses (4, 6):  t =", thickness_invariant_t(thick))

# Resolving the thick nodes subdivides each edge into eta parts and
# yields the dual graph of the minimal regular model.
regular = thickness_subdivision(thick)
print("  minimal regular model:", regular, " c =", circuit_invariant_c(regular))

# r-divided graphs: obtained from some graph by cutting every edge into
# r equal chains.  The banana is the 2-division of a single loop.
print("\nbanana is 2-divided:", is_r_divided(banana, 2))
print("theta-fan is 2-divided:", is_r_divided(theta_fan, 2))
