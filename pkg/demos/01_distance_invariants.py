#!/usr/bin/env python3
"""Tour of the exact distance invariants on small digraphs.

Every ratio is a fractions.Fraction; nothing here is floating point until
we format it for display.
"""

from dgr import (
    bidirect,
    build_digraph,
    complete_digraph,
    directed_cycle,
    distance_profile,
    distances_from,
    eccentricity,
    diameter,
    path_graph,
    remoteness,
    transmission,
)

# A directed 5-cycle: every vertex sees the others at distances 1..4.
C5 = directed_cycle(5)
print("directed 5-cycle")
print("  distances from 0:", distances_from(C5, 0))
print("  transmission    :", transmission(C5, 0))
value, witness = remoteness(C5)
print(f"  remoteness      : {value} at vertex {witness}")

# The bidirected complete digraph is as tight as it gets: remoteness 1.
K6 = complete_digraph(6)
print("\nbidirected K6 remoteness:", remoteness(K6)[0])

# Bidirecting a path preserves its metric structure, so the classical
# order bound n/2 is attained.
P7 = bidirect(path_graph(7))
value, witness = remoteness(P7)
print(f"\nbidirected P7 remoteness: {value} (= n/2), attained at endpoint {witness}")

# An asymmetric example: distance profiles depend on direction.
D = build_digraph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
print("\ncustom digraph on 4 vertices")
for v in range(4):
    profile = distance_profile(D, v)
    print(
        f"  vertex {v}: profile {profile.counts}, "
        f"eccentricity {eccentricity(D, v)}, transmission {transmission(D, v)}"
    )
print("  diameter:", diameter(D))
