#!/usr/bin/env python3
"""The extremal construction families and their exact sizes.

A family member is a backward sum: complete blocks, consecutive blocks
joined both ways, and every vertex sending one arc to each block two or
more positions earlier. Remoteness is always attained at the leading
singleton block.
"""

from dgr import (
    PathCompleteParams,
    backward_sum,
    distance_profile,
    dpk_select,
    enumerate_kappa_pc_family,
    kappa_pc_digraph,
    pk_lambda_select,
    profile_digraph,
    remoteness,
    shortcut_free_dipath,
    vertex_connectivity,
)

# The 6-vertex member with kappa = 2: one middle block, a = 2, b = 1.
D = kappa_pc_digraph(PathCompleteParams(kappa=2, ell=1, a=2, b=1))
print("member (kappa=2, ell=1, a=2, b=1)")
print("  order:", D.order, " arcs:", D.size)
print("  profile from source:", distance_profile(D, 0).counts)
print("  remoteness:", remoteness(D))
print("  vertex connectivity:", vertex_connectivity(D).value)

# Families at a fixed order have pairwise distinct sizes, and bigger means
# less remote: the selector picks the smallest member holding >= m arcs.
print("\nfamily n = 7, kappa = 1 (size, remoteness):")
for p in enumerate_kappa_pc_family(7, 1):
    H = kappa_pc_digraph(p)
    print(f"  ell={p.ell} a={p.a} b={p.b}: m={H.size}, rho={remoteness(H)[0]}")

selected, params = dpk_select(7, 30, 1)
print(f"selected for m >= 30: ell={params.ell} a={params.a} b={params.b}, m={selected.size}")

# The same block machinery gives the Eulerian equality case and the
# edge-connectivity families.
E = profile_digraph([1, 2, 2, 1])
print("\nbidirected sequential sum [1,2,2,1]: arcs =", E.size)

G, lam_params = pk_lambda_select(8, 12, 2)
print(
    f"lambda=2 family member of order 8 with >= 12 edges: "
    f"variant {lam_params.variant}, k={lam_params.k}, edges={G.size}"
)

# Digraphs attaining the order bound n/2: a Hamiltonian dipath plus
# backward arcs only.
S = shortcut_free_dipath(6, {(5, 0), (3, 1)})
print("\nshortcut-free dipath with 2 back arcs: remoteness =", remoteness(S)[0])
