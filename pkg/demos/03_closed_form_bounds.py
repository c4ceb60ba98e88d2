#!/usr/bin/env python3
"""Evaluating the closed-form remoteness bounds exactly.

Bounds return exact fractions plus applicability and sharpness flags.
The kappa-digraph bound rounds m up to m* inside the stated congruence
class; the audit pathway tracks where that literal class disagrees with
direct size counts of the family.
"""

from dgr import (
    enumerate_kappa_pc_family,
    evaluate_bound,
    kappa_pc_digraph,
    m_star,
    m_star_counted,
    remoteness,
    sharpness_guard,
)

# Order-size bound for strong digraphs: n + 1 - m/(n-1).
result = evaluate_bound("size_digraph", 5, 10)
print("size_digraph(n=5, m=10):", result.value, f"(= {float(result.value)})")

# The kappa-digraph bound at the worked 6-vertex member: equality.
result = evaluate_bound("kappa_digraph", 6, 25, kappa=2)
print("kappa_digraph(n=6, m=25, kappa=2):", result.value, " m* =", result.m_star)

# Piecewise edge-connectivity bound for graphs.
for m in (10, 30):
    value = evaluate_bound("lambda_graph", 12, m, lam=2).value
    print(f"lambda_graph(n=12, m={m}, lambda=2): {value}")

# m* rounding: the anchor class is n^2-2n-1 modulo kappa.
print("\nm* at n=6, kappa=2:", [(m, m_star(6, m, 2)) for m in (23, 24, 25)])

# Sharpness clauses are reported, not enforced. At (6, 25, 2) the
# congruence holds but the literal range is empty: its upper end says 23
# where direct counting of the family gives 25.
check = sharpness_guard("kappa_digraph", 6, 25, 2)
print("\nsharpness clauses met:", check.met)
for reason in check.reasons:
    print("  ", reason)

# For kappa <= 2 the literal anchor matches counted sizes, so family
# members attain the bound exactly. At kappa = 3 the two anchors differ
# by 2 and the literal bound dips below the family value: surfaced, not
# patched.
member = next(
    p for p in enumerate_kappa_pc_family(9, 3) if kappa_pc_digraph(p).size == 61
)
D = kappa_pc_digraph(member)
print("\nkappa=3 member of size 61: rho =", remoteness(D)[0])
print("  literal m*(9, 61, 3) =", m_star(9, 61, 3))
print("  counted m*(9, 61, 3) =", m_star_counted(9, 61, 3))
print("  literal bound value  =", evaluate_bound("kappa_digraph", 9, 61, kappa=3).value)
