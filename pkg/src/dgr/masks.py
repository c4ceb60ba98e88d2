"""Bit-parallel digraph primitives for enumeration workloads.

A digraph of order n is an arc mask: the n(n-1) off-diagonal adjacency
cells in row-major order, cell k carried by bit 2**k. This is an internal
optimisation layer; results are observably identical to the object-level
modules, which the verifier cross-checks on a deterministic stride.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations

from .core import Digraph


class MaskTables:
    """Per-order lookup tables for decoding arc masks."""

    def __init__(self, n: int):
        self.n = n
        self.num_cells = n * (n - 1)
        self.full = (1 << n) - 1
        self.mask_count = 1 << self.num_cells
        self.cells = tuple((u, v) for u in range(n) for v in range(n) if v != u)
        self.bit_of = {cell: k for k, cell in enumerate(self.cells)}
        self.row_width = n - 1
        self.row_mask = (1 << (n - 1)) - 1
        self.row_shift = tuple(u * (n - 1) for u in range(n))
        targets = [[v for v in range(n) if v != u] for u in range(n)]
        out_table = []
        for u in range(n):
            table = []
            for chunk in range(1 << (n - 1)):
                acc = 0
                x = chunk
                while x:
                    b = x & -x
                    acc |= 1 << targets[u][b.bit_length() - 1]
                    x ^= b
                table.append(acc)
            out_table.append(tuple(table))
        self.out_table = tuple(out_table)

    def out_rows(self, mask: int) -> list[int]:
        """Out-neighbour vertex bitmask per vertex."""
        return [
            self.out_table[u][(mask >> self.row_shift[u]) & self.row_mask]
            for u in range(self.n)
        ]


@lru_cache(maxsize=None)
def tables_for(n: int) -> MaskTables:
    return MaskTables(n)


def mask_of_digraph(D: Digraph) -> int:
    t = tables_for(D.order)
    mask = 0
    for arc in D.arcs:
        mask |= 1 << t.bit_of[arc]
    return mask


def digraph_of_mask(n: int, mask: int) -> Digraph:
    t = tables_for(n)
    arcs = []
    x = mask
    while x:
        b = x & -x
        arcs.append(t.cells[b.bit_length() - 1])
        x ^= b
    return Digraph(n, frozenset(arcs))


def transpose_rows(rows: list[int], n: int) -> list[int]:
    in_rows = [0] * n
    for u in range(n):
        x = rows[u]
        while x:
            b = x & -x
            in_rows[b.bit_length() - 1] |= 1 << u
            x ^= b
    return in_rows


def is_balanced(rows: list[int], n: int) -> bool:
    """In-degree equals out-degree at every vertex."""
    in_rows = transpose_rows(rows, n)
    return all(rows[v].bit_count() == in_rows[v].bit_count() for v in range(n))


def sigma_vector(rows: list[int], n: int, full: int) -> list[int] | None:
    """Transmission of every vertex, or None if the digraph is not strong."""
    sigmas = []
    for v in range(n):
        seen = 1 << v
        cur = seen
        total = 0
        d = 0
        while True:
            nxt = 0
            c = cur
            while c:
                b = c & -c
                nxt |= rows[b.bit_length() - 1]
                c ^= b
            cur = nxt & ~seen
            if not cur:
                break
            d += 1
            total += d * cur.bit_count()
            seen |= cur
        if seen != full:
            return None
        sigmas.append(total)
    return sigmas


def profile_vectors(rows: list[int], n: int, full: int) -> list[tuple[int, ...]] | None:
    """Distance degree sequence of every vertex, or None if not strong."""
    profiles = []
    for v in range(n):
        seen = 1 << v
        cur = seen
        counts = [1]
        while True:
            nxt = 0
            c = cur
            while c:
                b = c & -c
                nxt |= rows[b.bit_length() - 1]
                c ^= b
            cur = nxt & ~seen
            if not cur:
                break
            counts.append(cur.bit_count())
            seen |= cur
        if seen != full:
            return None
        profiles.append(tuple(counts))
    return profiles


def _reaches_all(rows: list[int], start: int, rem: int) -> bool:
    seen = start
    cur = start
    while cur:
        nxt = 0
        c = cur
        while c:
            b = c & -c
            nxt |= rows[b.bit_length() - 1]
            c ^= b
        cur = nxt & rem & ~seen
        seen |= cur
    return seen & rem == rem


def _strong_on(rows: list[int], in_rows: list[int], rem: int) -> bool:
    if rem.bit_count() <= 1:
        return True
    start = rem & -rem
    return _reaches_all(rows, start, rem) and _reaches_all(in_rows, start, rem)


@lru_cache(maxsize=None)
def _vertex_subsets(n: int) -> tuple[tuple[int, ...], ...]:
    """Vertex-subset bitmasks grouped by size 1 .. n-2, deterministic order."""
    by_size = []
    for k in range(1, n - 1):
        masks = tuple(
            sum(1 << v for v in combo) for combo in combinations(range(n), k)
        )
        by_size.append(masks)
    return tuple(by_size)


def kappa_mask(rows: list[int], n: int, full: int) -> int:
    """Vertex connectivity by subset removal; assumes a strong digraph."""
    in_rows = transpose_rows(rows, n)
    for size_idx, subsets in enumerate(_vertex_subsets(n)):
        for s in subsets:
            if not _strong_on(rows, in_rows, full ^ s):
                return size_idx + 1
    return n - 1


def _unit_flow(rows: list[int], s: int, t: int, n: int) -> int:
    """Max s-t flow with unit arc capacities, by BFS augmentation."""
    res = rows[:]
    flow = 0
    while True:
        parent = [-1] * n
        parent[s] = s
        frontier = 1 << s
        seen = 1 << s
        while frontier and parent[t] < 0:
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                u = b.bit_length() - 1
                f ^= b
                new = res[u] & ~seen
                x = new
                while x:
                    bb = x & -x
                    parent[bb.bit_length() - 1] = u
                    x ^= bb
                seen |= new
                nxt |= new
            frontier = nxt
        if parent[t] < 0:
            return flow
        v = t
        while v != s:
            u = parent[v]
            res[u] &= ~(1 << v)
            res[v] |= 1 << u
            v = u
        flow += 1


def lambda_mask(rows: list[int], n: int) -> int:
    """Edge connectivity; assumes a strong digraph of order >= 2."""
    best = None
    for v in range(1, n):
        for s, t in ((0, v), (v, 0)):
            value = _unit_flow(rows, s, t, n)
            if best is None or value < best:
                best = value
                if best == 1:
                    return 1
    return best


def min_semidegree_mask(rows: list[int], n: int) -> int:
    in_rows = transpose_rows(rows, n)
    return min(
        min(rows[v].bit_count(), in_rows[v].bit_count()) for v in range(n)
    )


@lru_cache(maxsize=None)
def _perm_chunk_tables(n: int):
    """Per-permutation chunk lookup tables for fast mask relabelling (n <= 6)."""
    t = tables_for(n)
    k = t.num_cells
    chunk_spans = [(ofs, min(8, k - ofs)) for ofs in range(0, k, 8)]
    tables = []
    for perm in permutations(range(n)):
        per_chunk = []
        for ofs, width in chunk_spans:
            table = [0] * (1 << width)
            for value in range(1, 1 << width):
                low = value & -value
                j = low.bit_length() - 1
                u, v = t.cells[ofs + j]
                table[value] = table[value ^ low] | (
                    1 << t.bit_of[(perm[u], perm[v])]
                )
            per_chunk.append(tuple(table))
        tables.append(tuple(per_chunk))
    return chunk_spans, tuple(tables)


def canonical_mask(n: int, mask: int) -> int:
    """Minimum arc mask over all n! vertex relabellings."""
    if n == 1:
        return 0
    if n <= 6:
        chunk_spans, tables = _perm_chunk_tables(n)
        best = None
        for per_chunk in tables:
            acc = 0
            for (ofs, width), table in zip(chunk_spans, per_chunk):
                acc |= table[(mask >> ofs) & ((1 << width) - 1)]
            if best is None or acc < best:
                best = acc
        return best
    if n > 8:
        raise ValueError("canonical form limited to order <= 8")
    t = tables_for(n)
    arcs = [t.cells[k] for k in range(t.num_cells) if (mask >> k) & 1]
    best = None
    for perm in permutations(range(n)):
        acc = 0
        for u, v in arcs:
            acc |= 1 << t.bit_of[(perm[u], perm[v])]
        if best is None or acc < best:
            best = acc
    return best


def canonical_bytes(n: int, mask: int) -> bytes:
    """Canonical form as bytes: order byte then the minimal mask, big-endian."""
    width = (n * (n - 1) + 7) // 8
    return bytes([n]) + canonical_mask(n, mask).to_bytes(max(width, 1), "big")
