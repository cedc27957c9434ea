"""Graph corpora: canonical forms, non-isomorphic enumeration, random
sampling, and twin substitution.

The canonical form is the minimum adjacency bitstring over relabelings,
searched by backtracking. Iterated degree refinement pins most vertices
down before the search starts, and interchangeable twins are tried only
once per node, which keeps even the very symmetric graphs cheap at the
sizes exhaustive enumeration is allowed (n <= 10).
"""

import random

from .core import Graph, _bits, empty_graph

EXHAUSTIVE_LIMIT = 10


def _refined_colors(g: Graph):
    """Stable vertex colors under iterated neighbor-multiset refinement."""
    n = g.n
    degrees = [g.adj[v].bit_count() for v in range(n)]
    rank = {d: i for i, d in enumerate(sorted(set(degrees)))}
    colors = [rank[d] for d in degrees]
    while True:
        signatures = [
            (colors[v], tuple(sorted(colors[u] for u in _bits(g.adj[v])))) for v in range(n)
        ]
        order = {s: i for i, s in enumerate(sorted(set(signatures)))}
        refined = [order[s] for s in signatures]
        if refined == colors:
            return tuple(colors)
        colors = refined


def canonical_key(g: Graph):
    """Isomorphism-invariant key: ``(n, chunks)`` where ``chunks[p]`` is the
    adjacency of the p-th placed vertex to the earlier ones, minimized over
    all placements that respect the refined color classes."""
    n = g.n
    if n <= 1:
        return (n, (0,) * n)
    adj = g.adj
    colors = _refined_colors(g)
    position_colors = sorted(colors)
    by_color = {}
    for v in range(n):
        by_color.setdefault(colors[v], []).append(v)

    best = None
    placed = []
    cur = []
    used = 0

    def is_twin(u, v):
        return adj[u] == adj[v] or (adj[u] ^ (1 << v)) == (adj[v] ^ (1 << u))

    def rec(p):
        nonlocal best, used
        if p == n:
            if best is None or cur < best:
                best = cur.copy()
            return
        tried = []
        for v in by_color[position_colors[p]]:
            if used >> v & 1:
                continue
            if any(is_twin(v, u) for u in tried):
                continue
            tried.append(v)
            row = adj[v]
            chunk = 0
            for i, u in enumerate(placed):
                if row >> u & 1:
                    chunk |= 1 << i
            cur.append(chunk)
            if best is None or cur <= best[: len(cur)]:
                placed.append(v)
                used |= 1 << v
                rec(p + 1)
                placed.pop()
                used ^= 1 << v
            cur.pop()

    rec(0)
    return (n, tuple(best))


def canonical_graph(key) -> Graph:
    """Rebuild the labeled graph a canonical key describes."""
    n, chunks = key
    adj = [0] * n
    for p in range(n):
        for i in _bits(chunks[p]):
            adj[p] |= 1 << i
            adj[i] |= 1 << p
    return Graph(n, tuple(adj))


_NONISO_CACHE = {}


def nonisomorphic_graphs(n: int):
    """All graphs on exactly ``n`` vertices, one per isomorphism class, in
    canonical labeling and sorted by canonical key.

    Built by extending the classes on n-1 vertices with every possible
    neighborhood for a new vertex and deduplicating canonically; cached per
    size. Limited to n <= 10.
    """
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    if n > EXHAUSTIVE_LIMIT:
        raise ValueError(f"exhaustive enumeration limited to n <= {EXHAUSTIVE_LIMIT}")
    if n in _NONISO_CACHE:
        return _NONISO_CACHE[n]
    if n <= 1:
        result = (empty_graph(n),)
    else:
        keys = set()
        bit_new = 1 << (n - 1)
        for base in nonisomorphic_graphs(n - 1):
            for mask in range(1 << (n - 1)):
                rows = list(base.adj)
                for u in _bits(mask):
                    rows[u] |= bit_new
                rows.append(mask)
                keys.add(canonical_key(Graph(n, tuple(rows))))
        result = tuple(canonical_graph(k) for k in sorted(keys))
    _NONISO_CACHE[n] = result
    return result


def random_graph(n: int, edge_prob: float, rng: random.Random) -> Graph:
    """One draw from the n-vertex random graph with independent edges."""
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    if not 0.0 <= edge_prob <= 1.0:
        raise ValueError("edge probability must lie in [0, 1]")
    adj = [0] * n
    for u in range(n - 1):
        for v in range(u + 1, n):
            if rng.random() < edge_prob:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def twin_substitute(g: Graph, v: int, *, adjacent: bool) -> Graph:
    """Add a twin of ``v`` as a new last vertex.

    The twin copies v's neighborhood; with ``adjacent`` it is also joined
    to v itself. Either way ``{v, twin}`` is a homogeneous set of the
    result.
    """
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    n = g.n
    rows = list(g.adj)
    twin_row = g.adj[v]
    if adjacent:
        twin_row |= 1 << v
        rows[v] |= 1 << n
    for u in _bits(g.adj[v]):
        rows[u] |= 1 << n
    rows.append(twin_row)
    return Graph(n + 1, tuple(rows))
