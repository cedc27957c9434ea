"""Immutable bitset-backed graphs, vertex-set algebra, and exact oracles.

Vertices are dense integers ``0..n-1``. Adjacency rows and vertex sets are
plain Python integers used as bitmasks, which keeps the set algebra on
machine words and makes the exhaustive oracles fast enough for the graph
sizes they are meant for (clique number up to 32 vertices, chromatic
number up to 16 by default; both limits are arguments).
"""

from dataclasses import dataclass

from .errors import BudgetExceededError

CLIQUE_BUDGET = 32
CHROMATIC_BUDGET = 16


def _bits(mask: int):
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class VertexSet:
    """A subset of the vertices ``0..host_size-1`` of a fixed host graph."""

    host_size: int
    mask: int = 0

    def __post_init__(self):
        if self.host_size < 0:
            raise ValueError("host_size must be non-negative")
        if not 0 <= self.mask < (1 << self.host_size):
            raise ValueError("vertex set member out of range for its host")

    @classmethod
    def of(cls, host_size: int, members) -> "VertexSet":
        mask = 0
        for v in members:
            if not 0 <= v < host_size:
                raise ValueError(f"vertex {v} out of range for host of size {host_size}")
            mask |= 1 << v
        return cls(host_size, mask)

    @classmethod
    def full(cls, host_size: int) -> "VertexSet":
        return cls(host_size, (1 << host_size) - 1)

    def members(self) -> tuple:
        return tuple(_bits(self.mask))

    def __iter__(self):
        return _bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __contains__(self, v) -> bool:
        return 0 <= v < self.host_size and bool(self.mask >> v & 1)

    def _check_host(self, other: "VertexSet"):
        if self.host_size != other.host_size:
            raise ValueError("vertex sets belong to different hosts")

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._check_host(other)
        return VertexSet(self.host_size, self.mask | other.mask)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._check_host(other)
        return VertexSet(self.host_size, self.mask & other.mask)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        self._check_host(other)
        return VertexSet(self.host_size, self.mask & ~other.mask)

    def complement(self) -> "VertexSet":
        return VertexSet(self.host_size, ((1 << self.host_size) - 1) ^ self.mask)

    def add(self, v: int) -> "VertexSet":
        if not 0 <= v < self.host_size:
            raise ValueError(f"vertex {v} out of range")
        return VertexSet(self.host_size, self.mask | (1 << v))

    def remove(self, v: int) -> "VertexSet":
        return VertexSet(self.host_size, self.mask & ~(1 << v))

    def isdisjoint(self, other: "VertexSet") -> bool:
        self._check_host(other)
        return not self.mask & other.mask

    def issubset(self, other: "VertexSet") -> bool:
        self._check_host(other)
        return self.mask & ~other.mask == 0

    def __repr__(self):
        return f"VertexSet({set(self.members()) if self.mask else set()} of {self.host_size})"


@dataclass(frozen=True)
class Graph:
    """A finite simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the neighbor bitmask of ``v``. The relation is validated
    to be symmetric and irreflexive at construction; instances are
    immutable, so every operation on them is a pure function.
    """

    n: int
    adj: tuple

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(self.adj) != self.n:
            raise ValueError("adjacency must have one row per vertex")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if not 0 <= row <= full:
                raise ValueError(f"adjacency row of {v} mentions vertices out of range")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for u in range(self.n):
            for v in _bits(self.adj[u]):
                if not self.adj[v] >> u & 1:
                    raise ValueError(f"adjacency not symmetric on pair ({u}, {v})")

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list:
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u]) if v > u]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_any_edge(self) -> bool:
        return any(self.adj)

    def vertices(self) -> VertexSet:
        return VertexSet.full(self.n)


@dataclass(frozen=True)
class WeightFn:
    """Non-negative integer weights, one per vertex of a host graph."""

    weights: tuple

    def __post_init__(self):
        for i, w in enumerate(self.weights):
            if not isinstance(w, int) or w < 0:
                raise ValueError(f"weight of vertex {i} must be a non-negative integer")

    @classmethod
    def of(cls, weights) -> "WeightFn":
        return cls(tuple(int(w) for w in weights))

    @classmethod
    def unit(cls, n: int) -> "WeightFn":
        return cls((1,) * n)

    def __len__(self) -> int:
        return len(self.weights)

    def __getitem__(self, v: int) -> int:
        return self.weights[v]

    def restrict(self, members) -> "WeightFn":
        """Weights of ``members`` (in the given order), as a new function."""
        return WeightFn(tuple(self.weights[v] for v in members))

    def total(self, mask: int) -> int:
        return sum(self.weights[v] for v in _bits(mask))


@dataclass(frozen=True)
class CliqueResult:
    """An exact clique optimum together with a witness attaining it."""

    value: int
    witness: VertexSet


def _check_vertex(g: Graph, v: int):
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range for graph on {g.n} vertices")


def _check_set(g: Graph, s: VertexSet):
    if s.host_size != g.n:
        raise ValueError("vertex set does not belong to this graph")


def complement(g: Graph) -> Graph:
    """The graph on the same vertices whose edges are exactly the non-edges."""
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~g.adj[v] & ~(1 << v) for v in range(g.n)))


def induced_subgraph(g: Graph, s: VertexSet):
    """Induced subgraph on ``s``, plus the relabeling map.

    Returns ``(h, vmap)`` where ``h`` is the subgraph on ``len(s)``
    vertices and ``vmap[i]`` is the host vertex that became ``i``
    (members are kept in ascending order).
    """
    _check_set(g, s)
    vmap = s.members()
    index = {old: new for new, old in enumerate(vmap)}
    rows = []
    for old in vmap:
        row = 0
        for u in _bits(g.adj[old] & s.mask):
            row |= 1 << index[u]
        rows.append(row)
    return Graph(len(vmap), tuple(rows)), vmap


def neighbors(g: Graph, v: int) -> VertexSet:
    """The open neighborhood of ``v``."""
    _check_vertex(g, v)
    return VertexSet(g.n, g.adj[v])


def non_neighborhood(g: Graph, v: int) -> VertexSet:
    """All vertices distinct from ``v`` and not adjacent to it.

    Together with ``{v}`` and the neighborhood this partitions the
    vertex set.
    """
    _check_vertex(g, v)
    full = (1 << g.n) - 1
    return VertexSet(g.n, full & ~g.adj[v] & ~(1 << v))


def _mask_components(adj, mask: int) -> list:
    """Connected components of the subgraph induced on ``mask`` (as masks).

    Ordered by smallest member, which keeps every caller deterministic.
    """
    out = []
    rest = mask
    while rest:
        comp = rest & -rest
        frontier = comp
        while frontier:
            grown = 0
            for v in _bits(frontier):
                grown |= adj[v]
            grown &= mask & ~comp
            comp |= grown
            frontier = grown
        out.append(comp)
        rest &= ~comp
    return out


def components(g: Graph, x: VertexSet) -> list:
    """Maximal connected subsets of ``x``, ordered by smallest member."""
    _check_set(g, x)
    return [VertexSet(g.n, m) for m in _mask_components(g.adj, x.mask)]


def anticomponents(g: Graph, x: VertexSet) -> list:
    """Maximal anticonnected subsets of ``x`` (components in the complement)."""
    _check_set(g, x)
    full = (1 << g.n) - 1
    cadj = tuple(full & ~g.adj[v] & ~(1 << v) for v in range(g.n))
    return [VertexSet(g.n, m) for m in _mask_components(cadj, x.mask)]


def _check_disjoint(x: VertexSet, y: VertexSet):
    x._check_host(y)
    if x.mask & y.mask:
        raise ValueError("sets overlap")


def is_complete_to(g: Graph, x: VertexSet, y: VertexSet) -> bool:
    """True when every vertex of ``x`` is adjacent to every vertex of ``y``."""
    _check_set(g, x)
    _check_disjoint(x, y)
    return all(g.adj[u] & y.mask == y.mask for u in _bits(x.mask))


def is_anticomplete_to(g: Graph, x: VertexSet, y: VertexSet) -> bool:
    """True when there are no edges between ``x`` and ``y``."""
    _check_set(g, x)
    _check_disjoint(x, y)
    return all(g.adj[u] & y.mask == 0 for u in _bits(x.mask))


def seagull(g: Graph, c: VertexSet, v: int, *, in_complement: bool = False):
    """Find ``a, b`` in the connected set ``c`` such that v-a-b is a path.

    Requires ``v`` outside ``c`` and mixed on it (neither complete nor
    anticomplete). With ``in_complement`` the same statement is resolved in
    the complement graph: the returned pair satisfies v~a, a~b, v!~b there.
    Precondition violations raise ValueError with a distinct reason
    ("not connected", "complete", "anticomplete").
    """
    _check_set(g, c)
    _check_vertex(g, v)
    if v in c:
        raise ValueError("seagull: v must lie outside c")
    if not c.mask:
        raise ValueError("seagull: c is empty, hence not connected")
    where = "complement" if in_complement else "graph"
    if in_complement:
        full = (1 << g.n) - 1
        adj = tuple(full & ~g.adj[u] & ~(1 << u) for u in range(g.n))
    else:
        adj = g.adj
    if len(_mask_components(adj, c.mask)) > 1:
        raise ValueError(f"seagull: c is not connected in the {where}")
    inside = adj[v] & c.mask
    if inside == c.mask:
        raise ValueError(f"seagull: v is complete to c in the {where}")
    if inside == 0:
        raise ValueError(f"seagull: v is anticomplete to c in the {where}")
    outside = c.mask ^ inside
    for a in _bits(inside):
        reach = adj[a] & outside
        if reach:
            b = (reach & -reach).bit_length() - 1
            return a, b
    raise AssertionError("connected set must join the neighbor and non-neighbor sides")


def _max_clique_mask(adj, cand: int):
    """Exact maximum clique within ``cand``: branch and bound with a greedy
    coloring bound. Returns ``(size, clique_mask)``."""
    best_size = 0
    best_mask = 0

    def expand(cur_mask, cur_size, cand):
        nonlocal best_size, best_mask
        if not cand:
            if cur_size > best_size:
                best_size = cur_size
                best_mask = cur_mask
            return
        order = []
        bound = []
        rest = cand
        color = 0
        while rest:
            color += 1
            avail = rest
            while avail:
                v = (avail & -avail).bit_length() - 1
                avail &= ~(adj[v] | (1 << v))
                rest ^= 1 << v
                order.append(v)
                bound.append(color)
        p = cand
        for i in range(len(order) - 1, -1, -1):
            if cur_size + bound[i] <= best_size:
                return
            v = order[i]
            bit = 1 << v
            p ^= bit
            expand(cur_mask | bit, cur_size + 1, p & adj[v])

    expand(0, 0, cand)
    return best_size, best_mask


def clique_number(g: Graph, within: VertexSet = None, *, budget: int = CLIQUE_BUDGET) -> CliqueResult:
    """Exact clique number (optionally restricted to ``within``), with witness."""
    mask = (1 << g.n) - 1
    if within is not None:
        _check_set(g, within)
        mask = within.mask
    count = mask.bit_count()
    if count > budget:
        raise BudgetExceededError(f"clique oracle limited to {budget} vertices, asked for {count}")
    size, wmask = _max_clique_mask(g.adj, mask)
    return CliqueResult(size, VertexSet(g.n, wmask))


def _max_weight_clique_mask(adj, weights, cand: int):
    best_w = 0
    best_mask = 0

    def expand(cur_mask, cur_w, cand, cand_total):
        nonlocal best_w, best_mask
        if cur_w > best_w:
            best_w = cur_w
            best_mask = cur_mask
        p = cand
        remaining = cand_total
        for v in _bits(cand):
            if cur_w + remaining <= best_w:
                return
            bit = 1 << v
            p ^= bit
            sub = p & adj[v]
            sub_total = sum(weights[u] for u in _bits(sub))
            expand(cur_mask | bit, cur_w + weights[v], sub, sub_total)
            remaining -= weights[v]

    expand(0, 0, cand, sum(weights[v] for v in _bits(cand)))
    return best_w, best_mask


def max_weight_clique(g: Graph, w: WeightFn, within: VertexSet = None, *, budget: int = CLIQUE_BUDGET) -> CliqueResult:
    """Exact maximum total weight over cliques (the empty clique counts as 0)."""
    if len(w) != g.n:
        raise ValueError("weight function length does not match the graph")
    mask = (1 << g.n) - 1
    if within is not None:
        _check_set(g, within)
        mask = within.mask
    count = mask.bit_count()
    if count > budget:
        raise BudgetExceededError(f"clique oracle limited to {budget} vertices, asked for {count}")
    value, wmask = _max_weight_clique_mask(g.adj, w.weights, mask)
    return CliqueResult(value, VertexSet(g.n, wmask))


def chromatic_number_exact(g: Graph, *, budget: int = CHROMATIC_BUDGET):
    """Exact chromatic number with a proper coloring witness.

    Iterative deepening over the palette size, starting at the clique
    number; backtracking assigns the vertices in degree order and never
    opens more than one fresh color per step.
    """
    n = g.n
    if n > budget:
        raise BudgetExceededError(f"coloring oracle limited to {budget} vertices, asked for {n}")
    if n == 0:
        return 0, ()
    if not g.has_any_edge():
        return 1, (0,) * n
    adj = g.adj
    lower = clique_number(g).value
    order = sorted(range(n), key=lambda v: (-adj[v].bit_count(), v))

    for k in range(lower, n + 1):
        colors = [-1] * n

        def backtrack(i, used):
            if i == n:
                return True
            v = order[i]
            forbidden = 0
            for u in _bits(adj[v]):
                cu = colors[u]
                if cu >= 0:
                    forbidden |= 1 << cu
            limit = min(k, used + 1)
            for c in range(limit):
                if forbidden >> c & 1:
                    continue
                colors[v] = c
                if backtrack(i + 1, used if c < used else c + 1):
                    return True
                colors[v] = -1
            return False

        if backtrack(0, 0):
            return k, tuple(colors)
    raise AssertionError("n colors always suffice")


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
