"""Constructive clique-number divisions, their oracles, and verifiers.

The two constructions here never trust their own guarantees: every
division is re-checked with the exact oracles before it is returned, and a
failed check raises ``TheoremViolationError`` carrying the derivation log,
so the package doubles as a proof checker at the sizes it handles.
"""

from dataclasses import dataclass, field

from .core import (
    Graph,
    VertexSet,
    WeightFn,
    _bits,
    _mask_components,
    clique_number,
    induced_subgraph,
    max_weight_clique,
)
from .errors import (
    BudgetExceededError,
    DegenerateCliqueError,
    NotInClassError,
    TheoremViolationError,
)
from .recognition import (
    BULL_PATTERN,
    Embedding,
    embedding_is_valid,
    find_bull,
    find_c5,
    find_homogeneous_set,
    find_odd_hole,
    find_p5,
    is_homogeneous,
    is_perfect,
    P5_PATTERN,
)

ORACLE_BUDGET = 12


@dataclass(frozen=True)
class TwoDivision:
    """A partition (a, b) of the host's vertices, both sides with clique
    number strictly below the host's."""

    a: VertexSet
    b: VertexSet
    log: tuple = field(default=(), compare=False, repr=False)

    def to_json(self):
        return {"kind": "two", "a": list(self.a.members()), "b": list(self.b.members())}


@dataclass(frozen=True)
class PerfectDivision:
    """A partition (p, w_side): the p side induces a perfect graph, the w
    side has maximum clique weight strictly below the host's.

    ``weight`` is the certified weight function; None means unit weights
    (so the condition is the plain clique number one).
    """

    p: VertexSet
    w_side: VertexSet
    weight: WeightFn = None
    log: tuple = field(default=(), compare=False, repr=False)

    def to_json(self):
        return {
            "kind": "perfect",
            "p": list(self.p.members()),
            "w": list(self.w_side.members()),
            "weights": list(self.weight.weights) if self.weight is not None else None,
        }


@dataclass(frozen=True)
class QuotientStep:
    """Contraction of a homogeneous set ``x`` to its smallest member.

    The replacement vertex keeps the common neighbors of ``x`` and carries
    the maximum clique weight of the part it replaced; ``vertex_map`` sends
    quotient indices back to original vertices.
    """

    original: Graph
    original_weights: WeightFn
    x: VertexSet
    representative: int
    quotient: Graph
    quotient_weights: WeightFn
    vertex_map: tuple
    xhat: int


@dataclass(frozen=True)
class DivisionNode:
    """Node of a recursive two-division tree, in host coordinates.

    Leaves are the parts with clique number at most 1 (``a`` is None
    there); inner nodes carry the partition of their own vertex set.
    """

    vertices: VertexSet
    a: VertexSet = None
    b: VertexSet = None
    a_child: "DivisionNode" = None
    b_child: "DivisionNode" = None

    @property
    def is_leaf(self) -> bool:
        return self.a is None

    def depth(self) -> int:
        if self.is_leaf:
            return 0
        return 1 + max(self.a_child.depth(), self.b_child.depth())

    def leaves(self):
        if self.is_leaf:
            yield self
        else:
            yield from self.a_child.leaves()
            yield from self.b_child.leaves()


@dataclass(frozen=True)
class C5Classification:
    """How a vertex outside an induced 5-cycle attaches to it.

    ``kind`` is one of "center", "anticenter", "clone", "star",
    "violation"; clones and stars carry the 0-based cycle index, a
    violation carries the induced P5 or bull that the attachment forces.
    """

    kind: str
    index: int = None
    witness: Embedding = None


def _members(mask: int) -> list:
    return list(_bits(mask))


def _step(kind: str, **data) -> dict:
    return {"kind": kind, **data}


def _require_p5c5_free(g: Graph):
    p5 = find_p5(g)
    if p5 is not None:
        raise NotInClassError("graph contains an induced P5", [p5])
    c5 = find_c5(g)
    if c5 is not None:
        raise NotInClassError("graph contains an induced C5", [c5])


def verify_two_division(g: Graph, d: TwoDivision):
    """Re-check a claimed two-division with the exact clique oracle.

    Returns ``(ok, reason)``; ``reason`` names the violated clause.
    """
    n = g.n
    full = (1 << n) - 1
    if d.a.host_size != n or d.b.host_size != n:
        return False, "parts do not belong to this graph"
    if d.a.mask & d.b.mask:
        return False, "parts overlap"
    if (d.a.mask | d.b.mask) != full:
        return False, "parts do not cover the vertex set"
    w = clique_number(g).value
    wa = clique_number(g, d.a).value
    if wa >= w:
        return False, f"clique number of A is {wa}, not below {w}"
    wb = clique_number(g, d.b).value
    if wb >= w:
        return False, f"clique number of B is {wb}, not below {w}"
    return True, None


def verify_perfect_division(g: Graph, w: WeightFn, d: PerfectDivision, *, budget: int = 16):
    """Re-check a claimed perfect division: partition, perfection of the p
    side, and the strict weight drop on the w side.

    ``w`` may be None for unit weights. When the host's maximum clique
    weight is 0 (all-zero weights) the drop condition is vacuous, since no
    set can go below 0; the division only needs to be a partition then.
    """
    if w is None:
        w = WeightFn.unit(g.n)
    n = g.n
    full = (1 << n) - 1
    if d.p.host_size != n or d.w_side.host_size != n:
        return False, "parts do not belong to this graph"
    if d.p.mask & d.w_side.mask:
        return False, "parts overlap"
    if (d.p.mask | d.w_side.mask) != full:
        return False, "parts do not cover the vertex set"
    sub, _ = induced_subgraph(g, d.p)
    if not is_perfect(sub, budget=budget):
        return False, "P side is not perfect"
    top = max_weight_clique(g, w).value
    side = max_weight_clique(g, w, within=d.w_side).value
    if top > 0 and side >= top:
        return False, f"maximum clique weight of W is {side}, not below {top}"
    return True, None


def two_divide(g: Graph, *, check_class: bool = True) -> TwoDivision:
    """Split a (P5, C5)-free graph with an edge into two parts of strictly
    smaller clique number.

    Per connected component: take the smallest vertex v with neighborhood N
    and non-neighborhood M. If every component of M has some vertex of N
    complete to it, the component splits as (M + v, N). Otherwise, among
    the vertices of N with a neighbor in the first uncovered component,
    pick the one with the most neighbors in M (smallest id on ties); its
    neighborhood becomes the A side. Edgeless components go wholly into A.
    The union of the per-component sides is verified before being returned.
    """
    if check_class:
        _require_p5c5_free(g)
    if not g.has_any_edge():
        raise DegenerateCliqueError("clique number is at most 1; there is nothing to divide")
    n = g.n
    adj = g.adj
    full = (1 << n) - 1
    log = []
    comps = _mask_components(adj, full)
    log.append(_step("component-split", components=[_members(c) for c in comps]))
    a_mask = 0
    b_mask = 0
    for comp in comps:
        if all(adj[v] & comp == 0 for v in _bits(comp)):
            a_mask |= comp
            log.append(_step("base-partition", rule="stable-component", a=_members(comp), b=[]))
            continue
        ca, cb = _divide_connected(adj, comp, log)
        a_mask |= ca
        b_mask |= cb
    division = TwoDivision(VertexSet(n, a_mask), VertexSet(n, b_mask), log=tuple(log))
    ok, reason = verify_two_division(g, division)
    if not ok:
        raise TheoremViolationError(f"two-division failed verification: {reason}", log=log)
    return division


def _divide_connected(adj, comp: int, log: list):
    v = (comp & -comp).bit_length() - 1
    n_mask = adj[v] & comp
    m_mask = comp & ~n_mask & ~(1 << v)
    m_comps = _mask_components(adj, m_mask)
    log.append(
        _step(
            "vertex-choice",
            rule="smallest-in-component",
            v=v,
            neighborhood=_members(n_mask),
            non_neighborhood=_members(m_mask),
            m_components=[_members(c) for c in m_comps],
        )
    )
    uncovered = None
    for ci in m_comps:
        if not any(adj[u] & ci == ci for u in _bits(n_mask)):
            uncovered = ci
            break
    if uncovered is None:
        a = m_mask | (1 << v)
        b = n_mask
        log.append(_step("base-partition", rule="non-neighborhood-plus-v", a=_members(a), b=_members(b)))
        return a, b
    candidates = [u for u in _bits(n_mask) if adj[u] & uncovered]
    chosen = None
    best_count = -1
    scored = []
    for u in candidates:
        count = (adj[u] & m_mask).bit_count()
        scored.append({"vertex": u, "neighbors_in_m": count})
        if count > best_count:
            chosen = u
            best_count = count
    log.append(
        _step(
            "vertex-choice",
            rule="max-neighbors-in-m",
            uncovered_component=_members(uncovered),
            candidates=scored,
            chosen=chosen,
        )
    )
    a = adj[chosen] & comp
    b = comp & ~a
    log.append(_step("base-partition", rule="neighborhood-of-chosen", a=_members(a), b=_members(b)))
    return a, b


def _lift(sub_set: VertexSet, vmap, host_n: int) -> VertexSet:
    return VertexSet.of(host_n, (vmap[i] for i in sub_set))


def two_divide_recursive(g: Graph, *, check_class: bool = True) -> DivisionNode:
    """Divide repeatedly until every part has clique number at most 1.

    Class membership is checked once at the root; heredity makes every
    recursive call divisible, and each level's division is verified by
    ``two_divide`` itself.
    """
    if check_class:
        _require_p5c5_free(g)
    return _divide_tree(g, VertexSet.full(g.n))


def _divide_tree(g: Graph, vs: VertexSet) -> DivisionNode:
    sub, vmap = induced_subgraph(g, vs)
    if not sub.has_any_edge():
        return DivisionNode(vertices=vs)
    d = two_divide(sub, check_class=False)
    a = _lift(d.a, vmap, g.n)
    b = _lift(d.b, vmap, g.n)
    return DivisionNode(vs, a, b, _divide_tree(g, a), _divide_tree(g, b))


def is_two_divisible_oracle(g: Graph, *, budget: int = ORACLE_BUDGET):
    """Brute-force 2-divisibility over every induced subgraph.

    A subset with an edge must admit a bipartition where both sides have
    strictly smaller clique number; edgeless subgraphs are exempt (their
    clique number cannot drop below 1). Returns ``(True, None)`` or
    ``(False, counterexample_set)``.
    """
    n = g.n
    if n > budget:
        raise BudgetExceededError(f"2-divisibility oracle limited to {budget} vertices, asked for {n}")
    adj = g.adj
    size = 1 << n
    omega = [0] * size
    for mask in range(1, size):
        low = mask & -mask
        v = low.bit_length() - 1
        omega[mask] = max(omega[mask ^ low], 1 + omega[mask & adj[v]])
    for h in range(1, size):
        oh = omega[h]
        if oh < 2:
            continue
        low = h & -h
        found = False
        a = h
        while True:
            if a & low and omega[a] < oh and omega[h ^ a] < oh:
                found = True
                break
            if a == 0:
                break
            a = (a - 1) & h
        if not found:
            return False, VertexSet(n, h)
    return True, None


def quotient_by_homogeneous_set(g: Graph, w: WeightFn, x: VertexSet) -> QuotientStep:
    """Contract the homogeneous set ``x`` to its smallest member, whose new
    weight is the maximum clique weight inside ``x``."""
    if x.host_size != g.n:
        raise ValueError("vertex set does not belong to this graph")
    if len(w) != g.n:
        raise ValueError("weight function length does not match the graph")
    if not is_homogeneous(g, x):
        raise ValueError("x is not a homogeneous set of g")
    rep = x.members()[0]
    full = (1 << g.n) - 1
    keep = VertexSet(g.n, (full & ~x.mask) | (1 << rep))
    quotient, vmap = induced_subgraph(g, keep)
    xhat = vmap.index(rep)
    inner, imap = induced_subgraph(g, x)
    inner_w = w.restrict(imap)
    lifted = max_weight_clique(inner, inner_w).value
    q_weights = [w[old] for old in vmap]
    q_weights[xhat] = lifted
    return QuotientStep(
        original=g,
        original_weights=w,
        x=x,
        representative=rep,
        quotient=quotient,
        quotient_weights=WeightFn(tuple(q_weights)),
        vertex_map=vmap,
        xhat=xhat,
    )


def recombine(step: QuotientStep, quotient_division: PerfectDivision, inner_division: PerfectDivision) -> PerfectDivision:
    """Merge a division of the quotient with a division of the contracted
    part into a division of the original graph.

    If the replacement vertex landed on the W side, the whole contracted
    set joins W. If it landed on the P side, it is replaced by the perfect
    part of the inner division, and the inner W part joins W. The merged
    division is verified (including perfection of the combined P side)
    before being returned.
    """
    g = step.original
    w = step.original_weights
    n = g.n
    vmap = step.vertex_map
    if quotient_division.p.host_size != step.quotient.n or quotient_division.w_side.host_size != step.quotient.n:
        raise ValueError("quotient division does not match the quotient graph")
    if inner_division.p.host_size != len(step.x) or inner_division.w_side.host_size != len(step.x):
        raise ValueError("inner division does not match the contracted part")
    imap = step.x.members()
    if step.xhat in quotient_division.w_side:
        case = "xhat-in-w"
        p_members = [vmap[i] for i in quotient_division.p]
        w_members = [vmap[i] for i in quotient_division.w_side if i != step.xhat]
        w_members.extend(imap)
    else:
        case = "xhat-in-p"
        p_members = [vmap[i] for i in quotient_division.p if i != step.xhat]
        p_members.extend(imap[j] for j in inner_division.p)
        w_members = [vmap[i] for i in quotient_division.w_side]
        w_members.extend(imap[j] for j in inner_division.w_side)
    log = (
        _step(
            "recombination",
            case=case,
            x=list(imap),
            p=sorted(p_members),
            w=sorted(w_members),
        ),
    )
    division = PerfectDivision(VertexSet.of(n, p_members), VertexSet.of(n, w_members), weight=w, log=log)
    ok, reason = verify_perfect_division(g, w, division)
    if not ok:
        raise TheoremViolationError(f"recombination failed verification: {reason}", log=list(log))
    return division


def find_perfect_nonneighborhood_vertex(g: Graph, *, budget: int = 16):
    """Smallest vertex whose non-neighborhood induces a perfect graph, or None."""
    full = (1 << g.n) - 1
    for v in range(g.n):
        m_mask = full & ~g.adj[v] & ~(1 << v)
        sub, _ = induced_subgraph(g, VertexSet(g.n, m_mask))
        if is_perfect(sub, budget=budget):
            return v
    return None


def _require_perfect_divide_class(g: Graph, class_hint: str = None):
    bull = find_bull(g)
    if bull is not None:
        raise NotInClassError("graph contains an induced bull", [bull])
    if class_hint == "odd-hole-free":
        hole = find_odd_hole(g)
        if hole is not None:
            raise NotInClassError("graph contains an odd hole", [hole])
    elif class_hint == "p5-free":
        p5 = find_p5(g)
        if p5 is not None:
            raise NotInClassError("graph contains an induced P5", [p5])
    elif class_hint is None:
        hole = find_odd_hole(g)
        if hole is not None:
            p5 = find_p5(g)
            if p5 is not None:
                raise NotInClassError(
                    "graph contains both an odd hole and an induced P5", [hole, p5]
                )
    else:
        raise ValueError(f"unknown class hint: {class_hint}")


def perfect_divide(g: Graph, w: WeightFn = None, *, check_class: bool = True, class_hint: str = None) -> PerfectDivision:
    """Divide a bull-free graph that is odd-hole-free or P5-free into a
    perfect part and a part with strictly smaller maximum clique weight.

    The work happens inside the set U of positively weighted vertices
    (zero-weight vertices join the W side for free). If the induced graph
    on U has a homogeneous set, it is contracted, both the quotient and the
    contracted part are divided recursively, and the results recombined.
    Otherwise the graph is prime and the smallest vertex v with a perfect
    non-neighborhood yields the split (M(v) + v, N(v)). Every step and the
    final result are verified; ``w`` None means unit weights.
    """
    effective = WeightFn.unit(g.n) if w is None else w
    if len(effective) != g.n:
        raise ValueError("weight function length does not match the graph")
    if check_class:
        _require_perfect_divide_class(g, class_hint)
    n = g.n
    full = (1 << n) - 1
    log = []
    u_mask = 0
    for v in range(n):
        if effective[v] > 0:
            u_mask |= 1 << v
    log.append(_step("restrict", positive=_members(u_mask), zero=_members(full & ~u_mask)))
    if u_mask == 0:
        division = PerfectDivision(VertexSet(n, 0), VertexSet.full(n), weight=w, log=tuple(log))
        ok, reason = verify_perfect_division(g, effective, division)
        if not ok:
            raise TheoremViolationError(f"perfect division failed verification: {reason}", log=log)
        return division
    u_set = VertexSet(n, u_mask)
    gu, umap = induced_subgraph(g, u_set)
    wu = effective.restrict(umap)
    sub = _divide_all_positive(gu, wu, tuple(umap), log)
    p = _lift(sub.p, umap, n)
    w_side = VertexSet(n, _lift(sub.w_side, umap, n).mask | (full & ~u_mask))
    division = PerfectDivision(p, w_side, weight=w, log=tuple(log))
    ok, reason = verify_perfect_division(g, effective, division)
    if not ok:
        raise TheoremViolationError(f"perfect division failed verification: {reason}", log=log)
    return division


def _divide_all_positive(h: Graph, wh: WeightFn, labels, log: list) -> PerfectDivision:
    """Divide a graph all of whose weights are positive; labels map the
    current coordinates back to the original host for logging."""
    x = find_homogeneous_set(h)
    if x is None:
        v = find_perfect_nonneighborhood_vertex(h)
        if v is None:
            raise TheoremViolationError(
                "prime graph has no vertex with perfect non-neighborhood",
                log=log,
                context={"vertices": list(labels)},
            )
        full = (1 << h.n) - 1
        p_mask = full & ~h.adj[v]
        w_mask = h.adj[v]
        log.append(
            _step(
                "base-partition",
                rule="perfect-non-neighborhood",
                chosen=labels[v],
                rejected=[labels[u] for u in range(v)],
                p=sorted(labels[u] for u in _bits(p_mask)),
                w=sorted(labels[u] for u in _bits(w_mask)),
            )
        )
        return PerfectDivision(VertexSet(h.n, p_mask), VertexSet(h.n, w_mask), weight=wh)
    step = quotient_by_homogeneous_set(h, wh, x)
    log.append(
        _step(
            "quotient",
            x=sorted(labels[i] for i in x),
            representative=labels[step.representative],
            lifted_weight=step.quotient_weights[step.xhat],
            quotient=[labels[i] for i in step.vertex_map],
        )
    )
    q_labels = tuple(labels[i] for i in step.vertex_map)
    q_division = _divide_all_positive(step.quotient, step.quotient_weights, q_labels, log)
    inner, imap = induced_subgraph(h, x)
    i_labels = tuple(labels[i] for i in imap)
    i_division = _divide_all_positive(inner, wh.restrict(imap), i_labels, log)
    combined = recombine(step, q_division, i_division)
    detail = dict(combined.log[0])
    detail["x"] = sorted(labels[i] for i in x)
    detail["p"] = sorted(labels[i] for i in combined.p)
    detail["w"] = sorted(labels[i] for i in combined.w_side)
    log.append(detail)
    return combined


def classify_against_c5(g: Graph, c, v: int) -> C5Classification:
    """Classify how ``v`` attaches to the induced 5-cycle ``c``.

    ``c`` is the cycle in order (an Embedding from ``find_c5`` or any
    sequence of five vertices with consecutive adjacency). Outside
    vertices of a (P5, bull)-free graph always land in one of the four
    named categories; any other attachment forces an induced P5 or bull,
    which is returned as the violation witness. Indices are 0-based
    positions in ``c``.
    """
    cs = tuple(c.vertices) if isinstance(c, Embedding) else tuple(c)
    if len(cs) != 5 or len(set(cs)) != 5:
        raise ValueError("c must list five distinct vertices")
    for u in cs:
        if not 0 <= u < g.n:
            raise ValueError(f"vertex {u} out of range")
    if not 0 <= v < g.n or v in cs:
        raise ValueError("v must be a vertex outside c")
    for i in range(5):
        if not g.has_edge(cs[i], cs[(i + 1) % 5]):
            raise ValueError("c is not a 5-cycle in the given order")
        if g.has_edge(cs[i], cs[(i + 2) % 5]):
            raise ValueError("c is not induced: it has a chord")

    nbr = [i for i in range(5) if g.has_edge(v, cs[i])]
    k = len(nbr)
    if k == 0:
        return C5Classification("anticenter")
    if k == 5:
        return C5Classification("center")
    if k == 4:
        missing = next(i for i in range(5) if i not in nbr)
        return C5Classification("star", index=missing)
    if k == 1:
        i = nbr[0]
        path = (v, cs[i], cs[(i + 1) % 5], cs[(i + 2) % 5], cs[(i + 3) % 5])
        witness = Embedding("P5", path)
        if not embedding_is_valid(g, P5_PATTERN, witness):
            raise AssertionError("constructed P5 witness is invalid")
        return C5Classification("violation", witness=witness)
    if k == 2:
        i, j = nbr
        gap = (j - i) % 5
        if gap in (2, 3):
            mid = (i + 1) % 5 if gap == 2 else (j + 1) % 5
            return C5Classification("clone", index=mid)
        first = i if gap == 1 else j
        return C5Classification("violation", witness=_bull_at(g, cs, v, first))
    # k == 3: classify by the two non-neighbors
    non = [i for i in range(5) if i not in nbr]
    i, j = non
    gap = (j - i) % 5
    if gap in (1, 4):
        first = i if gap == 1 else j
        return C5Classification("clone", index=(first + 3) % 5)
    start = i if gap == 2 else j
    triangle = (cs[(start + 3) % 5], cs[(start + 4) % 5], v, cs[(start + 2) % 5], cs[start])
    witness = Embedding("bull", triangle)
    if not embedding_is_valid(g, BULL_PATTERN, witness):
        raise AssertionError("constructed bull witness is invalid")
    return C5Classification("violation", witness=witness)


def _bull_at(g: Graph, cs, v: int, first: int) -> Embedding:
    """Bull forced by v being adjacent to exactly the consecutive pair
    cs[first], cs[first+1]: that pair plus v is the triangle, the cycle
    neighbors on each side are the pendants."""
    t0 = cs[first]
    t1 = cs[(first + 1) % 5]
    q0 = cs[(first - 1) % 5]
    q1 = cs[(first + 2) % 5]
    witness = Embedding("bull", (t0, t1, v, q0, q1))
    if not embedding_is_valid(g, BULL_PATTERN, witness):
        raise AssertionError("constructed bull witness is invalid")
    return witness
