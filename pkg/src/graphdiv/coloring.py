"""Recursive division colorings with clique-bound certificates.

Both colorings spend a fresh palette on each side of every division, which
is exactly the additive accounting behind their bounds: the two-division
route stays within 2^(omega-1) colors, the perfect-division route within
omega*(omega+1)/2. Certificates record both numbers so audits are cheap.
"""

from dataclasses import dataclass

from .core import Graph, VertexSet, _bits, chromatic_number_exact, clique_number, induced_subgraph
from .errors import BudgetExceededError, DegenerateCliqueError, NotInClassError, TheoremViolationError
from .divisibility import (
    _lift,
    _require_p5c5_free,
    _require_perfect_divide_class,
    perfect_divide,
    two_divide,
)

POWER_OF_TWO = "power-of-two"
QUADRATIC = "quadratic"


@dataclass(frozen=True)
class Coloring:
    """A proper coloring: ``assignment[v]`` is the color of vertex v and
    ``palette_size`` the number of distinct colors in use."""

    assignment: tuple
    palette_size: int

    def is_proper_for(self, g: Graph) -> bool:
        if len(self.assignment) != g.n:
            return False
        for u in range(g.n):
            for v in _bits(g.adj[u]):
                if v > u and self.assignment[u] == self.assignment[v]:
                    return False
        return len(set(self.assignment)) == self.palette_size if g.n else self.palette_size == 0


@dataclass(frozen=True)
class BoundCertificate:
    """Clique number, the bound it implies, and the colors actually spent.

    ``bound_value`` is 2^(omega-1) for the power-of-two kind and
    omega*(omega+1)/2 for the quadratic kind; an empty graph gets bound 0
    under either kind since it needs no colors at all.
    """

    omega: int
    bound_kind: str
    bound_value: int
    colors_used: int

    def to_json(self):
        return {
            "omega": self.omega,
            "kind": self.bound_kind,
            "bound": self.bound_value,
            "used": self.colors_used,
        }


def power_of_two_bound(omega: int) -> int:
    return 0 if omega <= 0 else 2 ** (omega - 1)


def quadratic_bound(omega: int) -> int:
    return (omega + 1) * omega // 2


def _certified(g: Graph, assignment, used: int, kind: str) -> tuple:
    coloring = Coloring(tuple(assignment), used)
    omega = clique_number(g).value
    bound = power_of_two_bound(omega) if kind == POWER_OF_TWO else quadratic_bound(omega)
    certificate = BoundCertificate(omega, kind, bound, used)
    if not coloring.is_proper_for(g):
        raise TheoremViolationError("division coloring is not proper")
    if used > bound:
        raise TheoremViolationError(f"division coloring spent {used} colors, above the bound {bound}")
    return coloring, certificate


def color_via_two_division(g: Graph):
    """Color a (P5, C5)-free graph by recursive two-division.

    Each division node colors its A side and B side with disjoint
    palettes; parts with clique number at most 1 take a single color.
    Returns ``(Coloring, BoundCertificate)`` with the power-of-two bound.
    """
    _require_p5c5_free(g)
    n = g.n
    assignment = [0] * n

    def rec(vs: VertexSet, base: int) -> int:
        sub, vmap = induced_subgraph(g, vs)
        if sub.n == 0:
            return 0
        if not sub.has_any_edge():
            for old in vmap:
                assignment[old] = base
            return 1
        d = two_divide(sub, check_class=False)
        used_a = rec(_lift(d.a, vmap, n), base)
        used_b = rec(_lift(d.b, vmap, n), base + used_a)
        return used_a + used_b

    used = rec(VertexSet.full(n), 0)
    return _certified(g, assignment, used, POWER_OF_TWO)


def color_via_perfect_division(g: Graph, class_hint: str = None):
    """Color a bull-free graph that is odd-hole-free or P5-free by
    recursive perfect division.

    The perfect side of every division is colored exactly (its chromatic
    number equals its clique number), the other side recurses on a fresh
    palette. ``class_hint`` ("odd-hole-free" or "p5-free") narrows the
    membership check to one disjunct. Returns ``(Coloring,
    BoundCertificate)`` with the quadratic bound.
    """
    _require_perfect_divide_class(g, class_hint)
    n = g.n
    assignment = [0] * n

    def rec(vs: VertexSet, base: int) -> int:
        sub, vmap = induced_subgraph(g, vs)
        if sub.n == 0:
            return 0
        d = perfect_divide(sub, check_class=False)
        p_sub, p_map = induced_subgraph(sub, d.p)
        used_p, p_colors = chromatic_number_exact(p_sub)
        for i, color in enumerate(p_colors):
            assignment[vmap[p_map[i]]] = base + color
        used_w = rec(_lift(d.w_side, vmap, n), base + used_p)
        return used_p + used_w

    used = rec(VertexSet.full(n), 0)
    return _certified(g, assignment, used, QUADRATIC)


@dataclass(frozen=True)
class AuditRow:
    """One corpus graph in a bound audit; ``error`` marks rows whose
    oracles ran out of budget (or whose graph fell outside the class)."""

    id: str
    omega: int = None
    chi: int = None
    used: int = None
    bound: int = None
    slack: int = None
    error: str = None


AUDIT_HEADER = "id,omega,chi,used,bound,slack"


def audit_bounds(corpus, kind: str = POWER_OF_TWO) -> list:
    """Run the division coloring of the given kind over ``corpus`` (pairs
    of id and graph) and tabulate clique number, exact chromatic number,
    colors spent, bound, and slack. Per-row failures are recorded, not
    raised."""
    if kind not in (POWER_OF_TWO, QUADRATIC):
        raise ValueError(f"unknown bound kind: {kind}")
    rows = []
    for graph_id, g in corpus:
        try:
            omega = clique_number(g).value
            chi, _ = chromatic_number_exact(g)
            if kind == POWER_OF_TWO:
                _, certificate = color_via_two_division(g)
            else:
                _, certificate = color_via_perfect_division(g)
            rows.append(
                AuditRow(
                    id=graph_id,
                    omega=omega,
                    chi=chi,
                    used=certificate.colors_used,
                    bound=certificate.bound_value,
                    slack=certificate.bound_value - certificate.colors_used,
                )
            )
        except (BudgetExceededError, NotInClassError, DegenerateCliqueError) as exc:
            rows.append(AuditRow(id=graph_id, error=f"{type(exc).__name__}: {exc}"))
    return rows


def audit_to_csv(rows) -> str:
    lines = [AUDIT_HEADER]
    for row in rows:
        if row.error is not None:
            lines.append(f"{row.id},,,,,")
        else:
            lines.append(f"{row.id},{row.omega},{row.chi},{row.used},{row.bound},{row.slack}")
    return "\n".join(lines) + "\n"


def audit_to_json(rows) -> list:
    out = []
    for row in rows:
        entry = {"id": row.id}
        if row.error is not None:
            entry["error"] = row.error
        else:
            entry.update(
                omega=row.omega, chi=row.chi, used=row.used, bound=row.bound, slack=row.slack
            )
        out.append(entry)
    return out
