import random

import pytest

import naive
from graphdiv import (
    NotInClassError,
    TheoremViolationError,
    VertexSet,
    chromatic_number_exact,
    clique_number,
    color_via_perfect_division,
    color_via_two_division,
    complete_graph,
    cycle_graph,
    empty_graph,
    find_bull,
    find_c5,
    find_odd_hole,
    find_p5,
    induced_subgraph,
    is_perfect,
    path_graph,
    power_of_two_bound,
    quadratic_bound,
    two_divide_recursive,
)
from graphdiv.coloring import POWER_OF_TWO, QUADRATIC, audit_bounds, audit_to_csv, audit_to_json
from graphdiv.corpus import nonisomorphic_graphs


class TestTwoDivisionColoring:
    def test_c4(self):
        coloring, cert = color_via_two_division(cycle_graph(4))
        assert cert.colors_used == 2
        assert cert.bound_value == 2
        assert coloring.is_proper_for(cycle_graph(4))

    def test_bull(self, bull):
        coloring, cert = color_via_two_division(bull)
        assert cert.omega == 3 and cert.bound_value == 4
        assert 3 <= cert.colors_used <= 4
        assert cert.colors_used >= chromatic_number_exact(bull)[0]
        assert coloring.is_proper_for(bull)

    def test_single_vertex(self):
        coloring, cert = color_via_two_division(empty_graph(1))
        assert cert.colors_used == 1 and cert.bound_value == 1

    def test_empty_graph(self):
        coloring, cert = color_via_two_division(empty_graph(0))
        assert cert.colors_used == 0 and cert.bound_value == 0

    def test_rejects_c5(self, c5):
        with pytest.raises(NotInClassError):
            color_via_two_division(c5)

    def test_palette_disjoint_across_division_sides(self, bull):
        # the coloring recursion mirrors the division tree, so the colors
        # spent inside the two sides of any node must not meet
        coloring, _ = color_via_two_division(bull)
        tree = two_divide_recursive(bull)

        def colors_in(vs):
            return {coloring.assignment[v] for v in vs}

        stack = [tree]
        while stack:
            node = stack.pop()
            if node.is_leaf:
                continue
            assert not colors_in(node.a) & colors_in(node.b)
            stack.extend([node.a_child, node.b_child])

    def test_small_sweep_within_bound_and_above_chi(self):
        for n in range(1, 7):
            for g in nonisomorphic_graphs(n):
                if find_p5(g) is not None or find_c5(g) is not None:
                    continue
                coloring, cert = color_via_two_division(g)
                assert coloring.is_proper_for(g)
                chi = chromatic_number_exact(g)[0]
                assert chi <= cert.colors_used <= cert.bound_value
                assert cert.bound_value == power_of_two_bound(cert.omega)


class TestPerfectDivisionColoring:
    def test_c5_is_bound_tight(self, c5):
        coloring, cert = color_via_perfect_division(c5)
        assert cert.omega == 2
        assert cert.bound_value == 3
        assert cert.colors_used == 3
        assert coloring.is_proper_for(c5)

    def test_k4(self):
        coloring, cert = color_via_perfect_division(complete_graph(4))
        assert cert.colors_used == 4
        assert cert.bound_value == 10
        assert coloring.is_proper_for(complete_graph(4))

    def test_edgeless(self):
        coloring, cert = color_via_perfect_division(empty_graph(4))
        assert cert.colors_used == 1 and cert.bound_value == 1

    def test_exact_oracle_hits_omega_on_perfect_graphs(self):
        # the fact the P-side coloring relies on: perfect graphs need
        # exactly their clique number of colors
        for n in range(1, 7):
            for g in nonisomorphic_graphs(n):
                if not is_perfect(g):
                    continue
                assert chromatic_number_exact(g)[0] == clique_number(g).value

    def test_perfect_side_gets_exactly_its_omega(self):
        # within one division, the perfect part spends omega(P) colors
        from graphdiv import perfect_divide

        for g in nonisomorphic_graphs(5):
            if find_bull(g) is not None or g.n == 0:
                continue
            if find_odd_hole(g) is not None and find_p5(g) is not None:
                continue
            d = perfect_divide(g)
            sub, _ = induced_subgraph(g, d.p)
            if sub.n:
                assert chromatic_number_exact(sub)[0] == clique_number(sub).value

    def test_rejects_bull(self, bull):
        with pytest.raises(NotInClassError):
            color_via_perfect_division(bull)

    def test_class_hint_is_enforced(self, c5):
        _, cert = color_via_perfect_division(c5, class_hint="p5-free")
        assert cert.colors_used == 3
        with pytest.raises(NotInClassError):
            color_via_perfect_division(c5, class_hint="odd-hole-free")

    def test_small_sweep(self):
        for n in range(1, 7):
            for g in nonisomorphic_graphs(n):
                if find_bull(g) is not None:
                    continue
                if find_odd_hole(g) is not None and find_p5(g) is not None:
                    continue
                coloring, cert = color_via_perfect_division(g)
                assert coloring.is_proper_for(g)
                chi = chromatic_number_exact(g)[0]
                assert chi <= cert.colors_used <= cert.bound_value
                assert cert.bound_value == quadratic_bound(cert.omega)


class TestAuditBounds:
    def test_rows_for_named_graphs(self, c5):
        rows = audit_bounds([("c5", c5)], kind=QUADRATIC)
        row = rows[0]
        assert (row.omega, row.chi, row.used, row.bound, row.slack) == (2, 3, 3, 3, 0)

        rows = audit_bounds([("c4", cycle_graph(4))], kind=POWER_OF_TWO)
        row = rows[0]
        assert (row.omega, row.chi, row.used, row.bound, row.slack) == (2, 2, 2, 2, 0)

        rows = audit_bounds([("k3", complete_graph(3))], kind=POWER_OF_TWO)
        row = rows[0]
        assert (row.omega, row.chi, row.used, row.bound, row.slack) == (3, 3, 3, 4, 1)

    def test_out_of_class_rows_record_errors(self, c5):
        rows = audit_bounds([("c5", c5), ("p4", path_graph(4))], kind=POWER_OF_TWO)
        assert rows[0].error is not None
        assert rows[1].error is None

    def test_csv_shape(self, c5):
        rows = audit_bounds([("c5", c5), ("k3", complete_graph(3))], kind=QUADRATIC)
        text = audit_to_csv(rows)
        lines = text.strip().splitlines()
        assert lines[0] == "id,omega,chi,used,bound,slack"
        assert lines[1] == "c5,2,3,3,3,0"
        assert lines[2] == "k3,3,3,3,6,3"

    def test_json_shape(self, c5):
        rows = audit_bounds([("c5", c5)], kind=QUADRATIC)
        payload = audit_to_json(rows)
        assert payload == [{"id": "c5", "omega": 2, "chi": 3, "used": 3, "bound": 3, "slack": 0}]

    def test_slack_is_never_negative(self):
        corpus = []
        for n in range(1, 6):
            for g in nonisomorphic_graphs(n):
                if find_p5(g) is None and find_c5(g) is None:
                    corpus.append((f"g{len(corpus)}", g))
        for row in audit_bounds(corpus, kind=POWER_OF_TWO):
            assert row.error is None and row.slack >= 0

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            audit_bounds([], kind="cubic")
