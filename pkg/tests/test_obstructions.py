import pytest

from dmagic.graphs import (
    UndirectedGraph,
    complete,
    complete_multipartite,
    cycle,
    empty_graph,
    path,
    prism,
)
from dmagic.obstructions import (
    NonexistenceCertificate,
    parity_feasibility,
    parity_solutions,
    prism_nonexistence,
    theorem1_check,
)
from oracles import brute_parity_feasible, brute_parity_feasible_numpy


def test_theorem1_applies_to_odd_regular_orders_2_mod_4():
    cert = theorem1_check(prism(3))
    assert cert is not None
    assert cert.reason == "theorem1"
    assert cert.details == {"r": 3, "order": 6}
    cert = theorem1_check(complete(6))
    assert cert is not None and cert.details["r"] == 5
    assert theorem1_check(complete_multipartite([3, 3])) is not None


def test_theorem1_does_not_apply_elsewhere():
    assert theorem1_check(prism(4)) is None          # order 0 mod 4
    assert theorem1_check(cycle(6)) is None          # even degree
    assert theorem1_check(complete(7)) is None       # odd order
    assert theorem1_check(path(6)) is None           # not regular


def test_theorem1_on_k2():
    cert = theorem1_check(complete(2))
    assert cert is not None
    assert cert.details == {"r": 1, "order": 2}


def test_parity_prism_4_infeasible_both_constants():
    space = parity_feasibility(prism(4))
    assert space.feasible == (False, False)
    assert space.certifies_nonexistence
    assert not space.inconclusive


def test_parity_four_cycle_feasible():
    space = parity_feasibility(cycle(4))
    assert space.feasible[0] is True
    assert not space.certifies_nonexistence


def test_parity_even_complete_infeasible():
    for n in (2, 4, 6, 8, 10, 12):
        space = parity_feasibility(complete(n))
        assert space.certifies_nonexistence, n


def test_parity_odd_order_is_out_of_scope():
    assert parity_feasibility(complete(5)) is None
    assert parity_solutions(complete(5)) is None


def test_parity_solutions_listing():
    sols = parity_solutions(cycle(4))
    assert {c: len(v) for c, v in sols.items()} == {0: 2, 1: 4}
    for c, vectors in sols.items():
        for p in vectors:
            assert bin(p).count("1") == 2
    sols = parity_solutions(prism(4))
    assert sols == {0: [], 1: []}


def test_parity_solutions_caps_return_none():
    # 26 isolated vertices: kernel dimension 26 exceeds the default cap
    assert parity_solutions(empty_graph(26)) is None
    assert parity_solutions(cycle(4), max_solutions=0) is None


def test_parity_feasibility_kernel_cap_gives_inconclusive_not_certificate():
    space = parity_feasibility(empty_graph(26), kernel_cap=4)
    assert space.inconclusive
    assert not space.certifies_nonexistence


SMALL_GRAPHS = [
    cycle(4), cycle(6), cycle(8),
    complete(2), complete(4), complete(6),
    prism(3), prism(4), prism(5), prism(6), prism(7), prism(8),
    complete_multipartite([3, 3]), complete_multipartite([2, 2, 2]),
    complete_multipartite([1, 2, 3]), complete_multipartite([2, 4]),
    path(6), path(8), empty_graph(6),
    UndirectedGraph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (0, 3)]),
]


def test_parity_feasibility_matches_brute_force():
    for g in SMALL_GRAPHS:
        space = parity_feasibility(g)
        assert space is not None and not space.inconclusive
        for c in (0, 1):
            expected = brute_parity_feasible(g.vertex_count, g.edges, c)
            assert space.feasible[c] == expected, (g, c)


def test_parity_feasibility_matches_brute_force_large_prisms():
    for n in (9, 10):
        g = prism(n)
        space = parity_feasibility(g)
        for c in (0, 1):
            expected = brute_parity_feasible_numpy(g.vertex_count, g.edges, c)
            assert space.feasible[c] == expected, (n, c)


def test_parity_solutions_lists_match_brute_force():
    from itertools import combinations

    for g in SMALL_GRAPHS:
        n = g.vertex_count
        sols = parity_solutions(g)
        if sols is None:
            continue
        neighbors = [g.neighbors(x) for x in range(n)]
        for c in (0, 1):
            expected = set()
            for ones in combinations(range(n), n // 2):
                chosen = set(ones)
                if all(sum(1 for y in neighbors[x] if y in chosen) % 2 == c for x in range(n)):
                    expected.add(sum(1 << i for i in ones))
            assert set(sols[c]) == expected, (g, c)


def test_prism_solutions_have_period_three_in_zigzag_order():
    # relabel each rung so consecutive zigzag vertices alternate rails; in that
    # order each vertex sees positions i-1, i, i+1 of the opposite sequence, so
    # any solution of the unrestricted system repeats with period 3
    for n in (4, 6, 8, 10):
        sols = parity_solutions(prism(n), require_cardinality=False)
        assert sols is not None
        u_seq = [j if j % 2 == 0 else n + j for j in range(n)]
        w_seq = [n + j if j % 2 == 0 else j for j in range(n)]
        for vectors in sols.values():
            for p in vectors:
                for seq in (u_seq, w_seq):
                    for i in range(n):
                        a = (p >> seq[i]) & 1
                        b = (p >> seq[(i + 3) % n]) & 1
                        assert a == b, (n, p, i)


def test_prism_nonexistence_odd_uses_regularity():
    for n in (3, 5, 7, 9):
        cert = prism_nonexistence(n)
        assert isinstance(cert, NonexistenceCertificate)
        assert cert.reason == "theorem1"


def test_prism_nonexistence_even_uses_parity():
    for n in (4, 6, 8, 10):
        cert = prism_nonexistence(n)
        assert isinstance(cert, NonexistenceCertificate)
        assert cert.reason == "parity-infeasible"


def test_prism_nonexistence_cross_check_agrees():
    cert = prism_nonexistence(4, cross_check=True)
    assert cert is not None and cert.reason == "parity-infeasible"


def test_prism_nonexistence_rejects_degenerate_cycles():
    with pytest.raises(ValueError):
        prism_nonexistence(2)
