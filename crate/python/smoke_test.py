"""Smoke test for the hypodom extension. Run after `maturin develop` or
installing the wheel; exits non-zero on the first failed check."""

from itertools import combinations

import networkx as nx

import hypodom as hd


def nx_gamma(g):
    """Brute-force domination number via networkx."""
    h = nx.Graph(g.edges())
    h.add_nodes_from(range(g.order))
    for k in range(g.order + 1):
        for s in combinations(range(g.order), k):
            if nx.is_dominating_set(h, s):
                return k


def main():
    c7 = hd.cycle(7)
    assert (c7.order, c7.size) == (7, 7)
    assert hd.domination_number(c7) == 3 == nx_gamma(c7)
    assert hd.is_hypo_ud(c7) and hd.is_hypo_ed(c7)
    assert hd.bondage_number(c7) == 3

    c4 = hd.Graph.from_graph6(hd.cycle(4).to_graph6())
    count, sets = hd.gamma_sets(c4)
    assert count == 6 and len(sets) == 6
    assert hd.gamma_sets(c4, cap=2) == (6, [[0, 1], [0, 2]])

    p = hd.path(4)
    assert hd.efficient_dominating_sets(p) == (1, [[0, 3]])

    report = hd.classify(hd.complete_minus_perfect_matching(6))
    assert report["is_hypo_ed"] and report["is_hypo_ud"]
    assert len(report["per_vertex"]) == 6

    assert hd.bull().is_isomorphic(hd.bull().complement())
    assert len(hd.exception_catalog()) == 7

    for claim in ["CIRCU", "CYCLES", "EXTR1"]:
        r = hd.verify_claim(claim)
        assert r["failures"] == [], r
    r = hd.verify_claim("UDVC", stream=hd.graphs_of_order(6, connected=True))
    assert r["scanned"] == 112 and r["failures"] == []

    found = hd.search("SELFCOMP", stream=hd.graphs_of_order(5))
    assert len(found["matches"]) == 2

    for g in hd.graphs_of_order(6):
        assert hd.domination_number(g) == nx_gamma(g)

    try:
        hd.Graph.from_graph6("not graph6 ###")
    except ValueError:
        pass
    else:
        raise AssertionError("malformed graph6 accepted")

    print("smoke test passed:", len(hd.claim_ids()), "claims registered")


if __name__ == "__main__":
    main()
