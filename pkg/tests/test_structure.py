import pytest

from pedsolve import (
    CompleteBipartite,
    Cycle,
    Graph,
    NotP6FreeError,
    find_dominating_complete_bipartite,
    find_dominating_induced_c6,
    find_dominating_structure,
    generate_p6_free,
    maximalize_complete_bipartite,
    verify_structure,
)

from helpers import complete, cycle, path, star


def pendant_c6() -> Graph:
    edges = [(i, (i + 1) % 6) for i in range(6)] + [(i, 6 + i) for i in range(6)]
    return Graph(12, edges)


def test_find_cycle_examples():
    assert find_dominating_induced_c6(cycle(6)) == (0, 1, 2, 3, 4, 5)
    assert find_dominating_induced_c6(pendant_c6()) == (0, 1, 2, 3, 4, 5)
    assert find_dominating_induced_c6(star(3)) is None


def test_find_cycle_requires_connected():
    with pytest.raises(ValueError):
        find_dominating_induced_c6(Graph(3, []))


def test_find_biclique_examples():
    assert find_dominating_complete_bipartite(star(3)) == (
        frozenset({0}),
        frozenset({1, 2, 3}),
    )
    assert find_dominating_complete_bipartite(cycle(4)) == (
        frozenset({0, 2}),
        frozenset({1, 3}),
    )
    assert find_dominating_complete_bipartite(cycle(6)) is None


def test_maximalize_examples():
    g = star(3)
    assert maximalize_complete_bipartite(g, frozenset({0}), frozenset({1})) == (
        frozenset({0}),
        frozenset({1, 2, 3}),
    )
    # already-maximal input is a fixed point
    c4 = cycle(4)
    fixed = (frozenset({0, 2}), frozenset({1, 3}))
    assert maximalize_complete_bipartite(c4, *fixed) == fixed
    # K4 grows by the index rule: 2 joins R, then 3 joins the smaller side
    assert maximalize_complete_bipartite(
        complete(4), frozenset({0}), frozenset({1})
    ) == (frozenset({0, 2}), frozenset({1, 3}))


def test_maximalize_validates_input():
    with pytest.raises(ValueError):
        maximalize_complete_bipartite(path(4), frozenset({0}), frozenset({2}))


def test_find_structure_examples():
    assert isinstance(find_dominating_structure(cycle(6)), Cycle)
    assert isinstance(find_dominating_structure(star(3)), CompleteBipartite)
    with pytest.raises(NotP6FreeError) as exc:
        find_dominating_structure(path(6))
    assert exc.value.witness == (0, 1, 2, 3, 4, 5)


def test_structure_determinism_and_invariants():
    for seed in range(25):
        g = generate_p6_free(12, seed)
        s1 = find_dominating_structure(g)
        s2 = find_dominating_structure(g)
        assert s1 == s2
        assert verify_structure(g, s1)


def test_verify_structure_rejects_bad_claims():
    c6 = cycle(6)
    assert verify_structure(c6, Cycle((0, 1, 2, 3, 4, 5)))
    assert not verify_structure(c6, Cycle((0, 1, 2, 3, 5, 4)))
    assert not verify_structure(
        c6, CompleteBipartite(frozenset({0}), frozenset({1, 5}))
    )
