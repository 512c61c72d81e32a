import pytest

from pedsolve import Graph, attach_gadget, is_nsf, parse_graph, verify_reduction

from helpers import complete, cycle, path, star


def test_is_nsf_examples():
    assert is_nsf(cycle(3)) == (True, None)
    ok, witness = is_nsf(path(3))
    assert not ok and witness == 1
    assert is_nsf(complete(4)) == (True, None)
    assert is_nsf(parse_graph("2\n0 1")) == (True, None)  # no degree-2 vertex
    ok, witness = is_nsf(star(3))
    assert not ok and witness == 0


def test_attach_gadget_counts():
    k3 = cycle(3)
    gp = attach_gadget(k3)
    assert (gp.n, gp.m) == (12, 16)
    k2 = parse_graph("2\n0 1")
    gp2 = attach_gadget(k2)
    assert (gp2.n, gp2.m) == (11, 14)


def test_attach_gadget_anchor_tiebreak():
    gp = attach_gadget(complete(4))
    # all degrees equal, so the anchor is vertex 0 and gains one edge
    assert gp.degree(0) == 4 and gp.degree(1) == 3


def test_attach_gadget_degree_profile():
    g = cycle(3)
    anchor = 0
    gp = attach_gadget(g, anchor)
    v1, k1 = g.n, g.n + 5
    assert gp.degree(anchor) == g.degree(anchor) + 1
    assert gp.degree(v1) == 3
    assert gp.degree(k1) == 4


def test_attach_gadget_rejects_bad_input():
    with pytest.raises(ValueError):
        attach_gadget(Graph(0, []))
    with pytest.raises(ValueError):
        attach_gadget(Graph(2, []))  # disconnected
    with pytest.raises(ValueError):
        attach_gadget(cycle(3), anchor=7)


def test_verify_reduction_k3():
    rep = verify_reduction(cycle(3))
    assert rep.host_has_dim
    assert rep.ok


def test_verify_reduction_k4():
    rep = verify_reduction(complete(4))
    assert not rep.host_has_dim  # K4 is DIM-less
    assert rep.ok


def test_verify_reduction_rejects_non_nsf():
    with pytest.raises(ValueError):
        verify_reduction(path(3))
