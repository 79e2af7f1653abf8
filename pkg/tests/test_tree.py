from fractions import Fraction

import pytest
from hypothesis import given

from pytri.errors import RootError
from pytri.pythagoras import PythTriple, p_sequence, primitive_triples_bruteforce
from pytri.tree import (
    BRANCHES,
    ROOT,
    ROOT_PSEQ,
    Branch,
    children,
    demote,
    demote_tangent,
    demote_tangent_steps,
    demote_triple,
    enumerate_triples,
    family_price,
    parent,
    path_of,
    promote,
    promote_triple,
    triple_at,
)

from conftest import triples

ROOT_CHILDREN = {
    Branch.L: PythTriple(15, 8, 17),
    Branch.M: PythTriple(21, 20, 29),
    Branch.R: PythTriple(5, 12, 13),
}


def test_root_children_three_ways():
    assert children(ROOT) == ROOT_CHILDREN
    assert {b: promote_triple(ROOT, b) for b in BRANCHES} == ROOT_CHILDREN
    par, kids = family_price(ROOT)
    assert kids == ROOT_CHILDREN
    assert par == (0, 1, 1)


def test_root_has_no_parent():
    assert demote(ROOT_PSEQ) is None
    assert parent(ROOT) is None
    with pytest.raises(RootError):
        demote_triple(ROOT)
    with pytest.raises(RootError):
        demote_tangent(Fraction(1, 2))


def test_demote_33_56_65():
    assert parent(PythTriple(33, 56, 65)) == (PythTriple(15, 8, 17), Branch.R)
    assert demote_triple(PythTriple(33, 56, 65)) == PythTriple(15, 8, 17)
    assert path_of(PythTriple(33, 56, 65)) == "LR"
    assert triple_at("LR") == PythTriple(33, 56, 65)


@pytest.mark.parametrize(
    "start,chain",
    [
        ("3/10", ["3/10", "3/4"]),
        ("3/8", ["3/8", "3/2", "2/3"]),
        ("5/6", ["5/6", "-5/4", "5/4", "4/5"]),
    ],
)
def test_tangent_demotion_chains(start, chain):
    assert demote_tangent_steps(Fraction(start)) == [Fraction(v) for v in chain]


@given(triples())
def test_tangent_demotion_tracks_tree(t):
    par = parent(t)
    if par is None:
        return
    q, qq = (Fraction(p_sequence(t).q, p_sequence(t).p), Fraction(p_sequence(t).qp, p_sequence(t).pp))
    pq = p_sequence(par[0])
    targets = {Fraction(pq.q, pq.p), Fraction(pq.qp, pq.pp)}
    for tan in (q, qq):
        if tan not in (Fraction(1, 2), Fraction(1, 3)):
            assert demote_tangent(tan) in targets


@given(triples())
def test_promote_demote_inverse(t):
    P = p_sequence(t)
    for b in BRANCHES:
        assert demote(promote(P, b)) == (P, b)


@given(triples())
def test_three_child_rules_agree(t):
    kids = children(t)
    assert kids == {b: promote_triple(t, b) for b in BRANCHES}
    assert kids == family_price(t)[1]
    for b, kid in kids.items():
        assert parent(kid) == (t, b)
        assert demote_triple(kid) == t


@given(triples())
def test_path_round_trip(t):
    assert triple_at(path_of(t)) == t


@pytest.mark.parametrize("method", ["pseq", "matrix", "price"])
@pytest.mark.parametrize("limit,count", [(4, 0), (5, 1), (30, 5), (100, 16), (1000, 158)])
def test_enumeration_matches_bruteforce(method, limit, count):
    found = list(enumerate_triples(limit, method))
    assert len(found) == len(set(found)) == count
    assert set(found) == primitive_triples_bruteforce(limit)


def test_unknown_method():
    with pytest.raises(ValueError):
        list(enumerate_triples(10, "nope"))
