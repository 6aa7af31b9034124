from math import lcm

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import catalog
import oracles
from birotary.constructions import alternating_group, semidihedral16
from birotary.errors import NotGenerating, NotInvolution
from birotary.ntheory import is_power_of, prime_divisors
from birotary.pclass import (is_p0, is_p1, is_p1_plus, is_p2, is_p2_plus, p0_value, p1_with_respect_to,
                             pclass_report)
from birotary.perm import Permutation, generate

PRIMES = [2, 3, 5, 7, 11, 13, 23]


def _brute_p1(elements, p):
    """Try every pair of cyclic or dihedral subgroups from the full subgroup list."""
    subs = oracles.all_subgroups(elements)
    sizes = {len(S) for S in subs if oracles.shape(S) in ("cyclic", "dihedral")}
    n = len(elements)
    for a in sizes:
        for b in sizes:
            l = lcm(a, b)
            if n % l == 0 and is_power_of(n // l, p):
                return True
    return False


@pytest.mark.parametrize("name", [n for n in catalog.names(200) if catalog.entry(n)[0].order() <= 120])
def test_p1_against_subgroup_enumeration(name):
    G, _ = catalog.entry(name)
    for p in PRIMES:
        ok, wit = is_p1(G, p)
        assert ok == _brute_p1(G.elements, p)
        if ok:
            assert G.order() == p ** wit.n * lcm(wit.h1_order, wit.h2_order)
            for gens, shape, order in ((wit.h1_generators, wit.h1_shape, wit.h1_order),
                                       (wit.h2_generators, wit.h2_shape, wit.h2_order)):
                S = oracles.closure(gens, G.degree) if gens else {oracles.ident(G.degree)}
                assert len(S) == order
                assert shape == ("trivial" if order == 1 else oracles.shape(S))


@pytest.mark.parametrize("name", catalog.names(200))
def test_p2_against_sylow_enumeration(name):
    G, _ = catalog.entry(name)
    L = oracles.Lattice(G.elements) if G.order() <= 96 else None
    for p in PRIMES:
        ok, wits = is_p2(G, p)
        assert {w.prime for w in wits} == set(prime_divisors(G.order())) - {p}
        for w in wits:
            assert w.shape == oracles.shape(w.subgroup.elements)
            if L is not None:
                assert w.order == L.sylow_order(w.prime)
        assert ok == all(w.shape != "other" for w in wits)


@pytest.mark.parametrize("name", [n for n in catalog.names() if catalog.entry(n)[1]])
def test_implication_chain(name):
    G, pairs = catalog.entry(name)
    for p in sorted(set(prime_divisors(G.order())) | {7, 11, 23}):
        if is_p1(G, p)[0]:
            assert is_p2(G, p)[0]
        for pair in pairs:
            if is_p0(G, pair.x, pair.y, p)[0]:
                assert is_p1_plus(G, pair.x, pair.y, p)
            if is_p1_plus(G, pair.x, pair.y, p):
                assert is_p2_plus(G, pair.x, pair.y, p)


def test_p0_on_semidihedral():
    G, x, y = semidihedral16()
    assert p0_value(G, x, y) == -4
    assert is_p0(G, x, y, 2) == (True, 2)
    assert is_p0(G, x, y, 3) == (False, None)
    with pytest.raises(NotInvolution):
        is_p0(G, x, x, 2)
    with pytest.raises(NotGenerating):
        is_p0(G, x * x, y, 2)


def test_a7_and_psl7():
    A7, _ = catalog.entry("A7")
    assert not is_p1(A7, 3)[0]
    assert is_p2(A7, 3)[0]
    G, pairs = catalog.entry("PSL(2,7)")
    x, y = pairs[0].x, pairs[0].y
    assert is_p1_plus(G, x, y, 7)
    H1 = generate([y, y.conjugate(x)], G.degree)
    assert p1_with_respect_to(G, H1, generate([x], G.degree), 7) == 1
    rep = pclass_report(G, 7, (x, y))
    assert rep.verdicts == {"P1": True, "P2": True, "P0": True, "P1+": True, "P2+": True}
    assert rep.p0_exponent == 1
    assert rep.to_dict()["P1"]["n"] == rep.p1_witness.n


def test_odd_p_requires_commutator_generation():
    # in the bouquet Z_2n the pair (x, x^n) has [x,y] = 1, so <[x,y], x> = <x> is proper
    from birotary.constructions import abelian_map
    G, pair = abelian_map(3, "dipole")
    assert not is_p1_plus(G, pair.x, pair.y, 3)
    assert not is_p2_plus(G, pair.x, pair.y, 3)
    assert is_p2_plus(G, pair.x, pair.y, 2) == is_p2(G, 2)[0]


def test_report_without_pair():
    rep = pclass_report(alternating_group(5), 2)
    assert rep.verdicts["P0"] is None and rep.verdicts["P1"] is True


@pytest.mark.parametrize("name", ["D12", "S4", "A5", "Z13:Z6", "PGL(2,5)"])
@settings(max_examples=15, deadline=None)
@given(data=st.data())
def test_p1_closed_under_normal_subgroups_and_quotients(name, data):
    from birotary.perm import quotient
    G, _ = catalog.entry(name)
    normal = [N for N in oracles.normal_subgroups(G.elements) if 1 < len(N) < G.order()]
    if not normal:
        return
    N = data.draw(st.sampled_from(sorted(normal, key=lambda S: (len(S), sorted(S)))))
    p = data.draw(st.sampled_from(PRIMES))
    if not is_p1(G, p)[0]:
        return
    NG = generate([Permutation(g) for g in N], G.degree)
    assert is_p1(NG, p)[0]
    Q, _ = quotient(G, NG)
    assert is_p1(Q, p)[0]
