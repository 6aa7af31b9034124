import pytest

import catalog
from birotary.classify import (classify, classify_nonsolvable, classify_solvable, generation_criterion_check,
                               metacyclic_order_check, num_membership, odd_case_data, psl_candidates,
                               reduce_by_pcore)
from birotary.constructions import abelian_map, metacyclic, semidihedral16
from birotary.errors import Abelian, NotSolvable, PreconditionFailed, Solvable
from birotary.families import case_iii_desk, case_iv_desk, desk_analogue, solvable_example
from birotary.maps import make_map
from birotary.perm import commutator


def _desk(line, p_override=None):
    G, x, y, p = desk_analogue(line)
    return classify(G, x, y, p_override or p)


@pytest.mark.parametrize("line,row,ctype", [(2, 2, (3, 14)), (4, 4, (10, 6)), (5, 3, (15, 66))])
def test_desk_rows(line, row, ctype):
    res = _desk(line)
    assert res.branch == "solvable" and res.row == row
    s = res.solvable
    assert s.formula_type == s.computed_type == res.computed_type == ctype
    assert s.verdicts["formulaTypeMatches"] and s.verdicts["reconstructed"]


@pytest.mark.parametrize("p", [5, 11])
def test_rows_5_and_6_on_a_small_group(p):
    G, pairs = catalog.entry("Z7:(Z2xD6)")
    rows = {}
    for pair in pairs:
        s = classify(G, pair.x, pair.y, p).solvable
        rows[s.row] = s.computed_type
        assert s.verdicts["tableTypeMatches"] and s.verdicts["standardPairType"]
        # 42 is not a power of p, so the row side conditions on the quotient fail
        assert not s.verdicts["rowConditions"]
    assert rows == {5: (6, 42), 6: (14, 42)}


def test_row_7():
    G, (pair,) = catalog.entry("Z5xA4")
    s = classify(G, pair.x, pair.y, 11).solvable
    assert s.row == 7 and s.computed_type == (15, 4)
    assert s.hall.shape == "Z2^2:Z(3^e)" and s.hall.e == 1
    assert all(s.verdicts.values())


@pytest.mark.parametrize("line", [1, 3])
def test_materialized_lines(line):
    inst = solvable_example(line, 1)
    res = classify(inst.group, inst.pair.x, inst.pair.y, inst.prime_power()[0])
    assert res.branch == "solvable" and res.row == line


def test_decomposition_is_consistent():
    res = _desk(2)
    s = res.solvable
    n = s.group.order()
    assert s.a_order * s.b_order * s.H.order() == n
    assert s.K.order() * s.H.order() == n
    rho = res.solvable.a ** s.i * s.b ** s.j * s.rho0
    assert make_map(s.group, rho, s.tau0).type == s.computed_type
    d = res.to_dict()
    assert {"input", "pCoreOrder", "quotientOrder", "branch", "row", "decomposition", "predictedType",
            "computedType", "verdicts", "exponents", "notes"} <= set(d)
    assert d["decomposition"]["typeParameters"]["m2"] == s.a_order


def test_case_i_ii_iii_iv():
    G, (pair,) = catalog.entry("PSL(2,7)")
    assert classify(G, pair.x, pair.y, 7).case == "i"
    G, (pair,) = catalog.entry("A5")
    res = classify(G, pair.x, pair.y, 2)
    assert res.case == "ii" and res.nonsolvable.q_values == [4, 5]
    G, (pair,) = catalog.entry("PGL(2,5)")
    assert classify(G, pair.x, pair.y, 2).case == "iii"


@pytest.mark.slow
def test_product_desk_cases():
    X0, X, x, y = case_iii_desk()
    res = classify(X, x, y, 2)
    assert res.case == "iii" and res.computed_type is not None
    X0, X, x, y = case_iv_desk()
    res = classify(X, x, y, 2)
    ns = res.nonsolvable
    assert res.case == "iv" and res.pcore_order == 4 and res.quotient_order == 360
    assert ns.R.order() == 3 and not ns.verdicts["hypothesis"]


def test_nonsolvable_report_fields():
    G, (pair,) = catalog.entry("PSL(2,7)")
    ns = classify_nonsolvable(G, pair.x, pair.y, 7)
    assert ns.q_values == [7] and ns.R.order() == 1 and ns.f == 1
    assert ns.odd_data[0]["q=p^t"]
    assert ns.to_dict()["case"] == "i"
    with pytest.raises(Solvable):
        G, (pair,) = catalog.entry("S4")
        classify_nonsolvable(G, pair.x, pair.y, 2)


def test_num_membership():
    assert [q for q in range(2, 40) if num_membership(q)] == [3, 4, 5, 7, 8, 16, 17, 31, 32]
    assert not num_membership(9) and not num_membership(1)


def test_odd_case_data():
    assert odd_case_data(7, 7)["q=p^t"]
    assert odd_case_data(7, 3)["q=2p^t+1 prime"]
    assert odd_case_data(5, 3)["q=2p^t-1 prime"]
    assert not any(v for k, v in odd_case_data(9, 5).items() if k != "q")


def test_psl_candidates():
    assert psl_candidates(60) == [4, 5]
    assert psl_candidates(168) == [7]
    assert psl_candidates(504) == [8]
    assert psl_candidates(100) == []


@pytest.mark.parametrize("n,m,r", [(5, 4, 2), (7, 2, 6)])
def test_metacyclic_order_check(n, m, r):
    sd = metacyclic(n, m, r)
    x, y = sd.normal_generators[0], sd.complement_generators[0]
    rep = metacyclic_order_check(sd.group, x, y)
    assert rep["allEqual"] and rep["orders"] == [m] * n
    if m == 2:
        assert rep["inverts"]


def test_metacyclic_order_check_preconditions():
    sd = metacyclic(9, 3, 4)
    x, y = sd.normal_generators[0], sd.complement_generators[0]
    assert commutator(x, y).order() < 9
    with pytest.raises(PreconditionFailed):
        metacyclic_order_check(sd.group, x, y)


def test_generation_criterion_on_small_group():
    G, (pair,) = catalog.entry("Z13:Z6")
    s = classify(G, pair.x, pair.y, 23).solvable
    rep = generation_criterion_check(s)
    assert rep["mismatches"] == [] and 0 < rep["generating"] < rep["cases"]


def test_abelian_and_trivial_branches():
    G, pair = abelian_map(6, "dipole")
    res = classify(G, pair.x, pair.y, 5)
    assert res.branch == "abelian" and res.tag == "dipole"
    res = classify(G, pair.x, pair.y, 3)
    assert res.branch == "abelian" and res.computed_type is not None
    G, x, y = semidihedral16()
    res = classify(G, x, y, 2)
    assert res.branch == "trivial" and res.quotient_order == 1 and res.pcore_order == 16
    with pytest.raises(Abelian):
        classify_solvable(*abelian_map(6, "bouquet")[:1], *abelian_map(6, "bouquet")[1].as_tuple(), 5)


def test_degenerate_branch():
    # every involution of an abelian group lies in O_2, so y collapses
    G, pair = abelian_map(6, "dipole")
    res = classify(G, pair.x, pair.y, 2)
    assert res.branch == "abelian" and res.tag == "degenerate" and res.quotient_order == 3
    assert res.notes == ["y lies in O_2(X); the quotient is cyclic with 3 semi-edges"]
    assert res.to_dict()["tag"] == "degenerate"


def test_reduce_by_pcore():
    G, (pair,) = catalog.entry("S4")
    Q, rho, tau, N = reduce_by_pcore(G, pair.x, pair.y, 2)
    assert N.order() == 4 and Q.order() == 6
    assert make_map(Q, rho, tau).order == 6
    Q, rho, tau, N = reduce_by_pcore(G, pair.x, pair.y, 5)
    assert Q is G and N.order() == 1


def test_errors():
    G, (pair,) = catalog.entry("S4")
    with pytest.raises(PreconditionFailed):
        classify(G, pair.x, pair.y, 4)
    with pytest.raises(PreconditionFailed):
        classify_solvable(G, pair.x, pair.y, 2)
    G, (pair,) = catalog.entry("A5")
    with pytest.raises(NotSolvable):
        classify_solvable(G, pair.x, pair.y, 7)
