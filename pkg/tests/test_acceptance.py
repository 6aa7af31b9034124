"""The acceptance criteria, one test each, with their tolerances and time limits.

Each test prints a PASS/FAIL line; the lines are repeated in the session summary.
"""
from math import gcd, lcm

import pytest

import catalog
import oracles
from acceptance_log import criterion
from birotary.analysis import p_core, solvable_radical, sylow_subgroup
from birotary.census import enumerate_rotary_pairs, pair_orbits
from birotary.classify import classify, classify_nonsolvable
from birotary.constructions import (SEEDS16, abelian_map, alternating_group, composite_two_group, modular16,
                                    order16_seed, semidihedral16, torus_group, torus_order)
from birotary.families import identity_check, solvable_example
from birotary.fields import psigmal2, psl2
from birotary.maps import make_map, maps_isomorphic
from birotary.ntheory import prime_divisors
from birotary.pclass import is_p0, is_p1, is_p1_plus, is_p2, is_p2_plus
from birotary.perm import Permutation, centralizer, commutator, generate, quotient


def test_criterion_1_order16_trio():
    with criterion(1, 1.0) as c:
        sd, x, y = semidihedral16()
        m16, u, v = modular16()
        got = [(make_map(sd, x, y).type, make_map(sd, x, y).chi),
               (make_map(sd, x * y, y).type, make_map(sd, x * y, y).chi),
               (make_map(m16, u, v).type, make_map(m16, u, v).chi)]
        want = [((8, 8), -4), ((4, 8), -2), ((8, 4), -2)]
        c.check(got == want, f"got {got}")
        c.detail = "SD16 (8,8)/-4, SD16 xy (4,8)/-2, M16 (8,4)/-2"


def test_criterion_2_bouquets_and_dipoles():
    with criterion(2, 1.0) as c:
        for n in range(1, 51):
            B = make_map(*_unpack(abelian_map(n, "bouquet")))
            D = make_map(*_unpack(abelian_map(n, "dipole")))
            c.check((B.vertices, B.edges, B.faces, B.chi, B.orientable) == (1, n, n, 1, False), f"bouquet {n}")
            c.check((D.vertices, D.edges, D.faces, D.chi, D.orientable) == (2, n, n, 2, True), f"dipole {n}")
        c.detail = "n = 1..50"


def _unpack(built):
    G, pair = built
    return G, pair.x, pair.y


def test_criterion_3_torus_family():
    with criterion(3, 30.0) as c:
        done = []
        for f in range(1, 8):
            for eps in (0, 1):
                if torus_order(f, eps) > 20000:
                    continue
                G, pair = torus_group(f, eps)
                # closure of the two generators alone, without the stated order as a hint
                H = generate([pair.x, pair.y], G.degree, cap=10 ** 6)
                c.check(H.order() == torus_order(f, eps), f"({f},{eps}): |<x,y>| = {H.order()}")
                M = make_map(G, pair.x, pair.y)
                c.check(M.type == (4, 4) and M.chi == 0, f"({f},{eps}): type {M.type}, chi {M.chi}")
                done.append((f, eps))
        c.check(len(done) == 10, f"instances {done}")
        c.detail = f"{len(done)} instances up to order {max(torus_order(*d) for d in done)}"


def test_criterion_4_composite_two_groups():
    with criterion(4, 60.0) as c:
        n = 0
        for f in (5, 6, 7):
            for seed in SEEDS16:
                G, pair = composite_two_group(f, seed)
                M = make_map(G, pair.x, pair.y)
                S, sp = order16_seed(seed)
                pp = M.prime_power()
                c.check(pp is not None and pp[0] == 2 and f - 3 <= pp[1] <= f + 2, f"f={f} {seed}: chi {M.chi}")
                c.check(M.type == make_map(S, sp.x, sp.y).type, f"f={f} {seed}: type {M.type}")
                n += 1
        c.detail = f"{n} composites"


def test_criterion_5_a5():
    with criterion(5, 5.0) as c:
        G = alternating_group(5)
        # (1 3 5) and (1 2)(3 4) on points 1..5
        x = Permutation.from_cycles("(0 2 4)", 5)
        y = Permutation.from_cycles("(0 1)(2 3)", 5)
        M = make_map(G, x, y)
        rep = classify_nonsolvable(G, x, y, 2)
        c.check(M.chi == -4, f"chi {M.chi}")
        c.check(rep.case == "ii", f"case {rep.case}")
        c.detail = f"chi {M.chi}, case {rep.case}"


def test_criterion_6_psl27():
    with criterion(6, 60.0) as c:
        G = psl2(7)
        G.materialize()
        found, chis = [], set()
        for x in G.elements:
            if x.order() != 3:
                continue
            for y in G.elements:
                if y.order() != 2 or commutator(x, y).order() != 4:
                    continue
                if generate([x, y], G.degree, cap=168).order() == 168:
                    found.append((x, y))
                    chis.add(make_map(G, x, y).chi)
        c.check(bool(found), "no pair")
        c.check(chis == {-7}, f"chi values {chis}")
        x, y = found[0]
        h1 = generate([y, y.conjugate(x)], G.degree).order()
        c.check(h1 == 8 and 168 == 7 * lcm(3, h1), f"|<y, y^x>| = {h1}")
        c.check(all(is_p1_plus(G, a, b, 7) for a, b in found), "P1+ fails for some pair")
        c.detail = f"{len(found)} pairs, all chi -7 and P1+ with 168 = 7 lcm(3,8)"


def test_criterion_7_solvable_identities():
    with criterion(7, 5.0) as c:
        for i in range(2, 8):
            for f in (1, 2):
                rep = identity_check(f"line{i}", f)
                c.check(rep.passed, f"line{i} f={f}: {rep.flagged_discrepancies}")
                c.check(all(ok for _, ok in rep.side_conditions), f"line{i} f={f}: side conditions")
        for f in (1, 2):
            rep = identity_check("line1", f)
            chi = rep.claim("chi equals 3 - 2*m2")
            c.check(chi.verdict, f"line1 f={f}: chi = 3 - 2 m2 not reproduced")
            flagged = rep.claim("3 - 2*m2 equals -23^(6f+3)")
            c.check(not flagged.verdict and flagged.expected == -23 ** (6 * f + 3),
                    f"line1 f={f}: exponent not flagged")
            c.check(flagged.computed == -23 ** (6 * f - 5), f"line1 f={f}: computed {flagged.computed}")
        c.detail = "lines 2-7 at f = 1, 2 exact; line 1 flags -23^(6f+3) against -23^(6f-5)"


def test_criterion_8_pipeline():
    with criterion(8, 120.0) as c:
        for line, p, order, chi, row in ((1, 23, 78, -23, 1), (3, 2, 4200, -2 ** 11, 3)):
            inst = solvable_example(line, 1)
            G, pair = inst.group, inst.pair
            M = make_map(G, pair.x, pair.y)
            c.check((M.order, M.chi) == (order, chi), f"line{line}: order {M.order}, chi {M.chi}")
            res = classify(G, pair.x, pair.y, p)
            c.check(res.pcore_order == p_core(G, p).order(), f"line{line}: O_p order")
            c.check(res.pcore_order * res.quotient_order == order, f"line{line}: quotient order")
            s = res.solvable
            c.check(res.branch == "solvable" and s is not None and s.row == row, f"line{line}: row {res.row}")
            if s is not None:
                c.check(s.formula_type == s.computed_type, f"line{line}: {s.formula_type} vs {s.computed_type}")
                c.check(all(s.verdicts.values()), f"line{line}: verdicts {s.verdicts}")
        c.detail = "line 1 (78, -23) row 1; line 3 (4200, -2^11) row 3; predicted type = computed type"


def _catalog_chain_violations():
    bad = []
    for name in catalog.names():
        G, pairs = catalog.entry(name)
        primes = sorted(set(prime_divisors(G.order())) | {7, 11, 23})
        for p in primes:
            p1, p2 = is_p1(G, p)[0], is_p2(G, p)[0]
            if p1 and not p2:
                bad.append(f"{name} p={p}: P1 without P2")
            for pair in pairs:
                p0 = is_p0(G, pair.x, pair.y, p)[0]
                p1p = is_p1_plus(G, pair.x, pair.y, p)
                p2p = is_p2_plus(G, pair.x, pair.y, p)
                if p0 and not p1p:
                    bad.append(f"{name} p={p}: P0 without P1+")
                if p1p and not p2p:
                    bad.append(f"{name} p={p}: P1+ without P2+")
    return bad


def _p1_closure_violations(max_order=200):
    bad = []
    for name in catalog.names(max_order):
        G, _ = catalog.entry(name)
        L = oracles.Lattice(G.elements)
        for p in sorted(set(prime_divisors(G.order())) | {7}):
            if not is_p1(G, p)[0]:
                continue
            for N in L.normal:
                if len(N) == 1:
                    continue
                NG = generate([Permutation(g) for g in N], G.degree)
                if not is_p1(NG, p)[0]:
                    bad.append(f"{name} p={p}: normal subgroup of order {len(N)}")
                if len(N) < G.order():
                    Q, _ = quotient(G, NG)
                    if not is_p1(Q, p)[0]:
                        bad.append(f"{name} p={p}: quotient by order {len(N)}")
    return bad


def test_criterion_9_pclass_harness():
    with criterion(9, 600.0) as c:
        names = catalog.names()
        c.check(len(names) >= 25, f"catalog has {len(names)} groups")
        chain = _catalog_chain_violations()
        c.check(not chain, f"chain: {chain[:3]}")
        closure = _p1_closure_violations()
        c.check(not closure, f"closure: {closure[:3]}")
        A7, _ = catalog.entry("A7")
        c.check(not is_p1(A7, 3)[0] and is_p2(A7, 3)[0], "A7 at p = 3")
        c.detail = f"{len(names)} groups, 0 chain and 0 closure violations, A7: not P1, P2"


def _centralizer_violations():
    bad = []
    for q in (4, 5, 7, 8, 9):
        P, S = psl2(q), psigmal2(q)
        S.materialize()
        d = gcd(2, q - 1)
        targets = {(q - 1) // d, (q + 1) // d}
        for g in P.materialize():
            if g.order() in targets:
                C = centralizer(S, [g]).order()
                if C != g.order():
                    bad.append((q, g.order(), C))
    return sorted(set(bad))


@pytest.mark.xfail(strict=True, reason="the centralizer claim fails for q = 4, 5, 9; "
                                       "the exact counterexamples are frozen in test_fields")
def test_criterion_10_centralizers():
    with criterion(10, 300.0) as c:
        bad = _centralizer_violations()
        c.check(not bad, f"(q, |g|, |C|) counterexamples: {bad}")
        c.detail = "q = 4, 5, 7, 8, 9, every g of order (q +- 1)/gcd(2, q - 1)"


def _oracle_disagreements(max_order=200):
    bad = []
    for name in catalog.names(max_order):
        G, _ = catalog.entry(name)
        L = oracles.Lattice(G.elements)
        if L.radical_order() != solvable_radical(G).order():
            bad.append(f"{name}: radical")
        for p in prime_divisors(G.order()):
            if L.p_core_order(p) != p_core(G, p).order():
                bad.append(f"{name}: O_{p}")
            w = sylow_subgroup(G, p)
            if w.order != L.sylow_order(p) or w.shape != oracles.shape(w.subgroup.elements):
                bad.append(f"{name}: Sylow {p}")
    return bad


def _orbit_disagreements(max_order=200, max_orbits=12):
    bad, checked = [], 0
    for name in catalog.names(max_order):
        G, _ = catalog.entry(name)
        pairs = enumerate_rotary_pairs(G)
        orbits = pair_orbits(G, pairs)
        if len(orbits) > max_orbits:
            continue
        checked += 1
        # partition the same pairs by pinned-isomorphism tests alone
        classes: list[list] = []
        for pr in pairs:
            for cl in classes:
                if oracles.pinned_isomorphic(cl[0].x, cl[0].y, pr.x, pr.y):
                    cl.append(pr)
                    break
            else:
                classes.append([pr])
        ours = {frozenset((tuple(m.x), tuple(m.y)) for m in o.members) for o in orbits}
        theirs = {frozenset((tuple(m.x), tuple(m.y)) for m in cl) for cl in classes}
        if ours != theirs:
            bad.append(f"{name}: {len(ours)} orbits vs {len(theirs)} classes")
        reps = [make_map(G, o.representative.x, o.representative.y) for o in orbits]
        for i, A in enumerate(reps):
            for B in reps[i + 1:]:
                if maps_isomorphic(A, B) is not None:
                    bad.append(f"{name}: two orbit representatives are isomorphic")
    return bad, checked


def test_criterion_11_oracle_agreement():
    with criterion(11, 600.0) as c:
        bad = _oracle_disagreements()
        c.check(not bad, f"analysis: {bad[:3]}")
        obad, checked = _orbit_disagreements()
        c.check(not obad, f"orbits: {obad[:3]}")
        c.detail = f"{len(catalog.names(200))} groups of order <= 200; orbit partition checked on {checked}"


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-s"]))
