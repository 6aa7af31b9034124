"""Classifiers for the quotient G = X/O_p(X) of a map group X with a rotary pair.

Solvable G decomposes as <a>:(<b> x H) with H a Hall {2,3}-subgroup, and
the pair falls into one of seven rows according to the shape of H.  A
non-solvable G is (R x D).Z_f with D = PSL(2,q) and f <= 2, in one of four
cases.  Every verdict is recomputed from the group, never assumed.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .analysis import (find_isomorphism, hall_subgroup_23, is_cyclic, cyclic_generator, is_solvable,
                       p_core, perfect_residual, pi_part, solvable_radical, coprime_to_6_subgroup)
from .constructions import (SemidirectSpec, cyclic, dihedral_group, direct_product, klein_four, pair_element,
                            semidirect_product)
from .errors import (Abelian, BirotaryError, HallShapeUnmatched, NotSolvable, PreconditionFailed, Solvable,
                     StructureViolation)
from .fields import psl2, psl_order, MAX_LINEAR_Q
from .maps import DegenerateMap, abelian_tag, make_map
from .ntheory import is_power_of, is_prime, is_prime_power, p_adic
from .pclass import is_p1_plus
from .perm import (Permutation, PermutationGroup, centralizer, commutator, commutator_subgroup, generate,
                   intersection, is_normal, quotient)

SHAPES = ("Z(k1)", "Z(k1)xZ2", "D(2*3^e)", "Z(2^f)xD(2*3^e)", "Z2^2:Z(3^e)")


def reduce_by_pcore(X: PermutationGroup, x: Permutation, y: Permutation, p: int):
    """(G, rho, tau, N) with G = X/N, N = O_p(X).  X is returned unchanged when N = 1."""
    N = p_core(X, p)
    if N.order() == 1:
        return X, x, y, N
    G, proj = quotient(X, N)
    G.materialize()
    if p_core(G, p).order() != 1:
        raise StructureViolation("O_p of the quotient is not trivial")
    return G, proj(x), proj(y), N


# solvable groups

@dataclass
class HallMatch:
    shape: str
    k1: int = 0
    e: int = 0
    f: int = 0
    generators: dict[str, Permutation] = field(default_factory=dict)
    pinned: bool = True

    def params(self) -> dict:
        return {"k1": self.k1, "e": self.e, "f": self.f}


@dataclass
class SolvableDecomposition:
    group: PermutationGroup
    p: int
    K: PermutationGroup
    H: PermutationGroup
    a: Permutation
    b: Permutation
    conjugator: Permutation
    i: int
    j: int
    rho0: Permutation
    tau0: Permutation
    hall: HallMatch
    row: int
    kappa: str
    standard_pair: tuple[Permutation, Permutation]
    a_order: int
    b_order: int
    m2_prime: int
    a_prime_order: int
    table_type: tuple[int, int]
    formula_type: tuple[int, int]
    computed_type: tuple[int, int]
    verdicts: dict[str, bool] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def k1(self) -> int:
        return self.rho0.order()

    def to_dict(self) -> dict:
        return {
            "K": self.K.order(), "H": self.H.order(),
            "a": {"order": self.a_order, "element": self.a.cycle_string()},
            "b": {"order": self.b_order, "element": self.b.cycle_string()},
            "hallShape": {"shape": self.hall.shape, **self.hall.params(), "pinned": self.hall.pinned},
            "row": self.row,
            "exponents": {"i": self.i, "j": self.j},
            "rho0": self.rho0.cycle_string(), "tau0": self.tau0.cycle_string(),
            "standardPair": [g.cycle_string() for g in self.standard_pair],
            "typeParameters": {"k1": self.k1, "k2": self.b_order, "m2": self.a_order,
                               "m2'": self.m2_prime, "kappa": self.kappa, "|a'|": self.a_prime_order},
            "tableType": list(self.table_type),
            "formulaType": list(self.formula_type),
            "computedType": list(self.computed_type),
            "verdicts": dict(self.verdicts),
            "notes": list(self.notes),
        }


def _cyclic_part(G: PermutationGroup, S: PermutationGroup, label: str) -> Permutation:
    if not is_cyclic(S):
        raise StructureViolation(f"{label} is not cyclic (order {S.order()})")
    g = cyclic_generator(S)
    return g if g is not None else G.identity


def _part(g: Permutation, prime_set) -> Permutation:
    """The component of g whose order is a product of the given primes."""
    n = g.order()
    keep = pi_part(n, prime_set)
    rest = n // keep
    # u = 1 mod keep, u = 0 mod rest
    u = rest * pow(rest, -1, keep) if keep > 1 else 0
    return g ** (u % n) if n > 1 else g


def _three_part_exponent(n: int) -> int:
    return p_adic(n, 3) if n % 3 == 0 else 0


def _z2sq_by_z3e(e: int) -> tuple[PermutationGroup, list[Permutation]]:
    V = klein_four()
    u1, u2 = V.generators
    C = cyclic(3 ** e)
    sd = semidirect_product(SemidirectSpec(V, C, [[u2, u1 * u2]], name=f"Z2^2:Z{3 ** e}"))
    return sd.group, sd.normal_generators + sd.complement_generators


def _pinned_iso(model: PermutationGroup, model_gens, H: PermutationGroup, images):
    if any(img is None for img in images):
        return None
    return find_isomorphism(model, H, pinned=list(zip(model_gens, images)))


def match_hall_shape(H: PermutationGroup, rho0: Permutation, tau0: Permutation) -> HallMatch:
    """Recognize H among the five admissible shapes and name its standard generators.

    Generators are read off (rho0, tau0) and confirmed by a pinned
    isomorphism from a constructed model; if pinning fails an unpinned
    isomorphism supplies them.
    """
    n = H.order()
    s = p_adic(n, 2) if n % 2 == 0 else 0
    e = _three_part_exponent(n)
    if 2 ** s * 3 ** e != n:
        raise HallShapeUnmatched(f"|H| = {n} is not a {{2,3}}-number")

    def finish(match: HallMatch, model, model_gens, names, images) -> HallMatch | None:
        iso = _pinned_iso(model, model_gens, H, images)
        if iso is None:
            iso = find_isomorphism(model, H)
            if iso is None:
                return None
            match.pinned = False
            images = [iso(g) for g in model_gens]
        match.generators = dict(zip(names, images))
        return match

    if is_cyclic(H):
        if rho0.order() == n:
            return HallMatch("Z(k1)", k1=n, generators={"rho0": rho0})
        if 2 * rho0.order() == n and rho0.order() % 2:
            # Z_k1 x Z2 with k1 odd: H is cyclic but the pair splits it
            return HallMatch("Z(k1)xZ2", k1=n // 2, generators={"rho0": rho0, "z": tau0})
        return HallMatch("Z(k1)", k1=n, generators={"rho0": cyclic_generator(H)}, pinned=False)
    tries = []
    if s >= 2 and H.is_abelian():
        k1 = n // 2
        A, B = cyclic(k1), cyclic(2)
        model = direct_product(A, B)
        gens = [pair_element(A.generators[0], B.identity), pair_element(A.identity, B.generators[0])]
        tries.append((HallMatch("Z(k1)xZ2", k1=k1), model, gens, ["rho0", "z"], [rho0, tau0]))
    if s == 1 and e >= 1:
        model = dihedral_group(3 ** e)
        c = rho0 if rho0.order() == 3 ** e else rho0 * tau0
        tries.append((HallMatch("D(2*3^e)", e=e), model, list(model.generators), ["c", "d"], [c, tau0]))
    if s >= 2 and e >= 1:
        f = s - 1
        A, Dm = cyclic(2 ** f), dihedral_group(3 ** e)
        model = direct_product(A, Dm)
        w = rho0 if rho0.order() % 3 == 0 else rho0 * tau0
        images = [_part(w, [2]), _part(w, [3]), tau0]
        tries.append((HallMatch("Z(2^f)xD(2*3^e)", e=e, f=f), model, list(model.generators),
                      ["d1", "c", "d2"], images))
    if s == 2 and e >= 1:
        model, gens = _z2sq_by_z3e(e)
        images = [tau0, tau0.conjugate(rho0), rho0]
        tries.append((HallMatch("Z2^2:Z(3^e)", e=e), model, gens, ["d1", "d2", "c"], images))
    for match, model, gens, names, images in tries:
        model.materialize()
        out = finish(match, model, gens, names, images)
        if out is not None:
            return out
    raise HallShapeUnmatched(f"Hall {{2,3}}-subgroup of order {n} matches none of the admissible shapes")


def _centralized_part(a_elems: list[Permutation], kappa: Permutation) -> int:
    return sum(1 for g in a_elems if g * kappa == kappa * g)


def _row_and_kappa(match: HallMatch, rho0: Permutation, tau0: Permutation) -> tuple[int, str]:
    g = match.generators
    if match.shape == "Z(k1)":
        return 1, "b*rho0"
    if match.shape == "Z(k1)xZ2":
        powers = {rho0 ** t for t in range(rho0.order())}
        return (1 if tau0 in powers else 2), "b*rho0"
    if match.shape == "D(2*3^e)":
        return (3, "b*c") if rho0 == g["c"] else (4, "b*c*d")
    if match.shape == "Z(2^f)xD(2*3^e)":
        return (5, "b*c*d1") if rho0 == g["c"] * g["d1"] else (6, "b*c*d1*d2")
    return 7, "b*c"


def _table_prediction(row: int, match: HallMatch, k1: int, k2: int, m2: int, m2p: int) -> tuple[int, int]:
    e3, f2 = 3 ** match.e, 2 ** match.f
    return {
        1: (k1 * k2 * m2p, 2 * m2),
        2: (k1 * k2 * m2p, 2 * m2),
        3: (e3 * k2 * m2p, 2 * e3 * m2),
        4: (2 * k2, 2 * e3 * m2),
        5: (f2 * e3 * k2 * m2p, 2 * e3 * m2),
        6: (f2 * k2 * m2p, 2 * e3 * m2),
        7: (e3 * k2, 4),
    }[row]


def _row_conditions(row: int, p: int, a_order: int, m2p: int) -> bool:
    if row in (2, 3, 5, 6):
        return p == 2
    if row == 4:
        return p != 3 and m2p == 1
    if row == 7:
        return p != 2 and a_order == 1
    return True


def _standard_pair(row: int, a: Permutation, b: Permutation, match: HallMatch, rho0: Permutation,
                   tau0: Permutation) -> tuple[Permutation, Permutation]:
    g = match.generators
    ab = a * b
    if row == 1:
        r0 = g["rho0"]
        return ab * r0, r0 ** (r0.order() // 2)
    if row == 2:
        return ab * g["rho0"], g["z"]
    if row == 3:
        return ab * g["c"], g["d"]
    if row == 4:
        return ab * g["c"] * g["d"], g["d"]
    if row == 5:
        return ab * g["c"] * g["d1"], g["d2"]
    if row == 6:
        return ab * g["c"] * g["d1"] * g["d2"], g["d2"]
    return b * g["c"], g["d1"]


def _decompose(z: Permutation, a: Permutation, a_order: int, bh: dict) -> tuple[int, int, Permutation] | None:
    ai = ~a
    w = z
    for i in range(a_order):
        hit = bh.get(w)
        if hit is not None:
            return i, hit[0], hit[1]
        w = ai * w
    return None


def classify_solvable(G: PermutationGroup, rho: Permutation, tau: Permutation, p: int) -> SolvableDecomposition:
    if not is_solvable(G):
        raise NotSolvable(f"{G.name or 'group'} is not solvable")
    if G.is_abelian():
        raise Abelian("abelian groups give only bouquets and dipoles", tag=abelian_tag(G, rho, tau))
    if p_core(G, p).order() != 1:
        raise PreconditionFailed(f"O_{p}(G) is not trivial")
    M = make_map(G, rho, tau)
    n = G.order()
    notes: list[str] = []

    K = coprime_to_6_subgroup(G)
    if K.order() != n // pi_part(n, [2, 3]) or not is_normal(G, K):
        raise StructureViolation("elements of order prime to 6 do not form a normal Hall subgroup")
    H = hall_subgroup_23(G)
    A = commutator_subgroup(G, K, H, name="[K,H]")
    B = centralizer(K, H.generators, name="C_K(H)")
    a = _cyclic_part(G, A, "[K,H]")
    b = _cyclic_part(G, B, "C_K(H)")
    a_order, b_order, h_order = A.order(), B.order(), H.order()
    verdicts = {
        "coprimeOrders": gcd(a_order, b_order) == 1 and gcd(a_order, h_order) == 1 and gcd(b_order, h_order) == 1,
        "aNormal": is_normal(G, A),
        "bCentralizesH": all(b * h == h * b for h in H.generators),
        "productOrder": a_order * b_order * h_order == n,
    }
    verdicts["reconstructed"] = generate([a, b] + list(H.generators), G.degree, cap=n).order() == n
    if not all(verdicts.values()):
        failed = [k for k, v in verdicts.items() if not v]
        raise StructureViolation(f"G is not <a>:(<b> x H): {', '.join(failed)}")

    # conjugate so that tau lands in H, then split rho = a^i b^j rho0
    H.materialize()
    g = next((g for g in G.materialize() if tau.conjugate(g) in H), None)
    if g is None:
        raise StructureViolation("tau is not conjugate into the Hall {2,3}-subgroup")
    rho_g, tau0 = rho.conjugate(g), tau.conjugate(g)
    bh = {}
    for j in range(b_order):
        bj = b ** j
        for h in H.elements:
            bh[bj * h] = (j, h)
    split = _decompose(rho_g, a, a_order, bh)
    if split is None:
        raise StructureViolation("rho does not factor through <a><b>H")
    i, j, rho0 = split
    verdicts["rho0tau0GenerateH"] = generate([rho0, tau0], G.degree, cap=h_order).order() == h_order
    verdicts["tau0InvertsA"] = a.conjugate(tau0) == ~a
    verdicts["exponentsCoprime"] = gcd(i, a_order) == 1 and gcd(j, b_order) == 1

    match = match_hall_shape(H, rho0, tau0)
    row, kappa_name = _row_and_kappa(match, rho0, tau0)
    gens = match.generators
    a_elems = [a ** t for t in range(a_order)]
    kappa = {"b*rho0": b * rho0}.get(kappa_name)
    if kappa is None:
        kappa = b
        for sym in kappa_name.split("*")[1:]:
            kappa = kappa * gens[sym]
    m2p = _centralized_part(a_elems, kappa)
    a_prime = _centralized_part(a_elems, b * rho0)
    if m2p != a_prime:
        notes.append(f"|C_<a>(<kappa>)| = {m2p} differs from |C_<a>(<b rho0>)| = {a_prime}")
    table = _table_prediction(row, match, rho0.order(), b_order, a_order, m2p)
    formula = (a_prime * b_order * rho0.order(), 2 * a_order * commutator(rho0, tau0).order())
    computed = M.type
    if formula != computed:
        raise StructureViolation(f"predicted type {formula} differs from the computed type {computed}")
    verdicts["formulaTypeMatches"] = True
    verdicts["tableTypeMatches"] = table == computed
    verdicts["rowConditions"] = _row_conditions(row, p, a_order, m2p)
    std = _standard_pair(row, a, b, match, rho0, tau0)
    try:
        verdicts["standardPairType"] = make_map(G, *std).type == table
    except BirotaryError as exc:
        verdicts["standardPairType"] = False
        notes.append(f"standard pair rejected: {exc}")
    return SolvableDecomposition(G, p, K, H, a, b, g, i, j, rho0, tau0, match, row, kappa_name, std,
                                 a_order, b_order, m2p, a_prime, table, formula, computed, verdicts, notes)


# non-solvable groups

def num_membership(q: int) -> bool:
    """q is a power of 2 at least 4, a Mersenne prime or a Fermat prime."""
    if q < 3:
        return False
    if q >= 4 and is_power_of(q, 2):
        return True
    return is_prime(q) and (is_power_of(q + 1, 2) or is_power_of(q - 1, 2))


def odd_case_data(q: int, p: int) -> dict:
    def near(delta: int) -> bool:
        half = q - delta
        return half > 0 and half % 2 == 0 and is_power_of(half // 2, p) and half // 2 > 1 and is_prime(q)

    return {"q": q, "q=p^t": is_power_of(q, p) and q > 1,
            "q=2p^t+1 prime": near(1), "q=2p^t-1 prime": near(-1)}


def psl_candidates(order: int) -> list[int]:
    return [q for q in range(2, MAX_LINEAR_Q + 1) if is_prime_power(q) and psl_order(q) == order and q > 3]


@dataclass
class NonSolvableReport:
    group: PermutationGroup
    p: int
    R: PermutationGroup
    D: PermutationGroup
    f: int
    q_values: list[int]
    isomorphisms: dict[int, list[str]]
    case: str | None
    cases_satisfied: list[str]
    num: dict[int, bool]
    odd_data: list[dict]
    verdicts: dict[str, bool] = field(default_factory=dict)

    @property
    def q(self) -> int:
        return self.q_values[0]

    def to_dict(self) -> dict:
        return {"R": self.R.order(), "D": self.D.order(), "f": self.f, "q": self.q_values,
                "isomorphisms": {str(q): imgs for q, imgs in self.isomorphisms.items()},
                "case": self.case, "casesSatisfied": list(self.cases_satisfied),
                "numMembership": {str(q): v for q, v in self.num.items()},
                "oddCase": self.odd_data, "verdicts": dict(self.verdicts)}


def _splits_off_radical(G: PermutationGroup, R: PermutationGroup, D: PermutationGroup, RD: PermutationGroup) -> bool:
    """G = R x L for some L containing D with index 2."""
    if R.order() == 1:
        return True
    RD.materialize()
    target = 2 * D.order()
    for t in centralizer(G, R.generators).materialize():
        if t in RD:
            continue
        L = generate(list(D.generators) + [t], G.degree, cap=G.order())
        if L.order() == target and intersection(L, R).order() == 1:
            return True
    return False


def classify_nonsolvable(G: PermutationGroup, rho: Permutation, tau: Permutation, p: int) -> NonSolvableReport:
    if is_solvable(G):
        raise Solvable(f"{G.name or 'group'} is solvable")
    if p_core(G, p).order() != 1:
        raise PreconditionFailed(f"O_{p}(G) is not trivial")
    make_map(G, rho, tau)
    n = G.order()
    R = solvable_radical(G)
    D = perfect_residual(G)
    if intersection(R, D).order() != 1:
        raise StructureViolation("rad(G) meets the perfect residual nontrivially")
    RD = generate(list(R.generators) + list(D.generators), G.degree, cap=n)
    f = n // RD.order()
    if f > 2:
        raise StructureViolation(f"|G : R x D| = {f} exceeds 2")
    isos: dict[int, list[str]] = {}
    for q in psl_candidates(D.order()):
        P = psl2(q)
        iso = find_isomorphism(P, D)
        if iso is not None:
            isos[q] = [iso(g).cycle_string() for g in P.generators]
    if not isos:
        raise StructureViolation(f"perfect residual of order {D.order()} is not PSL(2,q) with q <= {MAX_LINEAR_Q}")
    qs = sorted(isos)
    num = {q: num_membership(q) for q in qs}
    odd = [odd_case_data(q, p) for q in qs] if p % 2 else []
    r_cyclic_odd = is_cyclic(R) and R.order() % 2 == 1
    in_num = any(num.values())
    cases = []
    verdicts: dict[str, bool] = {"radicalMeetsResidualTrivially": True, "indexAtMost2": True}
    if p % 2:
        odd_q = any(d["q=p^t"] or d["q=2p^t+1 prime"] or d["q=2p^t-1 prime"] for d in odd)
        if f == 1 and r_cyclic_odd and odd_q:
            cases.append("i")
        verdicts["directProductWithCyclic"] = (f == 1 and is_cyclic(R) and gcd(R.order(), D.order()) == 1)
    else:
        if f == 1 and in_num:
            cases.append("ii")
        if f == 2 and in_num:
            if _splits_off_radical(G, R, D, RD):
                cases.append("iii")
            Q, _ = quotient(G, D)
            if p_core(Q, 2).order() == 1:
                cases.append("iv")
    hypothesis = is_p1_plus(G, rho, tau, p)
    verdicts["hypothesis"] = hypothesis
    verdicts["caseFound"] = bool(cases)
    if hypothesis and not cases:
        raise StructureViolation("pair satisfies the hypothesis but no case applies")
    return NonSolvableReport(G, p, R, D, f, qs, isos, cases[0] if cases else None, cases, num, odd, verdicts)


# pipeline

@dataclass
class Classification:
    branch: str
    p: int
    input_report: dict
    pcore_order: int
    quotient_order: int
    solvable: SolvableDecomposition | None = None
    nonsolvable: NonSolvableReport | None = None
    tag: str | None = None
    computed_type: tuple[int, int] | None = None
    exponents: dict | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def row(self) -> int | None:
        return self.solvable.row if self.solvable else None

    @property
    def case(self) -> str | None:
        return self.nonsolvable.case if self.nonsolvable else None

    def to_dict(self) -> dict:
        out = {"input": self.input_report, "pCoreOrder": self.pcore_order,
               "quotientOrder": self.quotient_order, "branch": self.branch}
        if self.solvable:
            s = self.solvable
            out.update(row=s.row, decomposition=s.to_dict(), predictedType=list(s.formula_type),
                       computedType=list(s.computed_type), verdicts=dict(s.verdicts))
        elif self.nonsolvable:
            ns = self.nonsolvable
            out.update(case=ns.case, decomposition=ns.to_dict(), predictedType=None,
                       computedType=list(self.computed_type) if self.computed_type else None,
                       verdicts=dict(ns.verdicts))
        else:
            out.update(tag=self.tag, computedType=list(self.computed_type) if self.computed_type else None,
                       verdicts={})
        out["exponents"] = self.exponents
        out["notes"] = list(self.notes)
        return out


def _exponent(full: int, reduced: int, p: int) -> int | None:
    if full % reduced:
        return None
    r = full // reduced
    return p_adic(r, p) if is_power_of(r, p) else None


def classify(X: PermutationGroup, x: Permutation, y: Permutation, p: int) -> Classification:
    if not is_prime(p):
        raise PreconditionFailed(f"p = {p} is not prime")
    M = make_map(X, x, y)
    inp = {"group": X.name, "order": M.order, "x": x.cycle_string(), "y": y.cycle_string(), "p": p,
           "k": M.k, "m": M.m, "chi": M.chi}
    G, rho, tau, N = reduce_by_pcore(X, x, y, p)
    out = Classification("", p, inp, N.order(), G.order())
    if G.order() == 1:
        out.branch = "trivial"
        out.notes.append(f"X is a {p}-group, so X/O_{p}(X) is trivial")
        return out
    if tau.is_identity():
        out.branch = "abelian"
        out.tag = "degenerate"
        out.notes.append(f"y lies in O_{p}(X); the quotient is cyclic with {DegenerateMap(G, rho).semi_edges} "
                         "semi-edges")
        return out
    Mbar = make_map(G, rho, tau)
    out.computed_type = Mbar.type
    out.exponents = {"alpha": _exponent(M.k, Mbar.k, p), "beta": _exponent(M.m, Mbar.m, p)}
    if G.is_abelian():
        out.branch = "abelian"
        out.tag = abelian_tag(G, rho, tau)
    elif is_solvable(G):
        out.branch = "solvable"
        out.solvable = classify_solvable(G, rho, tau, p)
    else:
        out.branch = "nonsolvable"
        out.nonsolvable = classify_nonsolvable(G, rho, tau, p)
    return out


# structural checks

def metacyclic_order_check(G: PermutationGroup, x: Permutation, y: Permutation) -> dict:
    """For G = <x>:<y> with <x> = <[x,y]> and coprime orders, |x^i y| = |y| for every i."""
    kx, ky = x.order(), y.order()
    c = commutator(x, y)
    xs = [x ** t for t in range(kx)]
    if c not in set(xs) or c.order() != kx:
        raise PreconditionFailed("<[x,y]> is not <x>")
    if gcd(kx, ky) != 1:
        raise PreconditionFailed(f"gcd(|x|, |y|) = {gcd(kx, ky)}")
    if x.conjugate(y) not in set(xs):
        raise PreconditionFailed("<x> is not normalized by y")
    if G.order() != kx * ky:
        raise PreconditionFailed("G is not <x>:<y>")
    orders = [(xi * y).order() for xi in xs]
    report = {"|x|": kx, "|y|": ky, "orders": orders, "allEqual": all(o == ky for o in orders)}
    if ky == 2:
        report["inverts"] = x.conjugate(y) == ~x
    return report


def generation_criterion_check(dec: SolvableDecomposition) -> dict:
    """Compare <a^i b^j rho0, tau0> = G with the arithmetic criterion over all choices."""
    G, H, a, b = dec.group, dec.H, dec.a, dec.b
    n = G.order()
    invs = [t for t in H.materialize() if t.order() == 2]
    total = gens = 0
    mismatches = []
    a_inv = ~a
    for i in range(dec.a_order):
        ai = a ** i
        for j in range(dec.b_order):
            bj = b ** j
            for r0 in H.elements:
                for t0 in invs:
                    total += 1
                    closure = generate([ai * bj * r0, t0], G.degree, cap=n).order() == n
                    criterion = (generate([r0, t0], G.degree, cap=H.order()).order() == H.order()
                                 and a.conjugate(t0) == a_inv
                                 and gcd(i, dec.a_order) == 1 and gcd(j, dec.b_order) == 1)
                    gens += closure
                    if closure != criterion:
                        mismatches.append({"i": i, "j": j, "rho0": r0.cycle_string(), "tau0": t0.cycle_string(),
                                           "closure": closure, "criterion": criterion})
    return {"cases": total, "generating": gens, "mismatches": mismatches}
