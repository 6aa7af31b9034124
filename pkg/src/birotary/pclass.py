"""Membership tests for the classes P0, P1, P1+, P2, P2+ with witnesses."""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, lcm

from .analysis import SylowWitness, inverts, sylow_subgroup
from .errors import NotGenerating, NotInvolution
from .ntheory import is_power_of, p_adic, prime_divisors
from .perm import Permutation, PermutationGroup, commutator, generate


@dataclass
class P1Witness:
    n: int
    h1_order: int
    h1_shape: str
    h1_generators: list[Permutation]
    h2_order: int
    h2_shape: str
    h2_generators: list[Permutation]

    def to_dict(self) -> dict:
        return {"n": self.n,
                "H1": {"order": self.h1_order, "shape": self.h1_shape,
                       "generators": [g.cycle_string() for g in self.h1_generators]},
                "H2": {"order": self.h2_order, "shape": self.h2_shape,
                       "generators": [g.cycle_string() for g in self.h2_generators]}}


@dataclass
class PClassReport:
    p: int
    verdicts: dict[str, bool | None] = field(default_factory=dict)
    p0_exponent: int | None = None
    p1_witness: P1Witness | None = None
    sylow: list[SylowWitness] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"p": self.p, "verdicts": dict(self.verdicts), "P0": {"n": self.p0_exponent},
                "P1": self.p1_witness.to_dict() if self.p1_witness else None,
                "P2": [{"prime": w.prime, "order": w.order, "shape": w.shape} for w in self.sylow]}


def _generates(G: PermutationGroup, gens) -> bool:
    n = G.order()
    return generate(gens, G.degree, cap=n).order() == n


def p0_value(G: PermutationGroup, rho: Permutation, tau: Permutation) -> int:
    """|G|(1/|rho| + 1/|<tau, tau^rho>| - 1/|tau|) as an exact integer."""
    n = G.order()
    h1 = generate([tau, tau.conjugate(rho)], G.degree, cap=n).order()
    return n // rho.order() + n // h1 - n // tau.order()


def is_p0(G: PermutationGroup, rho: Permutation, tau: Permutation, p: int) -> tuple[bool, int | None]:
    if tau.order() != 2:
        raise NotInvolution(f"|tau| = {tau.order()}")
    if not _generates(G, [rho, tau]):
        raise NotGenerating("<rho, tau> is a proper subgroup")
    v = p0_value(G, rho, tau)
    if v < 0 and is_power_of(-v, p) and -v > 1:
        return True, p_adic(-v, p)
    return False, None


def _p_exponent(order: int, l: int, p: int) -> int | None:
    """n >= 0 with order = p^n * l, or None."""
    if order % l:
        return None
    q = order // l
    return p_adic(q, p) if is_power_of(q, p) else None


def _cyclic_witnesses(G: PermutationGroup) -> dict[int, Permutation]:
    out: dict[int, Permutation] = {}
    for g, o in G.element_orders().items():
        out.setdefault(o, g)
    return out


def _dihedral_witnesses(G: PermutationGroup) -> dict[int, tuple[Permutation, Permutation]]:
    """Order 2n -> (c, t) with |c| = n, t an involution outside <c> inverting c."""
    out: dict[int, tuple[Permutation, Permutation]] = {}
    invs = G.involutions()
    by_order: dict[int, list[Permutation]] = {}
    for g, o in G.element_orders().items():
        by_order.setdefault(o, []).append(g)
    for n in sorted(by_order):
        done: set[Permutation] = set()
        for c in by_order[n]:
            if c in done:
                continue
            # one test per cyclic subgroup: its generators give the same answer
            powers, g = [], c.identity(len(c))
            for _ in range(n):
                powers.append(g)
                g = g * c
            done.update(powers[i] for i in range(1, n) if gcd(i, n) == 1)
            pset = set(powers)
            t = next((t for t in invs if t not in pset and inverts(t, c)), None)
            if t is not None:
                out[2 * n] = (c, t)
                break
    return out


def is_p1(G: PermutationGroup, p: int) -> tuple[bool, P1Witness | None]:
    """Smallest (|H1|, |H2|) in lexicographic order with |G| = p^n lcm(|H1|, |H2|)."""
    order = G.order()
    cyc = _cyclic_witnesses(G)
    dih = _dihedral_witnesses(G)
    cands: dict[int, tuple[str, list[Permutation]]] = {}
    for o, (c, t) in dih.items():
        cands[o] = ("dihedral", [c, t])
    for o, g in cyc.items():
        cands[o] = ("cyclic", [g])  # cyclic wins ties for a simpler witness
    sizes = sorted(cands)
    for a in sizes:
        for b in sizes:
            if b < a:
                continue
            n = _p_exponent(order, lcm(a, b), p)
            if n is not None:
                s1, g1 = cands[a]
                s2, g2 = cands[b]
                if a == 1:
                    g1 = []
                if b == 1:
                    g2 = []
                return True, P1Witness(n, a, s1 if a > 1 else "trivial", g1, b, s2 if b > 1 else "trivial", g2)
    return False, None


def p1_with_respect_to(G: PermutationGroup, H1: PermutationGroup, H2: PermutationGroup, p: int) -> int | None:
    """n with |G| = p^n lcm(|H1|, |H2|) when that holds, else None.  Shapes are not rechecked."""
    return _p_exponent(G.order(), lcm(H1.order(), H2.order()), p)


def _plus_conditions(G: PermutationGroup, rho: Permutation, tau: Permutation, p: int) -> bool:
    if tau.order() > 2:
        raise NotInvolution(f"|tau| = {tau.order()}")
    if not _generates(G, [rho, tau]):
        raise NotGenerating("<rho, tau> is a proper subgroup")
    if p % 2 and not _generates(G, [commutator(rho, tau), rho]):
        return False
    return True


def is_p1_plus(G: PermutationGroup, rho: Permutation, tau: Permutation, p: int) -> bool:
    if not _plus_conditions(G, rho, tau, p):
        return False
    h1 = generate([tau, tau.conjugate(rho)], G.degree, cap=G.order()).order()
    return _p_exponent(G.order(), lcm(h1, rho.order()), p) is not None


def is_p2(G: PermutationGroup, p: int) -> tuple[bool, list[SylowWitness]]:
    witnesses = []
    ok = True
    for r in prime_divisors(G.order()):
        if r == p:
            continue
        w = sylow_subgroup(G, r)
        witnesses.append(w)
        if w.shape == "other":
            ok = False
    return ok, witnesses


def is_p2_plus(G: PermutationGroup, rho: Permutation, tau: Permutation, p: int) -> bool:
    if not _plus_conditions(G, rho, tau, p):
        return False
    return is_p2(G, p)[0]


def pclass_report(G: PermutationGroup, p: int, pair=None) -> PClassReport:
    rep = PClassReport(p)
    ok1, wit = is_p1(G, p)
    ok2, syl = is_p2(G, p)
    rep.verdicts["P1"], rep.p1_witness = ok1, wit
    rep.verdicts["P2"], rep.sylow = ok2, syl
    if pair is not None:
        rho, tau = pair
        if tau.order() == 2:
            rep.verdicts["P0"], rep.p0_exponent = is_p0(G, rho, tau, p)
        else:
            rep.verdicts["P0"] = False
        rep.verdicts["P1+"] = is_p1_plus(G, rho, tau, p)
        rep.verdicts["P2+"] = is_p2_plus(G, rho, tau, p)
    else:
        rep.verdicts.update({"P0": None, "P1+": None, "P2+": None})
    return rep
