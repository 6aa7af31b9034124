"""Structural invariants of materialized permutation groups."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import CapExceeded, NotFound, NotSolvable
from .ntheory import is_power_of, p_part, prime_divisors
from .perm import (
    Homomorphism,
    Permutation,
    PermutationGroup,
    commutator,
    conjugate,
    extend_images,
    generate,
    normal_closure,
)


def trivial_subgroup(G: PermutationGroup, name: str = "1") -> PermutationGroup:
    return generate([], G.degree, name=name)


@dataclass(frozen=True)
class DerivedSeries:
    terms: tuple[PermutationGroup, ...]

    @property
    def length(self) -> int:
        return len(self.terms) - 1

    def orders(self) -> list[int]:
        return [T.order() for T in self.terms]


def derived_subgroup(G: PermutationGroup) -> PermutationGroup:
    gens = G.generators
    seeds = [commutator(a, b) for i, a in enumerate(gens) for b in gens[i + 1:]]
    return normal_closure(G, seeds, name=f"{G.name}'" if G.name else "")


def derived_series(G: PermutationGroup) -> DerivedSeries:
    if "derived" in G._cache:
        return G._cache["derived"]
    terms = [G]
    while True:
        D = derived_subgroup(terms[-1])
        if D.order() == terms[-1].order():
            break
        terms.append(D)
        if D.order() == 1:
            break
    series = DerivedSeries(tuple(terms))
    G._cache["derived"] = series
    return series


def is_solvable(G: PermutationGroup) -> bool:
    return derived_series(G).terms[-1].order() == 1


def perfect_residual(G: PermutationGroup) -> PermutationGroup:
    return derived_series(G).terms[-1]


def is_perfect(G: PermutationGroup) -> bool:
    return derived_subgroup(G).order() == G.order()


def is_cyclic(G: PermutationGroup) -> bool:
    n = G.order()
    if n == 1:
        return True
    if G.is_materialized or "orders" in G._cache:
        return n in G.exponent_set()
    return any(g.order() == n for g in G.materialize())


def cyclic_generator(G: PermutationGroup) -> Permutation | None:
    n = G.order()
    if n == 1:
        return G.identity
    for g, o in G.element_orders().items():
        if o == n:
            return g
    return None


def inverts(t: Permutation, c: Permutation) -> bool:
    """True when c^t = c^-1, checked pointwise without building products."""
    # t^-1 c t == c^-1  <=>  c t c == t  (t an involution)
    return all(t[c[t[c[i]]]] == i for i in range(len(c)))


def dihedral_witness(G: PermutationGroup) -> tuple[Permutation, Permutation] | None:
    """(c, t) with <c> of index 2, t an involution outside <c> inverting c."""
    order = G.order()
    if order % 2:
        return None
    n = order // 2
    orders = G.element_orders()
    invols = [g for g, o in orders.items() if o == 2]
    seen: set[Permutation] = set()
    for c, o in orders.items():
        if o != n or c in seen:
            continue
        cyc = {c ** i for i in range(n)}
        seen |= {g for g in cyc if orders[g] == n}
        for t in invols:
            if t not in cyc and inverts(t, c):
                return c, t
    return None


def is_dihedral(G: PermutationGroup) -> bool:
    """Dihedral of order 2n, counting Z2 and the Klein group as degenerate cases."""
    return dihedral_witness(G) is not None


@dataclass(frozen=True)
class SylowWitness:
    prime: int
    subgroup: PermutationGroup
    shape: str

    @property
    def order(self) -> int:
        return self.subgroup.order()


def group_shape(P: PermutationGroup) -> str:
    if is_cyclic(P):
        return "cyclic"
    if is_dihedral(P):
        return "dihedral"
    return "other"


def _normalizes(g: Permutation, P: PermutationGroup) -> bool:
    gi = ~g
    return all(gi * h * g in P for h in P.generators)


def sylow_subgroup(G: PermutationGroup, r: int, reverse: bool = False) -> SylowWitness:
    """Grow an r-subgroup by adjoining r-elements of its normalizer."""
    target = p_part(G.order(), r)
    key = ("sylow", r, reverse)
    if key in G._cache:
        return G._cache[key]
    orders = G.element_orders()
    cands = [g for g, o in orders.items() if o > 1 and is_power_of(o, r)]
    if reverse:
        cands.reverse()
    P = trivial_subgroup(G)
    gens: list[Permutation] = []
    while P.order() < target:
        for g in cands:
            if g in P or not _normalizes(g, P):
                continue
            gens.append(g)
            P = generate(gens, G.degree)
            break
        else:
            raise NotFound(f"Sylow {r}-growth stalled at order {P.order()}")
    P.name = f"Syl{r}({G.name})" if G.name else f"Syl{r}"
    w = SylowWitness(r, P, group_shape(P))
    G._cache[key] = w
    return w


def p_core(G: PermutationGroup, p: int) -> PermutationGroup:
    """Largest normal p-subgroup, as the intersection of the conjugates of a Sylow p-subgroup."""
    if ("core", p) in G._cache:
        return G._cache[("core", p)]
    n = G.order()
    if n % p:
        core = trivial_subgroup(G)
    elif is_power_of(n, p):
        core = G
    else:
        P = sylow_subgroup(G, p).subgroup
        keep = list(P.materialize())
        for g in G.materialize():
            gi = ~g
            keep = [x for x in keep if g * x * gi in P]
            if len(keep) == 1:
                break
        core = generate(keep, G.degree)
    core.name = f"O_{p}({G.name})" if G.name else f"O_{p}"
    G._cache[("core", p)] = core
    return core


def solvable_radical(G: PermutationGroup) -> PermutationGroup:
    """Subgroup generated by all g with solvable normal closure."""
    if "radical" in G._cache:
        return G._cache["radical"]
    if is_solvable(G):
        R = G
    else:
        R = trivial_subgroup(G)
        for cls in G.conjugacy_classes():
            g = cls[0]
            if g in R:
                continue
            N = normal_closure(G, list(R.generators) + [g])
            if is_solvable(N):
                R = N
        R.name = f"rad({G.name})" if G.name else "rad"
    G._cache["radical"] = R
    return R


def hall_subgroup_23(G: PermutationGroup) -> PermutationGroup:
    """A Hall {2,3}-subgroup of a solvable group, by a deterministic conjugate sweep."""
    if not is_solvable(G):
        raise NotSolvable(f"{G.name or 'group'} is not solvable")
    n = G.order()
    n2, n3 = p_part(n, 2), p_part(n, 3)
    if n2 * n3 == n:
        return G
    P2 = sylow_subgroup(G, 2).subgroup
    P3 = sylow_subgroup(G, 3).subgroup
    if n3 == 1:
        return P2
    if n2 == 1:
        return P3
    for g in G.materialize():
        conj = [conjugate(h, g) for h in P3.generators]
        try:
            H = generate(list(P2.generators) + conj, G.degree, cap=n2 * n3)
        except CapExceeded:
            continue
        if H.order() == n2 * n3:
            H.name = "Hall23"
            return H
    raise NotFound("no Hall {2,3}-subgroup found; the group cannot be solvable")


# isomorphism search

def fingerprint(G: PermutationGroup, g: Permutation) -> tuple[int, int]:
    return G.element_orders()[g], G.class_size(g)


def small_generating_set(G: PermutationGroup, max_tries: int = 400) -> list[Permutation]:
    """Deterministic small generating set; two elements whenever a quick search finds them."""
    if "smallgens" in G._cache:
        return G._cache["smallgens"]
    n = G.order()
    orders = G.element_orders()
    by_order = sorted(G.materialize(), key=lambda g: -orders[g])
    result: list[Permutation] | None = None
    if n == 1:
        result = []
    elif orders[by_order[0]] == n:
        result = [by_order[0]]
    else:
        tries = 0
        firsts = [cls[0] for cls in G.conjugacy_classes()]
        firsts.sort(key=lambda g: -orders[g])
        for g1 in firsts[:4]:
            for g2 in by_order:
                if g2 == g1 or orders[g2] == 1:
                    continue
                tries += 1
                if tries > max_tries:
                    break
                if generate([g1, g2], G.degree, cap=n).order() == n:
                    result = [g1, g2]
                    break
            if result is not None or tries > max_tries:
                break
        if result is None:
            result = list(generate(by_order, G.degree).generators)
    G._cache["smallgens"] = result
    return result


def _search(G: PermutationGroup, H: PermutationGroup, gens: list[Permutation],
            pinned: list[Permutation | None], find_all: bool) -> list[Homomorphism]:
    n = G.order()
    if n != H.order():
        return []
    G.materialize()
    H.materialize()
    g_orders, h_orders = G.element_orders(), H.element_orders()
    if sorted(g_orders.values()) != sorted(h_orders.values()):
        return []
    gfp = sorted(fingerprint(G, g) for g in G.materialize())
    hfp = sorted(fingerprint(H, h) for h in H.materialize())
    if gfp != hfp:
        return []
    by_fp: dict[tuple[int, int], list[Permutation]] = {}
    for h in H.materialize():
        by_fp.setdefault(fingerprint(H, h), []).append(h)
    cands = []
    for g, pin in zip(gens, pinned):
        if pin is not None:
            if pin not in H or fingerprint(H, pin) != fingerprint(G, g):
                return []
            cands.append([pin])
        else:
            cands.append(by_fp.get(fingerprint(G, g), []))
    # product orders of generator pairs give a cheap extra filter
    pair_orders = {(i, j): (gens[i] * gens[j]).order()
                   for i in range(len(gens)) for j in range(i)}
    found: list[Homomorphism] = []
    imgs: list[Permutation] = []

    def rec(i: int) -> bool:
        if i == len(gens):
            table = extend_images(gens, imgs, H.degree, limit=n)
            if table is None or len(table) != n or len(set(table.values())) != n:
                return False
            found.append(Homomorphism(G, H, list(imgs), source_generators=gens, table=table))
            return not find_all
        for c in cands[i]:
            if any((imgs[j] * c).order() != pair_orders[(i, j)] for j in range(i)):
                continue
            imgs.append(c)
            stop = rec(i + 1)
            imgs.pop()
            if stop:
                return True
        return False

    rec(0)
    return found


def find_isomorphism(G: PermutationGroup, H: PermutationGroup, pinned=None) -> Homomorphism | None:
    """An isomorphism G -> H, optionally forced to send given elements to given images.

    ``pinned`` is a mapping or a sequence of (source, image) pairs.
    """
    if G.order() != H.order():
        return None
    pins = list(pinned.items()) if isinstance(pinned, dict) else list(pinned or [])
    gens = [s for s, _ in pins]
    imgs: list[Permutation | None] = [t for _, t in pins]
    if not pins or generate(gens, G.degree).order() != G.order():
        for g in small_generating_set(G):
            if g not in gens:
                gens.append(g)
                imgs.append(None)
    found = _search(G, H, gens, imgs, find_all=False)
    return found[0] if found else None


def is_isomorphic(G: PermutationGroup, H: PermutationGroup) -> bool:
    return find_isomorphism(G, H) is not None


def automorphisms(G: PermutationGroup, generators: list[Permutation] | None = None) -> list[Homomorphism]:
    """All automorphisms, each determined by the images of a fixed generating set."""
    gens = list(generators) if generators is not None else small_generating_set(G)
    if not gens:
        return [Homomorphism(G, G, [], source_generators=[], table={G.identity: G.identity})]
    return _search(G, G, gens, [None] * len(gens), find_all=True)


def element_in_product(g: Permutation, A: PermutationGroup, B: PermutationGroup):
    """Write g = a*b with a in A, b in B, or return None."""
    for b in B.materialize():
        a = g * ~b
        if a in A:
            return a, b
    return None


def pi_part(n: int, primes) -> int:
    out = 1
    for p in primes:
        out *= p_part(n, p)
    return out


def coprime_to_6_subgroup(G: PermutationGroup) -> PermutationGroup:
    """Subgroup generated by all elements of order coprime to 6."""
    seeds = [g for g, o in G.element_orders().items() if o > 1 and gcd(o, 6) == 1]
    return generate(seeds, G.degree, name="K")


def sylow_shapes(G: PermutationGroup, exclude: int | None = None) -> list[SylowWitness]:
    return [sylow_subgroup(G, r) for r in prime_divisors(G.order()) if r != exclude]
