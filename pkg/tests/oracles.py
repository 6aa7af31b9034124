"""Brute-force references that share no code path with the package's algorithms.

Everything here works on explicit element lists with naive loops: closure
by repeated multiplication, every subgroup as a join of cyclic subgroups,
normality by conjugating every element.
"""
from __future__ import annotations

from math import gcd


def mul(p, q):
    return tuple(q[i] for i in p)


def inv(p):
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def ident(n):
    return tuple(range(n))


def order(p):
    e = ident(len(p))
    k, q = 1, tuple(p)
    while q != e:
        q = mul(q, p)
        k += 1
    return k


def closure(gens, n):
    e = ident(n)
    seen = {e}
    frontier = [e]
    gens = [tuple(g) for g in gens]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                x = mul(h, g)
                if x not in seen:
                    seen.add(x)
                    nxt.append(x)
        frontier = nxt
    return frozenset(seen)


def all_subgroups(elements):
    """Every subgroup, found as joins of cyclic subgroups until nothing new appears.

    Each subgroup carries a short generator list so joins stay cheap.
    """
    elements = [tuple(g) for g in elements]
    n = len(elements[0])
    cyc: dict[frozenset, tuple] = {}
    for g in elements:
        C = closure([g], n)
        cyc.setdefault(C, (g,))
    subs = dict(cyc)
    frontier = dict(cyc)
    while frontier:
        new = {}
        for S, gens in frontier.items():
            for C, (c,) in cyc.items():
                if C <= S:
                    continue
                J = closure(gens + (c,), n)
                if J not in subs and J not in new:
                    new[J] = gens + (c,)
        subs.update(new)
        frontier = new
    return set(subs)


def is_normal(S, elements):
    return all(mul(mul(inv(g), s), g) in S for g in elements for s in S)


def normal_subgroups(elements):
    elements = [tuple(g) for g in elements]
    return [S for S in all_subgroups(elements) if is_normal(S, elements)]


def derived(S):
    S = list(S)
    n = len(S[0])
    comms = {mul(mul(inv(a), inv(b)), mul(a, b)) for a in S for b in S}
    return closure(comms, n)


def solvable(S):
    S = frozenset(S)
    while len(S) > 1:
        D = derived(S)
        if D == S:
            return False
        S = D
    return True


def is_power(n, p):
    while n % p == 0:
        n //= p
    return n == 1


class Lattice:
    """All subgroups and normal subgroups of one explicit group, computed once."""

    def __init__(self, elements):
        self.elements = [tuple(g) for g in elements]
        self.subgroups = all_subgroups(self.elements)
        self.normal = [S for S in self.subgroups if is_normal(S, self.elements)]

    def p_core_order(self, p):
        return max(len(N) for N in self.normal if is_power(len(N), p))

    def radical_order(self):
        return max(len(N) for N in self.normal if solvable(N))

    def sylow_order(self, p):
        return max(len(S) for S in self.subgroups if is_power(len(S), p))


def shape(S):
    """'cyclic', 'dihedral' or 'other' by direct characterization."""
    S = list(S)
    n = len(S)
    orders = {g: order(g) for g in S}
    if n in orders.values():
        return "cyclic"
    if n % 2 == 0:
        half = n // 2
        for c in S:
            if orders[c] != half:
                continue
            C = closure([c], len(c))
            if all(orders[g] == 2 for g in S if g not in C):
                return "dihedral"
    return "other"


def coprime(a, b):
    return gcd(a, b) == 1


def pinned_isomorphic(x1, y1, x2, y2) -> bool:
    """Is there an isomorphism <x1,y1> -> <x2,y2> with x1 -> x2, y1 -> y2?

    Walks the Cayley graph of the first group and the second in lockstep;
    the map is well defined exactly when no vertex gets two images.
    """
    x1, y1, x2, y2 = (tuple(g) for g in (x1, y1, x2, y2))
    e1, e2 = ident(len(x1)), ident(len(x2))
    image = {e1: e2}
    frontier = [e1]
    while frontier:
        nxt = []
        for g in frontier:
            h = image[g]
            for s, t in ((x1, x2), (y1, y2)):
                gs, ht = mul(g, s), mul(h, t)
                if gs in image:
                    if image[gs] != ht:
                        return False
                else:
                    image[gs] = ht
                    nxt.append(gs)
        frontier = nxt
    return len(set(image.values())) == len(image) == len(closure([x2, y2], len(x2)))


def centralizer_order(g, elements):
    g = tuple(g)
    return sum(1 for h in elements if mul(g, tuple(h)) == mul(tuple(h), g))
