"""Concrete permutation groups: cyclic, dihedral, products, and the small families used by maps."""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import CapExceeded, InvalidAction
from .perm import Permutation, PermutationGroup, default_cap, extend_images

_new = tuple.__new__


def cycle_perm(n: int, shift: int = 1) -> Permutation:
    return Permutation([(i + shift) % n for i in range(n)]) if n else Permutation([])


def cyclic(n: int) -> PermutationGroup:
    """Regular representation of Z_n; generator index 0."""
    if n < 1:
        raise ValueError("n must be positive")
    return PermutationGroup([cycle_perm(n)], n, name=f"Z{n}", order=n)


def dihedral_group(n: int) -> PermutationGroup:
    """Dihedral group of order 2n with generators (rotation, reflection).

    Natural action on n points for n >= 3; regular action for the
    degenerate orders 2 and 4.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        r, s = Permutation([0, 1]), Permutation([1, 0])
    elif n == 2:
        r, s = Permutation([1, 0, 3, 2]), Permutation([2, 3, 0, 1])
    else:
        r = cycle_perm(n)
        s = Permutation([(-i) % n for i in range(n)])
    return PermutationGroup([r, s], len(r), name=f"D{2 * n}", order=2 * n)


def klein_four() -> PermutationGroup:
    G = dihedral_group(2)
    G.name = "V4"
    return G


def symmetric_group(n: int) -> PermutationGroup:
    from math import factorial
    if n < 2:
        return PermutationGroup([], max(n, 1), name=f"S{n}", order=1)
    gens = [Permutation.from_cycles([(0, 1)], n), cycle_perm(n)]
    return PermutationGroup(gens, n, name=f"S{n}", order=factorial(n))


def alternating_group(n: int) -> PermutationGroup:
    from math import factorial
    if n < 3:
        return PermutationGroup([], max(n, 1), name=f"A{n}", order=1)
    if n == 3:
        return PermutationGroup([cycle_perm(3)], 3, name="A3", order=3)
    long = cycle_perm(n) if n % 2 else Permutation([0] + [(i % (n - 1)) + 1 for i in range(1, n)])
    gens = [Permutation.from_cycles([(0, 1, 2)], n), long]
    return PermutationGroup(gens, n, name=f"A{n}", order=factorial(n) // 2)


def pair_element(a: Permutation, b: Permutation) -> Permutation:
    """(a, b) in the direct product acting on the disjoint union of point sets."""
    off = len(a)
    return _new(Permutation, tuple(a) + tuple(off + i for i in b))


def direct_product(A: PermutationGroup, B: PermutationGroup, name: str = "") -> PermutationGroup:
    """A x B on the disjoint union; generators are A's (padded) followed by B's."""
    ea, eb = A.identity, B.identity
    gens = [pair_element(a, eb) for a in A.generators] + [pair_element(ea, b) for b in B.generators]
    order = None
    if A.analytic_order is not None and B.analytic_order is not None:
        order = A.analytic_order * B.analytic_order
    label = name or (f"{A.name} x {B.name}" if A.name and B.name else "")
    return PermutationGroup(gens, A.degree + B.degree, name=label, order=order)


@dataclass
class SemidirectSpec:
    """N : H where each generator of H acts on N through images of N's generators."""
    normal: PermutationGroup
    complement: PermutationGroup
    action: list[list[Permutation]]
    name: str = ""


@dataclass
class Semidirect:
    group: PermutationGroup
    normal_generators: list[Permutation]
    complement_generators: list[Permutation]
    normal_points: int = 0
    element_index: dict = field(default_factory=dict, repr=False)


def semidirect_product(spec: SemidirectSpec, cap: int | None = None) -> Semidirect:
    """Realize N : H on N's elements (right regular) plus H's own points.

    The conjugate of n by h is the action image of n, i.e. h^-1 n h = phi_h(n).
    """
    N, H = spec.normal, spec.complement
    if len(spec.action) != len(H.generators):
        raise InvalidAction("one action table per complement generator required")
    elems = N.materialize()
    idx = {g: i for i, g in enumerate(elems)}
    nN = len(elems)
    hid = list(range(H.degree))
    eH = [nN + i for i in hid]

    def lift_n(n: Permutation) -> Permutation:
        return _new(Permutation, [idx[g * n] for g in elems] + eH)

    normal_gens = [lift_n(n) for n in N.generators]
    comp_gens = []
    for h, images in zip(H.generators, spec.action):
        if len(images) != len(N.generators):
            raise InvalidAction("action table must give one image per normal generator")
        for img in images:
            if img not in N:
                raise InvalidAction("action image lies outside the normal subgroup")
        table = extend_images(list(N.generators), list(images), N.degree)
        if table is None or len(set(table.values())) != nN or len(table) != nN:
            raise InvalidAction("action image is not an automorphism of the normal subgroup")
        comp_gens.append(_new(Permutation, [idx[table[g]] for g in elems] + [nN + h[i] for i in hid]))
    order = N.order() * H.order()
    label = spec.name or (f"{N.name}:{H.name}" if N.name and H.name else "")
    G = PermutationGroup(normal_gens + comp_gens, nN + H.degree, name=label)
    cap = default_cap() if cap is None else cap
    if order <= cap:
        try:
            G.materialize(cap=order)
        except CapExceeded:
            raise InvalidAction("action does not respect the relations of the complement") from None
    G.analytic_order = order
    return Semidirect(G, normal_gens, comp_gens, nN, idx)


def metacyclic(n: int, m: int, r: int, name: str = "") -> Semidirect:
    """Z_n : Z_m with the complement generator acting as a -> a^r."""
    if pow(r, m, n) != 1 % n:
        raise InvalidAction(f"{r}^{m} is not 1 mod {n}")
    N, H = cyclic(n), cyclic(m)
    a = N.generators[0]
    return semidirect_product(SemidirectSpec(N, H, [[a ** r]], name=name or f"Z{n}:Z{m}"))


# order-16 groups and the 2-group families

def semidihedral16() -> tuple[PermutationGroup, Permutation, Permutation]:
    """<x, y | x^8, y^2, x^y = x^3>."""
    sd = metacyclic(8, 2, 3, name="SD16")
    return sd.group, sd.normal_generators[0], sd.complement_generators[0]


def modular16() -> tuple[PermutationGroup, Permutation, Permutation]:
    """<x, y | x^8, y^2, x^y = x^5>."""
    md = metacyclic(8, 2, 5, name="M16")
    return md.group, md.normal_generators[0], md.complement_generators[0]


def order16_groups():
    """The three order-16 maps as (group, pair, label) triples."""
    from .maps import RotaryPair
    sd, x, y = semidihedral16()
    m16, u, v = modular16()
    return [
        (sd, RotaryPair(x, y), "SD16 (x,y)"),
        (sd, RotaryPair(x * y, y), "SD16 (xy,y)"),
        (m16, RotaryPair(u, v), "M16 (x,y)"),
    ]


SEEDS16 = ("sd16", "sd16xy", "m16")


def order16_seed(seed: str):
    from .maps import RotaryPair
    if seed == "sd16":
        G, x, y = semidihedral16()
        return G, RotaryPair(x, y)
    if seed == "sd16xy":
        G, x, y = semidihedral16()
        return G, RotaryPair(x * y, y)
    if seed == "m16":
        G, x, y = modular16()
        return G, RotaryPair(x, y)
    raise ValueError(f"unknown order-16 seed {seed!r}; expected one of {SEEDS16}")


def torus_order(f: int, eps: int) -> int:
    return 2 ** (2 * f + 3 + eps)


def torus_group(f: int, eps: int, cap: int | None = None):
    """The type-(4,4) family (U : <x>) : <y> with U = Z_{2^(f+eps)} x Z_{2^f}.

    Realized on the right cosets of <x>, written (w, j) for the coset
    <x> w y^j with w in U.  Conjugation by x acts on U as
    A(s, t) = (s + 2t, -s - t) and conjugation by y as B(s, t) = (s, -s - t).
    """
    from .maps import RotaryPair
    if f < 1 or eps not in (0, 1):
        raise ValueError("need f >= 1 and eps in {0, 1}")
    order = torus_order(f, eps)
    cap = default_cap() if cap is None else cap
    nu, nv = 2 ** (f + eps), 2 ** f
    size = nu * nv

    def pt(s: int, t: int, j: int) -> int:
        return j * size + (s % nu) * nv + (t % nv)

    x_img = [0] * (2 * size)
    y_img = [0] * (2 * size)
    for s in range(nu):
        for t in range(nv):
            # coset <x> w: right multiplication by x gives <x> A(w)
            x_img[pt(s, t, 0)] = pt(s + 2 * t, -s - t, 0)
            # coset <x> w y: w y x = w (x^-1 u^-1) y, so the U-part becomes A^-1(w) - u
            # with A^-1 = -A
            x_img[pt(s, t, 1)] = pt(-(s + 2 * t) - 1, s + t, 1)
            y_img[pt(s, t, 0)] = pt(s, t, 1)
            y_img[pt(s, t, 1)] = pt(s, t, 0)
    x, y = Permutation(x_img), Permutation(y_img)
    G = PermutationGroup([x, y], 2 * size, name=f"torus({f},{eps})", order=order)
    if order > cap:
        raise CapExceeded(G.name, cap, order)
    return G, RotaryPair(x, y)


def torus_parameters_for_order(exponent: int) -> tuple[int, int]:
    """(f, eps) with 2f + 3 + eps = exponent."""
    if exponent < 5:
        raise ValueError("torus groups have order at least 2^5")
    return (exponent - 3) // 2, (exponent - 3) % 2


def composite_two_group(target_exponent: int, seed: str, cap: int | None = None):
    """X = <(x1,x2), (y1,y2)> inside X1 x X2, where X1 is an order-16 seed map
    and X2 is the torus group of order 2^target_exponent."""
    from .maps import RotaryPair
    if target_exponent < 5:
        raise ValueError("target exponent must be at least 5")
    X1, p1 = order16_seed(seed)
    f2, eps = torus_parameters_for_order(target_exponent)
    X2, p2 = torus_group(f2, eps, cap=cap)
    x = pair_element(p1.x, p2.x)
    y = pair_element(p1.y, p2.y)
    G = PermutationGroup([x, y], X1.degree + X2.degree, name=f"composite({target_exponent},{seed})")
    G.materialize(cap)
    return G, RotaryPair(x, y)


def abelian_map(n: int, kind: str):
    """Bouquet: Z_2n with y = x^n.  Dipole: Z_n x Z_2 with y the Z_2 generator."""
    from .maps import RotaryPair
    if n < 1:
        raise ValueError("n must be positive")
    if kind == "bouquet":
        G = cyclic(2 * n)
        x = G.generators[0]
        G.name = f"bouquet({n})"
        return G, RotaryPair(x, x ** n)
    if kind == "dipole":
        A, B = cyclic(n), cyclic(2)
        G = direct_product(A, B, name=f"dipole({n})")
        x = pair_element(A.generators[0], B.identity)
        y = pair_element(A.identity, B.generators[0])
        return G, RotaryPair(x, y)
    raise ValueError(f"kind must be 'bouquet' or 'dipole', not {kind!r}")
