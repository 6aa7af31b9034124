"""Bi-rotary maps Map(G, x, y) and their invariants."""
from __future__ import annotations

from dataclasses import dataclass, field

from .analysis import find_isomorphism
from .errors import CapExceeded, DivisibilityViolation, NotGenerating, NotInvolution, DegreeMismatch
from .ntheory import prime_power
from .perm import Homomorphism, Permutation, PermutationGroup, commutator, generate, quotient


@dataclass(frozen=True)
class RotaryPair:
    """A generating pair (x, y) with y an involution."""
    x: Permutation
    y: Permutation

    @property
    def commutator(self) -> Permutation:
        return commutator(self.x, self.y)

    def as_tuple(self) -> tuple[Permutation, Permutation]:
        return (self.x, self.y)


def euler_characteristic(order: int, k: int, m: int) -> int:
    """|G|(1/k - 1/2 + 1/m) as an exact integer; every term must be integral."""
    for d, label in ((k, "k"), (2, "2"), (m, "m")):
        if d <= 0 or order % d:
            raise DivisibilityViolation(f"{label} = {d} does not divide |G| = {order}")
    return order // k - order // 2 + order // m


def negative_prime_power(chi: int) -> tuple[int, int] | None:
    """(p, n) with chi = -p^n, n >= 1, or None."""
    if chi >= 0:
        return None
    return prime_power(-chi)


@dataclass
class BiRotaryMap:
    group: PermutationGroup
    pair: RotaryPair
    order: int
    k: int
    m: int
    chi: int
    vertices: int
    edges: int
    faces: int
    orientable: bool
    tags: list[str] = field(default_factory=list)

    @property
    def x(self) -> Permutation:
        return self.pair.x

    @property
    def y(self) -> Permutation:
        return self.pair.y

    @property
    def type(self) -> tuple[int, int]:
        return (self.k, self.m)

    def prime_power(self) -> tuple[int, int] | None:
        return negative_prime_power(self.chi)

    def report(self) -> dict:
        pp = self.prime_power()
        return {
            "group": self.group.name,
            "order": self.order,
            "x": self.x.cycle_string(),
            "y": self.y.cycle_string(),
            "k": self.k,
            "m": self.m,
            "chi": self.chi,
            "V": self.vertices,
            "E": self.edges,
            "F": self.faces,
            "orientable": self.orientable,
            "primePower": {"p": pp[0], "n": pp[1]} if pp else None,
            "tags": list(self.tags),
        }

    def __repr__(self) -> str:
        return (f"<BiRotaryMap {self.group.name or '?'} |G|={self.order} type=({self.k},{self.m}) "
                f"chi={self.chi}>")


@dataclass
class DegenerateMap:
    """The quotient artifact where y collapses to the identity."""
    group: PermutationGroup
    x: Permutation
    reason: str = "y maps to the identity"

    @property
    def semi_edges(self) -> int:
        return self.x.order()

    def report(self) -> dict:
        return {"group": self.group.name, "order": self.group.order(), "x": self.x.cycle_string(),
                "degenerate": True, "reason": self.reason, "semiEdges": self.semi_edges}


def abelian_tag(G: PermutationGroup, x: Permutation, y: Permutation) -> str | None:
    """'bouquet' when y lies in <x>, 'dipole' otherwise; None for non-abelian G."""
    if not G.is_abelian():
        return None
    k = x.order()
    powers = {x ** i for i in range(k)}
    return "bouquet" if y in powers else "dipole"


def make_map(G: PermutationGroup, x: Permutation, y: Permutation) -> BiRotaryMap:
    if len(x) != G.degree or len(y) != G.degree:
        raise DegreeMismatch("pair elements must act on the group's points")
    if y.order() != 2:
        raise NotInvolution(f"|y| = {y.order()}, expected 2")
    n = G.order()
    # <x,y> contains G's generators and has |G| elements exactly when <x,y> = G
    try:
        H = generate([x, y], G.degree, cap=n)
    except CapExceeded:
        raise NotGenerating("<x, y> is larger than the group") from None
    if H.order() != n or any(g not in H for g in G.generators):
        raise NotGenerating("<x, y> is not the whole group")
    if not G.is_materialized:
        G._set_elements(H.elements, H._index)
    k = x.order()
    c = commutator(x, y)
    m = 2 * c.order()
    dihedral = generate([y, y.conjugate(x)], G.degree, cap=n).order()
    if dihedral != m:
        raise DivisibilityViolation(f"|<y, y^x>| = {dihedral} but 2|[x,y]| = {m}")
    chi = euler_characteristic(n, k, m)
    V, E, F = n // k, n // 2, n // m
    assert chi == V - E + F
    orientable = generate([c, x], G.degree, cap=n).order() < n
    if orientable and chi % 2:
        raise DivisibilityViolation("orientable surface with odd Euler characteristic")
    tags = []
    tag = abelian_tag(G, x, y)
    if tag:
        tags.append(tag)
    pair = RotaryPair(x, y)
    return BiRotaryMap(G, pair, n, k, m, chi, V, E, F, orientable, tags)


def is_orientable(M: BiRotaryMap) -> bool:
    n = M.group.order()
    return generate([M.pair.commutator, M.x], M.group.degree, cap=n).order() < n


def quotient_map(M: BiRotaryMap, N: PermutationGroup) -> BiRotaryMap | DegenerateMap:
    Q, proj = quotient(M.group, N)
    xb, yb = proj(M.x), proj(M.y)
    if yb.is_identity():
        return DegenerateMap(Q, xb)
    return make_map(Q, xb, yb)


def maps_isomorphic(M1: BiRotaryMap, M2: BiRotaryMap) -> Homomorphism | None:
    """An isomorphism of groups sending (x1, y1) to (x2, y2), if one exists."""
    if M1.order != M2.order or M1.type != M2.type:
        return None
    return find_isomorphism(M1.group, M2.group, pinned=[(M1.x, M2.x), (M1.y, M2.y)])


def prime_power_chi(M: BiRotaryMap) -> tuple[int, int] | None:
    return negative_prime_power(M.chi)


def find_rotary_pair(G: PermutationGroup, k: int | None = None, commutator_order: int | None = None,
                     predicate=None) -> RotaryPair | None:
    """First generating pair with |x| = k and |[x,y]| = commutator_order.

    x runs over conjugacy class representatives, which loses nothing since
    conjugating a pair gives an isomorphic map.
    """
    n = G.order()
    invs = G.involutions()
    for cls in G.conjugacy_classes():
        x = cls[0]
        if k is not None and x.order() != k:
            continue
        for y in invs:
            if commutator_order is not None and commutator(x, y).order() != commutator_order:
                continue
            if predicate is not None and not predicate(x, y):
                continue
            if generate([x, y], G.degree, cap=n).order() == n:
                return RotaryPair(x, y)
    return None
