"""Permutations on 0-based points and brute-force permutation groups.

Products act on the right: ``p * q`` applies ``p`` first, then ``q``, so
``(p * q)[i] == q[p[i]]``.  Conjugation is ``g^h = h^-1 g h`` and the
commutator is ``[g, h] = g^-1 h^-1 g h``.
"""
from __future__ import annotations

import os
import re
from math import lcm
from typing import Callable, Iterable, Iterator, Sequence

from .errors import CapExceeded, DegreeMismatch, NotAPermutation, NotNormal

DEFAULT_CAP = 20000
_cap_override: int | None = None

_new = tuple.__new__


def default_cap() -> int:
    """Materialization cap: explicit override, then BIROTARY_CAP, then 20000."""
    if _cap_override is not None:
        return _cap_override
    env = os.environ.get("BIROTARY_CAP")
    if env:
        try:
            val = int(env)
        except ValueError:
            val = 0
        if val >= 1:
            return val
    return DEFAULT_CAP


def set_default_cap(cap: int | None) -> None:
    global _cap_override
    if cap is not None and cap < 1:
        raise ValueError("cap must be positive")
    _cap_override = cap


class Permutation(tuple):
    """An immutable bijection of {0, ..., n-1} stored as its image array."""

    __slots__ = ()

    def __new__(cls, images: Iterable[int] = ()):
        imgs = tuple(int(i) for i in images)
        if sorted(imgs) != list(range(len(imgs))):
            raise NotAPermutation(f"not a bijection on {len(imgs)} points: {imgs}")
        return _new(cls, imgs)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return _new(cls, range(degree))

    @classmethod
    def from_cycles(cls, cycles, degree: int) -> "Permutation":
        """Build from cycle notation, either a string "(0 1 2)(3 4)" or a list of tuples."""
        if isinstance(cycles, str):
            cycles = parse_cycles(cycles)
        imgs = list(range(degree))
        seen: set[int] = set()
        for cyc in cycles:
            for a in cyc:
                if not 0 <= a < degree:
                    raise NotAPermutation(f"point {a} outside 0..{degree - 1}")
                if a in seen:
                    raise NotAPermutation(f"point {a} repeated in cycles")
                seen.add(a)
            for i, a in enumerate(cyc):
                imgs[a] = cyc[(i + 1) % len(cyc)]
        return _new(cls, imgs)

    @property
    def degree(self) -> int:
        return len(self)

    def __call__(self, point: int) -> int:
        return self[point]

    def __mul__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        if len(self) != len(other):
            raise DegreeMismatch(f"degrees {len(self)} and {len(other)} differ")
        return _new(Permutation, map(other.__getitem__, self))

    def __rmul__(self, other):
        return NotImplemented

    def __invert__(self) -> "Permutation":
        inv = [0] * len(self)
        for i, j in enumerate(self):
            inv[j] = i
        return _new(Permutation, inv)

    inverse = __invert__

    def __pow__(self, e: int) -> "Permutation":
        if e < 0:
            return (~self) ** (-e)
        result = Permutation.identity(len(self))
        base = self
        while e:
            if e & 1:
                result = _new(Permutation, map(base.__getitem__, result))
            base = _new(Permutation, map(base.__getitem__, base))
            e >>= 1
        return result

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least point."""
        seen = [False] * len(self)
        out = []
        for start in range(len(self)):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            j = self[start]
            while j != start:
                cyc.append(j)
                seen[j] = True
                j = self[j]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def order(self) -> int:
        seen = bytearray(len(self))
        result = 1
        for start in range(len(self)):
            if seen[start]:
                continue
            n = 0
            j = start
            while not seen[j]:
                seen[j] = 1
                j = self[j]
                n += 1
            result = lcm(result, n)
        return result

    def conjugate(self, h: "Permutation") -> "Permutation":
        return ~h * self * h

    def cycle_string(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)

    def __str__(self) -> str:
        return self.cycle_string()

    def __repr__(self) -> str:
        return f"Permutation({list(self)})"


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str) -> list[tuple[int, ...]]:
    text = text.strip()
    if not text or text == "()":
        return []
    if _CYCLE_RE.sub("", text).strip():
        raise NotAPermutation(f"cannot parse cycle notation {text!r}")
    out = []
    for body in _CYCLE_RE.findall(text):
        pts = body.replace(",", " ").split()
        if pts:
            out.append(tuple(int(p) for p in pts))
    return out


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Apply p first, then q."""
    return p * q


def inverse(p: Permutation) -> Permutation:
    return ~p


def conjugate(g: Permutation, h: Permutation) -> Permutation:
    """g^h = h^-1 g h."""
    return ~h * g * h


def commutator(g: Permutation, h: Permutation) -> Permutation:
    """[g, h] = g^-1 h^-1 g h."""
    return ~g * ~h * g * h


def element_order(p: Permutation) -> int:
    return p.order()


def _extend(elements: list, index: dict, old_gens: list, new_gen: Permutation, cap: int, name: str) -> None:
    """Grow a closed element list to the group also generated by new_gen."""
    gens = old_gens + [new_gen]
    n_old = len(elements)
    i = 0
    while i < len(elements):
        h = elements[i]
        use = (new_gen,) if i < n_old else gens
        i += 1
        for g in use:
            hg = _new(Permutation, map(g.__getitem__, h))
            if hg not in index:
                if len(elements) >= cap:
                    raise CapExceeded(name, cap)
                index[hg] = len(elements)
                elements.append(hg)


def _bfs(gens: Sequence[Permutation], degree: int, cap: int, name: str):
    e = Permutation.identity(degree)
    elements = [e]
    index = {e: 0}
    gens = [g for g in dict.fromkeys(gens) if g != e]
    i = 0
    while i < len(elements):
        h = elements[i]
        i += 1
        for g in gens:
            hg = _new(Permutation, map(g.__getitem__, h))
            if hg not in index:
                if len(elements) >= cap:
                    raise CapExceeded(name, cap)
                index[hg] = len(elements)
                elements.append(hg)
    return elements, index


class PermutationGroup:
    """A group given by generators, with a lazily materialized element list."""

    def __init__(self, generators: Iterable, degree: int | None = None, name: str = "",
                 order: int | None = None):
        gens = tuple(g if isinstance(g, Permutation) else Permutation(g) for g in generators)
        if degree is None:
            if not gens:
                raise ValueError("degree required for a group without generators")
            degree = len(gens[0])
        for g in gens:
            if len(g) != degree:
                raise DegreeMismatch(f"generator of degree {len(g)} in a degree-{degree} group")
        self.degree = degree
        self.generators = gens
        self.name = name
        self.analytic_order = order
        self._elements: list[Permutation] | None = None
        self._index: dict[Permutation, int] | None = None
        self._cache: dict = {}

    def __repr__(self) -> str:
        label = self.name or "group"
        size = len(self._elements) if self._elements is not None else self.analytic_order
        return f"<PermutationGroup {label} degree={self.degree} order={size}>"

    # materialization

    def materialize(self, cap: int | None = None) -> list[Permutation]:
        if self._elements is not None:
            return self._elements
        cap = default_cap() if cap is None else cap
        if cap < 1:
            raise ValueError("cap must be positive")
        if self.analytic_order is not None and self.analytic_order > cap:
            raise CapExceeded(self.name, cap, self.analytic_order)
        elements, index = _bfs(self.generators, self.degree, cap, self.name)
        if self.analytic_order is not None and self.analytic_order != len(elements):
            raise ValueError(f"{self.name}: analytic order {self.analytic_order} "
                             f"but closure gives {len(elements)}")
        self._set_elements(elements, index)
        return elements

    def _set_elements(self, elements: list, index: dict | None = None) -> None:
        self._elements = elements
        self._index = index if index is not None else {g: i for i, g in enumerate(elements)}
        if self.analytic_order is None:
            self.analytic_order = len(elements)

    @property
    def is_materialized(self) -> bool:
        return self._elements is not None

    @property
    def elements(self) -> list[Permutation]:
        return self.materialize()

    def order(self) -> int:
        if self.analytic_order is not None:
            return self.analytic_order
        return len(self.materialize())

    def __len__(self) -> int:
        return self.order()

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.materialize())

    def __contains__(self, g) -> bool:
        self.materialize()
        return g in self._index

    def index(self, g: Permutation) -> int:
        self.materialize()
        return self._index[g]

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    # simple queries

    def is_trivial(self) -> bool:
        return self.order() == 1

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(a * b == b * a for i, a in enumerate(gens) for b in gens[i + 1:])

    def element_orders(self) -> dict[Permutation, int]:
        if "orders" not in self._cache:
            self._cache["orders"] = {g: g.order() for g in self.materialize()}
        return self._cache["orders"]

    def exponent_set(self) -> set[int]:
        return set(self.element_orders().values())

    def involutions(self) -> list[Permutation]:
        return [g for g, o in self.element_orders().items() if o == 2]

    def conjugacy_classes(self) -> list[list[Permutation]]:
        """Classes in order of first appearance, each listed by conjugation BFS."""
        if "classes" not in self._cache:
            elements = self.materialize()
            gens = [g for g in self.generators if not g.is_identity()]
            invs = [~g for g in gens]
            which: dict[Permutation, int] = {}
            classes: list[list[Permutation]] = []
            for x in elements:
                if x in which:
                    continue
                cid = len(classes)
                cls = [x]
                which[x] = cid
                i = 0
                while i < len(cls):
                    y = cls[i]
                    i += 1
                    for g, gi in zip(gens, invs):
                        z = _new(Permutation, map(g.__getitem__, map(y.__getitem__, gi)))
                        if z not in which:
                            which[z] = cid
                            cls.append(z)
                classes.append(cls)
            self._cache["classes"] = classes
            self._cache["class_of"] = which
        return self._cache["classes"]

    def class_of(self, g: Permutation) -> int:
        self.conjugacy_classes()
        return self._cache["class_of"][g]

    def class_size(self, g: Permutation) -> int:
        return len(self.conjugacy_classes()[self.class_of(g)])

    def subgroup(self, seeds: Iterable[Permutation], name: str = "", cap: int | None = None) -> "PermutationGroup":
        return generate(seeds, self.degree, name=name, cap=cap)


def generate(seeds: Iterable[Permutation], degree: int, name: str = "", cap: int | None = None) -> PermutationGroup:
    """Group generated by the seeds; only seeds that enlarge the group are kept as generators."""
    cap = default_cap() if cap is None else cap
    e = Permutation.identity(degree)
    elements = [e]
    index = {e: 0}
    gens: list[Permutation] = []
    for s in seeds:
        if len(s) != degree:
            raise DegreeMismatch(f"seed of degree {len(s)} in a degree-{degree} group")
        if s in index:
            continue
        _extend(elements, index, gens, s, cap, name)
        gens.append(s)
    G = PermutationGroup(gens, degree, name=name)
    G._set_elements(elements, index)
    return G


def closure(G: PermutationGroup, cap: int | None = None) -> list[Permutation]:
    return G.materialize(cap)


def subgroup_generated(G: PermutationGroup, seeds: Iterable[Permutation], name: str = "") -> PermutationGroup:
    return generate(seeds, G.degree, name=name)


def is_subgroup(H: PermutationGroup, G: PermutationGroup) -> bool:
    return all(h in G for h in H.generators)


def is_normal(G: PermutationGroup, N: PermutationGroup) -> bool:
    return all(conjugate(n, g) in N for n in N.generators for g in G.generators)


def normal_closure(G: PermutationGroup, seeds: Iterable[Permutation], name: str = "",
                   cap: int | None = None) -> PermutationGroup:
    cap = default_cap() if cap is None else cap
    e = G.identity
    elements = [e]
    index = {e: 0}
    gens: list[Permutation] = []
    pending = list(seeds)
    ginv = [(g, ~g) for g in G.generators]
    i = 0
    while pending or i < len(gens):
        if pending:
            s = pending.pop(0)
            if s not in index:
                _extend(elements, index, gens, s, cap, name)
                gens.append(s)
            continue
        n = gens[i]
        i += 1
        for g, gi in ginv:
            c = gi * n * g
            if c not in index:
                pending.append(c)
    N = PermutationGroup(gens, G.degree, name=name)
    N._set_elements(elements, index)
    return N


def centralizer(G: PermutationGroup, S: Iterable[Permutation], name: str = "") -> PermutationGroup:
    S = list(S)
    keep = [g for g in G.materialize() if all(g * s == s * g for s in S)]
    return generate(keep, G.degree, name=name)


def normalizer(G: PermutationGroup, H: PermutationGroup, name: str = "") -> PermutationGroup:
    H.materialize()
    keep = [g for g in G.materialize() if all(conjugate(h, g) in H for h in H.generators)]
    return generate(keep, G.degree, name=name)


def intersection(A: PermutationGroup, B: PermutationGroup, name: str = "") -> PermutationGroup:
    small, big = (A, B) if A.order() <= B.order() else (B, A)
    big.materialize()
    return generate([g for g in small.materialize() if g in big], A.degree, name=name)


def commutator_subgroup(G: PermutationGroup, A: PermutationGroup, B: PermutationGroup,
                        name: str = "") -> PermutationGroup:
    """[A, B] for subgroups A, B of G that normalize each other."""
    seeds = [commutator(a, b) for a in A.generators for b in B.generators]
    # [A,B] is normal in <A,B>; close under conjugation by both generator sets
    amb = PermutationGroup(list(A.generators) + list(B.generators), G.degree)
    return normal_closure(amb, seeds, name=name)


class Homomorphism:
    """A homomorphism given by images of chosen source generators.

    The full element table is built on demand by walking the Cayley graph
    of the source from the identity.
    """

    def __init__(self, source: PermutationGroup, target: PermutationGroup,
                 generator_images: Sequence[Permutation],
                 source_generators: Sequence[Permutation] | None = None,
                 table: dict | None = None, func: Callable | None = None):
        self.source = source
        self.target = target
        self.source_generators = tuple(source.generators if source_generators is None else source_generators)
        self.generator_images = tuple(generator_images)
        if len(self.source_generators) != len(self.generator_images):
            raise ValueError("one image per source generator required")
        self._table = table
        self._func = func

    @property
    def table(self) -> dict:
        if self._table is None:
            t = extend_images(self.source_generators, self.generator_images, self.target.degree)
            if t is None:
                raise ValueError("generator images do not define a homomorphism")
            self._table = t
        return self._table

    def __call__(self, g: Permutation) -> Permutation:
        if self._table is None and self._func is not None:
            return self._func(g)
        return self.table[g]

    def image_of(self, g: Permutation) -> Permutation:
        return self(g)

    def kernel(self, name: str = "") -> PermutationGroup:
        e = self.target.identity
        keep = [g for g in self.source.materialize() if self(g) == e]
        return generate(keep, self.source.degree, name=name)

    def image(self, name: str = "") -> PermutationGroup:
        return generate(self.generator_images, self.target.degree, name=name)

    def is_injective(self) -> bool:
        return len(set(self.table.values())) == len(self.table)

    def is_bijective(self) -> bool:
        return self.is_injective() and len(self.table) == self.target.order()


def extend_images(gens: Sequence[Permutation], images: Sequence[Permutation], target_degree: int,
                  limit: int | None = None) -> dict | None:
    """Walk the Cayley graph of <gens>; return the element table or None on a conflict."""
    if not gens:
        return {}
    e = Permutation.identity(len(gens[0]))
    table = {e: Permutation.identity(target_degree)}
    queue = [e]
    pairs = list(zip(gens, images))
    i = 0
    while i < len(queue):
        h = queue[i]
        i += 1
        th = table[h]
        for g, img in pairs:
            hg = _new(Permutation, map(g.__getitem__, h))
            t = _new(Permutation, map(img.__getitem__, th))
            old = table.get(hg)
            if old is None:
                table[hg] = t
                queue.append(hg)
                if limit is not None and len(queue) > limit:
                    return None
            elif old != t:
                return None
    return table


def quotient(G: PermutationGroup, N: PermutationGroup, name: str = "") -> tuple[PermutationGroup, Homomorphism]:
    """G acting on the right cosets of a normal subgroup N."""
    if not is_normal(G, N):
        raise NotNormal(f"{N.name or 'subgroup'} is not normal in {G.name or 'group'}")
    elements = G.materialize()
    n_elems = N.materialize()
    coset_of: dict[Permutation, int] = {}
    reps: list[Permutation] = []
    for g in elements:
        if g in coset_of:
            continue
        cid = len(reps)
        reps.append(g)
        for n in n_elems:
            coset_of[n * g] = cid

    def project(h: Permutation) -> Permutation:
        return _new(Permutation, [coset_of[_new(Permutation, map(h.__getitem__, r))] for r in reps])

    gens = [project(g) for g in G.generators]
    label = name or (f"{G.name}/{N.name}" if G.name else "")
    Q = PermutationGroup(gens, len(reps), name=label, order=len(reps))
    hom = Homomorphism(G, Q, gens, func=project)
    return Q, hom
