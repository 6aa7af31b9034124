"""Exact arithmetic in split extensions N : Q with N abelian.

N is a direct sum of blocks (Z/n)^d with arbitrary-precision moduli, Q a
small materialized permutation group acting on row vectors by matrices,
w^q = w M_q.  Element orders and commutators are computed exactly without
ever listing N, which is how the large solvable families are handled.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import gcd, lcm

from .errors import CapExceeded, InvalidAction
from .perm import Permutation, PermutationGroup, default_cap

Matrix = tuple[tuple[int, ...], ...]


def _mat_mul(A: Matrix, B: Matrix, n: int) -> Matrix:
    cols = list(zip(*B))
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) % n for col in cols) for row in A)


def _vec_mat(v: tuple[int, ...], M: Matrix, n: int) -> tuple[int, ...]:
    d = len(v)
    return tuple(sum(v[i] * M[i][j] for i in range(d)) % n for j in range(d))


def _identity(d: int, n: int) -> Matrix:
    return tuple(tuple((1 if i == j else 0) % n for j in range(d)) for i in range(d))


def _as_matrix(spec, d: int, n: int) -> Matrix:
    """An int is a scalar multiplier; otherwise a d x d nested sequence."""
    if isinstance(spec, int):
        return tuple(tuple((spec if i == j else 0) % n for j in range(d)) for i in range(d))
    M = tuple(tuple(int(x) % n for x in row) for row in spec)
    if len(M) != d or any(len(r) != d for r in M):
        raise InvalidAction(f"expected a {d}x{d} matrix")
    return M


@dataclass(frozen=True)
class Block:
    modulus: int
    dim: int = 1


class SplitExtension:
    """Elements are pairs (v, q) with v a tuple of per-block vectors and q in Q."""

    def __init__(self, blocks: list[Block], Q: PermutationGroup,
                 generator_actions: list[list], name: str = ""):
        if len(generator_actions) != len(Q.generators):
            raise InvalidAction("one action per complement generator required")
        self.blocks = list(blocks)
        self.Q = Q
        self.name = name
        Q.materialize()
        gens = list(Q.generators)
        gen_mats = []
        for acts in generator_actions:
            if len(acts) != len(self.blocks):
                raise InvalidAction("one matrix per block required")
            gen_mats.append(tuple(_as_matrix(a, b.dim, b.modulus) for a, b in zip(acts, self.blocks)))
        ident = tuple(_identity(b.dim, b.modulus) for b in self.blocks)
        table = {Q.identity: ident}
        queue = [Q.identity]
        # extend the generator matrices over the Cayley graph of Q; a conflict
        # means the prescribed action does not respect Q's relations
        for q in queue:
            Mq = table[q]
            for g, Mg in zip(gens, gen_mats):
                r = q * g
                Mr = tuple(_mat_mul(a, b, blk.modulus) for a, b, blk in zip(Mq, Mg, self.blocks))
                old = table.get(r)
                if old is None:
                    table[r] = Mr
                    queue.append(r)
                elif old != Mr:
                    raise InvalidAction("action is not a homomorphism from the complement")
        self._mats = table
        self._zero = tuple(tuple(0 for _ in range(b.dim)) for b in self.blocks)

    # element constructors

    def normal(self, *parts) -> tuple:
        """Element of N; one entry per block (int for 1-dimensional blocks)."""
        v = []
        for part, b in zip(parts, self.blocks):
            vec = (part,) if isinstance(part, int) else tuple(part)
            v.append(tuple(x % b.modulus for x in vec))
        return (tuple(v), self.Q.identity)

    def complement(self, q: Permutation) -> tuple:
        return (self._zero, q)

    @property
    def identity(self) -> tuple:
        return (self._zero, self.Q.identity)

    # arithmetic

    def _act(self, v, q):
        M = self._mats[q]
        return tuple(_vec_mat(vi, Mi, b.modulus) for vi, Mi, b in zip(v, M, self.blocks))

    def _add(self, v, w):
        return tuple(tuple((a + c) % b.modulus for a, c in zip(vi, wi))
                     for vi, wi, b in zip(v, w, self.blocks))

    def mul(self, g, h):
        # q w = w^(q^-1) q
        (v, q), (w, r) = g, h
        return (self._add(v, self._act(w, ~q)), q * r)

    def inv(self, g):
        v, q = g
        w = self._act(v, q)
        return (tuple(tuple((-a) % b.modulus for a in wi) for wi, b in zip(w, self.blocks)), ~q)

    def power(self, g, e: int):
        if e < 0:
            g, e = self.inv(g), -e
        result, base = self.identity, g
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def commutator(self, g, h):
        return self.mul(self.mul(self.inv(g), self.inv(h)), self.mul(g, h))

    def conjugate(self, g, h):
        return self.mul(self.mul(self.inv(h), g), h)

    def vector_order(self, v) -> int:
        out = 1
        for vi, b in zip(v, self.blocks):
            for a in vi:
                out = lcm(out, b.modulus // gcd(b.modulus, a))
        return out

    def order(self, g) -> int:
        """|g| = |q| * |(g^|q|)|, the second factor being an element of N."""
        o = g[1].order()
        v, q = self.power(g, o)
        assert q.is_identity()
        return o * self.vector_order(v)

    def group_order(self) -> int:
        n = self.Q.order()
        for b in self.blocks:
            n *= b.modulus ** b.dim
        return n

    # materialization

    def normal_size(self) -> int:
        n = 1
        for b in self.blocks:
            n *= b.modulus ** b.dim
        return n

    def permutation_representation(self, cap: int | None = None):
        """Faithful action on N (affine: w -> (w + v) M_q) together with Q's points.

        Returns (group, to_perm) where to_perm converts an element pair.
        """
        cap = default_cap() if cap is None else cap
        total = self.group_order()
        if total > cap:
            raise CapExceeded(self.name, cap, total)
        ranges = []
        for b in self.blocks:
            ranges.extend([range(b.modulus)] * b.dim)
        flat = list(product(*ranges))
        shape = [b.dim for b in self.blocks]

        def split(t):
            out, i = [], 0
            for d in shape:
                out.append(tuple(t[i:i + d]))
                i += d
            return tuple(out)

        points = [split(t) for t in flat]
        index = {p: i for i, p in enumerate(points)}
        nN = len(points)

        def to_perm(g) -> Permutation:
            v, q = g
            imgs = [index[self._act(self._add(w, v), q)] for w in points]
            imgs.extend(nN + q[i] for i in range(self.Q.degree))
            return Permutation(imgs)

        gens = [to_perm(self.normal(*[(1,) + (0,) * (b.dim - 1) if j == i else (0,) * b.dim
                                      for j, b in enumerate(self.blocks)]))
                for i in range(len(self.blocks))]
        for i, b in enumerate(self.blocks):
            for k in range(1, b.dim):
                unit = [(0,) * bb.dim for bb in self.blocks]
                unit[i] = tuple(1 if j == k else 0 for j in range(b.dim))
                gens.append(to_perm(self.normal(*unit)))
        gens += [to_perm(self.complement(q)) for q in self.Q.generators]
        gens = [g for g in dict.fromkeys(gens) if not g.is_identity()]
        G = PermutationGroup(gens, nN + self.Q.degree, name=self.name, order=total)
        G.materialize(cap)
        return G, to_perm
