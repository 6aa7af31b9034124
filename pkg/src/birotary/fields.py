"""Small finite fields and the groups PSL(2,q), PGL(2,q), PSigmaL(2,q) on the projective line."""
from __future__ import annotations

from functools import lru_cache
from itertools import product
from math import gcd

from .errors import NotPrimePower
from .ntheory import prime_power
from .perm import Permutation, PermutationGroup

MAX_FIELD = 128
MAX_LINEAR_Q = 32


def _poly_mod(a: list[int], m: list[int], p: int) -> list[int]:
    """Remainder of a by the monic m; coefficient lists are low degree first."""
    a = a[:]
    dm = len(m) - 1
    while len(a) - 1 >= dm:
        c = a[-1] % p
        if c:
            shift = len(a) - 1 - dm
            for i, mi in enumerate(m):
                a[shift + i] = (a[shift + i] - c * mi) % p
        a.pop()
        while a and a[-1] % p == 0:
            a.pop()
    return a


def _monic_polys(degree: int, p: int):
    """Monic polynomials of a given degree in lexicographic order from the high coefficient."""
    for tail in product(range(p), repeat=degree):
        yield list(reversed(tail)) + [1]


def is_irreducible(m: list[int], p: int) -> bool:
    t = len(m) - 1
    if t <= 1:
        return t == 1
    for d in range(1, t // 2 + 1):
        for f in _monic_polys(d, p):
            if not _poly_mod(m, f, p):
                return False
    return True


def smallest_irreducible(p: int, t: int) -> list[int]:
    for m in _monic_polys(t, p):
        if is_irreducible(m, p):
            return m
    raise NotPrimePower(f"no irreducible polynomial of degree {t} over F_{p}")


def poly_string(m: list[int]) -> str:
    terms = []
    for i in range(len(m) - 1, -1, -1):
        c = m[i]
        if not c:
            continue
        mono = "1" if i == 0 else ("z" if i == 1 else f"z^{i}")
        terms.append(mono if c == 1 and i else f"{c}" if not i else f"{c}{mono}")
    return " + ".join(terms) if terms else "0"


class FiniteField:
    """F_q with elements encoded as integers 0..q-1 (base-p digits, low degree first)."""

    def __init__(self, q: int):
        pp = prime_power(q)
        if pp is None:
            raise NotPrimePower(f"{q} is not a prime power")
        if q > MAX_FIELD:
            raise ValueError(f"fields larger than {MAX_FIELD} are not supported")
        self.q = q
        self.p, self.t = pp
        self.modulus = smallest_irreducible(self.p, self.t)
        p, t = self.p, self.t
        vecs = [self._digits(x) for x in range(q)]
        self.add_table = [[self._encode([(a + b) % p for a, b in zip(vecs[x], vecs[y])])
                           for y in range(q)] for x in range(q)]
        self.neg_table = [self._encode([(-a) % p for a in vecs[x]]) for x in range(q)]
        self.mul_table = [[0] * q for _ in range(q)]
        for x in range(q):
            for y in range(x, q):
                prod = [0] * (2 * t - 1)
                for i, a in enumerate(vecs[x]):
                    if a:
                        for j, b in enumerate(vecs[y]):
                            prod[i + j] = (prod[i + j] + a * b) % p
                r = _poly_mod(prod, self.modulus, p)
                v = self._encode(r + [0] * (t - len(r)))
                self.mul_table[x][y] = self.mul_table[y][x] = v
        self.inv_table = [0] * q
        for x in range(1, q):
            for y in range(1, q):
                if self.mul_table[x][y] == 1:
                    self.inv_table[x] = y
                    break
        self.generator = self._find_generator()

    def _digits(self, x: int) -> list[int]:
        out = []
        for _ in range(self.t):
            out.append(x % self.p)
            x //= self.p
        return out

    def _encode(self, digits: list[int]) -> int:
        v = 0
        for d in reversed(digits):
            v = v * self.p + d
        return v

    def add(self, x: int, y: int) -> int:
        return self.add_table[x][y]

    def sub(self, x: int, y: int) -> int:
        return self.add_table[x][self.neg_table[y]]

    def neg(self, x: int) -> int:
        return self.neg_table[x]

    def mul(self, x: int, y: int) -> int:
        return self.mul_table[x][y]

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self.inv_table[x]

    def power(self, x: int, e: int) -> int:
        r = 1
        for _ in range(e):
            r = self.mul_table[r][x]
        return r

    def mult_order(self, x: int) -> int:
        n, y = 1, x
        while y != 1:
            y = self.mul_table[y][x]
            n += 1
        return n

    def _find_generator(self) -> int:
        for x in range(1, self.q):
            if self.mult_order(x) == self.q - 1:
                return x
        raise AssertionError("multiplicative group must be cyclic")

    def frobenius(self, x: int) -> int:
        return self.power(x, self.p)

    def squares(self) -> set[int]:
        return {self.mul_table[x][x] for x in range(1, self.q)}

    def modulus_string(self) -> str:
        return poly_string(self.modulus)

    def __repr__(self) -> str:
        return f"<FiniteField q={self.q} modulus {self.modulus_string()}>"


@lru_cache(maxsize=None)
def make_field(q: int) -> FiniteField:
    return FiniteField(q)


class ProjectiveLine:
    """Points 0..q-1 are field elements, point q is infinity."""

    def __init__(self, field: FiniteField):
        self.field = field
        self.q = field.q
        self.infinity = field.q

    @property
    def size(self) -> int:
        return self.q + 1

    def mobius(self, a: int, b: int, c: int, d: int) -> Permutation:
        """z -> (a z + b) / (c z + d), requiring a d - b c != 0."""
        F = self.field
        if F.sub(F.mul(a, d), F.mul(b, c)) == 0:
            raise ValueError("singular matrix")
        inf = self.infinity
        imgs = []
        for z in range(self.q):
            num = F.add(F.mul(a, z), b)
            den = F.add(F.mul(c, z), d)
            imgs.append(inf if den == 0 else F.mul(num, F.inv(den)))
        imgs.append(inf if c == 0 else F.mul(a, F.inv(c)))
        return Permutation(imgs)

    def frobenius(self) -> Permutation:
        F = self.field
        return Permutation([F.frobenius(z) for z in range(self.q)] + [self.infinity])


def psl_order(q: int) -> int:
    return q * (q * q - 1) // gcd(2, q - 1)


def _line(q: int) -> ProjectiveLine:
    if prime_power(q) is None:
        raise NotPrimePower(f"{q} is not a prime power")
    if q > MAX_LINEAR_Q:
        raise ValueError(f"q = {q} exceeds the supported bound {MAX_LINEAR_Q}")
    return ProjectiveLine(make_field(q))


def _psl_generators(L: ProjectiveLine) -> list[Permutation]:
    F = L.field
    w2 = F.mul(F.generator, F.generator)
    gens = [L.mobius(1, 1, 0, 1), L.mobius(w2, 0, 0, 1), L.mobius(0, F.neg(1), 1, 0)]
    return [g for g in dict.fromkeys(gens) if not g.is_identity()]


def psl2(q: int) -> PermutationGroup:
    L = _line(q)
    return PermutationGroup(_psl_generators(L), L.size, name=f"PSL(2,{q})", order=psl_order(q))


def pgl2(q: int) -> PermutationGroup:
    L = _line(q)
    gens = _psl_generators(L) + [L.mobius(L.field.generator, 0, 0, 1)]
    return PermutationGroup(list(dict.fromkeys(gens)), L.size, name=f"PGL(2,{q})", order=q * (q * q - 1))


def psigmal2(q: int) -> PermutationGroup:
    L = _line(q)
    gens = _psl_generators(L)
    t = L.field.t
    if t > 1:
        gens.append(L.frobenius())
    return PermutationGroup(gens, L.size, name=f"PSigmaL(2,{q})", order=t * psl_order(q))
