"""Integer helpers: primality, prime powers, prime parts."""
from __future__ import annotations

from math import gcd

from sympy import integer_nthroot
from sympy import isprime as _big_isprime

_SMALL = 10 ** 12


def is_prime(n: int) -> bool:
    """Trial division below 10^12, sympy's deterministic test above."""
    if n < 2:
        return False
    if n >= _SMALL:
        return bool(_big_isprime(n))
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Trial-division factorization; meant for group orders and other small n."""
    if n < 1:
        raise ValueError("n must be positive")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_divisors(n: int) -> list[int]:
    return sorted(factorize(n))


def prime_power(n: int) -> tuple[int, int] | None:
    """(p, t) with n = p^t and t >= 1, or None."""
    if n < 2:
        return None
    for t in range(n.bit_length(), 0, -1):
        root, exact = integer_nthroot(n, t)
        if exact and root > 1:
            root = int(root)
            return (root, t) if is_prime(root) else None
    return None


def is_prime_power(n: int) -> bool:
    return prime_power(n) is not None


def p_part(n: int, p: int) -> int:
    """Largest power of p dividing n."""
    out = 1
    while n % p == 0:
        n //= p
        out *= p
    return out


def p_adic(n: int, p: int) -> int:
    """Exponent of p in n."""
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def is_power_of(n: int, p: int) -> bool:
    """True when n = p^e for some e >= 0."""
    if n < 1:
        return False
    while n % p == 0:
        n //= p
    return n == 1


def coprime(a: int, b: int) -> bool:
    return gcd(a, b) == 1
