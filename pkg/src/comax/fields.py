"""Prime-power field construction from polynomial arithmetic over Z/p.

Polynomials are coefficient tuples, constant term first. A field element
of GF(p^k) is stored as the integer sum(c_i * p**i) of its reduced
coefficient vector, so 0 and 1 keep their usual meaning.
"""

from __future__ import annotations

import itertools

import numpy as np


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, k)`` with ``q == p**k``, or None if q is not a prime power."""
    if q < 2:
        return None
    p = next(d for d in range(2, q + 1) if q % d == 0)
    if not is_prime(p):
        return None
    k = 0
    while q % p == 0:
        q //= p
        k += 1
    return (p, k) if q == 1 else None


def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def poly_mod(a: tuple[int, ...], m: tuple[int, ...], p: int) -> list[int]:
    """Remainder of a modulo the monic polynomial m over Z/p."""
    r = _trim(list(a))
    dm = len(m) - 1
    while len(r) - 1 >= dm:
        lead = r[-1]
        shift = len(r) - 1 - dm
        for i, coef in enumerate(m):
            r[shift + i] = (r[shift + i] - lead * coef) % p
        _trim(r)
    return r


def poly_mul(a: tuple[int, ...], b: tuple[int, ...], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def monic_polys(p: int, degree: int):
    """All monic polynomials of the given degree, in constant-term-first lexicographic order."""
    for low in itertools.product(range(p), repeat=degree):
        yield tuple(low) + (1,)


def is_irreducible(f: tuple[int, ...], p: int) -> bool:
    """Exhaustive trial division by every monic polynomial of degree <= deg(f)/2."""
    deg = len(f) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for g in monic_polys(p, d):
            if not poly_mod(f, g, p):
                return False
    return True


def smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree k (constant term compared first)."""
    for f in monic_polys(p, k):
        if is_irreducible(f, p):
            return f
    raise AssertionError(f"no irreducible polynomial of degree {k} over Z/{p}")


def gf_digits(p: int, k: int) -> np.ndarray:
    """Coefficient vectors of all p**k field elements, row i encoding element i."""
    q = p**k
    ids = np.arange(q)
    return np.stack([(ids // p**i) % p for i in range(k)], axis=1)


def gf_tables(p: int, k: int) -> tuple[np.ndarray, np.ndarray, tuple[int, ...]]:
    """Addition and multiplication tables of GF(p^k) plus the modulus used."""
    q = p**k
    modulus = smallest_irreducible(p, k) if k > 1 else (0, 1)
    digits = gf_digits(p, k)
    weights = p ** np.arange(k)
    add = ((digits[:, None, :] + digits[None, :, :]) % p) @ weights

    def encode(c: list[int]) -> int:
        return sum(int(x) * p**i for i, x in enumerate(c))

    def mult(a: int, b: int) -> int:
        pa = tuple(int(x) for x in digits[a])
        pb = tuple(int(x) for x in digits[b])
        return encode(poly_mod(tuple(poly_mul(pa, pb, p)), modulus, p))

    # log/antilog tables through a primitive element keep this O(q) in Python
    mul = np.zeros((q, q), dtype=np.int64)
    if q == 2:
        mul[1, 1] = 1
    else:
        for g in range(2, q):
            powers = [1]
            x = g
            while x != 1:
                powers.append(x)
                x = mult(x, g)
            if len(powers) == q - 1:
                break
        exp = np.array(powers + powers, dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        log[np.array(powers)] = np.arange(q - 1)
        nz = np.arange(1, q)
        mul[1:, 1:] = exp[log[nz][:, None] + log[nz][None, :]]
    return add.astype(np.int64), mul, modulus
