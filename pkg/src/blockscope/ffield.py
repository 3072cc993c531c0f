"""Finite fields GF(p^f) as polynomials modulo a fixed irreducible.

Elements are encoded as integers ``c_0 + c_1 p + ... + c_{f-1} p^{f-1}`` where
``c_i`` is the coefficient of ``x^i``.  The modulus is the least monic
irreducible polynomial of degree f under that same encoding of its lower
coefficients, so the field is fully determined by ``(p, f)``.
"""
from __future__ import annotations

from functools import lru_cache
from math import gcd

from sympy import factorint, isprime

from .errors import InputError


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], m: list[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm and a:
        shift = len(a) - 1 - dm
        factor = a[-1] * inv_lead % p
        for i, c in enumerate(m):
            a[shift + i] = (a[shift + i] - factor * c) % p
        _trim(a)
    return a


def _poly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _poly_sub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return _trim(out)


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_mod(a, b, p)
    return a


def _poly_powmod(base: list[int], e: int, m: list[int], p: int) -> list[int]:
    result = [1]
    base = _poly_mod(base, m, p)
    while e:
        if e & 1:
            result = _poly_mod(_poly_mul(result, base, p), m, p)
        base = _poly_mod(_poly_mul(base, base, p), m, p)
        e >>= 1
    return result


def is_irreducible(poly: list[int], p: int) -> bool:
    """Ben-Or test for a monic polynomial given low-to-high."""
    f = len(poly) - 1
    if f <= 0:
        return False
    if f == 1:
        return True
    x = [0, 1]
    power = x
    for _ in range(1, f // 2 + 1):
        power = _poly_powmod(power, p, poly, p)
        g = _poly_gcd(poly, _poly_sub(power, x, p), p)
        if len(g) > 1:
            return False
    return True


@lru_cache(maxsize=None)
def conway_free_modulus(p: int, f: int) -> tuple[int, ...]:
    """Least monic irreducible of degree f over GF(p), low-to-high coefficients."""
    for code in range(p ** f):
        low = [(code // p ** i) % p for i in range(f)]
        poly = low + [1]
        if f > 1 and low[0] == 0:
            continue
        if is_irreducible(poly, p):
            return tuple(poly)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


class FiniteField:
    """GF(p^f) with integer-encoded elements."""

    def __init__(self, p: int, f: int = 1):
        if not isprime(p):
            raise InputError(f"{p} is not a prime")
        if f < 1:
            raise InputError("field degree must be positive")
        self.p = p
        self.f = f
        self.size = p ** f
        self.modulus = conway_free_modulus(p, f)

    def __repr__(self):
        return f"GF({self.p}^{self.f})"

    def __eq__(self, other):
        return isinstance(other, FiniteField) and (self.p, self.f) == (other.p, other.f)

    def __hash__(self):
        return hash((self.p, self.f))

    def to_poly(self, a: int) -> list[int]:
        p = self.p
        return _trim([(a // p ** i) % p for i in range(self.f)])

    def from_poly(self, coeffs: list[int]) -> int:
        coeffs = _poly_mod(list(coeffs), list(self.modulus), self.p) if len(coeffs) > self.f else coeffs
        return sum((c % self.p) * self.p ** i for i, c in enumerate(coeffs))

    def from_int(self, n: int) -> int:
        return n % self.p

    def add(self, a: int, b: int) -> int:
        if self.f == 1:
            return (a + b) % self.p
        pa, pb = self.to_poly(a), self.to_poly(b)
        n = max(len(pa), len(pb))
        return self.from_poly([((pa[i] if i < len(pa) else 0) + (pb[i] if i < len(pb) else 0)) % self.p
                               for i in range(n)])

    def neg(self, a: int) -> int:
        return self.from_poly([(-c) % self.p for c in self.to_poly(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def scale(self, a: int, s: int) -> int:
        return self.from_poly([(c * s) % self.p for c in self.to_poly(a)])

    def mul(self, a: int, b: int) -> int:
        if self.f == 1:
            return a * b % self.p
        prod = _poly_mul(self.to_poly(a), self.to_poly(b), self.p)
        return self.from_poly(_poly_mod(prod, list(self.modulus), self.p))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        return self.pow(a, self.size - 2)

    def multiplicative_order(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative order")
        n = self.size - 1
        order = n
        for q in factorint(n):
            while order % q == 0 and self.pow(a, order // q) == 1:
                order //= q
        return order

    def least_element_of_order(self, m: int) -> int:
        """Least encoded element of multiplicative order exactly m."""
        n = self.size - 1
        if n % m:
            raise InputError(f"GF({self.size}) has no element of order {m}")
        g = self.primitive_element()
        base = self.pow(g, n // m)
        return min(self.pow(base, j) for j in range(1, m + 1) if gcd(j, m) == 1)

    def primitive_element(self) -> int:
        """Least encoded generator of the multiplicative group."""
        n = self.size - 1
        for a in range(1, self.size):
            if self.multiplicative_order(a) == n:
                return a
        raise AssertionError("unreachable")  # pragma: no cover
