"""Exact arithmetic in cyclotomic fields.

A :class:`Cyclotomic` is stored in a canonical form: the smallest conductor n
whose field contains the value, and coefficients with respect to a
Zumbroich-style basis of Q(zeta_n).  Writing ``n = prod Q_i`` with prime powers
``Q_i = q_i^e_i``, the exponent k of ``zeta_n^k`` splits into components
``c_i = k * (n/Q_i)^-1 mod Q_i`` so that ``zeta_n^k = prod zeta_{Q_i}^{c_i}``.
An exponent is a basis exponent when every component is "good":

* q odd: ``c // (Q/q) != 0`` (the top base-q digit is nonzero),
* q = 2: ``c < Q/2``.

The basis is an integral basis, so a value is an algebraic integer exactly
when all its canonical coefficients are integers.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from numbers import Rational
from typing import Iterable, Mapping

import numpy as np
from sympy import factorint, isprime, primitive_root

from .errors import CyclotomicArithmeticError, DomainError, InputError
from .ffield import FiniteField


def _norm_coeff(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


@lru_cache(maxsize=None)
def _prime_powers(n: int) -> tuple[tuple[int, int, int], ...]:
    return tuple((q, e, q ** e) for q, e in sorted(factorint(n).items()))


def _components(k: int, n: int) -> list[int]:
    return [(k * pow(n // Q, -1, Q)) % Q for _, _, Q in _prime_powers(n)]


def _compose(comps: list[int], n: int) -> int:
    return sum(c * (n // Q) for c, (_, _, Q) in zip(comps, _prime_powers(n))) % n


def _good(c: int, q: int, Q: int) -> bool:
    if q == 2:
        return c < Q // 2
    return c // (Q // q) != 0


@lru_cache(maxsize=None)
def _expansion(n: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """For each exponent k, the expansion of zeta_n^k in the basis as (k', +-1) pairs."""
    pps = _prime_powers(n)
    out = []
    for k in range(n):
        comps = _components(k, n)
        terms = [((), 1)]
        for c, (q, _, Q) in zip(comps, pps):
            if _good(c, q, Q):
                local = [(c, 1)]
            elif q == 2:
                local = [(c - Q // 2, -1)]
            else:
                step = Q // q
                local = [(c + step * b, -1) for b in range(1, q)]
            terms = [(t + (lc,), s * ls) for t, s in terms for lc, ls in local]
        out.append(tuple((_compose(list(t), n), s) for t, s in terms))
    return tuple(out)


@lru_cache(maxsize=None)
def basis_exponents(n: int) -> tuple[int, ...]:
    pps = _prime_powers(n)
    return tuple(k for k in range(n)
                 if all(_good(c, q, Q) for c, (q, _, Q) in zip(_components(k, n), pps)))


@lru_cache(maxsize=None)
def expansion_matrix(n: int) -> np.ndarray:
    """Integer matrix E with ``E[k, k']`` the coefficient of basis exponent k' in zeta_n^k."""
    E = np.zeros((n, n), dtype=np.int64)
    for k, terms in enumerate(_expansion(n)):
        for kk, s in terms:
            E[k, kk] += s
    E.setflags(write=False)
    return E


def _canonical_at(n: int, dense: Mapping[int, object]) -> dict[int, object]:
    exp = _expansion(n)
    out: dict[int, object] = {}
    for k, c in dense.items():
        if not c:
            continue
        for kk, s in exp[k % n]:
            out[kk] = out.get(kk, 0) + (c if s == 1 else -c)
    return {k: _norm_coeff(c) for k, c in out.items() if c}


def _descend(n: int, coeffs: dict[int, object]) -> tuple[int, dict[int, object]]:
    """Reduce a canonical element of Q(zeta_n) to its smallest conductor."""
    while n > 1:
        if not coeffs:
            return 1, {}
        pps = _prime_powers(n)
        comp = {k: _components(k, n) for k in coeffs}
        moved = False
        for i, (q, e, Q) in enumerate(pps):
            rest = [pp for j, pp in enumerate(pps) if j != i]
            if q == 2 and e == 1:
                m = n // 2
                coeffs = {_compose(comp[k][:i] + comp[k][i + 1:], m): c for k, c in coeffs.items()}
                n, moved = m, True
                break
            if e >= 2:
                if all(comp[k][i] % q == 0 for k in coeffs):
                    m = n // q
                    new = {}
                    for k, c in coeffs.items():
                        cc = list(comp[k])
                        cc[i] //= q
                        new[_compose(cc, m)] = c
                    coeffs, n, moved = new, m, True
                    break
                continue
            # odd q exactly dividing n
            groups: dict[tuple, dict[int, object]] = {}
            for k, c in coeffs.items():
                key = tuple(comp[k][:i] + comp[k][i + 1:])
                groups.setdefault(key, {})[comp[k][i]] = c
            ok = True
            for g in groups.values():
                if len(g) != q - 1 or len(set(g.values())) != 1:
                    ok = False
                    break
            if ok:
                m = n // q
                coeffs = {}
                for key, g in groups.items():
                    c = next(iter(g.values()))
                    k = sum(cc * (m // Q2) for cc, (_, _, Q2) in zip(key, rest)) % m if rest else 0
                    coeffs[k] = _norm_coeff(-c)
                n, moved = m, True
                break
        if not moved:
            break
    if n == 1:
        return 1, dict(coeffs)
    return n, coeffs


class Cyclotomic:
    """An exact element of a cyclotomic field in canonical form."""

    __slots__ = ("n", "_coeffs", "_hash")

    def __init__(self, n: int = 1, coeffs: Mapping[int, object] | None = None):
        """Build ``sum c_k zeta_n^k`` from arbitrary (redundant) exponent data."""
        if n < 1:
            raise InputError("conductor must be positive")
        dense: dict[int, object] = {}
        for k, c in (coeffs or {}).items():
            if not isinstance(c, (int, Fraction)):
                c = Fraction(c)
            dense[k % n] = dense.get(k % n, 0) + c
        canon = _canonical_at(n, dense)
        m, canon = _descend(n, canon)
        self._set(m, canon)

    def _set(self, n, coeffs):
        self.n = n
        self._coeffs = tuple(sorted(coeffs.items()))
        self._hash = hash((n, self._coeffs))

    @classmethod
    def _from_canonical(cls, n, coeffs):
        obj = object.__new__(cls)
        obj._set(n, coeffs)
        return obj

    # -- constructors ------------------------------------------------------

    @classmethod
    def rational(cls, q) -> "Cyclotomic":
        q = _norm_coeff(Fraction(q)) if not isinstance(q, int) else q
        return cls._from_canonical(1, {0: q} if q else {})

    @classmethod
    def zeta(cls, n: int, k: int = 1) -> "Cyclotomic":
        return cls(n, {k: 1})

    @classmethod
    def from_exponent_vector(cls, n: int, vec: Iterable) -> "Cyclotomic":
        return cls(n, {k: int(c) if isinstance(c, (int, np.integer)) else c
                       for k, c in enumerate(vec) if c})

    # -- accessors ---------------------------------------------------------

    @property
    def conductor(self) -> int:
        return self.n

    @property
    def coeffs(self) -> dict[int, object]:
        return dict(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_rational(self) -> bool:
        return self.n == 1

    def to_rational(self) -> Fraction:
        if self.n != 1:
            raise DomainError(f"{self} is not rational")
        return Fraction(self._coeffs[0][1]) if self._coeffs else Fraction(0)

    def is_integral(self) -> bool:
        """True iff the value is an algebraic integer."""
        return all(isinstance(c, int) for _, c in self._coeffs)

    def denominator(self) -> int:
        d = 1
        for _, c in self._coeffs:
            if isinstance(c, Fraction):
                d = lcm(d, c.denominator)
        return d

    def lifted(self, N: int) -> dict[int, object]:
        """Coefficients with respect to powers of zeta_N (N a multiple of the conductor)."""
        if N % self.n:
            raise DomainError(f"conductor {self.n} does not divide {N}")
        s = N // self.n
        return {k * s: c for k, c in self._coeffs}

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(x) -> "Cyclotomic":
        if isinstance(x, Cyclotomic):
            return x
        if isinstance(x, (int, Rational, np.integer)):
            return Cyclotomic.rational(Fraction(int(x)) if isinstance(x, np.integer) else x)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other._coeffs:
            return self
        if not self._coeffs:
            return other
        N = lcm(self.n, other.n)
        dense = self.lifted(N)
        for k, c in other.lifted(N).items():
            dense[k] = dense.get(k, 0) + c
        return Cyclotomic._from_dense(N, dense)

    __radd__ = __add__

    @staticmethod
    def _from_dense(N, dense):
        if N == 1:
            c = _norm_coeff(dense.get(0, 0))
            return Cyclotomic._from_canonical(1, {0: c} if c else {})
        m, canon = _descend(N, _canonical_at(N, dense))
        return Cyclotomic._from_canonical(m, canon)

    def __neg__(self):
        return Cyclotomic._from_canonical(self.n, {k: -c for k, c in self._coeffs})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, q) -> "Cyclotomic":
        """Multiply by a rational number (keeps the canonical form)."""
        q = Fraction(q) if not isinstance(q, int) else q
        if not q:
            return Cyclotomic._from_canonical(1, {})
        return Cyclotomic._from_canonical(self.n, {k: _norm_coeff(c * q) for k, c in self._coeffs})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.n == 1:
            return other.scale(self._coeffs[0][1]) if self._coeffs else self
        if other.n == 1:
            return self.scale(other._coeffs[0][1]) if other._coeffs else other
        N = lcm(self.n, other.n)
        a, b = self.lifted(N), other.lifted(N)
        dense: dict[int, object] = {}
        for i, x in a.items():
            for j, y in b.items():
                k = (i + j) % N
                dense[k] = dense.get(k, 0) + x * y
        return Cyclotomic._from_dense(N, dense)

    __rmul__ = __mul__

    def galois(self, k: int) -> "Cyclotomic":
        """Apply zeta_n -> zeta_n^k (k must be a unit modulo the conductor)."""
        if gcd(k, self.n) != 1:
            raise DomainError(f"multiplier {k} is not a unit modulo {self.n}")
        if self.n == 1:
            return self
        n = self.n
        return Cyclotomic._from_dense(n, {(i * k) % n: c for i, c in self._coeffs})

    def conjugate(self) -> "Cyclotomic":
        return self.galois(-1)

    def norm(self) -> Fraction:
        """Field norm from Q(zeta_n) down to Q."""
        prod = Cyclotomic.rational(1)
        for k in range(1, self.n + 1):
            if gcd(k, self.n) == 1:
                prod = prod * self.galois(k)
        return prod.to_rational()

    def inverse(self) -> "Cyclotomic":
        if not self._coeffs:
            raise CyclotomicArithmeticError("inverse of zero")
        if self.n == 1:
            return Cyclotomic.rational(1 / Fraction(self._coeffs[0][1]))
        others = Cyclotomic.rational(1)
        for k in range(2, self.n + 1):
            if gcd(k, self.n) == 1:
                others = others * self.galois(k)
        nrm = (self * others).to_rational()
        return others.scale(1 / nrm)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise CyclotomicArithmeticError("division by zero")
            return self.scale(Fraction(1) / other)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = Cyclotomic.rational(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- comparison --------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Cyclotomic):
            return self.n == other.n and self._coeffs == other._coeffs
        if isinstance(other, (int, Rational)):
            return self.n == 1 and (self._coeffs[0][1] if self._coeffs else 0) == other
        return NotImplemented

    def __hash__(self):
        return self._hash

    def __bool__(self):
        return bool(self._coeffs)

    def __complex__(self):
        """Value under the embedding zeta_n -> exp(2 pi i / n)."""
        return complex(sum(float(c) * np.exp(2j * np.pi * k / self.n) for k, c in self._coeffs))

    def sort_key(self) -> tuple:
        return (self.n, tuple((k, -c) for k, c in self._coeffs))

    # -- text ----------------------------------------------------------------

    def __repr__(self):
        return f"Cyclotomic({self})"

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for k, c in self._coeffs:
            if self.n == 1:
                parts.append(str(c))
                continue
            z = f"E({self.n})" + (f"^{k}" if k != 1 else "")
            if k == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append(z)
            elif c == -1:
                parts.append("-" + z)
            else:
                parts.append(f"{c}*{z}")
        return "+".join(parts).replace("+-", "-")

    def to_json(self) -> dict:
        return {"n": self.n, "coeffs": {str(k): str(Fraction(c)) for k, c in self._coeffs}}

    @classmethod
    def from_json(cls, obj: Mapping) -> "Cyclotomic":
        try:
            n = int(obj["n"])
            coeffs = {int(k): Fraction(v) for k, v in obj["coeffs"].items()}
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad cyclotomic encoding {obj!r}") from exc
        return cls(n, coeffs)


ZERO = Cyclotomic.rational(0)
ONE = Cyclotomic.rational(1)


def E(n: int) -> Cyclotomic:
    """The primitive root of unity exp(2 pi i / n)."""
    return Cyclotomic.zeta(n)


# ----------------------------------------------------------------------------
# Galois automorphisms

@dataclass(frozen=True)
class GaloisAut:
    """The automorphism of Q(zeta_n) sending zeta_n to zeta_n^multiplier."""

    conductor: int
    multiplier: int

    def __post_init__(self):
        if self.conductor < 1:
            raise InputError("conductor must be positive")
        if gcd(self.multiplier, self.conductor) != 1:
            raise DomainError(f"{self.multiplier} is not a unit modulo {self.conductor}")
        object.__setattr__(self, "multiplier", self.multiplier % self.conductor if self.conductor > 1 else 1)

    def __mul__(self, other: "GaloisAut") -> "GaloisAut":
        n = lcm(self.conductor, other.conductor)
        return GaloisAut(n, self.multiplier_mod(n) * other.multiplier_mod(n) % n)

    def multiplier_mod(self, n: int) -> int:
        """A multiplier modulo n (a multiple of the conductor) inducing this automorphism."""
        if n % self.conductor:
            raise DomainError(f"{n} is not a multiple of {self.conductor}")
        k = self.multiplier
        while gcd(k, n) != 1:
            k += self.conductor
        return k % n if n > 1 else 1

    def __call__(self, x: Cyclotomic) -> Cyclotomic:
        return galois_apply(self, x)


def galois_apply(sigma: GaloisAut, x: Cyclotomic) -> Cyclotomic:
    if not isinstance(x, Cyclotomic):
        x = Cyclotomic._coerce(x)
    if sigma.conductor % x.n:
        raise DomainError(f"{x} does not lie in Q(zeta_{sigma.conductor})")
    k = sigma.multiplier
    return x.galois(k % x.n if x.n > 1 else 1)


def units(n: int) -> list[int]:
    return [k for k in range(1, n + 1) if gcd(k, n) == 1] if n > 1 else [1]


def p_prime_part(n: int, p: int) -> int:
    while n % p == 0:
        n //= p
    return n


def crt_multiplier(residue_p: int, p_power: int, residue_m: int, m: int) -> int:
    """The k modulo p_power*m with k = residue_p mod p_power and k = residue_m mod m."""
    n = p_power * m
    if m == 1:
        return residue_p % n if n > 1 else 0
    if p_power == 1:
        return residue_m % n
    return (residue_p * m * pow(m, -1, p_power) + residue_m * p_power * pow(p_power, -1, m)) % n


def p_rational_generators(p: int, n: int) -> list[int]:
    """Generators of {k in (Z/n)^x : k = 1 mod m}, m the p'-part of n."""
    m = p_prime_part(n, p)
    pa = n // m
    if pa == 1:
        return []
    if p == 2:
        local = [pa - 1] + ([5] if pa >= 8 else [])
    else:
        local = [int(primitive_root(pa))]
    return [crt_multiplier(g, pa, 1, m) for g in local]


def is_p_rational(values: Iterable[Cyclotomic], p: int, n: int) -> bool:
    """True iff every automorphism of Q(zeta_n) trivial on p'-roots of unity fixes all values."""
    if not isprime(p):
        raise InputError(f"{p} is not a prime")
    values = [Cyclotomic._coerce(v) for v in values]
    for v in values:
        if n % v.n:
            raise DomainError(f"conductor {v.n} does not divide {n}")
    gens = p_rational_generators(p, n)
    return all(v.galois(k % v.n if v.n > 1 else 1) == v for v in values for k in gens)


def sigma_two_special(n: int) -> GaloisAut:
    """The automorphism fixing 2-power roots of unity and squaring odd-order ones."""
    m = p_prime_part(n, 2)
    a2 = n // m
    if m == 1:
        return GaloisAut(max(n, 1), 1)
    return GaloisAut(n, crt_multiplier(1, a2, 2, m))


def value_stabilizer(values: Iterable[Cyclotomic], n: int) -> frozenset[int]:
    """Units k mod n with sigma_k fixing every value (the Galois group over Q(values))."""
    values = list(values)
    return frozenset(k for k in units(n) if all(v.galois(k % v.n if v.n > 1 else 1) == v for v in values))


# ----------------------------------------------------------------------------
# reduction modulo a maximal ideal over p

class ReductionMap:
    """Ring map from the p-local integers of Q(zeta_n) onto GF(p^f).

    ``zeta_{p^a}`` goes to 1 and ``zeta_m = zeta_n^{p^a}`` goes to the least
    element of multiplicative order m in GF(p^f), where f is the order of p
    modulo m.
    """

    def __init__(self, p: int, n: int):
        if not isprime(p):
            raise InputError(f"{p} is not a prime")
        if n < 1:
            raise InputError("exponent must be positive")
        self.p = p
        self.n = n
        self.m = p_prime_part(n, p)
        self.pa = n // self.m
        f = 1
        if self.m > 1:
            while pow(p, f, self.m) != 1:
                f += 1
        self.field = FiniteField(p, f)
        self.zeta_image = self.field.least_element_of_order(self.m)
        self._powers = [self.field.pow(self.zeta_image, t) for t in range(self.m)]
        self._pa_inv = pow(self.pa, -1, self.m) if self.m > 1 else 0

    def __repr__(self):
        return f"ReductionMap(p={self.p}, n={self.n}, target={self.field})"

    def root_image(self, k: int) -> int:
        """Image of zeta_n^k."""
        if self.m == 1:
            return 1
        return self._powers[(k * self._pa_inv) % self.m]

    def reduce(self, x) -> int:
        x = Cyclotomic._coerce(x)
        if self.n % x.n:
            raise DomainError(f"conductor {x.n} does not divide {self.n}")
        F = self.field
        acc = [0] * F.f
        s = self.n // x.n
        for k, c in x._coeffs:
            if isinstance(c, Fraction):
                if c.denominator % self.p == 0:
                    raise CyclotomicArithmeticError(f"{x} is not integral at {self.p}")
                c = c.numerator * pow(c.denominator, -1, self.p)
            c %= self.p
            if not c:
                continue
            img = F.to_poly(self.root_image(k * s))
            for i, d in enumerate(img):
                acc[i] = (acc[i] + c * d) % self.p
        return F.from_poly(acc)


def build_reduction(p: int, n: int) -> ReductionMap:
    return ReductionMap(p, n)


@lru_cache(maxsize=None)
def cached_reduction(p: int, n: int) -> ReductionMap:
    return ReductionMap(p, n)


def reduce(rmap: ReductionMap, x) -> int:
    return rmap.reduce(x)
