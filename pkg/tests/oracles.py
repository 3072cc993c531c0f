"""Brute-force oracles that share no code with the engine.

Elements are plain tuples; products follow the engine's convention
``(a*b)[i] = b[a[i]]``.  Everything here is quadratic or worse in |G| and is
meant for small groups only.
"""
from __future__ import annotations

import cmath
import json
from math import gcd
from pathlib import Path

import numpy as np

CORPUS = Path(__file__).resolve().parents[1] / "src" / "blockscope" / "data" / "corpus"


def cycles_to_tuple(degree: int, cycles) -> tuple:
    img = list(range(degree))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            img[a] = b
    return tuple(img)


def mul(a: tuple, b: tuple) -> tuple:
    return tuple(b[i] for i in a)


def inv(a: tuple) -> tuple:
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def closure(gens, degree: int) -> set:
    e = tuple(range(degree))
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mul(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def load_elements(name: str) -> tuple[int, list]:
    obj = json.loads((CORPUS / f"{name}.json").read_text())
    d = obj["degree"]
    gens = [cycles_to_tuple(d, g) for g in obj["generators"]]
    return d, sorted(closure(gens, d))


def element_order(a: tuple) -> int:
    e = tuple(range(len(a)))
    k, x = 1, a
    while x != e:
        x = mul(x, a)
        k += 1
    return k


def conj(x: tuple, g: tuple) -> tuple:
    return mul(mul(inv(g), x), g)


def classes(elements) -> list[list[tuple]]:
    """Conjugacy classes, each sorted, ordered by least member."""
    left = set(elements)
    out = []
    for x in sorted(elements):
        if x not in left:
            continue
        cls = {conj(x, g) for g in elements}
        left -= cls
        out.append(sorted(cls))
    return out


def centralizer_order(elements, x) -> int:
    return sum(1 for g in elements if mul(g, x) == mul(x, g))


def normalizer_order(elements, H: set) -> int:
    return sum(1 for g in elements if {conj(h, g) for h in H} == H)


def is_subgroup(S: set) -> bool:
    return all(mul(a, b) in S for a in S for b in S)


def sylow_count(elements, P: set) -> int:
    return len({frozenset(conj(h, g) for h in P) for g in elements})


def has_normal_p_complement(elements, p: int) -> bool:
    """A normal p-complement is exactly the set of p'-elements, when that set is a subgroup
    of p'-index equal to the p-part of the order."""
    n = len(elements)
    pp = 1
    while n % (pp * p) == 0:
        pp *= p
    pprime = {x for x in elements if element_order(x) % p}
    return len(pprime) == n // pp and is_subgroup(pprime)


def structure_constants(elements, cls) -> np.ndarray:
    """a[i, j, k] = number of (x, y) in K_i x K_j with x y = z_k for a fixed z_k in K_k."""
    where = {x: i for i, c in enumerate(cls) for x in c}
    k = len(cls)
    a = np.zeros((k, k, k), dtype=np.int64)
    for i in range(k):
        for j in range(k):
            for x in cls[i]:
                for y in cls[j]:
                    a[i, j, where[mul(x, y)]] += 1
            for t in range(k):
                a[i, j, t] //= len(cls[t])
    return a


def float_character_table(elements) -> tuple[list, np.ndarray]:
    """Burnside's method in floating point: simultaneous eigenvectors of the class
    multiplication matrices give central characters, hence degrees and values."""
    cls = classes(elements)
    k = len(cls)
    sizes = np.array([len(c) for c in cls], dtype=float)
    a = structure_constants(elements, cls)
    rng = np.random.default_rng(12345)
    coeffs = rng.normal(size=k)
    # omega(K_i) omega(K_j) = sum_t a[i, j, t] omega(K_t): omega is a right eigenvector of every a[i]
    M = sum(c * a[i].astype(float) for i, c in enumerate(coeffs))
    _, vecs = np.linalg.eig(M)
    rows = []
    for v in vecs.T:
        omega = v / v[0]
        deg2 = len(elements) / np.sum(omega * np.conj(omega) / sizes).real
        deg = np.sqrt(deg2)
        rows.append(omega * deg / sizes)
    rows.sort(key=lambda r: (round(r[0].real), [round(z.real, 6) for z in r]))
    return cls, np.array(rows)


def cyclotomic_complex(x) -> complex:
    return sum(float(c) * cmath.exp(2j * cmath.pi * k / x.conductor) for k, c in x.coeffs.items())


def p_prime_part(n: int, p: int) -> int:
    while n % p == 0:
        n //= p
    return n


def is_p_rational_by_definition(values, p: int, n: int) -> bool:
    """Fixed by every unit k with k = 1 modulo the p'-part of n (enumerating all such k)."""
    m = p_prime_part(n, p)
    for k in range(1, n + 1):
        if gcd(k, n) == 1 and (k - 1) % m == 0:
            if any(v.galois(k % v.conductor if v.conductor > 1 else 1) != v for v in values):
                return False
    return True

