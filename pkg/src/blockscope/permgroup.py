"""Permutation groups on the points {0, ..., n-1}.

Products are read left to right: ``(p * q)(i) = q(p(i))``, so ``x ** g`` style
conjugation is ``g.inverse() * x * g``.  Every group carries a stabilizer
chain (deterministic Schreier-Sims) for order and membership, and a sorted
element list for anything that needs enumeration.  Enumeration is refused for
groups larger than :data:`ENUMERATION_LIMIT`.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import Iterable, Sequence

import numpy as np
from sympy import factorint, isprime

from .errors import CapacityError, DomainError, InputError

ENUMERATION_LIMIT = 100_000
CAYLEY_LIMIT = 2048


class Permutation:
    """An immutable permutation, stored as its tuple of images."""

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int]):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(len(images))):
            raise InputError(f"not a permutation: {images}")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def _trusted(cls, images: tuple) -> "Permutation":
        obj = object.__new__(cls)
        obj.images = images
        obj._hash = hash(images)
        return obj

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls._trusted(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Sequence[Sequence[int]]) -> "Permutation":
        images = list(range(degree))
        seen = set()
        for cyc in cycles:
            for a in cyc:
                if not 0 <= a < degree:
                    raise InputError(f"point {a} outside 0..{degree - 1}")
                if a in seen:
                    raise InputError(f"point {a} repeated in cycles {cycles}")
                seen.add(a)
            for a, b in zip(cyc, list(cyc[1:]) + list(cyc[:1])):
                images[a] = b
        return cls._trusted(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        o = other.images
        return Permutation._trusted(tuple(o[i] for i in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation._trusted(tuple(inv))

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self, g: "Permutation") -> "Permutation":
        """Return ``g^-1 * self * g``."""
        return g.inverse() * self * g

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[list[int]]:
        seen = set()
        out = []
        for i in range(len(self.images)):
            if i in seen or self.images[i] == i:
                continue
            cyc = [i]
            seen.add(i)
            j = self.images[i]
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = self.images[j]
            out.append(cyc)
        return out

    def order(self) -> int:
        o = 1
        for c in self.cycles():
            o = o * len(c) // gcd(o, len(c))
        return o

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __hash__(self):
        return self._hash

    def __repr__(self):
        cyc = "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles())
        return f"Permutation({cyc or '()'}, degree={self.degree})"


# ----------------------------------------------------------------------------
# stabilizer chain

def _mul(a: tuple, b: tuple) -> tuple:
    return tuple(b[i] for i in a)


def _inv(a: tuple) -> tuple:
    inv = [0] * len(a)
    for i, j in enumerate(a):
        inv[j] = i
    return tuple(inv)


class _Level:
    __slots__ = ("point", "gens", "transversal")

    def __init__(self, point):
        self.point = point
        self.gens = []
        self.transversal = {}

    def rebuild(self, identity):
        # transversal[x] maps self.point to x
        trans = {self.point: identity}
        queue = [self.point]
        for x in queue:
            u = trans[x]
            for g in self.gens:
                y = g[x]
                if y not in trans:
                    trans[y] = _mul(u, g)
                    queue.append(y)
        self.transversal = trans


class StabilizerChain:
    """Base and strong generating set built by deterministic Schreier-Sims.

    Base points are chosen as the least point moved by the element that
    forces a new level.
    """

    def __init__(self, degree: int, generators: Sequence[tuple]):
        self.degree = degree
        self.identity = tuple(range(degree))
        self.levels: list[_Level] = []
        for g in generators:
            if g != self.identity:
                self._add_strong(g)
        self._complete()

    @property
    def base(self) -> list[int]:
        return [lv.point for lv in self.levels]

    def order(self) -> int:
        o = 1
        for lv in self.levels:
            o *= len(lv.transversal)
        return o

    def sift(self, g: tuple, start: int = 0):
        for i in range(start, len(self.levels)):
            lv = self.levels[i]
            u = lv.transversal.get(g[lv.point])
            if u is None:
                return g, i
            g = _mul(g, _inv(u))
        return g, len(self.levels)

    def contains(self, g: tuple) -> bool:
        if len(g) != self.degree:
            return False
        h, _ = self.sift(g)
        return h == self.identity

    def _add_strong(self, g: tuple):
        # g fixes the current base points of all levels it is added to
        depth = 0
        while depth < len(self.levels) and g[self.levels[depth].point] == self.levels[depth].point:
            depth += 1
        if depth == len(self.levels):
            moved = next(i for i in range(self.degree) if g[i] != i)
            self.levels.append(_Level(moved))
        for i in range(depth + 1):
            self.levels[i].gens.append(g)
            self.levels[i].rebuild(self.identity)

    def _complete(self):
        # repeat until every Schreier generator at every level sifts to identity
        i = len(self.levels) - 1
        while i >= 0:
            lv = self.levels[i]
            added = False
            for x, u in list(lv.transversal.items()):
                for s in lv.gens:
                    y = s[x]
                    schreier = _mul(_mul(u, s), _inv(lv.transversal[y]))
                    h, _ = self.sift(schreier, i + 1)
                    if h != self.identity:
                        self._add_strong(h)
                        added = True
                        break
                if added:
                    break
            if added:
                i = len(self.levels) - 1
            else:
                i -= 1


# ----------------------------------------------------------------------------
# groups

def _rows_to_keys(rows: np.ndarray) -> list[bytes]:
    return [r.tobytes() for r in rows]


class PermGroup:
    """A permutation group given by generators; immutable after construction."""

    def __init__(self, degree: int, generators: Sequence[Permutation] = ()):
        if degree < 1:
            raise InputError("degree must be positive")
        gens = []
        for g in generators:
            if not isinstance(g, Permutation):
                g = Permutation(g)
            if g.degree != degree:
                raise InputError(f"generator of degree {g.degree} in a group of degree {degree}")
            if not g.is_identity():
                gens.append(g)
        self.degree = degree
        self.generators: tuple[Permutation, ...] = tuple(gens)
        self.chain = StabilizerChain(degree, [g.images for g in gens])

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, order={self.order})"

    @property
    def order(self) -> int:
        return self.chain.order()

    def __len__(self):
        return self.order

    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def __contains__(self, g: Permutation) -> bool:
        return g.degree == self.degree and self.chain.contains(g.images)

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return self.degree == other.degree and all(g in other for g in self.generators)

    def same_as(self, other: "PermGroup") -> bool:
        return self.order == other.order and self.is_subgroup_of(other)

    # -- enumeration -------------------------------------------------------

    def _check_capacity(self):
        if self.order > ENUMERATION_LIMIT:
            raise CapacityError(
                f"group of order {self.order} exceeds the enumeration limit {ENUMERATION_LIMIT}")

    @cached_property
    def element_array(self) -> np.ndarray:
        """All elements as rows of images, sorted lexicographically."""
        self._check_capacity()
        dtype = np.uint8 if self.degree <= 256 else np.int32
        ident = np.arange(self.degree, dtype=dtype)
        seen = {ident.tobytes()}
        rows = [ident]
        frontier = ident[None, :]
        gens = [np.array(g.images, dtype=dtype) for g in self.generators]
        while len(frontier):
            new = []
            for g in gens:
                prod = g[frontier]  # (x * g)[i] = g[x[i]]
                for r in prod:
                    k = r.tobytes()
                    if k not in seen:
                        seen.add(k)
                        new.append(r)
            rows.extend(new)
            frontier = np.array(new, dtype=dtype) if new else np.empty((0, self.degree), dtype=dtype)
        arr = np.array(rows, dtype=dtype)
        order = np.lexsort(arr.T[::-1])
        arr = arr[order]
        arr.setflags(write=False)
        return arr

    @cached_property
    def _index(self) -> dict:
        return {k: i for i, k in enumerate(_rows_to_keys(self.element_array))}

    def index_of(self, g: Permutation) -> int:
        key = np.array(g.images, dtype=self.element_array.dtype).tobytes()
        try:
            return self._index[key]
        except KeyError:
            raise DomainError(f"{g} is not an element of {self}") from None

    def indices_of_rows(self, rows: np.ndarray) -> np.ndarray:
        idx = self._index
        rows = rows.astype(self.element_array.dtype, copy=False)
        try:
            return np.fromiter((idx[r.tobytes()] for r in rows), dtype=np.int64, count=len(rows))
        except KeyError:
            raise DomainError("element outside the group") from None

    def element(self, i: int) -> Permutation:
        return Permutation._trusted(tuple(int(x) for x in self.element_array[i]))

    def elements(self) -> list[Permutation]:
        return [self.element(i) for i in range(len(self.element_array))]

    @cached_property
    def inverse_indices(self) -> np.ndarray:
        inv_rows = np.argsort(self.element_array, axis=1)
        return self.indices_of_rows(inv_rows)

    @cached_property
    def cayley_table(self) -> np.ndarray:
        """``table[i, j]`` is the index of ``element(i) * element(j)``."""
        n = self.order
        if n > CAYLEY_LIMIT:
            raise CapacityError(f"no Cayley table for groups of order {n} > {CAYLEY_LIMIT}")
        arr = self.element_array
        table = np.empty((n, n), dtype=np.int32)
        for j in range(n):
            table[:, j] = self.indices_of_rows(arr[j][arr])
        table.setflags(write=False)
        return table

    def multiply_indices(self, i: np.ndarray, j) -> np.ndarray:
        """Indices of ``element(i) * element(j)`` for index arrays (broadcast)."""
        i = np.asarray(i)
        j = np.asarray(j)
        if self.order <= CAYLEY_LIMIT:
            return self.cayley_table[i, j]
        a, b = np.broadcast_arrays(i, j)
        arr = self.element_array
        rows = np.take_along_axis(arr[b.ravel()], arr[a.ravel()].astype(np.int64), axis=1)
        return self.indices_of_rows(rows).reshape(a.shape)

    @cached_property
    def element_orders(self) -> np.ndarray:
        cls = self.classes
        return cls.orders[cls.class_of]

    @cached_property
    def exponent(self) -> int:
        e = 1
        for o in self.classes.orders:
            e = e * int(o) // gcd(e, int(o))
        return e

    @cached_property
    def classes(self) -> "ConjugacyClasses":
        return _compute_classes(self)

    def closure_indices(self, gen_indices: Iterable[int]) -> np.ndarray:
        """Sorted indices of the subgroup generated by the given elements."""
        gens = sorted(set(int(g) for g in gen_indices))
        member = np.zeros(self.order, dtype=bool)
        member[0] = True
        frontier = np.array([0], dtype=np.int64)
        gens_arr = np.array(gens, dtype=np.int64)
        while len(frontier) and len(gens_arr):
            prod = self.multiply_indices(frontier[:, None], gens_arr[None, :]).ravel()
            prod = np.unique(prod)
            new = prod[~member[prod]]
            member[new] = True
            frontier = new
        return np.flatnonzero(member)

    def subgroup_from_indices(self, indices: Sequence[int]) -> "PermGroup":
        """The subgroup generated by the given elements, with few generators."""
        indices = np.unique(np.asarray(indices, dtype=np.int64))
        gens: list[int] = []
        member = np.zeros(self.order, dtype=bool)
        member[0] = True
        for i in indices:
            if not member[i]:
                gens.append(int(i))
                member[self.closure_indices(gens)] = True
        return PermGroup(self.degree, [self.element(i) for i in gens])

    def subgroup_index_set(self, H: "PermGroup") -> np.ndarray:
        """Indices (in this group) of the elements of a subgroup H."""
        if not H.is_subgroup_of(self):
            raise DomainError("not a subgroup")
        return np.sort(self.indices_of_rows(H.element_array))


@dataclass(frozen=True)
class ConjugacyClasses:
    """Conjugacy class data of an enumerated group.

    Classes are ordered by their representative, which is the lexicographically
    least member; class 0 is therefore the identity.
    """

    group: PermGroup
    rep_indices: np.ndarray
    sizes: np.ndarray
    class_of: np.ndarray
    orders: np.ndarray

    def __len__(self):
        return len(self.rep_indices)

    def __iter__(self):
        for k in range(len(self)):
            yield self.representative(k), int(self.sizes[k])

    def representative(self, k: int) -> Permutation:
        return self.group.element(int(self.rep_indices[k]))

    @property
    def representatives(self) -> list[Permutation]:
        return [self.representative(k) for k in range(len(self))]

    def class_of_element(self, g: Permutation) -> int:
        return int(self.class_of[self.group.index_of(g)])

    def members(self, k: int) -> np.ndarray:
        return np.flatnonzero(self.class_of == k)

    @cached_property
    def inverse_class(self) -> np.ndarray:
        return self.class_of[self.group.inverse_indices[self.rep_indices]]

    @cached_property
    def power_map(self) -> np.ndarray:
        """``power_map[k, t]`` is the class of ``rep_k ** t`` for t in 0..exponent-1."""
        G = self.group
        e = G.exponent
        r = len(self)
        pm = np.zeros((r, e), dtype=np.int64)
        cur = np.zeros(r, dtype=np.int64)  # identity index for each class
        reps = self.rep_indices.astype(np.int64)
        for t in range(e):
            pm[:, t] = self.class_of[cur]
            cur = G.multiply_indices(cur, reps)
        return pm


def _compute_classes(G: PermGroup) -> ConjugacyClasses:
    arr = G.element_array
    n = len(arr)
    class_of = np.full(n, -1, dtype=np.int64)
    gens = [np.array(g.images, dtype=np.int64) for g in G.generators]
    gen_invs = [np.argsort(g) for g in gens]
    reps, sizes = [], []
    for start in range(n):
        if class_of[start] >= 0:
            continue
        k = len(reps)
        class_of[start] = k
        frontier = np.array([start], dtype=np.int64)
        size = 1
        while len(frontier):
            rows = arr[frontier].astype(np.int64)
            found = []
            for g, gi in zip(gens, gen_invs):
                conj = g[rows[:, gi]]  # g^-1 x g
                idx = G.indices_of_rows(conj)
                new = np.unique(idx[class_of[idx] < 0])
                class_of[new] = k
                found.append(new)
            frontier = np.unique(np.concatenate(found)) if found else np.empty(0, dtype=np.int64)
            size += len(frontier)
        reps.append(start)
        sizes.append(size)
    orders = np.array([G.element(i).order() for i in reps], dtype=np.int64)
    for a in (class_of,):
        a.setflags(write=False)
    return ConjugacyClasses(G, np.array(reps, dtype=np.int64), np.array(sizes, dtype=np.int64),
                            class_of, orders)


# ----------------------------------------------------------------------------
# operations

def _check_prime(p: int):
    if not isinstance(p, (int, np.integer)) or not isprime(int(p)):
        raise InputError(f"{p} is not a prime")


def p_part(n: int, p: int) -> int:
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


def group_from_generators(degree: int, gens: Sequence) -> PermGroup:
    return PermGroup(degree, [g if isinstance(g, Permutation) else Permutation(g) for g in gens])


def trivial_subgroup(G: PermGroup) -> PermGroup:
    return PermGroup(G.degree, [])


def conjugacy_classes(G: PermGroup) -> ConjugacyClasses:
    return G.classes


def subgroup_generated(G: PermGroup, elems: Sequence[Permutation]) -> PermGroup:
    for x in elems:
        if x not in G:
            raise DomainError(f"{x} is not in the group")
    return PermGroup(G.degree, list(elems))


def centralizer(G: PermGroup, x: Permutation) -> PermGroup:
    """All elements of G commuting with x."""
    if x not in G:
        raise DomainError(f"{x} is not in the group")
    arr = G.element_array.astype(np.int64)
    xi = np.array(x.images, dtype=np.int64)
    xg = arr[:, xi]  # (x * g)[i] = g[x[i]]
    gx = xi[arr]
    hits = np.flatnonzero((xg == gx).all(axis=1))
    return G.subgroup_from_indices(hits)


def centralizer_of_subgroup(G: PermGroup, H: PermGroup) -> PermGroup:
    if not H.is_subgroup_of(G):
        raise DomainError("H is not a subgroup of G")
    arr = G.element_array.astype(np.int64)
    ok = np.ones(len(arr), dtype=bool)
    for h in H.generators:
        hi = np.array(h.images, dtype=np.int64)
        ok &= (arr[:, hi] == hi[arr]).all(axis=1)
    return G.subgroup_from_indices(np.flatnonzero(ok))


def _conjugates_of(G: PermGroup, h: Permutation) -> np.ndarray:
    """Rows ``g^-1 h g`` for every element g of G (in element order)."""
    arr = G.element_array.astype(np.int64)
    inv = np.argsort(arr, axis=1)
    hi = np.array(h.images, dtype=np.int64)
    return np.take_along_axis(arr, hi[inv], axis=1)


def normalizer(G: PermGroup, H: PermGroup) -> PermGroup:
    """All g in G with ``g^-1 H g = H``."""
    if not H.is_subgroup_of(G):
        raise DomainError("H is not a subgroup of G")
    ok = np.ones(G.order, dtype=bool)
    for h in H.generators:
        conj = _conjugates_of(G, h)
        ok &= np.fromiter((H.chain.contains(tuple(int(v) for v in r)) if o else False
                           for r, o in zip(conj, ok)), dtype=bool, count=len(conj))
    return G.subgroup_from_indices(np.flatnonzero(ok))


def is_normal(G: PermGroup, H: PermGroup) -> bool:
    if not H.is_subgroup_of(G):
        raise DomainError("H is not a subgroup of G")
    return all(h.conjugate(g) in H for g in G.generators for h in H.generators)


def sylow_subgroup(G: PermGroup, p: int) -> PermGroup:
    """A Sylow p-subgroup, grown along an ascending chain of p-subgroups."""
    _check_prime(p)
    target = p_part(G.order, p)
    H = trivial_subgroup(G)
    if target == 1:
        return H
    orders = G.element_orders
    is_p_elt = np.array([o > 1 and p_part(int(o), p) == int(o) for o in orders])
    first = int(np.flatnonzero(is_p_elt)[0])
    H = PermGroup(G.degree, [G.element(first)])
    while H.order < target:
        Nm = normalizer(G, H)
        grown = None
        for i in range(Nm.order):
            y = Nm.element(i)
            if y in H or not is_p_elt[G.index_of(y)]:
                continue
            cand = PermGroup(G.degree, list(H.generators) + [y])
            if p_part(cand.order, p) == cand.order:
                grown = cand
                break
        if grown is None:  # pragma: no cover - excluded by Sylow's theorems
            raise AssertionError("no p-element normalizes the current p-subgroup")
        H = grown
    return H


def has_normal_p_complement(G: PermGroup, p: int) -> bool:
    """True iff the p'-elements generate a subgroup of order |G|_{p'}."""
    _check_prime(p)
    target = G.order // p_part(G.order, p)
    if target == G.order:
        return True
    orders = G.element_orders
    pprime = np.flatnonzero(orders % p != 0)
    gens: list[int] = []
    member = np.zeros(G.order, dtype=bool)
    member[0] = True
    size = 1
    for i in pprime:
        if not member[i]:
            gens.append(int(i))
            sub = G.closure_indices(gens)
            member[sub] = True
            size = len(sub)
            if size > target:
                return False
    return size == target


def p_prime_generated(G: PermGroup, p: int) -> PermGroup:
    """The subgroup generated by all p'-elements (O^p(G))."""
    return G.subgroup_from_indices(np.flatnonzero(G.element_orders % p != 0))


@dataclass(frozen=True)
class QuotientMap:
    """The natural map from ``source`` onto its action on the cosets of ``kernel``."""

    source: PermGroup
    kernel: PermGroup
    image: PermGroup
    coset_of: np.ndarray | None  # None for the identity map (trivial kernel)
    coset_reps: np.ndarray | None

    def forward(self, g: Permutation) -> Permutation:
        if self.coset_of is None:
            if g not in self.source:
                raise DomainError(f"{g} not in the source group")
            return g
        S = self.source
        gi = S.index_of(g)
        imgs = self.coset_of[S.multiply_indices(self.coset_reps, gi)]
        return Permutation._trusted(tuple(int(x) for x in imgs))


def quotient(G: PermGroup, N: PermGroup) -> QuotientMap:
    if not is_normal(G, N):
        raise DomainError("N is not normal in G")
    if N.order == 1:
        return QuotientMap(G, N, G, None, None)
    members = G.subgroup_index_set(N)
    n = G.order
    coset_of = np.full(n, -1, dtype=np.int64)
    reps = []
    for i in range(n):
        if coset_of[i] >= 0:
            continue
        coset = G.multiply_indices(members, i)  # right coset N g
        coset_of[coset] = len(reps)
        reps.append(i)
    reps = np.array(reps, dtype=np.int64)
    coset_of.setflags(write=False)
    qm = QuotientMap(G, N, PermGroup(1), coset_of, reps)
    deg = len(reps)
    if deg == 1:
        image = PermGroup(1)
    else:
        image = PermGroup(deg, [qm.forward(g) for g in G.generators])
    return QuotientMap(G, N, image, coset_of, reps)


def normal_closure(G: PermGroup, elems: Sequence[Permutation]) -> PermGroup:
    idx = [G.index_of(x) for x in elems]
    cls = G.classes
    members = np.flatnonzero(np.isin(cls.class_of, cls.class_of[idx]))
    return G.subgroup_from_indices(members)


def normal_subgroups(G: PermGroup, limit: int = 5000) -> list[PermGroup]:
    """All normal subgroups, ordered by (order, sorted class set).

    Every normal subgroup is a product of normal closures of classes, so the
    lattice is the closure of {1} under multiplication by those closures.
    """
    cls = G.classes
    r = len(cls)

    def class_key(indices):
        return frozenset(int(k) for k in np.unique(cls.class_of[indices]))

    ncl = []
    for k in range(1, r):
        members = G.closure_indices(cls.members(k))
        ncl.append(members)
    found = {frozenset([0]): np.array([0], dtype=np.int64)}
    queue = [frozenset([0])]
    while queue:
        key = queue.pop()
        A = found[key]
        for k, M in enumerate(ncl, start=1):
            if k in key:
                continue
            prod = np.unique(G.multiply_indices(A[:, None], M[None, :]).ravel())
            nkey = class_key(prod)
            if nkey not in found:
                found[nkey] = prod
                queue.append(nkey)
                if len(found) > limit:
                    raise CapacityError(f"more than {limit} normal subgroups")
    ordered = sorted(found.items(), key=lambda kv: (len(kv[1]), sorted(kv[0])))
    return [G.subgroup_from_indices(v) for _, v in ordered]


def core_p_prime(G: PermGroup, p: int) -> PermGroup:
    """O_{p'}(G), the largest normal subgroup of order prime to p."""
    _check_prime(p)
    best = trivial_subgroup(G)
    for N in normal_subgroups(G):
        if N.order % p and N.order > best.order:
            best = N
    return best


def is_p_group(G: PermGroup, p: int) -> bool:
    return p_part(G.order, p) == G.order


def prime_divisors(n: int) -> list[int]:
    return sorted(factorint(n))


def derived_subgroup(G: PermGroup) -> PermGroup:
    comms = [a.inverse() * b.inverse() * a * b for a in G.generators for b in G.generators]
    return normal_closure(G, comms) if comms else trivial_subgroup(G)


def is_solvable(G: PermGroup) -> bool:
    H = G
    while H.order > 1:
        D = derived_subgroup(H)
        if D.order == H.order:
            return False
        H = D
    return True


def product_subgroup(G: PermGroup, A: PermGroup, B: PermGroup) -> PermGroup:
    return PermGroup(G.degree, list(A.generators) + list(B.generators))
