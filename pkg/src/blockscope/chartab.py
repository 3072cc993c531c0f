"""Ordinary character tables via Dixon-Schneider, and class-function algebra.

Class functions are stored as integer arrays ``data[k, j]`` over the group
exponent e, meaning that the value on class k is ``sum_j data[k, j] * zeta_e^j``
(divided by an integer ``denom``).  For a character computed here, ``data[k]``
is the multiplicity of each eigenvalue ``zeta_e^j`` of the representing matrix
of the class representative.  The representation is not unique, so equality
and ordering go through the canonical basis coefficients (``data @ E``, E the
expansion matrix of the cyclotomic basis at conductor e).

Exact inner products are computed as integer cyclic correlations of these
arrays.  The correlation is evaluated with an FFT and rounded; every rounding
is checked against a tolerance far below 1/2, so the recovered integers are
exact.
"""
from __future__ import annotations

import json
from fractions import Fraction
from functools import cached_property
from math import ceil, gcd, isqrt
from typing import Iterable, Sequence

import numpy as np
from sympy import isprime, primitive_root

from . import modp
from .cyclo import Cyclotomic, expansion_matrix
from .errors import DomainError, InputError
from .permgroup import (ConjugacyClasses, PermGroup, Permutation, QuotientMap, is_normal,
                        prime_divisors)

_ROUNDING_TOLERANCE = 1e-3


# ----------------------------------------------------------------------------
# exact correlation kernels

def _rebase(data: np.ndarray, e_from: int, e_to: int) -> np.ndarray:
    """Re-express exponent vectors over zeta_{e_from} as vectors over zeta_{e_to}."""
    if e_from == e_to:
        return data
    if e_to % e_from == 0:
        s = e_to // e_from
        out = np.zeros(data.shape[:-1] + (e_to,), dtype=np.int64)
        out[..., ::s] = data
        return out
    if e_from % e_to == 0:
        s = e_from // e_to
        mask = np.ones(e_from, dtype=bool)
        mask[::s] = False
        if np.any(data[..., mask]):
            raise DomainError(f"values do not lie in Q(zeta_{e_to})")
        return np.ascontiguousarray(data[..., ::s])
    raise DomainError(f"cannot rebase from exponent {e_from} to {e_to}")


def _correlate(A: np.ndarray, B: np.ndarray, weights: np.ndarray) -> np.ndarray:
    """``out[a, b, s] = sum_k w_k sum_j A[a, k, j] * B[b, k, j - s]`` computed exactly."""
    FA = np.fft.fft(A.astype(np.float64), axis=2) * weights[None, :, None]
    FB = np.conj(np.fft.fft(B.astype(np.float64), axis=2))
    prod = np.matmul(FA.transpose(2, 0, 1), FB.transpose(2, 1, 0))  # (f, a, b)
    out = np.fft.ifft(prod.transpose(1, 2, 0), axis=2).real
    rounded = np.rint(out)
    if out.size and np.max(np.abs(out - rounded)) > _ROUNDING_TOLERANCE:
        raise ArithmeticError("correlation lost exactness; values too large for float64")
    return rounded.astype(np.int64)


def _rational_or_none(canon: np.ndarray, e: int) -> np.ndarray | None:
    """For canonical vectors (..., e) return the rational parts, or None if any is irrational."""
    one = expansion_matrix(e)[0]
    pivot = int(np.flatnonzero(one)[0])
    q = canon[..., pivot] * one[pivot]
    if np.array_equal(canon, q[..., None] * one):
        return q
    return None


# ----------------------------------------------------------------------------
# class functions

class ClassFunction:
    """A class function on the group of a :class:`CharacterTable`."""

    def __init__(self, table: "CharacterTable", data: np.ndarray, denom: int = 1):
        data = np.asarray(data, dtype=np.int64)
        if data.shape != (table.nr_classes, table.exponent):
            raise DomainError(f"class function data of shape {data.shape} for {table}")
        if denom <= 0:
            raise InputError("denominator must be positive")
        g = gcd(int(np.gcd.reduce(data.ravel())) if data.size else 0, denom)
        if g > 1:
            data, denom = data // g, denom // g
        data.setflags(write=False)
        self.table = table
        self.data = data
        self.denom = denom

    @classmethod
    def from_values(cls, table: "CharacterTable", values: Sequence) -> "ClassFunction":
        if len(values) != table.nr_classes:
            raise DomainError("one value per class is required")
        e = table.exponent
        vals = [Cyclotomic._coerce(v) for v in values]
        den = 1
        for v in vals:
            if e % v.n:
                raise DomainError(f"value {v} does not lie in Q(zeta_{e})")
            den = den * v.denominator() // gcd(den, v.denominator())
        data = np.zeros((len(vals), e), dtype=np.int64)
        for k, v in enumerate(vals):
            for j, c in v.lifted(e).items():
                data[k, j] += int(Fraction(c) * den)
        return cls(table, data, den)

    # -- values ------------------------------------------------------------

    def value(self, k: int) -> Cyclotomic:
        return self.values[k]

    @cached_property
    def values(self) -> list[Cyclotomic]:
        e = self.table.exponent
        out = []
        for row in self.data:
            nz = np.flatnonzero(row)
            v = Cyclotomic(e, {int(j): int(row[j]) for j in nz})
            out.append(v.scale(Fraction(1, self.denom)) if self.denom != 1 else v)
        return out

    @property
    def degree(self):
        d = self.values[0].to_rational()
        return d.numerator if d.denominator == 1 else d

    @cached_property
    def canonical(self) -> np.ndarray:
        """Canonical basis coefficients at the table exponent (times ``denom``)."""
        c = self.data @ expansion_matrix(self.table.exponent)
        c.setflags(write=False)
        return c

    @cached_property
    def key(self) -> tuple:
        canon, den = self.canonical, self.denom
        g = gcd(int(np.gcd.reduce(canon.ravel())) if canon.size else 0, den)
        if g > 1:
            canon, den = canon // g, den // g
        return (den, canon.tobytes())

    def is_rational_valued(self) -> bool:
        return _rational_or_none(self.canonical, self.table.exponent) is not None

    # -- algebra -----------------------------------------------------------

    def _check_same(self, other: "ClassFunction"):
        if not isinstance(other, ClassFunction) or other.table is not self.table:
            raise DomainError("class functions belong to different tables")

    def __eq__(self, other):
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return other.table is self.table and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        self._check_same(other)
        den = self.denom * other.denom // gcd(self.denom, other.denom)
        return ClassFunction(self.table, self.data * (den // self.denom) + other.data * (den // other.denom), den)

    def __neg__(self):
        return ClassFunction(self.table, -self.data, self.denom)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, q) -> "ClassFunction":
        q = Fraction(q)
        return ClassFunction(self.table, self.data * q.numerator, self.denom * q.denominator) if q \
            else ClassFunction(self.table, np.zeros_like(self.data))

    def __mul__(self, q):
        if isinstance(q, (int, Fraction)):
            return self.scale(q)
        return NotImplemented

    __rmul__ = __mul__

    def galois(self, k: int) -> "ClassFunction":
        """Apply zeta_e -> zeta_e^k value-wise."""
        e = self.table.exponent
        if gcd(k, e) != 1:
            raise DomainError(f"{k} is not a unit modulo {e}")
        out = np.zeros_like(self.data)
        out[:, (np.arange(e) * k) % e] = self.data
        return ClassFunction(self.table, out, self.denom)

    def conjugate(self) -> "ClassFunction":
        return self.galois(-1)

    def __repr__(self):
        return f"ClassFunction({', '.join(str(v) for v in self.values)})"


class Character(ClassFunction):
    """An irreducible character, stored with its position in the table."""

    def __init__(self, table: "CharacterTable", data: np.ndarray, index: int = -1):
        super().__init__(table, data, 1)
        self.index = index

    def __repr__(self):
        return f"Character(#{self.index}, degree={self.degree})"

    __hash__ = ClassFunction.__hash__


# ----------------------------------------------------------------------------
# the table

class CharacterTable:
    """Classes and irreducible characters of a permutation group."""

    def __init__(self, group: PermGroup, data: np.ndarray, validate: bool = True):
        self.group = group
        self.classes: ConjugacyClasses = group.classes
        self.order = group.order
        self.exponent = group.exponent
        self.nr_classes = len(self.classes)
        self.sizes = self.classes.sizes.astype(np.int64)
        self.centralizer_orders = self.order // self.sizes
        chars = [Character(self, d) for d in np.asarray(data, dtype=np.int64)]
        chars.sort(key=_sort_key)
        for i, c in enumerate(chars):
            c.index = i
        self.irreducibles: list[Character] = chars
        self._lookup = {c.key: c for c in chars}
        if validate:
            self.validate()

    def __repr__(self):
        return f"CharacterTable(order={self.order}, classes={self.nr_classes})"

    def __len__(self):
        return len(self.irreducibles)

    def __iter__(self):
        return iter(self.irreducibles)

    def __getitem__(self, i: int) -> Character:
        return self.irreducibles[i]

    @property
    def trivial(self) -> Character:
        return self.irreducibles[0]

    @cached_property
    def data(self) -> np.ndarray:
        return np.stack([c.data for c in self.irreducibles])

    @property
    def degrees(self) -> list[int]:
        return [c.degree for c in self.irreducibles]

    def find(self, f: ClassFunction) -> Character | None:
        """The irreducible equal to f, if any."""
        if f.table is not self:
            raise DomainError("class function from another table")
        return self._lookup.get(f.key)

    def trivial_class_function(self) -> ClassFunction:
        data = np.zeros((self.nr_classes, self.exponent), dtype=np.int64)
        data[:, 0] = 1
        return ClassFunction(self, data)

    def regular_character(self) -> ClassFunction:
        data = np.zeros((self.nr_classes, self.exponent), dtype=np.int64)
        data[0, 0] = self.order
        return ClassFunction(self, data)

    # -- checks ------------------------------------------------------------

    def gram_matrix(self, left: Sequence[ClassFunction], right: Sequence[ClassFunction]) -> np.ndarray:
        """Matrix of exact inner products; entries are Fractions."""
        for f in list(left) + list(right):
            if f.table is not self:
                raise DomainError("class function from another table")
        if not left or not right:
            return np.zeros((len(left), len(right)), dtype=object)
        A = np.stack([f.data for f in left])
        B = np.stack([f.data for f in right])
        raw = _correlate(A, B, self.sizes.astype(np.float64))
        canon = raw @ expansion_matrix(self.exponent)
        q = _rational_or_none(canon, self.exponent)
        if q is None:
            raise DomainError("inner products of these class functions are not rational")
        out = np.empty(q.shape, dtype=object)
        for a, f in enumerate(left):
            for b, g in enumerate(right):
                out[a, b] = Fraction(int(q[a, b]), self.order * f.denom * g.denom)
        return out

    def decomposition(self, fs: Sequence[ClassFunction]) -> np.ndarray:
        """Rows of inner products of each class function with every irreducible."""
        return self.gram_matrix(fs, self.irreducibles)

    def column_products(self) -> np.ndarray:
        """``out[k, l] = sum_chi chi(x_k) * conj(chi(x_l))`` as rational numbers (integers here)."""
        X = self.data.transpose(1, 0, 2)
        raw = _correlate(X, X, np.ones(len(self), dtype=np.float64))
        canon = raw @ expansion_matrix(self.exponent)
        q = _rational_or_none(canon, self.exponent)
        if q is None:
            raise DomainError("column products are not rational")
        return q

    def validate(self):
        """Check every table invariant exactly; raises InputError on the first failure."""
        n = len(self.irreducibles)
        if n != self.nr_classes:
            raise InputError(f"{n} characters for {self.nr_classes} classes")
        degrees = []
        for c in self.irreducibles:
            d = c.values[0]
            if not d.is_rational() or d.to_rational().denominator != 1 or d.to_rational() <= 0:
                raise InputError(f"character {c.index} has degree {d}")
            degrees.append(int(d.to_rational()))
            if self.order % degrees[-1]:
                raise InputError(f"degree {degrees[-1]} does not divide {self.order}")
        if sum(d * d for d in degrees) != self.order:
            raise InputError("sum of squared degrees differs from the group order")
        triv = self.trivial_class_function()
        if self.irreducibles[0] != triv:
            raise InputError("first character is not the trivial character")
        gram = self.gram_matrix(self.irreducibles, self.irreducibles)
        if not np.array_equal(gram.astype(object), np.eye(n, dtype=np.int64).astype(object)):
            bad = np.argwhere(gram != np.eye(n, dtype=np.int64))
            raise InputError(f"row orthogonality fails at {bad[:3].tolist()}")
        cols = self.column_products()
        if not np.array_equal(cols, np.diag(self.centralizer_orders)):
            raise InputError("column orthogonality fails")

    def galois_permutation(self, k: int) -> list[int]:
        """Where each irreducible goes under zeta_e -> zeta_e^k."""
        out = []
        for c in self.irreducibles:
            img = self.find(c.galois(k))
            if img is None:
                raise DomainError(f"Galois image of {c} is not irreducible")
            out.append(img.index)
        return out

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        G = self.group
        cls = self.classes
        pm = cls.power_map
        return {
            "format": "blockscope-character-table",
            "version": 1,
            "degree": G.degree,
            "generators": [list(g.images) for g in G.generators],
            "order": self.order,
            "exponent": self.exponent,
            "classes": [{"representative": list(cls.representative(k).images),
                         "size": int(cls.sizes[k]), "element_order": int(cls.orders[k])}
                        for k in range(self.nr_classes)],
            "power_maps": {str(p): [int(x) for x in pm[:, p % self.exponent]]
                           for p in prime_divisors(self.order)},
            "irreducibles": [[v.to_json() for v in c.values] for c in self.irreducibles],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, obj: dict) -> "CharacterTable":
        """Rebuild and validate a table, possibly produced elsewhere."""
        try:
            degree = int(obj["degree"])
            gens = [Permutation(g) for g in obj["generators"]]
            class_rows = obj["classes"]
            irr = obj["irreducibles"]
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed character table: {exc}") from exc
        G = PermGroup(degree, gens)
        if "order" in obj and int(obj["order"]) != G.order:
            raise InputError("declared order differs from the generated group")
        ours = G.classes
        if len(class_rows) != len(ours):
            raise InputError("class count differs from the generated group")
        perm = []
        for row in class_rows:
            k = ours.class_of_element(Permutation(row["representative"]))
            if int(row["size"]) != int(ours.sizes[k]):
                raise InputError(f"class size mismatch for {row['representative']}")
            perm.append(k)
        if sorted(perm) != list(range(len(ours))):
            raise InputError("representatives do not cover every class")
        for p, images in obj.get("power_maps", {}).items():
            p = int(p)
            expect = ours.power_map[:, p % G.exponent]
            if any(int(expect[perm[k]]) != perm[int(v)] for k, v in enumerate(images)):
                raise InputError(f"power map for {p} is inconsistent")
        e = G.exponent
        data = np.zeros((len(irr), len(ours), e), dtype=np.int64)
        shell = _Shell(G)
        for i, row in enumerate(irr):
            if len(row) != len(ours):
                raise InputError("character row of wrong length")
            f = ClassFunction.from_values(shell, [Cyclotomic.from_json(v) for v in row])
            if f.denom != 1:
                raise InputError("character values must be algebraic integers")
            data[i, perm] = f.data
        return cls(G, data)

    @classmethod
    def loads(cls, text: str) -> "CharacterTable":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"not JSON: {exc}") from exc
        return cls.from_json(obj)


class _Shell:
    """Just enough of a table to build class functions before the table exists."""

    def __init__(self, G: PermGroup):
        self.nr_classes = len(G.classes)
        self.exponent = G.exponent


def _sort_key(c: ClassFunction):
    triv = not (np.all(c.data[:, 1:] == 0) and np.all(c.data[:, 0] == 1))
    return (c.values[0].to_rational(), triv, tuple(c.canonical.ravel().tolist()))


# ----------------------------------------------------------------------------
# Dixon-Schneider

def working_prime(order: int, exponent: int) -> int:
    """Least prime l = 1 mod exponent with l > 2 * ceil(sqrt(order))."""
    bound = 2 * ceil(order ** 0.5)
    ell = exponent + 1
    while ell <= bound or not isprime(ell):
        ell += exponent
    return ell


def class_constants(G: PermGroup) -> np.ndarray:
    """``a[i, j, k]`` = number of (x, y) in C_i x C_j with x*y = the representative of C_k."""
    cls = G.classes
    r = len(cls)
    inv = G.inverse_indices
    cx = cls.class_of
    a = np.zeros((r, r, r), dtype=np.int64)
    for k in range(r):
        y = G.multiply_indices(inv, int(cls.rep_indices[k]))
        a[:, :, k] = np.bincount(cx * r + cx[y], minlength=r * r).reshape(r, r)
    return a


def _split_eigenspaces(consts: np.ndarray, ell: int) -> list[np.ndarray]:
    """Common eigenvectors of the class matrices modulo ell, one row per character."""
    r = consts.shape[0]
    spaces = [(np.eye(r, dtype=np.int64), list(range(r)))]
    for i in range(1, r):
        if all(len(B) == 1 for B, _ in spaces):
            break
        Mt = (consts[i] % ell).T
        new = []
        for B, piv in spaces:
            if len(B) == 1:
                new.append((B, piv))
                continue
            W = (B @ Mt % ell)[:, piv]
            d = len(B)
            if np.array_equal(W, W[0, 0] * np.eye(d, dtype=np.int64)):
                new.append((B, piv))
                continue
            Wt = W.T
            found = 0
            for lam in modp.roots(modp.charpoly(Wt, ell), ell):
                ns = modp.nullspace((Wt - lam * np.eye(d, dtype=np.int64)) % ell, ell)
                if len(ns):
                    found += len(ns)
                    new.append(modp.rref(ns @ B % ell, ell))
            if found != d:
                raise ArithmeticError("class matrices are not simultaneously diagonalizable")
        spaces = new
    if any(len(B) != 1 for B, _ in spaces):
        raise ArithmeticError("eigenspaces did not split into lines")
    return [B[0] for B, _ in spaces]


def _dixon_schneider(G: PermGroup) -> np.ndarray:
    cls = G.classes
    order = G.order
    e = G.exponent
    ell = working_prime(order, e)
    sizes = cls.sizes.astype(np.int64)
    inv_sizes = np.array([pow(int(s), -1, ell) for s in sizes], dtype=np.int64)
    inv_class = cls.inverse_class
    pm = cls.power_map
    z = pow(int(primitive_root(ell)), (ell - 1) // e, ell)
    t_idx = np.arange(e)
    dft = np.array([[pow(z, (-j * t) % e, ell) for j in range(e)] for t in range(e)], dtype=np.int64)
    inv_e = pow(e, -1, ell)
    out = []
    for v in _split_eigenspaces(class_constants(G), ell):
        omega = v * pow(int(v[0]), -1, ell) % ell
        s = int(np.sum(omega * omega[inv_class] % ell * inv_sizes % ell) % ell)
        target = order * pow(s, -1, ell) % ell
        deg = next((d for d in range(1, isqrt(order) + 1) if d * d % ell == target), None)
        if deg is None:
            raise ArithmeticError("no degree matches the eigenvector")
        vals = omega * deg % ell * inv_sizes % ell
        at_powers = vals[pm[:, t_idx]]
        mult = (at_powers @ dft) % ell * inv_e % ell
        if np.any(mult > deg) or np.any(mult.sum(axis=1) != deg):
            raise ArithmeticError("eigenvalue multiplicities failed to lift")
        out.append(mult)
    return np.array(out, dtype=np.int64)


_TABLE_CACHE: dict = {}
_TABLE_CACHE_LIMIT = 2048


def _cache_key(G: PermGroup):
    return (G.degree, G.element_array.tobytes())


def compute_character_table(G: PermGroup) -> CharacterTable:
    """The character table of G (memoized per element set)."""
    key = _cache_key(G)
    table = _TABLE_CACHE.get(key)
    if table is None:
        table = CharacterTable(G, _dixon_schneider(G))
        if len(_TABLE_CACHE) >= _TABLE_CACHE_LIMIT:
            _TABLE_CACHE.pop(next(iter(_TABLE_CACHE)))
        _TABLE_CACHE[key] = table
    return table


character_table = compute_character_table


# ----------------------------------------------------------------------------
# operations between tables

def inner_product(f: ClassFunction, g: ClassFunction) -> Fraction:
    f._check_same(g)
    return f.table.gram_matrix([f], [g])[0, 0]


def norm(f: ClassFunction) -> Fraction:
    return inner_product(f, f)


def constituents(f: ClassFunction) -> list[tuple[Character, Fraction | int]]:
    """Irreducible constituents of f with their (nonzero) multiplicities."""
    row = f.table.decomposition([f])[0]
    out = []
    for c, m in zip(f.table.irreducibles, row):
        if m:
            out.append((c, m.numerator if m.denominator == 1 else m))
    return out


def is_character(f: ClassFunction) -> bool:
    """True iff f is a nonzero nonnegative integral combination of irreducibles."""
    row = f.table.decomposition([f])[0]
    return any(row) and all(m.denominator == 1 and m >= 0 for m in row)


def fusion_map(tableH: CharacterTable, G: PermGroup) -> np.ndarray:
    """For each class of H, the class of G containing it."""
    H = tableH.group
    if not H.is_subgroup_of(G):
        raise DomainError("not a subgroup")
    reps = H.element_array[tableH.classes.rep_indices]
    return G.classes.class_of[G.indices_of_rows(reps)]


def restrict_character(chi: ClassFunction, H: PermGroup | CharacterTable,
                       tableH: CharacterTable | None = None) -> ClassFunction:
    if isinstance(H, CharacterTable):
        tableH = H
    elif tableH is None:
        tableH = compute_character_table(H)
    G = chi.table.group
    fusion = fusion_map(tableH, G)
    data = _rebase(chi.data[fusion], chi.table.exponent, tableH.exponent)
    return ClassFunction(tableH, data, chi.denom)


def induce_character(theta: ClassFunction, G: PermGroup | CharacterTable,
                     tableG: CharacterTable | None = None) -> ClassFunction:
    if isinstance(G, CharacterTable):
        tableG = G
    elif tableG is None:
        tableG = compute_character_table(G)
    tableH = theta.table
    fusion = fusion_map(tableH, tableG.group)
    up = _rebase(theta.data, tableH.exponent, tableG.exponent)
    factors = tableG.centralizer_orders[fusion] // tableH.centralizer_orders
    data = np.zeros((tableG.nr_classes, tableG.exponent), dtype=np.int64)
    np.add.at(data, fusion, up * factors[:, None])
    return ClassFunction(tableG, data, theta.denom)


def inflate_character(chibar: ClassFunction, qmap: QuotientMap,
                      tableG: CharacterTable | None = None) -> ClassFunction:
    tableQ = chibar.table
    if not tableQ.group.same_as(qmap.image):
        raise DomainError("character does not live on the quotient image")
    if tableG is None:
        tableG = compute_character_table(qmap.source)
    images = [qmap.forward(g) for g in tableG.classes.representatives]
    qcls = [tableQ.classes.class_of_element(x) for x in images]
    data = _rebase(chibar.data[qcls], tableQ.exponent, tableG.exponent)
    return ClassFunction(tableG, data, chibar.denom)


def irr_over(tableG: CharacterTable, tableN: CharacterTable, theta: ClassFunction) -> list[Character]:
    """Irr(G | theta): the irreducible constituents of the induced character."""
    if theta.table is not tableN:
        raise DomainError("theta does not belong to the table of N")
    if not is_normal(tableG.group, tableN.group):
        raise DomainError("N is not normal in G")
    over = [c for c, _ in constituents(induce_character(theta, tableG))]
    # cross-check against restriction multiplicities
    res = [restrict_character(c, tableN) for c in tableG.irreducibles]
    alt = [c for c, r in zip(tableG.irreducibles, tableN.gram_matrix(res, [theta])[:, 0]) if r]
    if [c.index for c in over] != [c.index for c in alt]:
        raise ArithmeticError("Frobenius reciprocity failed in irr_over")
    return over


def character_kernel(chi: ClassFunction) -> PermGroup:
    T = chi.table
    deg = chi.values[0]
    classes = [k for k in range(T.nr_classes) if chi.values[k] == deg]
    members = np.flatnonzero(np.isin(T.classes.class_of, classes))
    return T.group.subgroup_from_indices(members)


def extensions_of(theta: ClassFunction, tableG: CharacterTable) -> list[Character]:
    """The irreducibles of G whose restriction to N equals theta."""
    tableN = theta.table
    out = []
    for c in tableG.irreducibles:
        if c.degree != theta.degree:
            continue
        if restrict_character(c, tableN) == theta:
            out.append(c)
    return out


def p_invariant(chi: ClassFunction, P_generators: Iterable[Permutation]) -> bool:
    """True iff chi is constant under conjugation of its group by every given element."""
    T = chi.table
    reps = T.classes.representatives
    canon = chi.canonical
    for x in P_generators:
        for k, g in enumerate(reps):
            kk = T.classes.class_of_element(g.conjugate(x))
            if not np.array_equal(canon[k], canon[kk]):
                return False
    return True
