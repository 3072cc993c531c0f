"""p-blocks of characters from reduced central characters.

Two irreducibles lie in the same p-block exactly when their central characters
``omega_chi(K) = |K| chi(x_K) / chi(1)`` agree after reduction modulo a fixed
maximal ideal over p.  The reduction is the explicit ring map of
:class:`~blockscope.cyclo.ReductionMap`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .chartab import Character, CharacterTable
from .cyclo import Cyclotomic, cached_reduction, expansion_matrix, galois_apply, is_p_rational, \
    sigma_two_special
from .errors import InputError
from .permgroup import _check_prime


def _valuation(n: int, p: int) -> int:
    v = 0
    while n and n % p == 0:
        n //= p
        v += 1
    return v


def central_character(chi: Character) -> list[Cyclotomic]:
    """The values ``|K| chi(x_K) / chi(1)``, checked to be algebraic integers."""
    T = chi.table
    out = []
    for k, v in enumerate(chi.values):
        w = v.scale(int(T.sizes[k])) / chi.degree
        if not w.is_integral():
            raise ArithmeticError(f"central character value {w} is not an algebraic integer")
        out.append(w)
    return out


def _root_images(T: CharacterTable, p: int) -> np.ndarray:
    """Coefficient vectors of the reductions of zeta_e^j, shape (e, f)."""
    rmap = cached_reduction(p, T.exponent)
    F = rmap.field
    out = np.zeros((T.exponent, F.f), dtype=np.int64)
    for j in range(T.exponent):
        poly = F.to_poly(rmap.root_image(j))
        out[j, :len(poly)] = poly
    return out


def reduced_central_characters(T: CharacterTable, p: int) -> np.ndarray:
    """Fingerprint array of shape (characters, classes) with encoded field elements."""
    _check_prime(p)
    E = expansion_matrix(T.exponent)
    canon = T.data @ E  # (chars, classes, e) canonical coefficients of chi(x_K)
    degrees = np.array(T.degrees, dtype=np.int64)
    scaled = canon * T.sizes[None, :, None]
    if np.any(scaled % degrees[:, None, None]):
        bad = np.argwhere(scaled % degrees[:, None, None])[0]
        raise ArithmeticError(f"central character of character {bad[0]} is not integral at class {bad[1]}")
    omega = (scaled // degrees[:, None, None]) % p
    images = _root_images(T, p)
    reduced = np.einsum("ckj,jf->ckf", omega, images) % p
    weights = p ** np.arange(images.shape[1], dtype=np.int64)
    return reduced @ weights


@dataclass(frozen=True)
class BlockData:
    """Defect and heights of one block."""

    defect: int
    heights: dict[int, int]

    def height_zero(self) -> list[int]:
        return [i for i, h in self.heights.items() if h == 0]


@dataclass(frozen=True)
class BlockPartition:
    """The p-blocks of a character table, principal block first."""

    table: CharacterTable
    p: int
    fingerprints: np.ndarray
    blocks: tuple[tuple[int, ...], ...]
    principal_index: int = 0
    _block_of: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        for b, members in enumerate(self.blocks):
            for i in members:
                self._block_of[i] = b

    def __len__(self):
        return len(self.blocks)

    def block_of(self, i: int) -> int:
        return self._block_of[i]

    def characters(self, b: int) -> list[Character]:
        return [self.table[i] for i in self.blocks[b]]

    @property
    def principal(self) -> list[Character]:
        return self.characters(self.principal_index)

    def in_principal(self, chi: Character) -> bool:
        return self._block_of[chi.index] == self.principal_index

    @cached_property
    def group_valuation(self) -> int:
        return _valuation(self.table.order, self.p)

    def block_data(self, b: int) -> BlockData:
        a = self.group_valuation
        vals = {i: _valuation(self.table[i].degree, self.p) for i in self.blocks[b]}
        d = a - min(vals.values())
        return BlockData(d, {i: v - (a - d) for i, v in vals.items()})

    def to_json(self) -> dict:
        out = []
        for b, members in enumerate(self.blocks):
            data = self.block_data(b)
            out.append({
                "members": list(members),
                "degrees": [self.table[i].degree for i in members],
                "defect": data.defect,
                "heights": [data.heights[i] for i in members],
                "p_rational": [is_p_rational_character(self.table[i], self.p) for i in members],
                "fingerprint": [int(x) for x in self.fingerprints[members[0]]],
            })
        return {"p": self.p, "order": self.table.order, "principal": self.principal_index,
                "field_degree": int(_root_images(self.table, self.p).shape[1]), "blocks": out}


def block_distribution(T: CharacterTable, p: int) -> BlockPartition:
    _check_prime(p)
    fp = reduced_central_characters(T, p)
    groups: dict[bytes, list[int]] = {}
    for i in range(len(T)):
        groups.setdefault(fp[i].tobytes(), []).append(i)
    blocks = sorted((tuple(m) for m in groups.values()), key=lambda m: (0 not in m, m[0]))
    principal = fp[0]
    expect = T.sizes % p
    if not np.array_equal(principal, expect):
        raise ArithmeticError("trivial character fingerprint differs from class sizes mod p")
    return BlockPartition(T, p, fp, tuple(blocks))


def principal_block_characters(T: CharacterTable, p: int) -> list[Character]:
    return block_distribution(T, p).principal


def defect_and_heights(partition: BlockPartition, block: int) -> BlockData:
    return partition.block_data(block)


def is_p_rational_character(chi: Character, p: int) -> bool:
    return is_p_rational(chi.values, p, chi.table.exponent)


def p_prime_degree(chars, p: int) -> list[Character]:
    chars = chars.irreducibles if isinstance(chars, CharacterTable) else chars
    return [c for c in chars if c.degree % p]


def p_rational_chars(chars, p: int) -> list[Character]:
    chars = chars.irreducibles if isinstance(chars, CharacterTable) else chars
    return [c for c in chars if is_p_rational_character(c, p)]


def height_zero_chars(partition: BlockPartition, block: int) -> list[Character]:
    data = partition.block_data(block)
    return [partition.table[i] for i in data.height_zero()]


def nontrivial_rational_p_prime_principal(T: CharacterTable, p: int,
                                          partition: BlockPartition | None = None) -> list[Character]:
    """Nontrivial p-rational characters of p'-degree in the principal block."""
    partition = partition or block_distribution(T, p)
    return [c for c in partition.principal
            if c.index != 0 and c.degree % p and is_p_rational_character(c, p)]


def sigma2_check(T: CharacterTable, partition: BlockPartition | None = None) -> list[Character]:
    """Odd-degree principal 2-block characters moved by the special automorphism."""
    if T.order % 2:
        raise InputError("the group has odd order")
    partition = partition or block_distribution(T, 2)
    sigma = sigma_two_special(T.exponent)
    return [c for c in partition.principal
            if c.degree % 2 and [galois_apply(sigma, v) for v in c.values] != c.values]
