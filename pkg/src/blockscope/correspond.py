"""Relative Glauberman correspondence and canonical p-rational extensions.

Both constructions are computed directly from character tables and then
checked against every side condition they are known to satisfy.  A failed
uniqueness step raises :class:`TheoremViolation` with diagnostics; the softer
side conditions are recorded as boolean checks on the result.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .blocks import BlockPartition, block_distribution, is_p_rational_character
from .chartab import (Character, CharacterTable, ClassFunction, compute_character_table, constituents,
                      induce_character, restrict_character)
from .cyclo import units
from .errors import DomainError, HypothesisError, TheoremViolation
from .permgroup import (PermGroup, Permutation, _check_prime, centralizer_of_subgroup, is_normal,
                        is_p_group, p_part, sylow_subgroup)


# ----------------------------------------------------------------------------
# actions on classes and characters

def class_permutation(T: CharacterTable, x: Permutation) -> np.ndarray:
    """``perm[k]`` is the class of ``x^-1 rep_k x``; x must normalize the group of T."""
    K = T.group
    reps = K.element_array[T.classes.rep_indices].astype(np.int64)
    xi = np.array(x.images, dtype=np.int64)
    x_inv = np.argsort(xi)
    conj = xi[reps[:, x_inv]]
    try:
        return T.classes.class_of[K.indices_of_rows(conj)]
    except DomainError:
        raise DomainError(f"{x} does not normalize the group") from None


def _canonical_stack(T: CharacterTable) -> np.ndarray:
    return np.stack([c.canonical for c in T.irreducibles])


def invariant_mask(T: CharacterTable, elements) -> np.ndarray:
    """Boolean mask of the irreducibles of T fixed by conjugation with every element."""
    canon = _canonical_stack(T)
    mask = np.ones(len(T), dtype=bool)
    for x in elements:
        perm = class_permutation(T, x)
        mask &= (canon[:, perm] == canon).all(axis=(1, 2))
    return mask


def character_action(T: CharacterTable, x: Permutation) -> np.ndarray:
    """Index permutation of Irr(K) induced by conjugation with x."""
    perm = class_permutation(T, x)
    canon = _canonical_stack(T)
    lookup = {c.tobytes(): i for i, c in enumerate(canon)}
    return np.array([lookup[c[perm].tobytes()] for c in canon], dtype=np.int64)


def p_invariant_characters(T: CharacterTable, P: PermGroup) -> list[Character]:
    """Irr_P: the irreducibles invariant under conjugation by P."""
    mask = invariant_mask(T, P.generators)
    return [c for c, ok in zip(T.irreducibles, mask) if ok]


def _orbits(n: int, perms: list[np.ndarray]) -> list[int]:
    """Orbit label (least member) of each point under the group generated by perms."""
    label = list(range(n))
    for start in range(n):
        if label[start] != start:
            continue
        stack = [start]
        seen = {start}
        while stack:
            i = stack.pop()
            for perm in perms:
                j = int(perm[i])
                if j not in seen:
                    seen.add(j)
                    label[j] = start
                    stack.append(j)
    return label


def unit_generators(n: int) -> list[int]:
    """A small generating set of (Z/n)^x, chosen greedily in increasing order."""
    if n <= 2:
        return []
    reached = {1}
    gens = []
    for k in units(n):
        if k in reached:
            continue
        gens.append(k)
        frontier = list(reached)
        while frontier:
            nxt = []
            for a in frontier:
                for g in gens:
                    b = a * g % n
                    if b not in reached:
                        reached.add(b)
                        nxt.append(b)
            frontier = nxt
    return gens


def value_stabilizer(chi: ClassFunction, n: int) -> frozenset[int]:
    """Units k mod n (n a multiple of the table exponent) with chi^sigma_k = chi."""
    e = chi.table.exponent
    if n % e:
        raise DomainError(f"{n} is not a multiple of the exponent {e}")
    return frozenset(k for k in units(n) if chi.galois(k % e if e > 1 else 1) == chi)


# ----------------------------------------------------------------------------
# scenes

@dataclass(frozen=True)
class ActionScene:
    """A p-group P acting on G by conjugation inside an ambient group, relative to N."""

    ambient: PermGroup
    G: PermGroup
    N: PermGroup
    P: PermGroup
    p: int
    name: str = ""

    def validate(self):
        _check_prime(self.p)
        A, G, N, P, p = self.ambient, self.G, self.N, self.P, self.p
        for H, label in ((G, "G"), (N, "N"), (P, "P")):
            if not H.is_subgroup_of(A):
                raise DomainError(f"{label} is not a subgroup of the ambient group")
        if not N.is_subgroup_of(G):
            raise DomainError("N is not contained in G")
        if not is_normal(A, G):
            raise DomainError("G is not normal in the ambient group")
        if not is_normal(A, N):
            raise DomainError("N is not normal in the ambient group")
        if not is_p_group(P, p):
            raise DomainError("P is not a p-group")
        GP = PermGroup(A.degree, list(G.generators) + list(P.generators))
        if GP.order != A.order:
            raise DomainError("the ambient group is not G*P")
        if (G.order // N.order) % p == 0:
            raise DomainError("G/N is not a p'-group")
        return self


def compute_C(scene: ActionScene) -> PermGroup:
    """The preimage in G of the P-fixed points on G/N."""
    scene.validate()
    G, N = scene.G, scene.N
    arr = G.element_array.astype(np.int64)
    g_inv = np.argsort(arr, axis=1)
    ok = np.ones(len(arr), dtype=bool)
    n_keys = N._index
    dtype = N.element_array.dtype
    for x in scene.P.generators:
        xi = np.array(x.images, dtype=np.int64)
        x_inv = np.argsort(xi)
        conj = xi[arr[:, x_inv]]  # x^-1 g x
        comm = np.take_along_axis(conj, g_inv, axis=1)  # g^-1 (x^-1 g x)
        ok &= np.fromiter((r.astype(dtype).tobytes() in n_keys for r in comm), dtype=bool, count=len(comm))
    return G.subgroup_from_indices(np.flatnonzero(ok))


@dataclass
class CorrespondencePair:
    source: int          # index in Irr(G)
    image: int           # index in Irr(C)
    e: int               # multiplicity of the image in the restriction
    delta: dict[int, int]  # constituents over Irr_P(N) with multiplicity divisible by p (mult / p)
    xi: dict[int, int]     # constituents lying over no P-invariant character of N


@dataclass
class CorrespondenceResult:
    scene: ActionScene
    C: PermGroup
    pairs: dict[int, CorrespondencePair]
    irr_p_G: list[int]
    irr_p_C: list[int]
    checks: dict[str, bool] = field(default_factory=dict)
    notes: dict[str, object] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def mapping(self) -> dict[int, int]:
        return {i: pr.image for i, pr in self.pairs.items()}

    def to_json(self) -> dict:
        return {
            "scene": self.scene.name,
            "p": self.scene.p,
            "orders": {"ambient": self.scene.ambient.order, "G": self.scene.G.order,
                       "N": self.scene.N.order, "P": self.scene.P.order, "C": self.C.order},
            "pairs": [{"chi": pr.source, "chi_star": pr.image, "e": pr.e,
                       "delta": {str(k): v for k, v in sorted(pr.delta.items())},
                       "xi": {str(k): v for k, v in sorted(pr.xi.items())}}
                      for _, pr in sorted(self.pairs.items())],
            "checks": dict(sorted(self.checks.items())),
        }


def relative_glauberman(scene: ActionScene) -> CorrespondenceResult:
    scene.validate()
    p = scene.p
    G, N, P = scene.G, scene.N, scene.P
    C = compute_C(scene)
    TG = compute_character_table(G)
    TC = compute_character_table(C)
    TN = compute_character_table(N)

    irr_p_G = [c.index for c in p_invariant_characters(TG, P)]
    irr_p_C = [c.index for c in p_invariant_characters(TC, P)]
    inv_N = invariant_mask(TN, P.generators)

    # for each irreducible of C, the set of irreducibles of N below it
    res_CN = [restrict_character(c, TN) for c in TC.irreducibles]
    below = TN.decomposition(res_CN)
    over_invariant = [bool(np.any((row != 0) & inv_N)) for row in below]

    res_GC = [restrict_character(TG[i], TC) for i in irr_p_G]
    dec = TC.decomposition(res_GC) if res_GC else np.zeros((0, len(TC)), dtype=object)

    pairs: dict[int, CorrespondencePair] = {}
    for row, i in zip(dec, irr_p_G):
        mults = {j: int(m) for j, m in enumerate(row) if m}
        qualifying = {j: m for j, m in mults.items() if over_invariant[j]}
        units_ = [j for j, m in qualifying.items() if m % p]
        if len(units_) != 1:
            raise TheoremViolation(
                "restriction does not single out one constituent of multiplicity prime to p",
                {"scene": scene.name, "chi": i, "constituents": mults,
                 "over_invariant": sorted(qualifying), "candidates": units_})
        star = units_[0]
        delta = {j: m // p for j, m in qualifying.items() if j != star}
        xi = {j: m for j, m in mults.items() if not over_invariant[j]}
        pairs[i] = CorrespondencePair(i, star, qualifying[star], delta, xi)

    result = CorrespondenceResult(scene, C, pairs, irr_p_G, irr_p_C)
    chk = result.checks
    images = [pr.image for pr in pairs.values()]
    chk["image_in_irr_p_C"] = set(images) <= set(irr_p_C)
    chk["bijective"] = len(set(images)) == len(images) == len(irr_p_C)
    chk["e_is_plus_minus_one"] = all(pr.e % p in (1, p - 1) for pr in pairs.values())

    n = TG.exponent
    chk["field_equality"] = all(value_stabilizer(TG[i], n) == value_stabilizer(TC[pr.image], n)
                                for i, pr in pairs.items())

    mapping = result.mapping()
    equivariant = True
    for k in unit_generators(n):
        perm_G = TG.galois_permutation(k)
        perm_C = TC.galois_permutation(k % TC.exponent if TC.exponent > 1 else 1)
        for i, j in mapping.items():
            if mapping.get(perm_G[i]) != perm_C[j]:
                equivariant = False
    chk["galois_equivariant"] = equivariant

    BG = block_distribution(TG, p)
    BC = block_distribution(TC, p)
    chk["principal_block_preserved"] = all(
        BG.in_principal(TG[i]) == BC.in_principal(TC[j])
        for i, j in mapping.items() if TG[i].degree % p)

    # Clifford: the P-invariant constituents of chi_N form one C-orbit
    c_perms = [character_action(TN, c) for c in C.generators]
    orbit = _orbits(len(TN), c_perms)
    res_GN = [restrict_character(TG[i], TN) for i in irr_p_G]
    dec_N = TN.decomposition(res_GN) if res_GN else []
    clifford = True
    for row in dec_N:
        inv_consts = [j for j, m in enumerate(row) if m and inv_N[j]]
        if not inv_consts or len({orbit[j] for j in inv_consts}) != 1:
            clifford = False
    chk["clifford_single_orbit"] = clifford

    if C.order == G.order:
        inv_G = set(irr_p_G)
        res_all = [restrict_character(c, TN) for c in TG.irreducibles]
        dec_all = TN.decomposition(res_all)
        chk["invariant_over_invariant"] = all(
            i in inv_G for i, row in enumerate(dec_all) if np.any((row != 0) & inv_N))
    return result


# ----------------------------------------------------------------------------
# canonical p-rational extensions

@dataclass
class ExtensionResult:
    chi: Character
    eta: Character
    M: PermGroup
    local_extensions: int
    count_in_principal: int
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def is_invariant_in(theta: Character, G: PermGroup) -> bool:
    return bool(invariant_mask(theta.table, G.generators)[theta.index])


def check_extension_hypotheses(G: PermGroup, N: PermGroup, theta: Character, p: int):
    """Raise HypothesisError unless (G, N, theta, p) meets every stated hypothesis."""
    _check_prime(p)
    if p == 2:
        raise HypothesisError("p must be odd")
    if not N.is_subgroup_of(G) or not is_normal(G, N):
        raise HypothesisError("N is not normal in G")
    TN = theta.table
    if not TN.group.same_as(N):
        raise HypothesisError("theta is not a character of N")
    if theta.degree % p == 0:
        raise HypothesisError("theta does not have p'-degree")
    if not is_p_rational_character(theta, p):
        raise HypothesisError("theta is not p-rational")
    if not is_invariant_in(theta, G):
        raise HypothesisError("theta is not G-invariant")
    if not block_distribution(TN, p).in_principal(theta):
        raise HypothesisError("theta is not in the principal block of N")
    Q = sylow_subgroup(N, p)
    M = PermGroup(G.degree, list(N.generators) + list(centralizer_of_subgroup(G, Q).generators))
    index = G.order // M.order
    if p_part(index, p) != index:
        raise HypothesisError("|G : N C_G(Q)| is not a power of p")
    return M


def _rational_principal_extensions(theta: Character, TH: CharacterTable, p: int,
                                   partition: BlockPartition | None = None) -> list[Character]:
    partition = partition or block_distribution(TH, p)
    TN = theta.table
    return [c for c in partition.principal
            if c.degree == theta.degree and is_p_rational_character(c, p)
            and restrict_character(c, TN) == theta]


def theorem_F_extension(G: PermGroup, N: PermGroup, theta: Character, p: int) -> ExtensionResult:
    """The p-rational principal-block extension of theta singled out by local extensions."""
    M = check_extension_hypotheses(G, N, theta, p)
    TN = theta.table
    TM = compute_character_table(M)
    local: dict[bytes, Character] = {}
    values = []
    n_idx = M.subgroup_index_set(N)
    for m, mi in zip(TM.classes.representatives, TM.classes.rep_indices):
        # N<m> is the union of the cosets N m^k, since N is normal
        powers = [0]
        while (nxt := int(M.multiply_indices(powers[-1], mi))) != 0:
            powers.append(nxt)
        key = np.unique(M.multiply_indices(n_idx[:, None], np.array(powers)[None, :])).tobytes()
        ext = local.get(key)
        if ext is None:
            H = PermGroup(G.degree, list(N.generators) + [m])
            TH = compute_character_table(H)
            found = _rational_principal_extensions(theta, TH, p)
            if len(found) != 1:
                raise TheoremViolation("theta has no unique p-rational principal extension to N<m>",
                                       {"m": m.cycles(), "found": [c.index for c in found],
                                        "order_H": H.order})
            ext = local[key] = found[0]
        values.append(ext.values[ext.table.classes.class_of_element(m)])

    eta_cf = ClassFunction.from_values(TM, values)
    eta = TM.find(eta_cf)
    if eta is None:
        diag = {"norm": str(TM.gram_matrix([eta_cf], [eta_cf])[0, 0])}
        raise TheoremViolation("assembled class function is not irreducible", diag)

    induced = induce_character(eta, G)
    TG = induced.table
    rational = [c for c, _ in constituents(induced) if is_p_rational_character(c, p)]
    if len(rational) != 1:
        raise TheoremViolation("induced character has no unique p-rational constituent",
                               {"candidates": [c.index for c in rational]})
    chi = rational[0]
    BG = block_distribution(TG, p)
    count = len(_rational_principal_extensions(theta, TG, p, BG))
    result = ExtensionResult(chi, eta, M, len(local), count)
    result.checks["eta_norm_one"] = TM.gram_matrix([eta], [eta])[0, 0] == 1
    result.checks["eta_extends_theta"] = restrict_character(eta, TN) == theta
    result.checks["chi_extends_theta"] = restrict_character(chi, TN) == theta
    result.checks["chi_p_rational"] = is_p_rational_character(chi, p)
    result.checks["chi_principal"] = BG.in_principal(chi)
    return result


def extension_count(G: PermGroup, theta: Character, p: int) -> int:
    """Number of p-rational extensions of theta lying in the principal block of G."""
    return len(_rational_principal_extensions(theta, compute_character_table(G), p))


__all__ = [
    "ActionScene", "CorrespondencePair", "CorrespondenceResult", "ExtensionResult",
    "character_action", "check_extension_hypotheses", "class_permutation", "compute_C",
    "extension_count", "invariant_mask", "p_invariant_characters", "relative_glauberman",
    "theorem_F_extension", "unit_generators", "value_stabilizer",
]
