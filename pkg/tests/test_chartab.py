import json
import random
from fractions import Fraction

import numpy as np
import pytest

from blockscope.chartab import (CharacterTable, character_kernel, compute_character_table, constituents,
                                extensions_of, induce_character, inflate_character, inner_product,
                                irr_over, restrict_character)
from blockscope.cyclo import E, units
from blockscope.errors import DomainError
from blockscope.permgroup import PermGroup, normal_subgroups, quotient
from helpers import burnside_disagreement, corpus_group, group
from oracles import CORPUS

ORACLE_GROUPS = sorted(p.stem for p in CORPUS.glob("sg_*.json") if int(p.stem.split("_")[1]) <= 32)


# -- examples ----------------------------------------------------------------------

def test_trivial_group_table():
    T = compute_character_table(PermGroup(1))
    assert len(T) == 1 and T[0].values == [1]


def test_c3_table(C3):
    T = compute_character_table(C3)
    assert T.degrees == [1, 1, 1]
    values = {v for c in T for v in c.values}
    assert values == {E(3) ** 0, E(3), E(3) ** 2}


def test_s3_degrees(S3):
    assert sorted(compute_character_table(S3).degrees) == [1, 1, 2]


def test_a6_degrees(A6):
    assert sorted(compute_character_table(A6).degrees) == [1, 5, 5, 8, 8, 9, 10]


def test_trivial_first_and_class_zero_identity(A4):
    T = compute_character_table(A4)
    assert all(v == 1 for v in T.trivial.values)
    assert all(c.values[0] == c.degree for c in T)


def test_restriction_examples(S3, C3):
    TS, TC = compute_character_table(S3), compute_character_table(C3)
    assert restrict_character(TS.trivial, TC) == TC.trivial
    for chi in TS:
        assert restrict_character(chi, TS) == chi
    deg2 = next(c for c in TS if c.degree == 2)
    res = restrict_character(deg2, TC)
    nontrivial = [c for c in TC if c.index != 0]
    assert res == nontrivial[0] + nontrivial[1]


def test_restriction_requires_subgroup(A4):
    T = compute_character_table(A4)
    with pytest.raises(DomainError):
        restrict_character(T.trivial, group(4, (0, 1)))


def test_induction_examples(S3, C3):
    TS, TC = compute_character_table(S3), compute_character_table(C3)
    assert induce_character(TS.trivial, TS) == TS.trivial
    sign = next(c for c in TS if c.degree == 1 and c.index != 0)
    assert induce_character(TC.trivial, TS) == TS.trivial + sign


def test_induction_requires_supergroup(C3):
    TC = compute_character_table(C3)
    other = compute_character_table(group(4, (0, 1, 2, 3)))
    with pytest.raises(DomainError):
        induce_character(TC.trivial, other)


def test_inflation_examples(A4, V4):
    T = compute_character_table(A4)
    q = quotient(A4, V4)
    Tq = compute_character_table(q.image)
    assert inflate_character(Tq.trivial, q, T) == T.trivial
    linear = {inflate_character(c, q, T) for c in Tq}
    assert linear == {c for c in T if c.degree == 1}
    q1 = quotient(A4, PermGroup(4))
    assert {inflate_character(c, q1, T) for c in compute_character_table(q1.image)} == set(T)


def test_irr_over_examples(S3, C3):
    TS, TC = compute_character_table(S3), compute_character_table(C3)
    for chi in TS:
        assert irr_over(TS, TS, chi) == [chi]
    over = irr_over(TS, TC, TC[1])
    assert [c.degree for c in over] == [2]


def test_irr_over_requires_normal(S3):
    TS = compute_character_table(S3)
    H = group(3, (0, 1))
    with pytest.raises(DomainError):
        irr_over(TS, compute_character_table(H), compute_character_table(H).trivial)


def test_kernel_and_extensions(S3, C3):
    TS, TC = compute_character_table(S3), compute_character_table(C3)
    sign = next(c for c in TS if c.degree == 1 and c.index != 0)
    assert character_kernel(sign).order == 3
    assert character_kernel(TS.trivial).order == 6
    deg2 = next(c for c in TS if c.degree == 2)
    assert character_kernel(deg2).order == 1
    assert set(extensions_of(TC.trivial, TS)) == {TS.trivial, sign}
    assert extensions_of(TC[1], TS) == []


def test_inner_product_rejects_mixed_tables(S3, C3):
    with pytest.raises(DomainError):
        inner_product(compute_character_table(S3).trivial, compute_character_table(C3).trivial)


def test_constituents_of_regular_character(A4):
    T = compute_character_table(A4)
    assert [(c.index, m) for c, m in constituents(T.regular_character())] == \
        [(c.index, c.degree) for c in T]


# -- oracles ---------------------------------------------------------------------------

@pytest.mark.parametrize("name", ORACLE_GROUPS)
def test_table_matches_burnside_oracle(name):
    """Engine rows equal, as complex vectors, the rows found by floating-point
    simultaneous diagonalisation of brute-force class multiplication matrices."""
    assert burnside_disagreement(name) is None


@pytest.mark.parametrize("n", [1, 2, 5, 6, 8, 12])
def test_cyclic_table_is_discrete_fourier(n):
    G = group(n, tuple(range(n))) if n > 1 else PermGroup(1)
    T = compute_character_table(G)
    gen = G.generators[0] if n > 1 else G.identity()
    # class of gen^b for each b
    col = [T.classes.class_of_element(gen ** b) for b in range(n)]
    expected = {tuple(E(n) ** (a * b) for b in range(n)) for a in range(n)}
    got = {tuple(c.values[col[b]] for b in range(n)) for c in T}
    assert got == expected


@pytest.mark.parametrize("name", ["sg_24_12", "sg_48_29", "A5", "PSL_2_7", "sg_32_49", "sg_27_4"])
def test_degrees_by_induction_from_cyclic_subgroups(name):
    """Every irreducible occurs in some character induced from a cyclic subgroup, so the
    degree multiset is recovered by decomposing those induced characters."""
    G = corpus_group(name)
    T = compute_character_table(G)
    seen = set()
    for k in range(len(T.classes)):
        H = PermGroup(G.degree, [T.classes.representative(k)])
        TH = compute_character_table(H)
        for theta in TH:
            for c, m in constituents(induce_character(theta, T)):
                assert m == inner_product(theta, restrict_character(c, TH))
                seen.add(c.index)
    assert seen == set(range(len(T)))


# -- properties ------------------------------------------------------------------------

PROPERTY_GROUPS = ["sg_12_3", "sg_16_8", "sg_20_3", "sg_21_1", "sg_24_3", "sg_36_10", "sg_60_5",
                   "A5", "PSL_2_7", "sg_63_3", "sg_72_41", "S5"]


@pytest.mark.parametrize("name", PROPERTY_GROUPS)
def test_table_invariants(name):
    T = compute_character_table(corpus_group(name))
    order = T.order
    assert all(order % d == 0 for d in T.degrees)
    assert sum(d * d for d in T.degrees) == order
    gram = T.gram_matrix(list(T), list(T))
    assert (gram == np.eye(len(T), dtype=object)).all()
    # second orthogonality at the identity column
    for k in range(1, len(T.classes)):
        assert sum(c.degree * c.values[k] for c in T) == 0
    T.validate()


@pytest.mark.parametrize("name", PROPERTY_GROUPS)
def test_galois_closure(name):
    T = compute_character_table(corpus_group(name))
    e = T.exponent
    for k in units(e):
        images = {c.galois(k) for c in T}
        assert images == set(T)


@pytest.mark.parametrize("name", ["sg_24_12", "sg_18_3", "sg_60_5", "sg_48_28", "sg_36_9"])
def test_frobenius_reciprocity(name):
    G = corpus_group(name)
    T = compute_character_table(G)
    rng = random.Random(name)
    subgroups = [N for N in normal_subgroups(G)]
    subgroups += [PermGroup(G.degree, [G.element(rng.randrange(G.order))]) for _ in range(3)]
    for H in subgroups:
        TH = compute_character_table(H)
        for theta in TH:
            ind = induce_character(theta, T)
            for chi in T:
                assert inner_product(ind, chi) == inner_product(theta, restrict_character(chi, TH))


@pytest.mark.parametrize("name", ["sg_21_1", "sg_24_3", "A5", "sg_48_29", "C3wrS3"])
def test_json_round_trip(name):
    T = compute_character_table(corpus_group(name))
    text = T.dumps()
    back = CharacterTable.loads(text)
    assert back.dumps() == text
    assert [c.values for c in back] == [c.values for c in T]
    obj = json.loads(text)
    assert obj == json.loads(back.dumps())


def test_json_rejects_wrong_group():
    obj = compute_character_table(corpus_group("sg_21_1")).to_json()
    obj["generators"] = [[1, 0, 2, 3, 4, 5, 6]]
    with pytest.raises(Exception):
        CharacterTable.from_json(obj)


def test_json_rejects_corrupted_values():
    obj = compute_character_table(corpus_group("sg_21_1")).to_json()
    obj["irreducibles"][3][0] = {"n": 1, "coeffs": {"0": "2"}}
    with pytest.raises(Exception):
        CharacterTable.from_json(obj)


def test_coefficients_serialised_as_strings():
    T = compute_character_table(corpus_group("sg_21_1"))
    coeffs = [c for row in T.to_json()["irreducibles"] for v in row for c in v["coeffs"].values()]
    assert coeffs and all(isinstance(c, str) for c in coeffs)


def test_inner_products_are_exact_fractions(S3):
    T = compute_character_table(S3)
    f = T.trivial.scale(Fraction(1, 3)) + T[1]
    assert inner_product(f, T.trivial) == Fraction(1, 3)
