import json

import pytest

from blockscope.chartab import compute_character_table
from blockscope.errors import InputError
from blockscope.fileio import load_group, scene_from_file
from blockscope.permgroup import PermGroup, normal_subgroups
from blockscope.verify import (FAIL, FINDING, INAPPLICABLE, PASS, VerificationReport, corpus_items,
                               corpus_run, generate_scenes, rational_constituent_gap_report,
                               reproduce_counterexample_216_158, theorem_F_tuples, verify_conjecture_6_2,
                               verify_corollary_3_6, verify_theorem_D, verify_theorem_E_scene,
                               verify_theorem_F_instance, witness_is_valid)
from helpers import SCENES, corpus_group
from oracles import CORPUS


# -- Theorem D ---------------------------------------------------------------------------

def test_theorem_D_a4(A4):
    rep = verify_theorem_D(A4, 3)
    assert rep.verdict == PASS
    assert rep.details["normalizer_has_normal_complement"]
    assert rep.details["nontrivial_rational_p_prime_principal"] == []
    assert rep.witnesses["normalizer"]["order"] == 3


def test_theorem_D_s3(S3):
    rep = verify_theorem_D(S3, 3)
    assert rep.verdict == PASS
    assert not rep.details["normalizer_has_normal_complement"]
    assert rep.witnesses["character"]["degree"] == 1
    assert rep.witnesses["character_valid"]


def test_theorem_D_a6(A6):
    rep = verify_theorem_D(A6, 3)
    assert rep.verdict == PASS
    assert rep.witnesses["normalizer"]["order"] == 36
    assert not rep.details["normalizer_has_normal_complement"]
    assert rep.witnesses["character"]["degree"] % 3 != 0
    assert rep.witnesses["character_valid"]


@pytest.mark.parametrize("p", [2, 5])
def test_theorem_D_inapplicable(S3, p):
    assert verify_theorem_D(S3, p).verdict == INAPPLICABLE


def test_fail_report_needs_witness():
    with pytest.raises(ValueError):
        VerificationReport("theorem_D", {}, FAIL)


def test_witness_revalidation_rejects_bad_witness(A4):
    T = compute_character_table(A4)
    assert not any(witness_is_valid(c, 3) for c in T)


# -- Theorem E ---------------------------------------------------------------------------

def test_theorem_E_frobenius():
    scene = scene_from_file(load_group(SCENES / "frobenius_21.json"))
    rep = verify_theorem_E_scene(scene)
    assert rep.verdict == PASS
    assert rep.details["pairs"][0]["e"] == 1


def test_theorem_E_trivial_p():
    G = corpus_group("sg_24_12")
    scene = scene_from_file(load_group(SCENES / "a4_on_v4.json"))
    rep = verify_theorem_E_scene(type(scene)(G, G, PermGroup(G.degree), PermGroup(G.degree), 5))
    assert rep.verdict == PASS
    assert all(pr["chi"] == pr["chi_star"] for pr in rep.details["pairs"])


def test_theorem_E_invalid_scene_is_inapplicable(A4):
    scene = scene_from_file(load_group(SCENES / "a4_on_v4.json"))
    bad = type(scene)(A4, A4, PermGroup(4), scene.P, 3)
    assert verify_theorem_E_scene(bad).verdict == INAPPLICABLE


def test_scene_generation_is_deterministic_and_valid():
    G = corpus_group("sg_36_9")
    a = [s.name for s in generate_scenes(G, "x")]
    b = [s.name for s in generate_scenes(G, "x")]
    assert a == b and a
    for s in generate_scenes(G, "x"):
        s.validate()
    assert len(generate_scenes(corpus_group("sg_64_1"), "x", limit=3)) <= 3


# -- Theorem F and Corollary 3.6 -----------------------------------------------------------------

def test_theorem_F_c3_x_s3():
    gf = load_group(SCENES / "c3_x_s3.json")
    N = gf.subgroup("N")
    rep = verify_theorem_F_instance(gf.group, N, compute_character_table(N).trivial, 3)
    assert rep.verdict == PASS
    assert rep.details["rational_principal_extensions"] == 2
    assert rep.witnesses["chi"]["index"] == 0


def test_theorem_F_degenerate(S3):
    T = compute_character_table(S3)
    assert verify_theorem_F_instance(S3, S3, T.trivial, 3).verdict == PASS


def test_theorem_F_hypothesis_failure_is_inapplicable(S3):
    T = compute_character_table(S3)
    assert verify_theorem_F_instance(S3, S3, T.trivial, 2).verdict == INAPPLICABLE


def test_theorem_F_tuples_meet_hypotheses():
    G = corpus_group("sg_18_3")
    tuples = list(theorem_F_tuples(G))
    assert tuples
    for N, theta, p in tuples:
        assert verify_theorem_F_instance(G, N, theta, p).verdict == PASS


def test_corollary_3_6():
    G = corpus_group("sg_18_3")
    seen = 0
    for N in normal_subgroups(G):
        for nu in compute_character_table(N):
            rep = verify_corollary_3_6(G, N, nu, 3)
            assert rep.verdict in (PASS, INAPPLICABLE)
            seen += rep.verdict == PASS
    assert seen


# -- the order-216 configuration ---------------------------------------------------------------

def test_reproduce_216_158():
    G = corpus_group("sg_216_158")
    rep = reproduce_counterexample_216_158(G, 3)
    assert rep.verdict == PASS
    N, theta = rep.witnesses["N"], rep.witnesses["theta"]
    assert (216 // N["order"]) % 3 != 0
    assert theta["degree"] % 3 != 0


def test_reproduce_rejects_wrong_order(S3):
    with pytest.raises(InputError):
        reproduce_counterexample_216_158(S3)


def test_gap_search_reports_absence(S3):
    rep = rational_constituent_gap_report(S3, 3)
    assert rep.verdict == FAIL and rep.details["found"] is False
    # S3 has two 2-blocks, so the search is vacuous there
    assert rational_constituent_gap_report(S3, 2).details["found"] is False


# -- Conjecture 6.2 ----------------------------------------------------------------------------------

@pytest.mark.parametrize("name", ["sg_6_1", "sg_24_12", "S5", "S6", "sg_12_3", "sg_48_28"])
def test_conjecture_agreement(name):
    assert verify_conjecture_6_2(corpus_group(name)).verdict == PASS


def test_conjecture_inapplicable_for_odd_order():
    assert verify_conjecture_6_2(corpus_group("sg_21_1")).verdict == INAPPLICABLE


def test_conjecture_disagreement_semantics(monkeypatch):
    """A disagreement is a fail on solvable groups and a finding otherwise."""
    from blockscope import verify
    monkeypatch.setattr(verify.blk, "sigma2_check", lambda T: [T[1]])
    assert verify.verify_conjecture_6_2(corpus_group("S5")).verdict == FINDING
    assert verify.verify_conjecture_6_2(corpus_group("sg_24_12")).verdict == FAIL


# -- corpus ----------------------------------------------------------------------------------------

def test_empty_corpus(tmp_path):
    agg = corpus_run(tmp_path)
    assert agg["items"] == 0 and agg["fails"] == 0 and agg["results"] == []


def test_corpus_run_small(tmp_path):
    for name in ("sg_6_1", "sg_12_3", "sg_21_1"):
        (tmp_path / f"{name}.json").write_text((CORPUS / f"{name}.json").read_text())
    agg = corpus_run(tmp_path, "all", scenes=3)
    assert agg["fails"] == 0 and not agg["errors"]
    # S3 and A4 at p = 3, the Frobenius group at p = 3 and 7
    assert agg["counts"]["theorem_D"] == {"pass": 4}
    assert agg["counts"]["theorem_E"]["pass"] > 0
    again = corpus_run(tmp_path, "all", scenes=3, threads=2)
    assert json.dumps(again["results"], sort_keys=True) == json.dumps(agg["results"], sort_keys=True)


def test_corpus_items_order_filter():
    items = corpus_items(CORPUS, max_order=6)
    assert all(it.order <= 6 for it in items) and len(items) == 8


# -- simple normal subgroups -------------------------------------------------------------------------

@pytest.mark.parametrize("name", ["A5", "A6", "PSL_2_7", "A5xC3", "S5", "S6"])
def test_simple_normal_subgroup_special_case(name):
    """With G = N P and N nonabelian simple, no nontrivial p-rational p'-degree principal
    block character forces P to be self-normalizing."""
    from blockscope.blocks import nontrivial_rational_p_prime_principal
    from blockscope.permgroup import (is_solvable, normalizer, prime_divisors, product_subgroup,
                                      sylow_subgroup)
    G = corpus_group(name)
    checked = 0
    for N in normal_subgroups(G):
        if N.order == 1 or is_solvable(N) or len(normal_subgroups(N)) != 2:
            continue
        for p in prime_divisors(G.order):
            if p == 2:
                continue
            P = sylow_subgroup(G, p)
            if product_subgroup(G, N, P).order != G.order:
                continue
            checked += 1
            if not nontrivial_rational_p_prime_principal(compute_character_table(G), p):
                assert normalizer(G, P).order == P.order
    assert checked or name in ("S5", "S6")
