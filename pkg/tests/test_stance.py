from __future__ import annotations

import random

import pytest

from camplens.errors import EmptyGold
from camplens.records import UserRecord
from camplens.stance import (MatchMode, PropagationConfig, RuleField, SeedRule,
                             Stance, StanceLabeling, apply_seed_rules,
                             default_seed_rules, evaluate_against, load_seed_rules,
                             propagate_once, propagate_to_fixpoint,
                             read_labeling_tsv, write_labeling_tsv)
from conftest import make_index, make_seeds, random_graph
from oracles.propagation_reference import reference_fixpoint


def user(uid="u1", screen="", display="", description=""):
    return UserRecord(uid, screen, display, description)


# --- seed rules -------------------------------------------------------------

def test_party_acronym_in_screen_name_is_pro():
    labeling = apply_seed_rules([user(screen="akparti_sevdasi")], default_seed_rules())
    assert labeling.stance_of("u1") is Stance.PRO


def test_slogan_hashtag_in_description_is_anti():
    labeling = apply_seed_rules(
        [user(description="söyleyecek sözümüz var #tamam")], default_seed_rules())
    assert labeling.stance_of("u1") is Stance.ANTI


def test_contradictory_hits_become_conflicts():
    labeling = apply_seed_rules([user(display="chpli #devam",
                                      description="chpli #devam")],
                                default_seed_rules())
    assert labeling.stance_of("u1") is None
    assert "u1" in labeling.conflicts


def test_rte_description_is_pro():
    labeling = apply_seed_rules([user(description="daima #RTE")], default_seed_rules())
    assert labeling.stance_of("u1") is Stance.PRO


def test_case_folding_in_rules():
    labeling = apply_seed_rules([user(screen="AKPARTI_89")], default_seed_rules())
    assert labeling.stance_of("u1") is Stance.PRO


def test_iyi_requires_word_boundary():
    rules = default_seed_rules()
    assert apply_seed_rules([user(display="iyi parti")], rules).stance_of("u1") is Stance.ANTI
    assert apply_seed_rules([user(display="en iyilik dolu")], rules).stance_of("u1") is None
    assert apply_seed_rules([user(display="partiyi sevdim")], rules).stance_of("u1") is None


def test_no_match_stays_unlabeled():
    labeling = apply_seed_rules([user(screen="kedisever")], default_seed_rules())
    assert labeling.labels == {} and labeling.conflicts == set()


def test_rule_validation():
    with pytest.raises(ValueError):
        SeedRule("", RuleField.SCREEN_NAME, MatchMode.SUBSTRING, Stance.PRO)


def test_load_rules_toml(tmp_path):
    path = tmp_path / "rules.toml"
    path.write_text(
        '[[rule]]\npattern = "xyz"\nfield = "description"\n'
        'mode = "word_boundary"\nlabel = "pro"\n', encoding="utf-8")
    (rule,) = load_seed_rules(path)
    assert rule.pattern == "xyz"
    assert rule.mode is MatchMode.WORD_BOUNDARY
    assert rule.label is Stance.PRO


# --- single propagation round ------------------------------------------------

def test_propagate_once_threshold_met():
    keys = {f"k{i}" for i in range(10)}
    index = make_index({"A": keys, "B": set(keys)})
    new = propagate_once(index, make_seeds({"A": "pro"}), PropagationConfig(10))
    assert new == {"B": Stance.PRO}


def test_propagate_once_opposite_key_blocks():
    keys = {f"k{i}" for i in range(10)}
    index = make_index({"A": keys, "Z": {"k_anti"}, "B": keys | {"k_anti"}})
    new = propagate_once(index, make_seeds({"A": "pro", "Z": "anti"}),
                         PropagationConfig(10))
    assert new == {}


def test_propagate_once_below_threshold():
    keys = {f"k{i}" for i in range(9)}
    index = make_index({"A": keys, "B": set(keys)})
    assert propagate_once(index, make_seeds({"A": "pro"}), PropagationConfig(10)) == {}


def test_dual_endorsed_keys_excluded_from_both():
    # key shared by both camps neither helps nor blocks
    index = make_index({"P": {"viral", "p1"}, "N": {"viral", "n1"},
                        "B": {"viral", "p1"}})
    new = propagate_once(index, make_seeds({"P": "pro", "N": "anti"}),
                         PropagationConfig(1))
    assert new == {"B": Stance.PRO}


def test_already_labeled_never_returned():
    index = make_index({"A": {"k"}, "B": {"k"}})
    new = propagate_once(index, make_seeds({"A": "pro", "B": "anti"}),
                         PropagationConfig(1))
    assert new == {}


# --- fixpoint ----------------------------------------------------------------

def test_fixpoint_no_seeds():
    index = make_index({"A": {"k1"}})
    result = propagate_to_fixpoint(index, StanceLabeling(), PropagationConfig(1))
    assert result.iteration_counts == [0]
    assert result.converged
    assert result.labeling.labels == {}


def test_fixpoint_two_hop_chain():
    index = make_index({
        "S": {"k1"},
        "B": {"k1", "k2"},
        "C": {"k2"},
        "D": {"unrelated"},
    })
    seeds = make_seeds({"S": "pro"})
    result = propagate_to_fixpoint(index, seeds, PropagationConfig(threshold=1))
    assert result.iteration_counts == [1, 1, 0]
    assert result.labeling.labels["B"] == (Stance.PRO, "propagated:1")
    assert result.labeling.labels["C"] == (Stance.PRO, "propagated:2")
    assert result.labeling.stance_of("D") is None
    # oracle agrees
    u2k = {u: frozenset(ks) for u, ks in {
        "S": {"k1"}, "B": {"k1", "k2"}, "C": {"k2"}, "D": {"unrelated"}}.items()}
    labels, counts, converged = reference_fixpoint(u2k, {"S": "pro"}, 1)
    assert labels == {u: s.value for u, (s, _) in result.labeling.labels.items()}
    assert counts == result.iteration_counts


def test_fixpoint_max_iterations_flag():
    # chain of length 5 but only 2 iterations allowed
    chain = {"S": {"k0"}}
    for i in range(5):
        chain[f"u{i}"] = {f"k{i}", f"k{i+1}"}
    index = make_index(chain)
    result = propagate_to_fixpoint(index, make_seeds({"S": "pro"}),
                                   PropagationConfig(threshold=1, max_iterations=2))
    assert not result.converged
    assert len(result.iteration_counts) == 2


def test_fixpoint_matches_oracle_on_random_graphs():
    rng = random.Random(11)
    for trial in range(40):
        user_to_keys, seeds = random_graph(rng)
        threshold = rng.choice([1, 2, 3, 10])
        index = make_index(user_to_keys)
        result = propagate_to_fixpoint(index, make_seeds(seeds),
                                       PropagationConfig(threshold))
        got = {u: s.value for u, (s, _) in result.labeling.labels.items()}
        expected, counts, converged = reference_fixpoint(
            {u: frozenset(k) for u, k in user_to_keys.items()}, seeds, threshold)
        assert got == expected, f"trial {trial}"
        assert result.iteration_counts == counts
        assert result.converged == converged


def test_fixpoint_properties_on_random_graphs():
    rng = random.Random(23)
    for _ in range(15):
        user_to_keys, seeds = random_graph(rng, max_users=30, max_keys=60)
        threshold = rng.choice([1, 2, 3])
        index = make_index(user_to_keys)
        cfg = PropagationConfig(threshold)
        seed_labeling = make_seeds(seeds)
        result = propagate_to_fixpoint(index, seed_labeling, cfg)
        # monotonicity: all seed labels survive unchanged
        for u, stance in seeds.items():
            assert result.labeling.labels[u][0].value == stance
        # fixpoint soundness: one more round adds nothing
        assert propagate_once(index, result.labeling, cfg) == {}
        # threshold witness: recompute endorsements from the prior iteration
        for u, (stance, provenance) in result.labeling.labels.items():
            if not provenance.startswith("propagated:"):
                continue
            iteration = int(provenance.split(":")[1])
            before = StanceLabeling(labels={
                v: lp for v, lp in result.labeling.labels.items()
                if lp[1].startswith("seed:")
                or int(lp[1].split(":")[1]) < iteration
            })
            fresh = propagate_once(index, before, cfg)
            assert fresh.get(u) == stance


# --- evaluation ---------------------------------------------------------------

def test_evaluate_headline_counts():
    gold = {f"u{i}": Stance.PRO for i in range(191)}
    gold["bad"] = Stance.ANTI
    for i in range(8):
        gold[f"und{i}"] = "undecidable"
    labeling = StanceLabeling(labels={u: (Stance.PRO, "seed:x") for u in gold})
    report = evaluate_against(labeling, gold)
    assert (report.match, report.mismatch, report.undecidable) == (191, 1, 8)
    assert report.decided_accuracy == pytest.approx(191 / 192, abs=1e-6)


def test_evaluate_perfect():
    gold = {"a": Stance.PRO, "b": Stance.ANTI}
    labeling = StanceLabeling(labels={"a": (Stance.PRO, "s"), "b": (Stance.ANTI, "s")})
    report = evaluate_against(labeling, gold)
    assert report.decided_accuracy == 1.0


def test_evaluate_empty_result_guarded():
    gold = {"a": Stance.PRO}
    report = evaluate_against(StanceLabeling(), gold)
    assert report.unlabeled == 1
    assert report.decided_accuracy is None


def test_evaluate_empty_gold_raises():
    with pytest.raises(EmptyGold):
        evaluate_against(StanceLabeling(), {})


def test_labeling_tsv_round_trip(tmp_path):
    labeling = StanceLabeling(labels={
        "u2": (Stance.ANTI, "propagated:3"),
        "u1": (Stance.PRO, "seed:akparti@screen_name"),
    })
    path = tmp_path / "labels.tsv"
    write_labeling_tsv(labeling, path)
    back = read_labeling_tsv(path)
    assert back.labels == labeling.labels
