"""Twist-word engine: systems, step matrices, coverage checker, dilatations."""

import math

import pytest

from smallstretch.intmatrix import mat_pow
from smallstretch.penner import (
    Permute,
    Twist,
    TwistWord,
    chain_system,
    check_curve_system,
    check_penner_word,
    curve_system_from_json,
    curve_system_to_json,
    dilatation,
    genus_two_example_word,
    necklace_rotation,
    necklace_system,
    permutation_matrix,
    twist_matrix,
    two_curve_system,
    two_curve_word,
    word_from_json,
    word_matrix,
    word_to_json,
)
from smallstretch.verify import EXAMPLE_DILATATION, EXAMPLE_MATRIX_ROWS, TWO_CURVE_DILATATION

CHAIN2 = chain_system(2)
FLIP = Permute.from_dict({"a1": "a3", "a3": "a1", "b1": "b2", "b2": "b1"})


def test_chain_system_shape():
    assert CHAIN2.labels == ("a1", "b1", "a2", "b2", "a3")
    assert CHAIN2.sides == ("alpha", "beta", "alpha", "beta", "alpha")
    assert check_curve_system(CHAIN2).ok
    # Chain adjacency: b_i meets a_i and a_{i+1} once, nothing else.
    assert CHAIN2.intersection("a1", "b1") == 1
    assert CHAIN2.intersection("a2", "b1") == 1
    assert CHAIN2.intersection("a1", "b2") == 0
    assert CHAIN2.intersection("a1", "a2") == 0
    with pytest.raises(ValueError):
        chain_system(0)


def test_necklace_system_shape():
    neck = necklace_system(2)
    assert neck.labels == ("a1", "b1", "a2", "b2")
    assert check_curve_system(neck).ok
    # Cyclic adjacency: consecutive curves meet once, around the loop.
    assert neck.intersection("a1", "b1") == 1
    assert neck.intersection("b2", "a1") == 1
    assert neck.intersection("a1", "a2") == 0
    with pytest.raises(ValueError):
        necklace_system(1)


def test_check_curve_system_reports_violations():
    from smallstretch.penner import CurveSystem

    bad = CurveSystem.build(("a", "b"), ("alpha", "gamma"), ((1, 2), (0, 0)))
    report = check_curve_system(bad)
    assert not report.ok
    text = " ".join(report.violations)
    assert "unknown side" in text
    assert "self-intersection" in text
    assert "asymmetry" in text


def test_curve_system_from_json_rejects_invalid_payload():
    with pytest.raises(ValueError, match="invalid curve system"):
        curve_system_from_json({
            "curves": [{"label": "a", "side": "alpha"},
                       {"label": "b", "side": "gamma"}],
            "intersections": [[1, 2], [0, 0]],
        })
    with pytest.raises(ValueError, match="malformed"):
        curve_system_from_json({"curves": [{"label": "a"}], "intersections": []})


def test_twist_matrix_values_and_signs():
    tc = two_curve_system()
    assert twist_matrix(tc, "a", 1).rows == ((1, 1), (0, 1))
    assert twist_matrix(tc, "b", -1).rows == ((1, 0), (1, 1))
    assert twist_matrix(tc, "a", 3).rows == ((1, 3), (0, 1))
    with pytest.raises(ValueError, match="positive twist"):
        twist_matrix(tc, "b", 1)
    with pytest.raises(ValueError, match="negative twist"):
        twist_matrix(tc, "a", -1)
    with pytest.raises(ValueError, match="nonzero"):
        twist_matrix(tc, "a", 0)
    # Sign policy is advisory when disabled.
    assert twist_matrix(tc, "b", 2, enforce_signs=False).rows == ((1, 0), (2, 1))


def test_permutation_matrix_symmetry_gate():
    m = permutation_matrix(CHAIN2, FLIP)
    assert sorted(sum(row) for row in m.rows) == [1] * 5
    with pytest.raises(ValueError, match="does not preserve sides"):
        permutation_matrix(CHAIN2, Permute.from_dict({"a1": "b1", "b1": "a1"}))
    with pytest.raises(ValueError, match="intersection symmetry"):
        permutation_matrix(CHAIN2, Permute.from_dict({"a1": "a2", "a2": "a1"}))
    with pytest.raises(KeyError):
        permutation_matrix(CHAIN2, Permute.from_dict({"zz": "yy", "yy": "zz"}))
    with pytest.raises(ValueError, match="permutation of its own keys"):
        Permute.from_dict({"a1": "a2"})


def test_word_matrix_anchors():
    assert word_matrix(two_curve_system(), two_curve_word()).rows == ((2, 1), (1, 1))
    assert word_matrix(CHAIN2, genus_two_example_word()).rows == EXAMPLE_MATRIX_ROWS


def test_word_order_is_right_to_left_composition():
    tc = two_curve_system()
    ab = word_matrix(tc, TwistWord.build([Twist("a", 1), Twist("b", -1)]))
    ba = word_matrix(tc, TwistWord.build([Twist("b", -1), Twist("a", 1)]))
    assert ab.rows == ((2, 1), (1, 1))
    assert ba.rows == ((1, 1), (1, 2))


def test_check_penner_word_certifies_direct_coverage():
    rep = check_penner_word(CHAIN2, genus_two_example_word())
    assert rep.ok
    assert rep.certified_power == 1
    assert rep.alpha_certified_power == 1
    assert rep.beta_certified_power == 1
    assert rep.perm_order == 1
    assert rep.sign_violations == ()


def test_check_penner_word_flip_covers_betas_only():
    word = TwistWord.build([Twist("a1", 1), Twist("b1", -1), FLIP])
    rep = check_penner_word(CHAIN2, word)
    assert not rep.ok
    assert rep.certified_power is None
    # The flip swaps b1 and b2, so betas close at the second iterate,
    # while a2 is fixed by the flip and never reached.
    assert rep.alpha_certified_power is None
    assert rep.beta_certified_power == 2
    assert rep.perm_order == 2
    assert rep.missing_alpha == ("a2",)
    assert rep.missing_beta == ()


def test_check_penner_word_necklace_rotation_partial_coverage():
    neck = necklace_system(2)
    word = TwistWord.build([Twist("a1", 1), necklace_rotation(2)])
    rep = check_penner_word(neck, word)
    assert not rep.ok
    assert rep.alpha_certified_power == 2
    assert rep.beta_certified_power is None
    assert rep.missing_alpha == ()
    assert rep.missing_beta == ("b1", "b2")


def test_check_penner_word_necklace_certifies_at_three():
    neck = necklace_system(3)
    word = TwistWord.build([Twist("a1", 1), Twist("b1", -1), necklace_rotation(3)])
    rep = check_penner_word(neck, word)
    assert rep.ok
    assert rep.certified_power == 3
    assert rep.alpha_certified_power == 3
    assert rep.beta_certified_power == 3
    assert rep.perm_order == 3


def test_check_penner_word_reports_sign_violations():
    word = TwistWord.build([Twist("a1", -1), Twist("b1", 1)])
    rep = check_penner_word(CHAIN2, word)
    assert not rep.ok
    assert rep.sign_violations == (
        "negative twist lands on alpha curve a1",
        "positive twist lands on beta curve b1",
    )


def test_dilatation_anchors():
    lam = dilatation(two_curve_system(), two_curve_word())
    assert abs(lam.estimate - TWO_CURVE_DILATATION) < 1e-12
    assert lam.contains(TWO_CURVE_DILATATION)
    lam2 = dilatation(CHAIN2, genus_two_example_word())
    assert abs(lam2.estimate - EXAMPLE_DILATATION) < 1e-10
    assert lam2.contains(EXAMPLE_DILATATION)


def test_dilatation_stable_under_rotation():
    word = genus_two_example_word()
    base = dilatation(CHAIN2, word).estimate
    for offset in range(len(word)):
        rotated = dilatation(CHAIN2, word.rotated(offset)).estimate
        assert abs(rotated - base) < 1e-9


def test_two_curve_trace_recurrence():
    m = word_matrix(two_curve_system(), two_curve_word())
    traces = [sum(mat_pow(m, p).rows[i][i] for i in range(2)) for p in range(6)]
    assert traces == [2, 3, 7, 18, 47, 123]
    for i in range(1, 5):
        assert traces[i + 1] == 3 * traces[i] - traces[i - 1]


def test_example_dilatation_closed_form():
    # Characteristic polynomial of the 5x5 example splits off x + 1/x = y
    # with y^2 - 14y + 45 carrying the dominant root.
    lam = EXAMPLE_DILATATION
    assert abs(lam - (9.0 + math.sqrt(77.0)) / 2.0) == 0.0
    y = lam + 1.0 / lam
    assert abs(y * y - 14.0 * y + 45.0) < 1e-9


def test_json_round_trips():
    obj = curve_system_to_json(CHAIN2)
    assert curve_system_from_json(obj) == CHAIN2
    word = genus_two_example_word()
    assert word_from_json(word_to_json(word)) == word
    flip_word = TwistWord.build([FLIP, Twist("a1", 2)])
    assert word_from_json(word_to_json(flip_word)) == flip_word


def test_word_from_json_rejects_malformed_steps():
    with pytest.raises(ValueError, match="malformed"):
        word_from_json(["twist"])
    with pytest.raises(ValueError, match="'twist' or 'permute'"):
        word_from_json([{"spin": "a1"}])


def test_twist_word_rotation():
    word = TwistWord.build([Twist("a", 1), Twist("b", -1)])
    assert word.rotated(0) == word
    assert word.rotated(1).steps == (Twist("b", -1), Twist("a", 1))
    assert word.rotated(2) == word
    assert len(word) == 2
