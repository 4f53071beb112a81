import pytest
from hypothesis import given, settings

from keyslide.classify import (
    classify,
    find_pattern,
    inv1_closed_form,
    is_single_term,
    pattern_a,
    pattern_b,
    pattern_c,
    schur_fund_mf,
    single_term_case,
    strong_multiplicity_free,
    two_nonzero_mf,
    two_term_expansion,
    two_term_theorem,
)
from keyslide.composition import (
    compositions_of,
    inversion_count,
    partitions_of,
    sort0,
    weak_compositions,
)
from keyslide.exceptions import UsageError
from keyslide.expansion import max_multiplicity, slide_expansion
from keyslide.rules import RuleRegistry, Verdict
from keyslide.tableau import enumerate_qkt

from .conftest import strong_compositions


def test_patterns():
    assert pattern_a((1, 2, 3)) == (1, 2, 3)
    assert pattern_b((1, 1, 3, 2)) == (1, 2, 3, 4)
    assert pattern_c((1, 1, 3, 3)) == (1, 2, 3, 4)
    assert pattern_a((3, 2, 1)) is None
    assert pattern_b((2, 1, 4, 3)) == (1, 2, 3, 4)
    assert find_pattern((2, 1, 3)) is None


def test_patterns_reject_weak():
    with pytest.raises(UsageError):
        pattern_a((0, 1, 2))


def test_strong_multiplicity_free():
    report = strong_multiplicity_free((2, 1, 4, 3))
    assert report.verdict is Verdict.NOT_MULTIPLICITY_FREE
    assert report.theorem == "thm_main2_pattern_b"
    assert report.witness == {"pattern": "b", "positions": [1, 2, 3, 4]}
    assert strong_multiplicity_free((4, 2, 2, 1)).multiplicity_free
    assert strong_multiplicity_free((2, 1, 3)).theorem == "thm_main2"


@pytest.mark.parametrize(
    "a, case",
    [
        ((3, 0, 0, 2), 3),
        ((0, 1, 0, 1), 1),
        ((0, 0, 0), 1),
        ((0, 4, 0), 2),
        ((3, 2, 0, 0, 1, 0, 1), 4),
        ((2, 0, 1, 0), 3),
        ((1, 2), None),
        ((2, 0, 3), None),
    ],
)
def test_single_term_cases(a, case):
    assert single_term_case(a) == case
    assert is_single_term(a) == (case is not None)
    assert (len(enumerate_qkt(a)) == 1) == (case is not None)


def test_two_term_expansion():
    assert two_term_expansion((2, 0, 0, 3)) == (3, 0, 0, 2)
    assert two_term_expansion((2, 3)) == (3, 2)
    assert two_term_expansion((1, 2)) == (2, 1)
    assert two_term_expansion((2, 4)) is None
    assert two_term_expansion((3, 2)) is None


@pytest.mark.parametrize("a", [(2, 0, 1, 2), (3, 0, 1, 2), (1, 2, 0, 1, 1), (2, 0, 1, 0, 2), (4, 4, 0, 1, 2)])
def test_two_terms_with_unit_inversion(a):
    assert two_term_theorem(a) == "thm_2terms_unit_inversion"
    assert two_term_expansion(a) == sort0(a)
    expansion = slide_expansion(a)
    assert expansion.total_multiplicity == 2
    assert expansion.weights == sorted([a, sort0(a)])


@pytest.mark.parametrize("a", [(0, 1, 2, 1), (1, 0, 2, 1), (0, 2, 1, 2), (2, 0, 1, 2, 1)])
def test_unit_inversion_needs_shape(a):
    assert two_term_theorem(a) is None
    assert slide_expansion(a).total_multiplicity > 2


def test_two_term_theorem_tags():
    assert two_term_theorem((2, 0, 0, 3)) == "thm_2terms"
    assert two_term_theorem((0, 1, 0, 2)) == "thm_2terms"
    assert two_term_theorem((2, 4)) is None


def test_inv1_closed_form():
    assert inv1_closed_form((1, 3)) == [(1, 3), (2, 2), (3, 1)]
    assert inv1_closed_form((2, 3)) == [(2, 3), (3, 2)]
    assert inv1_closed_form((3, 1, 2, 1)) == [(3, 1, 2, 1), (3, 2, 1, 1)]
    with pytest.raises(UsageError):
        inv1_closed_form((1, 2, 3))


@pytest.mark.parametrize(
    "lam, expected",
    [
        ((3, 3), True),
        ((2, 2, 2), True),
        ((4, 4), True),
        ((4, 2), True),
        ((5, 1, 1), True),
        ((4, 3), False),
        ((5, 5), False),
        ((3, 3, 1), False),
        ((), True),
    ],
)
def test_schur_fund_mf(lam, expected):
    assert schur_fund_mf(lam) is expected


@pytest.mark.parametrize(
    "a, free, theorem",
    [
        ((0, 0, 4, 3), True, "thm_two_parts"),
        ((0, 0, 5, 5), False, "thm_two_parts"),
        ((0, 3, 5), False, "lem_two_parts_1"),
        ((3, 0, 0, 5), True, "thm_two_parts_3"),
        ((0, 5, 2), True, "thm_two_parts_2"),
        ((0, 0, 2, 6), True, "thm_two_parts"),
    ],
)
def test_two_nonzero_mf(a, free, theorem):
    report = two_nonzero_mf(a)
    assert report.multiplicity_free is free
    assert report.theorem == theorem
    assert (max_multiplicity(a).max_multiplicity == 1) is free


def test_two_nonzero_mf_needs_two_parts():
    with pytest.raises(UsageError):
        two_nonzero_mf((1, 2, 3))


def test_classify_examples():
    report = classify((1, 1, 3, 3))
    assert report.verdict is Verdict.NOT_MULTIPLICITY_FREE
    assert report.theorem == "thm_main2_pattern_c"
    assert report.witness["positions"] == [1, 2, 3, 4]

    report = classify((0, 1, 2, 3, 0))
    assert report.verdict is Verdict.NOT_MULTIPLICITY_FREE
    assert report.theorem == "lem_not_mf_pattern_a"
    assert report.witness == {"pattern": "a", "positions": [2, 3, 4]}

    assert classify((0, 0, 3, 2)).verdict is Verdict.MULTIPLICITY_FREE
    assert classify((0, 2, 2)).verdict is Verdict.MULTIPLICITY_FREE

    report = classify((3, 0, 0, 2))
    assert report.verdict is Verdict.SINGLE_TERM
    assert report.theorem == "thm_k_eq_f_case_3"

    report = classify((2, 0, 0, 3))
    assert report.verdict is Verdict.TWO_TERMS
    assert report.witness == {"terms": [[2, 0, 0, 3], [3, 0, 0, 2]]}


def test_classify_schur_shortcut():
    report = classify((0, 1, 0, 3, 1))
    assert report.verdict is Verdict.MULTIPLICITY_FREE
    assert report.theorem == "cor_hooks"
    report = classify((0, 2, 0, 2, 2))
    assert report.theorem == "lem_mf"


def test_classify_unknown_and_brute_force():
    a = (0, 2, 0, 1, 3)
    assert classify(a).verdict is Verdict.UNKNOWN_FAST_PATH
    assert classify(a).multiplicity_free is None
    report = classify(a, brute=True)
    assert report.theorem == "brute_force"
    assert report.multiplicity_free == (max_multiplicity(a).max_multiplicity == 1)


def test_rule_order():
    assert RuleRegistry.list_rules() == [
        "single_term",
        "two_terms",
        "strong_patterns",
        "two_nonzero_parts",
        "schur_shortcut",
        "flat_patterns",
    ]


def test_report_to_dict():
    assert classify((1, 2, 3)).to_dict() == {
        "index": [1, 2, 3],
        "verdict": "NOT_MULTIPLICITY_FREE",
        "theorem": "thm_main2_pattern_a",
        "witness": {"pattern": "a", "positions": [1, 2, 3]},
    }


@settings(max_examples=40, deadline=None)
@given(strong_compositions(max_length=4, max_part=3))
def test_inv1_closed_form_matches_expansion(alpha):
    if inversion_count(alpha) != 1:
        return
    expansion = slide_expansion(alpha)
    assert sorted(inv1_closed_form(alpha)) == expansion.weights
    assert expansion.is_multiplicity_free


@settings(max_examples=60, deadline=None)
@given(strong_compositions(max_length=5, max_part=3))
def test_strong_criterion_matches_brute_force(alpha):
    assert strong_multiplicity_free(alpha).multiplicity_free == (max_multiplicity(alpha).max_multiplicity == 1)


@pytest.mark.slow
def test_strong_criterion_exhaustive():
    for total in range(11):
        for alpha in compositions_of(total):
            expected = max_multiplicity(alpha).max_multiplicity == 1
            assert strong_multiplicity_free(alpha).multiplicity_free == expected, alpha


@pytest.mark.slow
def test_single_and_two_term_exhaustive():
    for length in range(6):
        for a in weak_compositions(length, 4):
            expansion = slide_expansion(a)
            assert is_single_term(a) == (expansion.total_multiplicity == 1), a
            second = two_term_expansion(a)
            two_terms = expansion.total_multiplicity == 2 and expansion.weights == sorted([a, sort0(a)])
            assert (second is not None) == two_terms, a
            if second is not None:
                assert second == sort0(a)


@pytest.mark.slow
def test_two_term_exhaustive_length_six():
    for a in weak_compositions(6, 3):
        if sum(a) > 10:
            continue
        expansion = slide_expansion(a)
        two_terms = expansion.total_multiplicity == 2 and expansion.weights == sorted([a, sort0(a)])
        assert (two_term_expansion(a) is not None) == two_terms, a


@pytest.mark.slow
def test_two_nonzero_parts_exhaustive():
    for lead in range(4):
        for gap in range(3):
            for first in range(1, 8):
                for second in range(1, 8):
                    a = (0,) * lead + (first,) + (0,) * gap + (second,)
                    expected = max_multiplicity(a).max_multiplicity == 1
                    assert two_nonzero_mf(a).multiplicity_free == expected, a


@pytest.mark.slow
def test_classify_is_sound():
    for a in weak_compositions(4, 3):
        report = classify(a)
        if report.multiplicity_free is None:
            continue
        assert report.multiplicity_free == (max_multiplicity(a).max_multiplicity == 1), a


@pytest.mark.slow
def test_schur_criterion_against_descent_expansion():
    from keyslide.oracle import fundamental_expansion_of_schur

    for n in range(9):
        for lam in partitions_of(n):
            assert schur_fund_mf(lam) == fundamental_expansion_of_schur(lam).is_multiplicity_free, lam
