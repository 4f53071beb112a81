"""
Fast multiplicity-freeness criteria for slide expansions of key polynomials.

Each predicate here is a constant-size test on the index; classify() runs
them in a fixed order through the rule registry and falls back, on request,
to brute-force enumeration. Witness positions are 1-based.
"""

from __future__ import annotations

import logging
from typing import Optional, Sequence

from .composition import (
    Partition,
    StrongComposition,
    WeakComposition,
    as_strong,
    conjugate,
    flatten,
    inversions,
    leading_zero_count,
    sort0,
    sort_to_partition,
    strip_trailing_zeros,
)
from .config import Bounds
from .exceptions import UsageError
from .rules import ClassificationReport, Verdict, get_rules

logger = logging.getLogger(__name__)


def pattern_a(alpha: Sequence[int]) -> Optional[tuple[int, int, int]]:
    """First i < j < k with alpha_i < alpha_j < alpha_k."""
    alpha = as_strong(alpha)
    n = len(alpha)
    for i in range(n):
        for j in range(i + 1, n):
            if not alpha[i] < alpha[j]:
                continue
            for k in range(j + 1, n):
                if alpha[j] < alpha[k]:
                    return (i + 1, j + 1, k + 1)
    return None


def pattern_b(alpha: Sequence[int]) -> Optional[tuple[int, int, int, int]]:
    """First i < j < k < l with alpha_i, alpha_j < alpha_l < alpha_k."""
    alpha = as_strong(alpha)
    n = len(alpha)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                for l in range(k + 1, n):
                    if alpha[i] < alpha[l] and alpha[j] < alpha[l] < alpha[k]:
                        return (i + 1, j + 1, k + 1, l + 1)
    return None


def pattern_c(alpha: Sequence[int]) -> Optional[tuple[int, int, int, int]]:
    """First i < j < k < l with alpha_i, alpha_j + 1 < alpha_k = alpha_l."""
    alpha = as_strong(alpha)
    n = len(alpha)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if not (alpha[i] < alpha[k] and alpha[j] + 1 < alpha[k]):
                    continue
                for l in range(k + 1, n):
                    if alpha[k] == alpha[l]:
                        return (i + 1, j + 1, k + 1, l + 1)
    return None


PATTERNS = (("a", pattern_a), ("b", pattern_b), ("c", pattern_c))


def find_pattern(alpha: Sequence[int]) -> Optional[tuple[str, tuple[int, ...]]]:
    """The first forbidden pattern present in alpha, checked in the order a, b, c."""
    for name, scan in PATTERNS:
        positions = scan(alpha)
        if positions is not None:
            return name, positions
    return None


def strong_multiplicity_free(alpha: Sequence[int]) -> ClassificationReport:
    """
    For a strong composition: multiplicity free iff none of the three
    patterns occurs.

    Raises:
        UsageError: if alpha has a zero part
    """
    alpha = as_strong(alpha)
    found = find_pattern(alpha)
    if found is None:
        return ClassificationReport(alpha, Verdict.MULTIPLICITY_FREE, "thm_main2")
    name, positions = found
    return ClassificationReport(
        alpha,
        Verdict.NOT_MULTIPLICITY_FREE,
        f"thm_main2_pattern_{name}",
        {"pattern": name, "positions": list(positions)},
    )


def _weakly_decreasing(parts: Sequence[int]) -> bool:
    return all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1))


def _splits(s: Sequence[int]):
    """(head, middle, last) for every head length 1..len(s)-1."""
    for k in range(1, len(s)):
        yield s[:k], s[k:-1], s[-1]


def single_term_case(a: Sequence[int]) -> Optional[int]:
    """
    The lowest-numbered shape under which kappa_a = F_a, or None.

      1. every nonzero part is 1;
      2. exactly one nonzero part;
      3. (a_1 >= ... >= a_k > 0, 0^m, a_last) with a_last <= a_k;
      4. (a_1 >= ... >= a_k > 1, a 0/1 sequence, 1).

    Trailing zeros are ignored: they do not change QKT(a).
    """
    a = WeakComposition(a)
    nonzero = [v for v in a if v != 0]
    if all(v == 1 for v in nonzero):
        return 1
    if len(nonzero) == 1:
        return 2
    s = strip_trailing_zeros(a)
    for head, middle, last in _splits(s):
        if all(v > 0 for v in head) and _weakly_decreasing(head) and not any(middle) and last <= head[-1]:
            return 3
    for head, middle, last in _splits(s):
        if all(v > 1 for v in head) and _weakly_decreasing(head) and set(middle) <= {0, 1} and last == 1:
            return 4
    return None


def is_single_term(a: Sequence[int]) -> bool:
    """kappa_a = F_a, equivalently |QKT(a)| = 1."""
    return single_term_case(a) is not None


def two_term_theorem(a: Sequence[int]) -> Optional[str]:
    """
    The criterion under which kappa_a = F_a + F_sort0(a), or None.

    Both require a single inversion (i, i+1) of flat(a) with a gap of
    exactly 1. "thm_2terms" covers the shapes flat(a) = (1, 2);
    (positives, 0^m, a_last); (parts > 1, a 0/1 sequence, 1).
    "thm_2terms_unit_inversion" covers the inversion (1, 2) with
    (positives, a 0/1 sequence, a_last) where a_last is 1 or 2, e.g.
    (2,0,1,2) and (1,2,0,1,1), which the first list misses.
    """
    a = WeakComposition(a)
    flat = flatten(a)
    pairs = inversions(flat)
    if len(pairs) != 1:
        return None
    i, j = pairs[0]
    if j != i + 1 or flat[j - 1] != flat[i - 1] + 1:
        return None
    s = strip_trailing_zeros(a)
    if tuple(flat) == (1, 2):
        return "thm_2terms"
    if any(all(v > 0 for v in head) and not any(middle) for head, middle, _ in _splits(s)):
        return "thm_2terms"
    if any(
        all(v > 1 for v in head) and set(middle) <= {0, 1} and last == 1
        for head, middle, last in _splits(s)
    ):
        return "thm_2terms"
    if flat[i - 1] == 1 and any(
        all(v > 0 for v in head) and set(middle) <= {0, 1} and last in (1, 2)
        for head, middle, last in _splits(s)
    ):
        return "thm_2terms_unit_inversion"
    return None


def two_term_expansion(a: Sequence[int]) -> Optional[WeakComposition]:
    """The second index b with kappa_a = F_a + F_b, or None. When present, b = sort_0(a)."""
    a = WeakComposition(a)
    return sort0(a) if two_term_theorem(a) is not None else None


def inv1_closed_form(alpha: Sequence[int]) -> list[StrongComposition]:
    """
    The m + 1 weights of kappa_alpha when inv(alpha) = 1, in order t = 0..m:
    parts i and i+1 become (alpha_i + t, alpha_i + m - t) where the unique
    inversion is (i, i+1) and alpha_{i+1} = alpha_i + m.

    Raises:
        UsageError: if inv(alpha) != 1
    """
    alpha = as_strong(alpha)
    pairs = inversions(alpha)
    if len(pairs) != 1:
        raise UsageError(f"closed form needs exactly one inversion, {alpha} has {len(pairs)}")
    i, _ = pairs[0]
    low = alpha[i - 1]
    m = alpha[i] - low
    terms = []
    for t in range(m + 1):
        parts = list(alpha)
        parts[i - 1] = low + t
        parts[i] = low + m - t
        terms.append(StrongComposition(parts))
    return terms


def is_hook(lam: Sequence[int]) -> bool:
    return len(lam) > 0 and all(part == 1 for part in lam[1:])


def _schur_mf_shape(lam: Partition) -> bool:
    if tuple(lam) in ((3, 3), (4, 4)):
        return True
    if len(lam) == 2 and lam[1] == 2:
        return True
    return is_hook(lam)


def schur_fund_mf(lam: Sequence[int]) -> bool:
    """
    Whether s_lambda expands multiplicity-freely into fundamental
    quasisymmetric functions: lambda or its conjugate is (3,3), (4,4),
    (n-2, 2) or a hook. The empty partition counts as free (s = F = 1).
    """
    lam = Partition(lam)
    if not lam:
        return True
    return _schur_mf_shape(lam) or _schur_mf_shape(conjugate(lam))


def _two_part_listed(lam: Partition) -> bool:
    return tuple(lam) in ((3, 3), (4, 4)) or lam[1] in (1, 2)


def two_nonzero_mf(a: Sequence[int]) -> ClassificationReport:
    """
    Multiplicity freeness for an index with exactly two nonzero parts,
    decided by its number of leading zeros.

    Raises:
        UsageError: if a does not have exactly two nonzero parts
    """
    a = WeakComposition(a)
    flat = flatten(a)
    if len(flat) != 2:
        raise UsageError(f"{a} has {len(flat)} nonzero parts, expected 2")
    lam = sort_to_partition(a)
    lead = leading_zero_count(a)
    first, second = flat
    if lead == 0:
        return ClassificationReport(a, Verdict.MULTIPLICITY_FREE, "thm_two_parts_3")
    if lead == 1:
        free = _two_part_listed(lam) or first >= second
        theorem = "thm_two_parts_2"
    else:
        free = _two_part_listed(lam) or tuple(flat) == (4, 3)
        theorem = "thm_two_parts"
    if not free and second > first >= 3:
        theorem = "lem_two_parts_1"
    verdict = Verdict.MULTIPLICITY_FREE if free else Verdict.NOT_MULTIPLICITY_FREE
    return ClassificationReport(a, verdict, theorem)


def classify(
    a: Sequence[int],
    brute: bool = False,
    bounds: Optional[Bounds] = None,
) -> ClassificationReport:
    """
    Run the criteria in order: single term, two terms, strong compositions,
    two nonzero parts, the Schur shortcut, the flattened-pattern shortcut.
    An index none of them decides is UNKNOWN_FAST_PATH, unless brute is set,
    in which case the slide expansion is enumerated.

    Args:
        a: The index
        brute: Fall back to enumeration (exponential) when no criterion applies
        bounds: Enumeration bounds for the fallback
    """
    a = WeakComposition(a)
    for rule in get_rules():
        report = rule.evaluate(a)
        if report is not None:
            logger.debug("%s decided by %s: %s", a, report.theorem, report.verdict.value)
            return report
    if not brute:
        return ClassificationReport(a, Verdict.UNKNOWN_FAST_PATH, "none")

    from .expansion import max_multiplicity

    result = max_multiplicity(a, bounds)
    witness = {"max_multiplicity": result.max_multiplicity}
    if result.witness is not None:
        witness["weight"] = list(result.witness)
    verdict = Verdict.MULTIPLICITY_FREE if result.multiplicity_free else Verdict.NOT_MULTIPLICITY_FREE
    return ClassificationReport(a, verdict, "brute_force", witness)
