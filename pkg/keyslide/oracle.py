"""
Independent oracles for checking the tableau machinery.

Conventions (French): row 1 is the bottom row and the longest. In a
semistandard tableau rows weakly increase to the right and columns strictly
increase upward; in a standard tableau both strictly increase. For example
the SSYT of shape (2, 1) with rows [1, 1] and [2] is drawn

    2
    1 1

A standard tableau has a descent at p when p + 1 sits in a strictly higher
row than p.
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Callable, Iterator, Optional, Sequence

from .composition import (
    Partition,
    WeakComposition,
    as_strong,
    flatten,
    prepend_zeros,
    refinements,
    sort_to_partition,
    weak_compositions,
)
from .config import Bounds, check_enumeration_bounds
from .exceptions import UsageError
from .expansion import SlideExpansion, max_multiplicity
from .polynomial import MonomialPolynomial, key_polynomial, slide_polynomial

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SemistandardTableau:
    shape: Partition
    rows: tuple[tuple[int, ...], ...]

    def content(self, n: int) -> tuple[int, ...]:
        """Multiplicity of each value 1..n."""
        counts = [0] * n
        for row in self.rows:
            for value in row:
                counts[value - 1] += 1
        return tuple(counts)


@dataclass(frozen=True)
class StandardTableau:
    shape: Partition
    rows: tuple[tuple[int, ...], ...]

    def row_of(self) -> dict[int, int]:
        """Entry -> 1-based row index."""
        return {value: r for r, row in enumerate(self.rows, start=1) for value in row}

    def descents(self) -> list[int]:
        where = self.row_of()
        return [p for p in range(1, len(where)) if where[p + 1] > where[p]]

    def descent_composition(self) -> WeakComposition:
        """Gaps between consecutive descents, closed off at |shape|."""
        size = sum(self.shape)
        if size == 0:
            return WeakComposition(())
        cuts = [0] + self.descents() + [size]
        return WeakComposition(cuts[i + 1] - cuts[i] for i in range(len(cuts) - 1))


def semistandard_tableaux(lam: Sequence[int], n: int) -> Iterator[SemistandardTableau]:
    """All SSYT of shape lam with entries in 1..n, filled bottom row first, left to right."""
    lam = Partition(lam)
    cells = [(r, c) for r, length in enumerate(lam) for c in range(length)]
    filling = [[0] * length for length in lam]

    def backtrack(position: int):
        if position == len(cells):
            yield SemistandardTableau(lam, tuple(tuple(row) for row in filling))
            return
        r, c = cells[position]
        low = 1
        if c > 0:
            low = max(low, filling[r][c - 1])
        if r > 0:
            low = max(low, filling[r - 1][c] + 1)
        for value in range(low, n + 1):
            filling[r][c] = value
            yield from backtrack(position + 1)
        filling[r][c] = 0

    yield from backtrack(0)


def standard_tableaux(lam: Sequence[int]) -> Iterator[StandardTableau]:
    """All SYT of shape lam, placing 1, 2, ... on addable corners, lowest row first."""
    lam = Partition(lam)
    size = sum(lam)
    rows: list[list[int]] = [[] for _ in lam]

    def backtrack(value: int):
        if value > size:
            yield StandardTableau(lam, tuple(tuple(row) for row in rows))
            return
        for r, length in enumerate(lam):
            if len(rows[r]) < length and (r == 0 or len(rows[r]) < len(rows[r - 1])):
                rows[r].append(value)
                yield from backtrack(value + 1)
                rows[r].pop()

    yield from backtrack(1)


def hook_length_count(lam: Sequence[int]) -> int:
    """Number of SYT of shape lam by the hook length formula."""
    lam = Partition(lam)
    columns = [sum(1 for part in lam if part > c) for c in range(lam[0])] if lam else []
    product = 1
    for r, length in enumerate(lam):
        for c in range(length):
            product *= (length - c - 1) + (columns[c] - r - 1) + 1
    return math.factorial(sum(lam)) // product


def schur_polynomial(lam: Sequence[int], n: int, bounds: Optional[Bounds] = None) -> MonomialPolynomial:
    """
    s_lam(x_1..x_n) as the sum of x^content(T) over SSYT T of shape lam.

    Raises:
        UsageError: if n < 1
        BoundExceededError: if |lam| is larger than the bounds allow
    """
    lam = Partition(lam)
    if n < 1:
        raise UsageError(f"need at least one variable, got {n}")
    check_enumeration_bounds(lam, bounds)
    return MonomialPolynomial.from_monomials(n, (t.content(n) for t in semistandard_tableaux(lam, n)))


def fundamental_expansion_of_schur(lam: Sequence[int], bounds: Optional[Bounds] = None) -> SlideExpansion:
    """The multiset of descent compositions over SYT(lam): s_lam = sum F_co(T)."""
    lam = Partition(lam)
    check_enumeration_bounds(lam, bounds)
    return SlideExpansion.from_weights(lam, (t.descent_composition() for t in standard_tableaux(lam)))


def fundamental_quasisymmetric(alpha: Sequence[int], n: int) -> MonomialPolynomial:
    """F_alpha(x_1..x_n): x^b over weak compositions b of length n with flat(b) refining alpha."""
    alpha = as_strong(alpha)
    monomials = []
    for gamma in refinements(alpha, max_length=n):
        for positions in combinations(range(n), len(gamma)):
            b = [0] * n
            for position, part in zip(positions, gamma):
                b[position] = part
            monomials.append(tuple(b))
    return MonomialPolynomial.from_monomials(n, monomials)


class LimitVerdict(str, Enum):
    STABLE_MATCH = "STABLE_MATCH"
    STABLE_MISMATCH = "STABLE_MISMATCH"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class LimitCheck:
    """
    Truncations of the padded polynomials 0^m x a for m = first_m..m_max,
    compared against the expected limit. stabilized_at is the smallest m
    from which every later truncation agrees.
    """

    index: WeakComposition
    variables: int
    m_max: int
    verdict: LimitVerdict
    target: MonomialPolynomial
    limit: Optional[MonomialPolynomial] = None
    stabilized_at: Optional[int] = None

    @property
    def passed(self) -> bool:
        return self.verdict is LimitVerdict.STABLE_MATCH

    def to_dict(self) -> dict:
        return {
            "index": list(self.index),
            "variables": self.variables,
            "m_max": self.m_max,
            "verdict": self.verdict.value,
            "stabilized_at": self.stabilized_at,
            "target": self.target.to_dict(),
            "limit": self.limit.to_dict() if self.limit is not None else None,
        }


def _limit_check(
    a: WeakComposition,
    n: int,
    m_max: int,
    truncated: Callable[[WeakComposition], MonomialPolynomial],
    target: MonomialPolynomial,
) -> LimitCheck:
    if n < 1:
        raise UsageError(f"need at least one variable, got {n}")
    first_m = max(0, n - len(a))
    values = [(m, truncated(prepend_zeros(a, m))) for m in range(first_m, m_max + 1)]
    if len(values) < 2:
        logger.info("%s: m_max = %d leaves fewer than two truncations to compare", a, m_max)
        return LimitCheck(a, n, m_max, LimitVerdict.INCONCLUSIVE, target)
    last_m, last = values[-1]
    stabilized_at = last_m
    for m, value in reversed(values[:-1]):
        if value != last:
            break
        stabilized_at = m
    if stabilized_at == last_m:
        logger.info("%s: truncations to %d variables still changing at m = %d", a, n, last_m)
        return LimitCheck(a, n, m_max, LimitVerdict.INCONCLUSIVE, target, last)
    verdict = LimitVerdict.STABLE_MATCH if last == target else LimitVerdict.STABLE_MISMATCH
    return LimitCheck(a, n, m_max, verdict, target, last, stabilized_at)


def stable_limit_check(
    a: Sequence[int],
    n: int,
    m_max: Optional[int] = None,
    bounds: Optional[Bounds] = None,
) -> LimitCheck:
    """
    Check that kappa_{0^m x a}(x_1..x_n, 0, 0, ...) stabilizes to s_sort(a)(x_1..x_n).

    Only tableaux living in rows 1..n are enumerated. A sequence that has not
    settled by m_max is INCONCLUSIVE, not a failure.
    """
    a = WeakComposition(a)
    bounds = bounds or Bounds()
    m_max = bounds.m_max if m_max is None else m_max
    check_enumeration_bounds(prepend_zeros(a, max(m_max, 0)), bounds)
    target = schur_polynomial(sort_to_partition(a), n, bounds)
    return _limit_check(
        a, n, m_max, lambda padded: key_polynomial(padded, bounds, row_limit=n).truncate(n), target
    )


def slide_limit_check(
    a: Sequence[int],
    n: int,
    m_max: Optional[int] = None,
    bounds: Optional[Bounds] = None,
) -> LimitCheck:
    """The same check for slides: F-frak_{0^m x a} truncated tends to F_flat(a)(x_1..x_n)."""
    a = WeakComposition(a)
    bounds = bounds or Bounds()
    m_max = bounds.m_max if m_max is None else m_max
    check_enumeration_bounds(prepend_zeros(a, max(m_max, 0)), bounds)
    target = fundamental_quasisymmetric(flatten(a), n)
    return _limit_check(a, n, m_max, lambda padded: slide_polynomial(padded, bounds).truncate(n), target)


@dataclass(frozen=True)
class SweepRecord:
    index: WeakComposition
    max_multiplicity: int
    classifier_verdict: str

    @property
    def consistent(self) -> bool:
        """False when the fast classifier contradicts the brute-force count."""
        if self.classifier_verdict in ("SINGLE_TERM", "TWO_TERMS", "MULTIPLICITY_FREE"):
            return self.max_multiplicity <= 1
        if self.classifier_verdict == "NOT_MULTIPLICITY_FREE":
            return self.max_multiplicity > 1
        return True

    def to_dict(self) -> dict:
        return {
            "index": list(self.index),
            "max_multiplicity": self.max_multiplicity,
            "classifier_verdict": self.classifier_verdict,
        }


def _sweep_record(item: tuple[tuple[int, ...], Optional[Bounds]]) -> SweepRecord:
    # module-level so worker processes can unpickle it
    from .classify import classify

    parts, bounds = item
    a = WeakComposition(parts)
    return SweepRecord(a, max_multiplicity(a, bounds).max_multiplicity, classify(a).verdict.value)


def brute_force_mf_universe(
    length_max: int,
    entry_max: int,
    bounds: Optional[Bounds] = None,
    workers: Optional[int] = None,
) -> Iterator[SweepRecord]:
    """
    Every weak composition of length length_max with parts <= entry_max, in
    lexicographic order, with its brute-force multiplicity and the fast
    classifier's verdict. Shorter indices appear through trailing zeros.

    Args:
        length_max: Length of the swept compositions
        entry_max: Largest part
        bounds: Enumeration bounds, checked against the largest index up front
        workers: Process count; output order does not depend on it
    """
    if length_max < 0 or entry_max < 0:
        raise UsageError("sweep limits must be nonnegative")
    bounds = bounds or Bounds()
    workers = bounds.workers if workers is None else workers
    if workers < 1:
        raise UsageError(f"worker count must be at least 1, got {workers}")
    check_enumeration_bounds([entry_max] * length_max, bounds)

    items = [(tuple(a), bounds) for a in weak_compositions(length_max, entry_max)]
    logger.info("sweeping %d indices with %d worker(s)", len(items), workers)
    if workers == 1:
        for item in items:
            yield _sweep_record(item)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(_sweep_record, items, chunksize=max(1, len(items) // (workers * 8)))
