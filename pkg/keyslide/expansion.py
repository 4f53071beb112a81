"""
Slide expansions of key polynomials.

kappa_a is the sum of F_wt(T) over the quasi-Yamanouchi Kohnert tableaux
T of content a. This module computes that multiset directly, regenerates
QKT(alpha) for strong alpha by the swap-and-relabel recursion, and checks
the expansion identity monomial by monomial.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

from .composition import (
    WeakComposition,
    as_strong,
    inversion_count,
)
from .config import Bounds, check_enumeration_bounds
from .exceptions import UsageError
from .polynomial import MonomialPolynomial, key_polynomial, polynomial_sum, slide_polynomial
from .tableau import Cell, KohnertTableau, basic_tableau, canonical, enumerate_qkt

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SlideExpansion:
    """The multiset {wt(T) : T in QKT(index)} as sorted (weight, multiplicity) pairs."""

    index: WeakComposition
    terms: tuple[tuple[WeakComposition, int], ...]

    @classmethod
    def from_weights(cls, index: Sequence[int], weights) -> "SlideExpansion":
        counts = Counter(WeakComposition(w) for w in weights)
        return cls(WeakComposition(index), tuple(sorted(counts.items())))

    @property
    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.terms)

    @property
    def weights(self) -> list[WeakComposition]:
        """Distinct weights in canonical order."""
        return [w for w, _ in self.terms]

    def multiplicity(self, weight: Sequence[int]) -> int:
        key = tuple(weight)
        for w, m in self.terms:
            if tuple(w) == key:
                return m
        return 0

    @property
    def max_multiplicity(self) -> int:
        return max((m for _, m in self.terms), default=0)

    @property
    def is_multiplicity_free(self) -> bool:
        return self.max_multiplicity <= 1

    def to_dict(self) -> dict:
        return {
            "index": list(self.index),
            "terms": [{"weight": list(w), "multiplicity": m} for w, m in self.terms],
        }


@dataclass(frozen=True)
class MultiplicityReport:
    """Largest multiplicity in a slide expansion; witness is a repeated weight when it exceeds 1."""

    index: WeakComposition
    max_multiplicity: int
    witness: Optional[WeakComposition] = None

    @property
    def multiplicity_free(self) -> bool:
        return self.max_multiplicity == 1


@dataclass(frozen=True)
class ExpansionCheck:
    """Both sides of kappa_a = sum F_wt(T)."""

    expansion: SlideExpansion
    key: MonomialPolynomial
    slide_sum: MonomialPolynomial

    @property
    def holds(self) -> bool:
        return self.key == self.slide_sum


def slide_expansion(a: Sequence[int], bounds: Optional[Bounds] = None) -> SlideExpansion:
    """The multiset of weights of QKT(a)."""
    a = WeakComposition(a)
    return SlideExpansion.from_weights(a, (t.weight for t in enumerate_qkt(a, bounds)))


def max_multiplicity(a: Sequence[int], bounds: Optional[Bounds] = None) -> MultiplicityReport:
    """Brute-force multiplicity of the slide expansion; 1 means multiplicity free."""
    expansion = slide_expansion(a, bounds)
    top = expansion.max_multiplicity
    witness = None
    if top > 1:
        witness = next(w for w, m in expansion.terms if m == top)
    return MultiplicityReport(expansion.index, top, witness)


def expansion_identity(a: Sequence[int], bounds: Optional[Bounds] = None) -> ExpansionCheck:
    a = WeakComposition(a)
    expansion = slide_expansion(a, bounds)
    key = key_polynomial(a, bounds)
    slides = polynomial_sum(
        (_scaled(slide_polynomial(w, bounds), m) for w, m in expansion.terms),
        len(a),
    )
    return ExpansionCheck(expansion, key, slides)


def verify_expansion(a: Sequence[int], bounds: Optional[Bounds] = None) -> bool:
    """True iff the slide expansion sums to the key polynomial, monomial by monomial."""
    check = expansion_identity(a, bounds)
    if not check.holds:
        logger.error("slide expansion of %s does not sum to its key polynomial", check.expansion.index)
    return check.holds


def _scaled(p: MonomialPolynomial, factor: int) -> MonomialPolynomial:
    return MonomialPolynomial(p.variable_count, {e: c * factor for e, c in p.items()})


def first_ascent(alpha: Sequence[int]) -> Optional[int]:
    """Smallest 1-based i with alpha_i < alpha_{i+1}, or None for a partition."""
    for i in range(len(alpha) - 1):
        if alpha[i] < alpha[i + 1]:
            return i + 1
    return None


def swap_rows(tableau: KohnertTableau, row: int, first_col: int, last_col: int) -> KohnertTableau:
    """Exchange the contents of rows `row` and `row + 1` across columns first_col..last_col."""
    cells = []
    for cell in tableau.cells:
        if first_col <= cell.col <= last_col and cell.row in (row, row + 1):
            cells.append(Cell(2 * row + 1 - cell.row, cell.col, cell.label))
        else:
            cells.append(cell)
    return KohnertTableau(tableau.content, tuple(cells))


def lift(hat_tableau: KohnertTableau, alpha: Sequence[int]) -> dict[int, KohnertTableau]:
    """
    One step of the recursion: turn T-hat in QKT(alpha-hat) into the
    tableaux S(T-hat) of content alpha.

    Returns:
        {0: T_0} plus {k: T_k} for every column k where the swap applies
    """
    alpha = as_strong(alpha)
    i = first_ascent(alpha)
    if i is None:
        raise UsageError(f"{alpha} has no ascent to undo")
    low, high = alpha[i - 1], alpha[i]
    relabelled = hat_tableau.relabel({i: i + 1, i + 1: i}, min_col=low + 1).with_content(alpha)
    produced = {0: relabelled}
    for k in range(low + 1, high + 1):
        if relabelled.label_at(i + 1, k) is None and relabelled.label_at(i, k) == i + 1:
            produced[k] = swap_rows(relabelled, i, low + 1, k)
    return produced


@lru_cache(maxsize=1024)
def _recursive_qkt(alpha: tuple[int, ...]) -> tuple[KohnertTableau, ...]:
    i = first_ascent(alpha)
    if i is None:
        return (basic_tableau(alpha),)
    hat = list(alpha)
    hat[i - 1], hat[i] = hat[i], hat[i - 1]
    produced = []
    for hat_tableau in _recursive_qkt(tuple(hat)):
        produced.extend(lift(hat_tableau, alpha).values())
    # the sets S(T-hat) need not be disjoint
    return tuple(canonical(produced))


def recursive_qkt(alpha: Sequence[int], bounds: Optional[Bounds] = None) -> list[KohnertTableau]:
    """
    QKT(alpha) for a strong composition, built by undoing the first ascent:
    swap alpha_i and alpha_{i+1}, recurse, relabel i <-> i+1 beyond column
    alpha_i, then swap rows i and i+1 over columns alpha_i+1..k wherever
    row i+1 is empty and row i holds an i+1 in column k.

    Raises:
        UsageError: if alpha has a zero part
        BoundExceededError: if alpha is larger than the bounds allow
    """
    alpha = as_strong(alpha)
    check_enumeration_bounds(alpha, bounds)
    logger.debug("recursive QKT generation for %s (inv = %d)", alpha, inversion_count(alpha))
    return list(_recursive_qkt(tuple(alpha)))


def sort_tableau(alpha: Sequence[int]) -> KohnertTableau:
    """
    The basic tableau with every column pushed to the bottom, entries
    increasing upward. It lies in QKT(alpha) and has weight sort(alpha).
    """
    alpha = as_strong(alpha)
    cells = []
    for col in range(1, max(alpha, default=0) + 1):
        labels = [i for i, part in enumerate(alpha, start=1) if part >= col]
        cells.extend(Cell(row, col, label) for row, label in enumerate(labels, start=1))
    return KohnertTableau(WeakComposition(alpha), tuple(cells))

