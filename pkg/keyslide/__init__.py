"""
keyslide: key polynomials, fundamental slide polynomials and the
multiplicity-freeness of slide expansions, computed exactly from
(quasi-Yamanouchi) Kohnert tableaux.
"""

from .classify import (
    classify,
    inv1_closed_form,
    is_single_term,
    pattern_a,
    pattern_b,
    pattern_c,
    schur_fund_mf,
    strong_multiplicity_free,
    two_nonzero_mf,
    two_term_expansion,
    two_term_theorem,
)
from .composition import Partition, StrongComposition, WeakComposition
from .config import Bounds, load_bounds
from .exceptions import BoundExceededError, CompositionParseError, KeySlideError, UsageError
from .expansion import SlideExpansion, max_multiplicity, recursive_qkt, slide_expansion, verify_expansion
from .polynomial import MonomialPolynomial, key_polynomial, slide_polynomial
from .rules import ClassificationReport, Verdict
from .tableau import KohnertTableau, enumerate_kohnert, enumerate_qkt

__version__ = "1.0.0"

__all__ = [
    "Bounds",
    "BoundExceededError",
    "ClassificationReport",
    "CompositionParseError",
    "KeySlideError",
    "KohnertTableau",
    "MonomialPolynomial",
    "Partition",
    "SlideExpansion",
    "StrongComposition",
    "UsageError",
    "Verdict",
    "WeakComposition",
    "classify",
    "enumerate_kohnert",
    "enumerate_qkt",
    "inv1_closed_form",
    "is_single_term",
    "key_polynomial",
    "load_bounds",
    "max_multiplicity",
    "pattern_a",
    "pattern_b",
    "pattern_c",
    "recursive_qkt",
    "schur_fund_mf",
    "slide_expansion",
    "slide_polynomial",
    "strong_multiplicity_free",
    "two_nonzero_mf",
    "two_term_expansion",
    "two_term_theorem",
    "verify_expansion",
]
