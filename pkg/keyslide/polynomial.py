"""
Exact sparse polynomials with integer coefficients, and the monomial
expansions of key polynomials and fundamental slide polynomials.
"""

from __future__ import annotations

import logging
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Mapping, Optional, Sequence

from .composition import WeakComposition, dominates, flatten, refinements
from .config import Bounds, check_enumeration_bounds
from .exceptions import UsageError
from .tableau import enumerate_kohnert

logger = logging.getLogger(__name__)

Exponent = tuple[int, ...]


class MonomialPolynomial:
    """
    A polynomial in x_1..x_n stored as {exponent vector: coefficient}.

    Zero coefficients are never stored; terms are kept in lexicographic
    order of exponent vectors.
    """

    __slots__ = ("variable_count", "_terms")

    def __init__(self, variable_count: int, terms: Optional[Mapping[Sequence[int], int]] = None):
        if variable_count < 0:
            raise UsageError(f"variable count must be nonnegative, got {variable_count}")
        self.variable_count = variable_count
        cleaned: dict[Exponent, int] = {}
        for exponents, coefficient in (terms or {}).items():
            key = tuple(exponents)
            if len(key) != variable_count:
                raise UsageError(
                    f"exponent vector {key} has length {len(key)}, expected {variable_count}"
                )
            if any(e < 0 for e in key):
                raise UsageError(f"negative exponent in {key}")
            if not isinstance(coefficient, int):
                raise UsageError(f"coefficients must be exact integers, got {coefficient!r}")
            if coefficient != 0:
                cleaned[key] = cleaned.get(key, 0) + coefficient
        self._terms = {k: cleaned[k] for k in sorted(cleaned) if cleaned[k] != 0}

    @classmethod
    def from_monomials(cls, variable_count: int, monomials: Iterable[Sequence[int]]) -> "MonomialPolynomial":
        """Sum of x^b over the given exponent vectors, with repeats accumulating."""
        counts: dict[Exponent, int] = {}
        for b in monomials:
            key = tuple(b)
            counts[key] = counts.get(key, 0) + 1
        return cls(variable_count, counts)

    @classmethod
    def one(cls, variable_count: int) -> "MonomialPolynomial":
        return cls(variable_count, {(0,) * variable_count: 1})

    @classmethod
    def zero(cls, variable_count: int) -> "MonomialPolynomial":
        return cls(variable_count)

    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, exponents: Sequence[int]) -> int:
        return self._terms.get(tuple(exponents), 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self):
        return iter(self._terms)

    def _check_compatible(self, other: "MonomialPolynomial") -> None:
        if not isinstance(other, MonomialPolynomial):
            raise UsageError(f"cannot combine a polynomial with {type(other).__name__}")
        if other.variable_count != self.variable_count:
            raise UsageError(
                f"variable counts differ: {self.variable_count} and {other.variable_count}"
            )

    def __add__(self, other: "MonomialPolynomial") -> "MonomialPolynomial":
        self._check_compatible(other)
        combined = dict(self._terms)
        for exponents, coefficient in other._terms.items():
            combined[exponents] = combined.get(exponents, 0) + coefficient
        return MonomialPolynomial(self.variable_count, combined)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialPolynomial):
            return NotImplemented
        return self.variable_count == other.variable_count and self._terms == other._terms

    __hash__ = None

    def __repr__(self) -> str:
        return f"MonomialPolynomial({self.variable_count}, {self.to_text()})"

    def evaluate_all_ones(self) -> int:
        """The sum of the coefficients."""
        return sum(self._terms.values())

    def degrees(self) -> set[int]:
        return {sum(e) for e in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def is_multiplicity_free(self) -> bool:
        return all(c == 1 for c in self._terms.values())

    def truncate(self, n: int) -> "MonomialPolynomial":
        """Set x_{n+1}, x_{n+2}, ... to zero and drop them, leaving a polynomial in n variables."""
        if n > self.variable_count:
            raise UsageError(f"cannot truncate {self.variable_count} variables to {n}")
        kept = {e[:n]: c for e, c in self._terms.items() if not any(e[n:])}
        return MonomialPolynomial(n, kept)

    def to_dict(self) -> dict:
        return {
            "variables": self.variable_count,
            "terms": [{"exponents": list(e), "coefficient": c} for e, c in self._terms.items()],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "MonomialPolynomial":
        try:
            return cls(
                int(data["variables"]),
                {tuple(t["exponents"]): int(t["coefficient"]) for t in data["terms"]},
            )
        except (KeyError, TypeError) as e:
            raise UsageError(f"malformed polynomial record: {e}")

    def to_text(self) -> str:
        """Plain text such as "x1^2*x2^3 + x1^3*x2^2", terms in lexicographic order."""
        if not self._terms:
            return "0"
        pieces = []
        for exponents, coefficient in self._terms.items():
            factors = [
                f"x{i}" if e == 1 else f"x{i}^{e}"
                for i, e in enumerate(exponents, start=1)
                if e > 0
            ]
            if coefficient != 1 or not factors:
                factors.insert(0, str(coefficient))
            pieces.append("*".join(factors))
        return " + ".join(pieces)

    def to_sympy(self):
        """The same polynomial as a sympy expression in x1..xn."""
        import sympy

        symbols = sympy.symbols(f"x1:{self.variable_count + 1}") if self.variable_count else ()
        expression = sympy.Integer(0)
        for exponents, coefficient in self._terms.items():
            term = sympy.Integer(coefficient)
            for symbol, e in zip(symbols, exponents):
                term *= symbol**e
            expression += term
        return expression

    def to_latex(self) -> str:
        """LaTeX in x^b notation, e.g. "x_{1}^{3} x_{2}^{2} + x_{1}^{2} x_{2}^{3}"."""
        import sympy

        return sympy.latex(self.to_sympy(), order="lex")


def polynomial_sum(polynomials: Iterable[MonomialPolynomial], variable_count: int) -> MonomialPolynomial:
    total = MonomialPolynomial.zero(variable_count)
    for p in polynomials:
        total = total + p
    return total


def key_polynomial(
    a: Sequence[int],
    bounds: Optional[Bounds] = None,
    row_limit: Optional[int] = None,
) -> MonomialPolynomial:
    """
    The key polynomial: sum of x^wt(T) over T in KT(a).

    With row_limit=n only tableaux living in rows 1..n contribute, which is
    the key polynomial with x_{n+1}, x_{n+2}, ... set to zero.
    """
    a = WeakComposition(a)
    tableaux = enumerate_kohnert(a, bounds, row_limit=row_limit)
    return MonomialPolynomial.from_monomials(len(a), (t.weight for t in tableaux))


@lru_cache(maxsize=4096)
def _slide_monomials(a: tuple[int, ...]) -> tuple[Exponent, ...]:
    ell = len(a)
    monomials = []
    for gamma in refinements(flatten(a), max_length=ell):
        for positions in combinations(range(ell), len(gamma)):
            b = [0] * ell
            for position, part in zip(positions, gamma):
                b[position] = part
            if dominates(b, a):
                monomials.append(tuple(b))
    return tuple(monomials)


def slide_polynomial(a: Sequence[int], bounds: Optional[Bounds] = None) -> MonomialPolynomial:
    """
    The fundamental slide polynomial: sum of x^b over b >= a whose
    flattening refines flat(a).
    """
    a = WeakComposition(a)
    check_enumeration_bounds(a, bounds)
    polynomial = MonomialPolynomial.from_monomials(len(a), _slide_monomials(tuple(a)))
    # each b comes from exactly one (refinement, placement) pair
    assert polynomial.is_multiplicity_free(), f"slide polynomial of {a} has a repeated monomial"
    return polynomial
