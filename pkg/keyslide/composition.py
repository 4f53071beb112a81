"""
Weak compositions, strong compositions and partitions.

Compositions are immutable tuples of part sizes. Length is significant:
(2, 3) and (2, 3, 0) index polynomials in different numbers of variables.
Positions reported by this module (inversions, witnesses) are 1-based.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

from .exceptions import CompositionParseError, UsageError

_PART_PATTERN = re.compile(r"^[0-9]+$")


class WeakComposition(tuple):
    """A finite sequence of nonnegative integers."""

    def __new__(cls, parts: Iterable[int] = ()):
        values = tuple(parts)
        for value in values:
            if isinstance(value, bool) or not isinstance(value, int):
                raise UsageError(f"composition parts must be integers, got {value!r}")
        cls._validate(values)
        return super().__new__(cls, values)

    @classmethod
    def _validate(cls, values: tuple[int, ...]) -> None:
        if any(v < 0 for v in values):
            raise UsageError(f"weak composition parts must be nonnegative: {values}")

    @classmethod
    def parse(cls, text: str) -> "WeakComposition":
        """
        Parse the comma-separated text form, e.g. "0,0,3,2".

        The empty string is the empty composition.
        """
        stripped = text.strip()
        if stripped == "":
            return cls(())
        pieces = stripped.split(",")
        for piece in pieces:
            if not _PART_PATTERN.match(piece):
                raise CompositionParseError(f"malformed composition {text!r}: bad part {piece!r}")
        try:
            return cls(int(piece) for piece in pieces)
        except UsageError as e:
            raise CompositionParseError(f"malformed composition {text!r}: {e}")

    @property
    def size(self) -> int:
        """Total number of cells, |a|."""
        return sum(self)

    def __str__(self) -> str:
        return ",".join(str(v) for v in self)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({str(self)})"

    def __getnewargs__(self):
        return (tuple(self),)


class StrongComposition(WeakComposition):
    """A finite sequence of positive integers."""

    @classmethod
    def _validate(cls, values: tuple[int, ...]) -> None:
        if any(v < 1 for v in values):
            raise UsageError(f"strong composition parts must be positive: {values}")


class Partition(StrongComposition):
    """A weakly decreasing sequence of positive integers."""

    @classmethod
    def _validate(cls, values: tuple[int, ...]) -> None:
        super()._validate(values)
        if any(values[i] < values[i + 1] for i in range(len(values) - 1)):
            raise UsageError(f"partition parts must weakly decrease: {values}")


def as_strong(alpha: Sequence[int]) -> StrongComposition:
    """Coerce a sequence to a StrongComposition, raising UsageError if it has zeros."""
    if isinstance(alpha, StrongComposition):
        return alpha
    return StrongComposition(alpha)


def is_strong(a: Sequence[int]) -> bool:
    return all(v > 0 for v in a)


def flatten(a: Sequence[int]) -> StrongComposition:
    """flat(a): remove the zeros, keeping the order of the nonzero parts."""
    return StrongComposition(v for v in a if v != 0)


def sort_to_partition(a: Sequence[int]) -> Partition:
    """sort(a): the nonzero parts rearranged into weakly decreasing order."""
    return Partition(sorted((v for v in a if v != 0), reverse=True))


def sort0(a: Sequence[int]) -> WeakComposition:
    """sort_0(a): sort(a) written back into the nonzero positions of a."""
    parts = iter(sort_to_partition(a))
    return WeakComposition(next(parts) if v != 0 else 0 for v in a)


def strip_trailing_zeros(a: Sequence[int]) -> WeakComposition:
    end = len(a)
    while end > 0 and a[end - 1] == 0:
        end -= 1
    return WeakComposition(a[:end])


def prepend_zeros(a: Sequence[int], m: int) -> WeakComposition:
    """0^m x a."""
    return WeakComposition((0,) * m + tuple(a))


def leading_zero_count(a: Sequence[int]) -> int:
    count = 0
    for v in a:
        if v != 0:
            break
        count += 1
    return count


def nonzero_positions(a: Sequence[int]) -> list[int]:
    """1-based positions of the nonzero parts."""
    return [i + 1 for i, v in enumerate(a) if v != 0]


def dominates(b: Sequence[int], a: Sequence[int]) -> bool:
    """
    b >= a in dominance order: every prefix sum of b is at least that of a.

    Raises:
        UsageError: if the lengths differ
    """
    if len(b) != len(a):
        raise UsageError(f"dominance needs equal lengths, got {len(b)} and {len(a)}")
    running_b = 0
    running_a = 0
    for x, y in zip(b, a):
        running_b += x
        running_a += y
        if running_b < running_a:
            return False
    return True


def refines(beta: Sequence[int], alpha: Sequence[int]) -> bool:
    """True iff consecutive blocks of beta sum, in order, to the parts of alpha."""
    beta = as_strong(beta)
    alpha = as_strong(alpha)
    block = 0
    j = 0
    for part in beta:
        if j >= len(alpha):
            return False
        block += part
        if block == alpha[j]:
            j += 1
            block = 0
        elif block > alpha[j]:
            return False
    return block == 0 and j == len(alpha)


def inversions(alpha: Sequence[int]) -> list[tuple[int, int]]:
    """All pairs (i, j), i < j, 1-based, with 0 < alpha_i < alpha_j."""
    pairs = []
    for i in range(len(alpha)):
        if alpha[i] == 0:
            continue
        for j in range(i + 1, len(alpha)):
            if alpha[i] < alpha[j]:
                pairs.append((i + 1, j + 1))
    return pairs


def inversion_count(alpha: Sequence[int]) -> int:
    """inv(alpha)."""
    return len(inversions(alpha))


def conjugate(lam: Sequence[int]) -> Partition:
    """The transpose of a partition: column lengths of its Young diagram."""
    lam = Partition(lam)
    if not lam:
        return Partition(())
    return Partition(sum(1 for part in lam if part > c) for c in range(lam[0]))


def weak_compositions(length: int, entry_max: int) -> Iterable[WeakComposition]:
    """All weak compositions of the given length with parts <= entry_max, lexicographically."""
    if length == 0:
        yield WeakComposition(())
        return
    for head in range(entry_max + 1):
        for tail in weak_compositions(length - 1, entry_max):
            yield WeakComposition((head,) + tuple(tail))


def compositions_of(n: int) -> Iterable[StrongComposition]:
    """All strong compositions of n, lexicographically."""
    if n == 0:
        yield StrongComposition(())
        return
    for first in range(1, n + 1):
        for rest in compositions_of(n - first):
            yield StrongComposition((first,) + tuple(rest))


def partitions_of(n: int, largest: int | None = None) -> Iterable[Partition]:
    """All partitions of n with parts at most `largest`, in reverse lexicographic order."""
    if largest is None:
        largest = n
    if n == 0:
        yield Partition(())
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition((first,) + tuple(rest))


def refinements(alpha: Sequence[int], max_length: int | None = None) -> Iterable[StrongComposition]:
    """All strong compositions refining alpha, optionally capped in length."""
    alpha = as_strong(alpha)

    def extend(index: int, prefix: tuple[int, ...]):
        if max_length is not None and len(prefix) > max_length:
            return
        if index == len(alpha):
            yield StrongComposition(prefix)
            return
        for piece in compositions_of(alpha[index]):
            yield from extend(index + 1, prefix + tuple(piece))

    yield from extend(0, ())
