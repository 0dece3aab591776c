"""Integer partitions, conjugation and the parity families used for branching.

A partition is stored as a plain tuple of positive integers in weakly
decreasing order; trailing zeros are stripped on the way in, so a padded
sequence and its canonical form compare equal.
"""

from __future__ import annotations

import enum
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

Partition = tuple


def canon(parts: Iterable[int]) -> tuple[int, ...]:
    """Validate and strip trailing zeros."""
    p = [int(x) for x in parts]
    for i, x in enumerate(p):
        if x < 0:
            raise ValueError(f"negative part in {p}")
        if i and x > p[i - 1]:
            raise ValueError(f"parts of {p} are not weakly decreasing")
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def size(la: Sequence[int]) -> int:
    return sum(la)


def length(la: Sequence[int]) -> int:
    return sum(1 for x in la if x > 0)


def part(la: Sequence[int], i: int) -> int:
    """1-based part access with implicit zeros."""
    return la[i - 1] if 1 <= i <= len(la) else 0


def conjugate(la: Sequence[int]) -> tuple[int, ...]:
    la = canon(la)
    if not la:
        return ()
    return tuple(sum(1 for x in la if x >= j) for j in range(1, la[0] + 1))


def contains(outer: Sequence[int], inner: Sequence[int]) -> bool:
    """True if the diagram of `inner` sits inside the diagram of `outer`."""
    if len(canon(inner)) > len(canon(outer)):
        return False
    return all(part(outer, i) >= x for i, x in enumerate(inner, 1))


class Family(enum.Enum):
    ALL = "all"
    EVEN_ROWS = "even_rows"        # every part even
    EVEN_COLUMNS = "even_columns"  # every column of even height
    BOTH = "both"


def is_in_family(la: Sequence[int], fam: Family, max_length: int | None = None) -> bool:
    la = canon(la)
    if max_length is not None and len(la) > max_length:
        return False
    rows_even = all(x % 2 == 0 for x in la)
    cols_even = all(x % 2 == 0 for x in conjugate(la))
    if fam is Family.ALL:
        return True
    if fam is Family.EVEN_ROWS:
        return rows_even
    if fam is Family.EVEN_COLUMNS:
        return cols_even
    return rows_even and cols_even


def partitions_of(n: int, max_part: int | None = None, max_length: int | None = None) -> Iterator[tuple[int, ...]]:
    """All partitions of n in lexicographically decreasing order."""
    if max_part is None:
        max_part = n
    if max_length is None:
        max_length = n

    def rec(rest, bound, slots):
        if rest == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(rest, bound), 0, -1):
            for tail in rec(rest - first, first, slots - 1):
                yield (first,) + tail

    yield from rec(n, max_part, max_length)


@lru_cache(maxsize=None)
def _family_members(fam: Family, max_weight: int, max_length: int) -> tuple[tuple[int, ...], ...]:
    out = []
    for w in range(max_weight + 1):
        for la in partitions_of(w, max_length=max_length):
            if is_in_family(la, fam, max_length):
                out.append(la)
    return tuple(sorted(out))


def enumerate_family(fam: Family, max_weight: int, max_length: int) -> list[tuple[int, ...]]:
    """Members with |la| <= max_weight and length <= max_length, sorted lexicographically."""
    if max_weight < 0 or max_length < 0:
        raise ValueError("bounds must be nonnegative")
    return list(_family_members(fam, max_weight, max_length))


def family_of_weight(fam: Family, weight: int, max_length: int) -> list[tuple[int, ...]]:
    return [la for la in enumerate_family(fam, weight, max_length) if sum(la) == weight]


def reverse_padded(delta: Sequence[int], n: int) -> tuple[int, ...]:
    """(delta_n, ..., delta_1), the zero-padded reversal; weakly increasing."""
    delta = canon(delta)
    if len(delta) > n:
        raise ValueError(f"length of {delta} exceeds {n}")
    return tuple(part(delta, n - i + 1) for i in range(1, n + 1))


def parse(text: str) -> tuple[int, ...]:
    """Parse '5,4,4' (or '' for the empty partition)."""
    text = text.strip()
    if not text:
        return ()
    return canon(int(x) for x in text.split(","))


def is_orthogonal_label(mu: Sequence[int], n: int) -> bool:
    """mu'_1 + mu'_2 <= n, the labels of irreducible O_n modules."""
    mc = conjugate(mu)
    return part(mc, 1) + part(mc, 2) <= n


def orthogonal_labels(n: int, max_weight: int) -> list[tuple[int, ...]]:
    out = []
    for w in range(max_weight + 1):
        for mu in partitions_of(w, max_length=n):
            if is_orthogonal_label(mu, n):
                out.append(mu)
    return sorted(out)
