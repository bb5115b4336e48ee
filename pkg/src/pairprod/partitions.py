"""Integer partitions: canonical representation, enumeration, counting, and
the multisets of k-fold products of parts at distinct indices.

A partition is a weakly decreasing tuple of positive integers.  Enumeration
is in descending lexicographic order of the parts tuple, which makes "all
partitions with a given leading part" a contiguous, independently restartable
block; the sweep machinery splits work along exactly those blocks.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator, Sequence

from .multiset import ProductMultiset, pairwise_products


class NonPositivePart(ValueError):
    """A prospective part is zero or negative."""


@dataclass(frozen=True)
class Partition:
    """Canonical partition; the empty partition appears only as an
    intermediate value, never as a partition of a positive size."""

    parts: tuple[int, ...]
    size: int
    length: int

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))


def make_partition(raw: Iterable[int]) -> Partition:
    """Canonicalize arbitrary positive integers into a Partition.

    Input order does not matter; parts are sorted descending.  Raises
    NonPositivePart for values < 1 and TypeError for non-integers.
    """
    parts = []
    for x in raw:
        if not isinstance(x, int) or isinstance(x, bool):
            raise TypeError(f"parts must be integers, got {x!r}")
        if x < 1:
            raise NonPositivePart(f"parts must be positive, got {x}")
        parts.append(x)
    parts.sort(reverse=True)
    t = tuple(parts)
    return Partition(t, sum(t), len(t))


def parse_partition(text: str) -> Partition:
    """Parse the canonical comma-separated form, e.g. "4,2,1,1"."""
    body = text.strip()
    if not body:
        raise ValueError("empty partition text")
    try:
        values = [int(tok) for tok in body.split(",")]
    except ValueError as exc:
        raise ValueError(f"bad partition text {text!r}") from exc
    return make_partition(values)


def run_length(parts: Sequence[int]) -> tuple[tuple[int, int], ...]:
    """Run-length encode a weakly decreasing parts sequence."""
    out: list[tuple[int, int]] = []
    cur: int | None = None
    count = 0
    for x in parts:
        if x == cur:
            count += 1
        else:
            if cur is not None:
                out.append((cur, count))
            cur, count = x, 1
    if cur is not None:
        out.append((cur, count))
    return tuple(out)


def pre_k(lam: Partition, k: int) -> ProductMultiset:
    """Multiset of products of parts over k-element index subsets.

    Returns the empty multiset when the partition has fewer than k parts.
    Works on the run-length form, so repeated parts cost binomial bookkeeping
    instead of subset enumeration.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if lam.length < k:
        return ProductMultiset((), 0)
    entries = run_length(lam.parts)
    if k == 2:
        out = pairwise_products(entries)
        return ProductMultiset(out, sum(m for _, m in out))
    products: dict[int, int] = {}
    suffix = [0] * (len(entries) + 1)
    for i in range(len(entries) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + entries[i][1]

    def descend(idx: int, need: int, prod: int, ways: int) -> None:
        if need == 0:
            products[prod] = products.get(prod, 0) + ways
            return
        if suffix[idx] < need:
            return
        value, mult = entries[idx]
        power = 1
        for take in range(0, min(mult, need) + 1):
            if take:
                power *= value
            descend(idx + 1, need - take, prod * power, ways * comb(mult, take))

    descend(0, k, 1, 1)
    out = tuple(sorted(products.items(), reverse=True))
    return ProductMultiset(out, sum(m for _, m in out))


def elementary_symmetric(lam: Partition, k: int) -> int:
    """e_k of the parts: 1 for k = 0, 0 for k beyond the length.

    Computed by the coefficient recurrence for prod(1 + x*part), which is
    independent of the subset enumeration behind pre_k; the two are checked
    against each other in the test suite.
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if k == 0:
        return 1
    if k > lam.length:
        return 0
    coeffs = [1] + [0] * k
    filled = 0
    for x in lam.parts:
        top = min(filled + 1, k)
        for j in range(top, 0, -1):
            coeffs[j] += coeffs[j - 1] * x
        filled += 1
    return coeffs[k]


_partition_counts = [1]  # pentagonal-recurrence table, extended on demand


def count_partitions(n: int) -> int:
    """p(n) via Euler's pentagonal-number recurrence, memoized."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    table = _partition_counts
    while len(table) <= n:
        m = len(table)
        acc = 0
        k = 1
        while True:
            g = k * (3 * k - 1) // 2
            if g > m:
                break
            term = table[m - g]
            g2 = g + k
            if g2 <= m:
                term += table[m - g2]
            acc += term if k % 2 else -term
            k += 1
        table.append(acc)
    return table[n]


def partition_tuples(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Parts tuples of all partitions of n with parts <= max_part, in
    descending lexicographic order.  n = 0 yields the empty tuple."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n == 0:
        yield ()
        return
    bound = n if max_part is None else min(max_part, n)
    if bound < 1:
        return
    q, r = divmod(n, bound)
    a = [bound] * q
    if r:
        a.append(r)
    while True:
        yield tuple(a)
        j = len(a) - 1
        while j >= 0 and a[j] == 1:
            j -= 1
        if j < 0:
            return
        # Decrement the rightmost part > 1, then repack everything to its
        # right as densely as possible under the new bound.
        v = a[j] - 1
        total = a[j] + (len(a) - 1 - j)
        del a[j:]
        q, r = divmod(total, v)
        a.extend([v] * q)
        if r:
            a.append(r)


def enumerate_partitions(n: int, prefix: Sequence[int] = ()) -> Iterator[Partition]:
    """All partitions of n in descending lexicographic order.

    A nonempty prefix restarts the stream at the contiguous block of
    partitions whose leading parts equal the prefix; sweeps are split across
    workers along these blocks.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    head = tuple(prefix)
    if head:
        prev = None
        for x in head:
            if not isinstance(x, int) or isinstance(x, bool) or x < 1:
                raise ValueError(f"prefix parts must be positive integers, got {x!r}")
            if prev is not None and x > prev:
                raise ValueError("prefix must be weakly decreasing")
            prev = x
        rest = n - sum(head)
        if rest < 0:
            raise ValueError(f"prefix sums to more than n={n}")
        for tail in partition_tuples(rest, head[-1]):
            parts = head + tail
            yield Partition(parts, n, len(parts))
    else:
        for parts in partition_tuples(n):
            yield Partition(parts, n, len(parts))


@lru_cache(maxsize=None)
def count_partitions_bounded(n: int, max_part: int) -> int:
    """Partitions of n with all parts <= max_part.

    Independent of the pentagonal recurrence; count_partitions_bounded(n, n)
    must equal count_partitions(n), which the tests exploit as a
    cross-check between the two counting routes.
    """
    if n < 0 or max_part < 0:
        raise ValueError("arguments must be nonnegative")
    if n == 0:
        return 1
    if max_part == 0:
        return 0
    if max_part > n:
        max_part = n
    return count_partitions_bounded(n, max_part - 1) + count_partitions_bounded(
        n - max_part, max_part
    )


def unrank_partition(n: int, index: int) -> Partition:
    """The index-th partition of n in descending lexicographic order."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    total = count_partitions(n)
    if not 0 <= index < total:
        raise IndexError(f"index {index} out of range for {total} partitions")
    parts: list[int] = []
    remaining = n
    bound = n
    while remaining:
        for first in range(min(remaining, bound), 0, -1):
            block = count_partitions_bounded(remaining - first, first)
            if index < block:
                parts.append(first)
                bound = first
                remaining -= first
                break
            index -= block
    t = tuple(parts)
    return Partition(t, n, len(t))


def random_partition(n: int, rng) -> Partition:
    """Uniform random partition of n drawn from a seeded random.Random."""
    return unrank_partition(n, rng.randrange(count_partitions(n)))
