"""Run-length integer multisets and their canonical text encoding.

A multiset is stored as (value, multiplicity) pairs with values strictly
decreasing, so two multisets are equal exactly when their entry tuples are.
The canonical text form joins "value^multiplicity" terms with "+", values
descending, e.g. "8^1+4^2+2^2+1^1"; the empty multiset is written "-".
These strings are the CLI interchange format and the byte subject of the
64-bit fingerprints used by the injectivity sweeps.
"""

from __future__ import annotations

import hashlib
import re
from collections import Counter
from dataclasses import dataclass
from itertools import repeat
from typing import Callable, Iterable, Iterator, Mapping

EMPTY_MULTISET_TEXT = "-"

_TERM_RE = re.compile(r"(-?\d+)(?:\^(\d+))?")


@dataclass(frozen=True, eq=False)
class IntMultiset:
    """Multiset of integers in canonical run-length form."""

    entries: tuple[tuple[int, int], ...]
    total_count: int

    def __post_init__(self) -> None:
        prev = None
        total = 0
        for value, mult in self.entries:
            if mult < 1:
                raise ValueError(f"multiplicity must be positive, got {value}^{mult}")
            if prev is not None and value >= prev:
                raise ValueError("entry values must be strictly decreasing")
            prev = value
            total += mult
        if total != self.total_count:
            raise ValueError(
                f"total_count {self.total_count} != sum of multiplicities {total}"
            )

    @classmethod
    def from_counts(cls, counts: Mapping[int, int]) -> "IntMultiset":
        entries = tuple(sorted(counts.items(), reverse=True))
        return cls(entries, sum(m for _, m in entries))

    @classmethod
    def from_values(cls, values: Iterable[int]) -> "IntMultiset":
        return cls.from_counts(Counter(values))

    # Equality is by content, not by concrete class: a product multiset and a
    # plain integer multiset with the same entries are the same multiset.
    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntMultiset):
            return self.entries == other.entries
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.entries)

    def __iter__(self) -> Iterator[int]:
        for value, mult in self.entries:
            yield from repeat(value, mult)

    def __len__(self) -> int:
        return self.total_count

    @property
    def max_value(self) -> int:
        if not self.entries:
            raise ValueError("empty multiset has no maximum")
        return self.entries[0][0]

    @property
    def min_value(self) -> int:
        if not self.entries:
            raise ValueError("empty multiset has no minimum")
        return self.entries[-1][0]

    @property
    def is_set(self) -> bool:
        """True when no value repeats."""
        return all(mult == 1 for _, mult in self.entries)

    def counts(self) -> dict[int, int]:
        return dict(self.entries)

    @property
    def text(self) -> str:
        return entries_text(self.entries)

    def __str__(self) -> str:
        return self.text


class ProductMultiset(IntMultiset):
    """Multiset of pairwise (or k-fold) part products; values are >= 1."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if self.entries and self.entries[-1][0] < 1:
            raise ValueError("product values must be positive")


def entries_text(entries: Iterable[tuple[int, int]]) -> str:
    """Canonical text of run-length entries ("-" when empty)."""
    body = "+".join(f"{v}^{m}" for v, m in entries)
    return body if body else EMPTY_MULTISET_TEXT


def parse_multiset(text: str, cls: type[IntMultiset] = IntMultiset) -> IntMultiset:
    """Parse multiset text into `cls`.

    Accepts loose input (unsorted terms, repeated values, "^1" omitted) and
    canonicalizes; canonical text round-trips unchanged.
    """
    body = text.strip()
    if body == EMPTY_MULTISET_TEXT:
        return cls((), 0)
    counts: Counter[int] = Counter()
    for term in body.split("+"):
        term = term.strip()
        match = _TERM_RE.fullmatch(term)
        if match is None:
            raise ValueError(f"bad multiset term {term!r} in {text!r}")
        value = int(match.group(1))
        mult = int(match.group(2)) if match.group(2) else 1
        if mult < 1:
            raise ValueError(f"multiplicity must be positive in {term!r}")
        counts[value] += mult
    return cls.from_counts(counts)


def pairwise_combine(
    entries: tuple[tuple[int, int], ...], op: Callable[[int, int], int]
) -> tuple[tuple[int, int], ...]:
    """Run-length entries of {op(x_i, x_j) : i < j} over the encoded multiset.

    Same-value pairs contribute op(v, v) with multiplicity C(m, 2); cross
    pairs contribute with the product of multiplicities.
    """
    out: dict[int, int] = {}
    for i, (v, m) in enumerate(entries):
        if m > 1:
            key = op(v, v)
            out[key] = out.get(key, 0) + m * (m - 1) // 2
        for j in range(i + 1, len(entries)):
            w, mw = entries[j]
            key = op(v, w)
            out[key] = out.get(key, 0) + m * mw
    return tuple(sorted(out.items(), reverse=True))


def pairwise_products(
    entries: tuple[tuple[int, int], ...]
) -> tuple[tuple[int, int], ...]:
    """pairwise_combine specialized to multiplication (the sweep hot path)."""
    out: dict[int, int] = {}
    get = out.get
    n = len(entries)
    for i in range(n):
        v, m = entries[i]
        if m > 1:
            key = v * v
            out[key] = get(key, 0) + m * (m - 1) // 2
        for j in range(i + 1, n):
            w, mw = entries[j]
            key = v * w
            out[key] = get(key, 0) + m * mw
    return tuple(sorted(out.items(), reverse=True))


def fingerprint64(data: bytes) -> int:
    """Deterministic 64-bit fingerprint of a canonical multiset encoding."""
    return int.from_bytes(hashlib.blake2b(data, digest_size=8).digest(), "big")
