"""Brute-force construction of the first generations by literal cuts.

The `dyadic` module is fast but clever; this one is the slow, obviously
correct realization used to cross-check it.  Numbers are actual cuts
(pairs of id-sets partitioning everything older), built generation by
generation, and the total order is the amalgam of the previous order
with the new cuts.  In a finite total order every cut is a prefix/suffix
split, so generation n contributes exactly 2^n new numbers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dyadic import Dyadic, simplest_in_interval
from .errors import LimitExceededError

DEFAULT_GENESIS_CAP = 12


@dataclass(frozen=True)
class GenNumber:
    """A cut (left | right) over all ids of strictly earlier generations."""

    id: int
    generation: int
    left: frozenset[int]
    right: frozenset[int]


class Universe:
    """Generations 0..max_generation with their amalgamated total order.

    Immutable once built; `order` lists ids ascending by value.
    """

    def __init__(self) -> None:
        self.numbers: list[GenNumber] = []
        self.by_generation: list[list[int]] = []
        self.order: list[int] = []
        self._rank: dict[int, int] = {}
        self.max_generation = -1

    def rank(self, i: int) -> int:
        return self._rank[i]

    def leq(self, i: int, j: int) -> bool:
        return self._rank[i] <= self._rank[j]


def build_universe(n: int, cap: int | None = None) -> Universe:
    """Construct generations 0..n; the cut count doubles per step."""
    cap = DEFAULT_GENESIS_CAP if cap is None else cap
    if n > cap:
        raise LimitExceededError(f"generation {n} exceeds cap {cap}")
    u = Universe()
    for gen in range(n + 1):
        prev = u.order  # sorted ids of everything older
        fresh = []
        for k in range(len(prev) + 1):
            num = GenNumber(len(u.numbers), gen,
                            frozenset(prev[:k]), frozenset(prev[k:]))
            u.numbers.append(num)
            fresh.append(num.id)
        # amalgam: the cut splitting after k old elements sits between them
        merged = [fresh[0]]
        for k, old in enumerate(prev):
            merged.append(old)
            merged.append(fresh[k + 1])
        u.order = merged
        u._rank = {i: r for r, i in enumerate(merged)}
        u.by_generation.append(fresh)
        u.max_generation = gen
    return u


def cut_leq(c1: GenNumber, c2: GenNumber) -> bool:
    """Order between cuts over the same ground set: c1 <= c2 iff left(c1) is a subset."""
    if c1.generation != c2.generation:
        raise ValueError("cut_leq compares cuts of the same generation only")
    return c1.left <= c2.left


def cut_lt(c1: GenNumber, c2: GenNumber) -> bool:
    if c1.generation != c2.generation:
        raise ValueError("cut_lt compares cuts of the same generation only")
    return c1.left < c2.left


def amalgam_leq(x: GenNumber, c: GenNumber) -> bool:
    """True iff x <= c, for x older than the cut c; otherwise c <= x holds."""
    if x.generation >= c.generation:
        raise ValueError("amalgam_leq needs the first argument strictly older")
    return x.id in c.left


def map_to_dyadic(u: Universe) -> dict[int, Dyadic]:
    """Identify each cut with its value: the oldest dyadic inside its gap.

    The mapping is a generation-preserving order isomorphism onto the
    dyadics of birthday <= max_generation.
    """
    values: dict[int, Dyadic] = {}
    for num in u.numbers:  # creation order, so options are already mapped
        lo = max((values[i] for i in num.left), default=None)
        hi = min((values[i] for i in num.right), default=None)
        values[num.id] = simplest_in_interval(lo, hi)
    return values


def dump(u: Universe) -> list[str]:
    """One line per number: id, generation, value, left-ids, right-ids.

    Id lists are comma-joined in value order; "-" marks an empty side.
    """
    values = map_to_dyadic(u)
    lines = []
    for num in u.numbers:
        left = ",".join(str(i) for i in sorted(num.left, key=u.rank)) or "-"
        right = ",".join(str(i) for i in sorted(num.right, key=u.rank)) or "-"
        lines.append(f"{num.id}\t{num.generation}\t{values[num.id]}\t{left}\t{right}")
    return lines
