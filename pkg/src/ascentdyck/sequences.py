"""Ascent sequences whose nonzero entries are weakly increasing.

An ascent sequence starts with 0 and never exceeds one more than the
number of ascents (consecutive strictly rising pairs) seen so far.  The
sequences handled here additionally keep their nonzero entries weakly
increasing, which is the same as containing no three entries ordered
like 0,2,1.  That family is counted by the Catalan numbers and is the
left-hand side of the bijection in :mod:`ascentdyck.bijection`.

Positions are 1-based everywhere in reports and error messages.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import (
    AscentBoundViolated,
    EmptyInput,
    FirstEntryNonzero,
    InputError,
    NegativeEntry,
    SizeZero,
)


@dataclass(frozen=True)
class AscentSequence:
    """A validated ascent sequence.  Construction rejects invalid input."""

    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(self.entries)
        object.__setattr__(self, "entries", entries)
        if not entries:
            raise EmptyInput("an ascent sequence has at least one entry")
        if entries[0] != 0:
            raise FirstEntryNonzero(
                f"first entry must be 0, got {entries[0]} at position 1"
            )
        ascents = 0
        for i in range(1, len(entries)):
            u = entries[i]
            if u < 0:
                raise NegativeEntry(position=i + 1, entry=u)
            if u > ascents + 1:
                raise AscentBoundViolated(position=i + 1, entry=u, bound=ascents + 1)
            if entries[i - 1] < u:
                ascents += 1

    def __len__(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return ",".join(map(str, self.entries))


def validate_ascent_sequence(raw: Iterable[int]) -> AscentSequence:
    """Check the two defining conditions and wrap the entries."""
    return AscentSequence(tuple(raw))


def parse_sequence(text: str) -> AscentSequence:
    """Parse ``0,1,0,2`` style text; a bare digit string like ``0102`` is
    also accepted (single-digit entries only)."""
    t = text.strip()
    if not t:
        raise EmptyInput("empty sequence text")
    if "," in t:
        entries = []
        for field in t.split(","):
            field = field.strip()
            try:
                entries.append(int(field))
            except ValueError:
                raise InputError(
                    f"cannot read {field!r} as an integer entry"
                ) from None
        return AscentSequence(tuple(entries))
    if not t.isdigit():
        raise InputError(
            f"cannot read {t!r}: use comma-separated entries or a digit string"
        )
    return AscentSequence(tuple(int(c) for c in t))


def ascent_count(seq: AscentSequence) -> int:
    """Number of positions i with entries[i] < entries[i+1]."""
    e = seq.entries
    return sum(1 for i in range(len(e) - 1) if e[i] < e[i + 1])


def is_021_avoiding(seq: AscentSequence) -> bool:
    """True when the nonzero entries are weakly increasing."""
    return _first_021_violation(seq.entries) is None


def _first_021_violation(entries: Sequence[int]) -> int | None:
    # 1-based position of the first nonzero entry below an earlier nonzero one
    prev = 0
    for i, u in enumerate(entries):
        if u:
            if u < prev:
                return i + 1
            prev = u
    return None


def contains_pattern_021_bruteforce(entries: Sequence[int]) -> bool:
    """Exhaustive search for positions i<j<k with entries[i] < entries[k] < entries[j].

    Deliberately the naive cubic scan: this is the oracle the streamlined
    membership test is cross-checked against, so it must stay independent
    of it.  Accepts any integer sequence.
    """
    xs = list(entries)
    n = len(xs)
    for i in range(n - 2):
        for j in range(i + 1, n - 1):
            if xs[j] <= xs[i]:
                continue
            for k in range(j + 1, n):
                if xs[i] < xs[k] < xs[j]:
                    return True
    return False


@dataclass(frozen=True)
class AllowableList:
    """The ordered menu of nonzero values the marked-peak construction step
    can consume, together with the prefix data it was derived from.

    ``values`` is a contiguous run of positive integers (possibly empty),
    bounded above by ``ascent_count``.
    """

    values: tuple[int, ...]
    max_entry: int
    ascent_count: int

    def __post_init__(self):
        for idx, v in enumerate(self.values):
            if v <= 0 or v > self.ascent_count:
                raise InputError(f"allowable value {v} out of range")
            if idx and v != self.values[idx - 1] + 1:
                raise InputError("allowable values must be contiguous")

    def __len__(self) -> int:
        return len(self.values)

    def position_of(self, value: int) -> int:
        """1-based position of ``value`` in the menu."""
        return self.values.index(value) + 1


def _prefix_state(entries: Sequence[int]) -> tuple[int, int, int]:
    # (ascents, max entry, last entry) of a valid prefix
    a = sum(1 for i in range(len(entries) - 1) if entries[i] < entries[i + 1])
    return a, max(entries), entries[-1]


def allowable_nonzero_values(prefix: AscentSequence) -> AllowableList:
    """Values strictly between "repeat the last nonzero entry" and "top out
    at one more than the ascent count", i.e. the menu consumed by the
    key-downstep case of the construction.

    With a = ascents and m = max entry of the prefix, the menu is
    [max(m,1), a] after a zero entry and [m+1, a] after a nonzero one
    (a nonzero last entry always equals m here).  Empty when the lower
    bound exceeds a.
    """
    a, m, last = _prefix_state(prefix.entries)
    lo = max(m, 1) if last == 0 else m + 1
    return AllowableList(tuple(range(lo, a + 1)), max_entry=m, ascent_count=a)


def allowable_next_values(prefix: AscentSequence) -> list[int]:
    """Exactly the values v for which prefix + (v,) is again a valid
    sequence of this family, in ascending order.

    Besides 0, the nonzero menu and the new-maximum value a+1, this always
    includes a repeat of the last entry when that entry is nonzero.
    """
    a, _, last = _prefix_state(prefix.entries)
    out = {0, a + 1}
    if last > 0:
        out.add(last)
    out.update(allowable_nonzero_values(prefix).values)
    return sorted(out)


def _iter_021_entries(n: int) -> Iterator[tuple[int, ...]]:
    # lexicographic DFS; shares prefix state instead of revalidating
    buf = [0] * n

    def rec(i: int, a: int, m: int, last: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            yield tuple(buf)
            return
        buf[i] = 0
        yield from rec(i + 1, a, m, 0)
        lo = max(m, 1) if last == 0 else m
        for v in range(lo, a + 2):
            buf[i] = v
            yield from rec(i + 1, a + (last < v), max(m, v), v)

    return rec(1, 0, 0, 0)


def enumerate_021_avoiding(n: int) -> Iterator[AscentSequence]:
    """Yield every 021-avoiding ascent sequence of length n exactly once,
    in lexicographic order.  There are Catalan(n) of them."""
    if n < 1:
        raise SizeZero("sequence length must be at least 1")
    for entries in _iter_021_entries(n):
        yield AscentSequence(entries)


@dataclass(frozen=True)
class SequenceStats:
    """The five sequence-side statistics mirrored by the path side.

    ``terminal_zeros`` of the all-zero sequence of length n is defined as
    n - 1, and ``eq_run_before_last_nonzero`` is None exactly when there
    is no nonzero entry.
    """

    initial_zeros: int
    terminal_zeros: int
    ascents: int
    descents: int
    eq_run_before_last_nonzero: int | None


def _sequence_stats_raw(entries: Sequence[int]) -> tuple[int, int, int, int, int | None]:
    n = len(entries)
    initial = 0
    while initial < n and entries[initial] == 0:
        initial += 1
    ascents = descents = 0
    for i in range(n - 1):
        if entries[i] < entries[i + 1]:
            ascents += 1
        elif entries[i] > entries[i + 1]:
            descents += 1
    if initial == n:
        # all-zero sequence: terminal zeros read as n-1, no nonzero entry
        return n, n - 1, ascents, descents, None
    terminal = 0
    while entries[n - 1 - terminal] == 0:
        terminal += 1
    k = n - 1
    while entries[k] == 0:
        k -= 1
    run = 0
    while k - 1 - run >= 0 and entries[k - 1 - run] == entries[k]:
        run += 1
    return initial, terminal, ascents, descents, run


def sequence_statistics(seq: AscentSequence) -> SequenceStats:
    """Count initial and terminal zeros, ascents, descents, and the run of
    entries equal to (and immediately left of) the last nonzero entry."""
    return SequenceStats(*_sequence_stats_raw(seq.entries))
