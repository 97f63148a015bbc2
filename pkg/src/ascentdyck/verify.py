"""Exhaustive desk-scale verification of the whole construction.

Both families are finite at every size, so nothing here is sampled: the
checks sweep every object up to a size cap (12 by default, 14 in
extended mode) and report every witness of a violation.  All checks are
deterministic and idempotent; each one owns an independent sweep so they
can be run, repeated, or split in any order.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from functools import lru_cache

from .bijection import (
    _assert_step_shape,
    _classify,
    _forward_entries,
    _forward_step_core,
    _inverse_entries,
)
from .errors import CapExceeded, InputError, InternalInvariant
from .paths import (
    UP,
    _STEP_TO_BIT,
    _is_valid_steps,
    _iter_dyck_steps,
    _path_stats_raw,
    enumerate_dyck_paths,
)
from .sequences import (
    _first_021_violation,
    _sequence_stats_raw,
    contains_pattern_021_bruteforce,
    enumerate_021_avoiding,
)

DEFAULT_CAP = 12
EXTENDED_CAP = 14

_MAX_WITNESSES = 100


@lru_cache(maxsize=None)
def _catalan(n: int) -> int:
    if n == 0:
        return 1
    return sum(_catalan(i) * _catalan(n - 1 - i) for i in range(n))


def catalan(n: int) -> int:
    """Exact Catalan number, by the convolution recurrence."""
    if n < 0:
        raise InputError("catalan is defined for n >= 0")
    return _catalan(n)


@dataclass(frozen=True)
class Failure:
    kind: str
    witness: str
    detail: str = ""


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of one check at one size.  ``failures`` keeps at most the
    first 100 witnesses; it is empty exactly when everything passed."""

    check: str
    n: int
    sequences_checked: int
    paths_checked: int
    failures: tuple[Failure, ...]
    equidistribution: dict[str, bool] | None
    elapsed: float

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "n": self.n,
            "sequences_checked": self.sequences_checked,
            "paths_checked": self.paths_checked,
            "passed": self.passed,
            "failures": [
                {"kind": f.kind, "witness": f.witness, "detail": f.detail}
                for f in self.failures
            ],
            "equidistribution": self.equidistribution,
            "elapsed_seconds": round(self.elapsed, 6),
        }

    def summary(self) -> str:
        lines = [
            f"{self.check}: n={self.n} sequences={self.sequences_checked} "
            f"paths={self.paths_checked} failures={len(self.failures)} "
            f"elapsed={self.elapsed:.2f}s [{'PASS' if self.passed else 'FAIL'}]"
        ]
        if self.equidistribution is not None:
            for name, ok in self.equidistribution.items():
                lines.append(f"  statistic {name}: {'ok' if ok else 'MISMATCH'}")
        for f in self.failures[:10]:
            lines.append(f"  {f.kind}: {f.witness}  {f.detail}")
        return "\n".join(lines)


def _require_size(n: int, cap: int) -> None:
    if not 1 <= n <= cap:
        raise CapExceeded(f"size {n} outside 1..{cap}")


class _Witnesses:
    # bounded failure collector
    def __init__(self):
        self.items: list[Failure] = []
        self.total = 0

    def add(self, kind: str, witness: str, detail: str = "") -> None:
        self.total += 1
        if len(self.items) < _MAX_WITNESSES:
            self.items.append(Failure(kind, witness, detail))

    def freeze(self) -> tuple[Failure, ...]:
        return tuple(self.items)


def _fold_family(n: int, visit) -> int:
    """Depth-first over every 021-avoiding entry tuple of length n with the
    image path folded alongside; calls visit(entries_buffer, path) at every
    leaf and returns the leaf count.  The buffer is reused in place."""
    buf = [0] * n
    leaves = 0

    def rec(i: int, path: str, a: int, m: int, last: int) -> None:
        nonlocal leaves
        if i == n:
            leaves += 1
            visit(buf, path)
            return
        buf[i] = 0
        rec(i + 1, _forward_step_core(path, 0, a, m, last)[0], a, m, 0)
        lo = max(m, 1) if last == 0 else m
        for v in range(lo, a + 2):
            buf[i] = v
            rec(i + 1, _forward_step_core(path, v, a, m, last)[0],
                a + (last < v), max(m, v), v)

    rec(1, "UD", 0, 0, 0)
    return leaves


def check_counts(n: int, cap: int = DEFAULT_CAP) -> VerifyReport:
    """Both enumerators against the Catalan recurrence."""
    _require_size(n, cap)
    t0 = time.perf_counter()
    bad = _Witnesses()
    expected = catalan(n)
    nseq = sum(1 for _ in enumerate_021_avoiding(n))
    npath = sum(1 for _ in enumerate_dyck_paths(n))
    if nseq != expected:
        bad.add("sequence-count", str(n), f"got {nseq}, expected {expected}")
    if npath != expected:
        bad.add("path-count", str(n), f"got {npath}, expected {expected}")
    return VerifyReport(
        check="counts", n=n, sequences_checked=nseq, paths_checked=npath,
        failures=bad.freeze(), equidistribution=None,
        elapsed=time.perf_counter() - t0,
    )


def check_roundtrip(n: int, cap: int = DEFAULT_CAP) -> VerifyReport:
    """inverse(forward(s)) = s over all sequences and
    forward(inverse(p)) = p over all paths."""
    _require_size(n, cap)
    t0 = time.perf_counter()
    bad = _Witnesses()

    def visit(buf, path):
        back = _inverse_entries(path)
        if back != buf:
            bad.add("sequence-roundtrip", ",".join(map(str, buf)),
                    f"via {path} came back as {','.join(map(str, back))}")

    nseq = _fold_family(n, visit)
    npath = 0
    for steps in _iter_dyck_steps(n):
        npath += 1
        entries = _inverse_entries(steps)
        again = _forward_entries(entries)
        if again != steps:
            bad.add("path-roundtrip", steps,
                    f"via {','.join(map(str, entries))} came back as {again}")
    return VerifyReport(
        check="roundtrip", n=n, sequences_checked=nseq, paths_checked=npath,
        failures=bad.freeze(), equidistribution=None,
        elapsed=time.perf_counter() - t0,
    )


def check_bijectivity(n: int, cap: int = DEFAULT_CAP) -> VerifyReport:
    """The forward image is valid, duplicate-free, and by counting must
    therefore cover every path of the size."""
    _require_size(n, cap)
    t0 = time.perf_counter()
    bad = _Witnesses()
    expected = catalan(n)
    seen = bytearray(1 if n < 2 else 1 << (2 * n - 3))
    distinct = 0

    def visit(buf, path):
        nonlocal distinct
        if len(path) != 2 * n or not _is_valid_steps(path):
            bad.add("invalid-image", ",".join(map(str, buf)), f"image {path}")
            return
        code = int(path.translate(_STEP_TO_BIT), 2)
        byte, bit = code >> 3, 1 << (code & 7)
        if seen[byte] & bit:
            bad.add("duplicate-image", ",".join(map(str, buf)), f"image {path}")
        else:
            seen[byte] |= bit
            distinct += 1

    nseq = _fold_family(n, visit)
    if distinct != expected:
        bad.add("coverage", str(n),
                f"{distinct} distinct images, expected {expected}")
    return VerifyReport(
        check="bijectivity", n=n, sequences_checked=nseq, paths_checked=distinct,
        failures=bad.freeze(), equidistribution=None,
        elapsed=time.perf_counter() - t0,
    )


def check_invariants(n: int, cap: int = DEFAULT_CAP) -> VerifyReport:
    """Per-step structural guarantees of the forward construction, plus
    totality and mutual exclusivity of the inverse case split."""
    _require_size(n, cap)
    t0 = time.perf_counter()
    bad = _Witnesses()
    buf = [0] * n
    leaves = 0

    def rec(i: int, path: str, a: int, m: int, last: int) -> None:
        nonlocal leaves
        if i == n:
            leaves += 1
            return
        lo = max(m, 1) if last == 0 else m
        candidates = [0] + list(range(lo, a + 2))
        for v in candidates:
            buf[i] = v
            witness = ",".join(map(str, buf[: i + 1]))
            try:
                # the core itself asserts the menu/key-downstep length match
                # and that the menu case never reaches a pyramid
                stepped, case_id, _ = _forward_step_core(path, v, a, m, last)
                _assert_step_shape(stepped, case_id)
            except InternalInvariant as exc:
                bad.add("step-invariant", witness, str(exc))
                continue
            rec(i + 1, stepped, a + (last < v), max(m, v), v)

    rec(1, "UD", 0, 0, 0)

    npath = 0
    if n >= 2:
        for steps in _iter_dyck_steps(n):
            npath += 1
            r = steps.rfind(UP)
            long_last = r >= 1 and steps[r - 1] == UP
            elevated = _is_elevated_steps(steps)
            ends_peak = steps.endswith("UD")
            truth = [
                long_last,
                not long_last and elevated,
                not long_last and ends_peak,
                not long_last and not elevated and not ends_peak,
            ]
            if sum(truth) != 1:
                bad.add("case-split", steps, f"conditions {truth}")
            elif _classify(steps) != truth.index(True) + 1:
                bad.add("case-split", steps,
                        f"classified {_classify(steps)}, conditions say "
                        f"{truth.index(True) + 1}")
    return VerifyReport(
        check="invariants", n=n, sequences_checked=leaves, paths_checked=npath,
        failures=bad.freeze(), equidistribution=None,
        elapsed=time.perf_counter() - t0,
    )


def _is_elevated_steps(steps: str) -> bool:
    bal = 0
    for c in steps[:-1]:
        bal += 1 if c == UP else -1
        if bal == 0:
            return False
    return True


_STAT_NAMES = (
    "initial_zeros/first_descent_length",
    "terminal_zeros/last_ascent_length-1",
    "ascents/valleys",
    "descents/duu_count",
    "eq_run/degree_of_elevation",
)


def check_statistics(n: int, cap: int = DEFAULT_CAP) -> VerifyReport:
    """The five statistic equalities between each sequence and its image,
    including the all-zero/pyramid special cases."""
    _require_size(n, cap)
    t0 = time.perf_counter()
    bad = _Witnesses()
    ok = [True] * 5

    def visit(buf, path):
        s = _sequence_stats_raw(buf)
        p = _path_stats_raw(path)
        pairs = (
            (s[0], p[0]),
            (s[1], p[1] - 1),
            (s[2], p[2]),
            (s[3], p[3]),
            (s[4], p[4]),
        )
        for idx, (left, right) in enumerate(pairs):
            if left != right:
                ok[idx] = False
                bad.add("statistic", ",".join(map(str, buf)),
                        f"{_STAT_NAMES[idx]}: {left} != {right} on {path}")

    nseq = _fold_family(n, visit)
    return VerifyReport(
        check="statistics", n=n, sequences_checked=nseq, paths_checked=nseq,
        failures=bad.freeze(),
        equidistribution=dict(zip(_STAT_NAMES, ok)),
        elapsed=time.perf_counter() - t0,
    )


def check_characterization(max_len: int = 10, max_val: int | None = 6) -> VerifyReport:
    """Over every valid ascent sequence within the bounds, the streamlined
    membership test must agree with the negated brute-force triple scan.
    ``max_val`` of None bounds entries by the ascent condition alone."""
    if not 1 <= max_len <= 12:
        raise CapExceeded(f"length bound {max_len} outside 1..12")
    t0 = time.perf_counter()
    bad = _Witnesses()
    buf = [0] * max_len
    checked = 0

    def probe(i: int) -> None:
        nonlocal checked
        checked += 1
        entries = buf[:i]
        fast = _first_021_violation(entries) is None
        brute = contains_pattern_021_bruteforce(entries)
        if fast != (not brute):
            bad.add("characterization", ",".join(map(str, entries)),
                    f"membership test {fast}, brute-force pattern find {brute}")

    def rec(i: int, a: int) -> None:
        probe(i)
        if i == max_len:
            return
        top = a + 1 if max_val is None else min(a + 1, max_val)
        for v in range(top + 1):
            buf[i] = v
            rec(i + 1, a + (buf[i - 1] < v))

    # every prefix of the search tree is itself a valid sequence, so each
    # node is probed exactly once
    buf[0] = 0
    rec(1, 0)
    return VerifyReport(
        check="characterization", n=max_len, sequences_checked=checked,
        paths_checked=0, failures=bad.freeze(), equidistribution=None,
        elapsed=time.perf_counter() - t0,
    )
