"""Distinctness and multiplicity conditions on shift-sequence differences.

Three per-shift difference families over a finite length-v shift vector e:

* A-range: e_j - e_(j+s) for 0 <= j < v-s (no extension). Condition A asks
  for all v-s values distinct, at every shift s in [1, v).
* B-extended: e_j - ext(e)_(j+s) for 0 <= j < v, using the +1-twist
  extension. Condition B allows each value at most twice, at every s.
* COND2: the same v differences written as two explicit ranges (two
  equivalent forms). The completeness condition asks the multiset to be all
  of Z_v at every s; its sum is always -s mod v, which rules the condition
  out for v > 2.

All differences are canonical residues in [0, v). ``check_*`` functions
return full diagnostics; ``*_holds`` functions are fast boolean forms of the
same predicates used by the search module, kept separate and cross-tested.
"""

from __future__ import annotations

from dataclasses import dataclass

from .interleaving import INFINITY, ShiftSequence, extended_entry


@dataclass(frozen=True)
class DifferenceProfile:
    """One shift's difference multiset, in evaluation order."""

    v: int
    s: int
    mode: str
    values: tuple[int, ...]
    multiplicity: tuple[tuple[int, int], ...]

    @property
    def multiplicity_map(self) -> dict[int, int]:
        return dict(self.multiplicity)

    @property
    def distinct_count(self) -> int:
        return len(self.multiplicity)

    @property
    def max_multiplicity(self) -> int:
        return max(count for _, count in self.multiplicity)


def _profile(v: int, s: int, mode: str, values: list[int]) -> DifferenceProfile:
    counts: dict[int, int] = {}
    for d in values:
        counts[d] = counts.get(d, 0) + 1
    pairs = tuple(sorted(counts.items()))
    return DifferenceProfile(v, s, mode, tuple(values), pairs)


def _require_finite(e: ShiftSequence) -> None:
    if not e.is_finite:
        raise ValueError("shift vector must be finite (no INFINITY entries)")


def _require_shift(s: int, v: int) -> None:
    if not 1 <= s < v:
        raise ValueError(f"shift s must lie in [1, {v}), got {s}")


def differences_A(e: ShiftSequence, s: int) -> DifferenceProfile:
    """Unextended differences e_j - e_(j+s), j in [0, v-s)."""
    _require_finite(e)
    v = e.v
    _require_shift(s, v)
    ent = e.entries
    values = [(ent[j] - ent[j + s]) % v for j in range(v - s)]
    return _profile(v, s, "A-range", values)


def differences_B(e: ShiftSequence, s: int) -> DifferenceProfile:
    """Extended differences e_j - ext(e)_(j+s), j in [0, v)."""
    _require_finite(e)
    v = e.v
    _require_shift(s, v)
    ent = e.entries
    values = [(ent[j] - extended_entry(e, j + s)) % v for j in range(v)]
    return _profile(v, s, "B-extended", values)


def differences_open(e: ShiftSequence, s: int, form: int = 2) -> DifferenceProfile:
    """The completeness condition's v differences, in either written form.

    Form 1 lists the unextended range then the wrapped terms
    e_(v-s+j) - e_j - 1; form 2 indexes the same terms as
    e_k - e_(k+s-v) - 1 for k in [v-s, v). The multisets always agree.
    """
    _require_finite(e)
    v = e.v
    _require_shift(s, v)
    if form not in (1, 2):
        raise ValueError(f"form must be 1 or 2, got {form}")
    ent = e.entries
    head = [(ent[j] - ent[j + s]) % v for j in range(v - s)]
    if form == 1:
        tail = [(ent[v - s + j] - ent[j] - 1) % v for j in range(s)]
    else:
        tail = [(ent[k] - ent[k + s - v] - 1) % v for k in range(v - s, v)]
    return _profile(v, s, "COND2", head + tail)


@dataclass(frozen=True)
class ShiftCheck:
    """One shift's verdict: observed statistic against its requirement."""

    s: int
    passed: bool
    observed: int
    required: int
    profile: DifferenceProfile


@dataclass(frozen=True)
class ConditionReport:
    """Full verdict of one condition over every shift s in [1, v)."""

    condition: str
    verdict: bool
    checks: tuple[ShiftCheck, ...]
    first_failure_s: int | None


def _report(condition: str, checks: list[ShiftCheck]) -> ConditionReport:
    failures = [c.s for c in checks if not c.passed]
    return ConditionReport(
        condition,
        not failures,
        tuple(checks),
        failures[0] if failures else None,
    )


def check_condition_A(e: ShiftSequence) -> ConditionReport:
    """All unextended differences distinct at every shift (observed = distinct count)."""
    _require_finite(e)
    v = e.v
    checks = []
    for s in range(1, v):
        prof = differences_A(e, s)
        observed = prof.distinct_count
        checks.append(ShiftCheck(s, observed == v - s, observed, v - s, prof))
    return _report("A", checks)


def check_condition_B(e: ShiftSequence) -> ConditionReport:
    """Extended differences repeat at most twice at every shift (observed = max multiplicity)."""
    _require_finite(e)
    v = e.v
    checks = []
    for s in range(1, v):
        prof = differences_B(e, s)
        observed = prof.max_multiplicity
        checks.append(ShiftCheck(s, observed <= 2, observed, 2, prof))
    return _report("B", checks)


def check_condition_open(e: ShiftSequence) -> ConditionReport:
    """The combined differences cover Z_v at every shift (observed = distinct count)."""
    _require_finite(e)
    v = e.v
    checks = []
    for s in range(1, v):
        prof = differences_open(e, s, form=2)
        observed = prof.distinct_count
        checks.append(ShiftCheck(s, observed == v, observed, v, prof))
    return _report("OPEN", checks)


def cond2_sum_residue(e: ShiftSequence, s: int) -> int:
    """Sum of the completeness condition's differences, mod v.

    Computed from the actual multiset; the telescoping identity makes it
    (-s) mod v for every finite e, which is what forces non-existence for
    v > 2.
    """
    prof = differences_open(e, s, form=2)
    return sum(prof.values) % e.v


def _entries_of(e) -> tuple:
    entries = e.entries if isinstance(e, ShiftSequence) else tuple(e)
    if INFINITY in entries:
        raise ValueError("shift vector must be finite (no INFINITY entries)")
    return entries


def condition_a_holds(e) -> bool:
    """Fast boolean form of check_condition_A (accepts raw entry tuples)."""
    ent = _entries_of(e)
    v = len(ent)
    for s in range(1, v):
        seen = 0
        for j in range(v - s):
            bit = 1 << ((ent[j] - ent[j + s]) % v)
            if seen & bit:
                return False
            seen |= bit
    return True


def condition_b_holds(e) -> bool:
    """Fast boolean form of check_condition_B (accepts raw entry tuples)."""
    ent = _entries_of(e)
    v = len(ent)
    for s in range(1, v):
        counts = [0] * v
        for j in range(v - s):
            d = (ent[j] - ent[j + s]) % v
            counts[d] += 1
            if counts[d] > 2:
                return False
        for k in range(v - s, v):
            d = (ent[k] - ent[k + s - v] - 1) % v
            counts[d] += 1
            if counts[d] > 2:
                return False
    return True


def condition_open_holds(e) -> bool:
    """Fast boolean form of check_condition_open (accepts raw entry tuples)."""
    ent = _entries_of(e)
    v = len(ent)
    for s in range(1, v):
        seen = 0
        for j in range(v - s):
            bit = 1 << ((ent[j] - ent[j + s]) % v)
            if seen & bit:
                return False
            seen |= bit
        for k in range(v - s, v):
            bit = 1 << ((ent[k] - ent[k + s - v] - 1) % v)
            if seen & bit:
                return False
            seen |= bit
    return True
