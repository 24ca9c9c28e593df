"""The worked-example verification suite behind the ``reproduce`` command.

Re-derives every headline number of the library's worked example from
scratch: the (49, 8, 17) signal set, the condition verdicts on its shift
vector, the per-column correlation identity against direct correlation, the
diagonal-phase closed form, the magnitude bound, the delta bound for
multiplicity-condition vectors, the implication between the two conditions,
the completeness-condition census, and the telescoping sum identity.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .conditions import (
    check_condition_A,
    check_condition_B,
    check_condition_open,
    cond2_sum_residue,
)
from .correlation import autocorrelation, cross_correlation, is_two_level, signal_set_delta
from .interleaving import (
    ShiftSequence,
    build_signal_set,
    extended_entry,
    lemma_correlation,
    zero_count,
)
from .search import SearchSpec, backtrack, verify_open_nonexistence
from .sequences import PeriodicSequence

#: The library's worked example: two period-7 two-level sequences and the
#: shift vector that fails distinctness but passes multiplicity.
EXAMPLE_A = PeriodicSequence(2, (1, 0, 0, 1, 1, 1, 0))
EXAMPLE_B = PeriodicSequence(2, (1, 0, 0, 1, 0, 1, 1))
EXAMPLE_E = ShiftSequence((0, 0, 1, 0, 6, 3, 5))


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def run_all(example_e: ShiftSequence | None = None, seed: int = 0) -> list[CheckResult]:
    """Run every reproduction check; inject ``example_e`` to corrupt on purpose."""
    a, b = EXAMPLE_A, EXAMPLE_B
    e = EXAMPLE_E if example_e is None else example_e
    v = a.period
    results: list[CheckResult] = []

    def record(name: str, passed: bool, detail: str) -> None:
        results.append(CheckResult(name, bool(passed), detail))

    record(
        "bases are two-level",
        is_two_level(a) and is_two_level(b),
        f"a={a} b={b}",
    )

    record(
        "extension rule",
        extended_entry(e, v) == (e.entries[0] + 1) % v,
        f"ext(e)_{v} = {extended_entry(e, v)}",
    )

    ss = build_signal_set(a, b, e)
    coincide = [n for n in ss.notes if "coincide" in n]
    rep = signal_set_delta(ss.members)
    record(
        "signal set is (49, 8, 17)",
        ss.members[0].period == 49 and len(ss.members) == 8 and not coincide and rep.delta == 17,
        f"period={ss.members[0].period} members={len(ss.members)} delta={rep.delta}",
    )

    ra = check_condition_A(e)
    sets_ok = ra.first_failure_s == 1 and ra.checks[0].profile.values == (0, 6, 1, 1, 3, 5)
    record(
        "distinctness fails at s=1 with 5 distinct differences",
        (not ra.verdict) and sets_ok and ra.checks[0].observed == 5,
        f"s=1 differences {list(ra.checks[0].profile.values)} distinct {ra.checks[0].observed}",
    )

    rb = check_condition_B(e)
    record(
        "multiplicity condition passes",
        rb.verdict and max(c.observed for c in rb.checks) <= 2,
        f"max multiplicity {max(c.observed for c in rb.checks)}",
    )

    profile_a = autocorrelation(a)
    direct = {}
    grid_ok = True
    for h in range(v):
        for k in range(v):
            prof = cross_correlation(ss.members[1 + h], ss.members[1 + k])
            direct[h, k] = prof.values
            for tau in range(v * v):
                if lemma_correlation(profile_a, b, e, h, k, tau) != prof.values[tau]:
                    grid_ok = False
    record(
        "column identity matches direct correlation",
        grid_ok,
        f"{v * v * v * v} comparisons",
    )

    closed_ok = True
    seen = set()
    for h in range(v):
        for k in range(v):
            if h == k:
                continue
            for r in range(v):
                val = direct[h, k][r * v]
                seen.add(val)
                if val != -profile_a.values[r]:
                    closed_ok = False
    record(
        "diagonal-phase values equal -C_a(r)",
        closed_ok and seen == {1, -v},
        f"values seen {sorted(seen)}",
    )

    bound_ok = True
    for h in range(v):
        for k in range(v):
            for s in range(1, v):
                if (h - k) % v == s:
                    continue
                for r in range(v):
                    if abs(direct[h, k][r * v + s]) > zero_count(e, s, r).bound:
                        bound_ok = False
    record("magnitude bound holds off the diagonal phases", bound_ok, "all (h,k,s,r)")

    hits = backtrack(SearchSpec(v, "B", limit=10))
    deltas = []
    for w in hits.witnesses:
        deltas.append(signal_set_delta(build_signal_set(a, b, w).members).delta)
    record(
        "delta bound 2v+3 for multiplicity-condition vectors",
        bool(deltas) and all(d <= 2 * v + 3 for d in deltas),
        f"deltas {sorted(set(deltas))} vs bound {2 * v + 3}",
    )

    implication_ok = True
    for vv in (2, 3, 4, 5):
        for tail in itertools.product(range(vv), repeat=vv - 1):
            cand = ShiftSequence((0,) + tail)
            if check_condition_A(cand).verdict and not check_condition_B(cand).verdict:
                implication_ok = False
    record("distinctness implies multiplicity (v <= 5)", implication_ok, "exhaustive")

    table = verify_open_nonexistence(7)
    two = table[2]
    none_above = all(not table[x].exists for x in range(3, 8))
    has_01 = any(w.entries == (0, 1) for w in two.witnesses)
    record(
        "completeness: (0,1) works at v=2, none exist for v in 3..7",
        two.exists and has_01 and none_above,
        f"v=2 witnesses {[w.entries for w in two.witnesses]}; "
        f"counts v>2 {[table[x].exists for x in range(3, 8)]}",
    )

    rng = random.Random(seed)
    sum_ok = True
    for vv in (3, 5, 7):
        for _ in range(50):
            cand = ShiftSequence(tuple(rng.randrange(vv) for _ in range(vv)))
            for s in range(1, vv):
                if cond2_sum_residue(cand, s) != (-s) % vv:
                    sum_ok = False
    for s in range(1, v):
        if cond2_sum_residue(e, s) != (-s) % v:
            sum_ok = False
    record("difference sums telescope to -s mod v", sum_ok, "150 random vectors + example")

    return results


def all_passed(results: list[CheckResult]) -> bool:
    return all(r.passed for r in results)
