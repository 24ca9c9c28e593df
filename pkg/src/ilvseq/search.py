"""Exhaustive and pruned search over finite shift vectors.

The search space for length v is all of Z_v^v, cut down to v^(v-1) by fixing
e_0 = 0 (every predicate here is invariant under adding a constant to all
entries, so each class has exactly one normalized representative). Full
enumeration visits every candidate; backtracking prunes a prefix as soon as
its determined differences already violate the predicate, which is sound
because adding entries never removes a difference.

``examined`` counts candidates for full enumeration and assignment nodes for
backtracking; ``exhaustive`` means the whole space was logically covered
(false only after an early stop on a witness limit, or for random sampling).
"""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable

from .conditions import (
    cond2_sum_residue,
    condition_a_holds,
    condition_b_holds,
    condition_open_holds,
)
from .interleaving import ShiftSequence

#: Largest v the exhaustive strategies accept without force.
BUDGET_MAX_V = 8

#: Examined-count granularity of progress callbacks.
PROGRESS_INTERVAL = 20000


class BudgetExceededError(RuntimeError):
    """Raised when an exhaustive search would exceed the configured budget."""


@dataclass(frozen=True)
class SearchSpec:
    """What to search: period, predicate, normalization, witness limit.

    ``predicate`` is one of "A", "B", "B-not-A", "OPEN" (case-insensitive;
    "b-and-not-a" is accepted for the third), or any callable taking a raw
    entry tuple. ``limit`` > 0 stops the search once that many witnesses are
    collected; 0 counts everything and stores none. ``force`` overrides the
    v <= BUDGET_MAX_V guard.
    """

    v: int
    predicate: object
    normalize: bool = True
    limit: int = 0
    strategy: str = "full"
    force: bool = False

    def __post_init__(self):
        if self.v < 2:
            raise ValueError(f"v must be at least 2, got {self.v}")
        if self.limit < 0:
            raise ValueError("limit must be nonnegative")
        if self.strategy not in ("full", "backtrack"):
            raise ValueError(f"unknown strategy {self.strategy!r}")


@dataclass(frozen=True)
class SearchOutcome:
    witnesses: tuple[ShiftSequence, ...]
    examined: int
    satisfying: int
    exhaustive: bool


_CANONICAL = {
    "a": "A",
    "b": "B",
    "open": "OPEN",
    "b-not-a": "B-not-A",
    "b-and-not-a": "B-not-A",
}

_FAST: dict[str, Callable] = {
    "A": condition_a_holds,
    "B": condition_b_holds,
    "OPEN": condition_open_holds,
    "B-not-A": lambda ent: condition_b_holds(ent) and not condition_a_holds(ent),
}


def _resolve_predicate(spec: SearchSpec) -> tuple[str | None, Callable]:
    if callable(spec.predicate):
        return None, spec.predicate
    name = _CANONICAL.get(str(spec.predicate).lower())
    if name is None:
        raise ValueError(f"unknown predicate {spec.predicate!r}")
    return name, _FAST[name]


def _guard_budget(spec: SearchSpec) -> None:
    if spec.v > BUDGET_MAX_V and not spec.force:
        raise BudgetExceededError(
            f"v={spec.v} exceeds the exhaustive-search budget (v <= {BUDGET_MAX_V}); "
            "pass force to override or use random sampling"
        )


def _crosscheck_open_hit(entries: tuple[int, ...]) -> None:
    # Any completeness hit must sum to v(v-1)/2 mod v at every shift; a
    # violation would mean the checker and the sum identity disagree.
    e = ShiftSequence(entries)
    v = e.v
    want = (v * (v - 1) // 2) % v
    for s in range(1, v):
        if cond2_sum_residue(e, s) != want:
            raise RuntimeError(
                f"inconsistent completeness hit {entries}: sum residue at s={s} "
                f"is {cond2_sum_residue(e, s)}, expected {want}"
            )


def _enum_scan(v, fixed, fn, limit, crosscheck, progress, base):
    free = v - len(fixed)
    total = v**free
    examined = satisfying = 0
    witnesses = []
    stopped = False
    for tail in itertools.product(range(v), repeat=free):
        entries = fixed + tail
        examined += 1
        if progress is not None and (base + examined) % PROGRESS_INTERVAL == 0:
            progress(base + examined)
        if fn(entries):
            if crosscheck:
                _crosscheck_open_hit(entries)
            satisfying += 1
            if limit:
                witnesses.append(ShiftSequence(entries))
                if len(witnesses) >= limit:
                    stopped = examined < total
                    break
    return witnesses, examined, satisfying, not stopped


def enumerate_space(
    spec: SearchSpec,
    threads: int = 1,
    progress: Callable[[int], None] | None = None,
) -> SearchOutcome:
    """Visit every candidate in lexicographic order and apply the predicate."""
    _guard_budget(spec)
    name, fn = _resolve_predicate(spec)
    crosscheck = name == "OPEN"
    v = spec.v
    fixed = (0,) if spec.normalize else ()

    if threads > 1:
        if spec.limit:
            raise ValueError("threaded enumeration requires limit=0")
        free = v - len(fixed)
        prefixes = list(itertools.product(range(v), repeat=min(2, free)))
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(
                pool.map(
                    lambda pre: _enum_scan(v, fixed + pre, fn, 0, crosscheck, None, 0),
                    prefixes,
                )
            )
        examined = sum(p[1] for p in parts)
        satisfying = sum(p[2] for p in parts)
        return SearchOutcome((), examined, satisfying, True)

    witnesses, examined, satisfying, exhaustive = _enum_scan(
        v, fixed, fn, spec.limit, crosscheck, progress, 0
    )
    return SearchOutcome(tuple(witnesses), examined, satisfying, exhaustive)


class _StopSearch(Exception):
    pass


def backtrack(
    spec: SearchSpec,
    progress: Callable[[int], None] | None = None,
) -> SearchOutcome:
    """Depth-first assignment with refutation-sound prefix pruning.

    Prunes on the first duplicate (A, OPEN) or third repetition (B) among
    differences whose entries are all assigned; extended-index differences
    are deferred until both referenced entries exist. Witnesses come out in
    the same lexicographic order as full enumeration. Named predicates only.
    """
    _guard_budget(spec)
    name, _ = _resolve_predicate(spec)
    if name is None:
        raise ValueError("backtracking requires a named predicate (A, B, B-not-A, OPEN)")
    v = spec.v
    limit = spec.limit
    use_kind2 = name != "A"
    cap = 2 if name in ("B", "B-not-A") else 1
    counts = [[0] * v for _ in range(v)]
    counts_a = [[0] * v for _ in range(v)] if name == "B-not-A" else None
    a_dups = 0
    entries = [0] * v
    witnesses: list[ShiftSequence] = []
    examined = 0
    satisfying = 0

    def apply(m):
        nonlocal a_dups
        val = entries[m]
        added = []
        added_a = []
        ok = True
        for s in range(1, m + 1):
            d = (entries[m - s] - val) % v
            counts[s][d] += 1
            added.append((s, d))
            if counts[s][d] > cap:
                ok = False
                break
            if counts_a is not None:
                counts_a[s][d] += 1
                added_a.append((s, d))
                if counts_a[s][d] == 2:
                    a_dups += 1
        if ok and use_kind2:
            for s in range(max(1, v - m), v):
                d = (val - entries[m + s - v] - 1) % v
                counts[s][d] += 1
                added.append((s, d))
                if counts[s][d] > cap:
                    ok = False
                    break
        return ok, added, added_a

    def undo(added, added_a):
        nonlocal a_dups
        for s, d in added_a:
            if counts_a[s][d] == 2:
                a_dups -= 1
            counts_a[s][d] -= 1
        for s, d in added:
            counts[s][d] -= 1

    def place(m):
        nonlocal examined, satisfying
        for val in range(v):
            entries[m] = val
            examined += 1
            if progress is not None and examined % PROGRESS_INTERVAL == 0:
                progress(examined)
            ok, added, added_a = apply(m)
            if ok:
                if m == v - 1:
                    if name != "B-not-A" or a_dups > 0:
                        ent = tuple(entries)
                        if name == "OPEN":
                            _crosscheck_open_hit(ent)
                        satisfying += 1
                        if limit:
                            witnesses.append(ShiftSequence(ent))
                            if len(witnesses) >= limit:
                                undo(added, added_a)
                                raise _StopSearch
                else:
                    place(m + 1)
            undo(added, added_a)

    exhaustive = True
    try:
        if spec.normalize:
            entries[0] = 0
            place(1)
        else:
            place(0)
    except _StopSearch:
        exhaustive = False
    return SearchOutcome(tuple(witnesses), examined, satisfying, exhaustive)


def run_search(
    spec: SearchSpec,
    threads: int = 1,
    progress: Callable[[int], None] | None = None,
) -> SearchOutcome:
    """Dispatch on spec.strategy ("full" enumeration or "backtrack")."""
    if spec.strategy == "backtrack":
        return backtrack(spec, progress=progress)
    return enumerate_space(spec, threads=threads, progress=progress)


def find_B_not_A(
    v: int,
    limit: int = 0,
    strategy: str = "backtrack",
    force: bool = False,
    threads: int = 1,
) -> SearchOutcome:
    """Search for vectors passing the multiplicity condition but not distinctness."""
    spec = SearchSpec(v, "B-not-A", limit=limit, strategy=strategy, force=force)
    return run_search(spec, threads=threads)


@dataclass(frozen=True)
class NonexistenceEntry:
    """One period's completeness-condition census."""

    v: int
    exists: bool
    witnesses: tuple[ShiftSequence, ...]
    examined: int
    exhaustive: bool

    @property
    def witness(self) -> ShiftSequence | None:
        return self.witnesses[0] if self.witnesses else None


def verify_open_nonexistence(v_max: int, force: bool = False) -> dict[int, NonexistenceEntry]:
    """Exhaustively census the completeness condition for every v in [2, v_max].

    Each period gets a count pass over the full normalized space, then a
    collection pass when hits exist, so the witness list is always complete.
    """
    if v_max < 2:
        raise ValueError(f"v_max must be at least 2, got {v_max}")
    table = {}
    for v in range(2, v_max + 1):
        count_run = enumerate_space(SearchSpec(v, "OPEN", limit=0, force=force))
        witnesses: tuple[ShiftSequence, ...] = ()
        if count_run.satisfying:
            collect = enumerate_space(
                SearchSpec(v, "OPEN", limit=count_run.satisfying, force=force)
            )
            witnesses = collect.witnesses
        table[v] = NonexistenceEntry(
            v,
            count_run.satisfying > 0,
            witnesses,
            count_run.examined,
            count_run.exhaustive,
        )
    return table


def sample_random(
    v: int,
    predicate: object,
    n: int,
    seed: int = 0,
    normalize: bool = True,
    limit: int = 0,
) -> SearchOutcome:
    """Uniform random draws over the (normalized) space; never exhaustive.

    The offered fallback beyond the exhaustive budget. ``satisfying`` counts
    hits with multiplicity across the n draws; witnesses are deduplicated,
    sorted, and capped by ``limit``.
    """
    if n < 1:
        raise ValueError("sample size must be positive")
    spec = SearchSpec(v, predicate, normalize=normalize, force=True)
    name, fn = _resolve_predicate(spec)
    rng = random.Random(seed)
    fixed = (0,) if normalize else ()
    free = v - len(fixed)
    satisfying = 0
    hits = set()
    for _ in range(n):
        entries = fixed + tuple(rng.randrange(v) for _ in range(free))
        if fn(entries):
            if name == "OPEN":
                _crosscheck_open_hit(entries)
            satisfying += 1
            hits.add(entries)
    witnesses = tuple(
        ShiftSequence(ent) for ent in sorted(hits)[: limit if limit else 0]
    )
    return SearchOutcome(witnesses, n, satisfying, False)
