"""Interleaved sequences, shift sequences, and the per-column correlation identity.

A period-st sequence u is (s, t) interleaved when its s x t matrix form (row
i, column j holds u at index i*t + j) has every column equal to some left
shift of one base sequence, or identically zero. The shift exponents form the
shift sequence e; the marker INFINITY denotes a zero column. Indices past the
vector wrap with a +1 twist: entry v+j equals entry j plus one (mod v).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .correlation import CorrelationProfile, is_two_level
from .sequences import PeriodicSequence, add_pointwise, left_shift, shift_equivalence

#: Marker for an all-zero column (column carries no shift of the base).
INFINITY = float("inf")


@dataclass(frozen=True)
class ShiftSequence:
    """Column shift exponents of an interleaved sequence.

    Finite entries lie in [0, v) where v is the vector's length; INFINITY
    marks a zero column.
    """

    entries: tuple

    def __post_init__(self):
        entries = tuple(
            INFINITY if x == INFINITY else int(x) for x in self.entries
        )
        object.__setattr__(self, "entries", entries)
        v = len(entries)
        if v < 1:
            raise ValueError("a shift sequence needs at least one entry")
        for x in entries:
            if x != INFINITY and not 0 <= x < v:
                raise ValueError(f"entry {x} is outside [0, {v})")

    @property
    def v(self) -> int:
        return len(self.entries)

    @property
    def is_finite(self) -> bool:
        return INFINITY not in self.entries

    def __str__(self) -> str:
        return format_shift_sequence(self)


def parse_shift_sequence(text: str) -> ShiftSequence:
    """Parse comma-separated entries; the token "inf" marks a zero column."""
    toks = [tok.strip() for tok in text.strip().split(",")]
    entries = []
    for tok in toks:
        if tok.lower() == "inf":
            entries.append(INFINITY)
        else:
            try:
                entries.append(int(tok))
            except ValueError:
                raise ValueError(f"bad shift entry {tok!r}") from None
    return ShiftSequence(tuple(entries))


def format_shift_sequence(e: ShiftSequence) -> str:
    return ",".join("inf" if x == INFINITY else str(x) for x in e.entries)


def extended_entry(e: ShiftSequence, k: int) -> int:
    """Entry k of the extended vector: e_k for k < v, e_(k-v) + 1 mod v after.

    Only finite entries extend; INFINITY at the referenced position raises.
    """
    v = e.v
    if not 0 <= k < 2 * v:
        raise ValueError(f"extended index {k} is outside [0, {2 * v})")
    base = e.entries[k] if k < v else e.entries[k - v]
    if base == INFINITY:
        raise ValueError(f"entry at extended index {k} is INFINITY")
    return base if k < v else (base + 1) % v


def interleave(a: PeriodicSequence, e: ShiftSequence) -> PeriodicSequence:
    """Build the interleaved sequence whose column j is L^(e_j)(a), or zero.

    The result has period (period of a) * (length of e); shifts reduce mod
    the period of a.
    """
    s_rows = a.period
    t_cols = e.v
    row_of = []
    for entry in e.entries:
        if entry == INFINITY:
            row_of.append(None)
        else:
            row_of.append(entry % s_rows)
    values = []
    for i in range(s_rows):
        for j in range(t_cols):
            shift = row_of[j]
            values.append(0 if shift is None else a[shift + i])
    return PeriodicSequence(a.modulus, tuple(values))


def matrix_form(u: PeriodicSequence, s_rows: int, t_cols: int) -> np.ndarray:
    """Reshape one period of u into its s_rows x t_cols matrix (row-major)."""
    if s_rows < 1 or t_cols < 1:
        raise ValueError("matrix dimensions must be positive")
    if u.period != s_rows * t_cols:
        raise ValueError(
            f"period {u.period} does not factor as {s_rows} x {t_cols}"
        )
    return np.asarray(u.values, dtype=np.int64).reshape(s_rows, t_cols)


def recover_shifts(u: PeriodicSequence, a: PeriodicSequence, t_cols: int) -> ShiftSequence:
    """Invert interleave: read each column's shift of a (INFINITY when zero).

    Raises ValueError when some column is neither all-zero nor a shift of a.
    """
    s_rows = a.period
    mat = matrix_form(u, s_rows, t_cols)
    entries = []
    for j in range(t_cols):
        col = tuple(int(x) for x in mat[:, j])
        if not any(col):
            entries.append(INFINITY)
            continue
        k = shift_equivalence(PeriodicSequence(a.modulus, col), a)
        if k is None:
            raise ValueError(f"column {j} is neither zero nor a shift of the base")
        entries.append(k)
    return ShiftSequence(tuple(entries))


@dataclass(frozen=True)
class SignalSet:
    """An interleaved base u and its v offset companions u + L^j(b).

    ``notes`` carries advisory diagnostics (non-two-level bases, coincident
    members); the construction itself never rejects on quality grounds.
    """

    a: PeriodicSequence
    b: PeriodicSequence
    e: ShiftSequence
    members: tuple[PeriodicSequence, ...]
    notes: tuple[str, ...]

    @property
    def v(self) -> int:
        return self.e.v

    @property
    def period(self) -> int:
        return self.v * self.v


def coincident_members(members) -> list[tuple[int, int, int]]:
    """All (i, j, k) with i < j and member i equal to member j shifted by k."""
    members = list(members)
    out = []
    for i in range(len(members)):
        for j in range(i + 1, len(members)):
            k = shift_equivalence(members[i], members[j])
            if k is not None:
                out.append((i, j, k))
    return out


def build_signal_set(a: PeriodicSequence, b: PeriodicSequence, e: ShiftSequence) -> SignalSet:
    """Construct the v+1 member signal set over base a, offsets b, shifts e.

    Member 0 is u = interleave(a, e); member 1+j is u + L^j(b) with b read
    cyclically up to period v^2. Requires binary a and b of equal period v
    and a finite length-v shift vector. Two-level checks and the member
    coincidence scan are advisory: their findings go into notes.
    """
    if a.modulus != 2 or b.modulus != 2:
        raise ValueError("the construction is defined for binary sequences")
    v = a.period
    if b.period != v:
        raise ValueError(f"period mismatch: a has {v}, b has {b.period}")
    if e.v != v:
        raise ValueError(f"shift vector length {e.v} does not match period {v}")
    if not e.is_finite:
        raise ValueError("shift vector must be finite (no INFINITY entries)")

    u = interleave(a, e)
    members = [u]
    for j in range(v):
        members.append(add_pointwise(u, left_shift(b, j)))

    notes = []
    if not is_two_level(a):
        notes.append("base a fails the two-level autocorrelation test")
    if not is_two_level(b):
        notes.append("offset b fails the two-level autocorrelation test")
    if shift_equivalence(a, b) is not None:
        notes.append("b is a shift of a; members may coincide")
    for i, j, k in coincident_members(members):
        notes.append(f"members {i} and {j} coincide (shift {k})")
    return SignalSet(a, b, e, tuple(members), tuple(notes))


@dataclass(frozen=True)
class TauDecomposition:
    """Offset tau on the long period split as tau = r*v + s with 0 <= s < v."""

    tau: int
    r: int
    s: int


def decompose_tau(tau: int, v: int) -> TauDecomposition:
    if v < 1:
        raise ValueError("v must be positive")
    if not 0 <= tau < v * v:
        raise ValueError(f"tau {tau} is outside [0, {v * v})")
    return TauDecomposition(tau, tau // v, tau % v)


@dataclass(frozen=True)
class LemmaTerms:
    """Per-column terms of the correlation identity: shifts t_j, phases d_j."""

    t: tuple[int, ...]
    d: tuple[int, ...]

    @property
    def v(self) -> int:
        return len(self.t)


def lemma_terms(e: ShiftSequence, b: PeriodicSequence, h: int, k: int, tau: int) -> LemmaTerms:
    """Terms t_j = ext(e)_(j+s) - e_j + r and d_j = b_(h+j) - b_(k+s+j).

    h and k index the offset members (0 <= h, k < v); tau decomposes as
    r*v + s on the long period.
    """
    v = e.v
    if b.period != v:
        raise ValueError(f"offset sequence period {b.period} does not match v={v}")
    if not 0 <= h < v or not 0 <= k < v:
        raise ValueError(f"member indices must lie in [0, {v})")
    if not e.is_finite:
        raise ValueError("shift vector must be finite (no INFINITY entries)")
    dec = decompose_tau(tau, v)
    r, s = dec.r, dec.s
    t = tuple((extended_entry(e, j + s) - e.entries[j] + r) % v for j in range(v))
    d = tuple((b[h + j] - b[k + s + j]) % b.modulus for j in range(v))
    return LemmaTerms(t, d)


def lemma_correlation(
    a_profile: CorrelationProfile,
    b: PeriodicSequence,
    e: ShiftSequence,
    h: int,
    k: int,
    tau: int,
):
    """Correlation of offset members h and k at offset tau, via the identity.

    Evaluates sum over columns j of C_a(t_j) * omega^(d_j), where C_a is the
    base autocorrelation profile. Exact integer for p = 2; complex otherwise.
    Matches the direct correlation of members 1+h and 1+k of the built set.
    """
    v = e.v
    if a_profile.period != v:
        raise ValueError(
            f"base profile period {a_profile.period} does not match v={v}"
        )
    terms = lemma_terms(e, b, h, k, tau)
    p = b.modulus
    if p == 2:
        total = 0
        for tj, dj in zip(terms.t, terms.d):
            c = a_profile.values[tj]
            total += c if dj == 0 else -c
        return int(total)
    omega = np.exp(2j * np.pi / p)
    total = 0j
    for tj, dj in zip(terms.t, terms.d):
        total += a_profile.values[tj] * omega**dj
    return complex(total)


@dataclass(frozen=True)
class ZeroCount:
    """Count of columns with t_j = 0 at one (s, r), and the magnitude bound."""

    n0: int
    bound: int


def zero_count(e: ShiftSequence, s: int, r: int) -> ZeroCount:
    """n0 = #{j : ext(e)_(j+s) - e_j + r = 0 mod v}; bound = 1 + (v+1)*n0.

    For a two-level base, every correlation at offsets r*v + s (s != 0,
    off-diagonal phase) has magnitude at most ``bound``.
    """
    v = e.v
    if not 0 <= s < v or not 0 <= r < v:
        raise ValueError(f"s and r must lie in [0, {v})")
    if not e.is_finite:
        raise ValueError("shift vector must be finite (no INFINITY entries)")
    n0 = sum(
        1
        for j in range(v)
        if (extended_entry(e, j + s) - e.entries[j] + r) % v == 0
    )
    return ZeroCount(n0, 1 + (v + 1) * n0)
