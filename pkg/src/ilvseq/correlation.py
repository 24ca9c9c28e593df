"""Periodic cross- and autocorrelation of p-ary sequences, and signal-set delta.

The correlation of a against b at offset tau is the sum over one period of
omega^(a_i - b_(i+tau)), with omega the primitive p-th root of unity. For
p = 2 every value is an exact integer (agreements minus disagreements); all
binary arithmetic here stays in integers. For p > 2 values are complex and
comparisons use COMPLEX_TOL.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .sequences import PeriodicSequence

#: Absolute tolerance for complex-valued (p > 2) comparisons.
COMPLEX_TOL = 1e-9


@dataclass(frozen=True)
class CorrelationProfile:
    """All correlation values of one ordered pair, indexed by offset tau."""

    modulus: int
    values: tuple

    @property
    def period(self) -> int:
        return len(self.values)

    def __getitem__(self, tau: int):
        return self.values[tau % len(self.values)]


def _check_pair(a: PeriodicSequence, b: PeriodicSequence) -> None:
    if a.period != b.period:
        raise ValueError(f"period mismatch: {a.period} vs {b.period}")
    if a.modulus != b.modulus:
        raise ValueError(f"modulus mismatch: {a.modulus} vs {b.modulus}")


def _lifted(seq: PeriodicSequence):
    """Arrays (x, y-double) realizing the summand x_i * y_(i+tau)."""
    if seq.modulus == 2:
        x = 1 - 2 * np.asarray(seq.values, dtype=np.int64)
        return x
    omega = np.exp(2j * np.pi * np.asarray(seq.values, dtype=np.float64) / seq.modulus)
    return omega


def cross_correlation(a: PeriodicSequence, b: PeriodicSequence) -> CorrelationProfile:
    """Direct-summation correlation profile of a against b (all offsets)."""
    _check_pair(a, b)
    v = a.period
    if a.modulus == 2:
        x = _lifted(a)
        y2 = np.concatenate([_lifted(b)] * 2)
        vals = tuple(int(x @ y2[tau : tau + v]) for tau in range(v))
    else:
        x = _lifted(a)
        w2 = np.concatenate([np.conj(_lifted(b))] * 2)
        vals = tuple(complex(x @ w2[tau : tau + v]) for tau in range(v))
    return CorrelationProfile(a.modulus, vals)


def fast_cross_correlation(a: PeriodicSequence, b: PeriodicSequence) -> CorrelationProfile:
    """Transform-based correlation profile; agrees with cross_correlation.

    For p = 2 the result is rounded back to exact integers (the float error
    of the transform is far below 1/2 at any desk-scale period).
    """
    _check_pair(a, b)
    if a.modulus == 2:
        x = _lifted(a).astype(np.float64)
        y = _lifted(b).astype(np.float64)
        raw = np.fft.ifft(np.conj(np.fft.fft(x)) * np.fft.fft(y))
        rounded = np.rint(raw.real)
        if np.max(np.abs(raw.real - rounded)) > 1e-6 or np.max(np.abs(raw.imag)) > 1e-6:
            raise RuntimeError("transform residue too large to round safely")
        vals = tuple(int(c) for c in rounded)
    else:
        # ifft(conj(fft(u)) * fft(w))[tau] = sum_i conj(u_i) w_(i+tau), so feed
        # u = conj(lift(a)) to land on sum_i lift(a)_i * conj(lift(b))_(i+tau).
        u = np.conj(_lifted(a))
        w = np.conj(_lifted(b))
        raw = np.fft.ifft(np.conj(np.fft.fft(u)) * np.fft.fft(w))
        vals = tuple(complex(c) for c in raw)
    return CorrelationProfile(a.modulus, vals)


def autocorrelation(a: PeriodicSequence) -> CorrelationProfile:
    """Correlation of a sequence against itself."""
    return cross_correlation(a, a)


def is_two_level(a: PeriodicSequence) -> bool:
    """True when the autocorrelation is v at tau = 0 and -1 everywhere else.

    Exact comparison for p = 2; within COMPLEX_TOL for p > 2.
    """
    profile = autocorrelation(a)
    v = a.period
    if a.modulus == 2:
        if profile.values[0] != v:
            return False
        return all(c == -1 for c in profile.values[1:])
    if abs(profile.values[0] - v) > COMPLEX_TOL:
        return False
    return all(abs(c + 1) <= COMPLEX_TOL for c in profile.values[1:])


@dataclass(frozen=True)
class Witness:
    """One location achieving the set's maximum correlation magnitude."""

    i: int
    j: int
    tau: int
    value: object


@dataclass(frozen=True)
class DeltaReport:
    """Maximum correlation magnitude of a signal set, with all maximizers.

    delta is an int for p = 2, a float otherwise. Witnesses list every
    (i, j, tau, value) attaining |value| = delta, in lexicographic (i, j, tau)
    order over ordered pairs, excluding the trivial (i = j, tau = 0) peak.
    """

    delta: object
    witnesses: tuple[Witness, ...]
    period: int
    member_count: int


def _pair_scan(members, i, j, corr):
    profile = corr(members[i], members[j])
    best = None
    hits = []
    for tau, value in enumerate(profile.values):
        if i == j and tau == 0:
            continue
        mag = abs(value)
        if best is None or mag > best:
            best = mag
            hits = [(tau, value)]
        elif mag == best:
            hits.append((tau, value))
    return best, hits


def signal_set_delta(members, method: str = "direct", threads: int = 1) -> DeltaReport:
    """Delta of a signal set: max |correlation| over ordered pairs and offsets.

    ``method`` selects the correlation path ("direct" or "fast"); the choice
    is explicit, never silent. ``threads`` splits the ordered-pair sweep; the
    result is identical for any thread count.
    """
    members = list(members)
    if not members:
        raise ValueError("signal set must not be empty")
    v = members[0].period
    p = members[0].modulus
    for m in members:
        if m.period != v or m.modulus != p:
            raise ValueError("all members must share one period and modulus")
    if method == "direct":
        corr = cross_correlation
    elif method == "fast":
        corr = fast_cross_correlation
    else:
        raise ValueError(f"unknown method {method!r}")

    r = len(members)
    pairs = [(i, j) for i in range(r) for j in range(r)]
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            scans = list(pool.map(lambda ij: _pair_scan(members, *ij, corr), pairs))
    else:
        scans = [_pair_scan(members, i, j, corr) for i, j in pairs]

    candidates = [best for best, _ in scans if best is not None]
    if not candidates:
        raise ValueError("delta is undefined: no admissible (pair, offset) exists")
    delta = max(candidates)
    witnesses = []
    for (i, j), (best, hits) in zip(pairs, scans):
        if best == delta:
            witnesses.extend(Witness(i, j, tau, value) for tau, value in hits)
    if p == 2:
        delta = int(delta)
    return DeltaReport(delta, tuple(witnesses), v, r)
