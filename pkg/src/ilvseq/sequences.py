"""Periodic p-ary sequences and generators for two-level autocorrelation families.

A sequence is a fixed tuple of residues modulo a prime p, read cyclically:
index i always means index i mod v, where v is the stored period. Sequences
are immutable; every operation returns a new object.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test (desk-scale inputs)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    f = 5
    while f * f <= n:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    return True


@dataclass(frozen=True)
class PeriodicSequence:
    """A period-v sequence of residues mod a prime, indexed cyclically.

    The period is the declared length of ``values``; it is not reduced to the
    minimal period, so a doubled-up sequence keeps its declared length.
    """

    modulus: int
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(x) for x in self.values))
        if not is_prime(self.modulus):
            raise ValueError(f"modulus must be a prime >= 2, got {self.modulus}")
        if len(self.values) < 1:
            raise ValueError("a sequence needs at least one element")
        for x in self.values:
            if not 0 <= x < self.modulus:
                raise ValueError(f"value {x} is outside [0, {self.modulus})")

    @property
    def period(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i: int) -> int:
        return self.values[i % len(self.values)]

    def __iter__(self):
        return iter(self.values)

    def __str__(self) -> str:
        return format_sequence(self)


def left_shift(seq: PeriodicSequence, i: int) -> PeriodicSequence:
    """Return L^i(seq), the sequence starting i places later (i reduced mod v)."""
    v = seq.period
    i %= v
    return PeriodicSequence(seq.modulus, seq.values[i:] + seq.values[:i])


def shift_equivalence(a: PeriodicSequence, b: PeriodicSequence) -> int | None:
    """Smallest k in [0, v) with a_i = b_(i+k) for all i, or None.

    Requires equal periods and moduli. When b has minimal period d < v, the
    returned k is the smallest representative of its class mod d.
    """
    if a.period != b.period:
        raise ValueError(f"period mismatch: {a.period} vs {b.period}")
    if a.modulus != b.modulus:
        raise ValueError(f"modulus mismatch: {a.modulus} vs {b.modulus}")
    v = a.period
    if a.modulus <= 256:
        doubled = bytes(b.values) * 2
        k = doubled.find(bytes(a.values))
        return k if 0 <= k < v else None
    doubled_t = b.values * 2
    for k in range(v):
        if doubled_t[k : k + v] == a.values:
            return k
    return None


def add_pointwise(x: PeriodicSequence, y: PeriodicSequence) -> PeriodicSequence:
    """Elementwise sum mod p; the result's period is lcm of the two periods."""
    if x.modulus != y.modulus:
        raise ValueError(f"modulus mismatch: {x.modulus} vs {y.modulus}")
    p = x.modulus
    n = math.lcm(x.period, y.period)
    return PeriodicSequence(p, tuple((x[i] + y[i]) % p for i in range(n)))


@dataclass(frozen=True)
class LfsrSpec:
    """A binary linear feedback register.

    ``poly`` holds the characteristic polynomial's coefficient bits, highest
    degree first (length degree+1); leading and constant bits must be 1.
    ``state`` holds the first ``degree`` output bits and must not be all zero.
    """

    degree: int
    poly: tuple[int, ...]
    state: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "poly", tuple(int(x) for x in self.poly))
        object.__setattr__(self, "state", tuple(int(x) for x in self.state))
        if self.degree < 1:
            raise ValueError("degree must be at least 1")
        if len(self.poly) != self.degree + 1:
            raise ValueError(
                f"polynomial needs {self.degree + 1} coefficient bits, got {len(self.poly)}"
            )
        if any(bit not in (0, 1) for bit in self.poly + self.state):
            raise ValueError("polynomial and state bits must be 0 or 1")
        if self.poly[0] != 1 or self.poly[-1] != 1:
            raise ValueError("leading and constant polynomial coefficients must be 1")
        if len(self.state) != self.degree:
            raise ValueError(f"state needs {self.degree} bits, got {len(self.state)}")
        if not any(self.state):
            raise ValueError("initial state must not be all zero")


#: Verified maximal-period polynomials (coefficient bits, highest degree first).
PRIMITIVE_POLYS: dict[int, str] = {
    2: "111",
    3: "1011",
    4: "10011",
    5: "100101",
    6: "1000011",
    7: "10000011",
    8: "100011101",
    9: "1000010001",
    10: "10000001001",
}


def gen_mseq(spec: LfsrSpec) -> PeriodicSequence:
    """Run the register for one full cycle and return the period-(2^n - 1) output.

    The recurrence is s_(t+n) = sum of c_d * s_(t+d) over d < n, with c_d the
    coefficient of x^d. Raises ValueError if the state orbit closes before
    2^n - 1 steps (the polynomial is then not maximal for this state).
    """
    n = spec.degree
    target = (1 << n) - 1
    taps = [d for d in range(n) if spec.poly[n - d]]
    state = list(spec.state)
    init = tuple(state)
    out = []
    for step in range(1, target + 1):
        out.append(state[0])
        new = 0
        for d in taps:
            new ^= state[d]
        state = state[1:] + [new]
        if tuple(state) == init and step != target:
            raise ValueError(
                f"state orbit closed after {step} steps; expected period {target}"
            )
    if tuple(state) != init:
        raise ValueError(f"state orbit did not close within {target} steps")
    return PeriodicSequence(2, tuple(out))


def gen_legendre(v: int, zero_convention: int = 0) -> PeriodicSequence:
    """Binary quadratic-residue indicator sequence of prime period v >= 3.

    Index i in [1, v) maps to 1 when i is a square mod v, else 0; index 0
    takes ``zero_convention``. Two-level autocorrelation holds exactly when
    v = 3 (mod 4), for either convention.
    """
    if not is_prime(v) or v < 3:
        raise ValueError(f"period must be an odd prime >= 3, got {v}")
    if zero_convention not in (0, 1):
        raise ValueError(f"zero convention must be 0 or 1, got {zero_convention}")
    squares = {pow(i, 2, v) for i in range(1, v)}
    values = [zero_convention] + [1 if i in squares else 0 for i in range(1, v)]
    return PeriodicSequence(2, tuple(values))


def parse_sequence(text: str, modulus: int = 2) -> PeriodicSequence:
    """Parse a compact digit string ("1001110") or comma-separated residues."""
    text = text.strip()
    if not text:
        raise ValueError("empty sequence text")
    if "," in text:
        try:
            values = tuple(int(tok) for tok in text.split(","))
        except ValueError:
            raise ValueError(f"bad residue in sequence text: {text!r}") from None
    else:
        if not text.isdigit():
            raise ValueError(f"bad sequence text: {text!r}")
        values = tuple(int(ch) for ch in text)
    return PeriodicSequence(modulus, values)


def format_sequence(seq: PeriodicSequence) -> str:
    """Compact digit string for p <= 9, comma-separated residues otherwise."""
    if seq.modulus <= 9:
        return "".join(str(x) for x in seq.values)
    return ",".join(str(x) for x in seq.values)
