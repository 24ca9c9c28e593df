"""
Generating two-level autocorrelation sequences
===============================================

Builds the two classic families of binary sequences whose periodic
autocorrelation is v in phase and -1 everywhere else: maximal-period
register sequences and quadratic-residue indicator sequences.
"""

from ilvseq import (
    PRIMITIVE_POLYS,
    LfsrSpec,
    autocorrelation,
    gen_legendre,
    gen_mseq,
    is_prime,
    is_two_level,
)

# A degree-3 register with feedback polynomial x^3 + x + 1 (bits "1011",
# highest degree first) started from state 100 runs through all 7 nonzero
# states before repeating, so its output has period 2^3 - 1 = 7.
spec = LfsrSpec(3, (1, 0, 1, 1), (1, 0, 0))
seq = gen_mseq(spec)
print("register output:", seq)
print("autocorrelation:", autocorrelation(seq).values)

# The library ships one verified maximal polynomial per degree from 2 to 10.
# Every output is two-level, whatever the (nonzero) starting state.
for degree, poly in PRIMITIVE_POLYS.items():
    bits = tuple(int(c) for c in poly)
    out = gen_mseq(LfsrSpec(degree, bits, (1,) + (0,) * (degree - 1)))
    print(f"degree {degree:>2}: period {out.period:>4}, two-level {is_two_level(out)}")

# Quadratic-residue sequences mark the nonzero squares mod a prime v. They
# are two-level exactly when v = 3 (mod 4); for v = 1 (mod 4) the sidelobes
# take several values. The index-0 convention (0 or 1) does not matter.
for v in (7, 11, 13, 19):
    leg = gen_legendre(v, zero_convention=0)
    tail = sorted(set(autocorrelation(leg).values[1:]))
    print(f"legendre v={v:>2} (v mod 4 = {v % 4}): sidelobe values {tail}")

# The two-level test is a one-liner on any sequence, not just generated ones.
primes_3_mod_4 = [v for v in range(3, 50) if is_prime(v) and v % 4 == 3]
print("two-level legendre periods up to 50:", primes_3_mod_4)
