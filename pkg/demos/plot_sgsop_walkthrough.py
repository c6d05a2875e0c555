"""
Splitting a Pauli generator set into symplectic pairs
=====================================================

A generator set is just a list of Pauli strings.  The sweep below peels off
anticommuting pairs one at a time and leaves behind the generators that
commute with everything.
"""

import numpy as np

from qlogops import GeneratorSet, omega, pair_count, replay_inverse, sgsop, standard_form

# three generators on three qubits; XZI and ZII anticommute
gs = GeneratorSet.from_strings(["XZI", "ZII", "YYZ"])
print(omega(gs).to_array())

###############################################################################
# The decomposition keeps the group, pairs first

d = sgsop(gs)
for a, b in d.pairs:
    print("pair     ", a, b)
for g in d.isotropic:
    print("isotropic", g)

# every row update is logged, so the input can be recovered exactly
for step in d.log:
    print(step.kind, step.indices, step.exponents)
assert replay_inverse(d).gens == gs.gens

###############################################################################
# Reordered output has the block form J + ... + J + 0 + ... + 0

print(omega(d.ordered()).to_array())
assert omega(d.ordered()) == standard_form(d.num_pairs, len(d.isotropic))

###############################################################################
# The pair count is half the rank of the commutation matrix

rng = np.random.default_rng(7)
bits = rng.integers(0, 2, size=(10, 16))
big = GeneratorSet.from_strings(
    ["".join("IXZY"[x + 2 * z] for z, x in zip(row[:8], row[8:])) for row in bits]
)
print(sgsop(big).num_pairs, pair_count(big))
