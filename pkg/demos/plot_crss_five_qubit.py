"""
The five-qubit code over GF(4)
==============================

GF(4) vectors map to Pauli strings by 1 -> Y, w -> Z, w^2 -> X (written
``W`` here).  Under that map the trace of the Hermitian inner product is the
symplectic product, so a trace-orthogonal additive code is a stabilizer code.
"""

from qlogops import Gf4Code, Gf4Matrix, analyze_crss, crss_check_matrix, gf4, symplectic_product

# trace of u * conj(v) against the symplectic product, for single symbols
for u in range(4):
    print([gf4.trace(gf4.mul(u, gf4.conj(v))) for v in range(4)],
          [symplectic_product(gf4.gamma([u]), gf4.gamma([v])) for v in range(4)])

###############################################################################
# Two check rows give four stabilizers after multiplying by w and w^2

H = Gf4Matrix.from_strings(["101WW", "W101W"])
code = Gf4Code.from_check(H)
print(code.G.to_strings())
for g in crss_check_matrix(code):
    print(g)

# H H^dagger vanishes: trace-orthogonal, no ebits
print(gf4.hermitian_product(H, H).to_strings())

report = analyze_crss(code)
print("n =", report.n, "k =", report.k, "c =", report.c)
for a, b in report.logical_pairs:
    print(a, b)
