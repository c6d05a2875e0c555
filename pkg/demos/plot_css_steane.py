"""
The Steane code from two copies of the Hamming code
===================================================

Both classical codes are the [7,4] Hamming code, whose dual sits inside it, so
no entanglement is needed and one logical qubit comes out.
"""

from qlogops import BinMatrix, CssCodePair, analyze_css, css_check_matrix, css_normalizer
from qlogops import gf2

H = BinMatrix.from_strings(["1010101", "0110011", "0001111"])
code = CssCodePair.from_checks(H, H)
print(code.G1.to_array())

# H1 H2^T vanishes: the checks commute
print(gf2.mul(code.H1, code.H2.T).to_array())

###############################################################################
# Six stabilizers, eight normalizer generators

for g in css_check_matrix(code):
    print(g)
print(len(css_normalizer(code)))

report = analyze_css(code)
print("k =", report.k, " c =", report.c, " i =", report.i)
(xbar, zbar), = report.logical_pairs
print("logical X", xbar)
print("logical Z", zbar)

###############################################################################
# Every identity the analysis relies on is recorded with both sides

for fc in report.formula_checks:
    print(f"{fc.name:48s} {fc.lhs!s:>6} {fc.rhs!s:>6}")
