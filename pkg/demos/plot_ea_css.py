"""
When the checks do not commute: counting ebits
==============================================

Pick two classical codes whose checks are not orthogonal.  Each anticommuting
pair among the quantum checks then costs one shared ebit, and the count can be
read off either the generator or the check matrices.
"""

import numpy as np

from qlogops import BinMatrix, CssCodePair, analyze_css, css_entanglement_G, css_entanglement_H
from qlogops import gf2

# a small example: two qubits, both codes spanned by 01
code = CssCodePair(BinMatrix.from_strings(["01"]), BinMatrix.from_strings(["01"]))
print(code.H1.to_strings(), code.H2.to_strings())
print(css_entanglement_G(code), css_entanglement_H(code))

report = analyze_css(code)
print(report.kind, "k =", report.k, "c =", report.c)
for a, b in report.entanglement_pairs:
    print("ebit pair", a, b)

###############################################################################
# On random codes the two formulas always agree

rng = np.random.default_rng(3)
for n in (6, 10, 14):
    G1 = BinMatrix.from_array(rng.integers(0, 2, size=(n // 2, n)))
    G2 = BinMatrix.from_array(rng.integers(0, 2, size=(n // 3, n)))
    if gf2.rank(G1) < G1.rows or gf2.rank(G2) < G2.rows:
        continue
    code = CssCodePair(G1, G2)
    print(n, code.k1, code.k2, css_entanglement_G(code), css_entanglement_H(code))
