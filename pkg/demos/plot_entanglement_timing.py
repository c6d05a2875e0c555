"""
Generator side or check side?
=============================

The ebit count can be computed from ``G`` or from ``H``.  Low-rate codes have
small generator matrices, so the ``G`` route does less elimination there.
"""

import time

import numpy as np

from qlogops import css_entanglement_G, css_entanglement_H
from qlogops.oracle import random_code


def best_of(f, code, repeats=5):
    times = []
    for _ in range(repeats):
        t = time.perf_counter()
        c = f(code)
        times.append(time.perf_counter() - t)
    return c, min(times)


rng = np.random.default_rng(11)
print(f"{'n':>4} {'k1':>4} {'k2':>4} {'c':>4} {'G (us)':>9} {'H (us)':>9}")
for n, k in ((40, 4), (40, 20), (40, 36), (120, 10), (120, 110)):
    code = random_code("css", n, rng, k1=k, k2=k)
    cg, tg = best_of(css_entanglement_G, code)
    ch, th = best_of(css_entanglement_H, code)
    assert cg == ch
    print(f"{n:4d} {k:4d} {k:4d} {cg:4d} {tg * 1e6:9.1f} {th * 1e6:9.1f}")
