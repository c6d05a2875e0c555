import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from qlogops import gf4
from qlogops.errors import ParseError, ShapeError
from qlogops.gf2 import BinMatrix
from qlogops.gf4 import ELEMENTS, ONE, OMEGA, OMEGA_BAR, ZERO, Gf4Matrix, gamma
from qlogops.oracle import naive_rank_gf4
from qlogops.pauli import multiply, symplectic_product

elements = st.sampled_from(ELEMENTS)


def test_field_relations():
    assert gf4.mul(OMEGA, OMEGA_BAR) == ONE
    assert gf4.mul(OMEGA, OMEGA) == OMEGA_BAR
    assert gf4.mul(OMEGA_BAR, OMEGA_BAR) == OMEGA
    assert gf4.add(gf4.add(ONE, OMEGA), OMEGA_BAR) == ZERO
    for e in ELEMENTS:
        assert gf4.add(e, e) == ZERO
        assert gf4.mul(ONE, e) == e
        if e != ZERO:
            assert gf4.mul(e, gf4.inverse(e)) == ONE


def test_conj():
    assert gf4.conj(OMEGA) == OMEGA_BAR
    assert gf4.conj(OMEGA_BAR) == OMEGA
    assert gf4.conj(ONE) == ONE
    assert gf4.conj(ZERO) == ZERO
    for e in ELEMENTS:
        assert gf4.conj(gf4.conj(e)) == e
        assert gf4.conj(e) == gf4.mul(e, e)


@given(elements, elements)
def test_conj_is_automorphism(a, b):
    assert gf4.conj(gf4.mul(a, b)) == gf4.mul(gf4.conj(a), gf4.conj(b))
    assert gf4.conj(gf4.add(a, b)) == gf4.add(gf4.conj(a), gf4.conj(b))


def test_trace():
    assert gf4.trace(ZERO) == 0
    assert gf4.trace(ONE) == 0
    assert gf4.trace(OMEGA) == 1
    assert gf4.trace(OMEGA_BAR) == 1
    for e in ELEMENTS:
        # tr(e) = e + e^2 lands in GF(2) = {0, 1}
        assert gf4.add(e, gf4.mul(e, e)) == (ONE if gf4.trace(e) else ZERO)


def test_gamma_examples():
    assert gamma([ZERO, ZERO, ZERO]).is_identity()
    w = gamma([OMEGA])
    assert (w.z, w.x) == (1, 0)
    one = gamma([ONE])
    assert (one.z, one.x) == (1, 1)
    assert str(gamma("01wW")) == "IYZX"
    assert gf4.gamma_inverse(gamma("1wW0")) == [ONE, OMEGA, OMEGA_BAR, ZERO]


def test_gamma_compatibility_exhaustive():
    for u, v in itertools.product(ELEMENTS, repeat=2):
        tp = gf4.trace(gf4.mul(u, gf4.conj(v)))
        assert tp == symplectic_product(gamma([u]), gamma([v])), (u, v)


def test_gamma_compatibility_random(rng):
    for _ in range(500):
        n = int(rng.integers(1, 9))
        u = [int(e) for e in rng.integers(0, 4, size=n)]
        v = [int(e) for e in rng.integers(0, 4, size=n)]
        tp = 0
        for a, b in zip(u, v):
            tp ^= gf4.trace(gf4.mul(a, gf4.conj(b)))
        assert tp == symplectic_product(gamma(u), gamma(v))


@given(st.lists(elements, min_size=1, max_size=8), st.data())
def test_gamma_linear(u, data):
    v = data.draw(st.lists(elements, min_size=len(u), max_size=len(u)))
    s = [gf4.add(a, b) for a, b in zip(u, v)]
    assert gamma(s) == multiply(gamma(u), gamma(v))


def test_gamma_injective():
    images = {str(gamma(list(v))) for v in itertools.product(ELEMENTS, repeat=3)}
    assert len(images) == 4**3


def test_trace_product_examples():
    w = Gf4Matrix.from_strings(["w"])
    wb = Gf4Matrix.from_strings(["W"])
    assert gf4.trace_product(w, wb) == BinMatrix.from_strings(["1"])
    assert gf4.trace_product(w, w) == BinMatrix.from_strings(["0"])
    a = Gf4Matrix.from_strings(["1wW0", "ww11"])
    assert gf4.trace_product(a, Gf4Matrix.zeros(3, 4)).is_zero()


def test_trace_product_column_mismatch():
    with pytest.raises(ShapeError):
        gf4.trace_product(Gf4Matrix.zeros(1, 2), Gf4Matrix.zeros(1, 3))


def _random_gf4(rng, r, c):
    return Gf4Matrix.from_codes(rng.integers(0, 4, size=(r, c)).reshape(r, c))


def test_trace_product_transpose_symmetry(rng):
    for _ in range(100):
        c = int(rng.integers(0, 7))
        a = _random_gf4(rng, int(rng.integers(0, 5)), c)
        b = _random_gf4(rng, int(rng.integers(0, 5)), c)
        assert gf4.trace_product(a, b) == gf4.trace_product(b, a).T


def test_trace_product_entrywise(rng):
    for _ in range(50):
        a = _random_gf4(rng, 3, 5)
        b = _random_gf4(rng, 4, 5)
        tp = gf4.trace_product(a, b)
        for i in range(3):
            for j in range(4):
                expected = 0
                for t in range(5):
                    expected ^= gf4.trace(gf4.mul(a[i, t], gf4.conj(b[j, t])))
                assert tp[i, j] == expected


def test_bitplane_products_match_table(rng):
    for _ in range(100):
        a = _random_gf4(rng, 3, 4)
        b = _random_gf4(rng, 4, 2)
        prod = gf4.matmul(a, b)
        for i in range(3):
            for j in range(2):
                acc = ZERO
                for t in range(4):
                    acc = gf4.add(acc, gf4.mul(a[i, t], b[t, j]))
                assert prod[i, j] == acc


def test_scale_matches_table():
    row = Gf4Matrix.from_strings(["01wW"])
    for s in ELEMENTS:
        scaled = row.scale(s)
        for t in range(4):
            assert scaled[0, t] == gf4.mul(s, row[0, t])


def test_rank_gf4_examples():
    assert gf4.rank_gf4(Gf4Matrix.zeros(3, 4)) == 0
    assert gf4.rank_gf4(Gf4Matrix.from_strings(["w"])) == 1
    # second row is wbar times the first
    assert gf4.rank_gf4(Gf4Matrix.from_strings(["1w", "W1"])) == 1


def test_rank_gf4_matches_naive(rng):
    for _ in range(300):
        r, c = (int(v) for v in rng.integers(0, 8, size=2))
        m = _random_gf4(rng, r, c)
        assert gf4.rank_gf4(m) == naive_rank_gf4(m)
        assert gf4.rank_gf4(m) == gf4.rank_gf4(m.T)


def test_nullspace_gf4(rng):
    for _ in range(100):
        r, c = (int(v) for v in rng.integers(0, 7, size=2))
        m = _random_gf4(rng, r, c)
        k = gf4.nullspace_gf4(m)
        assert k.rows == c - gf4.rank_gf4(m)
        assert gf4.rank_gf4(k) == k.rows
        assert gf4.mul_transpose(m, k).is_zero()


def test_text_alphabet():
    m = Gf4Matrix.from_strings(["01wW"])
    assert m.to_codes().tolist() == [[ZERO, ONE, OMEGA, OMEGA_BAR]]
    assert m.to_strings() == ["01wW"]
    with pytest.raises(ParseError):
        Gf4Matrix.from_strings(["01x"])


def test_conj_matrix():
    m = Gf4Matrix.from_strings(["1wW0"])
    assert m.conj().to_strings() == ["1Ww0"]
    assert np.array_equal(m.T.to_codes(), m.to_codes().T)
