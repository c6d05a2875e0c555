import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import generator_sets, pauli_vectors
from qlogops import gf2
from qlogops.errors import ParseError, ShapeError
from qlogops.gf2 import J, BinMatrix
from qlogops.oracle import pairwise_omega, random_generator_set
from qlogops.pauli import (
    GeneratorSet,
    PauliVector,
    from_matrix,
    multiply,
    omega,
    parse_pauli,
    symplectic_complement,
    symplectic_product,
    to_matrix,
)

X, Z = parse_pauli("X"), parse_pauli("Z")


def test_x_z_anticommute():
    assert symplectic_product(X, Z) == 1


@given(pauli_vectors())
def test_self_commutes(g):
    assert symplectic_product(g, g) == 0


def test_hand_counted_pair():
    # X/Z and Z/X positions anticommute, two of them: even
    assert symplectic_product(parse_pauli("XZIX"), parse_pauli("ZXIX")) == 0


@given(st.data())
def test_symmetric_and_bilinear(data):
    n = data.draw(st.integers(0, 8))
    g, h, e = (data.draw(pauli_vectors(n=n)) for _ in range(3))
    assert symplectic_product(g, h) == symplectic_product(h, g)
    assert symplectic_product(multiply(g, h), e) == symplectic_product(g, e) ^ symplectic_product(h, e)


def test_length_mismatch():
    with pytest.raises(ShapeError):
        symplectic_product(parse_pauli("X"), parse_pauli("XX"))
    with pytest.raises(ShapeError):
        multiply(parse_pauli("X"), parse_pauli("XX"))


@given(pauli_vectors())
def test_multiply_identity_and_involution(g):
    assert multiply(g, PauliVector.identity(g.n)) == g
    assert multiply(g, g).is_identity()


def test_x_times_z_is_y():
    y = multiply(X, Z)
    assert (y.z, y.x) == (1, 1)
    assert str(y) == "Y"


def test_parse_letter_map():
    p = parse_pauli("IXZY")
    assert p.z_bits == [0, 0, 1, 1]
    assert p.x_bits == [0, 1, 0, 1]
    assert parse_pauli("").n == 0


def test_parse_error_position():
    with pytest.raises(ParseError) as exc:
        parse_pauli("XQ")
    assert exc.value.position == 2


@given(st.text(alphabet="IXYZ", max_size=20))
def test_parse_print_round_trip(s):
    assert str(parse_pauli(s)) == s


def test_to_matrix_examples():
    assert to_matrix(GeneratorSet(1, [Z])) == BinMatrix.from_strings(["10"])
    assert to_matrix(GeneratorSet(1, [X, Z])) == BinMatrix.from_strings(["01", "10"])


@given(generator_sets())
def test_matrix_round_trip(gs):
    assert from_matrix(to_matrix(gs)) == gs


def test_omega_examples():
    commuting = GeneratorSet.from_strings(["ZZI", "IZZ", "XXX"])
    assert omega(commuting).is_zero()
    assert omega(GeneratorSet(1, [X, Z])) == J


def test_omega_matches_pairwise(rng):
    for _ in range(50):
        gs = random_generator_set(int(rng.integers(1, 9)), 6, rng)
        assert omega(gs) == pairwise_omega(gs)


@given(generator_sets())
def test_omega_block_formula(gs):
    n = gs.n
    mz = BinMatrix((g.z for g in gs), n)
    mx = BinMatrix((g.x for g in gs), n)
    om = omega(gs)
    expected = gf2.mul(mz, mx.T) + gf2.mul(mx, mz.T) if n else BinMatrix.zeros(len(gs), len(gs))
    assert om == expected
    assert om == om.T
    assert all(om[i, i] == 0 for i in range(len(gs)))


def test_empty_sets_are_legal():
    gs = GeneratorSet(0)
    assert len(gs) == 0
    assert omega(gs).shape == (0, 0)
    assert omega(GeneratorSet(3)).shape == (0, 0)


def test_generator_set_rejects_mixed_lengths():
    with pytest.raises(ShapeError):
        GeneratorSet(2, [parse_pauli("X")])


@given(generator_sets(max_n=5, max_m=6))
def test_symplectic_complement(gs):
    comp = symplectic_complement(gs)
    assert all(symplectic_product(a, b) == 0 for a in comp for b in gs)
    assert gf2.rank(to_matrix(comp)) == 2 * gs.n - gf2.rank(to_matrix(gs))
