"""Phase-free Pauli operators in the binary symplectic picture.

A Pauli operator on ``n`` qubits is stored as two ``n``-bit integers ``z``
and ``x``; qubit ``t`` carries ``Z^z_t X^x_t`` up to phase.  Letters map as
``I=(0,0)``, ``X=(0,1)``, ``Z=(1,0)``, ``Y=(1,1)`` in ``(z, x)`` order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from . import gf2
from .errors import ParseError, ShapeError
from .gf2 import BinMatrix

__all__ = [
    "PauliVector",
    "GeneratorSet",
    "symplectic_product",
    "multiply",
    "parse_pauli",
    "to_matrix",
    "from_matrix",
    "omega",
    "symplectic_complement",
]

_LETTER_TO_BITS = {"I": (0, 0), "X": (0, 1), "Z": (1, 0), "Y": (1, 1)}
_BITS_TO_LETTER = {v: k for k, v in _LETTER_TO_BITS.items()}


@dataclass(frozen=True)
class PauliVector:
    """One Pauli generator ``(z | x)`` on ``n`` qubits, bit ``t`` for qubit ``t``."""

    n: int
    z: int = 0
    x: int = 0

    def __post_init__(self):
        limit = 1 << self.n
        if self.n < 0 or not (0 <= self.z < limit and 0 <= self.x < limit):
            raise ShapeError(f"z/x do not fit in {self.n} qubits")

    @classmethod
    def identity(cls, n: int) -> "PauliVector":
        return cls(n)

    @classmethod
    def from_bits(cls, z: Sequence[int], x: Sequence[int]) -> "PauliVector":
        if len(z) != len(x):
            raise ShapeError("z and x must have equal length")
        zi = sum(1 << t for t, b in enumerate(z) if b)
        xi = sum(1 << t for t, b in enumerate(x) if b)
        return cls(len(z), zi, xi)

    @property
    def z_bits(self) -> list[int]:
        return [(self.z >> t) & 1 for t in range(self.n)]

    @property
    def x_bits(self) -> list[int]:
        return [(self.x >> t) & 1 for t in range(self.n)]

    @property
    def weight(self) -> int:
        return (self.z | self.x).bit_count()

    def is_identity(self) -> bool:
        return not (self.z or self.x)

    def to_row(self) -> int:
        """The packed ``[z | x]`` row used by :func:`to_matrix`."""
        return self.z | (self.x << self.n)

    def __mul__(self, other: "PauliVector") -> "PauliVector":
        return multiply(self, other)

    def __str__(self):
        return "".join(
            _BITS_TO_LETTER[((self.z >> t) & 1, (self.x >> t) & 1)] for t in range(self.n)
        )

    def __repr__(self):
        return f"PauliVector({str(self)!r})"


def symplectic_product(g: PauliVector, h: PauliVector) -> int:
    """0 if ``g`` and ``h`` commute, 1 if they anticommute."""
    if g.n != h.n:
        raise ShapeError(f"qubit count mismatch: {g.n} vs {h.n}")
    return ((g.z & h.x) ^ (g.x & h.z)).bit_count() & 1


def multiply(g: PauliVector, h: PauliVector) -> PauliVector:
    """Product of two Paulis with the phase discarded."""
    if g.n != h.n:
        raise ShapeError(f"qubit count mismatch: {g.n} vs {h.n}")
    return PauliVector(g.n, g.z ^ h.z, g.x ^ h.x)


def parse_pauli(s: str) -> PauliVector:
    """Parse a string over ``{I, X, Y, Z}``; the first character is qubit 0."""
    z = x = 0
    for t, ch in enumerate(s):
        bits = _LETTER_TO_BITS.get(ch)
        if bits is None:
            raise ParseError(f"illegal Pauli letter {ch!r}", position=t + 1)
        z |= bits[0] << t
        x |= bits[1] << t
    return PauliVector(len(s), z, x)


@dataclass(frozen=True)
class GeneratorSet:
    """Ordered list of Pauli generators sharing one qubit count."""

    n: int
    gens: tuple[PauliVector, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "gens", tuple(self.gens))
        for i, g in enumerate(self.gens):
            if g.n != self.n:
                raise ShapeError(f"generator {i} acts on {g.n} qubits, expected {self.n}")

    @classmethod
    def from_strings(cls, labels: Iterable[str], n: int | None = None) -> "GeneratorSet":
        gens = [parse_pauli(s) for s in labels]
        if n is None:
            n = gens[0].n if gens else 0
        return cls(n, gens)

    def __len__(self):
        return len(self.gens)

    def __iter__(self) -> Iterator[PauliVector]:
        return iter(self.gens)

    def __getitem__(self, i):
        return self.gens[i]

    def to_strings(self) -> list[str]:
        return [str(g) for g in self.gens]

    def __repr__(self):
        return f"GeneratorSet.from_strings({self.to_strings()!r}, n={self.n})"


def to_matrix(gs: GeneratorSet) -> BinMatrix:
    """Binary matrix ``[M_Z | M_X]`` with one generator per row."""
    return BinMatrix((g.to_row() for g in gs.gens), 2 * gs.n)


def from_matrix(m: BinMatrix) -> GeneratorSet:
    if m.cols % 2:
        raise ShapeError("a symplectic matrix needs an even number of columns")
    n = m.cols // 2
    mask = (1 << n) - 1
    return GeneratorSet(n, [PauliVector(n, r & mask, r >> n) for r in m.data])


def _halves(gs: GeneratorSet) -> tuple[BinMatrix, BinMatrix]:
    return (
        BinMatrix((g.z for g in gs.gens), gs.n),
        BinMatrix((g.x for g in gs.gens), gs.n),
    )


def omega(gs: GeneratorSet) -> BinMatrix:
    """Symplectic product matrix ``M_Z M_X^T + M_X M_Z^T``."""
    mz, mx = _halves(gs)
    if gs.n == 0:
        return BinMatrix.zeros(len(gs), len(gs))
    return gf2.mul(mz, mx.T) + gf2.mul(mx, mz.T)


def symplectic_complement(gs: GeneratorSet) -> GeneratorSet:
    """A basis of all Paulis commuting with every member of ``gs``."""
    n = gs.n
    # v commutes with (z|x) iff z.v_x + x.v_z = 0, i.e. v = (v_z|v_x) is in
    # the kernel of the half-swapped matrix [M_X | M_Z].
    swapped = BinMatrix((g.x | (g.z << n) for g in gs.gens), 2 * n)
    return from_matrix(gf2.nullspace(swapped))
