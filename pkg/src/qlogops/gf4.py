"""Arithmetic over GF(4) = {0, 1, w, w^2} and its link to Pauli operators.

Field elements are small integers whose two bits are the ``(z, x)`` image
under :func:`gamma`, i.e. the coordinates of the element in the GF(2) basis
``{w, wbar}``::

    ZERO = 0       (0 = 0w + 0wbar)
    OMEGA = 1      (w = 1w + 0wbar)
    OMEGA_BAR = 2  (wbar = 0w + 1wbar)
    ONE = 3        (1 = 1w + 1wbar)

With this encoding field addition is XOR, conjugation swaps the two bits and
the trace is the XOR of the two bits.

Matrices keep each row as two bit-planes (one ``int`` of z-bits and one of
x-bits), so a row is literally the Pauli operator it maps to.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .errors import ParseError, ShapeError
from .gf2 import BinMatrix
from .pauli import GeneratorSet, PauliVector

__all__ = [
    "ZERO",
    "OMEGA",
    "OMEGA_BAR",
    "ONE",
    "ELEMENTS",
    "add",
    "mul",
    "conj",
    "trace",
    "inverse",
    "Gf4Matrix",
    "gamma",
    "gamma_inverse",
    "mul_transpose",
    "matmul",
    "hermitian_product",
    "trace_product",
    "rank_gf4",
    "rref_gf4",
    "nullspace_gf4",
]

ZERO, OMEGA, OMEGA_BAR, ONE = 0, 1, 2, 3
ELEMENTS = (ZERO, ONE, OMEGA, OMEGA_BAR)

SYMBOLS = {ZERO: "0", ONE: "1", OMEGA: "w", OMEGA_BAR: "W"}
_FROM_SYMBOL = {v: k for k, v in SYMBOLS.items()}

# discrete log with respect to w: 1 = w^0, w = w^1, wbar = w^2
_LOG = {ONE: 0, OMEGA: 1, OMEGA_BAR: 2}
_EXP = (ONE, OMEGA, OMEGA_BAR)


def _check(e: int) -> int:
    if e not in SYMBOLS:
        raise ValueError(f"{e!r} is not a GF(4) element code")
    return e


def add(a: int, b: int) -> int:
    return _check(a) ^ _check(b)


def mul(a: int, b: int) -> int:
    if _check(a) == ZERO or _check(b) == ZERO:
        return ZERO
    return _EXP[(_LOG[a] + _LOG[b]) % 3]


def conj(e: int) -> int:
    """Frobenius map ``e -> e^2``; swaps w and wbar."""
    _check(e)
    return ((e & 1) << 1) | (e >> 1)


def trace(e: int) -> int:
    """Absolute trace ``e + e^2`` to GF(2)."""
    _check(e)
    return (e & 1) ^ (e >> 1)


def inverse(e: int) -> int:
    if _check(e) == ZERO:
        raise ZeroDivisionError("zero has no inverse in GF(4)")
    return _EXP[-_LOG[e] % 3]


# -- row-level bit-plane arithmetic ------------------------------------------


def _scale(z: int, x: int, s: int) -> tuple[int, int]:
    """Multiply every entry of the row ``(z, x)`` by the scalar ``s``."""
    if s == ONE:
        return z, x
    if s == OMEGA:
        return x, z ^ x
    if s == OMEGA_BAR:
        return z ^ x, z
    return 0, 0


def _dot(az: int, ax: int, bz: int, bx: int) -> int:
    """``sum_t a_t b_t`` for two rows in bit-plane form."""
    cross = (az & bx) ^ (ax & bz)
    z = (cross ^ (ax & bx)).bit_count() & 1
    x = (cross ^ (az & bz)).bit_count() & 1
    return z | (x << 1)


def _entry(z: int, x: int, c: int) -> int:
    return ((z >> c) & 1) | (((x >> c) & 1) << 1)


class Gf4Matrix:
    """Immutable matrix over GF(4) stored as per-row z/x bit-planes."""

    __slots__ = ("zrows", "xrows", "rows", "cols")

    def __init__(self, zrows: Iterable[int], xrows: Iterable[int], cols: int):
        self.zrows = tuple(int(r) for r in zrows)
        self.xrows = tuple(int(r) for r in xrows)
        if len(self.zrows) != len(self.xrows):
            raise ShapeError("z and x planes have different row counts")
        limit = 1 << cols
        if any(not 0 <= r < limit for r in self.zrows + self.xrows):
            raise ShapeError(f"row does not fit in {cols} columns")
        self.rows = len(self.zrows)
        self.cols = int(cols)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Gf4Matrix":
        return cls([0] * rows, [0] * rows, cols)

    @classmethod
    def from_codes(cls, array) -> "Gf4Matrix":
        """Build from a 2-D array of element codes (see module docstring)."""
        arr = np.asarray(array, dtype=np.int64)
        if arr.ndim == 1 and arr.size == 0:
            arr = arr.reshape(0, 0)
        if arr.ndim != 2:
            raise ShapeError(f"expected a 2-D array, got {arr.ndim}-D")
        if arr.size and not np.isin(arr, ELEMENTS).all():
            raise ValueError("entries must be GF(4) element codes 0..3")
        z = BinMatrix.from_array(arr & 1)
        x = BinMatrix.from_array(arr >> 1)
        return cls(z.data, x.data, arr.shape[1])

    @classmethod
    def from_strings(cls, lines: Sequence[str]) -> "Gf4Matrix":
        """Parse rows over the alphabet ``0 1 w W`` (``W`` is wbar)."""
        codes = []
        width = None
        for i, line in enumerate(lines):
            row = []
            for j, ch in enumerate(line):
                if ch.isspace():
                    continue
                if ch not in _FROM_SYMBOL:
                    raise ParseError(f"illegal GF(4) symbol {ch!r}", line=i + 1, position=j + 1)
                row.append(_FROM_SYMBOL[ch])
            if width is None:
                width = len(row)
            elif len(row) != width:
                raise ShapeError(f"row {i + 1} has {len(row)} entries, expected {width}")
            codes.append(row)
        if not codes:
            return cls([], [], 0)
        if width == 0:
            return cls([0] * len(codes), [0] * len(codes), 0)
        return cls.from_codes(codes)

    @classmethod
    def from_generators(cls, gs: GeneratorSet) -> "Gf4Matrix":
        """Inverse of :meth:`gamma_rows`."""
        return cls((g.z for g in gs), (g.x for g in gs), gs.n)

    def to_codes(self) -> np.ndarray:
        z = BinMatrix(self.zrows, self.cols).to_array()
        x = BinMatrix(self.xrows, self.cols).to_array()
        return z | (x << 1)

    def to_strings(self) -> list[str]:
        return ["".join(SYMBOLS[int(e)] for e in row) for row in self.to_codes()]

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, index) -> int:
        i, j = index
        if not 0 <= j < self.cols:
            raise IndexError("column index out of range")
        return _entry(self.zrows[i], self.xrows[i], j)

    def conj(self) -> "Gf4Matrix":
        """Entrywise conjugation (no transpose)."""
        return Gf4Matrix(self.xrows, self.zrows, self.cols)

    def scale(self, s: int) -> "Gf4Matrix":
        _check(s)
        pairs = [_scale(z, x, s) for z, x in zip(self.zrows, self.xrows)]
        return Gf4Matrix((p[0] for p in pairs), (p[1] for p in pairs), self.cols)

    def transpose(self) -> "Gf4Matrix":
        return Gf4Matrix.from_codes(self.to_codes().T) if self.rows and self.cols else Gf4Matrix.zeros(self.cols, self.rows)

    @property
    def T(self) -> "Gf4Matrix":
        return self.transpose()

    def vstack(self, other: "Gf4Matrix") -> "Gf4Matrix":
        if self.cols != other.cols:
            raise ShapeError("column mismatch")
        return Gf4Matrix(self.zrows + other.zrows, self.xrows + other.xrows, self.cols)

    def gamma_rows(self) -> GeneratorSet:
        """Apply :func:`gamma` to every row."""
        return GeneratorSet(self.cols, [PauliVector(self.cols, z, x) for z, x in zip(self.zrows, self.xrows)])

    def is_zero(self) -> bool:
        return not any(self.zrows) and not any(self.xrows)

    def __eq__(self, other):
        if not isinstance(other, Gf4Matrix):
            return NotImplemented
        return (self.cols, self.zrows, self.xrows) == (other.cols, other.zrows, other.xrows)

    def __hash__(self):
        return hash((self.cols, self.zrows, self.xrows))

    def __repr__(self):
        return f"Gf4Matrix.from_strings({self.to_strings()!r})"


def gamma(v) -> PauliVector:
    """Map a GF(4) vector to its Pauli operator, ``v = w*z + wbar*x``.

    ``v`` may be a string over ``0 1 w W``, a sequence of element codes, or a
    single-row :class:`Gf4Matrix`.
    """
    if isinstance(v, Gf4Matrix):
        if v.rows != 1:
            raise ShapeError("gamma takes a single row")
        return PauliVector(v.cols, v.zrows[0], v.xrows[0])
    if isinstance(v, str):
        v = Gf4Matrix.from_strings([v]).to_codes()[0] if v else []
    z = x = 0
    for t, e in enumerate(v):
        e = _check(int(e))
        z |= (e & 1) << t
        x |= (e >> 1) << t
    return PauliVector(len(v), z, x)


def gamma_inverse(p: PauliVector) -> list[int]:
    return [_entry(p.z, p.x, t) for t in range(p.n)]


def mul_transpose(a: Gf4Matrix, b: Gf4Matrix) -> Gf4Matrix:
    """``a b^T`` over GF(4)."""
    if a.cols != b.cols:
        raise ShapeError(f"column mismatch: {a.cols} vs {b.cols}")
    zs, xs = [], []
    for az, ax in zip(a.zrows, a.xrows):
        z = x = 0
        for j, (bz, bx) in enumerate(zip(b.zrows, b.xrows)):
            e = _dot(az, ax, bz, bx)
            z |= (e & 1) << j
            x |= (e >> 1) << j
        zs.append(z)
        xs.append(x)
    return Gf4Matrix(zs, xs, b.rows)


def matmul(a: Gf4Matrix, b: Gf4Matrix) -> Gf4Matrix:
    if a.cols != b.rows:
        raise ShapeError(f"cannot multiply {a.shape} by {b.shape}")
    return mul_transpose(a, b.transpose())


def hermitian_product(a: Gf4Matrix, b: Gf4Matrix) -> Gf4Matrix:
    """``a b^dagger`` where dagger is the conjugate transpose."""
    return mul_transpose(a, b.conj())


def trace_product(a: Gf4Matrix, b: Gf4Matrix) -> BinMatrix:
    """Entrywise trace of ``a b^dagger``: ``(i, j) -> sum_t tr(a_it conj(b_jt))``."""
    h = hermitian_product(a, b)
    return BinMatrix((z ^ x for z, x in zip(h.zrows, h.xrows)), h.cols)


def _echelon(m: Gf4Matrix) -> dict[int, tuple[int, int]]:
    """Reduce rows into a basis keyed by leading column, pivots scaled to 1."""
    basis: dict[int, tuple[int, int]] = {}
    for z, x in zip(m.zrows, m.xrows):
        while z | x:
            lead = (z | x).bit_length() - 1
            e = _entry(z, x, lead)
            pivot = basis.get(lead)
            if pivot is None:
                basis[lead] = _scale(z, x, inverse(e))
                break
            pz, px = _scale(pivot[0], pivot[1], e)
            z ^= pz
            x ^= px
    return basis


def rank_gf4(m: Gf4Matrix) -> int:
    """Row rank over GF(4)."""
    return len(_echelon(m))


def rref_gf4(m: Gf4Matrix) -> tuple[Gf4Matrix, list[int]]:
    """Reduced row echelon form (columns scanned left to right) and pivots."""
    zs, xs = list(m.zrows), list(m.xrows)
    pivots = []
    top = 0
    for c in range(m.cols):
        hit = next((i for i in range(top, len(zs)) if _entry(zs[i], xs[i], c)), None)
        if hit is None:
            continue
        zs[top], zs[hit] = zs[hit], zs[top]
        xs[top], xs[hit] = xs[hit], xs[top]
        pz, px = _scale(zs[top], xs[top], inverse(_entry(zs[top], xs[top], c)))
        zs[top], xs[top] = pz, px
        for i in range(len(zs)):
            e = _entry(zs[i], xs[i], c)
            if i != top and e:
                sz, sx = _scale(pz, px, e)
                zs[i] ^= sz
                xs[i] ^= sx
        pivots.append(c)
        top += 1
        if top == len(zs):
            break
    return Gf4Matrix(zs[:top], xs[:top], m.cols), pivots


def nullspace_gf4(m: Gf4Matrix) -> Gf4Matrix:
    """Basis (as rows) of ``{v : m v^T = 0}`` over GF(4)."""
    reduced, pivots = rref_gf4(m)
    pivot_set = set(pivots)
    zs, xs = [], []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        z = x = 1 << f
        for rz, rx, p in zip(reduced.zrows, reduced.xrows, pivots):
            e = _entry(rz, rx, f)
            z |= (e & 1) << p
            x |= (e >> 1) << p
        zs.append(z)
        xs.append(x)
    return Gf4Matrix(zs, xs, m.cols)
