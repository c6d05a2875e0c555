"""Dense linear algebra over GF(2) with bit-packed rows.

Each row of a :class:`BinMatrix` is stored as a Python ``int`` whose bit ``j``
holds column ``j``.  Row addition is a single XOR on arbitrary-precision
integers, which CPython executes one machine word at a time.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .errors import ShapeError

__all__ = [
    "BinMatrix",
    "mul",
    "transpose",
    "rank",
    "rref",
    "nullspace",
    "row_space_equal",
    "direct_sum",
    "J",
]


def _bits(value: int):
    """Yield the indices of the set bits of ``value`` in increasing order."""
    while value:
        low = value & -value
        yield low.bit_length() - 1
        value ^= low


class BinMatrix:
    """Immutable binary matrix with bit-packed rows.

    Parameters
    ----------
    data : iterable of int
        One integer per row; bit ``j`` of row ``i`` is entry ``(i, j)``.
    cols : int
        Number of columns.  Every row must fit in ``cols`` bits.
    """

    __slots__ = ("data", "rows", "cols")

    def __init__(self, data: Iterable[int], cols: int):
        data = tuple(int(r) for r in data)
        cols = int(cols)
        if cols < 0:
            raise ShapeError("negative column count")
        limit = 1 << cols
        for i, r in enumerate(data):
            if r < 0 or r >= limit:
                raise ShapeError(f"row {i} does not fit in {cols} columns")
        self.data = data
        self.rows = len(data)
        self.cols = cols

    # -- construction -----------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BinMatrix":
        return cls([0] * rows, cols)

    @classmethod
    def identity(cls, n: int) -> "BinMatrix":
        return cls([1 << i for i in range(n)], n)

    @classmethod
    def from_array(cls, array) -> "BinMatrix":
        """Build from any 2-D array-like of 0/1 entries."""
        arr = np.asarray(array)
        if arr.ndim == 1 and arr.size == 0:
            arr = arr.reshape(0, 0)
        if arr.ndim != 2:
            raise ShapeError(f"expected a 2-D array, got {arr.ndim}-D")
        if arr.size and not np.isin(arr, (0, 1)).all():
            raise ValueError("entries must be 0 or 1")
        rows, cols = arr.shape
        if cols == 0:
            return cls([0] * rows, 0)
        packed = np.packbits(arr.astype(np.uint8), axis=1, bitorder="little")
        return cls((int.from_bytes(p.tobytes(), "little") for p in packed), cols)

    @classmethod
    def from_strings(cls, lines: Sequence[str]) -> "BinMatrix":
        """Build from strings such as ``"1011"`` (whitespace ignored)."""
        lines = ["".join(s.split()) for s in lines]
        if not lines:
            return cls([], 0)
        cols = len(lines[0])
        if any(len(s) != cols for s in lines):
            raise ShapeError("rows have different lengths")
        return cls.from_array([[int(ch) for ch in s] for s in lines]) if cols else cls([0] * len(lines), 0)

    # -- conversion -------------------------------------------------------

    def to_array(self) -> np.ndarray:
        """Return an unpacked ``uint8`` array of shape ``(rows, cols)``."""
        nbytes = (self.cols + 7) // 8
        out = np.zeros((self.rows, self.cols), dtype=np.uint8)
        if nbytes == 0:
            return out
        for i, r in enumerate(self.data):
            buf = np.frombuffer(r.to_bytes(nbytes, "little"), dtype=np.uint8)
            out[i] = np.unpackbits(buf, bitorder="little")[: self.cols]
        return out

    def to_strings(self) -> list[str]:
        return ["".join(str(b) for b in row) for row in self.to_array()]

    # -- protocol ---------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def T(self) -> "BinMatrix":
        return transpose(self)

    def __getitem__(self, index):
        i, j = index
        if not 0 <= j < self.cols:
            raise IndexError("column index out of range")
        return (self.data[i] >> j) & 1

    def row(self, i: int) -> int:
        return self.data[i]

    def is_zero(self) -> bool:
        return not any(self.data)

    def __eq__(self, other):
        if not isinstance(other, BinMatrix):
            return NotImplemented
        return self.cols == other.cols and self.data == other.data

    def __hash__(self):
        return hash((self.cols, self.data))

    def __add__(self, other: "BinMatrix") -> "BinMatrix":
        if self.shape != other.shape:
            raise ShapeError(f"cannot add {self.shape} and {other.shape}")
        return BinMatrix((a ^ b for a, b in zip(self.data, other.data)), self.cols)

    def __matmul__(self, other: "BinMatrix") -> "BinMatrix":
        return mul(self, other)

    def __repr__(self):
        body = ", ".join(repr(s) for s in self.to_strings())
        return f"BinMatrix.from_strings([{body}])" if self.cols else f"BinMatrix.zeros({self.rows}, 0)"


J = BinMatrix([0b10, 0b01], 2)


def mul(a: BinMatrix, b: BinMatrix) -> BinMatrix:
    """Matrix product over GF(2)."""
    if a.cols != b.rows:
        raise ShapeError(f"cannot multiply {a.shape} by {b.shape}")
    bd = b.data
    out = []
    for r in a.data:
        acc = 0
        for t in _bits(r):
            acc ^= bd[t]
        out.append(acc)
    return BinMatrix(out, b.cols)


def transpose(m: BinMatrix) -> BinMatrix:
    if m.rows == 0 or m.cols == 0:
        return BinMatrix([0] * m.cols, m.rows)
    return BinMatrix.from_array(m.to_array().T)


def _echelon_basis(rows: Iterable[int]) -> dict[int, int]:
    """Reduce ``rows`` into a basis keyed by each vector's leading bit."""
    basis: dict[int, int] = {}
    for r in rows:
        while r:
            lead = r.bit_length() - 1
            pivot = basis.get(lead)
            if pivot is None:
                basis[lead] = r
                break
            r ^= pivot
    return basis


def _reduce(v: int, basis: dict[int, int]) -> int:
    while v:
        pivot = basis.get(v.bit_length() - 1)
        if pivot is None:
            return v
        v ^= pivot
    return 0


def rank(m: BinMatrix) -> int:
    """Row rank over GF(2).  The input is left untouched."""
    return len(_echelon_basis(m.data))


def rref(m: BinMatrix) -> tuple[BinMatrix, list[int]]:
    """Reduced row echelon form, scanning columns left to right.

    Returns the nonzero rows of the reduced matrix and the pivot column of
    each of them.
    """
    rows = list(m.data)
    pivots = []
    top = 0
    for c in range(m.cols):
        bit = 1 << c
        hit = next((i for i in range(top, len(rows)) if rows[i] & bit), None)
        if hit is None:
            continue
        rows[top], rows[hit] = rows[hit], rows[top]
        p = rows[top]
        for i in range(len(rows)):
            if i != top and rows[i] & bit:
                rows[i] ^= p
        pivots.append(c)
        top += 1
        if top == len(rows):
            break
    return BinMatrix(rows[:top], m.cols), pivots


def nullspace(m: BinMatrix) -> BinMatrix:
    """Basis of ``{v : m v^T = 0}`` as the rows of a matrix."""
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    out = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        v = 1 << f
        for row, p in zip(reduced.data, pivots):
            if (row >> f) & 1:
                v |= 1 << p
        out.append(v)
    return BinMatrix(out, m.cols)


def row_space_equal(a: BinMatrix, b: BinMatrix) -> bool:
    """True when the rows of ``a`` and ``b`` span the same subspace."""
    if a.cols != b.cols:
        raise ShapeError(f"column mismatch: {a.cols} vs {b.cols}")
    basis_a = _echelon_basis(a.data)
    basis_b = _echelon_basis(b.data)
    return all(_reduce(r, basis_b) == 0 for r in a.data) and all(
        _reduce(r, basis_a) == 0 for r in b.data
    )


def direct_sum(blocks: Sequence[BinMatrix]) -> BinMatrix:
    """Block-diagonal assembly of ``blocks``."""
    out = []
    offset = 0
    for blk in blocks:
        out.extend(r << offset for r in blk.data)
        offset += blk.cols
    return BinMatrix(out, offset)
