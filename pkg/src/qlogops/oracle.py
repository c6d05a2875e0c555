"""Brute-force recomputation of everything the fast path produces.

The helpers here work on plain lists of 0/1 integers with textbook loops and
deliberately avoid the bit-packed kernels in :mod:`qlogops.gf2`,
:mod:`qlogops.gf4` and :mod:`qlogops.sgsop`.  Random instances are drawn from
``numpy.random.default_rng`` and are reproducible from their seed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from . import gf2, gf4
from .codes import CssCodePair, Gf4Code, analyze_crss, analyze_css
from .errors import GenerationError, ReplayError
from .gf2 import BinMatrix
from .gf4 import Gf4Matrix
from .pauli import GeneratorSet, PauliVector, from_matrix, symplectic_product
from .sgsop import SymplecticDecomposition, replay_inverse, sgsop

__all__ = [
    "Check",
    "VerificationReport",
    "naive_mul",
    "naive_rank",
    "naive_rank_gf4",
    "pairwise_omega",
    "verify_decomposition",
    "random_generator_set",
    "random_code",
    "css_oracle_report",
    "crss_oracle_report",
    "run_trial",
    "run_random_suite",
]

_MAX_TRIES = 1000


@dataclass(frozen=True)
class Check:
    name: str
    expected: object
    actual: object

    @property
    def passed(self) -> bool:
        return self.expected == self.actual

    def to_dict(self) -> dict:
        return {"name": self.name, "expected": self.expected, "actual": self.actual, "pass": self.passed}


@dataclass
class VerificationReport:
    checks: list[Check] = field(default_factory=list)
    seed: Optional[int] = None

    def add(self, name: str, expected, actual) -> None:
        self.checks.append(Check(name, expected, actual))

    def extend(self, other: "VerificationReport", prefix: str = "") -> None:
        self.checks.extend(Check(prefix + c.name, c.expected, c.actual) for c in other.checks)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "passed": self.passed,
            "num_checks": len(self.checks),
            "failures": [c.to_dict() for c in self.failures()],
        }


# -- naive linear algebra -----------------------------------------------------


def _unpack(m: BinMatrix) -> list[list[int]]:
    return [[(r >> j) & 1 for j in range(m.cols)] for r in m.data]


def naive_mul(a: BinMatrix, b: BinMatrix) -> list[list[int]]:
    """Triple-loop product over GF(2) on unpacked entries."""
    A, B = _unpack(a), _unpack(b)
    out = [[0] * b.cols for _ in range(a.rows)]
    for i in range(a.rows):
        for j in range(b.cols):
            s = 0
            for t in range(a.cols):
                s += A[i][t] * B[t][j]
            out[i][j] = s % 2
    return out


def naive_rank(m) -> int:
    """Row-echelon rank over GF(2) of a :class:`BinMatrix` or nested lists."""
    rows = _unpack(m) if isinstance(m, BinMatrix) else [list(r) for r in m]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(rows)):
            if rows[i][c] % 2:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c] % 2:
                rows[i] = [(u + v) % 2 for u, v in zip(rows[i], rows[r])]
        r += 1
    return r


# GF(4) as polynomials a0 + a1*w with w^2 = w + 1; independent of gf4's encoding.
_POLY = {gf4.ZERO: (0, 0), gf4.ONE: (1, 0), gf4.OMEGA: (0, 1), gf4.OMEGA_BAR: (1, 1)}


def _padd(a, b):
    return ((a[0] + b[0]) % 2, (a[1] + b[1]) % 2)


def _pmul(a, b):
    c0 = a[0] * b[0]
    c1 = a[0] * b[1] + a[1] * b[0]
    c2 = a[1] * b[1]
    return ((c0 + c2) % 2, (c1 + c2) % 2)


def _pinv(a):
    for b in ((1, 0), (0, 1), (1, 1)):
        if _pmul(a, b) == (1, 0):
            return b
    raise ZeroDivisionError


def naive_rank_gf4(m: Gf4Matrix) -> int:
    """Rank over GF(4) using polynomial-basis arithmetic."""
    rows = [[_POLY[int(e)] for e in row] for row in m.to_codes()]
    r = 0
    for c in range(m.cols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != (0, 0)), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = _pinv(rows[r][c])
        rows[r] = [_pmul(inv, e) for e in rows[r]]
        for i in range(len(rows)):
            f = rows[i][c]
            if i != r and f != (0, 0):
                rows[i] = [_padd(u, _pmul(f, v)) for u, v in zip(rows[i], rows[r])]
        r += 1
    return r


def naive_commutator(g: PauliVector, h: PauliVector) -> int:
    """Count qubits where the single-qubit factors anticommute, mod 2."""
    count = 0
    for t in range(g.n):
        a = ((g.z >> t) & 1, (g.x >> t) & 1)
        b = ((h.z >> t) & 1, (h.x >> t) & 1)
        if a != (0, 0) and b != (0, 0) and a != b:
            count += 1
    return count % 2


def pairwise_omega(gs: GeneratorSet) -> BinMatrix:
    """Symplectic product matrix built one :func:`symplectic_product` at a time."""
    m = len(gs)
    rows = []
    for i in range(m):
        r = 0
        for j in range(m):
            if symplectic_product(gs[i], gs[j]):
                r |= 1 << j
        rows.append(r)
    return BinMatrix(rows, m)


def _rows(gs: Sequence[PauliVector], n: int) -> list[list[int]]:
    return [[(g.z >> t) & 1 for t in range(n)] + [(g.x >> t) & 1 for t in range(n)] for g in gs]


def verify_decomposition(
    original: GeneratorSet, d: SymplecticDecomposition, seed: Optional[int] = None
) -> VerificationReport:
    """Check a decomposition of ``original`` against its full contract."""
    report = VerificationReport(seed=seed)
    n = original.n
    flat = [g for pair in d.pairs for g in pair]
    members = flat + list(d.isotropic)
    group_of = [t // 2 for t in range(len(flat))] + [None] * len(d.isotropic)

    bad_pairs = sum(1 for a, b in d.pairs if naive_commutator(a, b) != 1)
    report.add("pairs anticommute", 0, bad_pairs)
    bad_cross = 0
    for u in range(len(members)):
        for v in range(u + 1, len(members)):
            if group_of[u] is not None and group_of[u] == group_of[v]:
                continue
            bad_cross += naive_commutator(members[u], members[v])
    report.add("distinct groups commute", 0, bad_cross)

    orig_rows = _rows(original.gens, n)
    out_rows = _rows(members, n)
    r_in, r_out = naive_rank(orig_rows), naive_rank(out_rows)
    r_both = naive_rank(orig_rows + out_rows)
    report.add("group preserved", True, r_in == r_out == r_both)

    report.add("2*pairs + isotropic = m", len(original), 2 * len(d.pairs) + len(d.isotropic))

    try:
        replayed = replay_inverse(d)
        round_trip = replayed.gens == original.gens
    except ReplayError:
        round_trip = False
    report.add("replay reproduces input", True, round_trip)

    omega_rank = naive_rank(pairwise_omega(original))
    report.add("rank(Omega)/2 = pairs", omega_rank // 2, len(d.pairs))
    return report


# -- random instances ---------------------------------------------------------


def _rng(seed):
    return seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)


def random_generator_set(n: int, m: int, seed=None) -> GeneratorSet:
    rng = _rng(seed)
    bits = rng.integers(0, 2, size=(m, 2 * n))
    return GeneratorSet(n, [PauliVector.from_bits(row[:n], row[n:]) for row in bits])


def _full_rank_binary(rng, rows: int, cols: int) -> BinMatrix:
    for _ in range(_MAX_TRIES):
        m = BinMatrix.from_array(rng.integers(0, 2, size=(rows, cols))) if cols else BinMatrix.zeros(rows, 0)
        if gf2.rank(m) == rows:
            return m
    raise GenerationError(f"no full-rank {rows}x{cols} binary matrix after {_MAX_TRIES} tries")


def _full_rank_gf4(rng, rows: int, cols: int) -> Gf4Matrix:
    for _ in range(_MAX_TRIES):
        m = Gf4Matrix.from_codes(rng.integers(0, 4, size=(rows, cols))) if cols else Gf4Matrix.zeros(rows, 0)
        if gf4.rank_gf4(m) == rows:
            return m
    raise GenerationError(f"no full-rank {rows}x{cols} GF(4) matrix after {_MAX_TRIES} tries")


def _random_combination(rng, basis_z, basis_x):
    coeffs = rng.integers(0, 4, size=len(basis_z))
    z = x = 0
    for s, bz, bx in zip(coeffs, basis_z, basis_x):
        sz, sx = gf4._scale(bz, bx, int(s))
        z ^= sz
        x ^= sx
    return z, x


def _self_orthogonal_gf4(rng, rows: int, n: int) -> Gf4Matrix:
    """Random Hermitian self-orthogonal matrix with full row rank."""
    if 2 * rows > n:
        raise GenerationError(f"no {rows}-dimensional self-orthogonal code in length {n}")
    for _ in range(_MAX_TRIES):
        h = Gf4Matrix.zeros(0, n)
        for _ in range(_MAX_TRIES):
            if h.rows == rows:
                return h
            dual = gf4.nullspace_gf4(h.conj())
            z, x = _random_combination(rng, dual.zrows, dual.xrows)
            # a vector is Hermitian self-orthogonal iff its weight is even
            if (z | x).bit_count() % 2:
                continue
            cand = h.vstack(Gf4Matrix([z], [x], n))
            if gf4.rank_gf4(cand) == cand.rows:
                h = cand
    raise GenerationError(f"could not build a self-orthogonal {rows}x{n} matrix")


def random_code(
    kind: str,
    n: int,
    seed=None,
    *,
    k1: Optional[int] = None,
    k2: Optional[int] = None,
    k: Optional[int] = None,
    m: Optional[int] = None,
    orthogonal: bool = False,
):
    """Draw a random code.

    ``kind="css"`` returns a :class:`CssCodePair` (dimensions ``k1``, ``k2``);
    ``kind="crss"`` a :class:`Gf4Code` (dimension ``k``); ``kind="stabilizer"``
    a :class:`GeneratorSet` of ``m`` independent generators.  Unspecified
    dimensions are drawn at random.  With ``orthogonal=True`` the CSS checks
    satisfy ``H1 H2^T = 0`` and the CRSS check is trace-orthogonal, so no
    entanglement is needed.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    rng = _rng(seed)
    if kind == "css":
        if orthogonal:
            k1 = int(rng.integers((n + 1) // 2, n + 1)) if k1 is None else k1
            k2 = int(rng.integers(n - k1, n + 1)) if k2 is None else k2
            if n - k2 > k1:
                raise GenerationError("orthogonal CSS pair needs n - k2 <= k1")
            h1 = _full_rank_binary(rng, n - k1, n)
            ker = gf2.nullspace(h1)
            h2 = gf2.mul(_full_rank_binary(rng, n - k2, ker.rows), ker) if n - k2 else BinMatrix.zeros(0, n)
            return CssCodePair.from_checks(h1, h2)
        k1 = int(rng.integers(0, n + 1)) if k1 is None else k1
        k2 = int(rng.integers(0, n + 1)) if k2 is None else k2
        return CssCodePair(_full_rank_binary(rng, k1, n), _full_rank_binary(rng, k2, n))
    if kind == "crss":
        if orthogonal:
            k = int(rng.integers((n + 1) // 2, n + 1)) if k is None else k
            return Gf4Code.from_check(_self_orthogonal_gf4(rng, n - k, n))
        k = int(rng.integers(0, n + 1)) if k is None else k
        return Gf4Code(_full_rank_gf4(rng, k, n))
    if kind == "stabilizer":
        m = int(rng.integers(0, 2 * n + 1)) if m is None else m
        if not 0 <= m <= 2 * n:
            raise GenerationError(f"cannot draw {m} independent generators on {n} qubits")
        return from_matrix(_full_rank_binary(rng, m, 2 * n))
    raise ValueError(f"unknown code kind {kind!r}")


# -- randomized suite ---------------------------------------------------------


def css_oracle_report(code: CssCodePair, prefix: str = "") -> VerificationReport:
    """Naive recomputation of both CSS ebit formulas plus the analysis checks."""
    rep = VerificationReport()
    r = analyze_css(code)
    g_rank = naive_rank(naive_mul(code.G1, code.G2.T))
    h_rank = naive_rank(naive_mul(code.H1, code.H2.T))
    rep.add(prefix + "rank(G1 G2^T) = k1 + k2 - n + c", code.k1 + code.k2 - code.n + r.c, g_rank)
    rep.add(prefix + "rank(H1 H2^T) = c", r.c, h_rank)
    for fc in r.formula_checks:
        rep.add(prefix + fc.name, fc.rhs, fc.lhs)
    return rep


def crss_oracle_report(code: Gf4Code, prefix: str = "") -> VerificationReport:
    rep = VerificationReport()
    r = analyze_crss(code)
    g_rank = naive_rank_gf4(gf4.hermitian_product(code.G, code.G))
    h_rank = naive_rank_gf4(gf4.hermitian_product(code.H, code.H))
    rep.add(prefix + "rank(G G^dagger) = 2k - n + c", 2 * code.k - code.n + r.c, g_rank)
    rep.add(prefix + "rank(H H^dagger) = c", r.c, h_rank)
    for fc in r.formula_checks:
        rep.add(prefix + fc.name, fc.rhs, fc.lhs)
    return rep


def run_trial(n_max: int, seed: int, index: int) -> VerificationReport:
    """One randomized trial; reproducible from ``(seed, index)``."""
    rng = np.random.default_rng([seed, index])
    rep = VerificationReport(seed=seed)
    n = int(rng.integers(1, n_max + 1))
    m = int(rng.integers(0, 2 * n_max + 1))
    gs = random_generator_set(n, m, rng)
    rep.extend(verify_decomposition(gs, sgsop(gs)), f"trial {index} sgsop: ")
    rep.extend(css_oracle_report(random_code("css", n, rng), f"trial {index} css: "))
    rep.extend(crss_oracle_report(random_code("crss", n, rng), f"trial {index} crss: "))
    return rep


def run_random_suite(n_max: int, trials: int, seed: int) -> VerificationReport:
    """Run ``trials`` randomized trials with qubit counts up to ``n_max``."""
    report = VerificationReport(seed=seed)
    for t in range(trials):
        report.extend(run_trial(n_max, seed, t))
    return report
