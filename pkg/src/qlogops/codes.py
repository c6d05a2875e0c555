"""Quantum codes built from classical codes, and their logical operators.

Every analysis runs the symplectic Gram-Schmidt procedure twice: once on
the check generators (its pairs count the ebits ``c`` an entanglement-assisted
code consumes) and once on the normalizer generators (its pairs are the
logical operators).  The rank formulas relating ``c`` to the classical
generator and parity-check matrices are evaluated alongside and reported as
:class:`FormulaCheck` entries; a disagreement is reported, never raised.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from . import gf2, gf4
from .errors import InvalidCodeError, ShapeError
from .gf2 import BinMatrix
from .gf4 import Gf4Matrix
from .pauli import (
    GeneratorSet,
    PauliVector,
    symplectic_complement,
    symplectic_product,
    to_matrix,
)
from .sgsop import SymplecticDecomposition, pair_count, sgsop

__all__ = [
    "CssCodePair",
    "Gf4Code",
    "FormulaCheck",
    "CodeReport",
    "css_check_matrix",
    "css_normalizer",
    "css_entanglement_G",
    "css_entanglement_H",
    "analyze_css",
    "crss_check_matrix",
    "crss_normalizer",
    "crss_entanglement_G",
    "crss_entanglement_H",
    "analyze_crss",
    "analyze_stabilizer",
]


@dataclass(frozen=True)
class CssCodePair:
    """Two classical binary codes ``C1 = rowspace(G1)``, ``C2 = rowspace(G2)``.

    Parity checks are derived as kernel bases when omitted.  Supplied checks
    must have full row rank ``n - k`` and satisfy ``H G^T = 0``.
    """

    G1: BinMatrix
    G2: BinMatrix
    H1: Optional[BinMatrix] = None
    H2: Optional[BinMatrix] = None

    def __post_init__(self):
        n = self.G1.cols
        if self.G2.cols != n:
            raise ShapeError(f"G1 has {n} columns but G2 has {self.G2.cols}")
        for name in ("G1", "G2"):
            g = getattr(self, name)
            if gf2.rank(g) != g.rows:
                raise InvalidCodeError(f"{name} does not have full row rank")
        for gname, hname in (("G1", "H1"), ("G2", "H2")):
            g = getattr(self, gname)
            h = getattr(self, hname)
            if h is None:
                object.__setattr__(self, hname, gf2.nullspace(g))
                continue
            if h.cols != n:
                raise ShapeError(f"{hname} has {h.cols} columns, expected {n}")
            if not gf2.mul(h, g.T).is_zero():
                raise InvalidCodeError(f"{hname} {gname}^T != 0")
            if h.rows != n - g.rows or gf2.rank(h) != h.rows:
                raise InvalidCodeError(
                    f"{hname} must have full row rank n - k = {n - g.rows}"
                )

    @classmethod
    def from_checks(cls, H1: BinMatrix, H2: BinMatrix) -> "CssCodePair":
        """Build from parity checks only; generators are kernel bases."""
        for name, h in (("H1", H1), ("H2", H2)):
            if gf2.rank(h) != h.rows:
                raise InvalidCodeError(f"{name} does not have full row rank")
        return cls(gf2.nullspace(H1), gf2.nullspace(H2), H1, H2)

    @property
    def n(self) -> int:
        return self.G1.cols

    @property
    def k1(self) -> int:
        return self.G1.rows

    @property
    def k2(self) -> int:
        return self.G2.rows


@dataclass(frozen=True)
class Gf4Code:
    """Classical GF(4)-linear code with generator ``G`` and parity check ``H``."""

    G: Gf4Matrix
    H: Optional[Gf4Matrix] = None

    def __post_init__(self):
        n = self.G.cols
        if gf4.rank_gf4(self.G) != self.G.rows:
            raise InvalidCodeError("G does not have full row rank over GF(4)")
        if self.H is None:
            object.__setattr__(self, "H", gf4.nullspace_gf4(self.G))
            return
        if self.H.cols != n:
            raise ShapeError(f"H has {self.H.cols} columns, expected {n}")
        if not gf4.mul_transpose(self.H, self.G).is_zero():
            raise InvalidCodeError("H G^T != 0")
        if self.H.rows != n - self.G.rows or gf4.rank_gf4(self.H) != self.H.rows:
            raise InvalidCodeError(f"H must have full row rank n - k = {n - self.G.rows}")

    @classmethod
    def from_check(cls, H: Gf4Matrix) -> "Gf4Code":
        if gf4.rank_gf4(H) != H.rows:
            raise InvalidCodeError("H does not have full row rank over GF(4)")
        return cls(gf4.nullspace_gf4(H), H)

    @property
    def n(self) -> int:
        return self.G.cols

    @property
    def k(self) -> int:
        return self.G.rows


@dataclass(frozen=True)
class FormulaCheck:
    name: str
    lhs: object
    rhs: object

    @property
    def agree(self) -> bool:
        return self.lhs == self.rhs

    def to_dict(self) -> dict:
        return {"name": self.name, "lhs": self.lhs, "rhs": self.rhs, "agree": self.agree}


@dataclass(frozen=True)
class CodeReport:
    """Parameters and operators of an analysed code.

    ``n`` physical qubits on the sender's side, ``k`` logical qubits, ``c``
    ebits, ``m`` check generators (``m = i + 2c``), ``p`` normalizer
    generators (``p = i + 2l``) and ``l`` logical pairs.
    """

    family: str
    n: int
    k: int
    c: int
    i: int
    l: int
    m: int
    p: int
    logical_pairs: tuple[tuple[PauliVector, PauliVector], ...]
    isotropic_gens: tuple[PauliVector, ...]
    entanglement_pairs: tuple[tuple[PauliVector, PauliVector], ...] = ()
    formula_checks: tuple[FormulaCheck, ...] = ()
    notes: tuple[str, ...] = field(default=())

    @property
    def is_entanglement_assisted(self) -> bool:
        return self.c > 0

    @property
    def kind(self) -> str:
        return "entanglement-assisted" if self.c else "stabilizer"

    @property
    def all_checks_pass(self) -> bool:
        return all(fc.agree for fc in self.formula_checks)

    def failed_checks(self) -> list[FormulaCheck]:
        return [fc for fc in self.formula_checks if not fc.agree]

    def to_dict(self) -> dict:
        def pairs(ps):
            return [[str(a), str(b)] for a, b in ps]

        return {
            "family": self.family,
            "kind": self.kind,
            "n": self.n,
            "k": self.k,
            "c": self.c,
            "l": self.l,
            "i": self.i,
            "m": self.m,
            "p": self.p,
            "logical_pairs": pairs(self.logical_pairs),
            "isotropic_generators": [str(g) for g in self.isotropic_gens],
            "entanglement_pairs": pairs(self.entanglement_pairs),
            "formula_checks": [fc.to_dict() for fc in self.formula_checks],
            "notes": list(self.notes),
        }


# -- shared bookkeeping -------------------------------------------------------


def _commute_all(a: GeneratorSet, b: GeneratorSet) -> bool:
    return all(symplectic_product(g, h) == 0 for g in a for h in b)


def _decomposition_checks(
    checks: GeneratorSet,
    normalizer: GeneratorSet,
    ds: SymplecticDecomposition,
    dn: SymplecticDecomposition,
) -> list[FormulaCheck]:
    c, i, l = ds.num_pairs, len(ds.isotropic), dn.num_pairs
    iso_s = ds.isotropic_generators()
    iso_n = dn.isotropic_generators()
    logical = dn.paired_generators()
    return [
        FormulaCheck("rank(Omega_S)/2 = c", pair_count(checks), c),
        FormulaCheck("rank(Omega_N)/2 = l", pair_count(normalizer), l),
        FormulaCheck("m = i + 2c", len(checks), i + 2 * c),
        FormulaCheck("p = i + 2l", len(normalizer), i + 2 * l),
        FormulaCheck(
            "isotropic sets generate the same group",
            gf2.row_space_equal(to_matrix(iso_s), to_matrix(iso_n)),
            True,
        ),
        FormulaCheck("normalizer commutes with checks", _commute_all(normalizer, checks), True),
        FormulaCheck("logical operators commute with isotropic set", _commute_all(logical, iso_n), True),
    ]


# -- CSS ----------------------------------------------------------------------


def css_check_matrix(code: CssCodePair) -> GeneratorSet:
    """``[[H1, 0], [0, H2]]`` in ``(Z | X)`` layout: H1 rows Z-type, H2 rows X-type."""
    n = code.n
    gens = [PauliVector(n, z=r) for r in code.H1.data]
    gens += [PauliVector(n, x=r) for r in code.H2.data]
    return GeneratorSet(n, gens)


def css_normalizer(code: CssCodePair) -> GeneratorSet:
    """``[[0, G1], [G2, 0]]`` in ``(Z | X)`` layout: G1 rows X-type, G2 rows Z-type."""
    for name, g in (("G1", code.G1), ("G2", code.G2)):
        if gf2.rank(g) != g.rows:
            raise InvalidCodeError(f"{name} does not have full row rank")
    n = code.n
    gens = [PauliVector(n, x=r) for r in code.G1.data]
    gens += [PauliVector(n, z=r) for r in code.G2.data]
    return GeneratorSet(n, gens)


def css_entanglement_G(code: CssCodePair) -> int:
    """Ebits from ``rank(G1 G2^T) = k1 + k2 - n + c``."""
    c = gf2.rank(gf2.mul(code.G1, code.G2.T)) - (code.k1 + code.k2 - code.n)
    if c < 0:
        raise InvalidCodeError(f"rank(G1 G2^T) implies negative ebit count {c}")
    return c


def css_entanglement_H(code: CssCodePair) -> int:
    """Ebits from ``rank(H1 H2^T) = c``."""
    return gf2.rank(gf2.mul(code.H1, code.H2.T))


def analyze_css(code: CssCodePair) -> CodeReport:
    n, k1, k2 = code.n, code.k1, code.k2
    checks = css_check_matrix(code)
    normalizer = css_normalizer(code)
    ds = sgsop(checks)
    dn = sgsop(normalizer)
    c = ds.num_pairs
    k = k1 + k2 - n + c
    formula = [
        FormulaCheck("rank(G1 G2^T) = k1 + k2 - n + c", gf2.rank(gf2.mul(code.G1, code.G2.T)), k),
        FormulaCheck("rank(H1 H2^T) = c", css_entanglement_H(code), c),
        FormulaCheck("p = k1 + k2", len(normalizer), k1 + k2),
        FormulaCheck("l = k", dn.num_pairs, k),
    ]
    formula += _decomposition_checks(checks, normalizer, ds, dn)
    return CodeReport(
        family="css",
        n=n,
        k=k,
        c=c,
        i=len(ds.isotropic),
        l=dn.num_pairs,
        m=len(checks),
        p=len(normalizer),
        logical_pairs=dn.pairs,
        isotropic_gens=dn.isotropic,
        entanglement_pairs=ds.pairs,
        formula_checks=tuple(formula),
    )


# -- CRSS ---------------------------------------------------------------------


def crss_check_matrix(code: Gf4Code) -> GeneratorSet:
    """``gamma([[w H], [wbar H]])``."""
    stacked = code.H.scale(gf4.OMEGA).vstack(code.H.scale(gf4.OMEGA_BAR))
    return stacked.gamma_rows()


def crss_normalizer(code: Gf4Code) -> GeneratorSet:
    """``gamma([[w G*], [wbar G*]])`` with ``G*`` the entrywise conjugate of ``G``."""
    gstar = code.G.conj()
    return gstar.scale(gf4.OMEGA).vstack(gstar.scale(gf4.OMEGA_BAR)).gamma_rows()


def crss_entanglement_G(code: Gf4Code) -> int:
    """Ebits from ``rank(G G^dagger) = 2k - n + c``."""
    c = gf4.rank_gf4(gf4.hermitian_product(code.G, code.G)) - (2 * code.k - code.n)
    if c < 0:
        raise InvalidCodeError(f"rank(G G^dagger) implies negative ebit count {c}")
    return c


def crss_entanglement_H(code: Gf4Code) -> int:
    """Ebits from ``rank(H H^dagger) = c``."""
    return gf4.rank_gf4(gf4.hermitian_product(code.H, code.H))


def analyze_crss(code: Gf4Code) -> CodeReport:
    n, kc = code.n, code.k
    checks = crss_check_matrix(code)
    normalizer = crss_normalizer(code)
    ds = sgsop(checks)
    dn = sgsop(normalizer)
    c = ds.num_pairs
    k = 2 * kc - n + c
    formula = [
        FormulaCheck(
            "rank(G G^dagger) = 2k - n + c",
            gf4.rank_gf4(gf4.hermitian_product(code.G, code.G)),
            k,
        ),
        FormulaCheck("rank(H H^dagger) = c", crss_entanglement_H(code), c),
        FormulaCheck("p = 2k", len(normalizer), 2 * kc),
        FormulaCheck("l = 2k - n + c", dn.num_pairs, k),
    ]
    formula += _decomposition_checks(checks, normalizer, ds, dn)
    return CodeReport(
        family="crss",
        n=n,
        k=k,
        c=c,
        i=len(ds.isotropic),
        l=dn.num_pairs,
        m=len(checks),
        p=len(normalizer),
        logical_pairs=dn.pairs,
        isotropic_gens=dn.isotropic,
        entanglement_pairs=ds.pairs,
        formula_checks=tuple(formula),
    )


# -- general stabilizer / entanglement-assisted -------------------------------


def analyze_stabilizer(gs: GeneratorSet, normalizer: Optional[GeneratorSet] = None) -> CodeReport:
    """Analyse an arbitrary (possibly nonabelian) generator set.

    Without ``normalizer`` a basis of the full symplectic complement of
    ``gs`` is used.  A supplied normalizer must commute with every generator
    in ``gs``; whether it spans the whole normalizer is reported as a check.
    """
    n = gs.n
    notes = []
    if normalizer is None:
        normalizer = symplectic_complement(gs)
        notes.append("normalizer derived as symplectic complement")
    else:
        if normalizer.n != n:
            raise ShapeError(f"normalizer acts on {normalizer.n} qubits, expected {n}")
        for a, g in enumerate(normalizer):
            for b, h in enumerate(gs):
                if symplectic_product(g, h):
                    raise InvalidCodeError(
                        f"normalizer generator {a} ({g}) anticommutes with generator {b} ({h})"
                    )
    ds = sgsop(gs)
    dn = sgsop(normalizer)
    c = ds.num_pairs
    rank_s = gf2.rank(to_matrix(gs))
    k = n - rank_s + c
    formula = [
        FormulaCheck("l = n - rank(S) + c", dn.num_pairs, k),
        FormulaCheck("rank(N) = 2n - rank(S)", gf2.rank(to_matrix(normalizer)), 2 * n - rank_s),
    ]
    formula += _decomposition_checks(gs, normalizer, ds, dn)
    return CodeReport(
        family="stabilizer",
        n=n,
        k=k,
        c=c,
        i=len(ds.isotropic),
        l=dn.num_pairs,
        m=len(gs),
        p=len(normalizer),
        logical_pairs=dn.pairs,
        isotropic_gens=dn.isotropic,
        entanglement_pairs=ds.pairs,
        formula_checks=tuple(formula),
        notes=tuple(notes),
    )
