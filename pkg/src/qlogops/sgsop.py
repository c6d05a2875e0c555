"""Symplectic Gram-Schmidt orthogonalization of Pauli generator sets.

:func:`sgsop` walks the generator list front to back.  The front generator
either commutes with everything still unprocessed (it is set aside as
isotropic) or anticommutes with some later generator; in that case the first
such partner is swapped next to it and every remaining generator ``g`` is
replaced by ``g * a^f(g, b) * b^f(g, a)`` so that it commutes with the new
pair ``(a, b)``.  All of this happens in place on one working list, so the
final list holds the processed generators in discovery order.

Every swap and every row change is recorded, which makes the procedure
exactly invertible (:func:`replay_inverse`).
"""

from __future__ import annotations

import gc
from dataclasses import dataclass, field

from . import gf2
from .errors import ReplayError
from .gf2 import BinMatrix
from .pauli import GeneratorSet, PauliVector, omega

__all__ = [
    "SET_ASIDE",
    "PAIR_FOUND",
    "ROW_UPDATE",
    "SgsopStep",
    "SymplecticDecomposition",
    "sgsop",
    "pair_count",
    "standard_form",
    "standard_form_omega",
    "replay_inverse",
]

SET_ASIDE = "set-aside"
PAIR_FOUND = "pair-found"
ROW_UPDATE = "row-update"


@dataclass(frozen=True)
class SgsopStep:
    """One logged action of the procedure.

    ``set-aside``: ``indices=(s,)``, position ``s`` became isotropic.
    ``pair-found``: ``indices=(s, j)``, position ``j`` was swapped into
    ``s + 1`` and ``(s, s + 1)`` became a pair.
    ``row-update``: ``indices=(i, s)``, row ``i`` was multiplied by
    ``W[s]^e1 * W[s+1]^e2`` with ``exponents=(e1, e2)``.
    """

    kind: str
    indices: tuple[int, ...]
    exponents: tuple[int, ...] = ()

    def to_dict(self) -> dict:
        d = {"kind": self.kind, "indices": list(self.indices)}
        if self.exponents:
            d["exponents"] = list(self.exponents)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "SgsopStep":
        return cls(d["kind"], tuple(d["indices"]), tuple(d.get("exponents", ())))


@dataclass(frozen=True)
class SymplecticDecomposition:
    """Symplectic pairs, isotropic remainder and the log that produced them."""

    n: int
    pairs: tuple[tuple[PauliVector, PauliVector], ...]
    isotropic: tuple[PauliVector, ...]
    log: tuple[SgsopStep, ...] = field(default=(), repr=False)

    @property
    def num_pairs(self) -> int:
        return len(self.pairs)

    @property
    def size(self) -> int:
        return 2 * len(self.pairs) + len(self.isotropic)

    def ordered(self) -> GeneratorSet:
        """Pairs first (flattened), then the isotropic generators."""
        flat = [g for pair in self.pairs for g in pair]
        return GeneratorSet(self.n, flat + list(self.isotropic))

    def paired_generators(self) -> GeneratorSet:
        return GeneratorSet(self.n, [g for pair in self.pairs for g in pair])

    def isotropic_generators(self) -> GeneratorSet:
        return GeneratorSet(self.n, self.isotropic)

    def processed(self) -> GeneratorSet:
        """The working list as the procedure left it (discovery order).

        Rebuilt from the log; raises :class:`ReplayError` if the log does not
        match the pair/isotropic counts.
        """
        return GeneratorSet(self.n, _processed_list(self))


def _f(a: tuple[int, int], b: tuple[int, int]) -> int:
    return ((a[0] & b[1]) ^ (a[1] & b[0])).bit_count() & 1


def sgsop(gs: GeneratorSet) -> SymplecticDecomposition:
    """Split ``gs`` into symplectic pairs and an isotropic remainder.

    The partner of the front generator is the earliest later generator that
    anticommutes with it, so the output is fully determined by input order.
    """
    # The sweep allocates one log entry per row update and never builds
    # reference cycles; collector passes over a large heap would only add
    # superlinear noise, so the cyclic GC is paused for its duration.
    paused = gc.isenabled()
    gc.disable()
    try:
        return _sweep(gs)
    finally:
        if paused:
            gc.enable()


def _sweep(gs: GeneratorSet) -> SymplecticDecomposition:
    work = [(g.z, g.x) for g in gs]
    m = len(work)
    log: list[SgsopStep] = []
    pairs = []
    isotropic = []
    s = 0
    while s < m:
        a = work[s]
        j = next((t for t in range(s + 1, m) if _f(a, work[t])), None)
        if j is None:
            isotropic.append(a)
            log.append(SgsopStep(SET_ASIDE, (s,)))
            s += 1
            continue
        work[s + 1], work[j] = work[j], work[s + 1]
        log.append(SgsopStep(PAIR_FOUND, (s, j)))
        b = work[s + 1]
        az, ax = a
        bz, bx = b
        for i in range(s + 2, m):
            z, x = work[i]
            e1 = ((z & bx) ^ (x & bz)).bit_count() & 1
            e2 = ((z & ax) ^ (x & az)).bit_count() & 1
            if e1 or e2:
                if e1:
                    z ^= az
                    x ^= ax
                if e2:
                    z ^= bz
                    x ^= bx
                work[i] = (z, x)
                log.append(SgsopStep(ROW_UPDATE, (i, s), (e1, e2)))
        pairs.append((a, b))
        s += 2

    n = gs.n

    def pv(t):
        return PauliVector(n, t[0], t[1])

    return SymplecticDecomposition(
        n,
        tuple((pv(a), pv(b)) for a, b in pairs),
        tuple(pv(t) for t in isotropic),
        tuple(log),
    )


def pair_count(gs: GeneratorSet) -> int:
    """Number of symplectic pairs, computed as ``rank(omega(gs)) / 2``."""
    return gf2.rank(omega(gs)) // 2


def standard_form(num_pairs: int, num_isotropic: int) -> BinMatrix:
    """``J (+) ... (+) J (+) [0] (+) ... (+) [0]``."""
    return gf2.direct_sum([gf2.J] * num_pairs + [BinMatrix.zeros(1, 1)] * num_isotropic)


def standard_form_omega(d: SymplecticDecomposition) -> BinMatrix:
    """Symplectic product matrix of the decomposition, pairs listed first.

    For a genuine decomposition this equals
    ``standard_form(d.num_pairs, len(d.isotropic))``.
    """
    return omega(d.ordered())


def _processed_list(d: SymplecticDecomposition) -> list[PauliVector]:
    m = d.size
    slots: list[PauliVector | None] = [None] * m
    pairs = iter(d.pairs)
    isotropic = iter(d.isotropic)
    expected = 0
    try:
        for step in d.log:
            if step.kind == SET_ASIDE:
                (s,) = step.indices
                if s != expected:
                    raise ReplayError(f"set-aside at {s}, expected position {expected}")
                slots[s] = next(isotropic)
                expected += 1
            elif step.kind == PAIR_FOUND:
                s, j = step.indices
                if s != expected or not s + 1 <= j < m:
                    raise ReplayError(f"pair-found step {step.indices} out of sequence")
                slots[s], slots[s + 1] = next(pairs)
                expected += 2
            elif step.kind != ROW_UPDATE:
                raise ReplayError(f"unknown step kind {step.kind!r}")
    except (StopIteration, ValueError, IndexError) as exc:
        raise ReplayError(f"log inconsistent with decomposition: {exc}") from None
    if expected != m or next(pairs, None) is not None or next(isotropic, None) is not None:
        raise ReplayError("log does not account for every processed generator")
    return slots  # type: ignore[return-value]


def replay_inverse(d: SymplecticDecomposition) -> GeneratorSet:
    """Undo every logged step to recover the original generator list."""
    work = [(g.z, g.x) for g in _processed_list(d)]
    m = len(work)
    for step in reversed(d.log):
        if step.kind == ROW_UPDATE:
            try:
                i, s = step.indices
                e1, e2 = step.exponents
            except ValueError:
                raise ReplayError(f"malformed row-update {step}") from None
            if not (0 <= s and s + 2 <= i < m) or e1 not in (0, 1) or e2 not in (0, 1):
                raise ReplayError(f"row-update {step.indices} out of range")
            z, x = work[i]
            az, ax = work[s]
            bz, bx = work[s + 1]
            if e1:
                z ^= az
                x ^= ax
            if e2:
                z ^= bz
                x ^= bx
            work[i] = (z, x)
        elif step.kind == PAIR_FOUND:
            s, j = step.indices
            work[s + 1], work[j] = work[j], work[s + 1]
    return GeneratorSet(d.n, [PauliVector(d.n, z, x) for z, x in work])
