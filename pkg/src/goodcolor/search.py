"""Cyclic colourings with a sum-free blue class and a search for a good b0/b1 split.

In a cyclic colouring of K_N the colour of ``xy`` depends only on
``(y - x) % N``, so a pair (x, y) behaves exactly like (0, y - x).  The
number of z completing (0, d) with colours (a, b) is the circular
cross-correlation of the class indicators, computed by FFT; the deficiency
of a split is ``N`` times the number of unmet (d, need) checks.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Optional

import numpy as np

from .construct import EdgeColoring, build_cyclic_coloring
from .mandate import mandatory_mn

M2 = mandatory_mn(2)


@dataclass(frozen=True)
class DifferenceSet:
    modulus: int
    diffs: frozenset

    def __init__(self, modulus: int, diffs: Iterable[int]):
        diffs = frozenset(int(d) % modulus for d in diffs)
        if modulus < 2:
            raise ValueError("modulus must be at least 2")
        if 0 in diffs:
            raise ValueError("0 is not a difference")
        asym = sorted(d for d in diffs if (modulus - d) not in diffs)
        if asym:
            raise ValueError(f"not closed under negation mod {modulus}: has {asym[0]}, "
                             f"lacks {modulus - asym[0]}")
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "diffs", diffs)

    def orbits(self) -> list[tuple[int, ...]]:
        """The +-orbits {d, modulus - d}, sorted by smallest element."""
        return sorted({tuple(sorted({d, self.modulus - d})) for d in self.diffs})

    def complement(self) -> "DifferenceSet":
        return DifferenceSet(self.modulus, set(range(1, self.modulus)) - self.diffs)

    def __len__(self) -> int:
        return len(self.diffs)


def is_sum_free(d: DifferenceSet) -> bool:
    """True iff no a, b in d (a = b allowed) have (a + b) % modulus in d."""
    return not any((a + b) % d.modulus in d.diffs for a in d.diffs for b in d.diffs)


def extend_to_maximal(d: DifferenceSet) -> DifferenceSet:
    """Greedily add +-orbits (ascending) while the set stays sum-free."""
    if not is_sum_free(d):
        raise ValueError("starting set is not sum-free")
    current = set(d.diffs)
    for orbit in DifferenceSet(d.modulus, range(1, d.modulus)).orbits():
        trial = DifferenceSet(d.modulus, current | set(orbit))
        if is_sum_free(trial):
            current = set(trial.diffs)
    return DifferenceSet(d.modulus, current)


@dataclass(frozen=True)
class SplitCandidate:
    b0: DifferenceSet
    b1: DifferenceSet
    deficiency: int

    def to_dict(self) -> dict:
        return {"deficiency": self.deficiency,
                "b0": sorted(self.b0.diffs), "b1": sorted(self.b1.diffs)}


@dataclass
class SearchResult:
    found: bool
    best: Optional[SplitCandidate]
    trace: list = field(default_factory=list)
    evaluations: int = 0
    reason: str = ""


def split_coloring(red: DifferenceSet, b0: DifferenceSet, b1: DifferenceSet) -> EdgeColoring:
    return build_cyclic_coloring(red.modulus, {"r": sorted(red.diffs), "b0": sorted(b0.diffs),
                                               "b1": sorted(b1.diffs)})


def _class_array(modulus: int, red: Iterable[int], b0: Iterable[int], b1: Iterable[int]) -> np.ndarray:
    cls = np.full(modulus, -1, dtype=np.int64)
    for label, ds in ((0, red), (1, b0), (2, b1)):
        cls[list(ds)] = label
    return cls


def _pair_counts(cls: np.ndarray) -> np.ndarray:
    """counts[a, b, d] = #{z : class(z) = a, class(z - d) = b}."""
    n = len(cls)
    onehot = np.stack([(cls == l).astype(float) for l in range(3)])
    spectra = np.fft.rfft(onehot, axis=1)
    corr = np.fft.irfft(spectra[:, None, :] * np.conj(spectra[None, :, :]), n=n, axis=2)
    return np.rint(corr).astype(np.int64)


def cyclic_deficiency(cls: np.ndarray) -> tuple[int, int]:
    """(unmet ordered-pair needs, all-blue ordered triangles) for a cyclic M2 colouring."""
    n = len(cls)
    counts = _pair_counts(cls)
    unmet = 0
    blue_tri = 0
    d_cls = cls[1:]
    for c1 in range(3):
        at = d_cls == c1
        if not at.any():
            continue
        for a in range(3):
            for b in range(3):
                row = counts[a, b, 1:][at]
                if M2.member[c1, a, b]:
                    unmet += int(np.count_nonzero(row == 0))
                elif c1 and a and b:
                    blue_tri += int(row.sum())
    return n * unmet, n * blue_tri


def _validate_inputs(d: DifferenceSet, red: DifferenceSet, budget: int) -> None:
    if budget < 1:
        raise ValueError("budget must be at least 1")
    if d.modulus != red.modulus:
        raise ValueError("blue and red difference sets have different moduli")
    if d.diffs & red.diffs or (d.diffs | red.diffs) != set(range(1, d.modulus)):
        raise ValueError("blue and red differences must partition [1, modulus - 1]")
    if not is_sum_free(d):
        raise ValueError("blue difference set is not sum-free")


def search_split(d: DifferenceSet, red: DifferenceSet, budget: int = 100_000, seed: int = 0,
                 patience: Optional[int] = None) -> SearchResult:
    """Seeded hill climbing over +-orbit assignments of the blue differences.

    Every evaluation counts against ``budget``.  A climb restarts from a
    random split after ``patience`` consecutive non-improving moves.  The
    trace holds one entry per accepted move.
    """
    _validate_inputs(d, red, budget)
    orbits = d.orbits()
    if len(orbits) < 2:
        return SearchResult(False, None, reason="no symmetric split")
    rng = random.Random(seed)
    patience = patience if patience is not None else max(20, 4 * len(orbits))
    n_orb = len(orbits)
    result = SearchResult(False, None)

    def evaluate(assign: list[int]) -> SplitCandidate:
        b0 = [r for o, s in zip(orbits, assign) if s == 0 for r in o]
        b1 = [r for o, s in zip(orbits, assign) if s == 1 for r in o]
        unmet, blue_tri = cyclic_deficiency(_class_array(d.modulus, red.diffs, b0, b1))
        if blue_tri:
            raise RuntimeError("sum-free blue class produced an all-blue triangle")
        result.evaluations += 1
        return SplitCandidate(DifferenceSet(d.modulus, b0), DifferenceSet(d.modulus, b1), unmet)

    def accept(cand: SplitCandidate) -> None:
        result.trace.append({"step": result.evaluations, **cand.to_dict()})
        if result.best is None or cand.deficiency < result.best.deficiency:
            result.best = cand

    while result.evaluations < budget:
        assign = [rng.randrange(2) for _ in range(n_orb)]
        if len(set(assign)) == 1:
            assign[rng.randrange(n_orb)] ^= 1
        current = evaluate(assign)
        accept(current)
        stall = 0
        while current.deficiency > 0 and stall < patience and result.evaluations < budget:
            trial = list(assign)
            i = rng.randrange(n_orb)
            trial[i] ^= 1
            if len(set(trial)) == 1:
                j = rng.randrange(n_orb - 1)
                trial[j if j < i else j + 1] ^= 1
            cand = evaluate(trial)
            if cand.deficiency <= current.deficiency:
                stall = 0 if cand.deficiency < current.deficiency else stall + 1
                assign, current = trial, cand
                accept(current)
            else:
                stall += 1
        if current.deficiency == 0:
            result.found = True
            break
    if not result.found:
        result.reason = "budget exhausted"
    return result
