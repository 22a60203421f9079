"""Left ideals of finite rings: principal ideals, sums, closures, Max(R) and J(R)."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import PreconditionError
from .ring import FiniteRing, left_invertible_mask, memoize


@dataclass(frozen=True)
class LeftIdeal:
    """A left ideal, stored as its sorted element ids.

    ``generators`` records provenance only and does not take part in equality.
    """

    ring: FiniteRing = field(compare=False, repr=False)
    elements: tuple[int, ...]
    generators: tuple[int, ...] = field(default=(), compare=False)

    @cached_property
    def members(self) -> frozenset[int]:
        return frozenset(self.elements)

    @cached_property
    def mask(self) -> np.ndarray:
        m = np.zeros(self.ring.size, dtype=bool)
        m[list(self.elements)] = True
        m.setflags(write=False)
        return m

    @property
    def is_proper(self) -> bool:
        return self.ring.one not in self.members

    def __contains__(self, a: int) -> bool:
        return a in self.members

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __le__(self, other: "LeftIdeal") -> bool:
        return self.members <= other.members

    def __lt__(self, other: "LeftIdeal") -> bool:
        return self.members < other.members

    def formatted(self) -> list[str]:
        return [self.ring.format(a) for a in self.elements]


def _from_mask(R: FiniteRing, mask: np.ndarray, generators: Iterable[int] = ()) -> LeftIdeal:
    return LeftIdeal(R, tuple(int(x) for x in np.flatnonzero(mask)), tuple(generators))


def is_left_ideal_mask(R: FiniteRing, mask: np.ndarray) -> bool:
    """Direct check of the closure invariants: 0 present, closed under + and left multiplication."""
    idx = np.flatnonzero(mask)
    if not mask[0]:
        return False
    return bool(mask[R.add_table[np.ix_(idx, idx)]].all() and mask[R.mul_table[:, idx]].all())


def is_left_ideal(I: LeftIdeal) -> bool:
    return is_left_ideal_mask(I.ring, I.mask)


@memoize
def principal_masks(R: FiniteRing) -> np.ndarray:
    """Row a is the membership mask of Ra."""
    n = R.size
    pm = np.zeros((n, n), dtype=bool)
    pm[np.arange(n)[:, None], R.mul_table.T] = True
    pm.setflags(write=False)
    return pm


def principal_left_ideal(R: FiniteRing, a: int) -> LeftIdeal:
    mask = principal_masks(R)[a]
    assert is_left_ideal_mask(R, mask), f"R·{a} is not closed"
    return _from_mask(R, mask, (a,))


def _sum_mask(R: FiniteRing, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    out = np.zeros(R.size, dtype=bool)
    out[R.add_table[np.ix_(np.flatnonzero(a), np.flatnonzero(b))].ravel()] = True
    return out


def left_ideal_closure(R: FiniteRing, seed: Iterable[int]) -> LeftIdeal:
    """Smallest left ideal containing ``seed``: iterate + and left-multiplication to a fixed point."""
    seed = tuple(seed)
    mask = np.zeros(R.size, dtype=bool)
    mask[[0, *seed]] = True
    count = int(mask.sum())
    while True:
        idx = np.flatnonzero(mask)
        mask[R.mul_table[:, idx].ravel()] = True
        mask[R.add_table[np.ix_(idx, idx)].ravel()] = True
        new = int(mask.sum())
        if new == count:
            return _from_mask(R, mask, seed)
        count = new


def ideal_sum(R: FiniteRing, I: LeftIdeal, J: LeftIdeal) -> LeftIdeal:
    """{i + j}; cross-checked against the closure of both generator lists."""
    if I.ring is not R or J.ring is not R:
        raise PreconditionError("ideals belong to different rings")
    gens = I.generators + tuple(g for g in J.generators if g not in I.generators)
    S = _from_mask(R, _sum_mask(R, I.mask, J.mask), gens)
    if I.generators and J.generators:
        assert S == left_ideal_closure(R, gens), "ideal sum disagrees with generator closure"
    return S


def _bits(mask: np.ndarray) -> int:
    return int.from_bytes(np.packbits(mask, bitorder="little").tobytes(), "little")


def _unbits(x: int, n: int) -> np.ndarray:
    raw = np.frombuffer(x.to_bytes((n + 7) // 8, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[:n].astype(bool)


@memoize
def maximal_left_ideals(R: FiniteRing) -> tuple[LeftIdeal, ...]:
    """All maximal left ideals, sorted by element tuple.

    Every left ideal is a finite sum of principal ones, so saturating the
    proper principal ideals under "add one more principal ideal, stay proper"
    reaches every proper left ideal that is a join of principal ones; the
    inclusion-maximal members are Max(R).
    """
    n = R.size
    pm = principal_masks(R)
    linv = left_invertible_mask(R)
    principal: dict[int, int] = {}
    for a in np.flatnonzero(~linv):
        principal.setdefault(_bits(pm[a]), int(a))
    one_bit = 1 << R.one
    seen = set(principal)
    queue = list(principal)
    while queue:
        cur = queue.pop()
        cur_mask = None
        for p in principal:
            if p & cur == p:
                continue
            if cur_mask is None:
                cur_mask = _unbits(cur, n)
            s = _bits(_sum_mask(R, cur_mask, _unbits(p, n)))
            if s & one_bit or s in seen:
                continue
            seen.add(s)
            queue.append(s)
    maximal = [s for s in seen if not any(t != s and s & t == s for t in seen)]
    out = []
    for s in maximal:
        mask = _unbits(s, n)
        gens = sorted(a for b, a in principal.items() if b & s == b)
        out.append(_from_mask(R, mask, gens[:1]))
    out.sort(key=lambda I: I.elements)
    for a in np.flatnonzero(~linv):
        assert any(pm[a][list(m.elements)].sum() == pm[a].sum() for m in out), (
            f"proper principal ideal R·{a} lies in no maximal ideal"
        )
    return tuple(out)


@memoize
def jacobson_radical(R: FiniteRing) -> LeftIdeal:
    """Intersection of all maximal left ideals (all of R for the zero ring)."""
    ms = maximal_left_ideals(R)
    mask = np.ones(R.size, dtype=bool)
    for m in ms:
        mask &= m.mask
    J = _from_mask(R, mask)
    assert is_two_sided(R, J), "Jacobson radical is not two-sided"
    return J


def radical_by_quasi_inverses(R: FiniteRing) -> frozenset[int]:
    """{a : 1 - r·a is left-invertible for every r}, independent of Max(R)."""
    linv = left_invertible_mask(R)
    one_minus = R.add_table[R.one, R.neg_table[R.mul_table]]
    return frozenset(int(a) for a in np.flatnonzero(linv[one_minus].all(axis=0)))


def is_two_sided(R: FiniteRing, I: LeftIdeal) -> bool:
    idx = list(I.elements)
    return bool(I.mask[R.mul_table[idx, :]].all())


def intersection(R: FiniteRing, ideals: Sequence[LeftIdeal]) -> np.ndarray:
    mask = np.ones(R.size, dtype=bool)
    for I in ideals:
        mask &= I.mask
    return mask


def avoidance_pick(R: FiniteRing, inside: Sequence[LeftIdeal], avoid: Sequence[LeftIdeal]) -> int | None:
    """Least element of (∩ inside) minus (∪ avoid), or None when that set is empty."""
    mask = intersection(R, inside)
    for I in avoid:
        mask &= ~I.mask
    hits = np.flatnonzero(mask)
    return int(hits[0]) if hits.size else None
