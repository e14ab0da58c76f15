"""Orbit records and the weighted Dynkin diagram of an ambient orbit."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .chevalley import ChevalleyAlgebra, LieElement
from .rootsystem import RootSystem
from .weyl import WeylSubgroup, to_subdominant


class InternalConsistencyError(RuntimeError):
    """A structural guarantee of the classification was violated."""


@dataclass(frozen=True)
class WeightedDynkinDiagram:
    """Simple-root labels of a nilpotent-orbit characteristic; each in 0..2."""

    labels: tuple[int, ...]

    def __post_init__(self):
        if any(d not in (0, 1, 2) for d in self.labels):
            raise ValueError(f"weighted Dynkin labels must be 0, 1 or 2: {self.labels}")

    def is_regular(self) -> bool:
        return all(d == 2 for d in self.labels)

    def is_zero(self) -> bool:
        return all(d == 0 for d in self.labels)


@dataclass
class OrbitRecord:
    """One nilpotent orbit: canonical h, representative (h,e,f), dimension,
    and the weighted Dynkin diagram of the ambient orbit of e."""

    h: LieElement
    e: LieElement
    f: LieElement
    ambient_wdd: WeightedDynkinDiagram
    dim: int | None = None

    def is_zero(self) -> bool:
        return self.e.is_zero()

    def h_key(self) -> tuple:
        return tuple(Fraction(c) for c in self.h.cartan_part())


def zero_record(alg: ChevalleyAlgebra) -> OrbitRecord:
    z = alg.zero()
    return OrbitRecord(z, z, z, WeightedDynkinDiagram((0,) * alg.rs.rank), dim=0)


def sort_records(records: list[OrbitRecord]) -> list[OrbitRecord]:
    """Zero record first, then lexicographic in the canonical h coordinates."""
    zero = [r for r in records if r.is_zero()]
    rest = sorted((r for r in records if not r.is_zero()), key=OrbitRecord.h_key)
    return zero + rest


def dual_weight(alg: ChevalleyAlgebra, h: LieElement) -> tuple:
    """Weight vector lam with (alpha, lam) = alpha(h) for all roots alpha."""
    if not h.is_cartan():
        raise ValueError("element is not in the Cartan subalgebra")
    c = h.cartan_part()
    return tuple(Fraction(ci) / d for ci, d in zip(c, alg.rs.d))


def cartan_from_dual_weight(alg: ChevalleyAlgebra, lam) -> LieElement:
    return alg.cartan([Fraction(x) * d for x, d in zip(lam, alg.rs.d)])


def wdd_of_cartan(alg: ChevalleyAlgebra, h: LieElement) -> WeightedDynkinDiagram:
    """Weighted Dynkin diagram of the dominant Weyl conjugate of h."""
    rs = alg.rs
    full = _full_weyl_subgroup(rs)
    lam_dom, _ = to_subdominant(rs, full, dual_weight(alg, h))
    labels = []
    for i in range(rs.rank):
        v = rs.inner(rs.simple_root(i), lam_dom)
        if v not in (0, 1, 2):
            raise InternalConsistencyError(
                f"dominant h has simple-root value {v}; not a nilpotent characteristic"
            )
        labels.append(int(v))
    return WeightedDynkinDiagram(tuple(labels))


@lru_cache(maxsize=None)
def _full_weyl_subgroup(rs: RootSystem) -> WeylSubgroup:
    return WeylSubgroup(rs, [rs.simple_root(i) for i in range(rs.rank)])
