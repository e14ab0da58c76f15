"""Kac diagrams of inner finite-order automorphisms and their gradings.

An inner automorphism of order m is encoded by its degree map on roots:
deg(sum k_i alpha_i) = sum k_i s_i mod m, where s_1..s_l are the Kac labels
on the simple nodes and m = sum a_i s_i over the extended diagram.  The
grading keeps everything rational: component bases are root vectors plus,
in degree 0, the full Cartan subalgebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .chevalley import ChevalleyAlgebra, LieElement
from .rootsystem import RootSystem, format_dynkin_type
from .weyl import WeylSubgroup


@dataclass(frozen=True)
class KacDiagram:
    """Labels s_0..s_l on the extended Dynkin diagram; order = sum a_i s_i."""

    labels: tuple[int, ...]
    order: int

    @staticmethod
    def from_labels(rs: RootSystem, labels) -> "KacDiagram":
        labels = tuple(int(s) for s in labels)
        if len(labels) != rs.rank + 1:
            raise ValueError(
                f"expected {rs.rank + 1} labels for {rs.type_label}{rs.rank}, got {len(labels)}"
            )
        if any(s < 0 for s in labels):
            raise ValueError("Kac labels must be nonnegative")
        order = sum(a * s for a, s in zip(rs.marks, labels))
        if order == 0:
            raise ValueError("all-zero Kac labels define no automorphism (order 0)")
        return KacDiagram(labels, order)


class ThetaGrading:
    """Z/mZ-grading of a simple Lie algebra by an inner automorphism."""

    def __init__(self, alg: ChevalleyAlgebra, m: int, root_degrees: dict, kac: KacDiagram | None = None):
        if m < 1:
            raise ValueError("grading order must be >= 1")
        rs = alg.rs
        self.alg = alg
        self.rs = rs
        self.m = m
        self.kac = kac
        self.deg_by_index = tuple(root_degrees[r] % m for r in rs.roots)
        self.phi0 = tuple(r for r, d in zip(rs.roots, self.deg_by_index) if d == 0)
        self.phi1 = tuple(r for r, d in zip(rs.roots, self.deg_by_index) if d == 1 % m)
        pos0 = [r for r in self.phi0 if rs.is_positive(r)]
        set0 = set(pos0)
        self.delta0 = tuple(
            sorted(
                (
                    r
                    for r in pos0
                    if not any(q != r and tuple(a - b for a, b in zip(r, q)) in set0 for q in set0)
                ),
                key=lambda r: (sum(r), r),
            )
        )
        rows = [[rs.pairing(b, rs.simple_root(k)) for k in range(rs.rank)] for b in self.delta0]
        self.center_basis = tuple(alg.cartan(v) for v in linalg.nullspace(rows)) if rows else tuple(
            alg.cartan([1 if j == i else 0 for j in range(rs.rank)]) for i in range(rs.rank)
        )
        self.semisimple_part_cartan = tuple(alg.coroot(b) for b in self.delta0)
        self._wl = None

    def __repr__(self) -> str:
        return f"ThetaGrading({self.rs.type_label}{self.rs.rank}, m={self.m})"

    def degree(self, root) -> int:
        return self.deg_by_index[self.rs.root_index[tuple(root)]]

    def component_roots(self, i: int) -> list:
        i %= self.m
        return [r for r, d in zip(self.rs.roots, self.deg_by_index) if d == i]

    def component_basis(self, i: int) -> list[LieElement]:
        """Basis of g_i: root vectors of degree i, plus the Cartan for i = 0."""
        i %= self.m
        out = [self.alg.root_vector(r) for r in self.component_roots(i)]
        if i == 0:
            out.extend(
                self.alg.cartan([1 if j == k else 0 for j in range(self.rs.rank)])
                for k in range(self.rs.rank)
            )
        return out

    def dims(self) -> tuple[int, ...]:
        counts = [0] * self.m
        for d in self.deg_by_index:
            counts[d] += 1
        counts[0] += self.rs.rank
        return tuple(counts)

    def weyl_subgroup(self) -> WeylSubgroup:
        """The Weyl subgroup W_l of the semisimple part of g_0."""
        if self._wl is None:
            self._wl = WeylSubgroup(self.rs, self.delta0)
        return self._wl

    def coset_index(self) -> int:
        return self.rs.weyl_order() // self.rs.weyl_order(self.delta0)

    def in_dominant_chamber(self, h: LieElement) -> bool:
        """Whether beta(h) >= 0 for every beta in Delta_0 (h in C_l + r)."""
        return all(self.alg.root_value(b, h) >= 0 for b in self.delta0)

    def eigenspace(self, h: LieElement, k, i: int) -> list[LieElement]:
        """Basis of g_i(k) = {x in g_i : [h, x] = k x} for h in g_0."""
        i %= self.m
        if h.is_cartan():
            out = [
                self.alg.root_vector(r)
                for r in self.component_roots(i)
                if self.alg.root_value(r, h) == k
            ]
            if i == 0 and k == 0:
                out.extend(
                    self.alg.cartan([1 if j == t else 0 for j in range(self.rs.rank)])
                    for t in range(self.rs.rank)
                )
            return out
        basis = self.component_basis(i)
        index_of = {next(iter(b.coeffs)): col for col, b in enumerate(basis)}
        mat = [[Fraction(0)] * len(basis) for _ in range(len(basis))]
        for col, b in enumerate(basis):
            img = self.alg.bracket(h, b)
            for idx, c in img.coeffs.items():
                if idx not in index_of:
                    raise ValueError("ad h does not preserve the component; h is not in g_0")
                mat[index_of[idx]][col] = Fraction(c)
        for t in range(len(basis)):
            mat[t][t] -= Fraction(k)
        out = []
        for v in linalg.nullspace(mat):
            x = self.alg.zero()
            for c, b in zip(v, basis):
                if c:
                    x = x + b.scale(c)
            out.append(x)
        return out

    def to_json_dict(self) -> dict:
        return {
            "m": self.m,
            "component_dims": list(self.dims()),
            "phi0_type": format_dynkin_type(self.rs.dynkin_type(self.delta0)),
        }


def grading_from_kac(alg: ChevalleyAlgebra, kd: KacDiagram) -> ThetaGrading:
    """Grading of the inner automorphism with the given Kac diagram."""
    rs = alg.rs
    if len(kd.labels) != rs.rank + 1:
        raise ValueError("Kac diagram rank mismatch")
    s = kd.labels[1:]
    m = kd.order
    degrees = {r: sum(k * si for k, si in zip(r, s)) % m for r in rs.roots}
    return ThetaGrading(alg, m, degrees, kac=kd)


def trivial_grading(alg: ChevalleyAlgebra) -> ThetaGrading:
    """The order-1 grading (identity automorphism): everything in degree 0."""
    kd = KacDiagram.from_labels(alg.rs, (1,) + (0,) * alg.rs.rank)
    return grading_from_kac(alg, kd)


def enumerate_kac_diagrams(rs: RootSystem, m: int) -> list[KacDiagram]:
    """All label vectors with sum a_i s_i = m, one per orbit of the
    extended-diagram automorphism group."""
    if m < 1:
        raise ValueError("order must be >= 1")
    marks = rs.marks
    n = len(marks)
    solutions = []

    def extend(i: int, remaining: int, acc: list[int]) -> None:
        if i == n - 1:
            if remaining % marks[i] == 0:
                solutions.append(tuple(acc + [remaining // marks[i]]))
            return
        for s in range(remaining // marks[i] + 1):
            extend(i + 1, remaining - s * marks[i], acc + [s])

    extend(0, m, [])
    autos = rs.extended_diagram_automorphisms()
    seen = set()
    out = []
    for labels in sorted(solutions):
        canon = max(tuple(labels[sigma[i]] for i in range(n)) for sigma in autos)
        if canon not in seen:
            seen.add(canon)
            out.append(KacDiagram(canon, m))
    return sorted(out, key=lambda kd: kd.labels)


def principal_nregular_grading(alg: ChevalleyAlgebra, m: int) -> ThetaGrading:
    """Fold the even Z-grading of a principal sl2 into a Z/mZ-grading.

    The defining Cartan element h has alpha_i(h) = 2 on every simple root, so
    ad h acts on a root vector by twice the root height; the degree of a root
    is its height mod m.
    """
    if m < 1:
        raise ValueError("order must be >= 1")
    degrees = {r: sum(r) % m for r in alg.rs.roots}
    return ThetaGrading(alg, m, degrees)
