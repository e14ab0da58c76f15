"""Simple Lie algebras over Q as integer structure-constant tables.

The basis is one root vector x_alpha per root, followed by the Cartan
generators h_1..h_l (the simple coroots).  Signs are fixed by setting the
constant of each extraspecial pair positive, with all other constants
derived through the standard bracket identities; any consistent convention
is equivalent for the invariant quantities computed downstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import linalg
from .rootsystem import Root, RootSystem


class LieElement:
    """Element with rational coefficients over the algebra basis."""

    __slots__ = ("alg", "coeffs")

    def __init__(self, alg: "ChevalleyAlgebra", coeffs: dict):
        self.alg = alg
        self.coeffs = {k: v for k, v in coeffs.items() if v != 0}

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "LieElement") -> "LieElement":
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return LieElement(self.alg, out)

    def __sub__(self, other: "LieElement") -> "LieElement":
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) - v
        return LieElement(self.alg, out)

    def __neg__(self) -> "LieElement":
        return LieElement(self.alg, {k: -v for k, v in self.coeffs.items()})

    def scale(self, c) -> "LieElement":
        return LieElement(self.alg, {k: c * v for k, v in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LieElement)
            and self.alg is other.alg
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash(tuple(sorted(self.coeffs.items())))

    def dense(self) -> list:
        v = [Fraction(0)] * self.alg.dim
        for k, c in self.coeffs.items():
            v[k] = Fraction(c)
        return v

    def cartan_part(self) -> tuple:
        """Coefficients over h_1..h_l."""
        n = self.alg.n_roots
        return tuple(self.coeffs.get(n + i, 0) for i in range(self.alg.rs.rank))

    def is_cartan(self) -> bool:
        return all(k >= self.alg.n_roots for k in self.coeffs)

    def to_triples(self) -> list[tuple[str, int, int]]:
        """Serialisable form: (basis label, numerator, denominator) triples."""
        out = []
        for k in sorted(self.coeffs):
            c = Fraction(self.coeffs[k])
            out.append((self.alg.basis_label(k), c.numerator, c.denominator))
        return out

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = [f"{v}*{self.alg.basis_label(k)}" for k, v in sorted(self.coeffs.items())]
        return " + ".join(parts)


@dataclass(frozen=True)
class Sl2Triple:
    """(h, e, f) with [h,e] = 2e, [h,f] = -2f, [e,f] = h."""

    h: LieElement
    e: LieElement
    f: LieElement

    def check(self) -> None:
        alg = self.h.alg
        if self.e.is_zero():
            raise ValueError("sl2 triple with e = 0")
        if alg.bracket(self.h, self.e) != self.e.scale(2):
            raise ValueError("[h,e] != 2e")
        if alg.bracket(self.h, self.f) != self.f.scale(-2):
            raise ValueError("[h,f] != -2f")
        if alg.bracket(self.e, self.f) != self.h:
            raise ValueError("[e,f] != h")


class ChevalleyAlgebra:
    """Structure-constant model of the simple Lie algebra of a root system."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.n_roots = len(rs.roots)
        self.dim = self.n_roots + rs.rank
        self._coroot = tuple(self._coroot_coords(r) for r in rs.roots)
        # <root, alpha_k^vee> for every root and simple k
        a = rs.cartan_matrix
        self._pair_simple = tuple(
            tuple(sum(r[j] * a[j][k] for j in range(rs.rank)) for k in range(rs.rank))
            for r in rs.roots
        )
        self._n = self._build_constants()

    def __repr__(self) -> str:
        return f"ChevalleyAlgebra({self.rs.type_label}{self.rs.rank})"

    # -- construction ---------------------------------------------------------

    def _coroot_coords(self, root: Root) -> tuple[int, ...]:
        d_root = self.rs.length2(root) // 2  # short roots have length^2 = 2
        num = [root[i] * self.rs.d[i] for i in range(self.rs.rank)]
        if any(x % d_root for x in num):
            raise AssertionError(f"non-integral coroot for {root}")
        return tuple(x // d_root for x in num)

    def _string_down(self, alpha: Root, beta: Root) -> int:
        """p = max k with beta - k*alpha a root."""
        p = 0
        cur = tuple(b - a for a, b in zip(alpha, beta))
        while cur in self.rs.root_index:
            p += 1
            cur = tuple(c - a for a, c in zip(alpha, cur))
        return p

    def _build_constants(self) -> dict:
        rs = self.rs
        pos = rs.positive_roots
        order = {r: k for k, r in enumerate(pos)}
        npos: dict = {}  # (alpha, beta) positive pairs, alpha + beta a root

        def put(a: Root, b: Root, val: int) -> None:
            npos[(a, b)] = val
            npos[(b, a)] = -val

        def n_any(a: Root, b: Root):
            """Constant for an arbitrary sign pattern, from the positive table."""
            s = tuple(x + y for x, y in zip(a, b))
            if s not in rs.root_index:
                return 0
            a_pos, b_pos = rs.is_positive(a), rs.is_positive(b)
            if a_pos and b_pos:
                return npos[(a, b)]
            if not a_pos and not b_pos:
                return -n_any(tuple(-x for x in a), tuple(-x for x in b))
            if not a_pos:  # normalise to (positive, negative)
                return -n_any(b, a)
            eta = tuple(-x for x in b)
            zeta = s
            if rs.is_positive(zeta):
                val = Fraction(rs.length2(zeta), rs.length2(a)) * npos[(zeta, eta)]
            else:
                mzeta = tuple(-x for x in zeta)
                val = Fraction(rs.length2(zeta), rs.length2(eta)) * npos[(mzeta, a)]
            if val.denominator != 1:
                raise AssertionError(f"non-integral constant for {a}, {b}")
            return int(val)

        for rho in pos:
            if sum(rho) < 2:
                continue
            pairs = []
            for alpha in pos:
                if order[alpha] >= order[rho]:
                    break
                beta = tuple(r - x for r, x in zip(rho, alpha))
                if beta in rs.root_index and rs.is_positive(beta) and order[alpha] < order[beta]:
                    pairs.append((alpha, beta))
            gamma, delta = pairs[0]  # extraspecial: minimal first member
            put(gamma, delta, self._string_down(gamma, delta) + 1)
            for alpha, beta in pairs[1:]:
                f2 = n_any(delta, tuple(-x for x in alpha))
                t2 = f2 and f2 * n_any(tuple(d - x for d, x in zip(delta, alpha)), gamma)
                f3 = n_any(tuple(-x for x in alpha), gamma)
                t3 = f3 and f3 * n_any(tuple(g - x for g, x in zip(gamma, alpha)), delta)
                n_rho_malpha = Fraction(-(t2 + t3), npos[(gamma, delta)])
                val = -Fraction(rs.length2(rho), rs.length2(beta)) * n_rho_malpha
                if val.denominator != 1:
                    raise AssertionError(f"non-integral constant for {alpha}, {beta}")
                put(alpha, beta, int(val))

        # expand to an index-keyed table over all root pairs
        table: dict = {}
        for i, a in enumerate(rs.roots):
            for j, b in enumerate(rs.roots):
                s = tuple(x + y for x, y in zip(a, b))
                if s in rs.root_index:
                    table[(i, j)] = n_any(a, b)
        return table

    # -- basis bookkeeping -----------------------------------------------------

    def basis_label(self, k: int) -> str:
        if k < self.n_roots:
            return "x[" + ",".join(str(c) for c in self.rs.roots[k]) + "]"
        return f"h[{k - self.n_roots + 1}]"

    def basis_element(self, k: int) -> LieElement:
        return LieElement(self, {k: Fraction(1)})

    def zero(self) -> LieElement:
        return LieElement(self, {})

    def root_vector(self, root: Root) -> LieElement:
        return self.basis_element(self.rs.root_index[tuple(root)])

    def cartan(self, coeffs) -> LieElement:
        """Element sum_i coeffs[i] * h_i of the Cartan subalgebra."""
        return LieElement(
            self, {self.n_roots + i: Fraction(c) for i, c in enumerate(coeffs) if c != 0}
        )

    def coroot(self, root: Root) -> LieElement:
        """The coroot of a root, as a Cartan element ([x_a, x_{-a}])."""
        return self.cartan(self._coroot[self.rs.root_index[tuple(root)]])

    def n_const(self, i: int, j: int) -> int:
        """Structure constant N for root indices i, j (0 if sum not a root)."""
        return self._n.get((i, j), 0)

    def root_value(self, root: Root, h: LieElement):
        """alpha(h) for h in the Cartan subalgebra."""
        n = self.n_roots
        pair = self._pair_simple[self.rs.root_index[tuple(root)]]
        return sum(h.coeffs.get(n + i, 0) * pair[i] for i in range(self.rs.rank))

    # -- bracket and derived maps ----------------------------------------------

    def bracket_basis(self, i: int, j: int) -> dict:
        """Sparse bracket of two basis elements."""
        n = self.n_roots
        if i >= n and j >= n:
            return {}
        if i >= n:
            out = self.bracket_basis(j, i)
            return {k: -v for k, v in out.items()}
        if j >= n:
            c = -self._pair_simple[i][j - n]
            return {i: c} if c else {}
        a, b = self.rs.roots[i], self.rs.roots[j]
        if all(x + y == 0 for x, y in zip(a, b)):
            return {n + k: c for k, c in enumerate(self._coroot[i]) if c}
        s = tuple(x + y for x, y in zip(a, b))
        k = self.rs.root_index.get(s)
        if k is None:
            return {}
        return {k: self._n[(i, j)]}

    def bracket(self, x: LieElement, y: LieElement) -> LieElement:
        out: dict = {}
        for i, ci in x.coeffs.items():
            for j, cj in y.coeffs.items():
                for k, v in self.bracket_basis(i, j).items():
                    out[k] = out.get(k, 0) + ci * cj * v
        return LieElement(self, out)

    def ad_matrix(self, x: LieElement, domain, codomain) -> list[list]:
        """Matrix of ad(x): span(domain) -> span(codomain), columns exact.

        Raises ValueError if some bracket leaves the codomain span.
        """
        cod = [v.dense() for v in codomain]
        cols = []
        for d in domain:
            img = self.bracket(x, d).dense()
            coords = linalg.solve([[cod[j][i] for j in range(len(cod))] for i in range(self.dim)], img)
            if coords is None:
                raise ValueError(f"bracket image {self.bracket(x, d)!r} outside codomain span")
            cols.append(coords)
        return [[cols[j][i] for j in range(len(domain))] for i in range(len(codomain))]

    def is_nilpotent(self, x: LieElement) -> bool:
        """Whether ad(x) is nilpotent, by iterating image spaces to zero."""
        if x.is_zero():
            return True
        cur = [self.basis_element(k).dense() for k in range(self.dim)]
        dim_prev = self.dim
        while True:
            imgs = []
            for v in cur:
                elt = LieElement(self, {k: c for k, c in enumerate(v) if c})
                imgs.append(self.bracket(x, elt).dense())
            basis = linalg.row_reduce(imgs)
            if not basis:
                return True
            if len(basis) == dim_prev:
                return False
            dim_prev = len(basis)
            cur = basis

    def killing_form(self, x: LieElement, y: LieElement):
        """kappa(x, y) = trace(ad x o ad y)."""
        total = 0
        for k in range(self.dim):
            v = self.bracket(x, self.bracket(y, self.basis_element(k)))
            total += v.coeffs.get(k, 0)
        return total

    def complete_sl2(self, h: LieElement, e: LieElement, f_space) -> Sl2Triple | None:
        """Solve [e, f] = h for f in the span of f_space, or return None.

        Requires [h, e] = 2e and [h, v] = -2v for every v in f_space.
        """
        if self.bracket(h, e) != e.scale(2):
            raise ValueError("[h, e] != 2e")
        for v in f_space:
            if self.bracket(h, v) != v.scale(-2):
                raise ValueError("f_space vector is not a -2 eigenvector of ad h")
        if e.is_zero():
            return None
        cols = [self.bracket(e, v).dense() for v in f_space]
        rows = [[cols[j][i] for j in range(len(cols))] for i in range(self.dim)]
        sol = linalg.solve(rows, h.dense())
        if sol is None:
            return None
        f = self.zero()
        for c, v in zip(sol, f_space):
            if c:
                f = f + v.scale(c)
        triple = Sl2Triple(h, e, f)
        triple.check()
        return triple


@lru_cache(maxsize=None)
def build_algebra(rs: RootSystem) -> ChevalleyAlgebra:
    return ChevalleyAlgebra(rs)
