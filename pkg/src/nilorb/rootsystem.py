"""Root systems of the simple complex Lie algebras, types A-G.

Roots are stored as integer coordinate tuples with respect to the simple
roots (Bourbaki numbering; for G2 the first simple root is short).  The
invariant bilinear form is normalised so that short roots have squared
length 2, which keeps every pairing and structure constant integral.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

Root = tuple  # integer coordinates in the simple-root basis
Weight = tuple  # rational coordinates in the simple-root basis

_ROOT_COUNTS = {
    "A": lambda l: l * (l + 1),
    "B": lambda l: 2 * l * l,
    "C": lambda l: 2 * l * l,
    "D": lambda l: 2 * l * (l - 1),
    "E": lambda l: {6: 72, 7: 126, 8: 240}[l],
    "F": lambda l: 48,
    "G": lambda l: 12,
}

_WEYL_ORDERS = {
    "A": lambda l: _fact(l + 1),
    "B": lambda l: 2**l * _fact(l),
    "C": lambda l: 2**l * _fact(l),
    "D": lambda l: 2 ** (l - 1) * _fact(l),
    "E": lambda l: {6: 51840, 7: 2903040, 8: 696729600}[l],
    "F": lambda l: 1152,
    "G": lambda l: 12,
}

_RANK_RANGES = {
    "A": (1, None),
    "B": (2, None),
    "C": (3, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


def _fact(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def _validate_type(type_label: str, rank: int) -> None:
    if type_label not in _RANK_RANGES:
        raise ValueError(f"unknown type label {type_label!r}; expected one of A-G")
    lo, hi = _RANK_RANGES[type_label]
    if rank < lo:
        raise ValueError(f"type {type_label} requires rank >= {lo}, got {rank}")
    if hi is not None and rank > hi:
        raise ValueError(f"type {type_label} requires rank <= {hi}, got {rank}")


def _cartan_edges(type_label: str, rank: int) -> list[tuple[int, int, int, int]]:
    """Edges (i, j, aij, aji) of the Dynkin diagram, 0-based Bourbaki order.

    aij is the Cartan integer <alpha_i, alpha_j^vee>.
    """
    l = rank
    chain = [(i, i + 1, -1, -1) for i in range(l - 1)]
    if type_label == "A":
        return chain
    if type_label == "B":
        chain[-1] = (l - 2, l - 1, -2, -1)  # alpha_l short
        return chain
    if type_label == "C":
        chain[-1] = (l - 2, l - 1, -1, -2)  # alpha_l long
        return chain
    if type_label == "D":
        chain = chain[:-1]
        chain.append((l - 3, l - 1, -1, -1))
        return chain
    if type_label == "E":
        edges = [(0, 2, -1, -1), (2, 3, -1, -1), (3, 4, -1, -1), (1, 3, -1, -1)]
        edges += [(i, i + 1, -1, -1) for i in range(4, l - 1)]
        return edges
    if type_label == "F":
        return [(0, 1, -1, -1), (1, 2, -2, -1), (2, 3, -1, -1)]
    if type_label == "G":
        return [(0, 1, -1, -3)]  # alpha_1 short, alpha_2 long
    raise AssertionError(type_label)


def cartan_matrix(type_label: str, rank: int) -> list[list[int]]:
    """Cartan matrix A with A[i][j] = <alpha_i, alpha_j^vee>."""
    _validate_type(type_label, rank)
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for i, j, aij, aji in _cartan_edges(type_label, rank):
        a[i][j] = aij
        a[j][i] = aji
    return a


def _half_lengths(type_label: str, rank: int) -> list[int]:
    """d_i = (alpha_i, alpha_i)/2 with short roots normalised to length^2 = 2."""
    l = rank
    if type_label == "B":
        return [2] * (l - 1) + [1]
    if type_label == "C":
        return [1] * (l - 1) + [2]
    if type_label == "F":
        return [2, 2, 1, 1]
    if type_label == "G":
        return [1, 3]
    return [1] * l


class RootSystem:
    """Immutable root system with exact pairings and extended-diagram data."""

    def __init__(self, type_label: str, rank: int):
        _validate_type(type_label, rank)
        self.type_label = type_label
        self.rank = rank
        self.cartan_matrix = tuple(tuple(r) for r in cartan_matrix(type_label, rank))
        self.d = tuple(_half_lengths(type_label, rank))
        # (alpha_i, alpha_j) = d_j * A[i][j]
        self.bilinear_form = tuple(
            tuple(self.d[j] * self.cartan_matrix[i][j] for j in range(rank))
            for i in range(rank)
        )
        self.positive_roots = self._build_positive_roots()
        self.n_pos = len(self.positive_roots)
        expected = _ROOT_COUNTS[type_label](rank) // 2
        if self.n_pos != expected:
            raise AssertionError(
                f"{type_label}{rank}: built {self.n_pos} positive roots, expected {expected}"
            )
        self.roots = self.positive_roots + tuple(
            tuple(-c for c in r) for r in self.positive_roots
        )
        self.root_index = {r: i for i, r in enumerate(self.roots)}
        self.highest_root = self.positive_roots[-1]
        self.marks = (1,) + self.highest_root
        # per-root cached data: B @ root and squared length
        self._form_vec = tuple(
            tuple(sum(self.bilinear_form[i][j] * r[j] for j in range(rank)) for i in range(rank))
            for r in self.roots
        )
        self._len2 = tuple(
            sum(fv[i] * r[i] for i in range(rank))
            for r, fv in zip(self.roots, self._form_vec)
        )
        self._diff_table = None
        self._ext_autos = None

    def __repr__(self) -> str:
        return f"RootSystem({self.type_label}{self.rank})"

    def _build_positive_roots(self) -> tuple[Root, ...]:
        l = self.rank
        a = self.cartan_matrix
        simples = [tuple(1 if j == i else 0 for j in range(l)) for i in range(l)]
        known = set(simples)
        by_height = {1: list(simples)}
        h = 1
        while by_height.get(h):
            nxt = []
            for beta in by_height[h]:
                for i in range(l):
                    alpha = simples[i]
                    if beta == alpha:
                        continue
                    p = 0
                    cur = tuple(b - s for b, s in zip(beta, alpha))
                    while cur in known:
                        p += 1
                        cur = tuple(c - s for c, s in zip(cur, alpha))
                    pairing = sum(beta[j] * a[j][i] for j in range(l))
                    if p - pairing > 0:
                        up = tuple(b + s for b, s in zip(beta, alpha))
                        if up not in known:
                            known.add(up)
                            nxt.append(up)
            h += 1
            if nxt:
                by_height[h] = nxt
        out = sorted(known, key=lambda r: (sum(r), r))
        return tuple(out)

    # -- basic queries ------------------------------------------------------

    def is_root(self, v) -> bool:
        return tuple(v) in self.root_index

    def is_positive(self, root: Root) -> bool:
        return self.root_index[tuple(root)] < self.n_pos

    def height(self, root: Root) -> int:
        return sum(root)

    def simple_root(self, i: int) -> Root:
        return tuple(1 if j == i else 0 for j in range(self.rank))

    def inner(self, lam, mu):
        """W-invariant inner product (lam, mu) of two weight vectors."""
        b = self.bilinear_form
        l = self.rank
        return sum(lam[i] * sum(b[i][j] * mu[j] for j in range(l)) for i in range(l))

    def length2(self, root: Root):
        return self._len2[self.root_index[tuple(root)]]

    def pairing(self, lam, mu: Root):
        """<lam, mu^vee> = 2 (lam, mu) / (mu, mu); mu must be a nonzero root."""
        idx = self.root_index.get(tuple(mu))
        if idx is None:
            raise ValueError(f"{mu} is not a root of {self!r}")
        fv = self._form_vec[idx]
        num = 2 * sum(lam[i] * fv[i] for i in range(self.rank))
        den = self._len2[idx]
        if isinstance(num, int) and num % den == 0:
            return num // den
        return Fraction(num, den)

    def reflect(self, lam, mu: Root):
        """Image of the weight lam under the reflection in the root mu."""
        c = self.pairing(lam, mu)
        return tuple(x - c * m for x, m in zip(lam, mu))

    def diff_is_root(self, i: int, j: int) -> bool:
        """Whether roots[i] - roots[j] is again a root (indices into .roots)."""
        if self._diff_table is None:
            n = len(self.roots)
            table = []
            for a in range(n):
                ra = self.roots[a]
                row = bytearray(n)
                for b in range(n):
                    if a != b:
                        d = tuple(x - y for x, y in zip(ra, self.roots[b]))
                        if d in self.root_index:
                            row[b] = 1
                table.append(bytes(row))
            self._diff_table = tuple(table)
        return bool(self._diff_table[i][j])

    # -- subsystems ---------------------------------------------------------

    def components(self, roots) -> list[list[Root]]:
        """Partition a set of roots into Dynkin-diagram components."""
        roots = [tuple(r) for r in roots]
        n = len(roots)
        seen = [False] * n
        comps = []
        for s in range(n):
            if seen[s]:
                continue
            stack, comp = [s], []
            seen[s] = True
            while stack:
                i = stack.pop()
                comp.append(roots[i])
                for j in range(n):
                    if not seen[j] and self.inner(roots[i], roots[j]) != 0:
                        seen[j] = True
                        stack.append(j)
            comps.append(comp)
        return comps

    def subsystem_roots(self, generators) -> set[Root]:
        """Closure of the given roots under the reflections they generate."""
        gens = [tuple(g) for g in generators]
        for g in gens:
            if g not in self.root_index:
                raise ValueError(f"{g} is not a root of {self!r}")
        out = set(gens)
        work = list(gens)
        while work:
            x = work.pop()
            for g in gens:
                y = self.reflect(x, g)
                if y not in out:
                    out.add(y)
                    work.append(y)
        return out

    def subsystem_positive_basis(self, roots) -> tuple[Root, ...]:
        """Canonical simple system (positive in Phi) of the subsystem the
        reflections of the given roots generate."""
        if not roots:
            return ()
        closure = self.subsystem_roots(roots)
        pos = {r for r in closure if self.is_positive(r)}
        basis = []
        for r in pos:
            if not any(tuple(a - b for a, b in zip(r, q)) in pos for q in pos if q != r):
                basis.append(r)
        return tuple(sorted(basis, key=lambda r: (sum(r), r)))

    def lowest_root_of_subsystem(self, basis) -> Root:
        """Lowest root of the subsystem spanned by a connected pi-system."""
        basis = [tuple(b) for b in basis]
        for b in basis:
            if b not in self.root_index:
                raise ValueError(f"{b} is not a root of {self!r}")
        from . import linalg

        gram = [[self.inner(a, b) for b in basis] for a in basis]
        if linalg.rank_int(gram) != len(basis):
            raise ValueError("basis is not linearly independent")
        if len(self.components(basis)) != 1:
            raise ValueError("basis is not connected")
        closure = self.subsystem_roots(basis)
        lowest = None
        lowest_ht = None
        for r in closure:
            coords = linalg.solve(gram, [self.inner(r, b) for b in basis])
            ht = sum(coords)
            if lowest_ht is None or ht < lowest_ht:
                lowest, lowest_ht = r, ht
        return lowest

    # -- Dynkin types and Weyl orders ----------------------------------------

    def dynkin_type(self, basis) -> tuple[tuple[str, int], ...]:
        """Dynkin type of the subsystem with the given pi-system basis,
        as a sorted tuple of (letter, rank) component types."""
        types = []
        for comp in self.components(basis):
            types.append(_identify_component([[self.pairing(a, b) for b in comp] for a in comp]))
        return tuple(sorted(types))

    def weyl_order(self, basis=None) -> int:
        """Order of the Weyl group of the subsystem (full group by default)."""
        if basis is None:
            return _WEYL_ORDERS[self.type_label](self.rank)
        order = 1
        for letter, rank in self.dynkin_type(basis):
            order *= _WEYL_ORDERS[letter](rank)
        return order

    # -- extended diagram -----------------------------------------------------

    def extended_basis(self) -> tuple[Root, ...]:
        """Nodes 0..l of the extended diagram: the lowest root, then Delta."""
        low = tuple(-c for c in self.highest_root)
        return (low,) + tuple(self.simple_root(i) for i in range(self.rank))

    def extended_cartan_matrix(self) -> tuple[tuple[int, ...], ...]:
        ext = self.extended_basis()
        return tuple(tuple(self.pairing(a, b) for b in ext) for a in ext)

    def extended_diagram_automorphisms(self) -> tuple[tuple[int, ...], ...]:
        """All permutations of the extended-diagram nodes preserving the
        extended Cartan matrix."""
        if self._ext_autos is not None:
            return self._ext_autos
        a = self.extended_cartan_matrix()
        n = self.rank + 1
        autos = []

        def extend(img: list[int], used: set[int]) -> None:
            i = len(img)
            if i == n:
                autos.append(tuple(img))
                return
            for cand in range(n):
                if cand in used:
                    continue
                if all(a[i][j] == a[cand][img[j]] and a[j][i] == a[img[j]][cand] for j in range(i)):
                    img.append(cand)
                    used.add(cand)
                    extend(img, used)
                    img.pop()
                    used.remove(cand)

        extend([], set())
        self._ext_autos = tuple(autos)
        return self._ext_autos

    def describe(self) -> str:
        """Plain-text dump of the root system."""
        lines = [
            f"root system {self.type_label}{self.rank}",
            f"positive roots: {self.n_pos}",
            f"marks (node 0 = affine): {list(self.marks)}",
            f"highest root: {list(self.highest_root)}",
            "cartan matrix:",
        ]
        for row in self.cartan_matrix:
            lines.append("  " + " ".join(f"{x:3d}" for x in row))
        lines.append("positive roots by height:")
        for r in self.positive_roots:
            lines.append(f"  {list(r)}  (height {sum(r)})")
        return "\n".join(lines)


@lru_cache(maxsize=None)
def build_root_system(type_label: str, rank: int) -> RootSystem:
    """Root system of the given simple type; raises ValueError if invalid."""
    return RootSystem(type_label, rank)


def parse_type(text: str) -> tuple[str, int]:
    """Parse a label like 'G2' or 'E8' into (letter, rank)."""
    text = text.strip().upper()
    if len(text) < 2 or not text[0].isalpha():
        raise ValueError(f"cannot parse type {text!r}; expected e.g. 'G2', 'E8', 'A3'")
    return text[0], int(text[1:])


def _identify_component(m: list[list]) -> tuple[str, int]:
    """Match a connected Cartan matrix against the simple types."""
    k = len(m)
    if k == 1:
        return ("A", 1)
    candidates = ["A"]
    if k >= 2:
        candidates += ["B", "G"] if k == 2 else ["B", "C"]
    if k >= 4:
        candidates.append("D")
        if k == 4:
            candidates.append("F")
    if k in (6, 7, 8):
        candidates.append("E")
    for letter in candidates:
        if _permutation_equal(m, cartan_matrix(letter, k)):
            return (letter, k)
    raise ValueError(f"could not identify Cartan matrix {m}")


def _permutation_equal(m1: list[list], m2: list[list]) -> bool:
    k = len(m1)
    if len(m2) != k:
        return False

    def extend(img: list[int], used: set[int]) -> bool:
        i = len(img)
        if i == k:
            return True
        for cand in range(k):
            if cand in used:
                continue
            if m1[i][i] != m2[cand][cand]:
                continue
            if all(m1[i][j] == m2[cand][img[j]] and m1[j][i] == m2[img[j]][cand] for j in range(i)):
                img.append(cand)
                used.add(cand)
                if extend(img, used):
                    return True
                img.pop()
                used.remove(cand)
        return False

    return extend([], set())


def format_dynkin_type(types) -> str:
    """Render a component-type tuple like (('A', 1), ('A', 1), ('A', 2))
    as '2A1+A2'; the empty type renders as '0'."""
    types = list(types)
    if not types:
        return "0"
    out = []
    for (letter, rank), group in itertools.groupby(sorted(types)):
        count = len(list(group))
        name = f"{letter}{rank}"
        out.append(name if count == 1 else f"{count}{name}")
    return "+".join(out)
