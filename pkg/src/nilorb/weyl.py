"""Weyl group elements, minimal coset representatives, and conjugacy tests.

Elements act as permutations of the full root list (stored as numpy index
arrays, which makes composition a single fancy-indexing operation) and as
exact integer matrices on the weight space.  Equality is equality of the
root permutation; words are kept for display but are not canonical.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .linalg import rank_int
from .rootsystem import Root, RootSystem

_DTYPE = np.int16


@lru_cache(maxsize=None)
def _simple_perm_table(rs: RootSystem) -> tuple:
    """Permutations of rs.roots induced by the simple reflections."""
    out = []
    for i in range(rs.rank):
        alpha = rs.simple_root(i)
        perm = np.empty(len(rs.roots), dtype=_DTYPE)
        for k, r in enumerate(rs.roots):
            perm[k] = rs.root_index[rs.reflect(r, alpha)]
        perm.setflags(write=False)
        out.append(perm)
    return tuple(out)


@lru_cache(maxsize=None)
def _simple_indices(rs: RootSystem) -> tuple[int, ...]:
    return tuple(rs.root_index[rs.simple_root(i)] for i in range(rs.rank))


class WeylElement:
    """A Weyl group element; word (i1..ik) denotes s_{i1} o ... o s_{ik}."""

    __slots__ = ("rs", "perm", "word", "_matrix")

    def __init__(self, rs: RootSystem, perm: np.ndarray, word: tuple[int, ...]):
        self.rs = rs
        self.perm = perm
        self.word = word
        self._matrix = None

    @staticmethod
    def identity(rs: RootSystem) -> "WeylElement":
        perm = np.arange(len(rs.roots), dtype=_DTYPE)
        perm.setflags(write=False)
        return WeylElement(rs, perm, ())

    @staticmethod
    def simple(rs: RootSystem, i: int) -> "WeylElement":
        return WeylElement(rs, _simple_perm_table(rs)[i], (i,))

    @staticmethod
    def from_word(rs: RootSystem, word) -> "WeylElement":
        w = WeylElement.identity(rs)
        for i in word:
            w = w * WeylElement.simple(rs, i)
        return WeylElement(rs, w.perm, tuple(word))

    @staticmethod
    def reflection(rs: RootSystem, root: Root) -> "WeylElement":
        """The reflection in an arbitrary root, with a word in the s_i."""
        root = tuple(root)
        if root not in rs.root_index:
            raise ValueError(f"{root} is not a root")
        return _reflection_element(rs, root)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        perm = self.perm[other.perm]
        perm.setflags(write=False)
        return WeylElement(self.rs, perm, self.word + other.word)

    def inverse(self) -> "WeylElement":
        inv = np.empty_like(self.perm)
        inv[self.perm] = np.arange(len(self.perm), dtype=_DTYPE)
        inv.setflags(write=False)
        return WeylElement(self.rs, inv, tuple(reversed(self.word)))

    def is_identity(self) -> bool:
        return bool(np.all(self.perm == np.arange(len(self.perm), dtype=_DTYPE)))

    def length(self) -> int:
        """Number of positive roots sent to negative roots."""
        n = self.rs.n_pos
        return int(np.count_nonzero(self.perm[:n] >= n))

    def act_root(self, root: Root) -> Root:
        return self.rs.roots[int(self.perm[self.rs.root_index[tuple(root)]])]

    def matrix(self) -> tuple:
        """Integer matrix of the action on simple-root coordinates."""
        if self._matrix is None:
            cols = [self.rs.roots[int(self.perm[k])] for k in _simple_indices(self.rs)]
            self._matrix = tuple(
                tuple(cols[j][i] for j in range(self.rs.rank)) for i in range(self.rs.rank)
            )
        return self._matrix

    def act_weight(self, lam):
        """Exact image of a weight vector in simple-root coordinates."""
        m = self.matrix()
        return tuple(sum(row[j] * lam[j] for j in range(self.rs.rank) if lam[j]) for row in m)

    def __eq__(self, other) -> bool:
        return isinstance(other, WeylElement) and self.rs is other.rs and np.array_equal(
            self.perm, other.perm
        )

    def __hash__(self) -> int:
        return hash(self.perm.tobytes())

    def __repr__(self) -> str:
        return f"WeylElement(word={''.join(f's{i}' for i in self.word) or 'e'})"


@lru_cache(maxsize=None)
def _reflection_element(rs: RootSystem, root: Root) -> "WeylElement":
    return WeylElement.from_word(rs, _reflection_word(rs, root))


def _reflection_word(rs: RootSystem, root: Root) -> tuple[int, ...]:
    if not rs.is_positive(root):
        root = tuple(-c for c in root)
    for i in range(rs.rank):
        if root == rs.simple_root(i):
            return (i,)
    for i in range(rs.rank):
        c = rs.pairing(root, rs.simple_root(i))
        if c > 0:
            inner = _reflection_word(rs, rs.reflect(root, rs.simple_root(i)))
            return (i,) + inner + (i,)
    raise AssertionError(f"no descent for {root}")


class WeylSubgroup:
    """Weyl subgroup given by a pi-system basis of positive roots."""

    __slots__ = ("rs", "basis")

    def __init__(self, rs: RootSystem, basis):
        basis = tuple(tuple(b) for b in basis)
        for b in basis:
            if b not in rs.root_index:
                raise ValueError(f"{b} is not a root")
            if not rs.is_positive(b):
                raise ValueError(f"subgroup basis root {b} is not positive")
        for i, a in enumerate(basis):
            for b in basis[i + 1 :]:
                if tuple(x - y for x, y in zip(a, b)) in rs.root_index:
                    raise ValueError(f"basis violates C1: {a} - {b} is a root")
        if basis and rank_int([list(b) for b in basis]) != len(basis):
            raise ValueError("basis violates C2: roots are linearly dependent")
        self.rs = rs
        self.basis = basis

    def __repr__(self) -> str:
        return f"WeylSubgroup(basis={list(self.basis)})"


def length(rs: RootSystem, w: WeylElement) -> int:
    return w.length()


def shortest_coset_reps(rs: RootSystem, sub: WeylSubgroup) -> list[WeylElement]:
    """Minimal-length representatives of the right cosets of the subgroup.

    Representatives w are exactly those with w^{-1}(beta_j) > 0 for every
    basis root; they are grown level by level, extending w to w*s_i whenever
    the length goes up and the coset condition still holds.
    """
    simples = _simple_perm_table(rs)
    simple_idx = _simple_indices(rs)
    n_pos = rs.n_pos
    beta_idx = [rs.root_index[b] for b in sub.basis]
    ident = np.arange(len(rs.roots), dtype=_DTYPE)
    reps: list[WeylElement] = []
    level = {ident.tobytes(): (ident, ident, ())}
    while level:
        nxt = {}
        for perm, inv, word in level.values():
            e = WeylElement(rs, perm, word)
            e.perm.setflags(write=False)
            reps.append(e)
            for i in range(rs.rank):
                if perm[simple_idx[i]] >= n_pos:
                    continue  # l(w s_i) < l(w)
                si = simples[i]
                if any(si[inv[bj]] >= n_pos for bj in beta_idx):
                    continue  # (w s_i)^{-1} sends some beta_j negative
                new_perm = perm[si]
                key = new_perm.tobytes()
                if key not in nxt:
                    nxt[key] = (new_perm, si[inv], word + (i,))
        level = nxt
    return reps


def to_subdominant(rs: RootSystem, sub: WeylSubgroup, mu) -> tuple[tuple, WeylElement]:
    """The unique subgroup-dominant representative of the orbit of mu.

    Returns (lam, w) with w(mu) = lam and <lam, beta_i^vee> >= 0 for every
    basis root, reflecting at the smallest violating index until none is left.
    """
    mu = tuple(mu)
    w = WeylElement.identity(rs)
    while True:
        for beta in sub.basis:
            if rs.pairing(mu, beta) < 0:
                mu = rs.reflect(mu, beta)
                w = WeylElement.reflection(rs, beta) * w
                break
        else:
            return mu, w


def stabilizer_generators(rs: RootSystem, sub: WeylSubgroup, lam1) -> tuple[Root, ...]:
    """Positive pi-system basis whose reflections generate the stabiliser of
    lam1 in the subgroup."""
    lam, v = to_subdominant(rs, sub, lam1)
    zeros = [b for b in sub.basis if rs.pairing(lam, b) == 0]
    if not zeros:
        return ()
    vinv = v.inverse()
    gens = [vinv.act_weight(b) for b in zeros]
    return rs.subsystem_positive_basis(gens)


def conjugate_tuples(rs: RootSystem, sub: WeylSubgroup, mus, lams) -> WeylElement | None:
    """An element w of the subgroup with w(mu_i) = lam_i for all i, or None.

    Matches the first entries via subdominant representatives, then recurses
    inside the stabiliser of lam_1.
    """
    mus = [tuple(m) for m in mus]
    lams = [tuple(x) for x in lams]
    if len(mus) != len(lams):
        raise ValueError("tuples must have equal length")
    if not mus:
        return WeylElement.identity(rs)
    m1, u = to_subdominant(rs, sub, mus[0])
    l1, v = to_subdominant(rs, sub, lams[0])
    if m1 != l1:
        return None
    w1 = v.inverse() * u
    if len(mus) == 1:
        return w1
    stab = WeylSubgroup(rs, stabilizer_generators(rs, sub, lams[0]))
    rest = [w1.act_weight(m) for m in mus[1:]]
    w = conjugate_tuples(rs, stab, rest, lams[1:])
    return None if w is None else w * w1


def conjugate_sets(rs: RootSystem, sub: WeylSubgroup, gamma1, gamma2) -> WeylElement | None:
    """An element w of the subgroup with w(Gamma1) = Gamma2 as sets, or None.

    Backtracks over the bijections Gamma1 -> Gamma2 that preserve all pairwise
    inner products, testing each with conjugate_tuples.
    """
    g1 = sorted((tuple(x) for x in gamma1), key=lambda v: (rs.inner(v, v), v))
    g2 = sorted((tuple(x) for x in gamma2), key=lambda v: (rs.inner(v, v), v))
    if len(g1) != len(g2):
        raise ValueError("sets must have equal size")
    m = len(g1)
    if m == 0:
        return WeylElement.identity(rs)
    gram1 = [[rs.inner(a, b) for b in g1] for a in g1]
    gram2 = [[rs.inner(a, b) for b in g2] for a in g2]

    assignment: list[int] = []
    used = [False] * m

    def backtrack() -> WeylElement | None:
        i = len(assignment)
        if i == m:
            w = conjugate_tuples(rs, sub, g1, [g2[p] for p in assignment])
            return w
        for p in range(m):
            if used[p] or gram1[i][i] != gram2[p][p]:
                continue
            if any(gram1[i][j] != gram2[p][assignment[j]] for j in range(i)):
                continue
            assignment.append(p)
            used[p] = True
            found = backtrack()
            if found is not None:
                return found
            assignment.pop()
            used[p] = False
        return None

    return backtrack()
