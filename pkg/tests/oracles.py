"""Brute-force oracles, kept independent of the library's own machinery.

Weyl groups are enumerated as integer matrices acting on simple-root
coordinates, built only from the Cartan matrix; pi-system classification
enumerates all root subsets directly.
"""

from __future__ import annotations

from itertools import combinations


def reflection_matrix(rs, i: int):
    """Matrix of s_i on simple-root coordinates: column j of the matrix is
    alpha_j - <alpha_j, alpha_i^vee> alpha_i."""
    l = rs.rank
    rows = [[1 if a == b else 0 for b in range(l)] for a in range(l)]
    for j in range(l):
        rows[i][j] -= rs.cartan_matrix[j][i]
    return tuple(tuple(r) for r in rows)


def mat_mul(a, b):
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n)
    )


def mat_vec(a, v):
    return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in a)


def weyl_matrices(rs):
    """Every element of the Weyl group, by closure over simple reflections."""
    gens = [reflection_matrix(rs, i) for i in range(rs.rank)]
    ident = tuple(tuple(1 if a == b else 0 for b in range(rs.rank)) for a in range(rs.rank))
    seen = {ident}
    work = [ident]
    while work:
        m = work.pop()
        for g in gens:
            p = mat_mul(g, m)
            if p not in seen:
                seen.add(p)
                work.append(p)
    return sorted(seen)


def subgroup_matrices(rs, basis):
    """Closure of the reflections in the given roots, as matrices."""

    def refl(root):
        l = rs.rank
        rows = [[1 if a == b else 0 for b in range(l)] for a in range(l)]
        for j in range(l):
            unit = tuple(1 if t == j else 0 for t in range(l))
            c = rs.pairing(unit, root)
            for a in range(l):
                rows[a][j] -= c * root[a]
        return tuple(tuple(r) for r in rows)

    gens = [refl(tuple(b)) for b in basis]
    ident = tuple(tuple(1 if a == b else 0 for b in range(rs.rank)) for a in range(rs.rank))
    seen = {ident}
    work = [ident]
    while work:
        m = work.pop()
        for g in gens:
            p = mat_mul(g, m)
            if p not in seen:
                seen.add(p)
                work.append(p)
    return sorted(seen)


def matrix_length(rs, m) -> int:
    """Number of positive roots sent to negative roots."""
    count = 0
    for r in rs.positive_roots:
        img = mat_vec(m, r)
        if not rs.is_positive(img):
            count += 1
    return count


def brute_pi_classes(rs, max_size=None):
    """All pi-systems of the root system up to W-conjugacy, by enumerating
    every subset of the roots (the empty system included)."""
    from nilorb.pisystems import is_pi_system

    max_size = rs.rank if max_size is None else max_size
    systems = [()]
    for size in range(1, max_size + 1):
        for combo in combinations(rs.roots, size):
            if is_pi_system(rs, combo):
                systems.append(tuple(sorted(combo)))
    group = weyl_matrices(rs)
    classes = []
    seen = set()
    for pi in systems:
        if pi in seen:
            continue
        orbit = {tuple(sorted(mat_vec(m, r) for r in pi)) for m in group}
        seen |= orbit
        classes.append(pi)
    return classes


def partition_count(n: int) -> int:
    """Number of partitions of n, by direct enumeration."""
    count = 0

    def rec(remaining: int, largest: int) -> None:
        nonlocal count
        if remaining == 0:
            count += 1
            return
        for p in range(min(remaining, largest), 0, -1):
            rec(remaining - p, p)

    rec(n, n)
    return count
