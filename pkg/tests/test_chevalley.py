import random
from fractions import Fraction

import pytest

from nilorb import Sl2Triple, build_algebra, build_root_system

A1 = build_algebra(build_root_system("A", 1))
A2 = build_algebra(build_root_system("A", 2))
A3 = build_algebra(build_root_system("A", 3))
B2 = build_algebra(build_root_system("B", 2))
G2 = build_algebra(build_root_system("G", 2))


def jacobi_holds(alg, triples):
    for i, j, k in triples:
        xi, xj, xk = alg.basis_element(i), alg.basis_element(j), alg.basis_element(k)
        s = (
            alg.bracket(xi, alg.bracket(xj, xk))
            + alg.bracket(xj, alg.bracket(xk, xi))
            + alg.bracket(xk, alg.bracket(xi, xj))
        )
        if not s.is_zero():
            return False
    return True


def all_triples(alg):
    return [
        (i, j, k)
        for i in range(alg.dim)
        for j in range(i + 1, alg.dim)
        for k in range(j + 1, alg.dim)
    ]


@pytest.mark.parametrize("alg", [A1, A2, B2, G2, A3])
def test_jacobi_exhaustive_small(alg):
    assert jacobi_holds(alg, all_triples(alg))


def test_a1_is_sl2():
    h, e, f = A1.cartan([1]), A1.root_vector((1,)), A1.root_vector((-1,))
    assert A1.bracket(h, e) == e.scale(2)
    assert A1.bracket(h, f) == f.scale(-2)
    assert A1.bracket(e, f) == h


def test_structure_constant_magnitudes():
    i, j = A2.rs.root_index[(1, 0)], A2.rs.root_index[(0, 1)]
    assert abs(A2.n_const(i, j)) == 1
    i, j = G2.rs.root_index[(1, 0)], G2.rs.root_index[(1, 1)]
    assert abs(G2.n_const(i, j)) == 2
    i, j = G2.rs.root_index[(1, 1)], G2.rs.root_index[(2, 1)]
    assert abs(G2.n_const(i, j)) == 3


def test_extraspecial_pairs_positive():
    # the first special pair of each positive root gets the +(p+1) sign
    rs = G2.rs
    order = {r: k for k, r in enumerate(rs.positive_roots)}
    for rho in rs.positive_roots:
        if sum(rho) < 2:
            continue
        pairs = [
            (a, tuple(r - x for r, x in zip(rho, a)))
            for a in rs.positive_roots
            if tuple(r - x for r, x in zip(rho, a)) in rs.root_index
        ]
        pairs = [(a, b) for a, b in pairs if rs.is_positive(b) and order[a] < order[b]]
        a, b = min(pairs, key=lambda p: order[p[0]])
        assert G2.n_const(rs.root_index[a], rs.root_index[b]) > 0


def test_constants_integral():
    for alg in (A3, B2, G2):
        assert all(isinstance(v, int) for v in alg._n.values())


def test_cartan_brackets():
    # [h_i, x_alpha] = <alpha, alpha_i^vee> x_alpha
    for alg in (A2, G2):
        for i in range(alg.rs.rank):
            h = alg.cartan([1 if j == i else 0 for j in range(alg.rs.rank)])
            for r in alg.rs.roots:
                x = alg.root_vector(r)
                expect = x.scale(alg.rs.pairing(r, alg.rs.simple_root(i)))
                assert alg.bracket(h, x) == expect


def test_opposite_root_brackets_give_coroots():
    for alg in (A2, B2, G2):
        for r in alg.rs.roots:
            x, y = alg.root_vector(r), alg.root_vector(tuple(-c for c in r))
            assert alg.bracket(x, y) == alg.coroot(r)
            # sl2 relations of the standard triple of the root
            assert alg.bracket(alg.coroot(r), x) == x.scale(2)


def test_killing_form_values():
    h = A1.cartan([1])
    e, f = A1.root_vector((1,)), A1.root_vector((-1,))
    assert A1.killing_form(h, h) == 8
    assert A1.killing_form(e, e) == 0
    for alg in (A2, G2):
        for r in alg.rs.positive_roots:
            x, y = alg.root_vector(r), alg.root_vector(tuple(-c for c in r))
            assert alg.killing_form(x, x) == 0
            assert alg.killing_form(x, y) != 0


def test_killing_form_invariance_sampled():
    rng = random.Random(11)
    for _ in range(40):
        i, j, k = (rng.randrange(G2.dim) for _ in range(3))
        x, y, z = (G2.basis_element(t) for t in (i, j, k))
        assert G2.killing_form(x, G2.bracket(y, z)) == G2.killing_form(G2.bracket(x, y), z)


def defining_rep(alg):
    """Matrices of the basis of an A_{n-1} algebra in the defining rep,
    extended from the simple generators through the bracket recursion."""
    rs = alg.rs
    n = rs.rank + 1

    def unit(i, j):
        m = [[Fraction(0)] * n for _ in range(n)]
        m[i][j] = Fraction(1)
        return m

    def mat_bracket(a, b):
        ab = [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
        ba = [[sum(b[i][k] * a[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
        return [[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(ab, ba)]

    rep = {}
    for i in range(rs.rank):
        rep[rs.root_index[rs.simple_root(i)]] = unit(i, i + 1)
        rep[rs.root_index[tuple(-c for c in rs.simple_root(i))]] = unit(i + 1, i)
    order = {r: k for k, r in enumerate(rs.positive_roots)}
    for rho in rs.positive_roots:
        if sum(rho) < 2:
            continue
        for a in rs.positive_roots:
            b = tuple(r - x for r, x in zip(rho, a))
            if b in rs.root_index and rs.is_positive(b) and order[a] < order[b]:
                ia, ib, irho = rs.root_index[a], rs.root_index[b], rs.root_index[rho]
                nval = alg.n_const(ia, ib)
                rep[irho] = [
                    [x / nval for x in row] for row in mat_bracket(rep[ia], rep[ib])
                ]
                ja, jb = rs.root_index[tuple(-c for c in a)], rs.root_index[tuple(-c for c in b)]
                jrho = rs.root_index[tuple(-c for c in rho)]
                nneg = alg.n_const(ja, jb)
                rep[jrho] = [
                    [x / nneg for x in row] for row in mat_bracket(rep[ja], rep[jb])
                ]
                break
    for i in range(rs.rank):
        m = [[Fraction(0)] * n for _ in range(n)]
        m[i][i], m[i + 1][i + 1] = Fraction(1), Fraction(-1)
        rep[len(rs.roots) + i] = m

    def matrix_of(x):
        out = [[Fraction(0)] * n for _ in range(n)]
        for k, c in x.coeffs.items():
            for a in range(n):
                for b in range(n):
                    out[a][b] += c * rep[k][a][b]
        return out

    return matrix_of


def matrix_nilpotent(m):
    n = len(m)
    power = m
    for _ in range(n):
        power = [[sum(power[i][k] * m[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    return all(all(x == 0 for x in row) for row in power)


@pytest.mark.parametrize("alg", [A1, A2, A3])
def test_is_nilpotent_matches_defining_representation(alg):
    matrix_of = defining_rep(alg)
    rng = random.Random(alg.dim)
    # the rep is a homomorphism on our basis: spot-check brackets
    for _ in range(20):
        i, j = rng.randrange(alg.dim), rng.randrange(alg.dim)
        x, y = alg.basis_element(i), alg.basis_element(j)
        lhs = matrix_of(alg.bracket(x, y))
        a, b = matrix_of(x), matrix_of(y)
        n = len(a)
        rhs = [
            [
                sum(a[r][k] * b[k][c] - b[r][k] * a[k][c] for k in range(n))
                for c in range(n)
            ]
            for r in range(n)
        ]
        assert lhs == rhs
    samples = [alg.zero(), alg.cartan([1] * alg.rs.rank), alg.root_vector(alg.rs.positive_roots[-1])]
    for _ in range(15):
        coeffs = {rng.randrange(alg.dim): rng.randint(-2, 2) for _ in range(3)}
        from nilorb.chevalley import LieElement

        samples.append(LieElement(alg, coeffs))
    for x in samples:
        assert alg.is_nilpotent(x) == matrix_nilpotent(matrix_of(x))


def test_is_nilpotent_examples():
    assert A1.is_nilpotent(A1.zero())
    assert not A1.is_nilpotent(A1.cartan([1]))
    e, f = A1.root_vector((1,)), A1.root_vector((-1,))
    assert A1.is_nilpotent(e)
    assert not A1.is_nilpotent(e + f)  # semisimple, conjugate to the Cartan


def test_complete_sl2_standard_triple():
    h, e, f = A1.cartan([1]), A1.root_vector((1,)), A1.root_vector((-1,))
    triple = A1.complete_sl2(h, e, [f])
    assert triple == Sl2Triple(h, e, f)


def test_complete_sl2_absence_for_zero_e():
    h = A1.cartan([1])
    assert A1.complete_sl2(h, A1.zero(), []) is None


def test_complete_sl2_rejects_bad_preconditions():
    h, e = A1.cartan([1]), A1.root_vector((1,))
    with pytest.raises(ValueError):
        A1.complete_sl2(h, A1.root_vector((-1,)), [])  # [h, e] != 2e
    with pytest.raises(ValueError):
        A1.complete_sl2(h, e, [e])  # f_space not in the -2 eigenspace


def test_ad_matrix_examples():
    h, e = A1.cartan([1]), A1.root_vector((1,))
    assert A1.ad_matrix(h, [e], [e]) == [[Fraction(2)]]
    x1 = A2.root_vector((1, 0))
    x2 = A2.root_vector((0, 1))
    x12 = A2.root_vector((1, 1))
    m = A2.ad_matrix(x1, [x2], [x12])
    assert m in ([[Fraction(1)]], [[Fraction(-1)]])
    with pytest.raises(ValueError):
        A2.ad_matrix(x1, [x2], [x2])  # image leaves the codomain span


def test_element_serialisation():
    x = A2.root_vector((1, 1)).scale(Fraction(3, 2)) + A2.cartan([0, 1])
    assert x.to_triples() == [("x[1,1]", 3, 2), ("h[2]", 1, 1)]
