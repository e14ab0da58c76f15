"""Orbit listing by ambient characteristics and the Weyl coset sweep.

Nilpotent orbits of the ambient algebra are classified by weighted Dynkin
diagrams.  For each dominant characteristic h, the images under the minimal
coset representatives of W_l exhaust the chamber C_l + r, and testing each
image for membership in a normal sl2-triple (h in g_0, e in g_1, f in
g_{m-1}) yields one triple per nilpotent orbit of the theta-group.
"""

from __future__ import annotations

import logging
import random
from fractions import Fraction
from functools import lru_cache
from itertools import product

from . import linalg
from .chevalley import ChevalleyAlgebra, LieElement, Sl2Triple
from .grading import ThetaGrading, trivial_grading
from .records import (
    InternalConsistencyError,
    OrbitRecord,
    WeightedDynkinDiagram,
    cartan_from_dual_weight,
    dual_weight,
    sort_records,
    zero_record,
)
from .weyl import shortest_coset_reps

log = logging.getLogger(__name__)

DEFAULT_OMEGA_CAP = 2**20

_MASK64 = (1 << 64) - 1


class RetryBudgetError(RuntimeError):
    """The random search for an element in general position exhausted its
    coefficient budget; retry with a different seed or a larger cap."""


def task_rng(seed: int, task_id: int) -> random.Random:
    """Per-task generator: splitmix64 applied to seed xor golden-ratio*id."""
    z = (seed ^ (task_id * 0x9E3779B97F4A7C15)) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return random.Random(z ^ (z >> 31))


def h_from_wdd(alg: ChevalleyAlgebra, wdd: WeightedDynkinDiagram) -> LieElement:
    """The Cartan element with alpha_i(h) = d_i for every simple root."""
    rs = alg.rs
    rows = [list(rs.cartan_matrix[j]) for j in range(rs.rank)]
    sol = linalg.solve(rows, list(wdd.labels))
    return alg.cartan(sol)


def decide_normal(
    grading: ThetaGrading,
    h: LieElement,
    rng: random.Random | None = None,
    omega_cap: int = DEFAULT_OMEGA_CAP,
) -> Sl2Triple | None:
    """Normal sl2-triple (h, e, f) with e in g_1(2), f in g_{m-1}(-2), or None.

    h must lie in the Cartan subalgebra of g_0.  Steps: quick membership test
    of h in [g_1(2), g_{m-1}(-2)]; random search for e in general position
    ([g_0(0), e] = g_1(2)), with coefficients uniform in {0..n} and n doubled
    after every failure; exact linear solve for f.
    """
    alg, rs, m = grading.alg, grading.rs, grading.m
    if not h.is_cartan():
        raise ValueError("h must lie in the Cartan subalgebra")
    if h.is_zero():
        return None
    if rng is None:
        rng = task_rng(0, 0)

    # scale h to integers: hnum/den
    c = [Fraction(x) for x in h.cartan_part()]
    den = 1
    for x in c:
        den = den * x.denominator // _gcd(den, x.denominator)
    hnum = [int(x * den) for x in c]

    pair = alg._pair_simple
    deg = grading.deg_by_index
    l = rs.rank
    values = [sum(hnum[k] * pair[i][k] for k in range(l)) for i in range(len(rs.roots))]

    one = 1 % m
    eye = [i for i in range(len(rs.roots)) if deg[i] == one and values[i] == 2 * den]
    if not eye:
        return None

    # h in [g_1(2), g_{m-1}(-2)] iff h lies in the span of the coroots h_alpha,
    # alpha in g_1(2): only the alpha = beta bracket pairs hit the Cartan.
    coroot_rows = [list(alg._coroot[i]) for i in eye]
    if linalg.rank_int(coroot_rows) != linalg.rank_int(coroot_rows + [hnum]):
        return None

    zero_idx = [i for i in range(len(rs.roots)) if deg[i] == 0 and values[i] == 0]
    pos_in_eye = {i: t for t, i in enumerate(eye)}
    s = len(eye)

    n = 4
    while True:
        coeffs = [rng.randint(0, n) for _ in range(s)]
        cols = []
        for k in range(l):  # columns [h_k, e]
            cols.append([coeffs[t] * pair[eye[t]][k] for t in range(s)])
        for j in zero_idx:  # columns [x_beta, e]
            col = [0] * s
            for t in range(s):
                if coeffs[t]:
                    nval = alg.n_const(j, eye[t])
                    if nval:
                        target = tuple(
                            a + b for a, b in zip(rs.roots[j], rs.roots[eye[t]])
                        )
                        col[pos_in_eye[rs.root_index[target]]] += coeffs[t] * nval
            cols.append(col)
        if linalg.rank_int(cols) == s:
            break
        n *= 2
        if n > omega_cap:
            raise RetryBudgetError(
                f"no element in general position found with coefficients up to {omega_cap}"
            )

    e = alg.zero()
    for t in range(s):
        if coeffs[t]:
            e = e + alg.basis_element(eye[t]).scale(coeffs[t])
    f_space = [alg.basis_element(i + rs.n_pos if i < rs.n_pos else i - rs.n_pos) for i in eye]
    return alg.complete_sl2(h, e, f_space)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


@lru_cache(maxsize=None)
def classify_nilpotent_g(alg: ChevalleyAlgebra) -> tuple:
    """Dominant characteristics (wdd, h) of all nilpotent orbits of the
    ambient algebra, the zero orbit included.

    Runs the normality test over the trivial grading for each of the 3^l
    candidate label vectors; the surviving set does not depend on the random
    choices, so the result is cached per algebra.
    """
    triv = trivial_grading(alg)
    out = [(WeightedDynkinDiagram((0,) * alg.rs.rank), alg.zero())]
    for t_id, labels in enumerate(product((0, 1, 2), repeat=alg.rs.rank)):
        if not any(labels):
            continue
        wdd = WeightedDynkinDiagram(labels)
        h = h_from_wdd(alg, wdd)
        if decide_normal(triv, h, rng=task_rng(0xC1A55, t_id)) is not None:
            out.append((wdd, h))
    log.debug("ambient classification %s: %d orbits", alg, len(out))
    return tuple(out)


def normal_list(
    grading: ThetaGrading,
    coset_reps,
    h: LieElement,
    seed: int = 0,
    omega_cap: int = DEFAULT_OMEGA_CAP,
) -> list[Sl2Triple]:
    """Normal sl2-triples whose h lies in C_l + r and is W-conjugate to h.

    Applies every minimal coset representative to h (duplicate images merged)
    and keeps those images that embed in a normal triple.
    """
    alg = grading.alg
    lam = dual_weight(alg, h)
    seen = set()
    triples = []
    for idx, w in enumerate(coset_reps):
        mu = w.act_weight(lam)
        if mu in seen:
            continue
        seen.add(mu)
        image = cartan_from_dual_weight(alg, mu)
        triple = decide_normal(grading, image, rng=task_rng(seed, idx), omega_cap=omega_cap)
        if triple is not None:
            triples.append(triple)
    return triples


def classify_by_characteristics(
    grading: ThetaGrading,
    seed: int = 0,
    omega_cap: int = DEFAULT_OMEGA_CAP,
) -> list[OrbitRecord]:
    """All nilpotent orbits of the theta-group, one record per orbit, by
    sweeping coset images of every ambient characteristic."""
    alg = grading.alg
    characteristics = classify_nilpotent_g(alg)
    reps = shortest_coset_reps(grading.rs, grading.weyl_subgroup())
    records = [zero_record(alg)]
    order = sorted(
        (item for item in characteristics if not item[0].is_zero()),
        key=lambda item: -sum(item[0].labels),
    )
    for t_id, (wdd, h) in enumerate(order):
        triples = normal_list(grading, reps, h, seed=seed ^ (t_id + 1), omega_cap=omega_cap)
        log.debug("characteristic %s: %d triples", wdd.labels, len(triples))
        for tr in triples:
            records.append(OrbitRecord(tr.h, tr.e, tr.f, ambient_wdd=wdd))
    keys = [r.h_key() for r in records]
    if len(set(keys)) != len(keys):
        raise InternalConsistencyError("duplicate canonical h across characteristics")
    for r in records:
        if not grading.in_dominant_chamber(r.h):
            raise InternalConsistencyError(f"canonical h {r.h!r} left the dominant chamber")
    return sort_records(records)
