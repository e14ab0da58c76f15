"""Orbit listing through carrier algebras.

Every nilpotent orbit of the theta-group has a representative in general
position inside a complete, standard, locally flat Z-graded semisimple
subalgebra.  Candidate subalgebras are generated as pi-systems split into a
degree-0 part inside Phi_0 and a degree-1 part inside Phi_1; each flat
completion contributes the canonical form of twice its defining element,
and distinct canonical forms are exactly the distinct orbits.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .characteristics import DEFAULT_OMEGA_CAP, decide_normal, task_rng
from .chevalley import LieElement
from .grading import ThetaGrading
from .pisystems import canonical, classify_all
from .records import (
    InternalConsistencyError,
    OrbitRecord,
    cartan_from_dual_weight,
    dual_weight,
    sort_records,
    wdd_of_cartan,
    zero_record,
)
from .rootsystem import Root
from .weyl import WeylSubgroup, conjugate_tuples, to_subdominant

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class GradedCandidate:
    """Basis of a graded subalgebra: degree-0 roots and degree-1 roots."""

    pi0: tuple[Root, ...]
    pi1: tuple[Root, ...]

    def roots(self) -> tuple[Root, ...]:
        return self.pi0 + self.pi1

    def is_empty(self) -> bool:
        return not self.pi0 and not self.pi1


@dataclass
class CompletionResult:
    """Defining element and root data of the completion of a candidate."""

    h0: LieElement
    z_basis: tuple[LieElement, ...]
    psi0: tuple[Root, ...]
    psi1: tuple[Root, ...]
    flat: bool


def candidate_pi_systems(grading: ThetaGrading) -> list[GradedCandidate]:
    """Candidate set covering, up to conjugacy under the Weyl group of g_0,
    the bases of all locally flat standard graded subalgebras.

    Degree-0 parts run over the pi-systems of Phi_0; for each, the maximal
    degree-1 extensions inside Phi_1 are enumerated by backtracking, pruned
    of conjugate copies, and finally all subsets of the degree-1 parts are
    taken.
    """
    rs = grading.rs
    w0 = grading.weyl_subgroup()
    p0 = classify_all(rs, basis=grading.delta0, sub=w0)
    phi1 = sorted(grading.phi1, key=lambda r: (sum(r), r))

    pairs: list[GradedCandidate] = []
    for pi0 in p0:
        for pi1 in _maximal_extensions(rs, pi0, phi1):
            pairs.append(GradedCandidate(canonical(pi0), canonical(pi1)))
    pairs = _dedup_pairs(rs, w0, pairs)

    out = set()
    for cand in pairs:
        n = len(cand.pi1)
        for mask in range(1 << n):
            sub = canonical(p for i, p in enumerate(cand.pi1) if mask >> i & 1)
            out.add(GradedCandidate(cand.pi0, sub))
    ordered = sorted(out, key=lambda c: (len(c.pi0) + len(c.pi1), c.pi0, c.pi1))
    log.debug("%s: %d candidates", grading, len(ordered))
    return ordered


def _maximal_extensions(rs, pi0, phi1) -> list[tuple[Root, ...]]:
    base = [tuple(r) for r in pi0]

    def compatible(r: Root, chosen: list[Root]) -> bool:
        for q in base + chosen:
            if tuple(a - b for a, b in zip(r, q)) in rs.root_index:
                return False
        rows = [list(q) for q in base + chosen] + [list(r)]
        return linalg.rank_int(rows) == len(rows)

    out: list[tuple[Root, ...]] = []

    def recurse(chosen: list[Root], start: int) -> None:
        extendable = False
        for idx, r in enumerate(phi1):
            if r in chosen:
                continue
            if compatible(r, chosen):
                extendable = True
                if idx >= start:
                    chosen.append(r)
                    recurse(chosen, idx + 1)
                    chosen.pop()
        if not extendable:
            out.append(tuple(chosen))

    recurse([], 0)
    return out


def _pair_invariant(rs, cand: GradedCandidate):
    def block(roots):
        return tuple(sorted((rs.length2(r), tuple(sorted(rs.inner(r, q) for q in cand.roots()))) for r in roots))

    return (len(cand.pi0), len(cand.pi1), block(cand.pi0), block(cand.pi1))


def _conjugate_pairs(rs, sub: WeylSubgroup, a: GradedCandidate, b: GradedCandidate):
    """Subgroup element mapping a.pi0 -> b.pi0 and a.pi1 -> b.pi1 as sets.

    The backtracking over inner-product-preserving bijections is restricted
    to be block-preserving, since the degree of a root is invariant under
    the Weyl group of g_0.
    """
    if len(a.pi0) != len(b.pi0) or len(a.pi1) != len(b.pi1):
        return None
    src = list(a.pi0) + list(a.pi1)
    dst0, dst1 = list(b.pi0), list(b.pi1)
    n0 = len(a.pi0)
    m = len(src)
    gram_src = [[rs.inner(x, y) for y in src] for x in src]
    assignment: list[Root] = []

    def gram_ok(r: Root, i: int) -> bool:
        if rs.inner(r, r) != gram_src[i][i]:
            return False
        return all(rs.inner(r, assignment[j]) == gram_src[i][j] for j in range(i))

    def backtrack():
        i = len(assignment)
        if i == m:
            return conjugate_tuples(rs, sub, src, assignment)
        pool = dst0 if i < n0 else dst1
        for r in pool:
            if r in assignment or not gram_ok(r, i):
                continue
            assignment.append(r)
            found = backtrack()
            if found is not None:
                return found
            assignment.pop()
        return None

    return backtrack()


def _dedup_pairs(rs, sub: WeylSubgroup, pairs: list[GradedCandidate]) -> list[GradedCandidate]:
    buckets: dict = {}
    reps = []
    for cand in pairs:
        bucket = buckets.setdefault(_pair_invariant(rs, cand), [])
        if not any(_conjugate_pairs(rs, sub, cand, known) is not None for known in bucket):
            bucket.append(cand)
            reps.append(cand)
    return reps


def completion(grading: ThetaGrading, cand: GradedCandidate) -> CompletionResult | None:
    """Defining element of the completion of the candidate's subalgebra.

    Solves alpha(h0) = deg(alpha) over the span of the candidate's coroots,
    computes the centraliser directions z, and reads off the degree-0 and
    degree-1 root sets of the completion; returns None when no defining
    element exists (the linear system is inconsistent).
    """
    alg, rs = grading.alg, grading.rs
    pi = list(cand.pi0) + list(cand.pi1)
    if not pi:
        raise ValueError("empty candidate has no completion; handle upstream")
    degs = [0] * len(cand.pi0) + [1] * len(cand.pi1)
    coroots = [alg.coroot(a) for a in pi]
    rows = [[alg.root_value(b, hc) for hc in coroots] for b in pi]
    sol = linalg.solve(rows, degs)
    if sol is None:
        log.debug("candidate %s: no defining element", cand)
        return None
    h0 = alg.zero()
    for c, hc in zip(sol, coroots):
        if c:
            h0 = h0 + hc.scale(c)
    pair_rows = [[rs.pairing(a, rs.simple_root(k)) for k in range(rs.rank)] for a in pi]
    z_basis = tuple(alg.cartan(v) for v in linalg.nullspace(pair_rows))

    def in_completion(root: Root) -> bool:
        return all(alg.root_value(root, u) == 0 for u in z_basis)

    one = 1 % grading.m
    psi0 = tuple(
        r
        for r, d in zip(rs.roots, grading.deg_by_index)
        if d == 0 and alg.root_value(r, h0) == 0 and in_completion(r)
    )
    psi1 = tuple(
        r
        for r, d in zip(rs.roots, grading.deg_by_index)
        if d == one and alg.root_value(r, h0) == 1 and in_completion(r)
    )
    flat = len(pi) + len(psi0) == len(psi1)
    return CompletionResult(h0, z_basis, psi0, psi1, flat)


def classify_by_carriers(
    grading: ThetaGrading,
    seed: int = 0,
    omega_cap: int = DEFAULT_OMEGA_CAP,
) -> list[OrbitRecord]:
    """All nilpotent orbits of the theta-group via flat carrier candidates.

    Each flat completion contributes h = 2 h0, canonicalised into the
    dominant chamber of W_l; unseen canonical forms are completed to normal
    triples, which must succeed for a flat carrier.
    """
    alg, rs = grading.alg, grading.rs
    wl = grading.weyl_subgroup()
    records = [zero_record(alg)]
    seen = set()
    for idx, cand in enumerate(candidate_pi_systems(grading)):
        if cand.is_empty():
            continue
        comp = completion(grading, cand)
        if comp is None or not comp.flat:
            continue
        htilde = comp.h0.scale(2)
        lam, _ = to_subdominant(rs, wl, dual_weight(alg, htilde))
        h = cartan_from_dual_weight(alg, lam)
        key = tuple(Fraction(c) for c in h.cartan_part())
        if key in seen:
            continue
        seen.add(key)
        triple = decide_normal(grading, h, rng=task_rng(seed, idx), omega_cap=omega_cap)
        if triple is None:
            raise InternalConsistencyError(
                f"flat carrier {cand} produced non-normal canonical h = {h!r}"
            )
        records.append(
            OrbitRecord(triple.h, triple.e, triple.f, ambient_wdd=wdd_of_cartan(alg, triple.h))
        )
    return sort_records(records)
