"""Nullcone analytics: orbit dimensions, components, rank, and the survey
of N-regular automorphisms (those whose degree-1 part meets the regular
nilpotent orbit)."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .carrier import classify_by_carriers
from .characteristics import DEFAULT_OMEGA_CAP, classify_by_characteristics
from .chevalley import ChevalleyAlgebra, LieElement, Sl2Triple
from .grading import KacDiagram, ThetaGrading, enumerate_kac_diagrams, grading_from_kac
from .records import InternalConsistencyError, OrbitRecord, WeightedDynkinDiagram, wdd_of_cartan

log = logging.getLogger(__name__)

# Above this coset index the characteristic sweep loses to the carrier walk.
METHOD_INDEX_THRESHOLD = 5000


@dataclass(frozen=True)
class NullconeSummary:
    """Shape of the nilpotent variety of g_1.

    orbit_count counts the nonzero nilpotent orbits, matching the table
    convention downstream; the zero orbit is always present as a record but
    is not a component and carries no dimension.
    """

    orbit_count: int
    component_count: int
    component_dim: int
    rank: int
    nregular: bool
    very_nregular: bool


def orbit_dimension(grading: ThetaGrading, e: LieElement) -> int:
    """dim [g_0, e]: the dimension of the orbit of e under the theta-group."""
    if e.is_zero():
        return 0
    den = 1
    for c in e.coeffs.values():
        c = Fraction(c)
        den = den * c.denominator // _gcd(den, c.denominator)
    e_int = e.scale(den)
    alg = grading.alg
    rows = []
    for b in grading.component_basis(0):
        img = alg.bracket(b, e_int)
        rows.append([int(x) for x in img.dense()])
    return linalg.rank_int(rows)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def ambient_wdd(alg: ChevalleyAlgebra, triple: Sl2Triple) -> WeightedDynkinDiagram:
    """Weighted Dynkin diagram of the ambient orbit of the triple's e."""
    return wdd_of_cartan(alg, triple.h)


def summarize(grading: ThetaGrading, records: list[OrbitRecord]) -> NullconeSummary:
    """Component data of the nullcone from a full orbit listing.

    The components are the closures of the orbits of maximal dimension; the
    rank of g_1 is the codimension of such an orbit.  Very-N-regularity asks
    all maximal orbits to share one ambient orbit, tested by equality of
    their weighted Dynkin diagrams.
    """
    nonzero = [r for r in records if not r.is_zero()]
    for r in nonzero:
        if r.dim is None:
            r.dim = orbit_dimension(grading, r.e)
    dim_g1 = grading.dims()[1 % grading.m]
    if not nonzero:
        return NullconeSummary(0, 0, 0, dim_g1, False, True)
    max_dim = max(r.dim for r in nonzero)
    components = [r for r in nonzero if r.dim == max_dim]
    wdds = {r.ambient_wdd for r in components}
    return NullconeSummary(
        orbit_count=len(nonzero),
        component_count=len(components),
        component_dim=max_dim,
        rank=dim_g1 - max_dim,
        nregular=any(r.ambient_wdd.is_regular() for r in nonzero),
        very_nregular=len(wdds) == 1,
    )


def classify_orbits(
    grading: ThetaGrading,
    method: str = "auto",
    seed: int = 0,
    omega_cap: int = DEFAULT_OMEGA_CAP,
) -> list[OrbitRecord]:
    """Orbit records with dimensions filled, by either listing method.

    method 'auto' sweeps characteristics while the coset index of W_l stays
    small and switches to carrier algebras when it grows past the threshold.
    """
    if method == "auto":
        method = "1" if grading.coset_index() <= METHOD_INDEX_THRESHOLD else "2"
    if method == "1":
        records = classify_by_characteristics(grading, seed=seed, omega_cap=omega_cap)
    elif method == "2":
        records = classify_by_carriers(grading, seed=seed, omega_cap=omega_cap)
    else:
        raise ValueError(f"unknown method {method!r}; expected 'auto', '1' or '2'")
    for r in records:
        if r.dim is None:
            r.dim = orbit_dimension(grading, r.e)
    return records


def nregular_survey(
    alg: ChevalleyAlgebra,
    m: int,
    method: str = "auto",
    seed: int = 0,
    omega_cap: int = DEFAULT_OMEGA_CAP,
) -> tuple[KacDiagram, NullconeSummary]:
    """The unique order-m inner automorphism whose g_1 contains a regular
    nilpotent element, with its nullcone summary.

    Classifies the orbits of every order-m Kac diagram; exactly one diagram
    may pass the regularity test, anything else is a structural failure.
    """
    hits = []
    for kd in enumerate_kac_diagrams(alg.rs, m):
        grading = grading_from_kac(alg, kd)
        records = classify_orbits(grading, method=method, seed=seed, omega_cap=omega_cap)
        summary = summarize(grading, records)
        log.debug("survey %s m=%d %s: %s", alg, m, kd.labels, summary)
        if summary.nregular:
            hits.append((kd, summary))
    if len(hits) != 1:
        raise InternalConsistencyError(
            f"expected exactly one N-regular diagram of order {m}, found {len(hits)}"
        )
    return hits[0]
