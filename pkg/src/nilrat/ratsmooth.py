"""Stalks of intersection cohomology on orbit closures and the rational
singular locus.

The stalk of the intersection cohomology complex of the closure of
``O_lambda`` at a point of ``O_mu`` is read off the Lusztig-Shoji matrix:
sum the row of ``chi_(lambda, triv)`` over the Springer block of ``mu`` and
divide out the lowest power of q. A closure is rationally smooth at ``mu``
exactly when every stalk on the closure interval ``[mu, lambda]`` is 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .errors import InvalidInputError, UnsupportedFamilyError, ValidationError
from .orbits import (G2_CHAIN, G2_ORBIT_DIMS, Algebra, OrbitLabel, as_label,
                     closure_leq, closure_poset, g2_leq, orbit_dimension,
                     parse_g2_orbit, root_vector_orbit)
from .qpoly import QPoly, ZERO
from .shoji import ktilde_matrix
from .springer import springer_correspondence

OrbitLike = Union[OrbitLabel, tuple, str]


def _classical_only(alg: Algebra) -> None:
    if not alg.is_classical:
        raise UnsupportedFamilyError(
            f"stalk computations need the Springer data of a classical type, not {alg.name}")


def _pair(alg: Algebra, lam: OrbitLike, mu: OrbitLike) -> tuple[OrbitLabel, OrbitLabel]:
    _classical_only(alg)
    lam, mu = as_label(alg, lam), as_label(alg, mu)
    if not closure_leq(mu, lam):
        raise InvalidInputError(f"{mu} does not lie in the closure of {lam} in {alg.name}")
    return lam, mu


def raw_stalk(alg: Algebra, lam: OrbitLabel, mu: OrbitLabel) -> QPoly:
    """Block-column sum of P before normalization (all local systems of
    classical groups are one dimensional)."""
    kt = ktilde_matrix(alg)
    smap = springer_correspondence(alg)
    row = kt.P[kt.index(smap.springer_rep(lam))]
    total = ZERO
    for _, irr in smap.blocks[mu]:
        total = total + row[kt.index(irr)]
    return total


def stalk_poincare(alg: Algebra, lam: OrbitLike, mu: OrbitLike) -> QPoly:
    """Stalk polynomial with the forced shift ``q^{dim B_u}`` (u in O_lambda)
    divided out. The constant term counts the local branches of the closure
    at mu: it is 1 at unibranch points and larger where the closure is not
    unibranch (which happens in types B, C and D)."""
    lam, mu = _pair(alg, lam, mu)
    raw = raw_stalk(alg, lam, mu)
    shift = (2 * alg.n_positive_roots - orbit_dimension(alg, lam)) // 2
    if raw.is_zero() or raw.valuation != shift:
        raise ValidationError(
            f"stalk of {lam} at {mu} in {alg.name} is {raw}; its lowest term should be a multiple of q^{shift}")
    out = raw.shift(-shift)
    if out.coeffs[0] < 1 or min(out.coeffs) < 0:
        raise ValidationError(f"stalk of {lam} at {mu} in {alg.name} has negative or vanishing terms: {out}")
    return out


def branch_count(alg: Algebra, lam: OrbitLike, mu: OrbitLike) -> int:
    """Degree zero part of the stalk: the number of branches at mu."""
    return stalk_poincare(alg, lam, mu).coeffs[0]


def stalk_trivial(alg: Algebra, lam: OrbitLike, mu: OrbitLike) -> bool:
    return stalk_poincare(alg, lam, mu) == QPoly.const(1)


def rationally_smooth_at(alg: Algebra, lam: OrbitLike, mu: OrbitLike) -> bool:
    lam, mu = _pair(alg, lam, mu)
    return all(stalk_trivial(alg, lam, nu) for nu in closure_poset(alg).interval(mu, lam))


@dataclass
class StalkEntry:
    mu: OrbitLabel
    dimension: int
    stalk: QPoly
    trivial: bool
    rationally_smooth: bool

    def to_json(self) -> dict:
        return {"mu": str(self.mu), "dimension": self.dimension,
                "stalk": list(self.stalk.coeffs), "trivial": self.trivial,
                "rationallySmooth": self.rationally_smooth}


@dataclass
class StalkReport:
    algebra: Algebra
    lam: OrbitLabel
    entries: list[StalkEntry]
    rat_sing_maximal: list[OrbitLabel] = field(default_factory=list)

    @property
    def locus(self) -> list[OrbitLabel]:
        """Orbits in the rational singular locus, largest first."""
        return [e.mu for e in self.entries if not e.rationally_smooth]

    @property
    def locus_dimension(self) -> int:
        """Dimension of the locus, or -1 when it is empty."""
        return max((e.dimension for e in self.entries if not e.rationally_smooth), default=-1)

    def entry(self, mu: OrbitLike) -> StalkEntry:
        mu = as_label(self.algebra, mu)
        for e in self.entries:
            if e.mu == mu:
                return e
        raise InvalidInputError(f"{mu} does not lie in the closure of {self.lam}")

    def to_json(self) -> dict:
        return {
            "algebra": self.algebra.name,
            "lambda": str(self.lam),
            "entries": [e.to_json() for e in self.entries],
            "ratSingMaximal": [str(o) for o in self.rat_sing_maximal],
            "locusDimension": self.locus_dimension,
        }


def rational_singular_locus(alg: Algebra, lam: OrbitLike) -> StalkReport:
    _classical_only(alg)
    lam = as_label(alg, lam)
    poset = closure_poset(alg)
    below = poset.down_set(lam)
    stalks = {mu: stalk_poincare(alg, lam, mu) for mu in below}
    bad = [mu for mu in below if stalks[mu] != QPoly.const(1)]
    entries = []
    for mu in below:
        smooth = not any(closure_leq(mu, nu) for nu in bad)
        entries.append(StalkEntry(mu, poset.dims[mu], stalks[mu], stalks[mu] == QPoly.const(1), smooth))
    maximal = [nu for nu in bad if not any(o != nu and closure_leq(nu, o) for o in bad)]
    report = StalkReport(alg, lam, entries, maximal)
    if report.entries[0].mu != lam or not report.entries[0].trivial:
        raise ValidationError(f"stalk of {lam} on its own orbit is not trivial")
    return report


# -- Brion's necessary condition at the origin ---------------------------------------

@dataclass(frozen=True)
class BrionCheck:
    algebra: str
    orbit: str
    dim_x: int
    brion_sum: int

    @property
    def passes(self) -> bool:
        return self.dim_x == self.brion_sum

    def to_json(self) -> dict:
        return {"algebra": self.algebra, "orbit": self.orbit, "dimX": self.dim_x,
                "brionSum": self.brion_sum, "passes": self.passes}


def brion_zero_check(alg: Algebra, lam) -> BrionCheck:
    """Compare dim X with twice the number of positive roots whose root vectors
    lie in X; every contributing root spans a two dimensional slice."""
    counts = alg.root_counts()
    if alg.family == "G2":
        name = parse_g2_orbit(lam) if isinstance(lam, str) else str(lam)
        if name not in G2_ORBIT_DIMS:
            raise InvalidInputError(f"unknown G2 orbit {name!r}; expected one of {list(G2_CHAIN)}")
        leq = lambda o: g2_leq(o, name)  # noqa: E731
        dim_x = G2_ORBIT_DIMS[name]
    else:
        label = as_label(alg, lam)
        name = str(label)
        leq = lambda o: closure_leq(o, label)  # noqa: E731
        dim_x = orbit_dimension(alg, label)
    total = 0
    for length, count in counts.items():
        if count and leq(root_vector_orbit(alg, length)):
            total += 2 * count
    return BrionCheck(alg.name, name, dim_x, total)
