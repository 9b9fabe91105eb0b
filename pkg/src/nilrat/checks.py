"""Self-test harness: consistency gates, identities and worked examples.

Each check returns a short detail string and raises ``CheckFailure`` when a
property is violated. ``run_all`` times every check.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from .config import max_rank
from .errors import NilratError
from .kostka import modified_kf
from .orbits import (Algebra, OrbitLabel, closure_leq, minimal_orbit, nilcone_label,
                     orbit_dimension, spherical_orbits, valid_partitions, zero_label)
from .polychar import character_table, fake_degrees, inner_product, sign_irrep
from .qpoly import QPoly, q_integer
from .ratsmooth import (brion_zero_check, rational_singular_locus, rationally_smooth_at,
                        stalk_poincare, stalk_trivial)
from .shoji import check_reconstruction, ktilde_matrix, omega_matrix
from .springer import springer_correspondence

ONE = QPoly.const(1)


class CheckFailure(AssertionError):
    pass


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise CheckFailure(message)


def algebras(family: str, ranks: Iterable[int], cap: Optional[int] = None) -> list[Algebra]:
    limit = max_rank(family) if cap is None else min(cap, max_rank(family))
    return [Algebra(family, r) for r in ranks if r <= limit]


def low_rank_suite(cap: Optional[int] = None) -> list[Algebra]:
    return (algebras("A", range(1, 7), cap) + algebras("B", range(2, 5), cap)
            + algebras("C", range(2, 6), cap) + algebras("D", range(4, 5), cap))


def exceptional_smooth(alg: Algebra, o: OrbitLabel) -> bool:
    """Orbits whose closure is rationally smooth at the origin: the nilcone,
    and the minimal orbit in type C (including B2, isomorphic to C2)."""
    if o == nilcone_label(alg):
        return True
    return (alg.family == "C" or alg.name == "B2") and o == minimal_orbit(alg)


# -- individual checks --------------------------------------------------------------------

def golden_c3() -> str:
    a = Algebra("C", 3)
    _require(stalk_trivial(a, "3,3", "2,1,1,1,1"), "C3: stalk of (3,3) at (2,1^4) should be trivial")
    _require(not stalk_trivial(a, "3,3", "2,2,1,1"), "C3: stalk of (3,3) at (2^2,1^2) should not be trivial")
    _require(not rationally_smooth_at(a, "3,3", "2,1,1,1,1"),
             "C3: closure of (3,3) should be rationally singular at (2,1^4)")
    return "C3 (3,3): trivial at (2,1^4), nontrivial at (2^2,1^2)"


def golden_d4() -> str:
    a = Algebra("D", 4)
    _require(stalk_trivial(a, "5,3", "3,2,2,1"), "D4: stalk of (5,3) at (3,2^2,1) should be trivial")
    _require(not stalk_trivial(a, "5,3", "3,3,1,1"), "D4: stalk of (5,3) at (3^2,1^2) should not be trivial")
    return "D4 (5,3): trivial at (3,2^2,1), nontrivial at (3^2,1^2)"


def gate_type_a(cap: Optional[int] = None, top: int = 6) -> str:
    pairs = 0
    for a in algebras("A", range(1, top + 1), cap):
        kt = ktilde_matrix(a)
        smap = springer_correspondence(a)
        for lam in valid_partitions(a):
            row = kt.P[kt.index(smap.springer_rep(lam))]
            for mu in valid_partitions(a):
                got = row[kt.index(smap.springer_rep(mu))]
                want = modified_kf(lam.partition, mu.partition) if closure_leq(mu, lam) else QPoly()
                _require(got == want, f"{a.name}: engine gives {got} for ({lam}, {mu}), charge gives {want}")
                pairs += 1
    return f"{pairs} pairs agree with charge"


def gate_diagonal(suite: list[Algebra]) -> str:
    for a in suite:
        kt = ktilde_matrix(a)
        N = a.n_positive_roots
        for i, o in enumerate(kt.block_of):
            d = (2 * N - orbit_dimension(a, o)) // 2
            _require(kt.P[i][i] == QPoly.monomial(d), f"{a.name}: diagonal at {o} is {kt.P[i][i]}, not q^{d}")
    return f"{len(suite)} algebras"


def gate_nilcone(suite: list[Algebra]) -> str:
    for a in suite:
        nc = nilcone_label(a)
        for mu in valid_partitions(a):
            _require(stalk_poincare(a, nc, mu) == ONE, f"{a.name}: nilcone stalk at {mu} is not 1")
    return f"{len(suite)} algebras"


def normalization(suite: list[Algebra]) -> str:
    n = 0
    for a in suite:
        for lam in valid_partitions(a):
            for mu in valid_partitions(a):
                if closure_leq(mu, lam):
                    stalk_poincare(a, lam, mu)  # raises unless the shift is forced
                    n += 1
    return f"{n} stalks with shift q^(dim B_u)"


def reconstruction(suite: list[Algebra]) -> str:
    for a in suite:
        kt = ktilde_matrix(a)
        omega = omega_matrix(a, order=kt.irreps)
        _require(check_reconstruction(kt, omega), f"{a.name}: P Lambda P^t differs from Omega")
        for i in range(len(kt.irreps)):
            for j in range(len(kt.irreps)):
                _require(omega.entries[i][j] == omega.entries[j][i], f"{a.name}: Omega not symmetric")
    return f"{len(suite)} algebras"


def character_identities(suite: list[Algebra]) -> str:
    for a in suite:
        table = character_table(a)
        for i, x in enumerate(table.irreps):
            for j, y in enumerate(table.irreps[: i + 1]):
                ip = inner_product(a, table.values[i], table.values[j])
                _require(ip == (1 if i == j else 0), f"{a.name}: <{x}, {y}> = {ip}")
        R = fake_degrees(a)
        total = QPoly()
        for x in table.irreps:
            total = total + R[x] * table.degree(x)
        want = ONE
        for d in a.degrees:
            want = want * q_integer(d)
        _require(total == want, f"{a.name}: sum of dim * fake degree is not prod [d_i]_q")
        _require(R[sign_irrep(a)] == QPoly.monomial(a.n_positive_roots), f"{a.name}: fake degree of sign")
    return f"{len(suite)} groups"


def classification_at_zero(suite: list[Algebra]) -> str:
    for a in suite:
        zero = zero_label(a)
        for o in valid_partitions(a):
            if o == zero:
                continue
            smooth = exceptional_smooth(a, o)
            _require(stalk_trivial(a, o, zero) == smooth,
                     f"{a.name}: stalk of {o} at 0 is {'non' if smooth else ''}trivial")
            _require(brion_zero_check(a, o).passes == smooth,
                     f"{a.name}: Brion check at 0 disagrees for {o}")
            if smooth:
                _require(not rational_singular_locus(a, o).locus,
                         f"{a.name}: closure of {o} should be rationally smooth")
    g2 = Algebra("G2", 2)
    for name in ("A1", "Ã1", "G2(a1)", "G2"):
        _require(brion_zero_check(g2, name).passes == (name in ("A1", "G2")), f"G2: Brion check for {name}")
    return f"{len(suite)} algebras and G2"


def type_a_propagation(cap: Optional[int] = None, top: int = 7) -> str:
    n = 0
    for a in algebras("A", range(1, top + 1), cap):
        for lam in valid_partitions(a):
            for mu in valid_partitions(a):
                if closure_leq(mu, lam):
                    _require(stalk_trivial(a, lam, mu) == rationally_smooth_at(a, lam, mu),
                             f"{a.name}: trivial stalk without rational smoothness at ({lam}, {mu})")
                    n += 1
    return f"{n} pairs"


def spherical_type_c(cap: Optional[int] = None) -> str:
    for a in algebras("C", range(2, 6), cap):
        sph = spherical_orbits(a)
        for k in range(2, len(sph)):
            rep = rational_singular_locus(a, sph[k])
            _require(rep.rat_sing_maximal == [sph[k - 2]],
                     f"{a.name}: locus of {sph[k]} is {list(map(str, rep.rat_sing_maximal))}, "
                     f"expected closure of {sph[k - 2]}")
    return "one step below the boundary"


def spherical_type_a(cap: Optional[int] = None) -> str:
    """Non-largest spherical orbits are singular along their boundary; returns
    the rank parity for which the largest one is singular one step lower."""
    parity = set()
    for a in algebras("A", range(2, 8), cap):
        sph = spherical_orbits(a)
        for k in range(1, len(sph)):
            rep = rational_singular_locus(a, sph[k])
            if k < len(sph) - 1:
                _require(rep.rat_sing_maximal == [sph[k - 1]], f"{a.name}: locus of {sph[k]} is not its boundary")
                continue
            if rep.rat_sing_maximal == [sph[k - 1]]:
                parity.add(("boundary", a.rank % 2))
            elif k >= 2 and rep.rat_sing_maximal == [sph[k - 2]]:
                parity.add(("below", a.rank % 2))
            else:
                raise CheckFailure(f"{a.name}: unexpected locus for the largest spherical orbit")
    below = {p for kind, p in parity if kind == "below"}
    boundary = {p for kind, p in parity if kind == "boundary"}
    _require(not (below & boundary), "type A: parity classes are mixed")
    return (f"largest spherical one step below in {_parity_names(below)} rank, "
            f"boundary in {_parity_names(boundary)} rank")


def _parity_names(ps: set) -> str:
    return "/".join({0: "even", 1: "odd"}[p] for p in sorted(ps)) or "no"


@dataclass
class CheckResult:
    name: str
    passed: bool
    seconds: float
    detail: str


def registry(cap: Optional[int] = None) -> list[tuple[str, Callable[[], str]]]:
    suite = low_rank_suite(cap)
    wide = (algebras("A", range(1, 8), cap) + algebras("B", range(2, 6), cap)
            + algebras("C", range(2, 6), cap) + algebras("D", range(2, 5), cap))
    out = []
    if cap is None or cap >= 3:
        out.append(("golden C3", golden_c3))
    if cap is None or cap >= 4:
        out.append(("golden D4", golden_d4))
    out += [
        ("gate type A oracle", lambda: gate_type_a(cap)),
        ("gate diagonal", lambda: gate_diagonal(suite)),
        ("gate nilcone", lambda: gate_nilcone(suite)),
        ("stalk normalization", lambda: normalization(suite)),
        ("reconstruction", lambda: reconstruction(suite)),
        ("character identities", lambda: character_identities(wide)),
        ("classification at zero", lambda: classification_at_zero(suite)),
        ("type A propagation", lambda: type_a_propagation(cap)),
        ("spherical type C", lambda: spherical_type_c(cap)),
        ("spherical type A", lambda: spherical_type_a(cap)),
    ]
    return out


def run_all(cap: Optional[int] = None) -> list[CheckResult]:
    results = []
    for name, fn in registry(cap):
        start = time.perf_counter()
        try:
            detail, ok = fn(), True
        except (CheckFailure, NilratError) as exc:
            detail, ok = str(exc), False
        results.append(CheckResult(name, ok, time.perf_counter() - start, detail))
    return results
