"""Lusztig-Shoji algorithm: factor the Omega matrix of W as P * Lambda * P^t.

Rows and columns are indexed by the irreducible characters of W, grouped into
Springer blocks (one block per orbit) and ordered by orbit dimension,
largest first. P is block upper triangular, each diagonal block being
``q^{d} * I`` with ``d = dim B_u``; Lambda is block diagonal. The entry
``P[chi, (mu, psi)]`` is the graded multiplicity of ``chi`` in the
psi-isotypic part of the cohomology of the Springer fibre over ``mu``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

import numpy as np

from . import __version__, cache
from .config import check_rank
from .errors import InvalidInputError, ValidationError
from .orbits import Algebra, OrbitLabel, as_label, orbit_dimension
from .polychar import (IrrLabel, _molien, character_table, sign_value, weyl_key)
from .qpoly import QPoly, ZERO
from .springer import TRIVIAL, SpringerMap, springer_correspondence

log = logging.getLogger(__name__)

# omega = R_{chi chi' sign}(q): the normalisation under which P reproduces the
# modified Kostka-Foulkes polynomials in type A.
DIRECT = "direct"
# omega = q^N R_{chi chi' sign}(1/q)
REVERSED = "reversed"
SHIPPED_CONVENTION = DIRECT
CONVENTIONS = (DIRECT, REVERSED)


@dataclass
class OmegaMatrix:
    algebra: Algebra
    convention: str
    irreps: list[IrrLabel]
    entries: list[list[QPoly]]

    def entry(self, a: IrrLabel, b: IrrLabel) -> QPoly:
        idx = {x: i for i, x in enumerate(self.irreps)}
        return self.entries[idx[a]][idx[b]]


@dataclass
class KTildeMatrix:
    algebra: Algebra
    convention: str
    irreps: list[IrrLabel]           # block order
    block_of: list[OrbitLabel]       # orbit of each row/column
    P: list[list[QPoly]]
    Lam: list[list[QPoly]]

    def __post_init__(self):
        self._index = {x: i for i, x in enumerate(self.irreps)}

    def index(self, irr: IrrLabel) -> int:
        return self._index[irr]

    def to_json(self) -> dict:
        return {
            "algebra": self.algebra.name,
            "convention": self.convention,
            "irreps": [str(x) for x in self.irreps],
            "blocks": [str(o) for o in self.block_of],
            "P": _sparse(self.P),
            "Lambda": _sparse(self.Lam),
        }


def _sparse(mat: list[list[QPoly]]) -> list:
    return [[i, j, m.low, list(m.coeffs)] for i, row in enumerate(mat)
            for j, m in enumerate(row) if m]


def _dense(n: int, data: list) -> list[list[QPoly]]:
    mat = [[ZERO] * n for _ in range(n)]
    for i, j, low, coeffs in data:
        mat[i][j] = QPoly(coeffs, low)
    return mat


# -- block structure ---------------------------------------------------------------

def block_order(smap: SpringerMap) -> list[tuple[IrrLabel, OrbitLabel, str]]:
    """Characters in block order: orbits by dimension descending (ties by the
    canonical orbit order), trivial local system first within a block."""
    alg = smap.algebra
    from .orbits import valid_partitions
    out = []
    for o in valid_partitions(alg):
        for ls, irr in smap.blocks[o]:
            out.append((irr, o, ls))
    return out


def b_value(alg: Algebra, irr: IrrLabel) -> int:
    from .polychar import b_value as _b
    return _b(alg, irr)


# -- Omega --------------------------------------------------------------------------

def omega_matrix(alg: Algebra, convention: str = SHIPPED_CONVENTION,
                 order: Optional[list[IrrLabel]] = None) -> OmegaMatrix:
    if convention not in CONVENTIONS:
        raise InvalidInputError(f"unknown Omega convention {convention!r}")
    check_rank(alg)
    table = character_table(alg)
    irreps = list(order) if order is not None else list(table.irreps)
    key = weyl_key(alg)
    mat = _molien(key)  # classes x degrees, |C| * prod(1-q^d)/det(1-qw)
    eps = np.array([sign_value(alg, c) for c in table.classes], dtype=object)
    weighted = mat * eps[:, None]
    X = np.array([table.row(x) for x in irreps], dtype=object)
    W = table.order
    N = alg.n_positive_roots
    n = len(irreps)
    entries = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        # row i: sum_C chi_i chi_j eps |C| T_C / |W|
        Y = weighted * X[i][:, None]
        rows = X[i:].dot(Y)
        for off, coeffs in enumerate(rows):
            j = i + off
            out = []
            for c in coeffs:
                qt, r = divmod(int(c), W)
                if r:
                    raise ValidationError("Omega entry is not an integer polynomial")
                out.append(qt)
            poly = QPoly(out)
            if convention == REVERSED:
                poly = poly.invert_variable().shift(N)
            if poly.is_zero() or not poly.is_polynomial() or min(poly.coeffs) < 0:
                raise ValidationError(f"Omega entry ({irreps[i]}, {irreps[j]}) = {poly} is not a nonzero nonnegative polynomial")
            entries[i][j] = entries[j][i] = poly
    return OmegaMatrix(alg, convention, irreps, entries)


# -- exact block solve ---------------------------------------------------------------

def _det(m: list[list[QPoly]]) -> QPoly:
    n = len(m)
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = ZERO
    for j in range(n):
        if not m[0][j]:
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * _det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def _adjugate(m: list[list[QPoly]]) -> list[list[QPoly]]:
    n = len(m)
    if n == 1:
        return [[QPoly.const(1)]]
    adj = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [row[:j] + row[j + 1:] for k, row in enumerate(m) if k != i]
            c = _det(minor)
            adj[j][i] = c if (i + j) % 2 == 0 else -c
    return adj


def lusztig_shoji_solve(omega: OmegaMatrix, smap: SpringerMap) -> KTildeMatrix:
    """Unique P (block unitriangular up to q^d on the diagonal) and block
    diagonal Lambda with P Lambda P^t = Omega."""
    alg = smap.algebra
    order = block_order(smap)
    irreps = [x for x, _, _ in order]
    blocks = [o for _, o, _ in order]
    if set(irreps) != set(omega.irreps):
        raise ValidationError("Springer map and Omega matrix index different characters")
    pos = {x: i for i, x in enumerate(omega.irreps)}
    n = len(irreps)
    M = [[omega.entries[pos[a]][pos[b]] for b in irreps] for a in irreps]
    N = alg.n_positive_roots
    dshift = [(2 * N - orbit_dimension(alg, o)) // 2 for o in blocks]

    # strata of equal orbit dimension, processed from the smallest orbits up
    strata: list[list[int]] = []
    for i in range(n):
        if strata and dshift[strata[-1][0]] == dshift[i]:
            strata[-1].append(i)
        else:
            strata.append([i])
    Qm = [[ZERO] * n for _ in range(n)]
    Lp = [[ZERO] * n for _ in range(n)]
    for s in reversed(strata):
        lo = s[0]
        for i in s:
            Qm[i][i] = QPoly.const(1)
        # Lambda' for the stratum must be block diagonal by orbit
        for i in s:
            for j in s:
                if blocks[i] != blocks[j] and M[i][j]:
                    raise ValidationError(
                        f"Omega couples distinct orbits {blocks[i]} and {blocks[j]} of equal dimension; "
                        "block order or Springer map is wrong")
                Lp[i][j] = M[i][j]
        above = range(lo)
        # invert each orbit block of Lambda'
        by_orbit: dict[OrbitLabel, list[int]] = {}
        for i in s:
            by_orbit.setdefault(blocks[i], []).append(i)
        for idx in by_orbit.values():
            sub = [[M[i][j] for j in idx] for i in idx]
            det = _det(sub)
            if det.is_zero():
                raise ValidationError(f"singular Lambda block at orbit {blocks[idx[0]]}")
            adj = _adjugate(sub)
            for a in above:
                row = [M[a][j] for j in idx]
                if not any(row):
                    continue
                for jj, j in enumerate(idx):
                    num = ZERO
                    for kk in range(len(idx)):
                        if row[kk] and adj[kk][jj]:
                            num = num + row[kk] * adj[kk][jj]
                    try:
                        Qm[a][j] = num.exact_div(det) if num else ZERO
                    except ArithmeticError:
                        raise ValidationError(
                            f"non-polynomial entry P[{irreps[a]}, {irreps[j]}]: Springer blocks "
                            "or Omega convention are inconsistent") from None
        # Schur complement on the rows/columns above the stratum
        nz = {a: [j for j in s if Qm[a][j]] for a in above}
        for a in above:
            if not nz[a]:
                continue
            for b in range(a, lo):
                acc = ZERO
                for j in nz[a]:
                    if M[j][b]:
                        acc = acc + Qm[a][j] * M[j][b]
                if acc:
                    M[a][b] = M[a][b] - acc
                    if b != a:
                        M[b][a] = M[a][b]
    P = [[Qm[i][j].shift(dshift[j]) if Qm[i][j] else ZERO for j in range(n)] for i in range(n)]
    Lam = [[Lp[i][j].shift(-dshift[i] - dshift[j]) if Lp[i][j] else ZERO for j in range(n)]
           for i in range(n)]
    for i in range(n):
        for j in range(n):
            if P[i][j] and not P[i][j].is_polynomial():
                raise ValidationError(f"P[{irreps[i]}, {irreps[j]}] = {P[i][j]} has negative exponents")
    kt = KTildeMatrix(alg, omega.convention, irreps, blocks, P, Lam)
    check_very_even_symmetry(kt, smap)
    return kt


def check_very_even_symmetry(kt: KTildeMatrix, smap: SpringerMap) -> None:
    """For targets that are not very even, the two very even sibling sources
    must carry identical stalk data (the diagram automorphism swaps them)."""
    for o, members in smap.blocks.items():
        if o.tag != "I":
            continue
        col_i = kt.index(members[0][1])
        col_ii = kt.index(smap.irr(o.sibling(), TRIVIAL))
        for target, tmembers in smap.blocks.items():
            if target.tag is not None:
                continue
            row = kt.index(tmembers[0][1])
            if kt.P[row][col_i] != kt.P[row][col_ii]:
                raise ValidationError(
                    f"stalks of {target} differ at the very even siblings {o} and {o.sibling()}")


def reconstruct(kt: KTildeMatrix) -> list[list[QPoly]]:
    n = len(kt.irreps)
    PL = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for k in range(n):
            if not kt.P[i][k]:
                continue
            for j in range(n):
                if kt.Lam[k][j]:
                    PL[i][j] = PL[i][j] + kt.P[i][k] * kt.Lam[k][j]
    out = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            acc = ZERO
            for k in range(n):
                if PL[i][k] and kt.P[j][k]:
                    acc = acc + PL[i][k] * kt.P[j][k]
            out[i][j] = out[j][i] = acc
    return out


def check_reconstruction(kt: KTildeMatrix, omega: OmegaMatrix) -> bool:
    pos = {x: i for i, x in enumerate(omega.irreps)}
    rec = reconstruct(kt)
    for i, a in enumerate(kt.irreps):
        for j, b in enumerate(kt.irreps):
            if rec[i][j] != omega.entries[pos[a]][pos[b]]:
                return False
    return True


# -- cached engine --------------------------------------------------------------------

def _cache_key(alg: Algebra, convention: str) -> str:
    return f"{alg.family}{alg.rank}-{convention}-{__version__}"


def ktilde_matrix(alg: Algebra, convention: str = SHIPPED_CONVENTION) -> KTildeMatrix:
    check_rank(alg)
    return _ktilde_matrix(alg, convention)


@lru_cache(maxsize=None)
def _ktilde_matrix(alg: Algebra, convention: str) -> KTildeMatrix:
    smap = springer_correspondence(alg)
    order = block_order(smap)
    irreps = [x for x, _, _ in order]
    blocks = [o for _, o, _ in order]
    key = _cache_key(alg, convention)
    data = cache.load("ktilde", key)
    if data is not None and data.get("irreps") == [str(x) for x in irreps] \
            and data.get("blocks") == [str(o) for o in blocks]:
        try:
            n = len(irreps)
            kt = KTildeMatrix(alg, convention, irreps, blocks,
                              _dense(n, data["P"]), _dense(n, data["Lambda"]))
            check_very_even_symmetry(kt, smap)
            return kt
        except (KeyError, TypeError, ValueError, ValidationError):
            log.warning("ignoring malformed cache entry %s", key)
    omega = omega_matrix(alg, convention, irreps)
    kt = lusztig_shoji_solve(omega, smap)
    cache.store("ktilde", key, kt.to_json())
    return kt


def ktilde(alg: Algebra, source: tuple, target) -> QPoly:
    """Entry P[chi_(target, triv), chi_(source orbit, source local system)]."""
    smap = springer_correspondence(alg)
    src_orbit, src_ls = source
    src_orbit = as_label(alg, src_orbit)
    if isinstance(target, tuple) and len(target) == 2 and isinstance(target[1], str):
        target, tls = target
        if tls != TRIVIAL:
            raise InvalidInputError("the target of ktilde must carry the trivial local system")
    target = as_label(alg, target)
    row = smap.irr(target, TRIVIAL)
    col = smap.irr(src_orbit, src_ls)
    kt = ktilde_matrix(alg)
    return kt.P[kt.index(row)][kt.index(col)]
