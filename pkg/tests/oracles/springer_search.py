"""Independent reconstruction of the Springer blocks by constraint search.

Only the characters attached to trivial local systems are taken as given
(from the symbol). The remaining characters are distributed over the orbits
by depth-first search, keeping only assignments for which the block solve
stays consistent:
  * a character joining the block of an orbit has b-value above dim B_u;
  * the solved entries of Q lie in degrees -d..-1 with nonnegative
    coefficients and respect the closure order;
  * no orbit carries more local systems than its component group allows;
  * in types B and C, the column sums at q = 1 reproduce the total
    cohomology of the Springer fibre, computed by induction from a Levi
    subgroup GL x G'.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from nilrat.orbits import Algebra, closure_leq, orbit_dimension, partitions, valid_partitions
from nilrat.polychar import ClassLabel, IrrLabel, _z, b_value, character_table
from nilrat.qpoly import ZERO
from nilrat.shoji import _adjugate, _det, omega_matrix
from nilrat.springer import _irr_from_pair, orbit_symbol, symbol_to_bipartition


def component_group_cap(fam, p):
    par = 0 if fam == "C" else 1
    sizes = sorted({x for x in p if x % 2 == par})
    if not sizes:
        return 1
    size = 2 ** len(sizes) if fam == "C" else 2 ** (len(sizes) - 1)
    z = [p.count(x) % 2 for x in sizes]
    if any(z) and (fam == "C" or sum(z) % 2 == 0):
        size //= 2
    return size


def levi_data(fam, p):
    par = 0 if fam == "C" else 1
    gls, left = [], []
    for x in sorted(set(p)):
        m = p.count(x)
        gls += [x] * (m // 2)
        if m % 2:
            assert x % 2 == par
            left.append(x)
    return gls, tuple(sorted(left, reverse=True))


@lru_cache(maxsize=None)
def _total_cohomology(fam, r, left):
    if len(left) <= 1:
        return {IrrLabel((r,), ()): 1}
    return search(fam, r)["colsum"][left]


def induced(fam, n, o):
    gls, left = levi_data(fam, o.partition)
    r = n - sum(gls)
    if r == n:
        return None
    table = character_table(Algebra(fam, n))
    if r > 0:
        sig = _total_cohomology(fam, r, left)
        t2 = character_table(Algebra(fam, r))
        bcl = []
        for ci, c in enumerate(t2.classes):
            val = sum(m * t2.row(x)[ci] for x, m in sig.items())
            bcl.append((c.pos, c.neg, Fraction(t2.sizes[ci], t2.order) * val))
    else:
        bcl = [((), (), Fraction(1))]
    combos = [((), Fraction(1))]
    for pdeg in gls:
        combos = [(ct + mu, w / _z(mu)) for ct, w in combos for mu in partitions(pdeg)]
    out = {}
    for x in table.irreps:
        row = table.row(x)
        acc = Fraction(0)
        for ct, w in combos:
            for a, b, wb in bcl:
                c = ClassLabel(tuple(sorted(ct + tuple(a), reverse=True)), tuple(sorted(b, reverse=True)))
                acc += w * wb * row[table.class_index(c)]
        assert acc.denominator == 1
        out[x] = int(acc)
    return out


@lru_cache(maxsize=None)
def search(fam, n, maxsols=50):
    """Returns {"solutions": [blocks, ...], "colsum": column sums of the first}."""
    alg = Algebra(fam, n)
    orbs = valid_partitions(alg)
    triv = {}
    for o in orbs:
        a, bb = symbol_to_bipartition(orbit_symbol(fam, o.partition))
        triv[o] = _irr_from_pair(fam, a, bb, "+" if o.tag == "I" else "-" if o.tag else None)
    owner = {v: k for k, v in triv.items()}
    N = alg.n_positive_roots
    d = {o: (2 * N - orbit_dimension(alg, o)) // 2 for o in orbs}
    om = omega_matrix(alg)
    irr = om.irreps
    idx = {x: i for i, x in enumerate(irr)}
    M0 = {(a, b): om.entries[idx[a]][idx[b]] for a in irr for b in irr}
    bv = {x: b_value(alg, x) for x in irr}
    ind = {o: (induced(fam, n, o) if fam in "BC" else None) for o in orbs}
    strata = [[o for o in orbs if d[o] == dd] for dd in sorted(set(d.values()), reverse=True)]

    def test(M, members, rows, dd, o):
        sub = [[M[(i, j)] for j in members] for i in members]
        det = _det(sub)
        if det.is_zero():
            return None
        adj = _adjugate(sub)
        Q = {}
        for a in rows:
            for jj, j in enumerate(members):
                num = ZERO
                for kk, k in enumerate(members):
                    if M[(a, k)] and adj[kk][jj]:
                        num = num + M[(a, k)] * adj[kk][jj]
                if not num:
                    continue
                if a in owner and not closure_leq(o, owner[a]):
                    return None
                try:
                    q = num.exact_div(det)
                except ArithmeticError:
                    return None
                if q.degree >= 0 or q.valuation < -dd or min(q.coeffs) < 0:
                    return None
                Q[(a, j)] = q
        if ind[o] is not None:
            tot = {x: 0 for x in irr}
            for x in members:
                tot[x] += 1
            for (a, j), q in Q.items():
                tot[a] += q(1)
            if tot != ind[o]:
                return None
        return Q

    sols = []

    def dfs(si, M, unassigned, blocks, hist, colsum):
        if si == len(strata):
            if unassigned:
                return False
            sols.append((dict(blocks), dict(colsum)))
            return len(sols) >= maxsols
        stratum = strata[si]
        dd = d[stratum[0]]
        pending = unassigned - {triv[o] for o in stratum}
        opts = []
        for o in stratum:
            cands = sorted([x for x in pending if bv[x] > dd and x not in owner], key=str)
            good = []
            for k in range(component_group_cap(fam, o.partition)):
                for S in itertools.combinations(cands, k):
                    mem = [triv[o]] + list(S)
                    Q = test(M, mem, [x for x in unassigned if x not in mem], dd, o)
                    if Q is not None:
                        good.append((S, Q))
            opts.append(good)
        for combo in itertools.product(*opts):
            used = [x for S, _ in combo for x in S]
            if len(set(used)) != len(used):
                continue
            nb = dict(blocks)
            Qall = {}
            for o, (S, Q) in zip(stratum, combo):
                nb[o] = [triv[o]] + list(S)
                Qall.update(Q)
            allm = [x for o in stratum for x in nb[o]]
            if any(M[(x, y)] for i, o in enumerate(stratum) for o2 in stratum[i + 1:]
                   for x in nb[o] for y in nb[o2]):
                continue
            if any(Qall.get((x, y)) for x in allm for y in allm):
                continue
            if not all(closure_leq(lo, o) for o, (S, Q) in zip(stratum, combo)
                       for x in S for lo in hist.get(x, ())):
                continue
            nh = {k: set(v) for k, v in hist.items()}
            for (a, j), q in Qall.items():
                nh.setdefault(a, set()).add(next(o for o in stratum if j in nb[o]))
            cs = dict(colsum)
            for o in stratum:
                tot = {}
                for x in nb[o]:
                    tot[x] = tot.get(x, 0) + 1
                for (a, j), q in Qall.items():
                    if j in nb[o]:
                        tot[a] = tot.get(a, 0) + q(1)
                cs[o.partition] = tot
            un = unassigned - set(allm)
            M2 = dict(M)
            for a in un:
                for b in un:
                    acc = ZERO
                    for j in allm:
                        if Qall.get((a, j)) and M[(j, b)]:
                            acc = acc + Qall[(a, j)] * M[(j, b)]
                    if acc:
                        M2[(a, b)] = M[(a, b)] - acc
            if dfs(si + 1, M2, un, nb, nh, cs):
                return True
        return False

    dfs(0, M0, set(irr), {}, {}, {})
    return {"solutions": [s[0] for s in sols], "colsum": sols[0][1] if sols else None}
