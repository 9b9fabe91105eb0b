"""Weyl group character data for the classical types.

Character tables come from Murnaghan-Nakayama rules: the usual one for the
symmetric group, its signed version on bipartitions for W(B_n) = W(C_n), and
restriction plus a difference character for W(D_n). Fake degrees are Molien
sums over conjugacy classes, evaluated with exact polynomial division.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Optional, Sequence

import numpy as np

from . import cache
from .config import check_rank
from .errors import InvalidInputError, UnsupportedFamilyError, ValidationError
from .orbits import Algebra, Partition, format_partition, multiplicities, partitions
from .qpoly import ONE, QPoly


def _fmt(p: Partition) -> str:
    return format_partition(p) if p else "-"


@dataclass(frozen=True)
class ClassLabel:
    """Conjugacy class: cycle type in type A; signed cycle type (pos;neg)
    otherwise, plus ``split`` = '+'/'-' for the halves of a split D class."""

    pos: Partition
    neg: Optional[Partition] = None
    split: Optional[str] = None

    def __str__(self) -> str:
        if self.neg is None:
            return _fmt(self.pos)
        return f"({_fmt(self.pos)};{_fmt(self.neg)}){self.split or ''}"


@dataclass(frozen=True)
class IrrLabel:
    """Irreducible character: a partition (type A), an ordered bipartition
    (types B/C) or an unordered one stored in canonical order (type D), with
    ``split`` = '+'/'-' on the two halves of a degenerate D pair."""

    alpha: Partition
    beta: Optional[Partition] = None
    split: Optional[str] = None
    unordered: bool = False

    def __str__(self) -> str:
        if self.beta is None:
            return "[" + _fmt(self.alpha) + "]"
        if self.unordered:
            return "{" + f"{_fmt(self.alpha)};{_fmt(self.beta)}" + "}" + (self.split or "")
        return f"({_fmt(self.alpha)};{_fmt(self.beta)})"


# -- Murnaghan-Nakayama ---------------------------------------------------------

@lru_cache(maxsize=None)
def _rim_hooks(lam: Partition, r: int) -> tuple[tuple[Partition, int], ...]:
    """Partitions obtained from ``lam`` by removing an ``r``-rim hook, with
    the sign ``(-1)^height``; computed on beta-numbers."""
    L = len(lam)
    beta = [lam[i] + (L - 1 - i) for i in range(L)]
    bset = set(beta)
    out = []
    for b in beta:
        c = b - r
        if c < 0 or c in bset:
            continue
        height = sum(1 for x in beta if c < x < b)
        nb = sorted((bset - {b}) | {c}, reverse=True)
        new = tuple(x for x in (nb[i] - (L - 1 - i) for i in range(L)) if x > 0)
        out.append((new, -1 if height % 2 else 1))
    return tuple(out)


@lru_cache(maxsize=None)
def sn_character(lam: Partition, mu: Partition) -> int:
    """Value of the S_n irreducible ``lam`` on cycle type ``mu``."""
    if not mu:
        return 1 if not lam else 0
    r, rest = mu[0], mu[1:]
    return sum(s * sn_character(new, rest) for new, s in _rim_hooks(lam, r))


@lru_cache(maxsize=None)
def bn_character(alpha: Partition, beta: Partition, pos: Partition, neg: Partition) -> int:
    """Value of the W(B_n) irreducible (alpha;beta) on the class (pos;neg).

    (n;-) is trivial and (-;1^n) is the sign character; a rim hook taken from
    beta along a negative cycle contributes an extra factor -1.
    """
    if pos:
        r, pos, sgn = pos[0], pos[1:], 1
    elif neg:
        r, neg, sgn = neg[0], neg[1:], -1
    else:
        return 1 if not alpha and not beta else 0
    total = 0
    for new, s in _rim_hooks(alpha, r):
        total += s * bn_character(new, beta, pos, neg)
    for new, s in _rim_hooks(beta, r):
        total += sgn * s * bn_character(alpha, new, pos, neg)
    return total


def _z(p: Partition, weight: int = 1) -> int:
    out = 1
    for part, m in multiplicities(p).items():
        out *= (weight * part) ** m * factorial(m)
    return out


def bipartitions(n: int) -> list[tuple[Partition, Partition]]:
    return [(a, b) for k in range(n, -1, -1) for a in partitions(k) for b in partitions(n - k)]


def _d_canonical(a: Partition, b: Partition) -> bool:
    """Whether (a;b) is the stored representative of the unordered pair."""
    return (sum(a), a) > (sum(b), b)


# -- tables -----------------------------------------------------------------

def weyl_key(alg: Algebra) -> tuple[str, int]:
    """Canonical key of the Weyl group; B and C share one group."""
    if alg.family == "A":
        return ("A", alg.rank)
    if alg.family in ("B", "C"):
        return ("B", alg.rank)
    if alg.family == "D":
        return ("D", alg.rank)
    raise UnsupportedFamilyError(f"no Weyl group data for {alg.name}")


@dataclass
class CharTable:
    key: tuple[str, int]
    classes: list[ClassLabel]
    sizes: list[int]
    irreps: list[IrrLabel]
    values: list[list[int]]

    def __post_init__(self):
        self._irr_index = {x: i for i, x in enumerate(self.irreps)}
        self._cls_index = {c: i for i, c in enumerate(self.classes)}

    @property
    def order(self) -> int:
        return sum(self.sizes)

    def index(self, irr: IrrLabel) -> int:
        try:
            return self._irr_index[irr]
        except KeyError:
            raise InvalidInputError(f"{irr} is not an irreducible of this group") from None

    def class_index(self, c: ClassLabel) -> int:
        return self._cls_index[c]

    def row(self, irr: IrrLabel) -> list[int]:
        return self.values[self.index(irr)]

    @property
    def identity_index(self) -> int:
        for i, c in enumerate(self.classes):
            if all(x == 1 for x in c.pos) and not c.neg:
                return i
        raise ValidationError("no identity class")

    def degree(self, irr: IrrLabel) -> int:
        return self.row(irr)[self.identity_index]

    def to_json(self) -> dict:
        return {
            "group": list(self.key),
            "classes": [str(c) for c in self.classes],
            "class_data": [[list(c.pos), None if c.neg is None else list(c.neg), c.split]
                           for c in self.classes],
            "sizes": self.sizes,
            "irreps": [str(x) for x in self.irreps],
            "irrep_data": [[list(x.alpha), None if x.beta is None else list(x.beta),
                            x.split, x.unordered] for x in self.irreps],
            "values": self.values,
        }

    @classmethod
    def from_json(cls, data: dict) -> "CharTable":
        def tup(x):
            return None if x is None else tuple(x)
        classes = [ClassLabel(tuple(p), tup(n), s) for p, n, s in data["class_data"]]
        irreps = [IrrLabel(tuple(a), tup(b), s, u) for a, b, s, u in data["irrep_data"]]
        return cls(tuple(data["group"]), classes, list(data["sizes"]), irreps,
                   [list(r) for r in data["values"]])


def _build_table(key: tuple[str, int]) -> CharTable:
    fam, n = key
    if fam == "A":
        m = n + 1
        classes = [ClassLabel(mu) for mu in partitions(m)]
        sizes = [factorial(m) // _z(mu) for mu in partitions(m)]
        irreps = [IrrLabel(lam) for lam in partitions(m)]
        values = [[sn_character(lam, mu) for mu in partitions(m)] for lam in partitions(m)]
        return CharTable(key, classes, sizes, irreps, values)

    order_b = 2**n * factorial(n)
    pairs = bipartitions(n)
    if fam == "B":
        classes = [ClassLabel(g, d) for g, d in pairs]
        sizes = [order_b // (_z(g, 2) * _z(d, 2)) for g, d in pairs]
        irreps = [IrrLabel(a, b) for a, b in pairs]
        values = [[bn_character(a, b, g, d) for g, d in pairs] for a, b in pairs]
        return CharTable(key, classes, sizes, irreps, values)

    # type D: classes with an even number of negative cycles; (2mu;-) splits
    classes, sizes = [], []
    for g, d in pairs:
        if len(d) % 2:
            continue
        size = order_b // (_z(g, 2) * _z(d, 2))
        if not d and all(x % 2 == 0 for x in g):
            classes += [ClassLabel(g, d, "+"), ClassLabel(g, d, "-")]
            sizes += [size // 2, size // 2]
        else:
            classes.append(ClassLabel(g, d))
            sizes.append(size)
    irreps, values = [], []
    for a, b in pairs:
        if a == b:
            for s in ("+", "-"):
                irreps.append(IrrLabel(a, b, s, True))
                values.append([_d_split_value(a, c, s) for c in classes])
        elif _d_canonical(a, b):
            irreps.append(IrrLabel(a, b, None, True))
            values.append([bn_character(a, b, c.pos, c.neg) for c in classes])
    return CharTable(key, classes, sizes, irreps, values)


def _d_split_value(alpha: Partition, c: ClassLabel, s: str) -> int:
    """Value of {alpha;alpha}s on a D class: half the B value, corrected on
    split classes (2mu;-)t by s*t*2^(l(mu)-1)*chi^alpha(mu)."""
    half, r = divmod(bn_character(alpha, alpha, c.pos, c.neg), 2)
    if r:
        raise ValidationError(f"odd value of ({alpha};{alpha}) on {c}")
    if c.split is None:
        return half
    mu = tuple(x // 2 for x in c.pos)
    diff = 2 ** (len(mu) - 1) * sn_character(alpha, mu)
    sign = 1 if (s == "+") == (c.split == "+") else -1
    return half + sign * diff


@lru_cache(maxsize=None)
def _table_for_key(key: tuple[str, int]) -> CharTable:
    ck = f"{key[0]}{key[1]}"
    data = cache.load("chartable", ck)
    if data is not None:
        try:
            return CharTable.from_json(data)
        except (KeyError, TypeError, ValueError):
            pass
    table = _build_table(key)
    cache.store("chartable", ck, table.to_json())
    return table


def character_table(alg: Algebra) -> CharTable:
    key = weyl_key(alg)
    check_rank(alg)
    return _table_for_key(key)


def conjugacy_classes(alg: Algebra) -> list[tuple[ClassLabel, int]]:
    t = character_table(alg)
    return list(zip(t.classes, t.sizes))


def sign_value(alg: Algebra, c: ClassLabel) -> int:
    """det(w) on the reflection representation."""
    if alg.family == "A":
        return -1 if (alg.rank + 1 - len(c.pos)) % 2 else 1
    return -1 if (alg.rank - len(c.pos)) % 2 else 1


def trivial_irrep(alg: Algebra) -> IrrLabel:
    fam, n = weyl_key(alg)
    if fam == "A":
        return IrrLabel((n + 1,))
    if fam == "B":
        return IrrLabel((n,), ())
    return IrrLabel((n,), (), None, True)


def sign_irrep(alg: Algebra) -> IrrLabel:
    fam, n = weyl_key(alg)
    if fam == "A":
        return IrrLabel((1,) * (n + 1))
    if fam == "B":
        return IrrLabel((), (1,) * n)
    return IrrLabel((1,) * n, (), None, True)


# -- polynomial invariants -------------------------------------------------------

def det_factor(alg: Algebra, c: ClassLabel) -> QPoly:
    """det(1 - q w) on the reflection representation for w in class ``c``."""
    out = ONE
    if alg.family == "A":
        for part in c.pos:
            out = out * QPoly([1] + [0] * (part - 1) + [-1])
        return out.exact_div(QPoly([1, -1]))
    for part in c.pos:
        out = out * QPoly([1] + [0] * (part - 1) + [-1])
    for part in c.neg or ():
        out = out * QPoly([1] + [0] * (part - 1) + [1])
    return out


def degree_product(alg: Algebra) -> QPoly:
    """prod_i (1 - q^{d_i})."""
    out = ONE
    for d in alg.degrees:
        out = out * QPoly([1] + [0] * (d - 1) + [-1])
    return out


@lru_cache(maxsize=None)
def _molien_terms(key: tuple[str, int]) -> tuple[QPoly, ...]:
    """|C| * prod(1 - q^{d_i}) / det(1 - q w), one polynomial per class."""
    alg = _algebra_for_key(key)
    table = _table_for_key(key)
    num = degree_product(alg)
    return tuple(num.exact_div(det_factor(alg, c)) * size
                 for c, size in zip(table.classes, table.sizes))


def _algebra_for_key(key: tuple[str, int]) -> Algebra:
    return Algebra(key[0], key[1])


def _molien_matrix(key: tuple[str, int]) -> np.ndarray:
    terms = _molien_terms(key)
    width = max(t.degree for t in terms) + 1
    mat = np.zeros((len(terms), width), dtype=object)
    mat[:] = 0
    for i, t in enumerate(terms):
        for k, c in enumerate(t.coefficient_list()):
            mat[i, k] = c
    return mat


_MOLIEN_CACHE: dict = {}


def _molien(key):
    if key not in _MOLIEN_CACHE:
        _MOLIEN_CACHE[key] = _molien_matrix(key)
    return _MOLIEN_CACHE[key]


def fake_degree(alg: Algebra, values: Sequence[int]) -> QPoly:
    """Graded multiplicity of a virtual character in the coinvariant algebra."""
    table = character_table(alg)
    if len(values) != len(table.classes):
        raise InvalidInputError("class function has the wrong number of values")
    mat = _molien(weyl_key(alg))
    vec = np.array([int(v) for v in values], dtype=object)
    return _finish_molien(vec.dot(mat), table.order)


def _finish_molien(coeffs, order: int) -> QPoly:
    out = []
    for c in coeffs:
        qt, r = divmod(int(c), order)
        if r:
            raise ValidationError("Molien sum is not an integer polynomial; character table is inconsistent")
        out.append(qt)
    return QPoly(out)


def fake_degrees(alg: Algebra) -> dict[IrrLabel, QPoly]:
    character_table(alg)
    return _fake_degrees(weyl_key(alg))


@lru_cache(maxsize=None)
def _fake_degrees(key: tuple[str, int]) -> dict[IrrLabel, QPoly]:
    table = _table_for_key(key)
    mat = _molien(key)
    vals = np.array(table.values, dtype=object)
    rows = vals.dot(mat)
    return {irr: _finish_molien(rows[i], table.order) for i, irr in enumerate(table.irreps)}


def inner_product(alg: Algebra, phi: Sequence[int], psi: Sequence[int]) -> int:
    table = character_table(alg)
    total = sum(s * a * b for s, a, b in zip(table.sizes, phi, psi))
    value = Fraction(total, table.order)
    if value.denominator != 1:
        raise ValidationError(f"non-integral inner product {value}")
    return int(value)


def perm_multiplicity(alg: Algebra, levi: Sequence[int], irr: IrrLabel) -> int:
    """Multiplicity of ``irr`` in the permutation module of W on W/W_L, where
    W_L = S_{m_1} x ... x S_{m_k} is the Young subgroup of the composition."""
    if alg.family != "A":
        raise UnsupportedFamilyError("perm_multiplicity is implemented for type A only")
    levi = tuple(int(m) for m in levi)
    if any(m <= 0 for m in levi) or sum(levi) != alg.rank + 1:
        raise InvalidInputError(f"{levi} is not a composition of {alg.rank + 1}")
    table = character_table(alg)
    row = table.row(irr)
    # average of chi over W_L: sum over tuples of cycle types of prod 1/z
    acc = Fraction(0)
    combos: list[tuple[Partition, Fraction]] = [((), Fraction(1))]
    for m in levi:
        combos = [(ct + mu, w / _z(mu)) for ct, w in combos for mu in partitions(m)]
    for ct, w in combos:
        c = ClassLabel(tuple(sorted(ct, reverse=True)))
        acc += w * row[table.class_index(c)]
    if acc.denominator != 1:
        raise ValidationError(f"non-integral permutation multiplicity {acc}")
    return int(acc)


def pointwise(*rows: Sequence[int]) -> list[int]:
    out = [1] * len(rows[0])
    for r in rows:
        out = [a * b for a, b in zip(out, r)]
    return out


def b_value(alg: Algebra, irr: IrrLabel) -> int:
    """Lowest exponent of the fake degree."""
    R = fake_degrees(alg)[irr]
    if R.is_zero():
        raise ValidationError(f"zero fake degree for {irr}")
    return R.valuation
