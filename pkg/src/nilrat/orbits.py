"""Root-system constants and partition combinatorics of nilpotent orbits.

Orbits in the classical algebras are labelled by Jordan types (partitions),
with very even partitions in type D carrying an extra tag ``I``/``II``.
The closure order is dominance of partitions; the two tagged labels of the
same very even partition are incomparable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Optional, Sequence, Union

from .errors import InvalidInputError, UnsupportedFamilyError

Partition = tuple[int, ...]

CLASSICAL = ("A", "B", "C", "D")
FAMILIES = CLASSICAL + ("G2",)


@dataclass(frozen=True)
class Algebra:
    """A simple Lie algebra of classical type, or G2.

    ``A`` rank n is sl(n+1), ``B`` is so(2n+1), ``C`` is sp(2n), ``D`` is
    so(2n).
    """

    family: str
    rank: int

    def __post_init__(self):
        fam = str(self.family).upper()
        object.__setattr__(self, "family", fam)
        if fam not in FAMILIES:
            raise InvalidInputError(f"unknown Lie type {self.family!r}")
        if not isinstance(self.rank, int) or self.rank < 1:
            raise InvalidInputError(f"rank must be a positive integer, got {self.rank!r}")
        if fam == "D" and self.rank < 2:
            raise InvalidInputError("type D requires rank >= 2")
        if fam == "G2" and self.rank != 2:
            raise InvalidInputError("G2 has rank 2")

    @classmethod
    def parse(cls, text: str) -> "Algebra":
        text = text.strip().upper()
        if text == "G2":
            return cls("G2", 2)
        try:
            return cls(text[0], int(text[1:]))
        except (IndexError, ValueError):
            raise InvalidInputError(f"cannot parse algebra {text!r}") from None

    @property
    def name(self) -> str:
        return "G2" if self.family == "G2" else f"{self.family}{self.rank}"

    def __str__(self) -> str:
        return self.name

    @property
    def is_classical(self) -> bool:
        return self.family in CLASSICAL

    @property
    def n_positive_roots(self) -> int:
        n = self.rank
        return {
            "A": n * (n + 1) // 2,
            "B": n * n,
            "C": n * n,
            "D": n * n - n,
            "G2": 6,
        }[self.family]

    @property
    def degrees(self) -> tuple[int, ...]:
        n = self.rank
        if self.family == "A":
            return tuple(range(2, n + 2))
        if self.family in ("B", "C"):
            return tuple(range(2, 2 * n + 1, 2))
        if self.family == "D":
            return tuple(sorted(list(range(2, 2 * n - 1, 2)) + [n]))
        return (2, 6)

    @property
    def nilcone_dim(self) -> int:
        return 2 * self.n_positive_roots

    @property
    def dim(self) -> int:
        return 2 * self.n_positive_roots + self.rank

    @property
    def weyl_order(self) -> int:
        out = 1
        for d in self.degrees:
            out *= d
        return out

    @property
    def matrix_size(self) -> int:
        """Size of the natural representation (size of orbit partitions)."""
        n = self.rank
        return {"A": n + 1, "B": 2 * n + 1, "C": 2 * n, "D": 2 * n}[self._classical()]

    def root_counts(self) -> dict[str, int]:
        """Number of positive long and short roots."""
        n = self.rank
        if self.family in ("A", "D"):
            return {"long": self.n_positive_roots, "short": 0}
        if self.family == "B":
            return {"long": n * (n - 1), "short": n}
        if self.family == "C":
            return {"long": n, "short": n * (n - 1)}
        return {"long": 3, "short": 3}

    def _classical(self) -> str:
        if not self.is_classical:
            raise UnsupportedFamilyError(
                "G2 orbits are handled by label, not by partition")
        return self.family


# -- partitions --------------------------------------------------------------

def parse_partition(text: str) -> Partition:
    try:
        parts = tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
    except ValueError:
        raise InvalidInputError(f"cannot parse partition {text!r}") from None
    check_partition(parts)
    return parts


def check_partition(parts: Sequence[int]) -> Partition:
    parts = tuple(parts)
    if any(p <= 0 for p in parts):
        raise InvalidInputError(f"partition parts must be positive: {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise InvalidInputError(f"partition must be weakly decreasing: {parts}")
    return parts


def format_partition(p: Partition) -> str:
    return ",".join(str(x) for x in p)


def transpose(p: Partition) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > i) for i in range(p[0]))


def n_statistic(p: Partition) -> int:
    """``n(p) = sum (i-1) p_i``."""
    return sum(i * x for i, x in enumerate(p))


def multiplicities(p: Partition) -> dict[int, int]:
    out: dict[int, int] = {}
    for x in p:
        out[x] = out.get(x, 0) + 1
    return out


@lru_cache(maxsize=None)
def partitions(n: int, max_part: Optional[int] = None) -> tuple[Partition, ...]:
    """All partitions of ``n`` in lexicographically descending order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def dominates(lam: Partition, mu: Partition) -> bool:
    """True iff ``lam >= mu`` in dominance order."""
    if sum(lam) != sum(mu):
        raise InvalidInputError(f"size mismatch: {lam} vs {mu}")
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


# -- orbit labels ------------------------------------------------------------

@dataclass(frozen=True)
class OrbitLabel:
    partition: Partition
    tag: Optional[str] = None

    def __str__(self) -> str:
        s = format_partition(self.partition)
        return f"{s}:{self.tag}" if self.tag else s

    @property
    def is_very_even_label(self) -> bool:
        return self.tag is not None

    def sibling(self) -> "OrbitLabel":
        if self.tag is None:
            return self
        return OrbitLabel(self.partition, "II" if self.tag == "I" else "I")


def parse_orbit(text: str) -> OrbitLabel:
    text = text.strip()
    tag = None
    if ":" in text:
        text, tag = text.split(":", 1)
        tag = tag.strip().upper()
        if tag not in ("I", "II"):
            raise InvalidInputError(f"very even tag must be I or II, got {tag!r}")
    return OrbitLabel(parse_partition(text), tag)


def is_very_even(p: Partition) -> bool:
    return bool(p) and all(x % 2 == 0 for x in p)


def parity_violation(alg: Algebra, p: Partition) -> Optional[str]:
    """Explain why ``p`` fails to label an orbit of ``alg``; None if valid."""
    fam = alg._classical()
    size = alg.matrix_size
    if sum(p) != size:
        return f"{alg.name} orbits are partitions of {size}, got size {sum(p)}"
    if fam == "A":
        return None
    mult = multiplicities(p)
    bad_parity = 1 if fam == "C" else 0
    for part, m in sorted(mult.items(), reverse=True):
        if part % 2 == bad_parity and m % 2:
            kind = "odd" if bad_parity else "even"
            return (f"in type {fam} every {kind} part must have even multiplicity; "
                    f"part {part} occurs {m} time{'s' if m > 1 else ''}")
    return None


def is_valid(alg: Algebra, p: Partition) -> bool:
    return parity_violation(alg, tuple(p)) is None


def check_label(alg: Algebra, o: OrbitLabel) -> OrbitLabel:
    """Validate an orbit label, raising ``InvalidInputError`` with the rule."""
    why = parity_violation(alg, o.partition)
    if why:
        raise InvalidInputError(f"{o} is not a nilpotent orbit of {alg.name}: {why}")
    needs_tag = alg.family == "D" and is_very_even(o.partition)
    if needs_tag and o.tag is None:
        raise InvalidInputError(
            f"{o} is very even; specify the orbit as {o}:I or {o}:II")
    if not needs_tag and o.tag is not None:
        raise InvalidInputError(f"tag {o.tag} only applies to very even type D partitions")
    return o


def as_label(alg: Algebra, o: Union[OrbitLabel, Partition, str]) -> OrbitLabel:
    if isinstance(o, str):
        o = parse_orbit(o)
    elif not isinstance(o, OrbitLabel):
        o = OrbitLabel(tuple(o))
    return check_label(alg, o)


def orbit_dimension(alg: Algebra, o) -> int:
    if alg.family == "G2":
        name = o if isinstance(o, str) else str(o)
        if name not in G2_ORBIT_DIMS:
            raise InvalidInputError(f"unknown G2 orbit {name!r}; expected one of {list(G2_ORBIT_DIMS)}")
        return G2_ORBIT_DIMS[name]
    o = as_label(alg, o)
    return _partition_dimension(alg.family, alg.matrix_size, o.partition)


def _partition_dimension(fam: str, m: int, p: Partition) -> int:
    s2 = sum(x * x for x in transpose(p))
    odd = sum(1 for x in p if x % 2)
    if fam == "A":
        return m * m - s2
    if fam in ("B", "D"):
        return (m * m - m) // 2 - (s2 - odd) // 2
    return (m * m + m) // 2 - (s2 + odd) // 2


def _sort_key(alg: Algebra, o: OrbitLabel):
    return (-orbit_dimension(alg, o), [-x for x in o.partition], o.tag != "I")


@lru_cache(maxsize=None)
def valid_partitions(alg: Algebra) -> tuple[OrbitLabel, ...]:
    alg._classical()
    out = []
    for p in partitions(alg.matrix_size):
        if not is_valid(alg, p):
            continue
        if alg.family == "D" and is_very_even(p):
            out.extend([OrbitLabel(p, "I"), OrbitLabel(p, "II")])
        else:
            out.append(OrbitLabel(p))
    return tuple(sorted(out, key=lambda o: _sort_key(alg, o)))


def closure_leq(a: OrbitLabel, b: OrbitLabel) -> bool:
    """``O_a`` lies in the closure of ``O_b``."""
    if a == b:
        return True
    if a.partition == b.partition:
        return False  # very even siblings
    return dominates(b.partition, a.partition)


@dataclass
class OrbitPoset:
    algebra: Algebra
    nodes: tuple[OrbitLabel, ...]
    dims: dict[OrbitLabel, int]
    covers: list[tuple[OrbitLabel, OrbitLabel]] = field(default_factory=list)

    def leq(self, a: OrbitLabel, b: OrbitLabel) -> bool:
        return closure_leq(a, b)

    def interval(self, lo: OrbitLabel, hi: OrbitLabel) -> list[OrbitLabel]:
        return [x for x in self.nodes if closure_leq(lo, x) and closure_leq(x, hi)]

    def down_set(self, x: OrbitLabel) -> list[OrbitLabel]:
        return [y for y in self.nodes if closure_leq(y, x)]

    def up_set(self, x: OrbitLabel) -> list[OrbitLabel]:
        return [y for y in self.nodes if closure_leq(x, y)]

    @property
    def maximum(self) -> OrbitLabel:
        return self.nodes[0]

    @property
    def minimum(self) -> OrbitLabel:
        return self.nodes[-1]

    def lower_covers(self, x: OrbitLabel) -> list[OrbitLabel]:
        return [a for a, b in self.covers if b == x]


@lru_cache(maxsize=None)
def closure_poset(alg: Algebra) -> OrbitPoset:
    nodes = valid_partitions(alg)
    dims = {o: orbit_dimension(alg, o) for o in nodes}
    covers = []
    for b in nodes:
        below = [a for a in nodes if a != b and closure_leq(a, b)]
        for a in below:
            if not any(c != a and closure_leq(a, c) for c in below):
                covers.append((a, b))
    return OrbitPoset(alg, nodes, dims, covers)


def nilcone_label(alg: Algebra) -> OrbitLabel:
    n, fam = alg.rank, alg._classical()
    p = {"A": (n + 1,), "B": (2 * n + 1,), "C": (2 * n,), "D": (2 * n - 1, 1)}[fam]
    return OrbitLabel(p)


def zero_label(alg: Algebra) -> OrbitLabel:
    return OrbitLabel((1,) * alg.matrix_size)


# -- G2 constants -------------------------------------------------------------

G2_ORBIT_DIMS = {"0": 0, "A1": 6, "Ã1": 8, "G2(a1)": 10, "G2": 12}
G2_CHAIN = ("0", "A1", "Ã1", "G2(a1)", "G2")
_G2_ALIASES = {"~A1": "Ã1", "A1~": "Ã1", "TILDEA1": "Ã1", "G2(A1)": "G2(a1)"}


def parse_g2_orbit(text: str) -> str:
    t = text.strip()
    t = _G2_ALIASES.get(t.upper(), t)
    if t not in G2_ORBIT_DIMS:
        raise InvalidInputError(f"unknown G2 orbit {text!r}; expected one of {list(G2_ORBIT_DIMS)}")
    return t


def g2_leq(a: str, b: str) -> bool:
    return G2_CHAIN.index(a) <= G2_CHAIN.index(b)


# -- distinguished orbits -------------------------------------------------------

def minimal_orbit(alg: Algebra):
    if alg.family == "G2":
        return "A1"
    n = alg.rank
    if alg.family == "A":
        p = (2,) + (1,) * (n - 1)
    elif alg.family == "B":
        p = (2, 2) + (1,) * (2 * n - 3) if n > 1 else (3,)
    elif alg.family == "C":
        p = (2,) + (1,) * (2 * n - 2)
    else:
        p = (2, 2) + (1,) * (2 * n - 4)
    return OrbitLabel(p)


def spherical_orbits(alg: Algebra) -> list[OrbitLabel]:
    """Orbits with parts at most 2, smallest first (types A and C)."""
    if alg.family not in ("A", "C"):
        raise UnsupportedFamilyError(f"spherical orbits are only provided for types A and C, not {alg.name}")
    m = alg.matrix_size
    return [OrbitLabel((2,) * a + (1,) * (m - 2 * a)) for a in range(m // 2 + 1)]


def root_vector_orbit(alg: Algebra, length: str):
    """Orbit of a nonzero root vector of the given root length."""
    length = length.lower()
    if length not in ("long", "short"):
        raise InvalidInputError(f"root length must be 'long' or 'short', got {length!r}")
    if length == "long":
        return minimal_orbit(alg)
    n = alg.rank
    if alg.family in ("A", "D"):
        raise InvalidInputError(f"{alg.name} is simply laced: it has no short roots")
    if alg.root_counts()["short"] == 0:
        raise InvalidInputError(f"{alg.name} has no short roots")
    if alg.family == "G2":
        return "Ã1"
    if alg.family == "B":
        return OrbitLabel((3,) + (1,) * (2 * n - 2))
    return OrbitLabel((2, 2) + (1,) * (2 * n - 4))


def iter_algebras(families: Sequence[str], ranks: Sequence[int]) -> Iterator[Algebra]:
    for fam in families:
        for r in ranks:
            yield Algebra(fam, r)
