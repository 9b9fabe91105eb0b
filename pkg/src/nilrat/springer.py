"""Springer correspondence for the classical types via symbols.

For an orbit with Jordan type ``p`` the parts are listed increasingly, padded
with a zero to an odd (types B, C) or even (type D) count, and part ``i`` is
shifted by ``i - 1``. Halving the shifted values sorts them into the two
rows of a symbol: even values go to the top row in types C and D, odd values
in type B. Reading the rows back as a bipartition gives the character of the
orbit with trivial local system.

Nontrivial local systems come from moves on the shifted sequence: lower one
entry by one and raise a later entry by one. Both entries come from parts of
the carrier parity (even in type C, odd in B and D) that are equal or
consecutive among the carrier part sizes; a run of equal non-carrier parts
lying in between spreads apart in the same way. A move must keep the symbol's
row lengths and leave the sequence repetition free. Disjoint moves combine,
and a combination is recorded by the part sizes it touches (an element of
the component group). When two combinations name the same element, the one
with more moves is kept. Results that hit another orbit's character are
dropped, and the count never exceeds the component group modulo the centre.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Optional

from .config import check_rank
from .errors import InvalidInputError, ValidationError
from .orbits import (Algebra, OrbitLabel, Partition, format_partition, nilcone_label,
                     orbit_dimension, valid_partitions, zero_label)
from .polychar import (IrrLabel, _d_canonical, b_value, character_table, sign_irrep,
                       trivial_irrep)

TRIVIAL = "triv"

Symbol = tuple[tuple[int, ...], tuple[int, ...]]


def local_system_name(flipped: tuple[int, ...]) -> str:
    if not flipped:
        return TRIVIAL
    return "eps:" + format_partition(tuple(sorted(flipped, reverse=True)))


@dataclass(frozen=True)
class SymbolEntry:
    value: int
    top: bool
    part: int


def orbit_symbol_entries(family: str, p: Partition) -> list[SymbolEntry]:
    parts = sorted(p)
    want_odd = family in ("B", "C")
    if (len(parts) % 2 == 1) != want_odd:
        parts = [0] + parts
    out = []
    for i, part in enumerate(parts):
        v = part + i
        if family == "B":
            out.append(SymbolEntry(v // 2, v % 2 == 1, part))
        else:
            out.append(SymbolEntry(v // 2, v % 2 == 0, part))
    return out


def symbol_rows(entries) -> Symbol:
    top = tuple(sorted(e.value for e in entries if e.top))
    bottom = tuple(sorted(e.value for e in entries if not e.top))
    return top, bottom


def symbol_to_bipartition(sym: Symbol) -> tuple[Partition, Partition]:
    def row(r):
        return tuple(sorted((x - i for i, x in enumerate(r) if x - i > 0), reverse=True))
    return row(sym[0]), row(sym[1])


def orbit_symbol(family: str, p: Partition) -> Symbol:
    return symbol_rows(orbit_symbol_entries(family, p))


def _irr_from_pair(family: str, a: Partition, b: Partition, split: Optional[str] = None) -> IrrLabel:
    if family in ("B", "C"):
        return IrrLabel(a, b)
    if a == b:
        return IrrLabel(a, b, split, True)
    if not _d_canonical(a, b):
        a, b = b, a
    return IrrLabel(a, b, None, True)


def shifted_parts(family: str, p: Partition) -> tuple[list[int], list[int]]:
    parts = sorted(p)
    if (len(parts) % 2 == 1) != (family in ("B", "C")):
        parts = [0] + parts
    return parts, [x + i for i, x in enumerate(parts)]


def _irr_from_shifted(family: str, values: list[int]) -> IrrLabel:
    top_parity = 1 if family == "B" else 0
    top = tuple(sorted(v // 2 for v in values if v % 2 == top_parity))
    bottom = tuple(sorted(v // 2 for v in values if v % 2 != top_parity))
    a, b = symbol_to_bipartition((top, bottom))
    return _irr_from_pair(family, a, b)


@dataclass(frozen=True)
class Move:
    """Lower the shifted values at ``down`` by one and raise those at ``up``."""
    down: tuple[int, ...]
    up: tuple[int, ...]
    sizes: frozenset

    @property
    def positions(self) -> frozenset:
        return frozenset(self.down + self.up)


def _apply(shifted: list[int], moves) -> Optional[list[int]]:
    values = list(shifted)
    for m in moves:
        for k in m.down:
            values[k] -= 1
        for k in m.up:
            values[k] += 1
    if min(values) < 0 or len(set(values)) != len(values):
        return None
    if sum(v % 2 for v in values) != sum(v % 2 for v in shifted):
        return None
    return values


def elementary_moves(family: str, p: Partition) -> list[Move]:
    parts, shifted = shifted_parts(family, p)
    carrier = 0 if family == "C" else 1
    positions = [k for k, x in enumerate(parts) if x % 2 == carrier and x > 0]
    sizes = sorted({parts[k] for k in positions})
    out = []
    for i in positions:
        for j in positions:
            if j <= i:
                continue
            a, b = parts[i], parts[j]
            if b != a and sizes.index(b) != sizes.index(a) + 1:
                continue
            down, up = [i], [j]
            # a run of equal non-carrier parts in between spreads apart
            between: dict[int, list[int]] = {}
            for k in range(i + 1, j):
                if parts[k] % 2 != carrier:
                    between.setdefault(parts[k], []).append(k)
            for run in between.values():
                half = len(run) // 2
                down += run[:half]
                up += run[half:]
            move = Move(tuple(down), tuple(up), frozenset({a, b}) if a != b else frozenset({a}))
            if _apply(shifted, [move]) is not None:
                out.append(move)
    return out


def component_group_bound(family: str, p: Partition) -> int:
    """Order of A(u) modulo the image of the centre."""
    carrier = 0 if family == "C" else 1
    sizes = sorted({x for x in p if x % 2 == carrier})
    if not sizes:
        return 1
    order = 2 ** len(sizes) if family == "C" else 2 ** (len(sizes) - 1)
    z = [p.count(x) % 2 for x in sizes]
    # in types B and D the central element only lies in A(u) when it has even weight
    if any(z) and (family == "C" or sum(z) % 2 == 0):
        order //= 2
    return order


def _class_vector(moves) -> frozenset:
    out: frozenset = frozenset()
    for m in moves:
        out = out ^ m.sizes
    return out


def local_systems(family: str, p: Partition, reserved: frozenset = frozenset()) -> list[tuple[str, IrrLabel]]:
    """(local system name, Springer character) pairs for a non-very-even
    orbit, trivial local system first. ``reserved`` holds the characters of
    other orbits with trivial local system."""
    trivial = _irr_from_pair(family, *symbol_to_bipartition(orbit_symbol(family, p)))
    out = [(TRIVIAL, trivial)]
    _, shifted = shifted_parts(family, p)
    moves = elementary_moves(family, p)
    seen = {trivial} | set(reserved)
    done = {frozenset()}
    # several move sets can name the same component-group element; the one
    # built from more moves wins
    for k in range(len(moves), 0, -1):
        for combo in combinations(moves, k):
            pos = [x for m in combo for x in m.positions]
            if len(set(pos)) != len(pos):
                continue
            vec = _class_vector(combo)
            if vec in done:
                continue
            values = _apply(shifted, combo)
            if values is None:
                continue
            irr = _irr_from_shifted(family, values)
            if irr in seen:
                continue
            seen.add(irr)
            done.add(vec)
            out.append((local_system_name(tuple(vec)), irr))
    bound = component_group_bound(family, p)
    if len(out) > bound:
        raise ValidationError(f"orbit {format_partition(p)} carries {len(out)} local systems, "
                              f"more than its component group allows ({bound})")
    return out


@dataclass
class SpringerMap:
    algebra: Algebra
    orbit_of: dict[IrrLabel, tuple[OrbitLabel, str]]
    blocks: dict[OrbitLabel, list[tuple[str, IrrLabel]]]

    def irr(self, orbit: OrbitLabel, ls: str = TRIVIAL) -> IrrLabel:
        for name, irr in self.blocks.get(orbit, ()):
            if name == ls:
                return irr
        raise InvalidInputError(f"({orbit}, {ls}) is not in the Springer correspondence of {self.algebra.name}")

    def springer_rep(self, orbit: OrbitLabel) -> IrrLabel:
        return self.irr(orbit, TRIVIAL)


def springer_correspondence(alg: Algebra) -> SpringerMap:
    check_rank(alg)
    return _springer(alg)


@lru_cache(maxsize=None)
def _springer(alg: Algebra) -> SpringerMap:
    fam = alg.family
    blocks: dict[OrbitLabel, list[tuple[str, IrrLabel]]] = {}
    reserved = frozenset(_irr_from_pair(fam, *symbol_to_bipartition(orbit_symbol(fam, o.partition)))
                         for o in valid_partitions(alg) if fam != "A" and o.tag is None)
    for o in valid_partitions(alg):
        if fam == "A":
            blocks[o] = [(TRIVIAL, IrrLabel(o.partition))]
        elif o.tag is not None:
            a, b = symbol_to_bipartition(orbit_symbol(fam, o.partition))
            if a != b:
                raise ValidationError(f"very even orbit {o} has a non-degenerate symbol")
            blocks[o] = [(TRIVIAL, IrrLabel(a, b, "+" if o.tag == "I" else "-", True))]
        else:
            blocks[o] = local_systems(fam, o.partition, reserved)
    orbit_of = {}
    for o, members in blocks.items():
        for ls, irr in members:
            if irr in orbit_of:
                raise ValidationError(f"{irr} assigned to both {orbit_of[irr][0]} and {o}")
            orbit_of[irr] = (o, ls)
    smap = SpringerMap(alg, orbit_of, blocks)
    _validate(smap)
    return smap


def _validate(smap: SpringerMap) -> None:
    alg = smap.algebra
    table = character_table(alg)
    if set(smap.orbit_of) != set(table.irreps):
        missing = set(table.irreps) - set(smap.orbit_of)
        extra = set(smap.orbit_of) - set(table.irreps)
        raise ValidationError(
            f"Springer map of {alg.name} is not a bijection onto Irr(W): "
            f"missing {sorted(map(str, missing))}, unexpected {sorted(map(str, extra))}")
    if smap.orbit_of[trivial_irrep(alg)] != (nilcone_label(alg), TRIVIAL):
        raise ValidationError("trivial character is not attached to the regular orbit")
    if smap.orbit_of[sign_irrep(alg)] != (zero_label(alg), TRIVIAL):
        raise ValidationError("sign character is not attached to the zero orbit")
    N = alg.n_positive_roots
    for o, members in smap.blocks.items():
        expected = (2 * N - orbit_dimension(alg, o)) // 2
        got = b_value(alg, members[0][1])
        if got != expected:
            raise ValidationError(
                f"b-value {got} of {members[0][1]} differs from dim B_u = {expected} for {o}")
