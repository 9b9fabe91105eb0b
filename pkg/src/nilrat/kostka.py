"""Semistandard tableaux, charge, and Kostka-Foulkes polynomials.

This is the type A ground truth the Lusztig-Shoji engine is checked
against. Tableaux use English notation (rows top to bottom, longest first);
the reading word lists rows from the shortest to the longest, each left to
right.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import InvalidInputError
from .orbits import Partition, check_partition, n_statistic
from .qpoly import QPoly


@dataclass(frozen=True)
class Tableau:
    rows: tuple[tuple[int, ...], ...]

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    @property
    def content(self) -> Partition:
        counts: dict[int, int] = {}
        for r in self.rows:
            for x in r:
                counts[x] = counts.get(x, 0) + 1
        return tuple(counts.get(i, 0) for i in range(1, max(counts, default=0) + 1))

    def is_semistandard(self) -> bool:
        for r in self.rows:
            if any(r[j] > r[j + 1] for j in range(len(r) - 1)):
                return False
        for i in range(len(self.rows) - 1):
            upper, lower = self.rows[i], self.rows[i + 1]
            if len(lower) > len(upper):
                return False
            if any(upper[j] >= lower[j] for j in range(len(lower))):
                return False
        return True

    def reading_word(self) -> tuple[int, ...]:
        return tuple(x for r in reversed(self.rows) for x in r)

    def column_word(self) -> tuple[int, ...]:
        width = len(self.rows[0]) if self.rows else 0
        return tuple(r[j] for j in range(width) for r in self.rows if j < len(r))

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in r) for r in self.rows)


def _check_sizes(shape: Partition, content: Partition) -> None:
    check_partition(shape)
    if any(c < 0 for c in content):
        raise InvalidInputError(f"content must be nonnegative: {content}")
    if sum(shape) != sum(content):
        raise InvalidInputError(f"size mismatch: shape {shape} vs content {content}")


def ssyt(shape: Partition, content: Partition) -> list[Tableau]:
    """All semistandard tableaux of the given shape and content."""
    shape, content = tuple(shape), tuple(content)
    _check_sizes(shape, content)
    return list(_ssyt(shape, content))


@lru_cache(maxsize=None)
def _ssyt(shape: Partition, content: Partition) -> tuple[Tableau, ...]:
    # the entries equal to the largest letter form a horizontal strip
    if not content:
        return (Tableau(()),) if not shape else ()
    *head, last = content
    out = []
    for inner in _horizontal_strips(shape, last):
        for t in _ssyt(inner, tuple(head)):
            rows = [list(r) for r in t.rows]
            rows += [[] for _ in range(len(shape) - len(rows))]
            for i, length in enumerate(shape):
                rows[i].extend([len(content)] * (length - len(rows[i])))
            out.append(Tableau(tuple(tuple(r) for r in rows)))
    out.sort(key=lambda t: t.column_word())
    return tuple(out)


def _horizontal_strips(shape: Partition, k: int) -> list[Partition]:
    """Partitions nu inside ``shape`` with shape/nu a horizontal k-strip."""
    out = []

    def rec(i: int, remaining: int, acc: list[int]):
        if i == len(shape):
            if remaining == 0:
                out.append(tuple(x for x in acc if x > 0))
            return
        lower = shape[i + 1] if i + 1 < len(shape) else 0
        for take in range(0, min(remaining, shape[i] - lower) + 1):
            rec(i + 1, remaining - take, acc + [shape[i] - take])

    rec(0, k, [])
    return out


def word_charge(word: tuple[int, ...]) -> int:
    """Lascoux-Schutzenberger charge of a word with partition content."""
    letters = list(word)
    alive = [True] * len(letters)
    total = 0
    while any(alive):
        top = max(x for x, a in zip(letters, alive) if a)
        pos = len(letters)  # scanning starts just right of the end
        index = 0
        for r in range(1, top + 1):
            # search leftwards cyclically from pos for an unused r
            found = None
            for step in range(1, len(letters) + 1):
                j = (pos - step) % len(letters)
                if alive[j] and letters[j] == r:
                    found = j
                    break
            if found is None:
                raise InvalidInputError(f"word {word} does not have partition content")
            if r > 1 and found > pos:
                index += 1
            total += index
            alive[found] = False
            pos = found
    return total


def charge(t: Tableau) -> int:
    return word_charge(t.reading_word())


def kostka_foulkes(lam: Partition, mu: Partition) -> QPoly:
    """K_{lam,mu}(q) = sum of q^charge over SSYT(lam, mu)."""
    return _kostka_foulkes(tuple(lam), tuple(mu))


@lru_cache(maxsize=None)
def _kostka_foulkes(lam: Partition, mu: Partition) -> QPoly:
    terms: dict[int, int] = {}
    for t in ssyt(lam, mu):
        c = charge(t)
        terms[c] = terms.get(c, 0) + 1
    return QPoly.from_dict(terms)


def modified_kf(lam: Partition, mu: Partition) -> QPoly:
    """q^{n(mu)} K_{lam,mu}(1/q)."""
    return kostka_foulkes(lam, mu).invert_variable().shift(n_statistic(tuple(mu)))


def kostka_number(lam: Partition, mu: Partition) -> int:
    return len(ssyt(lam, mu))
