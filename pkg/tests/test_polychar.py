from collections import Counter
from math import factorial

import numpy as np

import pytest

from nilrat.orbits import Algebra
from nilrat.polychar import (IrrLabel, b_value, character_table, fake_degrees, sign_irrep,
                             trivial_irrep)
from nilrat.qpoly import ONE, QPoly
from oracles.weyl import (class_sizes_a, class_sizes_b, det_one_minus_qw, elements_a, elements_b,
                          signed_cycle_type, signed_permutations)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_type_b_class_sizes(n):
    t = character_table(Algebra("B", n))
    assert dict(zip(t.classes, t.sizes)) == class_sizes_b(n)
    assert t.order == 2 ** n * factorial(n)


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
def test_type_a_class_sizes(m):
    t = character_table(Algebra("A", m - 1))
    assert dict(zip(t.classes, t.sizes)) == class_sizes_a(m)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_type_d_class_sizes_after_merging_split_classes(n):
    t = character_table(Algebra("D", n))
    merged = Counter()
    for c, s in zip(t.classes, t.sizes):
        merged[(c.pos, c.neg)] += s
    brute = Counter(signed_cycle_type(p, s) for p, s in signed_permutations(n, even_only=True))
    assert merged == brute


@pytest.mark.parametrize("n", [2, 3, 4])
def test_reflection_character_type_b(n):
    t = character_table(Algebra("B", n))
    refl = t.row(IrrLabel((n - 1,), (1,)))
    traces = {c: int(w.trace()) for c, w in elements_b(n)}
    assert refl == [traces[c] for c in t.classes]
    det = {c: int(round(np.linalg.det(w))) for c, w in elements_b(n)}
    assert t.row(sign_irrep(Algebra("B", n))) == [det[c] for c in t.classes]


def _brute_fake_degrees(elements, degrees, table):
    numer = ONE
    for d in degrees:
        numer = numer * QPoly([1] + [0] * (d - 1) + [-1])
    terms = {}
    for c, w in elements:
        terms.setdefault(c, [0, numer.exact_div(QPoly(det_one_minus_qw(w)))])[0] += 1
    out = {}
    for x in table.irreps:
        row = table.row(x)
        acc = QPoly()
        for c, (count, poly) in terms.items():
            acc = acc + poly * (count * row[table.class_index(c)])
        out[x] = acc.exact_div_int(table.order)
    return out


@pytest.mark.parametrize("n", [1, 2, 3])
def test_fake_degrees_type_b_by_summing_over_elements(n):
    alg = Algebra("B", n)
    assert fake_degrees(alg) == _brute_fake_degrees(elements_b(n), alg.degrees, character_table(alg))


@pytest.mark.parametrize("m", [2, 3, 4])
def test_fake_degrees_type_a_by_summing_over_elements(m):
    # the permutation representation adds a trivial summand, i.e. a degree 1
    alg = Algebra("A", m - 1)
    brute = _brute_fake_degrees(elements_a(m), (1,) + alg.degrees, character_table(alg))
    assert fake_degrees(alg) == brute


@pytest.mark.parametrize("alg", [Algebra("A", 4), Algebra("B", 4), Algebra("C", 3), Algebra("D", 4), Algebra("D", 5)], ids=str)
def test_fake_degree_of_reflection_representation(alg):
    R = fake_degrees(alg)
    expected = QPoly.from_dict(dict(Counter(d - 1 for d in alg.degrees)))
    assert any(R[x] == expected for x in R)
    assert R[trivial_irrep(alg)] == ONE
    assert b_value(alg, sign_irrep(alg)) == alg.n_positive_roots


def test_type_c_shares_the_type_b_group():
    assert character_table(Algebra("C", 3)) is character_table(Algebra("B", 3))


def test_degenerate_type_d_characters_split():
    t = character_table(Algebra("D", 4))
    halves = [x for x in t.irreps if x.split]
    assert {x.split for x in halves} == {"+", "-"} and len(halves) == 4
    assert len(t.irreps) == 13
