import pytest
from hypothesis import given, settings, strategies as st

from nilrat.errors import InvalidInputError, UnsupportedFamilyError
from nilrat.orbits import (Algebra, OrbitLabel, as_label, closure_leq, closure_poset, dominates,
                           minimal_orbit, nilcone_label, orbit_dimension, parse_orbit, partitions,
                           root_vector_orbit, spherical_orbits, transpose, valid_partitions,
                           zero_label)
from oracles.matrices import centralizer_orbit_dim, jordan_type, nilpotent_with_form, root_vectors

SMALL = [Algebra(f, r) for f, rs in [("A", range(1, 6)), ("B", range(1, 5)),
                                     ("C", range(1, 5)), ("D", range(2, 5))] for r in rs]


@pytest.mark.parametrize("alg", SMALL, ids=str)
def test_orbit_dimension_matches_centralizer_rank(alg):
    for o in valid_partitions(alg):
        if o.tag != "II":
            assert orbit_dimension(alg, o) == centralizer_orbit_dim(alg.family, o.partition), o


@pytest.mark.parametrize("alg", [a for a in SMALL if a.family != "A"], ids=str)
def test_closure_order_matches_ranks_of_powers(alg):
    import numpy as np
    reps = {}
    for o in valid_partitions(alg):
        x, _ = nilpotent_with_form(alg.family, o.partition)
        reps[o] = [int(np.linalg.matrix_rank(np.linalg.matrix_power(x, k))) for k in range(1, sum(o.partition) + 1)]
        assert jordan_type(x.astype(float)) == o.partition
    for a in reps:
        for b in reps:
            if a.partition == b.partition:
                continue
            assert closure_leq(a, b) == all(u <= v for u, v in zip(reps[a], reps[b]))


@pytest.mark.parametrize("fam,n", [("B", 2), ("B", 3), ("B", 4), ("C", 2), ("C", 3), ("C", 4), ("D", 3), ("D", 4)])
def test_root_vector_orbits(fam, n):
    alg = Algebra(fam, n)
    long_v, short_v = root_vectors(fam, n)
    assert jordan_type(long_v) == root_vector_orbit(alg, "long").partition
    if short_v is not None:
        assert jordan_type(short_v) == root_vector_orbit(alg, "short").partition
    else:
        with pytest.raises(InvalidInputError):
            root_vector_orbit(alg, "short")


def test_nilcone_and_zero():
    for alg in SMALL:
        assert orbit_dimension(alg, nilcone_label(alg)) == alg.nilcone_dim
        assert orbit_dimension(alg, zero_label(alg)) == 0
        poset = closure_poset(alg)
        assert poset.maximum == nilcone_label(alg) and poset.minimum == zero_label(alg)


def test_orbit_counts():
    # numbers of nilpotent orbits (very even ones counted twice)
    assert len(valid_partitions(Algebra("C", 3))) == 8
    assert len(valid_partitions(Algebra("B", 3))) == 7
    assert len(valid_partitions(Algebra("D", 4))) == 12
    assert len(valid_partitions(Algebra("A", 5))) == 11


def test_parity_rules_are_named():
    with pytest.raises(InvalidInputError, match="odd part must have even multiplicity"):
        as_label(Algebra("C", 3), "5,1")
    with pytest.raises(InvalidInputError, match="even part must have even multiplicity"):
        as_label(Algebra("B", 2), "4,1")
    with pytest.raises(InvalidInputError, match="very even"):
        as_label(Algebra("D", 4), "4,4")
    with pytest.raises(InvalidInputError, match="only applies"):
        as_label(Algebra("C", 2), "2,2:I")
    with pytest.raises(InvalidInputError):
        as_label(Algebra("A", 2), "2,2")


def test_very_even_siblings_are_incomparable():
    alg = Algebra("D", 4)
    i, ii = as_label(alg, "4,4:I"), as_label(alg, "4,4:II")
    assert i.sibling() == ii and not closure_leq(i, ii) and not closure_leq(ii, i)
    assert closure_leq(as_label(alg, "3,3,1,1"), i) and closure_leq(i, as_label(alg, "5,3"))
    assert orbit_dimension(alg, i) == orbit_dimension(alg, ii) == 20


def test_minimal_and_spherical():
    assert minimal_orbit(Algebra("C", 3)) == OrbitLabel((2, 1, 1, 1, 1))
    assert orbit_dimension(Algebra("C", 4), minimal_orbit(Algebra("C", 4))) == 8
    assert [str(o) for o in spherical_orbits(Algebra("A", 3))] == ["1,1,1,1", "2,1,1", "2,2"]
    with pytest.raises(UnsupportedFamilyError):
        spherical_orbits(Algebra("B", 3))


def test_g2_is_label_based():
    g2 = Algebra("G2", 2)
    assert orbit_dimension(g2, "A1") == 6 and orbit_dimension(g2, "G2") == 12
    with pytest.raises(UnsupportedFamilyError):
        valid_partitions(g2)


def test_parse_orbit_and_algebra():
    assert parse_orbit(" 4,4:ii ") == OrbitLabel((4, 4), "II")
    assert Algebra.parse("c3") == Algebra("C", 3)
    with pytest.raises(InvalidInputError):
        Algebra("E", 6)
    with pytest.raises(InvalidInputError):
        parse_orbit("3,0,1")


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 9).flatmap(lambda n: st.tuples(st.sampled_from(partitions(n)), st.sampled_from(partitions(n)))))
def test_dominance_is_reversed_by_transpose(pair):
    a, b = pair
    assert dominates(a, b) == dominates(transpose(b), transpose(a))
