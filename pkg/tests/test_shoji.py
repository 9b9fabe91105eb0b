import pytest

from nilrat import shoji
from nilrat.errors import InvalidInputError, ValidationError
from nilrat.kostka import modified_kf
from nilrat.orbits import Algebra, OrbitLabel, as_label, closure_leq, orbit_dimension, valid_partitions
from nilrat.qpoly import QPoly
from nilrat.shoji import (DIRECT, REVERSED, SHIPPED_CONVENTION, check_reconstruction, ktilde,
                          ktilde_matrix, lusztig_shoji_solve, omega_matrix)
from nilrat.springer import TRIVIAL, springer_correspondence

ALGS = [Algebra(f, r) for f, rs in [("A", range(1, 6)), ("B", range(1, 5)), ("C", range(1, 5)), ("D", range(2, 6))]
        for r in rs]


def test_a1_by_hand():
    a = Algebra("A", 1)
    assert ktilde(a, ((1, 1), TRIVIAL), (2,)) == QPoly.const(1) == modified_kf((2,), (1, 1))
    assert ktilde(a, ((2,), TRIVIAL), (2,)) == QPoly.const(1)
    assert ktilde(a, ((1, 1), TRIVIAL), (1, 1)) == QPoly.monomial(1)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_type_a_engine_is_modified_kostka_foulkes(n):
    a = Algebra("A", n)
    for lam in valid_partitions(a):
        for mu in valid_partitions(a):
            want = modified_kf(lam.partition, mu.partition) if closure_leq(mu, lam) else QPoly()
            assert ktilde(a, (mu, TRIVIAL), lam) == want


def test_shipped_convention_is_the_one_passing_the_oracle():
    assert SHIPPED_CONVENTION == DIRECT
    a = Algebra("A", 3)
    smap = springer_correspondence(a)
    kt = lusztig_shoji_solve(omega_matrix(a, REVERSED, [x for x, _, _ in shoji.block_order(smap)]), smap)
    mismatches = 0
    for lam in valid_partitions(a):
        for mu in valid_partitions(a):
            if closure_leq(mu, lam):
                got = kt.P[kt.index(smap.springer_rep(lam))][kt.index(smap.springer_rep(mu))]
                mismatches += got != modified_kf(lam.partition, mu.partition)
    assert mismatches > 0


@pytest.mark.parametrize("alg", ALGS, ids=str)
def test_factorization(alg):
    kt = ktilde_matrix(alg)
    omega = omega_matrix(alg, order=kt.irreps)
    assert check_reconstruction(kt, omega)
    n = len(kt.irreps)
    N = alg.n_positive_roots
    for i in range(n):
        d = (2 * N - orbit_dimension(alg, kt.block_of[i])) // 2
        assert kt.P[i][i] == QPoly.monomial(d)
        for j in range(n):
            assert kt.Lam[i][j] == kt.Lam[j][i]
            if kt.block_of[i] != kt.block_of[j]:
                assert kt.Lam[i][j].is_zero()
                if kt.P[i][j]:
                    # triangular for the closure order, nonnegative entries
                    assert closure_leq(kt.block_of[j], kt.block_of[i])
                    assert min(kt.P[i][j].coeffs) >= 0


def test_c3_block_of_22_11_contributes_two_terms():
    a = Algebra("C", 3)
    smap = springer_correspondence(a)
    entries = [ktilde(a, ((2, 2, 1, 1), ls), (3, 3)) for ls, _ in smap.blocks[OrbitLabel((2, 2, 1, 1))]]
    assert entries == [QPoly.monomial(2), QPoly.monomial(3)]
    total = entries[0] + entries[1]
    assert len(total.to_dict()) >= 2


def test_ktilde_rejects_bad_labels():
    a = Algebra("C", 3)
    with pytest.raises(InvalidInputError):
        ktilde(a, ((5, 1), TRIVIAL), (6,))
    with pytest.raises(InvalidInputError):
        ktilde(a, ((2, 2, 1, 1), "eps:7"), (6,))
    with pytest.raises(InvalidInputError):
        ktilde(a, ((2, 2, 1, 1), TRIVIAL), ((6,), "eps:6"))


def test_very_even_sources_agree_for_ordinary_targets():
    a = Algebra("D", 4)
    for target in valid_partitions(a):
        if target.tag is None:
            assert ktilde(a, (OrbitLabel((2, 2, 2, 2), "I"), TRIVIAL), target) == \
                ktilde(a, (OrbitLabel((2, 2, 2, 2), "II"), TRIVIAL), target)


def test_very_even_asymmetry_is_reported():
    a = Algebra("D", 4)
    kt = ktilde_matrix(a)
    smap = springer_correspondence(a)
    row = kt.index(smap.springer_rep(as_label(a, "5,3")))
    col = kt.index(smap.springer_rep(OrbitLabel((2, 2, 2, 2), "I")))
    P = [list(r) for r in kt.P]
    P[row][col] = P[row][col] + QPoly.monomial(9)
    bad = shoji.KTildeMatrix(a, kt.convention, kt.irreps, kt.block_of, P, kt.Lam)
    with pytest.raises(ValidationError, match="very even"):
        shoji.check_very_even_symmetry(bad, smap)


def test_unknown_convention():
    with pytest.raises(InvalidInputError):
        omega_matrix(Algebra("A", 2), "sideways")


def test_omega_entries_are_nonnegative_and_symmetric():
    om = omega_matrix(Algebra("B", 3))
    for i, row in enumerate(om.entries):
        for j, e in enumerate(row):
            assert e == om.entries[j][i] and min(e.coeffs) >= 0
