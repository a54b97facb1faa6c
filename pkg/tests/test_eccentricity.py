from fractions import Fraction

import numpy as np
import pytest

from oracles import brute_ecc_matrix, brute_zdg_edges
from zdgecc.eccentricity import (
    EquitabilityError,
    Partition,
    divisor_class_partition,
    eccentricities,
    eccentricity_matrix,
    is_irreducible,
    quotient_matrix,
)
from zdgecc.graphs import (
    build_zdg,
    complement,
    complete_graph,
    distances,
    null_graph,
)
from zdgecc.number_theory import is_prime


def test_eccentricities_examples():
    assert eccentricities(build_zdg(8)) == [2, 1, 2]
    assert eccentricities(complete_graph(range(6))) == [1] * 6
    assert eccentricities(build_zdg(35)) == [2] * 10


def test_eccentricity_matrix_z8():
    mat = eccentricity_matrix(build_zdg(8))
    assert mat.tolist() == [[0, 1, 2], [1, 0, 1], [2, 1, 0]]


def test_eccentricity_matrix_complete():
    mat = eccentricity_matrix(complete_graph(range(5)))
    expected = np.ones((5, 5), dtype=int) - np.eye(5, dtype=int)
    assert np.array_equal(mat, expected)


def test_eccentricity_matrix_disconnected_blocks():
    comp = complement(build_zdg(27))  # K_6 plus two isolated vertices
    mat = eccentricity_matrix(comp)
    clique = [comp.index_of(v) for v in (3, 6, 12, 15, 21, 24)]
    isolated = [comp.index_of(v) for v in (9, 18)]
    block = mat[np.ix_(clique, clique)]
    assert np.array_equal(block, np.ones((6, 6), dtype=int) - np.eye(6, dtype=int))
    assert not mat[isolated, :].any()
    assert not mat[:, isolated].any()


def test_eccentricity_matrix_single_vertex():
    assert eccentricity_matrix(null_graph([2])).tolist() == [[0]]


def test_matches_brute_force():
    for n in range(4, 120):
        if is_prime(n):
            continue
        g = build_zdg(n)
        expected = brute_ecc_matrix(list(g.labels), brute_zdg_edges(n))
        assert eccentricity_matrix(g).tolist() == expected
        gc = complement(g)
        expected_c = brute_ecc_matrix(list(gc.labels), gc.edge_set())
        assert eccentricity_matrix(gc).tolist() == expected_c


def test_support_entries_are_distances_and_trace_zero():
    for n in (8, 12, 27, 35, 60, 81):
        g = build_zdg(n)
        mat = eccentricity_matrix(g)
        dist = distances(g)
        nz = mat != 0
        assert (mat[nz] == dist[nz]).all()
        assert mat.trace() == 0


def _block(value, rows, cols, minus_identity=False):
    out = np.full((rows, cols), value, dtype=np.int64)
    if minus_identity:
        np.fill_diagonal(out, 0)
    return out


def test_family_block_structure_semiprime():
    """eps(Gamma(Z_{p1 p2})) = blockdiag(2(J-I), 2(J-I)) for odd p1 < p2."""
    for p1, p2 in ((3, 5), (5, 7), (3, 11)):
        g = build_zdg(p1 * p2)
        mat = eccentricity_matrix(g)
        part = divisor_class_partition(g, p1 * p2)
        b1, b2 = part.blocks  # A(p1) has p2-1 elements, A(p2) has p1-1
        assert len(b1) == p2 - 1 and len(b2) == p1 - 1
        reordered = mat[np.ix_(b1 + b2, b1 + b2)]
        expected = np.zeros_like(reordered)
        expected[: p2 - 1, : p2 - 1] = _block(2, p2 - 1, p2 - 1, minus_identity=True)
        expected[p2 - 1 :, p2 - 1 :] = _block(2, p1 - 1, p1 - 1, minus_identity=True)
        assert np.array_equal(reordered, expected)


def test_family_block_structure_prime_cube():
    """eps(Gamma(Z_{p^3})) = [[2(J-I), J], [J^T, J-I]] with sizes p(p-1), p-1."""
    for p in (3, 5):
        n = p**3
        g = build_zdg(n)
        mat = eccentricity_matrix(g)
        part = divisor_class_partition(g, n)
        a_p, a_p2 = part.blocks
        assert len(a_p) == p * (p - 1) and len(a_p2) == p - 1
        order = list(a_p) + list(a_p2)
        reordered = mat[np.ix_(order, order)]
        k = p * (p - 1)
        assert np.array_equal(
            reordered[:k, :k], _block(2, k, k, minus_identity=True)
        )
        assert np.array_equal(reordered[:k, k:], _block(1, k, p - 1))
        assert np.array_equal(
            reordered[k:, k:], _block(1, p - 1, p - 1, minus_identity=True)
        )


def test_family_block_structure_prime_fourth():
    """eps(Gamma(Z_{p^4})) in class order [A(p^2), A(p), A(p^3)]:
    [[0, 2J, J], [2J, 2(J-I), J], [J, J, J-I]]."""
    for p in (2, 3):
        n = p**4
        g = build_zdg(n)
        mat = eccentricity_matrix(g)
        part = divisor_class_partition(g, n)
        a_p, a_p2, a_p3 = part.blocks  # ascending divisor: p, p^2, p^3
        s1, s2, s3 = p * p * (p - 1), p * (p - 1), p - 1
        assert (len(a_p), len(a_p2), len(a_p3)) == (s1, s2, s3)
        order = list(a_p2) + list(a_p) + list(a_p3)
        m = mat[np.ix_(order, order)]
        assert not m[:s2, :s2].any()
        assert np.array_equal(m[:s2, s2 : s2 + s1], _block(2, s2, s1))
        assert np.array_equal(m[:s2, s2 + s1 :], _block(1, s2, s3))
        assert np.array_equal(
            m[s2 : s2 + s1, s2 : s2 + s1], _block(2, s1, s1, minus_identity=True)
        )
        assert np.array_equal(m[s2 : s2 + s1, s2 + s1 :], _block(1, s1, s3))
        assert np.array_equal(
            m[s2 + s1 :, s2 + s1 :], _block(1, s3, s3, minus_identity=True)
        )


def test_irreducibility_examples():
    assert is_irreducible(eccentricity_matrix(build_zdg(14)))
    assert not is_irreducible(eccentricity_matrix(build_zdg(35)))
    assert not is_irreducible(np.zeros((3, 3), dtype=int))
    assert is_irreducible(np.zeros((1, 1), dtype=int))


def test_tree_irreducibility_2p_up_to_200():
    for p in (3, 5, 7, 11, 31, 101, 199):
        assert is_irreducible(eccentricity_matrix(build_zdg(2 * p)))


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition(((0, 1), (1, 2)))
    with pytest.raises(ValueError):
        Partition(((0,), (2,)))
    with pytest.raises(ValueError):
        Partition(((0,), ()))


def test_quotient_examples():
    g35 = build_zdg(35)
    q = quotient_matrix(eccentricity_matrix(g35), divisor_class_partition(g35, 35))
    assert q == [[Fraction(10), Fraction(0)], [Fraction(0), Fraction(6)]]

    km = complete_graph(range(7))
    q1 = quotient_matrix(eccentricity_matrix(km), Partition((tuple(range(7)),)))
    assert q1 == [[Fraction(6)]]

    g27 = build_zdg(27)
    q27 = quotient_matrix(eccentricity_matrix(g27), divisor_class_partition(g27, 27))
    assert q27 == [
        [Fraction(10), Fraction(2)],
        [Fraction(6), Fraction(1)],
    ]


def test_quotient_not_equitable():
    # path 0-1-2: singleton {1} with {0,2} is fine, but {0,1} with {2} is not
    mat = np.array([[0, 1, 2], [1, 0, 1], [2, 1, 0]])
    with pytest.raises(EquitabilityError) as err:
        quotient_matrix(mat, Partition(((0, 1), (2,))))
    msg = str(err.value)
    assert "blocks (0, 1)" in msg  # the offending block pair
    assert "rows" in msg and ("[0]" in msg or "[1]" in msg)


def test_quotient_eigenvalues_embed_up_to_300():
    """The divisor-class partition is eccentricity-equitable for every
    composite n <= 300, and the quotient eigenvalues embed in the full
    spectrum (LAPACK as the test-side reference)."""
    for n in range(4, 301):
        if is_prime(n):
            continue
        g = build_zdg(n)
        mat = eccentricity_matrix(g)
        part = divisor_class_partition(g, n)
        q = np.array(
            [[float(x) for x in row] for row in quotient_matrix(mat, part)]
        )
        q_eigs = np.linalg.eigvals(q)
        assert np.abs(q_eigs.imag).max() < 1e-8
        full = np.linalg.eigvalsh(mat.astype(float))
        for qe in q_eigs.real:
            assert np.abs(full - qe).min() < 1e-8
