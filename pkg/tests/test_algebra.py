import numpy as np
import pytest

from conftest import algebra, constants, rep
from liebasis import (
    AlgebraSpec,
    adjoint_rep,
    build_generators,
    conjugate_rep,
    defining_rep,
    homomorphism_residual,
    structure_constants,
    weight_operators,
)

TOL = 1e-12

# Standard Pauli and Gell-Mann matrices, written out as the independent
# reference for the n = 2, 3 constructions.
PAULI = [
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]]),
    np.array([[1, 0], [0, -1]], dtype=complex),
]

GELL_MANN = [
    np.array([[0, 1, 0], [1, 0, 0], [0, 0, 0]], dtype=complex),
    np.array([[0, -1j, 0], [1j, 0, 0], [0, 0, 0]]),
    np.array([[1, 0, 0], [0, -1, 0], [0, 0, 0]], dtype=complex),
    np.array([[0, 0, 1], [0, 0, 0], [1, 0, 0]], dtype=complex),
    np.array([[0, 0, -1j], [0, 0, 0], [1j, 0, 0]]),
    np.array([[0, 0, 0], [0, 0, 1], [0, 1, 0]], dtype=complex),
    np.array([[0, 0, 0], [0, 0, -1j], [0, 1j, 0]]),
    np.diag([1, 1, -2]).astype(complex) / np.sqrt(3),
]


def test_su2_generators_are_half_paulis():
    basis = algebra(2)
    assert len(basis.matrices) == 3
    for ours, pauli in zip(basis.matrices, PAULI):
        np.testing.assert_allclose(ours, pauli / 2, atol=TOL)
    np.testing.assert_allclose(basis.matrices[2], np.diag([0.5, -0.5]), atol=0)


def test_su3_generators_are_half_gell_mann():
    basis = algebra(3)
    assert len(basis.matrices) == 8
    for ours, lam in zip(basis.matrices, GELL_MANN):
        np.testing.assert_allclose(ours, lam / 2, atol=TOL)


def test_su3_orthonormality_against_gell_mann_oracle():
    # oracle: direct 3x3 trace arithmetic on the reference matrices
    for a in range(8):
        for b in range(8):
            expected = 0.5 if a == b else 0.0
            got = np.trace(GELL_MANN[a] / 2 @ GELL_MANN[b] / 2)
            assert abs(got - expected) < TOL
            ours = np.trace(algebra(3).matrices[a] @ algebra(3).matrices[b])
            assert abs(ours - expected) < TOL


def test_su4_layout():
    basis = algebra(4)
    assert len(basis.matrices) == 15
    assert basis.cartan_flags.sum() == 3
    # first 8 generators live in the top-left 3x3 block
    for mat in basis.matrices[:8]:
        assert np.abs(mat[3, :]).max() == 0
        assert np.abs(mat[:, 3]).max() == 0


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_generator_basis_invariants(n):
    basis = build_generators(n)
    mats = basis.matrices
    count = n * n - 1
    assert mats.shape == (count, n, n)
    for mat in mats:
        assert np.linalg.norm(mat - mat.conj().T) < TOL
        assert abs(np.trace(mat)) < TOL
    gram = np.einsum("aij,bji->ab", mats, mats)
    np.testing.assert_allclose(gram, 0.5 * np.eye(count), atol=TOL)
    # subgroup prefixes: level <= m indices are the first m*m-1 and live in
    # the top-left m x m block
    for m in range(2, n + 1):
        idx = basis.subgroup_indices(m)
        assert list(idx) == list(range(m * m - 1))
        for a in idx:
            assert np.abs(mats[a][m:, :]).max() == 0
            assert np.abs(mats[a][:, m:]).max() == 0
    flags = basis.cartan_flags
    assert flags.sum() == n - 1
    for a in np.flatnonzero(flags):
        off = mats[a] - np.diag(np.diag(mats[a]))
        assert np.abs(off).max() == 0


def test_rejects_small_n():
    with pytest.raises(ValueError):
        build_generators(1)
    with pytest.raises(ValueError):
        AlgebraSpec(0)


def _trace_f(gens, a, b, c):
    comm = gens[a] @ gens[b] - gens[b] @ gens[a]
    return complex(-2j * np.trace(comm @ gens[c]))


def _trace_d(gens, a, b, c):
    anti = gens[a] @ gens[b] + gens[b] @ gens[a]
    return complex(2 * np.trace(anti @ gens[c]))


def test_structure_constants_su2():
    sc = constants(2)
    halves = [p / 2 for p in PAULI]
    assert abs(sc.f[0, 1, 2] - 1.0) < TOL
    assert abs(_trace_f(halves, 0, 1, 2) - 1.0) < TOL
    assert np.abs(sc.d).max() < TOL


def test_structure_constants_su3():
    sc = constants(3)
    halves = [lam / 2 for lam in GELL_MANN]
    assert abs(sc.f[0, 1, 2] - _trace_f(halves, 0, 1, 2)) < TOL
    assert abs(sc.f[0, 1, 2] - 1.0) < TOL
    assert abs(sc.f[3, 4, 7] - _trace_f(halves, 3, 4, 7)) < TOL
    assert abs(sc.f[3, 4, 7] - np.sqrt(3) / 2) < TOL
    assert abs(sc.d[0, 0, 7] - _trace_d(halves, 0, 0, 7)) < TOL
    assert abs(sc.d[0, 0, 7] - 1 / np.sqrt(3)) < TOL


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_f_d_symmetries_and_jacobi(n):
    sc = constants(n)
    f, d = sc.f, sc.d
    assert np.abs(f + f.transpose(1, 0, 2)).max() < TOL
    assert np.abs(f + f.transpose(0, 2, 1)).max() < TOL
    assert np.abs(d - d.transpose(1, 0, 2)).max() < TOL
    assert np.abs(d - d.transpose(0, 2, 1)).max() < TOL
    jac = (
        np.einsum("abd,dce->abce", f, f)
        + np.einsum("bcd,dae->abce", f, f)
        + np.einsum("cad,dbe->abce", f, f)
    )
    assert np.abs(jac).max() < TOL


@pytest.mark.parametrize("n", [2, 3, 4])
def test_embedded_subalgebra_closure(n):
    f = constants(n).f
    for m in range(2, n):
        inside = m * m - 1
        assert np.abs(f[:inside, :inside, inside:]).max() < TOL


@pytest.mark.parametrize("n", [2, 3, 4])
def test_representation_homomorphism(n):
    sc = constants(n)
    for kind in ("defining", "conjugate", "adjoint"):
        r = rep(n, kind)
        assert homomorphism_residual(r, sc) < 1e-10
        for mat in r.matrices:
            assert np.linalg.norm(mat - mat.conj().T) < TOL


def test_adjoint_dimensions():
    assert rep(2, "adjoint").dim == 3
    assert rep(3, "adjoint").dim == 8
    assert homomorphism_residual(rep(2, "adjoint"), constants(2)) < 1e-12


def test_su2_conjugate_equivalent_to_defining():
    # oracle: sum_a R(Ta)^2 on both reps gives the same scalar 3/4
    for kind in ("defining", "conjugate"):
        mats = rep(2, kind).matrices
        c2 = sum(m @ m for m in mats)
        np.testing.assert_allclose(c2, 0.75 * np.eye(2), atol=TOL)


def test_weight_operators_su3():
    basis = algebra(3)
    ws = weight_operators(basis)
    assert [name for name, _ in ws] == ["I3", "Y"]
    # oracle: (2/sqrt(3)) * lambda_8 / 2 is diag(1/3, 1/3, -2/3)
    expected = (2 / np.sqrt(3)) * GELL_MANN[7] / 2
    np.testing.assert_allclose(ws[1][1], expected, atol=TOL)
    np.testing.assert_allclose(np.diag(ws[1][1]).real, [1 / 3, 1 / 3, -2 / 3], atol=TOL)


def test_weight_operators_su2():
    (name, w1), = weight_operators(algebra(2))
    assert name == "I3"
    np.testing.assert_allclose(np.diag(w1).real, [0.5, -0.5], atol=0)


def test_weight_operators_su4_commute_exactly():
    ws = weight_operators(algebra(4))
    assert len(ws) == 3
    assert [name for name, _ in ws] == ["I3", "Y", "Z"]
    for _, a in ws:
        assert np.abs(a - np.diag(np.diag(a))).max() == 0
        for _, b in ws:
            assert np.abs(a @ b - b @ a).max() == 0


def test_weight_operators_in_given_rep():
    basis = algebra(3)
    adj = rep(3, "adjoint")
    ws = weight_operators(basis, adj)
    assert ws[0][1].shape == (8, 8)
    # adjoint weights are the roots: I3 eigenvalues include +-1, +-1/2, 0
    eigs = np.sort(np.linalg.eigvalsh(ws[0][1]))
    np.testing.assert_allclose(eigs, [-1, -0.5, -0.5, 0, 0, 0.5, 0.5, 1], atol=1e-12)


def test_structure_constants_are_real():
    sc = structure_constants(build_generators(3))
    assert sc.f.dtype == np.float64
    assert sc.d.dtype == np.float64
