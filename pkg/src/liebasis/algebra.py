"""su(n) generator bases, structure constants, and the small representations.

Generators follow the generalized Gell-Mann construction, normalized so that
Tr(Ta Tb) = delta_ab / 2, and ordered along the subgroup chain
su(2) < su(3) < ... < su(n): for every m in 2..n the first m**2 - 1
generators span the su(m) embedded in the top-left m x m block, and the
last generator of each level is the new diagonal (Cartan) one.
"""

from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "AlgebraSpec",
    "GeneratorBasis",
    "StructureConstants",
    "Representation",
    "build_generators",
    "structure_constants",
    "defining_rep",
    "conjugate_rep",
    "adjoint_rep",
    "weight_operators",
    "homomorphism_residual",
]

# Trace normalization Tr(Ta Tb) = TRACE_NORM * delta_ab.
TRACE_NORM = 0.5


@dataclass(frozen=True)
class AlgebraSpec:
    """Parameters of su(n): the rank is n - 1, the generator count n**2 - 1."""

    n: int
    normalization: float = TRACE_NORM

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"su(n) needs n >= 2, got n={self.n}")

    @property
    def rank(self):
        return self.n - 1

    @property
    def num_generators(self):
        return self.n * self.n - 1


@dataclass(frozen=True)
class GeneratorBasis:
    """Ordered Hermitian generator matrices of su(n).

    Attributes
    ----------
    spec : AlgebraSpec
    matrices : ndarray, shape (n**2 - 1, n, n)
        Hermitian traceless generators Ta in subgroup-chain order.
    subgroup_level : ndarray of int, shape (n**2 - 1,)
        Level m of each generator; indices with level <= m span the
        embedded su(m).
    cartan_flags : ndarray of bool, shape (n**2 - 1,)
        True for the n - 1 diagonal generators.
    """

    spec: AlgebraSpec
    matrices: np.ndarray = field(repr=False)
    subgroup_level: np.ndarray = field(repr=False)
    cartan_flags: np.ndarray = field(repr=False)

    @property
    def n(self):
        return self.spec.n

    def subgroup_indices(self, m):
        """Indices of the generators spanning the embedded su(m)."""
        if not 2 <= m <= self.n:
            raise ValueError(f"subgroup level must be in 2..{self.n}, got {m}")
        return np.flatnonzero(self.subgroup_level <= m)


@dataclass(frozen=True)
class StructureConstants:
    """Antisymmetric f and symmetric d trace tensors of a generator basis."""

    f: np.ndarray = field(repr=False)
    d: np.ndarray = field(repr=False)


@dataclass(frozen=True)
class Representation:
    """A matrix assigned to each generator index, preserving commutators.

    ``matrices[a]`` is the Hermitian dim x dim image of generator a; the
    homomorphism property [R(Ta), R(Tb)] = i f_abc R(Tc) is checked by
    :func:`homomorphism_residual`.
    """

    kind: str
    dim: int
    matrices: np.ndarray = field(repr=False)

    def __post_init__(self):
        if self.kind not in ("defining", "conjugate", "adjoint", "product"):
            raise ValueError(f"unknown representation kind {self.kind!r}")


def build_generators(n: int) -> GeneratorBasis:
    """Construct the generalized Gell-Mann basis of su(n) in chain order.

    Level m (m = 2..n) contributes, in order: the symmetric and
    antisymmetric off-diagonal pairs coupling rows 1..m-1 to row m, then
    one new diagonal generator.  For n = 3 this reproduces the standard
    Gell-Mann matrices divided by two.

    Parameters
    ----------
    n : int
        Size of the defining representation, n >= 2.

    Returns
    -------
    GeneratorBasis
    """
    if n < 2:
        raise ValueError(f"su(n) needs n >= 2, got n={n}")
    spec = AlgebraSpec(n)
    mats = []
    level = []
    cartan = []
    for m in range(2, n + 1):
        for j in range(m - 1):
            sym = np.zeros((n, n), dtype=complex)
            sym[j, m - 1] = sym[m - 1, j] = 0.5
            asym = np.zeros((n, n), dtype=complex)
            asym[j, m - 1] = -0.5j
            asym[m - 1, j] = 0.5j
            mats += [sym, asym]
            level += [m, m]
            cartan += [False, False]
        diag = np.zeros((n, n), dtype=complex)
        c = 1.0 / np.sqrt(2.0 * m * (m - 1))
        diag[np.arange(m - 1), np.arange(m - 1)] = c
        diag[m - 1, m - 1] = -(m - 1) * c
        mats.append(diag)
        level.append(m)
        cartan.append(True)
    return GeneratorBasis(
        spec=spec,
        matrices=np.array(mats),
        subgroup_level=np.array(level, dtype=int),
        cartan_flags=np.array(cartan, dtype=bool),
    )


def structure_constants(basis: GeneratorBasis) -> StructureConstants:
    """Compute f_abc = -2i Tr([Ta,Tb] Tc) and d_abc = 2 Tr({Ta,Tb} Tc).

    Both tensors are real for a Hermitian orthonormal basis; f is totally
    antisymmetric and d totally symmetric.
    """
    g = basis.matrices
    t3 = np.einsum("aij,bjk,cki->abc", g, g, g, optimize=True)
    f = -2j * (t3 - t3.transpose(1, 0, 2))
    d = 2.0 * (t3 + t3.transpose(1, 0, 2))
    imag = max(np.abs(f.imag).max(), np.abs(d.imag).max())
    if imag > 1e-12:
        raise ValueError(f"structure constants have residual imaginary part {imag:g}")
    return StructureConstants(f=f.real.copy(), d=d.real.copy())


def defining_rep(basis: GeneratorBasis) -> Representation:
    """The defining representation, R(Ta) = Ta."""
    return Representation(kind="defining", dim=basis.n, matrices=basis.matrices.copy())


def conjugate_rep(basis: GeneratorBasis) -> Representation:
    """The conjugate of the defining representation, R(Ta) = -Ta^T."""
    return Representation(
        kind="conjugate", dim=basis.n, matrices=-basis.matrices.transpose(0, 2, 1)
    )


def adjoint_rep(basis: GeneratorBasis, sc: StructureConstants) -> Representation:
    """The adjoint representation, (R(Ta))_bc = -i f_abc, of dimension n**2 - 1."""
    return Representation(
        kind="adjoint",
        dim=basis.spec.num_generators,
        matrices=-1j * sc.f.astype(complex),
    )


def _weight_scale(k):
    # W_k rescales the level-(k+1) Cartan generator so the defining rep
    # has eigenvalues (1/(k+1), ..., 1/(k+1), -k/(k+1)).
    return np.sqrt(2.0 * k / (k + 1.0))


def weight_operators(basis: GeneratorBasis, rep: Representation | None = None):
    """The n - 1 rescaled Cartan generators, in chain order.

    W_1 is the isospin projection; W_2, W_3, ... are the hypercharge-like
    diagonal operators of the higher levels, each scaled to a rational
    spectrum on the defining representation.

    Parameters
    ----------
    basis : GeneratorBasis
    rep : Representation, optional
        Evaluate the weight operators in this representation instead of
        the defining one.

    Returns
    -------
    list of (str, ndarray)
        Pairs of label text ("I3", "Y", "Z", "W[k]") and matrix.
    """
    mats = basis.matrices if rep is None else rep.matrices
    out = []
    for k, idx in enumerate(np.flatnonzero(basis.cartan_flags), start=1):
        out.append((weight_name(k), _weight_scale(k) * mats[idx]))
    return out


def weight_matrix(basis: GeneratorBasis, rep: Representation, k: int) -> np.ndarray:
    """The k-th weight operator (1-based) evaluated in ``rep``."""
    if not 1 <= k <= basis.spec.rank:
        raise ValueError(f"weight index must be in 1..{basis.spec.rank}, got {k}")
    idx = np.flatnonzero(basis.cartan_flags)[k - 1]
    return _weight_scale(k) * rep.matrices[idx]


def weight_name(k: int) -> str:
    names = {1: "I3", 2: "Y", 3: "Z"}
    return names.get(k, f"W[{k}]")


def homomorphism_residual(rep: Representation, sc: StructureConstants) -> float:
    """Max-norm residual of [R(Ta), R(Tb)] - i f_abc R(Tc) over all pairs."""
    r = rep.matrices
    comm = np.einsum("aij,bjk->abik", r, r, optimize=True)
    comm = comm - comm.transpose(1, 0, 2, 3)
    target = 1j * np.einsum("abc,cij->abij", sc.f, r, optimize=True)
    return float(np.abs(comm - target).max())
