"""Casimir operators for su(n) and its chain subgroups, in any representation.

The order-k Casimir of the embedded su(m) is built from partial traces of
powers of the mixing matrix M = sum_a Ta (x) R(Ta), the sum running over
the generator indices of that subgroup.  This keeps the cost polynomial in
the representation dimension for every order, at the price of admixing
lower-order invariants into the higher traces; joint eigenspace structure,
which is what the completeness analysis consumes, is unaffected.  The
order-3 trace carries an exactly removable quadratic admixture, and
removing it makes the cubic eigenvalue odd under conjugation of the
representation.
"""

from dataclasses import dataclass

import numpy as np

from .algebra import GeneratorBasis, Representation

__all__ = ["CasimirKey", "casimir", "casimir_eigenvalue_on_irrep", "casimir_name"]

# Relative cancellation threshold below which a constructed Casimir is the
# zero operator (e.g. the cubic on a self-conjugate representation).
_ZERO_SNAP = 1e-12

_SCALAR_TOL = 1e-8


@dataclass(frozen=True)
class CasimirKey:
    """Which Casimir: subgroup level m (m = n means the full algebra) and order k."""

    subgroup_m: int
    order_k: int

    def __post_init__(self):
        if self.subgroup_m < 2:
            raise ValueError(f"subgroup level must be >= 2, got {self.subgroup_m}")
        if not 2 <= self.order_k <= self.subgroup_m:
            raise ValueError(
                f"order must be in 2..{self.subgroup_m}, got {self.order_k}"
            )

    def validate_for(self, n: int):
        if self.subgroup_m > n:
            raise ValueError(
                f"subgroup level {self.subgroup_m} exceeds algebra size {n}"
            )


_NAMES = {
    (2, 2): "I2",
    (3, 2): "F2",
    (3, 3): "G3",
    (4, 2): "A3",
    (4, 3): "B3",
    (4, 4): "C3",
}


def casimir_name(key: CasimirKey) -> str:
    """Conventional text for a Casimir key; systematic C[m,k] when unnamed."""
    return _NAMES.get((key.subgroup_m, key.order_k), f"C[{key.subgroup_m},{key.order_k}]")


def _mixing_matrix(rep, basis, m):
    idx = basis.subgroup_indices(m)
    n = basis.n
    omega = np.einsum(
        "aij,akl->ikjl", basis.matrices[idx], rep.matrices[idx], optimize=True
    )
    return omega.reshape(n * rep.dim, n * rep.dim)


def _partial_trace(mat, n, dim):
    return mat.reshape(n, dim, n, dim).trace(axis1=0, axis2=2)


def casimir(rep: Representation, basis: GeneratorBasis, key: CasimirKey) -> np.ndarray:
    """The order-k Casimir of the level-m subgroup, evaluated in ``rep``.

    Returns a Hermitian dim x dim matrix commuting with R(Ta) for every
    generator index a of the subgroup.  Order 2 equals sum_a R(Ta)**2 over
    the subgroup indices.
    """
    key.validate_for(basis.n)
    n, dim = basis.n, rep.dim
    omega = _mixing_matrix(rep, basis, key.subgroup_m)
    power = omega @ omega
    quad = 2.0 * _partial_trace(power, n, dim)
    if key.order_k == 2:
        c = quad
    else:
        for _ in range(key.order_k - 2):
            power = power @ omega
        c = 2.0 * _partial_trace(power, n, dim)
        if key.order_k == 3:
            # remove the quadratic admixture: the f-contraction inside the
            # cubic trace equals -(m/4) * quad on the subgroup
            correction = (key.subgroup_m / 4.0) * quad
            scale = np.linalg.norm(c) + np.linalg.norm(correction)
            c = c + correction
            if np.linalg.norm(c) <= _ZERO_SNAP * scale:
                c = np.zeros_like(c)
    return 0.5 * (c + c.conj().T)


def casimir_eigenvalue_on_irrep(
    rep: Representation, basis: GeneratorBasis, key: CasimirKey
) -> float:
    """Scalar value of a full-algebra Casimir on an irreducible representation.

    Raises if the Casimir is not a multiple of the identity on ``rep``,
    which signals a reducible representation (or a too-tight tolerance).
    """
    c = casimir(rep, basis, key)
    value = (np.trace(c) / rep.dim).real
    resid = np.linalg.norm(c - value * np.eye(rep.dim))
    norm = np.linalg.norm(c)
    if resid > _SCALAR_TOL * max(norm, 1e-300) and norm > 0:
        raise ValueError(
            "representation not irreducible or tolerance too tight "
            f"(scalarity residual {resid / norm:g})"
        )
    return float(value)
