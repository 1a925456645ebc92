"""Operators on tensor-product spaces: factor lifts, diagonal coupling, exchange.

Kronecker convention: the first factor varies slowest, so
lift_first(diag(a, b)) on a 2 (x) 2 space is diag(a, a, b, b).
"""

from dataclasses import dataclass

import numpy as np

from .algebra import GeneratorBasis, Representation

__all__ = [
    "ProductSpace",
    "lift_first",
    "lift_second",
    "couple",
    "coupled_rep",
    "exchange_operator",
]


@dataclass(frozen=True)
class ProductSpace:
    """Two representations of the same su(n) acting on a product space."""

    rep1: Representation
    rep2: Representation

    def __post_init__(self):
        if len(self.rep1.matrices) != len(self.rep2.matrices):
            raise ValueError(
                "factor representations belong to different algebras: "
                f"{len(self.rep1.matrices)} vs {len(self.rep2.matrices)} generators"
            )

    @property
    def dim(self):
        return self.rep1.dim * self.rep2.dim


def lift_first(ps: ProductSpace, a: np.ndarray) -> np.ndarray:
    """Embed a factor-1 operator as A (x) I."""
    if a.shape != (ps.rep1.dim, ps.rep1.dim):
        raise ValueError(f"operator shape {a.shape} does not match factor 1 dim {ps.rep1.dim}")
    return np.kron(a, np.eye(ps.rep2.dim))


def lift_second(ps: ProductSpace, a: np.ndarray) -> np.ndarray:
    """Embed a factor-2 operator as I (x) A."""
    if a.shape != (ps.rep2.dim, ps.rep2.dim):
        raise ValueError(f"operator shape {a.shape} does not match factor 2 dim {ps.rep2.dim}")
    return np.kron(np.eye(ps.rep1.dim), a)


def couple(ps: ProductSpace, a1: np.ndarray, a2: np.ndarray) -> np.ndarray:
    """The diagonal (summed) action A1 (x) I + I (x) A2."""
    return lift_first(ps, a1) + lift_second(ps, a2)


def coupled_rep(ps: ProductSpace, basis: GeneratorBasis) -> Representation:
    """Generator-wise coupled representation on the product space."""
    mats = np.array(
        [couple(ps, r1, r2) for r1, r2 in zip(ps.rep1.matrices, ps.rep2.matrices)]
    )
    return Representation(kind="product", dim=ps.dim, matrices=mats)


def exchange_operator(ps: ProductSpace) -> np.ndarray:
    """The factor-swap operator P(u (x) v) = v (x) u; defined for identical factors.

    P is a Hermitian permutation matrix with P @ P = I; it commutes with
    every operator coupled symmetrically from identical factor matrices.
    """
    if ps.rep1.kind != ps.rep2.kind or ps.rep1.dim != ps.rep2.dim:
        raise ValueError(
            "exchange undefined for distinct factors "
            f"({ps.rep1.kind}/{ps.rep1.dim} vs {ps.rep2.kind}/{ps.rep2.dim})"
        )
    d = ps.rep1.dim
    p = np.zeros((d * d, d * d))
    rows = np.repeat(np.arange(d), d) * d + np.tile(np.arange(d), d)
    cols = np.tile(np.arange(d), d) * d + np.repeat(np.arange(d), d)
    p[rows, cols] = 1.0
    return p
