"""Commutativity, joint eigenspaces, and completeness verdicts for operator sets.

A set is complete on a given space exactly when its joint eigenspaces are
all one-dimensional, i.e. the eigenvalue tuples single out every state.
The joint decomposition is computed by iterative refinement: each operator
in turn is compressed onto the current blocks, diagonalized, and its
eigenvalue clusters split the blocks further.
"""

from dataclasses import dataclass, field

import numpy as np

from .labels import OperatorLabel, OperatorSet, count_coupled, count_product, count_single_ir

__all__ = [
    "CommutationReport",
    "SpectralBlock",
    "JointSpectrum",
    "CompletenessReport",
    "check_commuting",
    "matrix_rank",
    "joint_eigenspaces",
    "completeness_report",
]

DEFAULT_COMMUTE_TOL = 1e-9
DEFAULT_CLUSTER_TOL = 1e-6
DEFAULT_SCALAR_TOL = 1e-8

# Spectral ranges below this (relative to the operator's magnitude) are
# rounding noise: the operator acts as a scalar and must not split blocks.
_SCALAR_RANGE_FLOOR = 1e-12


@dataclass(frozen=True)
class CommutationReport:
    """Worst relative commutator residual over all pairs of a set."""

    max_residual: float
    worst_pair: tuple | None
    tol: float

    @property
    def passed(self):
        return self.max_residual < self.tol


@dataclass(frozen=True)
class SpectralBlock:
    eigenvalue_tuple: tuple
    dim: int
    basis: np.ndarray = field(repr=False)


@dataclass(frozen=True)
class JointSpectrum:
    """Joint eigenspace blocks of a commuting family, with one eigenvalue
    per operator per block (the cluster mean) and per-operator spectral
    ranges for tolerance-aware comparison of tuples."""

    labels: tuple
    blocks: tuple
    scales: tuple

    @property
    def max_block_dim(self):
        return max(b.dim for b in self.blocks)

    @property
    def total_dim(self):
        return sum(b.dim for b in self.blocks)

    def block_dims(self):
        return sorted((b.dim for b in self.blocks), reverse=True)


@dataclass(frozen=True)
class CompletenessReport:
    commutation: CommutationReport
    rank: int
    scalar_flags: tuple
    spectrum: JointSpectrum
    max_block_dim: int
    verdict: str
    counts: dict
    with_exchange: bool = False


def _as_items(ops):
    if isinstance(ops, OperatorSet):
        return list(ops.items)
    return [
        (lab if isinstance(lab, OperatorLabel) else lab, np.asarray(mat))
        for lab, mat in ops
    ]


def check_commuting(ops, tol: float = DEFAULT_COMMUTE_TOL) -> CommutationReport:
    """Max over pairs of ||[Oi, Oj]||_F / (||Oi||_F ||Oj||_F), with 0/0 -> 0."""
    items = _as_items(ops)
    if not items:
        raise ValueError("empty operator set")
    norms = [np.linalg.norm(mat) for _, mat in items]
    worst = 0.0
    worst_pair = None
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            num = np.linalg.norm(items[i][1] @ items[j][1] - items[j][1] @ items[i][1])
            den = norms[i] * norms[j]
            r = 0.0 if den == 0.0 else num / den
            if r > worst or worst_pair is None:
                worst = r
                worst_pair = (str(items[i][0]), str(items[j][0]))
    return CommutationReport(max_residual=float(worst), worst_pair=worst_pair, tol=tol)


def matrix_rank(ops, scalar_tol: float = DEFAULT_SCALAR_TOL, rank_tol: float = 1e-8):
    """Rank of the Gram matrix of vectorized operators, plus scalar flags.

    An operator is flagged scalar when it is within ``scalar_tol``
    (relative) of a multiple of the identity; scalar operators are
    linearly dependent as matrices even when abstractly independent.
    """
    items = _as_items(ops)
    if not items:
        raise ValueError("empty operator set")
    mats = [mat for _, mat in items]
    k = len(mats)
    gram = np.empty((k, k))
    for i in range(k):
        for j in range(i, k):
            gram[i, j] = gram[j, i] = np.real(np.trace(mats[i].conj().T @ mats[j]))
    evals = np.linalg.eigvalsh(gram)
    top = evals.max(initial=0.0)
    rank = int(np.sum(evals > rank_tol * top)) if top > 0 else 0
    flags = []
    for mat in mats:
        dim = mat.shape[0]
        mean = np.trace(mat) / dim
        resid = np.linalg.norm(mat - mean * np.eye(dim))
        flags.append(bool(resid <= scalar_tol * max(np.linalg.norm(mat), 1e-300)))
    return rank, flags


def _refine(mats, cluster_tol):
    dim = mats[0].shape[0]
    blocks = [(np.eye(dim, dtype=complex), ())]
    scales = []
    for op in mats:
        herm = 0.5 * (op + op.conj().T)
        w_all = np.linalg.eigvalsh(herm)
        rng = float(w_all[-1] - w_all[0])
        scales.append(rng)
        if rng <= _SCALAR_RANGE_FLOOR * max(abs(w_all[0]), abs(w_all[-1]), 1.0):
            value = float(w_all.mean())
            blocks = [(b, tup + (value,)) for b, tup in blocks]
            continue
        thr = cluster_tol * rng
        refined = []
        for b, tup in blocks:
            compressed = b.conj().T @ herm @ b
            compressed = 0.5 * (compressed + compressed.conj().T)
            w, v = np.linalg.eigh(compressed)
            start = 0
            for stop in range(1, len(w) + 1):
                if stop == len(w) or w[stop] - w[stop - 1] > thr:
                    vecs = b @ v[:, start:stop]
                    if stop - start < len(w):
                        vecs, _ = np.linalg.qr(vecs)
                    refined.append((vecs, tup + (float(w[start:stop].mean()),)))
                    start = stop
        blocks = refined
    return blocks, scales


def joint_eigenspaces(
    ops,
    cluster_tol: float = DEFAULT_CLUSTER_TOL,
    commute_tol: float = DEFAULT_COMMUTE_TOL,
) -> JointSpectrum:
    """Joint eigenspace decomposition of a commuting Hermitian family.

    Refuses non-commuting input (blocks would not be invariant).
    Eigenvalues within ``cluster_tol`` times an operator's spectral range
    belong to one cluster; each cluster splits a block, and the cluster
    mean becomes that operator's entry in the block's eigenvalue tuple.
    """
    items = _as_items(ops)
    report = check_commuting(items, tol=commute_tol)
    if not report.passed:
        raise ValueError(
            f"operators do not commute (residual {report.max_residual:g} "
            f"on pair {report.worst_pair}); joint eigenspaces undefined"
        )
    raw_blocks, scales = _refine([mat for _, mat in items], cluster_tol)
    blocks = tuple(
        SpectralBlock(eigenvalue_tuple=tup, dim=b.shape[1], basis=b)
        for b, tup in raw_blocks
    )
    return JointSpectrum(
        labels=tuple(str(lab) for lab, _ in items),
        blocks=blocks,
        scales=tuple(scales),
    )


def completeness_report(
    opset: OperatorSet,
    extra=None,
    commute_tol: float = DEFAULT_COMMUTE_TOL,
    cluster_tol: float = DEFAULT_CLUSTER_TOL,
    scalar_tol: float = DEFAULT_SCALAR_TOL,
) -> CompletenessReport:
    """Full diagnostic: commutation, rank, joint spectrum, and verdict.

    ``extra`` is an optional appended operator (label, matrix), typically
    the exchange operator; it is rejected with a diagnostic if it fails to
    commute with the declared set.
    """
    items = list(opset.items)
    if extra is not None:
        lab, mat = extra if isinstance(extra, tuple) else (OperatorLabel("exchange"), extra)
        probe = check_commuting(items + [(lab, mat)], tol=commute_tol)
        if not probe.passed:
            raise ValueError(
                f"appended operator {lab} does not commute with the set "
                f"(residual {probe.max_residual:g} on pair {probe.worst_pair})"
            )
        items.append((lab, mat))
    commutation = check_commuting(items, tol=commute_tol)
    rank, flags = matrix_rank(items, scalar_tol=scalar_tol)
    spectrum = joint_eigenspaces(items, cluster_tol=cluster_tol, commute_tol=commute_tol)
    expected = {
        "product": count_product,
        "coupled": count_coupled,
        "single_ir": count_single_ir,
    }[opset.basis_kind](opset.n)
    max_dim = spectrum.max_block_dim
    return CompletenessReport(
        commutation=commutation,
        rank=rank,
        scalar_flags=tuple(flags),
        spectrum=spectrum,
        max_block_dim=max_dim,
        verdict="complete" if max_dim == 1 else "incomplete",
        counts={"expected": expected, "actual": len(opset)},
        with_exchange=extra is not None,
    )
