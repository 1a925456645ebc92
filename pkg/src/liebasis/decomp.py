"""Isotypic decomposition of product representations via Casimir fingerprints.

The joint eigenspaces of the coupled full-algebra Casimirs (orders 2..n)
are exactly the isotypic components of the product; each component's
eigenvalue tuple is its fingerprint, and its dimension is multiplicity
times irrep dimension.  For su(3) the fingerprint is matched back to
highest-weight labels (p, q) through the quadratic Casimir formula
c2(p, q) = (p**2 + q**2 + p*q + 3*p + 3*q) / 3, with the overall scale
calibrated once on the defining representation and the cubic value fixing
the orientation (p, q) vs (q, p).
"""

from dataclasses import dataclass

from .algebra import GeneratorBasis, defining_rep
from .casimir import CasimirKey, casimir, casimir_eigenvalue_on_irrep
from .completeness import DEFAULT_CLUSTER_TOL, joint_eigenspaces
from .labels import OperatorLabel
from .tensor import ProductSpace, coupled_rep

__all__ = [
    "IsotypicComponent",
    "Su3Calibration",
    "calibrate_su3",
    "su3_identify",
    "isotypic_decomposition",
    "multiplicities",
]

DEFAULT_MATCH_TOL = 1e-6
DEFAULT_P_MAX = 8


@dataclass(frozen=True)
class IsotypicComponent:
    fingerprint: tuple
    total_dim: int
    irrep_dim: int | None = None
    multiplicity: int | None = None
    su3_labels: tuple | None = None


@dataclass(frozen=True)
class Su3Calibration:
    """Measured-to-predicted Casimir scale factors, fixed on the defining rep."""

    quad_scale: float
    cubic_scale: float


def _c2_formula(p, q):
    return (p * p + q * q + p * q + 3 * p + 3 * q) / 3.0


def _c3_formula(p, q):
    return (p - q) * (p + 2 * q + 3) * (q + 2 * p + 3) / 18.0


def su3_dim(p: int, q: int) -> int:
    return (p + 1) * (q + 1) * (p + q + 2) // 2


def calibrate_su3(basis: GeneratorBasis) -> Su3Calibration:
    if basis.n != 3:
        raise ValueError("calibration is defined for su(3) only")
    rep = defining_rep(basis)
    c2 = casimir_eigenvalue_on_irrep(rep, basis, CasimirKey(3, 2))
    c3 = casimir_eigenvalue_on_irrep(rep, basis, CasimirKey(3, 3))
    return Su3Calibration(
        quad_scale=c2 / _c2_formula(1, 0),
        cubic_scale=c3 / _c3_formula(1, 0),
    )


def su3_identify(
    fingerprint,
    cal: Su3Calibration,
    p_max: int = DEFAULT_P_MAX,
    tol: float = DEFAULT_MATCH_TOL,
):
    """Match a (quadratic, cubic) fingerprint to su(3) labels (p, q).

    Returns None when nothing matches within ``p_max`` (an unidentified
    component, reported but not fatal).
    """
    c2_meas, c3_meas = fingerprint[0], fingerprint[1]
    best = None
    for p in range(p_max + 1):
        for q in range(p_max + 1 - p):
            if abs(cal.quad_scale * _c2_formula(p, q) - c2_meas) > tol * max(abs(c2_meas), 1.0):
                continue
            if abs(cal.cubic_scale * _c3_formula(p, q) - c3_meas) > tol * max(abs(c3_meas), 1.0):
                continue
            if best is not None and best != (p, q):
                raise ValueError(
                    f"fingerprint {fingerprint} matches both {best} and {(p, q)}"
                )
            best = (p, q)
    return best


def isotypic_decomposition(
    ps: ProductSpace,
    basis: GeneratorBasis,
    cluster_tol: float = DEFAULT_CLUSTER_TOL,
    identify: bool = True,
):
    """Decompose a product space by the coupled full-algebra Casimirs.

    Returns IsotypicComponents sorted by descending dimension, then
    fingerprint.  For su(3) each component also carries (p, q) labels,
    irrep dimension, and multiplicity when identification succeeds.
    """
    n = basis.n
    coup = coupled_rep(ps, basis)
    items = [
        (OperatorLabel("casimir", m=n, k=k), casimir(coup, basis, CasimirKey(n, k)))
        for k in range(2, n + 1)
    ]
    spectrum = joint_eigenspaces(items, cluster_tol=cluster_tol)
    cal = calibrate_su3(basis) if (identify and n == 3) else None
    components = []
    for block in spectrum.blocks:
        fp = block.eigenvalue_tuple
        labels = irrep_dim = mult = None
        if cal is not None:
            labels = su3_identify(fp, cal)
            if labels is not None:
                irrep_dim = su3_dim(*labels)
                if block.dim % irrep_dim == 0:
                    mult = block.dim // irrep_dim
        components.append(
            IsotypicComponent(
                fingerprint=fp,
                total_dim=block.dim,
                irrep_dim=irrep_dim,
                multiplicity=mult,
                su3_labels=labels,
            )
        )
    components.sort(key=lambda c: (-c.total_dim, c.fingerprint))
    return components


def multiplicities(components):
    """(labels, sigma) for identified components; sigma must divide exactly."""
    out = []
    for comp in components:
        if comp.irrep_dim is None:
            raise ValueError(
                f"component with fingerprint {comp.fingerprint} is unidentified; "
                "supply irrep_dim externally"
            )
        if comp.total_dim % comp.irrep_dim != 0:
            raise ValueError(
                "identification inconsistent: "
                f"{comp.total_dim} not divisible by {comp.irrep_dim}"
            )
        out.append((comp.su3_labels, comp.total_dim // comp.irrep_dim))
    return out
