"""Label sets for product and coupled bases, their counts, and materialization.

A complete set for one irreducible representation of SU(n) consists of the
n - 1 full-algebra Casimirs, the n - 1 weight operators, and the Casimirs
of every chain subgroup su(m), m = 2..n-1.  The product basis doubles that
set with factor tags; the coupled basis keeps both factors' full-algebra
Casimirs, couples everything else, and loses (n-1)(n-2)/2 labels in the
process.
"""

from dataclasses import dataclass

import numpy as np

from .algebra import GeneratorBasis, weight_matrix, weight_name
from .casimir import CasimirKey, casimir, casimir_name
from .tensor import ProductSpace, coupled_rep, couple, exchange_operator, lift_first, lift_second

__all__ = [
    "OperatorLabel",
    "OperatorSet",
    "count_single_ir",
    "count_product",
    "count_coupled",
    "count_difference",
    "enumerate_labels",
    "materialize",
]

_HERMITICITY_TOL = 1e-10


@dataclass(frozen=True)
class OperatorLabel:
    """Symbolic identity of a labeling operator.

    kind is "casimir", "weight", or "exchange"; factor is 1 or 2 for
    single-factor lifts and 0 for coupled (or bare single-representation)
    operators.  Casimir labels carry (m, k); weight labels carry idx.
    """

    kind: str
    factor: int = 0
    m: int = 0
    k: int = 0
    idx: int = 0

    def __post_init__(self):
        if self.kind not in ("casimir", "weight", "exchange"):
            raise ValueError(f"unknown label kind {self.kind!r}")
        if self.factor not in (0, 1, 2):
            raise ValueError(f"factor must be 0, 1 or 2, got {self.factor}")

    @property
    def casimir_key(self):
        if self.kind != "casimir":
            raise ValueError(f"label {self.text} has no Casimir key")
        return CasimirKey(self.m, self.k)

    @property
    def text(self) -> str:
        if self.kind == "exchange":
            return "P"
        base = (
            casimir_name(self.casimir_key)
            if self.kind == "casimir"
            else weight_name(self.idx)
        )
        return f"{base}({self.factor})" if self.factor else base

    def __str__(self):
        return self.text


@dataclass(frozen=True)
class OperatorSet:
    """A declared commuting family: labels plus materialized matrices."""

    basis_kind: str
    n: int
    items: tuple  # of (OperatorLabel, ndarray)
    provenance: tuple  # rep kinds of the two factors

    def labels(self):
        return [lab for lab, _ in self.items]

    def matrices(self):
        return [mat for _, mat in self.items]

    def __len__(self):
        return len(self.items)


def count_single_ir(n: int) -> int:
    """Operators labeling one irreducible representation: n(n+1)/2 - 1."""
    _check_n(n)
    return n * (n + 1) // 2 - 1


def count_product(n: int) -> int:
    """Product-basis label count, (n+2)(n-1) = twice the single-IR count."""
    _check_n(n)
    return (n + 2) * (n - 1)


def count_coupled(n: int) -> int:
    """Coupled-basis label count, (n**2 + 5n - 6)/2."""
    _check_n(n)
    return (n * n + 5 * n - 6) // 2


def count_difference(n: int) -> int:
    """Labels lost going from product to coupled basis, (n-1)(n-2)/2."""
    _check_n(n)
    return (n - 1) * (n - 2) // 2


def _check_n(n):
    if n < 2:
        raise ValueError(f"su(n) needs n >= 2, got n={n}")


def _single_ir_parts(n):
    full = [OperatorLabel("casimir", m=n, k=k) for k in range(2, n + 1)]
    sub = [
        OperatorLabel("casimir", m=m, k=k)
        for m in range(n - 1, 1, -1)
        for k in range(2, m + 1)
    ]
    weights = [OperatorLabel("weight", idx=i) for i in range(1, n)]
    return full, sub, weights


def enumerate_labels(n: int, basis_kind: str):
    """The label list for a basis kind; its length matches the closed form.

    single_ir: full-algebra Casimirs, subgroup Casimirs, weights.
    product:   every single_ir label tagged (1) and (2).
    coupled:   both factors' full-algebra Casimirs, plus coupled
               full-algebra Casimirs, coupled subgroup Casimirs, and
               coupled weights.
    """
    _check_n(n)
    full, sub, weights = _single_ir_parts(n)
    if basis_kind == "single_ir":
        return full + sub + weights
    if basis_kind == "product":
        out = []
        for lab in full + sub + weights:
            for fac in (1, 2):
                out.append(
                    OperatorLabel(lab.kind, factor=fac, m=lab.m, k=lab.k, idx=lab.idx)
                )
        return out
    if basis_kind == "coupled":
        out = []
        for lab in full:
            for fac in (1, 2):
                out.append(OperatorLabel("casimir", factor=fac, m=lab.m, k=lab.k))
        return out + full + sub + weights
    raise ValueError(f"unknown basis kind {basis_kind!r}")


def _infer_kind(labels):
    factors = {lab.factor for lab in labels}
    if factors <= {1, 2}:
        return "product"
    if factors == {0}:
        return "single_ir"
    return "coupled"


def materialize_label(label: OperatorLabel, ps: ProductSpace, basis: GeneratorBasis):
    """Bind one label to its matrix on the product space."""
    if label.kind == "exchange":
        return exchange_operator(ps)
    if label.factor == 1:
        if label.kind == "casimir":
            return lift_first(ps, casimir(ps.rep1, basis, label.casimir_key))
        return lift_first(ps, weight_matrix(basis, ps.rep1, label.idx))
    if label.factor == 2:
        if label.kind == "casimir":
            return lift_second(ps, casimir(ps.rep2, basis, label.casimir_key))
        return lift_second(ps, weight_matrix(basis, ps.rep2, label.idx))
    if label.kind == "casimir":
        return casimir(coupled_rep(ps, basis), basis, label.casimir_key)
    return couple(
        ps,
        weight_matrix(basis, ps.rep1, label.idx),
        weight_matrix(basis, ps.rep2, label.idx),
    )


def materialize(labels, ps: ProductSpace, basis: GeneratorBasis, cache=None) -> OperatorSet:
    """Materialize a label list on a product space as an OperatorSet.

    Validates that the item count matches the closed-form count for the
    inferred basis kind and that every matrix is Hermitian.  ``cache``,
    when given, is consulted per label (see liebasis.cache.OperatorCache).
    """
    if len({lab for lab in labels}) != len(labels):
        raise ValueError("duplicate labels in set")
    kind = _infer_kind(labels)
    expected = {
        "product": count_product,
        "coupled": count_coupled,
        "single_ir": count_single_ir,
    }[kind](basis.n)
    if len(labels) != expected:
        raise ValueError(
            f"{kind} set for n={basis.n} must have {expected} labels, got {len(labels)}"
        )
    # reuse the coupled representation across labels; it is the expensive part
    coup = None
    items = []
    for lab in labels:
        mat = None
        if cache is not None:
            mat = cache.load(basis.n, (ps.rep1.kind, ps.rep2.kind), lab, ps.dim)
        if mat is None:
            if lab.factor == 0 and lab.kind == "casimir":
                if coup is None:
                    coup = coupled_rep(ps, basis)
                mat = casimir(coup, basis, lab.casimir_key)
            else:
                mat = materialize_label(lab, ps, basis)
            if cache is not None:
                cache.save(basis.n, (ps.rep1.kind, ps.rep2.kind), lab, mat)
        asym = np.linalg.norm(mat - mat.conj().T)
        norm = np.linalg.norm(mat)
        if norm > 0 and asym > _HERMITICITY_TOL * norm:
            raise ValueError(f"materialized {lab.text} is not Hermitian")
        items.append((lab, mat))
    return OperatorSet(
        basis_kind=kind,
        n=basis.n,
        items=tuple(items),
        provenance=(ps.rep1.kind, ps.rep2.kind),
    )
