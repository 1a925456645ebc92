"""Shared cached builders so expensive objects (225-dim sets) are made once."""

from functools import lru_cache

from liebasis import (
    ProductSpace,
    adjoint_rep,
    build_generators,
    conjugate_rep,
    defining_rep,
    enumerate_labels,
    materialize,
    structure_constants,
)


@lru_cache(maxsize=None)
def algebra(n):
    return build_generators(n)


@lru_cache(maxsize=None)
def constants(n):
    return structure_constants(algebra(n))


@lru_cache(maxsize=None)
def rep(n, kind):
    basis = algebra(n)
    if kind == "defining":
        return defining_rep(basis)
    if kind == "conjugate":
        return conjugate_rep(basis)
    return adjoint_rep(basis, constants(n))


@lru_cache(maxsize=None)
def space(n, kind1, kind2):
    return ProductSpace(rep1=rep(n, kind1), rep2=rep(n, kind2))


@lru_cache(maxsize=None)
def opset(n, kind1, kind2, basis_kind):
    return materialize(
        enumerate_labels(n, basis_kind), space(n, kind1, kind2), algebra(n)
    )
