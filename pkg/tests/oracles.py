"""Independent oracles used by the test suite.

Everything here is exact integer/rational combinatorics on Dynkin labels:
weight multiplicities via the Freudenthal recursion, irrep dimensions via
the Weyl formula, and tensor-product decompositions via highest-weight
peeling of the product weight multiset.  No matrix machinery from the
package is used, so these results are an independent check on the
numerical decomposition and completeness code.
"""

from fractions import Fraction
from functools import lru_cache


@lru_cache(maxsize=None)
def _gram(n):
    # (omega_i, omega_j) for A_{n-1} with (alpha, alpha) = 2: min(i,j) - ij/n
    r = n - 1
    return tuple(
        tuple(Fraction(min(i, j)) - Fraction(i * j, n) for j in range(1, r + 1))
        for i in range(1, r + 1)
    )


@lru_cache(maxsize=None)
def _cartan_rows(n):
    r = n - 1
    rows = []
    for i in range(r):
        row = [0] * r
        row[i] = 2
        if i > 0:
            row[i - 1] = -1
        if i + 1 < r:
            row[i + 1] = -1
        rows.append(tuple(row))
    return tuple(rows)


@lru_cache(maxsize=None)
def positive_roots(n):
    """All positive roots of su(n) in Dynkin coordinates."""
    rows = _cartan_rows(n)
    r = n - 1
    roots = []
    for i in range(r):
        for j in range(i, r):
            root = [0] * r
            for k in range(i, j + 1):
                for c in range(r):
                    root[c] += rows[k][c]
            roots.append(tuple(root))
    return tuple(roots)


def inner(n, x, y):
    g = _gram(n)
    return sum(g[i][j] * x[i] * y[j] for i in range(n - 1) for j in range(n - 1))


def weyl_dim(n, hw):
    """Irrep dimension from the partition form of the highest weight."""
    lam = [sum(hw[j] for j in range(i, n - 1)) for i in range(n - 1)] + [0]
    dim = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            dim *= Fraction(lam[i] - lam[j] + j - i, j - i)
    assert dim.denominator == 1
    return int(dim)


@lru_cache(maxsize=None)
def weight_system(n, hw):
    """Weight multiplicities of the su(n) irrep with highest weight ``hw``.

    Freudenthal recursion in exact rational arithmetic; the result is a
    dict {weight (Dynkin tuple): multiplicity}.
    """
    rho = tuple([1] * (n - 1))
    hw_norm = inner(n, _add(hw, rho), _add(hw, rho))
    mults = {hw: 1}
    simple = _cartan_rows(n)
    frontier = [hw]
    while frontier:
        candidates = set()
        for w in frontier:
            for root in simple:
                candidates.add(_sub(w, root))
        next_frontier = []
        for mu in sorted(candidates):
            num = Fraction(0)
            for alpha in positive_roots(n):
                j = 1
                while True:
                    above = _add(mu, _scale(j, alpha))
                    if above not in mults:
                        break
                    num += 2 * mults[above] * inner(n, above, alpha)
                    j += 1
            if num == 0:
                continue
            denom = hw_norm - inner(n, _add(mu, rho), _add(mu, rho))
            mult = num / denom
            assert mult.denominator == 1 and mult > 0
            mults[mu] = int(mult)
            next_frontier.append(mu)
        frontier = next_frontier
    assert sum(mults.values()) == weyl_dim(n, hw)
    return mults


def decompose_product(n, hw1, hw2):
    """Decomposition of hw1 (x) hw2 by highest-weight peeling.

    Returns {highest weight: multiplicity}; total dimension is checked.
    """
    w1 = weight_system(n, hw1)
    w2 = weight_system(n, hw2)
    product = {}
    for a, ma in w1.items():
        for b, mb in w2.items():
            s = _add(a, b)
            product[s] = product.get(s, 0) + ma * mb
    rho = tuple([1] * (n - 1))
    result = {}
    while True:
        remaining = [(w, m) for w, m in product.items() if m > 0]
        if not remaining:
            break
        top = max(remaining, key=lambda wm: (inner(n, wm[0], rho), wm[0]))[0]
        assert all(c >= 0 for c in top), f"peeled weight {top} is not dominant"
        sigma = product[top]
        for w, m in weight_system(n, top).items():
            product[w] = product.get(w, 0) - sigma * m
            assert product[w] >= 0
        result[top] = sigma
    assert sum(
        sigma * weyl_dim(n, hw) for hw, sigma in result.items()
    ) == weyl_dim(n, hw1) * weyl_dim(n, hw2)
    return result


def _add(x, y):
    return tuple(a + b for a, b in zip(x, y))


def _sub(x, y):
    return tuple(a - b for a, b in zip(x, y))


def _scale(c, x):
    return tuple(c * a for a in x)


# Dynkin labels for the representations the package materializes.
def defining_hw(n):
    return tuple([1] + [0] * (n - 2))


def conjugate_hw(n):
    return tuple([0] * (n - 2) + [1])


def adjoint_hw(n):
    if n == 2:
        return (2,)
    return tuple([1] + [0] * (n - 3) + [1])
