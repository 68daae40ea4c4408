"""Shared test utilities and independent oracles.

The oracles here deliberately avoid the package's own routines: the
determinant is cofactor expansion (the package uses Bareiss), series
multiplication is a fresh dict convolution (the package caches letter
series), and primitivity is gcd of maximal minors (the package uses
Smith form).
"""

from __future__ import annotations

import itertools
from math import gcd
from random import Random

from trilink.intlinalg import identity
from trilink.words import FreeWord, exponent_sum, generator, word_power, word_product

UNKNOT_ROWS = [
    [0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1],
    [0, 0, 0, 0, 0, 0],
]


def random_word(rng: Random, rank: int, max_len: int) -> FreeWord:
    n = rng.randint(0, max_len)
    letters = tuple((rng.randint(1, rank), rng.choice((1, -1))) for _ in range(n))
    return FreeWord(rank, letters)


def random_commutator_subgroup_word(rng: Random, rank: int = 3, max_len: int = 8) -> FreeWord:
    """Random word with all exponent sums zero (append cancelling tails)."""
    w = random_word(rng, rank, max_len)
    for i in range(1, rank + 1):
        s = exponent_sum(w, i)
        if s:
            w = word_product(w, word_power(generator(rank, i), -s))
    return w


def random_unimodular(rng: Random, n: int, steps: int = 12) -> list[list[int]]:
    """Random +-1 determinant integer matrix from elementary operations."""
    m = identity(n)
    for _ in range(steps):
        i, j = rng.randrange(n), rng.randrange(n)
        op = rng.randrange(3)
        if op == 0 and i != j:
            c = rng.randint(-2, 2)
            m[i] = [x + c * y for x, y in zip(m[i], m[j])]
        elif op == 1 and i != j:
            m[i], m[j] = m[j], m[i]
        else:
            m[i] = [-x for x in m[i]]
    return m


def unimodular_inverse(m: list[list[int]]) -> list[list[int]]:
    """Inverse of a +-1 determinant integer matrix (row HNF of it is I)."""
    from trilink.intlinalg import row_hnf

    h, u = row_hnf(m)
    assert h == identity(len(m)), "matrix is not unimodular"
    return u


def cofactor_det(m: list[list[int]]) -> int:
    """Laplace expansion along the first row (independent of Bareiss)."""
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        if m[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1 :] for row in m[1:]]
        total += (-1) ** j * m[0][j] * cofactor_det(minor)
    return total


def minors_gcd(m: list[list[int]], k: int) -> int:
    """gcd of all k x k minors (0 if all vanish)."""
    rows, cols = len(m), len(m[0])
    g = 0
    for rsel in itertools.combinations(range(rows), k):
        for csel in itertools.combinations(range(cols), k):
            sub = [[m[i][j] for j in csel] for i in rsel]
            g = gcd(g, cofactor_det(sub))
    return g


def brute_force_metabolizer_lattices(m, bound: int) -> set:
    """Exhaustive metabolizer scan with plain arithmetic.

    Filters isotropic nonzero vectors (a V with a non-isotropic column
    fails on a diagonal entry), then checks every g-subset for full form
    vanishing and minor-gcd primitivity.  Lattices are keyed by their
    canonical column basis.
    """
    from trilink.intlinalg import column_lattice_basis

    g = m.genus
    rows = [list(r) for r in m.entries]
    dim = 2 * g

    def pair(u, v):
        return sum(u[i] * rows[i][j] * v[j] for i in range(dim) for j in range(dim))

    vecs = [
        v for v in itertools.product(range(-bound, bound + 1), repeat=dim)
        if any(v) and pair(v, v) == 0
    ]
    keys = set()
    for combo in itertools.combinations(range(len(vecs)), g):
        cols = [list(vecs[i]) for i in combo]
        if any(
            pair(cols[i], cols[j]) != 0
            for i in range(g) for j in range(g) if i != j
        ):
            continue
        mat = [[cols[j][i] for j in range(g)] for i in range(dim)]
        if minors_gcd(mat, g) != 1:
            continue
        keys.add(tuple(tuple(r) for r in column_lattice_basis(mat)))
    return keys


def lattice_keys(bases) -> set:
    from trilink.intlinalg import column_lattice_basis

    return {
        tuple(tuple(r) for r in column_lattice_basis(v.as_matrix())) for v in bases
    }


def series_dict(word: FreeWord, cap: int) -> dict[tuple[int, ...], int]:
    """Independent Magnus expansion: plain dict convolution per letter."""

    def mul(s1, s2):
        out: dict[tuple[int, ...], int] = {}
        for m1, c1 in s1.items():
            for m2, c2 in s2.items():
                if len(m1) + len(m2) <= cap:
                    key = m1 + m2
                    out[key] = out.get(key, 0) + c1 * c2
        return {k: v for k, v in out.items() if v}

    acc = {(): 1}
    for index, sign in word.letters:
        if sign == 1:
            letter = {(): 1, (index,): 1}
        else:
            letter = {tuple([index] * k): (-1) ** k for k in range(cap + 1)}
        acc = mul(acc, letter)
    return acc
