"""Seifert matrices, metabolizers, and the genus-three generator.

Conventions fixed for the whole package:

* A genus-g Seifert matrix is 2g x 2g over the integers with M - M^T
  equal to the intersection form of its tagged basis ordering:
  "interleaved" (a1, b1, ..., ag, bg) pairs each curve with its dual,
  so the form is a block diagonal of [[0, 1], [-1, 0]]; "blocked"
  (a1..ag, b1..bg) gives [[0, I], [-I, 0]].
* A metabolizer is a primitive rank-g sublattice of the 2g-dimensional
  surface homology on which the Seifert form vanishes identically,
  handed around as g basis columns.
* To a genus-3 matrix and metabolizer belongs the generator
  det(B^T - I) - det(B), where B is the a-row/b-column block of the
  matrix rewritten in a blocked symplectic basis whose b-part spans the
  metabolizer.  Writing that block

      B = [[a, x1, y1], [x2, b, z1], [y2, z2, c]]

  the same number is (a-1)(b-1)(c-1) - abc + x1*x2 + y1*y2 + z1*z2;
  both routes are evaluated and compared on every call.  Differences of
  triple linking numbers across derivative links on a fixed metabolizer
  sweep out (at least) all integer multiples of it.  The magnitude is
  basis-independent; the sign is not, so both are reported.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd
from random import Random

from .errors import CrossCheckError, PreconditionError
from .intlinalg import (
    Matrix,
    bilinear,
    column_lattice_basis,
    det,
    invariant_factors,
    is_unimodular,
    mat_mul,
    solve,
    transpose,
    xgcd,
)

ORDERINGS = ("interleaved", "blocked")

# Hard cap on metabolizer-search genus; the candidate set grows like
# (2*bound+1)**(2*genus) and past genus 3 this is no longer desk scale.
MAX_SEARCH_GENUS = 3
DEFAULT_BOUND_CAP = 2


def intersection_form(genus: int, ordering: str) -> Matrix:
    """The skew form a valid Seifert matrix must have as M - M^T."""
    if ordering not in ORDERINGS:
        raise ValueError(f"unknown ordering {ordering!r}")
    n = 2 * genus
    j = [[0] * n for _ in range(n)]
    for i in range(genus):
        if ordering == "interleaved":
            j[2 * i][2 * i + 1] = 1
            j[2 * i + 1][2 * i] = -1
        else:
            j[i][genus + i] = 1
            j[genus + i][i] = -1
    return j


@dataclass(frozen=True, slots=True)
class SeifertMatrix:
    """Validated 2g x 2g integer matrix with its basis-ordering tag."""

    genus: int
    ordering: str
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.ordering not in ORDERINGS:
            raise ValueError(f"unknown ordering {self.ordering!r}")
        n = 2 * self.genus
        if self.genus < 1 or len(self.entries) != n or any(len(r) != n for r in self.entries):
            raise ValueError(f"expected a {n}x{n} matrix for genus {self.genus}")
        want = intersection_form(self.genus, self.ordering)
        for i in range(n):
            for j in range(n):
                skew = self.entries[i][j] - self.entries[j][i]
                if skew != want[i][j]:
                    raise ValueError(
                        f"skew part fails at entries ({i},{j})/({j},{i}): "
                        f"M[i][j]-M[j][i] = {skew}, intersection form needs {want[i][j]}"
                    )

    @property
    def dim(self) -> int:
        return 2 * self.genus

    def rows(self) -> Matrix:
        return [list(r) for r in self.entries]

    def skew(self) -> Matrix:
        return [[self.entries[i][j] - self.entries[j][i] for j in range(self.dim)]
                for i in range(self.dim)]


def validate(entries, ordering: str) -> SeifertMatrix:
    """Build a SeifertMatrix from raw rows, rejecting invalid input."""
    rows = tuple(tuple(int(x) for x in row) for row in entries)
    if not rows or len(rows) % 2 != 0:
        raise ValueError(f"Seifert matrices have even dimension, got {len(rows)}")
    return SeifertMatrix(len(rows) // 2, ordering, rows)


def _permutation(genus: int, target: str) -> list[int]:
    # position p of the target ordering holds source position perm[p]
    if target == "blocked":
        return [2 * p for p in range(genus)] + [2 * p + 1 for p in range(genus)]
    out = []
    for p in range(genus):
        out.extend([p, genus + p])
    return out


def reorder(m: SeifertMatrix, target_ordering: str) -> SeifertMatrix:
    """Rewrite between the two basis orderings (involutive)."""
    if target_ordering not in ORDERINGS:
        raise ValueError(f"unknown ordering {target_ordering!r}")
    if target_ordering == m.ordering:
        return m
    perm = _permutation(m.genus, target_ordering)
    entries = tuple(
        tuple(m.entries[perm[i]][perm[j]] for j in range(m.dim)) for i in range(m.dim)
    )
    return SeifertMatrix(m.genus, target_ordering, entries)


def form(m: SeifertMatrix, u: list[int], v: list[int]) -> int:
    """The Seifert form u^T M v (linking of u with the + pushoff of v)."""
    return bilinear(list(u), m.rows(), list(v))


def linking_with_pushoff(m: SeifertMatrix, x: list[int], y: list[int], direction: str) -> int:
    """Linking of class x with the pushoff of class y to the given side."""
    if direction == "+":
        return bilinear(list(x), m.rows(), list(y))
    if direction == "-":
        return bilinear(list(x), transpose(m.rows()), list(y))
    raise ValueError(f"direction must be '+' or '-', got {direction!r}")


@dataclass(frozen=True, slots=True)
class MetabolizerBasis:
    """g candidate columns (length 2g each) spanning a sublattice."""

    columns: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.columns:
            raise ValueError("at least one column required")
        length = len(self.columns[0])
        if length == 0 or length % 2 != 0:
            raise ValueError(f"column length must be a positive even number, got {length}")
        if any(len(c) != length for c in self.columns):
            raise ValueError("columns must all have the same length")

    @property
    def count(self) -> int:
        return len(self.columns)

    @property
    def dim(self) -> int:
        return len(self.columns[0])

    def as_matrix(self) -> Matrix:
        """dim x count matrix whose columns are the basis vectors."""
        return transpose([list(c) for c in self.columns])


def standard_metabolizer(m: SeifertMatrix) -> MetabolizerBasis:
    """The b-curve columns of m's ordering (not always a metabolizer)."""
    g = m.genus
    cols = []
    for i in range(g):
        pos = 2 * i + 1 if m.ordering == "interleaved" else g + i
        col = [0] * m.dim
        col[pos] = 1
        cols.append(tuple(col))
    return MetabolizerBasis(tuple(cols))


def is_primitive(v: MetabolizerBasis) -> bool:
    """True iff the columns span a direct summand (all invariant factors 1)."""
    factors = invariant_factors(v.as_matrix())
    if any(f == 0 for f in factors):
        raise ValueError("columns are linearly dependent")
    return all(f == 1 for f in factors)


def is_metabolizer(m: SeifertMatrix, v: MetabolizerBasis) -> bool:
    """True iff the form vanishes on the span and the span is primitive."""
    if v.dim != m.dim:
        raise ValueError(f"column length {v.dim} does not match matrix dimension {m.dim}")
    if v.count != m.genus:
        raise ValueError(f"need exactly {m.genus} columns, got {v.count}")
    rows = m.rows()
    for ci in v.columns:
        for cj in v.columns:
            if bilinear(list(ci), rows, list(cj)) != 0:
                return False
    factors = invariant_factors(v.as_matrix())
    return all(f == 1 for f in factors)


def enumerate_metabolizers(
    m: SeifertMatrix, coeff_bound: int, bound_cap: int = DEFAULT_BOUND_CAP
) -> list[MetabolizerBasis]:
    """All metabolizers spanned by columns with entries in [-bound, bound].

    Results are one basis per lattice (deduplicated by the Hermite
    canonical basis of the column span) in a deterministic order.  The
    search space is (2*bound+1)**(2*genus), so genus is capped at
    MAX_SEARCH_GENUS and the bound at bound_cap; pass a larger
    bound_cap explicitly to go further.
    """
    if coeff_bound < 1:
        raise ValueError(f"coefficient bound must be >= 1, got {coeff_bound}")
    if m.genus > MAX_SEARCH_GENUS:
        raise ValueError(f"genus {m.genus} exceeds the search guard ({MAX_SEARCH_GENUS})")
    if coeff_bound > bound_cap:
        raise ValueError(
            f"coefficient bound {coeff_bound} above cap {bound_cap}; "
            "raise bound_cap explicitly to search further"
        )
    g = m.genus
    rows = m.rows()
    values = range(-coeff_bound, coeff_bound + 1)

    # Sign-normalized isotropic candidates; -v spans the same lattice.
    cands: list[tuple[int, ...]] = []
    for vec in itertools.product(values, repeat=m.dim):
        first = next((x for x in vec if x), None)
        if first is None or first < 0:
            continue
        if bilinear(list(vec), rows, list(vec)) == 0:
            cands.append(vec)

    # adjacency bitmask: both mixed form values vanish
    k = len(cands)
    adj = [0] * k
    for i in range(k):
        ci = list(cands[i])
        for j in range(i + 1, k):
            cj = list(cands[j])
            if bilinear(ci, rows, cj) == 0 and bilinear(cj, rows, ci) == 0:
                adj[i] |= 1 << j
                adj[j] |= 1 << i

    found: dict[tuple, MetabolizerBasis] = {}

    def record(indices: list[int]) -> None:
        cols = [list(cands[i]) for i in indices]
        factors = invariant_factors(transpose(cols))
        if any(f != 1 for f in factors):
            return
        canon = column_lattice_basis(transpose(cols))
        cols_canon = tuple(tuple(c) for c in transpose(canon))
        if cols_canon in found:
            return
        basis = MetabolizerBasis(cols_canon)
        if not is_metabolizer(m, basis):  # canonical basis spans the same lattice
            raise CrossCheckError("canonicalized basis lost the metabolizer property")
        found[cols_canon] = basis

    def grow(stack: list[int], allowed: int) -> None:
        if len(stack) == g:
            record(stack)
            return
        rest = allowed
        while rest:
            low = rest & -rest
            j = low.bit_length() - 1
            rest ^= low
            grow(stack + [j], allowed & adj[j] & ~((1 << (j + 1)) - 1))

    for i in range(k):
        if g == 1:
            record([i])
        else:
            grow([i], adj[i] & ~((1 << (i + 1)) - 1))

    return [found[key] for key in sorted(found)]


def symplectic_complete(
    m: SeifertMatrix, v: MetabolizerBasis, rng: Random | None = None
) -> Matrix:
    """Extend a metabolizer basis to a symplectic basis of the homology.

    Returns a unimodular 2g x 2g matrix T whose first g columns are the
    dual a-curves and whose last g columns are v's columns, satisfying
    T^T (M - M^T) T = [[0, I], [-I, 0]] exactly; the postcondition is
    re-verified on every call.  Passing an rng picks a different (still
    valid) completion, used to confirm downstream outputs don't depend
    on the choice.
    """
    if not is_metabolizer(m, v):
        raise PreconditionError("not a metabolizer; completion refused")
    g = m.genus
    j = m.skew()
    vmat = v.as_matrix()

    # duality: solve (V^T J^T) a_i = e_i over the integers
    s = mat_mul(transpose(vmat), transpose(j))
    a_cols: list[list[int]] = []
    for i in range(g):
        target = [1 if r == i else 0 for r in range(g)]
        sol = solve(s, target)
        if sol is None:
            raise CrossCheckError("dual system unsolvable on a primitive metabolizer")
        a_cols.append(sol)
    a = transpose(a_cols)

    if rng is not None:
        shift = [[rng.randint(-3, 3) for _ in range(g)] for _ in range(g)]
        a = [[a[r][i] + sum(vmat[r][t] * shift[t][i] for t in range(g)) for i in range(g)]
             for r in range(m.dim)]

    # Gram correction: kill the a-a pairings without touching duality
    gram = mat_mul(transpose(a), mat_mul(j, a))
    x = [[-gram[r][c] if r > c else 0 for c in range(g)] for r in range(g)]
    corr = mat_mul(vmat, x)
    a = [[a[r][c] + corr[r][c] for c in range(g)] for r in range(m.dim)]

    t = [a[r] + vmat[r] for r in range(m.dim)]
    check = mat_mul(transpose(t), mat_mul(j, t))
    if check != intersection_form(g, "blocked"):
        raise CrossCheckError("completion failed its symplectic-form postcondition")
    if not is_unimodular(t):
        raise CrossCheckError("completion is not unimodular")
    return t


@dataclass(frozen=True, slots=True)
class GeneratorResult:
    """|n0| plus the sign-sensitive raw value it was computed from.

    The attached set {n * n0 : n integer} is reported as contained in
    the realizable differences; whether it exhausts them is open.
    """

    generator: int
    signed: int

    @property
    def meaning(self) -> str:
        return f"realizable mu-bar(123) differences contain n*{self.generator} for every integer n"


def generator_from_block(block) -> GeneratorResult:
    """Generator of a blocked matrix's a-to-b block B (3x3).

    Evaluates both the nine-parameter polynomial and det(B^T - I) -
    det(B) and insists they agree.
    """
    b = [[int(x) for x in row] for row in block]
    if len(b) != 3 or any(len(row) != 3 for row in b):
        raise ValueError("block must be 3x3")
    (pa, x1, y1), (x2, pb, z1), (y2, z2, pc) = b
    expanded = (pa - 1) * (pb - 1) * (pc - 1) - pa * pb * pc + x1 * x2 + y1 * y2 + z1 * z2
    bt_minus_id = [[b[j][i] - (1 if i == j else 0) for j in range(3)] for i in range(3)]
    via_det = det(bt_minus_id) - det(b)
    if expanded != via_det:
        raise CrossCheckError(
            f"generator formulas disagree: polynomial {expanded}, determinant {via_det}"
        )
    return GeneratorResult(abs(expanded), expanded)


def generator_for_metabolizer(
    m: SeifertMatrix, v: MetabolizerBasis, rng: Random | None = None
) -> GeneratorResult:
    """Generator attached to a genus-3 matrix and one of its metabolizers.

    Completes v to a symplectic basis, rewrites M in it (blocked form by
    construction), and reads the generator off the a-to-b block.  The
    magnitude does not depend on the completion.
    """
    if m.genus != 3:
        raise ValueError(f"genus-3 matrices only, got genus {m.genus}")
    t = symplectic_complete(m, v, rng=rng)
    big = mat_mul(transpose(t), mat_mul(m.rows(), t))
    block = [[big[i][3 + j] for j in range(3)] for i in range(3)]
    return generator_from_block(block)


def connected_sum(m1: SeifertMatrix, m2: SeifertMatrix, m3: SeifertMatrix) -> SeifertMatrix:
    """Block-diagonal genus-3 matrix of three genus-1 summands (interleaved)."""
    for m in (m1, m2, m3):
        if m.genus != 1:
            raise ValueError(f"summands must have genus 1, got genus {m.genus}")
    rows = [[0] * 6 for _ in range(6)]
    for k, m in enumerate((m1, m2, m3)):
        for i in range(2):
            for j in range(2):
                rows[2 * k + i][2 * k + j] = m.entries[i][j]
    return validate(rows, "interleaved")


@dataclass(frozen=True, slots=True)
class GenusOneNormalization:
    """Data moving a genus-1 matrix [[d, e], [e-1, 0]] to its normal form.

    (x, y) spans the new metabolizer column, (z, w) its symplectic dual
    with -x*w + z*y = 1; new_matrix is the Seifert matrix in the basis
    (z*a + w*b, x*a + y*b), of the shape [[*, 1-e], [-e, 0]].
    """

    n: int
    x: int
    y: int
    z: int
    w: int
    new_matrix: SeifertMatrix


def genus_one_normalize(d: int, e: int) -> GenusOneNormalization:
    """Normalize a genus-1 summand [[d, e], [e-1, 0]].

    n = gcd(2e-1, -d) is always defined (2e-1 is odd, so nonzero); the
    Bezout pair is canonicalized by minimal |w| with ties toward w <= 0
    (and minimal |z| in the degenerate y = 0 case).  The three defining
    identities -- (z w) M (x y)^T = 1-e, (x y) M (z w)^T = -e,
    (x y) M (x y)^T = 0 -- are re-verified on every call.
    """
    matrix = [[d, e], [e - 1, 0]]
    n = gcd(2 * e - 1, -d)
    x = (2 * e - 1) // n
    y = -d // n
    # z*y - w*x = 1 has solutions since gcd(x, y) = 1
    g, z0, w0 = xgcd(y, -x)
    if g != 1:
        raise CrossCheckError(f"gcd(x, y) != 1 after dividing out n (got {g})")
    if y == 0:
        # x is +-1 and w is forced; slide z to 0
        z, w = 0, w0
    else:
        base = -(w0 // y)
        best = None
        for tt in (base - 1, base, base + 1):
            wc = w0 + tt * y
            key = (abs(wc), 0 if wc <= 0 else 1)
            if best is None or key < best[0]:
                best = (key, tt, wc)
        _, tbest, w = best
        z = z0 + tbest * x
    if -x * w + z * y != 1:
        raise CrossCheckError("Bezout pair fails -x*w + z*y = 1")

    lhs1 = bilinear([z, w], matrix, [x, y])
    lhs2 = bilinear([x, y], matrix, [z, w])
    lhs3 = bilinear([x, y], matrix, [x, y])
    if (lhs1, lhs2, lhs3) != (1 - e, -e, 0):
        raise CrossCheckError(
            f"normalization identities failed: got {(lhs1, lhs2, lhs3)}, "
            f"expected {(1 - e, -e, 0)}"
        )
    new = validate(
        [[bilinear([z, w], matrix, [z, w]), lhs1], [lhs2, lhs3]], "interleaved"
    )
    return GenusOneNormalization(n, x, y, z, w, new)


def normalize_e(e: int) -> int:
    """The representative of {e, 1-e} with |e| > |e-1|; always >= 1.

    Basis swap on a genus-1 summand replaces the off-diagonal parameter
    e by 1-e, so each summand can be assumed to carry the larger of the
    two magnitudes.
    """
    return e if e >= 1 else 1 - e
