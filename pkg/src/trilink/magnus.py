"""Magnus embedding into truncated noncommutative integer power series.

Words map through x_i -> 1 + a_i (and x_i^-1 to the alternating
geometric series) into the ring of integer series in noncommuting
variables a_1..a_rank, truncated above a degree cap.  Monomials are
index tuples; coefficients are exact Python ints because their growth
is binomial in word length and silent overflow would corrupt every
derived invariant.

Two standard facts drive the API: the coefficient of a1*a2 in the image
of a third longitude is Milnor's triple linking number mu-bar(123), and
the lowest degree of a surviving term bounds lower-central-series depth
(Magnus's criterion).
"""

from __future__ import annotations

from .errors import PreconditionError
from .words import FreeWord, exponent_sum

Monomial = tuple[int, ...]

DEFAULT_DEGREE_CAP = 3


class MagnusSeries:
    """Truncated series: map monomial -> nonzero integer coefficient.

    Treat instances as immutable; every operation returns a new series.
    """

    __slots__ = ("rank", "degree_cap", "terms")

    def __init__(self, rank: int, degree_cap: int, terms=None):
        if rank < 1:
            raise ValueError(f"rank must be positive, got {rank}")
        if degree_cap < 1:
            raise ValueError(f"degree cap must be positive, got {degree_cap}")
        self.rank = rank
        self.degree_cap = degree_cap
        clean: dict[Monomial, int] = {}
        for mono, coeff in (terms or {}).items():
            mono = tuple(mono)
            if len(mono) > degree_cap:
                raise ValueError(f"monomial {mono} longer than degree cap {degree_cap}")
            if any(not 1 <= i <= rank for i in mono):
                raise ValueError(f"monomial {mono} uses a variable outside 1..{rank}")
            if coeff:
                clean[mono] = coeff
        self.terms = clean

    def coefficient(self, monomial) -> int:
        mono = tuple(monomial)
        if len(mono) > self.degree_cap:
            raise ValueError(f"monomial of degree {len(mono)} exceeds cap {self.degree_cap}")
        if any(not 1 <= i <= self.rank for i in mono):
            raise ValueError(f"monomial {mono} uses a variable outside 1..{self.rank}")
        return self.terms.get(mono, 0)

    def __mul__(self, other: "MagnusSeries") -> "MagnusSeries":
        return series_mul(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MagnusSeries):
            return NotImplemented
        return (self.rank == other.rank
                and self.degree_cap == other.degree_cap
                and self.terms == other.terms)

    __hash__ = None  # mutable dict inside; equality is by content

    def __repr__(self) -> str:
        return f"MagnusSeries(rank={self.rank}, cap={self.degree_cap}, {self.to_text()!r})"

    def to_text(self) -> str:
        """Canonical text form, monomials in lexicographic order.

        Example: ``1 + 1*a1 a2 - 1*a2 a1``.
        """
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms):
            coeff = self.terms[mono]
            body = " ".join(f"a{i}" for i in mono)
            term = f"{abs(coeff)}*{body}" if body else str(abs(coeff))
            if not parts:
                parts.append(term if coeff > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if coeff > 0 else f"- {term}")
        return " ".join(parts)


def one(rank: int, degree_cap: int) -> MagnusSeries:
    return MagnusSeries(rank, degree_cap, {(): 1})


def series_mul(s1: MagnusSeries, s2: MagnusSeries) -> MagnusSeries:
    """Product in the truncated ring; overflowing monomials are dropped."""
    if s1.rank != s2.rank:
        raise ValueError(f"rank mismatch: {s1.rank} vs {s2.rank}")
    if s1.degree_cap != s2.degree_cap:
        raise ValueError(f"degree cap mismatch: {s1.degree_cap} vs {s2.degree_cap}")
    cap = s1.degree_cap
    out: dict[Monomial, int] = {}
    for m1, c1 in s1.terms.items():
        room = cap - len(m1)
        for m2, c2 in s2.terms.items():
            if len(m2) > room:
                continue
            key = m1 + m2
            out[key] = out.get(key, 0) + c1 * c2
    return MagnusSeries(s1.rank, cap, out)


_letter_cache: dict[tuple[int, int, int, int], MagnusSeries] = {}


def _letter_series(rank: int, index: int, sign: int, cap: int) -> MagnusSeries:
    key = (rank, index, sign, cap)
    cached = _letter_cache.get(key)
    if cached is None:
        if sign == 1:
            terms = {(): 1, (index,): 1}
        else:
            terms = {tuple([index] * k): (-1) ** k for k in range(cap + 1)}
        cached = _letter_cache[key] = MagnusSeries(rank, cap, terms)
    return cached


def phi(w: FreeWord, degree_cap: int = DEFAULT_DEGREE_CAP) -> MagnusSeries:
    """Magnus image of a word.

    Multiplicative by construction, and exact on inverses: the
    truncated ring is a quotient ring, so phi(w) * phi(w^-1) == 1 with
    no error term.
    """
    if degree_cap < 1:
        raise ValueError(f"degree cap must be positive, got {degree_cap}")
    out = one(w.rank, degree_cap)
    for index, sign in w.letters:
        out = series_mul(out, _letter_series(w.rank, index, sign, degree_cap))
    return out


def coefficient(s: MagnusSeries, monomial) -> int:
    return s.coefficient(monomial)


def mu123(lambda3: FreeWord) -> int:
    """Milnor's triple linking number from the third longitude word.

    Requires rank 3 and all exponent sums zero (the pairwise linking
    number zero hypothesis); the value is the a1*a2 coefficient and is
    independent of any degree cap >= 2.
    """
    if lambda3.rank != 3:
        raise ValueError(f"longitude must have rank 3, got {lambda3.rank}")
    for index in (1, 2, 3):
        if exponent_sum(lambda3, index) != 0:
            raise PreconditionError(f"nonzero exponent sum for generator {index}")
    return phi(lambda3, 2).coefficient((1, 2))


def lcs_depth(w: FreeWord, kmax: int) -> int:
    """Largest k <= kmax with no surviving term of degree below k.

    By Magnus's criterion this witnesses membership in the k-th lower
    central subgroup; at finite truncation it cannot distinguish depths
    beyond kmax, so kmax means "at least kmax".
    """
    if kmax < 1:
        raise ValueError(f"kmax must be positive, got {kmax}")
    series = phi(w, kmax)
    degrees = [len(m) for m in series.terms if m]
    if not degrees:
        return kmax
    return min(min(degrees), kmax)
