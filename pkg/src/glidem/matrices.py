"""Dense exact matrices over a scalar domain: the ambient algebra M_n.

Everything here is exact.  A :class:`Mat` is an immutable square matrix with
canonical carrier entries (see :mod:`glidem.scalars`).  The module provides

* ring arithmetic and Gauss-Jordan inversion,
* canonical subspace representations: :class:`RightIdeal` is the reduced
  column echelon basis of a column space, so two matrices generate the same
  right ideal exactly when their column spaces compare equal,
* kernels, joint kernels and fixed spaces of families of matrices,
* block decomposition with respect to a frame of orthogonal idempotents,
* exhaustive enumeration over finite domains (guarded) and seeded sampling
  over Q.

Dimensions of interest are tiny (n <= 4), so all algorithms are the naive
O(n^3) ones; correctness and canonicity, not speed, is the design center.

Vectors are plain tuples of carriers.  Sampling uses numpy's Philox
counter-based generator so that identical seeds give identical output
streams everywhere.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator, Optional, Sequence

import numpy as np

from .scalars import QQ, PrimeFieldDomain, ScalarDomain, domain_from_json

__all__ = [
    "BlockFrame",
    "DimensionMismatchError",
    "EnumerationGuardError",
    "ENUMERATION_GUARD",
    "Mat",
    "NotInvertibleError",
    "RightIdeal",
    "block_decompose",
    "enumerate_idempotents",
    "enumerate_invertibles",
    "enumerate_involutions",
    "enumerate_matrices",
    "enumerate_span",
    "enumerate_square_zero",
    "fixed_space",
    "joint_kernel",
    "make_rng",
    "mats_commute",
    "sample_idempotent",
    "sample_invertible",
    "sample_involution",
    "sample_matrix",
    "sample_nilpotent_square_zero",
    "similarity_to_projection",
]


class DimensionMismatchError(ValueError):
    """Operands live in different matrix algebras."""


class NotInvertibleError(ArithmeticError):
    """Singular input where an invertible element was required."""


class EnumerationGuardError(ValueError):
    """Exhaustive enumeration request exceeds the size guard."""


ENUMERATION_GUARD = 10**8


# ---------------------------------------------------------------------------
# exact elimination on raw rows
# ---------------------------------------------------------------------------

def rref_rows(rows: Sequence[Sequence], domain: ScalarDomain):
    """Reduced row echelon form of a list of rows.

    Returns ``(reduced_nonzero_rows, pivot_columns)``.  The output is the
    canonical form of the row space: equal row spaces give equal output.
    """
    work = [list(r) for r in rows]
    m = len(work)
    w = len(work[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(w):
        pr = None
        for i in range(r, m):
            if work[i][c]:
                pr = i
                break
        if pr is None:
            continue
        work[r], work[pr] = work[pr], work[r]
        inv = domain.inv(work[r][c])
        work[r] = [domain.reduce(x * inv) for x in work[r]]
        for i in range(m):
            if i != r and work[i][c]:
                f = work[i][c]
                row_r = work[r]
                work[i] = [
                    domain.reduce(a - f * b) for a, b in zip(work[i], row_r)
                ]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return work[:r], pivots


def rank_of_rows(rows: Sequence[Sequence], domain: ScalarDomain) -> int:
    return len(rref_rows(rows, domain)[0])


def kernel_of_rows(rows: Sequence[Sequence], width: int, domain: ScalarDomain):
    """Canonical basis of {x : R x = 0} for the rows R (each of length width)."""
    red, pivots = rref_rows(rows, domain)
    pivot_set = set(pivots)
    basis = []
    for free in range(width):
        if free in pivot_set:
            continue
        v = [domain.zero] * width
        v[free] = domain.one
        for i, pc in enumerate(pivots):
            v[pc] = domain.neg(red[i][free])
        basis.append(tuple(v))
    return basis


def solve_rows(rows: Sequence[Sequence], rhs: Sequence, domain: ScalarDomain):
    """One exact solution x of R x = rhs, or None if inconsistent.

    Free variables are set to zero, so the answer is canonical.
    """
    width = len(rows[0]) if rows else len(rhs)
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref_rows(aug, domain)
    for i, row in enumerate(red):
        if i < len(pivots) and pivots[i] == width:
            return None  # pivot in the rhs column
    x = [domain.zero] * width
    for i, pc in enumerate(pivots):
        x[pc] = red[i][width]
    return tuple(x)


# ---------------------------------------------------------------------------
# the matrix algebra
# ---------------------------------------------------------------------------

class Mat:
    """Immutable n x n matrix with entries in a scalar domain."""

    __slots__ = ("domain", "n", "rows")

    def __init__(self, domain: ScalarDomain, rows):
        n = len(rows)
        coerce = domain.coerce
        tup = tuple(tuple(coerce(x) for x in row) for row in rows)
        for row in tup:
            if len(row) != n:
                raise DimensionMismatchError("matrix must be square")
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", tup)

    def __setattr__(self, name, value):
        raise AttributeError("Mat is immutable")

    def __reduce__(self):
        return (Mat, (self.domain, self.rows))

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zeros(domain: ScalarDomain, n: int) -> "Mat":
        z = domain.zero
        return Mat(domain, [[z] * n for _ in range(n)])

    @staticmethod
    def identity(domain: ScalarDomain, n: int) -> "Mat":
        z, o = domain.zero, domain.one
        return Mat(domain, [[o if i == j else z for j in range(n)] for i in range(n)])

    @staticmethod
    def scalar(domain: ScalarDomain, n: int, c) -> "Mat":
        c = domain.coerce(c)
        z = domain.zero
        return Mat(domain, [[c if i == j else z for j in range(n)] for i in range(n)])

    @staticmethod
    def unit(domain: ScalarDomain, n: int, i: int, j: int) -> "Mat":
        """The matrix unit E_ij (indices 0-based)."""
        z, o = domain.zero, domain.one
        return Mat(domain, [[o if (r, c) == (i, j) else z for c in range(n)] for r in range(n)])

    @staticmethod
    def diag(domain: ScalarDomain, entries) -> "Mat":
        n = len(entries)
        z = domain.zero
        return Mat(domain, [[entries[i] if i == j else z for j in range(n)] for i in range(n)])

    @staticmethod
    def from_columns(domain: ScalarDomain, cols) -> "Mat":
        return Mat(domain, [list(r) for r in zip(*cols)])

    # -- ring structure ------------------------------------------------------

    def _check(self, other: "Mat") -> None:
        if self.domain != other.domain:
            raise DimensionMismatchError(
                f"domain mismatch: {self.domain} vs {other.domain}"
            )
        if self.n != other.n:
            raise DimensionMismatchError(f"dim mismatch: {self.n} vs {other.n}")

    def __add__(self, other: "Mat") -> "Mat":
        self._check(other)
        red = self.domain.reduce
        return Mat(
            self.domain,
            [
                [red(a + b) for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ],
        )

    def __sub__(self, other: "Mat") -> "Mat":
        self._check(other)
        red = self.domain.reduce
        return Mat(
            self.domain,
            [
                [red(a - b) for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ],
        )

    def __neg__(self) -> "Mat":
        red = self.domain.reduce
        return Mat(self.domain, [[red(-a) for a in row] for row in self.rows])

    def __mul__(self, other: "Mat") -> "Mat":
        self._check(other)
        red = self.domain.reduce
        cols = tuple(zip(*other.rows))
        return Mat(
            self.domain,
            [
                [red(sum(x * y for x, y in zip(row, col))) for col in cols]
                for row in self.rows
            ],
        )

    def scale(self, c) -> "Mat":
        c = self.domain.coerce(c)
        red = self.domain.reduce
        return Mat(self.domain, [[red(c * a) for a in row] for row in self.rows])

    def __pow__(self, k: int) -> "Mat":
        if k < 0:
            return self.inverse() ** (-k)
        out = Mat.identity(self.domain, self.n)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def apply(self, v: Sequence) -> tuple:
        """Matrix times column vector."""
        red = self.domain.reduce
        return tuple(red(sum(x * y for x, y in zip(row, v))) for row in self.rows)

    def transpose(self) -> "Mat":
        return Mat(self.domain, [list(r) for r in zip(*self.rows)])

    def entrywise(self, fn: Callable) -> "Mat":
        return Mat(self.domain, [[fn(a) for a in row] for row in self.rows])

    # -- comparisons ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Mat)
            and self.domain == other.domain
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.domain, self.rows))

    def sort_key(self):
        """Flattened entries; lexicographic order on this key is total."""
        return tuple(x for row in self.rows for x in row)

    def __repr__(self) -> str:
        body = "; ".join(
            " ".join(self.domain.format(x) for x in row) for row in self.rows
        )
        return f"Mat[{body}]"

    # -- predicates ------------------------------------------------------------

    def is_zero(self) -> bool:
        return all(not x for row in self.rows for x in row)

    def is_identity(self) -> bool:
        return self == Mat.identity(self.domain, self.n)

    def is_idempotent(self) -> bool:
        return self * self == self

    def is_involution(self) -> bool:
        return self * self == Mat.identity(self.domain, self.n)

    def is_central(self) -> bool:
        """Scalar multiple of the identity, checked structurally."""
        d = self.rows[0][0]
        for i in range(self.n):
            for j in range(self.n):
                if i == j:
                    if self.rows[i][j] != d:
                        return False
                elif self.rows[i][j]:
                    return False
        return True

    def is_invertible(self) -> bool:
        return rank_of_rows(self.rows, self.domain) == self.n

    # -- linear algebra ----------------------------------------------------------

    def inverse(self) -> "Mat":
        """Exact Gauss-Jordan inverse; NotInvertibleError on singular input."""
        n, domain = self.n, self.domain
        red = domain.reduce
        work = [list(row) + list(irow) for row, irow in zip(self.rows, Mat.identity(domain, n).rows)]
        for c in range(n):
            pr = None
            for i in range(c, n):
                if work[i][c]:
                    pr = i
                    break
            if pr is None:
                raise NotInvertibleError("matrix is singular")
            work[c], work[pr] = work[pr], work[c]
            inv = domain.inv(work[c][c])
            work[c] = [red(x * inv) for x in work[c]]
            for i in range(n):
                if i != c and work[i][c]:
                    f = work[i][c]
                    row_c = work[c]
                    work[i] = [red(a - f * b) for a, b in zip(work[i], row_c)]
        return Mat(domain, [row[n:] for row in work])

    def rank(self) -> int:
        return rank_of_rows(self.rows, self.domain)

    def kernel_basis(self) -> tuple:
        """Canonical basis of {x : a x = 0} as column vectors."""
        return tuple(kernel_of_rows(self.rows, self.n, self.domain))

    def columns(self) -> tuple:
        return tuple(zip(*self.rows))

    def column_space(self) -> "RightIdeal":
        return RightIdeal.from_columns(self.domain, self.n, self.columns())

    def trace(self):
        red = self.domain.reduce
        return red(sum(self.rows[i][i] for i in range(self.n)))

    def commutes_with(self, other: "Mat") -> bool:
        return self * other == other * self

    # -- JSON --------------------------------------------------------------------

    def to_json(self) -> dict:
        fmt = self.domain.format
        return {
            "domain": self.domain.to_json(),
            "n": self.n,
            "rows": [[fmt(x) for x in row] for row in self.rows],
        }

    @staticmethod
    def from_json(obj: dict) -> "Mat":
        domain = domain_from_json(obj["domain"])
        return Mat(domain, [[domain.parse(x) for x in row] for row in obj["rows"]])


# ---------------------------------------------------------------------------
# right ideals as canonical column spaces
# ---------------------------------------------------------------------------

class RightIdeal:
    """A right ideal eN of M_n, stored as the canonical basis of col(e).

    The basis is the reduced column echelon form of the column span (it is
    computed as the RREF of the spanning vectors viewed as rows).  Equal
    ideals therefore have identical representations and O(1) equality.
    The zero ideal has an empty basis.
    """

    __slots__ = ("domain", "n", "basis")

    def __init__(self, domain: ScalarDomain, n: int, basis):
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "basis", tuple(tuple(v) for v in basis))

    def __setattr__(self, name, value):
        raise AttributeError("RightIdeal is immutable")

    def __reduce__(self):
        return (RightIdeal, (self.domain, self.n, self.basis))

    @staticmethod
    def from_columns(domain: ScalarDomain, n: int, cols) -> "RightIdeal":
        nonzero = [c for c in cols if any(c)]
        if not nonzero:
            return RightIdeal(domain, n, ())
        red, _ = rref_rows(nonzero, domain)
        return RightIdeal(domain, n, red)

    @staticmethod
    def zero(domain: ScalarDomain, n: int) -> "RightIdeal":
        return RightIdeal(domain, n, ())

    @staticmethod
    def full(domain: ScalarDomain, n: int) -> "RightIdeal":
        return Mat.identity(domain, n).column_space()

    @property
    def rank(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return len(self.basis) == self.n

    def is_trivial(self) -> bool:
        return self.is_zero() or self.is_full()

    def contains_vector(self, v: Sequence) -> bool:
        stacked = list(self.basis) + [tuple(v)]
        return rank_of_rows(stacked, self.domain) == self.rank

    def contains(self, other: "RightIdeal") -> bool:
        stacked = list(self.basis) + list(other.basis)
        return rank_of_rows(stacked, self.domain) == self.rank

    def intersection_rank(self, other: "RightIdeal") -> int:
        joined = rank_of_rows(list(self.basis) + list(other.basis), self.domain)
        return self.rank + other.rank - joined

    def projection(self) -> Mat:
        """The canonical idempotent with this column space.

        Completes the echelon basis with coordinate vectors (greedy, in index
        order) and projects onto the ideal along the chosen complement.
        """
        domain, n = self.domain, self.n
        cols = [tuple(v) for v in self.basis]
        for i in range(n):
            if len(cols) == n:
                break
            cand = tuple(
                domain.one if j == i else domain.zero for j in range(n)
            )
            if rank_of_rows(cols + [cand], domain) > len(cols):
                cols.append(cand)
        b = Mat.from_columns(domain, cols)
        r = self.rank
        d = Mat.diag(domain, [domain.one] * r + [domain.zero] * (n - r))
        return b * d * b.inverse()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RightIdeal)
            and self.domain == other.domain
            and self.n == other.n
            and self.basis == other.basis
        )

    def __hash__(self) -> int:
        return hash((self.domain, self.n, self.basis))

    def __repr__(self) -> str:
        if self.is_zero():
            return "RightIdeal<0>"
        vecs = ", ".join(
            "(" + ",".join(self.domain.format(x) for x in v) + ")"
            for v in self.basis
        )
        return f"RightIdeal<{vecs}>"

    def to_json(self) -> dict:
        fmt = self.domain.format
        return {
            "domain": self.domain.to_json(),
            "n": self.n,
            "basis": [[fmt(x) for x in v] for v in self.basis],
        }


def mats_commute(a: Mat, b: Mat) -> bool:
    """a b = b a, entry by entry with no intermediate allocation."""
    red = a.domain.reduce
    ar, br = a.rows, b.rows
    acols = tuple(zip(*ar))
    bcols = tuple(zip(*br))
    n = a.n
    for i in range(n):
        for j in range(n):
            ab = sum(x * y for x, y in zip(ar[i], bcols[j]))
            ba = sum(x * y for x, y in zip(br[i], acols[j]))
            if red(ab - ba):
                return False
    return True


def joint_kernel(mats: Sequence[Mat]) -> RightIdeal:
    """The ideal {x : m x = 0 for every m}, via the stacked kernel."""
    if not mats:
        raise ValueError("need at least one matrix")
    domain, n = mats[0].domain, mats[0].n
    stacked = [row for m in mats for row in m.rows]
    return RightIdeal(domain, n, kernel_of_rows(stacked, n, domain))


def fixed_space(mats: Sequence[Mat]) -> RightIdeal:
    """The ideal {x : m x = x for every m}."""
    if not mats:
        raise ValueError("need at least one matrix")
    one = Mat.identity(mats[0].domain, mats[0].n)
    return joint_kernel([m - one for m in mats])


# ---------------------------------------------------------------------------
# block decomposition over orthogonal idempotents
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BlockFrame:
    """Three pairwise orthogonal idempotents summing to the identity."""

    e: Mat
    g: Mat
    f: Mat

    def __post_init__(self) -> None:
        e, g, f = self.e, self.g, self.f
        zero = Mat.zeros(e.domain, e.n)
        if not (e.is_idempotent() and g.is_idempotent() and f.is_idempotent()):
            raise ValueError("frame members must be idempotent")
        for a, b in ((e, g), (e, f), (g, f)):
            if a * b != zero or b * a != zero:
                raise ValueError("frame members must be pairwise orthogonal")
        if e + g + f != Mat.identity(e.domain, e.n):
            raise ValueError("frame must sum to the identity")


def block_decompose(t: Mat, frame: BlockFrame):
    """The nine components of t with respect to the ordering (e, g, f).

    Returns a 3x3 tuple grid; the sum of all nine entries is t again.
    """
    parts = (frame.e, frame.g, frame.f)
    return tuple(tuple(a * t * b for b in parts) for a in parts)


# ---------------------------------------------------------------------------
# similarity to a symmetric idempotent
# ---------------------------------------------------------------------------

def similarity_to_projection(e: Mat) -> tuple[Mat, Mat]:
    """Invertible u and symmetric idempotent p with p = u e u^-1.

    u^-1 has the column-space basis of e followed by its kernel basis as
    columns, so p comes out as diag(1, ..., 1, 0, ..., 0).
    """
    if not e.is_idempotent():
        raise ValueError("input must be idempotent")
    domain, n = e.domain, e.n
    cols = list(e.column_space().basis) + list(e.kernel_basis())
    b = Mat.from_columns(domain, cols)
    u = b.inverse()
    r = e.rank()
    p = Mat.diag(domain, [domain.one] * r + [domain.zero] * (n - r))
    return u, p


# ---------------------------------------------------------------------------
# exhaustive enumeration (finite domains)
# ---------------------------------------------------------------------------

def check_enumeration_guard(domain: ScalarDomain, n: int) -> None:
    if not domain.is_finite:
        raise EnumerationGuardError("exhaustive enumeration needs a finite domain")
    total = domain.size ** (n * n)
    if total > ENUMERATION_GUARD:
        raise EnumerationGuardError(
            f"p^(n^2) = {total} exceeds the guard {ENUMERATION_GUARD}"
        )


def enumerate_matrices(
    domain: PrimeFieldDomain,
    n: int,
    predicate: Optional[Callable[[Mat], bool]] = None,
) -> Iterator[Mat]:
    """All of M_n(F_p) in lexicographic entry order, optionally filtered.

    Every matrix satisfying the predicate is yielded exactly once.
    """
    check_enumeration_guard(domain, n)
    for flat in itertools.product(range(domain.size), repeat=n * n):
        m = Mat(domain, [flat[i * n : (i + 1) * n] for i in range(n)])
        if predicate is None or predicate(m):
            yield m


def enumerate_invertibles(domain: PrimeFieldDomain, n: int) -> Iterator[Mat]:
    return enumerate_matrices(domain, n, Mat.is_invertible)


def enumerate_idempotents(domain: PrimeFieldDomain, n: int) -> Iterator[Mat]:
    return enumerate_matrices(domain, n, Mat.is_idempotent)


def enumerate_involutions(domain: PrimeFieldDomain, n: int) -> Iterator[Mat]:
    return enumerate_matrices(domain, n, Mat.is_involution)


def enumerate_square_zero(domain: PrimeFieldDomain, n: int) -> Iterator[Mat]:
    """Nonzero n with n^2 = 0."""
    zero = Mat.zeros(domain, n)
    return enumerate_matrices(
        domain, n, lambda m: m != zero and m * m == zero
    )


def enumerate_span(mats: Sequence[Mat]) -> Iterator[Mat]:
    """All linear combinations of the given matrices over a finite domain.

    Emitted in lexicographic coefficient order; exact once if the input is
    linearly independent.
    """
    if not mats:
        return
    domain, n = mats[0].domain, mats[0].n
    if not domain.is_finite:
        raise EnumerationGuardError("span enumeration needs a finite domain")
    for coeffs in itertools.product(range(domain.size), repeat=len(mats)):
        acc = Mat.zeros(domain, n)
        for c, m in zip(coeffs, mats):
            if c:
                acc = acc + m.scale(c)
        yield acc


# ---------------------------------------------------------------------------
# seeded sampling
# ---------------------------------------------------------------------------

#: entries of generic rational samples are drawn from this integer box
SAMPLE_BOX = 3

RNG_NAME = "philox4x64"


def make_rng(seed: int) -> np.random.Generator:
    """Deterministic Philox generator for the given 64-bit seed."""
    return np.random.Generator(np.random.Philox(key=seed))


def sample_matrix(domain: ScalarDomain, n: int, rng, bound: int = SAMPLE_BOX) -> Mat:
    if domain.is_finite:
        flat = rng.integers(0, domain.size, size=n * n)
    else:
        flat = rng.integers(-bound, bound + 1, size=n * n)
    flat = [int(x) for x in flat]
    return Mat(domain, [flat[i * n : (i + 1) * n] for i in range(n)])


def sample_invertible(domain: ScalarDomain, n: int, rng, bound: int = SAMPLE_BOX) -> Mat:
    while True:
        m = sample_matrix(domain, n, rng, bound)
        if m.is_invertible():
            return m


def sample_idempotent(
    domain: ScalarDomain, n: int, rng, rank: Optional[int] = None
) -> Mat:
    """Random idempotent of the requested rank (uniform rank if omitted)."""
    if rank is None:
        rank = int(rng.integers(0, n + 1))
    if not 0 <= rank <= n:
        raise ValueError(f"rank {rank} out of range for n={n}")
    u = sample_invertible(domain, n, rng)
    d = Mat.diag(domain, [domain.one] * rank + [domain.zero] * (n - rank))
    return u * d * u.inverse()


def sample_involution(domain: ScalarDomain, n: int, rng) -> Mat:
    e = sample_idempotent(domain, n, rng)
    return e + e - Mat.identity(domain, n)


def sample_nilpotent_square_zero(
    domain: ScalarDomain, n: int, rng, rank: Optional[int] = None
) -> Mat:
    """Nonzero n0 with n0^2 = 0, built as A B with B A = 0.

    The columns of A are chosen inside ker(B), which makes the square vanish
    structurally rather than by rejection.
    """
    if n < 2:
        raise ValueError("square-zero nonzero elements need n >= 2")
    if rank is None:
        rank = int(rng.integers(1, n // 2 + 1))
    if not 1 <= rank <= n // 2:
        raise ValueError(f"square-zero rank must be in [1, {n // 2}]")
    while True:
        b_rows = [
            [int(x) for x in rng.integers(-SAMPLE_BOX, SAMPLE_BOX + 1, size=n)]
            for _ in range(rank)
        ]
        b_rows = [[domain.coerce(x) for x in row] for row in b_rows]
        if rank_of_rows(b_rows, domain) != rank:
            continue
        ker = kernel_of_rows(b_rows, n, domain)  # dimension n - rank >= rank
        coeffs = rng.integers(-SAMPLE_BOX, SAMPLE_BOX + 1, size=(rank, len(ker)))
        red = domain.reduce
        a_cols = [
            tuple(
                red(sum(int(c) * kv[i] for c, kv in zip(crow, ker)))
                for i in range(n)
            )
            for crow in coeffs
        ]
        rows = [
            [
                red(sum(a_cols[k][i] * b_rows[k][j] for k in range(rank)))
                for j in range(n)
            ]
            for i in range(n)
        ]
        m = Mat(domain, rows)
        if not m.is_zero() and m.rank() == rank:
            return m


SAMPLE_KINDS = {
    "invertible": sample_invertible,
    "involution": sample_involution,
    "nilpotent-square-zero": sample_nilpotent_square_zero,
}


def sample(kind: str, domain: ScalarDomain, n: int, rng, **kw) -> Mat:
    """Dispatch by kind name; idempotents take kind 'idempotent(r)'."""
    if kind.startswith("idempotent"):
        rank = None
        if "(" in kind:
            rank = int(kind[kind.index("(") + 1 : kind.index(")")])
        return sample_idempotent(domain, n, rng, rank=rank)
    if kind not in SAMPLE_KINDS:
        raise ValueError(f"unknown sample kind {kind!r}")
    return SAMPLE_KINDS[kind](domain, n, rng, **kw)
