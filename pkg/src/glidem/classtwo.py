"""Class-2 elements (s != 1 with (s-1)^2 = 0) and their witness structure.

A class-2 element is 1 + n for a nonzero square-zero n.  Such an n admits a
frame of orthogonal idempotents (e, g, f) and a partial inverse k with

    n = e n g,   e g = g e = 0,   e = n k,   k n = g,   e + g + f = 1,

from which an involution u = 2e - 1 conjugating s to its inverse and an
element r = 1 + e of the double centralizer of u conjugating s to its square
are read off.  The frame also yields the block shape of the centralizer of s
(zero blocks below the first row, corner tied by g t g = k (e t e) n) and the
two-parameter form z1 + z2 n of its double centralizer.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .matrices import (
    BlockFrame,
    Mat,
    block_decompose,
    kernel_of_rows,
    rank_of_rows,
    sample_nilpotent_square_zero,
    solve_rows,
)

__all__ = [
    "NilpotentFrame",
    "centralizer_form_check",
    "double_centralizer_structure",
    "is_class_two",
    "nilpotent_frame",
    "sample_class_two",
    "witness_u_r",
]


def is_class_two(s: Mat) -> bool:
    """s != 1 and (s - 1)^2 = 0."""
    one = Mat.identity(s.domain, s.n)
    if s == one:
        return False
    d = s - one
    return (d * d).is_zero()


@dataclass(frozen=True)
class NilpotentFrame:
    """Frame (e, g, f, k) attached to a nonzero square-zero element."""

    nil: Mat
    e: Mat
    g: Mat
    f: Mat
    k: Mat

    def validate(self) -> None:
        nil, e, g, f, k = self.nil, self.e, self.g, self.f, self.k
        zero = Mat.zeros(e.domain, e.n)
        one = Mat.identity(e.domain, e.n)
        assert e * nil * g == nil, "n = e n g fails"
        assert e * g == zero and g * e == zero, "e, g not orthogonal"
        assert nil * k == e, "n k = e fails"
        assert k * nil == g, "k n = g fails"
        assert e + g + f == one and f.is_idempotent(), "frame does not close"

    def block_frame(self) -> BlockFrame:
        return BlockFrame(self.e, self.g, self.f)

    def to_json(self) -> dict:
        return {
            "n": self.nil.to_json(),
            "e": self.e.to_json(),
            "g": self.g.to_json(),
            "f": self.f.to_json(),
            "k": self.k.to_json(),
        }


def _greedy_complete(domain, vectors: list, n: int) -> list:
    """Extend a list of independent vectors by coordinate vectors, greedily."""
    out = list(vectors)
    for i in range(n):
        if len(out) == n:
            break
        cand = tuple(domain.one if j == i else domain.zero for j in range(n))
        if rank_of_rows(out + [cand], domain) > len(out):
            out.append(cand)
    return out


def nilpotent_frame(nil: Mat) -> NilpotentFrame:
    """Build the frame (e, g, f, k) for a nonzero n with n^2 = 0.

    Basis choice: U is spanned by the first coordinate vectors independent of
    ker(n); col(n) is spanned by the images n u_i; W completes col(n) inside
    ker(n) from the canonical kernel basis.  In the assembled basis, g, e, f
    are the three block projections and k shifts col(n) back onto U.
    """
    domain, n = nil.domain, nil.n
    if nil.is_zero() or not (nil * nil).is_zero():
        raise ValueError("input must be nonzero with square zero")
    ker = list(nil.kernel_basis())
    r = n - len(ker)  # rank of nil

    # U: first coordinate vectors completing ker(n)
    u_basis = []
    for i in range(n):
        if len(u_basis) == r:
            break
        cand = tuple(domain.one if j == i else domain.zero for j in range(n))
        if rank_of_rows(ker + u_basis + [cand], domain) > len(ker) + len(u_basis):
            u_basis.append(cand)

    col_basis = [nil.apply(v) for v in u_basis]  # basis of col(n)

    # W: completion of col(n) inside ker(n), greedily from the kernel basis
    w_basis: list = []
    for v in ker:
        if len(w_basis) == n - 2 * r:
            break
        if rank_of_rows(col_basis + w_basis + [v], domain) > r + len(w_basis):
            w_basis.append(v)

    cols = u_basis + col_basis + w_basis
    b = Mat.from_columns(domain, cols)
    b_inv = b.inverse()
    zero, one = domain.zero, domain.one

    def proj(start: int, stop: int) -> Mat:
        d = Mat.diag(
            domain, [one if start <= i < stop else zero for i in range(n)]
        )
        return b * d * b_inv

    g = proj(0, r)
    e = proj(r, 2 * r)
    f = proj(2 * r, n)
    k_hat = Mat.zeros(domain, n)
    rows = [list(row) for row in k_hat.rows]
    for i in range(r):
        rows[i][r + i] = one
    k = b * Mat(domain, rows) * b_inv

    frame = NilpotentFrame(nil, e, g, f, k)
    frame.validate()
    return frame


def sample_class_two(domain, n: int, rng, rank: Optional[int] = None) -> Mat:
    """1 + (random square-zero nilpotent)."""
    nil = sample_nilpotent_square_zero(domain, n, rng, rank=rank)
    return Mat.identity(domain, n) + nil


def witness_u_r(s: Mat) -> tuple[Mat, Mat]:
    """The witness pair (u, r) for a class-2 element s = 1 + n.

    u = 2e - 1 satisfies u s u = s^-1; r = 1 + e is invertible with inverse
    1 - e/2, lies in the double centralizer of u, and satisfies
    r s r^-1 = s^2.  All five identities (including s^3 != 1 and membership
    of r in the double centralizer, probed against the full commutant basis
    of u) are verified before returning.
    """
    one = Mat.identity(s.domain, s.n)
    if not is_class_two(s):
        raise ValueError("witness construction needs a class-2 element")
    nil = s - one
    frame = nilpotent_frame(nil)
    e = frame.e
    u = e + e - one
    r = one + e

    assert u.is_involution()
    assert u * s * u == s.inverse()
    r_inv = one - e.scale(s.domain.halve(s.domain.one))
    assert r * r_inv == one
    assert r * s * r_inv == s * s
    assert s * s * s != one

    from .centralizers import commutant_basis

    for b in commutant_basis(u).basis:
        assert r * b == b * r, "r fails to centralize the commutant of u"
    return u, r


def centralizer_form_check(t: Mat, frame: NilpotentFrame) -> bool:
    """Block criterion for membership in the centralizer of s = 1 + n.

    With respect to (e, g, f): the blocks g t e, f t e, g t f vanish and
    g t g = k (e t e) n.  Equivalent to t s = s t; the equivalence is what
    the test suite exercises in both directions.
    """
    frame.validate()
    grid = block_decompose(t, frame.block_frame())
    zero = Mat.zeros(t.domain, t.n)
    if grid[1][0] != zero or grid[2][0] != zero or grid[1][2] != zero:
        return False
    return grid[1][1] == frame.k * grid[0][0] * frame.nil


def lemma_probe_matrices(frame: NilpotentFrame) -> list[Mat]:
    """Centralizer members built from the frame, used as probe elements.

    One of shape x + k x n + f with x = 2e, plus e + g + y + f for y running
    over corner basis elements of f N g and e N f.
    """
    domain, n = frame.e.domain, frame.e.n
    e, g, f, k, nil = frame.e, frame.g, frame.f, frame.k, frame.nil
    two_e = e + e
    probes = [two_e + k * two_e * nil + f]
    core = e + g + f  # the identity, kept in frame terms
    seen = set()
    for i in range(n):
        for j in range(n):
            unit = Mat.unit(domain, n, i, j)
            for y in (f * unit * g, e * unit * f):
                if not y.is_zero() and y not in seen:
                    seen.add(y)
                    probes.append(core + y)
    return probes


def double_centralizer_structure(s: Mat, d: Mat) -> Optional[tuple]:
    """Decompose d as z1 * 1 + z2 * n when d double-centralizes s = 1 + n.

    Membership is decided against a generating probe of the centralizer of s
    (the frame-built probes plus the full commutant basis).  Returns the
    scalar pair (z1, z2), or None when d is not in the double centralizer.
    """
    if not is_class_two(s):
        raise ValueError("structure decomposition needs a class-2 element")
    one = Mat.identity(s.domain, s.n)
    nil = s - one
    frame = nilpotent_frame(nil)

    from .centralizers import commutant_basis

    probes = lemma_probe_matrices(frame) + list(commutant_basis(s).basis)
    for t in probes:
        if d * t != t * d:
            return None

    # Solve d = z1 * 1 + z2 * n entrywise (1 and n are independent).
    domain, n = s.domain, s.n
    cols = []
    rhs = []
    for i in range(n):
        for j in range(n):
            cols.append([one.rows[i][j], nil.rows[i][j]])
            rhs.append(d.rows[i][j])
    sol = solve_rows(cols, rhs, domain)
    if sol is None:
        return None
    z1, z2 = sol
    if one.scale(z1) + nil.scale(z2) != d:
        return None
    return z1, z2
