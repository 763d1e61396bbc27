"""Idempotent geometry: the idempotent/involution bijection and right-ideal
equivalence.

The map ``iota(e) = 2e - 1`` identifies idempotents with involutions; its
inverse is ``u -> (1 + u)/2``.  An involution splits the space into its +1
and -1 eigenspace ideals, and two idempotents are equivalent when they
generate the same right ideal, i.e. when their column spaces agree.  The
equivalence class of e is parameterized by f = e + e y (1 - e), which this
module enumerates exactly over finite domains and samples over Q.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .matrices import Mat, RightIdeal, rref_rows
from .scalars import ScalarDomain

__all__ = [
    "class_members",
    "class_offset_basis",
    "corner_basis",
    "involution_rigidity",
    "iota",
    "iota_inv",
    "plus_minus_space",
    "same_right_ideal",
    "sample_class_members",
]


def _require_idempotent(e: Mat) -> None:
    if not e.is_idempotent():
        raise ValueError("input must be idempotent")


def _require_involution(u: Mat) -> None:
    if not u.is_involution():
        raise ValueError("input must be an involution")


def iota(e: Mat) -> Mat:
    """2e - 1, the involution attached to an idempotent."""
    _require_idempotent(e)
    return e + e - Mat.identity(e.domain, e.n)


def iota_inv(u: Mat) -> Mat:
    """(1 + u)/2, the idempotent attached to an involution."""
    _require_involution(u)
    half = u.domain.halve(u.domain.one)
    return (u + Mat.identity(u.domain, u.n)).scale(half)


def plus_minus_space(u: Mat) -> tuple[RightIdeal, RightIdeal]:
    """The +1 and -1 eigenspace ideals of an involution.

    These are the column spaces of (1 + u)/2 and (1 - u)/2; they are
    complementary (ranks sum to n, intersection zero).
    """
    _require_involution(u)
    one = Mat.identity(u.domain, u.n)
    half = u.domain.halve(u.domain.one)
    plus = ((one + u).scale(half)).column_space()
    minus = ((one - u).scale(half)).column_space()
    return plus, minus


def same_right_ideal(e: Mat, f: Mat) -> bool:
    """Whether e and f generate the same right ideal (equal column spaces)."""
    _require_idempotent(e)
    _require_idempotent(f)
    return e.column_space() == f.column_space()


def corner_basis(left: Mat, right: Mat) -> tuple[Mat, ...]:
    """Canonical basis of the corner space  left * N * right."""
    domain, n = left.domain, left.n
    vecs = []
    for i in range(n):
        for j in range(n):
            m = left * Mat.unit(domain, n, i, j) * right
            if not m.is_zero():
                vecs.append([x for row in m.rows for x in row])
    if not vecs:
        return ()
    red, _ = rref_rows(vecs, domain)
    return tuple(
        Mat(domain, [v[i * n : (i + 1) * n] for i in range(n)]) for v in red
    )


def class_offset_basis(e: Mat) -> tuple[Mat, ...]:
    """Canonical basis of e N (1 - e); class members of e are e + x for x here."""
    return corner_basis(e, Mat.identity(e.domain, e.n) - e)


def class_members(e: Mat) -> Iterator[Mat]:
    """All idempotents generating the same right ideal as e, exactly once.

    Finite domains only; members are emitted in lexicographic coefficient
    order over the offset basis.
    """
    _require_idempotent(e)
    domain = e.domain
    if not domain.is_finite:
        raise ValueError("exact class enumeration needs a finite domain")
    basis = class_offset_basis(e)
    if not basis:
        yield e
        return
    import itertools

    for coeffs in itertools.product(range(domain.size), repeat=len(basis)):
        f = e
        for c, b in zip(coeffs, basis):
            if c:
                f = f + b.scale(c)
        yield f


def sample_class_members(e: Mat, rng, count: int) -> list[Mat]:
    """Sampled members f = e + e y (1 - e) for random y (rational mode)."""
    _require_idempotent(e)
    from .matrices import sample_matrix

    domain, n = e.domain, e.n
    one = Mat.identity(domain, n)
    out = []
    for _ in range(count):
        y = sample_matrix(domain, n, rng)
        out.append(e + e * y * (one - e))
    return out


def distinct_class_pair(e: Mat) -> tuple[Mat, Mat]:
    """Two distinct members of the class of a nontrivial idempotent."""
    basis = class_offset_basis(e)
    if not basis:
        raise ValueError("the class of a trivial idempotent is a singleton")
    return e, e + basis[0]


def involution_rigidity(u: Mat, v: Mat) -> bool:
    """Equal eigenspace-ideal pairs force equality of involutions.

    Returns the truth of the implication; expected True always.
    """
    _require_involution(u)
    _require_involution(v)
    if plus_minus_space(u) == plus_minus_space(v):
        return u == v
    return True


def idempotent_of_ideal(ideal: RightIdeal) -> Mat:
    """Canonical class representative (projection) for a right ideal."""
    return ideal.projection()


def members_of_ideal_class(ideal: RightIdeal) -> Iterator[Mat]:
    """Finite enumeration of the idempotent class of an ideal."""
    return class_members(ideal.projection())
