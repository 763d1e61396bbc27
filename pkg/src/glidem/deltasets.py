"""Sign-tagged involution families attached to right ideals.

For an idempotent e, the plus-family of e is the set of involutions whose +1
eigenspace ideal equals col(e); the minus-family uses the -1 eigenspace.
Over Q these families are infinite, so they are kept symbolic as a (sign,
ideal) pair and every predicate reduces to ideal comparisons; over a finite
field they can be materialized exactly.  The two degenerate identifications
(minus of the zero ideal is {1}, minus of the full ideal is {-1}) are
canonicalized to sign +.

The four closure properties these families satisfy, and which characterize
them up to maximality, are implemented as checkable predicates:

  (1) u v w = w u v and the product stays in the family,
  (2) w = (u + v)/2 is the unique member with w v w = u,
  (3) an involution normalizes the family exactly when it commutes with
      some member,
  (4) products of two members are unipotent of index <= 2.

``maximality_check`` verifies, over finite domains, that adjoining any
outside involution breaks one of the four properties and records a witness
tuple for each.  ``fixed_space_of_square`` recovers the ideal from the
family's pairwise products, and ``annihilator_invariance_check`` verifies
that annihilator sets invariant under the involutions commuting with u are
one of {0}, the two eigenspace ideals, or everything.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .idempotents import (
    class_members,
    class_offset_basis,
    iota,
    plus_minus_space,
)
from .matrices import (
    Mat,
    RightIdeal,
    fixed_space,
    joint_kernel,
    solve_rows,
)

__all__ = [
    "DeltaSet",
    "MaximalityResult",
    "PhiSample",
    "all_delta_sets",
    "annihilator_invariance_check",
    "contains",
    "delta_minus",
    "delta_plus",
    "enumerate_delta",
    "fixed_space_of_square",
    "maximality_check",
    "property_a",
    "property_b_solve",
    "property_c_normalizer",
    "property_d_square",
]

PLUS = 1
MINUS = -1


@dataclass(frozen=True)
class DeltaSet:
    """Symbolic involution family: a sign together with a right ideal."""

    sign: int
    ideal: RightIdeal

    @staticmethod
    def make(sign: int, ideal: RightIdeal) -> "DeltaSet":
        """Canonical constructor; folds the two degenerate cases to sign +."""
        if sign not in (PLUS, MINUS):
            raise ValueError("sign must be +1 or -1")
        if sign == MINUS and ideal.is_zero():
            return DeltaSet(PLUS, RightIdeal.full(ideal.domain, ideal.n))
        if sign == MINUS and ideal.is_full():
            return DeltaSet(PLUS, RightIdeal.zero(ideal.domain, ideal.n))
        return DeltaSet(sign, ideal)

    def is_trivial(self) -> bool:
        return self.ideal.is_trivial()

    def __repr__(self) -> str:
        tag = "+" if self.sign == PLUS else "-"
        return f"Delta{tag}{self.ideal!r}"

    def to_json(self) -> dict:
        return {"sign": "+" if self.sign == PLUS else "-", "ideal": self.ideal.to_json()}


def delta_plus(e: Mat) -> DeltaSet:
    if not e.is_idempotent():
        raise ValueError("input must be idempotent")
    return DeltaSet.make(PLUS, e.column_space())


def delta_minus(e: Mat) -> DeltaSet:
    if not e.is_idempotent():
        raise ValueError("input must be idempotent")
    return DeltaSet.make(MINUS, e.column_space())


@dataclass(frozen=True)
class PhiSample:
    """A finite, pairwise distinct family of involutions."""

    members: tuple[Mat, ...]

    def __post_init__(self) -> None:
        if not self.members:
            raise ValueError("family must be nonempty")
        if len(set(self.members)) != len(self.members):
            raise ValueError("members must be pairwise distinct")
        for u in self.members:
            if not u.is_involution():
                raise ValueError("members must be involutions")


def contains(d: DeltaSet, v: Mat) -> bool:
    """Membership by eigenspace ideal, no enumeration involved."""
    plus, minus = plus_minus_space(v)
    side = plus if d.sign == PLUS else minus
    return side == d.ideal


def enumerate_delta(d: DeltaSet) -> Iterator[Mat]:
    """All members over a finite domain, via the idempotent class."""
    e = d.ideal.projection()
    for f in class_members(e):
        u = iota(f)
        yield u if d.sign == PLUS else -u


def _require_member(d: DeltaSet, v: Mat, name: str) -> None:
    if not contains(d, v):
        raise ValueError(f"{name} is not a member of {d!r}")


def property_a(u: Mat, v: Mat, w: Mat, d: DeltaSet) -> bool:
    """u v w equals its reversal w v u, is an involution, and stays in the
    family (members satisfy u v w = u - v + w, which is symmetric under
    reversal)."""
    for name, x in (("u", u), ("v", v), ("w", w)):
        _require_member(d, x, name)
    t = u * v * w
    return t == w * v * u and t.is_involution() and contains(d, t)


def property_b_solve(u: Mat, v: Mat, d: DeltaSet) -> Mat:
    """The unique member w with w v w = u, namely (u + v)/2.

    Postconditions are asserted; over finite domains uniqueness is confirmed
    by scanning the whole family.
    """
    _require_member(d, u, "u")
    _require_member(d, v, "v")
    half = u.domain.halve(u.domain.one)
    w = (u + v).scale(half)
    assert w.is_involution()
    assert contains(d, w)
    assert w * v * w == u
    if u.domain.is_finite:
        sols = [x for x in enumerate_delta(d) if x * v * x == u]
        assert sols == [w], "uniqueness fails in the family"
    return w


def property_c_normalizer(
    u: Mat, d: DeltaSet, symbolic: Optional[bool] = None
) -> tuple[bool, bool]:
    """(normalizes, commutes-with-some-member) for an involution u.

    Finite domains default to literal set comparison; the symbolic route
    conjugates the ideal and solves the commutation constraint inside the
    class parameterization, and works over any domain.
    """
    if not u.is_involution():
        raise ValueError("u must be an involution")
    if symbolic is None:
        symbolic = not u.domain.is_finite
    if not symbolic:
        members = list(enumerate_delta(d))
        left = {u * w for w in members}
        right = {w * u for w in members}
        lhs = left == right
        rhs = any(u * w == w * u for w in members)
        return lhs, rhs

    e = d.ideal.projection()
    conj = (u * e * u).column_space()
    lhs = DeltaSet.make(d.sign, conj) == d

    # members are (sign) * iota(e + x) with x in the offset space, and
    # commutation with u is the affine-linear condition u x - x u = e u - u e
    basis = class_offset_basis(e)
    target = e * u - u * e
    if not basis:
        rhs = target.is_zero()
    else:
        cols = list(
            zip(
                *[
                    [y for row in (u * b - b * u).rows for y in row]
                    for b in basis
                ]
            )
        )
        rhs = solve_rows(cols, [y for row in target.rows for y in row], u.domain) is not None
    return lhs, rhs


def property_d_square(u: Mat, v: Mat, d: DeltaSet) -> bool:
    """(u v - 1)^2 = 0 for members u, v."""
    _require_member(d, u, "u")
    _require_member(d, v, "v")
    t = u * v - Mat.identity(u.domain, u.n)
    return (t * t).is_zero()


def fixed_space_of_square(phi: PhiSample) -> RightIdeal:
    """The ideal fixed by every pairwise product of the family."""
    products = [u * v for u in phi.members for v in phi.members]
    return fixed_space(products)


# ---------------------------------------------------------------------------
# maximality (finite domains)
# ---------------------------------------------------------------------------

def _properties_hold_inside(members: list[Mat], d: DeltaSet, domain, n) -> bool:
    from .matrices import enumerate_involutions

    one = Mat.identity(domain, n)
    member_set = set(members)
    for u, v in itertools.product(members, repeat=2):
        t = u * v - one
        if not (t * t).is_zero():
            return False
        sols = [w for w in members if w * v * w == u]
        if len(sols) != 1:
            return False
    for u, v, w in itertools.product(members, repeat=3):
        t = u * v * w
        if t != w * v * u or t not in member_set:
            return False
    for x in enumerate_involutions(domain, n):
        left = {x * w for w in members}
        right = {w * x for w in members}
        lhs = left == right
        rhs = any(x * w == w * x for w in members)
        if lhs != rhs:
            return False
    return True


def _find_violation(candidate: list[Mat], v_new: Mat, domain, n):
    """First broken property for the enlarged family, with a witness tuple.

    Searches cheap properties first: index-2 products, then triple closure,
    then pair uniqueness, then the normalizer biconditional.
    """
    from .matrices import enumerate_involutions

    one = Mat.identity(domain, n)
    cand_set = set(candidate)
    pairs_with_new = [
        (a, b)
        for a, b in itertools.product(candidate, repeat=2)
        if a == v_new or b == v_new
    ]
    for a, b in pairs_with_new:
        t = a * b - one
        if not (t * t).is_zero():
            return ("square", (a, b))
    for a, b, c in itertools.product(candidate, repeat=3):
        if v_new not in (a, b, c):
            continue
        t = a * b * c
        if t != c * b * a or t not in cand_set:
            return ("triple", (a, b, c))
    for a, b in itertools.product(candidate, repeat=2):
        sols = [w for w in candidate if w * b * w == a]
        if len(sols) != 1:
            return ("midpoint", (a, b))
    for x in enumerate_involutions(domain, n):
        left = {x * w for w in candidate}
        right = {w * x for w in candidate}
        lhs = left == right
        rhs = any(x * w == w * x for w in candidate)
        if lhs != rhs:
            return ("normalizer", (x,))
    return None


@dataclass
class MaximalityResult:
    delta: DeltaSet
    inside_ok: bool
    violations: dict
    missing: tuple[Mat, ...]

    @property
    def holds(self) -> bool:
        return self.inside_ok and not self.missing

    def __bool__(self) -> bool:
        return self.holds


def maximality_check(d: DeltaSet) -> MaximalityResult:
    """The family passes all four properties and admits no proper extension.

    For every involution outside the family, adjoining it must break one of
    the properties on some tuple; the witness is recorded per outsider.
    """
    from .matrices import enumerate_involutions

    domain = d.ideal.domain
    n = d.ideal.n
    if not domain.is_finite:
        raise ValueError("maximality_check needs a finite domain")
    members = list(enumerate_delta(d))
    inside_ok = _properties_hold_inside(members, d, domain, n)
    member_set = set(members)
    violations = {}
    missing = []
    for v in enumerate_involutions(domain, n):
        if v in member_set:
            continue
        hit = _find_violation(members + [v], v, domain, n)
        if hit is None:
            missing.append(v)
        else:
            violations[v] = hit
    return MaximalityResult(d, inside_ok, violations, tuple(missing))


def all_delta_sets(domain, n: int) -> list[DeltaSet]:
    """The distinct families of M_n over a finite domain, canonicalized."""
    from .matrices import enumerate_idempotents

    ideals = []
    seen = set()
    for e in enumerate_idempotents(domain, n):
        ideal = e.column_space()
        if ideal not in seen:
            seen.add(ideal)
            ideals.append(ideal)
    out = []
    out_seen = set()
    for sign in (PLUS, MINUS):
        for ideal in ideals:
            ds = DeltaSet.make(sign, ideal)
            if ds not in out_seen:
                out_seen.add(ds)
                out.append(ds)
    return out


# ---------------------------------------------------------------------------
# invariant annihilator classification (finite domains)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AnnihilatorCheck:
    holds: bool
    hypothesis_holds: bool
    case: Optional[str]


def annihilator_invariance_check(u: Mat, bs: Sequence[Mat]) -> AnnihilatorCheck:
    """Classify A = {x : b x = 0 for all b} when C(u)-involutions preserve it.

    If v A = A for every involution v commuting with u (scanned exhaustively)
    then A must be {0}, one of the two eigenspace ideals of u, or all of N.
    Vacuously true when the invariance hypothesis fails.
    """
    from .matrices import RightIdeal, enumerate_involutions

    if not u.is_involution():
        raise ValueError("u must be an involution")
    domain, n = u.domain, u.n
    if not domain.is_finite:
        raise ValueError("annihilator_invariance_check needs a finite domain")
    if bs:
        a = joint_kernel(list(bs))
    else:
        a = RightIdeal.full(domain, n)
    for v in enumerate_involutions(domain, n):
        if not v.commutes_with(u):
            continue
        image = RightIdeal.from_columns(
            domain, n, [v.apply(col) for col in a.basis]
        )
        if image != a:
            return AnnihilatorCheck(True, False, None)
    plus, minus = plus_minus_space(u)
    if a.is_zero():
        return AnnihilatorCheck(True, True, "zero")
    if a == plus:
        return AnnihilatorCheck(True, True, "plus")
    if a == minus:
        return AnnihilatorCheck(True, True, "minus")
    if a.is_full():
        return AnnihilatorCheck(True, True, "full")
    return AnnihilatorCheck(False, True, None)
