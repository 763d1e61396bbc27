"""Transport of idempotent classes along general linear group isomorphisms.

Isomorphisms come from a generator catalog (inner conjugation by an
invertible element, transpose-inverse, entrywise field automorphism) so that
every composite is certifiably a group isomorphism; arbitrary user maps are
not accepted.  Source and target algebras coincide in this version, but the
data model keeps both slots.

A catalog map F induces a bijection theta on idempotents through the sign
convention 1 - 2 theta(e) = F(1 - 2e).  On a nontrivial class, F sends the
plus-family of e either to a plus-family or to a minus-family; which one is
detected by pushing two distinct members through F and comparing eigenspace
ideals ("orientation").  The corrected class map sends [e] to [theta(e)] on
plus-oriented classes and to [theta(1-e)] on minus-oriented ones, fixing the
trivial classes, and is verified to be a bijection with the analogous map of
the inverse isomorphism as two-sided inverse.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

from .idempotents import class_offset_basis, iota, plus_minus_space
from .matrices import Mat, RightIdeal
from .scalars import ScalarDomain

__all__ = [
    "FieldAutomorphism",
    "Inner",
    "IsoSpec",
    "OrientationTable",
    "TheoremDReport",
    "TransposeInverse",
    "apply_iso",
    "check_minus_one",
    "iso_identity",
    "iso_inner",
    "iso_transpose_inverse",
    "orientation",
    "theta",
    "theta_tilde",
    "verify_orientation_propagation",
    "verify_theorem_d",
]

PLUS_ORIENT = "plus"
MINUS_ORIENT = "minus"


@dataclass(frozen=True)
class Inner:
    g: Mat

    def apply(self, u: Mat) -> Mat:
        return self.g * u * self.g.inverse()

    def inverted(self) -> "Inner":
        return Inner(self.g.inverse())

    def describe(self) -> str:
        return "inner"


@dataclass(frozen=True)
class TransposeInverse:
    def apply(self, u: Mat) -> Mat:
        return u.transpose().inverse()

    def inverted(self) -> "TransposeInverse":
        return self

    def describe(self) -> str:
        return "transpose_inverse"


@dataclass(frozen=True)
class FieldAutomorphism:
    """Entrywise Frobenius power; the identity map on both carried domains."""

    power: int = 1

    def apply(self, u: Mat) -> Mat:
        domain = u.domain
        if not domain.is_finite:
            return u
        q = domain.size ** self.power
        return u.entrywise(lambda x: pow(x, q, domain.size))

    def inverted(self) -> "FieldAutomorphism":
        # acts as the identity on prime fields, so it is its own inverse
        return self

    def describe(self) -> str:
        return f"frobenius^{self.power}"


IsoStep = Union[Inner, TransposeInverse, FieldAutomorphism]


@dataclass(frozen=True)
class IsoSpec:
    """A composite of catalog generators, applied left to right."""

    domain: ScalarDomain
    n: int
    steps: tuple[IsoStep, ...] = ()

    def __post_init__(self) -> None:
        for step in self.steps:
            if isinstance(step, Inner):
                if step.g.domain != self.domain or step.g.n != self.n:
                    raise ValueError("inner generator lives in the wrong algebra")
                if not step.g.is_invertible():
                    raise ValueError("inner generator must be invertible")
            elif isinstance(step, FieldAutomorphism):
                if not self.domain.is_finite and step.power != 0:
                    raise ValueError("Q has no nontrivial field automorphism")

    def apply(self, u: Mat) -> Mat:
        if not u.is_invertible():
            raise ValueError("catalog maps act on invertible elements")
        for step in self.steps:
            u = step.apply(u)
        return u

    def inverse(self) -> "IsoSpec":
        return IsoSpec(
            self.domain,
            self.n,
            tuple(step.inverted() for step in reversed(self.steps)),
        )

    def then(self, step: IsoStep) -> "IsoSpec":
        return IsoSpec(self.domain, self.n, self.steps + (step,))

    def describe(self) -> str:
        if not self.steps:
            return "identity"
        return " then ".join(step.describe() for step in self.steps)

    def to_json(self) -> dict:
        def step_json(step):
            if isinstance(step, Inner):
                return {"kind": "inner", "g": step.g.to_json()}
            if isinstance(step, TransposeInverse):
                return {"kind": "transpose_inverse"}
            return {"kind": "field_automorphism", "power": step.power}

        return {
            "domain": self.domain.to_json(),
            "n": self.n,
            "steps": [step_json(s) for s in self.steps],
        }


def iso_identity(domain: ScalarDomain, n: int) -> IsoSpec:
    return IsoSpec(domain, n, ())


def iso_inner(g: Mat) -> IsoSpec:
    return IsoSpec(g.domain, g.n, (Inner(g),))


def iso_transpose_inverse(domain: ScalarDomain, n: int) -> IsoSpec:
    return IsoSpec(domain, n, (TransposeInverse(),))


def apply_iso(f: IsoSpec, u: Mat) -> Mat:
    return f.apply(u)


def check_minus_one(f: IsoSpec) -> bool:
    """F(-1) = -1, evaluated directly."""
    minus_one = -Mat.identity(f.domain, f.n)
    return f.apply(minus_one) == minus_one


def theta(f: IsoSpec, e: Mat) -> Mat:
    """The induced idempotent map, via 1 - 2 theta(e) = F(1 - 2e)."""
    if not e.is_idempotent():
        raise ValueError("theta acts on idempotents")
    one = Mat.identity(e.domain, e.n)
    image = f.apply(one - e - e)
    if not image.is_involution():
        raise ValueError("catalog map failed to send an involution to one")
    half = e.domain.halve(e.domain.one)
    out = (one - image).scale(half)
    assert out.is_idempotent()
    return out


def _distinct_family_members(e: Mat) -> tuple[Mat, Mat]:
    basis = class_offset_basis(e)
    if not basis:
        raise ValueError("orientation needs a nontrivial idempotent")
    return iota(e), iota(e + basis[0])


def orientation(
    f: IsoSpec, e: Mat, members: Optional[tuple[Mat, Mat]] = None
) -> str:
    """Whether F keeps the plus-family of e on the plus side or flips it.

    Pushes two distinct members of the family through F; exactly one of the
    shared-eigenspace alternatives can hold for distinct involutions.  The
    shared ideal is also checked against the theta image it must equal.
    """
    if not e.is_idempotent() or e.column_space().is_trivial():
        raise ValueError("orientation is defined for nontrivial idempotents")
    if members is None:
        u1, u2 = _distinct_family_members(e)
    else:
        u1, u2 = members
        if u1 == u2:
            raise ValueError("orientation needs two distinct members")
    a_plus, a_minus = plus_minus_space(f.apply(u1))
    b_plus, b_minus = plus_minus_space(f.apply(u2))
    plus_shared = a_plus == b_plus
    minus_shared = a_minus == b_minus
    assert plus_shared != minus_shared, "orientation dichotomy violated"
    one = Mat.identity(e.domain, e.n)
    if plus_shared:
        assert a_plus == theta(f, e).column_space()
        return PLUS_ORIENT
    assert a_minus == theta(f, one - e).column_space()
    return MINUS_ORIENT


def theta_tilde(f: IsoSpec, ideal: RightIdeal) -> RightIdeal:
    """The corrected class map on right ideals."""
    if ideal.is_trivial():
        return ideal
    e = ideal.projection()
    one = Mat.identity(e.domain, e.n)
    if orientation(f, e) == PLUS_ORIENT:
        return theta(f, e).column_space()
    return theta(f, one - e).column_space()


@dataclass
class OrientationTable:
    """Orientation of each nontrivial class under a catalog map."""

    iso: str
    table: dict

    def i_o(self) -> list[RightIdeal]:
        return [k for k, v in self.table.items() if v == PLUS_ORIENT]

    def i_obar(self) -> list[RightIdeal]:
        return [k for k, v in self.table.items() if v == MINUS_ORIENT]


@dataclass
class TheoremDReport:
    iso: str
    class_count: int
    bijective: bool
    inverse_composes: bool
    orientations: OrientationTable
    mapping: dict
    minus_one_fixed: bool

    @property
    def ok(self) -> bool:
        return self.bijective and self.inverse_composes and self.minus_one_fixed

    def to_json(self) -> dict:
        return {
            "iso": self.iso,
            "classes": self.class_count,
            "bijective": self.bijective,
            "inverse_composes": self.inverse_composes,
            "minus_one_fixed": self.minus_one_fixed,
            "partition": {
                "I_o": len(self.orientations.i_o()),
                "I_obar": len(self.orientations.i_obar()),
            },
            "mapping": [
                {"from": src.to_json(), "to": dst.to_json()}
                for src, dst in self.mapping.items()
            ],
        }


def all_ideal_classes(domain, n: int) -> list[RightIdeal]:
    """Every right-ideal class of M_n over a finite domain."""
    from .matrices import enumerate_idempotents

    seen = []
    seen_set = set()
    for e in enumerate_idempotents(domain, n):
        ideal = e.column_space()
        if ideal not in seen_set:
            seen_set.add(ideal)
            seen.append(ideal)
    return seen


def verify_theorem_d(f: IsoSpec) -> TheoremDReport:
    """Exhaustively verify the corrected class map over a finite domain.

    Builds the map on every class, checks bijectivity, checks that the map
    built from the inverse isomorphism composes to the identity both ways,
    and emits the orientation partition.
    """
    domain, n = f.domain, f.n
    classes = all_ideal_classes(domain, n)
    minus_one_fixed = check_minus_one(f)
    f_inv = f.inverse()

    mapping = {}
    table = {}
    for ideal in classes:
        image = theta_tilde(f, ideal)
        mapping[ideal] = image
        if not ideal.is_trivial():
            table[ideal] = orientation(f, ideal.projection())

    images = set(mapping.values())
    bijective = len(images) == len(classes) and images == set(classes)

    composes = True
    for ideal in classes:
        if theta_tilde(f_inv, mapping[ideal]) != ideal:
            composes = False
        if theta_tilde(f, theta_tilde(f_inv, ideal)) != ideal:
            composes = False

    return TheoremDReport(
        iso=f.describe(),
        class_count=len(classes),
        bijective=bijective,
        inverse_composes=composes,
        orientations=OrientationTable(f.describe(), table),
        mapping=mapping,
        minus_one_fixed=minus_one_fixed,
    )


def verify_orientation_propagation(f: IsoSpec, e: Mat) -> bool:
    """Orientation coherence for a nontrivial idempotent and its theta image.

    Checks that the family of e meets the opposite-sign family of 1 - e only
    in 2e - 1, that plus orientation of e forces plus orientation of
    theta(e) under the inverse map, and that minus orientation of e forces
    minus orientation of 1 - e (under F) and of the theta images and their
    complements (under the inverse).
    """
    from .deltasets import DeltaSet, MINUS, contains

    one = Mat.identity(e.domain, e.n)
    if e.column_space().is_trivial():
        raise ValueError("needs a nontrivial idempotent")

    # intersection pinch: only iota(e) lies in both families
    minus_family = DeltaSet.make(MINUS, (one - e).column_space())
    u0 = iota(e)
    if not contains(minus_family, u0):
        return False
    if e.domain.is_finite:
        from .deltasets import enumerate_delta, delta_plus

        both = [
            v for v in enumerate_delta(delta_plus(e)) if contains(minus_family, v)
        ]
        if both != [u0]:
            return False
    else:
        probes = [u0] + [
            iota(e + b) for b in class_offset_basis(e)[:4]
        ]
        for v in probes:
            if contains(minus_family, v) != (v == u0):
                return False

    f_inv = f.inverse()
    ftheta = theta(f, e)
    if orientation(f, e) == PLUS_ORIENT:
        return orientation(f_inv, ftheta) == PLUS_ORIENT
    return (
        orientation(f, one - e) == MINUS_ORIENT
        and orientation(f_inv, ftheta) == MINUS_ORIENT
        and orientation(f_inv, one - ftheta) == MINUS_ORIENT
    )
