"""Exact scalar domains.

Two domains are supported: the rationals Q (arbitrary precision, carried by
``fractions.Fraction``) and prime fields F_p for primes p >= 5.  Both domains
have 2 and 3 invertible, which the ring constructions elsewhere in the
package rely on, so moduli 2 and 3 are rejected at construction time.

Scalars are carried by plain Python values in canonical form:

* rationals as ``Fraction`` (lowest terms, positive denominator),
* prime-field elements as ``int`` residues in ``[0, p)``.

Equality of scalars is structural equality of carriers.  There is no
tolerance parameter anywhere in the package; every comparison is exact.
Domain objects are immutable and hashable, safe to share across workers.

JSON form: a scalar serializes to a string ("3", "-1/2", or a residue such
as "4"), a domain to ``{"kind": "Q"}`` or ``{"kind": "Fp", "p": 5}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

__all__ = [
    "GF",
    "PrimeFieldDomain",
    "QQ",
    "RationalDomain",
    "Scalar",
    "ScalarDomain",
    "domain_from_json",
]

Scalar = Union[Fraction, int]


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class RationalDomain:
    """The field Q with arbitrary-precision Fraction carriers."""

    kind = "Q"

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    @property
    def is_finite(self) -> bool:
        return False

    def coerce(self, x) -> Fraction:
        """Coerce an int, Fraction, or "a/b" string to canonical form."""
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, str):
            return Fraction(x)
        raise TypeError(f"cannot coerce {x!r} into Q")

    def reduce(self, x: Fraction) -> Fraction:
        # Fraction arithmetic is already canonical.
        return x

    def add(self, a: Fraction, b: Fraction) -> Fraction:
        return a + b

    def sub(self, a: Fraction, b: Fraction) -> Fraction:
        return a - b

    def mul(self, a: Fraction, b: Fraction) -> Fraction:
        return a * b

    def neg(self, a: Fraction) -> Fraction:
        return -a

    def inv(self, a: Fraction) -> Fraction:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in Q")
        return 1 / Fraction(a)

    def div(self, a: Fraction, b: Fraction) -> Fraction:
        if b == 0:
            raise ZeroDivisionError("division by zero in Q")
        return Fraction(a) / b

    def eq(self, a: Fraction, b: Fraction) -> bool:
        return a == b

    def halve(self, x: Fraction) -> Fraction:
        """The unique y with y + y = x."""
        return Fraction(x) / 2

    def third(self, x: Fraction) -> Fraction:
        """The unique y with 3y = x."""
        return Fraction(x) / 3

    def format(self, x: Fraction) -> str:
        return str(x)

    def parse(self, s: str) -> Fraction:
        return Fraction(s)

    def to_json(self) -> dict:
        return {"kind": "Q"}

    def __repr__(self) -> str:
        return "QQ"


@dataclass(frozen=True)
class PrimeFieldDomain:
    """The prime field F_p, p >= 5, carried by canonical residues in [0, p)."""

    p: int

    kind = "Fp"

    def __post_init__(self) -> None:
        if not _is_prime(self.p):
            raise ValueError(f"modulus {self.p} is not prime")
        if self.p in (2, 3):
            raise ValueError(
                f"modulus {self.p} rejected: 2 and 3 must be invertible"
            )

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    @property
    def is_finite(self) -> bool:
        return True

    @property
    def size(self) -> int:
        return self.p

    def elements(self) -> Iterator[int]:
        return iter(range(self.p))

    def coerce(self, x) -> int:
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, str):
            return int(x) % self.p
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"{x} has no image in F_{self.p}")
            return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
        raise TypeError(f"cannot coerce {x!r} into F_{self.p}")

    def reduce(self, x: int) -> int:
        return x % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError(f"inverse of zero in F_{self.p}")
        return pow(a, self.p - 2, self.p)

    def div(self, a: int, b: int) -> int:
        return (a * self.inv(b)) % self.p

    def eq(self, a: int, b: int) -> bool:
        return (a - b) % self.p == 0

    def halve(self, x: int) -> int:
        """The unique y with y + y = x (2 is invertible since p >= 5)."""
        return (x * self.inv(2)) % self.p

    def third(self, x: int) -> int:
        """The unique y with 3y = x (3 is invertible since p >= 5)."""
        return (x * self.inv(3)) % self.p

    def format(self, x: int) -> str:
        return str(x % self.p)

    def parse(self, s: str) -> int:
        return int(s) % self.p

    def to_json(self) -> dict:
        return {"kind": "Fp", "p": self.p}

    def __repr__(self) -> str:
        return f"GF({self.p})"


ScalarDomain = Union[RationalDomain, PrimeFieldDomain]

QQ = RationalDomain()


def GF(p: int) -> PrimeFieldDomain:
    """Prime field constructor; rejects non-primes and p in {2, 3}."""
    return PrimeFieldDomain(p)


def domain_from_json(obj: dict) -> ScalarDomain:
    kind = obj.get("kind")
    if kind == "Q":
        return QQ
    if kind == "Fp":
        return GF(int(obj["p"]))
    raise ValueError(f"unknown domain tag {obj!r}")
