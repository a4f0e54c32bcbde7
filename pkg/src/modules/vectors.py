"""
Super vectors: pairs (even part, odd part) of bivariate polynomials.

Ramond kind: a vector is f(u, s) + t*k(u, s) with u = t^2; the odd part
stores the cofactor k of t. NS kind: a vector is f(t, s) + k(y, x), the
odd part living in its own pair of variables.
"""

from dataclasses import dataclass, field

from src.algebra.poly import Poly2, format_poly, substitute
from src.algebra.scalar import ScalarLike
from src.algebra.superalgebra import Sector
from src.core.exceptions import KindMismatchError

# Display names of (v1, v2) per kind and component
VARIABLE_NAMES: dict[Sector, tuple[tuple[str, str], tuple[str, str]]] = {
    Sector.RAMOND: (("u", "s"), ("u", "s")),
    Sector.NEVEU_SCHWARZ: (("t", "s"), ("y", "x")),
}


@dataclass(frozen=True)
class SuperVector:
    """Immutable element of a Ramond or NS module."""

    kind: Sector
    even: Poly2 = field(default_factory=Poly2.zero)
    odd: Poly2 = field(default_factory=Poly2.zero)

    @classmethod
    def zero(cls, kind: Sector) -> "SuperVector":
        return cls(kind)

    @classmethod
    def one(cls, kind: Sector) -> "SuperVector":
        """The even generator 1."""
        return cls(kind, Poly2.constant(1))

    @classmethod
    def odd_one(cls, kind: Sector) -> "SuperVector":
        """t*1 for Ramond, the odd generator 1 for NS."""
        return cls(kind, Poly2.zero(), Poly2.constant(1))

    @property
    def is_zero(self) -> bool:
        return self.even.is_zero and self.odd.is_zero

    def _check(self, other: "SuperVector") -> None:
        if other.kind is not self.kind:
            raise KindMismatchError(
                f"Cannot combine {self.kind.value} and {other.kind.value} vectors"
            )

    def __add__(self, other: "SuperVector") -> "SuperVector":
        self._check(other)
        return SuperVector(self.kind, self.even + other.even, self.odd + other.odd)

    def __sub__(self, other: "SuperVector") -> "SuperVector":
        self._check(other)
        return SuperVector(self.kind, self.even - other.even, self.odd - other.odd)

    def __neg__(self) -> "SuperVector":
        return SuperVector(self.kind, -self.even, -self.odd)

    def scale(self, c: ScalarLike) -> "SuperVector":
        return SuperVector(self.kind, self.even.scale(c), self.odd.scale(c))

    def parity_swap(self) -> "SuperVector":
        """
        Exchange the even and odd components (the module Π Ω).

        The parity-swapped module carries the same action with the roles
        of the two components exchanged.
        """
        return SuperVector(self.kind, self.odd, self.even)

    def __str__(self) -> str:
        return format_vector(self)


def format_vector(v: SuperVector) -> str:
    """``even: <poly> ; odd: <poly>`` with the kind's variable names."""
    even_names, odd_names = VARIABLE_NAMES[v.kind]
    return f"even: {format_poly(v.even, even_names)} ; odd: {format_poly(v.odd, odd_names)}"


def explicit_t_form(v: SuperVector) -> Poly2:
    """
    A Ramond vector written as one polynomial in (t, s).

    f(u, s) + t*k(u, s) becomes f(t^2, s) + t*k(t^2, s).
    """
    if v.kind is not Sector.RAMOND:
        raise KindMismatchError("explicit_t_form applies to Ramond vectors")
    return substitute(v.even, 1, 2, 1) + Poly2.var1() * substitute(v.odd, 1, 2, 1)


def t_adic_valuation(v: SuperVector) -> int | None:
    """
    Lowest power of t in a Ramond vector; None for the zero vector.

    A vector lies in the filtration piece F_k exactly when its valuation is >= k.
    """
    p = explicit_t_form(v)
    if p.is_zero:
        return None
    return min(e1 for e1, _ in p.terms)
