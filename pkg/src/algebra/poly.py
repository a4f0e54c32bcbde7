"""
Sparse bivariate polynomials over Q(sqrt2) and the h-family.

A ``Poly2`` is a map ``(e1, e2) -> coefficient`` with no zero
coefficients stored. The first variable plays the role of u (Ramond), t
(NS even) or y (NS odd); the second is s or x. A univariate polynomial
(``Poly1``) is a ``Poly2`` with every e2 = 0.

The h-family attached to a univariate h and a scalar alpha is

    h_m(t) = m*h(t) - m(m-1)*alpha * (h(t) - h(alpha)) / (t - alpha)

computed through the closed form of the divided difference, so no
polynomial division is ever performed.
"""

from collections.abc import Iterator, Mapping
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from types import MappingProxyType
from typing import Union

from src.algebra.scalar import ONE, ZERO, Scalar, ScalarLike, as_scalar, int_pow

Exponent = tuple[int, int]
PolyLike = Union["Poly2", Scalar, int, Fraction]


class Poly2:
    """Immutable sparse polynomial in two variables over Q(sqrt2)."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, ScalarLike] | None = None) -> None:
        clean: dict[Exponent, Scalar] = {}
        for (e1, e2), c in (terms or {}).items():
            if e1 < 0 or e2 < 0:
                raise ValueError(f"Negative exponent ({e1}, {e2})")
            s = as_scalar(c)
            if not s.is_zero:
                clean[(e1, e2)] = s
        self._terms = clean
        self._hash: int | None = None

    @classmethod
    def _wrap(cls, terms: dict[Exponent, Scalar]) -> "Poly2":
        # Caller guarantees no zero coefficients
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    # ===== Constructors =====

    @classmethod
    def zero(cls) -> "Poly2":
        return cls._wrap({})

    @classmethod
    def constant(cls, c: ScalarLike) -> "Poly2":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, e1: int, e2: int, c: ScalarLike = 1) -> "Poly2":
        return cls({(e1, e2): c})

    @classmethod
    def var1(cls) -> "Poly2":
        return cls._wrap({(1, 0): ONE})

    @classmethod
    def var2(cls) -> "Poly2":
        return cls._wrap({(0, 1): ONE})

    # ===== Inspection =====

    @property
    def terms(self) -> Mapping[Exponent, Scalar]:
        return MappingProxyType(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_univariate(self) -> bool:
        """True when the second variable does not occur."""
        return all(e2 == 0 for _, e2 in self._terms)

    def degree_v1(self) -> int:
        """Degree in the first variable; -1 for the zero polynomial."""
        return max((e1 for e1, _ in self._terms), default=-1)

    def degree_v2(self) -> int:
        return max((e2 for _, e2 in self._terms), default=-1)

    def coefficient(self, e1: int, e2: int = 0) -> Scalar:
        return self._terms.get((e1, e2), ZERO)

    def sorted_terms(self) -> list[tuple[Exponent, Scalar]]:
        """Terms in graded-lex order, highest first."""
        return sorted(
            self._terms.items(),
            key=lambda item: (item[0][0] + item[0][1], item[0][0]),
            reverse=True,
        )

    def __iter__(self) -> Iterator[tuple[Exponent, Scalar]]:
        return iter(self.sorted_terms())

    def __len__(self) -> int:
        return len(self._terms)

    # ===== Arithmetic =====

    def __add__(self, other: PolyLike) -> "Poly2":
        o = as_poly(other)
        out = dict(self._terms)
        for exp, c in o._terms.items():
            total = out.get(exp, ZERO) + c
            if total.is_zero:
                out.pop(exp, None)
            else:
                out[exp] = total
        return Poly2._wrap(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly2":
        return Poly2._wrap({exp: -c for exp, c in self._terms.items()})

    def __sub__(self, other: PolyLike) -> "Poly2":
        return self + (-as_poly(other))

    def __rsub__(self, other: PolyLike) -> "Poly2":
        return as_poly(other) - self

    def __mul__(self, other: PolyLike) -> "Poly2":
        if isinstance(other, Scalar | int | Fraction):
            return self.scale(other)
        out: dict[Exponent, Scalar] = {}
        for (a1, a2), c in self._terms.items():
            for (b1, b2), d in other._terms.items():
                exp = (a1 + b1, a2 + b2)
                out[exp] = out.get(exp, ZERO) + c * d
        return Poly2._wrap({exp: c for exp, c in out.items() if not c.is_zero})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly2":
        if n < 0:
            raise ValueError("Polynomial powers must be non-negative")
        result = Poly2.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c: ScalarLike) -> "Poly2":
        s = as_scalar(c)
        if s.is_zero:
            return Poly2.zero()
        return Poly2._wrap({exp: s * v for exp, v in self._terms.items()})

    # ===== Calculus / substitution =====

    def shift_v2(self, m: ScalarLike) -> "Poly2":
        """p(v1, v2 - m)."""
        return shift_v2(self, m)

    def d_dv1(self) -> "Poly2":
        return d_dv1(self)

    def substitute(self, c1: ScalarLike, e: int, c2: ScalarLike) -> "Poly2":
        """p(c1 * v1**e, c2 * v2)."""
        return substitute(self, c1, e, c2)

    def evaluate_v1(self, value: ScalarLike) -> "Poly2":
        """Set v1 = value; the result only involves v2."""
        x = as_scalar(value)
        out: dict[Exponent, Scalar] = {}
        for (e1, e2), c in self._terms.items():
            out[(0, e2)] = out.get((0, e2), ZERO) + c * int_pow(x, e1)
        return Poly2({exp: c for exp, c in out.items()})

    def constant_term(self) -> Scalar:
        return self.coefficient(0, 0)

    # ===== Comparison =====

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly2):
            return self._terms == other._terms
        if isinstance(other, Scalar | int | Fraction):
            return self == Poly2.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        return f"Poly2({format_poly(self)})"

    def __str__(self) -> str:
        return format_poly(self)


Poly1 = Poly2


def as_poly(value: PolyLike) -> Poly2:
    if isinstance(value, Poly2):
        return value
    return Poly2.constant(value)


def poly_arith(p: PolyLike, q: PolyLike, op: str) -> Poly2:
    """Apply + - or * to two polynomials."""
    a, b = as_poly(p), as_poly(q)
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op == "*":
        return a * b
    raise ValueError(f"Unknown polynomial operator '{op}'")


def shift_v2(p: Poly2, m: ScalarLike) -> Poly2:
    """
    Substitute v2 -> v2 - m by binomial expansion.

    (v2 - m)^b = sum_k C(b, k) v2^k (-m)^(b-k)
    """
    shift = as_scalar(m)
    if shift.is_zero:
        return p
    neg = -shift
    powers = [ONE]
    out: dict[Exponent, Scalar] = {}
    for (e1, e2), c in p._terms.items():
        while len(powers) <= e2:
            powers.append(powers[-1] * neg)
        for k in range(e2 + 1):
            exp = (e1, k)
            out[exp] = out.get(exp, ZERO) + c * comb(e2, k) * powers[e2 - k]
    return Poly2({exp: c for exp, c in out.items()})


def d_dv1(p: Poly2) -> Poly2:
    """Partial derivative with respect to the first variable."""
    return Poly2._wrap(
        {(e1 - 1, e2): c * e1 for (e1, e2), c in p._terms.items() if e1 > 0}
    )


def substitute(p: Poly2, c1: ScalarLike, e: int, c2: ScalarLike) -> Poly2:
    """p(c1 * v1**e, c2 * v2) for e in {1, 2}."""
    if e not in (1, 2):
        raise ValueError("substitute only supports v1 exponents 1 and 2")
    a, b = as_scalar(c1), as_scalar(c2)
    return Poly2(
        {
            (e1 * e, e2): c * int_pow(a, e1) * int_pow(b, e2)
            for (e1, e2), c in p._terms.items()
        }
    )


def _require_univariate(h: Poly2) -> None:
    if not h.is_univariate:
        raise ValueError("h must be a polynomial in a single variable")


def divided_difference(h: Poly1, alpha: ScalarLike) -> Poly1:
    """
    (h(t) - h(alpha)) / (t - alpha) without division.

    For h = sum c_k t^k the quotient is sum_k c_k sum_{j<k} alpha^(k-1-j) t^j.
    """
    _require_univariate(h)
    a = as_scalar(alpha)
    out: dict[Exponent, Scalar] = {}
    for (k, _), c in h._terms.items():
        for j in range(k):
            exp = (j, 0)
            out[exp] = out.get(exp, ZERO) + c * int_pow(a, k - 1 - j)
    return Poly2({exp: c for exp, c in out.items()})


def h_m(h: Poly1, alpha: ScalarLike, m: int) -> Poly1:
    """h_m = m*h - m(m-1)*alpha*q, q the divided difference of h at alpha."""
    return _h_m_cached(h, as_scalar(alpha), m)


@lru_cache(maxsize=4096)
def _h_m_cached(h: Poly2, alpha: Scalar, m: int) -> Poly2:
    _require_univariate(h)
    if m == 0:
        return Poly2.zero()
    q = divided_difference(h, alpha)
    return h.scale(m) - q.scale(alpha * (m * (m - 1)))


@dataclass(frozen=True)
class HIdentityCheck:
    """Outcome of one h-family identity check."""

    passed: bool
    residual: Poly2


def check_h_identity(h: Poly1, alpha: ScalarLike, m: int, n: int) -> HIdentityCheck:
    """
    Check n*h_n - m*h_m + n(t - n*alpha)h_m' - m(t - m*alpha)h_n' = (n - m)h_{m+n}.

    Returns:
        HIdentityCheck with the residual lhs - rhs (zero when passed)
    """
    a = as_scalar(alpha)
    t = Poly2.var1()
    hm, hn = h_m(h, a, m), h_m(h, a, n)
    lhs = (
        hn.scale(n)
        - hm.scale(m)
        + ((t - Poly2.constant(a * n)) * d_dv1(hm)).scale(n)
        - ((t - Poly2.constant(a * m)) * d_dv1(hn)).scale(m)
    )
    rhs = h_m(h, a, m + n).scale(n - m)
    residual = lhs - rhs
    return HIdentityCheck(passed=residual.is_zero, residual=residual)


def transport_h(h: Poly1, alpha: ScalarLike) -> Poly1:
    """
    The NS-side polynomial g(t) = h_2(2t) / 2 matched to a Ramond h.

    Ψ intertwines the NS module built on g with the Ramond module built on h.
    """
    return substitute(h_m(h, alpha, 2), 2, 1, 1).scale(Fraction(1, 2))


def format_monomial(e1: int, e2: int, names: tuple[str, str]) -> str:
    parts = []
    for name, e in zip(names, (e1, e2), strict=True):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_term(coeff: Scalar, body: str) -> str:
    """
    Render ``coeff * body``; an empty body renders the bare scalar.

    Coefficients with both a rational and a radical part are parenthesized.
    """
    if not body:
        return str(coeff)
    if coeff == 1:
        return body
    if coeff == -1:
        return f"-{body}"
    if coeff.a != 0 and coeff.b != 0:
        return f"({coeff})*{body}"
    return f"{coeff}*{body}"


def join_terms(rendered: list[str]) -> str:
    if not rendered:
        return "0"
    out = rendered[0]
    for text in rendered[1:]:
        if text.startswith("-"):
            out += f" - {text[1:]}"
        else:
            out += f" + {text}"
    return out


def format_poly(p: Poly2, names: tuple[str, str] = ("v1", "v2")) -> str:
    """Graded-lex text form, e.g. ``3/2*v1^2*v2 + sqrt2*v2``."""
    return join_terms(
        [format_term(c, format_monomial(e1, e2, names)) for (e1, e2), c in p.sorted_terms()]
    )
