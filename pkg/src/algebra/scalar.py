"""
Exact arithmetic in Q(sqrt2).

A ``Scalar`` is ``a + b*sqrt2`` with ``a``, ``b`` held as
``fractions.Fraction``. Fractions are always in lowest terms, so two
scalars are equal exactly when their parts are equal.

Design decisions:
- Immutable value objects; every operation returns a new scalar
- Plain ints and Fractions are accepted wherever a scalar is
- Division goes through the conjugate: 1/(a + b√2) = (a - b√2)/(a² - 2b²)
"""

from collections.abc import Callable
from fractions import Fraction
from typing import Union

from src.core.exceptions import DivisionByZeroError

Rational = Fraction
ScalarLike = Union["Scalar", int, Fraction]


class Scalar:
    """
    Element a + b*sqrt2 of Q(sqrt2).

    Attributes:
        a: rational part
        b: coefficient of sqrt2
    """

    __slots__ = ("_a", "_b")

    def __init__(self, a: int | Fraction = 0, b: int | Fraction = 0) -> None:
        self._a = Fraction(a)
        self._b = Fraction(b)

    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    @property
    def is_zero(self) -> bool:
        return self._a == 0 and self._b == 0

    @property
    def is_rational(self) -> bool:
        return self._b == 0

    def conjugate(self) -> "Scalar":
        """Galois conjugate a - b*sqrt2."""
        return Scalar(self._a, -self._b)

    def norm(self) -> Fraction:
        """Field norm a² - 2b²; zero only for the zero scalar."""
        return self._a * self._a - 2 * self._b * self._b

    def inverse(self) -> "Scalar":
        n = self.norm()
        if n == 0:
            raise DivisionByZeroError(details={"operand": str(self)})
        return Scalar(self._a / n, -self._b / n)

    # ===== Arithmetic =====

    def __add__(self, other: ScalarLike) -> "Scalar":
        o = as_scalar(other)
        return Scalar(self._a + o._a, self._b + o._b)

    __radd__ = __add__

    def __sub__(self, other: ScalarLike) -> "Scalar":
        o = as_scalar(other)
        return Scalar(self._a - o._a, self._b - o._b)

    def __rsub__(self, other: ScalarLike) -> "Scalar":
        return as_scalar(other) - self

    def __mul__(self, other: ScalarLike) -> "Scalar":
        o = as_scalar(other)
        return Scalar(
            self._a * o._a + 2 * self._b * o._b,
            self._a * o._b + self._b * o._a,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: ScalarLike) -> "Scalar":
        return self * as_scalar(other).inverse()

    def __rtruediv__(self, other: ScalarLike) -> "Scalar":
        return as_scalar(other) * self.inverse()

    def __neg__(self) -> "Scalar":
        return Scalar(-self._a, -self._b)

    def __pos__(self) -> "Scalar":
        return self

    def __pow__(self, n: int) -> "Scalar":
        return int_pow(self, n)

    # ===== Comparison / hashing =====

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Scalar):
            return self._a == other._a and self._b == other._b
        if isinstance(other, int | Fraction):
            return self._b == 0 and self._a == other
        return NotImplemented

    def __hash__(self) -> int:
        # Must agree with hash(int) / hash(Fraction) for rational scalars
        if self._b == 0:
            return hash(self._a)
        return hash((self._a, self._b))

    def __bool__(self) -> bool:
        return not self.is_zero

    # ===== Text =====

    def __str__(self) -> str:
        """Canonical form: ``p/q``, ``r/s*sqrt2`` or ``p/q + r/s*sqrt2``."""
        if self._b == 0:
            return str(self._a)
        radical = _format_radical(abs(self._b))
        if self._a == 0:
            return f"-{radical}" if self._b < 0 else radical
        sign = "-" if self._b < 0 else "+"
        return f"{self._a} {sign} {radical}"

    def __repr__(self) -> str:
        return f"Scalar({self})"


def _format_radical(b: Fraction) -> str:
    return "sqrt2" if b == 1 else f"{b}*sqrt2"


def as_scalar(value: ScalarLike) -> Scalar:
    """Coerce an int, Fraction or Scalar to a Scalar."""
    if isinstance(value, Scalar):
        return value
    if isinstance(value, int | Fraction):
        return Scalar(value)
    raise TypeError(f"Cannot interpret {value!r} as a scalar")


def int_pow(x: ScalarLike, n: int) -> Scalar:
    """
    x**n for any integer n by repeated squaring.

    Raises:
        DivisionByZeroError: n < 0 and x = 0
    """
    base = as_scalar(x)
    if n < 0:
        base = base.inverse()
        n = -n
    result = ONE
    while n:
        if n & 1:
            result = result * base
        base = base * base
        n >>= 1
    return result


_OPS: dict[str, Callable[[Scalar, Scalar], Scalar]] = {
    "+": lambda x, y: x + y,
    "-": lambda x, y: x - y,
    "*": lambda x, y: x * y,
    "/": lambda x, y: x / y,
}


def scalar_arith(x: ScalarLike, y: ScalarLike, op: str) -> Scalar:
    """
    Apply one of + - * / to two scalars.

    Raises:
        DivisionByZeroError: op is '/' and y = 0
        ValueError: unknown operator
    """
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"Unknown scalar operator '{op}'") from None
    return fn(as_scalar(x), as_scalar(y))


ZERO = Scalar(0)
ONE = Scalar(1)
HALF = Scalar(Fraction(1, 2))
SQRT2 = Scalar(0, 1)
HALF_SQRT2 = Scalar(0, Fraction(1, 2))
