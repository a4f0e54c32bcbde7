"""
Exact linear algebra over Q(sqrt2) on truncated monomial windows.

A window (``Truncation``) fixes a basis: every even monomial, then every
odd monomial when ``include_odd`` is set. Inside each block monomials are
ordered graded-lex from the highest, so pivots of a reduced row-echelon
basis fall on high-degree monomials and the free columns are the
low-degree ones.
"""

from dataclasses import dataclass, field

from src.algebra.poly import Exponent, Poly2
from src.algebra.scalar import ONE, ZERO, Scalar
from src.algebra.superalgebra import Sector
from src.modules.vectors import SuperVector
from src.schemas.params import Truncation

Coords = list[Scalar]


def basis(tr: Truncation) -> list[tuple[bool, Exponent]]:
    """
    Window basis as (is_odd, (e1, e2)) pairs in coordinate order.
    """
    block = sorted(
        ((e1, e2) for e1 in range(tr.max_e1 + 1) for e2 in range(tr.max_e2 + 1)),
        key=lambda exp: (exp[0] + exp[1], exp[0]),
        reverse=True,
    )
    out = [(False, exp) for exp in block]
    if tr.include_odd:
        out += [(True, exp) for exp in block]
    return out


def _index(tr: Truncation) -> dict[tuple[bool, Exponent], int]:
    return {key: i for i, key in enumerate(basis(tr))}


def basis_vectors(tr: Truncation, kind: Sector) -> list[SuperVector]:
    """Monomial super vectors of the window, in coordinate order."""
    out = []
    for is_odd, (e1, e2) in basis(tr):
        mono = Poly2.monomial(e1, e2)
        out.append(SuperVector(kind, Poly2.zero(), mono) if is_odd else SuperVector(kind, mono))
    return out


def vectorize(v: SuperVector, tr: Truncation) -> tuple[Coords, bool]:
    """
    Coordinates of v in the window basis.

    Returns:
        (coords, overflow) where overflow is set when v has terms outside
        the window; those terms are dropped from coords
    """
    index = _index(tr)
    coords = [ZERO] * len(index)
    overflow = False
    parts = [(False, v.even)] + [(True, v.odd)]
    for is_odd, p in parts:
        for exp, c in p.terms.items():
            i = index.get((is_odd, exp))
            if i is None:
                overflow = True
            else:
                coords[i] = c
    return coords, overflow


def devectorize(coords: Coords, tr: Truncation, kind: Sector) -> SuperVector:
    even: dict[Exponent, Scalar] = {}
    odd: dict[Exponent, Scalar] = {}
    for (is_odd, exp), c in zip(basis(tr), coords, strict=True):
        if not c.is_zero:
            (odd if is_odd else even)[exp] = c
    return SuperVector(kind, Poly2(even), Poly2(odd))


@dataclass
class SpanBasis:
    """
    Reduced row-echelon basis of a subspace of Q(sqrt2)^dim.

    Rows are nonzero, pivots strictly increasing and every pivot entry is 1.
    Rows are replaced, never mutated, so a snapshot of ``rows`` stays valid
    while the basis grows.
    """

    dim: int
    rows: list[Coords] = field(default_factory=list)
    pivots: list[int] = field(default_factory=list)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, coords: Coords) -> Coords:
        """Remainder of coords after elimination against the current rows."""
        v = list(coords)
        for row, p in zip(self.rows, self.pivots, strict=True):
            c = v[p]
            if not c.is_zero:
                v = [a - c * b for a, b in zip(v, row, strict=True)]
        return v

    def contains(self, coords: Coords) -> bool:
        return all(c.is_zero for c in self.reduce(coords))

    def insert(self, coords: Coords) -> bool:
        """Add a vector; True when the rank grew."""
        if len(coords) != self.dim:
            raise ValueError(f"Expected {self.dim} coordinates, got {len(coords)}")
        v = self.reduce(coords)
        q = next((i for i, c in enumerate(v) if not c.is_zero), None)
        if q is None:
            return False
        inv = v[q].inverse()
        v = [c * inv for c in v]
        v[q] = ONE
        rows = []
        for row in self.rows:
            c = row[q]
            rows.append(row if c.is_zero else [a - c * b for a, b in zip(row, v, strict=True)])
        at = next((k for k, p in enumerate(self.pivots) if p > q), len(self.pivots))
        rows.insert(at, v)
        self.rows = rows
        self.pivots = self.pivots[:at] + [q] + self.pivots[at:]
        return True


def span_insert(b: SpanBasis, coords: Coords) -> tuple[SpanBasis, bool]:
    """Insert into b in place; returns (b, grew)."""
    grew = b.insert(coords)
    return b, grew
