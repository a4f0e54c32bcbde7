"""
The Ramond and Neveu-Schwarz super-BMS3 Lie superalgebras.

Elements are finite sums of generators L_m, W_m, G_r, C1, C2 with
coefficients in Q(sqrt2). Indices are stored doubled (``idx2 = 2*index``)
so half-integer G indices stay integral. The sector is fixed per element:
Ramond G indices are integers (idx2 even), NS G indices are half-integers
(idx2 odd).

Brackets, with delta the Kronecker delta on m+n (or r+s) = 0:

    [L_m, L_n] = (n - m) L_{m+n} + (m^3 - m)/12 delta C1
    [L_m, W_n] = (n - m) W_{m+n} + (m^3 - m)/12 delta C2
    [L_m, G_r] = (r - m/2) G_{m+r}
    [G_r, G_s] = 2 W_{r+s} + phi(r) delta C2
    [W, W] = [W, G] = 0, C1 and C2 central

Two central conventions are supported for phi. ``CONSISTENT``
(phi(r) = (1 - 4r^2)/12) satisfies the super-Jacobi identity together with
the (m^3 - m)/12 cocycle. ``PRINTED`` (phi(r) = r^2/6) reproduces the
historical normalization; with it the Jacobi sweep reports failures on
triples (L_m, G_r, G_{-m-r}).

Each bracket family is a separate module-level function so tests and the
fault registry can replace one formula at a time.
"""

from collections.abc import Iterator, Mapping
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from src.algebra.poly import format_term, join_terms
from src.algebra.scalar import HALF, HALF_SQRT2, ZERO, Scalar, ScalarLike, as_scalar
from src.core.exceptions import SectorMismatchError


class Sector(str, Enum):
    """Which superalgebra (or module family) an object belongs to."""

    RAMOND = "R"
    NEVEU_SCHWARZ = "NS"


class GeneratorKind(str, Enum):
    L = "L"
    W = "W"
    G = "G"
    C1 = "C1"
    C2 = "C2"


class Parity(str, Enum):
    EVEN = "even"
    ODD = "odd"
    MIXED = "mixed"


class CentralConvention(str, Enum):
    """Normalization of the central term in [G_r, G_{-r}] and of sigma on the centre."""

    CONSISTENT = "consistent"
    PRINTED = "printed"


_KIND_ORDER = {kind: i for i, kind in enumerate(GeneratorKind)}


@dataclass(frozen=True)
class Generator:
    """
    A basis generator with doubled index.

    L_3 is ``Generator(L, 6)``, G_{1/2} is ``Generator(G, 1)``, C1 is
    ``Generator(C1, 0)``.
    """

    kind: GeneratorKind
    idx2: int = 0

    @property
    def index(self) -> Fraction:
        return Fraction(self.idx2, 2)

    @property
    def is_odd(self) -> bool:
        return self.kind is GeneratorKind.G

    @property
    def is_central(self) -> bool:
        return self.kind in (GeneratorKind.C1, GeneratorKind.C2)

    def sort_key(self) -> tuple[int, int]:
        return (_KIND_ORDER[self.kind], self.idx2)

    def __str__(self) -> str:
        if self.is_central:
            return self.kind.value
        if self.idx2 % 2 == 0:
            return f"{self.kind.value}[{self.idx2 // 2}]"
        return f"{self.kind.value}[{self.idx2}/2]"


def _validate_generator(gen: Generator, sector: Sector) -> None:
    if gen.is_central:
        if gen.idx2 != 0:
            raise ValueError(f"Central generator {gen.kind.value} carries no index")
        return
    if gen.kind is GeneratorKind.G:
        wants_odd = sector is Sector.NEVEU_SCHWARZ
        if (gen.idx2 % 2 == 1) != wants_odd:
            raise SectorMismatchError(
                f"G index {gen.index} does not belong to the {sector.value} sector",
                details={"generator": str(gen), "sector": sector.value},
            )
    elif gen.idx2 % 2:
        raise ValueError(f"{gen.kind.value} generators take integer indices")


class AlgebraElement:
    """
    Finite linear combination of generators in one sector.

    Immutable; arithmetic returns new elements. Elements of different
    sectors never combine.
    """

    __slots__ = ("_sector", "_terms")

    def __init__(
        self, sector: Sector, terms: Mapping[Generator, ScalarLike] | None = None
    ) -> None:
        clean: dict[Generator, Scalar] = {}
        for gen, c in (terms or {}).items():
            _validate_generator(gen, sector)
            s = as_scalar(c)
            if not s.is_zero:
                clean[gen] = s
        self._sector = sector
        self._terms = clean

    # ===== Constructors =====

    @classmethod
    def of(
        cls, sector: Sector, kind: GeneratorKind, idx2: int = 0, c: ScalarLike = 1
    ) -> "AlgebraElement":
        return cls(sector, {Generator(kind, idx2): c})

    @classmethod
    def zero(cls, sector: Sector) -> "AlgebraElement":
        return cls(sector)

    # ===== Inspection =====

    @property
    def sector(self) -> Sector:
        return self._sector

    @property
    def terms(self) -> Mapping[Generator, Scalar]:
        return dict(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, gen: Generator) -> Scalar:
        return self._terms.get(gen, ZERO)

    def sorted_terms(self) -> list[tuple[Generator, Scalar]]:
        return sorted(self._terms.items(), key=lambda item: item[0].sort_key())

    def __iter__(self) -> Iterator[tuple[Generator, Scalar]]:
        return iter(self.sorted_terms())

    def parity(self) -> Parity:
        """Parity of the element; the zero element counts as even."""
        odd = any(g.is_odd for g in self._terms)
        even = any(not g.is_odd for g in self._terms)
        if odd and even:
            return Parity.MIXED
        return Parity.ODD if odd else Parity.EVEN

    def homogeneous_parts(self) -> tuple["AlgebraElement", "AlgebraElement"]:
        """(even part, odd part)."""
        even = {g: c for g, c in self._terms.items() if not g.is_odd}
        odd = {g: c for g, c in self._terms.items() if g.is_odd}
        return AlgebraElement(self._sector, even), AlgebraElement(self._sector, odd)

    # ===== Arithmetic =====

    def _check_sector(self, other: "AlgebraElement") -> None:
        if other._sector is not self._sector:
            raise SectorMismatchError(
                f"Cannot combine {self._sector.value} and {other._sector.value} elements"
            )

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check_sector(other)
        out = dict(self._terms)
        for g, c in other._terms.items():
            out[g] = out.get(g, ZERO) + c
        return AlgebraElement(self._sector, out)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self._sector, {g: -c for g, c in self._terms.items()})

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def scale(self, c: ScalarLike) -> "AlgebraElement":
        s = as_scalar(c)
        return AlgebraElement(self._sector, {g: s * v for g, v in self._terms.items()})

    def __rmul__(self, c: ScalarLike) -> "AlgebraElement":
        return self.scale(c)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self._sector is other._sector and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self._sector, frozenset(self._terms.items())))

    def __str__(self) -> str:
        """Sorted by (kind, index), e.g. ``-4*L[0] + 1/2*C1``."""
        return join_terms([format_term(c, str(g)) for g, c in self.sorted_terms()])

    def __repr__(self) -> str:
        return f"AlgebraElement({self._sector.value}: {self})"


# ===== Bracket families =====

Terms = dict[Generator, Scalar]

L, W, G = GeneratorKind.L, GeneratorKind.W, GeneratorKind.G
C1_GEN = Generator(GeneratorKind.C1)
C2_GEN = Generator(GeneratorKind.C2)


def _virasoro_cocycle(m: int) -> Scalar:
    return Scalar(Fraction(m**3 - m, 12))


def bracket_ll(m2: int, n2: int) -> Terms:
    """[L_m, L_n] from doubled indices."""
    m, n = m2 // 2, n2 // 2
    out: Terms = {Generator(L, m2 + n2): Scalar(n - m)}
    if m + n == 0:
        out[C1_GEN] = _virasoro_cocycle(m)
    return out


def bracket_lw(m2: int, n2: int) -> Terms:
    """[L_m, W_n] from doubled indices."""
    m, n = m2 // 2, n2 // 2
    out: Terms = {Generator(W, m2 + n2): Scalar(n - m)}
    if m + n == 0:
        out[C2_GEN] = _virasoro_cocycle(m)
    return out


def bracket_lg(m2: int, r2: int) -> Terms:
    """[L_m, G_r]: coefficient r - m/2 = (r2 - m)/2."""
    m = m2 // 2
    return {Generator(G, m2 + r2): Scalar(Fraction(r2 - m, 2))}


def gg_central(r2: int, convention: CentralConvention) -> Scalar:
    """Central coefficient of [G_r, G_{-r}] for r = r2/2."""
    if convention is CentralConvention.PRINTED:
        return Scalar(Fraction(r2 * r2, 24))
    return Scalar(Fraction(1 - r2 * r2, 12))


def bracket_gg(r2: int, s2: int, convention: CentralConvention) -> Terms:
    """[G_r, G_s] = 2 W_{r+s} + phi(r) delta C2."""
    out: Terms = {Generator(W, r2 + s2): Scalar(2)}
    if r2 + s2 == 0:
        out[C2_GEN] = gg_central(r2, convention)
    return out


def _negate(terms: Terms) -> Terms:
    return {g: -c for g, c in terms.items()}


def bracket_generators(
    a: Generator, b: Generator, convention: CentralConvention = CentralConvention.CONSISTENT
) -> Terms:
    """Bracket of two generators as a sparse coefficient map."""
    if a.is_central or b.is_central:
        return {}
    ka, kb = a.kind, b.kind
    if ka is L and kb is L:
        return bracket_ll(a.idx2, b.idx2)
    if ka is L and kb is W:
        return bracket_lw(a.idx2, b.idx2)
    if ka is W and kb is L:
        return _negate(bracket_lw(b.idx2, a.idx2))
    if ka is L and kb is G:
        return bracket_lg(a.idx2, b.idx2)
    if ka is G and kb is L:
        return _negate(bracket_lg(b.idx2, a.idx2))
    if ka is G and kb is G:
        return bracket_gg(a.idx2, b.idx2, convention)
    return {}


def superbracket(
    x: AlgebraElement,
    y: AlgebraElement,
    convention: CentralConvention = CentralConvention.CONSISTENT,
) -> AlgebraElement:
    """
    Bilinear super-bracket of two elements of the same sector.

    Mixed-parity inputs are expanded over generators; the generator-level
    brackets already carry the super signs.

    Raises:
        SectorMismatchError: x and y belong to different sectors
    """
    if x.sector is not y.sector:
        raise SectorMismatchError(
            f"Cannot bracket {x.sector.value} with {y.sector.value}",
            details={"x": str(x), "y": str(y)},
        )
    out: Terms = {}
    for ga, ca in x._terms.items():
        for gb, cb in y._terms.items():
            coeff = ca * cb
            for g, c in bracket_generators(ga, gb, convention).items():
                out[g] = out.get(g, ZERO) + coeff * c
    return AlgebraElement(x.sector, out)


def super_sign(x: Generator, y: Generator) -> int:
    """(-1)^{|x||y|}."""
    return -1 if x.is_odd and y.is_odd else 1


# ===== sigma: NS -> Ramond =====


def sigma_generator(gen: Generator, convention: CentralConvention) -> Terms:
    """
    Image of one NS generator under the embedding into the Ramond algebra.

    L_m -> L_{2m}/2, W_m -> W_{2m}/2, G_r -> (sqrt2/2) G_{2r}. Under
    CONSISTENT the zero modes pick up the shift -C_i/16 and C_i -> 2 C_i;
    under PRINTED the centre is fixed and there is no shift.
    """
    consistent = convention is CentralConvention.CONSISTENT
    if gen.is_central:
        return {gen: Scalar(2) if consistent else Scalar(1)}
    if gen.kind is G:
        return {Generator(G, 2 * gen.idx2): HALF_SQRT2}
    out: Terms = {Generator(gen.kind, 2 * gen.idx2): HALF}
    if consistent and gen.idx2 == 0:
        central = C1_GEN if gen.kind is L else C2_GEN
        out[central] = Scalar(Fraction(-1, 16))
    return out


def sigma(
    x: AlgebraElement, convention: CentralConvention = CentralConvention.CONSISTENT
) -> AlgebraElement:
    """
    Embed an NS element into the Ramond superalgebra.

    Raises:
        SectorMismatchError: x is not an NS element
    """
    if x.sector is not Sector.NEVEU_SCHWARZ:
        raise SectorMismatchError("sigma is defined on NS elements", details={"x": str(x)})
    out: Terms = {}
    for gen, c in x._terms.items():
        for g, v in sigma_generator(gen, convention).items():
            out[g] = out.get(g, ZERO) + c * v
    return AlgebraElement(Sector.RAMOND, out)


# ===== Enumeration =====


def generators(sector: Sector, idx_bound: int, central: bool = True) -> list[Generator]:
    """
    Every generator with |idx2| <= 2*idx_bound, sorted by (kind, index).

    Central generators are appended unless ``central`` is False.
    """
    span = 2 * idx_bound
    even = range(-span, span + 1, 2)
    g_start = -span if sector is Sector.RAMOND else -span + 1
    out = [Generator(L, i) for i in even] + [Generator(W, i) for i in even]
    out += [Generator(G, i) for i in range(g_start, span + 1, 2)]
    if central:
        out += [C1_GEN, C2_GEN]
    return out


def element(sector: Sector, gen: Generator) -> AlgebraElement:
    return AlgebraElement(sector, {gen: 1})
