"""
Pydantic schemas for module parameters and truncation windows.

Design decisions:
- Frozen models: parameters are values, passed explicitly everywhere
- Validation at the boundary (lambda != 0, h univariate, sqrt_lambda^2 = lambda)
- Exact types (Scalar, Poly2) carried as arbitrary types
"""

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.algebra.poly import Poly2
from src.algebra.scalar import Scalar
from src.algebra.superalgebra import Sector
from src.core.exceptions import InvalidParamsError, SqrtMismatchError


class ModuleParams(BaseModel):
    """
    Parameters of a module Ω(λ, α, h) in either sector.

    Fields:
        lambda_: nonzero scalar (alias ``lambda``)
        alpha: scalar
        h: univariate polynomial in the first variable
        sector: which module family (Ramond or NS)
        sqrt_lambda: chosen square root of lambda; required by NS actions
    """

    lambda_: Scalar = Field(alias="lambda")
    alpha: Scalar
    h: Poly2
    sector: Sector = Sector.RAMOND
    sqrt_lambda: Scalar | None = None

    model_config = ConfigDict(
        arbitrary_types_allowed=True,
        frozen=True,
        populate_by_name=True,
    )

    @model_validator(mode="after")
    def validate_params(self) -> "ModuleParams":
        if self.lambda_.is_zero:
            raise InvalidParamsError("lambda must be nonzero")
        if not self.h.is_univariate:
            raise InvalidParamsError(
                "h must be a polynomial in one variable", details={"h": str(self.h)}
            )
        if self.sqrt_lambda is not None and self.sqrt_lambda * self.sqrt_lambda != self.lambda_:
            raise SqrtMismatchError(
                details={"lambda": str(self.lambda_), "sqrt_lambda": str(self.sqrt_lambda)}
            )
        return self


class Truncation(BaseModel):
    """
    Finite window of monomials v1^e1 * v2^e2 with e1 <= max_e1, e2 <= max_e2.

    When ``include_odd`` is set the window covers both the even and the odd
    component of a super vector.
    """

    max_e1: int = Field(ge=0)
    max_e2: int = Field(ge=0)
    include_odd: bool = True

    model_config = ConfigDict(frozen=True)

    @property
    def block_size(self) -> int:
        return (self.max_e1 + 1) * (self.max_e2 + 1)

    @property
    def dimension(self) -> int:
        return self.block_size * (2 if self.include_odd else 1)
