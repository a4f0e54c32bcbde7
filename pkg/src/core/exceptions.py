"""
Custom exceptions for the super-BMS3 verification engine.

Every failure the engine can report is a ``Bms3Error`` carrying:
- A machine-readable error code (stable across releases)
- A human-readable message
- Structured details for logging and JSON reports

Design pattern: Base exception → Specific exceptions
- Bms3Error: base for everything the engine raises on purpose
- Arithmetic, algebra, module, probe and input errors inherit from it
  with a predefined error code

Failed verification is NOT an exception: sweeps and probes return a
``ProbeReport`` with ``passed=False``. Exceptions are reserved for inputs
that violate a precondition.
"""

from enum import Enum
from typing import Any


class ErrorCode(str, Enum):
    """
    Standardized error codes for reports and CLI output.

    Naming convention: <DOMAIN>_<NUMBER>
    - ARITH_xxx: scalar and polynomial arithmetic
    - ALG_xxx: superalgebra elements and brackets
    - MOD_xxx: module actions and parameters
    - PROBE_xxx: probes and sweeps
    - INPUT_xxx: textual input
    """

    # Arithmetic errors
    DIVISION_BY_ZERO = "ARITH_001"

    # Algebra errors
    SECTOR_MISMATCH = "ALG_001"
    KIND_MISMATCH = "ALG_002"

    # Module errors
    MISSING_SQRT_LAMBDA = "MOD_001"
    SQRT_MISMATCH = "MOD_002"
    ALPHA_NONZERO = "MOD_003"
    TRANSPORT_CONDITION_FAILED = "MOD_004"
    INCONSISTENT_ORACLE = "MOD_005"
    INVALID_PARAMS = "MOD_006"

    # Probe errors
    PRECONDITION_FAILED = "PROBE_001"

    # Input errors
    PARSE_ERROR = "INPUT_001"
    UNKNOWN_VARIABLE = "INPUT_002"


class Bms3Error(Exception):
    """
    Base exception for all engine errors.

    Attributes:
        message: Human-readable error description
        error_code: Machine-readable error identifier
        details: Additional context (dict)

    Usage:
        try:
            report = sweep_psi_intertwiner(...)
        except Bms3Error as e:
            logger.error("sweep_rejected", error_code=e.error_code.value)
    """

    def __init__(
        self,
        message: str,
        error_code: ErrorCode = ErrorCode.PRECONDITION_FAILED,
        details: dict[str, Any] | None = None,
    ):
        self.message = message
        self.error_code = error_code
        self.details = details or {}
        super().__init__(self.message)

    def to_dict(self) -> dict[str, Any]:
        """
        Convert exception to dictionary for JSON output.

        Returns:
            dict: Structured error data
        """
        return {
            "error": self.error_code.value,
            "message": self.message,
            "details": self.details,
        }

    def __str__(self) -> str:
        """String representation for logging."""
        return f"{self.error_code.value}: {self.message}"


class DivisionByZeroError(Bms3Error):
    """Raised when inverting the zero scalar."""

    def __init__(self, message: str = "Division by zero in Q(sqrt2)", details: Any = None):
        super().__init__(message, ErrorCode.DIVISION_BY_ZERO, details)


class SectorMismatchError(Bms3Error):
    """
    Raised when Ramond and Neveu-Schwarz data meet.

    Common causes:
    - Bracketing a Ramond element with an NS element
    - A parsed expression mixing integer and half-integer G indices
    - Acting with an element of the wrong sector
    """

    def __init__(self, message: str = "Sector mismatch", details: Any = None):
        super().__init__(message, ErrorCode.SECTOR_MISMATCH, details)


class KindMismatchError(Bms3Error):
    """Raised when a vector's kind does not match the module it is fed to."""

    def __init__(self, message: str = "Vector kind mismatch", details: Any = None):
        super().__init__(message, ErrorCode.KIND_MISMATCH, details)


class MissingSqrtLambdaError(Bms3Error):
    """Raised when an NS module is used without a chosen square root of lambda."""

    def __init__(
        self, message: str = "NS module requires sqrt_lambda", details: Any = None
    ):
        super().__init__(message, ErrorCode.MISSING_SQRT_LAMBDA, details)


class SqrtMismatchError(Bms3Error):
    """Raised when sqrt_lambda squared differs from lambda."""

    def __init__(self, message: str = "sqrt_lambda^2 != lambda", details: Any = None):
        super().__init__(message, ErrorCode.SQRT_MISMATCH, details)


class AlphaNonzeroError(Bms3Error):
    """
    Raised when an operation needs alpha = 0 and gets a nonzero alpha.

    The quotient layers and the filtration pieces Pi_i are submodules only
    for alpha = 0.
    """

    def __init__(self, message: str = "Operation invalid for this alpha", details: Any = None):
        super().__init__(message, ErrorCode.ALPHA_NONZERO, details)


class TransportConditionError(Bms3Error):
    """
    Raised when g_m(t/2) != h_{2m}(t)/2 for some m in the checked range.

    Details carry the first offending m.
    """

    def __init__(
        self,
        message: str = "Transport condition failed",
        m: int | None = None,
    ):
        super().__init__(message, ErrorCode.TRANSPORT_CONDITION_FAILED, {"m": m})
        self.m = m


class InconsistentOracleError(Bms3Error):
    """Raised when an action oracle does not fit the module family."""

    def __init__(self, message: str = "Oracle is not of module type", details: Any = None):
        super().__init__(message, ErrorCode.INCONSISTENT_ORACLE, details)


class InvalidParamsError(Bms3Error):
    """Raised for lambda = 0 or an h that is not univariate."""

    def __init__(self, message: str = "Invalid module parameters", details: Any = None):
        super().__init__(message, ErrorCode.INVALID_PARAMS, details)


class PreconditionError(Bms3Error):
    """Raised when a probe's input falls outside its domain."""

    def __init__(self, message: str = "Precondition failed", details: Any = None):
        super().__init__(message, ErrorCode.PRECONDITION_FAILED, details)


class ParseError(Bms3Error):
    """
    Raised when textual input cannot be parsed.

    Details carry the character position of the offending token.
    """

    def __init__(self, message: str = "Parse error", position: int | None = None):
        super().__init__(message, ErrorCode.PARSE_ERROR, {"position": position})
        self.position = position


class UnknownVariableError(Bms3Error):
    """Raised when a polynomial uses a variable name not allowed for its slot."""

    def __init__(self, name: str, allowed: tuple[str, ...] = ()):
        super().__init__(
            f"Unknown variable '{name}' (allowed: {', '.join(allowed) or 'none'})",
            ErrorCode.UNKNOWN_VARIABLE,
            {"name": name, "allowed": list(allowed)},
        )
        self.name = name
