import math
from typing import Any, Dict, List, Union

from fastapi import HTTPException
from pydantic import ValidationError


class FiltrationError(Exception):
    """Base class for every error raised by the filtration package."""


class DomainError(FiltrationError, ValueError):
    """An input lies outside the domain of a model formula."""

    def __init__(self, symbol: str, value: Any, constraint: str):
        self.symbol = symbol
        self.value = value
        self.constraint = constraint
        super().__init__(f"{symbol} = {value!r} is out of domain: {constraint}")


class GridPointError(FiltrationError):
    """A sweep grid point produced an invalid scenario."""

    def __init__(self, index: int, parameter: str, value: float, reason: str):
        self.index = index
        self.parameter = parameter
        self.value = value
        self.reason = reason
        super().__init__(f"grid point {index} ({parameter} = {value!r}): {reason}")


class ConfigFileError(FiltrationError):
    """A scenario config file could not be read or parsed."""


def validation_message(exc: ValidationError) -> str:
    """Flatten a pydantic ValidationError into 'field: message' lines."""
    lines: List[str] = []
    for error in exc.errors():
        location = ".".join(str(part) for part in error["loc"]) or "<root>"
        lines.append(f"{location}: {error['msg']}")
    return "; ".join(lines)


def out_of_domain_error(symbol: str, value: Any, constraint: str) -> DomainError:
    """Error for a value violating a formula precondition."""
    return DomainError(symbol, value, constraint)


def missing_field_error(symbol: str) -> DomainError:
    """Error for a required input that was not supplied."""
    return DomainError(symbol, None, "a value is required")


def bracket_error(dp_lo: float, dp_hi: float) -> DomainError:
    """Error for an empty or non-positive MPPS search bracket."""
    if not (math.isfinite(dp_lo) and dp_lo > 0):
        return DomainError("dp_lo", dp_lo, "must be finite and > 0")
    if not math.isfinite(dp_hi):
        return DomainError("dp_hi", dp_hi, "must be finite")
    return DomainError("dp_lo", dp_lo, f"must be < dp_hi ({dp_hi!r})")


def grid_point_error(index: int, parameter: str, value: float, cause: Union[ValidationError, FiltrationError]) -> GridPointError:
    """Error for the first grid point whose scenario is invalid."""
    if isinstance(cause, ValidationError):
        reason = validation_message(cause)
    else:
        reason = str(cause)
    return GridPointError(index, parameter, value, reason)


def config_file_error(path: str, reason: str) -> ConfigFileError:
    """Error for an unreadable or malformed config file."""
    return ConfigFileError(f"cannot load config '{path}': {reason}")


def http_error(exc: Union[FiltrationError, ValidationError]) -> HTTPException:
    """422 error carrying the offending field for the HTTP surface."""
    if isinstance(exc, ValidationError):
        return HTTPException(status_code=422, detail=validation_message(exc))
    detail: Dict[str, Any] = {"message": str(exc)}
    if isinstance(exc, DomainError):
        detail["symbol"] = exc.symbol
    elif isinstance(exc, GridPointError):
        detail["index"] = exc.index
    return HTTPException(status_code=422, detail=detail)
