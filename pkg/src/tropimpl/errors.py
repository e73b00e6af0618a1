"""Exception hierarchy shared by all modules."""


class TropError(ValueError):
    """Base class for every structured error raised by tropimpl."""

    kind = "error"

    def __init__(self, message, **details):
        super().__init__(message)
        self.details = details

    def to_dict(self):
        out = {"kind": self.kind, "message": str(self)}
        out.update({k: _jsonable(v) for k, v in self.details.items()})
        return out


def _jsonable(v):
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, (int, str, bool)) or v is None:
        return v
    return str(v)


class DimensionMismatch(TropError):
    kind = "dimension-mismatch"


class ZeroVectorError(TropError):
    kind = "zero-vector"


class EmptyInputError(TropError):
    kind = "empty-input"


class ZeroPolynomialError(TropError):
    kind = "zero-polynomial"


class NegativeExponentError(TropError):
    kind = "negative-exponent"


class CommonFactorError(TropError):
    kind = "common-factor"


class PositiveDimensionalIntersection(TropError):
    kind = "positive-dimensional-intersection"


class ResultantError(TropError):
    kind = "resultant"


class NonIntegralWeightError(TropError):
    kind = "nonintegral-weight"


class GenericityError(TropError):
    kind = "not-generic"


class IrrationalExcessPointSuspected(TropError):
    kind = "irrational-excess-point"


class StepLimitExceeded(TropError):
    kind = "step-limit"


class ChartError(TropError):
    kind = "chart"


class FactorizationError(TropError):
    kind = "factorization"


class NotRefinableError(TropError):
    kind = "not-refinable"


class ParallelEndpointsError(TropError):
    kind = "parallel-endpoints"


class InputError(TropError):
    kind = "input"


class UnknownFormatError(TropError):
    kind = "unknown-format"
