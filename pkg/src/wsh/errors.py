"""Exception types shared across the package.

Validation errors carry the offending simplices as label tuples so that the
file parser can decorate them with line numbers.
"""


class ComplexError(ValueError):
    """Base class for weighted-complex construction and validation errors."""


class InvalidSimplex(ComplexError):
    """A simplex record has repeated vertices or is empty."""


class DuplicateSimplex(ComplexError):
    def __init__(self, simplex, message=None):
        self.simplex = tuple(simplex)
        super().__init__(message or f"simplex {{{' '.join(self.simplex)}}} listed more than once")


class MissingFace(ComplexError):
    def __init__(self, simplex, face, message=None):
        self.simplex = tuple(simplex)
        self.face = tuple(face)
        super().__init__(
            message
            or f"face {{{' '.join(self.face)}}} of {{{' '.join(self.simplex)}}} is not in the complex"
        )


class MonotonicityViolation(ComplexError):
    def __init__(self, face, coface, face_weight, coface_weight, message=None):
        self.face = tuple(face)
        self.coface = tuple(coface)
        self.face_weight = face_weight
        self.coface_weight = coface_weight
        super().__init__(
            message
            or "weight of face {{{}}} is {} but its coface {{{}}} has weight {}".format(
                " ".join(self.face), face_weight, " ".join(self.coface), coface_weight
            )
        )


class EmptyInput(ComplexError):
    """No simplices were supplied."""


class DimensionOutOfRange(ComplexError):
    def __init__(self, n, message=None):
        self.n = n
        super().__init__(message or f"dimension {n} out of range")


class MismatchedDimensions(ValueError):
    """Vector or matrix shapes do not line up."""


class NotInSpan(Exception):
    """The target vector is not a linear combination of the given columns."""


class ZeroChain(ValueError):
    """A chain with empty support where a nonzero one is required."""


class PrecisionExhausted(ArithmeticError):
    """A truncated-series computation needs exponents at or beyond the precision.

    Raised when an input exponent cannot be represented at the chosen
    precision, or when an internal consistency check shows the precision was
    too small for the requested computation.
    """


class ParseError(ValueError):
    def __init__(self, line, reason):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")
