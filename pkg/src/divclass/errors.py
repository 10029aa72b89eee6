"""Exception types shared across the package."""


class DivclassError(Exception):
    """Base class for all errors raised by this package."""


class DegenerateInput(DivclassError):
    """Input is structurally empty or meaningless (zero modulus, no variables, ...)."""


class ZeroPolynomial(DivclassError):
    """An operation that needs a nonzero polynomial received zero."""


class InhomogeneousPolynomial(DivclassError):
    """Polynomial is not homogeneous for the given weights."""


class InhomogeneousFactor(InhomogeneousPolynomial):
    """A supplied factor is not homogeneous for the given weights."""


class ProductMismatch(DivclassError):
    """The supplied factors do not multiply to the claimed product."""


class RepeatedFactor(DivclassError):
    """Two supplied factors are proportional (or a factor has a repeated root)."""


class NotIrreducible(DivclassError):
    """A supplied factor is demonstrably reducible."""


class GcdViolation(DivclassError):
    """The degree of g and the exponent n share a common factor."""


class NormalityUnverified(DivclassError):
    """Normality of the hypersurface ring is neither verified nor attested."""


class InternalInconsistency(DivclassError):
    """A consistency check that should be unreachable failed; indicates a bug."""


class PolynomialSyntaxError(DivclassError):
    """Polynomial expression could not be parsed."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownVariable(PolynomialSyntaxError):
    """Polynomial expression references a variable not in the ring."""


class NegativeExponent(PolynomialSyntaxError):
    """A negative exponent appeared where only monomials are allowed."""


class SearchSpaceTooLarge(DivclassError):
    """A bounded exhaustive search would exceed its budget."""


class JobFileError(DivclassError):
    """A job file is malformed: bad JSON, wrong types, or unknown keys."""
