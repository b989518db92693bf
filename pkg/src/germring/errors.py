"""Exception hierarchy. Every error carries a stable ``code`` used by the CLI."""


class GermRingError(Exception):
    code = "Error"
    exit_status = 1


class UsageError(GermRingError):
    code = "UsageError"
    exit_status = 2


class ParseError(GermRingError):
    """Grammar violation in a germ expression (``SyntaxError`` in the CLI output)."""

    code = "SyntaxError"
    exit_status = 3


class NotNormalForm(GermRingError):
    code = "NotNormalForm"
    exit_status = 3


class ZeroGerm(GermRingError):
    code = "ZeroGerm"
    exit_status = 3


class NonPolynomialExponent(GermRingError):
    code = "NonPolynomialExponent"
    exit_status = 3


class ZeroInput(GermRingError):
    code = "ZeroInput"
    exit_status = 3


class AbstractMember(GermRingError):
    code = "AbstractMember"
    exit_status = 3


class DimensionMismatch(GermRingError):
    code = "DimensionMismatch"
    exit_status = 2


class NegativeEntry(GermRingError):
    code = "NegativeEntry"
    exit_status = 2


class DimensionTooSmall(GermRingError):
    code = "DimensionTooSmall"
    exit_status = 2


class NotInSemigroup(GermRingError):
    code = "NotInSemigroup"
    exit_status = 2


class WrongCase(GermRingError):
    code = "WrongCase"
    exit_status = 2


class BadIndices(GermRingError):
    code = "BadIndices"
    exit_status = 2


class NonSquare(GermRingError):
    code = "NonSquare"
    exit_status = 2


class ConstantPhi(GermRingError):
    code = "ConstantPhi"
    exit_status = 2


class NonRationalConstant(GermRingError):
    code = "NonRationalConstant"
    exit_status = 4


class SizeGuard(GermRingError):
    code = "SizeGuard"
    exit_status = 4


class Cancelled(GermRingError):
    code = "Cancelled"
    exit_status = 130


class PropertyViolation(GermRingError):
    code = "PropertyViolation"
    exit_status = 5

    def __init__(self, message, counterexample=None):
        super().__init__(message)
        self.counterexample = counterexample


class GoldenMismatch(GermRingError):
    code = "GoldenMismatch"
    exit_status = 5

    def __init__(self, message, stages=None):
        super().__init__(message)
        self.stages = stages
