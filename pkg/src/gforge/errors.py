"""Exception types shared across the library."""


class GForgeError(Exception):
    """Base class for all library errors."""


class FieldMismatch(GForgeError):
    """Operands belong to different coefficient fields."""


class CoefficientBlowup(GForgeError):
    """A rational coefficient exceeded the size guard (10**6 decimal digits)."""


class ConstantPolynomial(GForgeError):
    """Operation requires a nonconstant polynomial."""


class DegreeCapExceeded(GForgeError):
    """Factorization degree cap (64) exceeded."""


class UnsupportedField(GForgeError):
    """Operation not defined over this coefficient ring."""


class DuplicateNodes(GForgeError):
    """Interpolation nodes must be pairwise distinct."""


class DegreeMismatch(GForgeError):
    """Interpolation fibers must share one degree (and match the node list)."""


class NonMonicFiber(GForgeError):
    """Interpolation fibers must be monic."""


class InseparableFamily(GForgeError):
    """The parametric polynomial has identically vanishing Y-discriminant."""


class BadDegree(GForgeError):
    """Polynomial degree outside the supported range for this operation."""


class NotMonic(GForgeError):
    """Operation requires a monic polynomial."""


class NotSeparable(GForgeError):
    """Operation requires a separable polynomial."""


class NotIrreducible(GForgeError):
    """Operation requires an irreducible polynomial."""


class NTooSmall(GForgeError):
    """Target degree is smaller than the stem degree."""


class SearchBudgetExhausted(GForgeError):
    """Candidate search ended without a certified polynomial."""


class SplitTrinomialNotFound(GForgeError):
    """No totally split separable trinomial Y^3 + aY + a exists in this field."""


class UnsupportedCharacteristic(GForgeError):
    """Construction undefined in this characteristic."""


class RingMismatch(GForgeError):
    """Skew polynomial operands belong to different rings."""


class ZeroInput(GForgeError):
    """Operation requires nonzero inputs."""


class RamifiedPoint(GForgeError):
    """The fiber at this point is inseparable."""


class WrongBase(GForgeError):
    """Operation requires a finite base field."""


class NotASubgroup(GForgeError):
    """The claimed subgroup is not contained in (or not a subgroup of) the group."""


class NonDivisible(GForgeError):
    """Degree bookkeeping requires exact divisibility."""


class GroupTooLarge(GForgeError):
    """Permutation group enumeration cap (10**4 elements) exceeded."""


class ParseError(GForgeError):
    """Malformed polynomial, element, or ring descriptor text."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"parse error at line {line}, column {column}: {message}")
        self.line = line
        self.column = column
