"""Exception types shared across the package.

Every error carries a short machine-readable ``code`` used by the CLI's
``ERR <code>: <detail>`` contract.
"""


class CycleSetError(Exception):
    code = "error"


class NotAPermutation(CycleSetError):
    """A table row is not a bijection of {1..n}."""

    code = "not-a-permutation"

    def __init__(self, row: int, message: str = ""):
        self.row = row
        super().__init__(message or f"row {row} is not a permutation")


class NonDegeneracyViolation(CycleSetError):
    """The diagonal i -> psi(s_i)(i) collided; the table is not a cycle set."""

    code = "non-degeneracy"

    def __init__(self, i: int, j: int):
        self.i = i
        self.j = j
        super().__init__(f"diagonal collision: T({i}) = T({j})")


class DimensionMismatch(CycleSetError):
    code = "dimension-mismatch"


class IndexOutOfRange(CycleSetError):
    code = "index-out-of-range"


class EmptyTuple(CycleSetError):
    code = "empty-tuple"


class NegativeExponent(CycleSetError):
    """Operation requires monoid elements (all exponents nonnegative)."""

    code = "negative-exponent"


class CapExceeded(CycleSetError):
    code = "cap-exceeded"


class NotCoprime(CycleSetError):
    code = "not-coprime"


class TrivialClass(CycleSetError):
    code = "trivial-class"


class CompositionInvalid(CycleSetError):
    code = "composition-invalid"


class FormatError(CycleSetError):
    """Malformed .cys input."""

    code = "format"


class CensusMismatch(CycleSetError):
    """An existing census file disagrees with the regenerated stream."""

    code = "census-mismatch"
