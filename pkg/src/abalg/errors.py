"""Exception hierarchy shared by the whole package.

Domain errors (bad but expected inputs) all derive from AbalgError so the
CLI can map them to a single exit code.  Anything else escaping an
operation is a bug.
"""


class AbalgError(Exception):
    """Base class for all expected domain errors."""


class OrderMismatchError(AbalgError):
    """Two elements with different truncation orders were combined or compared."""


class OrderingMismatchError(AbalgError):
    """An operation required both operands in the same normal ordering."""


class ZeroConstantTermError(AbalgError):
    """Inversion was attempted on an element whose constant term vanishes."""


class NotHomogeneousError(AbalgError):
    """The operation is only defined for degree-homogeneous elements."""


class NotMonicError(AbalgError):
    """The operation requires the top a-power coefficient to be 1."""


class ZeroElementError(AbalgError):
    """The zero element was passed where a nonzero one is required."""


class WitnessNotFoundError(AbalgError):
    """No monomial witness was found below the supplied search bound."""

    def __init__(self, r_max):
        super().__init__(f"no witness with exponent <= {r_max}; enlarge r_max")
        self.r_max = r_max


class ExprError(AbalgError):
    """Expression parse failure, with byte offset and the expected token set."""

    def __init__(self, offset, expected, found):
        self.offset = offset
        self.expected = tuple(expected)
        self.found = found
        exp = ", ".join(self.expected)
        super().__init__(f"parse error at offset {offset}: expected {exp}, found {found}")


class SchemaError(AbalgError):
    """A JSON document did not match the declared schema."""
