"""Exception types shared across the toolkit.

Every error that carries a witness stores it as plain data (indices,
pairs, triples) so callers and tests can replay the violation against
the multiplication table.
"""


class SgtoolError(Exception):
    """Base class for all toolkit errors."""


class InputError(SgtoolError):
    """Malformed input documents or parameters (CLI exit code 2)."""


class NotClosed(InputError):
    def __init__(self, row, col, entry, order):
        self.row, self.col, self.entry, self.order = row, col, entry, order
        super().__init__(
            f"table entry [{row}][{col}] = {entry} is not an element index < {order}"
        )


class NotAssociative(InputError):
    def __init__(self, a, b, c):
        self.witness = (a, b, c)
        super().__init__(f"(a b) c != a (b c) for witness triple (a, b, c) = ({a}, {b}, {c})")


class EmptyGeneratorSet(InputError):
    pass


class NotTwoSided(InputError):
    pass


class NotAnIdeal(InputError):
    def __init__(self, element, factor, side):
        self.element, self.factor, self.side = element, factor, side
        super().__init__(
            f"element {element} multiplied with {factor} ({side}) leaves the subset"
        )


class NotASubact(InputError):
    def __init__(self, element, factor):
        self.element, self.factor = element, factor
        super().__init__(f"carrier point {element} acted on by {factor} leaves the subset")


class InvalidAction(InputError):
    """Right-act axiom a(st) = (as)t (or a1 = a) fails."""

    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"act axiom violated at {witness}")


class NotASubsemigroup(InputError):
    def __init__(self, a, b):
        self.witness = (a, b)
        super().__init__(f"product of {a} and {b} escapes the subset")


class NotIdempotents(InputError):
    def __init__(self, element):
        self.element = element
        super().__init__(f"element {element} is not idempotent")


class NotAMonoid(InputError):
    pass


class NotAnEndomorphism(InputError):
    def __init__(self, a, b=None):
        self.witness = (a, b)
        if b is None:
            super().__init__(f"map does not fix the identity (or image escapes): {a}")
        else:
            super().__init__(f"map is not multiplicative on the pair ({a}, {b})")


class NotAHomomorphism(InputError):
    def __init__(self, context, a, b):
        self.context, self.witness = context, (a, b)
        super().__init__(f"{context}: map is not multiplicative on ({a}, {b})")


class CompositionViolation(InputError):
    def __init__(self, alpha, beta, gamma):
        self.triple = (alpha, beta, gamma)
        super().__init__(
            f"structure maps do not compose along {alpha} >= {beta} >= {gamma}"
        )


class IdentityViolation(InputError):
    def __init__(self, alpha):
        self.alpha = alpha
        super().__init__(f"structure map at ({alpha}, {alpha}) is not the identity")


class ZeroEntryWithoutZeroMode(InputError):
    pass


class FamilyMismatch(InputError):
    pass


class InvalidParameters(InputError):
    pass


class NotApplicable(SgtoolError):
    """Requested witness or report does not exist for this input."""


class VerdictUnavailable(SgtoolError):
    """No supported decision rule covers the given symbolic input."""


class NotRegular(InputError):
    pass


class NotCommutative(InputError):
    pass


class NotCompletelyRegular(InputError):
    pass


class NotCompletelyZeroSimple(InputError):
    pass


class PreconditionFailed(InputError):
    pass


class OrderTooLarge(InputError):
    pass


class Unsupported(SgtoolError):
    """Pattern or parameter shape the checker refuses to guess about."""
