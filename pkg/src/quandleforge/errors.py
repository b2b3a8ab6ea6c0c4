"""Exception types shared across the package."""


class QuandleError(Exception):
    """Base class for all quandleforge errors."""


class AxiomViolation(QuandleError):
    """A table fails one of the three quandle axioms.

    kind is one of 'idempotency', 'invertibility', 'distributivity';
    witness is the offending element / pair / triple.
    """

    def __init__(self, kind, witness):
        self.kind = kind
        self.witness = witness
        super().__init__(f"{kind} fails at {witness}")


class NotAHomomorphism(QuandleError):
    pass


class NotEpimorphism(QuandleError):
    pass


class NonIntegralIndex(QuandleError):
    """|source| is not a multiple of |target|, so the map has no integer index."""


class GroupTooLarge(QuandleError):
    """Permutation-group closure exceeded the configured element cap."""


class NotAUnit(QuandleError):
    pass


class NotACocycle(QuandleError):
    """values is not a quandle 2-cocycle; witness is a diagonal element or a
    triple (x, y, z) violating the cocycle identity."""

    def __init__(self, witness, message="not a 2-cocycle"):
        self.witness = witness
        super().__init__(f"{message}; witness {witness}")


class ShapeMismatch(QuandleError):
    pass


class DNotDividesModulus(QuandleError):
    pass


class Capped(QuandleError):
    """Coset enumeration exceeded max_cosets. Either raise the cap or accept
    that the group is larger than the budget."""

    def __init__(self, max_cosets, allocated):
        self.max_cosets = max_cosets
        self.allocated = allocated
        super().__init__(
            f"coset enumeration exceeded cap {max_cosets} "
            f"(allocated {allocated} cosets)")


class NotAKnot(QuandleError):
    """Braid closure has more than one component."""


class BadGenerator(QuandleError):
    pass


class EnumerationTooLarge(QuandleError):
    """Coloring enumeration would exceed the assignment cap."""


class NotACovering(QuandleError):
    pass


class FiberMismatch(QuandleError):
    """Requested lift basepoint does not sit over the base coloring's endpoint."""


class NotIndex2(QuandleError):
    pass


class ExtensionLawFails(QuandleError):
    """The index-2 covering is not an abelian extension in the chosen fiber
    labeling; witness is (x, a, z, b) with the offending product."""

    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"extension law fails at {witness}")


class TheoremViolation(QuandleError):
    """A mechanically checked theorem failed: this signals an implementation
    bug, never a mathematical discovery. Fail loudly."""
