"""Exception types shared across the package."""


class LatdimError(Exception):
    """Base class for all package errors."""


class ParseError(LatdimError):
    """Malformed spec file or inline spec string."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


# order / lattice construction

class NotAPoset(LatdimError):
    """Relation is not reflexive, antisymmetric and transitive."""


class NotALattice(LatdimError):
    """Some pair of elements lacks a unique meet or join."""


class NotBounded(LatdimError):
    """Poset has no global minimum or maximum."""


class EmptyInput(LatdimError):
    """An empty chain list was supplied."""


class ChainTooShort(LatdimError):
    """Every chain in a product needs at least two elements."""


class QuotientNotLattice(LatdimError):
    """Annihilator-class quotient failed lattice validation."""


class SpecInvalid(LatdimError):
    """Bad atom count, chain length or spec field value."""


class StructureViolation(LatdimError):
    """A structural clause expected of a blow-up lattice failed."""


# graph / solver preconditions

class Disconnected(LatdimError):
    """Operation requires a connected graph."""


class NotCoReachable(LatdimError):
    """No path exists between the two vertices."""


class TooLarge(LatdimError):
    """Graph exceeds the brute-force vertex cap."""


class PreconditionFailed(LatdimError):
    """Input violates a stated hypothesis of the operation."""


# verification signals

class TheoremViolated(LatdimError):
    """A verified identity failed on a concrete instance."""


class FormulaMismatch(LatdimError):
    """Closed-form value disagrees with the solver."""


class SignatureMismatch(LatdimError):
    """Graphs differ under the canonical class-structure mapping."""


class MethodInapplicable(LatdimError):
    """Requested computation method does not apply to this input."""
