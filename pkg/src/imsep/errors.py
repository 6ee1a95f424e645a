"""Exception types shared across the package."""


class InvalidVertexError(ValueError):
    """A vertex id is outside ``0..n-1``."""


class InvalidArgumentError(ValueError):
    """Arguments are well-typed but violate a precondition."""


class DisconnectedGraphError(ValueError):
    """A predicate that assumes a connected graph received a disconnected one."""


class BudgetExceededError(RuntimeError):
    """An enumeration or exhaustive search ran past its configured budget."""


class GraphFormatError(ValueError):
    """Malformed edge-list text."""


class CnfFormatError(ValueError):
    """Malformed DIMACS CNF text."""


class NormalizationError(ValueError):
    """A formula cannot be brought into the normal form the reduction needs."""


class ContradictionError(RuntimeError):
    """A separator selects both polarities of one variable.

    The reduction guarantees this never happens for an inclusion-wise minimal
    separator of size at least four, so seeing it signals a bug.
    """
