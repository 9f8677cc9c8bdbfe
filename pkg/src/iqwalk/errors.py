"""Exception types shared across the package."""


class ContractViolationError(RuntimeError):
    """A numeric contract was violated (non-Hermitian input, negative
    eigenvalue beyond tolerance, invalid density matrix, ...).

    Distinct from ValueError so callers (and the CLI) can tell a numerical
    problem apart from a malformed argument.
    """


class ZeroProbabilityError(ContractViolationError):
    """Post-selection outcome has (numerically) zero probability, so no
    conditional state exists."""
