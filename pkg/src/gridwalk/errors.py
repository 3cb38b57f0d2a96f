class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class ResourceError(RuntimeError):
    """A computation would exceed its configured work budget."""
