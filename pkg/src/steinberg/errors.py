"""Exception types shared across the package."""


class ConfigurationError(ValueError):
    """Invalid root-system, lattice, or characteristic configuration."""


class DomainError(ValueError):
    """Argument outside the mathematical domain of an operation."""
