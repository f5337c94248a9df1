"""Exception types shared across the package."""


class ResourceGuardError(ValueError):
    """An input exceeds the size an exhaustive routine is allowed to touch."""


class Inconsistent(ArithmeticError):
    """A linear system over Z_2 has no solution."""


class Unsupported(LookupError):
    """No closed form is available for the requested parameters."""
