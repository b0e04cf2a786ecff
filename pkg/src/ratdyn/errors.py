"""Domain errors raised by the library.

Every precondition violation raises ``DomainError`` (or a subclass) with a
message naming the violated precondition, e.g. ``"parameter excluded: p=0"``.
The command-line front end maps ``DomainError`` to exit code 1.
"""


class DomainError(ValueError):
    """A mathematically excluded input (degenerate parameter, bad pair, ...)."""


def parameter_excluded(name, value):
    return DomainError(f"parameter excluded: {name}={value}")
