"""Exception types shared across the package."""


class InvariantError(RuntimeError):
    """A structural property that must hold was violated.

    Raised for conditions that signal an implementation bug (a grid point on
    no traced path, a constructed element failing its subset predicate, a
    recurrence right-hand side that is not divisible), never for bad caller
    input.
    """
