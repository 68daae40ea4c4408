"""Exception types separating bad input from broken internals."""


class PreconditionError(ValueError):
    """A mathematical hypothesis of an operation fails on the given input."""


class CrossCheckError(RuntimeError):
    """Two routes that must agree produced different values.

    Raised by operations that recompute their own result along an
    independent route; seeing this means a defect, not a user error.
    """
