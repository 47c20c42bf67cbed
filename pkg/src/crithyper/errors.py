"""Exception types shared across the package.

The CLI maps each of these to a distinct exit code.
"""


class InputError(ValueError):
    """Malformed input or a violated precondition."""


class CapacityError(RuntimeError):
    """An exhaustive search would exceed its configured bound."""


class CounterexampleError(AssertionError):
    """A checked structural property failed on a concrete object.

    This must never fire; when it does, ``obj`` holds the offending object.
    """

    def __init__(self, message, obj=None):
        super().__init__(message)
        self.obj = obj
