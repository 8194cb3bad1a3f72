"""Error types shared across the package.

Everything user-facing derives from InputError so the CLI can map bad
arguments, shape mismatches, and unsupported model requests to exit code 2.
Internal invariant violations raise plain RuntimeError/AssertionError.
"""


class InputError(ValueError):
    """Invalid argument, shape mismatch, or violated operation precondition."""


class UnsupportedError(InputError):
    """Operation not defined for the given model, degree, or algebra."""
