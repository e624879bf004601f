"""Exception types shared across the package.

Every failure mode is explicit: bad input data, an operation outside the
supported regime, evaluation at a pole, or a mathematical identity that the
code expected to hold and did not. The last one is the serious one; it means
a bug, not a bad input.
"""

from __future__ import annotations


class EhrkitError(Exception):
    """Base class for all package errors."""


class InputError(EhrkitError):
    """Malformed or inconsistent input data (JSON, vertex lists, options)."""


class UnsupportedError(EhrkitError):
    """Input is valid but outside the supported regime (e.g. non-pointed cone)."""


class PoleError(EhrkitError):
    """Evaluation of a rational generating function at one of its poles."""


class TheoremViolationError(EhrkitError):
    """An identity that must hold mathematically failed; indicates a bug."""
