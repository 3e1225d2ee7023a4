"""Shared exception bases.

Two families matter to callers (and to the CLI exit codes): bad input
versus a broken internal invariant.  Everything raised by this package
derives from one of them.
"""


class ExtremalSplitError(Exception):
    """Base class for all package errors."""


class InputError(ExtremalSplitError):
    """Invalid input, unmet precondition or resource cap (CLI exit 2)."""


class InternalCheckError(ExtremalSplitError):
    """A theorem-backed assertion failed: implementation bug (CLI exit 3)."""
