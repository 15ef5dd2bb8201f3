"""Exception hierarchy shared across the package."""

from __future__ import annotations


class TorbifError(Exception):
    """Base class for all library errors."""


class InputError(TorbifError):
    """Malformed or inconsistent user input.

    Carries a short machine-readable ``code`` so the CLI can report a
    distinct error class per failure mode.
    """

    def __init__(self, message: str, code: str = "INPUT"):
        super().__init__(message)
        self.code = code


class RefusalError(TorbifError):
    """The request is well formed but cannot be answered soundly."""


class CutoffError(RefusalError):
    """Spectral data does not cover the requested parameter range."""


class ConsistencyError(TorbifError):
    """Two independent computation routes disagree; internal defect."""
