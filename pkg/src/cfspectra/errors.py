"""Shared exception types."""

from __future__ import annotations


class PrecisionExhausted(RuntimeError):
    """A certified decision could not be reached within the precision cap.

    `enclosure` carries the tightest enclosure achieved, when available.
    """

    def __init__(self, message: str, enclosure=None):
        super().__init__(message)
        self.enclosure = enclosure
