"""Shared exception base so callers can catch every failure with one except clause."""


class StegError(Exception):
    """Base class for every error this package raises on bad input, data, or files."""
