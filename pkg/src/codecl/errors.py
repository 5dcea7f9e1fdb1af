"""Shared exception root so callers can catch any library error at once."""


class CodeclError(Exception):
    """Base class for every error raised by this package."""
