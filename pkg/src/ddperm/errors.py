"""Shared exception types."""


class CapExceeded(RuntimeError):
    """A computation was refused because it would exceed a resource cap.

    Raised instead of silently attempting an enumeration that cannot
    finish in reasonable time (e.g. 13! permutations).  The message says
    which cap was hit and, where one exists, which cheaper method to use.
    """
