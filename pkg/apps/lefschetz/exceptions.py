class LefschetzError(Exception):
    """Base class for multiplication map and witness search errors."""


class EnumerationRefusedError(LefschetzError):
    """The field is infinite or too large to enumerate every linear form."""
