"""Exception hierarchy shared by the library and the CLI.

Each class maps to a distinct CLI exit code, see :mod:`rmstuck.cli`.
"""


class RmStuckError(Exception):
    """Base class for all library errors."""


class ParameterError(RmStuckError, ValueError):
    """Invalid or inconsistent parameters (bad s/m/r combination, length mismatch, ...)."""


class CapacityError(RmStuckError):
    """More stuck cells than the configured defect multiplicity can mask."""


class LabelError(RmStuckError):
    """A label is not injective on its mask set, or is otherwise malformed."""


class InfeasibleLabelError(LabelError):
    """Label columns are linearly dependent in the generator matrix; pick a different label."""


class DecodeFailure(RmStuckError):
    """The read word could not be decoded (beyond the error budget, or unknown label)."""
