# Copyright (c) 2024 Pin-Yen Huang.
# Licensed under the MIT License.


class HoweError(Exception):
    """
    Base class of every domain error raised by howefock.
    The command line reports these as a one-line diagnostic with exit code 1.
    """


class ShapeError(HoweError):
    """malformed partition, skew shape or length mismatch"""


class InadmissibleError(HoweError):
    """a hook or depth condition on a (generalized) partition is violated"""


class ContextError(HoweError):
    """negative context values or indices out of range"""


class TruncationMismatchError(HoweError):
    """series with different finite truncations were combined or compared"""


class SeriesMismatchError(HoweError):
    """series with incompatible gradings, prefactors or symmetry"""


class OracleFailure(HoweError):
    """an identity check did not hold"""
