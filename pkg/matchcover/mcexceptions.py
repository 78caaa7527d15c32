##                  _       _
##  _ __ ___   __ _| |_ ___| |__   ___ _____   _____ _ __
## | '_ ` _ \ / _` | __/ __| '_ \ / __/ _ \ \ / / _ \ '__|
## | | | | | | (_| | || (__| | | | (_| (_) \ V /  __/ |
## |_| |_| |_|\__,_|\__\___|_| |_|\___\___/ \_/ \___|_|
##
## Matching covers, streaming and fully dynamic matching
## Copyright 2024 - 2026
##

"""
Exception class where all the cool exception stuff happens. Every error raised by
matchcover inherits from MCException, so callers can catch the whole family at once.

"""

import warnings


# ........................................................................
#
class MCException(Exception):
    """
    Exception class for raising custom exceptions

    """
    pass


# ........................................................................
#
class VertexRangeException(MCException):
    """
    Raised for self-loops and for vertices outside [0, n).

    """
    pass


# ........................................................................
#
class ParseException(MCException):
    """
    Raised when an input file does not follow its format. The offending line
    number is kept on the exception.

    """
    def __init__(self, message, line_number=None):
        if line_number is not None:
            message = 'line %i: %s' % (line_number, message)
        super().__init__(message)
        self.line_number = line_number


# ........................................................................
#
class CapacityException(MCException):
    """
    Raised when a CompactEdgeDict would exceed its capacity.

    """
    pass


# ........................................................................
#
class RefinementOverflowException(MCException):
    """
    Raised when refining a partition would push the exceptional class
    above gamma*n.

    """
    pass


# ........................................................................
#
class ConsolidationException(MCException):
    """
    Raised when consolidation runs out of retries. The best rounding found
    is available as ``best``.

    """
    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best


# ........................................................................
#
class CascadeOverflowException(MCException):
    """
    Raised when the buffer cascade breaks its flush-count invariant, e.g. a
    flush of the top buffer.

    """
    pass


# ........................................................................
#
class ProjectionException(MCException):
    """
    Raised when a matched super-edge cannot be realised by an original edge.

    """
    pass


# ........................................................................
#
class SinglePassException(MCException):
    """
    Raised when a single-pass stream is read a second time.

    """
    pass


# ........................................................................
#
class PhaseBudgetException(MCException):
    """
    Raised when a deamortized shadow structure misses the deadline of one of
    its phases. The phase name is kept on the exception.

    """
    def __init__(self, message, phase=None):
        super().__init__(message)
        self.phase = phase


# ........................................................................
#
def MCWarning(string):
    """
    Custom function to display non-fatal warnings.

    """
    warnings.warn(string)
