# -*- coding: utf-8 -*-

"""Package Exceptions.

Routine Listings
----------------
EmbeddingUtilError
InputError
SizeCapError
EmbeddingError
ValidationError
ConfigError
SamplerError
RemoteSamplerError
RemoteNetworkError
MalformedResponseError
RemoteTimeoutError
RangeViolationError

"""

__author__ = "Nathaniel Starkman"

__all__ = [
    "EmbeddingUtilError",
    "InputError",
    "SizeCapError",
    "EmbeddingError",
    "ValidationError",
    "ConfigError",
    "SamplerError",
    "RemoteSamplerError",
    "RemoteNetworkError",
    "MalformedResponseError",
    "RemoteTimeoutError",
    "RangeViolationError",
]


##############################################################################
# CODE
##############################################################################


class EmbeddingUtilError(Exception):
    """Base class for all package errors.

    Attributes
    ----------
    stage : str or None
        the pipeline stage the error was raised in, if known.
        set by :func:`~embedding_util.utils.decorators.stage`.

    """

    stage = None


# /class


class InputError(EmbeddingUtilError, ValueError):
    """Invalid argument: wrong length, out-of-range id, bad parameter."""


# /class


class SizeCapError(InputError):
    """A problem exceeds an exact-method size cap."""


# /class


class EmbeddingError(EmbeddingUtilError):
    """An embedding could not be built or does not match its problem."""


# /class


class ValidationError(EmbeddingUtilError):
    """Embedding validation failed.

    Parameters
    ----------
    message : str
    report : `~embedding_util.embedding.ValidationReport`, optional

    """

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report

    # /def


# /class


class ConfigError(EmbeddingUtilError):
    """Configuration or stage-file schema error.

    Parameters
    ----------
    message : str
    path : str, optional
        dotted path of the offending key, or the file name.

    """

    def __init__(self, message: str, path: str = ""):
        if path:
            message = f"{path}: {message}"
        super().__init__(message)
        self.path = path

    # /def


# /class


class SamplerError(EmbeddingUtilError):
    """Sampler bookkeeping failure."""


# /class


class RemoteSamplerError(SamplerError):
    """Base class for remote-backend failures."""


# /class


class RemoteNetworkError(RemoteSamplerError):
    """The endpoint could not be reached."""


# /class


class MalformedResponseError(RemoteSamplerError):
    """The endpoint answered with an unparseable or incomplete payload."""


# /class


class RemoteTimeoutError(RemoteSamplerError):
    """The job did not finish before the configured deadline."""


# /class


class RangeViolationError(RemoteSamplerError):
    """The server rejected programmed values outside the hardware range."""


# /class


##############################################################################
# END
