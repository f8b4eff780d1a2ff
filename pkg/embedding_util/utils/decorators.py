# -*- coding: utf-8 -*-

"""Decorators.

Routine Listings
----------------
`stage`

"""

__author__ = "Nathaniel Starkman"

__all__ = ["stage"]


##############################################################################
# IMPORTS

# GENERAL

import functools
import time
from typing import Callable, Optional

import wrapt
from astropy import log


# PROJECT-SPECIFIC

from .exceptions import EmbeddingUtilError


##############################################################################
# CODE
##############################################################################


def stage(
    function: Optional[Callable] = None, *, name: Optional[str] = None
) -> Callable:
    """Mark a function as a pipeline stage.

    The wrapped function logs its wall time at DEBUG level and tags any
    package error raised inside it with the stage name, so the pipeline
    can report which stage of a cell failed.

    Parameters
    ----------
    function : Callable or None, optional
        the function to be decorated
        if None, then returns decorator to apply.
    name : str, optional
        stage name, defaults to the function name.
        key-word only argument

    Returns
    -------
    wrapper : Callable
        includes the original function in a method `.__wrapped__`

    """
    if function is None:  # allowing for optional arguments
        return functools.partial(stage, name=name)

    stage_name = name or function.__name__

    @wrapt.decorator
    def wrapper(wrapped, instance, args, kwargs):
        start = time.perf_counter()
        try:
            return wrapped(*args, **kwargs)
        except EmbeddingUtilError as e:
            if e.stage is None:
                e.stage = stage_name
            raise
        finally:
            log.debug(
                f"stage {stage_name} took {time.perf_counter() - start:.3g} s"
            )

    # /def

    return wrapper(function)


# /def


##############################################################################
# END
