# -*- coding: utf-8 -*-

"""Sampling-Time Model.

All times are `~astropy.units.Quantity` in microseconds. Plain numbers
are read as microseconds.

Routine Listings
----------------
`to_microseconds`
`TimingModel`
`access_time`
`samples_in_budget`
`anneal_time_rule`
`time_to_solution`

"""

__author__ = "Nathaniel Starkman"

__all__ = [
    "to_microseconds",
    "TimingModel",
    "access_time",
    "samples_in_budget",
    "anneal_time_rule",
    "time_to_solution",
]


##############################################################################
# IMPORTS

# GENERAL

import dataclasses
import math
from typing import Any, Dict, Union

import astropy.units as u
import numpy as np


# PROJECT-SPECIFIC

from ..utils.exceptions import InputError
from .success import samples_to_solution


##############################################################################
# PARAMETERS

_TimeLike = Union[float, u.Quantity]


##############################################################################
# CODE
##############################################################################


def to_microseconds(value: _TimeLike) -> u.Quantity:
    """Quantity in microseconds; numbers are taken as microseconds."""
    if isinstance(value, u.Quantity):
        return value.to(u.us)
    return float(value) * u.us


# /def


@dataclasses.dataclass(frozen=True)
class TimingModel:
    """Per-job and per-read times of an annealer.

    Parameters
    ----------
    t_p : Quantity or float, optional
        programming time, once per job
    t_rd : Quantity or float, optional
        read-out plus delay, per read
    t_a : Quantity or float, optional
        anneal time, per read
    t_m, t_n : Quantity or float, optional
        mapping and network times, once per job

    Examples
    --------
    >>> TimingModel().t_rd
    <Quantity 219. us>

    """

    t_p: _TimeLike = 10000.0
    t_rd: _TimeLike = 219.0
    t_a: _TimeLike = 20.0
    t_m: _TimeLike = 0.0
    t_n: _TimeLike = 0.0

    def __post_init__(self):
        for field in dataclasses.fields(self):
            value = to_microseconds(getattr(self, field.name))
            if not value.value >= 0:
                raise InputError(f"{field.name} must be non-negative, not {value}")
            object.__setattr__(self, field.name, value)

    # /def

    @property
    def per_read(self) -> u.Quantity:
        """``t_a + t_r + t_d``."""
        return self.t_a + self.t_rd

    # /def

    def with_anneal_time(self, t_a: _TimeLike) -> "TimingModel":
        return dataclasses.replace(self, t_a=t_a)

    # /def

    def to_dict(self) -> Dict[str, Any]:
        """Values in microseconds."""
        return {
            f.name: float(getattr(self, f.name).to_value(u.us))
            for f in dataclasses.fields(self)
        }

    # /def


# /class


# ------------------------------------------------------------------------


def access_time(num_samples: float, timing: TimingModel = TimingModel()) -> u.Quantity:
    """Wall time of one job drawing `num_samples` reads.

    ``t_p + n (t_a + t_r + t_d) + t_m + t_n``. `num_samples` may be
    fractional or infinite.

    Examples
    --------
    >>> access_time(0)
    <Quantity 10000. us>

    """
    if not num_samples >= 0:
        raise InputError(f"sample count must be non-negative, not {num_samples}")
    return timing.t_p + num_samples * timing.per_read + timing.t_m + timing.t_n


# /def


def samples_in_budget(
    budget: _TimeLike = 1 * u.s, timing: TimingModel = TimingModel()
) -> int:
    """Reads that fit in `budget` of anneal and read-out time.

    ``floor(budget / (t_a + t_r + t_d))``; programming time is not charged.

    Examples
    --------
    >>> samples_in_budget(timing=TimingModel(t_a=219))
    2283

    """
    ratio = (to_microseconds(budget) / timing.per_read).to_value(u.one)
    return int(math.floor(ratio))


# /def


def anneal_time_rule(timing: TimingModel = TimingModel()) -> u.Quantity:
    """Anneal time at which annealing and read-out cost the same, ``t_r + t_d``."""
    return timing.t_rd


# /def


def time_to_solution(
    p: float,
    timing: TimingModel = TimingModel(),
    confidence: float = 0.99,
    *,
    form: str = "anneal",
) -> u.Quantity:
    """Time to reach the target with probability `confidence`.

    Parameters
    ----------
    p : float
        per-read success probability
    timing : `TimingModel`, optional
    confidence : float, optional
    form : {"anneal", "access"}, optional
        "anneal" charges only ``n t_a``; "access" charges the full
        :func:`access_time` of ``n`` reads

    Returns
    -------
    Quantity
        infinite for ``p == 0``

    """
    n = samples_to_solution(p, confidence)
    if form == "anneal":
        return n * timing.t_a if np.isfinite(n) else np.inf * u.us
    elif form == "access":
        return access_time(n, timing)
    raise InputError(f"form must be 'anneal' or 'access', not {form!r}")


# /def


##############################################################################
# END
