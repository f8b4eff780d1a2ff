# -*- coding: utf-8 -*-

"""Success Rates and Ensemble Statistics.

Routine Listings
----------------
`success_rate`
`samples_to_solution`
`energy_density`
`update_count_histogram`
`ensemble_summary`
`bootstrap_interval`

"""

__author__ = "Nathaniel Starkman"

__all__ = [
    "success_rate",
    "samples_to_solution",
    "energy_density",
    "update_count_histogram",
    "ensemble_summary",
    "bootstrap_interval",
]


##############################################################################
# IMPORTS

# GENERAL

from typing import Callable, Dict, Iterable, Optional, Sequence, Tuple

import numpy as np
from astropy.stats import bootstrap
from astropy.utils.misc import NumpyRNGContext


# PROJECT-SPECIFIC

from ..postprocess import LogicalSampleSet
from ..utils import STREAMS, make_rng
from ..utils.exceptions import InputError


##############################################################################
# CODE
##############################################################################


def success_rate(
    logical: LogicalSampleSet,
    target_energy: Optional[float],
    atol: float = 1e-9,
) -> float:
    """Fraction of physical reads whose sample reaches `target_energy`.

    The denominator is ``logical.num_reads``, so reads a mapping discarded
    (the A filter drops broken chains) count as failures.

    Raises
    ------
    InputError
        no reads or no target energy

    Examples
    --------
    >>> from embedding_util.postprocess import LogicalSampleSet
    >>> logical = LogicalSampleSet([[1]] * 4, [-1.0, -1.0, 1.0, 1.0], "MV")
    >>> success_rate(logical, -1.0)
    0.5
    >>> kept = LogicalSampleSet([[1]] * 2, [-1.0, 1.0], "A",
    ...                         provenance=dict(num_reads=4))
    >>> success_rate(kept, -1.0)
    0.25

    """
    if target_energy is None:
        raise InputError("success rate needs a target energy")
    num_reads = logical.num_reads
    if num_reads == 0:
        raise InputError("success rate of an empty sample set")
    hits = np.count_nonzero(logical.energies <= target_energy + atol)
    return float(hits / num_reads)


# /def


def samples_to_solution(p: float, confidence: float = 0.99) -> float:
    """Expected reads to see the target at least once with `confidence`.

    ``log(1 - X) / log(1 - p)``; infinite for ``p == 0`` and 1 for ``p == 1``.

    Examples
    --------
    >>> round(samples_to_solution(0.5), 4)
    6.6439

    """
    if not 0 <= p <= 1:
        raise InputError(f"p must be in [0, 1], not {p}")
    if not 0 < confidence < 1:
        raise InputError(f"confidence must be in (0, 1), not {confidence}")
    if p == 0:
        return np.inf
    if p == 1:
        return 1.0
    return float(np.log1p(-confidence) / np.log1p(-p))


# /def


def energy_density(
    energies: Sequence[float], n: int, reference: float = 0.0
) -> np.ndarray:
    """Energies per ``N**1.5`` relative to `reference`."""
    return (np.asarray(energies, dtype=float) - reference) * float(n) ** -1.5


# /def


def update_count_histogram(
    logicals: Iterable[LogicalSampleSet],
) -> np.ndarray:
    """Counts of greedy-descent updates over all samples.

    Returns
    -------
    counts : ndarray of int
        ``counts[k]`` samples needed ``k`` updates

    """
    updates = [np.asarray(s.gd_updates) for s in logicals]
    updates = np.concatenate(updates) if updates else np.zeros(0, dtype=int)
    return np.bincount(updates.astype(np.int64))


# /def


# ------------------------------------------------------------------------


def ensemble_summary(values: Sequence[float]) -> Dict[str, float]:
    """Median, mean and quartiles over instances.

    Infinite entries, e.g. the time to solution of an unsolved instance,
    are allowed.

    """
    values = np.asarray(values, dtype=float)
    if values.size == 0:
        raise InputError("summary of an empty ensemble")
    if np.isnan(values).any():
        raise InputError("summary of values containing NaN")
    median = np.median(values)
    # interpolating between two infinities gives NaN
    q25, q75 = np.nan_to_num(
        np.percentile(values, [25, 75]), nan=np.inf, posinf=np.inf
    )
    return dict(
        count=int(values.size),
        median=float(median),
        mean=float(np.mean(values)),
        q25=float(q25),
        q75=float(q75),
        min=float(values.min()),
        max=float(values.max()),
    )


# /def


def bootstrap_interval(
    values: Sequence,
    statistic: Callable = np.median,
    confidence: float = 0.95,
    num_resamples: int = 1000,
    seed: int = 0,
) -> Tuple[float, float]:
    """Percentile bootstrap interval of `statistic` over `values`.

    Resamples are drawn under a global numpy seed taken from stream
    ``(6,)``, so the interval is reproducible.

    Parameters
    ----------
    values : sequence
        one entry per instance; the first axis is resampled
    statistic : callable, optional
        maps a resampled array to a scalar
    confidence : float, optional
    num_resamples : int, optional
    seed : int, optional

    """
    values = np.asarray(values)
    if len(values) < 2:
        raise InputError("bootstrap needs at least two values")
    if not 0 < confidence < 1:
        raise InputError(f"confidence must be in (0, 1), not {confidence}")

    numpy_seed = int(make_rng(seed, STREAMS["bootstrap"]).integers(2 ** 32))
    with NumpyRNGContext(numpy_seed):
        stats = bootstrap(values, bootnum=num_resamples, bootfunc=statistic)

    tail = 50 * (1 - confidence)
    lo, hi = np.percentile(stats, [tail, 100 - tail])
    return float(lo), float(hi)


# /def


##############################################################################
# END
