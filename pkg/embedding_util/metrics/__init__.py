# -*- coding: utf-8 -*-

"""Success, Timing, Edge-Energy and Pattern Metrics.

Routine Listings
----------------
success : success rate, samples to solution, ensemble statistics
timing : the sampling-time model
edge_energy : ensemble-average edge energies
patterns : connection-pattern classes

"""

__author__ = "Nathaniel Starkman"


##############################################################################
# IMPORTS

from .success import (
    success_rate,
    samples_to_solution,
    energy_density,
    update_count_histogram,
    ensemble_summary,
    bootstrap_interval,
)
from .timing import (
    to_microseconds,
    TimingModel,
    access_time,
    samples_in_budget,
    anneal_time_rule,
    time_to_solution,
)
from .patterns import PatternClass, pattern_classes, edge_classes
from .edge_energy import EdgeEnergies, eaee

# import top-level
from . import success, timing, patterns, edge_energy  # noqa


##############################################################################
# END
