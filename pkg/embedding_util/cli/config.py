# -*- coding: utf-8 -*-

"""Experiment Configuration.

An experiment is an instance ensemble on one embedding, compiled,
sampled and mapped once per sweep cell. The configuration is a JSON
document; every section is validated on load and errors carry the dotted
path of the offending key.

Routine Listings
----------------
`EnsembleSpec`
`EmbeddingSpec`
`CompileSpec`
`SamplerSpec`
`MappingSpec`
`SweepSpec`
`ExperimentConfig`
`load_config`

"""

__author__ = "Nathaniel Starkman"

__all__ = [
    "AXES",
    "EnsembleSpec",
    "EmbeddingSpec",
    "CompileSpec",
    "SamplerSpec",
    "MappingSpec",
    "SweepSpec",
    "ExperimentConfig",
    "load_config",
]


##############################################################################
# IMPORTS

# GENERAL

import dataclasses
import itertools
import math
import os
from typing import Any, Dict, Iterator, List, Mapping, Optional, Tuple, Union

import numpy as np


# PROJECT-SPECIFIC

from ..compiler import CompensationConfig, chain_strength, default_chain_strength
from ..embedding import Embedding, embed_biclique, embed_clique, embed_cubic
from ..instances import (
    Instance,
    gen_3dsg,
    gen_bsg,
    gen_cdma,
    gen_csg,
)
from ..metrics import TimingModel
from ..postprocess import MAPPINGS
from ..sampler import BACKENDS, SamplerParams
from ..topology import PhysicalGraph, build_chimera
from ..utils.exceptions import ConfigError, InputError
from ..utils.io import read_json


##############################################################################
# PARAMETERS

# sweep axes, in the order cells are enumerated
AXES = ("lambda0", "inv_xi", "anneal_time", "beta")

ENSEMBLES = ("CSG", "BSG", "3DSG", "CDMA")
EMBEDDINGS = ("clique", "biclique", "cubic")

_NATURAL_EMBEDDING = dict(CSG="clique", BSG="biclique", CDMA="clique")
_NATURAL_EMBEDDING["3DSG"] = "cubic"


##############################################################################
# CODE
##############################################################################


def _section(
    cls, doc: Any, path: str, convert: Optional[Dict[str, Any]] = None
):
    """Build dataclass `cls` from mapping `doc`, with path-aware errors."""
    if doc is None:
        doc = {}
    if not isinstance(doc, Mapping):
        raise ConfigError("must be an object", path)
    known = {f.name for f in dataclasses.fields(cls)}
    unknown = sorted(set(doc) - known)
    if unknown:
        raise ConfigError(f"unknown keys {unknown}", path)
    kwargs = dict(doc)
    for key, func in (convert or {}).items():
        if key in kwargs:
            try:
                kwargs[key] = func(kwargs[key])
            except ConfigError as e:
                raise ConfigError(str(e), f"{path}.{key}")
            except (InputError, TypeError, ValueError) as e:
                raise ConfigError(str(e), f"{path}.{key}")
    try:
        return cls(**kwargs)
    except ConfigError as e:
        raise ConfigError(str(e), path)
    except (InputError, TypeError, ValueError) as e:
        raise ConfigError(str(e), path)


# /def


# ------------------------------------------------------------------------


@dataclasses.dataclass(frozen=True)
class EnsembleSpec:
    """Instance ensemble.

    Parameters
    ----------
    kind : {"CSG", "BSG", "3DSG", "CDMA"}
    n : int
        variables; for 3DSG the product of `dims`
    count : int
        number of instances; instance ``k`` uses seed ``seed + k``
    seed : int
    dims : (int, int, int), optional
        3DSG lattice
    load, snr_db : float, optional
        CDMA channel

    """

    kind: str = "CSG"
    n: Optional[int] = None
    count: int = 10
    seed: int = 0
    dims: Optional[Tuple[int, int, int]] = None
    load: float = 1.4
    snr_db: float = 7.0

    def __post_init__(self):
        if self.kind not in ENSEMBLES:
            raise ConfigError(f"kind must be one of {ENSEMBLES}, not {self.kind!r}")
        if self.kind == "3DSG":
            if self.dims is None or len(self.dims) != 3:
                raise ConfigError("3DSG needs dims = [Lx, Ly, Lz]")
            dims = tuple(int(d) for d in self.dims)
            object.__setattr__(self, "dims", dims)
            if self.n is not None and self.n != int(np.prod(dims)):
                raise ConfigError(f"n = {self.n} does not match dims {dims}")
            object.__setattr__(self, "n", int(np.prod(dims)))
        elif self.n is None or int(self.n) < 1:
            raise ConfigError(f"n must be a positive integer, not {self.n}")
        if int(self.count) < 1:
            raise ConfigError(f"count must be positive, not {self.count}")
        if int(self.seed) < 0:
            raise ConfigError(f"seed must be non-negative, not {self.seed}")

    # /def

    def generate(self) -> List[Instance]:
        """The ensemble's instances, in seed order."""
        seeds = range(self.seed, self.seed + self.count)
        if self.kind == "CSG":
            return [gen_csg(self.n, s) for s in seeds]
        elif self.kind == "BSG":
            return [gen_bsg(self.n, s) for s in seeds]
        elif self.kind == "3DSG":
            return [gen_3dsg(self.dims, s) for s in seeds]
        return [
            gen_cdma(self.n, self.load, self.snr_db, seed=s) for s in seeds
        ]

    # /def


# /class


@dataclasses.dataclass(frozen=True)
class EmbeddingSpec:
    """Embedding generator and Chimera size.

    Parameters
    ----------
    kind : {"clique", "biclique", "cubic"}, optional
        defaults to the ensemble's natural embedding
    m : int, optional
        defaults to the smallest Chimera the embedding fits

    """

    kind: Optional[str] = None
    m: Optional[int] = None

    def __post_init__(self):
        if self.kind is not None and self.kind not in EMBEDDINGS:
            raise ConfigError(
                f"kind must be one of {EMBEDDINGS}, not {self.kind!r}"
            )
        if self.m is not None and int(self.m) < 1:
            raise ConfigError(f"m must be positive, not {self.m}")

    # /def

    def resolve_kind(self, ensemble: EnsembleSpec) -> str:
        return self.kind or _NATURAL_EMBEDDING[ensemble.kind]

    # /def

    def smallest_m(self, ensemble: EnsembleSpec) -> int:
        kind = self.resolve_kind(ensemble)
        if kind == "clique":
            return math.ceil(ensemble.n / 4)
        elif kind == "biclique":
            return math.ceil(ensemble.n / 8)
        if ensemble.dims is None:
            raise ConfigError("the cubic embedding needs a 3DSG ensemble")
        return 2 * max(ensemble.dims[:2])

    # /def

    def build(self, ensemble: EnsembleSpec) -> Tuple[PhysicalGraph, Embedding]:
        """Chimera graph and embedding for `ensemble`."""
        kind = self.resolve_kind(ensemble)
        graph = build_chimera(self.m or self.smallest_m(ensemble))
        if kind == "clique":
            return graph, embed_clique(ensemble.n, graph)
        elif kind == "biclique":
            return graph, embed_biclique(ensemble.n, graph)
        if ensemble.dims is None:
            raise ConfigError("the cubic embedding needs a 3DSG ensemble")
        return graph, embed_cubic(ensemble.dims, graph)

    # /def


# /class


@dataclasses.dataclass(frozen=True)
class CompileSpec:
    """Chain strength, compensation and rescaling.

    Parameters
    ----------
    lambda0 : float, optional
        chain strength in units of ``sqrt(sigma^2 N)``
    lam : float, optional
        absolute chain strength, overrides `lambda0`
    method, xi, gamma
        see `~embedding_util.compiler.CompensationConfig`
    chain_range : float, optional
        programmable chain-coupler range, 2 (extended) or 1 (regular)

    """

    lambda0: Optional[float] = None
    lam: Optional[float] = None
    method: str = "none"
    xi: Union[float, str] = "L"
    gamma: float = 1.0
    chain_range: float = 2.0

    def __post_init__(self):
        self.compensation()  # validates method, xi, gamma
        if self.lambda0 is not None and not float(self.lambda0) > 0:
            raise ConfigError(f"lambda0 must be positive, not {self.lambda0}")
        if self.lam is not None and not float(self.lam) >= 0:
            raise ConfigError(f"lam must be non-negative, not {self.lam}")
        if not float(self.chain_range) > 0:
            raise ConfigError(
                f"chain_range must be positive, not {self.chain_range}"
            )

    # /def

    def compensation(self, inv_xi: Optional[float] = None) -> CompensationConfig:
        """Compensation settings, with `inv_xi` overriding ``xi``."""
        xi = self.xi
        if inv_xi is not None:
            xi = np.inf if inv_xi == 0 else 1.0 / inv_xi
        return CompensationConfig(method=self.method, xi=xi, gamma=self.gamma)

    # /def

    def chain_strength(
        self, instance: Instance, lambda0: Optional[float] = None
    ) -> float:
        """Absolute chain strength for `instance`.

        A swept `lambda0` wins over ``lam``, which wins over the
        configured ``lambda0``; with none set the ensemble default
        applies.

        """
        if lambda0 is not None:
            return chain_strength(instance, lambda0)
        if self.lam is not None:
            return float(self.lam)
        if self.lambda0 is not None:
            return chain_strength(instance, self.lambda0)
        return default_chain_strength(instance)

    # /def


# /class


@dataclasses.dataclass(frozen=True)
class SamplerSpec:
    """Sampler backend and parameters.

    Parameters
    ----------
    backend : {"local", "remote"}
    endpoint : str, optional
        remote sampler URL
    params : `~embedding_util.sampler.SamplerParams`
        ``seed`` is replaced per cell and instance
    sweeps_per_us : float, optional
        sweeps per microsecond when the anneal time is swept

    """

    backend: str = "local"
    endpoint: Optional[str] = None
    params: SamplerParams = SamplerParams(num_reads=100)
    sweeps_per_us: float = 1.0

    def __post_init__(self):
        if self.backend not in BACKENDS:
            raise ConfigError(
                f"backend must be one of {BACKENDS}, not {self.backend!r}"
            )
        if not float(self.sweeps_per_us) > 0:
            raise ConfigError(
                f"sweeps_per_us must be positive, not {self.sweeps_per_us}"
            )

    # /def

    def sweeps_for(self, anneal_time: float) -> int:
        """Sweeps standing in for `anneal_time` microseconds."""
        return max(1, int(round(anneal_time * self.sweeps_per_us)))

    # /def


# /class


@dataclasses.dataclass(frozen=True)
class MappingSpec:
    """Sample mappings to apply, and the seed of their tie-breaks."""

    methods: Tuple[str, ...] = ("MV",)
    seed: int = 0

    def __post_init__(self):
        methods = tuple(self.methods)
        if not methods:
            raise ConfigError("at least one mapping is needed")
        bad = [m for m in methods if m not in MAPPINGS]
        if bad:
            raise ConfigError(f"unknown mappings {bad}, choose from {MAPPINGS}")
        object.__setattr__(self, "methods", methods)

    # /def


# /class


@dataclasses.dataclass(frozen=True)
class SweepSpec:
    """Grids over the sweep axes; the cells are their cross product.

    Parameters
    ----------
    lambda0 : list of float
    inv_xi : list of float
        inverse correlation lengths, 0 meaning no compensation length
    anneal_time : list of float
        microseconds
    beta : list of float

    """

    lambda0: Tuple[float, ...] = ()
    inv_xi: Tuple[float, ...] = ()
    anneal_time: Tuple[float, ...] = ()
    beta: Tuple[float, ...] = ()

    def __post_init__(self):
        for axis in AXES:
            values = tuple(float(v) for v in getattr(self, axis))
            if any(not np.isfinite(v) or v < 0 for v in values):
                raise ConfigError(f"{axis} values must be finite and >= 0")
            if axis in ("lambda0", "anneal_time", "beta") and 0.0 in values:
                raise ConfigError(f"{axis} values must be positive")
            object.__setattr__(self, axis, values)

    # /def

    @property
    def axes(self) -> Tuple[str, ...]:
        """The swept axes, in enumeration order."""
        return tuple(a for a in AXES if getattr(self, a))

    def cells(self) -> Iterator[Dict[str, float]]:
        """Axis values of every cell; a single empty cell if nothing is swept."""
        axes = self.axes
        for values in itertools.product(*(getattr(self, a) for a in axes)):
            yield dict(zip(axes, values))

    # /def


# /class


# ------------------------------------------------------------------------


@dataclasses.dataclass(frozen=True)
class ExperimentConfig:
    """A full experiment.

    Parameters
    ----------
    name : str
    ensemble : `EnsembleSpec`
    embedding : `EmbeddingSpec`
    compile : `CompileSpec`
    sampler : `SamplerSpec`
    mapping : `MappingSpec`
    sweep : `SweepSpec`
    timing : `~embedding_util.metrics.TimingModel`
    seed : int
        base seed of the per-cell streams
    output : str
        output directory
    description : str

    """

    name: str = "experiment"
    ensemble: EnsembleSpec = EnsembleSpec(n=16)
    embedding: EmbeddingSpec = EmbeddingSpec()
    compile: CompileSpec = CompileSpec()
    sampler: SamplerSpec = SamplerSpec()
    mapping: MappingSpec = MappingSpec()
    sweep: SweepSpec = SweepSpec()
    timing: TimingModel = TimingModel()
    seed: int = 0
    output: str = "results"
    description: str = ""

    def __post_init__(self):
        if int(self.seed) < 0:
            raise ConfigError(f"seed must be non-negative, not {self.seed}", "seed")
        kind = self.embedding.resolve_kind(self.ensemble)
        if kind == "cubic" and self.ensemble.kind != "3DSG":
            raise ConfigError("the cubic embedding needs a 3DSG ensemble", "embedding")
        if self.sweep.inv_xi and self.compile.method != "susceptibility":
            raise ConfigError(
                "sweeping inv_xi needs method 'susceptibility'", "compile.method"
            )

    # /def

    @property
    def cells(self) -> List[Dict[str, float]]:
        return list(self.sweep.cells())

    # /def

    @classmethod
    def from_dict(cls, doc: Mapping[str, Any]) -> "ExperimentConfig":
        """Validate and build from a JSON document.

        Raises
        ------
        ConfigError
            with the dotted path of the first invalid key

        """
        if not isinstance(doc, Mapping):
            raise ConfigError("configuration must be an object")
        doc = {
            k: v
            for k, v in doc.items()
            if k not in ("schema", "schema_version", "id")
        }

        def sampler_params(params):
            return SamplerParams.from_dict(params)

        def timing(values):
            if not isinstance(values, Mapping):
                raise ConfigError("must be an object")
            return TimingModel(**values)

        sections = dict(
            ensemble=_section(
                EnsembleSpec, doc.get("ensemble"), "ensemble",
                dict(dims=lambda d: None if d is None else tuple(d)),
            ),
            embedding=_section(EmbeddingSpec, doc.get("embedding"), "embedding"),
            compile=_section(CompileSpec, doc.get("compile"), "compile"),
            sampler=_section(
                SamplerSpec, doc.get("sampler"), "sampler",
                dict(params=sampler_params),
            ),
            mapping=_section(
                MappingSpec, doc.get("mapping"), "mapping", dict(methods=tuple)
            ),
            sweep=_section(SweepSpec, doc.get("sweep"), "sweep"),
        )
        if "timing" in doc:
            try:
                sections["timing"] = timing(doc["timing"])
            except (ConfigError, InputError, TypeError) as e:
                raise ConfigError(str(e), "timing")

        top = {k: doc[k] for k in ("name", "seed", "output", "description") if k in doc}
        unknown = sorted(set(doc) - set(sections) - set(top) - {"timing"})
        if unknown:
            raise ConfigError(f"unknown keys {unknown}")
        return cls(**top, **sections)

    # /def

    def to_dict(self) -> Dict[str, Any]:
        doc = dataclasses.asdict(
            dataclasses.replace(self, timing=TimingModel(), sampler=SamplerSpec())
        )
        doc["timing"] = self.timing.to_dict()
        doc["sampler"] = dict(
            backend=self.sampler.backend,
            endpoint=self.sampler.endpoint,
            params=self.sampler.params.to_dict(),
            sweeps_per_us=self.sampler.sweeps_per_us,
        )
        doc["compile"]["xi"] = self.compile.compensation().to_dict()["xi"]
        doc["mapping"]["methods"] = list(self.mapping.methods)
        for axis in AXES:
            doc["sweep"][axis] = list(doc["sweep"][axis])
        if doc["ensemble"]["dims"] is not None:
            doc["ensemble"]["dims"] = list(doc["ensemble"]["dims"])
        return doc

    # /def


# /class


def load_config(path: Union[str, os.PathLike]) -> ExperimentConfig:
    """Read and validate an experiment configuration file."""
    doc = read_json(path)
    try:
        return ExperimentConfig.from_dict(doc)
    except ConfigError as e:
        raise ConfigError(str(e), os.fspath(path))


# /def


##############################################################################
# END
