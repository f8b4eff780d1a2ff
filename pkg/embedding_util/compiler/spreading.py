# -*- coding: utf-8 -*-

"""Compile Logical Problems onto Embedded Chains.

Routine Listings
----------------
`CompensationConfig`
`chain_strength`
`default_chain_strength`
`uniform_spread`
`susceptibilities`
`apply_susceptibilities`
`compensate`
`rescale`
`compile_problem`

"""

__author__ = "Nathaniel Starkman"

__all__ = [
    "METHODS",
    "CompensationConfig",
    "chain_strength",
    "default_chain_strength",
    "uniform_spread",
    "susceptibilities",
    "apply_susceptibilities",
    "compensate",
    "rescale",
    "compile_problem",
]


##############################################################################
# IMPORTS

# GENERAL

import dataclasses
import warnings
from typing import Any, Dict, Mapping, Optional, Tuple, Union

import numpy as np
from astropy import log
from astropy.utils.exceptions import AstropyUserWarning


# PROJECT-SPECIFIC

from ._problem import PhysicalProblem
from .susceptibility import chi_pair
from ..embedding import Embedding, coupler_map, validate
from ..instances import Instance
from ..topology import PhysicalGraph
from ..utils.decorators import stage
from ..utils.exceptions import InputError, ValidationError


##############################################################################
# PARAMETERS

METHODS = ("none", "susceptibility", "spectral")

# lambda_0 in units of sqrt(sigma^2 N), or an absolute lambda for 3DSG
_DEFAULT_LAMBDA0 = dict(CSG=1.6, BSG=1.6, custom=1.0)
_DEFAULT_LAMBDA = {"3DSG": 2.0}

_Edge = Tuple[int, int]


##############################################################################
# CODE
##############################################################################


@dataclasses.dataclass(frozen=True)
class CompensationConfig:
    """Logical-J compensation settings.

    Parameters
    ----------
    method : {"none", "susceptibility", "spectral"}
    xi : float or "L", optional
        correlation length for the susceptibility method; ``"L"`` (default)
        uses the embedding's chain length, ``numpy.inf`` disables it
    gamma : float, optional
        spectral evaluation point, transverse field over ``B lambda``

    """

    method: str = "none"
    xi: Union[float, str] = "L"
    gamma: float = 1.0

    def __post_init__(self):
        if self.method not in METHODS:
            raise InputError(f"method must be one of {METHODS}, not {self.method!r}")
        if isinstance(self.xi, str):
            if self.xi.lower() in ("inf", "infinity"):
                object.__setattr__(self, "xi", np.inf)
            elif self.xi != "L":
                raise InputError(
                    f"xi must be a positive number or 'L', not {self.xi!r}"
                )
        elif not float(self.xi) > 0:
            raise InputError(f"xi must be positive, not {self.xi}")
        else:
            object.__setattr__(self, "xi", float(self.xi))
        if not float(self.gamma) >= 0:
            raise InputError(f"gamma must be non-negative, not {self.gamma}")

    # /def

    def resolve_xi(self, embedding: Embedding) -> float:
        """Numeric correlation length for `embedding`."""
        if self.xi == "L":
            return float(embedding.chain_length)
        return self.xi

    # /def

    def to_dict(self) -> Dict[str, Any]:
        xi = self.xi
        if not isinstance(xi, str) and np.isinf(xi):
            xi = "inf"
        return dict(method=self.method, xi=xi, gamma=float(self.gamma))

    # /def

    @classmethod
    def from_dict(cls, doc: Mapping[str, Any]) -> "CompensationConfig":
        return cls(**doc)

    # /def


# /class


# ------------------------------------------------------------------------


def chain_strength(instance: Instance, lambda0: float) -> float:
    """Chain strength ``lambda0 * sqrt(sigma^2 N)``.

    Examples
    --------
    >>> from embedding_util.instances import gen_csg
    >>> chain_strength(gen_csg(64, 0), 1.6)
    12.8

    """
    if not lambda0 > 0:
        raise InputError(f"lambda0 must be positive, not {lambda0}")
    return float(lambda0 * np.sqrt(instance.sigma2 * instance.n))


# /def


def default_chain_strength(instance: Instance) -> float:
    """Chain strength that works well per ensemble.

    ``1.6 sqrt(sigma^2 N)`` for clique and biclique spin glasses,
    ``2 sqrt(N)`` for CDMA, and a fixed 2 for the cubic lattice.

    """
    if instance.kind in _DEFAULT_LAMBDA:
        return _DEFAULT_LAMBDA[instance.kind]
    if instance.kind == "CDMA":
        return float(2.0 * np.sqrt(instance.n))
    return chain_strength(instance, _DEFAULT_LAMBDA0.get(instance.kind, 1.0))


# /def


# ------------------------------------------------------------------------


def _spread(
    instance: Instance,
    embedding: Embedding,
    graph: PhysicalGraph,
    lam: float,
    factors: Optional[Mapping[_Edge, float]],
    provenance: Dict[str, Any],
) -> PhysicalProblem:
    """Spread h over chain qubits and ``J * factor`` over couplers."""
    if lam < 0:
        raise InputError(f"chain strength must be non-negative, not {lam}")
    report = validate(embedding, instance, graph)
    if not report.passed:
        raise ValidationError(
            "embedding does not fit the instance: "
            + "; ".join(report.failures()),
            report=report,
        )

    qubits = np.asarray(embedding.qubits)
    col = {q: k for k, q in enumerate(embedding.qubits)}
    h = np.zeros(len(qubits))
    for a, chain in enumerate(embedding.chains):
        for q in chain:
            h[col[q]] = instance.h[a] / len(chain)

    inter, intra = coupler_map(embedding, graph)
    couplers, values, chained = [], [], []
    for (a, b), value in instance.couplings.items():
        cps = inter[(a, b)]
        if factors is not None:
            value = value * factors[(a, b)]
        value = value / len(cps)
        for i, j in cps:
            couplers.append((min(i, j), max(i, j)))
            values.append(value)
            chained.append(False)
    for i, j in intra:
        couplers.append((i, j))
        values.append(-lam)
        chained.append(True)

    return PhysicalProblem(
        graph=graph,
        qubits=qubits,
        h=h,
        couplers=np.asarray(couplers, dtype=np.int64).reshape(-1, 2),
        j=values,
        chain=chained,
        lam=lam,
        provenance=provenance,
    )


# /def


def _provenance(instance, embedding, lam, config) -> Dict[str, Any]:
    return dict(
        instance=instance.id,
        embedding=embedding.id,
        compensation=config.to_dict(),
        chain_strength=float(lam),
    )


# /def


def uniform_spread(
    instance: Instance,
    embedding: Embedding,
    graph: PhysicalGraph,
    lam: float,
) -> PhysicalProblem:
    """Uniform spreading of a logical problem over its chains.

    ``h_a`` is divided equally among the qubits of chain ``a``, ``J_ab``
    equally among the couplers connecting chains ``a`` and ``b``, and
    every coupler inside a chain is set to ``-lam``.

    Parameters
    ----------
    instance : `~embedding_util.instances.Instance`
    embedding : `~embedding_util.embedding.Embedding`
    graph : `~embedding_util.topology.PhysicalGraph`
    lam : float
        chain strength

    Returns
    -------
    problem : `PhysicalProblem`
        unrescaled, ``scale == 1``

    Raises
    ------
    ValidationError
        the embedding does not validate against `instance` and `graph`

    """
    return _spread(
        instance,
        embedding,
        graph,
        lam,
        None,
        _provenance(instance, embedding, lam, CompensationConfig("none")),
    )


# /def


# ------------------------------------------------------------------------


def susceptibilities(
    instance: Instance,
    embedding: Embedding,
    graph: PhysicalGraph,
    xi: float,
) -> Dict[_Edge, float]:
    """:func:`~embedding_util.compiler.chi_pair` for every logical edge."""
    return {
        (a, b): chi_pair(embedding, graph, a, b, xi)
        for a, b in instance.couplings
    }


# /def


def apply_susceptibilities(
    instance: Instance,
    embedding: Embedding,
    graph: PhysicalGraph,
    lam: float,
    chi: Mapping[_Edge, float],
    config: Optional[CompensationConfig] = None,
) -> PhysicalProblem:
    """Spread ``J_ab N / chi_ab`` with N the geometric mean of `chi`.

    Parameters
    ----------
    chi : mapping
        logical edge ``(a, b)`` -> positive susceptibility
    config : `CompensationConfig`, optional
        recorded in the provenance

    Notes
    -----
    The factors ``N / chi_ab`` have geometric mean 1, so the typical
    energy of chain-aligned states is unchanged. If every chi is 1 the
    result is identical to :func:`uniform_spread`.

    """
    config = CompensationConfig("susceptibility") if config is None else config
    edges = list(instance.couplings)
    if edges:
        values = np.array([chi[e] for e in edges], dtype=float)
        if np.any(~(values > 0)):
            raise InputError("susceptibilities must be positive")
        logs = np.log(values)
        factors = dict(zip(edges, np.exp(logs.mean() - logs).tolist()))
        log.debug(
            f"compensation factors in [{min(factors.values()):.4g}, "
            f"{max(factors.values()):.4g}]"
        )
    else:
        factors = {}

    return _spread(
        instance,
        embedding,
        graph,
        lam,
        factors,
        _provenance(instance, embedding, lam, config),
    )


# /def


@stage(name="compile")
def compensate(
    instance: Instance,
    embedding: Embedding,
    graph: PhysicalGraph,
    lam: float,
    config: Optional[CompensationConfig] = None,
) -> PhysicalProblem:
    """Logical-J compensated spreading.

    Programmed couplings are ``J_ab N / chi_ab`` spread uniformly over the
    connecting couplers, with ``chi_ab`` from :func:`chi_pair` (method
    "susceptibility") or from the two-chain spectra (method "spectral").
    Fields are spread as in :func:`uniform_spread`.

    Parameters
    ----------
    instance : `~embedding_util.instances.Instance`
    embedding : `~embedding_util.embedding.Embedding`
    graph : `~embedding_util.topology.PhysicalGraph`
    lam : float
        chain strength
    config : `CompensationConfig`, optional
        default is no compensation

    Returns
    -------
    problem : `PhysicalProblem`
        unrescaled

    """
    config = CompensationConfig() if config is None else config

    if config.method == "none":
        return uniform_spread(instance, embedding, graph, lam)

    if config.method == "spectral":
        from ..spectral import spectral_compensate

        return spectral_compensate(
            instance, embedding, graph, lam, gamma=config.gamma
        )

    xi = config.resolve_xi(embedding)
    chi = susceptibilities(instance, embedding, graph, xi)
    return apply_susceptibilities(instance, embedding, graph, lam, chi, config)


# /def


# ------------------------------------------------------------------------


def rescale(
    problem: PhysicalProblem,
    chain_range: float = 2.0,
    coupler_range: float = 1.0,
    field_range: float = 2.0,
) -> PhysicalProblem:
    """Scale a problem into the programmable range.

    ``R = min(chain_range / lam, coupler_range / max|J|, field_range / max|h|)``
    over non-chain couplers and fields, applied to the unscaled values.

    Parameters
    ----------
    problem : `PhysicalProblem`
    chain_range : float, optional
        2 for the extended J-range over chains (default), 1 for the
        regular range

    Returns
    -------
    problem : `PhysicalProblem`
        with ``scale = R``

    Raises
    ------
    InputError
        non-positive chain strength or nothing to scale

    Examples
    --------
    >>> from embedding_util.embedding import Embedding
    >>> from embedding_util.instances import Instance
    >>> from embedding_util.topology import build_chimera
    >>> g = build_chimera(1)
    >>> inst = Instance.from_couplings(2, {(0, 1): 0.5})
    >>> problem = rescale(uniform_spread(inst, Embedding([[0, 4], [1, 5]]), g, 2.0))
    >>> problem.scale
    1.0

    """
    if not problem.lam > 0:
        raise InputError(
            f"rescaling needs a positive chain strength, not {problem.lam}"
        )

    base_j = problem.j / problem.scale
    base_h = problem.h / problem.scale
    other = np.abs(base_j[~problem.chain])

    bounds = dict(chain=chain_range / problem.lam)
    if other.size and other.max() > 0:
        bounds["coupler"] = coupler_range / other.max()
    if np.abs(base_h).max() > 0:
        bounds["field"] = field_range / np.abs(base_h).max()
    if problem.num_chain_couplers == 0 and len(bounds) == 1:
        raise InputError("all-zero problem, rescale factor undefined")

    binding = min(bounds, key=bounds.get)
    factor = bounds[binding]
    if binding == "field":
        warnings.warn(
            f"rescale factor {factor:.4g} set by the field bound",
            AstropyUserWarning,
        )
    log.debug(f"rescale R={factor:.6g} ({binding} bound)")

    return problem.scaled(factor / problem.scale)


# /def


def compile_problem(
    instance: Instance,
    embedding: Embedding,
    graph: PhysicalGraph,
    lam: Optional[float] = None,
    config: Optional[CompensationConfig] = None,
    chain_range: float = 2.0,
) -> PhysicalProblem:
    """Compensate (or spread) and rescale in one step.

    `lam` defaults to :func:`default_chain_strength`.

    """
    lam = default_chain_strength(instance) if lam is None else float(lam)
    problem = compensate(instance, embedding, graph, lam, config)
    problem = rescale(problem, chain_range=chain_range)
    log.info(
        f"compiled {instance.kind} n={instance.n}: lambda={lam:.4g}, "
        f"R={problem.scale:.4g}, {problem.num_qubits} qubits"
    )
    return problem


# /def


##############################################################################
# END
