"""Finite soft topological spaces with soft ideals and the cluster operator."""

from .cluster import (
    ClusterContext,
    classify,
    cluster_set,
    cluster_topology,
    decompose,
    is_c_closed,
)
from .core import Carrier, SoftPoint, SoftSet, make_soft_set, parse_soft_set
from .errors import (
    CarrierMismatch,
    InputError,
    PreconditionError,
    ResourceError,
    SoftError,
)
from .ideal import SoftIdeal, full_ideal, principal, trivial_ideal
from .topology import (
    SoftTopology,
    closure,
    derived_set,
    discrete,
    generate_from_subbase,
    included_point,
    indiscrete,
    interior,
    validate_topology,
)

__all__ = [
    "Carrier", "CarrierMismatch", "ClusterContext", "InputError", "PreconditionError",
    "ResourceError", "SoftError", "SoftIdeal", "SoftPoint", "SoftSet", "SoftTopology",
    "classify", "closure", "cluster_set", "cluster_topology", "decompose", "derived_set",
    "discrete", "full_ideal", "generate_from_subbase", "included_point", "indiscrete",
    "interior", "is_c_closed", "make_soft_set", "parse_soft_set", "principal",
    "trivial_ideal", "validate_topology",
]
