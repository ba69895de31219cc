"""Safe numbers of Cartesian products of complete graphs."""

from .alpha import (
    AlphaResult,
    Partition2,
    alpha,
    check_lemma26,
    closed_form,
    enumerate_partitions,
    safe_number,
)
from .construct import ConstructionResult, construct_half_cut, construct_min
from .errors import (
    InternalInvariantError,
    InvalidInputError,
    ResourceLimitError,
    SafeSetError,
    UnsupportedInputError,
)
from .graph import Graph, VertexSet, components, has_edge_between, is_connected
from .oracle import OracleResult, min_safe_set, oracle_full
from .product import ProductGraph, build_product, cartesian_product
from .verify import (
    ComponentProjection,
    SafetyReport,
    check_lemma24,
    component_projection,
    is_vertex_cut,
    verify,
)

__all__ = [
    "AlphaResult",
    "ComponentProjection",
    "ConstructionResult",
    "Graph",
    "InternalInvariantError",
    "InvalidInputError",
    "OracleResult",
    "Partition2",
    "ProductGraph",
    "ResourceLimitError",
    "SafeSetError",
    "SafetyReport",
    "UnsupportedInputError",
    "VertexSet",
    "alpha",
    "build_product",
    "cartesian_product",
    "check_lemma24",
    "check_lemma26",
    "closed_form",
    "component_projection",
    "components",
    "construct_half_cut",
    "construct_min",
    "enumerate_partitions",
    "has_edge_between",
    "is_connected",
    "is_vertex_cut",
    "min_safe_set",
    "oracle_full",
    "safe_number",
    "verify",
]
