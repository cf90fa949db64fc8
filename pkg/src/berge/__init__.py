"""Berge-F extremal toolkit: containment detection, constructions,
threshold bounds and exact small-case oracles."""

from .core import Graph, Hypergraph, VertexPartition, blowup, contract, is_linear, shadow
from .detect import BergeCertificate, contains_berge, count_f_copies_in_shadow, verify_certificate
from .embed import ResourceExhausted

__version__ = "0.1.0"

__all__ = [
    "BergeCertificate", "Graph", "Hypergraph", "ResourceExhausted", "VertexPartition",
    "blowup", "contains_berge", "contract", "count_f_copies_in_shadow", "is_linear",
    "shadow", "verify_certificate",
]
