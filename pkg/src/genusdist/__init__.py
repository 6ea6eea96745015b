"""Exact genus distributions of face-oriented digraph embeddings and one-face constellations."""

__version__ = "0.1.0"

from .analysis import (
    certify_real_rooted_nonpositive,
    expected_X,
    is_log_concave,
    moments_from_gamma,
    variance_X,
)
from .characters import frobenius_count, hook_character, mn_character, r_poly
from .combinatorics import Partition, conjugacy_class_size, dimension, partitions_of
from .digraphs import EulerianDigraph, bipartite_digraph, bouquet, dipole
from .genus_core import (
    GenusPolynomial,
    bouquet_gamma,
    dipole_gamma,
    fan_gamma,
    gamma_constellation,
    gamma_digraph,
    p_poly,
)
from .oracle import enumerate_embeddings, enumerate_factorizations
from .polyring import ExactPoly

__all__ = [
    "EulerianDigraph",
    "ExactPoly",
    "GenusPolynomial",
    "Partition",
    "bipartite_digraph",
    "bouquet",
    "bouquet_gamma",
    "certify_real_rooted_nonpositive",
    "conjugacy_class_size",
    "dimension",
    "dipole",
    "dipole_gamma",
    "enumerate_embeddings",
    "enumerate_factorizations",
    "expected_X",
    "fan_gamma",
    "frobenius_count",
    "gamma_constellation",
    "gamma_digraph",
    "hook_character",
    "is_log_concave",
    "mn_character",
    "moments_from_gamma",
    "p_poly",
    "partitions_of",
    "r_poly",
    "variance_X",
]
