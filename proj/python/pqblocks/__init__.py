"""Witness characters in principal blocks for two primes."""

from ._core import (
    VerificationFailure,
    classify_triples,
    degree,
    e_core,
    intersection_alt,
    intersection_sym,
    intersection_typeA,
    intersection_typeBC,
    partition_label,
    psi_valuation,
    symbol_degree,
    witness_alternating,
    witness_symmetric,
    witness_typeA,
    witness_typeBC,
)

__all__ = [
    "VerificationFailure",
    "classify_triples",
    "degree",
    "e_core",
    "intersection_alt",
    "intersection_sym",
    "intersection_typeA",
    "intersection_typeBC",
    "partition_label",
    "psi_valuation",
    "symbol_degree",
    "witness_alternating",
    "witness_symmetric",
    "witness_typeA",
    "witness_typeBC",
]
