"""Exact resultants and resultant-based irreducibility certificates."""

from ._resprime import (
    Certificate,
    ResprimeError,
    certify,
    certify_bivar,
    combos,
    d_k,
    factor,
    factorize,
    is_prime,
    resultant,
    verify,
)

__all__ = [
    "Certificate",
    "ResprimeError",
    "certify",
    "certify_bivar",
    "combos",
    "d_k",
    "factor",
    "factorize",
    "is_prime",
    "resultant",
    "verify",
]
