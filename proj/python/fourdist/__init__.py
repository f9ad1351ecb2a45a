"""Lattice points with integer distances to the four vertices of a square."""

from ._core import (
    __version__,
    canonicalize,
    distance_profile,
    factorize,
    filter_ids,
    is_prime,
    is_primitive_interior,
    is_qr_bruteforce,
    isqrt,
    jacobi,
    lemma3_multipliers,
    odd_leg_decompositions,
    oracle_scan,
    orbit,
    prime_power_root,
    pythagorean_partners,
    run_cli,
    run_pipeline,
    search_range,
    sieve_z,
    two_nonresidue_primes,
    unavailable_lists,
)

__all__ = [
    "canonicalize",
    "distance_profile",
    "factorize",
    "filter_ids",
    "is_prime",
    "is_primitive_interior",
    "is_qr_bruteforce",
    "isqrt",
    "jacobi",
    "lemma3_multipliers",
    "odd_leg_decompositions",
    "oracle_scan",
    "orbit",
    "prime_power_root",
    "pythagorean_partners",
    "run_cli",
    "run_pipeline",
    "search_range",
    "sieve_z",
    "two_nonresidue_primes",
    "unavailable_lists",
]
