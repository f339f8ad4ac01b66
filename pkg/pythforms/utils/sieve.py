"""numpy tables for range sweeps: prime masks and per-integer residue profiles."""
from math import isqrt
from typing import Tuple

import numpy as np


def prime_mask(limit: int) -> np.ndarray:
    """Boolean array m of length `limit` with m[n] True iff n is prime."""
    if limit < 3:
        return np.zeros(max(limit, 0), dtype=bool)
    mask = np.ones(limit, dtype=bool)
    mask[:2] = False
    mask[4::2] = False
    for p in range(3, isqrt(limit - 1) + 1, 2):
        if mask[p]:
            mask[p * p :: 2 * p] = False
    return mask


def primes_below(limit: int) -> np.ndarray:
    return np.flatnonzero(prime_mask(limit)).astype(np.int64)


def odd_primes_below(limit: int) -> np.ndarray:
    primes = primes_below(limit)
    return primes[primes > 2]


def residue_profile(limit: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Per-integer prime data for every n < limit.

    Returns (omega, class_mask, exponent_sum): omega[n] is the number of distinct
    odd prime divisors, class_mask[n] has bit (p mod 8) set for every odd prime
    divisor p, and exponent_sum[n] is the total multiplicity of odd prime divisors.
    """
    omega = np.zeros(limit, dtype=np.int64)
    class_mask = np.zeros(limit, dtype=np.int64)
    exponent_sum = np.zeros(limit, dtype=np.int64)
    for p in odd_primes_below(limit).tolist():
        omega[p::p] += 1
        class_mask[p::p] |= 1 << (p % 8)
        power = p
        while power < limit:
            exponent_sum[power::power] += 1
            power *= p
    return omega, class_mask, exponent_sum


def class_bits(*residues: int) -> int:
    bits = 0
    for residue in residues:
        bits |= 1 << residue
    return bits
