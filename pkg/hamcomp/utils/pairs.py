"""Lexicographic indexing of the C(n,2) vertex pairs (u < v)"""
import math

import numpy as np


def pair_count(n):
    return n * (n - 1) // 2


def _pairs_before(u, n):
    return u * (2 * n - u - 1) // 2


def pair_index(u, v, n):
    if u > v:
        u, v = v, u
    return _pairs_before(u, n) + (v - u - 1)


def pair_from_index(k, n):
    """Inverse of pair_index for a single index"""
    b = 2 * n - 1
    u = (b - math.isqrt(b * b - 8 * k)) // 2
    while u > 0 and _pairs_before(u, n) > k:
        u -= 1
    while _pairs_before(u + 1, n) <= k:
        u += 1
    return u, k - _pairs_before(u, n) + u + 1


def pairs_from_indices(ks, n):
    """Vectorized pair_from_index; ks is an int64 array"""
    ks = np.asarray(ks, dtype=np.int64)
    b = 2 * n - 1
    u = np.floor((b - np.sqrt(np.float64(b) * b - 8.0 * ks)) / 2.0).astype(np.int64)
    u = np.clip(u, 0, max(n - 2, 0))
    for _ in range(2):
        before = u * (2 * n - u - 1) // 2
        u = np.where(before > ks, u - 1, u)
        after = (u + 1) * (2 * n - u - 2) // 2
        u = np.where(after <= ks, u + 1, u)
    v = ks - u * (2 * n - u - 1) // 2 + u + 1
    return u, v
