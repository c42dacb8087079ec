"""Bit-level search kernels for the binary witness enumeration.

A length-n binary row is packed into an integer mask (bit n-1-i holds
element i, so ascending masks enumerate rows in lexicographic order).
The mod-2 two-valued test then reduces to popcount parity:

    C(0) mod 2 == 1   <=>  popcount(mask) is odd
    C(k) mod 2 == 0   <=>  popcount(mask & rot_k(mask)) is even

Two interchangeable backends implement the scan over all 2**n masks:
a numba @njit loop and a chunked pure-numpy vectorized path.  Selection
is controlled by the RRSEQ_BACKEND environment variable ("numba",
"numpy", or unset for numba-when-available).  Both return identical
sorted uint32 arrays.
"""

from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    _HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(fn):
            return fn

        if args and callable(args[0]):
            return args[0]
        return wrap


_ENV_VAR = "RRSEQ_BACKEND"


def backend_name() -> str:
    """Resolved backend: "numba" or "numpy"."""
    choice = os.environ.get(_ENV_VAR, "").strip().lower()
    if choice == "numpy":
        return "numpy"
    if choice == "numba":
        if not _HAVE_NUMBA:
            raise RuntimeError("RRSEQ_BACKEND=numba but numba is not importable")
        return "numba"
    if choice not in ("", "auto"):
        raise ValueError(f"unknown {_ENV_VAR} value {choice!r}")
    return "numba" if _HAVE_NUMBA else "numpy"


@njit(cache=True)
def _scan_masks_numba(n: int) -> np.ndarray:  # pragma: no cover - compiled
    total = np.int64(1) << n
    full = (np.int64(1) << n) - np.int64(1)
    out = np.empty(total, dtype=np.uint32)
    count = 0
    for mask in range(total):
        # peak: odd popcount
        v = np.int64(mask)
        v ^= v >> 16
        v ^= v >> 8
        v ^= v >> 4
        v ^= v >> 2
        v ^= v >> 1
        if v & 1 == 0:
            continue
        ok = True
        for k in range(1, n):
            rot = ((mask >> k) | (mask << (n - k))) & full
            w = np.int64(mask & rot)
            w ^= w >> 16
            w ^= w >> 8
            w ^= w >> 4
            w ^= w >> 2
            w ^= w >> 1
            if w & 1 == 1:
                ok = False
                break
        if ok:
            out[count] = np.uint32(mask)
            count += 1
    return out[:count]


def _scan_masks_numpy(n: int, chunk: int = 1 << 20) -> np.ndarray:
    total = 1 << n
    full = np.uint64(total - 1)
    hits = []
    for start in range(0, total, chunk):
        masks = np.arange(start, min(start + chunk, total), dtype=np.uint64)
        keep = (np.bitwise_count(masks) & 1).astype(bool)
        masks = masks[keep]
        alive = np.ones(masks.shape, dtype=bool)
        for k in range(1, n):
            if not alive.any():
                break
            m = masks[alive]
            rot = ((m >> np.uint64(k)) | (m << np.uint64(n - k))) & full
            bad = (np.bitwise_count(m & rot) & 1).astype(bool)
            idx = np.flatnonzero(alive)
            alive[idx[bad]] = False
        hits.append(masks[alive].astype(np.uint32))
    if not hits:
        return np.empty(0, dtype=np.uint32)
    return np.concatenate(hits)


def scan_masks(n: int, backend: str | None = None) -> np.ndarray:
    """All masks of length n passing the mod-2 two-valued test, ascending."""
    if not 1 <= n <= 24:
        raise ValueError("mask scan supports lengths 1..24")
    if n == 1:
        return np.array([1], dtype=np.uint32)
    resolved = backend or backend_name()
    if resolved == "numba":
        return _scan_masks_numba(n)
    if resolved == "numpy":
        return _scan_masks_numpy(n)
    raise ValueError(f"unknown backend {resolved!r}")
