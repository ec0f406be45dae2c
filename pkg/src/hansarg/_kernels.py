"""Bitmask search kernels for extension enumeration.

Arguments are bit positions in a ``uint64``. ``out_masks[i]`` is the set of
arguments that argument ``i`` defeats and ``in_masks[j]`` the set of its
defeaters. A search walks every subset of the ``free`` positions on top of a
fixed ``base`` mask and flags the candidates accepted by the semantics.

Two interchangeable backends exist: a numba ``@njit`` loop and a vectorised
numpy path. ``HANSARG_BACKEND=numpy`` forces the numpy path; otherwise numba
is used when it imports.
"""

import os

import numpy as np

STABLE = 0
COMPLETE = 1

MAX_ARGS = 64
MAX_FREE = 30
CHUNK = 1 << 20

_U1 = np.uint64(1)
_U0 = np.uint64(0)

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False


def backend() -> str:
    choice = os.environ.get("HANSARG_BACKEND", "").strip().lower()
    if choice == "numpy" or not HAVE_NUMBA:
        return "numpy"
    if choice not in ("", "numba"):
        raise ValueError(f"unknown HANSARG_BACKEND {choice!r}")
    return "numba"


def _flags_numpy(out_masks, in_masks, free, base, full, kind, start, stop):
    n = out_masks.shape[0]
    t = np.arange(start, stop, dtype=np.uint64)
    mask = np.full(t.shape, base, dtype=np.uint64)
    for b in range(free.shape[0]):
        mask |= ((t >> np.uint64(b)) & _U1) << np.uint64(free[b])
    out = np.zeros_like(mask)
    for i in range(n):
        member = ((mask >> np.uint64(i)) & _U1).astype(bool)
        out[member] |= out_masks[i]
    ok = (out & mask) == _U0
    if kind == STABLE:
        ok &= (out | mask) == full
    else:
        defended = np.zeros_like(mask)
        for j in range(n):
            hit = (in_masks[j] & ~out) == _U0
            defended[hit] |= _U1 << np.uint64(j)
        ok &= defended == mask
    return mask[ok]


if HAVE_NUMBA:

    @njit(cache=True)
    def _flags_numba(out_masks, in_masks, free, base, full, kind, start, stop):
        n = out_masks.shape[0]
        k = free.shape[0]
        hits = np.empty(stop - start, dtype=np.uint64)
        count = 0
        one = np.uint64(1)
        zero = np.uint64(0)
        for t in range(start, stop):
            mask = base
            for b in range(k):
                if (t >> b) & 1:
                    mask |= one << np.uint64(free[b])
            out = zero
            for i in range(n):
                if (mask >> np.uint64(i)) & one:
                    out |= out_masks[i]
            if out & mask:
                continue
            if kind == STABLE:
                if (out | mask) != full:
                    continue
            else:
                defended = zero
                for j in range(n):
                    if (in_masks[j] & ~out) == zero:
                        defended |= one << np.uint64(j)
                if defended != mask:
                    continue
            hits[count] = mask
            count += 1
        return hits[:count]


def search(out_masks, in_masks, free, base, kind, which=None):
    """Masks over ``base`` plus a subset of ``free`` accepted under ``kind``."""
    out_masks = np.asarray(out_masks, dtype=np.uint64)
    in_masks = np.asarray(in_masks, dtype=np.uint64)
    free = np.asarray(free, dtype=np.int64)
    n = out_masks.shape[0]
    if n > MAX_ARGS:
        raise ValueError(f"{n} arguments exceed the {MAX_ARGS}-bit search limit")
    k = free.shape[0]
    if k > MAX_FREE:
        raise ValueError(f"{k} undecided arguments exceed the search limit of {MAX_FREE}")
    full = np.uint64((1 << n) - 1) if n < 64 else np.uint64(0xFFFFFFFFFFFFFFFF)
    base = np.uint64(base)
    fn = _flags_numba if (which or backend()) == "numba" else _flags_numpy
    total = 1 << k
    parts = [
        fn(out_masks, in_masks, free, base, full, kind, lo, min(lo + CHUNK, total))
        for lo in range(0, total, CHUNK)
    ]
    return [int(m) for part in parts for m in part]
