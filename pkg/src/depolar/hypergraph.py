"""Minimal transversals of hypergraphs by Berge multiplication.

Vertex sets are bitmasks.  Up to 64 vertices the state lives in numpy uint64
arrays; above that a plain Python fallback keeps the same algorithm correct.
"""

import numpy as np

from .ideals import InputError, ResourceLimit

try:
    _popcount = np.bitwise_count
except AttributeError:  # numpy < 2.0
    _M1 = np.uint64(0x5555555555555555)
    _M2 = np.uint64(0x3333333333333333)
    _M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
    _H = np.uint64(0x0101010101010101)

    def _popcount(x):
        x = x - ((x >> np.uint64(1)) & _M1)
        x = (x & _M2) + ((x >> np.uint64(2)) & _M2)
        x = (x + (x >> np.uint64(4))) & _M4
        return (x * _H) >> np.uint64(56)


def bits_of(mask):
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _superset_of_any(cand, keep):
    """Mask over cand: some element of keep is a subset of the candidate."""
    out = np.zeros(len(cand), dtype=bool)
    if len(cand) == 0 or len(keep) == 0:
        return out
    step = max(1, 4_000_000 // len(keep))
    for lo in range(0, len(cand), step):
        block = cand[lo:lo + step]
        out[lo:lo + step] = ((keep[None, :] & block[:, None]) == keep[None, :]).any(1)
    return out


def _minimal_masks_np(arr):
    """Inclusion-minimal masks among uint64 masks; dedups its input."""
    arr = np.unique(arr)
    if len(arr) <= 1:
        return arr
    if len(arr) <= 512:
        # one pairwise subset matrix beats the bucket loop on small inputs
        sub = (arr[:, None] & arr[None, :]) == arr[None, :]
        return arr[sub.sum(axis=1) == 1]
    counts = _popcount(arr)
    order = np.argsort(counts, kind="stable")
    arr, counts = arr[order], counts[order]
    cuts = np.flatnonzero(np.diff(counts)) + 1
    kept = []
    for bucket in np.split(arr, cuts):
        if kept:
            bucket = bucket[~_superset_of_any(bucket, np.concatenate(kept))]
        if len(bucket):
            kept.append(bucket)
    return np.concatenate(kept)


def minimal_masks(masks):
    """Inclusion-minimal masks from an iterable of ints, sorted ascending."""
    masks = sorted(set(masks))
    if len(masks) <= 1:
        return masks
    if masks[-1] < 1 << 64:
        arr = _minimal_masks_np(np.array(masks, dtype=np.uint64))
        return sorted(int(x) for x in arr)
    by_count = sorted(masks, key=lambda m: (m.bit_count(), m))
    kept = []
    for m in by_count:
        if not any(k & m == k for k in kept):
            kept.append(m)
    return sorted(kept)


def maximal_masks(masks, nverts):
    """Inclusion-maximal masks, via complements of minimal complements."""
    full = (1 << nverts) - 1
    return sorted(full ^ m for m in minimal_masks(full ^ m for m in masks))


def _transversals_np(edges, cap):
    T = np.zeros(1, dtype=np.uint64)
    for e in edges:
        eu = np.uint64(e)
        hit = (T & eu) != 0
        t_hit, t_miss = T[hit], T[~hit]
        if len(t_miss) == 0:
            continue
        bits = np.array([1 << v for v in bits_of(e)], dtype=np.uint64)
        cand = _minimal_masks_np((t_miss[:, None] | bits[None, :]).ravel())
        if len(t_hit):
            cand = cand[~_superset_of_any(cand, t_hit)]
        T = np.concatenate([t_hit, cand])
        if cap is not None and len(T) > cap:
            raise ResourceLimit(f"transversal count exceeds cap {cap}")
    return sorted(int(x) for x in T)


def _transversals_py(edges, cap):
    T = [0]
    for e in edges:
        t_hit = [t for t in T if t & e]
        t_miss = [t for t in T if not t & e]
        if not t_miss:
            continue
        cand = {t | (1 << v) for t in t_miss for v in bits_of(e)}
        cand = [c for c in cand if not any(h & c == h for h in t_hit)]
        T = t_hit + minimal_masks(cand)
        if cap is not None and len(T) > cap:
            raise ResourceLimit(f"transversal count exceeds cap {cap}")
    return sorted(T)


def transversal_masks(edge_masks, nverts, cap=None):
    """All inclusion-minimal transversal masks of the given edge masks.

    Processes edges small-first after dropping redundant superset edges;
    an empty edge can never be met.  No edges at all admit the empty
    transversal.
    """
    edge_masks = list(edge_masks)
    if any(e == 0 for e in edge_masks):
        raise InputError("an empty edge has no transversal")
    if not edge_masks:
        return [0]
    edges = minimal_masks(edge_masks)
    edges.sort(key=lambda m: (m.bit_count(), m))
    if nverts <= 64:
        return _transversals_np(edges, cap)
    return _transversals_py(edges, cap)


def minimal_transversals(edges, nverts=None, cap=None):
    """Minimal hitting sets of a hypergraph given as vertex-id collections."""
    edges = [sorted(set(e)) for e in edges]
    flat = [v for e in edges for v in e]
    if any(not isinstance(v, int) or v < 0 for v in flat):
        raise InputError("vertex ids must be nonnegative integers")
    if nverts is None:
        nverts = max(flat, default=-1) + 1
    elif flat and max(flat) >= nverts:
        raise InputError("vertex id out of range")
    masks = transversal_masks((sum(1 << v for v in e) for e in edges), nverts, cap)
    return [tuple(bits_of(m)) for m in masks]
