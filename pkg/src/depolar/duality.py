"""Alexander duality of monomial ideals, and dual complexes via depolarization."""

import itertools
import time

import numpy as np

from .complexes import SimplicialComplex, facet_complement_ideal
from .depolarization import Depolarization, depolarize
from .hypergraph import (_minimal_masks_np, _popcount, _superset_of_any,
                         minimal_transversals, transversal_masks)
from .ideals import (InputError, MonomialIdeal, ResourceLimit, check_exponent,
                     divides, divisible_by_any, minimal_rows, support,
                     total_degree)
from .polarization import PolarVariableMap

DEFAULT_EXPANSION_CAP = 10 ** 7


def a_minus(a, nu):
    """(a minus nu)_i = a_i + 1 - nu_i on supp(nu), zero elsewhere."""
    n = len(a)
    nu = check_exponent(nu, n)
    a = check_exponent(a, n)
    out = []
    for top, e in zip(a, nu):
        if e > top:
            raise InputError(f"{nu} exceeds the dual bound {a}")
        out.append(top + 1 - e if e > 0 else 0)
    return tuple(out)


def _fold_dual(gens, a, cap=None):
    """Intersect the irreducible duals m^(a minus g), smallest degree first.

    State T is the minimal generating set so far.  Generators of T already
    inside the next irreducible ideal survive as they are; the rest get each
    coordinate of the new bound joined in, then lose non-minimal rows.
    """
    order = sorted(gens, key=lambda g: (total_degree(g), g))
    n = len(a)
    T = None
    for g in order:
        v = np.array(a_minus(a, g), dtype=np.int64)
        s = np.flatnonzero(v)
        if T is None:
            T = np.zeros((len(s), n), dtype=np.int64)
            T[np.arange(len(s)), s] = v[s]
            continue
        hit = (T[:, s] >= v[s]).any(axis=1)
        t_hit, t_miss = T[hit], T[~hit]
        if not len(t_miss):
            continue
        cands = []
        for i in s:
            C = t_miss.copy()
            C[:, i] = np.maximum(C[:, i], v[i])
            cands.append(C)
        N = np.unique(np.vstack(cands), axis=0)
        if len(t_hit):
            N = N[~divisible_by_any(N, t_hit)]
        N = minimal_rows(N)
        T = np.vstack([t_hit, N])
        if cap is not None and len(T) > cap:
            raise ResourceLimit(f"dual generator count exceeds cap {cap}")
    return sorted(tuple(map(int, row)) for row in T)


def _packed_fold_dual(gens, a, cap=None):
    """The same fold, bit-packed when the slot budget sum(a) fits one word.

    A monomial t <= a becomes the mask with the low t_i bits of block i set,
    so divisibility is mask containment, total degree is popcount, and
    joining coordinate i up to level v is an OR with a prefix mask.
    """
    zero, one, full = np.uint64(0), np.uint64(1), np.uint64(2 ** 64 - 1)
    w64 = np.uint64(64)
    av = np.asarray(a, dtype=np.uint64)
    offsets = np.concatenate([[0], np.cumsum(av)[:-1]]).astype(np.uint64)
    G = np.array(sorted(gens, key=lambda g: (total_degree(g), g)),
                 dtype=np.uint64)
    active = G > 0
    # hit bit of generator g at i sits at level a_i + 1 - g_i of block i;
    # shift arguments are clamped where inactive since np.where still
    # evaluates the discarded branch
    pos = np.where(active, offsets + av - G, zero)
    edges = np.bitwise_or.reduce(np.where(active, one << pos, zero), axis=1)
    v = np.where(active, av - G + one, one)
    prefix = np.where(active, (full >> (w64 - v)) << offsets, zero)
    T = np.zeros(1, dtype=np.uint64)
    for j in range(len(G)):
        hit = (T & edges[j]) != zero
        t_hit, t_miss = T[hit], T[~hit]
        if len(t_miss) == 0:
            continue
        pj = prefix[j][active[j]]
        cand = _minimal_masks_np((t_miss[:, None] | pj[None, :]).ravel())
        if len(t_hit):
            cand = cand[~_superset_of_any(cand, t_hit)]
        T = np.concatenate([t_hit, cand])
        if cap is not None and len(T) > cap:
            raise ResourceLimit(f"dual generator count exceeds cap {cap}")
    width = np.where(av > 0, av, one)
    blockmasks = np.where(av > 0, (full >> (w64 - width)) << offsets, zero)
    exps = _popcount(T[:, None] & blockmasks[None, :])
    return sorted(tuple(map(int, row)) for row in exps)


def alexander_dual_ideal(I, a=None, cap=None):
    """Minimal generators of the Alexander dual of I with respect to a.

    a defaults to the lcm exponent of I and must dominate it.  The
    irreducible intersection is folded generator by generator in ascending
    total degree; when the bound fits 64 level slots the fold runs on
    bit-packed exponents, a squarefree bound in more variables falls back
    to the transversal hypergraph of the generator supports, and anything
    larger uses plain integer rows.
    """
    if I.is_zero:
        raise InputError("the zero ideal dualizes to the unit ideal")
    mu = I.lcm_exponent()
    if a is None:
        a = mu
    else:
        a = check_exponent(a, I.n)
        if not divides(mu, a):
            raise InputError(f"dual bound {a} must dominate {mu}")
    if sum(a) <= 64:
        gens = _packed_fold_dual(I.gens, a, cap)
    elif max(a) <= 1:
        masks = transversal_masks(
            (sum(1 << i for i in support(g)) for g in I.gens), I.n, cap)
        gens = sorted(tuple((m >> i) & 1 for i in range(I.n)) for m in masks)
    else:
        gens = _fold_dual(I.gens, a, cap)
    return MonomialIdeal(I.ring, gens)


def expansion_set(nu, mu):
    """The raw fiber of a dual generator: all 0/1 vectors in the polarized
    ring of mu choosing one slot j_i <= (mu minus nu)_i per i in supp(nu)."""
    r = a_minus(mu, nu)
    offsets, start = [], 0
    for size in mu:
        offsets.append(start)
        start += size
    supp = list(support(nu))
    out = []
    for choice in itertools.product(*[range(r[i]) for i in supp]):
        vec = [0] * start
        for i, j in zip(supp, choice):
            vec[offsets[i] + j] = 1
        out.append(tuple(vec))
    return out


def _blocks_of(mapping):
    if isinstance(mapping, Depolarization):
        return mapping.chains, mapping.source_ring
    if isinstance(mapping, PolarVariableMap):
        return mapping.blocks, mapping.target
    raise InputError("mapping must be a Depolarization or PolarVariableMap")


def repolarize_dual(Jdual, mu, mapping, cartesian_cap=DEFAULT_EXPANSION_CAP):
    """Dual of the polarization, assembled from the dual of a depolarization.

    Every nu in G(Jdual) expands into its fiber of squarefree monomials;
    the minimal elements of the union are found without materializing the
    redundant whole, then named through the mapping's blocks.

    A fiber element of nu is non-minimal exactly when some other dual
    generator nu' supported inside supp(nu) admits the same slot choices,
    i.e. j_i <= (mu minus nu')_i on supp(nu'); equal supports only count
    in one direction to keep one copy of duplicated monomials.
    """
    if Jdual.is_zero:
        raise InputError("cannot expand the zero ideal")
    blocks, ring = _blocks_of(mapping)
    if len(blocks) != Jdual.n:
        raise InputError("bijection arity mismatch: one block per variable")
    mu = check_exponent(mu, Jdual.n)
    for m, b in zip(mu, blocks):
        if m > len(b):
            raise InputError("bijection arity mismatch: block shorter than mu")
    for nu in Jdual.gens:
        if not divides(nu, mu):
            raise InputError(f"dual generator {nu} exceeds mu {mu}")
    order = sorted(range(len(Jdual.gens)),
                   key=lambda k: (len(support(Jdual.gens[k])), k))
    rank = {k: r for r, k in enumerate(order)}
    supports = [frozenset(support(g)) for g in Jdual.gens]
    limits = [a_minus(mu, g) for g in Jdual.gens]
    rows = []
    for k, nu in enumerate(Jdual.gens):
        supp = sorted(supports[k])
        col = {i: c for c, i in enumerate(supp)}
        sizes = [limits[k][i] for i in supp]
        total = 1
        for x in sizes:
            total *= x
        if total > cartesian_cap:
            raise ResourceLimit(
                f"fiber of {nu} has {total} elements, cap {cartesian_cap}")
        killers = [k2 for k2 in range(len(Jdual.gens))
                   if k2 != k and supports[k2] <= supports[k]
                   and (supports[k2] < supports[k] or rank[k2] < rank[k])]
        killers.sort(key=lambda k2: len(supports[k2]))
        step = max(1, 2 ** 19 // max(1, len(supp)))
        for lo in range(0, total, step):
            span = np.arange(lo, min(lo + step, total))
            grid = np.stack(np.unravel_index(span, sizes), axis=1) + 1
            alive = np.ones(len(grid), dtype=bool)
            for k2 in killers:
                cols = [col[i] for i in sorted(supports[k2])]
                lims = [limits[k2][i] for i in sorted(supports[k2])]
                alive &= ~(grid[:, cols] <= np.array(lims)).all(axis=1)
                if not alive.any():
                    break
            grid = grid[alive]
            if not len(grid):
                continue
            out = np.zeros((len(grid), ring.n), dtype=np.int64)
            arange = np.arange(len(grid))
            for i in supp:
                idx = np.array(blocks[i], dtype=np.int64)[grid[:, col[i]] - 1]
                out[arange, idx] = 1
            rows.extend(map(tuple, out.tolist()))
    return MonomialIdeal(ring, sorted(rows))


def dual_complex_via_depolarization(cx, partition=None,
                                    cartesian_cap=DEFAULT_EXPANSION_CAP):
    """Facets of the Alexander dual through the depolarized dual ideal.

    Pipeline: facet-complement ideal, depolarize along a chain partition,
    dualize the small ideal, re-polarize its dual, complement the supports.
    Returns the dual complex and a step report.
    """
    report = {"ms_per_step": {}}

    def clock(name, fn, *args, **kwargs):
        t0 = time.perf_counter()
        val = fn(*args, **kwargs)
        report["ms_per_step"][name] = (time.perf_counter() - t0) * 1000.0
        return val

    I = clock("facet_ideal", facet_complement_ideal, cx)
    D = clock("depolarize", depolarize, I, partition)
    report["gens_J"] = len(D.ideal.gens)
    Jdual = clock("dual", alexander_dual_ideal, D.ideal)
    report["gens_Jdual"] = len(Jdual.gens)
    final = clock("repolarize", repolarize_dual, Jdual,
                  D.ideal.lcm_exponent(), D, cartesian_cap)
    report["gens_final"] = len(final.gens)
    t0 = time.perf_counter()
    full = (1 << cx.n) - 1
    facets = sorted(full ^ sum(1 << i for i in support(g)) for g in final.gens)
    dual = SimplicialComplex(cx.vertices, facets)
    report["ms_per_step"]["complements"] = (time.perf_counter() - t0) * 1000.0
    return dual, report
