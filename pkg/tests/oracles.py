"""Brute force reference implementations used to freeze expected values.

Everything here favors obviousness over speed and is kept independent of the
package under test, so disagreements point at real bugs.
"""

import itertools
from fractions import Fraction


def divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def monomials_below(bound):
    return itertools.product(*[range(b + 1) for b in bound])


def minimal_elements(monos):
    monos = sorted(set(monos))
    return [m for m in monos
            if not any(o != m and divides(o, m) for o in monos)]


def members(gens, bound):
    return [m for m in monomials_below(bound)
            if any(divides(g, m) for g in gens)]


def intersect(gens_a, gens_b):
    n = len(gens_a[0])
    bound = tuple(max(max(g[i] for g in gens_a), max(g[i] for g in gens_b))
                  for i in range(n))
    both = [m for m in monomials_below(bound)
            if any(divides(g, m) for g in gens_a)
            and any(divides(g, m) for g in gens_b)]
    return minimal_elements(both)


def lcm_closure(gens):
    points = set()
    for r in range(1, len(gens) + 1):
        for sub in itertools.combinations(gens, r):
            m = sub[0]
            for g in sub[1:]:
                m = lcm(m, g)
            points.add(m)
    return sorted(points)


def set_key(s):
    return (len(s), tuple(sorted(s)))


def maximal_sets(sets):
    sets = set(map(frozenset, sets))
    return sorted((s for s in sets if not any(s < t for t in sets)), key=set_key)


def minimal_sets(sets):
    sets = set(map(frozenset, sets))
    return sorted((s for s in sets if not any(t < s for t in sets)), key=set_key)


def koszul_faces(gens, mu):
    """All sets sigma inside supp(mu) with x^mu / x_sigma in the ideal."""
    n = len(mu)
    supp = [i for i in range(n) if mu[i] > 0]
    faces = []
    for r in range(len(supp) + 1):
        for sigma in itertools.combinations(supp, r):
            q = tuple(mu[i] - (1 if i in sigma else 0) for i in range(n))
            if any(divides(g, q) for g in gens):
                faces.append(frozenset(sigma))
    return faces


def transversals(edges, nverts):
    """Minimal vertex sets meeting every edge."""
    edges = [frozenset(e) for e in edges]
    hitting = []
    for r in range(nverts + 1):
        for sub in itertools.combinations(range(nverts), r):
            s = frozenset(sub)
            if all(s & e for e in edges):
                hitting.append(s)
    return minimal_sets(hitting)


def a_minus(a, nu):
    return tuple(a[i] + 1 - nu[i] if nu[i] > 0 else 0 for i in range(len(a)))


def dual_ideal(gens, a=None):
    """Minimal generators of the Alexander dual with respect to a."""
    if a is None:
        a = tuple(max(g[i] for g in gens) for i in range(len(gens[0])))
    duals = [a_minus(a, g) for g in gens]
    inside = []
    for m in monomials_below(a):
        if all(any(v[i] > 0 and m[i] >= v[i] for i in range(len(a))) for v in duals):
            inside.append(m)
    return minimal_elements(inside)


def closure_faces(facets):
    faces = set()
    for f in facets:
        f = tuple(sorted(f))
        for r in range(len(f) + 1):
            faces.update(frozenset(s) for s in itertools.combinations(f, r))
    return faces


def alexander_dual_facets(facets, nverts):
    """Facets of the dual complex {sigma : complement(sigma) not a face}."""
    faces = closure_faces(facets)
    everything = frozenset(range(nverts))
    dual = []
    for r in range(nverts + 1):
        for sub in itertools.combinations(range(nverts), r):
            s = frozenset(sub)
            if everything - s not in faces:
                dual.append(s)
    return maximal_sets(dual)


def dense_rank(rows):
    """Rank of a dense matrix given as a list of row lists, exact over Q."""
    mat = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    ncols = len(mat[0]) if mat else 0
    col = 0
    while rank < len(mat) and col < ncols:
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col]), None)
        if pivot is None:
            col += 1
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = 1 / mat[rank][col]
        mat[rank] = [x * inv for x in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                c = mat[r][col]
                mat[r] = [x - c * y for x, y in zip(mat[r], mat[rank])]
        rank += 1
        col += 1
    return rank


def homology_dims(facets):
    """Reduced rational homology dimensions, index k holding degree k - 1.

    Void input gives []; the complex {emptyset} gives [1].
    """
    facets = [frozenset(f) for f in facets]
    if not facets:
        return []
    faces = closure_faces(facets)
    top = max(len(f) for f in faces) - 1
    by_dim = {d: sorted((f for f in faces if len(f) == d + 1), key=set_key)
              for d in range(-1, top + 1)}
    ranks = {}
    for d in range(0, top + 1):
        lower = {f: i for i, f in enumerate(by_dim[d - 1])}
        rows = [[0] * len(by_dim[d]) for _ in lower]
        for j, f in enumerate(by_dim[d]):
            verts = sorted(f)
            for k in range(len(verts)):
                sub = frozenset(verts[:k] + verts[k + 1:])
                rows[lower[sub]][j] = (-1) ** k
        ranks[d] = dense_rank(rows) if rows else 0
    dims = []
    for d in range(-1, top + 1):
        dims.append(len(by_dim[d]) - ranks.get(d, 0) - ranks.get(d + 1, 0))
    return dims


def betti_numbers(gens):
    """Multigraded Betti numbers of an ideal as a map (i, mu) -> rank."""
    out = {}
    for mu in lcm_closure(gens):
        dims = homology_dims(maximal_sets(koszul_faces(gens, mu)))
        for i, d in enumerate(dims):
            if d:
                out[(i, mu)] = d
    return out


def max_antichain(elements, strictly_less):
    best = 0
    for r in range(1, len(elements) + 1):
        for sub in itertools.combinations(elements, r):
            if all(not strictly_less(a, b) and not strictly_less(b, a)
                   for a, b in itertools.combinations(sub, 2)):
                best = max(best, r)
    return best
