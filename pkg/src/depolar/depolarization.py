"""Support posets, chain partitions, and depolarization of squarefree ideals."""

import numpy as np

from .ideals import InputError, MonomialIdeal, Ring, support
from .polarization import polarize_ideal


class SupportPoset:
    """Variables ordered by inclusion of their generator-support sets C_i.

    C_i is the intersection of the supports of all generators containing i;
    i precedes j when C_i is strictly contained in C_j, with equal sets
    ordered by ring position.
    """

    __slots__ = ("ring", "elements", "supports")

    def __init__(self, ring, supports):
        self.ring = ring
        self.supports = {i: frozenset(c) for i, c in supports.items()}
        self.elements = tuple(sorted(self.supports))

    def precedes(self, i, j):
        a, b = self.supports[i], self.supports[j]
        return a < b or (a == b and i < j)

    def comparable(self, i, j):
        return self.precedes(i, j) or self.precedes(j, i)

    def hasse_edges(self):
        """Cover pairs (i, j): i precedes j with nothing strictly between."""
        edges = []
        for i in self.elements:
            for j in self.elements:
                if self.precedes(i, j) and not any(
                        self.precedes(i, k) and self.precedes(k, j)
                        for k in self.elements):
                    edges.append((i, j))
        return edges

    def is_chain(self, seq):
        return all(self.precedes(seq[k], seq[k + 1]) for k in range(len(seq) - 1))

    def linear_extension(self):
        # |C_i| strictly grows along the strict inclusions, ties follow ring order
        return sorted(self.elements, key=lambda i: (len(self.supports[i]), i))


class ChainPartition:
    """Disjoint chains covering the support of an ideal."""

    __slots__ = ("chains",)

    def __init__(self, chains):
        self.chains = tuple(tuple(int(i) for i in c) for c in chains)
        if any(not c for c in self.chains):
            raise InputError("empty chain")

    def __eq__(self, other):
        return isinstance(other, ChainPartition) and self.chains == other.chains

    def __hash__(self):
        return hash(self.chains)

    def __repr__(self):
        return f"ChainPartition{list(map(list, self.chains))}"

    def to_dict(self, ring):
        return {"chains": [[ring.variables[i] for i in c] for c in self.chains]}

    @classmethod
    def from_dict(cls, ring, data):
        try:
            chains = data["chains"]
        except (KeyError, TypeError):
            raise InputError("partition JSON needs 'chains'") from None
        return cls([[ring.index(v) for v in c] for c in chains])


class Depolarization:
    """A depolarized ideal plus the chain bijection back to source variables.

    chains[c][j-1] is the source variable playing the j-th copy of the c-th
    depolarized variable.
    """

    __slots__ = ("ideal", "chains", "source_ring")

    def __init__(self, ideal, chains, source_ring):
        self.ideal = ideal
        self.chains = tuple(tuple(c) for c in chains)
        self.source_ring = source_ring

    def to_dict(self):
        return {"source": list(self.source_ring.variables),
                "variables": list(self.ideal.ring.variables),
                "chains": [[self.source_ring.variables[i] for i in c]
                           for c in self.chains]}


def support_sets(I):
    """C_i for every i in supp(I); requires a squarefree ideal."""
    if not I.is_squarefree():
        raise InputError("support sets need a squarefree ideal; polarize first")
    M = np.zeros((len(I.gens), I.n), dtype=bool)
    for r, g in enumerate(I.gens):
        M[r, list(support(g))] = True
    out = {}
    for i in range(I.n):
        rows = M[M[:, i]]
        if len(rows):
            out[i] = frozenset(np.flatnonzero(rows.all(axis=0)).tolist())
    return out


def ordered_support_poset(I):
    return SupportPoset(I.ring, support_sets(I))


def singleton_partition(poset):
    return ChainPartition([(i,) for i in poset.elements])


def min_chain_partition(poset):
    """Fewest chains covering the poset (Dilworth), via bipartite matching.

    Augmenting paths try successors in ascending ring order, so the result
    is deterministic.
    """
    elems = poset.elements
    adj = {i: [j for j in elems if poset.precedes(i, j)] for i in elems}
    match_right = {}

    def augment(i, visited):
        for j in adj[i]:
            if j not in visited:
                visited.add(j)
                if j not in match_right or augment(match_right[j], visited):
                    match_right[j] = i
                    return True
        return False

    for i in elems:
        augment(i, set())
    succ = {i: j for j, i in match_right.items()}
    chains = []
    for s in elems:
        if s not in match_right:
            chain = [s]
            while chain[-1] in succ:
                chain.append(succ[chain[-1]])
            chains.append(tuple(chain))
    return ChainPartition(chains)


def chain_partitions(poset, cap=10 ** 4):
    """Every chain partition of the poset, for small testing posets only."""
    order = poset.linear_extension()
    out = []

    def extend(idx, chains):
        if len(out) >= cap:
            raise InputError(f"more than {cap} chain partitions")
        if idx == len(order):
            out.append(ChainPartition([tuple(c) for c in chains]))
            return
        e = order[idx]
        for c in chains:
            if poset.precedes(c[-1], e):
                c.append(e)
                extend(idx + 1, chains)
                c.pop()
        chains.append([e])
        extend(idx + 1, chains)
        chains.pop()

    extend(0, [])
    return out


def depolarize(I, partition=None):
    """Collapse each chain of the support poset to powers of one variable.

    partition may be None/'min', 'singleton', or a ChainPartition over the
    support poset.  A non-squarefree ideal is replaced by its polarization
    first.  Generator m maps to prod_c y_c^(|supp(m) chain_c|); the new
    variable of a chain borrows the name of the chain's first element.
    """
    if I.is_zero:
        raise InputError("cannot depolarize the zero ideal")
    if not I.is_squarefree():
        I, _ = polarize_ideal(I)
    poset = ordered_support_poset(I)
    if partition is None or partition == "min":
        partition = min_chain_partition(poset)
    elif partition == "singleton":
        partition = singleton_partition(poset)
    elif not isinstance(partition, ChainPartition):
        raise InputError(f"bad partition {partition!r}")
    flat = [i for c in partition.chains for i in c]
    if len(set(flat)) != len(flat):
        raise InputError("chains overlap")
    if set(flat) != set(poset.elements):
        raise InputError("chains must cover exactly the support of the ideal")
    for c in partition.chains:
        if not poset.is_chain(c):
            raise InputError(f"not an ascending chain: {list(c)}")
    gens = []
    for g in I.gens:
        supp = set(support(g))
        row = []
        for c in partition.chains:
            inside = [i in supp for i in c]
            k = sum(inside)
            if any(inside[k:]):
                raise InputError(
                    f"generator {g} meets chain {list(c)} in a non-prefix")
            row.append(k)
        gens.append(tuple(row))
    ring_out = Ring([I.ring.variables[c[0]] for c in partition.chains])
    ideal = MonomialIdeal(ring_out, sorted(gens))
    if len(ideal.gens) != len(I.gens):
        raise AssertionError("depolarization must preserve the generator count")
    return Depolarization(ideal, partition.chains, I.ring)


def validate_depolarization(I, D):
    """Re-polarize D and compare with G(I) through the chain bijection."""
    if not I.is_squarefree():
        raise InputError("validation target must be squarefree")
    if I.ring != D.source_ring or D.ideal.is_zero != I.is_zero:
        return False
    if D.ideal.is_zero:
        return True
    if len(D.chains) != D.ideal.n:
        return False
    mu = D.ideal.lcm_exponent()
    if any(m > len(c) for m, c in zip(mu, D.chains)):
        return False
    renamed = set()
    for g in D.ideal.gens:
        vec = [0] * I.n
        for c, e in enumerate(g):
            for j in range(e):
                vec[D.chains[c][j]] = 1
        renamed.add(tuple(vec))
    return renamed == set(I.gens)
