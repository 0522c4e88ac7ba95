"""Abstract simplicial complexes and their ideal-theoretic companions.

Complexes keep a fixed ambient vertex list (isolated vertices included, they
matter for Alexander duality) and store facets as integer bitmasks.  Three
kinds are distinguished: void (no faces at all), irrelevant (only the empty
face) and proper.
"""

from .hypergraph import bits_of, maximal_masks, transversal_masks
from .ideals import (InputError, MonomialIdeal, ResourceLimit, Ring, divides,
                     support)

DEFAULT_FACE_CAP = 2 ** 22


class SimplicialComplex:
    """Facets as sorted bitmasks over an ambient vertex list.

    The constructor trusts that facets form an antichain; use normalize()
    or from_faces() for raw input.
    """

    __slots__ = ("vertices", "facets")

    def __init__(self, vertices, facets):
        vertices = tuple(vertices)
        if vertices:  # the empty ambient set is legal (span-zero expansions)
            Ring(vertices)
        facets = tuple(int(f) for f in facets)
        top = 1 << len(vertices)
        for f in facets:
            if not 0 <= f < top:
                raise InputError("facet mask out of range")
        if any(facets[i] >= facets[i + 1] for i in range(len(facets) - 1)):
            raise InputError("facet masks must be strictly ascending")
        self.vertices = vertices
        self.facets = facets

    @classmethod
    def normalize(cls, vertices, masks):
        return cls(vertices, maximal_masks(masks, len(tuple(vertices))))

    @classmethod
    def from_faces(cls, vertices, faces):
        """Build from faces given as collections of vertex names."""
        vertices = tuple(vertices)
        index = {v: i for i, v in enumerate(vertices)}
        masks = []
        for face in faces:
            m = 0
            for name in face:
                if name not in index:
                    raise InputError(f"unknown vertex {name!r}")
                m |= 1 << index[name]
            masks.append(m)
        return cls.normalize(vertices, masks)

    @property
    def n(self):
        return len(self.vertices)

    @property
    def kind(self):
        if not self.facets:
            return "void"
        if self.facets == (0,):
            return "irrelevant"
        return "proper"

    @property
    def dim(self):
        """Top face dimension; -1 for irrelevant, -2 for void."""
        if not self.facets:
            return -2
        return max(f.bit_count() for f in self.facets) - 1

    def __eq__(self, other):
        return (isinstance(other, SimplicialComplex)
                and self.vertices == other.vertices
                and self.facets == other.facets)

    def __hash__(self):
        return hash((self.vertices, self.facets))

    def __repr__(self):
        names = [" ".join(self.names_of(f)) or "{}" for f in self.facets]
        return f"SimplicialComplex[{self.kind}: {', '.join(names)}]"

    def names_of(self, mask):
        return [self.vertices[i] for i in bits_of(mask)]

    def contains_face(self, mask):
        return any(mask & f == mask for f in self.facets)

    def is_full_simplex(self):
        return self.facets == ((1 << self.n) - 1,)

    def isolated_vertices(self):
        used = 0
        for f in self.facets:
            used |= f
        return [self.vertices[i] for i in range(self.n) if not used >> i & 1]

    def faces_by_dim(self, cap=DEFAULT_FACE_CAP):
        """All faces grouped by dimension, each group sorted by mask value."""
        if not self.facets:
            return {}
        seen = set(self.facets)
        stack = list(self.facets)
        while stack:
            m = stack.pop()
            v = m
            while v:
                low = v & -v
                v ^= low
                sub = m ^ low
                if sub not in seen:
                    if len(seen) >= cap:
                        raise ResourceLimit(f"face count exceeds cap {cap}")
                    seen.add(sub)
                    stack.append(sub)
        out = {}
        for f in seen:
            out.setdefault(f.bit_count() - 1, []).append(f)
        for group in out.values():
            group.sort()
        return out

    def f_vector(self, cap=DEFAULT_FACE_CAP):
        """(f_-1, f_0, ..., f_dim); requires a nonvoid complex."""
        if not self.facets:
            raise InputError("the void complex has no f-vector")
        faces = self.faces_by_dim(cap)
        return tuple(len(faces[d]) for d in range(-1, self.dim + 1))

    def to_dict(self):
        return {"vertices": list(self.vertices),
                "facets": [self.names_of(f) for f in self.facets]}

    @classmethod
    def from_dict(cls, data):
        try:
            vertices = data["vertices"]
            facets = data["facets"]
        except (KeyError, TypeError):
            raise InputError("complex JSON needs 'vertices' and 'facets'") from None
        return cls.from_faces(vertices, facets)


def koszul_complex(I, mu=None):
    """Sets sigma inside supp(mu) with x^mu / x_sigma in I.

    Facets are the maximal supports supp(mu - g) over generators dividing
    x^mu; the void complex signals x^mu not in I.
    """
    if I.is_zero:
        return SimplicialComplex(I.ring.variables, ())
    if mu is None:
        mu = I.lcm_exponent()
    masks = []
    for g in I.gens:
        if divides(g, mu):
            masks.append(sum(1 << i for i, (a, b) in enumerate(zip(g, mu)) if a < b))
    if not masks:
        return SimplicialComplex(I.ring.variables, ())
    return SimplicialComplex.normalize(I.ring.variables, masks)


def facet_complement_ideal(cx):
    """Squarefree ideal generated by the complements of the facets."""
    if cx.kind != "proper":
        raise InputError("facet complement ideal needs a proper complex")
    full = (1 << cx.n) - 1
    if cx.is_full_simplex():
        raise InputError("the full simplex gives the unit ideal")
    gens = []
    for f in cx.facets:
        m = full ^ f
        gens.append(tuple((m >> i) & 1 for i in range(cx.n)))
    return MonomialIdeal(Ring(cx.vertices), sorted(gens))


def stanley_reisner_ideal(cx, cap=None):
    """Ideal of minimal non-faces, via transversals of facet complements."""
    if cx.kind != "proper":
        raise InputError("Stanley-Reisner ideal needs a proper complex")
    ring = Ring(cx.vertices)
    if cx.is_full_simplex():
        return MonomialIdeal(ring, ())
    full = (1 << cx.n) - 1
    masks = transversal_masks((full ^ f for f in cx.facets), cx.n, cap)
    gens = sorted(tuple((m >> i) & 1 for i in range(cx.n)) for m in masks)
    return MonomialIdeal(ring, gens)


def complex_of_squarefree_ideal(I, cap=None):
    """The complex whose minimal non-faces are the generator supports.

    Inverse of stanley_reisner_ideal; the zero ideal gives the full simplex.
    """
    if not I.is_squarefree():
        raise InputError("complex_of_squarefree_ideal needs a squarefree ideal")
    full = (1 << I.n) - 1
    edges = [sum(1 << i for i in support(g)) for g in I.gens]
    masks = transversal_masks(edges, I.n, cap)
    return SimplicialComplex(I.ring.variables, sorted(full ^ m for m in masks))


def alexander_dual_complex(cx, cap=None):
    """Dual complex {sigma : complement(sigma) not a face}, computed directly.

    Facets are the complements of the minimal non-faces.  The irrelevant
    complex dualizes to the boundary of the simplex and vice versa; the
    full simplex dualizes to the void complex.
    """
    if cx.kind == "void":
        raise InputError("the void complex has no Alexander dual")
    full = (1 << cx.n) - 1
    if cx.kind == "irrelevant":
        return SimplicialComplex(cx.vertices,
                                 sorted(full ^ (1 << i) for i in range(cx.n)))
    sr = stanley_reisner_ideal(cx, cap)
    facets = sorted(full ^ sum(1 << i for i in support(g)) for g in sr.gens)
    return SimplicialComplex(cx.vertices, facets)
