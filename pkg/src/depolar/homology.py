"""Exact reduced simplicial homology over Q and multigraded Betti numbers.

Betti numbers of a monomial ideal come from reduced homology of its Koszul
complexes: beta_{i,mu} = dim H~_{i-1}(K^mu_I), summed over the lcm lattice.
"""

from fractions import Fraction
from concurrent.futures import ProcessPoolExecutor
from functools import partial

from .complexes import DEFAULT_FACE_CAP, koszul_complex
from .ideals import DEFAULT_LATTICE_CAP, InputError, total_degree

DEFAULT_PRIME = 32003


def _boundary_columns(lower, upper):
    index = {m: r for r, m in enumerate(lower)}
    cols = []
    for m in upper:
        col, k, v = {}, 0, m
        while v:
            low = v & -v
            v ^= low
            col[index[m ^ low]] = -1 if k & 1 else 1
            k += 1
        cols.append(col)
    return cols


def _rank(cols, p=None):
    """Rank by sparse elimination, exact over Q or over F_p when p is given.

    Columns reduce against recorded pivot columns keyed by their largest
    row until they empty out or claim a new pivot row.
    """
    pivots = {}
    rank = 0
    for col in cols:
        col = dict(col)
        while col:
            r = max(col)
            if r not in pivots:
                c = col.pop(r)
                if p is not None:
                    inv = pow(c % p, -1, p)
                    col = {k: v * inv % p for k, v in col.items()}
                elif c == -1:
                    col = {k: -v for k, v in col.items()}
                elif c != 1:
                    col = {k: Fraction(v, c) for k, v in col.items()}
                pivots[r] = col
                rank += 1
                break
            c = col.pop(r)
            for k, v in pivots[r].items():
                nv = col.get(k, 0) - c * v
                if p is not None:
                    nv %= p
                if nv:
                    col[k] = nv
                else:
                    col.pop(k, None)
    return rank


def reduced_homology_dims(cx, face_cap=DEFAULT_FACE_CAP, p=None):
    """Reduced homology dimensions; position k holds degree k - 1.

    Uses augmented boundary maps, so the irrelevant complex has H~_{-1} = 1
    and any nonempty complex has H~_{-1} = 0.  The void complex returns [].
    """
    faces = cx.faces_by_dim(face_cap)
    if not faces:
        return []
    top = max(faces)
    ranks = {}
    for d in range(0, top + 1):
        ranks[d] = _rank(_boundary_columns(faces[d - 1], faces[d]), p)
    return [len(faces[d]) - ranks.get(d, 0) - ranks.get(d + 1, 0)
            for d in range(-1, top + 1)]


def hochster_betti(I, mu=None, face_cap=DEFAULT_FACE_CAP, p=None):
    """beta_{i,mu}(I) for i = 0.. as reduced Koszul homology; [] off lattice."""
    return reduced_homology_dims(koszul_complex(I, mu), face_cap, p)


class BettiTable:
    """Multigraded Betti counts keyed by (homological index, multidegree)."""

    __slots__ = ("ring", "entries", "convention")

    def __init__(self, ring, entries, convention="ideal"):
        if convention not in ("ideal", "quotient"):
            raise InputError(f"unknown convention {convention!r}")
        self.ring = ring
        self.entries = {k: int(v) for k, v in entries.items() if v}
        self.convention = convention

    def to_quotient(self):
        """Shift to the quotient-ring convention, adding the rank-one start."""
        if self.convention == "quotient":
            return self
        shifted = {(i + 1, mu): v for (i, mu), v in self.entries.items()}
        shifted[(0, (0,) * self.ring.n)] = 1
        return BettiTable(self.ring, shifted, "quotient")

    def by_degree(self):
        """Counts summed per (homological index, total degree)."""
        out = {}
        for (i, mu), v in self.entries.items():
            key = (i, total_degree(mu))
            out[key] = out.get(key, 0) + v
        return out

    def totals(self):
        """Total Betti numbers indexed by homological degree."""
        if not self.entries:
            return []
        top = max(i for i, _ in self.entries)
        out = [0] * (top + 1)
        for (i, _), v in self.entries.items():
            out[i] += v
        return out

    def to_dict(self):
        return {"variables": list(self.ring.variables),
                "convention": self.convention,
                "entries": [{"i": i, "degree": list(mu), "value": v}
                            for (i, mu), v in sorted(self.entries.items())]}

    @classmethod
    def from_dict(cls, data):
        from .ideals import Ring
        entries = {(e["i"], tuple(e["degree"])): e["value"]
                   for e in data["entries"]}
        return cls(Ring(tuple(data["variables"])), entries,
                   data.get("convention", "ideal"))

    def diagram(self):
        """Macaulay2-style diagram: row j - i, column i."""
        deg = self.by_degree()
        if not deg:
            return "empty"
        cols = range(0, max(i for i, _ in deg) + 1)
        strands = [j - i for i, j in deg]
        rows = range(min(strands), max(strands) + 1)
        grid = [["total:"] + [str(t) for t in self.totals()]]
        for r in rows:
            line = [f"{r}:"]
            for i in cols:
                v = deg.get((i, r + i), 0)
                line.append(str(v) if v else ".")
            grid.append(line)
        header = [""] + [str(i) for i in cols]
        widths = [max(len(row[c]) for row in [header] + grid)
                  for c in range(len(header))]
        lines = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
        lines += ["  ".join(x.rjust(w) for x, w in zip(row, widths))
                  for row in grid]
        return "\n".join(lines)


def _dims_at(I, face_cap, p, mu):
    return mu, hochster_betti(I, mu, face_cap, p)


def graded_betti(I, face_cap=DEFAULT_FACE_CAP, lattice_cap=DEFAULT_LATTICE_CAP,
                 threads=1, p=None):
    """Sweep the lcm lattice and collect all nonzero beta_{i,mu}."""
    points = I.lcm_lattice(lattice_cap)
    entries = {}
    job = partial(_dims_at, I, face_cap, p)
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = pool.map(job, points,
                               chunksize=max(1, len(points) // (threads * 8)))
            results = list(results)
    else:
        results = map(job, points)
    for mu, dims in results:
        for i, d in enumerate(dims):
            if d:
                entries[(i, mu)] = d
    return BettiTable(I.ring, entries)


def total_betti(I, face_cap=DEFAULT_FACE_CAP, lattice_cap=DEFAULT_LATTICE_CAP,
                threads=1, p=None):
    return graded_betti(I, face_cap, lattice_cap, threads, p).totals()


def betti_diagram(table):
    return table.diagram()
