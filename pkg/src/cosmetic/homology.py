"""
Smith normal form over the integers and finitely generated abelian groups
given by presentations.

Matrices are lists of rows of Python ints.  A presentation matrix has one
row per relation and one column per generator; its cokernel is the group.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

__all__ = [
    "identity",
    "matmul",
    "smith_normal_form",
    "AbelianGroup",
    "Cokernel",
    "cokernel",
    "Presentation",
    "content",
]


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a, b):
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def _check_matrix(m):
    if not m or not m[0]:
        raise ValueError("matrix must be non-empty")
    width = len(m[0])
    if any(len(row) != width for row in m):
        raise ValueError("matrix rows have different lengths")
    return [[int(x) for x in row] for row in m]


def smith_normal_form(m):
    """Return ``(U, D, V)`` with ``U m V = D``.

    U and V are unimodular, D is diagonal with non-negative entries and
    d_1 | d_2 | ... (zeros last).
    """
    a = _check_matrix(m)
    nr, nc = len(a), len(a[0])
    u = identity(nr)
    v = identity(nc)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, k):
        # row_dst += k * row_src
        a[dst] = [x + k * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, k):
        for row in a:
            row[dst] += k * row[src]
        for row in v:
            row[dst] += k * row[src]

    for t in range(min(nr, nc)):
        while True:
            best = None
            for i in range(t, nr):
                for j in range(t, nc):
                    x = a[i][j]
                    if x and (best is None or abs(x) < abs(a[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                return u, a, v
            swap_rows(t, best[0])
            swap_cols(t, best[1])
            pivot = a[t][t]

            clean = True
            for i in range(t + 1, nr):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // pivot))
                    clean = clean and a[i][t] == 0
            for j in range(t + 1, nc):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // pivot))
                    clean = clean and a[t][j] == 0
            if not clean:
                continue

            bad = next(
                (i for i in range(t + 1, nr)
                 if any(a[i][j] % pivot for j in range(t + 1, nc))),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)

        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
    return u, a, v


@dataclass(frozen=True)
class AbelianGroup:
    """Z^free_rank + Z/d_1 + ... + Z/d_r with d_1 | ... | d_r, every d_i >= 2."""

    free_rank: int = 0
    torsion: tuple = ()

    def __post_init__(self):
        torsion = tuple(int(d) for d in self.torsion)
        object.__setattr__(self, "torsion", torsion)
        if self.free_rank < 0:
            raise ValueError("free rank must be non-negative")
        if any(d < 2 for d in torsion):
            raise ValueError(f"torsion coefficients must be >= 2, got {torsion}")
        if any(b % a for a, b in zip(torsion, torsion[1:])):
            raise ValueError(f"torsion {torsion} is not a divisibility chain")

    @classmethod
    def from_diagonal(cls, diag, ngens):
        nonzero = [abs(d) for d in diag if d]
        return cls(ngens - len(nonzero), tuple(d for d in nonzero if d > 1))

    @property
    def order(self):
        """Order of the group, or 0 if infinite."""
        if self.free_rank:
            return 0
        out = 1
        for d in self.torsion:
            out *= d
        return out

    @property
    def is_trivial(self):
        return self.free_rank == 0 and not self.torsion

    def to_json(self):
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}

    def __str__(self):
        parts = ["Z"] * self.free_rank + [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class Cokernel:
    """The cokernel of a relation matrix, with coordinates for its elements.

    An element of Z^n maps to ``(torsion_coords, free_coords)``: one residue
    per torsion factor (reduced into [0, d)) and one integer per free factor.
    The free coordinates are determined only up to a change of basis of the
    free part.
    """

    group: AbelianGroup
    ngens: int
    diagonal: tuple
    v: tuple = field(repr=False)

    def coordinates(self, vector):
        if len(vector) != self.ngens:
            raise ValueError(f"expected a vector of length {self.ngens}")
        y = [sum(vector[i] * self.v[i][k] for i in range(self.ngens))
             for k in range(self.ngens)]
        torsion, free = [], []
        for k in range(self.ngens):
            d = self.diagonal[k] if k < len(self.diagonal) else 0
            if d == 0:
                free.append(y[k])
            elif d > 1:
                torsion.append(y[k] % d)
        return tuple(torsion), tuple(free)

    def generator_coordinates(self, j):
        e = [0] * self.ngens
        e[j] = 1
        return self.coordinates(e)


def cokernel(relations, ngens=None):
    rows = [list(r) for r in relations]
    if ngens is None:
        if not rows:
            raise ValueError("ngens is required when there are no relations")
        ngens = len(rows[0])
    if not rows:
        return Cokernel(AbelianGroup(ngens), ngens, (), tuple(map(tuple, identity(ngens))))
    if any(len(r) != ngens for r in rows):
        raise ValueError("relation length does not match number of generators")
    _, d, v = smith_normal_form(rows)
    diag = tuple(d[i][i] for i in range(min(len(rows), ngens)))
    return Cokernel(
        AbelianGroup.from_diagonal(diag, ngens),
        ngens,
        diag,
        tuple(tuple(row) for row in v),
    )


class Presentation:
    """Named generators and integer relations, reduced by Smith normal form."""

    def __init__(self, generators):
        self.generators = list(generators)
        if len(set(self.generators)) != len(self.generators):
            raise ValueError("generator names must be distinct")
        self.relations = []

    def add_relation(self, coeffs):
        """Add ``sum coeffs[g] * g = 0``; ``coeffs`` maps generator names to ints."""
        unknown = set(coeffs) - set(self.generators)
        if unknown:
            raise KeyError(f"unknown generators {sorted(unknown)}")
        self.relations.append([int(coeffs.get(g, 0)) for g in self.generators])

    def vector(self, coeffs):
        return [int(coeffs.get(g, 0)) for g in self.generators]

    def matrix(self):
        return [list(r) for r in self.relations]

    def cokernel(self):
        return cokernel(self.relations, len(self.generators))


def content(vector):
    """gcd of the entries; 1 means the vector is primitive."""
    g = 0
    for x in vector:
        g = gcd(g, x)
    return g
