"""
Seifert fibered spaces: first homology of knot exteriors over a disk and of
their Dehn fillings, normal forms of closed ones over the sphere, and the
two explicit computations attached to half-integral cosmetic pairs.

Conventions
-----------
A fiber is a pair ``(alpha, beta)`` standing for the unnormalized invariant
beta/alpha.  For an exterior over the disk with fibers (alpha_i, beta_i),
i = 1..n, the homology is generated by the section curves c_0 (on the outer
boundary) and c_1..c_n (around the singular fibers) together with the
regular fiber h, subject to

    alpha_i c_i - beta_i h = 0        (i = 1..n)
    c_0 + c_1 + ... + c_n = 0.

With fibers {-1/3, 1/5, -1/5, 1/2} this gives c_0 = 5z and h = -30z
modulo torsion (the opposite sign choice would give h = +30z).  Note that
the two fibers of multiplicity 5 contribute a Z/5 summand: every maximal
minor of the relation matrix is divisible by 5, so H_1 = Z + Z/5 and the
filling along c_0 has H_1 = Z/25.  Only the torsion-free quotient is Z.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd

from .homology import AbelianGroup, Presentation, content
from .slopes import SlopePair, reduce

__all__ = [
    "SeifertData",
    "ExteriorHomology",
    "UnsupportedSFS",
    "h1_exterior",
    "h1_filled",
    "thm2_solve",
    "remark_slopes",
    "NormalSFS",
    "normalize_closed_sfs",
    "mirror_sfs",
    "Chirality",
    "sfs_chiral_compare",
    "REMARK_EXTERIOR",
    "REMARK_MERIDIAN",
    "REMARK_LONGITUDE",
]

BASES = ("disk", "sphere")


class UnsupportedSFS(ValueError):
    pass


@dataclass(frozen=True)
class SeifertData:
    base: str
    fibers: tuple = ()

    def __post_init__(self):
        if self.base not in BASES:
            raise ValueError(f"base must be one of {BASES}, got {self.base!r}")
        fibers = tuple((int(a), int(b)) for a, b in self.fibers)
        object.__setattr__(self, "fibers", fibers)
        for alpha, beta in fibers:
            if alpha == 0:
                raise ValueError("fiber multiplicity alpha must be non-zero")
            if gcd(alpha, beta) != 1:
                raise ValueError(f"fiber ({alpha}, {beta}) is not coprime")

    @classmethod
    def from_json(cls, obj):
        if isinstance(obj, (str, bytes)):
            obj = json.loads(obj)
        try:
            return cls(obj["base"], tuple(tuple(f) for f in obj.get("fibers", [])))
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed Seifert data: {exc}") from None

    def to_json(self):
        return {"base": self.base, "fibers": [list(f) for f in self.fibers]}

    def invariants(self):
        return [Fraction(b, a) for a, b in self.fibers]


@dataclass(frozen=True)
class ExteriorHomology:
    group: AbelianGroup
    presentation: Presentation
    classes: dict

    def multiple_of_generator(self, name):
        """The integer k with [name] = k z modulo torsion, when H_1 has rank 1.

        The generator z is oriented so that c_0 (or, if c_0 = 0, h) is a
        non-negative multiple of it.
        """
        if self.group.free_rank != 1:
            raise ValueError(f"H_1 = {self.group} does not have rank 1")
        sign = 1
        for ref in ("c0", "h"):
            k = self.classes[ref][1][0]
            if k:
                sign = 1 if k > 0 else -1
                break
        return sign * self.classes[name][1][0]


def _exterior_presentation(s):
    if s.base != "disk":
        raise ValueError("exterior homology needs Seifert data over the disk")
    n = len(s.fibers)
    gens = [f"c{i}" for i in range(n + 1)] + ["h"]
    pres = Presentation(gens)
    for i, (alpha, beta) in enumerate(s.fibers, start=1):
        pres.add_relation({f"c{i}": alpha, "h": -beta})
    pres.add_relation({f"c{i}": 1 for i in range(n + 1)})
    return pres


def h1_exterior(s: SeifertData) -> ExteriorHomology:
    """H_1 of the exterior, plus the classes of c_0 and h in a chosen basis."""
    pres = _exterior_presentation(s)
    coker = pres.cokernel()
    classes = {
        name: coker.generator_coordinates(pres.generators.index(name))
        for name in ("c0", "h")
    }
    return ExteriorHomology(coker.group, pres, classes)


def h1_filled(s: SeifertData, filling, mu=(1, 0), lam=(0, 1)) -> AbelianGroup:
    """H_1 after Dehn filling the outer boundary torus.

    ``mu`` and ``lam`` give the meridian and longitude as integer
    combinations ``(x, y)`` meaning x c_0 + y h; the filling ``(a, b)`` kills
    a mu + b lam.
    """
    a, b = filling
    if content((a, b)) != 1:
        raise ValueError(f"filling class {filling} is not primitive")
    (m0, mh), (l0, lh) = mu, lam
    if abs(m0 * lh - mh * l0) != 1:
        raise ValueError("mu and lambda do not form a basis of H_1 of the boundary torus")
    pres = _exterior_presentation(s)
    pres.add_relation({"c0": a * m0 + b * l0, "h": a * mh + b * lh})
    return pres.cokernel().group


# worked example: exterior with invariants {-1/3, 1/5, -1/5, 1/2}, mu = c0, lambda = 6 c0 + h
REMARK_EXTERIOR = SeifertData("disk", ((3, -1), (5, 1), (5, -1), (2, 1)))
REMARK_MERIDIAN = (1, 0)
REMARK_LONGITUDE = (6, 1)


def thm2_solve(alpha_range: int, m_range: int):
    """Integer solutions (alpha, m, p) of the two-singular-fiber surgery formulas.

    For exterior invariants {beta/alpha, 1/2} a pair K(p) = -K(p/2) requires

        p   = alpha^2 (2m+1) / ((alpha(2m+1) - 1) / 2)
        p/2 = alpha^2 (2m+1) / ((alpha(2m+1) + 1) / 2)

    for some integer m.  We scan 2 <= |alpha| <= alpha_range and
    |m| <= m_range and keep the (alpha, m) for which both denominators are
    integers, the first formula gives a nonzero integer p and the second
    gives exactly p/2.  The sign of p only reflects orientation, so p is
    reported as |p|.

    Output is sorted by |alpha|, positive alpha first, then by m.
    """
    if alpha_range < 1 or m_range < 1:
        raise ValueError("ranges must be positive")
    out = []
    for alpha in range(-alpha_range, alpha_range + 1):
        if abs(alpha) < 2:
            continue
        for m in range(-m_range, m_range + 1):
            u = alpha * (2 * m + 1)
            if u % 2 == 0:
                continue
            d_minus, d_plus = (u - 1) // 2, (u + 1) // 2
            if d_minus == 0 or d_plus == 0:
                continue
            top = alpha * alpha * (2 * m + 1)
            p = Fraction(top, d_minus)
            if p.denominator != 1 or p == 0:
                continue
            if Fraction(top, d_plus) != p / 2:
                continue
            out.append((alpha, m, abs(int(p))))
    out.sort(key=lambda t: (abs(t[0]), t[0] < 0, t[1]))
    return out


def remark_slopes(m: int) -> SlopePair:
    """The pair (18m+9)/(3m+1), (18m+9)/(3m+2), reduced."""
    if 3 * m + 1 == 0 or 3 * m + 2 == 0:
        raise ValueError(f"m = {m} gives a zero denominator")
    num = 18 * m + 9
    return SlopePair(reduce(num, 3 * m + 1), reduce(num, 3 * m + 2))


@dataclass(frozen=True, order=True)
class NormalSFS:
    """S^2(e0; b_1/a_1, ..., b_r/a_r) with 0 < b_i < a_i, fibers sorted."""

    e0: int
    fibers: tuple

    @property
    def multiplicities(self):
        return tuple(sorted(a for a, _ in self.fibers))

    def __str__(self):
        inner = ", ".join(f"{b}/{a}" for a, b in self.fibers)
        return f"S2({self.e0}; {inner})" if inner else f"S2({self.e0})"


def normalize_closed_sfs(s: SeifertData) -> NormalSFS:
    """Shift integer parts of the invariants into e0 and sort the fibers."""
    if s.base != "sphere":
        raise ValueError("normal form is only defined over the sphere")
    e0 = 0
    fibers = []
    for alpha, beta in s.fibers:
        if alpha < 0:
            alpha, beta = -alpha, -beta
        k, r = divmod(beta, alpha)
        e0 += k
        if r:
            fibers.append((alpha, r))
    return NormalSFS(e0, tuple(sorted(fibers)))


def mirror_sfs(s: SeifertData) -> SeifertData:
    return SeifertData(s.base, tuple((a, -b) for a, b in s.fibers))


class Chirality(str, Enum):
    ORIENTATION_PRESERVING = "orientation_preserving_homeo"
    ORIENTATION_REVERSING = "orientation_reversing_homeo"
    DISTINCT = "distinct"


def sfs_chiral_compare(a: SeifertData, b: SeifertData) -> Chirality:
    """Decide whether two small Seifert fibered spaces over S^2 agree.

    Only spaces with exactly three exceptional fibers are handled: for
    those the Seifert fibration is unique, so the normal form is a complete
    invariant up to orientation-preserving homeomorphism.  With fewer
    fibers (lens spaces, S^2 x S^1) the normal form is not complete and
    :class:`UnsupportedSFS` is raised.  A space homeomorphic to both the
    other and its mirror is reported as orientation preserving.
    """
    na, nb = normalize_closed_sfs(a), normalize_closed_sfs(b)
    for n in (na, nb):
        if len(n.fibers) != 3:
            raise UnsupportedSFS(
                f"{n} has {len(n.fibers)} exceptional fibers; only 3 are supported")
    if na.multiplicities != nb.multiplicities:
        return Chirality.DISTINCT
    if na == nb:
        return Chirality.ORIENTATION_PRESERVING
    if na == normalize_closed_sfs(mirror_sfs(b)):
        return Chirality.ORIENTATION_REVERSING
    return Chirality.DISTINCT
