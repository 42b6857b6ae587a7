"""
Necessary conditions for chirally cosmetic surgeries.

Each checker separates what it computes from what it assumes.  Results
quoted from the literature are entries of :data:`AXIOMS`; every verdict
lists the keys it relied on in ``provenance``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .dedekind import a2_required_by_surgery
from .slopes import Slope, SlopePair, format_fraction, mirror, reduce

__all__ = [
    "AXIOMS",
    "Thm1Verdict",
    "thm1_check",
    "thm1_candidate_ps",
    "THM3_SLOPES",
    "Thm3Scan",
    "thm3_scan",
    "thm3_enumerate",
    "p7_family_distances",
    "PairClassification",
    "cor6_classify",
]

AXIOMS = {
    "positive_pair_lspace":
        "If K(p/q) = -K(p/q') with both slopes positive, the surgered manifolds "
        "are L-spaces, so K is an L-space knot.",
    "lspace_a2_nonzero":
        "An L-space knot admitting such a pair has Delta''(1) != 0, i.e. a_2 != 0.",
    "lspace_fibered_genus":
        "L-space knots are fibered, so the top exponent of the Alexander "
        "polynomial equals the genus.",
    "casson_surgery_formula":
        "K(p) = -K(p/2) forces 6 a_2(K) = p (s(1,p) + s(2,p)).",
    "exceptional_distance_bound":
        "Two exceptional slopes on a hyperbolic knot are at distance at most 8.",
    "cosmetic_p_gt_2":
        "A chirally cosmetic pair p/q, p/q' on a hyperbolic knot with q' < 0, "
        "q' != -q has p > 2.",
    "small_p_families":
        "If a_2 != 0 and p <= 8, a chirally cosmetic pair has p = 7 and "
        "(q, q') = (7s+1, -7s-2) or (7s+2, -7s-1).",
    "reducible_cyclic_distance_one":
        "Two surgeries that are both reducible or both have cyclic fundamental "
        "group are at distance at most 1.",
    "finite_noncyclic_list":
        "The classified pairs of finite non-cyclic surgeries contain no pair "
        "r, -r with r in {1, 2, 3, 4, 1/2, 1/3, 1/4}.",
    "toroidal_distance_ge4":
        "Toroidal surgery pairs at distance >= 4 on hyperbolic knots are "
        "classified; the only mirror pair among them is +-4 on the figure-eight knot.",
}

# slopes r for which (r, -r) survives the exceptional-slope analysis
THM3_SLOPES = tuple(
    Slope(p, q) for p, q in ((1, 4), (1, 3), (1, 2), (1, 1), (2, 1), (3, 1), (4, 1))
)


@dataclass(frozen=True)
class Thm1Verdict:
    genus: int
    a2: int
    p: int
    p_positive_odd: bool
    a2_nonzero: bool
    a2_matches: bool
    a2_within_genus_bound: bool
    p_within_bound: bool
    required_a2: Fraction | None
    reasons: tuple = ()
    provenance: tuple = ()

    @property
    def passes(self):
        return (self.p_positive_odd and self.a2_nonzero and self.a2_matches
                and self.a2_within_genus_bound and self.p_within_bound)

    @property
    def overall(self):
        return "passes_necessary_conditions" if self.passes else "obstructed"

    def to_json(self):
        return {
            "genus": self.genus,
            "a2": self.a2,
            "p": self.p,
            "overall": self.overall,
            "p_positive_odd": self.p_positive_odd,
            "a2_nonzero": self.a2_nonzero,
            "a2_matches": self.a2_matches,
            "a2_within_genus_bound": self.a2_within_genus_bound,
            "p_within_bound": self.p_within_bound,
            "required_a2": (None if self.required_a2 is None
                            else format_fraction(self.required_a2)),
            "reasons": list(self.reasons),
            "provenance": list(self.provenance),
        }


def thm1_check(genus: int, a2: int, p: int) -> Thm1Verdict:
    """Necessary conditions for K(p) = -K(p/2) on a genus-g knot with given a_2."""
    if genus < 1:
        raise ValueError(f"genus must be >= 1, got {genus}")
    if p < 1:
        raise ValueError(f"p must be positive, got {p}")
    reasons = []
    odd = p % 2 == 1
    if not odd:
        reasons.append(f"p = {p} is even, so p/2 is not a reduced slope")
    nonzero = a2 != 0
    if not nonzero:
        reasons.append("L-space surgery forces a2 != 0")

    required = a2_required_by_surgery(p) if odd else None
    matches = required is not None and required == a2
    if odd and not matches:
        reasons.append(
            f"a2 = {a2} but the surgery formula requires (p-1)(p-3)/48 = "
            f"{format_fraction(required)}")
    within_genus = a2 <= genus * genus
    if not within_genus:
        reasons.append(f"a2 = {a2} exceeds genus^2 = {genus * genus}")
    within_bound = p <= 7 * genus + 2
    if not within_bound:
        reasons.append(f"p = {p} exceeds 7g+2 = {7 * genus + 2}")

    return Thm1Verdict(
        genus, a2, p, odd, nonzero, matches, within_genus, within_bound,
        required, tuple(reasons),
        ("positive_pair_lspace", "lspace_a2_nonzero", "lspace_fibered_genus",
         "casson_surgery_formula"),
    )


def thm1_candidate_ps(genus: int):
    """All odd p <= 7g+2 whose required a_2 is a nonzero integer <= g^2.

    Returns ``[(p, required_a2), ...]`` in increasing p.
    """
    if genus < 1:
        raise ValueError(f"genus must be >= 1, got {genus}")
    out = []
    for p in range(1, 7 * genus + 3, 2):
        req = a2_required_by_surgery(p)
        if req.denominator == 1 and req != 0 and req <= genus * genus:
            out.append((p, int(req)))
    return out


def p7_family_distances(s_range: int):
    """Distances p|q' - q| in the two p = 7 families, for |s| <= s_range.

    Both families give 7|14s+3|; this is checked for every s, as is the
    fact that the distance exceeds 8.
    """
    if s_range < 0:
        raise ValueError("s_range must be non-negative")
    out = []
    for s in range(-s_range, s_range + 1):
        d1 = 7 * abs((-7 * s - 2) - (7 * s + 1))
        d2 = 7 * abs((-7 * s - 1) - (7 * s + 2))
        expected = 7 * abs(14 * s + 3)
        if not d1 == d2 == expected:
            raise ArithmeticError(f"family distances {d1}, {d2} != {expected} at s={s}")
        if expected <= 8:
            raise ArithmeticError(f"family distance {expected} <= 8 at s={s}")
        out.append((s, expected))
    return out


def _in_p7_family(p, q, q2):
    if p != 7:
        return False
    return ((q - 1) % 7 == 0 and q2 == -q - 1) or ((q - 2) % 7 == 0 and q2 == -q + 1)


@dataclass
class Thm3Scan:
    pairs: list
    excluded: list = field(default_factory=list)
    provenance: tuple = ()


def thm3_scan(delta_max: int = 8, p_min: int = 3, q_max: int | None = None) -> Thm3Scan:
    """Enumerate (p, q, q') with p|q' - q| <= delta_max and sort them into branches.

    ``excluded`` records every rejected triple with the reason.  The scan
    over q stops at ``q_max``; candidates with q' > 0 exist for every q
    but are all rejected, so the kept pairs do not depend on ``q_max`` once
    it reaches ``delta_max``.
    """
    if delta_max < 1:
        raise ValueError("delta_max must be positive")
    if delta_max > 8:
        raise ValueError("delta_max > 8: the q' > 0 branch is only decided for p <= 8")
    if q_max is None:
        q_max = max(delta_max, 8)
    min_family = min(d for _, d in p7_family_distances(1))

    pairs, excluded = [], []
    for p in range(1, delta_max + 1):
        for q in range(1, q_max + 1):
            if gcd(p, q) != 1:
                continue
            for q2 in range(q - delta_max // p, q):
                if q2 == 0 or gcd(p, q2) != 1:
                    continue
                triple = (p, q, q2)
                if q2 == -q:
                    pairs.append(SlopePair(reduce(p, q), reduce(p, q2)))
                elif q2 < 0:
                    if p < p_min:
                        excluded.append((triple, f"q' < 0, q' != -q forces p <= 2 < p_min={p_min}"))
                    else:
                        pairs.append(SlopePair(reduce(p, q), reduce(p, q2)))
                elif _in_p7_family(p, q, q2) and p * abs(q2 - q) <= delta_max:
                    pairs.append(SlopePair(reduce(p, q), reduce(p, q2)))
                else:
                    excluded.append((
                        triple,
                        "q' > 0: L-space knot with a2 != 0 and p <= 8 leaves only the "
                        f"p = 7 families, at distance >= {min_family} > {delta_max}",
                    ))
    pairs.sort(key=lambda pr: (pr.first.p, pr.first.q, pr.second.p, pr.second.q))
    provenance = ("exceptional_distance_bound", "cosmetic_p_gt_2",
                  "positive_pair_lspace", "lspace_a2_nonzero", "small_p_families")
    return Thm3Scan(pairs, excluded, provenance)


def thm3_enumerate(delta_max: int = 8, p_min: int = 3, q_max: int | None = None):
    """Slope pairs p/q, p/q' that survive the exceptional-surgery analysis.

    With the defaults these are exactly (r, -r) for r in
    1, 2, 3, 4, 1/2, 1/3, 1/4.  Sorted by (p, q).
    """
    return thm3_scan(delta_max, p_min, q_max).pairs


@dataclass(frozen=True)
class PairClassification:
    pair: SlopePair
    irreducible: bool
    infinite_pi1: bool
    toroidal_possible: bool
    notes: tuple
    provenance: tuple

    def to_json(self):
        return {
            "pair": [str(self.pair.first), str(self.pair.second)],
            "irreducible": self.irreducible,
            "infinite_pi1": self.infinite_pi1,
            "toroidal_possible": self.toroidal_possible,
            "notes": list(self.notes),
            "provenance": list(self.provenance),
        }


def cor6_classify(pair: SlopePair) -> PairClassification:
    """Structure of the manifolds produced by a surviving exceptional pair (r, -r)."""
    first, second = pair
    if first.p < 0:
        first, second = second, first
    if second != mirror(first) or first.p == 0:
        raise ValueError(f"{pair} is not of the form (r, -r)")
    if first not in THM3_SLOPES:
        raise ValueError(f"{first} is not one of the surviving slopes "
                         f"{', '.join(map(str, THM3_SLOPES))}")
    pair = SlopePair(first, second)
    d = pair.distance
    notes = [
        f"distance {d} > 1 excludes reducible and cyclic surgeries",
        "finite non-cyclic fundamental group excluded by assumption: pair absent "
        "from the classified list",
    ]
    if first == Slope(4, 1):
        toroidal = True
        notes.append("distance 8: toroidal pair realized by the figure-eight knot")
    elif first == Slope(1, 1):
        toroidal = True
        notes.append("distance 2: below the range of the toroidal classification; "
                     "realization undecided")
    else:
        toroidal = False
        notes.append(f"distance {d} >= 4 and not +-4: excluded by the toroidal classification")
    return PairClassification(
        pair, True, True, toroidal, tuple(notes),
        ("reducible_cyclic_distance_one", "finite_noncyclic_list", "toroidal_distance_ge4"),
    )
