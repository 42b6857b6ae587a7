"""
Integer Laurent polynomials and the Alexander-polynomial side of the
half-integral obstruction.

An L-space knot has a symmetric Alexander polynomial of the form

    (-1)^k + sum_{j=1}^k (-1)^(k-j) (t^{n_j} + t^{-n_j}),   0 < n_1 < ... < n_k,

and then Delta''(1) = 2 sum_j (-1)^(k-j) n_j^2.  The exponents n_j are
called the gap sequence here; n_k is the genus.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "LaurentPolynomial",
    "GapSequence",
    "NotLSpaceForm",
    "is_symmetric_normalized",
    "normalize_alexander",
    "second_derivative_at_one",
    "a2",
    "lspace_gaps",
    "gap_polynomial",
    "a2_from_gaps",
    "check_claim_bound",
]


class NotLSpaceForm(ValueError):
    """The polynomial is not the Alexander polynomial of an L-space knot."""


class LaurentPolynomial:
    """Finitely supported map exponent -> integer coefficient.

    Zero coefficients are never stored, so equality is equality of dicts.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=None):
        clean = {}
        for e, c in dict(coeffs or {}).items():
            if int(e) != e or int(c) != c:
                raise TypeError("exponents and coefficients must be integers")
            if c:
                clean[int(e)] = int(c)
        self._coeffs = clean

    @classmethod
    def from_pairs(cls, pairs):
        """Build from ``[[exponent, coefficient], ...]``; repeated exponents add."""
        coeffs = {}
        for e, c in pairs:
            coeffs[e] = coeffs.get(e, 0) + c
        return cls(coeffs)

    @classmethod
    def monomial(cls, exponent, coefficient=1):
        return cls({exponent: coefficient})

    def to_pairs(self):
        return [[e, self._coeffs[e]] for e in sorted(self._coeffs)]

    @property
    def coeffs(self):
        return dict(self._coeffs)

    def coefficient(self, e):
        return self._coeffs.get(e, 0)

    def is_zero(self):
        return not self._coeffs

    @property
    def min_exponent(self):
        if not self._coeffs:
            raise ValueError("zero polynomial has no exponents")
        return min(self._coeffs)

    @property
    def max_exponent(self):
        if not self._coeffs:
            raise ValueError("zero polynomial has no exponents")
        return max(self._coeffs)

    def __call__(self, t):
        t = Fraction(t)
        return sum((c * t**e for e, c in self._coeffs.items()), Fraction(0))

    def shift(self, k):
        """Multiply by t^k."""
        return LaurentPolynomial({e + k: c for e, c in self._coeffs.items()})

    def __neg__(self):
        return LaurentPolynomial({e: -c for e, c in self._coeffs.items()})

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial({0: other})
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial({0: other})
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPolynomial({e: c * other for e, c in self._coeffs.items()})
        out = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial({0: other})
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __repr__(self):
        return f"LaurentPolynomial({self.to_pairs()})"

    def __str__(self):
        if not self._coeffs:
            return "0"
        terms = []
        for e in sorted(self._coeffs, reverse=True):
            c = self._coeffs[e]
            if e == 0:
                body = str(abs(c))
            else:
                mono = "t" if e == 1 else f"t^{e}"
                body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def is_symmetric_normalized(f: LaurentPolynomial) -> bool:
    """Delta(t) = Delta(1/t) coefficientwise and Delta(1) = 1."""
    if f.is_zero():
        return False
    coeffs = f.coeffs
    if any(coeffs.get(-e, 0) != c for e, c in coeffs.items()):
        return False
    return sum(coeffs.values()) == 1


def normalize_alexander(f: LaurentPolynomial) -> LaurentPolynomial:
    """Multiply by a unit +-t^e to reach the symmetric normalized form.

    Raises ValueError if no such unit exists.
    """
    if f.is_zero():
        raise ValueError("zero polynomial")
    span = f.max_exponent + f.min_exponent
    if span % 2:
        raise ValueError(f"{f} has odd span and cannot be made symmetric")
    g = f.shift(-span // 2)
    if sum(g.coeffs.values()) == -1:
        g = -g
    if not is_symmetric_normalized(g):
        raise ValueError(f"{f} is not an Alexander polynomial up to units")
    return g


def second_derivative_at_one(f: LaurentPolynomial) -> int:
    return sum(c * e * (e - 1) for e, c in f.coeffs.items())


def a2(f: LaurentPolynomial) -> int:
    """Second Conway coefficient, Delta''(1) / 2 (always an integer: e(e-1) is even)."""
    return second_derivative_at_one(f) // 2


@dataclass(frozen=True)
class GapSequence:
    n: tuple

    def __post_init__(self):
        n = tuple(int(x) for x in self.n)
        object.__setattr__(self, "n", n)
        if not n:
            raise ValueError("gap sequence must be non-empty")
        if n[0] < 1:
            raise ValueError("gap sequence entries must be positive")
        if any(a >= b for a, b in zip(n, n[1:])):
            raise ValueError(f"gap sequence {n} is not strictly increasing")

    @property
    def k(self):
        return len(self.n)

    @property
    def genus(self):
        return self.n[-1]


def gap_polynomial(g: GapSequence) -> LaurentPolynomial:
    """The L-space-form Alexander polynomial with gap sequence ``g``."""
    k = g.k
    coeffs = {0: (-1) ** k}
    for j, nj in enumerate(g.n, start=1):
        sign = (-1) ** (k - j)
        coeffs[nj] = sign
        coeffs[-nj] = sign
    return LaurentPolynomial(coeffs)


def lspace_gaps(f: LaurentPolynomial) -> GapSequence:
    """Recover the gap sequence of ``f``, or raise :class:`NotLSpaceForm`."""
    if not is_symmetric_normalized(f):
        raise NotLSpaceForm(f"{f} is not symmetric normalized")
    positive = sorted(e for e in f.coeffs if e > 0)
    k = len(positive)
    if k == 0:
        raise NotLSpaceForm(f"{f} is not of L-space form (trivial polynomial)")
    if f.coefficient(0) != (-1) ** k:
        raise NotLSpaceForm(
            f"{f} is not of L-space form: constant term {f.coefficient(0)}")
    for j, e in enumerate(positive, start=1):
        if f.coefficient(e) != (-1) ** (k - j):
            raise NotLSpaceForm(
                f"{f} is not of L-space form: coefficient {f.coefficient(e)} at t^{e}")
    g = GapSequence(tuple(positive))
    if second_derivative_at_one(f) != 2 * a2_from_gaps(g):
        raise ArithmeticError(f"gap identity fails for {f}")
    return g


def a2_from_gaps(g: GapSequence) -> int:
    k = g.k
    return sum((-1) ** (k - j) * nj * nj for j, nj in enumerate(g.n, start=1))


def check_claim_bound(g: GapSequence) -> bool:
    """a_2 <= genus^2 for an L-space knot with gap sequence ``g``."""
    return a2_from_gaps(g) <= g.genus ** 2
