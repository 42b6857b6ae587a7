"""Independent reference computations used only by the tests."""

from fractions import Fraction
from itertools import combinations
from math import floor, gcd


def sawtooth(x):
    if x.denominator == 1:
        return Fraction(0)
    return x - floor(x) - Fraction(1, 2)


def dedekind_naive(q, p):
    """s(q, p) straight from the definition, one Fraction per term."""
    return sum((sawtooth(Fraction(i, p)) * sawtooth(Fraction(i * q, p)) for i in range(1, p)),
               Fraction(0))


def det_bareiss(m):
    n = len(m)
    a = [row[:] for row in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def determinantal_divisors(m):
    """d_k = gcd of all k x k minors, for k = 1 .. rank."""
    rows, cols = len(m), len(m[0]) if m else 0
    out = []
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for ri in combinations(range(rows), k):
            for ci in combinations(range(cols), k):
                g = gcd(g, det_bareiss([[m[i][j] for j in ci] for i in ri]))
                if g == 1:
                    break
            if g == 1:
                break
        if g == 0:
            break
        out.append(g)
    return out


def invariant_factors(m):
    """Nonzero invariant factors (including 1s) via determinantal divisors."""
    d = determinantal_divisors(m)
    return [d[0]] + [d[i] // d[i - 1] for i in range(1, len(d))] if d else []


def cokernel_oracle(m, ngens):
    """(free rank, torsion) of Z^ngens / rowspace(m), without any SNF code."""
    factors = invariant_factors(m) if m else []
    return ngens - len(factors), [f for f in factors if f > 1]


def poly_second_derivative_at_one(pairs):
    """Delta''(1) by differentiating term by term in exact arithmetic."""
    return sum(c * e * (e - 1) for e, c in pairs)
