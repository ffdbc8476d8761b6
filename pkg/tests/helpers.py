"""Random generators and independent oracles shared by the test modules."""

import random
from fractions import Fraction
from itertools import combinations
from math import gcd

from untwist.laurent import LaurentPoly
from untwist.linalg import identity


def random_unimodular(rng, n, steps=8):
    E = identity(n)
    for _ in range(steps):
        if n < 2:
            break
        i, j = rng.sample(range(n), 2)
        op = rng.random()
        if op < 0.7:
            c = rng.choice([-2, -1, 1, 2])
            for row in E:
                row[j] += c * row[i]
        elif op < 0.85:
            for row in E:
                row[i], row[j] = row[j], row[i]
        else:
            for row in E:
                row[i] = -row[i]
    if n == 1 and rng.random() < 0.5:
        E[0][0] = -1
    return E


def random_symmetric_alpha(rng, max_degree=3, bound=5):
    """Random symmetric Laurent polynomial vanishing at t = 1."""
    terms = {}
    total = 0
    for e in range(1, rng.randint(0, max_degree) + 1):
        c = rng.randint(-bound, bound)
        terms[e] = terms[-e] = c
        total += 2 * c
    terms[0] = -total
    return LaurentPoly(terms)


def random_laurent(rng, lo=-5, hi=5, bound=9, density=0.5):
    return LaurentPoly(
        {e: rng.randint(-bound, bound) for e in range(lo, hi + 1) if rng.random() < density}
    )


def random_seifert(rng, genus, bound=3):
    """V = S + N with S symmetric and N the upper half of the standard symplectic form."""
    n = 2 * genus
    V = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            V[i][j] = V[j][i] = rng.randint(-bound, bound)
    for i in range(genus):
        V[2 * i][2 * i + 1] += 1
    return V


def random_nonzero_k(rng, lo=-6, hi=6):
    return rng.choice([k for k in range(lo, hi + 1) if k])


def det_fraction(m):
    """Plain Gaussian elimination over Q; independent of the package's Bareiss code."""
    a = [[Fraction(x) for x in row] for row in m]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return det


def determinantal_divisor_factors(m):
    """Invariant factors from gcds of k x k minors (d_k / d_{k-1})."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    factors = []
    prev = 1
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for rs in combinations(range(rows), k):
            for cs in combinations(range(cols), k):
                g = gcd(g, int(det_fraction([[m[r][c] for c in cs] for r in rs])))
        if g == 0:
            break
        factors.append(g // prev)
        prev = g
    return factors


def unit_square_orbit(n, a):
    """{a * u^2 mod n : u a unit mod n}, by enumeration."""
    return {a * u * u % n for u in range(1, n) if gcd(u, n) == 1}
