"""Independent oracles used by the test suite.

These deliberately avoid the code paths they check: the resultant oracle is
a fraction-free Sylvester determinant, the discriminant oracle multiplies
squared root differences, and the invariant oracle expands the classical
symmetric pairing sums over known roots.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from g2disc.exactmath import Polynomial


def sylvester_resultant(f: Polynomial, g: Polynomial) -> int:
    """Res(f, g) as the determinant of the Sylvester matrix (Bareiss elimination)."""
    m, n = f.degree, g.degree
    if m < 0 and n < 0:
        raise ValueError("both zero")
    if m < 0 or n < 0:
        zdeg = n if m < 0 else m
        return 1 if zdeg == 0 else 0
    if m == 0 and n == 0:
        return 1
    if m == 0:
        return int(f.lc) ** n
    if n == 0:
        return int(g.lc) ** m
    size = m + n
    fr = [int(f[m - i]) for i in range(m + 1)]  # high to low
    gr = [int(g[n - i]) for i in range(n + 1)]
    mat = []
    for i in range(n):
        mat.append([0] * i + fr + [0] * (size - m - 1 - i))
    for i in range(m):
        mat.append([0] * i + gr + [0] * (size - n - 1 - i))
    return _bareiss_det(mat)


def _bareiss_det(mat: list[list[int]]) -> int:
    n = len(mat)
    m = [row[:] for row in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def disc_from_roots(roots, lc=1) -> int:
    """lc^(2*deg - 2) * prod of squared pairwise root differences (classical disc)."""
    n = len(roots)
    prod = 1
    for i in range(n):
        for j in range(i + 1, n):
            prod *= (roots[i] - roots[j]) ** 2
    return lc ** (2 * n - 2) * prod


def igusa_clebsch_from_roots(roots, lc) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """(I2, I4, I6, I10) of a sextic with the six given roots via pairing sums.

    I2 = a^2 sum over the 15 pairings of (12)^2(34)^2(56)^2,
    I4 = a^4 sum over the 10 triple splits of the two triangles,
    I6 = a^6 sum over the 60 split+matching terms,
    I10 = a^10 prod (ij)^2.
    """
    assert len(roots) == 6
    r = list(roots)
    idx = range(6)

    def d2(i, j):
        return (r[i] - r[j]) ** 2

    # 15 perfect matchings of six points
    i2 = 0
    for p in _matchings(list(idx)):
        term = 1
        for (i, j) in p:
            term *= d2(i, j)
        i2 += term

    # 10 unordered splits into two triples
    splits = []
    rest_all = set(idx)
    for tri in itertools.combinations(idx, 3):
        if 0 in tri:  # fix 0 in the first triple to avoid double counting
            splits.append((tri, tuple(sorted(rest_all - set(tri)))))
    i4 = 0
    for t1, t2 in splits:
        i4 += _triangle(r, t1) * _triangle(r, t2)

    # 60 = splits x bijections between the triples
    i6 = 0
    for t1, t2 in splits:
        tri_part = _triangle(r, t1) * _triangle(r, t2)
        for perm in itertools.permutations(t2):
            term = tri_part
            for i, j in zip(t1, perm):
                term *= d2(i, j)
            i6 += term

    i10 = 1
    for i in range(6):
        for j in range(i + 1, 6):
            i10 *= d2(i, j)

    a = Fraction(lc)
    return (a**2 * i2, a**4 * i4, a**6 * i6, a**10 * i10)


def _triangle(r, tri):
    (i, j, k) = tri
    return (r[i] - r[j]) ** 2 * (r[j] - r[k]) ** 2 * (r[k] - r[i]) ** 2


def _matchings(items):
    if not items:
        yield []
        return
    first = items[0]
    for i in range(1, len(items)):
        pair = (first, items[i])
        rest = items[1:i] + items[i + 1 :]
        for sub in _matchings(rest):
            yield [pair] + sub


def igusa_from_clebsch_oracle(i2, i4, i6, i10):
    """Standard conversion divisions (8, 96, 576, 4, 4096)."""
    j2 = Fraction(i2) / 8
    j4 = (4 * j2**2 - i4) / 96
    j6 = (8 * j2**3 - 160 * j2 * j4 - i6) / 576
    j8 = (j2 * j6 - j4**2) / 4
    j10 = Fraction(i10) / 4096
    return (j2, j4, j6, j8, j10)
