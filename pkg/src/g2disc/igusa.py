"""Igusa invariants of the sextic 4P + Q^2, absolute invariants, the p-adic
potential-good-reduction test and geometric-isomorphism certification.

The pipeline is: transvectants of the binary sextic give the Clebsch
invariants A, B, C, D; the classical weighted-homogeneous combinations give
the Igusa-Clebsch I2, I4, I6, I10; dividing by 8, 96, 576, 4, 4096 gives
Igusa's J2..J10 normalized so that J10 is exactly the discriminant of the
equation.  The conversion constants below were solved for exactly against
the symmetric root-difference definitions (the test suite re-derives them).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .exactmath import Polynomial, Scalar, vp
from .weierstrass import GenusTwoEquation

# ---------------------------------------------------------------------------
# binary forms as (int coefficient tuple, degree) with a separate Fraction
# scale, so the hot arithmetic stays in plain ints
# ---------------------------------------------------------------------------


def _dx(c: tuple, n: int) -> tuple:
    return tuple((i + 1) * c[i + 1] for i in range(n))


def _dz(c: tuple, n: int) -> tuple:
    return tuple((n - i) * c[i] for i in range(n))


def _partial(c: tuple, n: int, p: int, q: int) -> tuple[tuple, int]:
    for _ in range(p):
        c = _dx(c, n)
        n -= 1
    for _ in range(q):
        c = _dz(c, n)
        n -= 1
    return c, n


def _mul(c1: tuple, n1: int, c2: tuple, n2: int) -> tuple:
    out = [0] * (n1 + n2 + 1)
    for i, a in enumerate(c1):
        if a:
            for j, b in enumerate(c2):
                out[i + j] += a * b
    return tuple(out)


class _Form:
    """Integer binary form times a rational scale."""

    __slots__ = ("coeffs", "deg", "scale")

    def __init__(self, coeffs, deg, scale=Fraction(1)):
        self.coeffs = tuple(coeffs)
        self.deg = deg
        self.scale = scale


def _transvectant(f: _Form, g: _Form, k: int) -> _Form:
    nf, ng = f.deg, g.deg
    out_deg = nf + ng - 2 * k
    acc = [0] * (out_deg + 1)
    for j in range(k + 1):
        pf, dnf = _partial(f.coeffs, nf, k - j, j)
        pg, dng = _partial(g.coeffs, ng, j, k - j)
        prod = _mul(pf, dnf, pg, dng)
        s = (-1) ** j * math.comb(k, j)
        for i, v in enumerate(prod):
            acc[i] += s * v
    scale = f.scale * g.scale * Fraction(
        math.factorial(nf - k) * math.factorial(ng - k),
        math.factorial(nf) * math.factorial(ng),
    )
    return _Form(acc, out_deg, scale)


def _clebsch_invariants(sextic: tuple) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """(A, B, C, D) of an integer-coefficient binary sextic."""
    f = _Form(sextic, 6)
    i_ = _transvectant(f, f, 4)
    delta = _transvectant(i_, i_, 2)
    y1 = _transvectant(f, i_, 4)
    y2 = _transvectant(i_, y1, 2)
    y3 = _transvectant(i_, y2, 2)

    def scalar(form: _Form) -> Fraction:
        return form.scale * form.coeffs[0]

    a = scalar(_transvectant(f, f, 6))
    b = scalar(_transvectant(i_, i_, 4))
    c = scalar(_transvectant(i_, delta, 4))
    d = scalar(_transvectant(y3, y1, 2))
    return a, b, c, d


# Clebsch -> Igusa-Clebsch, solved exactly against the root-pairing sums.
def _igusa_clebsch(sextic: tuple) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    a, b, c, d = _clebsch_invariants(sextic)
    i2 = -120 * a
    i4 = -720 * a**2 + 6750 * b
    i6 = 8640 * a**3 - 108000 * a * b + 202500 * c
    i10 = (
        -62208 * a**5
        + 972000 * a**3 * b
        + 1620000 * a**2 * c
        - 3037500 * a * b**2
        - 6075000 * b * c
        - 4556250 * d
    )
    return i2, i4, i6, i10


def _norm(x: Fraction) -> Scalar:
    return int(x) if x.denominator == 1 else x


@dataclass(frozen=True)
class IgusaInvariants:
    """Exact J2, J4, J6, J8, J10 (weights 2,4,6,8,10); J10 is the discriminant."""

    j2: Scalar
    j4: Scalar
    j6: Scalar
    j8: Scalar
    j10: Scalar

    def as_tuple(self) -> tuple[Scalar, Scalar, Scalar, Scalar, Scalar]:
        return (self.j2, self.j4, self.j6, self.j8, self.j10)

    def to_json_dict(self) -> dict:
        return {k: str(v) for k, v in zip(("J2", "J4", "J6", "J8", "J10"), self.as_tuple())}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


@dataclass(frozen=True)
class AbsoluteInvariants:
    """The ratios J_{2i}^5 / J10^i, constant on geometric isomorphism classes."""

    r1: Scalar
    r2: Scalar
    r3: Scalar
    r4: Scalar

    def as_tuple(self):
        return (self.r1, self.r2, self.r3, self.r4)

    def to_json_dict(self) -> dict:
        return {k: str(v) for k, v in zip(("J2^5/J10", "J4^5/J10^2", "J6^5/J10^3", "J8^5/J10^4"), self.as_tuple())}


def igusa_invariants_of_sextic(coeffs) -> IgusaInvariants:
    """J-invariants of an integral binary sextic given as c0..c6 (missing = 0)."""
    sextic = tuple(int(coeffs[i]) if i < len(coeffs) else 0 for i in range(7))
    i2, i4, i6, i10 = _igusa_clebsch(sextic)
    j2 = i2 / 8
    j4 = (4 * j2**2 - i4) / 96
    j6 = (8 * j2**3 - 160 * j2 * j4 - i6) / 576
    j8 = (j2 * j6 - j4**2) / 4
    j10 = i10 / 4096
    # permanent self-check: the same J8 through the expanded I-expression
    j8_direct = (
        i2**4 / Fraction(28311552)
        + 13 * i2**2 * i4 / Fraction(884736)
        - i2 * i6 / Fraction(18432)
        - i4**2 / Fraction(36864)
    )
    if j8 != j8_direct:
        raise ArithmeticError("internal inconsistency in the J8 conversion")
    return IgusaInvariants(*(_norm(v) for v in (j2, j4, j6, j8, j10)))


def igusa_invariants(eq: GenusTwoEquation) -> IgusaInvariants:
    """J-invariants of the equation; requires a smooth equation.

    Rational equations are handled by clearing denominators and undoing the
    scaling by the invariant weights (J_{2i} is homogeneous of degree 2i in
    the sextic coefficients).
    """
    f = eq.f_sextic
    fi, lam = f.clear_denominators()
    if fi.is_zero or fi.degree < 1:
        raise ValueError("singular equation")
    inv = igusa_invariants_of_sextic(fi.coeff_list(6))
    if inv.j10 == 0:
        raise ValueError("singular equation: J10 = 0")
    if lam != 1:
        l = Fraction(lam)
        inv = IgusaInvariants(
            _norm(Fraction(inv.j2) / l**2),
            _norm(Fraction(inv.j4) / l**4),
            _norm(Fraction(inv.j6) / l**6),
            _norm(Fraction(inv.j8) / l**8),
            _norm(Fraction(inv.j10) / l**10),
        )
    return inv


def absolute_invariants(inv: IgusaInvariants) -> AbsoluteInvariants:
    if inv.j10 == 0:
        raise ValueError("absolute invariants need J10 != 0")
    j2, j4, j6, j8, j10 = (Fraction(v) for v in inv.as_tuple())
    return AbsoluteInvariants(
        _norm(j2**5 / j10),
        _norm(j4**5 / j10**2),
        _norm(j6**5 / j10**3),
        _norm(j8**5 / j10**4),
    )


def potential_good_reduction(eq: GenusTwoEquation, p: int) -> bool:
    """True iff J_{2i}^5 / J10^i is p-integral for i = 1..5 (Liu's criterion).

    Valuations are compared directly (5*v_p(J_{2i}) >= i*v_p(J10)), so the
    fifth powers are never formed.  A vanishing J_{2i} passes its test.
    """
    if p < 2:
        raise ValueError(f"p must be a prime, got {p}")
    inv = igusa_invariants(eq)
    v10 = vp(inv.j10, p)
    for i, j in zip((1, 2, 3, 4), (inv.j2, inv.j4, inv.j6, inv.j8)):
        if j == 0:
            continue
        if 5 * vp(j, p) < i * v10:
            return False
    return True


def geometrically_isomorphic(e1: GenusTwoEquation, e2: GenusTwoEquation) -> bool:
    """Equality of absolute invariants: isomorphism over the algebraic closure.

    This is only a necessary condition for isomorphism over Q (quadratic
    twists are identified); rational isomorphism is certified constructively
    by exhibiting a Transformation, never decided here.
    """
    a1 = absolute_invariants(igusa_invariants(e1))
    a2 = absolute_invariants(igusa_invariants(e2))
    return a1.as_tuple() == a2.as_tuple()
