"""Genus-2 Weierstrass equations y^2 + Q(x)y = P(x), their discriminants,
the coordinate-change law and the quintic normal-form pipeline.

The discriminant of an equation is 2^-12 times the binary-sextic
discriminant of 4P + Q^2.  A coordinate change is the datum
(a, b, c, d, e, H) acting by u = (ax+b)/(cx+d), v = (ey + H(x))/(cx+d)^3;
its effect on the discriminant is exactly e^20 (ad-bc)^-30.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .exactmath import (
    Polynomial,
    Scalar,
    disc_n,
    mobius_transform,
    v2,
    vp,
)

_DISC_SHIFT = Fraction(1, 2**12)


class GenusTwoEquation:
    """Immutable pair (P, Q) with deg P <= 6, deg Q <= 3.

    Rational coefficients are legal (non-integral intermediates occur when
    transforming equations); `is_integral` flags the integral ones.  The
    sextic F = 4P + Q^2 and the discriminant are computed lazily and cached.
    """

    __slots__ = ("_p", "_q", "_f", "_delta")

    def __init__(self, p: Polynomial, q: Polynomial | None = None):
        q = q if q is not None else Polynomial.zero()
        if p.degree > 6:
            raise ValueError(f"deg P = {p.degree} > 6")
        if q.degree > 3:
            raise ValueError(f"deg Q = {q.degree} > 3")
        self._p = p
        self._q = q
        self._f = None
        self._delta = None

    # -- construction ----------------------------------------------------------

    @classmethod
    def from_coeffs(cls, p_coeffs: Sequence[Scalar], q_coeffs: Sequence[Scalar] = ()) -> "GenusTwoEquation":
        return cls(Polynomial(p_coeffs), Polynomial(q_coeffs))

    # -- fields ------------------------------------------------------------------

    @property
    def p(self) -> Polynomial:
        return self._p

    @property
    def q(self) -> Polynomial:
        return self._q

    @property
    def f_sextic(self) -> Polynomial:
        """4P + Q^2, the binary sextic carrying all invariants."""
        if self._f is None:
            self._f = 4 * self._p + self._q * self._q
        return self._f

    @property
    def delta(self) -> Scalar:
        """Discriminant 2^-12 disc_6(4P + Q^2); zero iff the equation is singular."""
        if self._delta is None:
            f = self.f_sextic
            if f.is_zero:
                self._delta = 0
            else:
                fi, lam = f.clear_denominators()
                d = disc_n(fi, 6) if fi.degree >= 1 else 0
                val = Fraction(d, lam**10) * _DISC_SHIFT
                self._delta = int(val) if val.denominator == 1 else val
        return self._delta

    # -- predicates ---------------------------------------------------------------

    @property
    def is_integral(self) -> bool:
        return self._p.is_integral and self._q.is_integral

    @property
    def is_smooth(self) -> bool:
        return self.delta != 0

    @property
    def is_paper_normal(self) -> bool:
        """deg Q <= 2 and P monic of degree 5 (the globally-minimal shape)."""
        return self._q.degree <= 2 and self._p.degree == 5 and self._p.lc == 1

    def delta_odd_part_and_v2(self) -> tuple[Scalar, int]:
        """(odd part, v2) of the discriminant; domain error on singular equations."""
        d = self.delta
        if d == 0:
            raise ValueError("singular equation: discriminant is zero")
        v = v2(d)
        if isinstance(d, int):
            return d >> v if v >= 0 else d * 2 ** (-v), v
        odd = d / Fraction(2) ** v
        return (int(odd) if odd.denominator == 1 else odd), v

    # -- serialization --------------------------------------------------------------

    def canonical_text(self) -> str:
        from .exactmath import poly_str

        rhs = poly_str(self._p)
        if self._q.is_zero:
            return f"y^2 = {rhs}"
        return f"y^2 + ({poly_str(self._q)})*y = {rhs}"

    def to_json_dict(self) -> dict:
        return {
            "P": [str(c) for c in self._p.coeffs],
            "Q": [str(c) for c in self._q.coeffs],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json_dict(cls, obj: dict) -> "GenusTwoEquation":
        def parse(values, field):
            out = []
            for v in values:
                if isinstance(v, int):
                    out.append(v)
                elif isinstance(v, str):
                    out.append(Fraction(v))
                else:
                    raise ValueError(f"field {field!r}: coefficient {v!r} is not an integer or string")
            return out

        if "P" not in obj:
            raise ValueError("field 'P' missing")
        return cls(Polynomial(parse(obj["P"], "P")), Polynomial(parse(obj.get("Q", []), "Q")))

    @classmethod
    def from_json(cls, text: str) -> "GenusTwoEquation":
        return cls.from_json_dict(json.loads(text))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GenusTwoEquation):
            return NotImplemented
        return self._p == other._p and self._q == other._q

    def __hash__(self) -> int:
        return hash((self._p, self._q))

    def __repr__(self) -> str:
        return f"GenusTwoEquation({self.canonical_text()!r})"


@dataclass(frozen=True)
class Transformation:
    """Coordinate change u = (ax+b)/(cx+d), v = (ey + H(x))/(cx+d)^3."""

    a: int
    b: int
    c: int
    d: int
    e: Scalar = 1
    h: Polynomial = Polynomial.zero()

    def __post_init__(self):
        if self.det == 0:
            raise ValueError("singular transformation: ad - bc = 0")
        if self.e == 0:
            raise ValueError("transformation requires e != 0")
        if self.h.degree > 3:
            raise ValueError(f"deg H = {self.h.degree} > 3")

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    @classmethod
    def identity(cls) -> "Transformation":
        return cls(1, 0, 0, 1)

    def then(self, other: "Transformation") -> "Transformation":
        """Composite transformation: apply self first, then `other`."""
        a = other.a * self.a + other.b * self.c
        b = other.a * self.b + other.b * self.d
        c = other.c * self.a + other.d * self.c
        d = other.c * self.b + other.d * self.d
        e = other.e * self.e
        h = other.e * self.h + mobius_transform(other.h, 3, self.a, self.b, self.c, self.d)
        return Transformation(a, b, c, d, e, h)


def discriminant(eq: GenusTwoEquation) -> Scalar:
    return eq.delta


def apply_transformation(eq: GenusTwoEquation, t: Transformation) -> GenusTwoEquation:
    """Equation of the image curve in the (u, v) coordinates.

    Writing N for the adjugate matrix (d, -b; -c, a), the substitution gives
        Q' = (e*M3(Q; N) - 2*M3(H; N)) / det^3
        P' = (e^2*M6(P; N) + e*M3(Q; N)*M3(H; N) - M3(H; N)^2) / det^6
    and the discriminant picks up exactly e^20 * det^-30.
    """
    na, nb, nc, nd = t.d, -t.b, -t.c, t.a
    qt = mobius_transform(eq.q, 3, na, nb, nc, nd)
    ht = mobius_transform(t.h, 3, na, nb, nc, nd)
    pt = mobius_transform(eq.p, 6, na, nb, nc, nd)
    det = t.det
    inv3 = Fraction(1, det**3) if det > 0 else Fraction(1, det**3)
    q_new = (t.e * qt - 2 * ht) * inv3
    p_new = (t.e * t.e * pt + t.e * qt * ht - ht * ht) * Fraction(1, det**6)
    return GenusTwoEquation(p_new, q_new)


class ConstructedEquation(NamedTuple):
    """Equation plus the closed-form discriminant its construction predicts."""

    equation: GenusTwoEquation
    closed_form_delta: int


def from_roots_quintic(b1: int, b2: int, b3: int, b4: int) -> ConstructedEquation:
    """y^2 = x(x-b1)(x-b2)(x-b3)(x-b4) with its product-form discriminant."""
    bs = (b1, b2, b3, b4)
    p = Polynomial.from_roots((0,) + bs)
    delta = 2**8
    for b in bs:
        delta *= b * b
    for i in range(4):
        for j in range(i + 1, 4):
            delta *= (bs[i] - bs[j]) ** 2
    return ConstructedEquation(GenusTwoEquation(p), delta)


def from_quartic_split(b1: int, b2: int, b3: int, b4: int) -> ConstructedEquation:
    """y^2 = x(x-b1)(x-b2)(x^2+b3 x+b4); discriminant in the four-point closed form."""
    quad = Polynomial((b4, b3, 1))
    p = Polynomial.from_roots((0, b1, b2)) * quad
    delta = (
        2**8
        * b1**2
        * (b1 - b2) ** 2
        * b2**2
        * (b3**2 - 4 * b4)
        * b4**2
        * (b1**2 + b1 * b3 + b4) ** 2
        * (b2**2 + b2 * b3 + b4) ** 2
    )
    return ConstructedEquation(GenusTwoEquation(p), delta)


def two_quadratics_k(a1: int, a2: int, b1: int, b2: int) -> int:
    """The cross term K; equals (a2-b2)^2 + (a1-b1)(a1 b2 - a2 b1)."""
    return (a2 - b2) ** 2 + (a1 - b1) * (a1 * b2 - a2 * b1)


def from_two_quadratics(a1: int, a2: int, b1: int, b2: int) -> ConstructedEquation:
    """y^2 = x(x^2+a1 x+a2)(x^2+b1 x+b2)."""
    p = Polynomial((0, 1)) * Polynomial((a2, a1, 1)) * Polynomial((b2, b1, 1))
    k = two_quadratics_k(a1, a2, b1, b2)
    delta = 2**8 * (a1**2 - 4 * a2) * a2**2 * (b1**2 - 4 * b2) * b2**2 * k**2
    return ConstructedEquation(GenusTwoEquation(p), delta)


def cubic_disc(d: int, e: int, f: int) -> int:
    """Discriminant of x^3 + d x^2 + e x + f."""
    return d * d * e * e - 4 * e**3 - 4 * d**3 * f + 18 * d * e * f - 27 * f * f


def from_cubic_split(b: int, d: int, e: int, f: int) -> ConstructedEquation:
    """y^2 = x(x-b)(x^3+d x^2+e x+f)."""
    p = Polynomial.from_roots((0, b)) * Polynomial((f, e, d, 1))
    delta = 2**8 * b**2 * f**2 * (b**3 + d * b**2 + e * b + f) ** 2 * cubic_disc(d, e, f)
    return ConstructedEquation(GenusTwoEquation(p), delta)


def quartic_disc(b: int, c: int, d: int, e: int) -> int:
    """Discriminant of x^4 + b x^3 + c x^2 + d x + e."""
    return (
        b**2 * c**2 * d**2
        - 4 * c**3 * d**2
        - 4 * b**3 * d**3
        + 18 * b * c * d**3
        - 27 * d**4
        - 4 * b**2 * c**3 * e
        + 16 * c**4 * e
        + 18 * b**3 * c * d * e
        - 80 * b * c**2 * d * e
        - 6 * b**2 * d**2 * e
        + 144 * c * d**2 * e
        - 27 * b**4 * e**2
        + 144 * b**2 * c * e**2
        - 128 * c**2 * e**2
        - 192 * b * d * e**2
        + 256 * e**3
    )


def from_quartic(b: int, c: int, d: int, e: int) -> ConstructedEquation:
    """y^2 = x(x^4+b x^3+c x^2+d x+e)."""
    p = Polynomial((0, 1)) * Polynomial((e, d, c, b, 1))
    delta = 2**8 * e**2 * quartic_disc(b, c, d, e)
    return ConstructedEquation(GenusTwoEquation(p), delta)


# ---------------------------------------------------------------------------
# quintic normal form (two rational Weierstrass points)
# ---------------------------------------------------------------------------


def rational_weierstrass_abscissas(eq: GenusTwoEquation) -> list[Fraction]:
    """Rational roots of 4P + Q^2, i.e. x-coordinates of the finite rational
    Weierstrass points, sorted by (|x|, sign)."""
    f, _ = eq.f_sextic.clear_denominators()
    f = f.primitive_part()
    if f.is_zero:
        raise ValueError("singular equation")
    roots: set[Fraction] = set()
    a0 = f[0]
    if a0 == 0:
        roots.add(Fraction(0))
        while f[0] == 0:
            f = Polynomial(f.coeffs[1:])
    lead = int(f.lc)
    const = int(f[0])
    for q in _divisors(abs(lead)):
        for p_ in _divisors(abs(const)):
            for cand in (Fraction(p_, q), Fraction(-p_, q)):
                if f(cand) == 0:
                    roots.add(cand)
    return sorted(roots, key=lambda r: (abs(r), r < 0))


def _divisors(n: int) -> list[int]:
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    return sorted(out)


def quintic_normal_form_transformation(x0: Fraction) -> Transformation:
    """The Lemma-1 move: complete the square, scale u = 4(x - x0)."""
    raise NotImplementedError  # built inside quintic_normal_form (needs Q)


def quintic_normal_form(eq: GenusTwoEquation, x0: Scalar | None = None) -> tuple[GenusTwoEquation, Transformation]:
    """Integral model y^2 = G(x), G monic quintic, from a paper-normal equation.

    Completing the square and rescaling by u = 4(x - x0) multiplies the
    discriminant by exactly 2^40 and keeps minimality at every odd prime;
    the Weierstrass point at x0 lands at the origin, so G(0) = 0.  When x0
    is not supplied the rational root of 4P + Q^2 of least (|x|, sign) is
    used.  Raises if the equation is not paper-normal or no rational
    Weierstrass point exists.
    """
    if not eq.is_paper_normal:
        raise ValueError("quintic normal form requires deg Q <= 2 and monic quintic P")
    if not eq.is_integral:
        raise ValueError("quintic normal form requires an integral equation")
    if x0 is None:
        roots = rational_weierstrass_abscissas(eq)
        if not roots:
            raise ValueError("no rational Weierstrass point")
        x0 = roots[0]
    else:
        x0 = Fraction(x0)
        if eq.f_sextic(x0) != 0:
            raise ValueError(f"x0 = {x0} is not a Weierstrass point of the equation")
    four_x0 = 4 * x0
    if four_x0.denominator != 1:
        raise ValueError("rational Weierstrass point with denominator not dividing 4")
    t = Transformation(4, -int(four_x0), 0, 1, e=2**5, h=16 * eq.q)
    out = apply_transformation(eq, t)
    if not out.is_integral:
        raise ArithmeticError("normal form produced a non-integral model")
    if not (out.q.is_zero and out.p.degree == 5 and out.p.lc == 1 and out.p[0] == 0):
        raise ArithmeticError("normal form model is not a monic quintic through the origin")
    return out, t


def descend_to_paper_normal(eq: GenusTwoEquation) -> GenusTwoEquation | None:
    """Inverse of the normal-form pipeline for y^2 = G(x), G monic quintic.

    Returns an integral paper-normal (P, Q) whose normal form is the input,
    with discriminant delta/2^40, or None when no such model exists.  The
    candidate is unique up to the choice of Q mod 2.
    """
    if not (eq.q.is_zero and eq.p.is_integral and eq.p.degree == 5 and eq.p.lc == 1):
        raise ValueError("descent expects y^2 = G(x) with G monic quintic integral")
    g = eq.p
    # F(x) = G(4x)/2^8 must be integral: coefficient i of G(4x) is g_i * 4^i.
    f_coeffs = []
    for i in range(6):
        num = int(g[i]) * 4**i
        if num % 256 != 0:
            return None
        f_coeffs.append(num // 256)
    f = Polynomial(f_coeffs)
    # need integral Q, deg <= 2, with F == Q^2 (mod 4); only Q mod 2 matters.
    for q2 in (0, 1):
        for q1 in (0, 1):
            for q0 in (0, 1):
                q = Polynomial((q0, q1, q2))
                diff = f - q * q
                if all(int(c) % 4 == 0 for c in diff.coeffs):
                    p = diff.exact_div_scalar(4)
                    return GenusTwoEquation(p, q)
    return None


# ---------------------------------------------------------------------------
# reduction at odd primes
# ---------------------------------------------------------------------------


def reduce_at_odd_prime(eq: GenusTwoEquation, p: int) -> GenusTwoEquation:
    """Greedy v_p reduction by moves u = (x - r)/p, each dividing delta by p^10.

    Only odd primes: the 2-adic minimization problem is out of scope.  The
    move keeps the equation integral exactly when the coefficients of
    P(p*u + r) are divisible by p^4 and those of Q(p*u + r) by p^2.
    """
    if p == 2 or p < 3:
        raise ValueError("reduction implemented for odd primes only")
    if not eq.is_integral:
        raise ValueError("reduction requires an integral equation")
    cur = eq
    while True:
        d = cur.delta
        if d == 0:
            raise ValueError("singular equation")
        if vp(d, p) < 10:
            return cur
        for r in range(p):
            t = Transformation(1, -r, 0, p, e=p)
            cand = apply_transformation(cur, t)
            if cand.is_integral:
                cur = cand
                break
        else:
            return cur
