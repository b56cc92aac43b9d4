"""Exact scalar helpers and dense univariate polynomial arithmetic.

Scalars are Python ints and fractions.Fraction; there is no floating point
anywhere in this module, so every operation downstream of it is exact.
Polynomials are dense coefficient tuples, constant term first.  Binary-form
semantics (a polynomial viewed as a form of some formal degree n at least
its actual degree) are expressed by passing n explicitly to the operations
that need it (disc_n, mobius_transform).
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]


def _norm_scalar(x: Scalar) -> Scalar:
    """Collapse integral Fractions to int so integer fast paths stay integer."""
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return int(x)
        return x
    return int(x)


# ---------------------------------------------------------------------------
# integer / rational helpers
# ---------------------------------------------------------------------------


def v2(n: Scalar) -> int:
    """2-adic valuation; raises on 0."""
    return vp(n, 2)


def vp(n: Scalar, p: int) -> int:
    """p-adic valuation of an int or Fraction.  Valuation of zero is a domain error."""
    if p < 2:
        raise ValueError(f"valuation prime must be >= 2, got {p}")
    if isinstance(n, Fraction):
        if n == 0:
            raise ValueError("valuation of zero is undefined")
        return vp(n.numerator, p) - vp(n.denominator, p)
    n = int(n)
    if n == 0:
        raise ValueError("valuation of zero is undefined")
    n = abs(n)
    if p == 2:
        return (n & -n).bit_length() - 1
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def odd_part(n: int) -> int:
    """n / 2^v2(n), sign preserved."""
    if n == 0:
        raise ValueError("odd part of zero is undefined")
    return n >> v2(n)


def is_perfect_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


def isqrt_exact(n: int) -> int:
    """Integer square root of a perfect square; raises if n is not one."""
    if not is_perfect_square(n):
        raise ValueError(f"{n} is not a perfect square")
    return math.isqrt(n)


def solve_quadratic_z(a: int, b: int, c: int, n: int = 0) -> tuple[int, ...]:
    """All integer roots of a*x^2 + b*x + c = n, sorted ascending.

    Degenerate leading coefficients are allowed (linear / constant equations);
    an identically satisfied equation (a = b = 0, c = n) is a domain error
    because its solution set is not finite.
    """
    c = c - n
    if a == 0:
        if b == 0:
            if c == 0:
                raise ValueError("equation is identically zero: infinite solutions")
            return ()
        q, r = divmod(-c, b)
        return (q,) if r == 0 else ()
    disc = b * b - 4 * a * c
    if disc < 0 or not is_perfect_square(disc):
        return ()
    s = math.isqrt(disc)
    roots = set()
    for sign in (s, -s):
        num = -b + sign
        q, r = divmod(num, 2 * a)
        if r == 0:
            roots.add(q)
    return tuple(sorted(roots))


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------


class Polynomial:
    """Dense exact-coefficient univariate polynomial, constant term first.

    Coefficients are ints or Fractions; trailing zeros are stripped so the
    stored tuple length determines the actual degree.  The zero polynomial
    has degree -1.  Instances are immutable.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [_norm_scalar(Fraction(c) if not isinstance(c, (int, Fraction)) else c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    # -- construction -------------------------------------------------------

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls(())

    @classmethod
    def constant(cls, c: Scalar) -> "Polynomial":
        return cls((c,))

    @classmethod
    def x(cls) -> "Polynomial":
        return cls((0, 1))

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> "Polynomial":
        return cls((0,) * k + (c,))

    @classmethod
    def from_roots(cls, roots: Sequence[Scalar]) -> "Polynomial":
        """Monic polynomial prod (x - r) over the given roots."""
        out = cls((1,))
        for r in roots:
            out = out * cls((-r, 1))
        return out

    # -- basic queries -------------------------------------------------------

    @property
    def coeffs(self) -> tuple[Scalar, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    def __getitem__(self, i: int) -> Scalar:
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return 0

    @property
    def lc(self) -> Scalar:
        if not self._coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self._coeffs[-1]

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._coeffs)

    def coeff_list(self, n: int | None = None) -> list[Scalar]:
        """Coefficients c0..cn padded with zeros up to index n (defaults to degree)."""
        if n is None:
            n = self.degree
        return [self[i] for i in range(n + 1)]

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other: "Polynomial | Scalar") -> "Polynomial":
        other = self._coerce(other)
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial(out)

    def __sub__(self, other: "Polynomial | Scalar") -> "Polynomial":
        return self + (-self._coerce(other))

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self._coeffs))

    def __mul__(self, other: "Polynomial | Scalar") -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Polynomial.zero()
            return Polynomial(tuple(c * other for c in self._coeffs))
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return Polynomial.zero()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return Polynomial(out)

    __rmul__ = __mul__
    __radd__ = __add__

    def __rsub__(self, other: Scalar) -> "Polynomial":
        return self._coerce(other) - self

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative polynomial power")
        out = Polynomial((1,))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    @staticmethod
    def _coerce(v: "Polynomial | Scalar") -> "Polynomial":
        if isinstance(v, Polynomial):
            return v
        return Polynomial((v,))

    # -- evaluation / composition ---------------------------------------------

    def __call__(self, x: Scalar) -> Scalar:
        acc: Scalar = 0
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return _norm_scalar(acc) if isinstance(acc, Fraction) else acc

    evaluate = __call__

    def compose(self, g: "Polynomial") -> "Polynomial":
        acc = Polynomial.zero()
        for c in reversed(self._coeffs):
            acc = acc * g + Polynomial((c,))
        return acc

    def shift(self, a: Scalar) -> "Polynomial":
        """f(x + a)."""
        return self.compose(Polynomial((a, 1)))

    def derivative(self) -> "Polynomial":
        return Polynomial(tuple(i * c for i, c in enumerate(self._coeffs) if i > 0))

    # -- integral structure ----------------------------------------------------

    def content(self) -> int:
        """gcd of the coefficients of an integral polynomial (0 for the zero poly)."""
        if not self.is_integral:
            raise ValueError("content is defined for integral polynomials")
        g = 0
        for c in self._coeffs:
            g = math.gcd(g, c)
        return g

    def primitive_part(self) -> "Polynomial":
        g = self.content()
        if g in (0, 1):
            return self
        return Polynomial(tuple(c // g for c in self._coeffs))

    def denominator_lcm(self) -> int:
        """lcm of coefficient denominators (1 for integral polynomials)."""
        lcm = 1
        for c in self._coeffs:
            if isinstance(c, Fraction):
                lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
        return lcm

    def clear_denominators(self) -> tuple["Polynomial", int]:
        """(lambda*f, lambda) with the smallest lambda >= 1 making f integral."""
        lam = self.denominator_lcm()
        return self * lam, lam

    def exact_div_scalar(self, d: Scalar) -> "Polynomial":
        """Divide an integral polynomial by an integer, failing if not exact."""
        out = []
        for c in self._coeffs:
            q, r = divmod(c, d)
            if r != 0:
                raise ValueError(f"coefficient {c} not divisible by {d}")
            out.append(q)
        return Polynomial(out)

    # -- misc -------------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial((other,))
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({list(self._coeffs)!r})"

    def __str__(self) -> str:
        return poly_str(self)


def poly_str(f: Polynomial, var: str = "x") -> str:
    """Human-readable form, highest power first; exact coefficients."""
    if f.is_zero:
        return "0"
    parts = []
    for i in range(f.degree, -1, -1):
        c = f[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            xpow = var if i == 1 else f"{var}^{i}"
            body = xpow if mag == 1 else f"{mag}*{xpow}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


# ---------------------------------------------------------------------------
# division, gcd, squarefree
# ---------------------------------------------------------------------------


def poly_divmod(f: Polynomial, g: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Quotient and remainder over the rationals (exact)."""
    if g.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    q = Polynomial.zero()
    r = f
    glc = Fraction(g.lc)
    while not r.is_zero and r.degree >= g.degree:
        k = r.degree - g.degree
        c = Fraction(r.lc) / glc
        t = Polynomial.monomial(k, c)
        q = q + t
        r = r - t * g
    return q, r


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic gcd over Q (primitive integral output when both inputs integral)."""
    a, b = f, g
    while not b.is_zero:
        _, r = poly_divmod(a, b)
        a, b = b, r
    if a.is_zero:
        return a
    a = a * (Fraction(1) / Fraction(a.lc))
    num, _ = a.clear_denominators()
    if num.is_integral:
        num = num.primitive_part()
        if num.lc < 0:
            num = -num
        return num
    return a


def is_squarefree(f: Polynomial) -> bool:
    """True iff f has no repeated roots: gcd(f, f') is constant."""
    if f.is_zero:
        return False
    if f.degree == 0:
        return True
    return poly_gcd(f, f.derivative()).degree == 0


# ---------------------------------------------------------------------------
# resultants and discriminants
# ---------------------------------------------------------------------------


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of integer coefficient lists: lc(b)^(da-db+1) * a mod b."""
    da, db = len(a) - 1, len(b) - 1
    lb = b[-1]
    r = [c * lb ** (da - db + 1) for c in a]
    while len(r) - 1 >= db and any(r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) - 1 < db:
            break
        q, rem = divmod(r[-1], lb)
        if rem != 0:
            raise ArithmeticError("pseudo-division invariant violated")
        k = len(r) - 1 - db
        for i, c in enumerate(b):
            r[k + i] -= q * c
        r.pop()
    while r and r[-1] == 0:
        r.pop()
    return r


def resultant(f: Polynomial, g: Polynomial) -> int:
    """Res(f, g) of integer polynomials under the Sylvester-matrix convention.

    Computed fraction-free by the subresultant PRS; a Sylvester-determinant
    oracle cross-checks this in the test suite.
    """
    if f.is_zero and g.is_zero:
        raise ValueError("resultant of two zero polynomials is undefined")
    if not (f.is_integral and g.is_integral):
        raise ValueError("resultant requires integer polynomials")
    if f.is_zero or g.is_zero:
        zdeg = (g if f.is_zero else f).degree
        return 1 if zdeg == 0 else 0
    sign = 1
    if f.degree < g.degree:
        if (f.degree * g.degree) % 2 == 1:
            sign = -1
        f, g = g, f
    if g.degree == 0:
        return sign * int(g.lc) ** f.degree
    a = list(f.coeffs)
    b = list(g.coeffs)
    s = sign
    gg = 1
    h = 1
    while True:
        da, db = len(a) - 1, len(b) - 1
        d = da - db
        if da % 2 == 1 and db % 2 == 1:
            s = -s
        r = _prem(a, b)
        a = b
        denom = gg * h**d
        if r:
            b = [c // denom for c in r]
            if any(c * denom != orig for c, orig in zip(b, r)):
                raise ArithmeticError("subresultant exact division failed")
        else:
            b = []
        if not b:
            # pseudo-remainder vanished: positive-degree common factor
            return 0
        gg = a[-1]
        if d == 0:
            pass  # h unchanged
        elif d == 1:
            h = gg
        else:
            h = gg**d // h ** (d - 1)
        if len(b) - 1 == 0:
            q = len(a) - 1
            return s * (b[0] ** q) // h ** (q - 1)


def disc_n(f: Polynomial, n: int) -> int:
    """Discriminant of f viewed as a binary form of formal degree n.

    For actual degree m = n this is the classical
    (-1)^(n(n-1)/2) * Res(f, f') / lc(f); for m < n the binary-form
    convention lc^(2(n-m)) * disc_m(f) applies, which is what makes the
    degree-6 transformation law carry the exponent-30 determinant factor.
    """
    if n < 1:
        raise ValueError(f"formal degree must be >= 1, got {n}")
    if f.is_zero:
        raise ValueError("discriminant of the zero polynomial is undefined")
    if not f.is_integral:
        raise ValueError("disc_n requires an integral polynomial")
    m = f.degree
    if m < 1:
        raise ValueError("discriminant requires actual degree >= 1")
    if m > n:
        raise ValueError(f"actual degree {m} exceeds formal degree {n}")
    d = _disc_exact_degree(f)
    if m == n:
        return d
    return int(f.lc) ** (2 * (n - m)) * d


def _disc_exact_degree(f: Polynomial) -> int:
    m = f.degree
    if m == 1:
        return 1
    res = resultant(f, f.derivative())
    sign = -1 if (m * (m - 1) // 2) % 2 else 1
    q, r = divmod(sign * res, int(f.lc))
    if r != 0:
        raise ArithmeticError("discriminant division by lc not exact")
    return q


def mobius_transform(f: Polynomial, n: int, a: int, b: int, c: int, d: int) -> Polynomial:
    """(c*x + d)^n * f((a*x + b)/(c*x + d)) expanded exactly, formal degree n."""
    if a * d - b * c == 0:
        raise ValueError("singular matrix: ad - bc = 0")
    if f.degree > n:
        raise ValueError(f"formal degree {n} below actual degree {f.degree}")
    num = Polynomial((b, a))
    den = Polynomial((d, c))
    num_pows = [Polynomial((1,))]
    den_pows = [Polynomial((1,))]
    for _ in range(n):
        num_pows.append(num_pows[-1] * num)
        den_pows.append(den_pows[-1] * den)
    out = Polynomial.zero()
    for i in range(f.degree + 1):
        ci = f[i]
        if ci == 0:
            continue
        out = out + num_pows[i] * den_pows[n - i] * ci
    return out
