"""Exact scalar tower: Gaussian rationals, Laurent polynomials in z, and
rational functions on the projective line.

Everything here is immutable and all arithmetic is exact.  A "point" of the
projective line is either a :class:`GaussianRational` or the :data:`INFINITY`
sentinel.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Union


class PoleAtPoint(Exception):
    """Raised when a rational function is evaluated at one of its poles."""


# ---------------------------------------------------------------------------
# Gaussian rationals
# ---------------------------------------------------------------------------

RatLike = Union[int, Fraction]


class GaussianRational:
    """An element a + b*i of Q(i), with a, b kept in lowest terms."""

    __slots__ = ("re", "im")

    def __init__(self, re: RatLike = 0, im: RatLike = 0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (int, Fraction)):
            return GaussianRational(x)
        raise TypeError(f"cannot coerce {x!r} to GaussianRational")

    def __add__(self, other):
        o = self._coerce(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        return GaussianRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def inverse(self) -> "GaussianRational":
        n = self.re * self.re + self.im * self.im
        if n == 0:
            raise ZeroDivisionError("inverse of zero Gaussian rational")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = GaussianRational(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    # -- predicates and hashing --------------------------------------------

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_real(self) -> bool:
        return self.im == 0

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GaussianRational(other)
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    # -- text form ----------------------------------------------------------

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}*i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}*i"

    __repr__ = __str__

    @staticmethod
    def parse(text: str) -> "GaussianRational":
        """Parse the "a/b", "c/d*i", or "a/b+c/d*i" string forms."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError(f"cannot parse Gaussian rational {text!r}")
        try:
            if not s.endswith("i"):
                return GaussianRational(Fraction(s))
            body = s[:-1]
            if body.endswith("*"):
                body = body[:-1]
            # Split off the real part at the last interior sign; fraction
            # notation has no exponents, so any non-leading +/- separates.
            split = max(body.rfind("+"), body.rfind("-"))
            re_txt, im_txt = (body[:split], body[split:]) if split > 0 else ("", body)
            re_part = Fraction(re_txt) if re_txt else Fraction(0)
            if im_txt in ("", "+"):
                im_part = Fraction(1)
            elif im_txt == "-":
                im_part = Fraction(-1)
            else:
                im_part = Fraction(im_txt)
            return GaussianRational(re_part, im_part)
        except ValueError:
            raise ValueError(f"cannot parse Gaussian rational {text!r}")


QI_ZERO = GaussianRational(0)
QI_ONE = GaussianRational(1)
QI_I = GaussianRational(0, 1)


class _Infinity:
    """The point at infinity on the projective line."""

    _instance: Optional["_Infinity"] = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "infinity"


INFINITY = _Infinity()

Point = Union[GaussianRational, _Infinity]

#: Sentinel order of the zero function at any point.
ORDER_OF_ZERO = math.inf


def _sqrt_fraction(f: Fraction) -> Optional[Fraction]:
    if f < 0:
        return None
    pn = math.isqrt(f.numerator)
    pd = math.isqrt(f.denominator)
    if pn * pn == f.numerator and pd * pd == f.denominator:
        return Fraction(pn, pd)
    return None


def gaussian_sqrt(g: GaussianRational) -> Optional[GaussianRational]:
    """A square root of g in Q(i), or None when none exists there."""
    a, b = g.re, g.im
    if b == 0:
        r = _sqrt_fraction(a)
        if r is not None:
            return GaussianRational(r)
        r = _sqrt_fraction(-a)
        if r is not None:
            return GaussianRational(0, r)
        return None
    s = _sqrt_fraction(a * a + b * b)
    if s is None:
        return None
    x = _sqrt_fraction((a + s) / 2)
    if x is None or x == 0:
        return None
    y = b / (2 * x)
    return GaussianRational(x, y)


# ---------------------------------------------------------------------------
# Laurent polynomials
# ---------------------------------------------------------------------------


class LaurentPoly:
    """A Laurent polynomial in z over Q(i), stored as exponent -> coefficient.

    Zero coefficients are never stored.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Optional[Mapping[int, GaussianRational]] = None):
        clean = {}
        if coeffs:
            for e, c in coeffs.items():
                c = GaussianRational._coerce(c)
                if not c.is_zero():
                    clean[int(e)] = c
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors -------------------------------------------------------

    @staticmethod
    def constant(c) -> "LaurentPoly":
        return LaurentPoly({0: GaussianRational._coerce(c)})

    @staticmethod
    def monomial(exp: int, c=1) -> "LaurentPoly":
        return LaurentPoly({exp: GaussianRational._coerce(c)})

    @staticmethod
    def z() -> "LaurentPoly":
        return LaurentPoly.monomial(1)

    @staticmethod
    def from_coefflist(coeffs: Iterable) -> "LaurentPoly":
        """Ordinary polynomial from the list of coefficients of z^0, z^1, ..."""
        return LaurentPoly({e: c for e, c in enumerate(coeffs)})

    # -- structure ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def is_ordinary(self) -> bool:
        """True when no negative exponents occur."""
        return all(e >= 0 for e in self.coeffs)

    def min_exp(self) -> int:
        if self.is_zero():
            raise ValueError("zero polynomial has no minimal exponent")
        return min(self.coeffs)

    def max_exp(self) -> int:
        if self.is_zero():
            raise ValueError("zero polynomial has no maximal exponent")
        return max(self.coeffs)

    def ord_zero(self):
        """Vanishing order at z = 0 (the minimal stored exponent)."""
        return ORDER_OF_ZERO if self.is_zero() else self.min_exp()

    def ord_infinity(self):
        """Vanishing order at z = infinity (minus the maximal exponent)."""
        return ORDER_OF_ZERO if self.is_zero() else -self.max_exp()

    def degree(self) -> int:
        """Degree as an ordinary polynomial; -1 for the zero polynomial."""
        if self.is_zero():
            return -1
        return self.max_exp()

    def coeff(self, exp: int) -> GaussianRational:
        return self.coeffs.get(exp, QI_ZERO)

    def leading_coeff(self) -> GaussianRational:
        return self.coeffs[self.max_exp()]

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(x) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, (int, Fraction, GaussianRational)):
            return LaurentPoly.constant(x)
        raise TypeError(f"cannot coerce {x!r} to LaurentPoly")

    def __add__(self, other):
        o = self._coerce(other)
        out = dict(self.coeffs)
        for e, c in o.coeffs.items():
            out[e] = out.get(e, QI_ZERO) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        out: dict = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in o.coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, QI_ZERO) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by z^k."""
        return LaurentPoly({e + k: c for e, c in self.coeffs.items()})

    def scale(self, c) -> "LaurentPoly":
        c = GaussianRational._coerce(c)
        return LaurentPoly({e: c * v for e, v in self.coeffs.items()})

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    # -- evaluation and division --------------------------------------------

    def evaluate(self, z0: GaussianRational) -> GaussianRational:
        z0 = GaussianRational._coerce(z0)
        if z0.is_zero() and not self.is_zero() and self.min_exp() < 0:
            raise PoleAtPoint("Laurent polynomial has a pole at 0")
        out = QI_ZERO
        for e, c in self.coeffs.items():
            out = out + c * z0**e
        return out

    def divmod_ordinary(self, other: "LaurentPoly"):
        """Polynomial division; both operands must be ordinary polynomials."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if not (self.is_ordinary() and other.is_ordinary()):
            raise ValueError("divmod requires ordinary polynomials")
        rem = dict(self.coeffs)
        quot: dict = {}
        dlead = other.max_exp()
        dcoeff = other.leading_coeff()
        while rem and max(rem) >= dlead:
            e = max(rem)
            q = rem[e] / dcoeff
            quot[e - dlead] = q
            for oe, oc in other.coeffs.items():
                k = oe + e - dlead
                v = rem.get(k, QI_ZERO) - q * oc
                if v.is_zero():
                    rem.pop(k, None)
                else:
                    rem[k] = v
        return LaurentPoly(quot), LaurentPoly(rem)

    def monic(self) -> "LaurentPoly":
        if self.is_zero():
            return self
        return self.scale(self.leading_coeff().inverse())

    @staticmethod
    def gcd_ordinary(a: "LaurentPoly", b: "LaurentPoly") -> "LaurentPoly":
        """Monic gcd of two ordinary polynomials over Q(i)."""
        while not b.is_zero():
            _, r = a.divmod_ordinary(b)
            a, b = b, r
        return a.monic() if not a.is_zero() else a

    def compose_poly(self, psi: "LaurentPoly") -> "LaurentPoly":
        """Substitute an ordinary polynomial psi for z; self must be ordinary."""
        if not self.is_ordinary():
            raise ValueError("compose_poly requires an ordinary polynomial")
        out = LaurentPoly()
        for e, c in sorted(self.coeffs.items()):
            term = LaurentPoly.constant(c)
            for _ in range(e):
                term = term * psi
            out = out + term
        return out

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            if e == 0:
                parts.append(f"({c})")
            elif e == 1:
                parts.append(f"({c})*z")
            else:
                parts.append(f"({c})*z^{e}")
        return " + ".join(parts)

    __repr__ = __str__

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {str(e): str(c) for e, c in sorted(self.coeffs.items())}

    @staticmethod
    def from_json(data: Mapping[str, str]) -> "LaurentPoly":
        return LaurentPoly(
            {int(e): GaussianRational.parse(c) for e, c in data.items()}
        )


LP_ZERO = LaurentPoly()
LP_ONE = LaurentPoly.constant(1)


# ---------------------------------------------------------------------------
# Rational functions
# ---------------------------------------------------------------------------


class RationalFunction:
    """A rational function on the projective line, in canonical form.

    Canonical form: numerator and denominator are ordinary polynomials in z,
    the denominator is monic and coprime to the numerator.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=LP_ONE):
        num = LaurentPoly._coerce(num)
        den = LaurentPoly._coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        # Clear negative exponents so both parts become ordinary polynomials.
        shift = 0
        if not num.is_zero():
            shift = min(shift, num.min_exp())
        shift = min(shift, den.min_exp())
        if shift < 0:
            num = num.shift(-shift)
            den = den.shift(-shift)
        if num.is_zero():
            object.__setattr__(self, "num", LP_ZERO)
            object.__setattr__(self, "den", LP_ONE)
            return
        g = LaurentPoly.gcd_ordinary(num, den)
        if g.degree() > 0 or g.coeff(0) != QI_ONE:
            num, _ = num.divmod_ordinary(g)
            den, _ = den.divmod_ordinary(g)
        lead = den.leading_coeff()
        if lead != QI_ONE:
            inv = lead.inverse()
            num = num.scale(inv)
            den = den.scale(inv)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    # -- constructors -------------------------------------------------------

    @staticmethod
    def _coerce(x) -> "RationalFunction":
        if isinstance(x, RationalFunction):
            return x
        if isinstance(x, (int, Fraction, GaussianRational, LaurentPoly)):
            return RationalFunction(LaurentPoly._coerce(x))
        raise TypeError(f"cannot coerce {x!r} to RationalFunction")

    @staticmethod
    def constant(c) -> "RationalFunction":
        return RationalFunction(LaurentPoly.constant(c))

    @staticmethod
    def z() -> "RationalFunction":
        return RationalFunction(LaurentPoly.z())

    @staticmethod
    def monomial(exp: int, c=1) -> "RationalFunction":
        return RationalFunction(LaurentPoly.monomial(exp, c))

    # -- structure ----------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def is_constant(self) -> bool:
        return self.den.degree() == 0 and self.num.degree() <= 0

    def constant_value(self) -> GaussianRational:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.num.coeff(0)

    def is_polynomial(self) -> bool:
        return self.den.degree() == 0

    def as_polynomial(self) -> LaurentPoly:
        if not self.is_polynomial():
            raise ValueError(f"{self} is not a polynomial")
        return self.num

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        return RationalFunction(
            self.num * o.den + o.num * self.den, self.den * o.den
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return (RationalFunction.constant(1) / self) ** (-k)
        out = RationalFunction.constant(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    # -- evaluation and orders ----------------------------------------------

    def evaluate(self, z0) -> GaussianRational:
        z0 = GaussianRational._coerce(z0)
        dv = self.den.evaluate(z0)
        if dv.is_zero():
            raise PoleAtPoint(f"pole at {z0}")
        return self.num.evaluate(z0) / dv

    def evaluate_at_infinity(self) -> GaussianRational:
        o = self.ord_at(INFINITY)
        if o < 0:
            raise PoleAtPoint("pole at infinity")
        if o > 0:
            return QI_ZERO
        return self.num.leading_coeff()

    def evaluate_point(self, p: Point) -> GaussianRational:
        if p is INFINITY:
            return self.evaluate_at_infinity()
        return self.evaluate(p)

    @staticmethod
    def _root_multiplicity(poly: LaurentPoly, z0: GaussianRational) -> int:
        if poly.is_zero():
            raise ValueError("zero polynomial")
        lin = LaurentPoly({1: QI_ONE, 0: -z0})
        mult = 0
        while True:
            q, r = poly.divmod_ordinary(lin)
            if not r.is_zero():
                return mult
            poly = q
            mult += 1

    def ord_at(self, p: Point):
        """Vanishing order at a point of the projective line.

        Negative values are pole orders; the zero function returns the
        plus-infinity sentinel :data:`ORDER_OF_ZERO`.
        """
        if self.is_zero():
            return ORDER_OF_ZERO
        if p is INFINITY:
            return self.den.degree() - self.num.degree()
        p = GaussianRational._coerce(p)
        if p.is_zero():
            return self.num.ord_zero() - self.den.ord_zero()
        return self._root_multiplicity(self.num, p) - self._root_multiplicity(
            self.den, p
        )

    # -- substitution -------------------------------------------------------

    def compose(self, psi: "RationalFunction") -> "RationalFunction":
        """The composition f(psi(z)) for a rational map psi."""
        psi = RationalFunction._coerce(psi)

        def homog(poly: LaurentPoly, deg: int) -> LaurentPoly:
            # poly(p/q) * q^deg for ordinary poly of degree <= deg
            out = LP_ZERO
            for e, c in poly.coeffs.items():
                term = LaurentPoly.constant(c)
                for _ in range(e):
                    term = term * psi.num
                for _ in range(deg - e):
                    term = term * psi.den
                out = out + term
            return out

        d = max(self.num.degree(), self.den.degree(), 0)
        return RationalFunction(homog(self.num, d), homog(self.den, d))

    def substitute_reciprocal(self) -> "RationalFunction":
        """The function f(1/w), expressed in the coordinate w."""
        return self.compose(RationalFunction(LP_ONE, LaurentPoly.z()))

    # -- roots ---------------------------------------------------------------

    def __str__(self):
        if self.is_polynomial():
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    __repr__ = __str__

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @staticmethod
    def from_json(data: Mapping) -> "RationalFunction":
        return RationalFunction(
            LaurentPoly.from_json(data["num"]), LaurentPoly.from_json(data["den"])
        )


RF_ZERO = RationalFunction(LP_ZERO)
RF_ONE = RationalFunction(LP_ONE)
RF_Z = RationalFunction.z()


class UnsplitQuadratic(Exception):
    """A quadratic polynomial with no roots in Q(i)."""

    def __init__(self, poly: LaurentPoly):
        super().__init__(f"quadratic does not split over Q(i): {poly}")
        self.poly = poly


def poly_roots(poly: LaurentPoly) -> list:
    """All roots in Q(i) of an ordinary polynomial of degree <= 2.

    Raises :class:`UnsplitQuadratic` when a quadratic has irrational roots and
    ``ValueError`` for degrees above 2 (factorization there is out of scope).
    """
    d = poly.degree()
    if d <= 0:
        return []
    if d == 1:
        return [-poly.coeff(0) / poly.coeff(1)]
    if d == 2:
        a, b, c = poly.coeff(2), poly.coeff(1), poly.coeff(0)
        disc = b * b - GaussianRational(4) * a * c
        s = gaussian_sqrt(disc)
        if s is None:
            raise UnsplitQuadratic(poly)
        two_a = GaussianRational(2) * a
        r1 = (-b + s) / two_a
        r2 = (-b - s) / two_a
        return [r1] if r1 == r2 else [r1, r2]
    raise ValueError("root finding beyond quadratics is not supported")
