"""Dense univariate polynomials over Q, plus the handful of bivariate
operations needed for specialization scans.

Coefficients are `fractions.Fraction` stored in ascending order; the integer
kernels in `intpoly` do the heavy lifting once denominators are cleared.
"""

from __future__ import annotations

import functools
import math
from fractions import Fraction

from . import intpoly as zx
from .errors import (
    BothZeroError,
    DegreeZeroError,
    DivisionByZeroError,
    NonIntegerCoefficientsError,
    NotSquarefreeError,
    ZeroInputError,
)
from .exactarith import prime_factors

_F = Fraction


def _coerce(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    return Fraction(c)


class Poly:
    """Immutable dense polynomial over Q."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_coerce(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("Poly is immutable")

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls):
        return cls(())

    @classmethod
    def one(cls):
        return cls((1,))

    @classmethod
    def x(cls):
        return cls((0, 1))

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @classmethod
    def monomial(cls, k, c=1):
        return cls((0,) * k + (c,))

    @classmethod
    def from_string(cls, text, var="x"):
        from .parsing import parse_poly

        return parse_poly(text, var=var)

    # -- basic structure ---------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lc(self):
        if not self.coeffs:
            return _F(0)
        return self.coeffs[-1]

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == Poly((other,))
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __getitem__(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return _F(0)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = self._lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(
            [self[i] + other[i] for i in range(n)],
        )

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if not self.coeffs or not other.coeffs:
            return Poly.zero()
        out = [_F(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, e):
        result = Poly.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def divrem(self, other):
        other = self._lift(other)
        if other.is_zero():
            raise DivisionByZeroError("polynomial division by zero")
        q = [_F(0)] * max(len(self.coeffs) - len(other.coeffs) + 1, 0)
        r = list(self.coeffs)
        d = other.degree
        inv = 1 / other.lc
        while len(r) - 1 >= d and any(r):
            while r and r[-1] == 0:
                r.pop()
            if len(r) - 1 < d:
                break
            c = r[-1] * inv
            k = len(r) - 1 - d
            q[k] = c
            for i, b in enumerate(other.coeffs):
                r[k + i] -= c * b
            r.pop()
        return Poly(q), Poly(r)

    def __divmod__(self, other):
        return self.divrem(other)

    def __floordiv__(self, other):
        return self.divrem(other)[0]

    def __mod__(self, other):
        return self.divrem(other)[1]

    def compose(self, inner):
        """self(inner(x)) by Horner."""
        inner = self._lift(inner)
        acc = Poly.zero()
        for c in reversed(self.coeffs):
            acc = acc * inner + Poly((c,))
        return acc

    def __call__(self, x):
        if isinstance(x, Poly):
            return self.compose(x)
        acc = _F(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self):
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def monic(self):
        if self.is_zero():
            return self
        inv = 1 / self.lc
        return Poly([c * inv for c in self.coeffs])

    def shift(self, a):
        """self(x + a)."""
        return self.compose(Poly((a, 1)))

    def scale_root(self, c):
        """Monic polynomial whose roots are c times the roots of self."""
        d = self.degree
        return Poly([self[i] * _F(c) ** (d - i) for i in range(d + 1)]).monic()

    @staticmethod
    def _lift(other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly((other,))
        raise TypeError(f"cannot combine Poly with {type(other)!r}")

    # -- integer bridging ----------------------------------------------------

    def denominator_lcm(self):
        d = 1
        for c in self.coeffs:
            d = d * c.denominator // math.gcd(d, c.denominator)
        return d

    def to_int_list(self):
        """(integer coefficient list, positive denominator d) with self = list/d."""
        d = self.denominator_lcm()
        return [int(c * d) for c in self.coeffs], d

    def is_integer(self):
        return all(c.denominator == 1 for c in self.coeffs)

    @classmethod
    def from_int_list(cls, lst, den=1):
        return cls([Fraction(c, den) for c in lst])

    def primitive_int(self):
        """Primitive integer polynomial with the same roots (positive lead)."""
        lst, _ = self.to_int_list()
        _, pp = zx.z_primitive(lst)
        return pp

    # -- printing ------------------------------------------------------------

    def __str__(self):
        from .parsing import format_poly

        return format_poly(self)

    def __repr__(self):
        return f"Poly({str(self)!r})"


# ---------------------------------------------------------------------------
# structural operations


def poly_arith(f: Poly, g: Poly, op: str):
    if op == "+":
        return f + g
    if op == "-":
        return f - g
    if op == "*":
        return f * g
    if op == "divrem":
        return f.divrem(g)
    if op == "compose":
        return f.compose(g)
    raise ValueError(f"unknown op {op!r}")


def gcd_q(f: Poly, g: Poly) -> Poly:
    """Monic gcd over Q."""
    if f.is_zero() and g.is_zero():
        raise BothZeroError("gcd(0, 0) undefined")
    if f.is_zero():
        return g.monic()
    if g.is_zero():
        return f.monic()
    a = f.primitive_int()
    b = g.primitive_int()
    return Poly(zx.z_gcd(a, b)).monic()


def resultant(f: Poly, g: Poly) -> Fraction:
    """Res(f, g) = lc(f)^deg(g) * prod g(alpha_i) over the roots of f."""
    if f.is_zero() or g.is_zero():
        raise ZeroInputError("resultant needs nonzero inputs")
    if f.degree == 0:
        return f.lc ** g.degree if g.degree else _F(1)
    if g.degree == 0:
        return g.lc ** f.degree
    fi, da = f.to_int_list()
    gi, db = g.to_int_list()
    r = zx.resultant_z(fi, gi)
    return _F(r) / (_F(da) ** g.degree * _F(db) ** f.degree)


def discriminant(f: Poly) -> Fraction:
    """disc(f) = (-1)^(d(d-1)/2) Res(f, f') / lc(f)."""
    d = f.degree
    if d < 1:
        raise DegreeZeroError("discriminant needs degree >= 1")
    if d == 1:
        return _F(1)
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * resultant(f, f.derivative()) / f.lc


def squarefree_part(f: Poly) -> Poly:
    if f.is_zero():
        raise ZeroInputError("squarefree part of zero")
    if f.degree <= 1:
        return f.monic()
    return (f // gcd_q(f, f.derivative())).monic()


def is_squarefree(f: Poly) -> bool:
    if f.is_zero():
        return False
    if f.degree <= 1:
        return True
    return zx.z_is_squarefree(f.primitive_int())


# ---------------------------------------------------------------------------
# Sturm sequences


def sturm_sequence(f: Poly):
    """Sturm chain with each entry reduced to a primitive integer polynomial.

    Normalization multiplies by positive rationals only, so the sign data the
    chain carries is untouched.
    """
    seq = [_primitive_signed(f)]
    d = f.derivative()
    if d.is_zero():
        return seq
    seq.append(_primitive_signed(d))
    while seq[-1].degree > 0:
        r = seq[-2] % seq[-1]
        if r.is_zero():
            break
        seq.append(_primitive_signed(-r))
    return seq


def _primitive_signed(f: Poly) -> Poly:
    """Scale by a positive rational to a primitive integer polynomial."""
    lst, den = f.to_int_list()
    c = zx.z_content(lst)
    if c == 0:
        return Poly.zero()
    return Poly.from_int_list([a // c for a in lst])


def sturm_real_roots(f: Poly) -> int:
    """Exact count of distinct real roots of a squarefree f."""
    if f.is_zero():
        raise ZeroInputError("zero polynomial")
    if f.degree == 0:
        return 0
    if not is_squarefree(f):
        raise NotSquarefreeError("sturm_real_roots requires squarefree input")
    seq = sturm_sequence(f)

    def changes(signs):
        signs = [s for s in signs if s != 0]
        return sum(1 for a, b in zip(signs, signs[1:]) if a * b < 0)

    at_minus = []
    at_plus = []
    for g in seq:
        s = 1 if g.lc > 0 else -1 if g.lc < 0 else 0
        at_plus.append(s)
        at_minus.append(s if g.degree % 2 == 0 else -s)
    return changes(at_minus) - changes(at_plus)


# ---------------------------------------------------------------------------
# Eisenstein and cyclotomic constructions


def eisenstein_witness(f: Poly):
    """A prime certifying irreducibility by the Eisenstein criterion, or None."""
    if f.degree < 1:
        raise ZeroInputError("eisenstein_witness needs degree >= 1")
    if not f.is_integer():
        raise NonIntegerCoefficientsError("integer coefficients required")
    coeffs = [int(c) for c in f.coeffs]
    c0 = coeffs[0]
    if c0 == 0:
        return None
    lead = coeffs[-1]
    for q in prime_factors(c0):
        if lead % q == 0:
            continue
        if c0 % (q * q) == 0:
            continue
        if all(c % q == 0 for c in coeffs[:-1]):
            return q
    return None


@functools.lru_cache(maxsize=None)
def _cyclotomic_int(n: int):
    if n == 1:
        return (-1, 1)
    num = [0] * (n + 1)
    num[0], num[n] = -1, 1
    for d in range(1, n):
        if n % d == 0:
            num = zx.z_divexact(num, list(_cyclotomic_int(d)))
    return tuple(num)


def cyclotomic(n: int) -> Poly:
    """The n-th cyclotomic polynomial, by exact division of x^n - 1."""
    if n < 1:
        raise ZeroInputError("cyclotomic index must be >= 1")
    return Poly.from_int_list(list(_cyclotomic_int(n)))


def euler_phi(n: int) -> int:
    if n < 1:
        raise ZeroInputError("euler phi of n < 1")
    out = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            out -= out // p
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out -= out // m
    return out


# ---------------------------------------------------------------------------
# bivariate support (specialization inputs)


class BiPoly:
    """Sparse polynomial in x and y over Q, keyed by (x_exp, y_exp)."""

    __slots__ = ("terms",)

    def __init__(self, terms):
        cleaned = {}
        for (i, j), c in dict(terms).items():
            c = _coerce(c)
            if c != 0:
                cleaned[(int(i), int(j))] = c
        object.__setattr__(self, "terms", cleaned)

    def __setattr__(self, *a):
        raise AttributeError("BiPoly is immutable")

    def is_zero(self):
        return not self.terms

    @property
    def deg_y(self):
        return max((j for (_, j) in self.terms), default=-1)

    @property
    def deg_x(self):
        return max((i for (_, j), _c in zip(self.terms, self.terms.values())), default=-1)

    def __eq__(self, other):
        return isinstance(other, BiPoly) and self.terms == other.terms

    def __str__(self):
        from .parsing import format_bipoly

        return format_bipoly(self)

    def __repr__(self):
        return f"BiPoly({str(self)!r})"


def bivariate_specialize(f: BiPoly, b) -> tuple[Poly, bool]:
    """f(b, y) as a univariate in y plus a flag marking y-degree collapse."""
    if f.is_zero() or f.deg_y < 1:
        raise ZeroInputError("specialization input must be nonzero in y")
    b = _coerce(b)
    out = [_F(0)] * (f.deg_y + 1)
    for (i, j), c in f.terms.items():
        out[j] += c * b**i
    poly = Poly(out)
    degenerate = poly.degree < f.deg_y
    return poly, degenerate
