"""Arithmetic in Q(theta).

A NumberField is presented by a monic irreducible min_poly; elements are
power-basis coordinate vectors.  Heavy inner loops (inversion, gcds over the
field) run modulo word-size primes with CRT + rational reconstruction and an
exact verification step, which keeps coefficient growth away from the hot
paths.
"""

from __future__ import annotations

import math
from fractions import Fraction

from . import intpoly as zx
from .errors import (
    DivisionByZeroError,
    FieldMismatchError,
    NotIrreducibleError,
)
from .polynomials import Poly

_F = Fraction


class NumberField:
    """Q(theta) with theta a root of the given monic irreducible polynomial."""

    __slots__ = ("min_poly", "degree", "_rows", "_int_model", "_zp_cache", "_gen_label")

    def __init__(self, min_poly: Poly, _trusted: bool = False, label: str = "theta"):
        if min_poly.degree < 1 or min_poly.lc != 1:
            raise NotIrreducibleError("defining polynomial must be monic of degree >= 1")
        if not _trusted:
            from .factorq import is_irreducible_q

            if min_poly.degree > 1 and not is_irreducible_q(min_poly):
                raise NotIrreducibleError(f"{min_poly} is reducible over Q")
        object.__setattr__(self, "min_poly", min_poly)
        object.__setattr__(self, "degree", min_poly.degree)
        object.__setattr__(self, "_rows", None)
        object.__setattr__(self, "_int_model", None)
        object.__setattr__(self, "_zp_cache", {})
        object.__setattr__(self, "_gen_label", label)

    def __setattr__(self, *a):
        raise AttributeError("NumberField is immutable")

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.min_poly == other.min_poly

    def __hash__(self):
        return hash(self.min_poly)

    def __repr__(self):
        return f"NumberField({str(self.min_poly)!r})"

    # -- elements ----------------------------------------------------------

    def element(self, coords) -> "NFElement":
        coords = [_F(c) for c in coords]
        if len(coords) > self.degree:
            raise ValueError("coordinate vector longer than field degree")
        coords += [_F(0)] * (self.degree - len(coords))
        return NFElement(self, tuple(coords))

    def zero(self):
        return self.element([])

    def one(self):
        return self.element([1])

    def rational(self, c):
        return self.element([c])

    def generator(self):
        if self.degree == 1:
            return self.rational(-self.min_poly[0])
        return self.element([0, 1])

    def from_poly(self, p: Poly) -> "NFElement":
        """Image of p(theta)."""
        if p.degree < self.degree:
            return self.element(list(p.coeffs))
        return self.element(list((p % self.min_poly).coeffs))

    # -- reduction rows -----------------------------------------------------

    def _reduction_rows(self):
        """rows[j] = coordinates of theta^(degree+j), j = 0..degree-2."""
        if self._rows is not None:
            return self._rows
        d = self.degree
        rows = []
        cur = [-c for c in self.min_poly.coeffs[:d]]  # theta^d
        rows.append(tuple(cur))
        for _ in range(d - 2):
            nxt = [_F(0)] * d
            carry = cur[d - 1]
            for i in range(d - 1):
                nxt[i + 1] = cur[i]
            if carry:
                for i in range(d):
                    nxt[i] += carry * rows[0][i]
            rows.append(tuple(nxt))
            cur = nxt
        object.__setattr__(self, "_rows", rows)
        return rows

    def reduce_convolution(self, conv):
        """Reduce a raw product coefficient list (len <= 2d-1) mod min_poly."""
        d = self.degree
        out = list(conv[:d]) + [_F(0)] * (d - len(conv[:d]))
        if len(conv) > d:
            rows = self._reduction_rows()
            for j in range(len(conv) - d):
                c = conv[d + j]
                if c:
                    row = rows[j]
                    for i in range(d):
                        out[i] += c * row[i]
        return out

    # -- integral model -------------------------------------------------------

    def integral_model(self):
        """(M_int coefficients, c) where theta_int = c*theta has the integer
        monic minimal polynomial M_int; c is the denominator-clearing scale."""
        if self._int_model is not None:
            return self._int_model
        if self.min_poly.is_integer():
            model = ([int(c) for c in self.min_poly.coeffs], 1)
        else:
            den = self.min_poly.denominator_lcm()
            scaled = self.min_poly.scale_root(den)
            assert scaled.is_integer()
            model = ([int(c) for c in scaled.coeffs], den)
        object.__setattr__(self, "_int_model", model)
        return model

    def reduction_mod(self, p):
        """min_poly of the integral model reduced mod p, plus squarefree flag."""
        cached = self._zp_cache.get(p)
        if cached is not None:
            return cached
        m_int, _ = self.integral_model()
        mbar = zx.zp_from_z(m_int, p)
        ok = zx.z_deg(mbar) == self.degree and zx.zp_is_squarefree(mbar, p)
        self._zp_cache[p] = (mbar, ok)
        return mbar, ok


class NFElement:
    """Element of a NumberField in power-basis coordinates."""

    __slots__ = ("field", "coords")

    def __init__(self, field: NumberField, coords: tuple):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, *a):
        raise AttributeError("NFElement is immutable")

    def _check(self, other):
        if isinstance(other, NFElement):
            if other.field != self.field:
                raise FieldMismatchError("elements of different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.rational(other)
        raise TypeError(f"cannot combine NFElement with {type(other)!r}")

    def is_zero(self):
        return all(c == 0 for c in self.coords)

    def is_rational(self):
        return all(c == 0 for c in self.coords[1:])

    def as_rational(self):
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.coords[0]

    def as_poly(self) -> Poly:
        return Poly(self.coords)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.rational(other)
        return (
            isinstance(other, NFElement)
            and other.field == self.field
            and other.coords == self.coords
        )

    def __hash__(self):
        return hash((self.field, self.coords))

    def __add__(self, other):
        other = self._check(other)
        return NFElement(
            self.field, tuple(a + b for a, b in zip(self.coords, other.coords))
        )

    __radd__ = __add__

    def __neg__(self):
        return NFElement(self.field, tuple(-a for a in self.coords))

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        d = self.field.degree
        if d == 1:
            return NFElement(self.field, (self.coords[0] * other.coords[0],))
        conv = [_F(0)] * (2 * d - 1)
        for i, a in enumerate(self.coords):
            if a:
                for j, b in enumerate(other.coords):
                    if b:
                        conv[i + j] += a * b
        return NFElement(self.field, tuple(self.field.reduce_convolution(conv)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._check(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._check(other) * self.inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, c):
        c = _F(c)
        return NFElement(self.field, tuple(a * c for a in self.coords))

    def inverse(self):
        if self.is_zero():
            raise DivisionByZeroError("inverse of zero field element")
        if self.is_rational():
            return self.field.rational(1 / self.coords[0])
        if self.field.degree <= 16:
            return self._inverse_direct()
        inv = _nf_inverse_modular(self)
        if inv is None:
            return self._inverse_direct()
        return inv

    def _inverse_direct(self):
        """Extended Euclid of the coordinate polynomial against min_poly."""
        a = self.as_poly()
        m = self.field.min_poly
        r0, r1 = m, a
        t0, t1 = Poly.zero(), Poly.one()
        while not r1.is_zero() and r1.degree > 0:
            q, r = r0.divrem(r1)
            r0, r1 = r1, r
            t0, t1 = t1, t0 - q * t1
        if r1.is_zero():
            raise DivisionByZeroError("element is a zero divisor (reducible modulus?)")
        inv_poly = t1 * (1 / r1.lc)
        return self.field.from_poly(inv_poly)

    def __repr__(self):
        return f"NFElement({self.coords})"


# ---------------------------------------------------------------------------
# modular machinery: CRT and rational reconstruction


def crt_pair(r1, m1, r2, m2):
    """x mod m1*m2 with x = r1 (m1), x = r2 (m2); m1, m2 coprime."""
    g, u, _ = _xgcd_int(m1, m2)
    assert g == 1
    diff = (r2 - r1) % m2
    return (r1 + m1 * ((diff * u) % m2)) % (m1 * m2)


def _xgcd_int(a, b):
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    return a, s0, t0


def rational_reconstruct(r, m):
    """Fraction n/d with n = r*d (mod m) and |n|, d <= sqrt(m/2); None if
    no such fraction exists (need more modular precision)."""
    r %= m
    bound = math.isqrt(m // 2)
    a0, a1 = m, r
    s0, s1 = 0, 1
    while a1 > bound:
        q = a0 // a1
        a0, a1 = a1, a0 - q * a1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound:
        return None
    if s1 < 0:
        a1, s1 = -a1, -s1
    if math.gcd(abs(a1), s1) != 1:
        return None
    return _F(a1, s1)


def good_prime_iter(field: NumberField, start=10007):
    """Primes where the integral-model modulus stays squarefree of full degree."""
    from .exactarith import is_prime

    p = start
    while True:
        if is_prime(p):
            _, ok = field.reduction_mod(p)
            if ok:
                yield p
        p += 2


def element_mod_p(a: NFElement, p):
    """Coordinates of a in the integral model (powers of c*theta), reduced
    mod p; None if a denominator vanishes mod p."""
    _, c = a.field.integral_model()
    out = []
    cpow = 1
    for q in a.coords:
        # coefficient of theta^i equals q, so of (c*theta)^i it is q / c^i
        den = q.denominator * cpow
        if den % p == 0:
            return None
        out.append(q.numerator % p * pow(den % p, -1, p) % p)
        cpow *= c
    return zx.z_strip(out)


def coords_from_int_model(field: NumberField, int_coords):
    """Map integral-model coordinates (w.r.t. c*theta) back to theta powers."""
    _, c = field.integral_model()
    out = []
    cpow = 1
    for a in int_coords:
        out.append(_F(a) * cpow)
        cpow *= c
    return out


def _nf_inverse_modular(a: NFElement, max_primes=600):
    """Inverse via per-prime extended gcd, CRT and rational reconstruction,
    verified exactly; None if reconstruction keeps failing."""
    field = a.field
    residues = None
    modulus = 1
    checkpoint = 4
    for p in good_prime_iter(field):
        abar = element_mod_p(a, p)
        if abar is None or not abar:
            continue
        mbar, _ = field.reduction_mod(p)
        inv = _zp_poly_inverse(abar, mbar, p)
        if inv is None:
            continue
        inv += [0] * (field.degree - len(inv))
        if residues is None:
            residues, modulus = inv, p
        else:
            residues = [crt_pair(r, modulus, v, p) for r, v in zip(residues, inv)]
            modulus *= p
        checkpoint -= 1
        if checkpoint <= 0:
            checkpoint = max(2, checkpoint + 3)
            cand = [rational_reconstruct(r, modulus) for r in residues]
            if all(c is not None for c in cand):
                guess = a.field.element(coords_from_int_model(field, cand))
                if (a * guess - 1).is_zero():
                    return guess
            checkpoint = 3
        if modulus.bit_length() > 64 * max_primes:
            return None
    return None


def _zp_poly_inverse(abar, mbar, p):
    """Inverse of abar in F_p[y]/(mbar); None if not invertible there."""
    r0, r1 = list(mbar), list(abar)
    t0, t1 = [], [1]
    while r1:
        if zx.z_deg(r1) == 0:
            inv = pow(r1[0], p - 2, p)
            return zx.zp_scal(t1, inv, p)
        q, r = zx.zp_divmod(r0, r1, p)
        r0, r1 = r1, r
        t0, t1 = t1, zx.zp_sub(t0, zx.zp_mul(q, t1, p), p)
    return None


# ---------------------------------------------------------------------------
# operation surface


def nf_arith(a: NFElement, b: NFElement, op: str) -> NFElement:
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op == "*":
        return a * b
    if op == "/":
        if b.is_zero():
            raise DivisionByZeroError("field division by zero")
        return a / b
    raise ValueError(f"unknown op {op!r}")


def minimal_polynomial(a: NFElement, certify: bool = True) -> Poly:
    """Monic minimal polynomial of a over Q: the least linear dependency
    among 1, a, a^2, ... (row reduction of the power matrix)."""
    d = a.field.degree
    # reduced rows with bookkeeping of the combination that produced them
    pivots = {}  # pivot index -> (vector, combo)
    power = a.field.one()
    combos = []
    k = 0
    while True:
        vec = list(power.coords)
        combo = [_F(0)] * (k + 1)
        combo[k] = _F(1)
        for col, (pvec, pcombo) in sorted(pivots.items()):
            if vec[col] != 0:
                factor = vec[col]
                vec = [v - factor * w for v, w in zip(vec, pvec)]
                combo = [
                    x - factor * y
                    for x, y in _zip_longest(combo, pcombo)
                ]
        lead = next((i for i, v in enumerate(vec) if v != 0), None)
        if lead is None:
            # combo gives the dependency: sum combo[i] a^i = 0, combo[k] = 1
            poly = Poly(combo)
            result = poly.monic()
            if certify and result.degree > 1:
                from .factorq import is_irreducible_q

                if not is_irreducible_q(result):
                    raise NotIrreducibleError(
                        "minimal polynomial candidate failed irreducibility recheck"
                    )
            return result
        inv = 1 / vec[lead]
        pivots[lead] = (
            [v * inv for v in vec],
            [x * inv for x in combo],
        )
        combos.append(combo)
        k += 1
        if k > d:
            raise AssertionError("no dependency found below the field degree")
        power = power * a


def _zip_longest(xs, ys):
    n = max(len(xs), len(ys))
    xs = list(xs) + [_F(0)] * (n - len(xs))
    ys = list(ys) + [_F(0)] * (n - len(ys))
    return zip(xs, ys)


def element_degree(a: NFElement) -> int:
    return minimal_polynomial(a, certify=False).degree
