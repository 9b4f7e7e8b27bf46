"""Factorization over number fields and primitive-element adjunction.

The workhorse is Trager's method: for g over K = Q(theta), the norm
N(x) = prod_i g^(sigma_i)(x - s*theta_i) is computed by evaluating integer
resultants at interpolation nodes; its factorization over Q (with factor
degrees forced to multiples of [K:Q]) pulls back to the factorization of g
through per-prime gcds recombined by CRT and verified exactly.

Quadratics get two shortcuts before the full norm machinery: an exact
rational-square test when the discriminant is rational, and a modular
nonresidue certificate (sound for irreducibility) at unramified places.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import intpoly as zx
from .errors import (
    DegreeCapExceeded,
    PrimitiveElementSearchExhausted,
    ZeroInputError,
)
from .exactarith import is_rational_square, rational_sqrt
from .factorq import factor_q
from .numberfield import (
    NFElement,
    NumberField,
    _zp_poly_inverse,
    coords_from_int_model,
    crt_pair,
    element_mod_p,
    good_prime_iter,
    rational_reconstruct,
)
from .polynomials import Poly

_F = Fraction

QQ = NumberField(Poly((0, 1)), _trusted=True)

_PRIMITIVE_SHIFT_BOUND = 50
_NONSQUARE_CERT_TRIES = 48
_CRT_PRIME_CAP = 500


# ---------------------------------------------------------------------------
# polynomials over a number field


class NFPoly:
    """Dense polynomial with NFElement coefficients (ascending order)."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: NumberField, coeffs):
        cs = []
        for c in coeffs:
            if isinstance(c, NFElement):
                cs.append(c)
            else:
                cs.append(field.rational(c))
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("NFPoly is immutable")

    @classmethod
    def from_qpoly(cls, field: NumberField, f: Poly) -> "NFPoly":
        return cls(field, [field.rational(c) for c in f.coeffs])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero()

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        return (
            isinstance(other, NFPoly)
            and other.field == self.field
            and other.coeffs == self.coeffs
        )

    def __getitem__(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.field.zero()

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return NFPoly(self.field, [self[i] + other[i] for i in range(n)])

    def __sub__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return NFPoly(self.field, [self[i] - other[i] for i in range(n)])

    def __neg__(self):
        return NFPoly(self.field, [-c for c in self.coeffs])

    def __mul__(self, other):
        if self.is_zero() or other.is_zero():
            return NFPoly(self.field, [])
        out = [self.field.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a.is_zero():
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
        return NFPoly(self.field, out)

    def scale(self, c: NFElement):
        return NFPoly(self.field, [a * c for a in self.coeffs])

    def monic(self):
        if self.is_zero() or self.lc == self.field.one():
            return self
        inv = self.lc.inverse()
        return self.scale(inv)

    def divmod_monic(self, g: "NFPoly"):
        assert not g.is_zero() and g.lc == g.field.one()
        r = list(self.coeffs)
        dg = g.degree
        q = [self.field.zero()] * max(len(r) - dg, 0)
        while r:
            while r and r[-1].is_zero():
                r.pop()
            if len(r) - 1 < dg:
                break
            c = r[-1]
            k = len(r) - 1 - dg
            q[k] = c
            for i, b in enumerate(g.coeffs):
                r[k + i] = r[k + i] - c * b
            r.pop()
        return NFPoly(self.field, q), NFPoly(self.field, r)

    def synthetic_divide(self, root: NFElement):
        """(quotient, remainder-value) dividing by (x - root)."""
        acc = self.field.zero()
        out = []
        for c in reversed(self.coeffs):
            acc = acc * root + c
            out.append(acc)
        rem = out.pop()
        return NFPoly(self.field, list(reversed(out))), rem

    def __call__(self, x: NFElement) -> NFElement:
        acc = self.field.zero()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self):
        return NFPoly(self.field, [c.scale(i) for i, c in enumerate(self.coeffs)][1:])

    def is_rational(self):
        return all(c.is_rational() for c in self.coeffs)

    def to_qpoly(self) -> Poly:
        return Poly([c.as_rational() for c in self.coeffs])

    def __repr__(self):
        return f"NFPoly(deg={self.degree} over {self.field!r})"


# ---------------------------------------------------------------------------
# norms by evaluation / interpolation


def _coeff_vectors_in_y(g: NFPoly):
    """Each coefficient of g as a Fraction polynomial in y = c*theta (the
    integral-model generator)."""
    field = g.field
    _, c = field.integral_model()
    vectors = []
    for coeff in g.coeffs:
        cpow = 1
        vec = []
        for q in coeff.coords:
            vec.append(q / cpow if cpow != 1 else q)
            cpow *= c
        while vec and vec[-1] == 0:
            vec.pop()
        vectors.append(vec)
    return vectors


def nf_norm_poly(g: NFPoly, s: int) -> Poly:
    """The norm polynomial whose roots are theta_i + s*beta over all
    conjugates theta_i of the generator and roots beta of g^(sigma_i)."""
    field = g.field
    d = field.degree
    e = g.degree
    if d == 1:
        theta = field.generator().as_rational()
        coeffs = [c.as_rational() for c in g.coeffs]
        out = Poly.zero()
        shifted = Poly((-theta, 1))  # (x - theta)
        acc = Poly.one()
        for k, ck in enumerate(coeffs):
            if ck:
                out = out + acc * (ck * _F(s) ** (e - k))
            acc = acc * shifted
        return out
    m_int, c_scale = field.integral_model()
    cvecs = _coeff_vectors_in_y(g)
    total = d * e
    nodes = _interp_nodes(total + 1)
    values = []
    for x0 in nodes:
        h = _eval_shifted(cvecs, _F(x0), s, e, c_scale)
        values.append(_prod_over_roots(m_int, h, d))
    result = _newton_interpolate(nodes, values)
    return result


def _interp_nodes(count):
    out = [0]
    k = 1
    while len(out) < count:
        out.append(k)
        if len(out) < count:
            out.append(-k)
        k += 1
    return out


def _eval_shifted(cvecs, x0, s, e, c_scale):
    """H(y) = sum_k c_k(y) * (x0 - y/c)^k * s^(e-k) as Fraction list in y,
    where theta = y / c in the integral model."""
    h = []
    pw = [_F(1)]  # powers of (x0 - y/c)
    inv_c = _F(1, c_scale)
    for k, cv in enumerate(cvecs):
        if cv:
            scal = _F(s) ** (e - k)
            n = max(len(h), len(cv) + len(pw) - 1)
            h += [_F(0)] * (n - len(h))
            for i, a in enumerate(cv):
                if a:
                    aa = a * scal
                    for j, b in enumerate(pw):
                        if b:
                            h[i + j] += aa * b
        if k < e:
            nxt = [_F(0)] * (len(pw) + 1)
            for i, b in enumerate(pw):
                nxt[i] += b * x0
                nxt[i + 1] -= b * inv_c
            pw = nxt
    while h and h[-1] == 0:
        h.pop()
    return h


def _prod_over_roots(m_int, h, d):
    """prod h(y_i) over the roots y_i of the monic integer m_int."""
    if not h:
        return _F(0)
    if len(h) == 1:
        return h[0] ** d
    den = 1
    for q in h:
        den = den * q.denominator // math.gcd(den, q.denominator)
    h_int = [int(q * den) for q in h]
    r = zx.resultant_z(m_int, h_int)
    return _F(r) / _F(den) ** d


def _newton_interpolate(xs, ys) -> Poly:
    n = len(xs)
    coef = [_F(v) for v in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    poly = Poly.zero()
    acc = Poly.one()
    for i in range(n):
        if coef[i]:
            poly = poly + acc * coef[i]
        if i < n - 1:
            acc = acc * Poly((-_F(xs[i]), 1))
    return poly


# ---------------------------------------------------------------------------
# residue-ring helpers: F_p[y]/(mbar), and polynomials in x over it


class _ResidueRing:
    """F_p[y]/(mbar) (mbar monic, not necessarily irreducible)."""

    __slots__ = ("p", "mbar")

    def __init__(self, p, mbar):
        self.p = p
        self.mbar = mbar

    def mul(self, a, b):
        return zx.zp_rem(zx.zp_mul(a, b, self.p), self.mbar, self.p)

    def add(self, a, b):
        return zx.zp_add(a, b, self.p)

    def sub(self, a, b):
        return zx.zp_sub(a, b, self.p)

    def scal(self, a, c):
        return zx.zp_scal(a, c, self.p)

    def inv(self, a):
        return _zp_poly_inverse(a, self.mbar, self.p)


def _rx_mul(R, f, g):
    if not f or not g:
        return []
    out = [[] for _ in range(len(f) + len(g) - 1)]
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                if b:
                    out[i + j] = R.add(out[i + j], R.mul(a, b))
    while out and not out[-1]:
        out.pop()
    return out


def _rx_rem(R, f, g):
    """f mod g over R; None if lc(g) is not invertible."""
    if not g:
        return None
    inv = R.inv(g[-1])
    if inv is None:
        return None
    r = [list(c) for c in f]
    dg = len(g) - 1
    while r:
        while r and not r[-1]:
            r.pop()
        if len(r) - 1 < dg:
            break
        c = R.mul(r[-1], inv)
        k = len(r) - 1 - dg
        for i, b in enumerate(g):
            r[k + i] = R.sub(r[k + i], R.mul(c, b))
        r.pop()
    return r


def _rx_gcd_monic(R, f, g):
    """Monic gcd over R; None on a zero-divisor collision."""
    a, b = f, g
    while b:
        r = _rx_rem(R, a, b)
        if r is None:
            return None
        a, b = b, r
    if not a:
        return None
    inv = R.inv(a[-1])
    if inv is None:
        return None
    return [R.mul(c, inv) for c in a]


def _nfpoly_mod_p(g: NFPoly, p):
    """Coefficients of g as integral-model coordinate lists mod p, or None
    when a denominator collides with p."""
    out = []
    for c in g.coeffs:
        v = element_mod_p(c, p)
        if v is None:
            return None
        out.append(v)
    return out


# ---------------------------------------------------------------------------
# Trager map-back


def _reconstruct_nfpoly(field, residues, modulus, degree):
    """Monic NFPoly of the given degree from CRT residues (integral-model
    coordinates), or None while precision is insufficient."""
    coeffs = []
    d = field.degree
    for k in range(degree):
        coords = []
        res = residues[k]
        for i in range(d):
            r = res[i] if i < len(res) else 0
            q = rational_reconstruct(r, modulus)
            if q is None:
                return None
            coords.append(q)
        coeffs.append(field.element(coords_from_int_model(field, coords)))
    coeffs.append(field.one())
    return NFPoly(field, coeffs)


def _mapback_factor(g: NFPoly, n_i: Poly, s: int, expected_degree: int) -> NFPoly:
    """gcd_K(g, N_i(x - s*theta)): the K-factor of g matching the rational
    norm factor N_i, reconstructed from per-prime images."""
    field = g.field
    ni_list, ni_den = n_i.to_int_list()
    _, c_scale = field.integral_model()
    residues = None
    modulus = 1
    used = 0
    for p in good_prime_iter(field):
        used += 1
        if used > _CRT_PRIME_CAP:
            break
        if ni_den % p == 0 or c_scale % p == 0:
            continue
        gbar = _nfpoly_mod_p(g, p)
        if gbar is None:
            continue
        mbar, _ = field.reduction_mod(p)
        R = _ResidueRing(p, mbar)
        gbar = [c for c in gbar]
        # theta = y / c_scale, so x - s*theta becomes x - (s/c)*y
        sc = s % p * pow(c_scale % p, -1, p) % p
        lin = [[(p - sc) % p] if sc else [], [1]]  # x - sc*y over R
        inv_den = pow(ni_den % p, -1, p)
        b = []
        failed = False
        for c in reversed(ni_list):
            b = _rx_mul(R, b, lin)
            b = _rx_rem(R, b, gbar)
            if b is None:
                failed = True
                break
            cv = c % p * inv_den % p
            if cv:
                if not b:
                    b = [[cv]]
                else:
                    b[0] = R.add(b[0], [cv])
            while b and not b[-1]:
                b.pop()
        if failed:
            continue
        gcd = _rx_gcd_monic(R, gbar, b)
        if gcd is None or len(gcd) - 1 != expected_degree:
            continue
        vecs = [
            list(gcd[k]) + [0] * (field.degree - len(gcd[k]))
            for k in range(expected_degree)
        ]
        if residues is None:
            residues, modulus = vecs, p
        else:
            residues = [
                [crt_pair(r, modulus, w, p) for r, w in zip(rrow, vrow)]
                for rrow, vrow in zip(residues, vecs)
            ]
            modulus *= p
        cand = _reconstruct_nfpoly(field, residues, modulus, expected_degree)
        if cand is not None:
            _, rem = g.divmod_monic(cand)
            if rem.is_zero():
                return cand
    raise ArithmeticError("factor reconstruction over the field did not converge")


# ---------------------------------------------------------------------------
# factorization over K


def factor_over_nf(f: Poly, K: NumberField):
    """Factor a rational polynomial into monic irreducibles over K.

    Returns [(NFPoly, multiplicity), ...]; multiplicities come from the
    factorization over Q (a Q-squarefree polynomial stays squarefree over K).
    """
    if f.is_zero():
        raise ZeroInputError("cannot factor the zero polynomial")
    out = []
    for q_factor, mult in factor_q(f).factors:
        for g in _factor_q_irreducible_over_nf(q_factor, K):
            out.append((g, mult))
    return out


def _factor_q_irreducible_over_nf(f: Poly, K: NumberField):
    if K.degree == 1 or f.degree == 1:
        return [NFPoly.from_qpoly(K, f)]
    return factor_squarefree_over_nf(NFPoly.from_qpoly(K, f))


def factor_squarefree_over_nf(g: NFPoly):
    """Monic irreducible factors of a squarefree monic NFPoly over its field."""
    field = g.field
    g = g.monic()
    if g.degree <= 1:
        return [g]
    if field.degree == 1:
        return [
            NFPoly.from_qpoly(field, h) for h, _m in factor_q(g.to_qpoly()).factors
        ]
    if g.degree == 2:
        fast = _factor_quadratic_fast(g)
        if fast is not None:
            return fast
    return _trager(g)


def _factor_quadratic_fast(g: NFPoly):
    """Rational-discriminant square test and modular nonresidue certificate;
    None when both are inconclusive."""
    field = g.field
    b, c = g[1], g[0]
    disc = b * b - c.scale(4)
    if disc.is_rational():
        dq = disc.as_rational()
        if is_rational_square(dq):
            r = field.rational(rational_sqrt(dq))
            half = _F(1, 2)
            r1 = (-b + r).scale(half)
            r2 = (-b - r).scale(half)
            return [
                NFPoly(field, [-r1, field.one()]),
                NFPoly(field, [-r2, field.one()]),
            ]
    if certify_nonsquare(disc):
        return [g]
    return None


def _trager(g: NFPoly):
    field = g.field
    for s in range(1, _PRIMITIVE_SHIFT_BOUND + 1):
        norm = nf_norm_poly(g, s)
        if norm.degree != field.degree * g.degree:
            continue
        norm_int = norm.primitive_int()
        if not zx.z_is_squarefree(norm_int):
            continue
        fac = factor_q(norm, allowed_multiple=field.degree)
        if fac.is_irreducible:
            return [g]
        parts = []
        rest = g
        factors = sorted(fac.factors, key=lambda fm: (fm[0].degree, fm[0].coeffs))
        for idx, (n_i, _m) in enumerate(factors):
            expected = n_i.degree // field.degree
            if idx == len(factors) - 1 and rest.degree == expected:
                parts.append(rest.monic())
                break
            piece = _mapback_factor(rest, n_i, s, expected)
            parts.append(piece)
            rest, rem = rest.divmod_monic(piece)
            assert rem.is_zero()
        assert sum(p.degree for p in parts) == g.degree
        return parts
    raise PrimitiveElementSearchExhausted(
        f"no squarefree norm shift up to {_PRIMITIVE_SHIFT_BOUND}"
    )


# ---------------------------------------------------------------------------
# nonsquare certificate


def certify_nonsquare(a: NFElement, tries: int = _NONSQUARE_CERT_TRIES) -> bool:
    """True proves a is NOT a square in its field: its image at an unramified
    place is a nonresidue.  False is inconclusive."""
    field = a.field
    if a.is_zero():
        return False
    if field.degree == 1:
        return not is_rational_square(a.as_rational())
    if a.is_rational() and is_rational_square(a.as_rational()):
        return False
    count = 0
    for p in good_prime_iter(field, start=101):
        if count >= tries:
            return False
        count += 1
        abar = element_mod_p(a, p)
        if abar is None or not abar:
            continue
        mbar, _ = field.reduction_mod(p)
        piece = zx.zp_min_irreducible_factor(mbar, p, max_degree=10)
        if piece is None:
            continue
        img = zx.zp_rem(abar, piece, p)
        if not img:
            continue
        q_order = p ** zx.z_deg(piece)
        euler = zx.zp_powmod(img, (q_order - 1) // 2, piece, p)
        if euler != [1]:
            return True
    return False


# ---------------------------------------------------------------------------
# root adjunction


@dataclass(frozen=True)
class Adjunction:
    field: NumberField
    theta: NFElement  # old generator inside the new field
    beta: NFElement  # the adjoined root inside the new field
    shift: int
    theta_powers: tuple


def _theta_power_cache(L: NumberField, theta: NFElement, d: int):
    powers = [L.one()]
    for _ in range(max(d - 1, 0)):
        powers.append(powers[-1] * theta)
    return tuple(powers)


def map_element(a: NFElement, adj: Adjunction) -> NFElement:
    """Image in the extension of an element given over the old generator."""
    out = adj.field.zero()
    for coord, power in zip(a.coords, adj.theta_powers):
        if coord:
            out = out + power.scale(coord)
    return out


def map_nfpoly(g: NFPoly, adj: Adjunction) -> NFPoly:
    return NFPoly(adj.field, [map_element(c, adj) for c in g.coeffs])


def identity_adjunction(K: NumberField) -> Adjunction:
    theta = K.generator()
    return Adjunction(K, theta, K.zero(), 0, _theta_power_cache(K, theta, K.degree))


def adjoin_root(K: NumberField, g: NFPoly, cap=None) -> Adjunction:
    """Extend K by a root of the K-irreducible monic g; the new field is
    presented by the primitive element theta + s*beta (s a small integer
    making the norm squarefree)."""
    if g.degree < 1:
        raise ZeroInputError("cannot adjoin a root of a constant")
    d, e = K.degree, g.degree
    if cap is not None and d * e > cap:
        raise DegreeCapExceeded(d * e, cap)
    if e == 1:
        root = -g[0]
        return Adjunction(K, K.generator(), root, 0, _theta_power_cache(K, K.generator(), d))
    if d == 1:
        qp = g.to_qpoly()
        assert qp.is_integer() and qp.lc == 1, "tower factors must be integer monic"
        L = NumberField(qp, _trusted=True)
        theta = L.rational(K.generator().as_rational())
        return Adjunction(L, theta, L.generator(), 0, (L.one(),))
    for s in range(1, _PRIMITIVE_SHIFT_BOUND + 1):
        norm = nf_norm_poly(g, s)
        if norm.degree != d * e or norm.lc != 1:
            continue
        norm_list, den = norm.to_int_list()
        if den != 1:
            # algebraic-integer generators have integer monic minimal
            # polynomials; a denominator means this shift is unusable
            continue
        if not zx.z_is_squarefree(norm_list):
            continue
        L = NumberField(Poly.from_int_list(norm_list), _trusted=True)
        theta = _theta_in_extension(K, g, s, L)
        if theta is None:
            continue
        gamma = L.generator()
        beta = (gamma - theta).scale(_F(1, s))
        powers = _theta_power_cache(L, theta, d)
        return Adjunction(L, theta, beta, s, powers)
    raise PrimitiveElementSearchExhausted(
        f"primitive element shift exhausted at {_PRIMITIVE_SHIFT_BOUND}"
    )


def _theta_in_extension(K: NumberField, g: NFPoly, s: int, L: NumberField):
    """Coordinates inside L = Q[z]/(norm) of the old generator theta: the
    unique common root of K.min_poly and W(t) = s^e g-hat((gamma - t)/s; t),
    computed by modular gcds, CRT, and exact verification."""
    e = g.degree
    mp_coeffs = K.min_poly.coeffs
    residues = None
    modulus = 1
    used = 0
    for p in good_prime_iter(L, start=10007):
        used += 1
        if used > _CRT_PRIME_CAP:
            return None
        if any(c.denominator % p == 0 for c in mp_coeffs):
            continue
        gbar = _nfpoly_coeffs_in_theta_mod_p(g, p)
        if gbar is None:
            continue
        nbar, _ = L.reduction_mod(p)
        R = _ResidueRing(p, nbar)
        # gamma is the class of z in L; its integral model has scale 1
        gamma = [0, 1]
        inv_s = pow(s % p, -1, p) if s % p else None
        if inv_s is None:
            continue
        # W(t) = sum_k c_k(t) * (gamma - t)^k * s^(e-k), coefficients in R
        w = []
        pw = [[1]]
        for k in range(e + 1):
            ck = gbar[k] if k < len(gbar) else []
            if ck:
                scal = pow(s, e - k, p)
                n = max(len(w), len(ck) + len(pw) - 1)
                w += [[] for _ in range(n - len(w))]
                for i, a in enumerate(ck):
                    if a:
                        av = a * scal % p
                        for j, b in enumerate(pw):
                            if b:
                                w[i + j] = R.add(w[i + j], R.scal(b, av))
            if k < e:
                nxt = [[] for _ in range(len(pw) + 1)]
                for i, b in enumerate(pw):
                    nxt[i] = R.add(nxt[i], R.mul(b, gamma))
                    nxt[i + 1] = R.sub(nxt[i + 1], b)
                pw = nxt
        while w and not w[-1]:
            w.pop()
        mt = []
        for c in mp_coeffs:
            cv = c.numerator % p * pow(c.denominator % p, -1, p) % p
            mt.append([cv] if cv else [])
        while mt and not mt[-1]:
            mt.pop()
        gcd = _rx_gcd_monic(R, mt, w)
        if gcd is None or len(gcd) - 1 != 1:
            continue
        root = [(p - c) % p for c in gcd[0]]
        root += [0] * (L.degree - len(root))
        if residues is None:
            residues, modulus = root, p
        else:
            residues = [crt_pair(r, modulus, v, p) for r, v in zip(residues, root)]
            modulus *= p
        coords = [rational_reconstruct(r, modulus) for r in residues]
        if all(q is not None for q in coords):
            theta = L.element(coords_from_int_model(L, coords))
            if _verify_theta(K, g, s, L, theta):
                return theta
    return None


def _nfpoly_coeffs_in_theta_mod_p(g: NFPoly, p):
    """Coefficients of g as polynomials in theta itself, reduced mod p."""
    out = []
    for coeff in g.coeffs:
        vec = []
        for q in coeff.coords:
            if q.denominator % p == 0:
                return None
            vec.append(q.numerator % p * pow(q.denominator % p, -1, p) % p)
        out.append(zx.z_strip(vec))
    return out


def _verify_theta(K, g, s, L, theta) -> bool:
    acc = L.zero()
    for c in reversed(K.min_poly.coeffs):
        acc = acc * theta + L.rational(c)
    if not acc.is_zero():
        return False
    beta = (L.generator() - theta).scale(_F(1, s))
    # evaluate g with coefficients mapped through theta at beta
    powers = _theta_power_cache(L, theta, K.degree)
    acc = L.zero()
    for coeff in reversed(g.coeffs):
        mapped = L.zero()
        for coord, power in zip(coeff.coords, powers):
            if coord:
                mapped = mapped + power.scale(coord)
        acc = acc * beta + mapped
    return acc.is_zero()
