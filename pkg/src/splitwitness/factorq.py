"""Complete factorization over Q.

Pipeline: content/primitive split, Yun squarefree decomposition, then for
each squarefree part a Zassenhaus factorization: modular factor patterns at
several small primes (degree-set analysis often settles irreducibility with
no lifting at all), quadratic multifactor Hensel lifting past the
Landau-Mignotte bound, and subset recombination with degree pruning.

`allowed_multiple` lets callers that factor norms of polynomials over a
number field restrict candidate factor degrees to multiples of the field
degree, which collapses the recombination search.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import intpoly as zx
from .exactarith import is_prime
from .polynomials import Poly

_PRIME_SCAN = 5  # good primes examined for degree patterns
_PRIME_SCAN_LIMIT = 1000  # give up degree analysis past this prime


@dataclass(frozen=True)
class FactorizationQ:
    """unit * prod(factor^multiplicity) == the factored polynomial, with
    monic irreducible pairwise-distinct factors."""

    unit: Fraction
    factors: tuple  # ((Poly, int), ...)

    def expand(self) -> Poly:
        out = Poly.constant(self.unit)
        for f, m in self.factors:
            out = out * f**m
        return out

    @property
    def is_irreducible(self) -> bool:
        return (
            len(self.factors) == 1
            and self.factors[0][1] == 1
            and self.factors[0][0].degree >= 1
        )


def factor_q(f: Poly, allowed_multiple: int = 1) -> FactorizationQ:
    """Factor f into monic irreducibles over Q times a rational unit."""
    if f.is_zero():
        return FactorizationQ(Fraction(0), ())
    if f.degree == 0:
        return FactorizationQ(f.lc, ())
    unit = f.lc
    pp = f.primitive_int()
    out = []
    for part, mult in _yun_squarefree(pp):
        if zx.z_deg(part) == 0:
            continue
        for g in _factor_squarefree(part, allowed_multiple):
            out.append((Poly.from_int_list(g).monic(), mult))
    out.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs, fm[1]))
    return FactorizationQ(unit, tuple(out))


def is_irreducible_q(f: Poly) -> bool:
    if f.degree < 1:
        return False
    return factor_q(f).is_irreducible


# ---------------------------------------------------------------------------
# squarefree decomposition (Yun)


def _yun_squarefree(f):
    """[(primitive factor, multiplicity)] for a primitive f with positive
    leading coefficient."""
    df = zx.z_deriv(f)
    a = zx.z_gcd(f, df)
    if zx.z_deg(a) == 0:
        return [(f, 1)]
    out = []
    b = zx.z_divexact(f, a)
    c = zx.z_divexact(df, a)
    d = zx.z_sub(c, zx.z_deriv(b))
    i = 1
    while True:
        if not d:
            out.append((b, i))
            break
        a = zx.z_gcd(b, d)
        if zx.z_deg(a) > 0:
            out.append((a, i))
        b = zx.z_divexact(b, a)
        c = zx.z_divexact(d, a)
        d = zx.z_sub(c, zx.z_deriv(b))
        i += 1
        if zx.z_deg(b) == 0:
            break
    return out


# ---------------------------------------------------------------------------
# modular degree analysis


def _degree_mask(degrees):
    mask = 1
    for d in degrees:
        mask |= mask << d
    return mask


def _allowed_mask(n, multiple):
    if multiple <= 1:
        return (1 << (n + 1)) - 1
    mask = 0
    for d in range(0, n + 1, multiple):
        mask |= 1 << d
    return mask


def _good_primes(f, count):
    """(prime, modular factor degree multiset) for primes keeping f squarefree."""
    lc = f[-1]
    found = []
    p = 3
    while len(found) < count and p < _PRIME_SCAN_LIMIT:
        if lc % p != 0:
            fp = zx.zp_from_z(f, p)
            if zx.z_deg(fp) == zx.z_deg(f) and zx.zp_is_squarefree(fp, p):
                found.append((p, zx.zp_factor_degrees(fp, p)))
        p = _next_prime(p)
    return found


def _next_prime(p):
    p += 2
    while not is_prime(p):
        p += 2
    return p


# ---------------------------------------------------------------------------
# Hensel lifting (quadratic, multifactor tree)


def _zm_trunc(f, m):
    return zx.z_strip([c % m for c in f])


def _zm_trunc_sym(f, m):
    out = []
    half = m // 2
    for c in f:
        c %= m
        if c > half:
            c -= m
        out.append(c)
    return zx.z_strip(out)


def _zm_mul(f, g, m):
    return _zm_trunc(zx.z_mul(f, g), m)


def _zm_divmod_monic(f, h, m):
    """Divide by monic h with all arithmetic mod m."""
    r = [c % m for c in f]
    zx.z_strip(r)
    dh = zx.z_deg(h)
    q = [0] * max(len(r) - dh, 0)
    while zx.z_deg(r) >= dh:
        c = r[-1]
        k = zx.z_deg(r) - dh
        q[k] = c
        for i, b in enumerate(h):
            r[k + i] = (r[k + i] - c * b) % m
        zx.z_strip(r)
    return zx.z_strip(q), r


def _hensel_step(m, f, g, h, s, t):
    """Lift f = g*h (mod m) with s*g + t*h = 1 (mod m), h monic, to mod m^2."""
    m2 = m * m
    e = _zm_trunc(zx.z_sub(f, zx.z_mul(g, h)), m2)
    q, r = _zm_divmod_monic(_zm_mul(s, e, m2), h, m2)
    g1 = _zm_trunc(zx.z_add(zx.z_add(g, _zm_mul(t, e, m2)), zx.z_mul(q, g)), m2)
    h1 = _zm_trunc(zx.z_add(h, r), m2)
    b = _zm_trunc(zx.z_sub(zx.z_add(_zm_mul(s, g1, m2), _zm_mul(t, h1, m2)), [1]), m2)
    c, d = _zm_divmod_monic(_zm_mul(s, b, m2), h1, m2)
    s1 = _zm_trunc(zx.z_sub(s, d), m2)
    t1 = _zm_trunc(zx.z_sub(z_sub2 := zx.z_sub(t, _zm_mul(t, b, m2)), zx.z_mul(c, g1)), m2)
    return g1, h1, s1, t1


def _hensel_tree(p, f, facs, target):
    """Lift the monic factors `facs` of f mod p to monic factors mod p^l,
    where p^l >= target.  Invariant: f = lc(f) * prod(facs) (mod p)."""
    if len(facs) == 1:
        modulus = p
        while modulus < target:
            modulus *= modulus
        inv = pow(f[-1] % modulus, -1, modulus)
        return [_zm_trunc(zx.z_scal(f, inv), modulus)], modulus
    k = len(facs) // 2
    g = [f[-1] % p]
    for fac in facs[:k]:
        g = zx.zp_mul(g, fac, p)
    h = [1]
    for fac in facs[k:]:
        h = zx.zp_mul(h, fac, p)
    s, t = _zp_xgcd(g, h, p)
    m = p
    while m < target:
        g, h, s, t = _hensel_step(m, _zm_trunc(f, m * m), g, h, s, t)
        m *= m
    left, m1 = _hensel_tree(p, g, facs[:k], target)
    right, m2 = _hensel_tree(p, h, facs[k:], target)
    return left + right, min(m, m1, m2)


def _zp_xgcd(g, h, p):
    """s, t with s*g + t*h = 1 mod p (g, h coprime mod p)."""
    r0, r1 = [c % p for c in g], [c % p for c in h]
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while zx.z_deg(r1) >= 0 and r1:
        q, r = zx.zp_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, zx.zp_sub(s0, zx.zp_mul(q, s1, p), p)
        t0, t1 = t1, zx.zp_sub(t0, zx.zp_mul(q, t1, p), p)
    assert zx.z_deg(r0) == 0
    inv = pow(r0[0], p - 2, p)
    return zx.zp_scal(s0, inv, p), zx.zp_scal(t0, inv, p)


# ---------------------------------------------------------------------------
# Zassenhaus


def _factor_squarefree(f, allowed_multiple=1):
    """Irreducible integer factors of a primitive squarefree f (positive lc)."""
    n = zx.z_deg(f)
    if n <= 1:
        return [f]
    allowed = _allowed_mask(n, allowed_multiple)
    scans = _good_primes(f, _PRIME_SCAN)
    if not scans:
        raise ArithmeticError("no usable factorization prime found")
    mask = allowed
    for _, degrees in scans:
        mask &= _degree_mask(degrees)
    interior = mask & ~1 & ~(1 << n)
    if interior == 0:
        return [f]
    p, _ = min(scans, key=lambda pd: (len(pd[1]), pd[0]))
    fp = zx.zp_monic(zx.zp_from_z(f, p), p)
    modular = zx.zp_factor_squarefree(fp, p)
    return _recombine(f, p, modular, mask)


def _mignotte_target(f):
    n = zx.z_deg(f)
    a = zx.z_max_norm(f)
    b = abs(f[-1])
    # factor-coefficient bound times 2 (sign window), standard margin
    return 2 * (math.isqrt(n + 1) + 1) * (1 << n) * a * b + 1


def _recombine(f, p, modular, mask):
    target = _mignotte_target(f)
    lifted, modulus = _hensel_tree(p, f, modular, target)
    found = []
    active = list(range(len(lifted)))
    s = 1
    while 2 * s <= len(active):
        restart = False
        for combo in combinations(active, s):
            dsum = sum(zx.z_deg(lifted[i]) for i in combo)
            if not (mask >> dsum) & 1:
                continue
            b = f[-1]
            if f[0] != 0:
                c = b
                for i in combo:
                    c = c * lifted[i][0] % modulus
                c = c if c <= modulus // 2 else c - modulus
                if c == 0 or (b * f[0]) % c != 0:
                    continue
            g = [b]
            for i in combo:
                g = _zm_mul(g, lifted[i], modulus)
            g = _zm_trunc_sym(g, modulus)
            _, g = zx.z_primitive(g)
            q = _try_divide(f, g)
            if q is not None:
                found.append(g)
                f = q
                active = [i for i in active if i not in combo]
                restart = True
                break
        if not restart:
            s += 1
    if zx.z_deg(f) > 0:
        found.append(f)
    return found


def _try_divide(f, g):
    if not g or zx.z_deg(g) < 1 or zx.z_deg(g) > zx.z_deg(f):
        return None
    try:
        return zx.z_divexact(f, g)
    except ArithmeticError:
        return None
