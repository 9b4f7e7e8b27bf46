"""Dense polynomial kernels over Z and Z/p.

Polynomials are plain lists of ints in ascending degree order with no
trailing zeros ([] is the zero polynomial).  These routines back the
rational-level Poly class: pseudo-division resultants, integer gcds, and
the modular factorization stack (distinct-degree + Cantor-Zassenhaus).
"""

from __future__ import annotations

import math
import random

from .errors import ZeroInputError

# ---------------------------------------------------------------------------
# Z[x]


def z_strip(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def z_deg(f):
    return len(f) - 1


def z_add(f, g):
    n = max(len(f), len(g))
    out = [0] * n
    for i, c in enumerate(f):
        out[i] += c
    for i, c in enumerate(g):
        out[i] += c
    return z_strip(out)


def z_sub(f, g):
    n = max(len(f), len(g))
    out = [0] * n
    for i, c in enumerate(f):
        out[i] += c
    for i, c in enumerate(g):
        out[i] -= c
    return z_strip(out)


def z_neg(f):
    return [-c for c in f]


def z_scal(f, c):
    if c == 0:
        return []
    return [a * c for a in f]


def z_mul(f, g):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return z_strip(out)


def z_divexact_scalar(f, c):
    out = []
    for a in f:
        q, r = divmod(a, c)
        if r:
            raise ArithmeticError("inexact scalar division")
        out.append(q)
    return out


def z_divmod_monic(f, g):
    """Division by a monic g, staying in Z[x]."""
    assert g and g[-1] == 1
    r = list(f)
    dg = z_deg(g)
    q = [0] * max(len(f) - dg, 0)
    while z_deg(r) >= dg:
        c = r[-1]
        k = z_deg(r) - dg
        q[k] = c
        for i, b in enumerate(g):
            r[k + i] -= c * b
        z_strip(r)
    return z_strip(q), r


def z_divexact(f, g):
    """Exact division in Z[x]; raises if g does not divide f."""
    if not g:
        raise ZeroDivisionError("division by zero polynomial")
    r = list(f)
    dg = z_deg(g)
    lg = g[-1]
    q = [0] * max(len(f) - dg, 0)
    while z_deg(r) >= dg:
        c, rem = divmod(r[-1], lg)
        if rem:
            raise ArithmeticError("inexact polynomial division")
        k = z_deg(r) - dg
        q[k] = c
        for i, b in enumerate(g):
            r[k + i] -= c * b
        z_strip(r)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return z_strip(q)


def z_eval(f, x):
    acc = 0
    for c in reversed(f):
        acc = acc * x + c
    return acc


def z_deriv(f):
    return z_strip([i * c for i, c in enumerate(f)][1:])


def z_content(f):
    g = 0
    for c in f:
        g = math.gcd(g, c)
        if g == 1:
            break
    return g


def z_primitive(f):
    """(content-with-sign, primitive part); primitive part has positive lead."""
    if not f:
        return 0, []
    c = z_content(f)
    if f[-1] < 0:
        c = -c
    return c, [a // c for a in f]


def z_shift(f, a):
    """f(x + a) by Horner on the coefficient list."""
    out = []
    for c in reversed(f):
        # out = out*(x+a) + c
        new = [0] * (len(out) + 1)
        for i, b in enumerate(out):
            new[i + 1] += b
            new[i] += b * a
        new[0] += c
        out = new
    return z_strip(out)


def z_max_norm(f):
    return max((abs(c) for c in f), default=0)


def z_l2_norm_sq(f):
    return sum(c * c for c in f)


def _prem(A, B):
    """Pseudo-remainder R with lc(B)^(deg A - deg B + 1) * A = Q*B + R."""
    dv = z_deg(B)
    l = B[-1]
    R = list(A)
    e = z_deg(A) - dv + 1
    while R and z_deg(R) >= dv:
        c = R[-1]
        R = [l * a for a in R]
        k = z_deg(R) - dv
        for i, b in enumerate(B):
            R[k + i] -= c * b
        z_strip(R)
        e -= 1
    if e > 0:
        R = z_scal(R, l**e)
    return R


def resultant_z(A, B):
    """Res(A, B) by the subresultant PRS (Ducos/Cohen style), no fraction
    blowup.  Convention: Res(A, B) = lc(A)^deg(B) * prod B(alpha_i)."""
    if not A or not B:
        raise ZeroInputError("resultant of zero polynomial")
    if z_deg(A) == 0:
        return A[0] ** z_deg(B) if z_deg(B) >= 0 else 1
    if z_deg(B) == 0:
        return B[0] ** z_deg(A)
    s = 1
    if z_deg(A) < z_deg(B):
        if (z_deg(A) & 1) and (z_deg(B) & 1):
            s = -s
        A, B = B, A
    g, h = 1, 1
    while True:
        da, db = z_deg(A), z_deg(B)
        delta = da - db
        if (da & 1) and (db & 1):
            s = -s
        R = _prem(A, B)
        A = B
        if not R:
            return 0
        B = z_divexact_scalar(R, g * h**delta)
        g = A[-1]
        if delta == 0:
            pass  # h unchanged
        elif delta == 1:
            h = g
        else:
            h = g**delta // h ** (delta - 1)
        if z_deg(B) <= 0:
            break
    da = z_deg(A)
    if not B:
        return 0
    res = B[0] ** da if da <= 1 else B[0] ** da // h ** (da - 1)
    return s * res


def z_gcd(f, g):
    """Primitive gcd in Z[x] (positive leading coefficient)."""
    if not f and not g:
        raise ZeroInputError("gcd of two zero polynomials")
    if not f:
        return z_primitive(g)[1]
    if not g:
        return z_primitive(f)[1]
    cf, A = z_primitive(f)
    cg, B = z_primitive(g)
    cont = math.gcd(abs(cf), abs(cg))
    if z_deg(A) < z_deg(B):
        A, B = B, A
    while B:
        R = _prem(A, B)
        A = B
        B = z_primitive(R)[1] if R else []
    _, A = z_primitive(A)
    if z_deg(A) == 0:
        return [cont]
    return z_scal(A, cont) if cont != 1 else A


def z_is_squarefree(f, tries=6):
    """True iff gcd(f, f') = 1.  Modular certificates first (gcd = 1 mod any
    good prime proves it), exact primitive gcd as fallback."""
    if not f or z_deg(f) == 0:
        return True
    df = z_deriv(f)
    if not df:
        return False
    p = 1009
    seen = 0
    while seen < tries:
        p = _next_odd_prime(p)
        if f[-1] % p == 0:
            continue
        seen += 1
        if z_deg(zp_gcd(zp_from_z(f, p), zp_from_z(df, p), p)) == 0:
            return True
    return z_deg(z_gcd(f, df)) == 0


def _next_odd_prime(p):
    from .exactarith import is_prime

    p += 2
    while not is_prime(p):
        p += 2
    return p


# ---------------------------------------------------------------------------
# Z/p[x]  (p an odd prime)


def zp_from_z(f, p):
    return z_strip([c % p for c in f])


def zp_add(f, g, p):
    return z_strip([(a + b) % p for a, b in _zip_pad(f, g)])


def zp_sub(f, g, p):
    return z_strip([(a - b) % p for a, b in _zip_pad(f, g)])


def _zip_pad(f, g):
    n = max(len(f), len(g))
    return zip(f + [0] * (n - len(f)), g + [0] * (n - len(g)))


def zp_mul(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return z_strip([c % p for c in out])


def zp_scal(f, c, p):
    c %= p
    if c == 0:
        return []
    return z_strip([a * c % p for a in f])


def zp_monic(f, p):
    if not f:
        return f
    inv = pow(f[-1], p - 2, p)
    return [c * inv % p for c in f]


def zp_divmod(f, g, p):
    if not g:
        raise ZeroDivisionError("mod-p division by zero polynomial")
    dg = z_deg(g)
    inv = pow(g[-1], p - 2, p)
    r = list(f)
    q = [0] * max(len(f) - dg, 0)
    while z_deg(r) >= dg:
        c = r[-1] * inv % p
        k = z_deg(r) - dg
        q[k] = c
        for i, b in enumerate(g):
            r[k + i] = (r[k + i] - c * b) % p
        z_strip(r)
    return z_strip(q), r


def zp_rem(f, g, p):
    return zp_divmod(f, g, p)[1]


def zp_gcd(f, g, p):
    while g:
        f, g = g, zp_rem(f, g, p)
    return zp_monic(f, p)


def zp_powmod(f, e, m, p):
    """f^e mod m over Z/p by square and multiply."""
    result = [1]
    f = zp_rem(f, m, p)
    while e:
        if e & 1:
            result = zp_rem(zp_mul(result, f, p), m, p)
        f = zp_rem(zp_mul(f, f, p), m, p)
        e >>= 1
    return result


def zp_deriv(f, p):
    return z_strip([i * c % p for i, c in enumerate(f)][1:])


def zp_is_squarefree(f, p):
    d = zp_deriv(f, p)
    if not d:
        return False
    return z_deg(zp_gcd(f, d, p)) == 0


def zp_ddf(f, p):
    """Distinct-degree split of a monic squarefree f: list of
    (product_of_factors, degree). Degrees appear in increasing order."""
    out = []
    fs = zp_monic(f, p)
    x = [0, 1]
    h = zp_rem(x, fs, p)
    d = 0
    while z_deg(fs) > 0:
        d += 1
        if z_deg(fs) < 2 * d:
            out.append((fs, z_deg(fs)))
            break
        h = zp_powmod(h, p, fs, p)
        g = zp_gcd(zp_sub(h, x, p), fs, p)
        if z_deg(g) > 0:
            out.append((g, d))
            fs = zp_divmod(fs, g, p)[0]
            h = zp_rem(h, fs, p)
    return out


def zp_factor_degrees(f, p):
    """Multiset of irreducible factor degrees of monic squarefree f mod p."""
    out = []
    for g, d in zp_ddf(f, p):
        out.extend([d] * (z_deg(g) // d))
    return sorted(out)


def zp_edf(f, d, p, rng):
    """Cantor-Zassenhaus split of monic f (product of degree-d irreducibles)."""
    n = z_deg(f)
    if n == d:
        return [f]
    exponent = (p**d - 1) // 2
    while True:
        r = [rng.randrange(p) for _ in range(n)]
        z_strip(r)
        if z_deg(r) < 1:
            continue
        w = zp_powmod(r, exponent, f, p)
        w = zp_sub(w, [1], p)
        g = zp_gcd(w, f, p)
        if 0 < z_deg(g) < n:
            rest = zp_divmod(f, g, p)[0]
            return zp_edf(g, d, p, rng) + zp_edf(rest, d, p, rng)


def zp_factor_squarefree(f, p, seed=0):
    """Monic irreducible factors of a monic squarefree f mod p (sorted)."""
    rng = random.Random((seed, p, tuple(f)).__hash__())
    factors = []
    for g, d in zp_ddf(f, p):
        factors.extend(zp_edf(g, d, p, rng))
    return sorted(factors)


def zp_roots(f, p):
    """Roots in Z/p of f (not necessarily squarefree)."""
    x = [0, 1]
    xp = zp_powmod(x, p, f, p)
    lin = zp_gcd(zp_sub(xp, x, p), f, p)
    if z_deg(lin) <= 0:
        return []
    rng = random.Random((p, tuple(f)).__hash__())
    return sorted((p - g[0]) % p for g in zp_edf(lin, 1, p, rng))


def zp_min_irreducible_factor(f, p, max_degree=None):
    """A lowest-degree irreducible factor of monic squarefree f mod p,
    or None if every factor exceeds max_degree."""
    for g, d in zp_ddf(f, p):
        if max_degree is not None and d > max_degree:
            return None
        rng = random.Random((p, d, tuple(g)).__hash__())
        return zp_edf(g, d, p, rng)[0]
    return None
