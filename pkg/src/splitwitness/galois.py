"""Galois group identification for irreducible polynomials of degree <= 5.

Decision ladder: degrees 1-3 from the discriminant; degree 4 from the
resolvent cubic pattern with the C4/D4 split decided over Q(sqrt(disc));
degree 5 by sound pre-filters (a (2,3) modular cycle type or an exact count
of 3 real roots both force S5) with the splitting-field degree as the exact
fallback, mapped through {5: C5, 10: D5, 20: F20, 60: A5, 120: S5}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import intpoly as zx
from .errors import (
    DegreeNotPrimeError,
    DegreeOutOfRangeError,
    NotIrreducibleError,
    UndecidableError,
)
from .exactarith import is_prime, is_rational_square
from .factorq import factor_q
from .nffactor import factor_over_nf
from .numberfield import NumberField
from .polynomials import Poly, discriminant, sturm_real_roots
from .towers import DEFAULT_SPLITTING_CAP, splitting_degree

GROUP_ORDERS = {
    "C1": 1,
    "C2": 2,
    "C3": 3,
    "S3": 6,
    "C4": 4,
    "V4": 4,
    "D4": 8,
    "A4": 12,
    "S4": 24,
    "C5": 5,
    "D5": 10,
    "F20": 20,
    "A5": 60,
    "S5": 120,
}

_NONSOLVABLE = {"A5", "S5"}
_EVEN_GROUPS = {"C3", "V4", "A4", "C5", "D5", "A5"}  # contained in Alt(n)

_CYCLE_SIEVE_PRIMES = 25


@dataclass(frozen=True)
class GaloisClass:
    degree: int
    group_tag: str
    solvable: bool
    evidence: tuple  # ordered (kind, value) pairs

    @property
    def order(self):
        return GROUP_ORDERS[self.group_tag]


def _require_irreducible(f: Poly) -> Poly:
    if f.degree < 1:
        raise DegreeOutOfRangeError("degree must be >= 1")
    f = f.monic()
    if f.degree > 1 and not factor_q(f).is_irreducible:
        raise NotIrreducibleError(f"{f} is reducible over Q")
    return f


def galois_group(f: Poly, cap: int = DEFAULT_SPLITTING_CAP) -> GaloisClass:
    f = _require_irreducible(f)
    d = f.degree
    if d > 5:
        raise DegreeOutOfRangeError("group identification implemented for degree <= 5")
    if d == 1:
        return GaloisClass(1, "C1", True, (("degree", 1),))
    disc = discriminant(f)
    disc_square = is_rational_square(disc)
    evidence = [("discriminant", str(disc)), ("discriminant_square", disc_square)]
    if d == 2:
        return GaloisClass(2, "C2", True, tuple(evidence))
    if d == 3:
        tag = "C3" if disc_square else "S3"
        return GaloisClass(3, tag, True, tuple(evidence))
    if d == 4:
        return _quartic(f, disc_square, evidence)
    return _quintic(f, disc, disc_square, evidence, cap)


def _quartic(f: Poly, disc_square: bool, evidence) -> GaloisClass:
    # depress: x -> x - a3/4 leaves the group unchanged
    a3 = f[3]
    g = f.compose(Poly((-a3 / 4, 1)))
    p, q, r = g[2], g[1], g[0]
    resolvent = Poly((4 * p * r - q * q, -4 * r, -p, 1))
    fac = factor_q(resolvent)
    rational_roots = sum(m for h, m in fac.factors if h.degree == 1)
    evidence.append(
        ("resolvent_cubic_factor_degrees", sorted(h.degree for h, _ in fac.factors))
    )
    if rational_roots == 0:
        tag = "A4" if disc_square else "S4"
        return GaloisClass(4, tag, True, tuple(evidence))
    if rational_roots == 3:
        return GaloisClass(4, "V4", True, tuple(evidence))
    # one rational resolvent root: C4 vs D4, split over Q(sqrt(disc))
    disc_field = NumberField(Poly((-discriminant(f), 0, 1)).monic())
    parts = factor_over_nf(f, disc_field)
    stays_irreducible = len(parts) == 1 and parts[0][0].degree == 4
    evidence.append(("irreducible_over_disc_field", stays_irreducible))
    tag = "D4" if stays_irreducible else "C4"
    return GaloisClass(4, tag, True, tuple(evidence))


def _cycle_types(f: Poly, max_primes=_CYCLE_SIEVE_PRIMES):
    """Factor-degree multisets of f at good primes (squarefree reduction)."""
    f_int = f.primitive_int()
    out = []
    p = 3
    while len(out) < max_primes and p < 10_000:
        if f_int[-1] % p != 0:
            fp = zx.zp_from_z(f_int, p)
            if zx.z_deg(fp) == zx.z_deg(f_int) and zx.zp_is_squarefree(fp, p):
                out.append((p, zx.zp_factor_degrees(fp, p)))
        p += 2
        while not is_prime(p):
            p += 2
    return out


def _quintic(f: Poly, disc, disc_square: bool, evidence, cap) -> GaloisClass:
    reals = sturm_real_roots(f)
    evidence.append(("real_root_count", reals))
    if reals == 3:
        evidence.append(("s5_by_three_real_roots", True))
        return GaloisClass(5, "S5", False, tuple(evidence))
    types = _cycle_types(f)
    evidence.append(
        ("modular_cycle_types", [[p, list(t)] for p, t in types])
    )
    for _p, t in types:
        if t == [2, 3]:
            evidence.append(("s5_by_2_3_cycle_type", True))
            return GaloisClass(5, "S5", False, tuple(evidence))
    for _p, t in types:
        if t == [1, 1, 3]:
            # a 3-cycle plus transitivity forces Alt(5) or Sym(5)
            tag = "A5" if disc_square else "S5"
            evidence.append(("three_cycle_seen", True))
            return GaloisClass(5, tag, False, tuple(evidence))
    summary = splitting_degree(f, cap)
    evidence.append(("splitting_tower_steps", list(summary.steps)))
    evidence.append(("splitting_degree", summary.total_degree))
    tag = {5: "C5", 10: "D5", 20: "F20", 60: "A5", 120: "S5"}[summary.total_degree]
    if disc_square != (tag in _EVEN_GROUPS):
        raise AssertionError("discriminant parity disagrees with identified group")
    return GaloisClass(5, tag, tag not in _NONSOLVABLE, tuple(evidence))


def sp_criterion(f: Poly) -> bool:
    """Sound S_p test: irreducible of prime degree p with exactly p-2 real
    roots.  True proves the group is S_p; False is inconclusive."""
    d = f.degree
    if d < 2 or not is_prime(d):
        raise DegreeNotPrimeError(f"degree {d} is not prime")
    if not factor_q(f).is_irreducible:
        return False
    return sturm_real_roots(f) == d - 2


@dataclass(frozen=True)
class SolvabilityVerdict:
    solvable: bool
    method: str
    group: GaloisClass | None


def is_solvable_by_radicals(f: Poly, cap: int = DEFAULT_SPLITTING_CAP) -> SolvabilityVerdict:
    f = _require_irreducible(f)
    d = f.degree
    if d <= 4:
        gc = galois_group(f, cap)
        return SolvabilityVerdict(True, "degree <= 4", gc)
    if d == 5:
        gc = galois_group(f, cap)
        return SolvabilityVerdict(gc.solvable, "quintic classification", gc)
    if is_prime(d):
        if sp_criterion(f):
            return SolvabilityVerdict(False, f"S_{d} by the prime-degree criterion", None)
        raise UndecidableError(
            f"degree {d} outside the decidable range (criterion inconclusive)"
        )
    raise UndecidableError(f"degree {d} outside the decidable range")
