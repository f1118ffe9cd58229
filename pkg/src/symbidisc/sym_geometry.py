"""The symmetrization map, its stable inversion, and membership classification.

Points (s, p) of C^2 are read as coefficient data of z**2 - s*z + p; the symmetrized
bidisc is the set of (s, p) whose two roots lie in the open unit disc, and the royal
variety is its double-root locus (2*lam, lam**2).
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

from .errors import NotOnRoyalVariety

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class SymPoint:
    """A point of C^2 in (sum, product) coordinates."""

    s: complex
    p: complex


@dataclass(frozen=True)
class RootPair:
    """Unordered root pair stored lexicographically by (real, imag)."""

    first: complex
    second: complex


@dataclass(frozen=True)
class MembershipVerdict:
    region: str  # "interior" | "boundary" | "exterior"
    margin: float  # 1 - max(|root|); positive inside, negative outside


ORIGIN = SymPoint(0j, 0j)


def symmetrize(lam1: complex, lam2: complex) -> SymPoint:
    return SymPoint(lam1 + lam2, lam1 * lam2)


def desymmetrize(pt: SymPoint) -> RootPair:
    """Roots of z**2 - s*z + p, computed cancellation-free.

    The square root sign is chosen to maximize |s + d| and the second root comes
    from p/q rather than the symmetric formula; the naive (s - d)/2 loses half the
    digits whenever the roots nearly coincide (i.e. near the royal variety).
    """
    s, p = pt.s, pt.p
    d = cmath.sqrt(s * s - 4.0 * p)
    if abs(s + d) < abs(s - d):
        d = -d
    q = 0.5 * (s + d)
    if q == 0:  # only when s = 0 and p = 0
        return RootPair(0j, 0j)
    return _ordered(q, p / q)


def _ordered(r1: complex, r2: complex) -> RootPair:
    if (r2.real, r2.imag) < (r1.real, r1.imag):
        r1, r2 = r2, r1
    return RootPair(r1, r2)


def _classify(margin: float, tol: float) -> MembershipVerdict:
    if margin > tol:
        return MembershipVerdict("interior", margin)
    if margin < -tol:
        return MembershipVerdict("exterior", margin)
    return MembershipVerdict("boundary", margin)


def in_disc(lam: complex, tol: float = DEFAULT_TOL) -> MembershipVerdict:
    return _classify(1.0 - abs(lam), tol)


def in_g2(pt: SymPoint, tol: float = DEFAULT_TOL) -> MembershipVerdict:
    """Classify by the larger root modulus; interior iff both roots are inside E."""
    rp = desymmetrize(pt)
    return _classify(1.0 - max(abs(rp.first), abs(rp.second)), tol)


def in_sigma2(pt: SymPoint, tol: float = DEFAULT_TOL) -> tuple[bool, float]:
    """Royal-variety test. Returns (verdict, residual) with residual = |s**2 - 4p|."""
    residual = abs(pt.s * pt.s - 4.0 * pt.p)
    member = residual <= tol and abs(pt.s) / 2.0 < 1.0 + tol
    return member, residual


def royal_param(pt: SymPoint, tol: float = DEFAULT_TOL) -> complex:
    """The lam with pt = (2*lam, lam**2); requires pt on the royal variety."""
    member, residual = in_sigma2(pt, tol)
    if not member:
        raise NotOnRoyalVariety(f"discriminant residual {residual} exceeds {tol}")
    return pt.s / 2.0
