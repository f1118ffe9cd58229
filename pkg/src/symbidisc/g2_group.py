"""The automorphism group of the symmetrized bidisc as lifts of disc automorphisms.

Each disc automorphism h induces the map sending (s, p) to the (sum, product) of
(h(root1), h(root2)); that lift is an automorphism of the symmetrized bidisc, and
every automorphism arises this way. Application is available through two independent
routes: a closed rational form in (s, p), which is holomorphic and stable near the
double-root locus, and the literal root route, which desymmetrizes, maps each root,
and re-symmetrizes. Each route serves as the other's oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .disc_moebius import (
    DEFAULT_TOL,
    DiscAutomorphism,
    apply_moebius,
    compose,
    invert,
    make_moebius,
    moebius_equal,
)
from .errors import DenominatorDegenerate, NotOnRoyalVariety
from .sym_geometry import SymPoint, desymmetrize, royal_param, symmetrize

# Below this the rational form's denominator (1 - conj(a)*s + conj(a)**2 * p),
# which equals the product (1 - conj(a)*root1)(1 - conj(a)*root2), is degenerate.
DENOM_THRESHOLD = 1e-14
FD_STEP = 1e-6


@dataclass(frozen=True)
class G2Automorphism:
    """Lift of a disc automorphism; the wrapped h determines the map completely."""

    h: DiscAutomorphism

    def __call__(self, pt: SymPoint) -> SymPoint:
        return apply_g2(self, pt)


@dataclass(frozen=True)
class Jacobian2:
    """Complex 2x2 Jacobian, rows indexed by output (S, P), columns by input (s, p)."""

    m11: complex
    m12: complex
    m21: complex
    m22: complex


def lift(h: DiscAutomorphism) -> G2Automorphism:
    return G2Automorphism(h)


def apply_g2(H: G2Automorphism, pt: SymPoint) -> SymPoint:
    """Closed rational form of the lift.

    For h = (tau, a) the a-part acts as

        ( (1+|a|^2)s - 2*conj(a)*p - 2a,  p - a*s + a^2 ) / (1 - conj(a)*s + conj(a)^2 * p)

    followed by the rotation (s, p) -> (tau*s, tau^2*p). Defined wherever the
    denominator is nondegenerate, which covers a neighbourhood of the closed domain;
    membership is not enforced here so finite-difference stencils may straddle the
    boundary.
    """
    tau, a = H.h.tau, H.h.a
    ac = a.conjugate()
    den = 1.0 - ac * pt.s + ac * ac * pt.p
    if abs(den) < DENOM_THRESHOLD:
        raise DenominatorDegenerate(f"denominator {abs(den)} below {DENOM_THRESHOLD}")
    # grouped so that both numerators cancel exactly at the map's own royal point
    # (s, p) = (2a, a^2); the expanded form (1+|a|^2)s - 2*conj(a)*p - 2a leaks
    # rounding noise there that the denominator (1-|a|^2)^2 then amplifies
    s1 = ((pt.s - 2.0 * a) + ac * (a * pt.s - 2.0 * pt.p)) / den
    p1 = ((pt.p - a * pt.s) + a * a) / den
    return SymPoint(tau * s1, tau * tau * p1)


def apply_g2_via_roots(H: G2Automorphism, pt: SymPoint) -> SymPoint:
    """Definitional route: desymmetrize, map both roots, re-symmetrize."""
    rp = desymmetrize(pt)
    return symmetrize(apply_moebius(H.h, rp.first), apply_moebius(H.h, rp.second))


def compose_g2(H1: G2Automorphism, H2: G2Automorphism) -> G2Automorphism:
    """Lift of the composed disc maps; apply H2 first."""
    return G2Automorphism(compose(H1.h, H2.h))


def invert_g2(H: G2Automorphism) -> G2Automorphism:
    """The inverse lift is the lift of the inverse disc map."""
    return G2Automorphism(invert(H.h))


def rotation(tau: complex) -> G2Automorphism:
    """The lift of lam -> tau*lam, acting as (s, p) -> (tau*s, tau^2*p)."""
    return G2Automorphism(make_moebius(tau, 0j))


def g2_equal(H1: G2Automorphism, H2: G2Automorphism, tol: float = DEFAULT_TOL) -> bool:
    return moebius_equal(H1.h, H2.h, tol)


def transport_to_origin(pt: SymPoint, tol: float = DEFAULT_TOL) -> G2Automorphism:
    """The group element sending a royal point (2a, a^2) to the origin."""
    a = royal_param(pt, tol)
    if abs(a) >= 1.0 - 1e-12:
        raise NotOnRoyalVariety(f"|s/2| = {abs(a)} is not inside the open disc")
    return G2Automorphism(make_moebius(1.0, a))


def finite_jacobian(fn: Callable[[SymPoint], SymPoint], pt: SymPoint,
                    step: float = FD_STEP) -> Jacobian2:
    """Central-difference complex Jacobian of a holomorphic map at pt."""
    f_sp = fn(SymPoint(pt.s + step, pt.p))
    f_sm = fn(SymPoint(pt.s - step, pt.p))
    f_pp = fn(SymPoint(pt.s, pt.p + step))
    f_pm = fn(SymPoint(pt.s, pt.p - step))
    inv = 0.5 / step
    return Jacobian2(
        (f_sp.s - f_sm.s) * inv,
        (f_pp.s - f_pm.s) * inv,
        (f_sp.p - f_sm.p) * inv,
        (f_pp.p - f_pm.p) * inv,
    )


def jacobian_at(H: G2Automorphism, pt: SymPoint, step: float = FD_STEP) -> Jacobian2:
    """Jacobian of the closed rational form at an interior point."""
    return finite_jacobian(lambda q: apply_g2(H, q), pt, step)
