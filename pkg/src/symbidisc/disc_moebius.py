"""Holomorphic automorphisms of the unit disc in canonical (tau, a) form.

Every automorphism of the open unit disc E is h(lam) = tau * (lam - a) / (1 - conj(a)*lam)
with |tau| = 1 and |a| < 1, and the pair (tau, a) is unique: a = h^-1(0) and tau fixes
the rotation. Composition and inversion are computed through the 2x2 matrix
representative [[tau, -tau*a], [-conj(a), 1]] acting projectively, then re-canonicalized,
so results stay in (tau, a) form and |tau| is renormalized to exactly 1 on every
construction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParameterOutOfDomain, PoleEncountered

# |a| at or beyond this is treated as a boundary map, which is out of domain.
A_MODULUS_LIMIT = 1.0 - 1e-12
# |tau| may drift this far from 1 on input; it is renormalized on construction.
TAU_MODULUS_SLACK = 1e-6
# Denominators below this are treated as the pole itself.
POLE_THRESHOLD = 1e-14

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class DiscAutomorphism:
    """Canonical parameters of lam -> tau*(lam - a)/(1 - conj(a)*lam)."""

    tau: complex
    a: complex

    def __call__(self, lam: complex) -> complex:
        return apply_moebius(self, lam)


def make_moebius(tau: complex, a: complex) -> DiscAutomorphism:
    """Validate (tau, a) and build the automorphism, renormalizing tau to |tau| = 1."""
    tau = complex(tau)
    a = complex(a)
    if abs(a) >= A_MODULUS_LIMIT:
        raise ParameterOutOfDomain(f"|a| = {abs(a)} must be < {A_MODULUS_LIMIT}")
    mod = abs(tau)
    if abs(mod - 1.0) > TAU_MODULUS_SLACK:
        raise ParameterOutOfDomain(f"|tau| = {mod} must be within {TAU_MODULUS_SLACK} of 1")
    return DiscAutomorphism(tau / mod, a)


def identity() -> DiscAutomorphism:
    return DiscAutomorphism(1.0 + 0j, 0j)


def apply_moebius(h: DiscAutomorphism, lam: complex) -> complex:
    """Evaluate h at lam. Raises PoleEncountered near lam = 1/conj(a)."""
    den = 1.0 - h.a.conjugate() * lam
    if abs(den) < POLE_THRESHOLD:
        raise PoleEncountered(f"lam = {lam} is at the pole of the map")
    return h.tau * (lam - h.a) / den


def _as_matrix(h: DiscAutomorphism) -> tuple[complex, complex, complex, complex]:
    # Row-major (A, B, C, D) for lam -> (A*lam + B)/(C*lam + D).
    return h.tau, -h.tau * h.a, -h.a.conjugate(), 1.0 + 0j


def _from_matrix(A: complex, B: complex, C: complex, D: complex) -> DiscAutomorphism:
    # For a genuine disc automorphism A and D never vanish: tau = A/D, a = -B/A.
    return make_moebius(A / D, -B / A)


def compose(h: DiscAutomorphism, g: DiscAutomorphism) -> DiscAutomorphism:
    """Canonical form of h o g (apply g first)."""
    a1, b1, c1, d1 = _as_matrix(h)
    a2, b2, c2, d2 = _as_matrix(g)
    return _from_matrix(
        a1 * a2 + b1 * c2,
        a1 * b2 + b1 * d2,
        c1 * a2 + d1 * c2,
        c1 * b2 + d1 * d2,
    )


def invert(h: DiscAutomorphism) -> DiscAutomorphism:
    """Canonical form of h^-1: (conj(tau), -tau*a)."""
    return make_moebius(h.tau.conjugate(), -h.tau * h.a)


def moebius_equal(h: DiscAutomorphism, g: DiscAutomorphism, tol: float = DEFAULT_TOL) -> bool:
    """Parameter-wise comparison; by canonicity this matches pointwise agreement on E."""
    return abs(h.tau - g.tau) <= tol and abs(h.a - g.a) <= tol
