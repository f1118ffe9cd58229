"""Numerical enactment of the automorphism-characterization argument.

The argument that every automorphism of the symmetrized bidisc is a lifted disc
automorphism runs through a short chain of computable steps once an automorphism F
fixing the origin is in hand:

  1. F's origin Jacobian has the normalized form [[1, b], [0, d]] after dividing out
     the rotation it induces on the royal variety.
  2. The commutator of F with a rotation pair (R_{1/tau} after, R_tau before) has
     origin Jacobian [[1, b*(tau-1)], [0, 1]]; its n-th iterate has corner entry
     n*b*(tau-1), which grows without bound unless b = 0, while a Schwarz-type bound
     caps that entry at 2 for any self-map of the domain fixing the origin.
  3. Commuting with all rotations forces the weighted-homogeneous form
     (s, p) -> (alpha*s, d*p + C*s**2) with the weights (1, 2) on (s, p).
  4. Fixing the royal variety pointwise forces C = 0.

This module makes each step a concrete operation on 2x2 complex matrices and
truncated polynomial candidate maps, plus a pipeline that drives any given map
through steps 1-4 and reports how far it is from the identity. Orbit sampling
supplies the evidence-level companion: origin orbits stay on the royal variety,
non-royal orbits stay off it.

Everything here is seeded and deterministic; experiment results are pinned by
(seed, count) alone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Mapping, Union

import numpy as np

from .errors import (
    NotWeightedHomogeneous,
    NotNormalized,
    ParameterOutOfDomain,
    PreconditionUnmet,
    SingularJacobian,
)
from .g2_group import (
    G2Automorphism,
    Jacobian2,
    apply_g2,
    compose_g2,
    finite_jacobian,
    lift,
    transport_to_origin,
)
from .sampling import random_disc, random_moebius, rng_from_seed, random_interior
from .sym_geometry import ORIGIN, SymPoint, in_g2, in_sigma2

DEFAULT_TOL = 1e-9

# Schwarz-lemma constant: p -> S(0, p) is holomorphic on |p| < 1 (the points (0, p)
# have roots of modulus sqrt(|p|), hence lie in the domain), is bounded by sup|S| <= 2,
# and vanishes at 0, so its derivative at 0 -- and every iterate's corner entry -- is
# bounded by 2. Both premises are asserted numerically in the test suite.
CAUCHY_BOUND = 2.0

# |b|*|tau - 1| at or below this counts as "no growth ever": b is effectively zero.
NO_GROWTH_THRESHOLD = 1e-12

_MapLike = Union[G2Automorphism, "CandidateMap", Callable[[SymPoint], SymPoint]]


# ---------------------------------------------------------------------------
# Candidate maps: truncated polynomial self-maps of C^2 fixing the origin
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CandidateMap:
    """Polynomial map (S, P) with coefficient table {(j, k): (cS, cP)} on s**j * p**k.

    Monomials respect the weighted degree bound j + 2k <= degree_cap and the
    constant term vanishes, so every candidate fixes the origin.
    """

    terms: Mapping[tuple[int, int], tuple[complex, complex]]
    degree_cap: int = 4

    def __call__(self, pt: SymPoint) -> SymPoint:
        return evaluate_candidate(self, pt)


def make_candidate(terms: Mapping[tuple[int, int], tuple[complex, complex]],
                   degree_cap: int = 4) -> CandidateMap:
    """Validate and canonicalize a coefficient table (sorted keys, complex values)."""
    clean: dict[tuple[int, int], tuple[complex, complex]] = {}
    for (j, k), (cs, cp) in sorted(terms.items()):
        j, k = int(j), int(k)
        cs, cp = complex(cs), complex(cp)
        if j < 0 or k < 0:
            raise ParameterOutOfDomain(f"negative exponents ({j}, {k})")
        if j + 2 * k > degree_cap:
            raise ParameterOutOfDomain(
                f"monomial ({j}, {k}) has weighted degree {j + 2 * k} > cap {degree_cap}")
        if (j, k) == (0, 0):
            if cs != 0 or cp != 0:
                raise ParameterOutOfDomain("candidate must fix the origin (no constant term)")
            continue
        clean[(j, k)] = (cs, cp)
    return CandidateMap(clean, degree_cap)


def identity_candidate(degree_cap: int = 4) -> CandidateMap:
    return make_candidate({(1, 0): (1.0, 0.0), (0, 1): (0.0, 1.0)}, degree_cap)


def evaluate_candidate(F: CandidateMap, pt: SymPoint) -> SymPoint:
    S = 0j
    P = 0j
    for (j, k), (cs, cp) in F.terms.items():
        mono = pt.s ** j * pt.p ** k
        S += cs * mono
        P += cp * mono
    return SymPoint(S, P)


def origin_jacobian(F: CandidateMap) -> Jacobian2:
    """Exact coefficient readout of F'(0, 0); no differencing involved."""
    zero = (0j, 0j)
    return Jacobian2(
        F.terms.get((1, 0), zero)[0],
        F.terms.get((0, 1), zero)[0],
        F.terms.get((1, 0), zero)[1],
        F.terms.get((0, 1), zero)[1],
    )


def _as_apply(map_like: _MapLike) -> Callable[[SymPoint], SymPoint]:
    if isinstance(map_like, G2Automorphism):
        return lambda pt: apply_g2(map_like, pt)
    if isinstance(map_like, CandidateMap):
        return lambda pt: evaluate_candidate(map_like, pt)
    if callable(map_like):
        return map_like
    raise TypeError(f"cannot interpret {type(map_like).__name__} as a point map")


# ---------------------------------------------------------------------------
# Commutator Jacobians and the growth bound forcing b = 0
# ---------------------------------------------------------------------------

def _to_array(J: Jacobian2) -> np.ndarray:
    return np.array([[J.m11, J.m12], [J.m21, J.m22]], dtype=complex)


def _from_array(A: np.ndarray) -> Jacobian2:
    return Jacobian2(complex(A[0, 0]), complex(A[0, 1]), complex(A[1, 0]), complex(A[1, 1]))


def _unit(tau: complex) -> complex:
    tau = complex(tau)
    mod = abs(tau)
    if abs(mod - 1.0) > 1e-6:
        raise ParameterOutOfDomain(f"|tau| = {mod} must be within 1e-6 of 1")
    return tau / mod


def _check_normalized(J: Jacobian2) -> None:
    if abs(J.m11 - 1.0) > 1e-8 or abs(J.m21) > 1e-8:
        raise NotNormalized(f"origin Jacobian {J} is not of the form [[1, b], [0, d]]")


def commutator_jacobian(J: Jacobian2, tau: complex) -> Jacobian2:
    """Origin Jacobian of the rotation commutator, J^-1 diag(1/t, 1/t^2) J diag(t, t^2).

    For J = [[1, b], [0, d]] the product collapses to [[1, b*(tau-1)], [0, 1]]: the
    commutator is unipotent no matter what d is.
    """
    t = _unit(tau)
    _check_normalized(J)
    A = _to_array(J)
    det = A[0, 0] * A[1, 1] - A[0, 1] * A[1, 0]
    if abs(det) <= 1e-12:
        raise SingularJacobian(f"|det| = {abs(det)} below 1e-12")
    inv = np.array([[A[1, 1], -A[0, 1]], [-A[1, 0], A[0, 0]]], dtype=complex) / det
    before = np.diag([t, t * t])
    after = np.diag([1.0 / t, 1.0 / (t * t)])
    return _from_array(inv @ after @ A @ before)


def iterate_commutator(J: Jacobian2, tau: complex, n: int) -> Jacobian2:
    """n-th matrix power of the commutator Jacobian; corner entry is n*b*(tau-1)."""
    if n < 1:
        raise ParameterOutOfDomain(f"iteration count {n} must be positive")
    G = _to_array(commutator_jacobian(J, tau))
    return _from_array(np.linalg.matrix_power(G, n))


def cauchy_bound_check(b: complex, tau: complex) -> tuple[int | None, float]:
    """Smallest n with n*|b|*|tau-1| > 2, or None when the growth rate is nil.

    A None result is the numerical form of the conclusion that b = 0: a genuine
    self-map of the domain can never push the iterated corner entry past the bound.
    """
    t = _unit(tau)
    per_step = abs(b) * abs(t - 1.0)
    if per_step <= NO_GROWTH_THRESHOLD:
        return None, CAUCHY_BOUND
    return math.floor(CAUCHY_BOUND / per_step) + 1, CAUCHY_BOUND


@dataclass(frozen=True)
class CommutatorReport:
    """Outcome of the growth experiment for one candidate and one rotation."""

    tau: complex
    b: complex
    jacobian_of_g: Jacobian2
    n_star: int | None
    bound: float


def commutator_experiment(F: CandidateMap, tau: complex, n_max: int = 64) -> CommutatorReport:
    """Run the commutator construction on a candidate's origin Jacobian.

    Computes the commutator Jacobian, iterates it to n_max to confirm the linear
    growth of the corner entry, and evaluates the bound check. n_star absent means
    the candidate is consistent with being an automorphism; n_star present names
    the first iterate whose corner entry provably exceeds the bound.
    """
    t = _unit(tau)
    J = origin_jacobian(F)
    G = commutator_jacobian(J, t)
    iterated = iterate_commutator(J, t, n_max)
    expected = n_max * J.m12 * (t - 1.0)
    if abs(iterated.m12 - expected) > 1e-6 * max(1.0, abs(expected)):
        raise ArithmeticError(
            f"iterated corner entry {iterated.m12} drifted from {expected}")
    n_star, bound = cauchy_bound_check(J.m12, t)
    return CommutatorReport(t, J.m12, G, n_star, bound)


# ---------------------------------------------------------------------------
# Rotation commutation and the weighted-homogeneous form
# ---------------------------------------------------------------------------

def rotation_commutation_residual(F: CandidateMap, tau: complex,
                                  samples: int = 256, seed: int = 0) -> float:
    """Max defect of (t*S(s,p), t^2*P(s,p)) = (S(t*s, t^2*p), P(t*s, t^2*p)) on samples."""
    if samples < 1:
        raise ParameterOutOfDomain("samples must be positive")
    t = _unit(tau)
    rng = rng_from_seed(seed)
    worst = 0.0
    for _ in range(samples):
        pt = random_interior(rng)
        lhs = evaluate_candidate(F, pt)
        rhs = evaluate_candidate(F, SymPoint(t * pt.s, t * t * pt.p))
        worst = max(worst, abs(t * lhs.s - rhs.s), abs(t * t * lhs.p - rhs.p))
    return worst


def weighted_form_extract(F: CandidateMap, tol: float = DEFAULT_TOL
                          ) -> tuple[complex, complex, complex]:
    """Read off (alpha, d, C) from a map of the form (alpha*s, d*p + C*s**2).

    Any other monomial with coefficient above tol disqualifies the candidate;
    commuting with every rotation allows weight 1 in S and weight 2 in P only.
    """
    violations = []
    for (j, k), (cs, cp) in F.terms.items():
        if (j, k) != (1, 0) and abs(cs) > tol:
            violations.append(("S", j, k))
        if (j, k) not in ((0, 1), (2, 0)) and abs(cp) > tol:
            violations.append(("P", j, k))
    if violations:
        raise NotWeightedHomogeneous(sorted(violations))
    zero = (0j, 0j)
    alpha = F.terms.get((1, 0), zero)[0]
    d = F.terms.get((0, 1), zero)[1]
    C = F.terms.get((2, 0), zero)[1]
    return alpha, d, C


def _royal_deviation(apply_fn: Callable[[SymPoint], SymPoint],
                     samples: int, seed: int, max_radius: float = 0.9) -> float:
    rng = rng_from_seed(seed)
    worst = 0.0
    for _ in range(samples):
        lam = random_disc(rng, max_radius)
        pt = SymPoint(2.0 * lam, lam * lam)
        img = apply_fn(pt)
        worst = max(worst, abs(img.s - pt.s), abs(img.p - pt.p))
    return worst


def force_c_zero(F: CandidateMap, tol: float = DEFAULT_TOL,
                 samples: int = 64, seed: int = 11) -> tuple[bool, float]:
    """Check that F fixes royal points, which kills the remaining s**2 coefficient.

    On (2*lam, lam**2) a map (s, p + C*s**2) moves the p-coordinate by 4*C*lam**2,
    so the returned residual is |4*C| * max|lam|**2 over the seeded sample and the
    verdict is True iff it stays within tol. Requires the extracted form to have
    alpha = 1 and d = 1 to tol.
    """
    try:
        alpha, d, _ = weighted_form_extract(F, tol)
    except NotWeightedHomogeneous as exc:
        raise PreconditionUnmet(f"candidate is not rotation-commuting: {exc}") from exc
    if abs(alpha - 1.0) > tol or abs(d - 1.0) > tol:
        raise PreconditionUnmet(f"normalized form expected: alpha = {alpha}, d = {d}")
    residual = _royal_deviation(lambda pt: evaluate_candidate(F, pt), samples, seed)
    return residual <= tol, residual


# ---------------------------------------------------------------------------
# Orbits, displacement diagnostics, and polynomial fitting
# ---------------------------------------------------------------------------

def orbit_sample(pt: SymPoint, count: int, seed: int) -> list[SymPoint]:
    """Images of pt under `count` seeded random group elements.

    Orbits of the origin land on the royal variety (residual ~ 1e-15); orbits of a
    non-royal point keep a strictly positive discriminant residual. The latter is
    evidence, not proof, that the group action has more than one orbit.
    """
    if in_g2(pt).region != "interior":
        raise PreconditionUnmet(f"{pt} is not an interior point")
    rng = rng_from_seed(seed)
    return [apply_g2(lift(random_moebius(rng)), pt) for _ in range(count)]


def cartan_residual(map_like: _MapLike, samples: int = 256, seed: int = 0) -> float:
    """Max displacement of seeded interior samples; zero when the map is the identity.

    Diagnostic companion to the uniqueness theorem for maps whose origin Jacobian
    is the identity: group elements with unipotent trivial Jacobian do not move any
    sample, while non-group candidates generally do. No theorem-level claim is made.
    """
    apply_fn = _as_apply(map_like)
    rng = rng_from_seed(seed)
    worst = 0.0
    for _ in range(samples):
        pt = random_interior(rng)
        img = apply_fn(pt)
        worst = max(worst, abs(img.s - pt.s), abs(img.p - pt.p))
    return worst


def fit_candidate(map_like: _MapLike, degree_cap: int = 4, radius: float = 0.35,
                  samples: int = 160, seed: int = 7) -> CandidateMap:
    """Least-squares truncation of an origin-fixing map to a polynomial candidate.

    Samples (s, p) from pairs of disc points of modulus <= radius and solves the
    Vandermonde system for both components at once. The constant column is omitted,
    so the fit fixes the origin by construction.
    """
    apply_fn = _as_apply(map_like)
    at_origin = apply_fn(ORIGIN)
    if max(abs(at_origin.s), abs(at_origin.p)) > 1e-8:
        raise PreconditionUnmet(f"map moves the origin to {at_origin}")
    exps = [(j, k) for k in range(degree_cap // 2 + 1)
            for j in range(degree_cap - 2 * k + 1) if (j, k) != (0, 0)]
    exps.sort()
    rng = rng_from_seed(seed)
    pts = [random_interior(rng, radius) for _ in range(samples)]
    A = np.array([[pt.s ** j * pt.p ** k for (j, k) in exps] for pt in pts], dtype=complex)
    images = [apply_fn(pt) for pt in pts]
    rhs = np.array([[img.s, img.p] for img in images], dtype=complex)
    coeffs, *_ = np.linalg.lstsq(A, rhs, rcond=None)
    terms = {e: (coeffs[i, 0], coeffs[i, 1]) for i, e in enumerate(exps)}
    return make_candidate(terms, degree_cap)


# ---------------------------------------------------------------------------
# End-to-end pipeline: transport, divide out the rotation, extract, force C = 0
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PipelineReport:
    """How far a map is from the identity after transport and rotation division."""

    origin_image: SymPoint
    transport_param: complex  # royal parameter used to move the origin image back
    rotation_divided: complex  # unit-modulus alpha factored out of the map
    alpha: complex  # extracted s-coefficient of the first component
    d: complex  # extracted p-coefficient of the second component
    c: complex  # extracted s**2-coefficient of the second component
    royal_ok: bool
    royal_residual: float
    identity_deviation: float  # max(|alpha - 1|, |d - 1|, |c|)
    identity_certified: bool


def normalize_and_extract(map_like: _MapLike, tol: float = 1e-8, degree_cap: int = 4,
                          fit_radius: float = 0.35, fit_samples: int = 160,
                          seed: int = 7) -> PipelineReport:
    """Drive a map through the full forcing chain and report the extracted form.

    Steps: move the image of the origin back to the origin with a royal transport,
    divide out the rotation measured from the Jacobian's (1,1) entry, fit the result
    to a polynomial candidate, extract (alpha, d, C), and check royal points are
    fixed. A genuine group element comes out certified as the identity; a candidate
    with a stray C survives extraction but fails the royal check.

    Raises NotWeightedHomogeneous when the normalized map does not commute with
    rotations, and PreconditionUnmet when the origin image is off the royal variety.
    """
    apply_fn = _as_apply(map_like)
    img = apply_fn(ORIGIN)
    member, residual = in_sigma2(img, max(tol, 1e-8))
    if not member:
        raise PreconditionUnmet(
            f"origin image {img} is off the royal variety (residual {residual})")
    transport = transport_to_origin(img, max(tol, 1e-8))
    if isinstance(map_like, G2Automorphism):
        # composing in canonical coordinates avoids the ill-conditioned chained
        # evaluation near the boundary when the transport parameter is large
        moved = _as_apply(compose_g2(transport, map_like))
    else:
        moved = lambda pt: apply_g2(transport, apply_fn(pt))  # noqa: E731

    J = finite_jacobian(moved, ORIGIN)
    if abs(J.m11) < 0.1:
        raise PreconditionUnmet(f"degenerate rotation part |m11| = {abs(J.m11)}")
    rot = J.m11 / abs(J.m11)
    rot_inv = rot.conjugate()

    def normalized(pt: SymPoint) -> SymPoint:
        q = moved(pt)
        return SymPoint(rot_inv * q.s, rot_inv * rot_inv * q.p)

    fitted = fit_candidate(normalized, degree_cap, fit_radius, fit_samples, seed)
    alpha, d, C = weighted_form_extract(fitted, tol)
    try:
        royal_ok, royal_residual = force_c_zero(fitted, tol)
    except PreconditionUnmet:
        royal_ok = False
        royal_residual = _royal_deviation(normalized, samples=64, seed=11)
    deviation = max(abs(alpha - 1.0), abs(d - 1.0), abs(C))
    return PipelineReport(
        origin_image=img,
        transport_param=transport.h.a,
        rotation_divided=rot,
        alpha=alpha,
        d=d,
        c=C,
        royal_ok=royal_ok,
        royal_residual=royal_residual,
        identity_deviation=deviation,
        identity_certified=royal_ok and deviation <= tol,
    )
