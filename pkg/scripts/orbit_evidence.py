#!/usr/bin/env python3
"""Orbit evidence for the royal variety as the origin's orbit.

Images of the origin under random group elements always land on the double-root
locus (discriminant residual at rounding level), while images of a non-royal point
keep a residual bounded away from zero. This is evidence, not proof, that the group
action is not transitive; the full claim rests on classification theorems outside
this package's scope.
"""

import argparse

from symbidisc import ORIGIN, SymPoint, in_sigma2, orbit_sample


def summarize(label: str, images) -> None:
    residuals = sorted(in_sigma2(img)[1] for img in images)
    n = len(residuals)
    print(f"{label}: n = {n}")
    print(f"  residual min = {residuals[0]:.6e}")
    print(f"  residual median = {residuals[n // 2]:.6e}")
    print(f"  residual max = {residuals[-1]:.6e}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--samples", type=int, default=1000)
    ap.add_argument("--point", type=float, nargs=2, default=(0.5, 0.0),
                    metavar=("RE_S", "RE_P"), help="real (s, p) for the non-royal orbit")
    args = ap.parse_args()

    summarize("orbit of the origin", orbit_sample(ORIGIN, args.samples, args.seed))
    pt = SymPoint(args.point[0], args.point[1])
    member, residual = in_sigma2(pt)
    print(f"\nstart point ({pt.s.real}, {pt.p.real}): royal = {member}, "
          f"own residual = {residual}")
    summarize("orbit of that point", orbit_sample(pt, args.samples, args.seed))


if __name__ == "__main__":
    main()
