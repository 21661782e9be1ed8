"""Sheaf cohomology of line bundles, computed independently of Riemann-Roch.

On the Hirzebruch surface the ruling p maps to P1 and pushing forward
O(a*C + b*f) for a >= 0 gives the split bundle O(b) + O(b-2) + ... + O(b-2a)
on P1, with no higher direct image; a = -1 kills both direct images, and
a <= -2 is handled through Serre duality.  On the quadric the Kuenneth
formula applies to O(d1) boxtimes O(d2).

This route only uses cohomology of line bundles on P1, so it serves as the
brute-force cross-check for the closed-form Euler pairing in
:mod:`sigma2.lattice`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lattice import PicClass


@dataclass(frozen=True, slots=True)
class CohomologyDims:
    h0: int
    h1: int
    h2: int

    def __post_init__(self) -> None:
        if min(self.h0, self.h1, self.h2) < 0:
            raise ValueError("negative cohomology dimension")

    @property
    def chi(self) -> int:
        return self.h0 - self.h1 + self.h2

    def astuple(self) -> tuple[int, int, int]:
        return (self.h0, self.h1, self.h2)


def _p1_dims(n: int) -> tuple[int, int]:
    # (h0, h1) of O(n) on P1
    return (max(n + 1, 0), max(-n - 1, 0))


def line_bundle_cohomology(d: PicClass) -> CohomologyDims:
    """Dimensions (h0, h1, h2) of the cohomology of O(d)."""
    if d.surface.kind == "quadric":
        p0, p1 = _p1_dims(d.a)
        q0, q1 = _p1_dims(d.b)
        return CohomologyDims(p0 * q0, p0 * q1 + p1 * q0, p1 * q1)

    a, b = d.a, d.b
    if a >= 0:
        h0 = h1 = 0
        for k in range(a + 1):
            p0, p1 = _p1_dims(b - 2 * k)
            h0 += p0
            h1 += p1
        return CohomologyDims(h0, h1, 0)
    if a == -1:
        return CohomologyDims(0, 0, 0)
    dual = line_bundle_cohomology(d.surface.canonical_class - d)
    return CohomologyDims(dual.h2, dual.h1, dual.h0)


def hom_dims_line_bundles(d1: PicClass, d2: PicClass) -> CohomologyDims:
    """(ext0, ext1, ext2) between the line bundles O(d1) and O(d2)."""
    return line_bundle_cohomology(d2 - d1)
