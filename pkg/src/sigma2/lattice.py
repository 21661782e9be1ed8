"""Exact arithmetic on the Picard and Grothendieck lattices of two surfaces.

The two surfaces are the Hirzebruch surface of degree 2 (written ``sigma2``
throughout) and the smooth quadric P1 x P1 (``quadric``).  Divisor classes
live in the rank-2 Picard lattice: on sigma2 the basis is (C, f), where C is
the section with C^2 = -2 and f the fiber with f^2 = 0, C.f = 1; on the
quadric the basis is the two rulings, pairing as (a,b).(c,d) = ad + bc.

A K-theory class is the integer triple (rank, c1, chi).  The degree-2 Chern
character ch2 lies in (1/2)Z and never appears with a denominator: it is only
ever formed as the integer 2*ch2.  With chi(O) = 1 on both surfaces, the
Euler pairing expands by Riemann-Roch to the all-integer closed form

    chi(v, w) = r1*chi2 + r2*chi1 - r1*r2 - c1(v).c1(w) + r2 * K.c1(v)

which is the single formula everything else in this package reduces to.

All values are immutable and every function is pure, so they may be shared
freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True, slots=True)
class Surface:
    """One of the two supported surfaces.

    ``canonical_coeffs`` are the coordinates of the canonical divisor class
    in the standard Picard basis; ``chi_O`` is chi of the structure sheaf,
    which equals 1 for both surfaces.
    """

    kind: str
    canonical_coeffs: tuple[int, int]
    chi_O: int = 1

    @property
    def canonical_class(self) -> PicClass:
        return PicClass(self, *self.canonical_coeffs)

    def __repr__(self) -> str:
        return f"Surface({self.kind!r})"


SIGMA2 = Surface("sigma2", (-2, -4))
QUADRIC = Surface("quadric", (-2, -2))

SURFACES = {s.kind: s for s in (SIGMA2, QUADRIC)}


def _require_same_surface(x, y) -> None:
    if x.surface != y.surface:
        raise ValueError(
            f"surface mismatch: {x.surface.kind} vs {y.surface.kind}"
        )


@dataclass(frozen=True, slots=True)
class PicClass:
    """Divisor class a*C + b*f on sigma2, or bidegree (a, b) on the quadric."""

    surface: Surface
    a: int
    b: int

    @property
    def coeffs(self) -> tuple[int, int]:
        return (self.a, self.b)

    def __add__(self, other: PicClass) -> PicClass:
        _require_same_surface(self, other)
        return PicClass(self.surface, self.a + other.a, self.b + other.b)

    def __sub__(self, other: PicClass) -> PicClass:
        _require_same_surface(self, other)
        return PicClass(self.surface, self.a - other.a, self.b - other.b)

    def __neg__(self) -> PicClass:
        return PicClass(self.surface, -self.a, -self.b)

    def __rmul__(self, n: int) -> PicClass:
        return PicClass(self.surface, n * self.a, n * self.b)

    def __str__(self) -> str:
        if self.surface is QUADRIC:
            return f"({self.a},{self.b})"
        parts = []
        if self.a:
            parts.append(f"{self.a}C" if self.a != 1 else "C")
        if self.b:
            parts.append(f"{self.b}f" if self.b != 1 else "f")
        return "+".join(parts).replace("+-", "-") or "0"


def pic(surface: Surface, a: int, b: int) -> PicClass:
    return PicClass(surface, a, b)


def intersect(d1: PicClass, d2: PicClass) -> int:
    """Intersection number of two divisor classes on the same surface."""
    _require_same_surface(d1, d2)
    cross = d1.a * d2.b + d1.b * d2.a
    if d1.surface.kind == "sigma2":
        return -2 * d1.a * d2.a + cross
    return cross


@dataclass(frozen=True, slots=True)
class KClass:
    """K-theory class recorded as (rank, c1, chi)."""

    surface: Surface
    rank: int
    c1: PicClass
    chi: int

    def __post_init__(self) -> None:
        if self.c1.surface != self.surface:
            raise ValueError("surface mismatch between class and its c1")

    def __add__(self, other: KClass) -> KClass:
        _require_same_surface(self, other)
        return KClass(self.surface, self.rank + other.rank,
                      self.c1 + other.c1, self.chi + other.chi)

    def __sub__(self, other: KClass) -> KClass:
        return self + (-other)

    def __neg__(self) -> KClass:
        return KClass(self.surface, -self.rank, -self.c1, -self.chi)

    def __rmul__(self, n: int) -> KClass:
        return KClass(self.surface, n * self.rank, n * self.c1, n * self.chi)


def twice_ch2(v: KClass) -> int:
    """The integer 2*ch2(v); ch2 itself lies in (1/2)Z."""
    k = v.surface.canonical_class
    return 2 * (v.chi - v.rank * v.surface.chi_O) + intersect(k, v.c1)


def riemann_roch_chi(d: PicClass) -> int:
    """chi of the line bundle O(d): chi(O) + d.(d - K)/2."""
    k = d.surface.canonical_class
    num = intersect(d, d - k)
    # d^2 + d.K is even by adjunction, hence so is d.(d - K).
    assert num % 2 == 0, f"odd Riemann-Roch numerator for {d}"
    return d.surface.chi_O + num // 2


def class_of_line_bundle(d: PicClass) -> KClass:
    """K-theory class of the line bundle O(d)."""
    return KClass(d.surface, 1, d, riemann_roch_chi(d))


def class_of_OC(a: int) -> KClass:
    """Class of O_C(a), the degree-a line bundle on the (-2)-section C.

    Taking the two-term resolution by O(a*f - C) -> O(a*f) gives rank 0,
    c1 = C and chi = a + 1.  These classes are 2-spherical: the self-pairing
    is chi(alpha, alpha) = -C^2 = 2.
    """
    return KClass(SIGMA2, 0, pic(SIGMA2, 1, 0), a + 1)


def euler_pairing(v: KClass, w: KClass) -> int:
    """Euler pairing chi(v, w), the alternating sum of Ext dimensions.

    Exceptional classes are exactly those with chi(e, e) = 1.
    """
    _require_same_surface(v, w)
    k = v.surface.canonical_class
    return (v.rank * w.chi + w.rank * v.chi
            - v.rank * w.rank * v.surface.chi_O
            - intersect(v.c1, w.c1)
            + w.rank * intersect(k, v.c1))


def dual_class(v: KClass) -> KClass:
    """Class of the derived dual: rank fixed, c1 negated, ch2 fixed."""
    k = v.surface.canonical_class
    return KClass(v.surface, v.rank, -v.c1, v.chi + intersect(k, v.c1))


def tensor_line_bundle(v: KClass, d: PicClass) -> KClass:
    """Class of v tensored with the line bundle O(d)."""
    _require_same_surface(v, d)
    chi = (v.chi + intersect(v.c1, d)
           + v.rank * (riemann_roch_chi(d) - d.surface.chi_O))
    return KClass(v.surface, v.rank, v.c1 + v.rank * d, chi)


def serre_pair_check(v: KClass, w: KClass) -> bool:
    """Serre duality at the pairing level: chi(v, w) == chi(w, v otimes K)."""
    k = v.surface.canonical_class
    return euler_pairing(v, w) == euler_pairing(w, tensor_line_bundle(v, k))


def euler_matrix(classes) -> tuple[tuple[int, ...], ...]:
    """Gram matrix of Euler pairings chi(e_i, e_j) of a list of classes."""
    return tuple(
        tuple(euler_pairing(ei, ej) for ej in classes) for ei in classes
    )
