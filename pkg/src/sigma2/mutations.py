"""Numerical exceptional collections and the braid-and-shift group action.

A numerical exceptional collection is an ordered tuple of lattice classes
with unit self-pairing and vanishing backwards pairings.  The braid letter
sigma_i mutates slots (i, i+1) to the right,

    (e, f)  |->  (f, e - chi(e, f) * f),

its inverse mutates to the left, and the lattice image of a shift is a sign
flip on one slot.  Mutations preserve the collection axioms and the Z-span
of the classes; the whole action descends to classes taken up to sign.

The module also carries the deformation isometry onto the quadric (matching
the two standard collections basis-to-basis), restriction profiles along the
(-2)-section, a bounded scan for exceptional classes, and a deterministic
best-first search that reduces a full collection back to the standard one.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Optional

from . import intmat
from .lattice import (
    KClass,
    QUADRIC,
    SIGMA2,
    Surface,
    class_of_line_bundle,
    euler_matrix,
    euler_pairing,
    intersect,
    pic,
)
from .twists import TwistWord, apply_word


class CollectionError(ValueError):
    """Raised when a tuple of classes violates the collection axioms."""


@dataclass(frozen=True)
class NumCollection:
    """Ordered tuple of exceptional classes with semiorthogonal pairings."""

    classes: tuple[KClass, ...]

    def __post_init__(self) -> None:
        n = len(self.classes)
        if not 1 <= n <= 4:
            raise CollectionError(f"collection length must be 1..4, got {n}")
        surface = self.classes[0].surface
        for i, e in enumerate(self.classes):
            if e.surface != surface:
                raise CollectionError("mixed surfaces in collection")
            self_pair = euler_pairing(e, e)
            if self_pair != 1:
                raise CollectionError(
                    f"class {i + 1} is not exceptional: chi(e,e) = {self_pair}"
                )
        for j in range(n):
            for i in range(j):
                back = euler_pairing(self.classes[j], self.classes[i])
                if back != 0:
                    raise CollectionError(
                        f"backwards pairing chi(e{j + 1}, e{i + 1}) = {back}"
                    )

    @property
    def surface(self) -> Surface:
        return self.classes[0].surface

    def __len__(self) -> int:
        return len(self.classes)

    def gram(self) -> tuple[tuple[int, ...], ...]:
        return euler_matrix(self.classes)

    def is_full(self) -> bool:
        """Whether the four classes form a Z-basis of the rank-4 lattice."""
        if len(self.classes) != 4:
            return False
        cols = [(v.rank, v.c1.a, v.c1.b, v.chi) for v in self.classes]
        mat = tuple(tuple(col[i] for col in cols) for i in range(4))
        return intmat.determinant(mat) in (1, -1)


def standard_collection(surface: Surface) -> NumCollection:
    """The standard four-term collection of line-bundle classes."""
    if surface is SIGMA2:
        coeffs = ((0, 0), (0, 1), (1, 2), (1, 3))
    else:
        coeffs = ((0, 0), (1, 0), (1, 1), (2, 1))
    return NumCollection(tuple(
        class_of_line_bundle(pic(surface, a, b)) for a, b in coeffs
    ))


def right_mutation(col: NumCollection, i: int) -> NumCollection:
    """Mutate slots (i, i+1) to the right; i is 1-based like sigma_i."""
    n = len(col)
    if not 1 <= i <= n - 1:
        raise IndexError(f"mutation index {i} out of range for length {n}")
    cs = list(col.classes)
    e, f = cs[i - 1], cs[i]
    cs[i - 1], cs[i] = f, e - euler_pairing(e, f) * f
    return NumCollection(tuple(cs))


def left_mutation(col: NumCollection, i: int) -> NumCollection:
    """Inverse of right_mutation at the same slot."""
    n = len(col)
    if not 1 <= i <= n - 1:
        raise IndexError(f"mutation index {i} out of range for length {n}")
    cs = list(col.classes)
    e, f = cs[i - 1], cs[i]
    cs[i - 1], cs[i] = f - euler_pairing(e, f) * e, e
    return NumCollection(tuple(cs))


@dataclass(frozen=True, slots=True)
class GroupLetter:
    """One letter of the shift-and-braid group: sigma_i^{+-1} or a flip."""

    kind: str  # "sigma" or "flip"
    index: int
    inverse: bool = False

    def __post_init__(self) -> None:
        if self.kind not in ("sigma", "flip"):
            raise ValueError(f"unknown letter kind {self.kind!r}")
        if self.kind == "flip" and self.inverse:
            raise ValueError("flips are self-inverse")

    def __str__(self) -> str:
        if self.kind == "flip":
            return f"f{self.index}"
        return f"-s{self.index}" if self.inverse else f"s{self.index}"


def sigma(i: int, inverse: bool = False) -> GroupLetter:
    return GroupLetter("sigma", i, inverse)


def flip(i: int) -> GroupLetter:
    return GroupLetter("flip", i)


@dataclass(frozen=True)
class GroupWord:
    """Sequence of letters acting on collections; letters apply left to
    right, so the word [s1, s2] realizes the composite sigma_2 . sigma_1."""

    letters: tuple[GroupLetter, ...] = ()

    def __mul__(self, other: GroupWord) -> GroupWord:
        return GroupWord(self.letters + other.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def inverse(self) -> GroupWord:
        out = []
        for g in reversed(self.letters):
            if g.kind == "sigma":
                out.append(GroupLetter("sigma", g.index, not g.inverse))
            else:
                out.append(g)
        return GroupWord(tuple(out))

    def __str__(self) -> str:
        return ",".join(str(g) for g in self.letters)


def apply_group_word(col: NumCollection, g: GroupWord) -> NumCollection:
    n = len(col)
    for letter in g.letters:
        if letter.kind == "sigma":
            if not 1 <= letter.index <= n - 1:
                raise IndexError(f"letter {letter} invalid for length {n}")
            if letter.inverse:
                col = left_mutation(col, letter.index)
            else:
                col = right_mutation(col, letter.index)
        else:
            if not 1 <= letter.index <= n:
                raise IndexError(f"letter {letter} invalid for length {n}")
            cs = list(col.classes)
            cs[letter.index - 1] = -cs[letter.index - 1]
            col = NumCollection(tuple(cs))
    return col


# ---------------------------------------------------------------------------
# Deformation isometry onto the quadric


def _basis_matrix(classes: Iterable[KClass]) -> intmat.Mat:
    cols = [(v.rank, v.c1.a, v.c1.b, v.chi) for v in classes]
    return tuple(tuple(col[i] for col in cols) for i in range(4))


_GEN_MAT = intmat.matmul(
    _basis_matrix(standard_collection(QUADRIC).classes),
    intmat.unimodular_inverse(_basis_matrix(standard_collection(SIGMA2).classes)),
)
_GEN_INV = intmat.unimodular_inverse(_GEN_MAT)


def gen_isometry(v: KClass) -> KClass:
    """Lattice isometry onto the quadric, standard basis to standard basis."""
    if v.surface is not SIGMA2:
        raise ValueError("gen_isometry expects a class over sigma2")
    r, a, b, chi = intmat.matvec(_GEN_MAT, (v.rank, v.c1.a, v.c1.b, v.chi))
    return KClass(QUADRIC, r, pic(QUADRIC, a, b), chi)


def gen_isometry_inverse(v: KClass) -> KClass:
    if v.surface is not QUADRIC:
        raise ValueError("inverse isometry expects a class over the quadric")
    r, a, b, chi = intmat.matvec(_GEN_INV, (v.rank, v.c1.a, v.c1.b, v.chi))
    return KClass(SIGMA2, r, pic(SIGMA2, a, b), chi)


# ---------------------------------------------------------------------------
# Restriction profile along the (-2)-section


@dataclass(frozen=True, slots=True)
class RestrictionProfile:
    """Splitting type (b, s): O_C(b)^s + O_C(b+1)^(r-s) on the section."""

    b: int
    s: int


def restriction_profile(v: KClass) -> RestrictionProfile:
    """Unique (b, s) with rank*b + (rank - s) = c1.C and 1 <= s <= rank."""
    if v.rank <= 0:
        raise ValueError(
            "restriction profile needs positive rank; negate the class first"
        )
    if euler_pairing(v, v) != 1:
        raise ValueError("restriction profile is defined for exceptional classes")
    c = pic(v.surface, 1, 0)
    degree = intersect(v.c1, c)
    # degree = rank*b + (rank - s) with 0 <= rank - s <= rank - 1
    b, t = divmod(degree, v.rank)
    return RestrictionProfile(b, v.rank - t)


# ---------------------------------------------------------------------------
# Bounded scan for exceptional classes


@dataclass(frozen=True)
class ScanResult:
    classes: tuple[KClass, ...]
    rank_zero: tuple[KClass, ...]


def enumerate_exceptional_classes(
    surface: Surface,
    rank_bound: int,
    c1_bound: int,
    chi_bound: int,
) -> ScanResult:
    """All classes in the box with chi(e, e) = 1.

    For rank r != 0 the self-pairing equation pins chi, which is kept only
    when integral and within the bound; for r = 0 it reads -c1^2 = 1, so any
    hit would land in ``rank_zero``.  Both Picard forms are even, hence the
    expectation is that ``rank_zero`` stays empty.
    """
    k = surface.canonical_class
    found: list[KClass] = []
    rank_zero: list[KClass] = []
    for r in range(-rank_bound, rank_bound + 1):
        for a in range(-c1_bound, c1_bound + 1):
            for b in range(-c1_bound, c1_bound + 1):
                d = pic(surface, a, b)
                dd = intersect(d, d)
                if r == 0:
                    if -dd == 1:
                        rank_zero.append(KClass(surface, 0, d, 0))
                    continue
                num = 1 + r * r * surface.chi_O + dd - r * intersect(k, d)
                chi, rem = divmod(num, 2 * r)
                if rem or abs(chi) > chi_bound:
                    continue
                found.append(KClass(surface, r, d, chi))
    return ScanResult(tuple(found), tuple(rank_zero))


# ---------------------------------------------------------------------------
# Reduction to the standard collection


def _canonical_signed(vec: tuple[int, int, int, int]) -> tuple[int, int, int, int]:
    for x in vec:
        if x > 0:
            return vec
        if x < 0:
            return tuple(-y for y in vec)  # type: ignore[return-value]
    return vec


def _sign_distance(u: tuple[int, ...], v: tuple[int, ...]) -> int:
    plus = sum(abs(x - y) for x, y in zip(u, v))
    minus = sum(abs(x + y) for x, y in zip(u, v))
    return min(plus, minus)


def _pair_sigma2(u: tuple[int, int, int, int], v: tuple[int, int, int, int]) -> int:
    # Inlined euler_pairing on raw (rank, a, b, chi) tuples over sigma2,
    # where K.(aC + bf) = -2b.
    inter = -2 * u[1] * v[1] + u[1] * v[2] + u[2] * v[1]
    return u[0] * v[3] + v[0] * u[3] - u[0] * v[0] - inter - 2 * v[0] * u[2]


_MOVES = tuple(
    (i, inv) for i in (1, 2, 3) for inv in (False, True)
)


def _apply_move(state, move):
    i, inv = move
    cs = list(state)
    e, f = cs[i - 1], cs[i]
    chi = _pair_sigma2(e, f)
    if inv:
        cs[i - 1], cs[i] = tuple(x - chi * y for x, y in zip(f, e)), e
    else:
        cs[i - 1], cs[i] = f, tuple(x - chi * y for x, y in zip(e, f))
    return tuple(_canonical_signed(c) for c in cs)


def reduce_to_standard(
    col: NumCollection,
    max_depth: int = 16,
    max_nodes: int = 200_000,
) -> Optional[GroupWord]:
    """Search for a mutation word carrying the collection to the standard one.

    Collections are compared up to componentwise sign, where the action of
    the flips disappears, so the returned word uses braid letters only.  The
    search is best-first on depth plus the sign-quotient L1 distance to the
    standard classes, with moves tried in the fixed order s1, -s1, s2, -s2,
    s3, -s3 and ties broken by insertion order; the result is deterministic.
    Returns None when the depth or node budget is exhausted, which bounds the
    search and refutes nothing.
    """
    if col.surface is not SIGMA2:
        raise ValueError("reduction targets the standard collection on sigma2")
    if not col.is_full():
        raise CollectionError("reduction requires a full four-term collection")

    target = tuple(
        _canonical_signed((v.rank, v.c1.a, v.c1.b, v.chi))
        for v in standard_collection(SIGMA2).classes
    )

    def height(state) -> int:
        return sum(_sign_distance(s, t) for s, t in zip(state, target))

    start = tuple(
        _canonical_signed((v.rank, v.c1.a, v.c1.b, v.chi))
        for v in col.classes
    )
    if start == target:
        return GroupWord()

    counter = 0
    heap = [(height(start), counter, start, ())]
    seen = {start}
    expanded = 0
    while heap and expanded < max_nodes:
        _, _, state, path = heapq.heappop(heap)
        expanded += 1
        if len(path) >= max_depth:
            continue
        for move in _MOVES:
            nxt = _apply_move(state, move)
            if nxt in seen:
                continue
            new_path = path + (move,)
            if nxt == target:
                return GroupWord(tuple(
                    sigma(i, inv) for i, inv in new_path
                ))
            seen.add(nxt)
            counter += 1
            heapq.heappush(
                heap,
                (len(new_path) + height(nxt), counter, nxt, new_path),
            )
    return None


# ---------------------------------------------------------------------------
# Symbolic objects: twist word applied to a bundle class, up to shift


@dataclass(frozen=True)
class SymbolicObject:
    """A class presented as (twist word)(base)[shift]."""

    base: KClass
    word: TwistWord
    shift: int = 0

    def realized_class(self) -> KClass:
        v = apply_word(self.word, self.base)
        return -v if self.shift % 2 else v


def random_full_collection(rng, word_length: int = 8) -> tuple[NumCollection, GroupWord]:
    """Scramble the standard collection by a random group word.

    Returns the collection together with the word that produced it, which
    certifies that a reduction of at most the same braid length exists.
    """
    letters = []
    for _ in range(rng.randint(0, word_length)):
        if rng.random() < 0.2:
            letters.append(flip(rng.randint(1, 4)))
        else:
            letters.append(sigma(rng.randint(1, 3), rng.random() < 0.5))
    g = GroupWord(tuple(letters))
    return apply_group_word(standard_collection(SIGMA2), g), g
