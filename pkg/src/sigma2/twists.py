"""Words in spherical twists and their reflections on the K-theory lattice.

The group of interest is generated by the twists T_a along the 2-spherical
classes [O_C(a)], tensoring by O(m*C), and homological shifts.  On K-theory
a twist acts as the reflection v |-> v - chi(alpha, v) * alpha; because
K.C = 0 the pairing against alpha is symmetric, so T_a and its inverse share
one reflection matrix, and every square T_a^2 acts trivially.

Three exact relations drive the word rewriting:

  * T_a . T_{a+1}        =  (O(C) tensor -)
  * (O(mC) tensor -).T_a =  T_{a-2m} . (O(mC) tensor -)
  * T_a^{-1}             =  T_{a+1} . (O(-C) tensor -)

Together they reduce any word to the canonical shape

    (O(mC) tensor -) . [T_0] . T_{a_n}^{+-2} ... T_{a_1}^{+-2}

with the anchor twist T_0 present exactly when the word contains an odd
number of twist letters.  Equality of words is certified at the level of the
induced 4x4 integer matrices (plus the shift parity); the rewriting system is
sound for that certificate and makes no completeness claim about the group
presentation itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import intmat
from .lattice import (
    KClass,
    SIGMA2,
    class_of_line_bundle,
    class_of_OC,
    dual_class,
    euler_pairing,
    pic,
    tensor_line_bundle,
)

TWIST = "T"
TENSOR_OC = "OC"
SHIFT = "Sh"


@dataclass(frozen=True, slots=True)
class TwistGenerator:
    """A single letter: twist T_a^{sign}, tensor by O(m*C), or shift [n]."""

    kind: str
    arg: int
    sign: int = 1

    def __post_init__(self) -> None:
        if self.kind not in (TWIST, TENSOR_OC, SHIFT):
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.kind == TWIST and self.sign not in (1, -1):
            raise ValueError("twist sign must be +1 or -1")
        if self.kind != TWIST and self.sign != 1:
            raise ValueError("only twists carry a sign")

    def inverse(self) -> TwistGenerator:
        if self.kind == TWIST:
            return TwistGenerator(TWIST, self.arg, -self.sign)
        return TwistGenerator(self.kind, -self.arg)


def twist(a: int, sign: int = 1) -> TwistGenerator:
    return TwistGenerator(TWIST, a, sign)


def tensor_oc(m: int) -> TwistGenerator:
    return TwistGenerator(TENSOR_OC, m)


def shift(n: int) -> TwistGenerator:
    return TwistGenerator(SHIFT, n)


@dataclass(frozen=True)
class TwistWord:
    """Composition of generators; gens[0] is applied last (outermost)."""

    gens: tuple[TwistGenerator, ...] = ()

    def __mul__(self, other: TwistWord) -> TwistWord:
        return TwistWord(self.gens + other.gens)

    def __len__(self) -> int:
        return len(self.gens)

    def inverse(self) -> TwistWord:
        return TwistWord(tuple(g.inverse() for g in reversed(self.gens)))

    def twist_count(self) -> int:
        return sum(1 for g in self.gens if g.kind == TWIST)

    def total_shift(self) -> int:
        return sum(g.arg for g in self.gens if g.kind == SHIFT)


def word(*gens: TwistGenerator) -> TwistWord:
    return TwistWord(tuple(gens))


def apply_generator(g: TwistGenerator, v: KClass) -> KClass:
    if v.surface is not SIGMA2:
        raise ValueError("twist words act on classes over sigma2 only")
    if g.kind == TWIST:
        alpha = class_of_OC(g.arg)
        # chi(alpha, -) = chi(-, alpha) since K.C = 0; inverse twists act by
        # the same reflection on K-theory.
        return v - euler_pairing(alpha, v) * alpha
    if g.kind == TENSOR_OC:
        return tensor_line_bundle(v, pic(SIGMA2, g.arg, 0))
    return v if g.arg % 2 == 0 else -v


def twist_on_class(a: int, sign: int, v: KClass) -> KClass:
    """Reflection of v induced by T_a (sign=+1) or its inverse (sign=-1)."""
    if sign == 1:
        alpha = class_of_OC(a)
        return v - euler_pairing(alpha, v) * alpha
    if sign == -1:
        alpha = class_of_OC(a)
        return v - euler_pairing(v, alpha) * alpha
    raise ValueError("sign must be +1 or -1")


def apply_word(w: TwistWord, v: KClass) -> KClass:
    for g in reversed(w.gens):
        v = apply_generator(g, v)
    return v


def standard_basis() -> tuple[KClass, ...]:
    """The four line-bundle classes O, O(f), O(C+2f), O(C+3f)."""
    return tuple(
        class_of_line_bundle(pic(SIGMA2, a, b))
        for a, b in ((0, 0), (0, 1), (1, 2), (1, 3))
    )


def _coords_matrix(classes: Iterable[KClass]) -> intmat.Mat:
    # columns are (rank, c1.a, c1.b, chi)
    cols = [(v.rank, v.c1.a, v.c1.b, v.chi) for v in classes]
    return tuple(tuple(col[i] for col in cols) for i in range(4))


_STD_MAT = _coords_matrix(standard_basis())
_STD_INV = intmat.unimodular_inverse(_STD_MAT)


def class_coordinates(v: KClass) -> tuple[int, ...]:
    """Integer coordinates of v in the standard basis."""
    raw = (v.rank, v.c1.a, v.c1.b, v.chi)
    return intmat.matvec(_STD_INV, raw)


def class_from_coordinates(x: tuple[int, ...]) -> KClass:
    r, a, b, chi = intmat.matvec(_STD_MAT, tuple(x))
    return KClass(SIGMA2, r, pic(SIGMA2, a, b), chi)


def word_matrix(w: TwistWord) -> intmat.Mat:
    """4x4 integer matrix of the word in the standard basis.

    Functorial: word_matrix(u * v) == word_matrix(u) . word_matrix(v).
    """
    cols = [class_coordinates(apply_word(w, e)) for e in standard_basis()]
    return tuple(tuple(col[i] for col in cols) for i in range(4))


def dual_matrix() -> intmat.Mat:
    cols = [class_coordinates(dual_class(e)) for e in standard_basis()]
    return tuple(tuple(col[i] for col in cols) for i in range(4))


def is_k0_trivial(w: TwistWord) -> bool:
    """True when the word acts as the identity on the lattice."""
    return intmat.is_identity(word_matrix(w))


def dual_conjugate(w: TwistWord) -> TwistWord:
    """Conjugate of the word by the derived dual.

    Letterwise: T_a^{s} -> T_{-2-a}^{-s}, O(mC) -> O(-mC), [n] -> [-n].
    The matrix contract is word_matrix(dual_conjugate(w)) = D . M . D where
    D is the matrix of the dual involution.
    """
    out = []
    for g in w.gens:
        if g.kind == TWIST:
            out.append(twist(-2 - g.arg, -g.sign))
        else:
            out.append(TwistGenerator(g.kind, -g.arg))
    return TwistWord(tuple(out))


def rewrite_pair(a: int, b: int) -> TwistWord:
    """Express T_a . T_b as tensors by O(mC) and squares of twists.

    The recursion mirrors the group identities: for a < b

        T_a T_b = (T_a T_{a+1}) (T_{a+1}^{-1})^2 (T_{a+1} T_b)

    with T_a T_{a+1} = O(C) tensor -, and for a > b

        T_a T_b = T_a^2 (T_b T_a)^{-1} T_b^2.

    Twist letters in the output always come in adjacent equal pairs.
    """
    if a == b:
        return word(twist(a), twist(a))
    if b == a + 1:
        return word(tensor_oc(1))
    if a < b:
        head = word(tensor_oc(1), twist(a + 1, -1), twist(a + 1, -1))
        return head * rewrite_pair(a + 1, b)
    middle = rewrite_pair(b, a).inverse()
    return word(twist(a), twist(a)) * middle * word(twist(b), twist(b))


@dataclass(frozen=True)
class NormalForm:
    """Canonical shape (O(mC) tensor -) . [T_0] . squares, plus shift parity.

    ``squares`` lists (index, exponent) with exponent +-2; ``shift_parity``
    records the total homological shift mod 2, which is all that survives on
    the lattice.
    """

    tensor_exp: int
    has_odd_twist: bool
    squares: tuple[tuple[int, int], ...] = ()
    shift_parity: int = 0
    odd_anchor: int = 0

    def to_word(self) -> TwistWord:
        gens: list[TwistGenerator] = []
        if self.tensor_exp:
            gens.append(tensor_oc(self.tensor_exp))
        if self.has_odd_twist:
            gens.append(twist(self.odd_anchor))
        for a, exp in self.squares:
            s = 1 if exp > 0 else -1
            gens.extend((twist(a, s), twist(a, s)))
        if self.shift_parity:
            gens.append(shift(self.shift_parity))
        return TwistWord(tuple(gens))


def _positive_twist_form(gens: Iterable[TwistGenerator]) -> list[TwistGenerator]:
    # Remove inverse twists via T_a^{-1} = T_{a+1} . (O(-C) tensor -).
    out: list[TwistGenerator] = []
    for g in gens:
        if g.kind == TWIST and g.sign == -1:
            out.append(twist(g.arg + 1))
            out.append(tensor_oc(-1))
        else:
            out.append(g)
    return out


def _sweep_tensors(gens: list[TwistGenerator]) -> tuple[int, list[tuple[int, int]]]:
    # Commute every tensor letter to the front.  A tensor O(mC) moving left
    # past a twist raises that twist index by 2m, so scanning from the right
    # each twist picks up twice the tensor exponent already passed.
    passed = 0
    twists: list[tuple[int, int]] = []
    for g in reversed(gens):
        if g.kind == TENSOR_OC:
            passed += g.arg
        elif g.kind == TWIST:
            twists.append((g.arg + 2 * passed, g.sign))
        else:
            raise AssertionError("shift letters must be stripped first")
    twists.reverse()
    return passed, twists


def _pair_reduce(twists: list[tuple[int, int]]) -> tuple[int, list[tuple[int, int]]]:
    # Collapse an even run of positive twists into tensors and squares,
    # working from the right end of the word.
    assert all(s == 1 for _, s in twists)
    bs = [a for a, _ in twists]
    squares: list[tuple[int, int]] = []
    m_total = 0
    while len(bs) >= 2:
        y = bs.pop()
        x = bs.pop()
        m, tws = _sweep_tensors(list(rewrite_pair(x, y).gens))
        sq = []
        for i in range(0, len(tws), 2):
            assert tws[i] == tws[i + 1], "rewrite produced a split pair"
            sq.append((tws[i][0], 2 * tws[i][1]))
        squares = sq + squares
        bs = [b + 2 * m for b in bs]
        m_total += m
    return m_total, squares


def _squares_as_gens(squares: list[tuple[int, int]]) -> list[TwistGenerator]:
    gens = []
    for a, exp in squares:
        s = 1 if exp > 0 else -1
        gens.extend((twist(a, s), twist(a, s)))
    return gens


def normalize(w: TwistWord) -> NormalForm:
    """Rewrite a word into the canonical tensor / anchor / squares shape.

    Soundness contract: the word rebuilt by :meth:`NormalForm.to_word` has
    exactly the same matrix as ``w``, and ``has_odd_twist`` equals the parity
    of the number of twist letters in ``w``.
    """
    parity = w.total_shift() % 2
    core = [g for g in w.gens if g.kind != SHIFT]
    gens = _positive_twist_form(core)

    m0, twists = _sweep_tensors(gens)
    if len(twists) % 2 == 0:
        m1, squares = _pair_reduce(twists)
        return NormalForm(m0 + m1, False, tuple(squares), parity)

    # Odd twist count: reduce w . T_0^{-1} to tensor . squares, so that
    # w = tensor . Q . T_0, then pull T_0 leftwards across Q by rewriting
    # the conjugate T_0^{-1} . Q . T_0, which is trivial on the lattice and
    # therefore reduces with tensor exponent zero.
    gens_u = gens + [twist(1), tensor_oc(-1)]
    m0u, twists_u = _sweep_tensors(gens_u)
    m1u, q = _pair_reduce(twists_u)
    m_front = m0u + m1u

    conj = _positive_twist_form(
        [twist(0, -1)] + _squares_as_gens(q) + [twist(0)]
    )
    mv, twists_v = _sweep_tensors(conj)
    mv2, squares = _pair_reduce(twists_v)
    assert mv + mv2 == 0, "conjugate of a trivial word kept a tensor factor"
    return NormalForm(m_front, True, tuple(squares), parity)
