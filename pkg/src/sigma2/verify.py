"""Machine-checkable property suites covering every identity the library
claims, bundled behind a single ``run_verify`` entry point.

Each suite draws from its own deterministically seeded generator, so a
report is reproducible byte for byte from (suites, seed, bounds); wall-clock
fields are excluded from the canonical serialization for exactly that
reason.  Suite names:

  lattice          bilinearity, duality, tensor isometries, Riemann-Roch
  oracle           pushforward cohomology vs Riemann-Roch, Serre duality
  twist            reflection relations and normalizer soundness
  mutation         braid relations, deformation isometry, class scan
  transitivity     scrambled standard collections reduce back within depth
  example-counter  the twisted pair whose second class is forced onto a
                   line bundle with a nonzero backwards obstruction
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from random import Random
from typing import Any, Callable, Optional

from . import intmat
from .cohomology import hom_dims_line_bundles, line_bundle_cohomology
from .lattice import (
    KClass,
    QUADRIC,
    SIGMA2,
    class_of_line_bundle,
    class_of_OC,
    dual_class,
    euler_pairing,
    intersect,
    pic,
    riemann_roch_chi,
    serre_pair_check,
    tensor_line_bundle,
)
from .mutations import (
    GroupWord,
    NumCollection,
    apply_group_word,
    enumerate_exceptional_classes,
    gen_isometry,
    gen_isometry_inverse,
    left_mutation,
    random_full_collection,
    reduce_to_standard,
    restriction_profile,
    right_mutation,
    sigma,
    standard_collection,
)
from .twists import (
    TwistWord,
    dual_conjugate,
    dual_matrix,
    is_k0_trivial,
    normalize,
    shift,
    tensor_oc,
    twist,
    twist_on_class,
    word,
    word_matrix,
)


@dataclass(frozen=True)
class VerifyBounds:
    """Search and sample sizes; the defaults finish in well under a minute
    apart from the transitivity suite, which is budgeted separately."""

    divisor_bound: int = 20
    sample_count: int = 200
    coeff_bound: int = 25
    twist_index_bound: int = 10
    tensor_bound: int = 3
    normalizer_words: int = 1000
    normalizer_len: int = 12
    normalizer_index: int = 5
    collection_count: int = 1000
    collection_word_len: int = 8
    transitivity_instances: int = 200
    transitivity_word_len: int = 8
    transitivity_depth: int = 16
    scan_rank: int = 6
    scan_c1: int = 6
    scan_chi: int = 40

    def as_dict(self) -> dict[str, int]:
        return {k: getattr(self, k) for k in self.__dataclass_fields__}


@dataclass
class CheckFailure:
    case: str
    inputs: str
    lhs: str
    rhs: str

    def as_dict(self) -> dict[str, str]:
        return {"case": self.case, "inputs": self.inputs,
                "lhs": self.lhs, "rhs": self.rhs}


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failures: list[CheckFailure] = field(default_factory=list)
    wall_time_s: float = 0.0
    metrics: dict[str, Any] = field(default_factory=dict)

    def check(self, case: str, lhs, rhs, inputs="") -> None:
        self.cases += 1
        if lhs != rhs:
            self.failures.append(
                CheckFailure(case, repr(inputs), repr(lhs), repr(rhs))
            )

    def check_true(self, case: str, value: bool, inputs="") -> None:
        self.check(case, bool(value), True, inputs)

    def as_dict(self, include_timing: bool = True) -> dict[str, Any]:
        out: dict[str, Any] = {
            "name": self.name,
            "cases": self.cases,
            "failures": [f.as_dict() for f in self.failures],
            "metrics": self.metrics,
        }
        if include_timing:
            out["wall_time_s"] = round(self.wall_time_s, 6)
        return out


@dataclass
class VerifyReport:
    seed: int
    bounds: VerifyBounds
    suites: list[SuiteResult]

    @property
    def total_cases(self) -> int:
        return sum(s.cases for s in self.suites)

    @property
    def total_failures(self) -> int:
        return sum(len(s.failures) for s in self.suites)

    def as_dict(self, include_timing: bool = True) -> dict[str, Any]:
        return {
            "seed": self.seed,
            "bounds": self.bounds.as_dict(),
            "suites": [s.as_dict(include_timing) for s in self.suites],
            "total_cases": self.total_cases,
            "total_failures": self.total_failures,
        }

    def to_json(self, include_timing: bool = True) -> str:
        return json.dumps(self.as_dict(include_timing), indent=2, sort_keys=True)

    def canonical_json(self) -> str:
        """Byte-reproducible serialization: timing fields removed."""
        return self.to_json(include_timing=False)


def _random_kclass(rng: Random, surface, bound: int) -> KClass:
    return KClass(
        surface,
        rng.randint(-bound, bound),
        pic(surface, rng.randint(-bound, bound), rng.randint(-bound, bound)),
        rng.randint(-bound, bound),
    )


def _random_twist_word(rng: Random, length: int, index_bound: int) -> TwistWord:
    gens = []
    for _ in range(length):
        roll = rng.random()
        if roll < 0.6:
            gens.append(twist(rng.randint(-index_bound, index_bound),
                              1 if rng.random() < 0.5 else -1))
        elif roll < 0.85:
            gens.append(tensor_oc(rng.randint(-2, 2)))
        else:
            gens.append(shift(rng.randint(-2, 2)))
    return TwistWord(tuple(gens))


# ---------------------------------------------------------------------------
# suites


def _suite_lattice(rng: Random, b: VerifyBounds, out: SuiteResult) -> None:
    for n in range(b.sample_count):
        surface = SIGMA2 if n % 2 == 0 else QUADRIC
        u = _random_kclass(rng, surface, b.coeff_bound)
        v = _random_kclass(rng, surface, b.coeff_bound)
        w = _random_kclass(rng, surface, b.coeff_bound)
        d = pic(surface, rng.randint(-5, 5), rng.randint(-5, 5))
        out.check("bilinear-left", euler_pairing(u + v, w),
                  euler_pairing(u, w) + euler_pairing(v, w), (u, v, w))
        out.check("bilinear-right", euler_pairing(u, v + w),
                  euler_pairing(u, v) + euler_pairing(u, w), (u, v, w))
        out.check("dual-isometry", euler_pairing(dual_class(w), dual_class(v)),
                  euler_pairing(v, w), (v, w))
        out.check("dual-involution", dual_class(dual_class(v)), v, v)
        out.check("tensor-isometry",
                  euler_pairing(tensor_line_bundle(v, d), tensor_line_bundle(w, d)),
                  euler_pairing(v, w), (v, w, d))
        out.check_true("serre-pairing", serre_pair_check(v, w), (v, w))

    n = b.divisor_bound
    for a in range(-n, n + 1):
        for c in range(-n, n + 1):
            d = pic(SIGMA2, a, c)
            out.check("riemann-roch-vs-oracle",
                      riemann_roch_chi(d), line_bundle_cohomology(d).chi, d)

    for a in range(-6, 7):
        for c in range(-6, 7):
            out.check("spherical-pairing",
                      euler_pairing(class_of_OC(a), class_of_OC(c)), 2, (a, c))
        out.check("spherical-tensor",
                  tensor_line_bundle(class_of_OC(a), pic(SIGMA2, 1, 0)),
                  class_of_OC(a - 2), a)
        lhs = class_of_OC(a)
        rhs = (class_of_line_bundle(pic(SIGMA2, 0, a))
               - class_of_line_bundle(pic(SIGMA2, -1, a)))
        out.check("spherical-resolution", lhs, rhs, a)


def _suite_oracle(rng: Random, b: VerifyBounds, out: SuiteResult) -> None:
    n = b.divisor_bound
    for surface in (SIGMA2, QUADRIC):
        for a in range(-n, n + 1):
            for c in range(-n, n + 1):
                d = pic(surface, a, c)
                dims = line_bundle_cohomology(d)
                out.check("chi-vs-riemann-roch", dims.chi, riemann_roch_chi(d), d)
                dual = line_bundle_cohomology(surface.canonical_class - d)
                out.check("serre-duality-dims", dims.astuple(),
                          (dual.h2, dual.h1, dual.h0), d)

    for surface in (SIGMA2, QUADRIC):
        std = standard_collection(surface).classes
        for j in range(4):
            for i in range(j):
                dims = hom_dims_line_bundles(std[j].c1, std[i].c1)
                out.check("standard-semiorthogonal", dims.astuple(), (0, 0, 0),
                          (surface.kind, j + 1, i + 1))


def _suite_twist(rng: Random, b: VerifyBounds, out: SuiteResult) -> None:
    ident = intmat.identity(4)
    for a in range(-b.twist_index_bound, b.twist_index_bound + 1):
        out.check("square-trivial",
                  word_matrix(word(twist(a), twist(a))), ident, a)
        out.check("inverse-pair",
                  word_matrix(word(twist(a), twist(a, -1))), ident, a)
        out.check("adjacent-product-is-tensor",
                  word_matrix(word(twist(a), twist(a + 1))),
                  word_matrix(word(tensor_oc(1))), a)
    for a in range(-6, 7):
        out.check("inverse-expansion",
                  word_matrix(word(twist(a, -1))),
                  word_matrix(word(twist(a + 1), tensor_oc(-1))), a)
        for m in range(-b.tensor_bound, b.tensor_bound + 1):
            out.check("tensor-conjugation",
                      word_matrix(word(tensor_oc(m), twist(a))),
                      word_matrix(word(twist(a - 2 * m), tensor_oc(m))), (a, m))

    trivial_seen = 0
    for _ in range(b.normalizer_words):
        w = _random_twist_word(rng, rng.randint(0, b.normalizer_len),
                               b.normalizer_index)
        nf = normalize(w)
        out.check("normalizer-matrix",
                  word_matrix(nf.to_word()), word_matrix(w),
                  [str(g.kind) + str(g.arg) for g in w.gens])
        out.check("normalizer-parity",
                  nf.has_odd_twist, w.twist_count() % 2 == 1, w.twist_count())
        out.check("normalizer-shift-parity",
                  nf.shift_parity, w.total_shift() % 2, w.total_shift())
        if is_k0_trivial(w):
            trivial_seen += 1
            out.check("trivial-has-no-tensor", nf.tensor_exp, 0)
            out.check("trivial-has-no-anchor", nf.has_odd_twist, False)
    out.metrics["k0_trivial_words_seen"] = trivial_seen

    d = dual_matrix()
    for a in range(-4, 5):
        nf = normalize(word(twist(a), twist(a)))
        out.check("square-normalizes-trivially",
                  (nf.tensor_exp, nf.has_odd_twist), (0, False), a)
        w = word(twist(a))
        out.check("dual-conjugation", word_matrix(dual_conjugate(w)),
                  intmat.matmul(d, intmat.matmul(word_matrix(w), d)), a)


def _suite_mutation(rng: Random, b: VerifyBounds, out: SuiteResult) -> None:
    std = standard_collection(SIGMA2)
    out.check("standard-gram", std.gram(),
              ((1, 2, 4, 6), (0, 1, 2, 4), (0, 0, 1, 2), (0, 0, 0, 1)))
    out.check("standard-gram-quadric", standard_collection(QUADRIC).gram(),
              std.gram())
    out.check_true("standard-full", std.is_full())

    for n in range(b.collection_count):
        col, _ = random_full_collection(rng, b.collection_word_len)
        i = rng.randint(1, 3)
        out.check("left-right-inverse",
                  left_mutation(right_mutation(col, i), i).classes,
                  col.classes, (n, i))
        if i <= 2:
            lhs = apply_group_word(col, GroupWord((sigma(i), sigma(i + 1), sigma(i))))
            rhs = apply_group_word(col, GroupWord((sigma(i + 1), sigma(i), sigma(i + 1))))
            out.check("braid-relation", lhs.classes, rhs.classes, (n, i))
        lhs = apply_group_word(col, GroupWord((sigma(1), sigma(3))))
        rhs = apply_group_word(col, GroupWord((sigma(3), sigma(1))))
        out.check("far-commutation", lhs.classes, rhs.classes, n)
        out.check_true("mutation-preserves-fullness",
                       right_mutation(col, i).is_full(), (n, i))

    # shifts and mutations interleave through the slot permutation
    from .mutations import flip as _flip

    for n in range(min(b.collection_count, 200)):
        col, _ = random_full_collection(rng, b.collection_word_len)
        i = rng.randint(1, 3)
        j = rng.randint(1, 4)
        tau = {i: i + 1, i + 1: i}.get(j, j)
        lhs = apply_group_word(col, GroupWord((_flip(j), sigma(i))))
        rhs = apply_group_word(col, GroupWord((sigma(i), _flip(tau))))
        out.check("flip-mutation-exchange", lhs.classes, rhs.classes, (n, i, j))

    for n in range(b.collection_count):
        u = _random_kclass(rng, SIGMA2, b.coeff_bound)
        v = _random_kclass(rng, SIGMA2, b.coeff_bound)
        out.check("gen-preserves-pairing",
                  euler_pairing(gen_isometry(u), gen_isometry(v)),
                  euler_pairing(u, v), (u, v))
        out.check("gen-round-trip", gen_isometry_inverse(gen_isometry(u)), u, u)

    gen_std = NumCollection(tuple(gen_isometry(v) for v in std.classes))
    out.check("gen-maps-standard", gen_std.classes,
              standard_collection(QUADRIC).classes)

    # step-3 braid words realize the two basic twists, up to slotwise sign
    twisted0 = tuple(twist_on_class(0, 1, v) for v in std.classes)
    braided0 = apply_group_word(
        std, GroupWord((sigma(1), sigma(2), sigma(1, True)))
    ).classes
    out.check("braid-word-vs-twist0",
              tuple(_up_to_sign(x, y) for x, y in zip(braided0, twisted0)),
              (True,) * 4)
    twisted1 = tuple(twist_on_class(-1, 1, v) for v in std.classes)
    braided1 = apply_group_word(
        std, GroupWord((sigma(3, True), sigma(2), sigma(3)))
    ).classes
    out.check("braid-word-vs-twist-1",
              tuple(_up_to_sign(x, y) for x, y in zip(braided1, twisted1)),
              (True,) * 4)
    displayed = tuple(
        class_of_line_bundle(pic(SIGMA2, a, c))
        for a, c in ((0, 0), (1, 1), (1, 2), (2, 3))
    )
    out.check("twist-1-displayed-classes", twisted1, displayed)

    # right and left mutations meeting the twist of the structure sheaf
    o = class_of_line_bundle(pic(SIGMA2, 0, 0))
    o_minus_c = class_of_line_bundle(pic(SIGMA2, -1, 0))
    t0_o = twist_on_class(0, 1, o)
    out.check("right-mutation-is-twist",
              o_minus_c - euler_pairing(o_minus_c, o) * o, t0_o)
    of = class_of_line_bundle(pic(SIGMA2, 0, 1))
    oc2f = class_of_line_bundle(pic(SIGMA2, 1, 2))
    left = oc2f - euler_pairing(of, oc2f) * of
    out.check_true("left-mutation-is-twist-up-to-sign",
                   left == t0_o or left == -t0_o)

    scan = enumerate_exceptional_classes(SIGMA2, b.scan_rank, b.scan_c1, b.scan_chi)
    out.check("scan-no-rank-zero", len(scan.rank_zero), 0)
    out.metrics["exceptional_classes_found"] = len(scan.classes)
    for v in scan.classes:
        if v.rank > 0:
            p = restriction_profile(v)
            out.check("restriction-profile-degree",
                      v.rank * p.b + (v.rank - p.s),
                      intersect(v.c1, pic(SIGMA2, 1, 0)), v)


def _up_to_sign(x: KClass, y: KClass) -> bool:
    return x == y or x == -y


def _suite_transitivity(rng: Random, b: VerifyBounds, out: SuiteResult) -> None:
    depths: list[int] = []
    for n in range(b.transitivity_instances):
        col, g = random_full_collection(rng, b.transitivity_word_len)
        found = reduce_to_standard(col, max_depth=b.transitivity_depth)
        out.check_true("reduction-found", found is not None, (n, str(g)))
        if found is None:
            continue
        back = apply_group_word(col, found)
        std = standard_collection(SIGMA2)
        out.check("reduction-lands-on-standard",
                  tuple(_up_to_sign(x, y)
                        for x, y in zip(back.classes, std.classes)),
                  (True,) * 4, (n, str(found)))
        depths.append(len(found))
    out.metrics["word_lengths"] = depths


def _suite_example_counter(rng: Random, b: VerifyBounds, out: SuiteResult) -> None:
    o = class_of_line_bundle(pic(SIGMA2, 0, 0))
    start = class_of_line_bundle(pic(SIGMA2, 1, 4))
    e1 = twist_on_class(-1, 1, o)
    e2 = twist_on_class(-1, 1, start)
    out.check("first-class-fixed", e1, o)
    out.check("second-class-is-line-bundle", e2,
              class_of_line_bundle(pic(SIGMA2, 3, 4)))
    k = SIGMA2.canonical_class
    obstruction = line_bundle_cohomology(k + pic(SIGMA2, 3, 4))
    out.check("serre-dual-is-the-section", k + pic(SIGMA2, 3, 4), pic(SIGMA2, 1, 0))
    out.check("obstruction-h0", obstruction.h0, 1)
    out.check("backwards-ext2",
              hom_dims_line_bundles(pic(SIGMA2, 3, 4), pic(SIGMA2, 0, 0)).h2, 1)
    out.check("pair-is-semiorthogonal", euler_pairing(e2, e1), 0)


_SUITES: dict[str, Callable[[Random, VerifyBounds, SuiteResult], None]] = {
    "lattice": _suite_lattice,
    "oracle": _suite_oracle,
    "twist": _suite_twist,
    "mutation": _suite_mutation,
    "transitivity": _suite_transitivity,
    "example-counter": _suite_example_counter,
}

ALL_SUITES = tuple(sorted(_SUITES))


def run_verify(
    suites: Optional[list[str]] = None,
    seed: int = 0,
    bounds: Optional[VerifyBounds] = None,
) -> VerifyReport:
    """Run the named suites (all of them when None) with one shared seed."""
    if suites is None:
        names = list(ALL_SUITES)
    else:
        unknown = sorted(set(suites) - set(_SUITES))
        if unknown:
            raise ValueError(f"unknown suites: {unknown}")
        names = sorted(set(suites))
    bounds = bounds or VerifyBounds()

    results = []
    for name in names:
        result = SuiteResult(name)
        rng = Random(f"{seed}:{name}")
        started = time.perf_counter()
        _SUITES[name](rng, bounds, result)
        result.wall_time_s = time.perf_counter() - started
        results.append(result)
    return VerifyReport(seed=seed, bounds=bounds, suites=results)
