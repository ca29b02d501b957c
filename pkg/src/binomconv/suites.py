"""Verification suites: named cases over the bijection, the summation
identities, and the series identities.

Each case computes an (expected, actual) string pair; sweeping cases
summarize a whole family and report the first few counterexamples in
the actual string, so a failure is directly actionable.  Case lists are
deterministic functions of their bounds and seed, and cases are
independent, so they may run in any order or in parallel.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Iterable

from . import bijection, configuration, identities, series
from .exactnum import Polynomial

OK = "all hold"
MAX_REPORTED_FAILURES = 4

BIJECTION_LENGTH_LIMIT = 10


@dataclass(frozen=True)
class Case:
    """One named check: run() returns the (expected, actual) pair."""

    id: str
    inputs: dict[str, str]
    run: Callable[[], tuple[str, str]]


@dataclass(frozen=True)
class CaseResult:
    id: str
    inputs: dict[str, str]
    expected: str
    actual: str
    passed: bool


@dataclass(frozen=True)
class Report:
    suite: str
    cases: tuple[CaseResult, ...]
    wall_time: float

    @property
    def totals(self) -> dict[str, int]:
        passed = sum(1 for c in self.cases if c.passed)
        return {"pass": passed, "fail": len(self.cases) - passed}

    @property
    def all_passed(self) -> bool:
        return self.totals["fail"] == 0

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "cases": [
                {
                    "id": c.id,
                    "inputs": c.inputs,
                    "expected": c.expected,
                    "actual": c.actual,
                    "pass": c.passed,
                }
                for c in self.cases
            ],
            "totals": self.totals,
            "wall_time": self.wall_time,
        }

    def to_text(self) -> str:
        lines = []
        for c in self.cases:
            mark = "PASS" if c.passed else "FAIL"
            lines.append(f"{mark} {c.id}")
            if not c.passed:
                lines.append(f"     inputs:   {c.inputs}")
                lines.append(f"     expected: {c.expected}")
                lines.append(f"     actual:   {c.actual}")
        totals = self.totals
        lines.append(
            f"{self.suite}: {totals['pass']} passed, {totals['fail']} failed "
            f"in {self.wall_time:.2f}s"
        )
        return "\n".join(lines)


def run_cases(suite: str, cases: Iterable[Case], jobs: int = 1) -> Report:
    """Execute cases (optionally in a thread pool) into a Report whose
    order matches the case list regardless of scheduling."""
    cases = list(cases)
    start = time.perf_counter()
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(lambda c: c.run(), cases))
    else:
        outcomes = [c.run() for c in cases]
    wall = time.perf_counter() - start
    results = tuple(
        CaseResult(
            id=case.id,
            inputs=case.inputs,
            expected=expected,
            actual=actual,
            passed=expected == actual,
        )
        for case, (expected, actual) in zip(cases, outcomes)
    )
    return Report(suite=suite, cases=results, wall_time=wall)


def _summarize(failures: list[str]) -> tuple[str, str]:
    if not failures:
        return OK, OK
    shown = "; ".join(failures[:MAX_REPORTED_FAILURES])
    if len(failures) > MAX_REPORTED_FAILURES:
        shown += f"; and {len(failures) - MAX_REPORTED_FAILURES} more"
    return OK, shown


def _exact_case(case_id: str, inputs: dict[str, str], expected: str,
                compute: Callable[[], str]) -> Case:
    return Case(case_id, inputs, lambda: (expected, compute()))


def _family_case(case_id: str, inputs: dict[str, str],
                 collect: Callable[[], list[str]]) -> Case:
    return Case(case_id, inputs, lambda: _summarize(collect()))


# ---------------------------------------------------------------- bijection


def ordered_count(n: int) -> int:
    """The size of the ordered family: sum of products of central
    binomial pairs."""
    return sum(comb(2 * i, i) * comb(2 * (n - i), n - i) for i in range(n + 1))


def exhaustive_bijection_failures(n: int) -> list[str]:
    """Sweep both directions of the bijection at one length.

    Checks: the forward map lands in the tower-free family, is
    injective, hits all 4^n elements, round-trips both ways, turns each
    tower into exactly one descent, and fixes tower-free inputs.
    """
    failures: list[str] = []
    images = set()
    count = 0
    for config in configuration.enumerate_ordered(n):
        count += 1
        profile = configuration.analyze(config)
        image = bijection.phi(config)
        image_profile = configuration.analyze(image)
        if not image_profile.tower_free or len(image) != n:
            failures.append(f"phi({config}) = {image} is not tower-free of length {n}")
            continue
        if len(image_profile.descents) != len(profile.towers):
            failures.append(
                f"phi({config}) = {image} has {len(image_profile.descents)} descents "
                f"for {len(profile.towers)} towers"
            )
        if profile.tower_free and image != config:
            failures.append(f"tower-free {config} mapped to {image}")
        back = bijection.phi_inverse(image)
        if back != config:
            failures.append(f"phi_inverse(phi({config})) = {back}")
        images.add(image)
    if count != ordered_count(n):
        failures.append(
            f"enumerated {count} ordered configurations, expected {ordered_count(n)}"
        )
    if len(images) != count:
        failures.append(f"phi is not injective: {len(images)} images from {count} inputs")
    if len(images) != 4**n:
        failures.append(f"image has {len(images)} elements, expected {4**n}")
    for image in configuration.enumerate_tower_free(n):
        preimage = bijection.phi_inverse(image)
        if bijection.phi(preimage) != image:
            failures.append(f"phi(phi_inverse({image})) != {image}")
    return failures


GOLDEN_FORWARD = (".A11.b2B2..", "BbAbabBaAbA")
GOLDEN_CHAIN = (".A11.b2B2..", ".11.22.. -> aA2. -> B")
GOLDEN_INVERSE = (
    ("ba", "1."),
    ("BAbA", "11.."),
    ("aBBAaaBbABBBb", "a1A1aa.A.BBBb"),
)
GOLDEN_FIXED_POINT = "AB"


def _chain_string(compact: str) -> str:
    config = configuration.parse_compact(compact)
    skeleton = bijection.even_skeleton(config)
    steps = [str(skeleton)]
    current = bijection.compress(skeleton)
    steps.append(str(current))
    while len(current) > 1:
        current = bijection.tower_configuration(current)
        steps.append(str(current))
    return " -> ".join(steps)


def bijection_suite(n_max: int = 8) -> list[Case]:
    if not 0 <= n_max <= BIJECTION_LENGTH_LIMIT:
        raise ValueError(
            f"bijection sweeps are bounded at length {BIJECTION_LENGTH_LIMIT}"
        )
    cases = [
        _exact_case(
            "bijection/golden/forward",
            {"config": GOLDEN_FORWARD[0]},
            GOLDEN_FORWARD[1],
            lambda: str(bijection.phi(configuration.parse_compact(GOLDEN_FORWARD[0]))),
        ),
        _exact_case(
            "bijection/golden/skeleton-chain",
            {"config": GOLDEN_CHAIN[0]},
            GOLDEN_CHAIN[1],
            lambda: _chain_string(GOLDEN_CHAIN[0]),
        ),
    ]
    for image, preimage in GOLDEN_INVERSE:
        cases.append(
            _exact_case(
                f"bijection/golden/inverse-{image}",
                {"config": image},
                preimage,
                lambda image=image: str(
                    bijection.phi_inverse(configuration.parse_compact(image))
                ),
            )
        )
    cases.append(
        _exact_case(
            "bijection/golden/fixed-point",
            {"config": GOLDEN_FIXED_POINT},
            GOLDEN_FIXED_POINT,
            lambda: str(bijection.phi(configuration.parse_compact(GOLDEN_FIXED_POINT))),
        )
    )
    for n in range(n_max + 1):
        cases.append(
            _family_case(
                f"bijection/exhaustive/n={n}",
                {"n": str(n)},
                lambda n=n: exhaustive_bijection_failures(n),
            )
        )
    return cases


# ---------------------------------------------------------------- identities


SHIFT_PARAMETERS = (
    Fraction(0),
    Fraction(1),
    Fraction(-1),
    Fraction(3, 2),
    Fraction(-5, 2),
)


def _zero_spec(n: int, t: int) -> identities.ConvolutionSpec:
    return identities.ConvolutionSpec(n, (Fraction(0),) * t)


def power_of_four_failures(n_max: int) -> list[str]:
    failures = []
    for n in range(n_max + 1):
        value = identities.convolution_sum(_zero_spec(n, 2))
        if value != Fraction(4) ** n:
            failures.append(f"n={n}: sum is {value}, not 4^{n}")
    return failures


def enumeration_count_failures(n_max: int) -> list[str]:
    failures = []
    for n in range(n_max + 1):
        total = sum(1 for _ in configuration.enumerate_ordered(n))
        value = identities.convolution_sum(_zero_spec(n, 2))
        if value != total:
            failures.append(f"n={n}: sum {value} != {total} enumerated")
    return failures


def zero_offset_closed_form_failures(t_max: int, n_max: int) -> list[str]:
    failures = []
    for t in range(1, t_max + 1):
        for n in range(n_max + 1):
            lhs = identities.convolution_sum(_zero_spec(n, t))
            rhs = identities.closed_form(n, t)
            if lhs != rhs:
                failures.append(f"t={t}, n={n}: {lhs} != {rhs}")
    return failures


def reindexed_offset_pair_failures(n_max: int) -> list[str]:
    failures = []
    for n in range(n_max + 1):
        value = identities.convolution_sum(
            identities.ConvolutionSpec(n, (Fraction(1), Fraction(-1)))
        )
        if value != Fraction(4) ** n:
            failures.append(f"n={n}: offsets [1,-1] give {value}")
    return failures


def odd_width_failures(n_max: int, L_max: int) -> list[str]:
    failures = []
    for n in range(n_max + 1):
        for L in range(L_max + 1):
            if not identities.odd_t_forms(n, L):
                failures.append(f"n={n}, L={L}")
    return failures


def recurrence_failures(t_max: int, n_max: int) -> list[str]:
    failures = []
    for t in range(1, t_max + 1):
        for n in range(n_max + 1):
            if not identities.recurrence_check(t, n):
                failures.append(f"t={t}, n={n}")
    return failures


def _random_rational(rng: random.Random, bound: int = 12, den: int = 6) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, den))


def opposite_offsets_integer_failures(n_max: int) -> list[str]:
    failures = []
    for n in range(n_max + 1):
        for extra in (1, 2, 5, 17):
            L = 2 * n + extra
            if not identities.opposite_offsets_check(n, L):
                failures.append(f"n={n}, L={L}")
    return failures


def opposite_offsets_rational_failures(n_max: int, seed: int, samples: int = 20) -> list[str]:
    rng = random.Random(seed)
    failures = []
    for _ in range(samples):
        L = _random_rational(rng)
        for n in range(n_max + 1):
            if not identities.opposite_offsets_check(n, L):
                failures.append(f"n={n}, L={L}")
    return failures


def zero_sum_offsets_failures(seed: int, samples: int = 100,
                              t_max: int = 5, n_max: int = 12) -> list[str]:
    rng = random.Random(seed)
    failures = []
    for _ in range(samples):
        t = rng.randint(1, t_max)
        n = rng.randint(0, n_max)
        offsets = [_random_rational(rng) for _ in range(t - 1)]
        offsets.append(-sum(offsets, Fraction(0)))
        lhs = identities.convolution_sum(identities.ConvolutionSpec(n, tuple(offsets)))
        rhs = identities.closed_form(n, t)
        if lhs != rhs:
            failures.append(f"n={n}, offsets={[str(o) for o in offsets]}: {lhs} != {rhs}")
    return failures


def inclusion_exclusion_integer_failures(L_max: int) -> list[str]:
    failures = []
    for L in range(L_max + 1):
        for p in range(L + 1):
            value = identities.inclusion_exclusion_sum(L, p)
            if value != 1:
                failures.append(f"L={L}, p={p}: {value}")
    return failures


def inclusion_exclusion_polynomial_failures(p_max: int) -> list[str]:
    failures = []
    variable = Polynomial((0, 1))
    for p in range(p_max + 1):
        value = identities.inclusion_exclusion_sum(variable, p)
        if value != 1:
            failures.append(f"p={p}: {value}")
    return failures


def shift_invariance_failures(n_max: int) -> list[str]:
    failures = []
    for n in range(n_max + 1):
        for a in SHIFT_PARAMETERS:
            poly = identities.shift_invariance_poly(n, a)
            if not poly.is_constant:
                failures.append(f"n={n}, a={a}: degree {poly.degree}")
                continue
            expected = identities.convolution_sum(
                identities.ConvolutionSpec(n, (a, Fraction(0)))
            )
            if poly.constant_value() != expected:
                failures.append(f"n={n}, a={a}: constant {poly.constant_value()}")
    return failures


def difference_formula_failures(n_max: int) -> list[str]:
    failures = []
    for n in range(n_max + 1):
        for a in SHIFT_PARAMETERS:
            for i in range(n + 1):
                for m in range(1, n - i + 1):
                    if not identities.delta_formula_check(n, a, i, m):
                        failures.append(f"n={n}, a={a}, i={i}, m={m}")
    return failures


def identities_suite(n_max: int = 64, t_max: int = 8, seed: int = 0) -> list[Case]:
    if n_max < 0 or t_max < 1:
        raise ValueError("need n_max >= 0 and t_max >= 1")
    cap = min  # family bounds never exceed their documented pins
    return [
        _family_case(
            "identities/power-of-four",
            {"n_max": str(n_max)},
            lambda: power_of_four_failures(n_max),
        ),
        _family_case(
            "identities/enumeration-count",
            {"n_max": str(cap(n_max, 8))},
            lambda: enumeration_count_failures(cap(n_max, 8)),
        ),
        _family_case(
            "identities/zero-offset-closed-form",
            {"t_max": str(t_max), "n_max": str(cap(n_max, 32))},
            lambda: zero_offset_closed_form_failures(t_max, cap(n_max, 32)),
        ),
        _family_case(
            "identities/reindexed-offset-pair",
            {"n_max": str(cap(n_max, 16))},
            lambda: reindexed_offset_pair_failures(cap(n_max, 16)),
        ),
        _family_case(
            "identities/odd-width-forms",
            {"n_max": str(cap(n_max, 12)), "L_max": "6"},
            lambda: odd_width_failures(cap(n_max, 12), 6),
        ),
        _family_case(
            "identities/recurrence",
            {"t_max": str(cap(t_max, 6)), "n_max": str(cap(n_max, 16))},
            lambda: recurrence_failures(cap(t_max, 6), cap(n_max, 16)),
        ),
        _family_case(
            "identities/opposite-offsets-integer",
            {"n_max": str(cap(n_max, 16))},
            lambda: opposite_offsets_integer_failures(cap(n_max, 16)),
        ),
        _family_case(
            "identities/opposite-offsets-rational",
            {"n_max": str(cap(n_max, 16)), "seed": str(seed)},
            lambda: opposite_offsets_rational_failures(cap(n_max, 16), seed),
        ),
        _family_case(
            "identities/zero-sum-offsets",
            {"samples": "100", "t_max": str(cap(t_max, 5)), "n_max": str(cap(n_max, 12)), "seed": str(seed)},
            lambda: zero_sum_offsets_failures(seed, 100, cap(t_max, 5), cap(n_max, 12)),
        ),
        _family_case(
            "identities/inclusion-exclusion-integer",
            {"L_max": "30"},
            lambda: inclusion_exclusion_integer_failures(30),
        ),
        _family_case(
            "identities/inclusion-exclusion-polynomial",
            {"p_max": "12"},
            lambda: inclusion_exclusion_polynomial_failures(12),
        ),
        _family_case(
            "identities/shift-invariance",
            {"n_max": str(cap(n_max, 8))},
            lambda: shift_invariance_failures(cap(n_max, 8)),
        ),
        _family_case(
            "identities/difference-formula",
            {"n_max": str(cap(n_max, 6))},
            lambda: difference_formula_failures(cap(n_max, 6)),
        ),
    ]


# ------------------------------------------------------------------- series


SERIES_PARAMETERS = (
    Fraction(-3),
    Fraction(-1),
    Fraction(-1, 2),
    Fraction(1, 2),
    Fraction(1),
    Fraction(2),
    Fraction(3),
    Fraction(7, 2),
)

POWER_ROUTE_PARAMETERS = (
    Fraction(-3),
    Fraction(-1),
    Fraction(1),
    Fraction(2),
    Fraction(3),
    Fraction(7, 2),
)


def route_independence_failures(order: int) -> list[str]:
    failures = []
    g = series.base_series("g", order)
    if g != series.base_series("binomial_power", order, Fraction(-1, 2)):
        failures.append("g differs from its binomial-power route")
    for t in POWER_ROUTE_PARAMETERS:
        if series.series_pow(g, t) != series.base_series(
            "binomial_power", order, -t / 2
        ):
            failures.append(f"t={t}: power route disagrees")
    return failures


def catalan_route_failures(order: int) -> list[str]:
    root = series.base_series("binomial_power", order, Fraction(1, 2))
    halved = (root + 1) * Fraction(1, 2)
    closed = series.series_pow(halved, -1)
    if closed != series.base_series("catalan", order):
        return ["catalan recurrence disagrees with 2/(1+sqrt(1-4x))"]
    return []


def derivative_law_failures(order: int) -> list[str]:
    failures = []
    g = series.base_series("g", order)
    c = series.base_series("catalan", order)
    g_prime = series.nth_derivative(g, 1)
    if g_prime != (series.series_pow(g, 3) * 2).truncate(order - 1):
        failures.append("g' != 2*g^3")
    c_prime = series.nth_derivative(c, 1)
    if c_prime != (g * series.series_pow(c, 2)).truncate(order - 1):
        failures.append("C' != g*C^2")
    return failures


def derivative_identity_failures(order: int, n_max: int = 5) -> list[str]:
    failures = []
    for variant in ("gt", "gC", "C"):
        for param in SERIES_PARAMETERS:
            for n in range(1, n_max + 1):
                if not series.derivative_identity_check(variant, param, n, order):
                    failures.append(f"{variant}, param={param}, n={n}")
    return failures


def coefficient_identity_failures(order: int) -> list[str]:
    failures = []
    for variant in ("gt", "gC", "C"):
        params = SERIES_PARAMETERS + ((Fraction(-2),) if variant == "C" else ())
        for param in params:
            if not series.coefficient_identity_check(variant, param, order):
                failures.append(f"{variant}, param={param}")
    return failures


def power_additivity_failures(order: int) -> list[str]:
    failures = []
    g = series.base_series("g", order)
    pairs = (
        (Fraction(1, 2), Fraction(3, 2)),
        (Fraction(-1, 3), Fraction(2)),
        (Fraction(7, 2), Fraction(-3)),
    )
    for r, s in pairs:
        combined = series.series_pow(g, r + s)
        split = series.series_pow(g, r) * series.series_pow(g, s)
        if combined != split:
            failures.append(f"r={r}, s={s}")
    return failures


def wz_certificate_failures(n_max: int = 16) -> list[str]:
    failures = []
    for n in range(n_max + 1):
        for i in range(n + 2):
            if not series.wz_certificate_check(n, i):
                failures.append(f"n={n}, i={i}")
    return failures


def telescoped_sum_failures(n_max: int = 16) -> list[str]:
    return [f"n={n}" for n in range(n_max + 1) if not series.telescoped_sum_check(n)]


def series_suite(order: int = 64) -> list[Case]:
    if order < 16:
        raise ValueError("series suite needs order >= 16")
    return [
        _family_case(
            "series/route-independence",
            {"order": str(order)},
            lambda: route_independence_failures(order),
        ),
        _family_case(
            "series/catalan-closed-form",
            {"order": str(order)},
            lambda: catalan_route_failures(order),
        ),
        _family_case(
            "series/derivative-laws",
            {"order": str(order)},
            lambda: derivative_law_failures(order),
        ),
        _family_case(
            "series/derivative-identities",
            {"order": str(order), "n_max": "5"},
            lambda: derivative_identity_failures(order),
        ),
        _family_case(
            "series/coefficient-identities",
            {"order": str(order)},
            lambda: coefficient_identity_failures(order),
        ),
        _family_case(
            "series/power-additivity",
            {"order": str(order)},
            lambda: power_additivity_failures(order),
        ),
        _family_case(
            "series/wz-certificate",
            {"n_max": "16"},
            lambda: wz_certificate_failures(16),
        ),
        _family_case(
            "series/telescoped-sum",
            {"n_max": "16"},
            lambda: telescoped_sum_failures(16),
        ),
    ]


SUITE_NAMES = ("bijection", "identities", "series")
