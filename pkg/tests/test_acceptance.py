"""Acceptance gate: the eight headline checks at their full pinned bounds.

Each test prints one [criterion k] PASS/FAIL line (visible under
pytest -s) and then asserts.  The bounds here are the contract; the
other test modules cover the same code at unit granularity.
"""

from binomconv import suites
from binomconv.bijection import (
    compress,
    even_skeleton,
    phi,
    phi_inverse,
    tower_configuration,
)
from binomconv.configuration import parse_compact


def report(number: int, description: str, ok: bool) -> bool:
    mark = "PASS" if ok else "FAIL"
    print(f"[criterion {number}] {mark} - {description}")
    return ok


def test_criterion_1_golden_vectors():
    ok = str(phi(parse_compact(".A11.b2B2.."))) == "BbAbabBaAbA"
    skeleton = even_skeleton(parse_compact(".A11.b2B2.."))
    ok = ok and str(skeleton) == ".11.22.."
    ok = ok and str(compress(skeleton)) == "aA2."
    ok = ok and str(tower_configuration(parse_compact("aA2."))) == "B"
    ok = ok and str(phi_inverse(parse_compact("ba"))) == "1."
    ok = ok and str(phi_inverse(parse_compact("BAbA"))) == "11.."
    ok = ok and str(phi_inverse(parse_compact("aBBAaaBbABBBb"))) == "a1A1aa.A.BBBb"
    assert report(1, "golden forward/chain/inverse vectors match exactly", ok)


def test_criterion_2_exhaustive_bijection():
    failures = []
    for n in range(9):
        failures.extend(suites.exhaustive_bijection_failures(n))
    ok = not failures
    assert report(
        2, "bijection exhaustive for n <= 8, both directions", ok
    ), failures[:5]


def test_criterion_3_power_of_four():
    failures = suites.power_of_four_failures(64)
    failures += suites.enumeration_count_failures(8)
    ok = not failures
    assert report(
        3, "two-fold zero-offset sums equal 4^n (n <= 64) and match counts", ok
    ), failures[:5]


def test_criterion_4_zero_offset_closed_form():
    failures = suites.zero_offset_closed_form_failures(8, 32)
    failures += suites.odd_width_failures(12, 6)
    failures += suites.recurrence_failures(6, 16)
    ok = not failures
    assert report(
        4, "closed form (t <= 8, n <= 32), odd-width forms, recurrence", ok
    ), failures[:5]


def test_criterion_5_offset_variations():
    failures = suites.opposite_offsets_integer_failures(16)
    failures += suites.opposite_offsets_rational_failures(16, seed=0, samples=20)
    failures += suites.zero_sum_offsets_failures(seed=0, samples=100, t_max=5, n_max=12)
    failures += suites.inclusion_exclusion_integer_failures(30)
    failures += suites.inclusion_exclusion_polynomial_failures(12)
    ok = not failures
    assert report(
        5, "opposite/zero-sum offsets and inclusion-exclusion sums", ok
    ), failures[:5]


def test_criterion_6_symbolic_shift():
    failures = suites.shift_invariance_failures(8)
    failures += suites.difference_formula_failures(6)
    ok = not failures
    assert report(
        6, "shift-invariance polynomials constant, difference formula symbolic", ok
    ), failures[:5]


def test_criterion_7_series_identities():
    failures = suites.route_independence_failures(64)
    failures += suites.catalan_route_failures(64)
    failures += suites.coefficient_identity_failures(64)
    failures += suites.derivative_identity_failures(64, n_max=5)
    failures += suites.derivative_law_failures(64)
    failures += suites.power_additivity_failures(64)
    ok = not failures
    assert report(
        7, "series routes, coefficient and derivative identities at order 64", ok
    ), failures[:5]


def test_criterion_8_certificate():
    failures = suites.wz_certificate_failures(16)
    failures += suites.telescoped_sum_failures(16)
    ok = not failures
    assert report(
        8, "telescoping certificate and telescoped sums for n <= 16", ok
    ), failures[:5]
