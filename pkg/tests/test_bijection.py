"""Forward and inverse bijection, compression, and section rewriting."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from binomconv.bijection import (
    BijectionError,
    HasOddColumnsError,
    MalformedSectionError,
    MixedColumnError,
    NotInImageError,
    NotTowerFreeError,
    compress,
    decode_pairs,
    even_skeleton,
    expand,
    format_trace,
    phi,
    phi_inverse,
    phi_section_forward,
    phi_section_inverse,
    tower_configuration,
)
from binomconv.configuration import (
    EMPTY,
    Color,
    Configuration,
    InvalidSlotCountError,
    NotOrderedError,
    Row,
    analyze,
    enumerate_ordered,
    enumerate_tower_free,
    from_subset_pair,
    is_tower_free,
    odd,
    parse_compact,
    tower,
)

GOLDEN = ".A11.b2B2.."
GOLDEN_IMAGE = "BbAbabBaAbA"


# -------------------------------------------------------- skeleton / compress


def test_even_skeleton_golden():
    assert str(even_skeleton(parse_compact(GOLDEN))) == ".11.22.."
    assert str(even_skeleton(parse_compact("AB"))) == ""


def test_compress_golden():
    assert str(compress(parse_compact(".11.22.."))) == "aA2."
    assert str(compress(parse_compact("2."))) == "B"
    assert str(compress(parse_compact(""))) == ""


def test_expand_golden():
    assert str(expand(parse_compact("aA2."))) == ".11.22.."
    assert str(expand(parse_compact("B"))) == "2."


def test_compress_rejects_odd_columns():
    with pytest.raises(HasOddColumnsError):
        compress(parse_compact("A1."))


def test_compress_rejects_mixed_tower_pair():
    with pytest.raises(MixedColumnError):
        compress(parse_compact("12.."))
    with pytest.raises(MixedColumnError):
        compress(parse_compact("21.."))


def test_compress_rejects_odd_column_count():
    fragment = Configuration((tower(Color.ONE), EMPTY, EMPTY))
    with pytest.raises(BijectionError):
        compress(fragment)


def test_compress_expand_is_identity_everywhere():
    # compress(expand(c)) == c for every configuration, odd columns included.
    columns = [
        EMPTY,
        tower(Color.ONE),
        tower(Color.TWO),
        odd(Row.TOP, Color.ONE),
        odd(Row.BOTTOM, Color.ONE),
        odd(Row.TOP, Color.TWO),
        odd(Row.BOTTOM, Color.TWO),
    ]
    for length in range(4):
        for cols in itertools.product(columns, repeat=length):
            c = Configuration(cols)
            assert compress(expand(c)) == c


def test_expand_compress_is_identity_on_unmixed_pairs():
    pairs = [
        (tower(Color.ONE), EMPTY),
        (EMPTY, tower(Color.ONE)),
        (tower(Color.TWO), EMPTY),
        (EMPTY, tower(Color.TWO)),
        (tower(Color.ONE), tower(Color.ONE)),
        (tower(Color.TWO), tower(Color.TWO)),
        (EMPTY, EMPTY),
    ]
    for length in range(4):
        for chosen in itertools.product(pairs, repeat=length):
            c = Configuration([col for pair in chosen for col in pair])
            assert expand(compress(c)) == c


def test_tower_configuration_chain():
    assert str(tower_configuration(parse_compact(GOLDEN))) == "aA2."
    assert str(tower_configuration(parse_compact("aA2."))) == "B"


# ----------------------------------------------------------- section rewiring


SECTION_FORWARD_GOLDEN = [
    (".A1", 1, "BbA"),
    ("2B.", 2, "BaA"),
    ("1.", 1, "ba"),
    (".1", 2, "bA"),
    ("2.", 2, "Ba"),
]


def test_section_forward_golden():
    for section, variant, image in SECTION_FORWARD_GOLDEN:
        assert str(phi_section_forward(parse_compact(section), variant)) == image


def test_section_inverse_golden():
    for section, variant, image in SECTION_FORWARD_GOLDEN:
        cols = parse_compact(section).columns
        rebuilt = phi_section_inverse(
            parse_compact(image), variant, (cols[0], cols[-1])
        )
        assert str(rebuilt) == section


def test_section_forward_rejects_bad_shapes():
    with pytest.raises(MalformedSectionError):
        phi_section_forward(Configuration((tower(Color.ONE), tower(Color.ONE))), 1)
    with pytest.raises(MalformedSectionError):
        phi_section_forward(Configuration((EMPTY, EMPTY)), 1)
    with pytest.raises(MalformedSectionError):
        phi_section_forward(Configuration((tower(Color.ONE),)), 1)
    interior_not_odd = Configuration((tower(Color.ONE), EMPTY, EMPTY))
    with pytest.raises(MalformedSectionError):
        phi_section_forward(interior_not_odd, 2)
    with pytest.raises(ValueError):
        phi_section_forward(parse_compact("1."), 3)


def test_section_inverse_rejects_bad_shapes():
    ends = (tower(Color.ONE), EMPTY)
    with pytest.raises(MalformedSectionError):
        phi_section_inverse(parse_compact("AB"), 1, ends)  # One before the end
    with pytest.raises(MalformedSectionError):
        phi_section_inverse(parse_compact("Bb"), 1, ends)  # no final One column
    with pytest.raises(MalformedSectionError):
        phi_section_inverse(parse_compact("aB"), 2, ends)  # does not open with Two
    with pytest.raises(MalformedSectionError):
        phi_section_inverse(parse_compact("1."), 1, ends)  # not odd columns
    with pytest.raises(MalformedSectionError):
        phi_section_inverse(Configuration((odd(Row.TOP, Color.ONE),)), 1, ends)
    with pytest.raises(ValueError):
        phi_section_inverse(parse_compact("ba"), 0, ends)


def test_section_round_trip_exhaustive():
    """inverse(forward(s)) == s over every admissible small section.

    Variant 1 sections carry color-One interiors, variant 2 color-Two,
    matching where each variant is applied.
    """
    for variant, interior_color in ((1, Color.ONE), (2, Color.TWO)):
        for tower_first in (True, False):
            for color in (Color.ONE, Color.TWO):
                for size in range(0, 4):
                    for rows in itertools.product((Row.TOP, Row.BOTTOM), repeat=size):
                        interior = [odd(row, interior_color) for row in rows]
                        ends = (tower(color), EMPTY)
                        if not tower_first:
                            ends = (EMPTY, tower(color))
                        section = Configuration([ends[0], *interior, ends[1]])
                        image = phi_section_forward(section, variant)
                        assert is_tower_free(image)
                        assert len(image) == len(section)
                        rebuilt = phi_section_inverse(image, variant, ends)
                        assert rebuilt == section


def test_section_runs_round_trip_exhaustive():
    """forward(inverse(run)) == run over every small descent run.

    The skeleton ends are read off the run's descent columns the same
    way the pair decoder does; the recursion guarantees this consistency
    in real use.
    """
    for variant in (1, 2):
        for size in range(2, 6):
            for rows in itertools.product((Row.TOP, Row.BOTTOM), repeat=size):
                if variant == 1:
                    colors = [Color.TWO] * (size - 1) + [Color.ONE]
                    descent_left, descent_right = rows[-2], rows[-1]
                else:
                    colors = [Color.TWO] + [Color.ONE] * (size - 1)
                    descent_left, descent_right = rows[0], rows[1]
                run = Configuration(
                    odd(row, color) for row, color in zip(rows, colors)
                )
                color = Color.ONE if descent_left is Row.BOTTOM else Color.TWO
                if descent_right is Row.BOTTOM:
                    ends = (tower(color), EMPTY)
                else:
                    ends = (EMPTY, tower(color))
                section = phi_section_inverse(run, variant, ends)
                assert phi_section_forward(section, variant) == run


# ----------------------------------------------------------------- bookeeping


def test_decode_pairs_golden():
    pairs, seed = decode_pairs(parse_compact(GOLDEN_IMAGE))
    assert [(pos, color, tower_first) for pos, color, tower_first in pairs] == [
        (2, Color.ONE, False),
        (4, Color.ONE, True),
        (7, Color.TWO, True),
        (10, Color.ONE, False),
    ]
    assert str(seed) == ".11.2..1"


def test_decode_pairs_fixed_point():
    pairs, seed = decode_pairs(parse_compact("AB"))
    assert pairs == []
    assert str(seed) == ""


def test_decode_pairs_rejects_towers():
    with pytest.raises(NotTowerFreeError):
        decode_pairs(parse_compact("1."))


# -------------------------------------------------------------------- the map


def test_phi_golden():
    assert str(phi(parse_compact(GOLDEN))) == GOLDEN_IMAGE


def test_phi_fixed_points():
    for text in ("", "AB", "a", "aB"):
        c = parse_compact(text)
        assert phi(c) == c


def test_phi_smallest_towers():
    assert str(phi(parse_compact("1."))) == "ba"
    assert str(phi(parse_compact(".1"))) == "bA"
    assert str(phi(parse_compact("2."))) == "Ba"
    assert str(phi(parse_compact(".2"))) == "BA"


def test_phi_requires_ordered_input():
    with pytest.raises(NotOrderedError):
        phi(parse_compact("BA"))
    with pytest.raises(NotOrderedError):
        phi(parse_compact("2.1."))


def test_phi_requires_balance():
    with pytest.raises(InvalidSlotCountError):
        phi(Configuration((tower(Color.ONE),)))


def test_phi_inverse_golden():
    for image, preimage in (
        ("ba", "1."),
        ("BAbA", "11.."),
        ("aBBAaaBbABBBb", "a1A1aa.A.BBBb"),
    ):
        assert str(phi_inverse(parse_compact(image))) == preimage


def test_phi_inverse_fixed_points():
    for text in ("", "AB", "ab"):
        c = parse_compact(text)
        assert phi_inverse(c) == c


def test_phi_inverse_requires_tower_free():
    with pytest.raises(NotTowerFreeError):
        phi_inverse(parse_compact("1."))
    with pytest.raises(NotTowerFreeError):
        phi_inverse(parse_compact(".A1"))


def test_phi_is_a_bijection_exhaustively():
    for n in range(5):
        images = {}
        for c in enumerate_ordered(n):
            image = phi(c)
            assert len(image) == n
            assert is_tower_free(image)
            assert image not in images, f"{c} and {images[image]} collide"
            images[image] = c
            profile = analyze(c)
            assert len(analyze(image).descents) == len(profile.towers)
            assert phi_inverse(image) == c
        assert len(images) == 4**n
        for q in enumerate_tower_free(n):
            assert q in images
            assert phi(phi_inverse(q)) == q


@st.composite
def ordered_configs(draw, max_length=7):
    n = draw(st.integers(0, max_length))
    i = draw(st.integers(0, n))
    j = n - i
    ones = draw(st.sets(st.integers(1, 2 * i), min_size=i, max_size=i)) if i else set()
    twos = draw(st.sets(st.integers(1, 2 * j), min_size=j, max_size=j)) if j else set()
    return from_subset_pair(i, j, ones, twos)


@given(c=ordered_configs())
@settings(max_examples=80, deadline=None)
def test_phi_round_trip_random(c):
    image = phi(c)
    assert is_tower_free(image)
    assert len(image) == len(c)
    assert phi_inverse(image) == c
    assert (image == c) == analyze(c).tower_free


# ---------------------------------------------------------------------- trace


def test_phi_trace_records_recursion():
    trace = []
    phi(parse_compact(GOLDEN), trace=trace)
    text = format_trace(trace)
    assert "tower configuration: aA2." in text
    assert "variant" in text
    assert any(line.startswith("  ") for line in text.splitlines())
    assert text.splitlines()[-1].startswith("image: ")


def test_phi_inverse_trace_records_recursion():
    trace = []
    phi_inverse(parse_compact(GOLDEN_IMAGE), trace=trace)
    text = format_trace(trace)
    assert "pair seed: .11.2..1" in text
    assert text.splitlines()[-1].startswith("preimage: ")
