"""The recursive bijection between ordered and tower-free configurations.

An ordered configuration of length n with at least one tower is mapped
to a tower-free configuration by recursing on its compressed even
skeleton and rewriting the stretch around each tower/empty pair into a
run of odd columns ending (or starting) at a descent.  Tower-free
configurations are fixed points.  The inverse reads the descents of a
tower-free configuration, reconstructs the even skeleton recursively,
and rewinds each section.

Descents are the bookkeeping device: the image of a configuration with
m towers has exactly m descents, and every rewriting step here is
reversible column by column.
"""

from __future__ import annotations

from .configuration import (
    EMPTY,
    Color,
    Column,
    Configuration,
    NotOrderedError,
    Row,
    analyze,
    column_of,
    odd,
    tower,
)

TraceLog = list


class BijectionError(ValueError):
    """Base class for bijection input violations."""


class HasOddColumnsError(BijectionError):
    """Compression was applied to a configuration with odd columns."""


class MixedColumnError(BijectionError):
    """Compression would have to merge towers of different colors."""


class MalformedSectionError(BijectionError):
    """A section does not have the shape its rewriting rule expects."""


class NotTowerFreeError(BijectionError):
    """The inverse map was applied to a configuration with towers or empties."""


class NotInImageError(BijectionError):
    """The inverse map's reconstruction is not an ordered configuration."""


def _note(trace: TraceLog | None, depth: int, label: str, value: object) -> None:
    if trace is not None:
        trace.append((depth, label, str(value)))


def even_skeleton(configuration: Configuration) -> Configuration:
    """The subsequence of tower and empty columns, in order."""
    return Configuration(c for c in configuration.columns if not c.is_odd)


def compress(skeleton: Configuration) -> Configuration:
    """Halve an odd-free configuration by packing column pairs.

    Columns 2k-1 and 2k become the top and bottom slots of output
    column k: a tower contributes its color, an empty contributes an
    uncolored slot.  Two towers of different colors in one pair cannot
    be packed.
    """
    cols = skeleton.columns
    for pos, col in enumerate(cols, start=1):
        if col.is_odd:
            raise HasOddColumnsError(f"column {pos} of {skeleton} is odd")
    if len(cols) % 2:
        raise BijectionError(f"{skeleton} has an odd number of columns")
    out = []
    for k in range(0, len(cols), 2):
        top = cols[k].color
        bottom = cols[k + 1].color
        if top is not None and bottom is not None and top is not bottom:
            raise MixedColumnError(
                f"columns {k + 1} and {k + 2} of {skeleton} are towers of different colors"
            )
        out.append(column_of(top, bottom))
    return Configuration(out)


def expand(compressed: Configuration) -> Configuration:
    """Invert compress: each column becomes a tower/empty pair."""
    out = []
    for col in compressed.columns:
        out.append(tower(col.top) if col.top is not None else EMPTY)
        out.append(tower(col.bottom) if col.bottom is not None else EMPTY)
    return Configuration(out)


def tower_configuration(configuration: Configuration) -> Configuration:
    """The compressed even skeleton, the object the recursion descends to."""
    return compress(even_skeleton(configuration))


def phi_section_forward(section: Configuration, variant: int) -> Configuration:
    """Rewrite one section into a descent run of odd columns.

    A section has odd interior columns and ends consisting of one tower
    (color c) and one empty, in either order.  The first output column
    records c in its row (bottom for color One, top for Two) and is
    colored Two; the last records the tower/empty order (bottom when the
    tower came first) and is colored One; interiors keep their rows and
    take color Two under variant 1, One under variant 2.  A variant-1
    result is row-flipped on all but its last column when its first and
    second-to-last columns disagree; variant 2 flips all but the first
    on disagreement of the second and last.
    """
    if variant not in (1, 2):
        raise ValueError(f"variant must be 1 or 2, got {variant!r}")
    cols = section.columns
    n = len(cols)
    if n < 2:
        raise MalformedSectionError("a section has at least two columns")
    for col in cols[1:-1]:
        if not col.is_odd:
            raise MalformedSectionError(f"interior of {section} must be odd columns")
    first, last = cols[0], cols[-1]
    if first.is_tower and last.is_empty:
        tower_first = True
        color = first.color
    elif first.is_empty and last.is_tower:
        tower_first = False
        color = last.color
    else:
        raise MalformedSectionError(
            f"ends of {section} must be one tower and one empty column"
        )
    out = [odd(Row.BOTTOM if color is Color.ONE else Row.TOP, Color.TWO)]
    fill = Color.TWO if variant == 1 else Color.ONE
    for col in cols[1:-1]:
        out.append(odd(col.row, fill))
    out.append(odd(Row.BOTTOM if tower_first else Row.TOP, Color.ONE))
    if variant == 1:
        if out[-2] != out[0]:
            out[:-1] = [col.flipped() for col in out[:-1]]
    else:
        if out[1] != out[-1]:
            out[1:] = [col.flipped() for col in out[1:]]
    return Configuration(out)


def phi_section_inverse(
    section: Configuration, variant: int, skeleton: tuple[Column, Column]
) -> Configuration:
    """Rewind one descent run back to a section.

    The input must be all odd with the run shape of its variant: under
    variant 1, color-Two columns followed by a single color-One column;
    under variant 2, a single color-Two column followed by color-One
    columns.  The skeleton supplies the section's end columns, which the
    run itself does not encode.  The output is a column fragment and
    need not be balanced on its own.
    """
    if variant not in (1, 2):
        raise ValueError(f"variant must be 1 or 2, got {variant!r}")
    cols = list(section.columns)
    n = len(cols)
    if n < 2:
        raise MalformedSectionError("a section has at least two columns")
    for col in cols:
        if not col.is_odd:
            raise MalformedSectionError(f"{section} must consist of odd columns")
    if variant == 1:
        expected_shape = all(c.color is Color.TWO for c in cols[:-1]) and cols[
            -1
        ].color is Color.ONE
    else:
        expected_shape = cols[0].color is Color.TWO and all(
            c.color is Color.ONE for c in cols[1:]
        )
    if not expected_shape:
        raise MalformedSectionError(
            f"{section} does not have the variant-{variant} run shape"
        )
    if variant == 1:
        if cols[0] != cols[n - 2]:
            cols[: n - 1] = [c.flipped() for c in cols[: n - 1]]
        fill = Color.ONE
    else:
        if cols[-1] != cols[1]:
            cols[1:] = [c.flipped() for c in cols[1:]]
        fill = Color.TWO
    first, last = skeleton
    interior = [odd(c.row, fill) for c in cols[1:-1]]
    return Configuration([first, *interior, last])


def decode_pairs(
    image: Configuration,
) -> tuple[list[tuple[int, Color, bool]], Configuration]:
    """Read the descent bookkeeping of a tower-free configuration.

    Each descent at position k encodes a tower color (bottom row at k
    means color One) and an order bit (bottom row at k+1 means the
    tower preceded the empty).  Returns the list of
    (position, color, tower_first) triples and the tower/empty pair
    configuration they spell, one pair per descent.
    """
    qcols = image.columns
    for col in qcols:
        if not col.is_odd:
            raise NotTowerFreeError(f"{image} is not tower-free")
    pairs: list[tuple[int, Color, bool]] = []
    u_cols: list[Column] = []
    for k in range(1, len(qcols)):
        left, right = qcols[k - 1], qcols[k]
        if left.color is Color.TWO and right.color is Color.ONE:
            color = Color.ONE if left.row is Row.BOTTOM else Color.TWO
            tower_first = right.row is Row.BOTTOM
            pairs.append((k, color, tower_first))
            if tower_first:
                u_cols += [tower(color), EMPTY]
            else:
                u_cols += [EMPTY, tower(color)]
    return pairs, Configuration(u_cols)


def phi(
    configuration: Configuration,
    trace: TraceLog | None = None,
    _depth: int = 0,
) -> Configuration:
    """Map an ordered configuration to its tower-free image."""
    configuration.validate()
    profile = analyze(configuration)
    if not profile.ordered:
        raise NotOrderedError(f"{configuration} is not ordered")
    if profile.tower_free:
        _note(trace, _depth, "fixed point", configuration)
        return configuration
    skeleton = even_skeleton(configuration)
    compressed = compress(skeleton)
    _note(trace, _depth, "input", configuration)
    _note(trace, _depth, "tower configuration", compressed)
    inner_image = phi(compressed, trace, _depth + 1)
    expanded = expand(inner_image)
    _note(trace, _depth, "expanded image", expanded)
    evens = sorted(profile.towers + profile.empties)
    cols = list(configuration.columns)
    for index, position in enumerate(evens):
        cols[position - 1] = expanded.columns[index]
    ones_count = profile.type[0]
    for k in range(len(evens) // 2):
        p1, p2 = evens[2 * k], evens[2 * k + 1]
        variant = 1 if p2 <= ones_count else 2
        section = Configuration(cols[p1 - 1 : p2])
        image = phi_section_forward(section, variant)
        cols[p1 - 1 : p2] = image.columns
        _note(
            trace,
            _depth,
            f"section {p1}..{p2}",
            f"variant {variant}: {section} -> {image}",
        )
    result = Configuration(cols)
    _note(trace, _depth, "image", result)
    return result


def phi_inverse(
    image: Configuration,
    trace: TraceLog | None = None,
    _depth: int = 0,
) -> Configuration:
    """Map a tower-free configuration back to its ordered preimage."""
    qcols = image.columns
    for col in qcols:
        if not col.is_odd:
            raise NotTowerFreeError(f"{image} is not tower-free")
    pairs, pair_config = decode_pairs(image)
    if not pairs:
        _note(trace, _depth, "fixed point", image)
        return image
    _note(trace, _depth, "input", image)
    _note(trace, _depth, "pair seed", pair_config)
    inner_preimage = phi_inverse(compress(pair_config), trace, _depth + 1)
    skeleton = expand(inner_preimage)
    _note(trace, _depth, "skeleton", skeleton)
    tower_one_pairs = sum(
        1 for c in skeleton.columns if c.is_tower and c.color is Color.ONE
    )
    n = len(qcols)
    out = list(qcols)
    previous_end = 0
    for k, (descent, _color, _tower_first) in enumerate(pairs):
        if k < tower_one_pairs:
            variant = 1
            start = descent
            while start > 1 and qcols[start - 2].color is Color.TWO:
                start -= 1
            end = descent + 1
        else:
            variant = 2
            start = descent
            end = descent + 1
            while end < n and qcols[end].color is Color.ONE:
                end += 1
        if start <= previous_end:
            raise NotInImageError(f"sections of {image} overlap")
        previous_end = end
        section = Configuration(qcols[start - 1 : end])
        rebuilt = phi_section_inverse(
            section,
            variant,
            (skeleton.columns[2 * k], skeleton.columns[2 * k + 1]),
        )
        out[start - 1 : end] = rebuilt.columns
        _note(
            trace,
            _depth,
            f"section {start}..{end}",
            f"variant {variant}: {section} -> {rebuilt}",
        )
    result = Configuration(out)
    if not result.is_balanced or not analyze(result).ordered:
        raise NotInImageError(f"{image} reconstructs to {result}, which is not ordered")
    _note(trace, _depth, "preimage", result)
    return result


def format_trace(trace: TraceLog) -> str:
    """Render a trace log as indented lines."""
    return "\n".join(f"{'  ' * depth}{label}: {value}" for depth, label, value in trace)
