"""Two-row grid configurations.

A configuration is a row of columns in a 2 x n grid.  Each column is
empty, carries one colored slot (an odd column, in the top or bottom
row), or carries two slots of the same color (a tower).  Colors come in
two kinds.  A configuration of length n is balanced when exactly n of
its 2n slots are colored, which forces the tower count to equal the
empty count.

The module provides the column/configuration data model, the subset-pair
encoding of ordered configurations, enumeration of the two families that
the bijection connects, and the compact one-character-per-column string
format alongside a two-row grid rendering.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator


class ConfigurationError(ValueError):
    """Malformed configuration input."""


class BadCharacterError(ConfigurationError):
    """A compact string contains a character outside the alphabet."""


class InvalidSlotCountError(ConfigurationError):
    """A configuration's colored-slot count differs from its length."""


class NotOrderedError(ConfigurationError):
    """A configuration required to be ordered is not."""


class Color(Enum):
    ONE = 1
    TWO = 2

    def other(self) -> "Color":
        return Color.TWO if self is Color.ONE else Color.ONE


class Row(Enum):
    TOP = 0
    BOTTOM = 1

    def other(self) -> "Row":
        return Row.BOTTOM if self is Row.TOP else Row.TOP


@dataclass(frozen=True, slots=True)
class Column:
    """One grid column; each row slot is either uncolored or colored.

    Both slots colored means a tower, and towers are monochromatic: a
    column never carries two distinct colors.
    """

    top: Color | None
    bottom: Color | None

    def __post_init__(self) -> None:
        if self.top is not None and self.bottom is not None and self.top is not self.bottom:
            raise ConfigurationError("a column cannot carry two distinct colors")

    @property
    def is_empty(self) -> bool:
        return self.top is None and self.bottom is None

    @property
    def is_tower(self) -> bool:
        return self.top is not None and self.bottom is not None

    @property
    def is_odd(self) -> bool:
        return (self.top is None) != (self.bottom is None)

    @property
    def colored_slots(self) -> int:
        return (self.top is not None) + (self.bottom is not None)

    @property
    def color(self) -> Color | None:
        """The column's color, or None for an empty column."""
        return self.top if self.top is not None else self.bottom

    @property
    def row(self) -> Row | None:
        """The occupied row of an odd column, None otherwise."""
        if not self.is_odd:
            return None
        return Row.TOP if self.top is not None else Row.BOTTOM

    def flipped(self) -> "Column":
        """The odd column with its slot moved to the other row."""
        if not self.is_odd:
            raise ConfigurationError("only odd columns can flip rows")
        return _COLUMNS[(self.bottom, self.top)]


_COLUMNS: dict[tuple[Color | None, Color | None], Column] = {
    (top, bottom): Column(top, bottom)
    for top in (None, Color.ONE, Color.TWO)
    for bottom in (None, Color.ONE, Color.TWO)
    if top is None or bottom is None or top is bottom
}

EMPTY = _COLUMNS[(None, None)]


def empty_column() -> Column:
    return EMPTY


def tower(color: Color) -> Column:
    return _COLUMNS[(color, color)]


def odd(row: Row, color: Color) -> Column:
    if row is Row.TOP:
        return _COLUMNS[(color, None)]
    return _COLUMNS[(None, color)]


def column_of(top: Color | None, bottom: Color | None) -> Column:
    return _COLUMNS[(top, bottom)]


_CHAR_TO_COLUMN = {
    ".": EMPTY,
    "A": odd(Row.TOP, Color.ONE),
    "a": odd(Row.BOTTOM, Color.ONE),
    "1": tower(Color.ONE),
    "B": odd(Row.TOP, Color.TWO),
    "b": odd(Row.BOTTOM, Color.TWO),
    "2": tower(Color.TWO),
}

_COLUMN_TO_CHAR = {column: char for char, column in _CHAR_TO_COLUMN.items()}

#: The four odd columns in compact-alphabet order, used as the canonical
#: enumeration order for tower-free configurations.
ODD_COLUMNS = (
    odd(Row.TOP, Color.ONE),
    odd(Row.BOTTOM, Color.ONE),
    odd(Row.TOP, Color.TWO),
    odd(Row.BOTTOM, Color.TWO),
)


class Configuration:
    """An immutable sequence of columns.

    Balance (colored slots == column count) is deliberately not checked
    at construction: the bijection's bookkeeping builds short column
    fragments that are not balanced on their own.  Parsing and the
    subset-pair constructor return balanced configurations, and
    validate() checks balance on demand.
    """

    __slots__ = ("columns",)

    columns: tuple[Column, ...]

    def __init__(self, columns: Iterable[Column] = ()):
        object.__setattr__(self, "columns", tuple(columns))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Configuration is immutable")

    def __len__(self) -> int:
        return len(self.columns)

    def __iter__(self) -> Iterator[Column]:
        return iter(self.columns)

    def __getitem__(self, index):
        return self.columns[index]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Configuration):
            return self.columns == other.columns
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.columns)

    def __repr__(self) -> str:
        return f"Configuration({str(self)!r})"

    def __str__(self) -> str:
        return "".join(_COLUMN_TO_CHAR[c] for c in self.columns)

    @property
    def colored_slots(self) -> int:
        return sum(c.colored_slots for c in self.columns)

    @property
    def is_balanced(self) -> bool:
        return self.colored_slots == len(self.columns)

    def validate(self) -> "Configuration":
        if not self.is_balanced:
            raise InvalidSlotCountError(
                f"{self.colored_slots} colored slots in {len(self.columns)} columns"
            )
        return self


@dataclass(frozen=True)
class Profile:
    """Structural summary of a configuration.

    Positions are 1-based.  type is the pair (count of color-One slots,
    count of color-Two slots).  A descent position k marks a color-Two
    column immediately followed by a color-One column.
    """

    type: tuple[int, int]
    towers: tuple[int, ...]
    empties: tuple[int, ...]
    odds: tuple[int, ...]
    ordered: bool
    tower_free: bool
    descents: tuple[int, ...]


def analyze(configuration: Configuration) -> Profile:
    ones = 0
    twos = 0
    towers: list[int] = []
    empties: list[int] = []
    odds: list[int] = []
    for pos, col in enumerate(configuration.columns, start=1):
        if col.is_tower:
            towers.append(pos)
        elif col.is_empty:
            empties.append(pos)
        else:
            odds.append(pos)
        if col.color is Color.ONE:
            ones += col.colored_slots
        elif col.color is Color.TWO:
            twos += col.colored_slots
    ordered = True
    for pos, col in enumerate(configuration.columns, start=1):
        color = col.color
        if color is Color.ONE and pos > ones:
            ordered = False
            break
        if color is Color.TWO and pos <= ones:
            ordered = False
            break
    descents = tuple(
        pos
        for pos in range(1, len(configuration.columns))
        if configuration.columns[pos - 1].color is Color.TWO
        and configuration.columns[pos].color is Color.ONE
    )
    return Profile(
        type=(ones, twos),
        towers=tuple(towers),
        empties=tuple(empties),
        odds=tuple(odds),
        ordered=ordered,
        tower_free=not towers and not empties,
        descents=descents,
    )


def is_ordered(configuration: Configuration) -> bool:
    return analyze(configuration).ordered


def is_tower_free(configuration: Configuration) -> bool:
    return all(c.is_odd for c in configuration.columns)


def descents(configuration: Configuration) -> tuple[int, ...]:
    return analyze(configuration).descents


def from_subset_pair(
    i: int, j: int, ones: Iterable[int], twos: Iterable[int]
) -> Configuration:
    """Build the ordered configuration encoded by an (i, j) subset pair.

    ones is an i-subset of 1..2i marking color-One slots in the left
    2 x i block; twos is a j-subset of 1..2j for the right block.  Slots
    are numbered row by row within each block: top row first, then
    bottom, left to right.
    """
    ones = frozenset(ones)
    twos = frozenset(twos)
    if i < 0 or j < 0:
        raise ConfigurationError("block widths must be nonnegative")
    if len(ones) != i or not all(1 <= k <= 2 * i for k in ones):
        raise ConfigurationError(f"ones must be an {i}-subset of 1..{2 * i}")
    if len(twos) != j or not all(1 <= k <= 2 * j for k in twos):
        raise ConfigurationError(f"twos must be a {j}-subset of 1..{2 * j}")
    cols = []
    for k in range(1, i + 1):
        top = Color.ONE if k in ones else None
        bottom = Color.ONE if i + k in ones else None
        cols.append(_COLUMNS[(top, bottom)])
    for k in range(1, j + 1):
        top = Color.TWO if k in twos else None
        bottom = Color.TWO if j + k in twos else None
        cols.append(_COLUMNS[(top, bottom)])
    return Configuration(cols)


def to_subset_pair(
    configuration: Configuration,
) -> tuple[int, int, frozenset[int], frozenset[int]]:
    """Recover the subset pair of an ordered configuration."""
    profile = analyze(configuration)
    if not profile.ordered:
        raise NotOrderedError(f"{configuration} is not ordered")
    i, j = profile.type
    ones = set()
    twos = set()
    for k in range(1, i + 1):
        col = configuration.columns[k - 1]
        if col.top is not None:
            ones.add(k)
        if col.bottom is not None:
            ones.add(i + k)
    for k in range(1, j + 1):
        col = configuration.columns[i + k - 1]
        if col.top is not None:
            twos.add(k)
        if col.bottom is not None:
            twos.add(j + k)
    return i, j, frozenset(ones), frozenset(twos)


def enumerate_ordered(n: int) -> Iterator[Configuration]:
    """All ordered configurations of length n, in lexicographic order of
    (i, ones-subset, twos-subset)."""
    if n < 0:
        raise ConfigurationError("length must be nonnegative")
    for i in range(n + 1):
        j = n - i
        for ones in itertools.combinations(range(1, 2 * i + 1), i):
            for twos in itertools.combinations(range(1, 2 * j + 1), j):
                yield from_subset_pair(i, j, ones, twos)


def enumerate_tower_free(n: int) -> Iterator[Configuration]:
    """All 4^n tower-free configurations of length n, columns ranging in
    compact-alphabet order with the leftmost column slowest."""
    if n < 0:
        raise ConfigurationError("length must be nonnegative")
    for cols in itertools.product(ODD_COLUMNS, repeat=n):
        yield Configuration(cols)


def parse_compact(text: str) -> Configuration:
    """Parse the one-character-per-column format and validate balance."""
    cols = []
    for position, char in enumerate(text, start=1):
        try:
            cols.append(_CHAR_TO_COLUMN[char])
        except KeyError:
            raise BadCharacterError(
                f"character {char!r} at position {position} is not in the alphabet .Aa1Bb2"
            ) from None
    return Configuration(cols).validate()


def _slot_char(slot: Color | None) -> str:
    if slot is None:
        return "."
    return "O" if slot is Color.ONE else "X"


def render(configuration: Configuration, mode: str = "compact") -> str:
    """Serialize a configuration.

    compact: one character per column over the alphabet .Aa1Bb2.
    grid: two newline-joined rows, O for a color-One slot, X for a
    color-Two slot, and a dot for an uncolored slot.
    """
    if mode == "compact":
        return str(configuration)
    if mode == "grid":
        top = "".join(_slot_char(c.top) for c in configuration.columns)
        bottom = "".join(_slot_char(c.bottom) for c in configuration.columns)
        return top + "\n" + bottom
    raise ValueError(f"unknown render mode {mode!r}")
