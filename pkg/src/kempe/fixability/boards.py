"""Boards: what a configuration's boundary sees of the outside coloring.

Every boundary slot stands for one precolored edge leaving the pattern.
The slot *sees* that edge's color and therefore cannot use it on the
pattern edges at the same vertex.  A board records the seen color of
every slot, in boundary order, written with capital letters: X means the
slot sees color x, and so on.

Renaming the three colors globally maps colorings to colorings, so
boards that differ only by a color permutation pose the same problem.
The canonical representative relabels colors by first occurrence: the
first slot sees X, the first slot seeing something different sees Y.
Canonical boards are thus exactly the strings where each letter first
appears only after all earlier letters have appeared, which is also the
lexicographically least member of each permutation class.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..graphs import SizeError, ValidationError

BOARD_LETTERS = "XYZ"

#: The three unordered color pairs, in move order.
PAIRS = ((0, 1), (0, 2), (1, 2))

PAIR_NAMES = {(0, 1): "xy", (0, 2): "xz", (1, 2): "yz"}

MAX_SLOTS = 8


@dataclass(frozen=True, order=True)
class Board:
    """Seen colors of the boundary slots, as a tuple of color indices."""

    seen: tuple

    def __post_init__(self):
        if not isinstance(self.seen, tuple):
            raise ValidationError("board entries must be a tuple")
        for c in self.seen:
            if c not in (0, 1, 2):
                raise ValidationError("board entry %r is not a color" % (c,))

    @classmethod
    def from_string(cls, text):
        """Parse a board from capital letters, e.g. ``"XYZX"``."""
        seen = []
        for ch in text:
            idx = BOARD_LETTERS.find(ch)
            if idx < 0:
                raise ValidationError("bad board letter %r" % ch)
            seen.append(idx)
        return cls(tuple(seen))

    def __str__(self):
        return "".join(BOARD_LETTERS[c] for c in self.seen)

    def __len__(self):
        return len(self.seen)

    def missing(self, i):
        """The two colors slot ``i`` may still take."""
        return frozenset((0, 1, 2)) - {self.seen[i]}

    @property
    def is_canonical(self):
        high = -1
        for c in self.seen:
            if c > high + 1:
                return False
            high = max(high, c)
        return True


def canonicalize(board):
    """Return ``(canonical_board, perm)`` where ``perm[old] = new``.

    Colors are relabeled in order of first appearance on the board;
    colors that never appear take the remaining labels in ascending
    order of the original color.
    """
    perm = [None, None, None]
    next_label = 0
    for c in board.seen:
        if perm[c] is None:
            perm[c] = next_label
            next_label += 1
    for c in range(3):
        if perm[c] is None:
            perm[c] = next_label
            next_label += 1
    return Board(tuple(perm[c] for c in board.seen)), tuple(perm)


def enumerate_boards(slots):
    """All canonical boards with ``slots`` entries, lexicographically.

    There are (3**(slots-1) + 1) / 2 of them.
    """
    if not isinstance(slots, int) or isinstance(slots, bool) or slots < 1:
        raise ValidationError("slot count must be a positive integer")
    if slots > MAX_SLOTS:
        raise SizeError("slot count %d exceeds the supported maximum %d"
                        % (slots, MAX_SLOTS))
    out = []
    seen = [0] * slots

    def grow(i, high):
        if i == slots:
            out.append(Board(tuple(seen)))
            return
        # A canonical board may extend with any color already used, or
        # with the single next unused color.
        for c in range(min(high + 2, 3)):
            seen[i] = c
            grow(i + 1, max(high, c))

    grow(1, 0)
    return out
