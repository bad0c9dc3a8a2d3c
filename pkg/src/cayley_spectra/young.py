"""Integer partitions, Young diagrams, hook lengths, and rim hooks.

Diagram coordinates are 1-based ``(row, column)`` pairs in the English
convention: row 1 is the longest row and sits on top.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cache
from math import factorial

from .errors import SizeLimitError

Partition = tuple[int, ...]

#: cap for the exhaustive standard-tableau filler; the enumeration walks one
#: node per partial filling, so it grows with f^lambda
TABLEAU_ENUMERATION_LIMIT = 12


def validate_partition(parts) -> Partition:
    """Normalize to a tuple; parts must be positive and non-increasing."""
    lam = tuple(int(p) for p in parts)
    for i, p in enumerate(lam):
        if p < 1:
            raise ValueError(f"partition parts must be positive integers, got {lam}")
        if i and lam[i - 1] < p:
            raise ValueError(f"partition parts must be non-increasing, got {lam}")
    return lam


@cache
def _partitions(n: int) -> tuple[Partition, ...]:
    if n == 0:
        return ((),)
    out: list[Partition] = []

    def extend(prefix: Partition, remaining: int, max_part: int) -> None:
        if remaining == 0:
            out.append(prefix)
            return
        for part in range(min(remaining, max_part), 0, -1):
            extend(prefix + (part,), remaining - part, part)

    extend((), n, n)
    return tuple(out)


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse lexicographic order: [n] first, [1^n] last."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return list(_partitions(n))


def transpose(lam) -> Partition:
    """Conjugate partition (reflect the diagram across the main diagonal)."""
    lam = validate_partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > c) for c in range(lam[0]))


def hook_lengths(lam) -> list[list[int]]:
    """Hook length of every cell, as a row-by-row grid."""
    lam = validate_partition(lam)
    conj = transpose(lam)
    return [
        [(lam[r] - c - 1) + (conj[c] - r - 1) + 1 for c in range(lam[r])]
        for r in range(len(lam))
    ]


@cache
def _dimension(lam: Partition) -> int:
    n = sum(lam)
    denom = 1
    for row in hook_lengths(lam):
        for h in row:
            denom *= h
    q, r = divmod(factorial(n), denom)
    if r:  # the hook product always divides n!; anything else is a bug
        raise ArithmeticError(f"hook product {denom} does not divide {n}!")
    return q


def dimension(lam) -> int:
    """Number of standard Young tableaux of shape ``lam``, by the hook length formula."""
    return _dimension(validate_partition(lam))


def count_standard_tableaux(lam) -> int:
    """Count standard tableaux by exhaustively placing 1..n cell by cell.

    Independent of :func:`dimension`: no hook lengths, just backtracking over
    all fillings whose rows and columns increase.  Capped at n <= 12.
    """
    lam = validate_partition(lam)
    n = sum(lam)
    if n > TABLEAU_ENUMERATION_LIMIT:
        raise SizeLimitError(
            f"exhaustive tableau enumeration is capped at n <= {TABLEAU_ENUMERATION_LIMIT}, got n = {n}"
        )
    if n == 0:
        return 1
    fill = [0] * len(lam)  # cells already occupied in each row

    def place(value: int) -> int:
        if value > n:
            return 1
        total = 0
        for r, used in enumerate(fill):
            # next free cell of row r is (r, used); legal if the row has room
            # and the cell above is already filled
            if used < lam[r] and (r == 0 or fill[r - 1] > used):
                fill[r] += 1
                total += place(value + 1)
                fill[r] -= 1
        return total

    return place(1)


@dataclass(frozen=True)
class RimHook:
    """A border strip: an edge-connected skew diagram containing no 2x2 block.

    ``cells`` are ordered from the southwest-most cell; each step moves one
    cell up or one cell right.  ``leg_length`` is (number of rows spanned) - 1.
    """

    cells: tuple[tuple[int, int], ...]
    leg_length: int

    @property
    def length(self) -> int:
        return len(self.cells)


def _is_border_strip(cells: frozenset[tuple[int, int]]) -> bool:
    for r, c in cells:
        if (r, c + 1) in cells and (r + 1, c) in cells and (r + 1, c + 1) in cells:
            return False
    # flood fill over edge-adjacency
    start = next(iter(cells))
    seen = {start}
    todo = [start]
    while todo:
        r, c = todo.pop()
        for nb in ((r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)):
            if nb in cells and nb not in seen:
                seen.add(nb)
                todo.append(nb)
    return len(seen) == len(cells)


@cache
def _rim_hooks(lam: Partition, length: int) -> tuple[RimHook, ...]:
    n = sum(lam)
    found: list[RimHook] = []
    for mu in _partitions(n - length):
        if len(mu) > len(lam):
            continue
        padded = mu + (0,) * (len(lam) - len(mu))
        if any(m > l for m, l in zip(padded, lam)):
            continue
        cells = frozenset(
            (r + 1, c + 1)
            for r in range(len(lam))
            for c in range(padded[r], lam[r])
        )
        if not _is_border_strip(cells):
            continue
        # southwest-most first: bottom row upward, left to right within a row
        ordered = tuple(sorted(cells, key=lambda rc: (-rc[0], rc[1])))
        rows = {r for r, _ in cells}
        found.append(RimHook(cells=ordered, leg_length=len(rows) - 1))
    return tuple(found)


def enumerate_rim_hooks(lam, length: int) -> tuple[RimHook, ...]:
    """All rim hooks of the given length removable from ``lam``.

    Deterministic order, induced by the reverse-lexicographic order of the
    leftover partition.  ``length`` must be at least 1 (a rim hook is a
    non-empty strip); lengths exceeding |lam| simply yield nothing.
    """
    lam = validate_partition(lam)
    if length < 1:
        raise ValueError("a rim hook has length at least 1")
    if length > sum(lam):
        return ()
    return _rim_hooks(lam, length)


def remove_rim_hook(lam, hook: RimHook) -> Partition:
    """Partition left after removing ``hook``; rejects hooks not on the border of ``lam``."""
    lam = validate_partition(lam)
    if hook not in enumerate_rim_hooks(lam, len(hook.cells)):
        raise ValueError(f"{hook} is not a rim hook of {lam}")
    new = list(lam)
    by_row: dict[int, int] = {}
    for r, c in hook.cells:
        by_row[r] = min(c, by_row.get(r, c))
    for r, first_col in by_row.items():
        new[r - 1] = first_col - 1
    while new and new[-1] == 0:
        new.pop()
    assert all(new[i] >= new[i + 1] for i in range(len(new) - 1))
    return tuple(new)


_PART_TOKEN = re.compile(r"^(\d+)(?:\^(\d+))?$")


def parse_partition(text: str) -> Partition:
    """Parse "5,1" or the exponent shorthand "2,1^4" (surrounding [] allowed)."""
    s = text.strip()
    if s.startswith("[") and s.endswith("]"):
        s = s[1:-1].strip()
    if not s:
        raise ValueError(f"empty partition string: {text!r}")
    parts: list[int] = []
    for token in s.split(","):
        m = _PART_TOKEN.match(token.strip())
        if not m:
            raise ValueError(f"bad partition token {token!r} in {text!r}")
        part = int(m.group(1))
        exponent = int(m.group(2)) if m.group(2) else 1
        if exponent < 1:
            raise ValueError(f"bad partition token {token!r} in {text!r}")
        parts.extend([part] * exponent)
    return validate_partition(parts)


def format_partition(lam) -> str:
    """Serialize as a plain comma-separated part list, e.g. "5,1"."""
    return ",".join(str(p) for p in validate_partition(lam))
