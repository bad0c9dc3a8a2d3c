"""Character values of the symmetric group via the Murnaghan-Nakayama rule.

Everything here is exact integer arithmetic.  The recursion peels the largest
remaining cycle length first and memoizes on (shape, remaining type); the
memo table is a plain ``functools.cache`` and is safe for concurrent readers.
"""

from __future__ import annotations

import csv
import io
from functools import cache
from math import factorial

from .errors import SizeLimitError
from .young import (
    Partition,
    dimension,
    enumerate_partitions,
    enumerate_rim_hooks,
    format_partition,
    remove_rim_hook,
    validate_partition,
)

CycleType = Partition

#: p(10)^2 = 1764 exact entries; past this the table stops being a table
CHARACTER_TABLE_LIMIT = 10


@cache
def _mn(lam: Partition, tau: CycleType) -> int:
    if not tau:
        return 1
    head, rest = tau[0], tau[1:]
    total = 0
    for hook in enumerate_rim_hooks(lam, head):
        total += (-1) ** hook.leg_length * _mn(remove_rim_hook(lam, hook), rest)
    return total


def mn_character(lam, tau) -> int:
    """Character of the irreducible indexed by ``lam`` on the class of type ``tau``."""
    lam = validate_partition(lam)
    tau = validate_partition(tau)
    if sum(lam) != sum(tau):
        raise ValueError(f"size mismatch: |{lam}| = {sum(lam)} but |{tau}| = {sum(tau)}")
    return _mn(lam, tau)


def character_on_long_cycle(lam, n: int, k: int) -> int:
    """Character value on the class of type (n-k, 1^k), summed over rim hooks directly.

    This is the single-peel evaluation: one rim hook of length n-k comes off,
    and what is left is weighted by the dimension of the remainder.
    """
    lam = validate_partition(lam)
    if sum(lam) != n:
        raise ValueError(f"{lam} is not a partition of {n}")
    if not 0 <= k <= n - 2:
        raise ValueError(f"need 0 <= k <= n-2, got k = {k}, n = {n}")
    total = 0
    for hook in enumerate_rim_hooks(lam, n - k):
        total += (-1) ** hook.leg_length * dimension(remove_rim_hook(lam, hook))
    return total


def centralizer_order(tau) -> int:
    """|centralizer| of a permutation of cycle type ``tau``: prod l^m_l * m_l!."""
    tau = validate_partition(tau)
    order = 1
    for length in set(tau):
        mult = tau.count(length)
        order *= length**mult * factorial(mult)
    return order


def conjugacy_class_size(tau) -> int:
    tau = validate_partition(tau)
    q, r = divmod(factorial(sum(tau)), centralizer_order(tau))
    assert r == 0
    return q


def cycle_type_sign(tau) -> int:
    """Sign of any permutation of cycle type ``tau``: (-1)^(n - number of cycles)."""
    tau = validate_partition(tau)
    return -1 if (sum(tau) - len(tau)) % 2 else 1


def character_table(n: int) -> list[list[int]]:
    """Full character table of Sym(n): rows are shapes, columns are cycle types,
    both in reverse-lexicographic order."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > CHARACTER_TABLE_LIMIT:
        raise SizeLimitError(
            f"character tables are capped at n <= {CHARACTER_TABLE_LIMIT}, got n = {n}"
        )
    shapes = enumerate_partitions(n)
    return [[_mn(lam, tau) for tau in shapes] for lam in shapes]


def character_table_csv(n: int) -> str:
    """CSV export of :func:`character_table`: one header row of cycle types,
    then one row per shape."""
    shapes = enumerate_partitions(n)
    table = character_table(n)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["partition"] + [format_partition(tau) for tau in shapes])
    for lam, row in zip(shapes, table):
        writer.writerow([format_partition(lam)] + [str(v) for v in row])
    return buf.getvalue()
