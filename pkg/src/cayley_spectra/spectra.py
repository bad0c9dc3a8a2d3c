"""Spectra of the Cayley graphs Cay(Sym(n), C(n,k)), where C(n,k) is the
conjugacy class of all (n-k)-cycles.

Because the connection set is a full conjugacy class, every irreducible
character chi of Sym(n) contributes one eigenvalue

    xi_chi = chi(sigma) / chi(1) * |C(n,k)|      (sigma any (n-k)-cycle)

with multiplicity chi(1)^2.  All arithmetic is exact; a non-integral
eigenvalue is impossible here and is surfaced as a hard failure.
"""

from __future__ import annotations

import csv
import io
import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Callable

from .characters import mn_character
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

DEFAULT_MAX_N = 14
MAX_N_ENV_VAR = "CAYLEY_SPECTRA_MAX_N"

#: guard band for the floating-point log inequality in hypothesis_check
LOG_GUARD = 1e-9


def class_size(n: int, k: int) -> int:
    """|C(n,k)|: the number of (n-k)-cycles in Sym(n), C(n,k choose) * (n-k-1)!.

    This is also the valency of the Cayley graph.  Requires 0 <= k <= n-2 so
    that an (n-k)-cycle actually moves something.
    """
    if not 0 <= k <= n - 2:
        raise ValueError(f"need 0 <= k <= n-2, got n = {n}, k = {k}")
    return comb(n, k) * factorial(n - k - 1)


def resolve_max_n(explicit: int | None = None) -> int:
    """Size bound for full-spectrum enumeration: explicit argument, else the
    CAYLEY_SPECTRA_MAX_N environment variable, else 14."""
    if explicit is not None:
        return explicit
    env = os.environ.get(MAX_N_ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise ValueError(f"{MAX_N_ENV_VAR} must be an integer, got {env!r}") from exc
    return DEFAULT_MAX_N


def eigenvalue_for(lam, n: int, k: int) -> int:
    """Exact eigenvalue contributed by the shape ``lam``.

    Always evaluated through the character recursion; in the unique-rim-hook
    regime 3k+1 < n the single-hook closed evaluation is computed as well and
    the two must agree.
    """
    lam = validate_partition(lam)
    if sum(lam) != n:
        raise ValueError(f"{lam} is not a partition of {n}")
    c = class_size(n, k)
    f = dimension(lam)
    chi = mn_character(lam, (n - k,) + (1,) * k)
    value = Fraction(chi * c, f)
    if value.denominator != 1:
        raise ArithmeticError(
            f"non-integral eigenvalue {value} for shape {lam}, n = {n}, k = {k}: internal bug"
        )
    if 3 * k + 1 < n:
        hooks = enumerate_rim_hooks(lam, n - k)
        assert len(hooks) <= 1, f"expected at most one (n-k)-hook for 3k+1 < n, shape {lam}"
        if hooks:
            single = Fraction(
                (-1) ** hooks[0].leg_length * dimension(remove_rim_hook(lam, hooks[0])) * c, f
            )
        else:
            single = Fraction(0)
        assert single == value, f"fast path {single} != recursion {value} for {lam}"
    return int(value)


@dataclass(frozen=True)
class SpectrumEntry:
    partition: Partition
    eigenvalue: int
    multiplicity: int


def _spectrum_task(args: tuple[Partition, int, int]) -> SpectrumEntry:
    lam, n, k = args
    return SpectrumEntry(lam, eigenvalue_for(lam, n, k), dimension(lam) ** 2)


def full_spectrum(n: int, k: int, max_n: int | None = None, threads: int = 1) -> list[SpectrumEntry]:
    """Entire spectrum of Cay(Sym(n), C(n,k)), one entry per shape, sorted by
    eigenvalue descending (ties broken by shape enumeration order)."""
    bound = resolve_max_n(max_n)
    if n > bound:
        raise SizeLimitError(
            f"full_spectrum is capped at n <= {bound} (override with {MAX_N_ENV_VAR}), got n = {n}"
        )
    class_size(n, k)  # range check on k
    shapes = enumerate_partitions(n)
    tasks = [(lam, n, k) for lam in shapes]
    if threads > 1 and len(shapes) >= 32:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            entries = list(pool.map(_spectrum_task, tasks, chunksize=8))
    else:
        entries = [_spectrum_task(t) for t in tasks]
    order = {lam: i for i, lam in enumerate(shapes)}
    entries.sort(key=lambda e: (-e.eigenvalue, order[e.partition]))
    return entries


@dataclass(frozen=True)
class Lambda2:
    value: int
    witnesses: tuple[Partition, ...]


def lambda2(n: int, k: int, max_n: int | None = None) -> Lambda2:
    """Largest eigenvalue strictly below the valency, with every shape attaining it."""
    c = class_size(n, k)
    below = [e for e in full_spectrum(n, k, max_n=max_n) if e.eigenvalue < c]
    assert below, "every non-trivial shape cannot attain the valency for n >= 2"
    top = below[0].eigenvalue
    return Lambda2(top, tuple(e.partition for e in below if e.eigenvalue == top))


# ---------------------------------------------------------------------------
# closed forms for the fourteen low-dimension shapes

def _binom(a: int, b: int) -> int:
    """Binomial coefficient as the degree-b polynomial a(a-1)...(a-b+1)/b!.

    Unlike math.comb this is defined for negative upper index (C(-1,2) = 1),
    which the k = 0, 1 closed forms rely on; for 0 <= a < b it is still 0.
    """
    assert b >= 0
    num = 1
    for i in range(b):
        num *= a - i
    q, r = divmod(num, factorial(b))
    assert r == 0
    return q


@dataclass(frozen=True)
class _ShapeRule:
    shape_id: str
    min_n: int
    build: Callable[[int], Partition]
    ratio: Callable[[int, int], Fraction]  # eigenvalue / valency, sign included


def _transpose_sign(n: int, k: int) -> int:
    return (-1) ** (n - k + 1)


def _rules() -> dict[str, _ShapeRule]:
    r_n1_1 = lambda n, k: Fraction(k - 1, n - 1)
    r_n2_2 = lambda n, k: Fraction(_binom(k, 2) - k, _binom(n, 2) - n)
    r_n2_11 = lambda n, k: Fraction(_binom(k - 1, 2), _binom(n - 1, 2))
    r_n3_3 = lambda n, k: Fraction(_binom(k, 3) - _binom(k, 2), _binom(n, 3) - _binom(n, 2))
    r_n3_111 = lambda n, k: Fraction(_binom(k - 1, 3), _binom(n - 1, 3))
    r_n3_21 = lambda n, k: Fraction(k * (k - 2) * (k - 4), n * (n - 2) * (n - 4))

    def flip(ratio):
        return lambda n, k: _transpose_sign(n, k) * ratio(n, k)

    rules = [
        _ShapeRule("n", 1, lambda n: (n,), lambda n, k: Fraction(1)),
        _ShapeRule("1^n", 1, lambda n: (1,) * n, lambda n, k: Fraction((-1) ** (n - k - 1))),
        _ShapeRule("n-1,1", 3, lambda n: (n - 1, 1), r_n1_1),
        _ShapeRule("2,1^(n-2)", 3, lambda n: (2,) + (1,) * (n - 2), flip(r_n1_1)),
        _ShapeRule("n-2,2", 5, lambda n: (n - 2, 2), r_n2_2),
        _ShapeRule("2^2,1^(n-4)", 5, lambda n: (2, 2) + (1,) * (n - 4), flip(r_n2_2)),
        _ShapeRule("n-2,1^2", 4, lambda n: (n - 2, 1, 1), r_n2_11),
        _ShapeRule("3,1^(n-3)", 4, lambda n: (3,) + (1,) * (n - 3), flip(r_n2_11)),
        _ShapeRule("n-3,3", 7, lambda n: (n - 3, 3), r_n3_3),
        _ShapeRule("2^3,1^(n-6)", 7, lambda n: (2, 2, 2) + (1,) * (n - 6), flip(r_n3_3)),
        _ShapeRule("n-3,1^3", 5, lambda n: (n - 3, 1, 1, 1), r_n3_111),
        _ShapeRule("4,1^(n-4)", 5, lambda n: (4,) + (1,) * (n - 4), flip(r_n3_111)),
        _ShapeRule("n-3,2,1", 6, lambda n: (n - 3, 2, 1), r_n3_21),
        _ShapeRule("3,2,1^(n-5)", 6, lambda n: (3, 2) + (1,) * (n - 5), flip(r_n3_21)),
    ]
    return {rule.shape_id: rule for rule in rules}


TABLE1_SHAPES: dict[str, _ShapeRule] = _rules()
TABLE1_SHAPE_IDS: tuple[str, ...] = tuple(TABLE1_SHAPES)


def concrete_shape(shape_id: str, n: int) -> Partition:
    """Instantiate one of the fourteen symbolic shapes at a concrete n."""
    rule = TABLE1_SHAPES.get(shape_id)
    if rule is None:
        raise ValueError(f"unknown shape {shape_id!r}; choose one of {', '.join(TABLE1_SHAPE_IDS)}")
    if n < rule.min_n:
        raise ValueError(f"shape {shape_id!r} needs n >= {rule.min_n}, got n = {n}")
    return validate_partition(rule.build(n))


def closed_form_table1(shape_id: str, n: int, k: int) -> int:
    """Closed-form eigenvalue for one of the fourteen low-dimension shapes.

    Exact rational evaluation, asserted integral.  The forms are only
    *guaranteed* to match the character recursion for 3k+1 < n and for
    k in {0, 1}; see :func:`in_asserted_regime`.
    """
    concrete_shape(shape_id, n)  # validates the shape id and its minimal n
    rule = TABLE1_SHAPES[shape_id]
    value = rule.ratio(n, k) * class_size(n, k)
    if value.denominator != 1:
        raise ArithmeticError(f"closed form for {shape_id!r} non-integral at n={n}, k={k}: {value}")
    return int(value)


def in_asserted_regime(n: int, k: int) -> bool:
    """Where the closed forms are proven to equal the character eigenvalues."""
    return 3 * k + 1 < n or k <= 1


def low_dimension_partitions(n: int) -> list[Partition]:
    """The fourteen concrete shapes at n (those valid at this n, deduplicated)."""
    out: dict[Partition, None] = {}
    for shape_id, rule in TABLE1_SHAPES.items():
        if n >= rule.min_n:
            out[validate_partition(rule.build(n))] = None
    return list(out)


# ---------------------------------------------------------------------------
# predicate checks and the lambda2 = (k-1)/(n-1) * valency sweep

@dataclass(frozen=True)
class HypothesisFlags:
    in_main_theorem_range: bool
    unique_rimhook_range: bool
    sqrtkfact_bound_holds: bool


def hypothesis_check(n: int, k: int) -> HypothesisFlags:
    """Predicate triple for the pair (n, k).

    * ``unique_rimhook_range``: 3k+1 < n, exact integers.
    * ``sqrtkfact_bound_holds``: k! (n-1)^2 <= 9 C(n,3)^2, exact integers
      (the square of sqrt(k!) <= 3/(n-1) * C(n,3)).
    * ``in_main_theorem_range``: k = 2 is its own small case; for k >= 3 the
      base-(k/e) log inequality k <= min(n, 2 log_{k/e}(n(n-2)/(2e)) - 1) is
      evaluated in double precision with a 1e-9 guard band (values inside the
      band are conservatively reported False).
    """
    if n < 3 or k < 0:
        raise ValueError(f"need n >= 3 and k >= 0, got n = {n}, k = {k}")
    unique = 3 * k + 1 < n
    sqrt_bound = factorial(k) * (n - 1) ** 2 <= 9 * comb(n, 3) ** 2
    if k == 2:
        in_range = True
    elif k < 2 or k > n:
        in_range = False
    else:
        arg = n * (n - 2) / (2 * math.e)
        if arg <= 1.0:
            in_range = False
        else:
            bound = 2 * math.log(arg) / math.log(k / math.e) - 1
            in_range = k <= min(n, bound - LOG_GUARD)
    return HypothesisFlags(in_range, unique, sqrt_bound)


@dataclass(frozen=True)
class ConjectureRecord:
    n: int
    k: int
    expected: int
    value: int
    witnesses: tuple[Partition, ...]
    value_matches: bool
    witness_found: bool

    @property
    def ok(self) -> bool:
        return self.value_matches and self.witness_found


def _conjecture_task(args: tuple[int, int]) -> ConjectureRecord:
    n, k = args
    expected = Fraction((k - 1) * class_size(n, k), n - 1)
    assert expected.denominator == 1
    result = lambda2(n, k)
    return ConjectureRecord(
        n=n,
        k=k,
        expected=int(expected),
        value=result.value,
        witnesses=result.witnesses,
        value_matches=result.value == int(expected),
        witness_found=(n - 1, 1) in result.witnesses,
    )


def conjecture_check(n_max: int, threads: int = 1) -> list[ConjectureRecord]:
    """Sweep 3 <= n <= n_max, 2 <= k <= n-2: does the second eigenvalue equal
    (k-1)/(n-1) * valency, with [n-1,1] among the witnesses?"""
    if n_max > resolve_max_n(None):
        raise SizeLimitError(
            f"conjecture_check is capped at n <= {resolve_max_n(None)} "
            f"(override with {MAX_N_ENV_VAR}), got n_max = {n_max}"
        )
    tasks = [(n, k) for n in range(3, n_max + 1) for k in range(2, n - 1)]
    if threads > 1 and len(tasks) >= 8:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(_conjecture_task, tasks))
    return [_conjecture_task(t) for t in tasks]


# ---------------------------------------------------------------------------
# serialization

def spectrum_to_json(n: int, k: int, entries: list[SpectrumEntry]) -> str:
    """Machine format; arbitrarily large integers travel as decimal strings."""
    return json.dumps(
        {
            "n": n,
            "k": k,
            "valency": str(class_size(n, k)),
            "entries": [
                {
                    "partition": format_partition(e.partition),
                    "eigenvalue": str(e.eigenvalue),
                    "multiplicity": str(e.multiplicity),
                }
                for e in entries
            ],
        }
    )


def spectrum_to_csv(entries: list[SpectrumEntry]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["partition", "eigenvalue", "multiplicity"])
    for e in entries:
        writer.writerow([format_partition(e.partition), str(e.eigenvalue), str(e.multiplicity)])
    return buf.getvalue()
