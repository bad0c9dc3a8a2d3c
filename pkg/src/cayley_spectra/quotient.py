"""Equitable-partition quotient matrices and their exact eigenvalues.

Partitioning Cay(Sym(n), C(n,k)) into the n cosets of a point stabilizer is
equitable; the quotient matrix is alpha*(J - I) + beta*I with integer entries
counting class members between cosets, and its two eigenvalues come out of
that symbolic form exactly — nothing here touches floating point.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from math import comb, factorial

import numpy as np

from .errors import SizeLimitError
from .permutations import CayleyOperator, GroupSlice, Permutation, coset_count
from .spectra import class_size

#: vertex cap for explicit equitable-partition verification (|Sym(7)| = 5040)
EQUITABLE_VERIFY_LIMIT = 5040


@dataclass(frozen=True)
class QuotientMatrix:
    order: int
    diagonal: int
    off_diagonal: int
    provenance: str

    @property
    def entries(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            tuple(self.diagonal if r == c else self.off_diagonal for c in range(self.order))
            for r in range(self.order)
        )

    @property
    def row_sums(self) -> tuple[int, ...]:
        s = self.diagonal + (self.order - 1) * self.off_diagonal
        return (s,) * self.order

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        for row in self.entries:
            writer.writerow([str(v) for v in row])
        return buf.getvalue()


def quotient_matrix_gamma(n: int, k: int) -> QuotientMatrix:
    """Quotient of Cay(Sym(n), C(n,k)) over the n point-stabilizer cosets.

    Entry (s, t) counts the (n-k)-cycles sending s to t: the diagonal is
    C(n-1, n-k) (n-k-1)! and every off-diagonal entry is C(n-2, n-k-2) (n-k-2)!.
    """
    class_size(n, k)  # validates 0 <= k <= n-2
    diagonal = comb(n - 1, n - k) * factorial(n - k - 1)
    off_diagonal = comb(n - 2, n - k - 2) * factorial(n - k - 2)
    return QuotientMatrix(
        order=n,
        diagonal=diagonal,
        off_diagonal=off_diagonal,
        provenance=f"point-stabilizer cosets of Cay(Sym({n}), {n - k}-cycles)",
    )


def quotient_eigenvalues_gamma(n: int, k: int) -> tuple[int, int]:
    """The two eigenvalues of the quotient: the valency (all-ones vector) and
    diagonal - off_diagonal, with multiplicity n-1.  Exact integers."""
    q = quotient_matrix_gamma(n, k)
    top = q.diagonal + (n - 1) * q.off_diagonal
    assert top == class_size(n, k)
    return top, q.diagonal - q.off_diagonal


def quotient_lambda2_recursive(
    class_members: list[Permutation], slice_: GroupSlice, k: int
) -> int:
    """Exact second quotient eigenvalue for Cay(slice, T_k ∩ slice) where the
    support of every member of T_k covers {1..k}:

        |T_k ∩ slice fixing k+1|  -  |T_k ∩ slice sending k+2 to k+1|

    The two counts are the diagonal and off-diagonal entries of the quotient
    over the cosets of the stabilizer of k+1 (restricted to the free points).
    """
    if k < 0 or k + 2 > slice_.degree:
        raise ValueError(f"need 0 <= k <= degree-2, got k = {k}, degree = {slice_.degree}")
    fixing = coset_count(class_members, slice_, fixes=k + 1)
    moving = coset_count(class_members, slice_, maps=(k + 2, k + 1))
    return fixing - moving


def coset_cells(operator: CayleyOperator, point: int) -> list[list[int]]:
    """Vertex indices grouped by the image of ``point`` — the point-stabilizer
    coset partition."""
    values = operator.images_of(point)
    cells: dict[int, list[int]] = {}
    for vertex, value in enumerate(values):
        cells.setdefault(int(value), []).append(vertex)
    return [cells[v] for v in sorted(cells)]


def verify_equitable(operator: CayleyOperator, cells: list[list[int]]) -> bool:
    """Explicitly check that every vertex of a cell has the same number of
    neighbors in every other cell."""
    if operator.dim > EQUITABLE_VERIFY_LIMIT:
        raise SizeLimitError(
            f"equitable verification is capped at {EQUITABLE_VERIFY_LIMIT} vertices, "
            f"got {operator.dim}"
        )
    cell_of = np.full(operator.dim, -1, dtype=np.int64)
    for i, cell in enumerate(cells):
        for v in cell:
            if not 0 <= v < operator.dim or cell_of[v] != -1:
                raise ValueError("cells must partition the vertex set")
            cell_of[v] = i
    if (cell_of == -1).any():
        raise ValueError("cells must cover the vertex set")
    for i, cell in enumerate(cells):
        reference: list[int] | None = None
        for v in cell:
            counts = [0] * len(cells)
            for nb in operator.neighbors(v):
                counts[cell_of[nb]] += 1
            if reference is None:
                reference = counts
            elif counts != reference:
                return False
    return True
