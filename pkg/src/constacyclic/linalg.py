"""Gaussian elimination over GF(p^t) and GF(p).

One elimination routine serves both: it only needs ``add``, ``sub``, ``mul``
and ``inv`` from its arithmetic object, which is either a
:class:`~constacyclic.field.GaloisField` or the small :class:`ModP` adapter.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .exceptions import DimensionMismatch, RankDeficiency


class ModP:
    """Arithmetic of the prime field GF(p) on ints ``0 .. p-1``."""

    def __init__(self, p: int):
        self.p = p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def inv(self, a: int) -> int:
        return pow(a, -1, self.p)


def row_reduce(ops, rows: Sequence[Sequence[int]], ncols: int | None = None):
    """Reduced row echelon form with leftmost-nonzero pivoting.

    Returns ``(rref, pivots)`` where ``pivots[k]`` is the pivot column of row
    ``k``.  Only the first ``ncols`` columns are eligible as pivots (so an
    augmented column can be carried along).
    """
    rref, pivots, _ = _eliminate(ops, rows, ncols)
    return rref, pivots


def _eliminate(ops, rows, ncols=None):
    """:func:`row_reduce` that also counts field multiplications."""
    mat = [list(r) for r in rows]
    mults = 0
    if not mat:
        return mat, [], 0
    width = len(mat[0])
    if ncols is None:
        ncols = width
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        scale = ops.inv(mat[r][c])
        mat[r] = [ops.mul(scale, v) for v in mat[r]]
        mults += width
        pivot_row = mat[r]
        for i in range(len(mat)):
            f = mat[i][c]
            if i != r and f:
                mat[i] = [ops.sub(v, ops.mul(f, w)) for v, w in zip(mat[i], pivot_row)]
                mults += width
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat, pivots, mults


def rank(ops, rows: Sequence[Sequence[int]]) -> int:
    return len(row_reduce(ops, rows)[1])


@dataclass(frozen=True)
class LinearSolution:
    """Classification of ``A X = B`` by the rank test.

    ``status`` is ``"unique"``, ``"underdetermined"`` or ``"inconsistent"``.
    For consistent systems ``particular`` is one solution (free variables set
    to zero) and ``nullspace`` a basis of the homogeneous solutions.
    """

    status: str
    rank: int
    augmented_rank: int
    unknowns: int
    particular: tuple[int, ...] | None = None
    nullspace: tuple[tuple[int, ...], ...] = ()
    mults: int = 0

    @property
    def solution(self) -> tuple[int, ...] | None:
        return self.particular if self.status == "unique" else None


def solve_linear(
    ops, A: Sequence[Sequence[int]], B: Sequence[int], unknowns: int | None = None
) -> LinearSolution:
    """Solve ``A X = B`` exactly over the field behind ``ops``.

    ``unknowns`` is only needed when ``A`` has no rows.
    """
    if len(A) != len(B):
        raise DimensionMismatch(f"A has {len(A)} rows but B has {len(B)} entries")
    if unknowns is None:
        unknowns = len(A[0]) if A else 0
    if any(len(row) != unknowns for row in A):
        raise DimensionMismatch("ragged coefficient matrix")
    aug = [list(row) + [b] for row, b in zip(A, B)]
    rref, pivots, mults = _eliminate(ops, aug, ncols=unknowns)
    rank_a = len(pivots)
    inconsistent = any(row[unknowns] for row in rref[rank_a:])
    rank_ab = rank_a + (1 if inconsistent else 0)
    if inconsistent:
        return LinearSolution("inconsistent", rank_a, rank_ab, unknowns, mults=mults)

    particular = [0] * unknowns
    for k, c in enumerate(pivots):
        particular[c] = rref[k][unknowns]
    pivot_set = set(pivots)
    free = [c for c in range(unknowns) if c not in pivot_set]
    basis = []
    for fc in free:
        vec = [0] * unknowns
        vec[fc] = 1
        for k, c in enumerate(pivots):
            vec[c] = ops.sub(0, rref[k][fc])
        basis.append(tuple(vec))
    status = "unique" if rank_a == unknowns else "underdetermined"
    return LinearSolution(
        status, rank_a, rank_ab, unknowns, tuple(particular), tuple(basis), mults
    )


def mat_vec(ops, A: Sequence[Sequence[int]], x: Sequence[int]) -> list[int]:
    out = []
    for row in A:
        acc = 0
        for a, v in zip(row, x):
            if a and v:
                acc = ops.add(acc, ops.mul(a, v))
        out.append(acc)
    return out


def inverse(ops, A: Sequence[Sequence[int]]) -> list[list[int]]:
    n = len(A)
    aug = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(A)]
    rref, pivots = row_reduce(ops, aug, ncols=n)
    if len(pivots) != n:
        raise RankDeficiency("matrix is singular")
    return [row[n:] for row in rref]


def left_inverse_mod_p(matrix: Sequence[Sequence[int]], p: int) -> list[list[int]]:
    """``L`` with ``L @ matrix == I`` for a full-column-rank ``matrix`` over GF(p)."""
    ops = ModP(p)
    rows, cols = len(matrix), len(matrix[0])
    # Row-reduce [matrix | I]; the pivot rows of the right block form L.
    aug = [list(r) + [1 if i == j else 0 for j in range(rows)] for i, r in enumerate(matrix)]
    rref, pivots = row_reduce(ops, aug, ncols=cols)
    if len(pivots) != cols:
        raise RankDeficiency("matrix does not have full column rank")
    return [rref[k][cols:] for k in range(cols)]
