"""M x N arrays as elements of F[x, y] / (x^M - lambda1, y^N - lambda2).

Entry ``(i, j)`` of an :class:`ArrayMN` is the coefficient of ``x^i y^j``.
Arrays are immutable; every operation returns a new array.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .exceptions import IndexOutOfRange, ParseError, ShapeMismatch
from .field import GaloisField


@dataclass(frozen=True)
class ArrayMN:
    field: GaloisField
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.entries)
        if not rows or not rows[0]:
            raise ShapeMismatch("arrays must have at least one row and one column")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ShapeMismatch("ragged array")
        if any(v not in self.field for r in rows for v in r):
            raise ValueError("array entry outside the field")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def zeros(cls, field: GaloisField, m: int, n: int) -> ArrayMN:
        return cls(field, ((0,) * n,) * m)

    @classmethod
    def from_dict(cls, field: GaloisField, m: int, n: int, values: dict) -> ArrayMN:
        """Array with ``values[(i, j)]`` at the given positions and zeros elsewhere."""
        grid = [[0] * n for _ in range(m)]
        for (i, j), v in values.items():
            grid[i][j] = v
        return cls(field, grid)

    @classmethod
    def from_function(cls, field: GaloisField, m: int, n: int, fn: Callable[[int, int], int]):
        return cls(field, [[fn(i, j) for j in range(n)] for i in range(m)])

    @property
    def m(self) -> int:
        return len(self.entries)

    @property
    def n(self) -> int:
        return len(self.entries[0])

    @property
    def shape(self) -> tuple[int, int]:
        return self.m, self.n

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def positions(self) -> Iterable[tuple[int, int]]:
        return ((i, j) for i in range(self.m) for j in range(self.n))

    def support(self) -> list[tuple[int, int]]:
        return [(i, j) for i, j in self.positions() if self.entries[i][j]]

    def weight(self) -> int:
        return sum(1 for row in self.entries for v in row if v)

    def is_zero(self) -> bool:
        return not any(v for row in self.entries for v in row)

    def is_base(self) -> bool:
        """True iff every entry lies in GF(p)."""
        return all(self.field.is_base(v) for row in self.entries for v in row)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def flat(self) -> list[int]:
        return [v for row in self.entries for v in row]

    def _check_same(self, other: ArrayMN) -> None:
        if self.shape != other.shape or self.field != other.field:
            raise ShapeMismatch(f"shapes {self.shape} and {other.shape} differ")

    def __add__(self, other: ArrayMN) -> ArrayMN:
        self._check_same(other)
        f = self.field
        return type(self)(
            f, [[f.add(a, b) for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)]
        )

    def __sub__(self, other: ArrayMN) -> ArrayMN:
        self._check_same(other)
        f = self.field
        return type(self)(
            f, [[f.sub(a, b) for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)]
        )

    def __neg__(self) -> ArrayMN:
        f = self.field
        return type(self)(f, [[f.neg(a) for a in r] for r in self.entries])

    def scale(self, c: int) -> ArrayMN:
        f = self.field
        return type(self)(f, [[f.mul(c, a) for a in r] for r in self.entries])

    def hadamard(self, other: ArrayMN) -> ArrayMN:
        """Entrywise product."""
        self._check_same(other)
        f = self.field
        return type(self)(
            f, [[f.mul(a, b) for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)]
        )


def _horner(field: GaloisField, coeffs: Sequence[int], x: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = field.add(field.mul(acc, x), c)
    return acc


def eval2(arr: ArrayMN, a: int, b: int) -> int:
    """``sum c[i][j] * a^i * b^j`` by Horner's rule in both variables."""
    f = arr.field
    row_values = [_horner(f, row, b) for row in arr.entries]
    return _horner(f, row_values, a)


def shift_column(arr: ArrayMN, lambda1: int) -> ArrayMN:
    """Multiply by ``x``: rows move down one place, the last wraps scaled by lambda1."""
    f = arr.field
    last = [f.mul(lambda1, v) for v in arr.entries[-1]]
    return ArrayMN(f, [last, *arr.entries[:-1]])


def shift_row(arr: ArrayMN, lambda2: int) -> ArrayMN:
    """Multiply by ``y``: columns move right one place, the last wraps scaled by lambda2."""
    f = arr.field
    return ArrayMN(f, [[f.mul(lambda2, row[-1]), *row[:-1]] for row in arr.entries])


def ring_mul(a: ArrayMN, b: ArrayMN, lambda1: int, lambda2: int) -> ArrayMN:
    """Schoolbook product in F[x, y] / (x^M - lambda1, y^N - lambda2)."""
    if a.shape != b.shape or a.field != b.field:
        raise ShapeMismatch(f"shapes {a.shape} and {b.shape} differ")
    f = a.field
    m, n = a.shape
    out = [[0] * n for _ in range(m)]
    b_terms = [(k, l, v) for (k, l) in b.positions() if (v := b.entries[k][l])]
    for i, j in a.support():
        u = a.entries[i][j]
        for k, l, v in b_terms:
            c = f.mul(u, v)
            r, s = i + k, j + l
            if r >= m:
                r -= m
                c = f.mul(c, lambda1)
            if s >= n:
                s -= n
                c = f.mul(c, lambda2)
            out[r][s] = f.add(out[r][s], c)
    return ArrayMN(f, out)


def row_poly(arr: ArrayMN, i: int) -> list[int]:
    if not 0 <= i < arr.m:
        raise IndexOutOfRange(f"row {i} outside 0..{arr.m - 1}")
    return list(arr.entries[i])


def col_poly(arr: ArrayMN, j: int) -> list[int]:
    if not 0 <= j < arr.n:
        raise IndexOutOfRange(f"column {j} outside 0..{arr.n - 1}")
    return [row[j] for row in arr.entries]


# -- array file format -------------------------------------------------------


def format_array(arr: ArrayMN, style: str = "auto") -> str:
    """Render ``arr`` as ``"M N"`` followed by M lines of N tokens.

    ``style="power"`` writes ``0`` / ``a^k`` tokens, ``style="digits"`` writes
    GF(p) digits, and ``"auto"`` uses digits whenever every entry is in GF(p).
    """
    f = arr.field
    if style == "auto":
        style = "digits" if arr.is_base() else "power"
    if style == "digits":
        if not arr.is_base():
            raise ValueError("digit style needs every entry in GF(p)")
        fmt = str
    elif style == "power":
        fmt = f.format_element
    else:
        raise ValueError(f"unknown style {style!r}")
    lines = [f"{arr.m} {arr.n}"]
    lines += [" ".join(fmt(v) for v in row) for row in arr.entries]
    return "\n".join(lines) + "\n"


def parse_array(field: GaloisField, text: str) -> ArrayMN:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty array file")
    header = lines[0].split()
    if len(header) != 2 or not all(h.isdigit() for h in header):
        raise ParseError(f"bad array header {lines[0]!r}")
    m, n = int(header[0]), int(header[1])
    if len(lines) != m + 1:
        raise ParseError(f"expected {m} rows, found {len(lines) - 1}")
    grid = []
    for ln in lines[1:]:
        tokens = ln.split()
        if len(tokens) != n:
            raise ParseError(f"expected {n} entries in row {ln!r}")
        grid.append([field.parse_element(tok) for tok in tokens])
    return ArrayMN(field, grid)
