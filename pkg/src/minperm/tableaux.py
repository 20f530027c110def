"""Partitions, skew shapes, standard skew tableaux, and exact counting.

English convention throughout: row 1 is the top row, cells are addressed
(row, column) 1-indexed, and entries increase along rows and down columns.
A partition is a weakly decreasing tuple of positive integers.

Counting is exact.  The determinant route clears each matrix row by a
common factorial denominator and runs fraction-free integer elimination;
the independent oracle is a backtracking enumeration of the fillings.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import CapExceededError

DEFAULT_MAX_CELLS = 16


def check_partition(parts: Sequence[int]) -> tuple[int, ...]:
    """Validate a weakly decreasing sequence of positive parts; trailing
    zeros are tolerated and dropped."""
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    for i, x in enumerate(p):
        if x <= 0:
            raise ValueError(f"partition parts must be positive: {tuple(parts)}")
        if i and p[i - 1] < x:
            raise ValueError(f"partition parts must be weakly decreasing: {tuple(parts)}")
    return p


def conjugate(parts: Sequence[int]) -> tuple[int, ...]:
    """Transpose the diagram of a partition.

    >>> conjugate((3, 2, 2))
    (3, 3, 1)
    >>> conjugate((2, 2))
    (2, 2)
    """
    p = check_partition(parts)
    if not p:
        return ()
    return tuple(sum(1 for x in p if x >= c) for c in range(1, p[0] + 1))


@dataclass(frozen=True)
class SkewShape:
    """A skew shape outer/inner, with inner stored zero-padded to the outer
    length."""

    outer: tuple[int, ...]
    inner: tuple[int, ...] = ()

    def __post_init__(self):
        outer = check_partition(self.outer)
        inner = check_partition(self.inner)
        if len(inner) > len(outer):
            raise ValueError(f"inner partition {inner} is longer than outer {outer}")
        padded = inner + (0,) * (len(outer) - len(inner))
        for mu, lam in zip(padded, outer):
            if mu > lam:
                raise ValueError(f"inner partition {inner} is not contained in {outer}")
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", padded)

    @property
    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    @property
    def row_count(self) -> int:
        return len(self.outer)

    @property
    def column_count(self) -> int:
        return self.outer[0] if self.outer else 0

    def column_rows(self, col: int) -> range:
        """1-indexed rows whose cells include the 1-indexed column col; the
        set is always a contiguous interval."""
        lo = hi = None
        for i, (lam, mu) in enumerate(zip(self.outer, self.inner), start=1):
            if mu < col <= lam:
                if lo is None:
                    lo = i
                hi = i
        return range(0) if lo is None else range(lo, hi + 1)

    def conjugated(self) -> "SkewShape":
        return SkewShape(conjugate(self.outer), conjugate(self.inner))


def format_shape(shape: SkewShape) -> str:
    """Render "outer/inner" with comma-separated parts; an empty inner
    partition prints as the empty-set sign.

    >>> format_shape(SkewShape((6, 5, 2, 2), (3, 1)))
    '6,5,2,2/3,1'
    """
    outer = ",".join(map(str, shape.outer))
    inner_parts = [x for x in shape.inner if x]
    inner = ",".join(map(str, inner_parts)) if inner_parts else "∅"
    return f"{outer}/{inner}"


def parse_shape(text: str) -> SkewShape:
    """Parse the "outer/inner" shape format; the "/inner" half may be
    omitted, empty, or the empty-set sign."""

    def parse_parts(chunk: str, what: str) -> tuple[int, ...]:
        chunk = chunk.strip()
        if chunk in ("", "∅"):
            return ()
        try:
            return tuple(int(tok) for tok in chunk.split(","))
        except ValueError:
            raise ValueError(f"cannot parse {what} partition from {chunk!r}") from None

    head, _, tail = text.partition("/")
    return SkewShape(parse_parts(head, "outer"), parse_parts(tail, "inner"))


@dataclass(frozen=True)
class SkewTableau:
    """A filling of a skew shape.  rows[i] has length outer[i]; the first
    inner[i] entries are None, the rest are integers."""

    shape: SkewShape
    rows: tuple[tuple[int | None, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        if len(rows) != self.shape.row_count:
            raise ValueError(f"expected {self.shape.row_count} rows, got {len(rows)}")
        for i, row in enumerate(rows):
            lam, mu = self.shape.outer[i], self.shape.inner[i]
            if len(row) != lam:
                raise ValueError(f"row {i + 1} must have {lam} entries, got {len(row)}")
            for c, x in enumerate(row, start=1):
                if c <= mu:
                    if x is not None:
                        raise ValueError(f"cell ({i + 1},{c}) lies inside the inner shape")
                elif not isinstance(x, int):
                    raise ValueError(f"cell ({i + 1},{c}) must hold an integer, got {x!r}")
        object.__setattr__(self, "rows", rows)

    def entry(self, row: int, col: int) -> int:
        """1-indexed access; raises for cells outside the skew shape."""
        if not (1 <= row <= self.shape.row_count
                and self.shape.inner[row - 1] < col <= self.shape.outer[row - 1]):
            raise ValueError(f"cell ({row},{col}) is outside the shape")
        return self.rows[row - 1][col - 1]


def is_standard(t: SkewTableau) -> bool:
    """Entries are exactly 1..N and strictly increase along rows and down
    columns."""
    values = sorted(x for row in t.rows for x in row if x is not None)
    if values != list(range(1, t.shape.size + 1)):
        return False
    for row in t.rows:
        filled = [x for x in row if x is not None]
        if any(a >= b for a, b in zip(filled, filled[1:])):
            return False
    outer, inner = t.shape.outer, t.shape.inner
    for i in range(1, len(outer)):
        top, bot = t.rows[i - 1], t.rows[i]
        for c in range(inner[i - 1], outer[i]):
            if not top[c] < bot[c]:
                return False
    return True


def shape_is_two_regular(shape: SkewShape) -> bool:
    """Every column has at least two cells and adjacent columns share
    exactly two rows."""
    cols = shape.column_count
    if cols == 0:
        return False
    spans = [shape.column_rows(c) for c in range(1, cols + 1)]
    if any(len(span) < 2 for span in spans):
        return False
    for left, right in zip(spans, spans[1:]):
        overlap = min(left.stop, right.stop) - max(left.start, right.start)
        if overlap != 2:
            return False
    return True


def is_two_regular(t: SkewTableau) -> bool:
    return shape_is_two_regular(t.shape)


def shape_from_runs(runs: Sequence[int]) -> SkewShape:
    """The skew shape whose transposed diagram has column lengths runs with
    adjacent columns overlapping in exactly two rows.

    Row i of the result has length runs[i-1]; the drawn tableau's column j
    corresponds to row j here, so callers wanting the drawn orientation
    conjugate the result.

    >>> shape_from_runs((4, 2, 5, 3, 2))
    SkewShape(outer=(8, 6, 6, 3, 2), inner=(4, 4, 1, 0, 0))
    >>> shape_from_runs((2, 2, 2))
    SkewShape(outer=(2, 2, 2), inner=(0, 0, 0))
    """
    a = tuple(int(x) for x in runs)
    if not a:
        raise ValueError("run lengths must be nonempty")
    if any(x < 2 for x in a):
        raise ValueError(f"every run length must be >= 2, got {a}")
    k = len(a)
    lam = [0] * k
    suffix = 0
    for i in range(k - 1, -1, -1):
        suffix += a[i]
        lam[i] = suffix - 2 * (k - 1 - i)
    mu = [lam[i] - a[i] for i in range(k)]
    return SkewShape(tuple(lam), tuple(mu))


def _det_bareiss(m: list[list[int]]) -> int:
    """Fraction-free integer elimination; every division is exact."""
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = pivot
    return sign * m[-1][-1]


def det_rational(matrix: Sequence[Sequence[Fraction]]) -> Fraction:
    """Exact determinant of a rational matrix.  Each row is cleared by the
    least common multiple of its denominators (for rows of factorial
    reciprocals that is the largest factorial present), the integer matrix
    goes through Bareiss elimination, and the scaling divides back exactly."""
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    scale = 1
    rows: list[list[int]] = []
    for row in matrix:
        if len(row) != n:
            raise ValueError("matrix must be square")
        entries = [Fraction(x) for x in row]
        mult = math.lcm(*(e.denominator for e in entries))
        scale *= mult
        rows.append([int(e * mult) for e in entries])
    return Fraction(_det_bareiss(rows), scale)


def skew_syt_count(shape: SkewShape) -> int:
    """Exact number of standard fillings of a skew shape via the classical
    factorial-reciprocal determinant: with r outer rows,

        count = n! * det( 1 / (outer[i] - inner[j] - i + j)! ),  1 <= i,j <= r,

    where 1/m! = 0 for m < 0.  A non-integral or negative result signals an
    arithmetic bug and raises.

    >>> skew_syt_count(SkewShape((2, 2)))
    2
    >>> skew_syt_count(SkewShape((3, 3)))
    5
    """
    outer, inner = shape.outer, shape.inner
    r = len(outer)
    if r == 0:
        return 1
    matrix = []
    for i in range(r):
        row = []
        for j in range(r):
            e = outer[i] - inner[j] - i + j
            row.append(Fraction(1, math.factorial(e)) if e >= 0 else Fraction(0))
        matrix.append(row)
    value = math.factorial(shape.size) * det_rational(matrix)
    if value.denominator != 1 or value < 0:
        raise ArithmeticError(
            f"determinant count for {format_shape(shape)} is {value}, "
            "expected a nonnegative integer")
    return int(value)


def hook_length(parts: Sequence[int], row: int, col: int) -> int:
    """Hook length of the 1-indexed cell (row, col) of a straight shape:
    parts[row-1] + conjugate(parts)[col-1] - row - col + 1.

    >>> hook_length((3, 2, 2), 1, 1)
    5
    >>> hook_length((3, 2, 2), 3, 2)
    1
    """
    lam = check_partition(parts)
    if not (1 <= row <= len(lam) and 1 <= col <= lam[row - 1]):
        raise ValueError(f"cell ({row},{col}) is outside the partition {lam}")
    return lam[row - 1] + conjugate(lam)[col - 1] - row - col + 1


def hook_count(parts: Sequence[int]) -> int:
    """Number of standard Young tableaux of a straight shape by the hook
    length formula; the division is exact and asserted.

    >>> hook_count((3, 3, 1))
    21
    >>> hook_count((1, 1, 1, 1))
    1
    """
    lam = check_partition(parts)
    conj = conjugate(lam)
    product = 1
    for i, length in enumerate(lam, start=1):
        for j in range(1, length + 1):
            product *= lam[i - 1] + conj[j - 1] - i - j + 1
    quotient, rem = divmod(math.factorial(sum(lam)), product)
    if rem:
        raise ArithmeticError(f"hook product {product} does not divide {sum(lam)}!")
    return quotient


def _check_cells_cap(shape: SkewShape, max_cells: int | None) -> None:
    limit = DEFAULT_MAX_CELLS if max_cells is None else int(max_cells)
    if shape.size > limit:
        raise CapExceededError(
            f"shape {format_shape(shape)} has {shape.size} cells, above the "
            f"enumeration cap {limit}")


def skew_standard_tableaux(shape: SkewShape,
                           max_cells: int | None = None) -> Iterator[SkewTableau]:
    """Backtracking enumeration of every standard filling, each exactly
    once, in a fixed order: values 1..N are placed in turn, trying candidate
    rows from the top down.  Refuses shapes above the cell cap (default 16).

    >>> [t.rows for t in skew_standard_tableaux(SkewShape((2, 2)))]
    [((1, 2), (3, 4)), ((1, 3), (2, 4))]
    """
    _check_cells_cap(shape, max_cells)
    outer, inner = shape.outer, shape.inner
    r = len(outer)
    nxt = list(inner)
    grid = [[None] * outer[i] for i in range(r)]
    total = shape.size

    def place(v: int) -> Iterator[SkewTableau]:
        if v > total:
            yield SkewTableau(shape, tuple(tuple(row) for row in grid))
            return
        for i in range(r):
            c = nxt[i]
            if c >= outer[i]:
                continue
            if i > 0 and inner[i - 1] <= c < outer[i - 1] and nxt[i - 1] <= c:
                continue  # the cell above exists and is still empty
            nxt[i] = c + 1
            grid[i][c] = v
            yield from place(v + 1)
            grid[i][c] = None
            nxt[i] = c

    return place(1)


def count_standard_fillings(shape: SkewShape, max_cells: int | None = None) -> int:
    """Backtracking count of the standard fillings: the same traversal as
    skew_standard_tableaux without materializing tableaux, usable as an
    independent oracle against the determinant on larger sweeps."""
    _check_cells_cap(shape, max_cells)
    outer, inner = shape.outer, shape.inner
    r = len(outer)
    nxt = list(inner)
    count = 0

    def place(remaining: int) -> None:
        nonlocal count
        if remaining == 0:
            count += 1
            return
        for i in range(r):
            c = nxt[i]
            if c >= outer[i]:
                continue
            if i > 0 and inner[i - 1] <= c < outer[i - 1] and nxt[i - 1] <= c:
                continue
            nxt[i] = c + 1
            place(remaining - 1)
            nxt[i] = c

    place(shape.size)
    return count


def tableau_to_json(t: SkewTableau) -> dict:
    """JSON-ready dict: the shape text plus rows with nulls in inner cells."""
    return {"shape": format_shape(t.shape), "rows": [list(row) for row in t.rows]}


def tableau_from_json(data: dict) -> SkewTableau:
    try:
        shape = parse_shape(data["shape"])
        rows = tuple(tuple(row) for row in data["rows"])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"tableau JSON needs 'shape' and 'rows': {exc}") from None
    return SkewTableau(shape, rows)
