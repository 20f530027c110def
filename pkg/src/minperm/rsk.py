"""Row insertion, the RSK correspondence, elementary Knuth moves, and the
normal form for minimal permutations of odd length with one double descent.

Straight-shape tableaux here are plain tuples of row tuples on distinct
integers.  Cells are addressed (row, column), 1-indexed, row 1 on top.

A minimal permutation of length 2n+1 with n+1 descents has exactly one
adjacent descent pair, at positions (2i-1, 2i) for some 1 <= i <= n.  Such
a word is Knuth-equivalent to the word that keeps its first 2i letters and
then lists the remaining even-position letters followed by the odd-position
ones; the chain of elementary moves realizing this is produced explicitly.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from typing import Sequence

from .bijection import tableau_to_perm
from .permutations import descent_set, minimality_violation, standardize
from .tableaux import SkewShape, SkewTableau

Rows = tuple[tuple[int, ...], ...]
Cell = tuple[int, int]

_PATTERNS = {"bac": (2, 1, 3), "bca": (2, 3, 1), "acb": (1, 3, 2), "cab": (3, 1, 2)}
_SWAP_FIRST = {"acb", "cab"}
_INVERSE = {"bac": "bca", "bca": "bac", "acb": "cab", "cab": "acb"}


def row_insert(rows: Sequence[Sequence[int]], value: int) -> tuple[Rows, tuple[Cell, ...]]:
    """Classic bumping insertion.  Returns the new tableau and the insertion
    path, one cell per row touched, ending at the newly created cell.

    >>> row_insert((), 5)
    (((5,),), ((1, 1),))
    >>> row_insert(((1, 4), (2,)), 3)
    (((1, 3), (2, 4)), ((1, 2), (2, 2)))
    """
    tableau = [list(r) for r in rows]
    for row in tableau:
        if value in row:
            raise ValueError(f"value {value} is already present")
    path = []
    x = value
    r = 0
    while True:
        if r == len(tableau):
            tableau.append([x])
            path.append((r + 1, 1))
            break
        row = tableau[r]
        pos = bisect.bisect_left(row, x)
        path.append((r + 1, pos + 1))
        if pos == len(row):
            row.append(x)
            break
        x, row[pos] = row[pos], x
        r += 1
    return tuple(tuple(row) for row in tableau), tuple(path)


def rsk_trace(word: Sequence[int]) -> tuple[Rows, Rows, tuple[tuple[Cell, ...], ...]]:
    """Full RSK run on a word of distinct integers: the insertion tableau,
    the recording tableau, and every insertion path."""
    w = tuple(word)
    if len(set(w)) != len(w):
        raise ValueError(f"entries are not distinct: {w}")
    p: Rows = ()
    q: list[list[int]] = []
    paths = []
    for step, x in enumerate(w, start=1):
        p, path = row_insert(p, x)
        paths.append(path)
        r, _ = path[-1]
        if r > len(q):
            q.append([])
        q[r - 1].append(step)
    return p, tuple(tuple(row) for row in q), tuple(paths)


def rsk(word: Sequence[int]) -> tuple[Rows, Rows]:
    """Insertion and recording tableaux of the same shape; the word is
    recoverable through rsk_inverse.

    >>> rsk((2, 1, 4, 3))
    (((1, 3), (2, 4)), ((1, 3), (2, 4)))
    >>> rsk((3, 2, 1, 5, 4))[0]
    ((1, 4), (2, 5), (3,))
    """
    p, q, _ = rsk_trace(word)
    return p, q


def insertion_tableau(word: Sequence[int]) -> Rows:
    return rsk_trace(word)[0]


def rsk_inverse(p: Rows, q: Rows) -> tuple[int, ...]:
    """Recover the inserted word from an (insertion, recording) pair."""
    p_rows = [list(r) for r in p]
    positions = {}
    for i, row in enumerate(q):
        for j, v in enumerate(row):
            positions[v] = (i, j)
    if sorted(positions) != list(range(1, sum(map(len, q)) + 1)):
        raise ValueError("recording tableau is not standard on 1..n")
    word = []
    for step in range(len(positions), 0, -1):
        i, j = positions[step]
        if j != len(p_rows[i]) - 1:
            raise ValueError("recording tableau does not match the insertion shape")
        x = p_rows[i].pop()
        for r in range(i - 1, -1, -1):
            row = p_rows[r]
            pos = bisect.bisect_left(row, x) - 1
            if pos < 0:
                raise ValueError("tableaux are not column-strict")
            x, row[pos] = row[pos], x
        word.append(x)
        if not p_rows[i]:
            p_rows.pop()
    return tuple(reversed(word))


def inverse_bump(rows: Sequence[Sequence[int]], corner: Cell) -> tuple[Rows, int]:
    """Remove a removable outer corner and reverse the bumping, returning
    the shrunken tableau and the evicted value.  Exact inverse of
    row_insert: reinserting the evicted value recreates the input.

    >>> inverse_bump(((1, 3), (2, 4)), (2, 2))
    (((1, 4), (2,)), 3)
    """
    tableau = [list(r) for r in rows]
    r, c = corner
    if not (1 <= r <= len(tableau) and c == len(tableau[r - 1])):
        raise ValueError(f"cell {corner} is not the last cell of its row")
    if r < len(tableau) and len(tableau[r]) >= c:
        raise ValueError(f"cell {corner} has a cell below it, not a removable corner")
    x = tableau[r - 1].pop()
    for i in range(r - 2, -1, -1):
        row = tableau[i]
        pos = bisect.bisect_left(row, x) - 1
        if pos < 0:
            raise ValueError("rows are not column-strict above the corner")
        x, row[pos] = row[pos], x
    if not tableau[-1]:
        tableau.pop()
    return tuple(tuple(row) for row in tableau), x


@dataclass(frozen=True)
class KnuthMove:
    """An elementary Knuth transformation acting on the triple that starts
    at the 1-indexed position.  kind names the triple's pattern before the
    move with letters a < b < c: "bac" sends b a c to b c a, "acb" sends
    a c b to c a b, and "bca"/"cab" are their inverses."""

    position: int
    kind: str

    def __post_init__(self):
        if self.kind not in _PATTERNS:
            raise ValueError(f"unknown move kind {self.kind!r}")

    def inverse(self) -> "KnuthMove":
        return KnuthMove(self.position, _INVERSE[self.kind])


def apply_knuth_move(word: Sequence[int], move: KnuthMove) -> tuple[int, ...]:
    """Apply one elementary Knuth move; the insertion tableau is unchanged.

    Raises ValueError naming the pattern actually found when the triple
    does not match the move's kind.
    """
    w = tuple(word)
    t = move.position
    if not 1 <= t <= len(w) - 2:
        raise ValueError(f"no triple starts at position {t} in a word of length {len(w)}")
    triple = w[t - 1:t + 2]
    found = standardize(triple)
    if found != _PATTERNS[move.kind]:
        names = {v: k for k, v in _PATTERNS.items()}
        raise ValueError(f"triple {triple} at position {t} has pattern "
                         f"{names.get(found, found)}, not {move.kind}")
    if move.kind in _SWAP_FIRST:
        return w[:t - 1] + (w[t], w[t - 1]) + w[t + 1:]
    return w[:t] + (w[t + 1], w[t]) + w[t + 2:]


def legal_knuth_moves(word: Sequence[int]) -> list[KnuthMove]:
    """All elementary moves applicable to the word."""
    w = tuple(word)
    names = {v: k for k, v in _PATTERNS.items()}
    moves = []
    for t in range(1, len(w) - 1):
        kind = names.get(standardize(w[t - 1:t + 2]))
        if kind is not None:
            moves.append(KnuthMove(t, kind))
    return moves


def double_descent_class(perm: Sequence[int]) -> tuple[int, int]:
    """Validate that perm is minimal of odd length 2n+1 with n+1 descents
    and a single adjacent descent pair at positions (2i-1, 2i); return
    (n, i)."""
    w = tuple(perm)
    reason = minimality_violation(w)
    if reason is not None:
        raise ValueError(f"{w} is not minimal: {reason}")
    if len(w) % 2 == 0:
        raise ValueError(f"length must be odd, got {len(w)}")
    n = (len(w) - 1) // 2
    descents = descent_set(w)
    if len(descents) != n + 1:
        raise ValueError(f"{w} has {len(descents)} descents, expected {n + 1}")
    pairs = sorted(j for j in descents if j + 1 in descents)
    if len(pairs) != 1:
        raise ValueError(f"{w} has adjacent descent pairs starting at {pairs}, "
                         "expected exactly one")
    start = pairs[0]
    if start % 2 == 0:
        raise ValueError(f"adjacent descent pair starts at even position {start}")
    return n, (start + 1) // 2


def even_odd_split(perm: Sequence[int]) -> tuple[int, ...]:
    """The Knuth-equivalent word keeping the first 2i letters, then the
    remaining even-position letters in order, then the odd-position ones.

    >>> even_odd_split((3, 2, 1, 5, 4))
    (3, 2, 5, 1, 4)
    >>> even_odd_split((3, 2, 1))
    (3, 2, 1)
    """
    w = tuple(perm)
    n, i = double_descent_class(w)
    return w[:2 * i] + w[2 * i + 1:2 * n:2] + w[2 * i::2]


def knuth_chain(perm: Sequence[int]) -> list[KnuthMove]:
    """Elementary moves carrying the word to even_odd_split(perm).

    Sweep s first pulls one even-position letter forward with a "bac" move
    at position 2i+s-1, then pushes the odd-position letters one slot back
    with "acb" moves marching right two positions at a time.  Legality of
    every move is enforced while the chain is built.

    >>> knuth_chain((3, 2, 1))
    []
    >>> [(m.position, m.kind) for m in knuth_chain((3, 2, 1, 5, 4))]
    [(2, 'bac')]
    """
    w = tuple(perm)
    n, i = double_descent_class(w)
    moves: list[KnuthMove] = []
    word = w
    for s in range(1, n - i + 1):
        sweep = [KnuthMove(2 * i + s - 1, "bac")]
        sweep.extend(KnuthMove(q, "acb") for q in range(2 * i + s + 2, 2 * n - s + 1, 2))
        for move in sweep:
            word = apply_knuth_move(word, move)
            moves.append(move)
    if word != even_odd_split(w):
        raise AssertionError(f"sweep schedule for {w} ended at {word}")
    return moves


def minimal_to_syt(perm: Sequence[int]) -> Rows:
    """Insertion tableau of a class member.  Its shape is (n, n+1-k, k) for
    some k at most min(i, n-i+1); anything else signals a bug.

    >>> minimal_to_syt((3, 2, 1, 5, 4))
    ((1, 4), (2, 5), (3,))
    """
    n, i = double_descent_class(perm)
    p = insertion_tableau(perm)
    shape = tuple(len(row) for row in p)
    k = shape[2] if len(shape) == 3 else 0
    if len(shape) != 3 or shape != (n, n + 1 - k, k) or not 1 <= k <= min(i, n - i + 1):
        raise AssertionError(f"insertion tableau of {tuple(perm)} has shape {shape}, "
                             f"outside the (n, n+1-k, k) family for i={i}")
    return p


def syt_to_minimal(rows: Sequence[Sequence[int]], i: int) -> tuple[int, ...]:
    """Inverse of minimal_to_syt for a target double-descent index i.

    The cells outside the two-row shape (n, i) are evicted from northeast
    to southwest by inverse bumping; the evicted values, stacked right to
    left as a new top row over the remaining two rows, form a 2-regular
    skew tableau whose column reading is the reconstructed permutation.
    The forward map is re-applied to confirm the round trip.  The same
    tableau can be inverted for several i, so i is an explicit argument.
    """
    p = tuple(tuple(r) for r in rows)
    if len(p) != 3:
        raise ValueError(f"expected a three-row tableau, got {len(p)} rows")
    n, k = len(p[0]), len(p[2])
    if len(p[1]) != n + 1 - k:
        raise ValueError(f"expected shape (n, n+1-k, k), got {tuple(map(len, p))}")
    if not 1 <= k <= min(i, n - i + 1):
        raise ValueError(f"third row length {k} is incompatible with i={i}")
    targets = [(2, c) for c in range(n + 1 - k, i, -1)]
    targets += [(3, c) for c in range(k, 0, -1)]
    evicted = []
    current: Rows = p
    for cell in targets:
        current, value = inverse_bump(current, cell)
        evicted.append(value)
    top = (None,) * (i - 1) + tuple(reversed(evicted))
    skew = SkewTableau(SkewShape((n, n, i), (i - 1,)), (top, current[0], current[1]))
    perm = tableau_to_perm(skew)
    if minimal_to_syt(perm) != p or double_descent_class(perm) != (n, i):
        raise ValueError(f"tableau {p} with i={i} fails the forward round trip")
    return perm
