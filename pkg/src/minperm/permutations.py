"""Permutations in one-line notation and the minimal-permutation predicates.

A permutation of length n is a tuple containing each of 1..n exactly once.
Positions are 1-indexed: position i (1 <= i <= n-1) is a descent of w when
w[i-1] > w[i] in 0-indexed access, and an ascent when w[i-1] < w[i].

A permutation with d descents is *minimal* when no strictly shorter
permutation with exactly d descents occurs in it as a pattern.  Structurally
this holds exactly when the word starts and ends with a descent and every
ascent at position i satisfies 2 <= i <= n-2 with the window of four
elements around it of type 2143 or 3142.  Both the structural test and the
definitional deletion oracle are provided; their agreement is a test, not
an assumption.
"""

from __future__ import annotations

import itertools
import os
from typing import Iterable, Iterator, Sequence

from .errors import CapExceededError

DEFAULT_MAX_BRUTE_N = 11
MAX_BRUTE_N_ENV = "MINPERM_MAX_BRUTE_N"


def is_permutation(word: Sequence[int]) -> bool:
    """Check that word contains each of 1..len(word) exactly once.

    >>> is_permutation((2, 1, 4, 3))
    True
    >>> is_permutation((1, 3))
    False
    """
    n = len(word)
    seen = [False] * (n + 1)
    for x in word:
        if not isinstance(x, int) or not 1 <= x <= n or seen[x]:
            return False
        seen[x] = True
    return True


def check_permutation(word: Iterable[int]) -> tuple[int, ...]:
    """Validate word and return it as a tuple; ValueError if it is not a
    permutation of 1..n."""
    w = tuple(word)
    if not w:
        raise ValueError("a permutation must have length >= 1")
    if not is_permutation(w):
        raise ValueError(f"not a permutation of 1..{len(w)}: {w}")
    return w


def standardize(word: Sequence[int]) -> tuple[int, ...]:
    """Relabel distinct integers order-isomorphically onto 1..n.

    >>> standardize((9, 4, 2, 5))
    (4, 2, 1, 3)
    >>> standardize((3, 5, 4, 9))
    (1, 3, 2, 4)
    """
    rank = {v: r for r, v in enumerate(sorted(word), start=1)}
    if len(rank) != len(word):
        raise ValueError(f"entries are not distinct: {tuple(word)}")
    return tuple(rank[v] for v in word)


def descent_set(perm: Sequence[int]) -> set[int]:
    """Positions i (1-indexed, i <= n-1) where perm steps down.

    >>> sorted(descent_set((3, 1, 4, 5, 7, 2, 6)))
    [1, 5]
    """
    return {i for i in range(1, len(perm)) if perm[i - 1] > perm[i]}


def ascent_set(perm: Sequence[int]) -> set[int]:
    """Positions i (1-indexed, i <= n-1) where perm steps up; complementary
    to descent_set inside 1..n-1."""
    return {i for i in range(1, len(perm)) if perm[i - 1] < perm[i]}


def descent_count(perm: Sequence[int]) -> int:
    c = 0
    for i in range(1, len(perm)):
        if perm[i - 1] > perm[i]:
            c += 1
    return c


def contains_pattern(perm: Sequence[int], pattern: Sequence[int]) -> bool:
    """True if some subsequence of perm standardizes to pattern.

    Naive exhaustive subsequence search; every pattern used internally has
    length at most 4, so nothing cleverer is warranted.

    >>> contains_pattern((2, 6, 3, 7, 5, 1, 4, 9, 8), (1, 3, 2, 4))
    True
    >>> contains_pattern((2, 1, 4, 3), (1, 2, 3))
    False
    """
    k = len(pattern)
    if k > len(perm):
        return False
    target = tuple(pattern)
    for sub in itertools.combinations(perm, k):
        if standardize(sub) == target:
            return True
    return False


def decreasing_run_lengths(perm: Sequence[int]) -> tuple[int, ...]:
    """Lengths of the maximal decreasing substrings, left to right.

    The ascent set equals the prefix sums of all parts but the last.

    >>> decreasing_run_lengths((5, 2, 7, 3, 1, 4, 8, 9, 6))
    (2, 3, 1, 1, 2)
    """
    runs = []
    length = 1
    for i in range(1, len(perm)):
        if perm[i - 1] > perm[i]:
            length += 1
        else:
            runs.append(length)
            length = 1
    runs.append(length)
    return tuple(runs)


def is_minimal(perm: Sequence[int]) -> bool:
    """Structural minimality test: starts and ends with a descent, and every
    ascent is interior with its four-element window of type 2143 or 3142.

    >>> is_minimal((3, 2, 1))
    True
    >>> is_minimal((2, 1, 4, 3)) and is_minimal((3, 1, 4, 2))
    True
    >>> is_minimal((1, 3, 2))
    False
    """
    n = len(perm)
    if n < 2 or perm[0] < perm[1] or perm[n - 2] < perm[n - 1]:
        return False
    for j in range(1, n - 2):
        a, b = perm[j], perm[j + 1]
        if a < b:
            # the window standardizes to 2143 or 3142 exactly when the
            # ascent pair are its strict minimum and maximum
            p, s = perm[j - 1], perm[j + 2]
            if not (a < p < b and a < s < b):
                return False
    return True


def minimality_violation(perm: Sequence[int]) -> str | None:
    """Explain why perm is not minimal, or None if it is.  Positions in the
    message are 1-indexed."""
    n = len(perm)
    if n < 2:
        return "length-1 permutations have no descent to start with"
    if perm[0] < perm[1]:
        return "position 1 is an ascent, not a descent"
    if perm[n - 2] < perm[n - 1]:
        return f"position {n - 1} is an ascent, not a descent"
    for j in range(1, n - 2):
        a, b = perm[j], perm[j + 1]
        if a < b:
            p, s = perm[j - 1], perm[j + 2]
            if not (a < p < b and a < s < b):
                window = (p, a, b, s)
                return (f"ascent at position {j + 1}: window {window} is of type "
                        f"{''.join(map(str, standardize(window)))}, not 2143 or 3142")
    return None


def is_minimal_by_deletion(perm: Sequence[int]) -> bool:
    """Definitional minimality oracle: every one-element deletion must lose
    a descent.

    Descent counts are invariant under standardization, so the deleted word
    is compared directly.  One-element deletions suffice because a deletion
    never increases the descent count; that monotonicity is itself asserted
    as a test rather than assumed.

    >>> is_minimal_by_deletion((2, 1, 4, 3))
    True
    >>> is_minimal_by_deletion((1, 2, 3, 4))
    False
    """
    w = tuple(perm)
    n = len(w)
    if n < 2:
        return False
    d = descent_count(w)
    if d == 0:
        return False
    for k in range(n):
        if descent_count(w[:k] + w[k + 1:]) >= d:
            return False
    return True


def duplicate_loss(perm: Sequence[int], start: int, stop: int,
                   keep: Sequence[str]) -> tuple[int, ...]:
    """One duplication-random-loss step: copy the fragment at positions
    start..stop (1-indexed, inclusive) immediately after itself, then delete
    one occurrence of each duplicated value, keeping the copy named by keep
    ("first" or "second", one entry per fragment element).

    >>> duplicate_loss((1, 2, 3, 4, 5, 6), 2, 4, ("second", "first", "second"))
    (1, 3, 2, 4, 5, 6)
    >>> duplicate_loss((1, 2), 1, 2, ("second", "first"))
    (2, 1)
    """
    w = check_permutation(perm)
    n = len(w)
    if not 1 <= start <= stop <= n:
        raise ValueError(f"invalid fragment bounds {start}..{stop} for length {n}")
    size = stop - start + 1
    if len(keep) != size:
        raise ValueError(f"keep must have {size} entries, got {len(keep)}")
    duplicated = w[:stop] + w[start - 1:stop] + w[stop:]
    # 0-indexed, the first copy of fragment element t sits at start-1+t and
    # the second at stop+t
    drop = set()
    for t, choice in enumerate(keep):
        if choice == "first":
            drop.add(stop + t)
        elif choice == "second":
            drop.add(start - 1 + t)
        else:
            raise ValueError(f"keep entries must be 'first' or 'second', got {choice!r}")
    return tuple(x for idx, x in enumerate(duplicated) if idx not in drop)


def max_brute_n(override: int | None = None) -> int:
    """Resolve the brute-force size cap: an explicit override wins, then the
    MINPERM_MAX_BRUTE_N environment variable, then the default of 11."""
    if override is not None:
        value = int(override)
    else:
        env = os.environ.get(MAX_BRUTE_N_ENV)
        value = int(env) if env else DEFAULT_MAX_BRUTE_N
    if value < 1:
        raise ValueError(f"brute-force cap must be >= 1, got {value}")
    return value


def enumerate_minimal(n: int, d: int | None = None,
                      runs: Sequence[int] | None = None,
                      double_descent_at: int | None = None,
                      max_n: int | None = None) -> Iterator[tuple[int, ...]]:
    """All minimal permutations of length n in lexicographic order,
    optionally filtered by descent count, by decreasing-run lengths, or by
    requiring descents at both positions j and j+1 (double_descent_at=j).

    The search is a pruned depth-first walk of the prefix tree.  Pruning
    uses necessary conditions of the structural test only; every completed
    word is still validated with is_minimal, so correctness never rests on
    the pruning being sharp.  Refuses n above the brute-force cap.

    >>> list(enumerate_minimal(3))
    [(3, 2, 1)]
    >>> list(enumerate_minimal(4, d=2))
    [(2, 1, 4, 3), (3, 1, 4, 2)]
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    cap = max_brute_n(max_n)
    if n > cap:
        raise CapExceededError(
            f"enumeration over S_{n} exceeds the brute-force cap {cap}; raise it "
            f"via {MAX_BRUTE_N_ENV} or the max_n argument")
    wanted = None if runs is None else tuple(runs)
    if wanted is not None and sum(wanted) != n:
        raise ValueError(f"run lengths {wanted} do not sum to {n}")
    j = double_descent_at
    if j is not None and not 1 <= j <= n - 2:
        raise ValueError(f"double-descent position must be in 1..{n - 2}, got {j}")

    def generate():
        for w in _search_minimal(n):
            if d is not None and descent_count(w) != d:
                continue
            if wanted is not None and decreasing_run_lengths(w) != wanted:
                continue
            if j is not None and not (w[j - 1] > w[j] > w[j + 1]):
                continue
            yield w

    return generate()


def _can_extend(word: list[int], v: int, n: int) -> bool:
    """Prune test for appending v to the current prefix (0-indexed slot m)."""
    m = len(word)
    if m == 0:
        return True
    if word[m - 1] < v:
        # would create an ascent at 1-indexed position m
        if m == 1 or m == n - 1:
            return False
        if not word[m - 1] < word[m - 2] < v:
            return False
    if m >= 3 and word[m - 2] < word[m - 1]:
        # v completes the window of the ascent at position m-1
        if not word[m - 2] < v < word[m - 1]:
            return False
    return True


def _search_minimal(n: int) -> Iterator[tuple[int, ...]]:
    if n < 2:
        return
    word: list[int] = []
    used = [False] * (n + 1)
    tries = [1]
    while tries:
        v = tries[-1]
        while v <= n and (used[v] or not _can_extend(word, v, n)):
            v += 1
        if v > n:
            tries.pop()
            if word:
                used[word.pop()] = False
            continue
        tries[-1] = v + 1
        if len(word) == n - 1:
            word.append(v)
            candidate = tuple(word)
            word.pop()
            if is_minimal(candidate):
                yield candidate
        else:
            used[v] = True
            word.append(v)
            tries.append(1)


def format_permutation(perm: Sequence[int]) -> str:
    """Serialize a permutation: space-separated for n <= 9, comma-separated
    otherwise.

    >>> format_permutation((2, 1, 4, 3))
    '2 1 4 3'
    """
    sep = " " if len(perm) <= 9 else ","
    return sep.join(map(str, perm))


def parse_permutation(text: str) -> tuple[int, ...]:
    """Parse either serialization; reports the offending token on failure."""
    tokens = text.replace(",", " ").split()
    if not tokens:
        raise ValueError("empty permutation")
    word = []
    for pos, tok in enumerate(tokens, start=1):
        try:
            word.append(int(tok))
        except ValueError:
            raise ValueError(f"token {pos} ({tok!r}) is not an integer") from None
    return check_permutation(word)
