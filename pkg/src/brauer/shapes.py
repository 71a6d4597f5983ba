"""Young diagrams, the index sets O(n, N), and up-down paths.

Diagrams are tuples of weakly decreasing positive parts; the empty tuple is
the empty diagram.  O(n, N) consists of diagrams with n - 2r boxes (r >= 0)
and at most N boxes in the first two columns; its members label the
irreducible representations at level n.  An up-down path is a sequence
starting at the empty diagram that adds or removes one box per step while
staying inside the level sets; paths index the canonical basis vectors.

Tuple comparison gives the deterministic order used everywhere: comparing
part lists elementwise with the shorter-prefix-first rule, which coincides
with comparing zero-padded part lists since parts are positive.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator

from .coeffs import NPoly

Diagram = tuple[int, ...]
Path = tuple[Diagram, ...]

EMPTY: Diagram = ()


def check_diagram(parts: Iterable[int]) -> Diagram:
    parts = tuple(parts)
    if any(p <= 0 for p in parts):
        raise ValueError(f"parts must be positive: {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"parts must be weakly decreasing: {parts}")
    return parts


def first_two_columns(lam: Diagram) -> int:
    col1 = len(lam)
    col2 = sum(1 for p in lam if p >= 2)
    return col1 + col2


def in_O(lam: Diagram, n: int, N: int) -> bool:
    """Membership in O(n, N): column bound plus n - |lam| non-negative even."""
    size = sum(lam)
    return first_two_columns(lam) <= N and n - size >= 0 and (n - size) % 2 == 0


def partitions(m: int) -> Iterator[Diagram]:
    """All partitions of m, largest first part first (deterministic)."""

    def rec(remaining: int, cap: int, prefix: tuple[int, ...]) -> Iterator[Diagram]:
        if remaining == 0:
            yield prefix
            return
        for first in range(min(cap, remaining), 0, -1):
            yield from rec(remaining - first, first, prefix + (first,))

    yield from rec(m, m, ())


@lru_cache(maxsize=None)
def enumerate_O(n: int, N: int) -> tuple[Diagram, ...]:
    """O(n, N) in the deterministic (lexicographic) order."""
    if n < 0:
        raise ValueError("level must be non-negative")
    found = []
    for size in range(n % 2, n + 1, 2):
        for lam in partitions(size):
            if first_two_columns(lam) <= N:
                found.append(lam)
    return tuple(sorted(found))


def add_corners(lam: Diagram) -> list[tuple[int, Diagram]]:
    """Boxes that may be added: list of (content, resulting diagram)."""
    out = []
    for row in range(len(lam) + 1):
        here = lam[row] if row < len(lam) else 0
        above = lam[row - 1] if row > 0 else None
        if above is None or here < above:
            new = list(lam)
            if row < len(lam):
                new[row] += 1
            else:
                new.append(1)
            content = here + 1 - (row + 1)  # box lands in column here+1 of row+1
            out.append((content, tuple(new)))
    return out


def remove_corners(lam: Diagram) -> list[tuple[int, Diagram]]:
    """Boxes that may be removed: list of (content, resulting diagram)."""
    out = []
    for row in range(len(lam)):
        below = lam[row + 1] if row + 1 < len(lam) else 0
        if lam[row] > below:
            new = list(lam)
            new[row] -= 1
            if new[-1] == 0:
                new.pop()
            content = lam[row] - (row + 1)
            out.append((content, tuple(new)))
    return out


def branch(mu: Diagram, k: int, N: int) -> tuple[Diagram, ...]:
    """All members of O(k, N) differing from mu by one box, sorted."""
    candidates = [d for _, d in add_corners(mu)] + [d for _, d in remove_corners(mu)]
    return tuple(sorted(d for d in candidates if in_O(d, k, N)))


@lru_cache(maxsize=None)
def path_counts(n: int, N: int) -> dict[Diagram, int]:
    """Number of up-down paths from the empty diagram to each member of O(n, N)."""
    counts: dict[Diagram, int] = {EMPTY: 1}
    for k in range(1, n + 1):
        new: dict[Diagram, int] = {}
        for mu, c in counts.items():
            for nu in branch(mu, k, N):
                new[nu] = new.get(nu, 0) + c
        counts = new
    return counts


@lru_cache(maxsize=None)
def enumerate_paths(lam: Diagram, n: int, N: int) -> tuple[Path, ...]:
    """All up-down paths from the empty diagram to lam, in path-lex order.

    Paths include the starting empty diagram, so each has n+1 entries.
    """
    if not in_O(lam, n, N):
        raise ValueError(f"{lam} is not in O({n}, {N})")
    level: list[Path] = [(EMPTY,)]
    for k in range(1, n + 1):
        level = [p + (nu,) for p in level for nu in branch(p[-1], k, N)]
    return tuple(sorted(p for p in level if p[-1] == lam))


def contents(lam: Diagram) -> list[int]:
    """Multiset of box contents j - i (1-based row i, column j)."""
    return [j - i for i, row in enumerate(lam, start=1) for j in range(1, row + 1)]


def content_of_difference(lam: Diagram, mu: Diagram) -> int:
    """Content of the single box by which lam and mu differ."""
    big, small = (lam, mu) if sum(lam) > sum(mu) else (mu, lam)
    for content, shrunk in remove_corners(big):
        if shrunk == small:
            return content
    raise ValueError(f"{lam} and {mu} do not differ by one box")


def distinct_rows(mu: Diagram) -> int:
    return len(set(mu))


def _scalar_sort_key(x):
    if isinstance(x, NPoly):
        return (1, x.sort_key())
    return (0, x)


def b_list(mu: Diagram, N) -> list:
    """The 2l+1 numbers (N-1)/2 + c over addable corners and -(N-1)/2 - d over
    removable corners of mu, in a deterministic sorted order.

    N may be a Fraction (specialized) or an NPoly (symbolic); l is the number
    of pairwise distinct rows of mu.
    """
    h = (N - 1) / 2 if not isinstance(N, NPoly) else (N - 1) * Fraction(1, 2)
    values = [h + c for c, _ in add_corners(mu)]
    values += [-h - d for d, _ in remove_corners(mu)]
    assert len(values) == 2 * distinct_rows(mu) + 1
    return sorted(values, key=_scalar_sort_key)


def a_list(mu: Diagram, N) -> list:
    """(N-1)/2 + content, over all boxes of mu (the alternate product form)."""
    h = (N - 1) / 2 if not isinstance(N, NPoly) else (N - 1) * Fraction(1, 2)
    return [h + e for e in contents(mu)]


# ---------------------------------------------------------------------------
# JSON forms


def diagram_to_json(lam: Diagram) -> list[int]:
    return list(lam)


def diagram_from_json(data: list[int]) -> Diagram:
    return check_diagram(data)


def path_to_json(path: Path) -> list[list[int]]:
    return [list(step) for step in path]


def path_from_json(data: list[list[int]]) -> Path:
    return tuple(check_diagram(step) for step in data)


def parse_partition(text: str) -> Diagram:
    """Command-line form: comma-separated parts; "" or "0" is the empty diagram."""
    text = text.strip()
    if text in ("", "0"):
        return EMPTY
    return check_diagram(int(p) for p in text.split(","))
