"""Integer partitions with bounded part size.

A partition is stored as a tuple of weakly decreasing positive integers.
The empty tuple is the empty partition.  Throughout the package the set
P(d, n) means the partitions of weight d whose parts are all at most n;
these index the Chern monomials c_lambda = c_{lambda_1} * ... * c_{lambda_r}
on an n-dimensional variety.
"""

from __future__ import annotations

from typing import Iterator, Sequence

Partition = tuple[int, ...]


def check_partition(parts: Sequence[int]) -> Partition:
    """Validate and canonicalize a sequence of parts.

    Raises ValueError unless the parts are positive integers in weakly
    decreasing order.
    """
    result = tuple(parts)
    for part in result:
        if not isinstance(part, int) or isinstance(part, bool) or part < 1:
            raise ValueError(f"partition parts must be positive integers, got {part!r}")
    if any(result[i] < result[i + 1] for i in range(len(result) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing, got {result}")
    return result


def weight(lam: Sequence[int]) -> int:
    """Sum of the parts."""
    return sum(lam)


def partition_distance(lam: Sequence[int]) -> int:
    """Sum of (part - 1) over the parts.

    This is zero exactly for partitions whose parts are all 1, including
    the empty partition.
    """
    return sum(part - 1 for part in lam)


def _generate(d: int, max_part: int) -> Iterator[Partition]:
    if d == 0:
        yield ()
        return
    for first in range(min(d, max_part), 0, -1):
        for rest in _generate(d - first, first):
            yield (first, *rest)


def enumerate_partitions(d: int, n: int) -> list[Partition]:
    """All partitions of d with parts at most n, lexicographically decreasing.

    enumerate_partitions(4, 4) returns
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)].

    Raises ValueError if d < 1, n < 1, or d > n; the indexing sets used in
    this package always have weight at most the ambient dimension.
    """
    if d < 1:
        raise ValueError(f"weight must be at least 1, got {d}")
    if n < 1:
        raise ValueError(f"part bound must be at least 1, got {n}")
    if d > n:
        raise ValueError(f"weight {d} exceeds part bound context {n}")
    return list(_generate(d, n))


def all_partitions_up_to(n: int) -> list[Partition]:
    """The union of P(d, n) for d = 1..n, grouped by increasing weight."""
    result: list[Partition] = []
    for d in range(1, n + 1):
        result.extend(enumerate_partitions(d, n))
    return result


def partition_count(n: int) -> int:
    """Number of partitions of n (parts at most n is no restriction)."""
    if n < 0:
        raise ValueError(f"partition count needs n >= 0, got {n}")
    # Classic bounded-part dynamic program: table[d] counts partitions of d
    # using parts considered so far.
    table = [1] + [0] * n
    for part in range(1, n + 1):
        for d in range(part, n + 1):
            table[d] += table[d - part]
    return table[n]


def format_partition(lam: Sequence[int]) -> str:
    """Render as comma-separated parts, e.g. "2,1,1"; empty partition is ""."""
    return ",".join(str(part) for part in lam)


def parse_partition(text: str) -> Partition:
    """Inverse of format_partition; validates the result."""
    stripped = text.strip()
    if not stripped:
        return ()
    try:
        parts = [int(token) for token in stripped.split(",")]
    except ValueError:
        raise ValueError(f"cannot parse partition from {text!r}") from None
    return check_partition(parts)
