"""Dense GF(2) linear algebra on Python int bitsets (bit i = column i)."""

from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

__all__ = ["gf2_rank", "solve_affine", "span_iter"]


def gf2_rank(rows: Sequence[int]) -> int:
    """Rank of the matrix whose rows are the given bitsets."""
    work = [r for r in rows if r]
    rank = 0
    while work:
        pivot_row = work.pop()
        if pivot_row == 0:
            continue
        rank += 1
        low = pivot_row & -pivot_row
        work = [r ^ pivot_row if r & low else r for r in work]
        work = [r for r in work if r]
    return rank


def solve_affine(rows: Sequence[int], rhs: Sequence[int], n_cols: int) -> Optional[Tuple[int, List[int]]]:
    """Solve A x = b over GF(2).

    rows are bitsets over n_cols columns, rhs is a 0/1 sequence.  Returns a
    particular solution plus a kernel basis, or None when inconsistent.
    """
    if len(rows) != len(rhs):
        raise ValueError("rows and rhs lengths differ")
    aug = [(row << 1) | (b & 1) for row, b in zip(rows, rhs)]
    pivot_of_col: dict[int, int] = {}
    reduced: List[int] = []
    for r in aug:
        for col in sorted(pivot_of_col, reverse=True):
            if (r >> (col + 1)) & 1:
                r ^= reduced[pivot_of_col[col]]
        if r == 1:
            return None
        if r == 0:
            continue
        col = r.bit_length() - 2
        for i, other in enumerate(reduced):
            if (other >> (col + 1)) & 1:
                reduced[i] = other ^ r
        pivot_of_col[col] = len(reduced)
        reduced.append(r)
    particular = 0
    for col, i in pivot_of_col.items():
        if reduced[i] & 1:
            particular |= 1 << col
    basis: List[int] = []
    for free in range(n_cols):
        if free in pivot_of_col:
            continue
        vec = 1 << free
        for col, i in pivot_of_col.items():
            if (reduced[i] >> (free + 1)) & 1:
                vec |= 1 << col
        basis.append(vec)
    return particular, basis


def span_iter(origin: int, basis: Sequence[int]):
    """Yield origin XOR every combination of basis vectors (Gray-code order)."""
    v = origin
    yield v
    count = 1 << len(basis)
    for i in range(1, count):
        v ^= basis[(i & -i).bit_length() - 1]
        yield v
