"""Small exact linear algebra over Q(i) or the field of rational functions.

Matrices are lists of rows whose entries all live in one field (any type with
exact ``+ - * /`` and an ``is_zero`` method works).  Elimination is plain
Gauss-Jordan; with exact arithmetic there are no pivoting concerns beyond
avoiding zero pivots.
"""

from __future__ import annotations

from typing import List, Optional, Sequence


class ExactMatrix:
    """A dense matrix with exact field entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence]):
        entries = [list(row) for row in entries]
        ncols = len(entries[0]) if entries else 0
        for row in entries:
            if len(row) != ncols:
                raise ValueError("ragged matrix")
        self.rows = len(entries)
        self.cols = ncols
        self.entries = entries

    def __getitem__(self, idx):
        i, j = idx
        return self.entries[i][j]

    def row(self, i) -> list:
        return list(self.entries[i])

    def col(self, j) -> list:
        return [self.entries[i][j] for i in range(self.rows)]

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)]
        )

    def matvec(self, v: Sequence) -> list:
        out = []
        for i in range(self.rows):
            acc = None
            for j in range(self.cols):
                term = self.entries[i][j] * v[j]
                acc = term if acc is None else acc + term
            out.append(acc)
        return out

    def matmul(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        return ExactMatrix(
            [
                [
                    _dot(self.entries[i], other.col(j))
                    for j in range(other.cols)
                ]
                for i in range(self.rows)
            ]
        )

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.entries == other.entries


def _is_zero(x) -> bool:
    return x.is_zero() if hasattr(x, "is_zero") else x == 0


def _dot(u: Sequence, v: Sequence):
    acc = None
    for a, b in zip(u, v):
        term = a * b
        acc = term if acc is None else acc + term
    return acc


def _rref(rows: List[list], ncols: int):
    """In-place reduced row echelon form; returns list of pivot columns."""
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(rows)):
            if not _is_zero(rows[i][c]):
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][c]
        rows[r] = [x / inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not _is_zero(rows[i][c]):
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def rank(m: ExactMatrix) -> int:
    rows = [list(r) for r in m.entries]
    return len(_rref(rows, m.cols))


def kernel(m: ExactMatrix, one, zero) -> List[list]:
    """Basis of the right kernel of m.

    ``one`` and ``zero`` are the field constants used to build basis vectors.
    Empty list iff m is injective; rank + nullity = cols by construction.
    """
    rows = [list(r) for r in m.entries]
    pivots = _rref(rows, m.cols)
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [zero] * m.cols
        v[fc] = one
        for r_idx, pc in enumerate(pivots):
            v[pc] = zero - rows[r_idx][fc]
        basis.append(v)
    return basis


def solve(m: ExactMatrix, b: Sequence) -> Optional[list]:
    """One solution x of m x = b, or None when the system is inconsistent."""
    rows = [list(r) + [b[i]] for i, r in enumerate(m.entries)]
    pivots = _rref(rows, m.cols)
    for i in range(len(rows)):
        if all(_is_zero(x) for x in rows[i][: m.cols]) and not _is_zero(rows[i][m.cols]):
            return None
    # Pick the solution with free variables set to zero.
    zero = None
    for row in m.entries:
        for x in row:
            zero = x - x
            break
        if zero is not None:
            break
    if zero is None:
        return None if any(not _is_zero(x) for x in b) else []
    x = [zero] * m.cols
    for r_idx, pc in enumerate(pivots):
        x[pc] = rows[r_idx][m.cols]
    return x


def span_rank(vectors: Sequence[Sequence]) -> int:
    if not vectors:
        return 0
    return rank(ExactMatrix(vectors))


def in_span(vectors: Sequence[Sequence], v: Sequence) -> bool:
    """Whether v lies in the linear span of the given vectors."""
    if all(_is_zero(x) for x in v):
        return True
    if not vectors:
        return False
    m = ExactMatrix(vectors).transpose()
    return solve(m, list(v)) is not None
