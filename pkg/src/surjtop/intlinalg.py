"""Exact integer linear algebra: Smith normal form and cokernels.

Matrices describe maps Z^n -> Z^m with ``m`` rows and ``n`` columns, so
the cokernel lives in Z^m.  All arithmetic uses Python integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: Tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(f"expected {self.rows * self.cols} entries, got {len(self.entries)}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> IntMatrix:
        rows = [list(r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("column count is ambiguous for a matrix with no rows")
            cols = len(rows[0])
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    def __getitem__(self, ij: Tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def tolist(self) -> List[List[int]]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        a, b = self.tolist(), other.tolist()
        out = [[sum(a[i][k] * b[k][j] for k in range(self.cols)) for j in range(other.cols)]
               for i in range(self.rows)]
        return IntMatrix.from_rows(out, other.cols)

    def mod(self, p: int) -> IntMatrix:
        return IntMatrix(self.rows, self.cols, tuple(x % p for x in self.entries))

    def __str__(self) -> str:
        return str(self.tolist())


@dataclass(frozen=True)
class SmithForm:
    """Invariant factors ``diag`` (nonzero part only), with optional transforms.

    When transforms are kept, ``U @ A @ V`` is the m x n matrix carrying
    ``diag`` on its leading diagonal.
    """

    diag: Tuple[int, ...]
    rows: int
    cols: int
    U: Optional[IntMatrix] = None
    V: Optional[IntMatrix] = None

    @property
    def rank(self) -> int:
        return len(self.diag)

    def diagonal_matrix(self) -> IntMatrix:
        d = [[0] * self.cols for _ in range(self.rows)]
        for k, x in enumerate(self.diag):
            d[k][k] = x
        return IntMatrix.from_rows(d, self.cols)


class _Work:
    """Mutable matrix with optional row/column transform accumulation."""

    def __init__(self, A: IntMatrix, transforms: bool):
        self.a = A.tolist()
        self.m, self.n = A.rows, A.cols
        self.U = IntMatrix.identity(self.m).tolist() if transforms else None
        self.V = IntMatrix.identity(self.n).tolist() if transforms else None

    def swap_rows(self, i, j):
        if i != j:
            self.a[i], self.a[j] = self.a[j], self.a[i]
            if self.U is not None:
                self.U[i], self.U[j] = self.U[j], self.U[i]

    def swap_cols(self, i, j):
        if i != j:
            for row in self.a:
                row[i], row[j] = row[j], row[i]
            if self.V is not None:
                for row in self.V:
                    row[i], row[j] = row[j], row[i]

    def add_row(self, src, dst, q):
        """row[dst] += q * row[src]"""
        a = self.a
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        if self.U is not None:
            self.U[dst] = [x + q * y for x, y in zip(self.U[dst], self.U[src])]

    def add_col(self, src, dst, q):
        """col[dst] += q * col[src]"""
        for row in self.a:
            row[dst] += q * row[src]
        if self.V is not None:
            for row in self.V:
                row[dst] += q * row[src]

    def negate_row(self, i):
        self.a[i] = [-x for x in self.a[i]]
        if self.U is not None:
            self.U[i] = [-x for x in self.U[i]]

    def mix_rows(self, i, j, L):
        """Replace rows (i, j) by L applied to them; L is 2x2 unimodular."""
        (p, q), (r, s) = L
        for M in (self.a, self.U):
            if M is None:
                continue
            ri, rj = M[i], M[j]
            M[i] = [p * x + q * y for x, y in zip(ri, rj)]
            M[j] = [r * x + s * y for x, y in zip(ri, rj)]

    def mix_cols(self, i, j, R):
        """Replace cols (i, j) by themselves times R; R is 2x2 unimodular."""
        (p, q), (r, s) = R
        for M in (self.a, self.V):
            if M is None:
                continue
            for row in M:
                x, y = row[i], row[j]
                row[i], row[j] = p * x + r * y, q * x + s * y


def _ext_gcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def _diagonalize(w: _Work) -> int:
    """Min-abs pivoting to a diagonal form; returns the rank."""
    a, m, n = w.a, w.m, w.n
    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                x = a[i][j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
        if best is None:
            break
        w.swap_rows(t, best[1])
        w.swap_cols(t, best[2])
        while True:
            piv = a[t][t]
            for i in range(t + 1, m):
                if a[i][t]:
                    w.add_row(t, i, -(a[i][t] // piv))
            for j in range(t + 1, n):
                if a[t][j]:
                    w.add_col(t, j, -(a[t][j] // piv))
            # leftovers are strictly smaller than |piv|; promote the smallest
            best = None
            for i in range(t + 1, m):
                if a[i][t] and (best is None or abs(a[i][t]) < best[0]):
                    best = (abs(a[i][t]), "r", i)
            for j in range(t + 1, n):
                if a[t][j] and (best is None or abs(a[t][j]) < best[0]):
                    best = (abs(a[t][j]), "c", j)
            if best is None:
                break
            if best[1] == "r":
                w.swap_rows(t, best[2])
            else:
                w.swap_cols(t, best[2])
        t += 1
    return t


def _fold_divisibility(w: _Work, r: int) -> None:
    """Turn diagonal d_1..d_r into a divisibility chain via 2x2 gcd folds."""
    a = w.a
    for i in range(r):
        if a[i][i] < 0:
            w.negate_row(i)
    for i in range(r):
        for j in range(i + 1, r):
            x, y = a[i][i], a[j][j]
            if y % x == 0:
                continue
            g, s, t = _ext_gcd(x, y)
            xp, yp = x // g, y // g
            # [[s, t], [-y', x']] diag(x, y) [[1, -t y'], [1, s x']] = diag(g, x y / g)
            w.mix_rows(i, j, ((s, t), (-yp, xp)))
            w.mix_cols(i, j, ((1, -t * yp), (1, s * xp)))


def smith_normal_form(A: IntMatrix, transforms: bool = False) -> SmithForm:
    """Smith normal form of ``A``.

    Returns the nonzero invariant factors d_1 | d_2 | ... | d_r (all
    positive).  With ``transforms=True`` also returns unimodular U, V with
    ``U @ A @ V`` diagonal.
    """
    w = _Work(A, transforms)
    r = _diagonalize(w)
    _fold_divisibility(w, r)
    diag = tuple(w.a[k][k] for k in range(r))
    U = IntMatrix.from_rows(w.U, A.rows) if transforms else None
    V = IntMatrix.from_rows(w.V, A.cols) if transforms else None
    return SmithForm(diag, A.rows, A.cols, U, V)


@dataclass(frozen=True)
class AbelianGroup:
    """Z/d_1 + ... + Z/d_k + Z^free_rank with 1 < d_1 | d_2 | ... | d_k."""

    torsion: Tuple[int, ...] = ()
    free_rank: int = 0

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(int(d) for d in self.torsion))
        if any(d < 2 for d in self.torsion):
            raise ValueError("torsion factors must be >= 2")
        if any(b % a for a, b in zip(self.torsion, self.torsion[1:])):
            raise ValueError(f"torsion factors {self.torsion} do not form a divisibility chain")
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def order(self) -> Optional[int]:
        """Group order, or None when the group is infinite."""
        if self.free_rank:
            return None
        out = 1
        for d in self.torsion:
            out *= d
        return out

    @property
    def is_finite_odd(self) -> bool:
        return self.free_rank == 0 and all(d % 2 for d in self.torsion)

    def to_dict(self) -> dict:
        return {"torsion": list(self.torsion), "free_rank": self.free_rank}

    def __str__(self) -> str:
        parts = [f"Z/{d}" for d in self.torsion]
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        return " + ".join(parts) if parts else "0"


def cokernel(A: IntMatrix) -> AbelianGroup:
    """Structure of Z^m / im(A) for an m x n matrix A."""
    snf = smith_normal_form(A)
    return AbelianGroup(tuple(d for d in snf.diag if d > 1), A.rows - snf.rank)


def group_order(G: AbelianGroup) -> Optional[int]:
    return G.order


def is_finite_odd(G: AbelianGroup) -> bool:
    return G.is_finite_odd


def rank_mod2(A: IntMatrix) -> int:
    """Rank of A over F_2; rows are packed into int bitsets."""
    rows = []
    for r in A.mod(2).tolist():
        bits = 0
        for j, x in enumerate(r):
            if x:
                bits |= 1 << j
        rows.append(bits)
    rank = 0
    for j in range(A.cols):
        mask = 1 << j
        piv = next((k for k in range(rank, len(rows)) if rows[k] & mask), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for k in range(len(rows)):
            if k != rank and rows[k] & mask:
                rows[k] ^= rows[rank]
        rank += 1
    return rank


def nullspace_mod2(A: IntMatrix) -> List[Tuple[int, ...]]:
    """Basis of {e in F_2^n : A e = 0 mod 2}, as 0/1 tuples of length n."""
    n = A.cols
    rows = []
    for r in A.mod(2).tolist():
        bits = 0
        for j, x in enumerate(r):
            if x:
                bits |= 1 << j
        rows.append(bits)
    pivots = []
    rank = 0
    for j in range(n):
        mask = 1 << j
        piv = next((k for k in range(rank, len(rows)) if rows[k] & mask), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for k in range(len(rows)):
            if k != rank and rows[k] & mask:
                rows[k] ^= rows[rank]
        pivots.append(j)
        rank += 1
    basis = []
    for free in (j for j in range(n) if j not in pivots):
        e = [0] * n
        e[free] = 1
        for k, pj in enumerate(pivots):
            if rows[k] >> free & 1:
                e[pj] = 1
        basis.append(tuple(e))
    return basis

