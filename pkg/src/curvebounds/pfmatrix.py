"""Exact nonnegative integer matrices and Perron-Frobenius structure.

Matrix powers use binary exponentiation over arbitrary-precision ints.
Reachability questions (irreducibility, shortest cycles, cover times) run
on the boolean support digraph, stored as one int bitmask per row.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .surfaces import SurfaceSig

__all__ = [
    "IntMatrix",
    "BlockTransition",
    "NotIrreducibleError",
    "NotPrimitiveError",
    "BlockStructureError",
    "NotBHStructureError",
    "is_irreducible",
    "min_positive_diagonal_power",
    "primitivity_exponent",
    "wielandt_bound",
    "product_lower_right",
    "cover_time",
    "full_spread_power",
    "dominant_eigenvalue_estimate",
]


class NotIrreducibleError(ValueError):
    """Support digraph is not strongly connected."""


class NotPrimitiveError(ValueError):
    """No power of the matrix is entrywise positive."""


class BlockStructureError(ValueError):
    """Declared block structure is violated."""


class NotBHStructureError(ValueError):
    """Transition data does not behave like a real/infinitesimal splitting."""


class IntMatrix:
    """Immutable nonnegative integer matrix, row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Iterable[Iterable[int]]):
        rows = tuple(tuple(int(x) for x in row) for row in entries)
        if not rows or not rows[0]:
            raise ValueError("matrix needs at least one row and one column")
        width = len(rows[0])
        for row in rows:
            if len(row) != width:
                raise ValueError("ragged rows")
            for x in row:
                if x < 0:
                    raise ValueError(f"negative entry {x}")
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", width)
        object.__setattr__(self, "entries", rows)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, idx: tuple[int, int]) -> int:
        i, j = idx
        return self.entries[i][j]

    def __eq__(self, other) -> bool:
        return isinstance(other, IntMatrix) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"IntMatrix({[list(r) for r in self.entries]})"

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(
                f"dimension mismatch: {self.rows}x{self.cols} @ "
                f"{other.rows}x{other.cols}"
            )
        bt = tuple(zip(*other.entries))
        return IntMatrix(
            [
                [sum(a * b for a, b in zip(row, col)) for col in bt]
                for row in self.entries
            ]
        )

    def __pow__(self, k: int) -> "IntMatrix":
        if not self.is_square:
            raise ValueError("power of a non-square matrix")
        if k < 0:
            raise ValueError("negative power")
        result = IntMatrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base if k > 1 else base
            k >>= 1
        return result

    def entrywise_positive(self) -> bool:
        return all(x > 0 for row in self.entries for x in row)

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "IntMatrix":
        return IntMatrix(
            [[self.entries[i][j] for j in col_idx] for i in row_idx]
        )

    def support_rows(self) -> list[int]:
        """Row bitmasks of the support digraph: bit j of row i set iff m[i][j] > 0."""
        masks = []
        for row in self.entries:
            m = 0
            for j, x in enumerate(row):
                if x:
                    m |= 1 << j
            masks.append(m)
        return masks


def _bool_mul(a: list[int], b: list[int]) -> list[int]:
    out = []
    for row in a:
        acc = 0
        r = row
        while r:
            low = r & -r
            acc |= b[low.bit_length() - 1]
            r ^= low
        out.append(acc)
    return out


def _require_square(m: IntMatrix) -> None:
    if not m.is_square:
        raise ValueError(f"square matrix required, got {m.rows}x{m.cols}")


def _reach_all(adj: list[int], start: int) -> bool:
    """True iff every node is reachable from `start` by a directed path."""
    n = len(adj)
    seen = 1 << start
    frontier = adj[start]
    while frontier & ~seen:
        seen |= frontier
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= adj[low.bit_length() - 1]
            f ^= low
        frontier = nxt
    return seen == (1 << n) - 1


def is_irreducible(m: IntMatrix) -> bool:
    """Strong connectivity of the support digraph.

    The 1x1 zero matrix is not irreducible (no power has a positive entry);
    a 1x1 positive matrix is.
    """
    _require_square(m)
    if m.rows == 1:
        return m.entries[0][0] > 0
    adj = m.support_rows()
    radj = [0] * m.rows
    for i, row in enumerate(adj):
        r = row
        while r:
            low = r & -r
            radj[low.bit_length() - 1] |= 1 << i
            r ^= low
    return _reach_all(adj, 0) and _reach_all(radj, 0)


def min_positive_diagonal_power(m: IntMatrix) -> int:
    """Smallest q >= 1 such that m^q has a positive diagonal entry.

    For an irreducible matrix this is the girth of the support digraph,
    so q <= dim always holds.
    """
    if not is_irreducible(m):
        raise NotIrreducibleError("min_positive_diagonal_power needs an irreducible matrix")
    adj = m.support_rows()
    n = m.rows
    best = None
    for i in range(n):
        # BFS for the shortest directed cycle through i.
        target = 1 << i
        frontier = adj[i]
        dist = 1
        seen = 0
        while frontier and (best is None or dist < best):
            if frontier & target:
                best = dist if best is None else min(best, dist)
                break
            seen |= frontier
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= adj[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~seen
            dist += 1
    assert best is not None  # irreducible digraphs contain cycles
    return best


def wielandt_bound(dim: int) -> int:
    """Largest possible primitivity exponent at the given dimension."""
    return dim * dim - 2 * dim + 2


def primitivity_exponent(m: IntMatrix) -> int | None:
    """Smallest s with m^s entrywise positive, or None when no power is.

    Scans s up to the Wielandt bound dim^2 - 2 dim + 2, which is sharp.
    """
    _require_square(m)
    n = m.rows
    full = (1 << n) - 1
    adj = m.support_rows()
    power = adj
    for s in range(1, wielandt_bound(n) + 1):
        if all(row == full for row in power):
            return s
        power = _bool_mul(power, adj)
    return None


def product_lower_right(matrices: Sequence[IntMatrix], block: int) -> IntMatrix:
    """Product of the lower-right `block` x `block` corners of a sequence of
    block-upper-triangular matrices (zero lower-left block), equal to the
    lower-right corner of the full product.
    """
    if not matrices:
        raise ValueError("empty matrix sequence")
    dim = matrices[0].rows
    if not 0 < block <= dim:
        raise ValueError(f"block size {block} out of range for dimension {dim}")
    for m in matrices:
        _require_square(m)
        if m.rows != dim:
            raise ValueError("matrices in the sequence have mixed dimensions")
        for i in range(dim - block, dim):
            for j in range(dim - block):
                if m.entries[i][j]:
                    raise BlockStructureError(
                        f"nonzero lower-left entry at ({i},{j})"
                    )
    idx = range(dim - block, dim)
    result = matrices[0].submatrix(idx, idx)
    for m in matrices[1:]:
        result = result @ m.submatrix(idx, idx)
    return result


@dataclass(frozen=True)
class BlockTransition:
    """Square transition matrix with a distinguished set of real branches.

    Images of branches outside `real_set` never cross a real branch, so
    rows indexed by `real_set` vanish on the complementary columns and the
    restriction to the real indices is a genuine block of every power.
    """

    matrix: IntMatrix
    real_set: frozenset[int]
    surface: SurfaceSig
    real_indices: tuple[int, ...] = field(init=False)

    def __post_init__(self) -> None:
        m = self.matrix
        _require_square(m)
        n = m.rows
        real = frozenset(int(i) for i in self.real_set)
        object.__setattr__(self, "real_set", real)
        if not real:
            raise BlockStructureError("real branch set is empty")
        if any(i < 0 or i >= n for i in real):
            raise BlockStructureError(f"real index out of range 0..{n - 1}")
        object.__setattr__(self, "real_indices", tuple(sorted(real)))
        for i in real:
            for j in range(n):
                if j not in real and m.entries[i][j]:
                    raise BlockStructureError(
                        f"image of non-real branch {j} crosses real branch {i}"
                    )
        if not is_irreducible(self.restriction()):
            raise NotIrreducibleError("real-branch block is not irreducible")
        chi = abs(self.surface.chi)
        if self.surface.chi >= 0:
            raise BlockStructureError(f"surface must have chi < 0: {self.surface}")
        r = len(real)
        if r > 3 * chi - 3:
            raise BlockStructureError(
                f"{r} real branches exceeds 3|chi|-3 = {3 * chi - 3}"
            )
        total_bound = 9 * chi - 3 * self.surface.punctures
        if n > total_bound:
            raise BlockStructureError(
                f"{n} branches exceeds 9|chi|-3n = {total_bound}"
            )

    @property
    def r(self) -> int:
        return len(self.real_set)

    @property
    def dim(self) -> int:
        return self.matrix.rows

    def restriction(self) -> IntMatrix:
        idx = tuple(sorted(self.real_set))
        return self.matrix.submatrix(idx, idx)


def cover_time(bt: BlockTransition) -> int:
    """Smallest j >= 0 such that every branch carries the j-th image of some
    real branch; 0 exactly when every branch is real.

    Computed as BFS depth on the support digraph from the real set: branch b
    is covered at depth d+1 when its row has a positive entry in a column
    covered at depth d.
    """
    adj = bt.matrix.support_rows()
    n = bt.dim
    full = (1 << n) - 1
    covered = 0
    for i in bt.real_set:
        covered |= 1 << i
    depth = 0
    while covered != full:
        grown = covered
        for b in range(n):
            if not (covered >> b) & 1 and adj[b] & covered:
                grown |= 1 << b
        if grown == covered or depth >= n:
            missing = [b for b in range(n) if not (covered >> b) & 1]
            raise NotBHStructureError(
                "not a BH transition structure: branches never covered by "
                f"images of the real set: {missing}"
            )
        covered = grown
        depth += 1
    return depth


def full_spread_power(bt: BlockTransition) -> int:
    """Iterate count k = 2*r*q + i after which the image of every real branch
    crosses every branch of the track.

    q is the shortest-cycle power of the real block, i its cover time. The
    postcondition is verified by an exact big-integer power; failure (possible
    only for data no folding sequence could produce, e.g. an imprimitive real
    block) raises NotBHStructureError.
    """
    q = min_positive_diagonal_power(bt.restriction())
    i = cover_time(bt)
    k = 2 * bt.r * q + i
    power = bt.matrix ** k
    for b in range(bt.dim):
        for beta in bt.real_indices:
            if power.entries[b][beta] == 0:
                raise NotBHStructureError(
                    f"not a BH transition structure: (M^{k})[{b}][{beta}] = 0, "
                    "iterated real images do not spread over the track"
                )
    return k


def dominant_eigenvalue_estimate(
    m: IntMatrix, iterations: int = 200
) -> tuple[float, float]:
    """Power-iteration estimate of the Perron-Frobenius eigenvalue of a
    primitive matrix; returns (estimate, residual) with the residual measured
    in the max norm on the unit-normalized vector.
    """
    if primitivity_exponent(m) is None:
        raise NotPrimitiveError("power iteration needs a primitive matrix")
    if iterations < 1:
        raise ValueError("iterations must be >= 1")
    a = np.array(m.entries, dtype=float)
    v = np.ones(m.rows) / m.rows
    lam = 0.0
    for _ in range(iterations):
        w = a @ v
        lam = float(np.max(np.abs(w)))
        v = w / lam
    residual = float(np.max(np.abs(a @ v - lam * v)))
    return lam, residual
