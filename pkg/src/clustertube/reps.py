"""Nilpotent quiver representations: the independent Hom-dimension oracle.

An indecomposable ``(a, b)`` is realised as the uniserial representation
of the cyclic quiver on ``n`` vertices with basis ``v_a, ..., v_{a+b-1}``
(vertex of ``v_j`` is ``j`` mod ``n``), where the arrow at each vertex
sends ``v_j`` to ``v_{j-1}`` and kills ``v_a``.  Hom dimensions are then
solution-space dimensions of the intertwiner equations, computed with
exact integer arithmetic.  This never consults the closed formula in
:mod:`clustertube.tube`, so agreement between the two is a real check.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import RankMismatchError
from .linalg import integer_rank
from .tube import TubeObject, _mod_coord

Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class NilpotentRep:
    """Representation of the cyclic quiver with nilpotent arrow action.

    ``dims[v-1]`` is the dimension at vertex ``v``; ``arrow_maps[v-1]``
    is the matrix of the arrow ``v -> v-1`` (cyclically), acting on
    column vectors, of shape ``dims[v-2] x dims[v-1]``.
    """

    n: int
    dims: tuple[int, ...]
    arrow_maps: tuple[Matrix, ...]

    def __post_init__(self) -> None:
        if len(self.dims) != self.n or len(self.arrow_maps) != self.n:
            raise ValueError("need one dimension and one arrow map per vertex")
        for v in range(1, self.n + 1):
            mat = self.arrow_maps[v - 1]
            rows, cols = self.dims[v - 2], self.dims[v - 1]
            if len(mat) != rows or any(len(r) != cols for r in mat):
                raise ValueError(f"arrow map at vertex {v} has wrong shape")

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def cycle_is_nilpotent(self) -> bool:
        """Composite of n consecutive arrows, iterated, eventually zero."""
        for start in range(1, self.n + 1):
            m = np.eye(self.dims[start - 1], dtype=np.int64)
            v = start
            for _ in range(self.n):
                arrow = np.array(self.arrow_maps[v - 1], dtype=np.int64).reshape(
                    self.dims[v - 2], self.dims[v - 1]
                )
                m = arrow @ m
                v = _mod_coord(v - 1, self.n)
            power = np.eye(self.dims[start - 1], dtype=np.int64)
            for _ in range(self.total_dim + 1):
                power = m @ power
            if power.any():
                return False
        return True


def build_rep(x: TubeObject) -> NilpotentRep:
    """Explicit uniserial representation of the indecomposable ``x``."""
    n = x.n
    # basis index j runs a .. a+b-1; per vertex, basis ordered by j
    per_vertex: list[list[int]] = [[] for _ in range(n)]
    for j in range(x.a, x.a + x.b):
        per_vertex[_mod_coord(j, n) - 1].append(j)
    dims = tuple(len(basis) for basis in per_vertex)
    maps = []
    for v in range(1, n + 1):
        src = per_vertex[v - 1]
        dst = per_vertex[_mod_coord(v - 1, n) - 1]
        mat = [[0] * len(src) for _ in dst]
        for col, j in enumerate(src):
            if j > x.a:  # v_a is the socle and maps to zero
                mat[dst.index(j - 1)][col] = 1
        maps.append(tuple(tuple(r) for r in mat))
    return NilpotentRep(n, dims, tuple(maps))


def hom_dim_oracle(x: TubeObject, y: TubeObject) -> int:
    """dim Hom in the tube via the intertwiner equations.

    Unknowns are the per-vertex blocks f_v of a morphism build_rep(x) ->
    build_rep(y); each arrow contributes Y_v f_v - f_{v-1} X_v = 0.
    """
    if x.n != y.n:
        raise RankMismatchError(f"rank mismatch: {x.n} vs {y.n}")
    n = x.n
    rx, ry = build_rep(x), build_rep(y)

    offsets = []
    total = 0
    for v in range(n):
        offsets.append(total)
        total += rx.dims[v] * ry.dims[v]

    def var(v: int, row: int, col: int) -> int:
        # entry (row, col) of f_{v+1}: row indexes y's basis, col x's
        return offsets[v] + row * rx.dims[v] + col

    rows: list[list[int]] = []
    for v in range(1, n + 1):
        w = _mod_coord(v - 1, n)
        xa = rx.arrow_maps[v - 1]
        ya = ry.arrow_maps[v - 1]
        for i in range(ry.dims[w - 1]):
            for j in range(rx.dims[v - 1]):
                eq = [0] * total
                for t in range(ry.dims[v - 1]):
                    if ya[i][t]:
                        eq[var(v - 1, t, j)] += ya[i][t]
                for s in range(rx.dims[w - 1]):
                    if xa[s][j]:
                        eq[var(w - 1, i, s)] -= xa[s][j]
                if any(eq):
                    rows.append(eq)
    return total - integer_rank(rows)


