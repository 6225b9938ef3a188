"""Exchange matrices, Fomin-Zelevinsky mutation, and the exchange graph.

The B-matrix of the zig-zag initial object is written down explicitly;
every other B-matrix is defined operationally by mutation along the
exchange graph.  BFS re-checks the matrix on every revisit, so finishing
without a mismatch certifies that the assignment is path independent.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .errors import StructuralError, TheoremViolationError
from .rigid import MaximalRigid, complements, enumerate_maximal_rigid
from .tube import TubeObject, canonical_key

Rows = tuple[tuple[int, ...], ...]

# Mutation-finite type B entries never leave this band; anything outside
# means the propagation went off the rails.
_ENTRY_BOUND = 2


@dataclass(frozen=True)
class ExchangeMatrix:
    """Square integer matrix indexed by an ordered summand list."""

    order: tuple[TubeObject, ...]
    entries: Rows

    def __post_init__(self) -> None:
        k = len(self.order)
        if len(self.entries) != k or any(len(r) != k for r in self.entries):
            raise StructuralError("entries do not match the summand order")
        if any(self.entries[i][i] != 0 for i in range(k)):
            raise StructuralError("nonzero diagonal entry")

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]


@dataclass(frozen=True)
class Seed:
    object: MaximalRigid
    matrix: ExchangeMatrix

    def __post_init__(self) -> None:
        if self.matrix.order != self.object.summands:
            raise StructuralError("matrix order differs from the summand list")


@dataclass(frozen=True)
class MiddleTerms:
    """Middle-term multiplicities of the two exchange triangles at one
    summand, read off the B-matrix row: U from the negative entries,
    U' from the positive ones."""

    u: tuple[TubeObject, ...]
    u_prime: tuple[TubeObject, ...]

    def __post_init__(self) -> None:
        if set(self.u) & set(self.u_prime):
            raise TheoremViolationError(
                f"exchange triangle middle terms share a summand: {self}"
            )


def is_sign_skew_symmetric(rows) -> bool:
    """sign(b_ij) == -sign(b_ji) for all i, j."""
    if isinstance(rows, ExchangeMatrix):
        rows = rows.entries
    k = len(rows)
    for i in range(k):
        for j in range(k):
            a, b = rows[i][j], rows[j][i]
            if (a > 0) != (b < 0) or (a < 0) != (b > 0):
                return False
    return True


def fz_mutate(mat: ExchangeMatrix, k: int) -> ExchangeMatrix:
    """Fomin-Zelevinsky matrix mutation at index ``k`` (0-based).

    The order list is unchanged; the caller substitutes the exchanged
    summand afterwards.
    """
    size = len(mat.order)
    if not 0 <= k < size:
        raise IndexError(f"mutation index {k} out of range for size {size}")
    b = mat.entries
    new = []
    for i in range(size):
        row = []
        for j in range(size):
            if i == k or j == k:
                row.append(-b[i][j])
            else:
                row.append(b[i][j] + (abs(b[i][k]) * b[k][j] + b[i][k] * abs(b[k][j])) // 2)
        new.append(tuple(row))
    return ExchangeMatrix(mat.order, tuple(new))


def cartan_counterpart(mat) -> Rows:
    """2 on the diagonal, -|b_ij| off it."""
    rows = mat.entries if isinstance(mat, ExchangeMatrix) else mat
    k = len(rows)
    return tuple(
        tuple(2 if i == j else -abs(rows[i][j]) for j in range(k)) for i in range(k)
    )


def initial_seed(n: int) -> Seed:
    """The zig-zag maximal rigid object and its explicitly known matrix.

    Summand j (1-based, quasi-length n-j) is (ceil(j/2), n-j); the matrix
    has b_12 = -2, b_21 = 1 and alternating +-1 off-diagonal pairs below.
    """
    if n < 2:
        raise ValueError(f"rank must be >= 2, got {n}")
    summands = tuple(TubeObject((j + 1) // 2, n - j, n) for j in range(1, n))
    obj = MaximalRigid(n, summands)
    assert obj.summands == summands, "zig-zag object is not in canonical order"
    size = n - 1
    rows = [[0] * size for _ in range(size)]
    if size >= 2:
        rows[0][1], rows[1][0] = -2, 1
    for j in range(1, size - 1):
        rows[j][j + 1] = (-1) ** (j + 1)
        rows[j + 1][j] = (-1) ** j
    mat = ExchangeMatrix(summands, tuple(tuple(r) for r in rows))
    return Seed(obj, mat)


def exchange(t: MaximalRigid, k: int) -> tuple[MaximalRigid, int]:
    """Swap summand ``k`` for its unique complement; returns the new
    object and the index the new summand occupies in canonical order."""
    if not 0 <= k < len(t.summands):
        raise IndexError(f"summand index {k} out of range")
    removed = t.summands[k]
    tbar = t.summands[:k] + t.summands[k + 1 :]
    first, second = complements(tbar, t.n)
    other = second if first == removed else first
    t2 = MaximalRigid(t.n, tbar + (other,))
    return t2, t2.summands.index(other)


def _canonicalize(order: tuple[TubeObject, ...], rows: Rows) -> ExchangeMatrix:
    perm = sorted(range(len(order)), key=lambda i: canonical_key(order[i]))
    new_order = tuple(order[i] for i in perm)
    new_rows = tuple(tuple(rows[i][j] for j in perm) for i in perm)
    return ExchangeMatrix(new_order, new_rows)


class ExchangeGraph:
    """All seeds at rank n, with B-matrices propagated by BFS.

    ``nodes`` maps each maximal rigid object to its canonical-order
    matrix; ``edges`` holds every directed triple (t, k, t').
    """

    def __init__(self, n: int):
        self.n = n
        seed = initial_seed(n)
        self.nodes: dict[MaximalRigid, ExchangeMatrix] = {seed.object: seed.matrix}
        self.edges: list[tuple[MaximalRigid, int, MaximalRigid]] = []
        queue = deque([seed.object])
        while queue:
            t = queue.popleft()
            mat = self.nodes[t]
            for k in range(n - 1):
                t2, _ = exchange(t, k)
                mutated = fz_mutate(mat, k)
                new_summand = next(x for x in t2.summands if x not in t.summands)
                order = mat.order[:k] + (new_summand,) + mat.order[k + 1 :]
                mat2 = _canonicalize(order, mutated.entries)
                if any(abs(v) > _ENTRY_BOUND for row in mat2.entries for v in row):
                    raise TheoremViolationError(
                        f"entry out of range in the matrix at {t2}: {mat2.entries}"
                    )
                if not is_sign_skew_symmetric(mat2):
                    raise TheoremViolationError(
                        f"matrix at {t2} is not sign-skew-symmetric: {mat2.entries}"
                    )
                if t2 in self.nodes:
                    if self.nodes[t2].entries != mat2.entries:
                        raise TheoremViolationError(
                            f"path-independence failure at {t2}: "
                            f"{self.nodes[t2].entries} vs {mat2.entries}"
                        )
                else:
                    self.nodes[t2] = mat2
                    queue.append(t2)
                self.edges.append((t, k, t2))
        missing = set(enumerate_maximal_rigid(n)) - set(self.nodes)
        if missing:
            raise TheoremViolationError(
                f"exchange graph at rank {n} misses {len(missing)} objects"
            )

    def b_matrix(self, t: MaximalRigid) -> ExchangeMatrix:
        try:
            return self.nodes[t]
        except KeyError:
            raise StructuralError(f"unknown node {t}") from None

    def middle_terms(self, t: MaximalRigid, i: int) -> MiddleTerms:
        mat = self.b_matrix(t)
        row = mat.entries[i]
        u: list[TubeObject] = []
        u_prime: list[TubeObject] = []
        for j, v in enumerate(row):
            u.extend([mat.order[j]] * max(-v, 0))
            u_prime.extend([mat.order[j]] * max(v, 0))
        return MiddleTerms(tuple(u), tuple(u_prime))

    def undirected_edges(self) -> set[frozenset[MaximalRigid]]:
        return {frozenset((t, t2)) for t, _, t2 in self.edges}


@lru_cache(maxsize=None)
def build_exchange_graph(n: int) -> ExchangeGraph:
    return ExchangeGraph(n)


def b_matrix(t: MaximalRigid) -> ExchangeMatrix:
    """Canonical-order B-matrix of ``t`` (builds the graph for its rank)."""
    return build_exchange_graph(t.n).b_matrix(t)
