"""Maximal rigid objects: enumeration, structure, complements, witnesses."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import networkx as nx

from .errors import StructuralError, TheoremViolationError
from .tube import (
    TubeObject,
    canonical_key,
    ext_dim_cluster,
    is_rigid_indec,
    wing_contains,
)


@dataclass(frozen=True)
class MaximalRigid:
    """A maximal rigid object, as its canonically ordered summand list.

    Construction validates everything: n-1 distinct pairwise compatible
    rigid summands, a unique top of quasi-length n-1, and containment of
    all summands in the top's wing.
    """

    n: int
    summands: tuple[TubeObject, ...]

    def __post_init__(self) -> None:
        objs = tuple(sorted(self.summands, key=canonical_key))
        object.__setattr__(self, "summands", objs)
        if len(objs) != self.n - 1:
            raise StructuralError(
                f"expected {self.n - 1} summands at rank {self.n}, got {len(objs)}"
            )
        if len(set(objs)) != len(objs):
            raise StructuralError(f"repeated summands in {objs}")
        for x in objs:
            if x.n != self.n:
                raise StructuralError(f"summand {x} has rank {x.n}, not {self.n}")
        if not is_rigid_set(objs):
            raise StructuralError(f"{objs} is not rigid")
        tops = [x for x in objs if x.b == self.n - 1]
        if len(tops) != 1:
            raise StructuralError(
                f"{objs} has {len(tops)} summands of quasi-length {self.n - 1}"
            )
        top = tops[0]
        for x in objs:
            if not wing_contains(top, x):
                raise StructuralError(f"summand {x} outside the wing of {top}")

    @property
    def top(self) -> TubeObject:
        return next(x for x in self.summands if x.b == self.n - 1)

    def __repr__(self) -> str:
        inner = ";".join(f"{x.a},{x.b}" for x in self.summands)
        return f"MaximalRigid[{inner}]@{self.n}"


@dataclass(frozen=True)
class TiltingDatum:
    """Top coordinate plus positions of the other summands in its wing.

    A wing position is ``(offset, quasi_length)`` where ``offset`` is the
    socle distance from the top, taken cyclically.
    """

    n: int
    top_coordinate: int
    wing_positions: frozenset[tuple[int, int]]


def is_rigid_set(objs: Iterable[TubeObject]) -> bool:
    """Ext^1 vanishes on all ordered pairs, self-pairs included."""
    objs = list(objs)
    for i, x in enumerate(objs):
        for y in objs[i:]:
            if ext_dim_cluster(x, y) != 0:
                return False
    return True


@lru_cache(maxsize=None)
def enumerate_rigid_indecs(n: int) -> tuple[TubeObject, ...]:
    """All n(n-1) rigid indecomposables, in canonical order."""
    objs = [TubeObject(a, b, n) for a in range(1, n + 1) for b in range(1, n)]
    return tuple(sorted(objs, key=canonical_key))


@lru_cache(maxsize=None)
def compatibility(n: int) -> dict[TubeObject, frozenset[TubeObject]]:
    """Adjacency of the Ext-vanishing graph on rigid indecomposables."""
    objs = enumerate_rigid_indecs(n)
    return {
        x: frozenset(y for y in objs if y != x and ext_dim_cluster(x, y) == 0)
        for x in objs
    }


@lru_cache(maxsize=None)
def enumerate_maximal_rigid(n: int) -> tuple[MaximalRigid, ...]:
    """All maximal rigid objects, via maximal cliques of the
    compatibility graph; every clique must have exactly n-1 vertices."""
    g = nx.Graph()
    g.add_nodes_from(enumerate_rigid_indecs(n))
    for x, nbrs in compatibility(n).items():
        g.add_edges_from((x, y) for y in nbrs)
    result = []
    for clique in nx.find_cliques(g):
        if len(clique) != n - 1:
            raise TheoremViolationError(
                f"maximal clique of size {len(clique)} at rank {n}: {clique}"
            )
        result.append(MaximalRigid(n, tuple(clique)))
    result.sort(key=lambda t: tuple(canonical_key(x) for x in t.summands))
    return tuple(result)


def top_summand(t: MaximalRigid) -> TubeObject:
    """The unique summand of quasi-length n-1."""
    return t.top


def to_tilting_datum(t: MaximalRigid) -> TiltingDatum:
    top = t.top
    positions = frozenset(
        ((x.a - top.a) % t.n, x.b) for x in t.summands if x != top
    )
    return TiltingDatum(t.n, top.a, positions)


def from_tilting_datum(d: TiltingDatum) -> MaximalRigid:
    n = d.n
    top = TubeObject(d.top_coordinate, n - 1, n)
    summands = [top]
    for offset, b in d.wing_positions:
        summands.append(TubeObject((d.top_coordinate - 1 + offset) % n + 1, b, n))
    return MaximalRigid(n, tuple(summands))  # raises StructuralError if bogus


def complements(tbar: Sequence[TubeObject], n: int | None = None) -> tuple[TubeObject, TubeObject]:
    """The two indecomposables completing an almost complete object.

    ``tbar`` must have n-2 pairwise compatible rigid summands (rank can
    be passed explicitly for the empty set at n=2).  Anything other than
    exactly two completions falsifies the unique-exchange axiom.
    """
    tbar = tuple(tbar)
    if n is None:
        if not tbar:
            raise ValueError("rank is required for an empty almost complete object")
        n = tbar[0].n
    if len(tbar) != n - 2:
        raise StructuralError(
            f"almost complete object at rank {n} needs {n - 2} summands, got {len(tbar)}"
        )
    adj = compatibility(n)
    if tbar:
        candidates = frozenset.intersection(*(adj[x] for x in tbar))
        candidates = candidates - set(tbar)
    else:
        candidates = frozenset(enumerate_rigid_indecs(n))
    found = sorted(
        (x for x in candidates if _completes(tbar, x, n)), key=canonical_key
    )
    if len(found) != 2:
        raise TheoremViolationError(
            f"{tbar} has {len(found)} completions: {found}"
        )
    return found[0], found[1]


def _completes(tbar: tuple[TubeObject, ...], x: TubeObject, n: int) -> bool:
    try:
        MaximalRigid(n, tbar + (x,))
    except StructuralError:
        return False
    return True


def cluster_tilting_witness(t: MaximalRigid, k: int) -> TubeObject:
    """A non-summand with Ext^1(t, -) = 0 but nonzero self-extensions,
    certifying that maximal rigid does not imply cluster-tilting."""
    if k < 2:
        raise ValueError(f"witness index must be >= 2, got {k}")
    return TubeObject(t.top.a, k * t.n - 1, t.n)
