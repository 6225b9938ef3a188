"""The 2n-gon picture: rigid objects as centrally symmetric diagonal pairs.

Rigid indecomposables biject with centrally symmetric pairs of diagonals
of a 2n-gon, Ext dimensions become crossing counts, maximal rigid
objects become centrally symmetric triangulations, and exchange becomes
the diagonal flip.
"""

from clustertube import (
    build_exchange_graph,
    crossing_points,
    delta,
    enumerate_maximal_rigid,
    enumerate_rigid_indecs,
    ext_dim_cluster,
    flip,
    flip_graph,
    graphs_isomorphic_via_delta,
    triangulation_of,
)

N = 3  # hexagon

print(f"rank {N}: rigid objects and their diagonal pairs in the {2*N}-gon")
for x in enumerate_rigid_indecs(N):
    print(f"  ({x.a},{x.b}) -> {delta(x)}")

print("\ncrossing counts = 2 x Ext dimensions:")
rigids = enumerate_rigid_indecs(N)
for x in rigids[:3]:
    for y in rigids[:3]:
        c = crossing_points(delta(x), delta(y))
        e = ext_dim_cluster(x, y)
        print(f"  {delta(x)} x {delta(y)}: {c} crossings, Ext^1 = {e}")
        assert c == 2 * e

print("\nmaximal rigid objects as centrally symmetric triangulations:")
for t in enumerate_maximal_rigid(N):
    tri = triangulation_of(t)
    pairs = ", ".join(str(p) for p in tri.sorted_pairs())
    print(f"  {' + '.join(f'({x.a},{x.b})' for x in t.summands)} -> {{{pairs}}}")

t0 = enumerate_maximal_rigid(N)[0]
tri0 = triangulation_of(t0)
p = next(p for p in tri0.pairs if p.degenerate)
print(f"\nflipping the diameter {p} of the first triangulation gives")
print(f"  {{{', '.join(str(q) for q in flip(tri0, p).sorted_pairs())}}}")

print("\nthe exchange graph and the flip graph are isomorphic, flip by flip:")
for n in (2, 3, 4):
    ok = graphs_isomorphic_via_delta(build_exchange_graph(n), flip_graph(n))
    print(f"  rank {n}: {ok}")
