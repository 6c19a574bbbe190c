"""Walk through the unit distance catalog: verify, rebuild and search.

Run: python3 demos/unit_distance_catalog.py
"""
from plane_chroma import catalog
from plane_chroma.embeddings import RealizeConfig, realize, unit_hypercube, verify
from plane_chroma.graphs import SimpleGraph, is_udg_small

# Every catalog placement is checked at squared tolerance 2^-60.
for name in ["schade-5", "schade-9", "schade-16", "moser-spindle"]:
    g, pts, meta = catalog.catalog(name)
    rep = verify(g, pts)
    print(f"{name:15s} n={g.n:2d} edges={len(g.edges):2d} faithful={rep.is_faithful}")

# A placement can be a valid unit drawing while hiding an extra unit pair.
g, pts, _ = catalog.catalog("hexagon-nonfaithful")
rep = verify(g, pts)
print("hexagon without one spoke: udr", rep.is_udr, "extra unit pairs", rep.nonedge_unit_pairs)

# The realizer finds placements numerically; K4 has none.
house = SimpleGraph(5, ((0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (3, 4)))
pts = realize(house, RealizeConfig(attempts=32, seed=1))
print("house graph: exact test", is_udg_small(house), "realizer found", pts is not None)

# Sums of unit segments give many unit pairs cheaply.
for k in range(1, 6):
    g, _ = unit_hypercube(k, seed=k)
    print(f"hypercube order {k}: {g.n} points, {len(g.edges)} unit pairs")
