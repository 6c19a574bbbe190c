"""Colour the Moser spindle and check the hexagonal 7-colouring.

Run: python3 demos/colorings.py
"""
from plane_chroma import catalog
from plane_chroma.coloring import (
    HexConfig, chromatic_number, export_cnf, hex_verify, k_colorable, max_color_multiplicity,
)
from plane_chroma.precision import mp

g, _ = catalog.moser_spindle()
print("spindle chromatic number:", chromatic_number(g))
print("a proper 4-colouring:", k_colorable(g, 4).colors)
print("largest colour class over all 4-colourings:", max_color_multiplicity(g, 4), "of", g.n)

# The same question as a SAT instance, for external solvers.
cnf = export_cnf(g, 3)
print("3-colouring CNF header:", cnf.splitlines()[0])

# Hexagons of side s between 1/sqrt7 and 1/2 keep unit pairs apart.
for s in (1 / mp.sqrt(7), mp.mpf("0.45"), mp.mpf(1) / 2):
    rep = hex_verify(HexConfig(s), 200_000, seed=0)
    print(f"side {mp.nstr(s, 6)}: {rep['violations']} same-colour unit pairs, "
          f"closest same-colour pair seen {rep['min_same_color_dist_observed']:.3f}")
