"""Build the piecewise bounds on p_d, the monochromatic density at distance d.

Run: python3 demos/distance_bounds.py
"""
from plane_chroma import bounds as B
from plane_chroma.bounds import Family, Kind

known = B.upper_bound_table()
print("upper bounds")
for p in known.pieces:
    print(f"  {p.interval.text():28s} p_d <= {p.value}  ({p.provenance})")

# Two unit triangles turned by 150 degrees: three pairs at d, one at sqrt2.
direct, inverse = B.graph6_configs()
print("\nfive points with one other distance:", B.lower_bound_expectation(direct, known).value,
      "and inverted:", B.lower_bound_expectation(inverse, known).value)

# Each one-parameter family turns the upper table into lower bounds in d.
for fam in Family:
    cells = ", ".join(f"{p.interval.text()} {p.value}" for p in B.family_intervals(fam, known))
    print(f"\n{fam.value}: {cells}")

print("\nbest lower bounds over all families")
for p in B.summary_table().of_kind(Kind.LOWER):
    note = f"  [{p.note}]" if p.note else ""
    print(f"  {p.interval.text():28s} p_d >= {p.value}{note}")

# Substituting the halving bound for the far pair extends the family-2 bound.
out = B.propagate(known, [Family.F2])
extra = [p for p in out.of_kind(Kind.LOWER) if p.value.denominator == 325]
print("\nwith halving:", extra[0].interval.text(), "p_d >=", extra[0].value)
