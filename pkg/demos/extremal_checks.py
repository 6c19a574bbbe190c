"""Numbers around u(n), the most unit pairs among n points.

Run: python3 demos/extremal_checks.py
"""
from plane_chroma import bounds as B
from plane_chroma import extremal as E

print("crossing constant, golden section:", E.crossing_constant())
print("crossing constant, closed form:   ", E.crossing_constant_exact())
print("u(n) <= c n^(4/3) with c =", E.u_upper_coefficient())

rows = E.catalog_unit_pairs()
rep = E.density_recurrence_check(rows)
for n, u in rows:
    tag = " tight" if n in rep.tight else ""
    print(f"  n={n:2d} u={u:2d}  bound {float(E.u_upper(n)):7.2f}{tag}")

# Fewest monochromatic pairs among n points in four colours.
for n in range(2, 13):
    print(f"f({n}) = {B.f_min_mono_pairs(n)} (brute force {B.f_brute(n)})")
