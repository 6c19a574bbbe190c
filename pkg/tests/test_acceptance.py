"""Acceptance suite: one PASS/FAIL line per criterion.

Run with `pytest tests/test_acceptance.py -s` to see the lines, or
directly with `python3 tests/test_acceptance.py`.
"""
import sys
import time
from fractions import Fraction as F
from itertools import combinations
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from plane_chroma import bounds as B  # noqa: E402
from plane_chroma import catalog, extremal  # noqa: E402
from plane_chroma.bounds import Branch, Family, Kind  # noqa: E402
from plane_chroma.coloring import (  # noqa: E402
    HexConfig, dpll, export_cnf, hex_verify, k_colorable, max_color_multiplicity, parse_dimacs,
)
from plane_chroma.embeddings import (  # noqa: E402
    SAMPLING_TOL, RealizeConfig, count_equilateral_batch, graph_of, realize, verify,
)
from plane_chroma.geometry import Tolerance  # noqa: E402
from plane_chroma.graphs import (  # noqa: E402
    BicoloredGraph, EdgeLabel, SimpleGraph, enumerate_small_graphs, inverse, is_udg_small,
    max_edges_small, offcolor_cycle_constraints,
)
from plane_chroma.precision import mp  # noqa: E402
from test_embeddings import _any_size_count, _valid_sets  # noqa: E402


def criterion_1():
    tol = Tolerance(mp.mpf(2) ** -60)
    names = [n for n in catalog.names() if n.startswith("schade-")] + ["moser-spindle"]
    bad = []
    for name in names:
        g, pts, _ = catalog.catalog(name)
        rep = verify(g, pts, tol)
        if not rep.is_udr or rep.edge_violations:
            bad.append(name)
    g16, _, _ = catalog.catalog("schade-16")
    ok = not bad and (g16.n, len(g16.edges)) == (16, 41)
    return ok, f"{len(names)} entries verified, graph 16 has {g16.n} vertices and {len(g16.edges)} edges"


def criterion_2():
    counts = tuple(u for _, u in extremal.catalog_unit_pairs())[:14]
    want = (0, 1, 3, 5, 7, 9, 12, 14, 18, 20, 23, 27, 30, 33)
    rep = extremal.density_recurrence_check(list(enumerate(want, start=1)))
    ok = counts == want and rep.violations == [] and 9 in rep.tight
    return ok, f"counts {counts}, violations {rep.violations}, tight at {rep.tight}"


def criterion_3():
    cfg = RealizeConfig(attempts=64, seed=0)
    mismatches = []
    total = 0
    for n in range(1, 6):
        for g in enumerate_small_graphs(n):
            total += 1
            pts = realize(g, cfg)
            expected = is_udg_small(g)
            if expected and (pts is None or not verify(g, pts, SAMPLING_TOL).is_udr):
                mismatches.append(g)
            if not expected and pts is not None:
                mismatches.append(g)
    maxes = [max_edges_small(n) for n in range(1, 6)]
    ok = not mismatches and maxes == [0, 1, 3, 5, 7]
    return ok, f"{total} classes, {len(mismatches)} disagreements, max edges {maxes}"


def criterion_4():
    g, _ = catalog.moser_spindle()
    three = k_colorable(g, 3)
    four = k_colorable(g, 4)
    mult = max_color_multiplicity(g, 4)
    ok = three is None and four is not None and mult == 2
    return ok, f"3-colourable={three is not None}, 4-colourable={four is not None}, max multiplicity {mult}"


def criterion_5():
    out = []
    ok = True
    for label, s in (("1/sqrt7", 1 / mp.sqrt(7)), ("0.45", mp.mpf("0.45")), ("1/2", mp.mpf(1) / 2)):
        rep = hex_verify(HexConfig(s), 10 ** 6, seed=0)
        ok &= rep["violations"] == 0
        out.append(f"s={label}: {rep['violations']} violations")
    return ok, ", ".join(out)


# (family, sample d inside the cell, expected value)
FAMILY_CELLS = [
    (Family.F1, "0.3", F(1, 50)), (Family.F1, "0.518", F(14, 775)), (Family.F1, "0.52", F(1, 100)),
    (Family.F3, "0.55", F(1, 125)), (Family.F3, "0.61", F(28, 3875)), (Family.F3, "0.615", F(1, 250)),
    (Family.F2, "0.55", F(1, 150)), (Family.F4, "0.3", F(1, 75)), (Family.F4, "0.518", F(28, 2325)),
    (Family.F5, "1.36", F(1, 200)), (Family.F5, "1.369", F(7, 775)), (Family.F5, "1.39", F(1, 100)),
]


def criterion_6():
    known = B.upper_bound_table()
    got = {}
    direct, inv = B.graph6_configs()
    got["13/75"] = B.lower_bound_expectation(direct, known).value == F(13, 75)
    got["13/150"] = B.lower_bound_expectation(inv, known).value == F(13, 150)
    for fam, d, want in FAMILY_CELLS:
        piece = B.lower_bound_expectation(B.family_config(fam, d), known)
        got[f"{fam.name}@{d}={want}"] = piece is not None and piece.value == want
    got["15/31"] = B.chain_bound(B.CHAIN_31).value == F(15, 31)
    got["12/25"] = B.chain_bound(B.CHAIN_25).value == F(12, 25)
    # the summary cell between 0.609404 and 0.610114 recomputes to 28/3875; the
    # printed 38/3875 must surface as a discrepancy note
    summary = B.summary_table()
    lows = summary.of_kind(Kind.LOWER)
    cell = [p for p in lows if abs(p.interval.lo - mp.mpf("0.609404")) < 1e-6][0]
    got["summary 28/3875 + note"] = cell.value == F(28, 3875) and "38/3875" in cell.note
    top = (mp.sqrt(5) - 1) / mp.sqrt(3)
    only = B.propagate(known, [Family.F2], max_rounds=4)
    exact = [p for p in only.of_kind(Kind.LOWER) if p.value == F(1, 325)]
    got["1/325 piece ends at (sqrt5-1)/sqrt3"] = len(exact) == 1 and abs(exact[0].interval.hi - top) < 1e-30
    seeded = B.propagate(summary, [Family.F2], max_rounds=4)
    grid = [top * k / 400 for k in range(1, 401)]
    got[">= 1/325 on (0, (sqrt5-1)/sqrt3]"] = all(
        seeded.query_lower(d) is not None and seeded.query_lower(d) >= F(1, 325) for d in grid)
    failed = [k for k, v in got.items() if not v]
    detail = (f"{len(got) - len(failed)}/{len(got)} exact values; the 0.609404-0.610114 cell recomputes "
              f"to 28/3875 and carries a note against the printed 38/3875")
    return not failed, detail + (f", failed {failed}" if failed else "")


def criterion_7():
    c = (mp.sqrt(3) - 1) / mp.sqrt(2)
    t = 2 / mp.sqrt(15)
    h = mp.mpf(1) / 2
    near, far = Branch.NEAR, Branch.FAR
    checks = [
        ("0.517638", B.family_d_of_x(Family.F4, c, near)),
        ("0.518878", B.family_d_of_x(Family.F4, t, near)),
        ("0.535233", B.family_d_of_x(Family.F4, h, near)),
        ("0.609404", B.family_d_of_x(Family.F2, c, near)),
        ("0.610114", B.family_d_of_x(Family.F2, t, near)),
        ("0.619657", B.family_d_of_x(Family.F2, h, near)),
        ("1.45466", B.family_d_of_x(Family.F3, h, far)),
        ("1.47007", B.family_d_of_x(Family.F3, t, far)),
        ("1.47123", B.family_d_of_x(Family.F3, c, far)),
        ("1.9318", B.family_d_of_x(Family.F1, mp.sqrt(2), far)),
    ]
    bad = [(want, mp.nstr(got, 8)) for want, got in checks if abs(got - mp.mpf(want)) > 1e-5]
    detail = f"{len(checks) - len(bad)}/{len(checks)} decimals within 1e-5"
    if bad:
        detail += f", off: {bad} (1.9318 is (sqrt6+sqrt2)/2 = 1.93185 cut to 4 places)"
    return not bad, detail


def criterion_8():
    golden = extremal.crossing_constant()
    exact = extremal.crossing_constant_exact()
    coef = extremal.u_upper_coefficient()
    ok = abs(golden - float(exact)) < 1e-9 and abs(coef - mp.mpf("2.082")) < 1e-3
    return ok, f"golden {golden:.12f} vs closed form {mp.nstr(exact, 13)}, coefficient {mp.nstr(coef, 7)}"


def criterion_9():
    bad = [n for n in range(13) if B.f_brute(n) != B.f_min_mono_pairs(n)]
    return not bad, "formula equals brute force for n = 0..12" if not bad else f"disagree at {bad}"


def criterion_10():
    rng = np.random.default_rng(10)
    g16, p16, _ = catalog.catalog("schade-16")
    mono = True
    for _ in range(300):
        verts = sorted(rng.choice(16, size=rng.integers(2, 17), replace=False).tolist())
        sub = [p16[v] for v in verts]
        mono &= graph_of(sub) == g16.induced(verts) and verify(g16.induced(verts), sub).is_udr

    k4 = SimpleGraph(4, tuple(combinations(range(4), 2)))
    flip = {"MIN_D": "MAX_D", "MAX_D": "MIN_D"}
    dual = True
    for mask in range(1 << 6):
        labs = {e: (EdgeLabel.D if mask >> i & 1 else EdgeLabel.UNIT) for i, e in enumerate(k4.edges)}
        bg = BicoloredGraph(k4, labs)
        a = {(c.witness_cycle, c.kind.value, c.bound) for c in offcolor_cycle_constraints(bg)}
        b = {(c.witness_cycle, flip[c.kind.value], 1 / c.bound) for c in offcolor_cycle_constraints(inverse(bg))}
        dual &= a == b

    worst = 0
    samples = 0
    ds = [np.sqrt(3), 2.0, 1 / np.sqrt(3), 0.5, (1 + np.sqrt(5)) / 2] + list(rng.uniform(0.2, 3.0, size=95))
    for d in ds:
        arr = _valid_sets(rng, 1000, d)
        by_side = count_equilateral_batch(arr, 1.0) + count_equilateral_batch(arr, d)
        worst = max(worst, int(by_side.max()), int(_any_size_count(arr).max()))
        samples += len(arr)

    spindle, _ = catalog.moser_spindle()
    runs = [realize(spindle, RealizeConfig(attempts=16, seed=7, workers=w)) for w in (1, 2, 8)]
    same = all([(float(p.x), float(p.y)) for p in r] == [(float(p.x), float(p.y)) for p in runs[0]]
               for r in runs)

    ok = mono and dual and worst <= 3 and samples == 100_000 and same
    return ok, (f"monotone={mono}, duality={dual}, max triangles {worst} over {samples} sets, "
                f"realize identical across workers={same}")


def criterion_cnf():
    rng = np.random.default_rng(11)
    disagree = 0
    cases = 0
    for n in range(1, 9):
        pairs = list(combinations(range(n), 2))
        for _ in range(40):
            es = [p for p in pairs if rng.random() < rng.uniform(0.2, 0.8)]
            g = SimpleGraph(n, tuple(es))
            for k in range(1, 5):
                cases += 1
                nv, cl = parse_dimacs(export_cnf(g, k))
                if (dpll(nv, cl) is not None) != (k_colorable(g, k) is not None):
                    disagree += 1
    return disagree == 0, f"{cases} graph/k cases, {disagree} disagreements"


CRITERIA = [
    ("1", "catalog verification", criterion_1, 1),
    ("2", "unit-pair table and density recurrence", criterion_2, 1),
    ("3", "small-graph classification vs realizer", criterion_3, 300),
    ("4", "Moser spindle colourings", criterion_4, 1),
    ("5", "hexagonal 7-colouring", criterion_5, 30),
    ("6", "exact bound values", criterion_6, 1),
    ("7", "family formula endpoints", criterion_7, 1),
    ("8", "extremal numerics", criterion_8, 1),
    ("9", "f(n) formula vs brute force", criterion_9, 120),
    ("10", "property suites", criterion_10, 300),
    ("CNF", "CNF export agrees with backtracking (n <= 8, k <= 4)", criterion_cnf, 60),
]


def run_one(tag, title, fn, budget):
    t = time.perf_counter()
    ok, detail = fn()
    dt = time.perf_counter() - t
    line = f"criterion {tag}: {'PASS' if ok else 'FAIL'} {title} ({dt:.2f} s, budget {budget} s) - {detail}"
    return ok, dt, line


# The printed 1.9318 is a 4-place truncation of (sqrt6+sqrt2)/2 = 1.931852, so no
# correct value lies within 1e-5 of it. The check stays strict and is expected to fail.
UNATTAINABLE = {"7": "printed 1.9318 is 5.2e-5 from the exact (sqrt6+sqrt2)/2"}


def _params():
    for c in CRITERIA:
        marks = [pytest.mark.xfail(strict=True, reason=UNATTAINABLE[c[0]])] if c[0] in UNATTAINABLE else []
        yield pytest.param(*c, id=c[0], marks=marks)


@pytest.mark.slow
@pytest.mark.parametrize("tag,title,fn,budget", list(_params()))
def test_criterion(tag, title, fn, budget, capsys):
    ok, dt, line = run_one(tag, title, fn, budget)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line
    assert dt < budget, line


if __name__ == "__main__":
    results = [run_one(*c) for c in CRITERIA]
    for _, _, line in results:
        print(line)
    sys.exit(0 if all(ok and dt < c[3] for (ok, dt, _), c in zip(results, CRITERIA)) else 1)
