"""Proper colourings of small graphs, DIMACS export and the hexagonal 7-colouring."""
import json
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import InputTooLarge, InvalidInput, PreconditionViolated
from .geometry import Point
from .precision import mp, to_scalar

ENUM_LIMIT = 10 ** 7


@dataclass(frozen=True)
class Coloring:
    k: int
    colors: tuple

    def to_json(self):
        return {"k": self.k, "colors": list(self.colors)}


def coloring_from_json(data):
    if isinstance(data, str):
        data = json.loads(data)
    try:
        return Coloring(int(data["k"]), tuple(int(c) for c in data["colors"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidInput(f"malformed coloring json: {exc}") from None


def is_proper(g, colors):
    return all(colors[u] != colors[v] for u, v in g.edges)


def k_colorable(g, k):
    """First proper k-colouring found by backtracking, or None.

    Vertices are visited by decreasing degree (ties by index) and colours
    are tried in increasing order, so the result is deterministic.
    """
    if k < 0:
        raise InvalidInput("k must be non-negative")
    if g.n == 0:
        return Coloring(k, ())
    if k == 0:
        return None
    adj = g.adjacency()
    order = sorted(range(g.n), key=lambda v: (-len(adj[v]), v))
    colors = [-1] * g.n

    def place(i):
        if i == len(order):
            return True
        v = order[i]
        used = {colors[w] for w in adj[v]}
        # symmetry: never open more than one fresh colour at a time
        top = max(colors) + 1
        for c in range(min(k, top + 1)):
            if c not in used:
                colors[v] = c
                if place(i + 1):
                    return True
        colors[v] = -1
        return False

    if place(0):
        return Coloring(k, tuple(colors))
    return None


def chromatic_number(g, max_k=None):
    limit = g.n if max_k is None else max_k
    for k in range(0, limit + 1):
        if k_colorable(g, k) is not None:
            return k
    return None


def _guard(n, k):
    if k ** n > ENUM_LIMIT:
        raise InputTooLarge(f"{k}^{n} assignments exceeds the enumeration limit {ENUM_LIMIT}")


def enumerate_proper_colorings(g, k):
    """All proper colourings with colours 0..k-1, in lexicographic order."""
    _guard(g.n, k)
    adj = g.adjacency()
    colors = [0] * g.n

    def rec(v):
        if v == g.n:
            yield Coloring(k, tuple(colors))
            return
        for c in range(k):
            if all(colors[w] != c for w in adj[v] if w < v):
                colors[v] = c
                yield from rec(v + 1)

    yield from rec(0)


def all_assignments(n, k):
    """Every map from n vertices to k colours as an (k^n, n) array, row-major lexicographic."""
    _guard(n, k)
    idx = np.arange(k ** n, dtype=np.int64)
    out = np.empty((k ** n, n), dtype=np.int8)
    for v in range(n - 1, -1, -1):
        out[:, v] = idx % k
        idx //= k
    return out


def max_color_multiplicity(g, k):
    """Largest colour class over all proper k-colourings (0 if none exist).

    Checked by brute force over all k^n assignments.
    """
    if g.n == 0 or k == 0:
        return 0
    assign = all_assignments(g.n, k)
    ok = np.ones(len(assign), dtype=bool)
    for u, v in g.edges:
        ok &= assign[:, u] != assign[:, v]
    if not ok.any():
        return 0
    good = assign[ok]
    counts = np.stack([(good == c).sum(axis=1) for c in range(k)], axis=1)
    return int(counts.max())


def cnf_var(v, c, k):
    return v * k + c + 1


def cnf_clauses(g, k):
    clauses = []
    for v in range(g.n):
        clauses.append([cnf_var(v, c, k) for c in range(k)])
        for a, b in combinations(range(k), 2):
            clauses.append([-cnf_var(v, a, k), -cnf_var(v, b, k)])
    for u, v in g.edges:
        for c in range(k):
            clauses.append([-cnf_var(u, c, k), -cnf_var(v, c, k)])
    return clauses


def export_cnf(g, k):
    """DIMACS CNF whose models are the proper k-colourings of g."""
    clauses = cnf_clauses(g, k)
    lines = [f"p cnf {g.n * k} {len(clauses)}"]
    lines += [" ".join(map(str, cl)) + " 0" for cl in clauses]
    return "\n".join(lines) + "\n"


def parse_dimacs(text):
    nvars = 0
    clauses = []
    cur = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            nvars = int(line.split()[2])
            continue
        for tok in line.split():
            lit = int(tok)
            if lit == 0:
                clauses.append(cur)
                cur = []
            else:
                cur.append(lit)
    return nvars, clauses


def dpll(nvars, clauses):
    """Small DPLL solver: a satisfying assignment {var: bool} or None."""

    def simplify(cls, lit):
        out = []
        for cl in cls:
            if lit in cl:
                continue
            reduced = [x for x in cl if x != -lit]
            if not reduced:
                return None
            out.append(reduced)
        return out

    def solve(cls, assign):
        while True:
            units = [cl[0] for cl in cls if len(cl) == 1]
            if not units:
                break
            lit = units[0]
            assign[abs(lit)] = lit > 0
            cls = simplify(cls, lit)
            if cls is None:
                return None
        if not cls:
            return assign
        lit = cls[0][0]
        for choice in (lit, -lit):
            nxt = simplify(cls, choice)
            if nxt is not None:
                a = dict(assign)
                a[abs(choice)] = choice > 0
                res = solve(nxt, a)
                if res is not None:
                    return res
        return None

    res = solve([list(cl) for cl in clauses], {})
    if res is None:
        return None
    for v in range(1, nvars + 1):
        res.setdefault(v, False)
    return res


# ---- hexagonal tiling -------------------------------------------------------

HEX_MIN_SIDE = 1 / mp.sqrt(7)
HEX_MAX_SIDE = mp.mpf(1) / 2


@dataclass(frozen=True)
class HexConfig:
    s: object

    def side(self):
        return to_scalar(self.s)


def _check_side(s):
    if s < HEX_MIN_SIDE * (1 - mp.mpf(2) ** -80) or s > HEX_MAX_SIDE * (1 + mp.mpf(2) ** -80):
        raise PreconditionViolated("hexagon side must lie in [1/sqrt(7), 1/2]")


# Flat-topped hexagons of side s. Centres sit on the lattice spanned by
# e1 = (3s/2, sqrt3 s/2) and e2 = (-3s/2, sqrt3 s/2), which are 120 degrees
# apart. A point belongs to the hexagon at centre c when, for the three
# side normals n_k at 30, 90 and 150 degrees, -h < n_k.(p - c) <= h with
# h = sqrt3 s / 2. That half-open rule hands each hexagon its interior, its
# two top vertices and the open upper three sides.

_NORMALS = ((mp.sqrt(3) / 2, mp.mpf(1) / 2), (mp.mpf(0), mp.mpf(1)), (-mp.sqrt(3) / 2, mp.mpf(1) / 2))
_NEIGH = ((0, 0), (1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1))


def _axial(px, py, s):
    # solve p = a e1 + b e2
    a = px / (3 * s) + py / (mp.sqrt(3) * s)
    b = -px / (3 * s) + py / (mp.sqrt(3) * s)
    return a, b


def hex_cell(p, cfg, tol=None):
    """Axial coordinates (a, b) of the hexagon that owns p."""
    s = cfg.side()
    tol = mp.mpf(2) ** -60 if tol is None else to_scalar(tol)
    x, y = to_scalar(p.x), to_scalar(p.y)
    fa, fb = _axial(x, y, s)
    a0, b0 = int(mp.nint(fa)), int(mp.nint(fb))
    h = mp.sqrt(3) * s / 2
    for da, db in _NEIGH + ((1, -1), (-1, 1), (2, 1), (1, 2), (-2, -1), (-1, -2)):
        a, b = a0 + da, b0 + db
        cx = 3 * s * (a - b) / 2
        cy = mp.sqrt(3) * s * (a + b) / 2
        inside = True
        for nx, ny in _NORMALS:
            t = nx * (x - cx) + ny * (y - cy)
            if not (t > -h + tol and t <= h + tol):
                inside = False
                break
        if inside:
            return a, b
    raise AssertionError("point not covered by nearby hexagons")


def hex_color(p, cfg, tol=None):
    _check_side(cfg.side())
    a, b = hex_cell(p, cfg, tol)
    return (a + 2 * b) % 7


def hex_color_array(xy, s):
    """Float64 vectorised colouring for sampling; xy has shape (m, 2)."""
    s = float(s)
    x = xy[:, 0]
    y = xy[:, 1]
    r3 = np.sqrt(3.0)
    fa = x / (3 * s) + y / (r3 * s)
    fb = -x / (3 * s) + y / (r3 * s)
    a0 = np.rint(fa).astype(np.int64)
    b0 = np.rint(fb).astype(np.int64)
    h = r3 * s / 2
    na = np.full(len(x), np.iinfo(np.int64).min)
    nb = np.zeros(len(x), dtype=np.int64)
    cand = _NEIGH + ((1, -1), (-1, 1))
    normals = [(r3 / 2, 0.5), (0.0, 1.0), (-r3 / 2, 0.5)]
    for da, db in cand:
        a = a0 + da
        b = b0 + db
        cx = 1.5 * s * (a - b)
        cy = r3 * s * (a + b) / 2
        inside = np.ones(len(x), dtype=bool)
        for nx, ny in normals:
            t = nx * (x - cx) + ny * (y - cy)
            inside &= (t > -h) & (t <= h)
        take = inside & (na == np.iinfo(np.int64).min)
        na[take] = a[take]
        nb[take] = b[take]
    if (na == np.iinfo(np.int64).min).any():
        raise AssertionError("uncovered sample")
    return (na + 2 * nb) % 7, na, nb


def hex_verify(cfg, samples, seed=0):
    """Sample point pairs at distance exactly 1 and count same-colour pairs.

    Also draws pairs at random distances and reports the smallest distance
    seen between same-coloured points lying in different hexagons.
    """
    s = cfg.side()
    _check_side(s)
    sf = float(s)
    rng = np.random.default_rng(seed)
    period = np.sqrt(21.0) * sf * 3
    violations = 0
    min_far = np.inf
    chunk = 200_000
    done = 0
    while done < samples:
        m = min(chunk, samples - done)
        p = rng.uniform(-period, period, size=(m, 2))
        ang = rng.uniform(0.0, 2 * np.pi, size=m)
        q = p + np.stack([np.cos(ang), np.sin(ang)], axis=1)
        cp, _, _ = hex_color_array(p, sf)
        cq, _, _ = hex_color_array(q, sf)
        violations += int((cp == cq).sum())
        r = rng.uniform(0.0, 4 * sf + 1, size=m)
        q2 = p + r[:, None] * np.stack([np.cos(ang), np.sin(ang)], axis=1)
        c1, a1, b1 = hex_color_array(p, sf)
        c2, a2, b2 = hex_color_array(q2, sf)
        far = (c1 == c2) & ((a1 != a2) | (b1 != b2))
        if far.any():
            min_far = min(min_far, float(r[far].min()))
        done += m
    return {"violations": violations, "min_same_color_dist_observed": min_far,
            "samples": samples, "side": sf}


def hex_vertices(a, b, s):
    """The six corners of hexagon (a, b), counter-clockwise from angle 0."""
    s = to_scalar(s)
    cx = 3 * s * (a - b) / 2
    cy = mp.sqrt(3) * s * (a + b) / 2
    return [Point(cx + s * mp.cos(k * mp.pi / 3), cy + s * mp.sin(k * mp.pi / 3)) for k in range(6)]
