"""Point placements for graphs: verification, constructions and search."""
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np
from scipy.optimize import least_squares

from .errors import InputTooLarge, InvalidInput, NonpositiveD, SizeMismatch
from .geometry import DEFAULT_TOL, Cmp, Point, Tolerance, cmp_dist2, dist2, rotate
from .graphs import BicoloredGraph, EdgeLabel, SimpleGraph
from .precision import mp, scalar_str, to_scalar

SAMPLING_TOL = Tolerance(1e-9)
REALIZE_LIMIT = 16
HYPERCUBE_LIMIT = 10
COINCIDENCE_GAP = 1e-3


@dataclass
class UdrReport:
    is_udr: bool
    is_faithful: bool
    edge_violations: list = field(default_factory=list)
    nonedge_unit_pairs: list = field(default_factory=list)
    coincident_pairs: list = field(default_factory=list)

    def to_json(self):
        return {
            "is_udr": self.is_udr,
            "is_faithful": self.is_faithful,
            "edge_violations": [list(e) for e in self.edge_violations],
            "nonedge_unit_pairs": [list(e) for e in self.nonedge_unit_pairs],
            "coincident_pairs": [list(e) for e in self.coincident_pairs],
        }


def embedding_to_json(emb):
    return {"points": [[scalar_str(p.x), scalar_str(p.y)] for p in emb]}


def embedding_from_json(data):
    if isinstance(data, str):
        data = json.loads(data)
    try:
        return [Point(to_scalar(str(x)), to_scalar(str(y))) for x, y in data["points"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidInput(f"malformed embedding json: {exc}") from None


def as_array(emb):
    return np.array([[float(p.x), float(p.y)] for p in emb], dtype=float).reshape(-1, 2)


def _check_size(g, emb):
    if len(emb) != g.n:
        raise SizeMismatch(f"graph has {g.n} vertices, embedding has {len(emb)} points")


def _classify(n, emb, targets, tol):
    """Map each pair to the first target it hits (EQUAL), or None."""
    out = {}
    eps = tol.value()
    for i, j in combinations(range(n), 2):
        r2 = dist2(emb[i], emb[j])
        if r2 <= eps:
            out[(i, j)] = "coincident"
            continue
        for name, t2 in targets:
            if abs(r2 - t2) <= eps:
                out[(i, j)] = name
                break
        else:
            out[(i, j)] = None
    return out


def verify(g, emb, tol=DEFAULT_TOL):
    _check_size(g, emb)
    cls = _classify(g.n, emb, [("unit", mp.mpf(1))], tol)
    edges = set(g.edges)
    viol = [e for e in g.edges if cls[e] != "unit"]
    extra = [p for p, c in cls.items() if c == "unit" and p not in edges]
    coinc = [p for p, c in cls.items() if c == "coincident"]
    udr = not viol and not coinc
    return UdrReport(udr, udr and not extra, viol, extra, coinc)


def verify_bicolored(bg, emb, d, tol=DEFAULT_TOL):
    d = to_scalar(d)
    if d <= 0:
        raise NonpositiveD("d must be positive")
    _check_size(bg, emb)
    cls = _classify(bg.n, emb, [("unit", mp.mpf(1)), ("d", d * d)], tol)
    want = {EdgeLabel.UNIT: "unit", EdgeLabel.D: "d"}
    viol = []
    for e in bg.base.edges:
        got = cls[e]
        if got == want[bg.labels[e]]:
            continue
        # when d == 1 both labels are satisfied by a unit pair
        if got == "unit" and abs(d - 1) * (d + 1) <= tol.value():
            continue
        viol.append(e)
    edges = set(bg.base.edges)
    extra = [p for p, c in cls.items() if c in ("unit", "d") and p not in edges]
    coinc = [p for p, c in cls.items() if c == "coincident"]
    udr = not viol and not coinc
    return UdrReport(udr, udr and not extra, viol, extra, coinc)


def unit_pairs(emb, r=1, tol=SAMPLING_TOL):
    """All index pairs at distance r; a float prefilter keeps this fast."""
    arr = as_array(emb)
    r = to_scalar(r)
    rf = float(r)
    n = len(emb)
    if n < 2:
        return []
    diff = arr[:, None, :] - arr[None, :, :]
    d2 = (diff ** 2).sum(-1)
    ii, jj = np.nonzero(np.triu(np.abs(d2 - rf * rf) < 1e-6, 1))
    r2 = r * r
    return [(int(i), int(j)) for i, j in zip(ii, jj)
            if cmp_dist2(emb[i], emb[j], r2, tol) is Cmp.EQUAL]


def graph_of(emb, tol=SAMPLING_TOL):
    return SimpleGraph(len(emb), tuple(unit_pairs(emb, 1, tol)))


def _random_angle(rng):
    return mp.mpf(rng.uniform(0.0, 2 * np.pi))


def _distinct(points, tol):
    arr = as_array(points)
    if len(arr) < 2:
        return True
    d2 = ((arr[:, None, :] - arr[None, :, :]) ** 2).sum(-1)
    np.fill_diagonal(d2, np.inf)
    return bool(d2.min() > max(float(tol.value()), 1e-12))


def minkowski_sum(emb1, emb2, seed=0, tol=SAMPLING_TOL):
    """{p + R q} for a random rotation R; returns (graph, embedding)."""
    rng = np.random.default_rng(seed)
    origin = Point(mp.mpf(0), mp.mpf(0))
    while True:
        a = _random_angle(rng)
        rot = [rotate(q, origin, a) for q in emb2]
        pts = [p + q for p in emb1 for q in rot]
        if _distinct(pts, tol):
            return graph_of(pts, tol), pts


def doubled_copy(emb, seed=0, tol=SAMPLING_TOL):
    """The embedding together with a copy shifted by a random unit vector."""
    rng = np.random.default_rng(seed)
    while True:
        a = _random_angle(rng)
        shift = Point(mp.cos(a), mp.sin(a))
        pts = list(emb) + [p + shift for p in emb]
        if _distinct(pts, tol):
            return graph_of(pts, tol), pts


def unit_hypercube(order, seed=0, tol=SAMPLING_TOL):
    """Minkowski sum of `order` unit segments in random directions."""
    if order > HYPERCUBE_LIMIT:
        raise InputTooLarge(f"hypercube order must be <= {HYPERCUBE_LIMIT}")
    if order < 0:
        raise InvalidInput("order must be non-negative")
    rng = np.random.default_rng(seed)
    pts = [Point(mp.mpf(0), mp.mpf(0))]
    for _ in range(order):
        while True:
            a = _random_angle(rng)
            shift = Point(mp.cos(a), mp.sin(a))
            cand = pts + [p + shift for p in pts]
            if _distinct(cand, tol):
                pts = cand
                break
    return graph_of(pts, tol), pts


@dataclass(frozen=True)
class RealizeConfig:
    attempts: int = 64
    max_iterations: int = 2000
    seed: int = 0
    step_tolerance: float = 1e-15
    residual_tolerance: float = 1e-20
    workers: int = 1


def _make_residual(n, targets):
    """targets: {(i, j): squared length}. Other pairs get a separation barrier."""
    pairs = list(combinations(range(n), 2))
    ei = np.array([i for i, j in pairs], dtype=int)
    ej = np.array([j for i, j in pairs], dtype=int)
    is_edge = np.array([(i, j) in targets for i, j in pairs], dtype=bool)
    t2 = np.array([targets.get(p, 0.0) for p in pairs], dtype=float)
    gap2 = COINCIDENCE_GAP ** 2

    def fun(z):
        pts = z.reshape(n, 2)
        diff = pts[ei] - pts[ej]
        d2 = (diff ** 2).sum(-1)
        r = np.where(is_edge, d2 - t2, np.maximum(0.0, 1.0 - d2 / gap2))
        gauge = [pts[0, 0], pts[0, 1], pts[1, 1] if n > 1 else 0.0]
        return np.concatenate([r, gauge])

    def edge_error(z):
        pts = z.reshape(n, 2)
        diff = pts[ei] - pts[ej]
        d2 = (diff ** 2).sum(-1)
        return float(((d2 - t2)[is_edge] ** 2).sum()), float(np.sqrt(d2.min())) if len(d2) else np.inf

    return fun, edge_error


def _attempt(n, targets, cfg, scale, index):
    rng = np.random.default_rng([cfg.seed, index])
    z0 = rng.uniform(-2.0, 2.0, size=2 * n) * scale
    if n == 0:
        return np.zeros(0)
    fun, edge_error = _make_residual(n, targets)
    sol = least_squares(fun, z0, method="lm", xtol=cfg.step_tolerance, ftol=cfg.step_tolerance,
                        gtol=cfg.step_tolerance, max_nfev=cfg.max_iterations)
    err, gap = edge_error(sol.x)
    if err <= cfg.residual_tolerance and gap >= COINCIDENCE_GAP:
        return sol.x
    return None


def _search(n, targets, cfg, scale):
    if n > REALIZE_LIMIT:
        raise InputTooLarge(f"realize supports n <= {REALIZE_LIMIT}")
    if n <= 1:
        return [Point(mp.mpf(0), mp.mpf(0)) for _ in range(n)]
    workers = max(1, cfg.workers)
    found = None
    with ThreadPoolExecutor(max_workers=workers) as pool:
        for start in range(0, cfg.attempts, workers):
            idx = range(start, min(start + workers, cfg.attempts))
            results = list(pool.map(lambda i: _attempt(n, targets, cfg, scale, i), idx))
            # lowest index wins, so the answer does not depend on `workers`
            for r in results:
                if r is not None:
                    found = r
                    break
            if found is not None:
                break
    if found is None:
        return None
    pts = found.reshape(n, 2)
    return [Point(mp.mpf(float(x)), mp.mpf(float(y))) for x, y in pts]


def realize(g, cfg=RealizeConfig()):
    """Unit distance placement of g found by restarted least squares, or None."""
    targets = {e: 1.0 for e in g.edges}
    return _search(g.n, targets, cfg, 1.0)


def realize_bicolored(bg, d, cfg=RealizeConfig()):
    d = to_scalar(d)
    if d <= 0:
        raise NonpositiveD("d must be positive")
    df = float(d)
    targets = {e: (1.0 if bg.labels[e] is EdgeLabel.UNIT else df * df) for e in bg.base.edges}
    return _search(bg.n, targets, cfg, max(1.0, df))


def range_scan(bg, lo, hi, steps, cfg=RealizeConfig()):
    """Feasibility of the labelled graph on an evenly spaced grid of d."""
    lo = to_scalar(lo)
    hi = to_scalar(hi)
    if steps < 1:
        raise InvalidInput("steps must be positive")
    if steps == 1:
        grid = [lo]
    else:
        grid = [lo + (hi - lo) * k / (steps - 1) for k in range(steps)]
    return [(d, realize_bicolored(bg, d, cfg) is not None) for d in grid]


def count_equilateral(points, side, tol=SAMPLING_TOL):
    s2 = to_scalar(side) ** 2
    count = 0
    for a, b, c in combinations(points, 3):
        if all(cmp_dist2(p, q, s2, tol) is Cmp.EQUAL for p, q in ((a, b), (a, c), (b, c))):
            count += 1
    return count


_TRIPLES = {}


def count_equilateral_batch(arr, side, tol=1e-9):
    """Vectorised count for an array of point sets with shape (m, k, 2)."""
    arr = np.asarray(arr, dtype=float)
    k = arr.shape[1]
    if k not in _TRIPLES:
        _TRIPLES[k] = np.array(list(combinations(range(k), 3)), dtype=int).reshape(-1, 3)
    t = _TRIPLES[k]
    s2 = float(side) ** 2

    def ok(i, j):
        d2 = ((arr[:, t[:, i]] - arr[:, t[:, j]]) ** 2).sum(-1)
        return np.abs(d2 - s2) <= tol

    return (ok(0, 1) & ok(0, 2) & ok(1, 2)).sum(axis=1)
