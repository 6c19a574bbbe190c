"""Named graphs with exact placements.

Unit distance entries are looked up with `catalog(name)`, which returns
(graph, embedding, metadata). Labelled (1,d) entries live under the
"one-d-*" names; their metadata carries the sample d and the feasible
range of d.
"""
from itertools import combinations

from .errors import UnknownName
from .geometry import Point, rotate
from .graphs import BicoloredGraph, EdgeLabel, SimpleGraph
from .precision import mp

U = EdgeLabel.UNIT
D = EdgeLabel.D


def _p(x, y):
    return Point(mp.mpf(x), mp.mpf(y))


def _unit_graph(pts):
    """All pairs at exact distance one (checked with a tight tolerance)."""
    eps = mp.mpf(2) ** -100
    es = []
    for i, j in combinations(range(len(pts)), 2):
        dx = pts[i].x - pts[j].x
        dy = pts[i].y - pts[j].y
        if abs(dx * dx + dy * dy - 1) <= eps:
            es.append((i, j))
    return SimpleGraph(len(pts), tuple(es))


def _grid_points():
    h = mp.sqrt(3) / 2
    half = mp.mpf(1) / 2
    return {
        "o": _p(0, 0), "r": _p(1, 0), "l": _p(-1, 0),
        "ur": Point(half, h), "ul": Point(-half, h),
        "dr": Point(half, -h), "dl": Point(-half, -h),
        "top": Point(mp.mpf(0), 2 * h),
        "far": Point(3 * half, h),
    }


_GRID = {
    "schade-1": ["o"],
    "schade-2": ["o", "r"],
    "schade-3": ["o", "r", "ur"],
    "schade-4": ["o", "l", "ur", "ul"],
    "schade-5": ["o", "r", "l", "ur", "ul"],
    "schade-6.1": ["o", "r", "l", "ur", "ul", "far"],
    "schade-6.2": ["o", "r", "l", "ur", "ul", "dr"],
    "schade-6.3": ["o", "r", "l", "ur", "ul", "top"],
    "schade-7": ["o", "r", "l", "ur", "ul", "dr", "dl"],
    "schade-8.1": ["o", "r", "l", "ur", "ul", "dr", "dl", "top"],
}

_LETTERS = "ABCDEFGHIJKLMNOP"

_G16_EDGES = (
    "AB DE FM GA HO PL BK NJ IC DH GN FB EO PI AJ MK LC DF HB AL OK EM GP JC NI "
    "DG HN EA ML FP OJ BI KC EG MP ON KI FH MO PN LJ"
)

# vertex subsets (by letter) of the 16 vertex graph
_G16_SUBSETS = {
    "schade-6.4": "CLJKMO",
    "schade-8.2": "CLJKMAOE",
    "schade-8.3": "MONFGEHD",
    "schade-9": "CLIKJPMNO",
    "schade-10": "CLIKJPMNOB",
    "schade-11.1": "CLIKJPMNOBF",
    "schade-11.2": "CLIKJPMNOBA",
    "schade-12": "CLIKJPMNOBFH",
    "schade-13": "CLIKJPMNOBFHA",
    "schade-14.1": "LIKJPMNOBFHAGE",
    "schade-14.2": "CLIKJPMNOBFHAG",
    "schade-15": "ABCEFGHIJKLMNOP",
    "schade-16": _LETTERS,
}


def _g16_points():
    s = mp.sqrt
    q = mp.mpf(1) / 4
    a = s(mp.mpf(11) / 48)
    b = s(mp.mpf(11) / 16)
    c = s(mp.mpf(1) / 48)
    h = s(mp.mpf(11) / 4)
    return [
        Point(mp.mpf(-1) / 2, mp.mpf(0)),   # A
        Point(mp.mpf(1) / 2, mp.mpf(0)),    # B
        Point(mp.mpf(0), h),                # C
        Point(mp.mpf(0), -h),               # D
        Point(-q - a, -b - c),              # E
        Point(q - a, -b + c),               # F
        Point(-q + a, -b + c),              # G
        Point(q + a, -b - c),               # H
        Point(q + a, b + c),                # I
        Point(-q + a, b - c),               # J
        Point(q - a, b - c),                # K
        Point(-q - a, b + c),               # L
        Point(-s(mp.mpf(11) / 12), mp.mpf(0)),  # M
        Point(s(mp.mpf(11) / 12), mp.mpf(0)),   # N
        Point(mp.mpf(0), -s(mp.mpf(1) / 12)),   # O
        Point(mp.mpf(0), s(mp.mpf(1) / 12)),    # P
    ]


def _g16_edges():
    es = set()
    for tok in _G16_EDGES.split():
        u, v = (_LETTERS.index(ch) for ch in tok)
        es.add((min(u, v), max(u, v)))
    return es


def _subset(letters):
    pts = _g16_points()
    edges = _g16_edges()
    idx = [_LETTERS.index(ch) for ch in letters]
    pos = {v: i for i, v in enumerate(idx)}
    es = [(pos[u], pos[v]) for u, v in edges if u in pos and v in pos]
    return SimpleGraph(len(idx), tuple(es)), [pts[i] for i in idx]


def moser_spindle():
    o = _p(0, 0)
    b = _p(1, 0)
    c = rotate(b, o, mp.pi / 3)
    d = b + c
    ang = 2 * mp.asin(1 / (2 * mp.sqrt(3)))
    e, f, g = (rotate(p, o, ang) for p in (b, c, d))
    pts = [o, b, c, d, e, f, g]
    names = "ABCDEFG"
    es = "AB AC BC BD CD AE AF EF EG FG DG".split()
    edges = tuple((names.index(t[0]), names.index(t[1])) for t in es)
    return SimpleGraph(7, edges), pts


def hexagon_nonfaithful():
    """Hexagon plus centre with one spoke left out of the graph."""
    o = _p(0, 0)
    ring = [rotate(_p(1, 0), o, k * mp.pi / 3) for k in range(6)]
    pts = [o] + ring  # 0 = centre, ring vertex 1 has no spoke
    edges = [(0, k) for k in range(2, 7)]
    edges += [(1 + k, 1 + (k + 1) % 6) for k in range(6)]
    return SimpleGraph(7, tuple(edges)), pts


# ---- labelled (1,d) graphs -------------------------------------------------

def _bg(n, unit, dist):
    labels = {e: U for e in unit}
    labels.update({e: D for e in dist})
    return BicoloredGraph(SimpleGraph(n, tuple(labels)), labels)


def _rot(p, a):
    return rotate(p, _p(0, 0), a)


def one_d_1(d):
    """Two unit triangles sharing a vertex; d edges join matching corners."""
    phi = 2 * mp.asin(d / 2)
    b = _p(1, 0)
    c = _rot(b, mp.pi / 3)
    pts = [_p(0, 0), b, c, _rot(b, phi), _rot(c, phi)]
    return _bg(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)], [(1, 3), (2, 4)]), pts


def one_d_2(d):
    bg, pts = one_d_1(1 / d)
    return _inverse_pair(bg, pts, 1 / d)


def one_d_3(d):
    """Unit triangle ABC; X over the midpoint of AB; Y the circumcentre of ACX."""
    h = mp.sqrt(3) / 2
    x = (-mp.sqrt(3) + mp.sqrt(4 * d * d - 1)) / 2
    a, b, c = _p(0, 0), _p(1, 0), Point(mp.mpf(1) / 2, h)
    xp = Point(mp.mpf(1) / 2, h + x)
    y = _circumcentre(a, c, xp)
    pts = [a, b, c, xp, y]
    return _bg(5, [(0, 1), (0, 2), (1, 2)], [(0, 3), (1, 3), (3, 4), (0, 4), (2, 4)]), pts


def one_d_4(d):
    bg, pts = one_d_3(1 / d)
    return _inverse_pair(bg, pts, 1 / d)


def one_d_5(d):
    """Four isosceles triangles fanned around a common vertex."""
    beta = mp.acos(d / 2)
    gamma = mp.acos(1 / (2 * d))
    p1 = Point(d * mp.cos(beta), d * mp.sin(beta))
    p2 = _p(1, 0)
    p3 = _p(0, 0)
    p4 = Point(d * mp.cos(gamma), d * mp.sin(gamma))
    p5 = Point(mp.cos(beta + gamma), mp.sin(beta + gamma))
    pts = [p1, p2, p3, p4, p5]
    return _bg(5, [(0, 1), (1, 2), (2, 4), (3, 4)], [(0, 2), (2, 3), (1, 3), (0, 4)]), pts


def one_d_6():
    d = (mp.sqrt(6) + mp.sqrt(2)) / 2
    b = _p(1, 0)
    c = _rot(b, mp.pi / 3)
    dd = _rot(b, 7 * mp.pi / 6)
    e = _rot(b, 3 * mp.pi / 2)
    pts = [_p(0, 0), b, c, dd, e]
    bg = _bg(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)], [(2, 3), (1, 3), (2, 4)])
    return bg, pts, d


def one_d_7():
    phi = (1 + mp.sqrt(5)) / 2
    r = 1 / (2 * mp.sin(mp.pi / 5))
    pts = [Point(r * mp.cos(2 * mp.pi * k / 5), r * mp.sin(2 * mp.pi * k / 5)) for k in range(5)]
    side = [(k, (k + 1) % 5) for k in range(5)]
    star = [(k, (k + 2) % 5) for k in range(5)]
    return _bg(5, side, star), pts, phi


def one_d_8():
    bg, pts, phi = one_d_7()
    bg, pts = _inverse_pair(bg, pts, phi)
    return bg, pts, 1 / phi


def _inverse_pair(bg, pts, d):
    flip = {U: D, D: U}
    inv = BicoloredGraph(bg.base, {e: flip[lab] for e, lab in bg.labels.items()})
    return inv, [p.scale(1 / d) for p in pts]


def _circumcentre(a, b, c):
    dd = 2 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y))
    a2 = a.x ** 2 + a.y ** 2
    b2 = b.x ** 2 + b.y ** 2
    c2 = c.x ** 2 + c.y ** 2
    ux = (a2 * (b.y - c.y) + b2 * (c.y - a.y) + c2 * (a.y - b.y)) / dd
    uy = (a2 * (c.x - b.x) + b2 * (a.x - c.x) + c2 * (b.x - a.x)) / dd
    return Point(ux, uy)


# feasible ranges of d, as human readable strings
ONE_D_RANGES = {
    "one-d-1": "(0,2] minus {1}",
    "one-d-2": "[1/2,inf) minus {1}",
    "one-d-3": "[1/2,inf) minus {1}",
    "one-d-4": "(0,2] minus {1}",
    "one-d-5": "[1/2,2] minus {1}",
    "one-d-6": "{(sqrt6+sqrt2)/2}",
    "one-d-7": "{(1+sqrt5)/2}",
    "one-d-8": "{(sqrt5-1)/2}",
}

_ONE_D_SAMPLE = {
    "one-d-1": ("3/2", one_d_1),
    "one-d-2": ("3/2", one_d_2),
    "one-d-3": ("3/2", one_d_3),
    "one-d-4": ("3/4", one_d_4),
    "one-d-5": ("3/2", one_d_5),
}


def one_d_family(name, d):
    """Labelled graph and placement of a one-parameter entry at a given d."""
    if name not in _ONE_D_SAMPLE:
        raise UnknownName(f"no one-parameter labelled entry named {name!r}")
    return _ONE_D_SAMPLE[name][1](mp.mpf(d))


def names():
    out = list(_GRID) + list(_G16_SUBSETS)
    out.sort(key=_sort_key)
    return out + ["moser-spindle", "hexagon-nonfaithful"] + sorted(ONE_D_RANGES)


def _sort_key(name):
    tail = name.split("-", 1)[1]
    major, _, minor = tail.partition(".")
    return int(major), int(minor or 0)


def catalog(name):
    """(graph, embedding, metadata) for a named entry.

    Labelled entries return a BicoloredGraph and carry "d" in metadata.
    """
    if name in _GRID:
        h = _grid_points()
        pts = [h[k] for k in _GRID[name]]
        g = _unit_graph(pts)
        return g, pts, {"name": name, "kind": "unit", "n": g.n, "edges": len(g.edges),
                        "source": "triangular grid"}
    if name in _G16_SUBSETS:
        g, pts = _subset(_G16_SUBSETS[name])
        return g, pts, {"name": name, "kind": "unit", "n": g.n, "edges": len(g.edges),
                        "source": "induced subgraph of the 16 vertex graph"}
    if name == "moser-spindle":
        g, pts = moser_spindle()
        return g, pts, {"name": name, "kind": "unit", "n": 7, "edges": len(g.edges)}
    if name == "hexagon-nonfaithful":
        g, pts = hexagon_nonfaithful()
        return g, pts, {"name": name, "kind": "unit", "n": 7, "edges": len(g.edges),
                        "faithful": False}
    if name in _ONE_D_SAMPLE:
        dstr, fn = _ONE_D_SAMPLE[name]
        d = mp.mpf(dstr.split("/")[0]) / mp.mpf(dstr.split("/")[1])
        bg, pts = fn(d)
        return bg, pts, {"name": name, "kind": "one-d", "d": d, "d_label": dstr,
                         "range": ONE_D_RANGES[name]}
    fixed = {"one-d-6": (one_d_6, "(sqrt6+sqrt2)/2"), "one-d-7": (one_d_7, "(1+sqrt5)/2"),
             "one-d-8": (one_d_8, "(sqrt5-1)/2")}
    if name in fixed:
        fn, label = fixed[name]
        bg, pts, d = fn()
        return bg, pts, {"name": name, "kind": "one-d", "d": d, "d_label": label,
                         "range": ONE_D_RANGES[name]}
    raise UnknownName(f"no catalog entry named {name!r}")
