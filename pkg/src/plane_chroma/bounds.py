"""Exact-rational bounds on monochromatic-pair densities p_d.

p_d is the density of monochromatic pairs at distance d in a colouring
that has no monochromatic unit pair (so p_1 = 0). Bounds are piecewise
constant in d and kept in a BoundTable of BoundPiece entries. Values are
Fractions; interval endpoints are extended-precision scalars with a
readable label.
"""
import csv
import io
from dataclasses import dataclass, field, replace
from enum import Enum
from fractions import Fraction
from itertools import combinations
from math import comb

import numpy as np

from . import catalog as _catalog
from .errors import DomainError, InputTooLarge, InvalidInput, MissingUpperBound, PreconditionViolated
from .geometry import dist2
from .graphs import EdgeLabel
from .precision import mp, to_scalar

BRUTE_LIMIT = 12
REL_TOL = mp.mpf(2) ** -80
SNAP_TOL = mp.mpf(10) ** -25
INF = mp.inf

# smallest upper bound known for any distance; kept only as metadata
EXTERNAL_MIN_UPPER = Fraction(1, 3)
LIMSUP_UPPER = Fraction(323, 675)


class Kind(Enum):
    LOWER = "LOWER"
    UPPER = "UPPER"


def _close(a, b, tol=REL_TOL):
    if a == b:
        return True
    if mp.isinf(a) or mp.isinf(b):
        return False
    return abs(a - b) <= tol * max(1, abs(a), abs(b))


@dataclass(frozen=True)
class Interval:
    lo: object
    hi: object
    lo_closed: bool = True
    hi_closed: bool = False
    lo_label: str = ""
    hi_label: str = ""

    def contains(self, d, tol=REL_TOL):
        d = to_scalar(d)
        # decide in double precision when d is clearly away from both ends
        df, lo, hi = float(d), float(self.lo), float(self.hi)
        slack = 1e-9 * max(1.0, abs(df))
        if df < lo - slack or df > hi + slack:
            return False
        if lo + slack < df < hi - slack:
            return True
        if _close(d, self.lo, tol):
            return self.lo_closed
        if _close(d, self.hi, tol):
            return self.hi_closed
        return self.lo < d < self.hi

    def covers_open(self, a, b, tol=REL_TOL):
        """True when (a, b) lies inside this interval."""
        lo_ok = self.lo < a or _close(self.lo, a, tol)
        hi_ok = self.hi > b or _close(self.hi, b, tol)
        return lo_ok and hi_ok

    def text(self):
        left = "[" if self.lo_closed else "("
        right = "]" if self.hi_closed else ")"
        return f"{left}{_fmt(self.lo)}, {_fmt(self.hi)}{right}"


def _fmt(v, digits=8):
    if mp.isinf(v):
        return "inf"
    return mp.nstr(v, digits)


@dataclass(frozen=True)
class BoundPiece:
    interval: Interval
    kind: Kind
    value: Fraction
    provenance: str
    note: str = ""


@dataclass
class BoundTable:
    pieces: list = field(default_factory=list)
    metadata: dict = field(default_factory=dict)

    def of_kind(self, kind):
        return [p for p in self.pieces if p.kind is kind]

    def query(self, d, kind=Kind.UPPER):
        """Tightest value at d: min over UPPER pieces, max over LOWER pieces."""
        vals = [p.value for p in self.pieces if p.kind is kind and p.interval.contains(d)]
        if not vals:
            return None
        return min(vals) if kind is Kind.UPPER else max(vals)

    def query_lower(self, d):
        return self.query(d, Kind.LOWER)

    def query_upper(self, d):
        return self.query(d, Kind.UPPER)

    def check_disjoint(self):
        """Pieces of one kind may only meet at endpoints."""
        for kind in Kind:
            ps = sorted(self.of_kind(kind), key=lambda p: p.interval.lo)
            for a, b in zip(ps, ps[1:]):
                if b.interval.lo < a.interval.hi and not _close(b.interval.lo, a.interval.hi):
                    return False
                if _close(b.interval.lo, a.interval.hi) and a.interval.hi_closed and b.interval.lo_closed:
                    return False
        return True

    def to_csv(self):
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["d_lo", "d_hi", "lo_closed", "hi_closed", "kind", "value_num", "value_den",
                    "provenance", "lo_label", "hi_label", "note"])
        order = sorted(self.pieces, key=lambda p: (p.kind.value, p.interval.lo))
        for p in order:
            iv = p.interval
            w.writerow([_fmt(iv.lo, 20), _fmt(iv.hi, 20), str(iv.lo_closed).lower(),
                        str(iv.hi_closed).lower(), p.kind.value, p.value.numerator,
                        p.value.denominator, p.provenance, iv.lo_label, iv.hi_label, p.note])
        return buf.getvalue()

    def to_svg(self, d_max=2.5, width=720, height=360):
        """Step plot of both bound kinds against d (values on a log-free linear axis)."""
        pad = 40
        vmax = 0.55

        def sx(d):
            return pad + (width - 2 * pad) * float(min(d, d_max)) / d_max

        def sy(v):
            return height - pad - (height - 2 * pad) * float(v) / vmax

        parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}">',
                 f'<line x1="{pad}" y1="{height - pad}" x2="{width - pad}" y2="{height - pad}" stroke="black"/>',
                 f'<line x1="{pad}" y1="{pad}" x2="{pad}" y2="{height - pad}" stroke="black"/>']
        colors = {Kind.LOWER: "#c0392b", Kind.UPPER: "#2459a6"}
        for p in self.pieces:
            iv = p.interval
            if iv.lo >= d_max:
                continue
            y = sy(p.value)
            parts.append(f'<line x1="{sx(iv.lo):.2f}" y1="{y:.2f}" x2="{sx(iv.hi):.2f}" y2="{y:.2f}" '
                         f'stroke="{colors[p.kind]}" stroke-width="2"><title>{p.kind.value} '
                         f'{p.value} on {iv.text()} ({p.provenance})</title></line>')
        parts.append(f'<text x="{width - pad}" y="{height - 10}" text-anchor="end">d</text>')
        parts.append("</svg>")
        return "\n".join(parts) + "\n"


# ---- elementary bounds -----------------------------------------------------

@dataclass(frozen=True)
class ChainSpec:
    name: str
    coeffs: tuple
    threshold: object = 0
    threshold_label: str = "0"


def chain_bound(spec):
    """Upper bound 1/2 - 1/(2k), k the coefficient sum, valid from the threshold on."""
    k = sum(spec.coeffs)
    if k <= 0 or any(c < 0 for c in spec.coeffs):
        raise InvalidInput("chain coefficients must be non-negative with a positive sum")
    value = Fraction(1, 2) - Fraction(1, 2 * k)
    iv = Interval(to_scalar(spec.threshold), INF, True, False, spec.threshold_label, "inf")
    return BoundPiece(iv, Kind.UPPER, value, spec.name)


def threshold_2_over_sqrt15():
    return 2 / mp.sqrt(15)


def threshold_chain25():
    return (mp.sqrt(3) - 1) / mp.sqrt(2)


CHAIN_31 = ChainSpec("chain-31", (5, 3, 3, 3, 5, 5, 7), threshold_2_over_sqrt15(), "2/sqrt15")
CHAIN_25 = ChainSpec("chain-25", (5, 2, 2, 2, 4, 4, 6), threshold_chain25(), "(sqrt3-1)/sqrt2")


def half_bound():
    iv = Interval(mp.mpf(1) / 2, INF, True, False, "1/2", "inf")
    return BoundPiece(iv, Kind.UPPER, Fraction(1, 2), "isosceles-half")


def upper_bound_table():
    raw = [half_bound(), chain_bound(CHAIN_31), chain_bound(CHAIN_25)]
    table = BoundTable(envelope(raw, Kind.UPPER))
    table.metadata = {"limsup_upper": LIMSUP_UPPER, "external_min_upper": EXTERNAL_MIN_UPPER}
    return table


def f_min_mono_pairs(n):
    """Fewest monochromatic pairs among n points coloured with 4 colours."""
    if n < 0:
        raise InvalidInput("n must be non-negative")
    return sum(comb((n + i) // 4, 2) for i in range(4))


def f_brute(n):
    """Same quantity by exhausting all 4^n colourings (n <= 12)."""
    if n > BRUTE_LIMIT:
        raise InputTooLarge(f"brute force supports n <= {BRUTE_LIMIT}")
    if n < 2:
        return 0
    tail = min(n, 8)
    head = n - tail
    idx = np.arange(4 ** tail, dtype=np.int64)
    digits = np.stack([(idx >> (2 * j)) & 3 for j in range(tail)], axis=1)
    tail_counts = np.stack([(digits == c).sum(axis=1) for c in range(4)], axis=1)
    best = None
    for prefix in range(4 ** head):
        pc = np.zeros(4, dtype=np.int64)
        for j in range(head):
            pc[(prefix >> (2 * j)) & 3] += 1
        counts = tail_counts + pc
        mono = (counts * (counts - 1) // 2).sum(axis=1).min()
        best = mono if best is None else min(best, mono)
    return int(best)


# ---- configurations --------------------------------------------------------

@dataclass(frozen=True)
class PointConfig:
    n: int
    d: object
    d_pair_count: int
    unit_pair_count: int
    other_distances: tuple = ()
    name: str = ""

    def __post_init__(self):
        total = self.d_pair_count + self.unit_pair_count + len(self.other_distances)
        if total != comb(self.n, 2):
            raise InvalidInput(f"pair counts sum to {total}, expected {comb(self.n, 2)}")
        if self.d_pair_count <= 0:
            raise InvalidInput("configuration needs at least one d pair")


def lower_bound_expectation(cfg, known):
    """p_d >= (f(n) - sum of upper bounds of the other distances) / (#d pairs).

    Returns None when the bound is not positive. Unit pairs contribute 0.
    """
    total = Fraction(0)
    for x in cfg.other_distances:
        u = known.query_upper(x)
        if u is None:
            raise MissingUpperBound(f"no upper bound known at distance {_fmt(to_scalar(x))}")
        total += u
    value = (f_min_mono_pairs(cfg.n) - total) / cfg.d_pair_count
    if value <= 0:
        return None
    d = to_scalar(cfg.d)
    iv = Interval(d, d, True, True, _fmt(d), _fmt(d))
    return BoundPiece(iv, Kind.LOWER, value, cfg.name or "expectation")


def halving_rule(d, x, known):
    """Consequences of 2 (1 - p_x) >= 1 - p_d, valid when x >= d/2.

    From an upper bound on p_d it yields p_x <= (1 + p_d)/2; from a lower
    bound on p_x it yields p_d >= 2 p_x - 1. Vacuous results (an upper
    bound of 1, a lower bound of 0 or less) are dropped.
    """
    d = to_scalar(d)
    x = to_scalar(x)
    if x < d / 2 and not _close(x, d / 2):
        raise PreconditionViolated("the halving rule needs x >= d/2")
    out = []
    ud = known.query_upper(d)
    if ud is not None:
        v = (1 + ud) / 2
        if v < 1:
            out.append(BoundPiece(Interval(x, x, True, True, _fmt(x), _fmt(x)), Kind.UPPER, v, "halving"))
    lx = known.query_lower(x)
    if lx is not None:
        v = 2 * lx - 1
        if v > 0:
            out.append(BoundPiece(Interval(d, d, True, True, _fmt(d), _fmt(d)), Kind.LOWER, v, "halving"))
    return out


# ---- envelope of piecewise constant bounds ---------------------------------

def envelope(pieces, kind):
    """Pointwise best (max for LOWER, min for UPPER) as disjoint merged pieces."""
    ps = [p for p in pieces if p.kind is kind]
    if not ps:
        return []
    better = max if kind is Kind.LOWER else min
    pts = []
    for p in ps:
        for v, lab in ((p.interval.lo, p.interval.lo_label), (p.interval.hi, p.interval.hi_label)):
            if not mp.isinf(v):
                pts.append((v, lab))
    pts.sort(key=lambda t: t[0])
    brk = []
    for v, lab in pts:
        if brk and _close(brk[-1][0], v):
            if not brk[-1][1] and lab:
                brk[-1] = (brk[-1][0], lab)
            continue
        brk.append((v, lab))

    # elementary parts: ("pt", v) or ("open", a, b)
    parts = []
    for i, (v, lab) in enumerate(brk):
        if i > 0:
            parts.append(("open", brk[i - 1], (v, lab)))
        parts.append(("pt", (v, lab)))
    if any(mp.isinf(p.interval.hi) for p in ps):
        parts.append(("open", brk[-1], (INF, "inf")))

    def best_at(part):
        if part[0] == "pt":
            hits = [p for p in ps if p.interval.contains(part[1][0])]
        else:
            a, b = part[1][0], part[2][0]
            hits = [p for p in ps if p.interval.covers_open(a, b)]
        if not hits:
            return None
        v = better(p.value for p in hits)
        provs = []
        notes = []
        for p in hits:
            if p.value == v:
                if p.provenance not in provs:
                    provs.append(p.provenance)
                if p.note and p.note not in notes:
                    notes.append(p.note)
        return v, provs, notes

    out = []
    run = None  # [value, provs, notes, lo, lo_label, lo_closed, hi, hi_label, hi_closed]
    for part in parts:
        got = best_at(part)
        if got is None or (run is not None and got[0] != run[0]):
            if run is not None:
                out.append(run)
                run = None
        if got is None:
            continue
        v, provs, notes = got
        if part[0] == "pt":
            lo, lo_lab, lo_c = part[1][0], part[1][1], True
            hi, hi_lab, hi_c = lo, lo_lab, True
        else:
            lo, lo_lab, lo_c = part[1][0], part[1][1], False
            hi, hi_lab, hi_c = part[2][0], part[2][1], False
        if run is None:
            run = [v, list(provs), list(notes), lo, lo_lab, lo_c, hi, hi_lab, hi_c]
        else:
            run[6], run[7], run[8] = hi, hi_lab, hi_c
            run[1] += [p for p in provs if p not in run[1]]
            run[2] += [n for n in notes if n not in run[2]]
    if run is not None:
        out.append(run)
    result = []
    for v, provs, notes, lo, lo_lab, lo_c, hi, hi_lab, hi_c in out:
        iv = Interval(lo, hi, lo_c, hi_c, lo_lab, hi_lab)
        result.append(BoundPiece(iv, kind, v, " + ".join(provs), "; ".join(notes)))
    return result


# ---- one-parameter (1,d) families -------------------------------------------

class Family(Enum):
    F1 = "one-d-1"
    F2 = "one-d-2"
    F3 = "one-d-3"
    F4 = "one-d-4"
    F5 = "one-d-5"


class Branch(Enum):
    NEAR = "NEAR"
    FAR = "FAR"


# domain of d for each family: (lo, lo_closed, hi, hi_closed); d = 1 is always excluded
def _domain(fam):
    half = mp.mpf(1) / 2
    two = mp.mpf(2)
    return {
        Family.F1: (mp.mpf(0), False, two, True),
        Family.F2: (half, True, INF, False),
        Family.F3: (half, True, INF, False),
        Family.F4: (mp.mpf(0), False, two, True),
        Family.F5: (half, True, two, True),
    }[fam]


def family_points(fam, d):
    """Labelled graph and placement of the family member at distance d."""
    return _catalog.one_d_family(fam.value, d)


def family_distances(fam, d):
    """(#unit pairs, #d pairs, [(pair, distance)] for the remaining pairs)."""
    bg, pts = family_points(fam, d)
    units = len(bg.edges_with(EdgeLabel.UNIT))
    ds = len(bg.edges_with(EdgeLabel.D))
    edges = set(bg.base.edges)
    others = [((i, j), mp.sqrt(dist2(pts[i], pts[j])))
              for i, j in combinations(range(bg.n), 2) if (i, j) not in edges]
    return units, ds, others


def family_config(fam, d):
    """PointConfig of the family member at distance d."""
    units, nd, others = family_distances(fam, d)
    return PointConfig(5, to_scalar(d), nd, units, tuple(x for _, x in others), f"{fam.value}-family")


def _sqrt(v):
    v = to_scalar(v)
    if v < 0:
        if v > -REL_TOL:
            return mp.mpf(0)
        raise DomainError("x lies outside the family's domain")
    return mp.sqrt(v)


def _f1_signed(x):
    return _sqrt(x * x / 2 + 1 + x * _sqrt(3 - 3 * x * x / 4))


def _f5_gap(d):
    """Distance between the two far corners of the fanned family at d."""
    return mp.sqrt((d * d / 2 - mp.mpf(1) / 2) ** 2
                   + (mp.sqrt(d * d - d ** 4 / 4) - mp.sqrt(d * d - mp.mpf(1) / 4)) ** 2)


def _bisect(f, a, b, target, iters=None):
    fa = f(a) - target
    fb = f(b) - target
    if fa == 0:
        return a
    if fb == 0:
        return b
    if fa * fb > 0:
        raise DomainError("value outside the branch range")
    iters = iters or mp.prec + 10
    for _ in range(iters):
        m = (a + b) / 2
        fm = f(m) - target
        if fm == 0:
            return m
        if (fm < 0) == (fa < 0):
            a, fa = m, fm
        else:
            b = m
    return (a + b) / 2


def family_d_of_x(fam, x, branch=None):
    """Closed-form d as a function of the governing non-edge distance x.

    For F1 and F3 a signed x may be passed with branch=None (negative x is
    the NEAR branch). F5 has no closed inverse and is solved by bisection,
    NEAR on [1/2, 1] and FAR on [1, 2].
    """
    x = to_scalar(x)
    if branch is None:
        if fam not in (Family.F1, Family.F3):
            raise InvalidInput("branch is required for this family")
        signed = x
    else:
        if x < 0:
            raise InvalidInput("x must be non-negative when a branch is given")
        signed = -x if branch is Branch.NEAR else x
    r3 = mp.sqrt(3)
    if fam is Family.F1:
        return _f1_signed(signed)
    if fam is Family.F3:
        return _sqrt(1 + signed * signed + r3 * signed)
    if fam is Family.F2:
        shift = -r3 / 2 if branch is Branch.NEAR else r3 / 2
        return _sqrt((x + shift) ** 2 + mp.mpf(1) / 4)
    if fam is Family.F4:
        if branch is Branch.NEAR:
            return (-r3 * x + _sqrt(4 - x * x)) / 2
        return _f1_signed(x)
    if fam is Family.F5:
        half = mp.mpf(1) / 2
        if branch is Branch.NEAR:
            return _bisect(_f5_gap, half, mp.mpf(1), x)
        return _bisect(_f5_gap, mp.mpf(1), mp.mpf(2), x)
    raise InvalidInput(f"unknown family {fam}")


def _thresholds(known):
    """Finite endpoints of the UPPER pieces, with labels."""
    out = []
    for p in known.of_kind(Kind.UPPER):
        for v, lab in ((p.interval.lo, p.interval.lo_label), (p.interval.hi, p.interval.hi_label)):
            if not mp.isinf(v) and all(not _close(v, w) for w, _ in out):
                out.append((v, lab))
    return sorted(out, key=lambda t: t[0])


def _scan_grid(lo, hi, steps=160):
    lo = mp.mpf(lo) if lo > 0 else mp.mpf(10) ** -6
    cap = mp.mpf(64) if mp.isinf(hi) else hi
    if cap <= 4:
        return [lo + (cap - lo) * k / steps for k in range(steps + 1)]
    mid = [lo + (4 - lo) * k / steps for k in range(steps + 1)]
    ratio = (cap / 4) ** (mp.mpf(1) / 30)
    return mid + [4 * ratio ** k for k in range(1, 31)]


def _root(fn, a, b):
    """Root of fn in the bracket [a, b]: Anderson-Bjorck steps, bisection as fallback."""
    try:
        r = mp.findroot(fn, (a, b), solver="anderson")
        if a <= r <= b:
            return r
    except (ValueError, ZeroDivisionError):
        pass
    return _bisect(fn, a, b, 0)


_CRITICAL_CACHE = {}


def _critical_points(fam, known, with_halving):
    """Values of d where some non-edge distance meets a threshold (or d/2)."""
    thr = _thresholds(known)
    key = (fam, with_halving, mp.prec, tuple(mp.nstr(v, 40) for v, _ in thr))
    if key not in _CRITICAL_CACHE:
        _CRITICAL_CACHE[key] = _scan_critical(fam, thr, with_halving)
    return list(_CRITICAL_CACHE[key])


def _scan_critical(fam, thr, with_halving):
    lo, _, hi, _ = _domain(fam)
    grid = _scan_grid(lo, hi)
    # brackets only need double precision; roots are polished at full precision
    with mp.workprec(53):
        samples = [[(p, +x) for p, x in family_distances(fam, d)[2]] for d in grid]
    targets = [(f"= {lab}", lambda d, v=v: v) for v, lab in thr]
    if with_halving:
        targets.append(("= d/2", lambda d: d / 2))
    found = []
    for k in range(len(samples[0])):
        for tag, target in targets:
            vals = [oth[k][1] - target(d) for d, oth in zip(grid, samples)]

            def fn(d, k=k, target=target):
                return family_distances(fam, d)[2][k][1] - target(d)

            for i in range(len(grid) - 1):
                if vals[i] == 0:
                    found.append((grid[i], k, tag))
                elif vals[i] * vals[i + 1] < 0:
                    found.append((_root(fn, grid[i], grid[i + 1]), k, tag))
    return found


def _cell_value(fam, d, known, with_halving, snap=()):
    """Best lower bound at a single d, or None.

    `snap` lists (pair index, exact value) for non-edge distances that sit
    on a threshold at this d, so the table lookup uses the exact endpoint.
    """
    units, nd, others = family_distances(fam, d)
    uppers = []
    eligible = []
    for k, (_, dist) in enumerate(others):
        exact = dict(snap).get(k)
        if exact is not None and exact != "half":
            dist = exact
        uppers.append(known.query_upper(dist))
        on_half = exact == "half"
        eligible.append(with_halving and (on_half or dist >= d / 2))
    best = None
    m = len(others)
    for mask in range(1 << m):
        total = Fraction(0)
        h = 0
        ok = True
        for k in range(m):
            if mask >> k & 1:
                if not eligible[k]:
                    ok = False
                    break
                h += 1
            elif uppers[k] is None:
                ok = False
                break
            else:
                total += uppers[k]
        if not ok:
            continue
        # p_x <= (1 + p_d)/2 for each halved pair, solved for p_d
        value = (f_min_mono_pairs(5) - total - Fraction(h, 2)) / (nd + Fraction(h, 2))
        if value > 0 and (best is None or value > best):
            best = value
    return best


def family_intervals(fam, known, with_halving=False):
    """LOWER pieces in d derived from one family and the known upper bounds."""
    lo, lo_closed, hi, hi_closed = _domain(fam)
    crit = _critical_points(fam, known, with_halving)
    thr = dict((lab, v) for v, lab in _thresholds(known))
    one = mp.mpf(1)
    marks = [(lo, "domain", None), (one, "excluded", None)]
    for d, k, tag in crit:
        marks.append((d, tag, k))
    if not mp.isinf(hi):
        marks.append((hi, "domain", None))
    marks.sort(key=lambda t: t[0])
    merged = []
    for d, tag, k in marks:
        if merged and _close(merged[-1][0], d, SNAP_TOL):
            merged[-1][1].append((tag, k))
        else:
            merged.append([d, [(tag, k)]])

    def snap_for(tags):
        out = []
        for tag, k in tags:
            if k is None:
                continue
            if tag == "= d/2":
                out.append((k, "half"))
            else:
                out.append((k, thr[tag[2:]]))
        return out

    def label_for(d, tags):
        sym = symbolic_label(d)
        if sym:
            return sym
        names = sorted({f"x {t}" for t, k in tags if k is not None})
        if not names:
            return _fmt(d, 12)
        return ", ".join(names)

    prov = f"{fam.value}-family"
    pieces = []
    ends = merged + ([[INF, [("domain", None)]]] if mp.isinf(hi) else [])
    for (a, atags), (b, btags) in zip(ends, ends[1:]):
        if mp.isinf(b):
            mid = a * 2 + 1
        else:
            mid = (a + b) / 2
        v = _cell_value(fam, mid, known, with_halving)
        if v is None:
            continue
        a_closed = _endpoint_closed(fam, a, atags, lo, lo_closed, hi, hi_closed, known, with_halving,
                                    snap_for(atags), v)
        b_closed = False if mp.isinf(b) else _endpoint_closed(
            fam, b, btags, lo, lo_closed, hi, hi_closed, known, with_halving, snap_for(btags), v)
        iv = Interval(a, b, a_closed, b_closed, label_for(a, atags),
                      "inf" if mp.isinf(b) else label_for(b, btags))
        pieces.append(BoundPiece(iv, Kind.LOWER, v, prov))
    return envelope(pieces, Kind.LOWER)


def _symbolic_constants():
    r2, r3, r5, r6 = mp.sqrt(2), mp.sqrt(3), mp.sqrt(5), mp.sqrt(6)
    return [
        ("0", mp.mpf(0)), ("1/2", mp.mpf(1) / 2), ("1", mp.mpf(1)), ("2", mp.mpf(2)),
        ("sqrt2", r2), ("(sqrt6-sqrt2)/2", (r6 - r2) / 2), ("(sqrt6+sqrt2)/2", (r6 + r2) / 2),
        ("(sqrt15-sqrt3)/4", (mp.sqrt(15) - r3) / 4), ("sqrt(5-2sqrt3)/2", mp.sqrt(5 - 2 * r3) / 2),
        ("sqrt((3-sqrt3)(1-1/sqrt2))", mp.sqrt((3 - r3) * (1 - 1 / r2))),
        ("sqrt(14/15)+1/sqrt5", mp.sqrt(mp.mpf(14) / 15) + 1 / r5),
        ("(sqrt5-1)/sqrt3", (r5 - 1) / r3), ("2/sqrt15", 2 / mp.sqrt(15)),
        ("(sqrt3-1)/sqrt2", (r3 - 1) / r2),
    ]


def symbolic_label(d):
    for lab, v in _symbolic_constants():
        if _close(d, v, SNAP_TOL):
            return lab
    return ""


def _endpoint_closed(fam, d, tags, lo, lo_closed, hi, hi_closed, known, with_halving, snap, v):
    if _close(d, mp.mpf(1), SNAP_TOL):
        return False
    if _close(d, lo, SNAP_TOL) and not lo_closed:
        return False
    if not mp.isinf(hi) and _close(d, hi, SNAP_TOL) and not hi_closed:
        return False
    if d <= 0:
        return False
    at = _cell_value(fam, d, known, with_halving, snap)
    return at is not None and at >= v


# ---- assembled tables --------------------------------------------------------

# Lower bound pieces as listed in the reference summary, used only to
# annotate discrepancies: (lo, hi, value, remark)
REFERENCE_SUMMARY = [
    ("0", "0.517638", Fraction(1, 50), ""),
    ("0.517638", "0.518878", Fraction(14, 775), "reference interval is printed without its upper end"),
    ("0.518878", "0.535233", Fraction(1, 100), ""),
    ("0.535233", "0.609404", Fraction(1, 125), ""),
    ("0.609404", "0.610114", Fraction(38, 3875), ""),
    ("0.610114", "0.619657", Fraction(1, 250), ""),
    ("1.358770", "1.368556", Fraction(1, 200), ""),
    ("1.368556", "1.369292", Fraction(7, 775), ""),
    ("1.369292", "1.413305", Fraction(1, 100), "reference upper end reads sqrt(14/15)+1/sqrt(15) (1.2240), "
                                               "which lies below the lower end; sqrt(14/15)+1/sqrt(5) fits"),
    ("1.413305", "1.414214", Fraction(14, 775), ""),
    ("1.414214", "2", Fraction(1, 50), "reference prints the inequality reversed"),
    ("2", "inf", Fraction(1, 125), ""),
]


def summary_pieces(known=None):
    """Pointwise best LOWER pieces over the five families."""
    known = known or upper_bound_table()
    raw = []
    for fam in Family:
        raw += family_intervals(fam, known)
    pieces = envelope(raw, Kind.LOWER)
    out = []
    for p in pieces:
        ref = _match_reference(p)
        notes = [p.note] if p.note else []
        if ref is not None:
            _, _, rv, remark = ref
            if rv != p.value:
                notes.append(f"reference value {rv} differs; recomputed {p.value}")
            if remark:
                notes.append(remark)
        out.append(replace(p, note="; ".join(notes)))
    return out


def _match_reference(piece):
    for lo, hi, v, remark in REFERENCE_SUMMARY:
        lo_v = mp.mpf(lo)
        hi_v = INF if hi == "inf" else mp.mpf(hi)
        if abs(piece.interval.lo - lo_v) < 1e-5 and (
                (mp.isinf(hi_v) and mp.isinf(piece.interval.hi)) or
                (not mp.isinf(hi_v) and abs(piece.interval.hi - hi_v) < 1e-5)):
            return lo, hi, v, remark
    return None


def summary_table():
    known = upper_bound_table()
    table = BoundTable(known.pieces + summary_pieces(known), dict(known.metadata))
    return table


def propagate(known, families=(), max_rounds=10):
    """Apply family rules (with the halving substitution) until nothing improves."""
    table = BoundTable(list(known.pieces), dict(known.metadata))
    for _ in range(max_rounds):
        fresh = []
        for fam in families:
            fresh += family_intervals(fam, table, with_halving=True)
        lowers = envelope(table.of_kind(Kind.LOWER) + fresh, Kind.LOWER)
        if _same(lowers, table.of_kind(Kind.LOWER)):
            break
        table = BoundTable(table.of_kind(Kind.UPPER) + lowers, table.metadata)
    return table


def _same(a, b):
    if len(a) != len(b):
        return False
    for p, q in zip(a, b):
        if p.value != q.value or not _close(p.interval.lo, q.interval.lo) or \
                not _close(p.interval.hi, q.interval.hi) or \
                p.interval.lo_closed != q.interval.lo_closed or p.interval.hi_closed != q.interval.hi_closed:
            return False
    return True


def graph6_configs():
    """The two point sets built from two unit triangles turned by 150 degrees."""
    r2 = mp.sqrt(2)
    d = (mp.sqrt(6) + mp.sqrt(2)) / 2
    direct = PointConfig(5, d, 3, 6, (r2,), "one-d-6")
    inverse = PointConfig(5, 1 / d, 6, 3, (r2 / d,), "one-d-6 inverse")
    return direct, inverse
