"""Numeric checks around the maximum edge count u(n) of unit distance graphs."""
from dataclasses import dataclass, field
from fractions import Fraction

from scipy.optimize import minimize_scalar

from . import catalog as _catalog
from .errors import InvalidInput
from .precision import mp

# u(n) for n = 1..16 as realised by the catalog placements
UNIT_PAIR_TABLE = (0, 1, 3, 5, 7, 9, 12, 14, 18, 20, 23, 27, 30, 33, 37, 41)
CROSSING_TERMS = 29


def crossing_h(x):
    x = float(x)
    q = (1 - x) / 4
    return (x + q) ** (1 / 3) + q ** (1 / 3)


def crossing_constant():
    """Maximum of h on [0, 1], found by golden-section search."""
    res = minimize_scalar(lambda x: -crossing_h(min(max(x, 0.0), 1.0)),
                          bracket=(0.0, 0.5, 1.0), method="golden", tol=1e-12)
    return float(-res.fun)


def crossing_constant_exact():
    return mp.cbrt(mp.mpf(2) / 3 * (2 + mp.sqrt(3)))


def u_upper_coefficient():
    return mp.cbrt(mp.mpf(2) / 3 * (2 + mp.sqrt(3)) * CROSSING_TERMS) / 2


def u_upper(n):
    if n < 1:
        raise InvalidInput("n must be positive")
    return u_upper_coefficient() * mp.mpf(n) ** (mp.mpf(4) / 3)


def catalog_unit_pairs():
    """[(n, edge count)] of the unit-grid catalog entries with the most edges per n."""
    best = {}
    for name in _catalog.names():
        if not name.startswith("schade-"):
            continue
        g, _, _ = _catalog.catalog(name)
        best[g.n] = max(best.get(g.n, 0), len(g.edges))
    return sorted(best.items())


@dataclass
class DensityReport:
    violations: list = field(default_factory=list)
    tight: list = field(default_factory=list)

    def to_json(self):
        return {"violations": self.violations, "tight": self.tight}


def density_recurrence_check(table):
    """Check u(n) <= n/(n-2) u(n-1) on consecutive rows (n, u_n) with n >= 3."""
    rows = list(table)
    rep = DensityReport()
    for (n0, u0), (n1, u1) in zip(rows, rows[1:]):
        if n1 != n0 + 1:
            raise InvalidInput("rows must have consecutive n")
        if n1 < 3:
            continue
        cap = Fraction(n1, n1 - 2) * u0
        if u1 > cap:
            rep.violations.append(n1)
        elif u1 == cap:
            rep.tight.append(n1)
    return rep
