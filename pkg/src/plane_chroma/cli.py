"""Command line entry point: `plane-chroma <command> ...`."""
import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import bounds, catalog, coloring, embeddings, extremal
from .embeddings import RealizeConfig
from .errors import InvalidInput, InvariantBreach, PlaneChromaError, SearchExhausted
from .geometry import Tolerance
from .graphs import BicoloredGraph, graph_from_json
from .precision import mp, scalar_str, to_scalar


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _scalar(text):
    """Decimal, a/b fraction, or one of the names sqrt2, 1/sqrt7."""
    named = {"sqrt2": mp.sqrt(2), "1/sqrt7": 1 / mp.sqrt(7), "sqrt3": mp.sqrt(3)}
    if text in named:
        return named[text]
    try:
        if "/" in text:
            return to_scalar(Fraction(text))
        return to_scalar(text)
    except (ValueError, ZeroDivisionError):
        raise InvalidInput(f"not a number: {text!r}") from None


def _load_json(path):
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise InvalidInput(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"{path} is not valid json: {exc.msg}") from None


def _emit(obj):
    sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def _plain_graph(g):
    return g.base if isinstance(g, BicoloredGraph) else g


def cmd_verify(a):
    g = graph_from_json(_load_json(a.graph))
    emb = embeddings.embedding_from_json(_load_json(a.embedding))
    tol = Tolerance(_scalar(a.tol)) if a.tol else Tolerance()
    if isinstance(g, BicoloredGraph):
        if a.d is None:
            raise InvalidInput("labelled graph needs --d")
        rep = embeddings.verify_bicolored(g, emb, _scalar(a.d), tol)
    else:
        rep = embeddings.verify(g, emb, tol)
    _emit(rep.to_json())
    if not rep.is_udr:
        raise InvalidInput("embedding does not realize the graph")


def cmd_catalog(a):
    if a.action == "list":
        for name in catalog.names():
            print(name)
        return
    if not a.name:
        raise UsageError("catalog show needs a NAME")
    g, pts, meta = catalog.catalog(a.name)
    meta = {k: (scalar_str(v) if k == "d" else v) for k, v in meta.items()}
    files = {"graph.json": g.to_json(), "embedding.json": embeddings.embedding_to_json(pts),
             "meta.json": meta}
    if a.out:
        out = Path(a.out)
        out.mkdir(parents=True, exist_ok=True)
        for fname, obj in files.items():
            (out / fname).write_text(json.dumps(obj, indent=2, sort_keys=True) + "\n")
    else:
        _emit({"graph": files["graph.json"], "embedding": files["embedding.json"], "meta": meta})


def _realize_cfg(a):
    return RealizeConfig(attempts=a.attempts, seed=a.seed, workers=a.workers)


def cmd_realize(a):
    g = graph_from_json(_load_json(a.graph))
    cfg = _realize_cfg(a)
    if isinstance(g, BicoloredGraph):
        if a.d is None:
            raise InvalidInput("labelled graph needs --d")
        pts = embeddings.realize_bicolored(g, _scalar(a.d), cfg)
    else:
        pts = embeddings.realize(g, cfg)
    if pts is None:
        raise SearchExhausted(f"no placement found in {a.attempts} attempts")
    _emit(embeddings.embedding_to_json(pts))


def cmd_range_scan(a):
    g = graph_from_json(_load_json(a.graph))
    if not isinstance(g, BicoloredGraph):
        raise InvalidInput("range-scan needs a labelled graph")
    rows = embeddings.range_scan(g, _scalar(a.lo), _scalar(a.hi), a.steps, _realize_cfg(a))
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["d", "feasible"])
    for d, ok in rows:
        w.writerow([mp.nstr(d, 20), str(ok).lower()])
    sys.stdout.write(buf.getvalue())


def cmd_chromatic(a):
    g = _plain_graph(graph_from_json(_load_json(a.graph)))
    k = coloring.chromatic_number(g, a.max_k)
    if k is None:
        raise SearchExhausted(f"not colourable with at most {a.max_k} colours")
    print(k)


def cmd_colorings(a):
    g = _plain_graph(graph_from_json(_load_json(a.graph)))
    first = coloring.k_colorable(g, a.k)
    report = {"k": a.k, "n": g.n, "colorable": first is not None,
              "first": list(first.colors) if first else None}
    if a.stats:
        count = sum(1 for _ in coloring.enumerate_proper_colorings(g, a.k))
        mult = coloring.max_color_multiplicity(g, a.k)
        report.update({"count": count, "max_color_multiplicity": mult,
                       "density_bound": str(Fraction(mult, g.n)) if g.n else "0"})
    _emit(report)


def cmd_cnf(a):
    g = _plain_graph(graph_from_json(_load_json(a.graph)))
    sys.stdout.write(coloring.export_cnf(g, a.k))


def cmd_hex_verify(a):
    side = (1 / mp.sqrt(7)) if a.side in ("min", "1/sqrt7") else _scalar(a.side)
    rep = coloring.hex_verify(coloring.HexConfig(side), a.samples, a.seed)
    rep["min_same_color_dist_observed"] = repr(rep["min_same_color_dist_observed"])
    rep["side"] = scalar_str(side)
    _emit(rep)


def cmd_bounds(a):
    if a.action == "table":
        table = bounds.summary_table()
        text = table.to_csv()
        if a.csv:
            Path(a.csv).write_text(text)
        else:
            sys.stdout.write(text)
        if a.svg:
            Path(a.svg).write_text(table.to_svg())
        if not table.check_disjoint():
            raise InvariantBreach("bound pieces overlap")
        return
    if not a.config:
        raise UsageError("bounds derive needs --config")
    data = _load_json(a.config)
    try:
        cfg = bounds.PointConfig(int(data["n"]), _scalar(str(data["d"])), int(data["d_pair_count"]),
                                 int(data["unit_pair_count"]),
                                 tuple(_scalar(str(x)) for x in data.get("other_distances", [])),
                                 str(data.get("name", "")))
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidInput(f"malformed config: {exc}") from None
    piece = bounds.lower_bound_expectation(cfg, bounds.upper_bound_table())
    if piece is None:
        _emit({"kind": "LOWER", "value": None, "outcome": "not positive"})
        return
    _emit({"kind": piece.kind.value, "value": str(piece.value), "value_num": piece.value.numerator,
           "value_den": piece.value.denominator, "d": scalar_str(piece.interval.lo),
           "provenance": piece.provenance})


def cmd_extremal(a):
    rows = list(enumerate(extremal.UNIT_PAIR_TABLE, start=1))
    rep = extremal.density_recurrence_check(rows)
    _emit({
        "crossing_constant": repr(extremal.crossing_constant()),
        "crossing_constant_closed_form": scalar_str(extremal.crossing_constant_exact()),
        "u_upper_coefficient": scalar_str(extremal.u_upper_coefficient()),
        "u_table": [u for _, u in rows],
        "density_recurrence": rep.to_json(),
    })


def cmd_f(a):
    formula = bounds.f_min_mono_pairs(a.n)
    if a.brute:
        brute = bounds.f_brute(a.n)
        status = "agree" if brute == formula else "DISAGREE"
        print(f"formula={formula} brute={brute} {status}")
        if brute != formula:
            raise InvariantBreach("formula and brute force disagree")
    else:
        print(formula)


def build_parser():
    p = _Parser(prog="plane-chroma", description="Unit distance graphs, colourings and distance bounds.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("verify")
    s.add_argument("--graph", required=True)
    s.add_argument("--embedding", required=True)
    s.add_argument("--d")
    s.add_argument("--tol")
    s.set_defaults(fn=cmd_verify)

    s = sub.add_parser("catalog")
    s.add_argument("action", choices=["list", "show"])
    s.add_argument("name", nargs="?")
    s.add_argument("--out")
    s.set_defaults(fn=cmd_catalog)

    for name, fn in (("realize", cmd_realize), ("range-scan", cmd_range_scan)):
        s = sub.add_parser(name)
        s.add_argument("--graph", required=True)
        s.add_argument("--attempts", type=int, default=64)
        s.add_argument("--seed", type=int, default=0)
        s.add_argument("--workers", type=int, default=1)
        if name == "realize":
            s.add_argument("--d")
        else:
            s.add_argument("--lo", required=True)
            s.add_argument("--hi", required=True)
            s.add_argument("--steps", type=int, required=True)
        s.set_defaults(fn=fn)

    s = sub.add_parser("chromatic")
    s.add_argument("--graph", required=True)
    s.add_argument("--max-k", type=int, default=None)
    s.set_defaults(fn=cmd_chromatic)

    s = sub.add_parser("colorings")
    s.add_argument("--graph", required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--stats", action="store_true")
    s.set_defaults(fn=cmd_colorings)

    s = sub.add_parser("cnf")
    s.add_argument("--graph", required=True)
    s.add_argument("--k", type=int, required=True)
    s.set_defaults(fn=cmd_cnf)

    s = sub.add_parser("hex-verify")
    s.add_argument("--side", required=True)
    s.add_argument("--samples", type=int, default=10 ** 6)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(fn=cmd_hex_verify)

    s = sub.add_parser("bounds")
    s.add_argument("action", choices=["table", "derive"])
    s.add_argument("--csv")
    s.add_argument("--svg")
    s.add_argument("--config")
    s.set_defaults(fn=cmd_bounds)

    s = sub.add_parser("extremal")
    s.add_argument("action", choices=["check"])
    s.set_defaults(fn=cmd_extremal)

    s = sub.add_parser("f")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--brute", action="store_true")
    s.set_defaults(fn=cmd_f)
    return p


def _fail(code, kind, message):
    one_line = " ".join(str(message).split())
    sys.stderr.write(f"error: {kind}: {one_line}\n")
    return code


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        args.fn(args)
    except UsageError as exc:
        return _fail(1, "usage", exc)
    except PlaneChromaError as exc:
        return _fail(exc.exit_code, type(exc).__name__, exc)
    except (AssertionError, ArithmeticError) as exc:
        return _fail(4, "InvariantBreach", exc)
    return 0


if __name__ == "__main__":
    sys.exit(main())
