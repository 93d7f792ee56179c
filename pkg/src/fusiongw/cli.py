"""Command line front end: compute, verify and export coefficient tables.

Exit codes: 0 success, 1 usage or parameter error, 2 cross-method
disagreement, 3 numeric residual or verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass

from . import boson, fermion, identities, spectral, verify, words
from .partitions import (
    format_partition,
    parse_partition,
    partition_from_word,
    partitions_in_box,
    size,
    weight_from_partition,
    weights_of_level,
)
from .spectral import ResidualError

CACHE_VERSION = 1
SPECTRAL_MAX = 12  # double precision limits the root-of-unity sums


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    """Resolved options shared by every subcommand."""

    command: str
    n: int = None
    k: int = None
    N: int = None
    method: str = "lattice"
    fmt: str = "json"
    output: str = None
    figures: str = None
    cache_dir: str = None
    jobs: int = 1
    tol: float = spectral.DEFAULT_TOL

    @classmethod
    def from_args(cls, args) -> "RunConfig":
        n = getattr(args, "n", None)
        k = getattr(args, "k", None)
        return cls(
            command=args.command,
            n=n,
            k=k,
            N=getattr(args, "N", None) or (n + k if n is not None and k is not None else None),
            method=getattr(args, "method", "lattice"),
            fmt=getattr(args, "fmt", "json"),
            output=getattr(args, "output", None),
            figures=getattr(args, "figures", None),
            cache_dir=getattr(args, "cache_dir", None),
            jobs=getattr(args, "jobs", 1),
            tol=getattr(args, "tol", spectral.DEFAULT_TOL),
        )


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _add_common(p, spectral_opts=True):
    p.add_argument("--format", dest="fmt", choices=("json", "csv", "pretty"),
                   default="json")
    p.add_argument("--output", help="write the table here instead of stdout")
    p.add_argument("--figures", help="directory for rendered figures")
    p.add_argument("--cache-dir", default=os.environ.get("FUSIONGW_CACHE"),
                   help="cache directory (env FUSIONGW_CACHE)")
    if spectral_opts:
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--tol", type=float, default=spectral.DEFAULT_TOL)


def build_parser():
    parser = _Parser(prog="fusiongw", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fusion", help="fusion product of two level-k weights")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--lhs", required=True, help="partition, e.g. 2,1")
    p.add_argument("--rhs", required=True)
    p.add_argument("--method", choices=("lattice", "spectral", "all"),
                   default="lattice")
    _add_common(p)

    p = sub.add_parser("gw", help="quantum product of two Schubert classes")
    p.add_argument("--n", type=int, required=True, help="box width (N = n + k)")
    p.add_argument("--k", type=int, required=True, help="box height")
    p.add_argument("--lhs", required=True)
    p.add_argument("--rhs", required=True)
    p.add_argument("--method",
                   choices=("lattice", "spectral", "recursion", "all"),
                   default="lattice")
    _add_common(p)

    p = sub.add_parser("smatrix", help="modular S-matrix of the level-k theory")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    _add_common(p)

    p = sub.add_parser("verify", help="run a named invariant suite")
    p.add_argument("--suite", required=True,
                   choices=tuple(verify.SUITES) + ("all",))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    _add_common(p)

    p = sub.add_parser("hierarchy",
                       help="build all quantum tables for fixed N by recursion")
    p.add_argument("--N", type=int, required=True)
    _add_common(p)

    p = sub.add_parser("normalize", help="normal form of a semistandard tableau")
    p.add_argument("--tableau", help="file with comma-separated rows (default stdin)")
    p.add_argument("--word", action="store_true", help="also print the column word")
    _add_common(p, spectral_opts=False)

    p = sub.add_parser("dengdu", help="convert between words and partition tuples")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--word", help="comma-separated generator indices")
    p.add_argument("--towers", help="semicolon-separated partitions")
    _add_common(p, spectral_opts=False)
    return parser


# ---------------------------------------------------------------------------
# output helpers
# ---------------------------------------------------------------------------

def _emit(text: str, output):
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _render_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ": "), indent=1) + "\n"


def _render_table(payload, fmt: str) -> str:
    if fmt == "json":
        return _render_json(payload)
    entries = payload["entries"]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["lambda", "mu", "nu", "d", "c"])
        for e in entries:
            writer.writerow([e["lambda"], e["mu"], e["nu"], e["d"], e["c"]])
        return buf.getvalue()
    lines = ["# %s" % json.dumps(payload["params"], sort_keys=True)]
    for e in entries:
        lines.append(
            "%-12s * %-12s -> %-12s  d=%d  c=%d"
            % (e["lambda"], e["mu"], e["nu"], e["d"], e["c"])
        )
    if "agreement" in payload:
        lines.append("# agreement: %s" % payload["agreement"])
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# cache
# ---------------------------------------------------------------------------

def _cache_path(cache_dir, kind, **params):
    tag = "_".join("%s%s" % (k, params[k]) for k in sorted(params))
    return os.path.join(cache_dir, "%s_%s_v%d.json" % (kind, tag, CACHE_VERSION))


def _cache_load(path):
    if path and os.path.exists(path):
        with open(path) as fh:
            data = json.load(fh)
        if data.get("version") == CACHE_VERSION:
            return data["entries"]
    return None


def _cache_store(path, params, entries):
    if not path:
        return
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w") as fh:
        json.dump({"version": CACHE_VERSION, "params": params,
                   "entries": entries}, fh, sort_keys=True)


def _fusion_records(n, k, cache_dir):
    path = _cache_path(cache_dir, "fusion", n=n, k=k) if cache_dir else None
    cached = _cache_load(path)
    if cached is not None:
        return cached
    records = identities.fusion_coefficient_table(n, k).to_records()
    _cache_store(path, {"n": n, "k": k}, records)
    return records


def _gw_records(k, N, cache_dir):
    path = _cache_path(cache_dir, "gw", k=k, N=N) if cache_dir else None
    cached = _cache_load(path)
    if cached is not None:
        return cached
    records = identities.gw_coefficient_table(k, N).to_records()
    _cache_store(path, {"k": k, "N": N}, records)
    return records


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_fusion(cfg, args) -> int:
    n, k = cfg.n, cfg.k
    lhs, rhs = parse_partition(args.lhs), parse_partition(args.rhs)
    if cfg.method in ("spectral", "all") and n + k > SPECTRAL_MAX:
        raise UsageError("spectral method needs n + k <= %d" % SPECTRAL_MAX)
    a = weight_from_partition(lhs, n, k)
    b = weight_from_partition(rhs, n, k)

    def lattice_rows():
        rows = []
        prod = boson.fusion_product(a, b)
        for c, coeff in prod.items():
            d, v = coeff.sole_term()
            rows.append((format_partition(c.finite_partition()), d, v))
        return sorted(rows)

    def spectral_rows():
        rows = []
        sa, sb = size(a.boxed_partition()), size(b.boxed_partition())
        for c in weights_of_level(n, k):
            v = spectral.verlinde_coeff(a, b, c, tol=cfg.tol, workers=cfg.jobs)
            if v:
                d = (sa + sb - size(c.boxed_partition())) // n
                rows.append((format_partition(c.finite_partition()), d, v))
        return sorted(rows)

    methods = {}
    if cfg.method in ("lattice", "all"):
        methods["lattice"] = lattice_rows()
    if cfg.method in ("spectral", "all"):
        methods["spectral"] = spectral_rows()
    chosen = methods.get("lattice", methods.get("spectral"))
    payload = {
        "params": {"kind": "fusion", "n": n, "k": k,
                   "lambda": format_partition(lhs), "mu": format_partition(rhs)},
        "method": cfg.method,
        "entries": [
            {"lambda": format_partition(lhs), "mu": format_partition(rhs),
             "nu": nu, "d": d, "c": v}
            for nu, d, v in chosen
        ],
    }
    agreement = True
    if cfg.method == "all":
        agreement = methods["lattice"] == methods["spectral"]
        payload["agreement"] = agreement
    if cfg.figures:
        payload["figures"] = [_table_figure(payload, cfg.figures, "fusion")]
    _emit(_render_table(payload, cfg.fmt), cfg.output)
    if cfg.cache_dir:
        _fusion_records(n, k, cfg.cache_dir)
    return 0 if agreement else 2


def cmd_gw(cfg, args) -> int:
    n, k = cfg.n, cfg.k
    N = cfg.N
    lhs, rhs = parse_partition(args.lhs), parse_partition(args.rhs)
    if cfg.method in ("spectral", "all") and N > SPECTRAL_MAX:
        raise UsageError("spectral method needs n + k <= %d" % SPECTRAL_MAX)

    def lattice_rows():
        rows = []
        for w, coeff in fermion.quantum_product(lhs, rhs, k, N).items():
            d, v = coeff.sole_term()
            rows.append((format_partition(partition_from_word(w)), d, v))
        return sorted(rows)

    def spectral_rows():
        rows = []
        for nu in partitions_in_box(k, n):
            d, v = spectral.bvi_coeff(lhs, rhs, nu, k, N,
                                      tol=cfg.tol, workers=cfg.jobs)
            if v:
                rows.append((format_partition(nu), d, v))
        return sorted(rows)

    def recursion_rows():
        tables = identities.hierarchy_build(N)
        rows = []
        for (la, mu, nu), (d, v) in tables[k].entries.items():
            if (la, mu) == (lhs, rhs) and v:
                rows.append((format_partition(nu), d, v))
        return sorted(rows)

    methods = {}
    if cfg.method in ("lattice", "all"):
        methods["lattice"] = lattice_rows()
    if cfg.method in ("spectral", "all"):
        methods["spectral"] = spectral_rows()
    if cfg.method in ("recursion", "all"):
        methods["recursion"] = recursion_rows()
    chosen = methods.get("lattice") or next(iter(methods.values()))
    payload = {
        "params": {"kind": "gw", "n": n, "k": k, "N": N,
                   "lambda": format_partition(lhs), "mu": format_partition(rhs)},
        "method": cfg.method,
        "entries": [
            {"lambda": format_partition(lhs), "mu": format_partition(rhs),
             "nu": nu, "d": d, "c": v}
            for nu, d, v in chosen
        ],
    }
    agreement = True
    if cfg.method == "all":
        vals = list(methods.values())
        agreement = all(v == vals[0] for v in vals)
        payload["agreement"] = agreement
    if cfg.figures:
        payload["figures"] = [_table_figure(payload, cfg.figures, "gw")]
    _emit(_render_table(payload, cfg.fmt), cfg.output)
    if cfg.cache_dir:
        _gw_records(k, N, cfg.cache_dir)
    return 0 if agreement else 2


def _table_figure(payload, figdir, stem):
    from . import plots

    plots.ensure_dir(figdir)
    path = os.path.join(
        figdir,
        "%s_%s.png" % (stem, "_".join(
            str(payload["params"][key]) for key in ("n", "k"))),
    )
    return plots.save_table_figure(
        payload["entries"], path, "%s coefficients" % stem
    )


def cmd_smatrix(cfg, args) -> int:
    n, k = cfg.n, cfg.k
    if n + k > SPECTRAL_MAX:
        raise UsageError("smatrix needs n + k <= %d" % SPECTRAL_MAX)
    labels, S = spectral.smatrix(n, k)
    names = [format_partition(w.finite_partition()) for w in labels]
    payload = {
        "params": {"kind": "smatrix", "n": n, "k": k},
        "labels": names,
        "matrix": [[[z.real, z.imag] for z in row] for row in S.tolist()],
    }
    if cfg.figures:
        from . import plots

        plots.ensure_dir(cfg.figures)
        path = os.path.join(cfg.figures, "smatrix_n%d_k%d.png" % (n, k))
        payload["figures"] = [
            plots.save_matrix_figure(S, path, "modular S-matrix n=%d k=%d" % (n, k))
        ]
    if cfg.fmt == "json":
        _emit(_render_json(payload), cfg.output)
    elif cfg.fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["row", "col", "re", "im"])
        for i, a in enumerate(names):
            for j, b in enumerate(names):
                writer.writerow([a, b, repr(float(S[i, j].real)), repr(float(S[i, j].imag))])
        _emit(buf.getvalue(), cfg.output)
    else:
        lines = ["S-matrix n=%d k=%d; basis: %s" % (n, k, " ".join(names))]
        for i in range(len(names)):
            lines.append(
                " ".join("%8.5f%+8.5fi" % (S[i, j].real, S[i, j].imag)
                         for j in range(len(names)))
            )
        _emit("\n".join(lines) + "\n", cfg.output)
    return 0


def cmd_verify(cfg, args) -> int:
    report = verify.run_suite(args.suite, cfg.n, cfg.k,
                              tol=cfg.tol if args.suite in ("bethe", "smatrix") else None)
    if cfg.figures:
        from . import plots

        plots.ensure_dir(cfg.figures)
        figures = []
        if args.suite in ("bethe", "all"):
            figures.append(plots.save_bethe_roots_figure(
                spectral.bethe_roots_boson(cfg.n, cfg.k),
                os.path.join(cfg.figures, "bethe_roots_n%d_k%d.png" % (cfg.n, cfg.k)),
                "Bethe roots n=%d k=%d (z=1)" % (cfg.n, cfg.k),
            ))
        if args.suite in ("smatrix", "all") and cfg.n + cfg.k <= SPECTRAL_MAX:
            _, S = spectral.smatrix(cfg.n, cfg.k)
            figures.append(plots.save_matrix_figure(
                S, os.path.join(cfg.figures, "smatrix_n%d_k%d.png" % (cfg.n, cfg.k)),
                "modular S-matrix",
            ))
        report["figures"] = figures
    if cfg.fmt == "pretty":
        lines = []
        reports = report.get("reports", [report])
        for rep in reports:
            for chk in rep.get("checks", []):
                lines.append("%-4s %s/%s  %s" % (
                    "ok" if chk["ok"] else "FAIL", rep["suite"], chk["name"],
                    chk["detail"][:60]))
        lines.append("overall: %s" % ("ok" if report["ok"] else "FAIL"))
        _emit("\n".join(lines) + "\n", cfg.output)
    else:
        _emit(_render_json(report), cfg.output)
    return 0 if report["ok"] else 3


def cmd_hierarchy(cfg, args) -> int:
    N = cfg.N
    if N > 8:
        raise UsageError("hierarchy builder is intended for N <= 8")
    tables = identities.hierarchy_build(N)
    agreement = all(
        tables[k].entries == identities.gw_coefficient_table(k, N).entries
        for k in range(N + 1)
    )
    entries = []
    for k, table in enumerate(tables):
        for rec in table.to_records():
            rec = dict(rec)
            rec["k"] = k
            entries.append(rec)
    payload = {
        "params": {"kind": "hierarchy", "N": N},
        "method": "recursion",
        "agreement": agreement,
        "entries": entries,
    }
    if args.fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["k", "lambda", "mu", "nu", "d", "c"])
        for e in entries:
            writer.writerow([e["k"], e["lambda"], e["mu"], e["nu"], e["d"], e["c"]])
        _emit(buf.getvalue(), cfg.output)
    elif cfg.fmt == "pretty":
        _emit("hierarchy N=%d: %d entries, agreement=%s\n"
              % (N, len(entries), agreement), cfg.output)
    else:
        _emit(_render_json(payload), cfg.output)
    if cfg.figures:
        from . import plots

        plots.ensure_dir(cfg.figures)
        plots.save_table_figure(
            entries, os.path.join(cfg.figures, "hierarchy_N%d.png" % N),
            "hierarchy N=%d" % N,
        )
    return 0 if agreement else 2


def cmd_normalize(cfg, args) -> int:
    if args.tableau:
        with open(args.tableau) as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    rows = words.parse_tableau(text)
    result = words.normalize_tableau(rows)
    out = words.format_tableau(result)
    if args.word:
        out += "\nword: " + ",".join(str(v) for v in words.column_word(result))
    _emit(out + "\n", cfg.output)
    return 0


def cmd_dengdu(cfg, args) -> int:
    n = cfg.n
    if bool(args.word) == bool(args.towers):
        raise UsageError("give exactly one of --word or --towers")
    if args.word:
        letters = [int(v) for v in args.word.split(",") if v != ""]
        mp = words.word_to_multipartition(letters, n)
        _emit(";".join(format_partition(p) for p in mp) + "\n", cfg.output)
    else:
        mp = tuple(parse_partition(part) for part in args.towers.split(";"))
        if len(mp) != n:
            raise UsageError("expected %d components" % n)
        letters = words.multipartition_to_word(mp, n)
        _emit(",".join(str(v) for v in letters) + "\n", cfg.output)
    return 0


COMMANDS = {
    "fusion": cmd_fusion,
    "gw": cmd_gw,
    "smatrix": cmd_smatrix,
    "verify": cmd_verify,
    "hierarchy": cmd_hierarchy,
    "normalize": cmd_normalize,
    "dengdu": cmd_dengdu,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        cfg = RunConfig.from_args(args)
        return COMMANDS[args.command](cfg, args)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    except ResidualError as exc:
        print("residual failure: %s" % exc, file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
