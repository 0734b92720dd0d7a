"""Command-line surface: analyze graph6 streams, generate family members,
run verification sweeps, and evaluate the four-eigenvalue refuter.

Exit codes: 0 clean, 2 parse/parameter error, 3 internal consistency
error, 4 sweep assertion failure.  Every option also reads an environment
variable named NEUMAIER_<COMMAND>_<OPTION> (e.g. NEUMAIER_SWEEP_WORKERS);
flags win over the environment, which wins over defaults.
"""

from __future__ import annotations

import json
import sys
from concurrent.futures import ProcessPoolExecutor

import click

from . import report as rpt
from .classify import (
    THEOREM_IDS,
    classify,
    default_sweep_workers,
    refute_four_eigenvalues,
    sweep_labeled,
    sweep_verify,
)
from .errors import ConsistencyError, Graph6Error
from .graphs import FAMILIES, decode_graph6, encode_graph6
from .graphs import generate as generate_family
from .spectra import DEFAULT_CLUSTER_TOL

EXIT_PARSE = 2
EXIT_CONSISTENCY = 3
EXIT_SWEEP_FAILED = 4


@click.group(context_settings={"auto_envvar_prefix": "NEUMAIER"})
def main() -> None:
    """Neumaier-graph taxonomy toolkit."""


def _open_in(path: str):
    return sys.stdin if path == "-" else open(path, "r", encoding="ascii")


def _open_out(path: str):
    return sys.stdout if path == "-" else open(path, "w", encoding="ascii")


def _read_graphs(path: str):
    """Yield (line_number, Graph) from newline-delimited graph6; exits 2
    naming the line on the first parse error."""
    fh = _open_in(path)
    try:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                yield lineno, decode_graph6(line)
            except Graph6Error as exc:
                click.echo(f"line {lineno}: {exc}", err=True)
                sys.exit(EXIT_PARSE)
    finally:
        if fh is not sys.stdin:
            fh.close()


def _classify_record(args):
    g, tol = args
    return rpt.class_report_json(classify(g, cluster_tol=tol))


@main.command()
@click.option("--input", "input", default="-", show_default=True,
              help="graph6 file, one record per line ('-' = stdin)")
@click.option("--output", "output", default="-", show_default=True)
@click.option("--format", "format", default="json",
              type=click.Choice(["json", "csv", "human"]), show_default=True)
@click.option("--tol", default=DEFAULT_CLUSTER_TOL, show_default=True,
              help="eigenvalue clustering tolerance")
@click.option("--workers", default=1, show_default=True)
def analyze(input, output, format, tol, workers) -> None:
    """Classify each input graph and emit one report per line."""
    if tol <= 0 or workers < 1:
        click.echo("tol must be positive and workers >= 1", err=True)
        sys.exit(EXIT_PARSE)
    graphs = [g for _, g in _read_graphs(input)]
    out = _open_out(output)
    try:
        if workers > 1:
            with ProcessPoolExecutor(max_workers=workers) as ex:
                records = list(
                    ex.map(_classify_record, [(g, tol) for g in graphs], chunksize=8)
                )
        else:
            records = [_classify_record((g, tol)) for g in graphs]
        if format == "csv":
            out.write(rpt.CSV_HEADER + "\n")
        for rec in records:
            if format == "json":
                out.write(json.dumps(rec, sort_keys=True) + "\n")
            elif format == "csv":
                out.write(_csv_from_record(rec) + "\n")
            else:
                out.write(_human_from_record(rec) + "\n\n")
    except ConsistencyError as exc:
        click.echo(f"internal consistency error: {exc}", err=True)
        sys.exit(EXIT_CONSISTENCY)
    finally:
        if out is not sys.stdout:
            out.close()


def _csv_from_record(rec: dict) -> str:
    p = rec["params"]
    sp = rec["spectrum"]
    eigs = sp["eigs"]
    tmin = f"{eigs[-1][0]:.10g}" if eigs else ""
    tmax2 = f"{eigs[1][0]:.10g}" if sp["distinct"] >= 2 else ""
    fields = [
        rec["graph6"] or "",
        rec["taxonomy"],
        str(rec["n"]),
        str(p.get("k", "")),
        str(p.get("lambda", "")),
        str(p.get("s", "")),
        str(p.get("e", "")),
        str(sp["distinct"]),
        tmin,
        tmax2,
    ]
    return ",".join(fields)


def _human_from_record(rec: dict) -> str:
    lines = [f"graph {rec['graph6']}  (n={rec['n']})"]
    lines.append(f"  taxonomy: {rec['taxonomy']}")
    p = rec["params"]
    if "k" in p:
        lines.append(f"  (v,k,lambda) = ({rec['n']},{p['k']},{p['lambda']})")
    if "mu" in p:
        lines.append(f"  mu = {p['mu']}")
    if "s" in p:
        lines.append(f"  s = {p['s']}, e = {p['e']}")
    spec = ", ".join(f"{v:.6g}^{m}" for v, m in rec["spectrum"]["eigs"])
    lines.append(f"  spectrum: {{{spec}}}  distinct={rec['spectrum']['distinct']}")
    for tid, o in rec["theorems"].items():
        tag = o["status"] + (" (vacuous)" if o.get("vacuous") else "")
        lines.append(f"  [{tid:>9}] {tag}")
    return "\n".join(lines)


@main.command("generate")
@click.argument("family", type=click.Choice(sorted(FAMILIES)))
@click.argument("params", nargs=-1, type=int)
@click.option("--output", "output", default="-", show_default=True)
def generate(family, params, output) -> None:
    """Emit the graph6 record of a family member, e.g. `generate rook 3`."""
    try:
        g = generate_family(family, *params)
        line = encode_graph6(g)
    except (ValueError, Graph6Error) as exc:
        click.echo(str(exc), err=True)
        sys.exit(EXIT_PARSE)
    out = _open_out(output)
    try:
        out.write(line + "\n")
    finally:
        if out is not sys.stdout:
            out.close()


def _parse_theorems(text: str | None):
    if not text:
        return None
    ids = tuple(t.strip() for t in text.split(",") if t.strip())
    bad = [t for t in ids if t not in THEOREM_IDS]
    if bad:
        raise click.BadParameter(
            f"unknown theorem id(s) {bad}; choose from {', '.join(THEOREM_IDS)}"
        )
    return ids


@main.command()
@click.option("--n", "n", type=int, default=None,
              help="exhaustive sweep over all labeled graphs on n vertices (n <= 8)")
@click.option("--input", "input", default=None,
              help="graph6 corpus to sweep instead of exhaustive enumeration")
@click.option("--output", "output", default="-", show_default=True)
@click.option("--format", "format", default="human",
              type=click.Choice(["json", "csv", "human"]), show_default=True)
@click.option("--theorems", default=None,
              help=f"comma-separated subset of: {', '.join(THEOREM_IDS)}")
@click.option("--tol", default=DEFAULT_CLUSTER_TOL, show_default=True)
@click.option("--workers", default=None, type=int,
              help="worker processes for exhaustive sweeps [default: cpu-bound]")
def sweep(n, input, output, format, theorems, tol, workers) -> None:
    """Verify every selected theorem over a corpus or an exhaustive
    enumeration; exits 4 when any assertion fails."""
    if (n is None) == (input is None):
        click.echo("provide exactly one of --n or --input", err=True)
        sys.exit(EXIT_PARSE)
    if tol <= 0 or (workers is not None and workers < 1):
        click.echo("tol must be positive and workers >= 1", err=True)
        sys.exit(EXIT_PARSE)
    ids = _parse_theorems(theorems)
    exhaustive = n is not None
    try:
        if exhaustive:
            if not 1 <= n <= 8:
                click.echo("sweep needs 1 <= n <= 8", err=True)
                sys.exit(EXIT_PARSE)
            result = sweep_labeled(n, ids, workers or default_sweep_workers(), tol)
            agg, passed = result.aggregate, result.ok()
        else:
            agg = sweep_verify((g for _, g in _read_graphs(input)), ids, tol)
            passed = agg.ok()
    except ConsistencyError as exc:
        click.echo(f"internal consistency error: {exc}", err=True)
        sys.exit(EXIT_CONSISTENCY)
    out = _open_out(output)
    try:
        if format == "json":
            doc = rpt.aggregate_json(agg)
            doc["ok"] = passed
            out.write(json.dumps(doc, sort_keys=True) + "\n")
        elif format == "csv":
            out.write(rpt.aggregate_csv(agg) + "\n")
        else:
            out.write(rpt.aggregate_human(agg) + "\n")
    finally:
        if out is not sys.stdout:
            out.close()
    if not passed:
        sys.exit(EXIT_SWEEP_FAILED)


@main.command()
@click.option("--k", type=float, required=True)
@click.option("--theta", type=float, required=True)
@click.option("--theta2", type=float, required=True)
@click.option("--e", "e", type=float, required=True)
@click.option("--format", "format", default="human",
              type=click.Choice(["json", "human"]), show_default=True)
def refute(k, theta, theta2, e, format) -> None:
    """Evaluate the four-distinct-eigenvalue refutation at one parameter
    point and print the derivation trail."""
    try:
        r = refute_four_eigenvalues(k, theta, theta2, e)
    except ValueError as exc:
        click.echo(str(exc), err=True)
        sys.exit(EXIT_PARSE)
    if format == "json":
        click.echo(json.dumps(rpt.refutation_json(r), sort_keys=True))
    else:
        click.echo(rpt.refutation_human(r))


if __name__ == "__main__":
    main()
