# app.py
"""
Command-line entry point.

    python app.py analyze graph.txt
    python app.py gap graph.txt --k 2 --alg alg1
    python app.py eta graph.txt --method hitting-set
    python app.py eqset graph.txt --set 1
    python app.py gen prism 2 > prism.txt
    python app.py report

Graphs are read in the edge-list format of core.graph_io ('-' is stdin).
Verdicts live in the output; the exit code only says whether the
computation completed (see core.errors.EXIT_CODES).
"""

import functools
import json
import sys
from typing import Dict, Optional

import click

from core import storage
from core.analytics import render_summary, summarize_runs
from core.config import DECIDERS, SCHEMA, load_config
from core.eqsets import (
    compute_eta_xp,
    eta_cycle_closed_form,
    eta_cycle_witness,
    eta_definitional,
    eta_expandable_shortcut,
    eta_via_hitting_set,
    is_equimatchable_set,
)
from core.errors import EquimatchError, HypothesisError, exit_code_for
from core.gadgets import gap_two_fixture, make_k_of, make_kp4, make_poljak_instance, make_prism
from core.gallai_edmonds import decompose
from core.gap import decide_gap, is_equimatchable
from core.graph import build_family, connected_components
from core.graph_io import read_graph, write_graph
from core.logger import get_logger, log_result, setup_logging
from core.matching import matching_number, minimum_maximal_matching_oracle
from core.utils import check_scale, parse_vertex_set, stopwatch

logger = get_logger("app")

ETA_METHODS = ("xp", "hitting-set", "definitional", "shortcut", "cycle")
GADGETS = ("prism", "k-of", "poljak", "kp4", "kp4-connected", "gap-two")
FAMILIES = ("path", "cycle", "complete", "complete-bipartite", "star", "kk2", "empty", "petersen")

output_option = click.option(
    "--output", type=click.Choice(["text", "json"]), default="text", show_default=True,
    help="Plain text or the structured JSON document.",
)
log_option = click.option(
    "--log/--no-log", "log_runs", default=None,
    help="Append computed quantities to the run log (default from config).",
)
cap_option = click.option(
    "--cap", type=int, default=None,
    help="Vertex cap for exponential oracles (default from config).",
)


def handle_errors(func):
    """Map package errors to diagnostics on stderr and the documented exit codes."""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except EquimatchError as e:
            click.echo(f"error: {e}", err=True)
            sys.exit(exit_code_for(e))
        except ValueError as e:
            click.echo(f"error: {e}", err=True)
            sys.exit(1)
    return wrapper


def emit(doc: Dict, output: str):
    doc = {"schema": SCHEMA, **doc}
    if output == "json":
        click.echo(json.dumps(doc, indent=2, sort_keys=False))
        return
    for key, value in doc.items():
        if isinstance(value, (dict, list)):
            value = json.dumps(value)
        click.echo(f"{key}: {value}")


class Run:
    """Per-invocation settings plus the optional run log."""

    def __init__(self, settings, log_runs: Optional[bool], cap: Optional[int] = None):
        self.settings = settings
        self.log_runs = settings.log_runs if log_runs is None else log_runs
        self.cap = settings.oracle_cap if cap is None else cap

    def record(self, command, graph, quantity, value, method="", elapsed=0.0):
        if self.log_runs:
            log_result(command, graph, quantity, value, method=method, elapsed=elapsed,
                       path=self.settings.run_log_path)


@click.group()
@click.option("--config", "config_path", type=click.Path(dir_okay=False), default=None,
              help="YAML config file (default: $EQUIMATCH_CONFIG or equimatch.yaml).")
@click.option("--log-level", default=None, help="Logging level (default from config).")
@click.pass_context
@handle_errors
def cli(ctx, config_path, log_level):
    """Matching gap and equimatchability defect of small graphs."""
    settings = load_config(config_path)
    setup_logging(log_level or settings.log_level)
    ctx.obj = settings


# ---------- analyze ----------

@cli.command()
@click.argument("source", type=click.File("r"))
@cap_option
@output_option
@log_option
@click.pass_obj
@handle_errors
def analyze(settings, source, cap, output, log_runs):
    """nu, beta, mu, the Gallai-Edmonds partition and equimatchability."""
    run = Run(settings, log_runs, cap)
    g = read_graph(source.read())
    doc = {"command": "analyze", "graph": {"n": g.n, "m": g.m, "fingerprint": g.fingerprint()}}

    with stopwatch() as t:
        nu = matching_number(g)
    doc["nu"] = nu
    run.record("analyze", g, "nu", nu, "blossom", t[0])

    if g.n <= run.cap:
        check_scale("minimum maximal matching", g.n, run.cap)
        with stopwatch() as t:
            mmm, beta = minimum_maximal_matching_oracle(g)
        doc["beta"] = beta
        doc["mu"] = nu - beta
        doc["minimum_maximal_matching"] = mmm.to_document()
        run.record("analyze", g, "beta", beta, "oracle", t[0])
        run.record("analyze", g, "mu", nu - beta, "oracle", t[0])
    else:
        doc["notice"] = f"beta and mu omitted: {g.n} vertices exceeds the cap of {run.cap}"
        logger.info(doc["notice"])

    with stopwatch() as t:
        ge = decompose(g)
        equi = is_equimatchable(g)
    doc["gallai_edmonds"] = ge.to_document()
    doc["equimatchable"] = equi
    run.record("analyze", g, "rho", ge.rho, "deletion", t[0])
    run.record("analyze", g, "equimatchable", equi, "p4", t[0])
    emit(doc, output)


# ---------- gap ----------

@cli.command()
@click.argument("source", type=click.File("r"))
@click.option("--k", "k", type=click.IntRange(min=0), required=True, help="Gap threshold.")
@click.option("--alg", type=click.Choice(list(DECIDERS)), default=None,
              help="Decider (default from config).")
@cap_option
@output_option
@log_option
@click.pass_obj
@handle_errors
def gap(settings, source, k, alg, cap, output, log_runs):
    """Decide whether mu(G) >= k, with a certificate on YES."""
    run = Run(settings, log_runs, cap)
    alg = alg or settings.default_decider
    g = read_graph(source.read())
    check_scale(f"decider {alg}", g.n, run.cap)
    with stopwatch() as t:
        verdict = decide_gap(g, k, alg)
    run.record("gap", g, f"mu>={k}", "YES" if verdict else "NO", alg, t[0])
    emit({"command": "gap", **verdict.to_document()}, output)


# ---------- eta ----------

def _is_cycle(g) -> bool:
    return g.n >= 3 and g.m == g.n and all(g.degree(v) == 2 for v in g.vertices) \
        and len(connected_components(g)) == 1


@cli.command()
@click.argument("source", type=click.File("r"))
@click.option("--method", type=click.Choice(list(ETA_METHODS)), default="hitting-set", show_default=True)
@cap_option
@output_option
@log_option
@click.pass_obj
@handle_errors
def eta(settings, source, method, cap, output, log_runs):
    """Equimatchability defect eta(G) with a minimum equimatchable set."""
    run = Run(settings, log_runs, cap)
    g = read_graph(source.read())
    doc = {"command": "eta", "method": method}

    with stopwatch() as t:
        if method == "cycle":
            if not _is_cycle(g):
                raise HypothesisError("cycle", "the graph is not a single cycle")
            doc["eta"] = eta_cycle_closed_form(g.n)
            if g == build_family("cycle", [g.n]):
                doc["witness"] = sorted(eta_cycle_witness(g.n))
        elif method == "shortcut":
            doc.update(eta_expandable_shortcut(g).to_document())
        else:
            check_scale(f"eta by {method}", g.n, run.cap)
            solver = {"xp": compute_eta_xp, "hitting-set": eta_via_hitting_set,
                      "definitional": eta_definitional}[method]
            doc.update(solver(g).to_document())
    run.record("eta", g, "eta", doc["eta"], method, t[0])
    emit(doc, output)


# ---------- eqset ----------

@cli.command()
@click.argument("source", type=click.File("r"))
@click.option("--set", "vertex_set", required=True, help="Vertices, e.g. '1,3'. Empty string for the empty set.")
@cap_option
@output_option
@log_option
@click.pass_obj
@handle_errors
def eqset(settings, source, vertex_set, cap, output, log_runs):
    """Test whether a vertex set is equimatchable."""
    run = Run(settings, log_runs, cap)
    g = read_graph(source.read())
    s = parse_vertex_set(vertex_set)
    check_scale("equimatchable-set test", g.n, run.cap)
    with stopwatch() as t:
        report = is_equimatchable_set(g, s)
    run.record("eqset", g, "eqset", report.verdict.value, ",".join(map(str, s)), t[0])
    emit({"command": "eqset", **report.to_document()}, output)


# ---------- gen ----------

@cli.command()
@click.argument("name", type=click.Choice(list(GADGETS + FAMILIES)))
@click.argument("params", nargs=-1, type=int)
@click.option("--from", "base", type=click.File("r"), default=None,
              help="Base graph for k-of and poljak ('-' for stdin).")
@output_option
@handle_errors
def gen(name, params, base, output):
    """Generate a gadget or a standard family as an edge list."""
    if name in ("k-of", "poljak"):
        if base is None:
            raise click.UsageError(f"{name} needs a base graph via --from")
        g0 = read_graph(base.read())
        g = make_k_of(g0) if name == "k-of" else make_poljak_instance(g0)
    elif name == "prism":
        g = make_prism(*_params(name, params, 1))
    elif name in ("kp4", "kp4-connected"):
        g = make_kp4(*_params(name, params, 1), connected=name == "kp4-connected")
    elif name == "gap-two":
        _params(name, params, 0)
        g = gap_two_fixture()
    else:
        g = build_family(name, params)

    if output == "json":
        emit({"command": "gen", "name": name, "params": list(params), "graph": g.to_document()}, output)
    else:
        click.echo(write_graph(g), nl=False)


def _params(name, params, count):
    if len(params) != count:
        raise click.UsageError(f"{name} takes {count} parameter(s), got {len(params)}")
    return params


# ---------- report ----------

@cli.command()
@click.option("--limit", type=click.IntRange(min=0), default=10000, show_default=True)
@click.option("--clear", is_flag=True, help="Delete the run log instead of summarizing it.")
@click.pass_obj
@handle_errors
def report(settings, limit, clear):
    """Summaries of the run log."""
    if clear:
        removed = storage.clear_logs(path=settings.run_log_path)
        click.echo("run log cleared" if removed else "no run log")
        return
    rows = storage.read_logs(limit=limit, path=settings.run_log_path)
    click.echo(render_summary(summarize_runs(rows)))


if __name__ == "__main__":
    cli()
