"""Command-line entry point: ``egstab <command> ...``.

Exit status is 0 on success, 1 when a counterexample turned up and 2 on
usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field

from . import __version__
from .cycles import circumference
from .errors import EgstabError, GraphFormatError, PreconditionError
from .extremal.bounds import crossover_table, h, half_floor, kopylov_bound, stability_bound
from .extremal.constructions import GClassSpec, build_class_member, build_F_member, build_H, F_TAGS
from .extremal.recognize import classify
from .formats import emit_edge_list, emit_graph6, parse_edge_list, parse_graph6
from .graph import Graph
from .procedures import alpha_core, k_closure, run_procedure

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2
CLI_SCHEMA = "egstab.cli/1"


class UsageError(Exception):
    def __init__(self, flag: str, message: str):
        super().__init__(f"argument {flag}: {message}")
        self.flag = flag


@dataclass
class CommandConfig:
    command: str
    args: dict = field(default_factory=dict)
    input_path: str | None = None
    input_format: str = "auto"
    output: str = "text"
    workers: int = 1
    shards: int | None = None
    seed: int = 0
    timing: bool = True


def _print_fraction(x) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# -- input / output -------------------------------------------------------------


def _read_graphs(cfg: CommandConfig) -> list[Graph]:
    if cfg.input_path in (None, "-"):
        text = sys.stdin.read()
    else:
        try:
            with open(cfg.input_path) as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError("--input", str(exc))
    fmt = cfg.input_format
    lines = text.splitlines()
    if fmt == "auto":
        first = next((ln.strip() for ln in lines if ln.strip() and not ln.startswith("#")), "")
        head = first.split()
        fmt = "edgelist" if head and (head[0] == "n" or head[0].isdigit()) else "graph6"
    if fmt == "edgelist":
        return [parse_edge_list(text)]
    out = []
    for i, line in enumerate(lines, 1):
        line = line.strip()
        if line and line != ">>graph6<<":
            out.append(parse_graph6(line, i))
    if not out:
        raise GraphFormatError("no graph in input", 1)
    return out


def _emit(g: Graph, fmt: str) -> str:
    return emit_edge_list(g) if fmt == "edgelist" else emit_graph6(g) + "\n"


# -- commands -------------------------------------------------------------------


def _cmd_bound(cfg: CommandConfig):
    n, k = cfg.args["n"], cfg.args["k"]
    if k < 3:
        raise UsageError("k", "must be at least 3")
    if n < k:
        raise UsageError("n", "must be at least k")
    t = half_floor(k)
    hs = {a: h(n, k, a) for a in range(1, t + 1)}
    data: dict = {"n": n, "k": k, "t": t, "h": {str(a): v for a, v in hs.items()}}
    if k >= 5:
        data["kopylov_bound"] = kopylov_bound(n, k)
    if k >= 9:
        data["stability_bound"] = stability_bound(n, k)
    if t >= 4:
        row = crossover_table(t)[0 if k % 2 else 1]
        if row.k == k:
            data["crossover"] = {"h3_vs_ht-1": _print_fraction(row.h3_threshold),
                                 "h2_vs_ht-1": _print_fraction(row.h2_threshold)}
    lines = [f"n = {n}", f"k = {k}", f"t = {t}"]
    lines += [f"h({n},{k},{a}) = {v}" for a, v in hs.items()]
    for key in ("kopylov_bound", "stability_bound"):
        if key in data:
            lines.append(f"{key} = {data[key]}")
    if "crossover" in data:
        c = data["crossover"]
        lines.append(f"crossover h(n,k,3) >= h(n,k,t-1) iff n <= {c['h3_vs_ht-1']}")
        lines.append(f"crossover h(n,k,2) >= h(n,k,t-1) iff n <= {c['h2_vs_ht-1']}")
    return EXIT_OK, data, "\n".join(lines) + "\n"


def _int_list(flag: str, raw: str | None) -> tuple[int, ...]:
    if not raw:
        return ()
    try:
        return tuple(int(x) for x in raw.split(","))
    except ValueError:
        raise UsageError(flag, f"expected comma-separated integers, got {raw!r}")


def _cmd_gen(cfg: CommandConfig):
    a = cfg.args
    kind = a["kind"]
    p = a["params"]
    fmt = a["graph_format"]
    try:
        if kind == "H":
            if len(p) != 3:
                raise UsageError("params", "gen H needs n k a")
            g, _ = build_H(*p)
        elif kind in ("G2", "G3", "G4"):
            if kind == "G4":
                if len(p) not in (1, 2):
                    raise UsageError("params", "gen G4 needs n [k]")
                n, k = p[0], (p[1] if len(p) == 2 else 10)
            else:
                if len(p) != 2:
                    raise UsageError("params", f"gen {kind} needs n k")
                n, k = p
            spec = GClassSpec(kind, b_size=a["b"] or 0, c_size=a["c"] or 0,
                              stars=_int_list("--stars", a["stars"]),
                              anchors=_int_list("--anchors", a["anchors"]))
            g = build_class_member(spec, n, k)
        elif kind == "F":
            if a["tag"] not in F_TAGS:
                raise UsageError("--tag", f"choose from {', '.join(F_TAGS)}")
            if len(p) != 1:
                raise UsageError("params", "gen F needs t")
            deletions = []
            for item in (a["delete"] or "").split(","):
                if item:
                    try:
                        u, v = item.split("-")
                        deletions.append((int(u), int(v)))
                    except ValueError:
                        raise UsageError("--delete", f"expected u-v pairs, got {item!r}")
            g = build_F_member(a["tag"], p[0], deletions)
        else:
            raise UsageError("kind", f"unknown construction {kind!r}")
    except PreconditionError as exc:
        raise UsageError("params", str(exc))
    return EXIT_OK, {"graph6": emit_graph6(g), "n": g.n, "edges": g.edge_count()}, _emit(g, fmt)


def _per_graph(cfg: CommandConfig, fn):
    graphs = _read_graphs(cfg)
    results = []
    status = EXIT_OK
    texts = []
    for g in graphs:
        code, data, text = fn(g)
        status = max(status, code)
        results.append(data)
        texts.append(text)
    data = results[0] if len(results) == 1 else results
    return status, data, "".join(texts)


def _cmd_classify(cfg: CommandConfig):
    k = cfg.args["k"]

    def one(g):
        try:
            c = classify(g, k)
        except PreconditionError as exc:
            raise UsageError("--k", str(exc))
        d = c.as_dict()
        lines = [f"verdict {c.verdict}"]
        if c.class_tag:
            lines.append(f"class {c.class_tag}")
        if c.embedding:
            lines.append("embedding " + json.dumps(c.embedding, sort_keys=True))
        if c.witness:
            lines.append("witness " + json.dumps(c.witness.as_dict(), sort_keys=True))
        code = EXIT_COUNTEREXAMPLE if c.verdict == "Counterexample" else EXIT_OK
        return code, d, "\n".join(lines) + "\n"

    return _per_graph(cfg, one)


def _cmd_circumference(cfg: CommandConfig):
    def one(g):
        c, w = circumference(g)
        cyc = list(w.vertices) if w else []
        return EXIT_OK, {"circumference": c, "cycle": cyc}, f"circumference {c}\ncycle {' '.join(map(str, cyc))}\n"

    return _per_graph(cfg, one)


def _cmd_core(cfg: CommandConfig):
    alpha = cfg.args["alpha"]
    if alpha < 0:
        raise UsageError("--alpha", "must be nonnegative")
    fmt = cfg.args["graph_format"]

    def one(g):
        c = alpha_core(g, alpha)
        return EXIT_OK, {"n": c.n, "edges": c.edge_count(), "graph6": emit_graph6(c)}, _emit(c, fmt)

    return _per_graph(cfg, one)


def _cmd_closure(cfg: CommandConfig):
    k = cfg.args["k"]
    fmt = cfg.args["graph_format"]

    def one(g):
        try:
            c = k_closure(g, k)
        except PreconditionError as exc:
            raise UsageError("--k", str(exc))
        return EXIT_OK, {"n": c.n, "edges": c.edge_count(), "graph6": emit_graph6(c)}, _emit(c, fmt)

    return _per_graph(cfg, one)


def _cmd_run_bp(cfg: CommandConfig):
    a = cfg.args

    def one(g):
        try:
            tr = run_procedure(g, a["k"], a["variant"], require_dense=not a["relax"], budget=a["step_budget"])
        except PreconditionError as exc:
            raise UsageError("--k", str(exc))
        d = tr.as_dict()
        d["terminal_graph6"] = emit_graph6(tr.terminal)
        return EXIT_OK, d, "\n".join(tr.lines()) + "\n"

    return _per_graph(cfg, one)


def _cmd_census(cfg: CommandConfig):
    from .verifier import census as cz
    from .verifier.lemmas import check_lemma_statements

    a = cfg.args
    which = a["which"]
    kw = {"workers": cfg.workers, "shards": cfg.shards}

    def need(*names):
        for name in names:
            if a.get(name) is None:
                raise UsageError(f"--{name}", f"required for census {which}")

    try:
        if which == "stability":
            need("n", "k")
            rep = cz.census_stability(a["n"], a["k"], **kw)
        elif which == "corollary":
            need("n", "k")
            rep = cz.census_corollary_3conn(a["n"], a["k"], **kw)
        elif which == "kopylov":
            need("n", "k")
            rep = cz.census_kopylov(a["n"], a["k"], **kw)
        elif which == "erdos-gallai":
            need("n", "k")
            rep = cz.census_erdos_gallai_cycle(a["n"], a["k"], **kw)
        elif which == "hamiltonicity":
            need("n", "d")
            rep = cz.census_erdos_hamiltonicity(a["n"], a["d"], **kw)
        elif which == "chvatal":
            need("n")
            rep = cz.check_chvatal(a["n"], **kw)
        else:
            rep = check_lemma_statements(a["samples"], seed=cfg.seed)
    except PreconditionError as exc:
        raise UsageError("--n", str(exc))
    code = EXIT_OK if rep.confirmed else EXIT_COUNTEREXAMPLE
    return code, rep.to_dict(timing=cfg.timing), rep.to_text(timing=cfg.timing)


_COMMANDS = {
    "bound": _cmd_bound,
    "gen": _cmd_gen,
    "classify": _cmd_classify,
    "circumference": _cmd_circumference,
    "core": _cmd_core,
    "closure": _cmd_closure,
    "run-bp": _cmd_run_bp,
    "census": _cmd_census,
}


def dispatch(cfg: CommandConfig) -> tuple[int, str]:
    """Run one command; returns the exit status and the text to print."""
    code, data, text = _COMMANDS[cfg.command](cfg)
    if cfg.output == "json":
        if isinstance(data, dict) and data.get("schema"):
            return code, json.dumps(data, indent=2) + "\n"
        return code, json.dumps({"schema": CLI_SCHEMA, "command": cfg.command, "result": data}, indent=2) + "\n"
    return code, text


# -- argument parsing -------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="egstab", description="Long-cycle extremal graphs: bounds, "
                                "constructions, recognizers, procedures and small-order census.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("--output", choices=("text", "json"), default="text")
    p.add_argument("--search-limit", type=int, help="vertex cap for recognizers")
    p.add_argument("--exact-limit", type=int, help="vertex cap for exact cycle and path search")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_input(sp):
        sp.add_argument("--input", help="file to read (default: stdin)")
        sp.add_argument("--format", dest="input_format", choices=("auto", "graph6", "edgelist"), default="auto")

    b = sub.add_parser("bound", help="closed-form bounds for n and k")
    b.add_argument("n", type=int)
    b.add_argument("k", type=int)

    g = sub.add_parser("gen", help="emit a construction")
    g.add_argument("kind", choices=("H", "G2", "G3", "G4", "F"))
    g.add_argument("params", type=int, nargs="*", help="H: n k a; G2/G3: n k; G4: n [k]; F: t")
    g.add_argument("--b", type=int, help="size of part B (G2, G3)")
    g.add_argument("--c", type=int, help="size of part C (G2)")
    g.add_argument("--stars", help="comma-separated star orders (G3, G4)")
    g.add_argument("--anchors", help="comma-separated leaf anchors for stars of order 3+")
    g.add_argument("--tag", default="F0", help="family tag for gen F")
    g.add_argument("--delete", help="A-B edges to delete for gen F, e.g. 0-4,1-5")
    g.add_argument("--graph-format", choices=("graph6", "edgelist"), default="graph6")

    c = sub.add_parser("classify", help="classify a 2-connected graph without long cycles")
    c.add_argument("--k", type=int, required=True)
    graph_input(c)

    ci = sub.add_parser("circumference", help="longest cycle length with a witness")
    graph_input(ci)

    co = sub.add_parser("core", help="alpha-core of a graph")
    co.add_argument("--alpha", type=int, required=True)
    co.add_argument("--graph-format", choices=("graph6", "edgelist"), default="graph6")
    graph_input(co)

    cl = sub.add_parser("closure", help="k-closure of a graph")
    cl.add_argument("--k", type=int, required=True)
    cl.add_argument("--graph-format", choices=("graph6", "edgelist"), default="graph6")
    graph_input(cl)

    r = sub.add_parser("run-bp", help="run the basic or modified contraction procedure")
    r.add_argument("--k", type=int, required=True)
    r.add_argument("--variant", choices=("bp", "mbp"), default="bp")
    r.add_argument("--relax", action="store_true", help="skip the density requirement")
    r.add_argument("--step-budget", type=int, default=10_000)
    graph_input(r)

    ce = sub.add_parser("census", help="exhaustive small-order checks")
    ce.add_argument("which", choices=("stability", "corollary", "kopylov", "erdos-gallai",
                                      "hamiltonicity", "chvatal", "lemmas"))
    ce.add_argument("--n", type=int)
    ce.add_argument("--k", type=int)
    ce.add_argument("--d", type=int)
    ce.add_argument("--workers", type=int, default=1)
    ce.add_argument("--shards", type=int)
    ce.add_argument("--samples", type=int, default=10_000)
    ce.add_argument("--seed", type=int, default=0)
    ce.add_argument("--no-timing", action="store_true", help="omit wall time for byte-stable output")
    return p


def config_from_args(ns: argparse.Namespace) -> CommandConfig:
    args = {k: v for k, v in vars(ns).items()
            if k not in ("command", "output", "input", "input_format", "search_limit", "exact_limit",
                         "workers", "shards", "seed", "no_timing")}
    cfg = CommandConfig(ns.command, args, getattr(ns, "input", None), getattr(ns, "input_format", "auto"),
                        ns.output, getattr(ns, "workers", 1), getattr(ns, "shards", None),
                        getattr(ns, "seed", 0), not getattr(ns, "no_timing", False))
    if cfg.workers < 1:
        raise UsageError("--workers", "must be positive")
    if cfg.shards is not None and cfg.shards < 1:
        raise UsageError("--shards", "must be positive")
    return cfg


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    for flag, env in (("search_limit", "EGSTAB_SEARCH_LIMIT"), ("exact_limit", "EGSTAB_EXACT_LIMIT")):
        value = getattr(ns, flag)
        if value is not None:
            os.environ[env] = str(value)
    try:
        cfg = config_from_args(ns)
        code, text = dispatch(cfg)
    except UsageError as exc:
        parser.error(str(exc))  # exits with status 2
    except (GraphFormatError, PreconditionError) as exc:
        print(f"egstab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except EgstabError as exc:
        print(f"egstab: fatal: {exc}", file=sys.stderr)
        return EXIT_COUNTEREXAMPLE
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
