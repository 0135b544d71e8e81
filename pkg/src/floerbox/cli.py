"""Command-line entry point: floerbox {hfk,invariants,sweep,csc,selftest}."""
from __future__ import annotations

import argparse
import json
import os
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .cfk import CfkModel, ModelError, load_model
from .csc import TAU_SCOPES, CscDomainError, check_csc
from .homology import HomologyError
from .invariants import derive_invariants
from .patterns import PATTERNS
from .pipeline import satellite_hfk
from .tensor import StructureError

SCHEMA = "floerbox/1"
N_LIMIT = 10_000
COMMANDS = ("hfk", "invariants", "sweep", "csc", "selftest")


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    pattern: str = "mazur"
    model_path: str | None = None
    n: tuple[int, int] = (0, 0)
    output: str = "tsv"
    tau_satellite: int | None = None
    tau_scope: str = "none"
    plot: str | None = None
    dot: str | None = None


def parse_n(text: str) -> tuple[int, int]:
    """An integer, or an inclusive range written a..b or a:b."""
    m = re.fullmatch(r"\s*(-?\d+)\s*(?:(?:\.\.|:)\s*(-?\d+)\s*)?", text)
    if not m:
        raise UsageError(f"--n expects an integer or a range a..b, got {text!r}")
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) is not None else lo
    if lo > hi:
        raise UsageError(f"empty range {lo}..{hi}")
    if max(abs(lo), abs(hi)) > N_LIMIT:
        raise UsageError(f"|n| must be at most {N_LIMIT}")
    return lo, hi


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="floerbox",
        description="Knot Floer homology of Mazur and (2,1)-cable satellites via bordered box tensor products.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, need_n=True, patterns=True):
        p.add_argument("--model", required=True, help="companion CFK model JSON file")
        if need_n:
            p.add_argument("--n", required=True, help="framing, or an inclusive range a..b for sweep")
        if patterns:
            p.add_argument("--pattern", choices=sorted(PATTERNS), default="mazur")
        p.add_argument("--output", choices=("tsv", "json"), default="tsv")

    p = sub.add_parser("hfk", help="print the (A, delta_rel, rank) table of the satellite")
    common(p)
    p.add_argument("--plot", metavar="PATH", help="also render the table as an image")
    p.add_argument("--dot", metavar="PATH", help="also write the companion type D structure as Graphviz")
    common(sub.add_parser("invariants", help="genus, fiberedness and thickness of the satellite"))
    common(sub.add_parser("sweep", help="invariants for every framing in a range"))
    p = sub.add_parser("csc", help="cosmetic surgery screen for the Mazur satellite")
    common(p, patterns=False)
    p.add_argument("--tau-satellite", type=int, default=None,
                   help="tau of the satellite, if known from elsewhere")
    p.add_argument("--tau-scope", choices=TAU_SCOPES, default="none",
                   help="how far the tau = -1 side condition on the n = 0 families reaches")
    p = sub.add_parser("selftest", help="check the pipeline against the transcribed tables")
    p.add_argument("--output", choices=("tsv", "json"), default="tsv")
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    n = parse_n(ns.n) if getattr(ns, "n", None) is not None else (0, 0)
    if ns.command not in ("sweep", "selftest") and n[0] != n[1]:
        raise UsageError(f"{ns.command} takes a single framing; use sweep for ranges")
    return RunConfig(
        command=ns.command,
        pattern=getattr(ns, "pattern", "mazur"),
        model_path=getattr(ns, "model", None),
        n=n,
        output=ns.output,
        tau_satellite=getattr(ns, "tau_satellite", None),
        tau_scope=getattr(ns, "tau_scope", "none"),
        plot=getattr(ns, "plot", None),
        dot=getattr(ns, "dot", None),
    )


def _emit_json(obj: dict, out) -> None:
    out.write(json.dumps({"schema": SCHEMA, **obj}, sort_keys=True, ensure_ascii=False) + "\n")


def _emit_tsv(header: list[str], rows, out) -> None:
    out.write("\t".join(header) + "\n")
    for r in rows:
        out.write("\t".join(_cell(x) for x in r) + "\n")
        out.flush()


def _cell(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if x is None:
        return "-"
    if isinstance(x, (list, tuple)):
        return ",".join(map(str, x)) or "-"
    return str(x)


def _invariant_row(args: tuple[CfkModel, int, str]) -> dict:
    model, n, pattern = args
    return {"n": n, **derive_invariants(satellite_hfk(model, n, pattern)).as_dict()}


def _workers(count: int) -> int:
    env = os.environ.get("FLOERBOX_THREADS")
    cap = int(env) if env and env.isdigit() and int(env) > 0 else (os.cpu_count() or 1)
    return max(1, min(cap, count))


def _cmd_hfk(cfg: RunConfig, model: CfkModel, out) -> None:
    n = cfg.n[0]
    table = satellite_hfk(model, n, cfg.pattern)
    if cfg.dot:
        from .cfd import build_cfd
        with open(cfg.dot, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(build_cfd(model, n).to_dot())
    if cfg.plot:
        from .plotting import plot_hfk
        plot_hfk(table, cfg.plot, title=f"{cfg.pattern} satellite of {model.label}, n = {n}")
    if cfg.output == "json":
        _emit_json({
            "command": "hfk", "pattern": cfg.pattern, "model": model.label, "n": n,
            "shift": table.shift_applied, "total_rank": table.total_rank,
            "rows": [{"A": a, "delta_rel": d, "rank": r} for a, d, r in table.rows()],
            "generators": [{"name": e.name, "A": e.A, "A_rel": e.A - table.shift_applied,
                            "N": e.N, "delta_rel": e.delta_rel} for e in table.entries],
        }, out)
    else:
        _emit_tsv(["A", "delta_rel", "rank"], table.rows(), out)


_INV_COLS = ["n", "genus", "fibered", "thickness", "top_rank", "total_rank"]


def _cmd_invariants(cfg: RunConfig, model: CfkModel, out) -> None:
    row = _invariant_row((model, cfg.n[0], cfg.pattern))
    if cfg.output == "json":
        _emit_json({"command": "invariants", "pattern": cfg.pattern, "model": model.label, **row}, out)
    else:
        _emit_tsv(_INV_COLS, [[row[c] for c in _INV_COLS]], out)


def _cmd_sweep(cfg: RunConfig, model: CfkModel, out) -> None:
    ns = range(cfg.n[0], cfg.n[1] + 1)
    jobs = [(model, n, cfg.pattern) for n in ns]
    workers = _workers(len(jobs))
    if cfg.output == "tsv":
        out.write("\t".join(_INV_COLS) + "\n")

    def emit(row):
        if cfg.output == "json":
            _emit_json({"command": "sweep", "pattern": cfg.pattern, "model": model.label, **row}, out)
        else:
            out.write("\t".join(_cell(row[c]) for c in _INV_COLS) + "\n")
        out.flush()

    if workers == 1:
        for job in jobs:
            emit(_invariant_row(job))
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for row in pool.map(_invariant_row, jobs, chunksize=max(1, len(jobs) // (4 * workers))):
            emit(row)


def _cmd_csc(cfg: RunConfig, model: CfkModel, out) -> None:
    verdict = check_csc(model, cfg.n[0], cfg.tau_satellite, cfg.tau_scope)
    d = verdict.as_dict()
    if cfg.output == "json":
        _emit_json({"command": "csc", "model": model.label, **d}, out)
    else:
        _emit_tsv(["status", "obstruction", "slopes", "family"],
                  [[d["status"], d["obstruction"], d["slopes"], d["family"]]], out)


def _cmd_selftest(cfg: RunConfig, out) -> bool:
    from .selftest import run_checks
    checks = run_checks()
    if cfg.output == "json":
        _emit_json({"command": "selftest", "passed": all(c.ok for c in checks),
                    "checks": [{"name": c.name, "ok": c.ok, "detail": c.detail} for c in checks]}, out)
    else:
        for c in checks:
            out.write(f"{'PASS' if c.ok else 'FAIL'}\t{c.name}" + (f"\t{c.detail}" if c.detail else "") + "\n")
    return all(c.ok for c in checks)


def run(cfg: RunConfig, out=None) -> int:
    out = out or sys.stdout
    if cfg.command == "selftest":
        return 0 if _cmd_selftest(cfg, out) else 1
    model = load_model(cfg.model_path)
    handler = {"hfk": _cmd_hfk, "invariants": _cmd_invariants, "sweep": _cmd_sweep, "csc": _cmd_csc}
    handler[cfg.command](cfg, model, out)
    return 0


def _error(kind: str, message: str, code: int) -> int:
    sys.stderr.write(json.dumps({"schema": SCHEMA, "error": {"type": kind, "message": message}},
                                sort_keys=True, ensure_ascii=False) + "\n")
    return code


def _glue_n(argv: list[str]) -> list[str]:
    """Turn `--n -3..3` into `--n=-3..3` so argparse does not read the range as a flag."""
    out, i = [], 0
    while i < len(argv):
        if argv[i] == "--n" and i + 1 < len(argv):
            out.append(f"--n={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv: list[str] | None = None) -> int:
    for stream in (sys.stdout, sys.stderr):
        if hasattr(stream, "reconfigure"):
            stream.reconfigure(encoding="utf-8", newline="\n")
    parser = build_parser()
    try:
        ns = parser.parse_args(_glue_n(sys.argv[1:] if argv is None else list(argv)))
    except SystemExit as exc:
        if exc.code in (0, None):
            return 0
        return _error("usage", "invalid command line (see --help)", 2)
    try:
        return run(config_from_args(ns))
    except UsageError as exc:
        return _error("usage", str(exc), 2)
    except ModelError as exc:
        return _error("model", str(exc), 3)
    except CscDomainError as exc:
        return _error("domain", str(exc), 4)
    except (StructureError, HomologyError) as exc:
        return _error("computation", str(exc), 5)
    except BrokenPipeError:
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return 0
    except OSError as exc:
        return _error("io", f"{exc.filename}: {exc.strerror}", 6)


if __name__ == "__main__":
    sys.exit(main())
