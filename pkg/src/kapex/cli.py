"""Command-line front end: ``kapex <subcommand> ...``.

Exit codes: 0 when every verdict passes, 1 on a counterexample or a bad input
line, 2 on an infrastructure error (bad flags, guard refusal, unreadable file).
"""

from __future__ import annotations

import argparse
import contextlib
import json
import os
import sys
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence, TextIO

from . import __version__
from .apex import apex_number, certificate_json
from .enumeration import EnumScope, GuardError, _stream
from .families import FamilyError, FamilySpec
from .graph import GraphError
from .graph6 import from_graph6, read_graph6_lines, to_dot, to_graph6
from .indices import abc_alpha, azi, fraction_str
from .report import dumps, emit_report, exit_code
from . import transforms as tr
from . import verify as vf

WORKERS_ENV = "KAPEX_WORKERS"


class UsageError(Exception):
    """Rejected flag combination; maps to exit code 2."""


@dataclass
class RunConfig:
    subcommand: str
    input: str | None = None
    out: str | None = None
    n: int | None = None
    c: int | None = None
    k: int | None = None
    alpha: str | None = None
    shard: tuple[int, int] = (0, 1)
    workers: int = 1
    guard_override: bool = False
    seed: int = 0
    extra: dict = field(default_factory=dict)

    def as_json(self) -> dict:
        d = asdict(self)
        d["shard"] = f"{self.shard[0]}/{self.shard[1]}"
        return d


# --- argument helpers ---------------------------------------------------------------


def parse_shard(text: str) -> tuple[int, int]:
    try:
        i, t = (int(x) for x in text.split("/"))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"shard must look like i/t, got {text!r}") from exc
    if t < 1 or not 0 <= i < t:
        raise argparse.ArgumentTypeError(f"need 0 <= i < t, got {text!r}")
    return i, t


def parse_range(text: str) -> range:
    """``a:b`` is the inclusive range a..b."""
    try:
        a, b = (int(x) for x in text.split(":"))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"range must look like a:b, got {text!r}") from exc
    if b < a:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(a, b + 1)


def parse_alpha(text: str) -> Fraction | float:
    try:
        return Fraction(text)
    except ValueError:
        try:
            return float(text)
        except ValueError as exc:
            raise argparse.ArgumentTypeError(f"alpha must be a number, got {text!r}") from exc


def _grid_value(text: str):
    if ":" in text:
        return parse_range(text)
    if "," in text:
        return tuple(tuple(int(y) for y in x.split("/")) if "/" in x else int(x) for x in text.split(","))
    return int(text)


def parse_grid(items: Sequence[str]) -> dict:
    """``key=value`` overrides; values are ints, ``a:b`` ranges or ``x,y`` tuples (``15/4`` pairs)."""
    out = {}
    for item in items:
        key, sep, value = item.partition("=")
        if not sep:
            raise UsageError(f"--grid expects key=value, got {item!r}")
        try:
            out[key.strip()] = _grid_value(value.strip())
        except (ValueError, argparse.ArgumentTypeError) as exc:
            raise UsageError(f"bad --grid value {item!r}: {exc}") from exc
    return out


def resolve_workers(flag: int | None) -> int:
    if flag is not None:
        value = flag
    else:
        env = os.environ.get(WORKERS_ENV, "1")
        try:
            value = int(env)
        except ValueError as exc:
            raise UsageError(f"{WORKERS_ENV}={env!r} is not an integer") from exc
    if value < 1:
        raise UsageError("worker count must be positive")
    return value


@contextlib.contextmanager
def _open_in(path: str | None) -> Iterator[TextIO]:
    if path is None or path == "-":
        yield sys.stdin
    else:
        with open(path, encoding="ascii") as fh:
            yield fh


@contextlib.contextmanager
def _open_out(path: str | None) -> Iterator[TextIO]:
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as fh:
            yield fh


def _err(msg: str) -> None:
    print(f"kapex: {msg}", file=sys.stderr)


def _value_text(x: Fraction | float) -> str:
    if isinstance(x, Fraction):
        return f"{fraction_str(x)} {float(x)!r}"
    return repr(x)


# --- subcommands -------------------------------------------------------------------------


def cmd_index(args, cfg: RunConfig) -> int:
    alpha = args.alpha
    status = 0
    rows = []
    with _open_in(args.input) as fh:
        for num, line in read_graph6_lines(fh):
            try:
                G = from_graph6(line)
                val = azi(G) if alpha is None else abc_alpha(G, alpha)
            except (GraphError, ValueError) as exc:
                _err(f"line {num}: {exc}")
                status = 1
                continue
            rows.append((line, val))
    with _open_out(args.out) as out:
        for line, val in rows:
            if args.json:
                rec = {"graph6": line, "decimal": float(val)}
                if isinstance(val, Fraction):
                    rec["exact"] = fraction_str(val)
                out.write(json.dumps(rec) + "\n")
            else:
                out.write(_value_text(val) + "\n")
    return status


def cmd_family(args, cfg: RunConfig) -> int:
    cg = FamilySpec.parse(args.spec).build()
    roles = {k: list(v) for k, v in cg.roles.items()}
    with _open_out(args.out) as out:
        if args.dot:
            labels = {v: name for name, vs in cg.roles.items() for v in vs}
            out.write(to_dot(cg.graph, "G", labels))
        else:
            out.write(to_graph6(cg.graph) + "\n")
    side = json.dumps({"spec": str(FamilySpec.parse(args.spec)), "n": cg.graph.n, "roles": roles})
    if args.roles:
        with open(args.roles, "w", encoding="utf-8") as fh:
            fh.write(side + "\n")
    else:
        print(side, file=sys.stderr)
    return 0


def cmd_apex(args, cfg: RunConfig) -> int:
    status = 0
    with _open_in(args.input) as fh, _open_out(args.out) as out:
        for num, line in read_graph6_lines(fh):
            try:
                cert = apex_number(from_graph6(line))
            except (GraphError, ValueError) as exc:
                _err(f"line {num}: {exc}")
                status = 1
                continue
            rec = {"graph6": line, **certificate_json(cert)}
            out.write(json.dumps(rec) + "\n")
    return status


def _scope(args) -> EnumScope:
    if args.n is None or args.c is None:
        raise UsageError("--n and --c are required")
    return EnumScope(args.n, args.c, args.k, args.shard, args.guard_override)


def cmd_enum(args, cfg: RunConfig) -> int:
    scope = _scope(args)
    with _open_out(args.out) as out:
        for G in _stream(scope):
            out.write(to_graph6(G) + "\n")
    return 0


def _write_report(doc: dict, path: str | None) -> int:
    with _open_out(path) as out:
        out.write(dumps(doc))
    return exit_code(doc)


def cmd_search(args, cfg: RunConfig) -> int:
    started = time.perf_counter()
    if args.c == 0:
        raise UsageError("search needs a cyclic scope (--c 1..3)")
    scope = _scope(args)
    expected = FamilySpec.parse(args.expected) if args.expected else None
    rep = vf.search_min_azi(scope, expected, cfg.workers)
    return _write_report(emit_report([rep], cfg.as_json(), started), args.out)


def cmd_verify(args, cfg: RunConfig) -> int:
    started = time.perf_counter()
    if not (args.theorem or args.lemma or args.property):
        raise UsageError("verify needs --theorem, --lemma or --property")
    grid = parse_grid(args.grid or [])
    if args.n_range is not None:
        grid["n_range"] = args.n_range
    if grid and not args.lemma:
        raise UsageError("--grid/--n-range only apply to --lemma")
    if args.lemma and len(args.lemma) > 1 and grid:
        raise UsageError("grid overrides need a single --lemma")
    reports: list = []
    if args.theorem:
        if args.n is None or args.k is None:
            raise UsageError("--theorem needs --n and --k")
        reports.append(vf.verify_theorem(args.n, args.k, cfg.workers, args.guard_override))
    lemmas = sorted(vf.LEMMAS) if args.lemma == ["all"] else (args.lemma or [])
    for lemma in lemmas:
        if lemma not in vf.LEMMAS:
            raise UsageError(f"unknown lemma {lemma!r}; known: {', '.join(sorted(vf.LEMMAS))}")
        try:
            reports.append(vf.check_lemma(lemma, **grid))
        except TypeError as exc:
            raise UsageError(f"grid override not accepted by {lemma}: {exc}") from exc
    props = sorted(vf.PROPERTIES) if args.property == ["all"] else (args.property or [])
    for name in props:
        if name not in vf.PROPERTIES:
            raise UsageError(f"unknown property {name!r}; known: {', '.join(sorted(vf.PROPERTIES))}")
        reports.append(vf.PROPERTIES[name](cases=args.cases, seed=args.seed))
    doc = emit_report(reports, cfg.as_json(), started)
    code = _write_report(doc, args.out)
    for r in doc["lemmas"]:
        print(f"{r['lemma']}: {r['verdict']} ({r['checked']} checked)", file=sys.stderr)
    for r in doc["theorems"]:
        print(f"theorem n={r['n']} k={r['k']}: {'pass' if r['passed'] else 'FAIL'}", file=sys.stderr)
    return code


def _outcome_json(name: str, before, after, delta, roles: dict) -> dict:
    rec = {"surgery": name, "before": to_graph6(before), "after": to_graph6(after), "roles": roles}
    if isinstance(delta, Fraction):
        rec["delta"] = {"exact": fraction_str(delta), "decimal": float(delta)}
    else:
        rec["delta"] = {"exact": None, "decimal": float(delta)}
    return rec


def _need(value, flag: str):
    if value is None:
        raise UsageError(f"this surgery needs {flag}")
    return value


def _run_surgery(args, G) -> dict:
    name = args.name
    if name == "gstar":
        o = tr.gstar(G, _need(args.vertex, "--vertex"))
    elif name == "z-to-star":
        o = tr.z_to_star(G, _need(args.vertex, "--vertex"))
    elif name == "cycle-edge":
        o = tr.delete_cycle_edge_at_2vertex(G, _need(args.vertex, "--vertex"))
    elif name == "add-edge":
        alpha = args.alpha if args.alpha is not None else Fraction(-3)
        o = tr.add_edge(G, _need(args.u, "--u"), _need(args.v, "--v"), alpha)
    elif name == "rebalance":
        a, b, d = tr.rebalance_stars(G, _need(args.u, "--u"), _need(args.v, "--v"),
                                     *_need(args.sizes, "--sizes s1,s2"))
        return _outcome_json(name, a.graph, b.graph, d, {k: list(v) for k, v in b.roles.items()})
    elif name == "reroot-check":
        verdict = tr.prop_2_1_check(G, _need(args.vertex, "--vertex"))
        return {"surgery": name, "before": to_graph6(G), "applicable": verdict.applicable,
                "reason": verdict.reason, "t": verdict.t, "q": verdict.q,
                "conditions": list(verdict.conditions),
                "delta": fraction_str(verdict.delta) if verdict.delta is not None else None,
                "holds": verdict.holds}
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown surgery {name}")
    return _outcome_json(name, o.before, o.after, o.delta, o.roles)


def cmd_surgery(args, cfg: RunConfig) -> int:
    status = 0
    if args.name == "c-shift":
        s = _need(args.sizes, "--sizes s1,s2,s3")
        if len(s) != 3:
            raise UsageError("c-shift needs --sizes s1,s2,s3")
        a, b, d = tr.c_shift(*s)
        with _open_out(args.out) as out:
            out.write(json.dumps(_outcome_json("c-shift", a.graph, b.graph, d, {})) + "\n")
        return 0
    if args.name == "rebalance" and args.sizes is not None and len(args.sizes) != 2:
        raise UsageError("rebalance needs --sizes s1,s2")
    with _open_in(args.input) as fh, _open_out(args.out) as out:
        for num, line in read_graph6_lines(fh):
            try:
                rec = _run_surgery(args, from_graph6(line))
            except (GraphError, ValueError) as exc:
                _err(f"line {num}: {exc}")
                status = 1
                continue
            out.write(json.dumps(rec) + "\n")
    return status


# --- parser --------------------------------------------------------------------------------


def _sizes(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"sizes must be comma-separated integers, got {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kapex", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"kapex {__version__}")
    sub = p.add_subparsers(dest="subcommand", required=True)

    def common(sp, inp=True):
        if inp:
            sp.add_argument("input", nargs="?", help="graph6 file, one graph per line (default stdin)")
        sp.add_argument("--out", help="output path (default stdout)")

    def scope_flags(sp):
        sp.add_argument("--n", type=int)
        sp.add_argument("--c", type=int)
        sp.add_argument("--k", type=int)
        sp.add_argument("--shard", type=parse_shard, default=(0, 1), metavar="i/t")
        sp.add_argument("--guard-override", action="store_true",
                        help="acknowledge that n exceeds the enumeration guard")

    sp = sub.add_parser("index", help="AZI (or ABC_alpha with --alpha) per graph6 line")
    common(sp)
    sp.add_argument("--alpha", type=parse_alpha)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_index)

    sp = sub.add_parser("family", help="build a named family member, e.g. A:4,4,7")
    sp.add_argument("spec")
    common(sp, inp=False)
    sp.add_argument("--dot", action="store_true", help="emit DOT instead of graph6")
    sp.add_argument("--roles", help="write the role map here instead of stderr")
    sp.set_defaults(func=cmd_family)

    sp = sub.add_parser("apex", help="apex number with a removal-set certificate")
    common(sp)
    sp.set_defaults(func=cmd_apex)

    sp = sub.add_parser("enum", help="stream c-cyclic graphs (optionally with apex k) as graph6")
    common(sp, inp=False)
    scope_flags(sp)
    sp.set_defaults(func=cmd_enum)

    sp = sub.add_parser("search", help="exhaustive minimum AZI over a scope, JSON report")
    common(sp, inp=False)
    scope_flags(sp)
    sp.add_argument("--workers", type=int)
    sp.add_argument("--expected", help="family spec the unique minimiser should match")
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("verify", help="theorem instances, inequality grids and property suites")
    common(sp, inp=False)
    sp.add_argument("--theorem", action="store_true")
    sp.add_argument("--n", type=int)
    sp.add_argument("--k", type=int)
    sp.add_argument("--lemma", action="append", help="check id, repeatable, or 'all'")
    sp.add_argument("--property", action="append", help="property suite, repeatable, or 'all'")
    sp.add_argument("--grid", action="append", metavar="key=value", help="override a grid parameter")
    sp.add_argument("--n-range", type=parse_range, metavar="a:b")
    sp.add_argument("--cases", type=int, default=1000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--workers", type=int)
    sp.add_argument("--guard-override", action="store_true")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("surgery", help="apply a graph surgery and report the exact AZI change")
    sp.add_argument("name", choices=["gstar", "z-to-star", "cycle-edge", "add-edge", "rebalance",
                                     "c-shift", "reroot-check"])
    common(sp)
    sp.add_argument("--vertex", type=int)
    sp.add_argument("--u", type=int)
    sp.add_argument("--v", type=int)
    sp.add_argument("--sizes", type=_sizes)
    sp.add_argument("--alpha", type=parse_alpha)
    sp.set_defaults(func=cmd_surgery)
    return p


def _config(args) -> RunConfig:
    known = {"subcommand", "input", "out", "n", "c", "k", "alpha", "shard", "guard_override", "seed"}
    skip = known | {"func", "workers"}
    extra = {}
    for key, value in vars(args).items():
        if key in skip:
            continue
        extra[key] = f"{value.start}:{value.stop - 1}" if isinstance(value, range) else value
    alpha = getattr(args, "alpha", None)
    return RunConfig(
        subcommand=args.subcommand, input=getattr(args, "input", None), out=args.out,
        n=getattr(args, "n", None), c=getattr(args, "c", None), k=getattr(args, "k", None),
        alpha=None if alpha is None else str(alpha), shard=getattr(args, "shard", (0, 1)),
        workers=resolve_workers(getattr(args, "workers", None)),
        guard_override=getattr(args, "guard_override", False), seed=getattr(args, "seed", 0),
        extra=extra,
    )


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        cfg = _config(args)
        return args.func(args, cfg)
    except (UsageError, GuardError, FamilyError, OSError) as exc:
        _err(str(exc))
        return 2
    except (GraphError, ValueError, KeyError) as exc:
        _err(str(exc))
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
