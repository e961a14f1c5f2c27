"""Command line front end.

Examples::

    seqsr check seq-s 2 --graph cycle:9
    seqsr classify-cycles --max 11 --r 2
    seqsr betti --ideal-of-dual --graph cycle:7
    seqsr join-experiment --graph cycle:3 --graph cycle:3 --r 2

Exit status is 0 whenever a result was computed (whatever the verdict), 2 for
malformed input and 3 when an enumeration cap would be exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import complex as cxm
from . import graphs as gm
from .config import current_limits, limits
from .errors import InputError, ParseError, ResourceError
from .homology import reduced_homology
from .linalg import Field
from .reports import SCHEMA
from .resolution import (
    betti_face_ring,
    betti_ideal,
    is_cw_linear_first_r,
    sr_ideal,
)
from .serre import (
    is_CM,
    is_seq_CM,
    is_seq_S2_local,
    is_seq_Sr_relative,
    is_seq_Sr_skeleton,
    is_Sr,
)

EXIT_OK, EXIT_INPUT, EXIT_RESOURCE = 0, 2, 3


# ---------------------------------------------------------------------------
# inputs


def parse_generator(spec: str) -> gm.Graph:
    """Graph from ``cycle:n``, ``path:n``, ``complete:n``, ``complete-bipartite:a:b``,
    ``petersen``, ``whisker:<base>:v1,v2,...`` or ``bipartite-random:a:b:p:seed``."""
    parts = spec.split(":")
    kind = parts[0]
    try:
        if kind == "cycle" and len(parts) == 2:
            return gm.cycle_graph(int(parts[1]))
        if kind == "path" and len(parts) == 2:
            return gm.path_graph(int(parts[1]))
        if kind == "complete" and len(parts) == 2:
            return gm.complete_graph(int(parts[1]))
        if kind == "complete-bipartite" and len(parts) == 3:
            return gm.complete_bipartite(int(parts[1]), int(parts[2]))
        if kind == "petersen" and len(parts) == 1:
            return gm.petersen_graph()
        if kind == "whisker" and len(parts) >= 3:
            base = parse_generator(":".join(parts[1:-1]))
            verts = [int(v) for v in parts[-1].split(",") if v]
            for v in verts:
                if not 1 <= v <= base.n:
                    raise InputError(f"whisker vertex {v} outside 1..{base.n}")
            return gm.add_whiskers(base, verts)
        if kind == "bipartite-random" and len(parts) == 5:
            return gm.random_bipartite(int(parts[1]), int(parts[2]), float(parts[3]), int(parts[4]))
    except ValueError as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"bad generator {spec!r}: {exc}") from None
    raise InputError(f"unknown generator {spec!r}")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def load_graph(spec: str) -> gm.Graph:
    if ":" in spec or spec == "petersen":
        if not Path(spec).exists():
            return parse_generator(spec)
    return gm.parse_graph(_read(spec))


class Source:
    """An input operand: a complex file, or a graph (file or generator)."""

    def __init__(self, kind: str, value: str):
        self.kind = kind
        self.value = value
        self._graph = None
        self._complex = None

    @property
    def graph(self) -> gm.Graph:
        if self.kind != "graph":
            raise InputError("this command needs a graph (--graph)")
        if self._graph is None:
            self._graph = load_graph(self.value)
        return self._graph

    @property
    def complex(self) -> cxm.SimplicialComplex:
        if self._complex is None:
            if self.kind == "graph":
                self._complex = gm.independence_complex(self.graph)
            else:
                self._complex = cxm.parse_complex(_read(self.value))
        return self._complex

    def describe(self) -> str:
        return f"{self.kind}:{self.value}"


class _AppendSource(argparse.Action):
    def __call__(self, parser, namespace, values, option_string=None):
        kind = "graph" if option_string == "--graph" else "complex"
        items = list(getattr(namespace, "sources", None) or [])
        items.append(Source(kind, values))
        namespace.sources = items


# ---------------------------------------------------------------------------
# commands


CHECKS = {
    "s": lambda cx, g, r, f: is_Sr(cx, r, f),
    "seq-s": lambda cx, g, r, f: is_seq_Sr_skeleton(cx, r, f),
    "seq-s-relative": lambda cx, g, r, f: is_seq_Sr_relative(cx, r, f),
    "seq-s2-local": lambda cx, g, r, f: is_seq_S2_local(cx, f),
    "cm": lambda cx, g, r, f: is_CM(cx, f),
    "seq-cm": lambda cx, g, r, f: is_seq_CM(cx, f),
    "cw-linear-dual": lambda cx, g, r, f: is_cw_linear_first_r(sr_ideal(cxm.alexander_dual(cx)), r, f),
    "vertex-decomposable": lambda cx, g, r, f: cxm.is_vertex_decomposable(cx),
    "shellable": lambda cx, g, r, f: cxm.is_shellable(cx),
    "condition-iv": lambda cx, g, r, f: gm.condition_iv(g()),
    "theorem-conditions": lambda cx, g, r, f: gm.thm_conditions(g()),
    "whiskered-even-cycles": lambda cx, g, r, f: gm.whiskered_even_cycles(g()),
}


def _single_source(args) -> Source:
    sources = args.sources or []
    if len(sources) != 1:
        raise InputError(f"{args.verb} needs exactly one --graph or --complex input")
    return sources[0]


def cmd_check(args):
    src = _single_source(args)
    r = args.r_pos if args.r_pos is not None else args.r
    report = CHECKS[args.property](src.complex, lambda: src.graph, r, args.field)
    return report.to_dict(), report.to_text()


def cmd_betti(args):
    src = _single_source(args)
    cx = src.complex
    if args.ideal_of_dual:
        table = betti_ideal(sr_ideal(cxm.alexander_dual(cx)), args.field)
    elif args.ideal:
        table = betti_ideal(sr_ideal(cx), args.field)
    else:
        table = betti_face_ring(cx, args.field)
    payload = {
        "subject": table.subject,
        "entries": [{"i": i, "j": j, "value": v} for (i, j), v in table.entries],
    }
    return payload, table.to_text()


def cmd_dual(args):
    dual = cxm.alexander_dual(_single_source(args).complex)
    return {"complex": _complex_payload(dual)}, cxm.to_text(dual).rstrip("\n")


def cmd_skeleton(args):
    cx = _single_source(args).complex
    sk = cxm.pure_skeleton(cx, args.i) if args.pure else cxm.skeleton(cx, args.i)
    return {"complex": _complex_payload(sk)}, cxm.to_text(sk).rstrip("\n")


def cmd_link(args):
    cx = _single_source(args).complex
    try:
        verts = [int(t) for t in args.face.replace(",", " ").split()]
    except ValueError:
        raise InputError(f"bad face {args.face!r}") from None
    lk = cxm.link(cx, cxm.face(*verts))
    return {"complex": _complex_payload(lk)}, cxm.to_text(lk).rstrip("\n")


def cmd_homology(args):
    h = reduced_homology(_single_source(args).complex, args.field)
    return {"homology": [{"degree": d, "dim": v} for d, v in h.dims]}, h.to_text()


def cmd_normalize(args):
    cx, mapping = cxm.normalize(_single_source(args).complex)
    text = cxm.to_text(cx).rstrip("\n")
    text += "\n# labels: " + " ".join(f"{k}={v}" for k, v in mapping.items())
    return {"complex": _complex_payload(cx), "labels": {str(k): v for k, v in mapping.items()}}, text


def cmd_classify_cycles(args):
    rows = []
    for n in range(args.min, args.max + 1):
        cx = gm.independence_complex(gm.cycle_graph(n))
        rows.append(
            {
                "n": n,
                "odd": n % 2 == 1,
                "S_r": is_Sr(cx, args.r, args.field).verdict,
                "sequentially_S_r": is_seq_Sr_skeleton(cx, args.r, args.field).verdict,
            }
        )
    lines = [f"{'n':>3} {'odd':>5} {'S_r':>5} {'seq-S_r':>8}"]
    for row in rows:
        lines.append(
            f"{row['n']:>3} {_tf(row['odd']):>5} {_tf(row['S_r']):>5} {_tf(row['sequentially_S_r']):>8}"
        )
    return {"rows": rows}, "\n".join(lines)


def cmd_bipartite_battery(args):
    report = gm.bipartite_battery(_single_source(args).graph, args.field)
    return report.to_dict(), report.to_text()


def cmd_join_experiment(args):
    sources = args.sources or []
    if len(sources) != 2:
        raise InputError("join-experiment needs exactly two --graph/--complex inputs")
    a, b = (s.complex for s in sources)
    if a.n + b.n > current_limits().cap_n:
        raise ResourceError("cap_n", current_limits().cap_n, a.n + b.n)
    joined = cxm.join(a, b)
    results = {
        "first": is_seq_Sr_skeleton(a, args.r, args.field),
        "second": is_seq_Sr_skeleton(b, args.r, args.field),
        "join": is_seq_Sr_skeleton(joined, args.r, args.field),
    }
    payload = {
        "inputs": [s.describe() for s in sources],
        "results": {k: v.to_dict() for k, v in results.items()},
    }
    lines = [f"{k} ({s}): {'true' if results[k] else 'false'}" for k, s in zip(("first", "second"), payload["inputs"])]
    lines.append(f"join: {'true' if results['join'] else 'false'}")
    return payload, "\n".join(lines)


def cmd_generate(args):
    g = parse_generator(args.spec)
    if args.as_complex:
        cx = gm.independence_complex(g)
        return {"complex": _complex_payload(cx)}, cxm.to_text(cx).rstrip("\n")
    return {"graph": {"n": g.n, "edges": [list(e) for e in g.sorted_edges()]}}, gm.to_text(g).rstrip("\n")


def _complex_payload(cx):
    return {"n": cx.n, "facets": [list(f) for f in cx.facet_labels]}


def _tf(b: bool) -> str:
    return "true" if b else "false"


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--r", type=int, default=2, help="Serre index r (default 2)")
    common.add_argument("--field", type=Field.parse, default=Field.parse("q"), help="q (default) or a prime p")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--cap-n", type=int, default=None, help="ground-set cap for enumerations")
    common.add_argument("--cap-facets", type=int, default=None, help="facet cap for the shelling search")
    common.add_argument("--seed", type=int, default=None, help="recorded in JSON output")
    common.add_argument("--graph", action=_AppendSource, dest="sources", metavar="SPEC|FILE")
    common.add_argument("--complex", action=_AppendSource, dest="sources", metavar="FILE")

    parser = argparse.ArgumentParser(prog="seqsr", description="Serre S_r and sequential S_r for simplicial complexes")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("check", parents=[common], help="run a decision procedure")
    p.add_argument("property", choices=sorted(CHECKS))
    p.add_argument("r_pos", nargs="?", type=int, metavar="R")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("betti", parents=[common], help="graded Betti numbers")
    grp = p.add_mutually_exclusive_group()
    grp.add_argument("--ideal", action="store_true", help="of the Stanley-Reisner ideal")
    grp.add_argument("--ideal-of-dual", action="store_true", help="of the ideal of the Alexander dual")
    p.set_defaults(func=cmd_betti)

    sub.add_parser("dual", parents=[common], help="Alexander dual").set_defaults(func=cmd_dual)

    p = sub.add_parser("skeleton", parents=[common], help="(pure) skeleton")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--pure", action="store_true")
    p.set_defaults(func=cmd_skeleton)

    p = sub.add_parser("link", parents=[common], help="link of a face")
    p.add_argument("--face", required=True, help='e.g. "1 3"; empty string for ∅')
    p.set_defaults(func=cmd_link)

    sub.add_parser("homology", parents=[common], help="reduced homology").set_defaults(func=cmd_homology)
    sub.add_parser("normalize", parents=[common], help="restrict to the used vertices").set_defaults(
        func=cmd_normalize
    )

    p = sub.add_parser("classify-cycles", parents=[common], help="S_r table for cycles")
    p.add_argument("--min", type=int, default=3)
    p.add_argument("--max", type=int, default=11)
    p.set_defaults(func=cmd_classify_cycles)

    sub.add_parser("bipartite-battery", parents=[common], help="five equivalent conditions").set_defaults(
        func=cmd_bipartite_battery
    )
    sub.add_parser("join-experiment", parents=[common], help="sequential S_r of a join").set_defaults(
        func=cmd_join_experiment
    )

    p = sub.add_parser("generate", parents=[common], help="print a generated graph")
    p.add_argument("spec")
    p.add_argument("--as-complex", action="store_true", help="print the independence complex instead")
    p.set_defaults(func=cmd_generate)
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    overrides = {}
    if args.cap_n is not None:
        overrides["cap_n"] = args.cap_n
    if args.cap_facets is not None:
        overrides["cap_facets"] = args.cap_facets
    try:
        with limits(**overrides) as lim:
            payload, text = args.func(args)
    except ResourceError as exc:
        print(f"seqsr: resource error: {exc}", file=stderr)
        return EXIT_RESOURCE
    except (InputError, ParseError) as exc:
        print(f"seqsr: input error: {exc}", file=stderr)
        return EXIT_INPUT
    if args.format == "json":
        doc = {
            "schema": SCHEMA,
            "command": args.verb,
            "field": str(args.field),
            "r": args.r_pos if getattr(args, "r_pos", None) is not None else args.r,
            "caps": {"cap_n": lim.cap_n, "cap_facets": lim.cap_facets},
            "seed": args.seed,
            "inputs": [s.describe() for s in (args.sources or [])],
            "result": payload,
        }
        print(json.dumps(doc, sort_keys=True, indent=2), file=stdout)
    else:
        print(text, file=stdout)
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
