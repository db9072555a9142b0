"""``k2ham`` command line.

Vertex labels typed on or printed to the command line are 1-based, as in
the figures (``--outer 6,9,3,1`` for J18); ``--zero-based`` switches to the
internal numbering. Files, graph6 and certificates always use 0-based labels.

Exit status: 0 ok, 1 verdict differs from ``--expect``, 2 usage,
3 unparsable input, 4 precondition violated, 5 search undecided.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .errors import GraphError, K2HamError, ParseError, PreconditionError, Undecided
from .formats import decode_any, decode_edge_list, decode_embedding, encode_edge_list, encode_graph6
from .graph import Graph
from .catalog import CATALOG, J18_OUTER, parse_name

EXIT_USAGE, EXIT_PARSE, EXIT_PRECONDITION, EXIT_UNDECIDED = 2, 3, 4, 5


class UsageError(K2HamError):
    pass


def _ints(text: str, what: str, count: int | None = None) -> list[int]:
    try:
        vals = [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise UsageError(f"{what}: expected comma-separated integers, got {text!r}") from None
    if count is not None and len(vals) != count:
        raise UsageError(f"{what}: expected {count} values, got {len(vals)}")
    return vals


def _base(args) -> int:
    return 0 if getattr(args, "zero_based", False) else 1


def _rebase(vals: list[int], base: int) -> list[int]:
    return [v - base for v in vals]


def _show(vals, base: int) -> str:
    return ",".join(str(v + base) for v in vals)


def _stdin_line() -> str:
    for line in sys.stdin:
        if line.strip():
            return line.strip()
    raise ParseError("no graph on standard input")


def load_graph(src: str) -> Graph:
    """A catalog name (``gp:11,2``), a file (graph6/sparse6/edge list), ``-`` for stdin, or a graph6 string."""
    if src == "-":
        return decode_any(_stdin_line())
    path = Path(src)
    if path.is_file():
        text = path.read_text()
        first = next((ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")), "")
        if not first:
            raise ParseError(f"{src}: empty file")
        if ":" in first and first.split(":", 1)[0].strip().isdigit():
            return decode_embedding(text)[0]
        if first.replace(" ", "").isdigit() and len(first.split()) == 2:
            return decode_edge_list(text)
        return decode_any(first)
    if src.partition(":")[0].lower() in CATALOG:
        try:
            return parse_name(src)
        except ValueError:
            raise UsageError(f"bad graph name {src!r}") from None
    return decode_any(src)


def load_embedding(src: str):
    from . import planar
    builtin = {"dodecahedron": planar.dodecahedron_embedding, "j18": planar.j18_embedding, "k4": planar.k4_embedding}
    if src in builtin:
        return builtin[src]()
    path = Path(src)
    text = sys.stdin.read() if src == "-" else path.read_text() if path.is_file() else None
    if text is None:
        raise UsageError(f"{src!r} is neither a file nor one of {', '.join(builtin)}")
    return decode_embedding(text)[1]


def _mark(ok) -> str:
    return "true" if ok else "false"


def _expect(args, verdict: bool) -> int:
    if args.expect is None:
        return 0
    return 0 if verdict == (args.expect == "true") else 1


def _kw(args) -> dict:
    return {"budget": args.budget} if getattr(args, "budget", None) is not None else {}


def cmd_named(args) -> int:
    if args.list:
        print("\n".join(sorted(CATALOG)))
        return 0
    if not args.name:
        raise UsageError("a graph name is required")
    g = parse_name(args.name)
    sys.stdout.write(encode_edge_list(g) if args.format == "edges" else encode_graph6(g).decode() + "\n")
    return 0


def cmd_check(args) -> int:
    from .pipeline import resolve_predicate
    graphs = args.graph or ["-"]
    preds = [p.strip() for p in args.pred.split(",") if p.strip()]
    fns = [(p, resolve_predicate(p)) for p in preds]
    all_true = True
    for src in graphs:
        g = load_graph(src)
        if len(graphs) > 1:
            print(f"# {src}")
        print(f"n={g.n} m={g.m}")
        for name, fn in fns:
            t0 = time.perf_counter()
            verdict = bool(fn(g, **_kw(args)))
            all_true &= verdict
            print(f"{name}: {_mark(verdict)}" + (f"  ({time.perf_counter() - t0:.2f}s)" if args.timing else ""))
    return _expect(args, all_true)


def _outer(args, g_name: str) -> tuple[int, int, int, int]:
    if args.outer:
        return tuple(_rebase(_ints(args.outer, "--outer", 4), _base(args)))
    if g_name.lower() == "j18":
        return J18_OUTER
    raise UsageError("--outer is required for graphs other than j18")


def cmd_cell(args) -> int:
    from .cells import Cell, check_cell, check_k1_cell, check_suitable, find_cells
    g = load_graph(args.graph)
    if args.action == "find":
        cells = find_cells(g, args.level if args.level != "k2" else "k1k2", **_kw(args))
        for c in cells:
            print(_show(c.outer, _base(args)))
        print(f"# {len(cells)} labelling(s)", file=sys.stderr)
        return _expect(args, bool(cells))
    cell = Cell(g, _outer(args, args.graph))
    if args.level == "suitable":
        v = check_suitable(cell, **_kw(args))
        line, verdict = f"suitable {'✓' if v.suitable else '✗'}", v.suitable
    elif args.level == "k1":
        v = check_k1_cell(cell, **_kw(args))
        line, verdict = f"suitable {'✓' if v.suitable else '✗'} k1 {'✓' if v.k1 else '✗'}", v.k1
    else:
        v = check_cell(cell, **_kw(args))
        line, verdict = v.summary(), v.k1 and v.k2
    print(line)
    for prop in v.failed():
        bad = [c.claim for c in v.properties[prop] if not c.ok]
        print(f"  {prop} fails: {'; '.join(bad[:5])}")
    if args.verbose:
        for prop, checks in v.properties.items():
            for c in checks:
                print(f"  [{prop}] {'ok ' if c.ok else 'BAD'} {c.claim}  {c.witness}")
    return _expect(args, verdict)


def _cell_items(text: str) -> list[str]:
    """Split ``j18@6,9,3,1,j18`` into items: a numeric token continues the current item."""
    items: list[str] = []
    for tok in (t.strip() for t in text.split(",")):
        if not tok:
            continue
        if tok.lstrip("-").isdigit() and items:
            items[-1] += "," + tok
        else:
            items.append(tok)
    return items


def _cell_item(item: str, base: int):
    from .cells import Cell
    name, _, labels = item.partition("@")
    g = load_graph(name)
    if labels:
        return Cell(g, tuple(_rebase(_ints(labels, item, 4), base)))
    if name.lower() == "j18":
        return Cell(g, J18_OUTER)
    raise UsageError(f"cell {item!r} needs outer labels as NAME@a,b,c,d")


def cmd_build(args) -> int:
    if args.kind == "gamma":
        from .cells import build_gamma
        if not args.cells:
            raise UsageError("gamma needs --cells")
        cells = [_cell_item(s.strip(), _base(args)) for s in _cell_items(args.cells)]
        g = build_gamma(cells, args.variant, verify=not args.no_verify, **_kw(args)).graph
    elif args.kind == "glue":
        from .constructions import fragment_from_cubic_vertex, glue
        if not (args.left and args.right):
            raise UsageError("glue needs --left and --right")
        pairing = tuple(_ints(args.pairing, "--pairing", 3))
        lv, rv = _rebase([args.left_vertex, args.right_vertex], _base(args))
        f1 = fragment_from_cubic_vertex(load_graph(args.left), lv)
        f2 = fragment_from_cubic_vertex(load_graph(args.right), rv)
        g = glue(f1, f2, pairing).graph
    else:
        from .constructions import DotSpec, dot_product, find_dot_labels_g, find_dot_labels_h
        if not (args.left and args.right):
            raise UsageError("dot needs --left and --right")
        gl, gr = load_graph(args.left), load_graph(args.right)
        if args.abcd:
            abcd = _rebase(_ints(args.abcd, "--abcd", 4), _base(args))
        else:
            found = find_dot_labels_g(gl, **_kw(args))
            if not found:
                raise PreconditionError("no labels a,b,c,d satisfy (i)-(iii) on the left graph")
            abcd = found[0]
        if args.xy:
            xy = _rebase(_ints(args.xy, "--xy", 2), _base(args))
        else:
            found = find_dot_labels_h(gr, **_kw(args))
            if not found:
                raise PreconditionError("no adjacent x,y satisfy (iv)-(vi) on the right graph")
            xy = found[0]
        print(f"# a,b,c,d={_show(abcd, _base(args))} x,y={_show(xy, _base(args))}", file=sys.stderr)
        g = dot_product(gl, gr, DotSpec(*abcd, *xy)).graph
    print(f"# n={g.n} m={g.m}", file=sys.stderr)
    print(encode_graph6(g).decode())
    return 0


def cmd_extendable(args) -> int:
    from .certificates import Certificate
    from .constructions import find_extendable_5_cycles
    g = load_graph(args.graph)
    found = find_extendable_5_cycles(g, first_only=not args.all, **_kw(args))
    for ext in found:
        print(" ".join(str(v + _base(args)) for v in ext.cycle))
    print(f"# {len(found)} extendable 5-cycle(s){'' if args.all else ' (first only; --all for every one)'}",
          file=sys.stderr)
    if args.certificate and found:
        ext = found[0]
        c = ext.cycle
        ws = []
        for (kind, k), cyc in sorted(ext.witnesses.items()):
            v = c[k]
            ring = [c[(k + j) % 5] for j in (-2, -1, 0, 1, 2)]
            if kind == "i":
                ws.append({"deleted": [v], "cycle": list(cyc), "forbidden": [[ring[0], ring[4]]]})
            else:
                vp = next(w for w in g.neighbors(v) if w not in c)
                ws.append({"deleted": [vp], "cycle": list(cyc), "forbidden": [[ring[4], ring[0]]],
                           "required": [[ring[j], ring[j + 1]] for j in range(4)]})
        cert = Certificate(encode_graph6(g).decode(), f"extendable 5-cycle {list(c)}", ws)
        Path(args.certificate).write_text(cert.to_json() + "\n")
    return _expect(args, bool(found))


def cmd_grinberg(args) -> int:
    from .engine import iter_hamiltonian_cycles
    from .planar import add_edge_in_face, faces, grinberg_sum, grinbergian_obstruction
    emb = load_embedding(args.embedding)
    fs = faces(emb)
    if args.add_edge:
        u, v = _rebase(_ints(args.add_edge, "--add-edge", 2), _base(args))
        face = next((f for f in fs.faces if u in f and v in f), None)
        if face is None:
            raise PreconditionError(f"no face contains both {u + _base(args)} and {v + _base(args)}")
        emb = add_edge_in_face(emb, u, v, face)
        fs = faces(emb)
    sizes = sorted(fs.sizes)
    print(f"n={emb.graph.n} m={emb.graph.m} faces={len(sizes)} sizes={' '.join(map(str, sizes))}")
    obstruction = grinbergian_obstruction(fs)
    print(f"grinbergian: {_mark(obstruction)}")
    cycles = iter_hamiltonian_cycles(emb.graph, **_kw(args))
    sums = sorted({grinberg_sum(fs, c) for c in cycles})
    print(f"hamiltonian cycles: {len(cycles)}" + (f"  sigma values: {sums}" if cycles else ""))
    return _expect(args, obstruction)


def cmd_certify(args) -> int:
    from .certificates import Certificate, certify, replay
    if args.replay:
        text = sys.stdin.read() if args.replay == "-" else Path(args.replay).read_text()
        try:
            cert = Certificate.from_json(text)
        except (ValueError, TypeError) as exc:
            raise ParseError(f"bad certificate: {exc}") from None
        problems = replay(cert)
        for p in problems:
            print(p)
        print(f"replay: {'accepted' if not problems else 'rejected'} ({len(cert.witnesses)} witnesses)")
        return 0 if not problems else 1
    if not args.pred:
        raise UsageError("--pred is required unless --replay is given")
    g = load_graph(args.graph or "-")
    try:
        cert = certify(g, args.pred, **_kw(args))
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 1
    text = cert.to_json() + "\n"
    if args.output:
        Path(args.output).write_text(text)
        print(f"wrote {len(cert.witnesses)} witnesses to {args.output}", file=sys.stderr)
    else:
        sys.stdout.write(text)
    return 0


def cmd_filter(args) -> int:
    from .pipeline import FilterSpec, Summary, default_jobs, run_filter
    jobs = args.jobs if args.jobs is not None else default_jobs()
    spec = FilterSpec(args.pred, args.negate, jobs, args.mode, args.budget)
    src = open(args.input, "rb") if args.input and args.input != "-" else sys.stdin.buffer
    summary = Summary()
    out = sys.stdout
    try:
        for o in run_filter(src, spec):
            summary.add(o)
            if o.status == "error":
                print(f"line {o.lineno}: {o.message}", file=sys.stderr)
                if args.strict:
                    print(summary.line(), file=sys.stderr)
                    return EXIT_PARSE
            elif o.status == "undecided":
                print(f"line {o.lineno}: undecided ({o.message})", file=sys.stderr)
            elif o.status == "match":
                if spec.mode == "graphs":
                    out.write(o.line + "\n")
                elif spec.mode == "certificates":
                    out.write(json.dumps(json.loads(o.certificate), sort_keys=True) + "\n")
    finally:
        if src is not sys.stdin.buffer:
            src.close()
    if spec.mode == "count":
        out.write(f"{summary.matched}\n")
    print(summary.line(), file=sys.stderr)
    if args.strict and summary.undecided:
        return EXIT_UNDECIDED
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="k2ham", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, budget=True, expect=True):
        if budget:
            sp.add_argument("--budget", type=int, help="node-expansion limit per search (default: none)")
        if expect:
            sp.add_argument("--expect", choices=("true", "false"), help="exit 1 unless the verdict matches")
        sp.add_argument("--zero-based", action="store_true", help="vertex labels on the command line start at 0")

    sp = sub.add_parser("filter", help="filter a graph6/sparse6 stream by a predicate")
    sp.add_argument("--pred", required=True, help="hamiltonian, k1, k2, hypo, k2hypo, snark, girth>=K, ...")
    sp.add_argument("--not", dest="negate", action="store_true", help="keep graphs failing the predicate")
    sp.add_argument("--mode", choices=("graphs", "count", "certificates"), default="graphs")
    sp.add_argument("--count", dest="mode", action="store_const", const="count", help="same as --mode count")
    sp.add_argument("--jobs", type=int, help="worker processes (default: $K2HAM_JOBS or 1)")
    sp.add_argument("--strict", action="store_true", help="abort on a malformed line; exit 5 on undecided")
    sp.add_argument("--budget", type=int)
    sp.add_argument("input", nargs="?", help="input file (default: stdin)")
    sp.set_defaults(func=cmd_filter)

    sp = sub.add_parser("check", help="evaluate predicates on graphs")
    sp.add_argument("graph", nargs="*", help="name (gp:11,2), graph6 string, file, or - (default)")
    sp.add_argument("--pred", required=True, help="comma-separated predicate names")
    sp.add_argument("--timing", action="store_true")
    common(sp)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("cell", help="verify or search cell labellings")
    sp.add_argument("action", choices=("verify", "find"))
    sp.add_argument("graph", nargs="?", default="j18")
    sp.add_argument("--outer", help="a,b,c,d")
    sp.add_argument("--level", choices=("suitable", "k1", "k2"), default="k2")
    sp.add_argument("-v", "--verbose", action="store_true", help="list every check with its witness")
    common(sp)
    sp.set_defaults(func=cmd_cell)

    sp = sub.add_parser("build", help="construct a graph and print it as graph6")
    sp.add_argument("kind", choices=("gamma", "glue", "dot"))
    sp.add_argument("--cells", help="comma-separated NAME or NAME@a,b,c,d items (gamma)")
    sp.add_argument("--variant", choices=("k1", "k2"), default="k2")
    sp.add_argument("--no-verify", action="store_true", help="skip the cell-level check (gamma)")
    sp.add_argument("--left")
    sp.add_argument("--right")
    sp.add_argument("--left-vertex", type=int, default=1, help="cubic vertex deleted from the left graph (glue)")
    sp.add_argument("--right-vertex", type=int, default=1)
    sp.add_argument("--pairing", default="0,1,2", help="attachment i of left meets attachment pairing[i] of right, "
                                                       "as positions 0..2 (glue)")
    sp.add_argument("--abcd", help="edges ab, cd of the left graph (dot; searched if omitted)")
    sp.add_argument("--xy", help="adjacent cubic x, y of the right graph (dot; searched if omitted)")
    common(sp, expect=False)
    sp.set_defaults(func=cmd_build)

    sp = sub.add_parser("extendable", help="list extendable 5-cycles")
    sp.add_argument("graph")
    sp.add_argument("--all", action="store_true")
    sp.add_argument("--certificate", help="write the first cycle's witnesses as JSON")
    common(sp)
    sp.set_defaults(func=cmd_extendable)

    sp = sub.add_parser("grinberg", help="faces, Grinberg sums and the mod-3 obstruction")
    sp.add_argument("embedding", help="embedding file, - for stdin, or dodecahedron / j18 / k4")
    sp.add_argument("--add-edge", help="u,v: draw a new edge inside a face containing both")
    common(sp)
    sp.set_defaults(func=cmd_grinberg)

    sp = sub.add_parser("named", help="print a catalog graph")
    sp.add_argument("name", nargs="?")
    sp.add_argument("--format", choices=("graph6", "edges"), default="graph6")
    sp.add_argument("--list", action="store_true")
    sp.set_defaults(func=cmd_named)

    sp = sub.add_parser("certify", help="emit or replay a witness certificate")
    sp.add_argument("graph", nargs="?")
    sp.add_argument("--pred", choices=("hamiltonian", "k1", "k2", "hypo", "k2hypo"))
    sp.add_argument("-o", "--output")
    sp.add_argument("--replay", metavar="FILE")
    sp.add_argument("--budget", type=int)
    sp.set_defaults(func=cmd_certify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"k2ham: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, GraphError) as exc:
        print(f"k2ham: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except PreconditionError as exc:
        print(f"k2ham: precondition: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except Undecided as exc:
        print(f"k2ham: undecided: {exc}", file=sys.stderr)
        return EXIT_UNDECIDED
    except K2HamError as exc:
        print(f"k2ham: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"k2ham: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
