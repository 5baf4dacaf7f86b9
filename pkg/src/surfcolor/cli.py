"""Command-line interface.

Exit status: 0 on success, 1 when the computed answer is negative (no
coloring, invalid coloring, no non-contractible cycle), 2 on usage,
input or precondition errors, 3 on internal invariant failures.
"""

from __future__ import annotations

import argparse
import logging
import re
import sys
from fractions import Fraction
from pathlib import Path

from . import constructions, graphs
from . import io as fmt
from .coloring import (
    FAMILIES,
    DefectVector,
    SearchTimeout,
    Surd,
    color_000_9g4,
    color_22_9g4,
    defect_bound,
    exact_threshold,
    pin_conflict,
    residual,
    solve_exact,
    verify_coloring,
)
from .discharging import SCHEMES, audit
from .embedding import EmbeddedGraph, euler_characteristic, euler_genus, is_orientable, trace_faces
from .errors import FormatError, InvariantError, PreconditionError
from .planarize import planarizing_subgraph, planarizing_subgraph_2pt
from .topology import classify_cycle, shortest_noncontractible_cycle

NEGATIVE = 1
FAILURE = 2
INTERNAL = 3


class _Negative(Exception):
    pass


def _load_graph(path: str):
    try:
        text = fmt.read_text(path)
    except OSError as exc:
        raise OSError(f"cannot read {path}: {exc.strerror or exc}") from exc
    try:
        return fmt.parse_graph(text)
    except FormatError as exc:
        raise FormatError(f"{path}: {exc}") from exc


def _load_embedding(path: str) -> EmbeddedGraph:
    G = _load_graph(path)
    if not isinstance(G, EmbeddedGraph):
        raise PreconditionError(f"{path} is an edge list; this command needs an embedding")
    return G


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _parse_pins(items) -> dict[int, int | set[int]]:
    pins = {}
    for item in items or []:
        m = re.fullmatch(r"(\d+)=(\d+(?:\|\d+)*)", item)
        if not m:
            raise PreconditionError(f"bad pin {item!r}; use v=c or v=c1|c2")
        colors = [int(c) for c in m.group(2).split("|")]
        pins[int(m.group(1))] = colors[0] if len(colors) == 1 else set(colors)
    return pins


def _parse_K(text: str):
    m = re.fullmatch(r"\s*(-?\d+)\s*\+\s*sqrt\(\s*(\d+)\s*\)\s*", text)
    if m:
        return Surd(int(m.group(1)), int(m.group(2)))
    try:
        return Fraction(text)
    except ValueError:
        raise PreconditionError(f"K must be an integer, a fraction p/q, or a+sqrt(b); got {text!r}") from None


# -- commands -----------------------------------------------------------------


def cmd_genus(args) -> None:
    G = _load_embedding(args.graph)
    print(f"eg {euler_genus(G)}")


def cmd_faces(args) -> None:
    G = _load_embedding(args.graph)
    faces = trace_faces(G)
    print(f"faces {len(faces)}")
    print(f"chi {euler_characteristic(G)}")
    print(f"orientable {'yes' if is_orientable(G) else 'no'}")
    for i, f in enumerate(faces):
        print(f"f {i} {f.degree}: {' '.join(map(str, f.vertices))}")


def cmd_ncc(args) -> None:
    G = _load_embedding(args.graph)
    C = shortest_noncontractible_cycle(G)
    if C is None:
        print("NONE eg 0")
        raise _Negative
    print(f"cycle {' '.join(map(str, C.vertices))}")
    print(f"length {len(C)}")
    print(f"class {classify_cycle(G, C).value}")


def cmd_classify(args) -> None:
    G = _load_embedding(args.graph)
    try:
        cycle = [int(x) for x in args.cycle.split(",")]
    except ValueError:
        raise PreconditionError(f"bad cycle {args.cycle!r}; use comma-separated vertex ids") from None
    print(f"class {classify_cycle(G, cycle).value}")


def cmd_planarize(args) -> None:
    G = _load_embedding(args.graph)
    if args.to is None:
        res = planarizing_subgraph(G, args.root)
    else:
        res = planarizing_subgraph_2pt(G, args.root, args.to)
    quotient, relabel = fmt.relabel_dense(res.quotient)
    print(f"eg {res.genus}")
    print(f"h {' '.join(map(str, sorted(res.h_vertices)))}")
    print(f"bound {res.bound}")
    print(f"max_neighbors {res.max_neighbors_in_h}")
    print(f"hub {relabel[res.quotient_vertex]}")
    for old in sorted(relabel):
        if old != res.quotient_vertex:
            print(f"qmap {relabel[old]} {old}")
    sys.stdout.write(fmt.format_edge_list(quotient))


def cmd_color(args) -> None:
    G = _load_graph(args.graph)
    if args.pipeline:
        if not isinstance(G, EmbeddedGraph):
            raise PreconditionError("--pipeline needs an embedding")
        res = (color_000_9g4 if args.pipeline == "000" else color_22_9g4)(G)
        _emit(args, f"# eg {res.genus} |H| {len(res.h_vertices)}\n" + fmt.format_coloring(res.defects, res.coloring))
        return
    if not args.defects:
        raise PreconditionError("give --defects or --pipeline")
    dv = DefectVector.parse(args.defects)
    pins = _parse_pins(args.pin)
    reason = pin_conflict(G, dv, pins)
    if reason is not None:
        print("UNSAT")
        print(f"reason pins: {reason}")
        raise _Negative
    try:
        coloring = solve_exact(G, dv, pins, jobs=args.jobs, deterministic=args.jobs == 1, timeout=args.timeout)
    except SearchTimeout:
        print("UNKNOWN")
        print(f"reason timeout after {args.timeout}s")
        raise _Negative from None
    if coloring is None:
        print("UNSAT")
        print("reason exhaustive search found no coloring")
        raise _Negative
    _emit(args, fmt.format_coloring(dv, coloring))


def cmd_verify(args) -> None:
    G = _load_graph(args.graph)
    try:
        dv, coloring = fmt.parse_coloring(fmt.read_text(args.coloring))
    except FormatError as exc:
        raise FormatError(f"{args.coloring}: {exc}") from exc
    if args.defects:
        dv = DefectVector.parse(args.defects)
    bad = verify_coloring(G, dv, coloring)
    if bad:
        print(f"INVALID {len(bad)}")
        for b in bad:
            print(f"violation {b.vertex} color {b.color} same {b.same_colored} allowed {b.allowed}")
        raise _Negative
    print(f"valid {dv}")


def cmd_threshold(args) -> None:
    value = exact_threshold(args.family, args.genus)
    print(f"family {args.family}")
    print(f"genus {args.genus}")
    if isinstance(value, Surd):
        print(f"K {float(value)!r}")
        print(f"exact {value}")
    else:
        print(f"K {value}")
    print(f"defect {defect_bound(args.family, args.genus)}")
    if args.family in ("2kk", "00kk", "girth7"):
        print(f"residual {residual(args.family, args.genus)}")


def cmd_generate(args) -> None:
    fam, k = args.family, args.k
    if args.count_only:
        if fam == "sprout":
            raise PreconditionError("--count-only needs a named family")
        n, m = constructions.family_counts(fam, k)
        print(f"family {fam}")
        print(f"k {k}")
        print(f"vertices {n}")
        print(f"edges {m}")
        return
    if fam == "sprout":
        base = graphs.complete_graph(4) if args.base is None else _load_graph(args.base)
        if isinstance(base, EmbeddedGraph):
            base = base.adj
        gen = constructions.sprout(base, k)
    elif fam == "descartes6":
        gen = constructions.descartes_girth6(k, sample=args.sample, seed=args.seed, allow_full=args.allow_full)
    else:
        if args.sample is not None:
            raise PreconditionError("--sample only applies to descartes6")
        gen = constructions.generate(fam, k)
    if args.check:
        gen = constructions.check_claim(gen, timeout=args.timeout or 10.0)
    adj, _ = fmt.relabel_dense(gen.graph)
    header = f"# family {fam} k {k} seed {args.seed}\n"
    body = header + fmt.format_edge_list(adj)
    meta = {**gen.meta, "seed": args.seed}
    if args.out:
        Path(args.out).write_text(body)
        Path(args.out + ".meta").write_text(fmt.format_meta(meta))
        print(f"vertices {gen.num_vertices}")
        print(f"edges {gen.num_edges}")
        print(f"wrote {args.out} {args.out}.meta")
    else:
        sys.stdout.write(body)


def cmd_audit(args) -> None:
    G = _load_embedding(args.graph)
    report = audit(G, args.scheme, _parse_K(args.K))
    sys.stdout.write("\n".join(report.lines()) + "\n")


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="surfcolor", description="Defective coloring of graphs embedded on surfaces.")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_cmd(name, func, help, embedding=True):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("graph", help="embedding file" if embedding else "embedding or edge-list file")
        sp.set_defaults(func=func)
        return sp

    graph_cmd("genus", cmd_genus, "Euler genus of an embedding")
    graph_cmd("faces", cmd_faces, "face boundary walks")
    graph_cmd("ncc", cmd_ncc, "a shortest non-contractible cycle")
    sp = graph_cmd("classify", cmd_classify, "classify a cycle")
    sp.add_argument("--cycle", required=True, help="comma-separated vertices in cyclic order")
    sp = graph_cmd("planarize", cmd_planarize, "connected subgraph whose contraction is planar")
    sp.add_argument("--root", type=int, required=True)
    sp.add_argument("--to", type=int, help="second terminal (two-terminal variant)")

    sp = graph_cmd("color", cmd_color, "find a defective coloring", embedding=False)
    sp.add_argument("--defects", help="comma-separated defects, e.g. 0,0,0,5")
    sp.add_argument("--pin", action="append", metavar="V=C", help="fix vertex V to color C (or C1|C2)")
    sp.add_argument("--pipeline", choices=("000", "22"), help="use the (0,0,0,9g-4) or (2,2,9g-4) construction")
    sp.add_argument("--jobs", type=int, default=1, help="worker processes (witness may differ when > 1)")
    sp.add_argument("--timeout", type=float, help="give up after this many seconds")
    sp.add_argument("--out", help="write the coloring here instead of stdout")

    sp = graph_cmd("verify", cmd_verify, "check a coloring file", embedding=False)
    sp.add_argument("coloring")
    sp.add_argument("--defects", help="override the defects in the coloring header")

    sp = sub.add_parser("threshold", help="degree threshold as a function of the genus")
    sp.add_argument("--family", choices=FAMILIES, required=True)
    sp.add_argument("--genus", type=int, required=True)
    sp.set_defaults(func=cmd_threshold)

    sp = sub.add_parser("generate", help="build a hard-to-color family member")
    sp.add_argument("--family", choices=("sprout",) + tuple(constructions.GENERATORS), required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--base", help="edge list of H for --family sprout (default K4)")
    sp.add_argument("--sample", type=int, help="descartes6: number of seven-vertex sets to build")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--allow-full", action="store_true", help="descartes6: build every seven-vertex set")
    sp.add_argument("--count-only", action="store_true", help="print closed-form counts only")
    sp.add_argument("--check", action="store_true", help="try to verify the non-colorability claim")
    sp.add_argument("--timeout", type=float, help="time budget for --check")
    sp.add_argument("--out", help="edge-list path; metadata goes to <out>.meta")
    sp.set_defaults(func=cmd_generate)

    sp = graph_cmd("audit", cmd_audit, "run a discharging scheme")
    sp.add_argument("--scheme", choices=tuple(SCHEMES), required=True)
    sp.add_argument("--K", required=True, help="degree parameter: integer, p/q or a+sqrt(b)")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        args.func(args)
    except _Negative:
        return NEGATIVE
    except FormatError as exc:
        print(f"format error: {exc}", file=sys.stderr)
        return FAILURE
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return FAILURE
    except PreconditionError as exc:
        print(f"precondition error: {exc}", file=sys.stderr)
        return FAILURE
    except InvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return INTERNAL
    return 0


if __name__ == "__main__":
    sys.exit(main())
