"""Batch front door: read complexes, emit classification / homology /
face-count / sheaf-profile reports, and run the property-suite verifier.

Input documents are JSON objects with either a facet list or a generator
reference::

    {"name": "fano", "n": 7, "facets": [[1,2,3],[1,4,5],...]}
    {"generator": {"family": "cyclic_polytope_boundary", "n": 7, "delta": 4}}

A terse one-line format is accepted for hand entry: ``n=7; 1 2 3 / 1 4 5``.
Batch mode is a stream of documents (a JSON array, JSON lines, or several
terse lines); reports come back in input order.

Exit codes: 0 success, 1 validation error, 2 capacity exceeded, 3 internal
invariant violation (a criterion cross-check failed, i.e. a bug).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__, bgg, fvector, generators, hierarchy
from .complexes import Complex, from_facets, labels_of
from .errors import (CapacityError, InternalCheckError, PreconditionError,
                     ValidationError)
from .homology import FieldSpec, reduced_betti
from .properties import acceptance_corpus, run_all

GENERATOR_FAMILIES = {
    "simplex_skeleton": (generators.simplex_skeleton, ("n", "k")),
    "full_simplex": (generators.full_simplex, ("n",)),
    "void_complex": (generators.void_complex, ("n",)),
    "irrelevant_complex": (generators.irrelevant_complex, ("n",)),
    "cyclic_polytope_boundary": (generators.cyclic_polytope_boundary, ("n", "delta")),
    "fano_plane": (generators.fano_plane, ()),
    "cross_polytope": (generators.cross_polytope, ("m",)),
    "octahedron": (generators.octahedron, ()),
    "cycle_graph": (generators.cycle_graph, ("n",)),
    "path_graph": (generators.path_graph, ("n",)),
    "complete_graph": (generators.complete_graph, ("n",)),
    "random_complex": (generators.random_complex, ("n", "density", "seed")),
    "random_pure_complex": (generators.random_pure_complex, ("n", "d", "count", "seed")),
    "random_forest": (generators.random_forest, ("n", "seed")),
}

HARD_BOUND = 24


def parse_terse(line: str) -> dict:
    """``n=7; 1 2 3 / 1 4 5`` -> document dict."""
    head, _, rest = line.partition(";")
    head = head.strip()
    if not head.startswith("n="):
        raise ValidationError(f"terse input must start with 'n=', got {line!r}")
    try:
        n = int(head[2:])
    except ValueError as exc:
        raise ValidationError(f"bad ground-set size in {head!r}") from exc
    facets = []
    rest = rest.strip()
    if rest:
        for block in rest.split("/"):
            block = block.strip()
            if not block:
                facets.append([])
                continue
            try:
                facets.append([int(tok) for tok in block.split()])
            except ValueError as exc:
                raise ValidationError(f"bad facet {block!r}") from exc
    return {"n": n, "facets": facets}


def read_documents(text: str) -> list[dict]:
    text = text.strip()
    if not text:
        raise ValidationError("empty input")
    if text[0] == "[":
        docs = json.loads(text)
        if not isinstance(docs, list):
            raise ValidationError("top-level JSON array expected")
        return docs
    if text[0] == "{":
        docs = []
        decoder = json.JSONDecoder()
        idx = 0
        while idx < len(text):
            doc, end = decoder.raw_decode(text, idx)
            docs.append(doc)
            idx = end
            while idx < len(text) and text[idx] in " \t\r\n":
                idx += 1
        return docs
    return [parse_terse(line) for line in text.splitlines() if line.strip()]


def document_complex(doc: dict) -> tuple[Complex, dict]:
    """Build the complex of a document; returns (complex, echo-of-input)."""
    if not isinstance(doc, dict):
        raise ValidationError(f"document must be an object, got {type(doc).__name__}")
    has_facets = "facets" in doc
    has_gen = "generator" in doc
    if has_facets == has_gen:
        raise ValidationError("exactly one of 'facets' or 'generator' is required")
    name = doc.get("name")
    if has_facets:
        if "n" not in doc:
            raise ValidationError("field 'n' is required with 'facets'")
        cx = from_facets(doc["n"], [tuple(f) for f in doc["facets"]])
        echo = {"name": name, "n": doc["n"],
                "facets": [sorted(f) for f in doc["facets"]]}
    else:
        spec = dict(doc["generator"])
        family = spec.pop("family", None)
        if family not in GENERATOR_FAMILIES:
            raise ValidationError(
                f"unknown generator family {family!r}; known: "
                f"{sorted(GENERATOR_FAMILIES)}")
        fn, params = GENERATOR_FAMILIES[family]
        unknown = set(spec) - set(params)
        if unknown:
            raise ValidationError(f"unknown parameters {sorted(unknown)} for {family}")
        cx = fn(**spec)
        echo = {"name": name, "generator": {"family": family, **spec}}
    return cx, echo


def build_report(cx: Complex, echo: dict, field: FieldSpec, depth: str,
                 fibers=(), hilbert_positions=()) -> dict:
    inv = cx.invariants()
    betti = reduced_betti(cx, field)
    rep = hierarchy.classify(cx, field)
    fpoly = fvector.f_polynomial(cx)
    doc = {
        "tool": {"name": "cmhier", "version": __version__},
        "input": echo,
        "field_characteristic": field.characteristic,
        "invariants": {"n": inv.n, "d": inv.d, "c": inv.c},
        "facets": [list(labels_of(f)) for f in cx.facets],
        "betti": {str(p): v for p, v in sorted(betti.window(inv.d).items())},
        "f_polynomial": [int(v) for v in fpoly.coeffs],
        "h_vector": list(fvector.h_vector(cx)),
        "classification": rep.to_dict(),
    }
    if depth in ("bgg", "hilbert"):
        doc["cohomology_profile"] = bgg.cohomology_profile(cx, field).to_dict()
        doc["single_sheaf_check"] = bgg.single_sheaf_check(cx, field)
        if rep.gorenstein_star.member:
            doc["gorenstein_ideal_check"] = bgg.gorenstein_ideal_check(cx, field)
        fiber_docs = []
        for labels in fibers:
            profile = bgg.fiber_profile(cx, tuple(labels), field)
            fiber_docs.append({"support": list(profile.support),
                               "dims": {str(p): v for p, v in sorted(profile.dims.items())}})
        if fiber_docs:
            doc["fibers"] = fiber_docs
    if depth == "hilbert":
        tables = {}
        positions = hilbert_positions or range(0, (inv.d or 0) + 1)
        for p in positions:
            table = bgg.hilbert_table(cx, p, field)
            tables[str(p)] = [
                {"support": list(labels_of(R)), "dim": v}
                for R, v in sorted(table.values.items())]
        doc["hilbert"] = tables
    return doc


def render_table(doc: dict) -> str:
    inv = doc["invariants"]
    cls = doc["classification"]
    lines = []
    name = doc["input"].get("name") or "complex"
    lines.append(f"{name}: n={inv['n']} d={inv['d']} c={inv['c']}")
    lines.append(f"  facets: " + " ".join("".join(map(str, f)) if inv['n'] < 10
                                          else str(tuple(f)) for f in doc["facets"]))
    nonzero = " ".join(f"h~{p}={v}" for p, v in doc["betti"].items() if v)
    lines.append("  betti: " + (nonzero if nonzero else "all zero"))
    lines.append(f"  f-polynomial: {doc['f_polynomial']}   h-vector: {doc['h_vector']}")
    if not cls["applicable"]:
        lines.append("  classification: not applicable (void complex)")
        return "\n".join(lines)
    flags = []
    for key, label in (("cohen_macaulay", "CM"), ("cleray", "CLeray"),
                       ("bi_cm", "bi-CM"), ("gorenstein_star", "Gorenstein*")):
        flags.append(f"{label}={'yes' if cls[key]['member'] else 'no'}")
    lines.append("  classes: " + " ".join(flags))
    lines.append(f"  levels: cm={cls['cm_level']} cleray={cls['cleray_level']} "
                 f"cm+ext={cls['cm_dagger_level']} cleray+ext={cls['cleray_dagger_level']}")
    lines.append(f"  circ levels: cm={cls['cm_circ_levels']} "
                 f"cleray={cls['cleray_circ_levels']}  steiner={cls['steiner']}")
    for key in ("cohen_macaulay", "cleray", "gorenstein_star"):
        wit = cls[key].get("witness")
        if wit:
            lines.append(f"  witness[{key}]: {wit['kind']} {tuple(wit['labels'])} "
                         f"degree {wit['degree']}")
    if "cohomology_profile" in doc:
        for p, info in doc["cohomology_profile"]["positions"].items():
            if info["module_nonzero"]:
                sup = ", ".join(str(tuple(s["labels"])) + f"x{s['multiplicity']}"
                                for s in info["assoc_supports"])
                lines.append(f"  position {p}: rank {info['generic_rank']}, "
                             f"sheaf={'yes' if info['sheaf_nonzero'] else 'no'}, "
                             f"supports {sup}")
    return "\n".join(lines)


def _field(args) -> FieldSpec:
    return FieldSpec(args.field)


def _emit(reports, args, out):
    if args.format == "table":
        for doc in reports:
            out.write(render_table(doc) + "\n")
    elif len(reports) == 1:
        out.write(json.dumps(reports[0], indent=2) + "\n")
    else:
        for doc in reports:
            out.write(json.dumps(doc) + "\n")


def _read_input(args) -> list[dict]:
    if args.input == "-":
        return read_documents(sys.stdin.read())
    with open(args.input, "r", encoding="utf-8") as fh:
        return read_documents(fh.read())


def cmd_classify(args, depth="classify") -> int:
    field = _field(args)
    docs = _read_input(args)
    reports = []
    for doc in docs:
        cx, echo = document_complex(doc)
        if cx.n > args.bound:
            raise CapacityError(
                f"ground set of size {cx.n} exceeds the enumeration bound "
                f"{args.bound}")
        fibers = [tuple(int(v) for v in spec.split(",")) for spec in args.fiber] \
            if depth != "classify" else ()
        reports.append(build_report(cx, echo, field, depth, fibers,
                                    tuple(args.hilbert) if depth == "hilbert" else ()))
    _emit(reports, args, sys.stdout)
    return 0


def cmd_bgg(args) -> int:
    return cmd_classify(args, depth="hilbert" if args.hilbert else "bgg")


def cmd_verify(args) -> int:
    corpus = acceptance_corpus(
        seed=args.seed,
        random_counts=tuple((n, args.samples) for n in args.random_n)) \
        if args.nmax >= 5 else [
            cx for n in range(1, args.nmax + 1)
            for cx in generators.exhaustive_complexes(n)]
    checks, violations = run_all(corpus, _field(args), seed=args.seed,
                                 log=lambda line: print(line), deep=args.deep)
    print(f"{checks} suites, {len(violations)} violations")
    for v in violations[:20]:
        print("  " + v)
    return 0 if not violations else 3


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="cmhier",
        description="exact classification of simplicial complexes")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("input", nargs="?", default="-",
                       help="input file (JSON, JSON lines, or terse); '-' for stdin")
        p.add_argument("--field", type=int, default=0,
                       help="coefficient field characteristic (0 or a prime)")
        p.add_argument("--format", choices=("json", "table"), default="json")
        p.add_argument("--bound", type=int, default=16,
                       help="enumeration bound on the ground-set size")

    p_classify = sub.add_parser("classify", help="full classification report")
    common(p_classify)
    p_classify.set_defaults(fn=cmd_classify, fiber=[], hilbert=[])

    p_bgg = sub.add_parser("bgg", help="classification plus sheaf-shadow profile")
    common(p_bgg)
    p_bgg.add_argument("--fiber", action="append", default=[],
                       metavar="LABELS", help="support for a fiber slice, e.g. 1,2")
    p_bgg.add_argument("--hilbert", action="append", default=[], type=int,
                       metavar="P", help="emit the Hilbert table at position P")
    p_bgg.set_defaults(fn=cmd_bgg)

    p_verify = sub.add_parser("verify", help="run the property suites")
    p_verify.add_argument("--field", type=int, default=0)
    p_verify.add_argument("--nmax", type=int, default=5,
                          help="exhaustive corpus bound")
    p_verify.add_argument("--random-n", type=int, nargs="*", default=(6, 7))
    p_verify.add_argument("--samples", type=int, default=120,
                          help="random complexes per extra size")
    p_verify.add_argument("--seed", type=int, default=2024)
    p_verify.add_argument("--deep", action="store_true",
                          help="run the heavier exhaustive variants")
    p_verify.set_defaults(fn=cmd_verify)

    args = parser.parse_args(argv)
    if getattr(args, "bound", 16) > HARD_BOUND:
        print(f"error: enumeration bound above {HARD_BOUND} is refused", file=sys.stderr)
        return 1
    try:
        return args.fn(args)
    except (ValidationError, PreconditionError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except CapacityError as exc:
        print(f"capacity: {exc}", file=sys.stderr)
        return 2
    except InternalCheckError as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
