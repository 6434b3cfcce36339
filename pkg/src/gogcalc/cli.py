"""Command-line front end.

Exit codes: 0 on success (or when every verification passes), 1 when a
verification reports failures, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import random
import re
import sys
import time

from . import gog, lab, perm, verify
from .freegroup import (
    FreeGroupError,
    are_conjugate_free,
    centralizes,
    conjugates_into,
    format_freeword,
    parse_freeword,
)
from .gog import GraphError, WordError
from .ordinal import OrdinalError, format_ordinal, parse_ordinal
from .wordsyntax import (
    GraphFileError,
    format_edgeword,
    format_word,
    graph_to_dict,
    load_graph,
    parse_word,
)

SCHEMA_VERSION = verify.SCHEMA_VERSION

INPUT_ERRORS = (OrdinalError, perm.PermError, FreeGroupError, GraphError, WordError,
                GraphFileError, lab.LabError)


class CommandFailed(Exception):
    """Raised by a handler to exit with status 1 after printing its report."""


def resolve_graph(name: str | None, n: int | None = None) -> gog.GraphOfGroups:
    """``--graph`` takes a JSON file path or a built-in name ``gammaN``."""
    if name is None:
        return lab.build_gamma(n if n is not None else 6).graph
    m = re.fullmatch(r"gamma(\d+)", name)
    if m:
        return lab.build_gamma(int(m.group(1))).graph
    try:
        return load_graph(name)
    except OSError as exc:
        raise GraphFileError("", f"cannot read graph file {name!r}: {exc.strerror}") from None


def read_word(g: gog.GraphOfGroups, arg: str) -> gog.KWord:
    """Parse a word given inline or, as ``@PATH``, read from a file."""
    if arg.startswith("@"):
        try:
            with open(arg[1:]) as fh:
                arg = fh.read().strip()
        except OSError as exc:
            raise GraphFileError("", f"cannot read word file {arg[1:]!r}: {exc.strerror}") from None
    return parse_word(g, arg)


def _gens(text: str) -> set:
    return {parse_ordinal(t) for t in text.split(",") if t.strip()}


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps({"schema_version": SCHEMA_VERSION, **payload}, indent=2))
    else:
        print(text)


def _emit_report(args, rep: lab.Report) -> None:
    if args.json:
        print(json.dumps({"schema_version": SCHEMA_VERSION, **rep.to_dict()}, indent=2))
    else:
        status = "PASS" if rep.ok else "FAIL"
        print(f"{status} {rep.check}: {rep.cases} cases, {len(rep.failures)} failures ({rep.elapsed:.2f}s)")
        for f in rep.failures[:20]:
            print(f"  {f}")
    if not rep.ok:
        raise CommandFailed


# -- word operations ---------------------------------------------------------------

def cmd_reduce(args):
    g = resolve_graph(args.graph)
    w = gog.to_irreducible(g, read_word(g, args.word))
    _emit(args, {"word": format_word(g, w), "length": w.length}, format_word(g, w))


def cmd_normalize(args):
    g = resolve_graph(args.graph)
    w = gog.normalize(g, read_word(g, args.word))
    _emit(args, {"word": format_word(g, w), "length": w.length}, format_word(g, w))


def cmd_equal(args):
    g = resolve_graph(args.graph)
    eq = gog.words_equal(g, read_word(g, args.word1), read_word(g, args.word2))
    _emit(args, {"equal": eq}, "true" if eq else "false")


def cmd_retract(args):
    g = resolve_graph(args.graph)
    r = gog.retract(g, read_word(g, args.word))
    _emit(args, {"edge_word": format_edgeword(g, r), "edges": list(r.edges)}, format_edgeword(g, r))


def cmd_in_zy(args):
    g = resolve_graph(args.graph)
    r = gog.in_edge_subgroupoid(g, read_word(g, args.word))
    if r is None:
        _emit(args, {"edge_word": None}, "none")
    else:
        _emit(args, {"edge_word": format_edgeword(g, r)}, format_edgeword(g, r))


def cmd_passes_through(args):
    g = resolve_graph(args.graph)
    r = gog.in_edge_subgroupoid(g, read_word(g, args.word))
    if r is None:
        raise WordError("word is not in the edge subgroupoid")
    verts = sorted(gog.passes_through(g, r))
    _emit(args, {"vertices": [format_ordinal(v) for v in verts]}, " ".join(map(format_ordinal, verts)))


# -- free groups --------------------------------------------------------------------

def cmd_free_reduce(args):
    w = parse_freeword(args.word)
    _emit(args, {"word": format_freeword(w)}, format_freeword(w))


def cmd_free_centralizes(args):
    ok = centralizes(parse_freeword(args.b), _gens(args.gens))
    _emit(args, {"centralizes": ok}, str(ok).lower())


def cmd_free_conjugates_into(args):
    ok = conjugates_into(parse_freeword(args.b), parse_freeword(args.a), _gens(args.gens))
    _emit(args, {"conjugates_into": ok}, str(ok).lower())


def cmd_free_conjugate(args):
    ok = are_conjugate_free(parse_freeword(args.u), parse_freeword(args.v))
    _emit(args, {"conjugate": ok}, str(ok).lower())


# -- permutations ------------------------------------------------------------------

def _perm_out(args, p: perm.FinPerm | None, key: str = "perm"):
    if p is None:
        _emit(args, {key: None}, "none")
    else:
        _emit(args, {key: perm.format_perm(p)}, perm.format_perm(p))


def cmd_perm_shift(args):
    _perm_out(args, perm.shift(perm.parse_perm(args.perm)))


def cmd_perm_tau(args):
    tau = perm.TauMap(parse_ordinal(args.beta))
    x = parse_ordinal(args.ordinal)
    y = perm.tau_inverse_apply(tau, x) if args.inverse else perm.tau_apply(tau, x)
    _emit(args, {"value": format_ordinal(y)}, format_ordinal(y))


def cmd_perm_conj_tau(args):
    _perm_out(args, perm.conjugate_by_tau(perm.parse_perm(args.perm), parse_ordinal(args.beta)))


def cmd_perm_in_image(args):
    _perm_out(args, perm.in_shift_image(perm.parse_perm(args.perm)), key="preimage")


def cmd_perm_hom_check(args):
    ok = perm.verify_hom_on_pair(perm.parse_perm(args.sigma), perm.parse_perm(args.rho))
    _emit(args, {"homomorphic": ok}, str(ok).lower())
    if not ok:
        raise CommandFailed


# -- lab ------------------------------------------------------------------------------

def _lab_graph(args):
    return resolve_graph(args.graph, args.n)


def _family(args, g):
    if args.family == "canonical":
        return lab.canonical_family(g)
    if args.family == "direct":
        return lab.direct_family(g)
    rng = random.Random(args.seed) if args.family == "tree" else None
    return lab.tree_family(g, rng, max_jump=args.max_jump if rng else 1)


def cmd_lab_build(args):
    g = lab.build_gamma(args.n).graph
    problems = gog.validate_graph(g)
    if args.json:
        print(json.dumps({"schema_version": SCHEMA_VERSION, "graph": graph_to_dict(g), "violations": problems}, indent=2))
    else:
        print(json.dumps(graph_to_dict(g), indent=2))


def cmd_lab_cocone(args):
    _emit_report(args, lab.cocone_check(_lab_graph(args)))


def cmd_lab_horizontal(args):
    g = _lab_graph(args)
    ok = lab.conjugates_inclusion_check(g, read_word(g, args.word), parse_ordinal(args.gamma))
    _emit(args, {"conjugates_inclusion": ok}, str(ok).lower())


def cmd_lab_search(args):
    g = _lab_graph(args)
    t0 = time.perf_counter()
    hits = lab.search_conjugators(g, parse_ordinal(args.gamma), parse_ordinal(args.beta),
                                  parse_ordinal(args.alpha), args.max_edges, args.max_vertex_len)
    words = [format_word(g, w) for w in hits]
    rep = lab.Report("search", cases=len(hits), elapsed=time.perf_counter() - t0, details={"hits": words})
    if args.json:
        print(json.dumps({"schema_version": SCHEMA_VERSION, **rep.to_dict()}, indent=2))
    else:
        print(f"{len(hits)} conjugators ({rep.elapsed:.2f}s)")
        for w in words:
            print(f"  {w}")


def cmd_lab_noys(args):
    g = _lab_graph(args)
    v = lab.noys_check(g, read_word(g, args.z), read_word(g, args.u), read_word(g, args.v))
    payload = {"in_vertex_groups": v.in_vertex_groups, "in_edge_subgroupoid": v.in_edge_subgroupoid,
               "is_identity": v.is_identity, "consistent": v.consistent}
    _emit(args, payload, " ".join(f"{k}={str(x).lower()}" for k, x in payload.items()))
    if not v.consistent:
        raise CommandFailed


def cmd_lab_crossing(args):
    g = _lab_graph(args)
    r = gog.in_edge_subgroupoid(g, read_word(g, args.word))
    if r is None:
        raise WordError("word is not in the edge subgroupoid")
    name = lab.crossing_letter(g, r, parse_ordinal(args.delta))
    e = g.edges[name]
    text = f"y[{format_ordinal(e.source)}->{format_ordinal(e.target)}]"
    _emit(args, {"letter": text}, text)


def cmd_lab_coherence(args):
    g = _lab_graph(args)
    fam = _family(args, g)
    rep = lab.coherence_check(g, fam)
    flags = lab.family_min_vertex_report(g, fam)
    rep.details = {"flagged": sum(1 for _, low in flags.values() if low), "pairs": len(flags)}
    _emit_report(args, rep)


def cmd_lab_audit(args):
    g = _lab_graph(args)
    fam = _family(args, g)
    t0 = time.perf_counter()
    chain = lab.exceeding_chain(g, fam, args.m)
    ok = lab.chain_letter_audit(g, fam, chain)
    rep = lab.Report("chain-audit", cases=1, elapsed=time.perf_counter() - t0,
                     details={"chain": [format_ordinal(d) for d in chain],
                              "length": fam[(chain[0], chain[-1])].length})
    if not ok:
        rep.failures.append({"chain": rep.details["chain"]})
    _emit_report(args, rep)


def cmd_verify_all(args):
    result = verify.verify_all(args.n, args.seed)
    if args.json:
        print(json.dumps(result, indent=2))
    else:
        for r in result["reports"]:
            status = "PASS" if r["ok"] else "FAIL"
            print(f"{status} {r['check']}: {r['cases']} cases, {len(r['failures'])} failures ({r['elapsed']:.2f}s)")
        print(f"{'all passed' if result['ok'] else 'FAILURES'} in {result['elapsed']:.1f}s")
    if not result["ok"]:
        raise CommandFailed


# -- parser -------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON reports")
    graph = argparse.ArgumentParser(add_help=False)
    graph.add_argument("--graph", metavar="PATH", help="graph JSON file or built-in name gammaN (default gamma6)")
    labopts = argparse.ArgumentParser(add_help=False)
    labopts.add_argument("--graph", metavar="PATH", help="graph JSON file or gammaN; overrides --n")
    labopts.add_argument("--n", type=int, default=6, help="truncation parameter N (default 6)")

    p = argparse.ArgumentParser(prog="gogcalc", description=__doc__.splitlines()[0], parents=[common])
    sub = p.add_subparsers(dest="command", required=True)

    def word_cmd(name, func, *positionals, help=None):
        sp = sub.add_parser(name, parents=[common, graph], help=help)
        for pos in positionals:
            sp.add_argument(pos)
        sp.set_defaults(func=func)

    word_cmd("reduce", cmd_reduce, "word", help="reduce to an irreducible word")
    word_cmd("normalize", cmd_normalize, "word", help="canonical normal form")
    word_cmd("equal", cmd_equal, "word1", "word2", help="decide equality of realizations")
    word_cmd("retract", cmd_retract, "word", help="retract onto the edge subgroupoid")
    word_cmd("in-zy", cmd_in_zy, "word", help="edge word equal to WORD, if any")
    word_cmd("passes-through", cmd_passes_through, "word", help="vertices an edge word passes through")

    free = sub.add_parser("free", help="free group words").add_subparsers(dest="free_command", required=True)
    sp = free.add_parser("reduce", parents=[common]); sp.add_argument("word"); sp.set_defaults(func=cmd_free_reduce)
    sp = free.add_parser("centralizes", parents=[common]); sp.add_argument("b")
    sp.add_argument("--gens", default="0,1"); sp.set_defaults(func=cmd_free_centralizes)
    sp = free.add_parser("conjugates-into", parents=[common]); sp.add_argument("b"); sp.add_argument("a")
    sp.add_argument("--gens", default="0,1"); sp.set_defaults(func=cmd_free_conjugates_into)
    sp = free.add_parser("conjugate", parents=[common]); sp.add_argument("u"); sp.add_argument("v")
    sp.set_defaults(func=cmd_free_conjugate)

    pm = sub.add_parser("perm", help="permutations of ordinals").add_subparsers(dest="perm_command", required=True)
    sp = pm.add_parser("shift", parents=[common]); sp.add_argument("perm"); sp.set_defaults(func=cmd_perm_shift)
    sp = pm.add_parser("tau", parents=[common]); sp.add_argument("ordinal"); sp.add_argument("--beta", required=True)
    sp.add_argument("--inverse", action="store_true"); sp.set_defaults(func=cmd_perm_tau)
    sp = pm.add_parser("conj-tau", parents=[common]); sp.add_argument("perm"); sp.add_argument("--beta", required=True)
    sp.set_defaults(func=cmd_perm_conj_tau)
    sp = pm.add_parser("in-image", parents=[common]); sp.add_argument("perm"); sp.set_defaults(func=cmd_perm_in_image)
    sp = pm.add_parser("hom-check", parents=[common]); sp.add_argument("sigma"); sp.add_argument("rho")
    sp.set_defaults(func=cmd_perm_hom_check)

    lb = sub.add_parser("lab", help="truncated counterexample checks").add_subparsers(dest="lab_command", required=True)
    sp = lb.add_parser("build", parents=[common]); sp.add_argument("--n", type=int, default=6)
    sp.set_defaults(func=cmd_lab_build)
    sp = lb.add_parser("cocone", parents=[common, labopts]); sp.set_defaults(func=cmd_lab_cocone)
    sp = lb.add_parser("horizontal", parents=[common, labopts]); sp.add_argument("word")
    sp.add_argument("--gamma", required=True); sp.set_defaults(func=cmd_lab_horizontal)
    sp = lb.add_parser("search", parents=[common, labopts])
    for flag, default in (("--gamma", "3"), ("--beta", "3"), ("--alpha", "4")):
        sp.add_argument(flag, default=default)
    sp.add_argument("--max-edges", type=int, default=2)
    sp.add_argument("--max-vertex-len", type=int, default=2)
    sp.set_defaults(func=cmd_lab_search)
    sp = lb.add_parser("noys", parents=[common, labopts])
    for name in ("z", "u", "v"):
        sp.add_argument(name)
    sp.set_defaults(func=cmd_lab_noys)
    sp = lb.add_parser("crossing", parents=[common, labopts]); sp.add_argument("word")
    sp.add_argument("--delta", required=True); sp.set_defaults(func=cmd_lab_crossing)
    for name, func in (("coherence", cmd_lab_coherence), ("audit", cmd_lab_audit)):
        sp = lb.add_parser(name, parents=[common, labopts])
        sp.add_argument("--family", choices=("canonical", "direct", "consecutive", "tree"), default="canonical")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--max-jump", type=int, default=2)
        if name == "audit":
            sp.add_argument("--m", type=int, default=5)
        sp.set_defaults(func=func)

    sp = sub.add_parser("verify-all", parents=[common], help="run every verification sweep")
    sp.add_argument("--n", type=int, default=6)
    sp.add_argument("--seed", type=int, default=42)
    sp.set_defaults(func=cmd_verify_all)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args)
    except CommandFailed:
        return 1
    except INPUT_ERRORS as exc:
        print(f"gogcalc: error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
