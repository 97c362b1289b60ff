"""Command-line front end: ``coxlat <subcommand> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import export
from .errors import CoxlatError, VerificationError

SUITES = ("f4", "h3", "h4", "misc")


def _write(path: str | None, text: str) -> None:
    if path is None:
        return
    if path == "-":
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        Path(path).write_text(text, encoding="utf-8")


def _split(text: str | None) -> list[str]:
    return [t.strip() for t in text.split(",") if t.strip()] if text else []


def _figure(args, L, title, classes=None):
    if getattr(args, "figure", None):
        from .plotting import hasse_figure
        hasse_figure(L, args.figure, title=title, classes=classes)


def _weak(label: str):
    from .weak import weak_order
    return weak_order(label)


def _generator_indices(L, text: str) -> list[int]:
    return [L.diagram.index(g) for g in _split(text)]


# ---------------------------------------------------------------- commands

def cmd_enumerate(args) -> int:
    L = _weak(args.type)
    print(L.n)
    if args.stats:
        print(f"positive roots: {L.model.n_pos}")
        print(f"join-irreducibles: {len(L.join_irreducibles())}")
        print(f"polygons: {len(L.polygons())}")
        print(f"degrees: {' '.join(map(str, L.diagram.degrees()))}")
    _write(args.json, export.dumps(export.lattice_to_dict(L, polygons=args.polygons)))
    _write(args.dot, export.to_dot(L, name=L.label))
    _figure(args, L, f"weak order {L.label}")
    return 0


def _congruence(args):
    from .congruence import generated_by
    L = _weak(args.type)
    gens = [L.index_of_reduced(w) for w in _split(args.gens)]
    return L, generated_by(L, gens)


def _check_iso(L, theta, target: str) -> bool:
    from .homs import hom_from_congruence
    T = _weak(target)
    ok = hom_from_congruence(L, theta, T) is not None
    print(f"quotient {'is' if ok else 'is NOT'} isomorphic to {T.label} (atoms matched)")
    return ok


def cmd_congruence(args) -> int:
    from .congruence import quotient
    L, theta = _congruence(args)
    print(f"classes: {theta.n_classes}")
    print("contracted join-irreducibles: " + " ".join(L.names[j] for j in sorted(theta.contracted_ji())))
    _write(args.json, export.dumps(export.congruence_to_dict(theta)))
    if args.quotient:
        Q = quotient(L, theta).lattice
        print(f"quotient: {Q.n} elements, {Q.n_edges()} covers")
        _write(args.dot, export.to_dot(Q, name=f"{L.label} quotient"))
    else:
        _write(args.dot, export.to_dot(L, name=L.label, classes=theta.class_of))
    _figure(args, L, f"{L.label} mod {args.gens}", classes=theta.class_of)
    if args.check_iso and not _check_iso(L, theta, args.check_iso):
        return 1
    return 0


def cmd_quotient(args) -> int:
    from .congruence import quotient
    L, theta = _congruence(args)
    Q = quotient(L, theta).lattice
    print(Q.n)
    _write(args.json, export.dumps(export.lattice_to_dict(Q)))
    _write(args.dot, export.to_dot(Q, name=f"{L.label} quotient"))
    _figure(args, Q, f"{L.label} / {args.gens}")
    if args.check_iso and not _check_iso(L, theta, args.check_iso):
        return 1
    return 0


def _build_hom(args):
    from . import homs
    if args.name in homs.SIGNED_MAPS:
        if args.n is None:
            raise CoxlatError("--n is required for signed-permutation maps")
        return homs.eta_signed(args.name, args.n)
    if args.type is None:
        raise CoxlatError("--type is required for parabolic and edge-erasing maps")
    L = _weak(args.type)
    if args.name == "parabolic":
        return homs.eta_parabolic(L, _generator_indices(L, args.J))
    return homs.eta_edge_erasing(L, _edge_list(L.diagram, args.E))


def _edge_list(diagram, text: str | None):
    edges = []
    for part in (text or "").split(";"):
        if part.strip():
            a, b = _split(part)
            edges.append((diagram.index(a), diagram.index(b)))
    return edges


def _apply(args) -> str:
    from . import homs
    from .coxeter import build_diagram
    if args.name in homs.SIGNED_MAPS:
        return homs.apply_signed(args.name, args.apply)
    D = build_diagram(args.type)
    if args.name == "parabolic":
        parts = homs.parabolic_strings(D, args.apply, [D.index(g) for g in _split(args.J)])
    else:
        parts = homs.edge_erasing_strings(D, args.apply, _edge_list(D, args.E))
    return "(" + ",".join(parts) + ")"


def cmd_hom(args) -> int:
    from .homs import verify_hom
    if args.apply:
        print(_apply(args))
        if not (args.verify or args.json):
            return 0
    h = _build_hom(args)
    if args.verify:
        samples = None if args.verify == "exhaustive" else args.samples
        cert = verify_hom(h, samples=samples, seed=args.seed)
        status = "ok" if cert.ok else "FAIL"
        print(f"{h.kind}: {h.domain.label} -> {h.codomain.label}: {cert.pairs_checked} pairs, {status}")
        if not cert.ok:
            x, y, op = cert.counterexample
            print(f"counterexample: {op} of {h.domain.names[x]} and {h.domain.names[y]}")
            return 1
    if args.json:
        print(export.dumps(export.hom_to_dict(h)))
    return 0


def cmd_shards(args) -> int:
    from .congruence import forcing_poset
    from .shards import is_acyclic, ji_of_signed_subset, shard_digraph, transitive_below
    label = args.type.upper()
    if label[0] != "B":
        raise CoxlatError("the signed-subset model covers type B only")
    n = int(label[1:])
    G = shard_digraph(n)
    nodes = list(G)
    pos = {a: k for k, a in enumerate(nodes)}
    edges = [(pos[a], pos[b]) for a in nodes for b in G[a] if a != b]
    print(f"signed subsets: {len(nodes)}")
    print(f"arrows: {len(edges)}")
    acyclic = is_acyclic({a: [b for b in G[a] if b != a] for a in nodes})
    print(f"acyclic: {acyclic}")
    if args.digraph and args.dot:
        _write("-", export.digraph_to_dot([str(a) for a in nodes], edges, name=f"shards {label}"))
    elif args.dot and args.dot != "-":
        _write(args.dot, export.digraph_to_dot([str(a) for a in nodes], edges, name=f"shards {label}"))
    if args.check:
        L = _weak(label)
        F = forcing_poset(L)
        reach = transitive_below(G)
        ji = {a: ji_of_signed_subset(L, a) for a in nodes}
        bad = [a for a in nodes if frozenset(ji[b] for b in reach[a]) != F.below[ji[a]]]
        print(f"closure equals forcing poset: {not bad}")
        for a in bad[:5]:
            print(f"  mismatch at {a}")
        if bad or not acyclic:
            return 1
    return 0


def cmd_cambrian(args) -> int:
    from .cambrian import cambrian_lattice, restrict_hom, sorting_word
    L = _weak(args.type)
    if args.restrict_hom:
        from .homs import eta_signed
        n = int(L.label[1:])
        r = restrict_hom(eta_signed(args.restrict_hom, n), args.cword)
        print(f"{r.source.n} -> {r.target.n}")
        print("generators: " + " ".join(L.names[g] for g in r.generators))
        return 0
    C = cambrian_lattice(L, args.cword)
    print(C.n)
    for w in _split(args.sort):
        print(f"{w}: {sorting_word(L, L.index_of_reduced(w), C.order)}")
    if args.lattice:
        _write(args.dot, export.to_dot(C.lattice, name=f"Camb {L.label}"))
        _write(args.json, export.dumps(export.lattice_to_dict(C.lattice)))
    else:
        _write(args.dot, export.to_dot(L, name=L.label, classes=C.congruence.class_of))
        _write(args.json, export.dumps(export.congruence_to_dict(C.congruence)))
    _figure(args, C.lattice, f"Cambrian lattice of {L.label}")
    return 0


def cmd_dominance(args) -> int:
    from . import dominance as dm
    from .homs import verify_hom
    a, a2 = dm.cartan_matrix(args.source), dm.cartan_matrix(args.target)
    dom = dm.dominates(a, a2)
    print(f"dominates: {dom}")
    if not dom:
        return 1
    c = dm.containment_check(a, a2)
    print(f"roots contained: {c.roots_contained} (difference {c.root_difference})")
    print(f"co-roots contained: {c.coroots_contained} (difference {c.coroot_difference})")
    status = 0 if c.ok else 1
    if args.induced_hom:
        h = dm.induced_hom(a, a2)
        print(f"induced hom: {h.domain.n} -> {h.codomain.n}, {h.fibers().n_classes} fibres")
        if args.verify:
            cert = verify_hom(h)
            print(f"verified: {cert.ok} ({cert.pairs_checked} pairs)")
            status |= 0 if cert.ok else 1
    return status


def cmd_classify(args) -> int:
    from .classify import classify_compressive, classify_surjective
    L, T = _weak(args.source), _weak(args.target)
    if args.surjective:
        homs = classify_surjective(L, T)
        report = {"source": L.label, "target": T.label, "count": len(homs),
                  "homs": [{"J": list(h.params["J"]), "image": list(h.params["image"])} for h in homs]}
    else:
        recs = classify_compressive(L, T)
        report = {"source": L.label, "target": T.label, "count": len(recs),
                  "homs": [r.as_dict() for r in recs]}
    if args.report == "json":
        print(export.dumps(report))
    else:
        print(f"{report['count']} homomorphisms {L.label} -> {T.label}")
        for k, r in enumerate(report["homs"], 1):
            print(f"  {k}: " + ", ".join(f"{key}={val}" for key, val in r.items()))
    return 0


def cmd_verify_paper(args) -> int:
    from .classify import verify_suite
    suites = SUITES if args.suite == "all" else (args.suite,)
    rows = []
    failed = False
    for suite in suites:
        if suite == "h4" and not args.slow:
            print("h4: skipped (pass --slow)")
            continue
        for res in verify_suite(suite):
            tag = "PASS" if res.ok else "FAIL"
            failed |= not res.ok
            print(f"{tag}  {res.case_id:<28} {res.seconds:7.2f}s  {res.detail}")
            rows.append((res.case_id, res.seconds, res.ok))
    if args.json:
        _write(args.json, json.dumps([{"id": r[0], "seconds": round(r[1], 3), "ok": r[2]} for r in rows],
                                     indent=1))
    if args.figure and rows:
        from .plotting import timing_figure
        timing_figure(rows, args.figure, title=f"verify-paper {args.suite}")
    print(f"{sum(r[2] for r in rows)}/{len(rows)} passed")
    return 1 if failed else 0


# ------------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="coxlat", description="Lattice homomorphisms between weak orders.")
    sub = p.add_subparsers(dest="command", required=True)

    def outputs(sp, figure=True):
        sp.add_argument("--json", nargs="?", const="-", help="write JSON (to stdout if no path)")
        sp.add_argument("--dot", nargs="?", const="-", help="write DOT (to stdout if no path)")
        if figure:
            sp.add_argument("--figure", help="render a Hasse diagram to this image file")

    sp = sub.add_parser("enumerate", help="enumerate the weak order")
    sp.add_argument("--type", required=True)
    sp.add_argument("--stats", action="store_true")
    sp.add_argument("--polygons", action="store_true", help="include polygons in the JSON")
    outputs(sp)
    sp.set_defaults(func=cmd_enumerate)

    for name, func in (("congruence", cmd_congruence), ("quotient", cmd_quotient)):
        sp = sub.add_parser(name, help=f"{name} generated by join-irreducibles")
        sp.add_argument("--type", required=True)
        sp.add_argument("--gens", required=True, help="comma-separated reduced words")
        sp.add_argument("--check-iso", metavar="TYPE")
        if name == "congruence":
            sp.add_argument("--quotient", action="store_true")
        outputs(sp)
        sp.set_defaults(func=func)

    sp = sub.add_parser("hom", help="structural homomorphisms")
    sp.add_argument("--name", required=True, choices=["sigma", "nu", "delta", "epsilon", "parabolic", "erase"])
    sp.add_argument("--n", type=int)
    sp.add_argument("--type")
    sp.add_argument("--J", help="generators kept by the parabolic map, comma-separated")
    sp.add_argument("--E", help="erased edges as 'a,b;c,d'")
    sp.add_argument("--apply", help="element in one-line notation")
    sp.add_argument("--verify", choices=["exhaustive", "sampled"])
    sp.add_argument("--samples", type=int, default=100000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_hom)

    sp = sub.add_parser("shards", help="shard arrows on signed subsets of type B")
    sp.add_argument("--type", required=True)
    sp.add_argument("--digraph", action="store_true")
    sp.add_argument("--dot", nargs="?", const="-")
    sp.add_argument("--check", action="store_true", help="compare with the forcing poset")
    sp.set_defaults(func=cmd_shards)

    sp = sub.add_parser("cambrian", help="Cambrian congruences and sortable elements")
    sp.add_argument("--type", required=True)
    sp.add_argument("--cword", required=True, help="Coxeter element, e.g. s0,s1,s2")
    sp.add_argument("--lattice", action="store_true", help="export Camb(W,c) instead of the congruence")
    sp.add_argument("--sort", help="comma-separated reduced words to c-sort")
    sp.add_argument("--restrict-hom", choices=["sigma", "nu", "delta", "epsilon"])
    outputs(sp)
    sp.set_defaults(func=cmd_cambrian)

    sp = sub.add_parser("dominance", help="Cartan dominance and induced homomorphisms")
    sp.add_argument("--from", dest="source", required=True)
    sp.add_argument("--to", dest="target", required=True)
    sp.add_argument("--induced-hom", action="store_true")
    sp.add_argument("--verify", action="store_true")
    sp.set_defaults(func=cmd_dominance)

    sp = sub.add_parser("classify", help="classify compressive (or all surjective) homomorphisms")
    sp.add_argument("--from", dest="source", required=True)
    sp.add_argument("--to", dest="target", required=True)
    sp.add_argument("--surjective", action="store_true")
    sp.add_argument("--report", choices=["text", "json"], default="text")
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("verify-paper", help="rebuild the documented worked cases")
    sp.add_argument("--suite", choices=SUITES + ("all",), default="all")
    sp.add_argument("--slow", action="store_true", help="include the H4 cases")
    sp.add_argument("--json", help="write the results table as JSON")
    sp.add_argument("--figure", help="render a timing chart to this image file")
    sp.set_defaults(func=cmd_verify_paper)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1
    except CoxlatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
