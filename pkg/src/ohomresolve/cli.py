"""Command-line front end: JSON in, text or JSON out, deterministic exits.

Exit codes: 0 for success or a true predicate, 1 for a false predicate or a
failed verification, 2 for input or usage errors.  No mathematical logic
lives here; every subcommand is a thin adapter over the library.
"""

from __future__ import annotations

import argparse
import json
import sys

from .complexes import Complex, build_complex, monomial_str, verts_of
from .cointerval import (
    SheddingTree,
    find_cointerval_order,
    is_cointerval,
    is_shifted,
    shedding_tree,
)
from .homcomplex import RestrictionSpec, build_ohom, cell_parts
from .homology import (
    GF2,
    Q,
    collapse_certificate,
    is_acyclic,
    removal_with_offender,
)
from .nonnesting import (
    build_poset,
    enumerate_nonnesting,
    nonnesting_ideal,
    parse_partition,
    small_diagrams,
    weights,
)
from .resolution import (
    betti_numbers,
    export_resolution,
    ideal_generators,
    supports_resolution,
    verify_linearity,
    verify_minimality,
)


def load_complex(path: str) -> Complex:
    with open(path) as fh:
        data = json.load(fh)
    if not isinstance(data, dict) or "n" not in data or "facets" not in data:
        raise ValueError(f"{path}: expected an object with 'n' and 'facets'")
    return build_complex(data["facets"], data["n"])


def complex_dict(H: Complex) -> dict:
    return {"n": H.n, "facets": sorted(list(verts_of(f)) for f in H.facets)}


def witness_dict(w) -> dict:
    out = {"cointerval": w.verdict, "violation": None}
    if w.violation is not None:
        v = w.violation
        out["violation"] = {
            "context": list(v.context),
            "i": v.i,
            "j": v.j,
            "face": list(v.face),
        }
    return out


def tree_dict(t: SheddingTree) -> dict:
    out = {"complex": complex_dict(t.complex)}
    if t.is_leaf():
        out["leaf"] = True
    else:
        out["shedding_vertex"] = t.vertex
        out["deletion"] = tree_dict(t.deletion)
        out["link"] = tree_dict(t.link)
    return out


def _parse_caps(text: str):
    caps = []
    for tok in text.split(","):
        tok = tok.strip()
        if tok in ("inf", "*", "-"):
            caps.append(None)
        else:
            caps.append(int(tok))
    return tuple(caps)


def _parse_expvec(text: str):
    return tuple(int(tok) for tok in text.split(","))


def _spec_from_args(args) -> RestrictionSpec | None:
    alpha = _parse_caps(args.alpha) if getattr(args, "alpha", None) else None
    beta = _parse_expvec(args.beta) if getattr(args, "beta", None) else None
    if alpha is None and beta is None:
        return None
    return RestrictionSpec(alpha=alpha, beta=beta)


def _field_from_args(args) -> str:
    return GF2 if getattr(args, "field", "q") == "gf2" else Q


class _Result:
    def __init__(self, payload: dict, text: str, code: int = 0):
        self.payload = payload
        self.text = text
        self.code = code


def _emit(args, res: _Result) -> int:
    if args.format == "json":
        out = json.dumps(res.payload, indent=2, sort_keys=True) + "\n"
    else:
        out = res.text if res.text.endswith("\n") else res.text + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return res.code


# ---------------------------------------------------------------------------
# subcommands

def _cmd_check(args) -> _Result:
    H = load_complex(args.complex)
    if args.cointerval:
        w = is_cointerval(H)
        payload = witness_dict(w)
        if w.verdict:
            return _Result(payload, "cointerval: true")
        v = w.violation
        text = (
            "cointerval: false\n"
            f"violation: context={list(v.context)} i={v.i} j={v.j} face={list(v.face)}"
        )
        return _Result(payload, text, 1)
    if args.shifted:
        ok = is_shifted(H)
        return _Result({"shifted": ok}, f"shifted: {str(ok).lower()}", 0 if ok else 1)
    if args.vertex_decomposable:
        tree = shedding_tree(H)
        if tree is None:
            return _Result(
                {"vertex_decomposable": False, "tree": None},
                "vertex-decomposable: false",
                1,
            )
        return _Result(
            {"vertex_decomposable": True, "tree": tree_dict(tree)},
            "vertex-decomposable: true",
        )
    order = find_cointerval_order(H, bound=args.bound)
    if order is None:
        return _Result({"order": None}, "cointerval order: none", 1)
    return _Result(
        {"order": list(order)}, "cointerval order: " + ",".join(map(str, order))
    )


def _cmd_hom(args) -> _Result:
    G = load_complex(args.G)
    H = load_complex(args.H)
    spec = _spec_from_args(args)
    if args.generators:
        gens = ideal_generators(G, H, spec)
        text = "\n".join(monomial_str(g) for g in gens.gens) or "(no generators)"
        payload = {
            "m": gens.m,
            "degree": gens.degree,
            "gens": [list(g) for g in gens.gens],
        }
        return _Result(payload, text)
    if args.fvector:
        fv = list(build_ohom(G, H, spec).f_vector())
        return _Result({"fvector": fv}, json.dumps(fv))
    if args.betti:
        bt = betti_numbers(G, H, spec, override=args.override)
        return _Result({"betti": bt}, json.dumps(bt))
    X = build_ohom(G, H, spec)
    exp = export_resolution(G, H, spec)
    data = {"complex": X.to_dict(), "resolution": exp.to_dict()}
    with open(args.export, "w") as fh:
        json.dump(data, fh, indent=2, sort_keys=True)
        fh.write("\n")
    return _Result(
        {"written": args.export, "betti": exp.betti},
        f"wrote {args.export} (betti {exp.betti})",
    )


def _cmd_verify(args) -> _Result:
    G = load_complex(args.G)
    H = load_complex(args.H)
    spec = _spec_from_args(args)
    field = _field_from_args(args)
    X = build_ohom(G, H, spec)
    if args.acyclicity:
        if X.is_empty():
            return _Result(
                {"acyclic": True, "supports_resolution": True, "empty": True},
                "empty complex: acyclic by convention",
            )
        acy = is_acyclic(X, field)
        sup = supports_resolution(X, field)
        ok = acy and sup
        text = f"acyclic: {str(acy).lower()}\nsupports resolution: {str(sup).lower()}"
        return _Result(
            {"acyclic": acy, "supports_resolution": sup}, text, 0 if ok else 1
        )
    if args.minimality:
        ok = verify_minimality(X)
        return _Result({"minimal": ok}, f"minimal: {str(ok).lower()}", 0 if ok else 1)
    if args.linearity:
        ok = verify_linearity(X)
        return _Result({"linear": ok}, f"linear: {str(ok).lower()}", 0 if ok else 1)
    if args.collapse:
        if X.is_empty():
            return _Result({"collapsible": None}, "empty complex: nothing to collapse", 1)
        pairs = collapse_certificate(X)
        if pairs is None:
            return _Result(
                {"collapsible": None},
                "collapse: stalled (inconclusive)",
                1,
            )
        payload = {
            "collapsible": True,
            "pairs": [[cell_parts(a), cell_parts(b)] for a, b in pairs],
        }
        return _Result(payload, f"collapse: reduced to a point in {len(pairs)} steps")
    if X.is_empty():
        return _Result({"removal": None}, "empty complex: no removal certificate", 1)
    cert, offender = removal_with_offender(G, H, spec)
    if cert is None:
        return _Result(
            {"removal": None, "offender": list(offender)},
            f"removal: failed at vertex {list(offender)}",
            1,
        )
    payload = {
        "removal": {
            "steps": [
                {"vertex": list(phi), "facet": cell_parts(f)} for phi, f in cert.steps
            ],
            "terminal": list(cert.terminal),
        }
    }
    return _Result(payload, f"removal: {len(cert.steps)} removals, terminal {list(cert.terminal)}")


def _cmd_nn(args) -> _Result:
    if args.nn_cmd == "enumerate":
        parts = enumerate_nonnesting(args.r)
        if args.small:
            from .nonnesting import diagram_partition

            parts = [diagram_partition(d) for d in small_diagrams(args.r)]
        if args.count:
            return _Result({"count": len(parts)}, str(len(parts)))
        return _Result(
            {"partitions": [str(p) for p in parts]},
            "\n".join(str(p) for p in parts),
        )
    if args.nn_cmd == "poset":
        poset = build_poset(args.r)
        names = [str(d) for d in poset.elements]
        rel = [
            [names[i], names[j]]
            for i in range(len(names))
            for j in range(len(names))
            if i != j and poset._leq[i][j]
        ]
        payload = {"elements": names, "leq": rel}
        lines = ["elements:"] + [f"  {s}" for s in names]
        lines += ["relations (a <= b):"] + [f"  {a} <= {b}" for a, b in rel]
        if args.mobius:
            mob = {}
            for (i, j), v in sorted(poset._mobius.items()):
                if poset._leq[i][j]:
                    mob[f"{names[i]} , {names[j]}"] = v
            payload["mobius"] = mob
            lines += ["mobius:"] + [f"  mu({k}) = {v}" for k, v in mob.items()]
        return _Result(payload, "\n".join(lines))
    if args.nn_cmd == "weights":
        method = "mobius" if args.invert else "bucket"
        wt = weights(args.r, args.n, args.k, method=method)
        payload = {"r": wt.r, "n": wt.n, "k": wt.k, "weights": wt.to_dict()}
        lines = [f"{k}: {v}" for k, v in wt.to_dict().items()]
        return _Result(payload, "\n".join(lines))
    P = parse_partition(args.partition)
    gens = nonnesting_ideal(P, args.n)
    payload = {
        "m": gens.m,
        "degree": gens.degree,
        "gens": [list(g) for g in gens.gens],
    }
    text = "\n".join(monomial_str(g) for g in gens.gens) or "(no generators)"
    return _Result(payload, text)


# ---------------------------------------------------------------------------
# parser

def _add_common(sp) -> None:
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.add_argument("--output", metavar="PATH", default=None)
    sp.add_argument("--threads", type=int, default=1,
                    help="accepted for compatibility; execution is sequential")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="ohomresolve",
        description="Ordered homomorphism complexes, cointerval certificates, "
        "cellular resolution verification, and nonnesting ideal combinatorics.",
    )
    sub = ap.add_subparsers(dest="cmd", required=True)

    check = sub.add_parser("check", help="predicates on a single complex")
    check.add_argument("complex", help="complex JSON: {\"n\":..,\"facets\":[[..],..]}")
    g = check.add_mutually_exclusive_group(required=True)
    g.add_argument("--cointerval", action="store_true")
    g.add_argument("--shifted", action="store_true")
    g.add_argument("--vertex-decomposable", action="store_true")
    g.add_argument("--find-order", action="store_true")
    check.add_argument("--bound", type=int, default=10,
                       help="vertex bound for the order search")
    _add_common(check)

    hom = sub.add_parser("hom", help="hom complex and ideal of a pair (G, H)")
    hom.add_argument("G")
    hom.add_argument("H")
    g = hom.add_mutually_exclusive_group(required=True)
    g.add_argument("--generators", action="store_true")
    g.add_argument("--fvector", action="store_true")
    g.add_argument("--betti", action="store_true")
    g.add_argument("--export", metavar="OUT.json")
    hom.add_argument("--override", action="store_true",
                     help="verify support+minimality instead of requiring a cointerval target")
    hom.add_argument("--alpha", help="per-variable caps, e.g. 2,1,inf")
    hom.add_argument("--beta", help="revlex floor exponents, e.g. 1,2,0,1,0")
    _add_common(hom)

    ver = sub.add_parser("verify", help="resolution checks for a pair (G, H)")
    ver.add_argument("G")
    ver.add_argument("H")
    g = ver.add_mutually_exclusive_group(required=True)
    g.add_argument("--acyclicity", action="store_true")
    g.add_argument("--minimality", action="store_true")
    g.add_argument("--linearity", action="store_true")
    g.add_argument("--collapse", action="store_true")
    g.add_argument("--removal", action="store_true")
    ver.add_argument("--field", choices=("q", "gf2"), default="q")
    ver.add_argument("--alpha")
    ver.add_argument("--beta")
    _add_common(ver)

    nn = sub.add_parser("nn", help="nonnesting partitions, diagrams, weights")
    nnsub = nn.add_subparsers(dest="nn_cmd", required=True)
    en = nnsub.add_parser("enumerate")
    en.add_argument("-r", type=int, required=True)
    en.add_argument("--small", action="store_true")
    en.add_argument("--count", action="store_true")
    _add_common(en)
    po = nnsub.add_parser("poset")
    po.add_argument("-r", type=int, required=True)
    po.add_argument("--mobius", action="store_true")
    _add_common(po)
    we = nnsub.add_parser("weights")
    we.add_argument("-r", type=int, required=True)
    we.add_argument("-n", type=int, required=True)
    we.add_argument("-k", type=int, required=True)
    we.add_argument("--invert", action="store_true",
                    help="compute by Moebius inversion of Betti numbers")
    _add_common(we)
    idl = nnsub.add_parser("ideal")
    idl.add_argument("-p", "--partition", required=True,
                     help="blocks joined by '|', elements by ','")
    idl.add_argument("-n", type=int, required=True)
    _add_common(idl)

    return ap


_HANDLERS = {
    "check": _cmd_check,
    "hom": _cmd_hom,
    "verify": _cmd_verify,
    "nn": _cmd_nn,
}


def run(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.threads < 1:
        ap.error("--threads must be at least 1")
    try:
        res = _HANDLERS[args.cmd](args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"ohomresolve: error: {exc}", file=sys.stderr)
        return 2
    return _emit(args, res)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
