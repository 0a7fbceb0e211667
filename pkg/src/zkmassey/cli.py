"""Command-line front end.

Subcommands read a complex document {"m": int, "facets": [[v, ...], ...]}
(1-based vertices) from --in (a path, or - for stdin) and write a single
JSON result document to stdout:

    {"command": ..., "field": ..., "status": "ok", "payload": ...}

serialized with sorted keys and two-space indentation, so output round-trips
byte-identically.  Scalars serialize as strings to keep rationals exact.

Class specs name one cochain piece per --X-support/--X-cochain pair: the
support is a comma-separated vertex list, the cochain a comma-separated list
of simplex:coeff terms whose simplex is a dot-joined vertex list (empty for
the empty simplex), e.g. --a-support 1,2 --a-cochain 1:1.

Exit codes: 0 success, 1 usage or input error, 2 verification disagreement,
3 internal invariant failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import InternalCheckError
from .fields import GF, GF2, QQ
from .graphs import SmallGraph
from .hochster import CohomologyClass, MultiCochain, add, betti_table, chi, cup, is_zero_class
from .massey import coset_check, triple_massey
from .obstruction import build_catalog, detect
from .oracle import derive_minimal_obstructions, verify_lemma, verify_theorem
from .simplicial import build_complex

__all__ = ["main"]


class _UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _parse_field(args):
    if args.field == "gf2":
        return GF2
    if args.field == "gfp":
        if args.p is None:
            raise _UsageError("--field gfp requires --p")
        return GF(args.p)
    return QQ


def _field_doc(field):
    if field.kind == "gfp":
        return {"kind": "gfp", "p": field.p}
    return {"kind": field.kind}


def _load_complex(path):
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    doc = json.loads(text)
    if not isinstance(doc, dict) or "m" not in doc or "facets" not in doc:
        raise ValueError('complex document needs keys "m" and "facets"')
    return build_complex(int(doc["m"]), [tuple(f) for f in doc["facets"]])


def _terms_doc(a: MultiCochain):
    out = []
    for J in a.supports():
        for s, c in a.pieces[J].terms:
            out.append({"support": list(J), "simplex": list(s), "coeff": a.field.fmt(c)})
    return out


def _parse_terms(field, spec: str):
    terms = []
    for part in spec.split(","):
        part = part.strip()
        if ":" not in part:
            raise ValueError(f"term {part!r} must look like simplex:coeff")
        sx, cx = part.split(":", 1)
        simplex = tuple(int(t) for t in sx.strip().split(".")) if sx.strip() else ()
        terms.append((simplex, field.parse(cx.strip())))
    return terms


def _parse_class(K, field, supports, cochains, label) -> CohomologyClass:
    if not supports or not cochains:
        raise _UsageError(f"missing --{label}-support/--{label}-cochain")
    if len(supports) != len(cochains):
        raise _UsageError(f"--{label}-support and --{label}-cochain counts differ")
    total = None
    for sup_s, terms_s in zip(supports, cochains):
        sup = tuple(int(t) for t in sup_s.split(","))
        for simplex, coeff in _parse_terms(field, terms_s):
            term = chi(K, field, sup, simplex, coeff)
            total = term if total is None else add(total, term)
    return CohomologyClass(total)


def _emit(command, field, payload) -> None:
    doc = {"command": command, "status": "ok", "payload": payload}
    if field is not None:
        doc["field"] = _field_doc(field)
    print(json.dumps(doc, indent=2, sort_keys=True))


def _emit_error(command, message, code) -> int:
    doc = {"command": command, "status": "error", "message": message}
    print(json.dumps(doc, indent=2, sort_keys=True), file=sys.stderr)
    return code


def _cmd_betti(args) -> int:
    field = _parse_field(args)
    K = _load_complex(args.infile)
    table = betti_table(K, field, by_subset=args.by_subset)
    entries = []
    for key in sorted(table.entries):
        first, p = key
        entry = {"p": p, "dim": table.entries[key]}
        if args.by_subset:
            entry["subset"] = list(first)
        else:
            entry["size"] = first
        entries.append(entry)
    payload = {
        "m": table.m,
        "by_subset": table.by_subset,
        "entries": entries,
        "totals": {str(n): table.totals[n] for n in sorted(table.totals)},
    }
    _emit("betti", field, payload)
    return 0


def _cmd_cup(args) -> int:
    field = _parse_field(args)
    K = _load_complex(args.infile)
    a = _parse_class(K, field, args.a_support, args.a_cochain, "a")
    b = _parse_class(K, field, args.b_support, args.b_cochain, "b")
    prod = cup(a.rep, b.rep)
    payload = {
        "degree": prod.degree,
        "terms": _terms_doc(prod),
        "is_zero_class": is_zero_class(prod),
    }
    _emit("cup", field, payload)
    return 0


def _cmd_massey(args) -> int:
    field = _parse_field(args)
    K = _load_complex(args.infile)
    a1 = _parse_class(K, field, args.a1_support, args.a1_cochain, "a1")
    a2 = _parse_class(K, field, args.a2_support, args.a2_cochain, "a2")
    a3 = _parse_class(K, field, args.a3_support, args.a3_cochain, "a3")
    result = triple_massey(K, field, a1, a2, a3)
    payload = {
        "defined": result.defined,
        "degree": result.degree,
        "trivial": result.trivial,
        "omega": _terms_doc(result.omega) if result.omega is not None else None,
        "system": None,
        "indeterminacy": {
            "dim": result.indeterminacy_dim,
            "basis": [_terms_doc(b.rep) for b in result.indeterminacy_basis],
        },
    }
    if result.system is not None:
        payload["system"] = {
            name: _terms_doc(getattr(result.system, name))
            for name in ("a1", "a2", "a3", "a12", "a23")
        }
    if args.coset_samples and result.defined:
        payload["coset_check"] = coset_check(result, samples=args.coset_samples)
    _emit("massey", field, payload)
    return 0


def _cmd_detect(args) -> int:
    K = _load_complex(args.infile)
    hits = detect(K)
    payload = {
        "count": len(hits),
        "hits": [
            {
                "vertices": list(h.vertices),
                "class_index": h.class_index,
                "mapping": {str(v): h.mapping[v] for v in sorted(h.mapping)},
            }
            for h in hits
        ],
    }
    _emit("detect", None, payload)
    return 0


def _cmd_verify_theorem(args) -> int:
    field = _parse_field(args)
    report = verify_theorem(field, mode=args.mode, jobs=args.jobs)
    print(report.summary(), file=sys.stderr)
    _emit("verify-theorem", field, report.to_doc())
    return 0 if report.agree else 2


def _cmd_derive_obstructions(args) -> int:
    field = _parse_field(args)
    derived = derive_minimal_obstructions(field, mode=args.mode)
    cat = build_catalog()
    classes = []
    for canon in derived:
        ci = cat.class_index(canon)
        edges = [list(e) for e in SmallGraph(6, canon).edges()]
        classes.append({"canon": canon, "edges": edges, "class_index": ci})
    matches = sorted(derived) == sorted(c.canon_mask for c in cat.classes)
    payload = {"count": len(derived), "classes": classes, "matches_catalog": matches}
    _emit("derive-obstructions", field, payload)
    return 0 if matches else 2


def _cmd_verify_lemma(args) -> int:
    report = verify_lemma()
    _emit("verify-lemma", None, report)
    return 0 if report["ok"] else 2


def _add_field_args(p, default="rational"):
    p.add_argument("--field", choices=("gf2", "gfp", "rational"), default=default)
    p.add_argument("--p", type=int, default=None, help="modulus for --field gfp")


def _add_class_args(p, label):
    p.add_argument(f"--{label}-support", action="append", metavar="V,V")
    p.add_argument(f"--{label}-cochain", action="append", metavar="S:C[,S:C...]")


def build_parser() -> _Parser:
    parser = _Parser(prog="zkmassey", description="Moment-angle complex cohomology and triple products")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("betti", help="Betti numbers by subset size and degree")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--by-subset", action="store_true")
    _add_field_args(p)
    p.set_defaults(func=_cmd_betti)

    p = sub.add_parser("cup", help="product of two cohomology classes")
    p.add_argument("--in", dest="infile", required=True)
    _add_field_args(p)
    _add_class_args(p, "a")
    _add_class_args(p, "b")
    p.set_defaults(func=_cmd_cup)

    p = sub.add_parser("massey", help="triple product with indeterminacy")
    p.add_argument("--in", dest="infile", required=True)
    _add_field_args(p)
    for label in ("a1", "a2", "a3"):
        _add_class_args(p, label)
    p.add_argument("--coset-samples", type=int, default=0)
    p.set_defaults(func=_cmd_massey)

    p = sub.add_parser("detect", help="induced six-vertex obstructions")
    p.add_argument("--in", dest="infile", required=True)
    p.set_defaults(func=_cmd_detect)

    p = sub.add_parser("verify-theorem", help="sweep all 32768 six-vertex graphs")
    _add_field_args(p, default="gf2")
    p.add_argument("--mode", choices=("graph", "flag"), default="graph")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_cmd_verify_theorem)

    p = sub.add_parser("derive-obstructions", help="re-derive the catalog by brute force")
    _add_field_args(p, default="gf2")
    p.add_argument("--mode", choices=("graph", "flag"), default="graph")
    p.set_defaults(func=_cmd_derive_obstructions)

    p = sub.add_parser("verify-lemma", help="pairwise non-isomorphism of the catalog")
    p.set_defaults(func=_cmd_verify_lemma)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    command = "?"
    try:
        args = parser.parse_args(argv)
        command = args.command or "?"
        return args.func(args)
    except _UsageError as e:
        return _emit_error(command, str(e), 1)
    except InternalCheckError as e:
        return _emit_error(command, str(e), 3)
    except (ValueError, TypeError, KeyError, OSError, json.JSONDecodeError) as e:
        return _emit_error(command, str(e), 1)


if __name__ == "__main__":
    sys.exit(main())
