"""Command-line front end.

Commands: classify | decompose | inspect | verify-paper. All take --json for
machine-readable output, --cap to override the ring size cap (the
CLEAN_RING_CAP environment variable is the fallback), and --threads to run
verification cases concurrently.

Exit codes: 0 success (all cases pass), 1 verification failure, 2 usage or
parse error, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from typing import Optional

from . import cleanness, structure, verification
from .cleanness import KIND_CLEAN, KIND_J, KIND_NIL, classify_ring
from .dsl import ParseError, build_from_text
from .errors import CleanRingsError, InvalidArgumentError, SizeCapError
from .rings import DEFAULT_SIZE_CAP

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_CAP = 3

_KIND_ARG = {"clean": KIND_CLEAN, "nil": KIND_NIL, "j": KIND_J}


def _resolve_cap(args) -> int:
    if args.cap is not None:
        return args.cap
    env = os.environ.get("CLEAN_RING_CAP")
    if env:
        try:
            return int(env)
        except ValueError:
            print(f"warning: ignoring non-integer CLEAN_RING_CAP={env!r}", file=sys.stderr)
    return DEFAULT_SIZE_CAP


def _element_info(ring, index: int) -> dict:
    return {"index": int(index), "repr": ring.show(int(index))}


def _parse_element(ring, text: str) -> int:
    try:
        return int(text)
    except ValueError:
        pass
    try:
        literal = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidArgumentError(f"element must be an index or a matrix literal: {exc}") from exc
    return ring.codec.encode(literal)


def _report_json(ring, report) -> dict:
    witnesses = []
    for flag, element in sorted(report.witnesses.items()):
        entry = {"flag": flag, "element": _element_info(ring, element)}
        detail = report.witness_details.get(flag)
        if detail is not None:
            entry["counts"] = dict(detail.counts)
            kind = cleanness._FLAG_TO_KIND_VARIANT.get(flag, (None, None))[0]
            pair = detail.conjugacy_failures.get(kind)
            entry["non_conjugate_idempotents"] = (
                [ring.show(pair[0].idempotent), ring.show(pair[1].idempotent)] if pair else None
            )
        witnesses.append(entry)
    return {
        "spec": report.label,
        "size": report.size,
        "flags": dict(report.flags),
        "radical": {
            "size": report.radical_size,
            "nil": report.radical_nil,
            "class": report.radical_class,
        },
        "witnesses": witnesses,
        "timing": {k: round(v, 6) for k, v in report.timing.items()},
    }


def cmd_classify(args) -> int:
    cap = _resolve_cap(args)
    t0 = time.perf_counter()
    ring = build_from_text(args.expr, cap=cap)
    construct_s = time.perf_counter() - t0
    report = classify_ring(ring, cap=cap)
    report.timing["construct_s"] = construct_s
    if args.json:
        print(json.dumps(_report_json(ring, report), indent=2))
        return EXIT_OK
    print(f"ring    {report.label}")
    print(f"size    {report.size}")
    for flag in cleanness.RING_FLAGS:
        line = f"  {flag:22s} {str(report.flags[flag]).lower()}"
        if flag in report.witnesses:
            line += f"   (fails at {ring.show(report.witnesses[flag])})"
        print(line)
    cls = report.radical_class if report.radical_class is not None else "?"
    nil = "nilpotent" if report.radical_nil else "not nil"
    print(f"radical {report.radical_size} elements, {nil}" + (f" of class {cls}" if report.radical_nil else ""))
    timing = " ".join(f"{k}={v:.3f}s" for k, v in sorted(report.timing.items()))
    print(f"timing  {timing}")
    return EXIT_OK


def cmd_decompose(args) -> int:
    cap = _resolve_cap(args)
    ring = build_from_text(args.expr, cap=cap)
    element = _parse_element(ring, args.element)
    if not 0 <= element < ring.size:
        raise InvalidArgumentError(f"element {element} out of range 0..{ring.size - 1}")
    kind = _KIND_ARG[args.kind]
    decs = cleanness.decompositions(ring, element, kind)
    orbits = structure.conjugacy_classes(ring)
    if args.json:
        payload = {
            "spec": ring.label,
            "element": _element_info(ring, element),
            "kind": kind,
            "count": len(decs),
            "decompositions": [
                {
                    "idempotent": _element_info(ring, d.idempotent),
                    "complement": _element_info(ring, d.complement),
                    "conjugacy_class": orbits.orbit_of[d.idempotent],
                }
                for d in decs
            ],
        }
        print(json.dumps(payload, indent=2))
        return EXIT_OK
    shown = ring.show(element)
    print(f"{len(decs)} {kind} decomposition(s) of {shown} in {ring.label}")
    for d in decs:
        oid = orbits.orbit_of[d.idempotent]
        print(f"  {shown} = {ring.show(d.idempotent)} + {ring.show(d.complement)}   [class C{oid}]")
    return EXIT_OK


_LISTING_LIMIT = 64  # element listings above this stay count-only


def cmd_inspect(args) -> int:
    cap = _resolve_cap(args)
    ring = build_from_text(args.expr, cap=cap)
    sections = {
        "idempotents": args.idempotents,
        "units": args.units,
        "radical": args.radical,
        "conjugacy_classes": args.conjugacy_classes,
    }
    if not any(sections.values()):
        sections = dict.fromkeys(sections, True)
    payload: dict = {"spec": ring.label, "size": ring.size}
    lines = [f"ring    {ring.label}", f"size    {ring.size}"]
    if sections["idempotents"] or sections["conjugacy_classes"]:
        orbits = structure.conjugacy_classes(ring)
    if sections["idempotents"]:
        idem = structure.idempotents(ring)
        info = {"count": int(idem.size), "classes": len(orbits.orbits)}
        if idem.size <= _LISTING_LIMIT:
            info["elements"] = [ring.show(int(e)) for e in idem]
        payload["idempotents"] = info
        lines.append(f"{idem.size} idempotents in {len(orbits.orbits)} conjugacy classes")
        if "elements" in info:
            lines.extend(f"  {s}" for s in info["elements"])
    if sections["units"]:
        group = structure.units(ring)
        info = {"count": len(group)}
        if len(group) <= _LISTING_LIMIT:
            info["elements"] = [ring.show(int(u)) for u in group.units]
        payload["units"] = info
        lines.append(f"{len(group)} unit" + ("s" if len(group) != 1 else ""))
    if sections["radical"]:
        radical = structure.jacobson_radical(ring)
        info = {"size": len(radical), "nil": radical.is_nil, "class": radical.nilpotency_class}
        if len(radical) <= _LISTING_LIMIT:
            info["elements"] = [ring.show(int(x)) for x in radical.elements]
        payload["radical"] = info
        nil = (
            f"nilpotent of class {radical.nilpotency_class}"
            if radical.is_nil
            else "not nil"
        )
        lines.append(f"J: {len(radical)} elements, {nil}")
    if sections["conjugacy_classes"]:
        payload["conjugacy_classes"] = [
            {"representative": ring.show(int(rep)), "size": int(orb.size)}
            for rep, orb in zip(orbits.reps, orbits.orbits)
        ]
        lines.append(f"{len(orbits.orbits)} idempotent conjugacy classes:")
        lines.extend(
            f"  C{k}: {ring.show(int(rep))} (orbit size {orb.size})"
            for k, (rep, orb) in enumerate(zip(orbits.reps, orbits.orbits))
        )
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(lines))
    return EXIT_OK


def cmd_verify_paper(args) -> int:
    cap = _resolve_cap(args)
    results = verification.run_cases(args.filter, threads=args.threads, cap=cap)
    if args.json:
        print(json.dumps([r.as_dict() for r in results], indent=2))
    else:
        if not results:
            print(f"no cases match filter {args.filter!r}; nothing to verify")
            return EXIT_OK
        width = max(len(r.title) for r in results)
        for r in results:
            status = "pass" if r.passed else "FAIL"
            print(f"{r.case_id}  {r.title:{width}s}  {status}  ({r.seconds:6.2f}s)  [{r.source}]")
            if not r.passed:
                for key in r.expected:
                    if r.expected[key] != r.actual.get(key):
                        print(f"      {key}: expected {r.expected[key]}, got {r.actual.get(key)}")
                for w in r.witnesses:
                    print(f"      witness: {w}")
        total = sum(r.seconds for r in results)
        passed = sum(r.passed for r in results)
        print(f"{passed}/{len(results)} cases passed in {total:.2f}s")
    if not results:
        return EXIT_OK
    return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY_FAIL


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--cap", type=int, default=None, metavar="N",
                        help="ring size cap (default: CLEAN_RING_CAP or 2**20)")
    common.add_argument("--threads", type=int, default=1, metavar="N",
                        help="worker threads for verification cases")

    parser = argparse.ArgumentParser(
        prog="cleanrings",
        description="Construct finite rings and classify clean, nil-clean and "
                    "J-clean decompositions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common],
                       help="classify every element of a ring and report ring-level flags")
    p.add_argument("expr", help="ring expression, e.g. 'M(2,F2)' or 'T(F2 x F2,swap(1,2),2)'")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("decompose", parents=[common],
                       help="list decompositions of one element")
    p.add_argument("expr", help="ring expression")
    p.add_argument("element", help="element index or matrix literal like [[0,1],[1,0]]")
    p.add_argument("--kind", choices=sorted(_KIND_ARG), default="clean")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("inspect", parents=[common],
                       help="print structural sets (idempotents, units, radical, classes)")
    p.add_argument("expr", help="ring expression")
    p.add_argument("--idempotents", action="store_true")
    p.add_argument("--units", action="store_true")
    p.add_argument("--radical", action="store_true")
    p.add_argument("--conjugacy-classes", action="store_true")
    p.set_defaults(func=cmd_inspect)

    p = sub.add_parser("verify-paper", parents=[common],
                       help="run the built-in theorem verification suite (V01-V16)")
    p.add_argument("--filter", default=None, metavar="ID",
                   help="run only cases whose id contains this text")
    p.set_defaults(func=cmd_verify_paper)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SizeCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except CleanRingsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
