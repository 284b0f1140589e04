"""Command-line front end.

Subcommands:

    encode      print a code matrix and its gate results
    formulate   run the general pipeline on a cdc problem document
    pwl         formulate a piecewise-linear epigraph document
    annulus     emit a closed-form ring relaxation straight from flags
    verify      re-check an emitted formulation against its problem

Formulation documents go to stdout (or --out); human-readable progress and
check results go to stderr, so piping the document stays clean. Exit codes:
0 success, 1 malformed input, 2 a construction precondition failed (the
instance is valid but has no ideal formulation on this route), 3 a
requested verification failed, 4 a resource cap was hit.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from pathlib import Path

from .annulus import (
    AnnulusSpec,
    annulus_cdc,
    annulus_gray_formulation,
    annulus_zigzag_formulation,
)
from .cdc import theorem1_formulation
from .documents import (
    ProblemDocument,
    document_text,
    emit_structured,
    formulation_from_document,
    parse_problem,
)
from .encoding import EncodingKind, is_hole_free, is_in_convex_position, make_encoding
from .errors import (
    IdealformError,
    InputError,
    InvalidOrder,
    NeedsExplicitRows,
    NotPowerOfTwo,
    ResourceCapExceeded,
    TooFewAlternatives,
)
from .lp_format import emit_lp_text
from .pwl import pwl_formulation, pwl_ground_set, pwl_prop3_applicable
from .verify import DEFAULT_ENUM_CAP, check_ideal, check_validity_only

_INPUT_ERRORS = (
    InputError,
    InvalidOrder,
    TooFewAlternatives,
    NeedsExplicitRows,
    NotPowerOfTwo,
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_PRECONDITION = 2
EXIT_CHECK_FAILED = 3
EXIT_CAP = 4


def _exit_code(err: IdealformError) -> int:
    if isinstance(err, ResourceCapExceeded):
        return EXIT_CAP
    if isinstance(err, _INPUT_ERRORS):
        return EXIT_INPUT
    return EXIT_PRECONDITION


class _Parser(argparse.ArgumentParser):
    """argparse that reports usage problems on exit code 1, not 2."""

    def error(self, message):
        raise InputError(message)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as err:
        raise InputError(f"cannot read {path}: {err}") from err


def _write_payload(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _say(line: str) -> None:
    print(line, file=sys.stderr)


def _encoding_kind(name: str) -> EncodingKind:
    return EncodingKind(name)


def _add_output_flags(p: argparse.ArgumentParser, with_check: bool = True) -> None:
    p.add_argument("--format", choices=["json", "lp"], default=None,
                   help="output format (default: json, or the document's option)")
    if with_check:
        p.add_argument("--check", choices=["none", "validity", "ideal"], default=None,
                       help="verification to run before emitting")
    p.add_argument("--out", default=None, metavar="PATH",
                   help="write the document here instead of stdout")
    p.add_argument("--max-enum", type=int, default=None, metavar="N",
                   help="vertex budget for exact enumeration "
                        f"(default {DEFAULT_ENUM_CAP})")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="idealform",
                     description="ideal formulations for disjunctions with "
                                 "few integer variables")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", help="print a code matrix and its gate results")
    p.add_argument("--kind", choices=["gray", "zigzag"], required=True)
    size = p.add_mutually_exclusive_group(required=True)
    size.add_argument("--s", type=int, help="recursion order: full 2**s row matrix")
    size.add_argument("--d", type=int, help="row count: the d-row prefix")
    p.add_argument("--out", default=None, metavar="PATH")

    p = sub.add_parser("formulate", help="formulate a cdc problem document")
    p.add_argument("document", help="problem document path, or - for stdin")
    p.add_argument("--encoding", choices=["gray", "zigzag"], default=None,
                   help="override the document's encoding choice")
    _add_output_flags(p)

    p = sub.add_parser("pwl", help="formulate a piecewise-linear epigraph document")
    p.add_argument("document", help="problem document path, or - for stdin")
    p.add_argument("--encoding", choices=["gray", "zigzag"], default=None)
    _add_output_flags(p)

    p = sub.add_parser("annulus", help="emit a closed-form ring relaxation")
    p.add_argument("--d", type=int, required=True, help="number of pieces, a power of two")
    p.add_argument("--encoding", choices=["gray", "zigzag"], default="gray")
    p.add_argument("--inner", type=float, default=None, metavar="L")
    p.add_argument("--outer", type=float, default=None, metavar="U")
    _add_output_flags(p)

    p = sub.add_parser("verify", help="re-check an emitted formulation")
    p.add_argument("problem", help="problem document path, or - for stdin")
    p.add_argument("formulation", help="formulation document path")
    p.add_argument("--check", choices=["validity", "ideal"], default="ideal")
    p.add_argument("--max-enum", type=int, default=None, metavar="N")

    return parser


def _run_check(level: str, c, e, f, max_enum: int | None):
    """Returns (ideal report or None, passed)."""
    if level == "validity":
        ok = check_validity_only(c, e, f)
        if ok:
            _say("validity: PASS (every embedding extreme point satisfies the rows)")
        else:
            _say("validity: FAIL (an embedding extreme point violates a row)")
        return None, ok
    cap = DEFAULT_ENUM_CAP if max_enum is None else max_enum
    report = check_ideal(c, e, f, max_vertices=cap)
    expected, found = report.counts
    if report.passed:
        _say(f"ideal: PASS ({expected} vertices expected, {found} found, exact match)")
    else:
        _say(f"ideal: FAIL ({expected} vertices expected, {found} found; "
             f"{len(report.missing)} missing, {len(report.extra)} extra)")
        for p in report.missing[:5]:
            _say(f"  missing: {tuple(str(x) for x in p)}")
        for p in report.extra[:5]:
            _say(f"  extra:   {tuple(str(x) for x in p)}")
    return report, report.passed


def _emit(args, f, recovery, provenance, report, default_format="json") -> None:
    fmt = args.format if args.format is not None else default_format
    if fmt == "lp":
        text = emit_lp_text(f)
    else:
        doc = emit_structured(f, recovery, provenance=provenance, verification=report)
        text = document_text(doc)
    _write_payload(text, args.out)


def _document_command(args, doc: ProblemDocument, f, recovery, provenance) -> int:
    level = args.check if args.check is not None else doc.options.check
    report, passed = (None, True)
    if level != "none":
        c = doc.disjunction()
        e = doc.encoding()
        report, passed = _run_check(level, c, e, f, args.max_enum)
    _emit(args, f, recovery, provenance,
          report, default_format=doc.options.output_format)
    return EXIT_OK if passed else EXIT_CHECK_FAILED


def _cmd_encode(args) -> int:
    if args.s is not None and args.s < 1:
        raise InvalidOrder(f"recursion order must be at least 1, got {args.s}")
    d = 2 ** args.s if args.s is not None else args.d
    e = make_encoding(d, _encoding_kind(args.kind))
    text = "\n".join(" ".join(str(x) for x in row) for row in e.rows) + "\n"
    _write_payload(text, args.out)
    _say(f"convex position: {'yes' if is_in_convex_position(e) else 'no'}")
    _say(f"hole-free: {'yes' if is_hole_free(e) else 'no'}")
    return EXIT_OK


def _cmd_formulate(args) -> int:
    doc = parse_problem(_read_text(args.document))
    if doc.kind != "cdc":
        raise InputError(f"formulate expects a cdc document, got kind {doc.kind!r}")
    if args.encoding is not None:
        doc = _override_encoding(doc, args.encoding)
    e = doc.encoding()
    f = theorem1_formulation(doc.cdc, e)
    provenance = {"kind": "cdc", "encoding": doc.encoding_kind.value,
                  "path": "general", "gamma": f.gamma}
    return _document_command(args, doc, f, None, provenance)


def _override_encoding(doc: ProblemDocument, name: str) -> ProblemDocument:
    return replace(doc, encoding_kind=_encoding_kind(name), explicit_rows=None)


def _cmd_pwl(args) -> int:
    doc = parse_problem(_read_text(args.document))
    if doc.kind != "pwl":
        raise InputError(f"pwl expects a pwl document, got kind {doc.kind!r}")
    if args.encoding is not None:
        doc = _override_encoding(doc, args.encoding)
    f, recovery = pwl_formulation(doc.function, doc.encoding_kind)
    path = "closed-form" if pwl_prop3_applicable(doc.function) else "general"
    provenance = {"kind": "pwl", "encoding": doc.encoding_kind.value, "path": path,
                  "gamma": f.gamma, "kappa": pwl_ground_set(doc.function).kappa}
    return _document_command(args, doc, f, recovery, provenance)


def _cmd_annulus(args) -> int:
    if (args.inner is None) != (args.outer is None):
        raise InputError("give both --inner and --outer or neither")
    spec = None
    if args.inner is not None:
        spec = AnnulusSpec(args.inner, args.outer, args.d)
    kind = _encoding_kind(args.encoding)
    build = (annulus_gray_formulation if kind is EncodingKind.GRAY
             else annulus_zigzag_formulation)
    f, recovery = build(args.d, spec)
    provenance = {"kind": "annulus", "encoding": kind.value,
                  "path": "closed-form", "gamma": f.gamma}

    level = args.check if args.check is not None else "none"
    report, passed = (None, True)
    if level != "none":
        report, passed = _run_check(level, annulus_cdc(args.d),
                                    make_encoding(args.d, kind), f, args.max_enum)
    _emit(args, f, recovery, provenance, report)
    return EXIT_OK if passed else EXIT_CHECK_FAILED


def _cmd_verify(args) -> int:
    doc = parse_problem(_read_text(args.problem))
    try:
        raw = json.loads(_read_text(args.formulation))
    except json.JSONDecodeError as err:
        raise InputError(f"formulation document is not valid JSON: {err}") from err
    f, _ = formulation_from_document(raw)
    c = doc.disjunction()
    e = doc.encoding()
    if f.n_lambda != c.n or f.r_z != e.r:
        raise InputError(
            f"formulation is over {f.n_lambda} lambda and {f.r_z} z variables, "
            f"but the problem needs {c.n} and {e.r}"
        )
    report, passed = _run_check(args.check, c, e, f, args.max_enum)
    if report is not None:
        summary = {
            "passed": report.passed,
            "expected": report.expected_count,
            "found": report.found_count,
            "missing": [[str(x) for x in p] for p in report.missing],
            "extra": [[str(x) for x in p] for p in report.extra],
        }
    else:
        summary = {"passed": passed, "level": "validity"}
    sys.stdout.write(json.dumps(summary, indent=2) + "\n")
    return EXIT_OK if passed else EXIT_CHECK_FAILED


_COMMANDS = {
    "encode": _cmd_encode,
    "formulate": _cmd_formulate,
    "pwl": _cmd_pwl,
    "annulus": _cmd_annulus,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except IdealformError as err:
        _say(f"error: {err}")
        return _exit_code(err)


if __name__ == "__main__":
    sys.exit(main())
