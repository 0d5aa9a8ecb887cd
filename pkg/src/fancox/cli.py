"""Command line front end.

Subcommands:

    validate      check a fan JSON file and list findings
    analyze       full symbolic homotopy report (text or --json)
    construct     emit a built-in fan family as JSON
    blowup        star subdivision at a cone, emit the new fan
    oracle-check  recompute the arrangement and the pairwise predicate by
                  independent routes and compare
    nonface-scan  list the minimal non-faces grouped by size

Fans are read from a path or from stdin via "-".  Exit codes: 0 success,
1 not a smooth complete fan (or validation failed), 2 bad input or bad
parameters, 3 internal geometric failure or oracle mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from itertools import combinations

from ._version import __version__
from .cox import arrangement, arrangement_bruteforce, irrelevant_ideal, minimal_nonfaces
from .errors import (
    FanError,
    InvalidParameters,
    MalformedInput,
    NotAFace,
    NotSmoothProper,
    TooSmall,
)
from .fan import Fan, hirzebruch, kleinschmidt, projective_space, star_subdivision, validate
from .homotopy import (
    CoxCoverStats,
    FirstHigher,
    HomotopyReport,
    analyze,
    group_from_json,
    group_to_json,
    render,
)


def _load_fan(source: str) -> Fan:
    try:
        if source == "-":
            text = sys.stdin.read()
        else:
            with open(source, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise MalformedInput(f"cannot read {source}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"not valid JSON: {exc}") from exc
    return Fan.from_json_dict(data)


def report_to_json_dict(report: HomotopyReport) -> dict:
    return {
        "variety": report.variety,
        "version": report.version,
        "connected": report.connected,
        "cox": {
            "ambient": report.cox.ambient,
            "codim": report.cox.codim,
            "count": report.cox.count,
            "pairwise_ok": report.cox.pairwise_ok,
        },
        "pi1": group_to_json(report.pi1),
        "vanishing": list(report.vanishing),
        "first_higher": {
            "degree": report.first_higher.degree,
            "group": group_to_json(report.first_higher.group),
        },
        "notes": list(report.notes),
    }


def report_from_json_dict(data: object) -> HomotopyReport:
    if not isinstance(data, dict):
        raise MalformedInput("report JSON must be an object")
    expected = {
        "variety",
        "version",
        "connected",
        "cox",
        "pi1",
        "vanishing",
        "first_higher",
        "notes",
    }
    if set(data) != expected:
        raise MalformedInput(f"report keys must be {sorted(expected)}, got {sorted(data)}")
    try:
        cox = data["cox"]
        fh = data["first_higher"]
        lo, hi = data["vanishing"]
        return HomotopyReport(
            variety=str(data["variety"]),
            version=str(data["version"]),
            connected=bool(data["connected"]),
            cox=CoxCoverStats(
                ambient=int(cox["ambient"]),
                codim=int(cox["codim"]),
                count=int(cox["count"]),
                pairwise_ok=bool(cox["pairwise_ok"]),
            ),
            pi1=group_from_json(data["pi1"]),
            vanishing=(int(lo), int(hi)),
            first_higher=FirstHigher(
                degree=int(fh["degree"]), group=group_from_json(fh["group"])
            ),
            notes=tuple(str(n) for n in data["notes"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedInput(f"bad report JSON: {exc}") from exc


def _report_text(report: HomotopyReport) -> str:
    lo, hi = report.vanishing
    vanish = f"pi_i = 0 for {lo} <= i <= {hi}" if lo <= hi else f"none (range [{lo}, {hi}] empty)"
    lines = [
        f"variety: {report.variety}",
        f"version: {report.version}",
        f"connected: {'yes' if report.connected else 'no'}",
        f"cox cover: ambient {report.cox.ambient}, smallest non-face size {report.cox.codim}, "
        f"count {report.cox.count}, pairwise ok: {'yes' if report.cox.pairwise_ok else 'no'}",
        f"pi1: {render(report.pi1)}",
        f"vanishing: {vanish}",
        f"first higher: degree {report.first_higher.degree}: {render(report.first_higher.group)}",
        "notes:",
    ]
    lines.extend(f"  - {note}" for note in report.notes)
    return "\n".join(lines)


def _emit_fan(fan: Fan) -> int:
    print(json.dumps(fan.to_json_dict(), sort_keys=True, indent=2))
    return 0


def _cmd_validate(args: argparse.Namespace) -> int:
    fan = _load_fan(args.fan)
    rep = validate(fan)
    print(f"valid fan: {'yes' if rep.is_valid_fan else 'no'}")
    print(f"smooth: {'yes' if rep.is_smooth else 'no'}")
    print(f"complete: {'yes' if rep.is_complete else 'no'}")
    for finding in rep.failures:
        detail = f": {finding.detail}" if finding.detail else ""
        print(f"finding: {finding.kind} at {finding.indices}{detail}")
    return 0 if rep.is_valid_fan and rep.is_smooth and rep.is_complete else 1


def _cmd_analyze(args: argparse.Namespace) -> int:
    fan = _load_fan(args.fan)
    report = analyze(fan)
    if args.json:
        print(json.dumps(report_to_json_dict(report), sort_keys=True, indent=2))
    else:
        print(_report_text(report))
    return 0


def _cmd_construct(args: argparse.Namespace) -> int:
    if args.family == "pn":
        return _emit_fan(projective_space(args.n))
    if args.family == "hirzebruch":
        return _emit_fan(hirzebruch(args.a))
    if args.family == "kleinschmidt":
        return _emit_fan(kleinschmidt(args.d, args.a))
    raise AssertionError(f"unknown family {args.family}")


def _parse_cone(text: str) -> tuple[int, ...]:
    try:
        indices = tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise InvalidParameters(f"--cone wants comma-separated integers, got {text!r}") from exc
    if not indices:
        raise InvalidParameters("--cone must name at least one ray")
    return indices


def _cmd_blowup(args: argparse.Namespace) -> int:
    fan = _load_fan(args.fan)
    return _emit_fan(star_subdivision(fan, _parse_cone(args.cone)))


def _cmd_oracle_check(args: argparse.Namespace) -> int:
    fan = _load_fan(args.fan)
    rep = validate(fan)
    if not rep.is_valid_fan:
        kinds = sorted({f.kind for f in rep.failures})
        raise NotSmoothProper(f"oracle check needs a valid fan; findings: {kinds}")
    failures = 0

    direct = arrangement(fan)
    brute = arrangement_bruteforce(irrelevant_ideal(fan))
    if direct == brute:
        print(f"PASS arrangement-vs-ideal: {len(direct.components)} component(s) agree")
    else:
        failures += 1
        print("FAIL arrangement-vs-ideal:")
        print(f"  direct: {direct.components}")
        print(f"  from ideal: {brute.components}")

    if not direct.components:
        print("PASS pairwise-vs-completion: no non-faces, trivially equal")
    else:
        d = min(len(c) for c in direct.components)
        comps_d = [c for c in direct.components if len(c) == d]
        pair_form = all(
            len(set(a) & set(b)) <= d - 2 for a, b in combinations(comps_d, 2)
        )
        counts = Counter(sub for c in comps_d for sub in combinations(c, d - 1))
        completion_form = all(v <= 1 for v in counts.values())
        if pair_form == completion_form:
            print(
                f"PASS pairwise-vs-completion: both say {pair_form} "
                f"for {len(comps_d)} component(s) of size {d}"
            )
        else:
            failures += 1
            print(
                f"FAIL pairwise-vs-completion: pair form {pair_form}, "
                f"completion form {completion_form}"
            )
    return 3 if failures else 0


def _cmd_nonface_scan(args: argparse.Namespace) -> int:
    fan = _load_fan(args.fan)
    rep = validate(fan)
    if not rep.is_valid_fan:
        kinds = sorted({f.kind for f in rep.failures})
        raise NotSmoothProper(f"non-face scan needs a valid fan; findings: {kinds}")
    nonfaces = minimal_nonfaces(fan)
    print(f"minimal non-faces: {len(nonfaces)}")
    by_size: dict[int, list[tuple[int, ...]]] = {}
    for nf in nonfaces:
        by_size.setdefault(len(nf), []).append(nf)
    for size in sorted(by_size):
        listing = ", ".join(str(nf) for nf in by_size[size])
        print(f"  size {size}: {listing}")
    if nonfaces:
        smallest = min(by_size)
        print(f"smallest size: {smallest}")
        print(f"every ray pair spans a cone: {'yes' if smallest >= 3 else 'no'}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fancox",
        description="Cox quotient presentations and symbolic homotopy reports for smooth proper toric fans.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a fan and list findings")
    p.add_argument("fan", help="fan JSON path, or - for stdin")
    p.set_defaults(handler=_cmd_validate)

    p = sub.add_parser("analyze", help="symbolic homotopy report")
    p.add_argument("fan", help="fan JSON path, or - for stdin")
    p.add_argument("--json", action="store_true", help="emit the report as JSON")
    p.set_defaults(handler=_cmd_analyze)

    p = sub.add_parser("construct", help="emit a built-in fan as JSON")
    fam = p.add_subparsers(dest="family", required=True)
    q = fam.add_parser("pn", help="projective space of dimension n")
    q.add_argument("n", type=int)
    q = fam.add_parser("hirzebruch", help="Hirzebruch surface of parameter a")
    q.add_argument("a", type=int)
    q = fam.add_parser("kleinschmidt", help="projectivized split bundle fan, d then weights")
    q.add_argument("d", type=int)
    q.add_argument("a", type=int, nargs="+", help="non-decreasing weights a_1..a_r")
    p.set_defaults(handler=_cmd_construct)

    p = sub.add_parser("blowup", help="star subdivision at a cone")
    p.add_argument("fan", help="fan JSON path, or - for stdin")
    p.add_argument("--cone", required=True, help="comma-separated ray indices, e.g. 0,2")
    p.set_defaults(handler=_cmd_blowup)

    p = sub.add_parser("oracle-check", help="compare independent combinatorial routes")
    p.add_argument("fan", help="fan JSON path, or - for stdin")
    p.set_defaults(handler=_cmd_oracle_check)

    p = sub.add_parser("nonface-scan", help="list minimal non-faces by size")
    p.add_argument("fan", help="fan JSON path, or - for stdin")
    p.set_defaults(handler=_cmd_nonface_scan)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except MalformedInput as exc:
        print(f"error: malformed input: {exc}", file=sys.stderr)
        return 2
    except (InvalidParameters, NotAFace, TooSmall) as exc:
        print(f"error: bad parameters: {exc}", file=sys.stderr)
        return 2
    except NotSmoothProper as exc:
        print(f"error: not smooth proper: {exc}", file=sys.stderr)
        return 1
    except FanError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3


def run() -> None:
    sys.exit(main())
