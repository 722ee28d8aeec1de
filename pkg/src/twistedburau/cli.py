"""Command-line interface: ``twistedburau {burau,reduced,torsion,verify,alexander,selftest}``.

Exit codes: 0 success or pass, 1 verification mismatch, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from .burau import burau_by_letters, burau_reduced, burau_unreduced
from .laurent import (LaurentPoly, PolynomialSyntaxError, RationalFunction, UnknownVariableError,
                      format_poly, normalize)
from .matrices import RingMatrix
from .representation import Representation, RepresentationError, load_representation
from .suite import run_selftest
from .torsion import (ColoringError, NotExtendableError, TorsionResult, alexander_untwisted,
                      torsion_from_burau, verify_main_theorem, wada_invariant)
from .words import ColoredBraidWord, parse_braid

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


@dataclass
class JobSpec:
    command: str
    letters: tuple[int, ...] = ()
    colors: tuple[int, ...] = ()
    rep: Representation | None = None
    options: dict = field(default_factory=dict)

    @property
    def n(self) -> int:
        return len(self.colors)

    def braid(self) -> ColoredBraidWord:
        return ColoredBraidWord(self.n, self.letters, self.colors)

    def representation(self) -> Representation:
        return self.rep or Representation.trivial(self.n)


def parse_colors(text: str) -> tuple[int, ...]:
    try:
        colors = tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise InputError(f"colors must be comma-separated integers, got {text!r}") from None
    if not colors:
        raise InputError("empty coloring")
    if min(colors) < 1 or set(colors) != set(range(1, max(colors) + 1)):
        raise InputError(f"coloring {colors} is not surjective onto 1..{max(colors)}")
    return colors


def build_job(args: argparse.Namespace) -> JobSpec:
    try:
        letters = parse_braid(args.braid)
    except ValueError as exc:
        raise InputError(f"braid: {exc}") from None
    rep = None
    if getattr(args, "rep", None):
        try:
            rep = load_representation(args.rep)
        except (OSError, json.JSONDecodeError) as exc:
            raise InputError(f"cannot read representation: {exc}") from None
    if args.colors:
        colors = parse_colors(args.colors)
    else:
        n = rep.n if rep else max([abs(a) + 1 for a in letters], default=1)
        colors = (1,) * n
    n = len(colors)
    if rep is not None and rep.n != n:
        raise InputError(f"representation has {rep.n} generators but the coloring has {n} strands")
    if letters and max(abs(a) for a in letters) >= n:
        raise InputError(f"braid uses s{max(abs(a) for a in letters)} but has only {n} strands")
    for flag in ("drop_relator", "drop_column"):
        value = getattr(args, flag, None)
        if value is not None and not 1 <= value <= n:
            raise InputError(f"--{flag.replace('_', '-')} must lie in 1..{n}")
    return JobSpec(args.command, letters, colors, rep, vars(args))


# output ----------------------------------------------------------------------

def _fraction_json(value: RationalFunction, normalized: bool) -> dict:
    num, den = value.numerator, value.denominator
    q = value.as_poly()
    if q is not None:
        num, den = q, LaurentPoly.one(value.registry)
    if normalized:
        num, den = normalize(num), normalize(den)
    return {"numerator": format_poly(num), "denominator": format_poly(den)}


def _torsion_json(result: TorsionResult, normalize_units: bool) -> dict:
    out = {"route": result.route, "raw": _fraction_json(result.value, False), "notes": result.notes}
    if normalize_units:
        out["normal_form"] = _fraction_json(result.value, True)
    return out


def _torsion_text(result: TorsionResult, normalize_units: bool) -> str:
    lines = [f"{result.route}: {result.value}"]
    if normalize_units:
        lines.append(f"  normalized: {result.normal_form()}")
    lines += [f"  note: {note}" for note in result.notes]
    return "\n".join(lines)


def emit(job: JobSpec, payload: dict, text: str) -> None:
    if job.options.get("format") == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def emit_matrix(job: JobSpec, m: RingMatrix, label: str) -> None:
    emit(job, {"command": job.command, "braid": job.options["braid"], "colors": list(job.colors),
               "matrix": m.to_lists()}, f"{label}\n{m}")


# commands --------------------------------------------------------------------

def cmd_burau(job: JobSpec) -> int:
    beta = job.braid()
    if job.options.get("letterwise"):
        m = burau_by_letters(job.representation(), beta).matrix
    else:
        m = burau_unreduced(job.representation(), beta).matrix
    emit_matrix(job, m, f"twisted Burau matrix of {beta} (bottom colors {beta.bottom_colors()})")
    return EXIT_OK


def cmd_reduced(job: JobSpec) -> int:
    beta = job.braid()
    m = burau_reduced(job.representation(), beta).matrix
    emit_matrix(job, m, f"reduced twisted Burau matrix of {beta}")
    return EXIT_OK


def cmd_torsion(job: JobSpec) -> int:
    rep, beta = job.representation(), job.braid()
    route = job.options.get("route") or "both"
    norm = not job.options.get("no_normalize")
    results = []
    if route in ("wada", "both"):
        results.append(wada_invariant(rep, beta, job.options.get("drop_relator"),
                                      job.options.get("drop_column")))
    if route in ("burau", "both"):
        results.append(torsion_from_burau(rep, beta))
    emit(job, {"command": "torsion", "results": [_torsion_json(r, norm) for r in results]},
         "\n".join(_torsion_text(r, norm) for r in results))
    return EXIT_OK


def cmd_alexander(job: JobSpec) -> int:
    beta = job.braid()
    result = alexander_untwisted(beta)
    norm = not job.options.get("no_normalize")
    label = "Alexander polynomial" if beta.mu == 1 else "torsion (multivariable)"
    emit(job, {"command": "alexander", "result": _torsion_json(result, norm)},
         f"{label}\n" + _torsion_text(result, norm))
    return EXIT_OK


def cmd_verify(job: JobSpec) -> int:
    report = verify_main_theorem(job.representation(), job.braid(),
                                 job.options.get("drop_relator"), job.options.get("drop_column"))
    payload = {"command": "verify", "verdict": report.verdict, "extendable": report.extendable,
               "detail": report.detail, "failing_generators": list(report.failing_generators),
               "timings": report.timings}
    lines = [f"verdict: {report.verdict}", f"detail: {report.detail}"]
    if report.torsion is not None:
        payload["torsion"] = _fraction_json(report.torsion, False)
        payload["torsion_normal_form"] = _fraction_json(report.torsion, True)
        payload["lhs"] = _fraction_json(report.lhs, False)
        payload["rhs"] = _fraction_json(report.rhs, False)
        lines += [f"torsion: {report.torsion}",
                  f"torsion normalized: {report.torsion.normal_form()}",
                  f"lhs: {report.lhs}", f"rhs: {report.rhs}"]
    if report.witness is not None:
        payload["witness"] = format_poly(report.witness.as_poly())
    emit(job, payload, "\n".join(lines))
    if report.passed:
        return EXIT_OK
    if report.verdict == "not applicable" and job.options.get("allow_nonextendable"):
        return EXIT_OK
    return EXIT_MISMATCH


def cmd_selftest(args: argparse.Namespace) -> int:
    summary = run_selftest(args.seed, args.cases, args.pairs)
    if args.format == "json":
        print(json.dumps({"checks": summary.checks, "failures": summary.failures,
                          "elapsed": summary.elapsed}, indent=2))
    else:
        print("\n".join(summary.lines()))
    return EXIT_OK if summary.ok else EXIT_MISMATCH


COMMANDS = {
    "burau": cmd_burau,
    "reduced": cmd_reduced,
    "torsion": cmd_torsion,
    "verify": cmd_verify,
    "alexander": cmd_alexander,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twistedburau",
        description="Twisted Burau matrices and twisted torsion of colored braid closures.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--braid", default="", metavar="TEXT",
                        help='braid word such as "s1 s2^-1 s1" (empty for the identity)')
    common.add_argument("--colors", metavar="LIST", help="comma-separated colors, e.g. 1,2,1")
    common.add_argument("--rep", metavar="PATH", help="representation JSON file (default: trivial)")
    common.add_argument("--format", choices=("pretty", "json"), default="pretty")
    common.add_argument("--no-normalize", action="store_true",
                        help="skip the unit-normalized form of torsion values")

    drops = argparse.ArgumentParser(add_help=False)
    drops.add_argument("--drop-relator", type=int, metavar="I")
    drops.add_argument("--drop-column", type=int, metavar="J")

    p = sub.add_parser("burau", parents=[common], help="unreduced twisted Burau matrix")
    p.add_argument("--letterwise", action="store_true",
                   help="multiply generator blocks instead of using Fox calculus")
    sub.add_parser("reduced", parents=[common], help="reduced twisted Burau matrix")
    p = sub.add_parser("torsion", parents=[common, drops], help="twisted torsion of the closure")
    p.add_argument("--route", choices=("wada", "burau", "both"), default="both")
    p = sub.add_parser("verify", parents=[common, drops],
                       help="check the torsion identity between the two routes")
    p.add_argument("--allow-nonextendable", action="store_true",
                   help="exit 0 when the representation does not extend")
    sub.add_parser("alexander", parents=[common], help="untwisted Alexander polynomial")
    p = sub.add_parser("selftest", help="randomized cross-route checks")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=40, help="number of extendable cases")
    p.add_argument("--pairs", type=int, default=200, help="number of cocycle pairs")
    p.add_argument("--format", choices=("pretty", "json"), default="pretty")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "selftest":
        return cmd_selftest(args)
    try:
        job = build_job(args)
        return COMMANDS[args.command](job)
    except (InputError, PolynomialSyntaxError, UnknownVariableError, RepresentationError,
            ColoringError, NotExtendableError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ArithmeticError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
