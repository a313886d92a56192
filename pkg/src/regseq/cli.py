"""Command-line front end.

Subcommands: ``check``, ``powersum``, ``roots``, ``perturb``. Each run emits
exactly one report (text, or JSON with ``--json``). Exit codes: 0 ok,
2 error, 3 inconclusive, 4 matrix-size cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from math import factorial, gcd
from typing import Sequence

from .macaulay import DEFAULT_MAX_P, is_regular_sequence
from .parser import ParseError, format_polynomial, parse_polynomials
from .perturb import DEFAULT_PRECISION, near_powers_certificate
from .poly import Polynomial
from .powersum import (
    APSpec,
    ExponentSet,
    ap_certificate,
    as_arithmetic_progression,
    necessary_condition,
    normalize_exponents,
    power_sum,
    power_sums,
    vanishing_sum_search,
    witness_search,
)
from .report import Inconclusive, MatrixTooLarge, Method, RegSeqError, RegularityReport, SearchTooLarge, Verdict

EXIT_OK, EXIT_ERROR, EXIT_INCONCLUSIVE, EXIT_SIZE_CAP = 0, 2, 3, 4


@dataclass
class Report:
    command: str
    inputs: list[str] = field(default_factory=list)
    verdict: str = ""
    method: str = ""
    evidence: dict = field(default_factory=dict)
    status: str = "ok"
    exit_code: int = field(default=EXIT_OK, repr=False)

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "verdict": self.verdict,
            "method": self.method,
            "evidence": self.evidence,
            "status": self.status,
        }

    def fail(self, message: str, *, status: str = "error", code: int = EXIT_ERROR, **extra) -> "Report":
        self.status = status
        self.exit_code = code
        self.evidence["error"] = message
        self.evidence.update(extra)
        return self

    def render(self) -> str:
        lines = [f"command: {self.command}"]
        lines += [f"input: {s}" for s in self.inputs]
        if self.verdict:
            lines.append(f"verdict: {self.verdict}" + (f" ({self.method})" if self.method else ""))
        for key, value in self.evidence.items():
            lines.append(f"{key}: {value}")
        lines.append(f"status: {self.status}")
        return "\n".join(lines)


def _apply(report: Report, result: RegularityReport) -> None:
    report.verdict = result.verdict.value
    report.method = result.method.value
    if result.method is Method.MACAULAY_RANK:
        report.evidence.update({"N": result.N, "p": result.p, "q": result.q, "rank": result.rank})
    report.evidence.update(result.evidence)
    if result.notes:
        report.evidence["notes"] = result.notes


def _read_polys(path: str, nvars: int | None) -> list[Polynomial]:
    if path == "-":
        lines = sys.stdin.read().splitlines()
    else:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    return parse_polynomials(lines, nvars)


def _power_sum_exponents(fs: Sequence[Polynomial]) -> ExponentSet | None:
    """Exponent set when ``fs`` is p_A(n) up to order, else None."""
    n = fs[0].num_vars
    try:
        degs = sorted(f.homogeneous_degree() for f in fs)
        if len(set(degs)) != len(degs):
            return None
        if all(f == power_sum(n, f.homogeneous_degree()) for f in fs):
            return ExponentSet(degs)
    except (ValueError, RegSeqError):
        return None
    return None


def _certify(fs: Sequence[Polynomial], precision: int, report: Report) -> RegularityReport | None:
    try:
        cert = near_powers_certificate(fs, precision)
        report.evidence["distances"] = [str(e.distance) for e in cert.per_poly]
        if cert.certified:
            return cert.to_report()
    except Inconclusive as exc:
        report.evidence["near_powers"] = f"inconclusive: {exc}"
    A = _power_sum_exponents(fs)
    if A is None:
        return None
    if not necessary_condition(A):
        n = len(A)
        return RegularityReport(
            Verdict.NOT_REGULAR,
            Method.NECESSARY_CONDITION_FAILED,
            notes=f"{n}! does not divide the product of {list(A)}",
        )
    ap = as_arithmetic_progression(normalize_exponents(A))
    if ap is not None:
        result = ap_certificate(ap)
        if result.verdict is not Verdict.NOT_CERTIFIED:
            return result
    return None


def _run_macaulay(fs, max_p: int, report: Report) -> RegularityReport | None:
    try:
        return is_regular_sequence(fs, max_p=max_p)
    except MatrixTooLarge as exc:
        report.fail(str(exc), code=EXIT_SIZE_CAP, p=exc.p, max_p=exc.max_p)
        return None


def cmd_check(args) -> Report:
    report = Report("check")
    fs = _read_polys(args.file, args.nvars)
    report.inputs = [format_polynomial(f) for f in fs]
    if not fs:
        return report.fail("no polynomials in input")
    if len(fs) != fs[0].num_vars:
        return report.fail(f"sequence length {len(fs)} != number of variables {fs[0].num_vars}")
    if args.certify_first:
        result = _certify(fs, args.precision, report)
        if result is not None:
            _apply(report, result)
            return report
    result = _run_macaulay(fs, args.max_p, report)
    if result is not None:
        _apply(report, result)
    return report


def _parse_witness_flag(text: str) -> int:
    value = text.split("=", 1)[1] if "=" in text else text
    m = int(value)
    if m < 1:
        raise ValueError("witness-search order must be positive")
    return m


def cmd_powersum(args) -> Report:
    report = Report("powersum")
    if args.ap is not None:
        spec = APSpec(*args.ap)
        A = spec.exponents()
    else:
        A = ExponentSet(sorted(int(x) for x in args.set.replace(" ", "").split(",") if x))
        spec = None
    n = len(A)
    report.inputs = [f"A = {list(A)}", f"n = {n}"] + [format_polynomial(f) for f in power_sums(A)]
    normalized = normalize_exponents(A)
    report.evidence["normalized"] = list(normalized)
    report.evidence["necessary_condition"] = necessary_condition(A)
    decisions: list[RegularityReport] = []
    if not necessary_condition(A):
        decisions.append(
            RegularityReport(
                Verdict.NOT_REGULAR,
                Method.NECESSARY_CONDITION_FAILED,
                notes=f"{n}! = {factorial(n)} does not divide the product of {list(A)}",
            )
        )
    ap = as_arithmetic_progression(normalized) if n >= 2 else None
    if ap is not None:
        cert = ap_certificate(ap)
        report.evidence["ap"] = {"a": ap.a, "d": ap.d, "n": ap.n}
        if cert.verdict is Verdict.REGULAR or (cert.verdict is Verdict.NOT_REGULAR and not decisions):
            decisions.append(cert)
    if args.witness_search is not None:
        m = _parse_witness_flag(args.witness_search)
        w = witness_search(A, m)
        if w is not None:
            report.evidence["witness"] = {"m": w.m, "exponents": list(w.exponents)}
            decisions.append(
                RegularityReport(
                    Verdict.NOT_REGULAR,
                    Method.ROOT_OF_UNITY_WITNESS,
                    notes=f"common zero with coordinates zeta_{m}^e, e = {list(w.exponents)}",
                )
            )
        else:
            report.evidence["witness"] = None
    if args.macaulay:
        result = _run_macaulay(power_sums(A), args.max_p, report)
        if result is None:
            return report
        report.evidence.update({"N": result.N, "p": result.p, "q": result.q, "rank": result.rank})
        decisions.append(result)
    if not decisions:
        report.verdict = Verdict.NOT_CERTIFIED.value
        report.evidence["notes"] = "no certificate applies; try --macaulay or --witness-search"
        return report
    verdicts = {d.verdict for d in decisions}
    if len(verdicts) > 1:
        return report.fail("certificate and Macaulay check disagree", methods=[d.method.value for d in decisions])
    first = decisions[0]
    report.verdict = first.verdict.value
    report.method = first.method.value
    if first.notes:
        report.evidence["notes"] = first.notes
    if len(decisions) > 1:
        report.evidence["confirmed_by"] = [d.method.value for d in decisions[1:]]
    return report


def cmd_roots(args) -> Report:
    report = Report("roots", inputs=[f"n = {args.n}", f"m = {args.m}"])
    w = vanishing_sum_search(args.n, args.m, cap=args.cap)
    g = gcd(args.m, factorial(args.n))
    report.method = "ExhaustiveCyclotomicSearch"
    report.evidence["gcd_m_nfact"] = g
    report.evidence["coprime_predicts_none"] = g == 1
    if w is None:
        report.verdict = "NoVanishingSum"
        report.evidence["witness"] = None
    else:
        report.verdict = "VanishingSumFound"
        report.evidence["witness"] = list(w.exponents)
    return report


def cmd_perturb(args) -> Report:
    report = Report("perturb")
    fs = _read_polys(args.file, args.nvars)
    report.inputs = [format_polynomial(f) for f in fs]
    if not fs:
        return report.fail("no polynomials in input")
    if len(fs) != fs[0].num_vars:
        return report.fail(f"sequence length {len(fs)} != number of variables {fs[0].num_vars}")
    try:
        cert = near_powers_certificate(fs, args.precision)
    except Inconclusive as exc:
        if not args.fallback:
            return report.fail(str(exc), status="inconclusive", code=EXIT_INCONCLUSIVE)
        report.evidence["near_powers"] = f"inconclusive: {exc}"
        cert = None
    if cert is not None:
        report.evidence["distances"] = [
            {"index": e.index, "distance": str(e.distance), "below_one": e.strict_below_one} for e in cert.per_poly
        ]
        report.evidence["certified"] = cert.certified
        if cert.certified or not args.fallback:
            report.verdict = (Verdict.REGULAR if cert.certified else Verdict.NOT_CERTIFIED).value
            report.method = Method.NEAR_POWERS_CERTIFICATE.value
            return report
    result = _run_macaulay(fs, args.max_p, report)
    if result is not None:
        _apply(report, result)
        report.evidence["fallback"] = True
    return report


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON document")
    common.add_argument("--max-p", type=int, default=DEFAULT_MAX_P, help="row cap for Macaulay matrices")
    common.add_argument("--precision", type=int, default=DEFAULT_PRECISION, help="enclosure precision in bits")

    parser = argparse.ArgumentParser(prog="regseq", description="Exact checks for regular sequences of forms.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="decide regularity with the Macaulay matrix")
    p.add_argument("file", help="one polynomial per line ('-' for stdin)")
    p.add_argument("--nvars", type=int, default=None)
    p.add_argument("--certify-first", action="store_true", help="try the fast certificates before the matrix")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("powersum", parents=[common], help="power-sum sequences p_A(n)")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--set", help="comma-separated exponents, e.g. 1,3,5,24")
    g.add_argument("--ap", nargs=3, type=int, metavar=("A", "D", "N"), help="progression a, a+d, ..., n terms")
    p.add_argument("--macaulay", action="store_true", help="also run the general check")
    p.add_argument("--witness-search", metavar="m=M", help="search m-th roots of unity for a common zero")
    p.set_defaults(func=cmd_powersum)

    p = sub.add_parser("roots", parents=[common], help="search for vanishing sums of n m-th roots of unity")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("--cap", type=int, default=5_000_000)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("perturb", parents=[common], help="distance-to-pure-powers certificate")
    p.add_argument("file")
    p.add_argument("--nvars", type=int, default=None)
    p.add_argument("--fallback", action="store_true", help="run the Macaulay check when not certified")
    p.set_defaults(func=cmd_perturb)
    return parser


def execute(args: argparse.Namespace) -> Report:
    """Run a parsed command; every failure becomes an error report."""
    start = time.perf_counter()
    try:
        report = args.func(args)
    except ParseError as exc:
        report = Report(args.command).fail(str(exc), position=exc.position, line=exc.line)
    except (SearchTooLarge, MatrixTooLarge) as exc:
        report = Report(args.command).fail(str(exc), code=EXIT_SIZE_CAP)
    except (RegSeqError, ValueError, OSError) as exc:
        report = Report(args.command).fail(str(exc))
    report.evidence["timings"] = {"total_ms": int(round((time.perf_counter() - start) * 1000))}
    return report


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    report = execute(args)
    if args.json:
        print(json.dumps(report.to_dict(), indent=2))
    else:
        print(report.render())
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
