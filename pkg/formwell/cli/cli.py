"""
Command-line front end.

Exit codes: 0 when the computation ran (whatever its verdict), 2 for usage,
input and validation errors, 3 for internal invariant failures.
"""

import argparse
import contextlib
import math
import sys
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, TextIO

from colorama import just_fix_windows_console
from pydantic import BaseModel

from formwell import __version__
from formwell.core.errors import FormwellError, InvariantViolation, ParseError
from formwell.core.forms.calculus import ext_d
from formwell.core.hodge.metric import get_metric
from formwell.core.hodge.operators import duality_split, star, table_report
from formwell.core.lang.parser import parse_expr, parse_form
from formwell.core.lang.problem import ProblemSpec, read_problem
from formwell.core.maxwell.conditions import LorenzShift, condition_for, is_hl_harmonic, lorenz, lorenz_normalize
from formwell.core.maxwell.fields import curvature, eb_fields, eb_inner, energy, faraday_components
from formwell.core.maxwell.potential import gauge_transform
from formwell.core.maxwell.verify import current, form_terms, to_output, verify_vacuum
from formwell.core.models.models import (
    EvalOutput,
    FieldsOutput,
    GaugeOutput,
    LorenzOutput,
    MetricKind,
    StarOutput,
    StarTableOutput,
    VerificationReportOutput,
)
from formwell.core.numeric.finite_diff import RealPoint, check_wirtinger
from formwell.core.poly.operators import dalembert, laplace4
from formwell.core.poly.poly import Poly
from formwell.utils._pydantic import model_dump_json
from formwell.utils.cli_helper import verdict, write_table
from formwell.utils.logger import logger, set_log_level

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INTERNAL = 3

LOG_LEVELS = ("debug", "info", "warning", "error", "critical")
COMPONENT_NAMES = ("F12", "F1b2b", "F11b", "F22b", "F12b", "F21b")


class UsageError(Exception):
    pass


class _Exit(Exception):
    def __init__(self, status: int):
        self.status = status


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: error: {message}")

    def exit(self, status: int = 0, message: Optional[str] = None):
        if message:
            sys.stderr.write(message)
        raise _Exit(status)


class _SourceError(Exception):
    """A ParseError tagged with the name of the text it came from."""

    def __init__(self, source: str, error: ParseError):
        super().__init__(f"{source}:{error}")


def build_parser() -> argparse.ArgumentParser:
    # --json is accepted before or after the subcommand
    common = _ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON")

    parser = _ArgumentParser(prog="formwell", description="Exact complex differential forms on C^2.")
    parser.add_argument("--json", action="store_true", default=False, help="emit JSON")
    parser.add_argument("--log-level", default=None, choices=LOG_LEVELS, type=str.lower, help="log verbosity")
    parser.add_argument("--version", action="store_true", help="print the version and exit")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")

    p = sub.add_parser("verify", parents=[common], help="check the vacuum Maxwell criteria for a problem file")
    p.add_argument("file")
    p = sub.add_parser("fields", parents=[common], help="Faraday form, E, B, current and duality split")
    p.add_argument("file")
    p = sub.add_parser("star", parents=[common], help="apply the Hodge star to a form")
    p.add_argument("metric", choices=[m.value for m in MetricKind])
    p.add_argument("form")
    p = sub.add_parser("tables", parents=[common], help="list the star table with provenance")
    p.add_argument("metric", choices=[m.value for m in MetricKind])
    p.add_argument("--real", action="store_true", help="list the real-basis entries")
    p = sub.add_parser("gauge", parents=[common], help="apply a gauge transformation")
    p.add_argument("file")
    p.add_argument("u", nargs="?", default=None)
    p = sub.add_parser("lorenz", parents=[common], help="codifferential of the potential and its normalization")
    p.add_argument("file")
    p.add_argument(
        "--shift",
        choices=[s.value for s in LorenzShift],
        default=LorenzShift.GAUGE.value,
        help="normalize by a gauge change (keeps F) or by shifting f1 alone",
    )
    p = sub.add_parser("eval", parents=[common], help="numeric E, B and Wirtinger checks at a point")
    p.add_argument("file")
    p.add_argument("--at", required=True, metavar="x0,x1,x2,x3")
    return parser


def _load(path: str) -> ProblemSpec:
    try:
        return read_problem(path)
    except ParseError as exc:
        raise _SourceError(path, exc) from exc


def _parse_arg(source: str, parse: Callable, text: str):
    try:
        return parse(text)
    except ParseError as exc:
        raise _SourceError(f"<{source}>", exc) from exc


def _parse_point(text: str) -> RealPoint:
    parts = text.split(",")
    if len(parts) != 4:
        raise UsageError(f"--at expects four comma-separated numbers, got {text!r}")
    try:
        values = [float(p) for p in parts]
    except ValueError:
        raise UsageError(f"--at expects four comma-separated numbers, got {text!r}") from None
    if not all(math.isfinite(v) for v in values):
        raise UsageError(f"--at values must be finite, got {text!r}")
    return RealPoint(*values)


# commands


def cmd_verify(args) -> VerificationReportOutput:
    spec = _load(args.file)
    return to_output(verify_vacuum(spec.potential, get_metric(spec.metric)))


def cmd_fields(args) -> FieldsOutput:
    spec = _load(args.file)
    m = get_metric(spec.metric)
    F = curvature(spec.potential)
    eb = eb_fields(F)
    j = current(spec.potential, m)
    plus, minus = duality_split(F, m)
    return FieldsOutput(
        metric=m.kind,
        F=form_terms(F),
        components=dict(zip(COMPONENT_NAMES, (p.render() for p in faraday_components(F).as_tuple()))),
        E=[p.render() for p in eb.E],
        B=[p.render() for p in eb.B],
        eb_inner=eb_inner(F).render(),
        energy=energy(F).render(),
        current={"P1": j.P1.render(), "Pb1": j.Pb1.render(), "P2": j.P2.render(), "Pb2": j.Pb2.render()},
        rho=j.rho.render(),
        J=[j.J1.render(), j.J2.render(), j.J3.render()],
        self_dual_part=form_terms(plus),
        anti_self_dual_part=form_terms(minus),
    )


def cmd_star(args) -> StarOutput:
    f = _parse_arg("form", parse_form, args.form)
    m = get_metric(MetricKind(args.metric))
    return StarOutput(metric=m.kind, input=f.render(), output=star(f, m).render())


def cmd_tables(args) -> StarTableOutput:
    return table_report(get_metric(MetricKind(args.metric)), real=args.real)


def cmd_gauge(args) -> GaugeOutput:
    spec = _load(args.file)
    if args.u is not None:
        u = _parse_arg("u", parse_expr, args.u)
    elif spec.gauge is not None:
        u = spec.gauge
    else:
        raise UsageError(f"no gauge function: pass U or set 'gauge' in {args.file}")
    m = get_metric(spec.metric)
    w = spec.potential
    transformed = gauge_transform(w, u)
    invariant = curvature(transformed) == curvature(w)
    shift = condition_for(transformed, m).sum - condition_for(w, m).sum
    expected = (laplace4(u) if m.kind is MetricKind.EUCLIDEAN else dalembert(u)).scale(Fraction(1, 2))
    if not invariant:
        raise InvariantViolation("curvature changed under a gauge transformation")
    if shift != expected:
        raise InvariantViolation(f"condition shift {shift} differs from {expected}")
    return GaugeOutput(
        metric=m.kind,
        u=u.render(),
        potential=list(transformed.render()),
        curvature_invariant=invariant,
        condition_shift=shift.render(),
        expected_shift=expected.render(),
    )


def cmd_lorenz(args) -> LorenzOutput:
    spec = _load(args.file)
    m = get_metric(spec.metric)
    value, constant = lorenz(spec.potential, m)
    output = LorenzOutput(
        metric=m.kind,
        codifferential=value.render(),
        constant=None if constant is None else Poly.constant(constant).render(),
        hodge_harmonic=is_hl_harmonic(spec.potential, m),
    )
    if constant is not None:
        normalized = lorenz_normalize(spec.potential, m, LorenzShift(args.shift))
        output.normalized_potential = list(normalized.render())
        output.normalized_codifferential = lorenz(normalized, m).sum.render()
    return output


def cmd_eval(args) -> EvalOutput:
    point = _parse_point(args.at)
    spec = _load(args.file)
    eb = eb_fields(curvature(spec.potential))
    values = point.to_complex_point().slot_values()

    def pair(p) -> List[float]:
        z = p.evaluate(values)
        return [z.real, z.imag]

    return EvalOutput(
        point=list(point),
        E=[pair(p) for p in eb.E],
        B=[pair(p) for p in eb.B],
        wirtinger=[check_wirtinger(f, point) for f in spec.potential.functions],
    )


# text renderers


def render_verify(o: VerificationReportOutput, out: TextIO) -> None:
    label = "S_E" if o.metric is MetricKind.EUCLIDEAN else "S_M"
    d_star = "0" if not o.d_star_F else " + ".join(f"({t.coeff})*{t.basis}" for t in o.d_star_F)
    rows = [
        ["metric", o.metric.value],
        ["dF = 0", verdict(True, out)],
        ["d*F = 0", verdict(o.is_vacuum_solution, out)],
        ["d*F", d_star],
        ["duality", o.duality.value],
        [label, o.condition_sum],
        [f"{label} constant", verdict(o.condition_constant is not None, out, ("yes", "no"))],
        ["d*omega", o.lorenz],
        ["harmonic potential", verdict(o.harmonic_potential, out, ("yes", "no"))],
        ["wavelike potential", verdict(o.wavelike_potential, out, ("yes", "no"))],
        ["wavelike field", verdict(o.wavelike_field, out, ("yes", "no"))],
        ["E", ", ".join(o.E)],
        ["B", ", ".join(o.B)],
        ["<E,B>", o.eb_inner],
        ["energy", o.energy],
    ]
    write_table(rows, out)
    for d in o.table_discrepancies:
        out.write(f"note: listed {d.entry} = {d.listed}, derived {d.derived}\n")


def render_fields(o: FieldsOutput, out: TextIO) -> None:
    rows: List[List[str]] = [["F", _terms(o.F)]]
    rows += [[name, value] for name, value in o.components.items()]
    rows += [[f"E{k + 1}", e] for k, e in enumerate(o.E)]
    rows += [[f"B{k + 1}", b] for k, b in enumerate(o.B)]
    rows += [["<E,B>", o.eb_inner], ["energy", o.energy]]
    rows += [[name, value] for name, value in o.current.items()]
    rows += [["rho", o.rho]] + [[f"J{k + 1}", j] for k, j in enumerate(o.J)]
    rows += [["F+", _terms(o.self_dual_part)], ["F-", _terms(o.anti_self_dual_part)]]
    write_table(rows, out)


def render_star(o: StarOutput, out: TextIO) -> None:
    out.write(o.output + "\n")


def render_tables(o: StarTableOutput, out: TextIO) -> None:
    for e in o.entries:
        mark = "" if e.agrees else f"  (definitional: {e.oracle})"
        note = f"  [{e.note}]" if e.note else ""
        out.write(f"STAR({e.input}) = {e.output}  [{e.source.value}]{mark}{note}\n")
    for d in o.discrepancies:
        out.write(f"discrepancy ({d.kind.value}): listed {d.entry} = {d.listed}, derived {d.derived}\n")


def render_gauge(o: GaugeOutput, out: TextIO) -> None:
    rows = [["u", o.u]]
    rows += [[name, f] for name, f in zip(("f1'", "f2'", "fb1'", "fb2'"), o.potential)]
    rows += [
        ["curvature invariant", verdict(o.curvature_invariant, out)],
        ["condition shift", o.condition_shift],
        ["expected shift", o.expected_shift],
    ]
    write_table(rows, out)


def render_lorenz(o: LorenzOutput, out: TextIO) -> None:
    rows = [
        ["d*omega", o.codifferential],
        ["constant", verdict(o.constant is not None, out, ("yes", "no"))],
        ["Hodge-Laplace harmonic", verdict(o.hodge_harmonic, out, ("yes", "no"))],
    ]
    if o.normalized_potential is not None:
        rows += [[name, f] for name, f in zip(("f1'", "f2'", "fb1'", "fb2'"), o.normalized_potential)]
        rows.append(["normalized d*omega", o.normalized_codifferential])
    write_table(rows, out)


def render_eval(o: EvalOutput, out: TextIO) -> None:
    rows = [["point", ", ".join(f"{x:g}" for x in o.point)]]
    rows += [[f"E{k + 1}", f"{complex(*v):.12g}"] for k, v in enumerate(o.E)]
    rows += [[f"B{k + 1}", f"{complex(*v):.12g}"] for k, v in enumerate(o.B)]
    rows += [
        [f"wirtinger {name}", verdict(ok, out)]
        for name, ok in zip(("f1", "f2", "fb1", "fb2"), o.wirtinger)
    ]
    write_table(rows, out)


def _terms(terms) -> str:
    return " + ".join(f"({t.coeff})*{t.basis}" if t.basis != "1" else f"({t.coeff})" for t in terms) or "0"


COMMANDS: Dict[str, tuple] = {
    "verify": (cmd_verify, render_verify),
    "fields": (cmd_fields, render_fields),
    "star": (cmd_star, render_star),
    "tables": (cmd_tables, render_tables),
    "gauge": (cmd_gauge, render_gauge),
    "lorenz": (cmd_lorenz, render_lorenz),
    "eval": (cmd_eval, render_eval),
}


def run(argv: Optional[Sequence[str]] = None, stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    """
    Execute one command.

    Parameters:
    - argv: Arguments without the program name; defaults to sys.argv[1:].
    - stdout: Stream for command output.
    - stderr: Stream for error messages.

    Returns:
    - int: The exit code.
    """
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = parser.parse_args(list(sys.argv[1:] if argv is None else argv))
        if args.version:
            out.write(f"formwell {__version__}\n")
            return EXIT_OK
        if args.log_level:
            set_log_level(args.log_level)
        if args.command is None:
            raise UsageError("formwell: error: a command is required")
        command, render = COMMANDS[args.command]
        result: BaseModel = command(args)
    except _Exit as exc:
        return exc.status
    except UsageError as exc:
        parser.print_usage(err)
        err.write(f"{exc}\n")
        return EXIT_USAGE
    except _SourceError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    except InvariantViolation as exc:
        logger.error("invariant violated: %s", exc)
        err.write(f"internal error: {exc}\n")
        return EXIT_INTERNAL
    except FormwellError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except OSError as exc:
        err.write(f"error: cannot read {exc.filename}: {exc.strerror}\n")
        return EXIT_USAGE
    except Exception as exc:  # noqa: BLE001
        logger.exception("unexpected failure")
        err.write(f"internal error: {exc}\n")
        return EXIT_INTERNAL

    if args.json:
        out.write(model_dump_json(result) + "\n")
    else:
        render(result, out)
    return EXIT_OK


def main() -> None:
    just_fix_windows_console()
    sys.exit(run())
