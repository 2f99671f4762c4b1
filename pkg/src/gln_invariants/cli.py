"""Command-line front end.

Subcommands: ``invariants`` and ``dual`` operate on a JSON-described
representation; ``verify-arthur``, ``verify-unitary`` and
``verify-consistency`` run theorem sweeps; ``figure`` emits the bound-
tightness dataset as CSV; ``partitions`` streams partitions of N.

Exit codes: 0 success, 2 malformed input, 3 a verified statement failed
(should be impossible), 4 I/O error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import IO, Optional, Union

from .arthur import ArthurSummand, SupercuspidalLabel, UnitaryRep
from .bounds import fixed_vector_exponent, hch_coefficient_exponent, relative_exponents
from .decay import decay_t
from .partitions import partition_tuples
from .rationals import parse_rat, rat_decimal, rat_str
from .segments import Multisegment, Segment
from .verify import (
    ConsistencyBudget,
    InvariantReport,
    SweepSummary,
    report_for_rep,
    verify_consistency,
    verify_uncertainty_arthur,
    verify_uncertainty_unitary,
    write_figure_csv,
)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_VIOLATION = 3
EXIT_IO = 4

THREADS_ENV_VAR = "GLN_INVARIANTS_THREADS"


class ParseError(ValueError):
    """Input rejected; ``field`` names the offending location."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


def _require(data: dict, field: str, path: str):
    if field not in data:
        raise ParseError(f"{path}.{field}" if path else field, "missing required field")
    return data[field]


def _parse_label(data, path: str) -> SupercuspidalLabel:
    if not isinstance(data, dict):
        raise ParseError(path, "expected an object with 'id' and 'dim'")
    label_id = _require(data, "id", path)
    dim = _require(data, "dim", path)
    if not isinstance(label_id, str) or not label_id:
        raise ParseError(f"{path}.id", "must be a non-empty string")
    if not isinstance(dim, int) or dim < 1:
        raise ParseError(f"{path}.dim", "must be a positive integer")
    return SupercuspidalLabel(label_id, dim)


def _parse_rational(value, path: str) -> Fraction:
    try:
        return parse_rat(str(value))
    except ValueError:
        raise ParseError(path, f"not an exact rational: {value!r}") from None


def _parse_segment(data, path: str) -> Segment:
    if not isinstance(data, dict):
        raise ParseError(path, "expected a segment object")
    rho = _parse_label(_require(data, "rho", path), f"{path}.rho")
    a = _parse_rational(_require(data, "a", path), f"{path}.a")
    b = _parse_rational(_require(data, "b", path), f"{path}.b")
    if (b - a).denominator != 1 or b < a:
        raise ParseError(
            f"{path}.b", f"b - a must be a non-negative integer, got {rat_str(b - a)}"
        )
    return Segment(rho, a, b)


def _parse_multisegment(data: dict) -> Multisegment:
    segs = data["segments"]
    if not isinstance(segs, list) or not segs:
        raise ParseError("segments", "expected a non-empty list of segments")
    parsed = [_parse_segment(s, f"segments[{i}]") for i, s in enumerate(segs)]
    try:
        return Multisegment(parsed)
    except ValueError as exc:
        raise ParseError("segments", str(exc)) from None


def _parse_summand(data, path: str) -> ArthurSummand:
    if not isinstance(data, dict):
        raise ParseError(path, "expected a summand object")
    rho = _parse_label(_require(data, "rho", path), f"{path}.rho")
    a = _require(data, "a", path)
    d = _require(data, "d", path)
    for name, value in (("a", a), ("d", d)):
        if not isinstance(value, int) or value < 1:
            raise ParseError(f"{path}.{name}", "must be a positive integer")
    x = _parse_rational(data.get("x", "0"), f"{path}.x")
    if abs(x) >= Fraction(1, 2):
        raise ParseError(
            f"{path}.x",
            f"twist must lie strictly inside the open interval (-1/2, 1/2), got {rat_str(x)}",
        )
    return ArthurSummand(rho, a, d, x)


def _parse_unitary(data: dict) -> UnitaryRep:
    summands = data["summands"]
    if not isinstance(summands, list) or not summands:
        raise ParseError("summands", "expected a non-empty list of summands")
    parsed = [_parse_summand(s, f"summands[{i}]") for i, s in enumerate(summands)]
    try:
        return UnitaryRep(parsed)
    except ValueError as exc:
        raise ParseError("summands", str(exc)) from None


def parse_rep(text: Union[str, bytes]) -> Union[UnitaryRep, Multisegment]:
    """Parse a JSON-described representation; raises ParseError naming the
    offending field on any violated constraint."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError("<input>", f"not valid UTF-8: {exc}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("<input>", f"invalid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise ParseError("<input>", "expected a JSON object")
    if "summands" in data:
        return _parse_unitary(data)
    if "segments" in data:
        return _parse_multisegment(data)
    raise ParseError(
        "<input>", "expected 'summands' (unitarizable form) or 'segments' (multisegment)"
    )


# ---------------------------------------------------------------------------
# rendering


def _rat_json(x: Fraction) -> dict:
    return {"num": x.numerator, "den": x.denominator, "decimal": rat_decimal(x)}


def _report_json(report: InvariantReport) -> dict:
    p = None if report.t == 1 else 2 / (1 - report.t)
    return {
        "arthur_sl2": list(report.arthur_sl2),
        "wavefront": list(report.wavefront),
        "d_gk": _rat_json(report.d_gk),
        "g": _rat_json(report.g),
        "t": _rat_json(report.t),
        "p": "infinite" if p is None else _rat_json(p),
        "maximizers": sorted(report.maximizers),
        "lower_ok": report.lower_ok,
        "upper_ok": report.upper_ok,
        **({"note": report.note} if report.note else {}),
    }


def _unitary_invariants(pi: UnitaryRep) -> dict:
    out = {
        "type": "unitarizable",
        "N": pi.N,
        "arthur_type": pi.is_arthur_type,
        "arthur_sl2": list(pi.arthur_sl2()),
        "wavefront": list(pi.arthur_sl2().dual()),
        "d_gk": _rat_json(pi.gk_dim()),
        "character": [rat_str(v) for v in pi.character()],
    }
    if pi.N >= 2:
        out.update(_report_json(report_for_rep(pi)))
    else:
        out.update({"g": None, "t": None, "p": None, "maximizers": [],
                    "lower_ok": None, "upper_ok": None})
    return out


def _exponent_json(exp) -> dict:
    return {
        "coeff": _rat_json(exp.coeff),
        "epsilon_slack": exp.epsilon_slack,
        "description": exp.description,
    }


def _multisegment_invariants(m: Multisegment) -> dict:
    n = m.total_dim
    d_gk = m.gk_dim()
    rel_plain, rel_weighted = relative_exponents(m)
    out = {
        "type": "multisegment",
        "N": n,
        "partition": list(m.partition()),
        "wavefront": list(m.wavefront()),
        "d_gk": _rat_json(d_gk),
        "g": _rat_json(1 - d_gk / Fraction(n * (n - 1), 2)) if n >= 2 else None,
        "exponents": {
            "fixed_vector": _exponent_json(fixed_vector_exponent(m)),
            "relative": _exponent_json(rel_plain),
            "relative_with_multiplicity": _exponent_json(rel_weighted),
            "hch_at_wavefront": _exponent_json(
                hch_coefficient_exponent(m, m.wavefront())
            ),
        },
        "langlands_reading": {
            "character": [rat_str(v) for v in m.character()],
            "is_tempered": m.is_tempered(),
            "t": _rat_json(decay_t(m.character()).t) if n >= 2 else None,
        },
    }
    return out


def _flatten_csv(data: dict, out: IO[str], prefix: str = "") -> None:
    for key, value in data.items():
        path = f"{prefix}.{key}" if prefix else key
        if isinstance(value, dict):
            _flatten_csv(value, out, path)
        elif isinstance(value, list):
            out.write(f"{path},{'+'.join(str(v) for v in value)}\n")
        else:
            out.write(f"{path},{value}\n")


def _summary_text(summary: SweepSummary, what: str) -> str:
    lines = [f"checked {summary.count} {what}, {len(summary.failures)} failures"]
    if summary.min_gap_lower is not None:
        lines.append(
            f"min gap lower (t - g): {rat_str(summary.min_gap_lower)}"
            f" ({rat_decimal(summary.min_gap_lower)})"
        )
    if summary.min_gap_upper is not None:
        lines.append(
            f"min gap upper: {rat_str(summary.min_gap_upper)}"
            f" ({rat_decimal(summary.min_gap_upper)})"
        )
    return "\n".join(lines)


def _summary_json(summary: SweepSummary) -> dict:
    return {
        "N": summary.N,
        "count": summary.count,
        "failures": [_report_json(r) for r in summary.failures],
        "min_gap_lower": None
        if summary.min_gap_lower is None
        else _rat_json(summary.min_gap_lower),
        "min_gap_upper": None
        if summary.min_gap_upper is None
        else _rat_json(summary.min_gap_upper),
    }


def _emit_summary(summary: SweepSummary, what: str, args, out: IO[str]) -> int:
    if args.format == "json":
        json.dump(_summary_json(summary), out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        out.write("count,failures,min_gap_lower,min_gap_upper\n")
        out.write(
            f"{summary.count},{len(summary.failures)},"
            f"{'' if summary.min_gap_lower is None else rat_str(summary.min_gap_lower)},"
            f"{'' if summary.min_gap_upper is None else rat_str(summary.min_gap_upper)}\n"
        )
    else:
        out.write(_summary_text(summary, what) + "\n")
        for rep in summary.failures:
            out.write(f"FAIL {json.dumps(_report_json(rep))}\n")
    return EXIT_VIOLATION if summary.failures else EXIT_OK


# ---------------------------------------------------------------------------
# commands


def _resolve_threads(args) -> int:
    if getattr(args, "threads", None):
        if args.threads < 1:
            raise ParseError("--threads", "must be a positive integer")
        return args.threads
    env = os.environ.get(THREADS_ENV_VAR)
    if env:
        try:
            value = int(env)
        except ValueError:
            raise ParseError(THREADS_ENV_VAR, f"not an integer: {env!r}") from None
        if value < 1:
            raise ParseError(THREADS_ENV_VAR, "must be a positive integer")
        return value
    return os.cpu_count() or 1


def _read_input(args) -> str:
    with open(args.input, "r", encoding="utf-8") as handle:
        return handle.read()


def _open_out(args) -> tuple[IO[str], bool]:
    if getattr(args, "out", None):
        return open(args.out, "w", encoding="utf-8", newline="\n"), True
    return sys.stdout, False


def _cmd_invariants(args) -> int:
    rep = parse_rep(_read_input(args))
    data = (
        _unitary_invariants(rep)
        if isinstance(rep, UnitaryRep)
        else _multisegment_invariants(rep)
    )
    out, close = _open_out(args)
    try:
        if args.format == "csv":
            _flatten_csv(data, out)
        else:
            json.dump(data, out, indent=2)
            out.write("\n")
    finally:
        if close:
            out.close()
    return EXIT_OK


def _cmd_dual(args) -> int:
    rep = parse_rep(_read_input(args))
    if not isinstance(rep, UnitaryRep):
        raise ParseError(
            "<input>",
            "dual requires the unitarizable summand form; "
            "general multisegment duality is not supported",
        )
    out, close = _open_out(args)
    try:
        json.dump(rep.az_dual().to_json(), out, indent=2)
        out.write("\n")
    finally:
        if close:
            out.close()
    return EXIT_OK


def _cmd_verify_arthur(args) -> int:
    summary = verify_uncertainty_arthur(args.N, threads=_resolve_threads(args))
    out, close = _open_out(args)
    try:
        return _emit_summary(summary, "partitions", args, out)
    finally:
        if close:
            out.close()


def _parse_grid(text: str) -> list[Fraction]:
    try:
        return [parse_rat(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise ParseError("--twist-grid", str(exc)) from None


def _cmd_verify_unitary(args) -> int:
    grid = _parse_grid(args.twist_grid)
    try:
        summary = verify_uncertainty_unitary(
            args.N, grid, max_summands=args.max_summands, threads=_resolve_threads(args)
        )
    except ValueError as exc:
        raise ParseError("--twist-grid", str(exc)) from None
    out, close = _open_out(args)
    try:
        return _emit_summary(summary, "unitarizable cases", args, out)
    finally:
        if close:
            out.close()


def _cmd_verify_consistency(args) -> int:
    budget = ConsistencyBudget(
        max_summands=args.max_summands,
        max_dim=args.max_dim,
        max_a=args.max_a,
        max_d=args.max_d,
        max_total_dim=args.N,
    )
    summary = verify_consistency(
        budget,
        random_cases=args.random_cases,
        seed=args.seed,
        threads=_resolve_threads(args),
    )
    out, close = _open_out(args)
    try:
        return _emit_summary(summary, "representations", args, out)
    finally:
        if close:
            out.close()


def _cmd_figure(args) -> int:
    out, close = _open_out(args)
    try:
        count, violations = write_figure_csv(args.N, out, threads=_resolve_threads(args))
    finally:
        if close:
            out.close()
    if close:
        print(f"wrote {count} rows to {args.out}", file=sys.stderr)
    if violations:
        print(f"{violations} rows violate a bound", file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


def _cmd_partitions(args) -> int:
    out, close = _open_out(args)
    try:
        for parts in partition_tuples(args.N):
            if args.format == "json":
                out.write(json.dumps(list(parts)) + "\n")
            else:
                out.write("+".join(str(p) for p in parts) + "\n")
    finally:
        if close:
            out.close()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="glninv",
        description="Exact invariants of smooth irreducible representations of p-adic GL_N.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_n=False, needs_input=False):
        if needs_n:
            p.add_argument("--N", type=int, required=True, help="ambient dimension N")
        if needs_input:
            p.add_argument("--input", required=True, help="path to a JSON representation")
        p.add_argument("--out", help="output path (default: stdout)")
        p.add_argument(
            "--threads",
            type=int,
            help=f"worker count (default: ${THREADS_ENV_VAR} or available parallelism)",
        )
        p.add_argument("--format", choices=("csv", "json"), help="output format")

    p = sub.add_parser("invariants", help="invariants of a JSON-described representation")
    common(p, needs_input=True)
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("dual", help="a <-> d duality swap of a unitarizable representation")
    common(p, needs_input=True)
    p.set_defaults(func=_cmd_dual)

    p = sub.add_parser("verify-arthur", help="uncertainty sweep over all partitions of N")
    common(p, needs_n=True)
    p.set_defaults(func=_cmd_verify_arthur)

    p = sub.add_parser("verify-unitary", help="uncertainty sweep over unitarizable shapes")
    common(p, needs_n=True)
    p.add_argument(
        "--twist-grid",
        default="1/10,2/10,3/10,4/10",
        help="comma-separated twists strictly inside (0, 1/2)",
    )
    p.add_argument("--max-summands", type=int, default=3, help="summand-group budget")
    p.set_defaults(func=_cmd_verify_unitary)

    p = sub.add_parser(
        "verify-consistency",
        help="two-route identity sweep; --N caps the total dimension of checked cases",
    )
    common(p, needs_n=True)
    p.add_argument("--max-summands", type=int, default=4)
    p.add_argument("--max-dim", type=int, default=3)
    p.add_argument("--max-a", type=int, default=4)
    p.add_argument("--max-d", type=int, default=4)
    p.add_argument("--random-cases", type=int, default=10000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_verify_consistency)

    p = sub.add_parser("figure", help="bound-tightness dataset for all partitions of N")
    common(p, needs_n=True)
    p.set_defaults(func=_cmd_figure)

    p = sub.add_parser("partitions", help="stream all partitions of N")
    common(p, needs_n=True)
    p.set_defaults(func=_cmd_partitions)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
