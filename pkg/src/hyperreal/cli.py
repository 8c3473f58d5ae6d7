"""Command-line front end.

Subcommands: eval, classify, compare, shadow, diff, limit, seq-limit,
continuity, filters, transfer, hilbert.  Output is plain text by default
and a single JSON envelope {"ok": ..., "result" | "error": ...} with
--json.  Exit codes: 0 success, 1 domain error, 2 usage error.  Rationals
are rendered as exact strings ("5/3"), never as floats.

The default precision is 16, overridable by the HYPERREAL_PRECISION
environment variable and the --precision flag (flag wins).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import calculus, filters, hilbert, transfer
from .core import HyperReal, Precision, as_fraction
from .errors import HyperrealError, NonDifferentiableError

_STRUCTURES = {
    "N": transfer.naturals_structure,
    "R": transfer.reals_structure,
    "C": transfer.complexes_structure,
    "seq": transfer.sequence_structure,
    "*N": lambda: transfer.naturals_structure().star(),
    "*R": lambda: transfer.reals_structure().star(),
    "*seq": lambda: transfer.sequence_structure().star().with_constants("omega"),
}


def _default_precision() -> int:
    raw = os.environ.get("HYPERREAL_PRECISION")
    if raw is None:
        return 16
    try:
        value = int(raw)
    except ValueError:
        value = 0
    if value < 1:
        raise SystemExit("HYPERREAL_PRECISION must be a positive integer")
    return value


def _build_parser(default_precision: int) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--precision",
        type=int,
        default=default_precision,
        metavar="T",
        help=f"relative truncation order (default {default_precision})",
    )
    common.add_argument("--json", action="store_true", help="emit a JSON envelope")

    parser = argparse.ArgumentParser(
        prog="hyperreal",
        description="Exact hyperreal arithmetic and nonstandard-analysis tools",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate a closed expression")
    p.add_argument("expr")

    p = sub.add_parser("classify", parents=[common], help="classify a closed expression")
    p.add_argument("expr")

    p = sub.add_parser("compare", parents=[common], help="order two closed expressions")
    p.add_argument("left")
    p.add_argument("right")

    p = sub.add_parser("shadow", parents=[common], help="shadow of a limited expression")
    p.add_argument("expr")

    p = sub.add_parser("diff", parents=[common], help="derivative at a rational point")
    p.add_argument("expr")
    p.add_argument("--at", required=True, metavar="X0", help="rational point, e.g. 3 or 1/2")

    p = sub.add_parser("limit", parents=[common], help="limit of a function")
    p.add_argument("expr")
    p.add_argument("--to", required=True, metavar="C", help="rational point, +inf or -inf")
    p.add_argument("--side", choices=("both", "left", "right"), default="both")

    p = sub.add_parser("seq-limit", parents=[common], help="limit of a rational sequence")
    p.add_argument("expr")

    p = sub.add_parser("continuity", parents=[common], help="continuity at a rational point")
    p.add_argument("expr")
    p.add_argument("--at", required=True, metavar="C")

    p = sub.add_parser("filters", parents=[common], help="finite filter laboratory")
    p.add_argument("action", choices=("enumerate", "classify", "generate"))
    p.add_argument("family", nargs="?", help="JSON array of arrays, e.g. [[0],[0,1]]")
    p.add_argument("--size", type=int, required=True, metavar="N")

    p = sub.add_parser("transfer", parents=[common], help="statement and transfer linting")
    p.add_argument("formula")
    p.add_argument("--structure", default="R", choices=sorted(_STRUCTURES))
    p.add_argument("--direction", choices=("forward", "backward"))
    p.add_argument("--star", action="store_true", help="also emit the star transform")

    p = sub.add_parser("hilbert", parents=[common], help="vector classification and inner products")
    p.add_argument("vector")
    p.add_argument("other", nargs="?", help="second vector for an inner product")

    return parser


def run(argv: list[str]) -> int:
    """Dispatch one invocation; returns the process exit code."""
    parser = _build_parser(_default_precision())
    args = parser.parse_args(argv)
    if args.precision < 1:
        parser.error("--precision must be >= 1")
    precision = Precision(args.precision)
    try:
        result, lines = _dispatch(args, precision)
    except NonDifferentiableError as exc:
        result = {
            "derivative": None,
            "non_differentiable": True,
            "witnesses": [list(w) for w in exc.witnesses],
        }
        lines = [f"non-differentiable: {exc}"]
    except HyperrealError as exc:
        if args.json:
            envelope = {"ok": False, "error": {"type": type(exc).__name__, "message": str(exc)}}
            print(json.dumps(envelope))
        else:
            print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps({"ok": True, "result": result}))
    else:
        for line in lines:
            print(line)
    return 0


def _dispatch(args, precision: Precision) -> tuple[dict, list[str]]:
    handler = _HANDLERS[args.command]
    return handler(args, precision)


def _closed_eval(text: str, precision: Precision) -> HyperReal:
    return calculus.eval_hyper(calculus.parse_expr(text), None, precision)


def _cmd_eval(args, precision):
    value = _closed_eval(args.expr, precision)
    return {"value": str(value)}, [str(value)]


def _cmd_classify(args, precision):
    tag = _closed_eval(args.expr, precision).classify()
    return {"classification": tag.value}, [tag.value]


def _cmd_compare(args, precision):
    verdict = _closed_eval(args.left, precision).compare(_closed_eval(args.right, precision))
    return {"ordering": verdict.value}, [verdict.value]


def _cmd_shadow(args, precision):
    value = _closed_eval(args.expr, precision).shadow()
    return {"shadow": str(value)}, [str(value)]


def _cmd_diff(args, precision):
    value = calculus.derivative(args.expr, as_fraction(args.at), precision)
    return {"derivative": str(value), "non_differentiable": False}, [str(value)]


def _limit_payload(result: calculus.LimitResult) -> tuple[dict, list[str]]:
    payload = {
        "kind": result.kind,
        "value": None if result.value is None else str(result.value),
        "witnesses": [list(w) for w in result.witnesses],
        "reason": result.reason,
    }
    if result.kind == "finite":
        text = str(result.value)
    elif result.kind == "plus-infinity":
        text = "+inf"
    elif result.kind == "minus-infinity":
        text = "-inf"
    else:
        text = result.kind + (f": {result.reason}" if result.reason else "")
    return payload, [text]


def _cmd_limit(args, precision):
    target = args.to if args.to in (calculus.PLUS_INF, calculus.MINUS_INF) else as_fraction(args.to)
    return _limit_payload(calculus.limit_fun(args.expr, target, args.side, precision))


def _cmd_seq_limit(args, precision):
    return _limit_payload(calculus.limit_seq(args.expr, precision))


def _cmd_continuity(args, precision):
    verdict = calculus.continuity_at(args.expr, as_fraction(args.at), precision)
    return {"continuous": verdict}, ["continuous" if verdict else "discontinuous"]


def _family_from_json(text: str | None, size: int) -> filters.SetFamily:
    if text is None:
        raise HyperrealError("this action needs a family argument (JSON array of arrays)")
    try:
        data = json.loads(text)
        return filters.SetFamily.from_sets(size, data)
    except (ValueError, TypeError) as exc:
        raise HyperrealError(f"malformed family: {exc}") from None


def _cmd_filters(args, precision):
    if args.action == "enumerate":
        found = filters.enumerate_ultrafilters(args.size)
        families = [f.to_sets() for f in found]
        generators = [filters.classify_family(f).principal_generator for f in found]
        payload = {"count": len(found), "ultrafilters": families, "generators": generators}
        lines = [f"{len(found)} proper ultrafilter(s) on a {args.size}-element ground set"]
        lines += [json.dumps(f) for f in families]
        return payload, lines
    family = _family_from_json(args.family, args.size)
    if args.action == "classify":
        tag = filters.classify_family(family)
        payload = {
            "is_filter": tag.is_filter,
            "is_proper": tag.is_proper,
            "is_ultrafilter": tag.is_ultrafilter,
            "principal_generator": tag.principal_generator,
        }
        lines = [
            f"filter: {tag.is_filter}",
            f"proper: {tag.is_proper}",
            f"ultrafilter: {tag.is_ultrafilter}",
            f"principal generator: {tag.principal_generator}",
        ]
        return payload, lines
    generated = filters.generate_filter(family)
    listing = generated.to_sets()
    return {"family": listing}, [json.dumps(listing)]


def _cmd_transfer(args, precision):
    structure = _STRUCTURES[args.structure]()
    verdict = transfer.classify_text(args.formula, structure)
    transformed = None
    if verdict.kind == "statement":
        formula = transfer.parse_formula(args.formula, structure)
        if args.direction:
            verdict = transfer.check_transferable(formula, args.direction)
        if args.star and not structure.is_star:
            transformed = transfer.star_transform(formula).render()
    payload = verdict.to_json_dict()
    payload["transformed_text"] = transformed
    lines = [f"verdict: {verdict.kind}"]
    if verdict.free_vars:
        lines.append("free variables: " + ", ".join(verdict.free_vars))
    if verdict.external_symbols:
        lines.append("external symbols: " + ", ".join(verdict.external_symbols))
    if verdict.reason:
        lines.append(f"reason: {verdict.reason}")
    if transformed:
        lines.append(f"star transform: {transformed}")
    return payload, lines


def _complex_payload(value: hilbert.HyperComplex) -> dict:
    return {"re": str(value.re), "im": str(value.im)}


def _cmd_hilbert(args, precision):
    vector = hilbert.parse_hvector(args.vector, precision)
    if args.other is not None:
        other = hilbert.parse_hvector(args.other, precision)
        product = hilbert.inner(vector, other)
        payload = {"inner": _complex_payload(product)}
        return payload, [str(product)]
    tag = hilbert.vec_classify(vector)
    payload = {
        "classification": tag.value,
        "norm_sq": str(hilbert.norm_sq(vector)),
        "standard_part": None,
    }
    lines = [f"classification: {tag.value}", f"norm^2: {payload['norm_sq']}"]
    if tag is not hilbert.VectorClass.REMOTE:
        part = hilbert.standard_part_vec(vector)
        payload["standard_part"] = [[str(c.re), str(c.im)] for c in part]
        lines.append("standard part: [" + ", ".join(str(c) for c in part) + "]")
    return payload, lines


_HANDLERS = {
    "eval": _cmd_eval,
    "classify": _cmd_classify,
    "compare": _cmd_compare,
    "shadow": _cmd_shadow,
    "diff": _cmd_diff,
    "limit": _cmd_limit,
    "seq-limit": _cmd_seq_limit,
    "continuity": _cmd_continuity,
    "filters": _cmd_filters,
    "transfer": _cmd_transfer,
    "hilbert": _cmd_hilbert,
}


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
