"""Command-line entry point: verification tables and presentation tools.

Verification commands print a CSV table to stdout and a one-line summary to
stderr; exit status 0 means every row matched, 1 means some row failed, and
2 means the input itself was unusable (unreadable file, malformed JSON or
value, out-of-contract argument). All output is deterministic; the only
randomized command (conjecture-check) takes a seed and fixes its default.

Word arguments are digit strings with letter 1 leftmost; because letter 1 is
the least significant digit of the unfolding index, the pair for matrix
entry (3, 2) at depth 2 is written as row "11", column "01".
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from .errors import DegeneracyError, ParseError
from .gaussian import GAUSSIAN_UNITS, ONE, format_gaussian
from .jacobi import jfraction_from_moments, u_formula, v_formula
from .linalg import mat_mul
from .recmat import (
    Presentation,
    WordPair,
    builtin,
    evaluate,
    minimize,
    rec_convolution,
    rec_hadamard,
    rec_product,
    rec_sum,
    rec_transpose,
    unfold,
)
from .report import VerificationReport
from .thuemorse import (
    SignSequence,
    beta_coeffs,
    folding_product,
    gamma_coeffs,
    hankel_det_table,
    series_product,
)


def determinant_report(max_n: int, sigma: SignSequence | None) -> VerificationReport:
    """Hankel determinant of order n+1 vs the folding product, n = 0..max_n."""
    if max_n < 0:
        raise ValueError("--max-n must be nonnegative")
    series = series_product(sigma, 2 * max_n)
    dets = hankel_det_table(series.coefficient, 0, max_n + 1)
    report = VerificationReport(("n", "det_order_n_plus_1", "folding_product", "match"))
    for n in range(max_n + 1):
        report.add(
            n,
            format_gaussian(dets[n + 1]),
            format_gaussian(folding_product(n, sigma)),
        )
    return report


def cmd_verify_det(args) -> int:
    sigma = SignSequence.from_string(args.sigma) if args.sigma is not None else None
    report = determinant_report(args.max_n, sigma)
    print(report.to_csv())
    print(report.summary(), file=sys.stderr)
    return report.exit_code


def lu_report(depth: int) -> VerificationReport:
    """Triangular decomposition checks at sizes 2^0 .. 2^depth.

    Each row requires, at its size: the lower times upper unfolding equals
    the Hankel unfolding, the three factors have their triangular/diagonal
    shapes, and the diagonal product equals both the Hankel determinant and
    the folding product.
    """
    if not 0 <= depth <= 8:
        raise ValueError("--depth must lie in 0..8")
    p_lower = builtin("L")
    p_upper = builtin("U")
    p_diag = builtin("D")
    p_hank = builtin("H")
    moments = series_product(None, 2 ** (depth + 1))
    dets = hankel_det_table(moments.coefficient, 0, 2**depth)
    report = VerificationReport(("n", "diag_product", "folding_product", "match"))
    for n in range(depth + 1):
        size = 2**n
        low = unfold(p_lower, n)
        upp = unfold(p_upper, n)
        dia = unfold(p_diag, n)
        han = unfold(p_hank, n)
        ok_product = mat_mul(low, upp) == han
        ok_shapes = (
            low.is_unit_lower_triangular()
            and dia.is_diagonal()
            and upp.is_upper_triangular()
        )
        diag_prod = ONE
        for x in dia.diagonal():
            diag_prod = diag_prod * x
        fold_prod = folding_product(size - 1)
        ok_dets = diag_prod == dets[size] and diag_prod == fold_prod
        report.add(
            n,
            format_gaussian(diag_prod),
            format_gaussian(fold_prod),
            ok_product and ok_shapes and ok_dets,
        )
    return report


def cmd_verify_lu(args) -> int:
    report = lu_report(args.depth)
    print(report.to_csv())
    print(report.summary(), file=sys.stderr)
    return report.exit_code


def jfraction_rows(count: int) -> tuple[list[str], int, int]:
    """CSV lines plus (matches, total) for coefficients through index count."""
    if count < 0:
        raise ValueError("--count must be nonnegative")
    depth = count + 1
    series = series_product(None, 2 * depth)
    jf = jfraction_from_moments(series.coefficients, depth)
    lines = ["n,u_computed,u_formula,v_computed,v_formula,match"]
    matches = 0
    for n in range(count + 1):
        u_c = jf.u_coeff(n)
        u_f = u_formula(n)
        ok = u_c == u_f
        if n >= 1:
            v_c = format_gaussian(jf.v_coeff(n))
            v_f = format_gaussian(v_formula(n))
            ok = ok and v_c == v_f
        else:
            v_c = v_f = ""
        flag = "yes" if ok else "no"
        matches += ok
        lines.append(
            f"{n},{format_gaussian(u_c)},{format_gaussian(u_f)},{v_c},{v_f},{flag}"
        )
    return lines, matches, count + 1


def cmd_jfraction(args) -> int:
    lines, matches, total = jfraction_rows(args.count)
    print("\n".join(lines))
    print(f"{matches}/{total} rows match", file=sys.stderr)
    return 0 if matches == total else 1


def unit_det_report(
    coeff_fn, max_order: int, offset: int, label: str
) -> VerificationReport:
    """Hankel determinants of orders 1..max_order tested for unit values."""
    if max_order < 0:
        raise ValueError("--max-order must be nonnegative")
    if offset < 0:
        raise ValueError("--offset must be nonnegative")
    series = coeff_fn(offset + 2 * max_order)
    dets = hankel_det_table(series.coefficient, offset, max_order)
    report = VerificationReport(("order", label, "expected", "match"))
    for k in range(1, max_order + 1):
        report.add(k, format_gaussian(dets[k]), "unit", dets[k] in GAUSSIAN_UNITS)
    return report


def cmd_beta_hankel(args) -> int:
    report = unit_det_report(beta_coeffs, args.max_order, args.offset, "beta_det")
    print(report.to_csv())
    print(report.summary(), file=sys.stderr)
    return report.exit_code


def cmd_gamma_hankel(args) -> int:
    report = unit_det_report(gamma_coeffs, args.max_order, args.offset, "gamma_det")
    print(report.to_csv())
    print(report.summary(), file=sys.stderr)
    return report.exit_code


def cmd_conjecture_check(args) -> int:
    if args.trials < 0 or args.prefix_len < 0:
        raise ValueError("--trials and --prefix-len must be nonnegative")
    rng = random.Random(args.seed)
    report = VerificationReport(("trial", "sigma", "checked_n", "match"))
    for trial in range(args.trials):
        sigma = SignSequence([rng.choice((1, -1)) for _ in range(args.prefix_len)])
        sub = determinant_report(args.max_n, sigma)
        report.add(trial, str(sigma), str(args.max_n), sub.all_match)
    print(report.to_csv())
    print(report.summary(), file=sys.stderr)
    return report.exit_code


def _load_presentation(source: str) -> Presentation:
    if source.startswith("builtin:"):
        return builtin(source[len("builtin:") :])
    text = Path(source).read_text(encoding="utf-8")
    return Presentation.from_json_text(text)


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        Path(out_path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_recmat_eval(args) -> int:
    pres = _load_presentation(args.presentation)
    pair = WordPair.from_strings(pres.p, pres.q, args.row, args.col)
    value = format_gaussian(evaluate(pres, pair))
    if args.format == "json":
        _emit(json.dumps({"value": value}) + "\n", args.output)
    else:
        _emit(value + "\n", args.output)
    return 0


def cmd_recmat_unfold(args) -> int:
    pres = _load_presentation(args.presentation)
    if args.depth < 0:
        raise ValueError("--depth must be nonnegative")
    matrix = unfold(pres, args.depth)
    if args.format == "json":
        rows = [
            [format_gaussian(matrix[r, c]) for c in range(matrix.cols)]
            for r in range(matrix.rows)
        ]
        _emit(json.dumps(rows, indent=2) + "\n", args.output)
    else:
        _emit(matrix.to_csv() + "\n", args.output)
    return 0


_BINARY_OPS = {
    "sum": rec_sum,
    "product": rec_product,
    "hadamard": rec_hadamard,
    "convolve": rec_convolution,
}


def cmd_recmat_binary(args) -> int:
    op = _BINARY_OPS[args.op]
    left = _load_presentation(args.left)
    right = _load_presentation(args.right)
    _emit(op(left, right).to_json_text(), args.output)
    return 0


_UNARY_OPS = {
    "transpose": rec_transpose,
    "minimize": minimize,
}


def cmd_recmat_unary(args) -> int:
    op = _UNARY_OPS[args.op]
    pres = _load_presentation(args.presentation)
    _emit(op(pres).to_json_text(), args.output)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="recqi",
        description="Exact verification tables and presentation algebra over Q(i).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "verify-det",
        help="Hankel determinants against the folding product",
    )
    p.add_argument("--max-n", type=int, required=True, dest="max_n")
    p.add_argument(
        "--sigma",
        default=None,
        help="fold-direction sign prefix over {+,-}; default all plus"
        " (write --sigma=-++ when the prefix starts with a minus)",
    )
    p.set_defaults(func=cmd_verify_det)

    p = sub.add_parser(
        "verify-lu",
        help="triangular decomposition of the Hankel unfoldings",
    )
    p.add_argument("--depth", type=int, required=True)
    p.set_defaults(func=cmd_verify_lu)

    p = sub.add_parser(
        "jfraction",
        help="continued-fraction coefficients against their closed forms",
    )
    p.add_argument("--count", type=int, required=True)
    p.set_defaults(func=cmd_jfraction)

    p = sub.add_parser("beta-hankel", help="first-difference Hankel determinant table")
    p.add_argument("--max-order", type=int, required=True, dest="max_order")
    p.add_argument("--offset", type=int, default=1)
    p.set_defaults(func=cmd_beta_hankel)

    p = sub.add_parser("gamma-hankel", help="two-step difference Hankel determinants")
    p.add_argument("--max-order", type=int, required=True, dest="max_order")
    p.add_argument("--offset", type=int, default=2)
    p.set_defaults(func=cmd_gamma_hankel)

    p = sub.add_parser(
        "conjecture-check",
        help="determinant identity under random fold-direction prefixes",
    )
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--prefix-len", type=int, default=10, dest="prefix_len")
    p.add_argument("--max-n", type=int, default=128, dest="max_n")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_conjecture_check)

    rm = sub.add_parser("recmat", help="presentation algebra")
    rmsub = rm.add_subparsers(dest="op", required=True)

    p = rmsub.add_parser("eval", help="value at one word pair")
    p.add_argument("presentation", help="JSON file or builtin:NAME")
    p.add_argument("row", help="row word, digits, letter 1 leftmost")
    p.add_argument("col", help="column word, digits, letter 1 leftmost")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_recmat_eval)

    p = rmsub.add_parser("unfold", help="dense value matrix up to a depth")
    p.add_argument("presentation", help="JSON file or builtin:NAME")
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_recmat_unfold)

    for name, help_text in (
        ("sum", "pointwise sum of two presentations"),
        ("product", "matrix product of two presentations"),
        ("hadamard", "entrywise product of two presentations"),
        ("convolve", "convolution over splittings"),
    ):
        p = rmsub.add_parser(name, help=help_text)
        p.add_argument("left", help="JSON file or builtin:NAME")
        p.add_argument("right", help="JSON file or builtin:NAME")
        p.add_argument("-o", "--output", default=None)
        p.set_defaults(func=cmd_recmat_binary)

    for name, help_text in (
        ("transpose", "swap word roles"),
        ("minimize", "smallest presentation of the same function"),
    ):
        p = rmsub.add_parser(name, help=help_text)
        p.add_argument("presentation", help="JSON file or builtin:NAME")
        p.add_argument("-o", "--output", default=None)
        p.set_defaults(func=cmd_recmat_unary)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DegeneracyError as exc:
        print(f"degenerate: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
