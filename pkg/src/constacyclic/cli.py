"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 unreadable or invalid input, 3 decoding
failure.  Arrays are read and written in the ``"M N"`` + rows text format.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .code import (
    CodeSpec,
    error_capability,
    parse_code_spec,
    systematic_encode,
)
from .decoder import DEFAULT_BUDGET, DecodeOutcome, Status, decode
from .exceptions import ConstacyclicError
from .ring import format_array, parse_array
from .simulate import SimConfig, simulate, to_csv
from .transform import fft2, ifft2, spectral_nulls

EXIT_USAGE, EXIT_PARSE, EXIT_DECODE = 1, 2, 3


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def load_code(path: str) -> CodeSpec:
    try:
        return parse_code_spec(_read(path))
    except (ConstacyclicError, ValueError) as exc:
        raise InputError(f"{path}: {exc}") from None


def load_array(code: CodeSpec, path: str):
    try:
        arr = parse_array(code.field, _read(path))
    except (ConstacyclicError, ValueError) as exc:
        raise InputError(f"{path}: {exc}") from None
    if arr.shape != (code.m, code.n):
        raise InputError(f"{path}: array is {arr.m}x{arr.n}, code area is {code.m}x{code.n}")
    return arr


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _pairs(points) -> str:
    return " ".join(f"({a},{b})" for a, b in points)


def info_report(code: CodeSpec) -> str:
    f, r = code.field, code.roots
    d_upper, t_max = error_capability(code)
    lines = [
        f"p={f.p}",
        f"t={f.t}",
        f"field_order={f.order}",
        f"M={code.m}",
        f"N={code.n}",
        f"lambda1={r.lambda1}",
        f"lambda2={r.lambda2}",
        f"gamma={f.format_element(r.gamma)}",
        f"beta={f.format_element(r.beta)}",
        f"zeta1={f.format_element(r.zeta1)}",
        f"zeta2={f.format_element(r.zeta2)}",
        f"ecz={_pairs(code.ecz_reps)}",
        f"cz_size={len(code.cz_set)}",
        f"cz_set={_pairs(code.cz_set)}",
        f"K={code.dimension}",
        f"parity_positions={_pairs(code.parity_positions)}",
        f"spectral_nulls={_pairs(spectral_nulls(code))}",
        f"d_upper={d_upper}",
        f"t_max={t_max}",
    ]
    e1, e2 = r.extension_identities()
    if r.extension_check():
        lines.append(f"extension-check: ok ({f.order})")
    else:
        lines.append(f"extension-check: generalized ({e1}, {e2}) vs {f.order}")
    return "\n".join(lines) + "\n"


def decode_report(outcome: DecodeOutcome) -> str:
    if outcome.status is Status.FAILURE:
        head = f"Failure, reason={outcome.failure_reason}"
    else:
        e = outcome.error_pattern
        terms = ", ".join(f"({i},{j})↦{e[i, j]}" for i, j in e.support())
        head = f"{outcome.status}, e={terms}" if terms else f"{outcome.status}"
    lines = [head, f"method={outcome.method_used}"]
    if outcome.locate is not None:
        lines.append(f"E={_pairs(outcome.locate.candidates)}")
    return "\n".join(lines) + "\n"


def _weights(text: str) -> list[int]:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return list(range(int(lo), int(hi) + 1))
        return [int(w) for w in text.split(",") if w]
    except ValueError:
        raise UsageError(f"bad weight range {text!r}; use a..b or a,b,c") from None


def cmd_info(args) -> int:
    sys.stdout.write(info_report(load_code(args.spec)))
    return 0


def cmd_encode(args) -> int:
    code = load_code(args.spec)
    tokens = _read(args.message).split()
    try:
        msg = [int(tok) for tok in tokens]
    except ValueError:
        raise InputError(f"{args.message}: message symbols must be integers") from None
    if len(msg) != code.dimension or any(not 0 <= v < code.q for v in msg):
        raise InputError(f"{args.message}: need {code.dimension} symbols in 0..{code.q - 1}")
    _emit(format_array(systematic_encode(code, msg)), args.output)
    return 0


def cmd_decode(args) -> int:
    code = load_code(args.spec)
    r = load_array(code, args.array)
    outcome = decode(code, r, args.method, args.budget)
    sys.stderr.write(decode_report(outcome))
    if outcome.status is Status.FAILURE:
        return EXIT_DECODE
    _emit(format_array(outcome.codeword), args.output)
    return 0


def cmd_transform(args) -> int:
    code = load_code(args.spec)
    arr = load_array(code, args.array)
    if args.dir == "fft":
        out = format_array(fft2(code.roots, arr), style="power")
    else:
        out = format_array(ifft2(code.roots, arr))
    _emit(out, args.output)
    return 0


def cmd_simulate(args) -> int:
    code = load_code(args.spec)
    config = SimConfig(args.trials, _weights(args.weights), args.seed, args.method, args.budget)
    try:
        config.validate(code)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(to_csv(simulate(code, config)), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="constacyclic", description="2-D constacyclic codes over GF(p).")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("info", help="print code parameters as key=value lines")
    p.add_argument("spec")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("encode", help="systematically encode a message file")
    p.add_argument("spec")
    p.add_argument("message")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_encode)

    methods = ("auto", "exhaustive", "time", "freq")
    p = sub.add_parser("decode", help="decode an array file; the report goes to stderr")
    p.add_argument("spec")
    p.add_argument("array")
    p.add_argument("--method", choices=methods, default="auto")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("transform", help="2-D finite field Fourier transform")
    p.add_argument("spec")
    p.add_argument("array")
    p.add_argument("--dir", choices=("fft", "ifft"), default="fft")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("simulate", help="Monte-Carlo error injection, CSV on stdout")
    p.add_argument("spec")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--weights", default="1..4", help="a..b or a comma list")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--method", choices=methods, default="auto")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_simulate)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # --help and usage errors
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"constacyclic: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InputError as exc:
        print(f"constacyclic: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
