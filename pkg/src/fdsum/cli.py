"""Command-line front end.

    fdsum compute --n 4 --a 4,3,5 --b 7 [--method ...] [--format plain|json] [--dump-decomposition]
    fdsum batch --input FILE|- [--format jsonl|csv] [--method ...]
    fdsum bench --a 4,3,5 --n 4 --b-list 1000,1000000 [--repeat 3] [--method ...]
    fdsum selftest

``compute`` is implied when the first argument is an option.
Exit codes: 0 ok, 1 I/O error, 2 invalid input, 3 internal consistency failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import random
import statistics
import sys
import time
from fractions import Fraction
from math import gcd

from .api import METHODS, compute, validate
from .errors import InternalConsistencyError, InvalidInstance

EXIT_OK, EXIT_IO, EXIT_INVALID, EXIT_INTERNAL = 0, 1, 2, 3

SUBCOMMANDS = ("compute", "batch", "bench", "selftest")


class _Usage(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _Usage(f"{self.prog}: error: {message}")


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def format_value(value, json_style: bool) -> str:
    if isinstance(value, Fraction):
        if value.denominator == 1 and not json_style:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    return repr(float(value))


def output_record(result) -> dict:
    inst = result.instance
    return {
        "n": inst.n,
        "a": list(inst.a),
        "b": inst.b,
        "method": result.method,
        "value": format_value(result.value, True),
        "unimodular_cones": result.unimodular_cone_count,
        "time_ms": round(result.time_ms, 3),
    }


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


# -- compute -------------------------------------------------------------------

def cmd_compute(args, out=sys.stdout, err=sys.stderr) -> int:
    try:
        inst = validate(args.n, args.a, args.b)
        result = compute(inst, args.method, keep_srf=args.dump_decomposition)
    except InvalidInstance as e:
        print(f"invalid input: {e}", file=err)
        return EXIT_INVALID
    except InternalConsistencyError as e:
        print(f"internal consistency failure: {type(e).__name__}: {e}", file=err)
        return EXIT_INTERNAL
    if args.format == "json":
        print(_dumps(output_record(result)), file=out)
    else:
        print(f"{inst.label()} = {format_value(result.value, False)}", file=out)
    if args.dump_decomposition and result.srf is not None:
        print(result.srf.dump(), file=out)
    return EXIT_OK


# -- batch ---------------------------------------------------------------------

def parse_batch_line(line: str):
    parts = [p.strip() for p in line.split(";")]
    if len(parts) != 3:
        raise InvalidInstance(f"expected 'n; a1,...,ad; b', got {line!r}")
    try:
        n = int(parts[0])
        a = [int(x) for x in parts[1].split(",") if x.strip()]
        b = int(parts[2])
    except ValueError:
        raise InvalidInstance(f"non-integer field in {line!r}")
    return validate(n, a, b)


CSV_FIELDS = ["n", "a", "b", "method", "value", "unimodular_cones", "time_ms", "error"]


def cmd_batch(args, out=sys.stdout, err=sys.stderr) -> int:
    try:
        if args.input == "-":
            lines = sys.stdin.read().splitlines()
        else:
            with open(args.input, encoding="utf-8") as fh:
                lines = fh.read().splitlines()
    except OSError as e:
        print(f"cannot read input: {e}", file=err)
        return EXIT_IO

    writer = None
    if args.format == "csv":
        writer = csv.DictWriter(out, fieldnames=CSV_FIELDS, lineterminator="\n")
        writer.writeheader()
    status = EXIT_OK
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            rec = output_record(compute(parse_batch_line(line), args.method))
        except InvalidInstance as e:
            rec = {"line": lineno, "input": line, "error": str(e)}
            status = max(status, EXIT_INVALID)
        except InternalConsistencyError as e:
            rec = {"line": lineno, "input": line, "error": f"internal: {e}"}
            status = EXIT_INTERNAL
        if writer is None:
            print(_dumps(rec), file=out)
        else:
            row = dict(rec)
            if "a" in row:
                row["a"] = ",".join(map(str, row["a"]))
            row.pop("line", None)
            row.pop("input", None)
            writer.writerow(row)
    return status


# -- bench ---------------------------------------------------------------------

def cmd_bench(args, out=sys.stdout, err=sys.stderr) -> int:
    try:
        instances = [validate(args.n, args.a, b) for b in args.b_list]
    except InvalidInstance as e:
        print(f"invalid input: {e}", file=err)
        return EXIT_INVALID
    if args.repeat < 1:
        print("invalid input: --repeat must be >= 1", file=err)
        return EXIT_INVALID
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["b", "method", "time_ms_median", "value"])
    for inst in instances:
        times = []
        value = None
        try:
            for _ in range(args.repeat):
                t0 = time.perf_counter()
                value = compute(inst, args.method).value
                times.append((time.perf_counter() - t0) * 1000.0)
        except InvalidInstance as e:
            print(f"invalid input: {e}", file=err)
            return EXIT_INVALID
        except InternalConsistencyError as e:
            print(f"internal consistency failure: {e}", file=err)
            return EXIT_INTERNAL
        writer.writerow([inst.b, args.method, f"{statistics.median(times):.3f}",
                         format_value(value, True)])
        out.flush()
    return EXIT_OK


# -- selftest ------------------------------------------------------------------

def _selftest_cases():
    yield "golden s_4(4,3,5;7) barvinok", (4, (4, 3, 5), 7), "barvinok", Fraction(1, 7)
    yield "golden s_4(4,3,5;7) cyclotomic", (4, (4, 3, 5), 7), "cyclotomic", Fraction(1, 7)
    yield "closed form s_0(1;2)", (0, (1,), 2), "barvinok", Fraction(1, 4)
    yield "closed form s_1(1;2)", (1, (1,), 2), "barvinok", Fraction(-1, 4)
    yield "closed form s_0(1;3)", (0, (1,), 3), "barvinok", Fraction(1, 3)
    yield "periodicity s_11(4,3,5;7)", (11, (4, 3, 5), 7), "barvinok", Fraction(1, 7)
    rng = random.Random(20240101)
    for i in range(25):
        b = rng.randint(2, 60)
        d = rng.randint(1, 3)
        a = []
        while len(a) < d:
            x = rng.randint(1, 500)
            if gcd(x, b) == 1:
                a.append(x)
        n = rng.randint(-b, 2 * b)
        yield f"agreement #{i + 1} s_{n}({','.join(map(str, a))};{b})", (n, tuple(a), b), "both", None


def cmd_selftest(args=None, out=sys.stdout, err=sys.stderr) -> int:
    failures = 0
    total = 0
    for name, (n, a, b), method, expected in _selftest_cases():
        total += 1
        try:
            value = compute(validate(n, a, b), method).value
            ok = expected is None or value == expected
            detail = format_value(value, True)
        except Exception as e:  # any failure counts, including internal certificates
            ok = False
            detail = f"{type(e).__name__}: {e}"
        failures += not ok
        print(f"{'PASS' if ok else 'FAIL'} {name}: {detail}", file=out)
    print(f"{total - failures}/{total} passed", file=out)
    return EXIT_OK if failures == 0 else EXIT_INTERNAL


# -- entry point ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="fdsum", description="Exact Fourier-Dedekind sums.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("compute", help="compute one sum")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--a", type=_int_list, required=True)
    c.add_argument("--b", type=int, required=True)
    c.add_argument("--method", choices=METHODS, default="barvinok")
    c.add_argument("--format", choices=("plain", "json"), default="plain")
    c.add_argument("--dump-decomposition", action="store_true")

    bt = sub.add_parser("batch", help="compute one sum per input line")
    bt.add_argument("--input", required=True, help="path, or - for stdin")
    bt.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
    bt.add_argument("--method", choices=METHODS, default="barvinok")

    be = sub.add_parser("bench", help="time the computation over a list of b")
    be.add_argument("--a", type=_int_list, required=True)
    be.add_argument("--n", type=int, required=True)
    be.add_argument("--b-list", type=_int_list, required=True)
    be.add_argument("--repeat", type=int, default=3)
    be.add_argument("--method", choices=("barvinok", "cyclotomic"), default="barvinok")

    sub.add_parser("selftest", help="run the embedded golden suite")
    return p


HANDLERS = {"compute": cmd_compute, "batch": cmd_batch, "bench": cmd_bench, "selftest": cmd_selftest}


def main(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv and argv[0].startswith("-") and argv[0] not in ("-h", "--help"):
        argv.insert(0, "compute")
    try:
        args = build_parser().parse_args(argv)
    except _Usage as e:
        print(e, file=err)
        return EXIT_INVALID
    return HANDLERS[args.command](args, out=out, err=err)


if __name__ == "__main__":
    sys.exit(main())
