"""Command-line interface.

Thin adapters over the library: every subcommand produces exactly what the
corresponding library call produces.  Exit codes: 0 success, 2 parameter,
3 capacity, 4 label, 5 decode failure, 6 I/O.
"""

from __future__ import annotations

import argparse
import os
import sys
import time

from . import harness
from .bitword import StuckPattern, word_from_bits, word_from_hex, word_to_hex
from .codec import decode, encode, new_codec
from .errors import (
    CapacityError,
    DecodeFailure,
    InfeasibleLabelError,
    LabelError,
    ParameterError,
)
from .labeling import (
    greedy_label,
    label_s2,
    load_label_positions,
    make_label,
    save_label,
    validate_label,
)
from .masks import build_mask_set, load_mask_set, save_mask_set
from .pbm import write_pbm

EXIT_OK = 0
EXIT_PARAMETER = 2
EXIT_CAPACITY = 3
EXIT_LABEL = 4
EXIT_DECODE = 5
EXIT_IO = 6


def _default_threads() -> int:
    try:
        return max(1, int(os.environ.get("RMSTUCK_THREADS", "1")))
    except ValueError:
        return 1


def _mask_set_from_args(args):
    if getattr(args, "maskset", None):
        return load_mask_set(args.maskset)
    if args.s is None or args.m is None:
        raise ParameterError("give either --maskset FILE or both -s and -m")
    return build_mask_set(args.s, args.m)


def _label_for(args, s, m):
    if getattr(args, "label_file", None):
        file_s, file_m, positions = load_label_positions(args.label_file)
        if (file_s, file_m) != (s, m):
            raise ParameterError(
                f"label file is for s={file_s}, m={file_m}, command uses s={s}, m={m}"
            )
        return positions
    return None


def cmd_masks(args) -> int:
    mask_set = build_mask_set(args.s, args.m)
    if args.out:
        save_mask_set(mask_set, args.out)
    print(f"N={mask_set.count}")
    return EXIT_OK


def cmd_label(args) -> int:
    mask_set = _mask_set_from_args(args)
    if args.validate is not None:
        ok = validate_label(mask_set, args.validate)
        print("valid" if ok else "invalid")
        return EXIT_OK if ok else EXIT_LABEL
    mode = args.mode
    if mode == "auto":
        mode = "exact-s2" if mask_set.s == 2 else "greedy"
    if mode == "exact-s2":
        if mask_set.s != 2:
            raise ParameterError("exact-s2 labeling applies to multiplicity 2 only")
        label = label_s2(mask_set.m)
    else:
        label = greedy_label(mask_set)
    if args.out:
        save_label(label, mask_set.s, mask_set.m, args.out)
    print(f"L={label.size} valid positions={' '.join(str(p) for p in label.positions)}")
    return EXIT_OK


def cmd_encode(args) -> int:
    cfg = new_codec(args.r, args.m, args.s, _label_for(args, args.s, args.m))
    stuck = StuckPattern.parse(args.stuck or [])
    word = encode(cfg, word_from_bits(args.data), stuck)
    print(word_to_hex(word))
    return EXIT_OK


def cmd_decode(args) -> int:
    cfg = new_codec(args.r, args.m, args.s, _label_for(args, args.s, args.m))
    message = decode(cfg, word_from_hex(args.word, cfg.n))
    print("".join(str(b) for b in message))
    return EXIT_OK


def cmd_verify(args) -> int:
    report = harness.verify_theorems(args.s_max, args.m_max)
    for s in range(1, args.s_max + 1):
        for m in range(max(s, 1), args.m_max + 1):
            work = harness.coverage_work(s, m)
            if work > args.coverage_guard:
                report.records.append(
                    harness.CheckRecord(
                        name="coverage",
                        params={"s": s, "m": m},
                        passed=True,
                        note=f"skipped: {work} checks exceed guard {args.coverage_guard}",
                    )
                )
                continue
            start = time.perf_counter()
            covered = harness.verify_coverage(s, m, guard=args.coverage_guard)
            report.records.append(
                harness.CheckRecord(
                    name="coverage",
                    params={"s": s, "m": m},
                    passed=covered,
                    expected=f"{work} patterns covered",
                    measured=f"{work if covered else 'missing patterns'}/{work}",
                    seconds=time.perf_counter() - start,
                )
            )
    for line in report.lines():
        print(line)
    if args.out:
        report.save(args.out)
    print("PASS" if report.all_passed else "FAIL")
    return EXIT_OK if report.all_passed else 1


def cmd_table(args) -> int:
    rows = harness.reproduce_table(with_greedy=not args.no_greedy)
    for row in rows:
        print(row.line())
    if args.out:
        harness.save_table(rows, args.out)
    ok = all(row.matches for row in rows)
    print("OK" if ok else "MISMATCH")
    return EXIT_OK if ok else 1


def cmd_render(args) -> int:
    mask_set = build_mask_set(args.s, args.m)
    write_pbm(args.out, mask_set.masks)
    print(f"{mask_set.count}x{mask_set.n} -> {args.out}")
    return EXIT_OK


def cmd_simulate(args) -> int:
    cfg = new_codec(args.r, args.m, args.s, _label_for(args, args.s, args.m))
    stats = harness.simulate(
        cfg,
        trials=args.trials,
        stuck_count=args.stuck_count,
        error_weight=args.error_weight,
        seed=args.seed,
        error_mode="bsc" if args.bsc is not None else "exact",
        bsc_p=args.bsc or 0.0,
        threads=args.threads,
    )
    print(f"trials={stats.trials} frame_errors={stats.frame_errors} decode_failures={stats.decode_failures}")
    print(f"stuck: {stats.stuck_model}")
    print(f"errors: {stats.error_model}")
    print(f"seed={stats.seed}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rmstuck",
        description="Joint stuck-at and random error correction with Reed-Muller mask sets.",
    )
    parser.add_argument(
        "--threads",
        type=int,
        default=_default_threads(),
        help="worker threads for simulation trials (env RMSTUCK_THREADS)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("masks", help="build a mask set and print its size")
    p.add_argument("-s", type=int, required=True, help="defect multiplicity")
    p.add_argument("-m", type=int, required=True, help="log2 of the word length")
    p.add_argument("-o", "--out", help="write the mask-set file here")
    p.set_defaults(func=cmd_masks)

    p = sub.add_parser("label", help="construct or validate a label for a mask set")
    p.add_argument("-s", type=int, help="defect multiplicity")
    p.add_argument("-m", type=int, help="log2 of the word length")
    p.add_argument("--maskset", help="read the mask set from a file instead")
    p.add_argument(
        "--mode",
        choices=["auto", "exact-s2", "greedy"],
        default="auto",
        help="construction to use (auto: exact for s=2, greedy otherwise)",
    )
    p.add_argument("--validate", type=int, nargs="+", help="only check these positions")
    p.add_argument("-o", "--out", help="write the label file here")
    p.set_defaults(func=cmd_label)

    p = sub.add_parser("encode", help="encode user bits around stuck cells")
    p.add_argument("-r", type=int, required=True, help="code order")
    p.add_argument("-m", type=int, required=True, help="log2 of the word length")
    p.add_argument("-s", type=int, required=True, help="defect multiplicity")
    p.add_argument("--label-file", help="label file (default: construct one)")
    p.add_argument("--data", required=True, help="user bits, e.g. 1101")
    p.add_argument("--stuck", nargs="*", help="stuck cells as pos:val pairs")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="decode a read word back to user bits")
    p.add_argument("-r", type=int, required=True, help="code order")
    p.add_argument("-m", type=int, required=True, help="log2 of the word length")
    p.add_argument("-s", type=int, required=True, help="defect multiplicity")
    p.add_argument("--label-file", help="label file (default: construct one)")
    p.add_argument("--word", required=True, help="read word as hex")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("verify", help="run the structural verifiers and coverage checks")
    p.add_argument("-s", "--s-max", type=int, required=True)
    p.add_argument("-m", "--m-max", type=int, required=True)
    p.add_argument("--coverage-guard", type=int, default=harness.COVERAGE_GUARD)
    p.add_argument("-o", "--out", help="write a JSONL report here")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="reproduce the reference parameter table")
    p.add_argument("--no-greedy", action="store_true", help="skip greedy label sizes")
    p.add_argument("-o", "--out", help="write the rows as JSONL here")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("render", help="render a mask set as a portable bitmap")
    p.add_argument("-s", type=int, required=True)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-o", "--out", required=True, help="output .pbm path")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("simulate", help="seeded Monte Carlo defect-channel run")
    p.add_argument("-r", type=int, required=True)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-s", type=int, required=True)
    p.add_argument("--label-file")
    p.add_argument("--trials", type=int, default=10_000)
    p.add_argument("--stuck-count", type=int, default=0)
    p.add_argument("--error-weight", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bsc", type=float, help="use iid flips with this probability instead")
    p.set_defaults(func=cmd_simulate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InfeasibleLabelError as exc:
        print(f"label error: {exc}", file=sys.stderr)
        return EXIT_LABEL
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except LabelError as exc:
        print(f"label error: {exc}", file=sys.stderr)
        return EXIT_LABEL
    except DecodeFailure as exc:
        print(f"decode failure: {exc}", file=sys.stderr)
        return EXIT_DECODE
    except ParameterError as exc:
        print(f"parameter error: {exc}", file=sys.stderr)
        return EXIT_PARAMETER
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
