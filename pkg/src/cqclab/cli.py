"""Command-line front end: capacity, codebook, transmit, stability, sweep.

All stochastic commands take a --seed and identical invocations produce
byte-identical output.  An optional --config JSON file supplies flag
defaults; explicit flags win.  Exit codes: 0 success, 2 usage error,
3 unwritable output path.
"""

import argparse
import csv
import json
import sys

import numpy as np

from . import capacity as cap
from . import codebook as cb
from . import codec
from . import stability as st


def _fmt(x) -> str:
    return format(float(x), ".12g")


def _write_csv(path, header, rows):
    try:
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(header)
            writer.writerows(rows)
    except OSError as exc:
        print(f"cannot write {path}: {exc}", file=sys.stderr)
        return 3
    return 0


def cmd_capacity(args):
    if args.delta is None:
        point = cap.noiseless_capacity()
    else:
        point = cap.noisy_capacity(args.delta)
    print(f"delta {_fmt(point.delta)}")
    print(f"p_star {_fmt(point.p_star)}")
    print(f"capacity {_fmt(point.capacity)}")
    return 0


def cmd_codebook(args):
    book = cb.build_variable(args.messages) if args.mode == "variable" \
        else cb.build_fixed(args.messages)
    rate = cb.codebook_rate(book)
    for word in book.codewords:
        print(f"{word.bits} {word.cost}")
    print(f"M {rate.M}")
    print(f"kind {book.kind}")
    print(f"total_cost {rate.total_cost}")
    print(f"rate {_fmt(rate.rate)}")
    if args.emit_codebook:
        try:
            with open(args.emit_codebook, "w") as fh:
                fh.write(cb.codebook_lines(book))
        except OSError as exc:
            print(f"cannot write {args.emit_codebook}: {exc}", file=sys.stderr)
            return 3
    return 0


def cmd_transmit(args):
    params = codec.ChannelParams(delta=args.delta, seed=args.seed,
                                 bob_target=args.bob_target)
    try:
        report = codec.transmit(args.bits, params)
    except codec.MalformedAckStream as exc:
        print(f"decode failed: {exc} (bob_starved {str(exc.bob_starved).lower()})",
              file=sys.stderr)
        return 1
    print(f"decoded {report.decoded}")
    print(f"slots_used {report.slots_used}")
    print(f"drops {report.drops}")
    print(f"bob_starved {str(report.bob_starved).lower()}")
    return 0


def cmd_stability(args):
    model = st.ArrivalModel(args.lambda_a, args.lambda_b)
    report = st.simulate_queues(model, args.slots, args.seed)
    print(f"slots {report.slots}")
    print(f"time_avg_total_queue {_fmt(report.time_avg_total_queue)}")
    print(f"max_total_queue {report.max_total_queue}")
    print(f"tail_slope {_fmt(report.tail_slope)}")
    if args.dump_trajectory:
        q_alice, q_bob = st.simulate_trajectory(model, args.slots, args.seed)
        rows = ((t, int(q_alice[t]), int(q_bob[t])) for t in range(args.slots))
        return _write_csv(args.dump_trajectory, ["slot", "qA", "qB"], rows)
    return 0


def _rate_sweep_rows(m_max):
    var_costs = cb.variable_cost_curve(m_max)
    for m in range(2, m_max + 1):
        vc = var_costs[m]
        fc = cb.fixed_total_cost(m)
        bits = m * np.log2(m)
        yield [m, _fmt(bits / vc), _fmt(bits / fc), vc, fc]


def _capacity_sweep_rows(start, end, steps):
    for delta in np.linspace(start, end, steps):
        point = cap.noisy_capacity(float(delta))
        yield [_fmt(point.delta), _fmt(point.p_star), _fmt(point.capacity)]


def _stability_sweep_rows(pairs, slots, seed):
    for i, (la, lb) in enumerate(pairs):
        report = st.simulate_queues(st.ArrivalModel(la, lb), slots, seed + i)
        yield [_fmt(la), _fmt(lb), _fmt(report.time_avg_total_queue),
               _fmt(report.tail_slope), report.max_total_queue]


def _parse_lambda_grid(text):
    pairs = []
    for part in text.split(","):
        la, _, lb = part.partition(":")
        pairs.append((float(la), float(lb)))
    return pairs


def cmd_sweep(args):
    if args.kind == "rate":
        if args.m_max < 2:
            raise _Usage("--m-max must be at least 2")
        header = ["M", "variable_rate", "fixed_rate", "variable_cost", "fixed_cost"]
        rows = _rate_sweep_rows(args.m_max)
    elif args.kind == "capacity":
        if args.steps < 2:
            raise _Usage("--steps must be at least 2")
        header = ["delta", "p_star", "capacity"]
        rows = _capacity_sweep_rows(args.delta_start, args.delta_end, args.steps)
    else:
        pairs = _parse_lambda_grid(args.lambda_grid)
        if not pairs:
            raise _Usage("--lambda-grid must list at least one pair")
        header = ["lambda_a", "lambda_b", "time_avg_queue", "tail_slope", "max_queue"]
        rows = _stability_sweep_rows(pairs, args.slots, args.seed)
    return _write_csv(args.out, header, rows)


class _Usage(Exception):
    pass


def _binary_string(text):
    if not text or text.strip("01"):
        raise argparse.ArgumentTypeError(f"not a binary string: {text!r}")
    return text


def _unit_float(text):
    value = float(text)
    if not 0.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError(f"{value} outside [0, 1]")
    return value


def build_parser():
    parser = argparse.ArgumentParser(
        prog="cqclab",
        description="Covert queueing channel laboratory for a two-user "
                    "round robin scheduler.")
    parser.add_argument("--config", help="JSON file with flag defaults")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("capacity", help="print a capacity point")
    p.add_argument("--delta", type=_unit_float, default=None,
                   help="drop probability (default: lossless closed form)")
    p.set_defaults(func=cmd_capacity)

    p = sub.add_parser("codebook", help="build and print a codebook")
    p.add_argument("--messages", type=int, required=True)
    p.add_argument("--mode", choices=["variable", "fixed"], default="variable")
    p.add_argument("--emit-codebook", metavar="PATH",
                   help="also write the codewords, one per line")
    p.set_defaults(func=cmd_codebook)

    p = sub.add_parser("transmit", help="send a message through the simulator")
    p.add_argument("--bits", type=_binary_string, required=True)
    p.add_argument("--delta", type=_unit_float, default=0.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bob-target", type=int, default=10)
    p.set_defaults(func=cmd_transmit)

    p = sub.add_parser("stability", help="simulate queues under random load")
    p.add_argument("--lambda-a", type=_unit_float, required=True)
    p.add_argument("--lambda-b", type=_unit_float, required=True)
    p.add_argument("--slots", type=int, default=1_000_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--dump-trajectory", metavar="PATH",
                   help="write slot,qA,qB rows to PATH")
    p.set_defaults(func=cmd_stability)

    p = sub.add_parser("sweep", help="write a CSV over a parameter range")
    p.add_argument("--kind", choices=["rate", "capacity", "stability"],
                   required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--m-max", type=int, default=64)
    p.add_argument("--delta-start", type=_unit_float, default=0.0)
    p.add_argument("--delta-end", type=_unit_float, default=1.0)
    p.add_argument("--steps", type=int, default=101)
    p.add_argument("--lambda-grid", default="0.45:0.45,0.6:0.6",
                   help="comma-separated la:lb pairs")
    p.add_argument("--slots", type=int, default=100_000)
    p.set_defaults(func=cmd_sweep)

    return parser, sub


def main(argv=None) -> int:
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config")
    known, _ = pre.parse_known_args(argv)

    parser, sub = build_parser()
    if known.config:
        try:
            with open(known.config) as fh:
                defaults = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            parser.error(f"cannot read config {known.config}: {exc}")
        if not isinstance(defaults, dict):
            parser.error("config must be a JSON object of flag defaults")
        defaults = {k.replace("-", "_"): v for k, v in defaults.items()}
        for action in sub.choices.values():
            action.set_defaults(**defaults)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _Usage as exc:
        parser.error(str(exc))  # exits 2
    except ValueError as exc:
        parser.error(str(exc))


if __name__ == "__main__":
    sys.exit(main())
