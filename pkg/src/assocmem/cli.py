"""Command-line front end binding the library into reproducible runs.

Subcommands: train, recall, spread, fixed-points, capacity, collapse.
Each run emits one JSON document (to --out, or stdout) embedding the tool
version and the full configuration; commands that use randomness refuse to
run without an explicit --seed.

Exit codes: 0 success, 2 usage or unreadable input file, 3 file parse
error, 4 dimension mismatch, 5 invalid parameter value.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from ._version import __version__
from . import analysis, formats, generator, hebbian, quantum
from .core import DimensionMismatch, ParameterError, ValidationError, as_bipolar

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_DIMENSION = 4
EXIT_PARAMETER = 5


def _parse_state(text: str) -> np.ndarray:
    """An inline state: comma or whitespace separated tokens from {1, -1}."""
    tokens = [t for t in text.replace(",", " ").split() if t]
    values = []
    for token in tokens:
        if token not in ("1", "+1", "-1"):
            raise ParameterError(f"bad state token {token!r}, expected 1 or -1")
        values.append(1 if token in ("1", "+1") else -1)
    if not values:
        raise ParameterError("state is empty")
    return as_bipolar(values)


def _parse_start(text: str) -> dict[int, int]:
    """Start syntax: comma-separated 1-based index:value pairs, e.g. 1:+1,4:-1."""
    out: dict[int, int] = {}
    for piece in text.split(","):
        piece = piece.strip()
        if not piece:
            continue
        if ":" not in piece:
            raise ParameterError(f"bad start entry {piece!r}, expected index:value")
        idx_text, val_text = piece.split(":", 1)
        try:
            idx = int(idx_text)
        except ValueError:
            raise ParameterError(f"bad start index {idx_text!r}") from None
        if idx < 1:
            raise ParameterError(f"start indices are 1-based, got {idx}")
        if val_text not in ("1", "+1", "-1"):
            raise ParameterError(f"bad start value {val_text!r}, expected +1 or -1")
        value = 1 if val_text in ("1", "+1") else -1
        if idx - 1 in out and out[idx - 1] != value:
            raise ParameterError(f"start assigns neuron {idx} twice with different values")
        out[idx - 1] = value
    if not out:
        raise ParameterError("start assignment is empty")
    return out


def _parse_int_list(text: str, what: str) -> list[int]:
    values = []
    for piece in text.split(","):
        piece = piece.strip()
        if not piece:
            continue
        try:
            values.append(int(piece))
        except ValueError:
            raise ParameterError(f"bad {what} entry {piece!r}, expected an integer") from None
    if not values:
        raise ParameterError(f"{what} is empty")
    return values


def _parse_float_list(text: str, what: str) -> list[float]:
    values = []
    for piece in text.split(","):
        piece = piece.strip()
        if not piece:
            continue
        try:
            values.append(float(piece))
        except ValueError:
            raise ParameterError(f"bad {what} entry {piece!r}, expected a number") from None
    if not values:
        raise ParameterError(f"{what} is empty")
    return values


def _state_list(state) -> list[int]:
    return [int(v) for v in state]


def _run_train(args) -> dict:
    config = {"memories": args.memories, "seed": None}
    mset = formats.parse_memories(args.memories)
    weights = hebbian.train(mset)
    return formats.weights_document(
        weights,
        config,
        command="train",
        m=mset.m,
        duplicates=[list(group) for group in mset.duplicates],
    )


def _run_recall(args) -> dict:
    config = {
        "weights": args.weights,
        "state": args.state,
        "async": bool(args.asynchronous),
        "schedule": args.schedule if args.asynchronous else None,
        "passes": args.passes,
        "seed": args.seed,
    }
    weights = formats.load_weights(args.weights)
    state = _parse_state(args.state)
    if args.asynchronous:
        result = hebbian.recall_async(
            weights, state, schedule=args.schedule, max_passes=args.passes, seed=args.seed
        )
        mode = "asynchronous"
    else:
        result = hebbian.recall_sync_iterated(weights, state, max_passes=args.passes)
        mode = "synchronous"
    payload = {
        "mode": mode,
        "initial": _state_list(state),
        "final": _state_list(result.state),
        "iterations": result.iterations,
        "converged": result.converged,
        "energy_trace": [float(e) for e in result.energy_trace],
        "cycle": None if result.cycle is None else [_state_list(s) for s in result.cycle],
    }
    return formats.document("report", "recall", config, result=payload)


def _run_spread(args) -> dict:
    config = {
        "weights": args.weights,
        "proximity": args.proximity,
        "start": args.start,
        "memories": args.memories,
        "seed": None,
    }
    weights = formats.load_weights(args.weights)
    start = _parse_start(args.start)
    proximity = formats.parse_proximity(args.proximity) if args.proximity else None
    memories = formats.parse_memories(args.memories) if args.memories else None
    report = generator.retrieve_report(weights, start, memories, proximity=proximity)
    trace = report.trace
    payload = {
        "n": int(weights.shape[0]),
        "order": [int(i) + 1 for i in trace.order.permutation],
        "start": [[neuron + 1, value] for neuron, value in trace.start],
        "steps": [
            {"neuron": s.neuron + 1, "field": s.field, "value": s.value} for s in trace.steps
        ],
        "final": _state_list(trace.final),
        "consistency_flags": sorted(i + 1 for i in trace.consistency_flags),
        "fixed_point": report.is_fixed_point,
        "matched_memory": None if report.matched_index is None else report.matched_index + 1,
        "nearest_memory": None if report.nearest_index is None else report.nearest_index + 1,
        "hamming_to_nearest": report.nearest_distance,
    }
    return formats.document("report", "spread", config, result=payload)


def _run_fixed_points(args) -> dict:
    config = {
        "weights": args.weights,
        "memories": args.memories,
        "limit": args.limit,
        "seed": None,
    }
    weights = formats.load_weights(args.weights)
    points = analysis.enumerate_fixed_points(weights, limit_n=args.limit)
    census_payload = None
    probe_payload = None
    if args.memories:
        mset = formats.parse_memories(args.memories)
        census = analysis.classify(points, mset)
        census_payload = {
            "stored": census.stored_count,
            "complement": census.complement_count,
            "spurious": census.spurious_count,
            "labels": list(census.labels),
        }
        probe = analysis.complement_asymmetry_probe(weights, mset)
        probe_payload = {
            "fixed_memories": [i + 1 for i in probe.fixed_memory_indices],
            "failures": [
                {
                    "memory": f.memory_index + 1,
                    "zero_components": [c + 1 for c in f.zero_field_components],
                }
                for f in probe.failures
            ],
        }
    payload = {
        "n": int(weights.shape[0]),
        "count": len(points),
        "fixed_points": [_state_list(p) for p in points],
        "census": census_payload,
        "complement_asymmetry": probe_payload,
    }
    return formats.document("report", "fixed-points", config, result=payload)


def _run_capacity(args) -> dict:
    m_values = _parse_int_list(args.m_list, "m-list")
    config = {
        "n": args.n,
        "m_list": m_values,
        "trials": args.trials,
        "seed": args.seed,
    }
    report = analysis.capacity_experiment(
        args.n, m_values, trials=args.trials, seed=args.seed, workers=args.workers
    )
    payload = {
        "n": report.n,
        "trials": args.trials,
        "rows": [
            {
                "m": row.m,
                "trials": row.trials,
                "per_bit_instability": row.per_bit_instability,
                "all_stable_fraction": row.all_stable_fraction,
                "stderr": row.stderr,
            }
            for row in report.rows
        ],
        "threshold_capacity_ratio": report.threshold_capacity_ratio,
        "threshold_rule": "largest m/n with per-bit stability >= 0.99",
        "definitions": {
            "per_bit_instability": "fraction of memory components flipped by one synchronous pass",
            "all_stable_fraction": "fraction of trials where every memory is an exact fixed point",
        },
    }
    return formats.document("report", "capacity", config, result=payload)


def _run_collapse(args) -> dict:
    if args.count_levels is not None:
        if args.samples is not None or args.seed is not None:
            raise ParameterError("--samples and --seed only apply to amplitude sampling")
        config = {
            "count_levels": args.count_levels,
            "list_cases": bool(args.list_cases),
            "seed": None,
        }
        # the full table is only materialized when the caller wants it listed
        if args.list_cases:
            table = quantum.enumerate_reorganizations(args.count_levels)
            distinct = table.distinct_count
            cases = [list(c) for c in table.cases]
        else:
            distinct = quantum.reorg_count(args.count_levels)
            cases = None
        payload = {
            "n_levels": int(args.count_levels),
            "raw_case_count": 2 * distinct,
            "distinct_count": distinct,
            "cases": cases,
        }
        return formats.document("report", "collapse", config, result=payload)

    if args.list_cases:
        raise ParameterError("--list-cases only applies to --count-levels")
    if args.seed is None:
        raise ParameterError("collapse sampling needs an explicit --seed")
    if args.samples is None:
        raise ParameterError("collapse sampling needs --samples")
    amps = quantum.as_amplitudes(_parse_float_list(args.amps, "amps"))
    config = {
        "amps": [float(a) for a in amps],
        "samples": args.samples,
        "seed": args.seed,
    }
    samples = quantum.collapse_sample(amps, args.seed, args.samples)
    counts = np.bincount(samples, minlength=amps.size)
    payload = {
        "k": int(amps.size),
        "probabilities": [float(a * a) for a in amps],
        "samples": [int(s) for s in samples],
        "counts": [int(c) for c in counts],
        "frequencies": [int(c) / len(samples) for c in counts],
    }
    return formats.document("report", "collapse", config, result=payload)


_RUNNERS = {
    "train": _run_train,
    "recall": _run_recall,
    "spread": _run_spread,
    "fixed-points": _run_fixed_points,
    "capacity": _run_capacity,
    "collapse": _run_collapse,
}


def run(args) -> dict:
    """Execute one parsed command and return its report document."""
    return _RUNNERS[args.command](args)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="assocmem",
        description="Feedback associative-memory lab: train, recall, spread, enumerate, measure.",
    )
    parser.add_argument("--version", action="version", version=f"assocmem {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    train = sub.add_parser("train", help="build outer-product weights from a memory file")
    train.add_argument("--memories", required=True, help="memory file, one bipolar vector per line")
    train.add_argument("--out", required=True, help="path for the weights document")

    recall = sub.add_parser("recall", help="iterate recall dynamics from a start state")
    recall.add_argument("--weights", required=True, help="weights document")
    recall.add_argument("--state", required=True, help="inline state, e.g. 1,-1,1,1")
    recall.add_argument("--async", dest="asynchronous", action="store_true",
                        help="update one neuron at a time instead of whole passes")
    recall.add_argument("--schedule", choices=("random", "cyclic"), default="random",
                        help="asynchronous update order (default random, needs --seed)")
    recall.add_argument("--passes", type=int, default=None, help="pass budget (default 10n)")
    recall.add_argument("--seed", type=int, default=None, help="seed for the random schedule")
    recall.add_argument("--out", default=None, help="report path (default stdout)")

    spread = sub.add_parser("spread", help="spreading-activity retrieval from a fragment")
    spread.add_argument("--weights", required=True, help="weights document")
    spread.add_argument("--proximity", default=None, help="proximity file (default index order)")
    spread.add_argument("--start", required=True, help="1-based index:value pairs, e.g. 1:+1,4:-1")
    spread.add_argument("--memories", default=None, help="memory file for match reporting")
    spread.add_argument("--out", default=None, help="report path (default stdout)")

    fixed = sub.add_parser("fixed-points", help="enumerate all fixed points exhaustively")
    fixed.add_argument("--weights", required=True, help="weights document")
    fixed.add_argument("--memories", default=None, help="memory file for the census")
    fixed.add_argument("--limit", type=int, default=analysis.ENUMERATION_LIMIT,
                       help="largest n to enumerate (default 20)")
    fixed.add_argument("--out", default=None, help="report path (default stdout)")

    capacity = sub.add_parser("capacity", help="Monte Carlo capacity sweep")
    capacity.add_argument("--n", type=int, required=True, help="neuron count (>= 10)")
    capacity.add_argument("--m-list", required=True, help="comma-separated memory counts")
    capacity.add_argument("--trials", type=int, required=True, help="trials per m (>= 50)")
    capacity.add_argument("--seed", type=int, required=True, help="experiment seed")
    capacity.add_argument("--workers", type=int, default=1, help="thread workers (default 1)")
    capacity.add_argument("--out", default=None, help="report path (default stdout)")

    collapse = sub.add_parser("collapse", help="squared-amplitude sampling or case counting")
    which = collapse.add_mutually_exclusive_group(required=True)
    which.add_argument("--amps", default=None, help="comma-separated amplitudes, e.g. 0.6,0.8")
    which.add_argument("--count-levels", type=int, default=None,
                       help="count distinct cases for an n-point amplitude grid")
    collapse.add_argument("--samples", type=int, default=None, help="number of draws")
    collapse.add_argument("--seed", type=int, default=None, help="sampling seed")
    collapse.add_argument("--list-cases", action="store_true",
                          help="embed the case table in the count report")
    collapse.add_argument("--out", default=None, help="report path (default stdout)")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc = run(args)
        text = formats.render_document(doc)
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return EXIT_OK
    except formats.ParseError as exc:
        print(f"assocmem: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DimensionMismatch as exc:
        print(f"assocmem: dimension mismatch: {exc}", file=sys.stderr)
        return EXIT_DIMENSION
    except (ParameterError, ValidationError) as exc:
        print(f"assocmem: invalid parameter: {exc}", file=sys.stderr)
        return EXIT_PARAMETER
    except OSError as exc:
        print(f"assocmem: cannot read or write: {exc}", file=sys.stderr)
        return EXIT_USAGE


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
