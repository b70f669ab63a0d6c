"""Command-line interface.

Exit codes: 0 success, 1 for violated bounds or failed certification,
2 for usage, parse, or class-validation errors.
"""

import argparse
import csv
import sys
import time

from .construct import CLASS_BUILDERS, construct_for_class
from .corpus import class_corpus
from .errors import ClassValidationError, ConsistencyError
from .formats import FORMATS, emit_graph, parse_graph
from .generate import (
    FAMILIES,
    buoy_graph,
    complete_multipartite_graph,
    cycle_expansion_graph,
    disjoint_c5,
    random_in_class,
    labeled_graphs,
    star_graph,
)
from .graph import Graph, is_connected
from .oracle import (
    independence_number,
    max_independent_set,
    min_dominating_set,
    min_secure_dominating_set,
    secure_domination_number,
)
from .patterns import CLASS_RULES, classify, free_of


def _load_graph(path: str) -> Graph:
    if path == "-":
        return parse_graph(sys.stdin.read())
    with open(path, "r", encoding="ascii") as fh:
        return parse_graph(fh.read())


def _fmt_set(members) -> str:
    return " ".join(str(v) for v in sorted(members))


def _cmd_classify(args) -> int:
    g = _load_graph(args.file)
    for key, value in classify(g).items():
        print(f"{key}: {'yes' if value else 'no'}")
    return 0


def _cmd_solve(args) -> int:
    g = _load_graph(args.file)
    if args.what == "alpha":
        witness = max_independent_set(g)
    elif args.what == "gamma":
        witness = min_dominating_set(g)
    else:
        witness, _ = min_secure_dominating_set(g)
    print(f"{args.what}: {len(witness)}")
    print(f"witness: {_fmt_set(witness)}")
    return 0


def _cmd_construct(args) -> int:
    g = _load_graph(args.file)
    result = construct_for_class(g, args.cls, validate=not args.skip_validation)
    print(f"class: {args.cls}")
    print(f"size: {len(result.members)}")
    print(f"bound: {result.bound}")
    print(f"set: {_fmt_set(result.members)}")
    print("certified: yes")
    if args.trace:
        if result.trace is None:
            print("trace: not recorded for this method")
        else:
            t = result.trace
            print(
                f"trace: initial-size={t.initial_set_size} "
                f"initial-exposed={t.initial_exposed_size} steps={len(t.steps)}"
            )
            for idx, s in enumerate(t.steps, 1):
                print(
                    f"step {idx}: threshold={s.threshold} vertex={s.vertex} "
                    f"guard={s.guard} recruit={s.recruit} "
                    f"size={s.set_size} exposed={s.exposed_size}"
                )
    return 0


def _check_instance(g: Graph, class_name: str) -> list[str]:
    """Bound checks for one in-class instance; returns violation messages."""
    problems = []
    try:
        result = construct_for_class(g, class_name, validate=False)
    except ConsistencyError as exc:
        return [f"construction failed: {exc}"]
    if len(result.members) > result.bound:
        problems.append(
            f"constructed size {len(result.members)} exceeds bound {result.bound}"
        )
    if g.n <= 12:
        exact = secure_domination_number(g)
        if exact > result.bound:
            problems.append(f"exact value {exact} exceeds bound {result.bound}")
        if len(result.members) < exact:
            problems.append(
                f"constructed size {len(result.members)} below exact value {exact}"
            )
    return problems


def _cmd_verify_bounds(args) -> int:
    if args.cls not in CLASS_BUILDERS:
        print(f"unknown class {args.cls!r}", file=sys.stderr)
        return 2
    if args.nmax > 7:
        print("exhaustive verification is capped at --nmax 7", file=sys.stderr)
        return 2
    patterns, need_connected = CLASS_RULES[args.cls]
    violations = 0
    for n in range(1, args.nmax + 1):
        in_class = 0
        bad = 0
        for g in labeled_graphs(n):
            if need_connected and not is_connected(g):
                continue
            if not free_of(g, patterns):
                continue
            in_class += 1
            problems = _check_instance(g, args.cls)
            if problems:
                bad += 1
                payload = emit_graph(g, "graph6").payload
                for p in problems:
                    print(f"violation [{payload}]: {p}", file=sys.stderr)
        print(f"class {args.cls} exhaustive n={n}: in-class={in_class} violations={bad}")
        violations += bad
    if args.samples:
        corpus = class_corpus(args.cls, args.samples, args.seed, max_n=12)
        bad = 0
        for g in corpus:
            problems = _check_instance(g, args.cls)
            if problems:
                bad += 1
                payload = emit_graph(g, "graph6").payload
                for p in problems:
                    print(f"violation [{payload}]: {p}", file=sys.stderr)
        print(f"class {args.cls} samples: count={args.samples} violations={bad}")
        violations += bad
    print(f"verify-bounds: {'FAIL' if violations else 'PASS'} ({violations} violations)")
    return 1 if violations else 0


def _bench_instances():
    for n in range(1, 11):
        yield "p3up2-free", f"star-{n}", star_graph(n)
    for k in range(1, 4):
        yield "p5-free", f"c5x{k}", disjoint_c5(k)
    for sizes in ((1, 1, 1, 1, 1), (2, 1, 2, 1, 1), (2, 2, 2, 2, 2)):
        label = "buoy-" + ",".join(map(str, sizes))
        yield "p5c4-free", label, buoy_graph(sizes)
    for sizes in ((2, 1, 1, 1, 1), (1, 3, 1, 1, 1), (2, 2, 1, 2, 1)):
        label = "expansion-" + ",".join(map(str, sizes))
        yield "p5c3-free", label, cycle_expansion_graph(sizes)


def _cmd_bench(args) -> int:
    rows = []
    for class_name, label, g in _bench_instances():
        start = time.perf_counter()
        result = construct_for_class(g, class_name, validate=True)
        elapsed_ms = int((time.perf_counter() - start) * 1000)
        alpha = independence_number(g)
        exact = secure_domination_number(g) if g.n <= 12 else None
        rows.append(
            {
                "class": class_name,
                "instance": label,
                "n": g.n,
                "alpha": alpha,
                "gamma_s_exact": "" if exact is None else exact,
                "constructed_size": len(result.members),
                "bound": str(result.bound),
                "within_bound": str(len(result.members) <= result.bound).lower(),
                "runtime_ms": elapsed_ms,
            }
        )
    rows.sort(key=lambda r: (r["class"], r["instance"]))
    fields = [
        "class",
        "instance",
        "n",
        "alpha",
        "gamma_s_exact",
        "constructed_size",
        "bound",
        "within_bound",
        "runtime_ms",
    ]
    with open(args.out, "w", newline="", encoding="ascii") as fh:
        writer = csv.DictWriter(fh, fieldnames=fields)
        writer.writeheader()
        writer.writerows(rows)
    print(f"wrote {len(rows)} rows to {args.out}")
    if any(r["within_bound"] != "true" for r in rows):
        return 1
    return 0


def _parse_sizes(raw: str) -> list[int]:
    try:
        return [int(tok) for tok in raw.split(",")]
    except ValueError as exc:
        raise ValueError(f"bad --sizes value {raw!r}") from exc


def _cmd_generate(args) -> int:
    if args.family in ("path", "cycle", "star", "complete"):
        if args.n is None:
            raise ValueError(f"--n is required for family {args.family!r}")
        g = FAMILIES[args.family](args.n)
    elif args.family == "disjoint-c5":
        if args.k is None:
            raise ValueError("--k is required for family 'disjoint-c5'")
        g = disjoint_c5(args.k)
    elif args.family == "buoy":
        if args.sizes is None:
            raise ValueError("--sizes is required for family 'buoy'")
        g = buoy_graph(_parse_sizes(args.sizes))
    elif args.family == "expansion":
        if args.sizes is None:
            raise ValueError("--sizes is required for family 'expansion'")
        g = cycle_expansion_graph(_parse_sizes(args.sizes))
    elif args.family == "multipartite":
        if args.sizes is None:
            raise ValueError("--sizes is required for family 'multipartite'")
        g = complete_multipartite_graph(_parse_sizes(args.sizes))
    elif args.family == "random-class":
        if args.cls is None or args.n is None:
            raise ValueError("--class and --n are required for family 'random-class'")
        if args.cls not in CLASS_RULES:
            raise ValueError(f"unknown class {args.cls!r}")
        patterns, need_connected = CLASS_RULES[args.cls]
        g = random_in_class(
            args.n,
            args.p,
            patterns,
            args.seed,
            require_connected=need_connected or args.connected,
        )
        if g is None:
            print("attempt budget exhausted without an in-class sample", file=sys.stderr)
            return 1
    else:
        raise ValueError(f"unknown family {args.family!r}")
    payload = emit_graph(g, args.format).payload
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(payload if payload.endswith("\n") else payload + "\n")
    else:
        print(payload, end="" if payload.endswith("\n") else "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="secdom",
        description="Secure domination: classify, solve exactly, construct with proven bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="print class membership flags for a graph file")
    p.add_argument("file", help="graph file (graph6 or edge list; '-' for stdin)")
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("solve", help="exact invariants via exhaustive search")
    p.add_argument("file")
    p.add_argument("--what", choices=("alpha", "gamma", "gamma-s"), required=True)
    p.set_defaults(fn=_cmd_solve)

    p = sub.add_parser("construct", help="build a bounded secure dominating set")
    p.add_argument("file")
    p.add_argument("--class", dest="cls", choices=sorted(CLASS_BUILDERS), required=True)
    p.add_argument("--skip-validation", action="store_true",
                   help="skip class membership checks (certification still runs)")
    p.add_argument("--trace", action="store_true", help="print insertion steps when available")
    p.set_defaults(fn=_cmd_construct)

    p = sub.add_parser("verify-bounds", help="check bounds exhaustively and on samples")
    p.add_argument("--class", dest="cls", required=True)
    p.add_argument("--nmax", type=int, required=True, help="exhaustive size cap (<= 7)")
    p.add_argument("--samples", type=int, default=0, help="extra seeded random instances")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=_cmd_verify_bounds)

    p = sub.add_parser("bench", help="run the fixed benchmark families, write CSV")
    p.add_argument("--out", required=True, help="CSV output path")
    p.set_defaults(fn=_cmd_bench)

    p = sub.add_parser("generate", help="emit a named family or a random in-class graph")
    p.add_argument("--family", required=True,
                   choices=sorted(FAMILIES) + ["buoy", "expansion", "multipartite", "random-class"])
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--sizes", help="comma-separated part sizes")
    p.add_argument("--class", dest="cls", help="target class for random-class")
    p.add_argument("--p", type=float, default=0.5, help="edge probability for random-class")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--connected", action="store_true", help="require connectivity")
    p.add_argument("--format", choices=FORMATS, default="graph6")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_generate)

    return parser


def run_command(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        if code in (0, None):
            return 0
        return 2
    try:
        return args.fn(args)
    except ConsistencyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ClassValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
