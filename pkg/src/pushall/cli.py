"""Command-line front end.

Commands: decide, colorings, sort-word, sweep, bench, verify-basis,
count-class.  Permutations are given on the command line, via --file, or
one per line on standard input ('#' starts a comment).  Human-readable
lines by default, --json for machine consumption.  Exit codes: 0 for
sortable/pass, 1 for not sortable/fail, 2 for usage errors.
"""

from __future__ import annotations

import argparse
import json
import math
import random
import sys
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from . import bases, coloring, enumeration, machine, oracle, permutations
from .enumeration import enumerate_colorings, is_pushall_sortable
from .permutations import Perm

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2


class UnknownCheck(ValueError):
    """sweep was asked for a check that does not exist."""


@dataclass
class RunReport:
    """Outcome of a batch command."""

    command: str
    inputs: int
    elapsed: float
    results: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "elapsed": self.elapsed,
            "results": self.results,
        }


def _read_batch(args) -> list[Perm]:
    texts: list[str] = []
    if args.perm:
        texts.extend(args.perm)
    elif args.file:
        with open(args.file, "r", encoding="utf-8") as fh:
            texts.extend(fh.read().splitlines())
    else:
        texts.extend(sys.stdin.read().splitlines())
    perms = []
    for line in texts:
        line = line.split("#", 1)[0].strip()
        if line:
            perms.append(permutations.parse(line))
    return perms


def _cmd_decide(args) -> int:
    perms = _read_batch(args)
    status = EXIT_OK
    for perm in perms:
        product = enumerate_colorings(perm)
        if product.sortable:
            word = None
            if args.word:
                first = next(product.materialize())
                word = coloring.sorting_word(perm, first)
            if args.json:
                payload = {"perm": list(perm), "pushall": True}
                if word is not None:
                    payload["word"] = word
                print(json.dumps(payload))
            else:
                print("PUSHALL" + (f" {word}" if word else ""))
        else:
            status = EXIT_NEGATIVE
            if args.json:
                print(json.dumps({"perm": list(perm), "pushall": False}))
            else:
                print("NOT-PUSHALL")
    return status


def _cmd_colorings(args) -> int:
    perms = _read_batch(args)
    for perm in perms:
        product = enumerate_colorings(perm)
        if args.count:
            print(product.count)
        elif args.materialize:
            for full in product.materialize():
                print(full)
        else:
            print(json.dumps(product.to_json_dict()))
    return EXIT_OK


def _cmd_sort_word(args) -> int:
    perms = _read_batch(args)
    status = EXIT_OK
    for perm in perms:
        product = enumerate_colorings(perm)
        if not product.sortable:
            status = EXIT_NEGATIVE
            if args.json:
                print(json.dumps({"perm": list(perm), "pushall": False}))
            else:
                print("NOT-PUSHALL")
            continue
        chosen = product.materialize()
        if not getattr(args, "all", False):
            chosen = [next(iter(chosen))]
        for col in chosen:
            word = coloring.sorting_word(perm, col)
            payload = {"perm": list(perm), "coloring": col, "word": word}
            if args.json:
                print(json.dumps(payload))
            else:
                print(f"{permutations.to_text(perm)}  {col}  {word}")
    return status


# ---------------------------------------------------------------------------
# sweep checks


def _check_coloring_equivalence(perm: Perm) -> bool:
    product = enumerate_colorings(perm)
    if sorted(product.materialize()) != oracle.brute_colorings(perm):
        return False
    return product.sortable == oracle.brute_pushall(perm)


def _check_popable(perm: Perm) -> bool:
    n = len(perm)
    for config in (
        machine.StackConfiguration(perm[:cut], perm[cut:]) for cut in range(n + 1)
    ):
        popped = machine.pop_out(config, n) is not None
        clean = machine.find_unsortable_pattern(config) is None
        if popped != clean:
            return False
    return True


def _check_naive_optimal(perm: Perm) -> bool:
    if permutations.is_minus_decomposable(perm):
        return True
    return enumeration.enumerate_indecomposable(
        perm
    ) == enumeration.enumerate_indecomposable_naive(perm)


def _check_two_stack_minus(perm: Perm) -> bool:
    blocks = permutations.minus_blocks(perm)
    if len(blocks) < 2:
        return True
    expected = all(oracle.brute_pushall(b) for b in blocks[:-1]) and oracle.brute_two_stack(
        blocks[-1]
    )
    return oracle.brute_two_stack(perm) == expected


def _check_pushall_minus(perm: Perm) -> bool:
    blocks = permutations.minus_blocks(perm)
    if len(blocks) < 2:
        return True
    expected = all(oracle.brute_pushall(b) for b in blocks)
    return oracle.brute_pushall(perm) == expected


def _check_plus_patterns(perm: Perm) -> bool:
    verdict = bases.pushall_by_patterns_plus(perm)
    return verdict is None or verdict == oracle.brute_pushall(perm)


def _check_separable_patterns(perm: Perm) -> bool:
    verdict = bases.pushall_by_patterns_separable(perm)
    return verdict is None or verdict == oracle.brute_pushall(perm)


def _check_cs(perm: Perm) -> bool:
    return not bases.sufficient_pushall_cs(perm) or oracle.brute_pushall(perm)


def _check_b1(perm: Perm) -> bool:
    blocks = permutations.plus_blocks(perm)
    if len(blocks) < 2 or len(blocks[0]) == 1 or len(blocks[-1]) == 1:
        return True
    return oracle.brute_pushall(perm) == permutations.avoids(perm, bases.B_ONE)


def _check_b2(perm: Perm) -> bool:
    return bases.member_one_plus(perm) == permutations.avoids(perm, bases.B_TWO)


def _check_b3(perm: Perm) -> bool:
    return bases.member_plus_one(perm) == permutations.avoids(perm, bases.B_THREE)


_PER_PERM_CHECKS: dict[str, tuple[Callable[[Perm], bool], int]] = {
    # name: (per-permutation predicate, hard size cap)
    "coloring-equivalence": (_check_coloring_equivalence, 8),
    "popable": (_check_popable, 8),
    "naive-vs-optimal": (_check_naive_optimal, 7),
    "minus-2stack": (_check_two_stack_minus, 9),
    "minus-pushall": (_check_pushall_minus, 12),
    "plus-patterns": (_check_plus_patterns, 12),
    "separable-patterns": (_check_separable_patterns, 12),
    "cs-sufficient": (_check_cs, 12),
    "basis-B1": (_check_b1, 12),
    "basis-B2": (_check_b2, 8),
    "basis-B3": (_check_b3, 8),
}


def run_sweep(max_n: int, check: str) -> RunReport:
    """Run a named per-permutation check over S_1..S_max_n.

    Stops at the first counterexample; the report carries either
    {"pass": True} or the counterexample.
    """
    try:
        predicate, cap = _PER_PERM_CHECKS[check]
    except KeyError:
        raise UnknownCheck(
            f"unknown check {check!r}; known: {', '.join(sorted(_PER_PERM_CHECKS))}"
        ) from None
    max_n = min(max_n, cap)
    start = time.perf_counter()
    inputs = 0
    counterexample: Optional[Perm] = None
    for perm in oracle.permutations_up_to(max_n, min_n=1):
        inputs += 1
        if not predicate(perm):
            counterexample = perm
            break
    elapsed = time.perf_counter() - start
    results: dict = {"check": check, "max_n": max_n, "pass": counterexample is None}
    if counterexample is not None:
        results["counterexample"] = list(counterexample)
    return RunReport("sweep", inputs, elapsed, results)


def _cmd_sweep(args) -> int:
    try:
        report = run_sweep(args.max_n, args.check)
    except UnknownCheck as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.json:
        print(json.dumps(report.to_json_dict()))
    else:
        verdict = "PASS" if report.results["pass"] else "FAIL"
        extra = ""
        if not report.results["pass"]:
            extra = "  counterexample: " + " ".join(
                map(str, report.results["counterexample"])
            )
        print(
            f"{verdict} {args.check} up to n={report.results['max_n']} "
            f"({report.inputs} permutations, {report.elapsed:.2f}s){extra}"
        )
    return EXIT_OK if report.results["pass"] else EXIT_NEGATIVE


# ---------------------------------------------------------------------------
# bench


def bench_instances(sizes: Iterable[int], samples: int, seed: int) -> list[tuple[int, list[Perm]]]:
    """Deterministic random instances: one shuffled range per (size, sample).

    Uses random.Random(seed) and its Fisher-Yates shuffle, consumed in
    (size, sample) order, so identical arguments give identical instances
    for this implementation.
    """
    rng = random.Random(seed)
    out = []
    for n in sizes:
        batch = []
        for _ in range(samples):
            values = list(range(1, n + 1))
            rng.shuffle(values)
            batch.append(tuple(values))
        out.append((n, batch))
    return out


def run_bench(sizes: list[int], samples: int, seed: int) -> RunReport:
    """Time the sortability decision on random permutations.

    Reports the mean decision time per size and the least-squares slope of
    log(time) against log(size).
    """
    start = time.perf_counter()
    instances = bench_instances(sizes, samples, seed)
    for n, batch in instances:  # untimed warmup; first calls pay JIT compilation
        if batch:
            is_pushall_sortable(batch[0])
            break
    per_size = []
    for n, batch in instances:
        if not batch:
            continue
        t0 = time.perf_counter()
        for perm in batch:
            is_pushall_sortable(perm)
        mean = (time.perf_counter() - t0) / len(batch)
        per_size.append({"n": n, "mean_seconds": mean})
    exponent = None
    if len(per_size) >= 2:
        xs = [math.log(entry["n"]) for entry in per_size]
        ys = [math.log(max(entry["mean_seconds"], 1e-9)) for entry in per_size]
        xbar = sum(xs) / len(xs)
        ybar = sum(ys) / len(ys)
        denom = sum((x - xbar) ** 2 for x in xs)
        exponent = sum((x - xbar) * (y - ybar) for x, y in zip(xs, ys)) / denom
    elapsed = time.perf_counter() - start
    results = {"sizes": per_size, "exponent": exponent, "seed": seed}
    return RunReport("bench", len(per_size) * samples, elapsed, results)


def _cmd_bench(args) -> int:
    sizes = [int(tok) for tok in args.sizes.split(",") if tok]
    report = run_bench(sizes, args.samples, args.seed)
    if args.json:
        print(json.dumps(report.to_json_dict()))
    else:
        for entry in report.results["sizes"]:
            print(f"n={entry['n']}: {entry['mean_seconds'] * 1000:.2f} ms per decision")
        if report.results["exponent"] is not None:
            print(f"fitted growth exponent: {report.results['exponent']:.2f}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify-basis / count-class


def _mine_b_plus() -> list[Perm]:
    mined = oracle.mine_basis(oracle.brute_pushall, 8)
    return [p for p in mined if permutations.is_plus_decomposable(p)]


def _mine_b_separable() -> list[Perm]:
    mined = oracle.mine_basis(
        lambda p: bases.is_separable(p) and oracle.brute_pushall(p), 8
    )
    expected_extra = set(bases.SEPARABILITY_BASIS)
    return [p for p in mined if p not in expected_extra]


_BASIS_MINERS: dict[str, tuple[Callable[[], list[Perm]], tuple[Perm, ...]]] = {
    "B2": (lambda: oracle.mine_basis(bases.member_one_plus, 7), bases.B_TWO),
    "B3": (lambda: oracle.mine_basis(bases.member_plus_one, 7), bases.B_THREE),
    "Bplus": (_mine_b_plus, bases.B_PLUS),
    "Bseparable": (_mine_b_separable, bases.B_SEPARABLE),
    "both-132-213": (
        lambda: oracle.mine_basis(
            lambda p: not (
                permutations.contains_pattern(p, bases.P132)
                and permutations.contains_pattern(p, bases.P213)
            ),
            6,
        ),
        bases.MINIMAL_BOTH_132_213,
    ),
}


def verify_basis(name: str) -> RunReport:
    """Regenerate a stored basis from the brute-force decider and compare."""
    try:
        miner, stored = _BASIS_MINERS[name]
    except KeyError:
        raise UnknownCheck(
            f"unknown basis {name!r}; known: {', '.join(sorted(_BASIS_MINERS))}"
        ) from None
    start = time.perf_counter()
    mined = sorted(miner(), key=lambda p: (len(p), p))
    expected = sorted(stored, key=lambda p: (len(p), p))
    elapsed = time.perf_counter() - start
    results = {
        "basis": name,
        "pass": mined == expected,
        "mined": [list(p) for p in mined],
    }
    return RunReport("verify-basis", len(mined), elapsed, results)


def _cmd_verify_basis(args) -> int:
    names = sorted(_BASIS_MINERS) if args.name == "all" else [args.name]
    status = EXIT_OK
    for name in names:
        try:
            report = verify_basis(name)
        except UnknownCheck as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
        if args.json:
            print(json.dumps(report.to_json_dict()))
        else:
            verdict = "PASS" if report.results["pass"] else "FAIL"
            print(f"{verdict} basis {name} ({report.elapsed:.2f}s)")
        if not report.results["pass"]:
            status = EXIT_NEGATIVE
    return status


def _cmd_count_class(args) -> int:
    if args.max_n > 9:
        print("error: count-class supports n <= 9", file=sys.stderr)
        return EXIT_USAGE
    rows = []
    for n in range(1, args.max_n + 1):
        count = sum(1 for p in oracle.all_permutations(n) if is_pushall_sortable(p))
        rows.append({"n": n, "pushall_sortable": count})
        if not args.json:
            print(f"n={n}: {count}")
    if args.json:
        print(json.dumps({"command": "count-class", "results": rows}))
    return EXIT_OK


# ---------------------------------------------------------------------------


def _add_batch_arguments(sub) -> None:
    sub.add_argument("perm", nargs="*", help="permutations (e.g. '2431' or '2 4 3 1')")
    sub.add_argument("--file", help="read one permutation per line from a file")
    sub.add_argument("--json", action="store_true", help="machine-readable output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pushall",
        description="Decide and describe pushall sortings with two stacks in series.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    p = subparsers.add_parser("decide", help="is the permutation pushall sortable")
    _add_batch_arguments(p)
    p.add_argument("--word", action="store_true", help="also print one sorting word")
    p.set_defaults(func=_cmd_decide)

    p = subparsers.add_parser("colorings", help="blockwise coloring description")
    _add_batch_arguments(p)
    p.add_argument("--count", action="store_true", help="print only the number")
    p.add_argument("--materialize", action="store_true", help="stream full colorings")
    p.set_defaults(func=_cmd_colorings)

    p = subparsers.add_parser("sort-word", help="sorting words from colorings")
    _add_batch_arguments(p)
    p.add_argument("--all", action="store_true", help="one word per coloring")
    p.set_defaults(func=_cmd_sort_word)

    p = subparsers.add_parser("sweep", help="check an invariant over S_1..S_n")
    p.add_argument("max_n", type=int)
    p.add_argument("check", help=", ".join(sorted(_PER_PERM_CHECKS)))
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_sweep)

    p = subparsers.add_parser("bench", help="time decisions on random input")
    p.add_argument("--sizes", default="250,500,1000")
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_bench)

    p = subparsers.add_parser("verify-basis", help="re-mine a stored pattern basis")
    p.add_argument("name", nargs="?", default="all")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify_basis)

    p = subparsers.add_parser("count-class", help="count sortable permutations per size")
    p.add_argument("--max-n", type=int, default=7, dest="max_n")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_count_class)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (permutations.ParseError, permutations.NotAPermutation) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:  # pragma: no cover - pipeline convenience
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
