"""Command-line front end and verification suites.

Subcommands: predict, homology, reduce, euler, verify, grid.  The verify
suites pair each family instance's closed-form prediction with computed
homology and report match/mismatch records, optionally as JSON or CSV.
Exit codes: 0 success/match, 1 mismatch, 2 usage error, 3 resource
exhaustion (face budget).
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .complexes import DEFAULT_FACE_BUDGET, FaceBudgetExceeded, euler_characteristic
from .families import FamilySpec, build, parse_spec
from .graphs import GraphError, read_graph, write_graph
from .homology import HomologyProfile, homology_of_graph
from .predictor import (
    UnsupportedFamilyError,
    WedgeDescriptor,
    descriptor_euler,
    descriptor_homology,
    predict,
    predict_A,
    predict_A_minus_v,
    predict_grid4,
    predict_grid5,
    predict_x4,
)
from .reduction import reduce as reduce_graph
from .reduction import write_trace


@dataclass
class VerificationRecord:
    """One suite instance: prediction vs computation with provenance."""

    spec: FamilySpec
    predicted: WedgeDescriptor
    computed: HomologyProfile | None
    method: str
    verdict: str
    wall_time: float  # seconds

    def to_json(self) -> dict:
        return {
            "spec": str(self.spec),
            "predicted": self.predicted.to_json(),
            "computed": None if self.computed is None else self.computed.to_json(),
            "method": self.method,
            "verdict": self.verdict,
            "ms": int(round(self.wall_time * 1000)),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "VerificationRecord":
        return cls(
            spec=parse_spec(obj["spec"]),
            predicted=WedgeDescriptor.from_json(obj["predicted"]),
            computed=(None if obj["computed"] is None
                      else HomologyProfile.from_json(obj["computed"])),
            method=obj["method"],
            verdict=obj["verdict"],
            wall_time=obj["ms"] / 1000,
        )


def dump_records(records: list[VerificationRecord]) -> str:
    """Canonical (byte-stable) JSON for a record list."""
    return json.dumps([r.to_json() for r in records],
                      sort_keys=True, separators=(",", ":")) + "\n"


def _verdict(predicted: WedgeDescriptor, computed: HomologyProfile,
             method: str) -> str:
    expected = descriptor_homology(predicted)
    torsion = {d: t for d, t in computed.torsion.items() if t}
    if computed.betti != expected.betti or torsion:
        return "mismatch"
    if "two-field" in method and not computed.free_certified:
        return "mismatch"
    return "match"


def _verify_instance(spec: FamilySpec, budget: int) -> VerificationRecord:
    t0 = time.perf_counter()
    predicted = predict(spec)
    try:
        computed, method = homology_of_graph(build(spec), budget=budget)
        verdict = _verdict(predicted, computed, method)
    except FaceBudgetExceeded:
        computed, method, verdict = None, "none", "skipped:budget"
    return VerificationRecord(spec, predicted, computed, method, verdict,
                              time.perf_counter() - t0)


def _formula_record(spec: FamilySpec, predicted: WedgeDescriptor,
                    ok: bool, t0: float) -> VerificationRecord:
    return VerificationRecord(spec, predicted, None, "formula-only",
                              "match" if ok else "mismatch",
                              time.perf_counter() - t0)


# --- suites ----------------------------------------------------------------

_SUITE_SPECS = {
    "thm-2.4": ((1, 15), lambda n: [FamilySpec("path", n)]),
    "thm-2.5": ((1, 12), lambda n: [FamilySpec("grid", n, 2)]),
    "thm-2.6": ((3, 12), lambda n: [FamilySpec("cycle", n)]),
    "thm-2.7": ((1, 12), lambda n: [FamilySpec("grid", n, 3)]),
    "lem-2.8": ((1, 8), lambda n: [FamilySpec("x3", n), FamilySpec("y3", n)]),
    "lem-3.1": ((1, 8), lambda n: [FamilySpec("x4", n), FamilySpec("y4", n)]),
    "lem-x5": ((1, 8), lambda n: [FamilySpec("x5", n), FamilySpec("y5", n)]),
    "thm-1.1": ((1, 10), lambda n: [FamilySpec("grid", n, 4)]),
    "thm-1.2": ((1, 7), lambda n: [FamilySpec("grid", n, 5)]),
    "prop-a": ((1, 5), lambda n: [FamilySpec("a", n, k) for k in range(3)]),
    "prop-a-v": ((3, 8), lambda n: [FamilySpec("a-v", n, k) for k in range(3)]),
    "lem-b": ((1, 3), lambda k: ([FamilySpec("b", 0, k)] if k <= 2 else [])
              + [FamilySpec("bp", 0, k)]),
}

SUITE_IDS = tuple(sorted(_SUITE_SPECS)) + ("cor-1.3", "recursions")


def suite_specs(name: str, rng: tuple[int, int] | None = None) -> list[FamilySpec]:
    default, per_n = _SUITE_SPECS[name]
    lo, hi = rng or default
    out: list[FamilySpec] = []
    for n in range(lo, hi + 1):
        out.extend(per_n(n))
    return out


def _run_cor13(rng: tuple[int, int] | None) -> list[VerificationRecord]:
    lo, hi = rng or (1, 10000)
    records = []
    for n in range(lo, hi + 1):
        t0 = time.perf_counter()
        spec = FamilySpec("grid", n, 5)
        d = predict_grid5(n)
        chi = descriptor_euler(d)
        records.append(_formula_record(spec, d, chi % 2 == 0 and abs(chi) <= 4, t0))
    return records


def _run_recursions(rng: tuple[int, int] | None) -> list[VerificationRecord]:
    records = []
    # 5-row grid formula vs the block family at k = 0 (even n) and the
    # odd-n suspension recursion
    for n in range(6, 401):
        t0 = time.perf_counter()
        want = predict_grid5(n)
        got = predict_A(n, 0) if n % 2 == 0 else predict_A(n - 5, 1).suspend()
        records.append(_formula_record(FamilySpec("grid", n, 5), want,
                                       want == got, t0))
    # 4-row recursion: Gamma_{n,4} = suspend(X4_{n-1}) v suspend^2(Gamma_{n-2,4})
    for n in range(3, 101):
        t0 = time.perf_counter()
        want = predict_grid4(n)
        got = predict_x4(n - 1).suspend().merge(predict_grid4(n - 2).suspend(2))
        records.append(_formula_record(FamilySpec("grid", n, 4), want,
                                       want == got, t0))
    # 4-row period-6 law: Gamma_{n,4} = 2 S^{n-1} v suspend^6(Gamma_{n-6,4})
    for n in range(7, 101):
        t0 = time.perf_counter()
        want = predict_grid4(n)
        got = WedgeDescriptor.sphere(n - 1, 2).merge(
            predict_grid4(n - 6).suspend(6))
        records.append(_formula_record(FamilySpec("grid", n, 4), want,
                                       want == got, t0))
    # block-family vertex-deletion recursion for even n >= 12
    for n in range(12, 61, 2):
        for k in range(3):
            t0 = time.perf_counter()
            want = predict_A(n, k)
            got = predict_A_minus_v(n, k).merge(
                predict_A(n - 10, k + 2).suspend(2))
            records.append(_formula_record(FamilySpec("a", n, k), want,
                                           want == got, t0))
    return records


def run_suite(name: str, rng: tuple[int, int] | None = None,
              jobs: int = 1,
              budget: int = DEFAULT_FACE_BUDGET) -> list[VerificationRecord]:
    """All verification records of a suite, in canonical spec order."""
    if name == "cor-1.3":
        return _run_cor13(rng)
    if name == "recursions":
        return _run_recursions(rng)
    if name not in _SUITE_SPECS:
        raise KeyError("unknown suite %r" % name)
    specs = suite_specs(name, rng)
    if jobs <= 1:
        return [_verify_instance(s, budget) for s in specs]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(lambda s: _verify_instance(s, budget), specs))


# --- command implementations ------------------------------------------------


def _load_graph(arg: str):
    """A CLI spec-or-file argument: family syntax first, then a file path."""
    try:
        return build(parse_spec(arg))
    except GraphError:
        if os.path.exists(arg):
            with open(arg) as fh:
                return read_graph(fh.read())
        raise


def _emit(args, human: str, payload) -> None:
    if getattr(args, "json", None) is not None:
        text = json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"
        if args.json == "-":
            sys.stdout.write(text)
        else:
            with open(args.json, "w") as fh:
                fh.write(text)
            print(human)
    else:
        print(human)


def _cmd_predict(args) -> int:
    d = predict(parse_spec(args.spec))
    _emit(args, str(d), d.to_json())
    return 0


def _cmd_homology(args) -> int:
    g = _load_graph(args.target)
    try:
        profile, method = homology_of_graph(
            g, reduce_first=not args.no_reduce, coeff=args.coeff,
            budget=args.budget)
    except FaceBudgetExceeded as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 3
    human = "betti %s torsion %s [%s]" % (
        {d: b for d, b in sorted(profile.betti.items())},
        {d: t for d, t in sorted(profile.torsion.items()) if t},
        method)
    _emit(args, human, profile.to_json())
    return 0


def _cmd_reduce(args) -> int:
    g = _load_graph(args.target)
    trace = reduce_graph(g)
    if args.trace:
        with open(args.trace, "w") as fh:
            fh.write(write_trace(trace))
    print("kernel %d vertices, shift %d, contractible %s, %d events"
          % (trace.kernel.order, trace.shift, trace.contractible,
             len(trace.events)))
    return 0


def _cmd_euler(args) -> int:
    g = _load_graph(args.target)
    try:
        chi = euler_characteristic(g, budget=args.budget)
    except FaceBudgetExceeded as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 3
    _emit(args, str(chi), {"euler": chi})
    return 0


def _cmd_grid(args) -> int:
    from .families import make_grid

    text = write_graph(make_grid(args.n, args.k))
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise ValueError("range must look like a..b")
    return int(lo), int(hi)


def _cmd_verify(args) -> int:
    try:
        rng = _parse_range(args.range) if args.range else None
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    try:
        records = run_suite(args.suite, rng, jobs=args.jobs, budget=args.budget)
    except KeyError as exc:
        print("error: %s" % exc.args[0], file=sys.stderr)
        return 2
    if args.json:
        text = dump_records(records)
        if args.json == "-":
            sys.stdout.write(text)
        else:
            with open(args.json, "w") as fh:
                fh.write(text)
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["spec", "predicted", "computed", "method",
                        "verdict", "ms"])
            for r in records:
                w.writerow([
                    str(r.spec), str(r.predicted),
                    "" if r.computed is None
                    else json.dumps(r.computed.to_json(), sort_keys=True),
                    r.method, r.verdict, int(round(r.wall_time * 1000)),
                ])
    mismatches = [r for r in records if r.verdict == "mismatch"]
    skipped = [r for r in records if r.verdict.startswith("skipped")]
    if args.json != "-":
        shown = records if len(records) <= 60 else mismatches + skipped
        for r in shown:
            print("%-14s %-9s %-28s %dms" % (r.spec, r.verdict, r.method,
                                             round(r.wall_time * 1000)))
        print("suite %s: %d records, %d match, %d mismatch, %d skipped"
              % (args.suite, len(records),
                 sum(r.verdict == "match" for r in records),
                 len(mismatches), len(skipped)))
    if mismatches:
        return 1
    if any(r.verdict == "skipped:budget" for r in records):
        return 3
    return 0


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="indcomplex",
        description="Independence-complex homology verification")
    sub = p.add_subparsers(dest="command", required=True)

    def add_json(sp):
        sp.add_argument("--json", nargs="?", const="-", default=None,
                        metavar="FILE", help="JSON output ('-' or omitted"
                        " value = stdout)")

    sp = sub.add_parser("predict", help="closed-form homotopy type of a spec")
    sp.add_argument("spec")
    add_json(sp)
    sp.set_defaults(func=_cmd_predict)

    sp = sub.add_parser("homology", help="reduced homology of I(G)")
    sp.add_argument("target", help="family spec or graph file")
    sp.add_argument("--coeff", choices=("z", "z2", "q"), default="z")
    sp.add_argument("--no-reduce", action="store_true")
    sp.add_argument("--budget", type=int, default=DEFAULT_FACE_BUDGET)
    add_json(sp)
    sp.set_defaults(func=_cmd_homology)

    sp = sub.add_parser("reduce", help="fold/suspension-reduce a graph")
    sp.add_argument("target", help="family spec or graph file")
    sp.add_argument("--trace", metavar="FILE")
    sp.set_defaults(func=_cmd_reduce)

    sp = sub.add_parser("euler", help="Euler characteristic of I(G)")
    sp.add_argument("target", help="family spec or graph file")
    sp.add_argument("--budget", type=int, default=DEFAULT_FACE_BUDGET)
    add_json(sp)
    sp.set_defaults(func=_cmd_euler)

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("--suite", required=True, choices=SUITE_IDS)
    sp.add_argument("--range", metavar="A..B")
    sp.add_argument("--json", metavar="FILE")
    sp.add_argument("--csv", metavar="FILE")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--budget", type=int, default=DEFAULT_FACE_BUDGET)
    sp.set_defaults(func=_cmd_verify)

    sp = sub.add_parser("grid", help="write a grid graph file")
    sp.add_argument("n", type=int)
    sp.add_argument("k", type=int)
    sp.add_argument("--out", metavar="FILE")
    sp.set_defaults(func=_cmd_grid)

    return p


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, UnsupportedFamilyError, FileNotFoundError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
