#!/usr/bin/env python3
"""Run the equational suites against the finite-set instances and print a table."""

import argparse
import time

from catkernel import instances, lawcheck, monad


def finset_reports(size, exp_size):
    inst = instances.finset(size)
    ctx = lawcheck.LawContext(inst.category, inst.structure, name=f"finset({size})")
    for s in ("product", "assoc"):
        yield lawcheck.run_suite(ctx, s)
    big = instances.finset(exp_size)
    yield lawcheck.run_suite(lawcheck.LawContext(big.category, big.structure,
                                                 name=f"finset({exp_size})"), "exponent")


def monad_reports(spec, size):
    M = instances.make_monad(spec, size)
    algs = [a for v in monad.algebra_census(M, range(size + 1)).values() for a in v]
    yield monad.validate_monad(M)
    yield monad.validate_strength(M)
    yield monad.algebra_suite_report(M, algs)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-size", type=int, default=3)
    ap.add_argument("--exp-size", type=int, default=4)
    ap.add_argument("--monads", nargs="*", default=["maybe", "writer:c2"])
    args = ap.parse_args()
    failed = False
    t0 = time.monotonic()
    reports = list(finset_reports(args.max_size, args.exp_size))
    for spec in args.monads:
        reports += list(monad_reports(spec, args.max_size))
    for rep in reports:
        print(f"{rep.suite:<9} {rep.label:<18} {rep.status:<8} checked={rep.checked}")
        for r in rep.results:
            if r.status not in ("pass",):
                print(f"    {r.label:<6} {r.status}" + (f"  {r.note}" if r.note else ""))
        failed = failed or not rep.ok
    print(f"total {time.monotonic() - t0:.1f}s")
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
