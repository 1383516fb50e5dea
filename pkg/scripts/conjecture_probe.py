#!/usr/bin/env python3
"""Count table comparing Hom(C, A -o B) with EM-homs A -> (C =>* B).

The table is descriptive: equal rows are reported, differing rows are printed
as they come, and nothing is asserted.
"""

import argparse

from catkernel import instances, monad


def rows(spec, max_carrier, max_c):
    M = instances.make_monad(spec, 3, exp_cap=64)
    algs = [a for v in monad.algebra_census(M, range(max_carrier + 1)).values() for a in v]
    for C in range(max_c + 1):
        for a in algs:
            for b in algs:
                yield M.name, monad.conjecture_probe(M, C, a, b)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--monads", nargs="*", default=["maybe", "writer:c2"])
    ap.add_argument("--max-carrier", type=int, default=2)
    ap.add_argument("--max-c", type=int, default=2)
    args = ap.parse_args()
    n = same = 0
    print(f"{'monad':<11} {'C':>2} {'A':>10} {'B':>10} {'lhs':>5} {'rhs':>5}")
    for spec in args.monads:
        for name, r in rows(spec, args.max_carrier, args.max_c):
            a, b = r["A"], r["B"]
            print(f"{name:<11} {r['C']:>2} {_alg(a):>10} {_alg(b):>10} "
                  f"{r['lhs']:>5} {r['rhs']:>5}" + ("" if r["equal"] else "  differ"))
            n += 1
            same += r["equal"]
    print(f"{same}/{n} rows equal")


def _alg(a):
    return f"{a.carrier}:{''.join(map(str, a.action.table))}"


if __name__ == "__main__":
    main()
