"""Command-line front end.

Exit codes: 0 when every check passes, 1 when a counterexample is found,
2 on usage or parse errors.
"""

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import analysis, fibration, instances, lawcheck, monad, slice as slices, structures
from .catspec import build_category, build_functor, parse_catspec
from .errors import (BrokenUnit, CategoryError, MissingComposite, MissingStructure,
                     NonAssociative, NotComposable)
from .finset import FinSetCat
from .report import Budget, dumps, jsonable

LAW_FAILURES = (MissingComposite, NonAssociative, BrokenUnit, NotComposable)


@dataclass
class Command:
    name: str
    paths: list = field(default_factory=list)
    json: bool = False
    max_size: int = 3
    bound: int = 2_000_000
    base: str = None
    monad: str = "maybe"
    suite: str = "product"


class UsageError(Exception):
    pass


def _parser():
    p = argparse.ArgumentParser(prog="catkernel", allow_abbrev=False)
    sub = p.add_subparsers(dest="name", required=True)
    common = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    common.add_argument("--json", action="store_true")
    common.add_argument("--max-size", type=int, default=None)
    common.add_argument("--bound", type=int, default=2_000_000)

    s = sub.add_parser("validate", parents=[common], allow_abbrev=False)
    s.add_argument("paths", nargs="+")
    s = sub.add_parser("analyze", parents=[common], allow_abbrev=False)
    s.add_argument("paths", nargs="+")
    s = sub.add_parser("limits", parents=[common], allow_abbrev=False)
    s.add_argument("paths", nargs="*")
    s = sub.add_parser("slice", parents=[common], allow_abbrev=False)
    s.add_argument("paths", nargs="*")
    s.add_argument("--base", default=None)
    s = sub.add_parser("fib", parents=[common], allow_abbrev=False)
    s.add_argument("paths", nargs="*", help="total.catspec base.catspec (functor block in total)")
    s.add_argument("--builtin", choices=["codomain", "predicate"], default=None)
    s = sub.add_parser("monad", parents=[common], allow_abbrev=False)
    s.add_argument("--monad", default="maybe")
    s = sub.add_parser("laws", parents=[common], allow_abbrev=False)
    s.add_argument("--suite", default="product",
                   choices=sorted(lawcheck.SUITES) + ["derivations", "all"])
    s.add_argument("--monad", default="maybe")
    s = sub.add_parser("zoo", parents=[common], allow_abbrev=False)
    return p


def _read(path):
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(str(exc))


def _load(path, check=True):
    return build_category(parse_catspec(_read(path)), check=check)


def _object(C, name):
    """Resolve a --base value against the objects of C (ints for finite sets)."""
    for o in C.objects:
        if str(o) == name:
            return o
    raise UsageError(f"unknown base object {name!r}")


def _finset(cmd, default):
    return FinSetCat(cmd.max_size if cmd.max_size is not None else default)


# ---------------------------------------------------------------- commands

def cmd_validate(cmd):
    out, ok = {}, True
    for p in cmd.paths:
        try:
            C = _load(p)
            out[p] = {"valid": True, "objects": len(C.objects), "morphisms": len(C.morphisms)}
        except LAW_FAILURES as exc:
            ok = False
            out[p] = {"valid": False, "error": type(exc).__name__, "detail": str(exc)}
    return {"command": "validate", "results": out}, ok


def cmd_analyze(cmd):
    out = {}
    for p in cmd.paths:
        C = _load(p)
        out[p] = {
            "category": analysis.category_profile(C).to_json(),
            "objects": {str(a): analysis.classify_object(C, a).to_json() for a in C.objects},
            "morphisms": {str(f): analysis.classify_morphism(C, f).to_json()
                          for f in C.morphisms},
        }
    return {"command": "analyze", "results": out}, True


def _limits(C):
    objs = C.objects
    res = {"terminal": structures.find_terminals(C), "initial": structures.find_initials(C)}
    prods = {}
    for a in objs:
        for b in objs:
            w = structures.find_product(C, a, b)
            prods[f"{a} x {b}"] = w.to_json() if w else None
    res["products"] = prods
    pbs, eqs = {}, {}
    for f1 in C.morphisms:
        for f2 in C.morphisms:
            if C.cod(f1) == C.cod(f2):
                w = structures.find_pullback(C, f1, f2)
                pbs[f"{f1}, {f2}"] = w.to_json() if w else None
            if C.dom(f1) == C.dom(f2) and C.cod(f1) == C.cod(f2):
                ws = structures.find_equalizers(C, f1, f2, limit=1)
                eqs[f"{f1}, {f2}"] = ws[0].to_json() if ws else None
    res["pullbacks"], res["equalizers"] = pbs, eqs
    cs = structures.choose_cartesian_structure(C)
    res["exponentials"] = {f"{a} => {b}": w.to_json() for (a, b), w in
                           sorted(cs.exponentials.items(), key=lambda kv: str(kv[0]))}
    res["cartesian_closed"] = cs.is_ccc
    res["exponent_flags"] = {str(b): {"exponentiating": cs.exponentiating(b),
                                      "exponentiable": cs.exponentiable(b)} for b in objs}
    return res


def cmd_limits(cmd):
    if cmd.paths:
        return {"command": "limits",
                "results": {p: _limits(_load(p)) for p in cmd.paths}}, True
    return {"command": "limits", "results": {"finset": _limits(
        _finset(cmd, 2).materialize())}}, True


def cmd_slice(cmd):
    if cmd.paths:
        C = _load(cmd.paths[0])
    else:
        C = _finset(cmd, 2)
    bases = [_object(C, cmd.base)] if cmd.base is not None else list(C.objects)
    pb = slices.Pullbacks(C)
    out, ok = {}, True
    for A in bases:
        ctx = slices.SliceContext(C, A, pb)
        rep = slices.slice_report(ctx)
        triples = {}
        for f in C.morphisms:
            if C.cod(f) != A:
                continue
            try:
                t = slices.check_triple(ctx.at(C.dom(f)), f)
            except MissingStructure as exc:
                triples[str(f)] = {"missing": str(exc)}
                ok = False
                continue
            triples[str(f)] = {"sigma_pullback": t["sigma"].ok,
                               "pullback_pi": None if t["pi"] is None else t["pi"].ok}
            ok = ok and t["sigma"].ok and (t["pi"] is None or t["pi"].ok)
        ok = ok and rep.ok
        out[str(A)] = {"anchor": "sec:cartesian-structure-in-slice", "ccc": rep.to_json(),
                       "adjoint_triples": triples}
    lcc = slices.is_lcc(C)
    ok = ok and lcc["agree"]
    return {"command": "slice", "results": out, "lcc": lcc}, ok


def cmd_fib(cmd):
    if cmd.builtin or not cmd.paths:
        size = cmd.max_size if cmd.max_size is not None else 2
        fib = (fibration.predicate_fibration(size) if cmd.builtin == "predicate"
               else fibration.codomain_fibration(FinSetCat(size)))
        prof = fibration.fibration_profile(fib)
        return {"command": "fib", "instance": fib.name, "anchor": "def:fibration",
                "profile": prof.to_json()}, bool(prof.details["lemma"]["agree"])
    if len(cmd.paths) != 2:
        raise UsageError("fib takes a total and a base catspec")
    tspec = parse_catspec(_read(cmd.paths[0]))
    E = build_category(tspec)
    B = _load(cmd.paths[1])
    if not tspec.functors:
        raise UsageError("the total catspec must contain a functor block")
    U = build_functor(next(iter(tspec.functors.values())), E, B)
    bad = U.violations()
    if bad:
        return {"command": "fib", "functor_error": bad[0]}, False
    prof = fibration.fibration_profile(U)
    return {"command": "fib", "anchor": "def:fibration", "profile": prof.to_json()}, \
        bool(prof.details["lemma"]["agree"])


def _monad(cmd, exp_cap=None):
    try:
        return instances.make_monad(cmd.monad, cmd.max_size or 3, exp_cap)
    except (KeyError, instances.InvalidMonoid) as exc:
        raise UsageError(f"unknown monad {cmd.monad!r}: {exc}")


def cmd_monad(cmd):
    M = _monad(cmd, exp_cap=64)
    n = cmd.max_size or 3
    census = monad.algebra_census(M, range(n + 1))
    algs = [a for v in census.values() for a in v]
    small = [a for a in algs if a.carrier <= 2]
    verdicts = {}
    mrep, srep = monad.validate_monad(M), monad.validate_strength(M)
    verdicts["monad"] = mrep.to_json()
    verdicts["strength"] = srep.to_json()
    flags = monad.monad_flags(M)
    term, tv = monad.em_terminal(M, algs)
    verdicts["em_terminal"] = {"anchor": "thm:alg-term-obj", "algebra": term,
                               "verdict": tv.to_json()}
    prod_ok = True
    for a in algs:
        for b in algs:
            _, v = monad.em_product(M, a, b, algs)
            if not v:
                prod_ok = False
                verdicts["em_product_counterexample"] = {"A": a, "B": b, **v.to_json()}
    verdicts["em_product"] = {"anchor": "thm:alg-product", "ok": prod_ok,
                              "diagonal_homomorphism": all(
                                  monad.diagonal_is_homomorphism(M, a) for a in algs)}
    internal = True
    for B in range(3):
        for a in small:
            _, rep = monad.internal_exponent_report(M, B, a)
            internal = internal and all(rep.values())
    verdicts["internal_exponent"] = {"anchor": "thm:expoalg", "ok": internal}
    external = True
    for a in small:
        for b in small:
            X = monad.external_exponent(M, a, b)
            for C in range(4):
                external = external and monad.bijection_report(M, X, C)["ok"]
    verdicts["external_exponent"] = {"anchor": "thm:iso2", "ok": external}
    ctx = lawcheck.LawContext(M.category, M.structure, M, objects=(0, 1, 2),
                              algebras=lambda: [a for a in algs if a.carrier <= 2])
    verdicts["derivations"] = {name: lawcheck.replay_derivation(ctx, name).to_json()
                               for name in lawcheck.derivations()}
    verdicts["algebra_laws"] = monad.algebra_suite_report(M, algs).to_json()
    probe = [monad.conjecture_probe(M, C, a, b)
             for C in range(3) for a in small for b in small]
    ok = (mrep.ok and srep.ok and bool(tv) and prod_ok and internal and external
          and all(d["status"] != "fail" for d in verdicts["derivations"].values())
          and verdicts["algebra_laws"]["status"] != "fail")
    return {"command": "monad", "monad": M.name,
            "census": {str(k): [a for a in v] for k, v in census.items()},
            "census_sizes": {str(k): len(v) for k, v in census.items()},
            "flags": {k: bool(v) for k, v in flags.items()},
            "verdicts": verdicts, "conjecture_probe": probe}, ok


def cmd_laws(cmd):
    n = cmd.max_size or 3
    inst = instances.finset(n)
    budget = Budget()
    names = (sorted(lawcheck.SUITES) if cmd.suite == "all" else [cmd.suite])
    reports = []
    for s in names:
        if s == "derivations":
            M = _monad(cmd, exp_cap=64)
            algs = [a for v in monad.algebra_census(M, range(3)).values() for a in v]
            ctx = lawcheck.LawContext(M.category, M.structure, M, objects=(0, 1, 2),
                                      algebras=lambda: algs, hom_limit=cmd.bound)
            for name in lawcheck.derivations():
                reports.append(lawcheck.replay_derivation(ctx, name, budget))
            continue
        if s in ("monad", "strength", "algebra"):
            M = _monad(cmd)
            algs = [a for v in monad.algebra_census(M, range(n + 1)).values() for a in v]
            ctx = lawcheck.LawContext(M.category, M.structure, M, algebras=lambda: algs,
                                      name=M.name, hom_limit=cmd.bound)
        else:
            ctx = lawcheck.LawContext(inst.category, inst.structure,
                                      name=f"finset({n})", hom_limit=cmd.bound)
        reports.append(lawcheck.run_suite(ctx, s, budget=budget))
    ok = all(r.ok for r in reports)
    if len(reports) == 1:
        return {"command": "laws", **reports[0].to_json()}, ok
    return {"command": "laws", "reports": [r.to_json() for r in reports]}, ok


def cmd_zoo(cmd):
    out, ok = {}, True
    for e in instances.zoo():
        bad = e.mismatches()
        ok = ok and not bad
        out[e.name] = {"objects": len(e.category.objects),
                       "morphisms": len(e.category.morphisms),
                       "annotations_verified": not bad, "mismatches": bad}
    return {"command": "zoo", "entries": out}, ok


COMMANDS = {"validate": cmd_validate, "analyze": cmd_analyze, "limits": cmd_limits,
            "slice": cmd_slice, "fib": cmd_fib, "monad": cmd_monad, "laws": cmd_laws,
            "zoo": cmd_zoo}


# -------------------------------------------------------------------- text

def _summary(doc, ok, out):
    name = doc.get("command")
    out.write(f"{name}: {'ok' if ok else 'counterexample found'}\n")
    if name == "laws":
        reps = doc.get("reports") or [doc]
        for r in reps:
            for res in r["results"]:
                line = f"  {res['suite']:<10} {res['label']:<22} {res['status']:<8} checked={res['checked']}"
                if res.get("skipped"):
                    line += f" skipped={res['skipped']}"
                out.write(line + "\n")
                if res["status"] in ("fail", "caveat") and "counterexample" in res:
                    out.write(f"    counterexample: {jsonable(res['counterexample'])}\n")
    elif name == "validate":
        for p, r in doc["results"].items():
            out.write(f"  {p}: {'valid' if r['valid'] else r['error'] + ': ' + r['detail']}\n")
    elif name == "zoo":
        for n, r in doc["entries"].items():
            out.write(f"  {n:<14} objects={r['objects']} morphisms={r['morphisms']} "
                      f"annotations={'ok' if r['annotations_verified'] else 'MISMATCH'}\n")
    elif name == "monad":
        out.write(f"  monad {doc['monad']}: census {doc['census_sizes']}\n")
        out.write(f"  flags: {doc['flags']}\n")
        for k, v in doc["verdicts"].items():
            if k == "derivations":
                for name, d in v.items():
                    out.write(f"  derivation {name}: {d['status']}\n")
            elif "status" in v:
                notes = [r["label"] for r in v.get("results", []) if r["status"] == "caveat"]
                out.write(f"  {k}: {v['status']}"
                          + (f" (caveat: {', '.join(notes)})" if notes else "") + "\n")
            elif "ok" in v:
                out.write(f"  {k}: {'pass' if v['ok'] else 'fail'}\n")
            elif "verdict" in v:
                out.write(f"  {k}: {'pass' if v['verdict']['flag'] else 'fail'}\n")
        for row in doc["conjecture_probe"]:
            a, b = row["A"], row["B"]
            out.write(f"  probe C={row['C']} A={a[0]} B={b[0]} lhs={row['lhs']} "
                      f"rhs={row['rhs']} {'equal' if row['equal'] else 'differ'}\n")
    elif name == "slice":
        for A, r in doc["results"].items():
            out.write(f"  base {A}: ccc={'ok' if r['ccc']['ok'] else 'FAIL'} "
                      f"checked={r['ccc']['checked']}\n")
        out.write(f"  lcc: {doc['lcc']}\n")
    elif name == "fib":
        prof = doc.get("profile", {})
        for k in ("fibration", "opfibration", "bifibration", "cloven", "split",
                  "partial_order", "polymorphic", "fibred_terminal", "fibred_product",
                  "fibred_exponent"):
            if k in prof:
                out.write(f"  {k}: {prof[k]}\n")
    else:
        out.write(dumps(doc) + "\n")


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = _parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and 2
    cmd = Command(ns.name, getattr(ns, "paths", []) or [], ns.json, ns.max_size, ns.bound,
                  getattr(ns, "base", None), getattr(ns, "monad", "maybe"),
                  getattr(ns, "suite", "product"))
    if cmd.name == "fib":
        cmd.builtin = ns.builtin
    try:
        doc, ok = COMMANDS[cmd.name](cmd)
    except (UsageError, CategoryError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    if cmd.json:
        out.write(dumps(doc) + "\n")
    else:
        _summary(doc, ok, out)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
