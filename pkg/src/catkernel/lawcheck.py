"""Equational law suites checked by exhaustive instantiation.

Laws are data: two typed morphism terms over object, morphism and algebra
variables.  A ``LawContext`` supplies the category used to enumerate
hom-sets, a structure implementing the cartesian operations (``pi1``,
``pair``, ``lam``, ...) and optionally a strong monad (``T_obj``,
``T_mor``, ``eta``, ``mu``, ``lst``).  Every binding of the variables whose
objects lie in the context's object domain is evaluated; bindings that need
a missing exponential or product are counted as skipped.
"""

import itertools
from dataclasses import dataclass, field

from .errors import BudgetExceeded, MissingStructure
from .report import Budget, LawReport, LawResult

# ------------------------------------------------------------------ objects


@dataclass(frozen=True)
class Ob:
    name: str

    def __mul__(self, other):
        return Times(self, other)

    def __repr__(self):
        return self.name


@dataclass(frozen=True)
class One:
    def __mul__(self, other):
        return Times(self, other)

    def __repr__(self):
        return "1"


@dataclass(frozen=True)
class Times:
    left: object
    right: object

    def __mul__(self, other):
        return Times(self, other)

    def __repr__(self):
        return f"({self.left!r} x {self.right!r})"


@dataclass(frozen=True)
class Exp:
    base: object
    target: object

    def __mul__(self, other):
        return Times(self, other)

    def __repr__(self):
        return f"({self.base!r} => {self.target!r})"


@dataclass(frozen=True)
class TOb:
    arg: object

    def __mul__(self, other):
        return Times(self, other)

    def __repr__(self):
        return f"T{self.arg!r}"


def obj_vars(e):
    if isinstance(e, Ob):
        return {e.name}
    if isinstance(e, One):
        return set()
    if isinstance(e, (Times, Exp)):
        return obj_vars(e.__dict__[_fields(e)[0]]) | obj_vars(e.__dict__[_fields(e)[1]])
    if isinstance(e, TOb):
        return obj_vars(e.arg)
    raise TypeError(e)


def _fields(x):
    return tuple(x.__dataclass_fields__)


# ----------------------------------------------------------------- morphisms

class Term:
    def __matmul__(self, other):
        return Comp(self, other)

    def __mul__(self, other):
        return Prod(self, other)


def _term(name, *fields_):
    cls = dataclass(frozen=True)(type(name, (Term,), {"__annotations__": {f: object for f in fields_}}))
    return cls


Var = _term("Var", "name")
Id = _term("Id", "obj")
Comp = _term("Comp", "g", "f")
Pi1 = _term("Pi1", "a", "b")
Pi2 = _term("Pi2", "a", "b")
Pair = _term("Pair", "f", "g")
Prod = _term("Prod", "f", "g")
Delta = _term("Delta", "a")
Swap = _term("Swap", "a", "b")
Alpha = _term("Alpha", "a", "b", "c")
AlphaInv = _term("AlphaInv", "a", "b", "c")
Bang = _term("Bang", "a")
Ev = _term("Ev", "a", "b")
Lam = _term("Lam", "f")
LamInv = _term("LamInv", "g")
Eta = _term("Eta", "a")
Mu = _term("Mu", "a")
TMor = _term("TMor", "f")
Lst = _term("Lst", "a", "b")
Act = _term("Act", "alg")


def compose(*ts):
    out = ts[-1]
    for t in reversed(ts[:-1]):
        out = Comp(t, out)
    return out


class IllTyped(Exception):
    pass


def infer(t, env):
    """(dom, cod) of a term; env maps variable names to (dom, cod)."""
    k = type(t)
    if k is Var:
        try:
            return env[t.name]
        except KeyError:
            raise IllTyped(f"unbound variable {t.name}") from None
    if k is Act:
        A = env[t.alg]
        return TOb(A), A
    if k is Id:
        return t.obj, t.obj
    if k is Comp:
        x, y = infer(t.f, env)
        y2, z = infer(t.g, env)
        if y != y2:
            raise IllTyped(f"cannot compose {y2!r} <- ... after ... -> {y!r}")
        return x, z
    if k is Pi1:
        return Times(t.a, t.b), t.a
    if k is Pi2:
        return Times(t.a, t.b), t.b
    if k is Pair:
        x, a = infer(t.f, env)
        x2, b = infer(t.g, env)
        if x != x2:
            raise IllTyped(f"pairing with domains {x!r} and {x2!r}")
        return x, Times(a, b)
    if k is Prod:
        x, a = infer(t.f, env)
        y, b = infer(t.g, env)
        return Times(x, y), Times(a, b)
    if k is Delta:
        return t.a, Times(t.a, t.a)
    if k is Swap:
        return Times(t.a, t.b), Times(t.b, t.a)
    if k is Alpha:
        return Times(Times(t.a, t.b), t.c), Times(t.a, Times(t.b, t.c))
    if k is AlphaInv:
        return Times(t.a, Times(t.b, t.c)), Times(Times(t.a, t.b), t.c)
    if k is Bang:
        return t.a, One()
    if k is Ev:
        return Times(Exp(t.a, t.b), t.a), t.b
    if k is Lam:
        d, b = infer(t.f, env)
        if not isinstance(d, Times):
            raise IllTyped("currying needs a product domain")
        return d.left, Exp(d.right, b)
    if k is LamInv:
        c, e = infer(t.g, env)
        if not isinstance(e, Exp):
            raise IllTyped("uncurrying needs an exponential codomain")
        return Times(c, e.base), e.target
    if k is Eta:
        return t.a, TOb(t.a)
    if k is Mu:
        return TOb(TOb(t.a)), TOb(t.a)
    if k is TMor:
        x, y = infer(t.f, env)
        return TOb(x), TOb(y)
    if k is Lst:
        return Times(t.a, TOb(t.b)), TOb(Times(t.a, t.b))
    raise TypeError(t)


def term_vars(t):
    """Free variable names (objects, morphisms, algebras) of a term."""
    out = set()

    def walk(x):
        if isinstance(x, Var):
            out.add(x.name)
        elif isinstance(x, Act):
            out.add(x.alg)
            out.add("@" + x.alg)
        elif isinstance(x, Term):
            for f in _fields(x):
                walk(getattr(x, f))
        elif isinstance(x, (Ob, One, Times, Exp, TOb)):
            out.update(obj_vars(x))

    walk(t)
    return out


# ----------------------------------------------------------------- evaluation

class _Compiler:
    """Turns terms into memoised closures over a binding dict."""

    CACHE_LIMIT = 400000

    def __init__(self, S, M, env, carriers):
        self.S, self.M, self.env = S, M, env
        self.carriers = carriers  # algebra name -> carrier variable
        self.caches = []

    def _memo(self, fn, fv):
        fv = tuple(sorted(fv))
        if not fv:
            box = []

            def const(b):
                if not box:
                    box.append(fn(b))
                return box[0]
            return const
        cache = {}
        self.caches.append(cache)
        limit = self.CACHE_LIMIT
        if len(fv) == 1:
            v = fv[0]

            def one(b):
                k = b[v]
                try:
                    return cache[k]
                except KeyError:
                    if len(cache) > limit:
                        cache.clear()
                    r = cache[k] = fn(b)
                    return r
            return one

        def many(b):
            k = tuple([b[v] for v in fv])
            try:
                return cache[k]
            except KeyError:
                if len(cache) > limit:
                    cache.clear()
                r = cache[k] = fn(b)
                return r
        return many

    def obj(self, e):
        S, M = self.S, self.M
        if isinstance(e, Ob):
            n = e.name
            return lambda b: b[n]
        if isinstance(e, One):
            return lambda b: S.terminal()
        if isinstance(e, Times):
            l, r = self.obj(e.left), self.obj(e.right)
            fn = lambda b: S.product(l(b), r(b))
        elif isinstance(e, Exp):
            l, r = self.obj(e.base), self.obj(e.target)
            fn = lambda b: S.exp(l(b), r(b))
        elif isinstance(e, TOb):
            a = self.obj(e.arg)
            fn = lambda b: M.T_obj(a(b))
        else:
            raise TypeError(e)
        return self._memo(fn, obj_vars(e))

    def mor(self, t, root=False):
        S, M = self.S, self.M
        k = type(t)
        O = self.obj
        if k is Var:
            n = t.name
            return lambda b: b[n]
        if k is Act:
            n = "@" + t.alg
            return lambda b: b[n]
        if k is Id:
            a = O(t.obj)
            fn = lambda b: S.identity(a(b))
        elif k is Comp:
            g, f = self.mor(t.g), self.mor(t.f)
            fn = lambda b: S.compose(g(b), f(b))
        elif k in (Pi1, Pi2, Swap, Ev, Lst):
            a, c = O(t.a), O(t.b)
            op = {Pi1: S.pi1, Pi2: S.pi2, Swap: S.swap,
                  Ev: getattr(S, "ev", None), Lst: getattr(M, "lst", None)}[k]
            fn = lambda b: op(a(b), c(b))
        elif k in (Alpha, AlphaInv):
            a, c, d = O(t.a), O(t.b), O(t.c)
            op = S.alpha if k is Alpha else S.alpha_inv
            fn = lambda b: op(a(b), c(b), d(b))
        elif k in (Delta, Bang, Eta, Mu):
            a = O(t.a)
            op = {Delta: S.delta, Bang: S.bang,
                  Eta: getattr(M, "eta", None), Mu: getattr(M, "mu", None)}[k]
            fn = lambda b: op(a(b))
        elif k is Pair:
            f, g = self.mor(t.f), self.mor(t.g)
            fn = lambda b: S.pair(f(b), g(b))
        elif k is Prod:
            f, g = self.mor(t.f), self.mor(t.g)
            fn = lambda b: S.prod(f(b), g(b))
        elif k is TMor:
            f = self.mor(t.f)
            fn = lambda b: M.T_mor(f(b))
        elif k is Lam:
            d, _ = infer(t.f, self.env)
            f, c, a = self.mor(t.f), O(d.left), O(d.right)
            fn = lambda b: S.lam(f(b), c(b), a(b))
        elif k is LamInv:
            _, e = infer(t.g, self.env)
            g, a, c = self.mor(t.g), O(e.base), O(e.target)
            fn = lambda b: S.lam_inv(g(b), a(b), c(b))
        else:
            raise TypeError(t)
        if root:
            return fn
        return self._memo(fn, self._fv(t))

    def _fv(self, t):
        # the value also depends on the objects in its type (e.g. currying
        # an empty-domain map), so those join the memo key
        d, c = infer(t, self.env)
        return term_vars(t) | obj_vars(d) | obj_vars(c)


# --------------------------------------------------------------------- laws

@dataclass
class Law:
    """One labelled law.

    kind "eq": every pair in ``eqs`` must be equal;
    kind "iff": (premise pair equal) iff (eqs[0] pair equal);
    kind "chain": consecutive ``steps`` must be equal.
    """
    label: str
    suite: str
    objects: tuple = ()
    morphisms: tuple = ()      # ((name, dom, cod), ...), enumeration order
    algebras: tuple = ()       # ((name, carrier object var), ...)
    eqs: tuple = ()
    kind: str = "eq"
    premise: tuple = None
    steps: tuple = ()
    where: tuple = ()          # equations filtering bindings
    note: str = None
    anchor: str = None
    caveat: bool = False       # failure is reported as a caveat, not a fail

    def env(self):
        env = {}
        for name, carrier in self.algebras:
            env[name] = Ob(carrier)
        for name, d, c in self.morphisms:
            env[name] = (d, c)
        return env

    def pairs(self):
        if self.kind == "chain":
            return list(zip(self.steps, self.steps[1:]))
        out = list(self.eqs)
        if self.premise is not None:
            out.append(self.premise)
        return out + list(self.where)

    def typecheck(self):
        tenv = self.env()
        for l, r in self.pairs():
            if infer(l, tenv) != infer(r, tenv):
                raise IllTyped(f"{self.label}: sides have types {infer(l, tenv)} and {infer(r, tenv)}")


@dataclass
class LawContext:
    """Everything a suite needs from an instance."""
    category: object
    structure: object
    monad: object = None
    objects: tuple = None
    algebras: object = None   # callable returning [(carrier, action), ...]
    name: str = None
    hom_limit: int = 2_000_000

    def domain(self):
        return tuple(self.category.objects if self.objects is None else self.objects)


def _bindings(law, ctx, comp, budget, stats):
    """Yield the binding dict (mutated in place) for every valid instantiation."""
    dom = ctx.domain()
    b = {}
    S = ctx.structure
    carriers = dict(law.algebras)
    alg_list = None
    if law.algebras:
        alg_list = list(ctx.algebras())
    mor_types = [(n, comp.obj(d), comp.obj(c)) for n, d, c in law.morphisms]
    # premises checked as soon as their variables are bound
    order = list(law.objects) + [a for a, _ in law.algebras] + [n for n, _, _ in law.morphisms]
    pos = {v: i for i, v in enumerate(order)}
    for a, c in law.algebras:
        pos["@" + a] = pos[a]
        pos[c] = pos[a]
    checks = {}
    for l, r in law.where:
        fv = term_vars(l) | term_vars(r)
        at = max((pos[v] for v in fv if v in pos), default=-1)
        checks.setdefault(at, []).append((comp.mor(l), comp.mor(r)))
    nobj = len(law.objects)
    nalg = len(law.algebras)
    # every object the law mentions must exist before morphisms are bound
    needed = [comp.obj(e) for e in law_objects(law)]
    count = getattr(ctx.category, "hom_count", None)

    def objects_exist():
        try:
            for o in needed:
                o(b)
        except MissingStructure:
            return False
        return True

    def ok_at(i):
        for l, r in checks.get(i, ()):
            if l(b) != r(b):
                return False
        return True

    def mors(i):
        if i == len(mor_types):
            yield b
            return
        name, d, c = mor_types[i]
        try:
            x, y = d(b), c(b)
            if count is not None and count(x, y) > ctx.hom_limit:
                stats["skipped"] += 1
                return
            hs = ctx.category.hom(x, y)
        except MissingStructure:
            stats["skipped"] += 1
            return
        at = nobj + nalg + i
        for h in hs:
            b[name] = h
            if ok_at(at):
                yield from mors(i + 1)
        b.pop(name, None)

    def algs(i):
        if i == nalg:
            if objects_exist():
                yield from mors(0)
            else:
                stats["skipped"] += 1
            return
        name, carrier = law.algebras[i]
        for A, act in alg_list:
            if A not in dom:
                continue
            b[carrier] = A
            b[name] = A
            b["@" + name] = act
            if ok_at(nobj + i):
                yield from algs(i + 1)
        for k in (carrier, name, "@" + name):
            b.pop(k, None)

    if nobj == 0:
        if ok_at(-1):
            yield from algs(0)
        return
    for combo in itertools.product(dom, repeat=nobj):
        budget.check()
        b.update(zip(law.objects, combo))
        if ok_at(nobj - 1):
            yield from algs(0)


def law_objects(law):
    """Object expressions occurring in a law: variable types and the types
    of every subterm."""
    env = law.env()
    out = {}

    def add(e):
        out.setdefault(repr(e), e)

    for _, d, c in law.morphisms:
        add(d)
        add(c)

    def walk(t):
        if isinstance(t, Term):
            d, c = infer(t, env)
            add(d)
            add(c)
            for f in _fields(t):
                walk(getattr(t, f))

    terms = list(law.steps) + [x for pair in law.eqs for x in pair] + list(law.premise or ())
    terms += [x for pair in law.where for x in pair]
    for t in terms:
        walk(t)
    return list(out.values())


def _show_binding(b, law):
    out = {}
    for n in law.objects:
        out[n] = b.get(n)
    for a, c in law.algebras:
        out[a] = {"carrier": b.get(a), "action": b.get("@" + a)}
    for n, _, _ in law.morphisms:
        out[n] = b.get(n)
    return out


def check_law(law, ctx, budget=None):
    """Instantiate one law over all bindings; returns a LawResult."""
    budget = budget or Budget()
    try:
        law.typecheck()
    except IllTyped as exc:
        return LawResult(law.label, law.suite, "fail", 0, {"ill_typed": str(exc)}, note=law.note)
    tenv = law.env()
    comp = _Compiler(ctx.structure, ctx.monad, tenv, dict(law.algebras))
    todo = list(zip(law.steps, law.steps[1:])) if law.kind == "chain" else list(law.eqs)
    pairs = [(comp.mor(l, root=True), comp.mor(r, root=True)) for l, r in todo]
    prem = None
    if law.kind == "iff":
        prem = (comp.mor(law.premise[0], root=True), comp.mor(law.premise[1], root=True))
    stats = {"skipped": 0}
    checked = 0
    try:
        for b in _bindings(law, ctx, comp, budget, stats):
            budget.check()
            try:
                if law.kind == "iff":
                    p = prem[0](b) == prem[1](b)
                    q = pairs[0][0](b) == pairs[0][1](b)
                    if p != q:
                        return _fail(law, b, checked + 1, {"premise_equal": p, "conclusion_equal": q})
                else:
                    for i, (l, r) in enumerate(pairs):
                        lv, rv = l(b), r(b)
                        if lv != rv:
                            extra = {"lhs": lv, "rhs": rv}
                            if law.kind == "chain":
                                extra["step"] = i + 1
                            elif len(pairs) > 1:
                                extra["equation"] = i + 1
                            return _fail(law, b, checked + 1, extra, stats["skipped"])
            except MissingStructure:
                stats["skipped"] += 1
                continue
            checked += 1
    except BudgetExceeded as exc:
        return LawResult(law.label, law.suite, "skipped", checked, None,
                         stats["skipped"], note=f"time budget: {exc}")
    status = "pass" if checked else "skipped"
    return LawResult(law.label, law.suite, status, checked, None, stats["skipped"], note=law.note)


def _fail(law, b, checked, extra, skipped=0):
    ce = {"binding": _show_binding(b, law), **extra}
    status = "caveat" if law.caveat else "fail"
    return LawResult(law.label, law.suite, status, checked, ce, skipped, note=law.note)


def replay_binding(law, ctx, binding):
    """Re-evaluate a law on a reported binding; returns the list of (lhs, rhs)."""
    tenv = law.env()
    comp = _Compiler(ctx.structure, ctx.monad, tenv, dict(law.algebras))
    b = {}
    for n in law.objects:
        b[n] = binding[n]
    for a, c in law.algebras:
        b[a] = b[c] = binding[a]["carrier"]
        b["@" + a] = binding[a]["action"]
    for n, _, _ in law.morphisms:
        b[n] = binding[n]
    pairs = list(zip(law.steps, law.steps[1:])) if law.kind == "chain" else list(law.eqs)
    return [(comp.mor(l, root=True)(b), comp.mor(r, root=True)(b)) for l, r in pairs]


# ------------------------------------------------------------------- suites

A, B, C, D, E, F_ = Ob("A"), Ob("B"), Ob("C"), Ob("D"), Ob("E"), Ob("F")
X, Y, Z = Ob("X"), Ob("Y"), Ob("Z")
A1, A2, B1, B2, C1, C2 = (Ob(n) for n in ("A1", "A2", "B1", "B2", "C1", "C2"))
f, g, h = Var("f"), Var("g"), Var("h")
f1, f2, f3, g1, g2, h1, h2 = (Var(n) for n in ("f1", "f2", "f3", "g1", "g2", "h1", "h2"))
ONE = One()


def _law(label, suite, objects, morphisms, *eqs, **kw):
    return Law(label, suite, tuple(objects), tuple(morphisms), eqs=tuple(eqs), **kw)


def product_suite():
    s = "product"
    i = Id
    return [
        _law("p1", s, "XYAB", [("h", X, Y), ("f", Y, A), ("g", Y, B)],
             (Pair(f, g) @ h, Pair(f @ h, g @ h))),
        _law("p2", s, ["X", "A1", "A2", "B1", "B2"],
             [("h1", X, A1), ("h2", X, A2), ("f", A1, B1), ("g", A2, B2)],
             ((f * g) @ Pair(h1, h2), Pair(f @ h1, g @ h2))),
        _law("p3", s, "AB", [], (Pair(Pi1(A, B), Pi2(A, B)), i(A * B))),
        _law("p4", s, ["A1", "A2", "B1", "B2"], [("f1", A1, B1), ("f2", A2, B2)],
             (Pi1(B1, B2) @ (f1 * f2), f1 @ Pi1(A1, A2)),
             (Pi2(B1, B2) @ (f1 * f2), f2 @ Pi2(A1, A2))),
        _law("p5", s, ["X", "A1", "A2"], [("f1", X, A1), ("f2", X, A2)],
             (Pi1(A1, A2) @ Pair(f1, f2), f1),
             (Pi2(A1, A2) @ Pair(f1, f2), f2)),
        _law("p6", s, "A", [], (Delta(A), Pair(i(A), i(A))), note="definition of the diagonal"),
        _law("p7", s, "XAB", [("f", A, B)],
             (f @ Pi2(X, A), Pi2(X, B) @ (i(X) * f))),
        _law("p8", s, "XAB", [("f", A, B)],
             (f @ Pi1(A, X), Pi1(B, X) @ (f * i(X)))),
        _law("p9", s, "ABCD", [("f", A, B), ("g", C, D)],
             (f * g, (f * i(D)) @ (i(A) * g)),
             (f * g, (i(B) * g) @ (f * i(C)))),
        _law("p11", s, "ABCD", [("f", A, C), ("g", B, D)],
             ((f * g) @ Swap(B, A), Swap(D, C) @ (g * f))),
        _law("p12", s, "AB", [], (Swap(B, A) @ Swap(A, B), i(A * B))),
        _law("p13", s, "A", [], (Pi1(A, A) @ Delta(A), i(A)), (Pi2(A, A) @ Delta(A), i(A))),
        _law("p14", s, "AB", [("f", A, B)], ((f * f) @ Delta(A), Delta(B) @ f)),
        _law("p15", s, "ABCD", [("g", A, B), ("f", B, C)],
             ((f @ g) * i(D), (f * i(D)) @ (g * i(D)))),
        _law("p16", s, "ABCDEF", [("f2", A, B), ("f1", B, C), ("g2", D, E), ("g1", E, F_)],
             ((f1 * g1) @ (f2 * g2), (f1 @ f2) * (g1 @ g2)),
             note="right-hand factor read as g1 . g2, the typed form used in proofs"),
        _law("p19", s, "XAB", [("f", X, A), ("g", X, B)],
             (Pair(f, g), (f * g) @ Delta(X)), note="pairing through the diagonal"),
        _law("p-swap", s, "AB", [], (Swap(A, B), Pair(Pi2(A, B), Pi1(A, B))),
             note="definition of the symmetry"),
    ]


PRODUCT_ABSENT = ("p10", "p17", "p18")
ASSOC_ABSENT = ("as2", "as5")


def assoc_suite():
    s = "assoc"
    i = Id
    return [
        _law("as-def", s, "ABC", [],
             (Alpha(A, B, C), Pair(Pi1(A, B) @ Pi1(A * B, C), Pi2(A, B) * i(C))),
             note="definition of the associator"),
        _law("as-definv", s, "ABC", [],
             (AlphaInv(A, B, C), Pair(i(A) * Pi1(B, C), Pi2(B, C) @ Pi2(A, B * C))),
             note="definition of the inverse associator"),
        _law("as1", s, "ABC", [],
             (compose(Alpha(B, C, A), Swap(A, B * C), Alpha(A, B, C)),
              compose(i(B) * Swap(A, C), Alpha(B, A, C), Swap(A, B) * i(C)))),
        _law("as3", s, ["A1", "B1", "A2", "B2", "C1", "C2"],
             [("f1", A1, B1), ("f2", A2, B2), ("f3", C1, C2)],
             ((f1 * (f2 * f3)) @ Alpha(A1, A2, C1), Alpha(B1, B2, C2) @ ((f1 * f2) * f3))),
        _law("as4", s, ["A1", "B1", "A2", "B2", "C1", "C2"],
             [("f1", A1, B1), ("f2", A2, B2), ("f3", C1, C2)],
             (AlphaInv(B1, B2, C2) @ (f1 * (f2 * f3)), ((f1 * f2) * f3) @ AlphaInv(A1, A2, C1))),
        _law("as6", s, "ABC", [], (AlphaInv(A, B, C) @ Alpha(A, B, C), i((A * B) * C))),
        _law("as7", s, "ABC", [], (Alpha(A, B, C) @ AlphaInv(A, B, C), i(A * (B * C)))),
    ]


def exponent_suite():
    s = "exponent"
    i = Id
    AB = Exp(A, B)
    return [
        _law("e1", s, "ABCD", [("f", C * A, B), ("g", D, C)],
             (Lam(f) @ g, Lam(f @ (g * i(A))))),
        _law("e2", s, "AB", [], (Lam(Ev(A, B)), i(AB))),
        _law("e3", s, "ABC", [("f", C * A, B)], (Ev(A, B) @ (Lam(f) * i(A)), f)),
        _law("e4", s, "ABCD", [("f", C, AB), ("g", D, C)],
             (LamInv(f @ g), LamInv(f) @ (g * i(A)))),
        _law("e5", s, "ABC", [("f", C, AB)], (Lam(LamInv(f)), f)),
        _law("e6", s, "ABC", [("f", C * A, B)], (LamInv(Lam(f)), f)),
        Law("e7", s, tuple("ABC"), (("f", C, AB), ("g", C, AB)), kind="iff",
            premise=(f, g), eqs=((LamInv(f), LamInv(g)),)),
        Law("e8", s, tuple("ABC"), (("f", C * A, B), ("g", C * A, B)), kind="iff",
            premise=(f, g), eqs=((Lam(f), Lam(g)),)),
        _law("e9", s, "ABC", [("f", C, AB)], (Ev(A, B) @ (f * i(A)), LamInv(f))),
    ]


M5_NOTE = ("with f : A -> B the two sides have different types; checked with "
           "f : A -> TB, the only well-typed reading, where it is not a law of monads")


def m5_untyped():
    """m5 with f : A -> B, which is ill-typed."""
    return _law("m5", "monad", "AB", [("f", A, B)],
                (TMor(f) @ Mu(A), TMor(Mu(B)) @ TMor(TMor(f))))


def monad_suite():
    s = "monad"
    T = TOb
    return [
        _law("m1", s, "A", [], (Mu(A) @ Mu(T(A)), Mu(A) @ TMor(Mu(A)))),
        _law("m2", s, "A", [], (Mu(A) @ TMor(Eta(A)), Id(T(A)))),
        _law("m3", s, "A", [], (Mu(A) @ Eta(T(A)), Id(T(A)))),
        _law("m4", s, "AB", [("f", A, B)], (Eta(B) @ f, TMor(f) @ Eta(A))),
        _law("m5", s, "AB", [("f", A, T(B))],
             (TMor(f) @ Mu(A), TMor(Mu(B)) @ TMor(TMor(f))), note=M5_NOTE, caveat=True),
        _law("m6", s, "AB", [("f", A, B)], (TMor(f) @ Mu(A), Mu(B) @ TMor(TMor(f)))),
    ]


def strength_suite():
    s = "strength"
    T = TOb
    i = Id
    return [
        _law("s1", s, "AB", [], (Lst(A, B) @ (i(A) * Eta(B)), Eta(A * B))),
        _law("s2", s, "AB", [],
             (Lst(A, B) @ (i(A) * Mu(B)), compose(Mu(A * B), TMor(Lst(A, B)), Lst(A, T(B))))),
        _law("s3", s, "AB", [], (TMor(Pi2(A, B)) @ Lst(A, B), Pi2(A, T(B)))),
        _law("s4", s, "ABCD", [("f", A, C), ("g", B, D)],
             (Lst(C, D) @ (f * TMor(g)), TMor(f * g) @ Lst(A, B))),
        _law("s5", s, "ABC", [],
             (TMor(Alpha(A, B, C)) @ Lst(A * B, C),
              compose(Lst(A, B * C), i(A) * Lst(B, C), Alpha(A, B, T(C))))),
        _law("s-unit", s, "A", [],
             (TMor(Pi2(ONE, A)) @ Lst(ONE, A), Pi2(ONE, T(A))),
             note="strength commutes with the left unitor"),
    ]


def algebra_suite():
    s = "algebra"
    fA = Act("alg")
    return [
        Law("al1", s, (), (), (("alg", "A"),), eqs=((fA @ Eta(A), Id(A)),)),
        Law("al2", s, (), (), (("alg", "A"),), eqs=((fA @ Mu(A), fA @ TMor(fA)),)),
    ]


SUITES = {
    "product": product_suite,
    "assoc": assoc_suite,
    "exponent": exponent_suite,
    "monad": monad_suite,
    "strength": strength_suite,
    "algebra": algebra_suite,
}

ABSENT = {"product": PRODUCT_ABSENT, "assoc": ASSOC_ABSENT}


def run_suite(ctx, suite, labels=None, budget=None):
    """Run a named suite (or a list of laws) against a context."""
    if isinstance(suite, str):
        name = suite
        laws = SUITES[suite]()
    else:
        laws = list(suite)
        name = laws[0].suite if laws else "custom"
    if labels is not None:
        laws = [l for l in laws if l.label in labels]
    budget = budget or Budget()
    results = []
    for law in laws:
        results.append(check_law(law, ctx, budget))
    for lab in ABSENT.get(name, ()):
        if labels is None or lab in labels:
            results.append(LawResult(lab, name, "absent", 0,
                                     note="no law carries this label"))
    return LawReport(name, ctx.name or name, results)



# -------------------------------------------------------------- derivations

def _alg_product_action(fa, fb, a, b):
    return (fa * fb) @ Pair(TMor(Pi1(a, b)), TMor(Pi2(a, b)))


def derivations():
    """Proof chains replayed as step-by-step morphism equalities."""
    T = TOb
    i = Id
    fA, fB, fC = Act("alg_a"), Act("alg_b"), Act("alg_c")
    P = _alg_product_action(fA, fB, A, B)
    out = {}

    out["alg-product-unit"] = Law(
        "alg-product-unit", "derivation", (), (), (("alg_a", "A"), ("alg_b", "B")),
        kind="chain", anchor="thm:alg-product", steps=(
            P @ Eta(A * B),
            (fA * fB) @ Pair(TMor(Pi1(A, B)) @ Eta(A * B), TMor(Pi2(A, B)) @ Eta(A * B)),
            (fA * fB) @ Pair(Eta(A) @ Pi1(A, B), Eta(B) @ Pi2(A, B)),
            Pair(fA @ Eta(A) @ Pi1(A, B), fB @ Eta(B) @ Pi2(A, B)),
            Pair(Pi1(A, B), Pi2(A, B)),
            i(A * B)))

    out["alg-product-mult"] = Law(
        "alg-product-mult", "derivation", (), (), (("alg_a", "A"), ("alg_b", "B")),
        kind="chain", anchor="thm:alg-product", steps=(
            P @ Mu(A * B),
            (fA * fB) @ Pair(TMor(Pi1(A, B)) @ Mu(A * B), TMor(Pi2(A, B)) @ Mu(A * B)),
            (fA * fB) @ Pair(Mu(A) @ TMor(TMor(Pi1(A, B))), Mu(B) @ TMor(TMor(Pi2(A, B)))),
            Pair(fA @ Mu(A) @ TMor(TMor(Pi1(A, B))), fB @ Mu(B) @ TMor(TMor(Pi2(A, B)))),
            Pair(fA @ TMor(fA) @ TMor(TMor(Pi1(A, B))), fB @ TMor(fB) @ TMor(TMor(Pi2(A, B)))),
            Pair(fA @ TMor(fA @ TMor(Pi1(A, B))), fB @ TMor(fB @ TMor(Pi2(A, B)))),
            Pair(fA @ TMor(Pi1(A, B) @ (fA * fB) @ Pair(TMor(Pi1(A, B)), TMor(Pi2(A, B)))),
                 fB @ TMor(Pi2(A, B) @ (fA * fB) @ Pair(TMor(Pi1(A, B)), TMor(Pi2(A, B))))),
            Pair(fA @ TMor(Pi1(A, B)) @ TMor(P), fB @ TMor(Pi2(A, B)) @ TMor(P)),
            P @ TMor(P)))

    ahom_f = (Var("f") @ (i(D) * fA), compose(fC, TMor(Var("f")), Lst(D, A)))
    out["ahom-closure-1"] = Law(
        "ahom-closure-1", "derivation", ("D", "E"), (("f", D * A, C), ("g", E, D)),
        (("alg_a", "A"), ("alg_c", "C")), kind="chain", anchor="lem:comp_Ahom",
        where=(ahom_f,), steps=(
            compose(f, g * i(A), i(E) * fA),
            compose(f, i(D) * fA, g * i(T(A))),
            compose(fC, TMor(f), Lst(D, A), g * i(T(A))),
            compose(fC, TMor(f), Lst(D, A), g * TMor(i(A))),
            compose(fC, TMor(f), TMor(g * i(A)), Lst(E, A)),
            compose(fC, TMor(f @ (g * i(A))), Lst(E, A))))

    ahom_g = (g @ (i(D) * fB), compose(fA, TMor(g), Lst(D, B)))
    Tg_l = TMor(g) @ Lst(D, B)
    out["ahom-closure-2"] = Law(
        "ahom-closure-2", "derivation", ("D",), (("f", D * A, C), ("g", D * B, A)),
        (("alg_a", "A"), ("alg_b", "B"), ("alg_c", "C")), kind="chain",
        anchor="lem:comp_Ahom", where=(ahom_f, ahom_g), steps=(
            compose(f, Pair(Pi1(D, B), g), i(D) * fB),
            f @ Pair(Pi1(D, B) @ (i(D) * fB), g @ (i(D) * fB)),
            f @ Pair(Pi1(D, T(B)), g @ (i(D) * fB)),
            f @ Pair(Pi1(D, T(B)), compose(fA, TMor(g), Lst(D, B))),
            compose(f, i(D) * fA, Pair(Pi1(D, T(B)), Tg_l)),
            compose(fC, TMor(f), Lst(D, A), Pair(Pi1(D, T(B)), Tg_l)),
            compose(fC, TMor(f), TMor(Pair(Pi1(D, B), g)), Lst(D, B)),
            compose(fC, TMor(f @ Pair(Pi1(D, B), g)), Lst(D, B))))

    d = Delta(A)
    out["assoc-diagonal"] = Law(
        "assoc-diagonal", "derivation", ("A", "B"), (), kind="chain",
        anchor="lem:comp_Ahom", steps=(
            Alpha(A, A, B) @ (d * i(B)),
            Pair(Pi1(A, A) @ Pi1(A * A, B), Pi2(A, A) * i(B)) @ (d * i(B)),
            Pair(compose(Pi1(A, A), Pi1(A * A, B), d * i(B)), (Pi2(A, A) * i(B)) @ (d * i(B))),
            Pair(compose(Pi1(A, A), Pi1(A * A, B), Pair(i(A), i(A)) * i(B)),
                 (Pi2(A, A) * i(B)) @ (Pair(i(A), i(A)) * i(B))),
            Pair(compose(Pi1(A, A), Pi1(A * A, B), Pair(i(A), i(A)) * i(B)),
                 (Pi2(A, A) @ Pair(i(A), i(A))) * (i(B) @ i(B))),
            Pair(compose(Pi1(A, A), Pair(i(A), i(A)), Pi1(A, B)),
                 (Pi2(A, A) @ Pair(i(A), i(A))) * (i(B) @ i(B))),
            Pair(i(A) @ Pi1(A, B), i(A) * i(B)),
            Pair(Pi1(A, B), i(A * B)),
            Pair(Pi1(A, B) @ i(A * B), i(A * B) @ i(A * B)),
            (Pi1(A, B) * i(A * B)) @ Pair(i(A * B), i(A * B)),
            (Pi1(A, B) * i(A * B)) @ Delta(A * B)))

    gl = TMor(g) @ Lst(D, B)
    dxi = Delta(D) * i(T(B))
    out["strength-pairing"] = Law(
        "strength-pairing", "derivation", ("D", "A", "B"), (("g", D * B, A),),
        kind="chain", anchor="lem:comp_Ahom", steps=(
            Lst(D, A) @ Pair(Pi1(D, T(B)), gl),
            compose(Lst(D, A), Pi1(D, T(B)) * gl, Delta(D * T(B))),
            compose(Lst(D, A), i(D) * gl, Pi1(D, T(B)) * i(D * T(B)), Delta(D * T(B))),
            compose(Lst(D, A), i(D) * gl, Alpha(D, D, T(B)), dxi),
            compose(Lst(D, A), i(D) * TMor(g), i(D) * Lst(D, B), Alpha(D, D, T(B)), dxi),
            compose(TMor(i(D) * g), Lst(D, D * B), i(D) * Lst(D, B), Alpha(D, D, T(B)), dxi),
            compose(TMor(i(D) * g), TMor(Alpha(D, D, B)), Lst(D * D, B), dxi),
            compose(TMor(i(D) * g), TMor(Alpha(D, D, B)), Lst(D * D, B), Delta(D) * TMor(i(B))),
            compose(TMor(i(D) * g), TMor(Alpha(D, D, B)), TMor(Delta(D) * i(B)), Lst(D, B)),
            TMor(compose(i(D) * g, Alpha(D, D, B), Delta(D) * i(B))) @ Lst(D, B),
            TMor(compose(i(D) * g, Pi1(D, B) * i(D * B), Delta(D * B))) @ Lst(D, B),
            TMor((Pi1(D, B) * g) @ Delta(D * B)) @ Lst(D, B),
            TMor(Pair(Pi1(D, B), g)) @ Lst(D, B)))

    # internal exponent B =>* A with action lam(h)
    BA = Exp(B, A)
    hh = compose(fA, TMor(Ev(B, A)), TMor(Swap(B, BA)), Lst(B, BA), Swap(T(BA), B))
    core = compose(fA, TMor(Ev(B, A)), TMor(Swap(B, BA)))
    out["expoalg-unit"] = Law(
        "expoalg-unit", "derivation", ("B",), (), (("alg_a", "A"),), kind="chain",
        anchor="thm:expoalg", steps=(
            Lam(hh) @ Eta(BA),
            Lam(hh @ (Eta(BA) * i(B))),
            Lam(compose(core, Lst(B, BA), i(B) * Eta(BA), Swap(BA, B))),
            Lam(compose(core, Eta(B * BA), Swap(BA, B))),
            Lam(compose(fA, TMor(Ev(B, A)), Eta(BA * B), Swap(B, BA), Swap(BA, B))),
            Lam(compose(fA, TMor(Ev(B, A)), Eta(BA * B))),
            Lam(compose(fA, Eta(A), Ev(B, A))),
            Lam(Ev(B, A)),
            i(BA)))

    lamh = Lam(hh)
    inner = compose(fA, TMor(Ev(B, A)), TMor(Swap(B, BA)), Lst(B, BA))
    TBA = T(BA)
    out["expoalg-mult"] = Law(
        "expoalg-mult", "derivation", ("B",), (), (("alg_a", "A"),), kind="chain",
        anchor="thm:expoalg", steps=(
            lamh @ Mu(BA),
            Lam(hh @ (Mu(BA) * i(B))),
            Lam(compose(core, Lst(B, BA), i(B) * Mu(BA), Swap(T(TBA), B))),
            Lam(compose(core, Mu(B * BA), TMor(Lst(B, BA)), Lst(B, TBA), Swap(T(TBA), B))),
            Lam(compose(fA, TMor(Ev(B, A)), Mu(BA * B), TMor(TMor(Swap(B, BA))),
                        TMor(Lst(B, BA)), Lst(B, TBA), Swap(T(TBA), B))),
            Lam(compose(fA, Mu(A), TMor(TMor(Ev(B, A))), TMor(TMor(Swap(B, BA))),
                        TMor(Lst(B, BA)), Lst(B, TBA), Swap(T(TBA), B))),
            Lam(compose(fA, TMor(fA), TMor(TMor(Ev(B, A))), TMor(TMor(Swap(B, BA))),
                        TMor(Lst(B, BA)), Lst(B, TBA), Swap(T(TBA), B))),
            Lam(compose(fA, TMor(inner), Lst(B, TBA), Swap(T(TBA), B))),
            Lam(compose(fA, TMor(inner), TMor(Swap(TBA, B) @ Swap(B, TBA)),
                        Lst(B, TBA), Swap(T(TBA), B))),
            Lam(compose(fA, TMor(hh), TMor(Swap(B, TBA)), Lst(B, TBA), Swap(T(TBA), B))),
            Lam(compose(fA, TMor(Ev(B, A) @ (lamh * i(B))), TMor(Swap(B, TBA)),
                        Lst(B, TBA), Swap(T(TBA), B))),
            Lam(compose(core, TMor(i(B) * lamh), Lst(B, TBA), Swap(T(TBA), B))),
            Lam(compose(core, Lst(B, BA), i(B) * TMor(lamh), Swap(T(TBA), B))),
            Lam(compose(core, Lst(B, BA), Swap(TBA, B), TMor(lamh) * i(B))),
            Lam(hh @ (TMor(lamh) * i(B))),
            lamh @ TMor(lamh)))
    return out


def replay_derivation(ctx, name, budget=None):
    """Check every step of a named derivation; the first failing step is reported."""
    law = derivations()[name]
    res = check_law(law, ctx, budget)
    return LawReport("derivation", law.anchor or name, [res])
