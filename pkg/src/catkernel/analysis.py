"""Definition-literal classification of morphisms, objects, functors and categories.

Every predicate quantifies directly over hom-sets of the category's
quantified objects; nothing is specialised to a particular instance.
"""

from collections import Counter
from dataclasses import dataclass, fields

from .core import (AdjunctionData, FunctorData, NatTransData,
                   compose_functors, identity_functor, sort_key)
from .report import Verdict, jsonable


class _Profile:
    def to_json(self):
        return {f.name: jsonable(getattr(self, f.name)) for f in fields(self)}


@dataclass
class MorphismProfile(_Profile):
    epi: Verdict
    mono: Verdict
    bimorphism: Verdict
    iso: Verdict
    section: Verdict
    retraction: Verdict
    endo: Verdict
    auto: Verdict


def _epi(C, f):
    X, Y = C.dom(f), C.cod(f)
    for Z in C.objects:
        seen = {}
        for g in C.hom(Y, Z):
            k = C.compose(g, f)
            if k in seen:
                return Verdict(False, counterexample={"Z": Z, "g1": seen[k], "g2": g})
            seen[k] = g
    return Verdict(True)


def _mono(C, f):
    X = C.dom(f)
    for Z in C.objects:
        seen = {}
        for g in C.hom(Z, X):
            k = C.compose(f, g)
            if k in seen:
                return Verdict(False, counterexample={"Z": Z, "g1": seen[k], "g2": g})
            seen[k] = g
    return Verdict(True)


def classify_morphism(C, f):
    X, Y = C.dom(f), C.cod(f)
    back = C.hom(Y, X)
    idX, idY = C.identity(X), C.identity(Y)
    left = [g for g in back if C.compose(g, f) == idX]
    right = [g for g in back if C.compose(f, g) == idY]
    two = [g for g in left if g in right]
    epi, mono = _epi(C, f), _mono(C, f)
    endo = X == Y
    return MorphismProfile(
        epi=epi, mono=mono,
        bimorphism=Verdict(epi.flag and mono.flag),
        iso=Verdict(bool(two), witness=two[0] if two else None),
        section=Verdict(bool(left), witness=left[0] if left else None),
        retraction=Verdict(bool(right), witness=right[0] if right else None),
        endo=Verdict(endo),
        auto=Verdict(endo and bool(two)))


def is_iso(C, f):
    X, Y = C.dom(f), C.cod(f)
    return any(C.compose(g, f) == C.identity(X) and C.compose(f, g) == C.identity(Y)
               for g in C.hom(Y, X))


def inverse(C, f):
    X, Y = C.dom(f), C.cod(f)
    for g in C.hom(Y, X):
        if C.compose(g, f) == C.identity(X) and C.compose(f, g) == C.identity(Y):
            return g
    return None


@dataclass
class ObjectProfile(_Profile):
    terminal: Verdict
    initial: Verdict
    strict_initial: Verdict
    zero: Verdict


def is_terminal(C, A):
    for B in C.objects:
        n = len(C.hom(B, A))
        if n != 1:
            return Verdict(False, counterexample={"object": B, "count": n})
    return Verdict(True)


def is_initial(C, A):
    for B in C.objects:
        n = len(C.hom(A, B))
        if n != 1:
            return Verdict(False, counterexample={"object": B, "count": n})
    return Verdict(True)


def classify_object(C, A):
    t, i = is_terminal(C, A), is_initial(C, A)
    strict = Verdict(i.flag)
    if i.flag:
        for B in C.objects:
            for f in C.hom(B, A):
                if not is_iso(C, f):
                    strict = Verdict(False, counterexample={"morphism": f})
                    break
            if not strict.flag:
                break
    return ObjectProfile(terminal=t, initial=i, strict_initial=strict,
                         zero=Verdict(t.flag and i.flag))


def terminal_objects(C):
    return [A for A in C.objects if is_terminal(C, A)]


def initial_objects(C):
    return [A for A in C.objects if is_initial(C, A)]


@dataclass
class FunctorProfile(_Profile):
    full: Verdict
    faithful: Verdict
    endofunctor: Verdict


def functor_profile(F):
    S, T = F.source, F.target
    full, faithful = Verdict(True), Verdict(True)
    for a in S.objects:
        for b in S.objects:
            imgs = [F.mor(f) for f in S.hom(a, b)]
            c = Counter(imgs)
            if faithful.flag:
                dup = [g for g, n in c.items() if n > 1]
                if dup:
                    pre = [f for f in S.hom(a, b) if F.mor(f) == dup[0]]
                    faithful = Verdict(False, counterexample={"f1": pre[0], "f2": pre[1]})
            if full.flag:
                missing = [g for g in T.hom(F.obj(a), F.obj(b)) if g not in c]
                if missing:
                    full = Verdict(False, counterexample={"from": a, "to": b, "morphism": missing[0]})
    return FunctorProfile(full=full, faithful=faithful,
                          endofunctor=Verdict(S is T or S == T))


def _automorphisms(C, X):
    return [h for h in C.hom(X, X) if is_iso(C, h)]


def iso_related(C, h, k):
    """Some automorphisms x, y make y . h == k . x (isomorphic in the arrow category)."""
    X, Y = C.dom(h), C.cod(h)
    if (C.dom(k), C.cod(k)) != (X, Y):
        return False
    autX, autY = _automorphisms(C, X), _automorphisms(C, Y)
    rhs = {C.compose(k, x) for x in autX}
    return any(C.compose(y, h) in rhs for y in autY)


def check_pseudo_functor(F, up_to_iso=False):
    S, T = F.source, F.target
    same = iso_related if up_to_iso else (lambda C, h, k: h == k)
    for a in S.objects:
        Fi = F.mor(S.identity(a))
        if (T.dom(Fi), T.cod(Fi)) != (F.obj(a), F.obj(a)):
            return Verdict(False, counterexample={"identity_of": a})
        if not same(T, Fi, T.identity(F.obj(a))):
            return Verdict(False, counterexample={"identity_of": a, "image": Fi})
    for f in S.morphisms:
        for g in S.outgoing(S.cod(f)):
            lhs, rhs = F.mor(S.compose(g, f)), T.compose(F.mor(g), F.mor(f))
            if not same(T, lhs, rhs):
                return Verdict(False, counterexample={"f": f, "g": g, "F(gf)": lhs, "FgFf": rhs})
    return Verdict(True)


def check_natural(alpha):
    bad = alpha.violations()
    return Verdict(not bad, counterexample=bad[0] if bad else None)


def is_natural_iso(alpha):
    if not check_natural(alpha):
        return Verdict(False, counterexample="not natural")
    D = alpha.source.target
    for a in alpha.source.source.objects:
        if not is_iso(D, alpha.component(a)):
            return Verdict(False, counterexample={"object": a})
    return Verdict(True)


@dataclass
class AdjunctionReport(_Profile):
    unit_natural: Verdict
    counit_natural: Verdict
    left_triangle: Verdict
    right_triangle: Verdict

    @property
    def ok(self):
        return all(getattr(self, f.name).flag for f in fields(self))


def check_adjunction(adj, objects_left=None, objects_right=None):
    """Triangle identities (and naturality) of left -| right.

    left : D -> C, right : C -> D.  The checks quantify over the quantified
    objects of D and C unless explicit object lists are supplied.
    """
    F, G, eta, eps = adj.left, adj.right, adj.unit, adj.counit
    C, D = F.target, F.source
    lt = Verdict(True)
    for d in (D.objects if objects_left is None else objects_left):
        Fd = F.obj(d)
        if C.compose(eps.component(Fd), F.mor(eta.component(d))) != C.identity(Fd):
            lt = Verdict(False, counterexample={"object": d})
            break
    rt = Verdict(True)
    for c in (C.objects if objects_right is None else objects_right):
        Gc = G.obj(c)
        if D.compose(G.mor(eps.component(c)), eta.component(Gc)) != D.identity(Gc):
            rt = Verdict(False, counterexample={"object": c})
            break
    return AdjunctionReport(unit_natural=check_natural(eta),
                            counit_natural=check_natural(eps),
                            left_triangle=lt, right_triangle=rt)


def _universal_to(F, c):
    """Least (d, e : F d -> c) through which every F d' -> c factors uniquely."""
    D, C = F.source, F.target
    for d in D.objects:
        if any(len(D.hom(x, d)) != len(C.hom(F.obj(x), c)) for x in D.objects):
            continue
        for e in C.hom(F.obj(d), c):
            if all(len({C.compose(e, F.mor(l)) for l in D.hom(x, d)}) == len(D.hom(x, d))
                   for x in D.objects):
                return d, e
    return None


def _universal_from(G, d):
    """Least (c, u : d -> G c) through which every d -> G c' factors uniquely."""
    C, D = G.source, G.target
    for c in C.objects:
        if any(len(C.hom(c, x)) != len(D.hom(d, G.obj(x))) for x in C.objects):
            continue
        for u in D.hom(d, G.obj(c)):
            if all(len({D.compose(G.mor(k), u) for k in C.hom(c, x)}) == len(C.hom(c, x))
                   for x in C.objects):
                return c, u
    return None


def _factor(cands, test):
    hits = [x for x in cands if test(x)]
    if len(hits) != 1:
        raise LookupError(f"{len(hits)} mediators")
    return hits[0]


def right_adjoint(F):
    """Search a right adjoint of F : D -> C; AdjunctionData or None.

    The right adjoint is built on the quantified objects of C and extended
    lazily to any object whose universal arrow can be found.
    """
    D, C = F.source, F.target
    memo = {}

    def arrow(c):
        if c not in memo:
            memo[c] = _universal_to(F, c)
            if memo[c] is None:
                raise LookupError(f"no universal arrow into {c!r}")
        return memo[c]

    try:
        for c in C.objects:
            arrow(c)
    except LookupError:
        return None

    def gobj(c):
        return arrow(c)[0]

    def gmor(g):
        d1, e1 = arrow(C.dom(g))
        d2, e2 = arrow(C.cod(g))
        target = C.compose(g, e1)
        return _factor(D.hom(d1, d2), lambda l: C.compose(e2, F.mor(l)) == target)

    G = FunctorData(C, D, gobj, gmor, name=f"R({F.name})")

    def unit(d):
        Fd = F.obj(d)
        gd, e = arrow(Fd)
        return _factor(D.hom(d, gd), lambda l: C.compose(e, F.mor(l)) == C.identity(Fd))

    eta = NatTransData(identity_functor(D), compose_functors(G, F), unit, name="unit")
    eps = NatTransData(compose_functors(F, G), identity_functor(C),
                       lambda c: arrow(c)[1], name="counit")
    return AdjunctionData(F, G, eta, eps)


def left_adjoint(G):
    """Search a left adjoint of G : C -> D; AdjunctionData or None."""
    C, D = G.source, G.target
    memo = {}

    def arrow(d):
        if d not in memo:
            memo[d] = _universal_from(G, d)
            if memo[d] is None:
                raise LookupError(f"no universal arrow from {d!r}")
        return memo[d]

    try:
        for d in D.objects:
            arrow(d)
    except LookupError:
        return None

    def fmor(h):
        c1, u1 = arrow(D.dom(h))
        c2, u2 = arrow(D.cod(h))
        target = D.compose(u2, h)
        return _factor(C.hom(c1, c2), lambda k: D.compose(G.mor(k), u1) == target)

    F = FunctorData(D, C, lambda d: arrow(d)[0], fmor, name=f"L({G.name})")

    def counit(c):
        Gc = G.obj(c)
        lc, u = arrow(Gc)
        return _factor(C.hom(lc, c), lambda k: D.compose(G.mor(k), u) == D.identity(Gc))

    eta = NatTransData(identity_functor(D), compose_functors(G, F),
                       lambda d: arrow(d)[1], name="unit")
    eps = NatTransData(compose_functors(F, G), identity_functor(C), counit, name="counit")
    return AdjunctionData(F, G, eta, eps)


@dataclass
class CartesianityReport(_Profile):
    over_u: Verdict
    cartesian_over_u: Verdict
    cartesian: Verdict
    opcartesian: Verdict
    vertical: Verdict


def _cartesian(U, f, u):
    E, B = U.source, U.target
    X, Y = E.dom(f), E.cod(f)
    for Z in E.objects:
        counts = Counter((U.mor(h), E.compose(f, h)) for h in E.hom(Z, X))
        UZ = U.obj(Z)
        ws = B.hom(UZ, B.dom(u))
        for g in E.hom(Z, Y):
            Ug = U.mor(g)
            for w in ws:
                if B.compose(u, w) != Ug:
                    continue
                n = counts.get((w, g), 0)
                if n != 1:
                    return Verdict(False, counterexample={"Z": Z, "g": g, "w": w, "mediators": n})
    return Verdict(True)


def _opcartesian(U, f, u):
    E, B = U.source, U.target
    X, Y = E.dom(f), E.cod(f)
    for Z in E.objects:
        counts = Counter((U.mor(h), E.compose(h, f)) for h in E.hom(Y, Z))
        ws = B.hom(B.cod(u), U.obj(Z))
        for g in E.hom(X, Z):
            Ug = U.mor(g)
            for w in ws:
                if B.compose(w, u) != Ug:
                    continue
                n = counts.get((w, g), 0)
                if n != 1:
                    return Verdict(False, counterexample={"Z": Z, "g": g, "w": w, "mediators": n})
    return Verdict(True)


def is_cartesian(U, f):
    return _cartesian(U, f, U.mor(f)).flag


def cartesianity(U, f, u=None):
    E, B = U.source, U.target
    Uf = U.mor(f)
    u = Uf if u is None else u
    over = Verdict(u == Uf)
    cart = _cartesian(U, f, Uf)
    return CartesianityReport(
        over_u=over,
        cartesian_over_u=cart if over.flag else Verdict(False, counterexample="not over u"),
        cartesian=cart,
        opcartesian=_opcartesian(U, f, Uf),
        vertical=Verdict(B.is_identity(Uf)))


@dataclass
class CategoryProfile(_Profile):
    discrete: Verdict
    preorder: Verdict
    pointed: Verdict
    well_pointed: Verdict


def category_profile(C):
    discrete = Verdict(True)
    for f in C.morphisms:
        if not C.is_identity(f):
            discrete = Verdict(False, counterexample={"morphism": f})
            break
    preorder = Verdict(True)
    for a in C.objects:
        for b in C.objects:
            if len(C.hom(a, b)) > 1:
                preorder = Verdict(False, counterexample={"from": a, "to": b})
                break
        if not preorder.flag:
            break
    zeros = [A for A in C.objects if is_terminal(C, A) and is_initial(C, A)]
    pointed = Verdict(bool(zeros), witness=zeros[0] if zeros else None)
    terms = terminal_objects(C)
    if not terms:
        wp = Verdict(False, counterexample="no terminal object")
    else:
        one = terms[0]
        wp = Verdict(True, witness=one)
        for a in C.objects:
            pts = C.hom(one, a)
            for b in C.objects:
                hs = C.hom(a, b)
                sig = {}
                for f in hs:
                    s = tuple(C.compose(f, p) for p in pts)
                    if s in sig:
                        wp = Verdict(False, counterexample={"f1": sig[s], "f2": f})
                        break
                    sig[s] = f
                if not wp.flag:
                    break
            if not wp.flag:
                break
    return CategoryProfile(discrete=discrete, preorder=preorder, pointed=pointed,
                           well_pointed=wp)


def least(xs):
    xs = list(xs)
    return min(xs, key=sort_key) if xs else None
