"""Monads, strength, Kleisli and Eilenberg-Moore constructions.

A monad is given by callables on a base category; a strong monad adds a
chosen cartesian structure and the left strength ``lst(a, b) : a x Tb ->
T(a x b)``.  The exponent constructions at the end work over any strong
monad whose structure offers exponentials and equalizers (the finite-set
structure does).
"""

from collections import Counter
from dataclasses import dataclass
from typing import NamedTuple

from . import lawcheck
from .core import (Category, FinCategory, FunctorData, NatTransData,
                   compose_functors, identity_functor)
from .errors import MissingStructure, NotComposable
from .report import LawReport, LawResult, Verdict


class Monad:
    def __init__(self, category, T_obj, T_mor, eta, mu, name=None):
        self.category = category
        self._T_obj, self._T_mor, self._eta, self._mu = T_obj, T_mor, eta, mu
        self.name = name

    def T_obj(self, a):
        return self._T_obj(a)

    def T_mor(self, f):
        return self._T_mor(f)

    def eta(self, a):
        return self._eta(a)

    def mu(self, a):
        return self._mu(a)

    @property
    def endofunctor(self):
        return FunctorData(self.category, self.category, self.T_obj, self.T_mor,
                           name=self.name)

    @property
    def unit(self):
        return NatTransData(identity_functor(self.category), self.endofunctor, self.eta)

    @property
    def mult(self):
        T = self.endofunctor
        return NatTransData(compose_functors(T, T), T, self.mu)


class StrongMonad(Monad):
    """Monad with a chosen cartesian structure ``structure`` and left strength."""

    def __init__(self, category, structure, T_obj, T_mor, eta, mu, lst, name=None):
        super().__init__(category, T_obj, T_mor, eta, mu, name)
        self.structure = structure
        self._lst = lst

    def lst(self, a, b):
        return self._lst(a, b)

    def rst(self, a, b):
        """Ta x b -> T(a x b), obtained from lst by swapping."""
        S = self.structure
        return S.compose(self.T_mor(S.swap(b, a)),
                         S.compose(self.lst(b, a), S.swap(self.T_obj(a), b)))

    def sst_r(self, a, b):
        """Swapped strength a x Tb -> T(a x b): T(s) . rst . s, equal to lst."""
        S = self.structure
        return S.compose(self.T_mor(S.swap(b, a)),
                         S.compose(self.rst(b, a), S.swap(a, self.T_obj(b))))

    def dst_left(self, a, b):
        """Ta x Tb -> T(a x b), strength on the right argument first."""
        S = self.structure
        Tb = self.T_obj(b)
        return S.compose(self.mu(S.product(a, b)),
                         S.compose(self.T_mor(self.lst(a, b)), self.rst(a, Tb)))

    def dst_right(self, a, b):
        S = self.structure
        Ta = self.T_obj(a)
        return S.compose(self.mu(S.product(a, b)),
                         S.compose(self.T_mor(self.rst(a, b)), self.lst(Ta, b)))


def _ctx(M, objects=None, algebras=None):
    return lawcheck.LawContext(M.category, getattr(M, "structure", None) or _Ops(M.category),
                               M, objects=objects, algebras=algebras, name=M.name)


class _Ops:
    """Identity and composition of a bare category, for monad-only suites."""

    def __init__(self, C):
        self.C = C

    def identity(self, a):
        return self.C.identity(a)

    def compose(self, g, f):
        return self.C.compose(g, f)


def validate_monad(M, objects=None):
    """m-series plus naturality of unit and multiplication."""
    rep = lawcheck.run_suite(_ctx(M, objects), "monad")
    rep.label = "def:monad"
    return rep


def validate_strength(M, objects=None):
    rep = lawcheck.run_suite(_ctx(M, objects), "strength")
    rep.label = "def:strong-monad"
    return rep


def monad_flags(M, objects=None):
    """commutative: both double strengths agree; affine: T1 is terminal."""
    objs = M.category.objects if objects is None else objects
    S = M.structure
    comm = Verdict(True)
    for a in objs:
        for b in objs:
            if M.dst_left(a, b) != M.dst_right(a, b):
                comm = Verdict(False, counterexample={"A": a, "B": b})
                break
        if not comm:
            break
    one = S.terminal()
    T1 = M.T_obj(one)
    try:
        affine = Verdict(len(M.category.hom(T1, one)) == 1 and
                         all(len(M.category.hom(x, T1)) == 1 for x in objs))
    except MissingStructure:
        affine = Verdict(False)
    return {"commutative": comm, "affine": affine}


# ------------------------------------------------------------------ Kleisli

def klift(M, f, b):
    """f : a -> Tb  |->  f# = mu_b . Tf : Ta -> Tb."""
    return M.category.compose(M.mu(b), M.T_mor(f))


class KlMor(NamedTuple):
    src: object
    tgt: object
    arrow: object


class KleisliCategory(Category):
    def __init__(self, M, objects=None):
        self.monad = M
        self.objects = tuple(M.category.objects if objects is None else objects)
        self.name = f"Kl({M.name})"
        self._homs = {}

    def hom(self, a, b):
        if (a, b) not in self._homs:
            self._homs[(a, b)] = tuple(KlMor(a, b, f) for f in
                                       self.monad.category.hom(a, self.monad.T_obj(b)))
        return self._homs[(a, b)]

    def dom(self, f):
        return f.src

    def cod(self, f):
        return f.tgt

    def compose(self, g, f):
        if f.tgt != g.src:
            raise NotComposable(g, f)
        C = self.monad.category
        return KlMor(f.src, g.tgt, C.compose(klift(self.monad, g.arrow, g.tgt), f.arrow))

    def identity(self, a):
        return KlMor(a, a, self.monad.eta(a))


def kleisli_category(M, objects=None):
    return KleisliCategory(M, objects)


# ------------------------------------------------------------ EM algebras

class Algebra(NamedTuple):
    carrier: object
    action: object


class AlgHom(NamedTuple):
    src: Algebra
    tgt: Algebra
    arrow: object


def is_algebra(M, alg):
    C = M.category
    A, a = alg
    if C.compose(a, M.eta(A)) != C.identity(A):
        return False
    return C.compose(a, M.mu(A)) == C.compose(a, M.T_mor(a))


def is_homomorphism(M, src, tgt, h):
    C = M.category
    return C.compose(h, src.action) == C.compose(tgt.action, M.T_mor(h))


def algebras_on(M, carrier):
    C = M.category
    TA = M.T_obj(carrier)
    return [Algebra(carrier, a) for a in C.hom(TA, carrier) if is_algebra(M, Algebra(carrier, a))]


def algebra_census(M, carriers=None):
    carriers = M.category.objects if carriers is None else carriers
    return {A: algebras_on(M, A) for A in carriers}


def homomorphisms(M, src, tgt):
    return [AlgHom(src, tgt, h) for h in M.category.hom(src.carrier, tgt.carrier)
            if is_homomorphism(M, src, tgt, h)]


def em_category(M, carriers=None, extra=()):
    """Materialized category of algebras on the given carriers (plus ``extra``)."""
    C = M.category
    algs = [a for A in (C.objects if carriers is None else carriers) for a in algebras_on(M, A)]
    for a in extra:
        if a not in algs:
            algs.append(a)
    mors, ident = {}, {}
    for x in algs:
        for y in algs:
            for m in homomorphisms(M, x, y):
                mors[m] = (x, y)
        ident[x] = AlgHom(x, x, C.identity(x.carrier))
    outs = {}
    for m in mors:
        outs.setdefault(m.src, []).append(m)
    comp = {(n, m): AlgHom(m.src, n.tgt, C.compose(n.arrow, m.arrow))
            for m in mors for n in outs.get(m.tgt, ())}
    cat = FinCategory(algs, mors, ident, comp, name=f"EM({M.name})", check=False)
    return cat


def free_algebra(M, a):
    return Algebra(M.T_obj(a), M.mu(a))


def em_terminal(M, census=None):
    """(1, !_T1) with checks that it is an algebra and terminal among ``census``."""
    S = M.structure
    one = S.terminal()
    alg = Algebra(one, S.bang(M.T_obj(one)))
    ok = is_algebra(M, alg)
    counts = {}
    for x in census or []:
        counts[x] = len(homomorphisms(M, x, alg))
    bad = [x for x, n in counts.items() if n != 1]
    return alg, Verdict(ok and not bad, witness=alg,
                        counterexample={"algebra": bad[0], "homs": counts[bad[0]]} if bad else
                        (None if ok else "not an algebra"))


def em_product_action(M, a, b):
    S = M.structure
    A, B = a.carrier, b.carrier
    return S.compose(S.prod(a.action, b.action),
                     S.pair(M.T_mor(S.pi1(A, B)), M.T_mor(S.pi2(A, B))))


def em_product(M, a, b, census=None):
    """Product algebra with projections, checked against every algebra in census."""
    S = M.structure
    C = M.category
    A, B = a.carrier, b.carrier
    P = Algebra(S.product(A, B), em_product_action(M, a, b))
    p1, p2 = S.pi1(A, B), S.pi2(A, B)
    checks = {"algebra": is_algebra(M, P),
              "pi1_hom": is_homomorphism(M, P, a, p1),
              "pi2_hom": is_homomorphism(M, P, b, p2)}
    bad = None
    for c in census or []:
        homs_p = [h.arrow for h in homomorphisms(M, c, P)]
        seen = Counter((C.compose(p1, h), C.compose(p2, h)) for h in homs_p)
        for f in homomorphisms(M, c, a):
            for g in homomorphisms(M, c, b):
                v = S.pair(f.arrow, g.arrow)
                if not is_homomorphism(M, c, P, v) or seen[(f.arrow, g.arrow)] != 1:
                    bad = {"algebra": c, "f": f.arrow, "g": g.arrow,
                           "mediators": seen[(f.arrow, g.arrow)]}
                    break
            if bad:
                break
        if bad:
            break
    checks["universal"] = bad is None
    return (P, p1, p2), Verdict(all(checks.values()), witness=checks, counterexample=bad)


def diagonal_is_homomorphism(M, a):
    (P, _, _), _ = em_product(M, a, a)
    return is_homomorphism(M, a, P, M.structure.delta(a.carrier))


# ------------------------------------------------------------------ AHom

def ahom_check(M, f, B, a, c):
    """f : B x A -> C is an algebra map in its right argument:
    f . (id x f_A) == f_C . Tf . lst."""
    S = M.structure
    lhs = S.compose(f, S.prod(S.identity(B), a.action))
    rhs = S.compose(c.action, S.compose(M.T_mor(f), M.lst(B, a.carrier)))
    return lhs == rhs


def ahoms(M, B, a, c):
    S = M.structure
    return [f for f in M.category.hom(S.product(B, a.carrier), c.carrier)
            if ahom_check(M, f, B, a, c)]


# ------------------------------------------------------- internal exponent

def internal_exponent(M, B, a):
    """B =>* A: carrier B => A, action lam(f_A . Tev . Ts . lst . s)."""
    S = M.structure
    A = a.carrier
    E = S.exp(B, A)
    TE = M.T_obj(E)
    h = S.compose(a.action, S.compose(
        M.T_mor(S.ev(B, A)), S.compose(
            M.T_mor(S.swap(B, E)), S.compose(M.lst(B, E), S.swap(TE, B)))))
    return Algebra(E, S.lam(h, TE, B))


def internal_exponent_report(M, B, a):
    """al1/al2 for the action, and ev . s in AHom(B x (B =>* A), A)."""
    S = M.structure
    alg = internal_exponent(M, B, a)
    C = M.category
    unit = C.compose(alg.action, M.eta(alg.carrier)) == C.identity(alg.carrier)
    mult = C.compose(alg.action, M.mu(alg.carrier)) == C.compose(alg.action, M.T_mor(alg.action))
    evs = S.compose(S.ev(B, a.carrier), S.swap(B, alg.carrier))
    return alg, {"al1": unit, "al2": mult, "ev_s_ahom": ahom_check(M, evs, B, alg, a)}


# ------------------------------------------------------- external exponent

@dataclass
class ExternalExponent:
    """A -o B as the equalizer e : (A -o B) -> (A => B) of two curried maps."""
    monad: object
    source: Algebra
    target: Algebra
    apex: object
    e: object
    left: object
    right: object

    def theta(self, f, C):
        """f in AHom(C x A, B)  |->  the unique m with e . m == lam f."""
        S = self.monad.structure
        return S.equalizer_lift(self.e, S.lam(f, C, self.source.carrier))

    def omega(self, g):
        """g : C -> (A -o B)  |->  lam^-1(e . g)."""
        S = self.monad.structure
        return S.lam_inv(S.compose(self.e, g), self.source.carrier, self.target.carrier)

    def ev(self):
        """ev . (e x id) : (A -o B) x A -> B."""
        S = self.monad.structure
        A = self.source.carrier
        return S.compose(S.ev(A, self.target.carrier), S.prod(self.e, S.identity(A)))


def external_exponent(M, a, b):
    S = M.structure
    A, B = a.carrier, b.carrier
    E = S.exp(A, B)
    TA = M.T_obj(A)
    left = S.lam(S.compose(S.ev(A, B), S.prod(S.identity(E), a.action)), E, TA)
    right = S.lam(S.compose(b.action, S.compose(M.T_mor(S.ev(A, B)), M.lst(E, A))), E, TA)
    apex, e = S.equalizer(left, right)
    return ExternalExponent(M, a, b, apex, e, left, right)


def bijection_report(M, X, C):
    """Theta and Omega are inverse bijections AHom(C x A, B) <-> Hom(C, A -o B)."""
    S = M.structure
    lin = ahoms(M, C, X.source, X.target)
    homs = M.category.hom(C, X.apex)
    omega_theta = all(X.omega(X.theta(f, C)) == f for f in lin)
    theta_omega = all(X.theta(X.omega(g), C) == g for g in homs)
    lands = all(ahom_check(M, X.omega(g), C, X.source, X.target) for g in homs)
    return {"C": C, "ahom": len(lin), "hom": len(homs),
            "omega_theta": omega_theta, "theta_omega": theta_omega,
            "omega_lands_in_ahom": lands,
            "ok": omega_theta and theta_omega and lands and len(lin) == len(homs)}


def conjecture_probe(M, C, a, b):
    """|Hom(C, A -o B)| against |Hom_EM(A, C =>* B)|, reported only."""
    X = external_exponent(M, a, b)
    lhs = len(M.category.hom(C, X.apex))
    target = internal_exponent(M, C, b)
    rhs = len(homomorphisms(M, a, target))
    return {"C": C, "A": a, "B": b, "lhs": lhs, "rhs": rhs, "equal": lhs == rhs}


def strength_suite_report(M, objects=None):
    return validate_strength(M, objects)


def algebra_suite_report(M, algebras, objects=None):
    ctx = _ctx(M, objects, algebras=lambda: algebras)
    rep = lawcheck.run_suite(ctx, "algebra")
    rep.label = "def:algebra"
    return rep


def em_summary(M, carriers):
    census = algebra_census(M, carriers)
    return {A: len(v) for A, v in census.items()}


__all__ = [n for n in dir() if not n.startswith("_")] + ["LawReport", "LawResult"]
