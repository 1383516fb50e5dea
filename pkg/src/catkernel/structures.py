"""Universal-property witnesses and chosen cartesian / monoidal structure.

Verification is by counting mediators: for a product (P, p1, p2) the map
Hom(D, P) -> Hom(D, A) x Hom(D, B), v |-> (p1 v, p2 v) must be a bijection
for every test object D, and a failing cone is reported together with the
number of mediators it has (0, or 2 and more).
"""

from collections import Counter
from dataclasses import dataclass, field

from .analysis import is_initial, is_iso, is_terminal, right_adjoint
from .core import FunctorData, ProductCategory
from .errors import MissingExponential, MissingProduct
from .report import LawReport, LawResult, Verdict


@dataclass(eq=False)
class ProductWitness:
    left: object
    right: object
    apex: object
    pi1: object
    pi2: object
    pairing: object = None  # optional callable (f, g) -> mediator
    _tables: dict = field(default_factory=dict, repr=False)

    def mediator(self, C, f, g):
        if self.pairing is not None:
            return self.pairing(f, g)
        D = C.dom(f)
        table = self._tables.get(D)
        if table is None:
            table = self._tables[D] = {
                (C.compose(self.pi1, v), C.compose(self.pi2, v)): v
                for v in C.hom(D, self.apex)}
        return table[(f, g)]

    def to_json(self):
        return {"apex": self.apex, "pi1": self.pi1, "pi2": self.pi2}


@dataclass(eq=False)
class PullbackWitness:
    f1: object
    f2: object
    apex: object
    p1: object
    p2: object
    pairing: object = None

    def mediator(self, C, g1, g2):
        if self.pairing is not None:
            return self.pairing(g1, g2)
        hits = [v for v in C.hom(C.dom(g1), self.apex)
                if C.compose(self.p1, v) == g1 and C.compose(self.p2, v) == g2]
        if len(hits) != 1:
            raise LookupError(f"{len(hits)} mediators")
        return hits[0]

    def to_json(self):
        return {"apex": self.apex, "p1": self.p1, "p2": self.p2}


@dataclass(eq=False)
class EqualizerWitness:
    f: object
    g: object
    apex: object
    e: object

    def to_json(self):
        return {"apex": self.apex, "e": self.e}


@dataclass(eq=False)
class ExponentialWitness:
    base: object      # exponent A2
    target: object    # A1
    apex: object      # A2 => A1
    ev: object        # apex x A2 -> A1
    product: ProductWitness = None
    _tables: dict = field(default_factory=dict, repr=False)

    def to_json(self):
        return {"apex": self.apex, "ev": self.ev}


# ------------------------------------------------------------ verification

def verify_product(C, A, B, P, p1, p2, objects=None):
    if C.dom(p1) != P or C.dom(p2) != P or C.cod(p1) != A or C.cod(p2) != B:
        return Verdict(False, counterexample="projections have the wrong type")
    for D in (C.objects if objects is None else objects):
        ha, hb = C.hom(D, A), C.hom(D, B)
        seen = Counter((C.compose(p1, v), C.compose(p2, v)) for v in C.hom(D, P))
        if len(seen) == len(ha) * len(hb) and all(n == 1 for n in seen.values()):
            continue
        for f in ha:
            for g in hb:
                n = seen.get((f, g), 0)
                if n != 1:
                    return Verdict(False, counterexample={"test": D, "f1": f, "f2": g, "mediators": n})
    return Verdict(True)


def _cone_counts(C, D, f1, f2):
    c1 = Counter(C.compose(f1, g) for g in C.hom(D, C.dom(f1)))
    c2 = Counter(C.compose(f2, g) for g in C.hom(D, C.dom(f2)))
    return sum(n * c2.get(k, 0) for k, n in c1.items())


def verify_pullback(C, f1, f2, P, p1, p2, objects=None):
    if C.compose(f1, p1) != C.compose(f2, p2):
        return Verdict(False, counterexample="square does not commute")
    for D in (C.objects if objects is None else objects):
        seen = Counter((C.compose(p1, v), C.compose(p2, v)) for v in C.hom(D, P))
        cones = _cone_counts(C, D, f1, f2)
        if len(seen) == cones and all(n == 1 for n in seen.values()):
            continue
        for g1 in C.hom(D, C.dom(f1)):
            for g2 in C.hom(D, C.dom(f2)):
                if C.compose(f1, g1) != C.compose(f2, g2):
                    continue
                n = seen.get((g1, g2), 0)
                if n != 1:
                    return Verdict(False, counterexample={"test": D, "g1": g1, "g2": g2, "mediators": n})
    return Verdict(True)


def verify_equalizer(C, f, g, E, e, objects=None):
    if C.compose(f, e) != C.compose(g, e):
        return Verdict(False, counterexample="e does not equalize")
    A = C.dom(f)
    for Z in (C.objects if objects is None else objects):
        forks = [m for m in C.hom(Z, A) if C.compose(f, m) == C.compose(g, m)]
        seen = Counter(C.compose(e, v) for v in C.hom(Z, E))
        for m in forks:
            if seen.get(m, 0) != 1:
                return Verdict(False, counterexample={"test": Z, "m": m, "mediators": seen.get(m, 0)})
    return Verdict(True)


def verify_exponential(C, products, A2, A1, B, ev, objects=None):
    """(B, ev : B x A2 -> A1) is an exponential; ``products(X, Y)`` gives witnesses."""
    pb = products(B, A2)
    if pb is None:
        raise MissingProduct(f"{B} x {A2}")
    if C.dom(ev) != pb.apex or C.cod(ev) != A1:
        return Verdict(False, counterexample="evaluation has the wrong type")
    for Z in (C.objects if objects is None else objects):
        pz = products(Z, A2)
        if pz is None:
            raise MissingProduct(f"{Z} x {A2}")
        targets = C.hom(pz.apex, A1)
        us = C.hom(Z, B)
        seen = Counter()
        for u in us:
            uxid = pb.mediator(C, C.compose(u, pz.pi1), pz.pi2)
            seen[C.compose(ev, uxid)] += 1
        if len(seen) == len(targets) and all(n == 1 for n in seen.values()):
            continue
        for t in targets:
            if seen.get(t, 0) != 1:
                return Verdict(False, counterexample={"test": Z, "g": t, "mediators": seen.get(t, 0)})
    return Verdict(True)


# ------------------------------------------------------------------ search

def find_terminal(C):
    for A in C.objects:
        if is_terminal(C, A):
            return A
    return None


def find_initial(C):
    for A in C.objects:
        if is_initial(C, A):
            return A
    return None


def find_terminals(C):
    return [A for A in C.objects if is_terminal(C, A)]


def find_initials(C):
    return [A for A in C.objects if is_initial(C, A)]


def find_products(C, A, B, limit=None):
    out = []
    for P in C.objects:
        if any(len(C.hom(D, P)) != len(C.hom(D, A)) * len(C.hom(D, B)) for D in C.objects):
            continue
        for p1 in C.hom(P, A):
            for p2 in C.hom(P, B):
                if verify_product(C, A, B, P, p1, p2):
                    out.append(ProductWitness(A, B, P, p1, p2))
                    if limit and len(out) >= limit:
                        return out
    return out


def find_product(C, A, B):
    w = find_products(C, A, B, limit=1)
    return w[0] if w else None


def find_pullbacks(C, f1, f2, limit=None):
    A1, A2 = C.dom(f1), C.dom(f2)
    out = []
    for P in C.objects:
        if any(len(C.hom(D, P)) != _cone_counts(C, D, f1, f2) for D in C.objects):
            continue
        for p1 in C.hom(P, A1):
            for p2 in C.hom(P, A2):
                if C.compose(f1, p1) == C.compose(f2, p2) and \
                        verify_pullback(C, f1, f2, P, p1, p2):
                    out.append(PullbackWitness(f1, f2, P, p1, p2))
                    if limit and len(out) >= limit:
                        return out
    return out


def find_pullback(C, f1, f2):
    w = find_pullbacks(C, f1, f2, limit=1)
    return w[0] if w else None


def find_pushouts(C, f1, f2, limit=None):
    """Pushouts of f1 : B -> A1, f2 : B -> A2, found as pullbacks in C^op."""
    from .core import opposite
    return find_pullbacks(opposite(C), f1, f2, limit=limit)


def find_equalizers(C, f, g, limit=None):
    A = C.dom(f)
    out = []
    for E in C.objects:
        if any(len(C.hom(Z, E)) != sum(1 for m in C.hom(Z, A) if C.compose(f, m) == C.compose(g, m))
               for Z in C.objects):
            continue
        for e in C.hom(E, A):
            if verify_equalizer(C, f, g, E, e):
                out.append(EqualizerWitness(f, g, E, e))
                if limit and len(out) >= limit:
                    return out
    return out


def find_exponentials(C, products, A2, A1, limit=None):
    """Exponentials A2 => A1 given a product chooser ``products(X, Y)``."""
    out = []
    for B in C.objects:
        ok = True
        for Z in C.objects:
            pz = products(Z, A2)
            if pz is None:
                raise MissingProduct(f"{Z} x {A2}")
            if len(C.hom(Z, B)) != len(C.hom(pz.apex, A1)):
                ok = False
                break
        if not ok:
            continue
        pb = products(B, A2)
        if pb is None:
            raise MissingProduct(f"{B} x {A2}")
        for ev in C.hom(pb.apex, A1):
            if verify_exponential(C, products, A2, A1, B, ev):
                out.append(ExponentialWitness(A2, A1, B, ev, pb))
                if limit and len(out) >= limit:
                    return out
    return out


# ------------------------------------------------- chosen cartesian structure

class CartesianStructure:
    """Chosen terminal object, binary products and exponentials of a category.

    Implements the same operations as ``FinSetStructure`` so equations can be
    evaluated against either.
    """

    def __init__(self, C, terminal, products, exponentials=None):
        self.category = C
        self._terminal = terminal
        self.products = products
        self.exponentials = exponentials or {}

    @property
    def has_terminal(self):
        return self._terminal is not None

    @property
    def has_binary_products(self):
        C = self.category
        return all((a, b) in self.products for a in C.objects for b in C.objects)

    @property
    def has_finite_products(self):
        return self.has_terminal and self.has_binary_products

    @property
    def is_ccc(self):
        C = self.category
        return self.has_finite_products and all(
            (a, b) in self.exponentials for a in C.objects for b in C.objects)

    def exponentiating(self, b):
        """Every A => b exists."""
        return all((a, b) in self.exponentials for a in self.category.objects)

    def exponentiable(self, b):
        """Every b => A exists (also called powerful)."""
        return all((b, a) in self.exponentials for a in self.category.objects)

    def flags(self):
        return {"has_terminal": self.has_terminal,
                "has_binary_products": self.has_binary_products,
                "has_finite_products": self.has_finite_products,
                "is_ccc": self.is_ccc}

    def witness(self, a, b):
        try:
            return self.products[(a, b)]
        except KeyError:
            raise MissingProduct(f"{a!r} x {b!r}") from None

    def product_witness(self, a, b):
        return self.products.get((a, b))

    # operations
    def identity(self, a):
        return self.category.identity(a)

    def compose(self, g, f):
        return self.category.compose(g, f)

    def terminal(self):
        if self._terminal is None:
            raise MissingProduct("no terminal object")
        return self._terminal

    def bang(self, a):
        (h,) = self.category.hom(a, self.terminal())
        return h

    def product(self, a, b):
        return self.witness(a, b).apex

    def pi1(self, a, b):
        return self.witness(a, b).pi1

    def pi2(self, a, b):
        return self.witness(a, b).pi2

    def pair(self, f, g):
        C = self.category
        return self.witness(C.cod(f), C.cod(g)).mediator(C, f, g)

    def prod(self, f, g):
        C = self.category
        a, b = C.dom(f), C.dom(g)
        return self.pair(C.compose(f, self.pi1(a, b)), C.compose(g, self.pi2(a, b)))

    def delta(self, a):
        i = self.identity(a)
        return self.pair(i, i)

    def swap(self, a, b):
        return self.pair(self.pi2(a, b), self.pi1(a, b))

    def alpha(self, a, b, c):
        C = self.category
        ab = self.product(a, b)
        return self.pair(C.compose(self.pi1(a, b), self.pi1(ab, c)),
                         self.prod(self.pi2(a, b), self.identity(c)))

    def alpha_inv(self, a, b, c):
        C = self.category
        bc = self.product(b, c)
        return self.pair(self.prod(self.identity(a), self.pi1(b, c)),
                         C.compose(self.pi2(b, c), self.pi2(a, bc)))

    def exp_witness(self, a, b):
        try:
            return self.exponentials[(a, b)]
        except KeyError:
            raise MissingExponential(f"{a!r} => {b!r}") from None

    def has_exp(self, a, b):
        return (a, b) in self.exponentials

    def exp(self, a, b):
        return self.exp_witness(a, b).apex

    def ev(self, a, b):
        return self.exp_witness(a, b).ev

    def lam(self, f, c, a):
        C = self.category
        w = self.exp_witness(a, C.cod(f))
        table = w._tables.get(c)
        if table is None:
            table = w._tables[c] = {
                C.compose(w.ev, self.prod(u, self.identity(a))): u
                for u in C.hom(c, w.apex)}
        return table[f]

    def lam_inv(self, g, a, b):
        return self.compose(self.ev(a, b), self.prod(g, self.identity(a)))


def choose_cartesian_structure(C, exponentials=True):
    """Least terminal, product and exponential witnesses found by search."""
    term = find_terminal(C)
    prods = {}
    for a in C.objects:
        for b in C.objects:
            w = find_product(C, a, b)
            if w is not None:
                prods[(a, b)] = w
    cs = CartesianStructure(C, term, prods)
    if exponentials and cs.has_binary_products:
        for a in C.objects:
            for b in C.objects:
                w = find_exponentials(C, cs.product_witness, a, b, limit=1)
                if w:
                    cs.exponentials[(a, b)] = w[0]
    return cs


# ---------------------------------------------------------------- monoidal

class MonoidalStructure:
    """Tensor, unit, associator, unitors and an optional symmetry on C."""

    def __init__(self, C, tensor, tensor_mor, unit, alpha, lunit, runit,
                 sym=None, name=None):
        self.category = C
        self.tensor, self.tensor_mor = tensor, tensor_mor
        self.unit = unit
        self.alpha, self.lunit, self.runit, self.sym = alpha, lunit, runit, sym
        self.name = name

    @classmethod
    def from_cartesian(cls, S, C=None):
        """Cartesian monoidal structure: alpha = <pi1 pi1, pi2 x id>,
        lunit = pi2, runit = pi1, sym = <pi2, pi1>."""
        C = C if C is not None else S.category
        one = S.terminal()
        return cls(C, S.product, S.prod, one, S.alpha,
                   lambda a: S.pi2(one, a), lambda a: S.pi1(a, one),
                   sym=S.swap, name="cartesian")

    def tensor_functor(self):
        C = self.category
        CC = ProductCategory(C, C)
        return FunctorData(CC, C, lambda ab: self.tensor(*ab),
                           lambda fg: self.tensor_mor(*fg), name="tensor")


@dataclass
class MonoidalReport:
    laws: LawReport
    strict: bool
    symmetric: bool
    closed: object  # True / False / None when not checked

    def to_json(self):
        return {"laws": self.laws.to_json(), "strict": self.strict,
                "symmetric": self.symmetric, "closed": self.closed}


def validate_monoidal(M, check_closed=False):
    C = M.category
    T, Tm, I = M.tensor, M.tensor_mor, M.unit
    obs = C.objects
    idm = C.identity
    comp = C.composite
    results = []

    def run(label, cases, note=None):
        n = 0
        for binding, lhs, rhs in cases:
            n += 1
            if lhs != rhs:
                results.append(LawResult(label, "monoidal", "fail", n,
                                         {"binding": binding, "lhs": lhs, "rhs": rhs}, note=note))
                return
        results.append(LawResult(label, "monoidal", "pass", n, note=note))

    tf = M.tensor_functor()
    bad = tf.violations()
    results.append(LawResult("tensor-functor", "monoidal", "fail" if bad else "pass",
                             len(tf.source.morphisms), {"reason": bad[0]} if bad else None))

    def natural3():
        for f in C.morphisms:
            for g in C.morphisms:
                for h in C.morphisms:
                    a, b, c = C.dom(f), C.dom(g), C.dom(h)
                    a2, b2, c2 = C.cod(f), C.cod(g), C.cod(h)
                    yield ((f, g, h),
                           C.compose(M.alpha(a2, b2, c2), Tm(Tm(f, g), h)),
                           C.compose(Tm(f, Tm(g, h)), M.alpha(a, b, c)))

    run("alpha-natural", natural3())
    run("lunit-natural", (((f,), C.compose(f, M.lunit(C.dom(f))),
                           C.compose(M.lunit(C.cod(f)), Tm(idm(I), f))) for f in C.morphisms))
    run("runit-natural", (((f,), C.compose(f, M.runit(C.dom(f))),
                           C.compose(M.runit(C.cod(f)), Tm(f, idm(I)))) for f in C.morphisms))
    isos = [("alpha-iso", lambda: ((a, b, c) for a in obs for b in obs for c in obs),
             lambda x: M.alpha(*x)),
            ("lunit-iso", lambda: ((a,) for a in obs), lambda x: M.lunit(*x)),
            ("runit-iso", lambda: ((a,) for a in obs), lambda x: M.runit(*x))]
    for label, gen, mk in isos:
        n, fail = 0, None
        for x in gen():
            n += 1
            if not is_iso(C, mk(x)):
                fail = {"binding": x}
                break
        results.append(LawResult(label, "monoidal", "fail" if fail else "pass", n, fail))

    def pentagon():
        for a in obs:
            for b in obs:
                for c in obs:
                    for d in obs:
                        lhs = C.compose(M.alpha(a, b, T(c, d)), M.alpha(T(a, b), c, d))
                        rhs = comp(Tm(idm(a), M.alpha(b, c, d)),
                                   M.alpha(a, T(b, c), d),
                                   Tm(M.alpha(a, b, c), idm(d)))
                        yield (a, b, c, d), lhs, rhs

    run("pentagon", pentagon())
    run("triangle", (((a, b), C.compose(Tm(idm(a), M.lunit(b)), M.alpha(a, I, b)),
                      Tm(M.runit(a), idm(b))) for a in obs for b in obs))
    symmetric = False
    if M.sym is not None:
        s = M.sym
        run("sym-natural", (((f, g), C.compose(s(C.cod(f), C.cod(g)), Tm(f, g)),
                             C.compose(Tm(g, f), s(C.dom(f), C.dom(g))))
                            for f in C.morphisms for g in C.morphisms))
        run("sym-involution", (((a, b), C.compose(s(b, a), s(a, b)), idm(T(a, b)))
                               for a in obs for b in obs))
        run("sym-unit", (((a,), C.compose(M.lunit(a), s(a, I)), M.runit(a)) for a in obs))
        run("hexagon", (((a, b, c),
                         comp(M.alpha(b, c, a), s(a, T(b, c)), M.alpha(a, b, c)),
                         comp(Tm(idm(b), s(a, c)), M.alpha(b, a, c), Tm(s(a, b), idm(c))))
                        for a in obs for b in obs for c in obs))
        symmetric = all(r.status == "pass" for r in results if r.label.startswith("sym") or r.label == "hexagon")
    strict = all(C.is_identity(M.alpha(a, b, c)) for a in obs for b in obs for c in obs) and \
        all(C.is_identity(M.lunit(a)) and C.is_identity(M.runit(a)) for a in obs)
    closed = None
    if check_closed:
        closed = True
        for b in obs:
            F = FunctorData(C, C, lambda x, b=b: T(x, b), lambda f, b=b: Tm(f, idm(b)))
            if right_adjoint(F) is None:
                closed = False
                break
    return MonoidalReport(LawReport("monoidal", M.name or "monoidal", results),
                          strict, symmetric, closed)
