"""Finite categories, functors and natural transformations.

Every category here exposes the same small interface:

    objects            finite tuple of objects quantified over by checks
    hom(a, b)          tuple of morphisms a -> b (may be called on any object)
    dom(f), cod(f)
    compose(g, f)      g after f
    identity(a)

``FinCategory`` stores everything in explicit tables.  The constructions
below (slices, arrows, products, commas, ...) are lazy views over a parent
category; ``materialize`` turns any view into a ``FinCategory``.
"""

import itertools
from collections.abc import Mapping
from functools import cached_property
from typing import NamedTuple

from .errors import (BoundExceeded, BrokenUnit, CategoryError, DanglingId,
                     FunctorError, MissingComposite, NonAssociative,
                     NotComposable, UnknownObject)


def sort_key(x):
    """Total order on the ids used in this package (ints, strings, tuples)."""
    if isinstance(x, bool):
        return (0, int(x))
    if isinstance(x, int):
        return (0, x)
    if isinstance(x, str):
        return (1, x)
    if isinstance(x, tuple):
        return (2, tuple(sort_key(e) for e in x))
    if isinstance(x, frozenset):
        return (3, tuple(sorted(sort_key(e) for e in x)))
    return (4, repr(x))


def canonical(xs):
    return tuple(sorted(set(xs), key=sort_key))


class Category:
    """Interface shared by explicit and lazily constructed categories."""

    name = None

    def hom(self, a, b):
        raise NotImplementedError

    def dom(self, f):
        raise NotImplementedError

    def cod(self, f):
        raise NotImplementedError

    def compose(self, g, f):
        raise NotImplementedError

    def identity(self, a):
        raise NotImplementedError

    @cached_property
    def morphisms(self):
        return tuple(f for a in self.objects for b in self.objects
                     for f in self.hom(a, b))

    def composite(self, *fs):
        """composite(h, g, f) is h . g . f"""
        out = fs[-1]
        for g in reversed(fs[:-1]):
            out = self.compose(g, out)
        return out

    def is_identity(self, f):
        return f == self.identity(self.dom(f))

    def hom_over(self, x, y):
        """Morphisms h : dom x -> dom y with y . h == x."""
        return tuple(h for h in self.hom(self.dom(x), self.dom(y))
                     if self.compose(y, h) == x)

    def hom_under(self, x, y):
        """Morphisms h : cod x -> cod y with h . x == y."""
        return tuple(h for h in self.hom(self.cod(x), self.cod(y))
                     if self.compose(h, x) == y)

    def outgoing(self, a):
        return tuple(f for b in self.objects for f in self.hom(a, b))

    def incoming(self, b):
        return tuple(f for a in self.objects for f in self.hom(a, b))

    def violations(self, limit=1):
        """Unit and associativity failures over the quantified objects."""
        out = []
        for f in self.morphisms:
            a, b = self.dom(f), self.cod(f)
            if self.compose(f, self.identity(a)) != f or \
                    self.compose(self.identity(b), f) != f:
                out.append(BrokenUnit(f))
                if len(out) >= limit:
                    return out
        outs = {a: self.outgoing(a) for a in self.objects}
        for f in self.morphisms:
            for g in outs[self.cod(f)]:
                gf = self.compose(g, f)
                if self.dom(gf) != self.dom(f) or self.cod(gf) != self.cod(g):
                    out.append(BrokenUnit(gf))
                    if len(out) >= limit:
                        return out
                for h in outs[self.cod(g)]:
                    if self.compose(h, gf) != self.compose(self.compose(h, g), f):
                        out.append(NonAssociative(f, g, h))
                        if len(out) >= limit:
                            return out
        return out

    def validate(self):
        bad = self.violations(limit=1)
        if bad:
            raise bad[0]
        return self

    def materialize(self, name=None):
        return FinCategory.from_category(self, name=name)

    def __repr__(self):
        return f"<{type(self).__name__} {self.name or ''}>"


class FinCategory(Category):
    """Category stored as explicit tables.

    objects: iterable of ids; morphisms: {id: (dom, cod)};
    identity: {object: id}; compose: {(g, f): g . f}.
    """

    def __init__(self, objects, morphisms, identity, compose, name=None,
                 check=True):
        self.name = name
        self.objects = canonical(objects)
        objset = set(self.objects)
        self._dc = {}
        for f, (d, c) in morphisms.items():
            for x in (d, c):
                if x not in objset:
                    raise UnknownObject(x)
            self._dc[f] = (d, c)
        for a in self.objects:
            if a not in identity:
                raise DanglingId(f"identity of {a}")
            if identity[a] not in self._dc:
                raise DanglingId(identity[a])
        self._id = {a: identity[a] for a in self.objects}
        self._comp = {}
        for (g, f), h in compose.items():
            for x in (g, f, h):
                if x not in self._dc:
                    raise DanglingId(x)
            if self._dc[f][1] != self._dc[g][0]:
                raise NotComposable(g, f)
            self._comp[(g, f)] = h
        self.morphisms = canonical(self._dc)
        homs = {}
        for f in self.morphisms:
            homs.setdefault(self._dc[f], []).append(f)
        self._hom = {k: tuple(v) for k, v in homs.items()}
        if check:
            self.check_tables()

    @classmethod
    def from_category(cls, C, name=None):
        mors = {f: (C.dom(f), C.cod(f)) for f in C.morphisms}
        ident = {a: C.identity(a) for a in C.objects}
        outs = {}
        for f in mors:
            outs.setdefault(mors[f][0], []).append(f)
        comp = {(g, f): C.compose(g, f) for f in mors for g in outs.get(mors[f][1], ())}
        return cls(C.objects, mors, ident, comp, name=name or C.name, check=False)

    def check_tables(self):
        """Raise on the first table defect: missing composite, unit, associativity."""
        for a, i in self._id.items():
            if self._dc[i] != (a, a):
                raise BrokenUnit(i)
        for f in self.morphisms:
            for g in self.outgoing(self._dc[f][1]):
                if (g, f) not in self._comp:
                    raise MissingComposite(g, f)
                h = self._comp[(g, f)]
                if self._dc[h] != (self._dc[f][0], self._dc[g][1]):
                    raise NotComposable(g, f)
        self.validate()

    def hom(self, a, b):
        if a not in self._id:
            raise UnknownObject(a)
        if b not in self._id:
            raise UnknownObject(b)
        return self._hom.get((a, b), ())

    def dom(self, f):
        return self._dc[f][0]

    def cod(self, f):
        return self._dc[f][1]

    def identity(self, a):
        return self._id[a]

    def compose(self, g, f):
        try:
            return self._comp[(g, f)]
        except KeyError:
            if f not in self._dc:
                raise DanglingId(f) from None
            if g not in self._dc:
                raise DanglingId(g) from None
            if self._dc[f][1] != self._dc[g][0]:
                raise NotComposable(g, f) from None
            raise MissingComposite(g, f) from None

    def outgoing(self, a):
        return tuple(f for b in self.objects for f in self._hom.get((a, b), ()))

    @property
    def composition_table(self):
        return dict(self._comp)

    @property
    def identities(self):
        return dict(self._id)

    def relabel(self, namer=str):
        """Copy with ids passed through ``namer`` (must stay injective)."""
        obj = {a: namer(a) for a in self.objects}
        mor = {f: namer(f) for f in self.morphisms}
        if len(set(obj.values())) != len(obj) or len(set(mor.values())) != len(mor):
            raise CategoryError("relabelling is not injective")
        return FinCategory(
            obj.values(),
            {mor[f]: (obj[d], obj[c]) for f, (d, c) in self._dc.items()},
            {obj[a]: mor[i] for a, i in self._id.items()},
            {(mor[g], mor[f]): mor[h] for (g, f), h in self._comp.items()},
            name=self.name, check=False)

    def __eq__(self, other):
        if not isinstance(other, FinCategory):
            return NotImplemented
        return (self.objects == other.objects and self._dc == other._dc
                and self._id == other._id and self._comp == other._comp)

    def __hash__(self):
        return hash((self.objects, self.morphisms))


class _View(Category):
    """Lazy category with a hom-set cache."""

    def __init__(self):
        self._homcache = {}

    def hom(self, a, b):
        try:
            return self._homcache[(a, b)]
        except KeyError:
            r = self._homcache[(a, b)] = tuple(self._hom(a, b))
            return r


# ---------------------------------------------------------------- opposite

class OppositeCategory(_View):
    """Same ids, directions reversed."""

    def __init__(self, base):
        super().__init__()
        self.base = base
        self.name = f"{base.name}^op" if base.name else None
        self.objects = base.objects

    def _hom(self, a, b):
        return self.base.hom(b, a)

    def dom(self, f):
        return self.base.cod(f)

    def cod(self, f):
        return self.base.dom(f)

    def compose(self, g, f):
        return self.base.compose(f, g)

    def identity(self, a):
        return self.base.identity(a)


def opposite(C):
    """Opposite category; morphism ids are kept so op(op(C)) == C."""
    if isinstance(C, OppositeCategory):
        return C.base
    if isinstance(C, FinCategory):
        return FinCategory(
            C.objects,
            {f: (C.cod(f), C.dom(f)) for f in C.morphisms},
            C.identities,
            {(f, g): h for (g, f), h in C.composition_table.items()},
            name=f"{C.name}^op" if C.name else None, check=False)
    return OppositeCategory(C)


# ---------------------------------------------------------- slices, arrows

class SliceArrow(NamedTuple):
    src: object
    tgt: object
    base: object


class Square(NamedTuple):
    """Morphism of the arrow category: tgt . top == bottom . src."""
    src: object
    tgt: object
    top: object
    bottom: object


class SliceCategory(_View):
    """Objects are morphisms into ``base``; an object f stands for (dom f, f)."""

    def __init__(self, C, base):
        super().__init__()
        self.parent, self.base = C, base
        self.name = f"{C.name}/{base}"
        self.objects = canonical(f for X in C.objects for f in C.hom(X, base))

    def carrier(self, x):
        return self.parent.dom(x)

    def _hom(self, x, y):
        return (SliceArrow(x, y, h) for h in self.parent.hom_over(x, y))

    def dom(self, m):
        return m.src

    def cod(self, m):
        return m.tgt

    def compose(self, n, m):
        if m.tgt != n.src:
            raise NotComposable(n, m)
        return SliceArrow(m.src, n.tgt, self.parent.compose(n.base, m.base))

    def identity(self, x):
        return SliceArrow(x, x, self.parent.identity(self.parent.dom(x)))

    def arrow(self, x, y, h):
        """Wrap a parent morphism as a slice morphism, checking the triangle."""
        if self.parent.compose(y, h) != x:
            raise CategoryError(f"{h!r} is not a morphism {x!r} -> {y!r} over {self.base!r}")
        return SliceArrow(x, y, h)


class CosliceCategory(_View):
    """Objects are morphisms out of ``base``."""

    def __init__(self, C, base):
        super().__init__()
        self.parent, self.base = C, base
        self.name = f"{base}/{C.name}"
        self.objects = canonical(f for X in C.objects for f in C.hom(base, X))

    def _hom(self, x, y):
        return (SliceArrow(x, y, h) for h in self.parent.hom_under(x, y))

    def dom(self, m):
        return m.src

    def cod(self, m):
        return m.tgt

    def compose(self, n, m):
        if m.tgt != n.src:
            raise NotComposable(n, m)
        return SliceArrow(m.src, n.tgt, self.parent.compose(n.base, m.base))

    def identity(self, x):
        return SliceArrow(x, x, self.parent.identity(self.parent.cod(x)))


class ArrowCategory(_View):
    def __init__(self, C):
        super().__init__()
        self.parent = C
        self.name = f"{C.name}^->"
        self.objects = canonical(C.morphisms)

    def _hom(self, f1, f2):
        C = self.parent
        for top in C.hom(C.dom(f1), C.dom(f2)):
            side = C.compose(f2, top)
            for bottom in C.hom(C.cod(f1), C.cod(f2)):
                if C.compose(bottom, f1) == side:
                    yield Square(f1, f2, top, bottom)

    def dom(self, m):
        return m.src

    def cod(self, m):
        return m.tgt

    def compose(self, n, m):
        if m.tgt != n.src:
            raise NotComposable(n, m)
        C = self.parent
        return Square(m.src, n.tgt, C.compose(n.top, m.top),
                      C.compose(n.bottom, m.bottom))

    def identity(self, f):
        C = self.parent
        return Square(f, f, C.identity(C.dom(f)), C.identity(C.cod(f)))


class ProductCategory(_View):
    def __init__(self, C, D):
        super().__init__()
        self.left, self.right = C, D
        self.name = f"{C.name}x{D.name}"
        self.objects = tuple((c, d) for c in C.objects for d in D.objects)

    def _hom(self, a, b):
        return itertools.product(self.left.hom(a[0], b[0]),
                                 self.right.hom(a[1], b[1]))

    def dom(self, f):
        return (self.left.dom(f[0]), self.right.dom(f[1]))

    def cod(self, f):
        return (self.left.cod(f[0]), self.right.cod(f[1]))

    def compose(self, g, f):
        return (self.left.compose(g[0], f[0]), self.right.compose(g[1], f[1]))

    def identity(self, a):
        return (self.left.identity(a[0]), self.right.identity(a[1]))


class CommaObj(NamedTuple):
    left: object
    right: object
    arrow: object


class CommaArrow(NamedTuple):
    src: object
    tgt: object
    left: object
    right: object


class CommaCategory(_View):
    """(G | F) for G : A -> C and F : B -> C."""

    def __init__(self, G, F):
        super().__init__()
        if G.target is not F.target:
            raise CategoryError("comma functors must share a codomain")
        self.G, self.F = G, F
        C = G.target
        self.name = f"({G.name}|{F.name})"
        self.objects = canonical(
            CommaObj(a, b, f) for a in G.source.objects for b in F.source.objects
            for f in C.hom(G.obj(a), F.obj(b)))

    def _hom(self, x, y):
        C = self.G.target
        for g in self.G.source.hom(x.left, y.left):
            lhs = C.compose(y.arrow, self.G.mor(g))
            for h in self.F.source.hom(x.right, y.right):
                if C.compose(self.F.mor(h), x.arrow) == lhs:
                    yield CommaArrow(x, y, g, h)

    def dom(self, m):
        return m.src

    def cod(self, m):
        return m.tgt

    def compose(self, n, m):
        return CommaArrow(m.src, n.tgt, self.G.source.compose(n.left, m.left),
                          self.F.source.compose(n.right, m.right))

    def identity(self, x):
        return CommaArrow(x, x, self.G.source.identity(x.left),
                          self.F.source.identity(x.right))


class FullSubcategory(_View):
    """Chosen objects, with morphisms optionally filtered by a predicate."""

    def __init__(self, C, objects, keep=None, name=None):
        super().__init__()
        self.parent = C
        self.objects = canonical(objects)
        self.keep = keep
        self.name = name

    def _hom(self, a, b):
        hs = self.parent.hom(a, b)
        return hs if self.keep is None else (h for h in hs if self.keep(h))

    def dom(self, f):
        return self.parent.dom(f)

    def cod(self, f):
        return self.parent.cod(f)

    def compose(self, g, f):
        return self.parent.compose(g, f)

    def identity(self, a):
        return self.parent.identity(a)


def arrow_category(C):
    return ArrowCategory(C)


def slice_category(C, A):
    return SliceCategory(C, A)


def coslice_category(C, A):
    return CosliceCategory(C, A)


def product_category(C, D):
    return ProductCategory(C, D)


def comma_category(G, F):
    return CommaCategory(G, F)


def is_subcategory(B, C):
    """True when B's objects, morphisms, identities and composites sit inside C."""
    cobj = set(C.objects)
    if not set(B.objects) <= cobj:
        return False
    cmor = set(C.morphisms)
    for f in B.morphisms:
        if f not in cmor or B.dom(f) != C.dom(f) or B.cod(f) != C.cod(f):
            return False
    for a in B.objects:
        if B.identity(a) != C.identity(a):
            return False
    for f in B.morphisms:
        for g in B.outgoing(B.cod(f)):
            if B.compose(g, f) != C.compose(g, f):
                return False
    return True


# ------------------------------------------------------ functors, naturals

def _lookup(m, x):
    if isinstance(m, Mapping):
        return m[x]
    return m(x)


class FunctorData:
    """A functor given by tables or by callables on objects and morphisms."""

    def __init__(self, source, target, obj_map, mor_map, name=None):
        self.source, self.target = source, target
        self._obj, self._mor = obj_map, mor_map
        self.name = name

    def obj(self, x):
        return _lookup(self._obj, x)

    def mor(self, f):
        return _lookup(self._mor, f)

    def obj_table(self):
        return {x: self.obj(x) for x in self.source.objects}

    def mor_table(self):
        return {f: self.mor(f) for f in self.source.morphisms}

    def key(self):
        return (tuple(sorted(self.obj_table().items(), key=sort_key)),
                tuple(sorted(self.mor_table().items(), key=sort_key)))

    def violations(self, limit=1):
        S, T = self.source, self.target
        out = []
        for a in S.objects:
            if self.mor(S.identity(a)) != T.identity(self.obj(a)):
                out.append(f"F(id_{a!r}) is not an identity")
        for f in S.morphisms:
            Ff = self.mor(f)
            if T.dom(Ff) != self.obj(S.dom(f)) or T.cod(Ff) != self.obj(S.cod(f)):
                out.append(f"F({f!r}) has the wrong type")
        if out:
            return out[:limit]
        for f in S.morphisms:
            for g in S.outgoing(S.cod(f)):
                if self.mor(S.compose(g, f)) != T.compose(self.mor(g), self.mor(f)):
                    out.append(f"F({g!r} . {f!r}) != F{g!r} . F{f!r}")
                    if len(out) >= limit:
                        return out
        return out

    def is_functor(self):
        return not self.violations()

    def validate(self):
        bad = self.violations()
        if bad:
            raise FunctorError(bad[0])
        return self

    def __repr__(self):
        return f"<Functor {self.name or ''}>"


def identity_functor(C):
    return FunctorData(C, C, lambda x: x, lambda f: f, name=f"id_{C.name}")


def compose_functors(G, F):
    """G after F."""
    return FunctorData(F.source, G.target, lambda x: G.obj(F.obj(x)),
                       lambda f: G.mor(F.mor(f)), name=f"{G.name}{F.name}")


def constant_functor(C, D, d):
    i = D.identity(d)
    return FunctorData(C, D, lambda x: d, lambda f: i, name=f"const_{d}")


def inclusion_functor(B, C):
    return FunctorData(B, C, lambda x: x, lambda f: f, name="incl")


class NatTransData:
    """Natural transformation source => target between parallel functors."""

    def __init__(self, source, target, components, name=None):
        self.source, self.target = source, target
        self._comp = components
        self.name = name

    def component(self, x):
        return _lookup(self._comp, x)

    __getitem__ = component

    def violations(self, limit=1):
        F, G = self.source, self.target
        C, D = F.source, F.target
        out = []
        for a in C.objects:
            c = self.component(a)
            if D.dom(c) != F.obj(a) or D.cod(c) != G.obj(a):
                out.append(f"component at {a!r} has the wrong type")
                if len(out) >= limit:
                    return out
        if out:
            return out
        for f in C.morphisms:
            a, b = C.dom(f), C.cod(f)
            if D.compose(G.mor(f), self.component(a)) != D.compose(self.component(b), F.mor(f)):
                out.append(f"naturality square fails at {f!r}")
                if len(out) >= limit:
                    return out
        return out

    def is_natural(self):
        return not self.violations()


def identity_nat(F):
    return NatTransData(F, F, lambda x: F.target.identity(F.obj(x)))


def vertical_compose(beta, alpha):
    """beta after alpha."""
    D = alpha.source.target
    return NatTransData(alpha.source, beta.target,
                        lambda x: D.compose(beta.component(x), alpha.component(x)))


def whisker_left(H, alpha):
    """H alpha : H F => H G."""
    return NatTransData(compose_functors(H, alpha.source),
                        compose_functors(H, alpha.target),
                        lambda x: H.mor(alpha.component(x)))


def whisker_right(alpha, H):
    """alpha H : F H => G H."""
    return NatTransData(compose_functors(alpha.source, H),
                        compose_functors(alpha.target, H),
                        lambda x: alpha.component(H.obj(x)))


class AdjunctionData:
    """left : D -> C, right : C -> D, unit : id_D => right.left,
    counit : left.right => id_C."""

    def __init__(self, left, right, unit, counit):
        self.left, self.right = left, right
        self.unit, self.counit = unit, counit


# -------------------------------------------------------- functor category

def enumerate_functors(C, D, bound=10**6):
    """All functors C -> D.  ``bound`` caps the number of search nodes."""
    nodes = [0]

    def tick():
        nodes[0] += 1
        if nodes[0] > bound:
            raise BoundExceeded(nodes[0], bound)

    objs = C.objects
    mors = [f for f in C.morphisms if not C.is_identity(f)]
    pairs = [(g, f) for f in C.morphisms for g in C.outgoing(C.cod(f))]
    out = []
    for images in itertools.product(D.objects, repeat=len(objs)):
        tick()
        om = dict(zip(objs, images))
        mm = {C.identity(a): D.identity(om[a]) for a in objs}

        def extend(i):
            tick()
            if i == len(mors):
                out.append(FunctorData(C, D, dict(om), dict(mm)))
                return
            f = mors[i]
            for g in D.hom(om[C.dom(f)], om[C.cod(f)]):
                mm[f] = g
                if all(C.compose(y, x) not in mm or
                       mm[C.compose(y, x)] == D.compose(mm[y], mm[x])
                       for (y, x) in pairs if x in mm and y in mm):
                    extend(i + 1)
                del mm[f]

        extend(0)
    return out


def enumerate_naturals(F, G, bound=10**6):
    C, D = F.source, F.target
    nodes = [0]
    objs = C.objects
    comps = {}
    out = []
    checks = {a: [] for a in objs}
    order = {a: i for i, a in enumerate(objs)}
    for f in C.morphisms:
        a, b = C.dom(f), C.cod(f)
        checks[max(a, b, key=order.get)].append(f)

    def extend(i):
        nodes[0] += 1
        if nodes[0] > bound:
            raise BoundExceeded(nodes[0], bound)
        if i == len(objs):
            out.append(dict(comps))
            return
        a = objs[i]
        for c in D.hom(F.obj(a), G.obj(a)):
            comps[a] = c
            if all(D.compose(G.mor(f), comps[C.dom(f)]) ==
                   D.compose(comps[C.cod(f)], F.mor(f)) for f in checks[a]):
                extend(i + 1)
            del comps[a]

    extend(0)
    return [NatTransData(F, G, c) for c in out]


class NatKey(NamedTuple):
    src: object
    tgt: object
    components: tuple


def functor_category(C, D, bound=10**6):
    """Materialized [C, D]; objects are functor keys, morphisms NatKey tuples.

    The returned category carries ``functors``: key -> FunctorData.
    """
    fs = enumerate_functors(C, D, bound)
    by_key = {F.key(): F for F in fs}
    objs = list(by_key)
    mors, ident, comps = {}, {}, {}
    spent = len(fs)
    for k1 in objs:
        for k2 in objs:
            nats = enumerate_naturals(by_key[k1], by_key[k2], bound)
            spent += len(nats)
            if spent > bound:
                raise BoundExceeded(spent, bound)
            for n in nats:
                key = NatKey(k1, k2, tuple(n.component(a) for a in C.objects))
                mors[key] = (k1, k2)
    for k in objs:
        F = by_key[k]
        ident[k] = NatKey(k, k, tuple(D.identity(F.obj(a)) for a in C.objects))
    outs = {}
    for m in mors:
        outs.setdefault(m.src, []).append(m)
    for m in mors:
        for n in outs.get(m.tgt, ()):
            comps[(n, m)] = NatKey(m.src, n.tgt, tuple(
                D.compose(y, x) for x, y in zip(m.components, n.components)))
    cat = FinCategory(objs, mors, ident, comps, name=f"[{C.name},{D.name}]",
                      check=False)
    cat.functors = by_key
    return cat


# ------------------------------------------------------- isomorphism search

def find_isomorphism(C, D):
    """An isomorphism of categories C -> D as a FunctorData, or None."""
    if len(C.objects) != len(D.objects) or len(C.morphisms) != len(D.morphisms):
        return None

    def signature(K, a):
        return (len(K.hom(a, a)),
                tuple(sorted(len(K.hom(a, b)) for b in K.objects)),
                tuple(sorted(len(K.hom(b, a)) for b in K.objects)))

    csig = {a: signature(C, a) for a in C.objects}
    dsig = {b: signature(D, b) for b in D.objects}
    objs = C.objects
    mors = sorted(C.morphisms, key=lambda f: (not C.is_identity(f), sort_key(f)))
    pairs = [(g, f) for f in C.morphisms for g in C.outgoing(C.cod(f))]

    def obj_maps(i, om, used):
        if i == len(objs):
            yield dict(om)
            return
        a = objs[i]
        for b in D.objects:
            if b in used or dsig[b] != csig[a]:
                continue
            if any(len(C.hom(a, x)) != len(D.hom(b, om[x])) or
                   len(C.hom(x, a)) != len(D.hom(om[x], b)) for x in om):
                continue
            om[a] = b
            used.add(b)
            yield from obj_maps(i + 1, om, used)
            del om[a]
            used.discard(b)

    for om in obj_maps(0, {}, set()):
        mm, used = {}, set()

        def extend(i):
            if i == len(mors):
                return True
            f = mors[i]
            if C.is_identity(f):
                cands = [D.identity(om[C.dom(f)])]
            else:
                cands = [g for g in D.hom(om[C.dom(f)], om[C.cod(f)])
                         if g not in used and not D.is_identity(g)]
            for g in cands:
                mm[f] = g
                used.add(g)
                ok = all(C.compose(y, x) not in mm or
                         mm[C.compose(y, x)] == D.compose(mm[y], mm[x])
                         for (y, x) in pairs if x in mm and y in mm)
                if ok and extend(i + 1):
                    return True
                del mm[f]
                used.discard(g)
            return False

        if extend(0):
            return FunctorData(C, D, dict(om), dict(mm), name="iso")
    return None


def is_isomorphic(C, D):
    return find_isomorphism(C, D) is not None
