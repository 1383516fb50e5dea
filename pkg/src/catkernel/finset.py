"""The concrete category of finite sets.

Objects are natural numbers n standing for {0, ..., n-1}; a morphism is an
``Fn(dom, cod, table)`` with ``table[i]`` the image of i.  Pairs are encoded
lexicographically, (a, b) -> a*|B| + b, and a function A -> B is encoded as
its table read as a base-|B| numeral (most significant digit first), which
is also the order ``itertools.product`` lists functions in.

``FinSetCat(N)`` quantifies over the objects 0..N but composes, enumerates
hom-sets and builds products or pullbacks for sets of any size, so chosen
constructions never fall outside the category.
"""

import itertools
from typing import NamedTuple

from .core import Category
from .errors import MissingExponential, NotComposable


class Fn(NamedTuple):
    dom: int
    cod: int
    table: tuple

    def __call__(self, x):
        return self.table[x]

    def to_json(self):
        return {"dom": self.dom, "cod": self.cod, "table": list(self.table)}

    def __repr__(self):
        return f"Fn({self.dom}->{self.cod}:{''.join(map(str, self.table)) if self.cod <= 10 else self.table})"


def fn(dom, cod, table):
    table = tuple(table)
    assert len(table) == dom and all(0 <= x < cod for x in table), (dom, cod, table)
    return Fn(dom, cod, table)


def compose(g, f):
    if f.cod != g.dom:
        raise NotComposable(g, f)
    gt = g.table
    return Fn(f.dom, g.cod, tuple([gt[x] for x in f.table]))


def identity(n):
    return Fn(n, n, tuple(range(n)))


def all_functions(m, n):
    return [Fn(m, n, t) for t in itertools.product(range(n), repeat=m)]


def is_injective(f):
    return len(set(f.table)) == f.dom


def is_surjective(f):
    return len(set(f.table)) == f.cod


_HOM_CACHE_LIMIT = 20000


class FinSetCat(Category):
    """FinSet, quantified over objects 0..max_size."""

    def __init__(self, max_size):
        self.max_size = max_size
        self.name = f"FinSet<={max_size}"
        self.objects = tuple(range(max_size + 1))
        self._homs = {}

    def hom(self, a, b):
        try:
            return self._homs[(a, b)]
        except KeyError:
            pass
        if b ** a > _HOM_CACHE_LIMIT * 50:
            raise MemoryError(f"hom({a}, {b}) has {b ** a} elements")
        hs = tuple(all_functions(a, b))
        if len(hs) <= _HOM_CACHE_LIMIT:
            self._homs[(a, b)] = hs
        return hs

    def dom(self, f):
        return f.dom

    def cod(self, f):
        return f.cod

    def compose(self, g, f):
        return compose(g, f)

    def identity(self, a):
        return identity(a)

    def hom_over(self, x, y):
        pre = [[] for _ in range(x.cod)]
        for j, v in enumerate(y.table):
            pre[v].append(j)
        choices = [pre[v] for v in x.table]
        return tuple(Fn(x.dom, y.dom, t) for t in itertools.product(*choices))

    def hom_under(self, x, y):
        forced = {}
        for i, v in enumerate(x.table):
            w = y.table[i]
            if forced.setdefault(v, w) != w:
                return ()
        choices = [[forced[v]] if v in forced else range(y.cod) for v in range(x.cod)]
        return tuple(Fn(x.cod, y.cod, t) for t in itertools.product(*choices))

    def hom_count(self, a, b):
        return b ** a

    def __eq__(self, other):
        return isinstance(other, FinSetCat) and other.max_size == self.max_size

    def __hash__(self):
        return hash(("FinSet", self.max_size))


class FinSetStructure:
    """Chosen cartesian closed structure on finite sets.

    ``exp_cap`` bounds the size of exponential objects that may be formed;
    asking for a larger one raises MissingExponential.
    """

    def __init__(self, exp_cap=None):
        self.exp_cap = exp_cap
        self._cache = {}

    # objects
    def terminal(self):
        return 1

    def product(self, a, b):
        return a * b

    def exp(self, a, b):
        """a => b, i.e. functions a -> b."""
        n = b ** a
        if self.exp_cap is not None and n > self.exp_cap:
            raise MissingExponential(f"{a} => {b} has {n} elements")
        return n

    def has_exp(self, a, b):
        return self.exp_cap is None or b ** a <= self.exp_cap

    # morphisms
    def identity(self, a):
        return identity(a)

    def compose(self, g, f):
        return compose(g, f)

    def bang(self, a):
        return Fn(a, 1, (0,) * a)

    def _memo(self, key, build):
        try:
            return self._cache[key]
        except KeyError:
            r = self._cache[key] = build()
            return r

    def pi1(self, a, b):
        return self._memo(("pi1", a, b), lambda: Fn(a * b, a, tuple(i // b for i in range(a * b))))

    def pi2(self, a, b):
        return self._memo(("pi2", a, b), lambda: Fn(a * b, b, tuple(i % b for i in range(a * b))))

    def pair(self, f, g):
        if f.dom != g.dom:
            raise NotComposable(f, g)
        c = g.cod
        return Fn(f.dom, f.cod * c, tuple([x * c + y for x, y in zip(f.table, g.table)]))

    def prod(self, f, g):
        c = g.cod
        gt = g.table
        return Fn(f.dom * g.dom, f.cod * c, tuple([x * c + y for x in f.table for y in gt]))

    def delta(self, a):
        return Fn(a, a * a, tuple(x * a + x for x in range(a)))

    def swap(self, a, b):
        return self._memo(("swap", a, b), lambda: Fn(a * b, b * a, tuple(
            (i % b) * a + i // b for i in range(a * b))))

    def alpha(self, a, b, c):
        """(a x b) x c -> a x (b x c); the encoding makes this the identity table."""
        return identity(a * b * c)

    def alpha_inv(self, a, b, c):
        return identity(a * b * c)

    def ev(self, a, b):
        """(a => b) x a -> b"""
        def build():
            e = self.exp(a, b)
            return Fn(e * a, b, tuple(x for t in itertools.product(range(b), repeat=a) for x in t))
        return self._memo(("ev", a, b), build)

    def lam(self, f, c, a):
        """Curry f : c x a -> b into c -> (a => b)."""
        b = f.cod
        e = self.exp(a, b)
        t = f.table
        out = []
        for x in range(c):
            v = 0
            for y in range(a):
                v = v * b + t[x * a + y]
            out.append(v)
        return Fn(c, e, tuple(out))

    def lam_inv(self, g, a, b):
        """Uncurry g : c -> (a => b) into c x a -> b."""
        e = self.exp(a, b)
        if g.cod != e:
            raise NotComposable(g, ("ev", a, b))
        out = []
        for u in g.table:
            digits = []
            for _ in range(a):
                digits.append(u % b if b else 0)
                u = u // b if b else 0
            out.extend(reversed(digits))
        return Fn(g.dom * a, b, tuple(out))

    def point(self, a, x):
        return Fn(1, a, (x,))

    # limits used by slices and monads
    def pullback(self, f1, f2):
        """Chosen pullback of f1 : A1 -> B <- A2 : f2 as (apex, p1, p2)."""
        pts = [(x, y) for x in range(f1.dom) for y in range(f2.dom)
               if f1.table[x] == f2.table[y]]
        n = len(pts)
        return n, Fn(n, f1.dom, tuple(p[0] for p in pts)), Fn(n, f2.dom, tuple(p[1] for p in pts))

    def pullback_pair(self, f1, f2, g1, g2):
        """Mediator into the chosen pullback of (f1, f2) for a cone (g1, g2)."""
        pts = [(x, y) for x in range(f1.dom) for y in range(f2.dom)
               if f1.table[x] == f2.table[y]]
        index = {p: i for i, p in enumerate(pts)}
        return Fn(g1.dom, len(pts), tuple(index[(x, y)] for x, y in zip(g1.table, g2.table)))

    def equalizer(self, f, g):
        pts = [x for x in range(f.dom) if f.table[x] == g.table[x]]
        return len(pts), Fn(len(pts), f.dom, tuple(pts))

    def equalizer_lift(self, e, m):
        """Factor m through the inclusion e (m must land in its image)."""
        index = {v: i for i, v in enumerate(e.table)}
        return Fn(m.dom, e.dom, tuple(index[v] for v in m.table))
