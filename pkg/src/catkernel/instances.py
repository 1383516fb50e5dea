"""Ready-made instances: bounded finite sets, Maybe, writer monads, the zoo."""

import json
import os
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from . import analysis
from .catspec import load_category
from .errors import CategoryError
from .finset import Fn, FinSetCat, FinSetStructure
from .monad import StrongMonad


@dataclass
class FinSetInstance:
    max_size: int
    category: FinSetCat
    structure: FinSetStructure

    @property
    def objects(self):
        return self.category.objects


def finset(max_size=3, exp_cap=None):
    """Sets {0..n-1} for n <= max_size; exponentials beyond ``exp_cap`` are absent."""
    cap = max_size if exp_cap is None else exp_cap
    return FinSetInstance(max_size, FinSetCat(max_size), FinSetStructure(exp_cap=cap))


# ------------------------------------------------------------------ Maybe

def _maybe_mor(f):
    return Fn(f.dom + 1, f.cod + 1, f.table + (f.cod,))


def _maybe_eta(a):
    return Fn(a, a + 1, tuple(range(a)))


def _maybe_mu(a):
    return Fn(a + 2, a + 1, tuple(range(a)) + (a, a))


def _maybe_lst(a, b):
    # (x, y) at x*(b+1)+y; y == b is the missing value
    t = []
    for x in range(a):
        t.extend(x * b + y for y in range(b))
        t.append(a * b)
    return Fn(a * (b + 1), a * b + 1, tuple(t))


def maybe_monad(inst=None):
    inst = inst or finset(3)
    return StrongMonad(inst.category, inst.structure, lambda a: a + 1, _maybe_mor,
                       _maybe_eta, _maybe_mu, _maybe_lst, name="maybe")


# ---------------------------------------------------------------- monoids

class InvalidMonoid(CategoryError):
    pass


@dataclass(frozen=True)
class Monoid:
    name: str
    table: tuple   # table[x][y] = x . y
    unit: int

    def __post_init__(self):
        n = len(self.table)
        if not (0 <= self.unit < n) or any(len(r) != n for r in self.table):
            raise InvalidMonoid(f"{self.name}: malformed table")
        m = self.table
        for x in range(n):
            if m[self.unit][x] != x or m[x][self.unit] != x:
                raise InvalidMonoid(f"{self.name}: {self.unit} is not a unit at {x}")
            for y in range(n):
                for z in range(n):
                    if m[m[x][y]][z] != m[x][m[y][z]]:
                        raise InvalidMonoid(f"{self.name}: not associative at {(x, y, z)}")

    @property
    def size(self):
        return len(self.table)

    def op(self, x, y):
        return self.table[x][y]

    @property
    def commutative(self):
        n = self.size
        return all(self.table[x][y] == self.table[y][x] for x in range(n) for y in range(n))


def cyclic(n):
    return Monoid(f"c{n}", tuple(tuple((x + y) % n for y in range(n)) for x in range(n)), 0)


def left_zero_with_unit():
    """{1, a, b} with xy = x for x != 1: a non-commutative monoid."""
    t = ((0, 1, 2), (1, 1, 1), (2, 2, 2))
    return Monoid("lzero", t, 0)


MONOIDS = {
    "trivial": Monoid("trivial", ((0,),), 0),
    "c2": cyclic(2),
    "c3": cyclic(3),
    "or": Monoid("or", ((0, 1), (1, 1)), 0),
    "and": Monoid("and", ((0, 0), (0, 1)), 1),
    "lzero": left_zero_with_unit(),
}


def writer_monad(inst=None, monoid="c2"):
    """T a = M x a, encoded (w, x) -> w*a + x."""
    inst = inst or finset(3)
    M = MONOIDS[monoid] if isinstance(monoid, str) else monoid
    m, e = M.size, M.unit

    def T_mor(f):
        a, b = f.dom, f.cod
        return Fn(m * a, m * b, tuple(w * b + f.table[x] for w in range(m) for x in range(a)))

    def eta(a):
        return Fn(a, m * a, tuple(e * a + x for x in range(a)))

    def mu(a):
        return Fn(m * m * a, m * a, tuple(M.op(w1, w2) * a + x
                                          for w1 in range(m) for w2 in range(m)
                                          for x in range(a)))

    def lst(a, b):
        return Fn(a * m * b, m * a * b, tuple(w * a * b + x * b + y
                                              for x in range(a) for w in range(m)
                                              for y in range(b)))

    mon = StrongMonad(inst.category, inst.structure, lambda a: m * a, T_mor, eta, mu, lst,
                      name=f"writer[{M.name}]")
    mon.monoid = M
    return mon


def make_monad(spec, max_size=3, exp_cap=None):
    """'maybe' or 'writer:<monoid>' (default monoid c2)."""
    name, _, monoid = spec.partition(":")
    inst = finset(max_size, exp_cap)
    if name == "maybe" and not monoid:
        return maybe_monad(inst)
    if name == "writer":
        return writer_monad(inst, monoid or "c2")
    raise KeyError(spec)


# -------------------------------------------------------------------- zoo

def zoo_dir():
    env = os.environ.get("CATKERNEL_ZOO")
    if env and Path(env).is_dir():
        return Path(env)
    return Path(str(resources.files("catkernel") / "data" / "zoo"))


@dataclass
class ZooEntry:
    name: str
    category: object
    expected: dict = field(default_factory=dict)

    def actual(self):
        C = self.category
        out = {}
        if "category" in self.expected:
            prof = analysis.category_profile(C)
            out["category"] = {k: bool(getattr(prof, k)) for k in self.expected["category"]}
        if "objects" in self.expected:
            out["objects"] = {}
            for o, flags in self.expected["objects"].items():
                prof = analysis.classify_object(C, o)
                out["objects"][o] = {k: bool(getattr(prof, k)) for k in flags}
        if "morphisms" in self.expected:
            out["morphisms"] = {}
            for f, flags in self.expected["morphisms"].items():
                prof = analysis.classify_morphism(C, f)
                out["morphisms"][f] = {k: bool(getattr(prof, k)) for k in flags}
        return out

    def mismatches(self):
        got = self.actual()
        bad = []
        for part, table in self.expected.items():
            if part == "category":
                bad += [(part, k, v) for k, v in table.items() if got[part][k] != v]
            else:
                for name, flags in table.items():
                    bad += [(part, name, k, v) for k, v in flags.items()
                            if got[part][name][k] != v]
        return bad


def zoo(path=None):
    d = Path(path) if path else zoo_dir()
    ann_file = d / "annotations.json"
    ann = json.loads(ann_file.read_text()) if ann_file.exists() else {}
    return [ZooEntry(p.stem, load_category(p.read_text()), ann.get(p.stem, {}))
            for p in sorted(d.glob("*.catspec"))]


def zoo_entry(name):
    for e in zoo():
        if e.name == name:
            return e
    raise KeyError(name)
