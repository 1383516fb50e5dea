"""Reader and writer for the line-based ``.catspec`` format.

    # comment
    category walking_arrow
    object a
    object b
    morphism f : a -> b
    identity a = id_a          (optional, defaults to id_<object>)
    compose g . f = h
    functor F
      obj a |-> x
      mor f |-> g
    end

Statements may appear in any order.  Composites with an identity are
filled in automatically; every other composable pair must be declared.
"""

from dataclasses import dataclass, field

from .core import FinCategory, FunctorData, sort_key
from .errors import BrokenUnit, DanglingId, ParseError, UnknownObject


@dataclass
class FunctorSpec:
    name: str
    obj_map: dict = field(default_factory=dict)
    mor_map: dict = field(default_factory=dict)


@dataclass
class CatSpec:
    name: str = None
    objects: list = field(default_factory=list)
    morphisms: dict = field(default_factory=dict)
    identities: dict = field(default_factory=dict)
    composites: dict = field(default_factory=dict)
    functors: dict = field(default_factory=dict)


def _words(line):
    return line.split()


def parse_catspec(text):
    spec = CatSpec()
    current = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        w = _words(line)
        head = w[0]
        if current is not None:
            if head == "end":
                current = None
                continue
            if head in ("obj", "mor") and len(w) == 4 and w[2] == "|->":
                table = current.obj_map if head == "obj" else current.mor_map
                if w[1] in table:
                    raise ParseError(f"{w[1]} mapped twice", lineno)
                table[w[1]] = w[3]
                continue
            if head not in ("functor", "category", "object", "morphism",
                            "identity", "compose"):
                raise ParseError(f"bad functor line {line!r}", lineno)
            current = None
        if head == "category" and len(w) == 2:
            spec.name = w[1]
        elif head == "object" and len(w) >= 2:
            for name in w[1:]:
                if name in spec.objects:
                    raise ParseError(f"object {name} declared twice", lineno)
                spec.objects.append(name)
        elif head == "morphism":
            # morphism f : a -> b
            if len(w) != 6 or w[2] != ":" or w[4] != "->":
                raise ParseError(f"expected 'morphism f : a -> b', got {line!r}", lineno)
            if w[1] in spec.morphisms:
                raise ParseError(f"morphism {w[1]} declared twice", lineno)
            spec.morphisms[w[1]] = (w[3], w[5])
        elif head == "identity":
            if len(w) != 4 or w[2] != "=":
                raise ParseError(f"expected 'identity a = name', got {line!r}", lineno)
            spec.identities[w[1]] = w[3]
        elif head == "compose":
            if len(w) != 6 or w[2] != "." or w[4] != "=":
                raise ParseError(f"expected 'compose g . f = h', got {line!r}", lineno)
            key = (w[1], w[3])
            if key in spec.composites and spec.composites[key] != w[5]:
                raise ParseError(f"conflicting composites for {w[1]} . {w[3]}", lineno)
            spec.composites[key] = w[5]
        elif head == "functor" and len(w) >= 2:
            current = FunctorSpec(w[1])
            spec.functors[w[1]] = current
        else:
            raise ParseError(f"unrecognised statement {line!r}", lineno)
    return spec


def build_category(spec, check=True):
    """FinCategory from a CatSpec; raises the first structural defect."""
    objects = list(spec.objects)
    objset = set(objects)
    mors = dict(spec.morphisms)
    for f, (d, c) in mors.items():
        for x in (d, c):
            if x not in objset:
                raise UnknownObject(x)
    ident = {}
    for a, i in spec.identities.items():
        if a not in objset:
            raise UnknownObject(a)
        if i in mors and mors[i] != (a, a):
            raise BrokenUnit(i)
        ident[a] = i
    for a in objects:
        i = ident.setdefault(a, f"id_{a}")
        if i not in mors:
            mors[i] = (a, a)
        elif mors[i] != (a, a):
            raise BrokenUnit(i)
    comp = {}
    for (g, f), h in spec.composites.items():
        for x in (g, f, h):
            if x not in mors:
                raise DanglingId(x)
        comp[(g, f)] = h
    for f, (d, c) in mors.items():
        for key in ((f, ident[d]), (ident[c], f)):
            if key in comp and comp[key] != f:
                raise BrokenUnit(f)
            comp[key] = f
    return FinCategory(objects, mors, ident, comp, name=spec.name, check=check)


def load_category(text_or_spec, check=True):
    spec = parse_catspec(text_or_spec) if isinstance(text_or_spec, str) else text_or_spec
    return build_category(spec, check=check)


def build_functor(fspec, source, target):
    """FunctorData from a functor block; identity images default from objects."""
    om = {}
    for a in source.objects:
        if a not in fspec.obj_map:
            raise ParseError(f"functor {fspec.name}: object {a} unmapped")
        b = fspec.obj_map[a]
        if b not in target.objects:
            raise UnknownObject(b)
        om[a] = b
    mm = {}
    for f in source.morphisms:
        if f in fspec.mor_map:
            g = fspec.mor_map[f]
            try:
                target.dom(g)
            except KeyError:
                raise DanglingId(g) from None
            mm[f] = g
        elif source.is_identity(f):
            mm[f] = target.identity(om[source.dom(f)])
        else:
            raise ParseError(f"functor {fspec.name}: morphism {f} unmapped")
    for x in list(fspec.obj_map) + list(fspec.mor_map):
        if x not in om and x not in mm:
            raise DanglingId(x)
    return FunctorData(source, target, om, mm, name=fspec.name)


def to_catspec(C, name=None):
    """Canonical text for a category with string ids."""
    name = name or C.name
    lines = []
    if name:
        lines.append(f"category {name}")
    for a in C.objects:
        lines.append(f"object {a}")
    idents = {C.identity(a) for a in C.objects}
    for f in C.morphisms:
        if f not in idents:
            lines.append(f"morphism {f} : {C.dom(f)} -> {C.cod(f)}")
    for a in C.objects:
        lines.append(f"identity {a} = {C.identity(a)}")
    entries = []
    for f in C.morphisms:
        if f in idents:
            continue
        for g in C.outgoing(C.cod(f)):
            if g not in idents:
                entries.append((g, f, C.compose(g, f)))
    for g, f, h in sorted(entries, key=sort_key):
        lines.append(f"compose {g} . {f} = {h}")
    return "\n".join(lines) + "\n"


def functor_to_catspec(F, name=None):
    lines = [f"functor {name or F.name or 'F'}"]
    for a in F.source.objects:
        lines.append(f"  obj {a} |-> {F.obj(a)}")
    for f in F.source.morphisms:
        lines.append(f"  mor {f} |-> {F.mor(f)}")
    lines.append("end")
    return "\n".join(lines) + "\n"
