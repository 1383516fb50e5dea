from hypothesis import given, settings, strategies as st

from catkernel import analysis, core, instances, monad
from catkernel.catspec import load_category, to_catspec
from catkernel.finset import FinSetCat, FinSetStructure, Fn, compose, identity, is_injective, is_surjective
from catkernel.report import dumps

sizes = st.integers(0, 3)


@st.composite
def fns(draw, dom=None, cod=None):
    a = (draw(sizes) if cod != 0 else 0) if dom is None else dom
    b = draw(st.integers(1 if a else 0, 3)) if cod is None else cod
    if a == 0:
        return Fn(0, b, ())
    return Fn(a, b, tuple(draw(st.lists(st.integers(0, b - 1), min_size=a, max_size=a))))


@st.composite
def composable3(draw):
    f = draw(fns())
    g = draw(fns(dom=f.cod, cod=draw(st.integers(1 if f.cod else 0, 3))))
    h = draw(fns(dom=g.cod, cod=draw(st.integers(1 if g.cod else 0, 3))))
    return f, g, h


@given(composable3())
def test_composition_associative(fgh):
    f, g, h = fgh
    assert compose(h, compose(g, f)) == compose(compose(h, g), f)
    assert compose(f, identity(f.dom)) == f == compose(identity(f.cod), f)


@settings(max_examples=60)
@given(fns())
def test_mono_epi_match_set_theory(f):
    C = FinSetCat(3)
    p = analysis.classify_morphism(C, f)
    assert bool(p.mono) == is_injective(f)
    assert bool(p.epi) == is_surjective(f)


@given(st.data())
def test_pairing_projections(data):
    S = FinSetStructure()
    f = data.draw(fns())
    g = data.draw(fns(dom=f.dom))
    p = S.pair(f, g)
    assert compose(S.pi1(f.cod, g.cod), p) == f
    assert compose(S.pi2(f.cod, g.cod), p) == g


@given(st.data())
def test_curry_uncurry_inverse(data):
    S = FinSetStructure()
    c, a = data.draw(st.integers(0, 2)), data.draw(st.integers(0, 2))
    b = data.draw(st.integers(1, 2))
    h = data.draw(fns(dom=c * a, cod=b))
    lam = S.lam(h, c, a)
    assert S.lam_inv(lam, a, b) == h
    assert compose(S.ev(a, b), S.prod(lam, S.identity(a))) == h


@given(st.data())
def test_pullback_mediator(data):
    S = FinSetStructure()
    f1 = data.draw(fns())
    f2 = data.draw(fns(cod=f1.cod))
    n, p1, p2 = S.pullback(f1, f2)
    assert compose(f1, p1) == compose(f2, p2)
    # any cone factors through the chosen apex
    d = data.draw(st.integers(0, 2))
    pts = [(p1.table[i], p2.table[i]) for i in range(n)]
    if pts:
        idx = data.draw(st.lists(st.integers(0, n - 1), min_size=d, max_size=d))
        g1 = Fn(d, f1.dom, tuple(pts[i][0] for i in idx))
        g2 = Fn(d, f2.dom, tuple(pts[i][1] for i in idx))
        m = S.pullback_pair(f1, f2, g1, g2)
        assert compose(p1, m) == g1 and compose(p2, m) == g2


@st.composite
def preorders(draw):
    n = draw(st.integers(1, 4))
    rel = {(i, i) for i in range(n)}
    for i in range(n):
        for j in range(n):
            if i != j and draw(st.booleans()):
                rel.add((i, j))
    changed = True
    while changed:
        changed = False
        for a, b in list(rel):
            for c, d in list(rel):
                if b == c and (a, d) not in rel:
                    rel.add((a, d))
                    changed = True
    return n, rel


def _preorder_category(n, rel):
    objs = [f"o{i}" for i in range(n)]
    mors = {f"r{a}_{b}": (f"o{a}", f"o{b}") for a, b in rel}
    ident = {f"o{i}": f"r{i}_{i}" for i in range(n)}
    comp = {(f"r{b}_{c}", f"r{a}_{b}"): f"r{a}_{c}"
            for a, b in rel for b2, c in rel if b == b2}
    return core.FinCategory(objs, mors, ident, comp)


@settings(max_examples=40)
@given(preorders())
def test_preorder_categories_roundtrip(pre):
    C = _preorder_category(*pre)
    assert analysis.category_profile(C).preorder
    D = load_category(to_catspec(C))
    assert core.is_isomorphic(C, D)
    # in a preorder every morphism is mono and epi
    for f in C.morphisms:
        p = analysis.classify_morphism(C, f)
        assert p.mono and p.epi


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(sorted(instances.MONOIDS)), st.integers(0, 2))
def test_writer_free_algebras(name, a):
    M = instances.writer_monad(instances.finset(2), name)
    assert monad.is_algebra(M, monad.free_algebra(M, a))
    C = M.category
    assert C.compose(M.mu(a), M.eta(M.T_obj(a))) == C.identity(M.T_obj(a))
    assert C.compose(M.mu(a), M.T_mor(M.eta(a))) == C.identity(M.T_obj(a))


@given(st.dictionaries(st.text(max_size=4), st.integers(), max_size=6))
def test_dumps_order_independent(d):
    rev = dict(reversed(list(d.items())))
    assert dumps(d) == dumps(rev)
