from catkernel import analysis, core
from catkernel.finset import FinSetCat, is_injective, is_surjective


def test_walking_arrow_bimorphism_not_iso(arrow):
    p = analysis.classify_morphism(arrow, "f")
    assert p.mono and p.epi and p.bimorphism
    assert not p.iso and not p.section and not p.retraction


def test_walking_iso(zoo):
    C = zoo["walking_iso"]
    nonid = [f for f in C.morphisms if not C.is_identity(f)]
    for f in nonid:
        assert analysis.is_iso(C, f)
        g = analysis.inverse(C, f)
        assert C.compose(g, f) == C.identity(C.dom(f))


def test_c2_automorphism(zoo):
    C = zoo["c2"]
    g = [f for f in C.morphisms if not C.is_identity(f)][0]
    p = analysis.classify_morphism(C, g)
    assert p.iso and p.endo and p.auto


def test_parallel_pair_not_mono_free(zoo):
    C = zoo["parallel_pair"]
    for f in C.morphisms:
        p = analysis.classify_morphism(C, f)
        assert p.mono and p.epi


def test_terminal_initial_arrow(arrow):
    assert analysis.terminal_objects(arrow) == ["b"]
    assert analysis.initial_objects(arrow) == ["a"]


def test_finset2_mono_injective_epi_surjective():
    C = FinSetCat(2)
    for f in C.morphisms:
        p = analysis.classify_morphism(C, f)
        assert bool(p.mono) == is_injective(f)
        assert bool(p.epi) == is_surjective(f)


def test_category_profiles(zoo):
    assert analysis.category_profile(zoo["discrete_2"]).discrete
    assert analysis.category_profile(zoo["walking_arrow"]).preorder
    assert not analysis.category_profile(zoo["parallel_pair"]).preorder
    assert analysis.category_profile(zoo["one"]).pointed


def test_profile_counterexample_json(zoo):
    prof = analysis.category_profile(zoo["parallel_pair"])
    assert prof.to_json()["preorder"]["flag"] is False


def test_identity_functor_profile(arrow):
    fp = analysis.functor_profile(core.identity_functor(arrow))
    assert fp.faithful and fp.full


def test_right_adjoint_of_identity(arrow):
    G = analysis.right_adjoint(core.identity_functor(arrow))
    assert G is not None


def test_terminal_functor_right_adjoint(arrow):
    # C -> 1 has a right adjoint iff C has a terminal object
    one = core.FinCategory(["*"], {"i": ("*", "*")}, {"*": "i"}, {("i", "i"): "i"})
    F = core.constant_functor(arrow, one, "*")
    assert analysis.right_adjoint(F) is not None
    assert analysis.left_adjoint(F) is not None
