import pytest

from catkernel import instances, lawcheck, monad
from catkernel.finset import Fn
from catkernel.lawcheck import A, B, Id, LawContext, Pi1, Pi2, Pair, check_law, infer
from catkernel.monad import StrongMonad


@pytest.fixture(scope="module")
def fs2_ctx():
    inst = instances.finset(2)
    return LawContext(inst.category, inst.structure, name="finset(2)")


def test_infer_types():
    t = Pair(Pi1(A, B), Pi2(A, B))
    dom, cod = infer(t, {})
    assert dom == cod == A * B


def test_ill_typed_law_reported(fs2_ctx):
    law = lawcheck.m5_untyped()
    res = check_law(law, fs2_ctx)
    assert res.status == "fail" and "ill_typed" in res.counterexample


def test_product_suite_small(fs2_ctx):
    rep = lawcheck.run_suite(fs2_ctx, "product")
    assert rep.ok
    assert {r.label for r in rep.results if r.status == "absent"} == set(lawcheck.PRODUCT_ABSENT)


def test_labels_filter(fs2_ctx):
    rep = lawcheck.run_suite(fs2_ctx, "assoc", labels=["as3"])
    assert [r.label for r in rep.results] == ["as3"]


def test_false_law_pinpoints_binding(fs2_ctx):
    law = lawcheck.Law("bogus", "custom", ("A", "B"), (), eqs=((Pi1(A, B), Pi1(A, B)),))
    assert check_law(law, fs2_ctx).status == "pass"
    bad = lawcheck.Law("swap-id", "custom", ("A",), (),
                       eqs=((lawcheck.Swap(A, A), Id(A * A)),))
    res = check_law(bad, fs2_ctx)
    assert res.status == "fail"
    b = res.counterexample["binding"]
    assert b["A"] == 2
    ((l, r),) = lawcheck.replay_binding(bad, fs2_ctx, b)
    assert l != r


def _tampered_maybe():
    good = instances.maybe_monad(instances.finset(2))

    def mu(a):
        t = list(good.mu(a).table)
        if a >= 2:
            t[a] = 0    # send the outer "nothing" to the first element
        return Fn(a + 2, a + 1, tuple(t))
    return StrongMonad(good.category, good.structure, good.T_obj, good.T_mor, good.eta,
                       mu, good.lst, name="maybe-tampered")


def test_tampered_mu_fails_m1():
    M = _tampered_maybe()
    rep = monad.validate_monad(M)
    assert not rep.ok
    failed = {r.label for r in rep.failures()}
    assert "m1" in failed or "m3" in failed
    bad = rep.failures()[0]
    law = {l.label: l for l in lawcheck.monad_suite()}[bad.label]
    ctx = LawContext(M.category, M.structure, M)
    assert any(l != r for l, r in lawcheck.replay_binding(law, ctx, bad.counterexample["binding"]))


def _swapped_strength():
    good = instances.maybe_monad(instances.finset(2))
    S = good.structure

    def lst(a, b):
        f = good.lst(a, b)
        if a >= 2 and b >= 1:
            # exchange the images of two defined pairs
            t = list(f.table)
            i, j = 0, b + 1
            t[i], t[j] = t[j], t[i]
            return Fn(f.dom, f.cod, tuple(t))
        return f
    return StrongMonad(good.category, S, good.T_obj, good.T_mor, good.eta, good.mu, lst,
                       name="maybe-bad-strength")


def test_perturbed_strength_fails():
    M = _swapped_strength()
    assert not monad.validate_strength(M).ok
    ctx = LawContext(M.category, M.structure, M, objects=(0, 1, 2))
    rep = lawcheck.replay_derivation(ctx, "strength-pairing")
    assert rep.status == "fail"
    assert "step" in rep.counterexample


def test_derivations_pass_maybe(maybe):
    algs = [a for v in monad.algebra_census(maybe, range(3)).values() for a in v]
    ctx = LawContext(maybe.category, maybe.structure, maybe, objects=(0, 1, 2),
                     algebras=lambda: algs)
    for name in lawcheck.derivations():
        assert lawcheck.replay_derivation(ctx, name).status == "pass", name


def test_hom_limit_skips(fs2_ctx):
    ctx = LawContext(fs2_ctx.category, fs2_ctx.structure, hom_limit=1)
    res = lawcheck.run_suite(ctx, "product", labels=["p2"]).result("p2")
    assert res.skipped > 0
    full = lawcheck.run_suite(fs2_ctx, "product", labels=["p2"]).result("p2")
    assert res.checked < full.checked and not full.skipped
