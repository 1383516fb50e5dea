import pytest

from catkernel import analysis, instances, monad, structures
from catkernel.errors import CategoryError
from catkernel.finset import Fn


def _algs(M, n):
    return [a for v in monad.algebra_census(M, range(n + 1)).values() for a in v]


def test_maybe_census_pointed_sets(maybe):
    census = monad.algebra_census(maybe, range(4))
    assert {n: len(v) for n, v in census.items()} == {0: 0, 1: 1, 2: 2, 3: 3}


def test_census_matches_brute_force(maybe):
    # every map T n -> n checked directly against the algebra laws
    M = maybe
    for n in range(4):
        brute = [f for f in M.category.hom(M.T_obj(n), n)
                 if M.category.compose(f, M.eta(n)) == M.category.identity(n)
                 and M.category.compose(f, M.mu(n)) == M.category.compose(f, M.T_mor(f))]
        assert sorted(a.action for a in monad.algebras_on(M, n)) == sorted(brute)


def test_writer_census(writer_c2):
    # C2-sets: involutions on n points
    sizes = {n: len(v) for n, v in monad.algebra_census(writer_c2, range(4)).items()}
    assert sizes == {0: 1, 1: 1, 2: 2, 3: 4}


def test_kleisli_category_valid(maybe):
    K = monad.kleisli_category(maybe, objects=range(3))
    assert not K.violations()


def test_free_algebra(maybe):
    for a in range(3):
        assert monad.is_algebra(maybe, monad.free_algebra(maybe, a))


def test_em_category_and_terminal(maybe):
    algs = _algs(maybe, 3)
    E = monad.em_category(maybe, range(4))
    assert len(E.objects) == 6
    assert not E.violations()
    term, v = monad.em_terminal(maybe, algs)
    assert v
    assert [term] == [o for o in structures.find_terminals(E)]


def test_em_product_matches_search(maybe):
    algs = _algs(maybe, 2)
    for a in algs:
        for b in algs:
            (P, p1, p2), v = monad.em_product(maybe, a, b, algs)
            assert v
            E = monad.em_category(maybe, range(3), extra=[P])
            w = structures.find_product(E, a, b)
            assert w is not None
            assert len(E.hom(w.apex, P)) >= 1 and len(E.hom(P, w.apex)) >= 1
            assert monad.diagonal_is_homomorphism(maybe, a)


def test_flags(maybe, writer_c2):
    assert monad.monad_flags(maybe)["commutative"]
    assert monad.monad_flags(writer_c2)["commutative"]
    lz = instances.writer_monad(instances.finset(2), "lzero")
    assert not monad.monad_flags(lz)["commutative"]


def test_invalid_monoid():
    with pytest.raises(instances.InvalidMonoid):
        instances.Monoid("bad", ((0, 0), (0, 0)), 1)


def test_m5_reported_as_caveat(maybe, writer_c2):
    for M in (maybe, writer_c2):
        rep = monad.validate_monad(M)
        assert rep.ok
        m5 = rep.result("m5")
        assert m5.status in ("caveat", "pass") and m5.note
        for lab in ("m1", "m2", "m3", "m4", "m6"):
            assert rep.result(lab).status == "pass"


def test_internal_exponent(maybe):
    for a in _algs(maybe, 2):
        for B in range(3):
            alg, rep = monad.internal_exponent_report(maybe, B, a)
            assert all(rep.values()), (B, a)


def test_external_exponent_bijection(maybe):
    algs = _algs(maybe, 2)
    for a in algs:
        for b in algs:
            X = monad.external_exponent(maybe, a, b)
            for C in range(4):
                r = monad.bijection_report(maybe, X, C)
                assert r["ok"], r


def test_conjecture_probe_shape(writer_c2):
    algs = _algs(writer_c2, 2)
    row = monad.conjecture_probe(writer_c2, 1, algs[0], algs[-1])
    assert set(row) == {"C", "A", "B", "lhs", "rhs", "equal"}
    assert row["equal"] == (row["lhs"] == row["rhs"])


def test_homomorphisms_compose(maybe):
    algs = _algs(maybe, 2)
    C = maybe.category
    for a in algs:
        for b in algs:
            for c in algs:
                for h in (m.arrow for m in monad.homomorphisms(maybe, a, b)):
                    for k in (m.arrow for m in monad.homomorphisms(maybe, b, c)):
                        assert monad.is_homomorphism(maybe, a, c, C.compose(k, h))
