import pytest

from catkernel.catspec import build_functor, load_category, parse_catspec
from catkernel.errors import BrokenUnit, DanglingId, NonAssociative, ParseError

from conftest import DATA, load


def test_parse_objects_and_morphisms():
    spec = parse_catspec("object a b\nmorphism f : a -> b\n")
    assert spec.objects == ["a", "b"]
    assert spec.morphisms == {"f": ("a", "b")}


def test_comments_and_blank_lines():
    C = load_category("# header\n\nobject a  # trailing\n")
    assert list(C.objects) == ["a"]


@pytest.mark.parametrize("text", [
    "morphism f a -> b",
    "object a\nobject a",
    "frobnicate",
    "object a\nidentity a id",
])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_catspec(text)


def test_parse_error_carries_line():
    with pytest.raises(ParseError) as exc:
        parse_catspec("object a\n\nbogus line here")
    assert exc.value.line == 3


def test_dangling_composite():
    with pytest.raises(DanglingId):
        load_category("object a\ncompose g . f = h")


def test_broken_unit_file():
    with pytest.raises(BrokenUnit):
        load("broken_unit.catspec")


def test_nonassociative_file():
    with pytest.raises(NonAssociative):
        load("nonassoc.catspec")


def test_functor_block():
    spec = parse_catspec((DATA / "arrow_over_point.catspec").read_text())
    E = load_category(spec)
    B = load("point.catspec")
    U = build_functor(spec.functors["U"], E, B)
    assert U.is_functor()
    assert U.mor("f") == "id_o"


def test_functor_unmapped_object():
    spec = parse_catspec("object a b\nmorphism f : a -> b\nfunctor U\n obj a |-> o\nend\n")
    with pytest.raises(ParseError):
        build_functor(spec.functors["U"], load_category(spec), load("point.catspec"))
