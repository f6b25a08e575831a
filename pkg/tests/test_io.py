import pytest
from hypothesis import given

from morsegraph.io import FacetsParseError, format_facets, parse_facets, read_facets, write_facets

from strategies import complexes


def test_comments_and_order():
    K = parse_facets("# a header\n\nb a\na c\n")
    assert K.vertices == ("b", "a", "c")
    assert K.simplices(1) == [("b", "a"), ("a", "c")]


def test_repeated_vertex():
    with pytest.raises(FacetsParseError, match="line 1"):
        parse_facets("a a\n")


def test_nothing_to_read():
    with pytest.raises(FacetsParseError):
        parse_facets("# only a comment\n")


def test_not_utf8(tmp_path):
    p = tmp_path / "bad.facets"
    p.write_bytes(b"\xff\xfe a\n")
    with pytest.raises(FacetsParseError):
        read_facets(p)


def test_header_and_newlines(tmp_path):
    K = parse_facets("x y\ny z\n")
    p = tmp_path / "k.facets"
    write_facets(K, p, ["demo"])
    assert p.read_bytes() == b"# demo\nx y\ny z\n"


@given(complexes())
def test_round_trip(K):
    back = parse_facets(format_facets(K, ["h"]))
    assert back.simplex_set() == K.simplex_set()
    # one pass normalises the vertex order; after that the text is a fixed point
    text = format_facets(back)
    assert format_facets(parse_facets(text)) == text
