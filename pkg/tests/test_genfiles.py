import pytest

from arcmaps.genfiles import GenFileError, format_generator_file, parse_generator_file
from arcmaps.perms import Permutation


def test_parse_basic():
    gf = parse_generator_file("degree 4\n(0 1)\n(0 1 2 3)\n")
    assert gf.degree == 4
    assert len(gf.generators) == 2
    assert gf.generators[0] == Permutation.parse("(0 1)", 4)


def test_parse_with_comments_and_blanks():
    text = """
# symmetric group
degree 3

(0 1)   # a transposition
(0 1 2)
"""
    gf = parse_generator_file(text)
    assert gf.degree == 3 and len(gf.generators) == 2


def test_parse_identity():
    gf = parse_generator_file("degree 2\n()\n")
    assert gf.generators[0].is_identity()


def test_errors_carry_line_numbers():
    with pytest.raises(GenFileError) as err:
        parse_generator_file("degree 4\n(0 1\n")
    assert err.value.line_no == 2
    with pytest.raises(GenFileError) as err:
        parse_generator_file("order 4\n(0 1)\n")
    assert err.value.line_no == 1
    with pytest.raises(GenFileError) as err:
        parse_generator_file("degree 3\n(0 4)\n")
    assert err.value.line_no == 2
    with pytest.raises(GenFileError):
        parse_generator_file("degree 3\n")
    with pytest.raises(GenFileError):
        parse_generator_file("")


def test_round_trip():
    gens = [Permutation.parse("(0 1 2)(3 4)", 5), Permutation.parse("()", 5)]
    text = format_generator_file(5, gens)
    gf = parse_generator_file(text)
    assert list(gf.generators) == gens
