import os
from fractions import Fraction
from pathlib import Path

import pytest

from bifront.exceptions import ParseError, UsageError
from bifront.utils import (
    format_point,
    format_rational,
    get_file_contents,
    point_label,
    to_fraction,
)


def test_get_file_contents_with_bytes():
    """Test get_file_contents with bytes"""
    file_content = get_file_contents(b"0 4\n1 2\n")
    assert file_content == "0 4\n1 2\n"


def test_get_file_contents_rejects_invalid_utf8(tmp_path):
    """Test get_file_contents with bytes and a file that are not UTF-8"""
    with pytest.raises(ParseError):
        get_file_contents(b"\xff\xfe")
    path = tmp_path / "latin1.txt"
    path.write_bytes("1 2 # caf\u00e9".encode("latin-1"))
    with pytest.raises(ParseError, match="UTF-8"):
        get_file_contents(path)


def test_file_contents_with_path_object(test_data_dir):
    """Test get_file_contents with a Path object"""
    path = Path(test_data_dir / "five_points.txt")
    file_content = get_file_contents(path)
    assert file_content == path.read_text()


def test_file_contents_with_str_for_path(test_data_dir):
    """Test get_file_contents with a str for the path"""
    path = str(test_data_dir / "five_points.txt")
    file_content = get_file_contents(path)
    assert file_content == Path(path).read_text()


def test_file_contents_with_short_str_not_filepath():
    """Test get_file_contents with a short str that is not a filepath"""
    file_content = get_file_contents("1 2")
    assert file_content == "1 2"


def test_file_contents_with_long_str_not_filepath():
    """Test get_file_contents with a long str that is not a filepath"""
    test_data = "x" * (os.pathconf(".", "PC_PATH_MAX") + 1)
    file_content = get_file_contents(test_data)
    assert file_content == test_data


@pytest.mark.parametrize(
    "value,expected",
    [
        (3, Fraction(3)),
        ("3", Fraction(3)),
        ("-7/3", Fraction(-7, 3)),
        ("4/6", Fraction(2, 3)),
        (" 1/2 ", Fraction(1, 2)),
        (Fraction(10, 4), Fraction(5, 2)),
    ],
)
def test_to_fraction_accepts_exact_values(value, expected):
    q = to_fraction(value)
    assert q == expected
    assert isinstance(q, Fraction)


@pytest.mark.parametrize("value", [0.5, "0.5", "1e3", "1/0", "abc", True, None])
def test_to_fraction_rejects_inexact_or_invalid_values(value):
    with pytest.raises(UsageError):
        to_fraction(value)


def test_format_rational_is_canonical():
    assert format_rational(Fraction(0)) == "0"
    assert format_rational(Fraction(6, 3)) == "2"
    assert format_rational(Fraction(-2, 4)) == "-1/2"
    assert format_rational(Fraction(7, 3)) == "7/3"


def test_format_point_and_label():
    point = (Fraction(3), Fraction(1, 2))
    assert format_point(point) == ["3", "1/2"]
    assert point_label(point) == "(3,1/2)"
