from fractions import Fraction
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from .exceptions import ParseError, UsageError

RationalLike = Union[int, str, Fraction]


def _decode(raw: bytes, source: str) -> str:
    try:
        return raw.decode("utf-8")
    except UnicodeDecodeError as e:
        raise ParseError(f"{source} is not valid UTF-8 text: {e}") from e


def get_file_contents(data_or_path: Union[str, bytes, Path]) -> str:
    """Return the file content from a path or the string itself.

    Args:
        data_or_path: File contents (str or bytes) or path to the file to parse.

    Returns:
        The text of the file, or the input itself if it is not a path.

    Raises:
        ParseError: If the contents are not valid UTF-8.
    """
    file_content: str
    filepath: Optional[Path]

    if isinstance(data_or_path, bytes):
        return _decode(data_or_path, "input")

    filepath = Path(data_or_path)
    try:
        if filepath.is_file():
            file_content = _decode(filepath.read_bytes(), str(filepath))
        else:
            file_content = str(data_or_path)
    except OSError:
        # String too long to be filepath
        file_content = str(data_or_path)

    return file_content


def to_fraction(value: RationalLike) -> Fraction:
    """Convert an int, Fraction or "p/q" string to a canonical Fraction.

    Floats are rejected: every algorithmic path is exact.

    Raises:
        UsageError: If the value is a float or not a valid rational literal.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise UsageError(f"Expected an exact rational, got {value!r}.")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if "." in text or "e" in text.lower():
            raise UsageError(f"Expected 'p/q' or an integer, got '{value}'.")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as e:
            raise UsageError(f"Invalid rational literal '{value}'.") from e
    raise UsageError(f"Cannot interpret {value!r} as a rational.")


def to_fractions(values: Iterable[RationalLike]) -> Tuple[Fraction, ...]:
    return tuple(to_fraction(v) for v in values)


def format_rational(q: Fraction) -> str:
    """Canonical text form of a rational: "p/q", or "p" when the denominator is 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_point(point: Sequence[Fraction]) -> List[str]:
    """Serialize a point as a list of canonical rational strings."""
    return [format_rational(c) for c in point]


def point_label(point: Sequence[Fraction]) -> str:
    """Human readable form of a point, e.g. (3,0)."""
    return "(" + ",".join(format_point(point)) + ")"
