import re
from fractions import Fraction
from typing import Iterator, List, Optional, Tuple

from bifront.exceptions import MatchNotFoundError, ParseError, UsageError
from bifront.utils import to_fraction

# Trailer written after a gadget graph; not part of the instance
TRAILER_PREFIX = "M:"


def regex_search(regex: str, string: str) -> re.Match:
    """Function for matching a regex to a string.

    Will match and return the first match found or raise MatchNotFoundError
    if no match is found.

    Args:
        regex: A regular expression string.
        string: The string to match on.

    Returns:
        The re.Match object, if a match is found.

    Raises:
        MatchNotFoundError if no match found.
    """
    match = re.search(regex, string)
    if not match:
        raise MatchNotFoundError(regex, string)
    return match


def data_lines(contents: str) -> Iterator[Tuple[int, str]]:
    """Yield (line number, stripped line) for every line carrying data.

    Text after '#' and blank lines are skipped.
    """
    for lineno, raw in enumerate(contents.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def rationals(line: str, lineno: int, expected: Optional[int] = None) -> List[Fraction]:
    """Parse a whitespace separated row of integers and "p/q" fractions."""
    try:
        values = [to_fraction(token) for token in line.split()]
    except UsageError as e:
        raise ParseError(f"Line {lineno}: {e}") from e
    if expected is not None and len(values) != expected:
        raise ParseError(
            f"Line {lineno}: expected {expected} values, found {len(values)}."
        )
    return values


def integers(line: str, lineno: int, expected: Optional[int] = None) -> List[int]:
    values = rationals(line, lineno, expected)
    if any(v.denominator != 1 for v in values):
        raise ParseError(f"Line {lineno}: expected integers, found '{line}'.")
    return [int(v) for v in values]


def take(lines: List[Tuple[int, str]], count: int, what: str) -> List[Tuple[int, str]]:
    """Pop the next count data lines or fail naming what was missing."""
    if len(lines) < count:
        raise ParseError(f"Expected {count} more lines of {what}, found {len(lines)}.")
    taken = lines[:count]
    del lines[:count]
    return taken


def detect_filetype(contents: str) -> str:
    """Guess the file format from the first data line."""
    first = next(data_lines(contents), None)
    if first is None:
        return "points"
    _, line = first
    keyword = line.split()[0].lower()
    if keyword in ("directed", "undirected"):
        return "graph"
    if keyword in ("knapsack", "unconstrained"):
        return keyword
    tokens = line.split()
    if len(tokens) == 3 and all(t.isdigit() for t in tokens):
        return "lp"
    if len(tokens) == 2:
        return "points"
    raise ParseError(f"Cannot tell the file format from its first line '{line}'.")
