from typing import List

from bifront.core import Point

from .utils import data_lines, rationals

FILETYPE = "points"


def parse(contents: str) -> List[Point]:
    """Parse an explicit point set, one "p/q p/q" pair per line.

    Repeated points are kept; they are distinct image entries.
    """
    return [tuple(rationals(line, lineno, 2)) for lineno, line in data_lines(contents)]
