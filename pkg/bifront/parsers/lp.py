from bifront.exceptions import ParseError
from bifront.models import LPInstance

from .utils import data_lines, rationals, regex_search, take

FILETYPE = "lp"
HEADER_REGEX = r"^(\d+)\s+(\d+)\s+(\d+)$"


def parse(contents: str) -> LPInstance:
    """Parse an LP file.

    Line 1 is "d n m". The next d lines are the rows of C and the m lines after them
    are the rows of A, each followed by its right hand side bᵢ.
    """
    lines = list(data_lines(contents))
    if not lines:
        raise ParseError("Empty LP file.")
    _, header = take(lines, 1, "header")[0]
    d, n, m = (int(g) for g in regex_search(HEADER_REGEX, header).groups())
    C = [rationals(line, lineno, n) for lineno, line in take(lines, d, "objectives")]
    rows = [rationals(line, lineno, n + 1) for lineno, line in take(lines, m, "rows")]
    if lines:
        raise ParseError(f"Line {lines[0][0]}: unexpected data after the last row.")
    return LPInstance.create(
        A=[row[:n] for row in rows], b=[row[n] for row in rows], C=C
    )
