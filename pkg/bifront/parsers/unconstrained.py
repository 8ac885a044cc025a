from bifront.exceptions import ParseError
from bifront.models import UnconstrainedBi

from .utils import data_lines, rationals, regex_search, take

FILETYPE = "unconstrained"
HEADER_REGEX = r"^unconstrained\s+(\d+)$"


def parse(contents: str) -> UnconstrainedBi:
    """Parse "unconstrained n" followed by one row c or two rows c1, c2.

    A single row is the subset-sum form with objectives (cᵀx, -cᵀx).
    """
    lines = list(data_lines(contents))
    if not lines:
        raise ParseError("Empty unconstrained file.")
    _, header = take(lines, 1, "header")[0]
    n = int(regex_search(HEADER_REGEX, header).group(1))
    rows = [rationals(line, lineno, n) for lineno, line in lines]
    if len(rows) == 1:
        return UnconstrainedBi.from_weights(rows[0])
    if len(rows) == 2:
        return UnconstrainedBi.create(c1=rows[0], c2=rows[1])
    raise ParseError(f"Expected one or two cost rows, found {len(rows)}.")
