from bifront.exceptions import ParseError
from bifront.models import KPInstance

from .utils import data_lines, integers, regex_search, take

FILETYPE = "knapsack"
HEADER_REGEX = r"^knapsack\s+(\d+)\s+(\d+)\s+(\d+)$"


def parse(contents: str) -> KPInstance:
    """Parse "knapsack n k1 k2" followed by the rows c1 and c2."""
    lines = list(data_lines(contents))
    if not lines:
        raise ParseError("Empty knapsack file.")
    _, header = take(lines, 1, "header")[0]
    n, k1, k2 = (int(g) for g in regex_search(HEADER_REGEX, header).groups())
    c1, c2 = (integers(line, lineno, n) for lineno, line in take(lines, 2, "costs"))
    return KPInstance.create(c1=tuple(c1), c2=tuple(c2), k1=k1, k2=k2)
