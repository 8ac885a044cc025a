from typing import Union

from bifront.exceptions import ParseError
from bifront.models import Arc, CostDigraph, CostGraph, Edge

from .utils import TRAILER_PREFIX, data_lines, integers, rationals, regex_search, take

FILETYPE = "graph"
HEADER_REGEX = r"^(directed|undirected)\s+(\d+)\s+(\d+)(?:\s+(\d+)\s+(\d+))?$"


def parse(contents: str) -> Union[CostDigraph, CostGraph]:
    """Parse a graph file.

    Line 1 is "directed n m s t" or "undirected n m", followed by m lines
    "u v p/q p/q". A trailing "M: ..." line is ignored.
    """
    lines = [
        (lineno, line)
        for lineno, line in data_lines(contents)
        if not line.startswith(TRAILER_PREFIX)
    ]
    if not lines:
        raise ParseError("Empty graph file.")
    _, header = take(lines, 1, "header")[0]
    match = regex_search(HEADER_REGEX, header)
    directed = match.group(1) == "directed"
    n, m = int(match.group(2)), int(match.group(3))
    if directed and match.group(4) is None:
        raise ParseError("A directed graph header needs a source and a sink.")

    links = []
    for lineno, line in take(lines, m, "arcs" if directed else "edges"):
        tokens = line.split()
        if len(tokens) != 4:
            raise ParseError(f"Line {lineno}: expected 'u v p/q p/q', found '{line}'.")
        u, v = integers(" ".join(tokens[:2]), lineno)
        cost = rationals(" ".join(tokens[2:]), lineno)
        links.append((u, v, cost))
    if lines:
        raise ParseError(f"Line {lines[0][0]}: unexpected data after the last edge.")

    if directed:
        return CostDigraph.create(
            node_count=n,
            arcs=[Arc.create(tail=u, head=v, cost=c) for u, v, c in links],
            source=int(match.group(4)),
            sink=int(match.group(5)),
        )
    return CostGraph.create(
        node_count=n, edges=[Edge.create(u=u, v=v, cost=c) for u, v, c in links]
    )
