from typing import Optional, Sequence, Union

from bifront.core import Point
from bifront.exceptions import EncoderError
from bifront.models import CostDigraph, CostGraph
from bifront.parsers.utils import TRAILER_PREFIX
from bifront.utils import format_point, point_label


def _cost_line(u: int, v: int, cost: Point) -> str:
    return f"{u} {v} {' '.join(format_point(cost))}"


def encode(
    g: Union[CostDigraph, CostGraph], m_points: Optional[Sequence[Point]] = None
) -> str:
    """Write a graph file, optionally followed by the "M: (a,b) (c,d)" trailer.

    Args:
        g: The graph to write.
        m_points: Points announced on the trailer line.

    Returns:
        The file text, ending with a newline.
    """
    lines = []
    if isinstance(g, CostDigraph):
        lines.append(f"directed {g.node_count} {len(g.arcs)} {g.source} {g.sink}")
        lines.extend(_cost_line(a.tail, a.head, a.cost) for a in g.arcs)
    elif isinstance(g, CostGraph):
        lines.append(f"undirected {g.node_count} {len(g.edges)}")
        lines.extend(_cost_line(e.u, e.v, e.cost) for e in g.edges)
    else:
        raise EncoderError(f"Cannot write a {type(g).__name__} as a graph file.")
    if m_points:
        lines.append(f"{TRAILER_PREFIX} " + " ".join(point_label(p) for p in m_points))
    return "\n".join(lines) + "\n"
