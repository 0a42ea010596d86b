"""Line diagrams: columns of vertices joined by branchless edges.

A diagram for a composition d has t top-adjusted columns of d_1, ..., d_t
vertices, numbered 1..n column-major (column i holds o_{i-1}+1 .. o_i, top to
bottom).  Edges join vertices of distinct columns, left column first.
Branchless means every vertex carries at most one edge to its left and at most
one to its right, so connected components are paths ("chains").

The complete diagram joins, at every height h, consecutive columns of size
>= h; its image under the edge-to-unit-matrix map is an element of the dense
orbit, and counting chain segments yields the maximal window ranks.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .compositions import Composition, as_composition
from .matrices import ExactMatrix

Edge = tuple[int, int]


@dataclass(frozen=True, eq=True)
class LineDiagram:
    columns: Composition
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "columns", as_composition(self.columns))
        object.__setattr__(self, "edges", frozenset(tuple(e) for e in self.edges))
        n = self.columns.n
        left_deg: dict[int, int] = {}
        right_deg: dict[int, int] = {}
        for u, v in self.edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u},{v}) out of vertex range 1..{n}")
            if self.vertex_column(u) >= self.vertex_column(v):
                raise ValueError(
                    f"edge ({u},{v}) must go from a strictly smaller column"
                )
            right_deg[u] = right_deg.get(u, 0) + 1
            left_deg[v] = left_deg.get(v, 0) + 1
            if right_deg[u] > 1 or left_deg[v] > 1:
                raise ValueError(f"branching at edge ({u},{v}); diagrams must be branchless")

    @property
    def n(self) -> int:
        return self.columns.n

    def vertex_column(self, v: int) -> int:
        """1-based column of vertex v."""
        o = self.columns.offsets
        for i in range(1, self.columns.t + 1):
            if v <= o[i]:
                return i
        raise ValueError(f"vertex {v} out of range 1..{self.n}")

    def vertex_height(self, v: int) -> int:
        """1-based height of vertex v inside its column (1 = top)."""
        return v - self.columns.offsets[self.vertex_column(v) - 1]

    def chains(self) -> list[tuple[int, ...]]:
        """Connected components as vertex paths, ordered by their first vertex."""
        right = {u: v for u, v in self.edges}
        has_left = {v for _, v in self.edges}
        out = []
        for start in range(1, self.n + 1):
            if start in has_left:
                continue
            path = [start]
            while path[-1] in right:
                path.append(right[path[-1]])
            out.append(tuple(path))
        return out

    def to_matrix(self) -> ExactMatrix:
        """Sum of unit matrices E_uv over the edges (u, v); entries 0-based inside."""
        return ExactMatrix.from_triples(
            self.n, [(u - 1, v - 1, 1) for u, v in self.edges],
            field="Q", blocks=self.columns,
        )


def vertex_id(d, col: int, height: int) -> int:
    """Vertex number of (column, height), both 1-based."""
    d = as_composition(d)
    if not (1 <= col <= d.t and 1 <= height <= d.parts[col - 1]):
        raise ValueError(f"no vertex at column {col}, height {height}")
    return d.offsets[col - 1] + height


def complete_diagram(d) -> LineDiagram:
    """Join all same-height neighbors: one chain per height h, spanning the
    columns of size >= h in order."""
    d = as_composition(d)
    edges = []
    for h in range(1, max(d.parts) + 1):
        cols = [i for i in range(1, d.t + 1) if d.parts[i - 1] >= h]
        for a, b in zip(cols, cols[1:]):
            edges.append((vertex_id(d, a, h), vertex_id(d, b, h)))
    return LineDiagram(d, frozenset(edges))


def subdiagram(diagram: LineDiagram, i: int, j: int) -> LineDiagram:
    """Columns i..j re-indexed, keeping exactly the edges inside the window."""
    d = diagram.columns
    d.check_window(i, j)
    sub = d.window(i, j)
    lo = d.offsets[i - 1]
    hi = d.offsets[j]
    edges = frozenset(
        (u - lo, v - lo) for u, v in diagram.edges if lo < u <= hi and lo < v <= hi
    )
    return LineDiagram(sub, edges)


def chain_lengths(diagram: LineDiagram) -> tuple[int, ...]:
    """Edge counts of the chains, sorted decreasingly.  Sum of (length+1) is n."""
    return tuple(sorted((len(c) - 1 for c in diagram.chains()), reverse=True))


def diagram_partition(diagram: LineDiagram) -> tuple[int, ...]:
    """Nilpotency class of the diagram's matrix: chain lengths plus one, sorted."""
    return tuple(sorted((len(c) for c in diagram.chains()), reverse=True))


def richardson_element(d) -> ExactMatrix:
    """0/1 matrix of the complete diagram; its Jordan type is richardson_partition(d)."""
    return complete_diagram(d).to_matrix()


def tableau_diagram(tab, d) -> LineDiagram:
    """Realize a tableau for d as a line diagram: chain r visits exactly the
    columns listed in row r, so every prefix subdiagram has the nilpotency
    class of the corresponding sub-tableau.

    The complete diagram is the realization of the maximal tableau.
    """
    from .tableaux import tableau_to_chain

    d = as_composition(d)
    ends: dict[int, int] = {}
    edges = []
    prev: tuple[int, ...] = ()
    for m, shape in enumerate(tableau_to_chain(tab), start=1):
        grown = sorted(
            r for r in range(len(shape))
            if (prev[r] if r < len(prev) else 0) + 1 == shape[r]
        )
        for h, r in enumerate(grown, start=1):
            v = vertex_id(d, m, h)
            if r in ends:
                edges.append((ends[r], v))
            ends[r] = v
        prev = shape
    return LineDiagram(d, frozenset(edges))


def _window_chain_lengths(d, i: int, j: int) -> list[int]:
    # one chain per height h: all window columns of size >= h, joined in order
    d = as_composition(d)
    w = d.parts[i - 1 : j]
    return [sum(1 for x in w if x >= h) - 1 for h in range(1, max(w) + 1)]


def max_window_rank(d, i: int, j: int, k: int) -> int:
    """Rank of the k-th power of the window (i, j) of a dense-orbit element.

    A chain of length c in the complete window diagram contributes
    max(c - k + 1, 0) independent k-step segments, so the total is
    sum_h max(len_h - k + 1, 0); equivalently the sum of the j-i-k+1 smallest
    window parts.  Positive exactly when k <= j - i.
    """
    d = as_composition(d)
    d.check_pair(i, j)
    if k < 1:
        raise ValueError(f"power must be >= 1, got {k}")
    return sum(max(c - k + 1, 0) for c in _window_chain_lengths(d, i, j))


def long_chain_count(d, i: int, j: int, k: int) -> int:
    """Number of chains with at least k edges in the complete window diagram.

    Exposed for inspection alongside max_window_rank: the two counts agree for
    k at the window's threshold exponent but differ in general (a chain of
    length c carries c-k+1 independent k-step segments, not one).
    """
    d = as_composition(d)
    d.check_pair(i, j)
    if k < 1:
        raise ValueError(f"power must be >= 1, got {k}")
    return sum(1 for c in _window_chain_lengths(d, i, j) if c >= k)


def render_ascii(diagram: LineDiagram) -> str:
    """Deterministic text rendering: columns as 'o', same-height edges drawn
    as horizontal lines (spanning columns with no vertex at that height);
    edges that cannot be drawn horizontally are listed below the grid."""
    d = diagram.columns
    grid = [
        ["o" if d.parts[c] >= h + 1 else " " for c in range(d.t)]
        for h in range(max(d.parts))
    ]
    gaps = [[False] * (d.t - 1) for _ in range(max(d.parts))]
    other = []
    for u, v in sorted(diagram.edges):
        hu, hv = diagram.vertex_height(u), diagram.vertex_height(v)
        cu, cv = diagram.vertex_column(u), diagram.vertex_column(v)
        crossed = range(cu + 1, cv)
        if hu == hv and all(d.parts[c - 1] < hu for c in crossed):
            for c in crossed:
                grid[hu - 1][c - 1] = "-"
            for c in range(cu, cv):
                gaps[hu - 1][c - 1] = True
        else:
            other.append((u, v))
    lines = []
    for h in range(max(d.parts)):
        cells = []
        for c in range(d.t):
            cells.append(grid[h][c])
            if c < d.t - 1:
                cells.append("---" if gaps[h][c] else "   ")
        lines.append("".join(cells).rstrip())
    for u, v in other:
        lines.append(
            f"edge {u}->{v}  (col {diagram.vertex_column(u)} h {diagram.vertex_height(u)}"
            f" -> col {diagram.vertex_column(v)} h {diagram.vertex_height(v)})"
        )
    return "\n".join(lines)
