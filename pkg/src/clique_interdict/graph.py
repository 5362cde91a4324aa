"""Simple undirected graphs on dense 0-based ids with bitset adjacency.

Adjacency is stored as one Python ``int`` per vertex; bit ``j`` of ``adj[i]``
is set iff ``{i, j}`` is an edge.  Neighbourhood intersection is a single
``&`` and clique tests are mask comparisons, which is what the clique and
reduction code lean on.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

Edge = tuple[int, int]


class GraphFormatError(ValueError):
    """Raised for malformed DIMACS / edge-list input."""


class ContractError(ValueError):
    """Raised when an operation is called outside its precondition."""


def edge(u: int, v: int) -> Edge:
    """Canonical (min, max) form of an undirected edge."""
    if u == v:
        raise ContractError(f"self-loop {u}-{v} is not an edge")
    return (u, v) if u < v else (v, u)


def iter_bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def bits_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


class Graph:
    """Immutable simple undirected graph.

    ``labels[i]`` is the label of internal vertex ``i`` in the source the
    graph came from (file label, or id in a parent graph for subgraphs).
    """

    __slots__ = ("n", "adj", "m", "labels", "_edges")

    def __init__(self, n: int, adj: Sequence[int], labels: Sequence[int] | None = None):
        self.n = n
        self.adj = tuple(adj)
        if len(self.adj) != n:
            raise ContractError("adjacency length does not match n")
        self.m = sum(a.bit_count() for a in self.adj) // 2
        self.labels = tuple(labels) if labels is not None else tuple(range(n))
        self._edges: tuple[Edge, ...] | None = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels=None) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ContractError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ContractError(f"self-loop on {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj, labels)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, [full & ~(1 << v) for v in range(n)])

    @classmethod
    def empty(cls, n: int = 0) -> "Graph":
        return cls(n, [0] * n)

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and (self.adj[u] >> v) & 1 == 1

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def edges(self) -> tuple[Edge, ...]:
        """All edges, canonical and sorted."""
        if self._edges is None:
            out = []
            for u in range(self.n):
                for v in iter_bits(self.adj[u] >> (u + 1)):
                    out.append((u, u + 1 + v))
            self._edges = tuple(out)
        return self._edges

    def density(self) -> float:
        if self.n < 2:
            return 0.0
        return self.m / (self.n * (self.n - 1) / 2)

    def check(self) -> None:
        """Assert the simple-undirected invariants."""
        for u, a in enumerate(self.adj):
            assert not (a >> u) & 1, f"self-loop at {u}"
            assert a >> self.n == 0, f"vertex {u} has out-of-range neighbour"
            for v in iter_bits(a):
                assert (self.adj[v] >> u) & 1, f"asymmetric edge {u}-{v}"
        assert 2 * self.m == sum(a.bit_count() for a in self.adj)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass
class ParseStats:
    duplicates: int = 0
    self_loops: int = 0
    label_map: dict[int, int] = field(default_factory=dict)


def _read_text(data: bytes | str | io.IOBase) -> str:
    if isinstance(data, bytes):
        return data.decode("utf-8", errors="replace")
    if isinstance(data, str):
        return data
    raw = data.read()
    return raw.decode("utf-8", errors="replace") if isinstance(raw, bytes) else raw


def parse_dimacs(data, stats: ParseStats | None = None) -> Graph:
    """Parse the DIMACS clique format (``p edge n m`` + 1-based ``e u v``).

    Duplicate edges collapse; a self-loop line is an error, as is any label
    outside ``1..n``.
    """
    stats = stats if stats is not None else ParseStats()
    n = None
    adj: list[int] = []
    for lineno, line in enumerate(_read_text(data).splitlines(), start=1):
        tokens = line.split()
        if not tokens or tokens[0] == "c":
            continue
        tag = tokens[0]
        if tag == "p":
            if n is not None:
                raise GraphFormatError(f"line {lineno}: duplicate problem line")
            if len(tokens) != 4 or tokens[1] not in ("edge", "col"):
                raise GraphFormatError(f"line {lineno}: malformed header {line.strip()!r}")
            try:
                n = int(tokens[2])
                int(tokens[3])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: malformed header {line.strip()!r}") from None
            if n < 0:
                raise GraphFormatError(f"line {lineno}: negative vertex count")
            adj = [0] * n
        elif tag == "e":
            if n is None:
                raise GraphFormatError(f"line {lineno}: edge before problem line")
            if len(tokens) < 3:
                raise GraphFormatError(f"line {lineno}: malformed edge line")
            try:
                a, b = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: non-integer vertex label") from None
            if not (1 <= a <= n and 1 <= b <= n):
                raise GraphFormatError(f"line {lineno}: vertex label outside 1..{n}")
            if a == b:
                raise GraphFormatError(f"line {lineno}: self-loop on vertex {a}")
            u, v = a - 1, b - 1
            if (adj[u] >> v) & 1:
                stats.duplicates += 1
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        else:
            raise GraphFormatError(f"line {lineno}: unknown line type {tag!r}")
    if n is None:
        raise GraphFormatError("missing 'p edge' problem line")
    return Graph(n, adj, labels=range(1, n + 1))


def parse_edgelist(data, one_indexed: bool = False, stats: ParseStats | None = None) -> Graph:
    """Parse whitespace-separated integer pairs; ``%``/``#`` lines are comments.

    Labels seen anywhere (self-loop lines included) become vertices, densely
    relabelled in increasing label order.  Duplicate edges and self-loops are
    dropped and counted in ``stats``.  With ``one_indexed`` a label of 0 is
    rejected.
    """
    stats = stats if stats is not None else ParseStats()
    pairs: list[tuple[int, int]] = []
    seen: set[int] = set()
    for lineno, line in enumerate(_read_text(data).splitlines(), start=1):
        s = line.strip()
        if not s or s[0] in "%#":
            continue
        tokens = s.split()
        if len(tokens) < 2:
            raise GraphFormatError(f"line {lineno}: expected two vertex labels")
        try:
            a, b = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer token") from None
        if one_indexed and min(a, b) < 1:
            raise GraphFormatError(f"line {lineno}: label below 1 in one-indexed input")
        seen.update((a, b))
        pairs.append((a, b))

    labels = sorted(seen)
    ids = {label: i for i, label in enumerate(labels)}
    stats.label_map.update(ids)
    adj = [0] * len(labels)
    for a, b in pairs:
        u, v = ids[a], ids[b]
        if u == v:
            stats.self_loops += 1
        elif (adj[u] >> v) & 1:
            stats.duplicates += 1
        else:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return Graph(len(labels), adj, labels=labels)


def write_dimacs(g: Graph, comments: Sequence[str] = ()) -> str:
    """DIMACS text with 1-based labels and sorted canonical edges."""
    lines = [f"c {c}" for c in comments]
    lines.append(f"p edge {g.n} {g.m}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def remove_edges(g: Graph, f: Iterable[tuple[int, int]]) -> Graph:
    """Residual graph ``(V, E \\ F)``; every member of ``f`` must be an edge."""
    adj = list(g.adj)
    for u, v in f:
        if not (0 <= u < g.n and 0 <= v < g.n) or not (adj[u] >> v) & 1:
            raise ContractError(f"({u}, {v}) is not an edge of the graph")
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
    return Graph(g.n, adj, g.labels)


def add_edges(g: Graph, f: Iterable[tuple[int, int]]) -> Graph:
    adj = list(g.adj)
    for u, v in f:
        if u == v:
            raise ContractError(f"self-loop on {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(g.n, adj, g.labels)


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """``G[S]`` relabelled to ``0..|S|-1`` in increasing id order.

    ``labels`` of the result hold the parent ids, so ``labels[i]`` maps back.
    """
    verts = sorted(set(s))
    for v in verts:
        if not 0 <= v < g.n:
            raise ContractError(f"vertex {v} out of range for n={g.n}")
    pos = {v: i for i, v in enumerate(verts)}
    mask = bits_of(verts)
    adj = []
    for v in verts:
        row = 0
        for w in iter_bits(g.adj[v] & mask):
            row |= 1 << pos[w]
        adj.append(row)
    return Graph(len(verts), adj, labels=verts)


def common_neighbors(g: Graph, u: int, v: int) -> set[int]:
    if u == v:
        raise ContractError("common_neighbors needs two distinct vertices")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ContractError(f"vertex out of range for n={g.n}")
    return set(iter_bits(g.adj[u] & g.adj[v]))


def clique_edges(clique: Iterable[int]) -> list[Edge]:
    vs = sorted(clique)
    return [(vs[i], vs[j]) for i in range(len(vs)) for j in range(i + 1, len(vs))]
