"""Simple undirected graphs: representation, serialization, degree bookkeeping.

Vertices are dense integers 0..n-1.  Two text formats are supported:

* edge list -- first line ``n``, then one ``u v`` pair per line;
* graph6    -- compact ASCII packing of the upper-triangle adjacency bits,
  restricted to n <= 62 (single size byte).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional


class GraphFormatError(ValueError):
    """Raised when a graph file or string cannot be parsed."""


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph: vertex count plus a canonical sorted edge tuple.

    Any iterable of vertex pairs is accepted; edges are normalized to
    ``(min, max)`` and sorted.  Self-loops, duplicates and out-of-range
    labels are rejected.
    """

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"vertex count must be non-negative, got {self.n}")
        norm = []
        for e in self.edges:
            u, v = e
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if u > v:
                u, v = v, u
            if u < 0 or v >= self.n:
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            norm.append((u, v))
        norm.sort()
        for a, b in zip(norm, norm[1:]):
            if a == b:
                raise ValueError(f"duplicate edge ({a[0]}, {a[1]})")
        object.__setattr__(self, "edges", tuple(norm))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(deg)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(a) for a in adj)

    def relabel(self, perm: Iterable[int]) -> "Graph":
        """Return the graph with vertex v renamed to perm[v]."""
        p = list(perm)
        if sorted(p) != list(range(self.n)):
            raise ValueError("perm must be a permutation of 0..n-1")
        return Graph(self.n, tuple((p[u], p[v]) for u, v in self.edges))


def _graph_unchecked(n: int, edges: tuple[tuple[int, int], ...],
                     degrees: Optional[tuple[int, ...]] = None) -> Graph:
    # Fast path for internal callers that guarantee sorted, valid edges
    # (the enumerator builds millions of graphs).
    g = object.__new__(Graph)
    object.__setattr__(g, "n", n)
    object.__setattr__(g, "edges", edges)
    if degrees is not None:
        g.__dict__["degrees"] = degrees
    return g


@dataclass(frozen=True)
class DegreeProfile:
    """Degree-class decomposition of a graph.

    d, D are the minimum and maximum degree.  class_sizes[i] counts the
    vertices of degree i for every i in [d, D] (zeros included), and
    cross_counts[(i, j)] with i <= j counts the edges joining a degree-i
    vertex to a degree-j vertex (every pair in range present, zeros
    included).
    """

    d: int
    D: int
    class_sizes: dict[int, int]
    cross_counts: dict[tuple[int, int], int]


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format: first line n, then one "u v" per line.

    Blank lines are skipped.  Self-loops, duplicate edges, malformed lines
    and out-of-range labels are rejected with a line-numbered message.
    """
    n: Optional[int] = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 1:
                raise GraphFormatError(
                    f"line {lineno}: expected the vertex count alone, got {line!r}")
            try:
                n = int(tokens[0])
            except ValueError:
                raise GraphFormatError(
                    f"line {lineno}: vertex count is not an integer: {line!r}") from None
            if n < 0:
                raise GraphFormatError(f"line {lineno}: negative vertex count {n}")
            continue
        if len(tokens) != 2:
            raise GraphFormatError(
                f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphFormatError(
                f"line {lineno}: endpoints are not integers: {line!r}") from None
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(
                f"line {lineno}: label out of range [0, {n}): {line!r}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(
                f"line {lineno}: duplicate edge {key[0]} {key[1]}")
        seen.add(key)
        edges.append(key)
    if n is None:
        raise GraphFormatError("empty input: missing vertex count line")
    return Graph(n, tuple(edges))


def format_edge_list(g: Graph) -> str:
    """Serialize a graph in the edge-list format (inverse of parse_edge_list)."""
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


_G6_HEADER = ">>graph6<<"


def parse_graph6(text: str) -> Graph:
    """Decode a graph6 string (single-byte size, n <= 62).

    Bit order: pairs (i, j) for j = 1..n-1, i = 0..j-1, packed big-endian
    into 6-bit groups, each offset by 63 into printable bytes.  Bytes
    outside 63..126, a multi-byte size prefix, a wrong byte count, and
    non-zero padding bits are all rejected.
    """
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):].strip()
    if not s:
        raise GraphFormatError("empty graph6 string")
    for pos, ch in enumerate(s):
        b = ord(ch)
        if not 63 <= b <= 126:
            raise GraphFormatError(
                f"invalid graph6 byte {b} at position {pos} (must be 63..126)")
    if s[0] == "~":
        raise GraphFormatError("multi-byte graph6 sizes (n > 62) not supported")
    n = ord(s[0]) - 63
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(s) != 1 + nbytes:
        raise GraphFormatError(
            f"graph6 for n={n} needs {1 + nbytes} bytes, got {len(s)}")
    edges = []
    t = 0
    pairs = ((i, j) for j in range(1, n) for i in range(j))
    for ch in s[1:]:
        group = ord(ch) - 63
        for shift in range(5, -1, -1):
            bit = (group >> shift) & 1
            if t < nbits:
                if bit:
                    edges.append(next(pairs))
                else:
                    next(pairs)
            elif bit:
                raise GraphFormatError("non-zero padding bits in graph6 string")
            t += 1
    # pairs generated in colex order are not sorted lexicographically
    return Graph(n, tuple(edges))


def to_graph6(g: Graph) -> str:
    """Encode a graph as graph6 (inverse of parse_graph6); requires n <= 62."""
    if g.n > 62:
        raise ValueError(f"graph6 encoding supports n <= 62, got {g.n}")
    present = set(g.edges)
    out = [chr(63 + g.n)]
    group = 0
    filled = 0
    for j in range(1, g.n):
        for i in range(j):
            group = (group << 1) | ((i, j) in present)
            filled += 1
            if filled == 6:
                out.append(chr(63 + group))
                group = 0
                filled = 0
    if filled:
        out.append(chr(63 + (group << (6 - filled))))
    return "".join(out)


def degree_profile(g: Graph) -> DegreeProfile:
    """Compute the degree-class decomposition (class sizes and cross counts).

    Rejects graphs with an isolated vertex: every quantity downstream
    divides by a degree.
    """
    if g.n == 0:
        raise ValueError("degree profile undefined for the empty graph")
    deg = g.degrees
    d = min(deg)
    if d == 0:
        raise ValueError("isolated vertex present (minimum degree must be positive)")
    D = max(deg)
    sizes = {i: 0 for i in range(d, D + 1)}
    for x in deg:
        sizes[x] += 1
    cross = {(i, j): 0 for i in range(d, D + 1) for j in range(i, D + 1)}
    for u, v in g.edges:
        a, b = deg[u], deg[v]
        if a > b:
            a, b = b, a
        cross[(a, b)] += 1
    return DegreeProfile(d=d, D=D, class_sizes=sizes, cross_counts=cross)


def is_connected(g: Graph) -> bool:
    """True iff every vertex is reachable from vertex 0 (requires n >= 1)."""
    if g.n < 1:
        raise ValueError("connectivity undefined for n = 0")
    adj = g.adjacency
    seen = bytearray(g.n)
    seen[0] = 1
    stack = [0]
    count = 1
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if not seen[w]:
                seen[w] = 1
                count += 1
                stack.append(w)
    return count == g.n


@dataclass(frozen=True)
class BiregularCertificate:
    """Witness that a graph is (a, b)-biregular: a two-coloring whose first
    part is uniformly degree a and second uniformly degree b, a <= b."""

    a: int
    b: int
    parts: tuple[tuple[int, ...], tuple[int, ...]]


def biregular_certificate(g: Graph) -> Optional[BiregularCertificate]:
    """Return a biregular certificate, or None when the graph has none.

    The graph must be bipartite and each side degree-uniform.  Disconnected
    graphs qualify only when every component admits a two-coloring with the
    same global degree pair (a, b); each component is oriented with its
    smaller degree on the a-side.  Graphs with a degree-0 vertex never
    qualify (the degenerate (0, b) reading is not useful here).
    """
    if g.n == 0 or not g.edges:
        return None
    deg = g.degrees
    if min(deg) == 0:
        return None
    adj = g.adjacency
    color = [-1] * g.n
    part_a: list[int] = []
    part_b: list[int] = []
    pair: Optional[tuple[int, int]] = None
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        stack = [start]
        side = ([start], [])
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    side[color[w]].append(w)
                    stack.append(w)
                elif color[w] == color[u]:
                    return None  # odd cycle
        degs0 = {deg[v] for v in side[0]}
        degs1 = {deg[v] for v in side[1]}
        if len(degs0) != 1 or len(degs1) != 1:
            return None
        a_c, b_c = degs0.pop(), degs1.pop()
        low, high = (side[0], side[1]) if a_c <= b_c else (side[1], side[0])
        this = (min(a_c, b_c), max(a_c, b_c))
        if pair is None:
            pair = this
        elif pair != this:
            return None
        part_a.extend(low)
        part_b.extend(high)
    assert pair is not None
    return BiregularCertificate(
        a=pair[0], b=pair[1],
        parts=(tuple(sorted(part_a)), tuple(sorted(part_b))))


def degree_multiset(g: Graph) -> dict[int, int]:
    """Map degree -> number of vertices with that degree."""
    return dict(sorted(Counter(g.degrees).items()))
