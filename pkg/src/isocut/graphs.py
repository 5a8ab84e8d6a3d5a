"""Graph generators and vertex-string coding for Hamming and BC networks.

Vertices are dense integers 0..N-1. A Hamming graph K_L^n has N = L**n
vertices; vertex ids are read as L-base n-digit strings (most significant
digit first), and two vertices are adjacent iff their strings differ in
exactly one position. Bijective-connection (BC) networks are built by
recursive doubling: two copies of the previous level joined by a perfect
matching.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from .errors import CapError, DomainError

NATIVE_UINT_MAX = 2**64 - 1

# Materialization guard, not a formula guard: closed forms never build the graph.
DEFAULT_VERTEX_CAP = 10**6

MATCHING_POLICIES = ("identity", "reversal", "seeded_random")


@dataclass(frozen=True)
class HammingParams:
    """The pair (arity, dim) identifying the Hamming graph K_arity^dim."""

    arity: int
    dim: int

    def __post_init__(self) -> None:
        if self.arity < 2:
            raise DomainError(f"arity must be >= 2, got {self.arity}")
        if self.dim < 1:
            raise DomainError(f"dim must be >= 1, got {self.dim}")
        if self.arity**self.dim > NATIVE_UINT_MAX:
            raise DomainError(
                f"vertex count {self.arity}**{self.dim} exceeds the native 64-bit range"
            )

    @property
    def vertex_count(self) -> int:
        return self.arity**self.dim

    @property
    def degree(self) -> int:
        """Common degree (arity-1)*dim of every vertex."""
        return (self.arity - 1) * self.dim

    @property
    def edge_count(self) -> int:
        return self.degree * self.vertex_count // 2

    @property
    def half_size(self) -> int:
        """floor(N/2), the largest size a small side of a cut can have."""
        return self.vertex_count // 2

    def __str__(self) -> str:
        return f"K_{self.arity}^{self.dim}"


def encode(vertex: int, params: HammingParams) -> tuple[int, ...]:
    """Digits of a vertex id, most significant first."""
    if not 0 <= vertex < params.vertex_count:
        raise DomainError(f"vertex {vertex} out of range for {params}")
    digits = []
    for _ in range(params.dim):
        vertex, d = divmod(vertex, params.arity)
        digits.append(d)
    digits.reverse()
    return tuple(digits)


def decode(digits: Sequence[int], params: HammingParams) -> int:
    """Inverse of encode; validates length and digit range."""
    if len(digits) != params.dim:
        raise DomainError(f"expected {params.dim} digits, got {len(digits)}")
    value = 0
    for d in digits:
        if not 0 <= d < params.arity:
            raise DomainError(f"digit {d} out of range for arity {params.arity}")
        value = value * params.arity + d
    return value


def lex_compare(a: Sequence[int], b: Sequence[int]) -> int:
    """-1/0/1 ordering of two digit strings, most significant digit first.

    Equals the integer comparison of the decoded values.
    """
    if len(a) != len(b):
        raise DomainError(f"length mismatch: {len(a)} vs {len(b)}")
    ta, tb = tuple(a), tuple(b)
    if ta < tb:
        return -1
    return 1 if ta > tb else 0


def format_digits(digits: Sequence[int], arity: int) -> str:
    """Compact string form: '0021' when digits fit one character each."""
    if arity <= 10:
        return "".join(str(d) for d in digits)
    return ".".join(str(d) for d in digits)


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph with sorted adjacency lists."""

    vertex_count: int
    adjacency: tuple[tuple[int, ...], ...]
    label: str = "custom"

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edges as (u, v) with u < v, in sorted order."""
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if v > u:
                    yield (u, v)

    @cached_property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    @cached_property
    def neighbor_masks(self) -> tuple[int, ...]:
        """Per-vertex neighbor bitmasks; the oracle's working representation."""
        return tuple(sum(1 << u for u in nbrs) for nbrs in self.adjacency)

    def is_connected(self) -> bool:
        if self.vertex_count == 0:
            return False
        return len(components(self)) == 1


def components(graph: Graph, within: Iterable[int] | None = None) -> list[list[int]]:
    """Connected components (sorted vertex lists) of the subgraph induced by
    ``within``, or of the whole graph. Ordered by smallest member."""
    if within is None:
        pool = set(range(graph.vertex_count))
    else:
        pool = set(within)
    out: list[list[int]] = []
    while pool:
        root = min(pool)
        pool.discard(root)
        comp = [root]
        stack = [root]
        while stack:
            v = stack.pop()
            for u in graph.adjacency[v]:
                if u in pool:
                    pool.discard(u)
                    comp.append(u)
                    stack.append(u)
        comp.sort()
        out.append(comp)
    return out


def _check_cap(n_vertices: int, max_vertices: int) -> None:
    if n_vertices > max_vertices:
        raise CapError(
            f"{n_vertices} vertices exceed the cap of {max_vertices}; "
            "raise max_vertices to materialize this graph"
        )


def hamming_graph(params: HammingParams, max_vertices: int = DEFAULT_VERTEX_CAP) -> Graph:
    """Materialize K_arity^dim.

    Vertex u is adjacent to u + (e - d) * arity**p for every digit position p
    (current digit d) and every other digit value e.
    """
    n_vertices = params.vertex_count
    _check_cap(n_vertices, max_vertices)
    arity, dim = params.arity, params.dim
    adjacency = []
    for v in range(n_vertices):
        nbrs = []
        power = 1
        rest = v
        for _ in range(dim):
            d = rest % arity
            base = v - d * power
            nbrs.extend(base + e * power for e in range(arity) if e != d)
            rest //= arity
            power *= arity
        nbrs.sort()
        adjacency.append(tuple(nbrs))
    return Graph(n_vertices, tuple(adjacency), label=f"hamming({arity},{dim})")


def bc_network(
    dim: int,
    matching_policy: str = "identity",
    seed: int = 0,
    max_vertices: int = DEFAULT_VERTEX_CAP,
) -> Graph:
    """Build an n-dimensional bijective-connection network.

    Level 1 is a single edge; level k joins two copies of level k-1 by a
    perfect matching chosen by ``matching_policy``:

    * ``identity``: vertex i of copy 0 matches vertex i of copy 1; this
      reproduces the hypercube K_2^dim exactly.
    * ``reversal``: vertex i matches vertex (size-1-i).
    * ``seeded_random``: a uniformly shuffled matching per level, drawn from
      CPython's ``random.Random(seed)`` (Mersenne Twister, Fisher-Yates
      shuffle), so graphs are reproducible given the seed.
    """
    if dim < 1:
        raise DomainError(f"dim must be >= 1, got {dim}")
    if matching_policy not in MATCHING_POLICIES:
        raise DomainError(f"unknown matching policy {matching_policy!r}")
    _check_cap(2**dim, max_vertices)
    rng = random.Random(seed) if matching_policy == "seeded_random" else None
    adjacency: list[list[int]] = [[1], [0]]
    for _ in range(dim - 1):
        size = len(adjacency)
        if matching_policy == "identity":
            matching = range(size)
        elif matching_policy == "reversal":
            matching = range(size - 1, -1, -1)
        else:
            perm = list(range(size))
            rng.shuffle(perm)
            matching = perm
        doubled = [list(nbrs) for nbrs in adjacency]
        doubled.extend([u + size for u in nbrs] for nbrs in adjacency)
        for i, j in enumerate(matching):
            doubled[i].append(size + j)
            doubled[size + j].append(i)
        adjacency = doubled
    label = f"bc({dim},{matching_policy}"
    if matching_policy == "seeded_random":
        label += f",seed={seed}"
    label += ")"
    return Graph(len(adjacency), tuple(tuple(sorted(n)) for n in adjacency), label=label)


# --- edge-list text format ---------------------------------------------------

def format_edge_list(graph: Graph) -> str:
    lines = [f"# vertices={graph.vertex_count} edges={graph.edge_count} label={graph.label}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse the text form produced by format_edge_list.

    Header line ``# vertices=N edges=M label=...`` followed by one ``u v``
    pair per line with u < v, in sorted order.
    """
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("#"):
        raise DomainError("missing '# vertices=... edges=... label=...' header")
    header = lines[0][1:].strip()
    fields = {}
    if " label=" in header:
        head, _, label = header.partition(" label=")
        fields["label"] = label.strip()
    else:
        head = header
        fields["label"] = "custom"
    for token in head.split():
        key, _, value = token.partition("=")
        if key in ("vertices", "edges"):
            try:
                fields[key] = int(value)
            except ValueError as exc:
                raise DomainError(f"bad header field {token!r}") from exc
    if "vertices" not in fields or "edges" not in fields:
        raise DomainError("header must declare vertices= and edges=")
    n_vertices = fields["vertices"]
    if n_vertices < 1:
        raise DomainError("vertex count must be positive")
    adjacency: list[list[int]] = [[] for _ in range(n_vertices)]
    previous = None
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise DomainError(f"bad edge line {ln!r}")
        u, v = int(parts[0]), int(parts[1])
        if not (0 <= u < v < n_vertices):
            raise DomainError(f"edge ({u}, {v}) out of range or not u < v")
        if previous is not None and (u, v) <= previous:
            raise DomainError(f"edges out of order or duplicated at ({u}, {v})")
        previous = (u, v)
        adjacency[u].append(v)
        adjacency[v].append(u)
    n_edges = sum(len(nbrs) for nbrs in adjacency) // 2
    if n_edges != fields["edges"]:
        raise DomainError(f"header claims {fields['edges']} edges, file has {n_edges}")
    return Graph(n_vertices, tuple(tuple(sorted(n)) for n in adjacency), label=fields["label"])


def write_edge_list(graph: Graph, path: str | Path) -> None:
    Path(path).write_text(format_edge_list(graph))


def read_edge_list(path: str | Path) -> Graph:
    return parse_edge_list(Path(path).read_text())
