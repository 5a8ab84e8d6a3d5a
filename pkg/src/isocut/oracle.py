"""Exhaustive ground truth for boundary minima and conditional connectivity.

Everything here enumerates, on purpose: these routines certify the closed
forms on graphs small enough to brute-force, so they avoid sharing any code
or idea with the formula side. Working notes on the engines:

* Subsets are Python int bitmasks; ``int.bit_count`` does the counting work,
  so the same code covers <= 128 vertices and beyond without a special path.
* Fixed-size minima with no connectivity constraint walk index-increasing
  combinations depth-first. That order IS lexicographic order of the sorted
  vertex tuples, so keeping the first optimum seen yields the canonical
  (lexicographically least) witness for free.
* Connectivity-constrained minima use grow-from-least-vertex expansion:
  every connected set is produced exactly once, rooted at its smallest
  vertex. Growth order is not lexicographic, so ties are broken by explicit
  sorted-tuple comparison (bitmask integer comparison would be wrong:
  {1,2} -> 6 beats {0,3} -> 9 numerically but loses lexicographically).
* Conditional connectivity enumerates connected sides up to half the graph
  and gates the expensive checks (complement connectivity, side predicates)
  behind the current best cut.
* The two-part property check peels unordered partitions part by part, each
  part containing the least unassigned vertex, pruned by a cut budget at
  every part completion.
* Parallel runs split the same task lists over a process pool and combine
  with a deterministic min-reduction, so chunked results match serial ones
  bit for bit.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from itertools import combinations, product
from multiprocessing import get_context

from .closedform import ConditionKind
from .construct import CutReport, evaluate_cut
from .errors import (
    BudgetError,
    DomainError,
    InfeasibleError,
    SubsetBudgetError,
    UnsupportedError,
    VerificationError,
)
from .graphs import Graph, HammingParams

__all__ = [
    "OracleBudget",
    "FragmentResult",
    "brute_min_boundary",
    "brute_min_boundary_connected",
    "brute_min_boundary_bilateral",
    "brute_boundary_profile",
    "brute_extra_connectivity",
    "brute_conditional",
    "bipartite_property_check",
]


@dataclass(frozen=True)
class OracleBudget:
    """Caps on enumeration size.

    max_subsets is a global cap on visited states; parallel runs split it
    evenly across chunks, erring on the conservative side. max_vertices
    bounds |V| of any graph handed to the oracle. parallel_chunks is the
    process count (1 = in-process serial).
    """

    max_subsets: int = 200_000_000
    max_vertices: int = 32
    parallel_chunks: int = 1

    def __post_init__(self) -> None:
        if self.max_subsets < 1 or self.max_vertices < 1 or self.parallel_chunks < 1:
            raise DomainError("budget fields must be positive")

    def per_chunk_cap(self) -> int:
        return max(1, self.max_subsets // self.parallel_chunks)


DEFAULT_BUDGET = OracleBudget()


@dataclass(frozen=True)
class FragmentResult:
    """Outcome of one exhaustive search.

    witness is the canonical optimal fragment: the lexicographically least
    (as a sorted vertex tuple) among the optimal sides of size at most
    floor(N/2) (both sides qualify at an even split). atom_size is the
    smallest fragment cardinality over all optimal cuts found.
    """

    optimum: int
    witness: tuple[int, ...]
    atom_size: int
    report: CutReport
    subsets_visited: int
    wall_time_s: float

    def to_dict(self) -> dict:
        out = self.report.to_dict()
        out.update(
            optimum=self.optimum,
            witness=list(self.witness),
            atom_size=self.atom_size,
            subsets_visited=self.subsets_visited,
            wall_time_s=self.wall_time_s,
        )
        return out


def _bits_tuple(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def _mask_connected(mask: int, masks: tuple[int, ...]) -> bool:
    if mask == 0:
        return False
    seen = mask & -mask
    frontier = seen
    while frontier:
        grown = 0
        rest = frontier
        while rest:
            low = rest & -rest
            rest ^= low
            grown |= masks[low.bit_length() - 1]
        frontier = grown & mask & ~seen
        seen |= frontier
    return seen == mask


def _require_oracle_scale(graph: Graph, budget: OracleBudget) -> None:
    if graph.vertex_count > budget.max_vertices:
        raise BudgetError(
            f"graph has {graph.vertex_count} vertices, oracle cap is "
            f"{budget.max_vertices}"
        )


# --- engine: fixed-size scan, no connectivity --------------------------------
#
# Worker state lives in module globals (set by the pool initializer or, for
# serial runs, directly) so tasks stay cheap to ship.

_W: dict = {}


def _scan_init(masks, degrees, max_m, cap):
    _W["masks"] = masks
    _W["degrees"] = degrees
    _W["max_m"] = max_m
    _W["cap"] = cap
    _W["n"] = len(masks)


def _beta_task(pair):
    """All subsets whose two smallest elements are `pair`, sizes 2..max_m."""
    v0, v1 = pair
    masks = _W["masks"]
    degrees = _W["degrees"]
    n = _W["n"]
    max_m = _W["max_m"]
    best_cut = [None] * (max_m + 1)
    best_mask = [None] * (max_m + 1)

    start_mask = (1 << v0) | (1 << v1)
    start_cut = degrees[v0] + degrees[v1] - 2 * ((masks[v0] >> v1) & 1)
    if best_cut[2] is None or start_cut < best_cut[2]:
        best_cut[2] = start_cut
        best_mask[2] = start_mask

    def rec(start: int, mask: int, size: int, cut: int) -> None:
        nsize = size + 1
        grow = nsize < max_m
        bc = best_cut[nsize]
        for v in range(start, n):
            bit = 1 << v
            ncut = cut + degrees[v] - 2 * (masks[v] & mask).bit_count()
            if bc is None or ncut < bc:
                bc = ncut
                best_cut[nsize] = ncut
                best_mask[nsize] = mask | bit
            if grow:
                rec(v + 1, mask | bit, nsize, ncut)

    if max_m > 2:
        rec(v1 + 1, start_mask, 2, start_cut)
    return best_cut, best_mask


def _beta_profile(graph: Graph, max_m: int, budget: OracleBudget):
    """Per-size minima over ALL subsets (sizes 1..max_m). Returns
    (list of (cut, witness_tuple) per size, visited)."""
    n = graph.vertex_count
    total = sum(math.comb(n, k) for k in range(1, max_m + 1))
    if total > budget.max_subsets:
        raise SubsetBudgetError(
            f"{total} subsets of size <= {max_m} exceed max_subsets="
            f"{budget.max_subsets}"
        )
    masks = graph.neighbor_masks
    degrees = tuple(graph.degree(v) for v in range(n))

    best_cut = [None] * (max_m + 1)
    best_mask = [None] * (max_m + 1)
    # size 1 handled here; the v0 loop is ascending so first strict optimum
    # is the lexicographically least witness
    for v in range(n):
        if best_cut[1] is None or degrees[v] < best_cut[1]:
            best_cut[1] = degrees[v]
            best_mask[1] = 1 << v

    if max_m >= 2:
        tasks = list(combinations(range(n), 2))
        if budget.parallel_chunks > 1:
            ctx = get_context()
            with ctx.Pool(
                budget.parallel_chunks,
                initializer=_scan_init,
                initargs=(masks, degrees, max_m, budget.per_chunk_cap()),
            ) as pool:
                results = pool.map(_beta_task, tasks, chunksize=8)
        else:
            _scan_init(masks, degrees, max_m, budget.per_chunk_cap())
            results = [_beta_task(t) for t in tasks]
        # tasks are in lexicographic block order, so strict improvement
        # keeps the earliest (least) witness on ties
        for cuts, witnesses in results:
            for size in range(2, max_m + 1):
                if cuts[size] is not None and (
                    best_cut[size] is None or cuts[size] < best_cut[size]
                ):
                    best_cut[size] = cuts[size]
                    best_mask[size] = witnesses[size]

    out = []
    for size in range(1, max_m + 1):
        out.append((best_cut[size], _bits_tuple(best_mask[size])))
    return out, total


# --- engine: connected growth -------------------------------------------------

def _connected_init(masks, degrees, max_m, cap, full_mask, want_bilateral):
    _W["masks"] = masks
    _W["degrees"] = degrees
    _W["max_m"] = max_m
    _W["cap"] = cap
    _W["full"] = full_mask
    _W["bilateral"] = want_bilateral


def _connected_task(args):
    """Grow connected sets containing root whose first extension is fixed.

    Covers every connected set S with min(S) = root, |S| >= 2, whose
    smallest-ordered extension choice at the top level is `ext_index`.
    Returns per-size ((cut, witness) for set-connected, same for
    both-sides-connected, visited count).
    """
    root, ext_index = args
    masks = _W["masks"]
    degrees = _W["degrees"]
    max_m = _W["max_m"]
    cap = _W["cap"]
    full = _W["full"]
    bilateral = _W["bilateral"]

    best_e: list = [None] * (max_m + 1)
    best_b: list = [None] * (max_m + 1)
    visited = 0

    def record(mask: int, size: int, cut: int) -> None:
        entry = best_e[size]
        if entry is None or cut < entry[0]:
            best_e[size] = (cut, _bits_tuple(mask))
        elif cut == entry[0]:
            witness = _bits_tuple(mask)
            if witness < entry[1]:
                best_e[size] = (cut, witness)
        if not bilateral:
            return
        entry = best_b[size]
        if entry is not None and cut > entry[0]:
            return
        witness = _bits_tuple(mask)
        if entry is not None and cut == entry[0] and witness >= entry[1]:
            return
        if _mask_connected(full & ~mask, masks):
            best_b[size] = (cut, witness)

    def grow(mask: int, ext: int, seen: int, size: int, cut: int) -> None:
        nonlocal visited
        visited += 1
        if visited > cap:
            raise SubsetBudgetError(
                f"connected enumeration exceeded {cap} states in one chunk"
            )
        record(mask, size, cut)
        if size == max_m:
            return
        while ext:
            low = ext & -ext
            ext ^= low
            v = low.bit_length() - 1
            fresh = masks[v] & ~seen
            grow(
                mask | low,
                ext | fresh,
                seen | fresh,
                size + 1,
                cut + degrees[v] - 2 * (masks[v] & mask).bit_count(),
            )

    low_mask = (1 << (root + 1)) - 1
    ext0 = masks[root] & ~low_mask
    seen0 = low_mask | ext0
    choices = []
    probe = ext0
    while probe:
        low = probe & -probe
        probe ^= low
        choices.append(low)
    chosen = choices[ext_index]
    v = chosen.bit_length() - 1
    remaining = ext0
    for skipped in choices[: ext_index + 1]:
        remaining ^= skipped
    fresh = masks[v] & ~seen0
    grow(
        (1 << root) | chosen,
        remaining | fresh,
        seen0 | fresh,
        2,
        degrees[root] + degrees[v] - 2,
    )
    return best_e, best_b, visited


def _merge_profiles(best, extra):
    for size in range(len(best)):
        entry = extra[size]
        if entry is None:
            continue
        if best[size] is None or entry < best[size]:
            best[size] = entry


def _connected_profile(graph: Graph, max_m: int, budget: OracleBudget, bilateral: bool):
    """Per-size minima over connected sets (and optionally bilateral ones)."""
    n = graph.vertex_count
    masks = graph.neighbor_masks
    degrees = tuple(graph.degree(v) for v in range(n))
    full = (1 << n) - 1

    best_e: list = [None] * (max_m + 1)
    best_b: list = [None] * (max_m + 1)
    for v in range(n):
        cut = degrees[v]
        entry = (cut, (v,))
        if best_e[1] is None or entry < best_e[1]:
            best_e[1] = entry
        if bilateral and _mask_connected(full & ~(1 << v), masks):
            if best_b[1] is None or entry < best_b[1]:
                best_b[1] = entry

    tasks = [
        (root, j)
        for root in range(n)
        for j in range(bin(masks[root] >> (root + 1)).count("1"))
    ]
    visited = n
    if max_m >= 2 and tasks:
        init = (masks, degrees, max_m, budget.per_chunk_cap(), full, bilateral)
        if budget.parallel_chunks > 1:
            ctx = get_context()
            with ctx.Pool(
                budget.parallel_chunks, initializer=_connected_init, initargs=init
            ) as pool:
                results = pool.map(_connected_task, tasks, chunksize=1)
        else:
            _connected_init(*init)
            results = [_connected_task(t) for t in tasks]
        for te, tb, tv in results:
            _merge_profiles(best_e, te)
            _merge_profiles(best_b, tb)
            visited += tv
    return best_e[1:], best_b[1:], visited


# --- public fixed-size operations --------------------------------------------

def _check_m(graph: Graph, m: int) -> None:
    half = graph.vertex_count // 2
    if not 1 <= m <= half:
        raise DomainError(f"m must be in [1, {half}], got {m}")


def _package(graph, cut, witness, atom, visited, t0) -> FragmentResult:
    report = evaluate_cut(graph, witness)
    if report.cut_size != cut:
        raise VerificationError(
            f"internal inconsistency: enumeration says {cut}, recount says "
            f"{report.cut_size}"
        )
    return FragmentResult(cut, witness, atom, report, visited, time.perf_counter() - t0)


def brute_min_boundary(
    graph: Graph, m: int, budget: OracleBudget = DEFAULT_BUDGET
) -> FragmentResult:
    """Minimum edge boundary over ALL m-vertex sets, by full scan."""
    t0 = time.perf_counter()
    _require_oracle_scale(graph, budget)
    _check_m(graph, m)
    profile, visited = _beta_profile(graph, m, budget)
    cut, witness = profile[m - 1]
    return _package(graph, cut, witness, m, visited, t0)


def brute_min_boundary_connected(
    graph: Graph, m: int, budget: OracleBudget = DEFAULT_BUDGET
) -> FragmentResult:
    """Minimum boundary over m-vertex sets inducing a connected subgraph."""
    t0 = time.perf_counter()
    _require_oracle_scale(graph, budget)
    _check_m(graph, m)
    prof_e, _, visited = _connected_profile(graph, m, budget, bilateral=False)
    entry = prof_e[m - 1]
    if entry is None:
        raise InfeasibleError(f"no connected {m}-vertex set in {graph.label}")
    return _package(graph, entry[0], entry[1], m, visited, t0)


def brute_min_boundary_bilateral(
    graph: Graph, m: int, budget: OracleBudget = DEFAULT_BUDGET
) -> FragmentResult:
    """Minimum boundary over m-vertex sets with both sides connected."""
    t0 = time.perf_counter()
    _require_oracle_scale(graph, budget)
    _check_m(graph, m)
    _, prof_b, visited = _connected_profile(graph, m, budget, bilateral=True)
    entry = prof_b[m - 1]
    if entry is None:
        raise InfeasibleError(
            f"no {m}-vertex set with both sides connected in {graph.label}"
        )
    return _package(graph, entry[0], entry[1], m, visited, t0)


def brute_boundary_profile(
    graph: Graph,
    max_m: int,
    mode: str = "bilateral",
    budget: OracleBudget = DEFAULT_BUDGET,
) -> list[tuple[int, tuple[int, ...]] | None]:
    """(cut, witness) per size 1..max_m in one enumeration pass.

    mode 'any' scans all subsets; 'connected' requires the set side
    connected; 'bilateral' requires both sides. Entries are None where no
    qualifying set exists. This is the bulk interface the verification
    suites use so an m-sweep costs one enumeration, not max_m of them.
    """
    _require_oracle_scale(graph, budget)
    _check_m(graph, max_m)
    if mode == "any":
        profile, _ = _beta_profile(graph, max_m, budget)
        return profile
    if mode not in ("connected", "bilateral"):
        raise DomainError(f"unknown mode {mode!r}")
    prof_e, prof_b, _ = _connected_profile(
        graph, max_m, budget, bilateral=(mode == "bilateral")
    )
    return prof_b if mode == "bilateral" else prof_e


# --- conditional connectivity -------------------------------------------------

def _axis_sublayer_masks(params: HammingParams, t: int) -> tuple[int, ...]:
    """Bitmasks of every axis-aligned t-dimensional sub-layer of K_L^n."""
    arity, dim = params.arity, params.dim
    out = []
    for free in combinations(range(dim), t):
        fixed = [p for p in range(dim) if p not in free]
        for values in product(range(arity), repeat=len(fixed)):
            base = sum(v * arity**p for v, p in zip(values, fixed))
            mask = 0
            for digits in product(range(arity), repeat=t):
                mask |= 1 << (base + sum(d * arity**p for d, p in zip(digits, free)))
            out.append(mask)
    return tuple(out)


def _side_predicate(cond: ConditionKind, params: HammingParams | None, graph: Graph):
    """Build pred(mask, size, internal_edges) for one side of a cut."""
    kind, value = cond.kind, cond.value
    if kind in ("extra", "isoperimetric"):
        return lambda mask, size, internal: size >= value
    if kind == "cyclic":
        # a connected side is non-forest iff it has >= |side| edges; for the
        # general (possibly disconnected) case check per component
        masks = graph.neighbor_masks

        def has_cycle(mask: int, size: int, internal: int) -> bool:
            if internal >= size and _mask_connected(mask, masks):
                return True
            remaining = mask
            while remaining:
                seed = remaining & -remaining
                comp = seed
                frontier = seed
                while frontier:
                    grown = 0
                    rest = frontier
                    while rest:
                        low = rest & -rest
                        rest ^= low
                        grown |= masks[low.bit_length() - 1]
                    frontier = grown & remaining & ~comp
                    comp |= frontier
                edges = 0
                probe = comp
                while probe:
                    low = probe & -probe
                    probe ^= low
                    edges += (masks[low.bit_length() - 1] & comp).bit_count()
                if edges // 2 >= comp.bit_count():
                    return True
                remaining &= ~comp
            return False

        return has_cycle
    if kind == "super":
        masks = graph.neighbor_masks

        def min_degree_ok(mask: int, size: int, internal: int) -> bool:
            probe = mask
            while probe:
                low = probe & -probe
                probe ^= low
                if (masks[low.bit_length() - 1] & mask).bit_count() < value:
                    return False
            return True

        return min_degree_ok
    if kind == "average":
        return lambda mask, size, internal: 2 * internal >= value * size
    if kind == "embedded":
        if params is None or graph.label != f"hamming({params.arity},{params.dim})":
            raise UnsupportedError(
                "embedded predicate needs Hamming coordinates; pass the params "
                "of the hamming graph being searched"
            )
        if not 0 <= value <= params.dim - 1:
            raise DomainError(
                f"embedded dimension must be in [0, {params.dim - 1}], got {value}"
            )
        if value == 0:
            return lambda mask, size, internal: size >= 1
        layers = _axis_sublayer_masks(params, value)
        return lambda mask, size, internal: any(
            mask & layer == layer for layer in layers
        )
    raise DomainError(f"unknown condition kind {kind!r}")


def _conditional_init(masks, degrees, max_m, cap, full_mask, pred, total_edges):
    _W["masks"] = masks
    _W["degrees"] = degrees
    _W["max_m"] = max_m
    _W["cap"] = cap
    _W["full"] = full_mask
    _W["pred"] = pred
    _W["edges"] = total_edges


def _conditional_task(args):
    """Best qualifying bipartition among connected sides rooted as given.

    Returns ((cut, witness, atom), visited) with the first element None when
    nothing qualified in this chunk.
    """
    root, ext_index = args
    masks = _W["masks"]
    degrees = _W["degrees"]
    max_m = _W["max_m"]
    cap = _W["cap"]
    full = _W["full"]
    pred = _W["pred"]
    total_edges = _W["edges"]
    n = full.bit_count()

    best = None  # (cut, witness_tuple, atom_size)
    visited = 0

    def consider(mask: int, size: int, cut: int, internal: int) -> None:
        nonlocal best
        if best is not None and cut > best[0]:
            return
        witness = None
        if best is not None and cut == best[0]:
            witness = _bits_tuple(mask)
            if witness >= best[1] and size >= best[2]:
                return
        if not pred(mask, size, internal):
            return
        other = full & ~mask
        other_internal = total_edges - internal - cut
        if not pred(other, n - size, other_internal):
            return
        if not _mask_connected(other, masks):
            return
        if witness is None:
            witness = _bits_tuple(mask)
        if best is None or cut < best[0]:
            best = (cut, witness, size)
        else:
            best = (cut, min(witness, best[1]), min(size, best[2]))

    def grow(mask, ext, seen, size, cut, internal):
        nonlocal visited
        visited += 1
        if visited > cap:
            raise SubsetBudgetError(
                f"conditional enumeration exceeded {cap} states in one chunk"
            )
        consider(mask, size, cut, internal)
        if size == max_m:
            return
        while ext:
            low = ext & -ext
            ext ^= low
            v = low.bit_length() - 1
            common = (masks[v] & mask).bit_count()
            fresh = masks[v] & ~seen
            grow(
                mask | low,
                ext | fresh,
                seen | fresh,
                size + 1,
                cut + degrees[v] - 2 * common,
                internal + common,
            )

    low_mask = (1 << (root + 1)) - 1
    ext0 = masks[root] & ~low_mask
    seen0 = low_mask | ext0
    choices = []
    probe = ext0
    while probe:
        low = probe & -probe
        probe ^= low
        choices.append(low)
    chosen = choices[ext_index]
    v = chosen.bit_length() - 1
    remaining = ext0
    for skipped in choices[: ext_index + 1]:
        remaining ^= skipped
    fresh = masks[v] & ~seen0
    grow(
        (1 << root) | chosen,
        remaining | fresh,
        seen0 | fresh,
        2,
        degrees[root] + degrees[v] - 2,
        1,
    )
    return best, visited


def brute_conditional(
    graph: Graph,
    cond: ConditionKind,
    params: HammingParams | None = None,
    budget: OracleBudget = DEFAULT_BUDGET,
) -> FragmentResult:
    """Exact conditional edge-connectivity by bipartition enumeration.

    Both sides must satisfy the condition; both sides must be connected for
    every kind except isoperimetric, which scans arbitrary subsets of size
    h..floor(N/2) instead. Raises InfeasibleError when nothing qualifies.
    `params` is required for the embedded kind (sub-layer structure).
    """
    t0 = time.perf_counter()
    _require_oracle_scale(graph, budget)
    n = graph.vertex_count
    half = n // 2

    if cond.kind == "isoperimetric":
        h = cond.value
        if h > half:
            raise InfeasibleError(
                f"isoperimetric({h}) needs both sides >= {h}, impossible on "
                f"{n} vertices"
            )
        profile, visited = _beta_profile(graph, half, budget)
        best = None
        atom = None
        for m in range(h, half + 1):
            cut, witness = profile[m - 1]
            if best is None or cut < best[0]:
                best = (cut, witness)
                atom = m  # sizes ascend, so this is the least achieving size
            elif cut == best[0] and witness < best[1]:
                best = (cut, witness)
        return _package(graph, best[0], best[1], atom, visited, t0)

    pred = _side_predicate(cond, params, graph)
    masks = graph.neighbor_masks
    degrees = tuple(graph.degree(v) for v in range(n))
    full = (1 << n) - 1

    best = None  # (cut, witness, atom)
    visited = 0
    # singleton sides; v ascends, so on equal cut the earlier (lesser) witness
    # is already in place and every atom here is 1
    for v in range(n):
        mask = 1 << v
        other = full & ~mask
        if not (pred(mask, 1, 0) and pred(other, n - 1, graph.edge_count - degrees[v])):
            continue
        if not _mask_connected(other, masks):
            continue
        if best is None or degrees[v] < best[0]:
            best = (degrees[v], (v,), 1)
    visited += n

    tasks = [
        (root, j)
        for root in range(n)
        for j in range(bin(masks[root] >> (root + 1)).count("1"))
    ]
    if half >= 2 and tasks:
        init = (
            masks,
            degrees,
            half,
            budget.per_chunk_cap(),
            full,
            pred,
            graph.edge_count,
        )
        if budget.parallel_chunks > 1:
            ctx = get_context()
            with ctx.Pool(
                budget.parallel_chunks, initializer=_conditional_init, initargs=init
            ) as pool:
                results = pool.map(_conditional_task, tasks, chunksize=1)
        else:
            _conditional_init(*init)
            results = [_conditional_task(t) for t in tasks]
        for entry, tv in results:
            visited += tv
            if entry is None:
                continue
            if best is None or entry[0] < best[0]:
                best = entry
            elif entry[0] == best[0]:
                best = (best[0], min(entry[1], best[1]), min(entry[2], best[2]))
    if best is None:
        raise InfeasibleError(
            f"no bipartition of {graph.label} satisfies {cond.describe()}"
        )
    return _package(graph, best[0], best[1], best[2], visited, t0)


def brute_extra_connectivity(
    graph: Graph, h: int, budget: OracleBudget = DEFAULT_BUDGET
) -> FragmentResult:
    """min over m >= h of the bilateral boundary minimum; the witness is the
    canonical optimal fragment across all achieving sizes."""
    if h < 1:
        raise DomainError(f"h must be >= 1, got {h}")
    if h > graph.vertex_count // 2:
        raise InfeasibleError(
            f"extra({h}) needs both sides >= {h}, impossible on "
            f"{graph.vertex_count} vertices"
        )
    return brute_conditional(graph, ConditionKind.extra(h), budget=budget)


# --- two-part property of minimum conditional cuts ----------------------------

def _partition_minima(
    graph: Graph,
    part_ok,
    cut_budget: int,
    connected_parts: bool,
    state_cap: int,
):
    """Scan unordered partitions into >= 2 qualifying parts with cut <= budget.

    Returns (min_cut, part_counts_at_min, achiever_count); min_cut is None
    when nothing fit the budget. Each part contains the least vertex not yet
    assigned, which enumerates every partition exactly once.
    """
    masks = graph.neighbor_masks
    n = graph.vertex_count
    state = {"visited": 0, "best": None, "zs": set(), "hits": 0}

    def subsets_with_root(pool_mask: int):
        """Every subset of pool containing its least vertex, with its cross
        edge count into the rest of the pool."""
        root = pool_mask & -pool_mask
        rest_bits = []
        probe = pool_mask ^ root
        while probe:
            low = probe & -probe
            probe ^= low
            rest_bits.append(low.bit_length() - 1)
        root_v = root.bit_length() - 1
        root_deg = (masks[root_v] & pool_mask).bit_count()
        out = []

        def rec(i: int, mask: int, degsum: int, internal: int) -> None:
            if i == len(rest_bits):
                state["visited"] += 1
                if state["visited"] > state_cap:
                    raise SubsetBudgetError(
                        f"partition scan exceeded {state_cap} states"
                    )
                out.append((mask, internal, degsum - 2 * internal))
                return
            rec(i + 1, mask, degsum, internal)
            v = rest_bits[i]
            common = (masks[v] & mask).bit_count()
            rec(
                i + 1,
                mask | (1 << v),
                degsum + (masks[v] & pool_mask).bit_count(),
                internal + common,
            )

        rec(0, root, root_deg, 0)
        return out

    def peel(pool_mask: int, acc_cut: int, parts: int) -> None:
        if pool_mask == 0:
            if parts >= 2:
                if state["best"] is None or acc_cut < state["best"]:
                    state["best"] = acc_cut
                    state["zs"] = {parts}
                    state["hits"] = 1
                elif acc_cut == state["best"]:
                    state["zs"].add(parts)
                    state["hits"] += 1
            return
        for mask, internal, cross in subsets_with_root(pool_mask):
            if acc_cut + cross > cut_budget:
                continue
            size = mask.bit_count()
            if connected_parts and not _mask_connected(mask, masks):
                continue
            if not part_ok(mask, size, internal):
                continue
            peel(pool_mask & ~mask, acc_cut + cross, parts + 1)

    peel((1 << n) - 1, 0, 0)
    return state["best"], state["zs"], state["hits"]


def bipartite_property_check(
    graph: Graph,
    cond: ConditionKind,
    params: HammingParams | None = None,
    budget: OracleBudget = DEFAULT_BUDGET,
) -> bool:
    """True iff every minimum conditional cut splits the graph in exactly two.

    First finds the bipartition optimum, then exhausts ALL partitions into
    qualifying parts (components for the five structural kinds, arbitrary
    parts of size >= h for isoperimetric) with cut up to that optimum. The
    property holds iff no multi-part partition beats or ties it.
    """
    base = brute_conditional(graph, cond, params=params, budget=budget)
    if cond.kind == "isoperimetric":
        part_ok = lambda mask, size, internal: size >= cond.value
        connected_parts = False
    else:
        part_ok = _side_predicate(cond, params, graph)
        connected_parts = True
    minimum, zs, _ = _partition_minima(
        graph, part_ok, base.optimum, connected_parts, budget.max_subsets
    )
    if minimum is None or minimum > base.optimum:
        raise VerificationError(
            "partition scan lost the bipartition optimum; enumeration bug"
        )
    return minimum == base.optimum and zs == {2}
