"""Dicoloring graphs: explicit build, connectivity, distances, statistics.

The dicoloring graph of a digraph D at palette size k has one vertex per
valid k-coloring, with two colorings adjacent iff they differ on exactly
one vertex.  Orders reach the hundreds of thousands here, so adjacency is
found by hashing single-vertex mutations and stored in CSR arrays, and
eccentricity sweeps can restrict BFS sources to one representative per
symmetry orbit (color permutations, plus rotations on circulants, act as
automorphisms).
"""

from __future__ import annotations

import json
import time
from array import array
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .digraph import Digraph
from .coloring import (Coloring, ColoringError, _class_can_take,
                       enumerate_backtrack, is_valid, key_capacity_exceeded,
                       key_function)


class DisconnectedScopeError(ValueError):
    """Whole-graph diameter requested on a disconnected graph."""


class ExportCapError(ValueError):
    """Graph exceeds the export size cap."""


@dataclass
class DicoloringGraph:
    """Explicit dicoloring graph with CSR adjacency."""

    digraph: Digraph
    k: int
    colorings: list[tuple[int, ...]]
    index_of: dict
    offsets: array
    targets: array

    @property
    def order(self) -> int:
        return len(self.colorings)

    @property
    def size(self) -> int:
        return len(self.targets) // 2

    def degree(self, i: int) -> int:
        return self.offsets[i + 1] - self.offsets[i]

    def neighbors_of(self, i: int) -> Sequence[int]:
        return self.targets[self.offsets[i]:self.offsets[i + 1]]

    def coloring(self, i: int) -> Coloring:
        return Coloring(self.colorings[i], self.k)


def build(d: Digraph, k: int) -> DicoloringGraph:
    """Construct the dicoloring graph of ``d`` at palette size ``k``.

    Adjacency is found by probing every single-vertex recoloring of every
    valid coloring against the coloring index, O(order * n * k) instead of
    comparing pairs.  No valid coloring yields the empty graph.
    """
    n = d.num_vertices
    key_of = key_function(n, k)
    colorings = [c.colors for c in enumerate_backtrack(d, k)]
    index_of = {key_of(cols): i for i, cols in enumerate(colorings)}
    offsets = array("l", [0] * (len(colorings) + 1))
    targets = array("i")
    packed = not key_capacity_exceeded(n, k)
    weights = [k ** (n - 1 - v) for v in range(n)] if packed else None
    append = targets.append
    for i, cols in enumerate(colorings):
        if packed:
            base = key_of(cols)
            for v in range(n):
                o = cols[v]
                w = weights[v]
                for t in range(1, k + 1):
                    if t == o:
                        continue
                    j = index_of.get(base + (t - o) * w)
                    if j is not None:
                        append(j)
        else:
            for v in range(n):
                o = cols[v]
                head, tail = cols[:v], cols[v + 1:]
                for t in range(1, k + 1):
                    if t == o:
                        continue
                    j = index_of.get(head + (t,) + tail)
                    if j is not None:
                        append(j)
        offsets[i + 1] = len(targets)
    if len(targets) % 2:
        raise AssertionError("handshake failure: odd degree total")
    return DicoloringGraph(d, k, colorings, index_of, offsets, targets)


def neighbors(d: Digraph, c: Coloring) -> list[Coloring]:
    """All valid colorings one recoloring away from ``c``."""
    if not is_valid(d, c):
        raise ColoringError("coloring is not valid for this digraph")
    out = []
    masks = [0] * (c.k + 1)
    for v, col in enumerate(c.colors):
        masks[col] |= 1 << v
    for v in range(d.num_vertices):
        o = c.colors[v]
        for t in range(1, c.k + 1):
            if t != o and _class_can_take(d, masks[t], v):
                out.append(Coloring(
                    c.colors[:v] + (t,) + c.colors[v + 1:], c.k))
    return out


def components(g: DicoloringGraph) -> tuple[list[int], list[int]]:
    """Component label per coloring plus component sizes.

    Labels are assigned in order of each component's smallest index, so
    the output is deterministic.
    """
    labels = [-1] * g.order
    sizes: list[int] = []
    offsets, targets = g.offsets, g.targets
    for s in range(g.order):
        if labels[s] >= 0:
            continue
        cid = len(sizes)
        labels[s] = cid
        stack = [s]
        count = 1
        while stack:
            x = stack.pop()
            for y in targets[offsets[x]:offsets[x + 1]]:
                if labels[y] < 0:
                    labels[y] = cid
                    count += 1
                    stack.append(y)
        sizes.append(count)
    return labels, sizes


def isolated_count(g: DicoloringGraph) -> int:
    return sum(1 for i in range(g.order) if g.degree(i) == 0)


def degree_extrema(g: DicoloringGraph) -> tuple[int, int]:
    if g.order == 0:
        raise ValueError("degree extrema of an empty graph")
    degs = [g.degree(i) for i in range(g.order)]
    return min(degs), max(degs)


# --- symmetry orbits ---------------------------------------------------------


def _canonical_orbit_key(colors: Sequence[int], k: int, num_rotations: int) -> int:
    """Orbit invariant under color permutations and circulant rotations.

    Colors are relabeled by first occurrence (which cancels any color
    permutation); the minimum over rotations cancels the rotation group.
    """
    n = len(colors)
    best = -1
    for r in range(num_rotations):
        mapping = [0] * (k + 1)
        nxt = 1
        key = 0
        for j in range(n):
            c = colors[j - r]
            m = mapping[c]
            if not m:
                mapping[c] = m = nxt
                nxt += 1
            key = key * k + (m - 1)
        if best < 0 or key < best:
            best = key
    return best


def orbit_representatives(g: DicoloringGraph,
                          scope: Optional[Iterable[int]] = None) -> list[int]:
    """One coloring index per symmetry orbit (restricted to ``scope``)."""
    num_rot = (g.digraph.num_vertices
               if g.digraph.provenance is not None else 1)
    reps: dict[int, int] = {}
    indices = range(g.order) if scope is None else scope
    for i in indices:
        ck = _canonical_orbit_key(g.colorings[i], g.k, num_rot)
        if ck not in reps:
            reps[ck] = i
    return sorted(reps.values())


# --- eccentricity sweeps -----------------------------------------------------

_UNSEEN = 0xFF
_SWEEP_STATE = None


def _eccentricity(offsets, targets, src: int, order: int) -> tuple[int, int]:
    """(eccentricity, vertices reached) for one BFS source."""
    dist = bytearray([_UNSEEN]) * order
    dist[src] = 0
    frontier = [src]
    level = 0
    seen = 1
    while True:
        nxt = []
        push = nxt.append
        d = level + 1
        if d >= _UNSEEN:
            raise AssertionError("eccentricity exceeds byte-wide distances")
        for x in frontier:
            for y in targets[offsets[x]:offsets[x + 1]]:
                if dist[y] == _UNSEEN:
                    dist[y] = d
                    push(y)
        if not nxt:
            return level, seen
        seen += len(nxt)
        level = d
        frontier = nxt


def _sweep_chunk(sources: list[int]) -> list[int]:
    offsets, targets, order = _SWEEP_STATE
    return [_eccentricity(offsets, targets, s, order)[0] for s in sources]


def _eccentricities(g: DicoloringGraph, sources: list[int],
                    threads: int = 1) -> list[int]:
    global _SWEEP_STATE
    if threads > 1 and len(sources) > 1:
        import multiprocessing as mp

        try:
            ctx = mp.get_context("fork")
        except ValueError:
            ctx = None
        if ctx is not None:
            _SWEEP_STATE = (g.offsets, g.targets, g.order)
            chunks = [sources[i::threads] for i in range(threads)]
            chunks = [c for c in chunks if c]
            try:
                with ctx.Pool(len(chunks)) as pool:
                    results = pool.map(_sweep_chunk, chunks)
            finally:
                _SWEEP_STATE = None
            out = []
            for chunk_sources, eccs in zip(chunks, results):
                out.extend(zip(chunk_sources, eccs))
            out.sort()
            return [e for _, e in out]
    return [_eccentricity(g.offsets, g.targets, s, g.order)[0]
            for s in sources]


def diameter_radius(g: DicoloringGraph, scope: str = "whole",
                    orbit_reduction: bool = True,
                    threads: int = 1) -> tuple[int, int]:
    """Exact diameter and radius by all-sources BFS.

    With ``orbit_reduction`` the BFS sources are one representative per
    automorphism orbit; eccentricity is constant on orbits, so extrema are
    unchanged.  ``scope`` is ``"whole"`` (raises on a disconnected graph)
    or ``"largest_component"``.
    """
    if scope not in ("whole", "largest_component"):
        raise ValueError(f"unknown scope {scope!r}")
    if g.order == 0:
        raise ValueError("diameter of an empty graph")
    labels, sizes = components(g)
    if scope == "whole":
        if len(sizes) > 1:
            raise DisconnectedScopeError(
                f"graph has {len(sizes)} components; diameter undefined")
        members = None
    else:
        target = max(range(len(sizes)), key=lambda c: (sizes[c], -c))
        members = [i for i in range(g.order) if labels[i] == target]
        if len(members) == g.order:
            members = None
    scope_size = g.order if members is None else len(members)
    if scope_size == 1:
        return 0, 0
    if orbit_reduction:
        sources = orbit_representatives(g, members)
    else:
        sources = list(range(g.order)) if members is None else members
    eccs = []
    for src, ecc in zip(sources, _eccentricities(g, sources, threads)):
        eccs.append(ecc)
    # Reached-count sanity: BFS from any scope member must cover the scope.
    _, seen = _eccentricity(g.offsets, g.targets, sources[0], g.order)
    if seen != scope_size:
        raise AssertionError("scope is not a connected component")
    return max(eccs), min(eccs)


def girth(g: DicoloringGraph, orbit_reduction: bool = True) -> Optional[int]:
    """Length of a shortest cycle, or None when the graph is a forest.

    Per-source BFS with early exit: a triangle certificate ends the whole
    search, and levels beyond the current best are never expanded.
    """
    if g.order == 0:
        return None
    offsets, targets = g.offsets, g.targets
    sources = (orbit_representatives(g) if orbit_reduction
               else range(g.order))
    best = None
    for src in sources:
        dist = bytearray([_UNSEEN]) * g.order
        dist[src] = 0
        frontier = [src]
        level = 0
        while frontier and (best is None or 2 * level + 1 < best):
            nxt = []
            d = level + 1
            if d >= _UNSEEN:
                raise AssertionError("girth sweep exceeds byte-wide distances")
            for x in frontier:
                dx = dist[x]
                for y in targets[offsets[x]:offsets[x + 1]]:
                    if dist[y] == _UNSEEN:
                        dist[y] = d
                        nxt.append(y)
                    elif dist[y] >= dx:
                        cand = dx + dist[y] + 1
                        if best is None or cand < best:
                            best = cand
            frontier = nxt
            level = d
        if best == 3:
            return 3
    return best


def distance(d: Digraph, k: int, a: Coloring, b: Coloring,
             with_path: bool = False):
    """Dicoloring-graph distance between two valid colorings.

    Bidirectional BFS over implicitly generated neighbors; the full graph
    is never materialized.  Returns the distance, or None when the
    colorings lie in different components.  With ``with_path`` the return
    value is ``(distance, [colorings along one shortest path])``.
    """
    for name, c in (("a", a), ("b", b)):
        if c.k != k:
            raise ColoringError(f"endpoint {name} uses palette {c.k}, not {k}")
        if not is_valid(d, c):
            raise ColoringError(f"endpoint {name} is not a valid coloring")
    if a.colors == b.colors:
        return (0, [a]) if with_path else 0
    n = d.num_vertices

    def expand(cols: tuple[int, ...]) -> list[tuple[int, ...]]:
        masks = [0] * (k + 1)
        for v, col in enumerate(cols):
            masks[col] |= 1 << v
        out = []
        for v in range(n):
            o = cols[v]
            for t in range(1, k + 1):
                if t != o and _class_can_take(d, masks[t], v):
                    out.append(cols[:v] + (t,) + cols[v + 1:])
        return out

    side_a = {a.colors: None}
    side_b = {b.colors: None}
    front_a, front_b = [a.colors], [b.colors]
    dist_a = dist_b = 0

    def rebuild(meet, via):
        left = []
        node = meet
        while node is not None:
            left.append(node)
            node = side_a[node]
        left.reverse()
        right = []
        node = via
        while node is not None:
            right.append(node)
            node = side_b[node]
        states = left + right
        return [Coloring(s, k) for s in states]

    while front_a and front_b:
        grow_a = len(front_a) <= len(front_b)
        frontier = front_a if grow_a else front_b
        mine, other = (side_a, side_b) if grow_a else (side_b, side_a)
        nxt = []
        for cols in frontier:
            for nb in expand(cols):
                if nb in mine:
                    continue
                mine[nb] = cols
                if nb in other:
                    total = dist_a + dist_b + 1
                    if not with_path:
                        return total
                    # nb now has parents on both sides, so the chains
                    # through side_a and side_b stitch into one path.
                    return total, rebuild(nb, side_b[nb])
                nxt.append(nb)
        if grow_a:
            front_a, dist_a = nxt, dist_a + 1
        else:
            front_b, dist_b = nxt, dist_b + 1
    return (None, None) if with_path else None


def is_mixing(d: Digraph, k: int) -> bool:
    """True when the dicoloring graph is connected (and nonempty)."""
    g = build(d, k)
    if g.order == 0:
        return False
    _, sizes = components(g)
    return len(sizes) == 1


def is_freezable(d: Digraph, k: int) -> bool:
    """True when the dicoloring graph has an isolated vertex."""
    g = build(d, k)
    return isolated_count(g) > 0


# --- analysis report ---------------------------------------------------------


@dataclass
class AnalysisReport:
    """Statistics of one dicoloring graph, in the reference-table shape."""

    digraph: str
    k: int
    order: int
    size: int
    num_components: int
    is_connected: bool
    isolated_count: int
    min_degree: Optional[int]
    max_degree: Optional[int]
    diameter: Optional[int]
    radius: Optional[int]
    girth: Optional[int]
    runtime_ms: int
    diameter_scope: Optional[str] = None
    has_digons: bool = False

    COLUMNS = ("k", "order", "size", "connected", "min_deg", "max_deg",
               "diameter", "radius", "girth")

    def to_dict(self) -> dict:
        return {
            "digraph": self.digraph,
            "k": self.k,
            "order": self.order,
            "size": self.size,
            "num_components": self.num_components,
            "is_connected": self.is_connected,
            "isolated_count": self.isolated_count,
            "min_degree": self.min_degree,
            "max_degree": self.max_degree,
            "diameter": self.diameter,
            "radius": self.radius,
            "girth": self.girth,
            "runtime_ms": self.runtime_ms,
            "diameter_scope": self.diameter_scope,
            "has_digons": self.has_digons,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False) + "\n"

    def row(self) -> tuple[str, ...]:
        def fmt(v):
            if v is None:
                return "-"
            if isinstance(v, bool):
                return "yes" if v else "no"
            return f"{v:,}"
        return (fmt(self.k), fmt(self.order), fmt(self.size),
                fmt(self.is_connected), fmt(self.min_degree),
                fmt(self.max_degree), fmt(self.diameter), fmt(self.radius),
                fmt(self.girth))


def format_table(reports: Sequence[AnalysisReport]) -> str:
    rows = [AnalysisReport.COLUMNS] + [r.row() for r in reports]
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    lines = []
    for j, row in enumerate(rows):
        lines.append("  ".join(cell.rjust(w) for cell, w in zip(row, widths)))
        if j == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def analyze(d: Digraph, k: int, orbit_reduction: bool = True,
            threads: int = 1,
            graph: Optional[DicoloringGraph] = None) -> AnalysisReport:
    """Full dicoloring-graph statistics for one digraph and palette size.

    When the graph is disconnected the diameter and radius refer to the
    largest component (recorded in ``diameter_scope``); isolated colorings
    are counted separately.
    """
    start = time.monotonic()
    g = graph if graph is not None else build(d, k)
    labels, sizes = components(g)
    ncomp = len(sizes)
    iso = isolated_count(g)
    if g.order == 0:
        return AnalysisReport(
            d.describe(), k, 0, 0, 0, False, 0, None, None, None, None,
            None, int((time.monotonic() - start) * 1000),
            None, d.has_digons)
    mind, maxd = degree_extrema(g)
    scope = "whole" if ncomp == 1 else "largest_component"
    diam = rad = None
    if ncomp == 1 or max(sizes) > 1:
        diam, rad = diameter_radius(g, scope=scope,
                                    orbit_reduction=orbit_reduction,
                                    threads=threads)
    else:
        scope = None  # only isolated colorings, no meaningful diameter
    gir = girth(g, orbit_reduction=orbit_reduction)
    return AnalysisReport(
        d.describe(), k, g.order, g.size, ncomp, ncomp == 1, iso,
        mind, maxd, diam, rad, gir,
        int((time.monotonic() - start) * 1000), scope, d.has_digons)


# --- exports -----------------------------------------------------------------


def export_dot(g: DicoloringGraph, cap: int = 2000) -> str:
    """GraphViz DOT text with coloring labels; rejects oversized graphs."""
    if g.order > cap:
        raise ExportCapError(
            f"graph order {g.order} exceeds the export cap {cap}")
    lines = ["graph dicoloring {"]
    for i, cols in enumerate(g.colorings):
        label = ",".join(str(c) for c in cols)
        lines.append(f'  n{i} [label="{label}"];')
    for i in range(g.order):
        for j in g.neighbors_of(i):
            if i < j:
                lines.append(f"  n{i} -- n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_csv(g: DicoloringGraph, cap: int = 2000) -> str:
    """Edge list as CSV, columns ``source,target`` (coloring strings)."""
    if g.order > cap:
        raise ExportCapError(
            f"graph order {g.order} exceeds the export cap {cap}")
    lines = ["source,target"]
    for i in range(g.order):
        src = ",".join(str(c) for c in g.colorings[i])
        for j in g.neighbors_of(i):
            if i < j:
                dst = ",".join(str(c) for c in g.colorings[j])
                lines.append(f'"{src}","{dst}"')
    return "\n".join(lines) + "\n"
