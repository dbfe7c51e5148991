"""Loop-free digraphs, circulant tournaments, and acyclicity predicates.

Vertices are always 0..num_vertices-1.  Arc sets are stored both as a
frozenset of pairs and as per-vertex bit rows, so induced-subgraph
acyclicity tests reduce to integer bit arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional


class DigraphError(ValueError):
    """Malformed digraph construction or query."""


@dataclass(frozen=True)
class CirculantSpec:
    """Parameters of a circulant tournament on 2n+1 vertices.

    ``half_order`` is n; jumps are 1..n.  With ``reversed_jump=None`` every
    jump j contributes the arcs (a, a+j); with ``reversed_jump=j`` the
    jump-j arcs run backwards, (a, a-j), all arithmetic mod 2n+1.
    """

    half_order: int
    reversed_jump: Optional[int] = None

    def __post_init__(self) -> None:
        if self.half_order < 1:
            raise DigraphError("half_order must be at least 1")
        j = self.reversed_jump
        if j is not None and not 1 <= j <= self.half_order:
            raise DigraphError(
                f"reversed jump {j} outside 1..{self.half_order}")

    @property
    def num_vertices(self) -> int:
        return 2 * self.half_order + 1

    def is_top_jump_reversed(self) -> bool:
        """True for the family with the largest jump reversed."""
        return self.reversed_jump == self.half_order

    def describe(self) -> str:
        j = "none" if self.reversed_jump is None else str(self.reversed_jump)
        return f"circulant n={self.half_order} reversed={j}"


@dataclass(frozen=True)
class Digraph:
    """Immutable loop-free digraph.

    ``original_labels`` maps current vertex ids back to the ids of the
    digraph a vertex deletion started from; it is the identity for freshly
    built digraphs.
    """

    num_vertices: int
    arcs: frozenset[tuple[int, int]]
    provenance: Optional[CirculantSpec] = None
    original_labels: Optional[tuple[int, ...]] = None

    def __post_init__(self) -> None:
        if self.num_vertices < 1:
            raise DigraphError("a digraph needs at least one vertex")
        for u, v in self.arcs:
            if u == v:
                raise DigraphError(f"loop at vertex {u}")
            if not (0 <= u < self.num_vertices and 0 <= v < self.num_vertices):
                raise DigraphError(f"arc ({u},{v}) out of range")
        if self.provenance is not None:
            spec = self.provenance
            if spec.num_vertices != self.num_vertices:
                raise DigraphError("provenance order mismatch")
            for u in range(self.num_vertices):
                for v in range(u + 1, self.num_vertices):
                    if ((u, v) in self.arcs) == ((v, u) in self.arcs):
                        raise DigraphError(
                            "circulant provenance requires a tournament")

    @cached_property
    def out_bits(self) -> tuple[int, ...]:
        rows = [0] * self.num_vertices
        for u, v in self.arcs:
            rows[u] |= 1 << v
        return tuple(rows)

    @cached_property
    def in_bits(self) -> tuple[int, ...]:
        rows = [0] * self.num_vertices
        for u, v in self.arcs:
            rows[v] |= 1 << u
        return tuple(rows)

    @cached_property
    def is_tournament(self) -> bool:
        if len(self.arcs) != self.num_vertices * (self.num_vertices - 1) // 2:
            return False
        return not self.has_digons

    @cached_property
    def has_digons(self) -> bool:
        return any((v, u) in self.arcs for u, v in self.arcs)

    def has_arc(self, u: int, v: int) -> bool:
        return (self.out_bits[u] >> v) & 1 == 1

    def describe(self) -> str:
        if self.provenance is not None:
            return self.provenance.describe()
        return f"digraph order={self.num_vertices} arcs={len(self.arcs)}"


def circulant_tournament(spec: CirculantSpec) -> Digraph:
    """Build the circulant tournament described by ``spec``.

    Every unordered pair {a, a+j} gets exactly one arc, so the result is a
    tournament on 2n+1 vertices with (2n+1)n arcs.
    """
    m = spec.num_vertices
    arcs = set()
    for a in range(m):
        for j in range(1, spec.half_order + 1):
            if j == spec.reversed_jump:
                arcs.add((a, (a - j) % m))
            else:
                arcs.add((a, (a + j) % m))
    return Digraph(m, frozenset(arcs), provenance=spec)


def delete_vertex(d: Digraph, v: int) -> Digraph:
    """Induced subdigraph on the other vertices, re-indexed to 0..n-2.

    The ids of the surviving vertices in ``d`` are recorded in
    ``original_labels`` (composed with any earlier deletions).
    """
    if not 0 <= v < d.num_vertices:
        raise DigraphError(f"vertex {v} out of range")
    if d.num_vertices == 1:
        raise DigraphError("cannot delete the last vertex")
    keep = [u for u in range(d.num_vertices) if u != v]
    new_id = {u: i for i, u in enumerate(keep)}
    arcs = frozenset((new_id[a], new_id[b]) for a, b in d.arcs
                     if a != v and b != v)
    prior = d.original_labels or tuple(range(d.num_vertices))
    labels = tuple(prior[u] for u in keep)
    return Digraph(d.num_vertices - 1, arcs, original_labels=labels)


def _mask_of(s: Iterable[int], n: int) -> int:
    mask = 0
    for v in s:
        if not 0 <= v < n:
            raise DigraphError(f"vertex {v} out of range")
        mask |= 1 << v
    return mask


def _mask_is_acyclic(in_bits, mask: int) -> bool:
    # Kahn-style source elimination on the induced subdigraph.
    rem = mask
    while rem:
        m = rem
        source = 0
        while m:
            b = m & -m
            if not in_bits[b.bit_length() - 1] & rem:
                source = b
                break
            m ^= b
        if not source:
            return False
        rem ^= source
    return True


def is_acyclic_subset(d: Digraph, s: Iterable[int]) -> bool:
    """True iff ``s`` induces no directed cycle (a digon is a 2-cycle)."""
    return _mask_is_acyclic(d.in_bits, _mask_of(s, d.num_vertices))


def find_cycle_in_subset(d: Digraph, s: Iterable[int]) -> Optional[list[int]]:
    """Return some directed cycle inside the induced subdigraph, or None.

    Used to print certificates when a coloring class is rejected.
    """
    mask = _mask_of(s, d.num_vertices)
    if _mask_is_acyclic(d.in_bits, mask):
        return None
    members = [v for v in range(d.num_vertices) if (mask >> v) & 1]
    # Iterative DFS; the first back edge closes a cycle.
    color = {v: 0 for v in members}  # 0 new, 1 on stack, 2 done
    for root in members:
        if color[root]:
            continue
        stack = [(root, iter(members))]
        color[root] = 1
        path = [root]
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                if not d.has_arc(v, w):
                    continue
                if color[w] == 1:
                    return path[path.index(w):]
                if color[w] == 0:
                    color[w] = 1
                    path.append(w)
                    stack.append((w, iter(members)))
                    advanced = True
                    break
            if not advanced:
                color[v] = 2
                path.pop()
                stack.pop()
    raise AssertionError("cyclic subset without a findable cycle")


def _require_top_jump_family(spec: CirculantSpec) -> None:
    if not spec.is_top_jump_reversed():
        raise DigraphError(
            "operation is specific to the reversed-top-jump family")


def is_forbidden_triangle(spec: CirculantSpec, s: Iterable[int]) -> bool:
    """True iff ``s`` is {i, i+n, i+n+1} mod 2n+1 for some i.

    These triples induce maximal acyclic subdigraphs of the
    reversed-top-jump tournament: adding any fourth vertex creates a cycle.
    """
    _require_top_jump_family(spec)
    m = spec.num_vertices
    n = spec.half_order
    ss = set(s)
    if len(ss) != 3:
        return False
    return any(ss == {i, (i + n) % m, (i + n + 1) % m} for i in ss)


def _interval(a: int, length: int, m: int) -> frozenset[int]:
    return frozenset((a + t) % m for t in range(length))


def classify_max_acyclic(spec: CirculantSpec, s: Iterable[int]) -> str:
    """Classify an acyclic set of the reversed-top-jump tournament.

    Acyclic sets of that tournament have at most n vertices, and the ones
    of size exactly n are either an interval {a..a+n-1} or the gapped set
    {a..a+n+1} minus {a+1, a+n}.  Returns ``"interval"``, ``"gapped"`` or
    ``"not_max_acyclic"``.
    """
    _require_top_jump_family(spec)
    d = circulant_tournament(spec)
    ss = frozenset(s)
    if not is_acyclic_subset(d, ss):
        raise DigraphError("subset is not acyclic")
    m = spec.num_vertices
    n = spec.half_order
    if len(ss) != n:
        return "not_max_acyclic"
    for a in range(m):
        if ss == _interval(a, n, m):
            return "interval"
    for a in range(m):
        gapped = set(_interval(a, n + 2, m))
        gapped.discard((a + 1) % m)
        gapped.discard((a + n) % m)
        if ss == frozenset(gapped):
            return "gapped"
    raise AssertionError("size-n acyclic set outside the two known shapes")


def dichromatic_number(d: Digraph) -> int:
    """Smallest k for which a valid k-coloring exists.

    Plain backtracking with increasing k; vertex 0 is pinned to color 1,
    which is harmless because colors can always be permuted.
    """
    from .coloring import enumerate_backtrack

    for k in range(1, d.num_vertices + 1):
        if next(enumerate_backtrack(d, k, vertex0_colors=(1,)), None):
            return k
    raise AssertionError("singleton classes always give a valid coloring")


def two_coloring_partitions(spec: CirculantSpec) -> list[tuple[frozenset[int], frozenset[int]]]:
    """All vertex partitions induced by valid 2-colorings of the cyclic family.

    Each partition splits Z_{2n+1} into a half interval {a..a+n} and its
    complement {a+n+1..a-1}; as unordered partitions there are exactly
    2n+1 of them, one per interval start, and each carries two colorings.
    """
    if spec.reversed_jump is not None:
        raise DigraphError("two-coloring partitions exist for the cyclic "
                           "family only")
    m = spec.num_vertices
    n = spec.half_order
    out = []
    for a in range(m):
        big = _interval(a, n + 1, m)
        small = frozenset(range(m)) - big
        out.append((big, small))
    return out


# --- digraph text format ----------------------------------------------------
#
# First line is either "digraph <num_vertices>" or "circulant <n> <j|none>";
# each following line "u v" is one arc (ignored after a circulant header).


def parse_digraph(text: str) -> Digraph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise DigraphError("empty digraph file")
    head = lines[0].split()
    if head[0] == "circulant":
        if len(head) != 3:
            raise DigraphError("circulant header needs: circulant <n> <j|none>")
        n = int(head[1])
        j = None if head[2] == "none" else int(head[2])
        return circulant_tournament(CirculantSpec(n, j))
    if head[0] != "digraph" or len(head) != 2:
        raise DigraphError(f"unrecognized header: {lines[0]!r}")
    num = int(head[1])
    arcs = set()
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise DigraphError(f"bad arc line: {ln!r}")
        u, v = int(parts[0]), int(parts[1])
        if u == v:
            raise DigraphError(f"loop at vertex {u}")
        if (u, v) in arcs:
            raise DigraphError(f"duplicate arc ({u},{v})")
        arcs.add((u, v))
    return Digraph(num, frozenset(arcs))


def format_digraph(d: Digraph, expand: bool = False) -> str:
    """Serialize to the text format; compact circulant header when possible."""
    if d.provenance is not None and not expand:
        spec = d.provenance
        j = "none" if spec.reversed_jump is None else str(spec.reversed_jump)
        return f"circulant {spec.half_order} {j}\n"
    lines = [f"digraph {d.num_vertices}"]
    lines += [f"{u} {v}" for u, v in sorted(d.arcs)]
    return "\n".join(lines) + "\n"
