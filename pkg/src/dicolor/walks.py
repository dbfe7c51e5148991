"""Constructive recoloring walks between colorings.

Each builder is a straight-line implementation of one recoloring recipe
with a proven length bound; none of them consults BFS, so shortest-path
comparisons in the tests are a genuine cross-check.  Every move recolors
exactly one vertex and every intermediate state must stay a valid
coloring, which ``validate_walk`` re-checks move by move.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .digraph import (CirculantSpec, Digraph, circulant_tournament,
                      is_forbidden_triangle)
from .coloring import Coloring, ColoringError, is_valid, permute_colors, rotate


class WalkPreconditionError(ValueError):
    """A builder's hypotheses do not hold; the message names the clause."""


@dataclass(frozen=True)
class RecoloringWalk:
    """An ordered list of single-vertex recolorings from a start coloring."""

    start: Coloring
    moves: tuple[tuple[int, int], ...]

    @property
    def length(self) -> int:
        return len(self.moves)

    @property
    def end(self) -> Coloring:
        cols = list(self.start.colors)
        for v, c in self.moves:
            cols[v] = c
        return Coloring(tuple(cols), self.start.k)

    def as_text(self) -> str:
        lines = [self.start.as_text()]
        lines += [f"{v} -> {c}" for v, c in self.moves]
        return "\n".join(lines) + "\n"


def validate_walk(d: Digraph, w: RecoloringWalk) -> Optional[int]:
    """Replay a walk, checking validity after every move.

    Returns None when every state is valid, the index of the first bad
    move otherwise, or -1 when the start coloring itself is invalid.
    """
    if not is_valid(d, w.start):
        return -1
    cols = list(w.start.colors)
    for idx, (v, c) in enumerate(w.moves):
        if not 0 <= v < d.num_vertices:
            return idx
        if not 1 <= c <= w.start.k or c == cols[v]:
            return idx
        cols[v] = c
        if not is_valid(d, Coloring(tuple(cols), w.start.k)):
            return idx
    return None


def _require(cond: bool, clause: str) -> None:
    if not cond:
        raise WalkPreconditionError(clause)


class _WalkBuilder:
    """Shared bookkeeping: a mutable coloring plus the recorded moves."""

    def __init__(self, d: Digraph, start: Coloring):
        self.d = d
        self.k = start.k
        self.start = start
        self.current = list(start.colors)
        self.moves: list[tuple[int, int]] = []

    def move(self, v: int, c: int) -> None:
        if self.current[v] == c:
            raise AssertionError(f"move would re-assign color {c} to {v}")
        self.moves.append((v, c))
        self.current[v] = c

    def walk(self) -> RecoloringWalk:
        return RecoloringWalk(self.start, tuple(self.moves))


def _check_common(d: Digraph, a: Coloring, b: Coloring) -> None:
    _require(a.k == b.k, "endpoints use different palettes")
    _require(not d.has_digons, "digraph must have no digons")
    _require(is_valid(d, a), "start coloring is invalid")
    _require(is_valid(d, b), "target coloring is invalid")


def walk_singleton_classes(d: Digraph, a: Coloring, b: Coloring,
                           classes: Iterable[int]) -> RecoloringWalk:
    """Walk to a target whose named classes are all singletons.

    Hypotheses: ``b`` has a singleton class for every color in ``classes``
    and ``a`` agrees with ``b`` outside their union.  The walk settles one
    vertex per move (recoloring empty-class targets first, then chasing
    displacement cycles), so its length is the number of differing
    vertices, at most ``len(classes)``.
    """
    classes = sorted(set(classes))
    _require(len(classes) >= 2, "need at least two singleton classes")
    _check_common(d, a, b)
    _require(max(classes) <= b.k and min(classes) >= 1,
             "class colors outside the palette")
    target_vertex = {}
    for i in classes:
        members = b.class_members(i)
        _require(len(members) == 1, f"target class {i} is not a singleton")
        target_vertex[i] = next(iter(members))
    union = set(target_vertex.values())
    for v in range(d.num_vertices):
        if v not in union:
            _require(a.colors[v] == b.colors[v],
                     "colorings differ outside the singleton classes")
    wb = _WalkBuilder(d, a)
    cur = wb.current
    order = sorted(union)
    while True:
        diff = [v for v in order if cur[v] != b.colors[v]]
        if not diff:
            break
        empty = [i for i in classes
                 if not any(cur[v] == i for v in order)]
        if empty:
            i = empty[0]
            wb.move(target_vertex[i], i)
            continue
        # All named classes are occupied singletons: chase the displacement
        # cycle starting at the lowest differing vertex.
        v = diff[0]
        while cur[v] != b.colors[v]:
            t = b.colors[v]
            occupant = next((u for u in order if cur[u] == t), None)
            wb.move(v, t)
            if occupant is None or cur[occupant] == b.colors[occupant]:
                break
            v = occupant
    return wb.walk()


def walk_singletons_plus_pair(d: Digraph, a: Coloring, b: Coloring,
                              pair_class: int,
                              singleton_classes: Iterable[int],
                              ) -> RecoloringWalk:
    """Walk to a target with one two-vertex class and singleton classes.

    Hypotheses: ``b``'s class ``pair_class`` has exactly two vertices,
    every class in ``singleton_classes`` is a singleton, and ``a`` agrees
    with ``b`` outside the union of those classes.  Length is again the
    number of differing vertices, at most ``len(singleton_classes) + 2``.
    """
    singles = sorted(set(singleton_classes))
    _require(len(singles) >= 1, "need at least one singleton class")
    _require(pair_class not in singles,
             "pair class duplicated among the singleton classes")
    _check_common(d, a, b)
    colors_used = [pair_class] + singles
    _require(min(colors_used) >= 1 and max(colors_used) <= b.k,
             "class colors outside the palette")
    pair = sorted(b.class_members(pair_class))
    _require(len(pair) == 2, "pair class of the target does not have "
                             "exactly two vertices")
    target_vertex = {}
    for i in singles:
        members = b.class_members(i)
        _require(len(members) == 1, f"target class {i} is not a singleton")
        target_vertex[i] = next(iter(members))
    union = set(pair) | set(target_vertex.values())
    for v in range(d.num_vertices):
        if v not in union:
            _require(a.colors[v] == b.colors[v],
                     "colorings differ outside the named classes")
    special = set(colors_used)
    wb = _WalkBuilder(d, a)
    cur = wb.current
    order = sorted(union)
    while True:
        diff = [v for v in order if cur[v] != b.colors[v]]
        if not diff:
            break
        members = {i: [v for v in order if cur[v] == i] for i in colors_used}
        if not members[pair_class]:
            wb.move(pair[0], pair_class)
            wb.move(pair[1], pair_class)
            continue
        empty_singles = [i for i in singles if not members[i]]
        if empty_singles:
            i = empty_singles[0]
            if cur[target_vertex[i]] != i:
                wb.move(target_vertex[i], i)
                continue
        stray = [v for v in order if cur[v] not in special]
        if stray:
            v = stray[0]
            wb.move(v, b.colors[v])
            continue
        # Every named class is occupied; exactly one holds two vertices.
        # Chase from an unsettled vertex, preferring the crowded class.
        doubled = [i for i in colors_used if len(members[i]) == 2]
        v = None
        if doubled:
            options = [u for u in members[doubled[0]]
                       if cur[u] != b.colors[u]]
            if options:
                v = options[0]
        if v is None:
            v = diff[0]
        while cur[v] != b.colors[v]:
            t = b.colors[v]
            occupants = [u for u in order if cur[u] == t]
            wb.move(v, t)
            unsettled = [u for u in occupants if cur[u] != b.colors[u]]
            if not unsettled:
                break
            v = unsettled[0]
    return wb.walk()


def extend_class_to_interval(spec: CirculantSpec, a: Coloring,
                             j: int) -> RecoloringWalk:
    """Grow one class of a reversed-top-jump coloring into an n-interval.

    Any class that is not a forbidden triangle can be pushed, one
    recoloring at a time, until it equals {s..s+n-1} for some s.  The walk
    length is at most n-|C| for classes of size 0 or 1 and n+2-|C|
    otherwise, where C is the class of color ``j`` at the start.
    """
    _require(spec.is_top_jump_reversed(),
             "reversed-top-jump family required")
    n = spec.half_order
    m = spec.num_vertices
    _require(n >= 4, "half order must be at least 4")
    _require(a.k >= 3, "palette must have at least three colors")
    _require(1 <= j <= a.k, "class color outside the palette")
    d = circulant_tournament(spec)
    _require(len(a.colors) == m, "coloring length does not match the family")
    _require(is_valid(d, a), "start coloring is invalid")
    members = sorted(a.class_members(j))
    if len(members) == 3 and is_forbidden_triangle(spec, members):
        raise WalkPreconditionError("class is a forbidden triangle")

    wb = _WalkBuilder(d, a)
    cur = wb.current

    def fill(anchor: int, offsets: Iterable[int]) -> None:
        for t in offsets:
            v = (anchor + t) % m
            if cur[v] != j:
                wb.move(v, j)

    size = len(members)
    if size <= 1:
        anchor = members[0] if members else 0
        fill(anchor, range(n))
        return wb.walk()

    if size == 2:
        window = next((s for s in range(m)
                       if all((v - s) % m < n for v in members)), None)
        if window is not None:
            fill(window, range(n))
            return wb.walk()
        # Antipodal pair {x, x+n}: create a third member first.
        x = next(v for v in members if (v + n) % m in a.class_members(j))
        wb.move((x + n + 2) % m, j)
        members = sorted(v for v in range(m) if cur[v] == j)

    # Size >= 3: the class is a transitive tournament; grow from its source.
    mask = 0
    for v in members:
        mask |= 1 << v
    s = next(v for v in members if not d.in_bits[v] & mask)
    if (s + n + 1) % m not in members:
        fill(s, range(n))
        return wb.walk()
    fill(s, range(2, n))
    c1 = cur[(s + 1) % m]
    cn = cur[(s + n) % m]
    if a.k >= 4:
        h = next(c for c in range(1, a.k + 1) if c not in (j, c1, cn))
    elif c1 == cn:
        h = next(c for c in (1, 2, 3) if c not in (j, c1))
    else:
        h = cn
    wb.move((s + n + 1) % m, h)
    wb.move((s + 1) % m, j)
    return wb.walk()


def frozen_coloring(n_prime: int, rotation: int = 0,
                    perm: Optional[Sequence[int]] = None) -> Coloring:
    """A coloring of the reversed-top-jump tournament with no neighbors.

    On 6n'+3 vertices with palette 2n'+1, every class is a forbidden
    triangle {i, i+n, i+n+1}; those triangles are maximal acyclic sets, so
    no single vertex can change color.  ``rotation`` (0..2) and ``perm``
    range over the full isolated set, 3(2n'+1)! colorings in all.
    """
    if n_prime < 1:
        raise ColoringError("n_prime must be at least 1")
    if rotation not in (0, 1, 2):
        raise ColoringError("rotation must be 0, 1 or 2")
    k = 2 * n_prime + 1
    m = 6 * n_prime + 3
    n = 3 * n_prime + 1
    colors = [0] * m
    for t in range(n_prime + 1):
        for off in (0, n, n + 1):
            colors[(3 * t + off) % m] = 2 * t + 1
    for t in range(1, n_prime + 1):
        for off in (0, n, n + 1):
            colors[(3 * n_prime + 3 * t + off) % m] = 2 * t
    if not all(colors):
        raise AssertionError("triangle classes failed to cover the cycle")
    out = Coloring(tuple(colors), k)
    if rotation:
        out = rotate(out, CirculantSpec(n, n), rotation)
    if perm is not None:
        out = permute_colors(out, perm)
    return out


@dataclass(frozen=True)
class CFamilyColoring:
    """A 3-coloring with classes {a}, {a+1..a+n} and {a+n+1..a+2n}.

    ``class_colors`` lists the colors of those three cells in that order.
    """

    anchor: int
    class_colors: tuple[int, int, int]


def c_family(spec: CirculantSpec, member: CFamilyColoring) -> Coloring:
    """Realize a singleton-plus-two-blocks coloring of the family."""
    _require(spec.is_top_jump_reversed(),
             "reversed-top-jump family required")
    n = spec.half_order
    m = spec.num_vertices
    _require(n >= 3, "half order must be at least 3")
    cols = member.class_colors
    if sorted(cols) != [1, 2, 3]:
        raise ColoringError(
            f"{cols!r} must assign the colors 1,2,3 to the three cells")
    a = member.anchor % m
    colors = [0] * m
    colors[a] = cols[0]
    for t in range(1, n + 1):
        colors[(a + t) % m] = cols[1]
    for t in range(n + 1, 2 * n + 1):
        colors[(a + t) % m] = cols[2]
    return Coloring(tuple(colors), 3)
