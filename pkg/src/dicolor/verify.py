"""Named desk-scale checks of the known facts about these families.

Every check builds the relevant object (usually a dicoloring graph, by
exhaustive enumeration plus BFS) and compares the outcome against an
embedded expected value or bound.  Checks are registered under stable
claim ids; ``run_all`` executes the registry deterministically and skips
anything whose estimated state space exceeds the budget.
"""

from __future__ import annotations

import json
import math
import os
import time
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Callable, Iterable, Optional

from .digraph import (CirculantSpec, Digraph, circulant_tournament,
                      delete_vertex, dichromatic_number, is_acyclic_subset,
                      is_forbidden_triangle, two_coloring_partitions)
from .coloring import (Coloring, enumerate_backtrack, enumerate_by_partitions,
                       key_function)
from .reconfig import (DicoloringGraph, analyze, build, components,
                       degree_extrema, diameter_radius, distance,
                       isolated_count)
from .walks import (CFamilyColoring, c_family, extend_class_to_interval,
                    frozen_coloring, validate_walk, walk_singleton_classes,
                    walk_singletons_plus_pair)

DEFAULT_BUDGET = 50_000_000
BUDGET_ENV = "DICOLOR_BUDGET"


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw:
        try:
            return int(raw)
        except ValueError:
            pass
    return DEFAULT_BUDGET


@dataclass
class ClaimResult:
    """Outcome of one named check."""

    claim_id: str
    parameters: dict
    expected: dict
    observed: dict
    verdict: str  # "pass" | "fail" | "skipped"
    reason: Optional[str] = None
    runtime_ms: int = 0

    def to_dict(self) -> dict:
        return {
            "claim_id": self.claim_id,
            "parameters": self.parameters,
            "expected": self.expected,
            "observed": self.observed,
            "verdict": self.verdict,
            "reason": self.reason,
            "runtime_ms": self.runtime_ms,
        }


def _finish(claim_id: str, params: dict, expected: dict, observed: dict,
            ok: bool, t0: float) -> ClaimResult:
    return ClaimResult(claim_id, params, expected, observed,
                       "pass" if ok else "fail",
                       None, int((time.monotonic() - t0) * 1000))


def _skip(claim_id: str, params: dict, reason: str) -> ClaimResult:
    return ClaimResult(claim_id, params, {}, {}, "skipped", reason, 0)


def state_space(k: int, num_vertices: int) -> int:
    return k ** num_vertices


_GRAPH_CACHE: dict = {}


def _built(d: Digraph, k: int) -> DicoloringGraph:
    key = (d.num_vertices, d.arcs, k)
    g = _GRAPH_CACHE.get(key)
    if g is None:
        g = _GRAPH_CACHE[key] = build(d, k)
    return g


def clear_cache() -> None:
    _GRAPH_CACHE.clear()


# --- embedded reference statistics for the 7-vertex reversed-jump case ------

REFERENCE_ROWS = {
    3: dict(order=504, size=1_512, connected=True, min_degree=6,
            max_degree=6, diameter=8, radius=7, girth=3),
    4: dict(order=7_560, size=54_684, connected=True, min_degree=13,
            max_degree=15, diameter=8, radius=7, girth=3),
    5: dict(order=47_880, size=536_760, connected=True, min_degree=20,
            max_degree=24, diameter=8, radius=7, girth=3),
    6: dict(order=199_080, size=2_997_540, connected=True, min_degree=27,
            max_degree=33, diameter=8, radius=7, girth=3),
}


def check_table1(k: int, budget: Optional[int] = None,
                 threads: int = 1) -> ClaimResult:
    """All eight statistics of the 7-vertex reversed-jump dicoloring graph."""
    t0 = time.monotonic()
    cid = f"reference-stats-k{k}"
    params = {"n": 3, "reversed": 3, "k": k}
    if k not in REFERENCE_ROWS:
        raise ValueError(f"no reference row for k={k}")
    budget = default_budget() if budget is None else budget
    if state_space(k, 7) > budget:
        return _skip(cid, params, f"state space {k}^7 exceeds budget {budget}")
    d = circulant_tournament(CirculantSpec(3, 3))
    rep = analyze(d, k, threads=threads, graph=_built(d, k))
    observed = dict(order=rep.order, size=rep.size,
                    connected=rep.is_connected, min_degree=rep.min_degree,
                    max_degree=rep.max_degree, diameter=rep.diameter,
                    radius=rep.radius, girth=rep.girth)
    expected = REFERENCE_ROWS[k]
    return _finish(cid, params, expected, observed,
                   observed == expected, t0)


def check_cycle_structure(n: int) -> ClaimResult:
    """D_2 of the cyclic tournament is the cycle on 4n+2 colorings."""
    t0 = time.monotonic()
    cid = f"cycle-structure-n{n}"
    d = circulant_tournament(CirculantSpec(n, None))
    g = _built(d, 2)
    _, sizes = components(g)
    degs = degree_extrema(g) if g.order else (None, None)
    diam = rad = None
    if len(sizes) == 1 and g.order > 1:
        diam, rad = diameter_radius(g)
    observed = dict(order=g.order, connected=len(sizes) == 1,
                    min_degree=degs[0], max_degree=degs[1], diameter=diam)
    expected = dict(order=4 * n + 2, connected=True, min_degree=2,
                    max_degree=2, diameter=2 * n + 1)
    return _finish(cid, {"n": n}, expected, observed,
                   observed == expected, t0)


def check_unique_colorable(d: Digraph, k: int,
                           claim_id: Optional[str] = None,
                           expected_partition: Optional[Iterable[Iterable[int]]] = None,
                           ) -> ClaimResult:
    """Uniquely k-colorable digraphs freeze into k! isolated colorings."""
    t0 = time.monotonic()
    cid = claim_id or f"uniquely-colorable-k{k}"
    g = _built(d, k)
    partitions = {Coloring(cols, k).partition() for cols in g.colorings}
    labels = d.original_labels or tuple(range(d.num_vertices))
    seen_parts = sorted(
        sorted(sorted(labels[v] for v in cell) for cell in part)
        for part in partitions)
    observed = dict(order=g.order, num_partitions=len(partitions),
                    isolated=isolated_count(g),
                    partitions=seen_parts)
    expected = dict(order=math.factorial(k), num_partitions=1,
                    isolated=math.factorial(k))
    ok = (observed["order"] == expected["order"]
          and observed["num_partitions"] == 1
          and observed["isolated"] == expected["isolated"])
    if expected_partition is not None:
        want = sorted(sorted(cell) for cell in expected_partition)
        expected["partitions"] = [want]
        ok = ok and seen_parts == [want]
    return _finish(cid, {"digraph": d.describe(), "k": k},
                   expected, observed, ok, t0)


_BOUND_FORMULAS = {
    # (family, selector) -> bound description
}


def diameter_bound_formula(family: str, n: int, k: int) -> tuple[str, int, bool]:
    """(claim label, bound, connectivity expected) for a family instance.

    ``family`` is "cyclic" (no reversed jump) or "reversed" (top jump
    reversed).  For the reversed family at k = (2n+1)/3 the bound applies
    to the non-frozen component and the graph is expectedly disconnected.
    """
    m = 2 * n + 1
    if family == "cyclic":
        if k < 3:
            raise ValueError("bounds start at palette 3")
        return "cyclic", 4 * n + 1 + (n + 1) // 2, True
    if family != "reversed":
        raise ValueError(f"unknown family {family!r}")
    if n == 3:
        return "reversed-7", 8, True
    if 3 * k == m:
        return "reversed-frozen", m + m // 4, False
    if k == 3:
        if n < 5:
            raise ValueError("palette-3 bound needs n >= 5")
        return "reversed-3", 3 * n + 4 + m // 3, True
    return "reversed-wide", 4 * n + 2 + n // 2, True


def check_diameter_bound(family: str, n: int, k: int,
                         budget: Optional[int] = None,
                         threads: int = 1) -> ClaimResult:
    """BFS diameter against the family's proven upper bound.

    Upper-bound checks never fail on slack; the observed exact value is
    recorded so tightness can be inspected.
    """
    t0 = time.monotonic()
    cid = f"diameter-bound-{family}-n{n}-k{k}"
    params = {"family": family, "n": n, "k": k}
    budget = default_budget() if budget is None else budget
    m = 2 * n + 1
    if state_space(k, m) > budget:
        return _skip(cid, params,
                     f"state space {k}^{m} exceeds budget {budget}")
    label, bound, connected_expected = diameter_bound_formula(family, n, k)
    spec = CirculantSpec(n, None if family == "cyclic" else n)
    d = circulant_tournament(spec)
    g = _built(d, k)
    _, sizes = components(g)
    is_conn = len(sizes) == 1
    scope = "whole" if is_conn else "largest_component"
    diam, _ = diameter_radius(g, scope=scope, threads=threads)
    observed = dict(connected=is_conn, diameter=diam, scope=scope)
    expected = dict(connected=connected_expected,
                    diameter_at_most=bound)
    ok = is_conn == connected_expected and diam <= bound
    return _finish(cid, params, expected, observed, ok, t0)


def check_frozen_census(n_prime: int,
                        budget: Optional[int] = None) -> ClaimResult:
    """The isolated colorings at k=(2n+1)/3 are exactly the frozen family."""
    t0 = time.monotonic()
    cid = f"frozen-census-{n_prime}"
    k = 2 * n_prime + 1
    m = 6 * n_prime + 3
    n = 3 * n_prime + 1
    params = {"n_prime": n_prime, "n": n, "k": k}
    budget = default_budget() if budget is None else budget
    if state_space(k, m) > budget:
        return _skip(cid, params,
                     f"state space {k}^{m} exceeds budget {budget}")
    spec = CirculantSpec(n, n)
    d = circulant_tournament(spec)
    g = _built(d, k)
    frozen = set()
    triangles_ok = True
    for rot in (0, 1, 2):
        for p in permutations(range(1, k + 1)):
            c = frozen_coloring(n_prime, rot, p)
            frozen.add(c.colors)
            triangles_ok = triangles_ok and all(
                is_forbidden_triangle(spec, cls)
                for cls in c.classes() if cls)
    iso = {g.colorings[i] for i in range(g.order) if g.degree(i) == 0}
    _, sizes = components(g)
    non_singleton = [s for s in sizes if s > 1]
    observed = dict(isolated=len(iso),
                    constructed=len(frozen),
                    isolated_equals_constructed=iso == frozen,
                    classes_are_forbidden_triangles=triangles_ok,
                    further_components=len(non_singleton))
    expected = dict(isolated=3 * math.factorial(k),
                    constructed=3 * math.factorial(k),
                    isolated_equals_constructed=True,
                    classes_are_forbidden_triangles=True,
                    further_components=1)
    return _finish(cid, params, expected, observed, observed == expected, t0)


def check_c_family_distances(n: int,
                             budget: Optional[int] = None) -> ClaimResult:
    """Distances inside the singleton-plus-two-blocks coloring family."""
    t0 = time.monotonic()
    cid = f"c-family-distances-n{n}"
    m = 2 * n + 1
    params = {"n": n}
    budget = default_budget() if budget is None else budget
    if state_space(3, m) > budget:
        return _skip(cid, params,
                     f"state space 3^{m} exceeds budget {budget}")
    spec = CirculantSpec(n, n)
    d = circulant_tournament(spec)
    g = _built(d, 3)
    key_of = key_function(m, 3)
    members = []
    for a in range(m):
        for cols in permutations((1, 2, 3)):
            c = c_family(spec, CFamilyColoring(a, cols))
            members.append((cols[0], g.index_of[key_of(c.colors)]))
    max_all = 0
    max_diff_singleton = 0
    offsets, targets = g.offsets, g.targets
    for i, (col_i, idx_i) in enumerate(members):
        dist = [-1] * g.order
        dist[idx_i] = 0
        frontier = [idx_i]
        level = 0
        while frontier:
            nxt = []
            level += 1
            for x in frontier:
                for y in targets[offsets[x]:offsets[x + 1]]:
                    if dist[y] < 0:
                        dist[y] = level
                        nxt.append(y)
            frontier = nxt
        for col_j, idx_j in members[i + 1:]:
            dd = dist[idx_j]
            if dd < 0:
                return _finish(cid, params,
                               {"all_reachable": True},
                               {"all_reachable": False}, False, t0)
            max_all = max(max_all, dd)
            if col_i != col_j:
                max_diff_singleton = max(max_diff_singleton, dd)
    observed = dict(max_distance=max_all,
                    max_distance_different_singletons=max_diff_singleton)
    expected = dict(max_distance_at_most=3 * n - 1,
                    max_distance_different_singletons_at_most=2 * n + 1)
    ok = (max_all <= 3 * n - 1
          and max_diff_singleton <= 2 * n + 1)
    return _finish(cid, params, expected, observed, ok, t0)


def digon_example() -> Digraph:
    """Three vertices a,b,c (0,1,2): arcs b->c, c->a and the digon a<->b."""
    return Digraph(3, frozenset({(1, 2), (2, 0), (0, 1), (1, 0)}))


def check_figure1() -> ClaimResult:
    """A digon forces a disconnected 2-dicoloring graph: 4 colorings, 2 edges."""
    t0 = time.monotonic()
    cid = "digon-disconnected"
    d = digon_example()
    g = build(d, 2)
    _, sizes = components(g)
    key_of = key_function(3, 2)
    # (1,2,2) and (1,2,1) differ on the last vertex only.
    adjacent = (g.index_of[key_of((1, 2, 1))] in
                set(g.neighbors_of(g.index_of[key_of((1, 2, 2))])))
    non_adjacent = (g.index_of[key_of((2, 1, 2))] not in
                    set(g.neighbors_of(g.index_of[key_of((1, 2, 2))])))
    observed = dict(order=g.order, size=g.size, components=len(sizes),
                    digon_pair_adjacent=adjacent,
                    cross_pair_non_adjacent=non_adjacent)
    expected = dict(order=4, size=2, components=2,
                    digon_pair_adjacent=True, cross_pair_non_adjacent=True)
    return _finish(cid, {}, expected, observed, observed == expected, t0)


def check_n_plus_one_mixing(d: Digraph,
                            budget: Optional[int] = None,
                            claim_id: Optional[str] = None) -> ClaimResult:
    """Order-n digraphs are k-mixing for k >= n-1 with diameter <= 2n."""
    t0 = time.monotonic()
    n = d.num_vertices
    cid = claim_id or f"high-palette-mixing-{d.describe().replace(' ', '-')}"
    params = {"digraph": d.describe(), "n": n}
    budget = default_budget() if budget is None else budget
    results = {}
    ok = True
    for k in range(max(1, n - 1), n + 2):
        if state_space(k, n) > budget:
            return _skip(cid, params,
                         f"state space {k}^{n} exceeds budget {budget}")
        g = build(d, k)
        _, sizes = components(g)
        conn = len(sizes) == 1
        diam = None
        if conn and g.order > 1:
            diam, _ = diameter_radius(g)
        elif g.order == 1:
            diam = 0
        results[f"k{k}"] = dict(connected=conn, diameter=diam)
        ok = ok and conn and (diam is not None and diam <= 2 * n)
    expected = {f"k{k}": dict(connected=True, diameter_at_most=2 * n)
                for k in range(max(1, n - 1), n + 2)}
    return _finish(cid, params, expected, results, ok, t0)


def check_two_coloring_partition_form(n: int) -> ClaimResult:
    """Valid 2-colorings of the cyclic tournament follow the interval shape.

    Also checks the triangle clause: a 3-set avoiding every half interval
    {a..a+n} induces a directed triangle.
    """
    t0 = time.monotonic()
    cid = f"two-coloring-partition-form-n{n}"
    spec = CirculantSpec(n, None)
    d = circulant_tournament(spec)
    m = 2 * n + 1
    listed = {frozenset(p) for p in two_coloring_partitions(spec)}
    seen = {c.partition() for c in enumerate_backtrack(d, 2)}
    cells_acyclic = all(is_acyclic_subset(d, cell)
                        for p in listed for cell in p)
    halves = [{(a + t) % m for t in range(n + 1)} for a in range(m)]
    triangle_clause = True
    for trip in combinations(range(m), 3):
        outside = not any(set(trip) <= h for h in halves)
        cyclic = not is_acyclic_subset(d, trip)
        if outside != cyclic:
            triangle_clause = False
            break
    observed = dict(num_partitions=len(listed),
                    enumerated_match=seen == listed,
                    cells_acyclic=cells_acyclic,
                    triangle_clause=triangle_clause)
    expected = dict(num_partitions=m, enumerated_match=True,
                    cells_acyclic=True, triangle_clause=True)
    return _finish(cid, {"n": n}, expected, observed,
                   observed == expected, t0)


def check_max_acyclic_shapes(n: int) -> ClaimResult:
    """Acyclic sets of the reversed-jump family: size cap and the two shapes.

    Forbidden triangles are maximal: every fourth vertex creates a cycle.
    """
    t0 = time.monotonic()
    cid = f"max-acyclic-shapes-n{n}"
    spec = CirculantSpec(n, n)
    d = circulant_tournament(spec)
    m = 2 * n + 1
    max_size = 0
    shapes_ok = True
    from .digraph import classify_max_acyclic
    for size in range(1, n + 2):
        for sub in combinations(range(m), size):
            if not is_acyclic_subset(d, sub):
                continue
            max_size = max(max_size, size)
            if size == n:
                if classify_max_acyclic(spec, sub) not in ("interval",
                                                           "gapped"):
                    shapes_ok = False
    triangles_maximal = True
    for i in range(m):
        tri = {i, (i + n) % m, (i + n + 1) % m}
        if not is_acyclic_subset(d, tri):
            triangles_maximal = False
        for extra in range(m):
            if extra in tri:
                continue
            if is_acyclic_subset(d, tri | {extra}):
                triangles_maximal = False
    observed = dict(max_acyclic_size=max_size, shapes_classified=shapes_ok,
                    forbidden_triangles_maximal=triangles_maximal,
                    dichromatic=dichromatic_number(d))
    expected = dict(max_acyclic_size=n, shapes_classified=True,
                    forbidden_triangles_maximal=True, dichromatic=3)
    return _finish(cid, {"n": n}, expected, observed,
                   observed == expected, t0)


def check_extend_interval_bound(n: int, k: int,
                                budget: Optional[int] = None) -> ClaimResult:
    """Every non-forbidden class extends to an n-interval within its bound."""
    t0 = time.monotonic()
    cid = f"extend-interval-n{n}-k{k}"
    m = 2 * n + 1
    params = {"n": n, "k": k}
    budget = default_budget() if budget is None else budget
    if state_space(k, m) > budget:
        return _skip(cid, params,
                     f"state space {k}^{m} exceeds budget {budget}")
    spec = CirculantSpec(n, n)
    d = circulant_tournament(spec)
    checked = 0
    ok = True
    for c in enumerate_backtrack(d, k):
        cls = c.class_members(1)
        if len(cls) == 3 and is_forbidden_triangle(spec, cls):
            continue
        walk = extend_class_to_interval(spec, c, 1)
        bound = (n - len(cls) if len(cls) <= 1 else n + 2 - len(cls))
        end_cls = sorted(walk.end.class_members(1))
        interval = any(all((v - s) % m < n for v in end_cls)
                       and len(end_cls) == n for s in end_cls)
        if (validate_walk(d, walk) is not None or walk.length > bound
                or not interval):
            ok = False
            break
        checked += 1
    observed = dict(instances=checked, all_within_bound=ok)
    expected = dict(all_within_bound=True)
    return _finish(cid, params, expected, observed, ok, t0)


def check_walk_singletons(order: int) -> ClaimResult:
    """Walks into all-singleton targets stay within the class-count bound."""
    t0 = time.monotonic()
    cid = f"singleton-walks-order{order}"
    d = Digraph(order, frozenset((u, v) for u in range(order)
                                 for v in range(u + 1, order)))
    k = order
    b = Coloring(tuple(range(1, order + 1)), k)
    classes = list(range(1, k + 1))
    checked = 0
    ok = True
    for c in enumerate_backtrack(d, k):
        walk = walk_singleton_classes(d, c, b, classes)
        if (validate_walk(d, walk) is not None
                or walk.length > k
                or walk.end.colors != b.colors):
            ok = False
            break
        checked += 1
    observed = dict(instances=checked, all_within_bound=ok)
    return _finish(cid, {"order": order}, dict(all_within_bound=True),
                   observed, ok, t0)


def check_walk_singleton_pair(order: int) -> ClaimResult:
    """Walks into a pair-plus-singletons target stay within bound."""
    t0 = time.monotonic()
    cid = f"pair-walks-order{order}"
    d = Digraph(order, frozenset((u, v) for u in range(order)
                                 for v in range(u + 1, order)))
    k = order - 1
    # Target: vertices 0,1 share color 1, the rest get singleton colors.
    cols = [1, 1] + list(range(2, k + 1))
    b = Coloring(tuple(cols), k)
    singles = list(range(2, k + 1))
    checked = 0
    ok = True
    for c in enumerate_backtrack(d, k):
        walk = walk_singletons_plus_pair(d, c, b, 1, singles)
        if (validate_walk(d, walk) is not None
                or walk.length > k + 1
                or walk.end.colors != b.colors):
            ok = False
            break
        checked += 1
    observed = dict(instances=checked, all_within_bound=ok)
    return _finish(cid, {"order": order}, dict(all_within_bound=True),
                   observed, ok, t0)


def check_enumeration_cross(n: int, reversed_jump: Optional[int],
                            k: int) -> ClaimResult:
    """The two enumerators produce identical coloring sets."""
    t0 = time.monotonic()
    j = "none" if reversed_jump is None else reversed_jump
    cid = f"enumeration-cross-n{n}-j{j}-k{k}"
    d = circulant_tournament(CirculantSpec(n, reversed_jump))
    bt = {c.colors for c in enumerate_backtrack(d, k)}
    pm = {c.colors for c in enumerate_by_partitions(d, k)}
    observed = dict(backtrack=len(bt), partition=len(pm), equal=bt == pm)
    expected = dict(equal=True)
    return _finish(cid, {"n": n, "reversed": j, "k": k}, expected, observed,
                   bt == pm, t0)


def check_distance_witness(k: int,
                           budget: Optional[int] = None) -> ClaimResult:
    """The two named 7-vertex colorings sit at distance exactly 8."""
    t0 = time.monotonic()
    cid = f"distance-witness-k{k}"
    params = {"k": k}
    budget = default_budget() if budget is None else budget
    if state_space(k, 7) > budget:
        return _skip(cid, params, f"state space {k}^7 exceeds budget {budget}")
    d = circulant_tournament(CirculantSpec(3, 3))
    a = Coloring((1, 1, 1, 2, 2, 2, 3), k)
    b = Coloring((2, 2, 2, 3, 1, 1, 1), k)
    observed = dict(distance=distance(d, k, a, b))
    expected = dict(distance=8)
    return _finish(cid, params, expected, observed,
                   observed == expected, t0)


def _unique_colorable_digraph(n: int) -> Digraph:
    return delete_vertex(circulant_tournament(CirculantSpec(n, n)), 0)


# --- registry ----------------------------------------------------------------


@dataclass(frozen=True)
class ClaimSpec:
    claim_id: str
    run: Callable[..., ClaimResult]
    heavy: bool = False


def _registry() -> list[ClaimSpec]:
    specs: list[ClaimSpec] = []

    def add(cid, fn, heavy=False):
        specs.append(ClaimSpec(cid, fn, heavy))

    add("digon-disconnected", lambda budget, threads: check_figure1())
    for n in (2, 3, 4):
        add(f"two-coloring-partition-form-n{n}",
            lambda budget, threads, n=n: check_two_coloring_partition_form(n))
    for n in range(1, 7):
        add(f"cycle-structure-n{n}",
            lambda budget, threads, n=n: check_cycle_structure(n))
    for n in (4, 5):
        add(f"uniquely-2-colorable-n{n}",
            lambda budget, threads, n=n: check_unique_colorable(
                _unique_colorable_digraph(n), 2,
                claim_id=f"uniquely-2-colorable-n{n}",
                expected_partition=[list(range(1, n + 1)),
                                    list(range(n + 1, 2 * n + 1))]))
    add("singleton-walks-order5",
        lambda budget, threads: check_walk_singletons(5))
    add("pair-walks-order5",
        lambda budget, threads: check_walk_singleton_pair(5))
    add("high-palette-mixing-cyc5",
        lambda budget, threads: check_n_plus_one_mixing(
            circulant_tournament(CirculantSpec(2, None)), budget,
            claim_id="high-palette-mixing-cyc5"))
    add("high-palette-mixing-rev5",
        lambda budget, threads: check_n_plus_one_mixing(
            circulant_tournament(CirculantSpec(2, 2)), budget,
            claim_id="high-palette-mixing-rev5"))
    for n in (4, 5, 6):
        add(f"max-acyclic-shapes-n{n}",
            lambda budget, threads, n=n: check_max_acyclic_shapes(n))
    for n, k in ((2, 3), (3, 3), (4, 3)):
        add(f"diameter-bound-cyclic-n{n}-k{k}",
            lambda budget, threads, n=n, k=k: check_diameter_bound(
                "cyclic", n, k, budget, threads))
    add("extend-interval-n4-k3",
        lambda budget, threads: check_extend_interval_bound(4, 3, budget))
    for n in (3, 4):
        add(f"c-family-distances-n{n}",
            lambda budget, threads, n=n: check_c_family_distances(n, budget))
    for n, j, k in ((2, None, 3), (3, 3, 3), (4, 4, 3)):
        jj = "none" if j is None else j
        add(f"enumeration-cross-n{n}-j{jj}-k{k}",
            lambda budget, threads, n=n, j=j, k=k: check_enumeration_cross(
                n, j, k))
    for k in (3, 4, 5):
        add(f"reference-stats-k{k}",
            lambda budget, threads, k=k: check_table1(k, budget, threads))
    add("reference-stats-k6",
        lambda budget, threads: check_table1(6, budget, threads), heavy=True)
    for k in (3, 4, 5):
        add(f"distance-witness-k{k}",
            lambda budget, threads, k=k: check_distance_witness(k, budget))
    add("frozen-census-1",
        lambda budget, threads: check_frozen_census(1, budget))
    add("diameter-bound-reversed-n5-k3",
        lambda budget, threads: check_diameter_bound(
            "reversed", 5, 3, budget, threads))
    add("diameter-bound-reversed-n4-k4",
        lambda budget, threads: check_diameter_bound(
            "reversed", 4, 4, budget, threads))
    add("diameter-bound-reversed-n4-k3",
        lambda budget, threads: check_diameter_bound(
            "reversed", 4, 3, budget, threads))
    return specs


def claim_ids(include_heavy: bool = True) -> list[str]:
    return [s.claim_id for s in _registry() if include_heavy or not s.heavy]


def run_all(budget: Optional[int] = None, heavy: bool = False,
            claims: Optional[Iterable[str]] = None,
            threads: int = 1) -> list[ClaimResult]:
    """Execute the claim registry in its fixed order.

    Heavy claims are skipped unless requested; anything beyond the budget
    is skipped with a reason.  Verdicts and observed values are
    deterministic across runs.
    """
    budget = default_budget() if budget is None else budget
    wanted = None if claims is None else set(claims)
    if wanted is not None:
        known = {s.claim_id for s in _registry()}
        unknown = wanted - known
        if unknown:
            raise ValueError(f"unknown claim ids: {sorted(unknown)}")
    results = []
    for spec in _registry():
        if wanted is not None and spec.claim_id not in wanted:
            continue
        if spec.heavy and not heavy and (wanted is None
                                         or spec.claim_id not in wanted):
            results.append(_skip(spec.claim_id, {},
                                 "heavy claim, rerun with --heavy"))
            continue
        results.append(spec.run(budget, threads))
    return results


def summarize(results: list[ClaimResult]) -> dict:
    return {
        "passed": sum(1 for r in results if r.verdict == "pass"),
        "failed": sum(1 for r in results if r.verdict == "fail"),
        "skipped": sum(1 for r in results if r.verdict == "skipped"),
        "results": [r.to_dict() for r in results],
    }


def results_to_json(results: list[ClaimResult]) -> str:
    return json.dumps(summarize(results), indent=2) + "\n"
