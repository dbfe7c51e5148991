"""Colorings of digraphs and exhaustive enumeration of the valid ones.

A coloring assigns every vertex a color in {1..k}; it is valid when each
color class induces an acyclic subdigraph.  Classes may be empty, so the
number of valid colorings counts functions, not partitions.  Two
independent enumerators are provided: plain backtracking and the
acyclic-subset partition method; their outputs must coincide.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .digraph import (CirculantSpec, Digraph, DigraphError, _mask_is_acyclic,
                      is_acyclic_subset)

KEY_CAPACITY = 1 << 64


class ColoringError(ValueError):
    """Malformed coloring or coloring operation."""


class KeyCapacityError(ColoringError):
    """Packed keys need k^num_vertices <= 2^64."""


@dataclass(frozen=True)
class Coloring:
    """Total color assignment with palette {1..k}."""

    colors: tuple[int, ...]
    k: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ColoringError("palette size must be at least 1")
        for c in self.colors:
            if not 1 <= c <= self.k:
                raise ColoringError(f"color {c} outside 1..{self.k}")

    def __len__(self) -> int:
        return len(self.colors)

    def class_members(self, color: int) -> frozenset[int]:
        return frozenset(v for v, c in enumerate(self.colors) if c == color)

    def classes(self) -> list[frozenset[int]]:
        """Members of classes 1..k, index 0 holding class 1."""
        out = [set() for _ in range(self.k)]
        for v, c in enumerate(self.colors):
            out[c - 1].add(v)
        return [frozenset(s) for s in out]

    def partition(self) -> frozenset[frozenset[int]]:
        """The induced vertex partition (empty classes dropped)."""
        return frozenset(s for s in self.classes() if s)

    def as_text(self) -> str:
        return ",".join(str(c) for c in self.colors)


def parse_coloring(text: str, k: int) -> Coloring:
    try:
        colors = tuple(int(t) for t in text.strip().split(","))
    except ValueError as exc:
        raise ColoringError(f"unparseable coloring {text!r}") from exc
    return Coloring(colors, k)


def coloring_key(c: Coloring) -> int:
    """Pack a coloring into one integer, radix k.

    Vertex 0 is the most significant digit so that lexicographic order of
    the colors array and numeric order of keys agree.  Rejected when the
    key space does not fit in 64 bits; callers fall back to tuple keys.
    """
    if key_capacity_exceeded(len(c.colors), c.k):
        raise KeyCapacityError(
            f"{c.k}^{len(c.colors)} exceeds the 64-bit key space")
    key = 0
    for col in c.colors:
        key = key * c.k + (col - 1)
    return key


def key_capacity_exceeded(n: int, k: int) -> bool:
    return k ** n > KEY_CAPACITY


def key_function(n: int, k: int):
    """Best hashable key for colorings of this shape.

    Packed integers when they fit in 64 bits, otherwise the colors tuple
    itself (correct, just larger).
    """
    if key_capacity_exceeded(n, k):
        return lambda colors: colors
    def pack(colors: Sequence[int]) -> int:
        key = 0
        for col in colors:
            key = key * k + (col - 1)
        return key
    return pack


def is_valid(d: Digraph, c: Coloring) -> bool:
    """True iff every color class induces an acyclic subdigraph."""
    if len(c.colors) != d.num_vertices:
        raise ColoringError(
            f"coloring has {len(c.colors)} entries, digraph has "
            f"{d.num_vertices} vertices")
    masks = [0] * (c.k + 1)
    for v, col in enumerate(c.colors):
        masks[col] |= 1 << v
    in_bits = d.in_bits
    return all(_mask_is_acyclic(in_bits, m) for m in masks[1:] if m)


def first_invalid_class(d: Digraph, c: Coloring) -> Optional[int]:
    """Lowest color whose class is cyclic, or None for a valid coloring."""
    if len(c.colors) != d.num_vertices:
        raise ColoringError("coloring length mismatch")
    for col in range(1, c.k + 1):
        members = c.class_members(col)
        if members and not is_acyclic_subset(d, members):
            return col
    return None


def _class_can_take(d: Digraph, mask: int, v: int) -> bool:
    """Does class ``mask`` stay acyclic after vertex ``v`` joins?"""
    if not mask:
        return True
    if d.is_tournament:
        # An acyclic tournament class is transitive; v fits iff every
        # member beating v also beats every member v beats.
        losers = d.in_bits[v] & mask
        if not losers:
            return True
        wins = d.out_bits[v] & mask
        while wins:
            b = wins & -wins
            if losers & ~d.in_bits[b.bit_length() - 1]:
                return False
            wins ^= b
        return True
    return _mask_is_acyclic(d.in_bits, mask | (1 << v))


def enumerate_backtrack(d: Digraph, k: int,
                        vertex0_colors: Optional[Iterable[int]] = None,
                        ) -> Iterator[Coloring]:
    """Yield every valid k-coloring once, in lexicographic order.

    Per-class acyclicity is maintained incrementally during the search.
    ``vertex0_colors`` restricts the color of vertex 0, which both breaks
    symmetry for existence queries and lets callers split the search into
    independent slices.
    """
    if k < 1:
        raise ColoringError("palette size must be at least 1")
    n = d.num_vertices
    allowed0 = (frozenset(range(1, k + 1)) if vertex0_colors is None
                else frozenset(vertex0_colors))
    colors = [0] * n
    masks = [0] * (k + 1)
    v = 0
    while v >= 0:
        prev = colors[v]
        if prev:
            masks[prev] &= ~(1 << v)
        c = prev + 1
        while c <= k:
            if (v > 0 or c in allowed0) and _class_can_take(d, masks[c], v):
                break
            c += 1
        if c > k:
            colors[v] = 0
            v -= 1
            continue
        colors[v] = c
        masks[c] |= 1 << v
        if v == n - 1:
            yield Coloring(tuple(colors), k)
        else:
            v += 1


def acyclic_sets(d: Digraph) -> list[int]:
    """Bitmasks of every nonempty acyclic vertex subset.

    For circulants the list is produced the rotational way: collect the
    acyclic subsets whose induced source is vertex 0, then close under
    rotation.  Other digraphs are handled by direct subset filtering.
    The two constructions agree; tests compare them.
    """
    if d.provenance is not None:
        return _acyclic_sets_by_rotation(d)
    return _acyclic_sets_by_filter(d)


def _acyclic_sets_by_filter(d: Digraph) -> list[int]:
    n = d.num_vertices
    out = []
    in_bits = d.in_bits
    for mask in range(1, 1 << n):
        if _mask_is_acyclic(in_bits, mask):
            out.append(mask)
    return out


def _acyclic_sets_by_rotation(d: Digraph) -> list[int]:
    n = d.num_vertices
    in_bits = d.in_bits
    full = (1 << n) - 1
    rooted = []
    # Subsets with source 0 live inside {0} + out-neighborhood of 0.
    cands = [v for v in range(1, n) if (d.out_bits[0] >> v) & 1]
    for pick in range(1 << len(cands)):
        mask = 1
        for i, v in enumerate(cands):
            if (pick >> i) & 1:
                mask |= 1 << v
        if _mask_is_acyclic(in_bits, mask):
            rooted.append(mask)
    seen = set()
    for mask in rooted:
        for shift in range(n):
            rot = ((mask << shift) | (mask >> (n - shift))) & full
            seen.add(rot)
    return sorted(seen)


def enumerate_by_partitions(d: Digraph, k: int) -> Iterator[Coloring]:
    """Enumerate valid k-colorings through acyclic-set partitions.

    Steps: list every acyclic subset, cover the vertex set with disjoint
    cells from that list (at most k of them), then hand the cells every
    assignment of k distinct colors.  The output set equals the
    backtracking enumerator's.
    """
    if k < 1:
        raise ColoringError("palette size must be at least 1")
    n = d.num_vertices
    sets = acyclic_sets(d)
    by_low = [[] for _ in range(n)]
    for mask in sets:
        by_low[(mask & -mask).bit_length() - 1].append(mask)
    full = (1 << n) - 1

    def covers(remaining: int, room: int) -> Iterator[list[int]]:
        if not remaining:
            yield []
            return
        if not room:
            return
        low = (remaining & -remaining).bit_length() - 1
        for cell in by_low[low]:
            if cell & ~remaining:
                continue
            for rest in covers(remaining & ~cell, room - 1):
                yield [cell] + rest

    from itertools import permutations

    for cells in covers(full, k):
        for chosen in permutations(range(1, k + 1), len(cells)):
            colors = [0] * n
            for cell, col in zip(cells, chosen):
                m = cell
                while m:
                    b = m & -m
                    colors[b.bit_length() - 1] = col
                    m ^= b
            yield Coloring(tuple(colors), k)


def permute_colors(c: Coloring, p: Sequence[int]) -> Coloring:
    """Relabel colors by the permutation p, where p[i-1] replaces color i."""
    if sorted(p) != list(range(1, c.k + 1)):
        raise ColoringError(f"{p!r} is not a permutation of 1..{c.k}")
    return Coloring(tuple(p[col - 1] for col in c.colors), c.k)


def rotate(c: Coloring, spec: CirculantSpec, shift: int) -> Coloring:
    """Rotate a circulant's coloring by ``shift`` places.

    The result assigns to vertex i+shift the color of vertex i.  Rotation
    is a digraph automorphism of any circulant, so validity is preserved.
    """
    m = spec.num_vertices
    if len(c.colors) != m:
        raise DigraphError("coloring length does not match the circulant")
    out = [0] * m
    for i, col in enumerate(c.colors):
        out[(i + shift) % m] = col
    return Coloring(tuple(out), c.k)
