"""Small helpers for finite order relations given as pairs."""

from __future__ import annotations

from typing import Hashable, Iterable, Sequence


def reflexive_transitive_closure(
    elements: Sequence[Hashable], pairs: Iterable[tuple[Hashable, Hashable]]
) -> dict[Hashable, frozenset]:
    """Map each element to the set of elements weakly above it.

    Warshall-style closure; includes x <= x for every element.
    """
    up: dict[Hashable, set] = {x: {x} for x in elements}
    for a, b in pairs:
        up[a].add(b)
    changed = True
    while changed:
        changed = False
        for x in elements:
            new = set(up[x])
            for y in up[x]:
                new |= up[y]
            if len(new) != len(up[x]):
                up[x] = new
                changed = True
    return {x: frozenset(s) for x, s in up.items()}


def antisymmetry_violation(up: dict[Hashable, frozenset]) -> tuple | None:
    """First pair (x, y) with x <= y <= x but x != y, or None."""
    for x, above in up.items():
        for y in above:
            if y != x and x in up[y]:
                return (x, y)
    return None


def covers_from_closure(
    elements: Sequence[Hashable], up: dict[Hashable, frozenset]
) -> list[tuple[Hashable, Hashable]]:
    """Transitive reduction of a finite partial order: the cover pairs."""
    out = []
    for x in elements:
        strictly_above = [y for y in elements if y != x and y in up[x]]
        for y in strictly_above:
            if not any(z != y and y in up[z] for z in strictly_above):
                out.append((x, y))
    return out


def topological_order(
    vertices: Sequence[Hashable], edges: Iterable[tuple[Hashable, Hashable]]
) -> list:
    """Kahn's algorithm. Raises ValueError if the graph has a cycle.

    Ties are broken by position in the input vertex sequence, so the
    result is deterministic.
    """
    edges = list(edges)
    indeg = {v: 0 for v in vertices}
    succ: dict[Hashable, list] = {v: [] for v in vertices}
    for u, v in edges:
        indeg[v] += 1
        succ[u].append(v)
    pos = {v: i for i, v in enumerate(vertices)}
    ready = sorted((v for v in vertices if indeg[v] == 0), key=pos.__getitem__)
    out = []
    while ready:
        v = ready.pop(0)
        out.append(v)
        changed = False
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
                changed = True
        if changed:
            ready.sort(key=pos.__getitem__)
    if len(out) != len(list(vertices)):
        stuck = [v for v in vertices if indeg[v] > 0]
        raise ValueError(f"graph has a directed cycle through {stuck}")
    return out
