"""Chain/antichain bottleneck duality on lattice-weighted finite posets.

Two independent routes are provided: direct enumeration of maximal
chains and maximal antichains, and a reduction to bottleneck duality on
an auxiliary flow network whose paths correspond one-to-one with maximal
chains. The two routes always agree on the chain side. The antichain
side matches the network's cut side only on posets where every maximal
antichain meets every maximal chain; :func:`check_correspondences`
reports exactly where the antichain/cut correspondence breaks (the
four-element poset a<c, a<d, b<d is the smallest example -- the maximal
antichain {b, c} misses the maximal chain {a, d}).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping

from .bottleneck import verify_duality
from .errors import CapExceeded
from .lattices import Element, Lattice
from .network import (
    CapacityAssignment,
    FlowNetwork,
    crossing_edges,
    enumerate_paths,
    minimal_cuts,
)
from .orderutils import (
    antisymmetry_violation,
    covers_from_closure,
    reflexive_transitive_closure,
)

DEFAULT_MAX_CHAINS = 1_000_000
DEFAULT_MAX_POSET = 20


class WeightedPoset:
    """Finite poset with an element-to-lattice-element weight map.

    Order input may be cover pairs or any relation pairs; the transitive
    closure is taken and the stored cover relation is its transitive
    reduction, so Hasse-diagram-style input round-trips unchanged.
    """

    def __init__(
        self,
        elements: Iterable[str],
        relations: Iterable[tuple[str, str]],
        weights: Mapping[str, Element],
        lattice: Lattice,
    ):
        elems = tuple(elements)
        if not elems:
            raise ValueError("poset needs at least one element")
        if len(set(elems)) != len(elems):
            raise ValueError("poset has duplicate element names")
        eset = set(elems)
        relations = [tuple(r) for r in relations]
        for a, b in relations:
            if a not in eset or b not in eset:
                raise ValueError(f"order pair ({a!r}, {b!r}) mentions unknown elements")
            if a == b:
                raise ValueError(f"order pair ({a!r}, {b!r}) is reflexive")
        up = reflexive_transitive_closure(elems, relations)
        bad = antisymmetry_violation(up)
        if bad is not None:
            raise ValueError(f"order relation has a cycle through {bad}")
        missing = [x for x in elems if x not in weights]
        if missing:
            raise ValueError(f"elements without weights: {missing}")
        for x in elems:
            lattice.check(weights[x])
        self.elements = elems
        self.lattice = lattice
        self.weights = {x: weights[x] for x in elems}
        self._up = up
        self.covers = tuple(covers_from_closure(elems, up))

    def leq(self, x: str, y: str) -> bool:
        return y in self._up[x]

    def comparable(self, x: str, y: str) -> bool:
        return self.leq(x, y) or self.leq(y, x)

    def minimal_elements(self) -> tuple[str, ...]:
        return tuple(
            x for x in self.elements if not any(y != x and self.leq(y, x) for y in self.elements)
        )

    def maximal_elements(self) -> tuple[str, ...]:
        return tuple(
            x for x in self.elements if not any(y != x and self.leq(x, y) for y in self.elements)
        )

    def cover_successors(self, x: str) -> tuple[str, ...]:
        return tuple(b for a, b in self.covers if a == x)

    def __repr__(self):
        return f"WeightedPoset({len(self.elements)} elements, {len(self.covers)} covers)"


def maximal_chains(poset: WeightedPoset, max_chains: int = DEFAULT_MAX_CHAINS) -> list[tuple[str, ...]]:
    """All maximal chains as ascending element sequences.

    A maximal chain is exactly a cover-walk from a minimal element to a
    maximal element, so this is a DFS over the cover relation, minimal
    elements and successors taken in element order.
    """
    order = {x: i for i, x in enumerate(poset.elements)}
    out: list[tuple[str, ...]] = []
    chain: list[str] = []

    def walk(x: str):
        chain.append(x)
        succ = sorted(poset.cover_successors(x), key=order.__getitem__)
        if not succ:
            if len(out) >= max_chains:
                raise CapExceeded(f"more than {max_chains} maximal chains")
            out.append(tuple(chain))
        else:
            for y in succ:
                walk(y)
        chain.pop()

    for m in sorted(poset.minimal_elements(), key=order.__getitem__):
        walk(m)
    return out


def maximal_antichains(
    poset: WeightedPoset, max_elements: int = DEFAULT_MAX_POSET
) -> list[tuple[str, ...]]:
    """All maximal antichains as element tuples in element order."""
    n = len(poset.elements)
    if n > max_elements:
        raise CapExceeded(f"antichain enumeration capped at {max_elements} elements")
    elems = poset.elements
    out = []
    for mask in range(1, 2**n):
        members = [elems[i] for i in range(n) if mask >> i & 1]
        if any(poset.comparable(x, y) for x, y in itertools.combinations(members, 2)):
            continue
        mset = set(members)
        if any(
            x not in mset and not any(poset.comparable(x, y) for y in members)
            for x in elems
        ):
            continue
        out.append(tuple(members))
    return out


def chain_value(poset: WeightedPoset, chain: Iterable[str]) -> Element:
    return poset.lattice.meet_all(poset.weights[x] for x in chain)


def antichain_value(poset: WeightedPoset, antichain: Iterable[str]) -> Element:
    return poset.lattice.join_all(poset.weights[x] for x in antichain)


@dataclass(frozen=True)
class DilworthReport:
    lhs: Element  # chain side: join over maximal chains of the weight meet
    rhs: Element  # antichain side: meet over maximal antichains of the weight join
    equal: bool
    chains: tuple[tuple[str, ...], ...]
    antichains: tuple[tuple[str, ...], ...]
    chain_values: tuple
    antichain_values: tuple
    method: str  # "direct" or "network"

    def to_dict(self, lattice: Lattice) -> dict:
        return {
            "lhs": lattice.literal(self.lhs),
            "rhs": lattice.literal(self.rhs),
            "equal": self.equal,
            "method": self.method,
            "chains": [list(c) for c in self.chains],
            "chain_values": [lattice.literal(v) for v in self.chain_values],
            "antichains": [list(a) for a in self.antichains],
            "antichain_values": [lattice.literal(v) for v in self.antichain_values],
        }


def dilworth_direct(poset: WeightedPoset) -> DilworthReport:
    """Both duality sides by direct enumeration of chains and antichains."""
    chains = maximal_chains(poset)
    antichains = maximal_antichains(poset)
    chain_values = [chain_value(poset, c) for c in chains]
    antichain_values = [antichain_value(poset, a) for a in antichains]
    lhs = poset.lattice.join_all(chain_values)
    rhs = poset.lattice.meet_all(antichain_values)
    return DilworthReport(
        lhs=lhs,
        rhs=rhs,
        equal=lhs == rhs,
        chains=tuple(chains),
        antichains=tuple(antichains),
        chain_values=tuple(chain_values),
        antichain_values=tuple(antichain_values),
        method="direct",
    )


def _fresh_name(base: str, taken) -> str:
    name = base
    while name in taken:
        name = "_" + name
    return name


def auxiliary_network(poset: WeightedPoset) -> tuple[FlowNetwork, CapacityAssignment]:
    """The flow network whose source-to-sink paths are the maximal chains.

    A fresh source points at every minimal element, every maximal element
    points at a fresh sink, and internal edges are the cover pairs. Cover
    and sink edges (x, y) carry the weight of x; source edges carry the
    join of all weights, so they never constrain a path meet.
    """
    s = _fresh_name("s", poset.elements)
    t = _fresh_name("t", poset.elements)
    lat = poset.lattice
    top_weight = lat.join_all(poset.weights[x] for x in poset.elements)
    order = {x: i for i, x in enumerate(poset.elements)}
    edges: list[tuple[str, str]] = []
    caps: dict[tuple[str, str], Element] = {}
    for m in sorted(poset.minimal_elements(), key=order.__getitem__):
        edges.append((s, m))
        caps[(s, m)] = top_weight
    for x, y in sorted(poset.covers, key=lambda c: (order[c[0]], order[c[1]])):
        edges.append((x, y))
        caps[(x, y)] = poset.weights[x]
    for m in sorted(poset.maximal_elements(), key=order.__getitem__):
        edges.append((m, t))
        caps[(m, t)] = poset.weights[m]
    net = FlowNetwork((s, *poset.elements, t), edges, s, t)
    return net, CapacityAssignment(lat, caps)


def dilworth_via_network(poset: WeightedPoset) -> DilworthReport:
    """Both sides via bottleneck duality on the auxiliary network.

    The path-side value maps to the chain side and the cut-side value to
    the antichain side. Chain/antichain lists and per-item values are the
    same enumerations as the direct route; only lhs and rhs come from the
    network, which is what makes the cross-method comparison meaningful.
    """
    net, cap = auxiliary_network(poset)
    report = verify_duality(net, cap, mode="strict", method="bruteforce")
    chains = maximal_chains(poset)
    antichains = maximal_antichains(poset)
    return DilworthReport(
        lhs=report.alpha,
        rhs=report.beta,
        equal=report.alpha == report.beta,
        chains=tuple(chains),
        antichains=tuple(antichains),
        chain_values=tuple(chain_value(poset, c) for c in chains),
        antichain_values=tuple(antichain_value(poset, a) for a in antichains),
        method="network",
    )


@dataclass(frozen=True)
class CorrespondenceReport:
    ok: bool
    chain_count: int
    path_count: int
    chains_match_paths: bool
    antichain_count: int
    poset_edge_cut_count: int  # minimal cuts crossing only cover/sink edges
    antichain_roundtrip_ok: bool
    cut_roundtrip_ok: bool
    problems: tuple[str, ...]

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "chains": self.chain_count,
            "paths": self.path_count,
            "chains_match_paths": self.chains_match_paths,
            "antichains": self.antichain_count,
            "poset_edge_minimal_cuts": self.poset_edge_cut_count,
            "antichain_roundtrip_ok": self.antichain_roundtrip_ok,
            "cut_roundtrip_ok": self.cut_roundtrip_ok,
            "problems": list(self.problems),
        }


def _cut_for_antichain(poset: WeightedPoset, net: FlowNetwork, antichain) -> frozenset:
    """Source side of the cut induced by an antichain: the source vertex
    plus everything weakly below some antichain member."""
    below = {x for x in poset.elements if any(poset.leq(x, a) for a in antichain)}
    return frozenset({net.source} | below)


def check_correspondences(poset: WeightedPoset) -> CorrespondenceReport:
    """Verify the chain/path and antichain/cut correspondences.

    Checks, and reports rather than raises:
      1. stripping source and sink from each network path gives exactly
         the maximal chains (a bijection);
      2. each maximal antichain A induces a cut whose crossing set uses
         only cover/sink edges and is inclusion-minimal, and taking the
         sources of those crossing edges recovers A;
      3. conversely each minimal cut crossing only cover/sink edges has
         crossing-edge sources forming a maximal antichain that induces
         the same crossing set.
    Round-trip failures pinpoint posets on which the antichain side of
    the duality detaches from the network's cut side.
    """
    net, _ = auxiliary_network(poset)
    problems: list[str] = []

    paths = enumerate_paths(net)
    chains = maximal_chains(poset)
    stripped = sorted(p[1:-1] for p in paths)
    chains_match = stripped == sorted(chains)
    if not chains_match:
        problems.append("stripped paths differ from maximal chains")

    poset_edges = {e for e in net.edges if e[0] != net.source}
    mcuts = minimal_cuts(net)
    mcut_crossings = [frozenset(crossing_edges(net, c)) for c in mcuts]
    in_poset_edges = [x for x in mcut_crossings if x <= poset_edges]

    antichains = maximal_antichains(poset)
    antichain_rt_ok = True
    for a in antichains:
        s_side = _cut_for_antichain(poset, net, a)
        crossing = frozenset(
            e for e in net.edges if e[0] in s_side and e[1] not in s_side
        )
        if not crossing <= poset_edges:
            antichain_rt_ok = False
            problems.append(f"cut for antichain {a} crosses a source edge")
            continue
        if crossing not in in_poset_edges:
            antichain_rt_ok = False
            problems.append(f"cut for antichain {a} is not a minimal cut")
            continue
        back = tuple(sorted({e[0] for e in crossing}, key=poset.elements.index))
        if back != a:
            antichain_rt_ok = False
            problems.append(f"antichain {a} round-trips to {back}")

    cut_rt_ok = True
    for crossing in in_poset_edges:
        sources = tuple(sorted({e[0] for e in crossing}, key=poset.elements.index))
        if any(poset.comparable(x, y) for x, y in itertools.combinations(sources, 2)):
            cut_rt_ok = False
            problems.append(f"minimal cut sources {sources} are not an antichain")
            continue
        if sources not in antichains:
            cut_rt_ok = False
            problems.append(f"minimal cut sources {sources} are not a maximal antichain")
            continue
        s_side = _cut_for_antichain(poset, net, sources)
        back = frozenset(e for e in net.edges if e[0] in s_side and e[1] not in s_side)
        if back != crossing:
            cut_rt_ok = False
            problems.append(f"cut with sources {sources} does not round-trip")

    bijective_counts = len(antichains) == len(in_poset_edges)
    if not bijective_counts:
        problems.append(
            f"{len(antichains)} maximal antichains vs {len(in_poset_edges)} "
            "minimal cuts over cover/sink edges"
        )

    ok = chains_match and antichain_rt_ok and cut_rt_ok and bijective_counts
    return CorrespondenceReport(
        ok=ok,
        chain_count=len(chains),
        path_count=len(paths),
        chains_match_paths=chains_match,
        antichain_count=len(antichains),
        poset_edge_cut_count=len(in_poset_edges),
        antichain_roundtrip_ok=antichain_rt_ok,
        cut_roundtrip_ok=cut_rt_ok,
        problems=tuple(problems),
    )
