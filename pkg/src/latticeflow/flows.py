"""Lattice-valued flows: capacity-dominated edge labelings whose joins
balance at every internal vertex.

Conservation uses the join operator: the join of values on incoming
edges equals the join on outgoing edges. The set of all flows is never
materialized; the maximum flow value reduces to the join of path
throughputs via the path-flow construction, and arbitrary flows are only
checked for feasibility.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .bottleneck import path_throughput
from .certify import DEFAULT_MAX_UNIVERSE, is_distributive
from .errors import DistributivityRequired, NoBottomError
from .lattices import Element
from .network import DEFAULT_MAX_PATHS, CapacityAssignment, Edge, FlowNetwork, enumerate_paths


@dataclass(frozen=True)
class FlowCheck:
    ok: bool
    capacity_violations: tuple  # (edge, value, capacity)
    conservation_violations: tuple  # (vertex, in_value, out_value)

    def to_dict(self, cap: CapacityAssignment) -> dict:
        fmt = cap.lattice.format
        return {
            "ok": self.ok,
            "capacity_violations": [
                {"edge": list(e), "value": fmt(v), "capacity": fmt(c)}
                for e, v, c in self.capacity_violations
            ],
            "conservation_violations": [
                {"vertex": v, "in": fmt(i), "out": fmt(o)}
                for v, i, o in self.conservation_violations
            ],
        }


def is_feasible_flow(
    net: FlowNetwork,
    cap: CapacityAssignment,
    phi: Mapping[Edge, Element],
    mode: str = "strict",
) -> FlowCheck:
    """Report whether phi is capacity-dominated and join-conserved.

    Dead-end vertices (possible in lenient mode) compare against the
    empty join, the lattice bottom.
    """
    lat = cap.lattice
    missing = [e for e in net.edges if e not in phi]
    if missing:
        raise ValueError(f"flow is missing values for edges: {missing}")
    for e in net.edges:
        lat.check(phi[e])

    cap_bad = []
    for e in net.edges:
        if not lat._leq(phi[e], cap[e]):
            cap_bad.append((e, phi[e], cap[e]))

    cons_bad = []
    for v in net.internal_vertices():
        in_edges = net.in_edges(v)
        out_edges = net.out_edges(v)
        if not in_edges and not out_edges:
            continue  # isolated vertex conserves trivially
        in_value = lat.join_all((phi[e] for e in in_edges))
        out_value = lat.join_all((phi[e] for e in out_edges))
        if in_value != out_value:
            cons_bad.append((v, in_value, out_value))

    return FlowCheck(
        ok=not cap_bad and not cons_bad,
        capacity_violations=tuple(cap_bad),
        conservation_violations=tuple(cons_bad),
    )


def flow_value(
    net: FlowNetwork,
    cap: CapacityAssignment,
    phi: Mapping[Edge, Element],
    require_feasible: bool = True,
) -> Element:
    """Join of the flow over the source's outgoing edges.

    By default the flow is feasibility-checked first; with
    ``require_feasible=False`` the value is computed regardless, for
    exploratory use.
    """
    if require_feasible:
        check = is_feasible_flow(net, cap, phi, mode="lenient")
        if not check.ok:
            raise ValueError(
                f"flow is infeasible: {len(check.capacity_violations)} capacity and "
                f"{len(check.conservation_violations)} conservation violations"
            )
    lat = cap.lattice
    out = net.out_edges(net.source)
    if not out:
        bot = lat.bottom()
        if bot is None:
            raise NoBottomError("source has no outgoing edges and the lattice has no bottom")
        return bot
    return lat.join_all(phi[e] for e in out)


def path_flow(
    net: FlowNetwork,
    cap: CapacityAssignment,
    path: tuple[str, ...],
    mode: str = "strict",
) -> dict[Edge, Element]:
    """The canonical flow supported on one path.

    On-path edges carry the path throughput; off-path edges carry the
    meet of all assigned capacities (strict) or the lattice bottom
    (lenient, where dead ends need the empty join to balance). The result
    always passes is_feasible_flow and its value is the path throughput.
    """
    value = path_throughput(net, cap, path)
    lat = cap.lattice
    if mode == "lenient":
        base = lat.bottom()
        if base is None:
            raise NoBottomError("lenient path flows need a lattice bottom")
    else:
        base = lat.meet_all(v for _, v in cap.items())
    on_path = set(zip(path, path[1:]))
    return {e: (value if e in on_path else base) for e in net.edges}


def joined_path_flow(
    net: FlowNetwork,
    cap: CapacityAssignment,
    paths: Iterable[tuple[str, ...]],
    mode: str = "strict",
) -> dict[Edge, Element]:
    """Edgewise join of several path flows.

    Unlike joins of arbitrary flows (not assumed to be flows here), joins
    of path flows conserve: at any vertex both sides equal the join of
    the throughputs of the paths through it, over the common base value.
    """
    lat = cap.lattice
    flows = [path_flow(net, cap, p, mode) for p in paths]
    if not flows:
        raise ValueError("need at least one path")
    return {e: lat.join_all(f[e] for f in flows) for e in net.edges}


def max_flow_value(
    net: FlowNetwork,
    cap: CapacityAssignment,
    mode: str = "strict",
    allow_non_distributive: bool = False,
    max_paths: int = DEFAULT_MAX_PATHS,
    max_size: int = DEFAULT_MAX_UNIVERSE,
) -> Element:
    """Largest flow value, computed as the join of path throughputs.

    The reduction from all flows to path flows (and the equality with the
    minimal cut value) is only valid over distributive lattices, so the
    same certification gate as the dynamic program applies.
    """
    dist = is_distributive(cap.lattice, max_size)
    if dist is not True and not allow_non_distributive:
        raise DistributivityRequired(
            f"{cap.lattice.describe()} is not certified distributive; the maximal "
            "flow value equals the path-side fold only on distributive lattices "
            "(pass allow_non_distributive=True to force it)"
        )
    paths = enumerate_paths(net, max_paths)
    if not paths:
        bot = cap.lattice.bottom()
        if bot is None:
            raise NoBottomError("network has no source-to-sink path and no lattice bottom")
        return bot
    return cap.lattice.join_all(path_throughput(net, cap, p) for p in paths)
