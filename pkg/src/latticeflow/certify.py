"""Exhaustive lattice axiom checking and distributivity certification.

Certification is honest about its method: small universes are checked by
cubic enumeration of both distributive laws, while parametric kinds whose
distributivity is structural (chains, set lattices, products of such)
short-circuit with a "structural" certificate. Non-distributive verdicts
carry a failing triple and a five-element pentagon/diamond sublattice
witness extracted from the sublattice the triple generates.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any

from .errors import UniverseTooLarge
from .lattices import Element, Lattice

DEFAULT_MAX_UNIVERSE = 512
_SUBSET_SCAN_MAX = 24
_MAX_VIOLATIONS = 25


@dataclass(frozen=True)
class AxiomViolation:
    law: str
    witness: tuple
    message: str


@dataclass(frozen=True)
class AxiomReport:
    ok: bool
    size: int
    violations: tuple[AxiomViolation, ...]
    truncated: bool = False

    def to_dict(self, lattice: Lattice) -> dict:
        return {
            "ok": self.ok,
            "size": self.size,
            "truncated": self.truncated,
            "violations": [
                {"law": v.law, "witness": [lattice.format(x) for x in v.witness], "message": v.message}
                for v in self.violations
            ],
        }


@dataclass(frozen=True)
class SublatticeWitness:
    """Five elements closed under join/meet, isomorphic to N5 or M3.

    Roles follow the pentagon/diamond naming: "0" bottom, "1" top, and
    for N5 the chain 0 < c < b < 1 with "a" incomparable to both.
    """

    label: str  # "N5" or "M3"
    embedding: dict[str, Element]

    def elements(self) -> tuple:
        return tuple(self.embedding[r] for r in ("0", "a", "b", "c", "1"))

    def to_dict(self, lattice: Lattice) -> dict:
        return {
            "label": self.label,
            "embedding": {role: lattice.literal(x) for role, x in self.embedding.items()},
        }


@dataclass(frozen=True)
class DistributivityCertificate:
    distributive: bool
    method: str  # "structural" or "exhaustive"
    witness_triple: tuple | None = None
    failed_law: str | None = None
    sublattice: SublatticeWitness | None = None

    @property
    def verdict(self) -> str:
        return "distributive" if self.distributive else "non-distributive"

    def to_dict(self, lattice: Lattice) -> dict:
        out: dict[str, Any] = {"verdict": self.verdict, "method": self.method}
        if self.witness_triple is not None:
            out["witness_triple"] = [lattice.literal(x) for x in self.witness_triple]
            out["failed_law"] = self.failed_law
        if self.sublattice is not None:
            out["forbidden_sublattice"] = self.sublattice.to_dict(lattice)
        return out


def _guard_size(lattice: Lattice, max_size: int) -> int:
    size = lattice.size()
    if size > max_size:
        raise UniverseTooLarge(
            f"{lattice.describe()} has {size} elements; cap for exhaustive checks is {max_size}"
        )
    return size


def check_lattice_axioms(lattice: Lattice, max_size: int = DEFAULT_MAX_UNIVERSE) -> AxiomReport:
    """Exhaustively verify the lattice axioms and order consistency.

    Covers commutativity, associativity, absorption and idempotence of
    join and meet, partial-order axioms for leq, the equivalence
    leq(a,b) <=> join(a,b)=b <=> meet(a,b)=a, and that join/meet really
    are least upper / greatest lower bounds.
    """
    size = _guard_size(lattice, max_size)
    elems = lattice.element_list()
    violations: list[AxiomViolation] = []
    truncated = False

    def report(law, witness, message) -> bool:
        nonlocal truncated
        if len(violations) >= _MAX_VIOLATIONS:
            truncated = True
            return True
        violations.append(AxiomViolation(law, witness, message))
        return False

    leq, join, meet = lattice._leq, lattice._join, lattice._meet
    fmt = lattice.format

    for a in elems:
        if not leq(a, a):
            if report("reflexivity", (a,), f"{fmt(a)} <= {fmt(a)} fails"):
                break
        if join(a, a) != a:
            if report("join-idempotence", (a,), f"{fmt(a)} v {fmt(a)} != {fmt(a)}"):
                break
        if meet(a, a) != a:
            if report("meet-idempotence", (a,), f"{fmt(a)} ^ {fmt(a)} != {fmt(a)}"):
                break

    for a, b in itertools.combinations(elems, 2):
        if truncated:
            break
        if leq(a, b) and leq(b, a):
            report("antisymmetry", (a, b), f"{fmt(a)} and {fmt(b)} are mutually <= but distinct")

    for a, b in itertools.product(elems, repeat=2):
        if truncated:
            break
        jab, mab = join(a, b), meet(a, b)
        if jab != join(b, a):
            report("join-commutativity", (a, b), f"{fmt(a)} v {fmt(b)} != {fmt(b)} v {fmt(a)}")
        if mab != meet(b, a):
            report("meet-commutativity", (a, b), f"{fmt(a)} ^ {fmt(b)} != {fmt(b)} ^ {fmt(a)}")
        if join(a, mab) != a:
            report("absorption", (a, b), f"{fmt(a)} v ({fmt(a)} ^ {fmt(b)}) != {fmt(a)}")
        if meet(a, jab) != a:
            report("absorption", (a, b), f"{fmt(a)} ^ ({fmt(a)} v {fmt(b)}) != {fmt(a)}")
        if leq(a, b) != (jab == b) or leq(a, b) != (mab == a):
            report(
                "order-consistency",
                (a, b),
                f"leq({fmt(a)},{fmt(b)}), join={fmt(jab)}, meet={fmt(mab)} disagree",
            )
        if not (leq(a, jab) and leq(b, jab)):
            report("join-upper-bound", (a, b), f"{fmt(jab)} is not an upper bound")
        if not (leq(mab, a) and leq(mab, b)):
            report("meet-lower-bound", (a, b), f"{fmt(mab)} is not a lower bound")

    for a, b, c in itertools.product(elems, repeat=3):
        if truncated:
            break
        if leq(a, b) and leq(b, c) and not leq(a, c):
            report("transitivity", (a, b, c), f"{fmt(a)} <= {fmt(b)} <= {fmt(c)} but not {fmt(a)} <= {fmt(c)}")
            continue
        if join(a, join(b, c)) != join(join(a, b), c):
            report("join-associativity", (a, b, c), "join associativity fails")
        if meet(a, meet(b, c)) != meet(meet(a, b), c):
            report("meet-associativity", (a, b, c), "meet associativity fails")
        if leq(a, c) and leq(b, c) and not leq(join(a, b), c):
            report("join-least-upper-bound", (a, b, c), f"{fmt(join(a,b))} not least among upper bounds")
        if leq(c, a) and leq(c, b) and not leq(c, meet(a, b)):
            report("meet-greatest-lower-bound", (a, b, c), f"{fmt(meet(a,b))} not greatest among lower bounds")

    return AxiomReport(ok=not violations, size=size, violations=tuple(violations), truncated=truncated)


def _sublattice_closure(lattice: Lattice, seeds) -> list:
    current = set(seeds)
    while True:
        new = set()
        for a, b in itertools.combinations(sorted(current, key=lattice.element_list().index), 2):
            for x in (lattice._join(a, b), lattice._meet(a, b)):
                if x not in current:
                    new.add(x)
        if not new:
            break
        current |= new
    order = {x: i for i, x in enumerate(lattice.element_list())}
    return sorted(current, key=order.__getitem__)


def _classify_five(lattice: Lattice, five: tuple) -> SublatticeWitness | None:
    """N5/M3 witness if the five elements are op-closed and isomorphic."""
    fs = frozenset(five)
    for a, b in itertools.combinations(five, 2):
        if lattice._join(a, b) not in fs or lattice._meet(a, b) not in fs:
            return None
    bot = five[0]
    top = five[0]
    for x in five[1:]:
        bot = lattice._meet(bot, x)
        top = lattice._join(top, x)
    if bot == top:
        return None
    mids = [x for x in five if x != bot and x != top]
    if len(mids) != 3:
        return None
    comp = [
        (x, y)
        for x, y in itertools.permutations(mids, 2)
        if x != y and lattice._leq(x, y)
    ]
    if not comp:
        # M3 candidate: all mid pairs must meet to bot and join to top
        for x, y in itertools.combinations(mids, 2):
            if lattice._meet(x, y) != bot or lattice._join(x, y) != top:
                return None
        a, b, c = mids
        return SublatticeWitness("M3", {"0": bot, "a": a, "b": b, "c": c, "1": top})
    if len(comp) == 1:
        lo, hi = comp[0]
        lone = next(x for x in mids if x not in (lo, hi))
        if (
            lattice._meet(lone, lo) == bot
            and lattice._meet(lone, hi) == bot
            and lattice._join(lone, lo) == top
            and lattice._join(lone, hi) == top
        ):
            return SublatticeWitness("N5", {"0": bot, "a": lone, "b": hi, "c": lo, "1": top})
    return None


def _witness_from_triple(lattice: Lattice, triple) -> SublatticeWitness | None:
    closure = _sublattice_closure(lattice, triple)
    for five in itertools.combinations(closure, 5):
        wit = _classify_five(lattice, five)
        if wit is not None:
            return wit
    return None


def check_distributive(
    lattice: Lattice, max_size: int = DEFAULT_MAX_UNIVERSE
) -> DistributivityCertificate:
    """Certify both distributive laws on every triple, or use the
    structural guarantee for parametric kinds too large to enumerate.

    A non-distributive verdict carries the first failing triple in
    enumeration order plus an N5/M3 sublattice witness.
    """
    cached = getattr(lattice, "_distributivity_cert", None)
    if cached is not None:
        return cached
    if lattice.known_distributive:
        cert = DistributivityCertificate(True, "structural")
        lattice._distributivity_cert = cert
        return cert
    _guard_size(lattice, max_size)
    elems = lattice.element_list()
    join, meet = lattice._join, lattice._meet
    cert = None
    for a, b, c in itertools.product(elems, repeat=3):
        if meet(a, join(b, c)) != join(meet(a, b), meet(a, c)):
            cert = DistributivityCertificate(
                False,
                "exhaustive",
                witness_triple=(a, b, c),
                failed_law="meet-over-join",
                sublattice=_witness_from_triple(lattice, (a, b, c)),
            )
            break
        if join(a, meet(b, c)) != meet(join(a, b), join(a, c)):
            cert = DistributivityCertificate(
                False,
                "exhaustive",
                witness_triple=(a, b, c),
                failed_law="join-over-meet",
                sublattice=_witness_from_triple(lattice, (a, b, c)),
            )
            break
    if cert is None:
        cert = DistributivityCertificate(True, "exhaustive")
    lattice._distributivity_cert = cert
    return cert


def find_forbidden_sublattice(
    lattice: Lattice, max_size: int = DEFAULT_MAX_UNIVERSE
) -> SublatticeWitness | None:
    """Pentagon or diamond sublattice embedding, or None if there is none.

    For small universes this scans every five-element subset, which keeps
    it an oracle independent of :func:`check_distributive`; larger
    universes fall back to the failing-triple closure search.
    """
    if lattice.known_distributive:
        return None
    size = _guard_size(lattice, max_size)
    if size <= _SUBSET_SCAN_MAX:
        for five in itertools.combinations(lattice.element_list(), 5):
            wit = _classify_five(lattice, five)
            if wit is not None:
                return wit
        return None
    cert = check_distributive(lattice, max_size)
    return cert.sublattice


def is_distributive(lattice: Lattice, max_size: int = DEFAULT_MAX_UNIVERSE) -> bool | None:
    """True/False when certifiable, None when the universe is too large
    and no structural guarantee applies."""
    try:
        return check_distributive(lattice, max_size).distributive
    except UniverseTooLarge:
        return None
