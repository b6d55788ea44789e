"""Combinatorial diagrams of links in thickened orientable surfaces.

A diagram is a decorated 4-valent graph: crossings with four slots in
counterclockwise order, and directed arcs whose endpoints occupy those slots.
The under-strand enters a crossing at slot 0 and leaves at slot 2; the
over-strand occupies slots 1 and 3.  Each arc carries an integer vector of
length 2·genus recording its signed intersections with a fixed dual-curve
system on the surface; mod-2 sums of these labels give the Z2-homology class
of any circle in any smoothing.

Diagrams are immutable after construction and all operations are pure, so
values can be shared freely across threads.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass, field
from functools import cached_property

from .errors import DiagramError, ZeroClassWarning

EndRef = tuple[int, int]  # (crossing id, slot 0..3)
SlotRef = tuple[int, str]  # (arc id, "tail" | "head")

UNDER_IN, OVER_A, UNDER_OUT, OVER_B = 0, 1, 2, 3


@dataclass(frozen=True)
class Arc:
    id: int
    tail: EndRef | None  # None on both ends = closed loop
    head: EndRef | None
    label: tuple[int, ...]


@dataclass(frozen=True)
class Crossing:
    id: int
    slots: tuple[SlotRef, SlotRef, SlotRef, SlotRef]


@dataclass(frozen=True)
class CohomologyClass:
    """Element of H^1(Sigma_g; Z2) as a bit vector of length 2g."""

    bits: tuple[int, ...]

    def __post_init__(self):
        if any(b not in (0, 1) for b in self.bits):
            raise DiagramError("cohomology class bits must be 0 or 1")

    def pair(self, z2_class: tuple[int, ...]) -> int:
        """Kronecker pairing with a Z2-homology class (same coordinates)."""
        if len(z2_class) != len(self.bits):
            raise DiagramError("pairing length mismatch")
        return sum(a * b for a, b in zip(self.bits, z2_class)) % 2

    @property
    def is_zero(self) -> bool:
        return not any(self.bits)


def nonzero_classes(genus: int):
    """All 2^(2g) - 1 nonzero classes, in lexicographic order."""
    n = 2 * genus
    for mask in range(1, 1 << n):
        yield CohomologyClass(tuple((mask >> (n - 1 - k)) & 1 for k in range(n)))


@dataclass(frozen=True)
class SurfaceDiagram:
    genus: int
    arcs: tuple[Arc, ...]
    crossings: tuple[Crossing, ...] = ()

    def __post_init__(self):
        _validate(self)

    # -- lookups ---------------------------------------------------------

    @cached_property
    def arc_by_id(self) -> dict[int, Arc]:
        return {a.id: a for a in self.arcs}

    @cached_property
    def crossing_by_id(self) -> dict[int, Crossing]:
        return {c.id: c for c in self.crossings}

    @cached_property
    def crossing_index(self) -> dict[int, int]:
        """Crossing id -> cube bit position (list order)."""
        return {c.id: k for k, c in enumerate(self.crossings)}

    # -- crossing signs and writhe --------------------------------------

    def crossing_sign(self, crossing: Crossing) -> int:
        """+1 exactly when the over-strand enters at slot 3."""
        arc_id, end = crossing.slots[OVER_B]
        return 1 if end == "head" else -1

    @cached_property
    def signs(self) -> tuple[int, ...]:
        return tuple(self.crossing_sign(c) for c in self.crossings)

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    @property
    def n_minus(self) -> int:
        return sum(1 for s in self.signs if s < 0)

    # -- components ------------------------------------------------------

    @cached_property
    def components(self) -> tuple[tuple[int, ...], ...]:
        """Link components as sorted tuples of arc ids."""
        parent = {a.id: a.id for a in self.arcs}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x, y):
            parent[find(x)] = find(y)

        for c in self.crossings:
            union(c.slots[UNDER_IN][0], c.slots[UNDER_OUT][0])
            union(c.slots[OVER_A][0], c.slots[OVER_B][0])
        groups: dict[int, list[int]] = {}
        for a in self.arcs:
            groups.setdefault(find(a.id), []).append(a.id)
        return tuple(sorted((tuple(sorted(g)) for g in groups.values())))

    @property
    def component_count(self) -> int:
        return len(self.components)

    def serialize(self) -> str:
        return json.dumps(diagram_to_obj(self), indent=1, sort_keys=False)


def writhe(d: SurfaceDiagram) -> int:
    return sum(d.signs)


def component_classes(d: SurfaceDiagram) -> list[tuple[int, ...]]:
    """One integer vector per link component: the sum of its arc labels."""
    out = []
    for comp in d.components:
        vec = [0] * (2 * d.genus)
        for arc_id in comp:
            for k, v in enumerate(d.arc_by_id[arc_id].label):
                vec[k] += v
        out.append(tuple(vec))
    return out


def genus_of_closed_surface(components: int, euler_characteristic: int) -> int:
    """Genus of a closed orientable surface from component count and chi."""
    twice = 2 * components - euler_characteristic
    if twice < 0 or twice % 2:
        raise DiagramError("no closed orientable surface with those invariants")
    return twice // 2


# -- validation ----------------------------------------------------------


def _validate(d: SurfaceDiagram) -> None:
    if d.genus < 0:
        raise DiagramError("genus must be non-negative")
    if not d.arcs:
        raise DiagramError("diagram must contain at least one arc")
    arc_ids = [a.id for a in d.arcs]
    if len(set(arc_ids)) != len(arc_ids):
        raise DiagramError("duplicate arc id")
    crossing_ids = [c.id for c in d.crossings]
    if len(set(crossing_ids)) != len(crossing_ids):
        raise DiagramError("duplicate crossing id")
    by_arc = {a.id: a for a in d.arcs}
    by_crossing = {c.id: c for c in d.crossings}

    expect = 2 * d.genus
    for a in d.arcs:
        if len(a.label) != expect:
            raise DiagramError(
                f"arc {a.id}: label length {len(a.label)} != 2*genus = {expect}")
        if (a.tail is None) != (a.head is None):
            raise DiagramError(f"arc {a.id}: exactly one free end (need both or none)")

    # Every (crossing, slot) is hit by exactly one arc endpoint.
    seen: dict[EndRef, SlotRef] = {}
    for a in d.arcs:
        for end_name, ref in (("tail", a.tail), ("head", a.head)):
            if ref is None:
                continue
            cid, slot = ref
            if cid not in by_crossing:
                raise DiagramError(
                    f"arc {a.id}: dangling endpoint, no crossing {cid}")
            if not 0 <= slot <= 3:
                raise DiagramError(f"arc {a.id}: slot {slot} out of range")
            if (cid, slot) in seen:
                raise DiagramError(f"slot ({cid},{slot}) used twice")
            seen[(cid, slot)] = (a.id, end_name)
    for c in d.crossings:
        for slot in range(4):
            occupant = seen.get((c.id, slot))
            if occupant is None:
                raise DiagramError(f"crossing {c.id}: slot {slot} unused")
            if c.slots[slot] != occupant:
                raise DiagramError(
                    f"crossing {c.id}: slot table disagrees with arc refs at slot {slot}")
        # Orientation: under enters at 0 and leaves at 2; over occupies 1,3
        # with one entry and one exit.
        if seen[(c.id, UNDER_IN)][1] != "head":
            raise DiagramError(
                f"crossing {c.id}: orientation inconsistency (slot 0 must be entered)")
        if seen[(c.id, UNDER_OUT)][1] != "tail":
            raise DiagramError(
                f"crossing {c.id}: orientation inconsistency (slot 2 must be exited)")
        over_ends = {seen[(c.id, OVER_A)][1], seen[(c.id, OVER_B)][1]}
        if over_ends != {"tail", "head"}:
            raise DiagramError(
                f"crossing {c.id}: orientation inconsistency (over-strand must "
                "enter one of slots 1,3 and exit the other)")


# -- JSON file format ----------------------------------------------------

_ARC_KEYS = {"id", "tail", "head", "label"}
_CROSSING_KEYS = {"id", "slots"}
_SLOT_KEYS = {"arc", "end"}
_TOP_KEYS = {"genus", "arcs", "crossings"}


def _end_from_obj(obj, where: str) -> EndRef | None:
    if obj is None:
        return None
    if (not isinstance(obj, list)) or len(obj) != 2 or \
            not all(isinstance(x, int) for x in obj):
        raise DiagramError(f"{where}: endpoint must be null or [crossing, slot]")
    return (obj[0], obj[1])


def parse_diagram(text: str) -> SurfaceDiagram:
    """Parse and validate the JSON diagram format.

    Unknown keys are rejected.  Raises DiagramError with a position for syntax
    errors and a description for structural ones.
    """
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise DiagramError(
            f"syntax error at line {e.lineno}, column {e.colno}: {e.msg}") from e
    if not isinstance(obj, dict):
        raise DiagramError("top level must be an object")
    unknown = set(obj) - _TOP_KEYS
    if unknown:
        raise DiagramError(f"unknown keys: {sorted(unknown)}")
    if "genus" not in obj or "arcs" not in obj:
        raise DiagramError("missing required keys 'genus'/'arcs'")
    genus = obj["genus"]
    if not isinstance(genus, int):
        raise DiagramError("genus must be an integer")
    arcs = []
    for k, a in enumerate(obj["arcs"]):
        if not isinstance(a, dict):
            raise DiagramError(f"arcs[{k}] must be an object")
        unknown = set(a) - _ARC_KEYS
        if unknown:
            raise DiagramError(f"arcs[{k}]: unknown keys {sorted(unknown)}")
        if not {"id", "tail", "head", "label"} <= set(a):
            raise DiagramError(f"arcs[{k}]: missing keys")
        label = a["label"]
        if not isinstance(label, list) or not all(isinstance(x, int) for x in label):
            raise DiagramError(f"arcs[{k}]: label must be a list of integers")
        arcs.append(Arc(id=a["id"],
                        tail=_end_from_obj(a["tail"], f"arcs[{k}].tail"),
                        head=_end_from_obj(a["head"], f"arcs[{k}].head"),
                        label=tuple(label)))
    crossings = []
    for k, c in enumerate(obj.get("crossings", [])):
        if not isinstance(c, dict):
            raise DiagramError(f"crossings[{k}] must be an object")
        unknown = set(c) - _CROSSING_KEYS
        if unknown:
            raise DiagramError(f"crossings[{k}]: unknown keys {sorted(unknown)}")
        slots = c.get("slots")
        if not isinstance(slots, list) or len(slots) != 4:
            raise DiagramError(f"crossings[{k}]: slots must be a list of 4 entries")
        parsed = []
        for s, entry in enumerate(slots):
            if not isinstance(entry, dict) or set(entry) - _SLOT_KEYS or \
                    "arc" not in entry or entry.get("end") not in ("tail", "head"):
                raise DiagramError(
                    f"crossings[{k}].slots[{s}]: need {{arc, end: tail|head}}")
            parsed.append((entry["arc"], entry["end"]))
        crossings.append(Crossing(id=c["id"], slots=tuple(parsed)))
    d = SurfaceDiagram(genus=genus, arcs=tuple(arcs), crossings=tuple(crossings))
    if d.genus > 0:
        for comp, vec in zip(d.components, component_classes(d)):
            if not any(vec):
                warnings.warn(
                    f"component {comp} has zero class at genus {d.genus}",
                    ZeroClassWarning, stacklevel=2)
    return d


def diagram_to_obj(d: SurfaceDiagram) -> dict:
    return {
        "genus": d.genus,
        "arcs": [
            {"id": a.id,
             "tail": list(a.tail) if a.tail is not None else None,
             "head": list(a.head) if a.head is not None else None,
             "label": list(a.label)}
            for a in d.arcs
        ],
        "crossings": [
            {"id": c.id,
             "slots": [{"arc": aid, "end": end} for aid, end in c.slots]}
            for c in d.crossings
        ],
    }
