"""Smoothings, circle tracing, and the dotted cube of resolutions.

Resolution convention (fixed so genus-0 inputs reproduce the classical
invariant): with crossing slots in ccw order 0..3 and the under-strand
entering at slot 0, the 0-resolution joins slot pairs (0,1),(2,3) and the
1-resolution joins (0,3),(1,2), at every crossing.  The pairing depends only
on which strand is on top, never on the crossing sign: orientations enter
through the height shift by the negative-crossing count (and the writhe term
in the quantum grading), exactly as in the classical theory.  A sign-swapped
variant of this rule sends the homology of a negatively kinked unknot to the
wrong homological degree, so invariance pins this convention.

Edges of the cube are classified by how the affected circles change:
two-to-one (merge), one-to-two (split), or one-to-one (single-cycle; this
last kind needs positive genus).  Edge signs follow the prefix convention
(-1)^(# of 1-bits before the flipped position), which makes every square
face's sign product -1.

Cube construction materializes all 2^n vertices eagerly; everything is
immutable afterwards and safe to share.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .diagram import CohomologyClass, SurfaceDiagram
from .errors import DiagramError

Resolution = tuple[int, ...]

MERGE, SPLIT, SINGLE = "merge", "split", "single"


@dataclass(frozen=True)
class Circle:
    """One circle of a smoothing: cyclic arc list plus its Z2 class."""

    arcs: tuple[int, ...]  # cyclic order, rotated to start at the min arc id
    z2_class: tuple[int, ...]
    dotted: bool = False

    @property
    def key(self) -> frozenset[int]:
        return frozenset(self.arcs)


@dataclass(frozen=True)
class Smoothing:
    resolution: Resolution
    circles: tuple[Circle, ...]  # ordered by minimal arc id
    height: int


@dataclass(frozen=True)
class CubeEdge:
    source: Resolution
    target: Resolution
    position: int  # flipped crossing position
    kind: str  # merge | split | single
    sign: int
    # circle correspondence, as indices into the source/target circle tuples
    bystanders: tuple[tuple[int, int], ...]
    affected_src: tuple[int, ...]
    affected_tgt: tuple[int, ...]


def _junction_pairs(bit: int):
    return ((0, 1), (2, 3)) if bit == 0 else ((0, 3), (1, 2))


def resolve(d: SurfaceDiagram, r: Resolution) -> Smoothing:
    """Trace the circles of the smoothing of ``d`` at resolution vector ``r``."""
    if len(r) != d.n_crossings:
        raise DiagramError("resolution length != crossing count")
    # Slot-to-slot junctions chosen by the resolution.
    junction: dict[tuple[int, int], tuple[int, int]] = {}
    for pos, c in enumerate(d.crossings):
        for a, b in _junction_pairs(r[pos]):
            junction[(c.id, a)] = (c.id, b)
            junction[(c.id, b)] = (c.id, a)
    # Which arc end occupies each slot.
    occupant: dict[tuple[int, int], tuple[int, str]] = {}
    for a in d.arcs:
        if a.tail is not None:
            occupant[a.tail] = (a.id, "tail")
        if a.head is not None:
            occupant[a.head] = (a.id, "head")

    circles = []
    seen: set[int] = set()
    for start in d.arcs:
        if start.id in seen:
            continue
        if start.tail is None:  # free loop is its own circle
            seen.add(start.id)
            circles.append(_mk_circle((start.id,), d))
            continue
        cyc: list[int] = []
        arc_id, end = start.id, "head"  # walk out of the head end
        while arc_id not in seen:
            seen.add(arc_id)
            cyc.append(arc_id)
            arc = d.arc_by_id[arc_id]
            ref = arc.head if end == "head" else arc.tail
            partner = junction[ref]
            arc_id, entered = occupant[partner]
            # we entered the next arc at `entered`; leave via the other end
            end = "tail" if entered == "head" else "head"
        circles.append(_mk_circle(tuple(cyc), d))
    circles.sort(key=lambda c: c.arcs[0])
    height = sum(r) - d.n_minus
    return Smoothing(resolution=tuple(r), circles=tuple(circles), height=height)


def _mk_circle(cyc: tuple[int, ...], d: SurfaceDiagram) -> Circle:
    rot = cyc.index(min(cyc))
    cyc = cyc[rot:] + cyc[:rot]
    vec = [0] * (2 * d.genus)
    for arc_id in cyc:
        for k, v in enumerate(d.arc_by_id[arc_id].label):
            vec[k] += v
    return Circle(arcs=cyc, z2_class=tuple(v % 2 for v in vec))


def height(s: Smoothing) -> int:
    return s.height


@dataclass(frozen=True)
class DottedCube:
    diagram: SurfaceDiagram
    gamma: CohomologyClass
    vertices: dict[Resolution, Smoothing]
    edges: tuple[CubeEdge, ...]

    @cached_property
    def edges_by_source(self) -> dict[Resolution, tuple[CubeEdge, ...]]:
        by: dict[Resolution, list[CubeEdge]] = {}
        for e in self.edges:
            by.setdefault(e.source, []).append(e)
        return {k: tuple(v) for k, v in by.items()}

    def interfering_faces(self, require_undotted: bool = False
                          ) -> list[tuple[Resolution, int, int]]:
        """Faces with two single-cycle edges on disjoint circles.

        The differential components on such a face do not compose to zero
        (the two path compositions flip different circles), so the complex is
        undefined there.  With ``require_undotted`` the face only counts when
        not both affected circles are dotted: the degree-(0,0) part of the
        single-cycle map kills the dotted one-to-one backflow, which makes the
        both-dotted case coherent for the plain variant.
        """
        bad = []
        for v, edges in self.edges_by_source.items():
            singles = [e for e in edges if e.kind == SINGLE]
            for i in range(len(singles)):
                for j in range(i + 1, len(singles)):
                    a, b = singles[i], singles[j]
                    ca = a.affected_src[0]
                    cb = b.affected_src[0]
                    if ca == cb:
                        continue
                    if require_undotted:
                        circ = self.vertices[v].circles
                        if circ[ca].dotted and circ[cb].dotted:
                            continue
                    bad.append((v, a.position, b.position))
        return bad


def build_cube(d: SurfaceDiagram, gamma: CohomologyClass) -> DottedCube:
    """All 2^n smoothings with dots, plus classified and signed edges."""
    if len(gamma.bits) != 2 * d.genus:
        raise DiagramError("gamma length != 2*genus")
    n = d.n_crossings
    vertices: dict[Resolution, Smoothing] = {}
    for mask in range(1 << n):
        r = tuple((mask >> k) & 1 for k in range(n))
        s = resolve(d, r)
        dotted = tuple(
            Circle(c.arcs, c.z2_class, dotted=bool(gamma.pair(c.z2_class)))
            for c in s.circles)
        vertices[r] = Smoothing(s.resolution, dotted, s.height)
    edges = []
    for r, s in vertices.items():
        for pos in range(n):
            if r[pos]:
                continue
            t = list(r)
            t[pos] = 1
            t = tuple(t)
            edges.append(_classify_edge(d, r, s, t, vertices[t], pos))
    return DottedCube(diagram=d, gamma=gamma, vertices=vertices,
                      edges=tuple(edges))


def _classify_edge(d: SurfaceDiagram, r: Resolution, src: Smoothing,
                   t: Resolution, tgt: Smoothing, pos: int) -> CubeEdge:
    cid = d.crossings[pos].id
    touched = set()
    for a in d.arcs:
        if (a.tail is not None and a.tail[0] == cid) or \
                (a.head is not None and a.head[0] == cid):
            touched.add(a.id)

    def split_circles(circles):
        byst, aff = {}, []
        for k, c in enumerate(circles):
            if touched & set(c.arcs):
                aff.append(k)
            else:
                byst[c.key] = k
        return byst, aff

    src_byst, src_aff = split_circles(src.circles)
    tgt_byst, tgt_aff = split_circles(tgt.circles)
    if set(src_byst) != set(tgt_byst):  # pragma: no cover - structural sanity
        raise AssertionError("bystander circles must persist across an edge")
    pairs = tuple(sorted((i, tgt_byst[key]) for key, i in src_byst.items()))
    kinds = {(2, 1): MERGE, (1, 2): SPLIT, (1, 1): SINGLE}
    kind = kinds.get((len(src_aff), len(tgt_aff)))
    if kind is None:  # pragma: no cover - structural sanity
        raise AssertionError(
            f"edge affects {len(src_aff)}->{len(tgt_aff)} circles")
    sign = -1 if sum(r[:pos]) % 2 else 1
    return CubeEdge(source=r, target=t, position=pos, kind=kind, sign=sign,
                    bystanders=pairs, affected_src=tuple(src_aff),
                    affected_tgt=tuple(tgt_aff))
