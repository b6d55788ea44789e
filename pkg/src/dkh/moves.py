"""Reidemeister moves on surface diagrams.

Moves are local (inside a disc), so every arc a move creates carries the zero
label, and splitting an arc leaves the whole original label on one piece so
the pieces sum to it.  The encoding carries no face data, so disc-ness of a
removal site is proxied by requiring the pattern's internal arcs to have zero
labels; other sites raise MoveError.

Sites are explicit:
    apply_r1(d, {"arc": id}, chirality)      kink insertion (+1 crossing)
    apply_r1(d, {"crossing": id})            kink removal   (-1 crossing)
    apply_r2(d, {"over": id, "under": id})   parallel push  (+2 crossings)
    apply_r2(d, {"crossings": [x, y]})       bigon removal  (-2 crossings)
    apply_r3(d, {"crossings": [x, y, z]})    triangle slide (0)
"""

from __future__ import annotations

from .diagram import (OVER_A, OVER_B, UNDER_IN, UNDER_OUT, Arc, Crossing,
                      SurfaceDiagram)
from .errors import MoveError

_ZERO = "zero"


class _Builder:
    """Mutable scratch copy; crossing slot tables are re-derived at the end."""

    def __init__(self, d: SurfaceDiagram):
        self.genus = d.genus
        self.arcs: dict[int, dict] = {
            a.id: {"tail": a.tail, "head": a.head, "label": a.label}
            for a in d.arcs}
        self.crossing_ids: list[int] = [c.id for c in d.crossings]
        self._next_arc = max(self.arcs) + 1
        self._next_crossing = (max(self.crossing_ids) + 1
                               if self.crossing_ids else 0)

    def zero_label(self) -> tuple[int, ...]:
        return (0,) * (2 * self.genus)

    def new_arc(self, tail, head, label) -> int:
        if label == _ZERO:
            label = self.zero_label()
        aid = self._next_arc
        self._next_arc += 1
        self.arcs[aid] = {"tail": tail, "head": head, "label": tuple(label)}
        return aid

    def new_crossing(self) -> int:
        cid = self._next_crossing
        self._next_crossing += 1
        self.crossing_ids.append(cid)
        return cid

    def drop_crossing(self, cid: int):
        self.crossing_ids.remove(cid)

    def drop_arc(self, aid: int):
        del self.arcs[aid]

    def arc_at(self, ref) -> tuple[int, str]:
        """(arc id, end) occupying the slot ``ref``."""
        for aid, a in self.arcs.items():
            if a["tail"] == ref:
                return aid, "tail"
            if a["head"] == ref:
                return aid, "head"
        raise MoveError(f"no arc at slot {ref}")

    def merge_through(self, first: int, second: int) -> int:
        """Join first's head-chain to second's tail-chain into one new arc."""
        fa, sa = self.arcs[first], self.arcs[second]
        if first == second:  # strand closes into a free loop
            aid = self.new_arc(None, None, fa["label"])
        else:
            label = [x + y for x, y in zip(fa["label"], sa["label"])]
            aid = self.new_arc(fa["tail"], sa["head"], label)
            self.drop_arc(second)
        self.drop_arc(first)
        return aid

    def finish(self) -> SurfaceDiagram:
        occupancy: dict[tuple[int, int], tuple[int, str]] = {}
        for aid, a in self.arcs.items():
            for end in ("tail", "head"):
                if a[end] is not None:
                    occupancy[a[end]] = (aid, end)
        crossings = []
        for cid in self.crossing_ids:
            slots = []
            for s in range(4):
                occ = occupancy.get((cid, s))
                if occ is None:
                    raise MoveError(f"crossing {cid}: slot {s} left vacant")
                slots.append(occ)
            crossings.append(Crossing(id=cid, slots=tuple(slots)))
        arcs = tuple(Arc(id=aid, tail=a["tail"], head=a["head"],
                         label=tuple(a["label"]))
                     for aid, a in sorted(self.arcs.items()))
        return SurfaceDiagram(genus=self.genus, arcs=arcs,
                              crossings=tuple(crossings))


def _over_slots(b: _Builder, cid: int) -> tuple[int, int]:
    """(over-in slot, over-out slot) of a crossing."""
    a_id, a_end = b.arc_at((cid, OVER_A))
    if a_end == "head":
        return OVER_A, OVER_B
    return OVER_B, OVER_A


# -- R1 -------------------------------------------------------------------

def apply_r1(d: SurfaceDiagram, site: dict, chirality: int = 1
             ) -> SurfaceDiagram:
    if "arc" in site:
        return _r1_add(d, site["arc"], chirality)
    if "crossing" in site:
        return _r1_remove(d, site["crossing"])
    raise MoveError("r1 site needs 'arc' (insert) or 'crossing' (remove)")


def _r1_add(d: SurfaceDiagram, arc_id: int, chirality: int) -> SurfaceDiagram:
    if chirality not in (1, -1):
        raise MoveError("chirality must be +1 or -1")
    b = _Builder(d)
    if arc_id not in b.arcs:
        raise MoveError(f"no arc {arc_id}")
    x = b.new_crossing()
    over_in = OVER_B if chirality > 0 else OVER_A  # head at 3 <=> sign +1
    over_out = OVER_A if chirality > 0 else OVER_B
    a = b.arcs[arc_id]
    if a["tail"] is None:  # free loop: main arc + kink loop
        b.new_arc((x, over_out), (x, UNDER_IN), a["label"])
    else:
        b.new_arc(a["tail"], (x, UNDER_IN), a["label"])
        b.new_arc((x, over_out), a["head"], _ZERO)
    b.new_arc((x, UNDER_OUT), (x, over_in), _ZERO)  # the kink circle
    b.drop_arc(arc_id)
    return b.finish()


def _r1_remove(d: SurfaceDiagram, crossing_id: int) -> SurfaceDiagram:
    b = _Builder(d)
    if crossing_id not in b.crossing_ids:
        raise MoveError(f"no crossing {crossing_id}")
    over_in, over_out = _over_slots(b, crossing_id)
    x = crossing_id
    # kink loop patterns: under-out -> over-in, or over-out -> under-in
    found = None
    for kl_tail, kl_head in (((x, UNDER_OUT), (x, over_in)),
                             ((x, over_out), (x, UNDER_IN))):
        for aid, a in b.arcs.items():
            if a["tail"] == kl_tail and a["head"] == kl_head:
                found = (aid, kl_tail, kl_head)
                break
        if found:
            break
    if not found:
        raise MoveError(f"crossing {crossing_id} is not a removable kink")
    aid, kl_tail, kl_head = found
    if any(b.arcs[aid]["label"]):
        raise MoveError("kink loop carries a nonzero label (not a disc face)")
    into_slot = (x, UNDER_IN) if kl_head != (x, UNDER_IN) else (x, over_in)
    out_slot = (x, over_out) if kl_tail != (x, over_out) else (x, UNDER_OUT)
    p, p_end = b.arc_at(into_slot)
    q, q_end = b.arc_at(out_slot)
    if p_end != "head" or q_end != "tail":  # pragma: no cover
        raise MoveError("orientation mismatch at kink")
    b.drop_arc(aid)
    b.merge_through(p, q)
    b.drop_crossing(x)
    return b.finish()


# -- R2 -------------------------------------------------------------------

def apply_r2(d: SurfaceDiagram, site: dict) -> SurfaceDiagram:
    if "over" in site and "under" in site:
        return _r2_add(d, site["over"], site["under"])
    if "crossings" in site and len(site["crossings"]) == 2:
        return _r2_remove(d, *site["crossings"])
    raise MoveError("r2 site needs 'over'/'under' arcs or 'crossings': [x, y]")


def _r2_add(d: SurfaceDiagram, over_id: int, under_id: int) -> SurfaceDiagram:
    if over_id == under_id:
        raise MoveError("r2 insertion needs two distinct arcs")
    b = _Builder(d)
    if over_id not in b.arcs or under_id not in b.arcs:
        raise MoveError("no such arc")
    x, y = b.new_crossing(), b.new_crossing()
    a, u = b.arcs[over_id], b.arcs[under_id]
    # over strand: enters x at slot 3 (sign +1), then y at slot 1 (sign -1)
    if a["tail"] is None:
        b.new_arc((y, OVER_B), (x, OVER_B), a["label"])
    else:
        b.new_arc(a["tail"], (x, OVER_B), a["label"])
        b.new_arc((y, OVER_B), a["head"], _ZERO)
    b.new_arc((x, OVER_A), (y, OVER_A), _ZERO)
    if u["tail"] is None:
        b.new_arc((y, UNDER_OUT), (x, UNDER_IN), u["label"])
    else:
        b.new_arc(u["tail"], (x, UNDER_IN), u["label"])
        b.new_arc((y, UNDER_OUT), u["head"], _ZERO)
    b.new_arc((x, UNDER_OUT), (y, UNDER_IN), _ZERO)
    b.drop_arc(over_id)
    b.drop_arc(under_id)
    return b.finish()


def _r2_remove(d: SurfaceDiagram, x: int, y: int) -> SurfaceDiagram:
    b = _Builder(d)
    if x not in b.crossing_ids or y not in b.crossing_ids or x == y:
        raise MoveError("need two distinct existing crossings")
    if d.signs[d.crossing_index[x]] + d.signs[d.crossing_index[y]] != 0:
        raise MoveError("bigon crossings must have opposite signs")
    x_over_in, x_over_out = _over_slots(b, x)
    y_over_in, y_over_out = _over_slots(b, y)
    # each strand of the bigon may be oriented x->y or y->x independently
    mid_over = (_find_mid(b, (x, x_over_out), (y, y_over_in))
                or _find_mid(b, (y, y_over_out), (x, x_over_in)))
    mid_under = (_find_mid(b, (x, UNDER_OUT), (y, UNDER_IN))
                 or _find_mid(b, (y, UNDER_OUT), (x, UNDER_IN)))
    if mid_over is None or mid_under is None:
        raise MoveError(f"crossings ({x},{y}) do not bound a removable bigon")
    if any(b.arcs[mid_over]["label"]) or any(b.arcs[mid_under]["label"]):
        raise MoveError("bigon arcs carry nonzero labels (not a disc face)")
    over_first = b.arcs[mid_over]["tail"][0]
    over_last = y if over_first == x else x
    under_first = b.arcs[mid_under]["tail"][0]
    under_last = y if under_first == x else x
    b.drop_arc(mid_over)
    b.drop_arc(mid_under)
    first_over_in = x_over_in if over_first == x else y_over_in
    last_over_out = y_over_out if over_last == y else x_over_out
    p, _ = b.arc_at((over_first, first_over_in))
    q, _ = b.arc_at((over_last, last_over_out))
    b.merge_through(p, q)
    p, _ = b.arc_at((under_first, UNDER_IN))  # re-lookup: merge may rename
    q, _ = b.arc_at((under_last, UNDER_OUT))
    b.merge_through(p, q)
    b.drop_crossing(x)
    b.drop_crossing(y)
    return b.finish()


# -- R3 -------------------------------------------------------------------

def apply_r3(d: SurfaceDiagram, site: dict) -> SurfaceDiagram:
    ids = site.get("crossings")
    if not ids or len(ids) != 3:
        raise MoveError("r3 site needs 'crossings': [x, y, z]")
    x, y, z = ids
    from itertools import permutations
    for c_ab, c_ac, c_bc in permutations((x, y, z)):
        try:
            return _r3_ordered(d, c_ab, c_ac, c_bc)
        except MoveError:
            continue
    raise MoveError(f"crossings {ids} do not form a slidable triangle")


def _find_mid(b: _Builder, tail_ref, head_ref):
    for aid, a in b.arcs.items():
        if a["tail"] == tail_ref and a["head"] == head_ref:
            return aid
    return None


def _r3_ordered(d: SurfaceDiagram, c_ab: int, c_ac: int, c_bc: int
                ) -> SurfaceDiagram:
    """Strand A over at c_ab/c_ac, B under A over C, C under both."""
    b = _Builder(d)
    if len({c_ab, c_ac, c_bc}) != 3 or not all(
            c in b.crossing_ids for c in (c_ab, c_ac, c_bc)):
        raise MoveError("need three distinct existing crossings")
    ab_oin, ab_oout = _over_slots(b, c_ab)
    ac_oin, ac_oout = _over_slots(b, c_ac)
    bc_oin, bc_oout = _over_slots(b, c_bc)

    # each strand may run through its two crossings in either direction
    strands = []
    for name, (p, p_out, p_in), (q, q_out, q_in) in (
            ("A", (c_ab, ab_oout, ab_oin), (c_ac, ac_oout, ac_oin)),
            ("B", (c_ab, UNDER_OUT, UNDER_IN), (c_bc, bc_oout, bc_oin)),
            ("C", (c_ac, UNDER_OUT, UNDER_IN), (c_bc, UNDER_OUT, UNDER_IN))):
        mid = _find_mid(b, (p, p_out), (q, q_in))
        if mid is not None:
            strands.append((mid, (p, p_out, p_in), (q, q_out, q_in)))
            continue
        mid = _find_mid(b, (q, q_out), (p, p_in))
        if mid is not None:
            strands.append((mid, (q, q_out, q_in), (p, p_out, p_in)))
            continue
        raise MoveError(f"no middle arc for strand {name}")
    if any(any(b.arcs[mid]["label"]) for mid, _, _ in strands):
        raise MoveError("triangle arcs carry nonzero labels (not a disc face)")

    # reverse each strand's passage order: outer-in moves to the second
    # crossing, outer-out to the first, and the middle arc flips direction
    for mid, (p, p_out, p_in), (q, q_out, q_in) in strands:
        outer_in, in_end = b.arc_at((p, p_in))
        if in_end != "head" or b.arcs[outer_in]["head"] != (p, p_in):
            raise MoveError("orientation mismatch on triangle")
        outer_out, out_end = b.arc_at((q, q_out))
        if out_end != "tail":
            raise MoveError("orientation mismatch on triangle")
        b.arcs[outer_in]["head"] = (q, q_in)
        b.arcs[outer_out]["tail"] = (p, p_out)
        b.arcs[mid]["tail"] = (q, q_out)
        b.arcs[mid]["head"] = (p, p_in)
    return b.finish()
