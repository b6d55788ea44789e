"""Bundled example diagrams plus placeholder slots for user encodings."""

from __future__ import annotations

from .diagram import Arc, Crossing, SurfaceDiagram
from .errors import UnknownCorpusName
from .moves import apply_r1, apply_r2


def _loop(genus: int, *labels: tuple[int, ...]) -> SurfaceDiagram:
    arcs = tuple(Arc(id=k, tail=None, head=None, label=tuple(lab))
                 for k, lab in enumerate(labels))
    return SurfaceDiagram(genus=genus, arcs=arcs)


def _unknot_g0() -> SurfaceDiagram:
    return _loop(0, ())


def _unknot() -> SurfaceDiagram:
    return _loop(1, (0, 0))


def _essential_10() -> SurfaceDiagram:
    return _loop(1, (1, 0))


def _essential_01() -> SurfaceDiagram:
    return _loop(1, (0, 1))


def _two_parallel() -> SurfaceDiagram:
    return _loop(1, (1, 0), (1, 0))


def _single_cycle_11() -> SurfaceDiagram:
    """A (1,0)-loop under a (0,1)-loop, crossing once (positively).

    Both resolutions of the crossing trace a single circle of class (1,1),
    so both cube edges out of it are single-cycle.
    """
    arcs = (
        Arc(id=0, tail=(0, 2), head=(0, 0), label=(1, 0)),
        Arc(id=1, tail=(0, 1), head=(0, 3), label=(0, 1)),
    )
    crossings = (
        Crossing(id=0, slots=((0, "head"), (1, "tail"), (0, "tail"),
                              (1, "head"))),
    )
    return SurfaceDiagram(genus=1, arcs=arcs, crossings=crossings)


def _kink(chirality: int) -> SurfaceDiagram:
    return apply_r1(_unknot(), {"arc": 0}, chirality)


def _clasp() -> SurfaceDiagram:
    # opposite-sign crossing pair between two (1,0)-loops
    return apply_r2(_two_parallel(), {"over": 0, "under": 1})


def _trefoil() -> SurfaceDiagram:
    """Genus-0 positive trefoil: closure of the 2-strand braid with three
    positive crossings; the over-strand out of each crossing runs under the
    next one."""
    arcs = []
    for k in range(3):
        nxt = (k + 1) % 3
        arcs.append(Arc(id=2 * k, tail=(k, 1), head=(nxt, 0), label=()))
        arcs.append(Arc(id=2 * k + 1, tail=(k, 2), head=(nxt, 3), label=()))
    crossings = []
    for k in range(3):
        prev = (k - 1) % 3
        crossings.append(Crossing(id=k, slots=(
            (2 * prev, "head"), (2 * k, "tail"),
            (2 * k + 1, "tail"), (2 * prev + 1, "head"))))
    return SurfaceDiagram(genus=0, arcs=tuple(arcs),
                          crossings=tuple(crossings))


def _bench_10() -> SurfaceDiagram:
    """Deterministic 10-crossing genus-1 two-component link for benchmarks:
    the one-crossing single-cycle diagram thickened by R2 pushes and a kink."""
    d = _single_cycle_11()
    d = apply_r2(d, {"over": 0, "under": 1})     # 3 crossings
    d = apply_r2(d, {"over": 2, "under": 5})     # 5
    d = apply_r2(d, {"over": 3, "under": 6})     # 7
    d = apply_r2(d, {"over": 4, "under": 7})     # 9
    d = apply_r1(d, {"arc": 8}, 1)               # 10
    return d


_BUILDERS = {
    "unknot-g0": _unknot_g0,
    "unknot": _unknot,
    "essential-10-loop": _essential_10,
    "essential-01-loop": _essential_01,
    "two-parallel": _two_parallel,
    "single-cycle-11": _single_cycle_11,
    "kink-pos": lambda: _kink(1),
    "kink-neg": lambda: _kink(-1),
    "clasp": _clasp,
    "trefoil": _trefoil,
    "bench-10": _bench_10,
}

# Figure-derived links have no machine-readable source; these names are
# reserved so user-supplied encodings slot into the same tooling.
PLACEHOLDERS = {
    "paper-L": "two-component genus-1 link, first ascent family",
    "paper-Lprime": "Dehn twist partner of paper-L",
    "paper-J": "two-component genus-1 link, second family (rank-1 span)",
    "paper-Jprime": "Dehn twist partner of paper-J",
    "paper-J-k-l": "twist family J(k,l)",
    "paper-genus2": "totally nontrivial link on the genus-2 surface",
}


def corpus_list() -> list[dict]:
    rows = [{"name": name, "placeholder": False} for name in sorted(_BUILDERS)]
    rows += [{"name": name, "placeholder": True, "description": desc}
             for name, desc in sorted(PLACEHOLDERS.items())]
    return rows


def corpus_get(name: str) -> SurfaceDiagram:
    builder = _BUILDERS.get(name)
    if builder is not None:
        return builder()
    if name in PLACEHOLDERS:
        raise UnknownCorpusName(
            f"{name!r} is a placeholder slot ({PLACEHOLDERS[name]}); supply "
            "your own encoding file and load it with parse_diagram")
    raise UnknownCorpusName(f"unknown corpus name {name!r}")
