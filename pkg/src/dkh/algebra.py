"""State bases, gradings, and the (dotted, doubled) chain complex.

Every circle carries the rank-2 module <v+, v->; a k-circle smoothing carries
the 2^k sign states twice, once unshifted (superscript u) and once shifted
down one quantum degree (superscript l), for 2^(k+1) basis states.  Gradings
on a state a over smoothing S of a diagram with writhe wr and n- negative
crossings:

    i(a)  = (# 1-resolutions in S) - n-
    j(a)  = (#+ signs) - (#- signs) + i(a) + wr      (minus 1 when a is an l-state)
    c(a)  = (# dotted -) - (# dotted +) + j(a)/2     (stored as 2c, an integer)

Differential components per edge, acting on the affected circle(s) and by the
identity elsewhere, multiplied by the edge sign:

    merge:  v_s (x) v_t -> v_{s*t}                     (coefficient 1)
    split:  v_s -> sum of v_a (x) v_b with a*b = -s    (coefficient 1)
    single: u-states -> l-states, same signs, coefficient 1;
            l-states -> u-states, affected sign flipped, coefficient 2
            (the superscript flip is global; merge/split never change it)

Each matrix entry is homogeneous with (dj, d2c) in {(0,0),(0,4),(4,0),(4,4)};
the plain variant keeps only the (0,0) part of every edge map (the perturbed
variant keeps everything).  Grouping the perturbed entries by bidegree
reproduces the degree-0/+2/+4 component tables entry for entry; four printed
rows of those tables carry impossible source symbols (dotted sources in
undotted blocks and vice versa) and are corrected here by homogeneity and by
the requirement that deleting dots yields the doubled Lee maps - see
tests/test_algebra.py, which pins the whole corrected table.

The assembled differential squares to zero unless the cube contains a face
with two single-cycle edges on disjoint circles; no assignment following the
tables above can square to zero there (the two face paths flip different
circles, landing on independent states), so assembly refuses such cubes
rather than emit a non-complex.  See README "Known limitation".
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from . import linalg
from .diagram import SurfaceDiagram, writhe
from .errors import DiagramError, SingleCycleInterferenceError
from .smoothing import MERGE, SINGLE, SPLIT, CubeEdge, DottedCube, Resolution

PLAIN, PERTURBED = "plain", "perturbed"

_VARIANTS = (PLAIN, PERTURBED)


@dataclass(frozen=True)
class State:
    """Basis state: a sign per circle plus the global u/l superscript."""

    vertex: Resolution
    superscript: str  # "u" | "l"
    signs: tuple[int, ...]  # +1 / -1 per circle, canonical circle order
    dots: tuple[bool, ...]


@dataclass(frozen=True)
class Grading:
    i: int
    j: int
    c2: int  # 2c, kept integral

    @property
    def c(self) -> Fraction:
        return Fraction(self.c2, 2)


def state_basis(cube: DottedCube, vertex: Resolution) -> list[State]:
    """The 2^(k+1) states at a vertex, in local index order."""
    smoothing = cube.vertices[vertex]
    k = len(smoothing.circles)
    dots = tuple(c.dotted for c in smoothing.circles)
    out = []
    for ell in (0, 1):
        for bits in range(1 << k):
            signs = tuple(-1 if (bits >> c) & 1 else 1 for c in range(k))
            out.append(State(vertex=vertex, superscript="l" if ell else "u",
                             signs=signs, dots=dots))
    return out


def grading(state: State, d: SurfaceDiagram) -> Grading:
    i = sum(state.vertex) - d.n_minus
    plus = sum(1 for s in state.signs if s > 0)
    minus = len(state.signs) - plus
    j = plus - minus + i + writhe(d) - (1 if state.superscript == "l" else 0)
    dotc = sum((1 if s < 0 else -1) for s, dot in zip(state.signs, state.dots) if dot)
    return Grading(i=i, j=j, c2=2 * dotc + j)


# -- local edge maps ------------------------------------------------------

def _local_gradings(cube: DottedCube, vertex: Resolution):
    """(j, 2c) for every local state index at a vertex."""
    smoothing = cube.vertices[vertex]
    k = len(smoothing.circles)
    i = smoothing.height
    wr = writhe(cube.diagram)
    dotted = [c.dotted for c in smoothing.circles]
    out = []
    for idx in range(1 << (k + 1)):
        ell, bits = idx >> k, idx & ((1 << k) - 1)
        minus = bin(bits).count("1")
        j = (k - 2 * minus) + i + wr - ell
        dotc = sum((1 if (bits >> c) & 1 else -1)
                   for c in range(k) if dotted[c])
        out.append((j, 2 * dotc + j))
    return out


def edge_map(cube: DottedCube, edge: CubeEdge, variant: str) -> linalg.Cols:
    """Sparse map from source-vertex states to target-vertex states.

    Columns are indexed by local source state, rows by local target state.
    """
    if variant not in _VARIANTS:
        raise DiagramError(f"unknown variant {variant!r}")
    ks = len(cube.vertices[edge.source].circles)
    kt = len(cube.vertices[edge.target].circles)
    src_g = _local_gradings(cube, edge.source)
    tgt_g = _local_gradings(cube, edge.target)
    cols: linalg.Cols = [dict() for _ in range(1 << (ks + 1))]

    def put(src_idx, tgt_idx, coeff):
        if variant == PLAIN:
            sj, sc = src_g[src_idx]
            tj, tc = tgt_g[tgt_idx]
            if tj != sj or tc != sc:
                return
        col = cols[src_idx]
        col[tgt_idx] = col.get(tgt_idx, 0) + coeff * edge.sign

    for src_idx in range(1 << (ks + 1)):
        ell, bits = src_idx >> ks, src_idx & ((1 << ks) - 1)
        base = 0
        for s_i, t_i in edge.bystanders:
            base |= ((bits >> s_i) & 1) << t_i
        if edge.kind == MERGE:
            a, b = edge.affected_src
            t = edge.affected_tgt[0]
            merged = ((bits >> a) & 1) ^ ((bits >> b) & 1)
            put(src_idx, (ell << kt) | base | (merged << t), 1)
        elif edge.kind == SPLIT:
            a = edge.affected_src[0]
            t1, t2 = edge.affected_tgt
            s = (bits >> a) & 1
            for b1 in (0, 1):
                b2 = b1 ^ s ^ 1  # sign product of the two outputs is -source
                put(src_idx, (ell << kt) | base | (b1 << t1) | (b2 << t2), 1)
        else:  # SINGLE: global superscript flip
            a = edge.affected_src[0]
            t = edge.affected_tgt[0]
            s = (bits >> a) & 1
            if ell == 0:
                put(src_idx, (1 << kt) | base | (s << t), 1)
            else:
                put(src_idx, base | ((s ^ 1) << t), 2)
    return cols


# -- the chain complex ----------------------------------------------------

@dataclass(frozen=True)
class ChainComplex:
    variant: str
    cube: DottedCube
    degrees: tuple[int, ...]  # homological degrees with chain groups
    dims: dict[int, int]
    basis: dict[int, list[tuple[Resolution, int]]]  # i -> (vertex, local idx)
    gradings: dict[int, list[tuple[int, int]]]  # i -> [(j, 2c)] per flat index
    differential: dict[int, linalg.Cols]  # i -> columns into degree i+1

    @cached_property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    def d_squared_is_zero(self) -> bool:
        for i in self.degrees:
            d0 = self.differential.get(i)
            d1 = self.differential.get(i + 1)
            if d0 and d1:
                if not linalg.is_zero(linalg.compose(d1, d0)):
                    return False
        return True

    def state_at(self, i: int, flat: int) -> State:
        vertex, local = self.basis[i][flat]
        smoothing = self.cube.vertices[vertex]
        k = len(smoothing.circles)
        ell, bits = local >> k, local & ((1 << k) - 1)
        return State(
            vertex=vertex, superscript="l" if ell else "u",
            signs=tuple(-1 if (bits >> c) & 1 else 1 for c in range(k)),
            dots=tuple(c.dotted for c in smoothing.circles))


def assemble_complex(cube: DottedCube, variant: str, *,
                     gap_policy: str = "raise",
                     verify: bool = True) -> ChainComplex:
    """Chain groups indexed by height plus the signed sum of edge maps.

    ``gap_policy`` is "raise" (reject cubes whose differential cannot square
    to zero, see module docstring) or "force" (assemble anyway and skip the
    d^2 check; only useful for inspecting the defect).
    """
    if variant not in _VARIANTS:
        raise DiagramError(f"unknown variant {variant!r}")
    if gap_policy not in ("raise", "force"):
        raise DiagramError(f"unknown gap_policy {gap_policy!r}")
    if gap_policy == "raise":
        bad = cube.interfering_faces(require_undotted=(variant == PLAIN))
        if bad:
            v, p, q = bad[0]
            raise SingleCycleInterferenceError(
                f"cube face at vertex {v} has single-cycle edges at crossing "
                f"positions {p} and {q} with disjoint circles; the {variant} "
                f"differential does not square to zero on this configuration "
                f"({len(bad)} such face(s))")

    heights = sorted({s.height for s in cube.vertices.values()})
    basis: dict[int, list[tuple[Resolution, int]]] = {i: [] for i in heights}
    offsets: dict[Resolution, int] = {}
    gradings_: dict[int, list[tuple[int, int]]] = {i: [] for i in heights}
    for r in sorted(cube.vertices):
        s = cube.vertices[r]
        k = len(s.circles)
        offsets[r] = len(basis[s.height])
        basis[s.height].extend((r, loc) for loc in range(1 << (k + 1)))
        gradings_[s.height].extend(_local_gradings(cube, r))
    dims = {i: len(b) for i, b in basis.items()}

    differential: dict[int, linalg.Cols] = {
        i: [dict() for _ in range(dims[i])] for i in heights}
    for e in cube.edges:
        i = cube.vertices[e.source].height
        src_off = offsets[e.source]
        tgt_off = offsets[e.target]
        for local_src, col in enumerate(edge_map(cube, e, variant)):
            if not col:
                continue
            target = differential[i][src_off + local_src]
            for local_tgt, coeff in col.items():
                row = tgt_off + local_tgt
                v = target.get(row, 0) + coeff
                if v:
                    target[row] = v
                else:
                    del target[row]

    cx = ChainComplex(variant=variant, cube=cube, degrees=tuple(heights),
                      dims=dims, basis=basis, gradings=gradings_,
                      differential=differential)
    if verify and gap_policy == "raise":
        assert cx.d_squared_is_zero(), \
            "internal error: d^2 != 0 (differential table or sign bug)"
    return cx


# -- r/g change of basis --------------------------------------------------

def to_rg_basis(k: int) -> linalg.Cols:
    """Matrix of v-coordinates -> r/g-coordinates on a k-circle value space.

    Basis index bit conventions: bit 0 in a v-index means v+, 1 means v-;
    bit 0 in an r/g-index means r, 1 means g, with r = (v+ + v-)/2 and
    g = (v+ - v-)/2 on each circle.
    """
    cols: linalg.Cols = []
    for vbits in range(1 << k):
        col = {}
        for rgbits in range(1 << k):
            sign = -1 if bin(rgbits & vbits).count("1") % 2 else 1
            col[rgbits] = sign
        cols.append(col)
    return cols


def from_rg_basis(k: int) -> linalg.Cols:
    """Inverse of :func:`to_rg_basis` (exact halves appear here)."""
    half_k = Fraction(1, 2 ** k)
    cols: linalg.Cols = []
    for rgbits in range(1 << k):
        col = {}
        for vbits in range(1 << k):
            sign = -1 if bin(rgbits & vbits).count("1") % 2 else 1
            col[vbits] = sign * half_k
        cols.append(col)
    return cols
