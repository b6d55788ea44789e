"""Exact homology: trigraded dimensions and filtered generator bidegrees.

The plain differential preserves (j, 2c), so plain homology splits into
homogeneous blocks and is pure rank arithmetic.  The perturbed differential
only filters: every entry has dj >= 0 and d(2c) >= 0, hence the spans
C_{j >= j0, 2c >= c0} are subcomplexes.  Writing

    F_i(j0, c0) = dim image( H_i(C_{j >= j0, 2c >= c0}) -> H_i(C) )

the associated-graded multiplicity of generators at filtration corner
(j0, c0) in degree i is the inclusion-exclusion

    F(j0,c0) - F(j0+,c0) - F(j0,c0+) + F(j0+,c0+)

where x+ is the next realized filtration value above x (F = 0 past the last).
Everything decomposes over the (j mod 4, 2c mod 4) summands, which the
perturbed differential preserves; summands with zero homology in a degree are
skipped outright.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .algebra import PERTURBED, PLAIN, ChainComplex
from .errors import DiagramError
from .linalg import kernel_basis, rank_rational  # re-exported API

__all__ = [
    "GradedDims", "FilteredBidegrees", "homology_plain",
    "homology_perturbed", "rank_rational", "kernel_basis", "format_c2",
    "table_rows", "rows_to_tsv", "rows_to_json_obj",
]


@dataclass(frozen=True)
class GradedDims:
    """(i, j, 2c) -> dimension of the trigraded homology."""

    dims: dict[tuple[int, int, int], int]

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    def i_totals(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for (i, _, _), d in self.dims.items():
            out[i] = out.get(i, 0) + d
        return out


@dataclass(frozen=True)
class FilteredBidegrees:
    """Multiset of (i, j, 2c) filtration bidegrees of perturbed generators."""

    multiplicities: dict[tuple[int, int, int], int]

    @property
    def total_dim(self) -> int:
        return sum(self.multiplicities.values())

    def i_totals(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for (i, _, _), m in self.multiplicities.items():
            out[i] = out.get(i, 0) + m
        return out

    def j_totals(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for (_, j, _), m in self.multiplicities.items():
            out[j] = out.get(j, 0) + m
        return out

    def off_diagonal(self) -> list[tuple[int, int, int]]:
        """Entries with 2c != j (witnesses for the totally-nontrivial test)."""
        return sorted(k for k, m in self.multiplicities.items()
                      if m and k[2] != k[1])


def homology_plain(cx: ChainComplex) -> GradedDims:
    """Homology of the plain complex, split into (j, 2c) homogeneous blocks."""
    if cx.variant != PLAIN:
        raise DiagramError("homology_plain needs a plain-variant complex")
    ranks: dict[int, dict[tuple[int, int], int]] = {}
    blocks: dict[int, dict[tuple[int, int], int]] = {}
    for i in cx.degrees:
        per: dict[tuple[int, int], list[int]] = {}
        for flat, jc in enumerate(cx.gradings[i]):
            per.setdefault(jc, []).append(flat)
        blocks[i] = {jc: len(flats) for jc, flats in per.items()}
        d_i = cx.differential[i]
        ranks[i] = {
            jc: linalg.rank(d_i[f] for f in flats)
            for jc, flats in per.items()}
    dims: dict[tuple[int, int, int], int] = {}
    for i in cx.degrees:
        for (j, c2), size in blocks[i].items():
            dim = size - ranks[i][(j, c2)] - ranks.get(i - 1, {}).get((j, c2), 0)
            if dim:
                dims[(i, j, c2)] = dim
    return GradedDims(dims)


def homology_perturbed(cx: ChainComplex) -> FilteredBidegrees:
    """Filtered bidegrees of the perturbed homology, per homological degree."""
    if cx.variant != PERTURBED:
        raise DiagramError("homology_perturbed needs a perturbed-variant complex")
    mult: dict[tuple[int, int, int], int] = {}
    summands: set[tuple[int, int]] = {
        (j % 4, c2 % 4) for i in cx.degrees for (j, c2) in cx.gradings[i]}
    for key in sorted(summands):
        _summand_bidegrees(cx, key, mult)
    return FilteredBidegrees(mult)


def _summand_bidegrees(cx: ChainComplex, key: tuple[int, int],
                       mult: dict[tuple[int, int, int], int]) -> None:
    members: dict[int, list[int]] = {}
    for i in cx.degrees:
        members[i] = [f for f, (j, c2) in enumerate(cx.gradings[i])
                      if (j % 4, c2 % 4) == key]
    row_weights = {i: _row_weights(cx.differential[i]) for i in cx.degrees}
    # block ranks drive the zero-homology skip
    block_rank: dict[int, int] = {}
    for i in cx.degrees:
        elim = linalg.Eliminator(row_weight=row_weights[i])
        for f in members[i]:
            col = cx.differential[i][f]
            if col:
                elim.feed(col)
        block_rank[i] = elim.rank
    for i in cx.degrees:
        if not members[i]:
            continue
        h_dim = len(members[i]) - block_rank[i] - block_rank.get(i - 1, 0)
        if not h_dim:
            continue
        image = linalg.column_space_basis(
            cx.differential[i - 1][f] for f in members.get(i - 1, []))
        d_i = cx.differential[i]
        grades = cx.gradings[i]
        j_vals = sorted({grades[f][0] for f in members[i]}, reverse=True)
        c_vals = sorted({grades[f][1] for f in members[i]}, reverse=True)

        # One elimination sweep per c0: columns enter in decreasing j, each
        # kernel vector found is a cycle of C_{j>=j0, c>=c0}; those that stay
        # independent of the boundary space contribute to F at every corner
        # weakly below their entry level.
        F: dict[tuple[int, int], int] = {}
        for c0 in c_vals:
            cols_c = sorted(
                (f for f in members[i] if grades[f][1] >= c0),
                key=lambda f: -grades[f][0])
            kernel_finder = linalg.Eliminator(track=True,
                                              row_weight=row_weights[i])
            survivor = linalg.Eliminator(row_weight=row_weights[i])
            for vec in image:
                survivor.feed(vec)
            running = 0
            pos = 0
            for j0 in j_vals:
                while pos < len(cols_c) and grades[cols_c[pos]][0] >= j0:
                    f = cols_c[pos]
                    pos += 1
                    cycle = kernel_finder.feed(d_i[f], index=f)
                    if cycle is not None:
                        before = survivor.rank
                        survivor.feed(cycle)
                        if survivor.rank > before:
                            running += 1
                F[(j0, c0)] = running

        def val(j0, c0) -> int:
            return F.get((j0, c0), 0) if j0 is not None and c0 is not None else 0

        def nxt(vals, x):
            p = vals.index(x)
            return vals[p - 1] if p else None

        total = 0
        for j0 in j_vals:
            for c0 in c_vals:
                m = (val(j0, c0) - val(nxt(j_vals, j0), c0)
                     - val(j0, nxt(c_vals, c0))
                     + val(nxt(j_vals, j0), nxt(c_vals, c0)))
                if m:
                    mult[(i, j0, c0)] = mult.get((i, j0, c0), 0) + m
                    total += m
        assert total == h_dim, "filtration multiplicities must sum to dim H"


def _row_weights(cols: linalg.Cols) -> dict[int, int]:
    w: dict[int, int] = {}
    for col in cols:
        for r in col:
            w[r] = w.get(r, 0) + 1
    return w


# -- table serialization ---------------------------------------------------

def format_c2(c2: int) -> str:
    """Exact rendering of c = c2/2 ("1/2", "-3/2", "2", ...)."""
    if c2 % 2 == 0:
        return str(c2 // 2)
    return f"{c2}/2"


def table_rows(result: GradedDims | FilteredBidegrees
               ) -> list[tuple[int, int, int, int]]:
    """Rows (i, j, 2c, dim), sorted lexicographically."""
    data = result.dims if isinstance(result, GradedDims) else result.multiplicities
    return sorted((i, j, c2, d) for (i, j, c2), d in data.items() if d)


def rows_to_tsv(rows: list[tuple[int, int, int, int]]) -> str:
    lines = ["i\tj\tc\tdim"]
    lines += [f"{i}\t{j}\t{format_c2(c2)}\t{d}" for i, j, c2, d in rows]
    return "\n".join(lines) + "\n"


def rows_to_json_obj(rows: list[tuple[int, int, int, int]]) -> list[dict]:
    return [{"i": i, "j": j, "c": format_c2(c2), "dim": d}
            for i, j, c2, d in rows]


def c_value(c2: int) -> Fraction:
    return Fraction(c2, 2)
