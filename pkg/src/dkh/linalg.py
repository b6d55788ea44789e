"""Exact sparse linear algebra over the rationals.

Matrices are stored column-major as lists of ``{row: coeff}`` dicts.  All
arithmetic is exact; coefficients are Python ints or rationals (gmpy2.mpq when
available, else fractions.Fraction).  Floating point is never used.
"""

from __future__ import annotations

from typing import Iterable

try:  # gmpy2 is much faster; fall back to the stdlib.
    from gmpy2 import mpq as QQ
except ImportError:  # pragma: no cover - exercised only without gmpy2
    from fractions import Fraction as QQ

Vec = dict[int, object]
Cols = list[Vec]


def vec_axpy(target: Vec, scalar, source: Vec) -> None:
    """target += scalar * source, dropping exact zeros (in place)."""
    if not scalar:
        return
    for r, c in source.items():
        v = target.get(r, 0) + scalar * c
        if v:
            target[r] = v
        else:
            target.pop(r, None)


class Eliminator:
    """Incremental column echelonization with optional combination tracking.

    Feed columns one at a time; each either creates a new pivot or reduces to
    zero.  With ``track=True`` the expression of every fed column in terms of
    previously accepted pivots is maintained, which yields kernel vectors.
    ``row_weight`` optionally biases pivot choice toward rows that occur
    rarely in the matrix, which keeps fill-in low on cube complexes.
    """

    def __init__(self, track: bool = False,
                 row_weight: dict[int, int] | None = None):
        self.pivots: dict[int, Vec] = {}  # pivot row -> reduced column
        self.combos: dict[int, Vec] = {}  # pivot row -> combo over fed indices
        self.track = track
        self.row_weight = row_weight
        self.rank = 0

    def _pick_pivot(self, col: Vec) -> int:
        if self.row_weight is None:
            return min(col)
        w = self.row_weight
        return min(col, key=lambda r: (w.get(r, 0), r))

    def reduce(self, column: Vec, combo: Vec | None = None) -> tuple[Vec, Vec | None]:
        col = dict(column)
        cmb = dict(combo) if combo is not None else None
        pivots = self.pivots
        while col:
            hit = [r for r in col if r in pivots]
            if not hit:
                return col, cmb
            for row in hit:
                if row not in col:  # zeroed by an earlier step of this pass
                    continue
                piv = pivots[row]
                factor = -QQ(col[row]) / piv[row]
                vec_axpy(col, factor, piv)
                if cmb is not None:
                    vec_axpy(cmb, factor, self.combos[row])
        return col, cmb

    def feed(self, column: Vec, index: int | None = None) -> Vec | None:
        """Insert a column.  Returns a kernel combination if it reduced to zero
        (only when tracking), else None."""
        combo = {index: 1} if (self.track and index is not None) else None
        col, cmb = self.reduce(column, combo)
        if col:
            row = self._pick_pivot(col)
            self.pivots[row] = col
            if self.track:
                self.combos[row] = cmb if cmb is not None else {}
            self.rank += 1
            return None
        return cmb if self.track else None


def rank(cols: Iterable[Vec]) -> int:
    elim = Eliminator()
    for col in cols:
        if col:
            elim.feed(col)
    return elim.rank


def rank_rational(cols: Iterable[Vec]) -> int:
    """Exact rank of a sparse rational matrix (column-major)."""
    return rank(cols)


def kernel_basis(cols: Cols) -> list[Vec]:
    """Basis for the right kernel; vectors are dicts over column indices."""
    elim = Eliminator(track=True)
    out = []
    for idx, col in enumerate(cols):
        if not col:
            out.append({idx: 1})
            continue
        cmb = elim.feed(col, idx)
        if cmb is not None:
            out.append(cmb)
    return out


def column_space_basis(cols: Iterable[Vec]) -> list[Vec]:
    """Echelonized basis of the column span."""
    elim = Eliminator()
    for col in cols:
        if col:
            elim.feed(col)
    return list(elim.pivots.values())


def rank_of_union(basis_a: Iterable[Vec], basis_b: Iterable[Vec]) -> int:
    """dim(span A + span B), reusing A's echelon form."""
    elim = Eliminator()
    for col in basis_a:
        if col:
            elim.feed(col)
    for col in basis_b:
        if col:
            elim.feed(col)
    return elim.rank


def compose(outer: Cols, inner: Cols) -> Cols:
    """Sparse composition outer∘inner (matrix product: outer @ inner)."""
    result: Cols = []
    for col in inner:
        acc: Vec = {}
        for mid, coeff in col.items():
            vec_axpy(acc, coeff, outer[mid])
        result.append(acc)
    return result


def is_zero(cols: Cols) -> bool:
    return all(not col for col in cols)
