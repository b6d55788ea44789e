"""Decision layer: totally-nontrivial test, elementary rank, ascent reports.

A link is totally nontrivial when for every nonzero class gamma the perturbed
homology has a generator with c != j/2.  Such a link cannot be slid off any
essential destabilizing curve, which is what the ascent conclusions consume.
The reports never claim a concordance exists; they only classify what any
concordance between the two inputs must look like.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import linalg
from .algebra import PERTURBED, assemble_complex
from .diagram import (CohomologyClass, SurfaceDiagram, component_classes,
                      nonzero_classes)
from .homology import FilteredBidegrees, homology_perturbed
from .smoothing import build_cube

NOT_PSEUDOSTRICT = "not_pseudostrict"

ASCENT_CASE_I = "ascent_by_theorem_case_i"
ASCENT_CASE_II = "ascent_by_theorem_case_ii"
ASCENT_ELEMENTARY = "ascent_by_elementary"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class GammaVerdict:
    gamma: tuple[int, ...]
    witness: tuple[int, int, int] | None  # (i, j, 2c) with 2c != j
    collapsed: bool
    by_prefilter: bool = False  # decided without a homology run


@dataclass(frozen=True)
class TntResult:
    genus: int
    verdicts: tuple[GammaVerdict, ...]
    overall: bool
    warning: str | None = None


def _pairs_zero_on_arcs(d: SurfaceDiagram, gamma: CohomologyClass) -> bool:
    return all(
        gamma.pair(tuple(v % 2 for v in a.label)) == 0 for a in d.arcs)


def _verdict_for(d: SurfaceDiagram, gamma: CohomologyClass,
                 use_prefilter: bool) -> GammaVerdict:
    if use_prefilter and _pairs_zero_on_arcs(d, gamma):
        # no circle ever acquires a dot, so 2c = j on every state
        return GammaVerdict(gamma=gamma.bits, witness=None, collapsed=True,
                            by_prefilter=True)
    fb = perturbed_bidegrees(d, gamma)
    off = fb.off_diagonal()
    if off:
        return GammaVerdict(gamma=gamma.bits, witness=off[0], collapsed=False)
    return GammaVerdict(gamma=gamma.bits, witness=None, collapsed=True)


def perturbed_bidegrees(d: SurfaceDiagram,
                        gamma: CohomologyClass) -> FilteredBidegrees:
    cube = build_cube(d, gamma)
    return homology_perturbed(assemble_complex(cube, PERTURBED))


def is_totally_nontrivial(d: SurfaceDiagram, *,
                          use_prefilter: bool = True) -> TntResult:
    """Exhaustive check over all 2^(2g) - 1 nonzero classes."""
    if d.genus == 0:
        return TntResult(
            genus=0, verdicts=(), overall=True,
            warning="genus 0: there are no nonzero classes to test, so the "
                    "property holds vacuously")
    gammas = list(nonzero_classes(d.genus))
    workers = int(os.environ.get("DKH_THREADS", "1") or "1")
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            verdicts = tuple(pool.map(
                lambda g: _verdict_for(d, g, use_prefilter), gammas))
    else:
        verdicts = tuple(_verdict_for(d, g, use_prefilter) for g in gammas)
    overall = all(v.witness is not None for v in verdicts)
    return TntResult(genus=d.genus, verdicts=verdicts, overall=overall)


def elementary_rank(d: SurfaceDiagram) -> int:
    """Rank over the rationals of the span of the component classes."""
    cols = [
        {k: v for k, v in enumerate(vec) if v}
        for vec in component_classes(d)]
    return linalg.rank(cols)


@dataclass(frozen=True)
class ObstructionReport:
    tnt: TntResult
    elementary_rank: int
    genus_pair: tuple[int, int]
    conclusion: str
    assumptions: tuple[str, ...] = field(default=())

    def to_obj(self) -> dict:
        return {
            "schema": 1,
            "genus_pair": list(self.genus_pair),
            "assumptions": list(self.assumptions),
            "elementary_rank": self.elementary_rank,
            "totally_nontrivial": {
                "overall": self.tnt.overall,
                "warning": self.tnt.warning,
                "per_gamma": [
                    {"gamma": ",".join(map(str, v.gamma)),
                     "witness": (None if v.witness is None else
                                 {"i": v.witness[0], "j": v.witness[1],
                                  "c2": v.witness[2]}),
                     "collapsed": v.collapsed,
                     "by_prefilter": v.by_prefilter}
                    for v in self.tnt.verdicts],
            },
            "conclusion": self.conclusion,
        }


def ascent_report(d1: SurfaceDiagram, d2: SurfaceDiagram,
                  assumptions: tuple[str, ...] = ()) -> ObstructionReport:
    """Classify what any concordance from d1's link to d2's must be.

    Conclusions, in precedence order:
      * ascent_by_theorem_case_i:  d1 totally nontrivial and g1 > g2;
      * ascent_by_theorem_case_ii: d1 totally nontrivial, g1 = g2, and the
        caller asserts the concordance is not pseudostrict (this library
        cannot verify that hypothesis; it is recorded as an assumption);
      * ascent_by_elementary: the component classes of d1 span a subspace of
        rank >= 2, with the same genus/pseudostrict side conditions;
      * inconclusive.
    """
    tnt = is_totally_nontrivial(d1)
    rank = elementary_rank(d1)
    g1, g2 = d1.genus, d2.genus
    not_ps = NOT_PSEUDOSTRICT in assumptions
    tnt_applies = tnt.overall and g1 >= 1
    if tnt_applies and g1 > g2:
        conclusion = ASCENT_CASE_I
    elif tnt_applies and g1 == g2 and not_ps:
        conclusion = ASCENT_CASE_II
    elif rank >= 2 and (g1 > g2 or not_ps):
        conclusion = ASCENT_ELEMENTARY
    else:
        conclusion = INCONCLUSIVE
    return ObstructionReport(tnt=tnt, elementary_rank=rank,
                             genus_pair=(g1, g2), conclusion=conclusion,
                             assumptions=tuple(assumptions))
