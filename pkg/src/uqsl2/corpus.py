"""Fixture corpus: presentation pairs related by moves that must not
change the invariant, plus closed-form anchor values.

The pairs cover Markov conjugation and stabilization, cut-point changes,
component reordering, surgery stabilization by +/-1-framed unknots, and
one hand-constructed handle slide (two surgery descriptions of the same
lens space).  Each pair is evaluated exactly and compared; anchors are
compared against their closed-form values.
"""

from __future__ import annotations

from .report import CheckReport
from .tangle import ClosurePresentation, Component


def _pres(p, strands, word, comps):
    return ClosurePresentation(p=p, strands=strands, word=list(word),
                               components=[Component(*c) for c in comps])


def anchor_cases(p: int):
    """(name, presentation, expected) with expected '1' or '0'."""
    return [
        ("S^3 (empty surgery), unknot colored h_p^-",
         _pres(p, 1, [], [([1], 1, "minus", 0, f"h-{p}")]), 1),
        ("S^1 x S^2 (0-framed unknot surgery)",
         _pres(p, 1, [], [([1], 1, "surgery", 0, None)]), 0),
        ("S^3 via +1-framed unknot surgery",
         _pres(p, 1, [], [([1], 1, "surgery", 1, None)]), 1),
        ("S^3 via -1-framed unknot surgery",
         _pres(p, 1, [], [([1], 1, "surgery", -1, None)]), 1),
        ("S^3 empty presentation",
         _pres(p, 0, [], []), 1),
    ]


def kirby_pairs(p: int):
    """(name, presentation A, presentation B) with equal invariants."""
    trefoil = [1, 1, 1]
    pairs = []
    # Markov stabilization of a colored trefoil (extra strand, extra crossing)
    pairs.append((
        "Markov stabilization (trefoil)",
        _pres(p, 2, trefoil, [([1, 2], 1, "minus", 0, "h1")]),
        _pres(p, 3, trefoil + [2], [([1, 2, 3], 1, "minus", 0, "h1")]),
    ))
    # negative stabilization
    pairs.append((
        "Markov stabilization, negative crossing (unknot)",
        _pres(p, 1, [], [([1], 1, "minus", 0, f"h-{p}")]),
        _pres(p, 2, [-1], [([1, 2], 1, "minus", 0, f"h-{p}")]),
    ))
    # Markov conjugation on a 3-strand trefoil presentation
    pairs.append((
        "Markov conjugation (3-strand trefoil)",
        _pres(p, 3, [1, 2, 1, 2], [([1, 2, 3], 1, "minus", 0, "h1")]),
        _pres(p, 3, [2, 1, 2, 1, 2, -2], [([1, 2, 3], 1, "minus", 0, "h1")]),
    ))
    # cut-point change on a knot component
    pairs.append((
        "cut-point change (trefoil)",
        _pres(p, 2, trefoil, [([1, 2], 1, "minus", 0, f"h+{p}")]),
        _pres(p, 2, trefoil, [([1, 2], 2, "minus", 0, f"h+{p}")]),
    ))
    # cut-point change on a surgery component linked with a colored one
    pairs.append((
        "cut-point change (surgery component of a Hopf pair)",
        _pres(p, 3, [2, 1, 1], [([1], 1, "minus", 0, "h1"),
                                ([2, 3], 2, "surgery", 1, None)]),
        _pres(p, 3, [2, 1, 1], [([1], 1, "minus", 0, "h1"),
                                ([2, 3], 3, "surgery", 1, None)]),
    ))
    # component reordering carries colors along
    pairs.append((
        "component reordering (Hopf link)",
        _pres(p, 2, [1, 1], [([1], 1, "surgery", -1, None),
                             ([2], 2, "minus", 0, f"h-{p}")]),
        _pres(p, 2, [1, 1], [([2], 2, "minus", 0, f"h-{p}"),
                             ([1], 1, "surgery", -1, None)]),
    ))
    # surgery stabilization: split +1-framed unknot against the trefoil
    pairs.append((
        "surgery stabilization +1 (colored trefoil)",
        _pres(p, 2, trefoil, [([1, 2], 1, "minus", 0, "h1")]),
        _pres(p, 3, trefoil, [([1, 2], 1, "minus", 0, "h1"),
                              ([3], 3, "surgery", 1, None)]),
    ))
    pairs.append((
        "surgery stabilization -1 (colored unknot)",
        _pres(p, 1, [], [([1], 1, "minus", 0, f"h+{p}")]),
        _pres(p, 2, [], [([1], 1, "minus", 0, f"h+{p}"),
                         ([2], 2, "surgery", -1, None)]),
    ))
    # handle slide: two surgery descriptions of the same lens space
    pairs.append((
        "handle slide (lens space L(2,1) with blown-up unknot)",
        _pres(p, 2, [], [([1], 1, "surgery", 2, None),
                         ([2], 2, "surgery", -1, None)]),
        _pres(p, 2, [1, 1], [([1], 1, "surgery", 1, None),
                             ([2], 2, "surgery", -1, None)]),
    ))
    # same 3-manifold, independent descriptions: S^1 x S^2 two ways
    pairs.append((
        "S^1 x S^2 via 0-framed unknot and via (+1,+1) Hopf link",
        _pres(p, 1, [], [([1], 1, "surgery", 0, None)]),
        _pres(p, 2, [1, 1], [([1], 1, "surgery", 1, None),
                             ([2], 2, "surgery", 1, None)]),
    ))
    return pairs


def invariance_suite(tower) -> CheckReport:
    from .invariant import h_log

    p = tower.p
    rep = CheckReport(f"invariance(p={p})")
    f = tower.field
    for name, pres, expected in anchor_cases(p):
        val = h_log(tower, pres)
        rep.check(f"anchor: {name} = {expected}",
                  val.exact == f.rational(expected),
                  f"got {val.exact!r} ~ {val.approx:.6f}")
    for name, pa, pb in kirby_pairs(p):
        va = h_log(tower, pa)
        vb = h_log(tower, pb)
        rep.check(f"pair: {name}", va.exact == vb.exact,
                  f"A = {va.approx:.6f} (s={va.s}), B = {vb.approx:.6f} (s={vb.s})")
    # a split 0-framed surgery unknot annihilates any evaluation
    base = _pres(p, 3, [1, 1, 1], [([1, 2], 1, "minus", 0, f"h-{p}"),
                                   ([3], 3, "surgery", 0, None)])
    rep.check("split 0-framed surgery unknot gives 0",
              h_log(tower, base).exact == f.zero)
    # mirroring the corpus flips the signature and uses the inverse prefactor
    pres = _pres(p, 2, [], [([1], 1, "surgery", 1, None),
                            ([2], 2, "surgery", 1, None)])
    mirror = _pres(p, 2, [], [([1], 1, "surgery", -1, None),
                              ([2], 2, "surgery", -1, None)])
    va, vb = h_log(tower, pres), h_log(tower, mirror)
    rep.check("mirror flips signature", va.s == -vb.s and va.s == 2)
    rep.check("mirror values both equal 1 (two blown-up unknots)",
              va.exact == f.one and vb.exact == f.one)
    return rep
