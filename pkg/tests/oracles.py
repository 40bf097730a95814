"""Independent brute-force oracles the fast implementations are tested against.

Everything here recomputes values from the defining formulas, deliberately
avoiding the closed forms under test.
"""

from __future__ import annotations

from fractions import Fraction

from tnormcat import RCat, TailSeq, TNorm, apply
from tnormcat.completeness import FROM_SEQ, TO_SEQ


def interval_collapse_apply(intervals, p: Fraction, q: Fraction) -> Fraction:
    """Definitional case split: collapse inside a shared interval, else min."""
    for a, b in intervals:
        if a <= p <= b and a <= q <= b:
            return a
    return min(p, q)


def residuum_bruteforce(t: TNorm, p: Fraction, q: Fraction, n: int = 120) -> Fraction:
    """Largest candidate z with p & z <= q over a fine grid plus special points.

    The candidate set contains every value the closed forms can produce, so
    agreement with this maximum is an exact check, not an approximation.
    """
    candidates = {Fraction(k, n) for k in range(n + 1)}
    candidates.update({q, Fraction(1) - p + q, Fraction(1) - p})
    if p != 0:
        candidates.add(q / p)
    for a, b in t.intervals:
        candidates.update((a, b))
    best = Fraction(0)
    for z in sorted(candidates):
        if 0 <= z <= 1 and apply(t, p, z) <= q and z > best:
            best = z
    return best


def power_hom_bruteforce(base: RCat, fiber: RCat, f_map, g_map, grid=()) -> Fraction:
    """sup of q with q ∧ hom(x,y) <= hom(f(x), g(y)), scanned over candidates.

    Candidates are the supplied grid extended with every hom value of both
    categories (plus 0 and 1); the true supremum is always one of these.
    """
    candidates = {Fraction(0), Fraction(1)}
    candidates.update(g for g in grid)
    for cat in (base, fiber):
        for row in cat.hom:
            candidates.update(row)
    fi = tuple(fiber.index(lbl) for lbl in f_map)
    gi = tuple(fiber.index(lbl) for lbl in g_map)
    best = Fraction(0)
    n = len(base.elements)
    for q in sorted(candidates):
        ok = all(
            min(q, base.hom[i][j]) <= fiber.hom[fi[i]][gi[j]]
            for i in range(n)
            for j in range(n)
        )
        if ok and q > best:
            best = q
    return best


def tail_value_bruteforce(seq: TailSeq, x, direction: str, cycles: int = 3) -> Fraction:
    """sup-inf over a truncated horizon of prefix + the given number of cycles."""
    cat = seq.carrier
    horizon = len(seq.prefix) + cycles * len(seq.cycle)
    xi = cat.index(x)
    best = None
    for lam in range(horizon - len(seq.cycle) + 1):
        vals = []
        for mu in range(lam, horizon):
            ci = cat.index(seq.element_at(mu))
            vals.append(cat.hom[ci][xi] if direction == FROM_SEQ else cat.hom[xi][ci])
        inf = min(vals)
        if best is None or inf > best:
            best = inf
    return best


def c1_sides(t: TNorm, p, q, u):
    lhs = min(apply(t, p, q), u)
    rhs = max(apply(t, min(p, u), q), apply(t, p, min(q, u)))
    return lhs, rhs


def c2_holds(t: TNorm, p, u) -> bool:
    return not (u <= apply(t, p, p)) or apply(t, u, p) == u
