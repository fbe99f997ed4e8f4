"""Exact rational linear algebra: rank and small convex-hull feasibility.

Everything here runs on Fractions; there is no floating point and no
tolerance anywhere.  The systems are tiny (at most a few dozen rows and
columns) so plain Gaussian elimination and a phase-one simplex with Bland's
rule are both fast enough and certifiably exact.
"""

from __future__ import annotations

from fractions import Fraction


def rational_rank(rows):
    """Rank over the rationals of a list of equal-length rows."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        lead = m[rank][col]
        for r in range(rank + 1, len(m)):
            f = m[r][col]
            if f:
                scale = f / lead
                row = m[r]
                prow = m[rank]
                for c in range(col, ncols):
                    row[c] -= scale * prow[c]
        rank += 1
        if rank == len(m):
            break
    return rank


def affine_rank(points):
    """Dimension of the affine span of a nonempty list of points."""
    pts = [tuple(p) for p in points]
    base = pts[0]
    rows = [[a - b for a, b in zip(p, base)] for p in pts[1:]]
    return rational_rank(rows) if rows else 0


def _pivot(tab, prow, pcol):
    lead = tab[prow][pcol]
    tab[prow] = [x / lead for x in tab[prow]]
    for r in range(len(tab)):
        if r == prow:
            continue
        f = tab[r][pcol]
        if f:
            prow_vals = tab[prow]
            tab[r] = [x - f * y for x, y in zip(tab[r], prow_vals)]


def in_convex_hull(point, generators):
    """Exact membership of `point` in the convex hull of `generators`.

    Solves the feasibility problem  sum(l_i g_i) = p, sum(l_i) = 1, l >= 0
    by a phase-one simplex over the rationals.  Bland's rule (smallest
    entering index, smallest basic index on ties) rules out cycling, so
    termination is guaranteed.
    """
    gens = [tuple(g) for g in generators]
    p = tuple(point)
    if p in gens:
        return True
    if not gens:
        return False
    if any(len(g) != len(p) for g in gens):
        raise ValueError("all points must share one ambient dimension")

    d = len(p)
    nrows = d + 1
    nvars = len(gens)
    tab = []
    for r in range(nrows):
        if r < d:
            coeffs = [Fraction(g[r]) for g in gens]
            rhs = Fraction(p[r])
        else:
            coeffs = [Fraction(1)] * nvars
            rhs = Fraction(1)
        if rhs < 0:
            coeffs = [-c for c in coeffs]
            rhs = -rhs
        art = [Fraction(0)] * nrows
        art[r] = Fraction(1)
        tab.append(coeffs + art + [rhs])
    basis = [nvars + r for r in range(nrows)]

    while True:
        # reduced costs for minimizing the artificial sum: add the rows
        # whose basic variable is still artificial
        obj = [Fraction(0)] * nvars
        for r in range(nrows):
            if basis[r] >= nvars:
                row = tab[r]
                for j in range(nvars):
                    obj[j] += row[j]
        entering = next((j for j in range(nvars) if obj[j] > 0), None)
        if entering is None:
            break
        candidates = [
            (tab[r][-1] / tab[r][entering], basis[r], r)
            for r in range(nrows)
            if tab[r][entering] > 0
        ]
        _, _, leave = min(candidates)
        _pivot(tab, leave, entering)
        basis[leave] = entering

    residue = sum(tab[r][-1] for r in range(nrows) if basis[r] >= nvars)
    return residue == 0
