"""Exact rational witnesses for rank-2 matroids and their certificates.

A witness is a 2 x 2n matrix over Q; its vector of 2x2 column minors encodes
a point whose nonzero pattern realizes a symmetric matroid.  A symplectic
certificate additionally needs the n diagonal minors to sum to zero while the
admissible nonzero pattern matches the target basis family exactly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .core import diagonal_pairs, is_admissible_pair, pair, star
from .errors import NotRepresentableError, RankDeficientError
from .matroid import degree, from_bases, is_representable


def plucker_vector(matrix):
    """All 2x2 column minors x[i,j] = det of columns (i, j) with i < j.

    Raises RankDeficientError when every minor vanishes.
    """
    top, bot = matrix
    m = len(top)
    if len(bot) != m:
        raise ValueError("both rows must have the same length")
    out = {}
    for i in range(m):
        ti, bi = top[i], bot[i]
        for j in range(i + 1, m):
            out[(i + 1, j + 1)] = ti * bot[j] - top[j] * bi
    if not any(out.values()):
        raise RankDeficientError("all 2x2 minors vanish")
    return out


class PluckerWitness:
    """Immutable 2 x 2n rational matrix with its derived minor vector."""

    def __init__(self, matrix):
        rows = tuple(tuple(Fraction(x) for x in row) for row in matrix)
        if len(rows) != 2:
            raise ValueError("a witness matrix has exactly two rows")
        if len(rows[0]) != len(rows[1]) or len(rows[0]) % 2 or not rows[0]:
            raise ValueError("rows must have equal positive even length")
        self.matrix = rows
        self.n = len(rows[0]) // 2
        self.plucker = plucker_vector(rows)

    def column(self, q):
        return (self.matrix[0][q - 1], self.matrix[1][q - 1])

    def scale_column(self, q, c):
        c = Fraction(c)
        if c == 0:
            raise ValueError("column scale must be nonzero")
        rows = [list(self.matrix[0]), list(self.matrix[1])]
        rows[0][q - 1] *= c
        rows[1][q - 1] *= c
        return PluckerWitness(rows)

    @cached_property
    def support(self):
        return frozenset(pr for pr, v in self.plucker.items() if v)

    @cached_property
    def admissible_support(self):
        return frozenset(pr for pr in self.support if is_admissible_pair(pr, self.n))

    def __eq__(self, other):
        return isinstance(other, PluckerWitness) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"PluckerWitness(n={self.n}, matrix={self.matrix})"


def matroid_of_witness(w):
    """The symmetric matroid cut out by the nonzero minors; always valid."""
    return from_bases(w.support, w.n)


def symplectic_sum(w):
    """Sum of the n diagonal minors; the single linear condition for a
    point of the ambient variety to be isotropic."""
    return sum((w.plucker[pr] for pr in diagonal_pairs(w.n)), Fraction(0))


def build_witness(M, bag_values=None):
    """Realize a symmetric matroid: loops get zero columns and every position
    of one bag gets the column (1, a) for that bag's value a.

    Distinct bag values make exactly the cross-bag minors nonzero.
    """
    values = list(range(M.length)) if bag_values is None else list(bag_values)
    if len(set(values)) != M.length:
        raise ValueError("bag values must be pairwise distinct")
    top = [Fraction(0)] * (2 * M.n)
    bot = [Fraction(0)] * (2 * M.n)
    for value, bag in zip(values, M.bags):
        for q in bag:
            top[q - 1] = Fraction(1)
            bot[q - 1] = Fraction(value)
    return PluckerWitness((top, bot))


def build_symplectic_witness(N):
    """Certificate matrix for a representable symplectic matroid.

    A degree-0 lifting realizes N with all diagonal minors zero, so the
    diagonal sum vanishes for free.  Otherwise the chosen lifting has at
    least two diagonal bases: bag values are picked so that the diagonal
    minors away from one distinguished label i0 have a nonzero sum, and the
    column of star(i0) is rescaled to cancel it.  Rescaling one column by a
    nonzero constant cannot change the nonzero pattern, so the certificate
    survives intact.
    """
    report = is_representable(N)
    if not report.representable:
        raise NotRepresentableError(
            "every lifting has exactly one diagonal base; no witness exists"
        )
    M = report.witness_lifting
    if degree(M) == 0:
        return build_witness(M)

    n = N.n
    bag_of = {q: k for k, bag in enumerate(M.bags) for q in bag}
    diag = [i for i in range(1, n + 1) if pair(i, star(i, n)) in M.bases]
    # residual coefficients per bag when label i0's diagonal term is left out;
    # some i0 always gives a nonzero functional because the diagonal bags of
    # two distinct labels can never cancel each other for every choice of i0
    chosen, coeff = None, None
    for i0 in diag:
        c = [0] * M.length
        for i in diag:
            if i == i0:
                continue
            c[bag_of[star(i, n)]] += 1
            c[bag_of[i]] -= 1
        if any(c):
            chosen, coeff = i0, c
            break
    assert chosen is not None, "degree >= 2 guarantees a usable diagonal label"
    values = list(range(M.length))
    if sum(c * v for c, v in zip(coeff, values)) == 0:
        bump = next(k for k, c in enumerate(coeff) if c)
        values[bump] += M.length  # stays distinct, moves off the bad hyperplane
    w = build_witness(M, values)
    rest = sum(
        (w.plucker[pair(i, star(i, n))] for i in diag if i != chosen), Fraction(0)
    )
    lead = w.plucker[pair(chosen, star(chosen, n))]
    return w.scale_column(star(chosen, n), -rest / lead)


@dataclass(frozen=True)
class CertificateCheck:
    ok: bool
    reason: str | None = None

    def __bool__(self):
        return self.ok


def grassmann_plucker_ok(plucker, m):
    """Three-term identity x_ab*x_cd - x_ac*x_bd + x_ad*x_bc = 0 for every
    quadruple a < b < c < d of the m columns."""
    for a, b, c, d in itertools.combinations(range(1, m + 1), 4):
        if (
            plucker[(a, b)] * plucker[(c, d)]
            - plucker[(a, c)] * plucker[(b, d)]
            + plucker[(a, d)] * plucker[(b, c)]
        ):
            return False
    return True


def verify_certificate(w, N):
    """Full certificate check of a witness against a symplectic matroid.

    Verifies rank 2, every three-term minor identity, the vanishing of the
    diagonal sum, and that the admissible nonzero pattern is exactly the
    basis family of N.
    """
    if w.n != N.n:
        return CertificateCheck(False, "witness and matroid sizes differ")
    if not any(w.plucker.values()):
        return CertificateCheck(False, "matrix is rank deficient")
    if not grassmann_plucker_ok(w.plucker, 2 * w.n):
        return CertificateCheck(False, "a three-term minor identity fails")
    if symplectic_sum(w) != 0:
        return CertificateCheck(False, "diagonal minor sum is nonzero")
    if w.admissible_support != N.bases:
        return CertificateCheck(False, "admissible nonzero pattern differs")
    return CertificateCheck(True)


def witness_to_dict(w):
    """JSON-ready form: matrix entries and minors as exact 'p/q' strings."""
    return {
        "n": w.n,
        "matrix": [[str(x) for x in row] for row in w.matrix],
        "plucker": [
            [list(pr), str(v)] for pr, v in sorted(w.plucker.items())
        ],
        "symplectic_sum": str(symplectic_sum(w)),
    }


def witness_from_dict(data):
    matrix = [[Fraction(x) for x in row] for row in data["matrix"]]
    return PluckerWitness(matrix)
