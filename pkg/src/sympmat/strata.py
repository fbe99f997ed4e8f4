"""Torus bookkeeping for the Grassmannian of isotropic lines.

Stabilizer dimensions, dimensions of the matroid strata and their quotients,
Schubert cell data, Betti numbers, fixed points, and the complete small-n
classification of torus-invariant subvariety types.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .core import (
    admissible_pairs,
    hyperoctahedral_group,
    is_admissible_pair,
    pair,
    star,
)
from .errors import NotRepresentableError, TooLargeError
from .linalg import rational_rank
from .matroid import (
    SymplecticMatroid,
    Trichotomy,
    degree,
    enumerate_symplectic,
    is_representable,
    orbits,
)
from .polytope import affine_dim, symplectic_polytope

TORUS_AMBIENT = "Tprime"  # all 2n diagonal entries independent
TORUS_SYMPLECTIC = "T"  # n entries, the starred half carrying the inverses


@dataclass(frozen=True)
class StabilizerReport:
    torus: str
    dim: int
    components: int | None


def _exponent_vector(pr, n, torus):
    if torus == TORUS_AMBIENT:
        v = [0] * (2 * n)
        v[pr[0] - 1] += 1
        v[pr[1] - 1] += 1
    else:
        v = [0] * n
        for q in pr:
            if q <= n:
                v[q - 1] += 1
            else:
                v[2 * n - q] -= 1
    return v


def stabilizer(M, torus=TORUS_SYMPLECTIC):
    """Stabilizer of any point of the stratum of M, which depends on M alone.

    A torus element fixes such a point exactly when all base monomials t_i*t_j
    take one common value, so the stabilizer dimension is the parameter count
    minus the rank of the differences of base exponent vectors.  The common
    value itself is determined by the point, which is why no extra degree of
    freedom is subtracted: a single-base matroid gets the full torus back.

    Component counts are only computed in the finite case (dim 0), by
    enumerating the sign vectors in {+1,-1}^n; the ambient torus always has a
    positive-dimensional stabilizer, so components stay None there.
    """
    if torus not in (TORUS_AMBIENT, TORUS_SYMPLECTIC):
        raise ValueError(f"unknown torus {torus!r}")
    n = M.n
    vecs = [_exponent_vector(pr, n, torus) for pr in sorted(M.bases)]
    base = vecs[0]
    rows = [[a - b for a, b in zip(v, base)] for v in vecs[1:]]
    params = 2 * n if torus == TORUS_AMBIENT else n
    dim = params - (rational_rank(rows) if rows else 0)
    components = None
    if torus == TORUS_SYMPLECTIC and dim == 0:
        if n > 12:
            raise TooLargeError("component enumeration supports n <= 12")
        components = 0
        for signs in itertools.product((1, -1), repeat=n):
            values = set()
            for v in vecs:
                prod = 1
                for s, e in zip(signs, v):
                    if e % 2:
                        prod *= s
                values.add(prod)
                if len(values) > 1:
                    break
            if len(values) == 1:
                components += 1
    return StabilizerReport(torus, dim, components)


@dataclass(frozen=True)
class FormulaDims:
    """Value of the closed-form dimension expression, with its case tag."""

    case: str
    value: int


@dataclass(frozen=True)
class CellDims:
    total: int
    fiber: int
    quotient: int
    formula: FormulaDims
    flagged: bool  # length-2 liftings, where the closed form is unreliable
    agrees: bool


def cell_dims(N, report=None):
    """Dimensions of the stratum of N: total, torus-orbit fiber, quotient.

    The independently forced values are used as the reference: the ambient
    stratum has dimension weight + length - 4, cut by one hyperplane exactly
    when at least two diagonal bases are present, and the fiber is the
    affine dimension of the moment polytope.  The closed-form case expression
    is reported alongside and its length-2 case is flagged, never silently
    dropped, because it disagrees with the orbit-closure dimensions there.
    """
    rep = report if report is not None else is_representable(N)
    if not rep.representable:
        raise NotRepresentableError("dimensions are defined for representable matroids")
    M = rep.max_lifting
    w, length, d = M.weight, M.length, degree(M)
    total = w + length - 4 - (1 if d >= 2 else 0)
    fiber = affine_dim(symplectic_polytope(N))
    quotient = total - fiber
    if length == 2:
        formula = FormulaDims("length_two", 0)
    elif d < 1:
        formula = FormulaDims("degree_zero", (w - 1) + (length - 3))
    else:
        formula = FormulaDims("degree_ge_two", (w - d) + (length + d - 5))
    return CellDims(
        total=total,
        fiber=fiber,
        quotient=quotient,
        formula=formula,
        flagged=length == 2,
        agrees=formula.value == total,
    )


@dataclass(frozen=True)
class SchubertCell:
    pair: tuple
    dim: int
    vanishing: tuple


def sp_schubert(pr, n):
    """Schubert variety data for one admissible pair under the standard order.

    The vanishing set collects the admissible coordinates not dominated by
    the given pair; the dimension drops by one extra when the position sum
    passes the midpoint 2n+1 (the sum never equals it for admissible pairs).
    """
    pr = pair(*pr)
    if not is_admissible_pair(pr, n):
        raise ValueError(f"{pr} is not an admissible pair for n={n}")
    key = pr  # standard order ranks are the positions themselves
    vanishing = tuple(
        q
        for q in admissible_pairs(n)
        if not (q[0] <= key[0] and q[1] <= key[1])
    )
    psum = pr[0] + pr[1]
    dim = psum - 3 if psum < 2 * n + 1 else psum - 4
    return SchubertCell(pr, dim, vanishing)


def fixed_points(n):
    """The isolated torus-fixed points, one per admissible pair."""
    if n < 2:
        raise ValueError("fixed points are listed for n >= 2")
    return list(admissible_pairs(n))


def betti_numbers(n):
    """Ranks of the even homology groups, computed two independent ways.

    Route one counts 2-subsets of the ambient column set by dimension and
    shifts the top half down by one complex degree, the hyperplane-section
    rule.  Route two counts admissible pairs by Schubert dimension.  The two
    must agree, and their common total is the fixed-point count 2n(n-1).
    """
    if n < 2:
        raise ValueError("betti numbers are computed for n >= 2")
    ambient = [0] * (4 * n - 3)
    for i, j in itertools.combinations(range(1, 2 * n + 1), 2):
        ambient[i + j - 3] += 1
    top = 4 * n - 5
    shifted = [
        ambient[k] if 2 * k <= 4 * n - 5 else ambient[k + 1] for k in range(top + 1)
    ]
    counted = [0] * (top + 1)
    for pr in admissible_pairs(n):
        counted[sp_schubert(pr, n).dim] += 1
    if shifted != counted:
        raise AssertionError("the two Betti computations disagree")
    return tuple(shifted)


@dataclass(frozen=True)
class StratumReport:
    matroid: SymplecticMatroid
    representable: bool
    trichotomy: Trichotomy
    max_lifting: object
    degree: int
    weight: int
    length: int
    dims: CellDims
    stabilizer_ambient: StabilizerReport
    stabilizer_symplectic: StabilizerReport
    orbit_representative: tuple
    homology_class: str | None
    multiple_max: bool


@dataclass(frozen=True)
class TInvariantType:
    matroid: SymplecticMatroid
    kind: str  # orbit_closure | closed_point_orbit | whole_space
    homology_class: str
    dim: int


@dataclass(frozen=True)
class Classification:
    n: int
    strata: tuple
    types: tuple | None  # filled for n=2 only


def _antipodal(N):
    b1, b2 = sorted(N.bases)
    return frozenset(star(q, N.n) for q in b1) == frozenset(b2)


def _homology_class_n2(N):
    size = len(N.bases)
    if size == 1:
        return "[*]"
    if size == 2:
        return "2[P1]" if _antipodal(N) else "[P1]"
    if size == 3:
        return "[H]"
    return "[SpG]"


def _types_n2(strata):
    types = []
    for s in strata:
        if len(s.matroid.bases) == 4:
            # the generic stratum contributes two invariant types: the orbit
            # closure of a closed quotient point and the whole space
            types.append(
                TInvariantType(s.matroid, "closed_point_orbit", "2[H]", s.dims.fiber)
            )
            types.append(
                TInvariantType(s.matroid, "whole_space", "[SpG]", s.dims.total)
            )
        else:
            types.append(
                TInvariantType(
                    s.matroid, "orbit_closure", s.homology_class, s.dims.total
                )
            )
    return tuple(types)


@lru_cache(maxsize=None)
def classify(n):
    """One report per representable symplectic matroid, n <= 3.

    For n = 2 the report also lists every torus-invariant subvariety type
    with its homology class label.  Each stratum carries its orbit
    representative, so the class assignment factors through the orbit map.
    """
    if n > 3:
        raise TooLargeError("classification is exhaustive only for n <= 3")
    mats = enumerate_symplectic(n)
    rep_of = {}
    for orbit in orbits(mats, hyperoctahedral_group(n)):
        for member in orbit.members:
            rep_of[member.sorted_bases] = orbit.representative.sorted_bases
    strata = []
    for N in mats:
        rep = is_representable(N)
        if not rep.representable:
            continue
        M = rep.max_lifting
        strata.append(
            StratumReport(
                matroid=N,
                representable=True,
                trichotomy=rep.trichotomy,
                max_lifting=M,
                degree=degree(M),
                weight=M.weight,
                length=M.length,
                dims=cell_dims(N, rep),
                stabilizer_ambient=stabilizer(M, TORUS_AMBIENT),
                stabilizer_symplectic=stabilizer(M, TORUS_SYMPLECTIC),
                orbit_representative=rep_of[N.sorted_bases],
                homology_class=_homology_class_n2(N) if n == 2 else None,
                multiple_max=rep.multiple_max,
            )
        )
    types = _types_n2(strata) if n == 2 else None
    return Classification(n, tuple(strata), types)
