"""Moment-polytope combinatorics over the integers.

Polytopes are stored as generating point sets, never as half-space systems;
hull queries reduce to exact rational feasibility problems on a handful of
points, so there is no floating point anywhere in this module.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import affine_rank, in_convex_hull


@dataclass(frozen=True)
class LatticePolytope:
    dim_ambient: int
    points: frozenset

    def __post_init__(self):
        pts = frozenset(tuple(int(x) for x in p) for p in self.points)
        if any(len(p) != self.dim_ambient for p in pts):
            raise ValueError("every point must match the ambient dimension")
        object.__setattr__(self, "points", pts)

    def sorted_points(self):
        return sorted(self.points)


def symmetric_polytope(M):
    """Exponent points e_i + e_j in Z^2n, one for each base of M."""
    d = 2 * M.n
    pts = set()
    for i, j in M.bases:
        v = [0] * d
        v[i - 1] = 1
        v[j - 1] = 1
        pts.add(tuple(v))
    return LatticePolytope(d, frozenset(pts))


def _folded_coordinate(q, n):
    # plain labels keep their axis with sign +1, starred labels flip sign
    return (q - 1, 1) if q <= n else (2 * n - q, -1)


def symplectic_polytope(N):
    """Signed exponent points in Z^n, one for each admissible base of N."""
    n = N.n
    pts = set()
    for i, j in N.bases:
        v = [0] * n
        c, s = _folded_coordinate(i, n)
        v[c] += s
        c, s = _folded_coordinate(j, n)
        v[c] += s
        pts.add(tuple(v))
    return LatticePolytope(n, frozenset(pts))


def project_pi(P):
    """Fold Z^2n onto Z^n: axis q maps to axis q with sign +1 for q <= n and
    onto axis 2n+1-q with sign -1 otherwise, so each diagonal direction
    e_q + e_(2n+1-q) is killed."""
    if P.dim_ambient % 2:
        raise ValueError("ambient dimension must be even")
    n = P.dim_ambient // 2
    images = set()
    for p in P.points:
        v = [0] * n
        for q in range(1, 2 * n + 1):
            c, s = _folded_coordinate(q, n)
            v[c] += s * p[q - 1]
        images.add(tuple(v))
    return LatticePolytope(n, frozenset(images))


def affine_dim(P):
    """Dimension of the affine span of the generating points."""
    if not P.points:
        raise ValueError("need at least one generating point")
    return affine_rank(P.sorted_points())


def point_in_hull(P, point):
    point = tuple(point)
    if len(point) != P.dim_ambient:
        raise ValueError("point does not match the ambient dimension")
    return in_convex_hull(point, P.sorted_points())


def hull_equal(P, Q):
    """Exact equality of convex hulls via mutual membership of generators."""
    if P.dim_ambient != Q.dim_ambient:
        raise ValueError("polytopes live in different ambient dimensions")
    return all(point_in_hull(Q, p) for p in P.sorted_points()) and all(
        point_in_hull(P, q) for q in Q.sorted_points()
    )
