import itertools

import pytest

from sympmat.core import pair_from_signed
from sympmat.errors import EmptyProjectionError
from sympmat.linalg import in_convex_hull, rational_rank
from sympmat.matroid import (
    SymmetricMatroid,
    SymplecticMatroid,
    degree,
    enumerate_symmetric,
    enumerate_symplectic,
    symplectic_projection,
)
from sympmat.polytope import (
    LatticePolytope,
    affine_dim,
    hull_equal,
    point_in_hull,
    project_pi,
    symmetric_polytope,
    symplectic_polytope,
)


def sympl(n, *signed_pairs):
    return SymplecticMatroid(n, [pair_from_signed(p, n) for p in signed_pairs])


FULL_N2 = ((1, 2), (1, -2), (-1, 2), (-1, -2))


# -- exact linear algebra ----------------------------------------------------


def test_rational_rank_basics():
    assert rational_rank([]) == 0
    assert rational_rank([[0, 0]]) == 0
    assert rational_rank([[1, 2], [2, 4]]) == 1
    assert rational_rank([[1, 0], [0, 1], [1, 1]]) == 2


def test_convex_hull_membership_known_cases():
    square = [(1, 1), (1, -1), (-1, 1), (-1, -1)]
    assert in_convex_hull((0, 0), square)
    assert in_convex_hull((1, 0), square)
    assert in_convex_hull((1, 1), square)
    assert not in_convex_hull((2, 0), square)
    assert not in_convex_hull((1, 2), square)
    triangle = [(0, 0), (3, 0), (0, 3)]
    assert in_convex_hull((1, 1), triangle)
    assert not in_convex_hull((2, 2), triangle)
    segment = [(0, 0, 0), (2, 2, 2)]
    assert in_convex_hull((1, 1, 1), segment)
    assert not in_convex_hull((1, 1, 0), segment)


# -- polytopes of matroids ---------------------------------------------------


def test_symmetric_polytope_examples():
    uniform = SymmetricMatroid(2, [{1}, {2}, {3}, {4}])
    P = symmetric_polytope(uniform)
    assert len(P.points) == 6
    assert affine_dim(P) == 3  # the full polytope has maximal dimension 2n-1

    single = SymmetricMatroid(2, [{1}, {2}])
    Q = symmetric_polytope(single)
    assert Q.points == frozenset({(1, 1, 0, 0)})
    assert affine_dim(Q) == 0


def test_symplectic_polytope_examples():
    full = sympl(2, *FULL_N2)
    P = symplectic_polytope(full)
    assert P.points == frozenset({(1, 1), (1, -1), (-1, 1), (-1, -1)})
    assert affine_dim(P) == 2  # maximal dimension n

    single = sympl(2, (1, 2))
    assert symplectic_polytope(single).points == frozenset({(1, 1)})


def test_project_pi_examples():
    P = LatticePolytope(4, {(1, 1, 0, 0), (1, 0, 0, 1), (0, 0, 1, 1)})
    img = project_pi(P)
    # e1+e2 -> (1,1); e1+e(1*) -> 0; e(2*)+e(1*) -> (-1,-1)
    assert img.points == frozenset({(1, 1), (0, 0), (-1, -1)})
    with pytest.raises(ValueError):
        project_pi(LatticePolytope(3, {(1, 0, 0)}))


def test_affine_dim_examples():
    square = LatticePolytope(2, {(1, 1), (1, -1), (-1, 1), (-1, -1)})
    assert affine_dim(square) == 2
    assert affine_dim(LatticePolytope(2, {(5, 7)})) == 0


def test_hull_equal_examples():
    four_singletons = SymmetricMatroid(2, [{1}, {2}, {3}, {4}])
    P = project_pi(symmetric_polytope(four_singletons))
    Q = symplectic_polytope(sympl(2, *FULL_N2))
    assert (0, 0) in P.points  # both diagonal exponent points fold to zero
    assert hull_equal(P, Q)
    assert hull_equal(Q, Q)
    edge = LatticePolytope(2, {(1, 1), (1, -1)})
    assert not hull_equal(Q, edge)
    with pytest.raises(ValueError):
        hull_equal(Q, LatticePolytope(3, {(0, 0, 0)}))


@pytest.mark.parametrize("n", [2, 3])
def test_projection_commutes_at_the_hull_level(n):
    # for every symmetric matroid away from degree one, folding its polytope
    # gives the hull of its projection's polytope
    for M in enumerate_symmetric(n):
        if degree(M) == 1:
            continue
        try:
            proj = symplectic_projection(M)
        except EmptyProjectionError:
            continue
        N = SymplecticMatroid(n, proj, check=False)
        assert hull_equal(project_pi(symmetric_polytope(M)), symplectic_polytope(N))


@pytest.mark.parametrize("n", [2, 3])
def test_bases_recoverable_as_integral_points(n):
    # the 0/1 vectors with two ones lying in the hull are exactly the bases
    for M in enumerate_symmetric(n):
        P = symmetric_polytope(M)
        pts = P.sorted_points()
        inside = set()
        for i, j in itertools.combinations(range(1, 2 * n + 1), 2):
            v = [0] * (2 * n)
            v[i - 1] = 1
            v[j - 1] = 1
            if point_in_hull(P, tuple(v)):
                inside.add((i, j))
        assert inside == M.bases


@pytest.mark.parametrize("n", [2, 3])
def test_symplectic_polytope_dimension_bound(n):
    full_bases = None
    for N in enumerate_symplectic(n):
        d = affine_dim(symplectic_polytope(N))
        assert d <= n
        if len(N.bases) == 2 * n * (n - 1):
            full_bases = d
    assert full_bases == n


@pytest.mark.parametrize("n", [2, 3])
def test_bases_recoverable_from_symplectic_points(n):
    # every generating point has exactly two nonzero signed coordinates,
    # which name the admissible pair it came from
    for N in enumerate_symplectic(n):
        recovered = set()
        for p in symplectic_polytope(N).points:
            support = [(k, v) for k, v in enumerate(p) if v]
            assert len(support) == 2
            labels = []
            for k, v in support:
                assert v in (1, -1)
                labels.append(k + 1 if v == 1 else 2 * n - k)
            recovered.add(tuple(sorted(labels)))
        assert recovered == N.bases


def test_polytope_validation():
    with pytest.raises(ValueError):
        LatticePolytope(2, {(1, 2, 3)})
    with pytest.raises(ValueError):
        point_in_hull(LatticePolytope(2, {(0, 0)}), (1, 2, 3))
