"""Rank-2 symmetric and symplectic matroids.

Symmetric matroids are stored as disjoint bags of positions (bases are the
cross-bag pairs, everything outside the bags is a loop).  Symplectic matroids
are nonempty families of admissible pairs passing the unique-maximum test for
every admissible order.  The diagonal-removing projection ties the two worlds
together: its liftings decide representability.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from functools import cached_property, lru_cache
from typing import NamedTuple

from .core import (
    SignedPermutation,
    admissible_pairs,
    diagonal_pairs,
    enumerate_admissible_orders,
    is_admissible_pair,
    pair,
    pair_from_signed,
    pair_name,
    pair_to_signed,
    star,
    to_signed,
)
from .errors import (
    EmptyBasesError,
    EmptyProjectionError,
    InvalidMoveError,
    NoLiftingError,
    NotAMatroidError,
    TooLargeError,
)


class SymmetricMatroid:
    """Rank-2 matroid on the positions 1..2n, presented as disjoint bags.

    Bases are exactly the pairs meeting two distinct bags; positions outside
    every bag are loops.  At least two nonempty, pairwise disjoint bags are
    required, and the family is kept in a canonical sorted form.
    """

    def __init__(self, n, bags):
        norm = tuple(sorted((frozenset(b) for b in bags), key=sorted))
        if len(norm) < 2:
            raise NotAMatroidError("a rank-2 matroid needs at least two bags")
        seen = set()
        for bag in norm:
            if not bag:
                raise NotAMatroidError("bags must be nonempty")
            for q in bag:
                if not 1 <= q <= 2 * n:
                    raise NotAMatroidError(f"position {q} outside 1..{2 * n}")
                if q in seen:
                    raise NotAMatroidError("bags must be pairwise disjoint")
                seen.add(q)
        self.n = n
        self.bags = norm

    @cached_property
    def bases(self):
        out = set()
        for a, b in itertools.combinations(self.bags, 2):
            out.update(pair(i, j) for i in a for j in b)
        return frozenset(out)

    @property
    def loops(self):
        used = set().union(*self.bags)
        return frozenset(q for q in range(1, 2 * self.n + 1) if q not in used)

    @property
    def weight(self):
        return sum(len(b) for b in self.bags)

    @property
    def length(self):
        return len(self.bags)

    def bag_shape(self):
        """Hashable canonical form, usable as a dictionary key."""
        return tuple(tuple(sorted(b)) for b in self.bags)

    def signed_bags(self):
        return [[to_signed(q, self.n) for q in sorted(bag)] for bag in self.bags]

    def __eq__(self, other):
        return (
            isinstance(other, SymmetricMatroid)
            and self.n == other.n
            and self.bags == other.bags
        )

    def __hash__(self):
        return hash((self.n, self.bags))

    def __repr__(self):
        bags = " ".join(
            "{" + ",".join(map(str, sorted(b))) + "}" for b in self.bags
        )
        return f"SymmetricMatroid(n={self.n}, bags={bags})"


def bases_of(M):
    """The cross-bag pairs of a symmetric matroid."""
    return M.bases


def _normalize_bases(bases, n):
    fam = set()
    for b in bases:
        i, j = tuple(b)
        if not (1 <= i <= 2 * n and 1 <= j <= 2 * n):
            raise ValueError(f"pair {b!r} outside 1..{2 * n}")
        fam.add(pair(i, j))
    return fam


def from_bases(bases, n):
    """Reconstruct the unique bag family whose cross pairs are exactly `bases`.

    Positions missing from every base become loops.  Two positions of the
    support share a bag exactly when their pair is absent; this relation must
    be transitive and every cross-bag pair must be present, otherwise
    NotAMatroidError is raised.  An empty family raises EmptyBasesError.
    """
    fam = _normalize_bases(bases, n)
    if not fam:
        raise EmptyBasesError("no bases given")
    support = sorted({q for b in fam for q in b})
    parent = {q: q for q in support}

    def find(q):
        while parent[q] != q:
            parent[q] = parent[parent[q]]
            q = parent[q]
        return q

    for i, j in itertools.combinations(support, 2):
        if (i, j) not in fam:
            parent[find(i)] = find(j)
    for i, j in fam:
        if find(i) == find(j):
            raise NotAMatroidError(
                f"base {pair_name((i, j), n)} joins positions forced into one bag"
            )
    classes = {}
    for q in support:
        classes.setdefault(find(q), []).append(q)
    return SymmetricMatroid(n, classes.values())


def degree(M):
    """Number of plain labels i whose diagonal pair {i, i*} is a base."""
    return sum(1 for i in range(1, M.n + 1) if pair(i, star(i, M.n)) in M.bases)


def erase_label(M, q):
    """Move position q to the loops, erasing every base through it."""
    target = next((b for b in M.bags if q in b), None)
    if target is None:
        raise InvalidMoveError(f"position {q} is not in any bag")
    rest = [b for b in M.bags if b != target]
    shrunk = target - {q}
    if shrunk:
        rest.append(shrunk)
    if len(rest) < 2:
        raise InvalidMoveError("erasing would leave fewer than two bags")
    return SymmetricMatroid(M.n, rest)


def merge_bags(M, a, b):
    """Replace two bags by their union; needs a third bag to stay a matroid."""
    a, b = frozenset(a), frozenset(b)
    if a == b or a not in M.bags or b not in M.bags:
        raise InvalidMoveError("merge needs two distinct bags of the matroid")
    if M.length < 3:
        raise InvalidMoveError("merging two of only two bags would leave one")
    rest = [x for x in M.bags if x != a and x != b]
    return SymmetricMatroid(M.n, rest + [a | b])


def split_bag(M, bag, q):
    """Split a bag of size at least two at one of its positions."""
    bag = frozenset(bag)
    if bag not in M.bags:
        raise InvalidMoveError("no such bag")
    if len(bag) < 2:
        raise InvalidMoveError("cannot split a singleton bag")
    if q not in bag:
        raise InvalidMoveError(f"position {q} is not in the given bag")
    rest = [x for x in M.bags if x != bag]
    return SymmetricMatroid(M.n, rest + [bag - {q}, frozenset([q])])


class SymplecticMatroid:
    """Nonempty family of admissible pairs with a unique maximal member under
    the pair order induced by every admissible order."""

    def __init__(self, n, bases, check=True):
        fam = frozenset(pair(*sorted(b)) for b in bases)
        if not fam:
            raise EmptyBasesError("no bases given")
        for pr in fam:
            if not is_admissible_pair(pr, n):
                raise NotAMatroidError(f"{pair_name(pr, n)} is not an admissible pair")
        if check and not is_symplectic_matroid(fam, n):
            raise NotAMatroidError("family fails the unique-maximum test")
        self.n = n
        self.bases = fam

    @classmethod
    def from_signed(cls, n, signed_pairs, check=True):
        return cls(n, (pair_from_signed(sp, n) for sp in signed_pairs), check=check)

    @cached_property
    def sorted_bases(self):
        return tuple(sorted(self.bases))

    def signed_bases(self):
        return [pair_to_signed(pr, self.n) for pr in self.sorted_bases]

    def __eq__(self, other):
        return (
            isinstance(other, SymplecticMatroid)
            and self.n == other.n
            and self.bases == other.bases
        )

    def __hash__(self):
        return hash((self.n, self.bases))

    def __repr__(self):
        names = " ".join(pair_name(pr, self.n) for pr in self.sorted_bases)
        return f"SymplecticMatroid(n={self.n}, bases={names})"


@lru_cache(maxsize=None)
def _pair_keys_per_order(n):
    pairs = admissible_pairs(n)
    return tuple(
        {pr: order.pair_key(pr) for pr in pairs}
        for order in enumerate_admissible_orders(n)
    )


def is_symplectic_matroid(bases, n):
    """Unique-maximum test against all 2^n * n! admissible orders.

    A family has a unique maximal element for a given order exactly when the
    pair whose sorted rank key is (max of the small ranks, max of the large
    ranks) belongs to the family: such a pair dominates everything, and any
    unique maximal element must have that key.
    """
    fam = sorted({pair(*sorted(b)) for b in bases})
    if not fam:
        return False
    if any(not is_admissible_pair(pr, n) for pr in fam):
        return False
    for keys in _pair_keys_per_order(n):
        ks = [keys[pr] for pr in fam]
        top = (max(k[0] for k in ks), max(k[1] for k in ks))
        if top not in set(ks):
            return False
    return True


@lru_cache(maxsize=None)
def _enumerate_symplectic(n):
    pairs = admissible_pairs(n)
    found = []
    for mask in range(1, 1 << len(pairs)):
        fam = frozenset(pr for k, pr in enumerate(pairs) if mask >> k & 1)
        if is_symplectic_matroid(fam, n):
            found.append(SymplecticMatroid(n, fam, check=False))
    found.sort(key=lambda m: m.sorted_bases)
    return tuple(found)


def enumerate_symplectic(n):
    """All symplectic matroids for small n, sorted by basis family.

    The search space is every nonempty subset of the admissible pairs, so
    only n <= 3 is allowed.
    """
    if n >= 4:
        raise TooLargeError(
            f"exhaustive search over 2^{len(admissible_pairs(n))} families for n={n}"
        )
    return list(_enumerate_symplectic(n))


def _set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for k in range(len(part)):
            yield part[:k] + [part[k] + [first]] + part[k + 1:]
        yield part + [[first]]


@lru_cache(maxsize=None)
def _enumerate_symmetric(n):
    ground = range(1, 2 * n + 1)
    out = []
    for size in range(2, 2 * n + 1):
        for support in itertools.combinations(ground, size):
            for blocks in _set_partitions(list(support)):
                if len(blocks) >= 2:
                    out.append(SymmetricMatroid(n, blocks))
    out.sort(key=SymmetricMatroid.bag_shape)
    return tuple(out)


def enumerate_symmetric(n):
    """Every symmetric matroid on 1..2n: all supports, all bag splittings."""
    return list(_enumerate_symmetric(n))


class Orbit(NamedTuple):
    representative: object
    members: tuple


def _matroid_key(m):
    if isinstance(m, SymplecticMatroid):
        return m.sorted_bases
    return m.bag_shape()


def _act(images, m):
    if isinstance(m, SymplecticMatroid):
        moved = [pair(images[i - 1], images[j - 1]) for i, j in m.bases]
        return SymplecticMatroid(m.n, moved, check=False)
    return SymmetricMatroid(
        m.n, [frozenset(images[q - 1] for q in bag) for bag in m.bags]
    )


def orbits(matroids, group):
    """Orbit partition of a collection closed under the given group action.

    Group elements may be SignedPermutation objects or raw image tuples.
    Each orbit carries its lexicographically smallest member as the
    canonical representative, and orbits are sorted by representative.
    """
    pool = {}
    for m in matroids:
        pool[_matroid_key(m)] = m
    moves = [
        g.images if isinstance(g, SignedPermutation) else tuple(g) for g in group
    ]
    out = []
    seen = set()
    for key in sorted(pool):
        if key in seen:
            continue
        orbit_keys = set()
        for images in moves:
            try:
                img = _act(images, pool[key])
            except (NotAMatroidError, EmptyBasesError) as exc:
                raise ValueError("collection is not closed under the action") from exc
            ik = _matroid_key(img)
            if ik not in pool:
                raise ValueError("collection is not closed under the action")
            orbit_keys.add(ik)
        members = tuple(pool[k] for k in sorted(orbit_keys))
        out.append(Orbit(members[0], members))
        seen.update(orbit_keys)
    return out


@dataclass(frozen=True)
class PartitionType:
    """Multiset of bag sizes, stored weakly decreasing; at least two parts."""

    parts: tuple

    def __post_init__(self):
        parts = tuple(sorted((int(k) for k in self.parts), reverse=True))
        if len(parts) < 2:
            raise ValueError("a partition type needs at least two parts")
        if parts[-1] < 1:
            raise ValueError("parts must be positive")
        object.__setattr__(self, "parts", parts)

    @property
    def weight(self):
        return sum(self.parts)

    @property
    def length(self):
        return len(self.parts)


def partition_type(M):
    """Relabeling class of a symmetric matroid: its multiset of bag sizes."""
    return PartitionType(tuple(len(b) for b in M.bags))


def canonical_matroid(ptype, n):
    """Standard representative: consecutive blocks starting at 1, loops at the tail."""
    if ptype.weight > 2 * n:
        raise ValueError("partition weight exceeds the ground set size")
    if ptype.parts[0] >= 2 * n:
        raise ValueError("every part must be smaller than the ground set size")
    bags = []
    start = 1
    for k in ptype.parts:
        bags.append(frozenset(range(start, start + k)))
        start += k
    return SymmetricMatroid(n, bags)


def symplectic_projection(M):
    """Basis family of M with every diagonal pair removed.

    Raises EmptyProjectionError when nothing is left, which happens exactly
    when the single base of M is one diagonal pair.
    """
    diag = set(diagonal_pairs(M.n))
    admissible = frozenset(M.bases - diag)
    if not admissible:
        raise EmptyProjectionError("only diagonal bases present")
    return admissible


class Lifting(NamedTuple):
    matroid: SymmetricMatroid
    degree: int


def liftings(N):
    """All symmetric matroids projecting onto N, sorted by degree descending.

    Any lifting's basis family must be the bases of N plus some subset of the
    n diagonal pairs, so testing every subset is a complete search.
    """
    n = N.n
    found = []
    for r in range(n + 1):
        for extra in itertools.combinations(diagonal_pairs(n), r):
            try:
                M = from_bases(N.bases | set(extra), n)
            except NotAMatroidError:
                continue
            found.append(Lifting(M, r))
    if not found:
        raise NoLiftingError(f"no symmetric matroid projects onto {N!r}")
    found.sort(key=lambda lf: (-lf.degree, lf.matroid.bag_shape()))
    return found


class Trichotomy(Enum):
    ONLY_DEG0 = "only_deg0"
    ONLY_DEG_GE2 = "only_deg_ge2"
    BOTH = "both"


@dataclass(frozen=True)
class RepresentabilityReport:
    matroid: SymplecticMatroid
    representable: bool
    trichotomy: Trichotomy | None
    witness_lifting: SymmetricMatroid | None
    max_lifting: SymmetricMatroid | None
    normal_liftings: tuple
    liftings: tuple
    multiple_max: bool


def is_representable(N):
    """Representability via liftings: some lifting of degree 0 or >= 2.

    witness_lifting prefers the degree-0 lifting when it exists (its
    diagonal coordinates all vanish, so no balancing is needed); max_lifting
    is the highest-degree lifting away from degree 1, the one whose closure
    carries the whole stratum.  multiple_max flags a tie at the top degree.
    """
    try:
        lifts = tuple(liftings(N))
    except NoLiftingError:
        return RepresentabilityReport(N, False, None, None, None, (), (), False)
    deg0 = next((lf.matroid for lf in lifts if lf.degree == 0), None)
    high = [lf for lf in lifts if lf.degree >= 2]
    if deg0 is None and not high:
        return RepresentabilityReport(N, False, None, None, None, (), lifts, False)
    if high:
        top_degree = high[0].degree
        top = [lf.matroid for lf in high if lf.degree == top_degree]
        best = top[0]
        multiple = len(top) > 1
    else:
        best = deg0
        multiple = False
    if deg0 is not None and high:
        tri, normal = Trichotomy.BOTH, (deg0, best)
    elif deg0 is not None:
        tri, normal = Trichotomy.ONLY_DEG0, (deg0,)
    else:
        tri, normal = Trichotomy.ONLY_DEG_GE2, (best,)
    return RepresentabilityReport(
        N,
        True,
        tri,
        deg0 if deg0 is not None else best,
        best,
        normal,
        lifts,
        multiple,
    )


def degree_one_projections(n):
    """Survey data: projections of degree-1 matroids, split by whether they
    pass the unique-maximum test.  Whether the second list can ever be
    nonempty is an open corner of the theory; this reports the small cases.
    """
    passing, failing = set(), set()
    for M in enumerate_symmetric(n):
        if degree(M) != 1:
            continue
        try:
            pr = symplectic_projection(M)
        except EmptyProjectionError:
            continue
        bucket = passing if is_symplectic_matroid(pr, n) else failing
        bucket.add(tuple(sorted(pr)))
    return sorted(passing), sorted(failing)
