"""Ground-set combinatorics for starred labels.

Labels live at positions 1..2n.  Position q <= n carries the plain label q,
position q > n carries the starred partner of 2n+1-q, and the star involution
swaps the two.  Signed integers (i for plain, -i for starred) are the external
display and JSON form; everything internal works with positions so that matrix
columns and order ranks index directly.
"""

from __future__ import annotations

import itertools
from functools import lru_cache


def star(q, n):
    """Starred partner of position q; an involution of 1..2n."""
    return 2 * n + 1 - q


def to_signed(q, n):
    return q if q <= n else -(2 * n + 1 - q)


def from_signed(s, n):
    if not isinstance(s, int) or s == 0 or abs(s) > n:
        raise ValueError(f"signed label {s!r} out of range for n={n}")
    return s if s > 0 else 2 * n + 1 + s


def label_name(q, n):
    """Human-readable form: plain positions as digits, starred with a star."""
    return str(q) if q <= n else f"{2 * n + 1 - q}*"


def pair(a, b):
    """Canonical (sorted) form of an unordered pair of positions."""
    if a == b:
        raise ValueError("pair entries must differ")
    return (a, b) if a < b else (b, a)


def pair_name(pr, n):
    return "{%s,%s}" % (label_name(pr[0], n), label_name(pr[1], n))


def pair_from_signed(signed_pair, n):
    a, b = signed_pair
    return pair(from_signed(a, n), from_signed(b, n))


def pair_to_signed(pr, n):
    return [to_signed(pr[0], n), to_signed(pr[1], n)]


def is_admissible_set(labels, n):
    """True when no label occurs together with its starred partner."""
    s = set(labels)
    if not all(1 <= q <= 2 * n for q in s):
        raise ValueError("labels must be positions in 1..2n")
    return all(star(q, n) not in s for q in s)


def is_admissible_pair(pr, n):
    i, j = pr
    return 1 <= i < j <= 2 * n and j != star(i, n)


@lru_cache(maxsize=None)
def admissible_pairs(n):
    """All admissible pairs, in lexicographic position order.

    There are 2n(n-1) of them: every 2-subset of positions except the n
    diagonal pairs {q, star(q)}.
    """
    return tuple(
        (i, j)
        for i, j in itertools.combinations(range(1, 2 * n + 1), 2)
        if j != star(i, n)
    )


def diagonal_pairs(n):
    return tuple(pair(i, star(i, n)) for i in range(1, n + 1))


class AdmissibleOrder:
    """A total order on the 2n positions, stored from largest to smallest.

    The top n listed positions form an admissible set and the bottom n are
    their stars in reverse order; both conditions are enforced here.
    """

    __slots__ = ("n", "listing", "_rank")

    def __init__(self, n, listing):
        listing = tuple(listing)
        if sorted(listing) != list(range(1, 2 * n + 1)):
            raise ValueError("listing must arrange the positions 1..2n")
        top = listing[:n]
        if not is_admissible_set(top, n):
            raise ValueError("top half of the listing is not an admissible set")
        if listing[n:] != tuple(star(q, n) for q in reversed(top)):
            raise ValueError("bottom half must be the reversed stars of the top half")
        self.n = n
        self.listing = listing
        ranks = [0] * (2 * n + 1)
        for idx, q in enumerate(listing):
            ranks[q] = 2 * n - 1 - idx
        self._rank = tuple(ranks)

    def rank(self, q):
        """Rank of a position, 0 for the smallest up to 2n-1 for the largest."""
        return self._rank[q]

    def leq(self, a, b):
        return self._rank[a] <= self._rank[b]

    def pair_key(self, pr):
        """Sorted rank pair (smaller rank first); the comparison key for pairs."""
        r1 = self._rank[pr[0]]
        r2 = self._rank[pr[1]]
        return (r1, r2) if r1 < r2 else (r2, r1)

    def __eq__(self, other):
        return (
            isinstance(other, AdmissibleOrder)
            and self.n == other.n
            and self.listing == other.listing
        )

    def __hash__(self):
        return hash((self.n, self.listing))

    def __repr__(self):
        chain = "<".join(label_name(q, self.n) for q in reversed(self.listing))
        return f"AdmissibleOrder({chain})"


@lru_cache(maxsize=None)
def enumerate_admissible_orders(n):
    """All 2^n * n! admissible orders, sorted lexicographically by listing."""
    listings = []
    for perm in itertools.permutations(range(1, n + 1)):
        for flips in itertools.product((False, True), repeat=n):
            top = tuple(star(q, n) if f else q for q, f in zip(perm, flips))
            listings.append(top + tuple(star(q, n) for q in reversed(top)))
    listings.sort()
    return tuple(AdmissibleOrder(n, listing) for listing in listings)


def gale_leq(a, b, order):
    """Componentwise comparison of sorted pairs under an admissible order.

    Ties are allowed in either component, so pairs sharing an endpoint stay
    comparable and each induced order on admissible pairs is a partial order.
    """
    ka = order.pair_key(a)
    kb = order.pair_key(b)
    return ka[0] <= kb[0] and ka[1] <= kb[1]


def is_star_equivariant(images, n):
    """Membership test for the hyperoctahedral group inside all relabelings."""
    return all(
        images[star(q, n) - 1] == star(images[q - 1], n)
        for q in range(1, 2 * n + 1)
    )


class SignedPermutation:
    """Permutation of the positions 1..2n commuting with the star involution."""

    __slots__ = ("n", "images")

    def __init__(self, images):
        images = tuple(images)
        if len(images) % 2:
            raise ValueError("image tuple must have even length")
        n = len(images) // 2
        if sorted(images) != list(range(1, 2 * n + 1)):
            raise ValueError("images must be a bijection of 1..2n")
        if not is_star_equivariant(images, n):
            raise ValueError("permutation does not commute with the star involution")
        self.n = n
        self.images = images

    def __call__(self, q):
        return self.images[q - 1]

    def on_pair(self, pr):
        return pair(self.images[pr[0] - 1], self.images[pr[1] - 1])

    def on_pairs(self, pairs):
        return frozenset(self.on_pair(pr) for pr in pairs)

    def compose(self, other):
        """self after other."""
        return SignedPermutation(tuple(self.images[q - 1] for q in other.images))

    def __eq__(self, other):
        return isinstance(other, SignedPermutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        cyc = ",".join(
            f"{label_name(q, self.n)}->{label_name(self.images[q - 1], self.n)}"
            for q in range(1, self.n + 1)
        )
        return f"SignedPermutation({cyc})"


def apply_signed_perm(tau, pr):
    """Image of a pair under a signed permutation.

    Raw image tuples are accepted and validated; anything that fails the
    star-equivariance test is rejected with ValueError.
    """
    if not isinstance(tau, SignedPermutation):
        tau = SignedPermutation(tau)
    return tau.on_pair(pr)


@lru_cache(maxsize=None)
def hyperoctahedral_group(n):
    """All 2^n * n! signed permutations, sorted by image tuple."""
    elems = []
    for perm in itertools.permutations(range(1, n + 1)):
        for flips in itertools.product((False, True), repeat=n):
            images = [0] * (2 * n)
            for q, (tgt, f) in enumerate(zip(perm, flips), start=1):
                img = star(tgt, n) if f else tgt
                images[q - 1] = img
                images[star(q, n) - 1] = star(img, n)
            elems.append(SignedPermutation(images))
    elems.sort(key=lambda t: t.images)
    return tuple(elems)


@lru_cache(maxsize=None)
def symmetric_group(n):
    """All (2n)! relabelings of 1..2n as raw image tuples (n <= 3)."""
    if n > 3:
        from .errors import TooLargeError

        raise TooLargeError(f"(2n)! relabelings is out of range for n={n}")
    return tuple(itertools.permutations(range(1, 2 * n + 1)))
