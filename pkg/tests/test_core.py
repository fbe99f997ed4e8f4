import itertools

import pytest

from sympmat.core import (
    AdmissibleOrder,
    SignedPermutation,
    admissible_pairs,
    apply_signed_perm,
    enumerate_admissible_orders,
    from_signed,
    gale_leq,
    hyperoctahedral_group,
    is_admissible_pair,
    is_admissible_set,
    is_star_equivariant,
    pair,
    pair_from_signed,
    pair_to_signed,
    star,
    symmetric_group,
    to_signed,
)


def sp(n, *signed):
    return pair_from_signed(signed, n)


def test_star_is_an_involution():
    for n in range(1, 6):
        for q in range(1, 2 * n + 1):
            assert 1 <= star(q, n) <= 2 * n
            assert star(star(q, n), n) == q
            assert star(q, n) != q


def test_signed_round_trip():
    for n in range(1, 6):
        for q in range(1, 2 * n + 1):
            assert from_signed(to_signed(q, n), n) == q
    # the position of a starred label i* is 2n-i+1
    assert from_signed(-1, 2) == 4
    assert from_signed(-2, 2) == 3
    with pytest.raises(ValueError):
        from_signed(0, 2)
    with pytest.raises(ValueError):
        from_signed(5, 2)


def test_is_admissible_set_examples():
    assert is_admissible_set({1, 2}, 2)
    assert not is_admissible_set({1, 4}, 2)  # {1, 1*}
    assert is_admissible_set({from_signed(1, 3), from_signed(2, 3), from_signed(-3, 3)}, 3)


def test_admissible_pair_counts():
    for n in range(1, 6):
        pairs = admissible_pairs(n)
        assert len(pairs) == 2 * n * (n - 1)
        assert all(is_admissible_pair(p, n) for p in pairs)
        for i in range(1, n + 1):
            assert not is_admissible_pair(pair(i, star(i, n)), n)


def test_admissible_order_count():
    import math

    for n in range(1, 6):
        orders = enumerate_admissible_orders(n)
        assert len(orders) == 2**n * math.factorial(n)
        assert len(set(o.listing for o in orders)) == len(orders)


def test_n1_orders_are_forced():
    orders = enumerate_admissible_orders(1)
    assert {o.listing for o in orders} == {(1, 2), (2, 1)}


def test_n2_orders_match_the_known_eight():
    # the four base orders and their four opposites, as largest-first listings
    base = {(4, 3, 2, 1), (4, 2, 3, 1), (3, 4, 1, 2), (3, 1, 4, 2)}
    opposite = {tuple(reversed(t)) for t in base}
    assert {o.listing for o in enumerate_admissible_orders(2)} == base | opposite


def test_orders_closed_under_reversal_in_half_pairs():
    for n in range(1, 5):
        listings = {o.listing for o in enumerate_admissible_orders(n)}
        for t in listings:
            assert tuple(reversed(t)) in listings
        assert all(tuple(reversed(t)) != t for t in listings)


def test_admissible_order_validation():
    with pytest.raises(ValueError):
        AdmissibleOrder(2, (4, 1, 2, 3))  # top half {1*, 1} not admissible
    with pytest.raises(ValueError):
        AdmissibleOrder(2, (4, 3, 1, 2))  # bottom half not the reversed stars
    with pytest.raises(ValueError):
        AdmissibleOrder(2, (1, 2, 3))


def order_by_chain(n, *signed_ascending):
    listing = tuple(from_signed(s, n) for s in reversed(signed_ascending))
    return AdmissibleOrder(n, listing)


def test_gale_chain_standard_order():
    # under 1 < 2 < 2* < 1* the pairs line up as 12 < 12* < 21* < 2*1*
    order = order_by_chain(2, 1, 2, -2, -1)
    chain = [sp(2, 1, 2), sp(2, 1, -2), sp(2, 2, -1), sp(2, -2, -1)]
    for a, b in zip(chain, chain[1:]):
        assert gale_leq(a, b, order)
        assert not gale_leq(b, a, order)


def test_gale_chain_twisted_order():
    # under 2 < 1* < 1 < 2* the chain is 21* < 21 < 1*2* < 12*
    order = order_by_chain(2, 2, -1, 1, -2)
    chain = [sp(2, 2, -1), sp(2, 2, 1), sp(2, -1, -2), sp(2, 1, -2)]
    for a, b in zip(chain, chain[1:]):
        assert gale_leq(a, b, order)
        assert not gale_leq(b, a, order)
    # the unique maximum of all admissible pairs under this order is {1, 2*}
    top = sp(2, 1, -2)
    assert all(gale_leq(p, top, order) for p in admissible_pairs(2))


def test_gale_reflexive():
    order = enumerate_admissible_orders(2)[0]
    for p in admissible_pairs(2):
        assert gale_leq(p, p, order)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_gale_is_a_partial_order(n):
    pairs = admissible_pairs(n)
    for order in enumerate_admissible_orders(n):
        for a in pairs:
            assert gale_leq(a, a, order)
        for a, b in itertools.permutations(pairs, 2):
            if gale_leq(a, b, order) and gale_leq(b, a, order):
                assert a == b
        for a, b, c in itertools.product(pairs, repeat=3):
            if gale_leq(a, b, order) and gale_leq(b, c, order):
                assert gale_leq(a, c, order)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_star_equivariance_accepts_exactly_the_hyperoctahedral_count(n):
    import math

    size = 2**n * math.factorial(n)
    accepted = sum(
        1
        for images in itertools.permutations(range(1, 2 * n + 1))
        if is_star_equivariant(images, n)
    )
    assert accepted == size
    assert len(hyperoctahedral_group(n)) == size


def test_signed_permutation_rejects_non_equivariant():
    with pytest.raises(ValueError):
        SignedPermutation((2, 1, 3, 4))  # plain transposition, breaks the pairing
    with pytest.raises(ValueError):
        apply_signed_perm((2, 1, 3, 4), (1, 2))


def test_apply_signed_perm_examples():
    n = 2
    identity = SignedPermutation((1, 2, 3, 4))
    assert apply_signed_perm(identity, sp(n, 1, -2)) == sp(n, 1, -2)
    swap = SignedPermutation((2, 1, 4, 3))  # 1 <-> 2 forces 1* <-> 2*
    assert apply_signed_perm(swap, sp(n, 1, -2)) == sp(n, 2, -1)
    flip = SignedPermutation((4, 2, 3, 1))  # 1 <-> 1*
    assert apply_signed_perm(flip, sp(n, 1, 2)) == sp(n, -1, 2)


@pytest.mark.parametrize("n", [2, 3])
def test_group_elements_permute_the_admissible_pairs(n):
    pairs = set(admissible_pairs(n))
    for tau in hyperoctahedral_group(n):
        image = {tau.on_pair(p) for p in pairs}
        assert image == pairs


def test_group_is_closed_under_composition():
    group = set(hyperoctahedral_group(2))
    for a in group:
        for b in group:
            assert a.compose(b) in group


def test_symmetric_group_sizes():
    assert len(symmetric_group(2)) == 24
    assert len(symmetric_group(3)) == 720


def test_pair_signed_round_trip():
    for n in (2, 3):
        for p in admissible_pairs(n):
            assert pair_from_signed(tuple(pair_to_signed(p, n)), n) == p
