import itertools

import pytest
from hypothesis import given, settings, strategies as st

from wpposet import ResourceCapError
from wpposet import trees as tr

B, R = tr.BLUE, tr.RED


@st.composite
def bicolored(draw, max_n=5):
    n = draw(st.integers(2, max_n))
    return draw(st.sampled_from(tr.enumerate_bicolored(n)))


def test_enumeration_counts_frozen():
    # |BT_n| = n! * Catalan(n-1) * 2^(n-1)
    assert len(tr.enumerate_bicolored(2)) == 4
    assert len(tr.enumerate_bicolored(3)) == 48
    assert len(tr.enumerate_bicolored(4)) == 960
    assert len(tr.enumerate_normalized(3)) == 12


def test_family_totals_are_tree_counts():
    for n in range(1, 6):
        for fam in ("comb", "lyndon", "liu"):
            assert len(tr.enumerate_family(fam, n)) == n ** (n - 1)


def test_family_per_i_frozen():
    per_i = [len(tr.enumerate_family("comb", 4, i)) for i in range(4)]
    assert per_i == [6, 26, 26, 6]
    assert [len(tr.enumerate_family("lyndon", 4, i)) for i in range(4)] == per_i
    assert [len(tr.enumerate_family("liu", 4, i)) for i in range(4)] == per_i


def test_family_direct_matches_filter():
    for n in range(1, 5):
        for fam in ("comb", "lyndon", "liu"):
            direct = set(tr.enumerate_family(fam, n, method="direct"))
            filtered = set(tr.enumerate_family(fam, n, method="filter"))
            assert direct == filtered


@given(bicolored())
def test_per_i_palindromic_families(t):
    # recoloring every node flips i to (n-1)-i; family sizes must match
    n = len(tr.leaves(t))
    i = tr.red_count(t)
    for fam in ("comb", "lyndon", "liu"):
        assert len(tr.enumerate_family(fam, n, i)) == \
            len(tr.enumerate_family(fam, n, n - 1 - i))


@given(bicolored())
def test_normalize_idempotent(t):
    sign, canon = tr.normalize(t)
    assert sign in (1, -1)
    assert tr.is_normalized(canon)
    assert tr.normalize(canon) == (1, canon)
    assert sorted(tr.leaves(canon)) == sorted(tr.leaves(t))
    assert tr.red_count(canon) == tr.red_count(t)


@given(bicolored())
def test_child_swap_changes_sign(t):
    if tr.is_leaf(t):
        return
    col, l, r = t
    swapped = (col, r, l)
    s1, c1 = tr.normalize(t)
    s2, c2 = tr.normalize(swapped)
    assert c1 == c2
    expected = (-1) ** (tr.internal_count(l) * tr.internal_count(r))
    assert s2 == s1 * expected


def test_tree_sign_examples():
    assert tr.tree_sign((B, 1, 2)) == 1
    assert tr.tree_sign((B, (B, 1, 2), 3)) == 1
    assert tr.tree_sign((B, 1, (B, 2, 3))) == -1


def test_weight_and_inversions():
    # weight counts internal nodes hanging to the right
    assert tr.tree_weight((B, (B, 1, 2), 3)) == 0
    assert tr.tree_weight((B, 1, (B, 2, 3))) == 1
    # a red node on the right path below a blue node is an inversion
    assert tr.tree_inversions((B, 1, (R, 2, 3))) == 1
    assert tr.tree_inversions((R, 1, (B, 2, 3))) == 0


def test_comb_classification():
    assert tr.is_comb((B, (R, 1, 2), 3))
    assert not tr.is_comb((B, 1, (B, 2, 3)))   # blue over blue right child
    assert tr.is_comb((R, 1, (B, 2, 3)))       # red over blue right child


def test_lyndon_n3_members():
    fam = set(tr.enumerate_family("lyndon", 3, 1))
    assert (B, (R, 1, 2), 3) in fam
    assert (R, (B, 1, 2), 3) not in fam


def test_liu_not_normalized():
    # Liu-Lyndon trees need not have minimal leftmost leaves
    fam = tr.enumerate_family("liu", 3)
    assert any(not tr.is_normalized(t) for t in fam)


def test_rooted_tree_counts():
    for n in range(1, 6):
        assert len(tr.enumerate_rooted_trees(range(1, n + 1))) == n ** (n - 1)


def test_descent_polynomial_frozen():
    assert tr.descent_polynomial(3) == [2, 5, 2]
    assert tr.descent_polynomial(4) == [6, 26, 26, 6]


def test_drake_product_matches_enumeration():
    for n in range(1, 7):
        assert tr.drake_product(n) == tr.descent_polynomial(n) \
            if n <= 6 else True


def test_forest_count_frozen():
    assert tr.forest_count(5, 1) == 625
    assert tr.forest_count(4, 2) == 48
    assert tr.forest_count(4, 4) == 1


def test_psi_roundtrip_small():
    for n in range(1, 6):
        for T in tr.enumerate_rooted_trees(range(1, n + 1)):
            t = tr.psi(T)
            assert tr.red_count(t) == T.descent_count()
            assert tr.psi_inverse(t) == T


def test_psi_image_is_liu():
    for n in range(1, 6):
        image = {tr.psi(T) for T in tr.enumerate_rooted_trees(range(1, n + 1))}
        assert image == set(tr.enumerate_liu(range(1, n + 1)))


def test_liu_order_reflexive_and_acyclic():
    trees5 = tr.enumerate_rooted_trees(range(1, 4), 1)
    assert len(trees5) == 5
    for T in trees5:
        assert tr.liu_leq(T, T)
    ordered = tr.liu_linear_extension(trees5)
    pos = {T: k for k, T in enumerate(ordered)}
    for T1 in trees5:
        for T2 in trees5:
            if tr.liu_leq(T1, T2):
                assert pos[T1] <= pos[T2]


def test_linear_extensions_and_tau():
    t = (B, (B, 1, 2), (B, 3, 4))
    exts = tr.linear_extensions(t)
    # two incomparable internal nodes under the root: 2 extensions
    assert len(exts) == 2
    tau = tr.valency_decreasing_tau(t)
    assert tau in exts


@given(bicolored(max_n=4))
def test_identity_extension_is_linear(t):
    if tr.is_leaf(t):
        return
    assert tr.identity_extension(t) in tr.linear_extensions(t)


def test_leaf_perm_sign():
    assert tr.leaf_perm_sign((B, 1, 2)) == 1
    assert tr.leaf_perm_sign((B, 2, 1)) == -1
    assert tr.leaf_perm_sign((B, (B, 1, 3), 2)) == -1


def test_tree_json_roundtrip():
    t = (R, (B, 1, 3), 2)
    assert tr.tree_from_json(tr.tree_to_json(t)) == t
    assert tr.tree_to_bracket(t) == "<[1,3],2>"


def test_enumeration_cap():
    with pytest.raises(ResourceCapError):
        tr.enumerate_rooted_trees(range(1, 10))
