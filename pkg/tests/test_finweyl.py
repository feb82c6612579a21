import pytest

from weylwords.cartan import (
    add,
    build_root_system,
    complement_roots,
    is_positive,
    negate,
    sub_system,
)
from weylwords.finweyl import (
    classify_subset,
    coset_decompose,
    element_from_inversions,
    factor_pointed_biclosed,
    from_word,
    identity,
    in_subgroup,
    inversion_set,
    minimal_coset_reps,
    push_negative,
    reflection,
    simple_reflection,
    weyl_elements,
)

from oracles import bfs_word_lengths, brute_force_positivize, subsets


A2 = build_root_system("A2")
A2_FULL = sub_system(A2, (1, 2))


def inversions_by_formula(rs, word):
    """Oracle: alpha_{s_1}, s_1(alpha_{s_2}), ... for a reduced word."""
    values = []
    for n, i in enumerate(word):
        beta = rs.simple_root(i)
        for j in reversed(word[:n]):
            beta = rs.simple_reflect(j, beta)
        values.append(beta)
    return values


def test_involution_and_group_laws():
    s1 = simple_reflection(A2, 1)
    s2 = simple_reflection(A2, 2)
    assert (s1 * s1).is_identity
    assert (s1 * s2) * s1 == s1 * (s2 * s1)
    w = s1 * s2 * s1
    assert (w * w.inverse).is_identity
    assert (w.inverse * w).is_identity


def test_simple_reflection_example():
    s1 = simple_reflection(A2, 1)
    assert s1.apply((0, 1)) == (1, 1)
    assert s1.apply((1, 0)) == (-1, 0)


def test_apply_preserves_form():
    rs = build_root_system("G2")
    w = from_word(rs, [1, 2, 1])
    for a in rs.roots:
        for b in rs.roots:
            assert rs.pairing(w.apply(a), w.apply(b)) == rs.pairing(a, b)


def test_mixed_root_systems_rejected():
    other = build_root_system("A1")
    with pytest.raises(ValueError):
        simple_reflection(A2, 1) * simple_reflection(other, 1)


def test_inversion_set_examples():
    assert inversion_set(identity(A2), A2_FULL) == frozenset()
    s1 = simple_reflection(A2, 1)
    assert inversion_set(s1, A2_FULL) == {(1, 0)}
    s1s2 = from_word(A2, [1, 2])
    assert inversion_set(s1s2, A2_FULL) == {(1, 0), (1, 1)}


@pytest.mark.parametrize("label", ["A2", "C2", "G2"])
def test_inversions_match_word_formula(label):
    rs = build_root_system(label)
    full = sub_system(rs, rs.index_set)
    for w in weyl_elements(full):
        values = inversions_by_formula(rs, w.word)
        assert len(set(values)) == len(values)
        assert frozenset(values) == inversion_set(w, full)
        assert len(values) == w.length


def test_reduced_word_examples():
    assert identity(A2).word == ()
    longest = max(weyl_elements(A2_FULL), key=lambda w: w.length)
    assert longest.length == 3
    assert from_word(A2, [1, 2, 1]).length == 3
    # Non-reduced input words still canonicalize.
    assert from_word(A2, [1, 1, 2]).word == (2,)


def test_group_orders():
    for label, order in [("A2", 6), ("C2", 8), ("G2", 12)]:
        rs = build_root_system(label)
        assert len(weyl_elements(sub_system(rs, rs.index_set))) == order
    assert len(weyl_elements(sub_system(A2, ()))) == 1


@pytest.mark.parametrize("label", ["A2", "C2", "G2"])
def test_lengths_match_bfs_oracle(label):
    rs = build_root_system(label)
    gens = [simple_reflection(rs, i) for i in rs.index_set]
    dist = bfs_word_lengths(gens, identity(rs), lambda x, g: x * g, 12)
    full = sub_system(rs, rs.index_set)
    assert len(dist) == len(weyl_elements(full))
    for w, d in dist.items():
        assert w.length == d
        assert len(inversion_set(w, full)) == d


def test_reflection_in_arbitrary_root():
    theta = (1, 1)
    r = reflection(A2, theta)
    assert r.apply(theta) == negate(theta)
    assert r == from_word(A2, [1, 2, 1])


def test_coset_decompose_examples():
    s1 = simple_reflection(A2, 1)
    upper, lower = coset_decompose(s1, A2_FULL, {1})
    assert upper.is_identity and lower == s1

    w = from_word(A2, [1, 2])
    upper, lower = coset_decompose(w, A2_FULL, ())
    assert upper == w and lower.is_identity

    upper, lower = coset_decompose(w, A2_FULL, {1})
    assert upper == w and lower.is_identity
    assert is_positive(upper.apply(A2.simple_root(1)))


@pytest.mark.parametrize("label", ["A2", "C2"])
def test_coset_decompose_everywhere(label):
    rs = build_root_system(label)
    full = sub_system(rs, rs.index_set)
    for K in subsets(rs.index_set):
        reps = set(minimal_coset_reps(full, K))
        for w in weyl_elements(full):
            upper, lower = coset_decompose(w, full, K)
            assert upper * lower == w
            assert upper in reps
            assert in_subgroup(lower, sub_system(rs, K))
            assert upper.length + lower.length == w.length


def test_minimal_coset_reps_are_shortest():
    for K in subsets(A2.index_set):
        reps = minimal_coset_reps(A2_FULL, K)
        K_sub = sub_system(A2, K)
        order_K = len(weyl_elements(K_sub))
        assert len(reps) * order_K == len(weyl_elements(A2_FULL))


def test_classify_subset_examples():
    positives = frozenset(A2_FULL.positives)
    flags = classify_subset(positives, A2_FULL)
    # The full positive half is closed, pointed, and parabolic (it is the
    # K-empty standard parabolic set).
    assert flags.closed and flags.pointed and flags.parabolic_in_J

    full = classify_subset(A2_FULL.root_set, A2_FULL)
    assert full.parabolic_in_J and full.symmetric

    empty = classify_subset(frozenset(), A2_FULL)
    assert empty.closed and empty.pointed
    assert empty.pointed_part == frozenset() and empty.symmetric_part == frozenset()


def test_classify_subset_rejects_outside():
    with pytest.raises(ValueError):
        classify_subset({(2, 0)}, A2_FULL)
    with pytest.raises(ValueError):
        classify_subset({(0, 1)}, sub_system(A2, {1}))


@pytest.mark.parametrize("label", ["A2", "C2"])
def test_pointed_symmetric_split_unique_and_closed(label):
    rs = build_root_system(label)
    full = sub_system(rs, rs.index_set)
    for P in subsets(full.roots):
        flags = classify_subset(P, full)
        # The split is forced by the formulas, hence unique.
        assert flags.pointed_part | flags.symmetric_part == P
        assert flags.pointed_part & flags.symmetric_part == frozenset()
        assert flags.symmetric_part == {r for r in P if negate(r) in P}
        if flags.closed:
            sym_ok = classify_subset(flags.symmetric_part, full).closed
            pt_ok = classify_subset(flags.pointed_part, full).closed
            assert sym_ok and pt_ok
            for a in flags.pointed_part:
                for b in flags.symmetric_part:
                    s = add(a, b)
                    if s in rs.root_set:
                        assert s in flags.pointed_part


def test_push_negative_examples():
    negatives = frozenset(A2_FULL.negatives)
    assert push_negative(negatives, A2_FULL).is_identity
    assert push_negative(frozenset(), A2_FULL).is_identity
    w = push_negative({(1, 0)}, A2_FULL)
    assert not is_positive(w.apply((1, 0)))
    assert w == simple_reflection(A2, 1)


def test_push_negative_highest_root_only():
    # {theta} contains no simple root, which exercises the non-obvious
    # branch of the greedy descent.
    w = push_negative({(1, 1)}, A2_FULL)
    assert not is_positive(w.apply((1, 1)))


@pytest.mark.parametrize("label", ["A2", "C2", "G2"])
def test_push_negative_all_pointed_closed(label):
    rs = build_root_system(label)
    full = sub_system(rs, rs.index_set)
    negatives = set(full.negatives)
    for P in subsets(full.roots):
        flags = classify_subset(P, full)
        if flags.pointed and flags.closed:
            w = push_negative(P, full)
            assert all(not is_positive(w.apply(r)) for r in P)
            # The exhaustive oracle must agree that a solution exists.
            oracle = brute_force_positivize(
                weyl_elements(full), lambda v, r: v.apply(r), P, negatives
            )
            assert oracle is not None
        else:
            with pytest.raises(ValueError):
                push_negative(P, full)


def test_element_from_inversions_round_trip():
    for w in weyl_elements(A2_FULL):
        assert element_from_inversions(inversion_set(w, A2_FULL), A2_FULL) == w
    with pytest.raises(ValueError):
        element_from_inversions({(1, 1)}, A2_FULL)  # theta alone


def test_factor_pointed_biclosed_examples():
    K, u = factor_pointed_biclosed(frozenset(A2_FULL.negatives), A2_FULL)
    assert K == () and u.is_identity

    K, u = factor_pointed_biclosed(frozenset(), A2_FULL)
    assert K == (1, 2) and u.is_identity

    K, u = factor_pointed_biclosed({(0, -1), (-1, -1)}, A2_FULL)
    assert K == (1,) and u.is_identity


@pytest.mark.parametrize("label", ["A2", "B2", "C2"])
def test_factorization_matches_exhaustive_search(label):
    # Oracle: tabulate u(complement negatives) for every (K, u); the map
    # must be injective and must exactly cover the pointed biclosed sets.
    rs = build_root_system(label)
    for J in subsets(rs.index_set):
        sub = sub_system(rs, J)
        table = {}
        for K in subsets(J):
            Kt = tuple(sorted(K))
            for u in minimal_coset_reps(sub, Kt):
                image = frozenset(u.apply(r) for r in complement_roots(sub, Kt, -1))
                assert image not in table, "factorization is not unique"
                table[image] = (Kt, u)
        for P in subsets(sub.roots):
            flags = classify_subset(P, sub)
            pointed_biclosed = flags.pointed and flags.biclosed_in_J
            pointed_coclosed = flags.pointed and flags.coclosed_in_J
            assert pointed_biclosed == pointed_coclosed
            assert pointed_biclosed == (P in table)
            if pointed_biclosed:
                assert factor_pointed_biclosed(P, sub) == table[P]
            else:
                with pytest.raises(ValueError):
                    factor_pointed_biclosed(P, sub)


@pytest.mark.parametrize("label", ["A2", "C2"])
def test_parabolic_sets_are_exactly_translated_standard_ones(label):
    rs = build_root_system(label)
    full = sub_system(rs, rs.index_set)
    standard = set()
    for K in subsets(rs.index_set):
        base = frozenset(full.positives) | frozenset(
            r for r in sub_system(rs, K).negatives
        )
        for w in weyl_elements(full):
            standard.add(frozenset(w.apply(r) for r in base))
    for P in subsets(full.roots):
        assert classify_subset(P, full).parabolic_in_J == (P in standard)


def test_translated_complement_containment_criterion():
    # w1 C(K1) inside w2 C(K2) iff K1 contains K2 and w1 in w2 W_{K1}.
    rs = A2
    full = A2_FULL
    for K1 in subsets(rs.index_set):
        set1 = complement_roots(full, K1, +1)
        K1_sub = sub_system(rs, K1)
        for K2 in subsets(rs.index_set):
            set2 = frozenset(complement_roots(full, K2, +1))
            for w1 in weyl_elements(full):
                for w2 in weyl_elements(full):
                    lhs = all(w1.apply(r) in {w2.apply(s) for s in set2} for r in set1)
                    rhs = set(K1) >= set(K2) and in_subgroup(
                        w2.inverse * w1, K1_sub
                    )
                    assert lhs == rhs


def test_inversion_sets_are_biconvex_in_positives():
    for w in weyl_elements(A2_FULL):
        inv = inversion_set(w, A2_FULL)
        positives = frozenset(A2_FULL.positives)
        for a in positives:
            for b in positives:
                s = add(a, b)
                if s in positives:
                    if a in inv and b in inv:
                        assert s in inv
                    if a not in inv and b not in inv:
                        assert s not in inv
