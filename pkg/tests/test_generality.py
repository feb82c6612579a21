"""Cross-rank and multi-component coverage: the desk-scale sweeps run at
rank 2, so this module spot-checks the same machinery on A3 (including a
disconnected J with two affine letters) and G2."""

import random

import pytest

from weylwords.cartan import build_root_system, complement_roots, sub_system
from weylwords.finweyl import (
    classify_subset,
    factor_pointed_biclosed,
    identity,
    minimal_coset_reps,
    weyl_elements,
)
from weylwords.affine import (
    affine_identity,
    affine_inversion_set,
    affine_length,
    affine_reduced_word,
    bfs_elements,
    from_letters,
    letters_of,
    tail_set,
    translation,
)
from weylwords.biconvex import (
    BiconvexParam,
    is_biconvex_window,
    parametrize,
    realize,
    window_of_view,
)
from weylwords.words import (
    act_on_word,
    classify_word,
    limit_inversions,
    orbit_invariant,
    translation_word,
    words_equivalent,
)

A3 = build_root_system("A3")
SPLIT = sub_system(A3, (1, 3))  # two components, two affine letters
G2 = build_root_system("G2")


def test_split_subsystem_is_a_product_of_affine_lines():
    assert len(letters_of(SPLIT)) == 4
    # Lengths add across the two commuting factors.
    t = translation(A3, (2, 0, 1))
    assert affine_length(t, SPLIT) == 4 + 2
    word = affine_reduced_word(t, SPLIT)
    assert from_letters(SPLIT, word) == t


def test_split_translation_words_and_orbits():
    for K in [(), (1,), (3,)]:
        word = translation_word(SPLIT, K)
        assert orbit_invariant(word) == K
        for cutoff in (2, 5):
            assert limit_inversions(word, cutoff) == tail_set(
                SPLIT, K, identity(A3), -1, cutoff
            )


def test_split_action_and_classification():
    rng = random.Random(41)
    alphabet = letters_of(SPLIT)
    base = translation_word(SPLIT, (3,))
    for _ in range(10):
        x = from_letters(SPLIT, [rng.choice(alphabet) for _ in range(3)])
        moved = act_on_word(x, base)
        assert orbit_invariant(moved) == (3,)
        param = classify_word(moved).param
        for cutoff in (2, 4):
            assert realize(param, cutoff).truncate(cutoff) == limit_inversions(
                moved, cutoff
            )
    y = from_letters(SPLIT, [alphabet[2]])
    z = from_letters(SPLIT, [alphabet[3]])
    assert words_equivalent(
        act_on_word(y, act_on_word(z, base)), act_on_word(y * z, base)
    )


def test_split_parametrize_round_trip():
    for K in [(), (1,), (3,), (1, 3)]:
        K_sub = sub_system(A3, K)
        ys = list(bfs_elements(K_sub, 2)) if K else [affine_identity(A3)]
        for u in minimal_coset_reps(SPLIT, K):
            for y in ys:
                param = BiconvexParam(sub=SPLIT, K=K, u=u, y=y)
                view = realize(param, 5)
                assert parametrize(window_of_view(view)) == param
                assert is_biconvex_window(view.truncate(3), SPLIT, 3)


def test_g2_affine_lengths_and_inversions():
    full = sub_system(G2, (1, 2))
    for x, dist in bfs_elements(full, 4).items():
        assert affine_length(x, full) == dist
        assert len(affine_inversion_set(x, full)) == dist


def test_g2_pointed_biclosed_factorization():
    full = sub_system(G2, (1, 2))
    table = {}
    for K in [(), (1,), (2,), (1, 2)]:
        for u in minimal_coset_reps(full, K):
            image = frozenset(u.apply(r) for r in complement_roots(full, K, -1))
            assert image not in table
            table[image] = (K, u)
    assert len(table) == 12 + 6 + 6 + 1  # by the size of each coset space
    for P, (K, u) in table.items():
        flags = classify_subset(P, full)
        assert flags.pointed and flags.biclosed_in_J
        assert factor_pointed_biclosed(P, full) == (K, u)


def test_g2_word_round_trip():
    full = sub_system(G2, (1, 2))
    base = translation_word(full, (1,))
    param = classify_word(base).param
    assert param.K == (1,)
    for cutoff in (2, 4):
        assert realize(param, cutoff).truncate(cutoff) == limit_inversions(
            base, cutoff
        )
