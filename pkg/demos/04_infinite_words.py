"""Infinite reduced words, the group action, and orbit invariants.

Run as: python3 demos/04_infinite_words.py
"""

from weylwords import build_root_system, sub_system
from weylwords.affine import from_letters, letters_of, lift
from weylwords.finweyl import from_word
from weylwords.biconvex import realize
from weylwords.words import (
    act_on_word,
    classify_word,
    inversion_at,
    limit_inversions,
    orbit_invariant,
    translation_word,
    words_equivalent,
)

rs = build_root_system("A2")
full = sub_system(rs, (1, 2))

# The base word for a proper subset K repeats a reduced word of a
# translation orthogonal to K; its inversions sweep out exactly the tail
# pattern for K.
base = translation_word(full, K=())
print("period:", [str(l) for l in base.period])
print("first six inversions:",
      [str(inversion_at(base, p)) for p in range(1, 7)])
print("inversions up to level 2:",
      sorted(str(b) for b in limit_inversions(base, 2)))

# The group acts on word classes.  Acting by an element rewrites the head
# and rotates the period; the class of the result only depends on the
# class of the input.
s1 = lift(from_word(rs, [1]))
moved = act_on_word(s1, base)
print("\nafter acting by s1: head", [str(l) for l in moved.head],
      "period", [str(l) for l in moved.period])
print("moved inversions up to level 1:",
      sorted(str(b) for b in limit_inversions(moved, 1)))

# Classification recovers the canonical parameters (K, u, y) of the
# word's inversion set; words are equivalent iff the parameters agree.
cls = classify_word(moved)
print("\ncanonical parameters: K =", cls.K, " u =", cls.param.u.word)
print("its view truncated:",
      sorted(str(b) for b in realize(cls.param, 1).truncate(1)))

# K is an orbit invariant: no group element can move a class between
# different K values, and every class with the same K is reachable.
one = translation_word(full, K=(1,))
print("\norbit invariant of the K=(1,) base word:", orbit_invariant(one))
x = from_letters(full, [letters_of(full)[2], letters_of(full)[0]])
print("after a random action it is still:", orbit_invariant(act_on_word(x, one)))
print("base words for different K are inequivalent:",
      not words_equivalent(base, one))
