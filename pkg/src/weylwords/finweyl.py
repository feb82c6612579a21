"""Finite Weyl group machinery over a root system.

Elements are stored as the tuple of images of the simple roots, which is
the canonical form: equality, hashing, and all decisions use images, never
words.  Greedy algorithms (reduced words, coset splitting, peeling an
element out of its inversion set) always pick the smallest simple index
first, so every output is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

from .cartan import (
    Root,
    RootSystem,
    SubSystem,
    add,
    complement_roots,
    height,
    is_positive,
    negate,
    sub_system,
    support,
)


@dataclass(frozen=True, eq=False)
class WeylElement:
    """An element of the finite Weyl group, as images of the simple roots."""

    rs: RootSystem
    images: tuple[Root, ...]

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.rs is other.rs and self.images == other.images

    def __hash__(self) -> int:
        return hash((id(self.rs), self.images))

    def __repr__(self) -> str:
        word = ",".join(map(str, self.word))
        return f"WeylElement[{word or 'e'}]"

    @property
    def is_identity(self) -> bool:
        return all(
            img == self.rs.simple_root(i + 1) for i, img in enumerate(self.images)
        )

    def apply(self, v):
        """Image of a lattice vector (coordinates over the simple roots)."""
        result = [0] * self.rs.rank
        for c, img in zip(v, self.images):
            if c:
                for k, x in enumerate(img):
                    result[k] += c * x
        return tuple(result)

    def __mul__(self, other: WeylElement) -> WeylElement:
        if self.rs is not other.rs:
            raise ValueError("cannot multiply elements over different root systems")
        return WeylElement(self.rs, tuple(self.apply(img) for img in other.images))

    @cached_property
    def inverse(self) -> WeylElement:
        w = identity(self.rs)
        for i in self._right_greedy_suffix:
            w = w * simple_reflection(self.rs, i)
        return w

    @cached_property
    def _right_greedy_suffix(self) -> tuple[int, ...]:
        """Indices i_1, i_2, ... with self = s_{i_n} ... s_{i_1}."""
        letters = []
        v = self
        while not v.is_identity:
            for i in self.rs.index_set:
                if not is_positive(v.images[i - 1]):
                    letters.append(i)
                    v = v * simple_reflection(self.rs, i)
                    break
            else:
                raise RuntimeError("element has no descent but is not the identity")
        return tuple(letters)

    @cached_property
    def word(self) -> tuple[int, ...]:
        """Reduced word by greedy left descent, smallest index first."""
        word = []
        x, x_inv = self, self.inverse
        while not x.is_identity:
            for i in self.rs.index_set:
                if not is_positive(x_inv.apply(self.rs.simple_root(i))):
                    word.append(i)
                    s = simple_reflection(self.rs, i)
                    x = s * x
                    x_inv = x_inv * s
                    break
            else:
                raise RuntimeError("element has no descent but is not the identity")
        return tuple(word)

    @property
    def length(self) -> int:
        return len(self.word)

    def coroot_apply(self, coords) -> tuple[int, ...]:
        """Action on a coroot-lattice vector, in simple-coroot coordinates."""
        total = [0] * self.rs.rank
        for c, img_coords in zip(coords, self._coroot_images):
            if c:
                for k, x in enumerate(img_coords):
                    total[k] += c * x
        return tuple(total)

    @cached_property
    def _coroot_images(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            self.rs.coroot_coords(self.apply(self.rs.simple_root(i)))
            for i in self.rs.index_set
        )


def identity(rs: RootSystem) -> WeylElement:
    return WeylElement(rs, tuple(rs.simple_root(i) for i in rs.index_set))


def simple_reflection(rs: RootSystem, i: int) -> WeylElement:
    return WeylElement(
        rs, tuple(rs.simple_reflect(i, rs.simple_root(j)) for j in rs.index_set)
    )


def reflection(rs: RootSystem, root: Root) -> WeylElement:
    """The reflection in an arbitrary root."""
    if root not in rs.root_set:
        raise ValueError(f"{root} is not a root")
    return WeylElement(
        rs, tuple(rs.reflect(root, rs.simple_root(j)) for j in rs.index_set)
    )


def from_word(rs: RootSystem, word) -> WeylElement:
    w = identity(rs)
    for i in word:
        w = w * simple_reflection(rs, i)
    return w


def inversion_set(w: WeylElement, sub: SubSystem | None = None) -> frozenset[Root]:
    """Positive roots of the subsystem sent negative by the inverse."""
    if sub is None:
        sub = sub_system(w.rs, w.rs.index_set)
    w_inv = w.inverse
    return frozenset(
        beta for beta in sub.positives if not is_positive(w_inv.apply(beta))
    )


def in_subgroup(w: WeylElement, sub: SubSystem) -> bool:
    """Whether w lies in the parabolic subgroup generated by J."""
    J = frozenset(sub.J)
    return all(support(beta) <= J for beta in inversion_set(w))


@lru_cache(maxsize=None)
def _weyl_elements_cached(sub: SubSystem) -> tuple[WeylElement, ...]:
    rs = sub.rs
    gens = [simple_reflection(rs, j) for j in sub.J]
    order: list[WeylElement] = [identity(rs)]
    seen = {order[0]}
    frontier = [order[0]]
    while frontier:
        new = []
        for w in frontier:
            for g in gens:
                v = w * g
                if v not in seen:
                    seen.add(v)
                    new.append(v)
        new.sort(key=lambda v: v.word)
        order.extend(new)
        frontier = new
    return tuple(order)


def weyl_elements(sub: SubSystem) -> tuple[WeylElement, ...]:
    """All of W_J, ordered by (length, reduced word)."""
    return _weyl_elements_cached(sub)


def minimal_coset_reps(sub: SubSystem, K) -> tuple[WeylElement, ...]:
    """Elements of W_J sending every alpha_k with k in K to a positive root.

    These are the unique shortest representatives of the cosets w W_K.
    """
    K = _check_K(sub, K)
    return tuple(
        w
        for w in weyl_elements(sub)
        if all(is_positive(w.images[k - 1]) for k in K)
    )


def _check_K(sub: SubSystem, K) -> tuple[int, ...]:
    K = tuple(sorted(set(K)))
    if not set(K) <= set(sub.J):
        raise ValueError(f"K={K} is not a subset of J={sub.J}")
    return K


def coset_decompose(w: WeylElement, sub: SubSystem, K):
    """Split w = w_upper * w_lower with w_upper a minimal coset
    representative and w_lower generated by K; lengths add."""
    K = _check_K(sub, K)
    if not in_subgroup(w, sub):
        raise ValueError("element does not lie in the subgroup for J")
    rs = w.rs
    letters = []
    v = w
    while True:
        for k in K:
            if not is_positive(v.images[k - 1]):
                letters.append(k)
                v = v * simple_reflection(rs, k)
                break
        else:
            break
    lower = identity(rs)
    for k in reversed(letters):
        lower = lower * simple_reflection(rs, k)
    if v.length + lower.length != w.length:
        raise RuntimeError("coset split lengths do not add")
    return v, lower


@dataclass(frozen=True)
class SubsetClassification:
    closed: bool
    coclosed_in_J: bool
    biclosed_in_J: bool
    parabolic_in_J: bool
    symmetric: bool
    pointed: bool
    pointed_part: frozenset[Root]
    symmetric_part: frozenset[Root]


def _is_closed(P: frozenset[Root], ambient: frozenset[Root]) -> bool:
    members = list(P)
    for a in members:
        for b in members:
            s = add(a, b)
            if s in ambient and s not in P:
                return False
    return True


def classify_subset(P, sub: SubSystem) -> SubsetClassification:
    """Definition-level predicates for a subset of the subsystem's roots."""
    P = frozenset(P)
    if not P <= sub.root_set:
        raise ValueError("subset contains vectors outside the subsystem")
    ambient = sub.root_set
    neg = frozenset(negate(r) for r in P)
    closed = _is_closed(P, ambient)
    coclosed = _is_closed(ambient - P, ambient)
    symmetric_part = P & neg
    pointed_part = P - symmetric_part
    return SubsetClassification(
        closed=closed,
        coclosed_in_J=coclosed,
        biclosed_in_J=closed and coclosed,
        parabolic_in_J=closed and (P | neg) == ambient,
        symmetric=P == neg,
        pointed=not symmetric_part,
        pointed_part=pointed_part,
        symmetric_part=symmetric_part,
    )


def _positive_part_height(P) -> int:
    return sum(height(r) for r in P if is_positive(r))


def push_negative(P, sub: SubSystem) -> WeylElement:
    """Some w in W_J with w(P) inside the negative roots of the subsystem.

    Requires P pointed and closed.  Greedily applies the smallest simple
    reflection that strictly lowers the total height of the positive part;
    if no single reflection helps, falls back to scanning W_J for the
    shortest element that works.
    """
    P = frozenset(P)
    flags = classify_subset(P, sub)
    if not (flags.pointed and flags.closed):
        raise ValueError("push_negative requires a pointed closed set")
    rs = sub.rs
    w = identity(rs)
    current = P
    while any(is_positive(r) for r in current):
        h = _positive_part_height(current)
        for j in sub.J:
            moved = frozenset(rs.simple_reflect(j, r) for r in current)
            if _positive_part_height(moved) < h:
                current = moved
                w = simple_reflection(rs, j) * w
                break
        else:
            for v in weyl_elements(sub):
                if all(not is_positive(v.apply(r)) for r in current):
                    return v * w
            raise RuntimeError("no Weyl element sends the set negative")
    return w


def element_from_inversions(F, sub: SubSystem) -> WeylElement:
    """The unique element of W_J whose inversion set is F.

    Peels simple roots greedily: the first simple root found in F is the
    first letter of a reduced word.  Raises if F is not an inversion set.
    """
    original = frozenset(F)
    remaining = set(F)
    rs = sub.rs
    letters = []
    for _ in range(len(remaining)):
        for j in sub.J:
            alpha = rs.simple_root(j)
            if alpha in remaining:
                letters.append(j)
                remaining.remove(alpha)
                remaining = {rs.simple_reflect(j, beta) for beta in remaining}
                if any(not is_positive(beta) for beta in remaining):
                    raise ValueError("set is not an inversion set")
                break
        else:
            raise ValueError("set is not an inversion set")
    w = from_word(rs, letters)
    if inversion_set(w, sub) != original:
        raise ValueError("set is not an inversion set")
    return w


def factor_pointed_biclosed(P, sub: SubSystem):
    """Write a pointed biclosed set as u applied to the negative roots
    outside K, for a unique K inside J and minimal representative u.

    Returns (K, u).  The reconstruction is verified by recomputation.
    """
    P = frozenset(P)
    flags = classify_subset(P, sub)
    if not (flags.pointed and flags.biclosed_in_J):
        raise ValueError("set is not pointed and biclosed in the subsystem")
    F = frozenset(beta for beta in P if is_positive(beta))
    try:
        u = element_from_inversions(F, sub)
    except ValueError as exc:
        raise RuntimeError(f"inversion reconstruction failed: {exc}") from exc
    if inversion_set(u, sub) != F:
        raise RuntimeError("reconstructed element has the wrong inversions")
    sym = P | frozenset(negate(r) for r in P)
    K = tuple(j for j in sub.J if u.images[j - 1] not in sym)
    expected = frozenset(u.apply(r) for r in complement_roots(sub, K, -1))
    if expected != P:
        raise RuntimeError("pointed biclosed factorization did not round-trip")
    return K, u
