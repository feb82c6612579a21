"""Affine roots and affine Weyl group elements in translation form.

An affine root is a pair (level, classical): ``level*delta + classical``
with the classical part a finite root, or ``level*delta`` (imaginary) when
the classical part is None.  Group elements are pairs (translation, finite)
representing ``t_lambda o w`` with lambda stored as integer coordinates
over the simple coroots; this form makes inversion sets computable in
closed form, with no search.

Letters name the generators attached to a subsystem J: Classical(j) is the
simple reflection s_j, Affine(c) is the reflection in delta minus the
highest root of the c-th component of J.  Letter order is all classical
letters (by index) before all affine ones; greedy descents use that order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import NamedTuple

from .cartan import (
    Root,
    RootSystem,
    SubSystem,
    complement_roots,
    height,
    is_positive,
    negate,
    sub_system,
)
from .finweyl import (
    WeylElement,
    identity,
    in_subgroup,
    reflection,
    simple_reflection,
)


class AffineRoot(NamedTuple):
    level: int
    classical: Root | None

    @property
    def is_real(self) -> bool:
        return self.classical is not None

    @property
    def is_positive(self) -> bool:
        if self.level != 0:
            return self.level > 0
        return self.classical is not None and is_positive(self.classical)

    def __neg__(self) -> "AffineRoot":
        return AffineRoot(
            -self.level, None if self.classical is None else negate(self.classical)
        )

    def __str__(self) -> str:
        if self.classical is None:
            return f"{self.level}d"
        parts = [f"{self.level}d"] if self.level else []
        for i, c in enumerate(self.classical, start=1):
            if c:
                parts.append(f"{c:+d}a{i}".replace("+1a", "+a").replace("-1a", "-a"))
        text = "".join(parts) if self.level else "".join(parts).lstrip("+")
        return text or "0"


def affine_add(a: AffineRoot, b: AffineRoot, rs: RootSystem) -> AffineRoot | None:
    """Sum of two affine roots, or None when the sum is not a root."""
    level = a.level + b.level
    zero = (0,) * rs.rank
    ca = a.classical or zero
    cb = b.classical or zero
    classical = tuple(x + y for x, y in zip(ca, cb))
    if classical == zero:
        return AffineRoot(level, None) if level != 0 else None
    if classical in rs.root_set:
        return AffineRoot(level, classical)
    return None


class Letter(NamedTuple):
    kind: str  # "c" for a classical index, "a" for a component's affine node
    index: int

    def __str__(self) -> str:
        return f"{self.kind}{self.index}"


def letters_of(sub: SubSystem) -> tuple[Letter, ...]:
    """The generator alphabet of the subsystem, in canonical order."""
    classical = [Letter("c", j) for j in sub.J]
    affine = [Letter("a", c) for c in range(1, len(sub.components) + 1)]
    return tuple(classical + affine)


def letter_root(sub: SubSystem, letter: Letter) -> AffineRoot:
    """The simple root alpha_s named by the letter."""
    if letter.kind == "c":
        if letter.index not in sub.J:
            raise ValueError(f"classical letter {letter} not in J={sub.J}")
        return AffineRoot(0, sub.rs.simple_root(letter.index))
    if not 1 <= letter.index <= len(sub.components):
        raise ValueError(f"affine letter {letter} out of range for J={sub.J}")
    theta = sub.highest_roots[letter.index - 1]
    return AffineRoot(1, negate(theta))


@dataclass(frozen=True, eq=False)
class AffineElement:
    """t_lambda composed with a finite Weyl element, acting on affine roots."""

    translation: tuple[int, ...]
    finite: WeylElement

    def __post_init__(self):
        if len(self.translation) != self.finite.rs.rank:
            raise ValueError("translation coordinate length mismatch")

    @property
    def rs(self) -> RootSystem:
        return self.finite.rs

    def __eq__(self, other) -> bool:
        if not isinstance(other, AffineElement):
            return NotImplemented
        return (
            self.rs is other.rs
            and self.translation == other.translation
            and self.finite == other.finite
        )

    def __hash__(self) -> int:
        return hash((self.translation, self.finite))

    def __repr__(self) -> str:
        return f"AffineElement(t{list(self.translation)}, {self.finite!r})"

    @property
    def is_identity(self) -> bool:
        return not any(self.translation) and self.finite.is_identity

    def __mul__(self, other: "AffineElement") -> "AffineElement":
        if self.rs is not other.rs:
            raise ValueError("cannot multiply elements over different root systems")
        moved = self.finite.coroot_apply(other.translation)
        new_translation = tuple(a + b for a, b in zip(self.translation, moved))
        return AffineElement(new_translation, self.finite * other.finite)

    @cached_property
    def inverse(self) -> "AffineElement":
        w_inv = self.finite.inverse
        moved = w_inv.coroot_apply(self.translation)
        return AffineElement(tuple(-x for x in moved), w_inv)

    def act(self, beta: AffineRoot) -> AffineRoot:
        """Image of an affine root; imaginary roots are fixed."""
        if beta.classical is None:
            return beta
        eps = self.finite.apply(beta.classical)
        return AffineRoot(beta.level - _coroot_pairing(self.rs, eps, self.translation), eps)


def _coroot_pairing(rs: RootSystem, eps: Root, coords: tuple[int, ...]) -> int:
    """(eps | lambda) for lambda given over the simple coroots; an integer."""
    total = 0
    for i, c in enumerate(coords, start=1):
        if c:
            total += c * rs.simple_coroot_pairing(eps, i)
    return total


def affine_identity(rs: RootSystem) -> AffineElement:
    return AffineElement((0,) * rs.rank, identity(rs))


def translation(rs: RootSystem, coords) -> AffineElement:
    """The translation by a coroot-lattice vector (simple-coroot coordinates)."""
    coords = tuple(int(c) for c in coords)
    return AffineElement(coords, identity(rs))


def lift(w: WeylElement) -> AffineElement:
    """A finite Weyl element viewed inside the affine group."""
    return AffineElement((0,) * w.rs.rank, w)


def letter_element(sub: SubSystem, letter: Letter) -> AffineElement:
    """The reflection named by a letter: s_j, or t_{theta-check} s_theta."""
    rs = sub.rs
    letter_root(sub, letter)  # validates the letter against J
    if letter.kind == "c":
        return lift(simple_reflection(rs, letter.index))
    theta = sub.highest_roots[letter.index - 1]
    return AffineElement(rs.coroot_coords(theta), reflection(rs, theta))


def from_letters(sub: SubSystem, word) -> AffineElement:
    x = affine_identity(sub.rs)
    for letter in word:
        x = x * letter_element(sub, letter)
    return x


def in_weyl_subgroup(x: AffineElement, sub: SubSystem) -> bool:
    """Membership in the subgroup generated by the subsystem's letters.

    Holds exactly when the finite part is generated by J and the
    translation is supported on J.
    """
    J = set(sub.J)
    if any(c and (i not in J) for i, c in enumerate(x.translation, start=1)):
        return False
    return in_subgroup(x.finite, sub)


def delta_height(rs: RootSystem) -> int:
    """Height of delta: one more than the height of the highest root."""
    full = sub_system(rs, rs.index_set)
    return height(full.highest_roots[0]) + 1


def affine_height(rs: RootSystem, beta: AffineRoot) -> int:
    base = beta.level * delta_height(rs)
    return base + (height(beta.classical) if beta.classical else 0)


def affine_window(
    sub: SubSystem, cutoff: int, include_imaginary: bool = True
) -> tuple[AffineRoot, ...]:
    """All positive affine roots of the subsystem with level <= cutoff.

    Sorted by (affine height, level, classical part): sums always appear
    after their summands.
    """
    if cutoff < 0:
        raise ValueError("cutoff must be non-negative")
    rs = sub.rs
    out = []
    for eps in sub.roots:
        start = 0 if is_positive(eps) else 1
        out.extend(AffineRoot(m, eps) for m in range(start, cutoff + 1))
    if include_imaginary:
        out.extend(AffineRoot(m, None) for m in range(1, cutoff + 1))
    return tuple(
        sorted(out, key=lambda b: (affine_height(rs, b), b.level, b.classical or ()))
    )


def tower(rs: RootSystem, P, cutoff: int) -> frozenset[AffineRoot]:
    """Positive real roots with classical part in P, up to the cutoff level."""
    P = frozenset(P)
    if not P <= rs.root_set:
        raise ValueError("tower base must consist of roots")
    out = set()
    for eps in P:
        start = 0 if is_positive(eps) else 1
        out.update(AffineRoot(m, eps) for m in range(start, cutoff + 1))
    return frozenset(out)


def tail_set(
    sub: SubSystem, K, u: WeylElement, sign: int, cutoff: int
) -> frozenset[AffineRoot]:
    """Truncation of the tail pattern: the tower over u(complement of K).

    Invariant under replacing u by u*v with v generated by K.
    """
    base = frozenset(u.apply(r) for r in complement_roots(sub, K, sign))
    return tower(sub.rs, base, cutoff)


def affine_inversion_set(x: AffineElement, sub: SubSystem) -> frozenset[AffineRoot]:
    """Positive roots of the subsystem sent negative by the inverse.

    Closed form: with x = t_lambda o w, the root m*delta + eps is inverted
    iff m + (eps|lambda) < 0, or the sum is 0 and w-inverse sends eps
    negative.  Finite for every element of the subgroup.
    """
    if not in_weyl_subgroup(x, sub):
        raise ValueError("element is not in the subgroup for J")
    rs = x.rs
    w_inv = x.finite.inverse
    out = set()
    for eps in sub.roots:
        c = _coroot_pairing(rs, eps, x.translation)
        start = 0 if is_positive(eps) else 1
        for m in range(start, -c):
            out.add(AffineRoot(m, eps))
        if -c >= start and not is_positive(w_inv.apply(eps)):
            out.add(AffineRoot(-c, eps))
    return frozenset(out)


def affine_length(x: AffineElement, sub: SubSystem) -> int:
    """Length over the subsystem's letters, by counting inversions."""
    if not in_weyl_subgroup(x, sub):
        raise ValueError("element is not in the subgroup for J")
    rs = x.rs
    w_inv = x.finite.inverse
    total = 0
    for eps in sub.roots:
        c = _coroot_pairing(rs, eps, x.translation)
        start = 0 if is_positive(eps) else 1
        total += max(0, -c - start)
        if -c >= start and not is_positive(w_inv.apply(eps)):
            total += 1
    return total


def affine_reduced_word(x: AffineElement, sub: SubSystem) -> tuple[Letter, ...]:
    """Reduced word by greedy left descent in canonical letter order."""
    expected = affine_length(x, sub)
    word: list[Letter] = []
    current = x
    current_inv = x.inverse
    alphabet = [
        (letter, letter_root(sub, letter), letter_element(sub, letter))
        for letter in letters_of(sub)
    ]
    while not current.is_identity:
        if len(word) >= expected:
            raise RuntimeError("descent search exceeded the length bound")
        for letter, alpha, element in alphabet:
            if not current_inv.act(alpha).is_positive:
                word.append(letter)
                current = element * current
                current_inv = current_inv * element
                break
        else:
            raise RuntimeError("element of the subgroup has no descent")
    return tuple(word)


def element_from_affine_inversions(F, sub: SubSystem) -> AffineElement:
    """The element of the subgroup whose inversion set is the finite set F.

    Greedy peeling: the first letter whose simple root lies in F starts a
    reduced word; peeling repeats on the reflected remainder.  Raises
    ValueError when F is not an inversion set over the subsystem.
    """
    original = frozenset(F)
    remaining = set(F)
    alphabet = [
        (letter, letter_root(sub, letter), letter_element(sub, letter))
        for letter in letters_of(sub)
    ]
    word = []
    for _ in range(len(remaining)):
        for letter, alpha, element in alphabet:
            if alpha in remaining:
                word.append(letter)
                remaining.remove(alpha)
                remaining = {element.act(beta) for beta in remaining}
                if any(not beta.is_positive for beta in remaining):
                    raise ValueError("set is not an affine inversion set")
                break
        else:
            raise ValueError("set is not an affine inversion set")
    result = from_letters(sub, word)
    if affine_inversion_set(result, sub) != original:
        raise ValueError("set is not an affine inversion set")
    return result


@lru_cache(maxsize=None)
def _bfs_cached(sub: SubSystem, max_length: int):
    gens = [letter_element(sub, letter) for letter in letters_of(sub)]
    dist: dict[AffineElement, int] = {affine_identity(sub.rs): 0}
    frontier = [affine_identity(sub.rs)]
    depth = 0
    while frontier and depth < max_length:
        depth += 1
        new = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in dist:
                    dist[y] = depth
                    new.append(y)
        frontier = new
    return dist


def bfs_elements(sub: SubSystem, max_length: int) -> dict[AffineElement, int]:
    """Cayley-graph distances from the identity, out to the given radius."""
    return dict(_bfs_cached(sub, max_length))


# ---------------------------------------------------------------------------
# JSON encodings

def affine_root_to_json(beta: AffineRoot) -> dict:
    return {
        "level": beta.level,
        "classical": None if beta.classical is None else list(beta.classical),
    }


def affine_root_from_json(data: dict) -> AffineRoot:
    classical = data["classical"]
    return AffineRoot(int(data["level"]), None if classical is None else tuple(classical))


def letter_to_json(letter: Letter) -> dict:
    return {letter.kind: letter.index}


def letter_from_json(data: dict) -> Letter:
    (kind, index), = data.items()
    if kind not in ("c", "a"):
        raise ValueError(f"bad letter tag {kind!r}")
    return Letter(kind, int(index))


def element_to_json(x: AffineElement) -> dict:
    return {"lambda": list(x.translation), "wbar": list(x.finite.word)}


def element_from_json(rs: RootSystem, data: dict) -> AffineElement:
    from .finweyl import from_word

    return AffineElement(tuple(int(c) for c in data["lambda"]), from_word(rs, data["wbar"]))
