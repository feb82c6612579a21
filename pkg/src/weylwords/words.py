"""Eventually periodic infinite reduced words and the group action on them.

A word is a head followed by a cyclically repeated period of letters.  Its
validity (every prefix reduced) is certified exactly: writing the period
product as translation-times-finite with finite part of order d, the d-th
power is a pure translation, so each inversion past the head advances
along an arithmetic progression in the level.  The word is infinite
reduced iff all inversions up to head + d periods are positive and every
progression has positive slope.  Words failing this are rejected at
construction time.

The inversion set of a word is the union of its prefix inversion sets; it
is an infinite real biconvex set, and ``classify_word`` computes the
parameter triple (K, u, y) naming it, which is the canonical form of the
word's equivalence class.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product as iter_product

from .cartan import RootSystem, SubSystem, sub_system
from .affine import (
    AffineElement,
    AffineRoot,
    Letter,
    affine_identity,
    affine_inversion_set,
    affine_reduced_word,
    element_from_affine_inversions,
    in_weyl_subgroup,
    letter_element,
    letter_from_json,
    letter_root,
    letter_to_json,
    lift,
    translation,
)
from .biconvex import BiconvexParam, realize


@dataclass(frozen=True)
class _Progression:
    base_level: int
    classical: tuple[int, ...]
    slope: int

    def level_at(self, m: int) -> int:
        return self.base_level + m * self.slope


@dataclass(frozen=True)
class _Structure:
    """Closed-form data for one word: prefixes, progressions, slopes."""

    prefixes: tuple[AffineElement, ...]  # z(0) .. z(H + d*n)
    phis: tuple[AffineRoot, ...]  # inversions 1 .. H + d*n
    pi: AffineElement  # period product
    order: int  # order d of the finite part of pi
    nu: tuple[int, ...]  # pi**d is the translation by nu
    progressions: tuple[tuple[_Progression, ...], ...]  # [r-1][k0]
    heads: tuple[AffineRoot, ...]  # inversions 1 .. H


@dataclass(frozen=True)
class InfiniteWord:
    """An eventually periodic infinite reduced word over a subsystem."""

    sub: SubSystem
    head: tuple[Letter, ...]
    period: tuple[Letter, ...]

    def __post_init__(self):
        object.__setattr__(self, "head", tuple(self.head))
        object.__setattr__(self, "period", tuple(self.period))
        if not self.period:
            raise ValueError("period must be non-empty")
        self._structure  # certify at construction time

    def letter_at(self, p: int) -> Letter:
        if p < 1:
            raise ValueError("positions are 1-based")
        H = len(self.head)
        if p <= H:
            return self.head[p - 1]
        return self.period[(p - H - 1) % len(self.period)]

    @cached_property
    def _structure(self) -> _Structure:
        sub, head, period = self.sub, self.head, self.period
        H, n = len(head), len(period)
        head_elems = [letter_element(sub, let) for let in head]
        period_elems = [letter_element(sub, let) for let in period]

        pi = affine_identity(sub.rs)
        for e in period_elems:
            pi = pi * e

        order = 1
        acc = pi.finite
        while not acc.is_identity:
            acc = acc * pi.finite
            order += 1
        power = pi
        for _ in range(order - 1):
            power = power * pi
        if not power.finite.is_identity:
            raise RuntimeError("period power failed to become a translation")
        nu = power.translation

        prefixes = [affine_identity(sub.rs)]
        phis: list[AffineRoot] = []
        for p in range(1, H + order * n + 1):
            letter = self.letter_at(p)
            z = prefixes[-1]
            phi = z.act(letter_root(sub, letter))
            if not phi.is_positive:
                raise ValueError(
                    f"not an infinite reduced word: inversion {p} is negative"
                )
            phis.append(phi)
            elem = head_elems[p - 1] if p <= H else period_elems[(p - H - 1) % n]
            prefixes.append(z * elem)

        rho = affine_identity(sub.rs)
        slopes = []
        for r in range(1, n + 1):
            c_r = rho.act(letter_root(sub, period[r - 1]))
            slope = -_pairing(sub.rs, c_r.classical, nu)
            if slope < 1:
                raise ValueError(
                    "not an infinite reduced word: a periodic inversion"
                    " fails to climb in level"
                )
            slopes.append(slope)
            rho = rho * period_elems[r - 1]

        progressions = tuple(
            tuple(
                _Progression(
                    base_level=phis[H + k0 * n + r - 1].level,
                    classical=phis[H + k0 * n + r - 1].classical,
                    slope=slopes[r - 1],
                )
                for k0 in range(order)
            )
            for r in range(1, n + 1)
        )
        if len(set(phis)) != len(phis):
            raise RuntimeError("certified word produced a repeated inversion")
        return _Structure(
            prefixes=tuple(prefixes),
            phis=tuple(phis),
            pi=pi,
            order=order,
            nu=nu,
            progressions=progressions,
            heads=tuple(phis[:H]),
        )


def _pairing(rs: RootSystem, eps, coords) -> int:
    total = 0
    for i, c in enumerate(coords, start=1):
        if c:
            total += c * rs.simple_coroot_pairing(eps, i)
    return total


def prefix_element(word: InfiniteWord, p: int) -> AffineElement:
    """The product of the first p letters (p = 0 gives the identity)."""
    if p < 0:
        raise ValueError("prefix length must be non-negative")
    st = word._structure
    if p < len(st.prefixes):
        return st.prefixes[p]
    H, n = len(word.head), len(word.period)
    offset = p - H
    k, r0 = divmod(offset, n)
    m, k0 = divmod(k, st.order)
    z = st.prefixes[H] * translation(word.sub.rs, tuple(m * x for x in st.nu))
    for _ in range(k0):
        z = z * st.pi
    for t in range(r0):
        z = z * letter_element(word.sub, word.period[t])
    return z


def inversion_at(word: InfiniteWord, p: int) -> AffineRoot:
    """The new positive root inverted by the p-th prefix."""
    if p < 1:
        raise ValueError("positions are 1-based")
    st = word._structure
    if p <= len(st.phis):
        return st.phis[p - 1]
    H, n = len(word.head), len(word.period)
    offset = p - H
    r = (offset - 1) % n + 1
    k = (offset - r) // n
    m, k0 = divmod(k, st.order)
    prog = st.progressions[r - 1][k0]
    return AffineRoot(prog.level_at(m), prog.classical)


def limit_inversions(word: InfiniteWord, cutoff: int) -> frozenset[AffineRoot]:
    """All inversions of the word with level at most the cutoff."""
    st = word._structure
    out = {phi for phi in st.heads if phi.level <= cutoff}
    for row in st.progressions:
        for prog in row:
            level = prog.base_level
            while level <= cutoff:
                out.add(AffineRoot(level, prog.classical))
                level += prog.slope
    return frozenset(out)


def _tail_support(word: InfiniteWord) -> frozenset:
    st = word._structure
    return frozenset(prog.classical for row in st.progressions for prog in row)


def translation_word(sub: SubSystem, K) -> InfiniteWord:
    """The purely periodic word repeating a reduced word of a translation
    that is orthogonal to K and pairs positively with the rest of J.

    The translation vector is the smallest qualifying one (by maximum
    coefficient, then lexicographically) with non-negative coroot
    coordinates supported on J.
    """
    K = tuple(sorted(set(K)))
    if not set(K) <= set(sub.J):
        raise ValueError(f"K={K} is not a subset of J={sub.J}")
    if set(K) == set(sub.J):
        raise ValueError("K must be a proper subset of J")
    rs = sub.rs
    J = sub.J
    lam = None
    bound = 0
    while lam is None:
        bound += 1
        if bound > 64:
            raise RuntimeError("translation search bound exceeded")
        for coeffs in iter_product(range(bound + 1), repeat=len(J)):
            if max(coeffs) != bound:
                continue
            full = [0] * rs.rank
            for j, c in zip(J, coeffs):
                full[j - 1] = c
            pair = {j: _pairing(rs, rs.simple_root(j), full) for j in J}
            if all(pair[k] == 0 for k in K) and all(
                pair[j] > 0 for j in J if j not in K
            ):
                lam = tuple(full)
                break
    period = affine_reduced_word(translation(rs, lam), sub)
    return InfiniteWord(sub=sub, head=(), period=period)


def act_on_word(x: AffineElement, word: InfiniteWord) -> InfiniteWord:
    """The left action: a representative of x applied to the word's class.

    Steps: find the smallest aligned cut p0 so that every inversion of the
    inverse of x that the word eventually inverts is already inverted by
    the p0-prefix; then the new word is a reduced word of x times that
    prefix, followed by the remaining letters.
    """
    sub = word.sub
    if not in_weyl_subgroup(x, sub):
        raise ValueError("element is not in the subgroup for J")
    finite_inversions = affine_inversion_set(x.inverse, sub)
    max_level = max((b.level for b in finite_inversions), default=0)
    target = finite_inversions & limit_inversions(word, max_level)
    seen: set[AffineRoot] = set()
    p0 = 0
    while not target <= seen:
        p0 += 1
        seen.add(inversion_at(word, p0))

    front = x * prefix_element(word, p0)
    new_head = () if front.is_identity else affine_reduced_word(front, sub)
    H, n = len(word.head), len(word.period)
    if p0 <= H:
        head = tuple(new_head) + word.head[p0:]
        period = word.period
    else:
        shift = (p0 - H) % n
        head = tuple(new_head)
        period = word.period[shift:] + word.period[:shift]
    return InfiniteWord(sub=sub, head=head, period=period)


@dataclass(frozen=True)
class WordClass:
    """The equivalence class of a word, named by its canonical parameters."""

    param: BiconvexParam

    @property
    def K(self) -> tuple[int, ...]:
        return self.param.K


def classify_word(word: InfiniteWord) -> WordClass:
    """Canonical parameters (K, u, y) of the word's inversion set.

    The tail support comes from the word's periodic progressions, (K, u)
    from its pointed-biclosed factorization, and y by peeling the finite
    residue.  The result is validated against a truncation of the word's
    own inversions.
    """
    sub = word.sub
    st = word._structure
    tail = _tail_support(word)
    from .finweyl import factor_pointed_biclosed

    try:
        K, u = factor_pointed_biclosed(tail, sub)
    except ValueError as exc:
        raise RuntimeError(f"word tail is not pointed biclosed: {exc}") from exc
    residual = [phi for phi in st.heads if phi.classical not in tail]
    u_inv = u.inverse
    pulled = frozenset(
        AffineRoot(b.level, u_inv.apply(b.classical)) for b in residual
    )
    try:
        y = element_from_affine_inversions(pulled, sub_system(sub.rs, K))
    except ValueError as exc:
        raise RuntimeError(f"word residue is not an inversion set: {exc}") from exc
    param = BiconvexParam(sub=sub, K=K, u=u, y=y)
    depth = max(
        [b.level for b in st.heads]
        + [p.base_level for row in st.progressions for p in row]
        + [0]
    ) + 1
    if realize(param, depth).truncate(depth) != limit_inversions(word, depth):
        raise RuntimeError("word classification failed to round-trip")
    return WordClass(param)


def words_equivalent(a: InfiniteWord, b: InfiniteWord) -> bool:
    """Whether two words have the same inversion set (the same class)."""
    if a.sub is not b.sub:
        raise ValueError("words live over different subsystems")
    return classify_word(a) == classify_word(b)


def orbit_invariant(word: InfiniteWord) -> tuple[int, ...]:
    """The subset K of the canonical parameters; constant on orbits."""
    return classify_word(word).K


def word_of_param(param: BiconvexParam) -> InfiniteWord:
    """The standard word of a parameter triple: u*y acting on the base
    translation word for K.  Requires K proper in J."""
    if not param.names_infinite_set:
        raise ValueError("finite parameters (K = J) name no infinite word")
    base = translation_word(param.sub, param.K)
    return act_on_word(lift(param.u) * param.y, base)


# ---------------------------------------------------------------------------
# JSON encodings

def word_to_json(word: InfiniteWord) -> dict:
    return {
        "J": list(word.sub.J),
        "head": [letter_to_json(let) for let in word.head],
        "period": [letter_to_json(let) for let in word.period],
    }


def word_from_json(rs: RootSystem, data: dict) -> InfiniteWord:
    return InfiniteWord(
        sub=sub_system(rs, data["J"]),
        head=tuple(letter_from_json(d) for d in data["head"]),
        period=tuple(letter_from_json(d) for d in data["period"]),
    )
