"""Biconvex subsets of the positive affine roots of a subsystem.

A biconvex set is closed under root addition and so is its complement.
The infinite real ones are in bijection with parameter triples
(K, u, y): K a subset of J, u a minimal coset representative, y an
element of the subgroup attached to K.  ``realize`` materializes the set
a triple names (a periodic "tail" pattern plus a finite part), and
``parametrize`` inverts it.  Nothing infinite is ever stored: views keep
the tail as a set of classical roots and answer membership at any level.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cartan import (
    Root,
    RootSystem,
    SubSystem,
    complement_roots,
    is_positive,
    sub_system,
)
from .finweyl import (
    WeylElement,
    factor_pointed_biclosed,
    in_subgroup,
)
from .affine import (
    AffineElement,
    AffineRoot,
    affine_add,
    affine_inversion_set,
    affine_window,
    element_from_affine_inversions,
    in_weyl_subgroup,
    tower,
)


class NotBiconvexError(ValueError):
    """Raised when an input set fails to be (or encode) a biconvex set."""


@dataclass(frozen=True, eq=False)
class BiconvexParam:
    """A triple (K, u, y) naming a biconvex set inside the subsystem J.

    Constraints checked on construction: K inside J, u a minimal coset
    representative for K inside the finite Weyl group of J, and y in the
    affine subgroup attached to K.  The named set is infinite exactly when
    K is a proper subset of J.
    """

    sub: SubSystem
    K: tuple[int, ...]
    u: WeylElement
    y: AffineElement

    def __post_init__(self):
        sub = self.sub
        if not sub.J:
            raise ValueError("parameters require a non-empty J")
        K = tuple(sorted(set(self.K)))
        object.__setattr__(self, "K", K)
        if not set(K) <= set(sub.J):
            raise ValueError(f"K={K} is not a subset of J={sub.J}")
        if not in_subgroup(self.u, sub):
            raise ValueError("u is not in the finite Weyl group of J")
        if any(not is_positive(self.u.images[k - 1]) for k in K):
            raise ValueError("u is not a minimal coset representative for K")
        if not in_weyl_subgroup(self.y, sub_system(sub.rs, K)):
            raise ValueError("y is not in the subgroup attached to K")

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiconvexParam):
            return NotImplemented
        return (
            self.sub is other.sub
            and self.K == other.K
            and self.u == other.u
            and self.y == other.y
        )

    def __hash__(self) -> int:
        return hash((id(self.sub), self.K, self.u, self.y))

    def __repr__(self) -> str:
        return f"BiconvexParam(J={self.sub.J}, K={self.K}, u={self.u!r}, y={self.y!r})"

    @property
    def names_infinite_set(self) -> bool:
        return set(self.K) != set(self.sub.J)


@dataclass(frozen=True, eq=False)
class BiconvexView:
    """A biconvex set as (tail pattern, finite part), exact at every level.

    Membership of level m with classical part eps: eps in the tail (any
    positive level), or the root is one of the finitely many extras.  The
    cutoff only records how far ``truncate`` materializes by default.
    """

    sub: SubSystem
    tail: frozenset[Root]
    finite_part: frozenset[AffineRoot]
    cutoff: int

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiconvexView):
            return NotImplemented
        return (
            self.sub is other.sub
            and self.tail == other.tail
            and self.finite_part == other.finite_part
        )

    def __hash__(self) -> int:
        return hash((id(self.sub), self.tail, self.finite_part))

    def __contains__(self, beta: AffineRoot) -> bool:
        if beta.classical is None or not beta.is_positive:
            return False
        return beta.classical in self.tail or beta in self.finite_part

    @property
    def is_infinite(self) -> bool:
        return bool(self.tail)

    def truncate(self, cutoff: int | None = None) -> frozenset[AffineRoot]:
        if cutoff is None:
            cutoff = self.cutoff
        members = set(tower(self.sub.rs, self.tail, cutoff))
        members.update(b for b in self.finite_part if b.level <= cutoff)
        return frozenset(members)


def realize(param: BiconvexParam, cutoff: int) -> BiconvexView:
    """The biconvex set named by (K, u, y): tail pattern plus finite part."""
    sub = param.sub
    tail = frozenset(param.u.apply(r) for r in complement_roots(sub, param.K, -1))
    finite = frozenset(
        AffineRoot(b.level, param.u.apply(b.classical))
        for b in affine_inversion_set(param.y, sub_system(sub.rs, param.K))
    )
    view = BiconvexView(sub=sub, tail=tail, finite_part=finite, cutoff=cutoff)
    if any(not b.is_positive for b in finite):
        raise RuntimeError("finite part left the positive roots")
    return view


def _check_window_member(sub: SubSystem, beta: AffineRoot, cutoff: int) -> None:
    if not beta.is_positive or beta.level > cutoff:
        raise ValueError(f"{beta} is outside the level-{cutoff} window")
    if beta.classical is not None and beta.classical not in sub.root_set:
        raise ValueError(f"{beta} is not a root of the subsystem")


@lru_cache(maxsize=None)
def _window_sum_triples(sub: SubSystem, cutoff: int):
    """All (a, b, a+b) with every part in the level-bounded window."""
    window = affine_window(sub, cutoff)
    window_set = frozenset(window)
    rs = sub.rs
    triples = []
    for i, a in enumerate(window):
        for b in window[i:]:
            total = affine_add(a, b, rs)
            if total is not None and total in window_set:
                triples.append((a, b, total))
    return tuple(triples)


def is_biconvex_window(S, sub: SubSystem, cutoff: int) -> bool:
    """Pairwise closure test inside the level-bounded window.

    Checks both closure of S and closure of its complement for every pair
    of window roots whose sum stays in the window.  Necessary at every
    cutoff; exact for sets that agree with a tail pattern beyond it.
    """
    S = frozenset(S)
    for beta in S:
        _check_window_member(sub, beta, cutoff)
    for a, b, total in _window_sum_triples(sub, cutoff):
        in_a, in_b = a in S, b in S
        if in_a and in_b and total not in S:
            return False
        if not in_a and not in_b and total in S:
            return False
    return True


@dataclass(frozen=True)
class WindowSet:
    """A level-bounded window of a set, plus its promised behavior beyond.

    ``elements`` lists every member with level at most ``cutoff`` (real or
    imaginary); beyond the cutoff, a real root belongs iff its classical
    part is in ``tail``, and an imaginary root belongs iff
    ``imaginary_tail``.
    """

    sub: SubSystem
    cutoff: int
    elements: frozenset[AffineRoot]
    tail: frozenset[Root] = frozenset()
    imaginary_tail: bool = False

    def __post_init__(self):
        for beta in self.elements:
            _check_window_member(self.sub, beta, self.cutoff)
        if not self.tail <= self.sub.root_set:
            raise ValueError("tail promise contains non-roots")

    def complement(self) -> "WindowSet":
        window = frozenset(affine_window(self.sub, self.cutoff))
        return WindowSet(
            sub=self.sub,
            cutoff=self.cutoff,
            elements=window - self.elements,
            tail=frozenset(self.sub.roots) - self.tail,
            imaginary_tail=not self.imaginary_tail,
        )

    @property
    def is_real(self) -> bool:
        return not self.imaginary_tail and all(b.is_real for b in self.elements)

    @property
    def is_finite(self) -> bool:
        return not self.tail and not self.imaginary_tail


def window_of_view(view: BiconvexView, cutoff: int | None = None) -> WindowSet:
    if cutoff is None:
        cutoff = view.cutoff
    return WindowSet(
        sub=view.sub,
        cutoff=cutoff,
        elements=view.truncate(cutoff),
        tail=view.tail,
    )


def parametrize(B: BiconvexView | WindowSet) -> BiconvexParam:
    """Recover the unique (K, u, y) naming a real biconvex set.

    The input must carry its tail support (the classical directions whose
    whole towers eventually lie inside).  The factorization is validated by
    a full round trip; anything inconsistent raises NotBiconvexError.
    """
    if isinstance(B, BiconvexView):
        B = window_of_view(B)
    sub = B.sub
    if not B.is_real:
        raise NotBiconvexError("parametrize expects a real set")
    try:
        K, u = factor_pointed_biclosed(B.tail, sub)
    except ValueError as exc:
        raise NotBiconvexError(f"tail support is not pointed biclosed: {exc}") from exc
    pattern = tower(sub.rs, B.tail, B.cutoff)
    if not pattern <= B.elements:
        raise NotBiconvexError("window is missing part of its own tail pattern")
    residual = B.elements - pattern
    u_inv = u.inverse
    pulled = frozenset(
        AffineRoot(b.level, u_inv.apply(b.classical)) for b in residual
    )
    K_sub = sub_system(sub.rs, K)
    try:
        y = element_from_affine_inversions(pulled, K_sub)
    except ValueError as exc:
        raise NotBiconvexError(f"finite part is not an inversion set: {exc}") from exc
    param = BiconvexParam(sub=sub, K=K, u=u, y=y)
    if realize(param, B.cutoff).truncate(B.cutoff) != B.elements:
        raise NotBiconvexError("window does not round-trip through its parameters")
    return param


def contained_mod_finite(p1: BiconvexParam, p2: BiconvexParam) -> bool:
    """Whether the set named by p1 is contained in p2's up to finitely
    many elements, decided algebraically (no truncation)."""
    if p1.sub is not p2.sub:
        raise ValueError("parameters live over different subsystems")
    if not set(p1.K) >= set(p2.K):
        return False
    K1_sub = sub_system(p1.sub.rs, p1.K)
    return in_subgroup(p2.u.inverse * p1.u, K1_sub)


def classify_biconvex(B: WindowSet):
    """Sort a biconvex set into one of the four structural cases.

    Returns (case, witness): "a" finite real with its group element, "c"
    infinite real with its parameters, "b"/"d" for complements of those
    (witness describes the complement).  Raises NotBiconvexError otherwise.
    """
    sub = B.sub
    if B.is_real:
        if B.is_finite:
            try:
                z = element_from_affine_inversions(B.elements, sub)
            except ValueError as exc:
                raise NotBiconvexError(f"not a finite inversion set: {exc}") from exc
            return "a", z
        return "c", parametrize(B)
    comp = B.complement()
    if not comp.is_real:
        raise NotBiconvexError("neither the set nor its complement is real")
    case, witness = classify_biconvex(comp)
    if case == "a":
        return "b", witness
    if case == "c":
        return "d", witness
    raise NotBiconvexError("complement classification failed")


def enumerate_biconvex(
    sub: SubSystem, cutoff: int, max_size: int, *, window_limit: int = 64
):
    """All window subsets of size at most max_size passing the pair test.

    Depth-first search over the window in height order, so each root's
    membership is forced (or contradicted) by decisions already made on
    its summands.  Refuses windows larger than ``window_limit`` with a
    size report.
    """
    window = affine_window(sub, cutoff)
    if len(window) > window_limit:
        raise ValueError(
            f"window has {len(window)} roots, above the limit {window_limit}"
        )
    rs = sub.rs
    index = {beta: t for t, beta in enumerate(window)}
    pair_lists: list[list[tuple[int, int]]] = [[] for _ in window]
    for i, a in enumerate(window):
        for j in range(i, len(window)):
            total = affine_add(a, window[j], rs)
            if total is not None and total in index:
                pair_lists[index[total]].append((i, j))

    chosen: list[int] = []
    status = [False] * len(window)
    results: list[frozenset[AffineRoot]] = []

    def walk(t: int) -> None:
        if t == len(window):
            results.append(frozenset(window[i] for i in chosen))
            return
        forced_in = any(status[i] and status[j] for i, j in pair_lists[t])
        forced_out = any(not status[i] and not status[j] for i, j in pair_lists[t])
        if forced_in and forced_out:
            return
        if not forced_in:
            walk(t + 1)
        if not forced_out and len(chosen) < max_size:
            status[t] = True
            chosen.append(t)
            walk(t + 1)
            chosen.pop()
            status[t] = False

    walk(0)
    results.sort(key=lambda s: (len(s), sorted((b.level, b.classical or ()) for b in s)))
    return results


# ---------------------------------------------------------------------------
# JSON encodings

def param_to_json(param: BiconvexParam) -> dict:
    from .affine import element_to_json

    return {
        "J": list(param.sub.J),
        "K": list(param.K),
        "u": list(param.u.word),
        "y": element_to_json(param.y),
    }


def param_from_json(rs: RootSystem, data: dict) -> BiconvexParam:
    from .affine import element_from_json
    from .finweyl import from_word

    sub = sub_system(rs, data["J"])
    return BiconvexParam(
        sub=sub,
        K=tuple(data["K"]),
        u=from_word(rs, data["u"]),
        y=element_from_json(rs, data["y"]),
    )


def view_to_json(view: BiconvexView) -> dict:
    from .affine import affine_root_to_json

    finite = sorted(view.finite_part, key=lambda b: (b.level, b.classical or ()))
    return {
        "tail": sorted(list(r) for r in view.tail),
        "finite": [affine_root_to_json(b) for b in finite],
        "cutoff": view.cutoff,
    }


def view_from_json(rs: RootSystem, J, data: dict) -> BiconvexView:
    from .affine import affine_root_from_json

    return BiconvexView(
        sub=sub_system(rs, J),
        tail=frozenset(tuple(r) for r in data["tail"]),
        finite_part=frozenset(affine_root_from_json(b) for b in data["finite"]),
        cutoff=int(data["cutoff"]),
    )
