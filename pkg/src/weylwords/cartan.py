"""Finite crystallographic root systems, built from Cartan matrices.

Roots are immutable integer coordinate tuples over the simple basis
``alpha_1 .. alpha_l`` (1-based indexing everywhere in the public API).
The symmetric bilinear form is kept exact as a rational Gram matrix,
normalized so that every long root has squared length 2.  All generated
root lists are sorted by (height, coordinates) so that outputs are
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

Root = tuple[int, ...]

# Supported rank ranges for the built-in types.
_RANK_RANGE = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


def _chain_edges(rank: int) -> list[tuple[int, int]]:
    return [(i, i + 1) for i in range(1, rank)]


def cartan_matrix(label: str) -> tuple[tuple[int, ...], ...]:
    """Return the Cartan matrix of the finite type named by ``label``.

    Entry conventions: ``a[i][j] = <alpha_j, alpha_i-check>``, so the simple
    reflection acts by ``s_i(alpha_j) = alpha_j - a[i][j] alpha_i``.
    Labels look like ``"A2"``, ``"C2"``, ``"G2"``, ``"E8"``.
    """
    label = label.strip().upper()
    if len(label) < 2 or label[0] not in _RANK_RANGE or not label[1:].isdigit():
        raise ValueError(f"unrecognized type label {label!r}")
    family, rank = label[0], int(label[1:])
    lo, hi = _RANK_RANGE[family]
    if rank < lo or (hi is not None and rank > hi):
        raise ValueError(f"rank {rank} out of range for family {family}")

    a = [[2 * (i == j) for j in range(rank)] for i in range(rank)]

    def bond(i: int, j: int, aij: int = -1, aji: int = -1) -> None:
        a[i - 1][j - 1] = aij
        a[j - 1][i - 1] = aji

    if family in "AD" or (family == "E"):
        if family == "A":
            edges = _chain_edges(rank)
        elif family == "D":
            edges = _chain_edges(rank - 1) + [(rank - 2, rank)]
        else:
            # Chain 1-3-4-...-rank with node 2 attached to node 4.
            edges = [(1, 3), (3, 4), (2, 4)] + [(i, i + 1) for i in range(4, rank)]
        for i, j in edges:
            bond(i, j)
    elif family == "B":
        # alpha_rank is the short root.
        for i, j in _chain_edges(rank - 1):
            bond(i, j)
        bond(rank - 1, rank, -1, -2)
    elif family == "C":
        # alpha_rank is the long root.
        for i, j in _chain_edges(rank - 1):
            bond(i, j)
        bond(rank - 1, rank, -2, -1)
    elif family == "F":
        bond(1, 2)
        bond(2, 3, -1, -2)
        bond(3, 4)
    else:  # G2, alpha_1 short
        bond(1, 2, -3, -1)
    return tuple(tuple(row) for row in a)


def _validate_cartan(matrix: tuple[tuple[int, ...], ...]) -> None:
    n = len(matrix)
    if n == 0 or any(len(row) != n for row in matrix):
        raise ValueError("Cartan matrix must be square and non-empty")
    for i in range(n):
        if matrix[i][i] != 2:
            raise ValueError("diagonal Cartan entries must equal 2")
        for j in range(n):
            if i != j:
                if matrix[i][j] > 0:
                    raise ValueError("off-diagonal Cartan entries must be <= 0")
                if (matrix[i][j] == 0) != (matrix[j][i] == 0):
                    raise ValueError("Cartan zero pattern must be symmetric")
    if not _connected(matrix):
        raise ValueError("Cartan matrix must be indecomposable")


def _connected(matrix) -> bool:
    n = len(matrix)
    seen = {0}
    frontier = [0]
    while frontier:
        i = frontier.pop()
        for j in range(n):
            if j not in seen and matrix[i][j] != 0:
                seen.add(j)
                frontier.append(j)
    return len(seen) == n


def _symmetrizer(matrix) -> tuple[Fraction, ...]:
    """Positive rationals d with d_i a_ij = d_j a_ji, scaled so max d_i = 1.

    With this scaling the Gram matrix d_i a_ij gives long roots squared
    length 2.  Raises if the matrix is not symmetrizable.
    """
    n = len(matrix)
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    frontier = [0]
    while frontier:
        i = frontier.pop()
        for j in range(n):
            if matrix[i][j] != 0 and i != j:
                # d_i a_ij = d_j a_ji forces the ratio below.
                ratio = Fraction(matrix[i][j], matrix[j][i])
                value = d[i] * ratio
                if d[j] is None:
                    d[j] = value
                    frontier.append(j)
                elif d[j] != value:
                    raise ValueError("Cartan matrix is not symmetrizable")
    scale = max(x for x in d if x is not None)
    return tuple(x / scale for x in d)


def _positive_definite(gram: tuple[tuple[Fraction, ...], ...]) -> bool:
    """Leading-principal-minor test, exact over the rationals."""
    n = len(gram)
    m = [[Fraction(x) for x in row] for row in gram]
    for k in range(n):
        pivot = m[k][k]
        if pivot <= 0:
            return False
        for i in range(k + 1, n):
            factor = m[i][k] / pivot
            for j in range(k, n):
                m[i][j] -= factor * m[k][j]
    return True


def height(root: Root) -> int:
    """Sum of the simple-root coefficients."""
    return sum(root)


def is_positive(root: Root) -> bool:
    return any(c > 0 for c in root)


def negate(root: Root) -> Root:
    return tuple(-c for c in root)


def add(a: Root, b: Root) -> Root:
    return tuple(x + y for x, y in zip(a, b))


def support(root: Root) -> frozenset[int]:
    """Indices (1-based) of the nonzero coefficients."""
    return frozenset(i + 1 for i, c in enumerate(root) if c)


@dataclass(frozen=True, eq=False)
class RootSystem:
    """A finite crystallographic root system with its bilinear form.

    Instances are immutable and compared by identity; ``build_root_system``
    caches by type label so equal labels share one instance.
    """

    label: str | None
    cartan: tuple[tuple[int, ...], ...]
    rank: int
    symmetrizer: tuple[Fraction, ...]
    gram: tuple[tuple[Fraction, ...], ...]
    roots: tuple[Root, ...]
    root_set: frozenset[Root] = field(repr=False)

    @property
    def index_set(self) -> tuple[int, ...]:
        return tuple(range(1, self.rank + 1))

    @property
    def positive_roots(self) -> tuple[Root, ...]:
        return tuple(r for r in self.roots if is_positive(r))

    def simple_root(self, i: int) -> Root:
        if not 1 <= i <= self.rank:
            raise ValueError(f"simple root index {i} out of range")
        return tuple(int(j == i - 1) for j in range(self.rank))

    def pairing(self, a, b) -> Fraction:
        """The bilinear form (a|b) on the span of the simple roots."""
        total = Fraction(0)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        total += Fraction(ai) * Fraction(bj) * self.gram[i][j]
        return total

    def simple_coroot_pairing(self, v, i: int) -> Fraction:
        """(v | alpha_i-check) = 2(v|alpha_i)/(alpha_i|alpha_i).

        Integer-valued (and returned as int) whenever ``v`` is an integer
        vector, since the entries <alpha_j, alpha_i-check> are the Cartan
        entries a[i][j].
        """
        row = self.cartan[i - 1]
        if all(isinstance(c, int) for c in v):
            return sum(c * aij for c, aij in zip(v, row))
        return sum(Fraction(c) * aij for c, aij in zip(v, row))

    def reflect(self, root: Root, v):
        """Image of the vector ``v`` under the reflection in ``root``."""
        coeff = 2 * self.pairing(v, root) / self.pairing(root, root)
        if coeff.denominator == 1:
            coeff = int(coeff)
        return tuple(x - coeff * r for x, r in zip(v, root))

    def simple_reflect(self, i: int, v):
        """Image of ``v`` under s_i, using integer Cartan arithmetic."""
        coeff = self.simple_coroot_pairing(v, i)
        return tuple(
            x - coeff * int(j == i - 1) for j, x in enumerate(v)
        )

    def coroot(self, root: Root) -> tuple[Fraction, ...]:
        """2 root/(root|root), as an exact rational vector over the alphas."""
        if root not in self.root_set:
            raise ValueError(f"{root} is not a root")
        norm = self.pairing(root, root)
        return tuple(2 * Fraction(c) / norm for c in root)

    def coroot_coords(self, root: Root) -> tuple[int, ...]:
        """Coordinates of the coroot of ``root`` over the simple coroots.

        Uses alpha_j = d_j alpha_j-check; the result is always integral
        for crystallographic systems.
        """
        norm = self.pairing(root, root)
        coords = []
        for c, d in zip(root, self.symmetrizer):
            value = 2 * Fraction(c) * d / norm
            if value.denominator != 1:
                raise RuntimeError("coroot left the coroot lattice")
            coords.append(int(value))
        return tuple(coords)

    def is_long(self, root: Root) -> bool:
        return self.pairing(root, root) == 2


def _generate_roots(matrix, rank: int) -> tuple[Root, ...]:
    """Closure of the simple roots under all simple reflections."""
    simples = [tuple(int(j == i) for j in range(rank)) for i in range(rank)]
    seen = set(simples)
    frontier = list(simples)
    while frontier:
        beta = frontier.pop()
        for i in range(rank):
            coeff = sum(c * matrix[i][j] for j, c in enumerate(beta))
            image = tuple(
                c - coeff * int(j == i) for j, c in enumerate(beta)
            )
            if image not in seen:
                seen.add(image)
                frontier.append(image)
    return tuple(sorted(seen, key=lambda r: (height(r), r)))


def _build(label: str | None, matrix: tuple[tuple[int, ...], ...]) -> RootSystem:
    _validate_cartan(matrix)
    rank = len(matrix)
    d = _symmetrizer(matrix)
    gram = tuple(
        tuple(d[i] * matrix[i][j] for j in range(rank)) for i in range(rank)
    )
    for i in range(rank):
        for j in range(rank):
            if gram[i][j] != gram[j][i]:
                raise ValueError("Cartan matrix is not symmetrizable")
    if not _positive_definite(gram):
        raise ValueError("Cartan matrix is not of finite type")
    roots = _generate_roots(matrix, rank)
    return RootSystem(
        label=label,
        cartan=matrix,
        rank=rank,
        symmetrizer=d,
        gram=gram,
        roots=roots,
        root_set=frozenset(roots),
    )


@lru_cache(maxsize=None)
def _build_by_label(label: str) -> RootSystem:
    return _build(label, cartan_matrix(label))


def build_root_system(source) -> RootSystem:
    """Build a root system from a type label or an explicit Cartan matrix.

    Explicit matrices are validated (integrality, sign pattern,
    symmetrizability, positive definite symmetrization, connectedness) and
    rejected otherwise.  Label-built systems are cached and shared.
    """
    if isinstance(source, str):
        return _build_by_label(source)
    matrix = tuple(tuple(int(x) for x in row) for row in source)
    return _build(None, matrix)


@dataclass(frozen=True, eq=False)
class SubSystem:
    """The sub-root-system generated by a subset J of the simple indices.

    Carries the irreducible components of J (as index tuples), the highest
    root of each component, and the ordered root lists.  J may be empty.
    """

    rs: RootSystem
    J: tuple[int, ...]
    roots: tuple[Root, ...]
    components: tuple[tuple[int, ...], ...]
    highest_roots: tuple[Root, ...]
    root_set: frozenset[Root] = field(repr=False)

    @property
    def positives(self) -> tuple[Root, ...]:
        return tuple(r for r in self.roots if is_positive(r))

    @property
    def negatives(self) -> tuple[Root, ...]:
        return tuple(r for r in self.roots if not is_positive(r))

    def component_of(self, j: int) -> int:
        """1-based index of the component containing j."""
        for c, comp in enumerate(self.components, start=1):
            if j in comp:
                return c
        raise ValueError(f"index {j} not in J={self.J}")


@lru_cache(maxsize=None)
def _sub_system_cached(rs: RootSystem, J: tuple[int, ...]) -> SubSystem:
    roots = tuple(
        r for r in rs.roots if support(r) <= frozenset(J)
    )
    comps: list[tuple[int, ...]] = []
    remaining = set(J)
    while remaining:
        start = min(remaining)
        block = {start}
        frontier = [start]
        while frontier:
            i = frontier.pop()
            for j in remaining - block:
                if rs.cartan[i - 1][j - 1] != 0:
                    block.add(j)
                    frontier.append(j)
        remaining -= block
        comps.append(tuple(sorted(block)))
    comps.sort()
    highest = []
    for comp in comps:
        members = [
            r for r in roots if is_positive(r) and support(r) <= frozenset(comp)
        ]
        top = max(members, key=lambda r: (height(r), r))
        ties = [r for r in members if height(r) == height(top)]
        if len(ties) != 1:
            raise RuntimeError("component has no unique highest root")
        highest.append(top)
    return SubSystem(
        rs=rs,
        J=J,
        roots=roots,
        components=tuple(comps),
        highest_roots=tuple(highest),
        root_set=frozenset(roots),
    )


def sub_system(rs: RootSystem, J) -> SubSystem:
    """The subsystem of ``rs`` spanned by the simple roots indexed by J."""
    J = tuple(sorted(set(J)))
    if any(j not in rs.index_set for j in J):
        raise ValueError(f"J={J} is not a subset of the index set")
    return _sub_system_cached(rs, J)


def complement_roots(sub: SubSystem, K, sign: int) -> tuple[Root, ...]:
    """Roots of the subsystem J whose support meets J difference K.

    ``sign`` selects the positive (+1) or negative (-1) half.  Empty exactly
    when K covers all of J.
    """
    K = frozenset(K)
    if not K <= frozenset(sub.J):
        raise ValueError(f"K={sorted(K)} is not a subset of J={sub.J}")
    outside = frozenset(sub.J) - K
    return tuple(
        r
        for r in sub.roots
        if is_positive(r) == (sign > 0) and support(r) & outside
    )


def root_system_to_json(rs: RootSystem) -> dict:
    """JSON form: type label, root coordinate lists, exact Gram matrix.

    Rational Gram entries are encoded as [numerator, denominator] pairs,
    integers stay plain.
    """

    def enc(x: Fraction):
        return int(x) if x.denominator == 1 else [x.numerator, x.denominator]

    return {
        "type": rs.label,
        "cartan": [list(row) for row in rs.cartan],
        "roots": [list(r) for r in rs.roots],
        "gram": [[enc(x) for x in row] for row in rs.gram],
    }


def root_system_from_json(data: dict) -> RootSystem:
    rs = build_root_system(data["type"] or data["cartan"])
    if [list(r) for r in rs.roots] != data["roots"]:
        raise ValueError("root list does not match the declared type")
    return rs
