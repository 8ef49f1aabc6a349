"""Finite crystallographic root systems in exact integer coordinates.

Roots are tuples of coefficients on the simple roots, weights are tuples of
coefficients on the fundamental weights.  The Cartan matrix follows
Bourbaki: ``cartan[i][j] = <alpha_j, alpha_i^vee>``.  Simple indices in
the public functions are 1-based, matching the ``[23121]`` word notation;
methods of :class:`RootSystem` and ``reflect_weight`` are 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import sympy

Root = tuple[int, ...]
Weight = tuple[int, ...]

FAMILIES = "ABCDEFG"


class RootSystemError(ValueError):
    pass


def _check_family_rank(family: str, rank: int) -> None:
    if family not in FAMILIES:
        raise RootSystemError(f"unknown family {family!r}")
    if not isinstance(rank, int) or rank < 1:
        raise RootSystemError(f"rank must be a positive integer, got {rank!r}")
    ok = {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 3,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }[family]
    if not ok:
        raise RootSystemError(f"invalid rank {rank} for type {family}")


def cartan_matrix(family: str, rank: int) -> tuple[tuple[int, ...], ...]:
    """Bourbaki Cartan matrix of the given type."""
    _check_family_rank(family, rank)
    n = rank
    A = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, a_ij=-1, a_ji=-1):
        A[i][j] = a_ij
        A[j][i] = a_ji

    if family in "ABCD":
        chain = n - 1 if family == "D" else n
        for i in range(chain - 1):
            link(i, i + 1)
        if family == "B":
            # alpha_n short
            link(n - 2, n - 1, -1, -2)
        elif family == "C":
            # alpha_n long
            link(n - 2, n - 1, -2, -1)
        elif family == "D":
            link(n - 3, n - 1)
    elif family == "E":
        # 1-3-4-5-...-n with 2 attached to 4
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    elif family == "F":
        link(0, 1)
        link(1, 2, -1, -2)
        link(2, 3)
    elif family == "G":
        # alpha_1 short, alpha_2 long
        link(0, 1, -3, -1)
    return tuple(tuple(row) for row in A)


@dataclass(frozen=True)
class CartanDatum:
    family: str
    rank: int
    cartan_matrix: tuple[tuple[int, ...], ...] = field(default=None)

    def __post_init__(self):
        expected = cartan_matrix(self.family, self.rank)
        if self.cartan_matrix is None:
            object.__setattr__(self, "cartan_matrix", expected)
            return
        A = tuple(tuple(int(x) for x in row) for row in self.cartan_matrix)
        n = self.rank
        if len(A) != n or any(len(row) != n for row in A):
            raise RootSystemError("Cartan matrix has wrong shape")
        for i in range(n):
            if A[i][i] != 2:
                raise RootSystemError("Cartan matrix diagonal must be 2")
            for j in range(n):
                if i != j:
                    if A[i][j] not in (0, -1, -2, -3):
                        raise RootSystemError(f"bad off-diagonal entry {A[i][j]}")
                    if (A[i][j] == 0) != (A[j][i] == 0):
                        raise RootSystemError("Cartan matrix zero pattern not symmetric")
        if A != expected:
            raise RootSystemError(
                f"Cartan matrix does not match the Bourbaki convention for {self.family}{n}"
            )
        object.__setattr__(self, "cartan_matrix", A)

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"


def _height(r: Root) -> int:
    return sum(r)


def is_positive(r: Root) -> bool:
    return any(r) and all(c >= 0 for c in r)


def is_negative(r: Root) -> bool:
    return any(r) and all(c <= 0 for c in r)


def neg(r: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(-c for c in r)


def add(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x - y for x, y in zip(a, b))


class RootSystem:
    """A finite root system with its positive roots and reflection tables.

    Instances are immutable after construction.  ``positive_roots`` is
    ordered by height, then lexicographically on coordinates; every table
    below is indexed by that order.
    """

    def __init__(self, datum: CartanDatum):
        self.datum = datum
        self.family = datum.family
        self.rank = datum.rank
        self.cartan = datum.cartan_matrix
        n = self.rank
        A = self.cartan

        self.simple_roots: tuple[Root, ...] = tuple(
            tuple(int(i == j) for j in range(n)) for i in range(n)
        )

        # closure of the simple roots under the simple reflections
        found = set(self.simple_roots)
        frontier = list(self.simple_roots)
        while frontier:
            new = []
            for beta in frontier:
                for i in range(n):
                    if beta == self.simple_roots[i]:
                        continue
                    image = self._reflect(i, beta)
                    if image not in found:
                        found.add(image)
                        new.append(image)
            frontier = new
        self.positive_roots: tuple[Root, ...] = tuple(
            sorted(found, key=lambda r: (_height(r), r))
        )
        self.root_index: dict[Root, int] = {r: k for k, r in enumerate(self.positive_roots)}

        # reflection_table[i][k] = (sign, index) with s_i(beta_k) = sign * beta_index
        table = []
        for i in range(n):
            row = []
            for beta in self.positive_roots:
                image = self._reflect(i, beta)
                if is_positive(image):
                    row.append((1, self.root_index[image]))
                else:
                    row.append((-1, self.root_index[neg(image)]))
            table.append(tuple(row))
        self.reflection_table = tuple(table)

        # symmetrizer: d_i = (alpha_i, alpha_i)/2, normalised so short roots have d = 1
        d = [None] * n
        d[0] = Fraction(1)
        stack = [0]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j != i and A[i][j] != 0 and d[j] is None:
                    d[j] = d[i] * A[i][j] / A[j][i]
                    stack.append(j)
        scale = 1 / min(d)
        self.symmetrizer: tuple[int, ...] = tuple(int(x * scale) for x in d)

        self.fundamental_weights: tuple[Weight, ...] = tuple(
            tuple(int(i == j) for j in range(n)) for i in range(n)
        )
        self.rho: Weight = tuple(1 for _ in range(n))
        self._cartan_inv = sympy.Matrix(A).inv()

    def _reflect(self, i: int, beta: Root) -> Root:
        c = sum(self.cartan[i][j] * beta[j] for j in range(self.rank))
        return tuple(b - c * (k == i) for k, b in enumerate(beta))

    def __repr__(self) -> str:
        return f"RootSystem({self.family}{self.rank})"

    @property
    def name(self) -> str:
        return self.datum.name

    @property
    def n_positive(self) -> int:
        return len(self.positive_roots)

    def is_root(self, r: Root) -> bool:
        r = tuple(r)
        return r in self.root_index or neg(r) in self.root_index

    def root_to_weight(self, r: Root) -> Weight:
        """Fundamental-weight coordinates of an element of the root lattice."""
        A = self.cartan
        return tuple(sum(A[i][j] * r[j] for j in range(self.rank)) for i in range(self.rank))

    def weight_to_root(self, w: Weight) -> tuple[Fraction, ...]:
        """Simple-root coordinates of a weight (rational in general)."""
        v = self._cartan_inv * sympy.Matrix(w)
        return tuple(Fraction(int(x.p), int(x.q)) for x in v)

    def root_norm(self, r: Root) -> int:
        """(r, r)/2 in the normalisation where short roots have value 1."""
        A, d = self.cartan, self.symmetrizer
        n = self.rank
        total = sum(r[i] * r[j] * d[i] * A[i][j] for i in range(n) for j in range(n))
        return total // 2

    def coroot_pairing(self, w: Weight, r: Root) -> int:
        """<w, r^vee> for a weight w and a root r."""
        d = self.symmetrizer
        num = sum(w[j] * d[j] * r[j] for j in range(self.rank))
        den = self.root_norm(r)
        q, rem = divmod(num, den)
        if rem:
            raise ArithmeticError(f"non-integral pairing <{w}, {r}^vee>")
        return q

    def inner(self, w: Weight, r: Root) -> int:
        """Symmetric form (w, r) for a weight and a root-lattice element."""
        d = self.symmetrizer
        return sum(w[j] * d[j] * r[j] for j in range(self.rank))

    def highest_root(self) -> Root:
        return self.positive_roots[-1]


@lru_cache(maxsize=None)
def build_root_system(datum: CartanDatum) -> RootSystem:
    return RootSystem(datum)


def root_system(family: str, rank: int) -> RootSystem:
    """Shorthand for ``build_root_system(CartanDatum(family, rank))``."""
    return build_root_system(CartanDatum(family.upper(), int(rank)))


def check_index(rs: RootSystem, i: int) -> None:
    if not 1 <= i <= rs.rank:
        raise IndexError(f"simple index {i} out of range for {rs.name}")


def reflect_root(rs: RootSystem, i: int, r: Root) -> Root:
    """s_i(r) = r - <r, alpha_i^vee> alpha_i (i is 1-based)."""
    check_index(rs, i)
    r = tuple(r)
    if not rs.is_root(r):
        raise RootSystemError(f"{r} is not a root of {rs.name}")
    return rs._reflect(i - 1, r)


def pairing(rs: RootSystem, w: Weight, coroot_of: Root) -> int:
    coroot_of = tuple(coroot_of)
    if not rs.is_root(coroot_of):
        raise RootSystemError(f"{coroot_of} is not a root of {rs.name}")
    return rs.coroot_pairing(tuple(w), coroot_of)


def root_sum(rs: RootSystem, roots) -> Weight:
    """Sum of a collection of positive roots, in weight coordinates."""
    total = (0,) * rs.rank
    for r in roots:
        r = tuple(r)
        if r not in rs.root_index:
            raise RootSystemError(f"{r} is not a positive root of {rs.name}")
        total = add(total, r)
    return rs.root_to_weight(total)


def reflect_weight(rs: RootSystem, i: int, w: Weight) -> Weight:
    """s_i(w) = w - w_i alpha_i in fundamental-weight coordinates."""
    c = w[i]
    if c == 0:
        return tuple(w)
    A = rs.cartan
    return tuple(w[k] - c * A[k][i] for k in range(rs.rank))


def dominant_conjugate(rs: RootSystem, w: Weight) -> tuple[Weight, int]:
    """Dominant element of the W-orbit of w, and the number of reflections used.

    The count equals the length of the minimal element taking w to the
    dominant chamber only when w is regular; callers needing the sign use
    inversion counts instead.
    """
    w = tuple(w)
    steps = 0
    while True:
        for i in range(rs.rank):
            if w[i] < 0:
                w = reflect_weight(rs, i, w)
                steps += 1
                break
        else:
            return w, steps


def to_json(rs: RootSystem) -> dict:
    return {
        "family": rs.family,
        "rank": rs.rank,
        "positive_roots": [list(r) for r in rs.positive_roots],
        "cartan": [list(row) for row in rs.cartan],
    }
