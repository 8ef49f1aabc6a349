"""Hessenberg root ideals, the map w -> M_w, and the type A dictionary.

A Hessenberg space b + sum_{alpha in M} g_{-alpha} is recorded by its root
set M, stored as a bitset over ``rs.positive_roots``.  In type A_{n-1},
permutations are one-line tuples of 1..n and s_i is the transposition
(i, i+1); a word s_{a1}...s_{ak} acts as the composite function, so
s_1 s_2 has one-line notation 231.
"""

from __future__ import annotations

from functools import lru_cache

from .rootsys import Root, RootSystem, RootSystemError, root_system, sub
from .weyl import (
    WeylElement,
    bruhat_leq,
    from_key,
    lower_interval_polynomial,
    reflection,
)


class RootIdeal:
    """A subset of the positive roots, not necessarily B-stable."""

    __slots__ = ("rs", "bits")

    def __init__(self, rs: RootSystem, bits: int = 0):
        self.rs = rs
        self.bits = bits

    @classmethod
    def from_roots(cls, rs: RootSystem, roots) -> "RootIdeal":
        bits = 0
        for r in roots:
            r = tuple(r)
            if r not in rs.root_index:
                raise RootSystemError(f"{r} is not a positive root of {rs.name}")
            bits |= 1 << rs.root_index[r]
        return cls(rs, bits)

    @classmethod
    def full(cls, rs: RootSystem) -> "RootIdeal":
        return cls(rs, (1 << rs.n_positive) - 1)

    @property
    def roots(self) -> tuple[Root, ...]:
        return tuple(r for k, r in enumerate(self.rs.positive_roots) if self.bits >> k & 1)

    def __contains__(self, r) -> bool:
        k = self.rs.root_index.get(tuple(r))
        return k is not None and bool(self.bits >> k & 1)

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def __iter__(self):
        return iter(self.roots)

    def __eq__(self, other):
        if not isinstance(other, RootIdeal):
            return NotImplemented
        return self.rs is other.rs and self.bits == other.bits

    def __hash__(self):
        return hash((self.rs.name, self.bits))

    def __le__(self, other: "RootIdeal") -> bool:
        return self.bits & ~other.bits == 0

    def __or__(self, other: "RootIdeal") -> "RootIdeal":
        return RootIdeal(self.rs, self.bits | other.bits)

    def __and__(self, other: "RootIdeal") -> "RootIdeal":
        return RootIdeal(self.rs, self.bits & other.bits)

    def complement(self) -> "RootIdeal":
        return RootIdeal(self.rs, ((1 << self.rs.n_positive) - 1) & ~self.bits)

    def __repr__(self):
        return f"RootIdeal({self.rs.name}, {format_ideal(self)!r})"


def format_ideal(M: RootIdeal) -> str:
    return ";".join(",".join(str(c) for c in r) for r in M.roots)


def parse_ideal(rs: RootSystem, text: str) -> RootIdeal:
    """Parse "1,0,0;0,1,0;..." (simple-root coefficient tuples)."""
    roots = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        r = tuple(int(x) for x in chunk.split(","))
        if len(r) != rs.rank:
            raise RootSystemError(f"root {r} has wrong length for {rs.name}")
        roots.append(r)
    return RootIdeal.from_roots(rs, roots)


@lru_cache(maxsize=None)
def _reflections(rs: RootSystem) -> tuple[WeylElement, ...]:
    return tuple(reflection(rs, a) for a in rs.positive_roots)


def m_w(rs: RootSystem, w: WeylElement) -> RootIdeal:
    """{alpha > 0 : s_alpha <= w}, one Bruhat query per positive root."""
    bits = 0
    for k, s in enumerate(_reflections(rs)):
        if bruhat_leq(s, w):
            bits |= 1 << k
    return RootIdeal(rs, bits)


def is_valid_ideal(rs: RootSystem, M: RootIdeal) -> bool:
    """Closure under subtracting simple roots (B-stability of the space)."""
    for r in M.roots:
        for a in rs.simple_roots:
            d = sub(r, a)
            if d in rs.root_index and d not in M:
                return False
    return True


def rationally_smooth(rs: RootSystem, w: WeylElement) -> bool:
    """Palindromicity of sum_{v <= w} q^l(v)."""
    return lower_interval_polynomial(w).is_palindromic(w.length)


# --- permutations -----------------------------------------------------------

def check_permutation(p) -> tuple[int, ...]:
    p = tuple(int(x) for x in p)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"{p} is not a permutation of 1..{len(p)}")
    return p


def contains_pattern(p, pattern) -> bool:
    """Whether p has a subsequence order-isomorphic to pattern."""
    p = check_permutation(p)
    k = len(pattern)
    n = len(p)

    def extend(chosen, start):
        depth = len(chosen)
        if depth == k:
            return True
        for pos in range(start, n - (k - depth) + 1):
            val = p[pos]
            # the new value must sit in the same relative position as pattern[depth]
            if all((val > p[c]) == (pattern[depth] > pattern[d]) for d, c in enumerate(chosen)):
                if extend(chosen + [pos], pos + 1):
                    return True
        return False

    return extend([], 0)


def smooth_type_a(p) -> bool:
    return not contains_pattern(p, (4, 2, 3, 1)) and not contains_pattern(p, (3, 4, 1, 2))


def is_codominant(p) -> bool:
    return not contains_pattern(p, (3, 1, 2))


def type_a(n: int) -> RootSystem:
    """The root system A_{n-1} of GL_n."""
    if n < 2:
        raise ValueError("need n >= 2")
    return root_system("A", n - 1)


def alpha_ij(n: int, i: int, j: int) -> Root:
    """alpha_i + ... + alpha_{j-1}, for 1 <= i < j <= n."""
    return tuple(1 if i <= k < j else 0 for k in range(1, n))


def word_to_permutation(n: int, word) -> tuple[int, ...]:
    p = list(range(1, n + 1))
    # s_{a1}...s_{ak} as a composite: apply the last letter first
    for a in reversed(word):
        p = [a + 1 if x == a else a if x == a + 1 else x for x in p]
    return tuple(p)


def permutation_to_element(p) -> WeylElement:
    p = check_permutation(p)
    n = len(p)
    rs = type_a(n)
    key = []
    for k in range(n - 1):
        a, b = p[k], p[k + 1]
        if a < b:
            key.append(alpha_ij(n, a, b))
        else:
            key.append(tuple(-c for c in alpha_ij(n, b, a)))
    return from_key(rs, key)


def element_to_permutation(w: WeylElement) -> tuple[int, ...]:
    if w.rs.family != "A":
        raise ValueError("permutations only describe type A elements")
    return word_to_permutation(w.rs.rank + 1, w.reduced_word)


# --- Hessenberg functions ----------------------------------------------------

def check_hessenberg_function(h) -> tuple[int, ...]:
    h = tuple(int(x) for x in h)
    n = len(h)
    if n == 0:
        raise ValueError("empty Hessenberg function")
    for i, v in enumerate(h, start=1):
        if not i <= v <= n:
            raise ValueError(f"h({i}) = {v} must lie in [{i}, {n}]")
        if i > 1 and v < h[i - 2]:
            raise ValueError(f"h is not nondecreasing at {i}")
    return h


def hessenberg_functions(n: int):
    """All Hessenberg functions on [n], in lexicographic order."""
    def rec(prefix):
        i = len(prefix) + 1
        if i > n:
            yield tuple(prefix)
            return
        lo = max(i, prefix[-1] if prefix else 1)
        for v in range(lo, n + 1):
            yield from rec(prefix + [v])

    yield from rec([])


def ideal_from_hessenberg_function(h) -> RootIdeal:
    h = check_hessenberg_function(h)
    n = len(h)
    rs = type_a(n)
    roots = [alpha_ij(n, i, j) for i in range(1, n + 1) for j in range(i + 1, h[i - 1] + 1)]
    return RootIdeal.from_roots(rs, roots)


def codominant_word(h) -> tuple[int, ...]:
    """(s_{h(1)-1} ... s_1)(s_{h(2)-1} ... s_2) ... (s_{h(n)-1} ... s_n)."""
    h = check_hessenberg_function(h)
    word = []
    for i, v in enumerate(h, start=1):
        word.extend(range(v - 1, i - 1, -1))
    return tuple(word)


def codominant_from_hessenberg_function(h) -> tuple[int, ...]:
    h = check_hessenberg_function(h)
    return word_to_permutation(len(h), codominant_word(h))


def hessenberg_function_from_codominant(p) -> tuple[int, ...]:
    p = check_permutation(p)
    if not is_codominant(p):
        raise ValueError(f"{p} contains 312, so it is not codominant")
    h, top = [], 0
    for x in p:
        top = max(top, x)
        h.append(top)
    return tuple(h)


def m_w_permutation(p) -> RootIdeal:
    w = permutation_to_element(p)
    return m_w(w.rs, w)


def is_smooth(rs: RootSystem, w: WeylElement) -> bool:
    """Smoothness of X_w: exact in type A, a necessary condition elsewhere.

    Outside type A, w must be rationally smooth and M_w must be B-stable.
    The tangent space of X_w at the base point is B-stable and contains the
    root spaces of M_w, and |M_w| = l(w) when w is rationally smooth, so a
    smooth X_w passes both tests.
    """
    if rs.family == "A":
        return smooth_type_a(element_to_permutation(w))
    return rationally_smooth(rs, w) and is_valid_ideal(rs, m_w(rs, w))


def gkm_admissible(rs: RootSystem, w: WeylElement) -> bool:
    """Pattern avoidance in type A, rational smoothness otherwise."""
    if rs.family == "A":
        return smooth_type_a(element_to_permutation(w))
    return rationally_smooth(rs, w)


def valid_ideals(rs: RootSystem) -> list[RootIdeal]:
    """Every B-stable root set, grown from the empty set one root at a time."""
    lower = []
    for r in rs.positive_roots:
        bits = 0
        for a in rs.simple_roots:
            d = sub(r, a)
            if d in rs.root_index:
                bits |= 1 << rs.root_index[d]
        lower.append(bits)
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for bits in frontier:
            for k, need in enumerate(lower):
                if not bits >> k & 1 and need & ~bits == 0:
                    grown = bits | 1 << k
                    if grown not in seen:
                        seen.add(grown)
                        nxt.append(grown)
        frontier = nxt
    return [RootIdeal(rs, b) for b in sorted(seen, key=lambda b: (bin(b).count("1"), b))]
