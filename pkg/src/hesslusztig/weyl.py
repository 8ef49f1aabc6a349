"""Weyl group elements, Bruhat order and length-graded enumeration.

An element is stored by its canonical key, the tuple of images of the simple
roots (each in simple-root coordinates).  The key determines the linear
action on the root lattice, so products, lengths and inversion sets are all
computed from it.  Words are tuples of 1-based simple indices.
"""

from __future__ import annotations

import json
import os
from collections import deque
from functools import lru_cache
from pathlib import Path

from .rootsys import (
    Root,
    RootSystem,
    RootSystemError,
    check_index,
    is_negative,
    neg,
)

CACHE_VERSION = 1
CACHE_ENV = "HESSLUSZTIG_CACHE_DIR"


class LaurentPolyQ:
    """Integer Laurent polynomial in one variable q, stored sparsely."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        if coeffs is None:
            coeffs = {}
        elif not isinstance(coeffs, dict):
            coeffs = dict(enumerate(coeffs))
        self.coeffs = {int(k): int(v) for k, v in coeffs.items() if v}

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "LaurentPolyQ":
        return cls({degree: coeff})

    @classmethod
    def q_integer(cls, d: int) -> "LaurentPolyQ":
        """[d]_q = 1 + q + ... + q^(d-1)."""
        return cls({k: 1 for k in range(d)})

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return LaurentPolyQ(out)

    def __mul__(self, other):
        out: dict[int, int] = {}
        for a, x in self.coeffs.items():
            for b, y in other.coeffs.items():
                out[a + b] = out.get(a + b, 0) + x * y
        return LaurentPolyQ(out)

    def __eq__(self, other):
        if not isinstance(other, LaurentPolyQ):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __getitem__(self, degree: int) -> int:
        return self.coeffs.get(degree, 0)

    def degree(self) -> int:
        return max(self.coeffs) if self.coeffs else -1

    def low_degree(self) -> int:
        return min(self.coeffs) if self.coeffs else 0

    def at_one(self) -> int:
        return sum(self.coeffs.values())

    def coefficient_list(self) -> list[int]:
        if not self.coeffs:
            return []
        return [self[k] for k in range(self.low_degree(), self.degree() + 1)]

    def is_palindromic(self, degree: int | None = None) -> bool:
        """P(q) == q^degree P(1/q); degree defaults to the top degree."""
        if degree is None:
            degree = self.degree() + self.low_degree()
        return all(self[degree - k] == v for k, v in self.coeffs.items())

    def __repr__(self):
        return f"LaurentPolyQ({self.coeffs})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in sorted(self.coeffs):
            c = self.coeffs[k]
            if k == 0:
                term = str(abs(c))
            else:
                mono = "q" if k == 1 else f"q^{k}"
                term = mono if abs(c) == 1 else f"{abs(c)}{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, term))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, term in parts[1:]:
            out += f" {sign} {term}"
        return out


def degrees(family: str, rank: int) -> tuple[int, ...]:
    """Degrees of the basic invariants of W."""
    n = rank
    if family == "A":
        return tuple(range(2, n + 2))
    if family in "BC":
        return tuple(range(2, 2 * n + 1, 2))
    if family == "D":
        return tuple(sorted(list(range(2, 2 * n - 1, 2)) + [n]))
    return {
        ("E", 6): (2, 5, 6, 8, 9, 12),
        ("E", 7): (2, 6, 8, 10, 12, 14, 18),
        ("E", 8): (2, 8, 12, 14, 18, 20, 24, 30),
        ("F", 4): (2, 6, 8, 12),
        ("G", 2): (2, 6),
    }[family, rank]


class WeylElement:
    """An element of W(rs), immutable and hashable by its canonical key."""

    __slots__ = ("rs", "key", "length", "_word", "_images")

    def __init__(self, rs: RootSystem, key: tuple[Root, ...]):
        self.rs = rs
        self.key = key
        images = tuple(_apply(key, beta) for beta in rs.positive_roots)
        self._images = images
        self.length = sum(1 for img in images if is_negative(img))
        self._word = None

    @property
    def reduced_word(self) -> tuple[int, ...]:
        """Lexicographically least reduced word (greedy smallest left descent)."""
        if self._word is None:
            rs = self.rs
            images = list(self._images)
            minus_simple = [neg(a) for a in rs.simple_roots]
            word = []
            while True:
                present = set(images)
                for i in range(rs.rank):
                    if minus_simple[i] in present:
                        break
                else:
                    break
                word.append(i + 1)
                images = [rs._reflect(i, img) for img in images]
            self._word = tuple(word)
        return self._word

    def __call__(self, beta: Root) -> Root:
        """Image w(beta) of a root-lattice element."""
        return _apply(self.key, beta)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return multiply(self, other)

    def __eq__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.rs is other.rs and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __le__(self, other: "WeylElement") -> bool:
        return bruhat_leq(self, other)

    def __repr__(self):
        return f"WeylElement({self.rs.name}, {format_word(self.reduced_word)})"

    def is_identity(self) -> bool:
        return self.key == self.rs.simple_roots

    def inversions(self) -> tuple[Root, ...]:
        """Positive roots sent to negative roots."""
        return tuple(
            beta
            for beta, img in zip(self.rs.positive_roots, self._images)
            if is_negative(img)
        )

    def has_right_descent(self, i: int) -> bool:
        """l(w s_i) < l(w), for a 1-based index."""
        return is_negative(self.key[i - 1])

    def times_simple(self, i: int) -> "WeylElement":
        """w * s_i (right multiplication), 1-based index."""
        return WeylElement(self.rs, _right_simple(self.rs, self.key, i - 1))

    def simple_times(self, i: int) -> "WeylElement":
        """s_i * w (left multiplication), 1-based index."""
        rs = self.rs
        return WeylElement(rs, tuple(rs._reflect(i - 1, c) for c in self.key))

    def inverse(self) -> "WeylElement":
        return from_word(self.rs, tuple(reversed(self.reduced_word)))


def _apply(key: tuple[Root, ...], beta: Root) -> Root:
    out = [0] * len(key)
    for j, b in enumerate(beta):
        if b:
            col = key[j]
            for k in range(len(out)):
                out[k] += b * col[k]
    return tuple(out)


def _right_simple(rs: RootSystem, key, i: int):
    # (w s_i)(alpha_j) = w(alpha_j) - A[i][j] w(alpha_i)
    A = rs.cartan
    ci = key[i]
    return tuple(
        col if A[i][j] == 0 else
        (neg(ci) if i == j else tuple(c - A[i][j] * x for c, x in zip(col, ci)))
        for j, col in enumerate(key)
    )


def identity(rs: RootSystem) -> WeylElement:
    return WeylElement(rs, rs.simple_roots)


def from_word(rs: RootSystem, word) -> WeylElement:
    """Product s_{i1} s_{i2} ... of simple reflections (1-based indices)."""
    key = rs.simple_roots
    for i in word:
        check_index(rs, i)
        key = _right_simple(rs, key, i - 1)
    return WeylElement(rs, key)


def from_key(rs: RootSystem, key) -> WeylElement:
    return WeylElement(rs, tuple(tuple(c) for c in key))


def reflection(rs: RootSystem, alpha: Root) -> WeylElement:
    """The reflection s_alpha for a positive root alpha."""
    alpha = tuple(alpha)
    if alpha not in rs.root_index:
        raise RootSystemError(f"{alpha} is not a positive root of {rs.name}")
    key = []
    for a in rs.simple_roots:
        c = rs.coroot_pairing(rs.root_to_weight(a), alpha)
        key.append(tuple(x - c * y for x, y in zip(a, alpha)))
    return WeylElement(rs, tuple(key))


def multiply(a: WeylElement, b: WeylElement) -> WeylElement:
    if a.rs is not b.rs:
        raise ValueError("elements belong to different root systems")
    return WeylElement(a.rs, tuple(_apply(a.key, col) for col in b.key))


def bruhat_leq(v: WeylElement, w: WeylElement) -> bool:
    """Bruhat comparison v <= w.

    Walks a reduced word of w from the right.  At each letter s, with s a
    right descent of the current w, v <= w iff min(v, v s) <= w s.
    """
    if v.rs is not w.rs:
        raise ValueError("elements belong to different root systems")
    if v.length > w.length:
        return False
    rs = v.rs
    key = v.key
    for i in reversed(w.reduced_word):
        if is_negative(key[i - 1]):
            key = _right_simple(rs, key, i - 1)
    return key == rs.simple_roots


def format_word(word) -> str:
    return "[" + "".join(str(i) for i in word) + "]" if all(i < 10 for i in word) else str(list(word))


def parse_word(text: str) -> tuple[int, ...]:
    """Accepts "[23121]", "23121" or "2,3,1,2,1"."""
    text = text.strip().strip("[]").strip()
    if not text:
        return ()
    if "," in text:
        return tuple(int(x) for x in text.split(","))
    return tuple(int(c) for c in text)


# --- enumeration -----------------------------------------------------------

def _bfs_keys(rs: RootSystem) -> list:
    start = rs.simple_roots
    seen = {start}
    order = [start]
    queue = deque([start])
    while queue:
        key = queue.popleft()
        for i in range(rs.rank):
            nxt = _right_simple(rs, key, i)
            if nxt not in seen:
                seen.add(nxt)
                order.append(nxt)
                queue.append(nxt)
    return order


def cache_dir_default() -> Path | None:
    path = os.environ.get(CACHE_ENV)
    return Path(path) if path else None


def _cache_file(rs: RootSystem, cache_dir: Path) -> Path:
    return Path(cache_dir) / f"weyl_{rs.family}{rs.rank}.json"


def _load_cache(rs: RootSystem, cache_dir: Path):
    path = _cache_file(rs, cache_dir)
    if not path.exists():
        return None
    try:
        data = json.loads(path.read_text())
    except (OSError, ValueError):
        return None
    if data.get("version") != CACHE_VERSION or data.get("family") != rs.family \
            or data.get("rank") != rs.rank:
        return None
    return [from_word(rs, word) for word in data["words"]]


def _write_cache(rs: RootSystem, cache_dir: Path, elements) -> None:
    cache_dir = Path(cache_dir)
    cache_dir.mkdir(parents=True, exist_ok=True)
    data = {
        "version": CACHE_VERSION,
        "family": rs.family,
        "rank": rs.rank,
        "order": len(elements),
        "words": [list(w.reduced_word) for w in elements],
    }
    tmp = _cache_file(rs, cache_dir).with_suffix(".tmp")
    tmp.write_text(json.dumps(data))
    tmp.replace(_cache_file(rs, cache_dir))


@lru_cache(maxsize=None)
def _elements_memo(rs: RootSystem) -> tuple[WeylElement, ...]:
    elems = [WeylElement(rs, k) for k in _bfs_keys(rs)]
    elems.sort(key=lambda w: (w.length, w.reduced_word))
    return tuple(elems)


def all_elements(rs: RootSystem, cache_dir=None) -> tuple[WeylElement, ...]:
    """All of W, sorted by (length, reduced word).

    With a cache directory (argument or $HESSLUSZTIG_CACHE_DIR) the reduced
    words are stored as versioned JSON and reused on later calls.  The cache
    is written by one process at a time; readers need no locking.
    """
    if cache_dir is None:
        cache_dir = cache_dir_default()
    if cache_dir is None:
        return _elements_memo(rs)
    cached = _load_cache(rs, cache_dir)
    if cached is not None:
        return tuple(cached)
    elems = _elements_memo(rs)
    _write_cache(rs, cache_dir, elems)
    return elems


def group_order(rs: RootSystem) -> int:
    return len(_elements_memo(rs))


def enumerate_by_length(rs: RootSystem, ell: int, cache_dir=None) -> list[WeylElement]:
    if ell < 0 or ell > rs.n_positive:
        raise ValueError(f"length {ell} out of range 0..{rs.n_positive}")
    return [w for w in all_elements(rs, cache_dir) if w.length == ell]


def longest_element(rs: RootSystem) -> WeylElement:
    # w0 = -1 on the roots composed with the diagram automorphism; build it by
    # walking up right descents until none is left
    w = identity(rs)
    while True:
        for i in range(1, rs.rank + 1):
            if not w.has_right_descent(i):
                w = w.times_simple(i)
                break
        else:
            return w


def length_generating_function(rs: RootSystem) -> LaurentPolyQ:
    out: dict[int, int] = {}
    for w in _elements_memo(rs):
        out[w.length] = out.get(w.length, 0) + 1
    return LaurentPolyQ(out)


def degree_product(family: str, rank: int) -> LaurentPolyQ:
    """prod_i [d_i]_q over the degrees of W."""
    p = LaurentPolyQ({0: 1})
    for d in degrees(family, rank):
        p = p * LaurentPolyQ.q_integer(d)
    return p


def lower_interval_polynomial(w: WeylElement) -> LaurentPolyQ:
    """sum over v <= w of q^l(v)."""
    out: dict[int, int] = {}
    for v in _elements_memo(w.rs):
        if v.length <= w.length and bruhat_leq(v, w):
            out[v.length] = out.get(v.length, 0) + 1
    return LaurentPolyQ(out)
