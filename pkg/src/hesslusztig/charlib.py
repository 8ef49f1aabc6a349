"""Exact torus characters on the flag variety and on smooth Lusztig varieties.

Characters are finitely supported maps from weights (fundamental-weight
coordinates) to integers.  Two independent routes compute the Euler
characteristic of a line bundle on G/B: Borel-Weil-Bott on top of
Freudenthal's multiplicity recursion, and the fixed-point sum over W
evaluated by exact division of Laurent polynomials.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from functools import lru_cache

from .hess import is_smooth, m_w
from .rootsys import RootSystem, Weight, add, dominant_conjugate, reflect_weight, sub
from .weyl import WeylElement, all_elements


class Character:
    """Virtual character: weight -> multiplicity, zeros never stored."""

    __slots__ = ("mult",)

    def __init__(self, mult=None):
        self.mult: dict[Weight, int] = {
            tuple(k): int(v) for k, v in (mult or {}).items() if v
        }

    def __add__(self, other: "Character") -> "Character":
        out = dict(self.mult)
        for k, v in other.mult.items():
            out[k] = out.get(k, 0) + v
        return Character(out)

    def __neg__(self) -> "Character":
        return Character({k: -v for k, v in self.mult.items()})

    def __sub__(self, other: "Character") -> "Character":
        return self + (-other)

    def scale(self, c: int) -> "Character":
        return Character({k: c * v for k, v in self.mult.items()})

    def __eq__(self, other):
        if not isinstance(other, Character):
            return NotImplemented
        return self.mult == other.mult

    def __getitem__(self, weight) -> int:
        return self.mult.get(tuple(weight), 0)

    def __len__(self):
        return len(self.mult)

    @property
    def dim(self) -> int:
        return sum(self.mult.values())

    def is_effective(self) -> bool:
        return all(v > 0 for v in self.mult.values())

    def to_list(self) -> list:
        """Sorted [(weight coords, multiplicity), ...] for serialization."""
        return [[list(k), v] for k, v in sorted(self.mult.items())]

    def __repr__(self):
        return f"Character(dim={self.dim}, {len(self.mult)} weights)"


class NotDominant(ValueError):
    pass


def is_dominant(w: Weight) -> bool:
    return all(c >= 0 for c in w)


def _below(rs: RootSystem, lam: Weight, mu: Weight):
    """Simple-root coordinates of lam - mu if it lies in the positive root cone."""
    diff = rs.weight_to_root(sub(lam, mu))
    if all(x.denominator == 1 and x >= 0 for x in diff):
        return tuple(int(x) for x in diff)
    return None


@lru_cache(maxsize=None)
def _dominant_multiplicities(rs: RootSystem, lam: Weight) -> dict[Weight, int]:
    pos_wt = [rs.root_to_weight(a) for a in rs.positive_roots]

    depth = {lam: (0,) * rs.rank}
    queue = deque([lam])
    while queue:
        mu = queue.popleft()
        for a in pos_wt:
            d, _ = dominant_conjugate(rs, sub(mu, a))
            if d in depth:
                continue
            gap = _below(rs, lam, d)
            if gap is not None:
                depth[d] = gap
                queue.append(d)

    order = sorted(depth, key=lambda mu: (sum(depth[mu]), mu))
    rho = rs.rho
    lam_rho = add(lam, rho)
    mult: dict[Weight, int] = {lam: 1}
    for mu in order[1:]:
        total = 0
        for alpha, a_wt in zip(rs.positive_roots, pos_wt):
            nu = add(mu, a_wt)
            while True:
                d, _ = dominant_conjugate(rs, nu)
                m = mult.get(d)
                if m is None:
                    break
                total += m * rs.inner(nu, alpha)
                nu = add(nu, a_wt)
        # (lam+rho)^2 - (mu+rho)^2 = (lam - mu, lam + mu + 2 rho)
        denom = rs.inner(add(lam_rho, add(mu, rho)), depth[mu])
        value = Fraction(2 * total, denom)
        if value.denominator != 1:
            raise ArithmeticError(f"non-integral multiplicity at {mu}")
        mult[mu] = int(value)
    return mult


def weyl_orbit(rs: RootSystem, w: Weight) -> set[Weight]:
    seen = {tuple(w)}
    queue = deque(seen)
    while queue:
        x = queue.popleft()
        for i in range(rs.rank):
            y = reflect_weight(rs, i, x)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


@lru_cache(maxsize=None)
def _weyl_character(rs: RootSystem, lam: Weight) -> Character:
    out = {}
    for mu, m in _dominant_multiplicities(rs, lam).items():
        for nu in weyl_orbit(rs, mu):
            out[nu] = m
    return Character(out)


def weyl_character(rs: RootSystem, lam) -> Character:
    """Character of the irreducible module of highest weight lam."""
    lam = tuple(lam)
    if len(lam) != rs.rank or not is_dominant(lam):
        raise NotDominant(f"{lam} is not a dominant weight of {rs.name}")
    return _weyl_character(rs, lam)


def weyl_dimension(rs: RootSystem, lam) -> int:
    lam = tuple(lam)
    if len(lam) != rs.rank or not is_dominant(lam):
        raise NotDominant(f"{lam} is not a dominant weight of {rs.name}")
    lam_rho = add(lam, rs.rho)
    num = den = 1
    for alpha in rs.positive_roots:
        num *= rs.coroot_pairing(lam_rho, alpha)
        den *= rs.coroot_pairing(rs.rho, alpha)
    q, r = divmod(num, den)
    assert r == 0
    return q


def bott_euler(rs: RootSystem, mu) -> Character:
    """sum_i (-1)^i H^i(G/B, L_mu) as a virtual character."""
    nu = add(tuple(mu), rs.rho)
    pairings = [rs.coroot_pairing(nu, a) for a in rs.positive_roots]
    if 0 in pairings:
        return Character()
    # the element u with u(nu) dominant has length #{alpha > 0 : <nu, alpha^vee> < 0}
    length = sum(1 for p in pairings if p < 0)
    dom, _ = dominant_conjugate(rs, nu)
    chi = _weyl_character(rs, sub(dom, rs.rho))
    return -chi if length % 2 else chi


# --- fixed-point oracle -------------------------------------------------------

def _act_on_weight(rs: RootSystem, w: WeylElement, lam: Weight) -> Weight:
    for i in reversed(w.reduced_word):
        lam = reflect_weight(rs, i - 1, lam)
    return lam


def _divide_one_minus(poly: dict, g: Weight) -> dict:
    """Exact quotient poly / (1 - x^g) for Laurent polynomials in weight space."""
    j = next(k for k, c in enumerate(g) if c)
    strings: dict[tuple, dict[int, int]] = {}
    for m, c in poly.items():
        t = m[j] // g[j]
        base = tuple(x - t * y for x, y in zip(m, g))
        strings.setdefault(base, {})[t] = c
    out = {}
    for base, line in strings.items():
        lo, hi = min(line), max(line)
        running = 0
        for t in range(lo, hi + 1):
            running += line.get(t, 0)
            if running:
                out[tuple(x + t * y for x, y in zip(base, g))] = running
        if running:
            raise ArithmeticError("division by 1 - x^g is not exact")
    return out


def localization_euler(rs: RootSystem, mu) -> Character:
    """sum_{w in W} e^{w mu} / prod_{alpha > 0} (1 - e^{-w alpha}).

    Each denominator equals the common product prod (1 - e^{-alpha}) up to a
    signed monomial, so the numerator is accumulated over that common
    product and divided out one factor at a time.
    """
    mu = tuple(mu)
    pos = list(rs.positive_roots)
    numerator: dict[Weight, int] = {}
    for w in all_elements(rs):
        exponent = _act_on_weight(rs, w, mu)
        sign = 1
        for alpha in pos:
            img = w(alpha)
            if any(c < 0 for c in img):
                # 1 - e^{g} = -e^{g} (1 - e^{-g}) for g = -w(alpha) > 0
                sign = -sign
                exponent = add(exponent, rs.root_to_weight(img))
        numerator[exponent] = numerator.get(exponent, 0) + sign
    poly = {k: v for k, v in numerator.items() if v}
    for alpha in pos:
        g = tuple(-c for c in rs.root_to_weight(alpha))
        poly = _divide_one_minus(poly, g)
    return Character(poly)


# --- sections on Lusztig varieties ---------------------------------------------

def koszul_weights(rs: RootSystem, roots) -> dict[Weight, int]:
    """Expansion of prod_{alpha in roots} (1 - e^{-alpha}) as {-<I>: (-1)^|I|}."""
    poly = {(0,) * rs.rank: 1}
    for alpha in roots:
        a = rs.root_to_weight(alpha)
        nxt = dict(poly)
        for k, v in poly.items():
            s = sub(k, a)
            nxt[s] = nxt.get(s, 0) - v
        poly = {k: v for k, v in nxt.items() if v}
    return poly


def v_w_character(rs: RootSystem, w: WeylElement, lam) -> Character:
    """H^0(Y_w(s), L_lam) for smooth w and dominant lam, as a T-character."""
    lam = tuple(lam)
    if len(lam) != rs.rank or not is_dominant(lam):
        raise NotDominant(f"{lam} is not a dominant weight of {rs.name}")
    if not is_smooth(rs, w):
        raise ValueError(f"{w} is not smooth")
    missing = m_w(rs, w).complement().roots
    total = Character()
    for shift, coeff in koszul_weights(rs, missing).items():
        total = total + bott_euler(rs, add(lam, shift)).scale(coeff)
    return total


def check_weight_symmetry(rs: RootSystem, c: Character) -> bool:
    for nu, m in c.mult.items():
        for i in range(rs.rank):
            if c[reflect_weight(rs, i, nu)] != m:
                return False
    return True
