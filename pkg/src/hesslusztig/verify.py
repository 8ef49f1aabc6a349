"""Reproducible verification suites, shared by the CLI and the test-suite.

Each suite returns a :class:`Report`; a report passes when every one of its
checks does.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product

from .charlib import (
    bott_euler,
    check_weight_symmetry,
    localization_euler,
    v_w_character,
    weyl_dimension,
)
from .gkm import (
    cell_dimensions,
    coweight_pairing,
    gkm_flag,
    gkm_hessenberg,
    gkm_lusztig,
    graphs_equal,
    hessenberg_poincare_by_permutations,
    poincare_polynomial,
)
from .hess import (
    RootIdeal,
    codominant_from_hessenberg_function,
    codominant_word,
    element_to_permutation,
    hessenberg_function_from_codominant,
    gkm_admissible,
    hessenberg_functions,
    ideal_from_hessenberg_function,
    is_codominant,
    is_smooth,
    is_valid_ideal,
    m_w,
    permutation_to_element,
    rationally_smooth,
    valid_ideals,
)
from .rootsys import RootSystem, root_system
from .weyl import (
    all_elements,
    bruhat_leq,
    degree_product,
    enumerate_by_length,
    format_word,
    from_word,
    identity,
    length_generating_function,
    longest_element,
    parse_word,
    reflection,
)

FLAG_SYSTEMS = (("A", 1), ("A", 2), ("A", 3), ("B", 2), ("C", 3), ("G", 2))

C3_LENGTH5 = "23121 12321 32321 13231 12312 32312 13232 21323".split()
C3_LENGTH6 = "123121 132321 213231 132312 232312 121323 321323".split()
C3_M1 = ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (0, 1, 1))
C3_M2 = C3_M1 + ((1, 1, 1),)


@dataclass
class Report:
    title: str
    checks: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def check(self, label: str, ok: bool, detail: str = "") -> bool:
        self.checks.append((label, bool(ok), detail))
        return bool(ok)

    def note(self, text: str) -> None:
        self.notes.append(text)

    @property
    def ok(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def lines(self) -> list[str]:
        out = [f"== {self.title}"]
        for label, ok, detail in self.checks:
            line = f"{label}: {'PASS' if ok else 'FAIL'}"
            if detail and not ok:
                line += f"  ({detail})"
            out.append(line)
        out.extend(self.notes)
        return out

    def __str__(self):
        return "\n".join(self.lines())


def parabolic_order(rs: RootSystem, letters) -> int:
    """Order of the subgroup generated by the given simple reflections."""
    allowed = set(letters)
    return sum(1 for w in all_elements(rs) if set(w.reduced_word) <= allowed)


def random_generic_coweight(rs: RootSystem, rng: random.Random, bound: int = 50):
    """A random coweight, of any sign pattern, nonzero on every root."""
    while True:
        xi = tuple(rng.randint(-bound, bound) for _ in range(rs.rank))
        if all(coweight_pairing(a, xi) != 0 for a in rs.positive_roots):
            return xi


# --- C3 -----------------------------------------------------------------------

def verify_c3(cache_dir=None) -> Report:
    rs = root_system("C", 3)
    rep = Report("C3: linear Hessenberg spaces that are not H_w")
    W = all_elements(rs, cache_dir)

    def word(s):
        return from_word(rs, parse_word(s))

    got5 = set(enumerate_by_length(rs, 5, cache_dir))
    want5 = {word(s) for s in C3_LENGTH5}
    rep.check(f"{len(want5)} elements of length 5", got5 == want5 and len(C3_LENGTH5) == 8,
              f"computed {sorted(format_word(w.reduced_word) for w in got5)}")
    got6 = set(enumerate_by_length(rs, 6, cache_dir))
    want6 = {word(s) for s in C3_LENGTH6}
    rep.check(f"{len(want6)} elements of length 6", got6 == want6 and len(C3_LENGTH6) == 7,
              f"computed {sorted(format_word(w.reduced_word) for w in got6)}")

    M1 = RootIdeal.from_roots(rs, C3_M1)
    M2 = RootIdeal.from_roots(rs, C3_M2)
    rep.check("M₁ is a linear Hessenberg space (B-stable)", is_valid_ideal(rs, M1))
    rep.check("M₂ is a linear Hessenberg space (B-stable)", is_valid_ideal(rs, M2))

    s232 = reflection(rs, (0, 2, 1))
    s13231 = reflection(rs, (1, 1, 1))
    rep.check("s_{2α₂+α₃} = s₂s₃s₂", s232 == word("232"))
    rep.check("s_{α₁+α₂+α₃} = s₁s₃s₂s₃s₁", s13231 == word("13231"))
    rep.check("s_{2α₂+α₃} ≤ [21323]", bruhat_leq(s232, word("21323")))
    rep.check("s_{2α₂+α₃} ≤ [32312]", bruhat_leq(s232, word("32312")))
    rep.check("s_{α₁+α₂+α₃} ≤ [13231]", bruhat_leq(s13231, word("13231")))

    s12 = reflection(rs, (1, 1, 0))
    s23 = reflection(rs, (0, 1, 1))
    both = {w for w in got5 if bruhat_leq(s12, w) and bruhat_leq(s23, w)}
    rep.check("length 5 with s_{α₁+α₂}, s_{α₂+α₃} ≤ w is {[13231],[21323],[32312]}",
              both == {word("13231"), word("21323"), word("32312")})
    rep.check("s₂s₃s₂ ≤ w for every w of length 6", all(bruhat_leq(s232, w) for w in got6))

    smooth = [w for w in W if rationally_smooth(rs, w)]
    hits1 = [w for w in smooth if m_w(rs, w) == M1]
    hits2 = [w for w in smooth if m_w(rs, w) == M2]
    rep.check("no rationally smooth w with M_w = M₁", not hits1,
              ", ".join(format_word(w.reduced_word) for w in hits1))
    rep.check("no rationally smooth w with M_w = M₂", not hits2,
              ", ".join(format_word(w.reduced_word) for w in hits2))
    rep.note(f"{len(smooth)} of {len(W)} elements of W(C3) are rationally smooth")
    return rep


# --- codominant permutations --------------------------------------------------

def verify_codominant(n: int) -> Report:
    if not 2 <= n <= 7:
        raise ValueError("n must lie in 2..7")
    rep = Report(f"codominant permutations, n = {n}")
    count = 0
    failures = []
    for h in hessenberg_functions(n):
        count += 1
        p = codominant_from_hessenberg_function(h)
        w = permutation_to_element(p)
        problems = []
        if not is_codominant(p):
            problems.append("contains 312")
        if w.length != sum(v - i for i, v in enumerate(h, start=1)):
            problems.append("length")
        if w.length != len(codominant_word(h)):
            problems.append("word not reduced")
        if m_w(w.rs, w) != ideal_from_hessenberg_function(h):
            problems.append("M_w != M_h")
        if hessenberg_function_from_codominant(p) != h:
            problems.append("round trip")
        # maximality: w_h(i) <= h(i)
        if any(p[i] > h[i] for i in range(n)):
            problems.append("w_h(i) > h(i)")
        if problems:
            failures.append(f"h={h}: {', '.join(problems)}")
    rep.check(f"{count} functions checked", not failures, "; ".join(failures[:5]))
    return rep


# --- GKM graphs ---------------------------------------------------------------

def _hessenberg_graph_checks(rep, rs, M, label, coweights):
    g = gkm_hessenberg(rs, M)
    order = len(g.vertices)
    deg = set(g.degrees().values())
    rep.check(f"{label}: {len(M)}-regular", deg == {len(M)}, f"degrees {sorted(deg)}")
    P = poincare_polynomial(g)
    rep.check(f"{label}: P(1) = |W|", P.at_one() == order, str(P))
    rep.check(f"{label}: palindromic of degree |M|",
              P.is_palindromic(len(M)) and P.degree() == len(M), str(P))
    # one point per connected component in degree 0; components <-> W / W_J
    components = order // parabolic_order(rs, [i for i, a in enumerate(rs.simple_roots, 1) if a in M])
    rep.check(f"{label}: P(0) = [W : W_J] = {components}", P[0] == components == P[len(M)], str(P))
    others = [xi for xi in coweights if poincare_polynomial(g, xi) != P]
    rep.check(f"{label}: independent of {len(coweights)} generic coweights", not others,
              f"differs at {others[:2]}")
    return P


def verify_gkm(family: str, rank: int, n_coweights: int = 20, seed: int = 0) -> Report:
    rs = root_system(family, rank)
    if family == "A" and rank > 4:
        raise ValueError("type A is checked up to n = 5")
    if family != "A" and rank > 3:
        raise ValueError("non-A types are checked up to rank 3")
    rep = Report(f"GKM graphs of Lusztig and Hessenberg varieties, {rs.name}")
    rng = random.Random(seed)
    coweights = [random_generic_coweight(rs, rng) for _ in range(n_coweights)]
    W = all_elements(rs)

    smooth = [w for w in W if gkm_admissible(rs, w)]
    mismatched = [w for w in smooth if not graphs_equal(gkm_lusztig(rs, w), gkm_hessenberg(rs, m_w(rs, w)))]
    kind = "smooth" if family == "A" else "rationally smooth"
    rep.check(f"{len(smooth)} {kind} w: Bruhat-criterion graph = ideal graph", not mismatched,
              ", ".join(format_word(w.reduced_word) for w in mismatched))
    singular = [w for w in W if not gkm_admissible(rs, w)]
    if family == "A":
        rep.note("skipped (contain 4231 or 3412): "
                 + " ".join("".join(map(str, element_to_permutation(w))) for w in singular))

    unstable = [w for w in smooth if not is_valid_ideal(rs, m_w(rs, w))]
    if family == "A":
        rep.check("every smooth w has B-stable M_w with |M_w| = l(w)",
                  not unstable and all(len(m_w(rs, w)) == w.length for w in smooth))
    elif unstable:
        rep.note("rationally smooth but singular (M_w not B-stable): "
                 + " ".join(format_word(w.reduced_word) for w in unstable))

    # same ideal => same graph
    by_ideal = {}
    for w in smooth:
        by_ideal.setdefault(m_w(rs, w), []).append(w)
    rep.check("smooth w, w' with M_w = M_w' give equal graphs", all(
        graphs_equal(gkm_lusztig(rs, ws[0]), gkm_lusztig(rs, v)) for ws in by_ideal.values() for v in ws[1:]
    ))

    ideals = valid_ideals(rs)
    for M in ideals:
        _hessenberg_graph_checks(rep, rs, M, f"M = {{{_ideal_label(M)}}}", coweights)

    if family == "A":
        n = rank + 1
        for h in hessenberg_functions(n):
            P = poincare_polynomial(gkm_hessenberg(rs, ideal_from_hessenberg_function(h)))
            Q = hessenberg_poincare_by_permutations(h)
            rep.check(f"h = {''.join(map(str, h))}: cells = permutation statistic", P == Q, f"{P} vs {Q}")
        if rank == 2:
            hexagon = poincare_polynomial(gkm_lusztig(rs, permutation_to_element((2, 3, 1))))
            rep.note(f"w = 231 (permutohedral surface): P = {hexagon}")
    return rep


def _ideal_label(M: RootIdeal) -> str:
    return ";".join("".join(str(c) for c in r) for r in M.roots) or "∅"


# --- flag variety -------------------------------------------------------------

def verify_flag(systems=FLAG_SYSTEMS) -> Report:
    rep = Report("flag variety calibration")
    for family, rank in systems:
        rs = root_system(family, rank)
        g = gkm_flag(rs)
        P = poincare_polynomial(g)
        L = length_generating_function(rs)
        rep.check(f"{rs.name}: P(flag) = sum q^l(w)", P == L, f"{P} vs {L}")
        rep.check(f"{rs.name}: sum q^l(w) = prod [d_i]_q", L == degree_product(family, rank), str(L))
        dims = cell_dimensions(g)
        rep.check(f"{rs.name}: cell dimension = length", all(dims[w] == w.length for w in g.vertices))
        npos = rs.n_positive
        rep.check(f"{rs.name}: |E| = |W||Φ⁺|/2", len(g.edges) * 2 == len(g.vertices) * npos)
    return rep


# --- characters ---------------------------------------------------------------

def verify_characters(family: str, rank: int, lambda_bound: int = 2, n_random: int = 100,
                      seed: int = 0) -> Report:
    rs = root_system(family, rank)
    if rank > 3:
        raise ValueError("characters are checked up to rank 3")
    rep = Report(f"characters of H^0(Y_w(s), L_λ), {rs.name}, λ ≤ {lambda_bound}")
    rng = random.Random(seed)
    mus = [tuple(rng.randint(-4, 4) for _ in range(rank)) for _ in range(n_random)]
    bad = [mu for mu in mus if bott_euler(rs, mu) != localization_euler(rs, mu)]
    rep.check(f"Borel-Weil-Bott = fixed-point sum on {n_random} random weights", not bad, f"{bad[:3]}")

    W = all_elements(rs)
    smooth = [w for w in W if is_smooth(rs, w)]
    excluded = [w for w in W if rationally_smooth(rs, w) and w not in smooth]
    if excluded:
        rep.note("rationally smooth, excluded as singular (M_w not B-stable): "
                 + " ".join(format_word(w.reduced_word) for w in excluded))
    e, w0 = identity(rs), longest_element(rs)
    lambdas = list(product(range(lambda_bound + 1), repeat=rank))
    dims = {}
    negative, asym = [], []
    for w in smooth:
        for lam in lambdas:
            c = v_w_character(rs, w, lam)
            dims[w, lam] = c.dim
            if not c.is_effective():
                negative.append((w, lam))
            if not check_weight_symmetry(rs, c):
                asym.append((w, lam))
    rep.check("all multiplicities ≥ 0", not negative, _pairs(negative))
    rep.check("weight multiplicities are W-symmetric", not asym, _pairs(asym))
    rep.check("dim V_{w₀}(λ) = Weyl dimension",
              all(dims[w0, lam] == weyl_dimension(rs, lam) for lam in lambdas))
    rep.check("dim V_e(λ) = |W|", all(dims[e, lam] == len(W) for lam in lambdas))

    regular = [lam for lam in lambdas if all(c > 0 for c in lam)]
    drops = []
    for v in smooth:
        for w in smooth:
            if v != w and bruhat_leq(v, w):
                drops.extend((v, w, lam) for lam in regular if dims[v, lam] > dims[w, lam])
    rep.check("dim monotone along smooth v ≤ w (regular λ)", not drops,
              "; ".join(f"{format_word(v.reduced_word)}≤{format_word(w.reduced_word)} at {lam}"
                        for v, w, lam in drops[:3]))

    rep.note("w        " + " ".join(str(lam) for lam in lambdas))
    for w in smooth:
        rep.note(f"{format_word(w.reduced_word):8} " + " ".join(
            str(dims[w, lam]).rjust(len(str(lam))) for lam in lambdas))
    return rep


def _pairs(items) -> str:
    return "; ".join(f"{format_word(w.reduced_word)} λ={lam}" for w, lam in items[:3])
