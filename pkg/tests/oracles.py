"""Brute-force reference computations that share no code path with the package."""

from itertools import combinations, permutations


def s_n(n):
    return list(permutations(range(1, n + 1)))


def perm_inversions(p):
    return sum(1 for i, j in combinations(range(len(p)), 2) if p[i] > p[j])


def perm_compose(a, b):
    # (a o b)(i) = a(b(i)), one-line, 1-based
    return tuple(a[b[i] - 1] for i in range(len(a)))


def tableau_bruhat_leq(v, w):
    """Type A Bruhat order by the rank-matrix criterion."""
    n = len(v)
    for i in range(1, n + 1):
        for k in range(1, n + 1):
            cv = sum(1 for j in range(i) if v[j] >= k)
            cw = sum(1 for j in range(i) if w[j] >= k)
            if cv > cw:
                return False
    return True


def covering_closure(elements, reflections, length, mul):
    """Bruhat order as the transitive closure of u < u t with l(u t) = l(u) + 1."""
    above = {u: set() for u in elements}
    for u in elements:
        for t in reflections:
            v = mul(u, t)
            if length(v) == length(u) + 1:
                above[u].add(v)
    leq = {}
    for u in sorted(elements, key=length, reverse=True):
        reach = {u}
        for v in above[u]:
            reach |= leq[v]
        leq[u] = reach
    return leq


def subword_leq(v_word_eval, v, w_word):
    """v <= w iff some subword of a reduced word of w evaluates to v."""
    n = len(w_word)
    for k in range(n + 1):
        for idx in combinations(range(n), k):
            if v_word_eval([w_word[i] for i in idx]) == v:
                return True
    return False


def has_pattern(p, pattern):
    k = len(pattern)
    for idx in combinations(range(len(p)), k):
        sub = [p[i] for i in idx]
        if all((sub[a] < sub[b]) == (pattern[a] < pattern[b]) for a in range(k) for b in range(k)):
            return True
    return False


def catalan(n):
    out = 1
    for k in range(n):
        out = out * 2 * (2 * k + 1) // (k + 2)
    return out
