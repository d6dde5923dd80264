"""Brute-force reference implementations used to derive expected values.

Deliberately naive and independent of the package: plain tuples and sets,
exhaustive enumeration, no shared helpers.
"""

from itertools import combinations, product


def subsets(ground):
    ground = sorted(ground)
    for k in range(len(ground) + 1):
        for c in combinations(ground, k):
            yield frozenset(c)


def independent(bases, s):
    return any(s <= b for b in bases)


def rank(bases, s):
    return max(len(s & b) for b in bases)


def circuits(bases, ground):
    dep = [s for s in subsets(ground) if not independent(bases, s)]
    return {s for s in dep if not any(t < s for t in dep)}


def cocircuits(bases, ground):
    ground = frozenset(ground)
    return circuits([ground - b for b in bases], ground)


def min_primes(supports, n):
    supports = [frozenset(s) for s in supports]
    hits = [s for s in subsets(range(1, n + 1)) if all(s & g for g in supports)]
    return {s for s in hits if not any(t < s for t in hits)}


def minimal(vectors):
    vs = set(vectors)
    return {v for v in vs if not any(w != v and all(a <= b for a, b in zip(w, v)) for w in vs)}


def colon(gens, n_vec):
    """(gens) : N over exponent vectors, from the definition m*N in I."""
    top = max(max(g) for g in gens)
    found = []
    for m in product(range(top + 1), repeat=len(n_vec)):
        mn = tuple(a + b for a, b in zip(m, n_vec))
        if any(all(x <= y for x, y in zip(g, mn)) for g in gens):
            found.append(m)
    return minimal(found)


def symbolic_power(bases, n, ell):
    """Minimal weightings in [0, ell]^n reaching ell on every basis."""
    found = []
    for w in product(range(ell + 1), repeat=n):
        if all(sum(w[i - 1] for i in b) >= ell for b in bases):
            found.append(w)
    return minimal(found)


def sf_by_primes(supports, n, a):
    primes = min_primes(supports, n)
    ok = [s for s in subsets(range(1, n + 1)) if all(len(s & p) >= a for p in primes)]
    return {s for s in ok if not any(t < s for t in ok)}


def pairwise_lcms(supports):
    sets = [frozenset(s) for s in supports]
    lcms = {a | b for a, b in combinations(sets, 2)}
    return {s for s in lcms if not any(t < s for t in lcms)}
