"""The poset of weighted partitions and its pointed cousin.

A weighted partition of [n] is a set partition in which each block B
carries an integer weight in [0, |B|-1].  Blocks are stored as
``(mask, weight)`` pairs with the mask a bitmask over [n], and a
partition is the tuple of its blocks sorted by minimum element.  The
pointed variant replaces the weight by a distinguished member of the
block.

Covers merge exactly two blocks: the union gets weight w1+w2+u with
u in {0, 1} (weighted) or a point chosen from the two old points
(pointed).  The augmented poset adjoins a maximum element TOP above
the one-block partitions.
"""

from __future__ import annotations

import itertools
import json
from functools import lru_cache
from math import comb

from .errors import ResourceCapError

POSET_CAP_N = 9
MOBIUS_CAP_N = 6

WEIGHTED = "weighted"
POINTED = "pointed"
AUGMENTED = "augmented"


class _Top:
    """The adjoined maximum of the augmented poset."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Top"


TOP = _Top()


def mask_min(mask):
    return (mask & -mask).bit_length()


def mask_members(mask):
    out = []
    a = 1
    while mask:
        if mask & 1:
            out.append(a)
        mask >>= 1
        a += 1
    return out


def members_mask(members):
    m = 0
    for a in members:
        m |= 1 << (a - 1)
    return m


def sort_blocks(blocks):
    return tuple(sorted(blocks, key=lambda b: b[0] & -b[0]))


def ground_size(p):
    union = 0
    for m, _v in p:
        union |= m
    return union.bit_length()


def bottom(n):
    return tuple((1 << (a - 1), 0) for a in range(1, n + 1))


def pointed_bottom(n):
    return tuple((1 << (a - 1), a) for a in range(1, n + 1))


def partition_str(p):
    if p is TOP:
        return "Top"
    parts = []
    for m, v in p:
        parts.append("".join(str(a) for a in mask_members(m)) + f"^{v}")
    return "{" + "|".join(parts) + "}"


def validate(p, variant=WEIGHTED):
    """Raise ValueError unless p is a well-formed partition of some [n]."""
    union = 0
    for m, v in p:
        if m <= 0:
            raise ValueError("empty block")
        if union & m:
            raise ValueError("overlapping blocks")
        union |= m
        if variant == WEIGHTED:
            if not 0 <= v <= bin(m).count("1") - 1:
                raise ValueError(f"weight {v} out of range for block {m:b}")
        else:
            if not (m >> (v - 1)) & 1:
                raise ValueError(f"point {v} not a member of block {m:b}")
    if union != (1 << union.bit_length()) - 1:
        raise ValueError("blocks do not cover an initial segment [n]")
    if p != sort_blocks(p):
        raise ValueError("blocks not sorted by minimum element")


def covers(a, b, variant=WEIGHTED):
    """True iff b covers a (merge of exactly two blocks of a)."""
    if a is TOP:
        return False
    if b is TOP:
        return len(a) == 1
    if ground_size(a) != ground_size(b):
        raise ValueError("partitions over different ground sets")
    new = set(b) - set(a)
    gone = set(a) - set(b)
    if len(new) != 1 or len(gone) != 2:
        return False
    ((m, v),) = new
    (m1, v1), (m2, v2) = gone
    if m1 | m2 != m or m1 & m2:
        return False
    if variant == WEIGHTED:
        return v - (v1 + v2) in (0, 1)
    return v in (v1, v2)


def upper_covers(p, variant=WEIGHTED):
    out = []
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            (m1, v1), (m2, v2) = p[i], p[j]
            rest = p[:i] + p[i + 1:j] + p[j + 1:]
            m = m1 | m2
            choices = (v1 + v2, v1 + v2 + 1) if variant == WEIGHTED else (v1, v2)
            for v in choices:
                out.append(sort_blocks(rest + ((m, v),)))
    return out


def leq(a, b, variant=WEIGHTED):
    """Order relation: b coarsens a, blockwise weight window / point origin."""
    if b is TOP:
        return True
    if a is TOP:
        return False
    if ground_size(a) != ground_size(b):
        raise ValueError("partitions over different ground sets")
    for m, v in b:
        total, count, points = 0, 0, ()
        for ma, va in a:
            if ma & m == ma:
                total += va
                count += 1
                points += (va,)
            elif ma & m:
                return False
        if variant == WEIGHTED:
            if not total <= v <= total + count - 1:
                return False
        else:
            if v not in points:
                return False
    return True


def enumerate_partitions(n, variant=WEIGHTED):
    """All weighted (or pointed) partitions of [n], in deterministic order."""
    if n > POSET_CAP_N:
        raise ResourceCapError(f"partitions of [{n}]", POSET_CAP_N)
    out = []
    for part in _set_partitions_masks(n):
        if variant == WEIGHTED:
            choices = [range(bin(m).count("1")) for m in part]
        else:
            choices = [mask_members(m) for m in part]
        for vals in itertools.product(*choices):
            out.append(sort_blocks(tuple(zip(part, vals))))
    out.sort(key=lambda p: (-len(p), p))  # rank order, bottom first
    return out


def _set_partitions_masks(n):
    """Set partitions of [n] as tuples of masks sorted by minimum."""

    def rec(remaining):
        if not remaining:
            yield ()
            return
        first = remaining & -remaining
        rest = remaining ^ first
        others = mask_members(rest)
        for k in range(len(others) + 1):
            for extra in itertools.combinations(others, k):
                block = first | members_mask(extra)
                for tail in rec(remaining ^ block):
                    yield (block,) + tail

    return rec((1 << n) - 1)


class Poset:
    """A finite graded poset given by elements, covers and a comparator."""

    def __init__(self, n, variant, augmented):
        self.n = n
        self.variant = variant
        self.augmented = augmented
        base = enumerate_partitions(n, variant)
        self.elements = list(base) + ([TOP] if augmented else [])
        self.index = {e: k for k, e in enumerate(self.elements)}
        self.ranks = [n - len(e) if e is not TOP else n for e in self.elements]
        self.covers = [[] for _ in self.elements]
        self.lower_covers = [[] for _ in self.elements]
        for k, e in enumerate(self.elements):
            if e is TOP:
                continue
            ups = sorted(self.index[q] for q in upper_covers(e, variant))
            if augmented and len(e) == 1:
                ups.append(self.index[TOP])
            self.covers[k] = ups
            for j in ups:
                self.lower_covers[j].append(k)
        self._mu0 = None
        self._mu_memo = {}

    @property
    def bottom_index(self):
        return 0

    def rank_sizes(self):
        sizes = [0] * (max(self.ranks) + 1)
        for r in self.ranks:
            sizes[r] += 1
        return sizes

    def leq(self, i, j):
        return leq(self.elements[i], self.elements[j], self.variant)

    def maximal_indices(self):
        """Indices of the one-block partitions, in weight/point order."""
        return [k for k, e in enumerate(self.elements)
                if e is not TOP and len(e) == 1]

    def mu_from_bottom(self):
        """mu(0-hat, x) for every element, one bottom-up sweep."""
        if self._mu0 is None:
            mu = [0] * len(self.elements)
            order = sorted(range(len(self.elements)), key=lambda k: self.ranks[k])
            for k in order:
                if self.ranks[k] == 0:
                    mu[k] = 1
                    continue
                mu[k] = -sum(mu[j] for j in order
                             if self.ranks[j] < self.ranks[k] and self.leq(j, k))
            self._mu0 = mu
        return self._mu0

    def mobius(self, i, j):
        if not self.leq(i, j):
            raise ValueError("mobius requires x <= y")
        if i == 0:
            return self.mu_from_bottom()[j]
        key = (i, j)
        if key not in self._mu_memo:
            if i == j:
                self._mu_memo[key] = 1
            else:
                interval = [z for z in range(len(self.elements))
                            if self.leq(i, z) and self.leq(z, j) and z != j]
                interval.sort(key=lambda k: self.ranks[k])
                local = {}
                for z in interval:
                    local[z] = 1 if z == i else -sum(
                        local[w] for w in interval
                        if self.ranks[w] < self.ranks[z] and self.leq(w, z))
                self._mu_memo[key] = -sum(local.values())
        return self._mu_memo[key]


@lru_cache(maxsize=None)
def build_poset(n, variant=WEIGHTED):
    """Construct the full poset.  variant: weighted | pointed | augmented."""
    if n < 1:
        raise ValueError("n must be positive")
    if variant == AUGMENTED:
        return Poset(n, WEIGHTED, augmented=True)
    if variant in (WEIGHTED, POINTED):
        return Poset(n, variant, augmented=False)
    raise ValueError(f"unknown variant {variant!r}")


# ---------------------------------------------------------------------------
# invariants
# ---------------------------------------------------------------------------

def poly_str(coeffs, var="x"):
    terms = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        base = str(c) if k == 0 else (f"{c}*{var}" if k == 1 else f"{c}*{var}^{k}")
        terms.append(base)
    return " + ".join(terms) if terms else "0"


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def rank_generating_function(n):
    """Coefficients of F(x) = sum_k #(rank-k elements) x^k, cross-checked
    against the closed form C(n,k) (n-k)^k."""
    expected = [comb(n, k) * (n - k) ** k for k in range(n)]
    sizes = build_poset(n, WEIGHTED).rank_sizes()
    if sizes != expected:
        raise AssertionError(f"rank sizes {sizes} != {expected} at n={n}")
    return sizes


def mu_polynomial(n):
    """Coefficients (in t) of sum_i mu(0-hat, [n]^i) t^i, computed on the
    poset and checked against the product formula
    (-1)^(n-1) prod_{j=1}^{n-1} ((n-j) + j t)."""
    if n > MOBIUS_CAP_N:
        raise ResourceCapError(f"all-pairs Mobius at n={n}", MOBIUS_CAP_N)
    P = build_poset(n, WEIGHTED)
    mu0 = P.mu_from_bottom()
    tops = P.maximal_indices()
    got = [mu0[k] for k in sorted(tops, key=lambda k: P.elements[k][0][1])]
    poly = [1]
    for j in range(1, n):
        poly = poly_mul(poly, [n - j, j])
    expected = [c if n % 2 else -c for c in poly]
    if got != expected:
        raise AssertionError(f"mu polynomial {got} != {expected} at n={n}")
    return got


def mu_augmented(n):
    """mu(0-hat, 1-hat) of the augmented poset, checked against
    (-1)^n (n-1)^(n-1)."""
    if n > MOBIUS_CAP_N:
        raise ResourceCapError(f"all-pairs Mobius at n={n}", MOBIUS_CAP_N)
    P = build_poset(n, AUGMENTED)
    got = P.mu_from_bottom()[P.index[TOP]]
    expected = (-1) ** n * (n - 1) ** (n - 1)
    if got != expected:
        raise AssertionError(f"mu(0,1) = {got} != {expected} at n={n}")
    return got


def characteristic_polynomial(P):
    """chi(x) = sum_alpha mu(0-hat, alpha) x^(n-1-rank); must be (x-n)^(n-1)."""
    if P.augmented:
        raise ValueError("characteristic polynomial is defined on the "
                         "unaugmented poset")
    n = P.n
    if n > MOBIUS_CAP_N:
        raise ResourceCapError(f"all-pairs Mobius at n={n}", MOBIUS_CAP_N)
    mu0 = P.mu_from_bottom()
    coeffs = [0] * n
    for k, m in enumerate(mu0):
        coeffs[n - 1 - P.ranks[k]] += m
    expected = [1]
    for _ in range(n - 1):
        expected = poly_mul(expected, [-n, 1])
    if coeffs != expected:
        raise AssertionError(f"chi {coeffs} != {expected} for {P.variant} n={n}")
    return coeffs


def whitney_matrices(n):
    """The pair A = [(-1)^(i-j) C(i-1,j-1) i^(i-j)], B = [C(i,j) j^(i-j)]
    (1 <= i,j <= n); they must be mutually inverse."""
    A = [[(-1) ** (i - j) * comb(i - 1, j - 1) * i ** (i - j)
          for j in range(1, n + 1)] for i in range(1, n + 1)]
    B = [[comb(i, j) * j ** (i - j) for j in range(1, n + 1)]
         for i in range(1, n + 1)]
    prod = [[sum(A[i][k] * B[k][j] for k in range(n)) for j in range(n)]
            for i in range(n)]
    ident = [[int(i == j) for j in range(n)] for i in range(n)]
    if prod != ident:
        raise AssertionError(f"Whitney matrices are not inverse at n={n}")
    return A, B


def whitney_numbers(n):
    """(first kind, second kind), read off chi and the rank sizes; also
    verifies the inverse-matrix identity."""
    if n > MOBIUS_CAP_N:
        raise ResourceCapError(f"all-pairs Mobius at n={n}", MOBIUS_CAP_N)
    chi = characteristic_polynomial(build_poset(n, WEIGHTED))
    first = [chi[n - 1 - k] for k in range(n)]
    second = rank_generating_function(n)
    exp_first = [(-1) ** k * comb(n - 1, k) * n ** k for k in range(n)]
    if first != exp_first:
        raise AssertionError(f"first Whitney numbers {first} != {exp_first}")
    whitney_matrices(n)
    return first, second


def forest_count(n, k):
    from . import trees
    return trees.forest_count(n, k)


def upper_interval_isomorphic(P, alpha):
    """Check explicitly that [alpha, 1-hat] of the augmented poset maps
    order-isomorphically onto the augmented poset on [|alpha|] via block
    relabeling and weight subtraction."""
    if not P.augmented:
        raise ValueError("needs the augmented poset")
    a = P.index[alpha]
    k = len(alpha)
    Q = build_poset(k, AUGMENTED)

    def project(beta):
        if beta is TOP:
            return TOP
        blocks = []
        for m, v in beta:
            inside = [(j, va) for j, (ma, va) in enumerate(alpha) if ma & m]
            newmask = members_mask([j + 1 for j, _va in inside])
            blocks.append((newmask, v - sum(va for _j, va in inside)))
        return sort_blocks(tuple(blocks))

    interval = [j for j in range(len(P.elements)) if P.leq(a, j)]
    images = [project(P.elements[j]) for j in interval]
    if sorted(map(repr, images)) != sorted(map(repr, Q.elements)):
        return False
    pos = {j: Q.index[img] for j, img in zip(interval, images)}
    for x in interval:
        for y in interval:
            if P.leq(x, y) != Q.leq(pos[x], pos[y]):
                return False
    return True


# ---------------------------------------------------------------------------
# exports
# ---------------------------------------------------------------------------

def to_dot(P):
    """Rank-layered DOT rendering of the Hasse diagram."""
    lines = ["digraph poset {", "  rankdir=BT;"]
    by_rank = {}
    for k, e in enumerate(P.elements):
        by_rank.setdefault(P.ranks[k], []).append(k)
        lines.append(f'  n{k} [label="{partition_str(e)}"];')
    for r in sorted(by_rank):
        ids = " ".join(f"n{k};" for k in by_rank[r])
        lines.append(f"  {{ rank=same; {ids} }}")
    for k, ups in enumerate(P.covers):
        for j in ups:
            lines.append(f"  n{k} -> n{j};")
    lines.append("}")
    return "\n".join(lines)


def json_report(n, variant=WEIGHTED):
    """The summary report for one poset, as a JSON-serializable dict."""
    P = build_poset(n, variant)
    mu0 = P.mu_from_bottom()
    chi = None if P.augmented else characteristic_polynomial(P)
    if variant == WEIGHTED:
        mu_poly = mu_polynomial(n)
    else:
        mu_poly = [mu0[k] for k in P.maximal_indices()]
    first, second = whitney_numbers(n)
    return {
        "n": n,
        "variant": variant,
        "rank_sizes": P.rank_sizes(),
        "mu_poly": mu_poly,
        "char_poly": chi,
        "whitney_first": first,
        "whitney_second": second,
    }


def report_json_str(n, variant=WEIGHTED):
    return json.dumps(json_report(n, variant), indent=2, sort_keys=True)
