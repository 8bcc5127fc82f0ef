"""Exact (co)homology of order complexes of open subposets.

Chains are tuples of partitions, strictly increasing in the poset order;
the empty chain generates the degree -1 part of the reduced complex.  A
ChainVector is a sparse dict mapping chains to integers.  Everything is
computed over the integers, with Smith normal form certificates for the
top boundary maps.
"""

from __future__ import annotations

import itertools
import json
from functools import lru_cache

from . import chains as ch
from . import linalg
from . import partitions as pt
from . import trees as tr

CHAIN_COUNT_CAP = 2_000_000


class OpenPoset:
    """A finite open poset with its order complex.

    elements must be hashable and pairwise comparable through leq; chains
    of the order complex are cached per dimension.
    """

    def __init__(self, name, elements, leq):
        self.name = name
        self.elements = sorted(elements)
        self.index = {e: k for k, e in enumerate(self.elements)}
        n = len(self.elements)
        self.above = [[] for _ in range(n)]
        self.below_set = [set() for _ in range(n)]
        for i in range(n):
            for j in range(n):
                if i != j and leq(self.elements[i], self.elements[j]):
                    self.above[i].append(j)
                    self.below_set[j].add(i)
        self.above_set = [set(a) for a in self.above]
        self._chains = None
        self._kernel = {}
        self._coboundary_columns = {}

    def chains_by_dim(self):
        """dict r -> list of r-chains (tuples of elements); r = -1 is the
        empty chain."""
        if self._chains is None:
            by_dim = {-1: [()]}
            frontier = [(i,) for i in range(len(self.elements))]
            r = 0
            while frontier:
                by_dim[r] = [tuple(self.elements[i] for i in c) for c in frontier]
                if sum(len(v) for v in by_dim.values()) > CHAIN_COUNT_CAP:
                    raise pt.ResourceCapError(
                        f"chains of {self.name}", CHAIN_COUNT_CAP)
                frontier = [c + (j,) for c in frontier for j in self.above[c[-1]]]
                r += 1
            self._chains = by_dim
        return self._chains

    @property
    def top_dim(self):
        return max(self.chains_by_dim())

    def boundary_vectors(self, r):
        """List of (chain, boundary ChainVector) for all r-chains."""
        return [(c, boundary_of_chain(c)) for c in self.chains_by_dim().get(r, [])]

    def cycle_basis(self, r=None):
        """Integer basis of ker(boundary) in dimension r (default: top)."""
        if r is None:
            r = self.top_dim
        if r not in self._kernel:
            chains_r = self.chains_by_dim().get(r, [])
            combos = linalg.kernel_basis([boundary_of_chain(c) for c in chains_r])
            self._kernel[r] = [
                {chains_r[j]: x for j, x in combo.items()} for combo in combos]
        return self._kernel[r]


def boundary_of_chain(c):
    if not c:
        return {}
    if len(c) == 1:
        return {(): 1}
    out = {}
    for i in range(len(c)):
        out[c[:i] + c[i + 1:]] = (-1) ** i
    return out


def boundary(host, v):
    """The boundary of a homogeneous ChainVector."""
    out = {}
    for c, coeff in v.items():
        for c2, s in boundary_of_chain(c).items():
            val = out.get(c2, 0) + coeff * s
            if val:
                out[c2] = val
            else:
                out.pop(c2, None)
    return out


def coboundary(host, v):
    """The coboundary: insert every admissible element into every gap,
    with the gaps at the ends open toward the (virtual) bottom and top."""
    out = {}
    for c, coeff in v.items():
        for c2, s in _coboundary_of_chain(host, c):
            val = out.get(c2, 0) + coeff * s
            if val:
                out[c2] = val
            else:
                out.pop(c2, None)
    return out


def _coboundary_of_chain(host, c):
    n = len(host.elements)
    idx = [host.index[e] for e in c]
    for i in range(len(c) + 1):
        lower = host.above_set[idx[i - 1]] if i > 0 else set(range(n))
        upper = host.below_set[idx[i]] if i < len(c) else set(range(n))
        for j in lower & upper:
            mid = host.elements[j]
            yield c[:i] + (mid,) + c[i:], (-1) ** i


def pairing(u, v):
    """<u, v> with the chains orthonormal."""
    return linalg.vec_dot(u, v)


# ---------------------------------------------------------------------------
# hosts
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def open_interval(n, i):
    """(0-hat, [n]^i) as an OpenPoset."""
    P = pt.build_poset(n, pt.WEIGHTED)
    top = pt.sort_blocks((((1 << n) - 1, i),))
    bot = pt.bottom(n)
    elems = [e for e in P.elements
             if e not in (top, bot) and pt.leq(e, top)]
    return OpenPoset(f"(0,[{n}]^{i})", elems, pt.leq)


@lru_cache(maxsize=None)
def proper_part(n):
    """Pi_n^w minus its bottom, as an OpenPoset."""
    P = pt.build_poset(n, pt.WEIGHTED)
    elems = [e for e in P.elements if e != pt.bottom(n)]
    return OpenPoset(f"Pi_{n}^w - 0", elems, pt.leq)


@lru_cache(maxsize=None)
def open_boolean_of_tree(T):
    """The proper part of Pi_T (boolean lattice on the edges of T)."""
    elems, _mapping = ch.pi_subposet(T)
    n = len(T.labels)
    inner = [e for e in elems if 0 < n - len(e) < n - 1]
    return OpenPoset(f"Pi_T proper ({T!r})", inner, pt.leq)


# ---------------------------------------------------------------------------
# invariants
# ---------------------------------------------------------------------------

def betti_numbers(host):
    """Reduced Betti numbers {r: betti_r} plus SNF certificates for the
    top two boundary maps."""
    by_dim = host.chains_by_dim()
    top = max(by_dim)
    ranks = {}
    for r in sorted(by_dim):
        ranks[r] = linalg.rank_of([boundary_of_chain(c) for c in by_dim[r]])
    betti = {}
    for r in sorted(by_dim):
        betti[r] = len(by_dim[r]) - ranks[r] - ranks.get(r + 1, 0)
    torsion = {}
    for r in (top, top - 1):
        if r in by_dim and r >= 0:
            factors = linalg.snf_invariant_factors(
                [boundary_of_chain(c) for c in by_dim[r]])
            torsion[r] = [f for f in factors if f != 1]
    return {
        "betti": betti,
        "top_dim": top,
        "torsion_nontrivial": torsion,
        "torsion_free_top": all(not v for v in torsion.values()),
    }


def coboundary_member(host, v, want_witness=False):
    """Is v (top-dimensional) a coboundary?  Over the rationals this is
    orthogonality to every top-dimensional cycle; a witness w with
    coboundary(w) = v is solved for on request."""
    if not v:
        return (True, {}) if want_witness else True
    member = all(pairing(v, z) == 0 for z in host.cycle_basis())
    if not want_witness:
        return member
    if not member:
        return False, None
    r = len(next(iter(v))) - 1
    cod = host.chains_by_dim().get(r - 1, [])
    cols = [coboundary(host, {c: 1}) for c in cod]
    sol = linalg.solve_rational(cols, v)
    if sol is None:
        raise AssertionError("rational witness solve failed for a member")
    return True, {cod[j]: x for j, x in sol.items()}


def chain_vector_of_tree(t, tau=None, omit_top=True, omit_bottom=True):
    """c-bar (or c-breve with omit_top False) of a tree as a ChainVector."""
    parts = ch.chain_partitions_of_tree(t, tau)
    lo = 1 if omit_bottom else 0
    hi = len(parts) - 1 if omit_top else len(parts)
    return {tuple(parts[lo:hi]): 1}


def fundamental_cycle(T):
    """Generator of the top homology of the open part of Pi_T, normalized
    so the chain of psi(T) has coefficient +1."""
    n = len(T.labels)
    key = tuple(ch.chain_partitions_of_tree(tr.psi(T))[1:-1])
    if n == 2:
        return {(): 1}
    host = open_boolean_of_tree(T)
    basis = host.cycle_basis()
    if len(basis) != 1:
        raise AssertionError(f"top cycle space of Pi_T has rank {len(basis)}")
    rho = basis[0]
    coeff = rho.get(key)
    if coeff is None:
        raise AssertionError("c(psi(T)) is missing from the fundamental cycle")
    if abs(coeff) != 1:
        raise AssertionError("fundamental cycle is not unimodular")
    if coeff == -1:
        rho = {c: -x for c, x in rho.items()}
    if any(abs(x) != 1 for x in rho.values()):
        raise AssertionError("fundamental cycle has a non-unit coefficient")
    return rho


def verify_dual_bases(cycles, cochains):
    """Build the pairing matrix and report invertibility over Z and Q."""
    if len(cycles) != len(cochains):
        raise ValueError("lists must have equal length")
    M = [[pairing(rho, c) for c in cochains] for rho in cycles]
    det = linalg.bareiss_det(M)
    return {
        "det": det,
        "invertible_over_Z": det in (1, -1),
        "invertible_over_Q": det != 0,
        "matrix": M,
    }


def rank_in_top_quotient(host, vectors):
    """Rank of the images of top-dimensional cochain vectors in the
    quotient C^top / B^top (pairing against a cycle basis)."""
    basis = host.cycle_basis()
    rows = []
    for v in vectors:
        row = {j: pairing(v, z) for j, z in enumerate(basis)}
        rows.append({j: x for j, x in row.items() if x})
    return linalg.rank_of(rows), len(basis)


def whitney_cohomology_ranks(n):
    """Ranks of the Whitney cohomology, computed as sums of |mu| over
    ranks and checked against C(n-1,r) n^r with total (n+1)^(n-1)."""
    from math import comb
    P = pt.build_poset(n, pt.WEIGHTED)
    mu0 = P.mu_from_bottom()
    got = [0] * n
    for k, m in enumerate(mu0):
        got[P.ranks[k]] += abs(m)
    expected = [comb(n - 1, r) * n ** r for r in range(n)]
    if got != expected:
        raise AssertionError(f"Whitney cohomology ranks {got} != {expected}")
    if sum(got) != (n + 1) ** (n - 1):
        raise AssertionError("Whitney cohomology total is off")
    return got


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------

def homology_report(host, runtime_ms=None):
    data = betti_numbers(host)
    return {
        "poset_id": host.name,
        "dims": {str(r): len(cs) for r, cs in host.chains_by_dim().items()},
        "betti": {str(r): b for r, b in data["betti"].items()},
        "torsion_top": {str(r): v for r, v in data["torsion_nontrivial"].items()},
        "torsion_free_top": data["torsion_free_top"],
        "runtime_ms": runtime_ms,
    }


def sparse_triplet_dump(host, r):
    """Boundary map in dimension r as 'row col value' lines; rows index
    (r-1)-chains, columns index r-chains, both in list order."""
    by_dim = host.chains_by_dim()
    rows = {c: k for k, c in enumerate(by_dim.get(r - 1, []))}
    lines = [f"# boundary dim {r} of {host.name}"]
    for col, c in enumerate(by_dim.get(r, [])):
        for c2, s in boundary_of_chain(c).items():
            lines.append(f"{rows[c2]} {col} {s}")
    return "\n".join(lines)


def report_json_str(host):
    import time
    t0 = time.time()
    rep = homology_report(host)
    rep["runtime_ms"] = int((time.time() - t0) * 1000)
    return json.dumps(rep, indent=2, sort_keys=True)
