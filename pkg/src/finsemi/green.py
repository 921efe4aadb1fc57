"""Green's relations, idempotents, weak inverses, and class predicates.

Everything here is an exhaustive scan over the Cayley table; at the orders
this package targets (a few hundred elements at most) an O(n^2)-O(n^3) scan
is instant and leaves nothing to trust.  The five relations are
cross-validated at construction: D is computed as R∘L, asserted equal to
L∘R, and asserted equal to J (both are theorems on finite semigroups, so a
mismatch is an engine bug, not an input property).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Partition, base_set, restrict
from .errors import InternalTheoremViolation, NotASubsemigroup, NotIdempotent


@dataclass(frozen=True)
class GreenStructure:
    R: Partition
    L: Partition
    H: Partition
    D: Partition
    J: Partition
    r_ideals: tuple  # per element: frozenset aS^1
    l_ideals: tuple  # per element: frozenset S^1a
    j_ideals: tuple  # per element: frozenset S^1aS^1
    j_order: frozenset  # pairs (ci, cj) of J-class indices with ci <= cj

    def j_leq(self, s, t):
        """J_s <= J_t in the J-class order."""
        return (self.J.index_of[s], self.J.index_of[t]) in self.j_order


def _principal_ideals(S):
    t = S.table
    n = S.order
    rs, ls, js = [], [], []
    for a in range(n):
        row = frozenset(t[a].tolist()) | {a}
        col = frozenset(t[:, a].tolist()) | {a}
        sas = frozenset(np.unique(t[np.ix_(t[:, a].tolist(), range(n))]).tolist())
        rs.append(row)
        ls.append(col)
        js.append(row | col | sas)
    return tuple(rs), tuple(ls), tuple(js)


def _partition_by(keys, n):
    groups = {}
    for a in range(n):
        groups.setdefault(keys[a], []).append(a)
    return Partition(groups.values(), n=n)


def green(S):
    """Compute (and cache) the full Green structure of S."""
    g = S._cache.get("green")
    if g is not None:
        return g
    n = S.order
    rs, ls, js = _principal_ideals(S)
    R = _partition_by(rs, n)
    L = _partition_by(ls, n)
    H = _partition_by(tuple(zip(rs, ls)), n)
    J = _partition_by(js, n)

    # D = R∘L: a D b iff some c has a R c and c L b
    d_keys = []
    for a in range(n):
        reach = frozenset().union(*(L.class_of(c) for c in R.class_of(a)))
        d_keys.append(reach)
    for a in range(n):
        for b in d_keys[a]:
            if d_keys[b] != d_keys[a]:
                raise InternalTheoremViolation("R∘L is not an equivalence")
    for a in range(n):
        other = frozenset().union(*(R.class_of(c) for c in L.class_of(a)))
        if other != d_keys[a]:
            raise InternalTheoremViolation("R∘L != L∘R")
    D = _partition_by(tuple(d_keys), n)
    if D != J:
        raise InternalTheoremViolation("D != J on a finite semigroup")

    order = frozenset(
        (ci, cj)
        for ci in range(len(J)) for cj in range(len(J))
        if js[min(J.classes[ci])] <= js[min(J.classes[cj])])
    g = GreenStructure(R=R, L=L, H=H, D=D, J=J,
                       r_ideals=rs, l_ideals=ls, j_ideals=js, j_order=order)
    S._cache["green"] = g
    return g


def idempotents(S):
    return frozenset(a for a in S.elements if S.mul(a, a) == a)


def regular_elements(S):
    """{s : s x s = s for some x}."""
    t = S.table
    idx = np.arange(S.order)[:, None]
    reg = (t[t, idx] == idx).any(axis=1)
    return frozenset(np.flatnonzero(reg).tolist())


def weak_inverses(S, s):
    """W(s) = {x : x s x = x}."""
    t = S._rows
    return frozenset(x for x in S.elements if t[t[x][s]][x] == x)


def inverses(S, s):
    """V(s) = {x : x s x = x and s x s = s}."""
    t = S._rows
    return frozenset(x for x in S.elements
                     if t[t[x][s]][x] == x and t[t[s][x]][s] == s)


def element_powers(S, s):
    """The distinct powers s, s^2, ... in order, up to the first repeat."""
    seq = [s]
    seen = {s}
    p = s
    while (p := S.mul(p, s)) not in seen:
        seq.append(p)
        seen.add(p)
    return seq


def eventual_idempotent_power(S, s):
    """The unique idempotent among the powers of s."""
    for p in element_powers(S, s):
        if S.mul(p, p) == p:
            return p
    raise InternalTheoremViolation(f"no idempotent power of {s} in a finite semigroup")


def is_periodic(S):
    """Every element has a repeating power (trivially true when finite)."""
    return all(len(element_powers(S, s)) <= S.order for s in S.elements)


def is_eventually_regular(S):
    reg = regular_elements(S)
    return all(any(p in reg for p in element_powers(S, s)) for s in S.elements)


def is_e_dense(S):
    """Every element has a weak inverse."""
    return all(weak_inverses(S, s) for s in S.elements)


def is_group_bound(S):
    """Every element has a power inside a maximal subgroup.

    Always true on finite input; computed honestly (power of s inside
    H_{e(s)} for the eventual idempotent power e(s)) as a consistency check.
    """
    g = green(S)
    for s in S.elements:
        e = eventual_idempotent_power(S, s)
        he = g.H.class_of(e)
        if not any(p in he for p in element_powers(S, s)):
            return False
    return True


def ccr_witness(S):
    """A regular H-class with no idempotent, or None if S is CCR."""
    g = green(S)
    reg = regular_elements(S)
    ids = idempotents(S)
    for h in g.H.classes:
        if h & reg and not h & ids:
            return h
    return None


def is_conditionally_completely_regular(S):
    """Every regular H-class contains an idempotent."""
    return ccr_witness(S) is None


def is_completely_simple(S, subset=None):
    """Single J-class and every H-class a group (checked structurally)."""
    if subset is not None:
        T, _ = restrict(S, subset)
    else:
        T = S
    g = green(T)
    if len(g.J) != 1:
        return False
    ids = idempotents(T)
    return all(h & ids for h in g.H.classes)


def is_clifford(S):
    """Regular with central idempotents."""
    n = S.order
    if len(regular_elements(S)) != n:
        return False
    t = S._rows
    return all(t[e][x] == t[x][e]
               for e in idempotents(S) for x in range(n))


def maximal_subgroup(S, e):
    """H_e, the largest subgroup containing the idempotent e."""
    if S.mul(e, e) != e:
        raise NotIdempotent(e)
    return green(S).H.class_of(e)


def k_class(S, e):
    """K_e = {s : some power of s lies in H_e}."""
    he = maximal_subgroup(S, e)
    return frozenset(s for s in S.elements
                     if any(p in he for p in element_powers(S, s)))


def ccr_check(S):
    """Raise-style CCR precondition used by the decomposition engine."""
    from .errors import NotConditionallyCompletelyRegular
    w = ccr_witness(S)
    if w is not None:
        raise NotConditionallyCompletelyRegular(w)


def e_dense_characterizations(S):
    """The four equivalent E-dense tests, evaluated independently."""
    t = S._rows
    ids = idempotents(S)
    right = all(any(t[s][x] in ids for x in S.elements) for s in S.elements)
    left = all(any(t[x][s] in ids for x in S.elements) for s in S.elements)
    both = all(any(t[s][x] in ids and t[x][s] in ids for x in S.elements)
               for s in S.elements)
    weak = all(weak_inverses(S, s) for s in S.elements)
    return (right, left, both, weak)
