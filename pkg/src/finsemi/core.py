"""Finite semigroups as Cayley tables, plus the set/partition machinery.

A semigroup of order n is a validated n x n table of element indices;
table[i][j] is the product i*j with i the left factor.  Subsets of elements
are plain frozensets of indices, partitions are `Partition` objects.  All
values are immutable after construction and every operation is a pure
function of its inputs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    EmptyGenerators,
    IndexOutOfRange,
    NonAssociative,
    NonSquare,
    NotACongruence,
    NotAnIdeal,
    NotASubsemigroup,
    OrderTooLarge,
    SgtParseError,
)

CONGRUENCE_ORDER_CAP = 6
ISOMORPHISM_ORDER_CAP = 12


class Semigroup:
    """An immutable finite semigroup given by its Cayley table.

    Construction validates every entry and full associativity (O(n^3), via
    numpy); there is no unchecked constructor.  A two-sided zero and a
    two-sided identity are detected automatically (each is unique when it
    exists).
    """

    __slots__ = ("order", "table", "_rows", "labels", "zero", "identity", "_cache")

    def __init__(self, entries, labels=None):
        rows = [tuple(int(x) for x in row) for row in entries]
        n = len(rows)
        if n == 0:
            raise NonSquare(0, 0, 0)
        for i, row in enumerate(rows):
            if len(row) != n:
                raise NonSquare(n, i, len(row))
        for i, row in enumerate(rows):
            for j, v in enumerate(row):
                if not 0 <= v < n:
                    raise IndexOutOfRange(i, j, v, n)

        table = np.array(rows, dtype=np.int64)
        # (i*j)*k = table[table[i,j], k];  i*(j*k) = table[i, table[j,k]]
        left = table[table]
        right = table[:, table]
        if not np.array_equal(left, right):
            i, j, k = map(int, np.argwhere(left != right)[0])
            raise NonAssociative(i, j, k)
        table.setflags(write=False)

        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise ValueError(f"expected {n} labels, got {len(labels)}")

        self.order = n
        self.table = table
        self._rows = tuple(rows)
        self.labels = labels
        self.zero = self._find_zero()
        self.identity = self._find_identity()
        self._cache = {}

    def _find_zero(self):
        t = self._rows
        n = self.order
        for z in range(n):
            if all(t[z][i] == z and t[i][z] == z for i in range(n)):
                return z
        return None

    def _find_identity(self):
        t = self._rows
        n = self.order
        for e in range(n):
            if all(t[e][i] == i and t[i][e] == i for i in range(n)):
                return e
        return None

    def mul(self, i, j):
        return self._rows[i][j]

    @property
    def elements(self):
        return range(self.order)

    def label(self, i):
        return self.labels[i] if self.labels else str(i)

    def __eq__(self, other):
        return isinstance(other, Semigroup) and self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        tag = f", zero={self.zero}" if self.zero is not None else ""
        tag += f", identity={self.identity}" if self.identity is not None else ""
        return f"Semigroup(order={self.order}{tag})"


def from_table(n, entries, labels=None):
    """Validate and build a Semigroup from an n x n table of indices."""
    rows = [list(row) for row in entries]
    if len(rows) != n:
        raise NonSquare(n, len(rows), len(rows[0]) if rows else 0)
    return Semigroup(rows, labels=labels)


class Partition:
    """Disjoint nonempty classes covering [0, n), normalized by min element."""

    __slots__ = ("classes", "index_of", "n")

    def __init__(self, classes, n=None):
        cls = sorted((frozenset(c) for c in classes), key=min)
        seen = set()
        for c in cls:
            if not c:
                raise ValueError("empty class")
            if c & seen:
                raise ValueError(f"classes overlap at {sorted(c & seen)}")
            seen |= c
        size = n if n is not None else (max(seen) + 1 if seen else 0)
        if seen != set(range(size)):
            raise ValueError(f"classes do not cover [0, {size})")
        index = [0] * size
        for k, c in enumerate(cls):
            for x in c:
                index[x] = k
        self.classes = tuple(cls)
        self.index_of = tuple(index)
        self.n = size

    @classmethod
    def from_index(cls, index):
        groups = {}
        for x, k in enumerate(index):
            groups.setdefault(k, []).append(x)
        return cls(groups.values(), n=len(index))

    def class_of(self, x):
        return self.classes[self.index_of[x]]

    def same(self, a, b):
        return self.index_of[a] == self.index_of[b]

    def as_lists(self):
        return [sorted(c) for c in self.classes]

    def __len__(self):
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)

    def __eq__(self, other):
        return isinstance(other, Partition) and self.classes == other.classes

    def __hash__(self):
        return hash(self.classes)

    def __repr__(self):
        return f"Partition({self.as_lists()})"


def identity_partition(S):
    return Partition([[x] for x in S.elements], n=S.order)


def universal_partition(S):
    return Partition([list(S.elements)], n=S.order)


# ---------------------------------------------------------------------------
# set algebra


def product_set(S, A, B):
    """The set {a*b : a in A, b in B}."""
    if not A or not B:
        return frozenset()
    sub = S.table[np.ix_(sorted(A), sorted(B))]
    return frozenset(np.unique(sub).tolist())


def _power_chain(S):
    """[S^1, S^2, ...] up to the first repeat; cached on the semigroup."""
    chain = S._cache.get("powers")
    if chain is None:
        full = frozenset(S.elements)
        chain = [full]
        while True:
            nxt = product_set(S, chain[-1], full)
            if nxt == chain[-1]:
                break
            chain.append(nxt)
        S._cache["powers"] = chain
    return chain


def power_set(S, m):
    """S^m, the set of products of m elements (S^1 = S)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    chain = _power_chain(S)
    return chain[m - 1] if m <= len(chain) else chain[-1]


def base_set(S):
    """Base(S): the intersection of all S^m; equals the stabilized power."""
    return _power_chain(S)[-1]


def base_height(S):
    """Least m with S^m = S^(m+1)."""
    return len(_power_chain(S))


def closure(S, gens):
    """Smallest subsemigroup containing gens."""
    if not gens:
        raise EmptyGenerators("generating set is empty")
    cur = frozenset(gens)
    while True:
        nxt = cur | product_set(S, cur, cur)
        if nxt == cur:
            return cur
        cur = nxt


def is_left_ideal(S, A):
    """True iff S^1 A is contained in A."""
    return bool(A) and product_set(S, frozenset(S.elements), A) <= frozenset(A)


def is_right_ideal(S, A):
    return bool(A) and product_set(S, A, frozenset(S.elements)) <= frozenset(A)


def is_ideal(S, A):
    return is_left_ideal(S, A) and is_right_ideal(S, A)


def is_subsemigroup(S, A):
    return bool(A) and product_set(S, A, A) <= frozenset(A)


def restrict(S, A):
    """The subsemigroup on A as a standalone Semigroup.

    Returns (T, elems) where elems[i] is the S-index of T's element i
    (elements in increasing S-index order).
    """
    if not is_subsemigroup(S, A):
        bad = next(((a, b) for a in sorted(A) for b in sorted(A)
                    if S.mul(a, b) not in A), None)
        raise NotASubsemigroup(bad)
    elems = sorted(A)
    pos = {a: i for i, a in enumerate(elems)}
    rows = [[pos[S.mul(a, b)] for b in elems] for a in elems]
    labels = [S.label(a) for a in elems] if S.labels else None
    return Semigroup(rows, labels=labels), elems


def rees_quotient(S, I):
    """Collapse the two-sided ideal I to a zero.

    The quotient keeps the non-ideal elements in their original relative
    order at indices 0..k-1 and puts the collapsed zero last.  Returns
    (Q, qmap) with qmap[s] the quotient index of s.
    """
    I = frozenset(I)
    if not is_ideal(S, I):
        sa = next(((s, a) for s in S.elements for a in sorted(I)
                   if S.mul(s, a) not in I or S.mul(a, s) not in I), None)
        raise NotAnIdeal(sa)
    outside = [x for x in S.elements if x not in I]
    k = len(outside)
    pos = {x: i for i, x in enumerate(outside)}
    qmap = tuple(pos.get(x, k) for x in S.elements)
    rows = [[k] * (k + 1) for _ in range(k + 1)]
    for i, a in enumerate(outside):
        for j, b in enumerate(outside):
            rows[i][j] = qmap[S.mul(a, b)]
    labels = None
    if S.labels:
        labels = [S.label(x) for x in outside] + ["0"]
    return Semigroup(rows, labels=labels), qmap


def direct_product(S, T):
    """Componentwise product on pairs; (i, j) is encoded as i*|T| + j."""
    nt = T.order
    prod = (S.table[:, None, :, None] * nt + T.table[None, :, None, :])
    rows = prod.reshape(S.order * nt, S.order * nt)
    labels = None
    if S.labels and T.labels:
        labels = [f"({S.label(i)},{T.label(j)})"
                  for i in S.elements for j in T.elements]
    return Semigroup(rows, labels=labels)


def pair_index(T, i, j):
    """Index of (i, j) inside direct_product(S, T)."""
    return i * T.order + j


# ---------------------------------------------------------------------------
# congruences and quotients


def congruence_witness(S, partition):
    """None if the partition is a congruence, else a witness (a, b, c)."""
    idx = partition.index_of
    t = S._rows
    n = S.order
    for c in partition.classes:
        members = sorted(c)
        a = members[0]
        for b in members[1:]:
            for x in range(n):
                if idx[t[a][x]] != idx[t[b][x]] or idx[t[x][a]] != idx[t[x][b]]:
                    return (a, b, x)
    return None


def is_congruence(S, partition):
    return congruence_witness(S, partition) is None


def enumerate_congruences(S, max_order=CONGRUENCE_ORDER_CAP):
    """All congruences of S, as Partitions in restricted-growth order.

    Generates partitions as restricted growth strings, pruning a prefix as
    soon as the classes assigned so far already violate compatibility.
    """
    n = S.order
    if n > max_order:
        raise OrderTooLarge(n, max_order)
    t = S._rows
    out = []

    def compatible_prefix(rgs, k):
        # check constraints among elements 0..k whose products are also <= k
        for a in range(k + 1):
            for b in range(a + 1, k + 1):
                if rgs[a] != rgs[b]:
                    continue
                for c in range(k + 1):
                    ac, bc = t[a][c], t[b][c]
                    if ac <= k and bc <= k and rgs[ac] != rgs[bc]:
                        return False
                    ca, cb = t[c][a], t[c][b]
                    if ca <= k and cb <= k and rgs[ca] != rgs[cb]:
                        return False
        return True

    def rec(k, maxc, rgs):
        if k == n:
            out.append(Partition.from_index(tuple(rgs)))
            return
        for c in range(maxc + 1):
            rgs.append(c)
            if compatible_prefix(rgs, k):
                rec(k + 1, max(maxc, c + 1), rgs)
            rgs.pop()

    rec(0, 0, [])
    return out


def quotient_by_congruence(S, partition):
    """Quotient semigroup on class representatives plus the natural map.

    Quotient element k is partition.classes[k]; returns (Q, index_of).
    """
    w = congruence_witness(S, partition)
    if w is not None:
        raise NotACongruence(w)
    idx = partition.index_of
    reps = [min(c) for c in partition.classes]
    rows = [[idx[S.mul(a, b)] for b in reps] for a in reps]
    labels = None
    if S.labels:
        labels = ["{" + ",".join(S.label(x) for x in sorted(c)) + "}"
                  for c in partition.classes]
    return Semigroup(rows, labels=labels), idx


# ---------------------------------------------------------------------------
# element predicates and unary constructions


def interchangeable(S, a, b):
    """Distinct elements with identical left and right actions."""
    if a == b:
        return False
    t = S._rows
    return all(t[a][x] == t[b][x] and t[x][a] == t[x][b] for x in S.elements)


def interchangeable_pair(S):
    """Some interchangeable pair, or None."""
    t = S._rows
    n = S.order
    cols = list(zip(*t))
    seen = {}
    for a in range(n):
        key = (t[a], cols[a])
        if key in seen:
            return (seen[key], a)
        seen[key] = a
    return None


def is_weakly_reductive(S):
    return interchangeable_pair(S) is None


def is_globally_idempotent(S):
    """S^2 = S."""
    full = frozenset(S.elements)
    return product_set(S, full, full) == full


def adjoin_zero(S):
    """S with a fresh absorbing element appended at index n."""
    n = S.order
    rows = [list(row) + [n] for row in S._rows]
    rows.append([n] * (n + 1))
    labels = list(S.labels) + ["0"] if S.labels else None
    return Semigroup(rows, labels=labels)


def adjoin_identity(S):
    """S with a fresh neutral element appended at index n."""
    n = S.order
    rows = [list(row) + [i] for i, row in enumerate(S._rows)]
    rows.append(list(range(n + 1)))
    labels = list(S.labels) + ["1"] if S.labels else None
    return Semigroup(rows, labels=labels)


def monoid_completion(S):
    """S itself if it has an identity, else adjoin_identity(S)."""
    return S if S.identity is not None else adjoin_identity(S)


# ---------------------------------------------------------------------------
# isomorphism (small orders; backtracking with profile pruning)


def _profiles(S):
    from_row = [frozenset(row) for row in S._rows]
    from_col = [frozenset(col) for col in zip(*S._rows)]
    profs = []
    for a in S.elements:
        p, seen = a, {a}
        while (p := S.mul(p, a)) not in seen:
            seen.add(p)
        profs.append((S.mul(a, a) == a, len(from_row[a]), len(from_col[a]),
                      len(seen)))
    return profs


def find_isomorphism(S, T, cap=ISOMORPHISM_ORDER_CAP):
    """A table isomorphism S -> T as a tuple, or None."""
    if S.order != T.order:
        return None
    n = S.order
    if n > cap:
        raise OrderTooLarge(n, cap)
    ps, pt = _profiles(S), _profiles(T)
    if sorted(ps) != sorted(pt):
        return None
    candidates = [[b for b in range(n) if pt[b] == ps[a]] for a in range(n)]
    phi = [-1] * n
    used = [False] * n

    def ok(a, b):
        # products among already-assigned elements must map consistently
        for x in range(n):
            if phi[x] < 0:
                continue
            for (p, q) in ((S.mul(a, x), T.mul(b, phi[x])),
                           (S.mul(x, a), T.mul(phi[x], b))):
                if phi[p] >= 0 and phi[p] != q:
                    return False
                if p == a and q != b:
                    return False
        p, q = S.mul(a, a), T.mul(b, b)
        if phi[p] >= 0 and phi[p] != q:
            return False
        return True

    def rec(a):
        if a == n:
            return True
        for b in candidates[a]:
            if not used[b] and ok(a, b):
                phi[a] = b
                used[b] = True
                if rec(a + 1):
                    return True
                phi[a] = -1
                used[b] = False
        return False

    if rec(0):
        # full re-check (the incremental test is a filter, not a proof)
        if all(phi[S.mul(a, b)] == T.mul(phi[a], phi[b])
               for a in range(n) for b in range(n)):
            return tuple(phi)
    return None


def isomorphic(S, T, cap=ISOMORPHISM_ORDER_CAP):
    return find_isomorphism(S, T, cap=cap) is not None


# ---------------------------------------------------------------------------
# .sgt file format: line 1 is n, lines 2..n+1 the table rows,
# optional line n+2 holds n labels; anything further is rejected.


def parse_sgt(text):
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise SgtParseError(1, "empty file")
    try:
        n = int(lines[0].strip())
    except ValueError:
        raise SgtParseError(1, f"expected an integer order, got {lines[0]!r}")
    if n < 1:
        raise SgtParseError(1, f"order must be positive, got {n}")
    if len(lines) < n + 1:
        raise SgtParseError(len(lines) + 1, f"expected {n} table rows")
    rows = []
    for i in range(n):
        parts = lines[1 + i].split()
        if len(parts) != n:
            raise SgtParseError(2 + i, f"expected {n} entries, got {len(parts)}")
        try:
            rows.append([int(p) for p in parts])
        except ValueError:
            raise SgtParseError(2 + i, f"non-integer entry in {lines[1 + i]!r}")
    labels = None
    rest = lines[n + 1:]
    if rest:
        parts = rest[0].split()
        if len(parts) != n:
            raise SgtParseError(n + 2, f"expected {n} labels, got {len(parts)}")
        labels = parts
        rest = rest[1:]
    if any(line.strip() for line in rest):
        raise SgtParseError(n + 2 + (1 if labels else 0), "trailing garbage")
    try:
        return from_table(n, rows, labels=labels)
    except IndexOutOfRange as e:
        raise SgtParseError(2 + e.i, str(e))


def format_sgt(S):
    lines = [str(S.order)]
    lines += [" ".join(str(v) for v in row) for row in S._rows]
    if S.labels:
        lines.append(" ".join(S.labels))
    return "\n".join(lines) + "\n"


def load_sgt(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_sgt(fh.read())


def save_sgt(S, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_sgt(S))
