"""Finite semigroups as validated multiplication tables.

Elements are dense integer indices into a square table; ``table[a][b]`` is
the product a*b.  Every construction is validated on creation: a
non-associative table is a hard error, never a warning, because everything
downstream assumes a semigroup.  Semigroups built with a zero always place
it at index 0.

All values here are immutable after validation, so they are safe to share
across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import errors


@dataclass(frozen=True)
class FiniteSemigroup:
    """A finite semigroup given by its multiplication table.

    ``zero`` optionally designates a two-sided absorbing element; ``labels``
    are display strings for diagnostics only (equality is index-based).
    Use :func:`from_table` to build one from plain nested lists.
    """

    table: tuple[tuple[int, ...], ...]
    zero: int | None = None
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        n = len(self.table)
        if n == 0:
            raise errors.EntryOutOfRange("table must be nonempty")
        for i, row in enumerate(self.table):
            if len(row) != n:
                raise errors.EntryOutOfRange(f"row {i} has {len(row)} entries, expected {n}")
            for v in row:
                if not isinstance(v, int) or not 0 <= v < n:
                    raise errors.EntryOutOfRange(f"entry {v!r} at row {i} not in [0, {n})")
        t = np.asarray(self.table, dtype=np.int64)
        left = t[t, :]   # left[a,b,c] = (a*b)*c
        right = t[:, t]  # right[a,b,c] = a*(b*c)
        if not np.array_equal(left, right):
            a, b, c = (int(v) for v in np.argwhere(left != right)[0])
            raise errors.NonAssociative(a, b, c)
        if self.zero is not None:
            z = self.zero
            if not 0 <= z < n:
                raise errors.EntryOutOfRange(f"zero index {z} not in [0, {n})")
            for x in range(n):
                if self.table[z][x] != z or self.table[x][z] != z:
                    raise errors.ZeroNotAbsorbing(f"element {x} does not absorb into {z}")
        if self.labels is not None and len(self.labels) != n:
            raise errors.EntryOutOfRange("labels length must equal table size")

    @property
    def size(self) -> int:
        return len(self.table)

    def elements(self) -> range:
        return range(self.size)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def label(self, a: int) -> str:
        return self.labels[a] if self.labels is not None else str(a)

    @cached_property
    def flat(self) -> np.ndarray:
        """The table as a contiguous int64 array of length size*size."""
        return np.ascontiguousarray(np.asarray(self.table, dtype=np.int64).reshape(-1))

    def __repr__(self):
        return f"FiniteSemigroup(size={self.size}, zero={self.zero})"


def from_table(raw_table, zero: int | None = None, labels=None) -> FiniteSemigroup:
    """Validate a raw square table of indices and wrap it as a semigroup."""
    table = tuple(tuple(int(v) if isinstance(v, (int, np.integer)) else v for v in row)
                  for row in raw_table)
    lab = tuple(str(s) for s in labels) if labels is not None else None
    return FiniteSemigroup(table, zero=zero, labels=lab)


@dataclass(frozen=True)
class ElementSet:
    """A subset of a semigroup, optionally tagged (and checked) as an ideal."""

    base: FiniteSemigroup
    members: frozenset[int]
    is_ideal: bool = False

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))
        n = self.base.size
        for x in self.members:
            if not 0 <= x < n:
                raise errors.EntryOutOfRange(f"member {x} not in [0, {n})")
        if self.is_ideal:
            if not self.members:
                raise errors.NotAnIdeal("an ideal must be nonempty")
            for x in self.members:
                for s in self.base.elements():
                    if self.base.mul(s, x) not in self.members or \
                       self.base.mul(x, s) not in self.members:
                        raise errors.NotAnIdeal(f"not closed at {s}*{x} or {x}*{s}")

    def __contains__(self, x):
        return x in self.members

    def __iter__(self):
        return iter(sorted(self.members))

    def __len__(self):
        return len(self.members)


@dataclass(frozen=True)
class Homomorphism:
    """A structure-preserving map between two finite semigroups."""

    source: FiniteSemigroup
    target: FiniteSemigroup
    map: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "map", tuple(int(v) for v in self.map))
        if len(self.map) != self.source.size:
            raise errors.NotAHomomorphism("map length must equal source size")
        for v in self.map:
            if not 0 <= v < self.target.size:
                raise errors.NotAHomomorphism(f"image {v} out of range")
        for x in self.source.elements():
            for y in self.source.elements():
                if self.map[self.source.mul(x, y)] != \
                        self.target.mul(self.map[x], self.map[y]):
                    raise errors.NotAHomomorphism(f"breaks at ({x}, {y})")

    def __call__(self, x: int) -> int:
        return self.map[x]

    def image(self) -> frozenset[int]:
        return frozenset(self.map)

    def is_surjective(self) -> bool:
        return len(self.image()) == self.target.size

    def is_injective(self) -> bool:
        return len(set(self.map)) == len(self.map)

    def is_bijective(self) -> bool:
        return self.is_injective() and self.is_surjective()

    def then(self, other: "Homomorphism") -> "Homomorphism":
        """Composition: first self, then other."""
        if other.source is not self.target and other.source != self.target:
            raise errors.NotAHomomorphism("composition targets do not line up")
        return Homomorphism(self.source, other.target,
                            tuple(other.map[v] for v in self.map))


def identity_homomorphism(S: FiniteSemigroup) -> Homomorphism:
    return Homomorphism(S, S, tuple(S.elements()))


@dataclass(frozen=True)
class Congruence:
    """A partition of a semigroup compatible with its multiplication."""

    base: FiniteSemigroup
    class_of: tuple[int, ...]
    class_count: int

    def __post_init__(self):
        object.__setattr__(self, "class_of", tuple(int(v) for v in self.class_of))
        n = self.base.size
        if len(self.class_of) != n:
            raise errors.IncompatiblePartition("class_of length must equal size")
        seen = set(self.class_of)
        if seen != set(range(self.class_count)):
            raise errors.IncompatiblePartition(
                f"classes must cover [0, {self.class_count}) exactly")
        # compatibility: the class of a product is determined by the
        # classes of the factors
        prod: dict[tuple[int, int], int] = {}
        for a in range(n):
            for b in range(n):
                key = (self.class_of[a], self.class_of[b])
                v = self.class_of[self.base.mul(a, b)]
                w = prod.setdefault(key, v)
                if w != v:
                    raise errors.IncompatiblePartition(
                        f"product of classes {key} is ambiguous")

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.class_count)]
        for x, c in enumerate(self.class_of):
            out[c].append(x)
        return out

    def relates(self, a: int, b: int) -> bool:
        return self.class_of[a] == self.class_of[b]


def congruence_from_classes(S: FiniteSemigroup, classes) -> Congruence:
    """Build a congruence from a partition, numbering classes by first member."""
    class_of = [-1] * S.size
    blocks = sorted((min(c), sorted(c)) for c in classes)
    for i, (_, block) in enumerate(blocks):
        for x in block:
            if class_of[x] != -1:
                raise errors.IncompatiblePartition(f"element {x} in two classes")
            class_of[x] = i
    if -1 in class_of:
        raise errors.IncompatiblePartition("partition does not cover the semigroup")
    return Congruence(S, tuple(class_of), len(blocks))


def equality_congruence(S: FiniteSemigroup) -> Congruence:
    return Congruence(S, tuple(S.elements()), S.size)


def universal_congruence(S: FiniteSemigroup) -> Congruence:
    return Congruence(S, (0,) * S.size, 1)


# -- element predicates ---------------------------------------------------

def idempotents(S: FiniteSemigroup) -> ElementSet:
    return ElementSet(S, frozenset(e for e in S.elements() if S.mul(e, e) == e))


def inverses_of(S: FiniteSemigroup, a: int) -> ElementSet:
    """All b with aba = a and bab = b."""
    out = set()
    for b in S.elements():
        ab = S.mul(a, b)
        if S.mul(ab, a) == a and S.mul(S.mul(b, a), b) == b:
            out.add(b)
    return ElementSet(S, frozenset(out))


def is_regular(S: FiniteSemigroup, a: int) -> bool:
    return len(inverses_of(S, a)) > 0


def is_inverse_semigroup(S: FiniteSemigroup) -> bool:
    return all(len(inverses_of(S, a)) == 1 for a in S.elements())


def zero_of(S: FiniteSemigroup) -> int | None:
    """The designated zero, or a discovered two-sided absorbing element."""
    if S.zero is not None:
        return S.zero
    for z in S.elements():
        if all(S.mul(z, x) == z and S.mul(x, z) == z for x in S.elements()):
            return z
    return None


def principal_ideal(S: FiniteSemigroup, u: int) -> ElementSet:
    """The two-sided ideal SuS = {s*u*t}, computed literally.

    No identity is adjoined: an element may fall outside its own principal
    ideal.  The result is always closed, hence tagged as an ideal.
    """
    su = {S.mul(s, u) for s in S.elements()}
    members = frozenset(S.mul(x, t) for x in su for t in S.elements())
    return ElementSet(S, members, is_ideal=True)


def is_zero_simple(S: FiniteSemigroup) -> bool:
    """S is nontrivial, S*S = S, and no nonzero element generates a proper ideal."""
    n = S.size
    if n < 2:
        return False
    z = zero_of(S)
    products = {S.mul(a, b) for a in S.elements() for b in S.elements()}
    if products != set(S.elements()):
        return False
    nonzero = set(S.elements()) - ({z} if z is not None else set())
    for u in S.elements():
        if u == z:
            continue
        if not nonzero <= principal_ideal(S, u).members:
            return False
    return True


def is_completely_zero_simple(S: FiniteSemigroup) -> bool:
    """Zero-simple with a primitive idempotent."""
    if not is_zero_simple(S):
        return False
    z = zero_of(S)
    idems = [e for e in idempotents(S) if e != z]
    for e in idems:
        if all(f == e or f == z
               for f in idems
               if S.mul(e, f) == f and S.mul(f, e) == f):
            return True
    return False


# -- quotients -------------------------------------------------------------

def rees_quotient(S: FiniteSemigroup, ideal: ElementSet) -> tuple[FiniteSemigroup, Homomorphism]:
    """Collapse an ideal to a single zero; returns the quotient and natural map."""
    members = ideal.members
    if not members:
        raise errors.NotAnIdeal("cannot collapse an empty ideal")
    for x in members:
        for s in S.elements():
            if S.mul(s, x) not in members or S.mul(x, s) not in members:
                raise errors.NotAnIdeal(f"not closed at {s}*{x} or {x}*{s}")
    rest = [x for x in S.elements() if x not in members]
    phi = [0] * S.size
    for i, x in enumerate(rest):
        phi[x] = i + 1
    reps = [min(members)] + rest
    m = len(reps)
    table = [[phi[S.mul(reps[a], reps[b])] for b in range(m)] for a in range(m)]
    labels = tuple(S.label(r) for r in reps) if S.labels is not None else None
    Q = from_table(table, zero=0, labels=labels)
    return Q, Homomorphism(S, Q, tuple(phi))


def quotient_by_congruence(S: FiniteSemigroup, c: Congruence) -> tuple[FiniteSemigroup, Homomorphism]:
    """The quotient semigroup on the classes of a congruence."""
    if c.base != S:
        raise errors.IncompatiblePartition("congruence belongs to a different semigroup")
    reps = [min(block) for block in c.classes()]
    m = len(reps)
    table = [[c.class_of[S.mul(reps[a], reps[b])] for b in range(m)] for a in range(m)]
    zero = c.class_of[S.zero] if S.zero is not None else None
    labels = tuple(S.label(r) for r in reps) if S.labels is not None else None
    Q = from_table(table, zero=zero, labels=labels)
    return Q, Homomorphism(S, Q, c.class_of)


def direct_product(S: FiniteSemigroup, T: FiniteSemigroup) -> FiniteSemigroup:
    """Componentwise product; element (i, j) gets index i*|T| + j."""
    n, m = S.size, T.size
    table = [[0] * (n * m) for _ in range(n * m)]
    for i in range(n):
        for j in range(m):
            for k in range(n):
                for l in range(m):
                    table[i * m + j][k * m + l] = S.mul(i, k) * m + T.mul(j, l)
    zero = S.zero * m + T.zero if S.zero is not None and T.zero is not None else None
    labels = tuple(f"({S.label(i)},{T.label(j)})" for i in range(n) for j in range(m))
    return from_table(table, zero=zero, labels=labels)


def subsemigroup(S: FiniteSemigroup, members) -> tuple[FiniteSemigroup, list[int]]:
    """Restrict S to a multiplicatively closed subset.

    Returns the sub-semigroup (elements renumbered in increasing order of
    their old indices) together with the old-index list.
    """
    elems = sorted(set(members))
    pos = {x: i for i, x in enumerate(elems)}
    for a in elems:
        for b in elems:
            if S.mul(a, b) not in pos:
                raise errors.NotClosed(f"{a}*{b} leaves the subset")
    table = [[pos[S.mul(a, b)] for b in elems] for a in elems]
    zero = pos[S.zero] if S.zero is not None and S.zero in pos else None
    labels = tuple(S.label(x) for x in elems) if S.labels is not None else None
    return from_table(table, zero=zero, labels=labels), elems


# -- groups ----------------------------------------------------------------

@dataclass(frozen=True)
class GroupTable:
    """A finite group: a semigroup carrier plus identity and inverse data."""

    carrier: FiniteSemigroup
    identity: int
    inverse: tuple[int, ...]

    def __post_init__(self):
        S = self.carrier
        n = S.size
        if S.zero is not None and n > 1:
            raise errors.NotAGroup("a nontrivial group has no absorbing zero")
        full = set(range(n))
        for a in range(n):
            if {S.mul(a, x) for x in range(n)} != full or \
               {S.mul(x, a) for x in range(n)} != full:
                raise errors.NotAGroup(f"row or column {a} is not a permutation")
        e = self.identity
        for x in range(n):
            if S.mul(e, x) != x or S.mul(x, e) != x:
                raise errors.NotAGroup(f"{e} is not an identity")
            if S.mul(x, self.inverse[x]) != e or S.mul(self.inverse[x], x) != e:
                raise errors.NotAGroup(f"{self.inverse[x]} is not inverse to {x}")

    @property
    def size(self) -> int:
        return self.carrier.size

    def mul(self, a: int, b: int) -> int:
        return self.carrier.mul(a, b)

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def label(self, a: int) -> str:
        return self.carrier.label(a)

    def power(self, g: int, k: int) -> int:
        v = self.identity
        for _ in range(k):
            v = self.mul(v, g)
        return v

    def order_of(self, g: int) -> int:
        v, k = g, 1
        while v != self.identity:
            v = self.mul(v, g)
            k += 1
        return k


def as_group(S: FiniteSemigroup) -> GroupTable:
    """Interpret a finite semigroup as a group, or raise NotAGroup."""
    n = S.size
    full = set(range(n))
    for a in range(n):
        if {S.mul(a, x) for x in range(n)} != full or \
           {S.mul(x, a) for x in range(n)} != full:
            raise errors.NotAGroup(f"row or column {a} is not a permutation")
    identity = next((e for e in range(n)
                     if all(S.mul(e, x) == x == S.mul(x, e) for x in range(n))), None)
    if identity is None:
        raise errors.NotAGroup("no identity element")
    inverse = tuple(next(y for y in range(n) if S.mul(x, y) == identity)
                    for x in range(n))
    carrier = S if S.zero is None else from_table(S.table, zero=None, labels=S.labels)
    return GroupTable(carrier, identity, inverse)


# -- isomorphism search ------------------------------------------------------

def _index_period(S: FiniteSemigroup, x: int) -> tuple[int, int]:
    seen = {}
    y, k = x, 1
    while y not in seen:
        seen[y] = k
        y = S.mul(y, x)
        k += 1
    return seen[y], k - seen[y]


def _fingerprint(S: FiniteSemigroup, x: int):
    row = len({S.mul(x, s) for s in S.elements()})
    col = len({S.mul(s, x) for s in S.elements()})
    return (_index_period(S, x), S.mul(x, x) == x, row, col)


def find_isomorphism(S: FiniteSemigroup, T: FiniteSemigroup) -> Homomorphism | None:
    """Search for a bijective homomorphism S -> T.

    Backtracking seeded by cheap per-element invariants, with forced
    propagation of products.  Deterministic: candidates are tried in
    increasing index order.  Intended for desk scale (sizes up to ~60).
    """
    if S.size != T.size:
        return None
    n = S.size
    fps = [_fingerprint(S, x) for x in range(n)]
    fpt = [_fingerprint(T, x) for x in range(n)]
    if sorted(fps) != sorted(fpt):
        return None
    cand = [[t for t in range(n) if fpt[t] == fps[a]] for a in range(n)]
    order = sorted(range(n), key=lambda a: (len(cand[a]), a))
    fwd: dict[int, int] = {}
    bwd: dict[int, int] = {}

    def assign(a: int, t: int, trail: list[int]) -> bool:
        stack = [(a, t)]
        while stack:
            x, y = stack.pop()
            if x in fwd:
                if fwd[x] != y:
                    return False
                continue
            if y in bwd or fps[x] != fpt[y]:
                return False
            fwd[x] = y
            bwd[y] = x
            trail.append(x)
            for u in list(fwd):
                stack.append((S.mul(x, u), T.mul(y, fwd[u])))
                stack.append((S.mul(u, x), T.mul(fwd[u], y)))
        return True

    def undo(trail: list[int], mark: int):
        while len(trail) > mark:
            x = trail.pop()
            bwd.pop(fwd.pop(x))

    def search(i: int, trail: list[int]) -> bool:
        while i < n and order[i] in fwd:
            i += 1
        if i == n:
            return True
        a = order[i]
        for t in cand[a]:
            if t in bwd:
                continue
            mark = len(trail)
            if assign(a, t, trail) and search(i + 1, trail):
                return True
            undo(trail, mark)
        return False

    if not search(0, []):
        return None
    return Homomorphism(S, T, tuple(fwd[a] for a in range(n)))
