"""Builders for the concrete semigroups used throughout the package.

Groups (trivial, cyclic, the symmetric group on 3 points), Brandt
semigroups B(G, I), groups with zero, adjoined identities, and the
power-set semigroup on P(G) x G together with its collapsing homomorphism
onto a Brandt semigroup over the trivial group.

Size guards keep every construction at desk scale; they are module
constants, not hard limits of the algorithms.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from math import lcm

from . import errors
from .core import (
    FiniteSemigroup,
    GroupTable,
    Homomorphism,
    as_group,
    direct_product,
    from_table,
    subsemigroup,
)

MAX_BRANDT_SIZE = 200
MAX_POWERSET_GROUP = 5


# -- groups ------------------------------------------------------------------

def trivial_group() -> GroupTable:
    return GroupTable(from_table([[0]], labels=["1"]), 0, (0,))


def cyclic_group(m: int) -> GroupTable:
    """Z_m in additive notation: i*j = (i+j) mod m, identity 0."""
    if m < 1:
        raise errors.InvalidOrder(f"cyclic group order must be >= 1, got {m}")
    table = [[(i + j) % m for j in range(m)] for i in range(m)]
    carrier = from_table(table, labels=[str(i) for i in range(m)])
    return GroupTable(carrier, 0, tuple((m - i) % m for i in range(m)))


_S3_PERMS = [
    ((0, 1, 2), "e"),
    ((1, 0, 2), "(12)"),
    ((2, 1, 0), "(13)"),
    ((0, 2, 1), "(23)"),
    ((1, 2, 0), "(123)"),
    ((2, 0, 1), "(132)"),
]


def symmetric_group_3() -> GroupTable:
    """All permutations of 3 points; p*q applies p first, then q."""
    perms = [p for p, _ in _S3_PERMS]
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(q[p[i]] for i in range(3))] for q in perms] for p in perms]
    carrier = from_table(table, labels=[lab for _, lab in _S3_PERMS])
    return as_group(carrier)


def group_product(G: GroupTable, H: GroupTable) -> GroupTable:
    return as_group(direct_product(G.carrier, H.carrier))


def exponent(G: GroupTable) -> int:
    """Least n >= 1 with g^n = 1 for every g; the lcm of the element orders."""
    return lcm(*(G.order_of(g) for g in range(G.size)))


# -- Brandt semigroups ---------------------------------------------------------

@dataclass(frozen=True)
class BrandtCoords:
    """Index bookkeeping for a constructed B(G, I).

    The zero sits at index 0; triples are ordered lexicographically by
    (i, g, j), so encode/decode are fixed bijections.
    """

    group: GroupTable
    index_size: int
    zero: int = 0

    @property
    def size(self) -> int:
        return self.index_size ** 2 * self.group.size + 1

    def encode(self, i: int, g: int, j: int) -> int:
        k, m = self.index_size, self.group.size
        if not (0 <= i < k and 0 <= j < k and 0 <= g < m):
            raise errors.EntryOutOfRange(f"triple ({i},{g},{j}) out of range")
        return 1 + (i * m + g) * k + j

    def decode(self, idx: int) -> tuple[int, int, int]:
        if not 1 <= idx < self.size:
            raise errors.EntryOutOfRange(f"{idx} is not a nonzero element")
        v = idx - 1
        j = v % self.index_size
        v //= self.index_size
        return v // self.group.size, v % self.group.size, j

    def triples(self):
        for idx in range(1, self.size):
            yield idx, self.decode(idx)


def brandt(G: GroupTable, index_size: int) -> tuple[FiniteSemigroup, BrandtCoords]:
    """The Brandt semigroup B(G, I) with |I| = index_size.

    (i,g,j)*(k,h,l) is (i, gh, l) when j = k and zero otherwise; zero
    absorbs everything.
    """
    if index_size < 2:
        raise errors.IndexTooSmall(f"index set needs at least 2 elements, got {index_size}")
    coords = BrandtCoords(G, index_size)
    n = coords.size
    if n > MAX_BRANDT_SIZE:
        raise errors.GroupTooLarge(f"B(G,I) would have {n} > {MAX_BRANDT_SIZE} elements")
    table = [[0] * n for _ in range(n)]
    for a, (i, g, j) in coords.triples():
        for b, (k, h, l) in coords.triples():
            if j == k:
                table[a][b] = coords.encode(i, G.mul(g, h), l)
    labels = ["0"] + [f"({i + 1},{G.label(g)},{j + 1})"
                      for _, (i, g, j) in coords.triples()]
    return from_table(table, zero=0, labels=labels), coords


def adjoin_zero(S: FiniteSemigroup) -> FiniteSemigroup:
    """S with a fresh absorbing zero adjoined at index 0."""
    n = S.size
    table = [[0] * (n + 1) for _ in range(n + 1)]
    for i in range(n):
        for j in range(n):
            table[i + 1][j + 1] = S.mul(i, j) + 1
    labels = ("0",) + tuple(S.label(i) for i in range(n))
    return from_table(table, zero=0, labels=labels)


def adjoin_identity(S: FiniteSemigroup) -> FiniteSemigroup:
    """S with a fresh two-sided identity adjoined at the last index."""
    n = S.size
    table = [[S.mul(i, j) for j in range(n)] + [i] for i in range(n)]
    table.append(list(range(n + 1)))
    labels = tuple(S.label(i) for i in range(n)) + ("1",)
    return from_table(table, zero=S.zero, labels=labels)


# -- the power-set semigroup ---------------------------------------------------

@dataclass(frozen=True)
class PowersetCoords:
    """Index bookkeeping for P(G) x G; subsets are nonempty bitmasks over G."""

    group: GroupTable

    @property
    def size(self) -> int:
        return (2 ** self.group.size - 1) * self.group.size

    def encode(self, mask: int, g: int) -> int:
        m = self.group.size
        if not (1 <= mask < 2 ** m and 0 <= g < m):
            raise errors.EntryOutOfRange(f"pair (mask={mask}, g={g}) out of range")
        return (mask - 1) * m + g

    def decode(self, idx: int) -> tuple[int, int]:
        m = self.group.size
        if not 0 <= idx < self.size:
            raise errors.EntryOutOfRange(f"{idx} out of range")
        return idx // m + 1, idx % m

    def translate(self, g: int, mask: int) -> int:
        """The bitmask of gB = {g*b : b in B}."""
        out = 0
        b = 0
        while mask:
            if mask & 1:
                out |= 1 << self.group.mul(g, b)
            mask >>= 1
            b += 1
        return out


def powerset_semigroup(G: GroupTable) -> tuple[FiniteSemigroup, PowersetCoords]:
    """The semigroup on pairs (A, g), A a nonempty subset of G, with
    (A,g)*(B,h) = (A u gB, gh)."""
    if G.size > MAX_POWERSET_GROUP:
        raise errors.GroupTooLarge(
            f"power-set semigroup needs |G| <= {MAX_POWERSET_GROUP}, got {G.size}")
    coords = PowersetCoords(G)
    n = coords.size
    table = [[0] * n for _ in range(n)]
    for a in range(n):
        amask, g = coords.decode(a)
        for b in range(n):
            bmask, h = coords.decode(b)
            table[a][b] = coords.encode(amask | coords.translate(g, bmask), G.mul(g, h))
    labels = []
    for idx in range(n):
        mask, g = coords.decode(idx)
        subset = ",".join(G.label(b) for b in range(G.size) if mask >> b & 1)
        labels.append(f"({{{subset}}},{G.label(g)})")
    return from_table(table, labels=labels), coords


def phi_homomorphism(G: GroupTable) -> Homomorphism:
    """Collapse P(G) x G onto the Brandt semigroup over the trivial group
    whose index set is the carrier of G.

    Pairs with a singleton first component ({a}, g) map to (a, 1, g^-1 a);
    everything with |A| >= 2 maps to zero.  Surjective, with singleton
    fibers over every nonzero element.
    """
    if G.size < 2:
        raise errors.GroupTooSmall("need |G| >= 2")
    source, pcoords = powerset_semigroup(G)
    target, bcoords = brandt(trivial_group(), G.size)
    relabel = ["0"] + [f"({G.label(i)},1,{G.label(j)})"
                       for _, (i, _, j) in bcoords.triples()]
    target = dataclasses.replace(target, labels=tuple(relabel))
    mapping = []
    for idx in range(source.size):
        mask, g = pcoords.decode(idx)
        if mask & (mask - 1):  # |A| >= 2
            mapping.append(0)
        else:
            a = mask.bit_length() - 1
            mapping.append(bcoords.encode(a, 0, G.mul(G.inv(g), a)))
    return Homomorphism(source, target, tuple(mapping))


def verify_brandt_coords(S: FiniteSemigroup, coords: BrandtCoords) -> bool:
    """Check that S really is the Brandt semigroup described by coords."""
    if S.size != coords.size or S.zero != 0:
        return False
    G = coords.group
    for a, (i, g, j) in coords.triples():
        for b, (k, h, l) in coords.triples():
            expect = coords.encode(i, G.mul(g, h), l) if j == k else 0
            if S.mul(a, b) != expect:
                return False
    return all(S.mul(0, x) == 0 and S.mul(x, 0) == 0 for x in S.elements())


def restrict_brandt_to(S: FiniteSemigroup, coords: BrandtCoords, K) -> FiniteSemigroup:
    """The subsemigroup {(k,1,l) : k,l in K} u {0} of a Brandt semigroup
    over the trivial group, for a 2-element index subset K."""
    K = sorted(set(K))
    if coords.group.size != 1:
        raise errors.BadSubset("restriction requires a trivial structure group")
    if len(K) != 2 or not all(0 <= k < coords.index_size for k in K):
        raise errors.BadSubset(f"K must be a 2-element subset of the index set, got {K}")
    if not verify_brandt_coords(S, coords):
        raise errors.BadSubset("coordinates do not describe this semigroup")
    members = {0} | {coords.encode(i, 0, j) for i in K for j in K}
    sub, _ = subsemigroup(S, members)
    return sub


# -- builtin-name mini-language -------------------------------------------------

def _lex(text: str):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "(),^":
            tokens.append((ch, ch, i))
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("num", text[i:j], i))
            i = j
        elif ch.isalpha():
            j = i + 1
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("name", text[i:j], i))
            i = j
        else:
            raise errors.BuildSpecError(f"unexpected character {ch!r} at {i}")
    return tokens


class _SpecParser:
    """Recursive descent for the builtin mini-language:
    E, Z<m>, S3, B2, B2^1, <g>x<g>, B(<g>,<k>), <g>^0, P(<g>)."""

    def __init__(self, text: str):
        self.text = text
        self.tokens = _lex(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None, len(self.text))

    def take(self, kind=None):
        tok = self.peek()
        if tok[0] is None or (kind is not None and tok[0] != kind):
            raise errors.BuildSpecError(f"expected {kind or 'token'} at {tok[2]} in {self.text!r}")
        self.pos += 1
        return tok

    def parse(self) -> FiniteSemigroup:
        value = self.expr()
        if self.peek()[0] is not None:
            raise errors.BuildSpecError(f"trailing input at {self.peek()[2]} in {self.text!r}")
        return value

    def expr(self) -> FiniteSemigroup:
        value = self.postfix()
        while self.peek()[:2] == ("name", "x"):
            self.take()
            value = direct_product(value, self.postfix())
        return value

    def postfix(self) -> FiniteSemigroup:
        value = self.primary()
        while self.peek()[0] == "^":
            self.take()
            num = int(self.take("num")[1])
            if num == 0:
                value = adjoin_zero(value)
            elif num == 1:
                value = adjoin_identity(value)
            else:
                raise errors.BuildSpecError(f"only ^0 and ^1 are supported, got ^{num}")
        return value

    def as_group_arg(self) -> GroupTable:
        inner = self.expr()
        try:
            return as_group(inner)
        except errors.NotAGroup as exc:
            raise errors.BuildSpecError(f"argument must be a group: {exc}") from exc

    def primary(self) -> FiniteSemigroup:
        kind, text, at = self.peek()
        if kind == "(":
            self.take()
            value = self.expr()
            self.take(")")
            return value
        if kind != "name":
            raise errors.BuildSpecError(f"expected a builtin name at {at} in {self.text!r}")
        self.take()
        if text == "E":
            return trivial_group().carrier
        if text == "S3":
            return symmetric_group_3().carrier
        if text == "B2":
            return brandt(trivial_group(), 2)[0]
        if text.startswith("Z") and len(text) > 1:
            return cyclic_group(int(text[1:])).carrier
        if text == "B":
            self.take("(")
            G = self.as_group_arg()
            self.take(",")
            k = int(self.take("num")[1])
            self.take(")")
            return brandt(G, k)[0]
        if text == "P":
            self.take("(")
            G = self.as_group_arg()
            self.take(")")
            return powerset_semigroup(G)[0]
        raise errors.BuildSpecError(f"unknown builtin {text!r} at {at}")


def build_named(spec: str) -> FiniteSemigroup:
    """Build a semigroup from its builtin-name description, e.g. "B(Z2xS3,2)"."""
    return _SpecParser(spec).parse()
