"""Words over variable alphabets, identities, and exhaustive checking.

Grammar: a word is a sequence of factors ``var`` or ``var^k`` (k >= 1),
whitespace ignored; a variable is an ASCII letter followed by optional
digits; an identity is ``word = word``.

Satisfaction is decided by brute force: every assignment of the variables
into the semigroup is enumerated in lexicographic order (variables sorted
by name, first variable most significant), so the reported counterexample
is always the lexicographically first one.  The enumeration runs in a
compiled kernel when available (see ``_kernel``), and may be partitioned
across worker processes with ``jobs``; workers reduce by minimum index, so
results do not depend on scheduling.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import _kernel, errors
from .constructions import BrandtCoords, verify_brandt_coords
from .core import FiniteSemigroup, GroupTable

DEFAULT_BUDGET = 10 ** 8

Evaluation = dict  # variable name -> element index


@dataclass(frozen=True)
class Word:
    """A nonempty sequence of variable names."""

    symbols: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(self.symbols))
        if not self.symbols:
            raise errors.ParseError("a word must be nonempty")
        for s in self.symbols:
            if not _is_var(s):
                raise errors.ParseError(f"bad variable name {s!r}")

    def alphabet(self) -> frozenset[str]:
        return frozenset(self.symbols)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.symbols + other.symbols)

    def __pow__(self, k: int) -> "Word":
        if k < 1:
            raise errors.ZeroPower(f"cannot raise a word to the power {k}")
        return Word(self.symbols * k)

    def __len__(self) -> int:
        return len(self.symbols)

    def __str__(self) -> str:
        return "".join(self.symbols)


@dataclass(frozen=True)
class Identity:
    lhs: Word
    rhs: Word

    def variables(self) -> frozenset[str]:
        return self.lhs.alphabet() | self.rhs.alphabet()

    def __str__(self) -> str:
        return f"{self.lhs} = {self.rhs}"


@dataclass(frozen=True)
class PositiveBasis:
    """Words w, each read as the group identity w = 1."""

    words: tuple[Word, ...]

    def __post_init__(self):
        object.__setattr__(self, "words", tuple(self.words))
        if not self.words:
            raise errors.ParseError("a positive basis must be nonempty")


@dataclass(frozen=True)
class Verdict:
    """Outcome of an exhaustive check.

    ``counterexample`` is (assignment, lhs value, rhs value); it is present
    exactly when the identity fails, and the assignment is the
    lexicographically first failing one.
    """

    holds: bool
    counterexample: tuple[Evaluation, int, int] | None
    evaluations_checked: int

    def __post_init__(self):
        assert self.holds == (self.counterexample is None)


def _is_var(s: str) -> bool:
    return (len(s) >= 1 and s[0].isascii() and s[0].isalpha()
            and all(c.isdigit() for c in s[1:]))


# -- parsing -----------------------------------------------------------------

def parse_word(text: str) -> Word:
    symbols: list[str] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if not (ch.isascii() and ch.isalpha()):
            raise errors.ParseError(f"unexpected character {ch!r}", i)
        j = i + 1
        while j < n and text[j].isdigit():
            j += 1
        var = text[i:j]
        i = j
        power = 1
        if i < n and text[i] == "^":
            i += 1
            j = i
            while j < n and text[j].isdigit():
                j += 1
            if j == i:
                raise errors.ParseError("expected an exponent after '^'", i)
            power = int(text[i:j])
            if power == 0:
                raise errors.ZeroPower("the power 0 is not allowed", i)
            i = j
        symbols.extend([var] * power)
    if not symbols:
        raise errors.ParseError("empty word", 0)
    return Word(tuple(symbols))


def parse_identity(text: str) -> Identity:
    if text.count("=") != 1:
        raise errors.ParseError("an identity needs exactly one '='", text.find("="))
    left, right = text.split("=")
    return Identity(parse_word(left), parse_word(right))


def parse_positive_basis(text: str) -> PositiveBasis:
    """One word per line; '#' lines are comments."""
    words = [parse_word(ln) for ln in text.splitlines()
             if ln.strip() and not ln.lstrip().startswith("#")]
    return PositiveBasis(tuple(words))


# -- evaluation and exhaustive checking ---------------------------------------

def evaluate(S: FiniteSemigroup, w: Word, assignment: Evaluation) -> int:
    """Fold the word through the table left to right."""
    try:
        v = assignment[w.symbols[0]]
        for s in w.symbols[1:]:
            v = S.mul(v, assignment[s])
    except KeyError as exc:
        raise errors.UnassignedVariable(f"variable {exc.args[0]!r} has no value") from exc
    return v


def _codes(w: Word, position: dict[str, int]) -> np.ndarray:
    return np.array([position[s] for s in w.symbols], dtype=np.int64)


def _decode_assignment(index: int, variables: list[str], n: int) -> Evaluation:
    digits = {}
    for v in reversed(range(len(variables))):
        digits[variables[v]] = index % n
        index //= n
    return {v: digits[v] for v in variables}


def _worker_equal(payload):
    table, n, lhs, rhs, k, start, stop = payload
    return _kernel.check_words_equal(table, n, lhs, rhs, k, start, stop)


def _worker_constant(payload):
    table, n, codes, k, target, start, stop = payload
    return _kernel.check_word_constant(table, n, codes, k, target, start, stop)


def _split_ranges(total: int, jobs: int):
    step = -(-total // jobs)
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]


def _first_failure(worker, static_args, total: int, jobs: int) -> int:
    if jobs <= 1 or total < 2 * jobs:
        return worker(static_args + (0, total))
    payloads = [static_args + (lo, hi) for lo, hi in _split_ranges(total, jobs)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for res in pool.map(_worker_equal if worker is _worker_equal else _worker_constant,
                            payloads):
            if res >= 0:
                return res
    return -1


def _check_budget(n: int, k: int, budget: int | None) -> int:
    total = n ** k
    limit = DEFAULT_BUDGET if budget is None else budget
    if total > limit:
        raise errors.BudgetExceeded(total, limit)
    return total


def identity_holds(S: FiniteSemigroup, ident: Identity,
                   budget: int | None = None, jobs: int = 1) -> Verdict:
    """Check an identity by enumerating every assignment into S."""
    variables = sorted(ident.variables())
    n = S.size
    total = _check_budget(n, len(variables), budget)
    position = {v: i for i, v in enumerate(variables)}
    args = (S.flat, n, _codes(ident.lhs, position), _codes(ident.rhs, position),
            len(variables))
    first = _first_failure(_worker_equal, args, total, jobs)
    if first < 0:
        return Verdict(True, None, total)
    assignment = _decode_assignment(first, variables, n)
    return Verdict(False,
                   (assignment,
                    evaluate(S, ident.lhs, assignment),
                    evaluate(S, ident.rhs, assignment)),
                   first + 1)


def group_satisfies_w_eq_1(G: GroupTable, w: Word,
                           budget: int | None = None, jobs: int = 1) -> Verdict:
    """Check that every evaluation of w in the group gives the identity element."""
    variables = sorted(w.alphabet())
    n = G.size
    total = _check_budget(n, len(variables), budget)
    position = {v: i for i, v in enumerate(variables)}
    args = (G.carrier.flat, n, _codes(w, position), len(variables), G.identity)
    first = _first_failure(_worker_constant, args, total, jobs)
    if first < 0:
        return Verdict(True, None, total)
    assignment = _decode_assignment(first, variables, n)
    return Verdict(False,
                   (assignment, evaluate(G.carrier, w, assignment), G.identity),
                   first + 1)


# -- identity families ---------------------------------------------------------

def _w(text: str) -> Word:
    return parse_word(text)


def trahtman_basis() -> list[Identity]:
    """Trahtman's three-identity basis for the 5-element Brandt semigroup."""
    return [parse_identity("x^2 = x^3"),
            parse_identity("xyx = xyxyx"),
            parse_identity("x^2 y^2 = y^2 x^2")]


def brandt_basis(n: int, positive_basis: PositiveBasis) -> list[Identity]:
    """The identity basis for a Brandt semigroup over a group of exponent n,
    given a positive basis {w = 1} of the group: w^2 = w for each basis
    word, then x^2 = x^(n+2), xyx = (xy)^(n+1) x, and x^n y^n = y^n x^n."""
    if n < 1:
        raise errors.InvalidOrder(f"exponent must be >= 1, got {n}")
    out = [Identity(w * w, w) for w in positive_basis.words]
    out.append(Identity(_w("x^2"), _w(f"x^{n + 2}")))
    out.append(Identity(_w("xyx"), (_w("xy") ** (n + 1)) * _w("x")))
    out.append(Identity(_w(f"x^{n} y^{n}"), _w(f"y^{n} x^{n}")))
    return out


def abelian_brandt_basis(n: int) -> list[Identity]:
    """The explicit four-identity basis for Brandt semigroups over abelian
    groups of exponent n."""
    if n < 1:
        raise errors.InvalidOrder(f"exponent must be >= 1, got {n}")
    return [Identity(_w("x^2"), _w(f"x^{n + 2}")),
            Identity(_w("xyx"), (_w("xy") ** (n + 1)) * _w("x")),
            parse_identity("x^2 y^2 = y^2 x^2"),
            parse_identity("xyxzx = xzxyx")]


def ln_identity(n: int) -> Identity:
    """The n-th member of the family x^2 y1..yn yn..y1 = y1..yn yn..y1 x^2."""
    if n < 1:
        raise errors.InvalidOrder(f"need n >= 1, got {n}")
    ys = tuple(f"y{i}" for i in range(1, n + 1))
    tail = ys + ys[::-1]
    return Identity(Word(("x", "x") + tail), Word(tail + ("x", "x")))


def abelian_positive_basis(n: int) -> PositiveBasis:
    """{x^n, x y x^(n-1) y^(n-1)}: a positive basis for abelian groups of
    exponent n (the second word is the commutator, since x^(n-1) = x^-1)."""
    if n < 2:
        raise errors.InvalidOrder(f"need exponent >= 2, got {n}")
    return PositiveBasis((_w(f"x^{n}"), _w(f"x y x^{n - 1} y^{n - 1}")))


# -- word structure -------------------------------------------------------------

def is_repeated(w: Word) -> tuple[bool, str | None]:
    """Whether every variable occurs inside some factor y..y (a cell).

    A variable with two occurrences sits in its own cell; a variable with a
    single occurrence must be strictly flanked by two occurrences of some
    other variable.  Returns the first violating variable (in order of
    first occurrence) as witness.
    """
    positions: dict[str, list[int]] = {}
    order: list[str] = []
    for i, s in enumerate(w.symbols):
        if s not in positions:
            positions[s] = []
            order.append(s)
        positions[s].append(i)
    for s in order:
        occ = positions[s]
        if len(occ) >= 2:
            continue
        t = occ[0]
        if not any(p[0] < t < p[-1] for v, p in positions.items() if v != s):
            return False, s
    return True, None


def mirror(w: Word) -> Word:
    return Word(w.symbols[::-1])


def split_identity(S: FiniteSemigroup, ident: Identity, y: str,
                   coords: BrandtCoords):
    """Split a true identity u'yu'' = v at a variable y that occurs once on
    the left with disjoint flank alphabets.

    Locates the unique occurrence of y on the right whose flanks have the
    same alphabets as u' and u'', and checks the flank identities
    u' = v' and u'' = v'' hold as well.  Returns (u', u'', v', v''); empty
    flanks are returned as None.

    Only semigroups constructed as B(G, I) are accepted (the conclusion can
    fail elsewhere); pass the coordinates that came with the construction.
    Raises NoValidSplit when the input identity does not actually hold, in
    which case the counterexample is attached.
    """
    if not isinstance(coords, BrandtCoords) or not verify_brandt_coords(S, coords):
        raise errors.HypothesisViolated(
            "split requires a semigroup constructed as B(G,I), with its coordinates")
    lhs, rhs = ident.lhs.symbols, ident.rhs.symbols
    occurrences = [i for i, s in enumerate(lhs) if s == y]
    if len(occurrences) != 1:
        raise errors.HypothesisViolated(
            f"{y!r} must occur exactly once on the left, found {len(occurrences)}")
    t = occurrences[0]
    u1, u2 = lhs[:t], lhs[t + 1:]
    if set(u1) & set(u2):
        raise errors.HypothesisViolated("the flanks of the left side share a variable")
    verdict = identity_holds(S, ident)
    if not verdict.holds:
        raise errors.NoValidSplit("the identity does not hold in this semigroup",
                                  counterexample=verdict.counterexample)
    splits = []
    for t2, s in enumerate(rhs):
        if s != y:
            continue
        v1, v2 = rhs[:t2], rhs[t2 + 1:]
        if set(v1) == set(u1) and set(v2) == set(u2):
            splits.append((v1, v2))
    if not splits:
        raise errors.NoValidSplit("no occurrence of the variable admits the split")
    assert len(splits) == 1, "a true identity admits exactly one split"
    v1, v2 = splits[0]
    for a, b in ((u1, v1), (u2, v2)):
        if a:
            sub = identity_holds(S, Identity(Word(a), Word(b)))
            assert sub.holds, f"flank identity {Word(a)} = {Word(b)} must hold"
    return (Word(u1) if u1 else None, Word(u2) if u2 else None,
            Word(v1) if v1 else None, Word(v2) if v2 else None)
