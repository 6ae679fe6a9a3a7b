"""Rewriting words into products of cells, and bounded derivation search.

The two rewrite rules used by the structural transformations are, for a
fixed exponent n:

    EXP_N      x^2 = x^(n+2)
    EXP_N_RED  xyx = (xy)^(n+1) x

Both preserve the value of a word in any semigroup satisfying them, so
every transformation here carries a replayable trace of single rule
applications.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import errors
from .words import Identity, Word, is_repeated, parse_word


def exp_n_rule(n: int) -> Identity:
    if n < 1:
        raise errors.InvalidOrder(f"need n >= 1, got {n}")
    return Identity(parse_word("x^2"), parse_word(f"x^{n + 2}"))


def exp_n_red_rule(n: int) -> Identity:
    if n < 1:
        raise errors.InvalidOrder(f"need n >= 1, got {n}")
    return Identity(parse_word("xyx"), (parse_word("xy") ** (n + 1)) * parse_word("x"))


EXP_N = "EXP_N"
EXP_N_RED = "EXP_N_RED"
L2R = "L2R"
R2L = "R2L"


@dataclass(frozen=True)
class RewriteStep:
    rule: Identity
    tag: str
    direction: str
    position: int
    subst: dict[str, Word]
    before: Word
    after: Word


@dataclass(frozen=True)
class RewriteTrace:
    steps: tuple[RewriteStep, ...]

    def __len__(self):
        return len(self.steps)


def format_trace(trace: RewriteTrace) -> str:
    return "\n".join(
        f"step {i}: {s.before} --[{s.tag},{s.direction},{s.position}]--> {s.after}"
        for i, s in enumerate(trace.steps))


def _substitute(side: Word, substitution: dict[str, Word]) -> tuple[str, ...]:
    out: list[str] = []
    for s in side.symbols:
        if s not in substitution:
            raise errors.NoMatch(f"substitution misses rule variable {s!r}")
        out.extend(substitution[s].symbols)
    return tuple(out)


def apply_rule_at(w: Word, rule: Identity, position: int,
                  substitution: dict[str, Word], direction: str = L2R) -> Word:
    """Replace one substituted instance of a rule side at a fixed position."""
    if direction not in (L2R, R2L):
        raise errors.NoMatch(f"unknown direction {direction!r}")
    src, dst = (rule.lhs, rule.rhs) if direction == L2R else (rule.rhs, rule.lhs)
    pattern = _substitute(src, substitution)
    if position < 0 or w.symbols[position:position + len(pattern)] != pattern:
        raise errors.NoMatch(
            f"rule side {Word(pattern)} does not match {w} at {position}")
    replacement = _substitute(dst, substitution)
    return Word(w.symbols[:position] + replacement
                + w.symbols[position + len(pattern):])


def replay(trace: RewriteTrace, start: Word | None = None) -> Word:
    """Re-run a trace step by step, checking every recorded word."""
    if start is None:
        if not trace.steps:
            raise errors.NoMatch("cannot replay an empty trace without a start word")
        start = trace.steps[0].before
    cur = start
    for step in trace.steps:
        if cur != step.before:
            raise errors.NoMatch(f"trace discontinuity: {cur} != {step.before}")
        cur = apply_rule_at(cur, step.rule, step.position, step.subst, step.direction)
        if cur != step.after:
            raise errors.NoMatch(f"recorded step result {step.after} is wrong")
    return cur


# -- single-occurrence elimination ------------------------------------------------

def _positions(symbols: tuple[str, ...]) -> dict[str, list[int]]:
    pos: dict[str, list[int]] = {}
    for i, s in enumerate(symbols):
        pos.setdefault(s, []).append(i)
    return pos


def eliminate_single_occurrences(w: Word, n: int) -> tuple[Word, RewriteTrace]:
    """Rewrite until every variable occurs at least twice.

    Requires a repeated word.  Each step picks the leftmost variable with a
    single occurrence and blows up its minimal-span enclosing cell z p z to
    (zp)^(n+1) z; this multiplies every occurrence inside p, so the loop
    terminates after at most one step per variable.
    """
    ok, witness = is_repeated(w)
    if not ok:
        raise errors.NotRepeated(f"variable {witness!r} lies in no cell of {w}")
    rule = exp_n_red_rule(n)
    steps: list[RewriteStep] = []
    cur = w.symbols
    while True:
        pos = _positions(cur)
        singles = [occ[0] for occ in pos.values() if len(occ) == 1]
        if not singles:
            break
        t = min(singles)
        best = None  # (span, -left, z)
        for z, occ in pos.items():
            if cur[t] == z:
                continue
            left = max((p for p in occ if p < t), default=None)
            right = min((p for p in occ if p > t), default=None)
            if left is None or right is None:
                continue
            key = (right - left, -left)
            if best is None or key < best[0]:
                best = (key, left, right, z)
        assert best is not None, "repeated words always provide an enclosing cell"
        _, left, right, z = best
        body = cur[left + 1:right]
        before = Word(cur)
        subst = {"x": Word((z,)), "y": Word(body)}
        after = apply_rule_at(before, rule, left, subst, L2R)
        steps.append(RewriteStep(rule, EXP_N_RED, L2R, left, subst, before, after))
        cur = after.symbols
    return Word(cur), RewriteTrace(tuple(steps))


# -- cell decomposition --------------------------------------------------------------

@dataclass(frozen=True)
class CellForm:
    """A word written as a product of cells y1 p1 y1 . y2 p2 y2 ... yk pk yk.

    Cell heads are pairwise distinct; bodies may be empty and may mention
    heads of other cells.  ``exponent_n`` records the rule exponent the
    decomposition was computed with.
    """

    cells: tuple[tuple[str, tuple[str, ...]], ...]
    exponent_n: int

    def __post_init__(self):
        if not self.cells:
            raise errors.HasSingleOccurrence("a cell form needs at least one cell")
        heads = [y for y, _ in self.cells]
        if len(set(heads)) != len(heads):
            raise errors.HasSingleOccurrence("cell heads must be pairwise distinct")

    def flatten(self) -> Word:
        out: list[str] = []
        for y, p in self.cells:
            out.append(y)
            out.extend(p)
            out.append(y)
        return Word(tuple(out))

    def __str__(self):
        return "".join(f"({y}|{''.join(p)})" for y, p in self.cells)


def cell_decompose(w: Word, n: int) -> tuple[CellForm, RewriteTrace]:
    """Greedily cut a word (every variable occurring at least twice) into cells.

    The head of the next cell is the leftmost symbol of the unprocessed
    remainder.  If it occurs again in the remainder, the cell ends at its
    rightmost occurrence there.  Otherwise its rightmost earlier occurrence
    sits inside the body of some emitted cell; the factor from that
    occurrence through the remainder head is a z p z cell, which one
    EXP_N_RED step blows up so that the emitted cells re-split with a fresh
    trailing cell (z, p) and a strictly shorter remainder.
    """
    counts = _positions(w.symbols)
    for s, occ in counts.items():
        if len(occ) == 1:
            raise errors.HasSingleOccurrence(
                f"variable {s!r} occurs once; eliminate single occurrences first")
    rule = exp_n_red_rule(n)
    word = w.symbols
    cells: list[tuple[str, tuple[str, ...]]] = []
    steps: list[RewriteStep] = []
    done = 0  # length of the flattened emitted cells
    while done < len(word):
        z = word[done]
        last = next((i for i in range(len(word) - 1, done, -1) if word[i] == z), None)
        if last is not None:
            cells.append((z, word[done + 1:last]))
            done = last + 1
            continue
        # z heads the remainder but occurs there only once; find its
        # rightmost occurrence inside the emitted cells
        a = max(i for i in range(done) if word[i] == z)
        body = word[a + 1:done]
        before = Word(word)
        subst = {"x": Word((z,)), "y": Word(body)}
        after = apply_rule_at(before, rule, a, subst, L2R)
        steps.append(RewriteStep(rule, EXP_N_RED, L2R, a, subst, before, after))
        word = after.symbols
        # locate the cell whose body contains position a and re-split
        start = 0
        for t, (head, p) in enumerate(cells):
            if start < a <= start + len(p):
                offset = a - start - 1
                r, s = p[:offset], p[offset + 1:]
                new_body = r + ((z,) + body) * (n - 1) + (z,) + s
                cells[t] = (head, new_body)
                break
            start += len(p) + 2
        else:
            raise AssertionError("rewrite position must fall inside a cell body")
        cells.append((z, body))
        done = sum(len(p) + 2 for _, p in cells)
    form = CellForm(tuple(cells), n)
    assert form.flatten().symbols == word
    return form, RewriteTrace(tuple(steps))


def star_word(cf: CellForm) -> Word:
    """(pk yk)^(2n-2) pk . ... . (p1 y1)^(2n-2) p1, the cells reversed.

    For n = 1 the power is zero and each fragment degenerates to its body,
    so a form whose bodies are all empty has no star word.
    """
    n = cf.exponent_n
    out: list[str] = []
    for y, p in reversed(cf.cells):
        out.extend((p + (y,)) * (2 * n - 2))
        out.extend(p)
    if not out:
        raise errors.EmptyStar("every body is empty and n = 1: the star word is empty")
    return Word(tuple(out))


# -- bounded derivation search ----------------------------------------------------

def _match_at(word: tuple[str, ...], pattern: tuple[str, ...], pos: int,
              max_length: int):
    """All substitutions making the pattern equal word[pos:pos+...]."""
    results = []

    def rec(pi: int, wi: int, binding: dict[str, tuple[str, ...]]):
        if pi == len(pattern):
            results.append((dict(binding), wi))
            return
        v = pattern[pi]
        bound = binding.get(v)
        if bound is not None:
            if word[wi:wi + len(bound)] == bound:
                rec(pi + 1, wi + len(bound), binding)
            return
        for length in range(1, max_length + 1):
            if wi + length > len(word):
                break
            binding[v] = word[wi:wi + length]
            rec(pi + 1, wi + length, binding)
            del binding[v]

    rec(0, pos, {})
    return results


def _neighbors(word: tuple[str, ...], basis: list[Identity], max_length: int):
    """All single-step rewrites of a word, with the step data to replay them."""
    out = {}
    for ri, rule in enumerate(basis):
        for direction in (L2R, R2L):
            src, dst = (rule.lhs, rule.rhs) if direction == L2R else (rule.rhs, rule.lhs)
            if not dst.alphabet() <= src.alphabet():
                continue  # a fresh variable on the target side is unbounded
            for pos in range(len(word)):
                for binding, end in _match_at(word, src.symbols, pos, max_length):
                    img: list[str] = []
                    for s in dst.symbols:
                        img.extend(binding[s])
                    nxt = word[:pos] + tuple(img) + word[end:]
                    out.setdefault(nxt, (ri, direction, pos, binding))
    return sorted(out.items())


def derive_bounded(ident: Identity, basis: list[Identity],
                   max_steps: int = 10_000, max_length: int = 4) -> RewriteTrace | None:
    """Search for a chain of rule applications joining the two sides.

    Bidirectional breadth-first search over words reachable by single rule
    applications in either direction; substitution images are capped at
    ``max_length`` symbols and ``max_steps`` bounds the number of expanded
    words.  Returns a shortest replayable trace, ties broken by the
    lexicographically least meeting word, or None (which proves nothing).
    If the expansion budget runs out after a meeting word was found, the
    best one seen so far is returned.
    """
    start, goal = ident.lhs.symbols, ident.rhs.symbols
    if start == goal:
        return RewriteTrace(())

    parents = ({start: None}, {goal: None})  # word -> (prev word, step data)
    dist = ({start: 0}, {goal: 0})
    frontiers = ([start], [goal])
    depth = [0, 0]
    expansions = 0
    best: tuple[int, tuple[str, ...]] | None = None  # (total length, meet)

    def build_trace(meet: tuple[str, ...]) -> RewriteTrace:
        fwd: list[tuple] = []
        node = meet
        while parents[0][node] is not None:
            prev, data = parents[0][node]
            fwd.append((prev, data))
            node = prev
        fwd.reverse()
        bwd: list[tuple] = []
        node = meet
        while parents[1][node] is not None:
            prev, data = parents[1][node]
            ri, direction, pos, binding = data
            flipped = (ri, R2L if direction == L2R else L2R, pos, binding)
            bwd.append((node, flipped))
            node = prev
        steps: list[RewriteStep] = []
        cur = Word(start)
        for _, (ri, direction, pos, binding) in fwd + bwd:
            rule = basis[ri]
            subst = {v: Word(img) for v, img in binding.items()}
            nxt = apply_rule_at(cur, rule, pos, subst, direction)
            steps.append(RewriteStep(rule, str(rule), direction, pos, subst, cur, nxt))
            cur = nxt
        assert cur.symbols == goal
        return RewriteTrace(tuple(steps))

    out_of_budget = False
    while frontiers[0] and frontiers[1] and not out_of_budget:
        # once the two completed search depths straddle the best total, no
        # unseen meeting word can be on a strictly shorter chain
        if best is not None and depth[0] + depth[1] + 1 >= best[0]:
            break
        side = 0 if len(frontiers[0]) <= len(frontiers[1]) else 1
        nxt_frontier: list[tuple[str, ...]] = []
        for node in sorted(frontiers[side]):
            if expansions >= max_steps:
                out_of_budget = True
                break
            expansions += 1
            for nxt, data in _neighbors(node, basis, max_length):
                if nxt in parents[side]:
                    continue
                parents[side][nxt] = (node, data)
                dist[side][nxt] = depth[side] + 1
                nxt_frontier.append(nxt)
                if nxt in parents[1 - side]:
                    candidate = (dist[0][nxt] + dist[1][nxt], nxt)
                    if best is None or candidate < best:
                        best = candidate
        depth[side] += 1
        frontiers = (nxt_frontier, frontiers[1]) if side == 0 else (frontiers[0], nxt_frontier)
    return build_trace(best[1]) if best is not None else None
