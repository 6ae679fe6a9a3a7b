"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

All checks are exact (discrete equalities); the stated time limits are
asserted too.  Run with ``pytest tests/test_acceptance.py -v -s`` to see the
per-criterion lines.
"""

import itertools
import random
import time

from brandtkit.constructions import (
    adjoin_zero,
    brandt,
    cyclic_group,
    group_product,
    phi_homomorphism,
    powerset_semigroup,
    restrict_brandt_to,
    symmetric_group_3,
    trivial_group,
)
from brandtkit.core import find_isomorphism, is_regular
from brandtkit.rewrite import (
    EXP_N,
    EXP_N_RED,
    RewriteTrace,
    cell_decompose,
    derive_bounded,
    eliminate_single_occurrences,
    replay,
    star_word,
)
from brandtkit.structure import (
    BRANDT,
    GROUP,
    GROUP_WITH_ZERO,
    OTHER,
    classify,
    rho_z,
    separate_regular_pair,
    separation_quotient,
)
from brandtkit.words import (
    Identity,
    Word,
    abelian_positive_basis,
    group_satisfies_w_eq_1,
    identity_holds,
    is_repeated,
    ln_identity,
    mirror,
    parse_identity,
    trahtman_basis,
)


class Criterion:
    def __init__(self, num, desc, limit=None):
        self.num, self.desc, self.limit = num, desc, limit

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.t0
        ok = exc_type is None and (self.limit is None or elapsed < self.limit)
        print(f"[criterion {self.num:2d}] {'PASS' if ok else 'FAIL'} "
              f"({elapsed:.2f}s) {self.desc}")
        if exc_type is None and not ok:
            raise AssertionError(
                f"criterion {self.num} took {elapsed:.2f}s, limit {self.limit}s")
        return False


def words_over(variables, max_len):
    for length in range(1, max_len + 1):
        for symbols in itertools.product(variables, repeat=length):
            yield Word(symbols)


_REPEATED = None


def repeated_corpus():
    """Every repeated word over at most 3 variables, length at most 6."""
    global _REPEATED
    if _REPEATED is None:
        _REPEATED = [w for w in words_over(("x", "y", "z"), 6) if is_repeated(w)[0]]
    return _REPEATED


def test_criterion_1_five_element_basis():
    with Criterion(1, "the three-identity basis holds in B2, <=25 evaluations each",
                   limit=1.0):
        B2, _ = brandt(trivial_group(), 2)
        for ident in trahtman_basis():
            verdict = identity_holds(B2, ident)
            assert verdict.holds, str(ident)
            assert verdict.evaluations_checked <= 25


def test_criterion_2_exponent_n_basis():
    with Criterion(2, "exponent-n basis identities hold over Z2, Z3, S3 structure groups",
                   limit=10.0):
        cases = [(cyclic_group(2), 2), (cyclic_group(3), 3), (symmetric_group_3(), 6)]
        for G, n in cases:
            S, _ = brandt(G, 2)
            idents = [parse_identity(f"x^2 = x^{n + 2}"),
                      parse_identity(f"xyx = {'xy' * (n + 1)}x"),
                      parse_identity(f"x^{n} y^{n} = y^{n} x^{n}")]
            for ident in idents:
                assert identity_holds(S, ident).holds, f"{ident} over |G|={G.size}"
        # w^2 = w for the abelian positive basis words
        for m in (2, 4):
            S, _ = brandt(cyclic_group(m), 2)
            for w in abelian_positive_basis(m).words:
                assert identity_holds(S, Identity(w * w, w)).holds, str(w)


def test_criterion_3_identity_transfer_equivalence():
    with Criterion(3, "holds(B(G,2)) iff holds(G) and holds(B2), all short identities",
                   limit=60.0):
        B2, _ = brandt(trivial_group(), 2)
        words = list(words_over(("x", "y"), 5))
        for G in (cyclic_group(2), symmetric_group_3()):
            BG, _ = brandt(G, 2)
            for lhs in words:
                for rhs in words:
                    ident = Identity(lhs, rhs)
                    combined = identity_holds(BG, ident).holds
                    split = (identity_holds(G.carrier, ident).holds
                             and identity_holds(B2, ident).holds)
                    assert combined == split, f"{ident} over |G|={G.size}"


def test_criterion_4_group_law_idempotent_square():
    with Criterion(4, "Z2 |= w=1 implies B(Z2,2) |= w^2=w, all words to length 6",
                   limit=30.0):
        G = cyclic_group(2)
        S, _ = brandt(G, 2)
        checked = 0
        for w in words_over(("x", "y"), 6):
            if group_satisfies_w_eq_1(G, w).holds:
                checked += 1
                assert identity_holds(S, Identity(w * w, w)).holds, str(w)
        assert checked > 0


def test_criterion_5_powerset_construction():
    with Criterion(5, "power-set semigroup, collapsing homomorphism, and restriction"):
        S, _ = powerset_semigroup(cyclic_group(2))
        assert S.size == 6  # associativity is validated on construction
        hom = phi_homomorphism(cyclic_group(2))
        assert hom.source.size == 6 and hom.target.size == 5
        assert hom.is_surjective()
        B2, _ = brandt(trivial_group(), 2)
        assert find_isomorphism(hom.target, B2) is not None
        fibers = {}
        for x, v in enumerate(hom.map):
            fibers.setdefault(v, []).append(x)
        assert len(fibers[0]) == 2
        assert all(len(fibers[v]) == 1 for v in range(1, 5))
        big, coords = brandt(trivial_group(), 3)
        for K in itertools.combinations(range(3), 2):
            sub = restrict_brandt_to(big, coords, K)
            assert find_isomorphism(sub, B2) is not None, K


def test_criterion_6_rewrite_soundness():
    with Criterion(6, "cell decompositions replay and preserve values in B(Z2,2)",
                   limit=60.0):
        S, _ = brandt(cyclic_group(2), 2)
        for w in repeated_corpus():
            prepared, t1 = eliminate_single_occurrences(w, 2)
            form, t2 = cell_decompose(prepared, 2)
            combined = RewriteTrace(t1.steps + t2.steps)
            assert all(s.tag in (EXP_N, EXP_N_RED) for s in combined.steps)
            if combined.steps:
                assert replay(combined, w) == form.flatten()
            else:
                assert form.flatten() == w
            assert identity_holds(S, Identity(w, form.flatten())).holds, str(w)


def test_criterion_7_regularity_witness():
    with Criterion(7, "h h* h = h and h* h h* = h* for the whole word corpus"):
        cases = [(brandt(cyclic_group(2), 2)[0], 2), (brandt(cyclic_group(3), 2)[0], 3)]
        for S, n in cases:
            for w in repeated_corpus():
                prepared, _ = eliminate_single_occurrences(w, n)
                form, _ = cell_decompose(prepared, n)
                h = form.flatten()
                star = star_word(form)
                # the transformations preserve values, and the star word
                # makes the flattened form regular
                assert identity_holds(S, Identity(w, prepared)).holds, str(w)
                assert identity_holds(S, Identity(w, h)).holds, str(w)
                assert identity_holds(S, Identity(h * star * h, h)).holds, str(w)
                assert identity_holds(S, Identity(star * h * star, star)).holds, str(w)


def test_criterion_8_separation_shadow():
    with Criterion(8, "separation congruences and quotients on B2, B(Z2,2), Z4^0"):
        B2, coords = brandt(trivial_group(), 2)
        cases = [(B2, 2), (brandt(cyclic_group(2), 2)[0], 2),
                 (adjoin_zero(cyclic_group(4).carrier), 4)]
        for S, n in cases:
            regulars = [z for z in S.elements() if is_regular(S, z)]
            for z in regulars:
                if z == S.zero:
                    continue
                rho = rho_z(S, z)  # validated congruence by construction
                quot, _ = separation_quotient(S, z)
                kind = classify(quot).kind
                assert kind in (GROUP, GROUP_WITH_ZERO, BRANDT), (z, kind)
            for a, b in itertools.combinations(regulars, 2):
                res = separate_regular_pair(S, a, b, n)
                assert res.hom(a) != res.hom(b)
                assert res.quotient_class.kind != OTHER
        z = coords.encode(0, 0, 0)
        rho = rho_z(B2, z)
        assert rho.class_count == B2.size  # the equality congruence
        quot, _ = separation_quotient(B2, z)
        assert find_isomorphism(quot, B2) is not None


def test_criterion_9_classification_round_trip():
    with Criterion(9, "classify returns the construction parameters"):
        cases = [(trivial_group(), 2), (cyclic_group(2), 2),
                 (cyclic_group(3), 3), (symmetric_group_3(), 2)]
        for G, k in cases:
            S, _ = brandt(G, k)
            sc = classify(S)
            assert sc.kind == BRANDT and sc.index_size == k
            assert find_isomorphism(sc.group_part.carrier, G.carrier) is not None
            assert sc.witness is not None and sc.witness.is_bijective()
        assert classify(cyclic_group(4).carrier).kind == GROUP
        assert classify(adjoin_zero(cyclic_group(4).carrier)).kind == GROUP_WITH_ZERO


def test_criterion_10_palindromic_family():
    with Criterion(10, "L1..L4 hold in B2; L1..L3 hold in B(Z2xS3,2)", limit=120.0):
        B2, _ = brandt(trivial_group(), 2)
        for n in (1, 2, 3, 4):
            assert identity_holds(B2, ln_identity(n)).holds, f"L{n} in B2"
        G = group_product(cyclic_group(2), symmetric_group_3())
        S, _ = brandt(G, 2)
        assert S.size == 49
        for n in (1, 2, 3):
            assert identity_holds(S, ln_identity(n)).holds, f"L{n} in B(Z2xS3,2)"


def test_criterion_11_abelian_extras_and_derivation():
    with Criterion(11, "abelian identities hold; commuting factors derivable"):
        extras = [parse_identity("x^2 y^2 = y^2 x^2"),
                  parse_identity("xyxzx = xzxyx")]
        for S in (brandt(trivial_group(), 2)[0], brandt(cyclic_group(4), 2)[0]):
            for ident in extras:
                assert identity_holds(S, ident).holds, str(ident)
        trace = derive_bounded(parse_identity("xyxzx = xzxyx"), trahtman_basis())
        assert trace is not None
        assert replay(trace, Word(tuple("xyxzx"))) == Word(tuple("xzxyx"))


def test_criterion_12_mirror_duality():
    with Criterion(12, "mirror duality on 200 sampled identities over B(Z2,2)"):
        rng = random.Random(1202)
        S, _ = brandt(cyclic_group(2), 2)
        variables = ("x", "y", "z")
        for _ in range(200):
            p = Word(tuple(rng.choice(variables)
                           for _ in range(rng.randint(1, 6))))
            q = Word(tuple(rng.choice(variables)
                           for _ in range(rng.randint(1, 6))))
            direct = identity_holds(S, Identity(p, q)).holds
            mirrored = identity_holds(S, Identity(mirror(p), mirror(q))).holds
            assert direct == mirrored, f"{p} = {q}"
