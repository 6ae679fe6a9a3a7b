"""Separation of regular elements and classification of the quotients.

For a regular element z of a finite semigroup S, the exclusion ideal
I_z = {u : z not in SuS} and the congruence rho_z (x ~ y when xt and yt
agree modulo I_z for every t in SzS) separate z from anything it can be
separated from, provided S satisfies xyx = (xy)^(n+1) x and
x^n y^n = y^n x^n.  The quotient is then a group, a group with zero, or a
Brandt semigroup; ``classify`` recognizes which, with an explicit witness
isomorphism for the Brandt case.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import errors
from .constructions import brandt
from .core import (
    Congruence,
    ElementSet,
    FiniteSemigroup,
    GroupTable,
    Homomorphism,
    as_group,
    congruence_from_classes,
    identity_homomorphism,
    idempotents,
    inverses_of,
    is_completely_zero_simple,
    is_inverse_semigroup,
    is_regular,
    principal_ideal,
    quotient_by_congruence,
    rees_quotient,
    subsemigroup,
    zero_of,
)
from .words import identity_holds, parse_identity

GROUP = "Group"
GROUP_WITH_ZERO = "GroupWithZero"
BRANDT = "Brandt"
OTHER = "Other"


@dataclass(frozen=True)
class StructureClass:
    """Classification verdict, with a witness isomorphism in the Brandt case."""

    kind: str
    group_part: GroupTable | None = None
    index_size: int | None = None
    witness: Homomorphism | None = None


@dataclass(frozen=True)
class SeparationResult:
    chosen_z: int
    hom: Homomorphism
    quotient_class: StructureClass


@dataclass(frozen=True)
class IdealReport:
    ideal: ElementSet
    contains_regular: bool
    is_inverse: bool | None
    is_completely_zero_simple: bool | None


def excluded_set(S: FiniteSemigroup, z: int) -> ElementSet:
    """I_z = {u : z not in SuS}; an ideal whenever nonempty."""
    members = frozenset(u for u in S.elements()
                        if z not in principal_ideal(S, u).members)
    if is_regular(S, z):
        assert z not in members, "a regular element lies in its own SzS"
    return ElementSet(S, members, is_ideal=bool(members))


def rho_z(S: FiniteSemigroup, z: int) -> Congruence:
    """x ~ y iff for every t in SzS, xt and yt are equal or both in I_z.

    For z = 0 this is the universal congruence; the result is always a
    validated congruence.
    """
    iz = excluded_set(S, z).members
    szs = sorted(principal_ideal(S, z).members)
    groups: dict[tuple, list[int]] = {}
    for x in S.elements():
        sig = tuple(-1 if (xt := S.mul(x, t)) in iz else xt for t in szs)
        groups.setdefault(sig, []).append(x)
    return congruence_from_classes(S, groups.values())


def separation_quotient(S: FiniteSemigroup, z: int) -> tuple[FiniteSemigroup, Homomorphism]:
    """Quotient S by rho_z, collapsing the exclusion ideal first when it is
    bigger than a designated zero."""
    iz = excluded_set(S, z)
    reduced, hom = S, identity_homomorphism(S)
    if iz.members and iz.members != ({S.zero} if S.zero is not None else frozenset()):
        reduced, hom = rees_quotient(S, iz)
    quot, nat = quotient_by_congruence(reduced, rho_z(reduced, hom(z)))
    return quot, hom.then(nat)


def _require_hypothesis(S: FiniteSemigroup, n: int) -> None:
    if n < 1:
        raise errors.InvalidOrder(f"need n >= 1, got {n}")
    red = parse_identity(f"xyx = {'xy' * (n + 1)}x")
    commut = parse_identity(f"x^{n} y^{n} = y^{n} x^{n}")
    for ident in (red, commut):
        verdict = identity_holds(S, ident)
        if not verdict.holds:
            raise errors.HypothesisFails(f"identity {ident} fails",
                                         counterexample=verdict.counterexample)


def separate_regular_pair(S: FiniteSemigroup, a: int, b: int, n: int) -> SeparationResult:
    """A homomorphism separating two distinct regular elements, onto a
    quotient that classifies as Group, GroupWithZero, or Brandt.

    Tries the congruence of a first, then of b; one of the two must
    separate the pair, and this is asserted rather than assumed.
    """
    if a == b:
        raise errors.NotDistinct(f"need two distinct elements, got {a} twice")
    for x in (a, b):
        if not is_regular(S, x):
            raise errors.NotRegular(f"element {x} is not regular")
    _require_hypothesis(S, n)
    for z in (a, b):
        rho = rho_z(S, z)
        if rho.class_of[a] == rho.class_of[b]:
            continue
        quot, hom = separation_quotient(S, z)
        assert hom(a) != hom(b), "the quotient must keep the pair apart"
        verdict = classify(quot)
        assert verdict.kind != OTHER, "the separation quotient must classify"
        return SeparationResult(z, hom, verdict)
    raise AssertionError("one of the two separation congruences must work")


# -- minimal ideals -----------------------------------------------------------

def _ideal_generated_by(S: FiniteSemigroup, u: int) -> frozenset[int]:
    left = {S.mul(s, u) for s in S.elements()}
    right = {S.mul(u, s) for s in S.elements()}
    both = {S.mul(x, t) for x in left for t in S.elements()}
    return frozenset({u} | left | right | both)


def zero_minimal_ideals(S: FiniteSemigroup) -> list[ElementSet]:
    """Minimal nonzero ideals (the least ideal when S has no zero)."""
    z = zero_of(S)
    generated = {_ideal_generated_by(S, u) for u in S.elements() if u != z}
    minimal = [m for m in generated if not any(o < m for o in generated)]
    return [ElementSet(S, m, is_ideal=True)
            for m in sorted(minimal, key=sorted)]


def minimal_ideal_report(S: FiniteSemigroup, n: int) -> list[IdealReport]:
    """Check each minimal ideal with a regular element for the expected
    structure (inverse and completely zero-simple as a sub-semigroup)."""
    _require_hypothesis(S, n)
    out = []
    for ideal in zero_minimal_ideals(S):
        sub, _ = subsemigroup(S, ideal.members)
        regular = any(is_regular(S, m) for m in ideal)
        if regular:
            out.append(IdealReport(ideal, True, is_inverse_semigroup(sub),
                                   is_completely_zero_simple(sub)))
        else:
            out.append(IdealReport(ideal, False, None, None))
    return out


# -- classification ------------------------------------------------------------

def classify(T: FiniteSemigroup) -> StructureClass:
    """Recognize a group, a group with zero, or a Brandt semigroup.

    Arbitrary input is allowed; anything unrecognized comes back as Other,
    never with a fabricated witness.  Brandt coordinates are chosen by
    lowest element index, so witnesses are deterministic.
    """
    try:
        return StructureClass(GROUP, group_part=as_group(T))
    except errors.NotAGroup:
        pass
    z = zero_of(T)
    if z is not None and T.size >= 2:
        try:
            sub, _ = subsemigroup(T, [x for x in T.elements() if x != z])
            return StructureClass(GROUP_WITH_ZERO, group_part=as_group(sub))
        except (errors.NotClosed, errors.NotAGroup):
            pass
    result = _classify_brandt(T, z)
    return result if result is not None else StructureClass(OTHER)


def _classify_brandt(T: FiniteSemigroup, z: int | None) -> StructureClass | None:
    if z is None:
        return None
    if not is_inverse_semigroup(T) or not is_completely_zero_simple(T):
        return None
    idems = sorted(e for e in idempotents(T) if e != z)
    if len(idems) < 2:
        return None
    e = idems[0]
    inverse = {}
    for x in T.elements():
        inv = sorted(inverses_of(T, x).members)
        inverse[x] = inv[0]
    try:
        corner, elems = subsemigroup(
            T, [x for x in T.elements()
                if x != z and T.mul(e, x) == x and T.mul(x, e) == x])
        Q = as_group(corner)
    except (errors.NotClosed, errors.NotAGroup):
        return None
    qpos = {x: i for i, x in enumerate(elems)}
    connectors = []
    for f in idems:
        q = next((x for x in T.elements()
                  if T.mul(x, inverse[x]) == e and T.mul(inverse[x], x) == f), None)
        if q is None:
            return None
        connectors.append(q)
    k = len(idems)
    canon, coords = brandt(Q, k)
    mapping = [0] * T.size
    for x in T.elements():
        if x == z:
            continue
        lefts = [i for i, f in enumerate(idems) if T.mul(f, x) == x]
        rights = [j for j, f in enumerate(idems) if T.mul(x, f) == x]
        if len(lefts) != 1 or len(rights) != 1:
            return None
        i, j = lefts[0], rights[0]
        g = T.mul(T.mul(connectors[i], x), inverse[connectors[j]])
        if g not in qpos:
            return None
        mapping[x] = coords.encode(i, qpos[g], j)
    try:
        witness = Homomorphism(T, canon, tuple(mapping))
    except errors.NotAHomomorphism:
        return None
    if not witness.is_bijective():
        return None
    return StructureClass(BRANDT, group_part=Q, index_size=k, witness=witness)


def classification_report(sc: StructureClass, verbose: bool = False) -> str:
    parts = [f"kind={sc.kind}"]
    if sc.group_part is not None:
        parts.append(f"|Q|={sc.group_part.size}")
    if sc.index_size is not None:
        parts.append(f"|J|={sc.index_size}")
    line = " ".join(parts)
    if verbose and sc.witness is not None:
        rows = "\n".join(" ".join(str(v) for v in row)
                         for row in sc.witness.target.table)
        line += "\nwitness target table:\n" + rows
    return line
