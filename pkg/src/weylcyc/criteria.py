"""Cyclicity and irreducibility tests for ordered tensor products.

The heart of the module is the family of finite sets S(b_m, b_n) of forbidden
parameter differences: if a_n - a_m avoids S(b_m, b_n) for every pair of
positions m < n, the ordered tensor product V_{a_1}(omega_{b_1}) x ... is
generated by the product of its top vectors.  Checking both orders of every
pair upgrades this to an irreducibility test, which in type A is an exact
equivalence.

For type C the S-sets are also derivable from the root sets T(i, r_j) of the
rank-1 polynomials attached to the descent from a top vector to a lowest
vector; `derive_s_from_t` performs that derivation and is cross-checked
against the transcribed tables.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .drinfeld import (
    CRational,
    DrinfeldTuple,
    FundamentalFactor,
    TensorWord,
)
from .rootsys import CartanData, LieType, cartan_data


@dataclass(frozen=True)
class SSet:
    """Finite set of forbidden (real) parameter differences for a node pair.

    Every member is strictly positive; that positivity is what makes any
    ordering by non-increasing real part automatically cyclic.
    """

    values: frozenset[Fraction]

    def __post_init__(self):
        for v in self.values:
            if v <= 0:
                raise ValueError(f"S-set member {v} is not positive")

    def sorted_values(self) -> tuple[Fraction, ...]:
        return tuple(sorted(self.values))

    def __contains__(self, x) -> bool:
        return x in self.values


@dataclass(frozen=True)
class TSet:
    """Root set of the rank-1 polynomial attached to nodes (i, r_j), type C.

    Each entry (scale, shift) stands for the root scale * (a1 + shift), where
    a1 is the spectral parameter of the leading factor.  scale is 1/2 exactly
    for the sets T(i, l) attached to the long node.
    """

    offsets: frozenset[tuple[Fraction, Fraction]]

    def sorted_offsets(self) -> tuple[tuple[Fraction, Fraction], ...]:
        return tuple(sorted(self.offsets))


@dataclass(frozen=True)
class PairViolation:
    """Positions (1-based), their parameter difference, and the set member hit."""

    m: int
    n: int
    diff: CRational
    member: Fraction


@dataclass(frozen=True)
class CyclicityReport:
    cyclic_guaranteed: bool
    violations: tuple[PairViolation, ...]

    def __post_init__(self):
        if self.cyclic_guaranteed != (not self.violations):
            raise ValueError("cyclic_guaranteed must mean exactly 'no violations'")


class IrreducibilityStatus(enum.Enum):
    IRREDUCIBLE_GUARANTEED = "IrreducibleGuaranteed"
    NOT_GUARANTEED = "NotGuaranteed"
    REDUCIBLE_PROVEN = "ReducibleProven"


@dataclass(frozen=True)
class IrreducibilityVerdict:
    status: IrreducibilityStatus
    evidence: tuple[PairViolation, ...]


def s_set(data: CartanData, bm: int, bn: int) -> SSet:
    """The forbidden-difference set S(b_m, b_n) for one ordered node pair."""
    l = data.type.rank
    if not (1 <= bm <= l and 1 <= bn <= l):
        raise ValueError(f"nodes ({bm},{bn}) out of range 1..{l}")
    return _s_set_cached(data.type, bm, bn)


@lru_cache(maxsize=None)
def _s_set_cached(lt: LieType, bm: int, bn: int) -> SSet:
    l = lt.rank
    family = lt.family
    vals: set[Fraction] = set()
    if family == "A":
        # Symmetric in (bm, bn); the bound is min over the pair and its dual.
        k_max = min(bm, bn, l - bm + 1, l - bn + 1)
        half_gap = Fraction(abs(bn - bm), 2)
        vals = {half_gap + k for k in range(1, k_max + 1)}
    elif family == "B":
        if bm < l and bn < l:
            for r in range(min(bm, bn)):
                vals.add(Fraction(abs(bm - bn) + 2 + 2 * r))
                vals.add(Fraction(2 * l - (bm + bn) + 1 + 2 * r))
        elif bm == l and bn < l:
            vals = {Fraction(l - bn + 2 + 2 * r) for r in range(bn)}
        elif bm < l and bn == l:
            for r in range(bm):
                vals.add(Fraction(l - bm + 1 + r))
                vals.add(Fraction(l - bm + r))
        else:
            vals = {Fraction(2 * k + 1) for k in range(l)}
    elif family == "C":
        if bm < l and bn < l:
            for r in range(min(bm, bn)):
                vals.add(Fraction(abs(bm - bn), 2) + 1 + r)
                vals.add(Fraction(l + 2 + r) - Fraction(bm + bn, 2))
        elif bm == l and bn < l:
            for r in range(bn):
                vals.add(Fraction(l - bn + 1, 2) + 1 + r)
                vals.add(Fraction(l - bn - 1, 2) + 1 + r)
        elif bm < l and bn == l:
            vals = {Fraction(l - bm + 1, 2) + 2 + r for r in range(bm)}
        else:
            vals = {Fraction(k) for k in range(2, l + 2)}
    else:  # D
        spin = (l - 1, l)
        lbar = 0 if l % 2 == 0 else 1
        bm_spin, bn_spin = bm in spin, bn in spin
        if not bm_spin and not bn_spin:
            for r in range(min(bm, bn)):
                vals.add(Fraction(abs(bm - bn), 2) + 1 + r)
                vals.add(Fraction(l + r) - Fraction(bm + bn, 2))
        elif bm_spin != bn_spin:
            # Same set whichever spin node is involved and in either order.
            b = bn if bm_spin else bm
            vals = {Fraction(l - 1 - b, 2) + 1 + r for r in range(b)}
        elif bm != bn:
            vals = {Fraction(k) for k in range(2, l - 2 + lbar + 1, 2)}
        else:
            vals = {Fraction(k) for k in range(1, l - 1 - lbar + 1, 2)}
    return SSet(frozenset(vals))


def t_set_C(data: CartanData, i: int, rj: int) -> TSet:
    """Root set T(i, r_j) for type C, as affine offsets of a1."""
    if data.type.family != "C":
        raise ValueError(f"T-sets are tabulated for type C only, got {data.type}")
    l = data.type.rank
    if not (1 <= i <= l and 1 <= rj <= l):
        raise ValueError(f"nodes ({i},{rj}) out of range 1..{l}")
    one = Fraction(1)
    half = Fraction(1, 2)
    entries: set[tuple[Fraction, Fraction]] = set()
    if i < l and rj < l:
        for r in range(min(i, rj)):
            entries.add((one, Fraction(abs(i - rj), 2) + r))
            entries.add((one, Fraction(l + 1 + r) - Fraction(i + rj, 2)))
    elif i < l and rj == l:
        for r in range(i):
            entries.add((half, Fraction(l - i + 1, 2) + r))
    elif i == l and rj < l:
        for r in range(rj):
            entries.add((one, Fraction(l - rj + 1, 2) + r))
            entries.add((one, Fraction(l - rj - 1, 2) + r))
    else:
        for k in range(l):
            entries.add((half, Fraction(k)))
    return TSet(frozenset(entries))


def derive_s_from_t(data: CartanData, bm: int, bn: int) -> SSet:
    """Recover S(b_m, b_n) for type C from the root sets T(b_m, b_n).

    A pair violates cyclicity when a_n / d_{b_n} differs from a root by
    exactly 1, i.e. a_n = d_{b_n} * (1 + root).  Substituting the affine form
    root = scale * (a1 + shift) the a1 terms must cancel, leaving the pure
    rational d + d * scale * shift.
    """
    d = Fraction(data.d[bn - 1])
    members = set()
    for scale, shift in t_set_C(data, bm, bn).offsets:
        a1_coeff = d * scale - 1
        if a1_coeff != 0:
            raise ArithmeticError(
                f"a1 fails to cancel for T({bm},{bn}) entry (scale={scale}, shift={shift})"
            )
        members.add(d + d * scale * shift)
    return SSet(frozenset(members))


def is_cyclic(w: TensorWord) -> CyclicityReport:
    """Check the pairwise sufficient condition for the ordered product to be
    generated by the product of top vectors.

    A pair of positions m < n violates the condition when a_n - a_m is a real
    rational lying in S(b_m, b_n).  No violations guarantees cyclicity; a
    violation does not disprove it (except as sharpened by type A
    irreducibility).
    """
    data = cartan_data(w.type)
    violations = []
    factors = w.factors
    for m in range(len(factors)):
        for n in range(m + 1, len(factors)):
            diff = factors[n].param - factors[m].param
            if diff.is_real:
                forbidden = s_set(data, factors[m].node, factors[n].node)
                if diff.re in forbidden:
                    violations.append(PairViolation(m + 1, n + 1, diff, diff.re))
    return CyclicityReport(not violations, tuple(violations))


def is_irreducible(w: TensorWord) -> IrreducibilityVerdict:
    """Check the pairwise irreducibility criterion over all ordered pairs.

    No violation guarantees irreducibility for every classical type.  With a
    violation, type A words are proven reducible (the criterion is an
    equivalence there); for B/C/D nothing is concluded.
    """
    data = cartan_data(w.type)
    violations = []
    factors = w.factors
    for i in range(len(factors)):
        for j in range(len(factors)):
            if i == j:
                continue
            diff = factors[j].param - factors[i].param
            if diff.is_real:
                forbidden = s_set(data, factors[i].node, factors[j].node)
                if diff.re in forbidden:
                    violations.append(PairViolation(i + 1, j + 1, diff, diff.re))
    if not violations:
        status = IrreducibilityStatus.IRREDUCIBLE_GUARANTEED
    elif w.type.family == "A":
        status = IrreducibilityStatus.REDUCIBLE_PROVEN
    else:
        status = IrreducibilityStatus.NOT_GUARANTEED
    return IrreducibilityVerdict(status, tuple(violations))


def left_dual(w: TensorWord) -> TensorWord:
    """The left dual word: order reversed, nodes sent through the -w0
    involution, parameters shifted down by kappa.

    The kappa shift is informational; it depends on a normalization of the
    dual Coxeter constant that downstream checks do not rely on.
    """
    data = cartan_data(w.type)
    kap = CRational(data.kappa)
    dual = [
        FundamentalFactor(data.involution[f.node - 1], f.param - kap)
        for f in reversed(w.factors)
    ]
    return TensorWord(w.type, tuple(dual))


def weyl_factorize(t: DrinfeldTuple) -> TensorWord:
    """Order the roots of a Drinfeld tuple into a guaranteed-cyclic word.

    Roots are sorted by non-increasing real part, ties by non-increasing
    imaginary part, then ascending node.  Along that order every real
    difference a_n - a_m (n > m) is <= 0, and every S-set member is strictly
    positive, so the resulting word always passes `is_cyclic`.
    """
    items = []
    for node, poly in enumerate(t.polys, start=1):
        for root in poly.roots:
            items.append((root, node))
    if not items:
        raise ValueError("cannot factorize a tuple of total degree zero")
    items.sort(key=lambda p: (-p[0].re, -p[0].im, p[1]))
    return TensorWord(
        t.type, tuple(FundamentalFactor(node, root) for root, node in items)
    )
