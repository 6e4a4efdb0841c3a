"""Monomial ideals in F[y_0, z_0, ..., y_{f-1}, z_{f-1}] and generic rings.

Variable order is y_0 < z_0 < ... < y_{f-1} < z_{f-1} (index 2j for y_j,
2j+1 for z_j); minimal generators are kept sorted in graded lexicographic
order, so ideal output is reproducible byte for byte.  A monomial of
polynomial degree n represents a graded piece in module degree -n, stored
at the nonnegative index n as everywhere in this package.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import ProfileMembershipError, SizeLimitError
from .series import BigradedSeries, CharOffset, IntPoly, RationalSeries
from .weights import GaloisContext, ProfileStats, TGen, WeightProfile, in_p, profile_stats

#: inclusion-exclusion and Taylor-type sums walk 2^(#gens) subsets
GENERATOR_CAP = 22


@dataclass(frozen=True)
class Monomial:
    """Exponent vector over a fixed ambient variable count."""

    exps: tuple[int, ...]

    def __post_init__(self):
        if any(e < 0 for e in self.exps):
            raise ValueError("exponents must be nonnegative")

    @staticmethod
    def one(ambient: int) -> "Monomial":
        return Monomial((0,) * ambient)

    @staticmethod
    def variable(ambient: int, idx: int, power: int = 1) -> "Monomial":
        exps = [0] * ambient
        exps[idx] = power
        return Monomial(tuple(exps))

    @property
    def ambient(self) -> int:
        return len(self.exps)

    @property
    def degree(self) -> int:
        return sum(self.exps)

    def is_one(self) -> bool:
        return self.degree == 0

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exps)

    def support_mask(self) -> int:
        mask = 0
        for i, e in enumerate(self.exps):
            if e:
                mask |= 1 << i
        return mask

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exps, other.exps, strict=True))

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(max(a, b) for a, b in zip(self.exps, other.exps, strict=True)))

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(a + b for a, b in zip(self.exps, other.exps, strict=True)))

    def char_offset(self) -> CharOffset:
        """Offset in the paired y/z ring: +e_j per y_j power, -e_j per z_j."""
        if self.ambient % 2:
            raise ValueError("char offsets need the paired y/z ambient ring")
        f = self.ambient // 2
        return CharOffset(tuple(self.exps[2 * j] - self.exps[2 * j + 1] for j in range(f)))

    def sort_key(self) -> tuple:
        # graded lexicographic: by degree, then earlier variables first
        return (self.degree, tuple(-e for e in self.exps))


def y_var(f: int, j: int) -> Monomial:
    return Monomial.variable(2 * f, 2 * j)


def z_var(f: int, j: int) -> Monomial:
    return Monomial.variable(2 * f, 2 * j + 1)


def _minimalize(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    pool = sorted(set(gens), key=Monomial.sort_key)
    out: list[Monomial] = []
    for m in pool:
        if not any(g.divides(m) for g in out):
            out.append(m)
    return tuple(out)


@dataclass(frozen=True)
class MonomialIdeal:
    """Finite set of minimal monomial generators; () is the zero ideal."""

    ambient: int
    gens: tuple[Monomial, ...]

    def __post_init__(self):
        if any(g.ambient != self.ambient for g in self.gens):
            raise ValueError("generator ambient mismatch")
        object.__setattr__(self, "gens", _minimalize(self.gens))

    @staticmethod
    def zero(ambient: int) -> "MonomialIdeal":
        return MonomialIdeal(ambient, ())

    @staticmethod
    def unit(ambient: int) -> "MonomialIdeal":
        return MonomialIdeal(ambient, (Monomial.one(ambient),))

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return bool(self.gens) and self.gens[0].is_one()

    def is_squarefree(self) -> bool:
        return all(g.is_squarefree() for g in self.gens)

    def member(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self.gens)

    def member_mask(self, mask: int) -> bool:
        """Membership of a squarefree monomial given by its support mask."""
        return any(g.support_mask() & ~mask == 0 for g in self.gens)

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        if other.ambient != self.ambient:
            raise ValueError("ambient mismatch")
        return MonomialIdeal(self.ambient, self.gens + other.gens)

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        if other.ambient != self.ambient:
            raise ValueError("ambient mismatch")
        if self.is_zero() or other.is_zero():
            return MonomialIdeal.zero(self.ambient)
        return MonomialIdeal(
            self.ambient, tuple(a.lcm(b) for a in self.gens for b in other.gens)
        )

    def subset_of(self, other: "MonomialIdeal") -> bool:
        return all(other.member(g) for g in self.gens)


# -- the ideal families attached to weight profiles ---------------------

def t_monomial(f: int, j: int, kind: TGen) -> Monomial:
    if kind is TGen.Y:
        return y_var(f, j)
    if kind is TGen.Z:
        return z_var(f, j)
    return y_var(f, j) * z_var(f, j)


def a_lambda(ctx: GaloisContext, lam: WeightProfile) -> MonomialIdeal:
    """The ideal (t_0, ..., t_{f-1}) attached to a profile in P."""
    if not in_p(ctx, lam):
        raise ProfileMembershipError(f"{lam!r} is not in P for this context")
    stats = profile_stats(ctx, lam)
    return MonomialIdeal(
        2 * ctx.f, tuple(t_monomial(ctx.f, j, g) for j, g in enumerate(stats.t_assign))
    )


def a_ss(ctx: GaloisContext, lam: WeightProfile) -> MonomialIdeal:
    """Semisimplified ideal: the t-rules with J_rho replaced by the full set."""
    return a_lambda(ctx.semisimplified(), lam)


def p_monomial(f: int, stats: ProfileStats, j_prime: frozenset[int]) -> Monomial:
    """Product of y_j over J' ∩ J1 and z_j over J' ∩ J2."""
    m = Monomial.one(2 * f)
    for j in sorted(j_prime):
        if j in stats.j1:
            m = m * y_var(f, j)
        elif j in stats.j2:
            m = m * z_var(f, j)
        else:
            raise ValueError(f"index {j} lies outside J1 ∪ J2")
    return m


def ideal_from_pairs(f: int, j1: frozenset[int], j2: frozenset[int], d: int) -> MonomialIdeal:
    """Ideal generated by all products over d-subsets of J1 ⊔ J2.

    d = 0 gives the unit ideal, d > |J1 ⊔ J2| the zero ideal.
    """
    if j1 & j2:
        raise ValueError("J1 and J2 must be disjoint")
    if d == 0:
        return MonomialIdeal.unit(2 * f)
    pool = sorted(j1 | j2)
    if d > len(pool):
        return MonomialIdeal.zero(2 * f)
    gens = []
    for sub in combinations(pool, d):
        m = Monomial.one(2 * f)
        for j in sub:
            m = m * (y_var(f, j) if j in j1 else z_var(f, j))
        gens.append(m)
    return MonomialIdeal(2 * f, tuple(gens))


def d_shift(stats: ProfileStats, i: int) -> int:
    """The grading shift max(i + 1 - |J_lambda|, 0)."""
    return max(i + 1 - stats.ell, 0)


def a1(ctx: GaloisContext, lam: WeightProfile, i: int) -> MonomialIdeal:
    """The i-th member of the decreasing family between R and a(lambda)."""
    if not -1 <= i <= ctx.f:
        raise ValueError(f"i = {i} outside -1..f")
    stats = profile_stats(ctx, lam)
    base = a_lambda(ctx, lam)
    step = ideal_from_pairs(ctx.f, stats.j1, stats.j2, d_shift(stats, i))
    if step.is_unit():
        return step
    return step + base


# -- Hilbert series ------------------------------------------------------

def hilbert(ideal: MonomialIdeal) -> RationalSeries:
    """Hilbert series of R/I by inclusion-exclusion over generator subsets."""
    n = len(ideal.gens)
    if n > GENERATOR_CAP:
        raise SizeLimitError(f"{n} generators exceeds the cap of {GENERATOR_CAP}")
    coeffs: dict[int, int] = {}
    for r in range(n + 1):
        for sub in combinations(ideal.gens, r):
            m = Monomial.one(ideal.ambient)
            for g in sub:
                m = m.lcm(g)
            d = m.degree
            coeffs[d] = coeffs.get(d, 0) + (-1) ** r
    top = max(coeffs) if coeffs else 0
    num = IntPoly(tuple(coeffs.get(d, 0) for d in range(top + 1)))
    return RationalSeries(num, ideal.ambient)


def standard_counts_naive(ideal: MonomialIdeal, bound: int) -> list[int]:
    """Count monomials outside the ideal per degree, by full enumeration.

    Deliberately dumb; the independent oracle for hilbert().
    """
    counts = [0] * (bound + 1)
    n = ideal.ambient

    def rec(idx: int, exps: list[int], deg: int):
        if idx == n:
            if not ideal.member(Monomial(tuple(exps))):
                counts[deg] += 1
            return
        for e in range(bound - deg + 1):
            exps.append(e)
            rec(idx + 1, exps, deg + e)
            exps.pop()

    rec(0, [], 0)
    return counts


def _gen_masks(ideal: MonomialIdeal) -> list[int]:
    if not ideal.is_squarefree():
        raise ValueError("support-mask membership needs a squarefree ideal")
    return [g.support_mask() for g in ideal.gens]


def _bigraded_from_masks(f: int, trunc: int, shift: int, keep) -> BigradedSeries:
    """Tabulate monomials whose support mask satisfies ``keep``.

    Walks every monomial of degree <= trunc + shift grouped by support
    pattern; the stored degree is the monomial degree minus ``shift``.
    """
    bound = trunc + shift
    entries: dict[tuple[int, CharOffset], int] = {}

    def fill(j: int, mask: int, deg: int, offs: list[int]):
        if j == f:
            key = (deg - shift, CharOffset(tuple(offs)))
            if key[0] >= 0:
                entries[key] = entries.get(key, 0) + 1
            return
        y_bit, z_bit = 1 << (2 * j), 1 << (2 * j + 1)
        has_y, has_z = bool(mask & y_bit), bool(mask & z_bit)
        a_lo = 1 if has_y else 0
        b_lo = 1 if has_z else 0
        for a in range(a_lo, (bound - deg + 1) if has_y else a_lo + 1):
            for b in range(b_lo, (bound - deg - a + 1) if has_z else b_lo + 1):
                offs.append(a - b)
                fill(j + 1, mask, deg + a + b, offs)
                offs.pop()

    for mask in range(1 << (2 * f)):
        if bin(mask).count("1") > bound:
            continue
        if keep(mask):
            fill(0, mask, 0, [])
    return BigradedSeries(trunc, entries)


def bigraded_standard(ideal: MonomialIdeal, f: int, trunc: int) -> BigradedSeries:
    """Character-refined Hilbert table of R/I, for squarefree I."""
    if ideal.ambient != 2 * f:
        raise ValueError("ambient must be the paired y/z ring")
    masks = _gen_masks(ideal)
    return _bigraded_from_masks(
        f, trunc, 0, lambda m: not any(g & ~m == 0 for g in masks)
    )


def bigraded_difference(
    big: MonomialIdeal, small: MonomialIdeal, f: int, trunc: int, shift: int
) -> BigradedSeries:
    """Character-refined table of big/small, degrees shifted down by ``shift``.

    Both ideals must be squarefree and small ⊆ big; entries are monomials of
    big \\ small tabulated at stored degree (monomial degree - shift).
    """
    if big.ambient != 2 * f or small.ambient != 2 * f:
        raise ValueError("ambient must be the paired y/z ring")
    gm, sm = _gen_masks(big), _gen_masks(small)
    return _bigraded_from_masks(
        f,
        trunc,
        shift,
        lambda m: any(g & ~m == 0 for g in gm) and not any(g & ~m == 0 for g in sm),
    )


def bigraded_quotient(
    ctx: GaloisContext, lam: WeightProfile, i0: int, i0p: int, trunc: int
) -> BigradedSeries:
    """The lambda-summand of the graded subquotient description.

    Tabulates the window between the i0-th and i0p-th ideals of the family,
    shifted so the first nonzero generators land in stored degree 0, with
    character offsets relative to the anchor profile.
    """
    if not -1 <= i0 < i0p <= ctx.f:
        raise ValueError(f"need -1 <= i0 < i0p <= f, got ({i0}, {i0p})")
    stats = profile_stats(ctx, lam)
    return bigraded_difference(
        a1(ctx, lam, i0), a1(ctx, lam, i0p), ctx.f, trunc, d_shift(stats, i0)
    )


# -- the patched-module intersection -------------------------------------

def _patched_layout(ctx: GaloisContext) -> tuple[list[int], int, int]:
    rho = sorted(ctx.j_rho)
    ell = len(rho)
    n_z = 2 * ctx.f - ell
    return rho, ell, 2 * ell + n_z


def patched_ideals(
    ctx: GaloisContext, lam: WeightProfile
) -> tuple[MonomialIdeal, MonomialIdeal]:
    """(intersection ideal, expected ideal) for the patched-module check.

    Variables: X_j, Y_j for j in J_rho, then 2f - |J_rho| extra Z variables.
    The intersection runs over subsets J of J_rho with |J \\ J''| <= 1 of the
    linear ideals (X_j : j in J) + (Y_j : j in J_rho \\ J) + (Z_m : all m).
    """
    if not in_p(ctx, lam):
        raise ProfileMembershipError(f"{lam!r} is not in P for this context")
    rho, ell, n_vars = _patched_layout(ctx)
    pos = {j: i for i, j in enumerate(rho)}
    x = lambda j: Monomial.variable(n_vars, 2 * pos[j])
    y = lambda j: Monomial.variable(n_vars, 2 * pos[j] + 1)
    zs = [Monomial.variable(n_vars, 2 * ell + m) for m in range(n_vars - 2 * ell)]
    j_dp = frozenset(j for j in ctx.j_rho if lam.entries[j] in ("X1", "P2"))

    inter: MonomialIdeal | None = None
    for r in range(ell + 1):
        for sub in combinations(rho, r):
            J = frozenset(sub)
            if len(J - j_dp) > 1:
                continue
            linear = MonomialIdeal(
                n_vars,
                tuple(x(j) for j in sorted(J))
                + tuple(y(j) for j in sorted(ctx.j_rho - J))
                + tuple(zs),
            )
            inter = linear if inter is None else inter.intersect(linear)
    assert inter is not None

    pairs = sorted(ctx.j_rho - j_dp)
    expected = MonomialIdeal(
        n_vars,
        tuple(x(j) * y(j) for j in rho)
        + tuple(y(a) * y(b) for a, b in combinations(pairs, 2))
        + tuple(zs),
    )
    return inter, expected


def patched_intersection_check(ctx: GaloisContext, lam: WeightProfile) -> bool:
    inter, expected = patched_ideals(ctx, lam)
    return inter.gens == expected.gens
