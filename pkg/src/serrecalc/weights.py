"""Weight-parameter combinatorics: profile families, J-sets and windows.

A weight profile is an f-tuple of formal affine symbols in x_j.  Symbols are
never evaluated at a numeric x_j or p: genericity keeps the six symbols
pairwise distinct as weights, so equality is symbol equality.  All cyclic
conditions read the index j+1 modulo f, including f = 1 (self-constraint).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Literal

from .errors import ProfileMembershipError, UnsupportedCaseError


class Symbol(str, Enum):
    X0 = "X0"    # x_j
    X1 = "X1"    # x_j + 1
    X2 = "X2"    # x_j + 2
    P3 = "P3"    # p - 3 - x_j
    P2 = "P2"    # p - 2 - x_j
    P1 = "P1"    # p - 1 - x_j
    XM1 = "XM1"  # x_j - 1; appears only in principal-series subset recipes


CORE_SYMBOLS = (Symbol.X0, Symbol.X1, Symbol.X2, Symbol.P3, Symbol.P2, Symbol.P1)
SYMBOL_INDEX = {s: i for i, s in enumerate(CORE_SYMBOLS)}

LOW = frozenset({Symbol.X0, Symbol.X1, Symbol.X2})
HIGH = frozenset({Symbol.P3, Symbol.P2, Symbol.P1})
# successor constraint of the cyclic conditions
_NEXT_AFTER_LOW = frozenset({Symbol.X0, Symbol.X2, Symbol.P2})
_NEXT_AFTER_HIGH = frozenset({Symbol.X1, Symbol.P3, Symbol.P1})

DSS_SYMBOLS = frozenset({Symbol.X0, Symbol.X1, Symbol.P3, Symbol.P2})
J_SYMBOLS = frozenset({Symbol.X1, Symbol.X2, Symbol.P3})


class Case(str, Enum):
    IRREDUCIBLE = "irreducible"
    SPLIT = "split"
    NONSPLIT = "nonsplit"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class GaloisContext:
    """Ambient data (f, case, J_rho): fixes which parameter sets are defined.

    J_rho must be the full index set for the split case and a proper subset
    for the nonsplit case; it is unused (empty) in the irreducible case.
    The optional prime p is only sanity-checked against the genericity lower
    bound; no computation ever evaluates a symbol at p.
    """

    f: int
    case: Case
    j_rho: frozenset[int] = frozenset()
    p: int | None = None

    def __post_init__(self):
        if self.f < 1:
            raise ValueError("f must be positive")
        object.__setattr__(self, "j_rho", frozenset(self.j_rho))
        full = frozenset(range(self.f))
        if not self.j_rho <= full:
            raise ValueError("J_rho must be a subset of {0..f-1}")
        if self.case is Case.SPLIT and self.j_rho != full:
            raise ValueError("split case requires J_rho = {0..f-1}")
        if self.case is Case.NONSPLIT and self.j_rho == full:
            raise ValueError("nonsplit case requires a proper subset J_rho")
        if self.case is Case.IRREDUCIBLE and self.j_rho:
            raise ValueError("irreducible case takes no J_rho")
        if self.p is not None:
            bound = 2 * max(9, 4 * self.f + 1) + 3
            if not _is_prime(self.p):
                raise ValueError(f"p = {self.p} is not prime")
            if self.p < bound:
                raise ValueError(f"p = {self.p} below the genericity bound {bound}")

    @property
    def d_rho(self) -> int:
        return len(self.j_rho)

    @property
    def j_rho_c(self) -> frozenset[int]:
        return frozenset(range(self.f)) - self.j_rho

    @property
    def reducible(self) -> bool:
        return self.case is not Case.IRREDUCIBLE

    def semisimplified(self) -> "GaloisContext":
        """Split context with the same f; gives the t-rules for P^ss profiles."""
        if not self.reducible:
            raise UnsupportedCaseError("no split semisimplification modeled for the irreducible case")
        return GaloisContext(self.f, Case.SPLIT, frozenset(range(self.f)), self.p)


def split_context(f: int, p: int | None = None) -> GaloisContext:
    return GaloisContext(f, Case.SPLIT, frozenset(range(f)), p)


def nonsplit_context(f: int, j_rho: Iterable[int], p: int | None = None) -> GaloisContext:
    return GaloisContext(f, Case.NONSPLIT, frozenset(j_rho), p)


@dataclass(frozen=True)
class WeightProfile:
    """An f-tuple of core symbols."""

    entries: tuple[Symbol, ...]

    def __post_init__(self):
        if not self.entries:
            raise ValueError("profiles need at least one entry")
        if any(s not in SYMBOL_INDEX for s in self.entries):
            raise ValueError("profiles take the six core symbols only")

    @property
    def f(self) -> int:
        return len(self.entries)

    def tags(self) -> list[str]:
        return [s.value for s in self.entries]

    @staticmethod
    def from_tags(tags: Iterable[str]) -> "WeightProfile":
        return WeightProfile(tuple(Symbol(t) for t in tags))

    def sort_key(self) -> tuple[int, ...]:
        return tuple(SYMBOL_INDEX[s] for s in self.entries)

    def __repr__(self):
        return "WeightProfile(%s)" % ",".join(self.tags())


Family = Literal["Pss", "P", "Dss", "D", "Pbar"]


def in_pss(profile: WeightProfile) -> bool:
    ent = profile.entries
    f = len(ent)
    for j in range(f):
        nxt = ent[(j + 1) % f]
        if ent[j] in LOW and nxt not in _NEXT_AFTER_LOW:
            return False
        if ent[j] in HIGH and nxt not in _NEXT_AFTER_HIGH:
            return False
    return True


def in_dss(profile: WeightProfile) -> bool:
    return in_pss(profile) and all(s in DSS_SYMBOLS for s in profile.entries)


def _require_reducible(ctx: GaloisContext):
    if not ctx.reducible:
        raise UnsupportedCaseError(
            "profile families are enumerated for reducible cases only; "
            "the irreducible case is served by its counting model"
        )


def in_p(ctx: GaloisContext, profile: WeightProfile) -> bool:
    _require_reducible(ctx)
    if not in_pss(profile):
        return False
    return all(
        j in ctx.j_rho
        for j, s in enumerate(profile.entries)
        if s in (Symbol.X2, Symbol.P3)
    )


def in_d(ctx: GaloisContext, profile: WeightProfile) -> bool:
    _require_reducible(ctx)
    if not in_dss(profile):
        return False
    return all(
        j in ctx.j_rho
        for j, s in enumerate(profile.entries)
        if s in (Symbol.X1, Symbol.P3)
    )


def in_pbar(ctx: GaloisContext, profile: WeightProfile) -> bool:
    _require_reducible(ctx)
    if not in_p(ctx, profile):
        return False
    for j, s in enumerate(profile.entries):
        if s is Symbol.X2:
            return False
        if s is Symbol.P1 and j in ctx.j_rho:
            return False
    return True


_MEMBERSHIP = {"Pss": None, "P": in_p, "Dss": None, "D": in_d, "Pbar": in_pbar}


@lru_cache(maxsize=None)
def _pss_list(f: int) -> tuple[WeightProfile, ...]:
    """All of P^ss in lexicographic symbol order."""
    out: list[WeightProfile] = []

    def allowed_next(s: Symbol) -> frozenset[Symbol]:
        return _NEXT_AFTER_LOW if s in LOW else _NEXT_AFTER_HIGH

    def rec(prefix: list[Symbol]):
        if len(prefix) == f:
            if prefix[-1] is not None and prefix[0] in allowed_next(prefix[-1]):
                out.append(WeightProfile(tuple(prefix)))
            return
        pool = CORE_SYMBOLS if not prefix else [s for s in CORE_SYMBOLS if s in allowed_next(prefix[-1])]
        for s in pool:
            prefix.append(s)
            rec(prefix)
            prefix.pop()

    rec([])
    return tuple(out)


def enumerate_profiles(ctx: GaloisContext, which: Family) -> list[WeightProfile]:
    """Members of the requested family, in lexicographic symbol order."""
    if which not in _MEMBERSHIP:
        raise ValueError(f"unknown family {which!r}")
    if which in ("Pss", "Dss"):
        base = _pss_list(ctx.f)
        if which == "Dss":
            return [lam for lam in base if all(s in DSS_SYMBOLS for s in lam.entries)]
        return list(base)
    _require_reducible(ctx)
    pred = _MEMBERSHIP[which]
    return [lam for lam in _pss_list(ctx.f) if pred(ctx, lam)]


class TGen(str, Enum):
    """Shape of the ideal generator attached to one coordinate."""

    Y = "Y"
    Z = "Z"
    YZ = "YZ"


@dataclass(frozen=True)
class ProfileStats:
    j_lambda: frozenset[int]
    ell: int
    t_assign: tuple[TGen, ...]
    a_set: frozenset[int]
    k: int
    j1: frozenset[int]
    j2: frozenset[int]
    eps: tuple[tuple[int, int], ...]  # (j, sign) for each j with t_j != YZ

    def eps_of(self, j: int) -> int:
        for jj, s in self.eps:
            if jj == j:
                return s
        raise KeyError(j)

    @property
    def j_support(self) -> frozenset[int]:
        """Indices with a linear generator, i.e. the complement of a_set."""
        return frozenset(j for j, _ in self.eps)


def j_set(profile: WeightProfile) -> frozenset[int]:
    """J_lambda: indices whose symbol lies in {x+1, x+2, p-3-x}."""
    return frozenset(j for j, s in enumerate(profile.entries) if s in J_SYMBOLS)


def profile_stats(ctx: GaloisContext, profile: WeightProfile) -> ProfileStats:
    """t-assignment and derived index data for a profile.

    Defined whenever every coordinate is covered by the generator rules:
    all of P works in any reducible context, and all of P^ss in a split one.
    """
    _require_reducible(ctx)
    if profile.f != ctx.f:
        raise ValueError("profile length differs from ctx.f")
    if not in_pss(profile):
        raise ProfileMembershipError(f"{profile!r} is not in P^ss")
    t: list[TGen] = []
    for j, s in enumerate(profile.entries):
        if j in ctx.j_rho:
            if s in (Symbol.X0, Symbol.P3):
                t.append(TGen.Z)
            elif s in (Symbol.X2, Symbol.P1):
                t.append(TGen.Y)
            else:
                t.append(TGen.YZ)
        else:
            if s in (Symbol.X0, Symbol.P1, Symbol.X1, Symbol.P2):
                t.append(TGen.YZ)
            else:
                raise ProfileMembershipError(
                    f"{profile!r}: no generator rule for {s.value} at j={j} outside J_rho"
                )
    a_set = frozenset(j for j, g in enumerate(t) if g is TGen.YZ)
    eps = tuple(
        (j, -1 if g is TGen.Y else 1) for j, g in enumerate(t) if g is not TGen.YZ
    )
    return ProfileStats(
        j_lambda=j_set(profile),
        ell=len(j_set(profile)),
        t_assign=tuple(t),
        a_set=a_set,
        k=ctx.f - len(a_set),
        j1=frozenset(j for j in ctx.j_rho_c if profile.entries[j] is Symbol.P1),
        j2=frozenset(j for j in ctx.j_rho_c if profile.entries[j] is Symbol.X0),
        eps=eps,
    )


@dataclass(frozen=True)
class ACounts:
    """Per-|A| cardinalities, enumerated where a family is available."""

    domain: str
    closed: dict[int, int] = field(hash=False)
    enumerated: dict[int, int] | None = field(hash=False)
    closed_p_level: dict[int, int] | None = field(hash=False)
    enumerated_p_level: dict[int, int] | None = field(hash=False)
    ok: bool


def count_by_A(ctx: GaloisContext) -> ACounts:
    """|A|-histograms with their closed counterparts.

    Irreducible: counting model only (2*C(f,s) over the weight set at odd s,
    with fibers of size 2^(f-s) above each).  Split: enumerated over D and
    over P, against 2*C(f,s) at even s.  Nonsplit: enumerated over Pbar
    against 2^(f-d)*C(d,s) at |A| = f-d+s.
    """
    f = ctx.f
    if ctx.case is Case.IRREDUCIBLE:
        closed = {s: 2 * comb(f, s) for s in range(f + 1) if s % 2 == 1}
        closed_p = {s: (2 ** (f - s)) * 2 * comb(f, s) for s in closed}
        return ACounts("D", closed, None, closed_p, None, True)

    def histogram(profiles: list[WeightProfile]) -> dict[int, int]:
        out: dict[int, int] = {}
        for lam in profiles:
            a = len(profile_stats(ctx, lam).a_set)
            out[a] = out.get(a, 0) + 1
        return out

    if ctx.case is Case.SPLIT:
        closed = {s: 2 * comb(f, s) for s in range(f + 1) if s % 2 == 0}
        enum_d = histogram(enumerate_profiles(ctx, "D"))
        closed_p = {s: (2 ** (f - s)) * 2 * comb(f, s) for s in closed}
        enum_p = histogram(enumerate_profiles(ctx, "P"))
        ok = enum_d == closed and enum_p == closed_p
        return ACounts("D", closed, enum_d, closed_p, enum_p, ok)

    d = ctx.d_rho
    closed = {f - d + s: (2 ** (f - d)) * comb(d, s) for s in range(d + 1)}
    enum_pbar = histogram(enumerate_profiles(ctx, "Pbar"))
    return ACounts("Pbar", closed, enum_pbar, None, None, enum_pbar == closed)


def jh_interval(j_sigma: frozenset[int], j_tau: frozenset[int]) -> list[frozenset[int]]:
    """The interval {J : J_sigma ∩ J_tau ⊆ J ⊆ J_sigma ∪ J_tau}."""
    lo = j_sigma & j_tau
    extra = sorted((j_sigma | j_tau) - lo)
    out = []
    for r in range(len(extra) + 1):
        for add in combinations(extra, r):
            out.append(lo | frozenset(add))
    return sorted(out, key=lambda s: (len(s), sorted(s)))


def ext1_nonzero(j_sigma: frozenset[int], j_tau: frozenset[int]) -> bool:
    return len(j_sigma ^ j_tau) == 1


def mu_shift(j_sigma: frozenset[int], j: int) -> frozenset[int]:
    """J-set of the unique mu-type neighbour at coordinate j."""
    if j < 0:
        raise ValueError("index must be nonnegative")
    return j_sigma ^ {j}


def profile_from_subset(
    j_subset: frozenset[int], flavor: Literal["modular", "principal_series"], f: int
) -> tuple[Symbol, ...]:
    """Symbol recipe of the constituent parametrized by a subset.

    The modular flavor lands in the D^ss symbols; the principal-series
    flavor may use the extended symbol x_j - 1.
    """
    out = []
    for j in range(f):
        delta = 1 if j in j_subset else 0
        succ_in = ((j + 1) % f) in j_subset
        if flavor == "modular":
            if not succ_in:
                out.append(Symbol.X1 if delta else Symbol.X0)
            else:
                out.append(Symbol.P3 if delta else Symbol.P2)
        elif flavor == "principal_series":
            if not succ_in:
                out.append(Symbol.XM1 if delta else Symbol.X0)
            else:
                out.append(Symbol.P1 if delta else Symbol.P2)
        else:
            raise ValueError(f"unknown flavor {flavor!r}")
    return tuple(out)


@dataclass(frozen=True)
class CharacterWindow:
    j_min: frozenset[int]
    j_max: frozenset[int]
    j_dprime: frozenset[int]  # the middle set J'' of coordinates free in the window
    v_chi: frozenset[frozenset[int]]


def character_window(ctx: GaloisContext, profile: WeightProfile) -> CharacterWindow:
    """Window data of the weights constrained near a profile's character.

    V_chi collects the subsets J of J_rho with |(J \\ J'') Δ J'| <= 1, where
    J' marks the {x+2, p-3-x} coordinates and J'' the {x+1, p-2-x} ones.
    """
    _require_reducible(ctx)
    if not in_p(ctx, profile):
        raise ProfileMembershipError(f"{profile!r} is not in P for this context")
    ent = profile.entries
    j_min = frozenset(j for j in ctx.j_rho if ent[j] in (Symbol.X2, Symbol.P3))
    j_max = frozenset(j for j in ctx.j_rho if ent[j] not in (Symbol.X0, Symbol.P1))
    j_dp = frozenset(j for j in ctx.j_rho if ent[j] in (Symbol.X1, Symbol.P2))
    v_chi = frozenset(
        frozenset(J)
        for r in range(ctx.d_rho + 1)
        for J in combinations(sorted(ctx.j_rho), r)
        if len((frozenset(J) - j_dp) ^ j_min) <= 1
    )
    return CharacterWindow(j_min, j_max, j_dp, v_chi)


def v_chi_from_windows(ctx: GaloisContext, profile: WeightProfile) -> frozenset[frozenset[int]]:
    """Independent assembly of V_chi as a union of shifted windows."""
    w = character_window(ctx, profile)
    shifts = [frozenset()] + [frozenset({j}) for j in sorted(ctx.j_rho - w.j_dprime)]
    out: set[frozenset[int]] = set()
    for sh in shifts:
        base = w.j_min ^ sh
        free = sorted(w.j_dprime)
        for r in range(len(free) + 1):
            for add in combinations(free, r):
                out.add(base | frozenset(add))
    return frozenset(out)


def length_witnesses(ctx: GaloisContext) -> dict[int, WeightProfile]:
    """For each 1 <= k <= f, a P^ss \\ P profile with |J_lambda| = k, if any."""
    _require_reducible(ctx)
    out: dict[int, WeightProfile] = {}
    for lam in _pss_list(ctx.f):
        if in_p(ctx, lam):
            continue
        k = len(j_set(lam))
        if 1 <= k <= ctx.f and k not in out:
            out[k] = lam
    return out
