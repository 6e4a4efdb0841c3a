"""Tor dimensions of monomial quotients via simplicial homology and Taylor complexes.

Two independent oracles: Hochster's formula over induced subcomplexes of the
Stanley-Reisner complex (squarefree ideals), and the homology of the Taylor
complex on generator subsets (any monomial ideal).  Ranks are exact integer
ranks over the rationals; a prime-field mode is available for homology.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import SizeLimitError
from .ideals import GENERATOR_CAP, Monomial, MonomialIdeal
from .linalg import exact_rank, rank_mod_p


@dataclass(frozen=True)
class SimplicialComplex:
    """Vertices 0..n-1 with faces cut out by minimal non-faces (bitmasks).

    W is a face iff no minimal non-face is contained in W; the empty set is
    a face unless some minimal non-face is empty (the void complex).
    """

    n_vertices: int
    minimal_nonfaces: tuple[int, ...]

    @staticmethod
    def from_ideal(ideal: MonomialIdeal) -> "SimplicialComplex":
        if not ideal.is_squarefree():
            raise ValueError("Stanley-Reisner complexes need squarefree generators")
        return SimplicialComplex(
            ideal.ambient, tuple(sorted(g.support_mask() for g in ideal.gens))
        )

    def is_void(self) -> bool:
        return 0 in self.minimal_nonfaces

    def is_face(self, mask: int) -> bool:
        return not any(nf & ~mask == 0 for nf in self.minimal_nonfaces)

    def faces_within(self, vertex_mask: int) -> list[int]:
        """All faces of the induced subcomplex on the given vertex set."""
        verts = [v for v in range(self.n_vertices) if vertex_mask & (1 << v)]
        out = []
        for r in range(len(verts) + 1):
            for sub in combinations(verts, r):
                mask = 0
                for v in sub:
                    mask |= 1 << v
                if self.is_face(mask):
                    out.append(mask)
        return out

    def faces(self) -> list[int]:
        return self.faces_within((1 << self.n_vertices) - 1)


def _boundary_rows(upper: list[int], lower_index: dict[int, int]) -> list[dict[int, int]]:
    rows = []
    for mask in upper:
        verts = [v for v in range(mask.bit_length()) if mask & (1 << v)]
        row: dict[int, int] = {}
        for i, v in enumerate(verts):
            sub = mask ^ (1 << v)
            col = lower_index.get(sub)
            if col is not None:
                row[col] = -1 if i % 2 else 1
        rows.append(row)
    return rows


def homology_from_faces(faces: list[int], char_p: int | None = None) -> dict[int, int]:
    """Reduced homology dims, keyed by homological degree (including -1).

    The empty complex (only the empty face) has H_{-1} of dimension 1; a
    void complex (no faces at all) has no homology in any degree.
    """
    if not faces:
        return {}
    by_card: dict[int, list[int]] = {}
    for mask in faces:
        by_card.setdefault(bin(mask).count("1"), []).append(mask)
    for masks in by_card.values():
        masks.sort()
    top = max(by_card)
    rank = (lambda rows: rank_mod_p(rows, char_p)) if char_p else exact_rank
    ranks: dict[int, int] = {}
    for k in range(1, top + 1):
        upper = by_card.get(k, [])
        lower = by_card.get(k - 1, [])
        if upper and lower:
            index = {m: i for i, m in enumerate(lower)}
            ranks[k] = rank(_boundary_rows(upper, index))
        else:
            ranks[k] = 0
    dims: dict[int, int] = {}
    for k in range(top + 1):
        dim = len(by_card.get(k, [])) - ranks.get(k, 0) - ranks.get(k + 1, 0)
        if dim:
            dims[k - 1] = dim
    return dims


def reduced_homology_dims(cx: SimplicialComplex, char_p: int | None = None) -> dict[int, int]:
    return homology_from_faces(cx.faces(), char_p)


def hochster_profile(ideal: MonomialIdeal, char_p: int | None = None) -> list[int]:
    """dim Tor_i(F, R/I) for i = 0..n via Hochster's sum over vertex subsets."""
    cx = SimplicialComplex.from_ideal(ideal)
    n = cx.n_vertices
    out = [0] * (n + 1)
    for w_mask in range(1 << n):
        dims = homology_from_faces(cx.faces_within(w_mask), char_p)
        if not dims:
            continue
        size = bin(w_mask).count("1")
        for i in range(n + 1):
            out[i] += dims.get(size - i - 1, 0)
    return out


def hochster_tor(ideal: MonomialIdeal, i: int) -> int:
    if i < 0:
        raise ValueError("homological degree must be nonnegative")
    profile = hochster_profile(ideal)
    return profile[i] if i < len(profile) else 0


def taylor_profile(ideal: MonomialIdeal) -> list[int]:
    """dim Tor_i(F, R/I) for i = 0..#gens, from the Taylor complex.

    Basis in position i: i-subsets S of the generators; the differential
    entry at (S, S \\ {g}) is the sign of g's position when lcm(S \\ {g})
    equals lcm(S), and zero otherwise.  The complex splits along the lcm
    multidegree, so homology is summed over blocks.
    """
    gens = ideal.gens
    n = len(gens)
    if n > GENERATOR_CAP:
        raise SizeLimitError(f"{n} generators exceeds the cap of {GENERATOR_CAP}")
    # group subsets (as index bitmasks) by their lcm monomial
    blocks: dict[tuple[int, ...], dict[int, list[int]]] = {}
    for s_mask in range(1 << n):
        m = Monomial.one(ideal.ambient)
        mm = s_mask
        while mm:
            g = (mm & -mm).bit_length() - 1
            m = m.lcm(gens[g])
            mm &= mm - 1
        size = bin(s_mask).count("1")
        blocks.setdefault(m.exps, {}).setdefault(size, []).append(s_mask)

    out = [0] * (n + 1)
    for by_size in blocks.values():
        for sizes in by_size.values():
            sizes.sort()
        top = max(by_size)
        ranks: dict[int, int] = {}
        for k in range(1, top + 1):
            upper = by_size.get(k, [])
            lower = by_size.get(k - 1, [])
            if not upper or not lower:
                ranks[k] = 0
                continue
            index = {m: i for i, m in enumerate(lower)}
            rows = []
            for s_mask in upper:
                idxs = [g for g in range(n) if s_mask & (1 << g)]
                row: dict[int, int] = {}
                for pos, g in enumerate(idxs):
                    sub = s_mask ^ (1 << g)
                    col = index.get(sub)
                    if col is not None:
                        row[col] = -1 if pos % 2 else 1
                rows.append(row)
            ranks[k] = exact_rank(rows)
        for k in range(top + 1):
            dim = len(by_size.get(k, [])) - ranks.get(k, 0) - ranks.get(k + 1, 0)
            if 0 <= k <= n:
                out[k] += dim
    return out


def taylor_tor(ideal: MonomialIdeal, i: int) -> int:
    if i < 0:
        raise ValueError("homological degree must be nonnegative")
    profile = taylor_profile(ideal)
    return profile[i] if i < len(profile) else 0


def profiles_agree(a: list[int], b: list[int]) -> bool:
    """Equality of Tor profiles up to trailing zeros."""
    n = max(len(a), len(b))
    return a + [0] * (n - len(a)) == b + [0] * (n - len(b))


def stanley_reisner_closed(k: int, i: int) -> int:
    """Closed Tor dimension for the complete-pairing plus Y-pairs ideal."""
    return 1 if i == 0 else i * comb(k + 1, i + 1)


def pairing_ideal(k: int) -> MonomialIdeal:
    """(X_j Y_j for j <= k, Y_i Y_j for i < j <= k) in 2k variables.

    X_j sits at index 2(j-1) and Y_j at 2(j-1)+1.
    """
    if k < 1:
        raise ValueError("need k >= 1")
    n = 2 * k
    x = lambda j: Monomial.variable(n, 2 * (j - 1))
    y = lambda j: Monomial.variable(n, 2 * (j - 1) + 1)
    gens = [x(j) * y(j) for j in range(1, k + 1)]
    gens += [y(i) * y(j) for i, j in combinations(range(1, k + 1), 2)]
    return MonomialIdeal(n, tuple(gens))


def padded_pairing_ideal(f: int, k: int) -> MonomialIdeal:
    """(X_j Y_j for j <= f, Y_i Y_j for i < j <= k, Z_m for f < m <= 2f).

    Variables: X_j at 2(j-1), Y_j at 2(j-1)+1 for 1 <= j <= f, then f
    extra Z variables; 3f variables total.
    """
    if not 0 <= k <= f:
        raise ValueError("need 0 <= k <= f")
    n = 3 * f
    x = lambda j: Monomial.variable(n, 2 * (j - 1))
    y = lambda j: Monomial.variable(n, 2 * (j - 1) + 1)
    z = lambda m: Monomial.variable(n, 2 * f + (m - 1))
    gens = (
        [x(j) * y(j) for j in range(1, f + 1)]
        + [y(i) * y(j) for i, j in combinations(range(1, k + 1), 2)]
        + [z(m) for m in range(1, f + 1)]
    )
    return MonomialIdeal(n, tuple(gens))


@dataclass(frozen=True)
class ExtDims:
    closed: tuple[int, int, int]
    oracle: tuple[int, int, int]
    convolution: tuple[int, int, int]
    ok: bool


def ext_closed(f: int, k: int) -> tuple[int, int, int]:
    return (
        1,
        2 * f + comb(k, 2),
        2 * f * f + (k * k - k - 1) * f - comb(k + 1, 3),
    )


def ext_dims(f: int, k: int) -> ExtDims:
    """Closed Ext dimensions at i = 0, 1, 2 against two oracles.

    The primary oracle is the Taylor Tor profile of the padded pairing
    ideal; the convolution value contracts the closed Stanley-Reisner
    dimensions against the binomial factor of the 2f - k free pairs.
    """
    if not 0 <= k <= f:
        raise ValueError("need 0 <= k <= f")
    closed = ext_closed(f, k)
    profile = taylor_profile(padded_pairing_ideal(f, k))
    oracle = tuple(profile[i] if i < len(profile) else 0 for i in range(3))
    convo = tuple(
        sum(comb(2 * f - k, i - j) * stanley_reisner_closed(k, j) for j in range(i + 1))
        for i in range(3)
    )
    return ExtDims(closed, oracle, convo, closed == oracle == convo)


def ext1_lower_bound(f: int, k: int) -> int:
    """The first-Ext lower bound 2f^2 + f + C(k+1, 3)."""
    if not 0 <= k <= f:
        raise ValueError("need 0 <= k <= f")
    return 2 * f * f + f + comb(k + 1, 3)


def ext1_identity_ok(f: int, k: int) -> bool:
    """The bookkeeping identity behind the lower bound, checked exactly."""
    e = ext_closed(f, k)
    return ext1_lower_bound(f, k) == 2 * f * e[1] - e[2]
