"""Exact univariate and character-refined graded series arithmetic.

Grading convention, used package-wide: graded modules are supported in
non-positive degrees, and the piece of degree -n is stored under the
nonnegative index n.  All coefficients are arbitrary-precision integers;
nothing in this package uses floating point.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb
from typing import Iterable, Mapping

from .errors import TruncationError


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class IntPoly:
    """Integer polynomial in t; ``coeffs[d]`` is the t^d coefficient.

    Trailing zeros are normalized away, so the zero polynomial has an
    empty coefficient tuple.
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(self.coeffs))

    @staticmethod
    def of(*coeffs: int) -> "IntPoly":
        return IntPoly(tuple(coeffs))

    @staticmethod
    def zero() -> "IntPoly":
        return IntPoly(())

    @staticmethod
    def one() -> "IntPoly":
        return IntPoly((1,))

    @staticmethod
    def t_power(d: int, c: int = 1) -> "IntPoly":
        return IntPoly((0,) * d + (c,))

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """Degree, with the convention deg 0 = -1."""
        return len(self.coeffs) - 1

    def coeff(self, d: int) -> int:
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else 0

    def __add__(self, other: "IntPoly") -> "IntPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(tuple(self.coeff(i) + other.coeff(i) for i in range(n)))

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        if self.is_zero() or other.is_zero():
            return IntPoly.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPoly(tuple(out))

    def __pow__(self, n: int) -> "IntPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = IntPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, a: int) -> "IntPoly":
        return IntPoly(tuple(a * c for c in self.coeffs))

    def shift(self, d: int) -> "IntPoly":
        """Multiply by t^d."""
        if self.is_zero():
            return self
        return IntPoly((0,) * d + self.coeffs)

    def divide_t_exact(self, d: int) -> "IntPoly":
        """Divide by t^d; the low coefficients must vanish."""
        if any(self.coeff(i) for i in range(min(d, len(self.coeffs)))):
            raise ValueError("polynomial not divisible by t^%d" % d)
        return IntPoly(self.coeffs[d:])

    def eval_at(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


def one_minus_t() -> IntPoly:
    return IntPoly.of(1, -1)


@dataclass(frozen=True)
class RationalSeries:
    """Integer polynomial numerator over (1-t)^pole.

    Values are equal iff the cross-multiplied numerators agree, i.e.
    n1*(1-t)^p2 == n2*(1-t)^p1 as polynomials.
    """

    num: IntPoly
    pole: int

    def __post_init__(self):
        if self.pole < 0:
            raise ValueError("pole order must be nonnegative")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalSeries):
            return NotImplemented
        return self.num * one_minus_t() ** other.pole == other.num * one_minus_t() ** self.pole

    def __hash__(self):
        return hash(self.reduced_pair())

    def reduced_pair(self) -> tuple[tuple[int, ...], int]:
        r = self.reduced()
        return (r.num.coeffs, r.pole)

    def reduced(self) -> "RationalSeries":
        """Cancel common (1-t) factors from numerator and denominator."""
        num, pole = self.num, self.pole
        if num.is_zero():
            return RationalSeries(num, 0)
        while pole > 0 and num.eval_at(1) == 0:
            # synthetic division by (1 - t)
            q = [0] * len(num.coeffs)
            carry = 0
            for i, c in enumerate(num.coeffs):
                carry = carry + c
                q[i] = carry
            num = IntPoly(tuple(q[:-1]))
            pole -= 1
        return RationalSeries(num, pole)

    def lift(self, pole: int) -> "RationalSeries":
        if pole < self.pole:
            raise ValueError("cannot lower the pole without cancellation")
        return RationalSeries(self.num * one_minus_t() ** (pole - self.pole), pole)

    def __add__(self, other: "RationalSeries") -> "RationalSeries":
        p = max(self.pole, other.pole)
        return RationalSeries(self.lift(p).num + other.lift(p).num, p)

    def __sub__(self, other: "RationalSeries") -> "RationalSeries":
        p = max(self.pole, other.pole)
        return RationalSeries(self.lift(p).num - other.lift(p).num, p)

    def scale(self, a: int) -> "RationalSeries":
        return RationalSeries(self.num.scale(a), self.pole)

    def shift_down(self, d: int) -> "RationalSeries":
        """Divide by t^d; valid when the series vanishes below degree d."""
        return RationalSeries(self.num.divide_t_exact(d), self.pole)

    def at_zero(self) -> int:
        return self.num.coeff(0)


def expand(rs: RationalSeries, n: int) -> list[int]:
    """Coefficients of the power-series expansion up to degree n inclusive."""
    if n < 0:
        return []
    p = rs.pole
    out = [0] * (n + 1)
    for i, c in enumerate(rs.num.coeffs):
        if c == 0 or i > n:
            continue
        for d in range(i, n + 1):
            # 1/(1-t)^p = sum binom(m+p-1, p-1) t^m; p = 0 is the constant 1
            m = d - i
            out[d] += c * (comb(m + p - 1, p - 1) if p > 0 else (1 if m == 0 else 0))
    return out


@dataclass(frozen=True)
class CharOffset:
    """Relative H-eigencharacter exponent vector (one integer per embedding).

    y_j carries offset +e_j, z_j carries -e_j, h_j carries 0.  Offsets are
    never reduced modulo anything; callers declare the validity radius that
    genericity grants them.
    """

    exps: tuple[int, ...]

    @staticmethod
    def zero(f: int) -> "CharOffset":
        return CharOffset((0,) * f)

    def __len__(self) -> int:
        return len(self.exps)

    def __add__(self, other: "CharOffset") -> "CharOffset":
        return CharOffset(tuple(a + b for a, b in zip(self.exps, other.exps, strict=True)))

    def __sub__(self, other: "CharOffset") -> "CharOffset":
        return CharOffset(tuple(a - b for a, b in zip(self.exps, other.exps, strict=True)))

    def __neg__(self) -> "CharOffset":
        return CharOffset(tuple(-a for a in self.exps))

    def l1(self) -> int:
        return sum(abs(a) for a in self.exps)


class BigradedSeries:
    """Truncated table (stored degree, character offset) -> multiplicity.

    Stored degree n is the package-wide convention for graded degree -n.
    Absent keys mean multiplicity zero; zero entries are never stored.
    Instances are immutable by convention after construction.
    """

    def __init__(self, trunc: int, entries: Mapping[tuple[int, CharOffset], int] | None = None):
        if trunc < 0:
            raise ValueError("truncation must be nonnegative")
        self.trunc = trunc
        table: dict[tuple[int, CharOffset], int] = {}
        for (d, c), mult in (entries or {}).items():
            if mult < 0:
                raise ValueError("multiplicities must be nonnegative")
            if not 0 <= d <= trunc:
                raise TruncationError(f"degree {d} outside 0..{trunc}")
            if mult:
                table[(d, c)] = table.get((d, c), 0) + mult
        self.entries = table

    def mult(self, d: int, c: CharOffset) -> int:
        return self.entries.get((d, c), 0)

    def total(self, d: int) -> int:
        return sum(m for (dd, _), m in self.entries.items() if dd == d)

    def totals(self) -> list[int]:
        out = [0] * (self.trunc + 1)
        for (d, _), m in self.entries.items():
            out[d] += m
        return out

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BigradedSeries):
            return NotImplemented
        return self.trunc == other.trunc and self.entries == other.entries

    def __repr__(self):
        return f"BigradedSeries(trunc={self.trunc}, entries={len(self.entries)})"


def bigraded_shift_twist(
    b: BigradedSeries, shift: int, twist: CharOffset, new_trunc: int | None = None
) -> BigradedSeries:
    """Shift stored degrees by ``shift`` and offsets by ``twist``.

    The output entry at (d, c) is the input entry at (d - shift, c - twist).
    """
    trunc = b.trunc if new_trunc is None else new_trunc
    out: dict[tuple[int, CharOffset], int] = {}
    for (d, c), m in b.entries.items():
        nd = d + shift
        if not 0 <= nd <= trunc:
            raise TruncationError(f"shifted degree {nd} outside 0..{trunc}")
        out[(nd, c + twist)] = m
    return BigradedSeries(trunc, out)


def bigraded_sum(items: Iterable[BigradedSeries]) -> BigradedSeries:
    """Pointwise sum; all inputs must share one truncation."""
    items = list(items)
    if not items:
        raise ValueError("empty bigraded sum needs a truncation; pass at least one series")
    trunc = items[0].trunc
    out: dict[tuple[int, CharOffset], int] = {}
    for b in items:
        if b.trunc != trunc:
            raise TruncationError("mismatched truncations in bigraded sum")
        for key, m in b.entries.items():
            out[key] = out.get(key, 0) + m
    return BigradedSeries(trunc, out)


# -- JSON forms ---------------------------------------------------------

def rational_to_json(rs: RationalSeries) -> dict:
    return {"num": [str(c) for c in rs.num.coeffs], "pole": rs.pole}


def rational_from_json(data: Mapping) -> RationalSeries:
    return RationalSeries(IntPoly(tuple(int(c) for c in data["num"])), int(data["pole"]))


def bigraded_to_json(b: BigradedSeries) -> dict:
    entries = sorted(((d, c.exps, m) for (d, c), m in b.entries.items()))
    return {
        "trunc": b.trunc,
        "entries": [
            {"deg": d, "offset": list(exps), "mult": str(m)} for d, exps, m in entries
        ],
    }


def bigraded_from_json(data: Mapping) -> BigradedSeries:
    entries = {
        (int(e["deg"]), CharOffset(tuple(int(x) for x in e["offset"]))): int(e["mult"])
        for e in data["entries"]
    }
    return BigradedSeries(int(data["trunc"]), entries)


def dumps_canonical(obj) -> str:
    """Deterministic JSON used by the CLI."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))
