"""Exact coefficient arithmetic for the cover engine.

Scalars are fractions of sparse Laurent polynomials over Q in one formal
variable q and a family of Gauss-sum symbols.  Symbol products are rewritten
into normal form on the fly: a degree-d symbol pair with opposite residues
collapses to q**d, and residue 0 collapses to -1 at construction time.
Equality is decided by cross multiplication, never by factoring.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Dict, Iterator, Tuple

SL2 = "sl2"
SU3 = "su3"


@dataclass(frozen=True, order=True)
class GaussSym:
    """One Gauss-sum symbol: rank-one kind, residue modulus, field degree, residue."""

    kind: str
    n: int
    d: int
    t: int

    def __post_init__(self) -> None:
        if self.kind not in (SL2, SU3):
            raise ValueError(f"unknown symbol kind {self.kind!r}")
        if self.n <= 0 or self.d <= 0:
            raise ValueError("modulus and degree must be positive")
        if not 0 <= self.t < self.n:
            raise ValueError("residue must be reduced modulo n")


# A scalar monomial is (qexp, syms) with syms a sorted tuple of (GaussSym, power),
# power > 0.  An SPoly maps monomials to nonzero Fractions.
Monomial = Tuple[int, Tuple[Tuple[GaussSym, int], ...]]
SPoly = Dict[Monomial, Fraction]

_ONE_MONO: Monomial = (0, ())


def _normalize_monomial(qexp: int, counts: Dict[GaussSym, int]) -> Monomial:
    # Collapse sl2 pairs with opposite residues into powers of q.  Residue n/2
    # is self-paired, so squares of that symbol collapse too.
    for sym in sorted(counts):
        c = counts.get(sym, 0)
        if c <= 0 or sym.kind != SL2:
            continue
        partner = GaussSym(SL2, sym.n, sym.d, (sym.n - sym.t) % sym.n)
        if partner == sym:
            qexp += sym.d * (c // 2)
            counts[sym] = c % 2
        elif partner in counts and sym.t < partner.t:
            m = min(c, counts[partner])
            counts[sym] = c - m
            counts[partner] -= m
            qexp += sym.d * m
    syms = tuple((s, c) for s, c in sorted(counts.items()) if c > 0)
    return (qexp, syms)


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if a == _ONE_MONO:
        return b
    if b == _ONE_MONO:
        return a
    counts: Dict[GaussSym, int] = dict(a[1])
    for sym, c in b[1]:
        counts[sym] = counts.get(sym, 0) + c
    return _normalize_monomial(a[0] + b[0], counts)


def _spoly_add(a: SPoly, b: SPoly) -> SPoly:
    out = dict(a)
    for mono, coeff in b.items():
        new = out.get(mono, Fraction(0)) + coeff
        if new:
            out[mono] = new
        else:
            out.pop(mono, None)
    return out


def _spoly_mul(a: SPoly, b: SPoly) -> SPoly:
    out: SPoly = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            mono = _mono_mul(ma, mb)
            new = out.get(mono, Fraction(0)) + ca * cb
            if new:
                out[mono] = new
            else:
                out.pop(mono, None)
    return out


def _spoly_neg(a: SPoly) -> SPoly:
    return {m: -c for m, c in a.items()}


def _spoly_scale(a: SPoly, k: Fraction) -> SPoly:
    if not k:
        return {}
    return {m: c * k for m, c in a.items()}


def _content_normalize(num: SPoly, den: SPoly) -> Tuple[SPoly, SPoly]:
    """Strip common monomial and rational content; sign-fix the denominator."""
    if not num:
        return {}, {_ONE_MONO: Fraction(1)}
    monos = list(num.keys()) + list(den.keys())
    qshift = min(m[0] for m in monos)
    common: Dict[GaussSym, int] = dict(monos[0][1])
    for m in monos[1:]:
        d = dict(m[1])
        common = {s: min(c, d[s]) for s, c in common.items() if s in d}
    def shift(p: SPoly) -> SPoly:
        out: SPoly = {}
        for (qe, syms), c in p.items():
            counts = dict(syms)
            for s, k in common.items():
                counts[s] -= k
            key = (qe - qshift, tuple((s, c2) for s, c2 in sorted(counts.items()) if c2 > 0))
            out[key] = c
        return out
    if qshift or common:
        num, den = shift(num), shift(den)
    # Clear rational content: make the denominator integral and primitive with
    # a positive leading coefficient, scale the numerator to match.
    lead = min(den)
    denom_lcm = 1
    for c in den.values():
        denom_lcm = denom_lcm * c.denominator // gcd(denom_lcm, c.denominator)
    numer_gcd = 0
    for c in den.values():
        numer_gcd = gcd(numer_gcd, abs(c.numerator))
    scale = Fraction(denom_lcm, numer_gcd)
    if den[lead] < 0:
        scale = -scale
    if scale != 1:
        num = _spoly_scale(num, scale)
        den = _spoly_scale(den, scale)
    return num, den


class Scalar:
    """Element of the coefficient field: a fraction of symbol polynomials."""

    __slots__ = ("num", "den")

    def __init__(self, num: SPoly, den: SPoly | None = None) -> None:
        if den is None:
            den = {_ONE_MONO: Fraction(1)}
        if not den:
            raise ZeroDivisionError("scalar with zero denominator")
        self.num, self.den = _content_normalize(num, den)

    # Constructors

    @staticmethod
    def from_fraction(c: Fraction | int) -> Scalar:
        c = Fraction(c)
        return Scalar({_ONE_MONO: c} if c else {})

    @staticmethod
    def q_power(k: int) -> Scalar:
        return Scalar({(k, ()): Fraction(1)})

    @staticmethod
    def gauss(kind: str, n: int, d: int, t: int) -> Scalar:
        """Symbol constructor; reduces t mod n, and an sl2 residue 0 to -1."""
        t %= n
        if kind == SL2 and t == 0:
            return Scalar.from_fraction(-1)
        return Scalar({(0, ((GaussSym(kind, n, d, t), 1),)): Fraction(1)})

    @staticmethod
    def zero() -> Scalar:
        return Scalar({})

    @staticmethod
    def one() -> Scalar:
        return Scalar.from_fraction(1)

    # Ring structure

    def __add__(self, other: Scalar) -> Scalar:
        if self.den == other.den:
            return Scalar(_spoly_add(self.num, other.num), dict(self.den))
        num = _spoly_add(_spoly_mul(self.num, other.den), _spoly_mul(other.num, self.den))
        return Scalar(num, _spoly_mul(self.den, other.den))

    def __sub__(self, other: Scalar) -> Scalar:
        return self + (-other)

    def __neg__(self) -> Scalar:
        return Scalar(_spoly_neg(self.num), dict(self.den))

    def __mul__(self, other: Scalar) -> Scalar:
        return Scalar(_spoly_mul(self.num, other.num), _spoly_mul(self.den, other.den))

    def __truediv__(self, other: Scalar) -> Scalar:
        if not other.num:
            raise ZeroDivisionError("division by zero scalar")
        return Scalar(_spoly_mul(self.num, other.den), _spoly_mul(self.den, other.num))

    def __pow__(self, k: int) -> Scalar:
        if k < 0:
            return Scalar.one() / self ** (-k)
        out = Scalar.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Scalar.from_fraction(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return _spoly_mul(self.num, other.den) == _spoly_mul(other.num, self.den)

    __hash__ = None  # type: ignore[assignment]

    def __bool__(self) -> bool:
        return bool(self.num)

    def is_one(self) -> bool:
        return self.num == self.den

    def sorted_terms(self, part: str = "num") -> Iterator[Tuple[Monomial, Fraction]]:
        """Monomials of the chosen part in the fixed total order."""
        p = self.num if part == "num" else self.den
        return iter(sorted(p.items()))

    def key(self) -> tuple:
        """Hashable image of the stored representation, for use in factor tables.

        Equal scalars built along different paths may key differently; callers
        only rely on equal keys implying equal scalars.
        """
        return (
            tuple(sorted(self.num.items())),
            tuple(sorted(self.den.items())),
        )

    def as_fraction(self) -> Fraction:
        """The value of a purely rational scalar; raises if symbols or q appear."""
        if not self.num:
            return Fraction(0)
        if set(self.num) | set(self.den) != {_ONE_MONO}:
            raise ValueError("scalar is not a plain rational")
        return self.num[_ONE_MONO] / self.den[_ONE_MONO]

    def __repr__(self) -> str:
        def fmt(p: SPoly) -> str:
            if not p:
                return "0"
            bits = []
            for (qe, syms), c in sorted(p.items()):
                factors = [] if c == 1 and (qe or syms) else [str(c)]
                if qe:
                    factors.append(f"q^{qe}" if qe != 1 else "q")
                for s, k in syms:
                    base = f"g[{s.kind},n={s.n},d={s.d}]({s.t})"
                    factors.append(base if k == 1 else base + f"^{k}")
                bits.append("*".join(factors) or "1")
            return " + ".join(bits)
        if self.den == {_ONE_MONO: Fraction(1)}:
            return fmt(self.num)
        return f"({fmt(self.num)})/({fmt(self.den)})"
