"""Sparse Laurent polynomials and rational functions in the torus variables.

Exponents are integer tuples in coroot coordinates.  Rational functions keep
their denominators in factored form: sums take factor-wise least common
multiples, so the Weyl-sum denominators stay as short products of binomials
instead of expanded polynomials.  Equality always goes through expansion and
cross multiplication; nothing here factors or cancels.
"""

from __future__ import annotations

from typing import Callable, Dict, Hashable, Iterable, List, Tuple

from .scalars import Scalar

Exp = Tuple[int, ...]
Mat = Tuple[Tuple[int, ...], ...]


def apply_mat(mat: Mat, v: Exp) -> Exp:
    return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in mat)


def _zero_exp(rank: int) -> Exp:
    return (0,) * rank


class LaurentPoly:
    """Finite sum of scalar multiples of torus monomials."""

    __slots__ = ("rank", "terms")

    def __init__(self, rank: int, terms: Dict[Exp, Scalar] | None = None) -> None:
        self.rank = rank
        self.terms: Dict[Exp, Scalar] = {}
        if terms:
            for exp, c in terms.items():
                if c:
                    self.terms[exp] = c

    @staticmethod
    def zero(rank: int) -> LaurentPoly:
        return LaurentPoly(rank)

    @staticmethod
    def monomial(exp: Exp, coeff: Scalar | None = None) -> LaurentPoly:
        c = Scalar.one() if coeff is None else coeff
        return LaurentPoly(len(exp), {tuple(exp): c})

    @staticmethod
    def const(rank: int, coeff: Scalar) -> LaurentPoly:
        return LaurentPoly(rank, {_zero_exp(rank): coeff})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if self.terms.keys() != other.terms.keys():
            return False
        return all(c == other.terms[e] for e, c in self.terms.items())

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        out = dict(self.terms)
        for exp, c in other.terms.items():
            s = out.get(exp)
            out[exp] = c if s is None else s + c
        return LaurentPoly(self.rank, out)

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(self.rank, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: LaurentPoly) -> LaurentPoly:
        return self + (-other)

    def __mul__(self, other: LaurentPoly) -> LaurentPoly:
        out: Dict[Exp, Scalar] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                s = out.get(exp)
                out[exp] = c if s is None else s + c
        return LaurentPoly(self.rank, out)

    def scale(self, c: Scalar) -> LaurentPoly:
        if not c:
            return LaurentPoly(self.rank)
        return LaurentPoly(self.rank, {e: c * v for e, v in self.terms.items()})

    def shift(self, exp: Exp) -> LaurentPoly:
        """Multiply by the monomial x^exp."""
        return LaurentPoly(self.rank, {tuple(a + b for a, b in zip(e, exp)): c for e, c in self.terms.items()})

    def subst(self, mat: Mat) -> LaurentPoly:
        out: Dict[Exp, Scalar] = {}
        for e, c in self.terms.items():
            exp = apply_mat(mat, e)
            s = out.get(exp)
            out[exp] = c if s is None else s + c
        return LaurentPoly(self.rank, out)

    def split(self, keyfn: Callable[[Exp], Hashable]) -> Dict[Hashable, LaurentPoly]:
        out: Dict[Hashable, Dict[Exp, Scalar]] = {}
        for e, c in self.terms.items():
            out.setdefault(keyfn(e), {})[e] = c
        return {k: LaurentPoly(self.rank, t) for k, t in out.items()}

    def min_exp(self) -> Exp:
        return min(self.terms)

    def sorted_terms(self) -> List[Tuple[Exp, Scalar]]:
        return sorted(self.terms.items(), key=lambda kv: kv[0])

    def key(self) -> tuple:
        return tuple((e, c.key()) for e, c in self.sorted_terms())

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c!r})*x^{list(e)}" for e, c in self.sorted_terms())


class FactoredPoly:
    """A nonzero Laurent polynomial kept as unit * x^mono * product of factors.

    Every stored factor is normalized: its lexicographically least exponent is
    the origin and carries coefficient 1.  The shift and scale removed by that
    normalization live in (mono, unit), so substituted images of one factor
    normalize back to a shared table key.
    """

    __slots__ = ("rank", "unit", "mono", "factors", "_expanded")

    def __init__(self, rank: int, unit: Scalar, mono: Exp, factors: Dict[tuple, Tuple[LaurentPoly, int]]) -> None:
        if not unit:
            raise ZeroDivisionError("zero unit in factored polynomial")
        self.rank = rank
        self.unit = unit
        self.mono = mono
        self.factors = factors
        self._expanded: LaurentPoly | None = None

    @staticmethod
    def one(rank: int) -> FactoredPoly:
        return FactoredPoly(rank, Scalar.one(), _zero_exp(rank), {})

    @staticmethod
    def from_poly(p: LaurentPoly) -> FactoredPoly:
        if not p:
            raise ZeroDivisionError("zero polynomial as denominator factor")
        base = p.min_exp()
        lead = p.terms[base]
        unit = lead
        mono = base
        norm = p.shift(tuple(-a for a in base)).scale(Scalar.one() / lead)
        if len(norm.terms) == 1:
            return FactoredPoly(p.rank, unit, mono, {})
        return FactoredPoly(p.rank, unit, mono, {norm.key(): (norm, 1)})

    def mul(self, other: FactoredPoly) -> FactoredPoly:
        factors = dict(self.factors)
        for k, (poly, m) in other.factors.items():
            have = factors.get(k)
            factors[k] = (poly, m + (have[1] if have else 0))
        return FactoredPoly(
            self.rank,
            self.unit * other.unit,
            tuple(a + b for a, b in zip(self.mono, other.mono)),
            factors,
        )

    def mul_poly(self, p: LaurentPoly) -> FactoredPoly:
        return self.mul(FactoredPoly.from_poly(p))

    def lcm(self, other: FactoredPoly) -> FactoredPoly:
        """Smallest factored multiple of both, ignoring units and monomials.

        The unit and monomial parts are taken from self so that
        lcm = self * cofactor(other-part missing from self) need not hold
        literally; callers always pair lcm with cofactor_in.
        """
        factors = dict(self.factors)
        for k, (poly, m) in other.factors.items():
            have = factors.get(k)
            if have is None or have[1] < m:
                factors[k] = (poly, m)
        return FactoredPoly(self.rank, self.unit, self.mono, factors)

    def cofactor_in(self, target: FactoredPoly) -> LaurentPoly:
        """Expanded polynomial g with target = self * g (as rational functions)."""
        out = LaurentPoly.const(self.rank, target.unit / self.unit).shift(
            tuple(a - b for a, b in zip(target.mono, self.mono))
        )
        for k, (poly, m) in target.factors.items():
            have = self.factors.get(k)
            need = m - (have[1] if have else 0)
            if need < 0:
                raise ValueError("target is not a multiple of this denominator")
            for _ in range(need):
                out = out * poly
        return out

    def expand(self) -> LaurentPoly:
        if self._expanded is None:
            out = LaurentPoly.const(self.rank, self.unit).shift(self.mono)
            for poly, m in self.factors.values():
                for _ in range(m):
                    out = out * poly
            self._expanded = out
        return self._expanded

    def subst(self, mat: Mat) -> FactoredPoly:
        out = FactoredPoly(self.rank, self.unit, apply_mat(mat, self.mono), {})
        for poly, m in self.factors.values():
            piece = FactoredPoly.from_poly(poly.subst(mat))
            for _ in range(m):
                out = out.mul(piece)
        return out

    def exponents(self) -> Iterable[Exp]:
        """All exponents appearing in the stored factors and monomial part."""
        yield self.mono
        for poly, _ in self.factors.values():
            yield from poly.terms.keys()

    def __repr__(self) -> str:
        bits = [f"({self.unit!r})*x^{list(self.mono)}"]
        for _, (poly, m) in sorted(self.factors.items()):
            bits.append(f"({poly!r})^{m}")
        return " * ".join(bits)


class RatFunc:
    """Quotient num/den with factored denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: FactoredPoly | None = None) -> None:
        self.num = num
        self.den = den if den is not None else FactoredPoly.one(num.rank)
        if not num:
            self.den = FactoredPoly.one(num.rank)

    @property
    def rank(self) -> int:
        return self.num.rank

    @staticmethod
    def zero(rank: int) -> RatFunc:
        return RatFunc(LaurentPoly.zero(rank))

    @staticmethod
    def one(rank: int) -> RatFunc:
        return RatFunc(LaurentPoly.const(rank, Scalar.one()))

    @staticmethod
    def monomial(exp: Exp, coeff: Scalar | None = None) -> RatFunc:
        return RatFunc(LaurentPoly.monomial(exp, coeff))

    @staticmethod
    def from_poly(p: LaurentPoly) -> RatFunc:
        return RatFunc(p)

    def __bool__(self) -> bool:
        return bool(self.num)

    def __add__(self, other: RatFunc) -> RatFunc:
        if not self:
            return other
        if not other:
            return self
        lcm = self.den.lcm(other.den)
        num = self.num * self.den.cofactor_in(lcm) + other.num * other.den.cofactor_in(lcm)
        return RatFunc(num, lcm)

    def __neg__(self) -> RatFunc:
        return RatFunc(-self.num, self.den)

    def __sub__(self, other: RatFunc) -> RatFunc:
        return self + (-other)

    def __mul__(self, other: RatFunc) -> RatFunc:
        if not self or not other:
            return RatFunc.zero(self.rank)
        return RatFunc(self.num * other.num, self.den.mul(other.den))

    def __truediv__(self, other: RatFunc) -> RatFunc:
        if not other:
            raise ZeroDivisionError("division by the zero function")
        if not self:
            return self
        return RatFunc(self.num * other.den.expand(), self.den.mul(FactoredPoly.from_poly(other.num)))

    def scale(self, c: Scalar) -> RatFunc:
        return RatFunc(self.num.scale(c), self.den)

    def shift(self, exp: Exp) -> RatFunc:
        return RatFunc(self.num.shift(exp), self.den)

    def subst(self, mat: Mat) -> RatFunc:
        return RatFunc(self.num.subst(mat), self.den.subst(mat))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num * other.den.expand() == other.num * self.den.expand()

    __hash__ = None  # type: ignore[assignment]

    def split(self, keyfn: Callable[[Exp], Hashable]) -> Dict[Hashable, RatFunc]:
        """Break the numerator along keyfn; every part keeps the denominator."""
        return {k: RatFunc(p, self.den) for k, p in self.num.split(keyfn).items()}

    def __repr__(self) -> str:
        return f"({self.num!r}) / ({self.den!r})"
