"""Intertwiner factors and spherical Whittaker values.

The one-reflection factor lives on a single coroot line and only sees the
congruence index and marker degree of that line.  Longer products follow the
usual cocycle recipe: walk a reduced word, twisting each one-node factor by
the tail of the word, or equivalently take one factor per inversion coroot.
Both constructions are implemented and the tests compare them.

The normalized Whittaker value at a dominant exponent lam is the Weyl sum of
twisted long-element factors against the action of each group element on the
lowest monomial x^{w0.lam}.  Off the dominant cone the value is zero by
definition.  A separate classical oracle (product formula times a Weyl
character) covers the untwisted case and anchors the normalization.
"""

from __future__ import annotations

from .action import ActionError, act
from .cover import CoverStructure
from .laurent import Exp, FactoredPoly, LaurentPoly, RatFunc
from .rootdata import RootDatum, WeylElem
from .scalars import SL2, Scalar


def _one(rank: int) -> LaurentPoly:
    return LaurentPoly.const(rank, Scalar.one())


def coroot_cfactor(cover: CoverStructure, beta: Exp) -> RatFunc:
    """One-coroot factor of the intertwiner c-function."""
    rank = cover.datum.rank
    kind, d = cover.coroot_marker(beta)
    nb = cover.n_coroot(beta)
    scaled = tuple(nb * b for b in beta)
    x = LaurentPoly.monomial(scaled)
    if kind == SL2:
        num = _one(rank) - x.scale(Scalar.q_power(-d))
        den = _one(rank) - x
    else:
        eps = Scalar.from_fraction(cover.eps_coroot(beta))
        num = (_one(rank) + x.scale(eps * Scalar.q_power(-d))) * (
            _one(rank) - x.scale(eps * Scalar.q_power(-2 * d))
        )
        den = _one(rank) - LaurentPoly.monomial(tuple(2 * e for e in scaled))
    return RatFunc(num, FactoredPoly.from_poly(den))


def cfun_simple(cover: CoverStructure, i: int) -> RatFunc:
    """C-function of one simple reflection."""
    return coroot_cfactor(cover, cover.datum.simple_coroot(i))


def cfun_word(cover: CoverStructure, word: tuple) -> RatFunc:
    """C-function along a reduced word, one tail-twisted factor per letter."""
    datum = cover.datum
    out = RatFunc.one(datum.rank)
    tail = datum.weyl_word(())
    # right to left: the twist of each letter is the product of later letters
    for i in reversed(word):
        out = cfun_simple(cover, i).subst(datum.inv(tail).mat) * out
        tail = datum.mul(datum.weyl_simple(i), tail)
    return out


def cfun_inversions(cover: CoverStructure, w: WeylElem) -> RatFunc:
    """Same c-function assembled coroot by coroot over the inversion set."""
    out = RatFunc.one(cover.datum.rank)
    for beta in cover.datum.inversions(w):
        out = out * coroot_cfactor(cover, beta)
    return out


def cfun(cover: CoverStructure, w: WeylElem) -> RatFunc:
    return cfun_word(cover, w.word)


def cfun_longest(cover: CoverStructure) -> RatFunc:
    return cfun(cover, cover.datum.longest_element())


def _check_exponent(cover: CoverStructure, lam) -> Exp:
    lam = tuple(lam)
    if len(lam) != cover.datum.rank or not all(isinstance(v, int) for v in lam):
        raise ActionError("character exponent must be an integer vector of full rank")
    return lam


def whittaker_normalized(cover: CoverStructure, lam) -> RatFunc:
    """Normalized spherical Whittaker value at x^lam; zero off the cone."""
    datum = cover.datum
    lam = _check_exponent(cover, lam)
    if not datum.is_dominant(lam):
        return RatFunc.zero(datum.rank)
    w0 = datum.longest_element()
    cw0 = cfun(cover, w0)
    lowest = RatFunc.monomial(w0.act(lam))
    total = RatFunc.zero(datum.rank)
    for w in datum.weyl_elements():
        total = total + cw0.subst(w.mat) * act(cover, w, lowest)
    return total


def weyl_character(datum: RootDatum, lam) -> RatFunc:
    """Irreducible character of highest weight lam, as a Weyl sum."""
    rank = datum.rank
    lam = tuple(lam)
    total = RatFunc.zero(rank)
    for w in datum.weyl_elements():
        den = FactoredPoly.one(rank)
        for beta in datum.positive_coroots():
            neg = tuple(-b for b in w.act(beta))
            den = den.mul_poly(_one(rank) - LaurentPoly.monomial(neg))
        total = total + RatFunc(LaurentPoly.monomial(w.act(lam)), den)
    return total


def classical_whittaker_oracle(cover: CoverStructure, lam) -> RatFunc:
    """Product-formula value for untwisted covers, used as an oracle.

    Only valid when every congruence index is 1, so the lattice is full.
    """
    datum = cover.datum
    lam = _check_exponent(cover, lam)
    for beta in datum.positive_coroots():
        if cover.n_coroot(beta) != 1:
            raise ActionError("oracle requires congruence index 1 on every coroot")
    if not datum.is_dominant(lam):
        return RatFunc.zero(datum.rank)
    out = weyl_character(datum, lam)
    for beta in datum.positive_coroots():
        d = cover.coroot_marker(beta)[1]
        poly = _one(datum.rank) - LaurentPoly.monomial(beta).scale(Scalar.q_power(-d))
        out = out * RatFunc.from_poly(poly)
    return out
