from fractions import Fraction

import pytest

from metawhit.action import ActionError
from metawhit.cover import build_cover
from metawhit.laurent import FactoredPoly, LaurentPoly, RatFunc
from metawhit.rootdata import RootDatum
from metawhit.scalars import SL2, SU3, Scalar
from metawhit.whittaker import (
    cfun,
    cfun_inversions,
    cfun_longest,
    cfun_simple,
    cfun_word,
    classical_whittaker_oracle,
    coroot_cfactor,
    weyl_character,
    whittaker_normalized,
)

ONE = Scalar.one()


def sl2_cover(type_name, n, q, d=1):
    return build_cover(type_name, n, q, [(SL2, d)] * len(q))


def su3_cover(type_name, n, q, d=1):
    return build_cover(type_name, n, q, [(SU3, d)] * len(q))


def lp(rank, *terms):
    out = LaurentPoly.zero(rank)
    for exp, coeff in terms:
        out = out + LaurentPoly.monomial(exp, coeff)
    return out


def qp(k):
    return Scalar.q_power(k)


def binom_den(rank, *factors):
    den = FactoredPoly.one(rank)
    for exp, coeff in factors:
        den = den.mul_poly(LaurentPoly.const(rank, ONE) - LaurentPoly.monomial(exp, coeff))
    return den


def test_cfun_simple_sl2_shapes():
    # one-node factor (1 - q^-d x^na) / (1 - x^na) for several indices
    for n, na in ((1, 1), (2, 2), (3, 3)):
        c = sl2_cover("A1", n, [1])
        got = cfun_simple(c, 0)
        expect = RatFunc(
            lp(1, ((0,), ONE), ((na,), -qp(-1))),
            binom_den(1, ((na,), ONE)),
        )
        assert got == expect
    # degree-2 marker scales the q exponent
    c = sl2_cover("A1", 2, [1], d=2)
    assert cfun_simple(c, 0) == RatFunc(
        lp(1, ((0,), ONE), ((2,), -qp(-2))),
        binom_den(1, ((2,), ONE)),
    )


def test_cfun_simple_su3_shapes():
    # odd index: eps = -1 gives (1 - q^-d x^na)(1 + q^-2d x^na) / (1 - x^2na)
    c = su3_cover("A1", 1, [1])
    got = cfun_simple(c, 0)
    expect = RatFunc(
        lp(1, ((0,), ONE), ((1,), -qp(-1))) * lp(1, ((0,), ONE), ((1,), qp(-2))),
        binom_den(1, ((2,), ONE)),
    )
    assert got == expect
    # even index: eps = +1 flips both signs
    c = su3_cover("A1", 2, [1])
    got = cfun_simple(c, 0)
    expect = RatFunc(
        lp(1, ((0,), ONE), ((2,), qp(-1))) * lp(1, ((0,), ONE), ((2,), -qp(-2))),
        binom_den(1, ((4,), ONE)),
    )
    assert got == expect


def test_cfun_word_independence():
    for cov in (sl2_cover("A2", 2, [1, 1]), sl2_cover("B2", 2, [1, 2])):
        datum = cov.datum
        w0 = datum.longest_element()
        for w in datum.weyl_elements():
            base = cfun_word(cov, w.word)
            assert base == cfun_inversions(cov, w)
        # braid words agree letter for letter
        if datum.type_name == "A2":
            assert cfun_word(cov, (0, 1, 0)) == cfun_word(cov, (1, 0, 1))
        assert cfun_longest(cov) == cfun_inversions(cov, w0)


def test_cfun_longest_is_full_product():
    cov = sl2_cover("A2", 2, [1, 1])
    expect = RatFunc.one(2)
    for beta in cov.datum.positive_coroots():
        expect = expect * coroot_cfactor(cov, beta)
    assert cfun_longest(cov) == expect


def test_whittaker_classical_rank_one_frozen():
    cov = sl2_cover("A1", 1, [1])
    head = RatFunc(lp(1, ((0,), ONE), ((1,), -qp(-1))))
    assert whittaker_normalized(cov, (0,)) == head
    for m in (1, 2, 3):
        box = RatFunc(lp(1, *(((j,), ONE) for j in range(-m, m + 1))))
        assert whittaker_normalized(cov, (m,)) == head * box
    assert not whittaker_normalized(cov, (-1,))


def test_whittaker_depth_two_frozen():
    cov = sl2_cover("A1", 2, [1])
    g1 = Scalar.gauss(SL2, 2, 1, 1)
    den = binom_den(1, ((2,), ONE))
    for m in (0, 1, 2):
        main = RatFunc(
            lp(1, ((-m,), ONE), ((-m + 2,), -qp(-1)), ((m + 2,), -(ONE - qp(-1)))),
            den,
        )
        tail = RatFunc(lp(1, ((m + 1,), qp(-1) * g1)))
        assert whittaker_normalized(cov, (m,)) == main + tail
    # depth-two value at the origin collapses to a two-term polynomial
    assert whittaker_normalized(cov, (0,)) == RatFunc(
        lp(1, ((0,), ONE), ((1,), qp(-1) * g1))
    )


def test_whittaker_su3_runs_and_supports():
    cov = su3_cover("A1", 2, [1])
    val = whittaker_normalized(cov, (2,))
    assert val
    # all numerator exponents sit in the two reachable cosets mod 4
    keys = {cov.coset_key(e) for e in val.num.terms}
    assert len(keys) <= 2


def test_weyl_character_adjoint():
    datum = RootDatum("A2")
    chi = weyl_character(datum, (1, 1))
    expect = RatFunc(
        lp(
            2,
            ((0, 0), Scalar.from_fraction(2)),
            ((1, 0), ONE),
            ((0, 1), ONE),
            ((1, 1), ONE),
            ((-1, 0), ONE),
            ((0, -1), ONE),
            ((-1, -1), ONE),
        )
    )
    assert chi == expect


def test_classical_oracle_matches_engine():
    cov = sl2_cover("A1", 1, [1])
    for m in range(4):
        assert whittaker_normalized(cov, (m,)) == classical_whittaker_oracle(cov, (m,))
    cov = sl2_cover("A2", 1, [1, 1])
    for lam in ((0, 0), (1, 1), (2, 1), (1, 2)):
        assert whittaker_normalized(cov, lam) == classical_whittaker_oracle(cov, lam)
    with pytest.raises(ActionError):
        classical_whittaker_oracle(sl2_cover("A1", 2, [1]), (0,))


def test_exponent_validation():
    cov = sl2_cover("A1", 1, [1])
    with pytest.raises(ActionError):
        whittaker_normalized(cov, (0, 0))
    with pytest.raises(ActionError):
        whittaker_normalized(cov, (Fraction(1, 2),))
