"""Tests for truncated cyclic Witt/necklace/aperiodic vectors.

Classical oracles (necklace counts, one-prime Witt polynomials, Frobenius
formulas) were frozen by hand before the module was written.
"""
import math
import random
from fractions import Fraction

import pytest

from wittburnside.burnside import (
    APERIODIC,
    GHOST,
    NECKLACE,
    WITT,
    IndexedVector,
    exp_M,
    wg_ghost,
    wg_op,
    nr_op,
    ap_op,
    witt_f,
    witt_v,
)
from wittburnside.cyclic import (
    CyclicVector,
    TruncationSet,
    aperiodic_poly,
    cyc_ap_mul,
    cyc_ap_op,
    cyc_frobenius,
    cyc_ghost,
    cyc_ghost_inv,
    cyc_nr_mul,
    cyc_nr_op,
    cyc_theta,
    cyc_theta_inv,
    cyc_universal,
    cyc_verschiebung,
    cyc_witt_ghost,
    cyc_witt_op,
    necklace_poly,
)
from wittburnside.errors import (
    NotBinomial,
    NotInImage,
    NotInvertibleIndex,
    SchemaError,
    TruncationTooSmall,
)
from wittburnside.groups import build_group, subgroup_classes, subgroup_group
from wittburnside.rings import QQ, RingValue, ZZ, divisors, mobius, parse_ring

D12 = TruncationSet.div(12)
D6 = TruncationSet.div(6)
D4 = TruncationSet.div(4)
D2 = TruncationSet.div(2)
Z8 = parse_ring("Z/8")


def cvec(T, flavor, ring, vals):
    return CyclicVector.from_ints(T, flavor, ring, vals)


def rand_cvec(T, flavor, ring, rng, lo=-9, hi=9):
    return cvec(T, flavor, ring, [rng.randint(lo, hi) for _ in T])


def brute_M(r, n):
    return Fraction(sum(mobius(d) * r ** (n // d) for d in divisors(n)), n)


def test_truncation_set_validation():
    assert D12.members == (1, 2, 3, 4, 6, 12)
    assert TruncationSet.div(1).members == (1,)
    with pytest.raises(SchemaError):
        TruncationSet([1, 4])
    with pytest.raises(SchemaError):
        TruncationSet([2])
    with pytest.raises(SchemaError):
        TruncationSet([])
    assert 6 in D12 and 5 not in D12


def test_witt_ghost_examples():
    one = TruncationSet.div(1)
    assert cyc_witt_ghost(cvec(one, WITT, ZZ, [7])).payloads() == (7,)
    rng = random.Random(0)
    for _ in range(10):
        a1, a2 = rng.randint(-9, 9), rng.randint(-9, 9)
        assert cyc_witt_ghost(cvec(D2, WITT, ZZ, [a1, a2])).payloads() == (
            a1, a1 * a1 + 2 * a2,
        )
        r = rng.randint(-5, 5)
        got = cyc_witt_ghost(cvec(D6, WITT, ZZ, [r, 0, 0, 0])).payloads()
        assert got == (r, r ** 2, r ** 3, r ** 6)


def test_universal_frozen_div2():
    s = cyc_universal(D2, "sum")
    assert [p.format() for p in s.polys] == [
        "1*a_1^1+1*b_1^1",
        "-1*a_1^1*b_1^1+1*a_2^1+1*b_2^1",
    ]
    p = cyc_universal(D2, "prod")
    assert [q.format() for q in p.polys] == [
        "1*a_1^1*b_1^1",
        "1*a_1^2*b_2^1+1*a_2^1*b_1^2+2*a_2^1*b_2^1",
    ]
    n = cyc_universal(D2, "neg")
    assert [q.format() for q in n.polys] == ["-1*a_1^1", "-1*a_1^2+-1*a_2^1"]


def test_universal_div12_integral():
    for op in ("sum", "prod", "neg"):
        for poly in cyc_universal(D12, op).polys:
            assert poly.is_integral()


def test_witt_op_ghost_homomorphism():
    rng = random.Random(1)
    for _ in range(8):
        a = rand_cvec(D12, WITT, ZZ, rng)
        b = rand_cvec(D12, WITT, ZZ, rng)
        ga, gb = cyc_witt_ghost(a).payloads(), cyc_witt_ghost(b).payloads()
        assert cyc_witt_ghost(cyc_witt_op("sum", a, b)).payloads() == tuple(
            u + v for u, v in zip(ga, gb)
        )
        assert cyc_witt_ghost(cyc_witt_op("prod", a, b)).payloads() == tuple(
            u * v for u, v in zip(ga, gb)
        )
        assert cyc_witt_ghost(cyc_witt_op("neg", a)).payloads() == tuple(-u for u in ga)


def test_witt_ring_axioms_mod8():
    rng = random.Random(2)
    for _ in range(5):
        x = rand_cvec(D12, WITT, Z8, rng, 0, 7)
        y = rand_cvec(D12, WITT, Z8, rng, 0, 7)
        z = rand_cvec(D12, WITT, Z8, rng, 0, 7)
        assert cyc_witt_op("prod", x, y) == cyc_witt_op("prod", y, x)
        assert cyc_witt_op("prod", x, cyc_witt_op("prod", y, z)) == cyc_witt_op(
            "prod", cyc_witt_op("prod", x, y), z
        )
        lhs = cyc_witt_op("prod", x, cyc_witt_op("sum", y, z))
        rhs = cyc_witt_op("sum", cyc_witt_op("prod", x, y), cyc_witt_op("prod", x, z))
        assert lhs == rhs


def test_nr_ap_mul_examples():
    assert cyc_nr_mul(cvec(D2, NECKLACE, ZZ, [0, 1]), cvec(D2, NECKLACE, ZZ, [0, 1])
                      ).payloads() == (0, 2)
    assert cyc_ap_mul(cvec(D2, APERIODIC, ZZ, [0, 1]), cvec(D2, APERIODIC, ZZ, [0, 1])
                      ).payloads() == (0, 1)
    e = CyclicVector.one(D12, NECKLACE, ZZ)
    rng = random.Random(3)
    x = rand_cvec(D12, NECKLACE, ZZ, rng)
    assert cyc_nr_mul(e, x) == x
    assert cyc_ap_mul(CyclicVector.one(D12, APERIODIC, ZZ), x.retag(APERIODIC)
                      ) == x.retag(APERIODIC)
    hot = cvec(D4, NECKLACE, ZZ, [0, 1, 0])
    assert cyc_nr_mul(hot, hot).payloads() == (0, 2, 0)


def test_ap_mul_mod3_matches_lift_reduce():
    Z3 = parse_ring("Z/3")
    rng = random.Random(4)
    for _ in range(10):
        xs = [rng.randint(0, 2) for _ in D6]
        ys = [rng.randint(0, 2) for _ in D6]
        lifted = cyc_ap_mul(cvec(D6, APERIODIC, ZZ, xs), cvec(D6, APERIODIC, ZZ, ys))
        direct = cyc_ap_mul(cvec(D6, APERIODIC, Z3, xs), cvec(D6, APERIODIC, Z3, ys))
        assert direct.payloads() == tuple(p % 3 for p in lifted.payloads())


def test_necklace_poly_frozen_values():
    got = [necklace_poly(RingValue.from_int(ZZ, 2), n).payload for n in range(1, 7)]
    assert got == [2, 1, 2, 3, 6, 9]
    assert necklace_poly(RingValue.from_int(ZZ, 4), 2).payload == 6
    assert aperiodic_poly(RingValue.from_int(ZZ, 2), 2).payload == 2
    assert aperiodic_poly(RingValue.from_int(ZZ, 4), 2).payload == 12
    # brute-force Mobius-sum oracle over a window
    for r in range(-6, 7):
        for n in range(1, 13):
            assert necklace_poly(RingValue.from_int(ZZ, r), n).payload == brute_M(r, n)


def test_necklace_poly_domain_errors():
    R = parse_ring("ZPoly(x)")
    x = RingValue.parse(R, "1*x^1")
    with pytest.raises(NotBinomial):
        necklace_poly(x, 2)
    with pytest.raises(NotBinomial):
        necklace_poly(RingValue.from_int(Z8, 3), 2)
    # but rational-coefficient polynomials work
    Rq = parse_ring("QPoly(x)")
    xq = RingValue.parse(Rq, "1*x^1")
    assert necklace_poly(xq, 2).format() == "1/2*x^2+-1/2*x^1"


def test_product_formula_for_necklace_counts():
    # M(rs, n) = sum over lcm(i,j) = n of gcd(i,j) M(r,i) M(s,j)
    for r in range(-3, 4):
        for s in range(-3, 4):
            for n in range(1, 13):
                lhs = necklace_poly(RingValue.from_int(ZZ, r * s), n).payload
                rhs = 0
                for i in divisors(n):
                    for j in divisors(n):
                        if math.lcm(i, j) == n:
                            rhs += (
                                math.gcd(i, j)
                                * necklace_poly(RingValue.from_int(ZZ, r), i).payload
                                * necklace_poly(RingValue.from_int(ZZ, s), j).payload
                            )
                assert lhs == rhs
                lhs_s = aperiodic_poly(RingValue.from_int(ZZ, r * s), n).payload
                rhs_s = sum(
                    aperiodic_poly(RingValue.from_int(ZZ, r), i).payload
                    * aperiodic_poly(RingValue.from_int(ZZ, s), j).payload
                    for i in divisors(n)
                    for j in divisors(n)
                    if math.lcm(i, j) == n
                )
                assert lhs_s == rhs_s


def test_ghost_formulas_and_inverses():
    x = cvec(D4, NECKLACE, ZZ, [5, 7, 11])
    assert cyc_ghost(x).payloads() == (5, 5 + 14, 5 + 14 + 44)
    y = cvec(D4, APERIODIC, ZZ, [5, 7, 11])
    assert cyc_ghost(y).payloads() == (5, 12, 23)
    rng = random.Random(5)
    for _ in range(8):
        a = rand_cvec(D12, APERIODIC, ZZ, rng)
        assert cyc_ghost_inv(cyc_ghost(a), APERIODIC) == a
        b = rand_cvec(D12, NECKLACE, QQ, rng)
        assert cyc_ghost_inv(cyc_ghost(b), NECKLACE) == b
    with pytest.raises(NotInImage):
        cyc_ghost_inv(cvec(D2, GHOST, ZZ, [0, 1]), NECKLACE)


def test_ghost_inverse_transports_products():
    # corrected readings: the ghost inverses transport componentwise products
    # to the necklace (with gcd weights) and aperiodic structure constants
    rng = random.Random(6)
    for _ in range(8):
        a = rand_cvec(D12, GHOST, QQ, rng)
        b = rand_cvec(D12, GHOST, QQ, rng)
        prod = a.with_components([u * v for u, v in zip(a.components, b.components)])
        na = cyc_ghost_inv(a, NECKLACE)
        nb = cyc_ghost_inv(b, NECKLACE)
        assert cyc_ghost_inv(prod, NECKLACE) == cyc_nr_mul(na, nb)
    for _ in range(8):
        a = rand_cvec(D12, GHOST, ZZ, rng)
        b = rand_cvec(D12, GHOST, ZZ, rng)
        prod = a.with_components([u * v for u, v in zip(a.components, b.components)])
        assert cyc_ghost_inv(prod, APERIODIC) == cyc_ap_mul(
            cyc_ghost_inv(a, APERIODIC), cyc_ghost_inv(b, APERIODIC)
        )


def test_theta_intertwines_products():
    rng = random.Random(7)
    for _ in range(8):
        x = rand_cvec(D12, NECKLACE, QQ, rng)
        y = rand_cvec(D12, NECKLACE, QQ, rng)
        assert cyc_theta(cyc_nr_mul(x, y)) == cyc_ap_mul(cyc_theta(x), cyc_theta(y))
        assert cyc_theta_inv(cyc_theta(x)) == x
    with pytest.raises(NotInvertibleIndex):
        cyc_theta_inv(cvec(D2, APERIODIC, ZZ, [0, 1]))


def test_verschiebung_formulas():
    x = cvec(D4, NECKLACE, ZZ, [3, 5, 7])
    assert cyc_verschiebung(1, x) == x
    assert cyc_verschiebung(2, x).payloads() == (0, 3, 5)
    y = cvec(D4, APERIODIC, ZZ, [3, 5, 7])
    assert cyc_verschiebung(2, y).payloads() == (0, 6, 10)
    w = cvec(D4, WITT, ZZ, [3, 5, 7])
    assert cyc_verschiebung(2, w).payloads() == (0, 3, 5)
    # ghost behaviour: n -> r * (value at n/r), zero off multiples
    rng = random.Random(8)
    for flavor, ghost in ((WITT, cyc_witt_ghost), (NECKLACE, cyc_ghost), (APERIODIC, cyc_ghost)):
        for r in (2, 3):
            a = rand_cvec(D12, flavor, ZZ, rng)
            gv = ghost(cyc_verschiebung(r, a)).payloads()
            g = ghost(a).payloads()
            for pos, n in enumerate(D12):
                want = r * g[D12.position(n // r)] if n % r == 0 else 0
                assert gv[pos] == want


def test_frobenius_ghost_shift():
    rng = random.Random(9)
    for flavor, ghost in ((WITT, cyc_witt_ghost), (NECKLACE, cyc_ghost), (APERIODIC, cyc_ghost)):
        for r in (1, 2, 3):
            a = rand_cvec(D12, flavor, ZZ, rng)
            f = cyc_frobenius(r, a)
            assert f.truncation.members == tuple(n for n in D12 if r * n in D12)
            gf = ghost(f).payloads()
            g = ghost(a).payloads()
            for pos, n in enumerate(f.truncation):
                assert gf[pos] == g[D12.position(r * n)]
    with pytest.raises(TruncationTooSmall):
        cyc_frobenius(5, rand_cvec(D12, WITT, ZZ, rng))


def test_frobenius_frozen_universal_div4():
    a1, a2, a4 = 3, -2, 5
    f = cyc_frobenius(2, cvec(D4, WITT, ZZ, [a1, a2, a4]))
    assert f.truncation.members == (1, 2)
    assert f.payloads() == (
        a1 * a1 + 2 * a2,
        2 * a4 - a2 * a2 - 2 * a1 * a1 * a2,
    )


def test_frobenius_defined_over_residue_rings():
    rng = random.Random(10)
    for flavor in (WITT, NECKLACE, APERIODIC):
        for _ in range(5):
            xs = [rng.randint(0, 7) for _ in D12]
            lifted = cyc_frobenius(2, cvec(D12, flavor, ZZ, xs))
            direct = cyc_frobenius(2, cvec(D12, flavor, Z8, xs))
            assert direct.payloads() == tuple(p % 8 for p in lifted.payloads())


def test_frobenius_multiplicative_on_witt_and_necklace():
    rng = random.Random(11)
    for _ in range(5):
        a = rand_cvec(D12, WITT, ZZ, rng)
        b = rand_cvec(D12, WITT, ZZ, rng)
        assert cyc_frobenius(2, cyc_witt_op("prod", a, b)) == cyc_witt_op(
            "prod", cyc_frobenius(2, a), cyc_frobenius(2, b)
        )
        x = rand_cvec(D12, NECKLACE, ZZ, rng)
        y = rand_cvec(D12, NECKLACE, ZZ, rng)
        assert cyc_frobenius(3, cyc_nr_mul(x, y)) == cyc_nr_mul(
            cyc_frobenius(3, x), cyc_frobenius(3, y)
        )


# --- cross-model agreement with the group-indexed functors ------------------


def group_and_trunc(N):
    return build_group(f"C{N}"), TruncationSet.div(N)


def test_cyclic_matches_group_model_ops():
    rng = random.Random(12)
    for N in (2, 4, 6, 12):
        G, T = group_and_trunc(N)
        indices = [c.index for c in subgroup_classes(G).classes]
        assert indices == list(T.members)
        for _ in range(4):
            xs = [rng.randint(-9, 9) for _ in T]
            ys = [rng.randint(-9, 9) for _ in T]
            gw = IndexedVector.from_ints(G, WITT, ZZ, xs)
            hw = IndexedVector.from_ints(G, WITT, ZZ, ys)
            cw = cvec(T, WITT, ZZ, xs)
            dw = cvec(T, WITT, ZZ, ys)
            assert wg_ghost(gw).payloads() == cyc_witt_ghost(cw).payloads()
            for op in ("sum", "prod"):
                assert wg_op(op, gw, hw).payloads() == cyc_witt_op(op, cw, dw).payloads()
            assert wg_op("neg", gw).payloads() == cyc_witt_op("neg", cw).payloads()
            gn = IndexedVector.from_ints(G, NECKLACE, ZZ, xs)
            hn = IndexedVector.from_ints(G, NECKLACE, ZZ, ys)
            cn = cvec(T, NECKLACE, ZZ, xs)
            dn = cvec(T, NECKLACE, ZZ, ys)
            assert nr_op("prod", gn, hn).payloads() == cyc_nr_mul(cn, dn).payloads()
            ga = IndexedVector.from_ints(G, APERIODIC, ZZ, xs)
            ha = IndexedVector.from_ints(G, APERIODIC, ZZ, ys)
            ca = cvec(T, APERIODIC, ZZ, xs)
            da = cvec(T, APERIODIC, ZZ, ys)
            assert ap_op("prod", ga, ha).payloads() == cyc_ap_mul(ca, da).payloads()


def test_cyclic_matches_group_model_exponentials():
    for N in (2, 4, 6, 12):
        G, T = group_and_trunc(N)
        for r in (-3, 0, 2, 5):
            got = exp_M(G, RingValue.from_int(ZZ, r)).payloads()
            want = tuple(necklace_poly(RingValue.from_int(ZZ, r), n).payload for n in T)
            assert got == want


def test_cyclic_matches_group_model_operators():
    rng = random.Random(13)
    G, T = group_and_trunc(6)
    ct = subgroup_classes(G)
    for ci in range(1, len(ct)):
        r = ct.classes[ci].index
        U = subgroup_group(G, ci)
        Tu = TruncationSet([n for n in T if r * n in T])
        assert [c.index for c in subgroup_classes(U).classes] == list(Tu.members)
        for _ in range(4):
            # verschiebung: inject the subgroup vector at the read positions
            alphas = [rng.randint(-9, 9) for _ in Tu]
            au = IndexedVector.from_ints(U, WITT, ZZ, alphas)
            # junk at positions the dilation never reads must not matter
            xs = [rng.randint(-99, 99) for _ in T]
            for pos, n in enumerate(Tu):
                xs[T.position(n)] = alphas[pos]
            cx = cvec(T, WITT, ZZ, xs)
            assert witt_v(G, ci, au).payloads() == cyc_verschiebung(r, cx).payloads()
            # frobenius: restrict the parent vector
            ys = [rng.randint(-9, 9) for _ in T]
            ag = IndexedVector.from_ints(G, WITT, ZZ, ys)
            cg = cvec(T, WITT, ZZ, ys)
            assert witt_f(G, ci, ag).payloads() == cyc_frobenius(r, cg).payloads()
