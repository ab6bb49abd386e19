"""
The q-deformation and Artin-Hasse curves
========================================

Replacing the additive formal group by F_q = X + Y - qXY deforms the
whole Witt picture: ghost components pick up q-powers, the universal
polynomials become numerical polynomials in q, and q = 1 recovers the
classical theory on the nose.
"""
from fractions import Fraction

from wittburnside import CyclicVector, TruncationSet, WITT, NECKLACE
from wittburnside import QContext, q_universal, q_witt_op, q_witt_ghost
from wittburnside import p_poly, q_necklace_poly, q_nr_mul
from wittburnside import artin_hasse, artin_hasse_inv
from wittburnside.rings import ZZ, QQ, RingValue

T2 = TruncationSet.div(2)
uni = q_universal(T2, "sum")
print("q-deformed sum on div(2):", [p.format() for p in uni.polys])
# the second component reads a_2 + b_2 - q a_1 b_1: the classical
# correction term acquires the deformation weight

# the product weights P_{n,i,j}(q) are numerical: rational coefficients,
# integer values at every integer; at q = 1 they reduce to 0/1
print("\nP_{2,1,1} =", p_poly(2, 1, 1).format(), " P(1) =", p_poly(2, 1, 1)(1))
print("P_{6,2,3} =", p_poly(6, 2, 3).format())

# ghost components of a q-Witt vector over div(6) at q = 2
T6 = TruncationSet.div(6)
ctx = QContext(2)
x = CyclicVector.from_ints(T6, WITT, ZZ, [2, -1, 3, 0])
print("\nq=2 ghost of", x.payloads(), "->", q_witt_ghost(ctx, x).payloads())

# the q-necklace count M^q is not multiplicative -- the corrected law
# says M^q(qxy) = q M^q(x) M^q(y) in the deformed ring
def mq(val):
    return CyclicVector(T2, NECKLACE, QQ,
                        [q_necklace_poly(ctx, RingValue(QQ, Fraction(val)), n) for n in T2])

m2, m3, m6, m12 = mq(2), mq(3), mq(6), mq(12)
prod = q_nr_mul(ctx, m2, m3)
print("\nM^2(6) components:", m6.payloads())
print("M^2(2) * M^2(3)  :", prod.payloads(), " (30 != 66: not multiplicative)")
print("M^2(2*2*3)       :", m12.payloads(), " = 2 * the product above")

# Artin-Hasse: Witt vectors are exactly the curves 1 + ... in the
# deformed formal group; the first coefficients follow closed displays
T8 = TruncationSet(range(1, 9))
a = CyclicVector.from_ints(T8, WITT, ZZ, [1, 2, -1, 0, 3, 1, 0, -2])
c = artin_hasse(ctx, a)
print("\ncurve coefficients t^1..t^4:", [c.coefficient(k).payload for k in range(1, 5)])
x1, x2, x3, x4 = (a.components[k].payload for k in range(4))
print("displays x3 - q x1 x2 =", x3 - 2 * x1 * x2,
      " and x4 - q x1 x3 =", x4 - 2 * x1 * x3)
print("round trip recovers:", artin_hasse_inv(ctx, c, T8).payloads())
