"""
Witt vector arithmetic through universal polynomials
====================================================

Addition and multiplication of group-indexed Witt vectors are given by
integer polynomials derived once per group by solving the ghost
equations symbolically.  Evaluating those polynomials in any commutative
ring gives the functorial ring structure.
"""
from wittburnside import build_group, derive_universal
from wittburnside import IndexedVector, wg_op, wg_ghost, WITT
from wittburnside.rings import ZZ, parse_ring

C2 = build_group("C2")

# the classical second components: s_2 = a_2 + b_2 - a_1 b_1 appears here
# in class coordinates (a_G is the top class, a_1 the trivial one)
for op in ("sum", "prod", "neg"):
    uni = derive_universal(C2, op)
    print(f"C2 {op}: vars={uni.vars}")
    for label, poly in zip(("G", "1"), uni.polys):
        print(f"   component {label}: {poly.format()}")

# arithmetic over Z: the ghost map turns both operations componentwise
a = IndexedVector.from_ints(C2, WITT, ZZ, [3, -2])
b = IndexedVector.from_ints(C2, WITT, ZZ, [-1, 4])
s = wg_op("sum", a, b)
p = wg_op("prod", a, b)
print("\na =", a.payloads(), " b =", b.payloads())
print("a + b =", s.payloads(), "  ghost:", wg_ghost(s).payloads())
print("a * b =", p.payloads(), "  ghost:", wg_ghost(p).payloads())
print("ghost(a)*ghost(b) =",
      tuple(u * v for u, v in zip(wg_ghost(a).payloads(), wg_ghost(b).payloads())))

# residue rings work by lifting to Z, evaluating, and reducing: the
# universal polynomials have integer coefficients, so this is well defined
Z4 = parse_ring("Z/4")
am = IndexedVector.from_ints(C2, WITT, Z4, [3, 2])
bm = IndexedVector.from_ints(C2, WITT, Z4, [2, 3])
print("\nover Z/4:", wg_op("prod", am, bm).payloads(), "(lift-evaluate-reduce)")

# bigger groups just mean bigger triangular systems; D4 has 8 classes
D4 = build_group("D4")
uni = derive_universal(D4, "prod")
print("\nD4 product polynomial sizes per class:",
      [len(p.terms) for p in uni.polys])
