"""
Frobenius, Verschiebung, and the cyclic dictionary
==================================================

For a subgroup class U of G, induction and restriction act on the
necklace side; conjugating them with tau yields the Verschiebung v_U
and Frobenius f_U on Witt vectors.  On cyclic groups the whole picture
collapses to truncation sets: subgroup classes become divisors,
Verschiebung becomes index dilation, Frobenius becomes the ghost shift
n -> rn.
"""
from wittburnside import build_group, subgroup_classes, subgroup_group
from wittburnside import IndexedVector, WITT, wg_ghost
from wittburnside import witt_v, witt_f, ghost_nu, ghost_F
from wittburnside import CyclicVector, TruncationSet
from wittburnside import cyc_witt_ghost, cyc_frobenius, cyc_verschiebung
from wittburnside.rings import ZZ

C6 = build_group("C6")
ct = subgroup_classes(C6)
print("C6 classes:", list(ct.labels()), "indices:", [c.index for c in ct.classes])

# class position 1 is the order-3 subgroup (index 2)
ci = 1
U = subgroup_group(C6, ci)
au = IndexedVector.from_ints(U, WITT, ZZ, [2, -1])
v = witt_v(C6, ci, au)
print(f"\nv_U of {au.payloads()} (U of index 2):", v.payloads())
print("its ghost:", wg_ghost(v).payloads())
print("ghost-level nu:", ghost_nu(C6, ci, wg_ghost(au)).payloads())

ag = IndexedVector.from_ints(C6, WITT, ZZ, [2, -1, 3, 0])
f = witt_f(C6, ci, ag)
print(f"\nf_U of {ag.payloads()}:", f.payloads())
print("ghost of the input: ", wg_ghost(ag).payloads())
print("ghost of the output:", wg_ghost(f).payloads(), "(every other entry)")
print("ghost-level F:", ghost_F(C6, ci, wg_ghost(ag)).payloads())

# the same operators on the truncation-set model
T = TruncationSet.div(6)
cx = CyclicVector.from_ints(T, WITT, ZZ, [2, -1, 3, 0])
print("\ncyclic div(6) ghost:", cyc_witt_ghost(cx).payloads())
f2 = cyc_frobenius(2, cx)
print("f_2 lands on div(3):", list(f2.truncation.members), f2.payloads())
v2 = cyc_verschiebung(2, cx)
print("V_2 dilates indices:", v2.payloads())
print("ghost of V_2 x:", cyc_witt_ghost(v2).payloads(),
      "(doubled at even spots, zero at odd)")
